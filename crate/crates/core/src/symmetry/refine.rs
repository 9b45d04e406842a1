//! Colour refinement on flag graphs.
//!
//! Flags start coloured by their sequence of rank-1 section sizes
//! `(p_1, ..., p_{n-1})` and are repeatedly recoloured by the colours of
//! their `i`-neighbours until the partition stops splitting. Any
//! isomorphism of flag graphs preserves the final colours, so only flags of
//! matching colour need to be tried as images of a base flag.

use crate::flags::FlagGraph;

/// Stable colours for the flags of each graph, on a shared palette.
pub fn refine(graphs: &[&FlagGraph]) -> Vec<Vec<u32>> {
    let n = graphs.first().map_or(0, |g| g.exchange_ranks());
    debug_assert!(graphs.iter().all(|g| g.exchange_ranks() == n));

    let initial: Vec<Vec<Vec<u32>>> = graphs
        .iter()
        .map(|g| (0..g.len()).map(|t| (1..n).map(|i| g.section_size(t, i) as u32).collect()).collect())
        .collect();
    let (mut colors, mut classes) = relabel(initial);

    loop {
        let signatures: Vec<Vec<Vec<u32>>> = graphs
            .iter()
            .zip(&colors)
            .map(|(g, c)| {
                (0..g.len())
                    .map(|t| {
                        let mut sig = Vec::with_capacity(n + 1);
                        sig.push(c[t]);
                        sig.extend((0..n).map(|i| c[g.adjacent(t, i)]));
                        sig
                    })
                    .collect()
            })
            .collect();
        let (next, next_classes) = relabel(signatures);
        if next_classes == classes {
            return colors;
        }
        colors = next;
        classes = next_classes;
    }
}

/// Replaces signatures by their rank among all distinct signatures.
fn relabel(signatures: Vec<Vec<Vec<u32>>>) -> (Vec<Vec<u32>>, usize) {
    let mut distinct: Vec<&Vec<u32>> = signatures.iter().flatten().collect();
    distinct.sort_unstable();
    distinct.dedup();
    let colors = signatures
        .iter()
        .map(|sigs| sigs.iter().map(|s| distinct.binary_search(&s).unwrap() as u32).collect())
        .collect();
    (colors, distinct.len())
}
