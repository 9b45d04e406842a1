use std::collections::BTreeMap;
use std::io::{Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use polyforge::constructions::{
    find_small_asymmetric_fixture, hypercube, min_facet, order_complex, polygon, power_2k, simplex,
    stellar_subdivide_facet, torus_map, PowerMode, PowerPolytope, TorusFamily, TorusMapSpec, DEFAULT_THRESHOLD,
};
use polyforge::io::{load_polytope, serialize, SummaryDocument};
use polyforge::properties::vertex_set_complex;
use polyforge::verify::{verify, Theorem};
use polyforge::{analyze, isomorphism, FaceLattice, PolytopeError};

const EXIT_CLAIM_FAILED: u8 = 1;
const EXIT_BAD_PARAMS: u8 = 2;
const EXIT_INVALID: u8 = 3;
const EXIT_RESOURCE: u8 = 4;

#[derive(Parser)]
#[command(name = "polyforge", version, about = "Build and analyze abstract polytopes")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Write a seed polytope document to standard output.
    Generate {
        kind: Kind,
        #[arg(long)]
        s: Option<usize>,
        #[arg(long)]
        d: Option<usize>,
        #[arg(long)]
        p: Option<usize>,
        #[arg(long, default_value_t = 1)]
        seed: u64,
        #[arg(long, default_value_t = 10)]
        max_vertices: usize,
    },
    /// Apply a construction to a document (file or standard input).
    Derive {
        #[command(subcommand)]
        op: DeriveOp,
    },
    /// Report invariants, symmetry and orbit counts.
    Analyze {
        input: Option<PathBuf>,
        #[arg(long)]
        json: bool,
    },
    /// Decide whether two documents describe isomorphic polytopes.
    Compare {
        a: PathBuf,
        b: PathBuf,
        #[arg(long)]
        witness: bool,
    },
    /// Check the claims of one theorem on concrete instances.
    Verify { theorem: Theorem },
}

#[derive(Subcommand)]
enum DeriveOp {
    OrderComplex {
        input: Option<PathBuf>,
    },
    Subdivide {
        /// A facet id from the input document, or `min`.
        #[arg(long)]
        facet: String,
        input: Option<PathBuf>,
    },
    Power2k {
        #[arg(long, value_enum)]
        mode: Mode,
        #[arg(long)]
        threshold: Option<usize>,
        input: Option<PathBuf>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Kind {
    Simplex,
    Polygon,
    Hypercube,
    Torus44,
    Torus36,
    AsymmetricFixture,
}

#[derive(Clone, Copy, ValueEnum)]
enum Mode {
    Explicit,
    Virtual,
}

struct Failure {
    code: u8,
    message: String,
}

impl From<PolytopeError> for Failure {
    fn from(e: PolytopeError) -> Self {
        let code = match e {
            PolytopeError::BadParameter(_) => EXIT_BAD_PARAMS,
            PolytopeError::TooLargeForExplicit { .. }
            | PolytopeError::CountOverflow
            | PolytopeError::SearchExhausted { .. } => EXIT_RESOURCE,
            _ => EXIT_INVALID,
        };
        Failure { code, message: e.to_string() }
    }
}

fn bad_params(message: impl Into<String>) -> Failure {
    Failure { code: EXIT_BAD_PARAMS, message: message.into() }
}

fn read_input(path: Option<&PathBuf>) -> Result<(polyforge::io::PolytopeDocument, FaceLattice), Failure> {
    let mut text = String::new();
    let read = match path {
        Some(p) => std::fs::File::open(p).and_then(|mut f| f.read_to_string(&mut text)),
        None => std::io::stdin().read_to_string(&mut text),
    };
    read.map_err(|e| Failure { code: EXIT_INVALID, message: format!("cannot read input: {e}") })?;
    Ok(load_polytope(&text)?)
}

fn required(value: Option<usize>, flag: &str, kind: &str) -> Result<usize, Failure> {
    value.ok_or_else(|| bad_params(format!("--{flag} is required for {kind}")))
}

fn generate(
    kind: Kind,
    s: Option<usize>,
    d: Option<usize>,
    p: Option<usize>,
    seed: u64,
    max_vertices: usize,
) -> Result<String, Failure> {
    let mut meta = BTreeMap::new();
    let lattice = match kind {
        Kind::Simplex => {
            let d = required(d, "d", "simplex")?;
            meta.insert("name".into(), json!("simplex"));
            meta.insert("d".into(), json!(d));
            simplex(d)?
        }
        Kind::Polygon => {
            let p = required(p, "p", "polygon")?;
            meta.insert("name".into(), json!("polygon"));
            meta.insert("p".into(), json!(p));
            polygon(p)?
        }
        Kind::Hypercube => {
            let d = required(d, "d", "hypercube")?;
            meta.insert("name".into(), json!("hypercube"));
            meta.insert("d".into(), json!(d));
            hypercube(d)?
        }
        Kind::Torus44 | Kind::Torus36 => {
            let (family, name) = match kind {
                Kind::Torus44 => (TorusFamily::Square, "torus44"),
                _ => (TorusFamily::Triangular, "torus36"),
            };
            let s = required(s, "s", name)?;
            meta.insert("name".into(), json!(name));
            meta.insert("s".into(), json!(s));
            torus_map(TorusMapSpec { family, s })?
        }
        Kind::AsymmetricFixture => {
            let k = find_small_asymmetric_fixture(seed, max_vertices)?;
            meta.insert("name".into(), json!("asymmetric-fixture"));
            meta.insert("seed".into(), json!(seed));
            meta.insert("max_vertices".into(), json!(max_vertices));
            k.to_lattice()?
        }
    };
    Ok(serialize(&lattice, meta))
}

fn threshold(flag: Option<usize>) -> Result<usize, Failure> {
    if let Some(t) = flag {
        return Ok(t);
    }
    match std::env::var("POLYFORGE_THRESHOLD") {
        Ok(raw) => {
            raw.trim().parse().map_err(|_| bad_params(format!("POLYFORGE_THRESHOLD must be an integer, got {raw:?}")))
        }
        Err(_) => Ok(DEFAULT_THRESHOLD),
    }
}

fn operation(name: &str) -> BTreeMap<String, Value> {
    BTreeMap::from([("operation".to_string(), json!(name))])
}

fn derive(op: DeriveOp) -> Result<String, Failure> {
    match op {
        DeriveOp::OrderComplex { input } => {
            let (_, lattice) = read_input(input.as_ref())?;
            Ok(serialize(&order_complex(&lattice)?, operation("order-complex")))
        }
        DeriveOp::Subdivide { facet, input } => {
            let (doc, lattice) = read_input(input.as_ref())?;
            let target = if facet == "min" {
                if lattice.rank() < 1 {
                    return Err(bad_params("subdivide needs rank >= 1"));
                }
                min_facet(&lattice)
            } else {
                let id: u64 = facet
                    .parse()
                    .map_err(|_| bad_params(format!("--facet must be a face id or `min`, got {facet:?}")))?;
                *doc.canonical_ids()
                    .get(&id)
                    .ok_or_else(|| bad_params(format!("--facet {id} is not a face of the input")))?
            };
            Ok(serialize(&stellar_subdivide_facet(&lattice, target)?, operation("subdivide")))
        }
        DeriveOp::Power2k { mode, threshold: flag, input } => {
            let threshold = threshold(flag)?;
            let (_, lattice) = read_input(input.as_ref())?;
            let k = vertex_set_complex(&lattice).ok_or(PolytopeError::NotVertexDescribable)?;
            let mode = match mode {
                Mode::Explicit => PowerMode::Explicit { threshold },
                Mode::Virtual => PowerMode::Virtual,
            };
            Ok(match power_2k(&k, mode)? {
                PowerPolytope::Explicit(p) => serialize(&p.lattice, operation("power2k")),
                PowerPolytope::Virtual { counts, .. } => SummaryDocument::new(&counts, operation("power2k")).to_text(),
            })
        }
    }
}

fn compare(a: &PathBuf, b: &PathBuf, witness: bool) -> Result<(String, bool), Failure> {
    let (_, la) = read_input(Some(a))?;
    let (_, lb) = read_input(Some(b))?;
    let Some(map) = isomorphism(&la, &lb)? else {
        return Ok(("isomorphic: no\n".into(), false));
    };
    let mut out = String::from("isomorphic: yes\n");
    if witness {
        for (f, image) in la.faces().zip(&map) {
            out.push_str(&format!("{f} -> {image}\n"));
        }
    }
    Ok((out, true))
}

fn run(cli: Cli) -> Result<(String, u8), Failure> {
    match cli.command {
        Command::Generate { kind, s, d, p, seed, max_vertices } => {
            Ok((generate(kind, s, d, p, seed, max_vertices)?, 0))
        }
        Command::Derive { op } => Ok((derive(op)?, 0)),
        Command::Analyze { input, json } => {
            let (_, lattice) = read_input(input.as_ref())?;
            let report = analyze(&lattice)?;
            Ok((if json { report.to_json() } else { report.to_string() }, 0))
        }
        Command::Compare { a, b, witness } => {
            let (out, same) = compare(&a, &b, witness)?;
            Ok((out, if same { 0 } else { EXIT_CLAIM_FAILED }))
        }
        Command::Verify { theorem } => {
            let claims = verify(theorem)?;
            let mut out = String::new();
            for c in &claims {
                out.push_str(&format!("{c}\n"));
            }
            let ok = claims.iter().all(|c| c.pass);
            Ok((out, if ok { 0 } else { EXIT_CLAIM_FAILED }))
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok((out, code)) => {
            let mut stdout = std::io::stdout().lock();
            if stdout.write_all(out.as_bytes()).and_then(|_| stdout.flush()).is_err() {
                return ExitCode::FAILURE;
            }
            ExitCode::from(code)
        }
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}
