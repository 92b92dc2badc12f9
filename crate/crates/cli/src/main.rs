use std::fs;
use std::io::{self, Read, Write};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use scx::hilbert::{
    coarse_from_fine, evaluate_coarse, fine_e_polynomial, minimal_nonfaces, MultiDegree, StanleyReisnerRing,
};
use scx::properties::{akita_and_root_checks, classify};
use scx::vectors::VectorSet;
use scx::{format, Error, Face, Family, SimplicialComplex};

/// Face vectors, exponential Hilbert series and Dehn-Sommerville checks for
/// simplicial complexes given as facet lists.
#[derive(Parser, Debug)]
#[command(name = "scx", version)]
struct Cli {
    #[command(flatten)]
    output: OutputFlags,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug, Clone, Copy)]
struct OutputFlags {
    /// JSON output (the default for reports)
    #[arg(long, global = true, conflicts_with = "pretty")]
    json: bool,
    /// Human-readable output
    #[arg(long, global = true)]
    pretty: bool,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Dimension, purity, Euler characteristics and minimal non-faces
    Info { input: String },
    /// f-, h- and e-vectors
    Vectors { input: String },
    /// Coarse and fine exponential Hilbert series
    Series {
        input: String,
        /// Include the fine (per-subset) coefficients
        #[arg(long)]
        fine: bool,
        /// Evaluate the coarse series at this t
        #[arg(long, allow_hyphen_values = true)]
        eval: Option<f64>,
    },
    /// Every property verdict, cross-checked
    Check { input: String },
    /// Print a standard complex in facet format
    Make {
        #[arg(value_enum)]
        kind: Kind,
        params: Vec<usize>,
        /// Seed for `random`
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Link of a face
    Link {
        input: String,
        /// Comma-separated vertex labels; empty for the empty face
        #[arg(long)]
        face: String,
    },
    /// Join of two complexes
    Join { left: String, right: String },
    /// Suspension (join with two points)
    Suspend { input: String },
    /// Compare Taylor coefficients of the fine series with graded dimensions
    Oracle {
        input: String,
        #[arg(long, default_value_t = 2)]
        max_entry: u32,
    },
}

#[derive(ValueEnum, Debug, Clone, Copy)]
enum Kind {
    BoundarySimplex,
    FullSimplex,
    Cycle,
    CrossPolytope,
    WhiskeredCycle,
    Random,
}

#[derive(Debug, Clone, Copy, PartialEq)]
enum Style {
    Json,
    Pretty,
    /// Facet text, for commands that produce a complex
    Native,
}

enum Failure {
    Domain(String),
    Usage(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Domain(e.to_string())
    }
}

fn read_input(path: &str) -> Result<SimplicialComplex, Failure> {
    let text = if path == "-" {
        let mut buf = String::new();
        io::stdin()
            .read_to_string(&mut buf)
            .map_err(|e| Failure::Domain(format!("reading standard input: {e}")))?;
        buf
    } else {
        fs::read_to_string(path).map_err(|e| Failure::Domain(format!("reading {path}: {e}")))?
    };
    Ok(format::parse(&text)?)
}

fn strings<T: ToString>(xs: &[T]) -> Vec<String> {
    xs.iter().map(|x| x.to_string()).collect()
}

fn face_json(c: &SimplicialComplex, f: Face) -> Value {
    json!(c.face_labels(f))
}

fn complex_output(c: &SimplicialComplex, style: Style) -> String {
    match style {
        Style::Json => {
            let facets: Vec<Value> = c.facets().iter().map(|f| face_json(c, *f)).collect();
            format!("{}\n", json!({ "void": c.is_void(), "facets": facets }))
        }
        _ => format::write(c),
    }
}

fn fmt_vec<T: ToString>(xs: &[T]) -> String {
    format!("({})", strings(xs).join(", "))
}

fn run(cli: Cli) -> Result<String, Failure> {
    let report_style = if cli.output.pretty { Style::Pretty } else { Style::Json };
    let complex_style = if cli.output.json {
        Style::Json
    } else if cli.output.pretty {
        Style::Pretty
    } else {
        Style::Native
    };

    match cli.command {
        Command::Info { input } => {
            let c = read_input(&input)?;
            let chi = c.euler_characteristics()?;
            let nonfaces = minimal_nonfaces(&c)?;
            let dim = c.dimension()?;
            let pure = c.is_pure()?;
            Ok(match report_style {
                Style::Pretty => format!(
                    "vertices: {}\nfacets: {}\ndimension: {dim}\npure: {pure}\nchi: {}\nchi_topological: {}\nminimal non-faces: {}\n",
                    c.vertex_count(),
                    c.facets().len(),
                    chi.with_empty,
                    chi.topological,
                    nonfaces.iter().map(|f| c.describe_face(*f)).collect::<Vec<_>>().join(" ")
                ),
                _ => format!(
                    "{}\n",
                    json!({
                        "vertices": c.vertex_count().to_string(),
                        "labels": c.labels(),
                        "facets": c.facets().iter().map(|f| face_json(&c, *f)).collect::<Vec<_>>(),
                        "dimension": dim.to_string(),
                        "pure": pure,
                        "chi": chi.with_empty.to_string(),
                        "chi_topological": chi.topological.to_string(),
                        "minimal_nonfaces": nonfaces.iter().map(|f| face_json(&c, *f)).collect::<Vec<_>>(),
                    })
                ),
            })
        }
        Command::Vectors { input } => {
            let c = read_input(&input)?;
            let set = VectorSet::from_f(c.f_vector()?);
            Ok(match report_style {
                Style::Pretty => format!(
                    "d = {}\nf = {}\nh = {}\ne = {}\n",
                    set.d,
                    fmt_vec(set.f.entries()),
                    fmt_vec(set.h.entries()),
                    fmt_vec(set.e.entries())
                ),
                _ => format!("{}\n", serde_json::to_string(&set).expect("serializable")),
            })
        }
        Command::Series { input, fine, eval } => {
            let c = read_input(&input)?;
            let p = fine_e_polynomial(&c)?;
            let e = coarse_from_fine(&p);
            if report_style == Style::Pretty {
                let mut out = format!("e = {}\n", fmt_vec(e.entries()));
                if fine {
                    for (tau, coeff) in p.terms() {
                        out.push_str(&format!("{} {coeff}\n", c.describe_face(tau)));
                    }
                }
                if let Some(t) = eval {
                    out.push_str(&format!("E({t}) = {}\n", evaluate_coarse(&e, t)));
                }
                return Ok(out);
            }
            let mut obj = json!({ "e": e });
            if fine {
                let terms: Vec<Value> = p
                    .terms()
                    .map(|(tau, coeff)| json!({ "subset": c.face_labels(tau), "coeff": coeff.to_string() }))
                    .collect();
                obj["fine"] = json!(terms);
            }
            if let Some(t) = eval {
                obj["eval"] = json!({ "t": t, "value": evaluate_coarse(&e, t) });
            }
            Ok(format!("{obj}\n"))
        }
        Command::Check { input } => {
            let c = read_input(&input)?;
            let report = classify(&c)?;
            let akita = akita_and_root_checks(&c)?;
            let set = VectorSet::from_f(c.f_vector()?);
            Ok(match report_style {
                Style::Pretty => {
                    let mut out = format!(
                        "property_e: {}\nweak_property_e: {}\nclassical_ds: {}\ngeneral_ds: {}\neulerian: {}\neulerian_sphere: {}\npure: {}\n",
                        report.property_e,
                        report.weak_property_e,
                        report.classical_ds,
                        report.general_ds,
                        report.eulerian,
                        report.eulerian_sphere,
                        report.pure
                    );
                    if let Some(w) = &report.witness {
                        out.push_str(&format!("witness: {w}\n"));
                    }
                    out.push_str(&format!(
                        "f = {}\nh = {}\ne = {}\ne(1/2) = {}\n",
                        fmt_vec(set.f.entries()),
                        fmt_vec(set.h.entries()),
                        fmt_vec(set.e.entries()),
                        akita.e_at_half
                    ));
                    out
                }
                _ => {
                    let mut obj = serde_json::to_value(&report).expect("serializable");
                    let vectors = serde_json::to_value(&set).expect("serializable");
                    for key in ["d", "f", "h", "e"] {
                        obj[key] = vectors[key].clone();
                    }
                    obj["akita"] = serde_json::to_value(&akita).expect("serializable");
                    format!("{obj}\n")
                }
            })
        }
        Command::Make { kind, params, seed } => {
            let need = |k: usize| -> Result<(), Failure> {
                if params.len() == k {
                    Ok(())
                } else {
                    Err(Failure::Usage(format!(
                        "{kind:?} takes {k} parameter(s), got {}",
                        params.len()
                    )))
                }
            };
            let c = match kind {
                Kind::Random => {
                    need(3)?;
                    scx::random_complex(seed, params[0], params[1], params[2])?
                }
                Kind::WhiskeredCycle => {
                    need(2)?;
                    scx::make(Family::WhiskeredCycle(params[0], params[1]))?
                }
                single => {
                    need(1)?;
                    let p = params[0];
                    scx::make(match single {
                        Kind::BoundarySimplex => Family::BoundarySimplex(p),
                        Kind::FullSimplex => Family::FullSimplex(p),
                        Kind::Cycle => Family::Cycle(p),
                        Kind::CrossPolytope => Family::CrossPolytope(p),
                        Kind::WhiskeredCycle | Kind::Random => unreachable!(),
                    })?
                }
            };
            Ok(complex_output(&c, complex_style))
        }
        Command::Link { input, face } => {
            let c = read_input(&input)?;
            let labels: Vec<&str> = if face.is_empty() {
                Vec::new()
            } else {
                face.split(',').collect()
            };
            let sigma = c.face_from_labels(&labels)?;
            Ok(complex_output(&c.link(sigma)?, complex_style))
        }
        Command::Join { left, right } => {
            if left == "-" && right == "-" {
                return Err(Failure::Usage("only one input may be standard input".into()));
            }
            let j = scx::join(&read_input(&left)?, &read_input(&right)?)?;
            Ok(complex_output(&j, complex_style))
        }
        Command::Suspend { input } => Ok(complex_output(&scx::suspension(&read_input(&input)?)?, complex_style)),
        Command::Oracle { input, max_entry } => {
            let c = read_input(&input)?;
            let ring = StanleyReisnerRing::new(&c)?;
            let p = fine_e_polynomial(&c)?;
            let mut checked = 0u64;
            let mut mismatches = Vec::new();
            for a in MultiDegree::all_bounded(c.vertex_count(), max_entry) {
                checked += 1;
                let taylor = p.taylor_coefficient(&a)?;
                let dim = ring.graded_dimension(&a)?;
                if taylor != scx::BigInt::from(dim) {
                    mismatches.push(a);
                }
            }
            if !mismatches.is_empty() {
                return Err(Failure::Domain(format!(
                    "{} of {checked} degrees disagree, first {:?}",
                    mismatches.len(),
                    mismatches[0].exponents()
                )));
            }
            Ok(match report_style {
                Style::Pretty => format!("ok: {checked} degrees checked\n"),
                _ => format!(
                    "{}\n",
                    json!({ "ok": true, "checked": checked.to_string(), "mismatches": "0", "max_entry": max_entry.to_string() })
                ),
            })
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    match run(cli) {
        Ok(out) => {
            let _ = io::stdout().write_all(out.as_bytes());
            ExitCode::SUCCESS
        }
        Err(Failure::Domain(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("usage error: {msg}");
            ExitCode::from(2)
        }
    }
}
