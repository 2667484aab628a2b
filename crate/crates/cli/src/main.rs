mod input;
mod verify;

use std::process::ExitCode;

use anyhow::{bail, Result};
use clap::{Parser, Subcommand, ValueEnum};
use matroidal::invariants::{GraphInvariants, InvariantReport, MatroidInvariants};
use matroidal::logconcave;
use matroidal::matroid::Matroid;
use matroidal::poly::UnivarPoly;
use matroidal::spec::MatroidSpec;
use matroidal::tutte::{Strategy, TutteEngine};
use matroidal::zonotopal::{self, SpaceKind, ZonotopalBudget};
use serde_json::{json, Value};

use input::Source;

const BUDGET_VAR: &str = "MATROIDAL_NODE_BUDGET";

#[derive(Parser, Debug)]
#[command(
    name = "matroidal",
    version,
    about = "Exact matroid and graph polynomials"
)]
struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Json, global = true)]
    format: Format,

    /// Worker threads for parallel sections (default: all cores).
    #[arg(long, global = true)]
    threads: Option<usize>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Pretty,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum AlgorithmArg {
    Auto,
    SubsetSum,
    DelCon,
    Activities,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum SpaceArg {
    Central,
    Internal,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Tutte polynomial T(x, y).
    Tutte {
        #[command(flatten)]
        source: Source,
        #[arg(long, value_enum, default_value_t = AlgorithmArg::Auto)]
        algorithm: AlgorithmArg,
    },
    /// Characteristic polynomial, and its reduced form when defined.
    Charpoly {
        #[command(flatten)]
        source: Source,
    },
    /// f-polynomial and f-vector (independent sets by size).
    Fvec {
        #[command(flatten)]
        source: Source,
    },
    /// h-polynomial and h-vector.
    Hvec {
        #[command(flatten)]
        source: Source,
    },
    /// Chromatic polynomial of a graph.
    Chromatic {
        #[command(flatten)]
        source: Source,
    },
    /// Nowhere-zero flow polynomial of a graph.
    Flow {
        #[command(flatten)]
        source: Source,
    },
    /// Critical-configuration polynomial of a connected graph.
    Critical {
        #[command(flatten)]
        source: Source,
    },
    /// All-terminal reliability polynomial of a connected graph.
    Reliability {
        #[command(flatten)]
        source: Source,
    },
    /// Dual matroid.
    Dual {
        #[command(flatten)]
        source: Source,
        /// For vector input, return a vector realization.
        #[arg(long)]
        realize: bool,
    },
    /// Free extension.
    Extend {
        #[command(flatten)]
        source: Source,
        /// For vector input, append an explicit generic vector.
        #[arg(long)]
        realize: bool,
    },
    /// Free coextension.
    Coextend {
        #[command(flatten)]
        source: Source,
    },
    /// k-fold thickening.
    Thicken {
        #[command(flatten)]
        source: Source,
        #[arg(long)]
        k: usize,
    },
    /// Log-concavity report for a sequence, or for a matroid's f- and h-vectors.
    Logcheck {
        #[command(flatten)]
        source: Source,
        /// Comma-separated non-negative integers.
        #[arg(long)]
        seq: Option<String>,
        /// Also analyze the coefficients of a(q+1).
        #[arg(long)]
        shift: bool,
    },
    /// Smallest thickening whose h-vector is log-concave.
    ThickenSearch {
        #[command(flatten)]
        source: Source,
        #[arg(long, default_value_t = 10_000)]
        kmax: u64,
        /// Include the report for every k tried.
        #[arg(long)]
        trace: bool,
    },
    /// Central or internal P-space of a vector configuration.
    Zonotopal {
        #[command(flatten)]
        source: Source,
        #[arg(long, value_enum, default_value_t = SpaceArg::Central)]
        space: SpaceArg,
    },
    /// Run the identity suites on one matroid or on the builtin corpus.
    Verify {
        #[command(flatten)]
        source: Source,
        #[arg(long, value_parser = ["builtin"])]
        corpus: Option<String>,
    },
}

/// A computed result that contradicts an identity the library checks.
#[derive(Debug)]
struct VerificationFailed(Value);

impl std::fmt::Display for VerificationFailed {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "verification failed")
    }
}

impl std::error::Error for VerificationFailed {}

struct Output {
    json: Value,
    text: String,
}

fn engine() -> Result<TutteEngine> {
    match std::env::var(BUDGET_VAR) {
        Ok(v) => match v.trim().parse() {
            Ok(n) => Ok(TutteEngine::with_budget(n)),
            Err(_) => bail!("{BUDGET_VAR} must be a non-negative integer, got {v:?}"),
        },
        Err(_) => Ok(TutteEngine::default()),
    }
}

fn strings(v: &[num_bigint::BigInt]) -> Vec<String> {
    v.iter().map(ToString::to_string).collect()
}

fn poly_output(name: &str, var: &str, poly: &UnivarPoly) -> Output {
    let pretty = poly.pretty(var);
    Output {
        json: json!({ "name": name, "coeffs_ascending": poly.to_strings(), "pretty": pretty }),
        text: format!("{name}({var}) = {pretty}"),
    }
}

fn report_output(r: &InvariantReport) -> Output {
    let mut out = poly_output(r.name, r.variable, &r.poly);
    out.json["summary"] = json!(r.summary);
    if let Some(f) = &r.factored {
        out.json["factored"] = json!(f);
        out.text.push_str(&format!("\n  = {f}"));
    }
    out
}

fn matroid_output(m: &Matroid, spec: MatroidSpec) -> Output {
    let text = format!(
        "matroid on {} elements of rank {}\n{}",
        m.len(),
        m.rank(),
        spec.to_json()
    );
    Output {
        json: json!({ "n": m.len(), "r": m.rank(), "matroid": spec }),
        text,
    }
}

fn run(cmd: Command) -> Result<Output> {
    let budget = ZonotopalBudget::default();
    Ok(match cmd {
        Command::Tutte { source, algorithm } => {
            let m = source.matroid()?;
            let strategy = match algorithm {
                AlgorithmArg::Auto => Strategy::Auto,
                AlgorithmArg::SubsetSum => Strategy::SubsetSum,
                AlgorithmArg::DelCon => Strategy::DelCon,
                AlgorithmArg::Activities => Strategy::Activities,
            };
            let t = engine()?.run(&m, strategy)?;
            let pretty = t.polynomial.pretty();
            Output {
                json: json!({
                    "name": "tutte",
                    "coeffs": t.polynomial.to_strings(),
                    "pretty": pretty,
                    "algorithm": t.algorithm,
                    "stats": t.stats,
                    "n": m.len(),
                    "r": m.rank(),
                }),
                text: format!("T(x, y) = {pretty}"),
            }
        }
        Command::Charpoly { source } => {
            let inv = MatroidInvariants::with_engine(&source.matroid()?, &engine()?)?;
            let mut out = poly_output("charpoly", "q", &inv.characteristic());
            if let Ok(reduced) = inv.reduced_characteristic() {
                out.text
                    .push_str(&format!("\nreduced(q) = {}", reduced.pretty("q")));
                out.json["reduced_coeffs_ascending"] = json!(reduced.to_strings());
                out.json["reduced_pretty"] = json!(reduced.pretty("q"));
            }
            out
        }
        Command::Fvec { source } => {
            let inv = MatroidInvariants::with_engine(&source.matroid()?, &engine()?)?;
            let mut out = poly_output("fvec", "q", &inv.f_polynomial());
            out.json["f_vector"] = json!(strings(&inv.f_vector()));
            out
        }
        Command::Hvec { source } => {
            let inv = MatroidInvariants::with_engine(&source.matroid()?, &engine()?)?;
            let mut out = poly_output("hvec", "q", &inv.h_polynomial()?);
            out.json["h_vector"] = json!(strings(&inv.h_vector()?));
            out
        }
        Command::Chromatic { source } => {
            report_output(&GraphInvariants::with_engine(&source.graph()?, &engine()?)?.chromatic())
        }
        Command::Flow { source } => {
            report_output(&GraphInvariants::with_engine(&source.graph()?, &engine()?)?.flow())
        }
        Command::Critical { source } => report_output(
            &GraphInvariants::with_engine(&source.graph()?, &engine()?)?.critical_config()?,
        ),
        Command::Reliability { source } => report_output(
            &GraphInvariants::with_engine(&source.graph()?, &engine()?)?.reliability()?,
        ),
        Command::Dual { source, realize } => {
            if realize {
                let xd = source.vectors()?.dual_realization()?;
                matroid_output(
                    &Matroid::from_vectors(xd.clone())?,
                    MatroidSpec::from_vectors(&xd),
                )
            } else {
                let m = source.matroid()?.dual();
                matroid_output(&m, MatroidSpec::describe(&m))
            }
        }
        Command::Extend { source, realize } => {
            if realize {
                let xe = source.vectors()?.realize_free_extension()?;
                matroid_output(
                    &Matroid::from_vectors(xe.clone())?,
                    MatroidSpec::from_vectors(&xe),
                )
            } else {
                let m = source.matroid()?.free_extension()?;
                matroid_output(&m, MatroidSpec::describe(&m))
            }
        }
        Command::Coextend { source } => {
            let m = source.matroid()?.free_coextension()?;
            matroid_output(&m, MatroidSpec::describe(&m))
        }
        Command::Thicken { source, k } => {
            let m = source.matroid()?.thicken(k)?;
            matroid_output(&m, MatroidSpec::describe(&m))
        }
        Command::Logcheck { source, seq, shift } => logcheck(&source, seq.as_deref(), shift)?,
        Command::ThickenSearch {
            source,
            kmax,
            trace,
        } => {
            let search = logconcave::thicken_h_search(&source.matroid()?, kmax)?;
            let text = match search.k0 {
                Some(k) => format!("k0 = {k} (bound {})", search.bound),
                None => format!("no k ≤ {kmax} gives a log-concave h-vector"),
            };
            let mut json = json!(search);
            if !trace {
                json["trace"] = json!(search.trace.last());
            }
            Output { json, text }
        }
        Command::Zonotopal { source, space } => {
            let x = source.vectors()?;
            let kind = match space {
                SpaceArg::Central => SpaceKind::Central,
                SpaceArg::Internal => SpaceKind::Internal,
            };
            let s = zonotopal::space(&x, kind, &budget)?;
            let hilbert = s.hilbert_series();
            let pass = hilbert == zonotopal::expected_hilbert(&x, kind)?;
            let json = json!({
                "space": kind,
                "dims": s.dims(),
                "hilbert": hilbert.to_strings(),
                "total": s.total(),
                "generators": s.generators(),
                "zero_products": s.zero_products(),
                "tutte_check": if pass { "pass" } else { "fail" },
            });
            if !pass {
                return Err(VerificationFailed(json).into());
            }
            Output {
                text: format!(
                    "Hilb(q) = {} (total {}, Tutte check pass)",
                    hilbert.pretty("q"),
                    s.total()
                ),
                json,
            }
        }
        Command::Verify { source, corpus } => {
            let v = match (corpus, source.is_given()) {
                (Some(_), false) => verify::builtin(&budget)?,
                (None, true) => verify::single(&source.matroid()?, &budget)?,
                _ => bail!("give either --corpus builtin or one matroid input"),
            };
            let json = json!(v);
            if !v.passed {
                return Err(VerificationFailed(json).into());
            }
            let text = v
                .suites
                .iter()
                .map(|s| format!("{}: {} checked, all hold", s.name, s.checked))
                .collect::<Vec<_>>()
                .join("\n");
            Output { json, text }
        }
    })
}

fn logcheck(source: &Source, seq: Option<&str>, shift: bool) -> Result<Output> {
    let seq_report = |s: &[num_bigint::BigInt]| -> Value {
        let mut v = json!(logconcave::analyze(s));
        v["sequence"] = json!(strings(s));
        if shift {
            v["shift"] = json!(logconcave::shift_preserves_strict_lc(s));
        }
        v
    };
    let flag = |b: bool| if b { "yes" } else { "no" };
    match (seq, source.is_given()) {
        (Some(text), false) => {
            let s = input::parse_seq(text)?;
            let r = logconcave::analyze(&s);
            let text = format!(
                "log-concave: {}, strictly: {}, ultra: {}, unimodal: {}, modes {}..={}",
                flag(r.log_concave),
                flag(r.strictly_log_concave),
                flag(r.ultra_log_concave),
                flag(r.unimodal),
                r.modes.first,
                r.modes.last
            );
            Ok(Output {
                json: seq_report(&s),
                text,
            })
        }
        (None, true) => {
            let inv = MatroidInvariants::with_engine(&source.matroid()?, &engine()?)?;
            let f = inv.f_vector();
            let h = inv.h_vector()?;
            let fr = logconcave::analyze(&f);
            let json = json!({
                "f_vector": seq_report(&f),
                "h_vector": seq_report(&h),
                "first_half_increasing": logconcave::check_first_half_increasing(&f),
                "swartz": logconcave::swartz_bound(&f),
            });
            let text = format!(
                "f = {:?}: strictly log-concave: {}\nh = {:?}: log-concave: {}",
                strings(&f),
                flag(fr.strictly_log_concave),
                strings(&h),
                flag(logconcave::analyze(&h).log_concave)
            );
            Ok(Output { json, text })
        }
        _ => bail!("give either --seq or one matroid input"),
    }
}

fn exit_code(err: &anyhow::Error) -> u8 {
    if err.downcast_ref::<VerificationFailed>().is_some() {
        3
    } else if err
        .downcast_ref::<matroidal::Error>()
        .is_some_and(matroidal::Error::is_resource)
    {
        2
    } else {
        1
    }
}

fn print(out: &Output, format: Format) {
    match format {
        Format::Json => println!(
            "{}",
            serde_json::to_string_pretty(&out.json).expect("JSON values serialize")
        ),
        Format::Pretty => println!("{}", out.text),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(n) = cli.threads {
        if let Err(e) = rayon::ThreadPoolBuilder::new()
            .num_threads(n)
            .build_global()
        {
            eprintln!("error: {e}");
            return ExitCode::from(1);
        }
    }
    match run(cli.command) {
        Ok(out) => {
            print(&out, cli.format);
            ExitCode::SUCCESS
        }
        Err(err) => {
            if let Some(VerificationFailed(report)) = err.downcast_ref() {
                print(
                    &Output {
                        json: report.clone(),
                        text: report.to_string(),
                    },
                    cli.format,
                );
            }
            eprintln!("error: {err:#}");
            ExitCode::from(exit_code(&err))
        }
    }
}
