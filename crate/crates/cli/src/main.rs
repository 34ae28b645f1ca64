//! `nilops` command-line front end.
//!
//! Exit codes: 0 success, 1 domain error or failed check, 2 usage or
//! parse error.

use std::io::Write;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use nilops::homs::{hom_dim, orbit_dim_formula, orbit_dim_via_end};
use nilops::oracle::{self, PrimeField};
use nilops::orders::{cover_indices, dom_leq, export_hasse_dot, hom_leq};
use nilops::verify::{self, SweepReport};
use nilops::{
    enumerate_s1, extension_witness, generator_word, star, star_power, Error, S1Object,
    TableauFormat,
};

const GRAMMAR: &str = "objects are written as `[beta]/[gamma]` (e.g. `[3,1,1]/[2,1]`), \
as a sum of pickets `P<0|1>^<m>` joined by `+` (e.g. `P1^2+P0^1`), or as `\"\"`/`0` for zero";

const CONVENTION: &str = "Z = Y*X, extension of Y by X: 0 -> X -> Z -> Y -> 0";

#[derive(Parser)]
#[command(
    name = "nilops",
    version,
    about = "Generic extensions of invariant subspaces of nilpotent operators"
)]
struct Cli {
    /// Emit machine-readable JSON instead of text.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Generic extension Y*X of quotient Y by subobject X.
    Mul { quotient: String, sub: String },
    /// k-fold product X*X*...*X.
    Pow { object: String, k: usize },
    /// Word in P1^1 and (P0^1)^n whose product is the object.
    DecomposeWord { object: String },
    /// Short exact sequences realizing Y*X summand by summand.
    Witness { quotient: String, sub: String },
    /// dim Hom(X, Y).
    Hom { x: String, y: String },
    /// Orbit dimension by the closed formula and via dim End.
    OrbitDim { object: String },
    /// Is X <= Y (Y a degeneration of X)?
    Order {
        x: String,
        y: String,
        #[arg(long, value_enum, default_value_t = Via::Dom)]
        via: Via,
    },
    /// All objects with |alpha| = a, |beta| = b.
    Enumerate { a: usize, b: usize },
    /// Hasse diagram of the order on S_a^b.
    Hasse {
        a: usize,
        b: usize,
        #[arg(long, value_enum, default_value_t = HasseFormat::Dot)]
        format: HasseFormat,
    },
    /// Draw the LR-tableau of an object.
    Render {
        object: String,
        #[arg(long, value_enum, default_value_t = RenderFormat::Ascii)]
        format: RenderFormat,
    },
    /// Brute-force checks over a finite field.
    Oracle {
        #[command(subcommand)]
        action: OracleAction,
    },
    /// Run an exhaustive property sweep.
    Verify {
        #[arg(long, value_enum)]
        suite: Suite,
        /// Bound on b (on b_X + b_Y for sweeps over pairs).
        #[arg(long, default_value_t = 3)]
        max_b: usize,
        /// Bound on a (on a_X + a_Y for the oracle sweep).
        #[arg(long)]
        max_a: Option<usize>,
        #[arg(long, default_value_t = 2)]
        p: u32,
    },
}

#[derive(Subcommand)]
enum OracleAction {
    /// Every extension type 0 -> X -> Z -> Y -> 0 realized over F_p.
    Ext {
        quotient: String,
        sub: String,
        #[arg(long, default_value_t = 2)]
        p: u32,
    },
    /// Check that Y*X is the generic one among them.
    Verify {
        quotient: String,
        sub: String,
        #[arg(long, default_value_t = 2)]
        p: u32,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Via {
    Dom,
    Hom,
}

#[derive(Clone, Copy, ValueEnum)]
enum HasseFormat {
    Dot,
    Text,
}

#[derive(Clone, Copy, ValueEnum)]
enum RenderFormat {
    Ascii,
    Latex,
}

#[derive(Clone, Copy, ValueEnum)]
enum Suite {
    Assoc,
    Mono,
    Orders,
    #[value(alias = "thm12")]
    OrbitDim,
    Witness,
    PartialSums,
    Words,
    Strip,
    Classify,
    Oracle,
}

enum Failure {
    Domain(String),
    Usage(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Syntax(_) | Error::InvalidPartition(_) => {
                Failure::Usage(format!("{e}\nhint: {GRAMMAR}"))
            }
            Error::NotPrime(_) => Failure::Usage(e.to_string()),
            _ => Failure::Domain(e.to_string()),
        }
    }
}

/// Text and JSON forms of a command's result, plus whether it counts as success.
struct Output {
    text: String,
    json: Value,
    ok: bool,
}

impl Output {
    fn ok(text: String, json: Value) -> Self {
        Self {
            text,
            json,
            ok: true,
        }
    }
}

fn parse(s: &str) -> Result<S1Object, Failure> {
    Ok(s.parse::<S1Object>()?)
}

fn field(p: u32) -> Result<PrimeField, Failure> {
    Ok(PrimeField::new(p)?)
}

fn obj_json(x: &S1Object) -> Value {
    json!({ "beta": x.beta().parts(), "gamma": x.gamma().parts(), "pickets": x.pickets().to_string() })
}

fn describe(x: &S1Object) -> String {
    let tableau = x.render(TableauFormat::Ascii);
    let mut s = format!("{x}\npickets: {}", x.pickets());
    if !tableau.is_empty() {
        s.push('\n');
        s.push_str(&tableau);
    }
    s
}

fn report_output(reports: Vec<SweepReport>) -> Output {
    let ok = reports.iter().all(SweepReport::passed);
    let text = reports
        .iter()
        .map(|r| format!("{}: {r}", r.name))
        .collect::<Vec<_>>()
        .join("\n");
    let json = json!(reports);
    Output { text, json, ok }
}

fn run(command: Command) -> Result<Output, Failure> {
    Ok(match command {
        Command::Mul { quotient, sub } => {
            let (y, x) = (parse(&quotient)?, parse(&sub)?);
            let z = star(&y, &x);
            Output::ok(
                format!("{}\n{CONVENTION}", describe(&z)),
                json!({ "quotient": obj_json(&y), "sub": obj_json(&x), "product": obj_json(&z) }),
            )
        }
        Command::Pow { object, k } => {
            let x = parse(&object)?;
            let z = star_power(&x, k);
            Output::ok(
                describe(&z),
                json!({ "object": obj_json(&x), "k": k, "product": obj_json(&z) }),
            )
        }
        Command::DecomposeWord { object } => {
            let x = parse(&object)?;
            let word: Vec<String> = generator_word(&x).iter().map(|g| g.to_string()).collect();
            let text = if word.is_empty() {
                "0".to_string()
            } else {
                word.join(" * ")
            };
            Output::ok(text, json!({ "object": obj_json(&x), "word": word }))
        }
        Command::Witness { quotient, sub } => {
            let (y, x) = (parse(&quotient)?, parse(&sub)?);
            let w = extension_witness(&y, &x);
            let mut lines = vec![CONVENTION.to_string()];
            let mut rows = Vec::new();
            for r in &w.rows {
                lines.push(format!(
                    "{}: 0 -> {} -> {} -> {} -> 0",
                    r.kind,
                    r.sub.pickets(),
                    r.middle.pickets(),
                    r.quotient.pickets()
                ));
                rows.push(json!({
                    "kind": r.kind.to_string(),
                    "sub": obj_json(&r.sub),
                    "middle": obj_json(&r.middle),
                    "quotient": obj_json(&r.quotient),
                }));
            }
            let z = w.middle_sum();
            lines.push(format!(
                "sum: 0 -> {} -> {} -> {} -> 0",
                x.pickets(),
                z.pickets(),
                y.pickets()
            ));
            Output::ok(
                lines.join("\n"),
                json!({ "quotient": obj_json(&y), "sub": obj_json(&x), "product": obj_json(&z), "rows": rows }),
            )
        }
        Command::Hom { x, y } => {
            let (x, y) = (parse(&x)?, parse(&y)?);
            let d = hom_dim(&x, &y);
            Output::ok(
                d.to_string(),
                json!({ "x": obj_json(&x), "y": obj_json(&y), "dim": d }),
            )
        }
        Command::OrbitDim { object } => {
            let x = parse(&object)?;
            let (formula, via_end) = (orbit_dim_formula(&x), orbit_dim_via_end(&x));
            let mut text = format!("formula: {formula}\nvia End: {via_end}");
            if formula != via_end {
                text.push_str("\nMISMATCH");
            }
            Output {
                text,
                json: json!({ "object": obj_json(&x), "formula": formula, "via_end": via_end }),
                ok: formula == via_end,
            }
        }
        Command::Order { x, y, via } => {
            let (x, y) = (parse(&x)?, parse(&y)?);
            let verdict = match via {
                Via::Dom => dom_leq(&x, &y)?,
                Via::Hom => hom_leq(&x, &y)?,
            };
            let witness = verdict.witness.as_ref().map(|w| w.to_string());
            let text = match &witness {
                None => format!("{x} <= {y}"),
                Some(w) => format!("{x} not <= {y}: {w}"),
            };
            Output::ok(
                text,
                json!({ "x": obj_json(&x), "y": obj_json(&y), "leq": verdict.leq, "witness": witness }),
            )
        }
        Command::Enumerate { a, b } => {
            let objs = enumerate_s1(a, b);
            let text = objs
                .iter()
                .map(|x| format!("{x}  {}", x.pickets()))
                .collect::<Vec<_>>()
                .join("\n");
            Output::ok(
                text,
                json!({ "a": a, "b": b, "objects": objs.iter().map(obj_json).collect::<Vec<_>>() }),
            )
        }
        Command::Hasse { a, b, format } => {
            let (objs, edges) = cover_indices(a, b);
            let text = match format {
                HasseFormat::Dot => export_hasse_dot(a, b).trim_end().to_string(),
                HasseFormat::Text => edges
                    .iter()
                    .map(|&(i, j)| format!("{} -> {}", objs[i], objs[j]))
                    .collect::<Vec<_>>()
                    .join("\n"),
            };
            Output::ok(
                text,
                json!({
                    "a": a,
                    "b": b,
                    "nodes": objs.iter().map(obj_json).collect::<Vec<_>>(),
                    "edges": edges,
                }),
            )
        }
        Command::Render { object, format } => {
            let x = parse(&object)?;
            let fmt = match format {
                RenderFormat::Ascii => TableauFormat::Ascii,
                RenderFormat::Latex => TableauFormat::Latex,
            };
            let s = x.render(fmt);
            Output::ok(s.clone(), json!({ "object": obj_json(&x), "tableau": s }))
        }
        Command::Oracle { action } => match action {
            OracleAction::Ext { quotient, sub, p } => {
                let (y, x, k) = (parse(&quotient)?, parse(&sub)?, field(p)?);
                let exts = oracle::enumerate_extensions(&y, &x, k, oracle::max_bits_from_env())?;
                let text = exts
                    .iter()
                    .map(|z| format!("{z}  {}", z.pickets()))
                    .collect::<Vec<_>>()
                    .join("\n");
                Output::ok(
                    text,
                    json!({
                        "quotient": obj_json(&y),
                        "sub": obj_json(&x),
                        "p": p,
                        "extensions": exts.iter().map(obj_json).collect::<Vec<_>>(),
                    }),
                )
            }
            OracleAction::Verify { quotient, sub, p } => {
                let (y, x, k) = (parse(&quotient)?, parse(&sub)?, field(p)?);
                let r = oracle::verify_generic(&y, &x, k, oracle::max_bits_from_env())?;
                let a = &r.assertions;
                let mut text = format!(
                    "{} over F_{}: {} extension types\ngeneric: {}\nmember: {}\ndominance_minimal: {}\nunique_end_minimizer: {}\nfilter_passes: {}",
                    if r.passed() { "PASS" } else { "FAIL" },
                    r.p,
                    r.extensions.len(),
                    r.generic,
                    a.member,
                    a.dominance_minimal,
                    a.unique_end_minimizer,
                    a.filter_passes
                );
                for f in &r.failures {
                    text.push_str(&format!("\nfailure: {f}"));
                }
                Output {
                    text,
                    json: json!(r),
                    ok: r.passed(),
                }
            }
        },
        Command::Verify {
            suite,
            max_b,
            max_a,
            p,
        } => {
            let k = field(p)?;
            let bits = oracle::max_bits_from_env();
            let a = max_a.unwrap_or(max_b);
            let report = match suite {
                Suite::Assoc => verify::associativity(max_b),
                Suite::Mono => {
                    verify::monotonicity(max_a.unwrap_or(2), max_b, max_b.saturating_sub(1))
                }
                Suite::Orders => verify::order_equivalence(a, max_b),
                Suite::OrbitDim => verify::orbit_dimension(a, max_b),
                Suite::Witness => verify::witness_consistency(max_b),
                Suite::PartialSums => verify::partial_sums(max_b),
                Suite::Words => verify::generator_words(max_b),
                Suite::Strip => verify::strip_closure(max_b),
                Suite::Classify => verify::classify_round_trip(a, max_b, k),
                Suite::Oracle => verify::oracle_agreement(max_b, max_a.unwrap_or(2), k, bits),
            };
            report_output(vec![report])
        }
    })
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(out) => {
            let text = if cli.json {
                serde_json::to_string_pretty(&out.json).expect("serializable output")
            } else {
                out.text
            };
            if !text.is_empty() {
                // a closed pipe (e.g. `| head`) is not an error
                let _ = writeln!(std::io::stdout(), "{text}");
            }
            if out.ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(Failure::Domain(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
