//! Command-line front end shared by the `sp2n` binary and the tests.

use std::io::Write;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::json;

use crate::branching::{exterior_factors, real_by_order_sl, real_by_order_su, real_element_verdict, restrict_to_c, LinearWeight};
use crate::criteria::{element_has_one, p49_classify, torus_trivial, unisingular, Decision, Verdict};
use crate::elements::{gamma_graph, singer_height, singer_index_element, SemisimpleElement};
use crate::harness::{run_suite, Limits};
use crate::reps::{weight_set, ModuleKind};
use crate::tori::{enumerate_shapes, singer_index, torus_order, TorusShape};
use crate::weights::Weight;

pub const EXIT_OK: i32 = 0;
pub const EXIT_UNEXPECTED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_SUITE_FAILED: i32 = 3;

#[derive(Parser, Debug)]
#[command(name = "sp2n", version, about = "Eigenvalue 1 and unisingularity for Sp_2n(2)")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Expect {
    Yes,
    No,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Group {
    Sl,
    Su,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Singer height Si(n) with a witness set.
    Si {
        n: u32,
        #[arg(long)]
        json: bool,
    },
    /// Maximal torus shapes of Sp_2n(2).
    Tori {
        n: usize,
        #[arg(long)]
        json: bool,
    },
    /// Weight set of the module with highest weight OMEGA.
    Weights {
        n: usize,
        omega: Weight,
        #[arg(long, default_value = "irr2")]
        kind: ModuleKind,
        #[arg(long)]
        json: bool,
    },
    /// Whether every element of Sp_2n(2) has eigenvalue 1 on L(OMEGA).
    Unisingular {
        n: usize,
        omega: Weight,
        #[arg(long)]
        json: bool,
        #[arg(long)]
        expect: Option<Expect>,
    },
    /// Whether L(OMEGA) restricted to a maximal torus has a trivial constituent.
    TorusTrivial {
        n: usize,
        omega: Weight,
        #[arg(long, allow_hyphen_values = true)]
        torus: TorusShape,
        #[arg(long)]
        json: bool,
        #[arg(long)]
        expect: Option<Expect>,
    },
    /// Γ(g), Si(g) and eigenvalue-1 verdicts for a semisimple element.
    Element {
        spec: SemisimpleElement,
        #[arg(long)]
        omega: Weight,
        #[arg(long)]
        json: bool,
        #[arg(long)]
        expect: Option<Expect>,
    },
    /// Restriction of an SL_N-weight to Sp_N.
    Branch {
        #[arg(long = "N")]
        big_n: usize,
        #[arg(long)]
        lambda: String,
        #[arg(long)]
        json: bool,
    },
    /// Reality of an element of order O in SL_N(q) or SU_N(q).
    Real {
        #[arg(long)]
        group: Group,
        #[arg(long)]
        order: u64,
        #[arg(long)]
        q: u64,
        #[arg(long)]
        json: bool,
        #[arg(long)]
        expect: Option<Expect>,
    },
    /// Run the verification suites.
    Verify {
        #[arg(long, default_value = "all")]
        suite: String,
        #[arg(long)]
        max_n: Option<usize>,
        #[arg(long)]
        json: bool,
    },
}

struct Failed(String);

impl<E: std::fmt::Display> From<E> for Failed {
    fn from(e: E) -> Self {
        Failed(e.to_string())
    }
}

/// Runs the CLI on `argv` (program name first) and returns the exit code.
pub fn cli_main<I, S>(argv: I) -> i32
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let stdout = std::io::stdout();
    let stderr = std::io::stderr();
    run(argv, &mut stdout.lock(), &mut stderr.lock())
}

/// [`cli_main`] with explicit output streams.
pub fn run<I, S>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                let _ = write!(err, "{text}");
                EXIT_USAGE
            } else {
                let _ = write!(out, "{text}");
                EXIT_OK
            };
        }
    };
    match dispatch(cli.command, out) {
        Ok(code) => code,
        Err(Failed(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            EXIT_USAGE
        }
    }
}

fn check_rank(n: usize, w: &Weight) -> Result<(), Failed> {
    if w.rank() == n {
        Ok(())
    } else {
        Err(Failed(format!("weight {w} has rank {} but n = {n}", w.rank())))
    }
}

fn expect_code(expect: Option<Expect>, yes: bool) -> i32 {
    match expect {
        Some(Expect::Yes) if !yes => EXIT_UNEXPECTED,
        Some(Expect::No) if yes => EXIT_UNEXPECTED,
        _ => EXIT_OK,
    }
}

fn verdict_code(expect: Option<Expect>, v: &Verdict) -> i32 {
    match v.decision {
        Decision::Undetermined if expect.is_some() => EXIT_UNEXPECTED,
        d => expect_code(expect, d == Decision::Yes),
    }
}

fn print_json(out: &mut dyn Write, value: &impl Serialize) -> Result<(), Failed> {
    writeln!(out, "{}", serde_json::to_string(value)?)?;
    Ok(())
}

fn print_verdict(out: &mut dyn Write, v: &Verdict, json: bool) -> Result<(), Failed> {
    if json {
        print_json(out, v)
    } else {
        let fallback = if v.fallback_used { ", by direct computation" } else { "" };
        writeln!(out, "{} ({}{fallback})", v.decision, v.citations.join(", "))?;
        Ok(())
    }
}

fn dispatch(command: Command, out: &mut dyn Write) -> Result<i32, Failed> {
    match command {
        Command::Si { n, json } => {
            let si = singer_height(n)?;
            if json {
                print_json(out, &json!({ "n": n, "value": si.value, "witness": si.witness }))?;
            } else {
                let parts: Vec<String> = si.witness.iter().map(u32::to_string).collect();
                writeln!(out, "Si({n}) = {}  witness {{{}}}", si.value, parts.join(","))?;
            }
            Ok(EXIT_OK)
        }
        Command::Tori { n, json } => {
            let shapes = enumerate_shapes(n)?;
            if json {
                let rows: Vec<_> = shapes
                    .iter()
                    .map(|s| json!({ "shape": s, "order": torus_order(s).to_string(), "singer_index": singer_index(s) }))
                    .collect();
                print_json(out, &rows)?;
            } else {
                for s in &shapes {
                    writeln!(out, "{:<20} order {:<12} Si {}", s.to_string(), torus_order(s), singer_index(s))?;
                }
                writeln!(out, "{} shapes", shapes.len())?;
            }
            Ok(EXIT_OK)
        }
        Command::Weights { n, omega, kind, json } => {
            check_rank(n, &omega)?;
            let set = weight_set(&omega, kind)?;
            let dominant = set.dominant_members();
            if json {
                print_json(
                    out,
                    &json!({
                        "omega": omega,
                        "kind": kind,
                        "cardinality": set.len(),
                        "dominant": dominant,
                        "zero_weight": set.contains_zero(),
                    }),
                )?;
            } else {
                writeln!(out, "weights: {}", set.len())?;
                let list: Vec<String> = dominant.iter().map(Weight::to_string).collect();
                writeln!(out, "dominant: {}", list.join(" "))?;
                writeln!(out, "zero weight: {}", if set.contains_zero() { "yes" } else { "no" })?;
            }
            Ok(EXIT_OK)
        }
        Command::Unisingular { n, omega, json, expect } => {
            check_rank(n, &omega)?;
            let v = unisingular(&omega)?;
            print_verdict(out, &v, json)?;
            Ok(verdict_code(expect, &v))
        }
        Command::TorusTrivial { n, omega, torus, json, expect } => {
            check_rank(n, &omega)?;
            let v = torus_trivial(&omega, &torus)?;
            print_verdict(out, &v, json)?;
            Ok(verdict_code(expect, &v))
        }
        Command::Element { spec, omega, json, expect } => {
            check_rank(spec.rank(), &omega)?;
            let graph = gamma_graph(&spec);
            let si = singer_index_element(&spec);
            let verdict = if omega.is_restricted() { Some(element_has_one(&omega, &spec)?) } else { None };
            let class = p49_classify(&omega, &spec)?;
            if json {
                print_json(
                    out,
                    &json!({
                        "element": spec,
                        "order": spec.order()?,
                        "gamma": graph,
                        "singer_index": si,
                        "verdict": verdict,
                        "classification": class,
                    }),
                )?;
            } else {
                writeln!(out, "element {spec}  order {}", spec.order()?)?;
                let edges: Vec<String> = graph.edges.iter().map(|(a, b)| format!("{a}-{b}")).collect();
                let singular: Vec<String> = graph.singular.iter().map(usize::to_string).collect();
                writeln!(out, "gamma: {} vertices, edges [{}], singular [{}]", graph.vertices, edges.join(" "), singular.join(" "))?;
                writeln!(out, "Si(g) = {si}")?;
                if let Some(v) = &verdict {
                    write!(out, "eigenvalue 1 on L({omega}): ")?;
                    print_verdict(out, v, false)?;
                }
                writeln!(out, "classification: {}", serde_json::to_string(&class)?)?;
            }
            let code = match &verdict {
                Some(v) => verdict_code(expect, v),
                None if expect.is_some() => return Err(Failed(format!("--expect needs a 2-restricted weight, got {omega}"))),
                None => EXIT_OK,
            };
            Ok(code)
        }
        Command::Branch { big_n, lambda, json } => {
            let coeffs = parse_coeffs(&lambda)?;
            let lambda = LinearWeight::new(big_n, coeffs)?;
            let restricted = restrict_to_c(&lambda)?;
            let exterior = match lambda.as_fundamental() {
                Some(k) => Some(exterior_factors(k, big_n / 2)?),
                None => None,
            };
            let verdict = real_element_verdict(&lambda);
            if json {
                print_json(
                    out,
                    &json!({
                        "lambda": lambda.to_string(),
                        "restriction": restricted,
                        "exterior_factors": exterior,
                        "verdict": verdict,
                    }),
                )?;
            } else {
                writeln!(out, "restriction to C_{}: {restricted}", big_n / 2)?;
                if let Some(fs) = &exterior {
                    let list: Vec<String> = fs.iter().map(Weight::to_string).collect();
                    writeln!(out, "exterior power composition factors: {}", list.join(" "))?;
                }
                writeln!(
                    out,
                    "real elements: {} ({})",
                    serde_json::to_value(verdict.outcome)?.as_str().unwrap_or_default(),
                    verdict.citations.join(", ")
                )?;
            }
            Ok(EXIT_OK)
        }
        Command::Real { group, order, q, json, expect } => {
            let real = match group {
                Group::Sl => real_by_order_sl(order, q)?,
                Group::Su => real_by_order_su(order, q)?,
            };
            if json {
                print_json(out, &json!({ "order": order, "q": q, "real": real }))?;
            } else {
                writeln!(out, "{real}")?;
            }
            Ok(expect_code(expect, real))
        }
        Command::Verify { suite, max_n, json } => {
            let report = run_suite(&suite, max_n, &Limits::default())?;
            if json {
                writeln!(out, "{}", report.to_json())?;
            } else {
                let status = if report.pass { "PASS" } else { "FAIL" };
                writeln!(out, "{status} {} cases={} failures={}", report.suite, report.cases, report.failures.len())?;
                for f in report.failures.iter().take(20) {
                    writeln!(out, "  {}: fast {} oracle {}", f.input, f.fast, f.oracle)?;
                }
                for note in &report.notes {
                    writeln!(out, "  note: {note}")?;
                }
            }
            Ok(if report.pass { EXIT_OK } else { EXIT_SUITE_FAILED })
        }
    }
}

fn parse_coeffs(s: &str) -> Result<Vec<i64>, Failed> {
    s.split(',')
        .map(|p| p.trim().parse::<i64>().map_err(|_| Failed(format!("bad coefficient {p:?} in {s:?}"))))
        .collect()
}
