use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serde_json::{json, Value};
use uinf_core::literal::{format_uelement, format_vector};
use uinf_core::oracle::MembershipReport;
use uinf_core::props::{analyze_counterexample, run_suite, CheckResult, Suite};
use uinf_core::{
    circ_n, diamond, in_qinf, parse_uelement, parse_vector, star_n, FockVector, LambdaPoly, Partition, Rational,
    UElement,
};

#[derive(Parser)]
#[command(name = "uinf", version, about = "Exact computations in U^inf(M(1))")]
struct Cli {
    #[command(flatten)]
    global: Global,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Global {
    /// Emit JSON records instead of text.
    #[arg(long, global = true)]
    json: bool,
    /// Evaluate formal-lambda outputs at this rational value.
    #[arg(long, global = true, value_name = "RATIONAL", value_parser = parse_rational)]
    lambda: Option<Rational>,
}

#[derive(Subcommand)]
enum Command {
    /// u ∘ₙ v in M(1)
    Circ {
        #[arg(long)]
        n: u32,
        u: String,
        v: String,
    },
    /// u *ₙ v in M(1)
    Star {
        #[arg(long)]
        n: u32,
        u: String,
        v: String,
    },
    /// A ◇ B in U^inf(M(1))
    Diamond { a: String, b: String },
    /// Decide membership of an element in Q^inf(M(1))
    CheckQinf { element: String },
    /// Analyze the counterexample family E_1, ..., E_N
    Counterexample {
        #[arg(long, default_value_t = 4)]
        n_max: u32,
    },
    /// Run a verification suite on its default grid
    Verify {
        #[arg(long, default_value = "all", value_parser = parse_suite)]
        suite: Suite,
    },
}

fn parse_rational(s: &str) -> Result<Rational, String> {
    s.trim().parse::<Rational>().map_err(|e| format!("invalid rational '{s}': {e}"))
}

fn parse_suite(s: &str) -> Result<Suite, String> {
    s.parse()
}

enum Failure {
    Usage(String),
    Assertion,
}

fn vector_arg(text: &str) -> Result<FockVector, Failure> {
    parse_vector(text).map_err(|e| Failure::Usage(format!("cannot parse vector '{text}': {e}")))
}

fn element_arg(text: &str) -> Result<UElement, Failure> {
    parse_uelement(text).map_err(|e| Failure::Usage(format!("cannot parse element '{text}': {e}")))
}

fn computation(r: uinf_core::Result<FockVector>) -> Result<FockVector, Failure> {
    r.map_err(|e| Failure::Usage(e.to_string()))
}

fn print_product(g: &Global, kind: &str, text: String) {
    if g.json {
        println!("{}", json!({ "product": kind, "result": text }));
    } else {
        println!("{text}");
    }
}

fn evaluate(g: &Global, v: &FockVector) -> String {
    match &g.lambda {
        Some(x) => format_vector(&v.evaluate_at(x)),
        None => format_vector(v),
    }
}

fn membership_json(g: &Global, r: &MembershipReport) -> Value {
    json!({
        "member": r.member,
        "witness": r.witness.as_ref().map(|w| json!({
            "column": w.column,
            "partition": w.partition.parts(),
            "image": evaluate(g, w.image.as_vector()),
        })),
        "checked_columns": r.checked_columns,
    })
}

fn check_json(r: &CheckResult) -> Value {
    let params: serde_json::Map<String, Value> =
        r.params.iter().map(|(k, v)| (k.clone(), Value::String(v.clone()))).collect();
    json!({ "name": r.name, "params": params, "passed": r.passed, "witness": r.detail })
}

fn report_checks(g: &Global, results: &[CheckResult]) -> Result<(), Failure> {
    let failed = results.iter().filter(|r| !r.passed).count();
    if g.json {
        for r in results {
            println!("{}", check_json(r));
        }
    } else {
        for r in results {
            println!("{r}");
        }
        println!("{} checks, {} failed", results.len(), failed);
    }
    if failed == 0 {
        Ok(())
    } else {
        Err(Failure::Assertion)
    }
}

fn counterexample_results(n_max: u32) -> Vec<CheckResult> {
    let two = LambdaPoly::from(2);
    (1..=n_max)
        .map(|n| {
            let o = analyze_counterexample(n);
            let mut detail = vec![
                if o.member { "member" } else { "non-member" }.to_string(),
                if o.shifted_member { "shifted member" } else { "shifted non-member" }.to_string(),
            ];
            if let Some(c) = &o.witness_factor {
                detail.push(format!("witness factor {c}"));
            }
            let passed = o.member
                && !o.shifted_member
                && o.witness_column == Some(n - 1)
                && o.witness_partition == Some(Partition::ones(n - 1))
                && o.witness_factor.as_ref() == Some(&two);
            CheckResult {
                name: "counterexample".to_string(),
                params: vec![("n".to_string(), n.to_string())],
                passed,
                detail: Some(detail.join(" / ")),
            }
        })
        .collect()
}

fn run(cli: Cli) -> Result<(), Failure> {
    let g = &cli.global;
    match &cli.command {
        Command::Circ { n, u, v } => {
            let r = computation(circ_n(&vector_arg(u)?, &vector_arg(v)?, *n))?;
            print_product(g, "circ", evaluate(g, &r));
        }
        Command::Star { n, u, v } => {
            let r = computation(star_n(&vector_arg(u)?, &vector_arg(v)?, *n))?;
            print_product(g, "star", evaluate(g, &r));
        }
        Command::Diamond { a, b } => {
            let r = diamond(&element_arg(a)?, &element_arg(b)?).map_err(|e| Failure::Usage(e.to_string()))?;
            print_product(g, "diamond", format_uelement(&r));
        }
        Command::CheckQinf { element } => {
            let a = element_arg(element)?;
            let r = in_qinf(&a);
            if g.json {
                println!("{}", membership_json(g, &r));
            } else {
                let cols: Vec<String> = r.checked_columns.iter().map(u32::to_string).collect();
                println!("element: {}", format_uelement(&a));
                println!("checked columns: {}", cols.join(", "));
                match &r.witness {
                    None => println!("member"),
                    Some(w) => println!(
                        "not member: column {} class {} -> {}",
                        w.column,
                        w.partition,
                        evaluate(g, w.image.as_vector())
                    ),
                }
            }
        }
        Command::Counterexample { n_max } => report_checks(g, &counterexample_results(*n_max))?,
        Command::Verify { suite } => report_checks(g, &run_suite(*suite))?,
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Assertion) => ExitCode::from(1),
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
