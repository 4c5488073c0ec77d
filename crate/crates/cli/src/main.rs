use std::fs;
use std::io::Read;
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Parser, Subcommand};
use serde::Serialize;
use serde_json::{json, Value};

use intclosure::classify::{classify, evaluate, Certificate, Property};
use intclosure::closure::{closure_under, dc_closure, svpi_closure, tvpi_closure, utvpi_closure};
use intclosure::decomp::{hereditary_check, is_weakly_f_closed, HereditaryPredicate};
use intclosure::io::{parse_point_set, parse_system};
use intclosure::representation::{integer_solutions, is_representable, synthesize_system};
use intclosure::verify::{run_suites, Fault, VerifyConfig};
use intclosure::{fixtures, set_enumeration_budget, BoundingBox, PointSet, SystemClass, TotalOp};

#[derive(Parser)]
#[command(name = "intclosure", version, about = "Closedness, decomposability, convexity and representability of finite integer point sets")]
struct Cli {
    /// Input file; standard input when absent or `-`.
    #[arg(long = "in", global = true, value_name = "PATH")]
    input: Option<PathBuf>,
    /// Also write the JSON result to this file.
    #[arg(long, global = true, value_name = "PATH")]
    out: Option<PathBuf>,
    /// Print JSON instead of text.
    #[arg(long, global = true)]
    json: bool,
    /// Largest number of candidates a single enumeration may visit.
    #[arg(long, global = true, value_name = "N")]
    budget: Option<u64>,
    /// Seed for randomized commands.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Decide one property; exit 0 if it holds, 1 if not.
    Check {
        /// A property name, `weak-F:<kmax>` or `hereditary:<predicate>`.
        #[arg(long)]
        property: String,
    },
    /// Compute a closure of a point set.
    Closure {
        /// op:mu, op:median, op:gh, svpi, dc, utvpi or tvpi.
        #[arg(long)]
        kind: String,
    },
    /// Report every property with certificates.
    Classify,
    /// Synthesize the tightest system of a class; exit 0 if it represents the set exactly.
    Repr {
        /// svpi, dc, utvpi or tvpi.
        #[arg(long)]
        class: String,
    },
    /// Enumerate the integer solutions of a system inside a box.
    Solve {
        /// Box as `l1:u1,...,ln:un`.
        #[arg(long = "box", value_name = "BOX", allow_hyphen_values = true)]
        bbox: String,
    },
    /// Run the bundled worked examples.
    #[command(name = "paper-examples")]
    Examples,
    /// Run the randomized theorem suites.
    VerifyTheorems {
        #[arg(long, default_value_t = 200)]
        trials: usize,
        /// Inject a defect to confirm the suites detect it: mu-ceil.
        #[arg(long)]
        fault: Option<String>,
    },
}

/// Result of a command: JSON payload, text rendering and exit code.
struct Outcome {
    json: Value,
    text: String,
    code: u8,
}

fn with_schema<T: Serialize>(kind: &str, value: &T) -> Result<Value> {
    let mut v = serde_json::to_value(value)?;
    match v.as_object_mut() {
        Some(obj) => {
            obj.insert("schema".into(), json!(format!("intclosure.{kind}/1")));
            Ok(v)
        }
        None => Ok(json!({ "schema": format!("intclosure.{kind}/1"), "value": v })),
    }
}

fn read_input(path: &Option<PathBuf>) -> Result<String> {
    match path {
        Some(p) if p.as_os_str() != "-" => fs::read_to_string(p).with_context(|| format!("cannot read {}", p.display())),
        _ => {
            let mut s = String::new();
            std::io::stdin().read_to_string(&mut s).context("cannot read standard input")?;
            Ok(s)
        }
    }
}

fn render_set(s: &PointSet) -> String {
    let pts: Vec<String> = s.iter().map(|p| p.to_string()).collect();
    format!("{} point(s) in dimension {}: {{{}}}", s.len(), s.dim(), pts.join(", "))
}

fn render_certificate(c: &Certificate) -> String {
    match c {
        Certificate::Operation(w) => w.to_string(),
        Certificate::Hole { point } => format!("hole {point}"),
        Certificate::Missing { point } => format!("missing point {point}"),
        Certificate::System { system } => format!("system\n{system}"),
        other => serde_json::to_string(other).unwrap_or_default(),
    }
}

fn parse_class(name: &str) -> Result<SystemClass> {
    let class: SystemClass = name.parse()?;
    if !SystemClass::REPRESENTABLE.contains(&class) {
        bail!("class must be one of svpi, dc, utvpi, tvpi");
    }
    Ok(class)
}

fn cmd_check(cli: &Cli, property: &str) -> Result<Outcome> {
    let s = parse_point_set(&read_input(&cli.input)?)?;
    let (holds, certificate) = if let Some(k) = property.strip_prefix("weak-F:") {
        let k: usize = k.parse().with_context(|| format!("bad k_max `{k}`"))?;
        let v = is_weakly_f_closed(&s, k)?;
        (v.holds, v.witness.map(Certificate::Operation))
    } else if let Some(p) = property.strip_prefix("hereditary:") {
        let v = hereditary_check(&s, HereditaryPredicate::parse(p)?)?;
        (v.holds, v.witness.map(Certificate::Hereditary))
    } else {
        let prop: Property = property.parse()?;
        if !prop.applies_to(s.dim()) {
            bail!("{prop} needs dimension at least 2");
        }
        evaluate(&s, prop)?
    };
    let mut text = format!("{property}: {holds}");
    if let Some(c) = &certificate {
        text.push_str(&format!("\ncertificate: {}", render_certificate(c)));
    }
    let json = json!({
        "schema": "intclosure.check/1",
        "property": property,
        "holds": holds,
        "certificate": certificate,
    });
    Ok(Outcome { json, text, code: if holds { 0 } else { 1 } })
}

fn cmd_closure(cli: &Cli, kind: &str) -> Result<Outcome> {
    let s = parse_point_set(&read_input(&cli.input)?)?;
    let closed = match kind {
        "op:mu" => closure_under(&s, &[TotalOp::MU])?.closed_set,
        "op:median" => closure_under(&s, &[TotalOp::MEDIAN])?.closed_set,
        "op:gh" => closure_under(&s, &[TotalOp::CEIL_MID, TotalOp::FLOOR_MID])?.closed_set,
        "svpi" => svpi_closure(&s)?,
        "dc" => dc_closure(&s)?,
        "utvpi" => utvpi_closure(&s)?,
        "tvpi" => tvpi_closure(&s)?,
        other => bail!("unknown closure kind `{other}`; expected op:mu, op:median, op:gh, svpi, dc, utvpi or tvpi"),
    };
    let added = closed.len() - s.len();
    Ok(Outcome { json: with_schema("point-set", &closed)?, text: format!("{}\n{added} point(s) added", render_set(&closed)), code: 0 })
}

fn cmd_classify(cli: &Cli) -> Result<Outcome> {
    let s = parse_point_set(&read_input(&cli.input)?)?;
    let report = classify(&s)?;
    let mut text = format!("{} point(s) in dimension {}\n", report.size, report.dim);
    for (prop, holds) in &report.verdicts {
        text.push_str(&format!("{:<20} {}\n", prop.name(), if *holds { "yes" } else { "no" }));
        if let Some(c) = report.certificates.get(prop).filter(|_| !*holds) {
            text.push_str(&format!("{:<20} {}\n", "", render_certificate(c)));
        }
    }
    if report.consistency.is_empty() {
        text.push_str("consistency: ok\n");
    } else {
        for c in &report.consistency {
            text.push_str(&format!("inconsistent: {c}\n"));
        }
    }
    for n in &report.notes {
        text.push_str(&format!("note: {n}\n"));
    }
    let code = if report.consistency.is_empty() { 0 } else { 1 };
    Ok(Outcome { json: with_schema("class-report", &report)?, text: text.trim_end().to_string(), code })
}

fn cmd_repr(cli: &Cli, class: &str) -> Result<Outcome> {
    let s = parse_point_set(&read_input(&cli.input)?)?;
    let class = parse_class(class)?;
    let cert = is_representable(&s, class)?;
    let sys = match cert.system {
        Some(sys) => sys,
        None => synthesize_system(&s, class)?,
    };
    let mut json = with_schema("system", &sys)?;
    json["representable"] = json!(cert.representable);
    json["hole"] = serde_json::to_value(&cert.hole)?;
    let text = match &cert.hole {
        None => format!("representable by a {class} system:\n{sys}"),
        Some(h) => format!("not representable by a {class} system; hole {h}\ntightest {class} system:\n{sys}"),
    };
    Ok(Outcome { json, text: text.trim_end().to_string(), code: if cert.representable { 0 } else { 1 } })
}

fn cmd_solve(cli: &Cli, bbox: &str) -> Result<Outcome> {
    let sys = parse_system(&read_input(&cli.input)?)?;
    let sol = integer_solutions(&sys, &BoundingBox::parse(bbox)?)?;
    Ok(Outcome { json: with_schema("point-set", &sol)?, text: render_set(&sol), code: 0 })
}

fn cmd_examples() -> Result<Outcome> {
    let outcomes = fixtures::run_all();
    let mut text = String::new();
    for o in &outcomes {
        text.push_str(&format!("{} {}\n", if o.passed { "PASS" } else { "FAIL" }, o.name));
        for c in &o.checks {
            text.push_str(&format!("  [{}] {} (observed {})\n", if c.passed { "ok" } else { "!!" }, c.claim, c.observed));
        }
    }
    let all = outcomes.iter().all(|o| o.passed);
    Ok(Outcome {
        json: json!({ "schema": "intclosure.examples/1", "passed": all, "fixtures": outcomes }),
        text: text.trim_end().to_string(),
        code: if all { 0 } else { 1 },
    })
}

fn cmd_verify(cli: &Cli, trials: usize, fault: &Option<String>) -> Result<Outcome> {
    if trials == 0 {
        bail!("--trials must be at least 1");
    }
    let fault = match fault {
        Some(f) => Some(Fault::parse(f).with_context(|| format!("unknown fault `{f}`; expected mu-ceil"))?),
        None => None,
    };
    let reports = run_suites(VerifyConfig { seed: cli.seed, trials, fault })?;
    let mut text = String::new();
    for r in &reports {
        match &r.first_violation {
            None => text.push_str(&format!("PASS {} ({} checks, {} ms)\n", r.name, r.checked, r.elapsed_ms)),
            Some(v) => text.push_str(&format!("FAIL {} ({} of {} checks): {v}\n", r.name, r.violations, r.checked)),
        }
    }
    let violations: usize = reports.iter().map(|r| r.violations).sum();
    text.push_str(&format!("{violations} violation(s)"));
    Ok(Outcome {
        json: json!({
            "schema": "intclosure.verify/1",
            "seed": cli.seed,
            "trials": trials,
            "fault": fault,
            "violations": violations,
            "suites": reports,
        }),
        text,
        code: if violations == 0 { 0 } else { 1 },
    })
}

fn run(cli: &Cli) -> Result<u8> {
    if let Some(b) = cli.budget {
        set_enumeration_budget(b);
    }
    let outcome = match &cli.command {
        Command::Check { property } => cmd_check(cli, property)?,
        Command::Closure { kind } => cmd_closure(cli, kind)?,
        Command::Classify => cmd_classify(cli)?,
        Command::Repr { class } => cmd_repr(cli, class)?,
        Command::Solve { bbox } => cmd_solve(cli, bbox)?,
        Command::Examples => cmd_examples()?,
        Command::VerifyTheorems { trials, fault } => cmd_verify(cli, *trials, fault)?,
    };
    let pretty = serde_json::to_string_pretty(&outcome.json)?;
    if let Some(path) = &cli.out {
        fs::write(path, format!("{pretty}\n")).with_context(|| format!("cannot write {}", path.display()))?;
    }
    if cli.json {
        println!("{pretty}");
    } else {
        println!("{}", outcome.text);
    }
    Ok(outcome.code)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
