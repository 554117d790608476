//! Command-line front end. [`run`] parses arguments, writes the report and
//! returns the process exit code: 0 on success, 1 when a verification
//! fails, 2 on bad input.

use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use crate::groupspec::{analyze, order_polynomial, FixedStructure, GroupSpec};
use crate::partitions::{GroupType, Partition};
use crate::permwreath::{Perm, DEFAULT_CAP};
use crate::twistmult::{m_table, LeviDatum, LeviLabel, LeviSpec};
use crate::unipotent::unipotent_labels;
use crate::verify::{run_suite, SuiteOptions, SuiteReport, SUITES};

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum OutFormat {
    Tsv,
    Json,
}

#[derive(Debug, Parser)]
#[command(name = "wreathchar", version, about = "Unipotent labels and twisted multiplicities for wreath products of GL_n and GU_n")]
pub struct Cli {
    /// GroupSpec JSON file.
    #[arg(long, global = true)]
    pub spec: Option<PathBuf>,
    /// Output format (default: tsv, json for mtable).
    #[arg(long, value_enum, global = true)]
    pub out: Option<OutFormat>,
    /// Seed for randomized suites.
    #[arg(long, default_value_t = 0, global = true)]
    pub seed: u64,
    /// Upper bound on enumerated group orders.
    #[arg(long, default_value_t = DEFAULT_CAP, global = true)]
    pub cap: usize,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Orbits of sigma, their groups and the order polynomial.
    Analyze,
    /// Unipotent labels with signs and degrees.
    Labels {
        /// Value of q for the numeric degree column.
        #[arg(long, default_value_t = 2)]
        q: i64,
    },
    /// Twisted induction multiplicities for a Levi datum.
    Mtable {
        /// LeviSpec JSON, inline or as a file path.
        #[arg(long)]
        levi: String,
        /// Levi character: `[2];[1]/[1]` (points by `;`, blocks by `/`) or nested JSON.
        #[arg(long)]
        lambda: String,
        /// Element of A_L as a JSON image list; identity if omitted.
        #[arg(long)]
        a: Option<String>,
    },
    /// Run a verification suite (or `all`).
    Verify { suite: String },
    /// Degrees of all unipotent labels and the group order at `q`.
    Degrees { q: i64 },
}

#[derive(Debug)]
enum Failure {
    Input(String),
    Io(std::io::Error),
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure::Io(e)
    }
}

fn input<E: std::fmt::Display>(e: E) -> Failure {
    Failure::Input(e.to_string())
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = if e.use_stderr() {
                write!(err, "{e}")
            } else {
                write!(out, "{e}")
            };
            return code;
        }
    };
    match execute(&cli, out) {
        Ok(code) => code,
        Err(Failure::Input(m)) => {
            let _ = writeln!(err, "error: {m}");
            2
        }
        Err(Failure::Io(e)) => {
            let _ = writeln!(err, "error: {e}");
            2
        }
    }
}

fn load_spec(path: &Path) -> Result<GroupSpec, Failure> {
    let text = std::fs::read_to_string(path).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))?;
    GroupSpec::from_json(&text).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))
}

fn required_spec(cli: &Cli) -> Result<GroupSpec, Failure> {
    match &cli.spec {
        Some(p) => load_spec(p),
        None => Err(Failure::Input("--spec is required for this command".into())),
    }
}

fn structure(cli: &Cli) -> Result<FixedStructure, Failure> {
    let s = analyze(&required_spec(cli)?).map_err(input)?;
    let size = s.wf_order().saturating_mul(s.af.order());
    if size > cli.cap {
        return Err(Failure::Input(format!("|W°F x A^F| = {size} exceeds --cap {}", cli.cap)));
    }
    Ok(s)
}

fn emit_json(out: &mut dyn Write, mut v: Value) -> Result<(), Failure> {
    if let Value::Object(map) = &mut v {
        map.insert("schema".into(), json!(1));
    }
    writeln!(out, "{}", serde_json::to_string_pretty(&v).map_err(input)?)?;
    Ok(())
}

fn execute(cli: &Cli, out: &mut dyn Write) -> Result<i32, Failure> {
    let fmt = |default: OutFormat| cli.out.unwrap_or(default);
    match &cli.command {
        Command::Analyze => {
            let s = structure(cli)?;
            analyze_report(&s, fmt(OutFormat::Tsv), out)?;
            Ok(0)
        }
        Command::Labels { q } => {
            let s = structure(cli)?;
            labels_report(&s, *q, fmt(OutFormat::Tsv), out)?;
            Ok(0)
        }
        Command::Degrees { q } => {
            let s = structure(cli)?;
            degrees_report(&s, *q, fmt(OutFormat::Tsv), out)?;
            Ok(0)
        }
        Command::Mtable { levi, lambda, a } => {
            let s = structure(cli)?;
            let text = if levi.trim_start().starts_with('{') {
                levi.clone()
            } else {
                std::fs::read_to_string(levi).map_err(|e| Failure::Input(format!("{levi}: {e}")))?
            };
            let ls: LeviSpec = serde_json::from_str(&text).map_err(input)?;
            let datum = LeviDatum::new(&s, &ls).map_err(input)?;
            let lambda = parse_levi_label(lambda)?;
            let a = match a {
                Some(t) => t.parse::<Perm>().map_err(input)?,
                None => Perm::identity(s.degree()),
            };
            let table = m_table(&datum, &lambda, &a).map_err(input)?;
            match fmt(OutFormat::Json) {
                OutFormat::Json => emit_json(out, table.to_json())?,
                OutFormat::Tsv => {
                    writeln!(out, "eta\teta_a\tm")?;
                    for e in &table.entries {
                        writeln!(out, "{}\t{}\t{}", e.eta, e.eta_a, e.m)?;
                    }
                }
            }
            Ok(0)
        }
        Command::Verify { suite } => {
            let spec = match &cli.spec {
                Some(p) => Some(load_spec(p)?),
                None => None,
            };
            let opts = SuiteOptions {
                spec,
                seed: cli.seed,
                cap: cli.cap,
            };
            let names: Vec<&str> = if suite == "all" { SUITES.to_vec() } else { vec![suite.as_str()] };
            let mut reports = Vec::new();
            for name in names {
                reports.push(run_suite(name, &opts).map_err(input)?);
            }
            verify_report(&reports, fmt(OutFormat::Tsv), out)?;
            Ok(if reports.iter().all(SuiteReport::passed) { 0 } else { 1 })
        }
    }
}

/// `[2];[1]/[1]` or `[[[2]],[[1],[1]]]`.
fn parse_levi_label(text: &str) -> Result<LeviLabel, Failure> {
    let t = text.trim();
    if t.starts_with("[[") {
        return serde_json::from_str(t).map_err(input);
    }
    let mut rows = Vec::new();
    for point in t.split(';') {
        let mut row = Vec::new();
        for block in point.split('/') {
            row.push(block.trim().parse::<Partition>().map_err(input)?);
        }
        rows.push(row);
    }
    Ok(LeviLabel(rows))
}

fn kind_name(k: GroupType) -> &'static str {
    match k {
        GroupType::Linear => "linear",
        GroupType::Unitary => "unitary",
    }
}

fn analyze_report(s: &FixedStructure, fmt: OutFormat, out: &mut dyn Write) -> Result<(), Failure> {
    let order = order_polynomial(s);
    match fmt {
        OutFormat::Json => {
            let orbits: Vec<Value> = s
                .orbits
                .iter()
                .enumerate()
                .map(|(i, o)| {
                    json!({
                        "orbit": i,
                        "factor": o.factor,
                        "points": o.points,
                        "n": o.n,
                        "length": o.length(),
                        "kind": kind_name(o.kind),
                        "group": o.to_string(),
                    })
                })
                .collect();
            emit_json(
                out,
                json!({
                    "command": "analyze",
                    "orbits": orbits,
                    "af_order": s.af.order(),
                    "af_generators": s.af.generators(),
                    "order_polynomial": order.to_string(),
                }),
            )
        }
        OutFormat::Tsv => {
            writeln!(out, "orbit\tfactor\tpoints\tn\tlength\tkind\tgroup")?;
            for (i, o) in s.orbits.iter().enumerate() {
                let pts: Vec<String> = o.points.iter().map(usize::to_string).collect();
                writeln!(
                    out,
                    "{i}\t{}\t{}\t{}\t{}\t{}\t{o}",
                    o.factor,
                    pts.join(","),
                    o.n,
                    o.length(),
                    kind_name(o.kind)
                )?;
            }
            writeln!(out, "# |A^F| = {}", s.af.order())?;
            writeln!(out, "# order = {order}")?;
            Ok(())
        }
    }
}

fn labels_report(s: &FixedStructure, q: i64, fmt: OutFormat, out: &mut dyn Write) -> Result<(), Failure> {
    let labels = unipotent_labels(s).map_err(input)?;
    match fmt {
        OutFormat::Json => {
            let rows: Vec<Value> = labels
                .iter()
                .enumerate()
                .map(|(i, l)| {
                    json!({
                        "id": i,
                        "eta": l.eta.to_string(),
                        "xi": l.xi.to_string(),
                        "sign": l.sign,
                        "degree": l.degree.to_string(),
                        "degree_at_q": l.degree.eval_i64(q).to_string(),
                    })
                })
                .collect();
            emit_json(out, json!({"command": "labels", "q": q, "labels": rows}))
        }
        OutFormat::Tsv => {
            writeln!(out, "id\teta\txi\tsign\tdegree\tdegree_at_q={q}")?;
            for (i, l) in labels.iter().enumerate() {
                writeln!(out, "{i}\t{}\t{}\t{}\t{}\t{}", l.eta, l.xi, l.sign, l.degree, l.degree.eval_i64(q))?;
            }
            Ok(())
        }
    }
}

fn degrees_report(s: &FixedStructure, q: i64, fmt: OutFormat, out: &mut dyn Write) -> Result<(), Failure> {
    let labels = unipotent_labels(s).map_err(input)?;
    let order = order_polynomial(s).eval_i64(q);
    match fmt {
        OutFormat::Json => {
            let rows: Vec<Value> = labels
                .iter()
                .map(|l| json!({"eta": l.eta.to_string(), "xi": l.xi.to_string(), "degree": l.degree.eval_i64(q).to_string()}))
                .collect();
            emit_json(out, json!({"command": "degrees", "q": q, "order": order.to_string(), "degrees": rows}))
        }
        OutFormat::Tsv => {
            writeln!(out, "eta\txi\tdegree")?;
            for l in &labels {
                writeln!(out, "{}\t{}\t{}", l.eta, l.xi, l.degree.eval_i64(q))?;
            }
            writeln!(out, "# order = {order}")?;
            Ok(())
        }
    }
}

fn verify_report(reports: &[SuiteReport], fmt: OutFormat, out: &mut dyn Write) -> Result<(), Failure> {
    match fmt {
        OutFormat::Json => {
            let suites: Vec<Value> = reports
                .iter()
                .map(|r| json!({"suite": r.suite, "passed": r.passed(), "checks": r.checks}))
                .collect();
            emit_json(
                out,
                json!({"command": "verify", "passed": reports.iter().all(SuiteReport::passed), "suites": suites}),
            )
        }
        OutFormat::Tsv => {
            writeln!(out, "suite\tcheck\tstatus\tdetail")?;
            for r in reports {
                for c in &r.checks {
                    let status = if c.passed { "pass" } else { "FAIL" };
                    writeln!(out, "{}\t{}\t{status}\t{}", r.suite, c.name, c.detail)?;
                }
            }
            Ok(())
        }
    }
}
