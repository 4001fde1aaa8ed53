//! The `uzgraph` command line.

use std::ffi::OsString;
use std::fmt::Write as _;
use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::{Instant, SystemTime, UNIX_EPOCH};

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::export::{write_csv, write_dot, write_json, VertexLabels};
use crate::graph::UzGraph;
use crate::invariants::{analyze, InvariantLimits, InvariantReport};
use crate::ring::spec::RingSpec;
use crate::ring::{RingFacts, RingLimits};
use crate::theorems::{
    sweep, verify, RingAnalysis, SweepFamily, SweepOptions, SweepRow, TheoremReport, SUMMARY_HEADER,
};

#[derive(Debug, Parser)]
#[command(
    name = "uzgraph",
    version,
    about = "Unit-zero divisor graphs of finite commutative rings"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    #[command(flatten)]
    pub options: GlobalOptions,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Units, zero divisors, ideals and the Jacobson radical of a ring.
    Info { spec: String },
    /// Export the graph of a ring.
    Build { spec: String },
    /// Compute every invariant of the graph of a ring.
    Analyze { spec: String },
    /// Check the theorem catalogue on one or more rings.
    Verify {
        #[arg(required = true)]
        specs: Vec<String>,
    },
    /// Verify a whole family: `zn LO HI`, `prime-powers LO HI`,
    /// `products LO HI`, `poly-quotients LO HI` or `table FILE`.
    Sweep {
        family: String,
        #[arg(required = true)]
        args: Vec<String>,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Dot,
    Csv,
    Json,
    Md,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum LabelMode {
    Index,
    Residues,
}

#[derive(Debug, Args)]
pub struct GlobalOptions {
    #[arg(long, global = true, env = "UZGRAPH_FORMAT")]
    pub format: Option<Format>,
    /// Write to a file instead of standard output.
    #[arg(long, global = true, env = "UZGRAPH_OUT")]
    pub out: Option<PathBuf>,
    #[arg(long, global = true, env = "UZGRAPH_LIMIT_HAMILTONIAN", default_value_t = 32, value_parser = positive)]
    pub limit_hamiltonian: usize,
    #[arg(long, global = true, env = "UZGRAPH_LIMIT_CLIQUE", default_value_t = 40, value_parser = positive)]
    pub limit_clique: usize,
    #[arg(long, global = true, env = "UZGRAPH_LIMIT_CHROMATIC", default_value_t = 40, value_parser = positive)]
    pub limit_chromatic: usize,
    #[arg(long, global = true, env = "UZGRAPH_LIMIT_INDEPENDENCE", default_value_t = 40, value_parser = positive)]
    pub limit_independence: usize,
    #[arg(long, global = true, env = "UZGRAPH_LIMIT_DOMINATION", default_value_t = 32, value_parser = positive)]
    pub limit_domination: usize,
    #[arg(long, global = true, env = "UZGRAPH_LIMIT_PLANARITY_SUBDIVISION", default_value_t = 64, value_parser = positive)]
    pub limit_planarity_subdivision: usize,
    /// Largest ring whose ideals are enumerated.
    #[arg(long, global = true, env = "UZGRAPH_LIMIT_IDEALS", default_value_t = 512, value_parser = positive)]
    pub limit_ideals: usize,
    /// Worker threads for `sweep`.
    #[arg(long, global = true, env = "UZGRAPH_JOBS", value_parser = positive)]
    pub jobs: Option<usize>,
    /// Vertex labels in DOT output.
    #[arg(long, global = true, env = "UZGRAPH_LABEL", default_value = "index")]
    pub label: LabelMode,
    /// Emit run metadata to standard error, or next to `--out` as
    /// `<out>.meta.json`.
    #[arg(long, global = true, env = "UZGRAPH_META")]
    pub meta: bool,
}

fn positive(s: &str) -> std::result::Result<usize, String> {
    match s.parse::<usize>() {
        Ok(0) => Err("must be positive".into()),
        Ok(n) => Ok(n),
        Err(e) => Err(e.to_string()),
    }
}

impl GlobalOptions {
    pub fn ring_limits(&self) -> RingLimits {
        RingLimits {
            ideal_enumeration: self.limit_ideals,
        }
    }

    pub fn invariant_limits(&self) -> InvariantLimits {
        InvariantLimits {
            hamiltonian: self.limit_hamiltonian,
            clique: self.limit_clique,
            chromatic: self.limit_chromatic,
            independence: self.limit_independence,
            domination: self.limit_domination,
            planarity_subdivision: self.limit_planarity_subdivision,
        }
    }
}

/// Exit statuses.
pub mod exit {
    pub const OK: u8 = 0;
    pub const CHECK_FAILED: u8 = 1;
    pub const USAGE: u8 = 2;
    pub const TOO_LARGE: u8 = 3;
}

/// The status an error maps to.
pub fn exit_code(e: &Error) -> u8 {
    match e {
        Error::TooLarge { .. } => exit::TOO_LARGE,
        _ => exit::USAGE,
    }
}

/// Rendered output plus whether any theorem check failed.
#[derive(Debug)]
pub struct Output {
    pub bytes: Vec<u8>,
    pub failed_checks: usize,
}

/// Runs a parsed command and renders its output without writing it.
pub fn execute(cli: &Cli) -> Result<Output> {
    let o = &cli.options;
    let mut failed_checks = 0;
    let text = match &cli.command {
        Command::Info { spec } => {
            let ring = RingSpec::parse(spec)?.build(&o.ring_limits())?;
            let facts = RingFacts::compute(&ring, &o.ring_limits())?;
            match format(o, Format::Json, &[Format::Json, Format::Md])? {
                Format::Md => info_md(&facts),
                _ => json_pretty(&facts),
            }
        }
        Command::Build { spec } => {
            let ring = RingSpec::parse(spec)?.build(&o.ring_limits())?;
            let facts = RingFacts::compute(&ring, &o.ring_limits())?;
            let g = UzGraph::build(&ring, &facts)?;
            let mut buf = Vec::new();
            match format(o, Format::Dot, &[Format::Dot, Format::Csv, Format::Json])? {
                Format::Dot => {
                    let labels = match o.label {
                        LabelMode::Index => VertexLabels::Index,
                        LabelMode::Residues => VertexLabels::Residues,
                    };
                    write_dot(&mut buf, &g, Some(&ring), labels)?
                }
                Format::Csv => write_csv(&mut buf, &g)?,
                _ => write_json(&mut buf, &g)?,
            }
            return Ok(Output {
                bytes: buf,
                failed_checks: 0,
            });
        }
        Command::Analyze { spec } => {
            let ring = RingSpec::parse(spec)?.build(&o.ring_limits())?;
            let facts = RingFacts::compute(&ring, &o.ring_limits())?;
            let report = analyze(&UzGraph::build(&ring, &facts)?, &o.invariant_limits());
            match format(o, Format::Json, &[Format::Json, Format::Csv, Format::Md])? {
                Format::Csv => csv_text(&InvariantReport::CSV_HEADER, [report.csv_row()])?,
                Format::Md => analyze_md(&report),
                _ => json_pretty(&report),
            }
        }
        Command::Verify { specs } => {
            let fmt = format(o, Format::Md, &[Format::Md, Format::Csv, Format::Json])?;
            let mut reports = Vec::new();
            for spec in specs {
                let ring = RingSpec::parse(spec)?.build(&o.ring_limits())?;
                let a = RingAnalysis::new(ring, &o.ring_limits(), &o.invariant_limits())?;
                reports.push(verify(&a, &o.ring_limits())?);
            }
            failed_checks = reports.iter().map(|r| r.failed).sum();
            match fmt {
                Format::Csv => csv_text(
                    &["ring", "check", "status", "detail"],
                    reports.iter().flat_map(|r| {
                        r.checks.iter().map(|c| {
                            vec![
                                r.ring.clone(),
                                c.id.to_string(),
                                c.verdict.label().to_string(),
                                c.verdict.detail().to_string(),
                            ]
                        })
                    }),
                )?,
                Format::Json => json_lines(&reports),
                _ => reports.iter().map(verify_md).collect::<Vec<_>>().join("\n"),
            }
        }
        Command::Sweep { family, args } => {
            let fmt = format(o, Format::Md, &[Format::Md, Format::Csv, Format::Json])?;
            let family = SweepFamily::parse(family, args)?;
            let rows = sweep(
                &family,
                &SweepOptions {
                    ring_limits: o.ring_limits(),
                    invariant_limits: o.invariant_limits(),
                    jobs: o.jobs,
                },
            )?;
            failed_checks = rows.iter().map(|r| r.theorems.failed).sum();
            match fmt {
                Format::Csv => csv_text(&SUMMARY_HEADER, rows.iter().map(SweepRow::summary))?,
                Format::Json => json_lines(&rows),
                _ => sweep_md(&rows),
            }
        }
    };
    Ok(Output {
        bytes: text.into_bytes(),
        failed_checks,
    })
}

fn format(o: &GlobalOptions, default: Format, allowed: &[Format]) -> Result<Format> {
    let f = o.format.unwrap_or(default);
    if allowed.contains(&f) {
        Ok(f)
    } else {
        let names: Vec<String> = allowed
            .iter()
            .map(|a| format!("{a:?}").to_lowercase())
            .collect();
        Err(Error::parse(
            0,
            format!(
                "--format {f:?} is not available here; use one of {}",
                names.join(", ")
            )
            .to_lowercase(),
        ))
    }
}

fn json_pretty<T: Serialize>(v: &T) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("reports serialize");
    s.push('\n');
    s
}

fn json_lines<T: Serialize>(items: &[T]) -> String {
    items
        .iter()
        .map(|v| serde_json::to_string(v).expect("reports serialize") + "\n")
        .collect()
}

fn csv_text<I>(header: &[&str], rows: I) -> Result<String>
where
    I: IntoIterator<Item = Vec<String>>,
{
    let mut w = csv::Writer::from_writer(Vec::new());
    let io = |e: csv::Error| Error::Io(e.to_string());
    w.write_record(header).map_err(io)?;
    for row in rows {
        w.write_record(&row).map_err(io)?;
    }
    let bytes = w.into_inner().map_err(|e| Error::Io(e.to_string()))?;
    Ok(String::from_utf8(bytes).expect("csv of utf-8 cells"))
}

fn md_cell(s: &str) -> String {
    s.replace('|', "\\|")
}

fn md_table(header: &[&str], rows: impl IntoIterator<Item = Vec<String>>) -> String {
    let mut s = String::new();
    let line = |cells: Vec<String>| format!("| {} |\n", cells.join(" | "));
    s += &line(header.iter().map(|h| md_cell(h)).collect());
    s += &line(header.iter().map(|_| "---".to_string()).collect());
    for row in rows {
        s += &line(row.iter().map(|c| md_cell(c)).collect());
    }
    s
}

fn info_md(f: &RingFacts) -> String {
    let list = |xs: &[usize]| {
        xs.iter()
            .map(|x| x.to_string())
            .collect::<Vec<_>>()
            .join(", ")
    };
    let mut s = format!("# {}\n\n", f.ring_label);
    let _ = writeln!(s, "- order: {}", f.order);
    let _ = writeln!(
        s,
        "- units ({}): {}",
        f.units.len(),
        list(&f.units.to_vec())
    );
    let _ = writeln!(
        s,
        "- zero divisors ({}): {}",
        f.zero_divisors.len(),
        list(&f.zero_divisors.to_vec())
    );
    let _ = writeln!(s, "- ideals: {}", f.ideals.len());
    for (k, m) in f.maximal_ideals.iter().enumerate() {
        let _ = writeln!(s, "- maximal ideal {k}: {}", list(&m.members().to_vec()));
    }
    let _ = writeln!(
        s,
        "- jacobson radical: {}",
        list(&f.jacobson.members().to_vec())
    );
    let _ = writeln!(s, "- local: {}", f.is_local);
    let _ = writeln!(s, "- field: {}", f.is_field);
    s
}

fn analyze_md(r: &InvariantReport) -> String {
    let rows = InvariantReport::CSV_HEADER
        .iter()
        .zip(r.csv_row())
        .map(|(k, v)| vec![k.to_string(), v]);
    format!(
        "# {}\n\n{}",
        r.ring,
        md_table(&["invariant", "value"], rows)
    )
}

fn verify_md(r: &TheoremReport) -> String {
    let rows = r.checks.iter().map(|c| {
        vec![
            c.id.to_string(),
            c.verdict.label().to_string(),
            c.verdict.detail().to_string(),
        ]
    });
    format!(
        "# {}\n\n{}\n{} passed, {} failed, {} skipped\n",
        r.ring,
        md_table(&["check", "status", "detail"], rows),
        r.passed,
        r.failed,
        r.skipped
    )
}

fn sweep_md(rows: &[SweepRow]) -> String {
    let total = |f: fn(&SweepRow) -> usize| rows.iter().map(f).sum::<usize>();
    format!(
        "{}\n{} rings: {} passed, {} failed, {} skipped\n",
        md_table(&SUMMARY_HEADER, rows.iter().map(SweepRow::summary)),
        rows.len(),
        total(|r| r.theorems.passed),
        total(|r| r.theorems.failed),
        total(|r| r.theorems.skipped),
    )
}

#[derive(Serialize)]
struct Meta {
    tool: &'static str,
    version: &'static str,
    args: Vec<String>,
    started_unix: u64,
    elapsed_ms: u128,
    failed_checks: usize,
}

/// Parses `args`, runs the command, writes its output and returns the exit
/// status.
pub fn run<I, T>(args: I) -> u8
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let args: Vec<OsString> = args.into_iter().map(Into::into).collect();
    let cli = match Cli::try_parse_from(&args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() {
                exit::USAGE
            } else {
                exit::OK
            };
        }
    };
    let started = SystemTime::now();
    let clock = Instant::now();
    let result = execute(&cli).and_then(|out| {
        match &cli.options.out {
            Some(path) => std::fs::write(path, &out.bytes)?,
            None => std::io::stdout().lock().write_all(&out.bytes)?,
        }
        Ok(out.failed_checks)
    });
    let status = match &result {
        Ok(0) => exit::OK,
        Ok(_) => exit::CHECK_FAILED,
        Err(e) => {
            eprintln!("uzgraph: {e}");
            exit_code(e)
        }
    };
    if cli.options.meta {
        let meta = Meta {
            tool: "uzgraph",
            version: env!("CARGO_PKG_VERSION"),
            args: args
                .iter()
                .map(|a| a.to_string_lossy().into_owned())
                .collect(),
            started_unix: started
                .duration_since(UNIX_EPOCH)
                .map_or(0, |d| d.as_secs()),
            elapsed_ms: clock.elapsed().as_millis(),
            failed_checks: *result.as_ref().unwrap_or(&0),
        };
        let text = json_pretty(&meta);
        match &cli.options.out {
            Some(path) => {
                let mut p = path.clone().into_os_string();
                p.push(".meta.json");
                if let Err(e) = std::fs::write(&p, text) {
                    eprintln!("uzgraph: {e}");
                }
            }
            None => eprint!("{text}"),
        }
    }
    status
}

pub fn main() -> ExitCode {
    ExitCode::from(run(std::env::args_os()))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn exec(args: &[&str]) -> Result<Output> {
        let cli =
            Cli::try_parse_from(std::iter::once("uzgraph").chain(args.iter().copied())).unwrap();
        execute(&cli)
    }

    fn text(args: &[&str]) -> String {
        String::from_utf8(exec(args).unwrap().bytes).unwrap()
    }

    #[test]
    fn z6_csv_edges() {
        let csv = text(&["build", "zn:6", "--format", "csv"]);
        assert_eq!(csv.lines().count(), 7);
        assert!(csv.starts_with("u,v\n"));
    }

    #[test]
    fn info_reports_units() {
        let v: serde_json::Value = serde_json::from_str(&text(&["info", "zn:15"])).unwrap();
        assert_eq!(v["units"].as_array().unwrap().len(), 8);
        assert_eq!(v["maximal_ideals"].as_array().unwrap().len(), 2);
    }

    #[test]
    fn rejects_bad_input() {
        assert!(
            Cli::try_parse_from(["uzgraph", "build", "zn:6", "--limit-hamiltonian", "0"]).is_err()
        );
        assert!(Cli::try_parse_from(["uzgraph", "build", "zn:6", "--bogus"]).is_err());
        let e = exec(&["build", "zn:6", "--format", "md"]).unwrap_err();
        assert_eq!(exit_code(&e), exit::USAGE);
        let e = exec(&["info", "zn:x"]).unwrap_err();
        assert!(matches!(e, Error::Parse { .. }));
    }

    #[test]
    fn failing_checks_are_counted() {
        let out = exec(&["verify", "zn:12", "polyq:2:x^2+x+1"]).unwrap();
        assert_eq!(out.failed_checks, 2);
        let md = String::from_utf8(out.bytes).unwrap();
        assert!(md.contains("# zn:12") && md.contains("T02-unit-sum | fail"));
    }

    #[test]
    fn sweep_markdown_escapes_pipes() {
        let md = text(&["sweep", "zn", "1", "3"]);
        assert!(md.starts_with("| ring | \\|R\\| |"));
        assert!(md.ends_with("\n3 rings: 43 passed, 0 failed, 44 skipped\n"));
    }
}
