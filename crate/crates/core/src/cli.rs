//! The `opcount` command line.
//!
//! Exit codes: 0 when every check passed, 2 when a violation was found (the
//! report is still written), 1 for usage and runtime errors.

use std::ffi::OsString;
use std::fmt::Write as _;
use std::io::Write as _;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use crate::dp::{count_fast, count_on_tree, Mode};
use crate::enumerate::{enumerate_mops, enumerate_mops_canonical};
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexConstraint};
use crate::mop::{DualTree, Mop};
use crate::oracle::{Count, Oracle};
use crate::verify::{self, RunOptions, VerifyReport};

pub const EXIT_PASS: i32 = 0;
pub const EXIT_ERROR: i32 = 1;
pub const EXIT_VIOLATION: i32 = 2;

#[derive(Parser, Debug)]
#[command(
    name = "opcount",
    version,
    about = "Count independent and k-dominating sets; verify i(G) > d4(G) on outerplanar graphs"
)]
struct Cli {
    /// Output format; counts and listings default to plain, reports to json.
    #[arg(long, value_enum, global = true)]
    format: Option<Format>,
    /// Write output here instead of standard output.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    /// Worker threads for sweeps (0 = all cores).
    #[arg(long, global = true, default_value_t = 0)]
    workers: usize,
    #[command(subcommand)]
    cmd: Command,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
    Plain,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Count independent sets or k-dominating sets of one graph.
    Count(CountArgs),
    /// Enumerate triangulations or show a weak dual.
    #[command(subcommand)]
    Mop(MopCommand),
    /// Run a verification harness and emit its report.
    #[command(subcommand)]
    Verify(VerifyCommand),
    /// Random search for counterexamples.
    #[command(subcommand)]
    Scan(ScanCommand),
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum What {
    Is,
    Kds,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum Method {
    Oracle,
    Dp,
}

#[derive(Args, Debug)]
#[command(group(clap::ArgGroup::new("input").required(true).args(["graph6", "mop"])))]
struct CountArgs {
    #[arg(long)]
    graph6: Option<String>,
    /// Triangulation in `n;a-b,c-d` form.
    #[arg(long)]
    mop: Option<String>,
    #[arg(long, value_enum, default_value = "is")]
    what: What,
    /// Domination threshold for `--what kds`.
    #[arg(long, default_value_t = 4)]
    k: usize,
    /// Defaults to dp for `--mop` and oracle for `--graph6`.
    #[arg(long, value_enum)]
    method: Option<Method>,
    /// Membership conditions such as `v+:3,v-:5` (oracle only).
    #[arg(long)]
    cond: Option<String>,
}

#[derive(Subcommand, Debug)]
enum MopCommand {
    /// List every labeled triangulation of the n-gon, or one per rotation/reflection class.
    Enumerate {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        canonical: bool,
    },
    /// Print the weak dual tree.
    Dual {
        #[arg(long)]
        mop: String,
    },
}

#[derive(Args, Debug)]
struct Sampled {
    #[arg(long, default_value_t = 10_000)]
    samples: u64,
    #[arg(long, default_value_t = 42)]
    seed: u64,
}

#[derive(Subcommand, Debug)]
enum VerifyCommand {
    Theorem1 {
        #[arg(long)]
        max_n: usize,
        /// Seed for the edge-deletion spot checks.
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    Theorem2 {
        #[arg(long)]
        max_n: usize,
    },
    Lemma1(Sampled),
    Lemma2(Sampled),
    Identities(Sampled),
    Gadgets {
        #[arg(long, default_value_t = verify::AUDIT_SEED)]
        seed: u64,
    },
}

#[derive(Subcommand, Debug)]
enum ScanCommand {
    Conjecture {
        #[arg(long)]
        k: usize,
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 1000)]
        samples: u64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

/// Parses `argv` (program name first), runs the command and returns the
/// exit code.
pub fn run<I, T>(argv: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { EXIT_ERROR } else { EXIT_PASS };
        }
    };
    let _ = env_logger::Builder::from_env(env_logger::Env::default().default_filter_or("info"))
        .target(env_logger::Target::Stderr)
        .try_init();
    match execute(&cli) {
        Ok((text, pass)) => match emit(&cli, &text) {
            Ok(()) if pass => EXIT_PASS,
            Ok(()) => EXIT_VIOLATION,
            Err(e) => {
                eprintln!("error: {e}");
                EXIT_ERROR
            }
        },
        Err(e) => {
            eprintln!("error: {e}");
            EXIT_ERROR
        }
    }
}

fn emit(cli: &Cli, text: &str) -> std::io::Result<()> {
    match &cli.out {
        Some(path) => std::fs::write(path, text),
        None => std::io::stdout().write_all(text.as_bytes()),
    }
}

fn execute(cli: &Cli) -> Result<(String, bool)> {
    let opts = RunOptions {
        workers: cli.workers,
        oracle: Oracle::from_env()?,
    };
    let listing = cli.format.unwrap_or(Format::Plain);
    let reporting = cli.format.unwrap_or(Format::Json);
    let report = match &cli.cmd {
        Command::Count(a) => return count(a, &opts.oracle, listing).map(|t| (t, true)),
        Command::Mop(MopCommand::Enumerate { n, canonical }) => {
            let mops: Vec<Mop> = if *canonical {
                enumerate_mops_canonical(*n)?.collect()
            } else {
                enumerate_mops(*n)?.collect()
            };
            return Ok((mop_listing(&mops, listing), true));
        }
        Command::Mop(MopCommand::Dual { mop }) => {
            let m: Mop = mop.parse()?;
            return Ok((dual_listing(&m.weak_dual(), listing), true));
        }
        Command::Verify(VerifyCommand::Theorem1 { max_n, seed }) => verify::check_theorem1(*max_n, *seed, &opts)?,
        Command::Verify(VerifyCommand::Theorem2 { max_n }) => verify::check_theorem2(*max_n, &opts)?,
        Command::Verify(VerifyCommand::Lemma1(s)) => verify::check_lemma1(s.samples, s.seed, &opts)?,
        Command::Verify(VerifyCommand::Lemma2(s)) => verify::check_lemma2_surgery(s.samples, s.seed, &opts)?,
        Command::Verify(VerifyCommand::Identities(s)) => {
            verify::check_decomposition_identities(s.samples, s.seed, &opts)?
        }
        Command::Verify(VerifyCommand::Gadgets { seed }) => verify::audit_gadgets(*seed, &opts)?,
        Command::Scan(ScanCommand::Conjecture { k, n, samples, seed }) => {
            verify::scan_conjecture(*k, *n, *samples, *seed, &opts)?
        }
    };
    Ok((render_report(&report, reporting), report.pass))
}

fn count(a: &CountArgs, oracle: &Oracle, format: Format) -> Result<String> {
    let mode = match a.what {
        What::Is => Mode::Is,
        What::Kds if a.k == 0 => return Err(Error::BadThreshold(0)),
        What::Kds => Mode::Kds(a.k),
    };
    let mop: Option<Mop> = a.mop.as_deref().map(str::parse).transpose()?;
    let graph = match (&mop, &a.graph6) {
        (Some(m), _) => m.graph()?,
        (None, Some(g6)) => Graph::from_graph6(g6)?,
        (None, None) => return Err(Error::Parse("one of --graph6 or --mop is required".into())),
    };
    let cond: VertexConstraint = a.cond.as_deref().map(str::parse).transpose()?.unwrap_or_default();
    let method = a
        .method
        .unwrap_or(if mop.is_some() { Method::Dp } else { Method::Oracle });
    let value: Count = match method {
        Method::Oracle => match mode {
            Mode::Is => oracle.count_is_conditioned(&graph, &cond)?,
            Mode::Kds(k) => oracle.count_kds_conditioned(&graph, k, &cond)?,
        },
        Method::Dp if !cond.is_empty() => {
            return Err(Error::Parse("--cond needs --method oracle".into()));
        }
        Method::Dp => match &mop {
            Some(m) => count_fast(m, mode)?,
            None if graph.is_tree() => count_on_tree(&graph, mode)?,
            None => return Err(Error::Parse("dp counts need --mop or a tree".into())),
        },
    };
    let what = match mode {
        Mode::Is => "is".to_string(),
        Mode::Kds(k) => format!("kds{k}"),
    };
    let method = match method {
        Method::Oracle => "oracle",
        Method::Dp => "dp",
    };
    Ok(match format {
        Format::Plain => format!("{value}\n"),
        Format::Csv => format!("what,method,count\n{what},{method},{value}\n"),
        Format::Json => format!(
            "{}\n",
            json!({"what": what, "method": method, "n": graph.n(), "count": value.to_string()})
        ),
    })
}

fn mop_listing(mops: &[Mop], format: Format) -> String {
    match format {
        Format::Json => {
            let all: Vec<String> = mops.iter().map(Mop::to_string).collect();
            format!("{}\n", json!(all))
        }
        Format::Csv => {
            let mut s = String::from("mop,graph6\n");
            for m in mops {
                let g6 = m.graph().and_then(|g| g.to_graph6()).unwrap_or_default();
                let _ = writeln!(s, "\"{m}\",{g6}");
            }
            s
        }
        Format::Plain => mops.iter().map(|m| format!("{m}\n")).collect(),
    }
}

fn dual_listing(d: &DualTree, format: Format) -> String {
    match format {
        Format::Json => format!("{}\n", serde_json::to_string_pretty(d).expect("dual serializes")),
        Format::Csv => {
            let mut s = String::from("face_a,face_b,chord\n");
            for (a, b, (u, v)) in &d.links {
                let _ = writeln!(s, "{a},{b},{u}-{v}");
            }
            s
        }
        Format::Plain => {
            let mut s = String::new();
            for (i, f) in d.faces.iter().enumerate() {
                let _ = writeln!(s, "face {i}: {} {} {} (degree {})", f[0], f[1], f[2], d.degree(i));
            }
            for (a, b, (u, v)) in &d.links {
                let _ = writeln!(s, "{a} -- {b} across {u}-{v}");
            }
            s
        }
    }
}

fn render_report(r: &VerifyReport, format: Format) -> String {
    match format {
        Format::Json => format!("{}\n", r.to_json()),
        Format::Csv => {
            let mut s = String::from("section,key,value\n");
            let _ = writeln!(s, "task,id,{}", r.task_id);
            let _ = writeln!(s, "task,pass,{}", r.pass);
            for (k, v) in &r.params {
                let _ = writeln!(s, "param,{k},{}", csv_field(&v.to_string()));
            }
            for (k, v) in &r.counts {
                let _ = writeln!(s, "count,{k},{v}");
            }
            for v in &r.violations {
                let _ = writeln!(s, "violation,{},{}", csv_field(&v.relation), v.witness.graph6);
            }
            for f in &r.findings {
                let status = match f.matches {
                    Some(true) => "match",
                    Some(false) => "mismatch",
                    None => "n/a",
                };
                let key = format!("{} {}", f.id, f.kind);
                let _ = writeln!(s, "finding,{},{status}", csv_field(&key));
            }
            s
        }
        Format::Plain => {
            let mut s = String::new();
            let verdict = if r.pass { "PASS" } else { "FAIL" };
            let _ = writeln!(s, "{} {verdict} ({} ms)", r.task_id, r.wall_time_ms);
            for (k, v) in &r.counts {
                let _ = writeln!(s, "  {k}: {v}");
            }
            for v in r.violations.iter().take(10) {
                let _ = writeln!(s, "  violation: {} on {} {:?}", v.relation, v.witness.graph6, v.values);
            }
            if r.violations.len() > 10 {
                let _ = writeln!(s, "  ... {} more violations", r.violations.len() - 10);
            }
            let mismatches = r.findings.iter().filter(|f| f.matches == Some(false)).count();
            let _ = writeln!(s, "  findings: {} ({mismatches} mismatches)", r.findings.len());
            s
        }
    }
}

fn csv_field(s: &str) -> String {
    if s.contains([',', '"', '\n']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bad_flags_are_errors() {
        assert_eq!(run(["opcount", "count", "--bogus"]), EXIT_ERROR);
        assert_eq!(
            run(["opcount", "count", "--graph6", "Bw", "--what", "nope"]),
            EXIT_ERROR
        );
        assert_eq!(run(["opcount", "verify", "theorem1", "--max-n", "99"]), EXIT_ERROR);
        assert_eq!(run(["opcount", "count", "--graph6", "???"]), EXIT_ERROR);
    }

    #[test]
    fn count_formats() {
        let a = CountArgs {
            graph6: Some("Bw".into()),
            mop: None,
            what: What::Is,
            k: 4,
            method: None,
            cond: None,
        };
        let o = Oracle::default();
        assert_eq!(count(&a, &o, Format::Plain).unwrap(), "4\n");
        assert_eq!(count(&a, &o, Format::Csv).unwrap(), "what,method,count\nis,oracle,4\n");
        let cond = CountArgs {
            cond: Some("v+:0".into()),
            ..a
        };
        assert_eq!(count(&cond, &o, Format::Plain).unwrap(), "1\n");
    }

    #[test]
    fn csv_quoting() {
        assert_eq!(csv_field("a,b"), "\"a,b\"");
        assert_eq!(csv_field("plain"), "plain");
    }
}
