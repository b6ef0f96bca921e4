use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::Context;
use clap::{Parser, Subcommand};
use unavoid::suites::{default_m_max, run_suite, SuiteError, SUITES};
use unavoid::sweep::{run_sweep, summarize, SweepConfig};
use unavoid::{format_set, parse_set};
use unavoid_core::decide::{decide, decide_bounded_period, decide_exact, AvoidMethod, UnavoidMethod, Verdict, WindowGraphConfig};
use unavoid_core::patterns::{eval_condition, match_families, registry, Instance, MatchOptions, Target};
use unavoid_core::reductions::{expand, factoring, hole_truncation, parse_operation, prefix_suffix_all, Operation, ReductionTrace, WitnessRule};
use unavoid_core::theory::{min_holes, ConjectureInstance, TopBottomInstance};
use unavoid_core::{PartialWord, WordSet};

const EXIT_USAGE: u8 = 64;
const EXIT_IO: u8 = 74;
const EXIT_SOFTWARE: u8 = 70;

#[derive(Parser)]
#[command(name = "unavoid", version, about = "Avoidability of finite sets of partial words")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Decide whether the set in FILE is avoidable.
    Decide {
        file: PathBuf,
        /// Largest period tried by the search; defaults to 2L-1 for the longest word length L.
        #[arg(long)]
        period_max: Option<usize>,
        /// Use only the exact window-graph decider.
        #[arg(long)]
        exact: bool,
        #[arg(long, env = "UNAVOID_MAX_NODES", default_value_t = WindowGraphConfig::DEFAULT_MAX_NODES)]
        max_nodes: u64,
    },
    /// Print the conjecture set (or with --eq2 the top-bottom set) for (m, x1, y1).
    X2 {
        #[arg(long)]
        m: usize,
        #[arg(long)]
        x1: usize,
        #[arg(long, default_value_t = 0)]
        y1: usize,
        #[arg(long)]
        eq2: bool,
    },
    /// Print the top-bottom set for (m, x1, y1).
    X2eq2 {
        #[arg(long)]
        m: usize,
        #[arg(long)]
        x1: usize,
        #[arg(long, default_value_t = 0)]
        y1: usize,
    },
    /// Decide every conjecture-region instance up to --m-max, or summarize a records file.
    Sweep {
        #[arg(long, default_value_t = 3)]
        m_min: usize,
        #[arg(long, required_unless_present = "summarize")]
        m_max: Option<usize>,
        #[arg(long, required_unless_present = "summarize")]
        out: Option<PathBuf>,
        #[arg(long)]
        resume: bool,
        /// Worker threads; 0 means one per core.
        #[arg(long, default_value_t = 0)]
        jobs: usize,
        /// Record per-instance wall time (records then differ between runs).
        #[arg(long)]
        timings: bool,
        /// Recount and spot-check an existing records file instead of running.
        #[arg(long, conflicts_with_all = ["out", "resume"])]
        summarize: Option<PathBuf>,
        /// Fraction of certificates re-checked by --summarize.
        #[arg(long, default_value_t = 0.01)]
        sample: f64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Run a verification suite; `verify list` shows them.
    Verify {
        suite: String,
        #[arg(long)]
        m_max: Option<usize>,
    },
    /// Minimum total holes of an unavoidable k + C(k,2) element m-uniform set.
    Holes {
        #[arg(long)]
        k: usize,
        #[arg(long)]
        m: usize,
    },
    /// Apply set operations in order and print the result with its trace.
    ///
    /// OPS is comma-separated: factoring, prefix-suffix, hole-truncation,
    /// expansion (first hole of the first word with one) or
    /// expansion:WORD@POS[+POS...] with 0-based positions.
    Reduce {
        file: PathBuf,
        #[arg(long, value_delimiter = ',')]
        ops: Vec<String>,
        /// Prefix-suffix witness rule: literal (v may be the shortened word) or strict.
        #[arg(long, default_value = "literal")]
        witness: String,
    },
}

/// An error with the exit code it maps to.
struct Failure(u8, anyhow::Error);

impl<E: Into<anyhow::Error>> From<E> for Failure {
    fn from(e: E) -> Self {
        Failure(EXIT_SOFTWARE, e.into())
    }
}

fn usage(e: impl Into<anyhow::Error>) -> Failure {
    Failure(EXIT_USAGE, e.into())
}

fn read_set(path: &PathBuf) -> Result<WordSet, Failure> {
    let text = std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display())).map_err(|e| Failure(EXIT_IO, e))?;
    parse_set(&text).map_err(|e| usage(anyhow::anyhow!("{}: {e}", path.display())))
}

fn verdict_code(v: &Verdict) -> u8 {
    match v {
        Verdict::Avoidable(_) => 0,
        Verdict::Unavoidable(_) => 1,
        Verdict::Unknown { .. } => 2,
    }
}

fn method(v: &Verdict) -> String {
    match v {
        Verdict::Avoidable(c) => match c.method() {
            AvoidMethod::WindowGraph => "window-graph".into(),
            AvoidMethod::PeriodSearch => "period-search".into(),
            AvoidMethod::Pattern(p) => format!("pattern {p}"),
        },
        Verdict::Unavoidable(UnavoidMethod::WindowGraph) => "window-graph".into(),
        Verdict::Unavoidable(UnavoidMethod::Trivial) => "trivial".into(),
        Verdict::Unavoidable(UnavoidMethod::Theorem(t)) => format!("theorem {t}"),
        Verdict::Unknown { .. } => "period-search".into(),
    }
}

fn cmd_decide(file: &PathBuf, period_max: Option<usize>, exact: bool, max_nodes: u64) -> Result<u8, Failure> {
    let x = read_set(file)?;
    let cfg = WindowGraphConfig::new(max_nodes);
    let bound = period_max.unwrap_or(2 * x.max_len() - 1);
    let v = if exact {
        match decide_exact(&x, &cfg) {
            Ok(v) => v,
            Err(unavoid_core::Error::WindowTooLarge { needed, cap }) => {
                println!("Unknown (window graph needs {needed} nodes, cap is {cap})");
                return Ok(2);
            }
            Err(e) => return Err(e.into()),
        }
    } else if period_max.is_some() && !cfg.fits(&x) {
        decide_bounded_period(&x, bound)
    } else {
        decide(&x, bound, &cfg)
    };
    println!("{v}");
    println!("method: {}", method(&v));
    Ok(verdict_code(&v))
}

fn cmd_x2(m: usize, x1: usize, y1: usize, eq2: bool) -> Result<u8, Failure> {
    let at = Instance { m, x1, y1 };
    if eq2 {
        let inst = TopBottomInstance::new(m, x1, y1).map_err(usage)?;
        println!("# top-bottom set (m={m}, x1={x1}, x2={}, y1={y1}, y2={})", inst.x2(), inst.y2());
        for f in registry().iter().filter(|f| f.target == Target::TopBottom) {
            if let Some(p) = eval_condition(f, at) {
                let shown = if p.values().is_empty() { String::new() } else { format!(" ({p})") };
                println!("# row {}{shown}: {}", f.id, f.word(&p, at));
            }
        }
        print!("{}", format_set(&inst.set()));
    } else {
        let inst = ConjectureInstance::new(m, x1, y1).map_err(usage)?;
        println!("# conjecture set (m={m}, x1={x1}, x2={}, y1={y1}, y2={})", inst.x2(), inst.y2());
        println!("# region={}", inst.in_conjecture_region());
        let report = match_families(inst, MatchOptions::default())?;
        for hit in &report.matches {
            let params = hit.params.as_ref().filter(|p| !p.values().is_empty()).map(|p| format!(" ({p})")).unwrap_or_default();
            println!("# match {}{params}: {}", hit.family, hit.word);
        }
        if report.uncovered() {
            println!("# match none");
        }
        print!("{}", format_set(&inst.set()));
    }
    Ok(0)
}

#[allow(clippy::too_many_arguments)]
fn cmd_sweep(
    m_min: usize,
    m_max: Option<usize>,
    out: Option<PathBuf>,
    resume: bool,
    jobs: usize,
    timings: bool,
    summary: Option<PathBuf>,
    sample: f64,
    seed: u64,
) -> Result<u8, Failure> {
    let report = if let Some(path) = summary {
        summarize(&path, sample, seed)?
    } else {
        let cfg = SweepConfig {
            m_lo: m_min,
            m_hi: m_max.expect("required by clap"),
            out: out.expect("required by clap"),
            resume,
            jobs,
            timings,
        };
        if cfg.m_lo < 3 || cfg.m_lo > cfg.m_hi {
            return Err(usage(anyhow::anyhow!("bad m range {}..={}", cfg.m_lo, cfg.m_hi)));
        }
        run_sweep(&cfg)?
    };
    print!("{report}");
    if report.unknown > 0 {
        println!("WARNING: {} instances have no avoider with period below 2m", report.unknown);
        return Ok(2);
    }
    Ok(0)
}

fn cmd_verify(suite: &str, m_max: Option<usize>) -> Result<u8, Failure> {
    if suite == "list" {
        for (id, about, m) in SUITES {
            println!("{id}\t(default --m-max {m})\t{about}");
        }
        return Ok(0);
    }
    let m = m_max.or_else(|| default_m_max(suite)).unwrap_or(0);
    match run_suite(suite, m) {
        Ok(outcome) => {
            print!("{outcome}");
            Ok(if outcome.passed() { 0 } else { 1 })
        }
        Err(SuiteError::Unknown(s)) => Err(usage(anyhow::anyhow!("unknown suite {s:?}; try `unavoid verify list`"))),
        Err(e) => Err(e.into()),
    }
}

fn apply_op(x: &WordSet, op: &str, rule: WitnessRule) -> Result<(WordSet, ReductionTrace), Failure> {
    if let Some(arg) = op.strip_prefix("expansion:") {
        let (word, pos) = arg.split_once('@').ok_or_else(|| usage(anyhow::anyhow!("expected expansion:WORD@POS, got {op:?}")))?;
        let w: PartialWord = word.parse().map_err(usage)?;
        let positions = pos.split('+').map(|p| p.parse::<usize>()).collect::<Result<Vec<_>, _>>().map_err(usage)?;
        return expand(x, &w, &positions).map_err(usage);
    }
    Ok(match parse_operation(op).map_err(usage)? {
        Operation::Factoring => factoring(x),
        Operation::PrefixSuffix => prefix_suffix_all(x, rule),
        Operation::HoleTruncation => hole_truncation(x),
        Operation::Expansion => {
            let Some(w) = x.iter().find(|w| w.hole_count() > 0) else {
                return Ok((x.clone(), ReductionTrace::new()));
            };
            let p = w.hole_positions().next().expect("has a hole");
            expand(x, w, &[p]).map_err(usage)?
        }
    })
}

fn cmd_reduce(file: &PathBuf, ops: &[String], witness: &str) -> Result<u8, Failure> {
    let rule = match witness {
        "literal" => WitnessRule::Literal,
        "strict" => WitnessRule::Strict,
        _ => return Err(usage(anyhow::anyhow!("unknown witness rule {witness:?}"))),
    };
    let mut x = read_set(file)?;
    let mut trace = ReductionTrace::new();
    for op in ops {
        let (y, t) = apply_op(&x, op.trim(), rule)?;
        x = y;
        trace.extend(t);
    }
    print!("{}", format_set(&x));
    println!("# trace: {} steps", trace.len());
    for s in &trace.steps {
        println!("# {s}");
    }
    Ok(0)
}

fn run(cli: Cli) -> Result<u8, Failure> {
    match cli.command {
        Command::Decide { file, period_max, exact, max_nodes } => cmd_decide(&file, period_max, exact, max_nodes),
        Command::X2 { m, x1, y1, eq2 } => cmd_x2(m, x1, y1, eq2),
        Command::X2eq2 { m, x1, y1 } => cmd_x2(m, x1, y1, true),
        Command::Sweep {
            m_min,
            m_max,
            out,
            resume,
            jobs,
            timings,
            summarize,
            sample,
            seed,
        } => cmd_sweep(m_min, m_max, out, resume, jobs, timings, summarize, sample, seed),
        Command::Verify { suite, m_max } => cmd_verify(&suite, m_max),
        Command::Holes { k, m } => {
            println!("{}", min_holes(k, m).map_err(usage)?);
            Ok(0)
        }
        Command::Reduce { file, ops, witness } => cmd_reduce(&file, &ops, &witness),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(Failure(code, e)) => {
            eprintln!("error: {e:#}");
            ExitCode::from(code)
        }
    }
}
