//! Command-line front end for the `fatpoints` library.

use std::fmt::Write as _;
use std::num::NonZeroUsize;
use std::ops::RangeInclusive;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use fatpoints::conjecture::nagata_small_m;
use fatpoints::published::{self, Published};
use fatpoints::*;

/// Exit status for malformed command lines.
const EXIT_USAGE: u8 = 64;

#[derive(Debug, Parser)]
#[command(name = "fatpoints", version, about = "Certified bounds for fat points in the projective plane")]
struct Cli {
    /// Worker threads for parallel scans (default: available parallelism)
    #[arg(long, global = true, env = "FATPOINTS_JOBS")]
    jobs: Option<NonZeroUsize>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Bound alpha and/or tau for one curve configuration
    Bound(BoundArgs),
    /// Decide the Hilbert function, the Nagata inequality or the resolution
    Verify(VerifyArgs),
    /// Best bounds over a grid of curve configurations
    Search(SearchArgs),
    /// Regenerate a figure dataset
    Figure(FigureArgs),
    /// Brute-force values at random points over a prime field
    Oracle(OracleArgs),
    /// Compare computed bounds with expected and published values
    Compare(CompareArgs),
}

/// `--n`, `--m` and the optional explicit multiplicity list.
#[derive(Debug, Args)]
struct PointArgs {
    /// Number of points
    #[arg(long, required_unless_present = "mvec")]
    n: Option<i64>,

    /// Uniform multiplicity
    #[arg(long, required_unless_present = "mvec")]
    m: Option<i64>,

    /// Explicit multiplicities, overriding --m
    #[arg(long, value_delimiter = ',', num_args = 1..)]
    mvec: Option<Vec<i64>>,
}

impl PointArgs {
    fn sequence(&self) -> Result<MultiplicitySequence> {
        match (&self.mvec, self.n) {
            (Some(v), Some(n)) if n != v.len() as i64 => {
                Err(Error::InvalidArgument(format!("--n {n} does not match the {} entries of --mvec", v.len())))
            }
            (Some(v), _) => MultiplicitySequence::new(v.clone()),
            (None, Some(n)) => MultiplicitySequence::uniform(n, self.m.unwrap_or_default()),
            (None, None) => Err(Error::InvalidArgument("--n is required".into())),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Which {
    Alpha,
    Tau,
    Both,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum MethodArg {
    Algorithm,
    ThmA,
    ThmB,
    ThmC,
}

impl From<MethodArg> for Method {
    fn from(m: MethodArg) -> Method {
        match m {
            MethodArg::Algorithm => Method::Algorithm,
            MethodArg::ThmA => Method::ThmA,
            MethodArg::ThmB => Method::ThmB,
            MethodArg::ThmC => Method::ThmC,
        }
    }
}

#[derive(Debug, Args)]
struct BoundArgs {
    #[command(flatten)]
    points: PointArgs,

    /// Degree of the specialization curve
    #[arg(long)]
    d: i64,

    /// Number of points placed on the curve
    #[arg(long)]
    r: i64,

    #[arg(long, value_enum, default_value = "algorithm")]
    method: MethodArg,

    #[arg(long, value_enum, default_value = "both")]
    which: Which,

    /// Print the divisor sequence behind each algorithm bound
    #[arg(long)]
    trace: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum VerifyKind {
    Hilbert,
    Nagata,
    Resolution,
}

#[derive(Debug, Args)]
struct VerifyArgs {
    #[arg(long)]
    n: i64,

    #[arg(long)]
    m: i64,

    #[arg(long, value_enum, default_value = "hilbert")]
    kind: VerifyKind,

    /// Print the result as JSON
    #[arg(long)]
    json: bool,
}

#[derive(Debug, Args)]
struct SearchArgs {
    #[command(flatten)]
    points: PointArgs,

    /// Curve degrees to try, as `a..b` (inclusive)
    #[arg(long, value_parser = parse_range)]
    d_range: Option<RangeInclusive<i64>>,

    /// Point counts on the curve to try, as `a..b` (inclusive)
    #[arg(long, value_parser = parse_range)]
    r_range: Option<RangeInclusive<i64>>,

    /// Methods to combine (default: all)
    #[arg(long, value_enum, value_delimiter = ',', num_args = 1..)]
    methods: Option<Vec<MethodArg>>,

    /// Print the divisor sequence behind algorithm bounds
    #[arg(long, conflicts_with = "json")]
    trace: bool,

    /// Print the result as JSON
    #[arg(long)]
    json: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum FigureFormat {
    Plt,
    Csv,
    Json,
}

#[derive(Debug, Args)]
struct FigureArgs {
    /// Figure number
    #[arg(long, value_parser = clap::value_parser!(i64).range(1..=4))]
    k: i64,

    #[arg(long, default_value_t = 220)]
    topn: i64,

    #[arg(long, default_value_t = 220)]
    topm: i64,

    #[arg(long, value_enum, default_value = "plt")]
    format: FigureFormat,
}

#[derive(Debug, Args)]
struct OracleArgs {
    #[command(flatten)]
    points: PointArgs,

    /// Evaluate the Hilbert function in this degree only
    #[arg(long)]
    t: Option<i64>,

    #[arg(long, default_value_t = OracleConfig::default().prime)]
    prime: u64,

    #[arg(long, default_value_t = 0)]
    seed: u64,

    #[arg(long, default_value_t = OracleConfig::default().trials)]
    trials: u32,
}

#[derive(Debug, Args)]
struct CompareArgs {
    #[arg(long)]
    n: i64,

    #[arg(long)]
    m: i64,

    /// Methods to combine (default: the closed forms)
    #[arg(long, value_enum, value_delimiter = ',', num_args = 1..)]
    methods: Option<Vec<MethodArg>>,
}

fn parse_range(s: &str) -> std::result::Result<RangeInclusive<i64>, String> {
    let (a, b) = s.split_once("..").ok_or_else(|| format!("expected a..b, got {s:?}"))?;
    let a: i64 = a.trim().parse().map_err(|e| format!("bad range start {a:?}: {e}"))?;
    let b: i64 = b.trim().trim_start_matches('=').parse().map_err(|e| format!("bad range end {b:?}: {e}"))?;
    if a > b {
        return Err(format!("empty range {a}..{b}"));
    }
    Ok(a..=b)
}

fn methods_or(list: &Option<Vec<MethodArg>>, default: &[Method]) -> Vec<Method> {
    match list {
        Some(v) => {
            let mut out: Vec<Method> = v.iter().map(|&m| m.into()).collect();
            out.sort();
            out.dedup();
            out
        }
        None => default.to_vec(),
    }
}

fn config_label(b: &BestBound) -> String {
    match b.config {
        Some(c) => format!("{} d={} r={}", b.method, c.d(), c.r()),
        None => b.method.to_string(),
    }
}

fn push_trace(out: &mut String, label: &str, cert: &BoundCertificate) {
    let _ = writeln!(out, "{label} certificate at t={}:", cert.t_witness);
    out.push_str(&cert.format_trace());
}

fn run_bound(args: &BoundArgs) -> Result<String> {
    let mseq = args.points.sequence()?;
    let cfg = SpecializationConfig::new(mseq.n(), args.d, args.r)?;
    let method = Method::from(args.method);
    if args.trace && method != Method::Algorithm {
        return Err(Error::InvalidArgument("--trace needs --method algorithm".into()));
    }
    let want_alpha = args.which != Which::Tau;
    let want_tau = args.which != Which::Alpha;
    if method == Method::ThmC && args.which == Which::Tau {
        return Err(Error::InvalidArgument("thm-c bounds alpha only".into()));
    }
    let mode = if args.trace { TraceMode::Full } else { TraceMode::TerminalOnly };

    let mut parts = Vec::new();
    let mut traces = String::new();
    if want_alpha {
        let value = match method {
            Method::Algorithm => {
                let cert = alpha_lower_bound(&mseq, &cfg, mode)?;
                if args.trace {
                    push_trace(&mut traces, "alpha", &cert);
                }
                cert.value
            }
            Method::ThmA => thm_alpha_a(&mseq, &cfg)?,
            Method::ThmB => thm_alpha_b(&mseq, &cfg)?,
            Method::ThmC => {
                let m = mseq
                    .uniform_value()
                    .ok_or_else(|| Error::Precondition("thm-c needs uniform multiplicities".into()))?;
                thm_alpha_c(mseq.n(), m, &cfg)?
            }
            Method::Trivial => unreachable!("not selectable"),
        };
        parts.push(format!("alpha>={value}"));
    }
    if want_tau && method != Method::ThmC {
        let value = match method {
            Method::Algorithm => {
                let cert = tau_upper_bound(&mseq, &cfg, mode)?;
                if args.trace {
                    push_trace(&mut traces, "tau", &cert);
                }
                cert.value
            }
            Method::ThmA => thm_tau_a(&mseq, &cfg)?,
            Method::ThmB => thm_tau_b(&mseq, &cfg)?,
            Method::ThmC | Method::Trivial => unreachable!("handled above"),
        };
        parts.push(format!("tau<={value}"));
    }
    Ok(format!("{}\n{traces}", parts.join(" ")))
}

fn format_best(out: &mut String, bounds: &BestBounds, trace: bool) {
    let a = &bounds.alpha;
    let _ = writeln!(out, "alpha>={} ({})", a.value, config_label(a));
    match &bounds.tau {
        Some(t) => {
            let _ = writeln!(out, "tau<={} ({})", t.value, config_label(t));
        }
        None => out.push_str("tau: no certified bound\n"),
    }
    if trace {
        if let Some(c) = &a.certificate {
            push_trace(out, "alpha", c);
        }
        if let Some(c) = bounds.tau.as_ref().and_then(|t| t.certificate.as_ref()) {
            push_trace(out, "tau", c);
        }
    }
}

fn to_json<T: serde::Serialize>(v: &T) -> Result<String> {
    serde_json::to_string_pretty(v).map(|s| s + "\n").map_err(|e| Error::Internal(e.to_string()))
}

fn run_verify(args: &VerifyArgs) -> Result<String> {
    let (n, m) = (args.n, args.m);
    let mut out = String::new();
    match args.kind {
        VerifyKind::Hilbert => {
            let v = verify_hilbert(n, m, &SearchGrid::default_for(n)?)?;
            if args.json {
                return to_json(&v);
            }
            let verdict = if v.verified { "verified" } else { "not verified" };
            let _ = writeln!(out, "hilbert function of ({n};{m}) {verdict}");
            format_best(&mut out, &v.bounds, false);
            let _ = writeln!(out, "expected alpha={} tau={}", alpha_c(n, m)?, tau_c(n, m)?);
        }
        VerifyKind::Nagata => {
            let verdict = nagata_check(n, m)?;
            let small = nagata_small_m(n, m)?;
            let d = isqrt(n)?;
            let grid = SearchGrid { d: d..=d, r: 1..=n };
            let best = best_bounds(&MultiplicitySequence::uniform(n, m)?, &grid, &Method::THEOREMS)?;
            let b = best.alpha.value;
            let lhs = i128::from(b) * i128::from(b);
            let rhs = i128::from(m) * i128::from(m) * i128::from(n);
            if args.json {
                let v = serde_json::json!({
                    "verdict": verdict,
                    "small_m": small,
                    "witness": best.alpha,
                    "witness_meets_bound": lhs >= rhs,
                });
                return to_json(&v);
            }
            let word = match verdict {
                NagataVerdict::Holds => "holds",
                NagataVerdict::NotCovered => "not covered",
                NagataVerdict::KnownSquare => "known (n is a square)",
            };
            let _ = writeln!(out, "nagata bound for ({n};{m}): {word}");
            let _ = writeln!(out, "small-m criterion: {}", if small { "yes" } else { "no" });
            let cmp = if lhs >= rhs { ">=" } else { "<" };
            let _ = writeln!(out, "witness alpha>={b} ({}), {b}^2 {cmp} {m}^2*{n}", config_label(&best.alpha));
        }
        VerifyKind::Resolution => {
            let expected = conjectural_resolution(n, m)?;
            let case = resolution_cases(n, m)?;
            if args.json {
                let v = serde_json::json!({
                    "determined": case.is_some(),
                    "case": case.map(|(c, _)| c),
                    "resolution": expected,
                });
                return to_json(&v);
            }
            match case {
                Some((case, res)) => {
                    let _ = writeln!(out, "resolution of ({n};{m}) determined by {case}");
                    let _ = writeln!(out, "{res}");
                }
                None => {
                    let _ = writeln!(out, "resolution of ({n};{m}) not covered; expected values follow");
                    let _ = writeln!(out, "{expected}");
                }
            }
        }
    }
    Ok(out)
}

fn run_search(args: &SearchArgs) -> Result<String> {
    let mseq = args.points.sequence()?;
    let default = SearchGrid::default_for(mseq.n())?;
    let grid =
        SearchGrid { d: args.d_range.clone().unwrap_or(default.d), r: args.r_range.clone().unwrap_or(default.r) };
    let best = best_bounds(&mseq, &grid, &methods_or(&args.methods, &Method::SEARCHABLE))?;
    if args.json {
        return to_json(&best);
    }
    let mut out = String::new();
    format_best(&mut out, &best, args.trace);
    Ok(out)
}

fn run_figure(args: &FigureArgs) -> Result<String> {
    let runs = figure_dataset(args.k, args.topn, args.topm)?;
    Ok(match args.format {
        FigureFormat::Plt => format_plt(&runs),
        FigureFormat::Csv => format_csv(&runs),
        FigureFormat::Json => format_json(&runs),
    })
}

fn run_oracle(args: &OracleArgs) -> Result<String> {
    let cfg = OracleConfig { prime: args.prime, seed: args.seed, trials: args.trials };
    let mseq = args.points.sequence()?;
    let n = mseq.n();
    match args.t {
        Some(t) => {
            let h = oracle_hilbert(&mseq, t, &cfg)?;
            let conditions = mseq.condition_count()?;
            let expected = (binom2(t + 2)? - conditions).max(0);
            Ok(format!("h({t})={h} expected={expected}\n"))
        }
        None => {
            let m = mseq.uniform_value().ok_or_else(|| {
                Error::InvalidArgument("alpha and tau need uniform multiplicities; pass --t for --mvec".into())
            })?;
            let (a, t) = (oracle_alpha(n, m, &cfg)?, oracle_tau(n, m, &cfg)?);
            Ok(format!("alpha={a} tau={t} expected alpha={} tau={}\n", alpha_c(n, m)?, tau_c(n, m)?))
        }
    }
}

fn push_row(out: &mut String, name: &str, value: i64, source: &str) {
    let _ = writeln!(out, "{name:<10} {value:>8}  {source}");
}

fn run_compare(args: &CompareArgs) -> Result<String> {
    let (n, m) = (args.n, args.m);
    let mseq = MultiplicitySequence::uniform(n, m)?;
    let methods = methods_or(&args.methods, &Method::THEOREMS);
    let best = best_bounds(&mseq, &SearchGrid::default_for(n)?, &methods)?;
    let mut out = String::new();
    push_row(&mut out, "alpha_c", alpha_c(n, m)?, "expected");
    push_row(&mut out, "tau_c", tau_c(n, m)?, "expected");
    push_row(&mut out, "alpha>=", best.alpha.value, &config_label(&best.alpha));
    match &best.tau {
        Some(t) => push_row(&mut out, "tau<=", t.value, &config_label(t)),
        None => out.push_str("tau<=         none  no method applies\n"),
    }
    let root = isqrt(m.checked_mul(m).and_then(|x| x.checked_mul(n)).ok_or(Error::Overflow("m^2 n"))?)?;
    push_row(&mut out, "alpha>=", root + 1, "floor(m sqrt n) + 1");
    let (alpha_pub, tau_pub) = published::for_pair(n, m);
    let rows = |out: &mut String, name: &str, list: &[Published]| {
        for p in list {
            push_row(out, name, p.value, &format!("published ({})", p.source));
        }
    };
    rows(&mut out, "alpha>=", alpha_pub);
    rows(&mut out, "tau<=", tau_pub);
    Ok(out)
}

fn run(cli: &Cli) -> Result<String> {
    match &cli.command {
        Command::Bound(a) => run_bound(a),
        Command::Verify(a) => run_verify(a),
        Command::Search(a) => run_search(a),
        Command::Figure(a) => run_figure(a),
        Command::Oracle(a) => run_oracle(a),
        Command::Compare(a) => run_compare(a),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { ExitCode::from(EXIT_USAGE) } else { ExitCode::SUCCESS };
        }
    };
    if let Some(jobs) = cli.jobs {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(jobs.get()).build_global() {
            eprintln!("error: cannot start {jobs} worker threads: {e}");
            return ExitCode::from(1);
        }
    }
    match run(&cli) {
        Ok(out) => {
            print!("{out}");
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("error: {e}");
            match e {
                Error::Internal(_) => ExitCode::from(1),
                _ => ExitCode::from(2),
            }
        }
    }
}
