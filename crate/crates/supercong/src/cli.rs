//! Command-line front end: single checks, grids, Gamma evaluations, and
//! identity fuzzing, with text/JSON/CSV rendering.
//!
//! Exit codes: 0 = everything passed (or was skipped), 1 = a mathematical
//! failure, 2 = usage error.

use crate::error::Error;
use crate::gamma::shared_table;
use crate::hyper::{weighted_sum_10, weighted_sum_6};
use crate::oracle;
use crate::padic::{is_prime, PAdicContext};
use crate::suite::{
    cross_consistency, grid_passes, run_check, run_grid, CheckId, CongruenceReport,
    ConsistencyPair, Status, ALL_CHECKS, ALL_PAIRS,
};
use clap::{Parser, Subcommand, ValueEnum};
use std::fmt::Write as _;
use std::io::Write as _;
use std::path::PathBuf;
use std::str::FromStr;

#[derive(Parser)]
#[command(
    name = "supercong",
    version,
    about = "Exact verification of hypergeometric supercongruences"
)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Subcommand)]
enum Cmd {
    /// Run one named check at a point or over a (p, r) grid
    Verify(VerifyArgs),
    /// Evaluate Gamma_p(a/b) mod p^k, with the reflection identity as a sanity line
    Gamma(GammaArgs),
    /// Evaluate a truncated weighted hypergeometric sum mod p^k
    Series(SeriesArgs),
    /// Fuzz or enumerate the standalone lemmas
    Lemma(LemmaArgs),
    /// Run every check over its default grid
    Scan(ScanArgs),
}

#[derive(Parser)]
struct VerifyArgs {
    /// Check identifier, or a registered cross-consistency pair name
    #[arg(long)]
    id: String,
    /// Single prime (point mode)
    #[arg(long, conflicts_with = "pmax")]
    p: Option<u64>,
    /// Upper bound on primes (grid mode)
    #[arg(long)]
    pmax: Option<u64>,
    /// Single r (point mode)
    #[arg(long, conflicts_with = "rmin", allow_hyphen_values = true)]
    r: Option<i64>,
    /// Lower bound on r (grid mode; the upper bound is always 1)
    #[arg(long, allow_hyphen_values = true)]
    rmin: Option<i64>,
    /// Override the statement's working precision k (modulus p^k)
    #[arg(long)]
    prec: Option<u32>,
    #[arg(long, env = "SUPERCONG_SEED", default_value_t = 0)]
    seed: u64,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Worker threads for grid evaluation (default: all cores)
    #[arg(long)]
    jobs: Option<usize>,
    /// Output file (default: standard output)
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Parser)]
struct GammaArgs {
    #[arg(long)]
    p: u64,
    /// Working precision k (modulus p^k)
    #[arg(long, default_value_t = 1)]
    prec: u32,
    /// Argument as an integer or a fraction a/b with p not dividing b
    #[arg(long, allow_hyphen_values = true)]
    x: String,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Family {
    Cubic,
    Quintic,
}

#[derive(Parser)]
struct SeriesArgs {
    /// cubic: sum (6k+r)(r/3)_k^6/(1)_k^6; quintic: sum (10k+r)(r/5)_k^5/(1)_k^5
    #[arg(long, value_enum)]
    family: Family,
    #[arg(long)]
    p: u64,
    #[arg(long, default_value_t = 1, allow_hyphen_values = true)]
    r: i64,
    #[arg(long)]
    prec: Option<u32>,
    /// Truncation point (default p-1)
    #[arg(long)]
    upper: Option<i64>,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Parser)]
struct LemmaArgs {
    /// One of: 2.1, 2.4, 2.6, 3.1
    #[arg(long)]
    id: String,
    #[arg(long, default_value_t = 100)]
    trials: usize,
    #[arg(long, env = "SUPERCONG_SEED", default_value_t = 0)]
    seed: u64,
    #[arg(long)]
    p: Option<u64>,
    #[arg(long, default_value_t = -9, allow_hyphen_values = true)]
    rmin: i64,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Parser)]
struct ScanArgs {
    #[arg(long, env = "SUPERCONG_SEED", default_value_t = 0)]
    seed: u64,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
    #[arg(long)]
    jobs: Option<usize>,
    #[arg(long)]
    out: Option<PathBuf>,
}

fn csv_escape(field: &str) -> String {
    if field.contains([',', '"', '\n']) {
        format!("\"{}\"", field.replace('"', "\"\""))
    } else {
        field.to_string()
    }
}

fn opt<T: std::fmt::Display>(x: Option<T>) -> String {
    x.map(|v| v.to_string()).unwrap_or_default()
}

fn render(reports: &[CongruenceReport], format: Format) -> String {
    let mut out = String::new();
    match format {
        Format::Text => {
            for rep in reports {
                let _ = write!(
                    out,
                    "check={} p={} r={} prec={} diff_valuation={} status={}",
                    rep.check,
                    opt(rep.p),
                    opt(rep.r),
                    rep.precision,
                    rep.diff_valuation,
                    rep.status
                );
                if let Some(reason) = &rep.reason {
                    let _ = write!(out, " reason=[{reason}]");
                } else {
                    let _ = write!(out, " lhs={} rhs={}", rep.lhs, rep.rhs);
                }
                out.push('\n');
            }
        }
        Format::Json => {
            out = serde_json::to_string_pretty(reports).expect("reports serialize");
            out.push('\n');
        }
        Format::Csv => {
            out.push_str("check,p,r,precision,diff_valuation,status,lhs,rhs\n");
            for rep in reports {
                let _ = writeln!(
                    out,
                    "{},{},{},{},{},{},{},{}",
                    rep.check,
                    opt(rep.p),
                    opt(rep.r),
                    rep.precision,
                    rep.diff_valuation,
                    rep.status,
                    csv_escape(&rep.lhs),
                    csv_escape(&rep.rhs)
                );
            }
        }
    }
    out
}

fn emit(text: &str, out: &Option<PathBuf>) -> i32 {
    match out {
        None => {
            print!("{text}");
            let _ = std::io::stdout().flush();
            0
        }
        Some(path) => match std::fs::write(path, text) {
            Ok(()) => 0,
            Err(e) => {
                eprintln!("error: cannot write {}: {e}", path.display());
                2
            }
        },
    }
}

fn usage(msg: &str) -> i32 {
    eprintln!("error: {msg}");
    2
}

fn configure_jobs(jobs: Option<usize>) {
    if let Some(n) = jobs {
        // ignore the error if a global pool already exists (tests, repeat calls)
        let _ = rayon::ThreadPoolBuilder::new().num_threads(n).build_global();
    }
}

fn exit_code_for(reports: &[CongruenceReport], id: Option<CheckId>) -> i32 {
    let ok = match id {
        Some(id) => grid_passes(id, reports),
        None => reports
            .iter()
            .all(|r| !matches!(r.status, Status::Fail | Status::ConjecturalFail)),
    };
    if ok {
        0
    } else {
        1
    }
}

fn cmd_verify(args: VerifyArgs) -> i32 {
    configure_jobs(args.jobs);
    // cross-consistency pairs share the verify entry point
    if let Ok(pair) = ConsistencyPair::from_str(&args.id) {
        return verify_pair(pair, &args);
    }
    let id = match CheckId::from_str(&args.id) {
        Ok(id) => id,
        Err(_) => {
            return usage(&format!(
                "unknown check '{}'; known checks: {}",
                args.id,
                ALL_CHECKS.map(|c| c.name()).join(", ")
            ))
        }
    };
    let (needs_p, needs_r) = id.dimensions();
    let grid_mode = args.pmax.is_some() || (args.rmin.is_some() && args.p.is_none());
    let reports = if grid_mode {
        let pmax = args.pmax.unwrap_or(if id.default_precision() >= 6 { 37 } else { 61 });
        let rmin = args.rmin.unwrap_or(-9);
        match run_grid(id, pmax, rmin, args.prec, args.seed) {
            Ok(reps) => reps,
            Err(e) => return usage(&e.to_string()),
        }
    } else {
        if needs_p && args.p.is_none() {
            return usage(&format!("{id} requires --p (or --pmax for a grid)"));
        }
        if needs_r && args.r.is_none() {
            return usage(&format!("{id} requires --r (or --rmin for a grid)"));
        }
        match run_check(id, args.p, args.r, args.prec, args.seed) {
            Ok(rep) => vec![rep],
            Err(e @ (Error::NotPrime(_) | Error::OutOfRange(_))) => return usage(&e.to_string()),
            Err(e) => {
                eprintln!("error: {e}");
                return 1;
            }
        }
    };
    let code = emit(&render(&reports, args.format), &args.out);
    if code != 0 {
        return code;
    }
    exit_code_for(&reports, Some(id))
}

fn verify_pair(pair: ConsistencyPair, args: &VerifyArgs) -> i32 {
    let mut reports = Vec::new();
    let primes: Vec<u64> = match (args.p, args.pmax) {
        (Some(p), _) => vec![p],
        (None, pm) => crate::suite::primes_up_to(pm.unwrap_or(61)),
    };
    for p in primes {
        if p == 2 {
            continue;
        }
        match cross_consistency(pair, p) {
            Ok(rep) => reports.push(rep),
            Err(e) => return usage(&e.to_string()),
        }
    }
    let code = emit(&render(&reports, args.format), &args.out);
    if code != 0 {
        return code;
    }
    exit_code_for(&reports, None)
}

fn parse_ratio(s: &str) -> Option<(i128, i128)> {
    match s.split_once('/') {
        None => s.trim().parse().ok().map(|a| (a, 1)),
        Some((a, b)) => {
            let a = a.trim().parse().ok()?;
            let b: i128 = b.trim().parse().ok()?;
            (b != 0).then_some((a, b))
        }
    }
}

fn cmd_gamma(args: GammaArgs) -> i32 {
    let Some((a, b)) = parse_ratio(&args.x) else {
        return usage(&format!("cannot parse argument '{}'", args.x));
    };
    if !is_prime(args.p) || args.p == 2 {
        return usage(&format!("p = {} must be an odd prime", args.p));
    }
    if args.prec < 1 {
        return usage("precision must be at least 1");
    }
    let result = (|| {
        let ctx = PAdicContext::new(args.p, args.prec)?;
        let tbl = shared_table(args.p, args.prec)?;
        let gx = tbl.gamma(a, b)?.value;
        let gy = tbl.gamma(b - a, b)?.value;
        let e = ctx.residue(-a, b)?.value;
        let sign = if (e + 1) % 2 == 0 { ctx.one() } else { -ctx.one() };
        let reflect_ok = gx * gy == sign;
        Ok::<_, Error>(format!(
            "{gx}\nreflection: Gamma_p(x) * Gamma_p(1-x) = {} = (-1)^{} [{}]\n",
            gx * gy,
            e + 1,
            if reflect_ok { "ok" } else { "VIOLATED" }
        ))
    })();
    match result {
        Ok(text) => emit(&text, &args.out),
        Err(e) => usage(&e.to_string()),
    }
}

fn cmd_series(args: SeriesArgs) -> i32 {
    if !is_prime(args.p) || args.p == 2 {
        return usage(&format!("p = {} must be an odd prime", args.p));
    }
    let prec = args.prec.unwrap_or(match args.family {
        Family::Cubic => 6,
        Family::Quintic => 5,
    });
    let upper = args.upper.unwrap_or(args.p as i64 - 1);
    let result = (|| {
        let ctx = PAdicContext::new(args.p, prec)?;
        let s = match args.family {
            Family::Cubic => weighted_sum_6(ctx, args.r, upper)?,
            Family::Quintic => weighted_sum_10(ctx, args.r, upper)?,
        };
        Ok::<_, Error>(format!("{s}\n"))
    })();
    match result {
        Ok(text) => emit(&text, &args.out),
        Err(e) => usage(&e.to_string()),
    }
}

fn cmd_lemma(args: LemmaArgs) -> i32 {
    if args.trials < 1 {
        return usage("--trials must be at least 1");
    }
    match args.id.as_str() {
        "2.1" => {
            let instances = oracle::sample_instances(args.trials, args.seed);
            for inst in &instances {
                let lhs = oracle::transformation_lhs(inst).expect("sampled instances are pole-free");
                let rhs = oracle::transformation_rhs(inst).expect("sampled instances are pole-free");
                if lhs != rhs {
                    let text = format!(
                        "FAIL: transformation mismatch\ninstance: {inst:?}\nlhs = {lhs}\nrhs = {rhs}\n"
                    );
                    let code = emit(&text, &args.out);
                    return if code != 0 { code } else { 1 };
                }
            }
            emit(
                &format!(
                    "verified {} transformation instances exactly (seed {})\n",
                    instances.len(),
                    args.seed
                ),
                &args.out,
            )
        }
        "2.6" => {
            let mut lines = String::new();
            let mut failed = false;
            for r in args.rmin..=1 {
                if r.rem_euclid(3) == 0 {
                    continue;
                }
                let (lhs, rhs) = oracle::symmetry_identity_sides(r);
                let ok = lhs == rhs;
                failed |= !ok;
                let _ = writeln!(
                    lines,
                    "r={r}: both sides = {lhs} [{}]",
                    if ok { "ok" } else { "VIOLATED" }
                );
            }
            let code = emit(&lines, &args.out);
            if code != 0 {
                return code;
            }
            if failed {
                1
            } else {
                0
            }
        }
        "2.4" | "3.1" => {
            let Some(p) = args.p else {
                return usage("--p is required for the cyclotomic lemmas");
            };
            if !is_prime(p) {
                return usage(&format!("p = {p} is not prime"));
            }
            let id = if args.id == "2.4" { CheckId::Lemma24 } else { CheckId::Lemma31 };
            match run_check(id, Some(p), None, None, args.seed) {
                Ok(rep) => {
                    let code = emit(&render(&[rep.clone()], Format::Text), &args.out);
                    if code != 0 {
                        return code;
                    }
                    if rep.status == Status::Fail {
                        1
                    } else {
                        0
                    }
                }
                Err(e) => usage(&e.to_string()),
            }
        }
        other => usage(&format!("unknown lemma '{other}'; known: 2.1, 2.4, 2.6, 3.1")),
    }
}

fn cmd_scan(args: ScanArgs) -> i32 {
    configure_jobs(args.jobs);
    let mut all = Vec::new();
    let mut failed = false;
    for id in ALL_CHECKS {
        let pmax = if id.default_precision() >= 6 { 37 } else { 61 };
        match run_grid(id, pmax, -9, None, args.seed) {
            Ok(reports) => {
                failed |= !grid_passes(id, &reports);
                all.extend(reports);
            }
            Err(e) => {
                eprintln!("error: {e}");
                return 1;
            }
        }
    }
    for pair in ALL_PAIRS {
        for p in crate::suite::primes_up_to(61) {
            if p == 2 {
                continue;
            }
            match cross_consistency(pair, p) {
                Ok(rep) => {
                    failed |= matches!(rep.status, Status::Fail | Status::ConjecturalFail);
                    all.push(rep);
                }
                Err(e) => {
                    eprintln!("error: {e}");
                    return 1;
                }
            }
        }
    }
    let code = emit(&render(&all, args.format), &args.out);
    if code != 0 {
        return code;
    }
    if failed {
        1
    } else {
        0
    }
}

/// Parse the process arguments and dispatch; returns the process exit code.
pub fn run() -> i32 {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return code;
        }
    };
    match cli.cmd {
        Cmd::Verify(args) => cmd_verify(args),
        Cmd::Gamma(args) => cmd_gamma(args),
        Cmd::Series(args) => cmd_series(args),
        Cmd::Lemma(args) => cmd_lemma(args),
        Cmd::Scan(args) => cmd_scan(args),
    }
}
