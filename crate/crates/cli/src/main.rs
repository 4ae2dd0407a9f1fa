//! `borsuk` — lower bounds on Borsuk numbers of `l_p` spaces.
//!
//! Subcommands: `bound` (one certificate), `search` (best certificate for a
//! target dimension), `curve` (the asymptotic constant c(p)), `corollary2`
//! (the 422-part bound in dimension 406 and its exponent threshold), and
//! `verify` (the brute-force oracle suite).
//!
//! Exit codes: 0 success, 1 usage or I/O error, 2 valid input without a
//! result (hypothesis rejection, infeasibility, or failed verification).

mod render;

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use borsuk_core::asymptotic::{curve_csv, emit_curve, reference_p_grid};
use borsuk_core::bound::{search_ranked, theorem1_bound, LambdaGrid};
use borsuk_core::lifting::{Lambda, LiftedConfiguration, Parameters};
use borsuk_core::oracle::{run_suite, Corruption, Scope, SuiteConfig};

const EXIT_NO_RESULT: u8 = 2;

#[derive(Parser)]
#[command(
    name = "borsuk",
    version,
    about = "Certified lower bounds on Borsuk numbers of l_p spaces",
    after_help = "Exit codes: 0 success, 1 usage/IO error, 2 no result (rejection or failure)."
)]
struct Cli {
    /// Optional `key = value` config file (keys: jobs, seed, census_trials,
    /// enum_cap). Command-line flags override file values.
    #[arg(long, global = true, value_name = "FILE")]
    config: Option<PathBuf>,

    /// Worker threads for search grids and curve batches.
    #[arg(long, short = 'j', global = true, value_name = "N")]
    jobs: Option<usize>,

    /// Write the primary artifact (table/CSV/record) to this file atomically
    /// instead of standard output.
    #[arg(long, short = 'o', global = true, value_name = "FILE")]
    output: Option<PathBuf>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate one bound certificate for explicit (n, k, p, lambda).
    Bound(BoundArgs),
    /// Best certificate over k and a lambda grid for a target dimension.
    Search(SearchArgs),
    /// The asymptotic constant c(p) over a grid of exponents.
    Curve(CurveArgs),
    /// Sweep p for the (29, 9, -1/3) instance and report the t1 = 4
    /// threshold (the 422-part bound in dimension 406).
    Corollary2(SweepArgs),
    /// Run the brute-force oracle suite, or dump/check a lifted
    /// configuration file.
    Verify(VerifyArgs),
}

#[derive(Args)]
struct BoundArgs {
    #[arg(short = 'n', long)]
    n: u32,
    #[arg(short = 'k', long)]
    k: u32,
    #[arg(short = 'p', long, allow_hyphen_values = true)]
    p: f64,
    /// Shift parameter; exact rationals (`-1/3`) or decimals (`-0.25`).
    #[arg(long, allow_hyphen_values = true)]
    lambda: String,
    #[command(flatten)]
    format: FormatArgs,
}

#[derive(Args)]
struct SearchArgs {
    /// Target dimension; the largest n with C(n,2) <= d is used.
    #[arg(short = 'd', long)]
    d: u64,
    #[arg(short = 'p', long, allow_hyphen_values = true)]
    p: f64,
    /// Lambda grid: values -j/(2m) for j = 0..=m.
    #[arg(long, default_value_t = 512, value_name = "M")]
    lambda_steps: u32,
    /// How many ranked candidates to show.
    #[arg(long, default_value_t = 10)]
    top: usize,
    #[command(flatten)]
    format: FormatArgs,
}

#[derive(Args)]
struct CurveArgs {
    /// Exponent grid `start:stop:step` (inclusive ends).
    #[arg(long, value_name = "SPEC", conflicts_with = "p_values")]
    grid: Option<String>,
    /// Explicit comma-separated exponent list.
    #[arg(long, value_name = "LIST", allow_hyphen_values = true)]
    p_values: Option<String>,
    #[command(flatten)]
    format: FormatArgs,
}

#[derive(Args)]
struct SweepArgs {
    #[arg(long, default_value_t = 2.70)]
    p_min: f64,
    #[arg(long, default_value_t = 2.90)]
    p_max: f64,
    #[arg(long, default_value_t = 0.005)]
    step: f64,
    #[command(flatten)]
    format: FormatArgs,
}

#[derive(Args)]
struct VerifyArgs {
    /// Oracle batch scope.
    #[arg(long, default_value = "quick", value_parser = ["quick", "full"])]
    scope: String,
    /// Seed for randomized census trials (deterministic by default).
    #[arg(long)]
    seed: Option<u64>,
    /// Corrupted-build simulation: flip the sign of the quadratic b inside
    /// the distance-law oracle. The suite must fail.
    #[arg(long, hide = true)]
    corrupt_quadratic_b: bool,
    /// Write the lifted configuration for --n/--k/--lambda to this file and
    /// exit (text format: header `n k lambda_num lambda_den`, one point per
    /// line).
    #[arg(long, value_name = "FILE", requires = "n")]
    dump_lifted: Option<PathBuf>,
    /// Check a lifted-configuration file against the canonical construction
    /// and the distance law.
    #[arg(long, value_name = "FILE", conflicts_with = "dump_lifted")]
    check_lifted: Option<PathBuf>,
    #[arg(short = 'n', long, requires = "dump_lifted")]
    n: Option<u32>,
    #[arg(short = 'k', long, requires = "dump_lifted")]
    k: Option<u32>,
    #[arg(long, allow_hyphen_values = true, requires = "dump_lifted")]
    lambda: Option<String>,
    #[command(flatten)]
    format: FormatArgs,
}

#[derive(Args)]
struct FormatArgs {
    /// Emit CSV instead of the human table.
    #[arg(long, conflicts_with = "record")]
    csv: bool,
    /// Emit the flat `key = value` record format.
    #[arg(long)]
    record: bool,
}

/// Values from the optional config file, overridden by flags.
#[derive(Debug, Clone, Copy)]
struct Settings {
    jobs: usize,
    seed: u64,
    census_trials: u32,
    enum_cap: u64,
}

impl Default for Settings {
    fn default() -> Self {
        Settings {
            jobs: 1,
            seed: 42,
            census_trials: 200,
            enum_cap: borsuk_core::lifting::DEFAULT_ENUM_CAP,
        }
    }
}

impl Settings {
    fn load(path: Option<&Path>) -> Result<Self, String> {
        let mut settings = Settings::default();
        let Some(path) = path else { return Ok(settings) };
        let text = fs::read_to_string(path)
            .map_err(|e| format!("cannot read config {}: {e}", path.display()))?;
        for (lineno, line) in text.lines().enumerate() {
            let line = line.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let (key, value) = line
                .split_once('=')
                .ok_or_else(|| format!("config line {} lacks `=`: {line}", lineno + 1))?;
            let (key, value) = (key.trim(), value.trim());
            let parse = |what: &str| format!("config line {}: bad {what}", lineno + 1);
            match key {
                "jobs" => settings.jobs = value.parse().map_err(|_| parse("jobs"))?,
                "seed" => settings.seed = value.parse().map_err(|_| parse("seed"))?,
                "census_trials" => {
                    settings.census_trials = value.parse().map_err(|_| parse("census_trials"))?
                }
                "enum_cap" => settings.enum_cap = value.parse().map_err(|_| parse("enum_cap"))?,
                other => return Err(format!("config line {}: unknown key `{other}`", lineno + 1)),
            }
        }
        Ok(settings)
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => 1,
            };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(message) => {
            eprintln!("error: {message}");
            ExitCode::from(1)
        }
    }
}

fn run(cli: Cli) -> Result<u8, String> {
    let mut settings = Settings::load(cli.config.as_deref())?;
    if let Some(jobs) = cli.jobs {
        if jobs == 0 {
            return Err("jobs must be positive".into());
        }
        settings.jobs = jobs;
    }
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(settings.jobs)
        .build()
        .map_err(|e| format!("cannot build thread pool: {e}"))?;
    let output = cli.output.clone();
    pool.install(|| match &cli.command {
        Command::Bound(args) => cmd_bound(args, output.as_deref()),
        Command::Search(args) => cmd_search(args, output.as_deref()),
        Command::Curve(args) => cmd_curve(args, output.as_deref()),
        Command::Corollary2(args) => cmd_corollary2(args, output.as_deref()),
        Command::Verify(args) => cmd_verify(args, &settings, output.as_deref()),
    })
}

/// Send the primary artifact to the output file when given, else stdout.
fn deliver(text: &str, output: Option<&Path>) -> Result<(), String> {
    match output {
        Some(path) => {
            render::atomic_write(path, text)
                .map_err(|e| format!("cannot write {}: {e}", path.display()))?;
            println!("wrote {}", path.display());
            Ok(())
        }
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn cmd_bound(args: &BoundArgs, output: Option<&Path>) -> Result<u8, String> {
    let lambda = Lambda::parse(&args.lambda).map_err(|e| e.to_string())?;
    let params = Parameters::new(args.n, args.k, args.p, lambda);
    match theorem1_bound(&params) {
        Ok(cert) => {
            let text = if args.format.record {
                cert.to_record()
            } else if args.format.csv {
                render::certificate_csv(&cert)
            } else {
                render::certificate_table(&cert)
            };
            deliver(&text, output)?;
            Ok(0)
        }
        Err(rejection) => {
            let text = if args.format.record {
                format!("record = rejection\nreason = {rejection}\n")
            } else {
                format!("rejected: {rejection}\n")
            };
            deliver(&text, output)?;
            Ok(EXIT_NO_RESULT)
        }
    }
}

fn cmd_search(args: &SearchArgs, output: Option<&Path>) -> Result<u8, String> {
    if args.d < 3 {
        return Err(format!("dimension {} too small (need d >= 3)", args.d));
    }
    if args.lambda_steps == 0 {
        return Err("lambda-steps must be positive".into());
    }
    let grid = LambdaGrid { steps: args.lambda_steps };
    match search_ranked(args.d, args.p, &grid) {
        Ok(certs) => {
            let best = &certs[0];
            let text = if args.format.csv {
                render::search_ranking_csv(&certs, args.top)
            } else if args.format.record {
                let mut s = best.to_record();
                for (i, c) in certs.iter().take(args.top).enumerate() {
                    s.push_str(&format!(
                        "rank.{}.k = {}\nrank.{}.lambda = {}\nrank.{}.t1 = {}\nrank.{}.bound = {}\n",
                        i + 1,
                        c.params.k,
                        i + 1,
                        c.params.lambda,
                        i + 1,
                        c.t1,
                        i + 1,
                        c.lower_bound
                    ));
                }
                s
            } else {
                let mut s = render::certificate_table(best);
                s.push('\n');
                s.push_str(&render::search_ranking_table(&certs, args.top));
                s
            };
            deliver(&text, output)?;
            Ok(0)
        }
        Err(borsuk_core::bound::BoundError::NoValidCertificate) => {
            deliver("no valid certificate: every (k, lambda) cell was rejected\n", output)?;
            Ok(EXIT_NO_RESULT)
        }
        Err(e) => Err(e.to_string()),
    }
}

fn parse_p_grid(args: &CurveArgs) -> Result<Vec<f64>, String> {
    if let Some(spec) = &args.grid {
        let parts: Vec<&str> = spec.split(':').collect();
        if parts.len() != 3 {
            return Err(format!("grid spec `{spec}` is not start:stop:step"));
        }
        let start: f64 = parts[0].parse().map_err(|_| "bad grid start".to_string())?;
        let stop: f64 = parts[1].parse().map_err(|_| "bad grid stop".to_string())?;
        let step: f64 = parts[2].parse().map_err(|_| "bad grid step".to_string())?;
        if step <= 0.0 || stop < start {
            return Err("grid needs stop >= start and step > 0".into());
        }
        let count = ((stop - start) / step).round() as usize;
        let mut grid: Vec<f64> = (0..=count)
            .map(|i| start + i as f64 * step)
            .filter(|&p| p <= stop + 1e-12)
            .collect();
        if grid.is_empty() {
            grid.push(start);
        }
        return Ok(grid);
    }
    if let Some(list) = &args.p_values {
        let grid: Result<Vec<f64>, _> = list.split(',').map(|s| s.trim().parse::<f64>()).collect();
        let grid = grid.map_err(|_| format!("cannot parse p list `{list}`"))?;
        if grid.is_empty() {
            return Err("empty p list".into());
        }
        return Ok(grid);
    }
    Ok(reference_p_grid())
}

fn cmd_curve(args: &CurveArgs, output: Option<&Path>) -> Result<u8, String> {
    let grid = parse_p_grid(args)?;
    let rows = emit_curve(&grid);
    let text = if args.format.record {
        render::curve_record(&rows)
    } else if args.format.csv {
        curve_csv(&rows)
    } else {
        render::curve_table(&rows)
    };
    // The CSV is the plot artifact: always place it in the output file when
    // one is given, and keep the table on stdout.
    match output {
        Some(path) => {
            let csv = curve_csv(&rows);
            render::atomic_write(path, &csv)
                .map_err(|e| format!("cannot write {}: {e}", path.display()))?;
            print!("{}", render::curve_table(&rows));
            println!("wrote {}", path.display());
        }
        None => print!("{text}"),
    }
    Ok(0)
}

fn cmd_corollary2(args: &SweepArgs, output: Option<&Path>) -> Result<u8, String> {
    if !(args.p_min >= 1.0 && args.p_max >= args.p_min && args.step > 0.0) {
        return Err("need 1 <= p-min <= p-max and step > 0".into());
    }
    let lambda = Lambda::new(-1, 3).unwrap();
    let steps = ((args.p_max - args.p_min) / args.step).round() as usize;
    let mut rows = Vec::with_capacity(steps + 1);
    let mut threshold = None;
    for i in 0..=steps {
        let p = args.p_min + i as f64 * args.step;
        if p > args.p_max + 1e-12 {
            break;
        }
        let params = Parameters::new(29, 9, p, lambda);
        let t0 = borsuk_core::bound::vertex_t0(&params).map_err(|e| e.to_string())?;
        let (t1, bound) = match theorem1_bound(&params) {
            Ok(cert) => (Some(cert.t1), Some(cert.lower_bound.to_string())),
            Err(_) => (None, None),
        };
        if threshold.is_none() && t1 == Some(4) {
            threshold = Some(p);
        }
        rows.push(render::SweepRow { p, t0, t1, bound });
    }
    let text = if args.format.csv {
        render::sweep_csv(&rows)
    } else if args.format.record {
        render::sweep_record(&rows, threshold)
    } else {
        render::sweep_table(&rows, threshold)
    };
    deliver(&text, output)?;
    Ok(0)
}

fn cmd_verify(args: &VerifyArgs, settings: &Settings, output: Option<&Path>) -> Result<u8, String> {
    if let Some(path) = &args.dump_lifted {
        let (n, k) = (args.n.unwrap(), args.k.unwrap());
        let lambda = Lambda::parse(args.lambda.as_deref().unwrap_or("0"))
            .map_err(|e| e.to_string())?;
        let config = LiftedConfiguration::build_capped(n, k, lambda, settings.enum_cap)
            .map_err(|e| e.to_string())?;
        let mut buf = Vec::new();
        config.write_text(&mut buf).map_err(|e| e.to_string())?;
        let text = String::from_utf8(buf).expect("ascii output");
        render::atomic_write(path, &text)
            .map_err(|e| format!("cannot write {}: {e}", path.display()))?;
        println!(
            "wrote lifted configuration n={n} k={k} lambda={lambda} ({} points) to {}",
            config.points.len(),
            path.display()
        );
        return Ok(0);
    }
    if let Some(path) = &args.check_lifted {
        return check_lifted(path);
    }

    let scope = if args.scope == "full" { Scope::Full } else { Scope::Quick };
    let cfg = SuiteConfig {
        scope,
        seed: args.seed.unwrap_or(settings.seed),
        census_trials: settings.census_trials,
        corruption: if args.corrupt_quadratic_b {
            Corruption::FlipQuadraticB
        } else {
            Corruption::None
        },
    };
    let reports = run_suite(&cfg);
    let text = if args.format.record {
        render::oracle_record(&reports, &args.scope, cfg.seed)
    } else {
        render::oracle_lines(&reports)
    };
    deliver(&text, output)?;
    if reports.iter().all(|r| r.passed) {
        Ok(0)
    } else {
        Ok(EXIT_NO_RESULT)
    }
}

/// Re-derives the canonical configuration from the file header, compares the
/// stored points bit-for-bit, and checks the distance law on the stored data.
fn check_lifted(path: &Path) -> Result<u8, String> {
    use borsuk_core::lifting::{lp_distance, quadratic_coefficients};
    let file = fs::File::open(path).map_err(|e| format!("cannot open {}: {e}", path.display()))?;
    let mut reader = std::io::BufReader::new(file);
    let stored = LiftedConfiguration::read_text(&mut reader).map_err(|e| e.to_string())?;
    let canonical = LiftedConfiguration::build(stored.n, stored.k, stored.lambda)
        .map_err(|e| e.to_string())?;
    let mut ok = true;
    if stored.points == canonical.points {
        println!("[PASS] stored points match the canonical construction bit-for-bit");
    } else {
        println!("[FAIL] stored points differ from the canonical construction");
        ok = false;
    }
    for p in [1.0, 2.0, 3.0] {
        let params = Parameters::new(stored.n, stored.k, p, stored.lambda);
        let q = quadratic_coefficients(&params).map_err(|e| e.to_string())?;
        let tol = 1e-9 * (1.0 + q.c.abs());
        let mut max_err = 0.0f64;
        for i in 0..stored.points.len() {
            for j in i + 1..stored.points.len() {
                let t = stored.vectors[i].intersection(&stored.vectors[j]);
                let dist = lp_distance(&stored.points[i], &stored.points[j], p)
                    .map_err(|e| e.to_string())?;
                max_err = max_err.max((dist.powf(p) - q.eval(t as f64)).abs());
            }
        }
        if max_err <= tol {
            println!("[PASS] distance law at p = {p} (max error {max_err:.3e})");
        } else {
            println!("[FAIL] distance law at p = {p} (max error {max_err:.3e})");
            ok = false;
        }
    }
    Ok(if ok { 0 } else { EXIT_NO_RESULT })
}
