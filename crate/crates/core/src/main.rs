//! Command-line surface: `compute`, `series`, `verify`, `oracle`.
//!
//! Exit codes: 0 success, 2 inconclusive or failed assertion, 64 usage
//! error, 65 data-format error. Warnings go to standard error only.

use clap::error::ErrorKind;
use clap::{Args, Parser, Subcommand};
use gradred::asymptotics::{
    compute_series, detect_linearity, series_to_csv, Quantity, SeriesReport, SeriesStatus,
};
use gradred::instance::{InstanceFile, RunConfig};
use gradred::koszul;
use gradred::{generic_reduction_number, oracle, reduction, suites, Error};
use serde_json::json;
use std::path::PathBuf;
use std::process::ExitCode;

const EXIT_OK: u8 = 0;
const EXIT_INCONCLUSIVE: u8 = 2;
const EXIT_USAGE: u8 = 64;
const EXIT_DATA: u8 = 65;

#[derive(Parser)]
#[command(
    name = "gradred",
    about = "Exact graded-module invariants over GF(p) and seeded series experiments",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct ConfigArgs {
    /// Master seed for all randomized computations
    #[arg(long, default_value_t = 1)]
    seed: u64,
    /// Monte Carlo trials per reduction-number computation
    #[arg(long, default_value_t = 5)]
    trials: usize,
    /// Largest power n in series experiments
    #[arg(long = "n-max", default_value_t = 10)]
    n_max: usize,
    /// Degree-scan cap when searching for a reduction number
    #[arg(long = "n-cap", default_value_t = 200)]
    n_cap: usize,
    /// Power cap when certifying ideal reductions (rho)
    #[arg(long = "k-max", default_value_t = 20)]
    k_max: usize,
    /// Trailing window length for stabilization detection
    #[arg(long, default_value_t = 3)]
    window: usize,
}

impl ConfigArgs {
    fn run_config(&self) -> RunConfig {
        RunConfig {
            seed: self.seed,
            trials: self.trials,
            n_max: self.n_max,
            n_cap: self.n_cap,
            k_max: self.k_max,
            window: self.window,
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Compute invariants of one instance, as JSON
    Compute {
        /// Instance file (JSON)
        #[arg(long)]
        input: PathBuf,
        /// Comma-separated invariants: any of D,d,dim,r,reg,rho
        #[arg(long, default_value = "D,d,dim,r,reg,rho")]
        what: String,
        /// Write output here instead of standard output
        #[arg(long)]
        out: Option<PathBuf>,
        #[command(flatten)]
        config: ConfigArgs,
    },
    /// Track invariants of I^n M for n = 1..n-max, as CSV
    Series {
        #[arg(long)]
        input: PathBuf,
        /// Comma-separated quantities: any of r,D,d,dim,reg
        #[arg(long, default_value = "r,D")]
        quantities: String,
        #[arg(long)]
        out: Option<PathBuf>,
        #[command(flatten)]
        config: ConfigArgs,
    },
    /// Run a named property suite: basic, main, grf, koszul, or all
    Verify {
        #[arg(long)]
        suite: String,
        #[command(flatten)]
        config: ConfigArgs,
    },
    /// Recompute r, D and dim by independent brute-force routes and compare
    Oracle {
        #[arg(long)]
        input: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
        #[command(flatten)]
        config: ConfigArgs,
    },
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => EXIT_OK,
                _ => EXIT_USAGE,
            };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    let code = match cli.command {
        Command::Compute {
            input,
            what,
            out,
            config,
        } => run_compute(&input, &what, out.as_deref(), &config.run_config()),
        Command::Series {
            input,
            quantities,
            out,
            config,
        } => run_series(&input, &quantities, out.as_deref(), &config.run_config()),
        Command::Verify { suite, config } => run_verify(&suite, &config.run_config()),
        Command::Oracle { input, out, config } => {
            run_oracle(&input, out.as_deref(), &config.run_config())
        }
    };
    ExitCode::from(code)
}

fn load_instance(path: &std::path::Path) -> Result<InstanceFile, u8> {
    let text = std::fs::read_to_string(path).map_err(|e| {
        eprintln!("error: cannot read {}: {e}", path.display());
        EXIT_DATA
    })?;
    let inst = InstanceFile::from_json(&text).map_err(|e| {
        eprintln!("error: {}: {e}", path.display());
        EXIT_DATA
    })?;
    if inst.small_prime() {
        eprintln!(
            "warning: prime {} is below 32003; Monte Carlo genericity is weaker",
            inst.prime
        );
    }
    Ok(inst)
}

fn emit(out: Option<&std::path::Path>, text: &str) -> u8 {
    match out {
        Some(path) => {
            if let Err(e) = std::fs::write(path, text) {
                eprintln!("error: cannot write {}: {e}", path.display());
                return EXIT_DATA;
            }
            EXIT_OK
        }
        None => {
            print!("{text}");
            EXIT_OK
        }
    }
}

fn run_compute(
    input: &std::path::Path,
    what: &str,
    out: Option<&std::path::Path>,
    config: &RunConfig,
) -> u8 {
    let inst = match load_instance(input) {
        Ok(i) => i,
        Err(code) => return code,
    };
    let module = match inst.to_module() {
        Ok(m) => m,
        Err(e) => {
            eprintln!("error: {e}");
            return EXIT_DATA;
        }
    };
    let requested: Vec<&str> = what.split(',').map(str::trim).filter(|s| !s.is_empty()).collect();
    let known = ["D", "d", "dim", "r", "reg", "rho"];
    if let Some(bad) = requested.iter().find(|q| !known.contains(q)) {
        eprintln!("error: unknown invariant '{bad}' (expected one of D,d,dim,r,reg,rho)");
        return EXIT_USAGE;
    }

    let mut invariants = serde_json::Map::new();
    let mut r_report = None;
    for q in &requested {
        let value: Result<serde_json::Value, Error> = match *q {
            "D" => module.largest_gen_degree().map(Into::into),
            "d" => module.least_degree().map(Into::into),
            "dim" => Ok(json!(module.krull_dim().to_string())),
            "r" => generic_reduction_number(&module, config.trials, config.seed, config.n_cap)
                .map(|rep| {
                    let v = json!(rep.value);
                    r_report = Some(rep);
                    v
                }),
            "reg" => koszul::regularity(&module).map(Into::into),
            "rho" => {
                eprintln!(
                    "warning: rho certifies reductions only up to k-max = {}",
                    config.k_max
                );
                match inst.to_ideal() {
                    Ok(ideal) => reduction::rho(&ideal, &module, config.k_max).map(Into::into),
                    Err(e) => Err(e),
                }
            }
            _ => unreachable!("validated above"),
        };
        match value {
            Ok(v) => {
                invariants.insert((*q).to_string(), v);
            }
            Err(e) => {
                eprintln!("error: {q}: {e}");
                return EXIT_DATA;
            }
        }
    }
    let mut doc = json!({
        "invariants": invariants,
        "config": config,
        "prime": inst.prime,
    });
    if let Some(rep) = r_report {
        doc["r_report"] = serde_json::to_value(&rep).expect("report serializes");
    }
    let text = format!("{}\n", serde_json::to_string_pretty(&doc).expect("doc serializes"));
    emit(out, &text)
}

/// Slope supplied to stabilization detection, by quantity: rho for r, D and
/// reg (the linearity statements under test), the least generator degree of I
/// for d, and 0 for dim (eventually constant).
fn slope_for(quantity: Quantity, rho: i64, ideal: &gradred::MonomialIdeal) -> i64 {
    match quantity {
        Quantity::ReductionNumber | Quantity::LargestGenDegree | Quantity::Regularity => rho,
        Quantity::LeastDegree => ideal.min_gen_degree().map_or(0, |d| d as i64),
        Quantity::KrullDim => 0,
    }
}

fn run_series(
    input: &std::path::Path,
    quantities: &str,
    out: Option<&std::path::Path>,
    config: &RunConfig,
) -> u8 {
    let inst = match load_instance(input) {
        Ok(i) => i,
        Err(code) => return code,
    };
    let (module, ideal) = match (inst.to_module(), inst.to_ideal()) {
        (Ok(m), Ok(i)) => (m, i),
        (Err(e), _) | (_, Err(e)) => {
            eprintln!("error: {e}");
            return EXIT_DATA;
        }
    };
    let mut parsed = Vec::new();
    for name in quantities.split(',').map(str::trim).filter(|s| !s.is_empty()) {
        match Quantity::parse(name) {
            Some(q) => parsed.push(q),
            None => {
                eprintln!("error: unknown quantity '{name}' (expected one of r,D,d,dim,reg)");
                return EXIT_USAGE;
            }
        }
    }
    if parsed.is_empty() {
        eprintln!("error: no quantities requested");
        return EXIT_USAGE;
    }
    eprintln!(
        "warning: rho certifies reductions only up to k-max = {}",
        config.k_max
    );
    let params = config.series_params();
    let rho = match reduction::rho(&ideal, &module, config.k_max) {
        Ok(r) => r,
        Err(e) => {
            eprintln!("error: rho: {e}");
            return EXIT_DATA;
        }
    };
    let mut reports: Vec<SeriesReport> = Vec::new();
    for q in parsed {
        let values = match compute_series(&ideal, &module, q, config.n_max, &params) {
            Ok(v) => v,
            Err(e) => {
                eprintln!("error: {} series: {e}", q.name());
                return EXIT_DATA;
            }
        };
        reports.push(detect_linearity(
            q.name(),
            &values,
            slope_for(q, rho, &ideal),
            config.window,
        ));
    }
    let csv = series_to_csv(&reports);
    let code = emit(out, &csv);
    if code != EXIT_OK {
        return code;
    }
    if reports.iter().all(|r| r.status == SeriesStatus::Stabilized) {
        EXIT_OK
    } else {
        EXIT_INCONCLUSIVE
    }
}

fn run_verify(suite: &str, config: &RunConfig) -> u8 {
    let Some(reports) = suites::run_suite(suite, config.seed) else {
        eprintln!("error: unknown suite '{suite}' (expected basic, main, grf, koszul or all)");
        return EXIT_USAGE;
    };
    let mut all_pass = true;
    for report in &reports {
        for check in &report.checks {
            let verdict = if check.pass { "PASS" } else { "FAIL" };
            println!("[{verdict}] {} :: {} — {}", report.name, check.name, check.detail);
            all_pass &= check.pass;
        }
    }
    if all_pass {
        EXIT_OK
    } else {
        EXIT_INCONCLUSIVE
    }
}

fn run_oracle(
    input: &std::path::Path,
    out: Option<&std::path::Path>,
    config: &RunConfig,
) -> u8 {
    let inst = match load_instance(input) {
        Ok(i) => i,
        Err(code) => return code,
    };
    let module = match inst.to_module() {
        Ok(m) => m,
        Err(e) => {
            eprintln!("error: {e}");
            return EXIT_DATA;
        }
    };
    let pair = |main: Result<i64, Error>, check: Result<i64, Error>| match (main, check) {
        (Ok(a), Ok(b)) => Ok((json!(a), json!(b), a == b)),
        (Err(e), _) | (_, Err(e)) => Err(e),
    };
    let results = [
        (
            "r",
            pair(
                generic_reduction_number(&module, config.trials, config.seed, config.n_cap)
                    .map(|r| r.value),
                oracle::reduction_number(&module, config.trials, config.seed, config.n_cap),
            ),
        ),
        (
            "D",
            pair(module.largest_gen_degree(), oracle::largest_gen_degree(&module)),
        ),
        (
            "dim",
            match oracle::dim(&module) {
                Ok(d) => {
                    let main = module.krull_dim();
                    Ok((json!(main.to_string()), json!(d.to_string()), main == d))
                }
                Err(e) => Err(e),
            },
        ),
    ];
    let mut doc = serde_json::Map::new();
    let mut all_agree = true;
    for (name, res) in results {
        match res {
            Ok((main, check, agree)) => {
                all_agree &= agree;
                doc.insert(
                    name.to_string(),
                    json!({"main": main, "oracle": check, "agree": agree}),
                );
            }
            Err(e) => {
                eprintln!("error: {name}: {e}");
                return EXIT_DATA;
            }
        }
    }
    let text = format!(
        "{}\n",
        serde_json::to_string_pretty(&serde_json::Value::Object(doc)).expect("doc serializes")
    );
    let code = emit(out, &text);
    if code != EXIT_OK {
        return code;
    }
    if all_agree {
        EXIT_OK
    } else {
        EXIT_INCONCLUSIVE
    }
}
