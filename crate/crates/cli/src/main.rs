//! `quench` — work extraction, conversion certificates, and resource
//! witnesses for finite-dimensional quantum states.
//!
//! Exit codes: 0 success / convertible / witness found; 1 negative verdict;
//! 2 input or internal error; 3 inconclusive.

mod io;

use clap::{Parser, Subcommand};
use serde::Serialize;

use quench_core::conversion::{nielsen_locc_check, unital_convertible};
use quench_core::states::two_level_hamiltonian;
use quench_core::thermo::{delta, delta_mu_assisted};
use quench_core::tol::Tolerances;
use quench_core::verify::{run_suite, Suite};
use quench_core::witness::{resource_measure, witness_search, AscentConfig, FreeSet, SamplingPlan};
use quench_core::{Error, Hamiltonian};

use io::InputError;

const EXIT_OK: u8 = 0;
const EXIT_NEGATIVE: u8 = 1;
const EXIT_INPUT: u8 = 2;
const EXIT_INCONCLUSIVE: u8 = 3;

#[derive(Parser)]
#[command(
    name = "quench",
    version,
    about = "Work-extraction functionals, majorisation certificates, and resource witnesses"
)]
struct Cli {
    /// Thermal scale kBT; overrides the value stored in Hamiltonian files.
    #[arg(long, global = true)]
    kbt: Option<f64>,

    /// Lower spectral bound ε for witness / measure / falsification probes.
    #[arg(long = "eps", global = true, default_value_t = 0.0)]
    epsilon: f64,

    /// Upper spectral bound δ for witness / measure / falsification probes.
    #[arg(long = "emax", global = true, default_value_t = 1.0)]
    delta_max: f64,

    /// Energy ω of the two-level probe family.
    #[arg(long, global = true, default_value_t = 1.0)]
    omega: f64,

    /// Hermiticity tolerance applied when validating input matrices.
    #[arg(long, global = true, default_value_t = 1e-8)]
    tol: f64,

    /// Base seed for every random sampler.
    #[arg(long, global = true, default_value_t = 42)]
    seed: u64,

    /// Worker threads for sampling fan-out. Per-sample seeding keeps results
    /// identical across thread counts.
    #[arg(long, global = true, default_value_t = 1)]
    threads: usize,

    /// Output file for the command's main artifact (witness Hamiltonian,
    /// sweep CSV).
    #[arg(long, global = true)]
    out: Option<String>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Work report (W, W_inf, Δ, closed form, consistency gap) for a state
    /// under a Hamiltonian.
    Delta {
        state_file: String,
        hamiltonian_file: String,
    },
    /// Decide ρ → σ under unital / mixed-unitary channels.
    Convert {
        rho_file: String,
        sigma_file: String,
        /// Embed the full mixed-unitary certificate in the output.
        #[arg(long)]
        certificate: bool,
    },
    /// LOCC convertibility of bipartite pure states through local work
    /// extraction (amplitude-matrix inputs).
    Nielsen { psi_file: String, phi_file: String },
    /// Search for a Hamiltonian witnessing ρ against a free set
    /// (defaults to the maximally mixed singleton).
    Witness {
        rho_file: String,
        free_set_file: Option<String>,
        /// Supergradient ascent iterations for multi-point free sets.
        #[arg(long, default_value_t = 500)]
        iterations: usize,
    },
    /// Work-ratio resource measure of ρ over bounded Hamiltonians.
    Measure {
        rho_file: String,
        /// Random spectra added to the deterministic candidate plan.
        #[arg(long, default_value_t = 256)]
        samples: usize,
    },
    /// Evaluate the work functionals over a parameterized Hamiltonian
    /// family; emits CSV.
    Sweep { spec_file: String },
    /// Run a reproducible property suite (thermo, majorisation, conversion,
    /// witness, all).
    Verify {
        suite: String,
        /// Cases per property.
        #[arg(long, default_value_t = 200)]
        n: usize,
        /// Harness self-test: corrupt a verdict threshold so the conversion
        /// suite must fail.
        #[arg(long, hide = true)]
        corrupt_tolerance: bool,
    },
}

fn main() {
    let cli = Cli::parse();
    let code = match run(cli) {
        Ok(code) => code,
        Err(err) => {
            eprintln!("error: {err}");
            err.exit_code()
        }
    };
    std::process::exit(code as i32);
}

enum CliError {
    Input(String),
    Internal(String),
    Inconclusive(String),
}

impl CliError {
    fn exit_code(&self) -> u8 {
        match self {
            CliError::Input(_) | CliError::Internal(_) => EXIT_INPUT,
            CliError::Inconclusive(_) => EXIT_INCONCLUSIVE,
        }
    }
}

impl std::fmt::Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CliError::Input(m) | CliError::Internal(m) | CliError::Inconclusive(m) => {
                write!(f, "{m}")
            }
        }
    }
}

impl From<InputError> for CliError {
    fn from(e: InputError) -> Self {
        CliError::Input(e.0)
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        match e {
            Error::Inconclusive(m) => CliError::Inconclusive(m),
            other => CliError::Internal(other.to_string()),
        }
    }
}

fn run(cli: Cli) -> Result<u8, CliError> {
    if !(cli.epsilon >= 0.0 && cli.epsilon < cli.delta_max) {
        return Err(CliError::Input(format!(
            "--eps/--emax: need 0 <= eps < emax, got ({}, {})",
            cli.epsilon, cli.delta_max
        )));
    }
    if !(cli.omega > 0.0) {
        return Err(CliError::Input(format!(
            "--omega: must be positive, got {}",
            cli.omega
        )));
    }
    if !(cli.tol > 0.0) {
        return Err(CliError::Input(format!(
            "--tol: must be positive, got {}",
            cli.tol
        )));
    }
    if let Some(kbt) = cli.kbt {
        if !(kbt > 0.0 && kbt.is_finite()) {
            return Err(CliError::Input(format!(
                "--kbt: must be positive and finite, got {kbt}"
            )));
        }
    }
    if cli.threads == 0 {
        return Err(CliError::Input("--threads: must be at least 1".into()));
    }

    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(cli.threads)
        .build()
        .map_err(|e| CliError::Internal(format!("thread pool: {e}")))?;
    pool.install(|| dispatch(cli))
}

fn tolerances(cli: &Cli) -> Tolerances {
    Tolerances {
        construction: cli.tol,
        ..Tolerances::default()
    }
}

fn dispatch(cli: Cli) -> Result<u8, CliError> {
    let tols = tolerances(&cli);
    match &cli.command {
        Command::Delta {
            state_file,
            hamiltonian_file,
        } => {
            let rho = io::load_density_matrix(state_file, &tols)?;
            let h = io::load_hamiltonian(hamiltonian_file, &tols, cli.kbt)?;
            let report = delta(&rho, &h)?;
            print_json(&report)?;
            Ok(EXIT_OK)
        }

        Command::Convert {
            rho_file,
            sigma_file,
            certificate,
        } => {
            let rho = io::load_density_matrix(rho_file, &tols)?;
            let sigma = io::load_density_matrix(sigma_file, &tols)?;
            let mut verdict = unital_convertible(&rho, &sigma, cli.omega)?;
            if !certificate {
                verdict.certificate = None;
            }
            print_json(&verdict)?;
            Ok(if verdict.convertible {
                EXIT_OK
            } else {
                EXIT_NEGATIVE
            })
        }

        Command::Nielsen { psi_file, phi_file } => {
            let psi = io::load_pure_bipartite(psi_file)?;
            let phi = io::load_pure_bipartite(phi_file)?;
            let verdict = nielsen_locc_check(&psi, &phi, cli.omega)?;
            print_json(&verdict)?;
            Ok(if verdict.convertible {
                EXIT_OK
            } else {
                EXIT_NEGATIVE
            })
        }

        Command::Witness {
            rho_file,
            free_set_file,
            iterations,
        } => {
            let rho = io::load_density_matrix(rho_file, &tols)?;
            let free = match free_set_file {
                Some(path) => io::load_free_set(path, &tols)?,
                None => FreeSet::maximally_mixed(rho.dim()),
            };
            let config = AscentConfig {
                iterations: *iterations,
            };
            let result = witness_search(&rho, &free, cli.epsilon, cli.delta_max, &config)?;

            #[derive(Serialize)]
            struct WitnessWire {
                found: bool,
                gap: f64,
                iterations: usize,
                inconclusive: bool,
                hamiltonian: Option<io::MatrixFile>,
            }
            let wire = WitnessWire {
                found: result.found,
                gap: result.gap,
                iterations: result.iterations,
                inconclusive: result.inconclusive,
                hamiltonian: result
                    .hamiltonian
                    .as_ref()
                    .map(|h| io::matrix_file_for(h.matrix(), Some(h.kbt()))),
            };
            print_json(&wire)?;

            if let (Some(out), Some(h)) = (&cli.out, &result.hamiltonian) {
                write_json_file(out, &io::matrix_file_for(h.matrix(), Some(h.kbt())))?;
            }
            Ok(if result.found {
                EXIT_OK
            } else if result.inconclusive {
                EXIT_INCONCLUSIVE
            } else {
                EXIT_NEGATIVE
            })
        }

        Command::Measure { rho_file, samples } => {
            let rho = io::load_density_matrix(rho_file, &tols)?;
            let plan = SamplingPlan {
                n_random: *samples,
                seed: cli.seed,
            };
            let report = resource_measure(&rho, cli.epsilon, cli.delta_max, &plan)?;
            print_json(&report)?;
            Ok(EXIT_OK)
        }

        Command::Sweep { spec_file } => cmd_sweep(&cli, &tols, spec_file),

        Command::Verify {
            suite,
            n,
            corrupt_tolerance,
        } => cmd_verify(&cli, suite, *n, *corrupt_tolerance),
    }
}

fn cmd_sweep(cli: &Cli, tols: &Tolerances, spec_file: &str) -> Result<u8, CliError> {
    let spec = io::load_sweep_spec(spec_file)?;
    let rho = io::load_density_matrix(&spec.state, tols)?;
    let d = rho.dim();
    let kbt = cli.kbt.unwrap_or(1.0);

    let hamiltonian_for = |value: f64, index: usize| -> Result<Hamiltonian, CliError> {
        match spec.family.as_str() {
            "hk" => {
                let k = value.round();
                if (value - k).abs() > 1e-9 || k < 0.0 {
                    return Err(CliError::Input(format!(
                        "{spec_file}: grid[{index}]: level index must be a non-negative integer, got {value}"
                    )));
                }
                two_level_hamiltonian(d, k as usize, cli.omega, kbt).map_err(|e| {
                    CliError::Input(format!("{spec_file}: grid[{index}]: {e}"))
                })
            }
            "diag0x" => {
                if d != 2 {
                    return Err(CliError::Input(format!(
                        "{spec_file}: family: diag0x needs a qubit state, got dim {d}"
                    )));
                }
                if value < 0.0 {
                    return Err(CliError::Input(format!(
                        "{spec_file}: grid[{index}]: gap must be non-negative, got {value}"
                    )));
                }
                Hamiltonian::from_real_diagonal(&[0.0, value], kbt)
                    .map_err(|e| CliError::Input(format!("{spec_file}: grid[{index}]: {e}")))
            }
            other => Err(CliError::Input(format!(
                "{spec_file}: family: unknown family '{other}' (expected hk, diag0x)"
            ))),
        }
    };

    let mut csv = String::from("parameter,w,w_inf,delta,delta_mu_assisted\n");
    for (index, &value) in spec.grid.iter().enumerate() {
        let h = hamiltonian_for(value, index)?;
        let report = delta(&rho, &h)?;
        let assisted = delta_mu_assisted(&rho, &h)?;
        csv.push_str(&format!(
            "{},{},{},{},{}\n",
            value, report.w, report.w_inf, report.delta, assisted
        ));
    }

    match cli.out.as_ref().or(spec.out.as_ref()) {
        Some(path) => std::fs::write(path, csv)
            .map_err(|e| CliError::Input(format!("{path}: cannot write: {e}")))?,
        None => print!("{csv}"),
    }
    Ok(EXIT_OK)
}

fn cmd_verify(cli: &Cli, suite: &str, n: usize, corrupt_tolerance: bool) -> Result<u8, CliError> {
    let suite: Suite = suite
        .parse()
        .map_err(|e: Error| CliError::Input(e.to_string()))?;
    let reports = run_suite(suite, cli.seed, n, corrupt_tolerance);
    let mut all_passed = true;
    for report in &reports {
        for property in &report.properties {
            let status = if property.failures == 0 { "PASS" } else { "FAIL" };
            println!(
                "{status} {}.{}: {}/{} cases failed",
                report.suite, property.name, property.failures, property.cases
            );
        }
        if report.vacuous() {
            println!(
                "WARN {}: vacuous pass, 0 cases requested",
                report.suite
            );
        }
        all_passed &= report.passed();
    }
    println!(
        "verify: {} (seed {}, n {})",
        if all_passed { "PASS" } else { "FAIL" },
        cli.seed,
        n
    );
    Ok(if all_passed { EXIT_OK } else { EXIT_NEGATIVE })
}

fn print_json<T: Serialize>(value: &T) -> Result<(), CliError> {
    let text = serde_json::to_string_pretty(value)
        .map_err(|e| CliError::Internal(format!("serialization: {e}")))?;
    println!("{text}");
    Ok(())
}

fn write_json_file<T: Serialize>(path: &str, value: &T) -> Result<(), CliError> {
    let text = serde_json::to_string_pretty(value)
        .map_err(|e| CliError::Internal(format!("serialization: {e}")))?;
    std::fs::write(path, format!("{text}\n"))
        .map_err(|e| CliError::Input(format!("{path}: cannot write: {e}")))
}
