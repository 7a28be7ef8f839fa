use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use gaussvac::bogolyubov::{uv_from_params, CLASSIFY_TOL};
use gaussvac::sweep::{self, Spacing, SweepConfig};
use gaussvac::verify::{self, Suite, VerifyOptions};
use gaussvac::{
    state_from_params, state_from_temperature, OscillatorConfig, PhysicalConstants, SqueezeParams,
    StateClass, ThermalContext,
};

const EXIT_VERIFY_FAILED: u8 = 1;
const EXIT_USAGE: u8 = 2;
const EXIT_IO: u8 = 3;

#[derive(Parser)]
#[command(name = "gaussvac", version, about = "Gaussian vacuum states of a thermal oscillator mode")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum ClassArg {
    Scs,
    Ccs,
}

impl From<ClassArg> for StateClass {
    fn from(c: ClassArg) -> Self {
        match c {
            ClassArg::Scs => StateClass::Scs,
            ClassArg::Ccs => StateClass::Ccs,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum SpacingArg {
    Linear,
    Log,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Csv,
    Json,
}

#[derive(clap::Args)]
struct Units {
    /// Oscillator frequency
    #[arg(long, default_value_t = 1.0)]
    omega: f64,
    /// Reduced Planck constant
    #[arg(long, default_value_t = 1.0)]
    hbar: f64,
    /// Boltzmann constant
    #[arg(long = "kb", default_value_t = 1.0)]
    k_b: f64,
}

#[derive(Subcommand)]
enum Command {
    /// Tabulate a thermal state family over a temperature range
    Sweep {
        #[arg(long, default_value_t = 0.0)]
        t_min: f64,
        #[arg(long)]
        t_max: f64,
        #[arg(long, default_value_t = 11)]
        points: usize,
        #[arg(long, value_enum, default_value_t = SpacingArg::Linear)]
        spacing: SpacingArg,
        #[command(flatten)]
        units: Units,
        #[arg(long, value_enum, default_value_t = ClassArg::Ccs)]
        class: ClassArg,
        #[arg(long, value_enum, default_value_t = Format::Csv)]
        format: Format,
        /// Output file; stdout when omitted
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Run the verification suites
    Verify {
        /// all, analytic, fock or quadrature
        #[arg(default_value = "all")]
        suite: String,
        /// Fock basis dimension
        #[arg(long, default_value_t = verify::VerifyOptions::default().dim)]
        dim: usize,
        /// Replace every upper-bound tolerance with this value
        #[arg(long)]
        tol: Option<f64>,
    },
    /// Print a single state card
    State {
        #[arg(long, requires = "phi")]
        tau: Option<f64>,
        #[arg(long, requires = "tau")]
        phi: Option<f64>,
        #[arg(long, requires = "class")]
        temperature: Option<f64>,
        #[arg(long, value_enum, requires = "temperature")]
        class: Option<ClassArg>,
        #[command(flatten)]
        units: Units,
    },
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return match e.kind() {
                clap::error::ErrorKind::DisplayHelp | clap::error::ErrorKind::DisplayVersion => ExitCode::SUCCESS,
                _ => ExitCode::from(EXIT_USAGE),
            };
        }
    };
    match cli.command {
        Command::Sweep { t_min, t_max, points, spacing, units, class, format, out } => {
            let cfg = SweepConfig {
                t_min,
                t_max,
                points,
                spacing: match spacing {
                    SpacingArg::Linear => Spacing::Linear,
                    SpacingArg::Log => Spacing::Log,
                },
                omega: units.omega,
                hbar: units.hbar,
                k_b: units.k_b,
                class: class.into(),
            };
            cmd_sweep(&cfg, format, out)
        }
        Command::Verify { suite, dim, tol } => cmd_verify(&suite, dim, tol),
        Command::State { tau, phi, temperature, class, units } => cmd_state(tau, phi, temperature, class, &units),
    }
}

fn usage(msg: impl std::fmt::Display) -> ExitCode {
    eprintln!("error: {msg}");
    ExitCode::from(EXIT_USAGE)
}

fn cmd_sweep(cfg: &SweepConfig, format: Format, out: Option<PathBuf>) -> ExitCode {
    let rows = match sweep::compute_rows(cfg) {
        Ok(rows) => rows,
        Err(e) => return usage(e),
    };
    let sink: Box<dyn Write> = match &out {
        Some(path) => match File::create(path) {
            Ok(f) => Box::new(BufWriter::new(f)),
            Err(e) => {
                eprintln!("error: cannot create {}: {e}", path.display());
                return ExitCode::from(EXIT_IO);
            }
        },
        None => Box::new(BufWriter::new(io::stdout().lock())),
    };
    let written = match format {
        Format::Csv => sweep::write_csv(&rows, sink),
        Format::Json => sweep::write_json(cfg, &rows, sink),
    };
    match written {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: write failed: {e}");
            ExitCode::from(EXIT_IO)
        }
    }
}

fn cmd_verify(suite: &str, dim: usize, tol: Option<f64>) -> ExitCode {
    let suite: Suite = match suite.parse() {
        Ok(s) => s,
        Err(e) => return usage(e),
    };
    if let Some(t) = tol {
        if t.is_nan() || t < 0.0 {
            return usage(format!("--tol must be >= 0, got {t}"));
        }
    }
    let report = verify::run(suite, &VerifyOptions { dim, tol_override: tol });
    println!("{report}");
    if report.passed {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(EXIT_VERIFY_FAILED)
    }
}

fn cmd_state(
    tau: Option<f64>,
    phi: Option<f64>,
    temperature: Option<f64>,
    class: Option<ClassArg>,
    units: &Units,
) -> ExitCode {
    let built = match (tau, phi, temperature, class) {
        (Some(tau), Some(phi), None, None) => SqueezeParams::new(tau, phi)
            .and_then(|p| state_from_params(p, units.omega, units.hbar))
            .map(|s| (s, None)),
        (None, None, Some(t), Some(c)) => PhysicalConstants::new(units.hbar, units.k_b)
            .and_then(|k| ThermalContext::new(t, k, OscillatorConfig::new(units.omega)?))
            .and_then(|ctx| Ok((state_from_temperature(&ctx, c.into())?, Some(ctx)))),
        _ => return usage("give exactly one of --tau/--phi or --temperature/--class"),
    };
    let (s, ctx) = match built {
        Ok(v) => v,
        Err(e) => return usage(e),
    };
    let p = s.params();
    let uv = uv_from_params(&p);
    let balance = s.energy_balance();
    let mut card = String::new();
    let mut line = |k: &str, v: String| card.push_str(&format!("{k:<22}{v}\n"));
    line("class", s.classify(CLASSIFY_TOL).to_string());
    if let Some(ctx) = ctx {
        line("T", format!("{}", ctx.temperature()));
        line("x", format!("{}", ctx.x()));
    }
    line("tau", format!("{}", p.tau()));
    line("phi", format!("{}", p.phi()));
    line("u", format!("{} {:+}i", uv.u.re, uv.u.im));
    line("v", format!("{} {:+}i", uv.v.re, uv.v.im));
    line("var_q", format!("{}", s.var_q()));
    line("var_p", format!("{}", s.var_p()));
    line("cov", format!("{}", s.cov()));
    line("beta", format!("{}", s.beta()));
    line("up_product", format!("{}", s.up_product()));
    line("heisenberg_excess", format!("{:e}", s.heisenberg_excess()));
    line("schrodinger_residual", format!("{:e}", s.schrodinger_residual()));
    line("mean_system_energy", format!("{}", balance.mean_system));
    line("mean_influence_energy", format!("{}", balance.mean_influence));
    line("energy_residual", format!("{:e}", balance.residual));
    print!("{card}");
    ExitCode::SUCCESS
}
