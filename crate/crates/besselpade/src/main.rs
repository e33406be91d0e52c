use std::io::{ErrorKind, Write as _};
use std::path::PathBuf;
use std::process::ExitCode;

use besselpade::compare::compare;
use besselpade::report::{
    coefficient_strings, rational_string, DesignReport, Provenance, TfJson, REPORT_VERSION,
};
use besselpade::source::parse_source;
use besselpade::sweep::{omega_grid, render_csv, sweep, write_atomic};
use besselpade::CliError;
use besselpade_core::algebra::{parse_rational, surd_to_float, Rational};
use besselpade_core::budak::gamma_order2;
use besselpade_core::gbp::{gbp, GbpParams};
use besselpade_core::pade::{pade_exp, PadeIndex};
use clap::{Parser, Subcommand};
use num_traits::{Signed, Zero};
use serde_json::json;

/// Writes to stdout; a closed pipe ends the process quietly.
fn emit(text: &str) {
    if let Err(e) = std::io::stdout().lock().write_all(text.as_bytes()) {
        if e.kind() == ErrorKind::BrokenPipe {
            std::process::exit(0);
        }
        eprintln!("error: writing to standard output: {e}");
        std::process::exit(1);
    }
}

macro_rules! out {
    ($($t:tt)*) => { emit(&format!($($t)*)) };
}

macro_rules! outln {
    ($($t:tt)*) => {{ out!($($t)*); emit("\n") }};
}

#[derive(Parser)]
#[command(
    name = "besselpade",
    version,
    about = "Exact Bessel-polynomial delay approximants"
)]
struct Cli {
    /// Emit JSON instead of text.
    #[arg(long, global = true)]
    json: bool,
    /// Significant digits for decimal renderings of irrational values.
    #[arg(
        long,
        global = true,
        env = "BESSELPADE_PRECISION",
        default_value_t = 12
    )]
    precision: usize,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Generalized Bessel polynomial B_n(s, alpha, beta).
    Gbp {
        #[arg(long)]
        n: usize,
        #[arg(long, allow_hyphen_values = true)]
        alpha: String,
        #[arg(long, allow_hyphen_values = true)]
        beta: String,
    },
    /// Padé approximant of exp(-s) with denominator degree n, numerator degree m.
    Pade {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        m: usize,
        /// Full design report instead of the transfer function alone.
        #[arg(long)]
        analyze: bool,
    },
    /// Budak approximant with numerator degree m and denominator degree n.
    Budak {
        #[arg(long)]
        m: usize,
        #[arg(long)]
        n: usize,
        #[arg(
            long,
            allow_hyphen_values = true,
            required_unless_present = "order2_gamma"
        )]
        gamma: Option<String>,
        /// Solve for the two gamma values giving order-2 magnitude flatness.
        #[arg(long, conflicts_with = "gamma")]
        order2_gamma: bool,
    },
    /// Design report for pade:N:M, budak:M:N:GAMMA, bessel:N or file:PATH.
    Analyze { source: String },
    /// CSV frequency sweep over omega in [0, omega-max].
    Sweep {
        source: String,
        #[arg(long)]
        omega_max: f64,
        #[arg(long, default_value_t = 201)]
        points: usize,
        /// Output file; standard output when omitted.
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Padé (n,m) vs Budak (m,n) at the order-2 gamma values vs all-pole Bessel n.
    Compare {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        m: usize,
    },
}

fn rational_arg(text: &str, name: &str) -> Result<Rational, CliError> {
    parse_rational(text)
        .ok_or_else(|| CliError::usage(format!("{name} is not a rational: {text:?}")))
}

fn pretty(value: &serde_json::Value) -> String {
    serde_json::to_string_pretty(value).expect("json value serializes")
}

fn print_report(report: &DesignReport, as_json: bool) {
    if as_json {
        outln!("{}", report.to_json());
    } else {
        out!("{}", report.to_text());
    }
}

fn run(cli: Cli) -> Result<(), CliError> {
    let as_json = cli.json;
    if cli.precision == 0 {
        return Err(CliError::usage("precision must be at least 1"));
    }
    match cli.command {
        Command::Gbp { n, alpha, beta } => {
            let alpha = rational_arg(&alpha, "alpha")?;
            let beta = rational_arg(&beta, "beta")?;
            if beta.is_zero() {
                return Err(CliError::usage("beta must be nonzero"));
            }
            let p = gbp(&GbpParams::new(n, alpha.clone(), beta.clone())?)?;
            if as_json {
                let descending: Vec<String> = coefficient_strings(&p).into_iter().rev().collect();
                outln!(
                    "{}",
                    pretty(&json!({
                        "report_version": REPORT_VERSION,
                        "n": n,
                        "alpha": rational_string(&alpha),
                        "beta": rational_string(&beta),
                        "coefficients_descending": descending,
                        "display": p.to_string(),
                    }))
                );
            } else {
                outln!("{p}");
            }
        }
        Command::Pade { n, m, analyze } => {
            if analyze {
                print_report(&DesignReport::new(Provenance::Pade { n, m })?, as_json);
            } else {
                let tf = pade_exp(PadeIndex::new(n, m));
                if as_json {
                    let v = json!({ "report_version": REPORT_VERSION, "tf": TfJson::from_tf(&tf) });
                    outln!("{}", pretty(&v));
                } else {
                    outln!("{tf}");
                }
            }
        }
        Command::Budak {
            m,
            n,
            gamma,
            order2_gamma,
        } => {
            if m > n {
                return Err(CliError::usage(format!(
                    "numerator degree m={m} exceeds n={n}"
                )));
            }
            if order2_gamma {
                if m == 0 || m >= n {
                    return Err(CliError::usage("--order2-gamma needs 1 <= m < n"));
                }
                let g = gamma_order2(n, m)?;
                let branches = [("upper", &g.upper), ("lower", &g.lower)]
                    .into_iter()
                    .map(|(label, x)| Ok((label, x.to_string(), surd_to_float(x, cli.precision)?)))
                    .collect::<Result<Vec<_>, CliError>>()?;
                if as_json {
                    let rows: Vec<_> = branches
                        .iter()
                        .map(|(label, exact, decimal)| json!({ "branch": label, "exact": exact, "decimal": decimal }))
                        .collect();
                    let v = json!({
                        "report_version": REPORT_VERSION,
                        "m": m,
                        "n": n,
                        "quadratic": coefficient_strings(&g.quadratic),
                        "quadratic_display": g.quadratic.display_in("γ"),
                        "branches": rows,
                    });
                    outln!("{}", pretty(&v));
                } else {
                    for (_, exact, decimal) in &branches {
                        outln!("{exact} ≈ {decimal}");
                    }
                    outln!("q(γ) = {}", g.quadratic.display_in("γ"));
                }
            } else {
                let gamma = gamma.expect("clap requires gamma without --order2-gamma");
                let value = rational_arg(&gamma, "gamma")?;
                if !value.is_positive() {
                    return Err(CliError::usage(format!(
                        "gamma must be positive, got {gamma}"
                    )));
                }
                let provenance = Provenance::Budak {
                    m,
                    n,
                    gamma: rational_string(&value),
                };
                print_report(&DesignReport::new(provenance)?, as_json);
            }
        }
        Command::Analyze { source } => {
            print_report(&DesignReport::new(parse_source(&source)?)?, as_json);
        }
        Command::Sweep {
            source,
            omega_max,
            points,
            output,
        } => {
            let omegas = omega_grid(omega_max, points)?;
            let provenance = parse_source(&source)?;
            let rows = sweep(&provenance.build()?, &omegas);
            let csv = render_csv(&rows);
            let flagged: Vec<f64> = rows
                .iter()
                .filter(|r| r.pole_adjacent)
                .map(|r| r.omega)
                .collect();
            for w in &flagged {
                eprintln!("warning: pole-adjacent sample at omega = {w:?}");
            }
            match &output {
                Some(path) => write_atomic(path, &csv)?,
                None => out!("{csv}"),
            }
            if as_json {
                let v = json!({
                    "report_version": REPORT_VERSION,
                    "source": source,
                    "points": rows.len(),
                    "omega_max": omega_max,
                    "output": output.as_ref().map(|p| p.display().to_string()),
                    "pole_adjacent": flagged,
                });
                let text = pretty(&v);
                // Keep stdout pure CSV when no output file was given.
                if output.is_some() {
                    outln!("{text}");
                } else {
                    eprintln!("{text}");
                }
            }
        }
        Command::Compare { n, m } => {
            let report = compare(n, m, cli.precision)?;
            if as_json {
                outln!(
                    "{}",
                    serde_json::to_string_pretty(&report).expect("report serializes")
                );
            } else {
                out!("{}", report.to_text());
            }
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => e.exit(),
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
