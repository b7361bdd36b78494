//! Command-line surface: per-state level tables, the Lamb-shift ledger,
//! radial grid samples, and the self-verification suite.
//!
//! Exit codes: 0 success, 1 compute/check failure, 2 usage errors
//! (including unreadable constants or Bethe-table files).

mod table;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use dirac_hydrogen::lamb::lamb_lambda;
use dirac_hydrogen::radial::schrodinger_radial;
use dirac_hydrogen::spectra::{energy, energy_with_lambda};
use dirac_hydrogen::states::DiracNumbers;
use dirac_hydrogen::verify;
use dirac_hydrogen::{AtomicState, BetheTable, PhysicalConstants, RadialSolution};
use table::{Cell, Format, OutputTable};

const DEFAULT_STATES: &str = "1s1/2 2s1/2 2p1/2 2p3/2";

#[derive(Parser)]
#[command(
    name = "dirac-hydrogen",
    version,
    about = "Nondegenerate hydrogen levels, Lamb-shift ledger, and radial eigenfunctions"
)]
struct Cli {
    /// Constants override file (`key = value`; keys: alpha,
    /// electron_rest_energy_ev, nuclear_mass_ratio, planck_h_ev_s, Z).
    #[arg(long, global = true, value_name = "PATH")]
    constants: Option<PathBuf>,

    /// Bethe-logarithm extension file (`n l beta` per line).
    #[arg(long, global = true, value_name = "PATH")]
    bethe: Option<PathBuf>,

    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = CliFormat::Csv)]
    format: CliFormat,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Quantum numbers, dimensionless parameters, and level energies.
    Levels {
        /// Space- or comma-separated spectroscopic labels, e.g. "1s1/2 2p3/2".
        #[arg(long, default_value = DEFAULT_STATES)]
        states: String,

        /// Include the Lamb shift (full) or force it to zero (degenerate).
        #[arg(long, value_enum, default_value_t = LambdaMode::Full)]
        lambda: LambdaMode,
    },
    /// Per-diagram Lamb-shift ledger in MHz plus the dimensionless total.
    Lamb {
        #[arg(long, default_value = DEFAULT_STATES)]
        states: String,
    },
    /// Uniform radial grid samples (r, R+, R-, density) per state.
    Radial {
        #[arg(long, default_value = DEFAULT_STATES)]
        states: String,

        /// Grid end in units of a0.
        #[arg(long, default_value_t = verify::GRID_RMAX)]
        rmax: f64,

        /// Number of grid points (>= 2).
        #[arg(long, default_value_t = verify::GRID_POINTS)]
        points: usize,

        /// Signed level shift applied as x = 2r/(v + f).
        #[arg(long, default_value_t = 0.0, allow_negative_numbers = true)]
        f: f64,

        /// Also emit the nonrelativistic curve for each state's (n, l).
        #[arg(long)]
        schrodinger: bool,
    },
    /// Run every self-verification check and report pass/fail lines.
    Verify,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum LambdaMode {
    Full,
    Zero,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum CliFormat {
    Csv,
    Json,
}

impl From<CliFormat> for Format {
    fn from(f: CliFormat) -> Self {
        match f {
            CliFormat::Csv => Format::Csv,
            CliFormat::Json => Format::Json,
        }
    }
}

const EXIT_OK: u8 = 0;
const EXIT_FAILURE: u8 = 1;
const EXIT_USAGE: u8 = 2;

fn main() -> ExitCode {
    let cli = Cli::parse();
    ExitCode::from(run(cli))
}

fn run(cli: Cli) -> u8 {
    let constants = match &cli.constants {
        Some(path) => match PhysicalConstants::from_file(path) {
            Ok(c) => c,
            Err(e) => {
                eprintln!("error: {e}");
                return EXIT_USAGE;
            }
        },
        None => PhysicalConstants::default(),
    };
    let mut bethe = BetheTable::default();
    if let Some(path) = &cli.bethe {
        if let Err(e) = bethe.load_extension(path) {
            eprintln!("error: {e}");
            return EXIT_USAGE;
        }
    }
    let format = cli.format.into();

    match cli.command {
        Command::Levels { states, lambda } => {
            cmd_levels(&states, lambda, &constants, &bethe, format)
        }
        Command::Lamb { states } => cmd_lamb(&states, &constants, &bethe, format),
        Command::Radial {
            states,
            rmax,
            points,
            f,
            schrodinger,
        } => cmd_radial(&states, rmax, points, f, schrodinger, &constants, format),
        Command::Verify => cmd_verify(&constants, &bethe),
    }
}

/// Splits a label list on whitespace and commas; every bad label is
/// reported on stderr.
fn parse_states(arg: &str) -> Result<Vec<AtomicState>, u8> {
    let mut states = Vec::new();
    let mut failures = 0usize;
    for token in arg.split([' ', '\t', ',']).filter(|t| !t.is_empty()) {
        match token.parse::<AtomicState>() {
            Ok(s) => states.push(s),
            Err(e) => {
                eprintln!("error: {e}");
                failures += 1;
            }
        }
    }
    if failures > 0 {
        Err(EXIT_FAILURE)
    } else {
        Ok(states)
    }
}

fn cmd_levels(
    states: &str,
    lambda: LambdaMode,
    constants: &PhysicalConstants,
    bethe: &BetheTable,
    format: Format,
) -> u8 {
    let states = match parse_states(states) {
        Ok(s) => s,
        Err(code) => return code,
    };
    let mut table = OutputTable::new(vec![
        "state",
        "n",
        "l",
        "j",
        "k",
        "g",
        "u",
        "v",
        "w",
        "energy_ev",
    ]);
    let mut failures = 0usize;
    for state in states {
        let level = match lambda {
            LambdaMode::Full => energy(state, constants, bethe),
            LambdaMode::Zero => energy_with_lambda(state, constants, 0.0),
        };
        let numbers = DiracNumbers::for_state(state, constants);
        match (level, numbers) {
            (Ok(level), Ok(d)) => table.push_row(vec![
                Cell::Text(state.label()),
                Cell::Int(state.n() as i64),
                Cell::Int(state.l() as i64),
                Cell::Text(format!("{}/2", state.two_j())),
                Cell::Int(d.k as i64),
                Cell::Int(d.g as i64),
                Cell::F12(d.u),
                Cell::F12(d.v),
                Cell::F12(d.w),
                Cell::F9(level.binding_energy),
            ]),
            (Err(e), _) | (_, Err(e)) => {
                eprintln!("error: {}: {e}", state.label());
                failures += 1;
            }
        }
    }
    print!("{}", table.render(format));
    if failures > 0 {
        EXIT_FAILURE
    } else {
        EXIT_OK
    }
}

fn cmd_lamb(states: &str, constants: &PhysicalConstants, bethe: &BetheTable, format: Format) -> u8 {
    let states = match parse_states(states) {
        Ok(s) => s,
        Err(code) => return code,
    };
    let mut table = OutputTable::new(vec![
        "state",
        "uehling_mhz",
        "brem_f1_mhz",
        "f2_delta_mhz",
        "f2_clj_mhz",
        "bethe_mhz",
        "ue2_mhz",
        "vert2_mhz",
        "total_mhz",
        "lambda_1e-15",
    ]);
    let mut failures = 0usize;
    let mut totals: Vec<(AtomicState, f64)> = Vec::new();
    for state in &states {
        match lamb_lambda(*state, constants, bethe) {
            Ok(b) => {
                // delta_l0 pattern: blank instead of 0.000 where a diagram
                // cannot contribute, mirroring the published layout.
                let s_state = state.l() == 0;
                let delta_cell = |on: bool, x: f64| if on { Cell::F3(x) } else { Cell::Blank };
                table.push_row(vec![
                    Cell::Text(state.label()),
                    delta_cell(s_state, b.uehling_mhz),
                    delta_cell(s_state, b.brem_f1_mhz),
                    delta_cell(s_state, b.f2_delta_mhz),
                    delta_cell(!s_state, b.f2_clj_mhz),
                    Cell::F3(b.bethe_mhz),
                    delta_cell(s_state, b.ue2_mhz),
                    delta_cell(s_state, b.vert2_mhz),
                    Cell::F3(b.total_mhz),
                    Cell::Int((b.lambda * 1e15).round() as i64),
                ]);
                totals.push((*state, b.total_mhz));
            }
            Err(e) => {
                eprintln!("error: {}: {e}", state.label());
                failures += 1;
            }
        }
    }
    let find = |label: &str| {
        totals
            .iter()
            .find(|(s, _)| s.label() == label)
            .map(|(_, t)| *t)
    };
    if let (Some(s2), Some(p2)) = (find("2s1/2"), find("2p1/2")) {
        table.push_footer("classic_shift_2s1/2-2p1/2_mhz", format!("{:.3}", s2 - p2));
    }
    print!("{}", table.render(format));
    if failures > 0 {
        EXIT_FAILURE
    } else {
        EXIT_OK
    }
}

fn cmd_radial(
    states: &str,
    rmax: f64,
    points: usize,
    f: f64,
    schrodinger: bool,
    constants: &PhysicalConstants,
    format: Format,
) -> u8 {
    if rmax.is_nan() || rmax <= 0.0 || points < 2 {
        eprintln!("error: --rmax must be positive and --points at least 2");
        return EXIT_USAGE;
    }
    let states = match parse_states(states) {
        Ok(s) => s,
        Err(code) => return code,
    };
    let mut table = OutputTable::new(vec!["state", "r_a0", "r_plus", "r_minus", "density"]);
    let mut failures = 0usize;
    for state in &states {
        match RadialSolution::with_shift(*state, constants, f)
            .and_then(|sol| sol.sample_uniform(rmax, points))
        {
            Ok(samples) => {
                for s in samples {
                    table.push_row(vec![
                        Cell::Text(state.label()),
                        Cell::F9(s.r),
                        s.r_plus.map_or(Cell::Blank, Cell::Sci),
                        s.r_minus.map_or(Cell::Blank, Cell::Sci),
                        Cell::Sci(s.density),
                    ]);
                }
            }
            Err(e) => {
                eprintln!("error: {}: {e}", state.label());
                failures += 1;
            }
        }
    }
    if schrodinger {
        let mut seen: Vec<(u32, u32)> = Vec::new();
        for state in &states {
            let key = (state.n(), state.l());
            if seen.contains(&key) {
                continue;
            }
            seen.push(key);
            let label = {
                let mut base = state.label();
                base.truncate(base.len() - 3); // drop the j suffix
                format!("{base}-schrodinger")
            };
            let step = rmax / (points - 1) as f64;
            let mut rows = Vec::with_capacity(points);
            let mut failed = false;
            for i in 0..points {
                let r = i as f64 * step;
                match schrodinger_radial(key.0, key.1, r) {
                    Ok(value) => rows.push((r, value)),
                    Err(e) => {
                        eprintln!("error: {label}: {e}");
                        failures += 1;
                        failed = true;
                        break;
                    }
                }
            }
            if !failed {
                for (r, value) in rows {
                    table.push_row(vec![
                        Cell::Text(label.clone()),
                        Cell::F9(r),
                        Cell::Sci(value),
                        Cell::Blank,
                        Cell::Sci(r * r * value * value),
                    ]);
                }
            }
        }
    }
    print!("{}", table.render(format));
    if failures > 0 {
        EXIT_FAILURE
    } else {
        EXIT_OK
    }
}

fn cmd_verify(constants: &PhysicalConstants, bethe: &BetheTable) -> u8 {
    let checks = verify::run_all(constants, bethe);
    for check in &checks {
        println!("{}", check.report_line());
    }
    let failed = checks.iter().filter(|c| !c.passed).count();
    println!(
        "{} of {} checks passed",
        checks.len() - failed,
        checks.len()
    );
    if failed > 0 {
        EXIT_FAILURE
    } else {
        EXIT_OK
    }
}
