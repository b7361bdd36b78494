//! Self-verification checks shared by the CLI `verify` subcommand and the
//! acceptance test suite.
//!
//! Each check reports what was measured against what was expected. Checks
//! that compare against the published hydrogen tables assume the default
//! constants and are flagged `constant_dependent`; the invariant checks
//! (normalization quadrature, limit behavior, algebraic identities) hold
//! for any valid constants.

use crate::constants::PhysicalConstants;
use crate::error::Result;
use crate::laguerre::{laguerre, laguerre_derivative_identity_residual};
use crate::lamb::{lamb_lambda, BetheTable};
use crate::quad::norm_check;
use crate::radial::{schrodinger_radial, RadialSolution};
use crate::spectra::{energy_with_lambda, transition};
use crate::states::{AtomicState, DiracNumbers};

/// Outcome of one verification check.
#[derive(Debug, Clone)]
pub struct Check {
    /// Criterion group this check belongs to (1..=10).
    pub criterion: u8,
    pub name: &'static str,
    pub passed: bool,
    /// Measured-vs-expected summary for the report line.
    pub detail: String,
    /// Whether the expected values assume the default constants. Invariant
    /// checks stay green under any valid constants; table-match checks may
    /// not.
    pub constant_dependent: bool,
}

impl Check {
    /// One-line report: `PASS  3  table4-energies  <detail>`.
    pub fn report_line(&self) -> String {
        format!(
            "{} {:>2}  {:<28} {}",
            if self.passed { "PASS" } else { "FAIL" },
            self.criterion,
            self.name,
            self.detail
        )
    }
}

/// Default sampling grid shared with the CLI: 2000 points on [0, 16] a0.
pub const GRID_RMAX: f64 = 16.0;
pub const GRID_POINTS: usize = 2000;

const TABLE4: [(&str, f64); 4] = [
    ("1s1/2", -13.598_434_504),
    ("2s1/2", -3.399_624_069),
    ("2p1/2", -3.399_628_443),
    ("2p3/2", -3.399_583_078),
];

/// Published MHz ledger rows: per-column values (None = blank cell),
/// row total, and the dimensionless total in units of 1e-15.
#[allow(clippy::type_complexity)]
const TABLE1: [(&str, [Option<f64>; 7], f64, f64); 4] = [
    (
        "1s1/2",
        [
            Some(-216.675),
            Some(11_158.118),
            Some(406.267),
            None,
            Some(-3_232.943),
            Some(1.940),
            Some(55.090),
        ],
        8_171.797,
        66_180.0,
    ),
    (
        "2s1/2",
        [
            Some(-27.084),
            Some(1_394.765),
            Some(50.783),
            None,
            Some(-380.777),
            Some(0.243),
            Some(6.886),
        ],
        1_044.815,
        8_461.0,
    ),
    (
        "2p1/2",
        [None, None, None, Some(-16.937), Some(4.064), None, None],
        -12.872,
        -104.0,
    ),
    (
        "2p3/2",
        [None, None, None, Some(8.468), Some(4.064), None, None],
        12.533,
        101.0,
    ),
];

fn state(label: &str) -> AtomicState {
    label.parse().expect("static label")
}

/// Runs every check against the given constants and Bethe table.
pub fn run_all(constants: &PhysicalConstants, table: &BetheTable) -> Vec<Check> {
    let mut checks = Vec::new();
    checks.extend(check_table1(constants, table));
    checks.push(check_classic_shift(constants, table));
    checks.push(check_table4_energies(constants, table));
    checks.push(check_normalization_quadrature(constants));
    checks.push(check_lambda_invariance(constants, table));
    checks.push(check_degenerate_limit(constants, table));
    checks.push(check_schrodinger_limit(constants));
    checks.extend(check_fig1_features(constants));
    checks.push(check_dirac_invariants(constants));
    checks.push(check_laguerre_identity(constants));
    checks.push(check_laguerre_table_rows());
    checks.push(check_n_cubed_scaling(constants, table));
    checks.push(check_fine_structure_interval(constants, table));
    checks
}

/// Criterion 1: every nonblank Table-row cell within max(0.5 MHz, 0.2%),
/// row totals likewise, and the dimensionless totals within 1%.
fn check_table1(constants: &PhysicalConstants, table: &BetheTable) -> Vec<Check> {
    const COLUMNS: [&str; 7] = [
        "uehling", "brem+f1", "f2-delta", "f2-clj", "bethe", "ue2", "vert2",
    ];
    let mut checks = Vec::new();
    let mut lambda_worst: f64 = 0.0;
    let mut lambda_ok = true;

    let names = [
        "table1-row-1s1/2",
        "table1-row-2s1/2",
        "table1-row-2p1/2",
        "table1-row-2p3/2",
    ];
    for (i, (label, cells, total, lambda_e15)) in TABLE1.iter().enumerate() {
        let (passed, detail) = match lamb_lambda(state(label), constants, table) {
            Ok(b) => {
                let mut worst = (0.0_f64, "total");
                let mut ok = true;
                for ((cell, measured), column) in cells.iter().zip(b.columns()).zip(COLUMNS.iter())
                {
                    if let Some(expected) = cell {
                        let dev = (measured - expected).abs();
                        if dev > worst.0 {
                            worst = (dev, column);
                        }
                        ok &= dev <= f64::max(0.5, 0.002 * expected.abs());
                    }
                }
                let total_dev = (b.total_mhz - total).abs();
                ok &= total_dev <= f64::max(0.5, 0.002 * total.abs());
                if total_dev > worst.0 {
                    worst = (total_dev, "total");
                }
                let lambda_dev = (b.lambda * 1e15 - lambda_e15).abs() / lambda_e15.abs();
                lambda_worst = lambda_worst.max(lambda_dev);
                lambda_ok &= lambda_dev <= 0.01;
                (
                    ok,
                    format!(
                        "total {:.3} MHz vs {total}; worst cell dev {:.3} MHz ({})",
                        b.total_mhz, worst.0, worst.1
                    ),
                )
            }
            Err(e) => (false, format!("error: {e}")),
        };
        checks.push(Check {
            criterion: 1,
            name: names[i],
            passed,
            detail,
            constant_dependent: true,
        });
    }
    checks.push(Check {
        criterion: 1,
        name: "table1-lambda-column",
        passed: lambda_ok,
        detail: format!(
            "worst relative deviation {:.4}% (tol 1%)",
            lambda_worst * 100.0
        ),
        constant_dependent: true,
    });
    checks
}

/// Criterion 2: the 2s1/2 - 2p1/2 interval lies in [1057, 1059] MHz.
fn check_classic_shift(constants: &PhysicalConstants, table: &BetheTable) -> Check {
    let (passed, detail) = match transition(state("2s1/2"), state("2p1/2"), constants, table) {
        Ok(mhz) => (
            (1057.0..=1059.0).contains(&mhz),
            format!("{mhz:.3} MHz, expected in [1057, 1059]"),
        ),
        Err(e) => (false, format!("error: {e}")),
    };
    Check {
        criterion: 2,
        name: "classic-lamb-shift",
        passed,
        detail,
        constant_dependent: true,
    }
}

/// Criterion 3: the four published level energies within 2e-5 eV
/// (stretch target 2e-6 eV reported in the detail).
fn check_table4_energies(constants: &PhysicalConstants, table: &BetheTable) -> Check {
    let mut worst = 0.0_f64;
    let mut failure = None;
    for (label, expected) in TABLE4 {
        match crate::spectra::energy(state(label), constants, table) {
            Ok(level) => worst = worst.max((level.binding_energy - expected).abs()),
            Err(e) => failure = Some(format!("{label}: {e}")),
        }
    }
    let (passed, detail) = match failure {
        Some(msg) => (false, msg),
        None => (
            worst <= 2e-5,
            format!(
                "worst |dE| = {worst:.2e} eV (tol 2e-5, stretch 2e-6 {})",
                if worst <= 2e-6 { "met" } else { "missed" }
            ),
        ),
    };
    Check {
        criterion: 3,
        name: "table4-energies",
        passed,
        detail,
        constant_dependent: true,
    }
}

/// Criterion 4: independent quadrature reproduces unit norm to 1e-8.
fn check_normalization_quadrature(constants: &PhysicalConstants) -> Check {
    let run = || -> Result<f64> {
        let mut worst = 0.0_f64;
        for (label, _) in TABLE4 {
            let sol = RadialSolution::new(state(label), constants)?;
            let norm = norm_check(&sol)?;
            worst = worst.max((norm.value - 1.0).abs());
        }
        Ok(worst)
    };
    let (passed, detail) = match run() {
        Ok(worst) => (
            worst <= 1e-8,
            format!("worst |norm - 1| = {worst:.2e} (tol 1e-8)"),
        ),
        Err(e) => (false, format!("error: {e}")),
    };
    Check {
        criterion: 4,
        name: "normalization-quadrature",
        passed,
        detail,
        constant_dependent: false,
    }
}

/// Criterion 5: eigenfunction samples are bit-identical whether or not the
/// Lamb shift has been computed; lambda never reaches the radial module.
fn check_lambda_invariance(constants: &PhysicalConstants, table: &BetheTable) -> Check {
    let run = || -> Result<bool> {
        let mut identical = true;
        for (label, _) in TABLE4 {
            let s = state(label);
            // Degenerate context: lambda forced to zero.
            let _zero = energy_with_lambda(s, constants, 0.0)?;
            let sol_a = RadialSolution::new(s, constants)?;
            let samples_a = sol_a.sample_uniform(GRID_RMAX, 256)?;
            // Full context: lambda resolved from the table.
            let _full = lamb_lambda(s, constants, table)?;
            let sol_b = RadialSolution::new(s, constants)?;
            let samples_b = sol_b.sample_uniform(GRID_RMAX, 256)?;
            identical &= samples_a.iter().zip(&samples_b).all(|(a, b)| {
                a.density.to_bits() == b.density.to_bits()
                    && a.r_plus.map(f64::to_bits) == b.r_plus.map(f64::to_bits)
                    && a.r_minus.map(f64::to_bits) == b.r_minus.map(f64::to_bits)
            });
        }
        Ok(identical)
    };
    let (passed, detail) = match run() {
        Ok(true) => (
            true,
            "samples bitwise equal under lambda in {0, full}".into(),
        ),
        Ok(false) => (false, "samples differ between lambda contexts".into()),
        Err(e) => (false, format!("error: {e}")),
    };
    Check {
        criterion: 5,
        name: "lambda-invariance",
        passed,
        detail,
        constant_dependent: false,
    }
}

/// Criterion 6: lambda = 0 makes E(2s1/2) and E(2p1/2) bit-identical; the
/// full lambda splits them with 2p1/2 lower.
fn check_degenerate_limit(constants: &PhysicalConstants, table: &BetheTable) -> Check {
    let run = || -> Result<(bool, String)> {
        let s2s = state("2s1/2");
        let s2p = state("2p1/2");
        let deg_2s = energy_with_lambda(s2s, constants, 0.0)?.binding_energy;
        let deg_2p = energy_with_lambda(s2p, constants, 0.0)?.binding_energy;
        let full_2s = crate::spectra::energy(s2s, constants, table)?.binding_energy;
        let full_2p = crate::spectra::energy(s2p, constants, table)?.binding_energy;
        let bitwise = deg_2s.to_bits() == deg_2p.to_bits();
        let split = full_2p < full_2s;
        Ok((
            bitwise && split,
            format!(
                "degenerate pair {} ({deg_2s} eV); full-lambda split {:.3e} eV with 2p1/2 {}",
                if bitwise { "bit-identical" } else { "DIFFERS" },
                full_2s - full_2p,
                if split { "lower" } else { "NOT lower" },
            ),
        ))
    };
    let (passed, detail) = match run() {
        Ok((ok, detail)) => (ok, detail),
        Err(e) => (false, format!("error: {e}")),
    };
    Check {
        criterion: 6,
        name: "degenerate-limit",
        passed,
        detail,
        constant_dependent: false,
    }
}

/// Criterion 7: scaling the coupling by s shrinks the max deviation of R+
/// from the nonrelativistic function by x100 between s = 1e-2 and 1e-3
/// (O(s^2)), and at s = 1e-6 the two agree to 1e-10 of the curve peak.
fn check_schrodinger_limit(constants: &PhysicalConstants) -> Check {
    let s2p = state("2p1/2");
    let deviation = |scale: f64| -> Result<(f64, f64)> {
        let za = constants.zalpha() * scale;
        let numbers = DiracNumbers::from_zalpha(s2p, za)?;
        let sol = RadialSolution::from_numbers(s2p, numbers, 0.0)?;
        let mut dev = 0.0_f64;
        let mut peak = 0.0_f64;
        for i in 1..=1600 {
            let r = i as f64 * 0.01;
            let (rp, _) = sol.eval(r)?;
            let schr = schrodinger_radial(2, 1, r)?;
            dev = dev.max((rp - schr).abs());
            peak = peak.max(schr.abs());
        }
        Ok((dev, peak))
    };
    let run = || -> Result<(bool, String)> {
        let (dev_coarse, _) = deviation(1e-2)?;
        let (dev_fine, _) = deviation(1e-3)?;
        let (dev_tiny, peak) = deviation(1e-6)?;
        let ratio = dev_coarse / dev_fine;
        let ratio_ok = (60.0..=140.0).contains(&ratio);
        let tiny_ok = dev_tiny <= 1e-10 * peak;
        Ok((
            ratio_ok && tiny_ok,
            format!(
                "deviation ratio {ratio:.1} (expect [60, 140]); s=1e-6 dev {dev_tiny:.1e} vs 1e-10*peak {:.1e}",
                1e-10 * peak
            ),
        ))
    };
    let (passed, detail) = match run() {
        Ok((ok, detail)) => (ok, detail),
        Err(e) => (false, format!("error: {e}")),
    };
    Check {
        criterion: 7,
        name: "schrodinger-limit",
        passed,
        detail,
        constant_dependent: false,
    }
}

/// Criterion 8: the plotted-figure features on the default grid.
fn check_fig1_features(constants: &PhysicalConstants) -> Vec<Check> {
    let step = GRID_RMAX / (GRID_POINTS - 1) as f64;
    let za = constants.zalpha();
    let mut checks = Vec::new();

    let grid_argmax = |sol: &RadialSolution| -> Result<(f64, f64)> {
        let samples = sol.sample_uniform(GRID_RMAX, GRID_POINTS)?;
        Ok(samples
            .iter()
            .map(|s| (s.r, s.density))
            .max_by(|a, b| a.1.total_cmp(&b.1))
            .expect("non-empty grid"))
    };

    // 1s1/2 peak: grid-nearest sqrt(1 - (Z alpha)^2), value 0.5413 +- 0.001.
    let expected_r = (1.0 - za * za).sqrt();
    let (passed, detail) =
        match RadialSolution::new(state("1s1/2"), constants).and_then(|sol| grid_argmax(&sol)) {
            Ok((r, d)) => (
                (r - expected_r).abs() <= step && (d - 0.5413).abs() <= 0.001,
                format!("peak ({r:.4}, {d:.4}) vs ({expected_r:.4} +- {step:.4}, 0.5413 +- 0.001)"),
            ),
            Err(e) => (false, format!("error: {e}")),
        };
    checks.push(Check {
        criterion: 8,
        name: "fig1-1s-peak",
        passed,
        detail,
        constant_dependent: true,
    });

    // 2s: nonrelativistic node at 2 a0 (< 1e-6 at the nearest grid point)
    // removed in the Dirac density (> 1e-5 at 2 a0).
    let r_node = (2.0 / step).round() * step;
    let run = || -> Result<(bool, String)> {
        let schr = schrodinger_radial(2, 0, r_node)?;
        let schr_density = r_node * r_node * schr * schr;
        let sol = RadialSolution::new(state("2s1/2"), constants)?;
        let dirac_density = sol.probability_density(r_node)?;
        let ok = schr_density < 1e-6 && dirac_density > 1e-5;
        Ok((
            ok,
            format!(
                "at r = {r_node:.4}: nonrelativistic {schr_density:.2e} (< 1e-6), Dirac {dirac_density:.2e} (> 1e-5)"
            ),
        ))
    };
    let (passed, detail) = match run() {
        Ok((ok, detail)) => (ok, detail),
        Err(e) => (false, format!("error: {e}")),
    };
    checks.push(Check {
        criterion: 8,
        name: "fig1-2s-node-removed",
        passed,
        detail,
        constant_dependent: true,
    });

    // Nonrelativistic 2p peak at (4 a0, 0.1954 +- 0.001).
    let run = || -> Result<(bool, String)> {
        let mut best = (0.0_f64, f64::MIN);
        for i in 0..GRID_POINTS {
            let r = i as f64 * step;
            let schr = schrodinger_radial(2, 1, r)?;
            let d = r * r * schr * schr;
            if d > best.1 {
                best = (r, d);
            }
        }
        let ok = (best.0 - 4.0).abs() <= step && (best.1 - 0.1954).abs() <= 0.001;
        Ok((
            ok,
            format!(
                "peak ({:.4}, {:.4}) vs (4 +- {step:.4}, 0.1954 +- 0.001)",
                best.0, best.1
            ),
        ))
    };
    let (passed, detail) = match run() {
        Ok((ok, detail)) => (ok, detail),
        Err(e) => (false, format!("error: {e}")),
    };
    checks.push(Check {
        criterion: 8,
        name: "fig1-2p-peak",
        passed,
        detail,
        constant_dependent: false,
    });

    // 2p3/2 peak at grid-nearest 2 sqrt(4 - (Z alpha)^2).
    let expected_r = 2.0 * (4.0 - za * za).sqrt();
    let (passed, detail) =
        match RadialSolution::new(state("2p3/2"), constants).and_then(|sol| grid_argmax(&sol)) {
            Ok((r, d)) => (
                (r - expected_r).abs() <= step,
                format!("peak ({r:.4}, {d:.4}) vs r = {expected_r:.4} +- {step:.4}"),
            ),
            Err(e) => (false, format!("error: {e}")),
        };
    checks.push(Check {
        criterion: 8,
        name: "fig1-2p32-peak",
        passed,
        detail,
        constant_dependent: false,
    });

    checks
}

/// Criterion 9a: the kinematic identities v^2 = (g + u/2)^2 + (Z alpha)^2,
/// w v = g + u/2, and W+ W- = 1 hold to 1e-14 (scale-normalized) for every
/// state with n <= 10.
fn check_dirac_invariants(constants: &PhysicalConstants) -> Check {
    let za = constants.zalpha();
    let mut worst = 0.0_f64;
    let mut count = 0usize;
    for n in 1..=10u32 {
        for l in 0..n {
            for two_j in [2 * l + 1, (2 * l).max(2) - 1] {
                let Ok(s) = AtomicState::new(n, l, two_j) else {
                    continue;
                };
                let Ok(d) = DiracNumbers::from_zalpha(s, za) else {
                    continue;
                };
                let gs = d.g_plus_half_u();
                let res_v = (d.v * d.v - gs * gs - za * za).abs() / (d.v * d.v);
                let res_w = (d.w * d.v - gs).abs() / d.v;
                let res_ww = (d.w_plus() * d.w_minus() - 1.0).abs();
                worst = worst.max(res_v).max(res_w).max(res_ww);
                count += 1;
            }
        }
    }
    Check {
        criterion: 9,
        name: "dirac-number-invariants",
        passed: worst <= 1e-14 && count >= 100,
        detail: format!("{count} states, worst normalized residual {worst:.2e} (tol 1e-14)"),
        constant_dependent: false,
    }
}

/// Criterion 9b: the Laguerre derivative recurrence residual stays below
/// 1e-12 (1 + |L|) for g <= 10 across the working x range.
fn check_laguerre_identity(constants: &PhysicalConstants) -> Check {
    let za = constants.zalpha();
    let mut orders: Vec<f64> = (1..=5)
        .map(|k| 2.0 * ((k * k) as f64 - za * za).sqrt())
        .collect();
    orders.extend([0.5, 5.0]);
    let mut worst = 0.0_f64;
    let mut ok = true;
    for g in 1..=10u32 {
        for &u in &orders {
            for &x in &[0.1, 0.5, 1.0, 2.0, 5.0, 10.0, 20.0, 50.0] {
                let residual = laguerre_derivative_identity_residual(g, u, x).abs();
                let bound = 1e-12 * (1.0 + laguerre(g as i64, u, x).unwrap().abs());
                ok &= residual <= bound;
                worst = worst.max(residual / bound);
            }
        }
    }
    Check {
        criterion: 9,
        name: "laguerre-identity",
        passed: ok,
        detail: format!("worst residual/bound = {worst:.2e}"),
        constant_dependent: false,
    }
}

/// Criterion 9c: the low-order closed forms as exact test vectors.
fn check_laguerre_table_rows() -> Check {
    let mut ok = true;
    ok &= laguerre(-1, 2.5, 7.0).unwrap() == 0.0;
    ok &= laguerre(0, 2.5, 7.0).unwrap() == 1.0;
    ok &= laguerre(1, 3.0, 1.0).unwrap() == 3.0;
    ok &= laguerre(2, 3.0, 1.0).unwrap() == 5.5;
    let mut worst = 0.0_f64;
    for &(u, x) in &[(0.5, 0.2), (1.999_95, 2.0), (4.0, 9.0)] {
        let l1 = laguerre(1, u, x).unwrap();
        let c1 = (u + 1.0) - x;
        let l2 = laguerre(2, u, x).unwrap();
        let c2 = ((u + 1.0) * (u + 2.0) - 2.0 * (u + 2.0) * x + x * x) / 2.0;
        worst = worst
            .max((l1 - c1).abs() / (1.0 + c1.abs()))
            .max((l2 - c2).abs() / (1.0 + c2.abs()));
    }
    ok &= worst <= 1e-13;
    Check {
        criterion: 9,
        name: "laguerre-table-rows",
        passed: ok,
        detail: format!("seed rows exact; closed-form rows within {worst:.2e}"),
        constant_dependent: false,
    }
}

/// Criterion 9d: the delta_l0 ledger terms scale exactly as 1/n^3.
fn check_n_cubed_scaling(constants: &PhysicalConstants, table: &BetheTable) -> Check {
    let run = || -> Result<f64> {
        let b1 = lamb_lambda(state("1s1/2"), constants, table)?;
        let b2 = lamb_lambda(state("2s1/2"), constants, table)?;
        let mut worst = 0.0_f64;
        for (a, b) in [
            (b1.uehling_mhz, b2.uehling_mhz),
            (b1.brem_f1_mhz, b2.brem_f1_mhz),
            (b1.f2_delta_mhz, b2.f2_delta_mhz),
            (b1.ue2_mhz, b2.ue2_mhz),
            (b1.vert2_mhz, b2.vert2_mhz),
        ] {
            worst = worst.max((a / b - 8.0).abs());
        }
        Ok(worst)
    };
    let (passed, detail) = match run() {
        Ok(worst) => (
            worst <= 1e-12,
            format!("worst |ratio - 8| = {worst:.2e} (tol 1e-12)"),
        ),
        Err(e) => (false, format!("error: {e}")),
    };
    Check {
        criterion: 9,
        name: "n-cubed-scaling",
        passed,
        detail,
        constant_dependent: false,
    }
}

/// Criterion 10: the 2p3/2 - 2p1/2 interval within 0.5% of the value the
/// published level energies imply (~10969 MHz).
fn check_fine_structure_interval(constants: &PhysicalConstants, table: &BetheTable) -> Check {
    let derived = PhysicalConstants::default().ev_to_mhz(-3.399_583_078 - (-3.399_628_443));
    let (passed, detail) = match transition(state("2p3/2"), state("2p1/2"), constants, table) {
        Ok(mhz) => (
            (mhz - derived).abs() <= 0.005 * derived,
            format!("{mhz:.3} MHz vs derived {derived:.3} MHz (tol 0.5%)"),
        ),
        Err(e) => (false, format!("error: {e}")),
    };
    Check {
        criterion: 10,
        name: "fine-structure-interval",
        passed,
        detail,
        constant_dependent: true,
    }
}
