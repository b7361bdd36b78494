//! Adaptive quadrature on [0, inf) for exponentially decaying integrands.
//!
//! This is the independent numerical oracle for the closed-form radial
//! normalization: panels use the 15-point Kronrod rule with the embedded
//! 7-point Gauss rule as error estimator. All nodes are interior, so
//! integrands that are unbounded (but integrable) at r = 0 are never
//! evaluated at the endpoint. The semi-infinite range is covered by
//! doubling windows [0,1], [1,2], [2,4], ... until the window contribution
//! falls below the tail allowance, then the worst panel anywhere is bisected
//! until the global error estimate meets the requested relative tolerance.

use crate::error::{Error, Result};
use crate::radial::RadialSolution;

/// Value, error estimate, and cost of one integration.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QuadResult {
    pub value: f64,
    pub abs_error_estimate: f64,
    pub evaluations: usize,
}

// 15-point Kronrod nodes (positive half) and weights, with the embedded
// 7-point Gauss weights on the odd-indexed nodes. QUADPACK values, kept at
// their published precision.
#[allow(clippy::excessive_precision)]
const XGK: [f64; 8] = [
    0.991_455_371_120_812_639_206_854_7,
    0.949_107_912_342_758_524_526_189_7,
    0.864_864_423_359_769_072_789_712_8,
    0.741_531_185_599_394_439_863_864_8,
    0.586_087_235_467_691_130_294_144_8,
    0.405_845_151_377_397_166_906_606_4,
    0.207_784_955_007_898_467_600_689_4,
    0.0,
];
#[allow(clippy::excessive_precision)]
const WGK: [f64; 8] = [
    0.022_935_322_010_529_224_963_732_0,
    0.063_092_092_629_978_553_290_700_7,
    0.104_790_010_322_250_183_839_876_3,
    0.140_653_259_715_525_918_745_189_6,
    0.169_004_726_639_267_902_826_583_4,
    0.190_350_578_064_785_409_913_256_4,
    0.204_432_940_075_298_892_414_162_0,
    0.209_482_141_084_727_828_012_999_2,
];
#[allow(clippy::excessive_precision)]
const WG: [f64; 4] = [
    0.129_484_966_168_869_693_270_611_4,
    0.279_705_391_489_276_667_901_467_8,
    0.381_830_050_505_118_944_950_369_8,
    0.417_959_183_673_469_387_755_102_0,
];

const MAX_EVALUATIONS: usize = 400_000;
const MAX_WINDOW_EXPONENT: u32 = 30;

#[derive(Debug, Clone, Copy)]
struct Panel {
    a: f64,
    b: f64,
    value: f64,
    error: f64,
}

/// One Gauss-Kronrod application on [a, b]: (kronrod value, error estimate).
fn gk15<F: Fn(f64) -> f64>(f: &F, a: f64, b: f64) -> (f64, f64) {
    let center = 0.5 * (a + b);
    let half = 0.5 * (b - a);
    let f_center = f(center);
    let mut kronrod = WGK[7] * f_center;
    let mut gauss = WG[3] * f_center;
    for i in 0..7 {
        let offset = half * XGK[i];
        let sum = f(center - offset) + f(center + offset);
        kronrod += WGK[i] * sum;
        if i % 2 == 1 {
            gauss += WG[i / 2] * sum;
        }
    }
    kronrod *= half;
    gauss *= half;
    (kronrod, (kronrod - gauss).abs())
}

fn kahan_sum<I: Iterator<Item = f64>>(values: I) -> f64 {
    let mut sum = 0.0;
    let mut compensation = 0.0;
    for v in values {
        let y = v - compensation;
        let t = sum + y;
        compensation = (t - sum) - y;
        sum = t;
    }
    sum
}

/// Integrates `f` over [0, inf) to the requested relative tolerance.
///
/// The integrand must decay at least exponentially beyond a finite radius;
/// `rel_tol` is clamped into [1e-12, 1e-3]. On success the error estimate
/// satisfies `abs_error_estimate <= rel_tol * |value|`; if the evaluation
/// budget runs out first, the best estimate is returned inside the error.
pub fn integrate_semi_infinite<F: Fn(f64) -> f64>(f: F, rel_tol: f64) -> Result<QuadResult> {
    let rel_tol = rel_tol.clamp(1e-12, 1e-3);
    let tail_frac = rel_tol / 8.0;

    let mut panels: Vec<Panel> = Vec::new();
    let mut evaluations = 0usize;

    // Seed panels from doubling windows until the tail is negligible.
    let mut total = 0.0;
    let mut quiet_windows = 0u32;
    let mut exponent = 0u32;
    let tail_allowance = loop {
        let (a, b) = if exponent == 0 {
            (0.0, 1.0)
        } else {
            (
                f64::powi(2.0, exponent as i32 - 1),
                f64::powi(2.0, exponent as i32),
            )
        };
        let (value, error) = gk15(&f, a, b);
        evaluations += 15;
        panels.push(Panel { a, b, value, error });
        total += value;

        if exponent >= 1 && value.abs() <= tail_frac * total.abs() {
            quiet_windows += 1;
            if quiet_windows >= 2 {
                // Exponential decay and doubling windows make the remaining
                // tail no larger than the last window's contribution.
                break value.abs();
            }
        } else {
            quiet_windows = 0;
        }
        exponent += 1;
        if exponent > MAX_WINDOW_EXPONENT {
            let abs_error_estimate = kahan_sum(panels.iter().map(|p| p.error)) + value.abs();
            return Err(Error::QuadratureNoConvergence {
                value: kahan_sum(panels.iter().map(|p| p.value)),
                abs_error_estimate,
                evaluations,
            });
        }
    };

    // Refine the worst panel until the global estimate meets tolerance.
    loop {
        let value = kahan_sum(panels.iter().map(|p| p.value));
        let error = kahan_sum(panels.iter().map(|p| p.error)) + tail_allowance;
        if error <= rel_tol * value.abs() {
            return Ok(QuadResult {
                value,
                abs_error_estimate: error,
                evaluations,
            });
        }
        if evaluations + 30 > MAX_EVALUATIONS {
            return Err(Error::QuadratureNoConvergence {
                value,
                abs_error_estimate: error,
                evaluations,
            });
        }
        let worst = panels
            .iter()
            .enumerate()
            .max_by(|a, b| a.1.error.total_cmp(&b.1.error))
            .map(|(i, _)| i)
            .expect("at least one panel");
        let Panel { a, b, .. } = panels.swap_remove(worst);
        let mid = 0.5 * (a + b);
        for (lo, hi) in [(a, mid), (mid, b)] {
            let (value, error) = gk15(&f, lo, hi);
            panels.push(Panel {
                a: lo,
                b: hi,
                value,
                error,
            });
        }
        evaluations += 30;
    }
}

/// Numerically re-verifies the closed-form normalization of a radial
/// solution: integrates r^2 (R+^2 + R-^2) over [0, inf). The result is 1
/// within 1e-8 for any unshifted solution.
pub fn norm_check(sol: &RadialSolution) -> Result<QuadResult> {
    debug_assert_eq!(
        sol.shift_f(),
        0.0,
        "norm_check is only meaningful for unshifted solutions"
    );
    integrate_semi_infinite(|r| sol.probability_density(r).unwrap_or(f64::NAN), 1e-9)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn exponential_is_exact() {
        let res = integrate_semi_infinite(|r| (-r).exp(), 1e-10).unwrap();
        assert!((res.value - 1.0).abs() < 1e-10);
        assert!(res.abs_error_estimate <= 1e-10 * res.value.abs());
        assert!(res.evaluations > 0);
    }

    #[test]
    fn hydrogen_ground_density_is_unit_norm() {
        // r^2 * 4 e^{-2r}: Gamma(3)/2^3 * 4 = 1 analytically.
        let res = integrate_semi_infinite(|r| r * r * 4.0 * (-2.0 * r).exp(), 1e-10).unwrap();
        assert!((res.value - 1.0).abs() < 1e-10);
    }

    #[test]
    fn polynomial_times_exponential_degree_8() {
        // integral of (r^8 - 3 r^5 + 2 r^2 + 1) e^{-r}
        //   = 8! - 3*5! + 2*2! + 1 = 39965.
        let f = |r: f64| (r.powi(8) - 3.0 * r.powi(5) + 2.0 * r * r + 1.0) * (-r).exp();
        let res = integrate_semi_infinite(f, 1e-12).unwrap();
        assert!((res.value - 39_965.0).abs() <= 1e-12 * 39_965.0);
    }

    type Integrand = fn(f64) -> f64;

    #[test]
    fn halving_tolerance_never_worsens_analytic_cases() {
        let cases: [(Integrand, f64); 2] = [
            (|r| (-r).exp(), 1.0),
            (|r| r * r * 4.0 * (-2.0 * r).exp(), 1.0),
        ];
        for (f, exact) in cases {
            let mut tol = 1e-4;
            let mut prev_err = f64::INFINITY;
            while tol >= 1e-11 {
                let res = integrate_semi_infinite(f, tol).unwrap();
                let err = (res.value - exact).abs();
                // Monotone until the rounding plateau (~1e-14 relative).
                assert!(
                    err <= prev_err || err <= 1e-14 * exact.abs(),
                    "tol {tol}: error grew from {prev_err:e} to {err:e}"
                );
                prev_err = prev_err.min(err);
                tol /= 2.0;
            }
        }
    }

    #[test]
    fn mildly_singular_origin_converges() {
        // r^{-0.5} e^{-r} is unbounded at 0 but integrable: Gamma(1/2).
        let res = integrate_semi_infinite(|r| r.powf(-0.5) * (-r).exp(), 1e-9).unwrap();
        let exact = std::f64::consts::PI.sqrt();
        assert!((res.value - exact).abs() < 1e-6 * exact);
    }

    #[test]
    fn dirac_ground_state_norm_check() {
        // The closed-form normalization guarantees unit norm; quadrature is
        // the independent route to the same number.
        let sol = RadialSolution::new(
            "1s1/2".parse().unwrap(),
            &crate::constants::PhysicalConstants::default(),
        )
        .unwrap();
        let res = norm_check(&sol).unwrap();
        assert!((res.value - 1.0).abs() < 1e-8, "norm {}", res.value);
    }

    #[test]
    fn schrodinger_2s_density_is_unit_norm() {
        let f = |r: f64| {
            let v = crate::radial::schrodinger_radial(2, 0, r).unwrap();
            r * r * v * v
        };
        let res = integrate_semi_infinite(f, 1e-11).unwrap();
        assert!((res.value - 1.0).abs() < 1e-10, "norm {}", res.value);
    }

    #[test]
    fn non_decaying_integrand_errors_with_best_estimate() {
        let err = integrate_semi_infinite(|r| 1.0 / (1.0 + r), 1e-6).unwrap_err();
        match err {
            Error::QuadratureNoConvergence {
                value, evaluations, ..
            } => {
                assert!(value > 1.0);
                assert!(evaluations > 0);
            }
            other => panic!("expected non-convergence, got {other:?}"),
        }
    }
}
