//! Radial eigenfunctions of the bound electron.
//!
//! The large/small pair is evaluated in closed form,
//!
//!   R+- = N+- sqrt(e^{-x} x^{u-2}) [ +-(v - k) L_g^u(x) - (g + u) L_{g-1}^u(x) ],
//!
//! with x = 2r/v (a0 = 1) and normalization
//!
//!   N+- = sqrt( 2 (1 +- w) Gamma(1+g) / (v^4 (v - k) Gamma(1+g+u)) ).
//!
//! The Lamb shift never enters here: it cancels from the eigenfunctions, so
//! the same solution serves any lambda. An optional signed shift f (Lamb
//! plus hyperfine, from either branch of v +- f) replaces x -> 2r/(v+f) and
//! v^4 -> v (v+f)^3 for illustration; no unit-norm claim is made for f != 0.

use crate::constants::PhysicalConstants;
use crate::error::{Error, Result};
use crate::gamma::ln_gamma;
use crate::laguerre::laguerre;
use crate::states::{AtomicState, DiracNumbers};

/// A normalized radial solution: the state's Dirac parameters plus the two
/// normalization factors, ready to evaluate at any radius.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RadialSolution {
    state: AtomicState,
    numbers: DiracNumbers,
    n_plus: f64,
    n_minus: f64,
    shift_f: f64,
}

impl RadialSolution {
    /// Builds the unshifted solution for a state.
    pub fn new(state: AtomicState, constants: &PhysicalConstants) -> Result<Self> {
        Self::with_shift(state, constants, 0.0)
    }

    /// Builds a solution with the signed level shift `f` (pass a negative
    /// value for the lower branch of v +- f).
    pub fn with_shift(state: AtomicState, constants: &PhysicalConstants, f: f64) -> Result<Self> {
        let numbers = DiracNumbers::for_state(state, constants)?;
        Self::from_numbers(state, numbers, f)
    }

    /// Builds a solution from precomputed Dirac parameters; used for
    /// coupling-scaled limit studies.
    pub fn from_numbers(state: AtomicState, numbers: DiracNumbers, f: f64) -> Result<Self> {
        let (n_plus, n_minus) = normalization_from_numbers(&numbers, f)?;
        Ok(Self {
            state,
            numbers,
            n_plus,
            n_minus,
            shift_f: f,
        })
    }

    pub fn state(&self) -> AtomicState {
        self.state
    }

    pub fn numbers(&self) -> &DiracNumbers {
        &self.numbers
    }

    /// Large-component normalization (a0^{-3/2} units).
    pub fn n_plus(&self) -> f64 {
        self.n_plus
    }

    /// Small-component normalization (a0^{-3/2} units).
    pub fn n_minus(&self) -> f64 {
        self.n_minus
    }

    pub fn shift_f(&self) -> f64 {
        self.shift_f
    }

    /// Effective length scale v + f that sets x = 2r/(v + f).
    fn scale(&self) -> f64 {
        self.numbers.v + self.shift_f
    }

    /// Evaluates (R+, R-) at radius r (in a0).
    ///
    /// r = 0 is allowed only when u >= 2; for u < 2 the closed form carries
    /// an integrable x^{u/2-1} divergence at the origin.
    pub fn eval(&self, r: f64) -> Result<(f64, f64)> {
        if r.is_nan() || r < 0.0 {
            return Err(Error::NegativeRadius(r));
        }
        let n = &self.numbers;
        let x = 2.0 * r / self.scale();
        let amplitude = if x == 0.0 {
            match n.u.partial_cmp(&2.0).expect("u is finite") {
                std::cmp::Ordering::Less => return Err(Error::SingularOrigin { u: n.u }),
                std::cmp::Ordering::Equal => 1.0,
                std::cmp::Ordering::Greater => 0.0,
            }
        } else {
            // sqrt(e^{-x} x^{u-2}) without forming either factor separately.
            ((-x + (n.u - 2.0) * x.ln()) / 2.0).exp()
        };
        let lg = laguerre(n.g as i64, n.u, x)?;
        let lg_prev = laguerre(n.g as i64 - 1, n.u, x)?;
        let v_minus_k = n.v - n.k as f64;
        let tail = (n.g as f64 + n.u) * lg_prev;
        let r_plus = self.n_plus * amplitude * (v_minus_k * lg - tail);
        let r_minus = self.n_minus * amplitude * (-v_minus_k * lg - tail);
        Ok((r_plus, r_minus))
    }

    /// The quantity plotted in radial-distribution figures:
    /// r^2 (R+^2 + R-^2), finite for every r >= 0.
    pub fn probability_density(&self, r: f64) -> Result<f64> {
        if r.is_nan() || r < 0.0 {
            return Err(Error::NegativeRadius(r));
        }
        if r == 0.0 {
            // The r^2 factor wins against the x^{u-2} divergence: the
            // density behaves as x^u near the origin.
            return Ok(0.0);
        }
        let (r_plus, r_minus) = self.eval(r)?;
        Ok(r * r * (r_plus * r_plus + r_minus * r_minus))
    }

    /// Uniform samples of (r, R+, R-, density) on [0, r_max]. The R+-
    /// entries are `None` at a singular origin (u < 2, r = 0).
    pub fn sample_uniform(&self, r_max: f64, points: usize) -> Result<Vec<RadialSample>> {
        debug_assert!(points >= 2 && r_max > 0.0);
        let step = r_max / (points - 1) as f64;
        (0..points)
            .map(|i| {
                let r = i as f64 * step;
                let pair = match self.eval(r) {
                    Ok((p, m)) => Some((p, m)),
                    Err(Error::SingularOrigin { .. }) => None,
                    Err(e) => return Err(e),
                };
                Ok(RadialSample {
                    r,
                    r_plus: pair.map(|(p, _)| p),
                    r_minus: pair.map(|(_, m)| m),
                    density: self.probability_density(r)?,
                })
            })
            .collect()
    }
}

/// One grid record of a sampled solution.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RadialSample {
    pub r: f64,
    pub r_plus: Option<f64>,
    pub r_minus: Option<f64>,
    pub density: f64,
}

/// The normalization pair (N+, N-) for a state.
pub fn normalization(state: AtomicState, constants: &PhysicalConstants) -> Result<(f64, f64)> {
    let numbers = DiracNumbers::for_state(state, constants)?;
    normalization_from_numbers(&numbers, 0.0)
}

fn normalization_from_numbers(numbers: &DiracNumbers, f: f64) -> Result<(f64, f64)> {
    let DiracNumbers { k, g, u, v, w, .. } = *numbers;
    if numbers.zalpha == 0.0 && k > 0 {
        return Err(Error::DegenerateLimit { k });
    }
    let scale = v + f;
    if scale.is_nan() || scale <= 0.0 {
        return Err(Error::InvalidShift { f, v });
    }
    let g = g as f64;
    // ln of 2 Gamma(1+g) / (v (v+f)^3 (v-k) Gamma(1+g+u)); the gamma ratio
    // is formed in log space so large arguments never overflow.
    let common = std::f64::consts::LN_2 + ln_gamma(1.0 + g)
        - v.ln()
        - 3.0 * scale.ln()
        - (v - k as f64).ln()
        - ln_gamma(1.0 + g + u);
    let n_plus = (0.5 * ((1.0 + w).ln() + common)).exp();
    let n_minus = if w >= 1.0 {
        0.0
    } else {
        (0.5 * ((1.0 - w).ln() + common)).exp()
    };
    Ok((n_plus, n_minus))
}

/// The nonrelativistic radial function
///
///   R_nl(r) = -sqrt(4 (n-l-1)! / (n^4 (n+l)!)) sqrt(e^{-x} x^{2l})
///             L_{n-l-1}^{2l+1}(x),    x = 2r/n,
///
/// with the overall minus sign kept as in the closed-form limit of the
/// large component for k = +l states.
pub fn schrodinger_radial(n: u32, l: u32, r: f64) -> Result<f64> {
    if n == 0 {
        return Err(Error::PrincipalZero);
    }
    if l >= n {
        return Err(Error::OrbitalOutOfRange { n, l });
    }
    if r.is_nan() || r < 0.0 {
        return Err(Error::NegativeRadius(r));
    }
    let nf = n as f64;
    let x = 2.0 * r / nf;
    let ln_norm = 0.5
        * (4.0_f64.ln() + ln_gamma((n - l) as f64) - 4.0 * nf.ln() - ln_gamma((n + l + 1) as f64));
    let amplitude = (-x / 2.0).exp() * x.powi(l as i32);
    let poly = laguerre((n - l) as i64 - 1, 2.0 * l as f64 + 1.0, x)?;
    Ok(-ln_norm.exp() * amplitude * poly)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gamma::gamma;

    fn constants() -> PhysicalConstants {
        PhysicalConstants::default()
    }

    fn solution(label: &str) -> RadialSolution {
        RadialSolution::new(label.parse().unwrap(), &constants()).unwrap()
    }

    #[test]
    fn normalization_ratio_is_w_minus() {
        for label in ["1s1/2", "2s1/2", "2p1/2", "2p3/2", "3d5/2", "5g9/2"] {
            let sol = solution(label);
            let expected = ((1.0 - sol.numbers().w) / (1.0 + sol.numbers().w)).sqrt();
            assert!(
                (sol.n_minus() / sol.n_plus() - expected).abs() < 1e-12,
                "{label}"
            );
            assert!(sol.n_plus() > 0.0 && sol.n_minus() > 0.0);
        }
    }

    #[test]
    fn ground_state_normalization_against_direct_gamma() {
        // 1s1/2: g = 0, v = 1, v - k = 2, so
        // N+- = sqrt((1 +- w) / Gamma(1 + u)) directly.
        let sol = solution("1s1/2");
        let n = sol.numbers();
        let direct_plus = ((1.0 + n.w) / gamma(1.0 + n.u)).sqrt();
        let direct_minus = ((1.0 - n.w) / gamma(1.0 + n.u)).sqrt();
        assert!((sol.n_plus() - direct_plus).abs() < 1e-13 * direct_plus);
        assert!((sol.n_minus() - direct_minus).abs() < 1e-13 * direct_minus);
    }

    #[test]
    fn ground_state_has_no_lower_laguerre_term() {
        // g = 0 makes L_{g-1} = 0, so R+- is a pure exponential envelope
        // times +-(v - k).
        let sol = solution("1s1/2");
        let n = *sol.numbers();
        let r = 0.7;
        let x = 2.0 * r / n.v;
        let envelope = ((-x + (n.u - 2.0) * x.ln()) / 2.0).exp();
        let (r_plus, r_minus) = sol.eval(r).unwrap();
        let v_minus_k = n.v - n.k as f64;
        assert!((r_plus - sol.n_plus() * envelope * v_minus_k).abs() < 1e-15);
        assert!((r_minus + sol.n_minus() * envelope * v_minus_k).abs() < 1e-15);
    }

    #[test]
    fn singular_origin_only_below_u_of_two() {
        // s states have u slightly below 2: the origin is singular.
        let sol = solution("1s1/2");
        assert!(matches!(sol.eval(0.0), Err(Error::SingularOrigin { .. })));
        assert_eq!(sol.probability_density(0.0).unwrap(), 0.0);
        // 2p3/2 has u ~ 4: regular origin.
        let sol = solution("2p3/2");
        assert_eq!(sol.eval(0.0).unwrap(), (0.0, 0.0));
        assert!(matches!(sol.eval(-1.0), Err(Error::NegativeRadius(_))));
    }

    #[test]
    fn density_peaks_match_figure_features() {
        let c = constants();
        let za = c.zalpha();
        // 1s1/2 peaks at r = sqrt(1 - (Z alpha)^2); 2p3/2 at 2 sqrt(4 - ...).
        for (label, expected) in [
            ("1s1/2", (1.0 - za * za).sqrt()),
            ("2p3/2", 2.0 * (4.0 - za * za).sqrt()),
        ] {
            let sol = solution(label);
            let step = 1e-4;
            let mut best = (0.0, f64::MIN);
            let mut r = step;
            while r < 8.0 {
                let d = sol.probability_density(r).unwrap();
                if d > best.1 {
                    best = (r, d);
                }
                r += step;
            }
            assert!(
                (best.0 - expected).abs() <= step,
                "{label}: argmax {} vs expected {expected}",
                best.0
            );
        }
    }

    #[test]
    fn dirac_2s_density_has_no_node() {
        let sol = solution("2s1/2");
        // The Schrodinger 2s node sits at r = 2 a0; the Dirac density stays
        // strictly positive there because R+ and R- vanish at different radii.
        let d = sol.probability_density(2.0).unwrap();
        assert!(d > 0.0);
        let schr = schrodinger_radial(2, 0, 2.0).unwrap();
        assert_eq!(schr, 0.0);
    }

    #[test]
    fn small_r_exponent_matches_u() {
        // log R(r) - (u/2 - 1) log(2r/v) levels off as r -> 0. The slope is
        // measured on R- for every state and on R+ for k < 0 states; for
        // k > 0 the R+ bracket at the origin is O((Z alpha)^2), so inside
        // r in [1e-6, 1e-4] the x^{u/2} term still competes with the leading
        // one and the asymptotic slope only sets in below r ~ 1e-7.
        for label in ["1s1/2", "2s1/2", "2p1/2", "2p3/2"] {
            let sol = solution(label);
            let expected = sol.numbers().u / 2.0 - 1.0;
            let (r1, r2) = (1e-6, 1e-4);
            let slope = |f: &dyn Fn(f64) -> f64| (f(r2) - f(r1)) / (r2.ln() - r1.ln());
            let minus = slope(&|r| sol.eval(r).unwrap().1.abs().ln());
            assert!(
                (minus - expected).abs() < 1e-3,
                "{label}: R- slope {minus} vs {expected}"
            );
            if sol.numbers().k < 0 {
                let plus = slope(&|r| sol.eval(r).unwrap().0.abs().ln());
                assert!(
                    (plus - expected).abs() < 1e-3,
                    "{label}: R+ slope {plus} vs {expected}"
                );
            }
        }
    }

    #[test]
    fn large_r_decay_rate_is_one_over_v() {
        // Compensating the closed form by e^{r/v} r^{-(u/2-1+g)} must level
        // off across [20v, 40v]: exactly constant for g = 0, and with a
        // shrinking O(1/x) drift for g >= 1, below 1% over the last part of
        // the window.
        for label in ["1s1/2", "2s1/2", "2p1/2", "2p3/2"] {
            let sol = solution(label);
            let n = sol.numbers();
            let power = n.u / 2.0 - 1.0 + n.g as f64;
            let compensated = |r: f64| {
                let (rp, _) = sol.eval(r).unwrap();
                rp * (r / n.v).exp() * r.powf(-power)
            };
            let f20 = compensated(20.0 * n.v);
            let f25 = compensated(25.0 * n.v);
            let f35 = compensated(35.0 * n.v);
            let f40 = compensated(40.0 * n.v);
            assert!(
                (f40 / f35 - 1.0).abs() < 0.01,
                "{label}: tail ratio {}",
                f40 / f35
            );
            // The drift shrinks along the window.
            assert!((f40 / f35 - 1.0).abs() <= (f25 / f20 - 1.0).abs() + 1e-12);
            if n.g == 0 {
                assert!((f40 / f20 - 1.0).abs() < 1e-9, "{label}");
            }
        }
    }

    #[test]
    fn schrodinger_radial_figure_values() {
        // 1s at r = 1: density 4 e^{-2}; 2s node at r = 2; 2p at r = 4:
        // density (256/24) e^{-4}.
        let r1s = schrodinger_radial(1, 0, 1.0).unwrap();
        assert!((1.0 * r1s * r1s - 0.541_341_132_946_450_8).abs() < 1e-14);
        assert_eq!(schrodinger_radial(2, 0, 2.0).unwrap(), 0.0);
        let r2p = schrodinger_radial(2, 1, 4.0).unwrap();
        assert!((16.0 * r2p * r2p - 0.195_366_814_813_164_43).abs() < 1e-14);
        assert!(matches!(
            schrodinger_radial(2, 2, 1.0),
            Err(Error::OrbitalOutOfRange { .. })
        ));
    }

    #[test]
    fn schrodinger_limit_of_large_component() {
        // For k = +l states the coupling -> 0 limit of R+ reproduces the
        // nonrelativistic function including its overall minus sign.
        let state: AtomicState = "2p1/2".parse().unwrap();
        let deviation = |s: f64| {
            let za = constants().zalpha() * s;
            let numbers = DiracNumbers::from_zalpha(state, za).unwrap();
            let sol = RadialSolution::from_numbers(state, numbers, 0.0).unwrap();
            let mut max_dev = 0.0_f64;
            for i in 1..=1600 {
                let r = i as f64 * 0.01;
                let (rp, _) = sol.eval(r).unwrap();
                let schr = schrodinger_radial(2, 1, r).unwrap();
                max_dev = max_dev.max((rp - schr).abs());
            }
            max_dev
        };
        let dev_coarse = deviation(1e-2);
        let dev_fine = deviation(1e-3);
        let ratio = dev_coarse / dev_fine;
        assert!(
            (60.0..140.0).contains(&ratio),
            "O(s^2) convergence expected, ratio {ratio}"
        );
    }

    #[test]
    fn limit_normalization_matches_schrodinger_prefactor() {
        // k = +l states: N+ -> sqrt(4 (n-l-1)! / (n^4 (n+l)!)).
        for (label, n, l) in [("2p1/2", 2u32, 1u32), ("3d3/2", 3, 2)] {
            let state: AtomicState = label.parse().unwrap();
            let numbers = DiracNumbers::from_zalpha(state, 1e-8).unwrap();
            let sol = RadialSolution::from_numbers(state, numbers, 0.0).unwrap();
            let expected = (4.0 * gamma((n - l) as f64)
                / ((n as f64).powi(4) * gamma((n + l + 1) as f64)))
            .sqrt();
            assert!(
                (sol.n_plus() - expected).abs() < 1e-10 * expected,
                "{label}"
            );
            // The small component scales out: N- * anything bounded -> 0.
            assert!(sol.n_minus() < 1e-7);
        }
    }

    #[test]
    fn degenerate_zero_coupling_with_positive_k_is_rejected() {
        let state: AtomicState = "2p1/2".parse().unwrap();
        let numbers = DiracNumbers::from_zalpha(state, 0.0).unwrap();
        assert!(matches!(
            RadialSolution::from_numbers(state, numbers, 0.0),
            Err(Error::DegenerateLimit { k: 1 })
        ));
        // Negative k is fine at zero coupling: the small component vanishes.
        let state: AtomicState = "1s1/2".parse().unwrap();
        let numbers = DiracNumbers::from_zalpha(state, 0.0).unwrap();
        let sol = RadialSolution::from_numbers(state, numbers, 0.0).unwrap();
        assert_eq!(sol.n_minus(), 0.0);
    }

    #[test]
    fn shifted_solution_changes_scale_and_norm() {
        let state: AtomicState = "2s1/2".parse().unwrap();
        let c = constants();
        let plain = RadialSolution::new(state, &c).unwrap();
        let shifted = RadialSolution::with_shift(state, &c, 1e-3).unwrap();
        assert_ne!(plain.n_plus(), shifted.n_plus());
        // Same x means the same Laguerre content: R scales by the norm ratio.
        let r_plain = 1.0;
        let r_shift = r_plain * (plain.numbers().v + 1e-3) / plain.numbers().v;
        let (p0, _) = plain.eval(r_plain).unwrap();
        let (p1, _) = shifted.eval(r_shift).unwrap();
        assert!((p1 / p0 - shifted.n_plus() / plain.n_plus()).abs() < 1e-12);
        // f <= -v is rejected.
        assert!(matches!(
            RadialSolution::with_shift(state, &c, -3.0),
            Err(Error::InvalidShift { .. })
        ));
    }

    #[test]
    fn sample_uniform_marks_singular_origin() {
        let sol = solution("2s1/2");
        let samples = sol.sample_uniform(16.0, 2).unwrap();
        assert_eq!(samples.len(), 2);
        assert_eq!(samples[0].r, 0.0);
        assert!(samples[0].r_plus.is_none());
        assert_eq!(samples[0].density, 0.0);
        assert_eq!(samples[1].r, 16.0);
        assert!(samples[1].r_plus.is_some());
    }
}
