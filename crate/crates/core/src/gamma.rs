//! Log-gamma via the Lanczos approximation (g = 7, 9 terms).
//!
//! Normalization factors need gamma-function ratios like
//! Gamma(1+g)/Gamma(1+g+u) with non-integer u; they are formed as
//! differences of `ln_gamma` and exponentiated so the ratio never
//! overflows even when the individual factorials would.

use std::f64::consts::PI;

const LANCZOS_G: f64 = 7.0;
#[allow(clippy::excessive_precision)]
const LANCZOS: [f64; 9] = [
    0.999_999_999_999_809_93,
    676.520_368_121_885_1,
    -1_259.139_216_722_402_8,
    771.323_428_777_653_13,
    -176.615_029_162_140_59,
    12.507_343_278_686_905,
    -0.138_571_095_265_720_12,
    9.984_369_578_019_571_6e-6,
    1.505_632_735_149_311_6e-7,
];

/// Natural log of the gamma function for x > 0.
pub(crate) fn ln_gamma(x: f64) -> f64 {
    debug_assert!(x > 0.0, "ln_gamma requires a positive argument");
    if x < 0.5 {
        // Reflection keeps the series argument in its accurate range.
        return (PI / (PI * x).sin()).ln() - ln_gamma(1.0 - x);
    }
    let z = x - 1.0;
    let mut series = LANCZOS[0];
    for (i, c) in LANCZOS.iter().enumerate().skip(1) {
        series += c / (z + i as f64);
    }
    let t = z + LANCZOS_G + 0.5;
    0.5 * (2.0 * PI).ln() + (z + 0.5) * t.ln() - t + series.ln()
}

/// Gamma function for x > 0, via `exp(ln_gamma)`. Test-side cross-check
/// partner for the log-space ratios used in normalization.
#[cfg(test)]
pub(crate) fn gamma(x: f64) -> f64 {
    ln_gamma(x).exp()
}
