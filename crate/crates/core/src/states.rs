//! Quantum-number model: validated (n, l, j) states, spectroscopic labels,
//! and the lambda-free Dirac parameters k, g, u, v, w.

use std::fmt;
use std::str::FromStr;

use crate::constants::PhysicalConstants;
use crate::error::{Error, Result};

const ORBITAL_LETTERS: [char; 5] = ['s', 'p', 'd', 'f', 'g'];

/// Largest supported principal quantum number. Bethe logarithms and the
/// factorial-scale gamma ratios are only meaningful at small n.
pub const MAX_N: u32 = 50;

/// A bound state (n, l, j). j is stored doubled so half-integers stay exact.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct AtomicState {
    n: u32,
    l: u32,
    two_j: u32,
}

impl AtomicState {
    /// Validates 1 <= n <= 50, l <= n - 1, and j = l +- 1/2 with j >= 1/2.
    pub fn new(n: u32, l: u32, two_j: u32) -> Result<Self> {
        if n == 0 {
            return Err(Error::PrincipalZero);
        }
        if n > MAX_N {
            return Err(Error::PrincipalTooLarge(n as u64));
        }
        if l >= n {
            return Err(Error::OrbitalOutOfRange { n, l });
        }
        if two_j == 0 || two_j.is_multiple_of(2) {
            return Err(Error::TotalAngularTooSmall);
        }
        if two_j != 2 * l + 1 && (l == 0 || two_j != 2 * l - 1) {
            return Err(Error::TotalAngularMismatch { l, two_j });
        }
        Ok(Self { n, l, two_j })
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn l(&self) -> u32 {
        self.l
    }

    /// Twice the total angular momentum, always odd.
    pub fn two_j(&self) -> u32 {
        self.two_j
    }

    pub fn j(&self) -> f64 {
        self.two_j as f64 / 2.0
    }

    /// Signed Dirac quantum number: -(j + 1/2) when j = l + 1/2,
    /// +(j + 1/2) when j = l - 1/2. Never zero.
    pub fn kappa(&self) -> i32 {
        let magnitude = (self.two_j as i32 + 1) / 2;
        if self.two_j == 2 * self.l + 1 {
            -magnitude
        } else {
            magnitude
        }
    }

    /// Spectroscopic label, e.g. "2p3/2".
    pub fn label(&self) -> String {
        let letter = ORBITAL_LETTERS.get(self.l as usize).copied().unwrap_or('?');
        format!("{}{}{}/2", self.n, letter, self.two_j)
    }
}

impl fmt::Display for AtomicState {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.label())
    }
}

impl FromStr for AtomicState {
    type Err = Error;

    /// Parses spectroscopic notation: `<digits><s|p|d|f|g><1|3|5|7|9>/2`,
    /// ignoring any `_`, `{`, `}` (so `2p_{3/2}` works too).
    fn from_str(label: &str) -> Result<Self> {
        let cleaned: String = label.chars().filter(|c| !"_{}".contains(*c)).collect();
        let malformed = || Error::MalformedLabel(label.to_string());

        let digits_end = cleaned
            .find(|c: char| !c.is_ascii_digit())
            .ok_or_else(malformed)?;
        if digits_end == 0 {
            return Err(malformed());
        }
        let n: u64 = cleaned[..digits_end].parse().map_err(|_| malformed())?;

        let rest = &cleaned[digits_end..];
        let mut chars = rest.chars();
        let letter = chars.next().ok_or_else(malformed)?;
        let l = ORBITAL_LETTERS
            .iter()
            .position(|&c| c == letter)
            .ok_or_else(malformed)? as u32;

        let numerator = chars.next().ok_or_else(malformed)?;
        if !matches!(numerator, '1' | '3' | '5' | '7' | '9') {
            return Err(malformed());
        }
        if chars.as_str() != "/2" {
            return Err(malformed());
        }
        let two_j = numerator.to_digit(10).unwrap();

        if n > MAX_N as u64 {
            return Err(Error::PrincipalTooLarge(n));
        }
        AtomicState::new(n as u32, l, two_j)
    }
}

/// Parses a spectroscopic label. Convenience alias for `str::parse`.
pub fn parse_state(label: &str) -> Result<AtomicState> {
    label.parse()
}

/// The lambda-free kinematic parameters of a state at coupling Z*alpha.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DiracNumbers {
    /// Signed Dirac quantum number.
    pub k: i32,
    /// Laguerre degree g = n - |k| >= 0.
    pub g: u32,
    /// u = 2 sqrt(k^2 - (Z alpha)^2).
    pub u: f64,
    /// Apparent principal quantum number v = sqrt((g + u/2)^2 + (Z alpha)^2).
    pub v: f64,
    /// w = (g + u/2)/v, in (0, 1] (1 only at Z alpha = 0).
    pub w: f64,
    /// The coupling these numbers were built at.
    pub zalpha: f64,
}

impl DiracNumbers {
    /// Builds the parameters for `state` at the constants' coupling.
    pub fn for_state(state: AtomicState, constants: &PhysicalConstants) -> Result<Self> {
        Self::from_zalpha(state, constants.zalpha())
    }

    /// Builds the parameters at an explicit coupling; `zalpha = 0` gives the
    /// nonrelativistic values u = 2|k|, v = n, w = 1.
    pub fn from_zalpha(state: AtomicState, zalpha: f64) -> Result<Self> {
        if !(0.0..1.0).contains(&zalpha) {
            return Err(Error::SupercriticalCharge { zalpha });
        }
        let k = state.kappa();
        let k_abs = k.unsigned_abs();
        let g = state.n() - k_abs;
        let k2 = (k_abs as f64) * (k_abs as f64);
        let u = 2.0 * (k2 - zalpha * zalpha).sqrt();
        let s = g as f64 + u / 2.0;
        let v = (s * s + zalpha * zalpha).sqrt();
        let w = s / v;
        Ok(Self {
            k,
            g,
            u,
            v,
            w,
            zalpha,
        })
    }

    /// g + u/2, the recurring combination in v, w, and the energy formula.
    pub fn g_plus_half_u(&self) -> f64 {
        self.g as f64 + self.u / 2.0
    }

    /// W^- = sqrt((1 - w)/(1 + w)).
    pub fn w_minus(&self) -> f64 {
        ((1.0 - self.w) / (1.0 + self.w)).sqrt()
    }

    /// W^+ = sqrt((1 + w)/(1 - w)); infinite in the w -> 1 limit.
    pub fn w_plus(&self) -> f64 {
        ((1.0 + self.w) / (1.0 - self.w)).sqrt()
    }
}

/// Builds the Dirac parameters for a state. Convenience wrapper around
/// [`DiracNumbers::for_state`].
pub fn dirac_numbers(state: AtomicState, constants: &PhysicalConstants) -> Result<DiracNumbers> {
    DiracNumbers::for_state(state, constants)
}

/// Dimensionless radial coordinate x = 2r/v with r in units of a0.
pub fn x_of_r(r: f64, v: f64) -> f64 {
    debug_assert!(r >= 0.0 && v > 0.0);
    2.0 * r / v
}
