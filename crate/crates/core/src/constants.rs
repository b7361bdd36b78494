//! Dimensional constants and the reduced quantities derived from them.
//!
//! Defaults are CODATA 2018. Every downstream computation receives a
//! `PhysicalConstants` value explicitly, so alternative charges Z or scaled
//! couplings (for limit studies) never touch global state.

use std::path::Path;

use crate::error::{Error, Result};

/// CODATA 2018 fine-structure constant.
pub const CODATA_ALPHA: f64 = 7.297_352_569_3e-3;
/// CODATA 2018 electron rest energy m c^2 (eV).
pub const CODATA_ELECTRON_REST_ENERGY_EV: f64 = 510_998.950_00;
/// CODATA 2018 proton/electron mass ratio.
pub const CODATA_PROTON_ELECTRON_MASS_RATIO: f64 = 1_836.152_673_43;
/// CODATA 2018 Planck constant (eV s, exact).
pub const CODATA_PLANCK_H_EV_S: f64 = 4.135_667_696e-15;

/// The dimensional inputs of every calculation.
///
/// Lengths elsewhere in the crate are expressed in units of the reduced Bohr
/// radius (a0 = 1), so only the coupling, the two masses, Planck's constant,
/// and the nuclear charge are needed.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PhysicalConstants {
    /// Fine-structure constant alpha (dimensionless).
    pub alpha: f64,
    /// Electron rest energy m c^2 (eV).
    pub electron_rest_energy: f64,
    /// Nuclear to electron mass ratio M/m (dimensionless).
    pub nuclear_mass_ratio: f64,
    /// Planck constant h (eV s).
    pub planck_h: f64,
    /// Atomic number Z.
    pub z: u32,
}

impl Default for PhysicalConstants {
    /// Hydrogen with CODATA 2018 values.
    fn default() -> Self {
        Self {
            alpha: CODATA_ALPHA,
            electron_rest_energy: CODATA_ELECTRON_REST_ENERGY_EV,
            nuclear_mass_ratio: CODATA_PROTON_ELECTRON_MASS_RATIO,
            planck_h: CODATA_PLANCK_H_EV_S,
            z: 1,
        }
    }
}

impl PhysicalConstants {
    /// Validates strict positivity of every field and Z >= 1.
    pub fn validate(&self) -> Result<()> {
        let positive = [
            ("alpha", self.alpha),
            ("electron_rest_energy_ev", self.electron_rest_energy),
            ("nuclear_mass_ratio", self.nuclear_mass_ratio),
            ("planck_h_ev_s", self.planck_h),
        ];
        for (name, value) in positive {
            if !value.is_finite() || value <= 0.0 {
                return Err(Error::InvalidConstants(format!(
                    "{name} must be strictly positive and finite, got {value}"
                )));
            }
        }
        if self.z < 1 {
            return Err(Error::InvalidConstants("Z must be at least 1".into()));
        }
        Ok(())
    }

    /// Z * alpha, the coupling every dimensionless parameter depends on.
    pub fn zalpha(&self) -> f64 {
        self.z as f64 * self.alpha
    }

    /// Reduced-mass ratio mu/m = 1/(1 + m/M); lies in (0, 1).
    pub fn reduced_mass_ratio(&self) -> f64 {
        1.0 / (1.0 + 1.0 / self.nuclear_mass_ratio)
    }

    /// Reduced rest energy mu c^2 (eV).
    pub fn reduced_rest_energy(&self) -> f64 {
        self.reduced_mass_ratio() * self.electron_rest_energy
    }

    /// The argument m/(mu (Z alpha)^2) of the merged Lamb-shift logarithm:
    /// the electron rest energy over the Hartree energy.
    pub fn hartree_log_argument(&self) -> f64 {
        let za = self.zalpha();
        (1.0 / self.reduced_mass_ratio()) / (za * za)
    }

    /// Converts an energy in eV to a frequency in MHz via E/h.
    pub fn ev_to_mhz(&self, energy_ev: f64) -> f64 {
        energy_ev / self.planck_h * 1e-6
    }

    /// Reads `key = value` overrides from a text file.
    ///
    /// Recognized keys: `alpha`, `electron_rest_energy_ev`,
    /// `nuclear_mass_ratio`, `planck_h_ev_s`, `Z`. Blank lines and lines
    /// starting with `#` are ignored. Unrecognized keys are an error.
    pub fn from_file(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| Error::ConstantsFile(format!("{}: {e}", path.display())))?;
        let mut c = Self::default();
        c.apply_overrides(&text)?;
        Ok(c)
    }

    /// Applies `key = value` overrides from already-loaded text.
    pub fn apply_overrides(&mut self, text: &str) -> Result<()> {
        for (lineno, raw) in text.lines().enumerate() {
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let (key, value) = line.split_once('=').ok_or_else(|| {
                Error::ConstantsFile(format!("line {}: expected `key = value`", lineno + 1))
            })?;
            let key = key.trim();
            let value = value.trim();
            let parse_f64 = |v: &str| {
                v.parse::<f64>().map_err(|_| {
                    Error::ConstantsFile(format!("line {}: bad number `{v}`", lineno + 1))
                })
            };
            match key {
                "alpha" => self.alpha = parse_f64(value)?,
                "electron_rest_energy_ev" => self.electron_rest_energy = parse_f64(value)?,
                "nuclear_mass_ratio" => self.nuclear_mass_ratio = parse_f64(value)?,
                "planck_h_ev_s" => self.planck_h = parse_f64(value)?,
                "Z" | "z" => {
                    self.z = value.parse::<u32>().map_err(|_| {
                        Error::ConstantsFile(format!(
                            "line {}: Z must be a positive integer, got `{value}`",
                            lineno + 1
                        ))
                    })?;
                }
                other => {
                    return Err(Error::ConstantsFile(format!(
                        "line {}: unknown key `{other}`",
                        lineno + 1
                    )));
                }
            }
        }
        self.validate()
    }

    /// Same constants with the coupling scaled by `s`; used for limit
    /// studies (s -> 0 recovers the nonrelativistic spectrum).
    pub fn with_alpha_scaled(&self, s: f64) -> Self {
        Self {
            alpha: self.alpha * s,
            ..*self
        }
    }
}
