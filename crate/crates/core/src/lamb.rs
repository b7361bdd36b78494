//! The dimensionless Lamb-shift parameter lambda and its per-diagram ledger.
//!
//! With the prefactor P = 4 alpha (Z alpha)^4 mu^2 / (3 pi n^3 m^2),
//!
//!   lambda = P [ (19/30 + ln(m / (mu (Z alpha)^2))) delta_l0
//!                + c_lj - beta_nl
//!                + 3 pi Z alpha (5/192 + 1 + 11/128 - ln2/2) delta_l0 ],
//!
//! split into the ledger columns: Uehling (-1/5), bremsstrahlung + F1
//! (5/6 - 3/8 + the merged logarithm), the F2 contact term (+3/8), the F2
//! spin-orbit term (c_lj, only for l > 0), the Bethe logarithm (-beta_nl),
//! and the two-Coulomb-photon pieces Ue2 (5/192) and Vert2
//! (1 + 11/128 - ln2/2), both carrying the 3 pi Z alpha factor. Each column
//! is also expressed in MHz via lambda_i mu c^2 / h.

use std::collections::BTreeMap;
use std::f64::consts::{LN_2, PI};
use std::path::Path;

use crate::constants::PhysicalConstants;
use crate::error::{Error, Result};
use crate::states::AtomicState;

/// Where a Bethe-logarithm entry came from: shipped with the crate or
/// loaded from an extension file.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Provenance {
    Builtin,
    User,
}

/// Tabulated Bethe logarithms beta_nl, keyed by (n, l).
///
/// The default table holds the 1s, 2s, and 2p values; further states are
/// loaded from `n l beta` extension files and flagged as user-provided.
#[derive(Debug, Clone, PartialEq)]
pub struct BetheTable {
    entries: BTreeMap<(u32, u32), (f64, Provenance)>,
}

impl Default for BetheTable {
    fn default() -> Self {
        let mut entries = BTreeMap::new();
        entries.insert((1, 0), (2.984_128_555, Provenance::Builtin));
        entries.insert((2, 0), (2.811_769_893, Provenance::Builtin));
        entries.insert((2, 1), (-0.030_016_708, Provenance::Builtin));
        Self { entries }
    }
}

impl BetheTable {
    /// The tabulated beta_nl, or an error naming the missing state.
    pub fn bethe_log(&self, n: u32, l: u32) -> Result<f64> {
        self.entries
            .get(&(n, l))
            .map(|(beta, _)| *beta)
            .ok_or_else(|| Error::BetheNotTabulated {
                state: state_name(n, l),
            })
    }

    pub fn provenance(&self, n: u32, l: u32) -> Option<Provenance> {
        self.entries.get(&(n, l)).map(|(_, p)| *p)
    }

    /// Adds or replaces an entry as user-provided.
    pub fn insert_user(&mut self, n: u32, l: u32, beta: f64) {
        self.entries.insert((n, l), (beta, Provenance::User));
    }

    /// Loads whitespace-separated `n l beta` lines; `#` comments and blank
    /// lines are ignored. Returns the number of entries added.
    pub fn load_extension(&mut self, path: &Path) -> Result<usize> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| Error::BetheFile(format!("{}: {e}", path.display())))?;
        self.extend_from_str(&text)
    }

    /// Same as [`BetheTable::load_extension`] but from already-loaded text.
    pub fn extend_from_str(&mut self, text: &str) -> Result<usize> {
        let mut added = 0;
        for (lineno, raw) in text.lines().enumerate() {
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let mut fields = line.split_whitespace();
            let bad = |what: &str| {
                Error::BetheFile(format!("line {}: expected `n l beta`, {what}", lineno + 1))
            };
            let n: u32 = fields
                .next()
                .ok_or_else(|| bad("missing n"))?
                .parse()
                .map_err(|_| bad("bad n"))?;
            let l: u32 = fields
                .next()
                .ok_or_else(|| bad("missing l"))?
                .parse()
                .map_err(|_| bad("bad l"))?;
            let beta: f64 = fields
                .next()
                .ok_or_else(|| bad("missing beta"))?
                .parse()
                .map_err(|_| bad("bad beta"))?;
            if fields.next().is_some() {
                return Err(bad("trailing fields"));
            }
            self.insert_user(n, l, beta);
            added += 1;
        }
        Ok(added)
    }
}

fn state_name(n: u32, l: u32) -> String {
    match "spdfg".chars().nth(l as usize) {
        Some(letter) => format!("{n}{letter}"),
        None => format!("(n={n}, l={l})"),
    }
}

/// The tabulated beta_nl for a state. Convenience wrapper over the table.
pub fn bethe_log(n: u32, l: u32, table: &BetheTable) -> Result<f64> {
    table.bethe_log(n, l)
}

/// Angular expectation value c_lj of the spin-orbit operator:
/// (3m/8mu) [j(j+1) - l(l+1) - 3/4] / [(2l+1) l (l+1)] for l > 0,
/// exactly 0 for l = 0. Only the leading term is carried.
pub fn angular_expectation(l: u32, two_j: u32, mu_ratio: f64) -> f64 {
    if l == 0 {
        return 0.0;
    }
    let lf = l as f64;
    let jj = (two_j as f64) * (two_j as f64 + 2.0) / 4.0;
    let numerator = jj - lf * (lf + 1.0) - 0.75;
    let denominator = (2.0 * lf + 1.0) * lf * (lf + 1.0);
    (3.0 / (8.0 * mu_ratio)) * numerator / denominator
}

/// The per-diagram Lamb-shift ledger for one state: each contribution in
/// MHz, the MHz total, and the dimensionless total lambda.
///
/// For l > 0 every delta_l0 column is exactly zero; for l = 0 the c_lj
/// column is exactly zero.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LambBreakdown {
    pub state: AtomicState,
    pub uehling_mhz: f64,
    pub brem_f1_mhz: f64,
    pub f2_delta_mhz: f64,
    pub f2_clj_mhz: f64,
    pub bethe_mhz: f64,
    pub ue2_mhz: f64,
    pub vert2_mhz: f64,
    pub total_mhz: f64,
    pub lambda: f64,
}

impl LambBreakdown {
    /// The seven contribution columns in ledger order.
    pub fn columns(&self) -> [f64; 7] {
        [
            self.uehling_mhz,
            self.brem_f1_mhz,
            self.f2_delta_mhz,
            self.f2_clj_mhz,
            self.bethe_mhz,
            self.ue2_mhz,
            self.vert2_mhz,
        ]
    }
}

/// Assembles lambda and its MHz ledger for a state.
pub fn lamb_lambda(
    state: AtomicState,
    constants: &PhysicalConstants,
    table: &BetheTable,
) -> Result<LambBreakdown> {
    constants.validate()?;
    let beta = table.bethe_log(state.n(), state.l())?;
    let mu_ratio = constants.reduced_mass_ratio();
    let za = constants.zalpha();
    let n = state.n() as f64;
    let prefactor =
        4.0 * constants.alpha * za.powi(4) * mu_ratio * mu_ratio / (3.0 * PI * n.powi(3));

    let s_state = state.l() == 0;
    let delta = if s_state { 1.0 } else { 0.0 };
    let clj = angular_expectation(state.l(), state.two_j(), mu_ratio);
    let log_term = constants.hartree_log_argument().ln();
    let two_photon = 3.0 * PI * za;

    let lambda_uehling = prefactor * (-1.0 / 5.0) * delta;
    let lambda_brem_f1 = prefactor * (5.0 / 6.0 - 3.0 / 8.0 + log_term) * delta;
    let lambda_f2_delta = prefactor * (3.0 / 8.0) * delta;
    let lambda_f2_clj = prefactor * clj;
    let lambda_bethe = prefactor * (-beta);
    let lambda_ue2 = prefactor * two_photon * (5.0 / 192.0) * delta;
    let lambda_vert2 = prefactor * two_photon * (1.0 + 11.0 / 128.0 - LN_2 / 2.0) * delta;

    let mu_c2 = constants.reduced_rest_energy();
    let to_mhz = |lambda_part: f64| constants.ev_to_mhz(lambda_part * mu_c2);

    let uehling_mhz = to_mhz(lambda_uehling);
    let brem_f1_mhz = to_mhz(lambda_brem_f1);
    let f2_delta_mhz = to_mhz(lambda_f2_delta);
    let f2_clj_mhz = to_mhz(lambda_f2_clj);
    let bethe_mhz = to_mhz(lambda_bethe);
    let ue2_mhz = to_mhz(lambda_ue2);
    let vert2_mhz = to_mhz(lambda_vert2);

    Ok(LambBreakdown {
        state,
        uehling_mhz,
        brem_f1_mhz,
        f2_delta_mhz,
        f2_clj_mhz,
        bethe_mhz,
        ue2_mhz,
        vert2_mhz,
        total_mhz: uehling_mhz
            + brem_f1_mhz
            + f2_delta_mhz
            + f2_clj_mhz
            + bethe_mhz
            + ue2_mhz
            + vert2_mhz,
        lambda: lambda_uehling
            + lambda_brem_f1
            + lambda_f2_delta
            + lambda_f2_clj
            + lambda_bethe
            + lambda_ue2
            + lambda_vert2,
    })
}
