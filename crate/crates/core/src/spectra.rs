//! Nondegenerate energy levels and transition frequencies.
//!
//! The binding energy is E = mu c^2 (w_qn - 1 + lambda) with
//! w_qn = 1/sqrt(1 + q^2), q = Z alpha / (g + u/2). The rest-mass
//! subtraction is fused into
//!
//!   w_qn - 1 = -q^2 / (sqrt(1+q^2) (1 + sqrt(1+q^2)))
//!
//! so no near-equal quantities are subtracted; a naive 1/sqrt(1+q^2) - 1
//! would lose ~5 significant digits at hydrogen scale. Lambda enters as an
//! additive mu c^2 lambda term, which keeps the lambda -> 0 degenerate
//! spectrum bit-for-bit reproducible.

use crate::constants::PhysicalConstants;
use crate::error::Result;
use crate::lamb::{lamb_lambda, BetheTable};
use crate::states::{AtomicState, DiracNumbers};

/// A bound level: binding energy (negative), the lambda used, and the total
/// dimensionless energy parameter w_total = w_qn + lambda.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EnergyLevel {
    pub state: AtomicState,
    /// Binding energy in eV; negative for every bound state.
    pub binding_energy: f64,
    /// The dimensionless Lamb-shift parameter included in the level.
    pub lambda_used: f64,
    /// w_qn + lambda, the E/mu c^2 ratio before rest-mass subtraction.
    pub w_total: f64,
}

/// Level with lambda resolved from the Bethe table.
pub fn energy(
    state: AtomicState,
    constants: &PhysicalConstants,
    table: &BetheTable,
) -> Result<EnergyLevel> {
    let lambda = lamb_lambda(state, constants, table)?.lambda;
    energy_with_lambda(state, constants, lambda)
}

/// Level with an explicit lambda (pass 0 for the degenerate spectrum).
pub fn energy_with_lambda(
    state: AtomicState,
    constants: &PhysicalConstants,
    lambda: f64,
) -> Result<EnergyLevel> {
    let numbers = DiracNumbers::for_state(state, constants)?;
    let q = constants.zalpha() / numbers.g_plus_half_u();
    let root = (1.0 + q * q).sqrt();
    let w_qn_minus_one = -(q * q) / (root * (1.0 + root));
    let mu_c2 = constants.reduced_rest_energy();
    Ok(EnergyLevel {
        state,
        binding_energy: mu_c2 * w_qn_minus_one + mu_c2 * lambda,
        lambda_used: lambda,
        w_total: (1.0 + w_qn_minus_one) + lambda,
    })
}

/// Transition frequency (E_a - E_b)/h in MHz.
pub fn transition(
    a: AtomicState,
    b: AtomicState,
    constants: &PhysicalConstants,
    table: &BetheTable,
) -> Result<f64> {
    let ea = energy(a, constants, table)?.binding_energy;
    let eb = energy(b, constants, table)?.binding_energy;
    Ok(constants.ev_to_mhz(ea - eb))
}
