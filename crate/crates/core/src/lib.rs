//! Dirac hydrogen atom with a nondegenerate, Lamb-shift energy spectrum.
//!
//! The crate computes, for a hydrogen-like atom:
//!
//! - quantum-number kinematics of a bound state (the signed Dirac number k,
//!   the Laguerre degree g, and the dimensionless parameters u, v, w),
//! - the dimensionless Lamb-shift parameter lambda with its per-diagram
//!   ledger in MHz (Uehling, bremsstrahlung + F1, F2 terms, Bethe logarithm,
//!   and the two-Coulomb-photon corrections),
//! - closed-form radial eigenfunctions R+/R- with exact normalization,
//!   their Schrodinger limit, and the sampled probability densities,
//! - nondegenerate binding energies and transition frequencies,
//! - an adaptive quadrature oracle that re-verifies the closed-form
//!   normalization numerically.
//!
//! All lengths are in units of the reduced Bohr radius (a0 = 1); energies
//! are in eV and frequencies in MHz.
//!
//! ```
//! use dirac_hydrogen::{quad, spectra, BetheTable, PhysicalConstants, RadialSolution};
//!
//! let constants = PhysicalConstants::default();
//! let table = BetheTable::default();
//!
//! let state = "2p3/2".parse()?;
//! let level = spectra::energy(state, &constants, &table)?;
//! assert!((level.binding_energy - -3.399_583_079).abs() < 1e-6);
//!
//! let sol = RadialSolution::new(state, &constants)?;
//! let norm = quad::norm_check(&sol)?;
//! assert!((norm.value - 1.0).abs() < 1e-8);
//! # Ok::<(), dirac_hydrogen::Error>(())
//! ```

pub mod constants;
pub mod error;
pub mod laguerre;
pub mod lamb;
pub mod quad;
pub mod radial;
pub mod spectra;
pub mod states;
pub mod verify;

mod gamma;

pub use constants::PhysicalConstants;
pub use error::Error;
pub use lamb::{BetheTable, LambBreakdown, Provenance};
pub use quad::QuadResult;
pub use radial::RadialSolution;
pub use spectra::EnergyLevel;
pub use states::{AtomicState, DiracNumbers};
