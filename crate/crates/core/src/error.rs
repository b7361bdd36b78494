use thiserror::Error;

/// Errors produced by state validation, table lookups, and evaluation.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("malformed state label `{0}`: expected <n><s|p|d|f|g><odd>/2, e.g. `2p3/2`")]
    MalformedLabel(String),

    #[error("invalid state: n must be at least 1")]
    PrincipalZero,

    #[error("invalid state: n = {0} exceeds the supported maximum of 50")]
    PrincipalTooLarge(u64),

    #[error("invalid state: l = {l} must satisfy l <= n - 1 (n = {n})")]
    OrbitalOutOfRange { n: u32, l: u32 },

    #[error("invalid state: j must be at least 1/2")]
    TotalAngularTooSmall,

    #[error("invalid state: j = {two_j}/2 must equal l + 1/2 or l - 1/2 (l = {l})")]
    TotalAngularMismatch { l: u32, two_j: u32 },

    #[error("supercritical charge: Z*alpha = {zalpha} must be below 1")]
    SupercriticalCharge { zalpha: f64 },

    #[error("invalid constants: {0}")]
    InvalidConstants(String),

    #[error("cannot read constants file: {0}")]
    ConstantsFile(String),

    #[error("Bethe logarithm not tabulated for {state}; extend the table with `n l beta` entries")]
    BetheNotTabulated { state: String },

    #[error("cannot read Bethe table file: {0}")]
    BetheFile(String),

    #[error("Laguerre degree {0} is below -1")]
    LaguerreDegree(i64),

    #[error("degenerate limit: Z*alpha = 0 with k = {k} > 0; use the Schrodinger radial function instead")]
    DegenerateLimit { k: i32 },

    #[error("shift f = {f} must exceed -v (v = {v})")]
    InvalidShift { f: f64, v: f64 },

    #[error("radius must be non-negative, got {0}")]
    NegativeRadius(f64),

    #[error("radial function is singular at r = 0 for u = {u} < 2; evaluate at r > 0")]
    SingularOrigin { u: f64 },

    #[error(
        "quadrature did not converge within the evaluation budget \
         (best estimate {value} +/- {abs_error_estimate} after {evaluations} evaluations)"
    )]
    QuadratureNoConvergence {
        value: f64,
        abs_error_estimate: f64,
        evaluations: usize,
    },
}

pub type Result<T> = std::result::Result<T, Error>;
