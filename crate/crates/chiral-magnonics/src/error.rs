//! Error and warning types shared across the crate.

use thiserror::Error;

/// Crate-wide error type.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("negative rate: {name} = {value}")]
    NegativeRate { name: &'static str, value: f64 },

    #[error("non-finite value: {name} = {value}")]
    NonFiniteValue { name: &'static str, value: f64 },

    #[error("total cavity decay kappa_0 + kappa_ex must be positive")]
    ZeroTotalCavityDecay,

    #[error("Bessel order out of range: |n| = {0} exceeds the supported envelope")]
    OrderOutOfRange(i32),

    #[error("Bessel argument out of range: |x| = {0} exceeds the supported envelope")]
    ArgumentOutOfRange(f64),

    #[error("degenerate drive: the carrier Bessel weight vanishes, effective couplings undefined")]
    DegenerateDrive,

    #[error("drive frequency would be nonpositive: omega_m = {omega_m} <= omega_0 = {omega_0}")]
    NegativeDriveFrequency { omega_m: f64, omega_0: f64 },

    #[error("unstable regime: |epsilon| = {0} >= 1 (the squeezing interaction requires |epsilon| < 1)")]
    UnstableRegime(f64),

    #[error("non-ideal chirality: both effective couplings are nonzero ({coupling_a} and {coupling_b})")]
    NonIdealChirality { coupling_a: f64, coupling_b: f64 },

    #[error("singular frequency-domain system at omega = {omega}")]
    SingularSystem { omega: f64 },

    #[error("drift matrix is not strictly stable: max Re eigenvalue = {0}")]
    UnstableDrift(f64),

    #[error("initial covariance violates physicality: min eig(V + i*Omega) = {0}")]
    NonPhysicalInitialState(f64),

    #[error("step size underflow at t = {t} (h = {h})")]
    StepSizeUnderflow { t: f64, h: f64 },

    #[error("spectrum is not positive: S = {0}")]
    NonPositiveSpectrum(f64),

    #[error("config error: {0}")]
    Config(String),

    #[error("numerical failure: {0}")]
    Numerical(String),
}

pub type Result<T> = std::result::Result<T, Error>;

/// Non-fatal diagnostics attached to otherwise valid parameter sets.
#[derive(Debug, Clone, PartialEq)]
pub enum Warning {
    /// The sideband-engineering premise g << {omega_dj, omega_m, omega_0} is marginal.
    RwaMarginal { ratio: f64, threshold: f64 },
    /// Drive frequencies miss the red/blue sideband conditions.
    DetunedSideband { residual_red: f64, residual_blue: f64 },
    /// |epsilon| >= 1: the effective interaction has no stable steady state.
    UnstableRegime { epsilon: f64 },
}

impl std::fmt::Display for Warning {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Warning::RwaMarginal { ratio, threshold } => write!(
                f,
                "coupling-to-frequency ratio {ratio:.3e} exceeds the warning threshold {threshold:.3e}; \
                 the sideband approximation may be inaccurate"
            ),
            Warning::DetunedSideband { residual_red, residual_blue } => write!(
                f,
                "drive detuned from the sideband conditions: residuals ({residual_red:.6e}, {residual_blue:.6e})"
            ),
            Warning::UnstableRegime { epsilon } => {
                write!(f, "|epsilon| = {epsilon} >= 1: no stable steady state")
            }
        }
    }
}
