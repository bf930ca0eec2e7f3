use alloc::string::String;

/// Errors raised by the numerical core.
#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum Error {
    #[error("norm violation: vector norm {norm} differs from 1")]
    NormViolation { norm: f64 },

    #[error("zero vector cannot be normalized")]
    ZeroVector,

    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("matrix is not square: {rows}x{cols}")]
    NotSquare { rows: usize, cols: usize },

    #[error("matrix is not Hermitian (deviation {0})")]
    NotHermitian(f64),

    #[error("trace is not 1 (got {0})")]
    InvalidTrace(f64),

    #[error("matrix is not positive semidefinite (min eigenvalue {0})")]
    NotPositive(f64),

    #[error("effects do not sum to the identity (deviation {0})")]
    NotComplete(f64),

    #[error("Bloch vector has norm {0}, expected 1")]
    NonUnitBloch(f64),

    #[error("moment order must be at least 1")]
    InvalidMoment,

    #[error("t = {t} outside the supported range 1..={max}")]
    UnsupportedT { t: usize, max: usize },

    #[error("inconsistent cycle-type multiplicities: sum m*k_m = {weight}, expected {t}")]
    InconsistentMultiplicities { t: usize, weight: usize },

    #[error("design has no vectors")]
    EmptyDesign,

    #[error("unknown design '{0}'")]
    UnknownDesign(String),

    #[error("verification failed, deviation {deviation:.4e} at t={t}")]
    VerificationFailed { t: usize, deviation: f64 },

    #[error("t = {t} exceeds the design strength {strength}")]
    StrengthExceeded { t: usize, strength: usize },

    #[error("design states admit no grouping into orthonormal measurements")]
    NoOrthogonalPairs,

    #[error("invalid grouping: {0}")]
    InvalidGrouping(String),

    #[error("depolarizing noise needs n = d outcomes (n = {n}, d = {d})")]
    NotNormalizable { n: usize, d: usize },

    #[error("noise parameter {0} outside [0, 1]")]
    InvalidNoise(f64),

    #[error("invalid entropy order {0}")]
    InvalidOrder(f64),

    #[error("probability vector is not normalized (sum {0})")]
    Unnormalized(f64),

    #[error("negative probability {0}")]
    NegativeProbability(f64),

    #[error("logarithm argument {0} is not positive")]
    LogDomain(f64),

    #[error("order {order} is below t' = {t_prime}")]
    OrderBelowTPrime { order: f64, t_prime: usize },

    #[error("t' = {t_prime} outside the admissible range 2..={max}")]
    InvalidTPrime { t_prime: usize, max: usize },

    #[error("F value {0} outside (0, 1]")]
    InvalidFValue(f64),

    #[error("no bound available for order {0} (needs order >= 2)")]
    NoBoundAvailable(f64),

    #[error("no violation detectable at alpha = {0}")]
    NoCrossing(f64),

    #[error("invalid argument: {0}")]
    InvalidArgument(&'static str),
}

pub type Result<T> = core::result::Result<T, Error>;
