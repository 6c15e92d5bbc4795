use alloc::string::String;

/// Which configured ceiling a computation ran into.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Ceiling {
    Reductions,
    BasisSize,
    SaturationSteps,
    StandardMonomials,
    Exponent,
}

impl core::fmt::Display for Ceiling {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        let s = match self {
            Ceiling::Reductions => "reduction steps",
            Ceiling::BasisSize => "basis size",
            Ceiling::SaturationSteps => "saturation steps",
            Ceiling::StandardMonomials => "standard monomials",
            Ceiling::Exponent => "exponent size",
        };
        f.write_str(s)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum AlgebraError {
    #[error("{0} is not a prime")]
    NotPrime(u64),
    #[error("invalid ring: {0}")]
    InvalidRing(&'static str),
    #[error("operands live in different rings")]
    RingMismatch,
    #[error("division by zero in F_p")]
    DivisionByZero,
    #[error("parse error at byte {pos}: {msg}")]
    Parse { pos: usize, msg: String },
    #[error("variable x{index} out of range 1..={n}")]
    VariableOutOfRange { index: usize, n: usize },
    #[error("length mismatch: expected {expected}, got {got}")]
    LengthMismatch { expected: usize, got: usize },
    #[error("zero polynomial not allowed here")]
    ZeroPolynomial,
    #[error("ideal has no generators")]
    EmptyIdeal,
    #[error("multi-index lies outside the box [0, q-1]^n")]
    IndexOutOfBox,
    #[error("input is not homogeneous")]
    NotHomogeneous,
    #[error("image generators are not contained in the kernel span")]
    NotSubmodule,
    #[error("resolution did not terminate within {0} steps")]
    ResolutionTooLong(usize),
    #[error("module is zero")]
    ZeroModule,
    #[error("hypothesis sum(deg f_i) < n violated: {sum} >= {n}")]
    HypothesisViolated { sum: u64, n: usize },
    #[error("resource ceiling exceeded: {0}")]
    ResourceLimit(Ceiling),
    #[error("computation cancelled")]
    Cancelled,
    #[error("internal invariant violated: {0}")]
    Invariant(&'static str),
}

impl AlgebraError {
    /// Resource exhaustion and cancellation, as opposed to bad input or bugs.
    pub fn is_resource(&self) -> bool {
        matches!(self, AlgebraError::ResourceLimit(_) | AlgebraError::Cancelled)
    }
}

pub type Result<T> = core::result::Result<T, AlgebraError>;
