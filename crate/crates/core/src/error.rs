use alloc::string::String;
use core::fmt;

use num_bigint::BigInt;

use crate::subset::Subset;

/// Errors raised by the algebraic core.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    DivisionByZero,
    /// `gcd(0, 0)` has no normalized generator.
    GcdOfZeros,
    Parse {
        input: String,
        reason: &'static str,
    },
    /// Operands belong to different rings.
    RingMismatch,
    EmptyMatrix,
    DimensionMismatch {
        expected: usize,
        found: usize,
    },
    IndexOutOfRange {
        index: usize,
        len: usize,
    },
    GroundTooLarge {
        size: usize,
        cap: usize,
    },
    NotIndependent(Subset),
    TorsionTooLarge {
        set: Subset,
        cardinality: BigInt,
        bound: u64,
    },
    NodeBudgetExceeded {
        nodes: BigInt,
        budget: u64,
    },
    /// The quotient matroid of a face-module input must have torsion-free `M(∅)`.
    TorsionAtEmpty,
    /// A self-consistency assertion failed; this indicates a bug, not bad input.
    Internal(String),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::DivisionByZero => f.write_str("division by zero"),
            Error::GcdOfZeros => f.write_str("gcd(0, 0) is undefined"),
            Error::Parse { input, reason } => write!(f, "cannot parse {input:?}: {reason}"),
            Error::RingMismatch => f.write_str("operands belong to different rings"),
            Error::EmptyMatrix => f.write_str("matrix has no rows"),
            Error::DimensionMismatch { expected, found } => {
                write!(f, "dimension mismatch: expected {expected}, found {found}")
            }
            Error::IndexOutOfRange { index, len } => {
                write!(f, "index {index} out of range for ground set of size {len}")
            }
            Error::GroundTooLarge { size, cap } => {
                write!(f, "ground set of size {size} exceeds the enumeration cap {cap}")
            }
            Error::NotIndependent(set) => write!(f, "{set} is not independent"),
            Error::TorsionTooLarge { set, cardinality, bound } => {
                write!(f, "torsion too large: |tor({set})| = {cardinality} exceeds the bound {bound}")
            }
            Error::NodeBudgetExceeded { nodes, budget } => {
                write!(f, "poset of torsions would have {nodes} nodes, over the budget of {budget}")
            }
            Error::TorsionAtEmpty => f.write_str("quotient matroid has torsion at the empty set"),
            Error::Internal(msg) => write!(f, "internal consistency failure: {msg}"),
        }
    }
}

impl core::error::Error for Error {}

pub type Result<T> = core::result::Result<T, Error>;
