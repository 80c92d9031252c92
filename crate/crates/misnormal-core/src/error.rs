use alloc::string::String;
use core::fmt;

/// Errors shared across the whole crate.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// A loop edge (v, v) was supplied to a graph constructor.
    LoopRejected { vertex: usize },
    /// A vertex index fell outside the graph it was used with.
    IndexOutOfRange { index: usize, bound: usize },
    /// An operation that needs a nonempty vertex selection got an empty one.
    EmptySelection,
    /// A product construction would exceed the configured vertex cap.
    SizeOverflow { requested: usize, cap: usize },
    /// A factor axis outside the product's arity.
    BadAxis { axis: usize, arity: usize },
    /// `diagonal_subgraph` called on a product that is not G x G.
    NotASquareProduct,
    /// Family parameters violate the family's constraint.
    BadParameters(String),
    /// Graph too large for exhaustive automorphism search.
    TooLarge { n: usize, cap: usize },
    /// Block-system test requires a transitive group.
    NotTransitive,
    /// A set orbit grew past the configured cap.
    OrbitTooLarge { cap: usize },
    /// The solver's wall-clock budget ran out; no partial answer is returned.
    Timeout,
    /// An enumeration cap was hit.
    CapExceeded { cap: usize },
    /// An operation needed a complete maximum-independent-set enumeration.
    IncompleteEnumeration,
    /// A sub-check could not reach a verdict within its caps.
    Inconclusive(String),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::LoopRejected { vertex } => write!(f, "loop edge ({vertex},{vertex}) rejected"),
            Error::IndexOutOfRange { index, bound } => {
                write!(f, "vertex {index} out of range (graph has {bound} vertices)")
            }
            Error::EmptySelection => write!(f, "empty vertex selection"),
            Error::SizeOverflow { requested, cap } => {
                write!(f, "product would have {requested} vertices, above the cap {cap}")
            }
            Error::BadAxis { axis, arity } => {
                write!(f, "axis {axis} invalid for a product of {arity} factors")
            }
            Error::NotASquareProduct => write!(f, "not a square product G x G"),
            Error::BadParameters(msg) => write!(f, "bad family parameters: {msg}"),
            Error::TooLarge { n, cap } => {
                write!(f, "graph with {n} vertices above automorphism-search cap {cap}")
            }
            Error::NotTransitive => write!(f, "group is not transitive"),
            Error::OrbitTooLarge { cap } => write!(f, "set orbit exceeded cap {cap}"),
            Error::Timeout => write!(f, "time budget exhausted"),
            Error::CapExceeded { cap } => write!(f, "enumeration cap {cap} exceeded"),
            Error::IncompleteEnumeration => {
                write!(f, "operation requires a complete enumeration of maximum independent sets")
            }
            Error::Inconclusive(msg) => write!(f, "inconclusive: {msg}"),
        }
    }
}

impl core::error::Error for Error {}

pub type Result<T> = core::result::Result<T, Error>;
