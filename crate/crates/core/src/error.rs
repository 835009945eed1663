//! Error type shared by every module in the crate.

use alloc::string::String;
use core::fmt;

/// Crate-wide result alias.
pub type Result<T> = core::result::Result<T, Error>;

/// Everything that can go wrong while building groups, cochains, or reports.
///
/// Construction errors name the first offending entry so that a bad Cayley
/// table or a sign-convention slip is reproducible from the message alone.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// A multiplication table is not associative; holds the first violating triple.
    NonAssociative(usize, usize, usize),
    /// A row of a multiplication table is not a permutation of `0..n`.
    RowNotPermutation(usize),
    /// A column of a multiplication table is not a permutation of `0..n`.
    ColNotPermutation(usize),
    /// No two-sided identity element exists in the table.
    MissingIdentity,
    /// Some element has no two-sided inverse; holds the element.
    MissingInverse(usize),
    /// The requested group order is outside the supported range.
    UnsupportedOrder(usize),
    /// An element index is out of range for the group it was used with.
    ElementOutOfRange { element: usize, order: usize },
    /// The given element set is not a subgroup (not closed, or identity missing).
    NotSubgroup,
    /// A map fails to be a homomorphism; holds the first violating pair.
    NotHomomorphism(usize, usize),
    /// A map that must be surjective is not; holds an element not in the image.
    NotSurjective(usize),
    /// Coboundary of a degree-4 cochain requested.
    TopDegree,
    /// A cochain has a value outside `0..modulus` or a nonzero value on an
    /// identity-containing tuple; holds the flat index.
    NotNormalized(usize),
    /// Cochain degree outside `1..=4`, or an operation got the wrong degree.
    BadDegree { expected: &'static str, found: usize },
    /// Two objects that must share a modulus do not.
    ModulusMismatch { left: u64, right: u64 },
    /// A modulus that must be divisible by `n` is not.
    ModulusNotDivisible { n: u64, modulus: u64 },
    /// A cochain value set cannot be embedded into the requested modulus.
    NotEmbeddable { from: u64, into: u64 },
    /// Two cochains live on different domains.
    DomainMismatch,
    /// Matrix dimensions do not agree.
    DimensionMismatch,
    /// A dense table would exceed the resource cap; reports the required size.
    ResourceCap { required: u64, cap: u64 },
    /// Class or orbit enumeration would exceed the cap.
    ClassCapExceeded { required: u64, cap: u64 },
    /// Free-form invariant violation with context.
    Invariant(String),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::NonAssociative(a, b, c) => {
                write!(f, "table not associative at triple ({a}, {b}, {c})")
            }
            Error::RowNotPermutation(r) => write!(f, "row {r} not a permutation"),
            Error::ColNotPermutation(c) => write!(f, "column {c} not a permutation"),
            Error::MissingIdentity => write!(f, "table has no two-sided identity"),
            Error::MissingInverse(a) => write!(f, "element {a} has no two-sided inverse"),
            Error::UnsupportedOrder(n) => write!(f, "group order {n} not supported"),
            Error::ElementOutOfRange { element, order } => {
                write!(f, "element {element} out of range for group of order {order}")
            }
            Error::NotSubgroup => write!(f, "element set is not a subgroup"),
            Error::NotHomomorphism(a, b) => {
                write!(f, "projection is not a homomorphism at pair ({a}, {b})")
            }
            Error::NotSurjective(a) => write!(f, "projection misses element {a}"),
            Error::TopDegree => write!(f, "top degree"),
            Error::NotNormalized(i) => write!(f, "cochain not normalized at flat index {i}"),
            Error::BadDegree { expected, found } => {
                write!(f, "expected degree {expected}, found {found}")
            }
            Error::ModulusMismatch { left, right } => {
                write!(f, "modulus mismatch: {left} vs {right}")
            }
            Error::ModulusNotDivisible { n, modulus } => {
                write!(f, "modulus must be divisible by {n}, got {modulus}")
            }
            Error::NotEmbeddable { from, into } => {
                write!(f, "values at modulus {from} do not embed into modulus {into}")
            }
            Error::DomainMismatch => write!(f, "cochain domains do not match"),
            Error::DimensionMismatch => write!(f, "matrix dimensions do not agree"),
            Error::ResourceCap { required, cap } => {
                write!(f, "resource cap exceeded: table needs {required} cells, cap is {cap}")
            }
            Error::ClassCapExceeded { required, cap } => {
                write!(f, "class enumeration needs {required} entries, cap is {cap}")
            }
            Error::Invariant(msg) => write!(f, "invariant violated: {msg}"),
        }
    }
}

impl core::error::Error for Error {}
