use core::fmt;

/// Errors raised while building fields, plans, or applying transforms.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// Extension degree outside the supported range `[2, 16]`.
    DegreeOutOfRange(u32),
    /// The polynomial does not have degree `m` or has a zero constant term.
    InvalidPolynomial { m: u32, poly: u32 },
    /// The polynomial does not generate a multiplicative group of order `2^m - 1`.
    NotPrimitive { m: u32, poly: u32, order: u32 },
    /// A value does not fit in the field.
    ElementOutOfRange { value: u32, m: u32 },
    /// `discrete_log(0)`.
    ZeroLogarithm,
    /// Cyclotomic cosets are only defined here for odd moduli.
    EvenModulus(usize),
    /// A minimal polynomial came out with a coefficient outside GF(2).
    NonBinaryMinimalPolynomial { leader: usize },
    /// `d` does not divide `m`.
    NotASubfield { d: u32, m: u32 },
    /// Basis elements are linearly dependent over GF(2).
    DependentBasis,
    /// The requested normal-basis generator is not normal (or not in the subfield).
    NotNormal { value: u16 },
    /// Gaussian elimination left a nonzero residue.
    NotInSpan { value: u16 },
    /// Operand shapes do not agree.
    ShapeMismatch { expected: usize, found: usize },
    /// Four Russians block width outside `[1, 16]`.
    BlockSizeOutOfRange(usize),
    /// Representative is not a member of the coset it should represent.
    NotInCoset { representative: usize },
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::DegreeOutOfRange(m) => write!(f, "extension degree {m} outside [2, 16]"),
            Error::InvalidPolynomial { m, poly } => {
                write!(f, "polynomial {poly:#x} is not a degree-{m} polynomial with constant term 1")
            }
            Error::NotPrimitive { m, poly, order } => write!(
                f,
                "polynomial {poly:#x} is not primitive: x has order {order} < {}",
                (1u32 << m) - 1
            ),
            Error::ElementOutOfRange { value, m } => {
                write!(f, "value {value} is not an element of GF(2^{m})")
            }
            Error::ZeroLogarithm => f.write_str("zero has no logarithm"),
            Error::EvenModulus(n) => write!(f, "cyclotomic cosets need an odd modulus, got {n}"),
            Error::NonBinaryMinimalPolynomial { leader } => {
                write!(f, "minimal polynomial of coset {leader} has a non-binary coefficient")
            }
            Error::NotASubfield { d, m } => write!(f, "{d} does not divide {m}"),
            Error::DependentBasis => f.write_str("basis elements are linearly dependent over GF(2)"),
            Error::NotNormal { value } => write!(f, "element {value} does not generate a normal basis"),
            Error::NotInSpan { value } => write!(f, "element {value} is not in the span of the basis"),
            Error::ShapeMismatch { expected, found } => {
                write!(f, "shape mismatch: expected {expected}, found {found}")
            }
            Error::BlockSizeOutOfRange(t) => write!(f, "block size {t} outside [1, 16]"),
            Error::NotInCoset { representative } => {
                write!(f, "representative {representative} is not in the coset")
            }
        }
    }
}

impl core::error::Error for Error {}
