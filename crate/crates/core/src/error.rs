use core::fmt;

pub type Result<T> = core::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// An argument that must be positive was zero.
    Zero,
    /// Input beyond the signed 64-bit range.
    OutOfRange(u64),
    /// `ext_gcd(0, 0)` / `gcd(0, 0)`.
    BothZero,
    ModulusTooSmall(u64),
    /// No element of the requested multiplicative order exists.
    NoElementOfOrder {
        order: u64,
        modulus: u64,
    },
    DegreeMismatch {
        left: usize,
        right: usize,
    },
    InvalidPermutation(&'static str),
    InvalidCycle(&'static str),
    EmptyGenerators,
    ClosureOverflow {
        cap: usize,
    },
    NotAMember,
    NotASubgroup,
    SubgroupBoundExceeded {
        order: usize,
        bound: usize,
    },
    Precondition(&'static str),
    DegreeCapExceeded {
        degree: usize,
        cap: usize,
    },
    EnumerationCapExceeded {
        n: usize,
        cap: usize,
    },
    InvalidTable(&'static str),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::Zero => f.write_str("argument must be positive"),
            Error::OutOfRange(v) => write!(f, "{v} exceeds the supported range (2^63 - 1)"),
            Error::BothZero => f.write_str("gcd(0, 0) is undefined"),
            Error::ModulusTooSmall(m) => write!(f, "modulus {m} must be at least 2"),
            Error::NoElementOfOrder { order, modulus } => {
                write!(f, "{order} does not divide {modulus} - 1")
            }
            Error::DegreeMismatch { left, right } => {
                write!(f, "degree mismatch: {left} vs {right}")
            }
            Error::InvalidPermutation(why) => write!(f, "invalid permutation: {why}"),
            Error::InvalidCycle(why) => write!(f, "invalid cycle: {why}"),
            Error::EmptyGenerators => f.write_str("at least one generator is required"),
            Error::ClosureOverflow { cap } => {
                write!(f, "group closure exceeded the cap of {cap} elements")
            }
            Error::NotAMember => f.write_str("element is not a member of the group"),
            Error::NotASubgroup => f.write_str("subset is not a subgroup"),
            Error::SubgroupBoundExceeded { order, bound } => write!(
                f,
                "group order {order} exceeds the subgroup enumeration bound {bound}"
            ),
            Error::Precondition(why) => write!(f, "precondition violated: {why}"),
            Error::DegreeCapExceeded { degree, cap } => {
                write!(f, "witness degree {degree} exceeds the cap of {cap}")
            }
            Error::EnumerationCapExceeded { n, cap } => {
                write!(f, "order {n} exceeds the enumeration cap of {cap}")
            }
            Error::InvalidTable(why) => write!(f, "invalid Cayley table: {why}"),
        }
    }
}

impl core::error::Error for Error {}
