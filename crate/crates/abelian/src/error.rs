use thiserror::Error;

/// Errors reported by the library. Every rejected precondition names the
/// offending datum so CLI output stays machine-readable.
#[derive(Debug, Error)]
pub enum Error {
    #[error("characteristic {p} is not prime")]
    NotPrime { p: u32 },

    #[error("length {r} is divisible by the characteristic {p}: algebra is not semisimple")]
    NotSemisimple { r: u32, p: u32 },

    #[error("extension field would have {order} elements, above the supported limit {limit}")]
    FieldTooLarge { order: u128, limit: u64 },

    #[error("{r} does not divide the multiplicative group order {group}")]
    NotARootOrder { r: u32, group: u64 },

    #[error("root has order {actual}, expected exactly {expected}")]
    WrongRootOrder { expected: u32, actual: u64 },

    #[error("index {index:?} out of range for lengths {dims:?}")]
    IndexOutOfRange { index: Vec<u32>, dims: Vec<u32> },

    #[error("set is not a union of q-orbits (witness index {witness:?})")]
    NotOrbitUnion { witness: Vec<u32> },

    #[error("dimension mismatch: expected lengths {expected:?}, got {got:?}")]
    DimsMismatch { expected: Vec<u32>, got: Vec<u32> },

    #[error("operation requires {expected} variables, polynomial has {got}")]
    WrongArity { expected: usize, got: usize },

    #[error("minimum-apparent-distance algorithm is stated for matrices; got {s} variables")]
    MadNeedsMatrix { s: usize },

    #[error("support has {orbits} q-orbits, above the cap {cap}")]
    OrbitCapExceeded { orbits: usize, cap: usize },

    #[error("code dimension {k} over F_{q} needs {words} words, above the cap {cap}")]
    EnumerationCapExceeded { k: usize, q: u64, words: u128, cap: u64 },

    #[error("exponent {u} is not a unit modulo {r}")]
    NonUnitExponent { u: u32, r: u32 },

    #[error("polynomial has a coefficient outside the base field at index {index:?}")]
    NotBaseField { index: Vec<u32> },

    #[error("zero polynomial not allowed here")]
    ZeroPolynomial,

    #[error("afforded matrix is not a composed-polynomial (CP) matrix")]
    NotCpMatrix,

    #[error("support equalities required by factorization do not hold: {detail}")]
    ConditionNotVerified { detail: String },

    #[error("{side} factor does not divide X^{r} - 1")]
    NotADivisor { side: &'static str, r: u32 },

    #[error("shift {h} on the {side} factor does not make all evaluations rational over F_{q}")]
    NotRationalAtShift { side: &'static str, h: u32, q: u64 },

    #[error("designed distance {delta} out of range 2..={r}")]
    BadDesignedDistance { delta: u32, r: u32 },

    #[error("{what}")]
    Invalid { what: String },
}

impl Error {
    pub(crate) fn invalid(what: impl Into<String>) -> Self {
        Error::Invalid { what: what.into() }
    }
}
