use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("Cayley table is not square: row {row} has {len} entries, expected {expected}")]
    NotSquare { row: usize, len: usize, expected: usize },
    #[error("table entry {value} at ({row}, {col}) is outside 0..{order}")]
    EntryOutOfRange { row: usize, col: usize, value: usize, order: usize },
    #[error("operation is not associative: ({x}*{y})*{z} != {x}*({y}*{z})")]
    NotAssociative { x: usize, y: usize, z: usize },
    #[error("no two-sided identity element")]
    NoIdentity,
    #[error("element {element} has no inverse")]
    MissingInverse { element: usize },
    #[error("expected {expected} labels, got {got}")]
    LabelCount { expected: usize, got: usize },
    #[error("the empty table does not define a group")]
    EmptyTable,

    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("group order {order} exceeds the cap {cap}")]
    OrderCapExceeded { order: u128, cap: usize },
    #[error("matrix is singular modulo {p}")]
    SingularMatrix { p: u64 },
    #[error("matrix must be {r}x{r} with entries reduced modulo {p}")]
    MatrixShape { r: usize, p: u64 },
    #[error("scalar {s} is not in 1..{p}")]
    ScalarOutOfRange { s: u64, p: u64 },
    #[error("r = {r} has multiplicative order {order} modulo {p}, expected {q}")]
    InvalidAction { p: u64, q: u64, r: u64, order: u64 },
    #[error("the two primes must differ (both are {0})")]
    EqualPrimes(u64),
    #[error("argument {name} = {value} is out of range")]
    BadArgument { name: &'static str, value: u64 },
    #[error("generator {index} is not a bijection on 0..{degree}")]
    NotBijection { index: usize, degree: usize },

    #[error("element index {index} is outside 0..{order}")]
    IndexOutOfRange { index: usize, order: usize },
    #[error("subset is not a subgroup")]
    NotASubgroup,
    #[error("subgroup is not normal")]
    NotNormal,
    #[error("subgroup belongs to a different group")]
    ForeignSubgroup,
    #[error("operation needs a nontrivial group")]
    TrivialGroup,

    #[error("parse error at byte {pos}: {msg}")]
    Parse { pos: usize, msg: String },

    #[error("k = {k} is outside 1..={d}")]
    KOutOfRange { k: usize, d: usize },
    #[error("precondition violated: {0}")]
    PreconditionViolated(String),
    #[error("internal invariant violated: {0}")]
    InternalInvariantViolation(String),

    #[error("structure is unclassified and no prediction applies")]
    UnclassifiedStructure,
    #[error("verifier needs d(G) >= 3, got {0}")]
    RankTooSmall(usize),
    #[error("verifier needs d(G) = 2, got {0}")]
    RankMismatch(usize),

    #[error("malformed Cayley table document: {0}")]
    Json(String),
}

impl Error {
    /// Resource-limit failures; the CLI maps these to their own exit code.
    pub fn is_cap(&self) -> bool {
        matches!(self, Error::OrderCapExceeded { .. })
    }
}
