use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("semigroup order must be at least 1")]
    EmptySemigroup,
    #[error("table shape mismatch: expected {expected}x{expected}, row {row} has {found} entries")]
    BadShape {
        expected: usize,
        row: usize,
        found: usize,
    },
    #[error("table has {found} rows, expected {expected}")]
    BadRowCount { expected: usize, found: usize },
    #[error("entry ({i},{j}) = {value} is out of range 0..{order}")]
    EntryOutOfRange {
        i: usize,
        j: usize,
        value: usize,
        order: usize,
    },
    #[error("operation is not associative: ({i}*{j})*{k} != {i}*({j}*{k})")]
    NonAssociative { i: usize, j: usize, k: usize },
    #[error("element {0} is out of range")]
    ElementOutOfRange(usize),
    #[error("element {0} is not an idempotent")]
    NotIdempotent(usize),
    #[error("partition is not a congruence: {x} ~ {y} but the products with {a} are separated")]
    NotACongruence { x: usize, y: usize, a: usize },
    #[error("semigroup is not a semilattice")]
    NotASemilattice,
    #[error("order {order} exceeds the exhaustive bound {bound}")]
    OrderTooLargeForExhaustive { order: usize, bound: usize },
    #[error("set is not a prime coideal")]
    NotAPrimeCoideal,
    #[error("set is not a nonempty subsemilattice of the target")]
    NotASubsemilattice,
    #[error("map is not a surjective homomorphism onto a semilattice: {0}")]
    NotASurjection(String),
    #[error("homomorphism domain does not match the preimage")]
    DomainMismatch,
    #[error("assignment is not a homomorphism: fails at ({u},{v})")]
    NotAHomomorphism { u: usize, v: usize },
    #[error("precondition not met: {0}")]
    PreconditionNotMet(String),
    #[error("malformed witness tree: {0}")]
    MalformedTree(String),
    #[error("{y} is not in the upper class of {x}")]
    NotAbove { x: usize, y: usize },
    #[error("witness depth {0} is too large to materialize")]
    WitnessTooDeep(usize),
    #[error("parameter out of range: {0}")]
    ParameterOutOfRange(String),
    #[error("exhaustive enumeration supports order at most {max}, got {order}")]
    OrderTooLarge { order: usize, max: usize },
    #[error("closure exceeds {0} elements")]
    ClosureTooLarge(usize),
    #[error("parse error: {0}")]
    Parse(String),
}
