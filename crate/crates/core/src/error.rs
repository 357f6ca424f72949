use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("cannot compose {left} with {right}: codomain and domain differ")]
    CompositionMismatch { left: String, right: String },
    #[error("morphisms {left} and {right} do not share a codomain")]
    CodomainMismatch { left: String, right: String },
    #[error("morphisms {left} and {right} are not parallel")]
    NotParallel { left: String, right: String },
    #[error("pair is not reflexive: {0}")]
    NotReflexive(String),
    #[error("no factorization: {0}")]
    NoFactorization(String),
    #[error("index {index} out of range for object of size {size}")]
    IndexOutOfRange { index: usize, size: usize },
    #[error("{what} has size {size}, above the configured limit {limit}")]
    SizeLimit {
        what: String,
        size: u128,
        limit: u128,
    },
    #[error("invalid morphism: {0}")]
    InvalidMorphism(String),
    #[error("moduli differ: {0} vs {1}")]
    ModulusMismatch(u32, u32),
    #[error("not a group: {0}")]
    NotAGroup(String),
    #[error("not a groupoid: {0}")]
    NotAGroupoid(String),
    #[error("invalid functor: {0}")]
    InvalidFunctor(String),
    #[error("invalid natural transformation: {0}")]
    InvalidTransformation(String),
    #[error("functors do not share a target groupoid")]
    TargetMismatch,
    #[error("incompatible 2-cell: {0}")]
    IncompatibleCell(String),
    #[error("compatibility square does not commute: {0}")]
    IncompatibleSquare(String),
    #[error("functor is not a fibration")]
    NotAFibration,
    #[error("sequence is not 2-exact")]
    NotTwoExact,
}
