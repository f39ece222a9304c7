use thiserror::Error;

pub type Result<T> = std::result::Result<T, LieError>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum LieError {
    #[error("unsupported root system type: {0}")]
    UnsupportedType(String),

    #[error("weight {weight} is not dominant for {group}")]
    NotDominant { group: String, weight: String },

    #[error("weight {weight} is not in the weight lattice of {group}")]
    NotInWeightLattice { group: String, weight: String },

    #[error("weight {weight} has the wrong shape for {group}")]
    ShapeMismatch { group: String, weight: String },

    #[error(
        "negative multiplicity {multiplicity} for {weight} while restricting along {embedding}"
    )]
    NegativeMultiplicity {
        embedding: String,
        weight: String,
        multiplicity: i64,
    },

    #[error("restriction along {embedding} is not Weyl invariant at {weight}")]
    NotWeylInvariant { embedding: String, weight: String },

    #[error("source dimension {dimension} exceeds budget {budget}")]
    BudgetExceeded { dimension: String, budget: u64 },

    #[error("unknown embedding {0:?}")]
    UnknownEmbedding(String),

    #[error("invalid K-type for {case}: {reason}")]
    InvalidType { case: String, reason: String },

    #[error("not covered: {0}")]
    NotCovered(String),

    #[error("fixture parse error at line {line}: {reason}")]
    Fixture { line: usize, reason: String },

    #[error("invalid input: {0}")]
    InvalidInput(String),
}
