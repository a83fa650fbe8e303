use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("generator index {index} out of range for alphabet of size {rank}")]
    IndexOutOfRange { index: usize, rank: usize },

    #[error("alphabet mismatch: {left} vs {right}")]
    AlphabetMismatch { left: usize, right: usize },

    #[error("cannot parse {what}: {reason}")]
    Parse { what: String, reason: String },

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("unknown ramification label `{0}`")]
    UnknownLabel(String),

    #[error("duplicate ramification label `{0}`")]
    DuplicateLabel(String),

    #[error("group closure exceeds the order limit {limit}")]
    OrderLimitExceeded { limit: usize },

    #[error("relator {relator} is not sent to the identity")]
    RelatorViolated { relator: usize },

    #[error("coset enumeration inconclusive: more than {max_cosets} cosets defined")]
    CosetLimitExceeded { max_cosets: usize },

    #[error("search space of {required} tuples exceeds the budget {budget}")]
    BudgetExceeded { required: u128, budget: u128 },

    #[error("word is not in the kernel of the parity map")]
    NotInKernel,

    #[error("group does not belong to class {class}: {reason}")]
    ClassViolation { class: String, reason: String },

    #[error("subset is not a normal subgroup")]
    NotNormal,

    #[error("group is not nilpotent")]
    NotNilpotent,

    #[error("hypothesis violated: {0}")]
    HypothesisViolated(String),

    #[error("generator tuple for prime {prime} does not generate the Sylow subgroup")]
    SylowGeneration { prime: u64 },

    #[error("generator tuples have different lengths")]
    LengthMismatch,

    #[error("induced map to the cyclic group of order {n} is not defined")]
    InducedMapUndefined { n: usize },

    #[error("cache i/o: {0}")]
    Cache(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    /// Stable machine-readable name of the variant.
    pub fn kind(&self) -> &'static str {
        match self {
            Error::IndexOutOfRange { .. } => "index_out_of_range",
            Error::AlphabetMismatch { .. } => "alphabet_mismatch",
            Error::Parse { .. } => "parse",
            Error::InvalidParameter(_) => "invalid_parameter",
            Error::UnknownLabel(_) => "unknown_label",
            Error::DuplicateLabel(_) => "duplicate_label",
            Error::OrderLimitExceeded { .. } => "order_limit_exceeded",
            Error::RelatorViolated { .. } => "relator_violated",
            Error::CosetLimitExceeded { .. } => "coset_limit_exceeded",
            Error::BudgetExceeded { .. } => "budget_exceeded",
            Error::NotInKernel => "not_in_kernel",
            Error::ClassViolation { .. } => "class_violation",
            Error::NotNormal => "not_normal",
            Error::NotNilpotent => "not_nilpotent",
            Error::HypothesisViolated(_) => "hypothesis_violated",
            Error::SylowGeneration { .. } => "sylow_generation",
            Error::LengthMismatch => "length_mismatch",
            Error::InducedMapUndefined { .. } => "induced_map_undefined",
            Error::Cache(_) => "cache",
        }
    }
}
