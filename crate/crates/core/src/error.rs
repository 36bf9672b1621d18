use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("input contains no header row")]
    EmptyInput,
    #[error("duplicate column name `{0}`")]
    DuplicateHeader(String),
    #[error("row {row} has {found} cells, expected {expected}")]
    RowArity {
        row: usize,
        expected: usize,
        found: usize,
    },
    #[error("no records left after missing-value handling")]
    NoRecords,
    #[error("unknown variable `{0}`")]
    UnknownVariable(String),
    #[error("variable `{0}` listed more than once")]
    DuplicateVariable(String),
    #[error("variable selection is empty")]
    EmptySelection,
    #[error("response `{0}` is also among the explanatory variables")]
    Overlap(String),
    #[error("column `{column}`: category index {index} outside domain of size {size}")]
    BadIndex {
        column: String,
        index: u32,
        size: usize,
    },
    #[error("column `{0}` has a different record count than the others")]
    ColumnLength(String),
    #[error("invalid data: {0}")]
    InvalidData(String),
    #[error("csv: {0}")]
    Csv(#[from] csv::Error),
    #[error("io: {0}")]
    Io(#[from] std::io::Error),
    #[error("json: {0}")]
    Json(#[from] serde_json::Error),

    #[error("contingency table has zero total")]
    ZeroTotal,
    #[error("response category `{0}` has zero probability")]
    EmptyCategory(String),
    #[error("response is constant; association is undefined")]
    ConstantResponse,
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("invalid weights: {0}")]
    InvalidWeights(String),
    #[error("weight vector is not regular (some weight is zero)")]
    NonRegularWeights,
    #[error("composite domain of {size} cells exceeds cap {cap}")]
    DomainCap { size: usize, cap: usize },
    #[error("association of the full variable set is zero")]
    ZeroReference,
    #[error("category `{0}` does not occur in the conditioning data")]
    UnseenCategory(String),
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
}

impl Error {
    /// Process exit code for the command-line front end.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::ZeroTotal
            | Error::EmptyCategory(_)
            | Error::ConstantResponse
            | Error::DimensionMismatch { .. }
            | Error::InvalidWeights(_)
            | Error::NonRegularWeights
            | Error::DomainCap { .. }
            | Error::ZeroReference
            | Error::UnseenCategory(_) => 4,
            Error::InvalidParameter(_) => 2,
            _ => 3,
        }
    }
}
