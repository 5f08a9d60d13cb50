use thiserror::Error;

use crate::report::SuiteReport;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GradedError {
    #[error("a superspace needs at least one basis vector")]
    EmptyBasis,
    #[error("basis vector #{0} has an empty name")]
    EmptyName(usize),
    #[error("duplicate basis name `{0}`")]
    DuplicateName(String),
    #[error("unknown basis vector `{0}`")]
    UnknownBasis(String),
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("matrix is not square ({rows} rows, a row of length {cols})")]
    NotSquare { rows: usize, cols: usize },
    #[error("map is not even: `{from}` has a component along `{to}` of the other parity")]
    NotEven { from: String, to: String },
    #[error("no image given for basis vector `{0}`")]
    MissingImage(String),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum StructureError {
    #[error(transparent)]
    Graded(#[from] GradedError),
    #[error("structures live on different superspaces")]
    SpaceMismatch,
    #[error("grading violated by the product of ({}) = {value}", .inputs.join(", "))]
    Grading { inputs: Vec<String>, value: String },
    #[error("{op} needs homogeneous arguments")]
    MixedParity { op: &'static str },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("{message} at byte {pos}")]
pub struct ParseError {
    pub pos: usize,
    pub message: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CheckError {
    #[error("identity uses `{0}` but the binding does not provide it")]
    UnboundSymbol(String),
    #[error(transparent)]
    Structure(#[from] StructureError),
    #[error("unknown suite `{0}`")]
    UnknownSuite(String),
}

#[derive(Debug, Clone, Error)]
pub enum ConstructionError {
    #[error("precondition `{stage}` failed:\n{report}")]
    Precondition { stage: String, report: SuiteReport },
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("unknown example `{0}`")]
    UnknownExample(String),
    #[error("bilinear form: {0}")]
    Form(String),
    #[error(transparent)]
    Structure(#[from] StructureError),
    #[error(transparent)]
    Check(#[from] CheckError),
}

impl From<GradedError> for ConstructionError {
    fn from(e: GradedError) -> Self {
        ConstructionError::Structure(StructureError::Graded(e))
    }
}

#[derive(Debug, Error)]
pub enum FileError {
    #[error("cannot access {path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },
    #[error("malformed JSON at line {line}, column {column}: {message}")]
    Json {
        line: usize,
        column: usize,
        message: String,
    },
    #[error("field `{field}`: {message}")]
    Field { field: String, message: String },
    #[error("unknown reference `{name}` in {field}")]
    UnknownReference { field: String, name: String },
    #[error(transparent)]
    Structure(#[from] StructureError),
}

impl From<GradedError> for FileError {
    fn from(e: GradedError) -> Self {
        FileError::Structure(StructureError::Graded(e))
    }
}
