use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("line {line}: {message}")]
    Syntax { line: usize, message: String },

    #[error("line {line}, column {column}: {message}")]
    TermSyntax {
        line: usize,
        column: usize,
        message: String,
    },

    #[error("line {line}: entry {value} out of range for carrier of size {size}")]
    EntryOutOfRange {
        line: usize,
        value: usize,
        size: usize,
    },

    #[error("line {line}: section `{section}` has {found} row(s), expected {expected}")]
    RowCount {
        line: usize,
        section: String,
        expected: usize,
        found: usize,
    },

    #[error("line {line}: duplicate section `{section}`")]
    DuplicateSection { line: usize, section: String },

    #[error("unknown symbol `{0}`")]
    UnknownSymbol(String),

    #[error("duplicate symbol `{0}`")]
    DuplicateSymbol(String),

    #[error("symbol `{symbol}` has arity {expected} but was given {found} argument(s)")]
    ArityMismatch {
        symbol: String,
        expected: usize,
        found: usize,
    },

    #[error("element {value} out of range for carrier of size {size}")]
    OutOfRange { value: usize, size: usize },

    #[error("table for `{symbol}` has length {found}, expected {expected}")]
    TableLength {
        symbol: String,
        expected: usize,
        found: usize,
    },

    #[error("unbound variable `{0}`")]
    UnboundVariable(String),

    #[error("invalid structure: {0}")]
    Invalid(String),

    #[error("algebra is not right-cancellable")]
    NotRightCancellable,

    #[error("Mal'cev law violated: {0}")]
    MalcevLaw(String),

    #[error("group law violated: {0}")]
    GroupLaw(String),

    #[error("group of order {0} is outside the identification catalog (order <= 8)")]
    GroupTooLarge(usize),

    #[error("search bounds exceeded: n = {n}, size = {size} (limit for this n is {limit})")]
    BoundsExceeded { n: usize, size: usize, limit: usize },

    #[error("unknown property `{0}`")]
    UnknownProperty(String),

    #[error("{0}")]
    Internal(String),
}
