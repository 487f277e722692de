use std::fmt;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, thiserror::Error)]
pub enum Error {
    /// Every malformed line of a corpus, in file order.
    #[error("{}", display_lines(.0))]
    Corpus(Vec<LineError>),
    #[error("model line {line}: {msg}")]
    Model { line: usize, msg: String },
    #[error("invalid tuple kind code {0:?}")]
    KindCode(String),
    #[error("invalid token {0:?}: tokens must be non-empty and contain no whitespace")]
    Token(String),
    #[error("sub-tuple of kind {kind} needs {expected} words, got {found}")]
    Arity {
        kind: String,
        expected: usize,
        found: usize,
    },
    #[error("estimate undefined: zero denominator")]
    Undefined,
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl Error {
    /// True for errors caused by malformed input data rather than I/O.
    pub fn is_data_error(&self) -> bool {
        !matches!(self, Error::Io(_))
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LineError {
    /// 1-based.
    pub line: usize,
    pub kind: LineErrorKind,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum LineErrorKind {
    FieldCount { expected: usize, found: usize },
    Label(String),
    Token(String),
}

impl fmt::Display for LineError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.kind {
            LineErrorKind::FieldCount { expected, found } => {
                write!(
                    f,
                    "line {}: expected {} fields, found {}",
                    self.line, expected, found
                )
            }
            LineErrorKind::Label(l) => {
                write!(
                    f,
                    "line {}: attachment label must be 0 or 1, found {:?}",
                    self.line, l
                )
            }
            LineErrorKind::Token(t) => write!(f, "line {}: invalid token {:?}", self.line, t),
        }
    }
}

fn display_lines(errs: &[LineError]) -> String {
    errs.iter()
        .map(ToString::to_string)
        .collect::<Vec<_>>()
        .join("\n")
}
