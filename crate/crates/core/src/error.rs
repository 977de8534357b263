use std::fmt;

use thiserror::Error;

/// Everything that can go wrong when validating inputs or applying an
/// operation outside its stated domain.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// The ground poset needs at least one minimal letter.
    #[error("s must be at least 1")]
    InvalidGroundSize,

    /// A letter `a_i` whose subscript falls outside `1..=s`.
    #[error("letter subscript {index} out of range 1..={s}")]
    SubscriptOutOfRange { index: u32, s: u32 },

    /// An operation on an interval `[lower, upper]` was asked for a pair
    /// that is not related in the subword order.
    #[error("`{lower}` is not below `{upper}` in the subword order")]
    NotComparable { lower: String, upper: String },

    /// A word whose length disagrees with an explicitly supplied one.
    #[error("word has {actual} letters, expected {expected}")]
    LengthMismatch { expected: usize, actual: usize },

    /// A word type `(len, c_count)` with more `c` letters than letters.
    #[error("invalid word type ({len}, {c_count}): c count exceeds length")]
    InvalidWordType { len: usize, c_count: usize },

    /// An identity or recurrence applied outside the hypotheses under which
    /// it holds.
    #[error("hypothesis violation: {0}")]
    Hypothesis(String),

    /// Word syntax error; `position` is the 1-based comma-separated token.
    #[error("invalid word at token {position}: {kind}")]
    Parse { position: usize, kind: ParseErrorKind },
}

/// Reason a token of the textual word syntax was rejected.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ParseErrorKind {
    /// Empty token between commas (the empty word is written `e` on its own).
    EmptyToken,
    /// Token is not `c` or `a<digits>`.
    UnknownToken(String),
    /// `a0` — subscripts are 1-based.
    SubscriptZero,
    /// Subscript beyond the number of minimal letters.
    SubscriptExceedsS { index: u64, s: u32 },
}

impl fmt::Display for ParseErrorKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ParseErrorKind::EmptyToken => {
                write!(f, "empty token (the empty word is written `e`)")
            }
            ParseErrorKind::UnknownToken(tok) => write!(f, "unrecognized token `{tok}`"),
            ParseErrorKind::SubscriptZero => write!(f, "subscript must be at least 1"),
            ParseErrorKind::SubscriptExceedsS { index, s } => {
                write!(f, "subscript {index} exceeds s={s}")
            }
        }
    }
}
