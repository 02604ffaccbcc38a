use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("empty table: a semigroup needs at least one element")]
    Empty,
    #[error("table is not square: row {row} has {len} entries, expected {order}")]
    NotSquare {
        row: usize,
        len: usize,
        order: usize,
    },
    #[error("NotClosed: entry [{row}][{col}] = {value} is outside 0..{order}")]
    NotClosed {
        row: usize,
        col: usize,
        value: usize,
        order: usize,
    },
    #[error("NotAssociative: ({a}*{b})*{c} != {a}*({b}*{c})")]
    NotAssociative { a: usize, b: usize, c: usize },
    #[error("bad labels: {0}")]
    BadLabels(String),
    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error("BadSemilattice at {path}: {reason}")]
    BadSemilattice { path: String, reason: String },
    #[error("BadGroup at {path}: {reason}")]
    BadGroup { path: String, reason: String },
    #[error("BadHom at {path}: {reason}")]
    BadHom { path: String, reason: String },
    #[error("MissingHom: no map from vertex {from} to vertex {to}")]
    MissingHom { from: usize, to: usize },
    #[error("IncoherentHoms: phi({mid},{low}) . phi({high},{mid}) != phi({high},{low})")]
    IncoherentHoms { high: usize, mid: usize, low: usize },
    #[error("bad SLG json: {0}")]
    Json(String),

    #[error("NotRegular: element {0} has no inner inverse")]
    NotRegular(usize),
    #[error("NotIdempotent: element {0}")]
    NotIdempotent(usize),
    #[error("NotAnObject: {0} is not a canonical object idempotent")]
    NotAnObject(usize),
    #[error("NotInHom: {u} is not in {e}S{f}")]
    NotInHom { e: usize, u: usize, f: usize },
    #[error("NotComposable: codomain {dst} != domain {src}")]
    NotComposable { dst: usize, src: usize },
    #[error("NotIncluded: S{f} is not contained in S{g}")]
    NotIncluded { f: usize, g: usize },
    #[error("NotInDomain: {x} is not in S{src}")]
    NotInDomain { x: usize, src: usize },
    #[error("MixedApex: components end at objects {first} and {other}")]
    MixedApex { first: usize, other: usize },

    #[error("SearchBudgetExceeded after {0} nodes")]
    SearchBudgetExceeded(u64),
    #[error("EnumerationBudgetExceeded at apex {apex} after {visited} assignments")]
    EnumerationBudgetExceeded { apex: usize, visited: u64 },

    #[error("NotAnIsomorphism: {0}")]
    NotAnIsomorphism(String),
    #[error("FunctorialityFailed: {0}")]
    FunctorialityFailed(String),
    #[error("NotASemilattice: {0}")]
    NotASemilattice(String),
    #[error("internal invariant violated: {0}")]
    Internal(String),
}

impl Error {
    /// True for the two budget variants; the CLI maps these to their own exit code.
    pub fn is_budget(&self) -> bool {
        matches!(
            self,
            Error::SearchBudgetExceeded(_) | Error::EnumerationBudgetExceeded { .. }
        )
    }
}
