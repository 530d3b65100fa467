use thiserror::Error;

/// Errors raised by the set/grid algebra and by block construction.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// `[a,b]_d` with `a <= b` but `a` and `b` in different residue classes mod `d`.
    #[error("malformed interval [{a},{b}]_{d}: endpoints differ mod {d}")]
    MalformedInterval { a: i64, b: i64, d: i64 },

    /// An operation required a set of positive integers.
    #[error("set contains nonpositive member {0}")]
    NonPositiveMember(i64),

    /// Exact set union/difference invoked on operands that overlap/are not nested.
    #[error("set operation violates disjointness: value {0} on both sides")]
    SetOverlap(i64),

    #[error("set difference: {0} not contained in the left operand")]
    NotContained(i64),

    /// Greedy pairing hit an element whose partner is missing.
    #[error("unpairable set: {element} has no partner {element}+{eps}")]
    Unpairable { element: i64, eps: i64 },

    /// Grid dimensions incompatible for the requested composition.
    #[error("shape mismatch: {0}")]
    Shape(String),

    /// Placing a block would overwrite an occupied cell.
    #[error("collision at ({row},{col}): target cell already holds {existing}")]
    Collision { row: usize, col: usize, existing: i64 },

    /// A block-family parameter tuple violates its stated precondition.
    #[error("invalid block parameters: {0}")]
    BlockParams(String),

    /// A constructed block family does not match its own entry claim or
    /// row/column-sum signature. Always indicates a formula transcription bug.
    #[error("block family integrity: {0}")]
    BlockIntegrity(String),

    /// Domain error (wrong pair type, unknown block id, and similar misuse).
    #[error("{0}")]
    Domain(String),
}

pub type Result<T> = std::result::Result<T, Error>;
