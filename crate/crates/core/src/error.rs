use thiserror::Error;

use crate::group::ElementId;

/// Which axis of a Cayley table repeated an entry.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TableLine {
    Row,
    Column,
}

impl std::fmt::Display for TableLine {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            TableLine::Row => f.write_str("row"),
            TableLine::Column => f.write_str("column"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GroupError {
    #[error("group order must be positive")]
    EmptyGroup,
    #[error("table shape mismatch: {0}")]
    BadShape(String),
    #[error("table entry {value} at ({row}, {col}) is outside [0, {order})")]
    EntryOutOfRange {
        row: usize,
        col: usize,
        value: usize,
        order: usize,
    },
    #[error("not a Latin square: {line} {index} repeats entry {entry}")]
    NotLatinSquare {
        line: TableLine,
        index: usize,
        entry: usize,
    },
    #[error("no identity element in table")]
    NoIdentity,
    #[error("element {0} has no inverse")]
    NoInverse(ElementId),
    #[error("not associative: ({x}*{y})*{z} != {x}*({y}*{z})")]
    NotAssociative {
        x: ElementId,
        y: ElementId,
        z: ElementId,
    },
    #[error("generator {index} is not a permutation of [0, {degree})")]
    NotAPermutation { index: usize, degree: usize },
    #[error("group order {order} exceeds the order cap {cap}")]
    OrderCapExceeded { order: usize, cap: usize },
    #[error("bad parameter: {0}")]
    BadParameter(String),
    #[error("subgroup is not normal: {t}^-1 * {h} * {t} leaves it")]
    NotNormal { h: ElementId, t: ElementId },
    #[error("set is not a subgroup of this group")]
    NotASubgroup,
    #[error("parent orders differ ({left} vs {right})")]
    ParentMismatch { left: usize, right: usize },
    #[error("element {0} of the subgroup lies outside the ambient subgroup")]
    NotContained(ElementId),
    #[error("internal invariant violated: {0}")]
    InternalInvariantViolated(String),
}

pub type Result<T, E = GroupError> = std::result::Result<T, E>;
