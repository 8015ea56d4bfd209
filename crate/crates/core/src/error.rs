use core::fmt;

use crate::bounds::Family;

/// Rejections from [`ChemicalTree::new`](crate::ChemicalTree::new).
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum TreeError {
    /// An endpoint id is outside `0..order`.
    BadId { id: usize, order: usize },
    /// Wrong edge count, a self-loop, a repeated edge, a cycle, or a disconnected graph.
    NotATree(&'static str),
    /// Some vertex has more than four neighbors.
    DegreeExceeded { vertex: usize, degree: usize },
}

impl fmt::Display for TreeError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TreeError::BadId { id, order } => {
                write!(f, "vertex id {id} out of range for order {order}")
            }
            TreeError::NotATree(why) => write!(f, "not a tree: {why}"),
            TreeError::DegreeExceeded { vertex, degree } => {
                write!(f, "vertex {vertex} has degree {degree} (maximum is 4)")
            }
        }
    }
}

impl core::error::Error for TreeError {}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum EnumError {
    /// The requested order is above the configured cap.
    LimitExceeded { order: usize, cap: usize },
    /// Order zero has no trees.
    ZeroOrder,
}

impl fmt::Display for EnumError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            EnumError::LimitExceeded { order, cap } => {
                write!(f, "order {order} exceeds the enumeration cap {cap}")
            }
            EnumError::ZeroOrder => f.write_str("order must be at least 1"),
        }
    }
}

impl core::error::Error for EnumError {}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum BoundsError {
    /// The class is empty (or outside the domain of the requested formula).
    Infeasible { family: Family, n: usize, p: usize },
    /// `k` is not congruent to `2*n3 + 1` modulo 3.
    CongruenceViolation { k: usize, n3: usize },
}

impl fmt::Display for BoundsError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BoundsError::Infeasible { family, n, p } => {
                write!(f, "infeasible {family} query: n={n}, p={p}")
            }
            BoundsError::CongruenceViolation { k, n3 } => {
                write!(f, "k={k} is not congruent to 2*{n3}+1 (mod 3)")
            }
        }
    }
}

impl core::error::Error for BoundsError {}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum MoveError {
    /// The move's sites do not satisfy its precondition in the host tree.
    NotApplicable(&'static str),
    /// The rewrite produced an invalid tree. Indicates a bug in a precondition.
    Invalid(TreeError),
}

impl fmt::Display for MoveError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MoveError::NotApplicable(why) => write!(f, "move not applicable: {why}"),
            MoveError::Invalid(e) => write!(f, "move produced an invalid tree: {e}"),
        }
    }
}

impl core::error::Error for MoveError {}
