//! Chemical trees (trees with maximum degree at most 4) and their Zagreb indices.
//!
//! The crate is `no_std` and only needs `alloc`. It covers:
//!
//! * [`tree`]: validated trees, degree censuses, edge-type counts, segments
//!   and branching vertices, the first and second Zagreb indices;
//! * [`canon`]: centroid-rooted canonical codes (equality iff isomorphic);
//! * [`enumerate`]: streaming generation of every non-isomorphic chemical tree
//!   of a given order, optionally restricted by segment or branching count;
//! * [`bounds`]: closed-form maxima of `M1`/`M2` over the classes `CT(n, k)`
//!   (fixed number of segments) and `CT*(n, b)` (fixed number of branching
//!   vertices), with the degree censuses and edge-type profiles of the maximizers;
//! * [`witness`]: explicit extremal trees and membership predicates for the
//!   extremal classes;
//! * [`moves`]: the local rewrites that strictly increase the indices while
//!   preserving the class parameter.
#![cfg_attr(not(feature = "std"), no_std)]

extern crate alloc;

pub mod bounds;
pub mod canon;
pub mod enumerate;
pub mod error;
pub mod moves;
pub mod tree;
pub mod witness;

pub use bounds::{BoundResult, ClassQuery, EqualityClass, Family, Index, Regime};
pub use canon::CanonicalCode;
pub use enumerate::{EnumFilter, TreeEnumerator};
pub use error::{BoundsError, EnumError, MoveError, TreeError};
pub use tree::{ChemicalTree, DegreeCensus, EdgeTypeMatrix, PathReport};
pub use witness::{Condition, MembershipVerdict};
