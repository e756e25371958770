//! Exact computations in the one-parameter family of multigraded operads on
//! weighted rooted trees: λ-deformed partial composition, the deformed
//! grafting product, its NAP (λ = 0) and pre-Lie (λ = 1) specializations, and
//! the conversion between trees and bracket expressions in the quadratic
//! presentation.

pub mod algebra;
pub mod error;
pub mod operad;
pub mod presentation;
pub mod trees;
pub mod verify;

pub use algebra::{LambdaPoly, LinearCombination, Rational, TreeCombination};
pub use error::{Error, ParseError, Result};
pub use operad::{Fault, GraftMap, Operad};
pub use presentation::{BracketCombination, BracketExpr};
pub use trees::{Edge, Label, LabelMode, VertexRef, WeightedTree};
