//! Exact coefficient arithmetic: rationals, polynomials in λ, and formal
//! linear combinations of trees or bracket expressions.

mod combination;
mod poly;
mod rational;

pub use combination::{Basis, LinearCombination, TreeCombination};
pub use poly::LambdaPoly;
pub use rational::Rational;
