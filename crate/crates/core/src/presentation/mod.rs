//! The quadratic presentation: bracket words over weighted generators, the
//! relation `r`, the evaluation `φ` into trees and the rewriting `ψ` back.
//!
//! `ψ` lands in the free algebra, not in the quotient by `r`; two bracket
//! combinations are compared through `φ`.

mod bracket;

use std::collections::HashMap;

pub use bracket::{BracketCombination, BracketExpr};

use crate::algebra::{LambdaPoly, Rational, TreeCombination};
use crate::error::{Error, Result};
use crate::operad::Operad;
use crate::trees::{Label, WeightedTree};

/// `((x_k y_l) z_m) − λ^m (x_k (y_l z_m)) − ((x_k z_m) y_l) + λ^l (x_k (z_m y_l))`.
pub fn relation_r(k: u64, l: u64, m: u64, x: &str, y: &str, z: &str) -> Result<BracketCombination> {
    let g = |name: &str, w: u64| -> Result<BracketExpr> {
        BracketExpr::generator(Some(Label::new(name)?), w)
    };
    let (xk, yl, zm) = (g(x, k)?, g(y, l)?, g(z, m)?);
    let p = BracketExpr::product;
    let exponent = |w: u64| u32::try_from(w).map_err(|_| Error::Invalid(format!("weight {w} too large")));
    let minus = |e: u32| LambdaPoly::monomial(Rational::integer(-1), e);
    let mut out = BracketCombination::zero();
    out.add_term(p(p(xk.clone(), yl.clone())?, zm.clone())?, &LambdaPoly::one())?;
    out.add_term(p(xk.clone(), p(yl.clone(), zm.clone())?)?, &minus(exponent(m)?))?;
    out.add_term(p(p(xk.clone(), zm.clone())?, yl.clone())?, &minus(0))?;
    out.add_term(p(xk, p(zm, yl)?)?, &LambdaPoly::lambda_pow(exponent(l)?))?;
    Ok(out)
}

/// `φ`: a generator becomes a single vertex, a product `(a b)` becomes
/// `φ(a) ⋆_λ φ(b)`.
pub fn phi(op: &Operad, e: &BracketExpr) -> Result<TreeCombination> {
    match e {
        BracketExpr::Gen { label, weight } => Ok(TreeCombination::basis(WeightedTree::vertex(
            label.clone(),
            *weight,
        )?)),
        BracketExpr::Product(a, b) => op.arrow_combinations(&phi(op, a)?, &phi(op, b)?),
    }
}

/// Linear extension of [`phi`].
pub fn phi_combination(op: &Operad, c: &BracketCombination) -> Result<TreeCombination> {
    let mut out = TreeCombination::zero();
    for (e, p) in c.iter() {
        out.add_scaled(&phi(op, e)?, p)?;
    }
    Ok(out)
}

/// `T = B[x, T_1, …, T_p]`: the root generator and the branches.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Corolla {
    pub root: Option<Label>,
    pub weight: u64,
    pub branches: Vec<WeightedTree>,
}

impl Corolla {
    /// Branches come in the stored child order of `t`.
    pub fn decompose(t: &WeightedTree) -> Corolla {
        Corolla {
            root: t.root_label().cloned(),
            weight: t.root_weight(),
            branches: t.branches(),
        }
    }

    pub fn assemble(&self) -> Result<WeightedTree> {
        WeightedTree::node(self.root.clone(), self.weight, self.branches.clone())
    }
}

/// Which branch plays the role of `T_1` at each step of the `ψ` recursion.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum BranchOrder {
    /// Branches in canonical order at every level.
    Canonical,
    /// Branches in reverse canonical order at every level.
    Reversed,
    /// The given permutation of the canonical root branches at the top
    /// level, canonical order below.
    Root(Vec<usize>),
}

/// `ψ` with the canonical branch order.
pub fn psi(op: &Operad, t: &WeightedTree) -> Result<BracketCombination> {
    psi_with_order(op, t, &BranchOrder::Canonical)
}

pub fn psi_with_order(op: &Operad, t: &WeightedTree, order: &BranchOrder) -> Result<BracketCombination> {
    let mut rewriter = Rewriter {
        op,
        reversed: *order == BranchOrder::Reversed,
        memo: HashMap::new(),
    };
    let mut corolla = Corolla::decompose(&t.canonicalize());
    if let BranchOrder::Root(perm) = order {
        corolla.branches = permuted(&corolla.branches, perm)?;
        return rewriter.corolla(corolla, None);
    }
    rewriter.tree(t, None)
}

/// Linear extension of [`psi`].
pub fn psi_combination(op: &Operad, c: &TreeCombination) -> Result<BracketCombination> {
    let mut out = BracketCombination::zero();
    for (t, p) in c.iter() {
        out.add_scaled(&psi(op, t)?, p)?;
    }
    Ok(out)
}

/// `φ(ψ(T))` agrees for the two root branch orders.
pub fn psi_order_independence_check(
    op: &Operad,
    t: &WeightedTree,
    order1: &[usize],
    order2: &[usize],
) -> Result<bool> {
    let a = phi_combination(op, &psi_with_order(op, t, &BranchOrder::Root(order1.to_vec()))?)?;
    let b = phi_combination(op, &psi_with_order(op, t, &BranchOrder::Root(order2.to_vec()))?)?;
    Ok(a == b)
}

fn permuted(branches: &[WeightedTree], perm: &[usize]) -> Result<Vec<WeightedTree>> {
    let mut seen = vec![false; branches.len()];
    if perm.len() != branches.len() || perm.iter().any(|&i| i >= seen.len() || std::mem::replace(&mut seen[i], true)) {
        return Err(Error::NotABijection(format!(
            "{perm:?} is not a permutation of {} branches",
            branches.len()
        )));
    }
    Ok(perm.iter().map(|&i| branches[i].clone()).collect())
}

/// `(vertex count, root branch count)`, decreasing lexicographically along
/// every recursive call.
type Metric = (usize, usize);

struct Rewriter<'a> {
    op: &'a Operad,
    reversed: bool,
    memo: HashMap<WeightedTree, BracketCombination>,
}

impl Rewriter<'_> {
    fn tree(&mut self, t: &WeightedTree, caller: Option<Metric>) -> Result<BracketCombination> {
        let metric = (t.len(), t.branches().len());
        if let Some(c) = caller {
            assert!(metric < c, "psi recursion metric {metric:?} does not decrease from {c:?}");
        }
        if let Some(hit) = self.memo.get(t) {
            return Ok(hit.clone());
        }
        let mut corolla = Corolla::decompose(&t.canonicalize());
        if self.reversed {
            corolla.branches.reverse();
        }
        let out = self.corolla(corolla, None)?;
        self.memo.insert(t.clone(), out.clone());
        Ok(out)
    }

    /// `ψ(B[x, T_1, …, T_p])` with the branches taken in the given order.
    fn corolla(&mut self, c: Corolla, caller: Option<Metric>) -> Result<BracketCombination> {
        let n = 1 + c.branches.iter().map(WeightedTree::len).sum::<usize>();
        let metric = (n, c.branches.len());
        if let Some(up) = caller {
            assert!(metric < up, "psi recursion metric {metric:?} does not decrease from {up:?}");
        }
        let x = BracketExpr::generator(c.root.clone(), c.weight)?;
        let Some((t1, rest)) = c.branches.split_first() else {
            return Ok(BracketCombination::basis(x));
        };
        if rest.is_empty() {
            let right = self.tree(t1, Some(metric))?;
            return times(&BracketCombination::basis(x), &right);
        }
        let head = Corolla {
            root: c.root.clone(),
            weight: c.weight,
            branches: rest.to_vec(),
        }
        .assemble()?;
        let mut out = times(&self.tree(&head, Some(metric))?, &self.tree(t1, Some(metric))?)?;
        let w1 = u32::try_from(t1.weight()).map_err(|_| Error::Invalid("weight too large".into()))?;
        let factor = LambdaPoly::monomial(Rational::integer(-1), w1);
        for j in 0..rest.len() {
            for (grafted, coeff) in self.op.arrow(&rest[j], t1)?.iter() {
                let mut branches = rest.to_vec();
                branches[j] = grafted.clone();
                let tree = Corolla {
                    root: c.root.clone(),
                    weight: c.weight,
                    branches,
                }
                .assemble()?;
                out.add_scaled(&self.tree(&tree, Some(metric))?, &(coeff * &factor))?;
            }
        }
        Ok(out)
    }
}

/// Bilinear product `(a b)` of bracket combinations.
pub fn times(a: &BracketCombination, b: &BracketCombination) -> Result<BracketCombination> {
    let mut out = BracketCombination::zero();
    for (x, p) in a.iter() {
        for (y, q) in b.iter() {
            out.add_term(BracketExpr::product(x.clone(), y.clone())?, &(p * q))?;
        }
    }
    Ok(out)
}
