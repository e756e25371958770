use super::{nap_partial, prelie_partial, Operad};
use crate::algebra::{Rational, TreeCombination};
use crate::error::{Error, Result};
use crate::trees::{LabelMode, WeightedTree};

/// Every `μ ∈ (ℕ*)^n` with `Σ μ ≤ total`, lexicographically.
pub fn bounded_weight_vectors(n: usize, total: u64) -> Vec<Vec<u64>> {
    fn go(n: usize, left: u64, cur: &mut Vec<u64>, out: &mut Vec<Vec<u64>>) {
        if cur.len() == n {
            out.push(cur.clone());
            return;
        }
        let reserve = (n - cur.len() - 1) as u64;
        for w in 1..=left.saturating_sub(reserve) {
            cur.push(w);
            go(n, left - w, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    if (n as u64) <= total {
        go(n, total, &mut Vec::with_capacity(n), &mut out);
    }
    out
}

/// `Σ_{μ, |μ| ≤ W} (t, μ)` for every tree of `c`, coefficients kept.
fn truncated_lift(c: &TreeCombination, total: u64) -> Result<TreeCombination> {
    let mut out = TreeCombination::zero();
    for (t, coeff) in c.iter() {
        for mu in bounded_weight_vectors(t.len(), total) {
            out.add_term(t.reweighted(&mu)?, coeff)?;
        }
    }
    Ok(out)
}

impl Operad {
    /// `i(S ∘_v T) = i(S) ∘_{v,1} i(T)` in every component of total weight `≤ W`.
    ///
    /// `S` and `T` are labeled; their weights are ignored.
    pub fn morphism_i_check(&self, s: &WeightedTree, v: &str, t: &WeightedTree, total: u64) -> Result<bool> {
        let classical = prelie_partial(s, s.find(v)?, t)?;
        self.morphism_check(s, v, t, total, &classical, &Rational::one())
    }

    /// `j(S ∘_{NAP,v} T) = j(S) ∘_{0,v} j(T)` in every component of total weight `≤ W`.
    pub fn morphism_j_check(&self, s: &WeightedTree, v: &str, t: &WeightedTree, total: u64) -> Result<bool> {
        let classical = TreeCombination::basis(nap_partial(s, s.find(v)?, t)?);
        self.morphism_check(s, v, t, total, &classical, &Rational::zero())
    }

    fn morphism_check(
        &self,
        s: &WeightedTree,
        v: &str,
        t: &WeightedTree,
        total: u64,
        classical: &TreeCombination,
        lambda: &Rational,
    ) -> Result<bool> {
        if s.mode() != LabelMode::Labeled || t.mode() != LabelMode::Labeled {
            return Err(Error::Unlabeled);
        }
        let lhs = truncated_lift(classical, total)?;
        // The composite has total weight |α|, so truncating i(S) suffices.
        let mut rhs = TreeCombination::zero();
        let slot = s.find(v)?.index();
        for alpha in bounded_weight_vectors(s.len(), total) {
            let sa = s.reweighted(&alpha)?;
            for beta in bounded_weight_vectors(t.len(), alpha[slot]) {
                if beta.iter().sum::<u64>() != alpha[slot] {
                    continue;
                }
                let tb = t.reweighted(&beta)?;
                let c = self.compose_at(&sa, v, &tb)?.specialize(lambda);
                rhs.add_scaled(&c, &crate::algebra::LambdaPoly::one())?;
            }
        }
        Ok(lhs == rhs)
    }
}
