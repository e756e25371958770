//! Partial composition `∘_{v,λ}`, global composition, units and the grafting
//! product `←_λ` of the deformed operad, together with the classical pre-Lie
//! and NAP compositions they specialize to.
//!
//! Composition is keyed by vertex: `S ∘_v T` replaces the vertex `v` of `S` by
//! `T`. In labeled mode the labels of `S ∖ {v}` and `T` must be disjoint, so
//! the composite carries the union of both label sets and every vertex of it
//! can still be addressed by label.

mod graft_map;
mod morphism;

use std::collections::{BTreeMap, BTreeSet};

pub use graft_map::GraftMap;
pub use morphism::bounded_weight_vectors;

use crate::algebra::{LambdaPoly, TreeCombination};
use crate::error::{Error, Result};
use crate::trees::{Label, LabelMode, VertexRef, WeightedTree};

/// Deliberate exponent bugs, used to show that the verification suites are
/// not vacuous.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, serde::Serialize)]
pub enum Fault {
    /// Non-minimal terms of `∘_{v,λ}` get exponent `ε(f) + 1`.
    NonMinimalExponentPlusOne,
    /// Every term of `∘_{v,λ}`, the minimal one included, gets exponent `ε(f) + 1`.
    ExponentPlusOne,
    /// Non-minimal terms of `∘_{v,λ}` get exponent `ε(f) + h(v)`: target
    /// heights measured from the root of `S` instead of the root of `T`,
    /// which is off by one for a slot at depth one.
    SlotHeightInExponent,
    /// Non-minimal terms of `∘_{v,λ}` get exponent `ε(f) − 1`.
    NonMinimalExponentMinusOne,
    /// Terms that move the first stored incoming edge of `v` off the root of
    /// `T` get exponent `ε(f) + 1`. Depends on child order, hence on labels.
    FirstEdgeExponentPlusOne,
    /// Non-root grafts of `←_λ` get exponent `|S|·h(v) + 1`.
    GraftExponentPlusOne,
}

/// The operad `O^λ` with symbolic λ, optionally with an injected [`Fault`].
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct Operad {
    fault: Option<Fault>,
}

impl Operad {
    pub const fn new() -> Operad {
        Operad { fault: None }
    }

    pub const fn with_fault(fault: Fault) -> Operad {
        Operad { fault: Some(fault) }
    }

    pub fn fault(&self) -> Option<Fault> {
        self.fault
    }

    /// `S ∘_{v,λ} T = Σ_f λ^{d(S∘_v^f T) − d(S∘_v^{f₀} T)} S∘_v^f T` when
    /// `|T| = |v|`, and the zero combination otherwise.
    pub fn compose_lambda(
        &self,
        s: &WeightedTree,
        v: VertexRef,
        t: &WeightedTree,
    ) -> Result<TreeCombination> {
        let slot = s.resolve(v)?;
        check_composable(s, slot, t)?;
        let mut out = TreeCombination::zero();
        if t.weight() != s.weight_at(slot) {
            return Ok(out);
        }
        let k = s.child_indices(slot).count();
        let base = substitute(s, slot, t, &vec![0; k]).potential_energy() as i64;
        for images in graft_map::all_images(k, t.len()) {
            let tree = substitute(s, slot, t, &images);
            let exponent = tree.potential_energy() as i64 - base;
            if exponent < 0 {
                return Err(Error::NegativeExponent(exponent));
            }
            let minimal = images.iter().all(|&i| i == 0);
            let exponent = match self.fault {
                Some(Fault::NonMinimalExponentPlusOne) if !minimal => exponent + 1,
                Some(Fault::ExponentPlusOne) => exponent + 1,
                Some(Fault::SlotHeightInExponent) if !minimal => exponent + s.depth_of(slot) as i64,
                Some(Fault::NonMinimalExponentMinusOne) if !minimal => exponent - 1,
                Some(Fault::FirstEdgeExponentPlusOne) if images.first().is_some_and(|&i| i != 0) => {
                    exponent + 1
                }
                _ => exponent,
            } as u32;
            out.add_term(tree, &LambdaPoly::lambda_pow(exponent))?;
        }
        Ok(out)
    }

    /// [`Operad::compose_lambda`] with the slot named by label.
    pub fn compose_at(&self, s: &WeightedTree, v: &str, t: &WeightedTree) -> Result<TreeCombination> {
        self.compose_lambda(s, s.find(v)?, t)
    }

    /// Bilinear extension of [`Operad::compose_at`]; the slot label must exist
    /// in every tree of `s`.
    pub fn compose_combinations(
        &self,
        s: &TreeCombination,
        v: &str,
        t: &TreeCombination,
    ) -> Result<TreeCombination> {
        let mut out = TreeCombination::zero();
        for (a, p) in s.iter() {
            for (b, q) in t.iter() {
                out.add_scaled(&self.compose_at(a, v, b)?, &(p * q))?;
            }
        }
        Ok(out)
    }

    /// Classical positional `T ∘_i S` on trees labeled `1..=n` and `1..=m`:
    /// the labels of `S` are shifted by `i − 1`, those of `T` above `i` by
    /// `m − 1`, then the vertex labeled `i` is substituted.
    pub fn compose_positional(
        &self,
        t: &WeightedTree,
        i: usize,
        s: &WeightedTree,
    ) -> Result<TreeCombination> {
        let n = t.len();
        let m = s.len();
        let numeric = |tree: &WeightedTree| -> Result<()> {
            let found: BTreeSet<String> = tree.labels().map(|l| l.to_string()).collect();
            let expected: BTreeSet<String> = (1..=tree.len()).map(|k| k.to_string()).collect();
            if tree.mode() == LabelMode::Labeled && found == expected {
                Ok(())
            } else {
                Err(Error::Invalid(format!(
                    "positional composition needs labels 1..={}",
                    tree.len()
                )))
            }
        };
        numeric(t)?;
        numeric(s)?;
        if i == 0 || i > n {
            return Err(Error::UnknownLabel(i.to_string()));
        }
        let t_shift: BTreeMap<Label, Label> = (i + 1..=n)
            .map(|j| (Label::from(j), Label::from(j + m - 1)))
            .collect();
        let s_shift: BTreeMap<Label, Label> = (1..=m)
            .map(|k| (Label::from(k), Label::from(k + i - 1)))
            .collect();
        let t2 = t.rename(&t_shift)?;
        let s2 = s.rename(&s_shift)?;
        self.compose_at(&t2, &i.to_string(), &s2)
    }

    /// `•_n ∘ T`: `T` when `|T| = n`, zero otherwise.
    pub fn compose_unit_left(&self, n: u64, t: &WeightedTree) -> Result<TreeCombination> {
        let unit = match t.mode() {
            LabelMode::Unlabeled => WeightedTree::bullet(n)?,
            LabelMode::Labeled => WeightedTree::vertex(Some(fresh_label(t.labels())?), n)?,
        };
        self.compose_lambda(&unit, unit.root(), t)
    }

    /// `S ∘_{v,λ} •_{|v|}`, the unit carrying the label of `v`.
    pub fn compose_unit_right(&self, s: &WeightedTree, v: VertexRef) -> Result<TreeCombination> {
        let slot = s.resolve(v)?;
        let unit = WeightedTree::vertex(s.label_at(slot).cloned(), s.weight_at(slot))?;
        self.compose_lambda(s, v, &unit)
    }

    /// `γ(a; b_1, …, b_n) = (…((a ∘_n b_n) ∘_{n−1} b_{n−1})…) ∘_1 b_1`, where
    /// `b_i` is plugged into the `i`-th vertex of `a` in preorder.
    pub fn gamma(&self, a: &WeightedTree, bs: &[WeightedTree]) -> Result<TreeCombination> {
        if bs.len() != a.len() {
            return Err(Error::Arity {
                expected: a.len(),
                found: bs.len(),
            });
        }
        let mode = bs[0].mode();
        if bs.iter().any(|b| b.mode() != mode) {
            return Err(Error::ModeMismatch);
        }
        // Work in labeled mode throughout: slots of `a` get reserved tags, and
        // unlabeled inputs are tagged per block and stripped at the end.
        let inputs: Vec<WeightedTree> = match mode {
            LabelMode::Labeled => bs.to_vec(),
            LabelMode::Unlabeled => bs
                .iter()
                .enumerate()
                .map(|(i, b)| b.with_labels(&format!("b{i}x")))
                .collect::<Result<_>>()?,
        };
        let mut used = BTreeSet::new();
        for b in &inputs {
            for l in b.labels() {
                if !used.insert(l.clone()) {
                    return Err(Error::LabelClash(l.to_string()));
                }
            }
        }
        let prefix = fresh_prefix(&used);
        let tagged = a.with_labels(&prefix)?;
        let mut acc = TreeCombination::basis(tagged);
        for (i, b) in inputs.iter().enumerate().rev() {
            let slot = format!("{prefix}{}", i + 1);
            acc = self.compose_combinations(&acc, &slot, &TreeCombination::basis(b.clone()))?;
        }
        if mode == LabelMode::Unlabeled {
            let mut stripped = TreeCombination::zero();
            for (t, c) in acc.iter() {
                stripped.add_term(t.forget_labels(), c)?;
            }
            acc = stripped;
        }
        Ok(acc)
    }

    /// `T ←_λ S = Σ_{v ∈ v(T)} λ^{|S|·h(v)} T ←_v S`.
    pub fn arrow(&self, t: &WeightedTree, s: &WeightedTree) -> Result<TreeCombination> {
        check_disjoint(t, None, s)?;
        let ws = s.weight() as u32;
        let mut out = TreeCombination::zero();
        for v in 0..t.len() {
            let h = t.depth_of(v) as u32;
            let extra = match self.fault {
                Some(Fault::GraftExponentPlusOne) if v != 0 => 1,
                _ => 0,
            };
            out.add_term(graft(t, v, s), &LambdaPoly::lambda_pow(ws * h + extra))?;
        }
        Ok(out)
    }

    /// Bilinear extension of [`Operad::arrow`] (alias `⋆_λ`).
    pub fn arrow_combinations(
        &self,
        t: &TreeCombination,
        s: &TreeCombination,
    ) -> Result<TreeCombination> {
        let mut out = TreeCombination::zero();
        for (a, p) in t.iter() {
            for (b, q) in s.iter() {
                out.add_scaled(&self.arrow(a, b)?, &(p * q))?;
            }
        }
        Ok(out)
    }

    /// `T ⊲ S = Σ_{v ∈ v(T)} T ∘_{v,λ} S`; only vertices with `|v| = |S|` contribute.
    pub fn circ_sum(&self, t: &WeightedTree, s: &WeightedTree) -> Result<TreeCombination> {
        let mut out = TreeCombination::zero();
        for v in t.vertices() {
            out.add_scaled(&self.compose_lambda(t, v, s)?, &LambdaPoly::one())?;
        }
        Ok(out)
    }

    /// Bilinear extension of [`Operad::circ_sum`].
    pub fn circ_sum_combinations(
        &self,
        t: &TreeCombination,
        s: &TreeCombination,
    ) -> Result<TreeCombination> {
        let mut out = TreeCombination::zero();
        for (a, p) in t.iter() {
            for (b, q) in s.iter() {
                out.add_scaled(&self.circ_sum(a, b)?, &(p * q))?;
            }
        }
        Ok(out)
    }
}

/// `S ∘_v^f T`: delete `v`, put `T` in its place and hang each branch that
/// arrived at `v` from its image under `f`.
pub fn compose_with_map(
    s: &WeightedTree,
    v: VertexRef,
    t: &WeightedTree,
    f: &GraftMap,
) -> Result<WeightedTree> {
    let slot = s.resolve(v)?;
    check_composable(s, slot, t)?;
    f.check(s, slot, t)?;
    Ok(substitute(s, slot, t, f.images()))
}

/// `ε(f) = Σ_{e ∈ E(S,v)} h_T(f(e))·|B_e|`, the exponent of the term `f`.
pub fn epsilon(s: &WeightedTree, v: VertexRef, t: &WeightedTree, f: &GraftMap) -> Result<u64> {
    let slot = s.resolve(v)?;
    f.check(s, slot, t)?;
    Ok(s.child_indices(slot)
        .zip(f.images())
        .map(|(c, &x)| t.depth_of(x) as u64 * s.subtree_weight(c))
        .sum())
}

/// Graded NAP composition: the single `f₀` term, defined when `|T| = |v|`.
pub fn nap_compose(s: &WeightedTree, v: VertexRef, t: &WeightedTree) -> Result<WeightedTree> {
    let slot = s.resolve(v)?;
    if t.weight() != s.weight_at(slot) {
        return Err(Error::WeightMismatch {
            slot: s.weight_at(slot),
            inserted: t.weight(),
        });
    }
    nap_partial(s, v, t)
}

/// Ungraded NAP composition `S ∘_v^{f₀} T`; weights are carried but not checked.
pub fn nap_partial(s: &WeightedTree, v: VertexRef, t: &WeightedTree) -> Result<WeightedTree> {
    let f = GraftMap::minimal(s, v, t)?;
    compose_with_map(s, v, t, &f)
}

/// Ungraded pre-Lie composition `Σ_f S ∘_v^f T` with unit coefficients.
pub fn prelie_partial(s: &WeightedTree, v: VertexRef, t: &WeightedTree) -> Result<TreeCombination> {
    let mut out = TreeCombination::zero();
    for f in GraftMap::all(s, v, t)? {
        out.add_term(compose_with_map(s, v, t, &f)?, &LambdaPoly::one())?;
    }
    Ok(out)
}

/// `T ←_v S`: `S` hung as a new branch of the vertex `v` of `T`.
pub fn graft_at(t: &WeightedTree, v: VertexRef, s: &WeightedTree) -> Result<WeightedTree> {
    let at = t.resolve(v)?;
    check_disjoint(t, None, s)?;
    Ok(graft(t, at, s))
}

/// Right Butcher product `T ↙ S`: graft at the root.
pub fn butcher_product(t: &WeightedTree, s: &WeightedTree) -> Result<WeightedTree> {
    graft_at(t, t.root(), s)
}

fn check_composable(s: &WeightedTree, slot: usize, t: &WeightedTree) -> Result<()> {
    check_disjoint(s, Some(slot), t)
}

fn check_disjoint(s: &WeightedTree, skip: Option<usize>, t: &WeightedTree) -> Result<()> {
    if s.mode() != t.mode() {
        return Err(Error::ModeMismatch);
    }
    if s.mode() == LabelMode::Labeled {
        let own: BTreeSet<&str> = (0..s.len())
            .filter(|&i| Some(i) != skip)
            .filter_map(|i| s.label_at(i).map(Label::as_str))
            .collect();
        if let Some(l) = t.labels().find(|l| own.contains(l.as_str())) {
            return Err(Error::LabelClash(l.to_string()));
        }
    }
    Ok(())
}

/// Unchecked `S ∘_slot^f T` with `images[k]` the target of the `k`-th child edge.
pub(crate) fn substitute(s: &WeightedTree, slot: usize, t: &WeightedTree, images: &[usize]) -> WeightedTree {
    let (s_vertices, s_parent) = s.parent_arena();
    let (t_vertices, t_parent) = t.parent_arena();
    let n = s.len();
    let renumber = |i: usize| if i < slot { i } else { i - 1 };
    let offset = n - 1;
    let kids: Vec<usize> = s.child_indices(slot).collect();

    let mut vertices = Vec::with_capacity(n + t.len() - 1);
    let mut parents = Vec::with_capacity(n + t.len() - 1);
    for (i, vert) in s_vertices.into_iter().enumerate() {
        if i == slot {
            continue;
        }
        vertices.push(vert);
        parents.push(match s_parent[i] {
            Some(p) if p == slot => {
                let k = kids.iter().position(|&c| c == i).expect("child of slot");
                Some(offset + images[k])
            }
            p => p.map(renumber),
        });
    }
    for (j, vert) in t_vertices.into_iter().enumerate() {
        vertices.push(vert);
        parents.push(match t_parent[j] {
            None => s_parent[slot].map(renumber),
            Some(p) => Some(offset + p),
        });
    }
    WeightedTree::assemble_canonical(vertices, &parents)
}

/// Unchecked `T ←_at S`.
pub(crate) fn graft(t: &WeightedTree, at: usize, s: &WeightedTree) -> WeightedTree {
    let (mut vertices, mut parents) = t.parent_arena();
    let (s_vertices, s_parent) = s.parent_arena();
    let offset = vertices.len();
    vertices.extend(s_vertices);
    parents.extend(s_parent.into_iter().map(|p| Some(p.map_or(at, |p| p + offset))));
    WeightedTree::assemble_canonical(vertices, &parents)
}

fn fresh_prefix(used: &BTreeSet<Label>) -> String {
    let mut prefix = String::from("slot");
    while used.iter().any(|l| l.as_str().starts_with(&prefix)) {
        prefix.insert(0, '_');
    }
    prefix
}

fn fresh_label<'a>(used: impl Iterator<Item = &'a Label>) -> Result<Label> {
    let used: BTreeSet<Label> = used.cloned().collect();
    Label::new(&format!("{}1", fresh_prefix(&used)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::Rational;

    fn t(s: &str) -> WeightedTree {
        s.parse().unwrap()
    }

    fn p(s: &str) -> LambdaPoly {
        s.parse().unwrap()
    }

    const OP: Operad = Operad::new();

    #[test]
    fn replacing_the_only_vertex() {
        let s = t("a:3");
        let tt = t("e:2[h:1]");
        let f = GraftMap::minimal(&s, s.root(), &tt).unwrap();
        assert_eq!(compose_with_map(&s, s.root(), &tt, &f).unwrap(), tt);
    }

    #[test]
    fn leaf_replacement() {
        let s = t("a:1[b:3]");
        let tt = t("e:2[h:1]");
        let b = s.find("b").unwrap();
        let f = GraftMap::minimal(&s, b, &tt).unwrap();
        assert_eq!(compose_with_map(&s, b, &tt, &f).unwrap(), t("a:1[e:2[h:1]]"));
        assert_eq!(nap_compose(&s, b, &tt).unwrap(), t("a:1[e:2[h:1]]"));
    }

    #[test]
    fn both_branches_to_h() {
        let s = t("a:1[b:3[c:2,d:1]]");
        let tt = t("e:2[h:1]");
        let f = GraftMap::from_labels(&s, "b", &tt, &[("c", "h"), ("d", "h")]).unwrap();
        let out = compose_with_map(&s, s.find("b").unwrap(), &tt, &f).unwrap();
        assert_eq!(out, t("a:1[e:2[h:1[c:2,d:1]]]"));
        assert_eq!(out.len(), s.len() + tt.len() - 1);
    }

    #[test]
    fn worked_example_coefficients() {
        let s = t("a:1[b:3[c:2,d:1]]");
        let tt = t("e:2[h:1]");
        let c = OP.compose_at(&s, "b", &tt).unwrap();
        let expected = [
            ("a:1[e:2[c:2,d:1,h:1]]", "1"),
            ("a:1[e:2[c:2,h:1[d:1]]]", "L"),
            ("a:1[e:2[d:1,h:1[c:2]]]", "L^2"),
            ("a:1[e:2[h:1[c:2,d:1]]]", "L^3"),
        ];
        assert_eq!(c.len(), 4);
        for (tree, coeff) in expected {
            assert_eq!(c.coefficient(&t(tree)), p(coeff), "{tree}");
        }
        let at_zero = c.specialize(&Rational::zero());
        assert_eq!(at_zero, TreeCombination::basis(t("a:1[e:2[c:2,d:1,h:1]]")));
    }

    #[test]
    fn weight_mismatch_gives_zero() {
        let s = t("a:1[b:3[c:2,d:1]]");
        assert!(OP.compose_at(&s, "b", &t("e:2")).unwrap().is_zero());
        assert!(matches!(
            nap_compose(&s, s.find("b").unwrap(), &t("e:2")),
            Err(Error::WeightMismatch { slot: 3, inserted: 2 })
        ));
    }

    #[test]
    fn composition_errors() {
        let s = t("a:1[b:3]");
        assert_eq!(OP.compose_at(&s, "b", &t("a:3")), Err(Error::LabelClash("a".into())));
        // the slot's own label may be reused
        assert!(OP.compose_at(&s, "b", &t("b:3")).is_ok());
        assert_eq!(OP.compose_at(&s, "b", &t("_:3")), Err(Error::ModeMismatch));
        let other = t("x:1[y:1]");
        assert_eq!(
            OP.compose_lambda(&s, other.find("y").unwrap(), &t("e:3")),
            Err(Error::ForeignVertex)
        );
        let f = GraftMap::minimal(&other, other.root(), &t("e:3")).unwrap();
        assert_eq!(
            compose_with_map(&s, s.find("b").unwrap(), &t("e:3"), &f),
            Err(Error::GraftMapDomain)
        );
    }

    #[test]
    fn units() {
        let x = t("e:2[h:1]");
        assert_eq!(OP.compose_unit_left(3, &x).unwrap(), TreeCombination::basis(x.clone()));
        assert!(OP.compose_unit_left(2, &x).unwrap().is_zero());
        let s = t("a:1[b:3[c:2,d:1]]");
        for v in s.vertices() {
            assert_eq!(OP.compose_unit_right(&s, v).unwrap(), TreeCombination::basis(s.clone()));
        }
        let u = t("_:2[_:1]");
        assert_eq!(OP.compose_unit_left(3, &u).unwrap(), TreeCombination::basis(u.clone()));
    }

    #[test]
    fn arrow_on_ladder() {
        let r = t("r:1[c:1]");
        let out = OP.arrow(&r, &t("s:1")).unwrap();
        assert_eq!(out.coefficient(&t("r:1[c:1,s:1]")), p("1"));
        assert_eq!(out.coefficient(&t("r:1[c:1[s:1]]")), p("L"));
        assert_eq!(out.len(), 2);

        let single = OP.arrow(&t("r:1"), &t("s:2")).unwrap();
        assert_eq!(single.to_string(), "1 * r:1[s:2]");
    }

    #[test]
    fn arrow_equals_gamma_of_ladder() {
        let tt = t("a:2[b:1]");
        let s = t("c:1[d:2]");
        let ladder = WeightedTree::node(None, tt.weight(), vec![WeightedTree::bullet(s.weight()).unwrap()]).unwrap();
        assert_eq!(OP.gamma(&ladder, &[tt.clone(), s.clone()]).unwrap(), OP.arrow(&tt, &s).unwrap());
    }

    #[test]
    fn gamma_of_unit() {
        let x = t("e:2[h:1]");
        assert_eq!(
            OP.gamma(&WeightedTree::bullet(3).unwrap(), &[x.clone()]).unwrap(),
            TreeCombination::basis(x)
        );
        assert!(matches!(OP.gamma(&t("_:1"), &[]), Err(Error::Arity { .. })));
    }

    #[test]
    fn butcher() {
        let out = butcher_product(&t("_:4"), &t("_:2")).unwrap();
        assert_eq!(out, t("_:4[_:2]"));
        assert_eq!(butcher_product(&t("a:1"), &t("a:1")), Err(Error::LabelClash("a".into())));
    }

    #[test]
    fn circ_sum_single_vertex() {
        let s = t("e:2[h:1]");
        assert_eq!(OP.circ_sum(&t("x:3"), &s).unwrap(), TreeCombination::basis(s.clone()));
        assert!(OP.circ_sum(&t("x:2"), &s).unwrap().is_zero());
    }

    #[test]
    fn positional_shift_convention() {
        // T = 1[2], S = 1[2]; T ∘_1 S relabels S to {1,2} and T's 2 to 3
        let tt = t("1:2[2:1]");
        let s = t("1:1[2:1]");
        let out = OP.compose_positional(&tt, 1, &s).unwrap();
        assert_eq!(out.coefficient(&t("1:1[2:1,3:1]")), p("1"));
        assert_eq!(out.coefficient(&t("1:1[2:1[3:1]]")), p("L"));
        assert!(OP.compose_positional(&tt, 3, &s).is_err());
    }

    #[test]
    fn faults_change_exponents() {
        let s = t("a:1[b:3[c:2,d:1]]");
        let tt = t("e:2[h:1]");
        let bad = Operad::with_fault(Fault::NonMinimalExponentPlusOne).compose_at(&s, "b", &tt).unwrap();
        assert_eq!(bad.coefficient(&t("a:1[e:2[h:1[c:2,d:1]]]")), p("L^4"));
        assert_eq!(bad.coefficient(&t("a:1[e:2[c:2,d:1,h:1]]")), p("1"));
        let all = Operad::with_fault(Fault::ExponentPlusOne).compose_at(&s, "b", &tt).unwrap();
        assert!(all.specialize(&Rational::zero()).is_zero());
    }
}
