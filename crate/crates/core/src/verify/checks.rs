use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt;

use super::oracle::{self, Multiset, OracleTree};
use super::{run_check, CheckReport, Instance, Universe};
use crate::algebra::{LambdaPoly, Rational, TreeCombination};
use crate::error::{Error, Result};
use crate::operad::{compose_with_map, epsilon, Fault, GraftMap, Operad};
use crate::presentation::{phi_combination, psi, psi_with_order, relation_r, BranchOrder, Corolla};
use crate::trees::{Label, WeightedTree};

fn by_weight(trees: Vec<WeightedTree>) -> HashMap<u64, Vec<WeightedTree>> {
    let mut out: HashMap<u64, Vec<WeightedTree>> = HashMap::new();
    for t in trees {
        out.entry(t.weight()).or_default().push(t);
    }
    out
}

fn label_list(t: &WeightedTree) -> Vec<String> {
    t.labels().map(|l| l.to_string()).collect()
}

fn differ(lhs: &TreeCombination, rhs: &TreeCombination) -> Option<String> {
    (lhs != rhs).then(|| format!("lhs {lhs:?} != rhs {rhs:?}"))
}

fn as_labeled(u: &Universe) -> Universe {
    Universe::labeled(u.n_max, u.w_max)
}

fn as_unlabeled(u: &Universe) -> Universe {
    Universe::unlabeled(u.n_max, u.w_max)
}

/// `(S, v, T)` with `|T| = |v|`, `S` labeled `s…` and `T` labeled `t…`.
fn composable_pairs(u: &Universe) -> Vec<Instance> {
    let u = as_labeled(u);
    let ts = by_weight(u.trees("t"));
    let mut out = Vec::new();
    for s in u.trees("s") {
        for v in s.vertices() {
            let label = s.label(v).expect("own vertex").expect("labeled").to_string();
            let w = s.vertex_weight(v).expect("own vertex");
            for t in ts.get(&w).into_iter().flatten() {
                out.push(Instance::new(
                    vec![("S", s.clone()), ("T", t.clone())],
                    vec![("v", label.clone())],
                ));
            }
        }
    }
    out
}

fn single(t: &WeightedTree) -> TreeCombination {
    TreeCombination::basis(t.clone())
}

/// `(S ∘_v T) ∘_w U = S ∘_v (T ∘_w U)` for every `w ∈ v(T)`.
pub fn check_nested_associativity(op: &Operad, u: &Universe) -> CheckReport {
    let lu = as_labeled(u);
    let us = by_weight(lu.trees("u"));
    let mut instances = Vec::new();
    for pair in composable_pairs(u) {
        let t = pair.tree("T");
        for w in label_list(t) {
            let weight = t.vertex_weight(t.find(&w).expect("own label")).expect("own vertex");
            for x in us.get(&weight).into_iter().flatten() {
                let mut inst = pair.clone();
                inst.trees.push(("U", x.clone()));
                inst.slots.push(("w", w.clone()));
                instances.push(inst);
            }
        }
    }
    run_check("nested associativity", lu.to_string(), instances, |i| {
        let (s, t, x) = (i.tree("S"), i.tree("T"), i.tree("U"));
        let (v, w) = (i.slot("v"), i.slot("w"));
        let lhs = op.compose_combinations(&op.compose_at(s, v, t)?, w, &single(x))?;
        let rhs = op.compose_combinations(&single(s), v, &op.compose_at(t, w, x)?)?;
        Ok(differ(&lhs, &rhs))
    })
}

/// `(S ∘_v T) ∘_w U = (S ∘_w U) ∘_v T` for distinct `v, w ∈ v(S)`.
pub fn check_disjoint_associativity(op: &Operad, u: &Universe) -> CheckReport {
    let lu = as_labeled(u);
    let ts = by_weight(lu.trees("t"));
    let us = by_weight(lu.trees("u"));
    let mut instances = Vec::new();
    for s in lu.trees("s") {
        for v in label_list(&s) {
            for w in label_list(&s) {
                if v == w {
                    continue;
                }
                let wv = s.vertex_weight(s.find(&v).expect("own")).expect("own");
                let ww = s.vertex_weight(s.find(&w).expect("own")).expect("own");
                for t in ts.get(&wv).into_iter().flatten() {
                    for x in us.get(&ww).into_iter().flatten() {
                        instances.push(Instance::new(
                            vec![("S", s.clone()), ("T", t.clone()), ("U", x.clone())],
                            vec![("v", v.clone()), ("w", w.clone())],
                        ));
                    }
                }
            }
        }
    }
    run_check("disjoint associativity", lu.to_string(), instances, |i| {
        let (s, t, x) = (i.tree("S"), i.tree("T"), i.tree("U"));
        let (v, w) = (i.slot("v"), i.slot("w"));
        let lhs = op.compose_combinations(&op.compose_at(s, v, t)?, w, &single(x))?;
        let rhs = op.compose_combinations(&op.compose_at(s, w, x)?, v, &single(t))?;
        Ok(differ(&lhs, &rhs))
    })
}

/// `•_{|T|} ∘ T = T`, `•_n ∘ T = 0` for `n ≠ |T|`, and `S ∘_v •_{|v|} = S`.
pub fn check_units(op: &Operad, u: &Universe) -> CheckReport {
    let lu = as_labeled(u);
    let mut instances: Vec<Instance> = lu
        .trees("t")
        .into_iter()
        .map(|t| Instance::new(vec![("T", t)], vec![]))
        .collect();
    for s in lu.trees("s") {
        for v in label_list(&s) {
            instances.push(Instance::new(vec![("S", s.clone())], vec![("v", v)]));
        }
    }
    run_check("unit laws", lu.to_string(), instances, |i| {
        if i.has_slot("v") {
            let s = i.tree("S");
            let out = op.compose_unit_right(s, s.find(i.slot("v"))?)?;
            return Ok(differ(&out, &single(s)));
        }
        let t = i.tree("T");
        let out = op.compose_unit_left(t.weight(), t)?;
        if let Some(d) = differ(&out, &single(t)) {
            return Ok(Some(d));
        }
        let off = op.compose_unit_left(t.weight() + 1, t)?;
        Ok((!off.is_zero()).then(|| format!("mismatched unit gives {off:?}")))
    })
}

pub(crate) fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for k in 0..n {
            let mut q = p.clone();
            q.insert(k, n - 1);
            out.push(q);
        }
    }
    out
}

fn label_permutations(t: &WeightedTree) -> Vec<BTreeMap<Label, Label>> {
    let labels: Vec<Label> = t.labels().cloned().collect();
    permutations(labels.len())
        .into_iter()
        .map(|p| labels.iter().cloned().zip(p.iter().map(|&k| labels[k].clone())).collect())
        .collect()
}

fn rename_combination(c: &TreeCombination, map: &BTreeMap<Label, Label>) -> Result<TreeCombination> {
    let mut out = TreeCombination::zero();
    for (t, p) in c.iter() {
        out.add_term(t.rename(map)?, p)?;
    }
    Ok(out)
}

/// `σS ∘_{σ(v)} τT` equals `S ∘_v T` with labels moved by `σ` and `τ`, for
/// every pair of label permutations.
pub fn check_equivariance(op: &Operad, u: &Universe) -> CheckReport {
    let lu = as_labeled(u);
    run_check("relabeling equivariance", lu.to_string(), composable_pairs(u), |i| {
        let (s, t, v) = (i.tree("S"), i.tree("T"), i.slot("v"));
        let base = op.compose_at(s, v, t)?;
        let vl = Label::new(v)?;
        for sigma in label_permutations(s) {
            let s2 = s.relabel(&sigma)?.canonicalize();
            for tau in label_permutations(t) {
                let t2 = t.relabel(&tau)?.canonicalize();
                let lhs = op.compose_at(&s2, sigma[&vl].as_str(), &t2)?;
                let mut induced: BTreeMap<Label, Label> =
                    sigma.iter().filter(|(k, _)| **k != vl).map(|(k, x)| (k.clone(), x.clone())).collect();
                induced.extend(tau.iter().map(|(k, x)| (k.clone(), x.clone())));
                let rhs = rename_combination(&base, &induced)?;
                if let Some(d) = differ(&lhs, &rhs) {
                    return Ok(Some(format!("sigma {sigma:?}, tau {tau:?}: {d}")));
                }
            }
        }
        Ok(None)
    })
}

/// For every graft map: `d(S∘^f T) − d(S∘^{f₀} T) = Σ_e h_T(f(e))·|B_e| ≥ 0`,
/// zero exactly for `f₀` once `T` has an edge and `v` has children, and the
/// composition equals `Σ_f λ^{ε(f)} S∘^f T`.
pub fn check_epsilon_formula(op: &Operad, u: &Universe) -> CheckReport {
    let lu = as_labeled(u);
    run_check("epsilon formula", lu.to_string(), composable_pairs(u), |i| {
        let (s, t) = (i.tree("S"), i.tree("T"));
        let v = s.find(i.slot("v"))?;
        let maps = GraftMap::all(s, v, t)?;
        let base = compose_with_map(s, v, t, &maps[0])?.potential_energy() as i64;
        let mut expected = TreeCombination::zero();
        for f in &maps {
            let tree = compose_with_map(s, v, t, f)?;
            let diff = tree.potential_energy() as i64 - base;
            let eps = epsilon(s, v, t, f)?;
            if diff != eps as i64 || diff < 0 {
                return Ok(Some(format!("{tree}: energy difference {diff}, formula {eps}")));
            }
            if t.len() >= 2 && !f.is_empty() && (eps == 0) != f.is_minimal() {
                return Ok(Some(format!("{tree}: exponent {eps} for a map that is minimal: {}", f.is_minimal())));
            }
            expected.add_term(tree, &LambdaPoly::lambda_pow(eps as u32))?;
        }
        Ok(differ(&op.compose_lambda(s, v, t)?, &expected))
    })
}

/// Integer multiplicities of a combination with constant integer coefficients.
fn to_multiset(c: &TreeCombination) -> Result<Multiset> {
    let mut out = Multiset::new();
    for (t, p) in c.iter() {
        let r = p.coeff(0);
        let exact = p.degree() == Some(0) && r.denom() == &1.into();
        let n = r.to_i64_pair().filter(|_| exact).map(|(n, _)| n);
        let Some(n) = n else {
            return Err(Error::Invalid(format!("coefficient {p} of {t} is not an integer")));
        };
        *out.entry(OracleTree::from_tree(t).encode()).or_insert(0) += n;
    }
    out.retain(|_, c| *c != 0);
    Ok(out)
}

fn multiset_differ(lib: &Multiset, reference: &Multiset) -> Option<String> {
    (lib != reference).then(|| format!("library {lib:?} != oracle {reference:?}"))
}

/// At `λ = 0` composition is the single NAP term; at `λ = 1` with unit
/// weights (the slot weighted `#v(T)`) it is the pre-Lie sum over all graft
/// maps. Both are compared with the oracle as multisets.
pub fn check_specializations(op: &Operad, u: &Universe) -> CheckReport {
    let mut instances: Vec<Instance> = composable_pairs(u)
        .into_iter()
        .map(|mut i| {
            i.slots.push(("lambda", "0".into()));
            i
        })
        .collect();
    let lu = as_labeled(u);
    let shapes_t = lu.unit_weight_trees("t");
    for s in lu.unit_weight_trees("s") {
        for v in s.vertices() {
            let label = s.label(v).expect("own").expect("labeled").to_string();
            for t in &shapes_t {
                let mut w = s.weights();
                w[v.index()] = t.len() as u64;
                let s2 = s.reweighted(&w).expect("positive weights");
                instances.push(Instance::new(
                    vec![("S", s2), ("T", t.clone())],
                    vec![("v", label.clone()), ("lambda", "1".into())],
                ));
            }
        }
    }
    run_check("specializations", lu.to_string(), instances, |i| {
        let (s, t, v) = (i.tree("S"), i.tree("T"), i.slot("v"));
        let os = OracleTree::from_tree(s);
        let ot = OracleTree::from_tree(t);
        let slot = os.index_of(v);
        let mut reference = Multiset::new();
        let lambda = if i.slot("lambda") == "0" {
            oracle::multiset([&oracle::nap_compose(&os, slot, &ot)], 1, &mut reference);
            Rational::zero()
        } else {
            oracle::multiset(&oracle::prelie_compose(&os, slot, &ot), 1, &mut reference);
            Rational::one()
        };
        let lib = to_multiset(&op.compose_at(s, v, t)?.specialize(&lambda))?;
        Ok(multiset_differ(&lib, &reference))
    })
}

fn deformed_sides(
    op: &Operad,
    s: &WeightedTree,
    t: &WeightedTree,
    x: &WeightedTree,
) -> Result<(TreeCombination, TreeCombination)> {
    let side = |a: &WeightedTree, b: &WeightedTree| -> Result<TreeCombination> {
        let first = op.arrow_combinations(&op.arrow(x, a)?, &single(b))?;
        let second = op.arrow_combinations(&single(x), &op.arrow(a, b)?)?;
        let w = u32::try_from(b.weight()).map_err(|_| Error::Invalid("weight too large".into()))?;
        let mut out = first;
        out.add_scaled(&second, &LambdaPoly::monomial(Rational::integer(-1), w))?;
        Ok(out)
    };
    Ok((side(t, s)?, side(s, t)?))
}

/// `(U←T)←S − λ^{|S|} U←(T←S) = (U←S)←T − λ^{|T|} U←(S←T)` symbolically on
/// unlabeled triples, and at `λ = 1` with unit weights against the classical
/// grafting oracle.
pub fn check_deformed_identity(op: &Operad, u: &Universe) -> CheckReport {
    let uu = as_unlabeled(u);
    let trees = uu.trees("");
    let shapes = uu.unit_weight_trees("");
    let mut instances = Vec::new();
    for (pool, tag) in [(&trees, "symbolic"), (&shapes, "oracle")] {
        for s in pool {
            for t in pool {
                for x in pool {
                    instances.push(Instance::new(
                        vec![("S", s.clone()), ("T", t.clone()), ("U", x.clone())],
                        vec![("mode", tag.into())],
                    ));
                }
            }
        }
    }
    run_check("deformed identity", uu.to_string(), instances, |i| {
        let (s, t, x) = (i.tree("S"), i.tree("T"), i.tree("U"));
        let (lhs, rhs) = deformed_sides(op, s, t, x)?;
        if let Some(d) = differ(&lhs, &rhs) {
            return Ok(Some(d));
        }
        if i.slot("mode") != "oracle" || [s, t, x].iter().any(|y| y.weights().iter().any(|&w| w != 1)) {
            return Ok(None);
        }
        let (os, ot, ox) = (OracleTree::from_tree(s), OracleTree::from_tree(t), OracleTree::from_tree(x));
        let classical = |a: &OracleTree, b: &OracleTree| -> Multiset {
            let mut m = Multiset::new();
            for y in oracle::graft_sum(&ox, a) {
                oracle::multiset(&oracle::graft_sum(&y, b), 1, &mut m);
            }
            for y in oracle::graft_sum(a, b) {
                oracle::multiset(&oracle::graft_sum(&ox, &y), -1, &mut m);
            }
            m
        };
        let reference = classical(&ot, &os);
        if reference != classical(&os, &ot) {
            return Ok(Some("oracle violates the right pre-Lie identity".into()));
        }
        Ok(multiset_differ(&to_multiset(&lhs.specialize(&Rational::one()))?, &reference))
    })
}

/// `(T←S)⊲U = (T⊲U)←S + T←(S⊲U)` at `λ = 1` and
/// `(T↙S)⊙U = (T⊙U)↙S + T↙(S⊙U)` at `λ = 0`, where `⊲` and `⊙` are the
/// vertex sums of the specialized composition.
pub fn check_derivation_relations(op: &Operad, u: &Universe) -> CheckReport {
    let uu = as_unlabeled(u);
    let trees = uu.trees("");
    let mut instances = Vec::new();
    for lambda in ["0", "1"] {
        for t in &trees {
            for s in &trees {
                for x in &trees {
                    instances.push(Instance::new(
                        vec![("T", t.clone()), ("S", s.clone()), ("U", x.clone())],
                        vec![("lambda", lambda.into())],
                    ));
                }
            }
        }
    }
    run_check("derivation relations", uu.to_string(), instances, |i| {
        let (t, s, x) = (i.tree("T"), i.tree("S"), i.tree("U"));
        let lambda = if i.slot("lambda") == "0" { Rational::zero() } else { Rational::one() };
        let lhs = op.circ_sum_combinations(&op.arrow(t, s)?, &single(x))?;
        let mut rhs = op.arrow_combinations(&op.circ_sum(t, x)?, &single(s))?;
        rhs.add_scaled(&op.arrow_combinations(&single(t), &op.circ_sum(s, x)?)?, &LambdaPoly::one())?;
        Ok(differ(&lhs.specialize(&lambda), &rhs.specialize(&lambda)))
    })
}

/// `φ(ψ(T)) = 1·T` for the canonical and the reversed branch order, and for
/// every permutation of the root branches.
pub fn check_roundtrip_psi_phi(op: &Operad, u: &Universe) -> CheckReport {
    let instances = u
        .trees("x")
        .into_iter()
        .map(|t| Instance::new(vec![("T", t)], vec![]))
        .collect();
    run_check("psi/phi round trip", u.to_string(), instances, |i| {
        let t = i.tree("T");
        let expected = single(t);
        let back = phi_combination(op, &psi(op, t)?)?;
        if let Some(d) = differ(&back, &expected) {
            return Ok(Some(format!("canonical order: {d}")));
        }
        let rev = phi_combination(op, &psi_with_order(op, t, &BranchOrder::Reversed)?)?;
        if let Some(d) = differ(&rev, &expected) {
            return Ok(Some(format!("reversed order: {d}")));
        }
        let p = Corolla::decompose(&t.canonicalize()).branches.len();
        if p < 2 {
            return Ok(None);
        }
        for perm in permutations(p) {
            let out = phi_combination(op, &psi_with_order(op, t, &BranchOrder::Root(perm.clone()))?)?;
            if let Some(d) = differ(&out, &expected) {
                return Ok(Some(format!("root order {perm:?}: {d}")));
            }
        }
        Ok(None)
    })
}

/// `φ(r) = 0` for every weight triple in `[1, w_max]³`.
pub fn check_relation_vanishing(op: &Operad, u: &Universe) -> CheckReport {
    let mut instances = Vec::new();
    for k in 1..=u.w_max {
        for l in 1..=u.w_max {
            for m in 1..=u.w_max {
                let g = |name: &str, w: u64| WeightedTree::vertex(Some(Label::new(name).expect("valid")), w).expect("positive");
                instances.push(Instance::new(vec![("x", g("x", k)), ("y", g("y", l)), ("z", g("z", m))], vec![]));
            }
        }
    }
    run_check("relation vanishes under phi", format!("weights <= {}", u.w_max), instances, |i| {
        let (k, l, m) = (i.tree("x").weight(), i.tree("y").weight(), i.tree("z").weight());
        let r = relation_r(k, l, m, "x", "y", "z")?;
        let image = phi_combination(op, &r)?;
        Ok((!image.is_zero()).then(|| format!("phi(r) = {image:?}")))
    })
}

/// `i(S ∘_v T) = i(S) ∘_{v,1} i(T)` and `j(S ∘_{NAP,v} T) = j(S) ∘_{0,v} j(T)`
/// up to total weight `w_max`, for all unweighted `S, T` with at most `n_max`
/// vertices.
pub fn check_morphisms_i_j(op: &Operad, u: &Universe) -> CheckReport {
    let lu = as_labeled(u);
    let ts = lu.unit_weight_trees("t");
    let mut instances = Vec::new();
    for s in lu.unit_weight_trees("s") {
        for v in label_list(&s) {
            for t in &ts {
                instances.push(Instance::new(vec![("S", s.clone()), ("T", t.clone())], vec![("v", v.clone())]));
            }
        }
    }
    let universe = format!("labeled shapes, <= {} vertices, total weight <= {}", u.n_max, u.w_max);
    run_check("morphisms i and j", universe, instances, |i| {
        let (s, t, v) = (i.tree("S"), i.tree("T"), i.slot("v"));
        if !op.morphism_i_check(s, v, t, u.w_max)? {
            return Ok(Some("i is not compatible with composition".into()));
        }
        if !op.morphism_j_check(s, v, t, u.w_max)? {
            return Ok(Some("j is not compatible with composition".into()));
        }
        Ok(None)
    })
}

/// Labeled enumeration gives `n^{n−1}` trees, exactly the ones found by brute
/// force over parent maps.
pub fn check_counts(u: &Universe) -> CheckReport {
    let instances = (1..=u.n_max)
        .map(|n| {
            let t = WeightedTree::vertex(None, n as u64).expect("positive");
            Instance::new(vec![("n", t)], vec![])
        })
        .collect();
    run_check("labeled tree counts", format!("n <= {}", u.n_max), instances, |i| {
        let n = i.tree("n").weight() as usize;
        let weights = vec![1; n];
        let lib: BTreeSet<String> = crate::trees::enumerate_labeled_trees(n, &weights)?
            .iter()
            .map(|t| OracleTree::from_tree(t).encode())
            .collect();
        let brute: BTreeSet<String> = oracle::brute_force_rooted_trees(n)
            .into_iter()
            .map(|parent| {
                OracleTree {
                    labels: (1..=n).map(|k| k.to_string()).collect(),
                    weights: weights.clone(),
                    parent,
                }
                .encode()
            })
            .collect();
        let cayley = n.pow(n as u32 - 1);
        if lib.len() != cayley || lib != brute {
            return Ok(Some(format!(
                "enumerated {}, brute force {}, expected {cayley}",
                lib.len(),
                brute.len()
            )));
        }
        Ok(None)
    })
}

/// Groups of checks selectable from the command line.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Suite {
    Assoc,
    Deform,
    Spec,
    Iso,
    Morph,
}

impl Suite {
    pub const ALL: [Suite; 5] = [Suite::Assoc, Suite::Deform, Suite::Spec, Suite::Iso, Suite::Morph];

    pub fn checks(self) -> Vec<Check> {
        use Check::*;
        match self {
            Suite::Assoc => vec![Nested, Disjoint, Units, Equivariance, Epsilon],
            Suite::Deform => vec![Deformed],
            Suite::Spec => vec![Specializations, Derivation, Counts],
            Suite::Iso => vec![RoundTrip, Relation],
            Suite::Morph => vec![Morphisms],
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Check {
    Nested,
    Disjoint,
    Units,
    Equivariance,
    Epsilon,
    Specializations,
    Deformed,
    Derivation,
    RoundTrip,
    Relation,
    Morphisms,
    Counts,
}

impl Check {
    pub const ALL: [Check; 12] = [
        Check::Nested,
        Check::Disjoint,
        Check::Units,
        Check::Equivariance,
        Check::Epsilon,
        Check::Specializations,
        Check::Deformed,
        Check::Derivation,
        Check::RoundTrip,
        Check::Relation,
        Check::Morphisms,
        Check::Counts,
    ];

    /// Bounds used when none are given. For [`Check::Morphisms`] `w_max` is
    /// the total-weight truncation.
    pub fn default_universe(self) -> Universe {
        match self {
            Check::Nested | Check::Disjoint | Check::Units | Check::Equivariance | Check::Epsilon => {
                Universe::labeled(3, 3)
            }
            Check::Specializations => Universe::labeled(4, 2),
            Check::Deformed | Check::Derivation => Universe::unlabeled(3, 2),
            Check::RoundTrip => Universe::unlabeled(5, 2),
            Check::Relation => Universe::unlabeled(1, 3),
            Check::Morphisms => Universe::labeled(3, 5),
            Check::Counts => Universe::labeled(6, 1),
        }
    }

    pub fn run(self, op: &Operad, u: &Universe) -> CheckReport {
        match self {
            Check::Nested => check_nested_associativity(op, u),
            Check::Disjoint => check_disjoint_associativity(op, u),
            Check::Units => check_units(op, u),
            Check::Equivariance => check_equivariance(op, u),
            Check::Epsilon => check_epsilon_formula(op, u),
            Check::Specializations => check_specializations(op, u),
            Check::Deformed => check_deformed_identity(op, u),
            Check::Derivation => check_derivation_relations(op, u),
            Check::RoundTrip => check_roundtrip_psi_phi(op, u),
            Check::Relation => check_relation_vanishing(op, u),
            Check::Morphisms => check_morphisms_i_j(op, u),
            Check::Counts => check_counts(u),
        }
    }

    /// The injected exponent bug this check is expected to catch. Counting
    /// does not involve composition and has none.
    pub fn sanity_fault(self) -> Option<Fault> {
        match self {
            Check::Nested | Check::Epsilon => Some(Fault::NonMinimalExponentPlusOne),
            Check::Disjoint => Some(Fault::SlotHeightInExponent),
            Check::Units | Check::Specializations | Check::Morphisms => Some(Fault::ExponentPlusOne),
            Check::Equivariance => Some(Fault::FirstEdgeExponentPlusOne),
            Check::Derivation => Some(Fault::NonMinimalExponentMinusOne),
            Check::Deformed | Check::RoundTrip | Check::Relation => Some(Fault::GraftExponentPlusOne),
            Check::Counts => None,
        }
    }
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match self {
            Check::Nested => "nested",
            Check::Disjoint => "disjoint",
            Check::Units => "units",
            Check::Equivariance => "equivariance",
            Check::Epsilon => "epsilon",
            Check::Specializations => "specializations",
            Check::Deformed => "deformed",
            Check::Derivation => "derivation",
            Check::RoundTrip => "roundtrip",
            Check::Relation => "relation",
            Check::Morphisms => "morphisms",
            Check::Counts => "counts",
        };
        f.write_str(name)
    }
}
