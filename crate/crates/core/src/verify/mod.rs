//! Exhaustive property suites over bounded universes of trees, with
//! independent brute-force oracles and counterexample shrinking.

mod checks;
pub mod oracle;

use std::fmt;
use std::time::Instant;

use rayon::prelude::*;
use serde::Serialize;

pub use checks::{
    check_counts, check_deformed_identity, check_derivation_relations,
    check_disjoint_associativity, check_epsilon_formula, check_equivariance,
    check_morphisms_i_j, check_nested_associativity, check_relation_vanishing,
    check_roundtrip_psi_phi, check_specializations, check_units, Check, Suite,
};

use crate::error::Result;
use crate::trees::{
    enumerate_unlabeled_trees, labeled_trees_with_prefix, weight_assignments, LabelMode,
    WeightedTree,
};

/// All trees with `1..=n_max` vertices and weights in `[1, w_max]`.
///
/// Labeled universes label vertex `k` as `{prefix}{k}`, so that trees drawn
/// with different prefixes never share a label. Unlabeled universes hold one
/// tree per isomorphism class.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Universe {
    pub n_max: usize,
    pub w_max: u64,
    pub mode: LabelMode,
}

impl Universe {
    pub fn labeled(n_max: usize, w_max: u64) -> Universe {
        Universe {
            n_max,
            w_max,
            mode: LabelMode::Labeled,
        }
    }

    pub fn unlabeled(n_max: usize, w_max: u64) -> Universe {
        Universe {
            n_max,
            w_max,
            mode: LabelMode::Unlabeled,
        }
    }

    pub fn trees(&self, prefix: &str) -> Vec<WeightedTree> {
        self.trees_with_weights(prefix, self.w_max)
    }

    /// The shapes of the universe with every weight equal to 1.
    pub fn unit_weight_trees(&self, prefix: &str) -> Vec<WeightedTree> {
        self.trees_with_weights(prefix, 1)
    }

    fn trees_with_weights(&self, prefix: &str, w_max: u64) -> Vec<WeightedTree> {
        let mut out = Vec::new();
        for n in 1..=self.n_max {
            match self.mode {
                LabelMode::Unlabeled => out.extend(enumerate_unlabeled_trees(n, w_max)),
                LabelMode::Labeled => {
                    for w in weight_assignments(n, w_max) {
                        out.extend(
                            labeled_trees_with_prefix(n, &w, prefix)
                                .expect("prefix labels are valid"),
                        );
                    }
                }
            }
        }
        out
    }
}

impl fmt::Display for Universe {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mode = match self.mode {
            LabelMode::Labeled => "labeled",
            LabelMode::Unlabeled => "unlabeled",
        };
        write!(f, "{mode}, <= {} vertices, weights <= {}", self.n_max, self.w_max)
    }
}

/// One test case: named trees plus named slot labels.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Instance {
    pub trees: Vec<(&'static str, WeightedTree)>,
    pub slots: Vec<(&'static str, String)>,
}

impl Instance {
    pub fn new(trees: Vec<(&'static str, WeightedTree)>, slots: Vec<(&'static str, String)>) -> Self {
        Instance { trees, slots }
    }

    pub fn tree(&self, name: &str) -> &WeightedTree {
        &self.trees.iter().find(|(n, _)| *n == name).expect("named tree").1
    }

    pub fn slot(&self, name: &str) -> &str {
        &self.slots.iter().find(|(n, _)| *n == name).expect("named slot").1
    }

    pub fn has_slot(&self, name: &str) -> bool {
        self.slots.iter().any(|(n, _)| *n == name)
    }

    /// Instances one step smaller: one leaf deleted or one weight decremented.
    fn shrink_candidates(&self) -> Vec<Instance> {
        let mut out = Vec::new();
        for (k, (_, t)) in self.trees.iter().enumerate() {
            let (vertices, parents) = t.parent_arena();
            for i in 0..vertices.len() {
                let is_leaf = !parents.contains(&Some(i));
                let is_slot = vertices[i]
                    .0
                    .as_ref()
                    .is_some_and(|l| self.slots.iter().any(|(_, s)| s == l.as_str()));
                if is_leaf && parents[i].is_some() && !is_slot {
                    let mut vs = vertices.clone();
                    vs.remove(i);
                    let ps: Vec<Option<usize>> = parents
                        .iter()
                        .enumerate()
                        .filter(|&(j, _)| j != i)
                        .map(|(_, p)| p.map(|p| if p > i { p - 1 } else { p }))
                        .collect();
                    if let Ok(smaller) = WeightedTree::from_parents(vs, &ps) {
                        out.push(self.replace(k, smaller.canonicalize()));
                    }
                }
                if vertices[i].1 > 1 {
                    let mut w = t.weights();
                    w[i] -= 1;
                    if let Ok(lighter) = t.reweighted(&w) {
                        out.push(self.replace(k, lighter.canonicalize()));
                    }
                }
            }
        }
        out
    }

    fn replace(&self, k: usize, t: WeightedTree) -> Instance {
        let mut out = self.clone();
        out.trees[k].1 = t;
        out
    }
}

impl fmt::Display for Instance {
    /// `S = a:1[b:2], T = c:2, v = b`
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .trees
            .iter()
            .map(|(n, t)| format!("{n} = {t}"))
            .chain(self.slots.iter().map(|(n, s)| format!("{n} = {s}")))
            .collect();
        f.write_str(&parts.join(", "))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Counterexample {
    /// The first failing instance found, in the tree grammar.
    pub instance: String,
    /// The same failure after shrinking.
    pub minimized: String,
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CheckReport {
    pub name: String,
    pub universe: String,
    pub instances: usize,
    pub failure_count: usize,
    /// At most [`MAX_COUNTEREXAMPLES`] failures with distinct minimized forms.
    pub failures: Vec<Counterexample>,
    pub elapsed_ms: u128,
}

pub const MAX_COUNTEREXAMPLES: usize = 3;

/// Failures shrunk while looking for distinct minimized counterexamples.
const SHRINK_BUDGET: usize = 20;

impl CheckReport {
    pub fn passed(&self) -> bool {
        self.failure_count == 0
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(self).expect("report serializes")
    }
}

impl fmt::Display for CheckReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let status = if self.passed() { "PASS" } else { "FAIL" };
        write!(
            f,
            "{status} {} ({}; {} instances, {} failures, {} ms)",
            self.name, self.universe, self.instances, self.failure_count, self.elapsed_ms
        )?;
        for c in &self.failures {
            write!(f, "\n  counterexample: {}", c.minimized)?;
            if c.minimized != c.instance {
                write!(f, "\n    shrunk from: {}", c.instance)?;
            }
            write!(f, "\n    {}", c.detail)?;
        }
        Ok(())
    }
}

/// Outcome of one instance: `Ok(None)` when the property holds, otherwise a
/// description of the discrepancy.
pub(crate) type Verdict = Result<Option<String>>;

pub(crate) fn run_check<P>(name: &str, universe: String, instances: Vec<Instance>, pred: P) -> CheckReport
where
    P: Fn(&Instance) -> Verdict + Sync,
{
    let start = Instant::now();
    let total = instances.len();
    let mut failures: Vec<(String, Instance, String)> = instances
        .into_par_iter()
        .filter_map(|inst| {
            let detail = match pred(&inst) {
                Ok(None) => return None,
                Ok(Some(d)) => d,
                Err(e) => format!("error: {e}"),
            };
            Some((inst.to_string(), inst, detail))
        })
        .collect();
    failures.sort_by(|a, b| a.0.cmp(&b.0));
    let failure_count = failures.len();
    let mut reported: Vec<Counterexample> = Vec::new();
    for (text, inst, detail) in failures.into_iter().take(SHRINK_BUDGET) {
        if reported.len() == MAX_COUNTEREXAMPLES {
            break;
        }
        let (small, small_detail) = shrink(inst, detail, &pred);
        let minimized = small.to_string();
        if reported.iter().all(|c| c.minimized != minimized) {
            reported.push(Counterexample {
                instance: text,
                minimized,
                detail: small_detail,
            });
        }
    }
    CheckReport {
        name: name.to_string(),
        universe,
        instances: total,
        failure_count,
        failures: reported,
        elapsed_ms: start.elapsed().as_millis(),
    }
}

/// Greedy shrinking; a candidate is kept only if the property still fails
/// on it without an error.
fn shrink<P>(mut inst: Instance, mut detail: String, pred: &P) -> (Instance, String)
where
    P: Fn(&Instance) -> Verdict,
{
    'outer: for _ in 0..256 {
        for cand in inst.shrink_candidates() {
            if let Ok(Some(d)) = pred(&cand) {
                inst = cand;
                detail = d;
                continue 'outer;
            }
        }
        break;
    }
    (inst, detail)
}
