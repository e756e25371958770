//! Exhaustive enumeration of rooted trees via Prüfer sequences.

use std::collections::BTreeSet;

use super::{Label, WeightedTree};
use crate::error::{Error, Result};

/// Parent maps of all rooted trees on vertices `0..n`, one per tree.
///
/// Every unrooted labeled tree is decoded from its Prüfer sequence and then
/// rooted at each of its `n` vertices, giving `n^(n-1)` maps.
pub fn rooted_parent_maps(n: usize) -> Vec<Vec<Option<usize>>> {
    match n {
        0 => Vec::new(),
        1 => vec![vec![None]],
        _ => {
            let mut out = Vec::with_capacity(n.pow(n as u32 - 1));
            let mut seq = vec![0usize; n - 2];
            loop {
                let edges = prufer_decode(&seq, n);
                for root in 0..n {
                    out.push(orient(&edges, n, root));
                }
                // odometer over [0, n)^(n-2)
                let mut k = 0;
                loop {
                    if k == seq.len() {
                        return out;
                    }
                    seq[k] += 1;
                    if seq[k] < n {
                        break;
                    }
                    seq[k] = 0;
                    k += 1;
                }
            }
        }
    }
}

fn prufer_decode(seq: &[usize], n: usize) -> Vec<(usize, usize)> {
    let mut degree = vec![1usize; n];
    for &s in seq {
        degree[s] += 1;
    }
    let mut edges = Vec::with_capacity(n - 1);
    for &s in seq {
        let leaf = (0..n).find(|&v| degree[v] == 1).expect("a leaf always exists");
        edges.push((leaf, s));
        degree[leaf] -= 1;
        degree[s] -= 1;
    }
    let rest: Vec<usize> = (0..n).filter(|&v| degree[v] == 1).collect();
    edges.push((rest[0], rest[1]));
    edges
}

fn orient(edges: &[(usize, usize)], n: usize, root: usize) -> Vec<Option<usize>> {
    let mut adj = vec![Vec::new(); n];
    for &(a, b) in edges {
        adj[a].push(b);
        adj[b].push(a);
    }
    let mut parent = vec![None; n];
    let mut seen = vec![false; n];
    seen[root] = true;
    let mut stack = vec![root];
    while let Some(v) = stack.pop() {
        for &w in &adj[v] {
            if !seen[w] {
                seen[w] = true;
                parent[w] = Some(v);
                stack.push(w);
            }
        }
    }
    parent
}

/// All labeled rooted trees on labels `1..=n`, vertex `i` carrying `weights[i-1]`.
pub fn enumerate_labeled_trees(n: usize, weights: &[u64]) -> Result<Vec<WeightedTree>> {
    labeled_trees_with_prefix(n, weights, "")
}

pub(crate) fn labeled_trees_with_prefix(
    n: usize,
    weights: &[u64],
    prefix: &str,
) -> Result<Vec<WeightedTree>> {
    if n == 0 {
        return Err(Error::EmptyTree);
    }
    if weights.len() != n {
        return Err(Error::Arity {
            expected: n,
            found: weights.len(),
        });
    }
    if weights.contains(&0) {
        return Err(Error::ZeroWeight);
    }
    let labels: Vec<Label> = (1..=n)
        .map(|i| Label::new(&format!("{prefix}{i}")))
        .collect::<Result<_>>()?;
    let vertices: Vec<(Option<Label>, u64)> = labels
        .into_iter()
        .zip(weights)
        .map(|(l, &w)| (Some(l), w))
        .collect();
    Ok(rooted_parent_maps(n)
        .iter()
        .map(|parents| WeightedTree::assemble_canonical(vertices.clone(), parents))
        .collect())
}

/// Every vector in `[1, max_weight]^n`, lexicographically.
pub(crate) fn weight_assignments(n: usize, max_weight: u64) -> Vec<Vec<u64>> {
    let mut out = Vec::new();
    if max_weight == 0 {
        return out;
    }
    let mut w = vec![1u64; n];
    loop {
        out.push(w.clone());
        let mut k = n;
        loop {
            if k == 0 {
                return out;
            }
            k -= 1;
            if w[k] < max_weight {
                w[k] += 1;
                for x in &mut w[k + 1..] {
                    *x = 1;
                }
                break;
            }
        }
    }
}

/// Unlabeled trees with exactly `n` vertices and weights in `[1, max_weight]`,
/// one per isomorphism class, in canonical order.
pub fn enumerate_unlabeled_trees(n: usize, max_weight: u64) -> Vec<WeightedTree> {
    let mut classes = BTreeSet::new();
    for parents in rooted_parent_maps(n) {
        for w in weight_assignments(n, max_weight) {
            let vertices = w.into_iter().map(|w| (None, w)).collect();
            classes.insert(WeightedTree::assemble_canonical(vertices, &parents));
        }
    }
    classes.into_iter().collect()
}
