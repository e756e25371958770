//! Brute-force reference implementations over a plain parent-array tree
//! type. Nothing here uses the composition engine; the only contact point is
//! [`OracleTree::from_tree`], which reads a tree's vertices and parents.

use std::collections::BTreeMap;

use crate::trees::WeightedTree;

/// Labels, weights and parent pointers; vertex order carries no meaning.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OracleTree {
    pub labels: Vec<String>,
    pub weights: Vec<u64>,
    pub parent: Vec<Option<usize>>,
}

impl OracleTree {
    pub fn from_tree(t: &WeightedTree) -> OracleTree {
        let (vertices, parent) = t.parent_arena();
        OracleTree {
            labels: vertices
                .iter()
                .map(|(l, _)| l.as_ref().map_or_else(|| "_".to_string(), |l| l.to_string()))
                .collect(),
            weights: vertices.iter().map(|&(_, w)| w).collect(),
            parent,
        }
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    fn root(&self) -> usize {
        self.parent.iter().position(Option::is_none).expect("rooted")
    }

    fn children(&self, v: usize) -> Vec<usize> {
        (0..self.len()).filter(|&c| self.parent[c] == Some(v)).collect()
    }

    pub fn index_of(&self, label: &str) -> usize {
        self.labels.iter().position(|l| l == label).expect("label present")
    }

    pub fn height(&self, mut v: usize) -> u64 {
        let mut h = 0;
        while let Some(p) = self.parent[v] {
            v = p;
            h += 1;
        }
        h
    }

    /// Isomorphism-invariant encoding: children sorted as strings.
    pub fn encode(&self) -> String {
        fn go(t: &OracleTree, v: usize) -> String {
            let mut kids: Vec<String> = t.children(v).into_iter().map(|c| go(t, c)).collect();
            kids.sort();
            let head = format!("{}:{}", t.labels[v], t.weights[v]);
            if kids.is_empty() {
                head
            } else {
                format!("{head}[{}]", kids.join(","))
            }
        }
        go(self, self.root())
    }

    /// Disjoint union with `other` appended, returning the index offset of `other`.
    fn append(&self, other: &OracleTree) -> (OracleTree, usize) {
        let off = self.len();
        let mut out = self.clone();
        out.labels.extend(other.labels.iter().cloned());
        out.weights.extend(other.weights.iter().copied());
        out.parent.extend(other.parent.iter().map(|p| p.map(|p| p + off)));
        (out, off)
    }

    /// Remove vertex `v`, which must have no children left.
    fn remove(&mut self, v: usize) {
        self.labels.remove(v);
        self.weights.remove(v);
        self.parent.remove(v);
        for p in self.parent.iter_mut().flatten() {
            if *p > v {
                *p -= 1;
            }
        }
    }
}

/// `Σ_f S ∘_v^f T`, one entry per map `f`.
pub fn prelie_compose(s: &OracleTree, v: usize, t: &OracleTree) -> Vec<OracleTree> {
    let kids = s.children(v);
    let m = t.len();
    let mut out = Vec::new();
    let total = m.pow(kids.len() as u32);
    for code in 0..total {
        let mut f = Vec::with_capacity(kids.len());
        let mut c = code;
        for _ in &kids {
            f.push(c % m);
            c /= m;
        }
        out.push(substitute(s, v, t, &kids, &f));
    }
    out
}

/// `S ∘_v^{f₀} T`.
pub fn nap_compose(s: &OracleTree, v: usize, t: &OracleTree) -> OracleTree {
    let kids = s.children(v);
    let root = t.root();
    substitute(s, v, t, &kids, &vec![root; kids.len()])
}

fn substitute(s: &OracleTree, v: usize, t: &OracleTree, kids: &[usize], f: &[usize]) -> OracleTree {
    let (mut u, off) = s.append(t);
    let t_root = off + t.root();
    u.parent[t_root] = s.parent[v];
    for (&k, &img) in kids.iter().zip(f) {
        u.parent[k] = Some(off + img);
    }
    u.remove(v);
    u
}

/// `T ←_v S`.
pub fn graft(t: &OracleTree, v: usize, s: &OracleTree) -> OracleTree {
    let (mut u, off) = t.append(s);
    u.parent[off + s.root()] = Some(v);
    u
}

/// Classical `T ← S = Σ_v T ←_v S` as an encoding multiset.
pub fn graft_sum(t: &OracleTree, s: &OracleTree) -> Vec<OracleTree> {
    (0..t.len()).map(|v| graft(t, v, s)).collect()
}

/// Multiset of encodings with integer multiplicities.
pub type Multiset = BTreeMap<String, i64>;

pub fn multiset<'a>(trees: impl IntoIterator<Item = &'a OracleTree>, sign: i64, into: &mut Multiset) {
    for t in trees {
        *into.entry(t.encode()).or_insert(0) += sign;
    }
    into.retain(|_, c| *c != 0);
}

/// Every parent map on `n` vertices with exactly one root and no cycle,
/// found by trying all `(n+1)^n` functions.
pub fn brute_force_rooted_trees(n: usize) -> Vec<Vec<Option<usize>>> {
    let mut out = Vec::new();
    let total = (n + 1).pow(n as u32);
    'next: for code in 0..total {
        let mut c = code;
        let mut parent = Vec::with_capacity(n);
        for _ in 0..n {
            let d = c % (n + 1);
            c /= n + 1;
            parent.push(if d == n { None } else { Some(d) });
        }
        if parent.iter().filter(|p| p.is_none()).count() != 1 {
            continue;
        }
        for start in 0..n {
            let mut v = start;
            for _ in 0..=n {
                match parent[v] {
                    None => break,
                    Some(p) => v = p,
                }
            }
            if parent[v].is_some() {
                continue 'next;
            }
        }
        out.push(parent);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn o(s: &str) -> OracleTree {
        OracleTree::from_tree(&s.parse().unwrap())
    }

    #[test]
    fn cayley_by_brute_force() {
        let counts: Vec<usize> = (1..=5).map(|n| brute_force_rooted_trees(n).len()).collect();
        assert_eq!(counts, vec![1, 2, 9, 64, 625]);
    }

    #[test]
    fn prelie_worked_instance() {
        let s = o("a:1[b:3[c:2,d:1]]");
        let t = o("e:2[h:1]");
        let out = prelie_compose(&s, s.index_of("b"), &t);
        let mut enc: Vec<String> = out.iter().map(OracleTree::encode).collect();
        enc.sort();
        assert_eq!(
            enc,
            vec![
                "a:1[e:2[c:2,d:1,h:1]]",
                "a:1[e:2[c:2,h:1[d:1]]]",
                "a:1[e:2[d:1,h:1[c:2]]]",
                "a:1[e:2[h:1[c:2,d:1]]]",
            ]
        );
        assert_eq!(nap_compose(&s, s.index_of("b"), &t).encode(), "a:1[e:2[c:2,d:1,h:1]]");
    }

    #[test]
    fn grafting() {
        let t = o("r:1[c:1]");
        let mut m = Multiset::new();
        multiset(&graft_sum(&t, &o("s:1")), 1, &mut m);
        assert_eq!(m.len(), 2);
        assert_eq!(m["r:1[c:1[s:1]]"], 1);
        assert_eq!(m["r:1[c:1,s:1]"], 1);
    }
}
