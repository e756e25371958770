//! Weighted rooted trees.
//!
//! A [`WeightedTree`] is stored as a preorder array of vertices, each with a
//! positive weight, an arity and an optional label. Trees are either fully
//! labeled (labels pairwise distinct) or fully unlabeled, in which case they
//! stand for their isomorphism class.
//!
//! Child order carries no meaning. Equality, hashing and ordering all go
//! through the canonical form, in which the children of every vertex are
//! sorted by their canonical subtree encoding.

mod enumerate;
pub(crate) mod parse;

use std::borrow::Cow;
use std::cmp::Ordering;
use std::collections::{BTreeMap, BTreeSet, HashSet};
use std::fmt;
use std::hash::{DefaultHasher, Hash, Hasher};
use std::sync::Arc;

pub use enumerate::{enumerate_labeled_trees, enumerate_unlabeled_trees, rooted_parent_maps};
pub(crate) use enumerate::{labeled_trees_with_prefix, weight_assignments};

use crate::error::{Error, Result};

/// Vertex label. Any nonempty string over `[A-Za-z0-9_]` except `_`, which is
/// reserved for unlabeled vertices in the text grammar.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Label(Arc<str>);

impl Label {
    pub fn new(name: &str) -> Result<Label> {
        let valid = !name.is_empty()
            && name != "_"
            && name.chars().all(|c| c.is_ascii_alphanumeric() || c == '_');
        if valid {
            Ok(Label(Arc::from(name)))
        } else {
            Err(Error::InvalidLabel(name.to_string()))
        }
    }

    pub fn as_str(&self) -> &str {
        &self.0
    }
}

impl fmt::Debug for Label {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", &*self.0)
    }
}

impl fmt::Display for Label {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl From<usize> for Label {
    fn from(n: usize) -> Label {
        Label(Arc::from(n.to_string()))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum LabelMode {
    Labeled,
    Unlabeled,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub(crate) struct Node {
    pub(crate) weight: u64,
    pub(crate) arity: usize,
    pub(crate) label: Option<Label>,
}

/// Handle on one vertex of one tree.
///
/// A handle is tied to the exact vertex layout of the tree that issued it;
/// using it with a tree of a different layout yields [`Error::ForeignVertex`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct VertexRef {
    tree: u64,
    index: usize,
}

impl VertexRef {
    /// Position of the vertex in the tree's preorder listing.
    pub fn index(&self) -> usize {
        self.index
    }
}

/// An edge oriented from child to parent; it "arrives" at `parent`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Edge {
    pub child: VertexRef,
    pub parent: VertexRef,
}

#[derive(Clone)]
pub struct WeightedTree {
    nodes: Vec<Node>,
    parent: Vec<Option<usize>>,
    depth: Vec<usize>,
    end: Vec<usize>,
    canonical: bool,
    fingerprint: u64,
}

impl WeightedTree {
    /// Single vertex.
    pub fn vertex(label: Option<Label>, weight: u64) -> Result<WeightedTree> {
        WeightedTree::node(label, weight, Vec::new())
    }

    /// The unlabeled one-vertex tree of weight `n`, i.e. the unit component `•_n`.
    pub fn bullet(n: u64) -> Result<WeightedTree> {
        WeightedTree::vertex(None, n)
    }

    /// Root with the given branches, kept in the given order.
    pub fn node(
        label: Option<Label>,
        weight: u64,
        branches: Vec<WeightedTree>,
    ) -> Result<WeightedTree> {
        let mut nodes = vec![Node {
            weight,
            arity: branches.len(),
            label,
        }];
        for b in branches {
            nodes.extend(b.nodes);
        }
        validate(&nodes)?;
        Ok(WeightedTree::from_preorder(nodes))
    }

    /// Build from a parent map. `parents[i]` is the parent of vertex `i`; the
    /// root is the unique vertex without one. Children keep index order.
    pub fn from_parents(
        vertices: Vec<(Option<Label>, u64)>,
        parents: &[Option<usize>],
    ) -> Result<WeightedTree> {
        let nodes = preorder_from_parents(vertices, parents, false)?;
        validate(&nodes)?;
        Ok(WeightedTree::from_preorder(nodes))
    }

    /// Trusted constructor: `nodes` is a valid preorder listing.
    pub(crate) fn from_preorder(nodes: Vec<Node>) -> WeightedTree {
        let n = nodes.len();
        let mut parent = vec![None; n];
        let mut depth = vec![0; n];
        let mut end = vec![n; n];
        // (vertex, children still expected)
        let mut stack: Vec<(usize, usize)> = Vec::new();
        for i in 0..n {
            while let Some(&(top, 0)) = stack.last() {
                end[top] = i;
                stack.pop();
            }
            if let Some((top, remaining)) = stack.last_mut() {
                parent[i] = Some(*top);
                depth[i] = depth[*top] + 1;
                *remaining -= 1;
            }
            stack.push((i, nodes[i].arity));
        }
        debug_assert!(stack.iter().all(|&(_, r)| r == 0));
        let canonical = canonical_nodes(&nodes, &end, 0) == nodes;
        let mut hasher = DefaultHasher::new();
        nodes.hash(&mut hasher);
        WeightedTree {
            fingerprint: hasher.finish(),
            nodes,
            parent,
            depth,
            end,
            canonical,
        }
    }

    /// Trusted constructor from a parent map, producing the canonical layout.
    pub(crate) fn assemble_canonical(
        vertices: Vec<(Option<Label>, u64)>,
        parents: &[Option<usize>],
    ) -> WeightedTree {
        let nodes = preorder_from_parents(vertices, parents, true)
            .expect("internal parent map is a rooted tree");
        WeightedTree::from_preorder(nodes)
    }

    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn mode(&self) -> LabelMode {
        if self.nodes[0].label.is_some() {
            LabelMode::Labeled
        } else {
            LabelMode::Unlabeled
        }
    }

    pub fn is_canonical(&self) -> bool {
        self.canonical
    }

    /// The same tree with children sorted at every vertex. Idempotent.
    pub fn canonicalize(&self) -> WeightedTree {
        if self.canonical {
            self.clone()
        } else {
            WeightedTree::from_preorder(canonical_nodes(&self.nodes, &self.end, 0))
        }
    }

    fn canonical_view(&self) -> Cow<'_, [Node]> {
        if self.canonical {
            Cow::Borrowed(&self.nodes)
        } else {
            Cow::Owned(canonical_nodes(&self.nodes, &self.end, 0))
        }
    }

    /// `|T|`: sum of all vertex weights.
    pub fn weight(&self) -> u64 {
        self.nodes.iter().map(|n| n.weight).sum()
    }

    /// `d(T)`: sum over vertices of weight times height.
    pub fn potential_energy(&self) -> u64 {
        self.nodes
            .iter()
            .zip(&self.depth)
            .map(|(n, &h)| n.weight * h as u64)
            .sum()
    }

    pub fn root(&self) -> VertexRef {
        self.vref(0)
    }

    pub fn vertices(&self) -> impl Iterator<Item = VertexRef> + '_ {
        (0..self.len()).map(|i| self.vref(i))
    }

    pub fn vertex_by_label(&self, label: &str) -> Option<VertexRef> {
        self.index_of_label(label).map(|i| self.vref(i))
    }

    /// Like [`WeightedTree::vertex_by_label`] but failing with [`Error::UnknownLabel`].
    pub fn find(&self, label: &str) -> Result<VertexRef> {
        self.vertex_by_label(label)
            .ok_or_else(|| Error::UnknownLabel(label.to_string()))
    }

    pub fn label(&self, v: VertexRef) -> Result<Option<&Label>> {
        Ok(self.nodes[self.resolve(v)?].label.as_ref())
    }

    pub fn vertex_weight(&self, v: VertexRef) -> Result<u64> {
        Ok(self.nodes[self.resolve(v)?].weight)
    }

    /// Number of edges between `v` and the root.
    pub fn height(&self, v: VertexRef) -> Result<usize> {
        Ok(self.depth[self.resolve(v)?])
    }

    pub fn parent(&self, v: VertexRef) -> Result<Option<VertexRef>> {
        Ok(self.parent[self.resolve(v)?].map(|p| self.vref(p)))
    }

    pub fn children(&self, v: VertexRef) -> Result<Vec<VertexRef>> {
        let i = self.resolve(v)?;
        Ok(self.child_indices(i).map(|c| self.vref(c)).collect())
    }

    /// `E(T, v)`: one edge per direct child of `v`.
    pub fn incoming_edges(&self, v: VertexRef) -> Result<Vec<Edge>> {
        let i = self.resolve(v)?;
        Ok(self
            .child_indices(i)
            .map(|c| Edge {
                child: self.vref(c),
                parent: v,
            })
            .collect())
    }

    /// The full subtree rooted at `v`.
    pub fn subtree(&self, v: VertexRef) -> Result<WeightedTree> {
        Ok(self.subtree_at(self.resolve(v)?))
    }

    /// The branch `B_e` hanging from an edge.
    pub fn branch(&self, e: &Edge) -> Result<WeightedTree> {
        let c = self.resolve(e.child)?;
        if self.parent[c] != Some(self.resolve(e.parent)?) {
            return Err(Error::Invalid("edge child is not a child of its parent".into()));
        }
        Ok(self.subtree_at(c))
    }

    /// Root branches, in stored order.
    pub fn branches(&self) -> Vec<WeightedTree> {
        self.child_indices(0).map(|c| self.subtree_at(c)).collect()
    }

    pub fn root_label(&self) -> Option<&Label> {
        self.nodes[0].label.as_ref()
    }

    pub fn root_weight(&self) -> u64 {
        self.nodes[0].weight
    }

    pub fn labels(&self) -> impl Iterator<Item = &Label> + '_ {
        self.nodes.iter().filter_map(|n| n.label.as_ref())
    }

    /// Vertex weights in preorder.
    pub fn weights(&self) -> Vec<u64> {
        self.nodes.iter().map(|n| n.weight).collect()
    }

    /// Apply a permutation of the label set; weights travel with their labels.
    pub fn relabel(&self, sigma: &BTreeMap<Label, Label>) -> Result<WeightedTree> {
        if self.mode() == LabelMode::Unlabeled {
            return Err(Error::Unlabeled);
        }
        let own: BTreeSet<&Label> = self.labels().collect();
        let keys: BTreeSet<&Label> = sigma.keys().collect();
        let values: BTreeSet<&Label> = sigma.values().collect();
        if keys != own {
            return Err(Error::NotABijection("domain differs from the label set".into()));
        }
        if values != own {
            return Err(Error::NotABijection("image differs from the label set".into()));
        }
        self.rename(sigma)
    }

    /// Injective renaming of labels into arbitrary new labels. Labels missing
    /// from `map` are kept.
    pub fn rename(&self, map: &BTreeMap<Label, Label>) -> Result<WeightedTree> {
        let nodes: Vec<Node> = self
            .nodes
            .iter()
            .map(|n| Node {
                label: n
                    .label
                    .as_ref()
                    .map(|l| map.get(l).cloned().unwrap_or_else(|| l.clone())),
                ..n.clone()
            })
            .collect();
        validate(&nodes)?;
        Ok(WeightedTree::from_preorder(nodes))
    }

    /// Same shape with new weights, given in preorder.
    pub fn reweighted(&self, weights: &[u64]) -> Result<WeightedTree> {
        if weights.len() != self.len() {
            return Err(Error::Arity {
                expected: self.len(),
                found: weights.len(),
            });
        }
        let nodes: Vec<Node> = self
            .nodes
            .iter()
            .zip(weights)
            .map(|(n, &weight)| Node { weight, ..n.clone() })
            .collect();
        validate(&nodes)?;
        Ok(WeightedTree::from_preorder(nodes))
    }

    /// Drop all labels; the result stands for the isomorphism class.
    pub fn forget_labels(&self) -> WeightedTree {
        let nodes: Vec<Node> = self
            .nodes
            .iter()
            .map(|n| Node {
                label: None,
                ..n.clone()
            })
            .collect();
        WeightedTree::from_preorder(canonical_nodes(&nodes, &self.end, 0))
    }

    /// Give every vertex the label `{prefix}{k}`, `k` counting from 1 in preorder.
    pub fn with_labels(&self, prefix: &str) -> Result<WeightedTree> {
        let nodes: Vec<Node> = self
            .nodes
            .iter()
            .enumerate()
            .map(|(k, n)| {
                Label::new(&format!("{prefix}{}", k + 1)).map(|label| Node {
                    label: Some(label),
                    ..n.clone()
                })
            })
            .collect::<Result<_>>()?;
        Ok(WeightedTree::from_preorder(nodes))
    }

    // ---- crate-internal index API ----

    pub(crate) fn vref(&self, index: usize) -> VertexRef {
        VertexRef {
            tree: self.fingerprint,
            index,
        }
    }

    pub(crate) fn resolve(&self, v: VertexRef) -> Result<usize> {
        if v.tree == self.fingerprint && v.index < self.len() {
            Ok(v.index)
        } else {
            Err(Error::ForeignVertex)
        }
    }

    pub(crate) fn fingerprint(&self) -> u64 {
        self.fingerprint
    }

    pub(crate) fn depth_of(&self, i: usize) -> usize {
        self.depth[i]
    }

    pub(crate) fn weight_at(&self, i: usize) -> u64 {
        self.nodes[i].weight
    }

    pub(crate) fn label_at(&self, i: usize) -> Option<&Label> {
        self.nodes[i].label.as_ref()
    }

    pub(crate) fn subtree_weight(&self, i: usize) -> u64 {
        self.nodes[i..self.end[i]].iter().map(|n| n.weight).sum()
    }

    pub(crate) fn subtree_at(&self, i: usize) -> WeightedTree {
        WeightedTree::from_preorder(self.nodes[i..self.end[i]].to_vec())
    }

    pub(crate) fn child_indices(&self, i: usize) -> ChildIndices<'_> {
        ChildIndices {
            end: &self.end,
            next: i + 1,
            stop: self.end[i],
        }
    }

    pub(crate) fn index_of_label(&self, label: &str) -> Option<usize> {
        self.nodes
            .iter()
            .position(|n| n.label.as_ref().is_some_and(|l| l.as_str() == label))
    }

    /// Vertex list and parent map in preorder, for building derived trees.
    pub(crate) fn parent_arena(&self) -> (Vec<(Option<Label>, u64)>, Vec<Option<usize>>) {
        (
            self.nodes
                .iter()
                .map(|n| (n.label.clone(), n.weight))
                .collect(),
            self.parent.clone(),
        )
    }

    fn write_subtree(&self, i: usize, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let n = &self.nodes[i];
        match &n.label {
            Some(l) => write!(f, "{l}:{}", n.weight)?,
            None => write!(f, "_:{}", n.weight)?,
        }
        if n.arity > 0 {
            f.write_str("[")?;
            for (k, c) in self.child_indices(i).enumerate() {
                if k > 0 {
                    f.write_str(",")?;
                }
                self.write_subtree(c, f)?;
            }
            f.write_str("]")?;
        }
        Ok(())
    }
}

pub(crate) struct ChildIndices<'a> {
    end: &'a [usize],
    next: usize,
    stop: usize,
}

impl Iterator for ChildIndices<'_> {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        if self.next < self.stop {
            let c = self.next;
            self.next = self.end[c];
            Some(c)
        } else {
            None
        }
    }
}

fn canonical_nodes(nodes: &[Node], end: &[usize], i: usize) -> Vec<Node> {
    let mut kids: Vec<Vec<Node>> = Vec::with_capacity(nodes[i].arity);
    let mut c = i + 1;
    while c < end[i] {
        kids.push(canonical_nodes(nodes, end, c));
        c = end[c];
    }
    kids.sort();
    let mut out = Vec::with_capacity(end[i] - i);
    out.push(nodes[i].clone());
    for k in kids {
        out.extend(k);
    }
    out
}

fn preorder_from_parents(
    vertices: Vec<(Option<Label>, u64)>,
    parents: &[Option<usize>],
    canonical: bool,
) -> Result<Vec<Node>> {
    let n = vertices.len();
    if n == 0 {
        return Err(Error::EmptyTree);
    }
    if parents.len() != n {
        return Err(Error::Arity {
            expected: n,
            found: parents.len(),
        });
    }
    let mut kids = vec![Vec::new(); n];
    let mut root = None;
    for (i, p) in parents.iter().enumerate() {
        match *p {
            None if root.is_some() => return Err(Error::NotATree("more than one root".into())),
            None => root = Some(i),
            Some(p) if p >= n => {
                return Err(Error::NotATree(format!("parent index {p} out of range")))
            }
            Some(p) if p == i => return Err(Error::NotATree(format!("vertex {i} is its own parent"))),
            Some(p) => kids[p].push(i),
        }
    }
    let root = root.ok_or_else(|| Error::NotATree("no root".into()))?;

    fn emit(
        i: usize,
        kids: &[Vec<usize>],
        vertices: &[(Option<Label>, u64)],
        canonical: bool,
        seen: &mut usize,
    ) -> Vec<Node> {
        *seen += 1;
        let mut parts: Vec<Vec<Node>> = kids[i]
            .iter()
            .map(|&c| emit(c, kids, vertices, canonical, seen))
            .collect();
        if canonical {
            parts.sort();
        }
        let mut out = vec![Node {
            label: vertices[i].0.clone(),
            weight: vertices[i].1,
            arity: kids[i].len(),
        }];
        for p in parts {
            out.extend(p);
        }
        out
    }

    let mut seen = 0;
    let nodes = emit(root, &kids, &vertices, canonical, &mut seen);
    if seen != n {
        return Err(Error::NotATree("parent map contains a cycle".into()));
    }
    Ok(nodes)
}

fn validate(nodes: &[Node]) -> Result<()> {
    if nodes.is_empty() {
        return Err(Error::EmptyTree);
    }
    if nodes.iter().any(|n| n.weight == 0) {
        return Err(Error::ZeroWeight);
    }
    let labeled = nodes[0].label.is_some();
    if nodes.iter().any(|n| n.label.is_some() != labeled) {
        return Err(Error::MixedLabels);
    }
    if labeled {
        let mut seen = HashSet::with_capacity(nodes.len());
        for l in nodes.iter().filter_map(|n| n.label.as_ref()) {
            if !seen.insert(l) {
                return Err(Error::DuplicateLabel(l.to_string()));
            }
        }
    }
    Ok(())
}

impl PartialEq for WeightedTree {
    fn eq(&self, other: &Self) -> bool {
        if self.canonical && other.canonical {
            self.nodes == other.nodes
        } else {
            self.canonical_view() == other.canonical_view()
        }
    }
}

impl Eq for WeightedTree {}

impl Hash for WeightedTree {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.canonical_view().hash(state)
    }
}

impl PartialOrd for WeightedTree {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for WeightedTree {
    fn cmp(&self, other: &Self) -> Ordering {
        self.canonical_view().cmp(&other.canonical_view())
    }
}

impl fmt::Display for WeightedTree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.write_subtree(0, f)
    }
}

impl fmt::Debug for WeightedTree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "WeightedTree({self})")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn t(s: &str) -> WeightedTree {
        s.parse().unwrap()
    }

    #[test]
    fn weight_sums_vertices() {
        assert_eq!(t("a:5").weight(), 5);
        assert_eq!(t("a:2[b:1,c:3]").weight(), 6);
    }

    #[test]
    fn height_and_energy() {
        let s = t("a:1[b:3]");
        assert_eq!(s.height(s.root()).unwrap(), 0);
        assert_eq!(s.height(s.find("b").unwrap()).unwrap(), 1);
        assert_eq!(s.potential_energy(), 3);
        assert_eq!(t("x:7").potential_energy(), 0);

        let ladder = t("a:1[b:1[c:1[d:1[e:1]]]]");
        assert_eq!(ladder.height(ladder.find("e").unwrap()).unwrap(), 4);
    }

    #[test]
    fn incoming_edges_of_leaf_and_root() {
        let s = t("r:1[a:1,b:2,c:3[d:1]]");
        assert_eq!(s.incoming_edges(s.root()).unwrap().len(), 3);
        assert!(s.incoming_edges(s.find("d").unwrap()).unwrap().is_empty());
        let c = s.find("c").unwrap();
        let e = s.incoming_edges(c).unwrap()[0];
        assert_eq!(s.branch(&e).unwrap(), t("d:1"));
    }

    #[test]
    fn foreign_vertex_is_rejected() {
        let s = t("a:1[b:3]");
        let other = t("x:1[y:1,z:1]");
        let z = other.find("z").unwrap();
        assert_eq!(s.height(z), Err(Error::ForeignVertex));
        assert_eq!(s.incoming_edges(z), Err(Error::ForeignVertex));
    }

    #[test]
    fn canonical_form_ignores_child_order() {
        let a = t("a:1[b:3[c:2,d:1],e:1]");
        let b = t("a:1[e:1,b:3[d:1,c:2]]");
        assert_eq!(a, b);
        assert_eq!(a.canonicalize().to_string(), b.canonicalize().to_string());
        let c = a.canonicalize();
        assert!(c.is_canonical());
        assert_eq!(c.canonicalize().to_string(), c.to_string());
    }

    #[test]
    fn unlabeled_two_vertex_labelings_collapse() {
        let one = t("1:1[2:1]").forget_labels();
        let two = t("2:1[1:1]").forget_labels();
        assert_eq!(one, two);
        assert_eq!(one.to_string(), "_:1[_:1]");
    }

    #[test]
    fn constructors_enforce_invariants() {
        assert_eq!(WeightedTree::vertex(None, 0), Err(Error::ZeroWeight));
        assert_eq!(
            "a:1[a:1]".parse::<WeightedTree>(),
            Err(Error::DuplicateLabel("a".into()))
        );
        assert_eq!("a:1[_:1]".parse::<WeightedTree>(), Err(Error::MixedLabels));
        let cyc = WeightedTree::from_parents(
            vec![(None, 1), (None, 1), (None, 1)],
            &[None, Some(2), Some(1)],
        );
        assert!(matches!(cyc, Err(Error::NotATree(_))));
        let two_roots = WeightedTree::from_parents(vec![(None, 1), (None, 1)], &[None, None]);
        assert!(matches!(two_roots, Err(Error::NotATree(_))));
    }

    #[test]
    fn from_parents_matches_parse() {
        let labels = ["a", "b", "c", "d"].map(|s| Label::new(s).unwrap());
        let tree = WeightedTree::from_parents(
            vec![
                (Some(labels[0].clone()), 1),
                (Some(labels[1].clone()), 3),
                (Some(labels[2].clone()), 2),
                (Some(labels[3].clone()), 1),
            ],
            &[None, Some(0), Some(1), Some(1)],
        )
        .unwrap();
        assert_eq!(tree.to_string(), "a:1[b:3[c:2,d:1]]");
    }

    #[test]
    fn relabel_requires_a_permutation() {
        let s = t("a:1[b:2]");
        let l = |x: &str| Label::new(x).unwrap();
        let swap = BTreeMap::from([(l("a"), l("b")), (l("b"), l("a"))]);
        assert_eq!(s.relabel(&swap).unwrap(), t("b:1[a:2]"));
        let bad = BTreeMap::from([(l("a"), l("c")), (l("b"), l("a"))]);
        assert!(matches!(s.relabel(&bad), Err(Error::NotABijection(_))));
        let partial = BTreeMap::from([(l("a"), l("a"))]);
        assert!(matches!(s.relabel(&partial), Err(Error::NotABijection(_))));
    }

    #[test]
    fn invalid_labels() {
        assert!(Label::new("_").is_err());
        assert!(Label::new("").is_err());
        assert!(Label::new("a-b").is_err());
        assert!(Label::new("x_1").is_ok());
    }
}
