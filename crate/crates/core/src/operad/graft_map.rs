use crate::error::{Error, Result};
use crate::trees::{VertexRef, WeightedTree};

/// Assignment of the incoming edges of a vertex `v` of `S` to vertices of `T`.
///
/// Edges are identified with the child they come from, in the stored child
/// order of `v`. A map is bound to the exact pair of trees it was built for.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct GraftMap {
    source: u64,
    slot: usize,
    target: u64,
    images: Vec<usize>,
}

impl GraftMap {
    /// `f₀`: every edge goes to the root of `T`.
    pub fn minimal(s: &WeightedTree, v: VertexRef, t: &WeightedTree) -> Result<GraftMap> {
        let slot = s.resolve(v)?;
        let k = s.child_indices(slot).count();
        Ok(GraftMap::raw(s, slot, t, vec![0; k]))
    }

    /// All `|v(T)|^|E(S,v)|` maps, starting with `f₀`.
    pub fn all(s: &WeightedTree, v: VertexRef, t: &WeightedTree) -> Result<Vec<GraftMap>> {
        let slot = s.resolve(v)?;
        let k = s.child_indices(slot).count();
        Ok(all_images(k, t.len())
            .into_iter()
            .map(|images| GraftMap::raw(s, slot, t, images))
            .collect())
    }

    /// Build from `(child of v in S, vertex of T)` pairs; every edge arriving
    /// at `v` must be assigned exactly once.
    pub fn from_pairs(
        s: &WeightedTree,
        v: VertexRef,
        t: &WeightedTree,
        pairs: &[(VertexRef, VertexRef)],
    ) -> Result<GraftMap> {
        let slot = s.resolve(v)?;
        let kids: Vec<usize> = s.child_indices(slot).collect();
        let mut images = vec![None; kids.len()];
        for &(child, image) in pairs {
            let c = s.resolve(child)?;
            let k = kids.iter().position(|&x| x == c).ok_or(Error::GraftMapDomain)?;
            if images[k].is_some() {
                return Err(Error::GraftMapDomain);
            }
            images[k] = Some(t.resolve(image)?);
        }
        let images = images
            .into_iter()
            .collect::<Option<Vec<_>>>()
            .ok_or(Error::GraftMapDomain)?;
        Ok(GraftMap::raw(s, slot, t, images))
    }

    /// Same as [`GraftMap::from_pairs`] with vertices named by label.
    pub fn from_labels(
        s: &WeightedTree,
        v: &str,
        t: &WeightedTree,
        pairs: &[(&str, &str)],
    ) -> Result<GraftMap> {
        let refs = pairs
            .iter()
            .map(|&(c, x)| Ok((s.find(c)?, t.find(x)?)))
            .collect::<Result<Vec<_>>>()?;
        GraftMap::from_pairs(s, s.find(v)?, t, &refs)
    }

    pub(crate) fn raw(s: &WeightedTree, slot: usize, t: &WeightedTree, images: Vec<usize>) -> Self {
        GraftMap {
            source: s.fingerprint(),
            slot,
            target: t.fingerprint(),
            images,
        }
    }

    pub(crate) fn check(&self, s: &WeightedTree, slot: usize, t: &WeightedTree) -> Result<()> {
        let k = s.child_indices(slot).count();
        if self.source != s.fingerprint()
            || self.slot != slot
            || self.target != t.fingerprint()
            || self.images.len() != k
        {
            return Err(Error::GraftMapDomain);
        }
        Ok(())
    }

    pub(crate) fn images(&self) -> &[usize] {
        &self.images
    }

    pub fn is_minimal(&self) -> bool {
        self.images.iter().all(|&i| i == 0)
    }

    /// Number of edges in the domain.
    pub fn len(&self) -> usize {
        self.images.len()
    }

    pub fn is_empty(&self) -> bool {
        self.images.is_empty()
    }
}

/// Every vector in `[0, m)^k`, lexicographically.
pub(crate) fn all_images(k: usize, m: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::with_capacity(m.pow(k as u32));
    let mut cur = vec![0; k];
    loop {
        out.push(cur.clone());
        let mut i = k;
        loop {
            if i == 0 {
                return out;
            }
            i -= 1;
            cur[i] += 1;
            if cur[i] < m {
                break;
            }
            cur[i] = 0;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn counts_and_minimal_first() {
        let s: WeightedTree = "a:1[b:3[c:2,d:1]]".parse().unwrap();
        let t: WeightedTree = "e:2[h:1]".parse().unwrap();
        let maps = GraftMap::all(&s, s.find("b").unwrap(), &t).unwrap();
        assert_eq!(maps.len(), 4);
        assert!(maps[0].is_minimal());
        assert_eq!(maps.iter().filter(|m| m.is_minimal()).count(), 1);
        let leaf = GraftMap::all(&s, s.find("c").unwrap(), &t).unwrap();
        assert_eq!(leaf.len(), 1);
        assert!(leaf[0].is_empty());
    }

    #[test]
    fn from_labels_validates_domain() {
        let s: WeightedTree = "a:1[b:3[c:2,d:1]]".parse().unwrap();
        let t: WeightedTree = "e:2[h:1]".parse().unwrap();
        assert!(GraftMap::from_labels(&s, "b", &t, &[("c", "h"), ("d", "e")]).is_ok());
        assert_eq!(
            GraftMap::from_labels(&s, "b", &t, &[("c", "h")]),
            Err(Error::GraftMapDomain)
        );
        assert_eq!(
            GraftMap::from_labels(&s, "b", &t, &[("c", "h"), ("a", "e")]),
            Err(Error::GraftMapDomain)
        );
        assert_eq!(
            GraftMap::from_labels(&s, "b", &t, &[("c", "h"), ("c", "e")]),
            Err(Error::GraftMapDomain)
        );
    }

    #[test]
    fn odometer() {
        assert_eq!(all_images(0, 5), vec![Vec::<usize>::new()]);
        assert_eq!(all_images(2, 2), vec![vec![0, 0], vec![0, 1], vec![1, 0], vec![1, 1]]);
        assert_eq!(all_images(3, 4).len(), 64);
    }
}
