//! r-uniform hypergraphs on at most 128 vertices, edges stored as a bit array
//! indexed by colex rank.

use serde::{Deserialize, Serialize};

use crate::colex::{binom, rank, rank_set, subsets_of, unrank, KSubsets};
use crate::error::{Error, Result};
use crate::vertex_set::{VertexSet, MAX_VERTICES};

/// Upper limit on `C(n, r)` for a stored edge array.
pub const MAX_EDGE_SLOTS: u64 = 1 << 26;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct UniformHypergraph {
    n: usize,
    r: usize,
    bits: Vec<u64>,
}

pub(crate) fn check_dims(n: usize, r: usize) -> Result<usize> {
    if n == 0 {
        return Err(Error::InvalidArgument("vertex count must be at least 1".into()));
    }
    if r < 2 {
        return Err(Error::InvalidArgument(format!("rank r={r} must be at least 2")));
    }
    if n > MAX_VERTICES {
        return Err(Error::SizeLimit(format!("n={n} exceeds {MAX_VERTICES} vertices")));
    }
    let slots = binom(n, r);
    if slots > MAX_EDGE_SLOTS {
        return Err(Error::SizeLimit(format!("C({n},{r}) = {slots} edge slots is too many")));
    }
    Ok(slots as usize)
}

impl UniformHypergraph {
    /// The edgeless hypergraph.
    pub fn empty(n: usize, r: usize) -> Result<Self> {
        let slots = check_dims(n, r)?;
        Ok(UniformHypergraph {
            n,
            r,
            bits: vec![0; slots.div_ceil(64)],
        })
    }

    /// `K_n^r`.
    pub fn complete(n: usize, r: usize) -> Result<Self> {
        Ok(Self::empty(n, r)?.complement())
    }

    /// Builds from explicit edges; rejects malformed or repeated edges.
    pub fn from_edges<E: AsRef<[usize]>>(n: usize, r: usize, edges: &[E]) -> Result<Self> {
        let mut h = Self::empty(n, r)?;
        for e in edges {
            let e = e.as_ref();
            let idx = edge_rank_checked(n, r, e)?;
            if h.has_rank(idx) {
                return Err(Error::Malformed(format!("duplicate edge {e:?}")));
            }
            h.set_rank(idx, true);
        }
        Ok(h)
    }

    /// Builds from a predicate evaluated on every ascending r-subset.
    pub fn from_fn(n: usize, r: usize, mut f: impl FnMut(&[usize]) -> bool) -> Result<Self> {
        let mut h = Self::empty(n, r)?;
        for (idx, e) in KSubsets::new(n, r).enumerate() {
            if f(&e) {
                h.set_rank(idx, true);
            }
        }
        Ok(h)
    }

    pub(crate) fn from_bits(n: usize, r: usize, bits: Vec<u64>) -> Self {
        UniformHypergraph { n, r, bits }
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn r(&self) -> usize {
        self.r
    }

    /// Number of edge slots, `C(n, r)`.
    #[inline]
    pub fn slots(&self) -> usize {
        binom(self.n, self.r) as usize
    }

    #[inline]
    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.n)
    }

    #[inline]
    pub fn has_rank(&self, idx: usize) -> bool {
        (self.bits[idx / 64] >> (idx % 64)) & 1 == 1
    }

    #[inline]
    pub fn set_rank(&mut self, idx: usize, on: bool) {
        if on {
            self.bits[idx / 64] |= 1 << (idx % 64);
        } else {
            self.bits[idx / 64] &= !(1 << (idx % 64));
        }
    }

    /// Edge test for an ascending vertex list of length r.
    #[inline]
    pub fn has_edge(&self, sorted: &[usize]) -> bool {
        debug_assert_eq!(sorted.len(), self.r);
        self.has_rank(rank(sorted))
    }

    #[inline]
    pub fn has_edge_set(&self, e: VertexSet) -> bool {
        self.has_rank(rank_set(e))
    }

    pub fn edge_count(&self) -> usize {
        self.bits.iter().map(|w| w.count_ones() as usize).sum()
    }

    /// Edges as ascending vertex lists, in colex order.
    pub fn edges(&self) -> impl Iterator<Item = Vec<usize>> + '_ {
        (0..self.slots())
            .filter(|&i| self.has_rank(i))
            .map(|i| unrank(i, self.r))
    }

    /// True iff every r-subset of `s` is an edge; vacuously true when `|s| < r`.
    pub fn is_clique(&self, s: VertexSet) -> bool {
        if s.len() < self.r {
            return true;
        }
        if self.r == 2 {
            let vs = s.to_vec();
            return vs
                .iter()
                .enumerate()
                .all(|(i, &a)| vs[i + 1..].iter().all(|&b| self.has_edge(&[a, b])));
        }
        subsets_of(s, self.r).all(|e| self.has_edge_set(e))
    }

    /// True iff no r-subset of `s` is an edge.
    pub fn is_anticlique(&self, s: VertexSet) -> bool {
        s.len() < self.r || subsets_of(s, self.r).all(|e| !self.has_edge_set(e))
    }

    pub fn complement(&self) -> Self {
        let slots = self.slots();
        let mut bits: Vec<u64> = self.bits.iter().map(|w| !w).collect();
        if !slots.is_multiple_of(64) {
            let last = bits.len() - 1;
            bits[last] &= (1u64 << (slots % 64)) - 1;
        }
        UniformHypergraph::from_bits(self.n, self.r, bits)
    }

    /// The subhypergraph induced on `s`, relabelled to `0..|s|` in ascending order.
    pub fn induced(&self, s: VertexSet) -> Result<Self> {
        if s.is_empty() {
            return Err(Error::InvalidArgument(
                "induced subhypergraph needs at least one vertex".into(),
            ));
        }
        if !s.is_subset(self.vertices()) {
            return Err(Error::InvalidArgument(format!(
                "{s:?} is not a subset of the vertex set"
            )));
        }
        let map = s.to_vec();
        let mut sub = Self::empty(map.len(), self.r)?;
        let mut orig = vec![0usize; self.r];
        for (idx, e) in KSubsets::new(map.len(), self.r).enumerate() {
            for (o, &i) in orig.iter_mut().zip(&e) {
                *o = map[i];
            }
            if self.has_edge(&orig) {
                sub.set_rank(idx, true);
            }
        }
        Ok(sub)
    }

    /// Applies a vertex relabelling `v -> perm[v]`.
    pub fn permuted(&self, perm: &[usize]) -> Self {
        let mut out = Self::empty(self.n, self.r).expect("same dimensions");
        let mut img = vec![0usize; self.r];
        for e in self.edges() {
            for (o, &v) in img.iter_mut().zip(&e) {
                *o = perm[v];
            }
            img.sort_unstable();
            out.set_rank(rank(&img), true);
        }
        out
    }

    pub fn to_json(&self) -> HypergraphJson {
        HypergraphJson {
            n: self.n,
            r: self.r,
            edges: self.edges().collect(),
        }
    }

    pub fn from_json(j: &HypergraphJson) -> Result<Self> {
        Self::from_edges(j.n, j.r, &j.edges)
    }
}

impl std::fmt::Debug for UniformHypergraph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "H(n={}, r={}, edges={:?})",
            self.n,
            self.r,
            self.edges().collect::<Vec<_>>()
        )
    }
}

/// Validates an explicit edge and returns its colex rank.
pub(crate) fn edge_rank_checked(n: usize, r: usize, e: &[usize]) -> Result<usize> {
    if e.len() != r {
        return Err(Error::Malformed(format!("edge {e:?} does not have {r} vertices")));
    }
    if !e.windows(2).all(|w| w[0] < w[1]) {
        return Err(Error::Malformed(format!("edge {e:?} is not strictly ascending")));
    }
    if e[r - 1] >= n {
        return Err(Error::Malformed(format!("edge {e:?} has a vertex >= n={n}")));
    }
    Ok(rank(e))
}

/// JSON interchange form `{"n", "r", "edges"}`; edges ascending, written in colex order.
#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
#[serde(deny_unknown_fields)]
pub struct HypergraphJson {
    pub n: usize,
    pub r: usize,
    pub edges: Vec<Vec<usize>>,
}

#[cfg(test)]
mod tests {
    use super::*;

    fn k4() -> UniformHypergraph {
        UniformHypergraph::complete(4, 2).unwrap()
    }

    #[test]
    fn complete_graph_is_clique() {
        assert!(k4().is_clique(VertexSet::full(4)));
        assert_eq!(k4().edge_count(), 6);
    }

    #[test]
    fn small_sets_are_vacuous_cliques() {
        let h = UniformHypergraph::empty(5, 3).unwrap();
        assert!(h.is_clique(VertexSet::from_slice(&[1, 4])));
        assert!(!h.is_clique(VertexSet::from_slice(&[1, 2, 4])));
        assert!(h.is_anticlique(VertexSet::full(5)));
    }

    #[test]
    fn complement_involution_and_padding() {
        let h = UniformHypergraph::from_edges(7, 3, &[[0, 1, 2], [2, 4, 6]]).unwrap();
        let c = h.complement();
        assert_eq!(c.edge_count(), 35 - 2);
        assert_eq!(c.complement(), h);
    }

    #[test]
    fn induced_relabels_in_order() {
        let h = UniformHypergraph::from_edges(6, 2, &[[1, 3], [3, 5], [0, 2]]).unwrap();
        let s = VertexSet::from_slice(&[1, 3, 5]);
        let sub = h.induced(s).unwrap();
        assert_eq!(sub.edges().collect::<Vec<_>>(), vec![vec![0, 1], vec![1, 2]]);
        assert_eq!(h.induced(h.vertices()).unwrap(), h);
        assert!(h.induced(VertexSet::EMPTY).is_err());
    }

    #[test]
    fn rejects_bad_edges() {
        assert!(UniformHypergraph::from_edges(4, 2, &[[1, 1]]).is_err());
        assert!(UniformHypergraph::from_edges(4, 2, &[[2, 1]]).is_err());
        assert!(UniformHypergraph::from_edges(4, 2, &[[1, 4]]).is_err());
        assert!(UniformHypergraph::from_edges(4, 2, &[vec![1, 2, 3]]).is_err());
        assert!(UniformHypergraph::from_edges(4, 2, &[[1, 2], [1, 2]]).is_err());
        assert!(UniformHypergraph::empty(129, 2).is_err());
        assert!(UniformHypergraph::empty(5, 1).is_err());
    }

    #[test]
    fn json_round_trip_in_colex_order() {
        let h = UniformHypergraph::from_edges(5, 3, &[[2, 3, 4], [0, 1, 2]]).unwrap();
        let j = h.to_json();
        assert_eq!(j.edges, vec![vec![0, 1, 2], vec![2, 3, 4]]);
        let text = serde_json::to_string(&j).unwrap();
        let back: HypergraphJson = serde_json::from_str(&text).unwrap();
        assert_eq!(UniformHypergraph::from_json(&back).unwrap(), h);
    }
}
