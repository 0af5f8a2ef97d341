//! Maximal clique enumeration for r-uniform hypergraphs.
//!
//! Extend-and-prune search in the style of Bron–Kerbosch. For a current clique
//! `S` the candidate set is `{w : S ∪ {w} is a clique}`; adding `v` keeps `w`
//! a candidate iff every r-subset containing both `v` and `w` is an edge, so
//! candidates are maintained incrementally. The excluded set `X` makes every
//! maximal clique come out exactly once, from the branch that picks its
//! members in increasing order. Graphs (r = 2) additionally use a pivot.

use serde::Serialize;

use crate::colex::{rank, subsets_of};
use crate::hypergraph::UniformHypergraph;
use crate::vertex_set::VertexSet;

/// Per-hypergraph inventory of maximal cliques.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CliqueReport {
    pub n: usize,
    /// Maximal cliques in ascending lexicographic order of their member lists.
    #[serde(serialize_with = "ser_sets")]
    pub cliques: Vec<VertexSet>,
    /// `D(v)`: number of maximal cliques containing `v`.
    pub per_vertex: Vec<usize>,
}

fn ser_sets<S: serde::Serializer>(sets: &[VertexSet], s: S) -> Result<S::Ok, S::Error> {
    use serde::ser::SerializeSeq;
    let mut seq = s.serialize_seq(Some(sets.len()))?;
    for x in sets {
        seq.serialize_element(&x.to_vec())?;
    }
    seq.end()
}

impl CliqueReport {
    fn from_cliques(n: usize, mut cliques: Vec<VertexSet>) -> Self {
        cliques.sort_unstable();
        let mut per_vertex = vec![0usize; n];
        for q in &cliques {
            for v in q.iter() {
                per_vertex[v] += 1;
            }
        }
        CliqueReport { n, cliques, per_vertex }
    }

    /// Number of maximal cliques.
    pub fn c(&self) -> usize {
        self.cliques.len()
    }

    /// Minimum of `D(v)` over all vertices.
    pub fn d(&self) -> usize {
        self.per_vertex.iter().copied().min().unwrap_or(0)
    }

    /// Size of a largest clique.
    pub fn max_size(&self) -> usize {
        self.cliques.iter().map(|q| q.len()).max().unwrap_or(0)
    }
}

/// Candidate-update structure specialised by rank.
#[derive(Clone, Debug)]
pub enum Extender {
    /// `adj[v]`: neighbours of `v`.
    Graph {
        n: usize,
        adj: Vec<VertexSet>,
    },
    /// `link[a*n+b]`: vertices `w` with `{a,b,w}` an edge.
    Triple {
        n: usize,
        link: Vec<VertexSet>,
    },
    General(UniformHypergraph),
}

impl Extender {
    pub fn new(h: &UniformHypergraph) -> Self {
        let n = h.n();
        match h.r() {
            2 => {
                let mut adj = vec![VertexSet::EMPTY; n];
                for e in h.edges() {
                    adj[e[0]].insert(e[1]);
                    adj[e[1]].insert(e[0]);
                }
                Extender::Graph { n, adj }
            }
            3 => {
                let mut link = vec![VertexSet::EMPTY; n * n];
                for e in h.edges() {
                    let (a, b, c) = (e[0], e[1], e[2]);
                    link[a * n + b].insert(c);
                    link[b * n + a].insert(c);
                    link[a * n + c].insert(b);
                    link[c * n + a].insert(b);
                    link[b * n + c].insert(a);
                    link[c * n + b].insert(a);
                }
                Extender::Triple { n, link }
            }
            _ => Extender::General(h.clone()),
        }
    }

    pub fn n(&self) -> usize {
        match self {
            Extender::Graph { n, .. } | Extender::Triple { n, .. } => *n,
            Extender::General(h) => h.n(),
        }
    }

    fn r(&self) -> usize {
        match self {
            Extender::Graph { .. } => 2,
            Extender::Triple { .. } => 3,
            Extender::General(h) => h.r(),
        }
    }

    /// Members `w` of `cand` for which `s ∪ {v, w}` is a clique, given that
    /// both `s ∪ {v}` and `s ∪ {w}` are cliques.
    #[inline]
    fn compatible(&self, s: VertexSet, v: usize, cand: VertexSet) -> VertexSet {
        match self {
            Extender::Graph { adj, .. } => cand.intersection(adj[v]),
            Extender::Triple { n, link } => s.iter().fold(cand, |acc, x| acc.intersection(link[x * n + v])),
            Extender::General(h) => {
                let r = h.r();
                if s.len() < r - 2 {
                    return cand;
                }
                let mut out = VertexSet::EMPTY;
                let cores: Vec<VertexSet> = subsets_of(s, r - 2).collect();
                let mut buf = Vec::with_capacity(r);
                for w in cand.iter() {
                    let ok = cores.iter().all(|t| {
                        buf.clear();
                        buf.extend(t.with(v).with(w).iter());
                        h.has_rank(rank(&buf))
                    });
                    if ok {
                        out.insert(w);
                    }
                }
                out
            }
        }
    }

    /// Calls `emit` once per maximal clique (unordered).
    pub fn for_each_maximal(&self, mut emit: impl FnMut(VertexSet)) {
        let n = self.n();
        if n < self.r() {
            emit(VertexSet::full(n));
            return;
        }
        self.expand(VertexSet::EMPTY, VertexSet::full(n), VertexSet::EMPTY, &mut emit);
    }

    /// Number of maximal cliques.
    pub fn count_maximal(&self) -> usize {
        let mut c = 0;
        self.for_each_maximal(|_| c += 1);
        c
    }

    fn expand(&self, s: VertexSet, mut p: VertexSet, mut x: VertexSet, emit: &mut impl FnMut(VertexSet)) {
        if p.is_empty() {
            if x.is_empty() {
                emit(s);
            }
            return;
        }
        let branch = match self {
            Extender::Graph { adj, .. } => {
                // Tomita pivot: maximise |P ∩ N(u)| over u ∈ P ∪ X
                let mut best = VertexSet::EMPTY;
                let mut best_len = 0usize;
                let mut first = true;
                for u in p.union(x).iter() {
                    let k = p.intersection(adj[u]).len();
                    if first || k > best_len {
                        best_len = k;
                        best = adj[u];
                        first = false;
                    }
                }
                p.difference(best)
            }
            _ => p,
        };
        for v in branch.iter() {
            let p2 = self.compatible(s, v, p.without(v));
            let x2 = self.compatible(s, v, x);
            self.expand(s.with(v), p2, x2, emit);
            p.remove(v);
            x.insert(v);
        }
    }
}

/// All maximal cliques of `h`, with per-vertex counts.
pub fn enumerate_maximal_cliques(h: &UniformHypergraph) -> CliqueReport {
    let mut out = Vec::new();
    Extender::new(h).for_each_maximal(|q| out.push(q));
    CliqueReport::from_cliques(h.n(), out)
}

/// Maximal anticliques of `h`, i.e. maximal cliques of its complement.
pub fn enumerate_maximal_anticliques(h: &UniformHypergraph) -> CliqueReport {
    enumerate_maximal_cliques(&h.complement())
}

/// `c(h)` without materialising the cliques.
pub fn count_maximal_cliques(h: &UniformHypergraph) -> usize {
    Extender::new(h).count_maximal()
}

/// `(d, d̄)`: minimum clique and anticlique degrees.
pub fn degrees(h: &UniformHypergraph) -> (usize, usize) {
    (enumerate_maximal_cliques(h).d(), enumerate_maximal_anticliques(h).d())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::colex::binom;

    /// Tests every subset for cliqueness and maximality.
    fn oracle(h: &UniformHypergraph) -> Vec<VertexSet> {
        let n = h.n();
        let mut out = Vec::new();
        for mask in 0u128..(1u128 << n) {
            let s = VertexSet(mask);
            if !h.is_clique(s) {
                continue;
            }
            if (0..n).all(|v| s.contains(v) || !h.is_clique(s.with(v))) {
                out.push(s);
            }
        }
        out.sort_unstable();
        out
    }

    #[test]
    fn complete_has_one_clique() {
        for (n, r) in [(1, 2), (4, 2), (6, 3), (5, 4)] {
            let h = UniformHypergraph::complete(n, r).unwrap();
            assert_eq!(enumerate_maximal_cliques(&h).c(), 1);
        }
    }

    #[test]
    fn empty_has_all_small_sets() {
        for (n, r) in [(5, 2), (6, 3), (7, 4), (3, 4)] {
            let h = UniformHypergraph::empty(n, r).unwrap();
            let rep = enumerate_maximal_cliques(&h);
            assert_eq!(rep.c() as u64, binom(n, r - 1).max(1));
            assert_eq!(rep.cliques, oracle(&h));
        }
    }

    #[test]
    fn below_rank_is_single_clique() {
        let h = UniformHypergraph::empty(2, 3).unwrap();
        let rep = enumerate_maximal_cliques(&h);
        assert_eq!(rep.cliques, vec![VertexSet::full(2)]);
        assert_eq!(rep.d(), 1);
    }

    #[test]
    fn matches_oracle_on_fixed_cases() {
        let g = UniformHypergraph::from_edges(5, 2, &[[0, 1], [1, 2], [2, 3], [3, 4], [0, 4]]).unwrap();
        let rep = enumerate_maximal_cliques(&g);
        assert_eq!(rep.cliques, oracle(&g));
        assert_eq!(rep.c(), 5);
        assert_eq!(rep.per_vertex, vec![2; 5]);
        let h = UniformHypergraph::from_edges(
            6,
            4,
            &[
                [0, 1, 2, 3],
                [0, 1, 2, 4],
                [0, 1, 3, 4],
                [0, 2, 3, 4],
                [1, 2, 3, 4],
                [2, 3, 4, 5],
            ],
        )
        .unwrap();
        assert_eq!(enumerate_maximal_cliques(&h).cliques, oracle(&h));
    }

    #[test]
    fn k_n_degrees() {
        let k = UniformHypergraph::complete(6, 2).unwrap();
        assert_eq!(degrees(&k), (1, 1));
    }
}
