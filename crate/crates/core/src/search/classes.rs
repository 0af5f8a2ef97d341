use crate::cliques::Extender;
use crate::colex::KSubsets;
use crate::hypergraph::UniformHypergraph;
use crate::vertex_set::VertexSet;

/// Colour classes kept as live extenders, with per-class counts that are
/// recomputed only for classes touched since the last evaluation.
pub(crate) struct Classes {
    n: usize,
    edges: Vec<Vec<usize>>,
    ext: Vec<Extender>,
    counts: Vec<usize>,
    dirty: Vec<bool>,
}

impl Classes {
    pub fn new(n: usize, r: usize, t: usize) -> Self {
        let edges: Vec<Vec<usize>> = if n >= r {
            KSubsets::new(n, r).collect()
        } else {
            Vec::new()
        };
        let blank = match r {
            2 => Extender::Graph {
                n,
                adj: vec![VertexSet::EMPTY; n],
            },
            3 => Extender::Triple {
                n,
                link: vec![VertexSet::EMPTY; n * n],
            },
            _ => Extender::General(UniformHypergraph::empty(n, r).expect("validated dimensions")),
        };
        Classes {
            n,
            edges,
            ext: vec![blank; t],
            counts: vec![0; t],
            dirty: vec![true; t],
        }
    }

    pub fn slots(&self) -> usize {
        self.edges.len()
    }

    fn toggle(&mut self, idx: usize, c: usize, on: bool) {
        let n = self.n;
        let e = &self.edges[idx];
        let set = |s: &mut VertexSet, v: usize| if on { s.insert(v) } else { s.remove(v) };
        match &mut self.ext[c] {
            Extender::Graph { adj, .. } => {
                set(&mut adj[e[0]], e[1]);
                set(&mut adj[e[1]], e[0]);
            }
            Extender::Triple { link, .. } => {
                let (a, b, x) = (e[0], e[1], e[2]);
                set(&mut link[a * n + b], x);
                set(&mut link[b * n + a], x);
                set(&mut link[a * n + x], b);
                set(&mut link[x * n + a], b);
                set(&mut link[b * n + x], a);
                set(&mut link[x * n + b], a);
            }
            Extender::General(h) => h.set_rank(idx, on),
        }
        self.dirty[c] = true;
    }

    pub fn add(&mut self, idx: usize, c: usize) {
        self.toggle(idx, c, true);
    }

    pub fn remove(&mut self, idx: usize, c: usize) {
        self.toggle(idx, c, false);
    }

    pub fn count(&mut self, c: usize) -> usize {
        if self.dirty[c] {
            self.counts[c] = self.ext[c].count_maximal();
            self.dirty[c] = false;
        }
        self.counts[c]
    }

    pub fn total(&mut self) -> usize {
        (0..self.counts.len()).map(|c| self.count(c)).sum()
    }
}
