//! One graph per isomorphism class, by orderly generation.

use crate::colex::binom;
use crate::error::{Error, Result};
use crate::hypergraph::UniformHypergraph;

pub const MAX_ENUMERATION_ORDER: usize = 8;

/// Adjacency bits in colex order; position 0 is the most significant.
struct Canon {
    n: usize,
    /// `pos[a][b]`: colex index of `{a, b}`.
    pos: Vec<Vec<usize>>,
}

impl Canon {
    #[allow(clippy::needless_range_loop)]
    fn new(n: usize) -> Self {
        let mut pos = vec![vec![0; n]; n];
        for b in 1..n {
            for a in 0..b {
                let i = binom(b, 2) as usize + a;
                pos[a][b] = i;
                pos[b][a] = i;
            }
        }
        Canon { n, pos }
    }

    /// Whether no relabelling gives a lexicographically larger string.
    fn is_max(&self, bits: &[bool]) -> bool {
        let mut img = vec![usize::MAX; self.n];
        let mut used = vec![false; self.n];
        self.search(bits, 0, &mut img, &mut used)
    }

    /// Extends a partial relabelling vertex by vertex; the block of edges
    /// `{i, k}`, `i < k`, is settled once vertex `k` has its image.
    fn search(&self, bits: &[bool], k: usize, img: &mut [usize], used: &mut [bool]) -> bool {
        if k == self.n {
            return true;
        }
        for v in 0..self.n {
            if used[v] {
                continue;
            }
            img[k] = v;
            let mut cmp = std::cmp::Ordering::Equal;
            for i in 0..k {
                let mine = bits[self.pos[i][k]];
                let theirs = bits[self.pos[img[i]][v]];
                if mine != theirs {
                    cmp = theirs.cmp(&mine);
                    break;
                }
            }
            match cmp {
                std::cmp::Ordering::Greater => return false,
                std::cmp::Ordering::Less => continue,
                std::cmp::Ordering::Equal => {
                    used[v] = true;
                    let ok = self.search(bits, k + 1, img, used);
                    used[v] = false;
                    if !ok {
                        return false;
                    }
                }
            }
        }
        true
    }
}

/// All graphs of order `n` up to isomorphism, each in its canonical
/// labelling: the one whose colex adjacency string is least. Sorted by
/// that string.
pub fn enumerate_graphs(n: usize) -> Result<Vec<UniformHypergraph>> {
    if n == 0 {
        return Err(Error::InvalidArgument("order must be at least 1".into()));
    }
    if n > MAX_ENUMERATION_ORDER {
        return Err(Error::SizeLimit(format!(
            "enumeration stops at order {MAX_ENUMERATION_ORDER}; use a graph6 corpus"
        )));
    }
    let canon = Canon::new(n);
    let slots = binom(n, 2) as usize;
    let mut found: Vec<Vec<bool>> = Vec::new();
    // the greatest strings grow by setting bits after the last 1; the
    // complement of a greatest string is a least one
    let mut stack = vec![(vec![false; slots], 0usize)];
    while let Some((bits, from)) = stack.pop() {
        found.push(bits.clone());
        for i in from..slots {
            let mut next = bits.clone();
            next[i] = true;
            if canon.is_max(&next) {
                stack.push((next, i + 1));
            }
        }
    }
    let mut least: Vec<Vec<bool>> = found.into_iter().map(|b| b.into_iter().map(|x| !x).collect()).collect();
    least.sort();
    least
        .into_iter()
        .map(|bits| UniformHypergraph::from_fn(n, 2, |e| bits[binom(e[1], 2) as usize + e[0]]))
        .collect()
}
