//! Edge colourings of `K_n^r` (factorizations into `t` spanning factors) and
//! their maximal-monochromatic-clique score.

use serde::{Deserialize, Serialize};

use crate::cliques::{enumerate_maximal_cliques, CliqueReport, Extender};
use crate::colex::{binom, rank, KSubsets};
use crate::error::{Error, Result};
use crate::hypergraph::{check_dims, edge_rank_checked, UniformHypergraph};
use crate::vertex_set::VertexSet;

pub const MAX_COLORS: usize = 255;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct EdgeColoring {
    n: usize,
    r: usize,
    t: usize,
    colors: Vec<u8>,
}

impl std::fmt::Debug for EdgeColoring {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "EdgeColoring(n={}, r={}, t={}, {:?})",
            self.n, self.r, self.t, self.colors
        )
    }
}

fn check_t(t: usize) -> Result<()> {
    if !(2..=MAX_COLORS).contains(&t) {
        return Err(Error::InvalidArgument(format!("t={t} must be in 2..={MAX_COLORS}")));
    }
    Ok(())
}

impl EdgeColoring {
    /// Validates a colour vector given in colex edge order.
    pub fn new(n: usize, r: usize, t: usize, colors: Vec<u8>) -> Result<Self> {
        check_t(t)?;
        let slots = check_dims(n, r)?;
        if colors.len() != slots {
            return Err(Error::Malformed(format!(
                "expected {slots} colours for C({n},{r}) edges, got {}",
                colors.len()
            )));
        }
        if let Some(bad) = colors.iter().find(|&&c| c as usize >= t) {
            return Err(Error::Malformed(format!("colour {bad} out of range for t={t}")));
        }
        Ok(EdgeColoring { n, r, t, colors })
    }

    /// Every edge gets `color`.
    pub fn uniform(n: usize, r: usize, t: usize, color: usize) -> Result<Self> {
        check_t(t)?;
        let slots = check_dims(n, r)?;
        if color >= t {
            return Err(Error::InvalidArgument(format!("colour {color} out of range for t={t}")));
        }
        Ok(EdgeColoring {
            n,
            r,
            t,
            colors: vec![color as u8; slots],
        })
    }

    /// Colours each ascending r-subset by `f`.
    pub fn from_fn(n: usize, r: usize, t: usize, mut f: impl FnMut(&[usize]) -> usize) -> Result<Self> {
        check_t(t)?;
        check_dims(n, r)?;
        let colors = KSubsets::new(n, r).map(|e| f(&e) as u8).collect();
        Self::new(n, r, t, colors)
    }

    /// The 2-colouring `(H, complement of H)`: colour 0 on the edges of `h`.
    pub fn from_hypergraph(h: &UniformHypergraph) -> Self {
        let colors = (0..h.slots()).map(|i| if h.has_rank(i) { 0 } else { 1 }).collect();
        EdgeColoring {
            n: h.n(),
            r: h.r(),
            t: 2,
            colors,
        }
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }
    #[inline]
    pub fn r(&self) -> usize {
        self.r
    }
    #[inline]
    pub fn t(&self) -> usize {
        self.t
    }
    #[inline]
    pub fn colors(&self) -> &[u8] {
        &self.colors
    }

    #[inline]
    pub fn color_at(&self, idx: usize) -> usize {
        self.colors[idx] as usize
    }

    /// Colour of an ascending r-subset.
    #[inline]
    pub fn color_of(&self, sorted: &[usize]) -> usize {
        self.colors[rank(sorted)] as usize
    }

    /// The spanning factor formed by the edges of colour `i`.
    pub fn factor(&self, i: usize) -> UniformHypergraph {
        let mut h = UniformHypergraph::empty(self.n, self.r).expect("validated dimensions");
        for (idx, &c) in self.colors.iter().enumerate() {
            if c as usize == i {
                h.set_rank(idx, true);
            }
        }
        h
    }

    /// One candidate-update structure per colour class.
    pub fn class_extenders(&self) -> Vec<Extender> {
        let n = self.n;
        match self.r {
            2 => {
                let mut adj = vec![vec![VertexSet::EMPTY; n]; self.t];
                let mut idx = 0;
                for b in 1..n {
                    for a in 0..b {
                        let c = self.colors[idx] as usize;
                        adj[c][a].insert(b);
                        adj[c][b].insert(a);
                        idx += 1;
                    }
                }
                adj.into_iter().map(|adj| Extender::Graph { n, adj }).collect()
            }
            3 => {
                let mut link = vec![vec![VertexSet::EMPTY; n * n]; self.t];
                let mut idx = 0;
                for c in 2..n {
                    for b in 1..c {
                        for a in 0..b {
                            let l = &mut link[self.colors[idx] as usize];
                            l[a * n + b].insert(c);
                            l[b * n + a].insert(c);
                            l[a * n + c].insert(b);
                            l[c * n + a].insert(b);
                            l[b * n + c].insert(a);
                            l[c * n + b].insert(a);
                            idx += 1;
                        }
                    }
                }
                link.into_iter().map(|link| Extender::Triple { n, link }).collect()
            }
            _ => (0..self.t).map(|i| Extender::new(&self.factor(i))).collect(),
        }
    }

    /// Per-colour maximal clique counts, without materialising cliques.
    pub fn per_color_counts(&self) -> Vec<usize> {
        self.class_extenders().iter().map(|e| e.count_maximal()).collect()
    }

    /// Total number of maximal monochromatic cliques, counted once per colour.
    pub fn total(&self) -> usize {
        self.per_color_counts().iter().sum()
    }

    pub fn score(&self) -> ScoreReport {
        let reports: Vec<CliqueReport> = (0..self.t)
            .map(|i| enumerate_maximal_cliques(&self.factor(i)))
            .collect();
        let per_color: Vec<usize> = reports.iter().map(|r| r.c()).collect();
        ScoreReport {
            total: per_color.iter().sum(),
            per_color,
            reports,
        }
    }

    /// Recolours `j` as `i`, drops colour `j` and shifts higher colours down.
    pub fn merge_colors(&self, i: usize, j: usize) -> Result<Self> {
        if i == j || i >= self.t || j >= self.t {
            return Err(Error::InvalidArgument(format!(
                "cannot merge colours {i} and {j} of a {}-colouring",
                self.t
            )));
        }
        if self.t == 2 {
            return Err(Error::InvalidArgument("merging would leave a single colour".into()));
        }
        let colors = self
            .colors
            .iter()
            .map(|&c| {
                let c = c as usize;
                let c = if c == j { i } else { c };
                (if c > j { c - 1 } else { c }) as u8
            })
            .collect();
        Ok(EdgeColoring {
            n: self.n,
            r: self.r,
            t: self.t - 1,
            colors,
        })
    }

    /// `c_i * c_j >= C(n, r-1)` for every pair of distinct colours.
    pub fn check_lemma5(&self) -> bool {
        let c = self.per_color_counts();
        let need = binom(self.n, self.r - 1) as u128;
        (0..self.t).all(|i| (0..self.t).all(|j| i == j || (c[i] as u128) * (c[j] as u128) >= need))
    }

    /// The colouring induced on `s`, relabelled to `0..|s|` in ascending order.
    pub fn restrict(&self, s: VertexSet) -> Result<Self> {
        if s.is_empty() || !s.is_subset(VertexSet::full(self.n)) {
            return Err(Error::InvalidArgument(format!("{s:?} is not a nonempty vertex subset")));
        }
        let map = s.to_vec();
        let mut orig = vec![0usize; self.r];
        Self::from_fn(map.len(), self.r, self.t, |e| {
            for (o, &i) in orig.iter_mut().zip(e) {
                *o = map[i];
            }
            self.color_of(&orig)
        })
    }

    /// The colouring on the first `m` vertices.
    pub fn restrict_prefix(&self, m: usize) -> Result<Self> {
        self.restrict(VertexSet::full(m.min(self.n)))
    }

    /// Relabels vertex `v` as `perm[v]`.
    pub fn permute_vertices(&self, perm: &[usize]) -> Self {
        let mut out = self.clone();
        let mut img = vec![0usize; self.r];
        for (idx, e) in KSubsets::new(self.n, self.r).enumerate() {
            for (o, &v) in img.iter_mut().zip(&e) {
                *o = perm[v];
            }
            img.sort_unstable();
            out.colors[rank(&img)] = self.colors[idx];
        }
        out
    }

    /// Renames colour `c` as `perm[c]`.
    pub fn permute_colors(&self, perm: &[usize]) -> Self {
        let colors = self.colors.iter().map(|&c| perm[c as usize] as u8).collect();
        EdgeColoring { colors, ..self.clone() }
    }

    pub fn to_json(&self) -> ColoringJson {
        ColoringJson {
            n: self.n,
            r: self.r,
            t: self.t,
            colors: self.colors.iter().map(|&c| c as usize).collect(),
        }
    }

    /// Parses either the dense `colors` form or the explicit `edges` form.
    pub fn from_json_str(text: &str) -> Result<Self> {
        let raw: ColoringInput = serde_json::from_str(text)?;
        raw.into_coloring()
    }
}

/// Replaces vertex `v` of `g` with a copy of `h` (graphs only).
///
/// The copy of `h` occupies vertices `0..h.n()`; the other vertices of `g`
/// follow in increasing order. An edge between the copy and a vertex `u` of
/// `g` takes the colour of `{v, u}` in `g`.
pub fn substitute(g: &EdgeColoring, v: usize, h: &EdgeColoring) -> Result<EdgeColoring> {
    if g.t != h.t {
        return Err(Error::InvalidArgument(format!(
            "colour counts differ: {} vs {}",
            g.t, h.t
        )));
    }
    if g.r != 2 || h.r != 2 {
        return Err(Error::InvalidArgument(
            "substitution is defined for graphs (r = 2) only".into(),
        ));
    }
    if v >= g.n {
        return Err(Error::InvalidArgument(format!(
            "vertex {v} out of range for order {}",
            g.n
        )));
    }
    let hn = h.n;
    // result vertex -> Err(h vertex) | Ok(g vertex)
    let origin: Vec<std::result::Result<usize, usize>> =
        (0..hn).map(Err).chain((0..g.n).filter(|&u| u != v).map(Ok)).collect();
    EdgeColoring::from_fn(g.n + hn - 1, 2, g.t, |e| match (origin[e[0]], origin[e[1]]) {
        (Err(a), Err(b)) => h.color_of(&[a, b]),
        (Ok(a), Ok(b)) => g.color_of(&[a, b]),
        (Err(_), Ok(u)) | (Ok(u), Err(_)) => g.color_of(&[v.min(u), v.max(u)]),
    })
}

/// Score of a colouring: `c_i` per colour and their sum.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ScoreReport {
    pub per_color: Vec<usize>,
    pub total: usize,
    #[serde(skip)]
    pub reports: Vec<CliqueReport>,
}

/// Dense JSON form: colours listed in colex edge order.
#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
pub struct ColoringJson {
    pub n: usize,
    pub r: usize,
    pub t: usize,
    pub colors: Vec<usize>,
}

#[derive(Debug, Deserialize)]
struct EdgeEntry {
    e: Vec<usize>,
    c: usize,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct ColoringInput {
    n: Option<usize>,
    r: Option<usize>,
    t: Option<usize>,
    colors: Option<Vec<usize>>,
    edges: Option<Vec<EdgeEntry>>,
    #[serde(default)]
    #[allow(dead_code)]
    total: Option<usize>,
}

impl ColoringInput {
    fn into_coloring(self) -> Result<EdgeColoring> {
        match (self.colors, self.edges) {
            (Some(colors), None) => {
                let (n, r, t) = match (self.n, self.r, self.t) {
                    (Some(n), Some(r), Some(t)) => (n, r, t),
                    _ => return Err(Error::Malformed("dense form needs n, r and t".into())),
                };
                let colors = colors
                    .into_iter()
                    .map(|c| u8::try_from(c).map_err(|_| Error::Malformed(format!("colour {c} too large"))))
                    .collect::<Result<Vec<u8>>>()?;
                EdgeColoring::new(n, r, t, colors)
            }
            (None, Some(edges)) => {
                let first = edges
                    .first()
                    .ok_or_else(|| Error::Malformed("empty edge list".into()))?;
                let r = self.r.unwrap_or(first.e.len());
                let n = self
                    .n
                    .unwrap_or_else(|| edges.iter().flat_map(|x| x.e.iter()).max().map_or(0, |m| m + 1));
                let t = self
                    .t
                    .unwrap_or_else(|| edges.iter().map(|x| x.c + 1).max().unwrap_or(0).max(2));
                check_t(t)?;
                let slots = check_dims(n, r)?;
                let mut colors: Vec<Option<u8>> = vec![None; slots];
                for x in &edges {
                    let idx = edge_rank_checked(n, r, &x.e)?;
                    if x.c >= t {
                        return Err(Error::Malformed(format!("colour {} out of range for t={t}", x.c)));
                    }
                    if colors[idx].replace(x.c as u8).is_some() {
                        return Err(Error::Malformed(format!("edge {:?} listed twice", x.e)));
                    }
                }
                let colors = colors
                    .into_iter()
                    .enumerate()
                    .map(|(i, c)| {
                        c.ok_or_else(|| {
                            Error::Malformed(format!("edge {:?} has no colour", crate::colex::unrank(i, r)))
                        })
                    })
                    .collect::<Result<Vec<u8>>>()?;
                EdgeColoring::new(n, r, t, colors)
            }
            _ => Err(Error::Malformed("expected exactly one of `colors` or `edges`".into())),
        }
    }
}
