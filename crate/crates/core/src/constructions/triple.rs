//! Triple systems `H` with few maximal cliques in `H` and its complement.

use crate::cliques::{enumerate_maximal_anticliques, enumerate_maximal_cliques};
use crate::error::{Error, Result};
use crate::hypergraph::UniformHypergraph;
use crate::vertex_set::VertexSet;

/// Edges are the triples meeting the first `⌊n/2⌋` vertices in at least two points.
pub fn bipartite_triple_system(n: usize) -> Result<UniformHypergraph> {
    if n < 2 {
        return Err(Error::InvalidArgument(format!("order {n} is below 2")));
    }
    let n1 = n / 2;
    UniformHypergraph::from_fn(n, 3, |e| e.iter().filter(|&&v| v < n1).count() >= 2)
}

/// Vertex `i` stands for the integer `i + 1`; `{x < y < z}` is an edge iff `y` is odd.
pub fn parity_triple_system(n: usize) -> Result<UniformHypergraph> {
    if n < 2 {
        return Err(Error::InvalidArgument(format!("order {n} is below 2")));
    }
    UniformHypergraph::from_fn(n, 3, |e| (e[1] + 1) % 2 == 1)
}

/// The set `X_{a,b} ∩ [n]` for integers `a < b` of equal parity, as 0-based
/// vertices: `a`, `b` and every integer of the other parity strictly between.
pub fn parity_block(a: usize, b: usize, n: usize) -> VertexSet {
    debug_assert!(a < b && (b - a).is_multiple_of(2));
    let mut s = VertexSet::EMPTY;
    for x in a..=b {
        if (x == a || x == b || (x - a) % 2 == 1) && (1..=n).contains(&x) {
            s.insert(x - 1);
        }
    }
    s
}

/// Fano plane on `0..7`: lines `{i, i+1, i+3} mod 7`.
pub fn fano() -> UniformHypergraph {
    let lines: Vec<Vec<usize>> = (0..7)
        .map(|i| {
            let mut l = vec![i, (i + 1) % 7, (i + 3) % 7];
            l.sort_unstable();
            l
        })
        .collect();
    UniformHypergraph::from_edges(7, 3, &lines).expect("valid Fano lines")
}

/// Six faces of an octahedron whose two missing faces share a vertex.
pub fn octahedron_system() -> UniformHypergraph {
    const FACES: [[usize; 3]; 6] = [[1, 3, 6], [1, 4, 5], [2, 3, 5], [2, 3, 6], [2, 4, 5], [2, 4, 6]];
    let edges: Vec<[usize; 3]> = FACES.iter().map(|f| f.map(|v| v - 1)).collect();
    UniformHypergraph::from_edges(6, 3, &edges).expect("valid faces")
}

/// Summary numbers of a hypergraph and its complement.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CliqueProfile {
    pub c: usize,
    pub cbar: usize,
    pub d: usize,
    pub dbar: usize,
}

pub fn profile(h: &UniformHypergraph) -> CliqueProfile {
    let cl = enumerate_maximal_cliques(h);
    let an = enumerate_maximal_anticliques(h);
    CliqueProfile {
        c: cl.c(),
        cbar: an.c(),
        d: cl.d(),
        dbar: an.d(),
    }
}

/// Adds a twin `v*` of a vertex `v` of least clique degree (least index on
/// ties): `{x, y, v*}` is an edge whenever `{x, y, v}` is. Returns the new
/// system and `v`. The resulting counts are checked by enumeration:
/// `c* = c + d + 1`, `d* = d + 1`, `c̄* = c̄`, `d̄* = d̄`.
pub fn extend_star(h: &UniformHypergraph) -> Result<(UniformHypergraph, usize)> {
    if h.r() != 3 {
        return Err(Error::InvalidArgument(format!(
            "extension needs a triple system, got r={}",
            h.r()
        )));
    }
    let n = h.n();
    if n < 2 {
        return Err(Error::InvalidArgument(format!("order {n} is below 2")));
    }
    let cl = enumerate_maximal_cliques(h);
    let before = profile(h);
    let d = cl.d();
    let v = cl.per_vertex.iter().position(|&x| x == d).expect("n >= 1");
    let star = n;
    let mut edges: Vec<Vec<usize>> = h.edges().collect();
    for e in h.edges().filter(|e| e.contains(&v)) {
        let mut twin: Vec<usize> = e.iter().map(|&x| if x == v { star } else { x }).collect();
        twin.sort_unstable();
        edges.push(twin);
    }
    let ext = UniformHypergraph::from_edges(n + 1, 3, &edges)?;
    let after = profile(&ext);
    let expected = CliqueProfile {
        c: before.c + d + 1,
        cbar: before.cbar,
        d: d + 1,
        dbar: before.dbar,
    };
    if after != expected {
        return Err(Error::ConstructionInvariant(format!(
            "vertex extension produced {after:?}, expected {expected:?}"
        )));
    }
    Ok((ext, v))
}

/// Repeats `H -> complement(extend_star(H))` until the order reaches `target`.
///
/// Requires `d̄ - d ∈ {0, 1}` (that is `d = ⌊m/2⌋`, `d̄ = ⌈m/2⌉` with
/// `m = d + d̄`); each step adds `⌊(m+2)/2⌋` to `c + c̄` and moves to `m + 1`.
pub fn tower(base: &UniformHypergraph, target: usize) -> Result<UniformHypergraph> {
    if base.r() != 3 {
        return Err(Error::InvalidArgument(format!(
            "tower needs a triple system, got r={}",
            base.r()
        )));
    }
    if target < base.n() {
        return Err(Error::InvalidArgument(format!(
            "target order {target} is below the base order {}",
            base.n()
        )));
    }
    let mut h = base.clone();
    let mut p = profile(&h);
    while h.n() < target {
        if !(p.dbar == p.d || p.dbar == p.d + 1) {
            return Err(Error::ConstructionInvariant(format!(
                "order {}: d={} and d̄={} do not fit the d=⌊m/2⌋, d̄=⌈m/2⌉ pattern",
                h.n(),
                p.d,
                p.dbar
            )));
        }
        let m = p.d + p.dbar;
        let (ext, _) = extend_star(&h)?;
        let next = ext.complement();
        let np = profile(&next);
        let ok = np.c + np.cbar == p.c + p.cbar + (m + 2) / 2 && np.d == m.div_ceil(2) && np.dbar == (m + 2) / 2;
        if !ok {
            return Err(Error::ConstructionInvariant(format!(
                "order {}: step produced {np:?} from {p:?}",
                next.n()
            )));
        }
        h = next;
        p = np;
    }
    Ok(h)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fano_profile() {
        let f = fano();
        assert_eq!(f.edge_count(), 7);
        assert_eq!(
            profile(&f),
            CliqueProfile {
                c: 7,
                cbar: 7,
                d: 3,
                dbar: 4
            }
        );
        for a in 0..7 {
            for b in a + 1..7 {
                let k = f.edges().filter(|e| e.contains(&a) && e.contains(&b)).count();
                assert_eq!(k, 1);
            }
        }
    }

    #[test]
    fn fano_lines_are_the_cliques() {
        let f = fano();
        let lines: Vec<VertexSet> = f.edges().map(|e| VertexSet::from_slice(&e)).collect();
        let mut sorted = lines.clone();
        sorted.sort_unstable();
        assert_eq!(enumerate_maximal_cliques(&f).cliques, sorted);
        let mut comps: Vec<VertexSet> = lines.iter().map(|l| VertexSet::full(7).difference(*l)).collect();
        comps.sort_unstable();
        assert_eq!(enumerate_maximal_anticliques(&f).cliques, comps);
    }

    #[test]
    fn fano_has_no_clique_of_four() {
        let f = fano();
        for s in crate::colex::subsets_of(VertexSet::full(7), 4) {
            assert!(!f.is_clique(s));
        }
    }

    #[test]
    fn octahedron_profile() {
        let h = octahedron_system();
        assert_eq!(
            profile(&h),
            CliqueProfile {
                c: 9,
                cbar: 5,
                d: 3,
                dbar: 2
            }
        );
        let anti: Vec<Vec<usize>> = enumerate_maximal_anticliques(&h)
            .cliques
            .iter()
            .map(|s| s.iter().map(|v| v + 1).collect())
            .collect();
        let mut expected = vec![
            vec![1, 3, 5],
            vec![1, 4, 6],
            vec![3, 4, 5, 6],
            vec![1, 2, 5, 6],
            vec![1, 2, 3, 4],
        ];
        expected.sort();
        assert_eq!(anti, expected);
        let comp = profile(&h.complement());
        assert_eq!((comp.d, comp.dbar), (2, 3));
    }

    #[test]
    fn extension_of_fano() {
        let (ext, v) = extend_star(&fano()).unwrap();
        assert_eq!(v, 0);
        let p = profile(&ext);
        assert_eq!((p.c, p.cbar), (11, 7));
    }

    #[test]
    fn extension_of_single_triple() {
        let k = UniformHypergraph::complete(3, 3).unwrap();
        let (ext, _) = extend_star(&k).unwrap();
        assert_eq!(profile(&ext).c, 3);
    }

    #[test]
    fn extension_rejects_graphs() {
        let g = UniformHypergraph::complete(4, 2).unwrap();
        assert!(matches!(extend_star(&g), Err(Error::InvalidArgument(_))));
    }

    #[test]
    fn tower_identity_and_errors() {
        let f = fano();
        assert_eq!(tower(&f, 7).unwrap(), f);
        assert!(tower(&f, 6).is_err());
        // octahedron itself has d=3, d̄=2: the pattern fails
        assert!(matches!(
            tower(&octahedron_system(), 8),
            Err(Error::ConstructionInvariant(_))
        ));
    }

    #[test]
    fn tower_values() {
        let t = tower(&fano(), 10).unwrap();
        let p = profile(&t);
        assert_eq!(p.c + p.cbar, 28);
        let t = tower(&octahedron_system().complement(), 15).unwrap();
        let p = profile(&t);
        assert_eq!(p.c + p.cbar, 61);
    }

    #[test]
    fn parity_cliques_are_blocks() {
        let n = 7;
        let h = parity_triple_system(n).unwrap();
        let mut expected: Vec<VertexSet> = Vec::new();
        for a in (0..=n + 1).step_by(2) {
            for b in (a + 2..=n + 1).step_by(2) {
                expected.push(parity_block(a, b, n));
            }
        }
        expected.sort_unstable();
        expected.dedup();
        assert_eq!(enumerate_maximal_cliques(&h).cliques, expected);
        let mut odd: Vec<VertexSet> = Vec::new();
        for a in (1..=n + 1).step_by(2) {
            for b in (a + 2..=n + 1).step_by(2) {
                odd.push(parity_block(a, b, n));
            }
        }
        odd.sort_unstable();
        odd.dedup();
        assert_eq!(enumerate_maximal_anticliques(&h).cliques, odd);
    }

    #[test]
    fn parity_block_example() {
        // X_{3,9} = {3,4,6,8,9}
        assert_eq!(parity_block(3, 9, 20).to_vec(), vec![2, 3, 5, 7, 8]);
    }

    #[test]
    fn small_orders() {
        for n in [2usize, 5, 6, 9] {
            let want = (n + 1) * (n + 1) / 4;
            let b = profile(&bipartite_triple_system(n).unwrap());
            let p = profile(&parity_triple_system(n).unwrap());
            assert_eq!(b.c + b.cbar, want, "bipartite n={n}");
            assert_eq!(p.c + p.cbar, want, "parity n={n}");
        }
        let b5 = profile(&bipartite_triple_system(5).unwrap());
        assert_eq!(b5.c, 6);
    }
}
