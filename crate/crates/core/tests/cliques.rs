use proptest::prelude::*;

use hfw_core::cliques::{degrees, enumerate_maximal_cliques};
use hfw_core::colex::subsets_of;
use hfw_core::{UniformHypergraph, VertexSet};

fn hypergraph() -> impl Strategy<Value = UniformHypergraph> {
    (2usize..=3, 1usize..=7, any::<u64>()).prop_map(|(r, n, bits)| {
        let mut k = 0;
        UniformHypergraph::from_fn(n, r, |_| {
            k += 1;
            (bits >> (k % 64)) & 1 == 1
        })
        .unwrap()
    })
}

fn oracle(h: &UniformHypergraph) -> Vec<VertexSet> {
    let n = h.n();
    let mut out: Vec<VertexSet> = (0u128..1 << n)
        .map(VertexSet)
        .filter(|&s| h.is_clique(s) && (0..n).all(|v| s.contains(v) || !h.is_clique(s.with(v))))
        .collect();
    out.sort();
    out
}

proptest! {
    #[test]
    fn matches_subset_oracle(h in hypergraph()) {
        prop_assert_eq!(enumerate_maximal_cliques(&h).cliques, oracle(&h));
    }

    #[test]
    fn induced_subgraphs_have_no_more_cliques(h in hypergraph(), mask in any::<u128>()) {
        let s = VertexSet(mask & VertexSet::full(h.n()).0);
        prop_assume!(!s.is_empty());
        let sub = h.induced(s).unwrap();
        prop_assert!(enumerate_maximal_cliques(&sub).c() <= enumerate_maximal_cliques(&h).c());
    }

    #[test]
    fn complement_is_an_involution(h in hypergraph()) {
        prop_assert_eq!(h.complement().complement(), h);
    }

    #[test]
    fn every_vertex_is_covered(h in hypergraph()) {
        let rep = enumerate_maximal_cliques(&h);
        prop_assert!(rep.per_vertex.iter().all(|&k| k >= 1));
        prop_assert!(degrees(&h).0 >= 1);
    }

    #[test]
    fn edges_and_small_sets_lie_in_cliques(h in hypergraph()) {
        let rep = enumerate_maximal_cliques(&h);
        for e in h.edges() {
            let e = VertexSet::from_slice(&e);
            prop_assert!(rep.cliques.iter().any(|q| e.is_subset(*q)));
        }
        if h.n() + 1 >= h.r() {
            for s in subsets_of(VertexSet::full(h.n()), h.r() - 1) {
                prop_assert!(rep.cliques.iter().any(|q| s.is_subset(*q)));
            }
        }
    }
}
