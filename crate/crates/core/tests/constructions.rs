use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use hfw_core::cliques::enumerate_maximal_cliques;
use hfw_core::constructions::{coloring_t17, extend_star, plane_from_coloring, profile, turan_factorization};
use hfw_core::{ProjectivePlane, UniformHypergraph, VertexSet};

#[test]
fn planes_satisfy_axioms_up_to_sixteen() {
    for q in [2u64, 3, 4, 5, 7, 8, 9, 11, 13, 16] {
        let p = ProjectivePlane::desarguesian(q).unwrap();
        let n = p.num_points();
        assert_eq!(n as u64, q * q + q + 1);
        // re-validate through the checking constructor
        let again = ProjectivePlane::from_lines(q as usize, n, p.lines().to_vec()).unwrap();
        assert_eq!(again.lines().len(), n);
    }
    for q in [6u64, 10, 12, 15] {
        assert!(ProjectivePlane::desarguesian(q).is_err());
    }
}

#[test]
fn colour_classes_partition_vertices() {
    for q in [2u64, 3, 4, 5, 7] {
        let c = coloring_t17(q).unwrap();
        for rep in c.score().reports {
            assert_eq!(rep.c(), q as usize);
            let union = rep.cliques.iter().fold(VertexSet::EMPTY, |a, x| a.union(*x));
            assert_eq!(union, VertexSet::full(c.n()));
            assert_eq!(rep.cliques.iter().map(|x| x.len()).sum::<usize>(), c.n());
        }
    }
}

#[test]
fn extracted_planes_have_plane_parameters() {
    for q in [2u64, 3, 4, 5] {
        let plane = plane_from_coloring(&coloring_t17(q).unwrap()).unwrap();
        let reference = ProjectivePlane::desarguesian(q).unwrap();
        assert_eq!(plane.order(), reference.order());
        assert_eq!(plane.num_points(), reference.num_points());
        assert!(plane.lines().iter().all(|l| l.len() == q as usize + 1));
    }
}

#[test]
fn vertex_extension_on_random_triple_systems() {
    let mut rng = ChaCha8Rng::seed_from_u64(9);
    for _ in 0..200 {
        let n = rng.gen_range(2..=8);
        let p: f64 = rng.gen();
        let h = UniformHypergraph::from_fn(n, 3, |_| rng.gen_bool(p)).unwrap();
        let before = profile(&h);
        let (ext, v) = extend_star(&h).unwrap();
        let after = profile(&ext);
        assert_eq!(after.c, before.c + before.d + 1);
        assert_eq!(after.d, before.d + 1);
        assert_eq!(after.cbar, before.cbar);
        assert_eq!(after.dbar, before.dbar);
        assert_eq!(enumerate_maximal_cliques(&h).per_vertex[v], before.d);
    }
}

#[test]
fn turan_factorization_totals() {
    for n in 3..=7 {
        for t in 2..=4 {
            let c = turan_factorization(n, t).unwrap();
            assert_eq!(c.r(), n - 1);
            assert!(c.check_lemma5());
            assert_eq!(c.total() as u64, hfw_core::bounds::trivial_exact(n - 1, t, n).unwrap());
        }
    }
}
