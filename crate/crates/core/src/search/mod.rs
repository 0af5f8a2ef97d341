//! Exhaustive and heuristic search for `f_r(t, n)`.

mod anneal;
mod classes;
mod exact;

use serde::Serialize;

use crate::coloring::{ColoringJson, EdgeColoring};
use crate::error::Result;

pub use anneal::{heuristic_upper, heuristic_upper_seeds, AnnealParams};
pub use exact::{exact_f, Checkpoint, ExactOptions};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Mode {
    Exact,
    Heuristic,
}

#[derive(Debug, Clone)]
pub struct SearchResult {
    pub mode: Mode,
    pub value: usize,
    pub witness: EdgeColoring,
    pub nodes_explored: u64,
    /// Set only when an exact search exhausted its tree.
    pub proved: bool,
}

#[derive(Serialize)]
#[serde(rename_all = "camelCase")]
pub struct SearchResultJson {
    pub mode: Mode,
    pub value: usize,
    pub witness: ColoringJson,
    pub nodes_explored: u64,
    pub proved: bool,
}

impl SearchResult {
    pub fn to_json(&self) -> SearchResultJson {
        SearchResultJson {
            mode: self.mode,
            value: self.value,
            witness: self.witness.to_json(),
            nodes_explored: self.nodes_explored,
            proved: self.proved,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "verdict", rename_all = "SCREAMING-KEBAB-CASE")]
pub enum Verdict {
    ProvedEqual { value: usize },
    ProvedDifferent { value: usize },
    Inconclusive { best: usize },
}

impl std::fmt::Display for Verdict {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Verdict::ProvedEqual { .. } => write!(f, "PROVED-EQUAL"),
            Verdict::ProvedDifferent { value } => write!(f, "PROVED-DIFFERENT({value})"),
            Verdict::Inconclusive { best } => write!(f, "INCONCLUSIVE(best {best})"),
        }
    }
}

/// Runs [`exact_f`] and compares the outcome with `claimed`.
pub fn verify_value(r: usize, t: usize, n: usize, claimed: usize, opts: &ExactOptions) -> Result<Verdict> {
    let res = exact_f(r, t, n, opts)?;
    Ok(if !res.proved {
        Verdict::Inconclusive { best: res.value }
    } else if res.value == claimed {
        Verdict::ProvedEqual { value: res.value }
    } else {
        Verdict::ProvedDifferent { value: res.value }
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn exact(r: usize, t: usize, n: usize) -> SearchResult {
        exact_f(r, t, n, &ExactOptions::default()).unwrap()
    }

    fn brute(r: usize, t: usize, n: usize) -> usize {
        let slots = crate::colex::binom(n, r) as usize;
        let mut best = usize::MAX;
        for mut code in 0..(t as u64).pow(slots as u32) {
            let colors = (0..slots)
                .map(|_| {
                    let c = (code % t as u64) as u8;
                    code /= t as u64;
                    c
                })
                .collect();
            best = best.min(EdgeColoring::new(n, r, t, colors).unwrap().total());
        }
        best
    }

    #[test]
    fn small_exact_values() {
        for (r, t, n, want) in [(2, 2, 5, 6), (3, 2, 5, 9), (2, 3, 4, 6), (2, 2, 1, 2), (3, 2, 2, 2)] {
            let res = exact(r, t, n);
            assert!(res.proved);
            assert_eq!(res.value, want, "r={r} t={t} n={n}");
            assert_eq!(res.witness.total(), res.value);
        }
    }

    #[test]
    fn agrees_with_brute_force() {
        for t in 2..=3 {
            for n in 1..=4 {
                assert_eq!(exact(2, t, n).value, brute(2, t, n), "t={t} n={n}");
            }
        }
    }

    #[test]
    fn pruning_only_changes_node_counts() {
        let off = ExactOptions {
            orbit_pruning: false,
            ..Default::default()
        };
        for (r, t, n) in [(2, 3, 5), (2, 2, 6), (3, 2, 5)] {
            let a = exact(r, t, n);
            let b = exact_f(r, t, n, &off).unwrap();
            assert_eq!(a.value, b.value);
            assert!(a.nodes_explored < b.nodes_explored);
        }
    }

    #[test]
    fn thread_count_does_not_matter() {
        let one = exact_f(
            2,
            3,
            5,
            &ExactOptions {
                threads: Some(1),
                ..Default::default()
            },
        )
        .unwrap();
        let four = exact_f(
            2,
            3,
            5,
            &ExactOptions {
                threads: Some(4),
                ..Default::default()
            },
        )
        .unwrap();
        assert_eq!(one.value, four.value);
        assert_eq!(one.nodes_explored, four.nodes_explored);
        assert_eq!(one.witness, four.witness);
    }

    #[test]
    fn budget_exhaustion_is_reported() {
        let res = exact_f(
            2,
            3,
            6,
            &ExactOptions {
                budget_nodes: Some(50),
                ..Default::default()
            },
        )
        .unwrap();
        assert!(!res.proved);
        assert_eq!(res.witness.total(), res.value);
        assert!(matches!(
            verify_value(
                2,
                3,
                6,
                9,
                &ExactOptions {
                    budget_nodes: Some(50),
                    ..Default::default()
                }
            )
            .unwrap(),
            Verdict::Inconclusive { .. }
        ));
    }

    #[test]
    fn verdicts() {
        let o = ExactOptions::default();
        assert_eq!(verify_value(2, 2, 6, 7, &o).unwrap(), Verdict::ProvedEqual { value: 7 });
        assert_eq!(verify_value(2, 2, 6, 8, &o).unwrap().to_string(), "PROVED-DIFFERENT(7)");
    }

    #[test]
    fn checkpoint_resume_matches_fresh_run() {
        let dir = std::env::temp_dir().join(format!("hfw-ck-{}", std::process::id()));
        std::fs::create_dir_all(&dir).unwrap();
        let path = dir.join("ck.json");
        let _ = std::fs::remove_file(&path);
        let partial = ExactOptions {
            budget_nodes: Some(2000),
            checkpoint: Some(path.clone()),
            ..Default::default()
        };
        let first = exact_f(3, 2, 6, &partial).unwrap();
        assert!(!first.proved);
        let ck = Checkpoint::load(&path).unwrap();
        assert!(ck.prefix_depth > 0);
        let resumed = exact_f(
            3,
            2,
            6,
            &ExactOptions {
                checkpoint: Some(path.clone()),
                ..Default::default()
            },
        )
        .unwrap();
        assert!(resumed.proved);
        assert_eq!(resumed.value, 12);
        std::fs::remove_dir_all(&dir).unwrap();
    }

    #[test]
    fn anneal_is_seed_deterministic() {
        let p = AnnealParams {
            moves: 20_000,
            seed: 7,
            ..Default::default()
        };
        let a = heuristic_upper(2, 3, 6, None, &p).unwrap();
        let b = heuristic_upper(2, 3, 6, None, &p).unwrap();
        assert_eq!(a.witness, b.witness);
        assert_eq!(a.value, a.witness.total());
        assert!(!a.proved);
        assert!(a.value <= 9);
    }
}
