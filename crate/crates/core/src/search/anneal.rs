use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use super::classes::Classes;
use super::{Mode, SearchResult};
use crate::coloring::EdgeColoring;
use crate::error::{Error, Result};

#[derive(Debug, Clone)]
pub struct AnnealParams {
    pub seed: u64,
    pub start_temp: f64,
    /// Temperature factor applied after every sweep of `C(n, r)` moves.
    pub cooling: f64,
    /// Temperature at which the schedule restarts from `start_temp`.
    pub min_temp: f64,
    pub moves: u64,
    pub budget_seconds: Option<f64>,
    /// Stop as soon as a colouring with at most this total is found.
    pub target: Option<usize>,
}

impl Default for AnnealParams {
    fn default() -> Self {
        AnnealParams {
            seed: 0,
            start_temp: 2.0,
            cooling: 0.999,
            min_temp: 0.05,
            moves: 1_000_000,
            budget_seconds: None,
            target: None,
        }
    }
}

/// Simulated annealing over single-edge recolourings. Deterministic for a
/// fixed seed unless a time budget cuts the run short.
pub fn heuristic_upper(
    r: usize,
    t: usize,
    n: usize,
    seed_coloring: Option<&EdgeColoring>,
    params: &AnnealParams,
) -> Result<SearchResult> {
    crate::hypergraph::check_dims(n, r)?;
    if !(2..=crate::coloring::MAX_COLORS).contains(&t) {
        return Err(Error::InvalidArgument(format!(
            "t={t} outside 2..={}",
            crate::coloring::MAX_COLORS
        )));
    }
    if !(params.cooling > 0.0 && params.cooling < 1.0) || params.start_temp <= 0.0 {
        return Err(Error::InvalidArgument("need 0 < cooling < 1 and start_temp > 0".into()));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(params.seed);
    let mut classes = Classes::new(n, r, t);
    let slots = classes.slots();
    let mut colors: Vec<u8> = match seed_coloring {
        Some(c) => {
            if (c.n(), c.r(), c.t()) != (n, r, t) {
                return Err(Error::InvalidArgument("seed colouring has different dimensions".into()));
            }
            c.colors().to_vec()
        }
        None => (0..slots).map(|_| rng.gen_range(0..t) as u8).collect(),
    };
    for (i, &c) in colors.iter().enumerate() {
        classes.add(i, c as usize);
    }
    let mut current = classes.total();
    let mut best = (current, colors.clone());
    let start = Instant::now();
    let mut temp = params.start_temp;
    let mut moves = 0u64;

    while moves < params.moves && slots > 0 {
        if params.target.is_some_and(|g| best.0 <= g) {
            break;
        }
        if moves.is_multiple_of(1024)
            && params
                .budget_seconds
                .is_some_and(|s| start.elapsed().as_secs_f64() >= s)
        {
            break;
        }
        let e = rng.gen_range(0..slots);
        let old = colors[e] as usize;
        let new = (old + rng.gen_range(1..t)) % t;
        let before = classes.count(old) + classes.count(new);
        classes.remove(e, old);
        classes.add(e, new);
        let after = classes.count(old) + classes.count(new);
        let delta = after as f64 - before as f64;
        if delta <= 0.0 || rng.gen::<f64>() < (-delta / temp).exp() {
            colors[e] = new as u8;
            current = current + after - before;
            if current < best.0 {
                best = (current, colors.clone());
            }
        } else {
            classes.remove(e, new);
            classes.add(e, old);
        }
        moves += 1;
        if moves.is_multiple_of(slots as u64) {
            temp *= params.cooling;
            if temp < params.min_temp {
                temp = params.start_temp;
            }
        }
    }

    let witness = EdgeColoring::new(n, r, t, best.1)?;
    Ok(SearchResult {
        mode: Mode::Heuristic,
        value: witness.total(),
        witness,
        nodes_explored: moves,
        proved: false,
    })
}

/// Independent runs at seeds `seed, seed+1, …`, in parallel; the least total
/// wins, ties going to the earliest seed.
pub fn heuristic_upper_seeds(
    r: usize,
    t: usize,
    n: usize,
    seed_coloring: Option<&EdgeColoring>,
    params: &AnnealParams,
    runs: usize,
) -> Result<SearchResult> {
    let results: Vec<Result<SearchResult>> = (0..runs.max(1) as u64)
        .into_par_iter()
        .map(|k| {
            let p = AnnealParams {
                seed: params.seed.wrapping_add(k),
                ..params.clone()
            };
            heuristic_upper(r, t, n, seed_coloring, &p)
        })
        .collect();
    let mut best: Option<SearchResult> = None;
    for res in results {
        let res = res?;
        if best.as_ref().is_none_or(|b| res.value < b.value) {
            best = Some(res);
        }
    }
    Ok(best.expect("at least one run"))
}
