use std::collections::HashSet;
use std::path::{Path, PathBuf};
use std::sync::atomic::{AtomicBool, AtomicU64, Ordering};
use std::time::Instant;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::classes::Classes;
use super::{Mode, SearchResult};
use crate::colex::{binom, rank, KSubsets};
use crate::coloring::{ColoringJson, EdgeColoring};
use crate::error::{Error, Result};

/// Largest prefix order whose full symmetric group is checked.
const ORBIT_MAX: usize = 7;
/// Subtree tasks are cut at the first depth with at least this many prefixes.
const MIN_TASKS: usize = 512;
const FLUSH_EVERY: u64 = 1024;

#[derive(Debug, Clone)]
pub struct ExactOptions {
    pub budget_nodes: Option<u64>,
    pub budget_seconds: Option<f64>,
    /// Worker threads; `None` uses the global pool.
    pub threads: Option<usize>,
    pub orbit_pruning: bool,
    /// Resumable progress file, rewritten after each batch of subtrees.
    pub checkpoint: Option<PathBuf>,
}

impl Default for ExactOptions {
    fn default() -> Self {
        ExactOptions {
            budget_nodes: None,
            budget_seconds: None,
            threads: None,
            orbit_pruning: true,
            checkpoint: None,
        }
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct Checkpoint {
    pub r: usize,
    pub t: usize,
    pub n: usize,
    pub prefix_depth: usize,
    pub completed_prefixes: Vec<Vec<u8>>,
    pub best_value: Option<usize>,
    pub best_witness: Option<ColoringJson>,
}

impl Checkpoint {
    pub fn load(path: &Path) -> Result<Self> {
        Ok(serde_json::from_str(&std::fs::read_to_string(path)?)?)
    }

    pub fn save(&self, path: &Path) -> Result<()> {
        let tmp = path.with_extension("tmp");
        std::fs::write(&tmp, serde_json::to_string(self)?)?;
        std::fs::rename(&tmp, path)?;
        Ok(())
    }
}

struct Problem {
    n: usize,
    r: usize,
    t: usize,
    slots: usize,
    /// `checks[d]`: prefix order completed once `d` edges are coloured.
    checks: Vec<Option<usize>>,
    /// Per prefix order `m`: edge maps of every non-identity permutation of `[m]`, flattened.
    perm_maps: Vec<Vec<u32>>,
}

fn permutations(m: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut p: Vec<usize> = (0..m).collect();
    loop {
        out.push(p.clone());
        let Some(i) = (1..m).rev().find(|&i| p[i - 1] < p[i]) else {
            break;
        };
        let j = (i..m).rev().find(|&j| p[j] > p[i - 1]).unwrap();
        p.swap(i - 1, j);
        p[i..].reverse();
    }
    out
}

impl Problem {
    #[allow(clippy::needless_range_loop)]
    fn new(n: usize, r: usize, t: usize, orbit: bool) -> Self {
        let slots = if n >= r { binom(n, r) as usize } else { 0 };
        let mut checks = vec![None; slots + 1];
        let mut perm_maps = vec![Vec::new(); n + 1];
        if orbit {
            for m in (r + 1)..n.min(ORBIT_MAX + 1) {
                let edges: Vec<Vec<usize>> = KSubsets::new(m, r).collect();
                checks[edges.len()] = Some(m);
                let mut flat = Vec::new();
                let mut buf = vec![0; r];
                for p in permutations(m).into_iter().skip(1) {
                    for e in &edges {
                        for (b, &v) in buf.iter_mut().zip(e) {
                            *b = p[v];
                        }
                        buf.sort_unstable();
                        flat.push(rank(&buf) as u32);
                    }
                }
                perm_maps[m] = flat;
            }
        }
        Problem {
            n,
            r,
            t,
            slots,
            checks,
            perm_maps,
        }
    }

    /// Whether `colors[..C(m,r)]` is least, after recolouring by first
    /// appearance, among its images under permutations of `[m]`.
    fn is_leader(&self, colors: &[u8], m: usize) -> bool {
        let len = binom(m, self.r) as usize;
        let mut relabel = [u8::MAX; 256];
        for map in self.perm_maps[m].chunks_exact(len) {
            let mut next = 0u8;
            let mut touched = [0u8; 256];
            let mut nt = 0;
            for (e, &src) in map.iter().enumerate() {
                let c = colors[src as usize] as usize;
                if relabel[c] == u8::MAX {
                    relabel[c] = next;
                    touched[nt] = c as u8;
                    nt += 1;
                    next += 1;
                }
                let img = relabel[c];
                if img != colors[e] {
                    if img < colors[e] {
                        for &c in &touched[..nt] {
                            relabel[c as usize] = u8::MAX;
                        }
                        return false;
                    }
                    break;
                }
            }
            for &c in &touched[..nt] {
                relabel[c as usize] = u8::MAX;
            }
        }
        true
    }

    fn accepts(&self, colors: &[u8], depth: usize) -> bool {
        match self.checks[depth] {
            Some(m) => self.is_leader(colors, m),
            None => true,
        }
    }

    /// Canonical prefixes at `depth`, or at the first depth reaching `MIN_TASKS`.
    fn frontier(&self, depth: Option<usize>, nodes: &mut u64) -> (usize, Vec<Vec<u8>>) {
        let mut level: Vec<Vec<u8>> = vec![Vec::new()];
        let mut d = 0;
        while d < self.slots && depth.map_or(level.len() < MIN_TASKS, |target| d < target) {
            let mut next = Vec::new();
            for p in &level {
                let used = p.iter().map(|&c| c as usize + 1).max().unwrap_or(0);
                for c in 0..=used.min(self.t - 1) {
                    let mut q = p.clone();
                    q.push(c as u8);
                    *nodes += 1;
                    if self.accepts(&q, d + 1) {
                        next.push(q);
                    }
                }
            }
            level = next;
            d += 1;
        }
        (d, level)
    }
}

struct Shared {
    nodes: AtomicU64,
    stop: AtomicBool,
    budget_nodes: Option<u64>,
    deadline: Option<(Instant, f64)>,
}

impl Shared {
    fn flush(&self, pending: &mut u64) -> bool {
        let total = self.nodes.fetch_add(*pending, Ordering::Relaxed) + *pending;
        *pending = 0;
        let over_nodes = self.budget_nodes.is_some_and(|b| total >= b);
        let over_time = self
            .deadline
            .is_some_and(|(start, s)| start.elapsed().as_secs_f64() >= s);
        if over_nodes || over_time {
            self.stop.store(true, Ordering::Relaxed);
        }
        self.stop.load(Ordering::Relaxed)
    }
}

struct TaskOutcome {
    best: Option<(usize, Vec<u8>)>,
    complete: bool,
}

struct Worker<'a> {
    p: &'a Problem,
    shared: &'a Shared,
    colors: Vec<u8>,
    classes: Classes,
    pending: u64,
    best: Option<(usize, Vec<u8>)>,
    aborted: bool,
}

impl<'a> Worker<'a> {
    fn run(p: &'a Problem, shared: &'a Shared, prefix: &[u8]) -> TaskOutcome {
        let mut w = Worker {
            p,
            shared,
            colors: vec![0; p.slots],
            classes: Classes::new(p.n, p.r, p.t),
            pending: 0,
            best: None,
            aborted: shared.stop.load(Ordering::Relaxed),
        };
        if !w.aborted {
            for (i, &c) in prefix.iter().enumerate() {
                w.colors[i] = c;
                w.classes.add(i, c as usize);
            }
            let used = prefix.iter().map(|&c| c as usize + 1).max().unwrap_or(0);
            w.dfs(prefix.len(), used);
            shared.flush(&mut w.pending);
        }
        TaskOutcome {
            best: w.best,
            complete: !w.aborted,
        }
    }

    fn dfs(&mut self, depth: usize, used: usize) {
        if depth == self.p.slots {
            let total = self.classes.total();
            if self.best.as_ref().is_none_or(|b| total < b.0) {
                self.best = Some((total, self.colors.clone()));
            }
            return;
        }
        for c in 0..=used.min(self.p.t - 1) {
            if self.aborted {
                return;
            }
            self.colors[depth] = c as u8;
            self.classes.add(depth, c);
            self.pending += 1;
            if self.pending >= FLUSH_EVERY && self.shared.flush(&mut self.pending) {
                self.aborted = true;
            }
            if !self.aborted && self.p.accepts(&self.colors[..=depth], depth + 1) {
                self.dfs(depth + 1, used.max(c + 1));
            }
            self.classes.remove(depth, c);
        }
    }
}

fn validate(r: usize, t: usize, n: usize) -> Result<()> {
    if r < 2 || t < 2 || n < 1 {
        return Err(Error::InvalidArgument(format!(
            "need r, t >= 2 and n >= 1, got r={r} t={t} n={n}"
        )));
    }
    if t > crate::coloring::MAX_COLORS {
        return Err(Error::SizeLimit(format!(
            "t={t} exceeds {}",
            crate::coloring::MAX_COLORS
        )));
    }
    crate::hypergraph::check_dims(n, r).map(|_| ())
}

/// Exact `f_r(t, n)` by exhaustive search over colourings up to vertex and
/// colour symmetry. Unless a budget runs out the result is `proved`.
pub fn exact_f(r: usize, t: usize, n: usize, opts: &ExactOptions) -> Result<SearchResult> {
    validate(r, t, n)?;
    if opts.budget_nodes == Some(0) || opts.budget_seconds.is_some_and(|s| s <= 0.0) {
        return Err(Error::InvalidArgument("budget must be positive".into()));
    }
    match opts.threads {
        Some(k) => rayon::ThreadPoolBuilder::new()
            .num_threads(k.max(1))
            .build()
            .map_err(|e| Error::InvalidArgument(e.to_string()))?
            .install(|| run(r, t, n, opts)),
        None => run(r, t, n, opts),
    }
}

fn run(r: usize, t: usize, n: usize, opts: &ExactOptions) -> Result<SearchResult> {
    let start = Instant::now();
    let p = Problem::new(n, r, t, opts.orbit_pruning);

    let resume = match &opts.checkpoint {
        Some(path) if path.exists() => {
            let ck = Checkpoint::load(path)?;
            if (ck.r, ck.t, ck.n) != (r, t, n) {
                return Err(Error::InvalidArgument(format!(
                    "checkpoint is for r={} t={} n={}",
                    ck.r, ck.t, ck.n
                )));
            }
            Some(ck)
        }
        _ => None,
    };

    let mut nodes = 0u64;
    let (depth, tasks) = p.frontier(resume.as_ref().map(|c| c.prefix_depth), &mut nodes);
    let mut done: HashSet<Vec<u8>> = HashSet::new();
    let mut best: Option<(usize, Vec<u8>)> = None;
    if let Some(ck) = &resume {
        done.extend(ck.completed_prefixes.iter().cloned());
        if let (Some(v), Some(w)) = (ck.best_value, &ck.best_witness) {
            let c = EdgeColoring::new(n, r, t, w.colors.iter().map(|&c| c as u8).collect())?;
            if c.total() != v {
                return Err(Error::Malformed("checkpoint witness does not score bestValue".into()));
            }
            best = Some((v, c.colors().to_vec()));
        }
    }

    let shared = Shared {
        nodes: AtomicU64::new(nodes),
        stop: AtomicBool::new(false),
        budget_nodes: opts.budget_nodes,
        deadline: opts.budget_seconds.map(|s| (start, s)),
    };
    let todo: Vec<&Vec<u8>> = tasks.iter().filter(|t| !done.contains(*t)).collect();
    let batch = if opts.checkpoint.is_some() {
        (rayon::current_num_threads() * 8).max(8)
    } else {
        todo.len().max(1)
    };
    let mut complete = true;
    for chunk in todo.chunks(batch) {
        let outcomes: Vec<TaskOutcome> = chunk
            .par_iter()
            .map(|prefix| Worker::run(&p, &shared, prefix))
            .collect();
        for (prefix, o) in chunk.iter().zip(outcomes) {
            if let Some((v, colors)) = o.best {
                if best.as_ref().is_none_or(|b| v < b.0) {
                    best = Some((v, colors));
                }
            }
            if o.complete {
                done.insert((*prefix).clone());
            } else {
                complete = false;
            }
        }
        if let Some(path) = &opts.checkpoint {
            let witness = best
                .as_ref()
                .map(|(_, c)| EdgeColoring::new(n, r, t, c.clone()))
                .transpose()?;
            let ck = Checkpoint {
                r,
                t,
                n,
                prefix_depth: depth,
                completed_prefixes: tasks.iter().filter(|t| done.contains(*t)).cloned().collect(),
                best_value: best.as_ref().map(|b| b.0),
                best_witness: witness.map(|w| w.to_json()),
            };
            ck.save(path)?;
        }
        if !complete {
            break;
        }
    }

    let witness = match best {
        Some((_, colors)) => EdgeColoring::new(n, r, t, colors)?,
        None => EdgeColoring::uniform(n, r, t, 0)?,
    };
    Ok(SearchResult {
        mode: Mode::Exact,
        value: witness.total(),
        witness,
        nodes_explored: shared.nodes.load(Ordering::Relaxed),
        proved: complete,
    })
}
