//! Upper-bound witnesses for `f_2(t, n)`, `t ∈ {3, 4, 5}`: base colourings
//! from a bundled store, grown by substitution into plane gadgets and cut
//! down to the requested order.

use std::collections::BTreeMap;
use std::path::Path;
use std::sync::OnceLock;

use serde::{Deserialize, Serialize};

use super::plane_colorings::{coloring_t17, coloring_t18};
use crate::bounds::{plane_constructible, upper_closed_form};
use crate::coloring::{substitute, EdgeColoring};
use crate::error::{Error, Result};
use crate::vertex_set::MAX_VERTICES;

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
pub struct ManifestEntry {
    pub t: usize,
    pub n: usize,
    pub file: String,
    pub total: usize,
    pub source: String,
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
pub struct Manifest {
    pub entries: Vec<ManifestEntry>,
}

#[derive(Debug, Clone)]
pub struct StoreEntry {
    pub total: usize,
    pub source: String,
    pub coloring: EdgeColoring,
}

/// Read-only map `(t, n) -> colouring` with recorded totals.
#[derive(Debug, Clone, Default)]
pub struct WitnessStore {
    entries: BTreeMap<(usize, usize), StoreEntry>,
}

macro_rules! bundled_files {
    ($($name:literal),* $(,)?) => {
        &[$(($name, include_str!(concat!("../../witnesses/", $name)))),*]
    };
}

const BUNDLED_MANIFEST: &str = include_str!("../../witnesses/manifest.json");
const BUNDLED: &[(&str, &str)] = bundled_files![
    "t3_n1.json",
    "t3_n2.json",
    "t3_n3.json",
    "t4_n1.json",
    "t4_n2.json",
    "t4_n3.json",
    "t4_n4.json",
    "t4_n5.json",
    "t4_n6.json",
    "t4_n7.json",
    "t4_n8.json",
    "t5_n1.json",
    "t5_n2.json",
    "t5_n3.json",
    "t5_n4.json",
    "t5_n5.json",
    "t5_n6.json",
    "t5_n7.json",
    "t5_n8.json",
    "t5_n9.json",
    "t5_n12.json",
    "t5_n13.json",
    "t5_n14.json",
    "t5_n15.json",
];

impl WitnessStore {
    /// Builds a store, re-scoring every colouring against the manifest.
    pub fn from_parts(manifest: &Manifest, mut read: impl FnMut(&str) -> Result<String>) -> Result<Self> {
        let mut entries = BTreeMap::new();
        for e in &manifest.entries {
            let coloring = EdgeColoring::from_json_str(&read(&e.file)?)?;
            if coloring.n() != e.n || coloring.t() != e.t || coloring.r() != 2 {
                return Err(Error::Malformed(format!(
                    "{} does not hold a t={} n={} graph colouring",
                    e.file, e.t, e.n
                )));
            }
            let total = coloring.total();
            if total != e.total {
                return Err(Error::Malformed(format!(
                    "{} scores {total}, manifest records {}",
                    e.file, e.total
                )));
            }
            entries.insert(
                (e.t, e.n),
                StoreEntry {
                    total,
                    source: e.source.clone(),
                    coloring,
                },
            );
        }
        Ok(WitnessStore { entries })
    }

    /// Loads `manifest.json` and the files it names from `dir`.
    pub fn load_dir(dir: &Path) -> Result<Self> {
        let manifest: Manifest = serde_json::from_str(&std::fs::read_to_string(dir.join("manifest.json"))?)?;
        Self::from_parts(&manifest, |f| Ok(std::fs::read_to_string(dir.join(f))?))
    }

    /// The store compiled into this crate.
    pub fn bundled() -> &'static WitnessStore {
        static STORE: OnceLock<WitnessStore> = OnceLock::new();
        STORE.get_or_init(|| {
            let manifest: Manifest = serde_json::from_str(BUNDLED_MANIFEST).expect("bundled manifest parses");
            Self::from_parts(&manifest, |f| {
                BUNDLED
                    .iter()
                    .find(|(name, _)| *name == f)
                    .map(|(_, text)| text.to_string())
                    .ok_or_else(|| Error::Io(format!("bundled witness {f} missing")))
            })
            .expect("bundled witnesses are consistent")
        })
    }

    pub fn empty() -> Self {
        Self::default()
    }

    pub fn get(&self, t: usize, n: usize) -> Option<&StoreEntry> {
        self.entries.get(&(t, n))
    }

    pub fn total(&self, t: usize, n: usize) -> Option<usize> {
        self.get(t, n).map(|e| e.total)
    }

    pub fn orders(&self, t: usize) -> impl Iterator<Item = usize> + '_ {
        self.entries.keys().filter(move |k| k.0 == t).map(|k| k.1)
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }
}

/// A certified upper bound `f_2(t, n) <= total`.
#[derive(Debug, Clone)]
pub struct Witness {
    pub coloring: EdgeColoring,
    pub total: usize,
    /// Closed-form bound the witness meets.
    pub bound: u64,
    pub base_order: usize,
    /// Gadgets substituted, innermost first.
    pub steps: Vec<&'static str>,
    /// Order before cutting down to `n`.
    pub grown_order: usize,
}

#[derive(Clone, Copy)]
struct Gadget {
    tag: &'static str,
    q: u64,
    /// Added order (and added total) per substitution.
    step: usize,
}

fn gadgets(t: usize) -> Vec<Gadget> {
    let mut g = Vec::new();
    if plane_constructible(t) {
        g.push(Gadget {
            tag: "T18",
            q: t as u64,
            step: t * t,
        });
    }
    if plane_constructible(t - 1) {
        g.push(Gadget {
            tag: "T17",
            q: t as u64 - 1,
            step: (t - 1) * (t - 1) - 1,
        });
    }
    g
}

/// Non-negative counts of each gadget summing to `gap`, fewest substitutions first.
fn decompose(gap: usize, gadgets: &[Gadget]) -> Option<Vec<usize>> {
    match gadgets {
        [] => (gap == 0).then(Vec::new),
        [first, rest @ ..] => (0..=gap / first.step).rev().find_map(|k| {
            decompose(gap - k * first.step, rest).map(|mut v| {
                v.insert(0, k);
                v
            })
        }),
    }
}

/// Builds a colouring of `K_n` with `t ∈ {3, 4, 5}` colours meeting the
/// closed-form upper bound for `f_2(t, n)`, verified by enumeration.
pub fn witness_upper(t: usize, n: usize) -> Result<Witness> {
    witness_upper_with(t, n, WitnessStore::bundled())
}

pub fn witness_upper_with(t: usize, n: usize, store: &WitnessStore) -> Result<Witness> {
    let (bound, _) = match upper_closed_form(t, n) {
        Some(b) if n >= 1 => b,
        _ => {
            return Err(Error::InvalidArgument(format!(
                "witnesses exist for t in 3..=5 and n >= 1, got t={t} n={n}"
            )))
        }
    };
    if n > MAX_VERTICES {
        return Err(Error::SizeLimit(format!("n={n} exceeds {MAX_VERTICES} vertices")));
    }
    let gadgets = gadgets(t);
    // (total, grown order, base order, counts)
    let mut best: Option<(usize, usize, usize, Vec<usize>)> = None;
    for grown in n..=(n + 4).min(MAX_VERTICES) {
        for base in store.orders(t).filter(|&b| b <= grown) {
            let Some(counts) = decompose(grown - base, &gadgets) else {
                continue;
            };
            let total = store.total(t, base).unwrap() + (grown - base);
            if best.as_ref().is_none_or(|b| total < b.0) {
                best = Some((total, grown, base, counts));
            }
        }
    }
    let Some((_, grown, base, counts)) = best else {
        let needed = (1..=n)
            .rev()
            .find(|&b| decompose(n - b, &gadgets).is_some())
            .unwrap_or(n);
        return Err(Error::WitnessUnavailable { t, needed });
    };
    let mut coloring = store.get(t, base).unwrap().coloring.clone();
    let mut steps = Vec::new();
    for (g, &k) in gadgets.iter().zip(&counts) {
        if k == 0 {
            continue;
        }
        let gadget = if g.tag == "T18" {
            coloring_t18(g.q)?
        } else {
            coloring_t17(g.q)?
        };
        for _ in 0..k {
            // vertex 0 of either gadget lies in one maximal clique per colour
            coloring = substitute(&gadget, 0, &coloring)?;
            steps.push(g.tag);
        }
    }
    debug_assert_eq!(coloring.n(), grown);
    if grown > n {
        coloring = coloring.restrict_prefix(n)?;
    }
    let total = coloring.total();
    if total as u64 > bound {
        return Err(Error::ConstructionInvariant(format!(
            "witness for t={t} n={n} scores {total}, above the bound {bound}"
        )));
    }
    Ok(Witness {
        coloring,
        total,
        bound,
        base_order: base,
        steps,
        grown_order: grown,
    })
}
