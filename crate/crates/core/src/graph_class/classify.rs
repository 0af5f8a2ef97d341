use std::collections::BTreeMap;

use rayon::prelude::*;
use serde::Serialize;

use super::graph6::to_graph6;
use crate::cliques::{enumerate_maximal_anticliques, enumerate_maximal_cliques};
use crate::error::{Error, Result};
use crate::hypergraph::UniformHypergraph;
use crate::vertex_set::VertexSet;

pub const MAX_CLASSIFY_ORDER: usize = 16;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub enum LabelKind {
    K1Like,
    P4Like,
    C4Like,
    C4BarLike,
}

impl LabelKind {
    pub const ALL: [LabelKind; 4] = [
        LabelKind::K1Like,
        LabelKind::P4Like,
        LabelKind::C4Like,
        LabelKind::C4BarLike,
    ];

    pub fn name(self) -> &'static str {
        match self {
            LabelKind::K1Like => "K1Like",
            LabelKind::P4Like => "P4Like",
            LabelKind::C4Like => "C4Like",
            LabelKind::C4BarLike => "C4BarLike",
        }
    }
}

/// A class membership with its certificate. For `C4BarLike` the sets refer
/// to the complement graph.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ClassLabel {
    pub kind: LabelKind,
    pub x: Vec<usize>,
    pub y: Vec<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub u: Option<[usize; 4]>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ClassificationRecord {
    pub n: usize,
    pub c: usize,
    pub cbar: usize,
    pub d: usize,
    pub dbar: usize,
    pub tau: i64,
    pub omega: usize,
    pub alpha: usize,
    pub split: bool,
    pub labels: Vec<ClassLabel>,
}

impl ClassificationRecord {
    pub fn has(&self, kind: LabelKind) -> bool {
        self.labels.iter().any(|l| l.kind == kind)
    }
}

fn adjacency(g: &UniformHypergraph) -> Vec<VertexSet> {
    let mut adj = vec![VertexSet::EMPTY; g.n()];
    for e in g.edges() {
        adj[e[0]].insert(e[1]);
        adj[e[1]].insert(e[0]);
    }
    adj
}

fn is_clique(adj: &[VertexSet], s: VertexSet) -> bool {
    s.iter().all(|v| s.without(v).is_subset(adj[v]))
}

fn is_anticlique(adj: &[VertexSet], s: VertexSet) -> bool {
    s.iter().all(|v| s.intersection(adj[v]).is_empty())
}

/// First `C₄`-like certificate `(p, q, r, s, X, Y)` in lexicographic order of `(p, q, r, s)`.
fn c4_witness(adj: &[VertexSet], n: usize) -> Option<ClassLabel> {
    let all = VertexSet::full(n);
    for p in 0..n {
        for q in adj[p].iter() {
            for r in adj[q].difference(adj[p]).without(p).iter() {
                for s in adj[r].intersection(adj[p]).difference(adj[q]).without(q).iter() {
                    let u = VertexSet::from_slice(&[p, q, r, s]);
                    let (mut x, mut y) = (VertexSet::EMPTY, VertexSet::EMPTY);
                    let mut ok = true;
                    for v in all.difference(u).iter() {
                        let touch = adj[v].intersection(u);
                        if touch.is_empty() {
                            y.insert(v);
                        } else if touch.contains(p) && touch.contains(q) && touch.len() >= 3 {
                            x.insert(v);
                        } else {
                            ok = false;
                            break;
                        }
                    }
                    if ok && is_clique(adj, x) && is_anticlique(adj, y) {
                        return Some(ClassLabel {
                            kind: LabelKind::C4Like,
                            x: x.to_vec(),
                            y: y.to_vec(),
                            u: Some([p, q, r, s]),
                        });
                    }
                }
            }
        }
    }
    None
}

/// Clique counts, clique and independence numbers, and every class label
/// with a certificate, for a graph of order at most 16.
pub fn classify(g: &UniformHypergraph) -> Result<ClassificationRecord> {
    if g.r() != 2 {
        return Err(Error::InvalidArgument(
            "classification applies to graphs (r = 2)".into(),
        ));
    }
    let n = g.n();
    if n > MAX_CLASSIFY_ORDER {
        return Err(Error::SizeLimit(format!("n={n} exceeds {MAX_CLASSIFY_ORDER}")));
    }
    let cl = enumerate_maximal_cliques(g);
    let an = enumerate_maximal_anticliques(g);
    let adj = adjacency(g);
    let all = VertexSet::full(n);
    let (omega, alpha) = (cl.max_size(), an.max_size());
    let mut labels = Vec::new();

    if omega + alpha == n + 1 {
        let x = *cl.cliques.iter().find(|q| q.len() == omega).unwrap();
        let y = *an.cliques.iter().find(|q| q.len() == alpha).unwrap();
        labels.push(ClassLabel {
            kind: LabelKind::K1Like,
            x: x.to_vec(),
            y: y.to_vec(),
            u: None,
        });
    }
    let mut split = false;
    for &x in &cl.cliques {
        let y = all.difference(x);
        if !is_anticlique(&adj, y) {
            continue;
        }
        split = true;
        // Y is a maximal anticlique when every vertex of X has a neighbour in Y
        let y_maximal = !y.is_empty() && x.iter().all(|v| !adj[v].intersection(y).is_empty());
        if y_maximal && !labels.iter().any(|l: &ClassLabel| l.kind == LabelKind::P4Like) {
            labels.push(ClassLabel {
                kind: LabelKind::P4Like,
                x: x.to_vec(),
                y: y.to_vec(),
                u: None,
            });
        }
    }
    if let Some(l) = c4_witness(&adj, n) {
        labels.push(l);
    }
    let comp = adjacency(&g.complement());
    if let Some(l) = c4_witness(&comp, n) {
        labels.push(ClassLabel {
            kind: LabelKind::C4BarLike,
            ..l
        });
    }

    Ok(ClassificationRecord {
        n,
        c: cl.c(),
        cbar: an.c(),
        d: cl.d(),
        dbar: an.d(),
        tau: (cl.c() + an.c()) as i64 - n as i64,
        omega,
        alpha,
        split,
        labels,
    })
}

/// `c + c̄ >= n + d + d̄ - 1 >= n + 1`.
pub fn check_t28(g: &UniformHypergraph) -> Result<bool> {
    let rec = classify_counts(g)?;
    Ok(rec.0 + rec.1 + 1 >= g.n() + rec.2 + rec.3 && rec.2 + rec.3 >= 2)
}

fn classify_counts(g: &UniformHypergraph) -> Result<(usize, usize, usize, usize)> {
    if g.r() != 2 {
        return Err(Error::InvalidArgument("graphs only (r = 2)".into()));
    }
    let cl = enumerate_maximal_cliques(g);
    let an = enumerate_maximal_anticliques(g);
    Ok((cl.c(), an.c(), cl.d(), an.d()))
}

fn tau(g: &UniformHypergraph) -> i64 {
    let (c, cbar, _, _) = classify_counts(g).expect("graph");
    (c + cbar) as i64 - g.n() as i64
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub struct Violation {
    pub graph6: String,
    pub check: String,
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct CorpusReport {
    pub total: usize,
    /// Graphs carrying each label; `None` counts graphs with no label.
    pub per_class: BTreeMap<String, usize>,
    pub per_tau: BTreeMap<i64, usize>,
    pub violations: Vec<Violation>,
}

/// Every predicate the structure theory asserts about a single graph.
type Checked = (ClassificationRecord, Vec<(&'static str, String)>);

fn check_graph(g: &UniformHypergraph) -> Result<Checked> {
    let rec = classify(g)?;
    let n = rec.n;
    let mut bad = Vec::new();
    let mut expect = |ok: bool, check: &'static str, detail: String| {
        if !ok {
            bad.push((check, detail));
        }
    };
    let k1 = rec.has(LabelKind::K1Like);
    let two = rec.has(LabelKind::P4Like) || rec.has(LabelKind::C4Like) || rec.has(LabelKind::C4BarLike);
    let wa = rec.omega + rec.alpha;
    let t = rec.tau;

    expect(
        rec.c + rec.cbar + 1 >= n + rec.d + rec.dbar && rec.d + rec.dbar >= 2,
        "clique-degree-inequality",
        format!("c={} cbar={} d={} dbar={}", rec.c, rec.cbar, rec.d, rec.dbar),
    );
    expect((t == 1) == k1, "tau1-iff-K1Like", format!("tau={t} K1Like={k1}"));
    expect(
        (t == 2) == two,
        "tau2-iff-P4-C4-C4bar",
        format!("tau={t} labels={:?}", kinds(&rec)),
    );
    expect(!(t == 2 && k1), "tau2-excludes-K1Like", format!("tau={t}"));
    expect(t >= 1, "tau-at-least-1", format!("tau={t}"));
    expect(
        wa > n || t >= 2,
        "omega-alpha-le-n-gives-tau2",
        format!("omega+alpha={wa} tau={t}"),
    );
    expect(
        wa >= n || t >= 3,
        "omega-alpha-lt-n-gives-tau3",
        format!("omega+alpha={wa} tau={t}"),
    );
    if rec.split {
        let a = wa == n + 1 && k1 && t == 1;
        let b = wa == n && rec.has(LabelKind::P4Like) && t == 2;
        expect(
            a != b,
            "split-dichotomy",
            format!("omega+alpha={wa} tau={t} labels={:?}", kinds(&rec)),
        );
    }
    if two {
        expect(
            t == 2 && wa == n,
            "labels-give-tau2",
            format!("omega+alpha={wa} tau={t}"),
        );
    }
    if t <= 2 && wa >= n {
        expect(
            rec.has(LabelKind::C4Like) || rec.has(LabelKind::C4BarLike) || rec.split,
            "tau2-gives-C4-C4bar-or-split",
            format!("omega+alpha={wa} tau={t}"),
        );
    }
    if t <= 2 {
        expect(
            wa >= n,
            "tau2-gives-omega-alpha-ge-n",
            format!("omega+alpha={wa} tau={t}"),
        );
    }
    let adj = adjacency(g);
    for v in 0..n {
        let nonnbr = VertexSet::full(n).difference(adj[v]).without(v);
        if is_clique(&adj, adj[v]) && !nonnbr.is_empty() {
            let sub = tau(&g.induced(nonnbr)?);
            expect(
                sub <= t,
                "non-neighbourhood-tau",
                format!("v={v} tau(G[N̄(v)])={sub} tau={t}"),
            );
        }
    }
    Ok((rec, bad))
}

fn kinds(rec: &ClassificationRecord) -> Vec<&'static str> {
    rec.labels.iter().map(|l| l.kind.name()).collect()
}

/// Classifies every graph in parallel and checks the structure theory
/// against each. Violations come back sorted.
pub fn verify_corpus(graphs: &[UniformHypergraph]) -> Result<CorpusReport> {
    let checked: Vec<Result<Checked>> = graphs.par_iter().map(check_graph).collect();
    let mut per_class: BTreeMap<String, usize> = LabelKind::ALL
        .iter()
        .map(|k| (k.name().to_string(), 0))
        .chain([("None".to_string(), 0)])
        .collect();
    let mut per_tau = BTreeMap::new();
    let mut violations = Vec::new();
    for (g, res) in graphs.iter().zip(checked) {
        let (rec, bad) = res?;
        for l in &rec.labels {
            *per_class.get_mut(l.kind.name()).unwrap() += 1;
        }
        if rec.labels.is_empty() {
            *per_class.get_mut("None").unwrap() += 1;
        }
        *per_tau.entry(rec.tau).or_insert(0) += 1;
        let code = to_graph6(g)?;
        violations.extend(bad.into_iter().map(|(check, detail)| Violation {
            graph6: code.clone(),
            check: check.to_string(),
            detail,
        }));
    }
    violations.sort();
    Ok(CorpusReport {
        total: graphs.len(),
        per_class,
        per_tau,
        violations,
    })
}
