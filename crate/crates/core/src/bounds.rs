//! Closed-form bounds and exact values for `f_r(t, n)`, and an aggregator
//! that combines them with monotonicity in `n`.
//!
//! All square-root bounds use exact integer arithmetic.

use serde::Serialize;

use crate::colex::{binom, ceil_sqrt};
use crate::constructions::turan_edges;
use crate::constructions::WitnessStore;
use crate::error::{Error, Result};
use crate::field::prime_power;

/// Lower and upper bound for one `(r, t, n)`, with the rule that produced each.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BoundRecord {
    pub r: usize,
    pub t: usize,
    pub n: usize,
    pub lower: u64,
    pub upper: u64,
    pub lower_source: String,
    pub upper_source: String,
    pub exact: bool,
}

/// Exact value when `n <= r + 1`.
pub fn trivial_exact(r: usize, t: usize, n: usize) -> Option<u64> {
    let (t64, n64) = (t as u64, n as u64);
    if n == 0 || r < 2 || t < 2 {
        return None;
    }
    if n < r {
        Some(t64)
    } else if n == r {
        Some((t64 - 1) * n64 + 1)
    } else if n == r + 1 {
        Some(binom(n + 1, 2) + (t64 - 2) * binom(n, 2) - turan_edges(n64, t64))
    } else {
        None
    }
}

/// `⌈t·sqrt(C(n, r-1))⌉`.
pub fn lower_t6(r: usize, t: usize, n: usize) -> Result<u64> {
    if n + 1 < r {
        return Err(Error::InvalidArgument(format!("n={n} is below r-1={}", r - 1)));
    }
    let c = binom(n, r - 1) as u128;
    Ok(ceil_sqrt((t as u128) * (t as u128) * c) as u64)
}

/// `(t-1)·C(n, r-1) + 1`, from colouring everything alike.
pub fn upper_t6(r: usize, t: usize, n: usize) -> Result<u64> {
    if n + 1 < r {
        return Err(Error::InvalidArgument(format!("n={n} is below r-1={}", r - 1)));
    }
    Ok((t as u64 - 1).saturating_mul(binom(n, r - 1)).saturating_add(1))
}

/// Graph lower bound `(t-2)⌈√n⌉ + ⌈√(4n)⌉`, together with the weaker `⌈t√n⌉`.
pub fn lower_t13(t: usize, n: usize) -> (u64, u64) {
    let n = n as u128;
    let t = t as u128;
    let strong = (t - 2) * ceil_sqrt(n) + ceil_sqrt(4 * n);
    let weak = ceil_sqrt(t * t * n);
    (strong as u64, weak as u64)
}

/// `tn - C(n, 2)` and whether it is attained, i.e. `n <= 2⌈t/2⌉`.
pub fn lower_t14(t: usize, n: usize) -> (i64, bool) {
    let bound = (t * n) as i64 - binom(n, 2) as i64;
    (bound, n <= 2 * t.div_ceil(2))
}

/// Three colours.
pub fn upper_t23(n: usize) -> u64 {
    n as u64 + if n % 3 == 1 { 2 } else { 3 }
}

/// Four colours.
pub fn upper_t25(n: usize) -> u64 {
    n as u64
        + match n % 8 {
            1 => 3,
            0 => 4,
            2 | 6 | 7 => 5,
            _ => 6,
        }
}

/// Five colours, every `n`.
pub fn upper_t26(n: usize) -> u64 {
    n as u64 + 10
}

/// Five colours, `n >= 37`.
pub fn upper_t27(n: usize) -> Option<u64> {
    (n >= 37).then(|| {
        n as u64
            + match n % 5 {
                1 => 4,
                2 | 3 => 7,
                4 => 6,
                _ => 5,
            }
    })
}

/// Closed-form graph upper bound for `t ∈ {3, 4, 5}` with its source tag.
pub fn upper_closed_form(t: usize, n: usize) -> Option<(u64, &'static str)> {
    match t {
        3 => Some((upper_t23(n), "T23")),
        4 => Some((upper_t25(n), "T25")),
        5 => Some(match upper_t27(n) {
            Some(u) if u < upper_t26(n) => (u, "T27"),
            _ => (upper_t26(n), "T26"),
        }),
        _ => None,
    }
}

/// Planes this crate builds explicitly: prime powers up to 16.
pub fn plane_constructible(q: usize) -> bool {
    (2..=16).contains(&q) && prime_power(q as u64).is_some()
}

/// Orders with no projective plane: Bruck–Ryser exclusions and order 10.
pub fn plane_known_absent(q: usize) -> bool {
    if q == 10 {
        return true;
    }
    let is_sum_of_two_squares = (0..=q).take_while(|a| a * a <= q).any(|a| {
        let rest = q - a * a;
        let b = crate::colex::isqrt(rest as u128) as usize;
        b * b == rest
    });
    matches!(q % 4, 1 | 2) && !is_sum_of_two_squares
}

#[derive(Clone)]
struct Candidate {
    value: u64,
    source: String,
}

fn better_lower(best: &mut Option<Candidate>, value: u64, source: impl Into<String>) {
    if best.as_ref().is_none_or(|b| value > b.value) {
        *best = Some(Candidate {
            value,
            source: source.into(),
        });
    }
}

fn better_upper(best: &mut Option<Candidate>, value: u64, source: impl Into<String>) {
    if best.as_ref().is_none_or(|b| value < b.value) {
        *best = Some(Candidate {
            value,
            source: source.into(),
        });
    }
}

fn direct_lower(r: usize, t: usize, n: usize) -> Candidate {
    let mut best = None;
    if let Some(v) = trivial_exact(r, t, n) {
        better_lower(&mut best, v, "T2");
    }
    if let Ok(v) = lower_t6(r, t, n) {
        better_lower(&mut best, v, "T6");
    }
    if r == 2 {
        if t == 2 {
            better_lower(&mut best, n as u64 + 1, "T1");
        }
        better_lower(&mut best, lower_t13(t, n).0, "T13");
        let (b, eq) = lower_t14(t, n);
        if eq {
            better_lower(&mut best, b.max(0) as u64, "T14");
        } else if b + 1 > 0 {
            better_lower(&mut best, (b + 1) as u64, "T14-strict");
        }
        let m = t - 1;
        if n == m * m && m >= 2 && plane_known_absent(m) {
            better_lower(&mut best, (m * m + m + 1) as u64, "T20");
        }
    }
    if r == 3 && t == 2 {
        if let Some(v) = triple_exact(n) {
            better_lower(&mut best, v, "S3");
        }
    }
    best.unwrap_or(Candidate {
        value: 0,
        source: "none".into(),
    })
}

/// Exact `f_3(2, n)` for `n <= 7`.
fn triple_exact(n: usize) -> Option<u64> {
    match n {
        1..=6 => Some(((n + 1) * (n + 1) / 4) as u64),
        7 => Some(14),
        _ => None,
    }
}

fn direct_upper(r: usize, t: usize, n: usize, store: &WitnessStore) -> Candidate {
    let mut best = None;
    if let Some(v) = trivial_exact(r, t, n) {
        better_upper(&mut best, v, "T2");
    }
    if let Ok(v) = upper_t6(r, t, n) {
        better_upper(&mut best, v, "T6");
    }
    if r == 2 {
        if t == 2 {
            better_upper(&mut best, n as u64 + 1, "T1");
        }
        let (b, eq) = lower_t14(t, n);
        if eq {
            better_upper(&mut best, b.max(0) as u64, "T14");
        }
        let q = t - 1;
        if plane_constructible(q) {
            if (q - 1) * (q - 1) < n && n <= (q - 1) * q {
                better_upper(&mut best, (q * q + q - 1) as u64, "T19a");
            } else if (q - 1) * q < n && n <= q * q {
                better_upper(&mut best, (q * q + q) as u64, "T19b");
            }
        }
        if let Some((v, src)) = upper_closed_form(t, n) {
            better_upper(&mut best, v, src);
        }
        if let Some(total) = store.total(t, n) {
            better_upper(&mut best, total as u64, "store");
        }
    }
    if r == 3 && t == 2 && n >= 2 {
        better_upper(&mut best, ((n + 1) * (n + 1) / 4) as u64, "T8");
        if n >= 7 {
            better_upper(&mut best, ((n + 1) * (n + 1) / 4 - 2) as u64, "T11");
        }
        if n >= 6 {
            better_upper(&mut best, (n * n / 4 + 5) as u64, "T12");
        }
    }
    best.unwrap_or(Candidate {
        value: u64::MAX,
        source: "none".into(),
    })
}

/// Best bounds this crate knows for `f_r(t, n)`.
///
/// Values at smaller orders are lower bounds here and values at larger orders
/// are upper bounds here, since `f_r(t, n) <= f_r(t, n+1)`. For graphs the
/// plane recursions `f(n + q² - 1) <= f(n) + q² - 1` (order `q = t - 1`) and
/// `f(n + q²) <= f(n) + q²` (order `q = t`) feed the upper side.
pub fn best_known(r: usize, t: usize, n: usize) -> Result<BoundRecord> {
    best_known_with(r, t, n, WitnessStore::bundled())
}

pub fn best_known_with(r: usize, t: usize, n: usize, store: &WitnessStore) -> Result<BoundRecord> {
    if r < 2 || t < 2 || n < 1 {
        return Err(Error::InvalidArgument(format!(
            "need r, t >= 2 and n >= 1, got r={r} t={t} n={n}"
        )));
    }

    let mut lower = direct_lower(r, t, n);
    for m in 1..n {
        let c = direct_lower(r, t, m);
        if c.value > lower.value {
            lower = Candidate {
                value: c.value,
                source: format!("T3<-{}@{m}", c.source),
            };
        }
    }

    let mut steps: Vec<(usize, &'static str)> = Vec::new();
    if r == 2 {
        if plane_constructible(t - 1) {
            steps.push(((t - 1) * (t - 1) - 1, "T17"));
        }
        if plane_constructible(t) {
            steps.push((t * t, "T18"));
        }
    }
    let horizon = n + if r == 2 { t * t + 1 } else { 5 };
    let mut up: Vec<Candidate> = Vec::with_capacity(horizon + 1);
    up.push(Candidate {
        value: u64::MAX,
        source: "none".into(),
    });
    for m in 1..=horizon {
        let mut best = direct_upper(r, t, m, store);
        for &(step, tag) in &steps {
            if step > 0 && m > step && up[m - step].value != u64::MAX {
                let v = up[m - step].value + step as u64;
                if v < best.value {
                    best = Candidate {
                        value: v,
                        source: format!("{tag}-rec"),
                    };
                }
            }
        }
        up.push(best);
    }
    let mut upper = up[n].clone();
    for (m, c) in up.iter().enumerate().skip(n + 1) {
        if c.value < upper.value {
            upper = Candidate {
                value: c.value,
                source: format!("T3<-{}@{m}", c.source),
            };
        }
    }

    Ok(BoundRecord {
        r,
        t,
        n,
        lower: lower.value,
        upper: upper.value,
        exact: lower.value == upper.value,
        lower_source: lower.source,
        upper_source: upper.source,
    })
}
