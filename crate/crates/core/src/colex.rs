//! Binomial coefficients and colexicographic ranking of r-subsets.
//!
//! The colex rank of `{v_1 < .. < v_r}` is `C(v_1,1) + C(v_2,2) + .. + C(v_r,r)`.
//! The r-subsets of `{0, .., m-1}` occupy exactly the ranks `0 .. C(m,r)`, so a
//! rank never depends on the ambient vertex count.

use crate::vertex_set::{VertexSet, MAX_VERTICES};

const TABLE: usize = MAX_VERTICES + 1;

static BINOM: std::sync::OnceLock<Vec<u64>> = std::sync::OnceLock::new();

fn table() -> &'static [u64] {
    BINOM.get_or_init(|| {
        let mut t = vec![0u64; TABLE * TABLE];
        for n in 0..TABLE {
            t[n * TABLE] = 1;
            for k in 1..=n {
                let a = t[(n - 1) * TABLE + k - 1];
                let b = if k < n { t[(n - 1) * TABLE + k] } else { 0 };
                t[n * TABLE + k] = a.saturating_add(b);
            }
        }
        t
    })
}

/// `C(n, k)`, saturating at `u64::MAX`. Zero when `k > n`.
#[inline]
pub fn binom(n: usize, k: usize) -> u64 {
    if k > n {
        return 0;
    }
    if n < TABLE {
        table()[n * TABLE + k]
    } else {
        let k = k.min(n - k);
        let mut acc: u128 = 1;
        for i in 0..k {
            acc = acc * (n - i) as u128 / (i + 1) as u128;
            if acc > u64::MAX as u128 {
                return u64::MAX;
            }
        }
        acc as u64
    }
}

/// Colex rank of a strictly increasing vertex list.
#[inline]
pub fn rank(sorted: &[usize]) -> usize {
    sorted.iter().enumerate().map(|(i, &v)| binom(v, i + 1) as usize).sum()
}

/// Colex rank of a set of exactly `r` vertices.
#[inline]
pub fn rank_set(s: VertexSet) -> usize {
    s.iter().enumerate().map(|(i, v)| binom(v, i + 1) as usize).sum()
}

/// Inverse of [`rank`]: the `r`-subset with the given colex rank, ascending.
pub fn unrank(mut idx: usize, r: usize) -> Vec<usize> {
    let mut out = vec![0usize; r];
    let mut hi = MAX_VERTICES;
    for i in (1..=r).rev() {
        // largest v < hi with C(v, i) <= idx
        let mut v = i - 1;
        while v + 1 < hi && binom(v + 1, i) as usize <= idx {
            v += 1;
        }
        out[i - 1] = v;
        idx -= binom(v, i) as usize;
        hi = v;
    }
    out
}

/// All `k`-subsets of `s`, as vertex sets, in colex order of their positions.
pub fn subsets_of(s: VertexSet, k: usize) -> impl Iterator<Item = VertexSet> {
    let members = s.to_vec();
    KSubsets::new(members.len(), k).map(move |idx| idx.iter().map(|&i| members[i]).collect())
}

/// Iterator over `k`-subsets of `{0, .., m-1}` as ascending index vectors, in colex order.
pub struct KSubsets {
    cur: Vec<usize>,
    m: usize,
    done: bool,
}

impl KSubsets {
    pub fn new(m: usize, k: usize) -> Self {
        KSubsets {
            cur: (0..k).collect(),
            m,
            done: k > m,
        }
    }
}

impl Iterator for KSubsets {
    type Item = Vec<usize>;

    fn next(&mut self) -> Option<Vec<usize>> {
        if self.done {
            return None;
        }
        let out = self.cur.clone();
        // colex successor: bump the lowest position that can move up
        let k = self.cur.len();
        let mut i = 0;
        loop {
            if i == k {
                self.done = true;
                break;
            }
            let limit = if i + 1 < k { self.cur[i + 1] } else { self.m };
            if self.cur[i] + 1 < limit {
                self.cur[i] += 1;
                for (j, slot) in self.cur.iter_mut().enumerate().take(i) {
                    *slot = j;
                }
                break;
            }
            i += 1;
        }
        Some(out)
    }
}

/// Integer square root rounded down.
pub fn isqrt(n: u128) -> u128 {
    if n < 2 {
        return n;
    }
    let mut x = (n as f64).sqrt() as u128;
    while x * x > n {
        x -= 1;
    }
    while (x + 1) * (x + 1) <= n {
        x += 1;
    }
    x
}

/// Integer square root rounded up.
pub fn ceil_sqrt(n: u128) -> u128 {
    let s = isqrt(n);
    if s * s == n {
        s
    } else {
        s + 1
    }
}
