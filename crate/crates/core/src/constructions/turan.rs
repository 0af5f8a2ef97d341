use crate::coloring::EdgeColoring;
use crate::error::{Error, Result};

/// Factorization of `K_n^{n-1}`: the edge missing vertex `x` gets colour
/// `x mod t`, so the classes have balanced sizes.
pub fn turan_factorization(n: usize, t: usize) -> Result<EdgeColoring> {
    if n < 3 {
        return Err(Error::InvalidArgument(format!("order {n} is below 3")));
    }
    EdgeColoring::from_fn(n, n - 1, t, |e| {
        let missing = (0..n).find(|v| !e.contains(v)).expect("edge misses one vertex");
        missing % t
    })
}

/// Edges of the balanced complete `t`-partite graph on `n` vertices.
pub fn turan_edges(n: u64, t: u64) -> u64 {
    let (q, rem) = (n / t, n % t);
    let pairs = |s: u64| s * s.saturating_sub(1) / 2;
    pairs(n) - rem * pairs(q + 1) - (t - rem) * pairs(q)
}
