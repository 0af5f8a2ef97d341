//! The graph6 ASCII format.

use crate::error::{Error, Result};
use crate::hypergraph::UniformHypergraph;

/// Encodes a graph (`r = 2`) as graph6.
pub fn to_graph6(g: &UniformHypergraph) -> Result<String> {
    if g.r() != 2 {
        return Err(Error::InvalidArgument("graph6 encodes graphs only".into()));
    }
    let n = g.n();
    let mut out: Vec<u8> = if n <= 62 {
        vec![n as u8 + 63]
    } else {
        vec![
            126,
            ((n >> 12) & 63) as u8 + 63,
            ((n >> 6) & 63) as u8 + 63,
            (n & 63) as u8 + 63,
        ]
    };
    // upper triangle column by column is exactly colex order
    let slots = g.slots();
    for chunk in 0..slots.div_ceil(6) {
        let mut byte = 0u8;
        for k in 0..6 {
            let idx = chunk * 6 + k;
            byte = (byte << 1) | (idx < slots && g.has_rank(idx)) as u8;
        }
        out.push(byte + 63);
    }
    Ok(String::from_utf8(out).expect("graph6 is ASCII"))
}

/// Decodes one graph6 line (without the trailing newline).
pub fn from_graph6(line: &str) -> Result<UniformHypergraph> {
    let bytes = line.trim_end_matches(['\r', '\n']).as_bytes();
    let bytes = bytes.strip_prefix(b">>graph6<<").unwrap_or(bytes);
    if bytes.iter().any(|&b| !(63..=126).contains(&b)) {
        return Err(Error::Malformed("graph6 bytes must lie in 63..=126".into()));
    }
    let (n, body) = match bytes {
        [] => return Err(Error::Malformed("empty graph6 line".into())),
        [126, 126, ..] => return Err(Error::SizeLimit("graph6 orders above 258047 are not supported".into())),
        [126, a, b, c, rest @ ..] => (
            (((a - 63) as usize) << 12) | (((b - 63) as usize) << 6) | (c - 63) as usize,
            rest,
        ),
        [126, ..] => return Err(Error::Malformed("truncated graph6 order".into())),
        [first, rest @ ..] => ((first - 63) as usize, rest),
    };
    if n == 0 {
        return Err(Error::InvalidArgument("graph6 order 0 is not supported".into()));
    }
    let mut g = UniformHypergraph::empty(n, 2)?;
    let slots = g.slots();
    if body.len() != slots.div_ceil(6) {
        return Err(Error::Malformed(format!(
            "order {n} needs {} data bytes, found {}",
            slots.div_ceil(6),
            body.len()
        )));
    }
    for (chunk, &b) in body.iter().enumerate() {
        let v = b - 63;
        for k in 0..6 {
            let idx = chunk * 6 + k;
            if (v >> (5 - k)) & 1 == 1 {
                if idx >= slots {
                    return Err(Error::Malformed("nonzero padding bits".into()));
                }
                g.set_rank(idx, true);
            }
        }
    }
    Ok(g)
}

/// Parses a corpus with one graph per line; blank lines are skipped.
pub fn read_graph6_corpus(text: &str) -> Result<Vec<UniformHypergraph>> {
    text.lines()
        .enumerate()
        .filter(|(_, l)| !l.trim().is_empty())
        .map(|(i, l)| {
            from_graph6(l.trim()).map_err(|e| Error::Parse {
                line: i + 1,
                msg: e.to_string(),
            })
        })
        .collect()
}
