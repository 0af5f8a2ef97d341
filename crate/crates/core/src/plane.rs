//! Finite projective planes: the Desarguesian plane `PG(2, q)` and an axiom
//! checker for arbitrary incidence structures.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::field::FiniteField;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ProjectivePlane {
    q: usize,
    num_points: usize,
    lines: Vec<Vec<usize>>,
    /// `through[a * num_points + b]`: the line joining distinct points `a`, `b`.
    through: Vec<u32>,
}

/// Plane export `{"q", "lines"}`.
#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
#[serde(deny_unknown_fields)]
pub struct PlaneJson {
    pub q: usize,
    pub lines: Vec<Vec<usize>>,
}

fn normalized_triples(f: &FiniteField) -> Vec<[u8; 3]> {
    let q = f.order() as u8;
    let mut out = Vec::new();
    for x in 0..q {
        for y in 0..q {
            for z in 0..q {
                let v = [x, y, z];
                if v.iter().find(|&&c| c != 0) == Some(&1) {
                    out.push(v);
                }
            }
        }
    }
    out.sort_unstable();
    out
}

impl ProjectivePlane {
    /// `PG(2, q)`: points and lines are normalised homogeneous coordinate
    /// triples (first nonzero entry 1), numbered in lexicographic order.
    pub fn desarguesian(q: u64) -> Result<Self> {
        let f = FiniteField::new(q)?;
        let coords = normalized_triples(&f);
        let lines: Vec<Vec<usize>> = coords
            .iter()
            .map(|l| {
                coords
                    .iter()
                    .enumerate()
                    .filter(|(_, p)| {
                        let dot = (0..3).fold(0u8, |acc, i| f.add(acc, f.mul(l[i], p[i])));
                        dot == 0
                    })
                    .map(|(i, _)| i)
                    .collect()
            })
            .collect();
        let plane = Self::from_lines(q as usize, coords.len(), lines)?;
        Ok(plane)
    }

    /// Checks all plane axioms and builds the join table.
    pub fn from_lines(q: usize, num_points: usize, mut lines: Vec<Vec<usize>>) -> Result<Self> {
        let bad = |m: String| Err(Error::NotAPlaneWitness(m));
        if q < 2 {
            return bad(format!("order {q} is below 2"));
        }
        let expect = q * q + q + 1;
        if num_points != expect || lines.len() != expect {
            return bad(format!(
                "order {q} needs {expect} points and lines, got {num_points} and {}",
                lines.len()
            ));
        }
        let mut through = vec![u32::MAX; num_points * num_points];
        for (id, line) in lines.iter_mut().enumerate() {
            line.sort_unstable();
            line.dedup();
            if line.len() != q + 1 {
                return bad(format!("line {id} has {} points, expected {}", line.len(), q + 1));
            }
            if line.last().is_some_and(|&p| p >= num_points) {
                return bad(format!("line {id} mentions an unknown point"));
            }
            for (i, &a) in line.iter().enumerate() {
                for &b in &line[i + 1..] {
                    if through[a * num_points + b] != u32::MAX {
                        return bad(format!("points {a} and {b} lie on two lines"));
                    }
                    through[a * num_points + b] = id as u32;
                    through[b * num_points + a] = id as u32;
                }
            }
        }
        for a in 0..num_points {
            for b in a + 1..num_points {
                if through[a * num_points + b] == u32::MAX {
                    return bad(format!("points {a} and {b} share no line"));
                }
            }
        }
        for (i, l) in lines.iter().enumerate() {
            for (j, m) in lines.iter().enumerate().skip(i + 1) {
                let common = l.iter().filter(|p| m.binary_search(p).is_ok()).count();
                if common != 1 {
                    return bad(format!("lines {i} and {j} meet in {common} points"));
                }
            }
        }
        let plane = ProjectivePlane {
            q,
            num_points,
            lines,
            through,
        };
        if plane.quadrangle().is_none() {
            return bad("no four points with no three collinear".into());
        }
        Ok(plane)
    }

    pub fn from_json(j: &PlaneJson) -> Result<Self> {
        let n = j.q * j.q + j.q + 1;
        Self::from_lines(j.q, n, j.lines.clone())
    }

    pub fn to_json(&self) -> PlaneJson {
        PlaneJson {
            q: self.q,
            lines: self.lines.clone(),
        }
    }

    pub fn order(&self) -> usize {
        self.q
    }

    pub fn num_points(&self) -> usize {
        self.num_points
    }

    pub fn lines(&self) -> &[Vec<usize>] {
        &self.lines
    }

    pub fn line(&self, id: usize) -> &[usize] {
        &self.lines[id]
    }

    /// The line through two distinct points.
    #[inline]
    pub fn join(&self, a: usize, b: usize) -> usize {
        debug_assert_ne!(a, b);
        self.through[a * self.num_points + b] as usize
    }

    pub fn on_line(&self, p: usize, line: usize) -> bool {
        self.lines[line].binary_search(&p).is_ok()
    }

    /// Lines through `p`, ascending.
    pub fn lines_through(&self, p: usize) -> Vec<usize> {
        (0..self.lines.len()).filter(|&l| self.on_line(p, l)).collect()
    }

    /// The common point of two distinct lines.
    pub fn meet(&self, l: usize, m: usize) -> usize {
        *self.lines[l]
            .iter()
            .find(|p| self.lines[m].binary_search(p).is_ok())
            .expect("distinct lines meet")
    }

    fn collinear(&self, a: usize, b: usize, c: usize) -> bool {
        self.on_line(c, self.join(a, b))
    }

    /// Four points, no three collinear.
    pub fn quadrangle(&self) -> Option<[usize; 4]> {
        let n = self.num_points;
        for a in 0..n {
            for b in a + 1..n {
                for c in b + 1..n {
                    if self.collinear(a, b, c) {
                        continue;
                    }
                    for d in c + 1..n {
                        if !self.collinear(a, b, d) && !self.collinear(a, c, d) && !self.collinear(b, c, d) {
                            return Some([a, b, c, d]);
                        }
                    }
                }
            }
        }
        None
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pg2_small_orders() {
        for q in [2u64, 3, 4, 5, 7, 8, 9, 11, 13, 16] {
            let p = ProjectivePlane::desarguesian(q).unwrap();
            let q = q as usize;
            assert_eq!(p.num_points(), q * q + q + 1);
            assert_eq!(p.lines().len(), q * q + q + 1);
            assert!(p.lines().iter().all(|l| l.len() == q + 1));
        }
    }

    #[test]
    fn unsupported_orders() {
        for q in [1u64, 6, 10, 12, 17, 25] {
            assert!(matches!(
                ProjectivePlane::desarguesian(q),
                Err(Error::UnsupportedOrder(_))
            ));
        }
    }

    #[test]
    fn checker_rejects_broken_planes() {
        let p = ProjectivePlane::desarguesian(3).unwrap();
        let mut j = p.to_json();
        let moved = j.lines[0][0];
        j.lines[0][0] = j.lines[1].iter().copied().find(|x| !j.lines[0].contains(x)).unwrap();
        assert_ne!(moved, j.lines[0][0]);
        assert!(ProjectivePlane::from_json(&j).is_err());
        let mut short = p.to_json();
        short.lines.pop();
        assert!(ProjectivePlane::from_json(&short).is_err());
        assert!(ProjectivePlane::from_json(&p.to_json()).is_ok());
    }

    #[test]
    fn fano_lines() {
        let p = ProjectivePlane::desarguesian(2).unwrap();
        let l0 = p.line(0);
        assert_eq!(l0.len(), 3);
        for a in 0..7 {
            for b in a + 1..7 {
                let l = p.join(a, b);
                assert!(p.on_line(a, l) && p.on_line(b, l));
            }
        }
    }
}
