//! Edge colourings of complete graphs read off a projective plane, and the
//! inverse extraction of a plane from an extremal colouring.

use crate::cliques::CliqueReport;
use crate::coloring::EdgeColoring;
use crate::error::{Error, Result};
use crate::plane::ProjectivePlane;

/// Fixed choices inside a plane: the base line `l0` (line 0), its points
/// `x_0 .. x_q` in id order, and the other lines through `x_0` in id order.
struct Frame {
    plane: ProjectivePlane,
    l0: usize,
    x: Vec<usize>,
    through_x0: Vec<usize>,
}

impl Frame {
    fn new(q: u64) -> Result<Self> {
        let plane = ProjectivePlane::desarguesian(q)?;
        let l0 = 0;
        let x = plane.line(l0).to_vec();
        let through_x0 = plane.lines_through(x[0]).into_iter().filter(|&l| l != l0).collect();
        Ok(Frame {
            plane,
            l0,
            x,
            through_x0,
        })
    }

    /// Index `i` with `x_i` the point where the line through `u`, `v` meets `l0`.
    fn direction(&self, u: usize, v: usize) -> usize {
        let l = self.plane.join(u, v);
        let p = self.plane.meet(l, self.l0);
        self.x.binary_search(&p).expect("meet lies on l0")
    }

    fn off(&self, lines: &[usize]) -> Vec<usize> {
        (0..self.plane.num_points())
            .filter(|&p| lines.iter().all(|&l| !self.plane.on_line(p, l)))
            .collect()
    }
}

/// Order `q²`, `q + 1` colours: points off `l0`; `uv` gets colour `i` when
/// `u`, `v`, `x_i` are collinear.
pub fn coloring_t17(q: u64) -> Result<EdgeColoring> {
    let f = Frame::new(q)?;
    let verts = f.off(&[f.l0]);
    EdgeColoring::from_fn(verts.len(), 2, q as usize + 1, |e| {
        f.direction(verts[e[0]], verts[e[1]])
    })
}

/// Order `q² + 1`, `q` colours: `x_0` (vertex 0) and the points off `l0`.
/// Colour `i - 1` goes to `uv` when its line is `l_i`, the `i`-th other line
/// through `x_0`, or meets `l0` at `x_i`. Vertex 0 lies in exactly one
/// maximal clique of each colour.
pub fn coloring_t18(q: u64) -> Result<EdgeColoring> {
    let f = Frame::new(q)?;
    let mut verts = vec![f.x[0]];
    verts.extend(f.off(&[f.l0]));
    EdgeColoring::from_fn(verts.len(), 2, q as usize, |e| {
        let (u, v) = (verts[e[0]], verts[e[1]]);
        let l = f.plane.join(u, v);
        match f.through_x0.iter().position(|&m| m == l) {
            Some(i) => i,
            None => f.direction(u, v) - 1,
        }
    })
}

/// Order `q² - q`, `q + 1` colours: points off `l0` and `l1` (the least other
/// line through `x_0`), coloured by direction as in [`coloring_t17`].
pub fn coloring_t19a(q: u64) -> Result<EdgeColoring> {
    let f = Frame::new(q)?;
    let l1 = f.through_x0[0];
    let verts = f.off(&[f.l0, l1]);
    EdgeColoring::from_fn(verts.len(), 2, q as usize + 1, |e| {
        f.direction(verts[e[0]], verts[e[1]])
    })
}

/// Recovers a projective plane of order `m` from an `(m+1)`-colouring of
/// `K_{m²}` with at most `m² + m` maximal monochromatic cliques.
///
/// Points `0..m²` are the vertices and `m² + i` stands for colour `i`; the
/// lines are `X ∪ {m² + i}` for each maximal `i`-clique `X`, plus the line of
/// all colour points.
pub fn plane_from_coloring(c: &EdgeColoring) -> Result<ProjectivePlane> {
    let bad = |m: String| Err(Error::NotAPlaneWitness(m));
    if c.r() != 2 {
        return bad(format!("rank {} is not 2", c.r()));
    }
    let m = c.t() - 1;
    if m < 2 || c.n() != m * m {
        return bad(format!("order {} is not ({})² for {} colours", c.n(), m, c.t()));
    }
    let score = c.score();
    if score.total > m * m + m {
        return bad(format!("total {} exceeds {}", score.total, m * m + m));
    }
    for (i, rep) in score.reports.iter().enumerate() {
        if rep.c() != m {
            return bad(format!("colour {i} has {} maximal cliques, expected {m}", rep.c()));
        }
        if let Some(x) = rep.cliques.iter().find(|x| x.len() != m) {
            return bad(format!("colour {i} has a maximal clique of size {}", x.len()));
        }
        let union = rep.cliques.iter().fold(0usize, |acc, x| acc + x.len());
        let cover = rep
            .cliques
            .iter()
            .fold(crate::VertexSet::EMPTY, |acc, x| acc.union(*x))
            .len();
        if union != cover {
            return bad(format!("maximal cliques of colour {i} overlap"));
        }
    }
    let reports: &[CliqueReport] = &score.reports;
    for (i, a) in reports.iter().enumerate() {
        for (j, b) in reports.iter().enumerate().skip(i + 1) {
            for x in &a.cliques {
                for y in &b.cliques {
                    if x.intersection(*y).len() != 1 {
                        return bad(format!(
                            "cliques of colours {i} and {j} meet in {} vertices",
                            x.intersection(*y).len()
                        ));
                    }
                }
            }
        }
    }
    let base = m * m;
    let mut lines: Vec<Vec<usize>> = Vec::with_capacity(base + m + 1);
    for (i, rep) in reports.iter().enumerate() {
        for x in &rep.cliques {
            let mut l = x.to_vec();
            l.push(base + i);
            lines.push(l);
        }
    }
    lines.push((base..=base + m).collect());
    ProjectivePlane::from_lines(m, base + m + 1, lines)
}
