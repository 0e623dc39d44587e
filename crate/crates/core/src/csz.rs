//! The complementary second Zagreb index: the sum over all edges of
//! |d_u^2 - d_v^2|, kept in exact integer arithmetic throughout.
//!
//! Besides the definitional evaluation this module provides the
//! degree-partition evaluation and exact closed forms for the change of the
//! index under three edge transformations. Each closed form is proved only
//! under specific hypotheses, so the operations validate them eagerly and
//! reject otherwise instead of returning a wrong value.

use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::{DegreePartition, Graph};

/// Exact value of the index. Orders are capped at 10^4 upstream, which
/// keeps every sum below 2^63.
#[derive(
    Clone, Copy, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize,
)]
#[serde(transparent)]
pub struct CszValue(pub u64);

impl CszValue {
    pub const ZERO: CszValue = CszValue(0);

    pub fn get(self) -> u64 {
        self.0
    }
}

impl fmt::Display for CszValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum DeltaError {
    #[error("vertex {v} has degree {got}, not the maximum degree {max}")]
    NotMaxDegree { v: usize, got: usize, max: usize },
    #[error("vertex {v} has degree {got}, not the minimum degree {min}")]
    NotMinDegree { v: usize, got: usize, min: usize },
    #[error("edge {u}-{v} already present")]
    EdgePresent { u: usize, v: usize },
    #[error("edge {u}-{v} absent")]
    EdgeAbsent { u: usize, v: usize },
    #[error("endpoints must differ, got vertex {v} twice")]
    SameVertex { v: usize },
    #[error("vertex {v} out of range for order {n}")]
    OutOfRange { v: usize, n: usize },
    #[error("maximum degree {max} is not n-1 = {want}")]
    MaxDegreeNotFull { max: usize, want: usize },
    #[error("every vertex has maximum degree; the removal formula needs a non-maximum endpoint")]
    AllMaxDegree,
}

fn sq(d: usize) -> u64 {
    let d = d as u64;
    d * d
}

fn abs_diff_sq(a: usize, b: usize) -> u64 {
    sq(a).abs_diff(sq(b))
}

/// Evaluates the index from the definition: one term per edge.
pub fn csz(g: &Graph) -> CszValue {
    let degs = g.degrees();
    let total = g.edges().map(|(u, v)| abs_diff_sq(degs[u], degs[v])).sum();
    CszValue(total)
}

/// Evaluates the index from a degree partition: cross-class edge counts
/// times squared-degree differences. Same-class edges contribute nothing.
pub fn csz_via_partition(p: &DegreePartition) -> CszValue {
    let ds = p.degrees();
    let ell = p.class_count();
    let mut total = 0u64;
    for i in 0..ell {
        for j in (i + 1)..ell {
            total += p.cross_edges(i, j) * (sq(ds[j]) - sq(ds[i]));
        }
    }
    CszValue(total)
}

fn check_vertex(g: &Graph, v: usize) -> Result<(), DeltaError> {
    if v >= g.order() {
        return Err(DeltaError::OutOfRange { v, n: g.order() });
    }
    Ok(())
}

/// Exact change of the index from adding edge `uv` where `v` has maximum
/// degree and `u` is not adjacent to it.
///
/// Writing D for the maximum degree, d for the degree of `u`, and N1 for
/// the neighbors of `u` with degree strictly above d, the change equals
/// `D(2D+1) + (d - 2|N1|)(2d+1) + (D+1)^2 - (d+1)^2`. It is strictly
/// positive on connected graphs of order at least 3.
pub fn delta_add_edge_maxdeg(g: &Graph, v: usize, u: usize) -> Result<i64, DeltaError> {
    check_vertex(g, v)?;
    check_vertex(g, u)?;
    if u == v {
        return Err(DeltaError::SameVertex { v });
    }
    let max = g.max_degree();
    let dv = g.degree(v);
    if dv != max {
        return Err(DeltaError::NotMaxDegree { v, got: dv, max });
    }
    if g.has_edge(u, v) {
        return Err(DeltaError::EdgePresent { u, v });
    }
    let du = g.degree(u);
    let n1 = g.neighbors(u).filter(|&y| g.degree(y) > du).count();

    let big = max as i64;
    let d = du as i64;
    let n1 = n1 as i64;
    Ok(big * (2 * big + 1) + (d - 2 * n1) * (2 * d + 1) + (big + 1).pow(2) - (d + 1).pow(2))
}

/// Exact change of the index from removing an edge whose endpoints both
/// have the minimum degree: `2(m-1)(2m-1)` for minimum degree m. The
/// identity does not require the result to stay connected.
pub fn delta_remove_min_min(g: &Graph, x: usize, y: usize) -> Result<i64, DeltaError> {
    check_vertex(g, x)?;
    check_vertex(g, y)?;
    if x == y {
        return Err(DeltaError::SameVertex { v: x });
    }
    if !g.has_edge(x, y) {
        return Err(DeltaError::EdgeAbsent { u: x, v: y });
    }
    let min = g.min_degree();
    for v in [x, y] {
        let d = g.degree(v);
        if d != min {
            return Err(DeltaError::NotMinDegree { v, got: d, min });
        }
    }
    let m = min as i64;
    Ok(2 * (m - 1) * (2 * m - 1))
}

/// Exact change of the index from removing edge `xy` where `x` has degree
/// n-1, every maximum-degree vertex has degree n-1, and `y` has the
/// minimum degree but not the maximum (so the graph is not complete).
///
/// With k maximum-degree vertices and d the degree of `y`, the change is
/// `(2k-n)(2n-3) + (d-1)(2d-1) + d^2 - (n-1)^2`.
pub fn delta_remove_max_min(g: &Graph, x: usize, y: usize) -> Result<i64, DeltaError> {
    check_vertex(g, x)?;
    check_vertex(g, y)?;
    if x == y {
        return Err(DeltaError::SameVertex { v: x });
    }
    let n = g.order();
    let max = g.max_degree();
    if max != n - 1 {
        return Err(DeltaError::MaxDegreeNotFull { max, want: n - 1 });
    }
    let dx = g.degree(x);
    if dx != max {
        return Err(DeltaError::NotMaxDegree { v: x, got: dx, max });
    }
    let min = g.min_degree();
    let dy = g.degree(y);
    if dy != min {
        return Err(DeltaError::NotMinDegree { v: y, got: dy, min });
    }
    // Complete graphs make the separation of y's terms from the
    // maximum-degree terms collapse; the closed form is wrong there.
    if dy == max {
        return Err(DeltaError::AllMaxDegree);
    }
    if !g.has_edge(x, y) {
        return Err(DeltaError::EdgeAbsent { u: x, v: y });
    }
    let k = g.max_degree_vertices().len() as i64;
    let n = n as i64;
    let d = dy as i64;
    Ok((2 * k - n) * (2 * n - 3) + (d - 1) * (2 * d - 1) + d * d - (n - 1).pow(2))
}

/// Exact change of the index from toggling edge `uv`, with no structural
/// hypotheses. Costs O(deg u + deg v) instead of re-evaluating every edge.
pub fn toggle_delta(g: &Graph, u: usize, v: usize) -> Result<i64, DeltaError> {
    check_vertex(g, u)?;
    check_vertex(g, v)?;
    if u == v {
        return Err(DeltaError::SameVertex { v: u });
    }
    let adding = !g.has_edge(u, v);
    let du = g.degree(u);
    let dv = g.degree(v);
    let (du_new, dv_new) = if adding { (du + 1, dv + 1) } else { (du - 1, dv - 1) };

    let mut delta = 0i64;
    // Edges incident to exactly one toggled endpoint.
    for (end, d_old, d_new, other) in [(u, du, du_new, v), (v, dv, dv_new, u)] {
        for w in g.neighbors(end) {
            if w == other {
                continue;
            }
            let dw = g.degree(w);
            delta += abs_diff_sq(d_new, dw) as i64 - abs_diff_sq(d_old, dw) as i64;
        }
    }
    if adding {
        delta += abs_diff_sq(du_new, dv_new) as i64;
    } else {
        delta -= abs_diff_sq(du, dv) as i64;
    }
    Ok(delta)
}
