//! k-cell distances between vertices.
//!
//! The k-cell distance d^(k)(x, y) is the minimum number of k-cells in a
//! path of k-cells whose consecutive members share a (k-1)-cell, whose first
//! member contains x and whose last contains y. d^(k)(x, x) = 0 by
//! convention, so d^(1) coincides with graph distance on the 1-skeleton.

use std::collections::{BTreeMap, VecDeque};

use thiserror::Error;

use crate::cell::{Cell, VertexId};
use crate::complex::Complex;

#[derive(Clone, Debug, Error, PartialEq, Eq)]
pub enum MetricError {
    #[error("vertex {0} is not in the complex")]
    VertexNotInComplex(VertexId),
    #[error("cell dimension {k} out of range 1..={top}")]
    BadDimension { k: usize, top: usize },
}

/// Per-vertex k-cell distances from a fixed origin. `None` means
/// unreachable.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DistanceField {
    pub origin: VertexId,
    pub k: usize,
    pub dist: BTreeMap<VertexId, Option<usize>>,
}

impl DistanceField {
    pub fn get(&self, v: VertexId) -> Option<usize> {
        self.dist.get(&v).copied().flatten()
    }

    /// Largest finite distance in the field.
    pub fn max_finite(&self) -> Option<usize> {
        self.dist.values().filter_map(|d| *d).max()
    }
}

fn check_args(k: &Complex, dim: usize, vs: &[VertexId]) -> Result<(), MetricError> {
    if dim < 1 || dim > k.top_dim() {
        return Err(MetricError::BadDimension {
            k: dim,
            top: k.top_dim(),
        });
    }
    for v in vs {
        if !k.contains_vertex(*v) {
            return Err(MetricError::VertexNotInComplex(*v));
        }
    }
    Ok(())
}

/// Breadth-first traversal over k-cells glued along (k-1)-cells, seeded at
/// every k-cell containing `origin` (level 1). Returns each cell's level.
fn cell_levels(k: &Complex, dim: usize, origin: VertexId) -> BTreeMap<Cell, usize> {
    let mut level: BTreeMap<Cell, usize> = BTreeMap::new();
    let mut queue: VecDeque<Cell> = VecDeque::new();
    for c in k.cells(dim) {
        if c.contains_vertex(origin) {
            level.insert(c.clone(), 1);
            queue.push_back(c.clone());
        }
    }
    while let Some(c) = queue.pop_front() {
        let next = level[&c] + 1;
        for face in c.facets() {
            for nb in k.cofaces(&face) {
                if nb.dim() == dim && !level.contains_key(nb) {
                    level.insert(nb.clone(), next);
                    queue.push_back(nb.clone());
                }
            }
        }
    }
    level
}

/// d^(k)(x, y); `None` when no (k-1)-connected k-cell path joins them.
pub fn k_cell_distance(
    k: &Complex,
    dim: usize,
    x: VertexId,
    y: VertexId,
) -> Result<Option<usize>, MetricError> {
    check_args(k, dim, &[x, y])?;
    if x == y {
        return Ok(Some(0));
    }
    let levels = cell_levels(k, dim, x);
    Ok(levels
        .iter()
        .filter(|(c, _)| c.contains_vertex(y))
        .map(|(_, &l)| l)
        .min())
}

/// One traversal that computes d^(k)(origin, v) for every vertex v.
pub fn distance_field(
    k: &Complex,
    dim: usize,
    origin: VertexId,
) -> Result<DistanceField, MetricError> {
    check_args(k, dim, &[origin])?;
    let levels = cell_levels(k, dim, origin);
    let mut dist: BTreeMap<VertexId, Option<usize>> =
        k.vertex_ids().map(|v| (v, None)).collect();
    for (c, &l) in &levels {
        for v in c.vertices() {
            let entry = dist.get_mut(v).expect("cell vertex in complex");
            if entry.map_or(true, |cur| l < cur) {
                *entry = Some(l);
            }
        }
    }
    dist.insert(origin, Some(0));
    Ok(DistanceField {
        origin,
        k: dim,
        dist,
    })
}
