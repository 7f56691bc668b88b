//! Vertices and cells (simplices) in canonical form.

use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

/// Index of a 0-cell within a complex.
///
/// Ids are dense non-negative integers; loaders may renumber but must report
/// the mapping.
#[derive(
    Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize, Default,
)]
pub struct VertexId(pub u32);

impl fmt::Display for VertexId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

#[derive(Clone, Debug, Error, PartialEq, Eq)]
pub enum CellError {
    #[error("cell {0:?} repeats a vertex")]
    DuplicateVertexInCell(Vec<u32>),
    #[error("a cell needs at least one vertex")]
    EmptyCell,
    #[error("cell {0} has dimension 0 and no boundary")]
    ZeroDimCell(Cell),
}

/// A simplex stored as its strictly increasing vertex tuple.
///
/// The dimension is `vertices.len() - 1`. Two cells are equal iff their
/// vertex sets are; ordering is lexicographic on the vertex tuple, which
/// every deterministic tie-break in this crate relies on.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Cell {
    vertices: Vec<VertexId>,
}

impl Cell {
    /// Builds a cell from vertices in any order, rejecting repeats.
    pub fn new(vertices: impl IntoIterator<Item = VertexId>) -> Result<Self, CellError> {
        let mut vs: Vec<VertexId> = vertices.into_iter().collect();
        if vs.is_empty() {
            return Err(CellError::EmptyCell);
        }
        vs.sort_unstable();
        if vs.windows(2).any(|w| w[0] == w[1]) {
            return Err(CellError::DuplicateVertexInCell(
                vs.iter().map(|v| v.0).collect(),
            ));
        }
        Ok(Self { vertices: vs })
    }

    /// Convenience constructor from raw indices; panics on repeats.
    /// Intended for literals in tests and fixtures.
    pub fn from_ids(ids: &[u32]) -> Self {
        Self::new(ids.iter().map(|&i| VertexId(i))).expect("valid cell literal")
    }

    pub fn vertex(v: VertexId) -> Self {
        Self {
            vertices: vec![v],
        }
    }

    pub fn dim(&self) -> usize {
        self.vertices.len() - 1
    }

    pub fn vertices(&self) -> &[VertexId] {
        &self.vertices
    }

    pub fn contains_vertex(&self, v: VertexId) -> bool {
        self.vertices.binary_search(&v).is_ok()
    }

    /// True iff `self`'s vertex set is contained in `other`'s.
    pub fn is_face_of(&self, other: &Cell) -> bool {
        if self.vertices.len() > other.vertices.len() {
            return false;
        }
        self.vertices.iter().all(|v| other.contains_vertex(*v))
    }

    /// The common face of two cells, if they share any vertex.
    pub fn intersection(&self, other: &Cell) -> Option<Cell> {
        let common: Vec<VertexId> = self
            .vertices
            .iter()
            .copied()
            .filter(|v| other.contains_vertex(*v))
            .collect();
        if common.is_empty() {
            None
        } else {
            Some(Cell { vertices: common })
        }
    }

    /// All (dim-1)-faces. Errors on 0-cells, which have no boundary here.
    pub fn boundary(&self) -> Result<Vec<Cell>, CellError> {
        if self.dim() == 0 {
            return Err(CellError::ZeroDimCell(self.clone()));
        }
        Ok(self.facets())
    }

    /// All (dim-1)-faces of a positive-dimensional cell; empty for vertices.
    pub fn facets(&self) -> Vec<Cell> {
        if self.dim() == 0 {
            return Vec::new();
        }
        (0..self.vertices.len())
            .map(|skip| {
                let vs = self
                    .vertices
                    .iter()
                    .enumerate()
                    .filter(|(i, _)| *i != skip)
                    .map(|(_, v)| *v)
                    .collect();
                Cell { vertices: vs }
            })
            .collect()
    }

    /// Every nonempty face of the cell, the cell itself included.
    pub fn all_faces(&self) -> Vec<Cell> {
        let n = self.vertices.len();
        let mut out = Vec::with_capacity((1usize << n) - 1);
        for mask in 1u32..(1 << n) {
            let vs: Vec<VertexId> = (0..n)
                .filter(|i| mask & (1 << i) != 0)
                .map(|i| self.vertices[i])
                .collect();
            out.push(Cell { vertices: vs });
        }
        out
    }

    /// The cell spanned by this cell's vertices together with `extra`.
    /// Used when coning a subdivision over the opposite face.
    pub fn join(&self, extra: &[VertexId]) -> Result<Cell, CellError> {
        Cell::new(self.vertices.iter().copied().chain(extra.iter().copied()))
    }

    /// Removes one vertex; `None` if absent or the cell is a vertex.
    pub fn without_vertex(&self, v: VertexId) -> Option<Cell> {
        if !self.contains_vertex(v) || self.dim() == 0 {
            return None;
        }
        Some(Cell {
            vertices: self
                .vertices
                .iter()
                .copied()
                .filter(|&u| u != v)
                .collect(),
        })
    }
}

impl fmt::Debug for Cell {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for Cell {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, v) in self.vertices.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{}", v.0)?;
        }
        write!(f, "]")
    }
}
