//! Face-closed simplicial complexes with incidence queries and the
//! validation battery (closed pseudomanifold, strong connectivity,
//! orientability, geometric intersection property, Euler characteristic).

use std::collections::{BTreeMap, BTreeSet, VecDeque};

use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};
use thiserror::Error;

use crate::cell::{Cell, CellError, VertexId};
use crate::geom;

#[derive(Clone, Debug, Error, PartialEq)]
pub enum ComplexError {
    #[error(transparent)]
    Cell(#[from] CellError),
    #[error("no maximal cells given")]
    NoCells,
    #[error("coordinates mix ambient dimensions {0} and {1}")]
    MixedAmbientDim(usize, usize),
    #[error("vertex {0} has no coordinates while others do")]
    MissingCoordinates(VertexId),
    #[error("cell {0} is not in the complex")]
    CellNotInComplex(Cell),
    #[error("vertex {0} is not in the complex")]
    VertexNotInComplex(VertexId),
}

/// A finite face-closed simplicial complex.
///
/// Immutable after construction; operations that change the complex
/// (subdivision) hand back a new value.
#[derive(Clone, Debug, PartialEq)]
pub struct Complex {
    /// `cells_by_dim[k]` holds every k-cell.
    cells_by_dim: Vec<BTreeSet<Cell>>,
    /// k-cell -> the (k+1)-cells containing it.
    coboundary: BTreeMap<Cell, BTreeSet<Cell>>,
    /// Optional embedding; all points share one ambient dimension.
    coords: Option<BTreeMap<VertexId, Vec<f64>>>,
}

impl Complex {
    /// Builds the face closure of a set of maximal cells.
    ///
    /// Every face of every input cell is materialized exactly once and the
    /// coboundary map is completed. Coordinates, when provided, must cover
    /// every referenced vertex with a consistent ambient dimension.
    pub fn from_maximal_cells(
        maximal: &[Cell],
        coords: Option<BTreeMap<VertexId, Vec<f64>>>,
    ) -> Result<Self, ComplexError> {
        if maximal.is_empty() {
            return Err(ComplexError::NoCells);
        }
        let top = maximal.iter().map(Cell::dim).max().unwrap();
        let mut cells_by_dim: Vec<BTreeSet<Cell>> = vec![BTreeSet::new(); top + 1];
        for cell in maximal {
            for face in cell.all_faces() {
                cells_by_dim[face.dim()].insert(face);
            }
        }
        let mut coboundary: BTreeMap<Cell, BTreeSet<Cell>> = BTreeMap::new();
        for k in 1..=top {
            for cell in &cells_by_dim[k] {
                for face in cell.facets() {
                    coboundary
                        .entry(face)
                        .or_default()
                        .insert(cell.clone());
                }
            }
        }
        if let Some(map) = &coords {
            let mut ambient = None;
            for v in cells_by_dim[0].iter().map(|c| c.vertices()[0]) {
                match map.get(&v) {
                    None => return Err(ComplexError::MissingCoordinates(v)),
                    Some(p) => match ambient {
                        None => ambient = Some(p.len()),
                        Some(n) if n != p.len() => {
                            return Err(ComplexError::MixedAmbientDim(n, p.len()))
                        }
                        _ => {}
                    },
                }
            }
        }
        Ok(Self {
            cells_by_dim,
            coboundary,
            coords,
        })
    }

    pub fn top_dim(&self) -> usize {
        self.cells_by_dim.len() - 1
    }

    /// All k-cells; empty set for k above the top dimension.
    pub fn cells(&self, k: usize) -> &BTreeSet<Cell> {
        static EMPTY: std::sync::OnceLock<BTreeSet<Cell>> = std::sync::OnceLock::new();
        self.cells_by_dim
            .get(k)
            .unwrap_or_else(|| EMPTY.get_or_init(BTreeSet::new))
    }

    pub fn contains(&self, cell: &Cell) -> bool {
        self.cells_by_dim
            .get(cell.dim())
            .is_some_and(|s| s.contains(cell))
    }

    pub fn contains_vertex(&self, v: VertexId) -> bool {
        self.cells_by_dim[0].contains(&Cell::vertex(v))
    }

    pub fn vertex_ids(&self) -> impl Iterator<Item = VertexId> + '_ {
        self.cells_by_dim[0].iter().map(|c| c.vertices()[0])
    }

    pub fn vertex_count(&self) -> usize {
        self.cells_by_dim[0].len()
    }

    /// The (k+1)-cells containing a k-cell.
    pub fn cofaces(&self, cell: &Cell) -> &BTreeSet<Cell> {
        static EMPTY: std::sync::OnceLock<BTreeSet<Cell>> = std::sync::OnceLock::new();
        self.coboundary
            .get(cell)
            .unwrap_or_else(|| EMPTY.get_or_init(BTreeSet::new))
    }

    pub fn coords(&self) -> Option<&BTreeMap<VertexId, Vec<f64>>> {
        self.coords.as_ref()
    }

    pub fn coords_of(&self, v: VertexId) -> Option<&Vec<f64>> {
        self.coords.as_ref().and_then(|m| m.get(&v))
    }

    /// Same complex without its embedding.
    pub fn strip_coords(&self) -> Complex {
        let mut c = self.clone();
        c.coords = None;
        c
    }

    /// Maximal cells: cells with no coface.
    pub fn maximal_cells(&self) -> Vec<Cell> {
        self.cells_by_dim
            .iter()
            .flatten()
            .filter(|c| self.cofaces(c).is_empty())
            .cloned()
            .collect()
    }

    /// Cells of every dimension containing `c` (the open star), `c` included.
    pub fn cofaces_all_dims(&self, c: &Cell) -> Vec<Cell> {
        let mut out = Vec::new();
        for k in c.dim()..=self.top_dim() {
            for cell in &self.cells_by_dim[k] {
                if c.is_face_of(cell) {
                    out.push(cell.clone());
                }
            }
        }
        out
    }

    /// Closed star and link of `c`.
    ///
    /// The star contains every cell having `c` as a face, plus all their
    /// faces; the link is the star's cells disjoint from `c`.
    pub fn star_and_link(&self, c: &Cell) -> Result<(Subcomplex, Subcomplex), ComplexError> {
        if !self.contains(c) {
            return Err(ComplexError::CellNotInComplex(c.clone()));
        }
        let mut star: BTreeSet<Cell> = BTreeSet::new();
        for cell in self.cofaces_all_dims(c) {
            for face in cell.all_faces() {
                star.insert(face);
            }
        }
        let link: BTreeSet<Cell> = star
            .iter()
            .filter(|f| c.intersection(f).is_none())
            .cloned()
            .collect();
        Ok((Subcomplex::new(star), Subcomplex::new(link)))
    }

    /// The m-cells of the closed star of vertex `o`.
    pub fn star_top_cells(&self, o: VertexId) -> BTreeSet<Cell> {
        let m = self.top_dim();
        self.cells(m)
            .iter()
            .filter(|c| c.contains_vertex(o))
            .cloned()
            .collect()
    }

    pub fn euler_characteristic(&self) -> i64 {
        self.cells_by_dim
            .iter()
            .enumerate()
            .map(|(k, cells)| {
                let n = cells.len() as i64;
                if k % 2 == 0 {
                    n
                } else {
                    -n
                }
            })
            .sum()
    }

    /// Content digest over dimensions, cells and coordinate bits.
    pub fn digest(&self) -> String {
        let mut h = Sha256::new();
        h.update((self.top_dim() as u64).to_le_bytes());
        for (k, cells) in self.cells_by_dim.iter().enumerate() {
            h.update((k as u64).to_le_bytes());
            for c in cells {
                for v in c.vertices() {
                    h.update(v.0.to_le_bytes());
                }
                h.update([0xff]);
            }
        }
        if let Some(coords) = &self.coords {
            for (v, p) in coords {
                h.update(v.0.to_le_bytes());
                for x in p {
                    h.update(x.to_bits().to_le_bytes());
                }
            }
        }
        hex_string(&h.finalize())
    }

    /// Checks every (dim-1) face of every cell is present and the coboundary
    /// map is the exact inverse of the face relation.
    pub fn face_closure_violations(&self) -> Vec<Cell> {
        let mut bad = Vec::new();
        for k in 1..=self.top_dim() {
            for cell in &self.cells_by_dim[k] {
                for face in cell.facets() {
                    if !self.contains(&face) || !self.cofaces(&face).contains(cell) {
                        bad.push(cell.clone());
                        break;
                    }
                }
            }
        }
        bad
    }

    /// Full validation battery against an expected top dimension.
    pub fn validate(&self, expect_dim: usize) -> ValidationReport {
        validate(self, expect_dim)
    }
}

fn hex_string(bytes: &[u8]) -> String {
    use std::fmt::Write;
    bytes.iter().fold(String::new(), |mut s, b| {
        let _ = write!(s, "{b:02x}");
        s
    })
}

/// A plain set of cells closed under faces, as returned by star/link.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Subcomplex {
    cells: BTreeSet<Cell>,
}

impl Subcomplex {
    pub fn new(cells: BTreeSet<Cell>) -> Self {
        Self { cells }
    }

    pub fn cells(&self) -> &BTreeSet<Cell> {
        &self.cells
    }

    pub fn cells_of_dim(&self, k: usize) -> impl Iterator<Item = &Cell> {
        self.cells.iter().filter(move |c| c.dim() == k)
    }

    pub fn contains(&self, c: &Cell) -> bool {
        self.cells.contains(c)
    }

    pub fn is_empty(&self) -> bool {
        self.cells.is_empty()
    }
}

/// Which validation rule a violation belongs to.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Rule {
    FaceClosure,
    ExpectedDimension,
    ClosedPseudomanifold,
    StrongConnectivity,
    Orientability,
    IntersectionProperty,
}

/// Outcome of [`validate`]: flags plus the offending cells per failed rule.
#[derive(Clone, Debug, PartialEq)]
pub struct ValidationReport {
    pub is_face_closed: bool,
    pub is_closed_pseudomanifold: bool,
    pub is_strongly_connected: bool,
    pub is_orientable: bool,
    pub intersection_property_ok: bool,
    pub euler_characteristic: i64,
    pub violations: Vec<(Rule, Vec<Cell>)>,
}

impl ValidationReport {
    pub fn all_ok(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Validates `k` as a closed pseudomanifold of dimension `expect_dim`.
///
/// Checked: face closure, no cells above the expected dimension, every
/// (m-1)-cell in exactly two m-cells, m-cells connected through shared
/// (m-1)-cells, consistent orientability of the m-skeleton, and (when an
/// embedding is present) the pairwise intersection property. The Euler
/// characteristic is always reported.
pub fn validate(k: &Complex, expect_dim: usize) -> ValidationReport {
    let m = expect_dim;
    let mut violations: Vec<(Rule, Vec<Cell>)> = Vec::new();

    let closure_bad = k.face_closure_violations();
    let is_face_closed = closure_bad.is_empty();
    if !is_face_closed {
        violations.push((Rule::FaceClosure, closure_bad));
    }

    let mut overdim: Vec<Cell> = Vec::new();
    for d in (m + 1)..=k.top_dim() {
        overdim.extend(k.cells(d).iter().cloned());
    }
    if !overdim.is_empty() {
        violations.push((Rule::ExpectedDimension, overdim));
    }

    // closed pseudomanifold: each (m-1)-cell lies in exactly two m-cells
    let mut pseudo_bad: Vec<Cell> = Vec::new();
    if m >= 1 {
        for face in k.cells(m - 1) {
            let n = k
                .cofaces(face)
                .iter()
                .filter(|c| c.dim() == m)
                .count();
            if n != 2 {
                pseudo_bad.push(face.clone());
            }
        }
    }
    let is_closed_pseudomanifold = pseudo_bad.is_empty() && !k.cells(m).is_empty();
    if !pseudo_bad.is_empty() {
        violations.push((Rule::ClosedPseudomanifold, pseudo_bad));
    } else if k.cells(m).is_empty() {
        violations.push((Rule::ClosedPseudomanifold, Vec::new()));
    }

    let is_strongly_connected = strongly_connected(k, m);
    if !is_strongly_connected {
        violations.push((Rule::StrongConnectivity, Vec::new()));
    }

    let orient_bad = orientability_conflicts(k, m);
    let is_orientable = orient_bad.is_empty();
    if !is_orientable {
        violations.push((Rule::Orientability, orient_bad));
    }

    let intersect_bad = intersection_property_violations(k);
    let intersection_property_ok = intersect_bad.is_empty();
    if !intersection_property_ok {
        violations.push((Rule::IntersectionProperty, intersect_bad));
    }

    ValidationReport {
        is_face_closed,
        is_closed_pseudomanifold,
        is_strongly_connected,
        is_orientable,
        intersection_property_ok,
        euler_characteristic: k.euler_characteristic(),
        violations,
    }
}

/// m-cells pairwise reachable through shared (m-1)-cells.
pub fn strongly_connected(k: &Complex, m: usize) -> bool {
    let cells: Vec<&Cell> = k.cells(m).iter().collect();
    if cells.is_empty() {
        return false;
    }
    let index: BTreeMap<&Cell, usize> = cells.iter().enumerate().map(|(i, c)| (*c, i)).collect();
    let mut seen = vec![false; cells.len()];
    let mut queue = VecDeque::new();
    seen[0] = true;
    queue.push_back(0);
    while let Some(i) = queue.pop_front() {
        for face in cells[i].facets() {
            for nb in k.cofaces(&face) {
                if nb.dim() != m {
                    continue;
                }
                if let Some(&j) = index.get(nb) {
                    if !seen[j] {
                        seen[j] = true;
                        queue.push_back(j);
                    }
                }
            }
        }
    }
    seen.into_iter().all(|s| s)
}

/// Greedy orientation propagation over the m-skeleton.
///
/// Each m-cell gets a sign relative to its sorted vertex order; two cells
/// sharing an (m-1)-face must induce opposite orientations on it. Returns
/// the cells where propagation hit a contradiction.
fn orientability_conflicts(k: &Complex, m: usize) -> Vec<Cell> {
    if m == 0 {
        return Vec::new();
    }
    let cells: Vec<&Cell> = k.cells(m).iter().collect();
    let index: BTreeMap<&Cell, usize> = cells.iter().enumerate().map(|(i, c)| (*c, i)).collect();
    let mut sign: Vec<i8> = vec![0; cells.len()];
    let mut bad = Vec::new();
    for start in 0..cells.len() {
        if sign[start] != 0 {
            continue;
        }
        sign[start] = 1;
        let mut queue = VecDeque::new();
        queue.push_back(start);
        while let Some(i) = queue.pop_front() {
            let cur = cells[i];
            for (skip, face) in cur.facets().into_iter().enumerate() {
                for nb in k.cofaces(&face) {
                    if nb.dim() != m || *nb == *cur {
                        continue;
                    }
                    let Some(&j) = index.get(nb) else { continue };
                    let skip_nb = nb
                        .vertices()
                        .iter()
                        .position(|v| !face.contains_vertex(*v))
                        .expect("facet differs in one vertex");
                    // induced orientations must cancel:
                    // (-1)^skip s(cur) = -(-1)^skip_nb s(nb)
                    let rel: i8 = if (skip + skip_nb) % 2 == 0 { -1 } else { 1 };
                    let expect = rel * sign[i];
                    if sign[j] == 0 {
                        sign[j] = expect;
                        queue.push_back(j);
                    } else if sign[j] != expect {
                        bad.push(nb.clone());
                    }
                }
            }
        }
    }
    bad.sort();
    bad.dedup();
    bad
}

/// Realized cells must meet exactly in their common face.
///
/// Runs only when coordinates exist. Degenerate (affinely dependent) cells
/// and improperly intersecting pairs are reported. Pairs are pruned with a
/// bounding-box test before the exact LP runs.
fn intersection_property_violations(k: &Complex) -> Vec<Cell> {
    let Some(coords) = k.coords() else {
        return Vec::new();
    };
    let points: BTreeMap<VertexId, Vec<geom::Rat>> = coords
        .iter()
        .map(|(v, p)| (*v, geom::rat_point(p)))
        .collect();
    let mut bad: BTreeSet<Cell> = BTreeSet::new();

    // gather maximal cells only; faces of proper pairs intersect properly too
    let maximal = k.maximal_cells();
    let cell_pts: Vec<Vec<Vec<geom::Rat>>> = maximal
        .iter()
        .map(|c| c.vertices().iter().map(|v| points[v].clone()).collect())
        .collect();
    for (c, pts) in maximal.iter().zip(&cell_pts) {
        if !geom::affinely_independent(pts) {
            bad.insert(c.clone());
        }
    }
    let boxes: Vec<(Vec<f64>, Vec<f64>)> = maximal
        .iter()
        .map(|c| bounding_box(c, coords))
        .collect();
    for i in 0..maximal.len() {
        for j in (i + 1)..maximal.len() {
            if !boxes_touch(&boxes[i], &boxes[j]) {
                continue;
            }
            let a = &maximal[i];
            let b = &maximal[j];
            let shared_a: Vec<bool> = a
                .vertices()
                .iter()
                .map(|v| b.contains_vertex(*v))
                .collect();
            let shared_b: Vec<bool> = b
                .vertices()
                .iter()
                .map(|v| a.contains_vertex(*v))
                .collect();
            if geom::simplex_intersection(&cell_pts[i], &cell_pts[j], &shared_a, &shared_b)
                == geom::IntersectionKind::Improper
            {
                bad.insert(a.clone());
                bad.insert(b.clone());
            }
        }
    }
    bad.into_iter().collect()
}

fn bounding_box(c: &Cell, coords: &BTreeMap<VertexId, Vec<f64>>) -> (Vec<f64>, Vec<f64>) {
    let n = coords[&c.vertices()[0]].len();
    let mut lo = vec![f64::INFINITY; n];
    let mut hi = vec![f64::NEG_INFINITY; n];
    for v in c.vertices() {
        for (d, &x) in coords[v].iter().enumerate() {
            lo[d] = lo[d].min(x);
            hi[d] = hi[d].max(x);
        }
    }
    (lo, hi)
}

fn boxes_touch(a: &(Vec<f64>, Vec<f64>), b: &(Vec<f64>, Vec<f64>)) -> bool {
    a.0.iter()
        .zip(&a.1)
        .zip(b.0.iter().zip(&b.1))
        .all(|((alo, ahi), (blo, bhi))| alo <= bhi && blo <= ahi)
}

/// The boundary complex of the (m+1)-simplex on vertices `0..=m+1`:
/// the standard triangulated m-sphere used throughout the tests and docs.
pub fn simplex_boundary(m: usize) -> Complex {
    let all: Vec<VertexId> = (0..=(m as u32 + 1)).map(VertexId).collect();
    let facets: Vec<Cell> = (0..all.len())
        .map(|skip| {
            Cell::new(
                all.iter()
                    .enumerate()
                    .filter(|(i, _)| *i != skip)
                    .map(|(_, v)| *v),
            )
            .unwrap()
        })
        .collect();
    Complex::from_maximal_cells(&facets, None).unwrap()
}

/// The 7-vertex (Csaszar) triangulation of the torus: 14 triangles on the
/// complete graph K7, every edge in exactly two triangles, chi = 0.
pub fn seven_vertex_torus() -> Complex {
    let mut facets = Vec::new();
    for i in 0u32..7 {
        facets.push(Cell::from_ids(&[i, (i + 1) % 7, (i + 3) % 7]));
        facets.push(Cell::from_ids(&[i, (i + 2) % 7, (i + 3) % 7]));
    }
    Complex::from_maximal_cells(&facets, None).unwrap()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn single_tetrahedron_counts() {
        let k = Complex::from_maximal_cells(&[Cell::from_ids(&[0, 1, 2, 3])], None).unwrap();
        assert_eq!(k.cells(0).len(), 4);
        assert_eq!(k.cells(1).len(), 6);
        assert_eq!(k.cells(2).len(), 4);
        assert_eq!(k.cells(3).len(), 1);
        assert_eq!(k.top_dim(), 3);
    }

    #[test]
    fn boundary_delta4_counts() {
        let k = simplex_boundary(3); // boundary of the 4-simplex
        assert_eq!(k.cells(0).len(), 5);
        assert_eq!(k.cells(1).len(), 10);
        assert_eq!(k.cells(2).len(), 10);
        assert_eq!(k.cells(3).len(), 5);
    }

    #[test]
    fn duplicate_vertex_rejected() {
        assert!(matches!(
            Cell::new([VertexId(0), VertexId(0), VertexId(1)]),
            Err(CellError::DuplicateVertexInCell(_))
        ));
    }

    #[test]
    fn coboundary_inverts_face_relation() {
        let k = simplex_boundary(2);
        for edge in k.cells(1) {
            for t in k.cofaces(edge) {
                assert!(edge.is_face_of(t));
            }
            assert_eq!(k.cofaces(edge).len(), 2);
        }
    }

    #[test]
    fn star_and_link_of_vertex_in_sphere() {
        // oracle: brute-force coface enumeration
        let k = simplex_boundary(2);
        let v = Cell::from_ids(&[0]);
        let (star, link) = k.star_and_link(&v).unwrap();
        let star_tris: Vec<&Cell> = star.cells_of_dim(2).collect();
        assert_eq!(star_tris.len(), 3);
        let brute: Vec<&Cell> = k
            .cells(2)
            .iter()
            .filter(|c| c.contains_vertex(VertexId(0)))
            .collect();
        assert_eq!(star_tris, brute);
        // link of 0 in the 2-sphere boundary: the 3-cycle on {1,2,3}
        assert_eq!(link.cells_of_dim(1).count(), 3);
        assert_eq!(link.cells_of_dim(0).count(), 3);
        assert!(link.cells().iter().all(|c| !c.contains_vertex(VertexId(0))));
    }

    #[test]
    fn star_of_top_cell_is_whole_single_tetra() {
        let k = Complex::from_maximal_cells(&[Cell::from_ids(&[0, 1, 2, 3])], None).unwrap();
        let t = Cell::from_ids(&[0, 1, 2, 3]);
        let (star, link) = k.star_and_link(&t).unwrap();
        assert_eq!(star.cells().len(), 15);
        assert!(link.is_empty());
    }

    #[test]
    fn link_of_vertex_in_delta4_boundary_is_sphere() {
        // oracle: coface enumeration says link of 0 is the boundary of the
        // tetrahedron on {1,2,3,4}
        let k = simplex_boundary(3);
        let (_, link) = k.star_and_link(&Cell::from_ids(&[0])).unwrap();
        let expect = simplex_boundary(2);
        // relabel: expected complex lives on 0..3, link on 1..4
        assert_eq!(link.cells_of_dim(2).count(), 4);
        assert_eq!(link.cells_of_dim(1).count(), 6);
        assert_eq!(link.cells_of_dim(0).count(), 4);
        assert_eq!(expect.cells(2).len(), 4);
        let rep = Complex::from_maximal_cells(
            &link.cells_of_dim(2).cloned().collect::<Vec<_>>(),
            None,
        )
        .unwrap()
        .validate(2);
        assert!(rep.is_closed_pseudomanifold && rep.euler_characteristic == 2);
    }

    #[test]
    fn star_link_missing_cell_errors() {
        let k = simplex_boundary(2);
        assert!(matches!(
            k.star_and_link(&Cell::from_ids(&[7])),
            Err(ComplexError::CellNotInComplex(_))
        ));
    }

    #[test]
    fn validate_sphere_boundaries() {
        for (m, chi) in [(1usize, 0i64), (2, 2), (3, 0), (4, 2)] {
            let k = simplex_boundary(m);
            let rep = k.validate(m);
            assert!(rep.is_face_closed, "m={m}");
            assert!(rep.is_closed_pseudomanifold, "m={m}");
            assert!(rep.is_strongly_connected, "m={m}");
            assert!(rep.is_orientable, "m={m}");
            assert_eq!(rep.euler_characteristic, chi, "m={m}");
            assert!(rep.all_ok());
        }
    }

    #[test]
    fn solid_tetrahedron_is_not_closed() {
        let k = Complex::from_maximal_cells(&[Cell::from_ids(&[0, 1, 2, 3])], None).unwrap();
        let rep = k.validate(3);
        assert!(!rep.is_closed_pseudomanifold);
        assert!(rep
            .violations
            .iter()
            .any(|(r, cells)| *r == Rule::ClosedPseudomanifold && cells.len() == 4));
    }

    #[test]
    fn torus_validates_with_chi_zero() {
        let k = seven_vertex_torus();
        let rep = k.validate(2);
        assert!(rep.is_closed_pseudomanifold);
        assert!(rep.is_strongly_connected);
        assert!(rep.is_orientable);
        assert_eq!(rep.euler_characteristic, 0);
    }

    #[test]
    fn intersection_property_flags_bad_embedding() {
        // two triangles sharing edge [0,1]; vertex 3 placed so the second
        // triangle overlaps the first one's interior
        let coords: BTreeMap<VertexId, Vec<f64>> = [
            (VertexId(0), vec![0.0, 0.0]),
            (VertexId(1), vec![1.0, 0.0]),
            (VertexId(2), vec![0.5, 1.0]),
            (VertexId(3), vec![0.5, 0.5]),
        ]
        .into_iter()
        .collect();
        let k = Complex::from_maximal_cells(
            &[Cell::from_ids(&[0, 1, 2]), Cell::from_ids(&[0, 1, 3])],
            Some(coords),
        )
        .unwrap();
        let rep = k.validate(2);
        assert!(!rep.intersection_property_ok);

        // moving vertex 3 below the shared edge fixes it
        let coords_ok: BTreeMap<VertexId, Vec<f64>> = [
            (VertexId(0), vec![0.0, 0.0]),
            (VertexId(1), vec![1.0, 0.0]),
            (VertexId(2), vec![0.5, 1.0]),
            (VertexId(3), vec![0.5, -1.0]),
        ]
        .into_iter()
        .collect();
        let k = Complex::from_maximal_cells(
            &[Cell::from_ids(&[0, 1, 2]), Cell::from_ids(&[0, 1, 3])],
            Some(coords_ok),
        )
        .unwrap();
        assert!(k.validate(2).intersection_property_ok);
    }

    #[test]
    fn mixed_ambient_dims_rejected() {
        let coords: BTreeMap<VertexId, Vec<f64>> = [
            (VertexId(0), vec![0.0, 0.0]),
            (VertexId(1), vec![1.0, 0.0, 3.0]),
        ]
        .into_iter()
        .collect();
        assert!(matches!(
            Complex::from_maximal_cells(&[Cell::from_ids(&[0, 1])], Some(coords)),
            Err(ComplexError::MixedAmbientDim(_, _))
        ));
    }

    #[test]
    fn digest_is_stable_and_input_sensitive() {
        let a = simplex_boundary(2);
        let b = simplex_boundary(2);
        assert_eq!(a.digest(), b.digest());
        assert_ne!(a.digest(), simplex_boundary(3).digest());
    }
}
