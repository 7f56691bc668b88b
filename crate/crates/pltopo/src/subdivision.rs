//! Barycentric subdivision of single cells, edge splits, and the gradual
//! subsequences that reconnect curves across a subdivided region.
//!
//! Subdividing a cell replaces its whole closure by the barycentric
//! subdivision and re-triangulates every cell meeting that closure by coning
//! from the untouched opposite face, so the result is face-closed and the
//! closed-pseudomanifold property survives.

use std::collections::{BTreeMap, BTreeSet, VecDeque};

use thiserror::Error;

use crate::cell::{Cell, VertexId};
use crate::complex::{Complex, ComplexError};
use crate::contraction::Curve;

#[derive(Clone, Debug, Error, PartialEq)]
pub enum SubdivisionError {
    #[error("cell {0} is not in the complex")]
    CellNotInComplex(Cell),
    #[error("cell {0} has dimension 0 and cannot be subdivided")]
    ZeroDimCell(Cell),
    #[error("curves differ outside the closure of region {0}")]
    NotLocalizedDifference(Cell),
    #[error("no gradual path between the curves inside region {0}")]
    NoGradualPath(Cell),
    #[error(transparent)]
    Complex(#[from] ComplexError),
}

/// What one subdivision did: the cells that vanished, the cells that
/// appeared, and the centroid vertices with their parent cells.
#[derive(Clone, Debug, PartialEq)]
pub struct SubdivisionRecord {
    pub replaced: BTreeSet<Cell>,
    pub created: BTreeSet<Cell>,
    /// New vertex -> the cell whose centroid it is (a cell of the input
    /// complex).
    pub new_vertices: BTreeMap<VertexId, Cell>,
    pub vertex_coords: Option<BTreeMap<VertexId, Vec<f64>>>,
}

impl SubdivisionRecord {
    /// For a replaced edge, the two-edge chain through its midpoint,
    /// ordered from the smaller endpoint.
    pub fn edge_chain(&self, e: &Cell) -> Option<Vec<Cell>> {
        if e.dim() != 1 || !self.replaced.contains(e) {
            return None;
        }
        let mid = self
            .new_vertices
            .iter()
            .find(|(_, parent)| *parent == e)
            .map(|(v, _)| *v)?;
        let (a, b) = (e.vertices()[0], e.vertices()[1]);
        Some(vec![
            Cell::new([a, mid]).unwrap(),
            Cell::new([mid, b]).unwrap(),
        ])
    }

    /// Rewrites a curve through this record: replaced edges become their
    /// midpoint chains, all other edges pass through unchanged.
    pub fn remap_curve(&self, curve: &Curve) -> Curve {
        let mut edges: Vec<Cell> = Vec::with_capacity(curve.len() + 2);
        for e in curve.edges() {
            match self.edge_chain(e) {
                Some(chain) => edges.extend(chain),
                None => edges.push(e.clone()),
            }
        }
        Curve::from_edges(edges).expect("subdivision keeps curves simple")
    }

    /// The created cells of dimension `dim` refining `old` (their vertices
    /// anchor inside `old`'s vertex set).
    pub fn descendants_of(&self, old: &Cell, dim: usize) -> Vec<Cell> {
        self.created
            .iter()
            .filter(|c| c.dim() == dim)
            .filter(|c| {
                c.vertices().iter().all(|v| match self.new_vertices.get(v) {
                    None => old.contains_vertex(*v),
                    Some(parent) => parent.is_face_of(old),
                })
            })
            .cloned()
            .collect()
    }
}

/// Tracks which original vertices every vertex derives from across a chain
/// of subdivisions. A centroid vertex anchors to the union of its parent
/// cell's anchors; original vertices anchor to themselves.
#[derive(Clone, Debug, Default)]
pub struct Ancestry {
    anchors: BTreeMap<VertexId, BTreeSet<VertexId>>,
}

impl Ancestry {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn absorb(&mut self, record: &SubdivisionRecord) {
        for (v, parent) in &record.new_vertices {
            let mut set = BTreeSet::new();
            for pv in parent.vertices() {
                match self.anchors.get(pv) {
                    Some(a) => set.extend(a.iter().copied()),
                    None => {
                        set.insert(*pv);
                    }
                }
            }
            self.anchors.insert(*v, set);
        }
    }

    pub fn anchors_of(&self, v: VertexId) -> BTreeSet<VertexId> {
        self.anchors
            .get(&v)
            .cloned()
            .unwrap_or_else(|| BTreeSet::from([v]))
    }

    /// The vertex lies in the closure of `region` (an original cell).
    pub fn vertex_in_closure(&self, v: VertexId, region: &Cell) -> bool {
        self.anchors_of(v).iter().all(|a| region.contains_vertex(*a))
    }

    pub fn cell_in_closure(&self, c: &Cell, region: &Cell) -> bool {
        c.vertices().iter().all(|v| self.vertex_in_closure(*v, region))
    }
}

/// Maximal chains v = f_0 < f_1 < ... < f_d = `cell` in the face poset of
/// the cell's closure; each chain names one simplex of the barycentric
/// subdivision via `rep`.
fn flag_simplices(cell: &Cell, rep: &BTreeMap<Cell, VertexId>) -> Vec<Cell> {
    fn chains(cell: &Cell) -> Vec<Vec<Cell>> {
        if cell.dim() == 0 {
            return vec![vec![cell.clone()]];
        }
        let mut out = Vec::new();
        for facet in cell.facets() {
            for mut chain in chains(&facet) {
                chain.push(cell.clone());
                out.push(chain);
            }
        }
        out
    }
    chains(cell)
        .into_iter()
        .map(|chain| {
            Cell::new(chain.iter().map(|f| {
                if f.dim() == 0 {
                    f.vertices()[0]
                } else {
                    rep[f]
                }
            }))
            .expect("flag vertices distinct")
        })
        .collect()
}

fn next_vertex_id(k: &Complex) -> u32 {
    k.vertex_ids().map(|v| v.0).max().unwrap_or(0) + 1
}

fn centroid_f64(k: &Complex, cell: &Cell) -> Option<Vec<f64>> {
    let coords = k.coords()?;
    let pts: Vec<&Vec<f64>> = cell.vertices().iter().map(|v| &coords[v]).collect();
    let n = pts[0].len();
    let mut mean = vec![0.0; n];
    for p in &pts {
        for (d, x) in p.iter().enumerate() {
            mean[d] += x;
        }
    }
    for x in &mut mean {
        *x /= pts.len() as f64;
    }
    Some(mean)
}

/// Replaces the closure of `c` by its barycentric subdivision and cones
/// every incident cell compatibly. A d-simplex inside the closure becomes
/// (d+1)! d-simplices; centroid coordinates are synthesized when the
/// complex carries an embedding.
pub fn barycentric_subdivide_cell(
    k: &Complex,
    c: &Cell,
) -> Result<(Complex, SubdivisionRecord), SubdivisionError> {
    if !k.contains(c) {
        return Err(SubdivisionError::CellNotInComplex(c.clone()));
    }
    if c.dim() == 0 {
        return Err(SubdivisionError::ZeroDimCell(c.clone()));
    }

    // centroid vertex per face of c of dimension >= 1, ids in (dim, lex) order
    let mut faces: Vec<Cell> = c.all_faces().into_iter().filter(|f| f.dim() >= 1).collect();
    faces.sort_by_key(|f| (f.dim(), f.clone()));
    let base = next_vertex_id(k);
    let rep: BTreeMap<Cell, VertexId> = faces
        .iter()
        .enumerate()
        .map(|(i, f)| (f.clone(), VertexId(base + i as u32)))
        .collect();

    let mut new_maximal: Vec<Cell> = Vec::new();
    for tau in k.maximal_cells() {
        match tau.intersection(c) {
            Some(f) if f.dim() >= 1 => {
                let opposite: Vec<VertexId> = tau
                    .vertices()
                    .iter()
                    .copied()
                    .filter(|v| !f.contains_vertex(*v))
                    .collect();
                for piece in flag_simplices(&f, &rep) {
                    new_maximal.push(piece.join(&opposite).expect("fresh centroid ids"));
                }
            }
            _ => new_maximal.push(tau),
        }
    }

    let new_coords = k.coords().map(|old| {
        let mut m = old.clone();
        for (f, v) in &rep {
            m.insert(*v, centroid_f64(k, f).expect("coords present"));
        }
        m
    });
    let result = Complex::from_maximal_cells(&new_maximal, new_coords)?;
    let record = diff_record(k, &result, &rep);
    Ok((result, record))
}

/// Splits an edge at its midpoint; every coface of the edge is cut in two
/// by coning over the split. For an edge this is exactly its barycentric
/// subdivision.
pub fn split_edge(
    k: &Complex,
    e: &Cell,
) -> Result<(Complex, SubdivisionRecord), SubdivisionError> {
    if e.dim() != 1 {
        // not an edge of the complex, whatever else it may be
        return Err(SubdivisionError::CellNotInComplex(e.clone()));
    }
    barycentric_subdivide_cell(k, e)
}

/// The barycentric subdivision of the whole complex: one centroid per cell
/// of dimension >= 1, one simplex per maximal flag.
pub fn full_barycentric_subdivision(k: &Complex) -> (Complex, SubdivisionRecord) {
    let mut faces: Vec<Cell> = Vec::new();
    for d in 1..=k.top_dim() {
        faces.extend(k.cells(d).iter().cloned());
    }
    faces.sort_by_key(|f| (f.dim(), f.clone()));
    let base = next_vertex_id(k);
    let rep: BTreeMap<Cell, VertexId> = faces
        .iter()
        .enumerate()
        .map(|(i, f)| (f.clone(), VertexId(base + i as u32)))
        .collect();
    let mut new_maximal: Vec<Cell> = Vec::new();
    for tau in k.maximal_cells() {
        if tau.dim() == 0 {
            new_maximal.push(tau);
        } else {
            new_maximal.extend(flag_simplices(&tau, &rep));
        }
    }
    let new_coords = k.coords().map(|old| {
        let mut m = old.clone();
        for (f, v) in &rep {
            m.insert(*v, centroid_f64(k, f).expect("coords present"));
        }
        m
    });
    let result = Complex::from_maximal_cells(&new_maximal, new_coords)
        .expect("barycentric subdivision is a valid complex");
    let record = diff_record(k, &result, &rep);
    (result, record)
}

fn diff_record(
    old: &Complex,
    new: &Complex,
    rep: &BTreeMap<Cell, VertexId>,
) -> SubdivisionRecord {
    let mut replaced = BTreeSet::new();
    for d in 0..=old.top_dim() {
        for cell in old.cells(d) {
            if !new.contains(cell) {
                replaced.insert(cell.clone());
            }
        }
    }
    let mut created = BTreeSet::new();
    for d in 0..=new.top_dim() {
        for cell in new.cells(d) {
            if !old.contains(cell) {
                created.insert(cell.clone());
            }
        }
    }
    let new_vertices: BTreeMap<VertexId, Cell> =
        rep.iter().map(|(f, v)| (*v, f.clone())).collect();
    let vertex_coords = new.coords().map(|coords| {
        new_vertices
            .keys()
            .map(|v| (*v, coords[v].clone()))
            .collect()
    });
    SubdivisionRecord {
        replaced,
        created,
        new_vertices,
        vertex_coords,
    }
}

/// Connects two curves that differ only inside the closure of `region` by a
/// gradually varied chain X_0 = C1, ..., X_t = C2 flipping one 2-cell of
/// `k_new` at a time. The returned list includes both endpoints.
///
/// `ancestry` resolves which current vertices live inside the (possibly
/// subdivided) closure of the original cell `region`.
pub fn insert_gradual_subsequence(
    k_new: &Complex,
    c1: &Curve,
    c2: &Curve,
    region: &Cell,
    ancestry: &Ancestry,
) -> Result<Vec<Curve>, SubdivisionError> {
    if c1 == c2 {
        return Ok(vec![c1.clone()]);
    }
    let diff: BTreeSet<Cell> = c1.symmetric_difference(c2);
    for e in &diff {
        if !ancestry.cell_in_closure(e, region) {
            return Err(SubdivisionError::NotLocalizedDifference(region.clone()));
        }
    }
    // flip candidates: 2-cells whose closure sits inside the region's
    let candidates: Vec<Cell> = k_new
        .cells(2)
        .iter()
        .filter(|t| ancestry.cell_in_closure(t, region))
        .cloned()
        .collect();

    let mut parent: BTreeMap<Vec<VertexId>, Option<Vec<VertexId>>> = BTreeMap::new();
    let mut by_key: BTreeMap<Vec<VertexId>, Curve> = BTreeMap::new();
    let mut queue: VecDeque<Vec<VertexId>> = VecDeque::new();
    let start = c1.canonical().to_vec();
    let goal = c2.canonical().to_vec();
    parent.insert(start.clone(), None);
    by_key.insert(start.clone(), c1.clone());
    queue.push_back(start);
    const STATE_CAP: usize = 200_000;
    while let Some(key) = queue.pop_front() {
        let cur = by_key[&key].clone();
        for t in &candidates {
            let Some(next) = cur.flip(t) else { continue };
            let nkey = next.canonical().to_vec();
            if parent.contains_key(&nkey) {
                continue;
            }
            parent.insert(nkey.clone(), Some(key.clone()));
            by_key.insert(nkey.clone(), next);
            if nkey == goal {
                let mut path = Vec::new();
                let mut cur = Some(nkey);
                while let Some(k2) = cur {
                    path.push(by_key[&k2].clone());
                    cur = parent[&k2].clone();
                }
                path.reverse();
                return Ok(path);
            }
            queue.push_back(nkey);
        }
        if parent.len() > STATE_CAP {
            break;
        }
    }
    Err(SubdivisionError::NoGradualPath(region.clone()))
}
