//! Simple closed curves of 1-cells and gradually varied contraction
//! sequences.
//!
//! Two curves are one gradual move apart when their edge sets differ by the
//! boundary of exactly one 2-cell. A contraction sequence carries a base
//! point through every curve and ends at the boundary of a single 2-cell
//! containing that point.

use std::collections::{BTreeMap, BTreeSet, VecDeque};

use thiserror::Error;

use crate::cell::{Cell, VertexId};
use crate::complex::Complex;

#[derive(Clone, Debug, Error, PartialEq, Eq)]
pub enum CurveError {
    #[error("curve needs at least three edges")]
    TooShort,
    #[error("vertex {0} has degree {1}, expected 2")]
    BadDegree(VertexId, usize),
    #[error("edges do not form a single connected cycle")]
    Disconnected,
    #[error("edge {0} is not 1-dimensional")]
    NotAnEdge(Cell),
}

#[derive(Clone, Debug, Error, PartialEq, Eq)]
pub enum ContractionError {
    #[error("base point {0} is not on the curve")]
    BasePointNotOnCurve(VertexId),
    #[error(
        "search inconclusive after {expanded} expanded states (space exhausted: {space_exhausted})"
    )]
    BudgetExhausted {
        expanded: usize,
        space_exhausted: bool,
    },
}

/// A simple closed walk of 1-cells.
///
/// Canonical form: the cyclic vertex sequence rotated to start at the
/// smallest vertex and oriented toward its smaller neighbour, making it
/// invariant under rotation and reflection of the input description.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct Curve {
    edges: BTreeSet<Cell>,
    canonical: Vec<VertexId>,
}

impl Curve {
    pub fn from_edges(edges: impl IntoIterator<Item = Cell>) -> Result<Self, CurveError> {
        let edges: BTreeSet<Cell> = edges.into_iter().collect();
        if let Some(bad) = edges.iter().find(|e| e.dim() != 1) {
            return Err(CurveError::NotAnEdge(bad.clone()));
        }
        if edges.len() < 3 {
            return Err(CurveError::TooShort);
        }
        let mut nbrs: BTreeMap<VertexId, Vec<VertexId>> = BTreeMap::new();
        for e in &edges {
            let (a, b) = (e.vertices()[0], e.vertices()[1]);
            nbrs.entry(a).or_default().push(b);
            nbrs.entry(b).or_default().push(a);
        }
        for (v, ns) in &nbrs {
            if ns.len() != 2 {
                return Err(CurveError::BadDegree(*v, ns.len()));
            }
        }
        // walk from the smallest vertex toward its smaller neighbour
        let start = *nbrs.keys().next().unwrap();
        let mut seq = vec![start];
        let mut prev = start;
        let mut cur = *nbrs[&start].iter().min().unwrap();
        while cur != start {
            seq.push(cur);
            let ns = &nbrs[&cur];
            let next = if ns[0] == prev { ns[1] } else { ns[0] };
            prev = cur;
            cur = next;
        }
        if seq.len() != nbrs.len() {
            return Err(CurveError::Disconnected);
        }
        Ok(Self {
            edges,
            canonical: seq,
        })
    }

    /// Builds the curve from a cyclic vertex sequence.
    pub fn from_vertex_cycle(vs: &[VertexId]) -> Result<Self, CurveError> {
        if vs.len() < 3 {
            return Err(CurveError::TooShort);
        }
        let edges: Result<Vec<Cell>, _> = (0..vs.len())
            .map(|i| Cell::new([vs[i], vs[(i + 1) % vs.len()]]))
            .collect();
        Self::from_edges(edges.map_err(|_| CurveError::TooShort)?)
    }

    /// Cycle literal for tests and fixtures; panics on malformed input.
    pub fn from_ids(ids: &[u32]) -> Self {
        Self::from_vertex_cycle(&ids.iter().map(|&i| VertexId(i)).collect::<Vec<_>>())
            .expect("valid cycle literal")
    }

    pub fn edges(&self) -> &BTreeSet<Cell> {
        &self.edges
    }

    /// Cyclic vertex sequence in canonical rotation and orientation.
    pub fn canonical(&self) -> &[VertexId] {
        &self.canonical
    }

    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    pub fn contains_vertex(&self, v: VertexId) -> bool {
        self.canonical.contains(&v)
    }

    pub fn contains_edge(&self, e: &Cell) -> bool {
        self.edges.contains(e)
    }

    pub fn vertices(&self) -> BTreeSet<VertexId> {
        self.canonical.iter().copied().collect()
    }

    pub fn symmetric_difference(&self, other: &Curve) -> BTreeSet<Cell> {
        self.edges
            .symmetric_difference(&other.edges)
            .cloned()
            .collect()
    }

    /// The curve obtained by toggling the boundary edges of `t`, if that is
    /// again a simple closed curve. Simplicity-violating flips return `None`.
    pub fn flip(&self, t: &Cell) -> Option<Curve> {
        let boundary: BTreeSet<Cell> = t.facets().into_iter().collect();
        let new_edges: BTreeSet<Cell> = self
            .edges
            .symmetric_difference(&boundary)
            .cloned()
            .collect();
        Curve::from_edges(new_edges).ok()
    }

    /// True iff the curve is exactly the boundary of `t`.
    pub fn is_boundary_of(&self, t: &Cell) -> bool {
        if t.dim() != 2 || self.edges.len() != 3 {
            return false;
        }
        t.facets().iter().all(|e| self.edges.contains(e))
    }

    /// All edges exist in the complex.
    pub fn lies_in(&self, k: &Complex) -> bool {
        self.edges.iter().all(|e| k.contains(e))
    }
}

/// An ordered, gradually varied list of curves through a base point.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ContractionSequence {
    pub base_point: VertexId,
    pub curves: Vec<Curve>,
}

/// Returns the unique 2-cell of `k` whose boundary is the two curves'
/// symmetric difference, if any. Identical curves yield `None`.
pub fn gradual_move_cell(k: &Complex, c1: &Curve, c2: &Curve) -> Option<Cell> {
    let diff = c1.symmetric_difference(c2);
    if diff.len() != 3 {
        return None;
    }
    let vs: BTreeSet<VertexId> = diff
        .iter()
        .flat_map(|e| e.vertices().iter().copied())
        .collect();
    if vs.len() != 3 {
        return None;
    }
    let t = Cell::new(vs).ok()?;
    if !k.contains(&t) {
        return None;
    }
    let tb: BTreeSet<Cell> = t.facets().into_iter().collect();
    if tb == diff {
        Some(t)
    } else {
        None
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ContractionViolation {
    EmptySequence,
    EdgeNotInComplex(Cell),
    MissingBasePoint,
    NotGradual,
    NonTerminalFinalCurve,
}

/// Validation outcome; `first_violation` carries the curve index where the
/// first rule failed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ContractionReport {
    pub valid: bool,
    pub first_violation: Option<(usize, ContractionViolation)>,
}

impl ContractionReport {
    fn ok() -> Self {
        Self {
            valid: true,
            first_violation: None,
        }
    }

    fn fail(index: usize, v: ContractionViolation) -> Self {
        Self {
            valid: false,
            first_violation: Some((index, v)),
        }
    }
}

/// Checks the sequence invariants: every curve lies in `k` and contains the
/// base point, consecutive curves are gradual moves, and the final curve
/// bounds a single 2-cell containing the base point.
pub fn validate_contraction(k: &Complex, seq: &ContractionSequence) -> ContractionReport {
    if seq.curves.is_empty() {
        return ContractionReport::fail(0, ContractionViolation::EmptySequence);
    }
    for (i, c) in seq.curves.iter().enumerate() {
        if let Some(e) = c.edges().iter().find(|e| !k.contains(e)) {
            return ContractionReport::fail(i, ContractionViolation::EdgeNotInComplex(e.clone()));
        }
        if !c.contains_vertex(seq.base_point) {
            return ContractionReport::fail(i, ContractionViolation::MissingBasePoint);
        }
        if i > 0 && gradual_move_cell(k, &seq.curves[i - 1], c).is_none() {
            return ContractionReport::fail(i, ContractionViolation::NotGradual);
        }
    }
    let last = seq.curves.last().unwrap();
    if terminal_cell(k, last, seq.base_point).is_none() {
        return ContractionReport::fail(
            seq.curves.len() - 1,
            ContractionViolation::NonTerminalFinalCurve,
        );
    }
    ContractionReport::ok()
}

/// The 2-cell certifying a terminal curve: the curve is its boundary and it
/// contains the base point.
pub fn terminal_cell(k: &Complex, curve: &Curve, p: VertexId) -> Option<Cell> {
    if curve.len() != 3 {
        return None;
    }
    let t = Cell::new(curve.vertices()).ok()?;
    if t.dim() == 2 && k.contains(&t) && t.contains_vertex(p) && curve.is_boundary_of(&t) {
        Some(t)
    } else {
        None
    }
}

/// Breadth-first search over curve space for a contraction of `start` to a
/// terminal 2-cell boundary through `p`.
///
/// Neighbours flip one 2-cell boundary while preserving simplicity and
/// p-membership; states are deduplicated by canonical form and the budget
/// counts expanded (dequeued) states. An unsuccessful search — budget hit
/// or state space exhausted — is inconclusive, never a proof that no
/// contraction exists.
pub fn search_contraction(
    k: &Complex,
    start: &Curve,
    p: VertexId,
    budget: usize,
) -> Result<ContractionSequence, ContractionError> {
    if !start.contains_vertex(p) {
        return Err(ContractionError::BasePointNotOnCurve(p));
    }
    let mut parent: BTreeMap<Vec<VertexId>, Option<Vec<VertexId>>> = BTreeMap::new();
    let mut by_key: BTreeMap<Vec<VertexId>, Curve> = BTreeMap::new();
    let mut queue: VecDeque<Vec<VertexId>> = VecDeque::new();
    let key0 = start.canonical().to_vec();
    parent.insert(key0.clone(), None);
    by_key.insert(key0.clone(), start.clone());
    queue.push_back(key0.clone());

    let reconstruct = |terminal_key: &Vec<VertexId>,
                       parent: &BTreeMap<Vec<VertexId>, Option<Vec<VertexId>>>,
                       by_key: &BTreeMap<Vec<VertexId>, Curve>| {
        let mut path = Vec::new();
        let mut cur = Some(terminal_key.clone());
        while let Some(key) = cur {
            path.push(by_key[&key].clone());
            cur = parent[&key].clone();
        }
        path.reverse();
        ContractionSequence {
            base_point: p,
            curves: path,
        }
    };

    if terminal_cell(k, start, p).is_some() {
        return Ok(reconstruct(&key0, &parent, &by_key));
    }

    let mut expanded = 0usize;
    while let Some(key) = queue.pop_front() {
        if expanded >= budget {
            return Err(ContractionError::BudgetExhausted {
                expanded,
                space_exhausted: false,
            });
        }
        expanded += 1;
        let cur = by_key[&key].clone();
        for t in k.cells(2) {
            let Some(next) = cur.flip(t) else { continue };
            if !next.contains_vertex(p) {
                continue;
            }
            let nkey = next.canonical().to_vec();
            if parent.contains_key(&nkey) {
                continue;
            }
            parent.insert(nkey.clone(), Some(key.clone()));
            by_key.insert(nkey.clone(), next.clone());
            if terminal_cell(k, &next, p).is_some() {
                return Ok(reconstruct(&nkey, &parent, &by_key));
            }
            queue.push_back(nkey);
        }
    }
    Err(ContractionError::BudgetExhausted {
        expanded,
        space_exhausted: true,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complex::{seven_vertex_torus, simplex_boundary};

    #[test]
    fn canonical_form_invariance() {
        let a = Curve::from_ids(&[0, 1, 2, 3]);
        let b = Curve::from_ids(&[2, 3, 0, 1]);
        let c = Curve::from_ids(&[3, 2, 1, 0]);
        assert_eq!(a, b);
        assert_eq!(a, c);
        assert_eq!(
            a.canonical(),
            &[VertexId(0), VertexId(1), VertexId(2), VertexId(3)]
        );
    }

    #[test]
    fn degree_and_connectivity_enforced() {
        // two disjoint triangles
        let edges = [
            Cell::from_ids(&[0, 1]),
            Cell::from_ids(&[1, 2]),
            Cell::from_ids(&[0, 2]),
            Cell::from_ids(&[3, 4]),
            Cell::from_ids(&[4, 5]),
            Cell::from_ids(&[3, 5]),
        ];
        assert_eq!(Curve::from_edges(edges), Err(CurveError::Disconnected));
        // a theta shape (degree-3 vertex) is rejected
        let theta = [
            Cell::from_ids(&[0, 1]),
            Cell::from_ids(&[1, 2]),
            Cell::from_ids(&[0, 2]),
            Cell::from_ids(&[0, 3]),
        ];
        assert!(matches!(
            Curve::from_edges(theta),
            Err(CurveError::BadDegree(_, _))
        ));
    }

    /// Brute-force oracle: try every 2-cell and test the symmetric
    /// difference directly.
    fn gradual_oracle(k: &Complex, c1: &Curve, c2: &Curve) -> Option<Cell> {
        let diff = c1.symmetric_difference(c2);
        let mut hits: Vec<Cell> = k
            .cells(2)
            .iter()
            .filter(|t| {
                let tb: BTreeSet<Cell> = t.facets().into_iter().collect();
                tb == diff
            })
            .cloned()
            .collect();
        if hits.len() == 1 {
            hits.pop()
        } else {
            None
        }
    }

    #[test]
    fn gradual_move_found_and_oracle_agrees() {
        let k = simplex_boundary(2);
        let c1 = Curve::from_ids(&[0, 1, 2]);
        let c2 = Curve::from_ids(&[0, 1, 3, 2]);
        assert_eq!(
            gradual_move_cell(&k, &c1, &c2),
            Some(Cell::from_ids(&[1, 2, 3]))
        );
        assert_eq!(gradual_move_cell(&k, &c1, &c2), gradual_oracle(&k, &c1, &c2));
        // identity yields nothing
        assert_eq!(gradual_move_cell(&k, &c1, &c1), None);
        // two triangles apart yields nothing, matching the oracle
        let c3 = Curve::from_ids(&[0, 3, 1, 2]);
        assert_eq!(gradual_move_cell(&k, &c2, &c3), gradual_oracle(&k, &c2, &c3));
    }

    #[test]
    fn gradual_move_is_symmetric_and_involutive() {
        let k = simplex_boundary(2);
        let c1 = Curve::from_ids(&[0, 1, 2]);
        let c2 = Curve::from_ids(&[0, 1, 3, 2]);
        assert_eq!(
            gradual_move_cell(&k, &c1, &c2),
            gradual_move_cell(&k, &c2, &c1)
        );
        let t = gradual_move_cell(&k, &c1, &c2).unwrap();
        assert_eq!(c1.flip(&t).unwrap(), c2);
        assert_eq!(c2.flip(&t).unwrap(), c1);
    }

    #[test]
    fn validate_terminal_and_base_point() {
        let k = simplex_boundary(2);
        let seq = ContractionSequence {
            base_point: VertexId(0),
            curves: vec![Curve::from_ids(&[0, 1, 2])],
        };
        assert!(validate_contraction(&k, &seq).valid);

        let wrong_base = ContractionSequence {
            base_point: VertexId(3),
            curves: vec![Curve::from_ids(&[0, 1, 2])],
        };
        let rep = validate_contraction(&k, &wrong_base);
        assert_eq!(
            rep.first_violation,
            Some((0, ContractionViolation::MissingBasePoint))
        );

        let non_terminal = ContractionSequence {
            base_point: VertexId(0),
            curves: vec![Curve::from_ids(&[0, 1, 3, 2])],
        };
        let rep = validate_contraction(&k, &non_terminal);
        assert_eq!(
            rep.first_violation,
            Some((0, ContractionViolation::NonTerminalFinalCurve))
        );
    }

    #[test]
    fn search_on_sphere_contracts() {
        let k = simplex_boundary(2);
        let c = Curve::from_ids(&[0, 1, 2]);
        let seq = search_contraction(&k, &c, VertexId(0), 100).unwrap();
        assert_eq!(seq.curves.len(), 1);

        let c = Curve::from_ids(&[0, 1, 3, 2]);
        let seq = search_contraction(&k, &c, VertexId(0), 100).unwrap();
        assert!(seq.curves.len() <= 3); // at most two moves
        assert!(validate_contraction(&k, &seq).valid);
    }

    #[test]
    fn search_results_always_validate() {
        let k = simplex_boundary(3);
        for ids in [[0u32, 1, 2, 3], [0, 2, 1, 4], [0, 1, 4, 2]] {
            let c = Curve::from_ids(&ids);
            let seq = search_contraction(&k, &c, VertexId(0), 10_000).unwrap();
            assert!(validate_contraction(&k, &seq).valid, "start {ids:?}");
        }
    }

    #[test]
    fn torus_cycle_is_inconclusive() {
        let k = seven_vertex_torus();
        let c = Curve::from_ids(&[0, 1, 2, 3, 4, 5, 6]);
        match search_contraction(&k, &c, VertexId(0), 10_000) {
            Err(ContractionError::BudgetExhausted { .. }) => {}
            other => panic!("expected inconclusive search, got {other:?}"),
        }
        // a tiny budget trips before the space is exhausted
        match search_contraction(&k, &c, VertexId(0), 5) {
            Err(ContractionError::BudgetExhausted {
                space_exhausted, ..
            }) => assert!(!space_exhausted),
            other => panic!("expected budget stop, got {other:?}"),
        }
    }

    #[test]
    fn wrong_base_point_rejected() {
        let k = simplex_boundary(2);
        let c = Curve::from_ids(&[1, 2, 3]);
        assert_eq!(
            search_contraction(&k, &c, VertexId(0), 10),
            Err(ContractionError::BasePointNotOnCurve(VertexId(0)))
        );
    }
}
