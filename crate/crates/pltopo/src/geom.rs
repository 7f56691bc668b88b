//! Exact rational geometry used by validation and subdivision tests.
//!
//! Input coordinates are `f64` but every decision here is made over
//! `BigRational` (the f64 -> rational conversion is exact), so the geometric
//! predicates carry no tolerance knobs.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

pub type Rat = BigRational;

pub fn rat(x: f64) -> Rat {
    BigRational::from_float(x).expect("finite coordinate")
}

pub fn rat_point(p: &[f64]) -> Vec<Rat> {
    p.iter().map(|&x| rat(x)).collect()
}

/// Rank of a rational matrix by Gaussian elimination.
pub fn rank(mut m: Vec<Vec<Rat>>) -> usize {
    let rows = m.len();
    if rows == 0 {
        return 0;
    }
    let cols = m[0].len();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        for i in 0..rows {
            if i != r && !m[i][c].is_zero() {
                let f = &m[i][c] / &m[r][c];
                for j in c..cols {
                    let sub = &f * &m[r][j];
                    m[i][j] = &m[i][j] - sub;
                }
            }
        }
        r += 1;
    }
    r
}

/// Vertices of a simplex are affinely independent.
pub fn affinely_independent(points: &[Vec<Rat>]) -> bool {
    if points.len() <= 1 {
        return true;
    }
    let base = &points[0];
    let diffs: Vec<Vec<Rat>> = points[1..]
        .iter()
        .map(|p| p.iter().zip(base).map(|(a, b)| a - b).collect())
        .collect();
    rank(diffs) == points.len() - 1
}

/// Barycentric coordinates of `point` with respect to the affinely
/// independent `vertices`; `None` when the point is off the affine hull.
pub fn barycentric_coords(vertices: &[Vec<Rat>], point: &[Rat]) -> Option<Vec<Rat>> {
    let k = vertices.len();
    let n = point.len();
    // rows: n coordinate equations plus the partition-of-unity row
    let mut aug: Vec<Vec<Rat>> = Vec::with_capacity(n + 1);
    for d in 0..n {
        let mut row: Vec<Rat> = vertices.iter().map(|v| v[d].clone()).collect();
        row.push(point[d].clone());
        aug.push(row);
    }
    let mut unit: Vec<Rat> = vec![Rat::one(); k];
    unit.push(Rat::one());
    aug.push(unit);
    solve_unique(aug, k)
}

/// Solves the augmented system (last column = rhs) expecting a unique
/// solution in `k` unknowns; `None` if inconsistent or rank-deficient.
fn solve_unique(mut aug: Vec<Vec<Rat>>, k: usize) -> Option<Vec<Rat>> {
    let rows = aug.len();
    let mut pivot_of_col: Vec<Option<usize>> = vec![None; k];
    let mut r = 0;
    for c in 0..k {
        let Some(p) = (r..rows).find(|&i| !aug[i][c].is_zero()) else {
            continue;
        };
        aug.swap(r, p);
        let inv = aug[r][c].clone();
        for j in c..=k {
            aug[r][j] = &aug[r][j] / &inv;
        }
        for i in 0..rows {
            if i != r && !aug[i][c].is_zero() {
                let f = aug[i][c].clone();
                for j in c..=k {
                    let sub = &f * &aug[r][j];
                    aug[i][j] = &aug[i][j] - sub;
                }
            }
        }
        pivot_of_col[c] = Some(r);
        r += 1;
    }
    // inconsistent row: 0 = nonzero
    for i in r..rows {
        if !aug[i][k].is_zero() {
            return None;
        }
    }
    if pivot_of_col.iter().any(|p| p.is_none()) {
        return None;
    }
    Some(
        pivot_of_col
            .iter()
            .map(|p| aug[p.unwrap()][k].clone())
            .collect(),
    )
}

/// `point` lies in the closed simplex spanned by `vertices`.
pub fn point_in_simplex(vertices: &[Vec<Rat>], point: &[Rat]) -> bool {
    match barycentric_coords(vertices, point) {
        Some(coords) => coords.iter().all(|c| !c.is_negative()),
        None => false,
    }
}

/// Outcome of the pairwise simplex intersection test.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum IntersectionKind {
    /// Intersection equals the common face (possibly empty).
    Proper,
    /// The realizations overlap beyond their shared vertices.
    Improper,
}

/// Decides whether two affinely independent simplices meet exactly in the
/// simplex spanned by their shared vertices.
///
/// Solved as one exact LP: maximize the barycentric mass carried by
/// non-shared vertices over all common points. The simplices intersect
/// properly iff that maximum is zero (or no common point exists).
pub fn simplex_intersection(
    a: &[Vec<Rat>],
    b: &[Vec<Rat>],
    shared_in_a: &[bool],
    shared_in_b: &[bool],
) -> IntersectionKind {
    let n = a[0].len();
    let s = a.len();
    let t = b.len();
    let vars = s + t;
    // rows: n coordinate-matching equations, then one unity row per simplex
    let mut rows: Vec<Vec<Rat>> = Vec::with_capacity(n + 2);
    let mut rhs: Vec<Rat> = Vec::with_capacity(n + 2);
    for d in 0..n {
        let mut row = Vec::with_capacity(vars);
        for p in a {
            row.push(p[d].clone());
        }
        for q in b {
            row.push(-q[d].clone());
        }
        rows.push(row);
        rhs.push(Rat::zero());
    }
    let mut unity_a = vec![Rat::zero(); vars];
    for cell in unity_a.iter_mut().take(s) {
        *cell = Rat::one();
    }
    rows.push(unity_a);
    rhs.push(Rat::one());
    let mut unity_b = vec![Rat::zero(); vars];
    for cell in unity_b.iter_mut().skip(s) {
        *cell = Rat::one();
    }
    rows.push(unity_b);
    rhs.push(Rat::one());

    let mut objective = vec![Rat::zero(); vars];
    for (i, shared) in shared_in_a.iter().enumerate() {
        if !shared {
            objective[i] = Rat::one();
        }
    }
    for (j, shared) in shared_in_b.iter().enumerate() {
        if !shared {
            objective[s + j] = Rat::one();
        }
    }

    match simplex_max(&rows, &rhs, &objective) {
        None => IntersectionKind::Proper, // disjoint realizations
        Some(opt) => {
            if opt.is_zero() {
                IntersectionKind::Proper
            } else {
                IntersectionKind::Improper
            }
        }
    }
}

/// Maximizes `c . x` subject to `A x = b`, `x >= 0`, exactly.
///
/// Returns `None` when infeasible. Two-phase tableau simplex with Bland's
/// rule; problem sizes here are tiny (<= ~12 variables).
pub fn simplex_max(a: &[Vec<Rat>], b: &[Rat], c: &[Rat]) -> Option<Rat> {
    let m = a.len();
    let n = c.len();
    let total = n + m; // originals + artificials
    // tableau rows: constraints with rhs appended; artificials form the basis
    let mut tab: Vec<Vec<Rat>> = Vec::with_capacity(m);
    for i in 0..m {
        let mut row: Vec<Rat> = Vec::with_capacity(total + 1);
        let flip = b[i].is_negative();
        for j in 0..n {
            row.push(if flip { -a[i][j].clone() } else { a[i][j].clone() });
        }
        for j in 0..m {
            row.push(if i == j { Rat::one() } else { Rat::zero() });
        }
        row.push(if flip { -b[i].clone() } else { b[i].clone() });
        tab.push(row);
    }
    let mut basis: Vec<usize> = (n..total).collect();

    // Phase 1: minimize the artificial mass.
    let mut phase_cost = vec![Rat::zero(); total];
    for cost in phase_cost.iter_mut().take(total).skip(n) {
        *cost = Rat::one();
    }
    run_simplex(&mut tab, &mut basis, &phase_cost, total);
    let art_mass: Rat = basis
        .iter()
        .enumerate()
        .filter(|(_, &v)| v >= n)
        .map(|(i, _)| tab[i][total].clone())
        .fold(Rat::zero(), |acc, x| acc + x);
    if !art_mass.is_zero() {
        return None;
    }
    // Pivot any artificial still sitting (at zero) in the basis out of it.
    for i in 0..m {
        if basis[i] >= n {
            if let Some(j) = (0..n).find(|&j| !tab[i][j].is_zero()) {
                pivot(&mut tab, &mut basis, i, j, total);
            }
        }
    }

    // Phase 2: maximize c.x == minimize (-c).x over the original columns.
    let mut cost: Vec<Rat> = c.iter().map(|x| -x.clone()).collect();
    cost.extend(std::iter::repeat(Rat::zero()).take(m));
    // Artificials must stay out: forbid them by pricing them prohibitively
    // only via exclusion — run_simplex never enters a column with index >= n
    // when `limit` is n.
    run_simplex(&mut tab, &mut basis, &cost, n);

    let mut value = Rat::zero();
    for (i, &bv) in basis.iter().enumerate() {
        if bv < n {
            value = value + &c[bv] * &tab[i][total];
        }
    }
    Some(value)
}

/// Minimizes `cost . x`; columns at index >= `limit` never enter the basis.
fn run_simplex(tab: &mut [Vec<Rat>], basis: &mut [usize], cost: &[Rat], limit: usize) {
    let m = tab.len();
    let rhs_col = tab[0].len() - 1;
    loop {
        // reduced cost of column j: cost_j - cost_B . column_j
        let mut entering = None;
        for j in 0..limit {
            if basis.contains(&j) {
                continue;
            }
            let mut reduced = cost[j].clone();
            for i in 0..m {
                if !tab[i][j].is_zero() {
                    let term = &cost[basis[i]] * &tab[i][j];
                    reduced = reduced - term;
                }
            }
            if reduced.is_negative() {
                entering = Some(j); // Bland: first improving index
                break;
            }
        }
        let Some(j) = entering else {
            return;
        };
        // ratio test; Bland tie-break on the leaving basic variable index
        let mut leave: Option<(usize, Rat)> = None;
        for i in 0..m {
            if tab[i][j].is_positive() {
                let ratio = &tab[i][rhs_col] / &tab[i][j];
                let better = match &leave {
                    None => true,
                    Some((li, best)) => {
                        ratio < *best || (ratio == *best && basis[i] < basis[*li])
                    }
                };
                if better {
                    leave = Some((i, ratio));
                }
            }
        }
        let Some((i, _)) = leave else {
            // Unbounded direction cannot happen for our bounded polytopes;
            // bail out rather than loop forever.
            return;
        };
        pivot(tab, basis, i, j, rhs_col);
    }
}

fn pivot(tab: &mut [Vec<Rat>], basis: &mut [usize], row: usize, col: usize, rhs_col: usize) {
    let inv = tab[row][col].clone();
    for j in 0..=rhs_col {
        tab[row][j] = &tab[row][j] / &inv;
    }
    for i in 0..tab.len() {
        if i != row && !tab[i][col].is_zero() {
            let f = tab[i][col].clone();
            for j in 0..=rhs_col {
                let sub = &f * &tab[row][j];
                tab[i][j] = &tab[i][j] - sub;
            }
        }
    }
    basis[row] = col;
}

/// Arithmetic mean of a set of rational points.
pub fn centroid(points: &[Vec<Rat>]) -> Vec<Rat> {
    let n = points[0].len();
    let k = BigInt::from(points.len());
    (0..n)
        .map(|d| {
            let sum = points
                .iter()
                .fold(Rat::zero(), |acc, p| acc + &p[d]);
            sum / Rat::from_integer(k.clone())
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pt(xs: &[f64]) -> Vec<Rat> {
        rat_point(xs)
    }

    #[test]
    fn barycentric_inside_outside() {
        let tri = vec![pt(&[0.0, 0.0]), pt(&[1.0, 0.0]), pt(&[0.0, 1.0])];
        assert!(point_in_simplex(&tri, &pt(&[0.25, 0.25])));
        assert!(point_in_simplex(&tri, &pt(&[0.5, 0.5]))); // on the hypotenuse
        assert!(!point_in_simplex(&tri, &pt(&[0.75, 0.75])));
        assert!(!point_in_simplex(&tri, &pt(&[-0.1, 0.2])));
    }

    #[test]
    fn affine_independence() {
        assert!(affinely_independent(&[
            pt(&[0.0, 0.0]),
            pt(&[1.0, 0.0]),
            pt(&[0.0, 1.0])
        ]));
        assert!(!affinely_independent(&[
            pt(&[0.0, 0.0]),
            pt(&[1.0, 1.0]),
            pt(&[2.0, 2.0])
        ]));
    }

    #[test]
    fn proper_intersection_shared_edge() {
        // two triangles sharing the edge (0,0)-(1,0), apexes on opposite sides
        let a = vec![pt(&[0.0, 0.0]), pt(&[1.0, 0.0]), pt(&[0.5, 1.0])];
        let b = vec![pt(&[0.0, 0.0]), pt(&[1.0, 0.0]), pt(&[0.5, -1.0])];
        let kind = simplex_intersection(&a, &b, &[true, true, false], &[true, true, false]);
        assert_eq!(kind, IntersectionKind::Proper);
    }

    #[test]
    fn improper_intersection_overlapping_triangles() {
        // same shared edge but both apexes above: interiors overlap
        let a = vec![pt(&[0.0, 0.0]), pt(&[1.0, 0.0]), pt(&[0.5, 1.0])];
        let b = vec![pt(&[0.0, 0.0]), pt(&[1.0, 0.0]), pt(&[0.4, 0.8])];
        let kind = simplex_intersection(&a, &b, &[true, true, false], &[true, true, false]);
        assert_eq!(kind, IntersectionKind::Improper);
    }

    #[test]
    fn disjoint_simplices_are_proper() {
        let a = vec![pt(&[0.0, 0.0]), pt(&[1.0, 0.0]), pt(&[0.0, 1.0])];
        let b = vec![pt(&[5.0, 5.0]), pt(&[6.0, 5.0]), pt(&[5.0, 6.0])];
        let kind = simplex_intersection(&a, &b, &[false; 3], &[false; 3]);
        assert_eq!(kind, IntersectionKind::Proper);
    }

    #[test]
    fn crossing_segments_detected() {
        let a = vec![pt(&[0.0, 0.0]), pt(&[1.0, 1.0])];
        let b = vec![pt(&[0.0, 1.0]), pt(&[1.0, 0.0])];
        let kind = simplex_intersection(&a, &b, &[false, false], &[false, false]);
        assert_eq!(kind, IntersectionKind::Improper);
    }
}
