//! Exact convex geometry of achievable sets in `[0,1]^n`: frontier
//! computation by outer approximation over weighted-sum LP oracles, face
//! queries, relative-interior tests and hull membership. No tolerance
//! parameter exists anywhere in this module; every comparison is exact.

use crate::lp::{lp_solve, LinearProgram, LpOutcome, Relation};
use crate::model::{induce, Mdp, MemorylessStrategy, StateId, Strategy};
use crate::num::{dot, normalize_l1, primitive_integer_direction, Rational};
use crate::reach::{extract_memoryless, weighted_optimum, ReachError};
use num_bigint::BigUint;
use num_traits::{One, Signed, Zero};
use std::collections::BTreeSet;
use thiserror::Error;

pub type Point = Vec<Rational>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GeometryError {
    #[error("point violates facet {facet}: it lies outside the polytope")]
    PointOutside { facet: usize },
    #[error("point is strictly inside the polytope; no facet is tight")]
    PointStrictlyInside,
    #[error("point is not a vertex of the polytope")]
    NotAVertex,
    #[error("point is not in the relative interior of the face")]
    NotRelativelyInterior,
    #[error("frontier geometry supports at most 3 objectives, got {0}")]
    TooManyObjectives(usize),
}

/// One certified upper facet: `normal . x <= offset` with `normal >= 0` and
/// `|normal|_1 = 1`; `support` is the LP optimum in direction `normal`,
/// equal to `offset` exactly by the completeness certificate.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Facet {
    pub normal: Vec<Rational>,
    pub offset: Rational,
    pub support: Rational,
}

/// Exact V- and H-representation of the <=-maximal boundary of an
/// achievable set.
#[derive(Debug, Clone)]
pub struct Polytope {
    pub dim: usize,
    /// <=-maximal extreme points, lexicographically sorted.
    pub vertices: Vec<Point>,
    /// Frontier points reported to users: the extreme vertices plus the
    /// <=-maximal reach vectors of pure memoryless strategies when the model
    /// is small enough to sweep.
    pub frontier_points: Vec<Point>,
    pub upper_facets: Vec<Facet>,
    /// Memoryless strategy achieving each vertex exactly, from the query
    /// state, in vertex order.
    pub achievers: Vec<MemorylessStrategy>,
}

#[derive(Debug, Clone)]
pub struct Face {
    /// Indices of the tight upper facets.
    pub tight: Vec<usize>,
    /// Polytope vertices tight on all listed facets.
    pub vertices: Vec<Point>,
    /// Affine dimension of those vertices.
    pub dimension: usize,
}

/// Affine rank of a point set (dimension of its affine hull).
pub fn affine_dimension(points: &[Point]) -> usize {
    let Some(first) = points.first() else {
        return 0;
    };
    let diffs: Vec<Vec<Rational>> = points[1..]
        .iter()
        .map(|p| p.iter().zip(first).map(|(a, b)| a - b).collect())
        .collect();
    matrix_rank(&diffs)
}

fn matrix_rank(rows: &[Vec<Rational>]) -> usize {
    let mut mat: Vec<Vec<Rational>> = rows.to_vec();
    let cols = mat.first().map(|r| r.len()).unwrap_or(0);
    let mut rank = 0;
    for col in 0..cols {
        let Some(pivot) = (rank..mat.len()).find(|&r| !mat[r][col].is_zero()) else {
            continue;
        };
        mat.swap(rank, pivot);
        for r in 0..mat.len() {
            if r != rank && !mat[r][col].is_zero() {
                let factor = &mat[r][col] / &mat[rank][col];
                for c in 0..cols {
                    let delta = &factor * &mat[rank][c];
                    mat[r][c] -= delta;
                }
            }
        }
        rank += 1;
        if rank == mat.len() {
            break;
        }
    }
    rank
}

/// All coordinate shadows of the points: zeroing every subset of coordinates
/// yields a vertex superset of the downward closure's hull.
fn shadows(points: &[Point], dim: usize) -> Vec<Point> {
    let mut out: BTreeSet<Vec<Rational>> = BTreeSet::new();
    for p in points {
        for mask in 0..(1u32 << dim) {
            let mut q = p.clone();
            for j in 0..dim {
                if mask & (1 << j) != 0 {
                    q[j] = Rational::zero();
                }
            }
            out.insert(q);
        }
    }
    out.into_iter().collect()
}

/// Candidate facet normals for the downward closure of `points` in
/// dimension <= 3: axis directions, segment rotations, triple cross
/// products, and the orthogonal complement for flat hulls.
fn candidate_normals(q: &[Point], dim: usize) -> Result<Vec<Vec<Rational>>, GeometryError> {
    let mut cands: BTreeSet<Vec<Rational>> = BTreeSet::new();
    let mut push = |v: Vec<Rational>| {
        if v.iter().all(|x| x.is_zero()) {
            return;
        }
        let flipped: Vec<Rational> = v.iter().map(|x| -x.clone()).collect();
        for w in [v, flipped] {
            if w.iter().all(|x| !x.is_negative()) {
                cands.insert(normalize_l1(&w));
            }
        }
    };
    for j in 0..dim {
        let mut e = vec![Rational::zero(); dim];
        e[j] = Rational::one();
        push(e);
    }
    match dim {
        0 | 1 => {}
        2 => {
            for a in q {
                for b in q {
                    let d0 = &a[0] - &b[0];
                    let d1 = &a[1] - &b[1];
                    push(vec![-d1.clone(), d0.clone()]);
                }
            }
        }
        3 => {
            for a in q {
                for b in q {
                    for c in q {
                        let u: Vec<Rational> = (0..3).map(|k| &b[k] - &a[k]).collect();
                        let v: Vec<Rational> = (0..3).map(|k| &c[k] - &a[k]).collect();
                        let cross = vec![
                            &u[1] * &v[2] - &u[2] * &v[1],
                            &u[2] * &v[0] - &u[0] * &v[2],
                            &u[0] * &v[1] - &u[1] * &v[0],
                        ];
                        push(cross);
                    }
                    // Flat hulls: segment direction crossed with each axis.
                    let u: Vec<Rational> = (0..3).map(|k| &b[k] - &a[k]).collect();
                    for j in 0..3 {
                        let mut e = vec![Rational::zero(); 3];
                        e[j] = Rational::one();
                        let cross = vec![
                            &u[1] * &e[2] - &u[2] * &e[1],
                            &u[2] * &e[0] - &u[0] * &e[2],
                            &u[0] * &e[1] - &u[1] * &e[0],
                        ];
                        push(cross);
                    }
                }
            }
        }
        n => return Err(GeometryError::TooManyObjectives(n)),
    }
    Ok(cands.into_iter().collect())
}

/// Upper facets (normal >= 0, L1-normalized) of the downward closure of
/// `points` within the nonnegative orthant, implicit equalities included.
pub fn upper_facets(points: &[Point], dim: usize) -> Result<Vec<Facet>, GeometryError> {
    assert!(!points.is_empty());
    let q = shadows(points, dim);
    let polydim = affine_dimension(&q);
    let mut facets = Vec::new();
    for normal in candidate_normals(&q, dim)? {
        let offset = q
            .iter()
            .map(|p| dot(&normal, p))
            .max()
            .expect("nonempty point set");
        let tight: Vec<&Point> = q.iter().filter(|p| dot(&normal, p) == offset).collect();
        let tight_owned: Vec<Point> = tight.iter().map(|p| (*p).clone()).collect();
        let tight_dim = affine_dimension(&tight_owned);
        // Proper facets span one dimension less than the polytope; implicit
        // equalities (flat polytopes) span it fully and are kept so that
        // boundary tests on degenerate sets stay meaningful.
        if tight_dim + 1 >= polydim {
            facets.push(Facet { normal, offset, support: Rational::zero() });
        }
    }
    Ok(facets)
}

/// Computes the exact Pareto frontier of the reachability objectives of `m`
/// from `s0` by Benson-style outer approximation: every upper facet of the
/// running inner hull is certified against the occupation LP, every
/// uncovered optimum becomes a new vertex with its achieving strategy.
pub fn frontier(m: &Mdp, s0: StateId) -> Result<Polytope, FrontierError> {
    let dim = m.targets().len();
    if dim > 3 {
        return Err(FrontierError::Geometry(GeometryError::TooManyObjectives(dim)));
    }
    let tiebreaks: Vec<usize> = (0..dim).collect();
    let mut vertices: Vec<Point> = Vec::new();
    let mut solutions = Vec::new();

    let probe = |direction: &[Rational],
                     vertices: &mut Vec<Point>,
                     solutions: &mut Vec<crate::reach::OccupationSolution>|
     -> Result<Rational, FrontierError> {
        let (point, value, solution) = weighted_optimum(m, s0, direction, &tiebreaks)?;
        if !vertices.contains(&point) {
            vertices.push(point);
            solutions.push(solution);
        }
        Ok(value)
    };

    // Axis probes seed the hull.
    for j in 0..dim {
        let mut e = vec![Rational::zero(); dim];
        e[j] = Rational::one();
        probe(&e, &mut vertices, &mut solutions)?;
    }

    // Refine until every facet of the inner hull is certified.
    let facets = loop {
        let mut facets = upper_facets(&vertices, dim).map_err(FrontierError::Geometry)?;
        let mut grew = false;
        for facet in facets.iter_mut() {
            let value = probe(&facet.normal, &mut vertices, &mut solutions)?;
            facet.support = value.clone();
            if value > facet.offset {
                grew = true;
                break;
            }
            assert_eq!(value, facet.offset, "oracle below inner hull is impossible");
        }
        if !grew {
            break facets;
        }
    };

    // Keep only <=-maximal extreme points (all probes return such points),
    // ordered lexicographically for deterministic output.
    let mut order: Vec<usize> = (0..vertices.len()).collect();
    order.sort_by(|&a, &b| vertices[a].cmp(&vertices[b]));
    let vertices_sorted: Vec<Point> = order.iter().map(|&i| vertices[i].clone()).collect();
    let achievers: Vec<MemorylessStrategy> = order
        .iter()
        .map(|&i| {
            let strategy = extract_memoryless(m, s0, &solutions[i]);
            // The achiever must reproduce its vertex exactly.
            let chain = induce(m, &Strategy::Memoryless(strategy.clone()), s0, &BigUint::one())
                .expect("achiever plays enabled actions");
            assert_eq!(
                chain.reach_vector(),
                vertices[i],
                "internal certificate failure: achiever misses its vertex"
            );
            strategy
        })
        .collect();

    let mut frontier_points = vertices_sorted.clone();
    for anchor in sweep_anchor_points(m, s0) {
        if !frontier_points.contains(&anchor) {
            frontier_points.push(anchor);
        }
    }
    // Drop dominated anchors, keep <=-maximal ones only.
    let maximal: Vec<Point> = frontier_points
        .iter()
        .filter(|p| {
            !frontier_points
                .iter()
                .any(|q| q != *p && p.iter().zip(q.iter()).all(|(a, b)| a <= b))
        })
        .cloned()
        .collect();
    let mut frontier_points = maximal;
    frontier_points.sort();

    Ok(Polytope {
        dim,
        vertices: vertices_sorted,
        frontier_points,
        upper_facets: facets,
        achievers,
    })
}

#[derive(Debug, Error)]
pub enum FrontierError {
    #[error(transparent)]
    Reach(#[from] ReachError),
    #[error(transparent)]
    Geometry(GeometryError),
}

/// Reach vectors of all pure memoryless strategies, <=-maximal only; the
/// operational frontier of small models. `None` when the model is too large
/// to sweep (more than 8 non-sink state-action pairs).
pub fn sweep_maximal_vectors(m: &Mdp, s0: StateId) -> Option<Vec<Point>> {
    if m.non_sink_pairs() > 8 {
        return None;
    }
    let non_sinks: Vec<StateId> = m.states().filter(|&s| !m.is_sink(s)).collect();
    let mut combos: Vec<Vec<usize>> = vec![Vec::new()];
    for &s in &non_sinks {
        let count = m.enabled(s).len();
        combos = combos
            .into_iter()
            .flat_map(|c| {
                (0..count).map(move |k| {
                    let mut c2 = c.clone();
                    c2.push(k);
                    c2
                })
            })
            .collect();
    }
    let mut vectors: Vec<Point> = Vec::new();
    for combo in combos {
        let mut strategy = MemorylessStrategy::default();
        for (idx, &s) in non_sinks.iter().enumerate() {
            let (a, _) = m.enabled(s)[combo[idx]];
            strategy.set(m.state_name(s), m.action_name(a));
        }
        for s in m.states() {
            if m.is_sink(s) {
                strategy.set(m.state_name(s), crate::model::SINK_ACTION);
            }
        }
        let chain = induce(m, &Strategy::Memoryless(strategy), s0, &BigUint::one())
            .expect("pure sweep strategies play enabled actions");
        let v = chain.reach_vector();
        if !vectors.contains(&v) {
            vectors.push(v);
        }
    }
    let maximal: Vec<Point> = vectors
        .iter()
        .filter(|p| {
            !vectors
                .iter()
                .any(|q| q != *p && p.iter().zip(q.iter()).all(|(a, b)| a <= b))
        })
        .cloned()
        .collect();
    let mut maximal = maximal;
    maximal.sort();
    Some(maximal)
}

fn sweep_anchor_points(m: &Mdp, s0: StateId) -> Vec<Point> {
    sweep_maximal_vectors(m, s0).unwrap_or_default()
}

/// The smallest face of the polytope containing boundary point `x`: the set
/// of all upper facets tight at `x`.
pub fn smallest_face(p: &Polytope, x: &Point) -> Result<Face, GeometryError> {
    for (i, facet) in p.upper_facets.iter().enumerate() {
        if dot(&facet.normal, x) > facet.offset {
            return Err(GeometryError::PointOutside { facet: i });
        }
    }
    let tight: Vec<usize> = p
        .upper_facets
        .iter()
        .enumerate()
        .filter(|(_, f)| dot(&f.normal, x) == f.offset)
        .map(|(i, _)| i)
        .collect();
    if tight.is_empty() {
        return Err(GeometryError::PointStrictlyInside);
    }
    let vertices: Vec<Point> = p
        .vertices
        .iter()
        .filter(|v| tight.iter().all(|&i| {
            let f = &p.upper_facets[i];
            dot(&f.normal, v) == f.offset
        }))
        .cloned()
        .collect();
    let dimension = affine_dimension(&vertices);
    Ok(Face { tight, vertices, dimension })
}

/// Direction orthogonal to a face: the L1-normalized sum of the tight
/// facets' primitive integer normals. Constant on the face, nonnegative.
pub fn face_normal(p: &Polytope, face: &Face) -> Vec<Rational> {
    assert!(!face.tight.is_empty());
    let dim = p.dim;
    let mut sum = vec![Rational::zero(); dim];
    for &i in &face.tight {
        let primitive = primitive_integer_direction(&p.upper_facets[i].normal);
        for (k, v) in primitive.iter().enumerate() {
            sum[k] += Rational::from_integer(v.clone());
        }
    }
    normalize_l1(&sum)
}

pub fn is_vertex(p: &Polytope, x: &Point) -> bool {
    p.vertices.contains(x)
}

/// A direction `w >= 0`, `|w|_1 = 1` with `w . x > w . y` for every other
/// vertex: the sum of tight primitive normals when that already separates,
/// otherwise an exact LP over the vertex list.
pub fn separating_direction(p: &Polytope, x: &Point) -> Result<Vec<Rational>, GeometryError> {
    if !is_vertex(p, x) {
        return Err(GeometryError::NotAVertex);
    }
    let tight: Vec<usize> = p
        .upper_facets
        .iter()
        .enumerate()
        .filter(|(_, f)| dot(&f.normal, x) == f.offset)
        .map(|(i, _)| i)
        .collect();
    let mut sum = vec![Rational::zero(); p.dim];
    for &i in &tight {
        let primitive = primitive_integer_direction(&p.upper_facets[i].normal);
        for (k, v) in primitive.iter().enumerate() {
            sum[k] += Rational::from_integer(v.clone());
        }
    }
    let w = normalize_l1(&sum);
    let separates = p
        .vertices
        .iter()
        .all(|y| y == x || dot(&w, x) > dot(&w, y));
    if separates {
        return Ok(w);
    }

    // Ties remain: search the normal cone by exact LP, maximizing the
    // worst-case separation gap.
    let dim = p.dim;
    let mut lp = LinearProgram::maximize({
        let mut obj = vec![Rational::zero(); dim + 1];
        obj[dim] = Rational::one();
        obj
    });
    lp.mark_free(dim);
    let mut norm_row = vec![Rational::one(); dim + 1];
    norm_row[dim] = Rational::zero();
    lp.constrain(norm_row, Relation::Eq, Rational::one());
    for y in &p.vertices {
        if y == x {
            continue;
        }
        let mut row: Vec<Rational> = x.iter().zip(y).map(|(a, b)| a - b).collect();
        row.push(-Rational::one());
        lp.constrain(row, Relation::Ge, Rational::zero());
    }
    match lp_solve(&lp) {
        LpOutcome::Optimal(sol) if sol.value.is_positive() => {
            Ok(sol.point[..dim].to_vec())
        }
        _ => Err(GeometryError::NotAVertex),
    }
}

/// Exact hull membership: weights with `sum(lambda_j z_j) = x`,
/// `lambda >= 0`, `sum lambda = 1` when they exist.
pub fn in_hull(points: &[Point], x: &Point) -> Option<Vec<Rational>> {
    assert!(!points.is_empty());
    let k = points.len();
    let dim = x.len();
    let mut lp = LinearProgram::maximize(vec![Rational::zero(); k]);
    lp.constrain(vec![Rational::one(); k], Relation::Eq, Rational::one());
    for c in 0..dim {
        let row: Vec<Rational> = points.iter().map(|z| z[c].clone()).collect();
        lp.constrain(row, Relation::Eq, x[c].clone());
    }
    match lp_solve(&lp) {
        LpOutcome::Optimal(sol) => Some(sol.point),
        _ => None,
    }
}

/// True iff `x` lies in the relative interior of `conv(points)`: decided by
/// maximizing the minimum hull weight; a strictly positive optimum means a
/// representation positive on every point exists.
pub fn relative_interior_test(points: &[Point], x: &Point) -> bool {
    assert!(!points.is_empty());
    let k = points.len();
    let dim = x.len();
    // Variables: lambda_1..k, t; maximize t with lambda_j >= t.
    let mut obj = vec![Rational::zero(); k + 1];
    obj[k] = Rational::one();
    let mut lp = LinearProgram::maximize(obj);
    let mut sum_row = vec![Rational::one(); k + 1];
    sum_row[k] = Rational::zero();
    lp.constrain(sum_row, Relation::Eq, Rational::one());
    for c in 0..dim {
        let mut row: Vec<Rational> = points.iter().map(|z| z[c].clone()).collect();
        row.push(Rational::zero());
        lp.constrain(row, Relation::Eq, x[c].clone());
    }
    for j in 0..k {
        let mut row = vec![Rational::zero(); k + 1];
        row[j] = Rational::one();
        row[k] = -Rational::one();
        lp.constrain(row, Relation::Ge, Rational::zero());
    }
    match lp_solve(&lp) {
        LpOutcome::Optimal(sol) => sol.value.is_positive(),
        _ => false,
    }
}

/// Finds strictly positive hull weights whose combination dominates `x`
/// componentwise, used on degenerate flat faces where `x` is dominated but
/// not in the relative interior. Returns the dominating interior point and
/// its weights.
pub fn dominating_interior_point(points: &[Point], x: &Point) -> Option<(Point, Vec<Rational>)> {
    assert!(!points.is_empty());
    let k = points.len();
    let dim = x.len();
    let mut obj = vec![Rational::zero(); k + 1];
    obj[k] = Rational::one();
    let mut lp = LinearProgram::maximize(obj);
    let mut sum_row = vec![Rational::one(); k + 1];
    sum_row[k] = Rational::zero();
    lp.constrain(sum_row, Relation::Eq, Rational::one());
    for c in 0..dim {
        let mut row: Vec<Rational> = points.iter().map(|z| z[c].clone()).collect();
        row.push(Rational::zero());
        lp.constrain(row, Relation::Ge, x[c].clone());
    }
    for j in 0..k {
        let mut row = vec![Rational::zero(); k + 1];
        row[j] = Rational::one();
        row[k] = -Rational::one();
        lp.constrain(row, Relation::Ge, Rational::zero());
    }
    match lp_solve(&lp) {
        LpOutcome::Optimal(sol) if sol.value.is_positive() => {
            let lambda = sol.point[..k].to_vec();
            let mut point = vec![Rational::zero(); dim];
            for (j, z) in points.iter().enumerate() {
                for c in 0..dim {
                    point[c] += &lambda[j] * &z[c];
                }
            }
            Some((point, lambda))
        }
        _ => None,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus::gameshow;
    use crate::num::{primitive_integer_direction, rat};
    use num_bigint::BigInt;
    use std::collections::BTreeSet;

    fn pruned_gameshow() -> Mdp {
        // The carry-forward model after projecting on (1,1) and pruning the
        // uppermost state: s keeps pair2, s2 keeps a and b.
        let m = gameshow();
        let keep: BTreeSet<crate::model::StateId> = m
            .states()
            .filter(|&s| m.state_name(s) != "s1")
            .collect();
        m.restrict(&keep)
    }

    #[test]
    fn gameshow_frontier_matches_the_figure() {
        let m = gameshow();
        let p = frontier(&m, m.initial().unwrap()).unwrap();
        assert_eq!(
            p.vertices,
            vec![vec![rat(1, 3), rat(1, 1)], vec![rat(1, 1), rat(1, 3)]]
        );
        // The reported frontier points add the deterministic anchor.
        assert_eq!(
            p.frontier_points,
            vec![
                vec![rat(1, 3), rat(1, 1)],
                vec![rat(2, 3), rat(2, 3)],
                vec![rat(1, 1), rat(1, 3)],
            ]
        );
        // Certified facets: x1 <= 1, x2 <= 1 and the maximal segment.
        assert_eq!(p.upper_facets.len(), 3);
        for f in &p.upper_facets {
            assert_eq!(f.support, f.offset);
        }
    }

    #[test]
    fn sweep_collects_maximal_pure_vectors() {
        let m = gameshow();
        let anchors = sweep_maximal_vectors(&m, m.initial().unwrap()).unwrap();
        assert_eq!(anchors.len(), 3);
        assert!(anchors.contains(&vec![rat(2, 3), rat(2, 3)]));
    }

    #[test]
    fn pruned_frontier_is_the_restricted_segment() {
        let m = pruned_gameshow();
        let p = frontier(&m, m.state_by_name("s").unwrap()).unwrap();
        assert_eq!(
            p.vertices,
            vec![vec![rat(1, 3), rat(1, 1)], vec![rat(2, 3), rat(2, 3)]]
        );
    }

    #[test]
    fn single_target_single_sink_frontier() {
        let mut b = crate::model::MdpBuilder::new();
        b.state("s", 1)
            .sink("f", 0, &["F"])
            .initial("s")
            .action("s", "go", &[("f", rat(1, 1))]);
        let m = b.build().unwrap();
        let p = frontier(&m, m.initial().unwrap()).unwrap();
        assert_eq!(p.vertices, vec![vec![rat(1, 1)]]);
    }

    #[test]
    fn smallest_face_of_segment_point() {
        let m = pruned_gameshow();
        let p = frontier(&m, m.state_by_name("s").unwrap()).unwrap();
        let face = smallest_face(&p, &vec![rat(1, 2), rat(5, 6)]).unwrap();
        assert_eq!(face.vertices.len(), 2);
        assert_eq!(face.dimension, 1);
        let normal = face_normal(&p, &face);
        assert_eq!(normal, vec![rat(1, 2), rat(1, 2)]);
    }

    #[test]
    fn smallest_face_of_a_vertex_is_zero_dimensional() {
        let m = pruned_gameshow();
        let p = frontier(&m, m.state_by_name("s").unwrap()).unwrap();
        let face = smallest_face(&p, &vec![rat(2, 3), rat(2, 3)]).unwrap();
        assert_eq!(face.vertices, vec![vec![rat(2, 3), rat(2, 3)]]);
        assert_eq!(face.dimension, 0);
        assert!(face.tight.len() >= 2);
    }

    #[test]
    fn interior_point_has_no_tight_facet() {
        let m = gameshow();
        let p = frontier(&m, m.initial().unwrap()).unwrap();
        match smallest_face(&p, &vec![rat(1, 2), rat(1, 6)]) {
            Err(GeometryError::PointStrictlyInside) => {}
            other => panic!("expected strictly inside, got {other:?}"),
        }
        match smallest_face(&p, &vec![rat(2, 1), rat(0, 1)]) {
            Err(GeometryError::PointOutside { .. }) => {}
            other => panic!("expected outside, got {other:?}"),
        }
    }

    #[test]
    fn vertex_tests_use_extreme_points_only() {
        let m = gameshow();
        let p = frontier(&m, m.initial().unwrap()).unwrap();
        assert!(is_vertex(&p, &vec![rat(1, 1), rat(1, 3)]));
        // On the unpruned model the midpoint lies on the segment's interior.
        assert!(!is_vertex(&p, &vec![rat(2, 3), rat(2, 3)]));
        let pruned = pruned_gameshow();
        let p2 = frontier(&pruned, pruned.state_by_name("s").unwrap()).unwrap();
        assert!(is_vertex(&p2, &vec![rat(2, 3), rat(2, 3)]));
        assert!(!is_vertex(&p2, &vec![rat(1, 2), rat(5, 6)]));
    }

    #[test]
    fn separating_direction_for_the_pruned_vertex() {
        let m = pruned_gameshow();
        let p = frontier(&m, m.state_by_name("s").unwrap()).unwrap();
        let w = separating_direction(&p, &vec![rat(2, 3), rat(2, 3)]).unwrap();
        assert_eq!(w, vec![rat(2, 3), rat(1, 3)]);
        assert_eq!(
            primitive_integer_direction(&w),
            vec![BigInt::from(2), BigInt::from(1)]
        );
    }

    #[test]
    fn separating_direction_for_a_box_corner() {
        let facets = upper_facets(&[vec![rat(1, 1), rat(1, 1)]], 2).unwrap();
        let p = Polytope {
            dim: 2,
            vertices: vec![vec![rat(1, 1), rat(1, 1)]],
            frontier_points: vec![vec![rat(1, 1), rat(1, 1)]],
            upper_facets: facets,
            achievers: Vec::new(),
        };
        let w = separating_direction(&p, &vec![rat(1, 1), rat(1, 1)]).unwrap();
        assert_eq!(w, vec![rat(1, 2), rat(1, 2)]);
    }

    #[test]
    fn separating_direction_rejects_non_vertices() {
        let m = gameshow();
        let p = frontier(&m, m.initial().unwrap()).unwrap();
        match separating_direction(&p, &vec![rat(2, 3), rat(2, 3)]) {
            Err(GeometryError::NotAVertex) => {}
            other => panic!("expected NotAVertex, got {other:?}"),
        }
    }

    #[test]
    fn hull_membership_finds_the_midpoint_weights() {
        let points = vec![vec![rat(1, 1), rat(1, 3)], vec![rat(1, 3), rat(1, 1)]];
        let weights = in_hull(&points, &vec![rat(2, 3), rat(2, 3)]).unwrap();
        assert_eq!(weights, vec![rat(1, 2), rat(1, 2)]);
        assert_eq!(
            in_hull(&points, &vec![rat(1, 1), rat(1, 3)]).unwrap(),
            vec![rat(1, 1), rat(0, 1)]
        );
        assert!(in_hull(&points, &vec![rat(1, 1), rat(1, 1)]).is_none());
    }

    #[test]
    fn relative_interior_of_a_segment() {
        let b = vec![vec![rat(1, 3), rat(1, 1)], vec![rat(2, 3), rat(2, 3)]];
        assert!(relative_interior_test(&b, &vec![rat(1, 2), rat(5, 6)]));
        assert!(!relative_interior_test(&b, &vec![rat(1, 3), rat(1, 1)]));
        let single = vec![vec![rat(0, 1), rat(1, 1)]];
        assert!(relative_interior_test(&single, &vec![rat(0, 1), rat(1, 1)]));
    }

    #[test]
    fn frontier_is_invariant_under_action_reordering() {
        // Declare the actions of the start state in the other order.
        let mut b = crate::model::MdpBuilder::new();
        b.state("s", 1)
            .state("s1", 1)
            .state("s2", 1)
            .sink("r1", 0, &["F1"])
            .sink("r12", 0, &["F1", "F2"])
            .sink("r2", 0, &["F2"])
            .initial("s")
            .action("s", "pair2", &[("s2", rat(1, 1))])
            .action("s", "pair1", &[("s1", rat(1, 1))])
            .action("s1", "b", &[("r2", rat(1, 1))])
            .action(
                "s1",
                "a",
                &[("r1", rat(1, 3)), ("r12", rat(1, 6)), ("s1", rat(1, 2))],
            )
            .action(
                "s2",
                "b",
                &[("r1", rat(1, 3)), ("r2", rat(1, 3)), ("r12", rat(1, 3))],
            )
            .action(
                "s2",
                "a",
                &[("r2", rat(1, 3)), ("r12", rat(1, 6)), ("s2", rat(1, 2))],
            );
        let m2 = b.build().unwrap();
        let m1 = gameshow();
        let p1 = frontier(&m1, m1.initial().unwrap()).unwrap();
        let p2 = frontier(&m2, m2.initial().unwrap()).unwrap();
        assert_eq!(p1.vertices, p2.vertices);
        assert_eq!(p1.frontier_points, p2.frontier_points);
    }
}
