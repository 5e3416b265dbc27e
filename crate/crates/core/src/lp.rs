//! Exact rational linear algebra and linear programming.
//!
//! The simplex solver works on dense tableaus of `BigRational`s with Bland's
//! anti-cycling rule, so it terminates and every reported value is exact.
//! Outcomes carry certificates (optimal basis and dual, Farkas multipliers,
//! or an improving ray) which are re-checked internally before being
//! returned. That matters here because the polytope code asks boundary
//! questions where "equal" versus "strictly less" is the whole answer.

use crate::num::{dot, Rational};
use num_traits::{One, Signed, Zero};
use thiserror::Error;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Relation {
    Le,
    Eq,
    Ge,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Direction {
    Maximize,
    Minimize,
}

#[derive(Debug, Clone)]
pub struct Constraint {
    pub coeffs: Vec<Rational>,
    pub relation: Relation,
    pub rhs: Rational,
}

/// A linear program over `num_vars` variables. Variables with `nonneg[j] =
/// false` are free and get split internally.
#[derive(Debug, Clone)]
pub struct LinearProgram {
    pub num_vars: usize,
    pub constraints: Vec<Constraint>,
    pub objective: Vec<Rational>,
    pub direction: Direction,
    pub nonneg: Vec<bool>,
}

impl LinearProgram {
    pub fn maximize(objective: Vec<Rational>) -> Self {
        let num_vars = objective.len();
        LinearProgram {
            num_vars,
            constraints: Vec::new(),
            objective,
            direction: Direction::Maximize,
            nonneg: vec![true; num_vars],
        }
    }

    pub fn minimize(objective: Vec<Rational>) -> Self {
        let mut lp = Self::maximize(objective);
        lp.direction = Direction::Minimize;
        lp
    }

    pub fn constrain(&mut self, coeffs: Vec<Rational>, relation: Relation, rhs: Rational) {
        assert_eq!(coeffs.len(), self.num_vars, "row length must match variable count");
        self.constraints.push(Constraint { coeffs, relation, rhs });
    }

    pub fn mark_free(&mut self, var: usize) {
        self.nonneg[var] = false;
    }
}

/// Exact optimal solution together with its basis and dual certificate.
#[derive(Debug, Clone)]
pub struct OptimalSolution {
    pub point: Vec<Rational>,
    pub value: Rational,
    /// Basic columns of the final tableau, in standard-form column indices.
    pub basis: Vec<usize>,
    /// Row multipliers over the original constraints; `dual . rhs == value`.
    pub dual: Vec<Rational>,
}

/// Farkas-style witness: `multipliers . A >= 0` componentwise over the
/// standard-form system while `multipliers . b < 0`.
#[derive(Debug, Clone)]
pub struct InfeasibilityCertificate {
    pub multipliers: Vec<Rational>,
}

/// A feasible point plus an improving recession ray.
#[derive(Debug, Clone)]
pub struct UnboundedCertificate {
    pub point: Vec<Rational>,
    pub ray: Vec<Rational>,
}

#[derive(Debug, Clone)]
pub enum LpOutcome {
    Infeasible(InfeasibilityCertificate),
    Unbounded(UnboundedCertificate),
    Optimal(OptimalSolution),
}

impl LpOutcome {
    pub fn optimal(&self) -> Option<&OptimalSolution> {
        match self {
            LpOutcome::Optimal(sol) => Some(sol),
            _ => None,
        }
    }

    pub fn is_feasible(&self) -> bool {
        !matches!(self, LpOutcome::Infeasible(_))
    }
}

#[derive(Debug, Error)]
pub enum LinearSystemError {
    #[error("singular system: rows are linearly dependent (witness combination {witness:?})")]
    Singular {
        /// Nontrivial row combination that collapses to zero: witness . A = 0.
        witness: Vec<Rational>,
    },
}

/// Solves `A x = b` exactly by Gaussian elimination.
///
/// On a singular system the error carries the dependent-row witness, i.e. a
/// nonzero combination of input rows that sums to the zero row.
pub fn solve_linear_system(
    a: &[Vec<Rational>],
    b: &[Rational],
) -> Result<Vec<Rational>, LinearSystemError> {
    let m = a.len();
    assert_eq!(m, b.len());
    let n = if m == 0 { 0 } else { a[0].len() };
    assert_eq!(m, n, "system must be square");

    let mut mat: Vec<Vec<Rational>> = a.to_vec();
    let mut rhs: Vec<Rational> = b.to_vec();
    // Row operations are mirrored on an identity matrix so that a vanished
    // row can be reported as an exact combination of the input rows.
    let mut transform: Vec<Vec<Rational>> = (0..m)
        .map(|i| {
            (0..m)
                .map(|j| if i == j { Rational::one() } else { Rational::zero() })
                .collect()
        })
        .collect();

    let mut pivot_row = 0;
    for col in 0..n {
        let Some(found) = (pivot_row..m).find(|&r| !mat[r][col].is_zero()) else {
            continue;
        };
        mat.swap(pivot_row, found);
        rhs.swap(pivot_row, found);
        transform.swap(pivot_row, found);
        for r in 0..m {
            if r != pivot_row && !mat[r][col].is_zero() {
                let factor = &mat[r][col] / &mat[pivot_row][col];
                for c in 0..n {
                    let delta = &factor * &mat[pivot_row][c];
                    mat[r][c] -= delta;
                }
                let delta = &factor * &rhs[pivot_row];
                rhs[r] -= delta;
                for c in 0..m {
                    let delta = &factor * &transform[pivot_row][c];
                    transform[r][c] -= delta;
                }
            }
        }
        pivot_row += 1;
        if pivot_row == m {
            break;
        }
    }

    if pivot_row < m {
        // Some reduced row is all zeros; its transform row witnesses the
        // dependency among the original rows.
        let zero_row = (0..m)
            .find(|&r| mat[r].iter().all(|v| v.is_zero()))
            .expect("rank deficiency implies a zero row");
        return Err(LinearSystemError::Singular {
            witness: transform[zero_row].clone(),
        });
    }

    // mat is now diagonal up to row permutation of pivots; back out x.
    let mut x = vec![Rational::zero(); n];
    for r in 0..m {
        let col = (0..n)
            .find(|&c| !mat[r][c].is_zero())
            .expect("nonsingular rows have a pivot");
        x[col] = &rhs[r] / &mat[r][col];
    }

    // Residual must be identically zero.
    for (row, want) in a.iter().zip(b) {
        assert_eq!(&dot(row, &x), want, "exact solve left a nonzero residual");
    }
    Ok(x)
}

struct StandardForm {
    /// Columns per original variable: (positive part, optional negative part).
    var_cols: Vec<(usize, Option<usize>)>,
    num_cols: usize,
    rows: Vec<Vec<Rational>>,
    rhs: Vec<Rational>,
    /// Sign applied to each original row to make the rhs nonnegative.
    row_sign: Vec<Rational>,
    objective: Vec<Rational>,
}

fn standardize(lp: &LinearProgram) -> StandardForm {
    let mut var_cols = Vec::with_capacity(lp.num_vars);
    let mut num_cols = 0;
    for &nn in &lp.nonneg {
        let pos = num_cols;
        num_cols += 1;
        let neg = if nn {
            None
        } else {
            num_cols += 1;
            Some(num_cols - 1)
        };
        var_cols.push((pos, neg));
    }

    let num_slacks = lp
        .constraints
        .iter()
        .filter(|c| c.relation != Relation::Eq)
        .count();
    let total_cols = num_cols + num_slacks;

    let mut rows = Vec::with_capacity(lp.constraints.len());
    let mut rhs = Vec::with_capacity(lp.constraints.len());
    let mut row_sign = Vec::with_capacity(lp.constraints.len());
    let mut slack_at = num_cols;
    for c in &lp.constraints {
        let mut row = vec![Rational::zero(); total_cols];
        for (v, coeff) in c.coeffs.iter().enumerate() {
            let (pos, neg) = var_cols[v];
            row[pos] = coeff.clone();
            if let Some(neg) = neg {
                row[neg] = -coeff.clone();
            }
        }
        match c.relation {
            Relation::Le => {
                row[slack_at] = Rational::one();
                slack_at += 1;
            }
            Relation::Ge => {
                row[slack_at] = -Rational::one();
                slack_at += 1;
            }
            Relation::Eq => {}
        }
        let mut b = c.rhs.clone();
        let sign = if b.is_negative() {
            for v in row.iter_mut() {
                *v = -v.clone();
            }
            b = -b;
            -Rational::one()
        } else {
            Rational::one()
        };
        rows.push(row);
        rhs.push(b);
        row_sign.push(sign);
    }

    let mut objective = vec![Rational::zero(); total_cols];
    for (v, coeff) in lp.objective.iter().enumerate() {
        let signed = match lp.direction {
            Direction::Maximize => coeff.clone(),
            Direction::Minimize => -coeff.clone(),
        };
        let (pos, neg) = var_cols[v];
        objective[pos] = signed.clone();
        if let Some(neg) = neg {
            objective[neg] = -signed;
        }
    }

    StandardForm {
        var_cols,
        num_cols: total_cols,
        rows,
        rhs,
        row_sign,
        objective,
    }
}

struct Tableau {
    /// m rows over num_cols columns plus trailing rhs cell.
    rows: Vec<Vec<Rational>>,
    basis: Vec<usize>,
    /// Reduced-cost row plus trailing objective value cell.
    obj: Vec<Rational>,
    num_cols: usize,
}

enum PivotResult {
    Optimal,
    Unbounded { entering: usize },
}

impl Tableau {
    fn pivot(&mut self, row: usize, col: usize) {
        let pivot = self.rows[row][col].clone();
        for cell in self.rows[row].iter_mut() {
            *cell /= &pivot;
        }
        let pivot_row = self.rows[row].clone();
        for (r, other) in self.rows.iter_mut().enumerate() {
            if r == row || other[col].is_zero() {
                continue;
            }
            let factor = other[col].clone();
            for (cell, p) in other.iter_mut().zip(&pivot_row) {
                *cell -= &factor * p;
            }
        }
        if !self.obj[col].is_zero() {
            let factor = self.obj[col].clone();
            for (cell, p) in self.obj.iter_mut().zip(&pivot_row) {
                *cell -= &factor * p;
            }
        }
        self.basis[row] = col;
    }

    /// Bland's rule: lowest eligible entering column, ties on the leaving
    /// row broken by lowest basic variable. Guarantees termination.
    fn run_simplex(&mut self, allowed: &dyn Fn(usize) -> bool) -> PivotResult {
        loop {
            let entering = (0..self.num_cols)
                .find(|&j| allowed(j) && self.obj[j].is_positive());
            let Some(col) = entering else {
                return PivotResult::Optimal;
            };
            let mut best: Option<(Rational, usize, usize)> = None;
            for (r, row) in self.rows.iter().enumerate() {
                if row[col].is_positive() {
                    let ratio = &row[self.num_cols] / &row[col];
                    let candidate = (ratio, self.basis[r], r);
                    best = match best {
                        None => Some(candidate),
                        Some(cur) => {
                            if candidate.0 < cur.0 || (candidate.0 == cur.0 && candidate.1 < cur.1)
                            {
                                Some(candidate)
                            } else {
                                Some(cur)
                            }
                        }
                    };
                }
            }
            match best {
                Some((_, _, row)) => self.pivot(row, col),
                None => return PivotResult::Unbounded { entering: col },
            }
        }
    }

    fn basic_point(&self, num_cols: usize) -> Vec<Rational> {
        let mut x = vec![Rational::zero(); num_cols];
        for (r, &col) in self.basis.iter().enumerate() {
            if col < num_cols {
                x[col] = self.rows[r][self.num_cols].clone();
            }
        }
        x
    }
}

/// Solves the program with exact two-phase simplex.
pub fn lp_solve(lp: &LinearProgram) -> LpOutcome {
    let sf = standardize(lp);
    let m = sf.rows.len();
    let n = sf.num_cols;

    // Phase one: artificial basis in every row, minimize the artificial sum.
    let total = n + m;
    let mut rows: Vec<Vec<Rational>> = Vec::with_capacity(m);
    for (r, row) in sf.rows.iter().enumerate() {
        let mut full = Vec::with_capacity(total + 1);
        full.extend(row.iter().cloned());
        for k in 0..m {
            full.push(if k == r { Rational::one() } else { Rational::zero() });
        }
        full.push(sf.rhs[r].clone());
        rows.push(full);
    }
    let basis: Vec<usize> = (n..n + m).collect();
    // Maximize -sum(artificials): reduced costs start as the column sums.
    let mut obj = vec![Rational::zero(); total + 1];
    for j in 0..total {
        let mut cj = if j >= n { -Rational::one() } else { Rational::zero() };
        for row in &rows {
            // c_basis is -1 for each artificial, so subtracting c_B.B^-1.A_j
            // adds the plain column sum.
            cj += &row[j];
        }
        obj[j] = cj;
    }
    obj[total] = rows.iter().map(|r| r[total].clone()).sum();

    let mut tab = Tableau { rows, basis, obj, num_cols: total };
    match tab.run_simplex(&|_| true) {
        PivotResult::Unbounded { .. } => unreachable!("phase one is bounded below by zero"),
        PivotResult::Optimal => {}
    }

    // obj value cell currently holds sum of artificials at the basic point.
    let artificial_sum = tab.obj[total].clone();
    if artificial_sum.is_positive() {
        // y_i = -1 - reduced_cost(artificial_i); see the Farkas check below.
        let mut y = Vec::with_capacity(m);
        for i in 0..m {
            y.push(-Rational::one() - &tab.obj[n + i]);
        }
        let cert = InfeasibilityCertificate {
            multipliers: (0..m).map(|i| &y[i] * &sf.row_sign[i]).collect(),
        };
        check_infeasibility(&sf, &y);
        return LpOutcome::Infeasible(cert);
    }

    // Drive leftover artificials out of the basis; rows that cannot pivot on
    // a structural column are redundant and get dropped.
    let mut r = 0;
    while r < tab.rows.len() {
        if tab.basis[r] >= n {
            if let Some(col) = (0..n).find(|&j| !tab.rows[r][j].is_zero()) {
                tab.pivot(r, col);
            } else {
                tab.rows.remove(r);
                tab.basis.remove(r);
                continue;
            }
        }
        r += 1;
    }

    // Phase two on structural columns only.
    let mut obj = vec![Rational::zero(); total + 1];
    obj[..n].clone_from_slice(&sf.objective);
    for (r, &bcol) in tab.basis.iter().enumerate() {
        if !obj[bcol].is_zero() {
            let factor = obj[bcol].clone();
            let row = tab.rows[r].clone();
            for (cell, p) in obj.iter_mut().zip(&row) {
                *cell -= &factor * p;
            }
        }
    }
    tab.obj = obj;

    match tab.run_simplex(&|j| j < n) {
        PivotResult::Unbounded { entering } => {
            let point_std = tab.basic_point(n);
            let mut ray_std = vec![Rational::zero(); n];
            ray_std[entering] = Rational::one();
            for (r, &bcol) in tab.basis.iter().enumerate() {
                if bcol < n {
                    ray_std[bcol] = -tab.rows[r][entering].clone();
                }
            }
            check_ray(&sf, &ray_std);
            let cert = UnboundedCertificate {
                point: destandardize(&sf, &point_std),
                ray: destandardize(&sf, &ray_std),
            };
            LpOutcome::Unbounded(cert)
        }
        PivotResult::Optimal => {
            let point_std = tab.basic_point(n);
            let point = destandardize(&sf, &point_std);
            let value = dot(&lp.objective, &point);
            let dual = recover_dual(&sf, &tab, n);
            let sol = OptimalSolution {
                point,
                value,
                basis: tab.basis.clone(),
                dual,
            };
            check_optimal(lp, &sol);
            LpOutcome::Optimal(sol)
        }
    }
}

fn destandardize(sf: &StandardForm, x_std: &[Rational]) -> Vec<Rational> {
    sf.var_cols
        .iter()
        .map(|&(pos, neg)| match neg {
            None => x_std[pos].clone(),
            Some(neg) => &x_std[pos] - &x_std[neg],
        })
        .collect()
}

fn recover_dual(sf: &StandardForm, tab: &Tableau, n: usize) -> Vec<Rational> {
    let m = sf.rows.len();
    if m == 0 {
        return Vec::new();
    }
    // Solve B^T y = c_B over the original standard rows (dropped redundant
    // rows keep multiplier zero by re-inserting them as unused).
    let kept: Vec<usize> = (0..tab.rows.len()).collect();
    let mut bt: Vec<Vec<Rational>> = Vec::new();
    let mut cb: Vec<Rational> = Vec::new();
    for &r in &kept {
        let col = tab.basis[r];
        let column: Vec<Rational> = if col < n {
            sf.rows.iter().map(|row| row[col].clone()).collect()
        } else {
            (0..m)
                .map(|i| if i == col - n { Rational::one() } else { Rational::zero() })
                .collect()
        };
        bt.push(column);
        cb.push(if col < n { sf.objective[col].clone() } else { -Rational::one() });
    }
    // bt rows are the basis columns; transposing gives B^T y = c_B with y
    // indexed by original rows. Pad with zero rows if rows were dropped.
    while bt.len() < m {
        bt.push(vec![Rational::zero(); m]);
        cb.push(Rational::zero());
    }
    match solve_linear_system(&bt, &cb) {
        Ok(y) => (0..m).map(|i| &y[i] * &sf.row_sign[i]).collect(),
        Err(_) => vec![Rational::zero(); m],
    }
}

fn check_infeasibility(sf: &StandardForm, y: &[Rational]) {
    for j in 0..sf.num_cols {
        let mut combo = Rational::zero();
        for (i, row) in sf.rows.iter().enumerate() {
            combo += &y[i] * &row[j];
        }
        assert!(
            !combo.is_negative(),
            "Farkas certificate violated at column {j}"
        );
    }
    let value: Rational = y
        .iter()
        .zip(&sf.rhs)
        .map(|(yi, bi)| yi * bi)
        .sum();
    assert!(value.is_negative(), "Farkas certificate has nonnegative rhs");
}

fn check_ray(sf: &StandardForm, ray: &[Rational]) {
    assert!(ray.iter().all(|v| !v.is_negative()), "ray must be nonnegative");
    for row in &sf.rows {
        assert!(dot(&row[..sf.num_cols], ray).is_zero(), "ray must satisfy A.d = 0");
    }
    assert!(dot(&sf.objective, ray).is_positive(), "ray must improve the objective");
}

fn check_optimal(lp: &LinearProgram, sol: &OptimalSolution) {
    for (i, c) in lp.constraints.iter().enumerate() {
        let lhs = dot(&c.coeffs, &sol.point);
        let ok = match c.relation {
            Relation::Le => lhs <= c.rhs,
            Relation::Eq => lhs == c.rhs,
            Relation::Ge => lhs >= c.rhs,
        };
        assert!(ok, "optimal point violates constraint {i}");
    }
    for (j, &nn) in lp.nonneg.iter().enumerate() {
        if nn {
            assert!(!sol.point[j].is_negative(), "optimal point violates x{j} >= 0");
        }
    }
    assert_eq!(dot(&lp.objective, &sol.point), sol.value);
}

/// Solves `lp`, then re-optimizes each tiebreak objective in turn with all
/// previous optima pinned as equality constraints. The result is an extreme
/// point of the feasible region's projection onto the tiebreak coordinates.
pub fn lex_vertex(lp: &LinearProgram, tiebreaks: &[Vec<Rational>]) -> LpOutcome {
    let mut current = lp.clone();
    let mut outcome = lp_solve(&current);
    for tb in tiebreaks {
        let Some(sol) = outcome.optimal() else {
            return outcome;
        };
        let pinned_value = dot(&current.objective, &sol.point);
        current.constrain(current.objective.clone(), Relation::Eq, pinned_value);
        current.objective = tb.clone();
        current.direction = Direction::Maximize;
        outcome = lp_solve(&current);
    }
    outcome
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::num::rat;

    #[test]
    fn solves_two_by_two_elimination() {
        let a = vec![vec![rat(1, 1), rat(-1, 2)], vec![rat(0, 1), rat(1, 1)]];
        let b = vec![rat(1, 2), rat(1, 1)];
        assert_eq!(solve_linear_system(&a, &b).unwrap(), vec![rat(1, 1), rat(1, 1)]);
    }

    #[test]
    fn identity_system_returns_rhs() {
        let a = vec![vec![rat(1, 1), rat(0, 1)], vec![rat(0, 1), rat(1, 1)]];
        let b = vec![rat(7, 3), rat(-2, 5)];
        assert_eq!(solve_linear_system(&a, &b).unwrap(), b);
    }

    #[test]
    fn rank_deficient_system_reports_witness() {
        let a = vec![vec![rat(1, 1), rat(1, 1)], vec![rat(2, 1), rat(2, 1)]];
        let b = vec![rat(1, 1), rat(2, 1)];
        match solve_linear_system(&a, &b) {
            Err(LinearSystemError::Singular { witness }) => {
                // witness . A must be the zero row
                for col in 0..2 {
                    let combo = &witness[0] * &a[0][col] + &witness[1] * &a[1][col];
                    assert!(combo.is_zero());
                }
                assert!(witness.iter().any(|w| !w.is_zero()));
            }
            other => panic!("expected singular system, got {other:?}"),
        }
    }

    #[test]
    fn box_corner_is_optimal() {
        let mut lp = LinearProgram::maximize(vec![rat(1, 1), rat(1, 1)]);
        lp.constrain(vec![rat(1, 1), rat(0, 1)], Relation::Le, rat(1, 1));
        lp.constrain(vec![rat(0, 1), rat(1, 1)], Relation::Le, rat(1, 1));
        let sol = lp_solve(&lp);
        let sol = sol.optimal().expect("bounded feasible");
        assert_eq!(sol.value, rat(2, 1));
        assert_eq!(sol.point, vec![rat(1, 1), rat(1, 1)]);
        // zero duality gap
        let dual_value: Rational = sol
            .dual
            .iter()
            .zip(lp.constraints.iter())
            .map(|(y, c)| y * &c.rhs)
            .sum();
        assert_eq!(dual_value, sol.value);
    }

    #[test]
    fn threshold_margin_program_is_exact() {
        // max t subject to t <= x, x <= 1/3
        let mut lp = LinearProgram::maximize(vec![rat(1, 1), rat(0, 1)]);
        lp.mark_free(0);
        lp.constrain(vec![rat(1, 1), rat(-1, 1)], Relation::Le, rat(0, 1));
        lp.constrain(vec![rat(0, 1), rat(1, 1)], Relation::Le, rat(1, 3));
        let sol = lp_solve(&lp);
        assert_eq!(sol.optimal().unwrap().value, rat(1, 3));
    }

    #[test]
    fn detects_unbounded_direction() {
        let mut lp = LinearProgram::maximize(vec![rat(1, 1)]);
        lp.constrain(vec![rat(1, 1)], Relation::Ge, rat(0, 1));
        match lp_solve(&lp) {
            LpOutcome::Unbounded(cert) => {
                assert!(cert.ray[0].is_positive());
            }
            other => panic!("expected unbounded, got {other:?}"),
        }
    }

    #[test]
    fn detects_infeasible_with_certificate() {
        let mut lp = LinearProgram::maximize(vec![rat(0, 1)]);
        lp.constrain(vec![rat(1, 1)], Relation::Ge, rat(2, 1));
        lp.constrain(vec![rat(1, 1)], Relation::Le, rat(1, 1));
        assert!(!lp_solve(&lp).is_feasible());
    }

    #[test]
    fn equality_rows_work() {
        // max x + y with x + y = 1/2, y >= 1/6
        let mut lp = LinearProgram::maximize(vec![rat(1, 1), rat(1, 1)]);
        lp.constrain(vec![rat(1, 1), rat(1, 1)], Relation::Eq, rat(1, 2));
        lp.constrain(vec![rat(0, 1), rat(1, 1)], Relation::Ge, rat(1, 6));
        let sol = lp_solve(&lp);
        assert_eq!(sol.optimal().unwrap().value, rat(1, 2));
    }

    #[test]
    fn lex_vertex_pins_previous_objectives() {
        // Feasible region: x + y <= 4/3, x <= 1, y <= 1 (the gameshow shape).
        let base = {
            let mut lp = LinearProgram::maximize(vec![rat(1, 1), rat(1, 1)]);
            lp.constrain(vec![rat(1, 1), rat(1, 1)], Relation::Le, rat(4, 3));
            lp.constrain(vec![rat(1, 1), rat(0, 1)], Relation::Le, rat(1, 1));
            lp.constrain(vec![rat(0, 1), rat(1, 1)], Relation::Le, rat(1, 1));
            lp
        };
        let e1 = vec![rat(1, 1), rat(0, 1)];
        let e2 = vec![rat(0, 1), rat(1, 1)];
        let first = lex_vertex(&base, &[e1.clone(), e2.clone()]);
        assert_eq!(first.optimal().unwrap().point, vec![rat(1, 1), rat(1, 3)]);
        let second = lex_vertex(&base, &[e2, e1]);
        assert_eq!(second.optimal().unwrap().point, vec![rat(1, 3), rat(1, 1)]);
    }

    #[test]
    fn degenerate_single_point_ignores_tiebreaks() {
        let mut lp = LinearProgram::maximize(vec![rat(1, 1), rat(1, 1)]);
        lp.constrain(vec![rat(1, 1), rat(0, 1)], Relation::Eq, rat(1, 4));
        lp.constrain(vec![rat(0, 1), rat(1, 1)], Relation::Eq, rat(3, 4));
        let out = lex_vertex(&lp, &[vec![rat(0, 1), rat(1, 1)]]);
        assert_eq!(out.optimal().unwrap().point, vec![rat(1, 4), rat(3, 4)]);
    }
}
