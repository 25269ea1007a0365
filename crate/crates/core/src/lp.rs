//! Exact rational linear programming.
//!
//! Two-phase primal simplex with Bland's anti-cycling pivot rule. The
//! tableau is kept fraction-free: entries are integers sharing one common
//! denominator (the previous pivot element), so each pivot costs two
//! multiplications and one exact division per entry instead of full
//! rational arithmetic. Outcomes are exact; every `Optimal` result is
//! re-substituted into the original constraints before being returned.

use crate::rational::{dot, RatVector, Rational};
use num::bigint::BigInt;
use num::{Integer, One, Signed, Zero};
use std::ops::Neg;
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
    pub coeffs: RatVector,
    pub relation: Relation,
    pub rhs: Rational,
}

impl Constraint {
    pub fn new(coeffs: RatVector, relation: Relation, rhs: Rational) -> Self {
        Constraint { coeffs, relation, rhs }
    }

    pub fn holds_at(&self, x: &[Rational]) -> bool {
        let lhs = dot(&self.coeffs, x);
        match self.relation {
            Relation::Le => lhs <= self.rhs,
            Relation::Eq => lhs == self.rhs,
            Relation::Ge => lhs >= self.rhs,
        }
    }
}

#[derive(Debug, Clone)]
pub struct LinearProgram {
    pub direction: Direction,
    pub objective: RatVector,
    pub constraints: Vec<Constraint>,
    pub vars: usize,
}

impl LinearProgram {
    pub fn maximize(objective: RatVector) -> Self {
        let vars = objective.len();
        LinearProgram { direction: Direction::Maximize, objective, constraints: Vec::new(), vars }
    }

    pub fn minimize(objective: RatVector) -> Self {
        let vars = objective.len();
        LinearProgram { direction: Direction::Minimize, objective, constraints: Vec::new(), vars }
    }

    pub fn constrain(&mut self, coeffs: RatVector, relation: Relation, rhs: Rational) {
        self.constraints.push(Constraint::new(coeffs, relation, rhs));
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum LpOutcome {
    Optimal { value: Rational, vertex: RatVector },
    Infeasible,
    Unbounded,
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum LpError {
    #[error("constraint {index} has {got} coefficients, expected {expected}")]
    DimensionMismatch { index: usize, got: usize, expected: usize },
    #[error("objective has {got} coefficients, expected {expected}")]
    ObjectiveMismatch { got: usize, expected: usize },
}

/// Solves the program exactly. Deterministic for a fixed input: Bland's
/// rule picks the lowest-index entering column and breaks ratio-test ties
/// by the lowest basic variable index.
pub fn solve_lp(lp: &LinearProgram) -> Result<LpOutcome, LpError> {
    if lp.objective.len() != lp.vars {
        return Err(LpError::ObjectiveMismatch { got: lp.objective.len(), expected: lp.vars });
    }
    for (index, c) in lp.constraints.iter().enumerate() {
        if c.coeffs.len() != lp.vars {
            return Err(LpError::DimensionMismatch {
                index,
                got: c.coeffs.len(),
                expected: lp.vars,
            });
        }
    }
    let outcome = match Tableau::build(lp) {
        Build::TriviallyInfeasible => LpOutcome::Infeasible,
        Build::Ready(mut t) => t.run(),
    };
    if let LpOutcome::Optimal { value, vertex } = &outcome {
        // Independent re-check: the vertex must satisfy every original
        // constraint exactly and attain the reported value exactly.
        for (i, c) in lp.constraints.iter().enumerate() {
            assert!(c.holds_at(vertex), "solver bug: vertex violates constraint {i}");
        }
        assert_eq!(
            &dot(&lp.objective, vertex),
            value,
            "solver bug: vertex does not attain the reported value"
        );
    }
    Ok(outcome)
}

/// Refines an optimum to the lexicographically smallest optimal vertex by
/// minimizing each coordinate in turn subject to optimality of all previous
/// levels. Used to canonicalize reported witnesses on small programs.
pub fn lex_min_optimal_vertex(lp: &LinearProgram) -> Result<LpOutcome, LpError> {
    let first = solve_lp(lp)?;
    let LpOutcome::Optimal { value, .. } = &first else {
        return Ok(first);
    };
    let mut pinned = lp.clone();
    let sense = match lp.direction {
        Direction::Maximize => Relation::Ge,
        Direction::Minimize => Relation::Le,
    };
    pinned.constrain(lp.objective.clone(), sense, value.clone());
    let mut vertex = RatVector::new();
    for j in 0..lp.vars {
        let mut obj = vec![Rational::zero(); lp.vars];
        obj[j] = Rational::one();
        let level = LinearProgram {
            direction: Direction::Minimize,
            objective: obj.clone(),
            constraints: pinned.constraints.clone(),
            vars: lp.vars,
        };
        match solve_lp(&level)? {
            LpOutcome::Optimal { value: xj, .. } => {
                pinned.constrain(obj, Relation::Eq, xj.clone());
                vertex.push(xj);
            }
            // Unbounded below on some coordinate: no lexicographic minimum;
            // fall back to the unrefined solution.
            _ => return Ok(first),
        }
    }
    Ok(LpOutcome::Optimal { value: value.clone(), vertex })
}

/// H-polytope over the standard simplex: `sum x = 1`, `x >= 0`, plus extra
/// rows. This is the shape of every best-reply region and feasibility set
/// in the solver.
#[derive(Debug, Clone)]
pub struct SimplexPolytope {
    pub dim: usize,
    pub extra: Vec<Constraint>,
}

impl SimplexPolytope {
    pub fn new(dim: usize) -> Self {
        SimplexPolytope { dim, extra: Vec::new() }
    }

    pub fn require(&mut self, coeffs: RatVector, relation: Relation, rhs: Rational) {
        debug_assert_eq!(coeffs.len(), self.dim);
        self.extra.push(Constraint::new(coeffs, relation, rhs));
    }

    pub fn contains(&self, x: &[Rational]) -> bool {
        if x.len() != self.dim {
            return false;
        }
        let sum: Rational = x.iter().sum();
        sum.is_one() && x.iter().all(|v| !v.is_negative()) && self.extra.iter().all(|c| c.holds_at(x))
    }

    /// Base constraints shared by every program over this polytope.
    fn base_constraints(&self) -> Vec<Constraint> {
        let mut cs = Vec::with_capacity(self.dim + 1 + self.extra.len());
        cs.push(Constraint::new(vec![Rational::one(); self.dim], Relation::Eq, Rational::one()));
        for i in 0..self.dim {
            let mut row = vec![Rational::zero(); self.dim];
            row[i] = Rational::one();
            cs.push(Constraint::new(row, Relation::Ge, Rational::zero()));
        }
        cs.extend(self.extra.iter().cloned());
        cs
    }

    /// `max obj . x` over the polytope.
    pub fn maximize(&self, objective: RatVector) -> LinearProgram {
        debug_assert_eq!(objective.len(), self.dim);
        LinearProgram {
            direction: Direction::Maximize,
            objective,
            constraints: self.base_constraints(),
            vars: self.dim,
        }
    }

    pub fn is_empty(&self) -> bool {
        let lp = self.maximize(vec![Rational::zero(); self.dim]);
        matches!(solve_lp(&lp).expect("well-formed feasibility program"), LpOutcome::Infeasible)
    }
}

/// Maximizes a single slack `s` with every coordinate held at `x_i >= s`
/// and every designated extra row `a.x >= b` tightened to `a.x - s >= b`.
/// Returns the witness point and slack when the maximum is positive.
pub fn relative_interior_witness(
    poly: &SimplexPolytope,
    strict_rows: &[usize],
) -> Option<(RatVector, Rational)> {
    let n = poly.dim;
    let mut obj = vec![Rational::zero(); n + 1];
    obj[n] = Rational::one();
    let mut lp = LinearProgram::maximize(obj);
    lp.constrain(
        std::iter::repeat(Rational::one()).take(n).chain([Rational::zero()]).collect(),
        Relation::Eq,
        Rational::one(),
    );
    for i in 0..n {
        let mut row = vec![Rational::zero(); n + 1];
        row[i] = Rational::one();
        row[n] = -Rational::one();
        lp.constrain(row, Relation::Ge, Rational::zero());
    }
    for (idx, c) in poly.extra.iter().enumerate() {
        let mut row: RatVector = c.coeffs.clone();
        row.push(if strict_rows.contains(&idx) && c.relation == Relation::Ge {
            -Rational::one()
        } else {
            Rational::zero()
        });
        lp.constrain(row, c.relation, c.rhs.clone());
    }
    match solve_lp(&lp).expect("well-formed interior program") {
        LpOutcome::Optimal { value, vertex } if value.is_positive() => {
            Some((vertex[..n].to_vec(), value))
        }
        _ => None,
    }
}

// --- internals -------------------------------------------------------------

enum Build {
    Ready(Tableau),
    TriviallyInfeasible,
}

struct Tableau {
    /// Integer tableau; true values are `t[i][j] / det`.
    t: Vec<Vec<BigInt>>,
    det: BigInt,
    rows: usize,
    cols: usize,
    rhs: usize,
    z_row: usize,
    w_row: Option<usize>,
    basic: Vec<usize>,
    first_artificial: usize,
    /// Maps structural variables to (positive column, optional negated column).
    var_cols: Vec<(usize, Option<usize>)>,
    obj_scale: BigInt,
    negate_value: bool,
    vars: usize,
}

impl Tableau {
    fn build(lp: &LinearProgram) -> Build {
        let mut nonneg = vec![false; lp.vars];
        let mut kept: Vec<(RatVector, Relation, Rational)> = Vec::new();
        for c in &lp.constraints {
            let nz: Vec<usize> = (0..lp.vars).filter(|&j| !c.coeffs[j].is_zero()).collect();
            if nz.is_empty() {
                let zero = Rational::zero();
                let ok = match c.relation {
                    Relation::Le => zero <= c.rhs,
                    Relation::Eq => zero == c.rhs,
                    Relation::Ge => zero >= c.rhs,
                };
                if ok {
                    continue;
                }
                return Build::TriviallyInfeasible;
            }
            if nz.len() == 1 && c.rhs.is_zero() {
                let j = nz[0];
                let gamma = &c.coeffs[j];
                let is_bound = match c.relation {
                    Relation::Ge => gamma.is_positive(),
                    Relation::Le => gamma.is_negative(),
                    Relation::Eq => false,
                };
                if is_bound {
                    nonneg[j] = true;
                    continue;
                }
            }
            // Normalize to nonnegative right-hand side.
            if c.rhs.is_negative() {
                let coeffs: RatVector = c.coeffs.iter().map(Neg::neg).collect();
                let relation = match c.relation {
                    Relation::Le => Relation::Ge,
                    Relation::Eq => Relation::Eq,
                    Relation::Ge => Relation::Le,
                };
                kept.push((coeffs, relation, -c.rhs.clone()));
            } else {
                kept.push((c.coeffs.clone(), c.relation, c.rhs.clone()));
            }
        }

        let mut var_cols = Vec::with_capacity(lp.vars);
        let mut ncols = 0usize;
        for &nn in &nonneg {
            if nn {
                var_cols.push((ncols, None));
                ncols += 1;
            } else {
                var_cols.push((ncols, Some(ncols + 1)));
                ncols += 2;
            }
        }
        let slack_start = ncols;
        let n_slacks = kept.iter().filter(|(_, rel, _)| *rel != Relation::Eq).count();
        ncols += n_slacks;
        let first_artificial = ncols;

        let m = kept.len();
        // Integer-scale each row, expand split variables, place slacks.
        let mut rows: Vec<Vec<BigInt>> = Vec::with_capacity(m);
        let mut slack_col = slack_start;
        let mut row_meta: Vec<(Relation, usize)> = Vec::with_capacity(m); // (relation, slack col or usize::MAX)
        for (coeffs, rel, rhs) in &kept {
            let mut scale = rhs.denom().clone();
            for a in coeffs {
                scale = scale.lcm(a.denom());
            }
            let mut row = vec![BigInt::zero(); first_artificial];
            for (j, a) in coeffs.iter().enumerate() {
                if a.is_zero() {
                    continue;
                }
                let v = a.numer() * (&scale / a.denom());
                let (pos, neg) = var_cols[j];
                row[pos] = v.clone();
                if let Some(neg) = neg {
                    row[neg] = -v;
                }
            }
            let sc = match rel {
                Relation::Eq => usize::MAX,
                Relation::Le => {
                    row[slack_col] = BigInt::one();
                    slack_col += 1;
                    slack_col - 1
                }
                Relation::Ge => {
                    row[slack_col] = -BigInt::one();
                    slack_col += 1;
                    slack_col - 1
                }
            };
            row.push(rhs.numer() * (&scale / rhs.denom()));
            rows.push(row);
            row_meta.push((*rel, sc));
        }

        // Choose an initial basis: slacks where possible, artificials otherwise.
        let mut basic = vec![usize::MAX; m];
        let mut art_rows: Vec<usize> = Vec::new();
        for i in 0..m {
            match row_meta[i] {
                (Relation::Le, sc) => basic[i] = sc,
                (Relation::Ge, sc) if rows[i][first_artificial].is_zero() => {
                    // Zero right-hand side: flip the row so the surplus
                    // column becomes a unit basis column.
                    for v in rows[i].iter_mut() {
                        *v = -std::mem::take(v);
                    }
                    basic[i] = sc;
                }
                _ => art_rows.push(i),
            }
        }
        let n_art = art_rows.len();
        let rhs_col = first_artificial + n_art;
        for row in rows.iter_mut() {
            let b = row.pop().expect("rhs present");
            row.extend(std::iter::repeat_with(BigInt::zero).take(n_art));
            row.push(b);
        }
        for (k, &i) in art_rows.iter().enumerate() {
            rows[i][first_artificial + k] = BigInt::one();
            basic[i] = first_artificial + k;
        }

        // Objective row, scaled to integers; minimization is solved as
        // maximization of the negated objective.
        let negate_value = lp.direction == Direction::Minimize;
        let mut obj_scale = BigInt::one();
        for a in &lp.objective {
            obj_scale = obj_scale.lcm(a.denom());
        }
        let mut z = vec![BigInt::zero(); rhs_col + 1];
        for (j, a) in lp.objective.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            let mut v = a.numer() * (&obj_scale / a.denom());
            if negate_value {
                v = -v;
            }
            let (pos, neg) = var_cols[j];
            z[pos] = v.clone();
            if let Some(neg) = neg {
                z[neg] = -v;
            }
        }

        let mut t = rows;
        let z_row = m;
        t.push(z);
        let w_row = if n_art > 0 {
            let mut w = vec![BigInt::zero(); rhs_col + 1];
            for &i in &art_rows {
                for j in 0..first_artificial {
                    w[j] += &t[i][j];
                }
                let b = t[i][rhs_col].clone();
                w[rhs_col] += b;
            }
            t.push(w);
            Some(m + 1)
        } else {
            None
        };

        let rows_total = t.len();
        Build::Ready(Tableau {
            t,
            det: BigInt::one(),
            rows: rows_total,
            cols: rhs_col + 1,
            rhs: rhs_col,
            z_row,
            w_row,
            basic,
            first_artificial,
            var_cols,
            obj_scale,
            negate_value,
            vars: lp.vars,
        })
    }

    fn run(&mut self) -> LpOutcome {
        if let Some(w) = self.w_row {
            match self.bland(w, true) {
                Step::Optimal => {}
                Step::Unbounded => unreachable!("phase 1 objective is bounded above by zero"),
            }
            if !self.t[w][self.rhs].is_zero() {
                return LpOutcome::Infeasible;
            }
            self.drive_out_artificials();
        }
        match self.bland(self.z_row, false) {
            Step::Unbounded => LpOutcome::Unbounded,
            Step::Optimal => {
                let value = self.objective_value();
                let vertex = self.extract_vertex();
                LpOutcome::Optimal { value, vertex }
            }
        }
    }

    fn bland(&mut self, obj: usize, phase_one: bool) -> Step {
        loop {
            let limit = if phase_one { self.cols - 1 } else { self.first_artificial };
            let entering = (0..limit)
                .find(|&j| !(phase_one && j >= self.first_artificial) && self.t[obj][j].is_positive());
            let Some(c) = entering else {
                return Step::Optimal;
            };
            let Some(r) = self.ratio_test(c) else {
                return Step::Unbounded;
            };
            self.pivot(r, c);
        }
    }

    fn ratio_test(&self, c: usize) -> Option<usize> {
        let m = self.constraint_rows();
        let mut best: Option<usize> = None;
        for i in 0..m {
            if !self.t[i][c].is_positive() {
                continue;
            }
            best = Some(match best {
                None => i,
                Some(b) => {
                    // Compare rhs_i / t_ic with rhs_b / t_bc by cross
                    // multiplication; denominators are positive.
                    let lhs = &self.t[i][self.rhs] * &self.t[b][c];
                    let rhs = &self.t[b][self.rhs] * &self.t[i][c];
                    match lhs.cmp(&rhs) {
                        std::cmp::Ordering::Less => i,
                        std::cmp::Ordering::Greater => b,
                        std::cmp::Ordering::Equal => {
                            if self.basic[i] < self.basic[b] {
                                i
                            } else {
                                b
                            }
                        }
                    }
                }
            });
        }
        best
    }

    fn pivot(&mut self, r: usize, c: usize) {
        let piv = self.t[r][c].clone();
        debug_assert!(!piv.is_zero());
        for i in 0..self.rows {
            if i == r {
                continue;
            }
            let factor = std::mem::replace(&mut self.t[i][c], BigInt::zero());
            if factor.is_zero() {
                for j in 0..self.cols {
                    if j == c {
                        continue;
                    }
                    let v = &piv * &self.t[i][j];
                    self.t[i][j] = exact_div(v, &self.det);
                }
            } else {
                for j in 0..self.cols {
                    if j == c {
                        continue;
                    }
                    let v = &piv * &self.t[i][j] - &factor * &self.t[r][j];
                    self.t[i][j] = exact_div(v, &self.det);
                }
            }
        }
        self.basic[r] = c;
        self.det = piv;
        if self.det.is_negative() {
            // Only degenerate drive-out pivots can be negative; renormalize
            // so sign tests stay plain integer comparisons.
            self.det = -std::mem::take(&mut self.det);
            for row in self.t.iter_mut() {
                for v in row.iter_mut() {
                    *v = -std::mem::take(v);
                }
            }
        }
    }

    fn drive_out_artificials(&mut self) {
        let m = self.constraint_rows();
        for r in 0..m {
            if self.basic[r] < self.first_artificial {
                continue;
            }
            // The artificial sits at value zero; pivot it out on any
            // structural column, or leave the row dead if none exists.
            let col = (0..self.first_artificial)
                .find(|&j| self.t[r][j].is_positive())
                .or_else(|| (0..self.first_artificial).find(|&j| !self.t[r][j].is_zero()));
            if let Some(c) = col {
                self.pivot(r, c);
            }
        }
    }

    fn constraint_rows(&self) -> usize {
        self.z_row
    }

    fn objective_value(&self) -> Rational {
        let raw = Rational::new(-self.t[self.z_row][self.rhs].clone(), &self.det * &self.obj_scale);
        if self.negate_value {
            -raw
        } else {
            raw
        }
    }

    fn extract_vertex(&self) -> RatVector {
        let m = self.constraint_rows();
        let mut col_value = vec![Rational::zero(); self.cols];
        for i in 0..m {
            let b = self.basic[i];
            if b != usize::MAX {
                col_value[b] = Rational::new(self.t[i][self.rhs].clone(), self.det.clone());
            }
        }
        (0..self.vars)
            .map(|j| {
                let (pos, neg) = self.var_cols[j];
                match neg {
                    None => col_value[pos].clone(),
                    Some(neg) => &col_value[pos] - &col_value[neg],
                }
            })
            .collect()
    }
}

enum Step {
    Optimal,
    Unbounded,
}

fn exact_div(v: BigInt, d: &BigInt) -> BigInt {
    if d.is_one() {
        return v;
    }
    debug_assert!((&v % d).is_zero(), "fraction-free pivot produced a non-integer");
    v / d
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{rat, ratio};
    use proptest::prelude::*;

    fn r(vals: &[i64]) -> RatVector {
        vals.iter().map(|&v| rat(v)).collect()
    }

    #[test]
    fn box_corner() {
        let mut lp = LinearProgram::maximize(r(&[1, 1]));
        lp.constrain(r(&[1, 0]), Relation::Ge, rat(0));
        lp.constrain(r(&[0, 1]), Relation::Ge, rat(0));
        lp.constrain(r(&[1, 1]), Relation::Le, rat(1));
        let out = solve_lp(&lp).unwrap();
        match out {
            LpOutcome::Optimal { value, .. } => assert_eq!(value, rat(1)),
            other => panic!("expected optimal, got {other:?}"),
        }
    }

    // Maximin program of the 2x2 matrix A = [[4,1],[3,2]]. With two columns,
    // the value is the best of the two pure rows' column minima and the
    // row-equalizing mixture; enumerating by hand gives 2 at x = (0,1).
    #[test]
    fn maximin_4132() {
        let mut lp = LinearProgram::maximize(r(&[0, 0, 1]));
        lp.constrain(r(&[4, 3, -1]), Relation::Ge, rat(0));
        lp.constrain(r(&[1, 2, -1]), Relation::Ge, rat(0));
        lp.constrain(r(&[1, 1, 0]), Relation::Eq, rat(1));
        lp.constrain(r(&[1, 0, 0]), Relation::Ge, rat(0));
        lp.constrain(r(&[0, 1, 0]), Relation::Ge, rat(0));
        match solve_lp(&lp).unwrap() {
            LpOutcome::Optimal { value, vertex } => {
                assert_eq!(value, rat(2));
                assert_eq!(vertex[..2], [rat(0), rat(1)]);
            }
            other => panic!("expected optimal, got {other:?}"),
        }
    }

    #[test]
    fn infeasible_interval() {
        let mut lp = LinearProgram::maximize(r(&[1]));
        lp.constrain(r(&[1]), Relation::Ge, rat(2));
        lp.constrain(r(&[1]), Relation::Le, rat(1));
        assert_eq!(solve_lp(&lp).unwrap(), LpOutcome::Infeasible);
    }

    #[test]
    fn unbounded_ray() {
        let mut lp = LinearProgram::maximize(r(&[1]));
        lp.constrain(r(&[1]), Relation::Ge, rat(0));
        assert_eq!(solve_lp(&lp).unwrap(), LpOutcome::Unbounded);
    }

    #[test]
    fn dimension_mismatch_is_reported() {
        let mut lp = LinearProgram::maximize(r(&[1, 2]));
        lp.constrain(r(&[1]), Relation::Le, rat(1));
        assert!(matches!(solve_lp(&lp), Err(LpError::DimensionMismatch { index: 0, .. })));
    }

    #[test]
    fn interior_of_full_simplex() {
        let poly = SimplexPolytope::new(2);
        let (x, s) = relative_interior_witness(&poly, &[]).unwrap();
        assert_eq!(s, ratio(1, 2));
        assert_eq!(x, vec![ratio(1, 2), ratio(1, 2)]);
    }

    #[test]
    fn lex_min_breaks_ties() {
        // Objective is constant along the optimal face x1 + x2 = 1.
        let mut lp = LinearProgram::maximize(r(&[1, 1]));
        lp.constrain(r(&[1, 0]), Relation::Ge, rat(0));
        lp.constrain(r(&[0, 1]), Relation::Ge, rat(0));
        lp.constrain(r(&[1, 1]), Relation::Le, rat(1));
        match lex_min_optimal_vertex(&lp).unwrap() {
            LpOutcome::Optimal { value, vertex } => {
                assert_eq!(value, rat(1));
                assert_eq!(vertex, vec![rat(0), rat(1)]);
            }
            other => panic!("expected optimal, got {other:?}"),
        }
    }

    /// Brute-force oracle: enumerate all candidate vertices as solutions of
    /// `vars`-subsets of tight constraints, keep the feasible ones, take the
    /// best objective value.
    fn brute_force_best(lp: &LinearProgram) -> Option<Rational> {
        let n = lp.vars;
        let rows: Vec<&Constraint> = lp.constraints.iter().collect();
        let mut best: Option<Rational> = None;
        let mut feasible_any = false;
        let k = rows.len();
        let mut idx: Vec<usize> = (0..n).collect();
        if k < n {
            return None;
        }
        loop {
            if let Some(x) = solve_square(&idx, &rows, n) {
                if lp.constraints.iter().all(|c| c.holds_at(&x)) {
                    feasible_any = true;
                    let v = dot(&lp.objective, &x);
                    let better = match (&best, lp.direction) {
                        (None, _) => true,
                        (Some(b), Direction::Maximize) => &v > b,
                        (Some(b), Direction::Minimize) => &v < b,
                    };
                    if better {
                        best = Some(v);
                    }
                }
            }
            // next combination
            let mut i = n;
            loop {
                if i == 0 {
                    return if feasible_any { best } else { None };
                }
                i -= 1;
                if idx[i] != i + k - n {
                    idx[i] += 1;
                    for j in i + 1..n {
                        idx[j] = idx[j - 1] + 1;
                    }
                    break;
                }
            }
        }
    }

    fn solve_square(rows: &[usize], cs: &[&Constraint], n: usize) -> Option<RatVector> {
        let mut a: Vec<RatVector> = rows.iter().map(|&i| cs[i].coeffs.clone()).collect();
        let mut b: RatVector = rows.iter().map(|&i| cs[i].rhs.clone()).collect();
        for col in 0..n {
            let p = (col..n).find(|&i| !a[i][col].is_zero())?;
            a.swap(col, p);
            b.swap(col, p);
            let inv = a[col][col].clone();
            for i in 0..n {
                if i == col || a[i][col].is_zero() {
                    continue;
                }
                let f = &a[i][col] / &inv;
                for j in col..n {
                    let v = &a[i][j] - &f * &a[col][j];
                    a[i][j] = v;
                }
                let v = &b[i] - &f * &b[col];
                b[i] = v;
            }
        }
        Some((0..n).map(|i| &b[i] / &a[i][i]).collect())
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(256))]
        #[test]
        fn agrees_with_vertex_enumeration(
            n in 2usize..4,
            rows in proptest::collection::vec((proptest::collection::vec(-5i64..6, 3), -4i64..5), 1..5),
            obj in proptest::collection::vec(-5i64..6, 3),
        ) {
            // Nonnegative variables in a bounded box keep the region pointed
            // so every optimum is attained at an enumerable vertex.
            let mut lp = LinearProgram::maximize(obj[..n].iter().map(|&v| rat(v)).collect());
            for i in 0..n {
                let mut row = vec![Rational::zero(); n];
                row[i] = Rational::one();
                lp.constrain(row, Relation::Ge, rat(0));
            }
            lp.constrain(vec![Rational::one(); n], Relation::Le, rat(7));
            for (coeffs, rhs) in &rows {
                lp.constrain(coeffs[..n].iter().map(|&v| rat(v)).collect(), Relation::Ge, rat(*rhs));
            }
            let got = solve_lp(&lp).unwrap();
            let oracle = brute_force_best(&lp);
            match (got, oracle) {
                (LpOutcome::Optimal { value, .. }, Some(best)) => prop_assert_eq!(value, best),
                (LpOutcome::Infeasible, None) => {}
                (got, oracle) => prop_assert!(false, "solver {:?} vs oracle {:?}", got, oracle),
            }
        }
    }
}
