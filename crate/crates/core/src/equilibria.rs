//! Equilibrium computation for the simultaneous-move game: maximin values,
//! Nash equilibria by exact support enumeration, twisted equilibria, saddle
//! points, and coarse-correlated-equilibrium verification.

use crate::game::{
    argmax_set, combinations, payoff, Game, GameError, MixedStrategy, Player,
};
use crate::lp::{solve_lp, LinearProgram, LpOutcome, Relation};
use crate::rational::{solve_square_system, RatMatrix, RatVector, Rational};
use num::{One, Signed, Zero};

/// A verified Nash equilibrium: each strategy is an exact best reply to
/// the other, checked against every pure deviation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NashEquilibrium {
    pub x: MixedStrategy,
    pub y: MixedStrategy,
    pub alpha: Rational,
    pub beta: Rational,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NashSet {
    pub equilibria: Vec<NashEquilibrium>,
    /// True only when the enumeration provably covered the whole set:
    /// the game is within the enumeration bound and non-degenerate.
    pub complete: bool,
    /// Lowest and highest player-I equilibrium payoffs over the listed
    /// equilibria. Bounds over vertex equilibria when `complete` is false.
    pub l: Option<Rational>,
    pub h: Option<Rational>,
    pub note: Option<String>,
}

impl NashSet {
    fn from_list(equilibria: Vec<NashEquilibrium>, complete: bool, note: Option<String>) -> NashSet {
        let l = equilibria.iter().map(|e| e.alpha.clone()).min();
        let h = equilibria.iter().map(|e| e.alpha.clone()).max();
        NashSet { equilibria, complete, l, h, note }
    }

    pub fn payoff_pairs(&self) -> Vec<(Rational, Rational)> {
        let mut pairs: Vec<(Rational, Rational)> =
            self.equilibria.iter().map(|e| (e.alpha.clone(), e.beta.clone())).collect();
        pairs.sort();
        pairs.dedup();
        pairs
    }

    pub fn x_strategies(&self) -> Vec<&MixedStrategy> {
        self.equilibria.iter().map(|e| &e.x).collect()
    }
}

/// Maximin value and witness: `v_A = max_x min_j alpha(x, j)` for player I,
/// `v_B = max_y min_i beta(i, y)` for player II. One exact LP.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MaximinResult {
    pub value: Rational,
    pub strategy: MixedStrategy,
}

pub fn maximin(game: &Game, who: Player) -> MaximinResult {
    let mat = match who {
        Player::I => game.a().clone(),
        Player::II => game.b().transpose(),
    };
    let (m, n) = (mat.rows(), mat.cols());
    // Variables: the mixed strategy plus the floor value v.
    let mut obj = vec![Rational::zero(); m + 1];
    obj[m] = Rational::one();
    let mut lp = LinearProgram::maximize(obj);
    for j in 0..n {
        let mut row: RatVector = (0..m).map(|i| mat.at(i, j).clone()).collect();
        row.push(-Rational::one());
        lp.constrain(row, Relation::Ge, Rational::zero());
    }
    let mut simplex = vec![Rational::one(); m + 1];
    simplex[m] = Rational::zero();
    lp.constrain(simplex, Relation::Eq, Rational::one());
    for i in 0..m {
        let mut row = vec![Rational::zero(); m + 1];
        row[i] = Rational::one();
        lp.constrain(row, Relation::Ge, Rational::zero());
    }
    match solve_lp(&lp).expect("maximin program") {
        LpOutcome::Optimal { value, vertex } => {
            let strategy = MixedStrategy::new(who, vertex[..m].to_vec())
                .expect("maximin vertex lies on the simplex");
            // The witness floor must equal the value exactly.
            let worst = (0..n).map(|j| dot_col(&mat, &strategy.weights, j)).min().unwrap();
            assert_eq!(worst, value, "maximin witness does not attain the value");
            MaximinResult { value, strategy }
        }
        other => unreachable!("maximin program is feasible and bounded, got {other:?}"),
    }
}

fn dot_col(m: &RatMatrix, x: &[Rational], j: usize) -> Rational {
    (0..m.rows()).map(|i| m.at(i, j) * &x[i]).sum()
}

/// Verifies a candidate profile directly against all pure deviations and
/// returns it with its payoffs when it is an exact Nash equilibrium.
pub fn verify_equilibrium(game: &Game, x: &MixedStrategy, y: &MixedStrategy) -> Option<NashEquilibrium> {
    let alpha = payoff(game, x, y, Player::I).ok()?;
    let beta = payoff(game, x, y, Player::II).ok()?;
    let row_payoffs = game.row_payoffs(y);
    if row_payoffs.iter().any(|v| v > &alpha) {
        return None;
    }
    let col_payoffs = game.column_payoffs(x);
    if col_payoffs.iter().any(|v| v > &beta) {
        return None;
    }
    Some(NashEquilibrium { x: x.clone(), y: y.clone(), alpha, beta })
}

/// Exact support enumeration. For each support pair of equal size the
/// indifference system is solved exactly and the candidate verified
/// against every pure deviation. For non-degenerate games within the
/// bound this provably lists the whole (finite) equilibrium set; for
/// degenerate games it lists vertex equilibria with `complete = false`.
pub fn nash_support_enumeration(game: &Game, enum_bound: usize) -> NashSet {
    if game.m() + game.n() > enum_bound {
        return NashSet::from_list(
            Vec::new(),
            false,
            Some(format!(
                "support enumeration skipped: {} + {} pure strategies exceed the bound {}",
                game.m(),
                game.n(),
                enum_bound
            )),
        );
    }
    let (m, n) = (game.m(), game.n());
    let mut found: Vec<NashEquilibrium> = Vec::new();
    let mut singular_pair = false;
    for size in 1..=m.min(n) {
        for s in combinations(m, size) {
            for t in combinations(n, size) {
                match candidate_for_supports(game, &s, &t) {
                    CandidateOutcome::Candidate(x, y) => {
                        if let Some(ne) = verify_equilibrium(game, &x, &y) {
                            if !found.contains(&ne) {
                                found.push(ne);
                            }
                        }
                    }
                    CandidateOutcome::Singular => singular_pair = true,
                    CandidateOutcome::None => {}
                }
            }
        }
    }
    let degenerate = crate::game::degenerate(game, enum_bound);
    let complete = matches!(degenerate, crate::game::Degeneracy::NonDegenerate);
    let note = match (&degenerate, singular_pair) {
        (crate::game::Degeneracy::Degenerate { .. }, _) => Some(
            "degenerate game: vertex equilibria only; equilibrium components are not parameterized"
                .to_string(),
        ),
        (crate::game::Degeneracy::Unchecked, _) => {
            Some("degeneracy unchecked: completeness unknown".to_string())
        }
        (_, true) => Some("singular indifference system encountered".to_string()),
        _ => None,
    };
    NashSet::from_list(found, complete, note)
}

enum CandidateOutcome {
    Candidate(MixedStrategy, MixedStrategy),
    Singular,
    None,
}

fn candidate_for_supports(game: &Game, s: &[usize], t: &[usize]) -> CandidateOutcome {
    let k = s.len();
    if k == 1 {
        let x = MixedStrategy::pure(Player::I, s[0], game.m());
        let y = MixedStrategy::pure(Player::II, t[0], game.n());
        return CandidateOutcome::Candidate(x, y);
    }
    // Player II mixes over `t` so that player I is indifferent across `s`;
    // player I mixes over `s` so that player II is indifferent across `t`.
    let a = game.a();
    let b = game.b();
    let mut rows: Vec<RatVector> = Vec::with_capacity(k);
    let mut rhs: RatVector = Vec::with_capacity(k);
    for w in 1..k {
        rows.push(t.iter().map(|&j| a.at(s[w], j) - a.at(s[0], j)).collect());
        rhs.push(Rational::zero());
    }
    rows.push(vec![Rational::one(); k]);
    rhs.push(Rational::one());
    let Some(y_t) = solve_square_system(&rows, &rhs) else {
        return CandidateOutcome::Singular;
    };
    let mut rows: Vec<RatVector> = Vec::with_capacity(k);
    let mut rhs: RatVector = Vec::with_capacity(k);
    for w in 1..k {
        rows.push(s.iter().map(|&i| b.at(i, t[w]) - b.at(i, t[0])).collect());
        rhs.push(Rational::zero());
    }
    rows.push(vec![Rational::one(); k]);
    rhs.push(Rational::one());
    let Some(x_s) = solve_square_system(&rows, &rhs) else {
        return CandidateOutcome::Singular;
    };
    if y_t.iter().any(Rational::is_negative) || x_s.iter().any(Rational::is_negative) {
        return CandidateOutcome::None;
    }
    let mut xw = vec![Rational::zero(); game.m()];
    for (w, &i) in s.iter().enumerate() {
        xw[i] = x_s[w].clone();
    }
    let mut yw = vec![Rational::zero(); game.n()];
    for (w, &j) in t.iter().enumerate() {
        yw[j] = y_t[w].clone();
    }
    CandidateOutcome::Candidate(
        MixedStrategy { owner: Player::I, weights: xw },
        MixedStrategy { owner: Player::II, weights: yw },
    )
}

/// Nash set of the twisted game `(-B, -A)`, with payoffs reported in the
/// original game's payoff functions.
pub fn twisted_equilibria(game: &Game, enum_bound: usize) -> NashSet {
    let twisted = game.twisted();
    let te = nash_support_enumeration(&twisted, enum_bound);
    relabel_in_original(game, te)
}

pub(crate) fn relabel_in_original(game: &Game, te: NashSet) -> NashSet {
    let equilibria = te
        .equilibria
        .into_iter()
        .map(|e| {
            let alpha = payoff(game, &e.x, &e.y, Player::I).expect("profile fits the game");
            let beta = payoff(game, &e.x, &e.y, Player::II).expect("profile fits the game");
            NashEquilibrium { x: e.x, y: e.y, alpha, beta }
        })
        .collect();
    NashSet::from_list(equilibria, te.complete, te.note)
}

/// Checks the four saddle inequalities directly: `alpha(x, y*) <= alpha(x*, y*)
/// <= alpha(x*, y)` and `beta(x*, y) <= beta(x*, y*) <= beta(x, y*)` for all
/// pure `x`, `y` (linearity extends them to mixed strategies).
pub fn is_saddle_point(game: &Game, x: &MixedStrategy, y: &MixedStrategy) -> bool {
    let Ok(alpha) = payoff(game, x, y, Player::I) else { return false };
    let Ok(beta) = payoff(game, x, y, Player::II) else { return false };
    let alpha_rows = game.row_payoffs(y);
    let alpha_cols = game.a().left_mul(&x.weights);
    let beta_rows = game.b().right_mul(&y.weights);
    let beta_cols = game.column_payoffs(x);
    alpha_rows.iter().all(|v| v <= &alpha)
        && alpha_cols.iter().all(|v| v >= &alpha)
        && beta_cols.iter().all(|v| v <= &beta)
        && beta_rows.iter().all(|v| v >= &beta)
}

/// `S(Gamma) = NE intersect TE`, matched by exact profile equality, each
/// member re-verified against the defining inequalities.
pub fn saddle_points(game: &Game, ne: &NashSet, te: &NashSet) -> Vec<NashEquilibrium> {
    let mut out = Vec::new();
    for e in &ne.equilibria {
        let in_te = te.equilibria.iter().any(|f| f.x == e.x && f.y == e.y);
        if in_te && is_saddle_point(game, &e.x, &e.y) {
            out.push(e.clone());
        }
    }
    out
}

/// A joint distribution over pure profiles.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CorrelatedDistribution {
    pub weights: RatMatrix,
}

impl CorrelatedDistribution {
    pub fn new(weights: RatMatrix) -> Result<CorrelatedDistribution, GameError> {
        let mut total = Rational::zero();
        for i in 0..weights.rows() {
            for j in 0..weights.cols() {
                let w = weights.at(i, j);
                if w.is_negative() {
                    return Err(GameError::Parse("z has a negative entry".into()));
                }
                total += w;
            }
        }
        if !total.is_one() {
            return Err(GameError::Parse(format!("z sums to {total}, expected exactly 1")));
        }
        Ok(CorrelatedDistribution { weights })
    }

    pub fn point_mass(m: usize, n: usize, i: usize, j: usize) -> CorrelatedDistribution {
        let mut w = RatMatrix::zero(m, n);
        w.set(i, j, Rational::one());
        CorrelatedDistribution { weights: w }
    }
}

/// Result of a coarse-correlated-equilibrium check: for each player, the
/// most profitable fixed pure deviation (committed to before the draw) and
/// its exact gain over the expected payoff under `z`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CceReport {
    pub is_cce: bool,
    pub expected: (Rational, Rational),
    pub worst_deviation: [(usize, Rational); 2],
}

pub fn verify_cce(game: &Game, z: &CorrelatedDistribution) -> Result<CceReport, GameError> {
    let (m, n) = (game.m(), game.n());
    if z.weights.rows() != m || z.weights.cols() != n {
        return Err(GameError::Parse(format!(
            "z is {}x{}, expected {}x{}",
            z.weights.rows(),
            z.weights.cols(),
            m,
            n
        )));
    }
    let mut expected_a = Rational::zero();
    let mut expected_b = Rational::zero();
    let mut row_marginal = vec![Rational::zero(); m];
    let mut col_marginal = vec![Rational::zero(); n];
    for i in 0..m {
        for j in 0..n {
            let w = z.weights.at(i, j);
            if w.is_zero() {
                continue;
            }
            expected_a += game.a().at(i, j) * w;
            expected_b += game.b().at(i, j) * w;
            row_marginal[i] += w;
            col_marginal[j] += w;
        }
    }
    // Player I deviates to a fixed row against player II's marginal.
    let dev_a: RatVector = (0..m)
        .map(|i| (0..n).map(|j| game.a().at(i, j) * &col_marginal[j]).sum::<Rational>())
        .collect();
    let dev_b: RatVector = (0..n)
        .map(|j| (0..m).map(|i| game.b().at(i, j) * &row_marginal[i]).sum::<Rational>())
        .collect();
    let best_a = argmax_set(&dev_a)[0];
    let best_b = argmax_set(&dev_b)[0];
    let gain_a = &dev_a[best_a] - &expected_a;
    let gain_b = &dev_b[best_b] - &expected_b;
    let is_cce = !gain_a.is_positive() && !gain_b.is_positive();
    Ok(CceReport {
        is_cce,
        expected: (expected_a, expected_b),
        worst_deviation: [(best_a, gain_a), (best_b, gain_b)],
    })
}
