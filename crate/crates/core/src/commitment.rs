//! The leadership-game solver.
//!
//! When one player commits to an observable mixed strategy and the other
//! best-responds, the leader's subgame perfect equilibrium payoffs form an
//! interval. Its endpoints are computed here by exact per-column linear
//! programs:
//!
//! * the low end (the commitment value) maximizes, over the inducible
//!   columns `j in D`, the worst payoff against the columns payoff
//!   equivalent to `j` on the region `X(j)`;
//! * the high end maximizes `alpha(x, j)` over `X(j)` across all columns.
//!
//! For games that are non-degenerate for the leader the two coincide.

use crate::equilibria::{maximin, nash_support_enumeration, verify_equilibrium, NashSet};
use crate::game::{
    compute_d, degenerate_for, payoff_equivalent_class, pure_best_replies, region_polytope,
    Degeneracy, Game, MixedStrategy, Player,
};
use crate::lp::{lex_min_optimal_vertex, solve_lp, LinearProgram, LpOutcome, Relation};
use crate::rational::{RatVector, Rational};
use num::{One, Zero};

/// A commitment-optimal witness: the leader strategy, the column it
/// induces, the follower's payoff against it, and whether inducing it
/// requires an arbitrarily small sacrifice (the commitment strategy has
/// more than one pure best reply).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LowWitness {
    pub x: MixedStrategy,
    pub induced: usize,
    pub beta_f: Rational,
    pub tie: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HighWitness {
    pub x: MixedStrategy,
    pub col: usize,
    pub payoff: Rational,
}

/// Full leadership analysis for one leader.
#[derive(Debug, Clone)]
pub struct LeaderReport {
    pub leader: Player,
    pub v_leader: Rational,
    pub maximin_strategy: MixedStrategy,
    pub alpha_low: Rational,
    pub alpha_high: Rational,
    pub witnesses_low: Vec<LowWitness>,
    pub witnesses_high: Vec<HighWitness>,
    pub nash: NashSet,
    pub degeneracy: Degeneracy,
    pub chain_ok: bool,
}

/// Per-column data shared by the two endpoint computations.
struct ColumnSolve {
    /// Optimum of `alpha(x, j)` over `X(j)`, when the region is nonempty.
    high: Option<(Rational, RatVector)>,
}

fn solve_columns(game: &Game, canonicalize: bool) -> Vec<ColumnSolve> {
    (0..game.n())
        .map(|j| {
            let poly = region_polytope(game, j);
            let obj: RatVector = game.a().column(j);
            let lp = poly.maximize(obj);
            let outcome = if canonicalize {
                lex_min_optimal_vertex(&lp).expect("region program")
            } else {
                solve_lp(&lp).expect("region program")
            };
            let high = match outcome {
                LpOutcome::Optimal { value, vertex } => Some((value, vertex)),
                LpOutcome::Infeasible => None,
                LpOutcome::Unbounded => unreachable!("regions are bounded"),
            };
            ColumnSolve { high }
        })
        .collect()
}

fn witness_strategy(game: &Game, vertex: &[Rational]) -> MixedStrategy {
    MixedStrategy::new(Player::I, vertex.to_vec())
        .unwrap_or_else(|e| panic!("region vertex must lie on the simplex ({e}); game {:?}", game.name))
}

/// Highest leader equilibrium payoff: `max_j max_{x in X(j)} alpha(x, j)`,
/// with one optimal vertex per attaining column.
pub fn alpha_high(game: &Game, leader: Player) -> (Rational, Vec<HighWitness>) {
    let g = oriented(game, leader);
    let cols = solve_columns(&g, canonicalize(&g));
    alpha_high_from(&g, &cols)
}

fn alpha_high_from(g: &Game, cols: &[ColumnSolve]) -> (Rational, Vec<HighWitness>) {
    let best = cols
        .iter()
        .filter_map(|c| c.high.as_ref().map(|(v, _)| v))
        .max()
        .expect("some best reply region is nonempty")
        .clone();
    let witnesses = cols
        .iter()
        .enumerate()
        .filter_map(|(j, c)| {
            c.high.as_ref().and_then(|(v, x)| {
                (v == &best).then(|| HighWitness {
                    x: witness_strategy(g, x),
                    col: j,
                    payoff: v.clone(),
                })
            })
        })
        .collect();
    (best, witnesses)
}

/// Lowest leader equilibrium payoff (the commitment value):
/// `max_{j in D} max_{x in X(j)} min_{k in E(j)} alpha(x, k)`.
/// Payoff-equivalent columns share one program and one witness, whose
/// induced column is the class member attaining the inner minimum.
pub fn alpha_low(game: &Game, leader: Player) -> (Rational, Vec<LowWitness>) {
    let g = oriented(game, leader);
    let cols = solve_columns(&g, canonicalize(&g));
    alpha_low_from(&g, &cols)
}

/// Both interval endpoints from one shared set of per-column programs.
pub fn endpoints(
    game: &Game,
    leader: Player,
) -> (Rational, Vec<LowWitness>, Rational, Vec<HighWitness>) {
    let g = oriented(game, leader);
    let cols = solve_columns(&g, canonicalize(&g));
    let (low, wl) = alpha_low_from(&g, &cols);
    let (high, wh) = alpha_high_from(&g, &cols);
    (low, wl, high, wh)
}

fn alpha_low_from(g: &Game, cols: &[ColumnSolve]) -> (Rational, Vec<LowWitness>) {
    let d = compute_d(g);
    let lex = canonicalize(g);
    // One candidate per payoff-equivalence class inside D.
    let mut class_solutions: Vec<(Rational, RatVector)> = Vec::new();
    let mut class_reps: Vec<Vec<usize>> = Vec::new();
    let mut seen: Vec<usize> = Vec::new();
    for &j in &d {
        if seen.contains(&j) {
            continue;
        }
        let class = payoff_equivalent_class(g, j);
        seen.extend(&class);
        let solution = if class.len() == 1 {
            let (v, x) = cols[j].high.as_ref().expect("columns in D have nonempty regions");
            (v.clone(), x.clone())
        } else {
            solve_class_floor(g, j, &class, lex)
        };
        class_solutions.push(solution);
        class_reps.push(class);
    }
    let best = class_solutions.iter().map(|(v, _)| v.clone()).max().expect("D is never empty");
    let mut witnesses = Vec::new();
    for ((v, x), class) in class_solutions.iter().zip(&class_reps) {
        if v != &best {
            continue;
        }
        let strategy = witness_strategy(g, x);
        // The induced column is the guaranteed one: the class member with
        // the smallest leader payoff at the witness (ties by column order).
        let induced = class
            .iter()
            .copied()
            .min_by(|&a, &b| {
                let pa: Rational = payoff_at(g, x, a);
                let pb: Rational = payoff_at(g, x, b);
                pa.cmp(&pb).then(a.cmp(&b))
            })
            .expect("class is nonempty");
        debug_assert_eq!(&payoff_at(g, x, induced), v);
        let beta_f = beta_at(g, x, induced);
        let tie = pure_best_replies(g, &strategy).len() > 1;
        witnesses.push(LowWitness { x: strategy, induced, beta_f, tie });
    }
    (best, witnesses)
}

/// `max t` subject to `x in X(j)` and `t <= alpha(x, k)` for every column
/// `k` payoff equivalent to `j`.
fn solve_class_floor(g: &Game, j: usize, class: &[usize], lex: bool) -> (Rational, RatVector) {
    let m = g.m();
    let poly = region_polytope(g, j);
    let vars = m + 1;
    let mut obj = vec![Rational::zero(); vars];
    obj[m] = Rational::one();
    let mut lp = LinearProgram::maximize(obj);
    let mut simplex = vec![Rational::one(); vars];
    simplex[m] = Rational::zero();
    lp.constrain(simplex, Relation::Eq, Rational::one());
    for i in 0..m {
        let mut row = vec![Rational::zero(); vars];
        row[i] = Rational::one();
        lp.constrain(row, Relation::Ge, Rational::zero());
    }
    for c in &poly.extra {
        let mut row = c.coeffs.clone();
        row.push(Rational::zero());
        lp.constrain(row, c.relation, c.rhs.clone());
    }
    for &k in class {
        let mut row: RatVector = g.a().column(k);
        row.push(-Rational::one());
        lp.constrain(row, Relation::Ge, Rational::zero());
    }
    let outcome = if lex {
        // Lexicographic refinement over the x coordinates only: pin the
        // floor variable to its optimum first.
        match solve_lp(&lp).expect("class floor program") {
            LpOutcome::Optimal { value, .. } => {
                let mut pinned = lp.clone();
                let mut trow = vec![Rational::zero(); vars];
                trow[m] = Rational::one();
                pinned.constrain(trow, Relation::Eq, value.clone());
                match lex_min_optimal_vertex(&pinned).expect("pinned class floor program") {
                    LpOutcome::Optimal { vertex, .. } => LpOutcome::Optimal { value, vertex },
                    other => other,
                }
            }
            other => other,
        }
    } else {
        solve_lp(&lp).expect("class floor program")
    };
    match outcome {
        LpOutcome::Optimal { value, vertex } => (value, vertex[..m].to_vec()),
        other => unreachable!("class floor program for a column of D, got {other:?}"),
    }
}

fn payoff_at(g: &Game, x: &[Rational], col: usize) -> Rational {
    (0..g.m()).map(|i| g.a().at(i, col) * &x[i]).sum()
}

fn beta_at(g: &Game, x: &[Rational], col: usize) -> Rational {
    (0..g.m()).map(|i| g.b().at(i, col) * &x[i]).sum()
}

fn oriented(game: &Game, leader: Player) -> Game {
    match leader {
        Player::I => game.clone(),
        Player::II => game.transpose_roles(),
    }
}

/// Reported witnesses are canonicalized (lexicographically smallest
/// optimal vertex) on small games; large games keep the deterministic
/// pivot-order vertex.
fn canonicalize(g: &Game) -> bool {
    g.m() + g.n() <= crate::game::DEFAULT_ENUM_BOUND
}

/// Assembles the full leadership report for one leader: maximin value,
/// both payoff-interval endpoints with witnesses, Nash bounds, degeneracy
/// status, and the exact bound-chain verification
/// `v <= l <= alpha_low` and `v <= l <= h <= alpha_high`, strengthened to
/// `h <= alpha_low` when the game is non-degenerate for the leader.
pub fn leader_report(game: &Game, leader: Player, enum_bound: usize) -> LeaderReport {
    let g = oriented(game, leader);
    let cols = solve_columns(&g, canonicalize(&g));
    let (alpha_low, witnesses_low) = alpha_low_from(&g, &cols);
    let (alpha_high, witnesses_high) = alpha_high_from(&g, &cols);
    let mm = maximin(&g, Player::I);
    let nash = nash_support_enumeration(&g, enum_bound);
    let degeneracy = degenerate_for(&g, Player::I, enum_bound);
    let mut chain_ok = mm.value <= alpha_low && alpha_low <= alpha_high;
    if let (Some(l), Some(h)) = (&nash.l, &nash.h) {
        chain_ok &= &mm.value <= l && l <= h && h <= &alpha_high && l <= &alpha_low;
        if matches!(degeneracy, Degeneracy::NonDegenerate) {
            chain_ok &= h <= &alpha_low;
        }
    }
    if matches!(degeneracy, Degeneracy::NonDegenerate) {
        chain_ok &= alpha_low == alpha_high;
    }
    LeaderReport {
        leader,
        v_leader: mm.value,
        maximin_strategy: MixedStrategy { owner: leader, ..mm.strategy },
        alpha_low,
        alpha_high,
        witnesses_low,
        witnesses_high,
        nash,
        degeneracy,
        chain_ok,
    }
}

/// Outcome of the pure-commitment check: in a game non-degenerate for the
/// leader, a pure commitment-optimal strategy together with the induced
/// best reply must form a pure Nash equilibrium.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PureCommitmentVerdict {
    /// Every pure witness was verified to form a Nash equilibrium.
    Confirmed { pairs: Vec<(usize, usize)> },
    /// No pure commitment-optimal witness exists.
    NoPureWitness,
    /// The game is degenerate (or unchecked) for the leader; membership is
    /// reported informationally per pure witness.
    NotApplicable { membership: Vec<(usize, usize, bool)> },
    /// A pure witness failed the equilibrium check in a non-degenerate
    /// game. This contradicts the theory and signals an internal error.
    Violated { pair: (usize, usize) },
}

pub fn check_pure_commitment_nash(
    game: &Game,
    leader: Player,
    enum_bound: usize,
) -> PureCommitmentVerdict {
    let g = oriented(game, leader);
    let (_, witnesses) = alpha_low(game, leader);
    let degeneracy = degenerate_for(&g, Player::I, enum_bound);
    let pure_pairs: Vec<(usize, usize)> = witnesses
        .iter()
        .filter_map(|w| w.x.as_pure().map(|i| (i, w.induced)))
        .collect();
    let is_ne = |&(i, j): &(usize, usize)| {
        let x = MixedStrategy::pure(Player::I, i, g.m());
        let y = MixedStrategy::pure(Player::II, j, g.n());
        verify_equilibrium(&g, &x, &y).is_some()
    };
    if !matches!(degeneracy, Degeneracy::NonDegenerate) {
        return PureCommitmentVerdict::NotApplicable {
            membership: pure_pairs.iter().map(|p| (p.0, p.1, is_ne(p))).collect(),
        };
    }
    if pure_pairs.is_empty() {
        return PureCommitmentVerdict::NoPureWitness;
    }
    for p in &pure_pairs {
        if !is_ne(p) {
            return PureCommitmentVerdict::Violated { pair: *p };
        }
    }
    PureCommitmentVerdict::Confirmed { pairs: pure_pairs }
}

/// Outcome of the completely-mixed-improvement check: in a non-degenerate
/// game, a completely mixed equilibrium strategy that is not maximin is
/// strictly improved upon by commitment.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum MixedImprovementVerdict {
    /// A column strictly better than the equilibrium payoff exists and the
    /// commitment value is at least that good. The follower's payoff at
    /// the improving column equals their equilibrium payoff exactly.
    Improves {
        x: MixedStrategy,
        alpha_n: Rational,
        j1: usize,
        alpha_at_j1: Rational,
        follower_unchanged: bool,
    },
    /// The completely mixed equilibrium strategy is maximin.
    MaximinOptimal,
    NoCompletelyMixedEquilibrium,
    /// Degenerate or unchecked game.
    NotApplicable,
}

pub fn completely_mixed_improvement(
    game: &Game,
    leader: Player,
    enum_bound: usize,
) -> MixedImprovementVerdict {
    let g = oriented(game, leader);
    if !matches!(crate::game::degenerate(&g, enum_bound), Degeneracy::NonDegenerate) {
        return MixedImprovementVerdict::NotApplicable;
    }
    let nash = nash_support_enumeration(&g, enum_bound);
    let full = nash.equilibria.iter().find(|e| {
        e.x.support().len() == g.m() && e.y.support().len() == g.n()
    });
    let Some(eq) = full else {
        return MixedImprovementVerdict::NoCompletelyMixedEquilibrium;
    };
    let mm = maximin(&g, Player::I);
    let column_payoffs: RatVector = g.a().left_mul(&eq.x.weights);
    let floor = column_payoffs.iter().min().unwrap().clone();
    if floor == mm.value {
        return MixedImprovementVerdict::MaximinOptimal;
    }
    // Not maximin: the equilibrium strategy is not a column equalizer, so
    // some column pays strictly more than the equilibrium payoff.
    let j1 = (0..g.n())
        .max_by(|&a, &b| column_payoffs[a].cmp(&column_payoffs[b]).then(b.cmp(&a)))
        .unwrap();
    let alpha_at_j1 = column_payoffs[j1].clone();
    assert!(
        alpha_at_j1 > eq.alpha,
        "non-maximin completely mixed equilibrium must admit an improving column"
    );
    let (low, _) = alpha_low_from(&g, &solve_columns(&g, false));
    assert!(low >= alpha_at_j1, "commitment value must dominate the improving column payoff");
    let beta_at_j1: Rational = (0..g.m()).map(|i| g.b().at(i, j1) * &eq.x.weights[i]).sum();
    MixedImprovementVerdict::Improves {
        x: eq.x.clone(),
        alpha_n: eq.alpha.clone(),
        j1,
        alpha_at_j1,
        follower_unchanged: beta_at_j1 == eq.beta,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::game::DEFAULT_ENUM_BOUND;
    use crate::rational::{rat, ratio};

    fn g4132() -> Game {
        Game::from_int_rows(&[&[4, 1], &[3, 2]], &[&[1, 2], &[4, 3]])
    }

    fn g4231() -> Game {
        Game::from_int_rows(&[&[4, 2], &[3, 1]], &[&[1, 2], &[0, 0]])
    }

    fn sec43_degenerate() -> Game {
        Game::from_int_rows(&[&[-1, 2], &[-2, 0]], &[&[1, 1], &[1, 1]])
    }

    fn sec3_3x3() -> Game {
        use crate::rational::parse_rational;
        use crate::rational::RatMatrix;
        let a = RatMatrix::from_rows(vec![
            vec![rat(4), rat(1), rat(0)],
            vec![rat(3), rat(2), rat(0)],
            vec![rat(0), rat(0), parse_rational("3.5").unwrap()],
        ])
        .unwrap();
        let b = RatMatrix::from_rows(vec![
            vec![rat(1), rat(2), rat(0)],
            vec![rat(4), rat(3), rat(0)],
            vec![rat(0), rat(0), rat(1)],
        ])
        .unwrap();
        Game::new(a, b).unwrap()
    }

    #[test]
    fn alpha_high_examples() {
        let (v, w) = alpha_high(&g4231(), Player::I);
        assert_eq!(v, rat(3));
        assert_eq!(w.len(), 1);
        assert_eq!(w[0].x.as_pure(), Some(1));
        let (v, _) = alpha_high(&sec43_degenerate(), Player::I);
        assert_eq!(v, rat(2));
        let zero = Game::from_int_rows(&[&[0, 0], &[0, 0]], &[&[1, 0], &[0, 1]]);
        assert_eq!(alpha_high(&zero, Player::I).0, rat(0));
    }

    #[test]
    fn two_commitment_witnesses_in_the_3x3_example() {
        let (v, w) = alpha_low(&sec3_3x3(), Player::I);
        assert_eq!(v, ratio(7, 2));
        let summary: Vec<(RatVector, usize)> =
            w.iter().map(|w| (w.x.weights.clone(), w.induced)).collect();
        assert_eq!(
            summary,
            vec![
                (vec![ratio(1, 2), ratio(1, 2), rat(0)], 0),
                (vec![rat(0), rat(0), rat(1)], 2),
            ]
        );
        let (vh, _) = alpha_high(&sec3_3x3(), Player::I);
        assert_eq!(vh, v);
    }

    #[test]
    fn degenerate_3x2_low_is_two() {
        let g = Game::from_int_rows(&[&[-3, 2], &[1, -3], &[0, 3]], &[&[0, 0], &[1, 2], &[3, -1]]);
        let (v, w) = alpha_low(&g, Player::I);
        assert_eq!(v, rat(2));
        assert_eq!(w.len(), 1);
        assert_eq!(w[0].x.as_pure(), Some(0));
        assert_eq!(w[0].induced, 1);
        assert!(w[0].tie, "s1 has two pure best replies");
        assert_eq!(alpha_high(&g, Player::I).0, rat(2));
    }

    #[test]
    fn payoff_equivalent_columns_force_the_inner_minimum() {
        let g = sec43_degenerate();
        let (v, w) = alpha_low(&g, Player::I);
        assert_eq!(v, rat(-1));
        assert_eq!(w.len(), 1);
        assert_eq!(w[0].x.as_pure(), Some(0));
        assert_eq!(w[0].induced, 0);
        assert!(w[0].tie);
    }

    #[test]
    fn example_31019_commitment() {
        let g = Game::from_int_rows(&[&[3, 10], &[1, 9]], &[&[3, 1], &[8, 9]]);
        let (v, w) = alpha_low(&g, Player::I);
        assert_eq!(v, ratio(28, 3));
        assert_eq!(w.len(), 1);
        assert_eq!(w[0].x.weights, vec![ratio(1, 3), ratio(2, 3)]);
        assert_eq!(w[0].induced, 1);
        assert_eq!(w[0].beta_f, ratio(19, 3));
    }

    #[test]
    fn leader_report_4132() {
        let r = leader_report(&g4132(), Player::I, DEFAULT_ENUM_BOUND);
        assert_eq!(r.v_leader, rat(2));
        assert_eq!(r.alpha_low, ratio(7, 2));
        assert_eq!(r.alpha_high, ratio(7, 2));
        assert_eq!(r.nash.l, Some(ratio(5, 2)));
        assert_eq!(r.nash.h, Some(ratio(5, 2)));
        assert!(matches!(r.degeneracy, Degeneracy::NonDegenerate));
        assert!(r.chain_ok);
        assert_eq!(r.witnesses_low.len(), 1);
        let w = &r.witnesses_low[0];
        assert_eq!(w.x.weights, vec![ratio(1, 2), ratio(1, 2)]);
        assert_eq!(w.induced, 0);
        assert_eq!(w.beta_f, ratio(5, 2));
        assert!(w.tie);
    }

    #[test]
    fn leader_report_for_player_two_via_transposition() {
        // The 4132 game is symmetric between the leaders' analyses.
        let r = leader_report(&g4132(), Player::II, DEFAULT_ENUM_BOUND);
        assert_eq!(r.alpha_low, ratio(7, 2));
        assert!(r.chain_ok);
    }

    #[test]
    fn zero_sum_chain_collapses() {
        let mp = Game::from_int_rows(&[&[1, -1], &[-1, 1]], &[&[-1, 1], &[1, -1]]);
        let r = leader_report(&mp, Player::I, DEFAULT_ENUM_BOUND);
        assert_eq!(r.v_leader, rat(0));
        assert_eq!(r.alpha_low, rat(0));
        assert_eq!(r.alpha_high, rat(0));
        assert_eq!(r.nash.l, Some(rat(0)));
        assert!(r.chain_ok);
    }

    #[test]
    fn pure_commitment_examples() {
        let gp = Game::from_int_rows(&[&[3, 2], &[1, 1]], &[&[3, 1], &[8, 9]]);
        match check_pure_commitment_nash(&gp, Player::I, DEFAULT_ENUM_BOUND) {
            PureCommitmentVerdict::Confirmed { pairs } => assert_eq!(pairs, vec![(0, 0)]),
            other => panic!("expected confirmed, got {other:?}"),
        }
        let deg = Game::from_int_rows(&[&[-3, 2], &[1, -3], &[0, 3]], &[&[0, 0], &[1, 2], &[3, -1]]);
        match check_pure_commitment_nash(&deg, Player::I, DEFAULT_ENUM_BOUND) {
            PureCommitmentVerdict::NotApplicable { membership } => {
                assert_eq!(membership, vec![(0, 1, false)]);
            }
            other => panic!("expected not-applicable, got {other:?}"),
        }
        let trivial = Game::from_int_rows(&[&[5]], &[&[7]]);
        match check_pure_commitment_nash(&trivial, Player::I, DEFAULT_ENUM_BOUND) {
            PureCommitmentVerdict::Confirmed { pairs } => assert_eq!(pairs, vec![(0, 0)]),
            other => panic!("expected confirmed, got {other:?}"),
        }
    }

    #[test]
    fn completely_mixed_improvement_examples() {
        match completely_mixed_improvement(&g4132(), Player::I, DEFAULT_ENUM_BOUND) {
            MixedImprovementVerdict::Improves { alpha_n, j1, alpha_at_j1, follower_unchanged, .. } => {
                assert_eq!(alpha_n, ratio(5, 2));
                assert_eq!(j1, 0);
                assert_eq!(alpha_at_j1, ratio(7, 2));
                assert!(follower_unchanged);
            }
            other => panic!("expected improvement, got {other:?}"),
        }
        let mp = Game::from_int_rows(&[&[1, -1], &[-1, 1]], &[&[-1, 1], &[1, -1]]);
        assert_eq!(
            completely_mixed_improvement(&mp, Player::I, DEFAULT_ENUM_BOUND),
            MixedImprovementVerdict::MaximinOptimal
        );
    }

    #[test]
    fn affine_invariance_of_the_endpoints() {
        let g = g4132();
        let c = ratio(3, 2);
        let d = rat(-4);
        let scaled = Game::new(g.a().map(|v| &c * v + &d), g.b().clone()).unwrap();
        let (lo, wl) = alpha_low(&g, Player::I);
        let (lo2, wl2) = alpha_low(&scaled, Player::I);
        assert_eq!(lo2, &c * &lo + &d);
        assert_eq!(wl.len(), wl2.len());
        for (a, b) in wl.iter().zip(&wl2) {
            assert_eq!(a.x, b.x);
            assert_eq!(a.induced, b.induced);
        }
        let (hi, _) = alpha_high(&g, Player::I);
        let (hi2, _) = alpha_high(&scaled, Player::I);
        assert_eq!(hi2, &c * &hi + &d);
        let v = maximin(&g, Player::I).value;
        let v2 = maximin(&scaled, Player::I).value;
        assert_eq!(v2, &c * &v + &d);
    }
}
