//! The Traveler's Dilemma and iterated elimination of strongly dominated
//! strategies.
//!
//! The dilemma with maximum claim `M` is the symmetric game on claims
//! `2..=M` where the lower claimant is paid their claim plus two and the
//! higher claimant the lower claim minus two. Iterated elimination reduces
//! it to the single profile `(2, 2)`, while the leadership solution keeps
//! payoffs near the Pareto frontier; both are computed here exactly, the
//! latter by the generic commitment solver on the full game.

use crate::commitment::{endpoints, LeaderReport};
use crate::equilibria::{
    maximin, nash_support_enumeration, relabel_in_original, saddle_points,
    verify_cce, verify_equilibrium, CceReport, CorrelatedDistribution, NashEquilibrium, NashSet,
};
use crate::game::{argmax_set, Degeneracy, Game, GameError, MixedStrategy, Player};
use crate::lp::{solve_lp, LinearProgram, LpOutcome, Relation};
use crate::rational::{rat, RatMatrix, RatVector, Rational};
use num::{One, Signed, Zero};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TrdSpec {
    /// Maximum claim `M`; claims run from 2 to `M`, reward and penalty are 2.
    pub max_claim: i64,
}

/// Capacity guard for the full leadership computation.
pub const DEFAULT_TRD_CAPACITY: i64 = 200;

pub fn trd_payoff(i: i64, j: i64) -> i64 {
    if i < j {
        i + 2
    } else if i == j {
        i
    } else {
        j - 2
    }
}

pub fn build_trd(spec: TrdSpec) -> Result<Game, GameError> {
    if spec.max_claim < 3 {
        return Err(GameError::Parse(format!(
            "traveler's dilemma needs a maximum claim of at least 3, got {}",
            spec.max_claim
        )));
    }
    let claims: Vec<i64> = (2..=spec.max_claim).collect();
    let a = RatMatrix::from_rows(
        claims
            .iter()
            .map(|&i| claims.iter().map(|&j| rat(trd_payoff(i, j))).collect())
            .collect(),
    )
    .expect("uniform rows");
    let b = a.transpose();
    let labels: Vec<String> = claims.iter().map(|c| c.to_string()).collect();
    let mut game = Game::new(a, b)?.with_labels(labels.clone(), labels)?;
    game.name = Some(format!("trd-{}", spec.max_claim));
    Ok(game)
}

/// One eliminated strategy: who lost it, its original index and label, and
/// the dominating mixture (weights over the player's surviving strategies,
/// by original index).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Elimination {
    pub player: Player,
    pub strategy: usize,
    pub label: String,
    pub dominator: Vec<(usize, Rational)>,
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Round {
    pub eliminations: Vec<Elimination>,
}

#[derive(Debug, Clone)]
pub struct IesdsOutcome {
    pub reduced: Game,
    pub surviving_rows: Vec<usize>,
    pub surviving_cols: Vec<usize>,
    pub rounds: Vec<Round>,
    /// Survivors at the start of the final elimination round; for the
    /// dilemma this is the stage that looks like a prisoner's dilemma.
    pub penultimate: Option<(Vec<usize>, Vec<usize>)>,
}

/// Iterated elimination of strongly dominated strategies. Each round
/// removes, simultaneously for both players, every pure strategy strongly
/// dominated by a mixture of the player's other surviving strategies,
/// recorded lowest index first. The reduced game is order-independent.
pub fn iesds(game: &Game) -> IesdsOutcome {
    iesds_with_order(game, false)
}

pub fn iesds_with_order(game: &Game, reverse_scan: bool) -> IesdsOutcome {
    let mut rows: Vec<usize> = (0..game.m()).collect();
    let mut cols: Vec<usize> = (0..game.n()).collect();
    let mut rounds: Vec<Round> = Vec::new();
    let mut penultimate = None;
    let b_t = game.b().transpose();
    loop {
        let mut gone_rows = dominated_strategies(game.a(), &rows, &cols, reverse_scan);
        let mut gone_cols = dominated_strategies(&b_t, &cols, &rows, reverse_scan);
        if gone_rows.is_empty() && gone_cols.is_empty() {
            break;
        }
        gone_rows.sort_by_key(|&(pos, _)| pos);
        gone_cols.sort_by_key(|&(pos, _)| pos);
        let mut round = Round::default();
        for (pos, dominator) in &gone_rows {
            round.eliminations.push(Elimination {
                player: Player::I,
                strategy: rows[*pos],
                label: game.row_label(rows[*pos]).to_string(),
                dominator: dominator
                    .iter()
                    .map(|(t, w)| (rows[*t], w.clone()))
                    .collect(),
            });
        }
        for (pos, dominator) in &gone_cols {
            round.eliminations.push(Elimination {
                player: Player::II,
                strategy: cols[*pos],
                label: game.col_label(cols[*pos]).to_string(),
                dominator: dominator
                    .iter()
                    .map(|(t, w)| (cols[*t], w.clone()))
                    .collect(),
            });
        }
        penultimate = Some((rows.clone(), cols.clone()));
        let drop_rows: Vec<usize> = gone_rows.iter().map(|&(p, _)| p).collect();
        let drop_cols: Vec<usize> = gone_cols.iter().map(|&(p, _)| p).collect();
        rows = keep_others(&rows, &drop_rows);
        cols = keep_others(&cols, &drop_cols);
        rounds.push(round);
    }
    let a = submatrix(game.a(), &rows, &cols);
    let b = submatrix(game.b(), &rows, &cols);
    let reduced = Game::new(a, b)
        .expect("survivor sets are nonempty")
        .with_labels(
            rows.iter().map(|&i| game.row_label(i).to_string()).collect(),
            cols.iter().map(|&j| game.col_label(j).to_string()).collect(),
        )
        .expect("label counts match");
    IesdsOutcome { reduced, surviving_rows: rows, surviving_cols: cols, rounds, penultimate }
}

fn keep_others(items: &[usize], drop_positions: &[usize]) -> Vec<usize> {
    items
        .iter()
        .enumerate()
        .filter(|(p, _)| !drop_positions.contains(p))
        .map(|(_, &v)| v)
        .collect()
}

fn select(m: &RatMatrix, rows: &[usize], cols: &[usize]) -> Vec<RatVector> {
    rows.iter()
        .map(|&i| cols.iter().map(|&j| m.at(i, j).clone()).collect())
        .collect()
}

fn submatrix(m: &RatMatrix, rows: &[usize], cols: &[usize]) -> RatMatrix {
    RatMatrix::from_rows(select(m, rows, cols)).expect("uniform selection")
}

/// All surviving rows of `mat` strongly dominated by a mixture of the
/// other surviving rows, with a dominating mixture for each; positions are
/// into `rows`.
fn dominated_strategies(
    mat: &RatMatrix,
    rows: &[usize],
    cols: &[usize],
    reverse_scan: bool,
) -> Vec<(usize, Vec<(usize, Rational)>)> {
    let k = rows.len();
    if k < 2 {
        return Vec::new();
    }
    // A strategy that is the unique best reply to some opposing column
    // cannot be dominated; skip its certificate search entirely.
    let mut undominatable = vec![false; k];
    for &j in cols {
        let mut best: Vec<usize> = vec![0];
        for p in 1..k {
            let v = mat.at(rows[p], j);
            match v.cmp(mat.at(rows[best[0]], j)) {
                std::cmp::Ordering::Greater => best = vec![p],
                std::cmp::Ordering::Equal => best.push(p),
                std::cmp::Ordering::Less => {}
            }
        }
        if best.len() == 1 {
            undominatable[best[0]] = true;
        }
    }
    let order: Vec<usize> =
        if reverse_scan { (0..k).rev().collect() } else { (0..k).collect() };
    let mut out = Vec::new();
    for &r in &order {
        if undominatable[r] {
            continue;
        }
        if let Some(dom) = dominating_mixture(mat, rows, cols, r) {
            out.push((r, dom));
        }
    }
    out
}

fn dominating_mixture(
    mat: &RatMatrix,
    rows: &[usize],
    cols: &[usize],
    r: usize,
) -> Option<Vec<(usize, Rational)>> {
    let k = rows.len();
    let others: Vec<usize> = (0..k).filter(|&i| i != r).collect();
    // Pure dominators first.
    for &p in &others {
        if cols.iter().all(|&j| mat.at(rows[p], j) > mat.at(rows[r], j)) {
            return Some(vec![(p, Rational::one())]);
        }
    }
    // Escalating geometric mixtures verify cheaply and certify the
    // dilemma's eliminations without a linear program. The check runs in
    // integers: per column, denominators are cleared and the weighted
    // payoff advantage accumulated exactly.
    use num::bigint::BigInt;
    use num::Integer;
    let raw: Vec<BigInt> = {
        let mut pow = BigInt::from(1);
        others
            .iter()
            .map(|_| {
                let w = pow.clone();
                pow *= 3;
                w
            })
            .collect()
    };
    for ascending in [true, false] {
        let mut w_int = raw.clone();
        if !ascending {
            w_int.reverse();
        }
        let dominates = cols.iter().all(|&j| {
            let mut scale = mat.at(rows[r], j).denom().clone();
            for &i in &others {
                scale = scale.lcm(mat.at(rows[i], j).denom());
            }
            let scaled = |v: &Rational| v.numer() * (&scale / v.denom());
            let base = scaled(mat.at(rows[r], j));
            let mut advantage = BigInt::from(0);
            for (t, &i) in others.iter().enumerate() {
                advantage += &w_int[t] * (scaled(mat.at(rows[i], j)) - &base);
            }
            advantage.is_positive()
        });
        if dominates {
            let total: BigInt = w_int.iter().sum();
            let weights: Vec<Rational> =
                w_int.iter().map(|w| Rational::new(w.clone(), total.clone())).collect();
            return Some(others.iter().copied().zip(weights).collect());
        }
    }
    lp_dominator(mat, rows, cols, r, &others)
}

fn lp_dominator(
    mat: &RatMatrix,
    rows: &[usize],
    cols: &[usize],
    r: usize,
    others: &[usize],
) -> Option<Vec<(usize, Rational)>> {
    let view: Vec<RatVector> = rows
        .iter()
        .map(|&i| cols.iter().map(|&j| mat.at(i, j).clone()).collect())
        .collect();
    let n = cols.len();
    let k = others.len();
    let vars = k + 1;
    let mut obj = vec![Rational::zero(); vars];
    obj[k] = Rational::one();
    let mut lp = LinearProgram::maximize(obj);
    for j in 0..n {
        let mut row: RatVector = others.iter().map(|&i| view[i][j].clone()).collect();
        row.push(-Rational::one());
        lp.constrain(row, Relation::Ge, view[r][j].clone());
    }
    let mut simplex = vec![Rational::one(); vars];
    simplex[k] = Rational::zero();
    lp.constrain(simplex, Relation::Eq, Rational::one());
    for i in 0..k {
        let mut row = vec![Rational::zero(); vars];
        row[i] = Rational::one();
        lp.constrain(row, Relation::Ge, Rational::zero());
    }
    match solve_lp(&lp).expect("dominance program") {
        LpOutcome::Optimal { value, vertex } if value.is_positive() => Some(
            others
                .iter()
                .enumerate()
                .filter(|(t, _)| !vertex[*t].is_zero())
                .map(|(t, &i)| (i, vertex[t].clone()))
                .collect(),
        ),
        _ => None,
    }
}

/// Nash set derived from iterated elimination: strong elimination preserves
/// the equilibrium set exactly, so a reduction to a single profile pins the
/// unique equilibrium of the full game.
pub fn nash_via_iesds(game: &Game, outcome: &IesdsOutcome, enum_bound: usize) -> NashSet {
    if outcome.surviving_rows.len() == 1 && outcome.surviving_cols.len() == 1 {
        let x = MixedStrategy::pure(Player::I, outcome.surviving_rows[0], game.m());
        let y = MixedStrategy::pure(Player::II, outcome.surviving_cols[0], game.n());
        let ne = verify_equilibrium(game, &x, &y)
            .expect("the sole survivor of iterated strict elimination is an equilibrium");
        return NashSet {
            l: Some(ne.alpha.clone()),
            h: Some(ne.alpha.clone()),
            equilibria: vec![ne],
            complete: true,
            note: Some(
                "unique equilibrium certified by iterated elimination of strongly dominated strategies"
                    .to_string(),
            ),
        };
    }
    let inner = nash_support_enumeration(&outcome.reduced, enum_bound);
    let complete = inner.complete;
    let note = inner.note.clone();
    let lifted: Vec<NashEquilibrium> = inner
        .equilibria
        .iter()
        .map(|e| {
            let mut xw = vec![Rational::zero(); game.m()];
            for (t, &i) in outcome.surviving_rows.iter().enumerate() {
                xw[i] = e.x.weights[t].clone();
            }
            let mut yw = vec![Rational::zero(); game.n()];
            for (t, &j) in outcome.surviving_cols.iter().enumerate() {
                yw[j] = e.y.weights[t].clone();
            }
            verify_equilibrium(
                game,
                &MixedStrategy { owner: Player::I, weights: xw },
                &MixedStrategy { owner: Player::II, weights: yw },
            )
            .expect("equilibria of the reduced game lift to the full game")
        })
        .collect();
    let mut set = NashSet {
        equilibria: lifted,
        complete,
        l: None,
        h: None,
        note,
    };
    set.l = set.equilibria.iter().map(|e| e.alpha.clone()).min();
    set.h = set.equilibria.iter().map(|e| e.alpha.clone()).max();
    set
}

/// The almost-strictly-competitive summary for the dilemma.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AscSummary {
    pub saddle_count: usize,
    pub nash_payoffs: Vec<(Rational, Rational)>,
    pub twisted_payoffs: Vec<(Rational, Rational)>,
    pub asc: bool,
}

#[derive(Debug, Clone)]
pub struct TrdReport {
    pub spec: TrdSpec,
    pub leader: LeaderReport,
    pub nash: NashSet,
    pub twisted: NashSet,
    pub saddles: Vec<NashEquilibrium>,
    pub asc: AscSummary,
    pub cce_checks: Vec<(String, CceReport)>,
    pub iesds: IesdsOutcome,
}

/// Full pipeline: iterated elimination, unique equilibrium, maximin value,
/// leadership solution on the full unreduced game, saddle/asc verification,
/// and the coarse-correlated-equilibrium checks.
pub fn solve_trd(spec: TrdSpec) -> Result<TrdReport, GameError> {
    if spec.max_claim > DEFAULT_TRD_CAPACITY {
        return Err(GameError::Parse(format!(
            "maximum claim {} exceeds the solver capacity {}",
            spec.max_claim, DEFAULT_TRD_CAPACITY
        )));
    }
    let game = build_trd(spec)?;
    let outcome = iesds(&game);
    let enum_bound = crate::game::DEFAULT_ENUM_BOUND;
    let nash = nash_via_iesds(&game, &outcome, enum_bound);
    let twisted_outcome = iesds(&game.twisted());
    let twisted = relabel_in_original(
        &game,
        nash_via_iesds(&game.twisted(), &twisted_outcome, enum_bound),
    );
    let saddles = saddle_points(&game, &nash, &twisted);
    let asc = AscSummary {
        saddle_count: saddles.len(),
        nash_payoffs: nash.payoff_pairs(),
        twisted_payoffs: twisted.payoff_pairs(),
        asc: nash.complete
            && twisted.complete
            && !saddles.is_empty()
            && nash.payoff_pairs() == twisted.payoff_pairs(),
    };

    // Leadership on the full game, sharing the per-column programs.
    let mm = maximin(&game, Player::I);
    let (low, witnesses_low, high, witnesses_high) = endpoints(&game, Player::I);
    let mut chain_ok = mm.value <= low && low <= high;
    if let (Some(l), Some(h)) = (&nash.l, &nash.h) {
        chain_ok &= &mm.value <= l && l <= h && h <= &high && l <= &low;
    }
    let leader = LeaderReport {
        leader: Player::I,
        v_leader: mm.value,
        maximin_strategy: mm.strategy,
        alpha_low: low,
        alpha_high: high,
        witnesses_low,
        witnesses_high,
        nash: nash.clone(),
        degeneracy: Degeneracy::Unchecked,
        chain_ok,
    };

    let cce_checks = paper_cce_checks(&game, spec.max_claim)?;
    Ok(TrdReport { spec, leader, nash, twisted, saddles, asc, cce_checks, iesds: outcome })
}

fn claim_index(claim: i64) -> usize {
    (claim - 2) as usize
}

fn paper_cce_checks(game: &Game, max_claim: i64) -> Result<Vec<(String, CceReport)>, GameError> {
    let n = game.n();
    let mut checks = Vec::new();
    if max_claim >= 100 {
        let half = Rational::new(1.into(), 2.into());
        for partner in [98i64, 97] {
            let mut w = RatMatrix::zero(n, n);
            w.set(claim_index(100), claim_index(100), half.clone());
            w.set(claim_index(partner), claim_index(partner), half.clone());
            let z = CorrelatedDistribution::new(w)?;
            checks.push((format!("half on (100,100), half on ({partner},{partner})"), verify_cce(game, &z)?));
        }
        let z = CorrelatedDistribution::point_mass(n, n, claim_index(100), claim_index(100));
        checks.push(("point mass on (100,100)".to_string(), verify_cce(game, &z)?));
    }
    Ok(checks)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::ratio;

    #[test]
    fn payoffs_match_the_formula() {
        let g = build_trd(TrdSpec { max_claim: 100 }).unwrap();
        let at = |i: i64, j: i64| g.a().at((i - 2) as usize, (j - 2) as usize).clone();
        assert_eq!(at(50, 70), rat(52));
        assert_eq!(at(70, 50), rat(48));
        assert_eq!(at(4, 4), rat(4));
        // Symmetry: beta(i, j) = alpha(j, i).
        assert_eq!(g.b().at(3, 7), g.a().at(7, 3));
        assert!(build_trd(TrdSpec { max_claim: 2 }).is_err());
    }

    #[test]
    fn iesds_reduces_small_dilemmas_to_two() {
        for m in 3..=12 {
            let g = build_trd(TrdSpec { max_claim: m }).unwrap();
            let out = iesds(&g);
            assert_eq!(out.reduced.m(), 1, "M = {m}");
            assert_eq!(out.surviving_rows, vec![0]);
            assert_eq!(out.surviving_cols, vec![0]);
            // First round eliminates exactly the top claim for each player.
            let first = &out.rounds[0];
            assert_eq!(first.eliminations.len(), 2);
            assert!(first.eliminations.iter().all(|e| e.label == m.to_string()));
            // Reversed scan order reaches the same reduced game.
            let rev = iesds_with_order(&g, true);
            assert_eq!(rev.surviving_rows, out.surviving_rows);
            assert_eq!(rev.surviving_cols, out.surviving_cols);
        }
    }

    #[test]
    fn every_recorded_dominator_verifies() {
        let g = build_trd(TrdSpec { max_claim: 9 }).unwrap();
        let out = iesds(&g);
        let mut rows: Vec<usize> = (0..g.m()).collect();
        let mut cols: Vec<usize> = (0..g.n()).collect();
        for round in &out.rounds {
            for e in &round.eliminations {
                let (mat, survivors, opponents) = match e.player {
                    Player::I => (g.a().clone(), &rows, &cols),
                    Player::II => (g.b().transpose(), &cols, &rows),
                };
                assert!(survivors.contains(&e.strategy));
                let total: Rational = e.dominator.iter().map(|(_, w)| w.clone()).sum();
                assert!(total.is_one());
                for &j in opponents.iter() {
                    let mixed: Rational =
                        e.dominator.iter().map(|(i, w)| mat.at(*i, j) * w).sum();
                    assert!(mixed > mat.at(e.strategy, j).clone(), "strict domination");
                }
            }
            let gone_rows: Vec<usize> = round
                .eliminations
                .iter()
                .filter(|e| e.player == Player::I)
                .map(|e| e.strategy)
                .collect();
            let gone_cols: Vec<usize> = round
                .eliminations
                .iter()
                .filter(|e| e.player == Player::II)
                .map(|e| e.strategy)
                .collect();
            rows.retain(|i| !gone_rows.contains(i));
            cols.retain(|j| !gone_cols.contains(j));
        }
    }

    #[test]
    fn matching_pennies_is_irreducible() {
        let g = Game::from_int_rows(&[&[1, -1], &[-1, 1]], &[&[-1, 1], &[1, -1]]);
        let out = iesds(&g);
        assert!(out.rounds.is_empty());
        assert_eq!(out.reduced.m(), 2);
    }

    #[test]
    fn conitzer_elimination_order() {
        let g = Game::from_int_rows(&[&[2, -1], &[3, 0]], &[&[2, 1], &[-1, 0]]);
        let out = iesds(&g);
        assert_eq!(out.rounds.len(), 2);
        assert_eq!(out.rounds[0].eliminations.len(), 1);
        assert_eq!(out.rounds[0].eliminations[0].player, Player::I);
        assert_eq!(out.rounds[0].eliminations[0].strategy, 0);
        assert_eq!(out.rounds[1].eliminations[0].player, Player::II);
        assert_eq!(out.rounds[1].eliminations[0].strategy, 0);
        assert_eq!(out.surviving_rows, vec![1]);
        assert_eq!(out.surviving_cols, vec![1]);
    }

    #[test]
    fn small_dilemma_leadership() {
        let report = solve_trd(TrdSpec { max_claim: 3 }).unwrap();
        // Claims {2, 3}: commitment does not help at this size.
        assert_eq!(report.leader.alpha_low, rat(2));
        assert_eq!(report.nash.equilibria.len(), 1);
        assert_eq!(report.nash.equilibria[0].alpha, rat(2));
        assert!(report.asc.asc);
    }

    #[test]
    fn medium_dilemma_pipeline() {
        let report = solve_trd(TrdSpec { max_claim: 12 }).unwrap();
        assert_eq!(report.nash.payoff_pairs(), vec![(rat(2), rat(2))]);
        assert_eq!(report.twisted.payoff_pairs(), vec![(rat(2), rat(2))]);
        assert_eq!(report.saddles.len(), 1);
        assert!(report.asc.asc);
        assert!(report.leader.chain_ok);
        // Leadership strictly beats the equilibrium for M = 12:
        // committing to the top three claims in equal parts.
        assert_eq!(report.leader.alpha_low, ratio(31, 3));
        let w = &report.leader.witnesses_low[0];
        // Support on claims {9, 11, 12}, i.e. indices {7, 9, 10}.
        assert_eq!(w.x.support(), vec![7, 9, 10]);
        assert_eq!(w.beta_f, report.leader.alpha_low);
    }

    #[test]
    fn capacity_guard() {
        assert!(solve_trd(TrdSpec { max_claim: 500 }).is_err());
    }
}
