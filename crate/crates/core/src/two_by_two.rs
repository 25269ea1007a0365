//! Closed-form theory for 2x2 games, solved without linear programming.
//!
//! In a 2x2 game the best reply regions are subintervals of the leader's
//! one-dimensional simplex whose only possible interior breakpoint is the
//! equalizing strategy, so the leadership endpoints, the equilibrium set,
//! the relationship between commitment-optimal and equilibrium strategies,
//! and the follower-payoff comparison all have finite case splits. The
//! whole module doubles as an independent oracle for the generic solver.

use crate::equilibria::{NashEquilibrium, NashSet};
use crate::game::{Game, GameError, MixedStrategy, Player};
use crate::rational::{RatVector, Rational};
use num::{One, Signed, Zero};

/// Entries in the paper's order: `a1 a2 / a3 a4` row-major.
#[derive(Debug, Clone)]
struct Entries {
    a: [Rational; 4],
    b: [Rational; 4],
}

fn entries(game: &Game) -> Result<Entries, GameError> {
    if game.m() != 2 || game.n() != 2 {
        return Err(GameError::NotTwoByTwo { rows: game.m(), cols: game.n() });
    }
    let g = |m: &crate::rational::RatMatrix, i: usize, j: usize| m.at(i, j).clone();
    Ok(Entries {
        a: [g(game.a(), 0, 0), g(game.a(), 0, 1), g(game.a(), 1, 0), g(game.a(), 1, 1)],
        b: [g(game.b(), 0, 0), g(game.b(), 0, 1), g(game.b(), 1, 0), g(game.b(), 1, 1)],
    })
}

/// Equalizing strategies: `x^d = (1 - d, d)` makes player II indifferent
/// between the columns, `y^c = (1 - c, c)` makes player I indifferent
/// between the rows. Each exists when its denominator is nonzero and the
/// ratio lies in the unit interval.
pub fn equalizers(
    game: &Game,
) -> Result<(Option<(Rational, MixedStrategy)>, Option<(Rational, MixedStrategy)>), GameError> {
    let e = entries(game)?;
    let [b1, b2, b3, b4] = &e.b;
    let denom_d = &(b1 - b2) + &(b4 - b3);
    let d = if denom_d.is_zero() {
        None
    } else {
        let d = (b1 - b2) / &denom_d;
        unit_interval(&d).then(|| {
            let x = MixedStrategy {
                owner: Player::I,
                weights: vec![Rational::one() - &d, d.clone()],
            };
            (d, x)
        })
    };
    let [a1, a2, a3, a4] = &e.a;
    let denom_c = &(a1 - a3) + &(a4 - a2);
    let c = if denom_c.is_zero() {
        None
    } else {
        let c = (a1 - a3) / &denom_c;
        unit_interval(&c).then(|| {
            let y = MixedStrategy {
                owner: Player::II,
                weights: vec![Rational::one() - &c, c.clone()],
            };
            (c, y)
        })
    };
    Ok((d, c))
}

fn unit_interval(v: &Rational) -> bool {
    !v.is_negative() && v <= &Rational::one()
}

/// Player II's constant payoff against the equalizer: `det B` over the
/// diagonal-sum difference.
pub fn beta_d(game: &Game) -> Result<Option<Rational>, GameError> {
    let e = entries(game)?;
    let [b1, b2, b3, b4] = &e.b;
    let denom = &(b1 + b4) - &(b2 + b3);
    if denom.is_zero() {
        return Ok(None);
    }
    let det = &(b1 * b4) - &(b2 * b3);
    let value = det / denom;
    // Constancy check at both pure columns.
    if let (Some((_, xd)), _) = equalizers(game)? {
        let at = |j: usize| -> Rational {
            (0..2).map(|i| game.b().at(i, j) * &xd.weights[i]).sum()
        };
        debug_assert_eq!(at(0), value);
        debug_assert_eq!(at(1), value);
    }
    Ok(Some(value))
}

/// In a 2x2 game a player is degenerate exactly when a pure strategy of
/// theirs leaves the opponent indifferent.
pub fn degenerate_for_2x2(game: &Game, who: Player) -> Result<bool, GameError> {
    let e = entries(game)?;
    Ok(match who {
        Player::I => e.b[0] == e.b[1] || e.b[2] == e.b[3],
        Player::II => e.a[0] == e.a[2] || e.a[1] == e.a[3],
    })
}

/// `x1`-interval of a best reply region, where `x1` is the weight on the
/// first row.
fn region_interval(e: &Entries, j: usize) -> Option<(Rational, Rational)> {
    // Advantage of column j over the other column at s2 and s1.
    let [b1, b2, b3, b4] = &e.b;
    let (at_s2, at_s1) = if j == 0 { (b3 - b4, b1 - b2) } else { (b4 - b3, b2 - b1) };
    let zero = Rational::zero();
    let one = Rational::one();
    match (at_s2 >= zero, at_s1 >= zero) {
        (true, true) => Some((zero, one)),
        (false, false) => None,
        _ => {
            // The advantage is linear from `at_s2` (x1 = 0) to `at_s1`
            // (x1 = 1) with a single root.
            let root = &at_s2 / &(&at_s2 - &at_s1);
            if at_s2 >= zero {
                Some((zero, root))
            } else {
                Some((root, one))
            }
        }
    }
}

fn interior_nonempty(interval: &(Rational, Rational)) -> bool {
    let (lo, hi) = interval;
    hi > &Rational::zero() && lo < &Rational::one()
}

fn alpha_line(e: &Entries, j: usize) -> (Rational, Rational) {
    // alpha(x, t_j) = at0 + x1 * slope.
    let [a1, a2, a3, a4] = &e.a;
    if j == 0 {
        (a3.clone(), a1 - a3)
    } else {
        (a4.clone(), a2 - a4)
    }
}

fn eval_line(line: &(Rational, Rational), x1: &Rational) -> Rational {
    &line.0 + &(&line.1 * x1)
}

fn x_of(x1: &Rational) -> MixedStrategy {
    MixedStrategy {
        owner: Player::I,
        weights: vec![x1.clone(), Rational::one() - x1],
    }
}

/// Closed-form leadership endpoints with canonical (leftmost) witnesses,
/// mirroring the generic module's tie-breaking.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClosedFormSolution {
    pub alpha_low: Rational,
    pub alpha_high: Rational,
    pub witnesses_low: Vec<(MixedStrategy, usize, Rational, bool)>,
    pub witnesses_high: Vec<(MixedStrategy, usize, Rational)>,
}

pub fn closed_form_endpoints(game: &Game) -> Result<ClosedFormSolution, GameError> {
    let e = entries(game)?;
    let intervals: Vec<Option<(Rational, Rational)>> =
        (0..2).map(|j| region_interval(&e, j)).collect();
    let payoff_equivalent = e.b[0] == e.b[1] && e.b[2] == e.b[3];

    // Highest payoff: per nonempty region, the leftmost maximizer of the
    // linear payoff of its own column.
    let mut high_candidates: Vec<(usize, Rational, Rational)> = Vec::new();
    for j in 0..2 {
        let Some((lo, hi)) = &intervals[j] else { continue };
        let line = alpha_line(&e, j);
        let (x1, value) = match line.1.cmp(&Rational::zero()) {
            std::cmp::Ordering::Greater => (hi.clone(), eval_line(&line, hi)),
            _ => (lo.clone(), eval_line(&line, lo)),
        };
        high_candidates.push((j, x1, value));
    }
    let alpha_high =
        high_candidates.iter().map(|(_, _, v)| v.clone()).max().expect("some region nonempty");
    let witnesses_high: Vec<(MixedStrategy, usize, Rational)> = high_candidates
        .iter()
        .filter(|(_, _, v)| v == &alpha_high)
        .map(|(j, x1, v)| (x_of(x1), *j, v.clone()))
        .collect();

    // Lowest payoff: per payoff-equivalence class inside D.
    let beta_tie = |x1: &Rational| -> bool {
        let [b1, b2, b3, b4] = &e.b;
        let diff = &(&(b1 - b2) * x1) + &(&(b3 - b4) * &(Rational::one() - x1));
        diff.is_zero()
    };
    let mut low_candidates: Vec<(Vec<usize>, Rational, Rational)> = Vec::new();
    if payoff_equivalent {
        // Both regions are the full interval; the guaranteed payoff is the
        // concave minimum of the two payoff lines, maximized at a vertex
        // or at their crossing.
        let l0 = alpha_line(&e, 0);
        let l1 = alpha_line(&e, 1);
        let mut breakpoints =
            vec![Rational::zero(), Rational::one()];
        let slope_diff = &l0.1 - &l1.1;
        if !slope_diff.is_zero() {
            let cross = &(&l1.0 - &l0.0) / &slope_diff;
            if unit_interval(&cross) {
                breakpoints.push(cross);
            }
        }
        breakpoints.sort();
        let minf = |x1: &Rational| -> Rational {
            eval_line(&l0, x1).min(eval_line(&l1, x1))
        };
        let best = breakpoints.iter().map(&minf).max().unwrap();
        let x1 = breakpoints.iter().find(|p| minf(p) == best).unwrap().clone();
        low_candidates.push((vec![0, 1], x1, best));
    } else {
        for j in 0..2 {
            let Some(interval) = &intervals[j] else { continue };
            if !interior_nonempty(interval) {
                continue;
            }
            let line = alpha_line(&e, j);
            let (lo, hi) = interval;
            let (x1, value) = match line.1.cmp(&Rational::zero()) {
                std::cmp::Ordering::Greater => (hi.clone(), eval_line(&line, hi)),
                _ => (lo.clone(), eval_line(&line, lo)),
            };
            low_candidates.push((vec![j], x1, value));
        }
    }
    let alpha_low =
        low_candidates.iter().map(|(_, _, v)| v.clone()).max().expect("D is never empty");
    let mut witnesses_low = Vec::new();
    for (class, x1, v) in &low_candidates {
        if v != &alpha_low {
            continue;
        }
        let x = x_of(x1);
        let induced = if class.len() == 1 {
            class[0]
        } else {
            // Guaranteed column: the class member with the smaller payoff.
            let p0 = eval_line(&alpha_line(&e, 0), x1);
            let p1 = eval_line(&alpha_line(&e, 1), x1);
            if p0 <= p1 {
                0
            } else {
                1
            }
        };
        let beta_f: Rational = (0..2).map(|i| game.b().at(i, induced) * &x.weights[i]).sum();
        let tie = payoff_equivalent || beta_tie(x1);
        witnesses_low.push((x, induced, beta_f, tie));
    }
    Ok(ClosedFormSolution { alpha_low, alpha_high, witnesses_low, witnesses_high })
}

/// Closed-form equilibrium enumeration mirroring the generic support
/// enumeration: the four pure profiles, then the equalizer pair.
pub fn closed_form_nash(game: &Game) -> Result<NashSet, GameError> {
    let e = entries(game)?;
    let mut found: Vec<NashEquilibrium> = Vec::new();
    for i in 0..2usize {
        for j in 0..2usize {
            let a = game.a();
            let b = game.b();
            let best_row = a.at(i, j) >= a.at(1 - i, j);
            let best_col = b.at(i, j) >= b.at(i, 1 - j);
            if best_row && best_col {
                found.push(NashEquilibrium {
                    x: MixedStrategy::pure(Player::I, i, 2),
                    y: MixedStrategy::pure(Player::II, j, 2),
                    alpha: a.at(i, j).clone(),
                    beta: b.at(i, j).clone(),
                });
            }
        }
    }
    let (d, c) = equalizers(game)?;
    if let (Some((_, xd)), Some((_, yc))) = (d, c) {
        let alpha: Rational = game.a().bilinear(&xd.weights, &yc.weights);
        let beta: Rational = game.b().bilinear(&xd.weights, &yc.weights);
        let ne = NashEquilibrium { x: xd, y: yc, alpha, beta };
        if !found.contains(&ne) {
            found.push(ne);
        }
    }
    let complete = !degenerate_for_2x2(game, Player::I)? && !degenerate_for_2x2(game, Player::II)?;
    let l = found.iter().map(|e| e.alpha.clone()).min();
    let h = found.iter().map(|e| e.alpha.clone()).max();
    Ok(NashSet {
        equilibria: found,
        complete,
        l,
        h,
        note: (!complete).then(|| "degenerate game: vertex equilibria only".to_string()),
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LemmaConclusion {
    /// Some commitment-optimal strategy lies outside the equilibrium
    /// strategies.
    ExistsOutside,
    /// Every commitment-optimal strategy is an equilibrium strategy.
    Subset,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LemmaConditions {
    pub ell1: bool,
    pub ell2: bool,
    pub degenerate_for_leader: bool,
    pub conclusion: LemmaConclusion,
}

/// The two conditions under which the leader's commitment-optimal strategy
/// escapes the equilibrium set: a strongly dominated own pure strategy,
/// and an equalizer that matches the equilibrium payoff.
pub fn lemma_conditions(game: &Game, leader: Player) -> Result<LemmaConditions, GameError> {
    let g = match leader {
        Player::I => game.clone(),
        Player::II => game.transpose_roles(),
    };
    let e = entries(&g)?;
    let degenerate_for_leader = degenerate_for_2x2(&g, Player::I)?;
    let [a1, a2, a3, a4] = &e.a;
    let ell1 = (a1 > a3 && a2 > a4) || (a3 > a1 && a4 > a2);
    let (d, _) = equalizers(&g)?;
    let nash = closed_form_nash(&g)?;
    let ell2 = match &d {
        None => false,
        Some((_, xd)) => {
            let reference = if nash.equilibria.len() == 1 {
                nash.equilibria[0].alpha.clone()
            } else {
                nash.l.clone().expect("a 2x2 game has an equilibrium")
            };
            (0..2).any(|j| {
                let p: Rational = (0..2).map(|i| g.a().at(i, j) * &xd.weights[i]).sum();
                p >= reference
            })
        }
    };
    let conclusion = if !degenerate_for_leader && ell1 && ell2 {
        LemmaConclusion::ExistsOutside
    } else {
        LemmaConclusion::Subset
    };
    Ok(LemmaConditions { ell1, ell2, degenerate_for_leader, conclusion })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Prop6Case {
    /// Degenerate for one of the leaders: both commitment sets sit inside
    /// the equilibrium strategies.
    A,
    /// Player I escapes; player II's commitment set equals their
    /// equilibrium strategies.
    BI,
    /// The mirror case.
    BII,
    /// Both commitment sets sit inside the equilibrium strategies.
    BIII,
}

pub fn proposition6_case(game: &Game) -> Result<Prop6Case, GameError> {
    if degenerate_for_2x2(game, Player::I)? || degenerate_for_2x2(game, Player::II)? {
        return Ok(Prop6Case::A);
    }
    let out_i = {
        let c = lemma_conditions(game, Player::I)?;
        c.conclusion == LemmaConclusion::ExistsOutside
    };
    let out_ii = {
        let c = lemma_conditions(game, Player::II)?;
        c.conclusion == LemmaConclusion::ExistsOutside
    };
    assert!(
        !(out_i && out_ii),
        "both leaders cannot escape the equilibrium set in a 2x2 game"
    );
    Ok(match (out_i, out_ii) {
        (true, _) => Prop6Case::BI,
        (_, true) => Prop6Case::BII,
        _ => Prop6Case::BIII,
    })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FollowerVerdict {
    /// The follower's payoff under the leader's commitment is strictly
    /// below their unique equilibrium payoff.
    Worse { beta_f: Rational, beta_n: Rational, v_b: Rational, unique: bool },
    NotWorse { beta_f: Rational, beta_n: Rational, v_b: Rational, unique: bool },
    /// The hypotheses (non-degeneracy and both lemma conditions) fail.
    NotApplicable,
}

/// Follower comparison under the canonical rearrangement (dominated row
/// first, follower's preferred column second): the follower ends up worse
/// than at equilibrium exactly when their matrix game value is below the
/// equilibrium payoff, with `v_B = min(b1, beta_d, b4)`.
pub fn follower_comparison(game: &Game, leader: Player) -> Result<FollowerVerdict, GameError> {
    let g = match leader {
        Player::I => game.clone(),
        Player::II => game.transpose_roles(),
    };
    entries(&g)?;
    if degenerate_for_2x2(&g, Player::I)? || degenerate_for_2x2(&g, Player::II)? {
        return Ok(FollowerVerdict::NotApplicable);
    }
    let conditions = lemma_conditions(&g, Player::I)?;
    if !(conditions.ell1 && conditions.ell2) {
        return Ok(FollowerVerdict::NotApplicable);
    }
    // Rearrange: dominated row first.
    let e = entries(&g)?;
    let row_swap = e.a[0] > e.a[2]; // row 1 dominates row 2
    let pick = |m: &crate::rational::RatMatrix, i: usize, j: usize| {
        let i = if row_swap { 1 - i } else { i };
        m.at(i, j).clone()
    };
    // Column order: follower prefers column with larger payoff in the
    // dominated row.
    let col_swap = pick(g.b(), 0, 0) < pick(g.b(), 0, 1);
    let at = |m: &crate::rational::RatMatrix, i: usize, j: usize| {
        let j = if col_swap { 1 - j } else { j };
        pick(m, i, j)
    };
    let b1 = at(g.b(), 0, 0);
    let b2 = at(g.b(), 0, 1);
    let b3 = at(g.b(), 1, 0);
    let b4 = at(g.b(), 1, 1);
    assert!(b1 > b2 && b3 < b4, "canonical rearrangement failed");
    let denom = &(&b1 + &b4) - &(&b2 + &b3);
    let beta_d = (&(&b1 * &b4) - &(&b2 * &b3)) / &denom;
    let v_b = b1.clone().min(beta_d.clone()).min(b4.clone());
    let beta_n = b4;
    let beta_f = beta_d;
    let worse = beta_f < beta_n;
    assert_eq!(worse, v_b < beta_n, "follower comparison biconditional");
    // Strict version of the equalizer condition pins the follower payoff.
    let (d, _) = equalizers(&g)?;
    let unique = match d {
        None => false,
        Some((_, xd)) => {
            let nash = closed_form_nash(&g)?;
            let alpha_n = nash.equilibria[0].alpha.clone();
            (0..2).any(|j| {
                let p: Rational = (0..2).map(|i| g.a().at(i, j) * &xd.weights[i]).sum();
                p > alpha_n
            })
        }
    };
    Ok(if worse {
        FollowerVerdict::Worse { beta_f, beta_n, v_b, unique }
    } else {
        FollowerVerdict::NotWorse { beta_f, beta_n, v_b, unique }
    })
}

/// Everything the closed-form 2x2 analysis produces, in one report.
#[derive(Debug, Clone)]
pub struct TwoByTwoReport {
    pub d: Option<Rational>,
    pub x_d: Option<MixedStrategy>,
    pub c: Option<Rational>,
    pub y_c: Option<MixedStrategy>,
    pub beta_d: Option<Rational>,
    pub conditions_i: LemmaConditions,
    pub conditions_ii: LemmaConditions,
    pub case: Prop6Case,
    pub solution: ClosedFormSolution,
    pub nash: NashSet,
    pub follower_i: FollowerVerdict,
    pub follower_ii: FollowerVerdict,
}

pub fn analyze_2x2(game: &Game) -> Result<TwoByTwoReport, GameError> {
    let (d, c) = equalizers(game)?;
    let (d, x_d) = match d {
        Some((d, x)) => (Some(d), Some(x)),
        None => (None, None),
    };
    let (c, y_c) = match c {
        Some((c, y)) => (Some(c), Some(y)),
        None => (None, None),
    };
    Ok(TwoByTwoReport {
        d,
        x_d,
        c,
        y_c,
        beta_d: beta_d(game)?,
        conditions_i: lemma_conditions(game, Player::I)?,
        conditions_ii: lemma_conditions(game, Player::II)?,
        case: proposition6_case(game)?,
        solution: closed_form_endpoints(game)?,
        nash: closed_form_nash(game)?,
        follower_i: follower_comparison(game, Player::I)?,
        follower_ii: follower_comparison(game, Player::II)?,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{rat, ratio};

    fn conitzer() -> Game {
        Game::from_int_rows(&[&[2, -1], &[3, 0]], &[&[2, 1], &[-1, 0]])
    }

    fn g4132() -> Game {
        Game::from_int_rows(&[&[4, 1], &[3, 2]], &[&[1, 2], &[4, 3]])
    }

    fn g4231() -> Game {
        Game::from_int_rows(&[&[4, 2], &[3, 1]], &[&[1, 2], &[0, 0]])
    }

    #[test]
    fn equalizer_examples() {
        let (d, _) = equalizers(&conitzer()).unwrap();
        let (d, xd) = d.unwrap();
        assert_eq!(d, ratio(1, 2));
        assert_eq!(xd.weights, vec![ratio(1, 2), ratio(1, 2)]);
        let (d, _) = equalizers(&g4132()).unwrap();
        let (d, xd) = d.unwrap();
        assert_eq!(d, ratio(1, 2));
        assert_eq!(xd.weights, vec![ratio(1, 2), ratio(1, 2)]);
        // Equal columns of B leave no equalizer.
        let flat = Game::from_int_rows(&[&[1, 2], &[3, 4]], &[&[1, 1], &[2, 2]]);
        let (d, _) = equalizers(&flat).unwrap();
        assert!(d.is_none());
        assert!(equalizers(&Game::from_int_rows(&[&[1, 2, 3]], &[&[1, 2, 3]])).is_err());
    }

    #[test]
    fn equalizer_makes_opponent_indifferent() {
        let g = conitzer();
        let (d, c) = equalizers(&g).unwrap();
        let (_, xd) = d.unwrap();
        let col = |j: usize| -> Rational {
            (0..2).map(|i| g.b().at(i, j) * &xd.weights[i]).sum()
        };
        assert_eq!(col(0), col(1));
        if let Some((_, yc)) = c {
            let row = |i: usize| -> Rational {
                (0..2).map(|j| g.a().at(i, j) * &yc.weights[j]).sum()
            };
            assert_eq!(row(0), row(1));
        }
    }

    #[test]
    fn closed_form_agrees_with_generic_on_examples() {
        for g in [conitzer(), g4132(), g4231()] {
            let cf = closed_form_endpoints(&g).unwrap();
            let (low, wl) = crate::commitment::alpha_low(&g, Player::I);
            let (high, wh) = crate::commitment::alpha_high(&g, Player::I);
            assert_eq!(cf.alpha_low, low);
            assert_eq!(cf.alpha_high, high);
            assert_eq!(cf.witnesses_low.len(), wl.len());
            for (a, b) in cf.witnesses_low.iter().zip(&wl) {
                assert_eq!(a.0, b.x);
                assert_eq!(a.1, b.induced);
                assert_eq!(a.2, b.beta_f);
                assert_eq!(a.3, b.tie);
            }
            assert_eq!(cf.witnesses_high.len(), wh.len());
            for (a, b) in cf.witnesses_high.iter().zip(&wh) {
                assert_eq!(a.0, b.x);
                assert_eq!(a.1, b.col);
            }
            let cf_nash = closed_form_nash(&g).unwrap();
            let generic = crate::equilibria::nash_support_enumeration(
                &g,
                crate::game::DEFAULT_ENUM_BOUND,
            );
            assert_eq!(cf_nash.equilibria, generic.equilibria);
            assert_eq!(cf_nash.complete, generic.complete);
        }
    }

    #[test]
    fn conitzer_lemma_conditions() {
        let c = lemma_conditions(&conitzer(), Player::I).unwrap();
        assert!(c.ell1, "s1 is strongly dominated");
        assert!(c.ell2, "the equalizer matches the equilibrium payoff");
        assert_eq!(c.conclusion, LemmaConclusion::ExistsOutside);
        // The commitment witness (1/2, 1/2) is not an equilibrium strategy.
        let cf = closed_form_endpoints(&conitzer()).unwrap();
        assert_eq!(cf.alpha_low, ratio(5, 2));
        let nash = closed_form_nash(&conitzer()).unwrap();
        let xs: Vec<_> = nash.equilibria.iter().map(|e| &e.x).collect();
        assert!(!xs.contains(&&cf.witnesses_low[0].0));
    }

    #[test]
    fn lemma_branches() {
        let c = lemma_conditions(&g4132(), Player::I).unwrap();
        assert!(!c.ell1, "no strongly dominated row");
        assert_eq!(c.conclusion, LemmaConclusion::Subset);
        let c = lemma_conditions(&g4231(), Player::I).unwrap();
        assert!(c.degenerate_for_leader);
        assert_eq!(c.conclusion, LemmaConclusion::Subset);
        let cf = closed_form_endpoints(&g4231()).unwrap();
        assert_eq!(cf.alpha_low, rat(2));
        assert_eq!(cf.alpha_high, rat(3));
    }

    #[test]
    fn proposition6_cases() {
        assert_eq!(proposition6_case(&conitzer()).unwrap(), Prop6Case::BI);
        assert_eq!(proposition6_case(&g4132()).unwrap(), Prop6Case::BIII);
        assert_eq!(proposition6_case(&g4231()).unwrap(), Prop6Case::A);
    }

    #[test]
    fn follower_comparison_examples() {
        match follower_comparison(&conitzer(), Player::I).unwrap() {
            FollowerVerdict::NotWorse { beta_f, beta_n, v_b, .. } => {
                assert_eq!(beta_f, ratio(1, 2));
                assert_eq!(beta_n, rat(0));
                assert_eq!(v_b, rat(0));
            }
            other => panic!("expected not-worse, got {other:?}"),
        }
        let worse = Game::from_int_rows(&[&[2, -1], &[3, 0]], &[&[3, 1], &[0, 2]]);
        match follower_comparison(&worse, Player::I).unwrap() {
            FollowerVerdict::Worse { beta_f, beta_n, v_b, .. } => {
                assert_eq!(beta_f, ratio(3, 2));
                assert_eq!(beta_n, rat(2));
                assert_eq!(v_b, ratio(3, 2));
            }
            other => panic!("expected worse, got {other:?}"),
        }
        assert_eq!(
            follower_comparison(&g4132(), Player::I).unwrap(),
            FollowerVerdict::NotApplicable
        );
    }

    #[test]
    fn beta_d_against_maximin() {
        // v_B from the closed form equals the matrix-game value by LP.
        let g = Game::from_int_rows(&[&[2, -1], &[3, 0]], &[&[3, 1], &[0, 2]]);
        match follower_comparison(&g, Player::I).unwrap() {
            FollowerVerdict::Worse { v_b, .. } => {
                assert_eq!(v_b, crate::equilibria::maximin(&g, Player::II).value);
            }
            other => panic!("unexpected {other:?}"),
        }
    }
}
