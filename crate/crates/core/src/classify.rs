//! Classifiers for zero-sum generalizations: the sufficient conditions for
//! the maximin, Nash, and commitment values to coincide, weak unilateral
//! competitiveness, almost strict competitiveness, and a-cooperativeness.

use crate::commitment::alpha_high;
use crate::equilibria::{saddle_points, NashSet};
use crate::game::{pure_best_replies, region_polytope, Game, MixedStrategy, Player};
use crate::lp::{solve_lp, LinearProgram, LpOutcome, Relation};
use crate::rational::{dot, RatMatrix, RatVector, Rational};
use num::{One, Signed, Zero};
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub const DEFAULT_WUC_SEED: u64 = 0;

/// The four sufficient conditions of the zero-sum-generalization analysis,
/// evaluated for one leader.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SufficientConditions {
    /// Every best reply is worst: on each region `X(j)`, `alpha(x, j)` never
    /// exceeds `alpha(x, k)` for any column `k`.
    pub cond5: bool,
    /// Some region point secures the highest leader payoff against every
    /// column at once.
    pub cond6: bool,
    /// Every best reply is best: on each region `X(j)`, no column outside
    /// the payoff-equivalence class of `j` beats `alpha(x, j)`.
    pub cond7: bool,
    /// Some witness of the highest leader payoff has a constant payoff
    /// across its pure best replies.
    pub cond_alt: bool,
}

pub fn check_sufficient_conditions(game: &Game, leader: Player) -> SufficientConditions {
    let g = match leader {
        Player::I => game.clone(),
        Player::II => game.transpose_roles(),
    };
    let n = g.n();
    let regions: Vec<_> = (0..n).map(|j| region_polytope(&g, j)).collect();
    let empty: Vec<bool> = regions.iter().map(|p| p.is_empty()).collect();
    let classes: Vec<Vec<usize>> =
        (0..n).map(|j| crate::game::payoff_equivalent_class(&g, j)).collect();

    let pair_max = |j: usize, k: usize, flip: bool| -> Rational {
        // max over X(j) of alpha(x, j) - alpha(x, k), negated when flipped.
        let col_j = g.a().column(j);
        let col_k = g.a().column(k);
        let obj: RatVector = (0..g.m())
            .map(|i| if flip { &col_k[i] - &col_j[i] } else { &col_j[i] - &col_k[i] })
            .collect();
        match solve_lp(&regions[j].maximize(obj)).expect("pairwise region program") {
            LpOutcome::Optimal { value, .. } => value,
            other => unreachable!("nonempty bounded region, got {other:?}"),
        }
    };

    let mut cond5 = true;
    let mut cond7 = true;
    'outer: for j in 0..n {
        if empty[j] {
            continue;
        }
        for k in 0..n {
            if k == j {
                continue;
            }
            if cond5 && pair_max(j, k, false).is_positive() {
                cond5 = false;
            }
            if cond7 && !classes[j].contains(&k) && pair_max(j, k, true).is_positive() {
                cond7 = false;
            }
            if !cond5 && !cond7 {
                break 'outer;
            }
        }
    }

    let (high, witnesses) = alpha_high(&g, Player::I);
    let mut cond6 = false;
    for j in 0..n {
        if empty[j] {
            continue;
        }
        let mut poly = regions[j].clone();
        for k in 0..n {
            poly.require(g.a().column(k), Relation::Ge, high.clone());
        }
        if !poly.is_empty() {
            cond6 = true;
            break;
        }
    }

    let cond_alt = witnesses.iter().any(|w| {
        let brs = pure_best_replies(&g, &w.x);
        let payoffs: Vec<Rational> =
            brs.iter().map(|&k| dot(&g.a().column(k), &w.x.weights)).collect();
        payoffs.windows(2).all(|p| p[0] == p[1])
    });

    SufficientConditions { cond5, cond6, cond7, cond_alt }
}

/// A counterexample to weak unilateral competitiveness, exact and
/// re-verifiable against the definition.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum WucWitness {
    /// A unilateral move by player I that strictly improves both payoffs,
    /// or changes the opponent's payoff while leaving their own equal.
    RowSide { x1: MixedStrategy, x2: MixedStrategy, y: MixedStrategy, equal_case: bool },
    /// The mirror statement for player II.
    ColumnSide { y1: MixedStrategy, y2: MixedStrategy, x: MixedStrategy, equal_case: bool },
}

pub fn verify_wuc_witness(game: &Game, w: &WucWitness) -> bool {
    use crate::game::payoff;
    match w {
        WucWitness::RowSide { x1, x2, y, equal_case } => {
            let a1 = payoff(game, x1, y, Player::I).expect("witness fits");
            let a2 = payoff(game, x2, y, Player::I).expect("witness fits");
            let b1 = payoff(game, x1, y, Player::II).expect("witness fits");
            let b2 = payoff(game, x2, y, Player::II).expect("witness fits");
            if *equal_case {
                a1 == a2 && b1 != b2
            } else {
                a1 > a2 && b1 > b2
            }
        }
        WucWitness::ColumnSide { y1, y2, x, equal_case } => {
            let b1 = payoff(game, x, y1, Player::II).expect("witness fits");
            let b2 = payoff(game, x, y2, Player::II).expect("witness fits");
            let a1 = payoff(game, x, y1, Player::I).expect("witness fits");
            let a2 = payoff(game, x, y2, Player::I).expect("witness fits");
            if *equal_case {
                b1 == b2 && a1 != a2
            } else {
                b1 > b2 && a1 > a2
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum WucVerdict {
    Yes { method: String },
    No { witness: Box<WucWitness> },
    /// The structural analysis could not be completed. Not produced by the
    /// current decision procedure; kept for forward compatibility of the
    /// report format.
    Unknown { note: String },
}

/// Decides weak unilateral competitiveness exactly.
///
/// Refutations are searched first over all pure triples and a seeded
/// sample of mixed triples. The verdict itself comes from a structural
/// decision: for each side, the centered payoff directions must be
/// pointwise antiparallel. Pointwise parallelism of the two linear
/// families is equivalent to the vanishing of all two-by-two minors at
/// the simplex vertices and edge midpoints; given parallelism, the family
/// is either a constant multiple (sign checked directly) or shares a
/// fixed direction, where the sign condition becomes the nonpositivity of
/// a product of two linear forms on the simplex, certified by slack
/// programs.
pub fn classify_wuc(game: &Game, seed: u64) -> WucVerdict {
    if let Some(w) = pure_triple_refutation(game) {
        return WucVerdict::No { witness: Box::new(w) };
    }
    if let Some(w) = sampled_refutation(game, seed) {
        return WucVerdict::No { witness: Box::new(w) };
    }
    let mut methods = Vec::new();
    for side in [Player::I, Player::II] {
        let g = match side {
            Player::I => game.clone(),
            Player::II => game.transpose_roles(),
        };
        match decide_side(&g) {
            SideOutcome::Holds(method) => methods.push(method),
            SideOutcome::Fails(w) => {
                let w = match side {
                    Player::I => w,
                    Player::II => mirror_witness(w),
                };
                debug_assert!(verify_wuc_witness(game, &w));
                return WucVerdict::No { witness: Box::new(w) };
            }
            SideOutcome::Undecided(note) => return WucVerdict::Unknown { note },
        }
    }
    WucVerdict::Yes { method: methods.join("; ") }
}

fn mirror_witness(w: WucWitness) -> WucWitness {
    // A witness found on the transposed game maps x-objects to y-objects.
    match w {
        WucWitness::RowSide { x1, x2, y, equal_case } => WucWitness::ColumnSide {
            y1: MixedStrategy { owner: Player::II, weights: x1.weights },
            y2: MixedStrategy { owner: Player::II, weights: x2.weights },
            x: MixedStrategy { owner: Player::I, weights: y.weights },
            equal_case,
        },
        other => other,
    }
}

enum SideOutcome {
    Holds(String),
    Fails(WucWitness),
    Undecided(String),
}

/// Decides the row-side implications of the definition for game `g`.
fn decide_side(g: &Game) -> SideOutcome {
    let (m, n) = (g.m(), g.n());
    if m < 2 {
        return SideOutcome::Holds("single row: vacuous".into());
    }
    let center = |mat: &RatMatrix| -> RatMatrix {
        let mut out = RatMatrix::zero(m, n);
        for j in 0..n {
            let col = mat.column(j);
            let mean: Rational = col.iter().sum::<Rational>() / crate::rational::rat(m as i64);
            for i in 0..m {
                out.set(i, j, &col[i] - &mean);
            }
        }
        out
    };
    let u = center(g.a());
    let w = center(g.b());
    let zero_matrix = |mat: &RatMatrix| (0..n).all(|j| mat.column(j).iter().all(Rational::is_zero));
    if zero_matrix(&w) {
        return SideOutcome::Holds("opponent payoff invariant in the mover's direction".into());
    }
    if zero_matrix(&u) {
        // Own payoff never changes but the opponent's does: the equality
        // implication fails at a pure column with a nonconstant B column.
        let j = (0..n).find(|&j| !w.column(j).iter().all(Rational::is_zero)).unwrap();
        let col = w.column(j);
        let (hi, lo) = pick_unequal(&col);
        return SideOutcome::Fails(WucWitness::RowSide {
            x1: MixedStrategy::pure(Player::I, hi, m),
            x2: MixedStrategy::pure(Player::I, lo, m),
            y: MixedStrategy::pure(Player::II, j, n),
            equal_case: true,
        });
    }

    // Probe points: vertices and edge midpoints of the opponent simplex.
    let mut probes: Vec<RatVector> = Vec::new();
    for j in 0..n {
        let mut y = vec![Rational::zero(); n];
        y[j] = Rational::one();
        probes.push(y);
    }
    let half = Rational::new(1.into(), 2.into());
    for j in 0..n {
        for l in j + 1..n {
            let mut y = vec![Rational::zero(); n];
            y[j] = half.clone();
            y[l] = half.clone();
            probes.push(y);
        }
    }
    for y in &probes {
        let uy = u.right_mul(y);
        let wy = w.right_mul(y);
        let u_zero = uy.iter().all(Rational::is_zero);
        let w_zero = wy.iter().all(Rational::is_zero);
        if w_zero {
            continue;
        }
        if u_zero {
            return SideOutcome::Fails(equal_case_witness(g, y, &wy));
        }
        match parallel_ratio(&uy, &wy) {
            Parallelism::Ratio(lambda) => {
                if lambda.is_positive() {
                    let delta = direction_with_positive(&uy);
                    return SideOutcome::Fails(strict_case_witness(g, y, delta));
                }
            }
            Parallelism::Independent => {
                let delta = gram_direction(&uy, &wy);
                return SideOutcome::Fails(strict_case_witness(g, y, delta));
            }
        }
    }

    // All probes antiparallel: the minors vanish identically, so the
    // families are pointwise parallel everywhere. Classify the structure.
    if let Some((e, f)) = rank_one_decomposition(&u) {
        let Some(gvec) = columns_along(&w, &e) else {
            return SideOutcome::Undecided(
                "parallel probes with an unrecognized family structure".into(),
            );
        };
        // Sign condition: f(y) * g(y) <= 0 on the simplex, and f(y) = 0
        // must force g(y) = 0.
        if let Some(y) = common_sign_point(&f, &gvec, n, false) {
            let delta = direction_with_positive(&scale_vec(&e, &dot(&f, &y)));
            return SideOutcome::Fails(strict_case_witness(g, &y, delta));
        }
        if let Some(y) = common_sign_point(&f, &gvec, n, true) {
            let delta = direction_with_positive(&scale_vec(&e, &-dot(&f, &y)));
            return SideOutcome::Fails(strict_case_witness(g, &y, delta));
        }
        if let Some(y) = zero_f_nonzero_g(&f, &gvec, n) {
            let wy = w.right_mul(&y);
            return SideOutcome::Fails(equal_case_witness(g, &y, &wy));
        }
        SideOutcome::Holds("shared direction with certified nonpositive sign".into())
    } else {
        // Rank at least two: pointwise parallelism forces a constant ratio.
        let (i0, j0) = first_nonzero(&u).expect("nonzero matrix");
        let lambda = w.at(i0, j0) / u.at(i0, j0);
        for i in 0..m {
            for j in 0..n {
                if w.at(i, j) != &(&lambda * u.at(i, j)) {
                    return SideOutcome::Undecided(
                        "parallel probes without a constant ratio".into(),
                    );
                }
            }
        }
        debug_assert!(!lambda.is_positive(), "positive ratio is caught at a probe");
        SideOutcome::Holds("opponent payoff direction is a nonpositive multiple".into())
    }
}

enum Parallelism {
    Ratio(Rational),
    Independent,
}

fn parallel_ratio(u: &[Rational], w: &[Rational]) -> Parallelism {
    // u is nonzero here.
    let i0 = u.iter().position(|v| !v.is_zero()).expect("nonzero vector");
    let lambda = &w[i0] / &u[i0];
    for i in 0..u.len() {
        if &w[i] != &(&lambda * &u[i]) {
            return Parallelism::Independent;
        }
    }
    Parallelism::Ratio(lambda)
}

/// A zero-sum direction with strictly positive inner product against `v`.
fn direction_with_positive(v: &[Rational]) -> RatVector {
    let hi = (0..v.len()).max_by(|&a, &b| v[a].cmp(&v[b])).unwrap();
    let lo = (0..v.len()).min_by(|&a, &b| v[a].cmp(&v[b])).unwrap();
    debug_assert!(v[hi] > v[lo], "a nonzero centered vector has unequal entries");
    let mut d = vec![Rational::zero(); v.len()];
    d[hi] = Rational::one();
    d[lo] = -Rational::one();
    d
}

/// A zero-sum direction with strictly positive inner product against both
/// independent vectors, from the inverse Gram system.
fn gram_direction(u: &[Rational], w: &[Rational]) -> RatVector {
    let guu = dot(u, u);
    let guw = dot(u, w);
    let gww = dot(w, w);
    let det = &guu * &gww - &guw * &guw;
    debug_assert!(det.is_positive(), "independent vectors have a positive Gram determinant");
    let a = (&gww - &guw) / &det;
    let b = (&guu - &guw) / &det;
    let d: RatVector = (0..u.len()).map(|i| &a * &u[i] + &b * &w[i]).collect();
    debug_assert!(dot(&d, u).is_one() && dot(&d, w).is_one());
    d
}

/// Splits a zero-sum direction into two simplex points whose difference is
/// proportional to it.
fn split_direction(delta: &[Rational]) -> (MixedStrategy, MixedStrategy) {
    let m = delta.len();
    let mut pos = vec![Rational::zero(); m];
    let mut neg = vec![Rational::zero(); m];
    for i in 0..m {
        if delta[i].is_positive() {
            pos[i] = delta[i].clone();
        } else if delta[i].is_negative() {
            neg[i] = -delta[i].clone();
        }
    }
    let total: Rational = pos.iter().sum();
    debug_assert!(total.is_positive());
    debug_assert_eq!(total, neg.iter().sum::<Rational>());
    let x1: RatVector = pos.into_iter().map(|v| v / &total).collect();
    let x2: RatVector = neg.into_iter().map(|v| v / &total).collect();
    (
        MixedStrategy { owner: Player::I, weights: x1 },
        MixedStrategy { owner: Player::I, weights: x2 },
    )
}

fn strict_case_witness(g: &Game, y: &[Rational], delta: RatVector) -> WucWitness {
    let (x1, x2) = split_direction(&delta);
    let y = MixedStrategy { owner: Player::II, weights: y.to_vec() };
    let w = WucWitness::RowSide { x1, x2, y, equal_case: false };
    debug_assert!(verify_wuc_witness(g, &w));
    w
}

fn equal_case_witness(g: &Game, y: &[Rational], wy: &[Rational]) -> WucWitness {
    let delta = direction_with_positive(wy);
    let (x1, x2) = split_direction(&delta);
    let y = MixedStrategy { owner: Player::II, weights: y.to_vec() };
    let w = WucWitness::RowSide { x1, x2, y, equal_case: true };
    debug_assert!(verify_wuc_witness(g, &w));
    w
}

fn pick_unequal(col: &[Rational]) -> (usize, usize) {
    let hi = (0..col.len()).max_by(|&a, &b| col[a].cmp(&col[b])).unwrap();
    let lo = (0..col.len()).min_by(|&a, &b| col[a].cmp(&col[b])).unwrap();
    (hi, lo)
}

fn first_nonzero(mat: &RatMatrix) -> Option<(usize, usize)> {
    for i in 0..mat.rows() {
        for j in 0..mat.cols() {
            if !mat.at(i, j).is_zero() {
                return Some((i, j));
            }
        }
    }
    None
}

/// Writes `mat = e f^T` when the matrix has rank one; `e` is the first
/// nonzero column.
fn rank_one_decomposition(mat: &RatMatrix) -> Option<(RatVector, RatVector)> {
    let (i0, j0) = first_nonzero(mat)?;
    let e = mat.column(j0);
    let mut f = vec![Rational::zero(); mat.cols()];
    for j in 0..mat.cols() {
        let fj = mat.at(i0, j) / &e[i0];
        for i in 0..mat.rows() {
            if mat.at(i, j) != &(&fj * &e[i]) {
                return None;
            }
        }
        f[j] = fj;
    }
    Some((e, f))
}

/// Expresses every column of `mat` as a multiple of `e`, when possible.
fn columns_along(mat: &RatMatrix, e: &[Rational]) -> Option<RatVector> {
    let i0 = e.iter().position(|v| !v.is_zero())?;
    let mut g = vec![Rational::zero(); mat.cols()];
    for j in 0..mat.cols() {
        let gj = mat.at(i0, j) / &e[i0];
        for i in 0..mat.rows() {
            if mat.at(i, j) != &(&gj * &e[i]) {
                return None;
            }
        }
        g[j] = gj;
    }
    Some(g)
}

fn scale_vec(v: &[Rational], s: &Rational) -> RatVector {
    v.iter().map(|x| x * s).collect()
}

/// A simplex point where both linear forms are strictly positive (or, when
/// `negate`, strictly negative), if one exists. Decided by a slack program.
fn common_sign_point(f: &[Rational], g: &[Rational], n: usize, negate: bool) -> Option<RatVector> {
    let sign = if negate { -Rational::one() } else { Rational::one() };
    let mut obj = vec![Rational::zero(); n + 1];
    obj[n] = Rational::one();
    let mut lp = LinearProgram::maximize(obj);
    let mut simplex = vec![Rational::one(); n + 1];
    simplex[n] = Rational::zero();
    lp.constrain(simplex, Relation::Eq, Rational::one());
    for i in 0..n {
        let mut row = vec![Rational::zero(); n + 1];
        row[i] = Rational::one();
        lp.constrain(row, Relation::Ge, Rational::zero());
    }
    for form in [f, g] {
        let mut row: RatVector = form.iter().map(|v| v * &sign).collect();
        row.push(-Rational::one());
        lp.constrain(row, Relation::Ge, Rational::zero());
    }
    match solve_lp(&lp).expect("sign program") {
        LpOutcome::Optimal { value, vertex } if value.is_positive() => Some(vertex[..n].to_vec()),
        _ => None,
    }
}

/// A simplex point with `f(y) = 0` but `g(y) != 0`, if one exists.
fn zero_f_nonzero_g(f: &[Rational], g: &[Rational], n: usize) -> Option<RatVector> {
    for maximize_g in [true, false] {
        let mut obj: RatVector = g.to_vec();
        if !maximize_g {
            obj = obj.iter().map(|v| -v).collect();
        }
        let mut lp = LinearProgram::maximize(obj);
        lp.constrain(f.to_vec(), Relation::Eq, Rational::zero());
        lp.constrain(vec![Rational::one(); n], Relation::Eq, Rational::one());
        for i in 0..n {
            let mut row = vec![Rational::zero(); n];
            row[i] = Rational::one();
            lp.constrain(row, Relation::Ge, Rational::zero());
        }
        match solve_lp(&lp).expect("kernel program") {
            LpOutcome::Optimal { value, vertex } if value.is_positive() => {
                return Some(vertex);
            }
            _ => {}
        }
    }
    None
}

fn pure_triple_refutation(game: &Game) -> Option<WucWitness> {
    let (m, n) = (game.m(), game.n());
    for j in 0..n {
        for i1 in 0..m {
            for i2 in 0..m {
                if i1 == i2 {
                    continue;
                }
                let a1 = game.a().at(i1, j);
                let a2 = game.a().at(i2, j);
                let b1 = game.b().at(i1, j);
                let b2 = game.b().at(i2, j);
                let equal_case = if a1 > a2 && b1 > b2 {
                    false
                } else if a1 == a2 && b1 != b2 {
                    true
                } else {
                    continue;
                };
                return Some(WucWitness::RowSide {
                    x1: MixedStrategy::pure(Player::I, i1, m),
                    x2: MixedStrategy::pure(Player::I, i2, m),
                    y: MixedStrategy::pure(Player::II, j, n),
                    equal_case,
                });
            }
        }
    }
    for i in 0..m {
        for j1 in 0..n {
            for j2 in 0..n {
                if j1 == j2 {
                    continue;
                }
                let b1 = game.b().at(i, j1);
                let b2 = game.b().at(i, j2);
                let a1 = game.a().at(i, j1);
                let a2 = game.a().at(i, j2);
                let equal_case = if b1 > b2 && a1 > a2 {
                    false
                } else if b1 == b2 && a1 != a2 {
                    true
                } else {
                    continue;
                };
                return Some(WucWitness::ColumnSide {
                    y1: MixedStrategy::pure(Player::II, j1, n),
                    y2: MixedStrategy::pure(Player::II, j2, n),
                    x: MixedStrategy::pure(Player::I, i, m),
                    equal_case,
                });
            }
        }
    }
    None
}

fn random_mixed(rng: &mut ChaCha8Rng, owner: Player, len: usize) -> MixedStrategy {
    loop {
        let raw: Vec<i64> = (0..len).map(|_| rng.gen_range(0..7)).collect();
        if raw.iter().all(|&v| v == 0) {
            continue;
        }
        let total: i64 = raw.iter().sum();
        let weights: RatVector =
            raw.into_iter().map(|v| Rational::new(v.into(), total.into())).collect();
        return MixedStrategy { owner, weights };
    }
}

fn sampled_refutation(game: &Game, seed: u64) -> Option<WucWitness> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let (m, n) = (game.m(), game.n());
    for _ in 0..200 {
        let x1 = random_mixed(&mut rng, Player::I, m);
        let x2 = random_mixed(&mut rng, Player::I, m);
        let y = random_mixed(&mut rng, Player::II, n);
        for equal_case in [false, true] {
            let w = WucWitness::RowSide {
                x1: x1.clone(),
                x2: x2.clone(),
                y: y.clone(),
                equal_case,
            };
            if verify_wuc_witness(game, &w) {
                return Some(w);
            }
        }
        let y1 = random_mixed(&mut rng, Player::II, n);
        let y2 = random_mixed(&mut rng, Player::II, n);
        let x = random_mixed(&mut rng, Player::I, m);
        for equal_case in [false, true] {
            let w = WucWitness::ColumnSide {
                y1: y1.clone(),
                y2: y2.clone(),
                x: x.clone(),
                equal_case,
            };
            if verify_wuc_witness(game, &w) {
                return Some(w);
            }
        }
    }
    None
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum AscVerdict {
    Yes,
    No,
    /// Equilibrium enumeration was incomplete; the payoff-set comparison
    /// cannot be certified.
    Unchecked,
}

/// Almost strictly competitive: saddle points exist and the Nash and
/// twisted payoff sets coincide exactly.
pub fn classify_asc(game: &Game, ne: &NashSet, te: &NashSet) -> AscVerdict {
    if !ne.complete || !te.complete {
        return AscVerdict::Unchecked;
    }
    let saddles = saddle_points(game, ne, te);
    if !saddles.is_empty() && ne.payoff_pairs() == te.payoff_pairs() {
        AscVerdict::Yes
    } else {
        AscVerdict::No
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum AcoopVerdict {
    /// Some twisted equilibrium is Pareto-optimal (hull certificate).
    Yes { payoff: (Rational, Rational) },
    /// Every twisted equilibrium is dominated by an achievable pure profile.
    No,
    Unknown { note: String },
}

/// A-cooperative: at least one Pareto-optimal twisted equilibrium.
///
/// Each twisted payoff pair gets one of two certificates: a hull program
/// showing no convex combination of pure payoff pairs dominates it
/// (Pareto-optimal, since every achievable pair lies in that hull), or a
/// dominating pure profile (not Pareto-optimal, since pure profiles are
/// achievable). Pairs resolved by neither leave the verdict unknown.
pub fn classify_acoop(game: &Game, te: &NashSet) -> AcoopVerdict {
    if te.equilibria.is_empty() {
        return AcoopVerdict::Unknown {
            note: "no twisted equilibria enumerated".into(),
        };
    }
    let (m, n) = (game.m(), game.n());
    let mut any_unresolved = false;
    for (u, v) in te.payoff_pairs() {
        // Hull program: maximize total payoff above (u, v).
        let mut obj: RatVector = Vec::with_capacity(m * n);
        let mut row_a: RatVector = Vec::with_capacity(m * n);
        let mut row_b: RatVector = Vec::with_capacity(m * n);
        for i in 0..m {
            for j in 0..n {
                let a = game.a().at(i, j).clone();
                let b = game.b().at(i, j).clone();
                obj.push(&a + &b);
                row_a.push(a);
                row_b.push(b);
            }
        }
        let mut lp = LinearProgram::maximize(obj);
        lp.constrain(row_a, Relation::Ge, u.clone());
        lp.constrain(row_b, Relation::Ge, v.clone());
        lp.constrain(vec![Rational::one(); m * n], Relation::Eq, Rational::one());
        for t in 0..m * n {
            let mut row = vec![Rational::zero(); m * n];
            row[t] = Rational::one();
            lp.constrain(row, Relation::Ge, Rational::zero());
        }
        match solve_lp(&lp).expect("hull program") {
            LpOutcome::Optimal { value, .. } => {
                let total = &u + &v;
                if value == total {
                    return AcoopVerdict::Yes { payoff: (u, v) };
                }
                // Dominated within the hull; certify with a pure profile if
                // possible, otherwise the pair stays unresolved.
                let pure_dominated = (0..m).any(|i| {
                    (0..n).any(|j| {
                        let a = game.a().at(i, j);
                        let b = game.b().at(i, j);
                        a >= &u && b >= &v && (a > &u || b > &v)
                    })
                });
                if !pure_dominated {
                    any_unresolved = true;
                }
            }
            other => unreachable!("hull program is feasible and bounded, got {other:?}"),
        }
    }
    if any_unresolved {
        AcoopVerdict::Unknown {
            note: "some twisted equilibrium is hull-dominated but not by a pure profile".into(),
        }
    } else if te.complete {
        AcoopVerdict::No
    } else {
        AcoopVerdict::Unknown {
            note: "all listed twisted equilibria are dominated but the enumeration is incomplete"
                .into(),
        }
    }
}

/// Combined classification of a game against the zero-sum generalizations.
#[derive(Debug, Clone)]
pub struct ClassificationReport {
    pub conditions_i: SufficientConditions,
    pub conditions_ii: SufficientConditions,
    pub wuc: WucVerdict,
    pub asc: AscVerdict,
    pub acoop: AcoopVerdict,
    pub notes: Vec<String>,
}

pub fn classify(game: &Game, enum_bound: usize, seed: u64) -> ClassificationReport {
    let conditions_i = check_sufficient_conditions(game, Player::I);
    let conditions_ii = check_sufficient_conditions(game, Player::II);
    let wuc = classify_wuc(game, seed);
    let ne = crate::equilibria::nash_support_enumeration(game, enum_bound);
    let te = crate::equilibria::twisted_equilibria(game, enum_bound);
    let asc = classify_asc(game, &ne, &te);
    let acoop = classify_acoop(game, &te);
    let mut notes = Vec::new();
    if let WucVerdict::Yes { method } = &wuc {
        notes.push(format!("wuc certified structurally: {method}"));
    }
    if let Some(n) = &ne.note {
        notes.push(format!("nash enumeration: {n}"));
    }
    if let Some(n) = &te.note {
        notes.push(format!("twisted enumeration: {n}"));
    }
    ClassificationReport { conditions_i, conditions_ii, wuc, asc, acoop, notes }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::equilibria::{nash_support_enumeration, twisted_equilibria};
    use crate::game::DEFAULT_ENUM_BOUND;
    use crate::rational::rat;

    fn zero_sum(a: &[&[i64]]) -> Game {
        let neg: Vec<Vec<i64>> = a.iter().map(|r| r.iter().map(|&v| -v).collect()).collect();
        Game::from_int_rows(a, &neg.iter().map(|r| r.as_slice()).collect::<Vec<_>>())
    }

    #[test]
    fn section_41_example_relax_but_not_suff() {
        let g = Game::from_int_rows(&[&[1, 0], &[-2, -10]], &[&[0, 1], &[1, 0]]);
        let c = check_sufficient_conditions(&g, Player::I);
        assert!(c.cond6);
        assert!(!c.cond5);
    }

    #[test]
    fn section_43_degenerate_example_satisfies_cond7() {
        let g = Game::from_int_rows(&[&[-1, 2], &[-2, 0]], &[&[1, 1], &[1, 1]]);
        let c = check_sufficient_conditions(&g, Player::I);
        assert!(c.cond7, "payoff equivalent columns are exempt");
    }

    #[test]
    fn section_43_2x3_example_satisfies_the_alternative_condition() {
        let g = Game::from_int_rows(&[&[3, 0, 0], &[0, 2, 4]], &[&[3, 0, -1], &[0, 2, -1]]);
        let c = check_sufficient_conditions(&g, Player::I);
        assert!(c.cond_alt);
        let (high, _) = alpha_high(&g, Player::I);
        assert_eq!(high, rat(3));
        let (low, _) = crate::commitment::alpha_low(&g, Player::I);
        assert_eq!(low, rat(3));
    }

    #[test]
    fn zero_sum_games_are_wuc() {
        let g = zero_sum(&[&[1, -1], &[-1, 1]]);
        assert!(matches!(classify_wuc(&g, 0), WucVerdict::Yes { .. }));
        let g = zero_sum(&[&[3, 0, 2], &[1, 4, -2], &[0, 0, 5]]);
        assert!(matches!(classify_wuc(&g, 0), WucVerdict::Yes { .. }));
    }

    #[test]
    fn example_4132_is_not_wuc() {
        let g = Game::from_int_rows(&[&[4, 1], &[3, 2]], &[&[1, 2], &[4, 3]]);
        match classify_wuc(&g, 0) {
            WucVerdict::No { witness } => assert!(verify_wuc_witness(&g, &witness)),
            other => panic!("expected refutation, got {other:?}"),
        }
    }

    // A near-miss family: the payoff directions are parallel (m = 2) and
    // the sampled points all look antiparallel, but the two linear forms
    // share a strict sign on an interior interval. The exact certificate
    // must refute it.
    #[test]
    fn interior_sign_overlap_is_refuted() {
        let g = Game::from_int_rows(&[&[1, 0], &[0, 4]], &[&[0, 3], &[7, 0]]);
        match classify_wuc(&g, 0) {
            WucVerdict::No { witness } => assert!(verify_wuc_witness(&g, &witness)),
            other => panic!("expected refutation, got {other:?}"),
        }
    }

    #[test]
    fn constant_negative_multiple_is_wuc() {
        // B = -2A on the centered directions (here exactly B = -2A + 1).
        let g = Game::from_int_rows(&[&[1, 2], &[3, 0]], &[&[-1, -3], &[-5, 1]]);
        assert!(matches!(classify_wuc(&g, 0), WucVerdict::Yes { .. }));
    }

    #[test]
    fn asc_examples() {
        let g = zero_sum(&[&[2, -1], &[0, 3]]);
        let ne = nash_support_enumeration(&g, DEFAULT_ENUM_BOUND);
        let te = twisted_equilibria(&g, DEFAULT_ENUM_BOUND);
        assert_eq!(classify_asc(&g, &ne, &te), AscVerdict::Yes);
        // Conitzer's example is strategically zero-sum and asc.
        let g = Game::from_int_rows(&[&[2, -1], &[3, 0]], &[&[2, 1], &[-1, 0]]);
        let ne = nash_support_enumeration(&g, DEFAULT_ENUM_BOUND);
        let te = twisted_equilibria(&g, DEFAULT_ENUM_BOUND);
        assert_eq!(classify_asc(&g, &ne, &te), AscVerdict::Yes);
        // 4132 has different Nash and twisted payoffs.
        let g = Game::from_int_rows(&[&[4, 1], &[3, 2]], &[&[1, 2], &[4, 3]]);
        let ne = nash_support_enumeration(&g, DEFAULT_ENUM_BOUND);
        let te = twisted_equilibria(&g, DEFAULT_ENUM_BOUND);
        assert_eq!(classify_asc(&g, &ne, &te), AscVerdict::No);
    }

    #[test]
    fn acoop_examples() {
        let g = zero_sum(&[&[1, -1], &[-1, 1]]);
        let te = twisted_equilibria(&g, DEFAULT_ENUM_BOUND);
        assert!(matches!(classify_acoop(&g, &te), AcoopVerdict::Yes { .. }));
        // Conitzer: the unique twisted equilibrium payoff (0, 0) is
        // dominated by the pure profile (2, 1).
        let g = Game::from_int_rows(&[&[2, -1], &[3, 0]], &[&[2, 1], &[-1, 0]]);
        let te = twisted_equilibria(&g, DEFAULT_ENUM_BOUND);
        assert_eq!(classify_acoop(&g, &te), AcoopVerdict::No);
    }

    #[test]
    fn wuc_yes_implies_value_equalities() {
        // Proposition check on a seeded random sample of zero-sum games.
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(5);
        for _ in 0..25 {
            let m = rng.gen_range(2..4usize);
            let n = rng.gen_range(2..4usize);
            let av: Vec<Vec<i64>> =
                (0..m).map(|_| (0..n).map(|_| rng.gen_range(-9..10)).collect()).collect();
            let g = zero_sum(&av.iter().map(|r| r.as_slice()).collect::<Vec<_>>());
            assert!(matches!(classify_wuc(&g, 0), WucVerdict::Yes { .. }));
            let va = crate::equilibria::maximin(&g, Player::I).value;
            let (low, _) = crate::commitment::alpha_low(&g, Player::I);
            let (high, _) = alpha_high(&g, Player::I);
            assert_eq!(va, low);
            assert_eq!(low, high);
            let vb = crate::equilibria::maximin(&g, Player::II).value;
            let (lowb, _) = crate::commitment::alpha_low(&g, Player::II);
            let (highb, _) = alpha_high(&g, Player::II);
            assert_eq!(vb, lowb);
            assert_eq!(lowb, highb);
        }
    }
}
