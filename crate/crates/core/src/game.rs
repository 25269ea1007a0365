//! The bimatrix game model and its best-reply geometry.
//!
//! A game holds the two payoff matrices exactly; everything derived here —
//! best replies, best-reply regions `X(j)`, payoff-equivalence classes
//! `E(j)`, the inducible set `D`, dominance tests, and the degeneracy
//! diagnostic — is computed in exact rational arithmetic.

use crate::lp::{
    relative_interior_witness, solve_lp, LinearProgram, LpOutcome, Relation, SimplexPolytope,
};
use crate::rational::{parse_rational, rat, solve_square_system, RatMatrix, RatVector, Rational};
use num::{One, Signed, Zero};
use std::fmt;
use thiserror::Error;

/// Degeneracy checks and support enumeration are exponential in the game
/// size; above this many pure strategies (m + n) they report `Unchecked`.
pub const DEFAULT_ENUM_BOUND: usize = 16;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum Player {
    I,
    II,
}

impl Player {
    pub fn opponent(self) -> Player {
        match self {
            Player::I => Player::II,
            Player::II => Player::I,
        }
    }
}

impl fmt::Display for Player {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Player::I => write!(f, "I"),
            Player::II => write!(f, "II"),
        }
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GameError {
    #[error("payoff matrices differ in shape: A is {a_rows}x{a_cols}, B is {b_rows}x{b_cols}")]
    ShapeMismatch { a_rows: usize, a_cols: usize, b_rows: usize, b_cols: usize },
    #[error("payoff matrices must be nonempty")]
    Empty,
    #[error("{0}")]
    Parse(String),
    #[error("mixed strategy for player {owner}: {reason}")]
    BadStrategy { owner: Player, reason: String },
    #[error("operation requires a 2x2 game, got {rows}x{cols}")]
    NotTwoByTwo { rows: usize, cols: usize },
}

/// An `m x n` bimatrix game. Row player I has payoff matrix `A`, column
/// player II has `B`. Pure strategies are indexed from zero internally;
/// labels (default `1..m` and `m+1..m+n`) are only used for display.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Game {
    a: RatMatrix,
    b: RatMatrix,
    row_labels: Vec<String>,
    col_labels: Vec<String>,
    pub name: Option<String>,
}

impl Game {
    pub fn new(a: RatMatrix, b: RatMatrix) -> Result<Game, GameError> {
        if a.rows() != b.rows() || a.cols() != b.cols() {
            return Err(GameError::ShapeMismatch {
                a_rows: a.rows(),
                a_cols: a.cols(),
                b_rows: b.rows(),
                b_cols: b.cols(),
            });
        }
        if a.rows() == 0 || a.cols() == 0 {
            return Err(GameError::Empty);
        }
        let (m, n) = (a.rows(), a.cols());
        Ok(Game {
            a,
            b,
            row_labels: (1..=m).map(|i| i.to_string()).collect(),
            col_labels: (m + 1..=m + n).map(|j| j.to_string()).collect(),
            name: None,
        })
    }

    pub fn from_int_rows(a: &[&[i64]], b: &[&[i64]]) -> Game {
        Game::new(RatMatrix::from_int_rows(a), RatMatrix::from_int_rows(b))
            .expect("well-formed test game")
    }

    pub fn with_labels(
        mut self,
        rows: Vec<String>,
        cols: Vec<String>,
    ) -> Result<Game, GameError> {
        if rows.len() != self.m() || cols.len() != self.n() {
            return Err(GameError::Parse(format!(
                "label arrays must have lengths {} and {}",
                self.m(),
                self.n()
            )));
        }
        self.row_labels = rows;
        self.col_labels = cols;
        Ok(self)
    }

    pub fn m(&self) -> usize {
        self.a.rows()
    }

    pub fn n(&self) -> usize {
        self.a.cols()
    }

    pub fn a(&self) -> &RatMatrix {
        &self.a
    }

    pub fn b(&self) -> &RatMatrix {
        &self.b
    }

    pub fn row_label(&self, i: usize) -> &str {
        &self.row_labels[i]
    }

    pub fn col_label(&self, j: usize) -> &str {
        &self.col_labels[j]
    }

    pub fn row_labels(&self) -> &[String] {
        &self.row_labels
    }

    pub fn col_labels(&self) -> &[String] {
        &self.col_labels
    }

    /// The game with the players' roles reversed: payoffs `(B^T, A^T)`.
    /// Solving it with player I as leader solves the original game with
    /// player II as leader.
    pub fn transpose_roles(&self) -> Game {
        Game {
            a: self.b.transpose(),
            b: self.a.transpose(),
            row_labels: self.col_labels.clone(),
            col_labels: self.row_labels.clone(),
            name: self.name.clone(),
        }
    }

    /// The twisted game: payoffs `(-B, -A)` on the same strategy spaces.
    pub fn twisted(&self) -> Game {
        Game {
            a: self.b.map(|v| -v),
            b: self.a.map(|v| -v),
            row_labels: self.row_labels.clone(),
            col_labels: self.col_labels.clone(),
            name: self.name.clone(),
        }
    }

    /// Payoff matrix of `who` (player I's `A`, player II's `B`).
    pub fn matrix_of(&self, who: Player) -> &RatMatrix {
        match who {
            Player::I => &self.a,
            Player::II => &self.b,
        }
    }

    /// beta(x, .) for every column of player II.
    pub fn column_payoffs(&self, x: &MixedStrategy) -> RatVector {
        debug_assert_eq!(x.owner, Player::I);
        self.b.left_mul(&x.weights)
    }

    /// alpha(., y) for every row of player I.
    pub fn row_payoffs(&self, y: &MixedStrategy) -> RatVector {
        debug_assert_eq!(y.owner, Player::II);
        self.a.right_mul(&y.weights)
    }
}

/// A validated mixed strategy: nonnegative weights summing exactly to one.
/// Construction never renormalizes; an inexact sum is an input bug.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct MixedStrategy {
    pub owner: Player,
    pub weights: RatVector,
}

impl MixedStrategy {
    pub fn new(owner: Player, weights: RatVector) -> Result<MixedStrategy, GameError> {
        if weights.is_empty() {
            return Err(GameError::BadStrategy { owner, reason: "no weights".into() });
        }
        if weights.iter().any(Rational::is_negative) {
            return Err(GameError::BadStrategy { owner, reason: "negative weight".into() });
        }
        let sum: Rational = weights.iter().sum();
        if !sum.is_one() {
            return Err(GameError::BadStrategy {
                owner,
                reason: format!("weights sum to {sum}, expected exactly 1"),
            });
        }
        Ok(MixedStrategy { owner, weights })
    }

    pub fn pure(owner: Player, index: usize, len: usize) -> MixedStrategy {
        let mut weights = vec![Rational::zero(); len];
        weights[index] = Rational::one();
        MixedStrategy { owner, weights }
    }

    pub fn uniform(owner: Player, len: usize) -> MixedStrategy {
        let w = Rational::new(1.into(), (len as i64).into());
        MixedStrategy { owner, weights: vec![w; len] }
    }

    pub fn support(&self) -> Vec<usize> {
        (0..self.weights.len()).filter(|&i| !self.weights[i].is_zero()).collect()
    }

    /// The pure strategy index, if the support is a singleton.
    pub fn as_pure(&self) -> Option<usize> {
        let s = self.support();
        (s.len() == 1).then(|| s[0])
    }
}

/// Exact bilinear payoff `x^T A y` (player I) or `x^T B y` (player II).
pub fn payoff(
    game: &Game,
    x: &MixedStrategy,
    y: &MixedStrategy,
    who: Player,
) -> Result<Rational, GameError> {
    if x.owner != Player::I {
        return Err(GameError::BadStrategy { owner: x.owner, reason: "expected player I".into() });
    }
    if y.owner != Player::II {
        return Err(GameError::BadStrategy { owner: y.owner, reason: "expected player II".into() });
    }
    if x.weights.len() != game.m() || y.weights.len() != game.n() {
        return Err(GameError::BadStrategy {
            owner: who,
            reason: format!(
                "strategy lengths {}x{} do not match the {}x{} game",
                x.weights.len(),
                y.weights.len(),
                game.m(),
                game.n()
            ),
        });
    }
    Ok(game.matrix_of(who).bilinear(&x.weights, &y.weights))
}

/// All pure strategies of the opponent that attain the exact maximum
/// payoff against the given mixed strategy.
pub fn pure_best_replies(game: &Game, against: &MixedStrategy) -> Vec<usize> {
    let payoffs = match against.owner {
        Player::I => game.column_payoffs(against),
        Player::II => game.row_payoffs(against),
    };
    argmax_set(&payoffs)
}

pub(crate) fn argmax_set(values: &[Rational]) -> Vec<usize> {
    let best = values.iter().max().expect("nonempty payoff vector");
    (0..values.len()).filter(|&i| &values[i] == best).collect()
}

/// Best reply region `X(j)` of a pure strategy of player II, as an
/// H-polytope over player I's simplex, together with its interior flag
/// and (for small games) its vertex list `C(j)`.
#[derive(Debug, Clone)]
pub struct BestReplyRegion {
    pub col: usize,
    pub polytope: SimplexPolytope,
    pub full_dimensional: bool,
    pub vertices: Option<Vec<RatVector>>,
}

/// H-representation of `X(j)`: the simplex plus one inequality
/// `x^T B (e_j - e_k) >= 0` per `k != j`.
pub fn region_polytope(game: &Game, j: usize) -> SimplexPolytope {
    let mut poly = SimplexPolytope::new(game.m());
    let col_j = game.b.column(j);
    for k in 0..game.n() {
        if k == j {
            continue;
        }
        let row: RatVector =
            (0..game.m()).map(|i| &col_j[i] - game.b.at(i, k)).collect();
        poly.require(row, Relation::Ge, Rational::zero());
    }
    poly
}

pub fn best_reply_region(game: &Game, j: usize, enum_bound: usize) -> BestReplyRegion {
    let polytope = region_polytope(game, j);
    let full_dimensional = column_in_d(game, j, &InteriorProbe::new(game));
    let vertices = (game.m() + game.n() <= enum_bound)
        .then(|| enumerate_polytope_vertices(&polytope));
    BestReplyRegion { col: j, polytope, full_dimensional, vertices }
}

/// Vertices of a polytope over the simplex by exhaustive basis
/// enumeration: every `dim - 1` subset of the inequality rows is made
/// tight against the simplex equality and the solution kept if feasible.
pub fn enumerate_polytope_vertices(poly: &SimplexPolytope) -> Vec<RatVector> {
    let dim = poly.dim;
    let mut ineqs: Vec<(RatVector, Rational)> = Vec::new();
    for i in 0..dim {
        let mut row = vec![Rational::zero(); dim];
        row[i] = Rational::one();
        ineqs.push((row, Rational::zero()));
    }
    let mut equalities: Vec<(RatVector, Rational)> = Vec::new();
    for c in &poly.extra {
        match c.relation {
            Relation::Eq => equalities.push((c.coeffs.clone(), c.rhs.clone())),
            _ => ineqs.push((c.coeffs.clone(), c.rhs.clone())),
        }
    }
    equalities.push((vec![Rational::one(); dim], Rational::one()));

    let need = dim.saturating_sub(equalities.len());
    let mut out: Vec<RatVector> = Vec::new();
    if equalities.len() > dim {
        return out;
    }
    for subset in combinations(ineqs.len(), need) {
        let mut rows: Vec<RatVector> = equalities.iter().map(|(r, _)| r.clone()).collect();
        let mut rhs: RatVector = equalities.iter().map(|(_, b)| b.clone()).collect();
        for &i in &subset {
            rows.push(ineqs[i].0.clone());
            rhs.push(ineqs[i].1.clone());
        }
        if let Some(x) = solve_square_system(&rows, &rhs) {
            if poly.contains(&x) {
                out.push(x);
            }
        }
    }
    out.sort();
    out.dedup();
    out
}

pub(crate) fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    if k > n {
        return out;
    }
    let mut idx: Vec<usize> = (0..k).collect();
    loop {
        out.push(idx.clone());
        if k == 0 {
            return out;
        }
        let mut i = k;
        loop {
            if i == 0 {
                return out;
            }
            i -= 1;
            if idx[i] != i + n - k {
                idx[i] += 1;
                for j in i + 1..k {
                    idx[j] = idx[j - 1] + 1;
                }
                break;
            }
        }
    }
}

/// `E(j)`: all columns payoff equivalent to `j` (identical `B` columns),
/// including `j` itself.
pub fn payoff_equivalent_class(game: &Game, j: usize) -> Vec<usize> {
    let col_j = game.b.column(j);
    (0..game.n()).filter(|&k| game.b.column(k) == col_j).collect()
}

/// Whether `X(j)` contains a point with every coordinate positive, which
/// characterizes the columns that are not weakly dominated. A cheap
/// candidate point (a strict pure best reply nudged toward the uniform
/// strategy) is verified exactly before falling back to the interior LP.
fn column_in_d(game: &Game, j: usize, probe: &InteriorProbe) -> bool {
    let m = game.m();
    if m == 1 {
        return region_polytope(game, j).contains(&[Rational::one()]);
    }
    for &i in probe.strict_rows_for(j) {
        let payoffs = game.b().row(i);
        for denom in [256i64, 65536] {
            let eps = Rational::new(1.into(), denom.into());
            let keep = Rational::one() - &eps;
            // Exact check that j stays a best reply at the perturbed point
            // (1 - eps) e_i + eps * uniform.
            let pj = &keep * &payoffs[j] + &eps * &probe.uniform_payoffs[j];
            let ok = (0..game.n()).all(|k| {
                k == j || pj >= &keep * &payoffs[k] + &eps * &probe.uniform_payoffs[k]
            });
            if ok {
                return true;
            }
        }
    }
    relative_interior_witness(&region_polytope(game, j), &[]).is_some()
}

struct InteriorProbe {
    uniform_payoffs: RatVector,
    /// For each column, the rows to which it is the unique best reply.
    strict_rows: Vec<Vec<usize>>,
}

impl InteriorProbe {
    fn new(game: &Game) -> InteriorProbe {
        let uniform_payoffs =
            game.column_payoffs(&MixedStrategy::uniform(Player::I, game.m()));
        let mut strict_rows = vec![Vec::new(); game.n()];
        for i in 0..game.m() {
            let arg = argmax_set(game.b().row(i));
            if arg.len() == 1 {
                strict_rows[arg[0]].push(i);
            }
        }
        InteriorProbe { uniform_payoffs, strict_rows }
    }

    fn strict_rows_for(&self, j: usize) -> &[usize] {
        &self.strict_rows[j]
    }
}

/// `D`: the columns whose best reply region meets the interior of the
/// leader's simplex; equivalently the columns that are not weakly
/// dominated. For small games both characterizations are computed and
/// must agree.
pub fn compute_d(game: &Game) -> Vec<usize> {
    let probe = InteriorProbe::new(game);
    let d: Vec<usize> =
        (0..game.n()).filter(|&j| column_in_d(game, j, &probe)).collect();
    if game.m() + game.n() <= DEFAULT_ENUM_BOUND {
        let by_dominance: Vec<usize> = (0..game.n())
            .filter(|&j| !matches!(dominance_check(game, Player::II, j), Dominance::Weak(_) | Dominance::Strong(_)))
            .collect();
        assert_eq!(
            d, by_dominance,
            "interior-witness and weak-dominance characterizations of D disagree"
        );
    }
    d
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Dominance {
    /// Strictly better against every opposing pure strategy.
    Strong(MixedStrategy),
    /// At least as good everywhere, strictly better somewhere.
    Weak(MixedStrategy),
    None,
}

/// LP-based dominance test for a pure strategy against mixtures of the
/// player's other pure strategies.
pub fn dominance_check(game: &Game, who: Player, s: usize) -> Dominance {
    let mat = match who {
        Player::I => game.a.clone(),
        Player::II => game.b.transpose(),
    };
    let rows = mat.rows();
    let cols = mat.cols();
    if rows < 2 {
        return Dominance::None;
    }
    let others: Vec<usize> = (0..rows).filter(|&i| i != s).collect();
    let k = others.len();
    let build = |strict: bool| -> LinearProgram {
        // Variables: mixture weights over `others`, plus one slack bound.
        let vars = k + 1;
        let mut obj = vec![Rational::zero(); vars];
        obj[k] = Rational::one();
        let mut lp = LinearProgram::maximize(obj);
        for j in 0..cols {
            let mut row: RatVector =
                others.iter().map(|&i| mat.at(i, j).clone()).collect();
            row.push(if strict { -Rational::one() } else { Rational::zero() });
            lp.constrain(row, Relation::Ge, mat.at(s, j).clone());
        }
        if !strict {
            // Total slack across all columns; positive iff some column is
            // strictly improved while none is worsened.
            let mut row: RatVector = others
                .iter()
                .map(|&i| (0..cols).map(|j| mat.at(i, j).clone()).sum())
                .collect();
            row.push(-Rational::one());
            let total: Rational = (0..cols).map(|j| mat.at(s, j).clone()).sum();
            lp.constrain(row, Relation::Ge, total);
        }
        let mut simplex_row = vec![Rational::one(); vars];
        simplex_row[k] = Rational::zero();
        lp.constrain(simplex_row, Relation::Eq, Rational::one());
        for i in 0..k {
            let mut row = vec![Rational::zero(); vars];
            row[i] = Rational::one();
            lp.constrain(row, Relation::Ge, Rational::zero());
        }
        lp
    };
    let witness = |vertex: &[Rational]| {
        let mut weights = vec![Rational::zero(); rows];
        for (t, &i) in others.iter().enumerate() {
            weights[i] = vertex[t].clone();
        }
        MixedStrategy { owner: who, weights }
    };
    if let LpOutcome::Optimal { value, vertex } = solve_lp(&build(true)).expect("dominance lp") {
        if value.is_positive() {
            return Dominance::Strong(witness(&vertex));
        }
    }
    if let LpOutcome::Optimal { value, vertex } = solve_lp(&build(false)).expect("dominance lp") {
        if value.is_positive() {
            return Dominance::Weak(witness(&vertex));
        }
    }
    Dominance::None
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Degeneracy {
    NonDegenerate,
    /// Some mixed strategy has more pure best replies than its support size.
    Degenerate { strategy: MixedStrategy, best_replies: Vec<usize> },
    /// The game exceeds the enumeration bound; consumers must fall back to
    /// the bounds that hold regardless of degeneracy.
    Unchecked,
}

impl Degeneracy {
    pub fn is_degenerate(&self) -> bool {
        matches!(self, Degeneracy::Degenerate { .. })
    }
}

/// Definition check: `who` is degenerate if one of their mixed strategies
/// has more pure best replies (on the opponent's side) than the size of
/// its support. Decided by feasibility programs over all (support, reply
/// set) pairs with `|K| = |S| + 1`.
pub fn degenerate_for(game: &Game, who: Player, enum_bound: usize) -> Degeneracy {
    if game.m() + game.n() > enum_bound {
        return Degeneracy::Unchecked;
    }
    let g = match who {
        Player::I => game.clone(),
        Player::II => game.transpose_roles(),
    };
    let (m, n) = (g.m(), g.n());
    for size in 1..=m.min(n.saturating_sub(1)) {
        for support in combinations(m, size) {
            for replies in combinations(n, size + 1) {
                if let Some(x) = degenerate_witness(&g, &support, &replies) {
                    let strategy = MixedStrategy { owner: who, weights: x.clone() };
                    let brs = pure_best_replies(
                        &g,
                        &MixedStrategy { owner: Player::I, weights: x },
                    );
                    debug_assert!(brs.len() > strategy.support().len());
                    return Degeneracy::Degenerate { strategy, best_replies: brs };
                }
            }
        }
    }
    Degeneracy::NonDegenerate
}

fn degenerate_witness(g: &Game, support: &[usize], replies: &[usize]) -> Option<RatVector> {
    let m = g.m();
    let mut poly = SimplexPolytope::new(m);
    for i in 0..m {
        if !support.contains(&i) {
            let mut row = vec![Rational::zero(); m];
            row[i] = Rational::one();
            poly.require(row, Relation::Eq, Rational::zero());
        }
    }
    let k0 = replies[0];
    let col0 = g.b.column(k0);
    for &k in &replies[1..] {
        let row: RatVector = (0..m).map(|i| &col0[i] - g.b.at(i, k)).collect();
        poly.require(row, Relation::Eq, Rational::zero());
    }
    for l in 0..g.n() {
        if replies.contains(&l) {
            continue;
        }
        let row: RatVector = (0..m).map(|i| &col0[i] - g.b.at(i, l)).collect();
        poly.require(row, Relation::Ge, Rational::zero());
    }
    match solve_lp(&poly.maximize(vec![Rational::zero(); m])).expect("degeneracy lp") {
        LpOutcome::Optimal { vertex, .. } => Some(vertex),
        _ => None,
    }
}

/// Combined flag: degenerate if either player is.
pub fn degenerate(game: &Game, enum_bound: usize) -> Degeneracy {
    match degenerate_for(game, Player::I, enum_bound) {
        d @ Degeneracy::Degenerate { .. } => d,
        first => match (first, degenerate_for(game, Player::II, enum_bound)) {
            (_, d @ Degeneracy::Degenerate { .. }) => d,
            (Degeneracy::Unchecked, _) | (_, Degeneracy::Unchecked) => Degeneracy::Unchecked,
            _ => Degeneracy::NonDegenerate,
        },
    }
}

// --- game file format -------------------------------------------------------

/// A parsed game document: the game plus an optional correlated
/// distribution `z` used by the coarse-correlated-equilibrium checker.
#[derive(Debug, Clone)]
pub struct GameDocument {
    pub game: Game,
    pub z: Option<RatMatrix>,
}

/// Loads the JSON game format: fields `name` (optional), `rows`/`cols`
/// (optional label arrays), `A` and `B` (arrays of arrays of rational
/// tokens), and optional `z`. Tokens may be JSON integers, decimals, or
/// strings like `"28/3"`; decimals are converted exactly.
pub fn load_game(bytes: &[u8]) -> Result<GameDocument, GameError> {
    let value: serde_json::Value = serde_json::from_slice(bytes)
        .map_err(|e| GameError::Parse(format!("invalid document: {e}")))?;
    let obj = value
        .as_object()
        .ok_or_else(|| GameError::Parse("top level must be an object".into()))?;
    let a = parse_matrix(obj.get("A").ok_or_else(|| GameError::Parse("missing field A".into()))?, "A")?;
    let b = parse_matrix(obj.get("B").ok_or_else(|| GameError::Parse("missing field B".into()))?, "B")?;
    let mut game = Game::new(a, b)?;
    if let Some(name) = obj.get("name") {
        game.name = Some(
            name.as_str()
                .ok_or_else(|| GameError::Parse("name must be a string".into()))?
                .to_string(),
        );
    }
    let labels = |key: &str, len: usize| -> Result<Option<Vec<String>>, GameError> {
        match obj.get(key) {
            None => Ok(None),
            Some(v) => {
                let arr = v
                    .as_array()
                    .ok_or_else(|| GameError::Parse(format!("{key} must be an array")))?;
                if arr.len() != len {
                    return Err(GameError::Parse(format!(
                        "{key} has {} labels, expected {len}",
                        arr.len()
                    )));
                }
                arr.iter()
                    .map(|v| {
                        v.as_str().map(str::to_string).ok_or_else(|| {
                            GameError::Parse(format!("{key} labels must be strings"))
                        })
                    })
                    .collect::<Result<Vec<_>, _>>()
                    .map(Some)
            }
        }
    };
    let row_labels = labels("rows", game.m())?;
    let col_labels = labels("cols", game.n())?;
    if row_labels.is_some() || col_labels.is_some() {
        let rows = row_labels.unwrap_or_else(|| game.row_labels.clone());
        let cols = col_labels.unwrap_or_else(|| game.col_labels.clone());
        game = game.with_labels(rows, cols)?;
    }
    let z = match obj.get("z") {
        None => None,
        Some(v) => {
            let z = parse_matrix(v, "z")?;
            if z.rows() != game.m() || z.cols() != game.n() {
                return Err(GameError::Parse(format!(
                    "z is {}x{}, expected {}x{}",
                    z.rows(),
                    z.cols(),
                    game.m(),
                    game.n()
                )));
            }
            Some(z)
        }
    };
    Ok(GameDocument { game, z })
}

fn parse_matrix(value: &serde_json::Value, field: &str) -> Result<RatMatrix, GameError> {
    let rows = value
        .as_array()
        .ok_or_else(|| GameError::Parse(format!("{field} must be an array of arrays")))?;
    if rows.is_empty() {
        return Err(GameError::Parse(format!("{field} must not be empty")));
    }
    let mut parsed: Vec<RatVector> = Vec::with_capacity(rows.len());
    for (i, row) in rows.iter().enumerate() {
        let cells = row
            .as_array()
            .ok_or_else(|| GameError::Parse(format!("{field}[{i}] must be an array")))?;
        let mut out = RatVector::with_capacity(cells.len());
        for (j, cell) in cells.iter().enumerate() {
            out.push(parse_cell(cell).map_err(|e| {
                GameError::Parse(format!("{field}[{i}][{j}]: {e}"))
            })?);
        }
        parsed.push(out);
    }
    let width = parsed[0].len();
    if parsed.iter().any(|r| r.len() != width) {
        return Err(GameError::Parse(format!("{field} has ragged rows")));
    }
    RatMatrix::from_rows(parsed).ok_or_else(|| GameError::Parse(format!("{field} has ragged rows")))
}

fn parse_cell(v: &serde_json::Value) -> Result<Rational, String> {
    match v {
        // With arbitrary precision enabled the literal digits survive, so
        // decimals convert exactly instead of via binary floating point.
        serde_json::Value::Number(n) => parse_rational(&n.to_string()).map_err(|e| e.to_string()),
        serde_json::Value::String(s) => parse_rational(s).map_err(|e| e.to_string()),
        other => Err(format!("expected a rational token, got {other}")),
    }
}

/// Renders a game back to the document format.
pub fn game_to_document(game: &Game, z: Option<&RatMatrix>) -> serde_json::Value {
    use crate::rational::render;
    let matrix = |m: &RatMatrix| {
        serde_json::Value::Array(
            (0..m.rows())
                .map(|i| {
                    serde_json::Value::Array(
                        m.row(i).iter().map(|v| serde_json::Value::String(render(v))).collect(),
                    )
                })
                .collect(),
        )
    };
    let mut obj = serde_json::Map::new();
    if let Some(name) = &game.name {
        obj.insert("name".into(), serde_json::Value::String(name.clone()));
    }
    obj.insert(
        "rows".into(),
        serde_json::Value::Array(
            game.row_labels.iter().map(|s| serde_json::Value::String(s.clone())).collect(),
        ),
    );
    obj.insert(
        "cols".into(),
        serde_json::Value::Array(
            game.col_labels.iter().map(|s| serde_json::Value::String(s.clone())).collect(),
        ),
    );
    obj.insert("A".into(), matrix(&game.a));
    obj.insert("B".into(), matrix(&game.b));
    if let Some(z) = z {
        obj.insert("z".into(), matrix(z));
    }
    serde_json::Value::Object(obj)
}

/// Membership test against the stored H-representation.
pub fn region_contains(region: &BestReplyRegion, x: &[Rational]) -> bool {
    region.polytope.contains(x)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::ratio;

    pub(crate) fn g4132() -> Game {
        Game::from_int_rows(&[&[4, 1], &[3, 2]], &[&[1, 2], &[4, 3]])
    }

    fn sec3_example2() -> Game {
        Game::from_int_rows(&[&[-3, 2], &[1, -3], &[0, 3]], &[&[0, 0], &[1, 2], &[3, -1]])
    }

    fn g4231() -> Game {
        Game::from_int_rows(&[&[4, 2], &[3, 1]], &[&[1, 2], &[0, 0]])
    }

    fn conitzer() -> Game {
        Game::from_int_rows(&[&[2, -1], &[3, 0]], &[&[2, 1], &[-1, 0]])
    }

    #[test]
    fn load_round_trip() {
        let doc = br#"{"name":"4132","A":[[4,1],[3,2]],"B":[[1,2],[4,3]]}"#;
        let loaded = load_game(doc).unwrap();
        assert_eq!(loaded.game.a(), g4132().a());
        assert_eq!(loaded.game.name.as_deref(), Some("4132"));
        assert_eq!(loaded.game.col_label(0), "3");
    }

    #[test]
    fn load_decimal_exactly() {
        let doc = br#"{"A":[[3.5]],"B":[[1]]}"#;
        let loaded = load_game(doc).unwrap();
        assert_eq!(loaded.game.a().at(0, 0), &ratio(7, 2));
    }

    #[test]
    fn load_rejects_shape_mismatch() {
        let doc = br#"{"A":[[1,2],[3,4]],"B":[[1,2,3],[4,5,6]]}"#;
        assert!(matches!(load_game(doc), Err(GameError::ShapeMismatch { .. })));
        let ragged = br#"{"A":[[1,2],[3]],"B":[[1,2],[3,4]]}"#;
        assert!(matches!(load_game(ragged), Err(GameError::Parse(_))));
        let bad = br#"{"A":[[1,"2/0"]],"B":[[1,2]]}"#;
        let err = load_game(bad).unwrap_err();
        assert!(err.to_string().contains("A[0][1]"), "{err}");
    }

    #[test]
    fn payoff_examples() {
        let g = g4132();
        let s1 = MixedStrategy::pure(Player::I, 0, 2);
        let t3 = MixedStrategy::pure(Player::II, 0, 2);
        assert_eq!(payoff(&g, &s1, &t3, Player::I).unwrap(), rat(4));
        let x = MixedStrategy::new(Player::I, vec![ratio(1, 2), ratio(1, 2)]).unwrap();
        let y = MixedStrategy::new(Player::II, vec![ratio(1, 2), ratio(1, 2)]).unwrap();
        assert_eq!(payoff(&g, &x, &y, Player::I).unwrap(), ratio(5, 2));
        assert_eq!(payoff(&g, &x, &y, Player::II).unwrap(), ratio(5, 2));
        let zero = Game::from_int_rows(&[&[0, 0], &[0, 0]], &[&[1, 2], &[4, 3]]);
        assert_eq!(payoff(&zero, &x, &y, Player::I).unwrap(), rat(0));
    }

    #[test]
    fn strategies_are_validated() {
        assert!(MixedStrategy::new(Player::I, vec![ratio(1, 2), ratio(1, 3)]).is_err());
        assert!(MixedStrategy::new(Player::I, vec![ratio(3, 2), ratio(-1, 2)]).is_err());
        let g = g4132();
        let x = MixedStrategy::pure(Player::I, 0, 2);
        let y = MixedStrategy::pure(Player::II, 0, 2);
        assert!(payoff(&g, &y, &x, Player::I).is_err());
    }

    #[test]
    fn best_replies_match_paper_examples() {
        let g = sec3_example2();
        let s1 = MixedStrategy::pure(Player::I, 0, 3);
        assert_eq!(pure_best_replies(&g, &s1), vec![0, 1]);
        let g = g4132();
        let s1 = MixedStrategy::pure(Player::I, 0, 2);
        assert_eq!(pure_best_replies(&g, &s1), vec![1]);
        let mp = Game::from_int_rows(&[&[0, 0], &[0, 0]], &[&[0, 1], &[1, 0]]);
        let x = MixedStrategy::new(Player::I, vec![ratio(1, 2), ratio(1, 2)]).unwrap();
        assert_eq!(pure_best_replies(&mp, &x), vec![0, 1]);
    }

    #[test]
    fn regions_of_31019() {
        let g = Game::from_int_rows(&[&[3, 10], &[1, 9]], &[&[3, 1], &[8, 9]]);
        let x3 = best_reply_region(&g, 0, DEFAULT_ENUM_BOUND);
        let x4 = best_reply_region(&g, 1, DEFAULT_ENUM_BOUND);
        // X(3) = [1/3, 1] and X(4) = [0, 1/3] in terms of the weight on s1.
        let at = |p: i64, q: i64| vec![ratio(p, q), ratio(q - p, q)];
        assert!(region_contains(&x3, &at(1, 3)));
        assert!(region_contains(&x3, &at(1, 1)));
        assert!(!region_contains(&x3, &at(1, 4)));
        assert!(region_contains(&x4, &at(1, 4)));
        assert!(!region_contains(&x4, &at(1, 2)));
        assert!(x3.full_dimensional && x4.full_dimensional);
        assert_eq!(x3.vertices.as_ref().unwrap().len(), 2);
        assert_eq!(x3.vertices.as_ref().unwrap()[0], at(1, 3));
    }

    #[test]
    fn all_zero_b_makes_every_region_full() {
        let g = Game::from_int_rows(&[&[1, 2], &[3, 4]], &[&[0, 0], &[0, 0]]);
        for j in 0..2 {
            let r = best_reply_region(&g, j, DEFAULT_ENUM_BOUND);
            assert!(region_contains(&r, &[ratio(1, 3), ratio(2, 3)]));
            assert!(r.full_dimensional);
        }
    }

    #[test]
    fn payoff_equivalence_classes() {
        let distinct = g4132();
        assert_eq!(payoff_equivalent_class(&distinct, 0), vec![0]);
        let all_ones = Game::from_int_rows(&[&[-1, 2], &[-2, 0]], &[&[1, 1], &[1, 1]]);
        assert_eq!(payoff_equivalent_class(&all_ones, 0), vec![0, 1]);
        let dup = Game::from_int_rows(&[&[1, 1, 1], &[1, 1, 1]], &[&[1, 2, 1], &[0, 3, 0]]);
        assert_eq!(payoff_equivalent_class(&dup, 0), vec![0, 2]);
    }

    #[test]
    fn d_excludes_weakly_dominated_columns() {
        assert_eq!(compute_d(&g4231()), vec![1]);
        let both = Game::from_int_rows(&[&[0, 0], &[0, 0]], &[&[2, 1], &[0, 1]]);
        assert_eq!(compute_d(&both), vec![0, 1]);
    }

    // A column whose region is a one-dimensional slice through the interior
    // of the simplex: it is never weakly dominated, so it belongs to D even
    // though its region has empty relative interior in the strict sense.
    #[test]
    fn d_keeps_slice_regions() {
        let g = Game::from_int_rows(
            &[&[0, 0, 0], &[0, 0, 0], &[0, 0, 0]],
            &[&[0, 1, -1], &[0, -1, 1], &[0, 0, 0]],
        );
        assert_eq!(compute_d(&g), vec![0, 1, 2]);
    }

    #[test]
    fn dominance_examples() {
        let g = conitzer();
        match dominance_check(&g, Player::I, 0) {
            Dominance::Strong(w) => assert_eq!(w.weights, vec![rat(0), rat(1)]),
            other => panic!("expected strong dominance, got {other:?}"),
        }
        match dominance_check(&g4231(), Player::II, 0) {
            Dominance::Weak(w) => assert_eq!(w.weights, vec![rat(0), rat(1)]),
            other => panic!("expected weak dominance, got {other:?}"),
        }
        let mp = Game::from_int_rows(&[&[0, 0], &[0, 0]], &[&[0, 1], &[1, 0]]);
        assert_eq!(dominance_check(&mp, Player::II, 0), Dominance::None);
    }

    #[test]
    fn degeneracy_examples() {
        match degenerate_for(&sec3_example2(), Player::I, DEFAULT_ENUM_BOUND) {
            Degeneracy::Degenerate { strategy, best_replies } => {
                assert_eq!(strategy.weights, vec![rat(1), rat(0), rat(0)]);
                assert_eq!(best_replies, vec![0, 1]);
            }
            other => panic!("expected degenerate, got {other:?}"),
        }
        assert_eq!(degenerate_for(&g4132(), Player::I, DEFAULT_ENUM_BOUND), Degeneracy::NonDegenerate);
        assert_eq!(degenerate_for(&g4132(), Player::II, DEFAULT_ENUM_BOUND), Degeneracy::NonDegenerate);
        let ones = Game::from_int_rows(&[&[-1, 2], &[-2, 0]], &[&[1, 1], &[1, 1]]);
        assert!(degenerate_for(&ones, Player::I, DEFAULT_ENUM_BOUND).is_degenerate());
        assert_eq!(degenerate(&ones, 2), Degeneracy::Unchecked);
    }

    #[test]
    fn membership_equivalence_and_cover() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        for _ in 0..40 {
            let m = rng.gen_range(2..4usize);
            let n = rng.gen_range(2..4usize);
            let a: Vec<Vec<Rational>> =
                (0..m).map(|_| (0..n).map(|_| rat(rng.gen_range(-5..6))).collect()).collect();
            let b: Vec<Vec<Rational>> =
                (0..m).map(|_| (0..n).map(|_| rat(rng.gen_range(-5..6))).collect()).collect();
            let g = Game::new(
                RatMatrix::from_rows(a).unwrap(),
                RatMatrix::from_rows(b).unwrap(),
            )
            .unwrap();
            let regions: Vec<BestReplyRegion> =
                (0..n).map(|j| best_reply_region(&g, j, DEFAULT_ENUM_BOUND)).collect();
            for _ in 0..20 {
                let mut w: Vec<Rational> =
                    (0..m).map(|_| rat(rng.gen_range(0..5))).collect();
                let total: Rational = w.iter().sum();
                if total.is_zero() {
                    w[0] = Rational::one();
                }
                let total: Rational = w.iter().sum();
                let w: RatVector = w.into_iter().map(|v| v / &total).collect();
                let x = MixedStrategy::new(Player::I, w.clone()).unwrap();
                let brs = pure_best_replies(&g, &x);
                assert!(!brs.is_empty());
                for j in 0..n {
                    assert_eq!(brs.contains(&j), region_contains(&regions[j], &w));
                }
            }
        }
    }

    #[test]
    fn shifting_a_preserves_structure() {
        let g = g4132();
        let shifted = Game::new(g.a().map(|v| v + rat(7)), g.b().clone()).unwrap();
        let x = MixedStrategy::new(Player::I, vec![ratio(1, 3), ratio(2, 3)]).unwrap();
        let y = MixedStrategy::new(Player::II, vec![ratio(1, 5), ratio(4, 5)]).unwrap();
        assert_eq!(pure_best_replies(&g, &x), pure_best_replies(&shifted, &x));
        assert_eq!(compute_d(&g), compute_d(&shifted));
        assert_eq!(
            payoff(&shifted, &x, &y, Player::I).unwrap(),
            payoff(&g, &x, &y, Player::I).unwrap() + rat(7)
        );
        assert_eq!(
            degenerate_for(&g, Player::I, DEFAULT_ENUM_BOUND).is_degenerate(),
            degenerate_for(&shifted, Player::I, DEFAULT_ENUM_BOUND).is_degenerate()
        );
    }
}
