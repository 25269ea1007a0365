//! Exact rational arithmetic: the only numeric scalar used by the solver.
//!
//! Values are arbitrary-precision fractions in canonical form (denominator
//! positive, numerator and denominator coprime). All arithmetic is exact;
//! nothing in this crate ever rounds. `Rational` is [`num::BigRational`],
//! which maintains the canonical form on every operation; this module adds
//! the text grammar used by game files and reports.

use num::bigint::BigInt;
use num::rational::BigRational;
use num::{One, Signed, ToPrimitive, Zero};
use std::fmt::Write as _;
use thiserror::Error;

pub type Rational = BigRational;

/// Dense vector of rationals.
pub type RatVector = Vec<Rational>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ParseRationalError {
    #[error("malformed rational token {0:?}")]
    Malformed(String),
    #[error("zero denominator in rational token {0:?}")]
    ZeroDenominator(String),
}

/// Shorthand for an integer-valued rational.
pub fn rat(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Shorthand for the fraction `p/q`. Panics on `q == 0`.
pub fn ratio(p: i64, q: i64) -> Rational {
    Rational::new(BigInt::from(p), BigInt::from(q))
}

/// Parses an integer (`-2`), a fraction (`28/3`), or a finite decimal (`3.5`)
/// into its exact value. Decimals expand exactly over powers of ten; no
/// binary floating point is involved.
pub fn parse_rational(text: &str) -> Result<Rational, ParseRationalError> {
    let original = text;
    // The paper's typography uses U+2212 for minus; accept it alongside '-'.
    let text = text.trim().replace('\u{2212}', "-");
    if text.is_empty() {
        return Err(ParseRationalError::Malformed(original.to_string()));
    }
    if let Some((num, den)) = text.split_once('/') {
        let p = parse_int(num).ok_or_else(|| ParseRationalError::Malformed(original.to_string()))?;
        let q = parse_int(den).ok_or_else(|| ParseRationalError::Malformed(original.to_string()))?;
        if q.is_zero() {
            return Err(ParseRationalError::ZeroDenominator(original.to_string()));
        }
        return Ok(Rational::new(p, q));
    }
    if let Some((whole, frac)) = text.split_once('.') {
        // Finite decimal: sign applies to the whole token.
        let (sign, whole_digits) = split_sign(whole);
        let digits: String = [whole_digits, frac].concat();
        if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
            return Err(ParseRationalError::Malformed(original.to_string()));
        }
        let mantissa: BigInt = digits.parse().expect("digit string parses");
        let scale = BigInt::from(10u8).pow(frac.len() as u32);
        let value = Rational::new(mantissa, scale);
        return Ok(if sign { -value } else { value });
    }
    let p = parse_int(&text).ok_or_else(|| ParseRationalError::Malformed(original.to_string()))?;
    Ok(Rational::from_integer(p))
}

fn split_sign(s: &str) -> (bool, &str) {
    if let Some(rest) = s.strip_prefix('-') {
        (true, rest)
    } else if let Some(rest) = s.strip_prefix('+') {
        (false, rest)
    } else {
        (false, s)
    }
}

fn parse_int(s: &str) -> Option<BigInt> {
    let (neg, digits) = split_sign(s.trim());
    if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
        return None;
    }
    let v: BigInt = digits.parse().ok()?;
    Some(if neg { -v } else { v })
}

/// Canonical rendering: `p/q`, or `p` when the value is an integer.
pub fn render(r: &Rational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        let mut s = String::new();
        let _ = write!(s, "{}/{}", r.numer(), r.denom());
        s
    }
}

/// Decimal approximation for reports. Never used in computation.
pub fn approx(r: &Rational) -> f64 {
    r.to_f64().unwrap_or_else(|| {
        // Out-of-range magnitudes only; keep the sign for display.
        if r.is_negative() {
            f64::NEG_INFINITY
        } else {
            f64::INFINITY
        }
    })
}

pub fn dot(a: &[Rational], b: &[Rational]) -> Rational {
    debug_assert_eq!(a.len(), b.len());
    let mut acc = Rational::zero();
    for (x, y) in a.iter().zip(b) {
        if !x.is_zero() && !y.is_zero() {
            acc += x * y;
        }
    }
    acc
}

/// Solves the square system `rows * x = rhs` by exact Gaussian elimination.
/// Returns `None` when the matrix is singular.
pub fn solve_square_system(rows: &[RatVector], rhs: &[Rational]) -> Option<RatVector> {
    let n = rows.len();
    debug_assert!(rows.iter().all(|r| r.len() == n));
    debug_assert_eq!(rhs.len(), n);
    let mut a: Vec<RatVector> = rows.to_vec();
    let mut b: RatVector = rhs.to_vec();
    for col in 0..n {
        let p = (col..n).find(|&i| !a[i][col].is_zero())?;
        a.swap(col, p);
        b.swap(col, p);
        for i in 0..n {
            if i == col || a[i][col].is_zero() {
                continue;
            }
            let f = &a[i][col] / &a[col][col];
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

/// Dense row-major matrix of rationals with explicit dimensions.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RatMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Rational>,
}

impl RatMatrix {
    pub fn zero(rows: usize, cols: usize) -> Self {
        RatMatrix { rows, cols, data: vec![Rational::zero(); rows * cols] }
    }

    /// Builds from row slices; every row must have the same length.
    pub fn from_rows(rows: Vec<Vec<Rational>>) -> Option<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|row| row.len() != c) {
            return None;
        }
        Some(RatMatrix { rows: r, cols: c, data: rows.into_iter().flatten().collect() })
    }

    pub fn from_int_rows(rows: &[&[i64]]) -> Self {
        Self::from_rows(rows.iter().map(|r| r.iter().map(|&v| rat(v)).collect()).collect())
            .expect("int rows are uniform")
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn at(&self, i: usize, j: usize) -> &Rational {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Rational) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[Rational] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> RatVector {
        (0..self.rows).map(|i| self.at(i, j).clone()).collect()
    }

    pub fn transpose(&self) -> RatMatrix {
        let mut out = RatMatrix::zero(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out.set(j, i, self.at(i, j).clone());
            }
        }
        out
    }

    pub fn map(&self, f: impl Fn(&Rational) -> Rational) -> RatMatrix {
        RatMatrix { rows: self.rows, cols: self.cols, data: self.data.iter().map(f).collect() }
    }

    /// x^T M for a vector of length `rows`.
    pub fn left_mul(&self, x: &[Rational]) -> RatVector {
        debug_assert_eq!(x.len(), self.rows);
        (0..self.cols).map(|j| (0..self.rows).map(|i| self.at(i, j) * &x[i]).sum()).collect()
    }

    /// M y for a vector of length `cols`.
    pub fn right_mul(&self, y: &[Rational]) -> RatVector {
        debug_assert_eq!(y.len(), self.cols);
        (0..self.rows).map(|i| dot(self.row(i), y)).collect()
    }

    /// x^T M y.
    pub fn bilinear(&self, x: &[Rational], y: &[Rational]) -> Rational {
        dot(&self.right_mul(y), x)
    }
}
