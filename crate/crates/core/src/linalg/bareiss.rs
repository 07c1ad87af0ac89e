//! Fraction-free (Bareiss) elimination over `Z` and `Z[sqrt(D)]`.
//!
//! Rows of an [`ExactMatrix`] are first scaled by the lcm of their
//! denominators, which leaves the rank unchanged and lets every division in
//! the elimination be exact inside the integral domain.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::matrix::ExactMatrix;
use super::scalar::{ExactScalar, Field};

pub(crate) trait Domain: Clone {
    fn is_null(&self) -> bool;
    fn mul(&self, other: &Self) -> Self;
    fn sub(&self, other: &Self) -> Self;
    /// Division known to be exact.
    fn exact_div(&self, other: &Self) -> Self;
    fn negate(&self) -> Self;
}

impl Domain for BigInt {
    fn is_null(&self) -> bool {
        self.is_zero()
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
    fn sub(&self, other: &Self) -> Self {
        self - other
    }
    fn exact_div(&self, other: &Self) -> Self {
        debug_assert!((self % other).is_zero());
        self / other
    }
    fn negate(&self) -> Self {
        -self
    }
}

/// `a + b*sqrt(d)` with integer parts.
#[derive(Clone, Debug, PartialEq, Eq)]
pub(crate) struct QuadInt {
    a: BigInt,
    b: BigInt,
    d: u64,
}

impl QuadInt {
    fn to_scalar(&self) -> ExactScalar {
        ExactScalar::surd(
            BigRational::from_integer(self.a.clone()),
            BigRational::from_integer(self.b.clone()),
            self.d,
        )
        .expect("radicand already squarefree")
    }
}

impl Domain for QuadInt {
    fn is_null(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }
    fn mul(&self, o: &Self) -> Self {
        let d = BigInt::from(self.d);
        QuadInt { a: &self.a * &o.a + &self.b * &o.b * d, b: &self.a * &o.b + &self.b * &o.a, d: self.d }
    }
    fn sub(&self, o: &Self) -> Self {
        QuadInt { a: &self.a - &o.a, b: &self.b - &o.b, d: self.d }
    }
    fn exact_div(&self, o: &Self) -> Self {
        let conj = QuadInt { a: o.a.clone(), b: -&o.b, d: o.d };
        let num = self.mul(&conj);
        let norm = &o.a * &o.a - &o.b * &o.b * BigInt::from(o.d);
        debug_assert!((&num.a % &norm).is_zero() && (&num.b % &norm).is_zero());
        QuadInt { a: num.a / &norm, b: num.b / &norm, d: self.d }
    }
    fn negate(&self) -> Self {
        QuadInt { a: -&self.a, b: -&self.b, d: self.d }
    }
}

/// Outcome of an elimination pass.
pub(crate) struct Elimination<T> {
    pub rank: usize,
    /// Last pivot, which equals the determinant up to `sign` for square full-rank input.
    pub last_pivot: Option<T>,
    pub sign: i8,
}

pub(crate) fn eliminate<T: Domain>(mut m: Vec<Vec<T>>, cols: usize) -> Elimination<T> {
    let rows = m.len();
    let mut rank = 0;
    let mut sign = 1i8;
    let mut prev: Option<T> = None;
    for col in 0..cols {
        if rank == rows {
            break;
        }
        let Some(p) = (rank..rows).find(|&r| !m[r][col].is_null()) else {
            continue;
        };
        if p != rank {
            m.swap(p, rank);
            sign = -sign;
        }
        let (top, rest) = m.split_at_mut(rank + 1);
        let pivot_row = &top[rank];
        let pivot = &pivot_row[col];
        for row in rest.iter_mut() {
            let lead = row[col].clone();
            for j in col + 1..cols {
                let mut v = pivot.mul(&row[j]).sub(&lead.mul(&pivot_row[j]));
                if let Some(ref d) = prev {
                    v = v.exact_div(d);
                }
                row[j] = v;
            }
            row[col] = lead.sub(&lead);
        }
        prev = Some(pivot.clone());
        rank += 1;
    }
    Elimination { rank, last_pivot: prev, sign }
}

enum Cleared {
    Integer(Vec<Vec<BigInt>>, BigInt),
    Quadratic(Vec<Vec<QuadInt>>, BigInt),
}

/// Scales each row to integral entries; also returns the product of the scales.
fn clear_denominators(m: &ExactMatrix) -> Cleared {
    let mut scale_product = BigInt::one();
    let mut scales = Vec::with_capacity(m.rows());
    for i in 0..m.rows() {
        let l = m.row_iter(i).fold(BigInt::one(), |acc, x| acc.lcm(&x.denominator_lcm()));
        scale_product *= &l;
        scales.push(BigRational::from_integer(l));
    }
    let integral = |r: &BigRational| -> BigInt {
        debug_assert!(r.is_integer());
        r.to_integer()
    };
    match m.field() {
        Field::Rationals => Cleared::Integer(
            (0..m.rows())
                .map(|i| m.row_iter(i).map(|x| integral(&(x.as_rational().expect("rational field") * &scales[i]))).collect())
                .collect(),
            scale_product,
        ),
        Field::Quadratic(d) => Cleared::Quadratic(
            (0..m.rows())
                .map(|i| {
                    m.row_iter(i)
                        .map(|x| {
                            let (a, b) = x.parts();
                            QuadInt { a: integral(&(a * &scales[i])), b: integral(&(b * &scales[i])), d }
                        })
                        .collect()
                })
                .collect(),
            scale_product,
        ),
    }
}

pub(crate) fn rank(m: &ExactMatrix) -> usize {
    if m.rows() == 0 || m.cols() == 0 {
        return 0;
    }
    match clear_denominators(m) {
        Cleared::Integer(rows, _) => eliminate(rows, m.cols()).rank,
        Cleared::Quadratic(rows, _) => eliminate(rows, m.cols()).rank,
    }
}

/// Determinant of a square matrix.
pub(crate) fn determinant(m: &ExactMatrix) -> ExactScalar {
    let n = m.rows();
    if n == 0 {
        return ExactScalar::one();
    }
    let (det, scale) = match clear_denominators(m) {
        Cleared::Integer(rows, scale) => {
            let e = eliminate(rows, n);
            let det = if e.rank < n {
                BigInt::zero()
            } else {
                let p = e.last_pivot.expect("full rank");
                if e.sign < 0 { -p } else { p }
            };
            (ExactScalar::from_bigint(det), scale)
        }
        Cleared::Quadratic(rows, scale) => {
            let e = eliminate(rows, n);
            let det = if e.rank < n {
                ExactScalar::zero()
            } else {
                let p = e.last_pivot.expect("full rank");
                let p = if e.sign < 0 { p.negate() } else { p };
                p.to_scalar()
            };
            (det, scale)
        }
    };
    debug_assert!(scale.is_positive());
    det.scale(&BigRational::new(BigInt::one(), scale))
}
