//! Integer polynomials, characteristic polynomials and squarefree decomposition.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::scalar::ExactScalar;
use super::LinalgError;

/// Polynomial with big-integer coefficients, lowest degree first, no trailing zeros.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct IntPolynomial {
    coeffs: Vec<BigInt>,
}

impl IntPolynomial {
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        IntPolynomial { coeffs }
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn zero() -> Self {
        IntPolynomial { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::from_i64(&[1])
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn leading(&self) -> Option<&BigInt> {
        self.coeffs.last()
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Self::new(out)
    }

    pub fn pow(&self, exp: u32) -> Self {
        (0..exp).fold(Self::one(), |acc, _| acc.mul(self))
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        Self::new(self.coeffs.iter().map(|x| x * c).collect())
    }

    /// Horner evaluation at an exact scalar.
    pub fn eval(&self, x: &ExactScalar) -> ExactScalar {
        self.coeffs
            .iter()
            .rev()
            .fold(ExactScalar::zero(), |acc, c| &(&acc * x) + &ExactScalar::from_bigint(c.clone()))
    }

    fn to_rational(&self) -> RatPoly {
        RatPoly::new(self.coeffs.iter().map(|c| BigRational::from_integer(c.clone())).collect())
    }

    /// Primitive integer polynomial with positive leading coefficient associated to `p`.
    fn primitive_from(p: &RatPoly) -> Self {
        let l = p.0.iter().fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
        let ints: Vec<BigInt> = p.0.iter().map(|c| (c * BigRational::from_integer(l.clone())).to_integer()).collect();
        let g = ints.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c));
        let mut q = Self::new(ints.into_iter().map(|c| c / &g).collect());
        if q.leading().is_some_and(Signed::is_negative) {
            q = q.scale(&BigInt::from(-1));
        }
        q
    }
}

impl fmt::Display for IntPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (deg, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let magnitude = c.abs();
            match (first, c.is_negative()) {
                (true, true) => write!(f, "-")?,
                (true, false) => {}
                (false, true) => write!(f, " - ")?,
                (false, false) => write!(f, " + ")?,
            }
            first = false;
            let show_coeff = deg == 0 || !magnitude.is_one();
            if show_coeff {
                write!(f, "{magnitude}")?;
            }
            match deg {
                0 => {}
                1 => write!(f, "{}x", if show_coeff { "*" } else { "" })?,
                _ => write!(f, "{}x^{deg}", if show_coeff { "*" } else { "" })?,
            }
        }
        Ok(())
    }
}

/// Dense polynomial over `Q`, used internally for gcds and exact division.
#[derive(Clone, Debug, PartialEq)]
struct RatPoly(Vec<BigRational>);

impl RatPoly {
    fn new(mut c: Vec<BigRational>) -> Self {
        while c.last().is_some_and(Zero::is_zero) {
            c.pop();
        }
        RatPoly(c)
    }

    fn degree(&self) -> Option<usize> {
        self.0.len().checked_sub(1)
    }

    fn is_constant(&self) -> bool {
        self.0.len() <= 1
    }

    fn derivative(&self) -> Self {
        RatPoly::new(
            self.0
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * BigRational::from_integer(BigInt::from(i)))
                .collect(),
        )
    }

    fn sub(&self, o: &Self) -> Self {
        let n = self.0.len().max(o.0.len());
        let z = BigRational::zero();
        RatPoly::new((0..n).map(|i| self.0.get(i).unwrap_or(&z) - o.0.get(i).unwrap_or(&z)).collect())
    }

    fn monic(&self) -> Self {
        match self.0.last() {
            Some(l) => RatPoly(self.0.iter().map(|c| c / l).collect()),
            None => self.clone(),
        }
    }

    fn div_rem(&self, d: &Self) -> (Self, Self) {
        let dd = d.degree().expect("division by zero polynomial");
        let mut rem = self.0.clone();
        let lead = d.0[dd].clone();
        let qlen = self.0.len().saturating_sub(dd);
        let mut quot = vec![BigRational::zero(); qlen];
        for i in (0..qlen).rev() {
            let coef = &rem[i + dd] / &lead;
            if !coef.is_zero() {
                for (j, dc) in d.0.iter().enumerate() {
                    rem[i + j] -= &coef * dc;
                }
            }
            quot[i] = coef;
        }
        (RatPoly::new(quot), RatPoly::new(rem))
    }

    fn exact_div(&self, d: &Self) -> Self {
        let (q, r) = self.div_rem(d);
        debug_assert!(r.0.is_empty(), "inexact polynomial division");
        q
    }

    fn gcd(&self, other: &Self) -> Self {
        let (mut a, mut b) = (self.clone(), other.clone());
        while b.degree().is_some() {
            let r = a.div_rem(&b).1;
            a = b;
            b = r;
        }
        a.monic()
    }
}

/// `p = content * prod(factor_i ^ multiplicity_i)` with primitive, pairwise
/// coprime, squarefree factors listed by increasing multiplicity.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SquarefreeDecomposition {
    pub content: BigInt,
    pub factors: Vec<(IntPolynomial, u32)>,
}

impl SquarefreeDecomposition {
    pub fn reconstruct(&self) -> IntPolynomial {
        self.factors
            .iter()
            .fold(IntPolynomial::new(vec![self.content.clone()]), |acc, (f, m)| acc.mul(&f.pow(*m)))
    }

    /// Multiplicity of `x` as a root; factors are coprime so at most one vanishes.
    pub fn root_multiplicity(&self, x: &ExactScalar) -> u32 {
        self.factors.iter().find(|(f, _)| f.eval(x).is_zero()).map_or(0, |&(_, m)| m)
    }
}

/// Yun's algorithm over `Q`, returned with integer factors.
pub fn squarefree_decomposition(p: &IntPolynomial) -> Result<SquarefreeDecomposition, LinalgError> {
    if p.is_zero() {
        return Err(LinalgError::ZeroPolynomial);
    }
    let f = p.to_rational();
    let mut factors = Vec::new();
    if !f.is_constant() {
        let df = f.derivative();
        let a0 = f.gcd(&df);
        let mut b = f.exact_div(&a0);
        let c = df.exact_div(&a0);
        let mut d = c.sub(&b.derivative());
        let mut multiplicity = 1u32;
        while !b.is_constant() {
            let a = b.gcd(&d);
            if !a.is_constant() {
                factors.push((IntPolynomial::primitive_from(&a), multiplicity));
            }
            b = b.exact_div(&a);
            let c = d.exact_div(&a);
            d = c.sub(&b.derivative());
            multiplicity += 1;
        }
    }
    let product_lead = factors
        .iter()
        .fold(BigInt::one(), |acc, (f, m)| acc * num_traits::pow(f.leading().expect("nonzero").clone(), *m as usize));
    let lead = p.leading().expect("nonzero");
    debug_assert!((lead % &product_lead).is_zero());
    let content = lead / product_lead;
    let dec = SquarefreeDecomposition { content, factors };
    debug_assert_eq!(&dec.reconstruct(), p);
    Ok(dec)
}

/// `det(xI - A)` for a square integer matrix, by the Faddeev-LeVerrier recurrence.
pub fn char_poly(a: &[Vec<i64>]) -> Result<IntPolynomial, LinalgError> {
    let n = a.len();
    if let Some(row) = a.iter().find(|r| r.len() != n) {
        return Err(LinalgError::NotSquare { rows: n, cols: row.len() });
    }
    let sparse_rows: Vec<Vec<(usize, i64)>> = a
        .iter()
        .map(|r| r.iter().enumerate().filter(|&(_, &v)| v != 0).map(|(j, &v)| (j, v)).collect())
        .collect();
    // coeffs[k] is the coefficient of x^k
    let mut coeffs = vec![BigInt::zero(); n + 1];
    coeffs[n] = BigInt::one();
    let mut m: Vec<Vec<BigInt>> = vec![vec![BigInt::zero(); n]; n];
    for k in 1..=n {
        // M_k = A M_{k-1} + c_{n-k+1} I
        let mut next = vec![vec![BigInt::zero(); n]; n];
        for (i, row) in sparse_rows.iter().enumerate() {
            for &(l, v) in row {
                for (j, x) in m[l].iter().enumerate() {
                    if !x.is_zero() {
                        next[i][j] += x * v;
                    }
                }
            }
            next[i][i] += &coeffs[n - k + 1];
        }
        m = next;
        // c_{n-k} = -tr(A M_k) / k
        let trace: BigInt = sparse_rows
            .iter()
            .enumerate()
            .map(|(i, row)| row.iter().map(|&(l, v)| &m[l][i] * v).sum::<BigInt>())
            .sum();
        debug_assert!((&trace % BigInt::from(k)).is_zero());
        coeffs[n - k] = -trace / BigInt::from(k);
    }
    Ok(IntPolynomial::new(coeffs))
}
