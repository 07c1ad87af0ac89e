//! Exact scalars: rationals and elements of a real quadratic field `Q(sqrt(D))`.
//!
//! A value is stored as `a + b*sqrt(D)` with `a`, `b` rational and `D` a
//! squarefree integer greater than one. Values with `b = 0` are always
//! normalized to the rational variant, so equality is structural.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::LinalgError;

/// The field an [`ExactScalar`] lives in.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Field {
    Rationals,
    /// `Q(sqrt(D))` for a squarefree `D > 1`.
    Quadratic(u64),
}

impl Field {
    /// Smallest field containing both operands, or `MixedFields`.
    pub fn join(self, other: Field) -> Result<Field, LinalgError> {
        match (self, other) {
            (Field::Rationals, f) | (f, Field::Rationals) => Ok(f),
            (Field::Quadratic(x), Field::Quadratic(y)) if x == y => Ok(self),
            _ => Err(LinalgError::MixedFields { left: self, right: other }),
        }
    }

    pub fn radicand(self) -> Option<u64> {
        match self {
            Field::Rationals => None,
            Field::Quadratic(d) => Some(d),
        }
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Field::Rationals => write!(f, "Q"),
            Field::Quadratic(d) => write!(f, "Q(sqrt({d}))"),
        }
    }
}

/// Irrational element `a + b*sqrt(d)` of a real quadratic field; `b != 0`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct QuadraticSurd {
    a: BigRational,
    b: BigRational,
    d: u64,
}

impl QuadraticSurd {
    pub fn rational_part(&self) -> &BigRational {
        &self.a
    }

    pub fn surd_coefficient(&self) -> &BigRational {
        &self.b
    }

    pub fn radicand(&self) -> u64 {
        self.d
    }
}

/// A number in `Q` or in a real quadratic field.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum ExactScalar {
    Rational(BigRational),
    Quadratic(QuadraticSurd),
}

/// Splits `d` into `(s, r)` with `d = s^2 * r` and `r` squarefree.
pub(crate) fn squarefree_split(d: u64) -> (u64, u64) {
    let mut square = 1u64;
    let mut rest = d;
    let mut p = 2u64;
    while p * p <= rest {
        while rest.is_multiple_of(p * p) {
            rest /= p * p;
            square *= p;
        }
        p += 1;
    }
    (square, rest)
}

pub(crate) fn is_squarefree(d: u64) -> bool {
    d > 0 && squarefree_split(d).0 == 1
}

impl ExactScalar {
    pub fn zero() -> Self {
        ExactScalar::Rational(BigRational::zero())
    }

    pub fn one() -> Self {
        ExactScalar::Rational(BigRational::one())
    }

    pub fn from_int(v: i64) -> Self {
        ExactScalar::Rational(BigRational::from_integer(BigInt::from(v)))
    }

    pub fn from_bigint(v: BigInt) -> Self {
        ExactScalar::Rational(BigRational::from_integer(v))
    }

    /// `p/q`; panics if `q == 0`.
    pub fn from_ratio(p: i64, q: i64) -> Self {
        ExactScalar::Rational(BigRational::new(BigInt::from(p), BigInt::from(q)))
    }

    /// Builds `a + b*sqrt(d)`, extracting square factors from `d`.
    pub fn surd(a: BigRational, b: BigRational, d: u64) -> Result<Self, LinalgError> {
        if d == 0 {
            return Ok(ExactScalar::Rational(a));
        }
        let (square, rest) = squarefree_split(d);
        let b = b * BigRational::from_integer(BigInt::from(square));
        Ok(if rest == 1 {
            ExactScalar::Rational(a + b)
        } else {
            Self::normalized(a, b, Field::Quadratic(rest))
        })
    }

    /// `sqrt(d)` as an exact scalar.
    pub fn sqrt(d: u64) -> Self {
        Self::surd(BigRational::zero(), BigRational::one(), d).expect("radicand is valid")
    }

    fn normalized(a: BigRational, b: BigRational, field: Field) -> Self {
        match field {
            Field::Quadratic(d) if !b.is_zero() => ExactScalar::Quadratic(QuadraticSurd { a, b, d }),
            _ => ExactScalar::Rational(a),
        }
    }

    pub fn field(&self) -> Field {
        match self {
            ExactScalar::Rational(_) => Field::Rationals,
            ExactScalar::Quadratic(q) => Field::Quadratic(q.d),
        }
    }

    /// `(a, b)` such that `self = a + b*sqrt(D)`.
    pub fn parts(&self) -> (BigRational, BigRational) {
        match self {
            ExactScalar::Rational(r) => (r.clone(), BigRational::zero()),
            ExactScalar::Quadratic(q) => (q.a.clone(), q.b.clone()),
        }
    }

    pub fn as_rational(&self) -> Option<&BigRational> {
        match self {
            ExactScalar::Rational(r) => Some(r),
            ExactScalar::Quadratic(_) => None,
        }
    }

    pub fn is_zero(&self) -> bool {
        matches!(self, ExactScalar::Rational(r) if r.is_zero())
    }

    pub fn is_one(&self) -> bool {
        matches!(self, ExactScalar::Rational(r) if r.is_one())
    }

    /// True for `0`, `1` and `-1`, the values excluded by every cubic-type bound.
    pub fn is_trivial_unit(&self) -> bool {
        match self {
            ExactScalar::Rational(r) => r.is_zero() || r.abs().is_one(),
            ExactScalar::Quadratic(_) => false,
        }
    }

    pub fn conjugate(&self) -> Self {
        match self {
            ExactScalar::Rational(_) => self.clone(),
            ExactScalar::Quadratic(q) => ExactScalar::Quadratic(QuadraticSurd { a: q.a.clone(), b: -q.b.clone(), d: q.d }),
        }
    }

    /// Field norm `a^2 - D b^2`.
    pub fn norm(&self) -> BigRational {
        match self {
            ExactScalar::Rational(r) => r * r,
            ExactScalar::Quadratic(q) => &q.a * &q.a - &q.b * &q.b * BigRational::from_integer(BigInt::from(q.d)),
        }
    }

    pub fn signum(&self) -> i8 {
        match self {
            ExactScalar::Rational(r) => sign_of(r),
            ExactScalar::Quadratic(q) => {
                let (sa, sb) = (sign_of(&q.a), sign_of(&q.b));
                if sa == 0 || sa == sb {
                    return sb;
                }
                // opposite signs: compare a^2 with D b^2
                let d = BigRational::from_integer(BigInt::from(q.d));
                match (&q.a * &q.a).cmp(&(&q.b * &q.b * d)) {
                    Ordering::Greater => sa,
                    Ordering::Less => sb,
                    Ordering::Equal => unreachable!("sqrt(D) is irrational"),
                }
            }
        }
    }

    pub fn to_f64(&self) -> f64 {
        match self {
            ExactScalar::Rational(r) => ratio_to_f64(r),
            ExactScalar::Quadratic(q) => ratio_to_f64(&q.a) + ratio_to_f64(&q.b) * (q.d as f64).sqrt(),
        }
    }

    /// Exact comparison; fails only for mixed quadratic fields.
    pub fn try_cmp(&self, other: &Self) -> Result<Ordering, LinalgError> {
        Ok(match self.try_sub(other)?.signum() {
            -1 => Ordering::Less,
            0 => Ordering::Equal,
            _ => Ordering::Greater,
        })
    }

    pub fn try_add(&self, other: &Self) -> Result<Self, LinalgError> {
        if let (ExactScalar::Rational(x), ExactScalar::Rational(y)) = (self, other) {
            return Ok(ExactScalar::Rational(x + y));
        }
        let field = self.field().join(other.field())?;
        let ((a1, b1), (a2, b2)) = (self.parts(), other.parts());
        Ok(Self::normalized(a1 + a2, b1 + b2, field))
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self, LinalgError> {
        if let (ExactScalar::Rational(x), ExactScalar::Rational(y)) = (self, other) {
            return Ok(ExactScalar::Rational(x - y));
        }
        let field = self.field().join(other.field())?;
        let ((a1, b1), (a2, b2)) = (self.parts(), other.parts());
        Ok(Self::normalized(a1 - a2, b1 - b2, field))
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self, LinalgError> {
        if let (ExactScalar::Rational(x), ExactScalar::Rational(y)) = (self, other) {
            return Ok(ExactScalar::Rational(x * y));
        }
        let field = self.field().join(other.field())?;
        let d = BigRational::from_integer(BigInt::from(field.radicand().unwrap_or(0)));
        let ((a1, b1), (a2, b2)) = (self.parts(), other.parts());
        let a = &a1 * &a2 + &b1 * &b2 * d;
        let b = a1 * b2 + a2 * b1;
        Ok(Self::normalized(a, b, field))
    }

    pub fn try_div(&self, other: &Self) -> Result<Self, LinalgError> {
        if other.is_zero() {
            return Err(LinalgError::DivisionByZero);
        }
        if let (ExactScalar::Rational(x), ExactScalar::Rational(y)) = (self, other) {
            return Ok(ExactScalar::Rational(x / y));
        }
        let numerator = self.try_mul(&other.conjugate())?;
        let norm = other.norm();
        let (a, b) = numerator.parts();
        Ok(Self::normalized(a / &norm, b / norm, numerator.field()))
    }

    pub fn pow(&self, exp: u32) -> Self {
        let mut acc = ExactScalar::one();
        for _ in 0..exp {
            acc = &acc * self;
        }
        acc
    }

    /// Multiplies by a rational without any field check.
    pub fn scale(&self, factor: &BigRational) -> Self {
        match self {
            ExactScalar::Rational(r) => ExactScalar::Rational(r * factor),
            ExactScalar::Quadratic(q) => {
                Self::normalized(&q.a * factor, &q.b * factor, Field::Quadratic(q.d))
            }
        }
    }

    /// Least common multiple of the denominators of both parts.
    pub(crate) fn denominator_lcm(&self) -> BigInt {
        match self {
            ExactScalar::Rational(r) => r.denom().clone(),
            ExactScalar::Quadratic(q) => q.a.denom().lcm(q.b.denom()),
        }
    }
}

fn sign_of(r: &BigRational) -> i8 {
    if r.is_zero() {
        0
    } else if r.is_positive() {
        1
    } else {
        -1
    }
}

pub(crate) fn ratio_to_f64(r: &BigRational) -> f64 {
    r.to_f64().unwrap_or_else(|| {
        // numerator or denominator too large for a direct conversion
        let bits = r.numer().bits().max(r.denom().bits()) as i64;
        let shift = (bits - 900).max(0) as usize;
        let n = (r.numer() >> shift).to_f64().unwrap_or(f64::NAN);
        let d = (r.denom() >> shift).to_f64().unwrap_or(f64::NAN);
        n / d
    })
}

impl From<BigRational> for ExactScalar {
    fn from(r: BigRational) -> Self {
        ExactScalar::Rational(r)
    }
}

impl From<i64> for ExactScalar {
    fn from(v: i64) -> Self {
        ExactScalar::from_int(v)
    }
}

macro_rules! forward_binop {
    ($trait:ident, $method:ident, $checked:ident) => {
        impl<'a> $trait<&'a ExactScalar> for &'a ExactScalar {
            type Output = ExactScalar;
            /// Panics when the operands live in different quadratic fields.
            fn $method(self, rhs: &'a ExactScalar) -> ExactScalar {
                self.$checked(rhs).unwrap_or_else(|e| panic!("{e}"))
            }
        }

        impl $trait for ExactScalar {
            type Output = ExactScalar;
            fn $method(self, rhs: ExactScalar) -> ExactScalar {
                (&self).$method(&rhs)
            }
        }
    };
}

forward_binop!(Add, add, try_add);
forward_binop!(Sub, sub, try_sub);
forward_binop!(Mul, mul, try_mul);
forward_binop!(Div, div, try_div);

impl Neg for &ExactScalar {
    type Output = ExactScalar;
    fn neg(self) -> ExactScalar {
        match self {
            ExactScalar::Rational(r) => ExactScalar::Rational(-r.clone()),
            ExactScalar::Quadratic(q) => {
                ExactScalar::Quadratic(QuadraticSurd { a: -q.a.clone(), b: -q.b.clone(), d: q.d })
            }
        }
    }
}

impl Neg for ExactScalar {
    type Output = ExactScalar;
    fn neg(self) -> ExactScalar {
        -&self
    }
}

fn write_rational(f: &mut fmt::Formatter<'_>, r: &BigRational) -> fmt::Result {
    if r.is_integer() {
        write!(f, "{}", r.numer())
    } else {
        write!(f, "{}/{}", r.numer(), r.denom())
    }
}

/// Formats in the grammar `INT`, `INT/INT`, `[RAT][+|-][RAT*]sqrt(INT)`.
impl fmt::Display for ExactScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ExactScalar::Rational(r) => write_rational(f, r),
            ExactScalar::Quadratic(q) => {
                if !q.a.is_zero() {
                    write_rational(f, &q.a)?;
                    write!(f, "{}", if q.b.is_negative() { "-" } else { "+" })?;
                } else if q.b.is_negative() {
                    write!(f, "-")?;
                }
                let magnitude = q.b.abs();
                if !magnitude.is_one() {
                    write_rational(f, &magnitude)?;
                    write!(f, "*")?;
                }
                write!(f, "sqrt({})", q.d)
            }
        }
    }
}

fn parse_rational(token: &str, whole: &str) -> Result<BigRational, LinalgError> {
    let bad = || LinalgError::Parse(format!("invalid exact scalar `{whole}`"));
    let digits = |s: &str, signed: bool| {
        let body = if signed { s.strip_prefix(['+', '-']).unwrap_or(s) } else { s };
        !body.is_empty() && body.bytes().all(|c| c.is_ascii_digit())
    };
    let (num, den) = match token.split_once('/') {
        Some((n, d)) => (n, Some(d)),
        None => (token, None),
    };
    if !digits(num, true) {
        return Err(bad());
    }
    let numer: BigInt = num.parse().map_err(|_| bad())?;
    let denom: BigInt = match den {
        Some(d) if digits(d, false) => d.parse().map_err(|_| bad())?,
        Some(_) => return Err(bad()),
        None => BigInt::one(),
    };
    if denom.is_zero() {
        return Err(bad());
    }
    Ok(BigRational::new(numer, denom))
}

impl FromStr for ExactScalar {
    type Err = LinalgError;

    fn from_str(text: &str) -> Result<Self, Self::Err> {
        let s = text.trim();
        let bad = || LinalgError::Parse(format!("invalid exact scalar `{text}`"));
        let Some(idx) = s.find("sqrt(") else {
            return parse_rational(s, text).map(ExactScalar::Rational);
        };
        let radicand = s[idx + 5..].strip_suffix(')').ok_or_else(bad)?;
        if radicand.is_empty() || !radicand.bytes().all(|c| c.is_ascii_digit()) {
            return Err(bad());
        }
        let d: u64 = radicand.parse().map_err(|_| bad())?;
        let prefix = &s[..idx];
        let (a, b) = if let Some(pre) = prefix.strip_suffix('*') {
            // RAT* or RAT(+|-)RAT*
            match pre.char_indices().skip(1).filter(|&(_, c)| c == '+' || c == '-').last() {
                Some((i, _)) => (parse_rational(&pre[..i], text)?, parse_rational(&pre[i..], text)?),
                None => (BigRational::zero(), parse_rational(pre, text)?),
            }
        } else {
            let (head, sign) = match prefix.chars().last() {
                None => ("", 1),
                Some('+') => (&prefix[..prefix.len() - 1], 1),
                Some('-') => (&prefix[..prefix.len() - 1], -1),
                Some(_) => return Err(bad()),
            };
            let a = if head.is_empty() { BigRational::zero() } else { parse_rational(head, text)? };
            (a, BigRational::from_integer(BigInt::from(sign)))
        };
        ExactScalar::surd(a, b, d)
    }
}
