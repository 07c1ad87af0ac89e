//! Eigenvalue multiplicities and main/non-main classification.
//!
//! Floating-point eigenvalues from a dense symmetric eigensolver are
//! clustered, cluster centres close to a small rational or quadratic surd are
//! promoted to exact candidates, and every promoted multiplicity is then
//! certified as `n - rank(A - mu I)` in exact arithmetic.

use std::cmp::Ordering;

use nalgebra::DMatrix;
use num_bigint::BigInt;
use num_rational::BigRational;
use rayon::prelude::*;
use thiserror::Error;

use crate::graph::SignedGraph;
use crate::linalg::{is_squarefree, ExactMatrix, ExactScalar, LinalgError};

/// Relative cluster tolerance (absolute below magnitude one).
pub const CLUSTER_TOLERANCE: f64 = 1e-8;
/// Distance within which a cluster centre is matched to an exact candidate.
pub const PROMOTION_TOLERANCE: f64 = 1e-6;
/// Largest denominator (and radicand) considered during promotion.
pub const MAX_PROMOTION_DENOMINATOR: i64 = 64;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum SpectraError {
    #[error("eigenvalue {value}: floating cluster of size {cluster} but exact multiplicity {exact}")]
    CertificationMismatch { value: String, cluster: usize, exact: usize },
    #[error("{0} is not an eigenvalue")]
    NotAnEigenvalue(String),
    #[error(transparent)]
    Linalg(#[from] LinalgError),
}

#[derive(Clone, Debug, PartialEq)]
pub enum EigenValue {
    Exact(ExactScalar),
    Approx(f64),
}

#[derive(Clone, Debug, PartialEq)]
pub struct EigenvalueDescriptor {
    pub value: EigenValue,
    pub multiplicity: usize,
    /// `None` for eigenvalues that were not exactly certified.
    pub is_main: Option<bool>,
}

impl EigenvalueDescriptor {
    pub fn approx(&self) -> f64 {
        match &self.value {
            EigenValue::Exact(x) => x.to_f64(),
            EigenValue::Approx(x) => *x,
        }
    }

    pub fn exact(&self) -> Option<&ExactScalar> {
        match &self.value {
            EigenValue::Exact(x) => Some(x),
            EigenValue::Approx(_) => None,
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct SpectrumReport {
    pub n: usize,
    /// Sorted by descending value, ties by descending multiplicity.
    pub descriptors: Vec<EigenvalueDescriptor>,
}

impl SpectrumReport {
    pub fn exact_eigenvalues(&self) -> impl Iterator<Item = (&ExactScalar, usize)> {
        self.descriptors.iter().filter_map(|d| d.exact().map(|x| (x, d.multiplicity)))
    }

    pub fn is_fully_exact(&self) -> bool {
        self.descriptors.iter().all(|d| d.exact().is_some())
    }

    pub fn multiplicity_of(&self, mu: &ExactScalar) -> usize {
        self.exact_eigenvalues().find(|(x, _)| *x == mu).map_or(0, |(_, m)| m)
    }
}

/// `A - mu I` over the field of `mu`.
pub fn shifted_adjacency(g: &SignedGraph, mu: &ExactScalar) -> ExactMatrix {
    g.adjacency_exact().shift(mu).expect("integer matrix joins any field")
}

/// `n - rank(A - mu I)`; zero when `mu` is not an eigenvalue.
pub fn multiplicity(g: &SignedGraph, mu: &ExactScalar) -> usize {
    g.order() - shifted_adjacency(g, mu).rank()
}

/// Exact basis of the eigenspace of `mu`.
pub fn eigenspace(g: &SignedGraph, mu: &ExactScalar) -> Vec<Vec<ExactScalar>> {
    shifted_adjacency(g, mu).kernel()
}

/// `false` exactly when the all-ones vector lies in the column space of
/// `A - mu I`, i.e. the eigenspace is orthogonal to it.
pub fn is_main(g: &SignedGraph, mu: &ExactScalar) -> Result<bool, SpectraError> {
    let shifted = shifted_adjacency(g, mu);
    let r = shifted.rank();
    if r == g.order() {
        return Err(SpectraError::NotAnEigenvalue(mu.to_string()));
    }
    let ones = ExactMatrix::column_vector(vec![ExactScalar::one(); g.order()])?;
    Ok(shifted.hcat(&ones)?.rank() != r)
}

/// Eigenvalues of the adjacency matrix in descending order.
pub fn float_eigenvalues(g: &SignedGraph) -> Vec<f64> {
    let n = g.order();
    if n == 0 {
        return Vec::new();
    }
    let m = DMatrix::from_fn(n, n, |i, j| f64::from(g.sign(i, j)));
    let mut values: Vec<f64> = m.symmetric_eigen().eigenvalues.iter().copied().collect();
    values.sort_by(|a, b| b.total_cmp(a));
    values
}

fn close(x: f64, y: f64) -> bool {
    (x - y).abs() <= CLUSTER_TOLERANCE * x.abs().max(y.abs()).max(1.0)
}

/// Groups a descending list into runs of mutually close values.
pub fn cluster(sorted_desc: &[f64]) -> Vec<Vec<f64>> {
    let mut out: Vec<Vec<f64>> = Vec::new();
    for &x in sorted_desc {
        match out.last_mut() {
            Some(c) if close(*c.last().expect("nonempty"), x) => c.push(x),
            _ => out.push(vec![x]),
        }
    }
    out
}

fn rational(p: i64, q: i64) -> BigRational {
    BigRational::new(BigInt::from(p), BigInt::from(q))
}

/// Rationals `p/q` with `q <= 64` within the promotion tolerance of `x`, smallest `q` first.
fn rational_candidates(x: f64) -> Vec<ExactScalar> {
    let mut out: Vec<ExactScalar> = Vec::new();
    for q in 1..=MAX_PROMOTION_DENOMINATOR {
        let p = (x * q as f64).round();
        if (p / q as f64 - x).abs() <= PROMOTION_TOLERANCE {
            let c = ExactScalar::Rational(rational(p as i64, q));
            if !out.contains(&c) {
                out.push(c);
            }
        }
    }
    out
}

/// Quadratic surds `a + b sqrt(D)` near `x`, using a conjugate cluster `y` to
/// fix `a = (x + y) / 2` and `|b| sqrt(D) = |x - y| / 2`.
fn quadratic_candidates(x: f64, y: f64) -> Vec<ExactScalar> {
    let mut out = Vec::new();
    let half_gap = (x - y).abs() / 2.0;
    let sign = if x > y { 1 } else { -1 };
    for a in rational_candidates((x + y) / 2.0) {
        let a = a.as_rational().expect("rational candidate").clone();
        for q in 1..=MAX_PROMOTION_DENOMINATOR {
            for d in 2..=MAX_PROMOTION_DENOMINATOR as u64 {
                if !is_squarefree(d) {
                    continue;
                }
                let root = (d as f64).sqrt();
                let p = (half_gap * q as f64 / root).round();
                if p < 1.0 || (p / q as f64 * root - half_gap).abs() > PROMOTION_TOLERANCE {
                    continue;
                }
                let c = ExactScalar::surd(a.clone(), rational(sign * p as i64, q), d).expect("valid radicand");
                if (c.to_f64() - x).abs() <= PROMOTION_TOLERANCE && !out.contains(&c) {
                    out.push(c);
                }
            }
        }
    }
    out
}

fn certify_cluster(
    g: &SignedGraph,
    centre: f64,
    size: usize,
    partners: &[f64],
) -> Result<EigenvalueDescriptor, SpectraError> {
    let mut candidates = rational_candidates(centre);
    for &y in partners {
        candidates.extend(quadratic_candidates(centre, y));
    }
    for mu in candidates {
        let exact = multiplicity(g, &mu);
        if exact == 0 {
            // misidentified candidate; try the next one
            continue;
        }
        if exact != size {
            return Err(SpectraError::CertificationMismatch { value: mu.to_string(), cluster: size, exact });
        }
        let is_main = is_main(g, &mu)?;
        return Ok(EigenvalueDescriptor { value: EigenValue::Exact(mu), multiplicity: size, is_main: Some(is_main) });
    }
    Ok(EigenvalueDescriptor { value: EigenValue::Approx(centre), multiplicity: size, is_main: None })
}

/// Spectrum with exact, rank-certified multiplicities wherever the eigenvalue
/// is a small rational or quadratic surd.
pub fn spectrum(g: &SignedGraph) -> Result<SpectrumReport, SpectraError> {
    let clusters = cluster(&float_eigenvalues(g));
    let centres: Vec<(f64, usize)> =
        clusters.iter().map(|c| (c.iter().sum::<f64>() / c.len() as f64, c.len())).collect();
    let mut descriptors = centres
        .par_iter()
        .enumerate()
        .map(|(i, &(centre, size))| {
            let partners: Vec<f64> = centres
                .iter()
                .enumerate()
                .filter(|&(j, &(_, s))| j != i && s == size)
                .map(|(_, &(y, _))| y)
                .collect();
            certify_cluster(g, centre, size, &partners)
        })
        .collect::<Result<Vec<_>, _>>()?;
    descriptors.sort_by(|a, b| {
        b.approx()
            .partial_cmp(&a.approx())
            .unwrap_or(Ordering::Equal)
            .then(b.multiplicity.cmp(&a.multiplicity))
    });
    Ok(SpectrumReport { n: g.order(), descriptors })
}
