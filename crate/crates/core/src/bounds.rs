//! Upper bounds on eigenvalue multiplicity in terms of the eigenspace
//! codimension `t = n - k`, and exact rank certificates for them.
//!
//! For a star partition with star complement `C`, every vertex `u` gives the
//! vector `s_u` (column `u` of `(B | C - mu I)`) and the linear form
//! `x -> <s_u, x> = c_u . x` with `c_u = (mu I - C)^{-1} s_u`. The cubes of
//! these forms are linearly independent when `mu` is not in `{0, 1, -1}`,
//! which gives `n <= dim H_3 = C(t+2, 3)`; squares give `C(t+1, 2)` under an
//! extra hypothesis on the underlying graph.

use std::fmt;

use num_bigint::BigUint;
use num_integer::binomial;
use num_traits::One;
use thiserror::Error;

use crate::graph::SignedGraph;
use crate::linalg::{dot, ExactMatrix, ExactScalar, LinalgError};
use crate::spectra::{self, EigenvalueDescriptor, SpectraError, SpectrumReport};
use crate::srg;
use crate::starcomp::{self, StarCompError, StarPartition};

/// Largest star-complement order for the rank certificates.
pub const MAX_CERTIFICATE_DIMENSION: usize = 12;

pub const NOT_CERTIFIED: &str = "eigenvalue not exactly certified";
const TRIVIAL_MU: &str = "mu is 0, 1 or -1";

#[derive(Debug, Error, Clone, PartialEq)]
pub enum BoundsError {
    #[error("{0} is not an eigenvalue")]
    NotAnEigenvalue(String),
    #[error("{0} is 0, 1 or -1")]
    TrivialEigenvalue(String),
    #[error("spectrum shape mismatch: {0}")]
    ShapeMismatch(String),
    #[error("search space too large: {what} = {size} exceeds {limit}")]
    SearchSpaceTooLarge { what: &'static str, size: usize, limit: usize },
    #[error("vector is not orthogonal to the eigenspace")]
    NotOrthogonal,
    #[error("vector has length {found}, graph has order {expected}")]
    LengthMismatch { expected: usize, found: usize },
    #[error(transparent)]
    StarComp(#[from] StarCompError),
    #[error(transparent)]
    Spectra(#[from] SpectraError),
    #[error(transparent)]
    Linalg(#[from] LinalgError),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum BoundKind {
    Naive,
    Cubic,
    CubicNonmain,
    Quadratic,
    SeidelAbsolute,
}

impl BoundKind {
    pub fn name(self) -> &'static str {
        match self {
            BoundKind::Naive => "naive",
            BoundKind::Cubic => "cubic",
            BoundKind::CubicNonmain => "cubic_nonmain",
            BoundKind::Quadratic => "quadratic",
            BoundKind::SeidelAbsolute => "seidel_absolute",
        }
    }

    /// Bound on `n` for star complement order `t`.
    pub fn value(self, t: usize) -> BigUint {
        let t_big = BigUint::from(t);
        match self {
            BoundKind::Naive => BigUint::from(3u32).pow(t as u32) + t_big - BigUint::one(),
            BoundKind::Cubic => binomial(t_big + 2u32, BigUint::from(3u32)),
            BoundKind::CubicNonmain | BoundKind::SeidelAbsolute => {
                binomial(t_big + 2u32, BigUint::from(3u32)) - BigUint::one()
            }
            BoundKind::Quadratic => binomial(t_big + 1u32, BigUint::from(2u32)),
        }
    }
}

impl fmt::Display for BoundKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Outcome of one bound. `holds` and `attained` are filled in even when the
/// bound does not apply; only an applicable bound that fails is a violation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BoundReport {
    pub kind: BoundKind,
    pub applicable: bool,
    /// Why the bound does not apply, or a caveat when it does.
    pub reason: Option<String>,
    pub n: usize,
    pub t: usize,
    pub bound_value: BigUint,
    pub holds: bool,
    pub attained: bool,
}

impl BoundReport {
    fn new(kind: BoundKind, n: usize, t: usize, inapplicable: Option<String>) -> Self {
        let bound_value = kind.value(t);
        let n_big = BigUint::from(n);
        BoundReport {
            kind,
            applicable: inapplicable.is_none(),
            reason: inapplicable,
            holds: n_big <= bound_value,
            attained: n_big == bound_value,
            n,
            t,
            bound_value,
        }
    }

    pub fn violated(&self) -> bool {
        self.applicable && !self.holds
    }
}

fn codimension(g: &SignedGraph, mu: &ExactScalar) -> Result<usize, BoundsError> {
    let k = spectra::multiplicity(g, mu);
    if k == 0 {
        return Err(BoundsError::NotAnEigenvalue(mu.to_string()));
    }
    Ok(g.order() - k)
}

fn trivial(mu: &ExactScalar) -> Option<String> {
    mu.is_trivial_unit().then(|| TRIVIAL_MU.to_string())
}

/// `n <= C(t+2, 3)`.
pub fn cubic_bound_check(g: &SignedGraph, mu: &ExactScalar) -> Result<BoundReport, BoundsError> {
    let t = codimension(g, mu)?;
    Ok(BoundReport::new(BoundKind::Cubic, g.order(), t, trivial(mu)))
}

/// `n <= C(t+2, 3) - 1` for a non-main eigenvalue with `k < n - 1`.
pub fn nonmain_bound_check(g: &SignedGraph, mu: &ExactScalar) -> Result<BoundReport, BoundsError> {
    let t = codimension(g, mu)?;
    let n = g.order();
    let reason = if let Some(r) = trivial(mu) {
        Some(r)
    } else if n - t >= n.saturating_sub(1) {
        Some("multiplicity is at least n - 1".to_string())
    } else if spectra::is_main(g, mu)? {
        Some("mu is a main eigenvalue".to_string())
    } else {
        None
    };
    Ok(BoundReport::new(BoundKind::CubicNonmain, n, t, reason))
}

/// `n <= C(t+1, 2)` when `-mu^2` is not an eigenvalue of the underlying graph.
pub fn quadratic_bound_check(g: &SignedGraph, mu: &ExactScalar) -> Result<BoundReport, BoundsError> {
    let t = codimension(g, mu)?;
    let reason = trivial(mu).or_else(|| {
        (!quadratic_hypothesis(g, mu)).then(|| "-mu^2 is an eigenvalue of the underlying graph".to_string())
    });
    Ok(BoundReport::new(BoundKind::Quadratic, g.order(), t, reason))
}

/// Whether `-mu^2` avoids the spectrum of the underlying graph.
pub fn quadratic_hypothesis(g: &SignedGraph, mu: &ExactScalar) -> bool {
    spectra::multiplicity(&g.underlying(), &-(mu * mu)) == 0
}

/// `n <= 3^t + t - 1`.
pub fn naive_bound_check(g: &SignedGraph, mu: &ExactScalar) -> Result<BoundReport, BoundsError> {
    let t = codimension(g, mu)?;
    Ok(BoundReport::new(BoundKind::Naive, g.order(), t, trivial(mu)))
}

/// `n <= C(f+3, 3) - 1` for a spectrum `rho^1, lambda^f, mu^g` with `f <= g`.
///
/// `witness` is the net-degree of a net-regular graph in the switching class,
/// if one is known; without it the bound is reported as not applicable.
pub fn seidel_absolute_check(report: &SpectrumReport, witness: Option<i64>) -> Result<BoundReport, BoundsError> {
    let d = &report.descriptors;
    if d.len() != 3 {
        return Err(BoundsError::ShapeMismatch(format!("{} distinct eigenvalues, expected 3", d.len())));
    }
    let rho_index = match witness {
        Some(rho) => {
            let rho = ExactScalar::from_int(rho);
            d.iter()
                .position(|x| x.multiplicity == 1 && x.exact() == Some(&rho))
                .ok_or_else(|| BoundsError::ShapeMismatch(format!("net-degree {rho} is not a simple eigenvalue")))?
        }
        None => d
            .iter()
            .position(|x| x.multiplicity == 1)
            .ok_or_else(|| BoundsError::ShapeMismatch("no simple eigenvalue".into()))?,
    };
    let mut others: Vec<&EigenvalueDescriptor> =
        d.iter().enumerate().filter(|&(i, _)| i != rho_index).map(|(_, x)| x).collect();
    // mu takes the larger multiplicity; on a tie prefer one outside {0, 1, -1}
    others.sort_by_key(|x| (x.multiplicity, x.exact().is_some_and(|m| !m.is_trivial_unit())));
    let (lambda, mu) = (others[0], others[1]);
    let f = lambda.multiplicity;
    let reason = if d.iter().any(|x| x.exact().is_none()) {
        Some(NOT_CERTIFIED.to_string())
    } else if mu.exact().is_some_and(ExactScalar::is_trivial_unit) {
        Some(TRIVIAL_MU.to_string())
    } else if witness.is_none() {
        Some("shape holds, net-regularity unverified".to_string())
    } else {
        None
    };
    Ok(BoundReport::new(BoundKind::SeidelAbsolute, report.n, f + 1, reason))
}

/// All five bounds for an exact eigenvalue. The absolute bound is reported as
/// not applicable when the spectrum has the wrong shape.
pub fn all_bounds(g: &SignedGraph, mu: &ExactScalar) -> Result<Vec<BoundReport>, BoundsError> {
    let mut out = vec![
        naive_bound_check(g, mu)?,
        cubic_bound_check(g, mu)?,
        nonmain_bound_check(g, mu)?,
        quadratic_bound_check(g, mu)?,
    ];
    let report = spectra::spectrum(g)?;
    let witness = srg::net_regular_witness(g, srg::DEFAULT_SEARCH_LIMIT).map(|(_, rho)| rho);
    out.push(match seidel_absolute_check(&report, witness) {
        Ok(r) => r,
        Err(BoundsError::ShapeMismatch(why)) => {
            let t = out[0].t;
            BoundReport::new(BoundKind::SeidelAbsolute, g.order(), t, Some(format!("spectrum shape: {why}")))
        }
        Err(e) => return Err(e),
    });
    Ok(out)
}

/// Naive, cubic, non-main and quadratic bounds for one spectrum entry.
/// Floating eigenvalues get non-applicable reports.
pub fn descriptor_bounds(g: &SignedGraph, d: &EigenvalueDescriptor) -> Result<Vec<BoundReport>, BoundsError> {
    match d.exact() {
        Some(mu) => Ok(vec![
            naive_bound_check(g, mu)?,
            cubic_bound_check(g, mu)?,
            nonmain_bound_check(g, mu)?,
            quadratic_bound_check(g, mu)?,
        ]),
        None => {
            let t = g.order() - d.multiplicity;
            Ok([BoundKind::Naive, BoundKind::Cubic, BoundKind::CubicNonmain, BoundKind::Quadratic]
                .into_iter()
                .map(|kind| BoundReport::new(kind, g.order(), t, Some(NOT_CERTIFIED.to_string())))
                .collect())
        }
    }
}

/// Exponent vectors of total degree `degree` in `t` variables, lexicographically
/// descending (`x_1^d` first).
pub fn monomials(t: usize, degree: u32) -> Vec<Vec<u32>> {
    fn go(t: usize, left: u32, prefix: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if prefix.len() + 1 == t {
            prefix.push(left);
            out.push(prefix.clone());
            prefix.pop();
            return;
        }
        for e in (0..=left).rev() {
            prefix.push(e);
            go(t, left - e, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    if t > 0 {
        go(t, degree, &mut Vec::with_capacity(t), &mut out);
    }
    out
}

fn factorial(n: u32) -> i64 {
    (1..=i64::from(n)).product()
}

/// Coefficients of `(c . x)^degree` in the basis [`monomials`].
fn power_coefficients(c: &[ExactScalar], basis: &[Vec<u32>], degree: u32) -> Vec<ExactScalar> {
    let total = factorial(degree);
    basis
        .iter()
        .map(|alpha| {
            let multinomial = total / alpha.iter().map(|&a| factorial(a)).product::<i64>();
            alpha
                .iter()
                .zip(c)
                .filter(|(&a, _)| a > 0)
                .fold(ExactScalar::from_int(multinomial), |acc, (&a, ci)| &acc * &ci.pow(a))
        })
        .collect()
}

/// `c_u = (mu I - C)^{-1} s_u` for every vertex, in vertex order.
pub fn linear_forms(p: &StarPartition) -> Vec<Vec<ExactScalar>> {
    (0..p.graph().order())
        .map(|u| p.shift_inverse().mul_vec(&p.s_vector(u)).expect("length t"))
        .collect()
}

fn coefficient_matrix(forms: &[Vec<ExactScalar>], t: usize, degree: u32) -> ExactMatrix {
    let basis = monomials(t, degree);
    let data: Vec<ExactScalar> = forms.iter().flat_map(|c| power_coefficients(c, &basis, degree)).collect();
    ExactMatrix::new(forms.len(), basis.len(), data).expect("single field")
}

fn certified_partition(g: &SignedGraph, mu: &ExactScalar) -> Result<StarPartition, BoundsError> {
    if mu.is_trivial_unit() {
        return Err(BoundsError::TrivialEigenvalue(mu.to_string()));
    }
    let t = codimension(g, mu)?;
    if t > MAX_CERTIFICATE_DIMENSION {
        return Err(BoundsError::SearchSpaceTooLarge {
            what: "star complement order",
            size: t,
            limit: MAX_CERTIFICATE_DIMENSION,
        });
    }
    Ok(starcomp::find_star_set(g, mu)?)
}

#[derive(Clone, Debug, PartialEq)]
pub struct CubicCertificate {
    pub n: usize,
    pub t: usize,
    pub rank: usize,
    pub dim_h3: usize,
    pub independent: bool,
    /// Determinant of the coefficient matrix when it is square.
    pub determinant: Option<ExactScalar>,
}

/// Exact rank of the coefficients of the cubes `<s_u, x>^3`.
pub fn cubic_rank_certificate(g: &SignedGraph, mu: &ExactScalar) -> Result<CubicCertificate, BoundsError> {
    let p = certified_partition(g, mu)?;
    let t = p.t();
    let m = coefficient_matrix(&linear_forms(&p), t, 3);
    let n = g.order();
    let (rank, determinant) = if m.is_square() {
        let det = m.determinant()?;
        let rank = if det.is_zero() { m.rank() } else { n };
        (rank, Some(det))
    } else {
        (m.rank(), None)
    };
    Ok(CubicCertificate { n, t, rank, dim_h3: m.cols(), independent: rank == n, determinant })
}

#[derive(Clone, Debug, PartialEq)]
pub struct QuadraticCertificate {
    pub n: usize,
    pub t: usize,
    pub rank: usize,
    pub dim_h2: usize,
    pub independent: bool,
    /// `-mu^2` is not an eigenvalue of the underlying graph.
    pub hypothesis: bool,
    /// `(<s_u, s_v>^2) = mu^2 I + A_G` entrywise.
    pub gram_identity: bool,
}

/// Exact rank of the coefficients of the squares `<s_u, x>^2`, plus the Gram identity.
pub fn quadratic_rank_certificate(g: &SignedGraph, mu: &ExactScalar) -> Result<QuadraticCertificate, BoundsError> {
    let p = certified_partition(g, mu)?;
    let t = p.t();
    let forms = linear_forms(&p);
    let m = coefficient_matrix(&forms, t, 2);
    let rank = m.rank();
    let n = g.order();
    let mu_sq = mu * mu;
    let s: Vec<Vec<ExactScalar>> = (0..n).map(|u| p.s_vector(u)).collect();
    let gram_identity = (0..n).all(|u| {
        (0..n).all(|v| {
            let value = dot(forms[u].iter(), &s[v]).pow(2);
            let expected = if u == v { mu_sq.clone() } else { ExactScalar::from_int(i64::from(g.sign(u, v).abs())) };
            value == expected
        })
    });
    Ok(QuadraticCertificate {
        n,
        t,
        rank,
        dim_h2: m.cols(),
        independent: rank == n,
        hypothesis: quadratic_hypothesis(g, mu),
        gram_identity,
    })
}

/// First pair `(u, v)` where `<s_u, s_v>` differs from `mu` on the diagonal
/// and from `-A_uv` off it.
pub fn inner_product_table_check(p: &StarPartition) -> Option<(usize, usize)> {
    let n = p.graph().order();
    let forms = linear_forms(p);
    let s: Vec<Vec<ExactScalar>> = (0..n).map(|u| p.s_vector(u)).collect();
    for (u, form) in forms.iter().enumerate() {
        for (v, s_v) in s.iter().enumerate().skip(u) {
            let value = dot(form.iter(), s_v);
            let expected = if u == v { p.mu().clone() } else { ExactScalar::from_int(-i64::from(p.graph().sign(u, v))) };
            if value != expected {
                return Some((u, v));
            }
        }
    }
    None
}

/// For `w` orthogonal to the eigenspace and `q` its restriction to the
/// complement, checks `<s_u, q> = -w_u` for every vertex.
pub fn complement_restriction_check(p: &StarPartition, w: &[ExactScalar]) -> Result<bool, BoundsError> {
    let g = p.graph();
    if w.len() != g.order() {
        return Err(BoundsError::LengthMismatch { expected: g.order(), found: w.len() });
    }
    for x in spectra::eigenspace(g, p.mu()) {
        if !dot(x.iter(), w).is_zero() {
            return Err(BoundsError::NotOrthogonal);
        }
    }
    let q: Vec<ExactScalar> = p.complement().iter().map(|i| w[i].clone()).collect();
    let image = p.shift_inverse().mul_vec(&q)?;
    Ok((0..g.order()).all(|u| dot(p.s_vector(u).iter(), &image) == -&w[u]))
}

/// A basis of the orthogonal complement of the eigenspace of `mu`: exact
/// eigenvectors of the other exact eigenvalues that are rational or lie in
/// the field of `mu`, completed by columns of `A - mu I`.
pub fn orthogonal_complement_basis(g: &SignedGraph, mu: &ExactScalar) -> Result<Vec<Vec<ExactScalar>>, BoundsError> {
    let target = codimension(g, mu)?;
    let report = spectra::spectrum(g)?;
    let mut candidates = Vec::new();
    for (nu, _) in report.exact_eigenvalues() {
        if nu != mu && (nu.as_rational().is_some() || nu.field() == mu.field()) {
            candidates.extend(spectra::eigenspace(g, nu));
        }
    }
    let shifted = spectra::shifted_adjacency(g, mu);
    candidates.extend((0..g.order()).map(|j| shifted.column(j)));
    let mut basis: Vec<Vec<ExactScalar>> = Vec::with_capacity(target);
    for v in candidates {
        if basis.len() == target {
            break;
        }
        basis.push(v);
        let rows: Vec<ExactScalar> = basis.iter().flatten().cloned().collect();
        let m = ExactMatrix::new(basis.len(), g.order(), rows)?;
        if m.rank() < basis.len() {
            basis.pop();
        }
    }
    Ok(basis)
}

/// `C(t+1, 2) < C(t+2, 3) - 1`, which holds from `t = 3` on.
pub fn quadratic_improves(t: usize) -> bool {
    BoundKind::Quadratic.value(t) < BoundKind::CubicNonmain.value(t)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::VertexSet;

    fn quadrangle() -> SignedGraph {
        SignedGraph::build(4, &[(0, 1, -1), (1, 2, 1), (2, 3, 1), (3, 0, 1)]).unwrap()
    }

    fn c4() -> SignedGraph {
        SignedGraph::build(4, &[(0, 1, 1), (1, 2, 1), (2, 3, 1), (3, 0, 1)]).unwrap()
    }

    fn r2() -> ExactScalar {
        ExactScalar::sqrt(2)
    }

    #[test]
    fn bound_values() {
        assert_eq!(BoundKind::Cubic.value(2), BigUint::from(4u32));
        assert_eq!(BoundKind::Cubic.value(8), BigUint::from(120u32));
        assert_eq!(BoundKind::CubicNonmain.value(3), BigUint::from(9u32));
        assert_eq!(BoundKind::Quadratic.value(1), BigUint::from(1u32));
        assert_eq!(BoundKind::Naive.value(2), BigUint::from(10u32));
        assert_eq!(BoundKind::Naive.value(8), BigUint::from(6568u32));
        assert_eq!(BoundKind::Naive.value(1), BigUint::from(3u32));
        assert!(BoundKind::Naive.value(60) > BigUint::from(u64::MAX));
        assert!(!quadratic_improves(2));
        assert!((3..40).all(quadratic_improves));
    }

    #[test]
    fn quadrangle_cubic_attained() {
        for mu in [r2(), -r2()] {
            let r = cubic_bound_check(&quadrangle(), &mu).unwrap();
            assert!(r.applicable && r.holds && r.attained);
            assert_eq!((r.n, r.t), (4, 2));
        }
    }

    #[test]
    fn trivial_mu_not_applicable() {
        let r = cubic_bound_check(&c4(), &ExactScalar::zero()).unwrap();
        assert!(!r.applicable);
        assert!(matches!(cubic_bound_check(&c4(), &ExactScalar::from_int(3)), Err(BoundsError::NotAnEigenvalue(_))));
    }

    #[test]
    fn nonmain_on_unsigned_cycle() {
        let r = nonmain_bound_check(&c4(), &ExactScalar::from_int(-2)).unwrap();
        assert!(r.applicable && r.holds);
        assert_eq!((r.t, r.bound_value.clone()), (3, BigUint::from(9u32)));
        let main = nonmain_bound_check(&c4(), &ExactScalar::from_int(2)).unwrap();
        assert!(!main.applicable);
    }

    #[test]
    fn quadratic_gate() {
        let r = quadratic_bound_check(&quadrangle(), &r2()).unwrap();
        assert!(!r.applicable);
        assert!(!r.holds);
        let edge = SignedGraph::build(2, &[(0, 1, 1)]).unwrap();
        assert!(!quadratic_bound_check(&edge, &ExactScalar::one()).unwrap().applicable);
    }

    #[test]
    fn seidel_shapes() {
        use crate::spectra::EigenValue;
        let desc = |v: i64, m: usize| EigenvalueDescriptor {
            value: EigenValue::Exact(ExactScalar::from_int(v)),
            multiplicity: m,
            is_main: None,
        };
        let report = SpectrumReport { n: 6, descriptors: vec![desc(3, 1), desc(1, 2), desc(-2, 3)] };
        let r = seidel_absolute_check(&report, Some(3)).unwrap();
        assert_eq!(r.bound_value, BigUint::from(9u32));
        assert!(r.applicable && r.holds);
        let unverified = seidel_absolute_check(&report, None).unwrap();
        assert!(!unverified.applicable);
        assert_eq!(unverified.reason.as_deref(), Some("shape holds, net-regularity unverified"));
        let two = SpectrumReport { n: 4, descriptors: vec![desc(2, 2), desc(-2, 2)] };
        assert!(matches!(seidel_absolute_check(&two, None), Err(BoundsError::ShapeMismatch(_))));
        assert!(matches!(seidel_absolute_check(&report, Some(1)), Err(BoundsError::ShapeMismatch(_))));
    }

    #[test]
    fn cubic_certificate_quadrangle() {
        let cert = cubic_rank_certificate(&quadrangle(), &r2()).unwrap();
        assert_eq!((cert.n, cert.dim_h3, cert.rank), (4, 4, 4));
        assert!(cert.independent);
        assert!(!cert.determinant.unwrap().is_zero());
    }

    #[test]
    fn quadratic_certificate_quadrangle() {
        let cert = quadratic_rank_certificate(&quadrangle(), &r2()).unwrap();
        assert!(cert.gram_identity);
        assert!(!cert.hypothesis);
        assert_eq!(cert.dim_h2, 3);
        assert!(!cert.independent);
    }

    #[test]
    fn certificate_rejects_trivial_mu() {
        assert!(matches!(cubic_rank_certificate(&c4(), &ExactScalar::zero()), Err(BoundsError::TrivialEigenvalue(_))));
    }

    #[test]
    fn monomial_basis() {
        let b = monomials(2, 3);
        assert_eq!(b, vec![vec![3, 0], vec![2, 1], vec![1, 2], vec![0, 3]]);
        assert_eq!(monomials(8, 3).len(), 120);
        assert_eq!(monomials(3, 2).len(), 6);
        // (x + y)^3
        let c = vec![ExactScalar::one(), ExactScalar::one()];
        let coeffs = power_coefficients(&c, &b, 3);
        assert_eq!(coeffs, [1, 3, 3, 1].map(ExactScalar::from_int).to_vec());
    }

    #[test]
    fn inner_products_match_table() {
        let p = starcomp::find_star_set(&quadrangle(), &r2()).unwrap();
        assert_eq!(inner_product_table_check(&p), None);
        let p = starcomp::find_star_set(&c4(), &ExactScalar::from_int(-2)).unwrap();
        assert_eq!(inner_product_table_check(&p), None);
    }

    #[test]
    fn complement_restriction() {
        let g = c4();
        let mu = ExactScalar::from_int(-2);
        let p = starcomp::find_star_set(&g, &mu).unwrap();
        let ones = vec![ExactScalar::one(); 4];
        assert!(complement_restriction_check(&p, &ones).unwrap());
        let zero = vec![ExactScalar::zero(); 4];
        assert!(complement_restriction_check(&p, &zero).unwrap());
        let alternating = [1, -1, 1, -1].map(ExactScalar::from_int).to_vec();
        assert_eq!(complement_restriction_check(&p, &alternating), Err(BoundsError::NotOrthogonal));
        let basis = orthogonal_complement_basis(&g, &mu).unwrap();
        assert_eq!(basis.len(), 3);
        for w in &basis {
            assert!(complement_restriction_check(&p, w).unwrap());
        }
    }

    #[test]
    fn net_regular_ones_vector() {
        // every <s_u, j_t> = -1 when the graph is net-regular and mu is not the net-degree
        let g = c4().switch(&VertexSet::new([1], 4).unwrap()).unwrap().switch(&VertexSet::new([1], 4).unwrap()).unwrap();
        let p = starcomp::find_star_set(&g, &ExactScalar::from_int(-2)).unwrap();
        let ones = vec![ExactScalar::one(); p.t()];
        for u in 0..4 {
            assert_eq!(p.form(&p.s_vector(u), &ones), ExactScalar::from_int(-1));
        }
    }

    #[test]
    fn quadrangle_basis_in_surd_field() {
        let basis = orthogonal_complement_basis(&quadrangle(), &r2()).unwrap();
        assert_eq!(basis.len(), 2);
        let p = starcomp::find_star_set(&quadrangle(), &r2()).unwrap();
        for w in &basis {
            assert!(complement_restriction_check(&p, w).unwrap());
        }
    }
}
