//! Strongly regular signed graphs: parameter extraction, the `2c = a + b`
//! consequence, eigenvalue counting and net-regular switching witnesses.

use std::fmt;

use num_traits::{Signed, ToPrimitive};
use rayon::prelude::*;
use thiserror::Error;

use crate::graph::{SignedGraph, VertexSet};
use crate::linalg::ExactScalar;
use crate::spectra::{self, SpectraError};

/// Default order up to which all switching sets are tried.
pub const DEFAULT_SEARCH_LIMIT: usize = 20;

/// Parameters of a net-regular signed graph attaining the non-main cubic
/// bound, in terms of expansion coefficients `beta`, `gamma` and the net-degree
/// `s`. Shown in reports only; the coefficients are not computable from the graph.
pub const EXTREMAL_PARAMETER_FORMULAS: &str = "a = (6*beta*mu - 2 + s + 3*gamma*s)/(3*beta), \
     b = (-6*beta*mu - 2 - s + 3*gamma*s)/(3*beta), c = (3*gamma*s - 2)/(3*beta)";

#[derive(Debug, Error, Clone, PartialEq)]
pub enum SrgError {
    #[error("vertices must differ, got {0} twice")]
    SameVertex(usize),
    #[error("vertex {vertex} out of range for order {n}")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("no {0} pairs, so the parameter is undefined")]
    VacuousClass(PairClass),
    #[error("precondition failed: {0}")]
    PreconditionFailed(String),
    #[error(transparent)]
    Spectra(#[from] SpectraError),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum PairClass {
    PositiveEdge,
    NegativeEdge,
    NonAdjacent,
}

impl fmt::Display for PairClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            PairClass::PositiveEdge => "positive-edge",
            PairClass::NegativeEdge => "negative-edge",
            PairClass::NonAdjacent => "non-adjacent",
        })
    }
}

/// `sum over common neighbours u of sigma(ui) sigma(uj)`, i.e. `(A^2)_ij`.
pub fn signed_common_sum(g: &SignedGraph, i: usize, j: usize) -> Result<i64, SrgError> {
    let n = g.order();
    for vertex in [i, j] {
        if vertex >= n {
            return Err(SrgError::VertexOutOfRange { vertex, n });
        }
    }
    if i == j {
        return Err(SrgError::SameVertex(i));
    }
    let sum = g
        .neighbours(i)
        .filter(|&u| g.sign(u, j) != 0)
        .map(|u| i64::from(g.sign(u, i)) * i64::from(g.sign(u, j)))
        .sum();
    debug_assert_eq!(sum, g.square_entry(i, j));
    Ok(sum)
}

/// `None` marks a pair class with no members.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SrgParameters {
    pub degree: usize,
    /// Present when the graph itself (not just its switching class) is net-regular.
    pub net_degree: Option<i64>,
    pub a: Option<i64>,
    pub b: Option<i64>,
    pub c: Option<i64>,
}

impl SrgParameters {
    pub fn get(&self, class: PairClass) -> Option<i64> {
        match class {
            PairClass::PositiveEdge => self.a,
            PairClass::NegativeEdge => self.b,
            PairClass::NonAdjacent => self.c,
        }
    }

    pub fn vacuous_classes(&self) -> Vec<PairClass> {
        [PairClass::PositiveEdge, PairClass::NegativeEdge, PairClass::NonAdjacent]
            .into_iter()
            .filter(|&c| self.get(c).is_none())
            .collect()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SrgRejection {
    HomogeneousComplete,
    Edgeless,
    NotRegular,
    /// Two pairs of the same class with different signed common sums.
    NotConstant { class: PairClass, first: (usize, usize, i64), second: (usize, usize, i64) },
}

impl fmt::Display for SrgRejection {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SrgRejection::HomogeneousComplete => write!(f, "homogeneous complete graph"),
            SrgRejection::Edgeless => write!(f, "no edges"),
            SrgRejection::NotRegular => write!(f, "not regular"),
            SrgRejection::NotConstant { class, first, second } => write!(
                f,
                "{class} pairs ({}, {}) and ({}, {}) have signed common sums {} and {}",
                first.0, first.1, second.0, second.1, first.2, second.2
            ),
        }
    }
}

fn class_of(g: &SignedGraph, i: usize, j: usize) -> PairClass {
    match g.sign(i, j) {
        1 => PairClass::PositiveEdge,
        -1 => PairClass::NegativeEdge,
        _ => PairClass::NonAdjacent,
    }
}

/// Checks the strong-regularity conditions on the labelled graph.
pub fn srg_check(g: &SignedGraph) -> Result<SrgParameters, SrgRejection> {
    if g.edge_count() == 0 {
        return Err(SrgRejection::Edgeless);
    }
    if g.is_complete() && g.is_homogeneous() {
        return Err(SrgRejection::HomogeneousComplete);
    }
    if !g.is_regular() {
        return Err(SrgRejection::NotRegular);
    }
    let mut seen: [Option<(usize, usize, i64)>; 3] = [None; 3];
    let n = g.order();
    for i in 0..n {
        for j in i + 1..n {
            let class = class_of(g, i, j);
            let value = g.square_entry(i, j);
            let slot = &mut seen[class as usize];
            match *slot {
                None => *slot = Some((i, j, value)),
                Some(first) if first.2 != value => {
                    return Err(SrgRejection::NotConstant { class, first, second: (i, j, value) })
                }
                Some(_) => {}
            }
        }
    }
    Ok(SrgParameters {
        degree: g.degrees().first().copied().unwrap_or(0),
        net_degree: g.is_net_regular(),
        a: seen[0].map(|s| s.2),
        b: seen[1].map(|s| s.2),
        c: seen[2].map(|s| s.2),
    })
}

/// `2c = a + b`; errors on the first vacuous class among `a`, `b`, `c`.
pub fn mean_parameter_check(p: &SrgParameters) -> Result<bool, SrgError> {
    let a = p.a.ok_or(SrgError::VacuousClass(PairClass::PositiveEdge))?;
    let b = p.b.ok_or(SrgError::VacuousClass(PairClass::NegativeEdge))?;
    let c = p.c.ok_or(SrgError::VacuousClass(PairClass::NonAdjacent))?;
    Ok(2 * c == a + b)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum EigenvalueCount {
    Two,
    /// Three distinct eigenvalues, the net-degree being simple.
    ThreeWithSimpleNetDegree,
    Violation { distinct: usize },
}

impl fmt::Display for EigenvalueCount {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            EigenvalueCount::Two => write!(f, "two-eigenvalues"),
            EigenvalueCount::ThreeWithSimpleNetDegree => write!(f, "three-with-simple-net-degree"),
            EigenvalueCount::Violation { distinct } => write!(f, "violation ({distinct} distinct eigenvalues)"),
        }
    }
}

/// Classifies the spectrum of a net-regular strongly regular signed graph.
///
/// A vacuous class leaves `2c = a + b` undecidable and does not fail the
/// precondition; a decidable `2c != a + b` does.
pub fn eigenvalue_count_check(g: &SignedGraph) -> Result<EigenvalueCount, SrgError> {
    let params = srg_check(g).map_err(|r| SrgError::PreconditionFailed(format!("not strongly regular: {r}")))?;
    match mean_parameter_check(&params) {
        Ok(false) => return Err(SrgError::PreconditionFailed("2c != a + b".into())),
        Ok(true) | Err(SrgError::VacuousClass(_)) => {}
        Err(e) => return Err(e),
    }
    let rho = params.net_degree.ok_or_else(|| {
        SrgError::PreconditionFailed(format!("not net-regular, net-degrees {:?}", g.net_degrees()))
    })?;
    let report = spectra::spectrum(g)?;
    let distinct = report.descriptors.len();
    let rho = ExactScalar::from_int(rho);
    Ok(match distinct {
        2 => EigenvalueCount::Two,
        3 if report.multiplicity_of(&rho) == 1 => EigenvalueCount::ThreeWithSimpleNetDegree,
        _ => EigenvalueCount::Violation { distinct },
    })
}

/// A switching set `U` (never containing vertex 0) such that switching `g`
/// at `U` gives a net-regular graph, together with its net-degree.
///
/// Simple integer eigenvalues are tried first: their eigenvector is a
/// multiple of a `+-1` vector exactly when its sign pattern is a witness.
/// Otherwise all `2^(n-1)` sets are tried when `n <= search_limit`.
pub fn net_regular_witness(g: &SignedGraph, search_limit: usize) -> Option<(VertexSet, i64)> {
    let n = g.order();
    if let Some(rho) = g.is_net_regular() {
        return Some((VertexSet::empty(), rho));
    }
    if let Ok(report) = spectra::spectrum(g) {
        for (mu, mult) in report.exact_eigenvalues() {
            if mult != 1 {
                continue;
            }
            let Some(rho) = mu.as_rational().filter(|r| r.is_integer()).and_then(|r| r.to_integer().to_i64()) else {
                continue;
            };
            let x = spectra::eigenspace(g, mu).pop().expect("simple eigenvalue");
            let base = x[0].as_rational().expect("rational eigenvector").abs();
            if x.iter().all(|v| v.as_rational().is_some_and(|r| r.abs() == base)) {
                let set = VertexSet::new((1..n).filter(|&i| x[i].signum() != x[0].signum()), n).expect("in range");
                return Some((set, rho));
            }
        }
    }
    if n > search_limit || n >= 64 {
        return None;
    }
    let adjacency: Vec<Vec<i64>> = g.adjacency();
    let found = (0u64..1 << (n - 1)).into_par_iter().find_first(|&mask| {
        let s = |i: usize| if i > 0 && mask >> (i - 1) & 1 == 1 { -1i64 } else { 1 };
        let net = |i: usize| s(i) * (0..n).map(|j| adjacency[i][j] * s(j)).sum::<i64>();
        let rho = net(0);
        (1..n).all(|i| net(i) == rho)
    })?;
    let set = VertexSet::new((1..n).filter(|&i| mask_bit(found, i)), n).expect("in range");
    let rho = g.switch(&set).expect("valid set").is_net_regular().expect("witness is net-regular");
    Some((set, rho))
}

fn mask_bit(mask: u64, i: usize) -> bool {
    mask >> (i - 1) & 1 == 1
}
