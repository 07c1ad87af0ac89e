//! Star sets, star complements and the bilinear form `<x, y> = x^T (mu I - C)^{-1} y`.
//!
//! A vertex set `S` of size `k = mult(mu)` is a star set exactly when `mu`
//! is not an eigenvalue of the subgraph induced on the complement. Writing the
//! adjacency matrix as `[[A_S, B^T], [B, C]]`, star sets are characterized by
//! `mu I - A_S = B^T (mu I - C)^{-1} B`, and conversely any family of
//! `{0, +1, -1}` neighbourhood vectors that are pairwise compatible under the
//! form extends `C` to a graph in which `mu` has that many extra dimensions.

use std::fmt;

use thiserror::Error;

use crate::clique::{BitSet, CliqueSearch};
use crate::graph::{GraphError, SignedGraph, VertexSet};
use crate::linalg::{dot, ExactMatrix, ExactScalar, LinalgError};
use crate::spectra;

pub use crate::clique::CliqueLimits;

/// Largest star-complement order for which good vectors are enumerated.
pub const MAX_GOOD_VECTOR_DIMENSION: usize = 20;
/// Largest number of good vectors fed to the clique search.
pub const MAX_GOOD_VECTORS: usize = 10_000;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum StarCompError {
    #[error("{0} is not an eigenvalue")]
    NotAnEigenvalue(String),
    #[error("mu is an eigenvalue of the star complement, so mu I - C is singular")]
    SingularShift,
    #[error("search space too large: {what} = {size} exceeds {limit}")]
    SearchSpaceTooLarge { what: &'static str, size: usize, limit: usize },
    #[error("extension vertices {0} and {1} are incompatible")]
    IncompatiblePair(usize, usize),
    #[error("extension vertex {0} is not a good vector")]
    NotGoodVector(usize),
    #[error("vector length {found} does not match star complement order {expected}")]
    LengthMismatch { expected: usize, found: usize },
    #[error("star set check failed: {0}")]
    Violation(StarSetViolation),
    #[error(transparent)]
    Linalg(#[from] LinalgError),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

/// Why a proposed vertex set is not a star set.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum StarSetViolation {
    WrongSize { expected: usize, found: usize },
    EigenvalueOfComplement,
    /// First entry `(u, v)` (original vertex labels) where the reconstruction identity fails.
    IdentityMismatch { row: usize, col: usize },
}

impl fmt::Display for StarSetViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            StarSetViolation::WrongSize { expected, found } => {
                write!(f, "star set has {found} vertices, multiplicity is {expected}")
            }
            StarSetViolation::EigenvalueOfComplement => write!(f, "mu is an eigenvalue of C"),
            StarSetViolation::IdentityMismatch { row, col } => {
                write!(f, "mu I - A_S differs from B^T (mu I - C)^-1 B at ({row}, {col})")
            }
        }
    }
}

/// A verified star set together with the blocks of the permuted adjacency matrix.
#[derive(Clone, Debug, PartialEq)]
pub struct StarPartition {
    graph: SignedGraph,
    mu: ExactScalar,
    star_set: VertexSet,
    complement: VertexSet,
    a_s: ExactMatrix,
    /// `t x k`; column `p` is the neighbourhood of the `p`-th star vertex in the complement.
    b: ExactMatrix,
    c: ExactMatrix,
    /// `(mu I - C)^{-1}`.
    shift_inverse: ExactMatrix,
}

impl StarPartition {
    pub fn graph(&self) -> &SignedGraph {
        &self.graph
    }

    pub fn mu(&self) -> &ExactScalar {
        &self.mu
    }

    pub fn star_set(&self) -> &VertexSet {
        &self.star_set
    }

    pub fn complement(&self) -> &VertexSet {
        &self.complement
    }

    pub fn a_s(&self) -> &ExactMatrix {
        &self.a_s
    }

    pub fn b(&self) -> &ExactMatrix {
        &self.b
    }

    pub fn c(&self) -> &ExactMatrix {
        &self.c
    }

    pub fn shift_inverse(&self) -> &ExactMatrix {
        &self.shift_inverse
    }

    /// Multiplicity of `mu`.
    pub fn k(&self) -> usize {
        self.star_set.len()
    }

    /// Codimension of the eigenspace, i.e. the star complement order.
    pub fn t(&self) -> usize {
        self.complement.len()
    }

    /// The star complement as a signed graph.
    pub fn complement_graph(&self) -> SignedGraph {
        self.graph.induced(&self.complement).expect("complement is valid")
    }

    /// Column of `(B | C - mu I)` belonging to original vertex `u`.
    pub fn s_vector(&self, u: usize) -> Vec<ExactScalar> {
        if let Ok(p) = self.star_set.as_slice().binary_search(&u) {
            return self.b.column(p);
        }
        let q = self.complement.as_slice().binary_search(&u).expect("vertex in range");
        let mut col = self.c.column(q);
        col[q] = &col[q] - &self.mu;
        col
    }

    /// `<x, y>` for vectors indexed by the complement.
    pub fn form(&self, x: &[ExactScalar], y: &[ExactScalar]) -> ExactScalar {
        let image = self.shift_inverse.mul_vec(y).expect("length t");
        dot(x.iter(), &image)
    }

    /// Neighbourhood vectors of the star vertices, as good vectors over the complement.
    pub fn star_vectors(&self) -> Vec<GoodVector> {
        (0..self.k())
            .map(|p| {
                let b: Vec<i8> = self.b.column(p).iter().map(|x| x.signum()).collect();
                GoodVector::with_inverse(b, &self.shift_inverse)
            })
            .collect()
    }
}

/// `mu I - C`.
fn shift_of(c: &ExactMatrix, mu: &ExactScalar) -> Result<ExactMatrix, StarCompError> {
    Ok(c.negated().shift(&-mu)?)
}

fn shift_inverse(c: &ExactMatrix, mu: &ExactScalar) -> Result<ExactMatrix, StarCompError> {
    shift_of(c, mu)?.inverse().map_err(|e| match e {
        LinalgError::SingularMatrix => StarCompError::SingularShift,
        other => other.into(),
    })
}

/// `x^T (mu I - C)^{-1} y`, via an exact solve.
pub fn bilinear(
    c: &ExactMatrix,
    mu: &ExactScalar,
    x: &[ExactScalar],
    y: &[ExactScalar],
) -> Result<ExactScalar, StarCompError> {
    let t = c.rows();
    for v in [x, y] {
        if v.len() != t {
            return Err(StarCompError::LengthMismatch { expected: t, found: v.len() });
        }
    }
    let rhs = ExactMatrix::column_vector(y.to_vec())?;
    let z = shift_of(c, mu)?.solve(&rhs).map_err(|e| match e {
        LinalgError::SingularMatrix => StarCompError::SingularShift,
        other => other.into(),
    })?;
    Ok(dot(x.iter(), &z.column(0)))
}

fn sub_exact(g: &SignedGraph, rows: &VertexSet, cols: &VertexSet) -> ExactMatrix {
    g.adjacency_exact().submatrix(rows.as_slice(), cols.as_slice())
}

/// Checks both reconstruction conditions exactly and returns the partition.
pub fn verify_star_set(
    g: &SignedGraph,
    mu: &ExactScalar,
    s: &VertexSet,
) -> Result<StarPartition, StarSetViolation> {
    let k = spectra::multiplicity(g, mu);
    if s.len() != k {
        return Err(StarSetViolation::WrongSize { expected: k, found: s.len() });
    }
    let complement = s.complement(g.order());
    let c = sub_exact(g, &complement, &complement);
    let inverse = shift_inverse(&c, mu).map_err(|_| StarSetViolation::EigenvalueOfComplement)?;
    let a_s = sub_exact(g, s, s);
    let b = sub_exact(g, &complement, s);
    // mu I - A_S == B^T (mu I - C)^{-1} B
    let rhs = b.transpose().try_mul(&inverse.try_mul(&b).expect("shapes agree")).expect("shapes agree");
    let lhs = a_s.negated().shift(&-mu).expect("field of mu");
    for i in 0..k {
        for j in 0..k {
            if lhs.get(i, j) != rhs.get(i, j) {
                let labels = s.as_slice();
                return Err(StarSetViolation::IdentityMismatch { row: labels[i], col: labels[j] });
            }
        }
    }
    Ok(StarPartition { graph: g.clone(), mu: mu.clone(), star_set: s.clone(), complement, a_s, b, c, shift_inverse: inverse })
}

/// Greedy star set: vertices are scanned in increasing order and moved into
/// the star set whenever deleting them lowers the multiplicity of `mu` in the
/// remaining graph by one.
///
/// Deleting `v` lowers the multiplicity exactly when some eigenvector of the
/// remaining graph is nonzero at `v`, and the eigenvectors of the smaller
/// graph are then those that vanish at `v`. Both facts let the scan run on an
/// eigenspace basis instead of recomputing ranks.
pub fn find_star_set(g: &SignedGraph, mu: &ExactScalar) -> Result<StarPartition, StarCompError> {
    let mut basis = spectra::eigenspace(g, mu);
    if basis.is_empty() {
        return Err(StarCompError::NotAnEigenvalue(mu.to_string()));
    }
    let mut star = Vec::with_capacity(basis.len());
    for v in 0..g.order() {
        if basis.is_empty() {
            break;
        }
        let Some(p) = basis.iter().position(|x| !x[v].is_zero()) else {
            continue;
        };
        let pivot = basis.swap_remove(p);
        for x in basis.iter_mut() {
            if x[v].is_zero() {
                continue;
            }
            let factor = &x[v] / &pivot[v];
            for (xi, pi) in x.iter_mut().zip(&pivot) {
                if !pi.is_zero() {
                    *xi = &*xi - &(&factor * pi);
                }
            }
        }
        star.push(v);
    }
    let set = VertexSet::new(star, g.order())?;
    verify_star_set(g, mu, &set).map_err(StarCompError::Violation)
}

/// A candidate neighbourhood `b` over the star complement with `<b, b> = mu`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GoodVector {
    pub b: Vec<i8>,
    /// `(mu I - C)^{-1} b`.
    pub image: Vec<ExactScalar>,
}

impl GoodVector {
    fn with_inverse(b: Vec<i8>, inverse: &ExactMatrix) -> Self {
        let as_exact: Vec<ExactScalar> = b.iter().map(|&x| ExactScalar::from_int(i64::from(x))).collect();
        let image = inverse.mul_vec(&as_exact).expect("length t");
        GoodVector { b, image }
    }

    /// `<self, other>`.
    pub fn form(&self, other: &GoodVector) -> ExactScalar {
        self.b.iter().zip(&other.image).fold(ExactScalar::zero(), |acc, (&x, y)| match x {
            1 => &acc + y,
            -1 => &acc - y,
            _ => acc,
        })
    }
}

/// Relation between two extension vertices implied by their form value.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Compatibility {
    Incompatible,
    NonEdge,
    PositiveEdge,
    NegativeEdge,
}

impl Compatibility {
    /// Adjacency entry for a compatible pair.
    pub fn sign(self) -> Option<i8> {
        match self {
            Compatibility::Incompatible => None,
            Compatibility::NonEdge => Some(0),
            Compatibility::PositiveEdge => Some(1),
            Compatibility::NegativeEdge => Some(-1),
        }
    }

    fn from_value(x: &ExactScalar) -> Self {
        match x.as_rational() {
            Some(_) if x.is_zero() => Compatibility::NonEdge,
            Some(_) if x.is_one() => Compatibility::NegativeEdge,
            Some(_) if (-x).is_one() => Compatibility::PositiveEdge,
            _ => Compatibility::Incompatible,
        }
    }
}

impl fmt::Display for Compatibility {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Compatibility::Incompatible => "incompatible",
            Compatibility::NonEdge => "nonedge",
            Compatibility::PositiveEdge => "positive-edge",
            Compatibility::NegativeEdge => "negative-edge",
        })
    }
}

/// `<b_u, b_v>` = 0, -1, +1 gives a non-edge, positive edge, negative edge.
pub fn compatibility(u: &GoodVector, v: &GoodVector) -> Compatibility {
    Compatibility::from_value(&u.form(v))
}

fn float_matrix(m: &ExactMatrix) -> Vec<Vec<f64>> {
    (0..m.rows()).map(|i| (0..m.cols()).map(|j| m.get(i, j).to_f64()).collect()).collect()
}

const FLOAT_SCREEN: f64 = 1e-6;

/// All nonzero `b` in `{-1, 0, 1}^t` with `<b, b> = mu`, in lexicographic order.
pub fn good_vectors(c: &ExactMatrix, mu: &ExactScalar) -> Result<Vec<GoodVector>, StarCompError> {
    let t = c.rows();
    if t > MAX_GOOD_VECTOR_DIMENSION {
        return Err(StarCompError::SearchSpaceTooLarge { what: "star complement order", size: t, limit: MAX_GOOD_VECTOR_DIMENSION });
    }
    let inverse = shift_inverse(c, mu)?;
    let approx = float_matrix(&inverse);
    let target = mu.to_f64();
    let mut out = Vec::new();
    let mut b = vec![-1i8; t];
    loop {
        if b.iter().any(|&x| x != 0) {
            // floating screen, confirmed exactly below
            let value: f64 = (0..t)
                .filter(|&i| b[i] != 0)
                .map(|i| (0..t).filter(|&j| b[j] != 0).map(|j| f64::from(b[i] * b[j]) * approx[i][j]).sum::<f64>())
                .sum();
            if (value - target).abs() <= FLOAT_SCREEN * (1.0 + target.abs()) {
                let candidate = GoodVector::with_inverse(b.clone(), &inverse);
                if &candidate.form(&candidate) == mu {
                    out.push(candidate);
                }
            }
        }
        // advance in lexicographic order -1 < 0 < 1
        let Some(pos) = b.iter().rposition(|&x| x < 1) else {
            break;
        };
        b[pos] += 1;
        for x in &mut b[pos + 1..] {
            *x = -1;
        }
    }
    Ok(out)
}

/// Good vectors and the maximal cliques of their compatibility graph.
#[derive(Clone, Debug, PartialEq)]
pub struct ExtensionCatalog {
    pub good_vectors: Vec<GoodVector>,
    /// Indices into `good_vectors`, each sorted; the list is sorted lexicographically.
    pub cliques: Vec<Vec<usize>>,
    pub truncated: bool,
}

impl ExtensionCatalog {
    pub fn clique_vectors(&self, i: usize) -> Vec<GoodVector> {
        self.cliques[i].iter().map(|&j| self.good_vectors[j].clone()).collect()
    }
}

/// Screens a pair in floating point before the exact form evaluation.
fn compatible_pair(u: &GoodVector, v: &GoodVector, v_approx: &[f64]) -> bool {
    let value: f64 = u.b.iter().zip(v_approx).map(|(&x, y)| f64::from(x) * y).sum();
    let near = |target: f64| (value - target).abs() <= FLOAT_SCREEN;
    (near(0.0) || near(1.0) || near(-1.0)) && compatibility(u, v) != Compatibility::Incompatible
}

/// Maximal extensions of a star complement, by clique search over good vectors.
pub fn max_extensions(
    c_graph: &SignedGraph,
    mu: &ExactScalar,
    limits: CliqueLimits,
) -> Result<ExtensionCatalog, StarCompError> {
    let good = good_vectors(&c_graph.adjacency_exact(), mu)?;
    if good.len() > MAX_GOOD_VECTORS {
        return Err(StarCompError::SearchSpaceTooLarge { what: "good vectors", size: good.len(), limit: MAX_GOOD_VECTORS });
    }
    if good.is_empty() {
        return Ok(ExtensionCatalog { good_vectors: good, cliques: Vec::new(), truncated: false });
    }
    let approx: Vec<Vec<f64>> = good.iter().map(|g| g.image.iter().map(ExactScalar::to_f64).collect()).collect();
    let m = good.len();
    let mut adjacency = vec![BitSet::new(m); m];
    for i in 0..m {
        for j in i + 1..m {
            if compatible_pair(&good[i], &good[j], &approx[j]) {
                adjacency[i].insert(j);
                adjacency[j].insert(i);
            }
        }
    }
    let search = CliqueSearch::run(&adjacency, limits);
    Ok(ExtensionCatalog { good_vectors: good, cliques: search.cliques, truncated: search.truncated })
}

/// Builds the signed graph whose star complement is `c_graph` and whose star
/// vertices have the neighbourhoods in `clique`.
///
/// Vertices `0..t` are the complement, vertices `t..t+k` the clique members
/// sorted lexicographically by neighbourhood vector.
pub fn realize_extension(
    c_graph: &SignedGraph,
    mu: &ExactScalar,
    clique: &[GoodVector],
) -> Result<StarPartition, StarCompError> {
    let t = c_graph.order();
    let inverse = shift_inverse(&c_graph.adjacency_exact(), mu)?;
    let mut members: Vec<GoodVector> = clique
        .iter()
        .map(|v| {
            if v.b.len() != t {
                return Err(StarCompError::LengthMismatch { expected: t, found: v.b.len() });
            }
            Ok(GoodVector::with_inverse(v.b.clone(), &inverse))
        })
        .collect::<Result<_, _>>()?;
    members.sort_by(|x, y| x.b.cmp(&y.b));
    let k = members.len();
    let mut edges: Vec<(usize, usize, i64)> =
        c_graph.edges().into_iter().map(|(u, v, s)| (u, v, i64::from(s))).collect();
    for (p, u) in members.iter().enumerate() {
        if &u.form(u) != mu {
            return Err(StarCompError::NotGoodVector(p));
        }
        edges.extend(u.b.iter().enumerate().filter(|(_, &x)| x != 0).map(|(i, &x)| (t + p, i, i64::from(x))));
        for (q, v) in members.iter().enumerate().skip(p + 1) {
            match compatibility(u, v).sign() {
                None => return Err(StarCompError::IncompatiblePair(p, q)),
                Some(0) => {}
                Some(s) => edges.push((t + p, t + q, i64::from(s))),
            }
        }
    }
    let g = SignedGraph::build(t + k, &edges)?;
    let star = VertexSet::new(t..t + k, t + k)?;
    verify_star_set(&g, mu, &star).map_err(StarCompError::Violation)
}
