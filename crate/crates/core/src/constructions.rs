//! Generators: the signed quadrangle, the E8 positive-root Gram graph and
//! seeded random signed graphs.

use std::collections::HashSet;

use thiserror::Error;

use crate::graph::SignedGraph;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ConstructionError {
    #[error("quadrangle needs an odd number of negative edges, got {0}")]
    EvenNegativeCount(usize),
    #[error("quadrangle has 4 edges, cannot make {0} of them negative")]
    NegativeCountOutOfRange(usize),
    #[error("vector w is orthogonal to a root, so it does not select a positive system")]
    DegenerateDirection,
    #[error("Gram entry {value} at ({i}, {j}) is not in -1..=1")]
    GramEntryOutOfRange { i: usize, j: usize, value: i64 },
    #[error("root {0} and its negative are both (or neither) selected")]
    NotAntipodalSelection(usize),
    #[error("roots {0} and {1} sum to a root that is not selected")]
    NotClosed(usize, usize),
}

/// The 4-cycle `0-1-2-3-0` with its first `neg_count` edges negative.
pub fn quadrangle(neg_count: usize) -> Result<SignedGraph, ConstructionError> {
    if neg_count.is_multiple_of(2) {
        return Err(ConstructionError::EvenNegativeCount(neg_count));
    }
    if neg_count > 4 {
        return Err(ConstructionError::NegativeCountOutOfRange(neg_count));
    }
    let edges: Vec<(usize, usize, i64)> =
        (0..4).map(|i| (i, (i + 1) % 4, if i < neg_count { -1 } else { 1 })).collect();
    Ok(SignedGraph::build(4, &edges).expect("valid 4-cycle"))
}

/// Root vectors stored doubled, so half-integer coordinates become integers
/// and every stored vector has squared norm 8.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RootList {
    pub vectors: Vec<[i8; 8]>,
}

impl RootList {
    pub fn len(&self) -> usize {
        self.vectors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vectors.is_empty()
    }

    /// Inner product of the actual (undoubled) roots `i` and `j`.
    pub fn inner(&self, i: usize, j: usize) -> i64 {
        doubled_dot(&self.vectors[i], &self.vectors[j]) / 4
    }

    /// Checks that exactly one of `r`, `-r` is selected for every root of
    /// `all`, and that the selection is closed under sums that are roots.
    pub fn check_positive_system(&self, all: &RootList) -> Result<(), ConstructionError> {
        let selected: HashSet<[i8; 8]> = self.vectors.iter().copied().collect();
        let roots: HashSet<[i8; 8]> = all.vectors.iter().copied().collect();
        for (i, r) in all.vectors.iter().enumerate() {
            if selected.contains(r) == selected.contains(&negate(r)) {
                return Err(ConstructionError::NotAntipodalSelection(i));
            }
        }
        for (i, x) in self.vectors.iter().enumerate() {
            for (j, y) in self.vectors.iter().enumerate().skip(i + 1) {
                let sum = add(x, y);
                if roots.contains(&sum) && !selected.contains(&sum) {
                    return Err(ConstructionError::NotClosed(i, j));
                }
            }
        }
        Ok(())
    }
}

fn doubled_dot(x: &[i8; 8], y: &[i8; 8]) -> i64 {
    x.iter().zip(y).map(|(&a, &b)| i64::from(a) * i64::from(b)).sum()
}

fn negate(x: &[i8; 8]) -> [i8; 8] {
    x.map(|v| -v)
}

fn add(x: &[i8; 8], y: &[i8; 8]) -> [i8; 8] {
    std::array::from_fn(|i| x[i] + y[i])
}

/// All 240 roots: `+-e_i +- e_j` (112) and `(1/2)(+-1, ..., +-1)` with an even
/// number of plus signs (128).
pub fn e8_roots() -> RootList {
    let mut vectors = Vec::with_capacity(240);
    for i in 0..8 {
        for j in i + 1..8 {
            for si in [2i8, -2] {
                for sj in [2i8, -2] {
                    let mut v = [0i8; 8];
                    v[i] = si;
                    v[j] = sj;
                    vectors.push(v);
                }
            }
        }
    }
    for mask in 0u32..256 {
        if mask.count_ones() % 2 == 0 {
            vectors.push(std::array::from_fn(|i| if mask >> i & 1 == 1 { 1 } else { -1 }));
        }
    }
    RootList { vectors }
}

/// `w = (1, 2, 4, ..., 128)`; no root is orthogonal to it.
pub const DEFAULT_DIRECTION: [i64; 8] = [1, 2, 4, 8, 16, 32, 64, 128];

/// Positive roots for the default direction.
pub fn e8_positive_roots() -> RootList {
    e8_positive_roots_with(DEFAULT_DIRECTION).expect("default direction is generic")
}

/// Roots `r` with `<w, r> > 0`, in the order of [`e8_roots`].
pub fn e8_positive_roots_with(w: [i64; 8]) -> Result<RootList, ConstructionError> {
    let mut vectors = Vec::with_capacity(120);
    for r in e8_roots().vectors {
        let s: i64 = r.iter().zip(&w).map(|(&a, &b)| i64::from(a) * b).sum();
        match s.signum() {
            0 => return Err(ConstructionError::DegenerateDirection),
            1 => vectors.push(r),
            _ => {}
        }
    }
    Ok(RootList { vectors })
}

/// `N^T N - 2I` for the 8 x 120 matrix `N` of positive roots (default direction).
pub fn e8_signed_graph() -> Result<SignedGraph, ConstructionError> {
    gram_graph(&e8_positive_roots())
}

pub fn e8_signed_graph_with(w: [i64; 8]) -> Result<SignedGraph, ConstructionError> {
    gram_graph(&e8_positive_roots_with(w)?)
}

/// Off-diagonal Gram matrix of a root list, checked to be a signed adjacency matrix.
pub fn gram_graph(roots: &RootList) -> Result<SignedGraph, ConstructionError> {
    let n = roots.len();
    let mut edges = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            let value = roots.inner(i, j);
            if !(-1..=1).contains(&value) {
                return Err(ConstructionError::GramEntryOutOfRange { i, j, value });
            }
            if value != 0 {
                edges.push((i, j, value));
            }
        }
    }
    Ok(SignedGraph::build(n, &edges).expect("entries checked"))
}

/// xorshift64* generator.
///
/// State update: `x ^= x >> 12; x ^= x << 25; x ^= x >> 27`, output
/// `x * 0x2545F4914F6CDD1D` (wrapping). A zero seed is replaced by
/// `0x9E3779B97F4A7C15`. Uniform floats are `(output >> 11) / 2^53`.
#[derive(Clone, Debug)]
pub struct XorShift64Star {
    state: u64,
}

impl XorShift64Star {
    pub fn new(seed: u64) -> Self {
        XorShift64Star { state: if seed == 0 { 0x9E37_79B9_7F4A_7C15 } else { seed } }
    }

    pub fn next_u64(&mut self) -> u64 {
        let mut x = self.state;
        x ^= x >> 12;
        x ^= x << 25;
        x ^= x >> 27;
        self.state = x;
        x.wrapping_mul(0x2545_F491_4F6C_DD1D)
    }

    /// Uniform in `[0, 1)`.
    pub fn next_f64(&mut self) -> f64 {
        (self.next_u64() >> 11) as f64 / (1u64 << 53) as f64
    }
}

/// Random signed graph. Pairs `i < j` are visited in lexicographic order;
/// each gets one draw for the edge (`< edge_prob`) and, if an edge was
/// placed, one draw for its sign (`< neg_prob` means negative).
///
/// # Panics
/// If a probability lies outside `[0, 1]`.
pub fn random_signed_graph(n: usize, edge_prob: f64, neg_prob: f64, seed: u64) -> SignedGraph {
    assert!((0.0..=1.0).contains(&edge_prob), "edge probability {edge_prob} outside [0, 1]");
    assert!((0.0..=1.0).contains(&neg_prob), "negative probability {neg_prob} outside [0, 1]");
    let mut rng = XorShift64Star::new(seed);
    let mut edges = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            if rng.next_f64() < edge_prob {
                let sign = if rng.next_f64() < neg_prob { -1 } else { 1 };
                edges.push((i, j, sign));
            }
        }
    }
    SignedGraph::build(n, &edges).expect("pairs are distinct")
}

/// Test corpus: graph `i` has order `2 + i % (max_order - 1)`, edge
/// probability `0.3`, `0.5` or `0.7` by `i % 3`, negative probability `0.5`,
/// and seed `seed + i`.
pub fn random_corpus(count: usize, max_order: usize, seed: u64) -> Vec<SignedGraph> {
    assert!(max_order >= 2, "corpus orders start at 2");
    (0..count)
        .map(|i| {
            let n = 2 + i % (max_order - 1);
            let p = [0.3, 0.5, 0.7][i % 3];
            random_signed_graph(n, p, 0.5, seed.wrapping_add(i as u64))
        })
        .collect()
}
