//! Signed graphs: adjacency with entries in {-1, 0, +1}, switching, negation,
//! degree queries, induced subgraphs.

use std::fmt;

use thiserror::Error;

use crate::linalg::{ExactMatrix, ExactScalar};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GraphError {
    #[error("edge {u}-{v} appears more than once")]
    DuplicateEdge { u: usize, v: usize },
    #[error("loop at vertex {0}")]
    LoopEdge(usize),
    #[error("vertex {vertex} out of range for {n} vertices")]
    IndexOutOfRange { vertex: usize, n: usize },
    #[error("vertex {0} listed twice")]
    DuplicateVertex(usize),
    #[error("edge {u}-{v} has sign {sign}, expected +1 or -1")]
    InvalidSign { u: usize, v: usize, sign: i64 },
    #[error("adjacency matrix is not symmetric at ({u}, {v})")]
    Asymmetric { u: usize, v: usize },
    #[error("line {line}: {message} (token `{token}`)")]
    Parse { line: usize, token: String, message: String },
}

/// Sorted set of distinct vertex indices.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct VertexSet(Vec<usize>);

impl VertexSet {
    pub fn new(members: impl IntoIterator<Item = usize>, n: usize) -> Result<Self, GraphError> {
        let mut v: Vec<usize> = members.into_iter().collect();
        v.sort_unstable();
        if let Some(w) = v.windows(2).find(|w| w[0] == w[1]) {
            return Err(GraphError::DuplicateVertex(w[0]));
        }
        if let Some(&last) = v.last() {
            if last >= n {
                return Err(GraphError::IndexOutOfRange { vertex: last, n });
            }
        }
        Ok(VertexSet(v))
    }

    pub fn empty() -> Self {
        VertexSet(Vec::new())
    }

    pub fn full(n: usize) -> Self {
        VertexSet((0..n).collect())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, v: usize) -> bool {
        self.0.binary_search(&v).is_ok()
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.0.iter().copied()
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.0
    }

    /// Vertices of `0..n` not in the set.
    pub fn complement(&self, n: usize) -> Self {
        VertexSet((0..n).filter(|&v| !self.contains(v)).collect())
    }

    pub fn symmetric_difference(&self, other: &Self) -> Self {
        let mut v: Vec<usize> = self.iter().filter(|&x| !other.contains(x)).collect();
        v.extend(other.iter().filter(|&x| !self.contains(x)));
        v.sort_unstable();
        VertexSet(v)
    }

    fn check(&self, n: usize) -> Result<(), GraphError> {
        match self.0.last() {
            Some(&last) if last >= n => Err(GraphError::IndexOutOfRange { vertex: last, n }),
            _ => Ok(()),
        }
    }
}

impl fmt::Display for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(ToString::to_string).collect();
        write!(f, "{{{}}}", parts.join(","))
    }
}

/// A simple signed graph on vertices `0..n`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SignedGraph {
    n: usize,
    adj: Vec<i8>,
}

impl SignedGraph {
    pub fn empty(n: usize) -> Self {
        SignedGraph { n, adj: vec![0; n * n] }
    }

    /// Builds from `(u, v, sign)` triples; each unordered pair at most once.
    pub fn build(n: usize, edges: &[(usize, usize, i64)]) -> Result<Self, GraphError> {
        let mut g = Self::empty(n);
        for &(u, v, sign) in edges {
            for x in [u, v] {
                if x >= n {
                    return Err(GraphError::IndexOutOfRange { vertex: x, n });
                }
            }
            if u == v {
                return Err(GraphError::LoopEdge(u));
            }
            if sign != 1 && sign != -1 {
                return Err(GraphError::InvalidSign { u, v, sign });
            }
            if g.sign(u, v) != 0 {
                return Err(GraphError::DuplicateEdge { u: u.min(v), v: u.max(v) });
            }
            g.set(u, v, sign as i8);
        }
        Ok(g)
    }

    /// From a full symmetric matrix with zero diagonal and entries in {-1,0,1}.
    pub fn from_matrix(rows: &[Vec<i64>]) -> Result<Self, GraphError> {
        let n = rows.len();
        let mut edges = Vec::new();
        for (i, row) in rows.iter().enumerate() {
            if row.len() != n {
                return Err(GraphError::IndexOutOfRange { vertex: row.len().saturating_sub(1), n });
            }
            if row[i] != 0 {
                return Err(GraphError::LoopEdge(i));
            }
            for j in i + 1..n {
                if row[j] != rows[j][i] {
                    return Err(GraphError::Asymmetric { u: i, v: j });
                }
                if row[j] != 0 {
                    edges.push((i, j, row[j]));
                }
            }
        }
        Self::build(n, &edges)
    }

    fn set(&mut self, u: usize, v: usize, s: i8) {
        self.adj[u * self.n + v] = s;
        self.adj[v * self.n + u] = s;
    }

    pub fn order(&self) -> usize {
        self.n
    }

    /// Adjacency entry: +1, -1 or 0.
    pub fn sign(&self, u: usize, v: usize) -> i8 {
        self.adj[u * self.n + v]
    }

    pub fn row(&self, u: usize) -> &[i8] {
        &self.adj[u * self.n..(u + 1) * self.n]
    }

    pub fn neighbours(&self, u: usize) -> impl Iterator<Item = usize> + '_ {
        self.row(u).iter().enumerate().filter(|(_, &s)| s != 0).map(|(v, _)| v)
    }

    /// Edges `(u, v, sign)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> Vec<(usize, usize, i8)> {
        (0..self.n)
            .flat_map(|u| (u + 1..self.n).map(move |v| (u, v)))
            .filter_map(|(u, v)| match self.sign(u, v) {
                0 => None,
                s => Some((u, v, s)),
            })
            .collect()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().filter(|&&s| s != 0).count() / 2
    }

    /// Reverses the sign of every edge with exactly one end in `set`.
    pub fn switch(&self, set: &VertexSet) -> Result<Self, GraphError> {
        set.check(self.n)?;
        let mut side = vec![false; self.n];
        for v in set.iter() {
            side[v] = true;
        }
        let mut g = self.clone();
        for u in 0..self.n {
            for v in 0..self.n {
                if side[u] != side[v] {
                    g.adj[u * self.n + v] = -self.adj[u * self.n + v];
                }
            }
        }
        Ok(g)
    }

    pub fn negation(&self) -> Self {
        SignedGraph { n: self.n, adj: self.adj.iter().map(|&s| -s).collect() }
    }

    pub fn underlying(&self) -> Self {
        SignedGraph { n: self.n, adj: self.adj.iter().map(|&s| s.abs()).collect() }
    }

    pub fn degrees(&self) -> Vec<usize> {
        (0..self.n).map(|u| self.row(u).iter().filter(|&&s| s != 0).count()).collect()
    }

    pub fn net_degrees(&self) -> Vec<i64> {
        (0..self.n).map(|u| self.row(u).iter().map(|&s| i64::from(s)).sum()).collect()
    }

    pub fn is_regular(&self) -> bool {
        self.degrees().windows(2).all(|w| w[0] == w[1])
    }

    /// The common net-degree, if constant. The empty graph on zero vertices has none.
    pub fn is_net_regular(&self) -> Option<i64> {
        let nd = self.net_degrees();
        let first = *nd.first()?;
        nd.iter().all(|&d| d == first).then_some(first)
    }

    /// All edges share one sign (vacuously true with no edges).
    pub fn is_homogeneous(&self) -> bool {
        let mut signs = self.adj.iter().filter(|&&s| s != 0);
        match signs.next() {
            None => true,
            Some(&first) => signs.all(|&s| s == first),
        }
    }

    pub fn is_complete(&self) -> bool {
        self.edge_count() == self.n * self.n.saturating_sub(1) / 2
    }

    /// Principal subgraph on `keep`, reindexed in increasing order.
    pub fn induced(&self, keep: &VertexSet) -> Result<Self, GraphError> {
        keep.check(self.n)?;
        let k = keep.len();
        let idx = keep.as_slice();
        let mut g = Self::empty(k);
        for a in 0..k {
            for b in 0..k {
                g.adj[a * k + b] = self.sign(idx[a], idx[b]);
            }
        }
        Ok(g)
    }

    /// Relabels vertices: vertex `order[i]` of `self` becomes vertex `i`.
    pub fn permuted(&self, order: &[usize]) -> Self {
        debug_assert_eq!(order.len(), self.n);
        let mut g = Self::empty(self.n);
        for (a, &u) in order.iter().enumerate() {
            for (b, &v) in order.iter().enumerate() {
                g.adj[a * self.n + b] = self.sign(u, v);
            }
        }
        g
    }

    pub fn adjacency(&self) -> Vec<Vec<i64>> {
        (0..self.n).map(|u| self.row(u).iter().map(|&s| i64::from(s)).collect()).collect()
    }

    pub fn adjacency_exact(&self) -> ExactMatrix {
        ExactMatrix::from_fn(self.n, self.n, |i, j| ExactScalar::from_int(i64::from(self.sign(i, j))))
            .expect("integer entries")
    }

    /// `(A^2)[i][j]`.
    pub fn square_entry(&self, i: usize, j: usize) -> i64 {
        self.row(i).iter().zip(self.row(j)).map(|(&a, &b)| i64::from(a) * i64::from(b)).sum()
    }

    /// Serializes in the text format: `n m`, then one `u v s` line per edge, sorted.
    pub fn to_text(&self) -> String {
        let edges = self.edges();
        let mut out = format!("{} {}\n", self.n, edges.len());
        for (u, v, s) in edges {
            out.push_str(&format!("{u} {v} {}\n", if s > 0 { "+1" } else { "-1" }));
        }
        out
    }

    /// Parses the text format; `#` lines and blank lines are skipped.
    pub fn parse(text: &str) -> Result<Self, GraphError> {
        let mut lines = text
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.trim()))
            .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));
        let parse_err = |line: usize, token: &str, message: &str| GraphError::Parse {
            line,
            token: token.to_string(),
            message: message.to_string(),
        };
        let (hline, header) = lines.next().ok_or_else(|| parse_err(0, "", "missing header `n m`"))?;
        let fields: Vec<&str> = header.split_whitespace().collect();
        if fields.len() != 2 {
            return Err(parse_err(hline, header, "header must be `n m`"));
        }
        let count = |tok: &str| tok.parse::<usize>().map_err(|_| parse_err(hline, tok, "expected a nonnegative integer"));
        let (n, m) = (count(fields[0])?, count(fields[1])?);
        let mut edges = Vec::with_capacity(m);
        for (line, body) in lines.by_ref() {
            let toks: Vec<&str> = body.split_whitespace().collect();
            if toks.len() != 3 {
                return Err(parse_err(line, body, "edge lines must be `u v s`"));
            }
            let vertex = |tok: &str| tok.parse::<usize>().map_err(|_| parse_err(line, tok, "expected a vertex index"));
            let (u, v) = (vertex(toks[0])?, vertex(toks[1])?);
            let sign = match toks[2] {
                "+1" | "1" => 1,
                "-1" => -1,
                other => return Err(parse_err(line, other, "sign must be +1 or -1")),
            };
            if edges.len() == m {
                return Err(parse_err(line, body, &format!("more than the declared {m} edges")));
            }
            edges.push((u, v, sign));
        }
        if edges.len() != m {
            return Err(parse_err(hline, header, &format!("declared {m} edges, found {}", edges.len())));
        }
        Self::build(n, &edges)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn quadrangle() -> SignedGraph {
        SignedGraph::build(4, &[(0, 1, -1), (1, 2, 1), (2, 3, 1), (3, 0, 1)]).unwrap()
    }

    fn c4() -> SignedGraph {
        SignedGraph::build(4, &[(0, 1, 1), (1, 2, 1), (2, 3, 1), (3, 0, 1)]).unwrap()
    }

    fn set(v: &[usize], n: usize) -> VertexSet {
        VertexSet::new(v.iter().copied(), n).unwrap()
    }

    #[test]
    fn build_examples() {
        let q = quadrangle();
        assert_eq!(q.sign(0, 1), -1);
        assert_eq!(q.sign(1, 0), -1);
        assert_eq!(q.sign(0, 2), 0);
        assert_eq!(SignedGraph::build(3, &[]).unwrap().adjacency(), vec![vec![0; 3]; 3]);
        assert_eq!(SignedGraph::build(2, &[(0, 1, 1), (1, 0, -1)]), Err(GraphError::DuplicateEdge { u: 0, v: 1 }));
        assert_eq!(SignedGraph::build(2, &[(1, 1, 1)]), Err(GraphError::LoopEdge(1)));
        assert_eq!(SignedGraph::build(2, &[(0, 2, 1)]), Err(GraphError::IndexOutOfRange { vertex: 2, n: 2 }));
        assert!(matches!(SignedGraph::build(2, &[(0, 1, 2)]), Err(GraphError::InvalidSign { .. })));
    }

    #[test]
    fn switching() {
        let q = quadrangle();
        assert_eq!(q.switch(&VertexSet::empty()).unwrap(), q);
        assert_eq!(q.switch(&VertexSet::full(4)).unwrap(), q);
        let s = q.switch(&set(&[0], 4)).unwrap();
        assert_eq!(s.sign(0, 1), 1);
        assert_eq!(s.sign(0, 3), -1);
        assert_eq!(s.sign(1, 2), 1);
        assert!(q.switch(&set(&[5], 6)).is_err());
    }

    #[test]
    fn negation_and_underlying() {
        let tri = SignedGraph::build(3, &[(0, 1, 1), (1, 2, 1), (0, 2, 1)]).unwrap();
        assert!(tri.negation().edges().iter().all(|e| e.2 == -1));
        assert_eq!(tri.negation().negation(), tri);
        assert_eq!(quadrangle().underlying(), c4());
        assert_eq!(c4().underlying(), c4());
        assert_eq!(quadrangle().underlying(), quadrangle().negation().underlying());
    }

    #[test]
    fn degrees() {
        assert_eq!(c4().net_degrees(), vec![2, 2, 2, 2]);
        assert_eq!(c4().is_net_regular(), Some(2));
        assert_eq!(quadrangle().net_degrees(), vec![0, 0, 2, 2]);
        assert_eq!(quadrangle().is_net_regular(), None);
        assert!(quadrangle().is_regular());
        assert_eq!(quadrangle().degrees(), vec![2; 4]);
    }

    #[test]
    fn induced_subgraphs() {
        let q = quadrangle();
        assert_eq!(q.induced(&VertexSet::full(4)).unwrap(), q);
        assert_eq!(q.induced(&VertexSet::empty()).unwrap().order(), 0);
        let e = q.induced(&set(&[0, 1], 4)).unwrap();
        assert_eq!(e.edges(), vec![(0, 1, -1)]);
    }

    #[test]
    fn vertex_sets() {
        assert_eq!(VertexSet::new([3, 1], 4).unwrap().as_slice(), &[1, 3]);
        assert_eq!(VertexSet::new([1, 1], 4), Err(GraphError::DuplicateVertex(1)));
        assert!(VertexSet::new([4], 4).is_err());
        assert_eq!(set(&[0, 1], 4).symmetric_difference(&set(&[1, 2], 4)), set(&[0, 2], 4));
        assert_eq!(set(&[1], 3).complement(3), set(&[0, 2], 3));
    }

    #[test]
    fn text_format() {
        let q = quadrangle();
        let text = q.to_text();
        assert_eq!(text, "4 4\n0 1 -1\n0 3 +1\n1 2 +1\n2 3 +1\n");
        assert_eq!(SignedGraph::parse(&text).unwrap(), q);
        let commented = "# a comment\n4 2\n\n3 2 -1\n# mid\n0 1 1\n";
        let g = SignedGraph::parse(commented).unwrap();
        assert_eq!(g.edges(), vec![(0, 1, 1), (2, 3, -1)]);
    }

    #[test]
    fn text_format_errors() {
        let err = SignedGraph::parse("3 1\n0 1 x\n").unwrap_err();
        assert_eq!(err, GraphError::Parse { line: 2, token: "x".into(), message: "sign must be +1 or -1".into() });
        assert!(matches!(SignedGraph::parse("3 2\n0 1 +1\n"), Err(GraphError::Parse { line: 1, .. })));
        assert!(matches!(SignedGraph::parse("3 1\n0 1 +1\n1 2 +1\n"), Err(GraphError::Parse { line: 3, .. })));
        assert!(matches!(SignedGraph::parse("3 1\n0 0 +1\n"), Err(GraphError::LoopEdge(0))));
        assert!(matches!(SignedGraph::parse(""), Err(GraphError::Parse { .. })));
    }
}
