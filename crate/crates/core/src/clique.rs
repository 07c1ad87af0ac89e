//! Maximal clique enumeration (Bron-Kerbosch with Tomita pivoting) on bitsets.

#[derive(Clone, Debug, PartialEq, Eq)]
pub(crate) struct BitSet {
    words: Vec<u64>,
}

impl BitSet {
    pub fn new(len: usize) -> Self {
        BitSet { words: vec![0; len.div_ceil(64)] }
    }

    pub fn full(len: usize) -> Self {
        let mut s = Self::new(len);
        for i in 0..len {
            s.insert(i);
        }
        s
    }

    pub fn insert(&mut self, i: usize) {
        self.words[i / 64] |= 1 << (i % 64);
    }

    pub fn remove(&mut self, i: usize) {
        self.words[i / 64] &= !(1 << (i % 64));
    }

    pub fn contains(&self, i: usize) -> bool {
        self.words[i / 64] >> (i % 64) & 1 == 1
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn intersection(&self, other: &Self) -> Self {
        BitSet { words: self.words.iter().zip(&other.words).map(|(a, b)| a & b).collect() }
    }

    pub fn intersection_len(&self, other: &Self) -> usize {
        self.words.iter().zip(&other.words).map(|(a, b)| (a & b).count_ones() as usize).sum()
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(k, &w)| {
            let mut w = w;
            std::iter::from_fn(move || {
                if w == 0 {
                    return None;
                }
                let bit = w.trailing_zeros() as usize;
                w &= w - 1;
                Some(k * 64 + bit)
            })
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CliqueLimits {
    /// Stop after this many cliques.
    pub max_cliques: usize,
    /// Do not grow a clique beyond this many vertices.
    pub max_size: usize,
}

impl Default for CliqueLimits {
    fn default() -> Self {
        CliqueLimits { max_cliques: 10_000, max_size: usize::MAX }
    }
}

pub(crate) struct CliqueSearch<'a> {
    adjacency: &'a [BitSet],
    limits: CliqueLimits,
    pub cliques: Vec<Vec<usize>>,
    pub truncated: bool,
}

impl<'a> CliqueSearch<'a> {
    pub fn run(adjacency: &'a [BitSet], limits: CliqueLimits) -> Self {
        let n = adjacency.len();
        let mut search = CliqueSearch { adjacency, limits, cliques: Vec::new(), truncated: false };
        if n > 0 {
            search.expand(&mut Vec::new(), BitSet::full(n), BitSet::new(n));
        }
        for c in &mut search.cliques {
            c.sort_unstable();
        }
        search.cliques.sort();
        search
    }

    fn expand(&mut self, r: &mut Vec<usize>, mut p: BitSet, mut x: BitSet) {
        if self.cliques.len() >= self.limits.max_cliques {
            self.truncated = true;
            return;
        }
        if p.is_empty() {
            if x.is_empty() {
                self.cliques.push(r.clone());
            }
            return;
        }
        if r.len() >= self.limits.max_size {
            self.truncated = true;
            self.cliques.push(r.clone());
            return;
        }
        let pivot = p
            .iter()
            .chain(x.iter())
            .max_by_key(|&u| (p.intersection_len(&self.adjacency[u]), std::cmp::Reverse(u)))
            .expect("p is nonempty");
        let branch: Vec<usize> = p.iter().filter(|&v| !self.adjacency[pivot].contains(v)).collect();
        for v in branch {
            r.push(v);
            let next_p = p.intersection(&self.adjacency[v]);
            let next_x = x.intersection(&self.adjacency[v]);
            self.expand(r, next_p, next_x);
            r.pop();
            p.remove(v);
            x.insert(v);
            if self.cliques.len() >= self.limits.max_cliques {
                self.truncated = true;
                return;
            }
        }
    }
}
