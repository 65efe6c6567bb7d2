//! Finite simple undirected graphs with dense vertex ids `0..n`.
//!
//! Small graphs (the overwhelming majority of what the exhaustive machinery
//! touches) are stored as per-vertex bitset rows so that neighbourhood
//! algebra is plain word operations. Graphs too large for quadratic storage
//! fall back to sorted adjacency lists; the recognizer and the generator are
//! the only consumers that ever see those.

use crate::error::{Error, Result};
use std::fmt;

/// Above this order adjacency is kept as sorted lists instead of bitset rows.
const DENSE_LIMIT: usize = 4096;

const WORD_BITS: usize = 64;

fn words_for(n: usize) -> usize {
    n.div_ceil(WORD_BITS)
}

#[derive(Clone, PartialEq, Eq, Hash)]
enum Repr {
    /// Row-major bitset adjacency: row `v` is `rows[v*words..(v+1)*words]`.
    Dense { words: usize, rows: Vec<u64> },
    /// Sorted neighbour lists.
    Sparse(Vec<Vec<u32>>),
}

/// An immutable labeled simple graph. Equality is vertex-for-vertex.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    repr: Repr,
}

impl Graph {
    /// Graph with `n` vertices and no edges.
    pub fn edgeless(n: usize) -> Self {
        if n <= DENSE_LIMIT {
            let words = words_for(n);
            Graph {
                n,
                repr: Repr::Dense {
                    words,
                    rows: vec![0; n * words],
                },
            }
        } else {
            Graph {
                n,
                repr: Repr::Sparse(vec![Vec::new(); n]),
            }
        }
    }

    /// Complete graph K_n.
    pub fn complete(n: usize) -> Self {
        let edges = (0..n as u32).flat_map(|i| (i + 1..n as u32).map(move |j| (i, j)));
        Self::from_edges(n, edges)
    }

    /// Path 0-1-...-(n-1).
    pub fn path(n: usize) -> Self {
        Self::from_edges(n, (1..n as u32).map(|i| (i - 1, i)))
    }

    /// Cycle 0-1-...-(n-1)-0. Requires n >= 3.
    pub fn cycle(n: usize) -> Self {
        assert!(n >= 3, "cycle needs at least 3 vertices");
        let edges = (1..n as u32)
            .map(|i| (i - 1, i))
            .chain(std::iter::once((n as u32 - 1, 0)));
        Self::from_edges(n, edges)
    }

    /// Builds a graph from an edge list. Panics on self-loops or vertices
    /// `>= n`; duplicate edges are tolerated.
    pub fn from_edges(n: usize, edges: impl IntoIterator<Item = (u32, u32)>) -> Self {
        if n <= DENSE_LIMIT {
            let words = words_for(n);
            let mut rows = vec![0u64; n * words];
            for (u, v) in edges {
                let (u, v) = (u as usize, v as usize);
                assert!(u < n && v < n, "edge ({u},{v}) out of range for n={n}");
                assert_ne!(u, v, "self-loop at {u}");
                rows[u * words + v / WORD_BITS] |= 1 << (v % WORD_BITS);
                rows[v * words + u / WORD_BITS] |= 1 << (u % WORD_BITS);
            }
            Graph {
                n,
                repr: Repr::Dense { words, rows },
            }
        } else {
            let mut lists = vec![Vec::new(); n];
            for (u, v) in edges {
                assert!((u as usize) < n && (v as usize) < n);
                assert_ne!(u, v, "self-loop at {u}");
                lists[u as usize].push(v);
                lists[v as usize].push(u);
            }
            for l in &mut lists {
                l.sort_unstable();
                l.dedup();
            }
            Graph {
                n,
                repr: Repr::Sparse(lists),
            }
        }
    }

    /// Decodes an edge bitmask in graph6 column order: bit k of `mask` is the
    /// k-th pair in the sequence (0,1),(0,2),(1,2),(0,3),(1,3),(2,3),...
    /// Only meaningful for n <= 11 (55 pair bits); the enumerator uses n <= 7.
    pub fn from_edge_mask(n: usize, mask: u64) -> Self {
        let mut edges = Vec::new();
        let mut k = 0;
        for j in 1..n as u32 {
            for i in 0..j {
                if mask >> k & 1 == 1 {
                    edges.push((i, j));
                }
                k += 1;
            }
        }
        Self::from_edges(n, edges)
    }

    /// The edge bitmask inverse to [`Graph::from_edge_mask`].
    pub fn edge_mask(&self) -> u64 {
        assert!(self.n <= 11);
        let mut mask = 0u64;
        let mut k = 0;
        for j in 1..self.n as u32 {
            for i in 0..j {
                if self.adjacent(i, j) {
                    mask |= 1 << k;
                }
                k += 1;
            }
        }
        mask
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Number of edges.
    pub fn m(&self) -> usize {
        match &self.repr {
            Repr::Dense { rows, .. } => rows.iter().map(|w| w.count_ones() as usize).sum::<usize>() / 2,
            Repr::Sparse(lists) => lists.iter().map(Vec::len).sum::<usize>() / 2,
        }
    }

    pub fn vertices(&self) -> impl Iterator<Item = u32> + use<> {
        0..self.n as u32
    }

    #[inline]
    pub fn adjacent(&self, u: u32, v: u32) -> bool {
        debug_assert!((u as usize) < self.n && (v as usize) < self.n);
        match &self.repr {
            Repr::Dense { words, rows } => {
                rows[u as usize * words + v as usize / WORD_BITS] >> (v as usize % WORD_BITS) & 1
                    == 1
            }
            Repr::Sparse(lists) => lists[u as usize].binary_search(&v).is_ok(),
        }
    }

    pub fn degree(&self, v: u32) -> usize {
        match &self.repr {
            Repr::Dense { words, rows } => rows[v as usize * words..(v as usize + 1) * words]
                .iter()
                .map(|w| w.count_ones() as usize)
                .sum(),
            Repr::Sparse(lists) => lists[v as usize].len(),
        }
    }

    /// Neighbours of `v` in ascending order.
    pub fn neighbors(&self, v: u32) -> Vec<u32> {
        match &self.repr {
            Repr::Dense { words, rows } => {
                let mut out = Vec::new();
                let row = &rows[v as usize * words..(v as usize + 1) * words];
                for (wi, &w) in row.iter().enumerate() {
                    let mut w = w;
                    while w != 0 {
                        let b = w.trailing_zeros();
                        out.push((wi * WORD_BITS) as u32 + b);
                        w &= w - 1;
                    }
                }
                out
            }
            Repr::Sparse(lists) => lists[v as usize].clone(),
        }
    }

    /// The open neighbourhood as a single word. Only valid when n <= 64;
    /// the subset-scan oracles live entirely in that regime.
    #[inline]
    pub(crate) fn row64(&self, v: u32) -> u64 {
        debug_assert!(self.n <= 64);
        match &self.repr {
            Repr::Dense { words, rows } => rows[v as usize * *words],
            Repr::Sparse(_) => unreachable!("n <= 64 graphs are always dense"),
        }
    }

    /// Bitset row of `v` for dense graphs.
    pub(crate) fn row(&self, v: u32) -> &[u64] {
        match &self.repr {
            Repr::Dense { words, rows } => &rows[v as usize * words..(v as usize + 1) * words],
            Repr::Sparse(_) => panic!("dense row requested on sparse graph"),
        }
    }

    pub(crate) fn is_dense(&self) -> bool {
        matches!(self.repr, Repr::Dense { .. })
    }

    /// Complement graph: u ~ v in the result iff u != v and u !~ v here.
    pub fn complement(&self) -> Graph {
        match &self.repr {
            Repr::Dense { words, rows } => {
                let n = self.n;
                let mut out = vec![0u64; rows.len()];
                let full = full_mask(n, *words);
                for v in 0..n {
                    for w in 0..*words {
                        out[v * words + w] = !rows[v * words + w] & full[w];
                    }
                    // clear the diagonal bit
                    out[v * words + v / WORD_BITS] &= !(1u64 << (v % WORD_BITS));
                }
                Graph {
                    n,
                    repr: Repr::Dense {
                        words: *words,
                        rows: out,
                    },
                }
            }
            Repr::Sparse(_) => {
                // complementing a huge sparse graph is dense by definition
                let edges = (0..self.n as u32).flat_map(|u| {
                    (u + 1..self.n as u32).filter_map(move |v| {
                        if !self.adjacent(u, v) {
                            Some((u, v))
                        } else {
                            None
                        }
                    })
                });
                Graph::from_edges(self.n, edges)
            }
        }
    }

    /// Induced subgraph on `s`. Vertex ids are relabeled densely preserving
    /// order; the returned map sends new id -> old id.
    pub fn induced_subgraph(&self, s: &VertexSet) -> Result<(Graph, Vec<u32>)> {
        if s.n != self.n {
            if let Some(v) = s.iter().find(|&v| v as usize >= self.n) {
                return Err(Error::VertexOutOfRange { vertex: v, n: self.n });
            }
        }
        let map: Vec<u32> = s.iter().collect();
        let k = map.len();
        let mut edges = Vec::new();
        for (i, &u) in map.iter().enumerate() {
            for (j, &v) in map.iter().enumerate().skip(i + 1) {
                if self.adjacent(u, v) {
                    edges.push((i as u32, j as u32));
                }
            }
        }
        Ok((Graph::from_edges(k, edges), map))
    }

    /// Connected components as sorted vertex sets, ordered by minimum element.
    pub fn components(&self) -> Vec<VertexSet> {
        let mut seen = vec![false; self.n];
        let mut out = Vec::new();
        for start in 0..self.n as u32 {
            if seen[start as usize] {
                continue;
            }
            let mut comp = VertexSet::new(self.n);
            let mut stack = vec![start];
            seen[start as usize] = true;
            while let Some(v) = stack.pop() {
                comp.insert(v);
                for w in self.neighbors(v) {
                    if !seen[w as usize] {
                        seen[w as usize] = true;
                        stack.push(w);
                    }
                }
            }
            out.push(comp);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        if self.n == 0 {
            return true;
        }
        let mut seen = vec![false; self.n];
        let mut stack = vec![0u32];
        seen[0] = true;
        let mut count = 1;
        while let Some(v) = stack.pop() {
            for w in self.neighbors(v) {
                if !seen[w as usize] {
                    seen[w as usize] = true;
                    count += 1;
                    stack.push(w);
                }
            }
        }
        count == self.n
    }

    /// All-pairs BFS hop counts.
    pub fn distance_matrix(&self) -> DistanceMatrix {
        let n = self.n;
        let mut d = vec![DistanceMatrix::UNREACHABLE; n * n];
        let mut queue = std::collections::VecDeque::new();
        for s in 0..n as u32 {
            d[s as usize * n + s as usize] = 0;
            queue.clear();
            queue.push_back(s);
            while let Some(v) = queue.pop_front() {
                let dv = d[s as usize * n + v as usize];
                for w in self.neighbors(v) {
                    let slot = &mut d[s as usize * n + w as usize];
                    if *slot == DistanceMatrix::UNREACHABLE {
                        *slot = dv + 1;
                        queue.push_back(w);
                    }
                }
            }
        }
        DistanceMatrix { n, d }
    }
}

fn full_mask(n: usize, words: usize) -> Vec<u64> {
    let mut m = vec![!0u64; words];
    let rem = n % WORD_BITS;
    if rem != 0 {
        if let Some(last) = m.last_mut() {
            *last = (1u64 << rem) - 1;
        }
    }
    if n == 0 {
        m.clear();
    }
    m
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges=[", self.n)?;
        let mut first = true;
        for u in 0..self.n as u32 {
            for v in u + 1..self.n as u32 {
                if self.adjacent(u, v) {
                    if !first {
                        write!(f, ", ")?;
                    }
                    write!(f, "{u}-{v}")?;
                    first = false;
                }
            }
        }
        write!(f, "])")
    }
}

/// A subset of the vertices of a graph on `n` vertices.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct VertexSet {
    n: usize,
    words: Vec<u64>,
}

impl VertexSet {
    pub fn new(n: usize) -> Self {
        VertexSet {
            n,
            words: vec![0; words_for(n)],
        }
    }

    pub fn full(n: usize) -> Self {
        VertexSet {
            n,
            words: full_mask(n, words_for(n)),
        }
    }

    pub fn from_iter(n: usize, it: impl IntoIterator<Item = u32>) -> Self {
        let mut s = Self::new(n);
        for v in it {
            s.insert(v);
        }
        s
    }

    /// Interprets the low `n` bits of a word as a set (subset-scan helper).
    pub fn from_mask(n: usize, mask: u64) -> Self {
        assert!(n <= 64);
        VertexSet {
            n,
            words: if n == 0 { vec![] } else { vec![mask] },
        }
    }

    pub fn universe(&self) -> usize {
        self.n
    }

    pub fn insert(&mut self, v: u32) {
        assert!((v as usize) < self.n, "vertex {v} out of range (n={})", self.n);
        self.words[v as usize / WORD_BITS] |= 1 << (v as usize % WORD_BITS);
    }

    pub fn remove(&mut self, v: u32) {
        self.words[v as usize / WORD_BITS] &= !(1 << (v as usize % WORD_BITS));
    }

    pub fn contains(&self, v: u32) -> bool {
        (v as usize) < self.n
            && self.words[v as usize / WORD_BITS] >> (v as usize % WORD_BITS) & 1 == 1
    }

    pub fn len(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    /// Members in ascending order.
    pub fn iter(&self) -> impl Iterator<Item = u32> + '_ {
        self.words.iter().enumerate().flat_map(|(wi, &w)| {
            std::iter::successors(Some(w), |&w| Some(w & (w - 1)))
                .take_while(|&w| w != 0)
                .map(move |w| (wi * WORD_BITS) as u32 + w.trailing_zeros())
        })
    }

    pub fn min(&self) -> Option<u32> {
        self.iter().next()
    }

    pub fn is_subset_of(&self, other: &VertexSet) -> bool {
        self.words
            .iter()
            .zip(&other.words)
            .all(|(a, b)| a & !b == 0)
    }

    pub fn intersects(&self, other: &VertexSet) -> bool {
        self.words.iter().zip(&other.words).any(|(a, b)| a & b != 0)
    }

    pub fn to_vec(&self) -> Vec<u32> {
        self.iter().collect()
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

/// Symmetric hop-count matrix with an explicit unreachable sentinel,
/// serialized as JSON `null`.
#[derive(Clone, PartialEq, Eq)]
pub struct DistanceMatrix {
    n: usize,
    d: Vec<u32>,
}

impl DistanceMatrix {
    pub const UNREACHABLE: u32 = u32::MAX;

    pub fn n(&self) -> usize {
        self.n
    }

    /// BFS distance, or `None` when `u` and `v` lie in different components.
    pub fn get(&self, u: u32, v: u32) -> Option<u32> {
        let raw = self.d[u as usize * self.n + v as usize];
        (raw != Self::UNREACHABLE).then_some(raw)
    }

    pub(crate) fn raw(&self, u: u32, v: u32) -> u32 {
        self.d[u as usize * self.n + v as usize]
    }
}

impl serde::Serialize for DistanceMatrix {
    fn serialize<S: serde::Serializer>(&self, ser: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeSeq;
        let mut rows = ser.serialize_seq(Some(self.n))?;
        for u in 0..self.n {
            let row: Vec<Option<u32>> = (0..self.n)
                .map(|v| self.get(u as u32, v as u32))
                .collect();
            rows.serialize_element(&row)?;
        }
        rows.end()
    }
}

/// An injective map from the vertices of a pattern graph into a host graph
/// preserving both adjacency and non-adjacency.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Embedding {
    map: Vec<u32>,
}

impl Embedding {
    pub fn new(map: Vec<u32>) -> Self {
        Embedding { map }
    }

    pub fn identity(n: usize) -> Self {
        Embedding {
            map: (0..n as u32).collect(),
        }
    }

    pub fn image(&self, pattern_vertex: u32) -> u32 {
        self.map[pattern_vertex as usize]
    }

    pub fn len(&self) -> usize {
        self.map.len()
    }

    pub fn is_empty(&self) -> bool {
        self.map.is_empty()
    }

    pub fn as_slice(&self) -> &[u32] {
        &self.map
    }

    /// Checks the induced-embedding invariant against concrete graphs.
    pub fn verify(&self, pattern: &Graph, host: &Graph) -> bool {
        if self.map.len() != pattern.n() {
            return false;
        }
        if self.map.iter().any(|&h| (h as usize) >= host.n()) {
            return false;
        }
        let mut sorted = self.map.clone();
        sorted.sort_unstable();
        sorted.dedup();
        if sorted.len() != self.map.len() {
            return false;
        }
        for u in 0..pattern.n() as u32 {
            for v in u + 1..pattern.n() as u32 {
                if pattern.adjacent(u, v) != host.adjacent(self.map[u as usize], self.map[v as usize])
                {
                    return false;
                }
            }
        }
        true
    }
}

impl serde::Serialize for Embedding {
    fn serialize<S: serde::Serializer>(&self, ser: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeSeq;
        let mut seq = ser.serialize_seq(Some(self.map.len()))?;
        for (p, h) in self.map.iter().enumerate() {
            seq.serialize_element(&[p as u32, *h])?;
        }
        seq.end()
    }
}

impl<'de> serde::Deserialize<'de> for Embedding {
    fn deserialize<D: serde::Deserializer<'de>>(de: D) -> std::result::Result<Self, D::Error> {
        let pairs = Vec::<[u32; 2]>::deserialize(de)?;
        let mut map = vec![0u32; pairs.len()];
        for (i, [p, h]) in pairs.iter().enumerate() {
            if *p as usize != i {
                return Err(serde::de::Error::custom("embedding pairs out of order"));
            }
            map[i] = *h;
        }
        Ok(Embedding { map })
    }
}
