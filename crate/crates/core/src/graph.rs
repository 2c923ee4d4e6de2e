//! Simple undirected graphs on dense vertex labels `0..n`.
//!
//! Adjacency is a packed bit matrix: every row is `ceil(n / 64)` words. The
//! graphs this crate cares about are joins of cliques, so dense storage with
//! O(1) adjacency tests is the right trade.

use std::collections::VecDeque;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

const WORD: usize = 64;

#[inline]
fn words_for(n: usize) -> usize {
    n.div_ceil(WORD)
}

/// A simple undirected graph with a fixed vertex count.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    stride: usize,
    bits: Vec<u64>,
}

impl Graph {
    /// The edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Self {
        let stride = words_for(n);
        Graph {
            n,
            stride,
            bits: vec![0; n * stride],
        }
    }

    /// The complete graph `K_n`.
    pub fn complete(n: usize) -> Self {
        let mut g = Graph::empty(n);
        for u in 0..n {
            for v in (u + 1)..n {
                g.set(u, v, true);
            }
        }
        g
    }

    /// The path `0 - 1 - ... - (n-1)`.
    pub fn path(n: usize) -> Self {
        let mut g = Graph::empty(n);
        for v in 1..n {
            g.set(v - 1, v, true);
        }
        g
    }

    /// The cycle `C_n`; requires `n >= 3`.
    pub fn cycle(n: usize) -> Result<Self> {
        if n < 3 {
            return Err(Error::TooFewVertices {
                required: 3,
                actual: n,
            });
        }
        let mut g = Graph::path(n);
        g.set(0, n - 1, true);
        Ok(g)
    }

    /// The star `K_{1,m}` with center 0.
    pub fn star(m: usize) -> Self {
        Graph::join(&Graph::complete(1), &Graph::empty(m))
    }

    /// Builds a graph from an edge list, rejecting loops, duplicates and
    /// out-of-range endpoints.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = Graph::empty(n);
        for &(u, v) in edges {
            if u == v {
                return Err(Error::InvalidEdge(u, v));
            }
            g.check_vertex(u)?;
            g.check_vertex(v)?;
            if g.has_edge(u, v) {
                return Err(Error::DuplicateEdge(u.min(v), u.max(v)));
            }
            g.set(u, v, true);
        }
        Ok(g)
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn is_null(&self) -> bool {
        self.n == 0
    }

    pub(crate) fn check_vertex(&self, v: usize) -> Result<()> {
        if v < self.n {
            Ok(())
        } else {
            Err(Error::VertexOutOfRange {
                vertex: v,
                n: self.n,
            })
        }
    }

    #[inline]
    fn set_bit(&mut self, row: usize, col: usize, on: bool) {
        let w = &mut self.bits[row * self.stride + col / WORD];
        let mask = 1u64 << (col % WORD);
        if on {
            *w |= mask;
        } else {
            *w &= !mask;
        }
    }

    #[inline]
    fn set(&mut self, u: usize, v: usize, on: bool) {
        self.set_bit(u, v, on);
        self.set_bit(v, u, on);
    }

    /// Adjacency test. Panics if either vertex is out of range.
    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        assert!(u < self.n && v < self.n, "vertex out of range");
        (self.bits[u * self.stride + v / WORD] >> (v % WORD)) & 1 == 1
    }

    /// Inserts the edge `uv`. Returns `false` if it was already present.
    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<bool> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if u == v {
            return Err(Error::InvalidEdge(u, v));
        }
        let fresh = !self.has_edge(u, v);
        self.set(u, v, true);
        Ok(fresh)
    }

    /// Deletes the edge `uv`. Returns `false` if it was absent.
    pub fn remove_edge(&mut self, u: usize, v: usize) -> Result<bool> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if u == v {
            return Err(Error::InvalidEdge(u, v));
        }
        let present = self.has_edge(u, v);
        self.set(u, v, false);
        Ok(present)
    }

    /// The packed neighbor row of `v`.
    #[inline]
    pub fn row(&self, v: usize) -> &[u64] {
        &self.bits[v * self.stride..(v + 1) * self.stride]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.row(v).iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn degrees(&self) -> Vec<usize> {
        (0..self.n).map(|v| self.degree(v)).collect()
    }

    /// Minimum degree, `None` for the null graph.
    pub fn min_degree(&self) -> Option<usize> {
        (0..self.n).map(|v| self.degree(v)).min()
    }

    pub fn edge_count(&self) -> usize {
        self.bits.iter().map(|w| w.count_ones() as usize).sum::<usize>() / 2
    }

    /// Neighbors of `v` in increasing order.
    pub fn neighbors(&self, v: usize) -> Neighbors<'_> {
        Neighbors {
            row: self.row(v),
            word: 0,
            cur: self.row(v).first().copied().unwrap_or(0),
        }
    }

    /// Edges `(u, v)` with `u < v`, in row-major order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |u| self.neighbors(u).filter(move |&v| v > u).map(move |v| (u, v)))
    }

    pub fn edge_list(&self) -> EdgeList {
        EdgeList(self.edges().collect())
    }

    /// `G ∨ H`: disjoint union plus every cross edge. `h` is relabeled by
    /// `g.order()`.
    pub fn join(g: &Graph, h: &Graph) -> Graph {
        let mut out = Graph::disjoint_union(g, h);
        let off = g.n;
        for u in 0..g.n {
            for v in 0..h.n {
                out.set(u, off + v, true);
            }
        }
        out
    }

    /// `G ∪ H` with `h` relabeled by `g.order()`.
    pub fn disjoint_union(g: &Graph, h: &Graph) -> Graph {
        let mut out = Graph::empty(g.n + h.n);
        for (u, v) in g.edges() {
            out.set(u, v, true);
        }
        let off = g.n;
        for (u, v) in h.edges() {
            out.set(off + u, off + v, true);
        }
        out
    }

    pub fn complement(&self) -> Graph {
        let mut out = Graph::empty(self.n);
        for u in 0..self.n {
            for v in (u + 1)..self.n {
                if !self.has_edge(u, v) {
                    out.set(u, v, true);
                }
            }
        }
        out
    }

    /// Connected components, each sorted, ordered by smallest member.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.n];
        let mut out = Vec::new();
        let mut queue = VecDeque::new();
        for s in 0..self.n {
            if seen[s] {
                continue;
            }
            seen[s] = true;
            queue.push_back(s);
            let mut comp = Vec::new();
            while let Some(u) = queue.pop_front() {
                comp.push(u);
                for w in self.neighbors(u) {
                    if !seen[w] {
                        seen[w] = true;
                        queue.push_back(w);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    pub fn component_count(&self) -> usize {
        self.components().len()
    }

    /// Whether a traversal from vertex 0 reaches every vertex. Rejects the
    /// null graph.
    pub fn is_connected(&self) -> Result<bool> {
        if self.n == 0 {
            return Err(Error::TooFewVertices {
                required: 1,
                actual: 0,
            });
        }
        Ok(self.component_count() == 1)
    }

    /// Induced subgraph on the complement of `removed`, relabeled in
    /// increasing order of the surviving vertices.
    pub fn remove_vertices(&self, removed: &[usize]) -> Result<Graph> {
        let mut drop = vec![false; self.n];
        for &v in removed {
            self.check_vertex(v)?;
            drop[v] = true;
        }
        let keep: Vec<usize> = (0..self.n).filter(|&v| !drop[v]).collect();
        Ok(self.induced(&keep))
    }

    /// Induced subgraph on `keep` (assumed in range and distinct), with
    /// vertex `keep[i]` relabeled to `i`.
    pub fn induced(&self, keep: &[usize]) -> Graph {
        let mut out = Graph::empty(keep.len());
        for (i, &u) in keep.iter().enumerate() {
            for (j, &v) in keep.iter().enumerate().skip(i + 1) {
                if self.has_edge(u, v) {
                    out.set(i, j, true);
                }
            }
        }
        out
    }

    /// Relabels so that new vertex `i` is old vertex `perm[i]`.
    pub fn permuted(&self, perm: &[usize]) -> Graph {
        assert_eq!(perm.len(), self.n);
        self.induced(perm)
    }

    /// Whether every edge of `self` is an edge of `other` (same order).
    pub fn is_spanning_subgraph_of(&self, other: &Graph) -> bool {
        self.n == other.n
            && self
                .bits
                .iter()
                .zip(&other.bits)
                .all(|(a, b)| a & !b == 0)
    }

    pub fn is_complete(&self) -> bool {
        self.edge_count() == self.n * self.n.saturating_sub(1) / 2
    }

    /// Whether `path` is a simple path of `self`: distinct
    /// in-range vertices, consecutive ones adjacent.
    pub fn is_path(&self, path: &[usize]) -> bool {
        let mut seen = vec![false; self.n];
        for &v in path {
            if v >= self.n || seen[v] {
                return false;
            }
            seen[v] = true;
        }
        path.windows(2).all(|w| self.has_edge(w[0], w[1]))
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Graph")
            .field("n", &self.n)
            .field("edges", &self.edges().collect::<Vec<_>>())
            .finish()
    }
}

/// Iterator over set bits of a packed neighbor row.
pub struct Neighbors<'a> {
    row: &'a [u64],
    word: usize,
    cur: u64,
}

impl Iterator for Neighbors<'_> {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        loop {
            if self.cur != 0 {
                let t = self.cur.trailing_zeros() as usize;
                self.cur &= self.cur - 1;
                return Some(self.word * WORD + t);
            }
            self.word += 1;
            if self.word >= self.row.len() {
                return None;
            }
            self.cur = self.row[self.word];
        }
    }
}

/// Ordered list of distinct edges `(u, v)` with `u < v`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct EdgeList(Vec<(usize, usize)>);

impl EdgeList {
    pub fn new() -> Self {
        EdgeList(Vec::new())
    }

    /// Normalizes each pair to `u < v` and validates distinctness and range.
    pub fn from_pairs(n: usize, pairs: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        let mut out = Vec::new();
        let mut seen = std::collections::HashSet::new();
        for (a, b) in pairs {
            let (u, v) = (a.min(b), a.max(b));
            if u == v {
                return Err(Error::InvalidEdge(a, b));
            }
            if v >= n {
                return Err(Error::VertexOutOfRange { vertex: v, n });
            }
            if !seen.insert((u, v)) {
                return Err(Error::DuplicateEdge(u, v));
            }
            out.push((u, v));
        }
        Ok(EdgeList(out))
    }

    pub(crate) fn push_unchecked(&mut self, u: usize, v: usize) {
        self.0.push((u.min(v), u.max(v)));
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn iter(&self) -> std::slice::Iter<'_, (usize, usize)> {
        self.0.iter()
    }

    pub fn as_slice(&self) -> &[(usize, usize)] {
        &self.0
    }

    pub fn contains(&self, u: usize, v: usize) -> bool {
        self.0.contains(&(u.min(v), u.max(v)))
    }

    /// Copy with pairs in lexicographic order.
    pub fn sorted(&self) -> EdgeList {
        let mut v = self.0.clone();
        v.sort_unstable();
        EdgeList(v)
    }
}

impl<'a> IntoIterator for &'a EdgeList {
    type Item = &'a (usize, usize);
    type IntoIter = std::slice::Iter<'a, (usize, usize)>;

    fn into_iter(self) -> Self::IntoIter {
        self.0.iter()
    }
}
