//! Immutable simple graphs with bitset adjacency rows.
//!
//! Every row is `words` 64-bit words long; bit `j` of row `i` is set iff
//! `ij` is an edge. Rows are symmetric and irreflexive, and no bit at or
//! above `order` is ever set.

use std::collections::VecDeque;
use std::fmt;

use crate::error::{Error, Result};

#[inline]
pub(crate) fn words_for(order: usize) -> usize {
    order.div_ceil(64)
}

#[inline]
fn popcount_and(a: &[u64], b: &[u64]) -> usize {
    a.iter()
        .zip(b)
        .map(|(x, y)| (x & y).count_ones() as usize)
        .sum()
}

/// A set of vertices drawn from `0..order`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct VertexSet {
    order: usize,
    bits: Vec<u64>,
}

impl VertexSet {
    pub fn empty(order: usize) -> Self {
        VertexSet {
            order,
            bits: vec![0; words_for(order)],
        }
    }

    pub fn full(order: usize) -> Self {
        let mut s = Self::empty(order);
        for v in 0..order {
            s.bits[v / 64] |= 1 << (v % 64);
        }
        s
    }

    pub fn from_vertices<I: IntoIterator<Item = usize>>(order: usize, vertices: I) -> Result<Self> {
        let mut s = Self::empty(order);
        for v in vertices {
            s.insert(v)?;
        }
        Ok(s)
    }

    pub(crate) fn from_words(order: usize, bits: Vec<u64>) -> Self {
        debug_assert_eq!(bits.len(), words_for(order));
        VertexSet { order, bits }
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn words(&self) -> &[u64] {
        &self.bits
    }

    pub fn insert(&mut self, v: usize) -> Result<()> {
        if v >= self.order {
            return Err(Error::VertexOutOfRange {
                vertex: v,
                order: self.order,
            });
        }
        self.bits[v / 64] |= 1 << (v % 64);
        Ok(())
    }

    pub fn remove(&mut self, v: usize) {
        if v < self.order {
            self.bits[v / 64] &= !(1 << (v % 64));
        }
    }

    #[inline]
    pub fn contains(&self, v: usize) -> bool {
        v < self.order && self.bits[v / 64] >> (v % 64) & 1 == 1
    }

    pub fn len(&self) -> usize {
        self.bits.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.bits.iter().all(|&w| w == 0)
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.bits
            .iter()
            .enumerate()
            .flat_map(|(i, &w)| BitIter(w).map(move |b| i * 64 + b))
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.iter().collect()
    }

    pub fn intersection(&self, other: &VertexSet) -> VertexSet {
        let bits = self
            .bits
            .iter()
            .zip(&other.bits)
            .map(|(a, b)| a & b)
            .collect();
        VertexSet::from_words(self.order, bits)
    }

    pub fn union(&self, other: &VertexSet) -> VertexSet {
        let bits = self
            .bits
            .iter()
            .zip(&other.bits)
            .map(|(a, b)| a | b)
            .collect();
        VertexSet::from_words(self.order, bits)
    }

    pub fn difference(&self, other: &VertexSet) -> VertexSet {
        let bits = self
            .bits
            .iter()
            .zip(&other.bits)
            .map(|(a, b)| a & !b)
            .collect();
        VertexSet::from_words(self.order, bits)
    }

    /// Vertices of `0..order` not in the set.
    pub fn complement(&self) -> VertexSet {
        VertexSet::full(self.order).difference(self)
    }

    pub fn intersection_len(&self, other: &VertexSet) -> usize {
        popcount_and(&self.bits, &other.bits)
    }

    pub fn is_disjoint(&self, other: &VertexSet) -> bool {
        self.bits.iter().zip(&other.bits).all(|(a, b)| a & b == 0)
    }

    pub fn is_subset(&self, other: &VertexSet) -> bool {
        self.bits.iter().zip(&other.bits).all(|(a, b)| a & !b == 0)
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

struct BitIter(u64);

impl Iterator for BitIter {
    type Item = usize;
    #[inline]
    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            None
        } else {
            let b = self.0.trailing_zeros() as usize;
            self.0 &= self.0 - 1;
            Some(b)
        }
    }
}

/// Simple undirected graph on vertices `0..order`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    order: usize,
    words: usize,
    rows: Vec<u64>,
}

impl Graph {
    /// Edgeless graph on `order` vertices.
    pub fn empty(order: usize) -> Self {
        let words = words_for(order);
        Graph {
            order,
            words,
            rows: vec![0; order * words],
        }
    }

    /// Builds a graph from an edge list. Duplicate edges are merged.
    pub fn from_edges<I: IntoIterator<Item = (usize, usize)>>(
        order: usize,
        edges: I,
    ) -> Result<Self> {
        let mut g = Self::empty(order);
        for (u, v) in edges {
            g.check_pair(u, v)?;
            g.set(u, v);
        }
        Ok(g)
    }

    /// Builds a graph whose edge set is `{uv : u < v, adjacent(u, v)}`.
    pub fn from_fn(order: usize, mut adjacent: impl FnMut(usize, usize) -> bool) -> Self {
        let mut g = Self::empty(order);
        for u in 0..order {
            for v in u + 1..order {
                if adjacent(u, v) {
                    g.set(u, v);
                }
            }
        }
        g
    }

    /// Builds a graph from per-vertex 64-bit rows. Only orders up to 64.
    pub(crate) fn from_u64_rows(rows: &[u64]) -> Self {
        let order = rows.len();
        debug_assert!(order <= 64);
        Self::from_fn(order, |u, v| rows[u] >> v & 1 == 1)
    }

    fn set(&mut self, u: usize, v: usize) {
        self.rows[u * self.words + v / 64] |= 1 << (v % 64);
        self.rows[v * self.words + u / 64] |= 1 << (u % 64);
    }

    fn check_vertex(&self, v: usize) -> Result<()> {
        if v >= self.order {
            Err(Error::VertexOutOfRange {
                vertex: v,
                order: self.order,
            })
        } else {
            Ok(())
        }
    }

    fn check_pair(&self, u: usize, v: usize) -> Result<()> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if u == v {
            return Err(Error::SameVertex(u));
        }
        Ok(())
    }

    fn check_set(&self, s: &VertexSet) -> Result<()> {
        if s.order() != self.order {
            return Err(Error::OrderMismatch {
                set: s.order(),
                graph: self.order,
            });
        }
        Ok(())
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.order
    }

    /// Number of 64-bit words per adjacency row.
    #[inline]
    pub fn words(&self) -> usize {
        self.words
    }

    /// Neighbor bitset of `v`.
    #[inline]
    pub fn row(&self, v: usize) -> &[u64] {
        &self.rows[v * self.words..(v + 1) * self.words]
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.order && v < self.order && self.row(u)[v / 64] >> (v % 64) & 1 == 1
    }

    pub fn neighbors(&self, v: usize) -> VertexSet {
        VertexSet::from_words(self.order, self.row(v).to_vec())
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.row(v).iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn degrees(&self) -> Vec<usize> {
        (0..self.order).map(|v| self.degree(v)).collect()
    }

    pub fn min_degree(&self) -> Option<usize> {
        (0..self.order).map(|v| self.degree(v)).min()
    }

    pub fn max_degree(&self) -> Option<usize> {
        (0..self.order).map(|v| self.degree(v)).max()
    }

    pub fn edge_count(&self) -> usize {
        self.rows
            .iter()
            .map(|w| w.count_ones() as usize)
            .sum::<usize>()
            / 2
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.order).flat_map(move |u| self.neighbors_above(u).map(move |v| (u, v)))
    }

    /// Neighbors of `u` with index greater than `u`, ascending.
    pub fn neighbors_above(&self, u: usize) -> impl Iterator<Item = usize> + '_ {
        let row = self.row(u);
        let first = (u + 1) / 64;
        row.iter().enumerate().skip(first).flat_map(move |(i, &w)| {
            let w = if i == first && !(u + 1).is_multiple_of(64) {
                w & (!0u64 << ((u + 1) % 64))
            } else {
                w
            };
            BitIter(w).map(move |b| i * 64 + b)
        })
    }

    /// `|N(u) ∩ N(v)|` without range checks.
    #[inline]
    pub fn common_count(&self, u: usize, v: usize) -> usize {
        popcount_and(self.row(u), self.row(v))
    }

    /// `|N(u) ∩ N(v)|` for two distinct in-range vertices.
    pub fn common_neighbors(&self, u: usize, v: usize) -> Result<usize> {
        self.check_pair(u, v)?;
        Ok(self.common_count(u, v))
    }

    pub fn common_neighbor_set(&self, u: usize, v: usize) -> VertexSet {
        let bits = self
            .row(u)
            .iter()
            .zip(self.row(v))
            .map(|(a, b)| a & b)
            .collect();
        VertexSet::from_words(self.order, bits)
    }

    /// Number of neighbors of `v` inside `s`.
    #[inline]
    pub fn degree_into(&self, v: usize, s: &VertexSet) -> usize {
        popcount_and(self.row(v), s.words())
    }

    /// The complementary graph on the same vertex set.
    pub fn complement(&self) -> Graph {
        let full = VertexSet::full(self.order);
        let mut rows = Vec::with_capacity(self.rows.len());
        for v in 0..self.order {
            for (i, (&w, &f)) in self.row(v).iter().zip(full.words()).enumerate() {
                let mut x = !w & f;
                if i == v / 64 {
                    x &= !(1 << (v % 64));
                }
                rows.push(x);
            }
        }
        Graph {
            order: self.order,
            words: self.words,
            rows,
        }
    }

    /// `G[X]`, relabelled so that the i-th smallest vertex of `x` becomes `i`.
    pub fn induced_subgraph(&self, x: &VertexSet) -> Result<Graph> {
        self.check_set(x)?;
        let verts = x.to_vec();
        let mut g = Graph::empty(verts.len());
        for (i, &a) in verts.iter().enumerate() {
            for (j, &b) in verts.iter().enumerate().skip(i + 1) {
                if self.has_edge(a, b) {
                    g.set(i, j);
                }
            }
        }
        Ok(g)
    }

    /// `e(U, W)`: edges with one endpoint in each of two disjoint sets.
    pub fn edges_between(&self, u: &VertexSet, w: &VertexSet) -> Result<usize> {
        self.check_set(u)?;
        self.check_set(w)?;
        if !u.is_disjoint(w) {
            return Err(Error::OverlappingSets);
        }
        Ok(u.iter().map(|a| self.degree_into(a, w)).sum())
    }

    /// Two-colours the graph by BFS. Returns `(side containing the lowest
    /// vertex of each component, other side)` or `None` on an odd cycle.
    pub fn is_bipartite(&self) -> Option<(VertexSet, VertexSet)> {
        let mut side: Vec<Option<bool>> = vec![None; self.order];
        let mut queue = VecDeque::new();
        for start in 0..self.order {
            if side[start].is_some() {
                continue;
            }
            side[start] = Some(false);
            queue.push_back(start);
            while let Some(u) = queue.pop_front() {
                let su = side[u].unwrap();
                for v in self.neighbors(u).iter() {
                    match side[v] {
                        None => {
                            side[v] = Some(!su);
                            queue.push_back(v);
                        }
                        Some(sv) if sv == su => return None,
                        Some(_) => {}
                    }
                }
            }
        }
        let mut a = VertexSet::empty(self.order);
        let mut b = VertexSet::empty(self.order);
        for (v, s) in side.iter().enumerate() {
            if *s == Some(false) {
                a.insert(v).ok()?;
            } else {
                b.insert(v).ok()?;
            }
        }
        Some((a, b))
    }

    /// Lexicographically first triangle `(u, v, w)` with `u < v < w`.
    pub fn find_triangle(&self) -> Option<(usize, usize, usize)> {
        for (u, v) in self.edges() {
            let common = self.common_neighbor_set(u, v);
            let w = common.iter().find(|&w| w > v);
            if let Some(w) = w {
                return Some((u, v, w));
            }
        }
        None
    }

    pub fn has_triangle(&self) -> bool {
        self.find_triangle().is_some()
    }

    /// Disjoint union `self ∪ other`, with `other` shifted up by `self.order()`.
    pub fn disjoint_union(&self, other: &Graph) -> Graph {
        let n = self.order;
        let edges = self
            .edges()
            .chain(other.edges().map(|(u, v)| (u + n, v + n)));
        Graph::from_edges(n + other.order, edges.collect::<Vec<_>>()).expect("in range")
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "Graph(order={}, edges={:?})",
            self.order,
            self.edges().collect::<Vec<_>>()
        )
    }
}

/// Small named graphs used throughout tests and examples.
pub mod named {
    use super::Graph;

    pub fn complete(n: usize) -> Graph {
        Graph::from_fn(n, |_, _| true)
    }

    pub fn cycle(n: usize) -> Graph {
        assert!(n >= 3, "cycle needs at least 3 vertices");
        Graph::from_fn(n, |u, v| v == u + 1 || (u == 0 && v == n - 1))
    }

    pub fn path(n: usize) -> Graph {
        Graph::from_fn(n, |u, v| v == u + 1)
    }

    /// `K_{a,b}` with parts `0..a` and `a..a+b`.
    pub fn complete_bipartite(a: usize, b: usize) -> Graph {
        Graph::from_fn(a + b, |u, v| (u < a) != (v < a))
    }

    pub fn petersen() -> Graph {
        let mut edges = Vec::new();
        for i in 0..5 {
            edges.push((i, (i + 1) % 5));
            edges.push((i, i + 5));
            edges.push((5 + i, 5 + (i + 2) % 5));
        }
        Graph::from_edges(10, edges).expect("valid")
    }

    /// The `n × n` rook's graph (line graph of `K_{n,n}`).
    pub fn rook(n: usize) -> Graph {
        Graph::from_fn(n * n, |a, b| a / n == b / n || a % n == b % n)
    }

    /// Kneser graph `KG(n, 2)`: pairs from `0..n`, adjacent when disjoint.
    pub fn kneser2(n: usize) -> Graph {
        let pairs: Vec<(usize, usize)> = (0..n)
            .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
            .collect();
        Graph::from_fn(pairs.len(), |a, b| {
            let (p, q) = (pairs[a], pairs[b]);
            p.0 != q.0 && p.0 != q.1 && p.1 != q.0 && p.1 != q.1
        })
    }
}
