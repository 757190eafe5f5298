//! Immutable simple graphs on at most 64 vertices.
//!
//! Adjacency is stored as one `u64` bitmask per vertex, so neighborhood
//! unions, intersections, and coverage tests are single word operations.
//! Graphs are validated on construction and never mutated afterwards,
//! which makes them safe to share across worker threads.

use std::fmt;

use serde::ser::SerializeSeq;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};

/// Hard cap on the number of vertices: one machine word per neighborhood.
pub const MAX_VERTICES: usize = 64;

/// A set of vertices of some host graph, stored as a 64-bit mask.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct VertexSet(u64);

impl VertexSet {
    pub const EMPTY: VertexSet = VertexSet(0);

    pub fn from_bits(bits: u64) -> Self {
        VertexSet(bits)
    }

    pub fn singleton(v: usize) -> Self {
        debug_assert!(v < MAX_VERTICES);
        VertexSet(1 << v)
    }

    /// All vertices `0..n`.
    pub fn full(n: usize) -> Self {
        assert!(n <= MAX_VERTICES);
        if n == MAX_VERTICES {
            VertexSet(u64::MAX)
        } else {
            VertexSet((1u64 << n) - 1)
        }
    }

    pub fn bits(self) -> u64 {
        self.0
    }

    pub fn contains(self, v: usize) -> bool {
        v < MAX_VERTICES && self.0 >> v & 1 == 1
    }

    #[must_use]
    pub fn with(self, v: usize) -> Self {
        debug_assert!(v < MAX_VERTICES);
        VertexSet(self.0 | 1 << v)
    }

    #[must_use]
    pub fn without(self, v: usize) -> Self {
        debug_assert!(v < MAX_VERTICES);
        VertexSet(self.0 & !(1 << v))
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn union(self, other: Self) -> Self {
        VertexSet(self.0 | other.0)
    }

    pub fn intersection(self, other: Self) -> Self {
        VertexSet(self.0 & other.0)
    }

    pub fn difference(self, other: Self) -> Self {
        VertexSet(self.0 & !other.0)
    }

    pub fn is_subset_of(self, other: Self) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn min_vertex(self) -> Option<usize> {
        if self.0 == 0 {
            None
        } else {
            Some(self.0.trailing_zeros() as usize)
        }
    }

    /// Iterates members in increasing order.
    pub fn iter(self) -> impl Iterator<Item = usize> {
        let mut bits = self.0;
        std::iter::from_fn(move || {
            if bits == 0 {
                None
            } else {
                let v = bits.trailing_zeros() as usize;
                bits &= bits - 1;
                Some(v)
            }
        })
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        let mut s = VertexSet::EMPTY;
        for v in iter {
            assert!(v < MAX_VERTICES, "vertex {v} out of range");
            s = s.with(v);
        }
        s
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, v) in self.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "}}")
    }
}

impl fmt::Display for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

impl Serialize for VertexSet {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut seq = serializer.serialize_seq(Some(self.len()))?;
        for v in self.iter() {
            seq.serialize_element(&v)?;
        }
        seq.end()
    }
}

/// An immutable simple graph on `n <= 64` vertices.
///
/// `adj[v]` is the open neighborhood of `v`. Symmetry, loop-freeness, and
/// the absence of stray bits are enforced by every constructor. Equality
/// and hashing are on labeled adjacency; use [`crate::canon::is_isomorphic`]
/// for unlabeled comparison.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adj: Vec<u64>,
}

impl Graph {
    /// The empty graph (no vertices). Acts as the identity of `join`.
    pub fn empty() -> Self {
        Graph { n: 0, adj: Vec::new() }
    }

    /// The edgeless graph on `n` vertices (an independent set).
    pub fn edgeless(n: usize) -> Result<Self> {
        if n > MAX_VERTICES {
            return Err(Error::TooManyVertices(n));
        }
        Ok(Graph { n, adj: vec![0; n] })
    }

    /// The complete graph on `n` vertices.
    pub fn complete(n: usize) -> Result<Self> {
        if n > MAX_VERTICES {
            return Err(Error::TooManyVertices(n));
        }
        let full = VertexSet::full(n).bits();
        let adj = (0..n).map(|v| full & !(1u64 << v)).collect();
        Ok(Graph { n, adj })
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = Graph::edgeless(n)?;
        for &(u, v) in edges {
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            if u >= n || v >= n {
                return Err(Error::StrayBits(u.max(v)));
            }
            g.adj[u] |= 1 << v;
            g.adj[v] |= 1 << u;
        }
        Ok(g)
    }

    /// Builds a graph from raw adjacency rows, validating all invariants.
    pub fn from_adj(adj: Vec<u64>) -> Result<Self> {
        let n = adj.len();
        if n > MAX_VERTICES {
            return Err(Error::TooManyVertices(n));
        }
        let full = VertexSet::full(n).bits();
        for (v, &row) in adj.iter().enumerate() {
            if row & !full != 0 {
                return Err(Error::StrayBits(v));
            }
            if row >> v & 1 == 1 {
                return Err(Error::SelfLoop(v));
            }
        }
        for u in 0..n {
            for v in (u + 1)..n {
                if adj[u] >> v & 1 != adj[v] >> u & 1 {
                    return Err(Error::AsymmetricAdjacency(u, v));
                }
            }
        }
        Ok(Graph { n, adj })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|row| row.count_ones() as usize).sum::<usize>() / 2
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        assert!(u < self.n && v < self.n, "vertex out of range");
        self.adj[u] >> v & 1 == 1
    }

    pub fn degree(&self, v: usize) -> usize {
        assert!(v < self.n, "vertex out of range");
        self.adj[v].count_ones() as usize
    }

    /// Sorted ascending degree sequence.
    pub fn degree_sequence(&self) -> Vec<usize> {
        let mut d: Vec<usize> = (0..self.n).map(|v| self.degree(v)).collect();
        d.sort_unstable();
        d
    }

    /// `Some(d)` iff every vertex has degree `d`.
    pub fn regularity(&self) -> Option<usize> {
        let first = self.adj.first()?.count_ones();
        self.adj
            .iter()
            .all(|row| row.count_ones() == first)
            .then_some(first as usize)
    }

    /// Open neighborhood of `v`.
    pub fn neighbors(&self, v: usize) -> VertexSet {
        assert!(v < self.n, "vertex out of range");
        VertexSet(self.adj[v])
    }

    /// Closed neighborhood of `v`: the neighbors together with `v` itself.
    pub fn closed_neighborhood(&self, v: usize) -> VertexSet {
        assert!(v < self.n, "vertex out of range");
        VertexSet(self.adj[v] | 1 << v)
    }

    /// Vertices at distance at least two from `v` (everything outside the
    /// closed neighborhood). Its size is `n - 1 - deg(v)`.
    pub fn nonneighbor_set(&self, v: usize) -> VertexSet {
        let full = VertexSet::full(self.n);
        full.difference(self.closed_neighborhood(v))
    }

    /// All vertices of the graph as a set.
    pub fn vertex_set(&self) -> VertexSet {
        VertexSet::full(self.n)
    }

    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for u in 0..self.n {
            for v in VertexSet(self.adj[u] >> u >> 1).iter() {
                out.push((u, u + 1 + v));
            }
        }
        out
    }

    pub fn complement(&self) -> Graph {
        let full = VertexSet::full(self.n).bits();
        let adj = (0..self.n)
            .map(|v| !self.adj[v] & full & !(1u64 << v))
            .collect();
        Graph { n: self.n, adj }
    }

    /// Disjoint union plus all cross edges. The vertices of `self` keep
    /// their labels; those of `other` are shifted up by `self.n()`.
    pub fn join(&self, other: &Graph) -> Result<Graph> {
        let n = self.n + other.n;
        if n > MAX_VERTICES {
            return Err(Error::JoinTooLarge(n));
        }
        let self_mask = VertexSet::full(self.n).bits();
        let other_mask = VertexSet::full(n).bits() & !self_mask;
        let mut adj = Vec::with_capacity(n);
        for v in 0..self.n {
            adj.push(self.adj[v] | other_mask);
        }
        for v in 0..other.n {
            adj.push(other.adj[v] << self.n | self_mask);
        }
        Ok(Graph { n, adj })
    }

    /// The subgraph induced by `set`, with vertices relabeled to
    /// `0..set.len()` in increasing order of their original index.
    pub fn induced_subgraph(&self, set: VertexSet) -> Graph {
        let verts: Vec<usize> = set.iter().filter(|&v| v < self.n).collect();
        let m = verts.len();
        let mut adj = vec![0u64; m];
        for (i, &u) in verts.iter().enumerate() {
            for (j, &v) in verts.iter().enumerate().skip(i + 1) {
                if self.adj[u] >> v & 1 == 1 {
                    adj[i] |= 1 << j;
                    adj[j] |= 1 << i;
                }
            }
        }
        Graph { n: m, adj }
    }

    /// Removes one vertex, relabeling the rest downwards.
    pub fn delete_vertex(&self, v: usize) -> Graph {
        assert!(v < self.n, "vertex out of range");
        self.induced_subgraph(self.vertex_set().without(v))
    }

    /// Maximal connected vertex sets, ordered by their minimum vertex.
    pub fn connected_components(&self) -> Vec<VertexSet> {
        let mut seen = 0u64;
        let full = VertexSet::full(self.n).bits();
        let mut out = Vec::new();
        while seen != full {
            let start = (!seen & full).trailing_zeros() as usize;
            let mut comp = 1u64 << start;
            loop {
                let mut frontier = 0u64;
                for v in VertexSet(comp).iter() {
                    frontier |= self.adj[v];
                }
                let grown = comp | frontier;
                if grown == comp {
                    break;
                }
                comp = grown;
            }
            seen |= comp;
            out.push(VertexSet(comp));
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.connected_components().len() <= 1
    }

    /// Sorted multiset of connected component sizes.
    pub fn component_sizes(&self) -> Vec<usize> {
        let mut sizes: Vec<usize> = self.connected_components().iter().map(|c| c.len()).collect();
        sizes.sort_unstable();
        sizes
    }

    /// Decodes one line of graph6 (short form, order up to 62).
    pub fn from_graph6(text: &str) -> Result<Graph> {
        let bytes = text.trim().as_bytes();
        if bytes.is_empty() {
            return Err(Error::Graph6Empty);
        }
        if bytes[0] == b'~' {
            return Err(Error::Graph6LongForm);
        }
        for (pos, &b) in bytes.iter().enumerate() {
            if !(63..=126).contains(&b) {
                return Err(Error::Graph6BadChar { byte: b, pos });
            }
        }
        let n = (bytes[0] - 63) as usize;
        let nbits = n * (n.saturating_sub(1)) / 2;
        let expected = 1 + nbits.div_ceil(6);
        if bytes.len() != expected {
            return Err(Error::Graph6BadLength {
                order: n,
                expected,
                got: bytes.len(),
            });
        }
        let mut adj = vec![0u64; n];
        let mut idx = 0usize;
        // Upper triangle in column-major order: (0,1), (0,2), (1,2), ...
        'outer: for col in 1..n {
            for row in 0..col {
                let byte = bytes[1 + idx / 6] - 63;
                let bit = byte >> (5 - idx % 6) & 1;
                if bit == 1 {
                    adj[row] |= 1 << col;
                    adj[col] |= 1 << row;
                }
                idx += 1;
                if idx == nbits {
                    break 'outer;
                }
            }
        }
        // Padding bits in the final character must be zero.
        if nbits % 6 != 0 {
            let last = bytes[bytes.len() - 1] - 63;
            let pad = 6 - nbits % 6;
            if last & ((1 << pad) - 1) != 0 {
                return Err(Error::Graph6TrailingBits);
            }
        }
        Ok(Graph { n, adj })
    }

    /// Encodes as one line of graph6 (short form; requires order up to 62).
    pub fn to_graph6(&self) -> Result<String> {
        if self.n > 62 {
            return Err(Error::Graph6EncodeTooLarge(self.n));
        }
        let n = self.n;
        let nbits = n * n.saturating_sub(1) / 2;
        let mut out = Vec::with_capacity(1 + nbits.div_ceil(6));
        out.push(n as u8 + 63);
        let mut acc = 0u8;
        let mut filled = 0usize;
        for col in 1..n {
            for row in 0..col {
                acc <<= 1;
                acc |= (self.adj[row] >> col & 1) as u8;
                filled += 1;
                if filled == 6 {
                    out.push(acc + 63);
                    acc = 0;
                    filled = 0;
                }
            }
        }
        if filled > 0 {
            out.push((acc << (6 - filled)) + 63);
        }
        Ok(String::from_utf8(out).expect("graph6 bytes are printable ASCII"))
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n, self.edges())
    }
}
