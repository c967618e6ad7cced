//! Simple undirected graphs on dense vertex labels `0..n`.

use std::collections::VecDeque;
use std::fmt;

use crate::error::{Error, Result};

/// Largest order a [`Graph`] can hold; adjacency rows are `u64` bitsets.
pub const MAX_ORDER: usize = 64;

/// A simple undirected graph on vertices `0..n`.
///
/// Edges are stored once as `(u, v)` with `u < v`, sorted. Adjacency is kept
/// both as sorted neighbor lists and as bitset rows.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    edges: Vec<(usize, usize)>,
    adjacency: Vec<Vec<usize>>,
    rows: Vec<u64>,
}

impl Graph {
    /// Builds a graph, rejecting loops, repeated pairs and out-of-range endpoints.
    pub fn new(n: usize, edge_list: &[(usize, usize)]) -> Result<Self> {
        if n > MAX_ORDER {
            return Err(Error::TooLarge { n, max: MAX_ORDER });
        }
        let mut rows = vec![0u64; n];
        for &(a, b) in edge_list {
            for vertex in [a, b] {
                if vertex >= n {
                    return Err(Error::VertexOutOfRange { vertex, n });
                }
            }
            if a == b {
                return Err(Error::Loop(a));
            }
            if rows[a] & (1 << b) != 0 {
                return Err(Error::DuplicateEdge(a, b));
            }
            rows[a] |= 1 << b;
            rows[b] |= 1 << a;
        }
        Ok(Self::from_rows(rows))
    }

    /// The edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Result<Self> {
        Self::new(n, &[])
    }

    /// Builds from symmetric, loop-free bitset rows. Callers guarantee validity.
    pub(crate) fn from_rows(rows: Vec<u64>) -> Self {
        let n = rows.len();
        let adjacency: Vec<Vec<usize>> = rows.iter().map(|&r| bits(r).collect()).collect();
        let mut edges = Vec::new();
        for (u, nbrs) in adjacency.iter().enumerate() {
            edges.extend(nbrs.iter().filter(|&&v| v > u).map(|&v| (u, v)));
        }
        Graph {
            n,
            edges,
            adjacency,
            rows,
        }
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn size(&self) -> usize {
        self.edges.len()
    }

    /// Edges as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    /// Sorted neighbor list of `v`.
    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adjacency[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adjacency[v].len()
    }

    pub fn degrees(&self) -> Vec<usize> {
        self.adjacency.iter().map(Vec::len).collect()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && v < self.n && self.rows[u] & (1 << v) != 0
    }

    /// Bitset of neighbors of `v`.
    pub fn row(&self, v: usize) -> u64 {
        self.rows[v]
    }

    pub(crate) fn rows(&self) -> &[u64] {
        &self.rows
    }

    pub(crate) fn check_vertex(&self, vertex: usize) -> Result<()> {
        if vertex < self.n {
            Ok(())
        } else {
            Err(Error::VertexOutOfRange { vertex, n: self.n })
        }
    }

    /// True iff a BFS from vertex 0 reaches every vertex. The order-0 graph
    /// counts as disconnected; a single vertex is connected.
    pub fn is_connected(&self) -> bool {
        if self.n == 0 {
            return false;
        }
        self.bfs(0).iter().all(|d| d.is_some())
    }

    pub(crate) fn require_connected(&self) -> Result<()> {
        if self.is_connected() {
            Ok(())
        } else {
            Err(Error::Disconnected)
        }
    }

    /// Hop distances from `source`; `None` for unreachable vertices.
    pub fn bfs(&self, source: usize) -> Vec<Option<usize>> {
        let mut dist = vec![None; self.n];
        let mut queue = VecDeque::new();
        dist[source] = Some(0);
        queue.push_back(source);
        while let Some(x) = queue.pop_front() {
            let next = dist[x].map(|d| d + 1);
            for &y in &self.adjacency[x] {
                if dist[y].is_none() {
                    dist[y] = next;
                    queue.push_back(y);
                }
            }
        }
        dist
    }

    /// Returns a copy with the edge `uv` added.
    pub fn with_edge(&self, u: usize, v: usize) -> Result<Self> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if u == v {
            return Err(Error::Loop(u));
        }
        if self.has_edge(u, v) {
            return Err(Error::DuplicateEdge(u.min(v), u.max(v)));
        }
        let mut rows = self.rows.clone();
        rows[u] |= 1 << v;
        rows[v] |= 1 << u;
        Ok(Self::from_rows(rows))
    }

    /// Returns a copy with the edge `uv` removed.
    pub fn without_edge(&self, u: usize, v: usize) -> Result<Self> {
        if !self.has_edge(u, v) {
            return Err(Error::NotAnEdge(u, v));
        }
        let mut rows = self.rows.clone();
        rows[u] &= !(1 << v);
        rows[v] &= !(1 << u);
        Ok(Self::from_rows(rows))
    }

    /// Appends `count` isolated vertices.
    pub(crate) fn with_extra_vertices(&self, count: usize) -> Result<Self> {
        let n = self.n + count;
        if n > MAX_ORDER {
            return Err(Error::TooLarge { n, max: MAX_ORDER });
        }
        let mut rows = self.rows.clone();
        rows.resize(n, 0);
        Ok(Self::from_rows(rows))
    }

    /// Relabels so that old vertex `v` becomes `perm[v]`.
    pub fn relabel(&self, perm: &[usize]) -> Result<Self> {
        if perm.len() != self.n {
            return Err(Error::DimensionMismatch {
                expected: self.n,
                found: perm.len(),
            });
        }
        let mut seen = 0u64;
        for &p in perm {
            if p >= self.n || seen & (1 << p) != 0 {
                return Err(Error::InvalidParameter(format!(
                    "{perm:?} is not a permutation of 0..{}",
                    self.n
                )));
            }
            seen |= 1 << p;
        }
        let mut rows = vec![0u64; self.n];
        for &(a, b) in &self.edges {
            rows[perm[a]] |= 1 << perm[b];
            rows[perm[b]] |= 1 << perm[a];
        }
        Ok(Self::from_rows(rows))
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n, self.edges)
    }
}

/// Iterates over the set bit positions of `word`, lowest first.
pub(crate) fn bits(mut word: u64) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if word == 0 {
            None
        } else {
            let b = word.trailing_zeros() as usize;
            word &= word - 1;
            Some(b)
        }
    })
}
