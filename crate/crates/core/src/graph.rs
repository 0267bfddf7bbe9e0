//! Bit-row graphs of order at most 62 and vertex subsets as bitmasks.

use std::fmt;
use std::ops::{BitAnd, BitOr, Sub};

use crate::error::{Error, Result};

/// Largest supported order: fits single-byte graph6 headers and one `u64` per row.
pub const MAX_ORDER: usize = 62;

/// A subset of vertices `0..n` stored as a bitmask.
#[derive(Clone, Copy, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct VertexSet(u64);

impl VertexSet {
    pub const EMPTY: VertexSet = VertexSet(0);

    pub const fn from_bits(bits: u64) -> Self {
        VertexSet(bits)
    }

    pub const fn bits(self) -> u64 {
        self.0
    }

    /// All of `0..n`.
    pub const fn full(n: usize) -> Self {
        if n == 0 {
            VertexSet(0)
        } else {
            VertexSet(u64::MAX >> (64 - n))
        }
    }

    pub const fn singleton(v: usize) -> Self {
        VertexSet(1 << v)
    }

    pub const fn contains(self, v: usize) -> bool {
        v < 64 && self.0 >> v & 1 == 1
    }

    pub fn insert(&mut self, v: usize) {
        self.0 |= 1 << v;
    }

    pub fn remove(&mut self, v: usize) {
        self.0 &= !(1 << v);
    }

    pub const fn with(self, v: usize) -> Self {
        VertexSet(self.0 | 1 << v)
    }

    pub const fn without(self, v: usize) -> Self {
        VertexSet(self.0 & !(1 << v))
    }

    pub const fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub const fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub const fn is_subset(self, other: VertexSet) -> bool {
        self.0 & !other.0 == 0
    }

    pub const fn is_disjoint(self, other: VertexSet) -> bool {
        self.0 & other.0 == 0
    }

    /// Smallest member, if any.
    pub const fn first(self) -> Option<usize> {
        if self.0 == 0 {
            None
        } else {
            Some(self.0.trailing_zeros() as usize)
        }
    }

    pub fn iter(self) -> Members {
        Members(self.0)
    }
}

/// Iterator over the members of a [`VertexSet`] in ascending order.
#[derive(Clone, Debug)]
pub struct Members(u64);

impl Iterator for Members {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let v = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(v)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let n = self.0.count_ones() as usize;
        (n, Some(n))
    }
}

impl ExactSizeIterator for Members {}

impl IntoIterator for VertexSet {
    type Item = usize;
    type IntoIter = Members;

    fn into_iter(self) -> Members {
        self.iter()
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        iter.into_iter().fold(VertexSet::EMPTY, VertexSet::with)
    }
}

impl BitOr for VertexSet {
    type Output = VertexSet;
    fn bitor(self, rhs: VertexSet) -> VertexSet {
        VertexSet(self.0 | rhs.0)
    }
}

impl BitAnd for VertexSet {
    type Output = VertexSet;
    fn bitand(self, rhs: VertexSet) -> VertexSet {
        VertexSet(self.0 & rhs.0)
    }
}

impl Sub for VertexSet {
    type Output = VertexSet;
    fn sub(self, rhs: VertexSet) -> VertexSet {
        VertexSet(self.0 & !rhs.0)
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl fmt::LowerHex for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::LowerHex::fmt(&self.0, f)
    }
}

/// A non-negative count that may be infinite, used for distances and domination numbers.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Count {
    Finite(usize),
    Infinite,
}

impl Count {
    pub fn finite(self) -> Option<usize> {
        match self {
            Count::Finite(k) => Some(k),
            Count::Infinite => None,
        }
    }

    pub fn is_finite(self) -> bool {
        matches!(self, Count::Finite(_))
    }
}

impl fmt::Display for Count {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Count::Finite(k) => write!(f, "{k}"),
            Count::Infinite => f.write_str("inf"),
        }
    }
}

/// Simple undirected graph on vertices `0..n`, one adjacency bit row per vertex.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    adj: Vec<u64>,
}

impl Graph {
    /// Edgeless graph on `n` vertices.
    pub fn new(n: usize) -> Result<Self> {
        if n > MAX_ORDER {
            return Err(Error::Size(n));
        }
        Ok(Graph { adj: vec![0; n] })
    }

    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut g = Graph::new(n)?;
        for (u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    /// Builds a graph from raw adjacency rows, rejecting rows that break symmetry,
    /// irreflexivity or the order bound.
    pub fn from_rows(rows: Vec<u64>) -> Result<Self> {
        if rows.len() > MAX_ORDER {
            return Err(Error::Size(rows.len()));
        }
        let g = Graph { adj: rows };
        g.validate()?;
        Ok(g)
    }

    /// Checks the representation invariants.
    pub fn validate(&self) -> Result<()> {
        let n = self.order();
        let all = VertexSet::full(n).bits();
        for (v, &row) in self.adj.iter().enumerate() {
            if row & !all != 0 {
                let index = (row & !all).trailing_zeros() as usize;
                return Err(Error::Index { index, order: n });
            }
            if row >> v & 1 == 1 {
                return Err(Error::SelfLoop(v));
            }
            for u in VertexSet::from_bits(row) {
                if self.adj[u] >> v & 1 == 0 {
                    return Err(Error::Parse(format!(
                        "asymmetric adjacency between {v} and {u}"
                    )));
                }
            }
        }
        Ok(())
    }

    pub fn complete(n: usize) -> Result<Self> {
        let mut g = Graph::new(n)?;
        let all = VertexSet::full(n).bits();
        for (v, row) in g.adj.iter_mut().enumerate() {
            *row = all & !(1 << v);
        }
        Ok(g)
    }

    pub fn order(&self) -> usize {
        self.adj.len()
    }

    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.order())
    }

    pub fn rows(&self) -> &[u64] {
        &self.adj
    }

    fn check_index(&self, v: usize) -> Result<()> {
        if v < self.order() {
            Ok(())
        } else {
            Err(Error::Index {
                index: v,
                order: self.order(),
            })
        }
    }

    /// Adds the edge `uv`. Adding an existing edge is a no-op.
    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<()> {
        self.check_index(u)?;
        self.check_index(v)?;
        if u == v {
            return Err(Error::SelfLoop(u));
        }
        self.adj[u] |= 1 << v;
        self.adj[v] |= 1 << u;
        Ok(())
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.order() && v < self.order() && self.adj[u] >> v & 1 == 1
    }

    /// Open neighborhood N(v). Panics if `v` is out of range.
    pub fn neighbors(&self, v: usize) -> VertexSet {
        VertexSet(self.adj[v])
    }

    /// Closed neighborhood N[v].
    pub fn closed_neighbors(&self, v: usize) -> VertexSet {
        VertexSet(self.adj[v] | 1 << v)
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    pub fn max_degree(&self) -> Result<usize> {
        self.adj
            .iter()
            .map(|r| r.count_ones() as usize)
            .max()
            .ok_or(Error::EmptyGraph)
    }

    pub fn min_degree(&self) -> Result<usize> {
        self.adj
            .iter()
            .map(|r| r.count_ones() as usize)
            .min()
            .ok_or(Error::EmptyGraph)
    }

    /// Vertices attaining the maximum degree.
    pub fn max_degree_vertices(&self) -> VertexSet {
        let Ok(delta) = self.max_degree() else {
            return VertexSet::EMPTY;
        };
        (0..self.order())
            .filter(|&v| self.degree(v) == delta)
            .collect()
    }

    pub fn edge_count(&self) -> usize {
        self.adj
            .iter()
            .map(|r| r.count_ones() as usize)
            .sum::<usize>()
            / 2
    }

    /// Edges `(u, v)` with `u < v`, ordered by `u` then `v`.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adj.iter().enumerate().flat_map(|(u, &row)| {
            VertexSet(row & !((2u64 << u) - 1))
                .iter()
                .map(move |v| (u, v))
        })
    }

    /// N(S): union of the open neighborhoods of the members of `s`.
    pub fn open_neighborhood_of_set(&self, s: VertexSet) -> VertexSet {
        VertexSet(s.iter().fold(0, |acc, v| acc | self.adj[v]))
    }

    /// N[S] = N(S) ∪ S.
    pub fn closed_neighborhood_of_set(&self, s: VertexSet) -> VertexSet {
        self.open_neighborhood_of_set(s) | s
    }

    /// G − v with vertices above `v` shifted down by one.
    pub fn delete_vertex(&self, v: usize) -> Result<Graph> {
        self.check_index(v)?;
        let low = (1u64 << v) - 1;
        let adj = self
            .adj
            .iter()
            .enumerate()
            .filter(|&(u, _)| u != v)
            .map(|(_, &row)| (row & low) | ((row >> (v + 1)) << v))
            .collect();
        Ok(Graph { adj })
    }

    /// Relabels vertex `v` as `perm[v]`. `perm` must be a permutation of `0..n`.
    pub fn permuted(&self, perm: &[usize]) -> Result<Graph> {
        let n = self.order();
        if perm.len() != n
            || perm.iter().any(|&p| p >= n)
            || perm.iter().copied().collect::<VertexSet>().len() != n
        {
            return Err(Error::Parameter(
                "relabeling is not a permutation of the vertex set".into(),
            ));
        }
        let mut adj = vec![0u64; n];
        for (u, v) in self.edges() {
            adj[perm[u]] |= 1 << perm[v];
            adj[perm[v]] |= 1 << perm[u];
        }
        Ok(Graph { adj })
    }

    /// Vertices reachable from `start`, including `start`.
    pub fn component_of(&self, start: usize) -> VertexSet {
        VertexSet(reachable(
            &self.adj,
            start,
            VertexSet::full(self.order()).bits(),
        ))
    }

    /// True iff the graph has a single component. The empty graph counts as connected.
    pub fn is_connected(&self) -> bool {
        self.order() == 0 || self.component_of(0) == self.vertices()
    }

    /// Largest eccentricity; [`Count::Infinite`] when disconnected.
    pub fn diameter(&self) -> Result<Count> {
        let n = self.order();
        if n == 0 {
            return Err(Error::EmptyGraph);
        }
        let all = self.vertices().bits();
        let mut diam = 0;
        for v in 0..n {
            match eccentricity(&self.adj, v, all) {
                Some(e) => diam = diam.max(e),
                None => return Ok(Count::Infinite),
            }
        }
        Ok(Count::Finite(diam))
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Graph")
            .field("order", &self.order())
            .field("edges", &self.edges().collect::<Vec<_>>())
            .finish()
    }
}

/// Breadth-first closure over bit rows restricted to `active`.
pub(crate) fn reachable(rows: &[u64], start: usize, active: u64) -> u64 {
    let mut seen = 1u64 << start;
    let mut frontier = seen;
    while frontier != 0 {
        let mut next = 0;
        for v in VertexSet(frontier) {
            next |= rows[v];
        }
        frontier = next & active & !seen;
        seen |= frontier;
    }
    seen
}

pub(crate) fn eccentricity(rows: &[u64], start: usize, active: u64) -> Option<usize> {
    let mut seen = 1u64 << start;
    let mut frontier = seen;
    let mut depth = 0;
    while seen != active {
        let mut next = 0;
        for v in VertexSet(frontier) {
            next |= rows[v];
        }
        frontier = next & active & !seen;
        if frontier == 0 {
            return None;
        }
        seen |= frontier;
        depth += 1;
    }
    Some(depth)
}
