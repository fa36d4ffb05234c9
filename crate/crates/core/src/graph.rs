//! Immutable simple undirected graphs and the vertex-subset primitives used
//! by the counter, the sampling algorithm and the ensemble harness.

use alloc::collections::VecDeque;
use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;

/// Errors raised while building a graph or addressing its vertices.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum GraphError {
    #[error("edge ({u}, {v}) has an endpoint outside 0..{n}")]
    EndpointOutOfRange { u: usize, v: usize, n: usize },
    #[error("edge ({v}, {v}) is a self-loop")]
    SelfLoop { v: usize },
    #[error("vertex {v} is outside 0..{n}")]
    VertexOutOfRange { v: usize, n: usize },
}

/// Exact average degree `2e / n`, kept as a rational.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
pub struct AverageDegree {
    pub twice_edges: u64,
    pub vertices: u64,
}

impl AverageDegree {
    pub fn new(twice_edges: u64, vertices: u64) -> Self {
        Self { twice_edges, vertices }
    }

    pub fn as_f64(self) -> f64 {
        if self.vertices == 0 {
            0.0
        } else {
            self.twice_edges as f64 / self.vertices as f64
        }
    }

    pub fn is_zero(self) -> bool {
        self.twice_edges == 0
    }

    /// Compares `2e/n` with the integer `m` without rounding.
    pub fn cmp_integer(self, m: u64) -> Ordering {
        (self.twice_edges as u128).cmp(&(m as u128 * self.vertices as u128))
    }
}

impl fmt::Display for AverageDegree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.twice_edges, self.vertices)
    }
}

/// A sorted, duplicate-free set of vertex indices of some host graph.
#[derive(Debug, Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
#[cfg_attr(feature = "serde", serde(transparent))]
pub struct VertexSet {
    members: Vec<usize>,
}

impl VertexSet {
    pub fn new() -> Self {
        Self::default()
    }

    /// Builds a set from arbitrary indices; sorts and deduplicates.
    pub fn from_indices<I: IntoIterator<Item = usize>>(indices: I) -> Self {
        let mut members: Vec<usize> = indices.into_iter().collect();
        members.sort_unstable();
        members.dedup();
        Self { members }
    }

    /// `{0, .., n-1}`.
    pub fn full(n: usize) -> Self {
        Self { members: (0..n).collect() }
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, v: usize) -> bool {
        self.members.binary_search(&v).is_ok()
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.members.iter().copied()
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.members
    }

    pub fn into_vec(self) -> Vec<usize> {
        self.members
    }

    pub fn is_disjoint(&self, other: &VertexSet) -> bool {
        let (mut i, mut j) = (0, 0);
        while i < self.members.len() && j < other.members.len() {
            match self.members[i].cmp(&other.members[j]) {
                Ordering::Less => i += 1,
                Ordering::Greater => j += 1,
                Ordering::Equal => return false,
            }
        }
        true
    }

    pub fn union(&self, other: &VertexSet) -> VertexSet {
        VertexSet::from_indices(self.iter().chain(other.iter()))
    }

    /// Maps every member through `map` (e.g. an induced subgraph's back-map).
    pub fn mapped(&self, map: &[usize]) -> VertexSet {
        VertexSet::from_indices(self.iter().map(|v| map[v]))
    }

    fn check_within(&self, n: usize) -> Result<(), GraphError> {
        match self.members.last() {
            Some(&v) if v >= n => Err(GraphError::VertexOutOfRange { v, n }),
            _ => Ok(()),
        }
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        Self::from_indices(iter)
    }
}

/// Simple undirected graph on vertices `0..n` with sorted adjacency lists.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    adjacency: Vec<Vec<usize>>,
    edge_count: usize,
}

/// An induced subgraph together with the map from its vertices back to the host.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Induced {
    pub graph: Graph,
    pub back_map: Vec<usize>,
}

impl Graph {
    /// Edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Self {
        Self { adjacency: vec![Vec::new(); n], edge_count: 0 }
    }

    /// Builds a graph from unordered pairs. Repeated pairs collapse to one edge.
    pub fn from_edge_list(n: usize, edges: &[(usize, usize)]) -> Result<Self, GraphError> {
        let mut adjacency = vec![Vec::new(); n];
        for &(u, v) in edges {
            if u >= n || v >= n {
                return Err(GraphError::EndpointOutOfRange { u, v, n });
            }
            if u == v {
                return Err(GraphError::SelfLoop { v });
            }
            adjacency[u].push(v);
            adjacency[v].push(u);
        }
        let mut twice = 0;
        for list in &mut adjacency {
            list.sort_unstable();
            list.dedup();
            twice += list.len();
        }
        Ok(Self { adjacency, edge_count: twice / 2 })
    }

    pub fn complete(n: usize) -> Self {
        let adjacency = (0..n).map(|v| (0..n).filter(|&u| u != v).collect()).collect();
        Self { adjacency, edge_count: n * n.saturating_sub(1) / 2 }
    }

    pub fn cycle(n: usize) -> Self {
        assert!(n >= 3, "a cycle needs at least 3 vertices");
        let edges: Vec<_> = (0..n).map(|v| (v, (v + 1) % n)).collect();
        Self::from_edge_list(n, &edges).expect("cycle edges are valid")
    }

    pub fn path(n: usize) -> Self {
        let edges: Vec<_> = (1..n).map(|v| (v - 1, v)).collect();
        Self::from_edge_list(n, &edges).expect("path edges are valid")
    }

    /// Outer 5-cycle 0..5, inner pentagram 5..10, spokes `v -- v+5`.
    pub fn petersen() -> Self {
        let mut edges = Vec::with_capacity(15);
        for v in 0..5 {
            edges.push((v, (v + 1) % 5));
            edges.push((5 + v, 5 + (v + 2) % 5));
            edges.push((v, v + 5));
        }
        Self::from_edge_list(10, &edges).expect("petersen edges are valid")
    }

    /// Disjoint union; the vertices of `other` are shifted by `self.vertex_count()`.
    pub fn disjoint_union(&self, other: &Graph) -> Graph {
        let shift = self.vertex_count();
        let mut adjacency = self.adjacency.clone();
        adjacency.extend(other.adjacency.iter().map(|l| l.iter().map(|&u| u + shift).collect()));
        Graph { adjacency, edge_count: self.edge_count + other.edge_count }
    }

    pub fn vertex_count(&self) -> usize {
        self.adjacency.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edge_count
    }

    pub fn average_degree(&self) -> AverageDegree {
        AverageDegree::new(2 * self.edge_count as u64, self.vertex_count() as u64)
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adjacency[v].len()
    }

    pub fn max_degree(&self) -> usize {
        self.adjacency.iter().map(Vec::len).max().unwrap_or(0)
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adjacency[v]
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adjacency[u].binary_search(&v).is_ok()
    }

    /// Edges as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adjacency
            .iter()
            .enumerate()
            .flat_map(|(u, l)| l.iter().filter(move |&&v| v > u).map(move |&v| (u, v)))
    }

    /// True iff no three vertices are mutually adjacent.
    pub fn is_triangle_free(&self) -> bool {
        self.edges().all(|(u, v)| !sorted_intersect(&self.adjacency[u], &self.adjacency[v]))
    }

    pub fn is_independent(&self, set: &VertexSet) -> bool {
        set.iter().all(|v| v < self.vertex_count())
            && set.iter().all(|v| self.adjacency[v].iter().all(|&u| !set.contains(u)))
    }

    /// Number of edges with both endpoints in `set`.
    pub fn internal_edges(&self, set: &VertexSet) -> usize {
        let mut mark = vec![false; self.vertex_count()];
        for v in set.iter() {
            mark[v] = true;
        }
        internal_edges_marked(self, set.as_slice(), &mark)
    }

    /// Subgraph induced by `s`, with vertex `j` of the result mapping to `s[j]`.
    pub fn induced(&self, s: &VertexSet) -> Result<Induced, GraphError> {
        s.check_within(self.vertex_count())?;
        let mut local = vec![usize::MAX; self.vertex_count()];
        for (j, v) in s.iter().enumerate() {
            local[v] = j;
        }
        let mut twice = 0;
        let adjacency: Vec<Vec<usize>> = s
            .iter()
            .map(|v| {
                let row: Vec<usize> =
                    self.adjacency[v].iter().map(|&u| local[u]).filter(|&j| j != usize::MAX).collect();
                twice += row.len();
                row
            })
            .collect();
        Ok(Induced {
            graph: Graph { adjacency, edge_count: twice / 2 },
            back_map: s.as_slice().to_vec(),
        })
    }

    /// Vertices outside `h` with no neighbour in `h`: `V \ (h ∪ N(h))`.
    pub fn survivor_set(&self, h: &VertexSet) -> Result<VertexSet, GraphError> {
        h.check_within(self.vertex_count())?;
        let mut removed = vec![false; self.vertex_count()];
        for v in h.iter() {
            removed[v] = true;
            for &u in &self.adjacency[v] {
                removed[u] = true;
            }
        }
        Ok(VertexSet {
            members: (0..self.vertex_count()).filter(|&v| !removed[v]).collect(),
        })
    }

    /// `{v : deg(v) <= cap}`.
    pub fn low_degree_set(&self, cap: f64) -> VertexSet {
        VertexSet {
            members: (0..self.vertex_count()).filter(|&v| self.degree(v) as f64 <= cap).collect(),
        }
    }

    /// `{v : deg(v) <= factor * t}`, compared as `deg * n <= factor * 2e` so
    /// integral factors never suffer rounding.
    pub fn low_degree_pool(&self, factor: f64) -> VertexSet {
        let n = self.vertex_count() as f64;
        let bound = factor * (2 * self.edge_count) as f64;
        VertexSet {
            members: (0..self.vertex_count()).filter(|&v| self.degree(v) as f64 * n <= bound).collect(),
        }
    }

    /// Connected components ordered by their smallest vertex.
    pub fn connected_components(&self) -> Vec<VertexSet> {
        let n = self.vertex_count();
        let mut seen = vec![false; n];
        let mut queue = VecDeque::new();
        let mut out = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            seen[start] = true;
            queue.push_back(start);
            let mut members = Vec::new();
            while let Some(v) = queue.pop_front() {
                members.push(v);
                for &u in &self.adjacency[v] {
                    if !seen[u] {
                        seen[u] = true;
                        queue.push_back(u);
                    }
                }
            }
            members.sort_unstable();
            out.push(VertexSet { members });
        }
        out
    }
}

pub(crate) fn internal_edges_marked(g: &Graph, members: &[usize], mark: &[bool]) -> usize {
    members.iter().map(|&v| g.neighbors(v).iter().filter(|&&u| mark[u]).count()).sum::<usize>() / 2
}

fn sorted_intersect(a: &[usize], b: &[usize]) -> bool {
    let (mut i, mut j) = (0, 0);
    while i < a.len() && j < b.len() {
        match a[i].cmp(&b[j]) {
            Ordering::Less => i += 1,
            Ordering::Greater => j += 1,
            Ordering::Equal => return true,
        }
    }
    false
}
