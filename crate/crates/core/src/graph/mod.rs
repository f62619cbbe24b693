//! Simple undirected graphs with optional per-vertex annotations.
//!
//! A graph stores both an adjacency matrix and sorted adjacency lists; the
//! graphs in this crate are dense and small (a few hundred vertices).

mod classify;
mod coloring;
mod iso;
mod ops;
mod twins;

use std::collections::VecDeque;

use crate::error::{Error, Result};

pub use classify::{GraphKind, PartitionReport};
pub use coloring::DEFAULT_COLORING_CAP;
pub use iso::{IsoStrategy, BACKTRACK_CAP, QUOTIENT_CAP};
pub use twins::Reduction;

/// Display label and integer tag (element order or divisor) of a vertex.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Annotation {
    pub label: String,
    pub order_tag: u64,
}

impl Annotation {
    pub fn new(label: impl Into<String>, order_tag: u64) -> Self {
        Self { label: label.into(), order_tag }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Diameter {
    Finite(usize),
    Infinite,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    matrix: Vec<bool>,
    adj: Vec<Vec<usize>>,
    annotations: Option<Vec<Annotation>>,
}

impl Graph {
    /// Builds a graph from an edge list. Duplicate and reversed pairs collapse.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut matrix = vec![false; n * n];
        for &(u, v) in edges {
            for w in [u, v] {
                if w >= n {
                    return Err(Error::BadVertex { vertex: w, count: n });
                }
            }
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            matrix[u * n + v] = true;
            matrix[v * n + u] = true;
        }
        Ok(Self::from_matrix(n, matrix))
    }

    /// Builds a graph from an adjacency predicate evaluated on pairs `u < v`.
    pub fn from_fn(n: usize, adjacent: impl Fn(usize, usize) -> bool) -> Self {
        let mut matrix = vec![false; n * n];
        for u in 0..n {
            for v in u + 1..n {
                if adjacent(u, v) {
                    matrix[u * n + v] = true;
                    matrix[v * n + u] = true;
                }
            }
        }
        Self::from_matrix(n, matrix)
    }

    pub(crate) fn from_matrix(n: usize, matrix: Vec<bool>) -> Self {
        debug_assert_eq!(matrix.len(), n * n);
        let adj = (0..n).map(|u| (0..n).filter(|&v| matrix[u * n + v]).collect()).collect();
        Self { n, matrix, adj, annotations: None }
    }

    /// `n K_1`
    pub fn empty(n: usize) -> Self {
        Self::from_fn(n, |_, _| false)
    }

    /// `K_n`
    pub fn complete(n: usize) -> Self {
        Self::from_fn(n, |_, _| true)
    }

    /// `C_n`, for `n >= 3`.
    pub fn cycle(n: usize) -> Self {
        Self::from_fn(n, |u, v| n >= 3 && (v == u + 1 || (u == 0 && v == n - 1)))
    }

    pub fn path(n: usize) -> Self {
        Self::from_fn(n, |u, v| v == u + 1)
    }

    pub fn with_annotations(mut self, annotations: Vec<Annotation>) -> Result<Self> {
        if annotations.len() != self.n {
            return Err(Error::AnnotationMismatch { expected: self.n, got: annotations.len() });
        }
        self.annotations = Some(annotations);
        Ok(self)
    }

    pub fn without_annotations(mut self) -> Self {
        self.annotations = None;
        self
    }

    pub fn annotations(&self) -> Option<&[Annotation]> {
        self.annotations.as_deref()
    }

    pub fn order_tag(&self, v: usize) -> Option<u64> {
        self.annotations.as_ref().map(|a| a[v].order_tag)
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(Vec::len).sum::<usize>() / 2
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.matrix[u * self.n + v]
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    /// Edges `(u, v)` with `u < v`, lexicographically sorted.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adj.iter().enumerate().flat_map(|(u, ns)| ns.iter().filter(move |&&v| v > u).map(move |&v| (u, v)))
    }

    pub fn complement(&self) -> Self {
        Self::from_fn(self.n, |u, v| !self.has_edge(u, v))
    }

    /// Returns a copy with the adjacency of `u` and `v` flipped.
    pub fn toggle_edge(&self, u: usize, v: usize) -> Result<Self> {
        for w in [u, v] {
            if w >= self.n {
                return Err(Error::BadVertex { vertex: w, count: self.n });
            }
        }
        if u == v {
            return Err(Error::SelfLoop(u));
        }
        let mut matrix = self.matrix.clone();
        matrix[u * self.n + v] ^= true;
        matrix[v * self.n + u] ^= true;
        let mut g = Self::from_matrix(self.n, matrix);
        g.annotations = self.annotations.clone();
        Ok(g)
    }

    /// Relabels vertex `v` as `perm[v]`.
    pub fn permuted(&self, perm: &[usize]) -> Self {
        let n = self.n;
        let mut matrix = vec![false; n * n];
        for (u, v) in self.edges() {
            let (a, b) = (perm[u], perm[v]);
            matrix[a * n + b] = true;
            matrix[b * n + a] = true;
        }
        let mut g = Self::from_matrix(n, matrix);
        if let Some(ann) = &self.annotations {
            let mut moved = ann.clone();
            for (v, a) in ann.iter().enumerate() {
                moved[perm[v]] = a.clone();
            }
            g.annotations = Some(moved);
        }
        g
    }

    /// No loops and a symmetric relation.
    pub fn is_simple(&self) -> bool {
        (0..self.n).all(|u| !self.has_edge(u, u) && (0..self.n).all(|v| self.has_edge(u, v) == self.has_edge(v, u)))
    }

    fn bfs(&self, source: usize) -> Vec<Option<usize>> {
        let mut dist = vec![None; self.n];
        dist[source] = Some(0);
        let mut queue = VecDeque::from([source]);
        while let Some(u) = queue.pop_front() {
            let d = dist[u].unwrap();
            for &v in &self.adj[u] {
                if dist[v].is_none() {
                    dist[v] = Some(d + 1);
                    queue.push_back(v);
                }
            }
        }
        dist
    }

    /// The empty graph counts as connected.
    pub fn is_connected(&self) -> bool {
        self.n == 0 || self.bfs(0).iter().all(Option::is_some)
    }

    pub fn diameter(&self) -> Result<Diameter> {
        if self.n == 0 {
            return Err(Error::EmptyGraph);
        }
        let mut best = 0;
        for s in 0..self.n {
            for d in self.bfs(s) {
                match d {
                    Some(d) => best = best.max(d),
                    None => return Ok(Diameter::Infinite),
                }
            }
        }
        Ok(Diameter::Finite(best))
    }

    pub fn is_complete(&self) -> bool {
        self.adj.iter().all(|ns| ns.len() + 1 == self.n)
    }

    /// Connected, at least three vertices, every degree two.
    pub fn is_cycle(&self) -> bool {
        self.n >= 3 && self.adj.iter().all(|ns| ns.len() == 2) && self.is_connected()
    }

    /// Vertex count per order tag, ascending by tag.
    pub fn tag_class_sizes(&self) -> Option<Vec<(u64, usize)>> {
        let ann = self.annotations.as_ref()?;
        let mut counts = std::collections::BTreeMap::new();
        for a in ann {
            *counts.entry(a.order_tag).or_insert(0usize) += 1;
        }
        Some(counts.into_iter().collect())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn from_edges_examples() {
        let g = Graph::from_edges(3, &[]).unwrap();
        assert_eq!((g.vertex_count(), g.edge_count()), (3, 0));
        let k2 = Graph::from_edges(2, &[(0, 1)]).unwrap();
        assert_eq!(k2, Graph::complete(2));
        let one = Graph::from_edges(4, &[(0, 1), (1, 0)]).unwrap();
        assert_eq!(one.edges().collect::<Vec<_>>(), vec![(0, 1)]);
        assert_eq!(Graph::from_edges(2, &[(0, 2)]), Err(Error::BadVertex { vertex: 2, count: 2 }));
        assert_eq!(Graph::from_edges(2, &[(1, 1)]), Err(Error::SelfLoop(1)));
    }

    #[test]
    fn connectivity_and_diameter() {
        let k2 = Graph::complete(2);
        assert!(k2.is_connected());
        assert_eq!(k2.diameter().unwrap(), Diameter::Finite(1));
        let e2 = Graph::empty(2);
        assert!(!e2.is_connected());
        assert_eq!(e2.diameter().unwrap(), Diameter::Infinite);
        assert_eq!(Graph::empty(1).diameter().unwrap(), Diameter::Finite(0));
        assert_eq!(Graph::empty(0).diameter(), Err(Error::EmptyGraph));
        assert_eq!(Graph::path(5).diameter().unwrap(), Diameter::Finite(4));
        assert_eq!(Graph::cycle(7).diameter().unwrap(), Diameter::Finite(3));
    }

    #[test]
    fn cycles_and_completeness() {
        assert!(Graph::cycle(3).is_cycle());
        assert!(Graph::cycle(6).is_cycle());
        assert!(!Graph::path(4).is_cycle());
        let two_triangles = Graph::from_edges(6, &[(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)]).unwrap();
        assert!(!two_triangles.is_cycle());
        assert!(Graph::complete(4).is_complete());
        assert!(Graph::complete(1).is_complete());
        assert!(!Graph::cycle(4).is_complete());
    }

    #[test]
    fn annotations_must_cover_vertices() {
        let g = Graph::complete(2);
        assert!(g.clone().with_annotations(vec![Annotation::new("a", 1)]).is_err());
        let g = g.with_annotations(vec![Annotation::new("a", 1), Annotation::new("b", 2)]).unwrap();
        assert_eq!(g.order_tag(1), Some(2));
        assert_eq!(g.tag_class_sizes().unwrap(), vec![(1, 1), (2, 1)]);
    }

    #[test]
    fn toggle_and_permute() {
        let p = Graph::path(3);
        let t = p.toggle_edge(0, 2).unwrap();
        assert!(t.is_complete());
        assert_eq!(t.toggle_edge(0, 2).unwrap(), p);
        assert!(p.toggle_edge(1, 1).is_err());
        let q = p.permuted(&[1, 0, 2]);
        assert!(q.has_edge(1, 0) && q.has_edge(0, 2) && !q.has_edge(1, 2));
        assert!(q.is_simple());
    }
}
