//! Star and complete multipartite recognition.

use serde::{Deserialize, Serialize};

use super::Graph;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum GraphKind {
    Star,
    CompleteMultipartite,
    Other,
}

impl std::fmt::Display for GraphKind {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            GraphKind::Star => "star",
            GraphKind::CompleteMultipartite => "complete_multipartite",
            GraphKind::Other => "other",
        })
    }
}

/// Parts of a complete multipartite graph, ordered by smallest member.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PartitionReport {
    pub parts: Vec<Vec<usize>>,
    pub kind: GraphKind,
    /// Part sizes, ascending.
    pub part_sizes: Vec<usize>,
}

impl Graph {
    /// The center of a star `K_{1,m-1}` on `m` vertices. A single vertex is a
    /// degenerate star centered on itself; on `K_2` the center is vertex 0.
    pub fn is_star(&self) -> Option<usize> {
        let n = self.vertex_count();
        match n {
            0 => None,
            1 => Some(0),
            _ => {
                let center = (0..n).find(|&v| self.degree(v) == n - 1)?;
                (0..n).all(|v| v == center || self.degree(v) == 1).then_some(center)
            }
        }
    }

    /// Succeeds iff the complement is a disjoint union of cliques, i.e.
    /// non-adjacency is an equivalence relation.
    pub fn complete_multipartite_parts(&self) -> Option<PartitionReport> {
        let n = self.vertex_count();
        let mut assigned = vec![false; n];
        let mut parts = Vec::new();
        for v in 0..n {
            if assigned[v] {
                continue;
            }
            let part: Vec<usize> = (0..n).filter(|&w| w == v || !self.has_edge(v, w)).collect();
            for &w in &part {
                let independent = self.neighbors(w).iter().all(|&x| !part.contains(&x));
                if assigned[w] || !independent || self.degree(w) != n - part.len() {
                    return None;
                }
            }
            for &w in &part {
                assigned[w] = true;
            }
            parts.push(part);
        }
        let mut part_sizes: Vec<usize> = parts.iter().map(Vec::len).collect();
        part_sizes.sort_unstable();
        let kind = if self.is_star().is_some() { GraphKind::Star } else { GraphKind::CompleteMultipartite };
        Some(PartitionReport { parts, kind, part_sizes })
    }

    pub fn kind(&self) -> GraphKind {
        self.complete_multipartite_parts().map_or(GraphKind::Other, |r| r.kind)
    }
}
