//! Exact isomorphism for small graphs and for twin-rich graphs.
//!
//! Two strategies share one weighted backtracking matcher:
//!
//! * backtracking on the graphs themselves, for at most [`BACKTRACK_CAP`]
//!   vertices;
//! * the twin quotient: open twins are never adjacent, and adjacency between
//!   two open-twin classes is all or nothing, so a graph is recovered from
//!   its open-twin quotient plus class sizes. Two graphs are isomorphic iff
//!   their quotients are isomorphic by a class-size preserving map.

use std::collections::HashMap;

use super::Graph;
use crate::error::{Error, Result};

pub const BACKTRACK_CAP: usize = 16;
pub const QUOTIENT_CAP: usize = 64;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum IsoStrategy {
    Backtracking,
    TwinQuotient,
    /// Twin quotient when it fits, else backtracking when that fits.
    Auto,
}

/// Joint color refinement of two vertex-weighted graphs; returns stable
/// colors for `a` and `b` drawn from one palette.
fn refine(a: &Graph, wa: &[usize], b: &Graph, wb: &[usize]) -> (Vec<usize>, Vec<usize>) {
    let mut ca: Vec<usize> = wa.to_vec();
    let mut cb: Vec<usize> = wb.to_vec();
    let mut classes = usize::MAX;
    loop {
        let mut palette: HashMap<(usize, Vec<usize>), usize> = HashMap::new();
        let mut step = |g: &Graph, c: &[usize]| -> Vec<usize> {
            (0..g.vertex_count())
                .map(|v| {
                    let mut around: Vec<usize> = g.neighbors(v).iter().map(|&w| c[w]).collect();
                    around.sort_unstable();
                    let next = palette.len();
                    *palette.entry((c[v], around)).or_insert(next)
                })
                .collect()
        };
        let na = step(a, &ca);
        let nb = step(b, &cb);
        let count = palette.len();
        ca = na;
        cb = nb;
        if count == classes {
            return (ca, cb);
        }
        classes = count;
    }
}

fn sorted(mut v: Vec<usize>) -> Vec<usize> {
    v.sort_unstable();
    v
}

/// Weight-preserving isomorphism `a -> b`, if any.
fn match_weighted(a: &Graph, wa: &[usize], b: &Graph, wb: &[usize]) -> Option<Vec<usize>> {
    let n = a.vertex_count();
    if n != b.vertex_count() || a.edge_count() != b.edge_count() {
        return None;
    }
    let (ca, cb) = refine(a, wa, b, wb);
    if sorted(ca.clone()) != sorted(cb.clone()) {
        return None;
    }

    // rarest colors first, then stay connected to what is already placed
    let mut freq: HashMap<usize, usize> = HashMap::new();
    for &c in &ca {
        *freq.entry(c).or_default() += 1;
    }
    let mut order: Vec<usize> = Vec::with_capacity(n);
    let mut placed = vec![false; n];
    while order.len() < n {
        let next = (0..n)
            .filter(|&v| !placed[v])
            .max_by_key(|&v| {
                let links = order.iter().filter(|&&u| a.has_edge(u, v)).count();
                (links, std::cmp::Reverse(freq[&ca[v]]), std::cmp::Reverse(v))
            })
            .unwrap();
        placed[next] = true;
        order.push(next);
    }

    #[allow(clippy::too_many_arguments)]
    fn extend(
        i: usize,
        order: &[usize],
        a: &Graph,
        b: &Graph,
        ca: &[usize],
        cb: &[usize],
        map: &mut [usize],
        used: &mut [bool],
    ) -> bool {
        let Some(&v) = order.get(i) else {
            return true;
        };
        for cand in 0..b.vertex_count() {
            if used[cand] || cb[cand] != ca[v] {
                continue;
            }
            let consistent = order[..i].iter().all(|&u| a.has_edge(u, v) == b.has_edge(map[u], cand));
            if consistent {
                map[v] = cand;
                used[cand] = true;
                if extend(i + 1, order, a, b, ca, cb, map, used) {
                    return true;
                }
                used[cand] = false;
            }
        }
        false
    }

    let mut map = vec![usize::MAX; n];
    let mut used = vec![false; n];
    extend(0, &order, a, b, &ca, &cb, &mut map, &mut used).then_some(map)
}

/// Open-twin quotient: the quotient graph and its classes.
fn twin_quotient(g: &Graph) -> Option<(Graph, Vec<Vec<usize>>)> {
    let classes = g.open_twin_classes();
    let independent = classes.iter().all(|c| c.iter().all(|&u| c.iter().all(|&v| !g.has_edge(u, v))));
    if !independent {
        return None;
    }
    let q = Graph::from_fn(classes.len(), |x, y| g.has_edge(classes[x][0], classes[y][0]));
    Some((q, classes))
}

impl Graph {
    /// A vertex map `self -> other` witnessing isomorphism, if one exists.
    pub fn isomorphism(&self, other: &Graph, strategy: IsoStrategy) -> Result<Option<Vec<usize>>> {
        let n = self.vertex_count();
        if n != other.vertex_count() || self.edge_count() != other.edge_count() {
            return Ok(None);
        }
        match strategy {
            IsoStrategy::Backtracking => {
                if n > BACKTRACK_CAP {
                    return Err(Error::CapExceeded {
                        what: "backtracking isomorphism input",
                        size: n as u64,
                        cap: BACKTRACK_CAP as u64,
                    });
                }
                let ones = vec![1; n];
                Ok(match_weighted(self, &ones, other, &ones))
            }
            IsoStrategy::TwinQuotient => {
                let (Some((qa, ka)), Some((qb, kb))) = (twin_quotient(self), twin_quotient(other)) else {
                    return Err(Error::NoIsoStrategy("a twin class is not independent".into()));
                };
                if qa.vertex_count() != qb.vertex_count() {
                    return Ok(None);
                }
                let cap = qa.vertex_count().max(qb.vertex_count());
                if cap > QUOTIENT_CAP {
                    return Err(Error::CapExceeded {
                        what: "twin quotient",
                        size: cap as u64,
                        cap: QUOTIENT_CAP as u64,
                    });
                }
                let wa: Vec<usize> = ka.iter().map(Vec::len).collect();
                let wb: Vec<usize> = kb.iter().map(Vec::len).collect();
                let Some(qmap) = match_weighted(&qa, &wa, &qb, &wb) else {
                    return Ok(None);
                };
                let mut map = vec![0; n];
                for (x, class) in ka.iter().enumerate() {
                    for (&u, &v) in class.iter().zip(&kb[qmap[x]]) {
                        map[u] = v;
                    }
                }
                Ok(Some(map))
            }
            IsoStrategy::Auto => match self.isomorphism(other, IsoStrategy::TwinQuotient) {
                Err(_) if n <= BACKTRACK_CAP => self.isomorphism(other, IsoStrategy::Backtracking),
                Err(e) => Err(Error::NoIsoStrategy(e.to_string())),
                ok => ok,
            },
        }
    }

    pub fn is_isomorphic(&self, other: &Graph) -> Result<bool> {
        Ok(self.isomorphism(other, IsoStrategy::Auto)?.is_some())
    }

    /// Checks that `map` is an isomorphism `self -> other`.
    pub fn is_isomorphism(&self, other: &Graph, map: &[usize]) -> bool {
        let n = self.vertex_count();
        if n != other.vertex_count() || map.len() != n {
            return false;
        }
        let mut hit = vec![false; n];
        for &m in map {
            if m >= n || std::mem::replace(&mut hit[m], true) {
                return false;
            }
        }
        (0..n).all(|u| (u + 1..n).all(|v| self.has_edge(u, v) == other.has_edge(map[u], map[v])))
    }
}
