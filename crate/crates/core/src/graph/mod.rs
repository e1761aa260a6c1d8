//! Simple undirected graphs of order at most 64 with one `u64` adjacency row
//! per vertex, plus the constructions and structural queries built on them.

mod bkspec;
mod canonical;
mod construct;
mod dot;
mod graph6;
mod iso;

use std::fmt;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::{Error, Result};

pub use bkspec::BkSpec;
pub use canonical::{canonical_decomposition, CanonicalDecomposition};
pub use construct::{
    complete, complete_multipartite, cycle, gn, gn_vertex_for_position, k_joining, lex_product,
    path, realize_bk, star,
};
pub use dot::to_dot;
pub use graph6::{from_graph6, to_graph6};
pub use iso::{
    canonical_code, contains_induced, find_induced, find_isomorphism, isomorphic,
    CANONICAL_CODE_MAX_ORDER, INDUCED_PATTERN_MAX_ORDER, ISOMORPHIC_MAX_ORDER,
};

pub const MAX_ORDER: usize = 64;

/// Iterates the indices of the set bits of `mask` in ascending order.
pub fn bits(mut mask: u64) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if mask == 0 {
            None
        } else {
            let i = mask.trailing_zeros() as usize;
            mask &= mask - 1;
            Some(i)
        }
    })
}

/// Bit mask with the given vertices set.
pub fn mask_of(vertices: &[usize]) -> u64 {
    vertices.iter().fold(0, |m, &v| m | (1u64 << v))
}

#[inline]
fn low_mask(n: usize) -> u64 {
    if n >= 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

/// A simple undirected graph on vertices `0..order`.
///
/// Row `i` of `adj` holds the neighborhood of vertex `i`. Rows are symmetric,
/// have a zero diagonal and no bits at or above `order`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    order: usize,
    adj: Vec<u64>,
}

impl Graph {
    /// The edgeless graph on `order` vertices.
    pub fn empty(order: usize) -> Result<Self> {
        if order > MAX_ORDER {
            return Err(Error::UnsupportedOrder {
                order,
                limit: MAX_ORDER,
            });
        }
        Ok(Graph {
            order,
            adj: vec![0; order],
        })
    }

    pub fn from_edges(order: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = Graph::empty(order)?;
        for &(u, v) in edges {
            if u >= order || v >= order {
                return Err(Error::invalid(format!(
                    "edge ({u}, {v}) out of range for order {order}"
                )));
            }
            if u == v {
                return Err(Error::invalid(format!("loop at vertex {u}")));
            }
            g.set_edge(u, v, true);
        }
        Ok(g)
    }

    /// Builds a graph from raw adjacency rows, checking every invariant.
    pub fn from_rows(rows: Vec<u64>) -> Result<Self> {
        let order = rows.len();
        if order > MAX_ORDER {
            return Err(Error::UnsupportedOrder {
                order,
                limit: MAX_ORDER,
            });
        }
        let valid = low_mask(order);
        for (i, &row) in rows.iter().enumerate() {
            if row & !valid != 0 {
                return Err(Error::invalid(format!("row {i} has bits beyond order")));
            }
            if row >> i & 1 == 1 {
                return Err(Error::invalid(format!("loop at vertex {i}")));
            }
            for j in bits(row) {
                if rows[j] >> i & 1 == 0 {
                    return Err(Error::invalid(format!("asymmetric pair ({i}, {j})")));
                }
            }
        }
        Ok(Graph { order, adj: rows })
    }

    pub(crate) fn set_edge(&mut self, u: usize, v: usize, present: bool) {
        debug_assert!(u != v && u < self.order && v < self.order);
        if present {
            self.adj[u] |= 1 << v;
            self.adj[v] |= 1 << u;
        } else {
            self.adj[u] &= !(1 << v);
            self.adj[v] &= !(1 << u);
        }
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.order
    }

    /// Mask with every vertex of the graph set.
    #[inline]
    pub fn vertex_mask(&self) -> u64 {
        low_mask(self.order)
    }

    #[inline]
    pub fn adjacent(&self, u: usize, v: usize) -> bool {
        self.adj[u] >> v & 1 == 1
    }

    /// Neighborhood of `v` as a bit mask.
    #[inline]
    pub fn neighbor_mask(&self, v: usize) -> u64 {
        self.adj[v]
    }

    /// Closed neighborhood `N[v]` as a bit mask.
    #[inline]
    pub fn closed_neighbor_mask(&self, v: usize) -> u64 {
        self.adj[v] | 1 << v
    }

    pub fn rows(&self) -> &[u64] {
        &self.adj
    }

    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> {
        bits(self.adj[v])
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    pub fn degrees(&self) -> Vec<usize> {
        (0..self.order).map(|v| self.degree(v)).collect()
    }

    pub fn edge_count(&self) -> usize {
        self.adj
            .iter()
            .map(|r| r.count_ones() as usize)
            .sum::<usize>()
            / 2
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.order).flat_map(move |u| bits(self.adj[u] >> u >> 1).map(move |d| (u, u + 1 + d)))
    }

    pub fn min_degree(&self) -> Option<usize> {
        (0..self.order).map(|v| self.degree(v)).min()
    }

    pub fn pendant_vertices(&self) -> Vec<usize> {
        (0..self.order).filter(|&v| self.degree(v) == 1).collect()
    }

    pub fn isolated_vertices(&self) -> Vec<usize> {
        (0..self.order).filter(|&v| self.degree(v) == 0).collect()
    }

    /// Connected components, each sorted, listed by ascending minimal vertex.
    pub fn components(&self) -> Vec<Vec<usize>> {
        self.component_masks()
            .into_iter()
            .map(|m| bits(m).collect())
            .collect()
    }

    pub(crate) fn component_masks(&self) -> Vec<u64> {
        let mut seen = 0u64;
        let mut out = Vec::new();
        for start in 0..self.order {
            if seen >> start & 1 == 1 {
                continue;
            }
            let comp = self.reach(start, self.vertex_mask());
            seen |= comp;
            out.push(comp);
        }
        out
    }

    /// Vertices reachable from `start` inside `within`.
    pub(crate) fn reach(&self, start: usize, within: u64) -> u64 {
        let mut comp = 1u64 << start;
        let mut frontier = comp;
        while frontier != 0 {
            let mut next = 0;
            for v in bits(frontier) {
                next |= self.adj[v];
            }
            next &= within & !comp;
            comp |= next;
            frontier = next;
        }
        comp
    }

    /// The empty graph counts as connected.
    pub fn is_connected(&self) -> bool {
        self.order == 0 || self.reach(0, self.vertex_mask()) == self.vertex_mask()
    }

    /// True when the vertices in `mask` are pairwise adjacent.
    pub fn is_clique(&self, mask: u64) -> bool {
        bits(mask).all(|v| (mask & !(1 << v)) & !self.adj[v] == 0)
    }

    pub fn is_independent(&self, mask: u64) -> bool {
        bits(mask).all(|v| self.adj[v] & mask == 0)
    }

    pub fn is_complete(&self) -> bool {
        self.is_clique(self.vertex_mask())
    }

    /// Induced subgraph on `vertices`, renumbered in ascending original order.
    pub fn induced_subgraph(&self, vertices: &[usize]) -> Result<Graph> {
        let mut mask = 0u64;
        for &v in vertices {
            if v >= self.order {
                return Err(Error::invalid(format!(
                    "vertex {v} out of range for order {}",
                    self.order
                )));
            }
            mask |= 1 << v;
        }
        Ok(self.induced_by_mask(mask))
    }

    pub(crate) fn induced_by_mask(&self, mask: u64) -> Graph {
        let keep: Vec<usize> = bits(mask & self.vertex_mask()).collect();
        let mut pos = [0usize; MAX_ORDER];
        for (i, &v) in keep.iter().enumerate() {
            pos[v] = i;
        }
        let adj = keep
            .iter()
            .map(|&v| bits(self.adj[v] & mask).fold(0u64, |r, u| r | 1 << pos[u]))
            .collect();
        Graph {
            order: keep.len(),
            adj,
        }
    }

    /// `G - v`, with later vertices shifted down by one.
    pub fn delete_vertex(&self, v: usize) -> Result<Graph> {
        if v >= self.order {
            return Err(Error::invalid(format!("vertex {v} out of range")));
        }
        Ok(self.induced_by_mask(self.vertex_mask() & !(1 << v)))
    }

    /// Appends a vertex adjacent to exactly `neighbors`; it gets index `order`.
    pub fn add_vertex(&self, neighbors: u64) -> Result<Graph> {
        if self.order >= MAX_ORDER {
            return Err(Error::UnsupportedOrder {
                order: self.order + 1,
                limit: MAX_ORDER,
            });
        }
        if neighbors & !self.vertex_mask() != 0 {
            return Err(Error::invalid("neighbor mask has bits beyond order"));
        }
        let u = self.order;
        let mut adj = self.adj.clone();
        for v in bits(neighbors) {
            adj[v] |= 1 << u;
        }
        adj.push(neighbors);
        Ok(Graph { order: u + 1, adj })
    }

    /// `self + other`; vertices of `other` follow those of `self`.
    pub fn disjoint_union(&self, other: &Graph) -> Result<Graph> {
        let order = self.order + other.order;
        if order > MAX_ORDER {
            return Err(Error::UnsupportedOrder {
                order,
                limit: MAX_ORDER,
            });
        }
        let shift = self.order;
        let mut adj = self.adj.clone();
        adj.extend(other.adj.iter().map(|r| r << shift));
        Ok(Graph { order, adj })
    }

    /// Relabels vertex `v` as `perm[v]`. `perm` must be a permutation of `0..order`.
    pub fn relabel(&self, perm: &[usize]) -> Result<Graph> {
        if perm.len() != self.order {
            return Err(Error::invalid("permutation length differs from order"));
        }
        let mut seen = 0u64;
        for &p in perm {
            if p >= self.order || seen >> p & 1 == 1 {
                return Err(Error::invalid("not a permutation"));
            }
            seen |= 1 << p;
        }
        let mut adj = vec![0u64; self.order];
        for v in 0..self.order {
            adj[perm[v]] = bits(self.adj[v]).fold(0u64, |r, u| r | 1 << perm[u]);
        }
        Ok(Graph {
            order: self.order,
            adj,
        })
    }

    pub fn complement(&self) -> Graph {
        let all = self.vertex_mask();
        let adj = (0..self.order)
            .map(|v| all & !self.adj[v] & !(1 << v))
            .collect();
        Graph {
            order: self.order,
            adj,
        }
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph({}: ", self.order)?;
        f.debug_list().entries(self.edges()).finish()?;
        write!(f, ")")
    }
}

impl fmt::Display for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&to_graph6(self))
    }
}

impl Serialize for Graph {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&to_graph6(self))
    }
}

impl<'de> Deserialize<'de> for Graph {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        from_graph6(&s).map_err(serde::de::Error::custom)
    }
}
