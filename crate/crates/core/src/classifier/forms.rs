use serde::Serialize;

use crate::graph::{bits, Graph};
use crate::spectra::inertia_exact;
use crate::{Error, Result};

/// Parts of `G[mask]` when it is complete multipartite (non-adjacency is an
/// equivalence relation on `mask`), ordered by their lowest vertex.
pub(crate) fn multipartite_parts(g: &Graph, mask: u64) -> Option<Vec<u64>> {
    let mut rest = mask;
    let mut parts = Vec::new();
    while rest != 0 {
        let v = rest.trailing_zeros() as usize;
        let part = mask & !g.neighbor_mask(v);
        if part & !rest != 0 || !g.is_independent(part) {
            return None;
        }
        // every member must see exactly mask \ part
        if bits(part).any(|w| g.neighbor_mask(w) & mask != mask & !part) {
            return None;
        }
        parts.push(part);
        rest &= !part;
    }
    Some(parts)
}

/// Whether `G[mask]` is a complete graph minus exactly one edge.
pub(crate) fn is_clique_minus_edge(g: &Graph, mask: u64) -> bool {
    let m = mask.count_ones() as usize;
    m >= 2 && g.induced_by_mask(mask).edge_count() + 1 == m * (m - 1) / 2
}

/// The two shapes a pendant form takes when `d = 1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum PendantShape {
    /// `K_{1,2}(u) ⊙ K_{n-3}`: two leaves, complete inner graph.
    TwoLeavesClique,
    /// `K_{1,1}(u) ⊙ (K_{n-2} \ e)`: one leaf, inner graph a clique minus an edge.
    OneLeafCliqueMinusEdge,
}

/// `G ≅ K_{1,r}(u) ⊙ K_{n_1,...,n_l}`: a center with `r` pendant leaves,
/// joined to the non-empty `attach` subset of a complete multipartite graph.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PendantForm {
    pub center: usize,
    pub leaves: Vec<usize>,
    /// Members of each part, ordered by lowest vertex.
    pub parts: Vec<Vec<usize>>,
    pub attach: Vec<usize>,
    /// `r + n_1 + ... + n_l - (l + 1)`, the nullity whenever `p = 2`.
    pub d: usize,
    pub shape: Option<PendantShape>,
}

impl PendantForm {
    pub fn r(&self) -> usize {
        self.leaves.len()
    }

    pub fn part_sizes(&self) -> Vec<usize> {
        self.parts.iter().map(Vec::len).collect()
    }
}

/// Decomposes a connected graph with a pendant vertex as
/// `K_{1,r}(u) ⊙ K_{n_1,...,n_l}`, trying each neighbor of a pendant vertex
/// as the center in ascending order.
///
/// For such graphs `p = 2` and `η = d` hold exactly when the match succeeds.
pub fn match_pendant_form(g: &Graph) -> Option<PendantForm> {
    if !g.is_connected() {
        return None;
    }
    let pendants = g.pendant_vertices();
    let pendant_mask = pendants.iter().fold(0u64, |m, &v| m | 1 << v);
    let mut centers: Vec<usize> = pendants
        .iter()
        .map(|&v| g.neighbor_mask(v).trailing_zeros() as usize)
        .collect();
    centers.sort_unstable();
    centers.dedup();
    for u in centers {
        let leaves = g.neighbor_mask(u) & pendant_mask;
        let rest = g.vertex_mask() & !leaves & !(1u64 << u);
        if rest == 0 {
            continue;
        }
        let Some(parts) = multipartite_parts(g, rest) else {
            continue;
        };
        if parts.len() < 2 {
            continue;
        }
        let attach = g.neighbor_mask(u) & rest;
        if attach == 0 {
            continue;
        }
        let r = leaves.count_ones() as usize;
        let sizes: Vec<usize> = parts.iter().map(|p| p.count_ones() as usize).collect();
        let d = r + sizes.iter().sum::<usize>() - (parts.len() + 1);
        let shape = match (d, r) {
            (1, 2) => Some(PendantShape::TwoLeavesClique),
            (1, 1) => Some(PendantShape::OneLeafCliqueMinusEdge),
            _ => None,
        };
        return Some(PendantForm {
            center: u,
            leaves: bits(leaves).collect(),
            parts: parts.iter().map(|&p| bits(p).collect()).collect(),
            attach: bits(attach).collect(),
            d,
            shape,
        });
    }
    None
}

/// Shapes of the disconnected graphs with `p = 2` and `η = 1`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub enum DisconnectedBranch {
    /// `K_s + K_t + K_1` with `s, t >= 2`.
    TwoCliquesAndVertex { s: usize, t: usize },
    /// `H + K_1` with `H` connected, `p(H) = 2` and `η(H) = 0`.
    HPlusVertex { h: Vec<usize> },
    /// `K_s + (K_m \ e)` with `s >= 2`, `m >= 3`.
    CliquePlusCliqueMinusEdge { s: usize, m: usize },
}

/// Matches a disconnected graph of order at least 5 against the three
/// disconnected shapes; a match occurs exactly for members of `G`.
pub fn check_theorem_disconnected(g: &Graph) -> Result<Option<DisconnectedBranch>> {
    if g.order() < 5 {
        return Err(Error::invalid(format!("order {} is below 5", g.order())));
    }
    if g.is_connected() {
        return Err(Error::invalid("graph is connected"));
    }
    let comps = g.component_masks();
    let size = |m: u64| m.count_ones() as usize;
    let singles = comps.iter().filter(|&&c| size(c) == 1).count();
    match comps.len() {
        3 if singles == 1 => {
            let mut big: Vec<usize> = comps
                .iter()
                .filter(|&&c| size(c) >= 2 && g.is_clique(c))
                .map(|&c| size(c))
                .collect();
            if big.len() == 2 {
                big.sort_unstable();
                return Ok(Some(DisconnectedBranch::TwoCliquesAndVertex {
                    s: big[1],
                    t: big[0],
                }));
            }
        }
        2 if singles == 1 => {
            let h = comps
                .iter()
                .copied()
                .find(|&c| size(c) > 1)
                .expect("two components");
            let inertia = inertia_exact(&g.induced_by_mask(h));
            if inertia.p == 2 && inertia.eta == 0 {
                return Ok(Some(DisconnectedBranch::HPlusVertex {
                    h: bits(h).collect(),
                }));
            }
        }
        2 => {
            let (a, b) = (comps[0], comps[1]);
            for (clique, other) in [(a, b), (b, a)] {
                if g.is_clique(clique) && size(other) >= 3 && is_clique_minus_edge(g, other) {
                    return Ok(Some(DisconnectedBranch::CliquePlusCliqueMinusEdge {
                        s: size(clique),
                        m: size(other),
                    }));
                }
            }
        }
        _ => {}
    }
    Ok(None)
}
