use serde::Serialize;

use super::forms::is_clique_minus_edge;
use crate::graph::{
    bits, canonical_decomposition, find_isomorphism, gn, gn_vertex_for_position, BkSpec, Graph,
};
use crate::spectra::inertia_exact;
use crate::transforms::{
    delete_congruent, find_type1, find_type2, find_type3, TransformCertificate, TransformKind,
};
use crate::{Error, Result};

/// Largest `k` of a `B_k` quotient and largest order considered by [`match_bstar`].
pub const BSTAR_MAX_K: usize = 13;
pub const BSTAR_MAX_ORDER: usize = 13;

/// Shape of `G[Y]` for `Y = V \ N[v*]`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum YShape {
    /// `K_m`, including `m <= 1`.
    Complete,
    /// `K_m \ e` with `m >= 2` (for `m = 2` this is `2K_1`).
    CompleteMinusEdge,
    /// `K_1 + K_{m-1}` with `m >= 3`.
    IsolatedPlusClique,
    Other,
}

/// Neighborhood structure around a minimum-degree vertex `v*`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct XyAnalysis {
    pub vstar: usize,
    /// `N(v*)`.
    pub x: Vec<usize>,
    /// `V \ N[v*]`.
    pub y: Vec<usize>,
    pub y_shape: YShape,
    /// `G[X]` and `G[Y]` both complete.
    pub x_complete: bool,
    /// For X-complete graphs: the sets `N_Y(x)`, `x ∈ X`, form a chain.
    pub reduced: Option<bool>,
}

fn y_shape(g: &Graph, y: u64) -> YShape {
    let m = y.count_ones() as usize;
    if g.is_clique(y) {
        return YShape::Complete;
    }
    if is_clique_minus_edge(g, y) {
        return YShape::CompleteMinusEdge;
    }
    if m >= 3 {
        let isolated: Vec<usize> = bits(y).filter(|&v| g.neighbor_mask(v) & y == 0).collect();
        if isolated.len() == 1 && g.is_clique(y & !(1u64 << isolated[0])) {
            return YShape::IsolatedPlusClique;
        }
    }
    YShape::Other
}

/// Lowest-index vertex of minimum degree.
pub fn default_vstar(g: &Graph) -> Option<usize> {
    let d = g.min_degree()?;
    (0..g.order()).find(|&v| g.degree(v) == d)
}

/// Splits `V` around `vstar` into `X = N(v*)` and `Y = V \ N[v*]` and reports
/// the shape of `G[Y]`, X-completeness and, when X-complete, reducedness.
pub fn xy_analysis(g: &Graph, vstar: usize) -> Result<XyAnalysis> {
    if vstar >= g.order() {
        return Err(Error::invalid(format!("vertex {vstar} out of range")));
    }
    if Some(g.degree(vstar)) != g.min_degree() {
        return Err(Error::invalid(format!(
            "vertex {vstar} has degree {}, minimum is {}",
            g.degree(vstar),
            g.min_degree().unwrap_or(0)
        )));
    }
    let x = g.neighbor_mask(vstar);
    let y = g.vertex_mask() & !g.closed_neighbor_mask(vstar);
    let shape = y_shape(g, y);
    let x_complete = shape == YShape::Complete && g.is_clique(x);
    let reduced = x_complete.then(|| {
        let mut ny: Vec<u64> = bits(x).map(|v| g.neighbor_mask(v) & y).collect();
        ny.sort_by_key(|m| m.count_ones());
        ny.windows(2).all(|w| w[0] & !w[1] == 0)
    });
    Ok(XyAnalysis {
        vstar,
        x: bits(x).collect(),
        y: bits(y).collect(),
        y_shape: shape,
        x_complete,
        reduced,
    })
}

/// A congruent vertex `u` of the given kind whose deletion leaves a graph
/// with `p = 2` and `η = 0`, certified by the deletion. Only connected `g`
/// qualify; `g - u` may be disconnected.
pub fn in_g123(g: &Graph, kind: TransformKind) -> Result<Option<TransformCertificate>> {
    if !g.is_connected() {
        return Ok(None);
    }
    let mut candidates: Vec<usize> = match kind {
        TransformKind::I => find_type1(g)
            .into_iter()
            .flat_map(|(a, b)| [a, b])
            .collect(),
        TransformKind::II => find_type2(g).into_iter().map(|(u, _, _)| u).collect(),
        TransformKind::III => find_type3(g).into_iter().flatten().collect(),
    };
    candidates.sort_unstable();
    candidates.dedup();
    for u in candidates {
        let i = inertia_exact(&g.delete_vertex(u)?);
        if i.p == 2 && i.eta == 0 {
            let (_, cert) = delete_congruent(g, u, kind)?;
            return Ok(Some(cert));
        }
    }
    Ok(None)
}

/// Recovers `B_k(n_1, ..., n_k)` from a graph whose closed-twin quotient is
/// `G_k` with `4 <= k <= 13` and whose order is at most 13. The spec is
/// returned in normalized form.
pub fn match_bstar(g: &Graph) -> Option<BkSpec> {
    if g.order() > BSTAR_MAX_ORDER || !g.is_connected() {
        return None;
    }
    let dec = canonical_decomposition(g);
    let k = dec.canonical.order();
    if !(4..=BSTAR_MAX_K).contains(&k) {
        return None;
    }
    let map = find_isomorphism(&gn(k).ok()?, &dec.canonical)?;
    let parts: Vec<usize> = (0..k)
        .map(|pos| dec.class_sizes[map[gn_vertex_for_position(k, pos)]])
        .collect();
    Some(BkSpec::new(parts).ok()?.normalized())
}
