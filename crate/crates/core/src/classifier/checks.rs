//! Per-graph checks of the characterization statements, shaped for
//! [`sweep_all_graphs`](crate::enumerator::sweep_all_graphs).

use serde::Serialize;

use super::{
    check_theorem_disconnected, classify_full, match_bstar, match_pendant_form, xy_analysis,
    ClassLabel,
};
use crate::enumerator::Observation;
use crate::graph::{
    bits, canonical_decomposition, find_isomorphism, gn, realize_bk, BkSpec, Graph,
};
use crate::spectra::inertia_exact;
use crate::{Error, Result};

/// Neighborhood sizes across the split `X_c = N(v*)`, `Y_c = V \ N[v*]` of
/// the canonical quotient, each list sorted ascending.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct QuotientChains {
    pub k: usize,
    pub t_c: usize,
    pub y_size: usize,
    /// `|N_{Y_c}(x)|` for `x ∈ X_c`.
    pub from_x: Vec<usize>,
    /// `|N_{X_c}(y)|` for `y ∈ Y_c`.
    pub from_y: Vec<usize>,
}

impl QuotientChains {
    /// Both lists strictly increasing, `N_{Y_c}` sizes positive and bounded
    /// by `|Y_c|`, `N_{X_c}` sizes bounded by `t_c`.
    pub fn holds(&self) -> bool {
        let strict = |v: &[usize]| v.windows(2).all(|w| w[0] < w[1]);
        strict(&self.from_x)
            && strict(&self.from_y)
            && self.from_x.first().is_none_or(|&a| a > 0)
            && self.from_x.last().is_none_or(|&a| a <= self.y_size)
            && self.from_y.last().is_none_or(|&a| a <= self.t_c)
    }
}

/// Chains for the class of `vstar` in the canonical quotient of `g`.
pub fn quotient_chains(g: &Graph, vstar: usize) -> Result<QuotientChains> {
    if vstar >= g.order() {
        return Err(Error::invalid(format!("vertex {vstar} out of range")));
    }
    let dec = canonical_decomposition(g);
    let gc = &dec.canonical;
    let vc = dec
        .classes
        .iter()
        .position(|c| c.contains(&vstar))
        .ok_or_else(|| Error::Internal("vertex missing from its class".into()))?;
    let x = gc.neighbor_mask(vc);
    let y = gc.vertex_mask() & !gc.closed_neighbor_mask(vc);
    let sizes = |from: u64, to: u64| {
        let mut v: Vec<usize> = bits(from)
            .map(|a| (gc.neighbor_mask(a) & to).count_ones() as usize)
            .collect();
        v.sort_unstable();
        v
    };
    Ok(QuotientChains {
        k: gc.order(),
        t_c: x.count_ones() as usize,
        y_size: y.count_ones() as usize,
        from_x: sizes(x, y),
        from_y: sizes(y, x),
    })
}

/// Problems found in the structure of one listed `B*` graph: membership,
/// recovery of the spec, the `G_k` quotient, X-completeness and reducedness
/// for every minimum-degree vertex, and the quotient chains.
pub fn bstar_structure_problems(spec: &BkSpec) -> Result<Vec<String>> {
    let g = realize_bk(spec)?;
    let mut problems = Vec::new();
    let i = inertia_exact(&g);
    if !(i.p == 2 && i.eta == 1) {
        problems.push(format!("inertia {i}"));
    }
    if match_bstar(&g).as_ref() != Some(&spec.normalized()) {
        problems.push("spec not recovered".into());
    }
    let dec = canonical_decomposition(&g);
    let k = dec.canonical.order();
    if !(4..=13).contains(&k) || find_isomorphism(&gn(k)?, &dec.canonical).is_none() {
        problems.push(format!("quotient of order {k} is not G_k"));
    }
    let d = g.min_degree().unwrap_or(0);
    for vstar in (0..g.order()).filter(|&v| g.degree(v) == d) {
        let a = xy_analysis(&g, vstar)?;
        if !a.x_complete || a.reduced != Some(true) {
            problems.push(format!("v* = {vstar} is not reduced X-complete"));
        }
        let c = quotient_chains(&g, vstar)?;
        if c.t_c != k.div_ceil(2) - 1 {
            problems.push(format!("v* = {vstar}: t_c = {} for k = {k}", c.t_c));
        }
        if !c.holds() {
            problems.push(format!(
                "v* = {vstar}: chains {:?} / {:?}",
                c.from_x, c.from_y
            ));
        }
    }
    Ok(problems)
}

fn observe(tags: Vec<&str>, problems: Vec<String>) -> Observation {
    let obs = Observation::tagged(tags);
    if problems.is_empty() {
        obs
    } else {
        obs.fail(problems.join("; "))
    }
}

/// For a disconnected graph of order at least 5: membership in `G` agrees
/// with a match of one of the three disconnected shapes. Other graphs pass
/// untagged.
pub fn theorem_disconnected_observation(g: &Graph) -> Result<Observation> {
    if g.order() < 5 || g.is_connected() {
        return Ok(Observation::default());
    }
    let member = super::in_g(g);
    let branch = check_theorem_disconnected(g)?;
    let mut tags = vec!["disconnected"];
    let mut problems = Vec::new();
    if member {
        tags.push("in_G");
    }
    if branch.is_some() != member {
        problems.push(format!("in_G = {member} but branch {branch:?}"));
    }
    Ok(observe(tags, problems))
}

/// For a connected graph of order at least 5: members of `G` are certified
/// by at least one connected branch, and a graph with a pendant vertex has
/// `p = 2`, `η = d` exactly when a pendant form with that `d` matches.
pub fn theorem_main_observation(g: &Graph) -> Result<Observation> {
    if g.order() < 5 || !g.is_connected() {
        return Ok(Observation::default());
    }
    let mut tags = vec!["connected"];
    let mut problems = Vec::new();
    let report = classify_full(g)?;
    if report.has(ClassLabel::G) {
        tags.push("in_G");
        if report.branches.is_empty() {
            problems.push("no connected branch".to_string());
        }
    }
    if !g.pendant_vertices().is_empty() {
        let i = report.inertia;
        match match_pendant_form(g) {
            Some(f) => {
                tags.push("pendant_form");
                if !(i.p == 2 && i.eta == f.d) {
                    problems.push(format!("pendant form with d = {} but inertia {i}", f.d));
                }
            }
            None if i.p == 2 && i.eta >= 1 => {
                problems.push(format!("pendant vertex, inertia {i}, no pendant form"));
            }
            None => {}
        }
    }
    Ok(observe(tags, problems))
}
