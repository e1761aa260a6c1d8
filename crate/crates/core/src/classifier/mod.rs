//! Membership tests for the graph classes built around `p = 2`, `η = 1`, and
//! a full report that certifies which structural description applies.

pub mod checks;
mod forms;
mod structure;

use std::collections::BTreeSet;

use serde::Serialize;

use crate::graph::{BkSpec, Graph};
use crate::spectra::{inertia_exact, Inertia};
use crate::transforms::{TransformCertificate, TransformKind};
use crate::{Error, Result};

pub use forms::{
    check_theorem_disconnected, match_pendant_form, DisconnectedBranch, PendantForm, PendantShape,
};
pub use structure::{
    default_vstar, in_g123, match_bstar, xy_analysis, XyAnalysis, YShape, BSTAR_MAX_K,
    BSTAR_MAX_ORDER,
};

/// `p = 2` and `η = 0`.
pub fn in_h(g: &Graph) -> bool {
    let i = inertia_exact(g);
    i.p == 2 && i.eta == 0
}

/// `p = 2` and `η = 1`.
pub fn in_g(g: &Graph) -> bool {
    is_g_inertia(&inertia_exact(g))
}

fn is_g_inertia(i: &Inertia) -> bool {
    i.p == 2 && i.eta == 1
}

/// The three-way split of members of `G`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum GPart {
    /// Disconnected.
    Minus,
    /// Connected with a pendant vertex.
    Plus,
    /// Connected, no pendant vertex.
    Star,
}

fn g_part(g: &Graph) -> GPart {
    if !g.is_connected() {
        GPart::Minus
    } else if !g.pendant_vertices().is_empty() {
        GPart::Plus
    } else {
        GPart::Star
    }
}

pub fn split_g(g: &Graph) -> Result<GPart> {
    if !in_g(g) {
        return Err(Error::invalid("graph is not in G (needs p = 2, eta = 1)"));
    }
    Ok(g_part(g))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub enum ClassLabel {
    H,
    G,
    #[serde(rename = "G_minus")]
    GMinus,
    #[serde(rename = "G_plus")]
    GPlus,
    #[serde(rename = "G_star")]
    GStar,
    G1,
    G2,
    G3,
    #[serde(rename = "X_complete")]
    XComplete,
    #[serde(rename = "reduced")]
    Reduced,
    #[serde(rename = "non_reduced")]
    NonReduced,
    #[serde(rename = "B_star")]
    BStar,
}

impl ClassLabel {
    pub fn name(&self) -> &'static str {
        match self {
            ClassLabel::H => "H",
            ClassLabel::G => "G",
            ClassLabel::GMinus => "G_minus",
            ClassLabel::GPlus => "G_plus",
            ClassLabel::GStar => "G_star",
            ClassLabel::G1 => "G1",
            ClassLabel::G2 => "G2",
            ClassLabel::G3 => "G3",
            ClassLabel::XComplete => "X_complete",
            ClassLabel::Reduced => "reduced",
            ClassLabel::NonReduced => "non_reduced",
            ClassLabel::BStar => "B_star",
        }
    }
}

/// The three descriptions of connected members of `G` of order at least 5.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub enum ConnectedBranch {
    /// One of the two pendant shapes with `d = 1`.
    PendantForm,
    /// One congruent vertex away from a connected member of `H`.
    CongruentExtension,
    /// A `B_k` graph from the finite list.
    BStar,
}

/// Which minimum-degree vertices to analyse.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum VstarMode {
    /// The lowest-index minimum-degree vertex.
    #[default]
    Lowest,
    /// Every minimum-degree vertex.
    All,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ClassReport {
    pub order: usize,
    pub inertia: Inertia,
    pub connected: bool,
    pub labels: BTreeSet<ClassLabel>,
    pub disconnected: Option<DisconnectedBranch>,
    pub pendant_form: Option<PendantForm>,
    /// One certificate per congruent kind that applies, in I, II, III order.
    pub congruent: Vec<TransformCertificate>,
    /// `v*` analyses; the first entry decides the structural labels.
    pub xy: Vec<XyAnalysis>,
    pub vstar: Option<usize>,
    pub bstar: Option<BkSpec>,
    /// Certified connected branches; empty unless connected, in `G` and of
    /// order at least 5.
    pub branches: Vec<ConnectedBranch>,
}

impl ClassReport {
    pub fn has(&self, label: ClassLabel) -> bool {
        self.labels.contains(&label)
    }
}

pub fn classify_full(g: &Graph) -> Result<ClassReport> {
    classify_with(g, VstarMode::Lowest)
}

pub fn classify_with(g: &Graph, mode: VstarMode) -> Result<ClassReport> {
    let inertia = inertia_exact(g);
    let connected = g.is_connected();
    let mut report = ClassReport {
        order: g.order(),
        inertia,
        connected,
        labels: BTreeSet::new(),
        disconnected: None,
        pendant_form: None,
        congruent: Vec::new(),
        xy: Vec::new(),
        vstar: None,
        bstar: None,
        branches: Vec::new(),
    };
    if inertia.p == 2 && inertia.eta == 0 {
        report.labels.insert(ClassLabel::H);
    }
    if !is_g_inertia(&inertia) {
        return Ok(report);
    }
    report.labels.insert(ClassLabel::G);
    let part = g_part(g);
    report.labels.insert(match part {
        GPart::Minus => ClassLabel::GMinus,
        GPart::Plus => ClassLabel::GPlus,
        GPart::Star => ClassLabel::GStar,
    });

    if part == GPart::Minus {
        if g.order() >= 5 {
            report.disconnected = check_theorem_disconnected(g)?;
        }
        return Ok(report);
    }

    if part == GPart::Plus {
        report.pendant_form = match_pendant_form(g);
    }
    for (kind, label) in [
        (TransformKind::I, ClassLabel::G1),
        (TransformKind::II, ClassLabel::G2),
        (TransformKind::III, ClassLabel::G3),
    ] {
        if let Some(cert) = in_g123(g, kind)? {
            report.labels.insert(label);
            report.congruent.push(cert);
        }
    }
    if part == GPart::Star {
        let vstars: Vec<usize> = match mode {
            VstarMode::Lowest => default_vstar(g).into_iter().collect(),
            VstarMode::All => {
                let d = g.min_degree().unwrap_or(0);
                (0..g.order()).filter(|&v| g.degree(v) == d).collect()
            }
        };
        for v in vstars {
            report.xy.push(xy_analysis(g, v)?);
        }
        report.vstar = report.xy.first().map(|a| a.vstar);
        if let Some(first) = report.xy.first() {
            if first.x_complete {
                report.labels.insert(ClassLabel::XComplete);
                report.labels.insert(if first.reduced == Some(true) {
                    ClassLabel::Reduced
                } else {
                    ClassLabel::NonReduced
                });
            }
        }
        report.bstar = match_bstar(g);
        if report.bstar.is_some() {
            report.labels.insert(ClassLabel::BStar);
        }
    }

    if g.order() >= 5 {
        if report
            .pendant_form
            .as_ref()
            .is_some_and(|f| f.shape.is_some())
        {
            report.branches.push(ConnectedBranch::PendantForm);
        }
        if !report.congruent.is_empty() {
            report.branches.push(ConnectedBranch::CongruentExtension);
        }
        if report.bstar.is_some() {
            report.branches.push(ConnectedBranch::BStar);
        }
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{complete, path, realize_bk, star};

    #[test]
    fn membership_examples() {
        assert!(in_h(&path(4).unwrap()));
        assert!(in_h(
            &complete(2)
                .unwrap()
                .disjoint_union(&complete(3).unwrap())
                .unwrap()
        ));
        assert!(!in_h(&complete(5).unwrap()));

        let g = star(2)
            .unwrap()
            .disjoint_union(&complete(2).unwrap())
            .unwrap();
        assert_eq!(split_g(&g).unwrap(), GPart::Minus);
        let h1 = Graph::from_edges(5, &[(0, 1), (1, 2), (2, 3), (4, 1)]).unwrap();
        assert_eq!(split_g(&h1).unwrap(), GPart::Plus);
        let b4 = realize_bk(&"B4(3,2;3,2)".parse().unwrap()).unwrap();
        assert_eq!(split_g(&b4).unwrap(), GPart::Star);
        assert!(split_g(&path(4).unwrap()).is_err());
    }

    #[test]
    fn report_examples() {
        let h2 = Graph::from_edges(5, &[(0, 1), (1, 2), (2, 3), (4, 1), (4, 2)]).unwrap();
        let r = classify_full(&h2).unwrap();
        assert!(r.has(ClassLabel::G) && r.has(ClassLabel::GPlus) && r.has(ClassLabel::G2));
        assert_eq!(
            r.branches,
            vec![
                ConnectedBranch::PendantForm,
                ConnectedBranch::CongruentExtension
            ]
        );

        let g13 = realize_bk(&BkSpec::ones(13).unwrap()).unwrap();
        let r = classify_full(&g13).unwrap();
        assert_eq!(r.bstar.as_ref().map(BkSpec::k), Some(13));
        assert!(r.branches.contains(&ConnectedBranch::BStar));
        assert!(r.has(ClassLabel::XComplete) && r.has(ClassLabel::Reduced));

        let r = classify_full(&complete(6).unwrap()).unwrap();
        assert!(r.labels.is_empty());
    }

    #[test]
    fn label_names_match_serialization() {
        let json = serde_json::to_string(&ClassLabel::NonReduced).unwrap();
        assert_eq!(json, format!("\"{}\"", ClassLabel::NonReduced.name()));
    }
}
