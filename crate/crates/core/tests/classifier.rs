mod common;

use common::{h1, h2, h3, p4};
use graph_inertia::classifier::{
    check_theorem_disconnected, classify_full, classify_with, default_vstar, in_g, in_g123, in_h,
    match_bstar, match_pendant_form, split_g, xy_analysis, ClassLabel, ConnectedBranch,
    DisconnectedBranch, GPart, PendantShape, VstarMode, YShape,
};
use graph_inertia::enumerator::reference::bstar_list;
use graph_inertia::enumerator::{sweep_all_graphs, Observation, SweepOptions};
use graph_inertia::graph::{
    canonical_decomposition, complete, find_isomorphism, gn, k_joining, realize_bk,
};
use graph_inertia::spectra::inertia_exact;
use graph_inertia::transforms::TransformKind;
use graph_inertia::{Graph, Inertia, Result};

const DEDUP: SweepOptions = SweepOptions {
    dedup: true,
    allow_large_order: false,
};

fn check(g: &Graph) -> Result<Observation> {
    let report = classify_full(g)?;
    let mut tags = Vec::new();
    let mut problems = Vec::new();
    let i = report.inertia;
    if report.has(ClassLabel::G) {
        tags.push("G".to_string());
        let parts = [ClassLabel::GMinus, ClassLabel::GPlus, ClassLabel::GStar]
            .iter()
            .filter(|l| report.has(**l))
            .count();
        if parts != 1 {
            problems.push(format!("{parts} G parts"));
        }
        if report.connected && g.order() >= 5 && report.branches.is_empty() {
            problems.push("no connected branch".into());
        }
        for a in &report.xy {
            if a.y_shape == YShape::Other {
                problems.push(format!("G[Y] shape other for v* = {}", a.vstar));
            }
        }
    }
    if !report.connected && g.order() >= 5 {
        let branch = check_theorem_disconnected(g)?;
        if branch.is_some() != report.has(ClassLabel::G) {
            problems.push(format!("disconnected branch {branch:?} vs G membership"));
        }
        if branch.is_some() {
            tags.push("disconnected_G".into());
        }
    }
    if report.connected && !g.pendant_vertices().is_empty() {
        match match_pendant_form(g) {
            Some(f) => {
                tags.push("pendant_match".into());
                if !(i.p == 2 && i.eta == f.d) {
                    problems.push(format!("pendant form d = {} but inertia {i}", f.d));
                }
            }
            None => {
                if i.p == 2 && i.eta >= 1 {
                    problems.push(format!("no pendant form but inertia {i}"));
                }
            }
        }
    }
    if report.has(ClassLabel::GStar) {
        tags.push("G_star".into());
        let all = classify_with(g, VstarMode::All)?;
        if all.xy.iter().any(|a| a.reduced == Some(true)) {
            problems.push("reduced X-complete member below order 10".into());
        }
    }
    let obs = Observation::tagged(tags);
    Ok(if problems.is_empty() {
        obs
    } else {
        obs.fail(problems.join("; "))
    })
}

#[test]
fn exhaustive_orders_5_to_7() {
    for order in 5..=7 {
        let summary = sweep_all_graphs(order, DEDUP, check).unwrap();
        assert!(
            summary.counterexamples.is_empty(),
            "{:?}",
            summary.counterexamples
        );
        assert!(summary.count("G") > 0);
        assert!(summary.count("disconnected_G") > 0);
        assert!(summary.count("G_star") > 0);
    }
}

#[test]
fn membership_examples() {
    assert!(in_h(&p4()));
    assert!(in_g(&h1()) && in_g(&h2()) && in_g(&h3()));
    assert_eq!(split_g(&h1()).unwrap(), GPart::Plus);

    let k1 = complete(1).unwrap();
    let g = p4().disjoint_union(&k1).unwrap();
    assert!(matches!(
        check_theorem_disconnected(&g).unwrap(),
        Some(DisconnectedBranch::HPlusVertex { .. })
    ));
}

#[test]
fn congruent_extension_examples() {
    let cert = in_g123(&h1(), TransformKind::I).unwrap().unwrap();
    assert_eq!(cert.after, inertia_exact(&p4()));
    let cert = in_g123(&h3(), TransformKind::III).unwrap().unwrap();
    assert_eq!(cert.after, Inertia::new(2, 2, 0));
    for kind in [TransformKind::I, TransformKind::II, TransformKind::III] {
        assert!(in_g123(&complete(4).unwrap(), kind).unwrap().is_none());
    }
}

#[test]
fn pendant_shapes() {
    let g = k_joining(2, &complete(3).unwrap(), &[0, 1, 2]).unwrap();
    assert_eq!(
        match_pendant_form(&g).unwrap().shape,
        Some(PendantShape::TwoLeavesClique)
    );
    let r = classify_full(&h2()).unwrap();
    assert!(r.branches.contains(&ConnectedBranch::PendantForm));
    assert!(r.branches.contains(&ConnectedBranch::CongruentExtension));
    assert!(r.has(ClassLabel::G2));
}

fn from_edges(n: usize, edges: &[(usize, usize)]) -> Graph {
    Graph::from_edges(n, edges).unwrap()
}

#[test]
fn xy_minimal_instances() {
    // G[Y] = K_1 + K_{m-1}: one congruent I-type vertex in Y
    let g = from_edges(
        6,
        &[
            (0, 1),
            (0, 2),
            (0, 3),
            (0, 4),
            (0, 5),
            (1, 2),
            (2, 3),
            (2, 5),
            (3, 4),
        ],
    );
    assert!(in_g(&g));
    assert_eq!(
        xy_analysis(&g, 1).unwrap().y_shape,
        YShape::IsolatedPlusClique
    );

    // X-complete, not reduced: lands in the III-type class
    let g = from_edges(
        6,
        &[
            (0, 1),
            (0, 5),
            (1, 2),
            (1, 5),
            (2, 3),
            (2, 4),
            (3, 4),
            (4, 5),
        ],
    );
    assert!(in_g(&g));
    let a = xy_analysis(&g, 0).unwrap();
    assert!(a.x_complete);
    assert_eq!(a.reduced, Some(false));
    let r = classify_full(&g).unwrap();
    assert!(r.has(ClassLabel::NonReduced) && r.has(ClassLabel::G3));

    // G[X] not complete
    let g = from_edges(5, &[(0, 1), (0, 3), (0, 4), (1, 2), (2, 3), (3, 4)]);
    assert!(in_g(&g));
    let a = xy_analysis(&g, 1).unwrap();
    assert_eq!(a.y_shape, YShape::Complete);
    assert!(!a.x_complete);

    // G[Y] = K_m minus an edge
    let g = from_edges(
        6,
        &[
            (0, 4),
            (0, 5),
            (1, 3),
            (1, 4),
            (2, 3),
            (2, 4),
            (3, 4),
            (4, 5),
        ],
    );
    assert!(in_g(&g));
    assert_eq!(
        xy_analysis(&g, 0).unwrap().y_shape,
        YShape::CompleteMinusEdge
    );
}

#[test]
fn bstar_graphs_are_reduced_x_complete_with_gk_quotient() {
    for spec in bstar_list() {
        let g = realize_bk(&spec).unwrap();
        assert!(in_g(&g), "{spec}");
        assert_eq!(match_bstar(&g), Some(spec.clone()));
        let dec = canonical_decomposition(&g);
        let k = dec.canonical.order();
        assert!((4..=13).contains(&k));
        assert!(find_isomorphism(&gn(k).unwrap(), &dec.canonical).is_some());
        let gc = &dec.canonical;
        let d = g.min_degree().unwrap();
        for vstar in (0..g.order()).filter(|&v| g.degree(v) == d) {
            let a = xy_analysis(&g, vstar).unwrap();
            assert!(
                a.x_complete && a.reduced == Some(true),
                "{spec} v* = {vstar}"
            );

            let vc = dec.classes.iter().position(|c| c.contains(&vstar)).unwrap();
            let xc = gc.neighbor_mask(vc);
            let yc = gc.vertex_mask() & !gc.closed_neighbor_mask(vc);
            let tc = xc.count_ones() as usize;
            assert_eq!(tc, k.div_ceil(2) - 1, "{spec}");
            let mut from_x: Vec<u32> = graph_inertia::graph::bits(xc)
                .map(|x| (gc.neighbor_mask(x) & yc).count_ones())
                .collect();
            from_x.sort_unstable();
            assert!(from_x[0] > 0 && from_x.windows(2).all(|w| w[0] < w[1]));
            let mut from_y: Vec<u32> = graph_inertia::graph::bits(yc)
                .map(|y| (gc.neighbor_mask(y) & xc).count_ones())
                .collect();
            from_y.sort_unstable();
            assert!(from_y.windows(2).all(|w| w[0] < w[1]));
        }
        let r = classify_full(&g).unwrap();
        assert!(r.has(ClassLabel::BStar) && r.has(ClassLabel::GStar));
        assert_eq!(r.vstar, default_vstar(&g));
    }
}

#[test]
fn congruent_deletion_may_disconnect() {
    // two triangles joined through a II-type vertex; deleting it leaves 2K_3
    let g = from_edges(
        7,
        &[
            (0, 1),
            (0, 4),
            (0, 6),
            (1, 4),
            (1, 6),
            (2, 3),
            (2, 4),
            (2, 5),
            (3, 4),
            (3, 5),
        ],
    );
    let cert = in_g123(&g, TransformKind::II).unwrap().unwrap();
    assert_eq!(cert.witness[0], 4);
    assert_eq!(cert.after, Inertia::new(2, 4, 0));
    assert!(classify_full(&g)
        .unwrap()
        .branches
        .contains(&ConnectedBranch::CongruentExtension));
}
