use graph_inertia::spectra::inertia_exact;
use graph_inertia::transforms::{add_type1, add_type2, add_type3, TransformKind};
use graph_inertia::{Error, Graph, Result};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

/// Attempts per trial before giving up on finding a valid witness.
const MAX_ATTEMPTS: usize = 10_000;

#[derive(Debug, Clone, Serialize)]
pub struct TrialReport {
    pub kind: TransformKind,
    pub trials: usize,
    pub certified: usize,
    pub failures: Vec<String>,
}

fn random_graph(rng: &mut ChaCha8Rng, orders: std::ops::Range<usize>) -> Graph {
    let order = rng.gen_range(orders);
    let density: f64 = rng.gen_range(0.15..0.75);
    let mut edges = Vec::new();
    for j in 0..order {
        for i in 0..j {
            if rng.gen_bool(density) {
                edges.push((i, j));
            }
        }
    }
    Graph::from_edges(order, &edges).expect("edges within order")
}

/// One random base graph and a valid witness for the kind, or `None` if this
/// draw has no witness. The returned graph may be larger than the draw for
/// III, where the third quadrangle vertex is inserted first.
fn draw(
    rng: &mut ChaCha8Rng,
    kind: TransformKind,
    max_order: usize,
) -> Option<(Graph, Vec<usize>)> {
    match kind {
        TransformKind::I => {
            let g = random_graph(rng, 1..max_order);
            let v = rng.gen_range(0..g.order());
            Some((g, vec![v]))
        }
        TransformKind::II => {
            let g = random_graph(rng, 2..max_order);
            let n = g.order();
            let pairs: Vec<(usize, usize)> = (0..n)
                .flat_map(|w| (0..w).map(move |v| (v, w)))
                .filter(|&(v, w)| !g.adjacent(v, w) && g.neighbor_mask(v) & g.neighbor_mask(w) == 0)
                .collect();
            if pairs.is_empty() {
                return None;
            }
            let (v, w) = pairs[rng.gen_range(0..pairs.len())];
            Some((g, vec![v, w]))
        }
        TransformKind::III => {
            // y is added with N(y) = (N(x) \ v) ∪ {x}, which makes v-x-y valid
            let base = random_graph(rng, 2..max_order - 1);
            let x = rng.gen_range(0..base.order());
            let nx: Vec<usize> = base.neighbors(x).collect();
            if nx.is_empty() {
                return None;
            }
            let v = nx[rng.gen_range(0..nx.len())];
            let ny = (base.neighbor_mask(x) & !(1u64 << v)) | 1 << x;
            let y = base.order();
            let g = base.add_vertex(ny).ok()?;
            Some((g, vec![v, x, y]))
        }
    }
}

fn apply(g: &Graph, kind: TransformKind, w: &[usize]) -> Result<Graph> {
    let (h, _) = match kind {
        TransformKind::I => add_type1(g, w[0])?,
        TransformKind::II => add_type2(g, w[0], w[1])?,
        TransformKind::III => add_type3(g, w[0], w[1], w[2])?,
    };
    Ok(h)
}

/// `trials` random additions per kind with results of order at most
/// `max_order`, each checked by recomputing both inertias exactly.
/// Deterministic in `seed`.
pub fn transform_trials(trials: usize, seed: u64, max_order: usize) -> Result<Vec<TrialReport>> {
    if !(4..=64).contains(&max_order) {
        return Err(Error::InvalidArgument(format!(
            "max order must be between 4 and 64, got {max_order}"
        )));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut reports = Vec::new();
    for kind in [TransformKind::I, TransformKind::II, TransformKind::III] {
        let mut report = TrialReport {
            kind,
            trials,
            certified: 0,
            failures: Vec::new(),
        };
        for _ in 0..trials {
            let Some((g, witness)) =
                (0..MAX_ATTEMPTS).find_map(|_| draw(&mut rng, kind, max_order))
            else {
                report.failures.push(format!("{kind}: no witness found"));
                continue;
            };
            match apply(&g, kind, &witness) {
                Ok(h) => {
                    let (before, after) = (inertia_exact(&g), inertia_exact(&h));
                    if after.p == before.p
                        && after.n_neg == before.n_neg
                        && after.eta == before.eta + 1
                    {
                        report.certified += 1;
                    } else {
                        report
                            .failures
                            .push(format!("{g} {witness:?}: {before} -> {after}"));
                    }
                }
                Err(e) => report.failures.push(format!("{g} {witness:?}: {e}")),
            }
        }
        reports.push(report);
    }
    Ok(reports)
}
