use std::collections::{BTreeMap, HashMap};

use rayon::prelude::*;
use serde::Serialize;

use crate::graph::{canonical_code, Graph, CANONICAL_CODE_MAX_ORDER};
use crate::{Error, Result};

/// Orders above this need [`SweepOptions::allow_large_order`].
pub const SWEEP_DEFAULT_MAX_ORDER: usize = 7;

#[derive(Debug, Clone, Copy, Default)]
pub struct SweepOptions {
    /// Visit one labeled representative per isomorphism class.
    pub dedup: bool,
    /// Permit orders above [`SWEEP_DEFAULT_MAX_ORDER`] (up to 11).
    pub allow_large_order: bool,
}

/// What a sweep callback reports for one graph.
#[derive(Debug, Clone, Default)]
pub struct Observation {
    /// Keys counted in the summary.
    pub tags: Vec<String>,
    /// Set when the graph violates the property under test.
    pub counterexample: Option<String>,
}

impl Observation {
    pub fn tagged<I, S>(tags: I) -> Self
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        Observation {
            tags: tags.into_iter().map(Into::into).collect(),
            counterexample: None,
        }
    }

    pub fn fail(mut self, reason: impl Into<String>) -> Self {
        self.counterexample = Some(reason.into());
        self
    }
}

#[derive(Debug, Clone, Default, Serialize)]
pub struct SweepSummary {
    pub order: usize,
    pub dedup: bool,
    pub visited: u64,
    pub counts: BTreeMap<String, u64>,
    /// `(graph6, reason)`, in enumeration order.
    pub counterexamples: Vec<(String, String)>,
}

impl SweepSummary {
    pub fn count(&self, tag: &str) -> u64 {
        self.counts.get(tag).copied().unwrap_or(0)
    }
}

fn check_order(order: usize, opts: SweepOptions) -> Result<()> {
    let limit = if opts.allow_large_order {
        CANONICAL_CODE_MAX_ORDER
    } else {
        SWEEP_DEFAULT_MAX_ORDER
    };
    if order > limit {
        Err(Error::UnsupportedOrder { order, limit })
    } else {
        Ok(())
    }
}

fn pair_list(order: usize) -> Vec<(usize, usize)> {
    (0..order)
        .flat_map(|j| (0..j).map(move |i| (i, j)))
        .collect()
}

fn graph_from_bits(order: usize, pairs: &[(usize, usize)], mask: u64) -> Graph {
    let mut rows = vec![0u64; order];
    for (b, &(i, j)) in pairs.iter().enumerate() {
        if mask >> b & 1 == 1 {
            rows[i] |= 1 << j;
            rows[j] |= 1 << i;
        }
    }
    Graph::from_rows(rows).expect("rows are symmetric and loop-free")
}

/// Edge bitsets of the graphs to visit, ascending.
fn labeled_codes(order: usize, opts: SweepOptions) -> Result<Vec<u64>> {
    let pairs = pair_list(order);
    let total = 1u64 << pairs.len();
    if !opts.dedup {
        return Ok((0..total).collect());
    }
    let reps = (0..total)
        .into_par_iter()
        .fold(HashMap::new, |mut acc: HashMap<u64, u64>, mask| {
            let code = canonical_code(&graph_from_bits(order, &pairs, mask))
                .expect("order within canonical code range");
            acc.entry(code)
                .and_modify(|m| *m = (*m).min(mask))
                .or_insert(mask);
            acc
        })
        .reduce(HashMap::new, |mut a, b| {
            for (code, mask) in b {
                a.entry(code)
                    .and_modify(|m| *m = (*m).min(mask))
                    .or_insert(mask);
            }
            a
        });
    let mut masks: Vec<u64> = reps.into_values().collect();
    masks.sort_unstable();
    Ok(masks)
}

/// All labeled graphs of the given order, or one per isomorphism class.
pub fn graphs_of_order(order: usize, opts: SweepOptions) -> Result<Vec<Graph>> {
    check_order(order, opts)?;
    let pairs = pair_list(order);
    Ok(labeled_codes(order, opts)?
        .into_iter()
        .map(|m| graph_from_bits(order, &pairs, m))
        .collect())
}

#[derive(Default)]
struct Partial {
    visited: u64,
    counts: BTreeMap<String, u64>,
    bad: Vec<(u64, String, String)>,
}

impl Partial {
    fn merge(mut self, other: Partial) -> Partial {
        self.visited += other.visited;
        for (k, v) in other.counts {
            *self.counts.entry(k).or_default() += v;
        }
        self.bad.extend(other.bad);
        self
    }
}

/// Runs `callback` on every graph of the given order (labeled, or one per
/// isomorphism class with `dedup`) in parallel and aggregates its tags and
/// counterexamples. The summary does not depend on the thread count.
pub fn sweep_all_graphs<F>(order: usize, opts: SweepOptions, callback: F) -> Result<SweepSummary>
where
    F: Fn(&Graph) -> Result<Observation> + Sync,
{
    check_order(order, opts)?;
    let pairs = pair_list(order);
    let masks = labeled_codes(order, opts)?;
    let partial = masks
        .par_iter()
        .map(|&mask| {
            let g = graph_from_bits(order, &pairs, mask);
            callback(&g).map(|obs| (mask, g, obs))
        })
        .try_fold(Partial::default, |mut acc, item| {
            let (mask, g, obs) = item?;
            acc.visited += 1;
            for tag in obs.tags {
                *acc.counts.entry(tag).or_default() += 1;
            }
            if let Some(reason) = obs.counterexample {
                acc.bad.push((mask, g.to_string(), reason));
            }
            Ok::<_, Error>(acc)
        })
        .try_reduce(Partial::default, |a, b| Ok(a.merge(b)))?;
    let mut bad = partial.bad;
    bad.sort();
    Ok(SweepSummary {
        order,
        dedup: opts.dedup,
        visited: partial.visited,
        counts: partial.counts,
        counterexamples: bad.into_iter().map(|(_, g, r)| (g, r)).collect(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn class_counts() {
        let dedup = SweepOptions {
            dedup: true,
            ..Default::default()
        };
        let counts: Vec<usize> = (1..=5)
            .map(|n| graphs_of_order(n, dedup).unwrap().len())
            .collect();
        assert_eq!(counts, vec![1, 2, 4, 11, 34]);
        assert_eq!(
            graphs_of_order(4, SweepOptions::default()).unwrap().len(),
            64
        );
    }

    #[test]
    fn order_guard() {
        let r = sweep_all_graphs(8, SweepOptions::default(), |_| Ok(Observation::default()));
        assert!(matches!(
            r,
            Err(Error::UnsupportedOrder { order: 8, limit: 7 })
        ));
        let big = SweepOptions {
            dedup: true,
            allow_large_order: true,
        };
        assert!(matches!(
            graphs_of_order(12, big),
            Err(Error::UnsupportedOrder { limit: 11, .. })
        ));
    }

    #[test]
    fn tags_and_counterexamples() {
        let s = sweep_all_graphs(3, SweepOptions::default(), |g| {
            let obs = Observation::tagged([format!("edges{}", g.edge_count())]);
            Ok(if g.edge_count() == 3 {
                obs.fail("triangle")
            } else {
                obs
            })
        })
        .unwrap();
        assert_eq!(s.visited, 8);
        assert_eq!(s.count("edges1"), 3);
        assert_eq!(
            s.counterexamples,
            vec![("Bw".to_string(), "triangle".to_string())]
        );
    }
}
