use std::collections::BTreeMap;

use graph_inertia::classifier::checks::{
    bstar_structure_problems, theorem_disconnected_observation, theorem_main_observation,
};
use graph_inertia::enumerator::reference::{
    bstar_list, BSTAR_COUNTS_BY_K, BSTAR_TOTAL, MIDDLE_K_ORDER_HISTOGRAM,
};
use graph_inertia::enumerator::{
    bstar_census, census, pattern_match_bminus, sweep_all_graphs, verify_empty_at_14, BkClass,
    EmptinessReport, Observation, SweepOptions, SweepSummary,
};
use graph_inertia::graph::{contains_induced, find_isomorphism, gn};
use graph_inertia::spectra::{inertia_exact, inertia_float};
use graph_inertia::{BkSpec, Graph, Result};
use serde_json::{json, Value};

use crate::args::Verify;
use crate::trials::transform_trials;

/// Result of one `verify` check.
#[derive(Debug, Clone)]
pub struct Outcome {
    pub check: &'static str,
    pub ok: bool,
    pub lines: Vec<String>,
    pub data: Value,
}

impl Outcome {
    pub fn to_json(&self) -> Value {
        json!({ "check": self.check, "ok": self.ok, "data": self.data })
    }
}

pub fn run_check(check: &Verify) -> Result<Outcome> {
    match *check {
        Verify::Table1 => table1(),
        Verify::AppendixHist => appendix_hist(),
        Verify::B0Empty14 => emptiness("b0-empty-14", verify_empty_at_14(BkClass::B0, 4..=13)?),
        Verify::BminusEmpty14 => emptiness(
            "bminus-empty-14",
            verify_empty_at_14(BkClass::Bminus, 10..=13)?,
        ),
        Verify::Patterns => patterns(),
        Verify::TheoremDisconnected { order, labeled } => sweep(
            "theorem-disconnected",
            order,
            labeled,
            theorem_disconnected_observation,
        ),
        Verify::TheoremMain { order, labeled } => {
            sweep("theorem-main", order, labeled, theorem_main_observation)
        }
        Verify::Transforms {
            trials,
            seed,
            max_order,
        } => transforms(trials, seed, max_order),
        Verify::Oracle { order, tol } => oracle(order, tol),
        Verify::GnChain => gn_chain(),
        Verify::BstarStructure => bstar_structure(),
    }
}

fn table1() -> Result<Outcome> {
    let rows = bstar_census()?;
    let mut lines = Vec::new();
    let mut ok = rows.len() == BSTAR_TOTAL;
    let mut counts = BTreeMap::new();
    for (k, expected) in BSTAR_COUNTS_BY_K {
        let found = rows.iter().filter(|r| r.k() == k).count();
        counts.insert(k, found);
        ok &= found == expected;
        lines.push(format!("k={k:<3} found={found:<4} expected={expected}"));
    }
    let mut found: Vec<BkSpec> = rows.into_iter().map(|r| r.spec).collect();
    let mut listed = bstar_list();
    found.sort();
    listed.sort();
    let missing: Vec<String> = listed
        .iter()
        .filter(|s| found.binary_search(s).is_err())
        .map(ToString::to_string)
        .collect();
    let extra: Vec<String> = found
        .iter()
        .filter(|s| listed.binary_search(s).is_err())
        .map(ToString::to_string)
        .collect();
    ok &= missing.is_empty() && extra.is_empty();
    lines.push(format!("total {} expected {BSTAR_TOTAL}", found.len()));
    lines.push(format!("missing {} extra {}", missing.len(), extra.len()));
    Ok(Outcome {
        check: "table1",
        ok,
        lines,
        data: json!({ "counts": counts, "total": found.len(), "missing": missing, "extra": extra }),
    })
}

fn appendix_hist() -> Result<Outcome> {
    let mut hist: BTreeMap<usize, usize> = BTreeMap::new();
    for r in bstar_census()?
        .into_iter()
        .filter(|r| (6..=10).contains(&r.k()))
    {
        *hist.entry(r.order).or_default() += 1;
    }
    let expected: BTreeMap<usize, usize> = MIDDLE_K_ORDER_HISTOGRAM.into_iter().collect();
    let mut lines: Vec<String> = expected
        .iter()
        .map(|(n, e)| {
            format!(
                "order {n}: found {} expected {e}",
                hist.get(n).copied().unwrap_or(0)
            )
        })
        .collect();
    lines.push(format!("total {}", hist.values().sum::<usize>()));
    Ok(Outcome {
        check: "appendix-hist",
        ok: hist == expected,
        lines,
        data: json!({ "histogram": hist }),
    })
}

fn emptiness(check: &'static str, report: EmptinessReport) -> Result<Outcome> {
    let mut lines = vec![format!(
        "class {} at order {}, k {}..={}: checked {} specs, {} offenders",
        report.class,
        report.order,
        report.k_min,
        report.k_max,
        report.checked,
        report.offenders.len()
    )];
    lines.extend(
        report
            .offenders
            .iter()
            .map(|r| format!("offender {}", r.spec)),
    );
    Ok(Outcome {
        check,
        ok: report.holds(),
        lines,
        data: serde_json::to_value(&report).expect("report serializes"),
    })
}

fn patterns() -> Result<Outcome> {
    let mut lines = Vec::new();
    let mut mismatches = Vec::new();
    let mut per_k = BTreeMap::new();
    for k in 4..=9 {
        let rows: Vec<_> = census(k, 13)?
            .into_iter()
            .filter(|r| r.order == 13)
            .collect();
        let mut bminus = 0;
        for r in &rows {
            let hit = pattern_match_bminus(&r.spec).is_some();
            let is_bminus = r.class == BkClass::Bminus;
            bminus += usize::from(is_bminus);
            if hit != is_bminus {
                mismatches.push(format!("{} class {} family hit {hit}", r.spec, r.class));
            }
        }
        per_k.insert(k, bminus);
        lines.push(format!(
            "k={k} order 13: {} specs, {bminus} Bminus",
            rows.len()
        ));
    }
    lines.extend(mismatches.iter().cloned());
    Ok(Outcome {
        check: "patterns",
        ok: mismatches.is_empty(),
        lines,
        data: json!({ "bminus_at_13": per_k, "mismatches": mismatches }),
    })
}

fn sweep(
    check: &'static str,
    order: usize,
    labeled: bool,
    f: fn(&Graph) -> Result<Observation>,
) -> Result<Outcome> {
    let opts = SweepOptions {
        dedup: !labeled,
        allow_large_order: !labeled,
    };
    let summary = sweep_all_graphs(order, opts, f)?;
    Ok(sweep_outcome(check, summary))
}

fn sweep_outcome(check: &'static str, s: SweepSummary) -> Outcome {
    let mut lines = vec![format!(
        "order {}: visited {} {}",
        s.order,
        s.visited,
        if s.dedup {
            "isomorphism classes"
        } else {
            "labeled graphs"
        }
    )];
    lines.extend(s.counts.iter().map(|(tag, n)| format!("{tag}: {n}")));
    lines.extend(
        s.counterexamples
            .iter()
            .map(|(g, why)| format!("counterexample {g}: {why}")),
    );
    Outcome {
        check,
        ok: s.counterexamples.is_empty(),
        lines,
        data: serde_json::to_value(&s).expect("summary serializes"),
    }
}

fn transforms(trials: usize, seed: u64, max_order: usize) -> Result<Outcome> {
    let reports = transform_trials(trials, seed, max_order)?;
    let ok = reports
        .iter()
        .all(|r| r.failures.is_empty() && r.certified == trials);
    let lines = reports
        .iter()
        .map(|r| {
            format!(
                "{}-type: {} trials, {} certified, {} failures",
                r.kind,
                r.trials,
                r.certified,
                r.failures.len()
            )
        })
        .chain(reports.iter().flat_map(|r| r.failures.iter().cloned()))
        .collect();
    Ok(Outcome {
        check: "transforms",
        ok,
        lines,
        data: serde_json::to_value(&reports).expect("reports serialize"),
    })
}

fn oracle(order: usize, tol: f64) -> Result<Outcome> {
    let mut lines = Vec::new();
    let mut counterexamples = Vec::new();
    let mut visited = 0u64;
    let opts = SweepOptions {
        dedup: true,
        allow_large_order: true,
    };
    for n in 1..=order {
        let s = sweep_all_graphs(n, opts, |g| {
            let exact = inertia_exact(g);
            let float = inertia_float(g, tol)?;
            let obs = Observation::default();
            Ok(if exact == float {
                obs
            } else {
                obs.fail(format!("exact {exact}, float {float}"))
            })
        })?;
        visited += s.visited;
        counterexamples.extend(s.counterexamples);
    }
    lines.push(format!("orders 1..={order}: {visited} isomorphism classes"));
    let listed = bstar_list();
    for spec in &listed {
        let g = graph_inertia::graph::realize_bk(spec)?;
        let (exact, float) = (inertia_exact(&g), inertia_float(&g, tol)?);
        if exact != float {
            counterexamples.push((spec.to_string(), format!("exact {exact}, float {float}")));
        }
    }
    lines.push(format!("listed B_k graphs: {}", listed.len()));
    lines.extend(
        counterexamples
            .iter()
            .map(|(g, why)| format!("counterexample {g}: {why}")),
    );
    Ok(Outcome {
        check: "oracle",
        ok: counterexamples.is_empty(),
        lines,
        data: json!({ "visited": visited, "listed": listed.len(), "tol": tol, "counterexamples": counterexamples }),
    })
}

fn gn_chain() -> Result<Outcome> {
    let mut lines = Vec::new();
    let mut ok = true;
    for n in 2..=13 {
        let host = gn(n + 1)?;
        let found = match contains_induced(&host, &gn(n)?)? {
            Some(s) => find_isomorphism(&host.induced_subgraph(&s)?, &gn(n)?).is_some(),
            None => false,
        };
        ok &= found;
        lines.push(format!("G_{n} in G_{}: {found}", n + 1));
    }
    Ok(Outcome {
        check: "gn-chain",
        ok,
        lines,
        data: json!({}),
    })
}

fn bstar_structure() -> Result<Outcome> {
    let listed = bstar_list();
    let mut failures = Vec::new();
    for spec in &listed {
        let problems = bstar_structure_problems(spec)?;
        if !problems.is_empty() {
            failures.push(format!("{spec}: {}", problems.join("; ")));
        }
    }
    let mut lines = vec![format!(
        "checked {} graphs, {} failures",
        listed.len(),
        failures.len()
    )];
    lines.extend(failures.iter().cloned());
    Ok(Outcome {
        check: "bstar-structure",
        ok: failures.is_empty(),
        lines,
        data: json!({ "checked": listed.len(), "failures": failures }),
    })
}
