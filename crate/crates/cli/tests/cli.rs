use std::io::Write;
use std::process::{Command, Output, Stdio};

use graph_inertia::graph::{gn, realize_bk};
use graph_inertia::spectra::inertia_exact;
use graph_inertia_cli::{run, EXIT_OK, EXIT_USAGE};
use serde_json::Value;

fn call(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let code = run(
        std::iter::once("ginertia").chain(args.iter().copied()),
        &mut out,
        &mut err,
    );
    (
        code,
        String::from_utf8(out).unwrap(),
        String::from_utf8(err).unwrap(),
    )
}

fn binary(args: &[&str], stdin: Option<&str>, workers: Option<&str>) -> Output {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_ginertia"));
    cmd.args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped());
    match workers {
        Some(w) => cmd.env("GINERTIA_WORKERS", w),
        None => cmd.env_remove("GINERTIA_WORKERS"),
    };
    let mut child = cmd.spawn().unwrap();
    let mut pipe = child.stdin.take().unwrap();
    if let Some(text) = stdin {
        pipe.write_all(text.as_bytes()).unwrap();
    }
    drop(pipe);
    child.wait_with_output().unwrap()
}

#[test]
fn inertia_of_p4() {
    let (code, out, _) = call(&["inertia", "Ch"]);
    assert_eq!(code, EXIT_OK);
    assert_eq!(out, "p=2 n=2 eta=0\n");
    let (_, out, _) = call(&["inertia", "Ch", "--float"]);
    assert!(out.contains("spectrum 1.618034 0.618034 -0.618034 -1.618034"));
    let (_, out, _) = call(&["inertia", "Ch", "--json"]);
    let v: Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["inertia"]["n_neg"], 2);
    assert!(v["spectrum"].is_null());
}

#[test]
fn usage_errors() {
    let (code, _, err) = call(&["inertia", "C?x~"]);
    assert_eq!(code, EXIT_USAGE);
    assert!(err.contains("at byte 2"), "{err}");
    let (code, _, err) = call(&["inertia", "C"]);
    assert_eq!(code, EXIT_USAGE);
    assert!(err.contains("at byte 1"), "{err}");
    assert_eq!(call(&["frobnicate"]).0, EXIT_USAGE);
    assert_eq!(call(&[]).0, EXIT_USAGE);
    assert_eq!(call(&["inertia", "B4(3,2;3)"]).0, EXIT_USAGE);
    assert_eq!(call(&["transform", "add-2", "Ch", "0"]).0, EXIT_USAGE);
    // 0 and 2 share the neighbor 1
    assert_eq!(call(&["transform", "add-2", "Ch", "0", "2"]).0, EXIT_USAGE);
    assert_eq!(call(&["construct", "bk", "4", "1", "2"]).0, EXIT_USAGE);
    assert_eq!(
        call(&["enumerate", "--k", "3", "--max-n", "6"]).0,
        EXIT_USAGE
    );
    assert_eq!(
        call(&["verify", "theorem-main", "--order", "8", "--labeled"]).0,
        EXIT_USAGE
    );
    assert_eq!(call(&["--help"]).0, EXIT_OK);
}

#[test]
fn construct_round_trips_through_inertia() {
    let cases: [(&[&str], graph_inertia::Graph); 3] = [
        (&["gn", "9"], gn(9).unwrap()),
        (
            &["bk", "5", "2", "2", "2", "2", "1"],
            realize_bk(&"B5(2,2;2,2;1)".parse().unwrap()).unwrap(),
        ),
        (
            &["multipartite", "1", "2", "3"],
            graph_inertia::graph::complete_multipartite(&[1, 2, 3]).unwrap(),
        ),
    ];
    for (args, g) in cases {
        let mut argv = vec!["construct"];
        argv.extend_from_slice(args);
        let (code, g6, _) = call(&argv);
        assert_eq!(code, EXIT_OK);
        assert_eq!(g6.trim(), g.to_string());
        let (_, printed, _) = call(&["inertia", g6.trim()]);
        assert_eq!(printed.trim(), inertia_exact(&g).to_string());
    }
    let (code, out, _) = call(&["construct", "kjoin", "2", "Bw", "0", "1", "2"]);
    assert_eq!(code, EXIT_OK);
    let (_, printed, _) = call(&["inertia", out.trim()]);
    assert_eq!(printed.trim(), "p=2 n=3 eta=1");
}

#[test]
fn spec_arguments_and_stdin() {
    let (_, a, _) = call(&["inertia", "B4( 3,2 ; 3,2 )"]);
    assert_eq!(a.trim(), "p=2 n=7 eta=1");
    let out = binary(&["inertia", "-"], Some("Ch\n"), None);
    assert_eq!(out.status.code(), Some(EXIT_OK));
    assert_eq!(String::from_utf8(out.stdout).unwrap(), "p=2 n=2 eta=0\n");
}

#[test]
fn transform_prints_graph_and_certificate() {
    let (code, out, _) = call(&["transform", "add-1", "Ch", "0"]);
    assert_eq!(code, EXIT_OK);
    let (g6, json) = out.split_once('\n').unwrap();
    let (_, printed, _) = call(&["inertia", g6]);
    assert_eq!(printed.trim(), "p=2 n=2 eta=1");
    let cert: Value = serde_json::from_str(json).unwrap();
    assert_eq!(cert["kind"], "I");
    assert_eq!(cert["witness"], serde_json::json!([4, 0]));
    let (code, out, _) = call(&["transform", "delete-1", g6, "4"]);
    assert_eq!(code, EXIT_OK);
    assert!(out.starts_with("Ch\n"));
}

#[test]
fn classify_reports_labels() {
    let (code, out, _) = call(&["classify", "B4(3,2;3,2)"]);
    assert_eq!(code, EXIT_OK);
    let v: Value = serde_json::from_str(&out).unwrap();
    let labels: Vec<&str> = v["labels"]
        .as_array()
        .unwrap()
        .iter()
        .map(|l| l.as_str().unwrap())
        .collect();
    for l in ["G", "G_star", "X_complete", "reduced", "B_star"] {
        assert!(labels.contains(&l), "{labels:?}");
    }
    assert_eq!(v["bstar"], "B4(3,2;3,2)");
}

#[test]
fn enumerate_formats() {
    let (code, out, _) = call(&["enumerate", "--k", "13", "--max-n", "13", "--class", "B0"]);
    assert_eq!(code, EXIT_OK);
    let lines: Vec<&str> = out.lines().collect();
    assert_eq!(lines.len(), 2);
    assert!(lines[1].starts_with("13,1 1 1 1 1 1 1 1 1 1 1 1 1,13,2,"));
    let (_, table, _) = call(&[
        "enumerate",
        "--k",
        "4",
        "--max-n",
        "13",
        "--class",
        "b0",
        "--format",
        "table1",
    ]);
    assert!(table.starts_with("k=4   count=18"));
    assert!(table.ends_with("total 18\n"));
    let (_, json, _) = call(&["enumerate", "--k", "4", "--max-n", "8", "--format", "json"]);
    let rows: Vec<Value> = serde_json::from_str(&json).unwrap();
    let (_, csv, _) = call(&["enumerate", "--k", "4", "--max-n", "8"]);
    assert_eq!(rows.len() + 1, csv.lines().count());
}

#[test]
fn verify_exit_codes_and_determinism() {
    let (code, out, _) = call(&["verify", "b0-empty-14"]);
    assert_eq!(code, EXIT_OK);
    assert!(out.ends_with("b0-empty-14: verified\n"));
    let args = [
        "verify",
        "transforms",
        "--trials",
        "50",
        "--seed",
        "9",
        "--json",
    ];
    let (code, a, _) = call(&args);
    assert_eq!(code, EXIT_OK);
    assert_eq!(a, call(&args).1);
    let v: Value = serde_json::from_str(&a).unwrap();
    assert_eq!(v["ok"], true);
    // an empty sweep has nothing to refute
    let (code, _, _) = call(&["verify", "theorem-main", "--order", "3"]);
    assert_eq!(code, EXIT_OK);
}

#[test]
fn worker_count_does_not_change_output() {
    let args = ["verify", "theorem-main", "--order", "6", "--json"];
    let one = binary(&args, None, Some("1"));
    let many = binary(&args, None, Some("3"));
    assert_eq!(one.status.code(), Some(EXIT_OK));
    assert_eq!(one.stdout, many.stdout);
    let bad = binary(&["inertia", "Ch"], None, Some("zero"));
    assert_eq!(bad.status.code(), Some(EXIT_USAGE));
}

#[test]
fn export_dot() {
    let (code, out, _) = call(&["export", "dot", "Bw", "--name", "K3"]);
    assert_eq!(code, EXIT_OK);
    assert!(out.starts_with("graph \"K3\" {\n"));
    assert_eq!(out.matches(" -- ").count(), 3);
}
