use std::io::Write;
use std::process::{Command, Output, Stdio};

fn shellar(args: &[&str], stdin: &str, envs: &[(&str, &str)]) -> Output {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_shellar"));
    cmd.args(args)
        .env_remove("SHELLAR_BUDGET")
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped());
    for (k, v) in envs {
        cmd.env(k, v);
    }
    let mut child = cmd.spawn().unwrap();
    child.stdin.take().unwrap().write_all(stdin.as_bytes()).unwrap();
    child.wait_with_output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

fn file(contents: &str) -> tempfile::NamedTempFile {
    let mut f = tempfile::NamedTempFile::new().unwrap();
    f.write_all(contents.as_bytes()).unwrap();
    f
}

const EXAMPLE: &str = "6 5\n1 2 3\n2 3 4\n3 4 5\n2 4 6\n4 5 6\n";

#[test]
fn gen_cir_star_graph6() {
    let o = shellar(&["gen", "cir-star", "--n", "7", "--r", "4", "--format", "graph6"], "", &[]);
    assert_eq!(o.status.code(), Some(0));
    let line = stdout(&o);
    assert_eq!(line.lines().count(), 1);
    let g = shellar_core::graph6::parse_graph6(line.trim()).unwrap();
    for u in 1..=7usize {
        for v in u + 1..=7 {
            assert_eq!(g.has_edge(u, v), v - u <= 2);
        }
    }
}

#[test]
fn worked_example_certificate() {
    let f = file(EXAMPLE);
    let o = shellar(&["shellable", "--in", f.path().to_str().unwrap(), "--certificate"], "", &[]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["restriction"], serde_json::json!([0, 1, 1, 1, 2]));
    assert_eq!(v["valid"], true);
}

#[test]
fn binom_reports_no_violations() {
    let o = shellar(&["verify", "binom", "--a-max", "25"], "", &[]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("0 violations"));
}

#[test]
fn exit_status_matrix() {
    let cases: &[(&[&str], &str, i32)] = &[
        (&["census"], "Bw\n", 0),
        (&["shellable", "--expect-shellable"], "Bw\n", 0),
        (&["shellable", "--expect-shellable"], "DwC\n", 1),
        (&["shellable"], "DwC\n", 0),
        (&["census"], "not graph6 ~~\n", 1),
        (&["kmtree", "--r", "3"], "Bw\n", 1),
        (&["shellable", "--unknown"], "", 2),
        (&["frobnicate"], "", 2),
        (&["gen", "cir-star", "--n", "7"], "", 2),
        (&["census", "--format", "dot"], "Bw\n", 2),
        (&["census", "--in", "/definitely/not/here"], "", 2),
        (&["--config", "/definitely/not/here", "verify", "binom"], "", 2),
        (&["search", "--n", "7", "--r", "4", "--budget", "10"], "", 1),
        (&["verify", "structural", "--n-max", "6"], "", 1),
        (&["verify", "formula", "--n-max", "5"], "", 0),
    ];
    for (args, input, code) in cases {
        let o = shellar(args, input, &[]);
        assert_eq!(o.status.code(), Some(*code), "{args:?}: {}", stderr(&o));
    }
}

#[test]
fn usage_errors_name_the_flag() {
    let o = shellar(&["shellable", "--unknown"], "", &[]);
    assert!(stderr(&o).contains("--unknown"));
}

#[test]
fn config_file_precedence() {
    let cfg = file("# test config\nformat = json\nworkers = 1\n");
    let path = cfg.path().to_str().unwrap();
    let o = shellar(&["--config", path, "search", "--n", "5", "--r", "2"], "", &[]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["value"], 10);
    let o = shellar(&["--config", path, "--format", "csv", "search", "--n", "5", "--r", "2"], "", &[]);
    assert!(stdout(&o).starts_with("n,r,t,value,witness_graph6\n"));

    let empty = file("");
    let o = shellar(&["--config", empty.path().to_str().unwrap(), "--verbose", "verify", "binom", "--a-max", "3"], "", &[]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stderr(&o).contains("budget = 100000000"));
    assert!(stderr(&o).contains("connected = true"));

    let bad = file("budget = 5\ncolour = red\n");
    let o = shellar(&["--config", bad.path().to_str().unwrap(), "verify", "binom"], "", &[]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("line 2"));

    let disconnected = file("connected = false\n");
    let o = shellar(
        &["--config", disconnected.path().to_str().unwrap(), "--format", "json", "search", "--n", "4", "--r", "3"],
        "",
        &[],
    );
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["graphs_scanned"], 11);
}

#[test]
fn budget_environment_variable_wins() {
    let args = ["--budget", "100000000", "search", "--n", "7", "--r", "4"];
    let o = shellar(&args, "", &[("SHELLAR_BUDGET", "10")]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stderr(&o).contains("budget of 10"));
    let o = shellar(&args, "", &[("SHELLAR_BUDGET", "lots")]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn output_is_deterministic_across_workers() {
    let run = |w: &str| stdout(&shellar(&["--workers", w, "--format", "json", "search", "--n", "7", "--r", "4", "--t", "3"], "", &[]));
    let one = run("1");
    assert_eq!(one, run("1"));
    assert_eq!(one, run("3"));
}

#[test]
fn out_flag_writes_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("g.txt");
    let o = shellar(&["--out", path.to_str().unwrap(), "gen", "complete", "--n", "3"], "", &[]);
    assert_eq!(o.status.code(), Some(0));
    assert!(o.stdout.is_empty());
    assert_eq!(std::fs::read_to_string(path).unwrap(), "Bw\n");
}

#[test]
fn search_from_stdin() {
    // C5 and P5
    let o = shellar(&["search", "--n", "5", "--r", "2", "--source", "stdin", "--format", "csv"], "Dhc\nDhC\n", &[]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert!(out.lines().nth(1).unwrap().starts_with("5,2,all,"), "{out}");
}

#[test]
fn kmtree_and_facetgraph_formats() {
    let g = stdout(&shellar(&["gen", "cir-star", "--n", "6", "--r", "4"], "", &[]));
    let o = shellar(&["kmtree", "--r", "4"], &g, &[]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["root"].as_array().unwrap().len(), 2);
    let o = shellar(&["facetgraph", "--format", "dot"], &g, &[]);
    assert!(stdout(&o).starts_with("graph facets {"));
    let f = file(EXAMPLE);
    let o = shellar(&["fvector", "--in", f.path().to_str().unwrap(), "--with-empty"], "", &[]);
    assert_eq!(stdout(&o), "(6, 10, 5) total=22\n");
}

#[test]
fn ratio_tables_use_six_places() {
    let o = shellar(&["ratios", "--r", "4", "--t", "2", "--n", "200", "--format", "csv"], "", &[]);
    assert_eq!(
        stdout(&o),
        "n,count,ratio,ratio_decimal,limit,gap,gap_decimal,exhaustive\n200,397,397/200,1.985000,2,3/200,0.015000,\n"
    );
}

#[test]
fn order_file_is_checked() {
    let c = file(EXAMPLE);
    let bad = file("1 2 3\n4 5 6\n2 3 4\n3 4 5\n2 4 6\n");
    let o = shellar(
        &["shellable", "--in", c.path().to_str().unwrap(), "--order", bad.path().to_str().unwrap(), "--certificate"],
        "",
        &[],
    );
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["valid"], false);
    assert_eq!(v["failing_step"], 2);
}
