use std::path::Path;
use std::process::{Command, Output, Stdio};

use falab::report::Clause;
use falab_cli::{run, Format, ReportDoc};
use proptest::prelude::*;
use serde_json::{json, Value};

fn falab(dir: &Path, args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_falab")).current_dir(dir).args(args).output().unwrap()
}

fn report(o: &Output) -> Value {
    serde_json::from_slice(&o.stdout).unwrap_or_else(|e| panic!("{e}: {}", String::from_utf8_lossy(&o.stderr)))
}

fn write(dir: &Path, name: &str, v: &Value) {
    std::fs::write(dir.join(name), serde_json::to_string(v).unwrap()).unwrap();
}

#[test]
fn broken_associativity_names_the_triple() {
    let d = tempfile::tempdir().unwrap();
    let bad = json!({"field": "Q", "dim": 3, "unit": ["1", "0", "0"],
        "mul": [[0,0,0,"1"],[0,1,1,"1"],[1,0,1,"1"],[0,2,2,"1"],[2,0,2,"1"],[1,1,2,"1"],[1,2,0,"1"]]});
    write(d.path(), "bad.json", &bad);
    let o = falab(d.path(), &["check", "bad.json"]);
    assert_eq!(o.status.code(), Some(2));
    let err = String::from_utf8_lossy(&o.stderr);
    assert!(err.contains("bad.json") && err.contains("(1, 1, 1)"), "{err}");
}

#[test]
fn malformed_inputs_exit_two_with_locations() {
    let d = tempfile::tempdir().unwrap();
    std::fs::write(d.path().join("trunc.json"), "{\"field\": \"Q\",\n").unwrap();
    let o = falab(d.path(), &["check", "trunc.json"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("line 2"));

    write(d.path(), "x.json", &json!({"field": "Q", "dim": 1, "unit": ["1"], "mul": [[0, 0, 0, "1/0"]]}));
    let o = falab(d.path(), &["check", "x.json"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("$.mul[0][3]"));

    write(d.path(), "f.json", &json!({"field": {"kind": "prime", "p": 4}, "dim": 1, "unit": ["1"], "mul": []}));
    assert_eq!(falab(d.path(), &["check", "f.json"]).status.code(), Some(2));
    assert_eq!(falab(d.path(), &["check", "missing.json"]).status.code(), Some(2));
    assert_eq!(falab(d.path(), &["no-such-command"]).status.code(), Some(2));
    assert_eq!(falab(d.path(), &["--help"]).status.code(), Some(0));
}

#[test]
fn dimension_cap_comes_from_the_environment() {
    let d = tempfile::tempdir().unwrap();
    assert_eq!(falab(d.path(), &["make", "S3", "-o", "s3.json"]).status.code(), Some(0));
    let o = Command::new(env!("CARGO_BIN_EXE_falab")).current_dir(d.path()).env("FALAB_MAX_DIM", "4").args(["check", "s3.json"]).output().unwrap();
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("limit 4"));
    let o = Command::new(env!("CARGO_BIN_EXE_falab")).current_dir(d.path()).env("FALAB_MAX_DIM", "lots").args(["check", "s3.json"]).output().unwrap();
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn sweedler_integrals_are_facts_not_failures() {
    let d = tempfile::tempdir().unwrap();
    falab(d.path(), &["make", "H4", "-o", "h4.json"]);
    let o = falab(d.path(), &["integrals", "h4.json"]);
    assert_eq!(o.status.code(), Some(0));
    let r = report(&o);
    assert_eq!(r["facts"]["unimodular"], false);
    assert_eq!(r["facts"]["separable"], false);
    assert_eq!(r["facts"]["dim_eps"], "0");
    let o = falab(d.path(), &["hopf-report", "h4.json"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(report(&o)["facts"]["symmetric"], false);
}

#[test]
fn s3_pipeline_through_stdin() {
    let d = tempfile::tempdir().unwrap();
    falab(d.path(), &["make", "S3", "-o", "s3.json"]);
    let build = falab(d.path(), &["g0", "build", "s3.json"]);
    assert_eq!(build.status.code(), Some(0));
    let b = report(&build);
    assert_eq!(b["facts"]["chi_ad"], json!(["6", "2", "3"]));
    let mut child = Command::new(env!("CARGO_BIN_EXE_falab"))
        .current_dir(d.path())
        .args(["g0", "spectrum", "-"])
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .spawn()
        .unwrap();
    std::io::Write::write_all(child.stdin.as_mut().unwrap(), &build.stdout).unwrap();
    let o = child.wait_with_output().unwrap();
    assert_eq!(o.status.code(), Some(0));
    let s = report(&o);
    assert_eq!(s["facts"]["eigenvalues"], json!(["6", "3", "2"]));
    assert_eq!(s["facts"]["complete"], true);
    assert_eq!(s["inputs"][0]["path"], "-");
}

#[test]
fn standalone_module_and_fusion_files() {
    let d = tempfile::tempdir().unwrap();
    falab(d.path(), &["make", "S3", "-o", "s3.json"]);
    let s3: Value = serde_json::from_slice(&std::fs::read(d.path().join("s3.json")).unwrap()).unwrap();
    let mut m = s3["modules"][2].clone();
    m["algebra"] = json!("s3.json");
    write(d.path(), "v2.json", &m);
    let o = falab(d.path(), &["check", "v2.json"]);
    assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stderr));
    assert_eq!(report(&o)["facts"]["dim"], 2);
    let o = falab(d.path(), &["module-report", "s3.json", "v2.json", "--format", "markdown"]);
    assert_eq!(o.status.code(), Some(0));
    let md = String::from_utf8(o.stdout).unwrap();
    assert!(md.starts_with("# falab module-report") && md.contains("| pass |"));

    write(d.path(), "z3.json", &json!({"rank": 3, "dims": [1, 1, 1], "dual": [0, 2, 1], "unit": 0,
        "N": [[0,0,0,1],[0,1,1,1],[0,2,2,1],[1,0,1,1],[1,1,2,1],[1,2,0,1],[2,0,2,1],[2,1,0,1],[2,2,1,1]]}));
    let o = falab(d.path(), &["g0", "ss-locus", "z3.json"]);
    assert_eq!(o.status.code(), Some(0));
    let r = report(&o);
    assert_eq!(r["facts"]["d"], "3");
    for row in r["facts"]["primes"].as_array().unwrap() {
        assert_eq!(row["semisimple"], row["p"] != 3);
    }
    assert_eq!(falab(d.path(), &["zhu", "z3.json"]).status.code(), Some(0));
    let ce = report(&falab(d.path(), &["g0", "class-eq", "z3.json"]));
    assert_eq!(ce["facts"]["rows"].as_array().unwrap().len(), 3);

    write(d.path(), "bad_fusion.json", &json!({"dims": [1, 1], "dual": [0, 1], "unit": 0, "N": [[0,0,0,1],[0,1,1,1],[1,0,1,1]]}));
    assert_eq!(falab(d.path(), &["g0", "spectrum", "bad_fusion.json"]).status.code(), Some(2));
}

#[test]
fn frobenius_on_a_matrix_algebra() {
    let d = tempfile::tempdir().unwrap();
    falab(d.path(), &["make", "M2", "-o", "m2.json"]);
    let o = falab(d.path(), &["frobenius", "m2.json", "--lambda", "1,0,0,1"]);
    assert_eq!(o.status.code(), Some(0));
    let r = report(&o);
    assert_eq!(r["facts"]["casimir_element"], json!(["2", "0", "0", "2"]));
    assert_eq!(r["facts"]["separable"], true);
    assert_eq!(r["facts"]["nakayama_is_identity"], true);
    // a singular functional is invalid input
    assert_eq!(falab(d.path(), &["frobenius", "m2.json", "--lambda", "0,0,0,0"]).status.code(), Some(2));
    assert_eq!(falab(d.path(), &["frobenius", "m2.json", "--lambda", "1,0"]).status.code(), Some(2));
}

#[test]
fn cyclotomic_and_dual_bundles_build() {
    let d = tempfile::tempdir().unwrap();
    for name in ["C4", "dual:S3", "dual:C4"] {
        let file = format!("{}.json", name.replace(':', "_"));
        assert_eq!(falab(d.path(), &["make", name, "-o", &file]).status.code(), Some(0));
        let o = falab(d.path(), &["g0", "build", &file]);
        assert_eq!(o.status.code(), Some(0), "{name}: {}", String::from_utf8_lossy(&o.stderr));
    }
    let o = falab(d.path(), &["make", "C3", "--field", "Q"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn exit_code_follows_failures() {
    let mut doc = ReportDoc::new("t");
    doc.stage::<()>("a", || Ok(vec![Clause::skipped("s", "x", "r"), Clause::undefined("u", "x", "r")])).unwrap();
    assert_eq!(doc.exit_code(), 0);
    doc.stage::<()>("b", || Ok(vec![Clause::compare("f", "x", json!(1), json!(2))])).unwrap();
    assert_eq!(doc.exit_code(), 1);
    let v: Value = serde_json::from_str(&doc.emit(Format::Json, false)).unwrap();
    assert_eq!(v["summary"]["fail"], 1);
}

#[test]
fn in_process_run_matches_the_binary() {
    let d = tempfile::tempdir().unwrap();
    let out = d.path().join("h4.json");
    let r = run(["falab", "make", "H4", "-o", out.to_str().unwrap()]);
    assert_eq!((r.code, r.stdout.as_str()), (0, ""));
    let a = run(["falab", "integrals", out.to_str().unwrap()]);
    let b = falab(d.path(), &["integrals", out.to_str().unwrap()]);
    assert_eq!(a.stdout.as_bytes(), b.stdout.as_slice());
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn exit_one_iff_some_clause_fails(outcomes in prop::collection::vec(0u8..4, 0..12)) {
        let clauses: Vec<Clause> = outcomes
            .iter()
            .map(|k| match k {
                0 => Clause::compare("p", "a", json!(1), json!(1)),
                1 => Clause::compare("f", "a", json!(1), json!(0)),
                2 => Clause::skipped("s", "a", "r"),
                _ => Clause::undefined("u", "a", "r"),
            })
            .collect();
        let mut doc = ReportDoc::new("p");
        doc.stage::<()>("s", || Ok(clauses)).unwrap();
        prop_assert_eq!(doc.exit_code() == 1, outcomes.contains(&1));
        let v: Value = serde_json::from_str(&doc.emit(Format::Json, false)).unwrap();
        prop_assert_eq!(v["clauses"].as_array().unwrap().len(), outcomes.len());
        prop_assert_eq!(doc.emit(Format::Markdown, false), doc.emit(Format::Markdown, false));
    }
}
