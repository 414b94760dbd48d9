use std::fs;
use std::process::Command;

use dimonoid_cli::{run, EXIT_FALSE, EXIT_INVALID, EXIT_OK, EXIT_USAGE};
use serde_json::Value;

struct Run {
    code: i32,
    out: String,
    err: String,
}

fn call(args: &[&str]) -> Run {
    let (mut out, mut err) = (Vec::new(), Vec::new());
    let code = run(args.iter().copied(), &mut out, &mut err);
    Run {
        code,
        out: String::from_utf8(out).unwrap(),
        err: String::from_utf8(err).unwrap(),
    }
}

fn json(s: &str) -> Value {
    serde_json::from_str(s).unwrap_or_else(|e| panic!("not JSON ({e}): {s}"))
}

const LO_RO_2: &str = r#"{"n":2,"left":[[0,0],[1,1]],"right":[[0,1],[0,1]]}"#;

#[test]
fn build_lob_matches_family_table() {
    let r = call(&[
        "build", "--family", "LOB", "--n", "3", "--a", "0", "--c", "1", "--format", "json",
    ]);
    assert_eq!(r.code, EXIT_OK, "{}", r.err);
    assert_eq!(r.out, "{\"n\":3,\"table\":[[0,1,1],[1,1,1],[2,2,2]]}\n");
    let expected = dimonoid::families::lob(3, 0, 1).unwrap();
    let parsed: dimonoid::OpTable = serde_json::from_str(&r.out).unwrap();
    assert_eq!(parsed, expected);
}

#[test]
fn build_table_format_is_a_cayley_square() {
    let r = call(&["build", "--family", "RO", "--n", "2", "--format", "table"]);
    assert_eq!(r.code, EXIT_OK);
    assert_eq!(r.out, "∗ | 0 1\n--+----\n0 | 0 1\n1 | 0 1\n");
}

#[test]
fn build_with_subset_and_plus_zero_base() {
    let r = call(&[
        "build", "--family", "LO_arrow", "--n", "3", "--A", "0,1", "--a", "0",
    ]);
    assert_eq!(json(&r.out)["table"], json("[[0,0,0],[1,1,1],[0,0,0]]"));
    let r = call(&["build", "--family", "plus_zero", "--n", "2", "--base", "RO"]);
    assert_eq!(r.code, EXIT_OK, "{}", r.err);
    assert_eq!(json(&r.out)["table"], json("[[0,1,2],[0,1,2],[2,2,2]]"));
}

#[test]
fn validation_errors_exit_3_with_code() {
    let r = call(&[
        "build", "--family", "LOB", "--n", "3", "--a", "1", "--c", "1",
    ]);
    assert_eq!(r.code, EXIT_INVALID);
    assert!(r.out.is_empty());
    assert_eq!(json(&r.err)["error"]["code"], "equal_distinguished");

    let r = call(&["build", "--family", "LO", "--n", "3", "--a", "0"]);
    assert_eq!(json(&r.err)["error"]["code"], "unexpected_parameter");

    let r = call(&["verify", "--json", r#"{"n":2,"table":[[0,0],[0,2]]}"#]);
    assert_eq!(r.code, EXIT_INVALID);
    assert_eq!(json(&r.err)["error"]["code"], "index_out_of_range");

    let r = call(&["verify", "--json", "{not json"]);
    assert_eq!(json(&r.err)["error"]["code"], "parse_error");

    let r = call(&["verify", "/nonexistent/table.json"]);
    assert_eq!(r.code, EXIT_INVALID);
    assert_eq!(json(&r.err)["error"]["code"], "io_error");
}

#[test]
fn usage_errors_exit_2() {
    for args in [
        &["frobnicate"][..],
        &["build", "--n", "3"],
        &["verify"],
        &["verify", "x.json", "--json", "{}"],
        &["classify", "--n", "2", "--quotient", "weird"],
        &["build", "--family", "NOPE", "--n", "2"],
    ] {
        let r = call(args);
        assert_eq!(r.code, EXIT_USAGE, "{args:?}");
        assert!(r.out.is_empty());
        assert!(!r.err.is_empty());
    }
}

#[test]
fn help_goes_to_stdout() {
    let r = call(&["--help"]);
    assert_eq!(r.code, EXIT_OK);
    assert!(r.out.contains("classify"));
}

#[test]
fn verify_lists_every_failing_axiom() {
    // naive flip of LO_2 ⋈ RO_2
    let flipped = r#"{"n":2,"left":[[0,1],[0,1]],"right":[[0,0],[1,1]]}"#;
    let r = call(&["verify", "--json", flipped]);
    assert_eq!(r.code, EXIT_FALSE);
    let doc = json(&r.out);
    assert_eq!(doc["dimonoid"], false);
    let failures = doc["failures"].as_array().unwrap();
    let names: Vec<&str> = failures
        .iter()
        .map(|f| f["axiom"].as_str().unwrap())
        .collect();
    assert_eq!(names, ["d1", "d2", "d3"]);
    for f in failures {
        assert_eq!(f["witness"].as_array().unwrap().len(), 3);
    }

    let r = call(&["verify", "--json", LO_RO_2]);
    assert_eq!(r.code, EXIT_OK);
    assert_eq!(json(&r.out)["failures"], json("[]"));
}

#[test]
fn props_and_halo() {
    let r = call(&["props", "--json", LO_RO_2]);
    assert_eq!(r.code, EXIT_OK);
    let doc = json(&r.out);
    assert_eq!(doc["flags"]["abelian"], true);
    assert_eq!(doc["flags"]["commutative"], false);
    assert_eq!(doc["halo"], json("[0,1]"));

    let r = call(&["halo", "--json", r#"{"family":"LOB","n":3,"a":0,"c":1}"#]);
    assert_eq!(r.code, EXIT_OK);
    assert_eq!(r.out, "{\"halo\":[]}\n");

    let r = call(&[
        "props",
        "--json",
        r#"{"n":2,"left":[[0,1],[0,1]],"right":[[0,0],[1,1]]}"#,
    ]);
    assert_eq!(r.code, EXIT_INVALID);
    assert_eq!(json(&r.err)["error"]["code"], "not_a_dimonoid");
}

#[test]
fn aut_with_and_without_spec() {
    let input = r#"{"family":"LOB","n":5,"a":0,"c":1}"#;
    let r = call(&["aut", "--json", input]);
    assert_eq!(r.code, EXIT_OK);
    assert_eq!(json(&r.out)["order"], 6);

    let r = call(&["aut", "--json", input, "--spec", "fixed=0,1;blocks=2,3,4"]);
    assert_eq!(r.code, EXIT_OK);
    assert_eq!(json(&r.out)["matches"], true);

    let r = call(&["aut", "--json", input, "--spec", "fixed=0,1,2;blocks=3,4"]);
    assert_eq!(r.code, EXIT_FALSE);
    assert_eq!(json(&r.out)["matches"], false);

    let r = call(&["aut", "--json", input, "--spec", "fixed=0;blocks=1,1"]);
    assert_eq!(r.code, EXIT_INVALID);
}

#[test]
fn dual_and_naive_flip() {
    let r = call(&["dual", "--json", LO_RO_2]);
    assert_eq!(json(&r.out), json(LO_RO_2));
    let r = call(&["dual", "--naive", "--json", LO_RO_2]);
    assert_eq!(
        json(&r.out),
        json(r#"{"n":2,"left":[[0,1],[0,1]],"right":[[0,0],[1,1]]}"#)
    );
}

#[test]
fn iso_of_arrow_semigroups_with_equal_subset_sizes() {
    let dir = tempfile::tempdir().unwrap();
    let a = dir.path().join("a.json");
    let b = dir.path().join("b.json");
    let c = dir.path().join("c.json");
    for (path, subset, dist) in [(&a, "0,1", "0"), (&b, "0,3", "3"), (&c, "0,1,3", "3")] {
        let r = call(&[
            "build", "--family", "LO_arrow", "--n", "4", "--A", subset, "--a", dist,
        ]);
        fs::write(path, r.out).unwrap();
    }
    let r = call(&["iso", a.to_str().unwrap(), b.to_str().unwrap()]);
    assert_eq!(r.code, EXIT_OK);
    assert!(r.out.contains("true"));
    let r = call(&[
        "iso",
        a.to_str().unwrap(),
        c.to_str().unwrap(),
        "--format",
        "table",
    ]);
    assert_eq!(r.code, EXIT_FALSE);
    assert_eq!(r.out, "false\n");
}

#[test]
fn classify_writes_catalog_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("cat.jsonl");
    let r = call(&["classify", "--n", "2", "--out", path.to_str().unwrap()]);
    assert_eq!(r.code, EXIT_OK);
    let on_disk = fs::read_to_string(&path).unwrap();
    assert_eq!(on_disk, r.out);
    assert_eq!(on_disk.lines().count(), 8);
    let loaded = dimonoid::catalog::load_catalog(&path).unwrap();
    assert_eq!(loaded.iter().map(|e| e.labeled_count).sum::<usize>(), 13);

    let r = call(&["classify", "--n", "2", "--quotient", "iso-dual"]);
    assert_eq!(r.out.lines().count(), 6);

    let r = call(&["classify", "--n", "9"]);
    assert_eq!(json(&r.err)["error"]["code"], "bound_exceeded");
}

#[test]
fn output_flag_redirects_result() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("t.json");
    let r = call(&[
        "build",
        "--family",
        "LO",
        "--n",
        "2",
        "-o",
        path.to_str().unwrap(),
    ]);
    assert_eq!(r.code, EXIT_OK);
    assert!(r.out.is_empty());
    assert_eq!(
        fs::read_to_string(path).unwrap(),
        "{\"n\":2,\"table\":[[0,0],[1,1]]}\n"
    );
}

#[test]
fn suite_small_passes() {
    let r = call(&["suite", "--n-max", "3"]);
    assert_eq!(r.code, EXIT_OK, "{}", r.out);
    let doc = json(&r.out);
    assert_eq!(doc["all_passed"], true);
    assert!(doc["records"].as_array().unwrap().len() > 20);

    let r = call(&["suite", "--n-max", "0"]);
    assert_eq!(r.code, EXIT_INVALID);
}

#[test]
fn json_output_is_byte_stable_across_worker_counts() {
    let one = call(&["classify", "--n", "3", "--workers", "1"]);
    let two = call(&["classify", "--n", "3", "--workers", "2"]);
    let again = call(&["classify", "--n", "3", "--workers", "2"]);
    assert_eq!(one.out, two.out);
    assert_eq!(two.out, again.out);
    assert_eq!(one.out.lines().count(), 52);
}

#[test]
fn binary_exit_codes_and_env_override() {
    let bin = env!("CARGO_BIN_EXE_dimonoid");
    let out = Command::new(bin)
        .args(["classify", "--n", "2"])
        .env("DIMONOID_WORKERS", "1")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(String::from_utf8(out.stdout).unwrap().lines().count(), 8);

    let out = Command::new(bin).args(["iso", "--bad"]).output().unwrap();
    assert_eq!(out.status.code(), Some(2));

    let out = Command::new(bin)
        .args(["verify", "--json", r#"{"n":2,"table":[[1,0],[0,0]]}"#])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(1));
}
