//! End-to-end runs of the `abelian` binary: argument parsing, JSON output
//! shapes, exit codes and the file-based code workflow.

use std::process::Command;

fn run(args: &[&str]) -> (String, String, Option<i32>) {
    let out = Command::new(env!("CARGO_BIN_EXE_abelian"))
        .args(args)
        .output()
        .expect("binary runs");
    (
        String::from_utf8_lossy(&out.stdout).into_owned(),
        String::from_utf8_lossy(&out.stderr).into_owned(),
        out.status.code(),
    )
}

fn json(stdout: &str) -> serde_json::Value {
    serde_json::from_str(stdout).expect("stdout is a JSON record")
}

#[test]
fn orbit_of_3_mod_45() {
    let (stdout, _, code) = run(&["orbit", "--q", "2", "--n", "45", "--rep", "3"]);
    assert_eq!(code, Some(0));
    let v = json(&stdout);
    assert_eq!(v["result"]["members"], serde_json::json!([3, 6, 12, 24]));
    // the config is echoed into the record
    assert_eq!(v["config"]["bounds"], "bch");
}

#[test]
fn bound_values() {
    let (stdout, _, code) = run(&["bound", "--n", "7", "--set", "1,2"]);
    assert_eq!(code, Some(0));
    assert_eq!(json(&stdout)["result"]["value"], 3);

    let (stdout, _, _) = run(&["--bounds", "bch,ht", "bound", "--n", "7", "--set", "1,2"]);
    let v = json(&stdout);
    assert_eq!(v["result"]["bounds"], serde_json::json!(["bch", "ht"]));
}

#[test]
fn apparent_of_zero_matrix_is_zero() {
    // the full index box as defining set affords the zero matrix
    let (stdout, _, code) = run(&[
        "apparent",
        "--q",
        "2",
        "--dims",
        "3,5",
        "--defining",
        "0,0;0,1;1,0;1,1;2,1;1,2;0,2;2,2;1,4",
    ]);
    assert_eq!(code, Some(0));
    assert_eq!(json(&stdout)["result"]["value"], 0);
}

#[test]
fn bmad_trace_of_seven_by_seven() {
    let (stdout, _, code) = run(&[
        "bmad",
        "--q",
        "2",
        "--dims",
        "7,7",
        "--defining",
        "0,3;1,3;1,5;1,6;3,0;3,2;3,3;3,4;3,5;3,6",
    ]);
    assert_eq!(code, Some(0));
    let v = json(&stdout);
    assert_eq!(v["result"]["result"], 9);
    assert_eq!(v["result"]["steps"].as_array().unwrap().len(), 1);
    assert_eq!(v["result"]["steps"][0]["delta"], 9);
    assert_eq!(v["result"]["steps"][0]["m"], 9);
}

#[test]
fn construct_verify_and_mindist_roundtrip_through_files() {
    let dir = std::env::temp_dir().join(format!("abelian-cli-test-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let code_path = dir.join("code.json");

    // construct with automatic shifts writes a loadable code file
    let (stdout, _, code) = run(&[
        "construct",
        "--q",
        "2",
        "--dims",
        "3,7",
        "--a",
        "0,1",
        "--b",
        "0,1,3",
        "--out",
        code_path.to_str().unwrap(),
    ]);
    assert_eq!(code, Some(0));
    let v = json(&stdout);
    assert_eq!(v["result"]["certificate"]["guaranteed_d"], 8);
    assert_eq!(v["result"]["certificate"]["witness_weight"], 8);
    assert_eq!(v["result"]["certificate"]["bmad"], 8);
    // dimension = |supp(X a)| * |supp(X b)| = 2 * 3
    assert_eq!(v["result"]["dimension"], 6);
    assert_eq!(v["result"]["shifts"], serde_json::json!([1, 1]));

    let (stdout, _, code) = run(&["verify", "--code", code_path.to_str().unwrap()]);
    assert_eq!(code, Some(0));
    assert_eq!(json(&stdout)["result"]["verdict"], "proven");
    assert_eq!(json(&stdout)["result"]["d"], 8);

    let (stdout, _, code) = run(&["mindist", "--code", code_path.to_str().unwrap()]);
    assert_eq!(code, Some(0));
    assert_eq!(json(&stdout)["result"]["d"], 8);

    let (stdout, _, code) = run(&["code-info", "--code", code_path.to_str().unwrap()]);
    assert_eq!(code, Some(0));
    assert_eq!(json(&stdout)["result"]["apparent_at_roots"], 8);

    std::fs::remove_dir_all(&dir).ok();
}

#[test]
fn bch_command_builds_the_dim_58_code() {
    let (stdout, _, code) = run(&[
        "bch",
        "--q",
        "2",
        "--dims",
        "3,45",
        "--gamma",
        "1,2",
        "--delta",
        "2,5",
        "--offsets",
        "0,1",
    ]);
    assert_eq!(code, Some(0));
    let v = json(&stdout);
    assert_eq!(v["result"]["dimension"], 58);
    assert_eq!(v["result"]["apparent_at_roots"], 10);
}

#[test]
fn table_exit_codes() {
    let (stdout, _, code) = run(&["table", "--which", "1"]);
    assert_eq!(code, Some(0), "table 1 reproduces exactly");
    let v = json(&stdout);
    assert_eq!(v["result"]["rows"].as_array().unwrap().len(), 12);

    // table 3 carries four known mismatching rows and exits nonzero
    let (stdout, _, code) = run(&["table", "--which", "3"]);
    assert_eq!(code, Some(1));
    let v = json(&stdout);
    assert_eq!(v["result"]["mismatches"].as_array().unwrap().len(), 4);

    let (stdout, _, code) = run(&["table", "--which", "9"]);
    assert_eq!(code, Some(2));
    assert!(json(&stdout)["error"].is_string());
}

#[test]
fn malformed_input_yields_error_record() {
    let (stdout, _, code) = run(&["orbit", "--q", "2", "--n", "45", "--rep", "99"]);
    assert_eq!(code, Some(2));
    assert!(json(&stdout)["error"]
        .as_str()
        .unwrap()
        .contains("out of range"));

    // non-semisimple parameters are rejected with the offending length
    let (stdout, _, code) = run(&[
        "construct",
        "--q",
        "2",
        "--dims",
        "4,7",
        "--a",
        "0,1",
        "--b",
        "0,1",
    ]);
    assert_eq!(code, Some(2));
    assert!(json(&stdout)["error"].as_str().unwrap().contains("4"));
}

#[test]
fn config_file_supplies_defaults() {
    let dir = std::env::temp_dir().join(format!("abelian-cli-config-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let cfg = dir.join("config.json");
    std::fs::write(&cfg, r#"{"bounds": "bch,ht", "seed": 99}"#).unwrap();
    let (stdout, _, code) = run(&[
        "--config",
        cfg.to_str().unwrap(),
        "bound",
        "--n",
        "7",
        "--set",
        "1,2",
    ]);
    assert_eq!(code, Some(0));
    let v = json(&stdout);
    assert_eq!(v["config"]["bounds"], "bch,ht");
    assert_eq!(v["config"]["seed"], 99);
    assert_eq!(v["result"]["bounds"], serde_json::json!(["bch", "ht"]));
    // explicit flags override the file
    let (stdout, _, _) = run(&[
        "--config",
        cfg.to_str().unwrap(),
        "--bounds",
        "bch",
        "bound",
        "--n",
        "7",
        "--set",
        "1,2",
    ]);
    assert_eq!(json(&stdout)["config"]["bounds"], "bch");
    std::fs::remove_dir_all(&dir).ok();
}

#[test]
fn deterministic_output() {
    let args = ["bmad", "--q", "2", "--dims", "5,9", "--defining", "0,0;1,3"];
    let (a, _, _) = run(&args);
    let (b, _, _) = run(&args);
    assert_eq!(a, b, "identical invocations must produce byte-identical output");
}

#[test]
fn threads_flag_does_not_change_results() {
    let dir = std::env::temp_dir().join(format!("abelian-cli-threads-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let code_path = dir.join("code.json");
    let (_, _, ok) = run(&[
        "construct",
        "--q",
        "2",
        "--dims",
        "7,7",
        "--a",
        "0,1,2,4",
        "--b",
        "0,1,2,4",
        "--h1",
        "0",
        "--h2",
        "0",
        "--out",
        code_path.to_str().unwrap(),
    ]);
    assert_eq!(ok, Some(0));
    let (one, _, _) = run(&["--threads", "1", "mindist", "--code", code_path.to_str().unwrap()]);
    let (many, _, _) = run(&["--threads", "4", "mindist", "--code", code_path.to_str().unwrap()]);
    let d1 = json(&one)["result"]["d"].clone();
    let d4 = json(&many)["result"]["d"].clone();
    assert_eq!(d1, d4);
    assert_eq!(json(&one)["result"]["d"], 9);
    std::fs::remove_dir_all(&dir).ok();
}
