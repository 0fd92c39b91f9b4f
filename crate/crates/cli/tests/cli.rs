use std::path::PathBuf;

use assert_cmd::Command;

fn input(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../inputs").join(name)
}

fn chern() -> Command {
    Command::cargo_bin("chern").unwrap()
}

fn json(out: &[u8]) -> serde_json::Value {
    serde_json::from_slice(out).unwrap()
}

#[test]
fn upsilon_constants_pass() {
    let out = chern().args(["suite", "ex:Upsilon(1)", "--input"]).arg(input("heis.json")).assert().success();
    let v = json(&out.get_output().stdout);
    assert_eq!(v["ok"], true);
    assert_eq!(v["reports"][0]["suite"], "ex:Upsilon(1)");
    assert_eq!(v["reports"][0]["tables"]["U/F_N: constants"], serde_json::json!(["1", "-2", "12", "-120"]));
}

#[test]
fn lie_homology_table() {
    let out = chern().args(["homology", "lie", "--format", "text", "--input"]).arg(input("heis.json")).assert().success();
    let text = String::from_utf8(out.get_output().stdout.clone()).unwrap();
    assert!(text.contains("dim H_n(g): (1, 2, 2, 1)"), "{text}");
}

#[test]
fn chern_compare_writes_a_witness_file() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("cmp.json");
    chern()
        .args(["chern-compare", "--degree-cap", "3", "--input"])
        .arg(input("dual_numbers_T2.json"))
        .arg("--out")
        .arg(&out)
        .assert()
        .success();
    let v: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(&out).unwrap()).unwrap();
    let homotopies = v["reports"][0]["homotopies"].as_array().unwrap();
    assert!(!homotopies.is_empty());
    assert!(homotopies.iter().all(|h| h["reverified"] == true));
}

#[test]
fn text_and_json_agree_and_json_is_stable() {
    let run = |fmt: &str| {
        chern().args(["suite", "all", "--degree-cap", "3", "--format", fmt, "--input"]).arg(input("abelian2.json")).assert().success().get_output().stdout.clone()
    };
    let (a, b) = (run("json"), run("json"));
    assert_eq!(a, b);
    let v = json(&a);
    let text = String::from_utf8(run("text")).unwrap();
    for r in v["reports"].as_array().unwrap() {
        let line = format!("suite {}: {}", r["suite"].as_str().unwrap(), "pass");
        assert!(text.contains(&line), "{line}");
        for c in r["checks"].as_array().unwrap() {
            assert!(text.contains(&format!("[{}] {}", c["verdict"].as_str().unwrap(), c["name"].as_str().unwrap())));
        }
    }
}

#[test]
fn eval_prints_one_value() {
    let out = chern().args(["eval", "d", "--element", "x∧y", "--format", "text", "--input"]).arg(input("heis.json")).assert().success();
    assert_eq!(String::from_utf8_lossy(&out.get_output().stdout), "d(x∧y) = -1·z\n");
}

#[test]
fn usage_and_parse_errors_exit_two() {
    chern().arg("frobnicate").assert().code(2);
    chern().args(["suite", "all"]).assert().code(2);
    chern().args(["suite", "no:such", "--input"]).arg(input("heis.json")).assert().code(2);
    chern().args(["homology", "lie", "--input"]).arg(input("dual_numbers.json")).assert().code(2);
    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("bad.json");
    std::fs::write(&bad, r#"{"lie_algebra": {"dim": 2, "brackets": 7}}"#).unwrap();
    let out = chern().args(["suite", "all", "--input"]).arg(&bad).assert().code(2);
    assert!(String::from_utf8_lossy(&out.get_output().stderr).contains("/lie_algebra/brackets"));
    // truncation below class + 1 is refused before computing
    chern().args(["suite", "all", "--truncation", "2", "--input"]).arg(input("heis.json")).assert().code(2);
}
