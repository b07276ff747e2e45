use std::io::Write;
use std::path::PathBuf;
use std::process::{Command, Output, Stdio};

use serde_json::{json, Value};

fn poised(args: &[&str], stdin: Option<&str>) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_poised"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    let mut pipe = child.stdin.take().unwrap();
    pipe.write_all(stdin.unwrap_or("").as_bytes()).unwrap();
    drop(pipe);
    child.wait_with_output().unwrap()
}

fn json_out(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).unwrap_or_else(|e| {
        panic!("bad stdout ({e}): {}", String::from_utf8_lossy(&out.stdout))
    })
}

fn temp_file(name: &str, body: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("poised-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join(name);
    std::fs::write(&path, body).unwrap();
    path
}

const FOUR: &str = r#"{"nodes": [["0","0"],["1","0"],["2","0"],["0","1"]]}"#;

#[test]
fn dstar() {
    let out = poised(&["dstar", "-n", "5", "-k", "3"], None);
    assert!(out.status.success());
    assert_eq!(json_out(&out), json!({"d": 15, "K": 13}));
}

#[test]
fn collinear_triple_is_not_linearly_independent() {
    let out = poised(&["indep", "-n", "1", "-"], Some(r#"{"nodes": [["0","0"],["1","1"],["2","2"]]}"#));
    assert_eq!(json_out(&out), json!({"independent": false, "hilbert": 2}));
    let out = poised(&["poised", "-n", "1"], Some(r#"{"nodes": [["0","0"],["1","0"],["0","1/2"]]}"#));
    assert_eq!(json_out(&out), json!({"poised": true}));
}

#[test]
fn basis_and_fundamental() {
    let out = poised(&["basis", "-n", "2"], Some(FOUR));
    let v = json_out(&out);
    assert_eq!(v["dim"], 2);
    let texts: Vec<&str> = v["basis"].as_array().unwrap().iter().map(|p| p["text"].as_str().unwrap()).collect();
    assert_eq!(texts, ["x*y", "-y + y^2"]);

    let out = poised(&["fund", "-n", "1", "--node", "0"], Some(r#"{"nodes": [["0","0"],["1","0"],["0","1"]]}"#));
    assert_eq!(json_out(&out)["poly"]["text"], "1 - x - y");
    let out = poised(&["fund", "-n", "1", "--node", "2"], Some(FOUR));
    assert_eq!(json_out(&out)["poly"], Value::Null);
}

#[test]
fn defect_example() {
    let out = poised(&["verify", "defect", "-n", "2", "-k", "2"], Some(FOUR));
    assert!(out.status.success());
    let v = json_out(&out);
    assert_eq!(v["ok"], true);
    assert_eq!(v["outlier_index"], 3);
    assert_eq!(v["dim"], 2);
    assert_eq!(v["mu"]["text"], "y");
}

#[test]
fn generated_defects_verify() {
    for (n, k) in [(2, 2), (4, 3), (5, 2)] {
        let gen = poised(&["gen", "defect", "-n", &n.to_string(), "-k", &k.to_string(), "--seed", "7"], None);
        assert!(gen.status.success());
        let meta = json_out(&gen)["meta"].clone();
        let out = poised(&["verify", "defect"], Some(std::str::from_utf8(&gen.stdout).unwrap()));
        let v = json_out(&out);
        assert_eq!(v["ok"], true, "n={n} k={k}");
        assert_eq!(v["outlier_index"], meta["outlier_index"]);
        assert_eq!(v["params"], json!({"n": n, "k": k}));
    }
}

#[test]
fn extend_along_a_curve_file() {
    let curve = temp_file("axes.json", r#"{"lines": [{"a":"1","b":"0","c":"0"}, {"a":"0","b":"1","c":"0"}]}"#);
    let out = poised(
        &["extend", "-n", "3", "--on-curve", curve.to_str().unwrap()],
        Some(r#"{"nodes": [["1","0"],["0","1"]]}"#),
    );
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    assert_eq!(json_out(&out)["nodes"].as_array().unwrap().len(), 7);

    let out = poised(&["extend", "-n", "2"], Some(r#"{"nodes": [["0","0"],["1","0"],["2","0"]]}"#));
    assert_eq!(json_out(&out)["nodes"].as_array().unwrap().len(), 6);
}

#[test]
fn two_curves_and_uniqueness() {
    let out = poised(&["verify", "twocurves", "-n", "2", "-k", "2", "--at", "1,1"], Some(FOUR));
    let v = json_out(&out);
    assert_eq!(v["ok"], true);
    assert_eq!(v["curve"]["text"], "-y + y^2");

    let five = r#"{"nodes": [["0","0"],["1","0"],["0","1"],["2","3"],["-1","5"]]}"#;
    let out = poised(&["verify", "uniqueness", "-n", "2", "-k", "2"], Some(five));
    assert!(out.status.success());
    assert_eq!(json_out(&out)["ok"], true);
}

#[test]
fn line_usage_on_generated_set() {
    let gen = poised(&["gen", "br", "-n", "3", "--seed", "3"], None);
    let out = poised(&["verify", "lineusage"], Some(std::str::from_utf8(&gen.stdout).unwrap()));
    let v = json_out(&out);
    assert_eq!(v["ok"], true);
    for line in v["lines"].as_array().unwrap() {
        let users = line["users"].as_array().unwrap().len();
        assert!(users == 1 || users == 3);
    }
}

#[test]
fn render_writes_svg() {
    let nodes = temp_file("nodes.json", FOUR);
    let curve = temp_file("y.json", r#"{"n": 1, "coeffs": ["0", "0", "1"]}"#);
    let svg = nodes.with_file_name("out.svg");
    let out = poised(
        &["render", nodes.to_str().unwrap(), "--curve", curve.to_str().unwrap(), "-o", svg.to_str().unwrap()],
        None,
    );
    assert!(out.status.success());
    let text = std::fs::read_to_string(&svg).unwrap();
    assert!(text.contains("<svg"));
    assert_eq!(text.matches("<circle").count(), 4);
}

#[test]
fn errors_are_one_line_json_with_exit_codes() {
    let out = poised(&["dstar", "-n", "2", "-k", "5"], None);
    assert_eq!(out.status.code(), Some(1));
    let err = String::from_utf8(out.stderr).unwrap();
    assert_eq!(err.lines().count(), 1);
    assert!(serde_json::from_str::<Value>(&err).unwrap()["error"].is_string());

    let out = poised(&["indep", "-n", "1"], Some(r#"{"nodes": [["0","0"],["0","0"]]}"#));
    assert_eq!(out.status.code(), Some(1));
    let out = poised(&["indep"], Some(r#"{"nodes": []}"#));
    assert_eq!(out.status.code(), Some(1));
    let out = poised(&["frobnicate"], None);
    assert_eq!(out.status.code(), Some(1));
    let out = poised(&["--help"], None);
    assert_eq!(out.status.code(), Some(0));
}
