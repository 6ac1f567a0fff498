use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::{Command, Output, Stdio};

use circline::cli::TOL_ENV;
use serde_json::Value;

const S31: &str = r#"{"shape": {"type": "circle", "center": [3, 0], "radius": 1}}"#;

fn golden(name: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR"))
        .join("tests/golden")
        .join(name)
}

fn circline(args: &[&str], stdin: Option<&str>, env_tol: Option<&str>) -> Output {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_circline"));
    cmd.args(args).env_remove(TOL_ENV);
    if let Some(t) = env_tol {
        cmd.env(TOL_ENV, t);
    }
    cmd.stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped());
    let mut child = cmd.spawn().unwrap();
    let mut pipe = child.stdin.take().unwrap();
    pipe.write_all(stdin.unwrap_or("").as_bytes()).unwrap();
    drop(pipe);
    child.wait_with_output().unwrap()
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).unwrap()
}

#[test]
fn map_reads_stdin() {
    let out = circline(&["map"], Some(S31), None);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(
        out.stdout,
        std::fs::read(golden("circle_3_1.map.out")).unwrap()
    );
}

#[test]
fn map_reports_case_and_flags_for_regions() {
    let job = r#"{"shape": {"type": "half_plane", "slope": 0, "intercept": 1, "closed": true}}"#;
    let v = json(&circline(&["map"], Some(job), None));
    assert_eq!(v["case"], "halfplane_origin_exterior_to_disk");
    assert_eq!(v["image"]["center"], serde_json::json!([0.0, -0.5]));
    assert_eq!(v["image"]["radius"], 0.5);
    assert_eq!(v["image"]["closed"], true);
    assert_eq!(v["image"]["contains_infinity"], false);
    assert_eq!(v["image"]["punctures"], serde_json::json!([[0.0, 0.0]]));
}

#[test]
fn general_transform() {
    let job = r#"{"transform": [[0, 0], [1, 0], [1, 0], [-1, 0]],
                  "shape": {"type": "disk", "center": [3, 0], "radius": 1, "closed": true}}"#;
    let out = circline(&["verify"], Some(job), None);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    let c = v["image"]["center"].as_array().unwrap();
    assert!((c[0].as_f64().unwrap() - 2.0 / 3.0).abs() < 1e-12);
    assert!((v["image"]["radius"].as_f64().unwrap() - 1.0 / 3.0).abs() < 1e-12);
    assert_eq!(v["report"]["passed"], true);
}

#[test]
fn verify_exits_zero_on_golden_inputs() {
    for name in ["circle_1_1", "line_y_2x", "disk_1_1"] {
        let path = golden(&format!("{name}.json"));
        let out = circline(&["verify", "--input", path.to_str().unwrap()], None, None);
        assert_eq!(out.status.code(), Some(0), "{name}");
        let v = json(&out);
        assert_eq!(v["report"]["passed"], true);
        assert!(v["report"]["samples_forward"].as_u64().unwrap() >= 1000);
    }
}

#[test]
fn failed_verification_exits_one() {
    // a residual tolerance below rounding error cannot be met
    let out = circline(&["verify", "--tol", "1e-18"], Some(S31), None);
    assert_eq!(out.status.code(), Some(1));
    assert_eq!(json(&out)["report"]["passed"], false);
}

#[test]
fn flag_overrides_environment() {
    assert_eq!(
        circline(&["verify"], Some(S31), Some("1e-18"))
            .status
            .code(),
        Some(1)
    );
    let out = circline(&["verify", "--tol", "1e-9"], Some(S31), Some("1e-18"));
    assert_eq!(out.status.code(), Some(0));
}

#[test]
fn record_tolerance_beats_environment() {
    let job = r#"{"shape": {"type": "circle", "center": [3, 0], "radius": 1},
                  "options": {"tol": 1e-9}}"#;
    assert_eq!(
        circline(&["verify"], Some(job), Some("1e-18"))
            .status
            .code(),
        Some(0)
    );
}

#[test]
fn bad_input_exits_two() {
    let cases = [
        r#"{"shape": {"type": "circle", "center": [0, 0], "radius": -1}}"#,
        r#"{"shape": {"type": "line", "normal": [0, 0], "offset": 1}}"#,
        r#"{"shape": {"type": "circle", "center": [0, 0], "radius": 1, "colour": 3}}"#,
        r#"{"transform": [[1, 0], [2, 0], [1, 0], [2, 0]], "shape": {"type": "line", "vertical_x": 1}}"#,
        "not json",
    ];
    for job in cases {
        let out = circline(&["map"], Some(job), None);
        assert_eq!(out.status.code(), Some(2), "{job}");
        assert!(!out.stderr.is_empty());
    }
    let out = circline(&["map"], Some(S31), Some("abc"));
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn error_messages_name_the_field() {
    let job = r#"{"shape": {"type": "circle", "center": [0, "x"], "radius": 1}}"#;
    let out = circline(&["map"], Some(job), None);
    assert!(String::from_utf8_lossy(&out.stderr).contains("shape.center[1]"));
}

#[test]
fn io_failure_exits_three() {
    let out = circline(&["map", "--input", "/nonexistent/job.json"], None, None);
    assert_eq!(out.status.code(), Some(3));
    let out = circline(
        &["plot", "--out", "/nonexistent/dir/out.svg"],
        Some(S31),
        None,
    );
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn plot_writes_svg() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("s31.svg");
    let out = circline(&["plot", "--out", path.to_str().unwrap()], Some(S31), None);
    assert_eq!(out.status.code(), Some(0));
    let svg = std::fs::read_to_string(&path).unwrap();
    assert!(svg.contains(r#"<circle class="original" cx="3" cy="0" r="1"/>"#));
    assert!(svg.contains(r#"<circle class="image" cx="0.375" cy="0" r="0.125"/>"#));
    assert!(svg.contains(r#"class="unit""#));
    // deterministic
    let again = circline(&["plot"], Some(S31), None);
    assert_eq!(again.stdout, svg.as_bytes());
}

#[test]
fn plot_viewport_flag() {
    let job = r#"{"shape": {"type": "line", "vertical_x": 2}}"#;
    let out = circline(&["plot", "--viewport", "-1,-1,3,3"], Some(job), None);
    let svg = String::from_utf8(out.stdout).unwrap();
    assert!(svg.contains(r#"viewBox="-1 -3 4 4""#));
    assert!(svg.contains(r#"<circle class="image" cx="0.25" cy="0" r="0.25"/>"#));
    let out = circline(&["plot", "--viewport", "5,5,6,6"], Some(job), None);
    assert!(String::from_utf8(out.stdout)
        .unwrap()
        .contains("<!-- warning: original"));
    let out = circline(&["plot", "--viewport", "1,1,1,2"], Some(job), None);
    assert_eq!(out.status.code(), Some(2));
}
