use std::path::PathBuf;
use std::process::{Command, Output};

use circsurf::poly::{absolute_quadric, xyz, MultiPoly, PolyJson};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_circsurf"))
}

fn curve(name: &str) -> String {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("curves").join(name).display().to_string()
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn implicitize_line_matches_cubic() {
    let o = run(&["implicitize", "--curve", &curve("line.json"), "--q", "1"]);
    assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stderr));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["q"], "1");
    assert_eq!(v["predicted_order"], 3);
    assert_eq!(v["computed_order"], 3);
    let pj: PolyJson = serde_json::from_value(v.clone()).unwrap();
    let f = pj.to_poly().unwrap();
    let (x, y, _) = xyz(3);
    let k = |c: i64| MultiPoly::from_int(3, c);
    // b = 1, c = 2, q = 1
    let expected = &(&(&(&(&x * &absolute_quadric(3)) - &(&(&x * &x) * &k(4))) - &(&(&x * &y) * &k(4))) - &(&(&y * &y) * &k(2))) - &x;
    assert!(f.equals_up_to_scalar(&expected), "{f}");
}

#[test]
fn symbolic_q_output() {
    let o = run(&["implicitize", "--curve", "h1", "--symbolic-q"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["q"], "symbolic");
    assert_eq!(v["vars"], serde_json::json!(["x", "y", "z", "q"]));
}

#[test]
fn sample_obj_round_trips() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("h1.obj");
    let o = run(&[
        "sample", "--curve", &curve("h1.json"), "--q", "-1", "--t0", "-3", "--t1", "3", "--nt", "200", "--ntheta", "64", "--out",
        out.to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stderr));
    let text = std::fs::read_to_string(&out).unwrap();
    assert!(!text.contains("NaN") && !text.contains("inf"));
    let (models, _) = tobj::load_obj(&out, &tobj::LoadOptions { triangulate: false, single_index: true, ..Default::default() }).unwrap();
    // the pole at t = 0 splits the range into two patches
    assert_eq!(models.len(), 2);
    for m in &models {
        assert_eq!(m.mesh.positions.len() / 3, 201 * 65);
        assert_eq!(m.mesh.indices.len() / 3, 2 * 200 * 64);
        assert!(m.mesh.positions.iter().all(|v| v.is_finite()));
    }
}

#[test]
fn closed_mesh_by_default() {
    let o = run(&["sample", "--curve", "ellipse-fig12a", "--q", "-1", "--nt", "8", "--ntheta", "8"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert_eq!(text.lines().filter(|l| l.starts_with("v ")).count(), 2 * 81);
    assert_eq!(text.lines().filter(|l| l.starts_with("f ")).count(), 2 * 128);
}

#[test]
fn deterministic_outputs() {
    let args = ["verify", "--curve", "twisted-cubic", "--q", "1", "--samples", "20", "--seed", "9"];
    let a = run(&args);
    let b = run(&args);
    assert_eq!(a.status.code(), Some(0), "{}", stdout(&a));
    assert_eq!(stdout(&a), stdout(&b));
}

#[test]
fn analyze_reports_pass() {
    let o = run(&["analyze", "--curve", "h2", "--q", "1"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["predicted"]["order"], 5);
    assert_eq!(v["computed"]["z_axis_mult"], 3);
    assert_eq!(v["pass"]["p_point_mult"], true);
}

#[test]
fn input_errors_exit_2() {
    assert_eq!(run(&["implicitize", "--curve", "no-such-curve"]).status.code(), Some(2));
    assert_eq!(run(&["implicitize", "--curve", "line", "--q", "1/0"]).status.code(), Some(2));
    assert_eq!(run(&["sample", "--curve", "line", "--nt", "1"]).status.code(), Some(2));
    assert_eq!(run(&["verify", "--curve", "line", "--tol", "0"]).status.code(), Some(2));
    let o = run(&["implicitize", "--curve", &curve("in_plane.json")]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("plane through the z-axis"));
}

#[test]
fn failing_check_exits_1() {
    // a vanishing tolerance cannot be met by floating-point residuals
    let o = run(&["verify", "--curve", "line", "--q", "1", "--tol", "1e-300"]);
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn suite_subset() {
    let o = run(&["suite", "--only", "line,ellipse-fig12a,cyclic-harmonic", "--jobs", "2"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    let text = stdout(&o);
    assert_eq!(text.lines().filter(|l| l.contains("PASS")).count(), 3);
}
