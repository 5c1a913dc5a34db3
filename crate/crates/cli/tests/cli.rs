use std::path::PathBuf;
use std::process::{Command, Output};

fn scene(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("../../scenes")
        .join(name)
}

fn cyclide(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_cyclide"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn point(line: &str) -> [f64; 3] {
    let v: Vec<f64> = line
        .split_whitespace()
        .map(|s| s.parse().unwrap())
        .collect();
    [v[0], v[1], v[2]]
}

#[test]
fn validate_exit_codes() {
    let ok = cyclide(&["validate", scene("unit_cube.json").to_str().unwrap()]);
    assert_eq!(ok.status.code(), Some(0), "{}", stdout(&ok));
    let bad = cyclide(&["validate", scene("perturbed_cube.json").to_str().unwrap()]);
    assert_eq!(bad.status.code(), Some(1));
    assert!(
        stdout(&bad).contains("FAIL construction: p6"),
        "{}",
        stdout(&bad)
    );

    let dir = tempfile::tempdir().unwrap();
    let broken = dir.path().join("broken.json");
    std::fs::write(&broken, "{\"objects\": [").unwrap();
    assert_eq!(
        cyclide(&["validate", broken.to_str().unwrap()])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        cyclide(&["validate", "/no/such/scene.json"]).status.code(),
        Some(2)
    );
    assert_eq!(cyclide(&["frobnicate"]).status.code(), Some(2));
}

#[test]
fn validate_unit_cube_residuals_and_json() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("report.json");
    let o = cyclide(&[
        "validate",
        scene("unit_cube.json").to_str().unwrap(),
        "--json",
        path.to_str().unwrap(),
        "--res",
        "9",
    ]);
    assert_eq!(o.status.code(), Some(0));
    let report: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(report["passed"], true);
    for check in report["objects"][0]["checks"].as_array().unwrap() {
        if check["comparison"] == "at_most" {
            assert!(check["residual"].as_f64().unwrap() <= 1e-10, "{check}");
        }
    }
}

#[test]
fn tolerance_flag_overrides() {
    // at a huge tolerance the perturbed cube is accepted by construction
    let o = cyclide(&[
        "--tol",
        "0.5",
        "validate",
        scene("perturbed_cube.json").to_str().unwrap(),
        "--res",
        "5",
    ]);
    assert!(!stdout(&o).contains("construction"), "{}", stdout(&o));
    assert_eq!(
        cyclide(&[
            "--tol",
            "-1",
            "validate",
            scene("unit_cube.json").to_str().unwrap()
        ])
        .status
        .code(),
        Some(2)
    );
}

#[test]
fn miquel_points() {
    let o = cyclide(&[
        "miquel", "0,0,0", "1,0,0", "0,1,0", "1,1,0", "0,0,1", "1,0,1", "0,1,1",
    ]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).lines().next(), Some("1 1 1"));
    let o = cyclide(&[
        "miquel",
        "inf",
        "1,0,0",
        "0,1,0",
        "0.5,0.5,0",
        "0,0,1",
        "0.5,0,0.5",
        "0,0.5,0.5",
    ]);
    let out = stdout(&o);
    let mut lines = out.lines();
    for c in point(lines.next().unwrap()) {
        assert!((c - 1.0 / 3.0).abs() < 1e-12);
    }
    let agreement: f64 = lines
        .next()
        .unwrap()
        .strip_prefix("agreement ")
        .unwrap()
        .parse()
        .unwrap();
    assert!(agreement < 1e-12);
    let o = cyclide(&["miquel", scene("midpoint_cube.json").to_str().unwrap()]);
    assert!(
        stdout(&o).starts_with("0.333333333333333 "),
        "{}",
        stdout(&o)
    );
    let o = cyclide(&[
        "miquel", "inf", "1,0,0", "2,0,0", "3,0,0", "4,0,0", "5,0,0", "6,0,0",
    ]);
    assert_eq!(o.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&o.stderr).contains("A - B"));
    let o = cyclide(&[
        "miquel", "inf", "1,0,0", "0,1,0", "2,1,0", "0,0,1", "1,0,1", "0,1,1",
    ]);
    assert_eq!(o.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&o.stderr).contains("p3 on line(p1, p2)"));
    let o = cyclide(&["miquel", scene("perturbed_cube.json").to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(1));
    let o = cyclide(&[
        "--tol",
        "0.1",
        "miquel",
        scene("perturbed_cube.json").to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(
        cyclide(&["miquel", "1,2", "1,0,0", "0,1,0", "1,0,0", "0,0,1", "1,0,0", "1,0,0"])
            .status
            .code(),
        Some(2)
    );
}

#[test]
fn eval_samples() {
    let cube = scene("unit_cube.json");
    let o = cyclide(&[
        "eval",
        cube.to_str().unwrap(),
        "unit",
        "--at",
        "0.5",
        "0.5",
        "0.5",
    ]);
    assert_eq!(stdout(&o).trim(), "0.5 0.5 0.5");
    let curves = scene("curves.json");
    let o = cyclide(&["eval", curves.to_str().unwrap(), "arc", "--at", "0"]);
    assert_eq!(stdout(&o).trim(), "1 0 0");
    let o = cyclide(&["eval", curves.to_str().unwrap(), "ray", "--at", "0"]);
    assert_eq!(stdout(&o).trim(), "inf");
    let o = cyclide(&["eval", curves.to_str().unwrap(), "square", "--grid", "3"]);
    assert_eq!(stdout(&o).lines().count(), 9);
    assert_eq!(
        cyclide(&["eval", curves.to_str().unwrap(), "nope", "--at", "0"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        cyclide(&["eval", curves.to_str().unwrap(), "arc", "--at", "1.5"])
            .status
            .code(),
        Some(2)
    );
    let net = scene("net_2x2x2.json");
    let o = cyclide(&[
        "eval",
        net.to_str().unwrap(),
        "grid",
        "--cell",
        "1,1,1",
        "--at",
        "0.5",
        "0.5",
        "0.5",
    ]);
    assert_eq!(stdout(&o).trim(), "1.5 1.5 1.5");
}

#[test]
fn mesh_export() {
    let dir = tempfile::tempdir().unwrap();
    let cube = scene("unit_cube.json");
    let obj = dir.path().join("cube.obj");
    let ply = dir.path().join("cube.ply");
    let args = |out: &std::path::Path, fmt: &str| {
        cyclide(&[
            "mesh",
            cube.to_str().unwrap(),
            "unit",
            "--res",
            "2",
            "--format",
            fmt,
            "--out",
            out.to_str().unwrap(),
        ])
    };
    assert_eq!(args(&obj, "obj").status.code(), Some(0));
    assert_eq!(args(&ply, "ply").status.code(), Some(0));
    let obj_text = std::fs::read_to_string(&obj).unwrap();
    assert_eq!(obj_text.lines().filter(|l| l.starts_with("v ")).count(), 54);
    assert_eq!(obj_text.lines().filter(|l| l.starts_with("f ")).count(), 48);
    let ply_text = std::fs::read_to_string(&ply).unwrap();
    let obj_v: Vec<&str> = obj_text
        .lines()
        .filter_map(|l| l.strip_prefix("v "))
        .collect();
    let ply_v: Vec<&str> = ply_text
        .lines()
        .skip_while(|l| *l != "end_header")
        .skip(1)
        .take(54)
        .collect();
    assert_eq!(obj_v, ply_v);
    assert_eq!(args(&obj, "stl").status.code(), Some(2));
    let curves = scene("curves.json");
    let o = cyclide(&["mesh", curves.to_str().unwrap(), "half_plane", "--res", "2"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&o.stderr).contains("inversion"));
}

#[test]
fn net_command_is_deterministic() {
    let dir = tempfile::tempdir().unwrap();
    let net = scene("net_2x2x2.json");
    let run = |name: &str| {
        let out = dir.path().join(name);
        let o = cyclide(&[
            "net",
            net.to_str().unwrap(),
            "--res",
            "4",
            "--out",
            out.to_str().unwrap(),
        ]);
        assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
        (stdout(&o), std::fs::read(out).unwrap())
    };
    let (text, a) = run("a.obj");
    let (_, b) = run("b.obj");
    assert_eq!(a, b);
    assert!(
        text.contains("frame 1 0 0: -1 0 0 | 0 1 0 | 0 0 -1"),
        "{text}"
    );
    assert!(text.contains("PASS shared_faces"));
}
