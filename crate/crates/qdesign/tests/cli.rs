use std::fs;
use std::path::Path;
use std::process::{Command, Output};

use serde_json::Value;

fn qdesign(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_qdesign"))
        .args(args)
        .env_remove("QDESIGN_SEED")
        .output()
        .expect("binary runs")
}

fn json(args: &[&str]) -> (i32, Value) {
    let mut full = vec!["--json"];
    full.extend_from_slice(args);
    let out = qdesign(&full);
    let text = String::from_utf8(out.stdout).unwrap();
    let value = serde_json::from_str(text.trim()).unwrap_or(Value::Null);
    (out.status.code().unwrap(), value)
}

fn stderr(out: &Output) -> String {
    String::from_utf8_lossy(&out.stderr).into_owned()
}

#[test]
fn verify_exit_codes() {
    assert_eq!(
        qdesign(&["verify", "--design", "octahedron", "--t", "3"]).status.code(),
        Some(0)
    );

    let (code, v) = json(&["verify", "--design", "snub-cube-regular", "--t", "4"]);
    assert_eq!(code, 2);
    assert!(v["result"].as_str().unwrap().starts_with("FAIL"));

    assert_eq!(
        qdesign(&["verify", "--design", "icosahedron", "--t", "6"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        qdesign(&["verify", "--design", "snub-cube-7design", "--t", "7"])
            .status
            .code(),
        Some(0)
    );

    let out = qdesign(&["verify", "--design", "dodecahedron", "--t", "2"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stderr(&out).contains("unknown design"));
}

#[test]
fn usage_errors() {
    assert_eq!(qdesign(&["verify"]).status.code(), Some(1));
    assert_eq!(qdesign(&["frobnicate"]).status.code(), Some(1));
    assert_eq!(
        qdesign(&["verify", "--design", "octahedron", "--t", "x"]).status.code(),
        Some(1)
    );
    assert_eq!(qdesign(&["--version"]).status.code(), Some(0));
}

#[test]
fn bound_values() {
    let (code, v) = json(&["bound", "--design", "octahedron", "--renyi", "2"]);
    assert_eq!(code, 0);
    assert!((v["bound"].as_f64().unwrap() - 3.0 * 1.5f64.ln()).abs() < 1e-12);

    let (_, v) = json(&["bound", "--design", "icosahedron", "--renyi", "3"]);
    assert_eq!(v["t_prime"], 3);
    assert!((v["bound"].as_f64().unwrap() - 3.0 * 2f64.ln()).abs() < 1e-12);

    let (_, v) = json(&["bound", "--design", "octahedron", "--tsallis", "2"]);
    assert!((v["bound"].as_f64().unwrap() - 1.0).abs() < 1e-12);

    let (code, v) = json(&[
        "bound",
        "--design",
        "snub-cube-7design",
        "--single-povm",
        "--tsallis",
        "4",
        "--tprime",
        "4",
    ]);
    assert_eq!(code, 0);
    // M d^{t'}/n^{t'-1} D_4^2 = 16 / (24^3 · 5), at q = t'
    let base = 16.0 / (24f64.powi(3) * 5.0);
    assert!((v["bound"].as_f64().unwrap() - (base - 1.0) / -3.0).abs() < 1e-12);
}

#[test]
fn bound_errors() {
    let out = qdesign(&["bound", "--design", "octahedron", "--renyi", "1.5"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stderr(&out).contains("no bound available"));

    let out = qdesign(&["bound", "--design", "snub-cube-7design", "--renyi", "2"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stderr(&out).contains("--single-povm"));

    let out = qdesign(&["bound", "--design", "octahedron", "--renyi", "5", "--tprime", "4"]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn state_dependent_bound() {
    let dir = tempfile::tempdir().unwrap();
    let state = dir.path().join("rho.json");
    fs::write(
        &state,
        r#"{"dim": 2, "entries": [[[0.75, 0.0], [0.0, 0.0]], [[0.0, 0.0], [0.25, 0.0]]]}"#,
    )
    .unwrap();
    let path = state.to_str().unwrap();
    for family in ["--renyi", "--tsallis"] {
        let (code, v) = json(&["bound", "--design", "icosahedron", family, "3", "--state", path]);
        assert_eq!(code, 0, "{v}");
        assert!(v["state_bound"].as_f64().unwrap() >= v["bound"].as_f64().unwrap());
        assert!(v["entropy_sum"].as_f64().unwrap() >= v["state_bound"].as_f64().unwrap() - 1e-10);
        assert!(v["f_t"].as_f64().unwrap() < 1.0);
    }

    let pure = dir.path().join("psi.json");
    fs::write(&pure, r#"{"dim": 2, "amplitudes": [[0.6, 0.0], [0.0, 0.8]]}"#).unwrap();
    let (code, v) = json(&[
        "bound",
        "--design",
        "octahedron",
        "--renyi",
        "2",
        "--state",
        pure.to_str().unwrap(),
    ]);
    assert_eq!(code, 0);
    assert!((v["f_t"].as_f64().unwrap() - 1.0).abs() < 1e-12);

    fs::write(
        &pure,
        r#"{"dim": 3, "amplitudes": [[1.0, 0.0], [0.0, 0.0], [0.0, 0.0]]}"#,
    )
    .unwrap();
    let out = qdesign(&[
        "bound",
        "--design",
        "octahedron",
        "--renyi",
        "2",
        "--state",
        pure.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn steering_examples() {
    for (set, alpha) in [("pauli", "2"), ("icosahedron", "3")] {
        let (code, v) = json(&["steering", "--set", set, "--alpha", alpha]);
        assert_eq!(code, 0);
        assert!((v["eta_star"].as_f64().unwrap() - 1.0 / 3f64.sqrt()).abs() < 1e-3);
    }
    let out = qdesign(&["steering", "--set", "pauli", "--alpha", "1.5"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stderr(&out).contains("no bound available"));
}

#[test]
fn haar_seed_sources() {
    let run = |env: Option<&str>, extra: &[&str]| -> Value {
        let mut cmd = Command::new(env!("CARGO_BIN_EXE_qdesign"));
        cmd.args(["--json", "haar", "--d", "2", "--t", "2", "--samples", "5000"])
            .args(extra);
        match env {
            Some(s) => cmd.env("QDESIGN_SEED", s),
            None => cmd.env_remove("QDESIGN_SEED"),
        };
        let out = cmd.output().unwrap();
        assert_eq!(out.status.code(), Some(0));
        serde_json::from_slice(&out.stdout).unwrap()
    };
    assert_eq!(run(None, &[])["seed"], 0);
    assert_eq!(run(Some("5"), &[])["seed"], 5);
    assert_eq!(run(Some("5"), &["--seed", "7"])["seed"], 7);
    assert_eq!(run(Some("7"), &[]), run(None, &["--seed", "7"]));
    assert_ne!(run(None, &["--seed", "1"])["mean"], run(None, &["--seed", "2"])["mean"]);
}

#[test]
fn haar_flags() {
    let (code, v) = json(&["haar", "--d", "3", "--t", "4", "--mixing", "0.3", "--seed", "11"]);
    assert_eq!(code, 0);
    assert!(v["z"].as_f64().unwrap() <= 4.0);
    assert_eq!(
        qdesign(&["haar", "--d", "2", "--t", "2", "--samples", "10"])
            .status
            .code(),
        Some(1)
    );
}

#[test]
fn figures_and_manifests() {
    let dir = tempfile::tempdir().unwrap();
    let first = dir.path().join("a");
    let second = dir.path().join("b");
    for d in [&first, &second] {
        let out = qdesign(&["figure", "all", "--out", d.to_str().unwrap()]);
        assert_eq!(out.status.code(), Some(0), "{}", stderr(&out));
    }
    for id in ["fig2a", "fig2b", "fig2c", "fig3a", "fig3b"] {
        let csv = format!("{id}.csv");
        let manifest = format!("{id}.manifest.json");
        assert_eq!(
            fs::read(first.join(&csv)).unwrap(),
            fs::read(second.join(&csv)).unwrap()
        );
        assert_eq!(
            fs::read(first.join(&manifest)).unwrap(),
            fs::read(second.join(&manifest)).unwrap()
        );
        let m: Value = serde_json::from_slice(&fs::read(first.join(&manifest)).unwrap()).unwrap();
        assert_eq!(m["command"], "figure");
        assert_eq!(m["parameters"]["id"], id);
        assert_eq!(m["outputs"][0], csv.as_str());
        assert_eq!(m["version"], env!("CARGO_PKG_VERSION"));
    }

    let single = dir.path().join("custom.csv");
    assert_eq!(
        qdesign(&["figure", "fig2b", "--out", single.to_str().unwrap()])
            .status
            .code(),
        Some(0)
    );
    assert!(dir.path().join("custom.manifest.json").is_file());
    assert_eq!(fs::read(&single).unwrap(), fs::read(first.join("fig2b.csv")).unwrap());

    assert_eq!(qdesign(&["figure", "fig4"]).status.code(), Some(1));
}

#[test]
fn exported_designs_verify_from_disk() {
    let dir = tempfile::tempdir().unwrap();
    let file = dir.path().join("seven.json");
    let path = file.to_str().unwrap();
    assert_eq!(
        qdesign(&["export", "--design", "snub-cube-7design", "--out", path])
            .status
            .code(),
        Some(0)
    );
    assert!(Path::new(&dir.path().join("seven.manifest.json")).is_file());
    assert_eq!(
        qdesign(&["verify", "--design", path, "--t", "7"]).status.code(),
        Some(0)
    );
    assert_eq!(
        qdesign(&["verify", "--design", path, "--t", "8"]).status.code(),
        Some(2)
    );

    let text = fs::read_to_string(&file).unwrap();
    fs::write(&file, text.replace("\"declared_t\": 7", "\"declared_t\": 8")).unwrap();
    let out = qdesign(&["verify", "--design", path, "--t", "7"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("verification failed"));

    fs::write(
        &file,
        r#"{"name": "bad", "dim": 2, "declared_t": 1, "vectors": [[[0.9, 0.0], [0.0, 0.0]]]}"#,
    )
    .unwrap();
    let out = qdesign(&["verify", "--design", path, "--t", "1"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stderr(&out).contains("norm violation"));
}
