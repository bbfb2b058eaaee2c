use std::path::Path;
use std::process::{Command, Output};

fn run(dir: &Path, args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_lie-poisson")).current_dir(dir).args(args).output().unwrap()
}

fn code(o: &Output) -> i32 {
    o.status.code().unwrap()
}

fn json(path: &Path) -> serde_json::Value {
    serde_json::from_str(&std::fs::read_to_string(path).unwrap()).unwrap()
}

#[test]
fn pair_report_exit_codes() {
    let dir = tempfile::tempdir().unwrap();
    let cases = [
        (&["pair-report", "--algebra", "sl4", "--split", "lower-right-sl2", "--out", "a"][..], 2),
        (&["pair-report", "--algebra", "sl3", "--split", "cartan", "--out", "b"][..], 0),
        (&["pair-report", "--algebra", "gl3", "--split", "lower-right-sl2", "--out", "c"][..], 0),
    ];
    for (args, expected) in cases {
        let o = run(dir.path(), args);
        assert_eq!(code(&o), expected, "{args:?}: {}", String::from_utf8_lossy(&o.stderr));
    }
    let a = json(&dir.path().join("a.json"));
    assert_eq!(a["verdict"], "NOT_COMMUTATIVE");
    assert_eq!(a["exit_code"], 2);
    assert!(a["pairs"]["witness"]["bracket_term_count"].as_u64().unwrap() > 0);
    assert!(String::from_utf8_lossy(&run(dir.path(), cases[0].0).stdout).contains("witness pair"));
    assert!(dir.path().join("b.txt").exists());
    assert_eq!(json(&dir.path().join("b.json"))["pairs"]["undecided"].as_array().unwrap().len(), 0);
}

#[test]
fn reports_are_byte_stable() {
    let dir = tempfile::tempdir().unwrap();
    for out in ["one", "two"] {
        run(dir.path(), &["pair-report", "--algebra", "gl4", "--split", "lower-right-sl2", "--seed", "7", "--out", out]);
    }
    let a = std::fs::read(dir.path().join("one.json")).unwrap();
    let b = std::fs::read(dir.path().join("two.json")).unwrap();
    assert_eq!(a, b);
}

#[test]
fn counterexample_replay() {
    let dir = tempfile::tempdir().unwrap();
    let o = run(dir.path(), &["counterexample", "--out", "ce"]);
    assert_eq!(code(&o), 2);
    let doc = json(&dir.path().join("ce.json"));
    assert!(doc["checks"].as_array().unwrap().iter().all(|c| c["passed"] == true));
    assert_eq!(doc["criterion_at_gamma"], "-24*s^2*s'^3");
    assert_eq!(doc["phi_s_gamma_squared"][0][3], "s^2 - s");
}

#[test]
fn cartan_suite_counts() {
    let dir = tempfile::tempdir().unwrap();
    for (n, b) in [(2, 2), (3, 5)] {
        let name = format!("sl{n}");
        let o = run(dir.path(), &["cartan-suite", "--algebra", &name, "--out", &name]);
        assert_eq!(code(&o), 0, "{}", String::from_utf8_lossy(&o.stdout));
        let doc = json(&dir.path().join(format!("{name}.json")));
        assert_eq!(doc["b"], b);
        assert_eq!(doc["z_rank"]["rank"], b);
        assert_eq!(doc["ztilde_rank"]["rank"], b);
        assert_eq!(doc["completeness"].as_array().unwrap().len(), 3);
        assert_eq!(doc["checks_pass"], true);
    }
    let o = run(dir.path(), &["cartan-suite", "--algebra", "sl5", "--out", "big"]);
    assert_eq!(code(&o), 1);
}

#[test]
fn config_file_with_flag_override() {
    let dir = tempfile::tempdir().unwrap();
    std::fs::write(dir.path().join("run.toml"), "algebra = \"sl4\"\nsplit = \"lower-right-sl2\"\nseed = 3\nout = \"from-config\"\n").unwrap();
    let o = run(dir.path(), &["pair-report", "--config", "run.toml"]);
    assert_eq!(code(&o), 2);
    assert!(dir.path().join("from-config.json").exists());
    let o = run(dir.path(), &["pair-report", "--config", "run.toml", "--algebra", "gl3", "--out", "flag"]);
    assert_eq!(code(&o), 0);
    assert_eq!(json(&dir.path().join("flag.json"))["seed"], 3);
}

#[test]
fn errors_exit_with_one() {
    let dir = tempfile::tempdir().unwrap();
    std::fs::write(dir.path().join("bad.toml"), "algebra = [\n").unwrap();
    let o = run(dir.path(), &["pair-report", "--config", "bad.toml"]);
    assert_eq!(code(&o), 1);
    assert!(String::from_utf8_lossy(&o.stderr).contains("error"));
    assert_eq!(code(&run(dir.path(), &["pair-report", "--algebra", "missing.txt"])), 1);
    std::fs::write(dir.path().join("typo.toml"), "algebr = \"sl3\"\n").unwrap();
    assert_eq!(code(&run(dir.path(), &["pair-report", "--config", "typo.toml"])), 1);
    std::fs::write(dir.path().join("short.txt"), "1 0\n").unwrap();
    assert_eq!(code(&run(dir.path(), &["pair-report", "--algebra", "sl2", "--split", "short.txt"])), 1);
    assert_eq!(code(&run(dir.path(), &["pair-report", "--bound", "0"])), 1);
}

#[test]
fn custom_algebra_from_files() {
    let dir = tempfile::tempdir().unwrap();
    // sl2 in the basis h, e, f, with its Cartan line as f and the Casimir supplied by hand
    std::fs::write(dir.path().join("alg.txt"), "dim 3\nlabels h e f\n1 2 2 2\n1 3 3 -2\n2 3 1 1\n").unwrap();
    std::fs::write(dir.path().join("f.txt"), "1 0 0\n").unwrap();
    std::fs::write(dir.path().join("inv.txt"), "# Casimir\nx[0]^2 + 4*x[1]*x[2]\n").unwrap();
    let o = run(
        dir.path(),
        &["pair-report", "--algebra", "alg.txt", "--split", "f.txt", "--invariants", "inv.txt", "--jobs", "2", "--out", "custom"],
    );
    assert_eq!(code(&o), 0, "{}", String::from_utf8_lossy(&o.stderr));
    assert_eq!(json(&dir.path().join("custom.json"))["generators"].as_array().unwrap().len(), 2);
}
