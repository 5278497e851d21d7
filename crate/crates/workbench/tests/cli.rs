use std::path::Path;
use std::process::{Command, Output};

use poncelet_workbench::scene::SceneDocument;

fn poncelet(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_poncelet")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn path(p: &Path) -> &str {
    p.to_str().expect("utf-8 temp path")
}

#[test]
fn verify_suites_pass_with_documented_seeds() {
    for (suite, trials, seed) in [("pascal", "500", "42"), ("two", "200", "7"), ("aligned", "100", "1")] {
        let o = poncelet(&["verify", "--suite", suite, "--trials", trials, "--seed", seed]);
        assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
        assert!(stdout(&o).contains(&format!("{trials} trials, 0 failures")));
    }
}

#[test]
fn verify_rejects_bad_arguments() {
    assert_eq!(poncelet(&["verify", "--suite", "hexagon"]).status.code(), Some(2));
    assert_eq!(poncelet(&["verify", "--suite", "pascal", "--trials", "0"]).status.code(), Some(2));
}

#[test]
fn broken_oracle_exits_with_property_failure() {
    let o = poncelet(&["verify", "--suite", "two", "--trials", "3", "--seed", "4", "--broken-oracle"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("FAIL trial 0 (seed 4)"));
}

#[test]
fn construct_then_porism_holds() {
    let dir = tempfile::tempdir().unwrap();
    for n in ["2", "5"] {
        let file = dir.path().join(format!("c{n}.scene"));
        let o = poncelet(&["construct", "--n", n, "--seed", "3", "--out", path(&file)]);
        assert_eq!(o.status.code(), Some(0));
        let text = std::fs::read_to_string(&file).unwrap();
        let scene = SceneDocument::parse(&text).unwrap();
        assert_eq!(scene.lines.len(), n.parse::<usize>().unwrap());
        assert_eq!(SceneDocument::parse(&scene.serialize()).unwrap(), scene);

        let o = poncelet(&["porism", path(&file), "--starts", "50", "--seed", "1"]);
        assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
        assert!(stdout(&o).contains("holds"));
        assert!(stdout(&o).contains("50/50 closed"));
    }
}

#[test]
fn construct_rejects_small_n() {
    assert_eq!(poncelet(&["construct", "--n", "1"]).status.code(), Some(2));
}

#[test]
fn random_scene_does_not_close() {
    let dir = tempfile::tempdir().unwrap();
    let file = dir.path().join("r.scene");
    std::fs::write(
        &file,
        "poncelet-scene 1\nconic canonical\nline A 1 2 7\nline B 3 -1 2\nline C 2 5 -3\nline D 4 1 9\n",
    )
    .unwrap();
    for backend in ["exact", "float"] {
        let o = poncelet(&["porism", path(&file), "--starts", "50", "--backend", backend]);
        assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
        assert!(stdout(&o).contains("fails"));
        assert!(stdout(&o).contains(" 0/"));
    }
}

#[test]
fn porism_input_errors() {
    let dir = tempfile::tempdir().unwrap();
    let tangent = dir.path().join("t.scene");
    // (1:-2:1) is the tangent at t = 1
    std::fs::write(&tangent, "poncelet-scene 1\nconic canonical\nline A 1 -2 1\nline B 3 -1 2\n").unwrap();
    let o = poncelet(&["porism", path(&tangent)]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("invalid configuration"));

    let broken = dir.path().join("b.scene");
    std::fs::write(&broken, "poncelet-scene 1\nconic canonical\nline A 1 x 1\n").unwrap();
    let o = poncelet(&["porism", path(&broken)]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("line 3"));

    assert_eq!(poncelet(&["porism", path(&dir.path().join("missing"))]).status.code(), Some(2));
}

#[test]
fn twolines_roots_and_check() {
    let o = poncelet(&["twolines", "roots", "--n", "2"]);
    assert!(stdout(&o).contains("x = 0 (exact)"));
    let o = stdout(&poncelet(&["twolines", "roots", "--n", "3"]));
    assert!(o.contains("x = -1 (exact)") && o.contains("x = 1 (exact)"));
    let o = stdout(&poncelet(&["twolines", "roots", "--n", "4"]));
    assert!(o.contains("x = 0 (exact), closes earlier") && o.contains("1.414213562373"));

    let o = stdout(&poncelet(&["twolines", "check", "--x", "1", "--n", "3"]));
    assert!(o.contains("closes first at n = 3: true"));
    let o = stdout(&poncelet(&["twolines", "check", "--x", "-sqrt(2)", "--n", "4"]));
    assert!(o.contains("closes first at n = 4: true"));
    let o = stdout(&poncelet(&["twolines", "check", "--x", "0", "--n", "4"]));
    assert!(o.contains("closes first at n = 4: false") && o.contains("minimal closing power: 2"));
    assert_eq!(poncelet(&["twolines", "check", "--x", "two", "--n", "4"]).status.code(), Some(2));
}

#[test]
fn plot_is_deterministic_and_counts_elements() {
    let dir = tempfile::tempdir().unwrap();
    let scene = dir.path().join("p.scene");
    assert!(poncelet(&["construct", "--n", "2", "--seed", "8", "--out", path(&scene)]).status.success());
    let mut outputs = Vec::new();
    for (i, chart) in ["x0", "x0", "x2"].iter().enumerate() {
        let out = dir.path().join(format!("{i}.svg"));
        let o = poncelet(&["plot", path(&scene), "--out", path(&out), "--chart", chart]);
        assert_eq!(o.status.code(), Some(0));
        outputs.push(std::fs::read_to_string(&out).unwrap());
    }
    assert_eq!(outputs[0], outputs[1]);
    let svg = &outputs[0];
    assert!(svg.starts_with("<svg") && svg.contains("version=\"1.1\""));
    assert_eq!(svg.matches("class=\"conic\"").count(), 1);
    assert_eq!(svg.matches("class=\"config-line\"").count(), 2);
    assert_eq!(svg.matches("class=\"chain-edge\"").count(), 4);
    assert_eq!(poncelet(&["plot", "/nonexistent.scene", "--out", "x.svg"]).status.code(), Some(2));
}
