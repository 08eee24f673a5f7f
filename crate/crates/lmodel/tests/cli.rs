use std::path::PathBuf;
use std::process::{Command, Output};

use exactalg::{AnyIdeal, IdealJson};
use serde_json::Value;

fn lmodel(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_lmodel")).args(args).output().expect("binary runs")
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("JSON on stdout")
}

fn scratch(name: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("lmodel-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    dir.join(name)
}

#[test]
fn admissible_listings() {
    let out = lmodel(&["admissible", "--n", "3", "--r", "2", "--s", "1"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["count"], 5);
    let extremes = v["elements"].as_array().unwrap().iter().filter(|e| e["extreme"] == true).count();
    assert_eq!(extremes, 2);
    assert_eq!(json(&lmodel(&["admissible", "--n", "4", "--r", "4", "--s", "0"]))["count"], 1);
    // n = 5, (3, 2): the listing is the breadth-first Bruhat enumeration.
    let g = weyl::AffineGroup::new(5).unwrap();
    let want = weyl::admissible_set(&g, 3, 2).unwrap().len();
    assert_eq!(json(&lmodel(&["admissible", "--n", "5", "--r", "3", "--s", "2"]))["count"], want);
    // Special vertex: one coset per element of Adm₀.
    let v = json(&lmodel(&["admissible", "--n", "5", "--r", "3", "--s", "2", "--index", "0"]));
    assert_eq!(v["count"], 3);
}

#[test]
fn svg_output() {
    let path = scratch("adm.svg");
    let dir = path.parent().unwrap().to_str().unwrap().to_string();
    let out = lmodel(&["--out", &dir, "admissible", "--n", "3", "--r", "2", "--s", "1", "--svg"]);
    assert_eq!(out.status.code(), Some(0));
    let svg = std::fs::read_to_string(path.with_file_name("admissible-3-2-1.svg")).unwrap();
    assert!(svg.starts_with("<svg") || svg.starts_with("<?xml"));
    assert!(!svg.contains("<script"));
    let out = lmodel(&["svg", "--n", "5", "--r", "3", "--s", "2"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(String::from_utf8(out.stdout).unwrap().contains("</svg>"));
    assert_eq!(lmodel(&["admissible", "--n", "6", "--r", "5", "--s", "1", "--svg"]).status.code(), Some(3));
}

#[test]
fn chart_outputs() {
    let v = json(&lmodel(&["chart", "--case", "a", "--n", "3", "--r", "2", "--s", "1"]));
    assert_eq!(v["structured_generators"], 9 + 9 + 3);
    // Example 2 at spin level contains x2 and y3 as generators.
    let v = json(&lmodel(&["--prime", "5", "chart", "--case", "orth2", "--level", "spin"]));
    let j: IdealJson = serde_json::from_value(v["ideal"].clone()).unwrap();
    let AnyIdeal::Fp(i) = j.to_ideal().unwrap() else { panic!("prime field") };
    for name in ["x2", "y3"] {
        let x = i.var(name).unwrap();
        assert!(i.gens().contains(&x), "{name}");
    }
    // s = 0: the wedge chart forces X = −u·I.
    let v = json(&lmodel(&["chart", "--case", "a", "--n", "3", "--r", "3", "--s", "0", "--level", "wedge"]));
    let j: IdealJson = serde_json::from_value(v["ideal"].clone()).unwrap();
    let AnyIdeal::Fp(i) = j.to_ideal().unwrap() else { panic!("prime field") };
    let u = i.var("u").unwrap();
    for a in 1..=3 {
        for b in 1..=3 {
            let x = i.var(&format!("x{a}{b}")).unwrap();
            let target = if a == b { x.add(&u) } else { x };
            assert!(i.contains(&target).unwrap(), "x{a}{b}");
        }
    }
    assert_eq!(lmodel(&["chart", "--case", "a", "--n", "4", "--r", "2", "--s", "2"]).status.code(), Some(3));
}

#[test]
fn flatness_verdicts() {
    let naive = scratch("ex1-naive.json");
    let spin = scratch("ex1-spin.json");
    for (path, level) in [(&naive, "naive"), (&spin, "spin")] {
        let out = lmodel(&["chart", "--case", "orth1", "--level", level]);
        std::fs::write(path, &out.stdout).unwrap();
    }
    assert_eq!(json(&lmodel(&["flatness", naive.to_str().unwrap()]))["flat"], false);
    assert_eq!(json(&lmodel(&["flatness", spin.to_str().unwrap()]))["flat"], true);
    let x = scratch("x.json");
    std::fs::write(&x, r#"{"field":{"Fp":7},"vars":["x","u"],"order":"grevlex","gens":[[["1",[1,0]]]]}"#).unwrap();
    assert_eq!(json(&lmodel(&["flatness", x.to_str().unwrap()]))["flat"], true);
    let bad = scratch("bad.json");
    std::fs::write(&bad, "{not json").unwrap();
    assert_eq!(lmodel(&["flatness", bad.to_str().unwrap()]).status.code(), Some(3));
}

#[test]
fn verify_exit_codes_and_determinism() {
    let out = lmodel(&["verify", "orthogonal"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    let claims = v["claims"].as_array().unwrap();
    assert_eq!(claims.len(), 6);
    assert!(claims.iter().all(|c| c["status"] == "PASS"));
    for key in ["claim", "statement", "status", "witness", "setting"] {
        assert!(claims[0].get(key).is_some(), "{key}");
    }
    assert_eq!(lmodel(&["verify", "orthogonal"]).stdout, out.stdout);
    assert_eq!(lmodel(&["verify", ""]).status.code(), Some(3));
    assert_eq!(lmodel(&["verify", "nonsense"]).status.code(), Some(3));
    assert_eq!(lmodel(&["--prime", "13", "verify", "spin"]).status.code(), Some(3));
    // A starved budget never yields PASS for a claim that needs more work.
    let out = lmodel(&["--budget-pairs", "1", "verify", "orthogonal"]);
    assert_eq!(out.status.code(), Some(2));
    let v = json(&out);
    assert!(v["claims"].as_array().unwrap().iter().any(|c| c["status"] == "INCONCLUSIVE"));
    assert_eq!(json(&lmodel(&["--seed", "3", "verify", "picard"]))["status"], "PASS");
    assert_eq!(json(&lmodel(&["--prime", "Q", "verify", "spin"]))["status"], "PASS");
}
