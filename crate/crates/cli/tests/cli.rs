use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use serde_json::Value;

fn circone(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_circone")).args(args).output().unwrap()
}

fn code(out: &Output) -> i32 {
    out.status.code().unwrap()
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).unwrap()
}

fn write(dir: &Path, name: &str, text: &str) -> PathBuf {
    let p = dir.join(name);
    std::fs::write(&p, text).unwrap();
    p
}

fn s(p: &Path) -> &str {
    p.to_str().unwrap()
}

const MI_STAR_3: &str = "3 4\n1100\n0110\n1010\n";

#[test]
fn circ1_certify_and_verify() {
    let dir = tempfile::tempdir().unwrap();
    let m = write(dir.path(), "mi_star_3.dmat", MI_STAR_3);
    let out = circone(&["circ1", "certify", s(&m)]);
    assert_eq!(code(&out), 1);
    let cert = json(&out);
    assert_eq!(cert["property"], "circ1-rows");
    assert_eq!(cert["verdict"], "no");
    assert_eq!(cert["member"]["kind"], "MI*");
    assert_eq!(cert["member"]["k"], 3);
    assert_eq!(cert["member"]["mask"], "000");

    let c = write(dir.path(), "cert.json", &cert.to_string());
    let out = circone(&["verify", s(&c), s(&m)]);
    assert_eq!(code(&out), 0);
    assert_eq!(json(&out)["valid"], true);

    let other = write(dir.path(), "other.dmat", "3 4\n1100\n0110\n0011\n");
    assert_eq!(code(&circone(&["verify", s(&c), s(&other)])), 1);
}

#[test]
fn yes_instances_exit_zero() {
    let dir = tempfile::tempdir().unwrap();
    let m = write(dir.path(), "band.smat", "2 3 3\n1 1\n1 2\n2 3\n");
    for verb in [["c1p", "test"], ["circ1", "certify"], ["circ1rc", "certify"]] {
        let out = circone(&[verb[0], verb[1], s(&m)]);
        assert_eq!(code(&out), 0, "{verb:?}");
        assert_eq!(json(&out)["verdict"], "yes");
    }
    let g = write(dir.path(), "c5.txt", "p graph 5 5\ne 1 2\ne 2 3\ne 3 4\ne 4 5\ne 5 1\n");
    let out = circone(&["graph", "certify", s(&g)]);
    assert_eq!(code(&out), 0);
    assert_eq!(json(&out)["circular_order"].as_array().unwrap().len(), 5);
}

#[test]
fn enumerate_forbrow() {
    let out = circone(&["enumerate", "forbrow", "4"]);
    assert_eq!(code(&out), 0);
    let doc = json(&out);
    assert_eq!(doc["count"], 10);
    assert_eq!(doc["members"].as_array().unwrap().len(), 10);
    assert_eq!(code(&circone(&["enumerate", "forbrow", "2"])), 2);
}

#[test]
fn graph_round_trip_through_catalog() {
    let dir = tempfile::tempdir().unwrap();
    let out = circone(&["catalog", "emit", "coC2k", "4"]);
    assert_eq!(code(&out), 0);
    let g = write(dir.path(), "coc8.txt", std::str::from_utf8(&out.stdout).unwrap());
    for action in ["recognize", "certify"] {
        let out = circone(&["graph", action, s(&g)]);
        assert_eq!(code(&out), 1, "{action}");
        let cert = json(&out);
        assert_eq!(cert["property"], "concave-round");
        let c = write(dir.path(), "cert.json", &cert.to_string());
        assert_eq!(code(&circone(&["verify", s(&c), s(&g)])), 0, "{action}");
    }
    let out = circone(&["graph", "certify", s(&g)]);
    assert_eq!(json(&out)["name"], "coC2k");
    assert_eq!(json(&out)["params"]["k"], 4);
}

#[test]
fn several_files_keep_their_order() {
    let dir = tempfile::tempdir().unwrap();
    let files: Vec<PathBuf> = (0..6)
        .map(|i| {
            let text = if i % 2 == 0 { MI_STAR_3 } else { "1 2\n11\n" };
            write(dir.path(), &format!("m{i}.dmat"), text)
        })
        .collect();
    let mut args = vec!["--jobs", "3", "circ1", "certify"];
    args.extend(files.iter().map(|p| s(p)));
    let out = circone(&args);
    assert_eq!(code(&out), 1);
    let lines: Vec<Value> = std::str::from_utf8(&out.stdout)
        .unwrap()
        .lines()
        .map(|l| serde_json::from_str(l).unwrap())
        .collect();
    let verdicts: Vec<&str> = lines.iter().map(|v| v["verdict"].as_str().unwrap()).collect();
    assert_eq!(verdicts, ["no", "yes", "no", "yes", "no", "yes"]);
}

#[test]
fn usage_and_parse_errors_exit_two() {
    let dir = tempfile::tempdir().unwrap();
    let bad = write(dir.path(), "bad.dmat", "2 2\n01\n1x\n");
    let out = circone(&["circ1", "certify", s(&bad)]);
    assert_eq!(code(&out), 2);
    assert!(!out.stderr.is_empty());
    let loops = write(dir.path(), "loop.txt", "p graph 2 1\ne 1 1\n");
    assert_eq!(code(&circone(&["graph", "certify", s(&loops)])), 2);
    assert_eq!(code(&circone(&["frobnicate"])), 2);
    assert_eq!(code(&circone(&["catalog", "emit", "nonesuch"])), 2);
    let garbage = write(dir.path(), "cert.json", "{\"property\":\"c1p\"}");
    let m = write(dir.path(), "m.dmat", MI_STAR_3);
    assert_eq!(code(&circone(&["verify", s(&garbage), s(&m)])), 2);
}

#[test]
fn pretty_output_is_the_same_document() {
    let dir = tempfile::tempdir().unwrap();
    let m = write(dir.path(), "m.dmat", MI_STAR_3);
    let plain = json(&circone(&["circ1rc", "certify", s(&m)]));
    let out = circone(&["--pretty", "circ1rc", "certify", s(&m)]);
    assert_eq!(json(&out), plain);
    assert!(std::str::from_utf8(&out.stderr).unwrap().contains("fails"));
}

#[test]
fn catalog_override_from_the_environment() {
    let dir = tempfile::tempdir().unwrap();
    let missing = dir.path().join("missing.dat");
    let out = Command::new(env!("CARGO_BIN_EXE_circone"))
        .args(["catalog", "emit", "net"])
        .env("CIRCONE_CATALOG", &missing)
        .output()
        .unwrap();
    assert_eq!(code(&out), 2);
}
