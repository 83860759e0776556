use std::io::Write;
use std::path::PathBuf;
use std::process::{Command, Output, Stdio};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_hypersub"))
}

fn run(args: &[&str], stdin: Option<&[u8]>) -> Output {
    let mut child = bin()
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("binary runs");
    {
        let mut pipe = child.stdin.take().expect("stdin");
        if let Some(bytes) = stdin {
            pipe.write_all(bytes).expect("write stdin");
        }
    }
    child.wait_with_output().expect("binary exits")
}

fn ok(args: &[&str], stdin: Option<&[u8]>) -> Vec<u8> {
    let out = run(args, stdin);
    assert_eq!(out.status.code(), Some(0), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    out.stdout
}

fn scratch(name: &str) -> PathBuf {
    let dir = PathBuf::from(env!("CARGO_TARGET_TMPDIR")).join("cli");
    std::fs::create_dir_all(&dir).unwrap();
    dir.join(name)
}

#[test]
fn squid_like_pipeline() {
    let h = ok(&["gen", "--family", "squid_like", "--params", "k=3"], None);
    let s = ok(&["subdivide"], Some(&h));
    let text = String::from_utf8(ok(&["spectrum", "--format", "csv"], Some(&s))).unwrap();
    let rows: Vec<(f64, usize)> = text
        .lines()
        .filter(|l| !l.starts_with('#'))
        .skip(1)
        .map(|l| {
            let (v, m) = l.split_once(',').unwrap();
            (v.parse().unwrap(), m.parse().unwrap())
        })
        .collect();
    assert_eq!(rows.iter().map(|r| r.1).sum::<usize>(), 13);
    assert!(rows.contains(&(-0.5, 3)));
}

#[test]
fn subdivision_is_closed_under_piping() {
    let h = ok(&["gen", "--family", "hyperstar", "--params", "l=2,k=3"], None);
    let s = ok(&["subdivide"], Some(&h));
    let ss = ok(&["subdivide"], Some(&s));
    let text = String::from_utf8(ok(&["spectrum", "--format", "json"], Some(&ss))).unwrap();
    let doc: serde_json::Value = serde_json::from_str(&text).unwrap();
    // 5 + 2 vertices, 6 edges after one subdivision; 7 + 6 after two.
    assert_eq!(doc["order"], 13);
    assert_eq!(doc["manifest"]["command"], "spectrum");
}

#[test]
fn verify_exit_codes() {
    let fano = scratch("fano.json");
    ok(&["gen", "--family", "fano", "--out", fano.to_str().unwrap()], None);
    ok(&["verify", "--theorem", "t1", "--input", fano.to_str().unwrap()], None);
    ok(&["verify", "--theorem", "t3", "--params", "l=4,s=2,t=3"], None);
    let out = run(&["verify", "--theorem", "t6", "--params", "k=3", "--format", "json"], None);
    assert_eq!(out.status.code(), Some(2));
    let report: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(report["discrepancies"][0]["clause"], "ii");
}

#[test]
fn input_errors_exit_one() {
    let out = run(&["spectrum"], Some(br#"{"n":3,"edges":[[0,1,2],[1,2]]}"#));
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains("not uniform"));
    assert_eq!(run(&["frobnicate"], None).status.code(), Some(1));
    assert_eq!(run(&["gen", "--family", "nope"], None).status.code(), Some(1));
    assert_eq!(run(&["verify", "--theorem", "t3", "--params", "l=0,s=1,t=1"], None).status.code(), Some(1));
}

#[test]
fn quotient_reports_containment() {
    let h = ok(&["gen", "--family", "hyperflower", "--params", "l=4,s=2,t=3"], None);
    let s = ok(&["subdivide"], Some(&h));
    let text = String::from_utf8(ok(&["quotient", "--cells", "0-1;2-13;14-17"], Some(&s))).unwrap();
    assert!(text.contains("containment: holds"), "{text}");
    let out = run(&["quotient", "--cells", "0-2;3-13;14-17"], Some(&s));
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains("not equitable"));
}

#[test]
fn predict_prints_every_clause() {
    let text = String::from_utf8(ok(&["predict", "--theorem", "t4", "--params", "l=3,k=4", "--flavor", "closed"], None)).unwrap();
    assert!(text.contains("(i)") && text.contains("(iii)"), "{text}");
    let json = ok(&["predict", "--theorem", "t2", "--params", "base=petersen,k=3", "--format", "json"], None);
    let doc: serde_json::Value = serde_json::from_slice(&json).unwrap();
    assert_eq!(doc["values"].as_array().unwrap().len(), 10 + 15 + 15);
    let out = run(&["predict", "--theorem", "t6", "--params", "k=3", "--flavor", "closed"], None);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("non-real root"));
}

#[test]
fn cospectral_check_and_forge() {
    let a = scratch("shrikhande.json");
    let b = scratch("rook.json");
    ok(&["gen", "--family", "shrikhande", "--out", a.to_str().unwrap()], None);
    ok(&["gen", "--family", "rook4x4", "--seed", "3", "--out", b.to_str().unwrap()], None);
    let cert: serde_json::Value = serde_json::from_slice(&ok(&["cospectral", "check", a.to_str().unwrap(), b.to_str().unwrap()], None)).unwrap();
    assert_eq!(cert["verdict"]["verdict"], "non_isomorphic");

    let dir = scratch("forge-t8");
    ok(&["cospectral", "forge", "--base", "shrikhande,rook4x4", "--out", dir.to_str().unwrap()], None);
    let cert: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(dir.join("certificate.json")).unwrap()).unwrap();
    assert_eq!(cert["provenance"], "t8");
    assert_eq!(cert["first"]["n"], 64);

    let c5 = scratch("c5.json");
    ok(&["gen", "--family", "cycle", "--params", "n=5", "--out", c5.to_str().unwrap()], None);
    let out = run(&["cospectral", "check", a.to_str().unwrap(), c5.to_str().unwrap()], None);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn seeded_generation_is_deterministic() {
    let args = ["gen", "--family", "petal_overlapped", "--params", "l=4,s=1,t=2", "--seed", "11"];
    assert_eq!(ok(&args, None), ok(&args, None));
    let other = ok(&["gen", "--family", "petal_overlapped", "--params", "l=4,s=1,t=2", "--seed", "12"], None);
    assert_ne!(ok(&args, None), other);
}
