use std::path::Path;
use std::process::{Command, Output};

fn cyclic(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_cyclic"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn code(o: &Output) -> i32 {
    o.status.code().unwrap()
}

#[test]
fn check_verdicts() {
    let o = cyclic(&["check", "15"]);
    assert_eq!(code(&o), 0);
    let text = stdout(&o);
    assert!(text.contains("verdict: all groups cyclic"));
    assert!(text.contains("phi: 8"));
    assert!(text.contains("gcd(n, phi): 1"));

    let o = cyclic(&["check", "4"]);
    assert_eq!(code(&o), 1);
    let text = stdout(&o);
    assert!(text.contains("verdict: non-cyclic group exists"));
    assert!(text.contains("(*) squarefree: fails at p=2"));

    let o = cyclic(&["check", "21"]);
    assert!(stdout(&o).contains("fails at p=3, q=7"));

    assert_eq!(code(&cyclic(&["check", "0"])), 2);
    assert_eq!(code(&cyclic(&["check", "twelve"])), 2);
    assert_eq!(code(&cyclic(&["check", "9223372036854775808"])), 2);
}

#[test]
fn check_json() {
    let o = cyclic(&["check", "6", "--json"]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["schema"], 1);
    assert_eq!(v["arrow_pair"], serde_json::json!([2, 3]));
    assert_eq!(v["cyclic_number"], false);
}

#[test]
fn sieve_listings() {
    assert_eq!(stdout(&cyclic(&["sieve", "1", "8"])), "1\n2\n3\n5\n7\n");
    assert_eq!(stdout(&cyclic(&["sieve", "14", "16"])), "15\n");
    assert_eq!(stdout(&cyclic(&["sieve", "20", "22"])), "");
    assert_eq!(
        stdout(&cyclic(&["sieve", "1", "8", "--json"])),
        "[1,2,3,5,7]\n"
    );
    assert_eq!(code(&cyclic(&["sieve", "0", "8"])), 2);
    assert_eq!(code(&cyclic(&["sieve", "9", "8"])), 2);
    assert_eq!(code(&cyclic(&["sieve", "1", "1000001"])), 2);
}

#[test]
fn witness_outputs() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("w4.json");
    let o = cyclic(&["witness", "4", "--out", path.to_str().unwrap()]);
    assert_eq!(code(&o), 0);
    assert_eq!(
        std::fs::read_to_string(&path).unwrap(),
        "{\"schema\":1,\"n\":4,\"reason\":\"square\",\"params\":{\"p\":2},\"degree\":4,\
         \"generators\":[[1,0,2,3],[0,1,3,2]]}\n"
    );

    let o = cyclic(&["witness", "6"]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["reason"], "arrow");
    assert_eq!(v["params"]["a"], 2);
    assert_eq!(v["degree"], 9);

    let o = cyclic(&["witness", "7"]);
    assert_eq!(code(&o), 1);
    assert!(String::from_utf8_lossy(&o.stderr).contains("7 is a cyclic number"));

    // 2 * 101 needs 101^2 points
    assert_eq!(code(&cyclic(&["witness", "202"])), 2);
    assert_eq!(
        code(&cyclic(&["witness", "202", "--max-degree", "20000"])),
        0
    );
}

#[test]
fn verify_by_number_and_file() {
    let o = cyclic(&["verify", "12"]);
    assert_eq!(code(&o), 0);
    assert!(stdout(&o).contains("verdict: verified"));

    let o = cyclic(&["verify", "6"]);
    assert_eq!(code(&o), 0);
    assert!(stdout(&o).contains("max_element_order: 3"));

    assert_eq!(code(&cyclic(&["verify", "7"])), 1);

    let dir = tempfile::tempdir().unwrap();
    let good = dir.path().join("good.json");
    cyclic(&["witness", "8", "--out", good.to_str().unwrap()]);
    assert_eq!(code(&cyclic(&["verify", good.to_str().unwrap()])), 0);

    // drop a generator
    let text = std::fs::read_to_string(&good).unwrap();
    let mut v: serde_json::Value = serde_json::from_str(&text).unwrap();
    v["generators"].as_array_mut().unwrap().pop();
    let tampered = dir.path().join("tampered.json");
    std::fs::write(&tampered, v.to_string()).unwrap();
    let o = cyclic(&["verify", tampered.to_str().unwrap()]);
    assert_eq!(code(&o), 1);
    assert!(stdout(&o).contains("order_ok: false"));

    let garbage = dir.path().join("garbage.json");
    std::fs::write(&garbage, "not json").unwrap();
    assert_eq!(code(&cyclic(&["verify", garbage.to_str().unwrap()])), 2);
    assert_eq!(code(&cyclic(&["verify", "/no/such/file.json"])), 2);

    let o = cyclic(&["verify", "100", "--max-order", "10"]);
    assert_eq!(code(&o), 2);
}

fn write(dir: &Path, name: &str, text: &str) -> String {
    let p = dir.join(name);
    std::fs::write(&p, text).unwrap();
    p.to_str().unwrap().to_string()
}

#[test]
fn analyze_reports() {
    let dir = tempfile::tempdir().unwrap();
    let s3 = write(
        dir.path(),
        "s3.json",
        r#"{"degree":3,"generators":[[1,0,2],[1,2,0]]}"#,
    );
    let o = cyclic(&["analyze", &s3]);
    assert_eq!(code(&o), 0);
    let text = stdout(&o);
    for line in [
        "order: 6",
        "cyclic: no",
        "center: 1",
        "class_sizes: 1 2 3",
        "maximal_subgroups: 4",
        "maximal: order 3 normalizer 6 conjugates 1",
        "maximal: order 2 normalizer 2 conjugates 3",
    ] {
        assert!(
            text.lines().any(|l| l == line),
            "missing {line:?} in\n{text}"
        );
    }

    let c6 = write(
        dir.path(),
        "c6.json",
        r#"{"degree":6,"generators":[[1,2,3,4,5,0]]}"#,
    );
    let text = stdout(&cyclic(&["analyze", &c6]));
    assert!(text.contains("cyclic: yes, generator"));

    let w6 = dir.path().join("w6.json");
    cyclic(&["witness", "6", "--out", w6.to_str().unwrap()]);
    let a = cyclic(&["analyze", w6.to_str().unwrap(), "--json"]);
    let b = cyclic(&["analyze", &s3, "--json"]);
    let va: serde_json::Value = serde_json::from_slice(&a.stdout).unwrap();
    let vb: serde_json::Value = serde_json::from_slice(&b.stdout).unwrap();
    assert_eq!(va["element_orders"], vb["element_orders"]);
    assert_eq!(va["class_sizes"], vb["class_sizes"]);

    let bad = write(
        dir.path(),
        "bad.json",
        r#"{"degree":3,"generators":[[0,0,1]]}"#,
    );
    assert_eq!(code(&cyclic(&["analyze", &bad])), 2);
    let s8 = write(
        dir.path(),
        "s8.json",
        r#"{"degree":8,"generators":[[1,0,2,3,4,5,6,7],[1,2,3,4,5,6,7,0]]}"#,
    );
    assert_eq!(code(&cyclic(&["analyze", &s8])), 2);
}

#[test]
fn enumerate_reports() {
    let text = stdout(&cyclic(&["enumerate", "4"]));
    assert!(text.contains("classes: 2\n") && text.contains("cyclic: 1\n"));
    let text = stdout(&cyclic(&["enumerate", "5"]));
    assert!(text.contains("classes: 1\n") && text.contains("cyclic: 1\n"));
    let o = cyclic(&["enumerate", "8", "--json"]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["classes"], 5);
    assert_eq!(v["cyclic_classes"], 1);
    assert_eq!(v["agrees"], true);

    let o = cyclic(&["enumerate", "9"]);
    assert_eq!(code(&o), 2);
    assert!(String::from_utf8_lossy(&o.stderr).contains("cap of 8"));
    assert_eq!(code(&cyclic(&["enumerate", "11", "--max-order", "11"])), 2);
}
