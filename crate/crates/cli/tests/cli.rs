use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_purebraid"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn json(args: &[&str]) -> serde_json::Value {
    let out = run(args);
    assert_eq!(
        out.status.code(),
        Some(0),
        "{}",
        String::from_utf8_lossy(&out.stderr)
    );
    serde_json::from_slice(&out.stdout).unwrap()
}

#[test]
fn nmap_of_the_longest_a2_word() {
    let v = json(&["nmap", "--type", "A2", "--word", "s1 s2 s1"]);
    let vector = v["vector"].as_object().unwrap();
    assert_eq!(vector.len(), 3);
    assert!(vector.values().all(|c| c == 1));
    assert_eq!(v["pure"], false);
    let sq = json(&["nmap", "--type", "A2", "--word", "s1 s1"]);
    assert_eq!(sq["pure"], true);
    assert_eq!(sq["vector"]["s1"], 2);
}

#[test]
fn admissible_sets() {
    let v = json(&["admissible", "--type", "A3", "--set", "s1, s1 s2 s1"]);
    assert_eq!(v["admissible"], true);
    assert_eq!(v["witness"], "s1 s2");
    let v = json(&["admissible", "--type", "A3", "--set", "s1, s2"]);
    assert_eq!(v["admissible"], false);
    assert_eq!(
        run(&["admissible", "--type", "A3", "--set", "s1 s2"])
            .status
            .code(),
        Some(2)
    );
}

#[test]
fn presentations() {
    let out = run(&[
        "present", "--type", "B3", "--I", "s1,s2", "--format", "text",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.starts_with("< s1, s2, a[ε;s3], a[s3;s2], a[s3.s2;s1],"));
    let v = json(&["present", "--type", "I2(4)"]);
    let pure_gens = v["generators"]
        .as_array()
        .unwrap()
        .iter()
        .filter(|g| g["tag"] == "pure")
        .count();
    assert_eq!(pure_gens, 3);
    let v = json(&["pure-present", "--type", "I2(5)"]);
    assert_eq!(v["generators"].as_array().unwrap().len(), 10);
}

#[test]
fn devissage_levels() {
    let v = json(&["devissage", "--type", "A3"]);
    let sizes: Vec<usize> = v["levels"]
        .as_array()
        .unwrap()
        .iter()
        .map(|l| l["generators"].as_array().unwrap().len())
        .collect();
    assert_eq!(sizes, vec![1, 2, 3]);
    assert_eq!(v["total"], 6);
    let bad = run(&["devissage", "--type", "A3", "--chain", "ε; s1"]);
    assert_eq!(bad.status.code(), Some(2));
}

#[test]
fn action_reports() {
    for (ty, n) in [
        ("a", "4"),
        ("B", "3"),
        ("bab", "3"),
        ("i2", "5"),
        ("lemma", "3"),
        ("d", "4"),
    ] {
        let v = json(&["verify-actions", "--type", ty, "--n", n]);
        assert_eq!(v["result"], "pass", "{ty}");
    }
    let text = stdout(&run(&[
        "verify-actions",
        "--type",
        "B",
        "--n",
        "3",
        "--format",
        "text",
    ]));
    assert!(text.ends_with("result: pass\n"));
}

#[test]
fn embedding_report() {
    let v = json(&["verify-embedding", "--n", "3", "--samples", "200"]);
    for key in ["equivariance", "index2", "roundtrip"] {
        assert_eq!(v[key], "pass", "{key}");
    }
}

#[test]
fn cocycles() {
    let v = json(&["cocycle", "--type", "A3", "--v", "s1 s2", "--w", "s2 s1"]);
    assert_eq!(v["even"], true);
    assert_eq!(v["value"]["s1"], 2);
    let v = json(&["cocycle", "--type", "B3", "--samples", "50"]);
    assert_eq!(v["result"], "pass");
}

#[test]
fn oracle() {
    let v = json(&["oracle-check", "--type", "A3"]);
    assert_eq!(v["mismatches"].as_array().unwrap().len(), 0);
}

#[test]
fn usage_errors() {
    assert_eq!(
        run(&["nmap", "--type", "X9", "--word", "s"]).status.code(),
        Some(2)
    );
    assert_eq!(run(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(
        run(&["pure-present", "--type", "Atilde2"]).status.code(),
        Some(2)
    );
    let capped = run(&[
        "present",
        "--type",
        "Atilde2",
        "--I",
        "r",
        "--max-length",
        "2",
    ]);
    assert_eq!(capped.status.code(), Some(0));
    assert!(String::from_utf8_lossy(&capped.stderr).contains("partial"));
}

#[test]
fn output_is_deterministic() {
    let args = [
        "verify-embedding",
        "--n",
        "3",
        "--samples",
        "50",
        "--seed",
        "9",
    ];
    assert_eq!(run(&args).stdout, run(&args).stdout);
    let args = [
        "cocycle",
        "--type",
        "D4",
        "--samples",
        "30",
        "--format",
        "text",
    ];
    assert_eq!(run(&args).stdout, run(&args).stdout);
}
