use std::fs;
use std::path::PathBuf;
use std::process::{Command, Output};

fn fixture(name: &str) -> String {
    let p: PathBuf = [
        env!("CARGO_MANIFEST_DIR"),
        "..",
        "core",
        "data",
        "fixtures",
        name,
    ]
    .iter()
    .collect();
    p.to_str().unwrap().to_string()
}

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_postlie"))
        .args(args)
        .output()
        .unwrap()
}

fn code(args: &[&str]) -> i32 {
    run(args).status.code().unwrap()
}

fn stdout(args: &[&str]) -> String {
    String::from_utf8(run(args).stdout).unwrap()
}

#[test]
fn shipped_products_verify() {
    let cases = [
        ("L5_1", "sl2_c2", "perfect-on-reductive.product.json"),
        ("sl2_c2", "L5_1", "reductive-on-perfect.product.json"),
        ("sl2_r2", "L5_1", "complete-on-perfect.product.json"),
    ];
    for (g, n, prod) in cases {
        assert_eq!(
            code(&["verify", "pa", "--g", g, "--n", n, "--prod", &fixture(prod)]),
            0,
            "{prod}"
        );
    }
    let g = fixture("solvable-on-perfect.g.json");
    assert_eq!(
        code(&[
            "verify",
            "pa",
            "--g",
            &g,
            "--n",
            "L5_1",
            "--prod",
            &fixture("solvable-on-perfect.product.json")
        ]),
        0
    );
    // The same product does not fit the reductive pair.
    assert_eq!(
        code(&[
            "verify",
            "pa",
            "--g",
            "sl2_c2",
            "--n",
            "L5_1",
            "--prod",
            &fixture("solvable-on-perfect.product.json")
        ]),
        1
    );
}

#[test]
fn shipped_operators_verify_and_derive_the_products() {
    for name in ["solvable-on-perfect", "reductive-on-perfect"] {
        let op = fixture(&format!("{name}.operator.json"));
        assert_eq!(
            code(&["verify", "rb", "--n", "L5_1", "--op", &op]),
            0,
            "{name}"
        );
        let derived = stdout(&["derive", "pa-from-rb", "--n", "L5_1", "--op", &op]);
        assert_eq!(
            derived,
            fs::read_to_string(fixture(&format!("{name}.product.json"))).unwrap(),
            "{name}"
        );
    }
    let derived = stdout(&[
        "derive",
        "rb-from-decomposition",
        "--n",
        "L5_1",
        "--n1",
        "1,4,5",
        "--n2",
        "2,3",
    ]);
    assert_eq!(
        derived,
        fs::read_to_string(fixture("solvable-on-perfect.operator.json")).unwrap()
    );
}

#[test]
fn induced_bracket_is_written_to_a_file() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("g.json");
    let out = out.to_str().unwrap();
    let prod = fixture("solvable-on-perfect.product.json");
    assert_eq!(
        code(&["derive", "induced", "--n", "L5_1", "--prod", &prod, "-o", out]),
        0
    );
    assert_eq!(code(&["check", "jacobi", out]), 0);
    assert_eq!(
        code(&["verify", "pa", "--g", out, "--n", "L5_1", "--prod", &prod]),
        0
    );
}

#[test]
fn jacobi_check() {
    let dir = tempfile::tempdir().unwrap();
    let zero = dir.path().join("zero.json");
    fs::write(&zero, r#"{"kind": "algebra", "dim": 3, "entries": []}"#).unwrap();
    assert_eq!(code(&["check", "jacobi", zero.to_str().unwrap()]), 0);
    let bad = run(&["check", "jacobi", &fixture("not-jacobi.json")]);
    assert_eq!(bad.status.code(), Some(1));
    assert_eq!(code(&["check", "jacobi", "sl3"]), 0);
}

#[test]
fn rules_report_the_first_rule_and_citation() {
    let out = run(&["rules", "--g", "L5_1", "--n", "abelian_5"]);
    assert_eq!(out.status.code(), Some(1));
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.starts_with(
        "not-exists: R1\nno post-Lie structure exists when g is perfect and n is abelian\n"
    ));
    assert_eq!(code(&["rules", "--g", "sl2", "--n", "sl2"]), 2);
}

#[test]
fn json_output_is_stable() {
    for args in [
        &["--json", "rules", "--g", "L6_4", "--n", "sl2_sl2"][..],
        &["--json", "invariants", "L9_41"],
        &["--json", "search", "pa", "--g", "n3_r2", "--n", "L5_1"],
        &["--json", "catalog", "list"],
    ] {
        let a = run(args);
        let b = run(args);
        assert_eq!(a.stdout, b.stdout, "{args:?}");
        let v: serde_json::Value = serde_json::from_slice(&a.stdout).unwrap();
        assert!(v.is_object() || v.is_array());
    }
}

#[test]
fn search_finds_the_solvable_example() {
    let g = fixture("solvable-on-perfect.g.json");
    let out = run(&["--json", "search", "pa", "--g", &g, "--n", "L5_1"]);
    assert_eq!(out.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["verdict"], "exists");
}

#[test]
fn exported_catalog_entries_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("l5.json");
    let out = out.to_str().unwrap();
    assert_eq!(code(&["catalog", "export", "L5_1", "-o", out]), 0);
    assert_eq!(
        fs::read_to_string(out).unwrap(),
        stdout(&["catalog", "export", "L5_1"])
    );
    assert_eq!(
        stdout(&["invariants", out]),
        stdout(&["invariants", "L5_1"])
    );
}

#[test]
fn error_exit_codes() {
    assert_eq!(code(&["frobnicate"]), 64);
    assert_eq!(code(&["verify", "pa", "--g", "sl2"]), 64);
    assert_eq!(
        code(&[
            "derive",
            "rb-from-decomposition",
            "--n",
            "L5_1",
            "--n1",
            "1,9",
            "--n2",
            "2"
        ]),
        64
    );
    assert_eq!(code(&["--help"]), 0);

    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("bad.json");
    fs::write(&bad, "{ not json").unwrap();
    assert_eq!(code(&["check", "jacobi", bad.to_str().unwrap()]), 65);
    fs::write(
        &bad,
        r#"{"kind": "algebra", "dim": 2, "entries": [{"i": 1, "j": 3, "k": 1, "coeff": "1"}]}"#,
    )
    .unwrap();
    assert_eq!(code(&["check", "jacobi", bad.to_str().unwrap()]), 65);
    fs::write(
        &bad,
        r#"{"kind": "algebra", "dim": 2, "entries": [], "foo": 1}"#,
    )
    .unwrap();
    assert_eq!(code(&["check", "jacobi", bad.to_str().unwrap()]), 65);

    assert_eq!(code(&["invariants", "no_such_algebra"]), 66);
    assert_eq!(code(&["invariants", "missing/file.json"]), 66);
    assert_eq!(code(&["invariants", "L8_19"]), 66);

    let out = run(&["--json", "invariants", "no_such_algebra"]);
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["exit"], 66);
}
