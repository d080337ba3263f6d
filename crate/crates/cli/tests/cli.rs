use std::fs;
use std::path::Path;
use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_pontryagin"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn stderr(out: &Output) -> String {
    String::from_utf8(out.stderr.clone()).unwrap()
}

fn path(p: &Path) -> &str {
    p.to_str().unwrap()
}

#[test]
fn l_table_prints_both_directions() {
    let out = run(&["l-table", "--max", "2"]);
    assert!(out.status.success());
    assert_eq!(
        stdout(&out),
        "L1 = 1/3*p1\nL2 = 7/45*p2 - 1/45*p1^2\nP1 = 3*x1\nP2 = 45/7*x2 + 9/7*x1^2\n"
    );
    assert_eq!(run(&["l-table", "--max", "0"]).status.code(), Some(2));
}

#[test]
fn witness_for_flagship() {
    let out = run(&["witness", "--xi", "e^2 - p2", "--n", "2"]);
    assert!(out.status.success(), "{}", stderr(&out));
    let text = stdout(&out);
    assert!(text.contains("z = (1, 1, 1, 1)"), "{text}");
    assert!(text.contains("value = -47/7"), "{text}");
    assert!(text.contains("N = 47"), "{text}");
}

#[test]
fn leading_minus_in_expression() {
    let out = run(&["witness", "--xi", "-e^2 + p2", "--n", "2"]);
    assert!(out.status.success(), "{}", stderr(&out));
    assert!(stdout(&out).contains("value = 47/7"));
}

#[test]
fn bad_expression_is_an_input_error() {
    let out = run(&["witness", "--xi", "e^2 - q2", "--n", "2"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).starts_with("error: "));
    // inhomogeneous input
    assert_eq!(run(&["witness", "--xi", "e^2 - p1", "--n", "2"]).status.code(), Some(2));
}

#[test]
fn certify_then_verify() {
    let dir = tempfile::tempdir().unwrap();
    let out = run(&[
        "certify",
        "--xi",
        "e^2 - p2",
        "--n",
        "2",
        "--primes",
        "3",
        "--out",
        path(dir.path()),
    ]);
    assert!(out.status.success(), "{}", stderr(&out));
    let lines: Vec<String> = stdout(&out).lines().map(String::from).collect();
    assert_eq!(lines.len(), 3);
    assert!(lines[0].starts_with("p=53 eval="));
    assert!(lines.iter().all(|l| l.ends_with(" OK")));
    for p in [53, 59, 61] {
        let file = dir.path().join(format!("cert_p{p}.json"));
        let out = run(&["verify", path(&file)]);
        assert!(out.status.success(), "{}", stderr(&out));
        assert!(stdout(&out).starts_with(&format!("p={p} ")));
    }
}

#[test]
fn certify_is_byte_reproducible() {
    let (a, b) = (tempfile::tempdir().unwrap(), tempfile::tempdir().unwrap());
    for d in [&a, &b] {
        let out = run(&[
            "certify",
            "--xi",
            "e^2 + 2*p1^3 - p3",
            "--n",
            "3",
            "--primes",
            "2",
            "--out",
            path(d.path()),
        ]);
        assert!(out.status.success(), "{}", stderr(&out));
    }
    let mut names: Vec<_> = fs::read_dir(a.path())
        .unwrap()
        .map(|e| e.unwrap().file_name())
        .collect();
    names.sort();
    assert_eq!(names.len(), 2);
    for name in names {
        assert_eq!(
            fs::read(a.path().join(&name)).unwrap(),
            fs::read(b.path().join(&name)).unwrap()
        );
    }
}

#[test]
fn tampered_certificate_fails_with_reason() {
    let dir = tempfile::tempdir().unwrap();
    assert!(run(&[
        "certify",
        "--xi",
        "e^2 - p2",
        "--n",
        "2",
        "--primes",
        "1",
        "--out",
        path(dir.path())
    ])
    .status
    .success());
    let file = dir.path().join("cert_p53.json");
    let mut cert: serde_json::Value = serde_json::from_str(&fs::read_to_string(&file).unwrap()).unwrap();
    let eval = cert["evaluation"].as_u64().unwrap();
    cert["evaluation"] = ((eval + 1) % 53).into();
    fs::write(&file, cert.to_string()).unwrap();
    let out = run(&["verify", path(&file)]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stderr(&out).contains("evaluation"), "{}", stderr(&out));
}

#[test]
fn unreadable_inputs_exit_two() {
    let dir = tempfile::tempdir().unwrap();
    let file = dir.path().join("broken.json");
    fs::write(&file, "{\"version\": 1").unwrap();
    assert_eq!(run(&["verify", path(&file)]).status.code(), Some(2));
    assert_eq!(
        run(&["verify", path(&dir.path().join("missing.json"))]).status.code(),
        Some(2)
    );
    assert_eq!(run(&["multisig", "--form", path(&file)]).status.code(), Some(2));
    assert_eq!(run(&["frobnicate"]).status.code(), Some(2));
}

#[test]
fn multisig_of_form_files() {
    let dir = tempfile::tempdir().unwrap();
    let unit = dir.path().join("unit.json");
    fs::write(&unit, r#"{"p": 3, "k": 1, "epsilon": 1, "matrix": [["1"]]}"#).unwrap();
    let out = run(&["multisig", "--form", path(&unit)]);
    assert!(out.status.success(), "{}", stderr(&out));
    assert_eq!(stdout(&out).trim(), "chi^0 + chi^1 + chi^2");

    let hyp = dir.path().join("hyp.json");
    fs::write(
        &hyp,
        r#"{"p": 5, "k": 1, "epsilon": -1, "matrix": [["0", "1"], ["-1", "0"]], "refinement": [1, 0]}"#,
    )
    .unwrap();
    let out = run(&["multisig", "--form", path(&hyp)]);
    assert!(out.status.success(), "{}", stderr(&out));
    assert_eq!(stdout(&out).trim(), "0");

    let singular = dir.path().join("singular.json");
    fs::write(&singular, r#"{"p": 3, "k": 1, "epsilon": 1, "matrix": [["2"]]}"#).unwrap();
    assert_eq!(run(&["multisig", "--form", path(&singular)]).status.code(), Some(1));
}

#[test]
fn transfer_round_trips_through_form_files() {
    let dir = tempfile::tempdir().unwrap();
    let form = dir.path().join("form.json");
    fs::write(&form, r#"{"p": 3, "k": 2, "epsilon": 1, "matrix": [["1"]]}"#).unwrap();
    let out = run(&["transfer", "--form", path(&form)]);
    assert!(out.status.success(), "{}", stderr(&out));
    let transferred: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(transferred["k"], 1);
    assert_eq!(transferred["matrix"].as_array().unwrap().len(), 3);

    let next = dir.path().join("next.json");
    fs::write(&next, stdout(&out)).unwrap();
    let a = run(&["multisig", "--form", path(&form)]);
    let b = run(&["multisig", "--form", path(&next)]);
    assert!(a.status.success() && b.status.success());
    // the level-2 multisignature restricts to the transferred one
    assert_eq!(
        stdout(&a).trim(),
        "chi^0 + chi^1 + chi^2 + chi^3 + chi^4 + chi^5 + chi^6 + chi^7 + chi^8"
    );
    assert_eq!(stdout(&b).trim(), "3*chi^0 + 3*chi^1 + 3*chi^2");
}
