//! End-to-end tests of the command-line binary: output formats, exit codes,
//! and route equivalence.

use std::process::{Command, Output};

fn dgprof(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_dgprof"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).expect("utf8 stdout")
}

#[test]
fn profile_prints_canonical_text() {
    let out = dgprof(&["profile", "cis", "path:4"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out).trim(), "1 + 4x + 4y + 3x^2 + 6xy + 3y^2");

    let alt = dgprof(&["profile", "cis", "path:4", "--alternating"]);
    assert_eq!(stdout(&alt).trim(), "1 + 4x + 4y + 6xy");

    let uni = dgprof(&["profile", "cis", "path:4", "--univariate"]);
    assert_eq!(stdout(&uni).trim(), "1 + 8x + 12x^2");
}

#[test]
fn profile_routes_agree() {
    for route_args in [
        ["--route", "brute"],
        ["--route", "formula"],
        ["--route", "series"],
    ] {
        let mut args = vec!["profile", "cis", "cycle:7"];
        args.extend(route_args);
        let out = dgprof(&args);
        assert!(out.status.success(), "route {route_args:?} failed");
        assert_eq!(
            stdout(&out).trim(),
            "1 + 7x + 7y + 14x^2 + 28xy + 14y^2 + 7x^3 + 21x^2y + 21xy^2 + 7y^3",
        );
    }
    // The route note goes to stderr, not stdout.
    let out = dgprof(&["profile", "cis", "path:3"]);
    let err = String::from_utf8(out.stderr).unwrap();
    assert!(err.contains("route: formula"));
}

#[test]
fn invalid_inputs_exit_with_usage_error() {
    for args in [
        ["profile", "col", "cycle:2"].as_slice(),
        &["profile", "frobnicate", "path:3"],
        &["profile", "col", "moebius:3"],
        &["profile", "encis", "path:3"],
        &["series", "warp_path", "4"],
        &["table", "sudoku", "2", "2"],
        &["table", "conjecture", "9", "5"],
        &["verify", "everything"],
        &["profile", "cis", "path:4", "--univariate", "--json"],
    ] {
        let out = dgprof(args);
        assert_eq!(out.status.code(), Some(1), "args {args:?}");
    }
    // Unknown flags are usage errors too.
    let out = dgprof(&["profile", "cis", "path:4", "--frobnicate"]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn size_limit_and_force() {
    let out = dgprof(&["profile", "col", "path:25"]);
    assert_eq!(out.status.code(), Some(1));
    // A formula-backed game on a big board is fine without --force...
    let out = dgprof(&["profile", "cis", "path:40", "--univariate"]);
    assert!(out.status.success());
    // ...and --force lifts the cap for brute force (cheap here thanks to
    // the wide forbidden band).
    let out = dgprof(&[
        "profile", "encis:5", "path:26", "--force", "--route", "brute",
    ]);
    assert!(out.status.success());
    let formula = dgprof(&["profile", "encis:5", "path:26"]);
    assert_eq!(stdout(&out), stdout(&formula));
}

#[derive(serde::Serialize, serde::Deserialize)]
struct ProfileJson {
    game: String,
    board: String,
    total: String,
    terms: Vec<TermJson>,
}

#[derive(serde::Serialize, serde::Deserialize)]
struct TermJson {
    blue: u32,
    red: u32,
    count: String,
}

#[test]
fn json_round_trips() {
    let out = dgprof(&["profile", "snort", "cycle:4", "--json"]);
    assert!(out.status.success());
    let text = stdout(&out);
    let parsed: ProfileJson = serde_json::from_str(&text).expect("valid json");
    assert_eq!(parsed.game, "snort");
    assert_eq!(parsed.board, "cycle:4");
    assert_eq!(parsed.total, "35");
    assert_eq!(parsed.terms[0].count, "1");
    assert_eq!((parsed.terms[0].blue, parsed.terms[0].red), (0, 0));
    // Round trip: parse and re-serialize is the identity.
    let reserialized = serde_json::to_string_pretty(&parsed).unwrap();
    assert_eq!(text.trim(), reserialized.trim());
}

#[test]
fn series_output_shapes() {
    let out = dgprof(&["series", "cis_path", "4", "--count-only"]);
    let lines: Vec<String> = stdout(&out).lines().map(String::from).collect();
    assert_eq!(lines, ["0: 1", "1: 3", "2: 5", "3: 11", "4: 21"]);

    let out = dgprof(&["series", "cis_cycle", "5", "--count-only"]);
    let last = stdout(&out).lines().last().unwrap().to_string();
    assert_eq!(last, "5: 31");

    // EnCis(2) on P3: no two pieces fit (any pair is at distance <= 2), so
    // the order-3 profile carries singles only, matching brute force.
    let out = dgprof(&["series", "encis:2", "3"]);
    assert!(stdout(&out).lines().count() == 4);
    assert!(stdout(&out).contains("3: 1 + 3x + 3y"));

    let out = dgprof(&["series", "regex:(BE|RE)*(B|R|)", "3", "--count-only"]);
    assert!(out.status.success());
    assert_eq!(
        stdout(&out).lines().collect::<Vec<_>>(),
        ["0: 1", "1: 2", "2: 2", "3: 4"]
    );

    let out = dgprof(&["series", "cis_path", "0", "--gf"]);
    assert!(stdout(&out).starts_with("(1 + (x + y) t) / (1 - t - (x + y) t^2)"));
}

#[test]
fn verify_suites_pass_and_report() {
    let out = dgprof(&["verify", "examples"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.lines().filter(|l| l.starts_with("PASS")).count() > 10);
    assert!(!text.contains("FAIL"));

    let out = dgprof(&["verify", "doppelganger", "8"]);
    assert!(out.status.success());

    let out = dgprof(&["verify", "oeis"]);
    assert!(out.status.success());
}

#[test]
fn table_output() {
    let out = dgprof(&["table", "kmn", "2", "3"]);
    assert!(out.status.success());
    assert!(stdout(&out).contains("77"));

    let out = dgprof(&["table", "kmn", "4", "4", "--csv"]);
    let text = stdout(&out);
    assert_eq!(text.lines().next().unwrap(), "m/n,0,1,2,3,4");
    assert!(text.lines().any(|l| l.ends_with(",611")));

    let out = dgprof(&["table", "conjecture", "6", "13", "--csv"]);
    let text = stdout(&out);
    assert_eq!(
        text.lines().next().unwrap(),
        "m,n,oracle_count,conjectured_count,match"
    );
    assert!(text.lines().skip(1).all(|l| l.ends_with(",true")));

    // Extra constants via --cm open up m beyond the builtins.
    let out = dgprof(&["table", "conjecture", "7", "6", "--csv", "--cm", "7=3864"]);
    assert!(out.status.success());
    assert!(stdout(&out).lines().skip(1).all(|l| l.ends_with(",true")));
}

#[test]
fn profile_from_board_file() {
    let dir = std::env::temp_dir().join("dgprof-cli-test");
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("p4.graph");
    std::fs::write(&path, "# P4\n4 3\n0 1\n1 2\n2 3\n").unwrap();
    let spec = format!("file:{}", path.display());
    let out = dgprof(&["profile", "cis", &spec]);
    assert!(out.status.success());
    assert_eq!(stdout(&out).trim(), "1 + 4x + 4y + 3x^2 + 6xy + 3y^2");
}
