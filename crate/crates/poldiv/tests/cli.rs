//! Contract tests for the command line front end: exit codes, deterministic
//! bytes, canonical form independence of the input ordering, and the
//! downgrade/restrict pipeline.

mod common;

use common::{fixture, fixture_text, run_cli, run_cli_stdin};

fn fx(name: &str) -> String {
    fixture(name).to_string_lossy().into_owned()
}

#[test]
fn exit_zero_on_success() {
    let out = run_cli(&["validate", &fx("e6.json")]);
    assert_eq!(out.code, 0);
    assert!(out.stdout.contains("\"proper\":true"));
    assert!(out.stderr.is_empty());
}

#[test]
fn exit_one_on_malformed_input() {
    let out = run_cli(&["validate", &fx("malformed.json")]);
    assert_eq!(out.code, 1);
    assert!(out.stdout.starts_with("{\"error\":\"parse\""));
}

#[test]
fn exit_one_on_missing_file() {
    let out = run_cli(&["validate", "no_such_file.json"]);
    assert_eq!(out.code, 1);
    assert!(out.stdout.starts_with("{\"error\":\"parse\""));
}

#[test]
fn exit_one_on_usage_error() {
    let out = run_cli(&["eval", &fx("e6.json")]);
    assert_eq!(out.code, 1, "missing -u is a usage error");
}

#[test]
fn exit_two_on_improper_divisor() {
    let out = run_cli(&["validate", &fx("improper.json")]);
    assert_eq!(out.code, 2, "validate signals an improper divisor");
    assert!(out.stdout.contains("\"proper\":false"), "report still printed");
}

#[test]
fn exit_two_on_weight_outside_cone() {
    let out = run_cli(&["eval", &fx("e6.json"), "-u", "0,-1"]);
    assert_eq!(out.code, 2);
    assert!(out.stdout.starts_with("{\"error\":\"validation\""));
}

#[test]
fn help_and_version_exit_zero() {
    assert_eq!(run_cli(&["--help"]).code, 0);
    assert_eq!(run_cli(&["--version"]).code, 0);
}

#[test]
fn output_is_byte_deterministic() {
    for args in [
        vec!["validate".to_string(), fx("e6.json")],
        vec!["gitfan".to_string(), fx("e6.json")],
        vec!["orbits".to_string(), fx("interval.json"), "--point".to_string(), "0".to_string()],
        vec!["downgrade".to_string(), fx("k4.json")],
    ] {
        let argv: Vec<&str> = args.iter().map(|s| s.as_str()).collect();
        let a = run_cli(&argv);
        let b = run_cli(&argv);
        assert_eq!(a.stdout, b.stdout, "two runs of {:?} differ", args);
        assert_eq!(a.code, b.code);
    }
}

#[test]
fn input_ordering_does_not_change_output() {
    for cmd in ["validate", "degree", "gitfan"] {
        let canonical = run_cli(&[cmd, &fx("e6.json")]);
        let permuted = run_cli(&[cmd, &fx("e6_permuted.json")]);
        assert_eq!(canonical.stdout, permuted.stdout, "{} differs", cmd);
        assert_eq!(canonical.code, permuted.code);
    }
    let canonical = run_cli(&["eval", &fx("e6.json"), "-u", "12,-1"]);
    let permuted = run_cli(&["eval", &fx("e6_permuted.json"), "-u", "12,-1"]);
    assert_eq!(canonical.stdout, permuted.stdout);
}

#[test]
fn eval_prints_the_frozen_example() {
    let out = run_cli(&["eval", &fx("e6.json"), "-u", "12,-1"]);
    assert_eq!(out.code, 0);
    assert_eq!(
        out.stdout,
        "{\"divisor\":{\"0\":\"4\",\"1\":\"-3\",\"inf\":\"-1\"}}\n"
    );
}

#[test]
fn downgrade_restrict_pipeline_reaches_the_curve() {
    let down = run_cli(&["downgrade", &fx("k4.json")]);
    assert_eq!(down.code, 0);
    assert_eq!(down.stdout, fixture_text("e6_downgrade_expected.json"));
    let restricted = run_cli_stdin(
        &["restrict", "--map", &fx("line.json")],
        Some(&down.stdout),
    );
    assert_eq!(restricted.code, 0);
    assert_eq!(restricted.stdout, fixture_text("e6.json"));
    // restrict also accepts a plain divisor file as input
    let direct = run_cli(&["restrict", &fx("e6_downgrade_expected.json"), "--map", &fx("line.json")]);
    assert_eq!(direct.stdout, restricted.stdout);
}

#[test]
fn restrict_rejects_unknown_target_points() {
    let map = r#"{"target":{"kind":"P1"},"points":["0","inf"],"pullbacks":[{"ray":0,"point":"nowhere","multiplicity":1}]}"#;
    let dir = std::env::temp_dir().join("poldiv_bad_map.json");
    std::fs::write(&dir, map).unwrap();
    let down = run_cli(&["downgrade", &fx("k4.json")]);
    let out = run_cli_stdin(
        &["restrict", "--map", dir.to_str().unwrap()],
        Some(&down.stdout),
    );
    assert_eq!(out.code, 2, "unknown point is a validation failure");
    assert!(out.stdout.starts_with("{\"error\":\"validation\""));
}

#[test]
fn equiv_reports_shifts_or_inequivalence() {
    let yes = run_cli(&["equiv", &fx("e6.json"), &fx("e6_shifted.json")]);
    assert_eq!(yes.code, 0);
    assert_eq!(
        yes.stdout,
        "{\"equivalent\":true,\"shifts\":{\"0\":[1,0],\"1\":[-1,0]}}\n"
    );
    let no = run_cli(&["equiv", &fx("e6.json"), &fx("e6_shift_one.json")]);
    assert_eq!(no.code, 0);
    assert_eq!(no.stdout, "{\"equivalent\":false}\n");
}

#[test]
fn hilbert_supports_csv_and_json() {
    let json = run_cli(&["hilbert", &fx("e6.json"), "--box", "11:12,-1:0"]);
    assert_eq!(json.code, 0);
    assert_eq!(
        json.stdout,
        "{\"box\":[[11,12],[-1,0]],\"entries\":[{\"u\":[11,-1],\"dim\":0},{\"u\":[11,0],\"dim\":1},{\"u\":[12,-1],\"dim\":1},{\"u\":[12,0],\"dim\":2}]}\n"
    );
    let csv = run_cli(&["hilbert", &fx("e6.json"), "--box", "11:12,-1:0", "--format", "csv"]);
    assert_eq!(csv.code, 0);
    assert_eq!(csv.stdout, "11,-1,0\n11,0,1\n12,-1,1\n12,0,2\n");
}

#[test]
fn eval_formats_fall_back_consistently() {
    let csv = run_cli(&["eval", &fx("e6.json"), "-u", "12,-1", "--format", "csv"]);
    assert_eq!(csv.stdout, "site,value\n0,4\n1,-3\ninf,-1\n");
    let text = run_cli(&["eval", &fx("e6.json"), "-u", "12,-1", "--format", "text"]);
    assert_eq!(text.stdout, "0: 4\n1: -3\ninf: -1\n");
}

#[test]
fn fiber_commands_agree_with_each_other() {
    let orbits = run_cli(&["orbits", &fx("interval.json"), "--point", "0"]);
    let reduced = run_cli(&["reduced", &fx("interval.json"), "--point", "0"]);
    assert_eq!(orbits.code, 0);
    assert_eq!(reduced.stdout, "{\"point\":\"0\",\"reduced\":false}\n");
    assert!(orbits.stdout.contains("\"reduced\":false"));
    let components = run_cli(&["components", &fx("interval.json"), "--point", "0"]);
    assert_eq!(
        components.stdout,
        "{\"point\":\"0\",\"components\":[{\"vertex\":[\"1/2\"],\"cone_rays\":[[-1]],\"lattice_basis\":[[2]]},{\"vertex\":[\"1/3\"],\"cone_rays\":[[1]],\"lattice_basis\":[[3]]}]}\n"
    );
}

#[test]
fn classify_names_the_three_geometries() {
    for (file, name) in [
        ("classify_elliptic.json", "elliptic"),
        ("classify_parabolic.json", "parabolic"),
        ("classify_hyperbolic.json", "hyperbolic"),
    ] {
        let out = run_cli(&["classify", &fx(file)]);
        assert_eq!(out.code, 0);
        assert_eq!(out.stdout, format!("{{\"class\":\"{}\"}}\n", name));
    }
}
