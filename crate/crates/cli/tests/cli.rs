use std::path::PathBuf;

use lca_workbench::{run, Status, Verdict};

fn fixture(name: &str) -> String {
    let p: PathBuf = [env!("CARGO_MANIFEST_DIR"), "tests", "fixtures", name].iter().collect();
    p.to_string_lossy().into_owned()
}

struct Outcome {
    code: i32,
    stdout: String,
    stderr: String,
}

fn invoke(args: &[&str], stdin: &str) -> Outcome {
    let mut argv = vec!["lca-workbench"];
    argv.extend_from_slice(args);
    let (mut out, mut err) = (Vec::new(), Vec::new());
    let code = run(argv, &mut stdin.as_bytes(), &mut out, &mut err);
    Outcome { code, stdout: String::from_utf8(out).unwrap(), stderr: String::from_utf8(err).unwrap() }
}

fn verdict(args: &[&str]) -> (i32, Verdict) {
    let o = invoke(args, "");
    let v: Verdict = serde_json::from_str(&o.stdout).unwrap_or_else(|e| panic!("{e}: {}", o.stdout));
    assert_eq!(o.code, v.status.exit_code());
    (o.code, v)
}

/// (command words, fixture, expected exit code)
const CASES: &[(&[&str], &str, i32)] = &[
    (&["check-algebra"], "ult6_algebra.json", 0),
    (&["check-contact"], "edge_contact.json", 0),
    (&["check-nca"], "edge_contact.json", 1),
    (&["check-lca"], "p3_overlap.json", 0),
    (&["check-lca"], "edge_lca.json", 1),
    (&["dualize"], "p3_overlap.json", 0),
    (&["dualize"], "discrete3.json", 0),
    (&["dual-map"], "collapse_map.json", 0),
    (&["dual-map"], "nonskeletal_map.json", 1),
    (&["check-morphism"], "morphism_onto.json", 0),
    (&["round-trip"], "discrete3.json", 0),
    (&["round-trip"], "p3_overlap.json", 0),
    (&["frame"], "p3_overlap.json", 0),
    (&["iota"], "p3_ideal.json", 0),
    (&["open-dual"], "p3_ideal.json", 0),
    (&["closed-dual"], "p3_element.json", 0),
    (&["compactify", "alexandroff"], "fincof.json", 0),
    (&["compactify", "beta"], "fincof.json", 0),
    (&["compactify", "compare"], "ult12_compare.json", 0),
    (&["proximity", "restrict"], "proximity_discrete.json", 0),
    (&["proximity", "restrict"], "proximity_glued.json", 1),
    (&["proximity", "reconstruct"], "rc_discrete2.json", 0),
    (&["wallman"], "wallman_whole.json", 0),
    (&["wallman"], "wallman_trivial.json", 1),
    (&["report"], "fincof.json", 0),
    (&["report"], "p3_overlap.json", 0),
];

#[test]
fn fixtures_give_expected_exit_codes() {
    for (words, file, expected) in CASES {
        let path = fixture(file);
        let mut args = words.to_vec();
        args.push(&path);
        let (code, v) = verdict(&args);
        assert_eq!(code, *expected, "{words:?} {file}: {v:?}");
        assert_eq!(v.command, words.join(" "));
        if code == 1 {
            assert!(!v.witnesses.is_empty(), "{words:?} {file}");
        }
    }
}

#[test]
fn verdicts_reparse_to_equal_values() {
    for (words, file, _) in CASES {
        let path = fixture(file);
        let mut args = words.to_vec();
        args.push(&path);
        let (_, v) = verdict(&args);
        let again: Verdict = serde_json::from_str(&serde_json::to_string(&v).unwrap()).unwrap();
        assert_eq!(again, v);
    }
}

#[test]
fn identical_requests_give_identical_bytes() {
    for (words, file, _) in CASES {
        let path = fixture(file);
        let mut args = words.to_vec();
        args.push(&path);
        assert_eq!(invoke(&args, "").stdout, invoke(&args, "").stdout, "{words:?} {file}");
    }
}

#[test]
fn p3_overlap_is_an_lca() {
    let text = std::fs::read_to_string(fixture("p3_overlap.json")).unwrap();
    let o = invoke(&["check-lca"], &text);
    assert_eq!(o.code, 0);
    let v: Verdict = serde_json::from_str(&o.stdout).unwrap();
    assert_eq!(v.status, Status::Holds);
    assert!(v.checks.iter().any(|c| c.name == "BC3"));
}

#[test]
fn beta_of_finite_cofinite_is_overlap() {
    let (code, v) = verdict(&["compactify", "beta", &fixture("fincof.json")]);
    assert_eq!(code, 0);
    assert_eq!(v.result.unwrap()["kind"], "overlap");
}

#[test]
fn sup_of_two_partitions_is_their_lcm() {
    let req = r#"{"algebra":{"kind":"ult_periodic","modulus":12},"contact":{"kind":"overlap"},
        "bounded":{"kind":"finite"},
        "relations":[{"kind":"partition","modulus":2},{"kind":"partition","modulus":3}]}"#;
    let o = invoke(&["compactify", "sup"], req);
    assert_eq!(o.code, 0, "{}", o.stdout);
    let v: Verdict = serde_json::from_str(&o.stdout).unwrap();
    let r = v.result.unwrap();
    assert_eq!(r["kind"], "partition");
    assert_eq!(r["modulus"], 6);
}

#[test]
fn wallman_failure_names_the_unseparated_pair() {
    let (code, v) = verdict(&["wallman", &fixture("wallman_trivial.json")]);
    assert_eq!(code, 1);
    let w = &v.witnesses[0];
    assert_eq!(w.condition, "separation");
    assert_eq!(w.parts, vec![("a".into(), "{a}".into()), ("c".into(), "{a}".into())]);
}

#[test]
fn malformed_json_is_an_error() {
    let o = invoke(&["dualize"], "{\"algebra\": ");
    assert_eq!(o.code, 2);
    let v: Verdict = serde_json::from_str(&o.stdout).unwrap();
    assert_eq!(v.status, Status::Error);
    assert!(v.error.unwrap().contains("malformed"));
}

#[test]
fn unknown_fields_are_rejected() {
    let o = invoke(&["check-lca"], r#"{"algebra":{"kind":"powerset","atoms":["a"]},"colour":1}"#);
    assert_eq!(o.code, 2);
}

#[test]
fn missing_fields_are_reported() {
    let o = invoke(&["closed-dual"], &std::fs::read_to_string(fixture("p3_overlap.json")).unwrap());
    assert_eq!(o.code, 2);
    assert!(o.stdout.contains("element"));
}

#[test]
fn missing_file_is_an_error() {
    let o = invoke(&["report", "/nonexistent/request.json"], "");
    assert_eq!(o.code, 2);
    assert!(o.stdout.contains("cannot read"));
}

#[test]
fn unknown_command_prints_usage() {
    let o = invoke(&["transmogrify"], "");
    assert_eq!(o.code, 2);
    assert!(o.stdout.is_empty());
    assert!(o.stderr.contains("Usage"));
}

#[test]
fn help_goes_to_stdout() {
    let o = invoke(&["--help"], "");
    assert_eq!(o.code, 0);
    assert!(o.stdout.contains("compactify"));
}

#[test]
fn file_and_stdin_inputs_agree() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("req.json");
    let text = std::fs::read_to_string(fixture("p3_ideal.json")).unwrap();
    std::fs::write(&path, &text).unwrap();
    let from_file = invoke(&["iota", path.to_str().unwrap()], "");
    let from_stdin = invoke(&["iota", "-"], &text);
    assert_eq!(from_file.code, 0);
    assert_eq!(from_file.stdout, from_stdin.stdout);
}

#[test]
fn dot_output_for_extension_lattice() {
    let o = invoke(&["--format", "dot", "compactify", "compare", &fixture("ult12_compare.json")], "");
    assert_eq!(o.code, 0);
    assert!(o.stdout.starts_with("digraph"));
    assert!(o.stdout.contains("\"mod 2\" -> \"mod 4\""));
    assert!(o.stdout.contains("\"mod 6\" -> \"overlap (mod 12, C_beta)\""));
}

#[test]
fn dot_output_for_dual_space() {
    let o = invoke(&["--format", "dot", "dualize", &fixture("p3_overlap.json")], "");
    assert_eq!(o.code, 0);
    assert!(o.stdout.starts_with("digraph") || o.stdout.starts_with("graph"));
}

#[test]
fn dot_unavailable_is_an_error() {
    let o = invoke(&["--format", "dot", "check-algebra", &fixture("ult6_algebra.json")], "");
    assert_eq!(o.code, 2);
    assert!(o.stdout.contains("no DOT rendering"));
}

#[test]
fn text_output_marks_failures() {
    let o = invoke(&["--format", "text", "check-nca", &fixture("edge_contact.json")], "");
    assert_eq!(o.code, 1);
    assert!(o.stdout.contains("[FAIL] extensionality"));
}

#[test]
fn timing_is_opt_in() {
    let path = fixture("p3_overlap.json");
    let (_, plain) = verdict(&["check-lca", &path]);
    let (_, timed) = verdict(&["--timing", "check-lca", &path]);
    assert!(plain.timing_ms.is_none());
    assert!(timed.timing_ms.unwrap() >= 0.0);
}

#[test]
fn required_conditions_decide_morphism_status() {
    let mut req: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(fixture("morphism_onto.json")).unwrap()).unwrap();
    req["require"] = serde_json::json!(["IS"]);
    let o = invoke(&["check-morphism"], &req.to_string());
    assert_eq!(o.code, 1);
    let v: Verdict = serde_json::from_str(&o.stdout).unwrap();
    assert_eq!(v.witnesses.len(), 1);
    assert_eq!(v.witnesses[0].condition, "IS");
}
