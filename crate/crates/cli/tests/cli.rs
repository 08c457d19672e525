use std::path::{Path, PathBuf};
use std::process::Command;

use gscheme_cli::{parse_document, run, Command as Cmd, Options, ProblemDocument, SCHEMA_VERSION};
use serde_json::Value;

fn problem(name: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("problems").join(name)
}

fn gscheme(args: &[&str]) -> (i32, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_gscheme")).args(args).output().unwrap();
    (out.status.code().unwrap(), String::from_utf8(out.stdout).unwrap())
}

fn json_of(s: &str) -> Value {
    serde_json::from_str(s).unwrap()
}

#[test]
fn trivial_scheme_verifies() {
    let p = problem("trivial.json");
    let (code, out) = gscheme(&["hopf-verify", p.to_str().unwrap()]);
    assert_eq!(code, 0);
    let v = json_of(&out);
    assert_eq!(v["passes"], Value::Bool(true));
    assert_eq!(v["dimension"], 1);
}

#[test]
fn negative_axiom_instance_exits_one_with_a_certificate() {
    let p = problem("additive_negative.json");
    let (code, out) = gscheme(&["axiom-check", p.to_str().unwrap()]);
    assert_eq!(code, 1);
    let v = json_of(&out);
    assert_eq!(v["report"]["W_in_nablaV"], Value::Bool(true));
    assert_eq!(v["report"]["cW_in_nablaW"], Value::Bool(false));
    let certs = v["report"]["c_certificates"].as_array().unwrap();
    assert!(certs.iter().any(|c| c["normal_form"] != "0"));
    let (code, out) = gscheme(&["generic-point", p.to_str().unwrap()]);
    assert_eq!(code, 1);
    assert_eq!(json_of(&out)["error"]["kind"], "checks_not_passed");
}

#[test]
fn rules_on_the_third_roots_good_basis() {
    let p = problem("third_roots.json");
    let (code, out) = gscheme(&["rules", p.to_str().unwrap(), "--pretty"]);
    assert_eq!(code, 0);
    assert!(out.contains("∂1(xy) = (-2∂1(x)∂1(y)-∂1(x)∂2(y)-∂2(x)∂1(y)+∂2(x)∂2(y))/3"));
    assert!(out.contains("∂1∘∂2 = -∂0-∂1-∂2"));
    let (_, json) = gscheme(&["rules", p.to_str().unwrap()]);
    let v = json_of(&json);
    let coeffs: Vec<&str> = v["product"][1]["terms"].as_array().unwrap().iter().map(|t| t["coefficient"].as_str().unwrap()).collect();
    assert_eq!(coeffs, ["-2/3", "-1/3", "-1/3", "1/3"]);
}

#[test]
fn every_sample_command_has_the_expected_exit_code() {
    let expected = [
        ("additive_positive.json", 0),
        ("third_roots.json", 0),
        ("desk_product.json", 0),
        ("frobenius_f4.json", 0),
        ("trivial.json", 0),
        ("additive_negative.json", 1),
        ("desk_noncommuting.json", 1),
        ("monoid.json", 1),
    ];
    for (file, code) in expected {
        let text = std::fs::read_to_string(problem(file)).unwrap();
        let doc = parse_document(&text).unwrap();
        for name in doc.commands.keys() {
            let cmd = Cmd::ALL.iter().copied().find(|c| c.name() == name).unwrap();
            let outcome = run(cmd, &text, Options::default());
            assert_eq!(outcome.code, code, "{file} {name}: {}", outcome.stdout);
        }
    }
}

#[test]
fn malformed_input_exits_two() {
    let dir = tempfile::tempdir().unwrap();
    let cases = [
        ("not json", "{"),
        ("wrong version", r#"{"schema_version": 7}"#),
        ("unknown key", r#"{"schema_version": 1, "extra": 1}"#),
        ("unknown reference", r#"{"schema_version": 1, "commands": {"hopf-verify": {"hopf": "H"}}}"#),
        ("missing argument", r#"{"schema_version": 1}"#),
        (
            "cyclic fields",
            r#"{"schema_version": 1,
                "fields": {"A": {"base": "B", "generator": "a", "minpoly": "a^2-2"}, "B": {"base": "A", "generator": "b", "minpoly": "b^2-3"}},
                "hopf": {"H": {"builtin": "trivial", "field": "A"}},
                "commands": {"hopf-verify": {"hopf": "H"}}}"#,
        ),
        (
            "bad polynomial",
            r#"{"schema_version": 1,
                "fields": {"A": {"base": "QQ", "generator": "a", "minpoly": "a^^2"}},
                "hopf": {"H": {"builtin": "trivial", "field": "A"}},
                "commands": {"hopf-verify": {"hopf": "H"}}}"#,
        ),
        (
            "wrong characteristic",
            r#"{"schema_version": 1,
                "hopf": {"H": {"builtin": "truncated_additive", "field": "QQ", "p": 2, "m": 1}},
                "commands": {"hopf-verify": {"hopf": "H"}}}"#,
        ),
    ];
    for (label, body) in cases {
        let path = dir.path().join("doc.json");
        std::fs::write(&path, body).unwrap();
        let (code, out) = gscheme(&["hopf-verify", path.to_str().unwrap()]);
        assert_eq!(code, 2, "{label}: {out}");
        assert_eq!(json_of(&out)["error"]["kind"], "malformed_input", "{label}");
    }
    let (code, _) = gscheme(&["hopf-verify", "/nonexistent/doc.json"]);
    assert_eq!(code, 2);
}

#[test]
fn output_is_deterministic() {
    let dir = tempfile::tempdir().unwrap();
    for (file, cmd) in [("third_roots.json", "basis-change"), ("desk_product.json", "l2-check"), ("third_roots.json", "hopf-mutate")] {
        let p = problem(file);
        let p = p.to_str().unwrap();
        let (_, a) = gscheme(&[cmd, p, "--seed", "3"]);
        let (_, b) = gscheme(&[cmd, p, "--seed", "3"]);
        assert_eq!(a, b);
        let out = dir.path().join("report.json");
        let (_, c) = gscheme(&[cmd, p, "--seed", "3", "--out", out.to_str().unwrap()]);
        assert!(c.is_empty());
        assert_eq!(std::fs::read_to_string(&out).unwrap(), a);
    }
}

#[test]
fn seeds_drive_random_points() {
    let p = problem("desk_product.json");
    let p = p.to_str().unwrap();
    let (_, a) = gscheme(&["l2-check", p, "--seed", "1"]);
    let (_, b) = gscheme(&["l2-check", p, "--seed", "2"]);
    assert_eq!(json_of(&a)["seed"], 1);
    assert_ne!(a, b);
}

#[test]
fn numbers_are_exact_strings() {
    let text = std::fs::read_to_string(problem("third_roots.json")).unwrap();
    let out = run(Cmd::BasisChange, &text, Options::default());
    fn no_floats(v: &Value) -> bool {
        match v {
            Value::Number(n) => n.is_u64() || n.is_i64(),
            Value::Array(a) => a.iter().all(no_floats),
            Value::Object(o) => o.values().all(no_floats),
            _ => true,
        }
    }
    let v = json_of(&out.stdout);
    assert!(no_floats(&v));
    assert_eq!(v["transform"][1][1], "1/3*z-1/3");
}

#[test]
fn shipped_schema_matches_the_parser() {
    let schema: Value =
        serde_json::from_str(&std::fs::read_to_string(Path::new(env!("CARGO_MANIFEST_DIR")).join("schema/problem.schema.json")).unwrap())
            .unwrap();
    assert_eq!(schema["properties"]["schema_version"]["const"], SCHEMA_VERSION);
    let names: Vec<&str> = schema["properties"]["commands"]["propertyNames"]["enum"].as_array().unwrap().iter().map(|v| v.as_str().unwrap()).collect();
    assert_eq!(names, Cmd::ALL.iter().map(|c| c.name()).collect::<Vec<_>>());
    for entry in std::fs::read_dir(Path::new(env!("CARGO_MANIFEST_DIR")).join("problems")).unwrap() {
        let text = std::fs::read_to_string(entry.unwrap().path()).unwrap();
        let _: ProblemDocument = parse_document(&text).unwrap();
    }
}
