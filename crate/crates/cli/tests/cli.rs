use std::io::Write;
use std::process::{Command, Stdio};

use homoggb_core::parse::parse_poly;
use homoggb_core::{ring_ref, Exponents, Field, Ring, RingKind, Word};
use serde_json::Value;

struct Run {
    code: i32,
    stdout: String,
    stderr: String,
}

fn homoggb(args: &[&str], input: &str) -> Run {
    let mut child = Command::new(env!("CARGO_BIN_EXE_homoggb"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("binary runs");
    child.stdin.take().unwrap().write_all(input.as_bytes()).unwrap();
    let out = child.wait_with_output().unwrap();
    Run {
        code: out.status.code().unwrap_or(-1),
        stdout: String::from_utf8(out.stdout).unwrap(),
        stderr: String::from_utf8(out.stderr).unwrap(),
    }
}

fn lines(s: &str) -> Vec<&str> {
    s.lines().collect()
}

const CENTRAL: &str = "y^3 - x - y\ny^2 + 1\n";
const FREE: &str = "# two generators\nY*Y*Y - X*Y - X - Y\nY^2 - X + 3\n";

#[test]
fn central_pipeline_prints_three_sections() {
    let r = homoggb(&["pipeline-central"], CENTRAL);
    assert_eq!(r.code, 0, "{}", r.stderr);
    assert_eq!(
        lines(&r.stdout),
        vec![
            "# step1",
            "y^2 + t^2",
            "t^2*x + 2*t^2*y",
            "# step2",
            "y^2 + 1",
            "x + 2*y",
            "# step3",
            "y^2 + t^2",
            "x + 2*y",
            "#unit: false",
            "#step2-verified: true",
            "#step3-verified: true",
            "#not-in-step1: x + 2*y",
        ]
    );
}

#[test]
fn reduced_gb_with_explicit_order() {
    let r = homoggb(&["gb", "--ring", "comm", "--var-order", "x,y", "--reduced"], CENTRAL);
    assert_eq!(r.code, 0);
    assert_eq!(lines(&r.stdout), vec!["y^2 + 1", "x + 2*y"]);
}

#[test]
fn reversed_precedence_changes_leading_terms() {
    let r = homoggb(&["gb", "--var-order", "y,x", "--reduced"], CENTRAL);
    assert_eq!(r.code, 0);
    assert_eq!(lines(&r.stdout), vec!["x^2 + 4", "y + 1/2*x"]);
}

#[test]
fn unknown_variable_is_a_usage_error() {
    let r = homoggb(&["gb", "--vars", "x,y"], "x + q\n");
    assert_eq!(r.code, 2);
    assert!(r.stderr.contains("unknown variable q at 1:5"), "{}", r.stderr);
    assert!(r.stdout.is_empty());
}

#[test]
fn failed_check_exits_one_with_witness() {
    let r = homoggb(&["check-gb"], "y^2 + 1\ny^3 - x - y\n");
    assert_eq!(r.code, 1);
    assert_eq!(
        lines(&r.stdout),
        vec!["#groebner: false", "#witness: S(y^2 + 1, y^3 - x - y)", "#remainder: x + 2*y"]
    );
    let ok = homoggb(&["check-gb"], "y^2 + 1\nx + 2*y\n");
    assert_eq!((ok.code, ok.stdout.as_str()), (0, "#groebner: true\n"));
}

#[test]
fn free_check_reports_overlap() {
    let r = homoggb(&["check-gb", "--ring", "free", "--var-order", "Y,X", "--max-degree", "4"], "Y^2 - X\n");
    assert_eq!(r.code, 1);
    assert!(r.stdout.contains("#witness: overlap Y^3 of Y^2 - X and Y^2 - X"), "{}", r.stdout);
    assert!(r.stdout.contains("#remainder: Y*X - X*Y"), "{}", r.stdout);
}

#[test]
fn free_pipeline_golden() {
    let r = homoggb(&["pipeline-free", "--ring", "free", "--max-degree", "8"], FREE);
    assert_eq!(r.code, 0, "{}", r.stderr);
    let out = lines(&r.stdout);
    let step2 = out.iter().position(|l| *l == "# step2").unwrap();
    assert_eq!(out[step2 + 1..step2 + 3], ["Y^2 + 4*Y + 3", "X + 4*Y"]);
    for flag in ["#step1-verified: true", "#step2-verified: true", "#step3-verified: true", "#truncated-at: 8"] {
        assert!(out.contains(&flag), "missing {flag}");
    }
    assert!(out.contains(&"#not-in-step1: X + 4*Y"));
}

#[test]
fn free_algebra_commands_need_a_degree_bound() {
    for cmd in ["gb", "pipeline-free", "check-gb"] {
        let r = homoggb(&[cmd, "--ring", "free"], FREE);
        assert_eq!(r.code, 2, "{cmd}");
        assert!(r.stderr.contains("--max-degree"), "{}", r.stderr);
    }
    assert_eq!(homoggb(&["pipeline-free"], CENTRAL).code, 2);
    assert_eq!(homoggb(&["normal-monomials"], CENTRAL).code, 2);
    assert_eq!(homoggb(&["gb", "--order", "lex"], CENTRAL).code, 2);
}

#[test]
fn homogenize_and_dehomogenize() {
    let r = homoggb(&["homogenize"], CENTRAL);
    assert_eq!(lines(&r.stdout), vec!["y^3 - t^2*x - t^2*y", "y^2 + t^2"]);
    let r = homoggb(&["homogenize", "--ring", "free", "--emit-commutators"], FREE);
    assert_eq!(
        lines(&r.stdout),
        vec!["Y^3 - T*X*Y - T^2*X - T^2*Y", "Y^2 - T*X + 3*T^2", "X*T - T*X", "Y*T - T*Y"]
    );
    let r = homoggb(&["dehomogenize", "--ring", "free"], "X*T - T*X\nT*X*T*Y\n");
    assert_eq!(lines(&r.stdout), vec!["0", "X*Y"]);
    let r = homoggb(&["dehomogenize", "--homog-var", "h"], "y^2 + h^2\n");
    assert_eq!(lines(&r.stdout), vec!["y^2 + 1"]);
}

#[test]
fn normal_monomials_listing() {
    let r = homoggb(&["normal-monomials", "--up-to", "2"], "y^2 + 1\nx + 2*y\n");
    assert_eq!(r.code, 0);
    assert_eq!(lines(&r.stdout), vec!["# degree 0", "1", "# degree 1", "y", "# degree 2", "#counts: 1 1 0"]);

    let r = homoggb(&["normal-monomials", "--up-to", "3", "--correspondence"], CENTRAL);
    assert_eq!(r.code, 0);
    let out = lines(&r.stdout);
    assert!(out.contains(&"#extended counts: 1 2 2 2"));
    assert!(out.contains(&"#correspondence: true"));
}

#[test]
fn prime_field_and_weights() {
    let r = homoggb(&["gb", "--field", "fp:7", "--reduced"], "3*x - 1\n");
    assert_eq!(lines(&r.stdout), vec!["x + 2"]);
    let r = homoggb(&["homogenize", "--vars", "x,y", "--weights", "2,1"], "x + y + 1\n");
    assert_eq!(lines(&r.stdout), vec!["x + t*y + t^2"]);
    assert_eq!(homoggb(&["gb", "--field", "fp:8"], "x\n").code, 2);
    assert_eq!(homoggb(&["gb", "--vars", "x,y", "--weights", "1"], "x\n").code, 2);
}

#[test]
fn zero_lines_are_skipped_with_a_warning() {
    let r = homoggb(&["gb", "--vars", "x,y", "--reduced"], "x - x\ny\n");
    assert_eq!(r.code, 0);
    assert_eq!(r.stdout, "y\n");
    assert!(r.stderr.contains("line 1 is zero"));
}

#[test]
fn input_order_does_not_change_output() {
    let a = homoggb(&["pipeline-central"], "y^3 - x - y\ny^2 + 1\n");
    let b = homoggb(&["pipeline-central"], "y^2 + 1\ny^3 - x - y\n");
    assert_eq!(a.stdout, b.stdout);
    let a = homoggb(&["pipeline-free", "--ring", "free", "--max-degree", "6"], "Y*Y*Y - X*Y - X - Y\nY^2 - X + 3\n");
    let b = homoggb(&["pipeline-free", "--ring", "free", "--max-degree", "6"], "Y^2 - X + 3\nY*Y*Y - X*Y - X - Y\n");
    assert_eq!(a.stdout, b.stdout);
}

fn ring_from(v: &Value) -> homoggb_core::RingRef {
    let names = |k: &str| -> Vec<String> {
        v[k].as_array().unwrap().iter().map(|s| s.as_str().unwrap().to_string()).collect()
    };
    let kind = if v["kind"] == "free" { RingKind::Free } else { RingKind::Commutative };
    let field: Field = v["field"].as_str().unwrap().parse().unwrap();
    let mut ring = Ring::new(kind, &names("vars"), field).unwrap().with_precedence(&names("var_order")).unwrap();
    if let Some(t) = v["homog_var"].as_str() {
        ring = ring.with_homog_var(t).unwrap();
    }
    ring_ref(ring)
}

#[test]
fn json_output_parses_back() {
    let r = homoggb(&["pipeline-central", "--format", "json"], CENTRAL);
    let v: Value = serde_json::from_str(&r.stdout).unwrap();
    let ring = ring_from(&v["ring"]);
    for step in ["step1", "step2", "step3"] {
        for p in v[step]["basis"].as_array().unwrap() {
            let s = p.as_str().unwrap();
            let step_ring = if step == "step2" { ring_ref(ring.base()) } else { ring.clone() };
            assert_eq!(parse_poly::<Exponents>(&step_ring, s).unwrap().to_string(), s);
        }
    }
    assert_eq!(v["not_in_step1"], "x + 2*y");

    let r = homoggb(&["homogenize", "--ring", "free", "--emit-commutators", "--format", "json"], FREE);
    let v: Value = serde_json::from_str(&r.stdout).unwrap();
    let ring = ring_from(&v["ring"]);
    for p in v["polynomials"].as_array().unwrap() {
        let s = p.as_str().unwrap();
        assert_eq!(parse_poly::<Word>(&ring, s).unwrap().to_string(), s);
    }
}

#[test]
fn every_text_output_has_a_json_twin() {
    let cases: Vec<(Vec<&str>, &str)> = vec![
        (vec!["gb", "--ring", "free", "--max-degree", "5"], FREE),
        (vec!["normal-monomials", "--up-to", "3", "--correspondence"], CENTRAL),
        (vec!["check-gb"], CENTRAL),
        (vec!["dehomogenize"], "y^2 + t^2\n"),
    ];
    for (args, input) in cases {
        let text = homoggb(&args, input);
        let mut json_args = args.clone();
        json_args.extend(["--format", "json"]);
        let json = homoggb(&json_args, input);
        assert_eq!(text.code, json.code, "{args:?}");
        let v: Value = serde_json::from_str(&json.stdout).unwrap();
        assert_eq!(v["command"], args[0]);
    }
}
