use linperm::cli::{run, Report};

fn call(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("linperm").chain(args.iter().copied());
    let code = run(argv, &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

fn json(args: &[&str]) -> (i32, String) {
    let mut v = args.to_vec();
    v.extend(["--output", "json"]);
    let (code, out, _) = call(&v);
    (code, out)
}

#[test]
fn json_round_trips_byte_for_byte() {
    let cases: &[&[&str]] = &[
        &["idempotents", "--q", "3", "--n", "25"],
        &["is-perm", "--q", "3", "--n", "5", "--poly", "x^[1]+x"],
        &["invert", "--q", "11", "--n", "9", "--poly", "8x^[6]+8x^[3]+7x"],
        &["compose", "--q", "4", "--n", "3", "--poly", "[0,1]x^[1]", "--poly", "x^[2]+x"],
        &["involutions", "--q", "5", "--n", "3", "--seed", "9"],
        &["complete", "--q", "3", "--n", "5", "--poly", "x^[1]", "--lambda-set", "0,1,2"],
        &["order", "--q", "3", "--n", "5", "--alpha", "(0,1)", "--poly", "x^[1]+x"],
        &["oracle", "--q", "3", "--n", "2", "--check", "sqrt1"],
        &["reproduce", "--target", "f8n11"],
    ];
    for args in cases {
        let (code, out) = json(args);
        assert_eq!(code, 0, "{args:?}: {out}");
        let line = out.trim_end();
        let parsed: Report = serde_json::from_str(line).unwrap();
        assert_eq!(serde_json::to_string(&parsed).unwrap(), line);
        assert_eq!(parsed.schema_version, 1);
        assert!(parsed.passed());
    }
}

#[test]
fn report_fields() {
    let (_, out) = json(&["invert", "--q", "3", "--n", "5", "--seed", "4", "--poly", "x^[1]+x"]);
    let r: Report = serde_json::from_str(&out).unwrap();
    assert_eq!((r.field.p, r.field.k, r.field.n, r.seed), (3, 1, 5, 4));
    assert_eq!(r.operation, "invert");
    assert!(r.field.moduli.ext.is_some());
    assert_eq!(r.outputs["inverse"], "2*x^[4] + 1*x^[3] + 2*x^[2] + 1*x^[1] + 2*x^[0]");
}

#[test]
fn coefficient_sum_shortcut() {
    let (code, out) = json(&["is-perm", "--q", "3", "--n", "125", "--poly", "x^[1]+x^[0]+x^[2]"]);
    assert_eq!(code, 0);
    let r: Report = serde_json::from_str(&out).unwrap();
    assert_eq!(r.outputs["permutation"], false);
    assert_eq!(r.outputs["tests"], serde_json::json!(["coefficient-sum"]));
}

#[test]
fn closed_form_listing() {
    let (code, out, _) = call(&["idempotents", "--q", "3", "--n", "125", "--closed-form"]);
    assert_eq!(code, 0);
    assert!(out.contains("e3 [coset 1 size 100]: 1*x^100+1*x^75+1*x^50+1*x^25+2*x^0"));
    assert!(out.contains("check crt_agrees: pass"));
    // ord_{49}(2) = 21 < 42, so the closed form is not primitive for q = 2, n = 7^2.
    let (code, out, err) = call(&["idempotents", "--q", "2", "--n", "49", "--closed-form"]);
    assert_eq!(code, 1, "{out}");
    assert!(err.contains("closed_form_condition"));
}

#[test]
fn exit_codes_and_error_lines() {
    let (code, _, err) = call(&["invert", "--q", "3", "--n", "5", "--poly", "x^[1]+2x"]);
    assert_eq!(code, 1);
    assert_eq!(err.lines().count(), 1);
    let e: serde_json::Value = serde_json::from_str(err.trim()).unwrap();
    assert_eq!(e["error"], "NotAPermutation");

    for args in [
        &["frobnicate"][..],
        &["is-perm", "--q", "3", "--poly", "x"],
        &["is-perm", "--q", "6", "--n", "5", "--poly", "x"],
        &["is-perm", "--q", "3", "--n", "6", "--poly", "x"],
        &["is-perm", "--q", "3", "--n", "5", "--poly", "x^7"],
        &["reproduce", "--target", "table9"],
        &["compose", "--q", "3", "--n", "5", "--poly", "x"],
        &["idempotents", "--q", "2", "--n", "3", "--ext-modulus", "1,1,0,0"],
    ] {
        let (code, _, err) = call(args);
        assert_eq!(code, 2, "{args:?}: {err}");
        assert_eq!(err.lines().count(), 1, "{err}");
        assert!(serde_json::from_str::<serde_json::Value>(err.trim()).is_ok());
    }
}

#[test]
fn explicit_moduli() {
    // F_8 = F_2[y]/(y^3 + y^2 + 1) changes element names but not idempotents.
    let (code, a) = json(&["reproduce", "--target", "f8n11"]);
    assert_eq!(code, 0);
    let (code, out) = json(&["idempotents", "--q", "8", "--n", "11", "--base-modulus", "1,0,1,1"]);
    assert_eq!(code, 0);
    let r: Report = serde_json::from_str(&out).unwrap();
    assert_eq!(r.field.moduli.base.as_deref(), Some("1,0,1,1"));
    assert_eq!(r.outputs["count"], 2);
    assert!(a.contains("\"mismatches\":0"));

    let (code, out) = json(&["shift", "--q", "2", "--n", "3", "--ext-modulus", "1,0,1,1", "--alpha", "(0,1,0)", "--t", "1", "--poly", "x"]);
    assert_eq!(code, 0);
    let r: Report = serde_json::from_str(&out).unwrap();
    assert_eq!(r.field.moduli.ext.as_deref(), Some("1*x^3+1*x^2+1*x^0"));
    assert_eq!(r.outputs["shifted"], "(0,1,0)*x^[1]");
}

#[test]
fn every_reproduce_target_passes() {
    for t in ["example1", "table1", "table2", "table3", "f8n11"] {
        let (code, out, err) = call(&["reproduce", "--target", t]);
        assert_eq!(code, 0, "{t}: {err}");
        assert!(out.contains("0 mismatches"), "{out}");
    }
}

#[test]
fn oracle_subcommands() {
    let (code, out, _) = call(&["oracle", "--q", "2", "--n", "3", "--check", "fixed", "--poly", "x^[1]"]);
    assert_eq!(code, 0);
    assert!(out.starts_with("2 elements"));
    let (code, out, _) = call(&["oracle", "--q", "3", "--n", "4", "--check", "sqrt1"]);
    assert_eq!(code, 0);
    assert!(out.contains("check matches_sign_vectors: pass"));
    let (code, _, err) = call(&["oracle", "--q", "3", "--n", "25", "--check", "bijection", "--poly", "x"]);
    assert_eq!(code, 2);
    assert!(err.contains("TooLarge"));
}

#[test]
fn class_and_order() {
    let (code, out) = json(&["class", "--q", "3", "--n", "5", "--alpha", "2", "--poly", "x^[1]+x"]);
    assert_eq!(code, 0);
    let r: Report = serde_json::from_str(&out).unwrap();
    assert_eq!(r.outputs["order"], 10);
    assert_eq!(r.outputs["members"].as_array().unwrap().len(), 10);
    let (code, out, _) = call(&["order", "--q", "3", "--n", "5", "--alpha", "1", "--poly", "x^[1]+x"]);
    assert_eq!(code, 0);
    assert!(out.starts_with("5\n"));
}
