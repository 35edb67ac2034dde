use std::path::PathBuf;

use serde_json::Value;

fn run(args: &[&str]) -> (i32, Value, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let code = qweyl::cli::run(std::iter::once("qweyl").chain(args.iter().copied()), &mut out, &mut err);
    let out = String::from_utf8(out).unwrap();
    let json = serde_json::from_str(&out).unwrap_or(Value::Null);
    (code, json, String::from_utf8(err).unwrap())
}

fn scratch(name: &str, v: &Value) -> PathBuf {
    let path = PathBuf::from(env!("CARGO_TARGET_TMPDIR")).join(name);
    std::fs::write(&path, serde_json::to_string(v).unwrap()).unwrap();
    path
}

#[test]
fn field_info() {
    let (code, v, _) = run(&["field-info", "--l", "6"]);
    assert_eq!(code, 0);
    assert_eq!(v["degree"], 2);
    // Φ₆ = x² - x + 1, so q⁻² = 1 - q²
    assert_eq!(v["cyclotomic"], serde_json::json!(["1", "-1", "1"]));
    assert_eq!(v["q2_inverse"], serde_json::json!(["1", "-1"]));
}

#[test]
fn pideg_and_semigroup() {
    let (code, v, _) = run(&["pideg", "--l", "6"]);
    assert_eq!(code, 0);
    assert_eq!(v["pideg_bruteforce"], 6);
    assert_eq!(v["pideg_factors"], 6);
    let (code, v, _) = run(&["semigroup-check", "--l", "4"]);
    assert_eq!((code, v["bound"].clone(), v["pass"].clone()), (0, 12.into(), true.into()));
    let (code, _, _) = run(&["semigroup-check", "--l", "4", "--bound", "2"]);
    assert_eq!(code, 1);
}

#[test]
fn verify_identities_passes() {
    let (code, v, err) = run(&["verify-identities", "--l", "3", "--alpha", "1/2", "--beta", "t", "--gamma", "-2"]);
    assert_eq!(code, 0, "{err}");
    let checks = v.as_array().unwrap();
    assert!(!checks.is_empty());
    assert!(checks.iter().all(|c| c["pass"] == true));
    assert_eq!(checks[0]["params"]["a_max"], 6);
}

#[test]
fn build_check_classify_round_trip() {
    let base = ["--l", "3", "--alpha", "1", "--beta", "2", "--gamma", "t"];
    let mut args = vec!["build-module"];
    args.extend(base);
    args.extend(["--family", "M1", "--params", r#"{"mu1":"2","mu2":"1+t","mu3":"3"}"#, "--conjugate", "--seed", "9"]);
    let (code, module, err) = run(&args);
    assert_eq!(code, 0, "{err}");
    assert_eq!(module["dim"], 3);
    let path = scratch("m1.json", &module);
    let path = path.to_str().unwrap();

    let (code, v, _) = run(&["check-module", "--in", path]);
    assert_eq!(code, 0);
    assert_eq!((v["relations"].clone(), v["simple"].clone()), (true.into(), true.into()));
    assert_eq!(v["central_scalars"]["x^l"].is_string(), true);

    // q² = t permutes the z-eigenvalues, so t(1+t) is one too
    let (code, v, err) = run(&["classify", "--in", path, "--hint-z", "t + t^2", "--hint-mu1", "2"]);
    assert_eq!(code, 0, "{err}");
    assert_eq!(v["family"], "M1");
    assert_eq!(v["canonical"]["mu1^l"], "8");
    assert!(v["params"].is_object());

    let (code, _, _) = run(&["classify", "--in", path, "--hint-z", "5"]);
    assert_eq!(code, 1);
}

#[test]
fn iso_reports_agreement() {
    let p = r#"{"left":{"family":"M6","params":{"mu1":"2","mu2":"3"}},"right":{"family":"M6","params":{"mu1":"2*t","mu2":"3*t^2"}}}"#;
    let (code, v, _) = run(&["iso", "--l", "3", "--alpha", "1", "--beta", "0", "--gamma", "0", "--params", p]);
    assert_eq!(code, 0);
    assert_eq!(v["criterion"], true);
    assert_eq!(v["intertwiner_dim"], 1);
    let p = r#"{"left":{"family":"M7","params":{"mu":"2"}},"right":{"family":"M7","params":{"mu":"3"}}}"#;
    let (code, v, _) = run(&["iso", "--l", "2", "--alpha", "1", "--beta", "0", "--gamma", "0", "--params", p]);
    assert_eq!(code, 0);
    assert_eq!((v["criterion"].clone(), v["intertwiner_dim"].clone()), (false.into(), 0.into()));
}

#[test]
fn exit_codes() {
    assert_eq!(run(&["no-such-command"]).0, 2);
    assert_eq!(run(&["field-info", "--l", "1"]).0, 1);
    let (code, v, _) = run(&["verify-identities", "--l", "3", "--alpha", "1 +", "--beta", "0", "--gamma", "0"]);
    assert_eq!(code, 2);
    assert!(v["error"].is_string());
    // M5 needs beta = 0
    let (code, v, _) = run(&["build-module", "--l", "2", "--alpha", "0", "--beta", "1", "--gamma", "1", "--family", "M5", "--params", r#"{"mu1":"1","mu2":"1"}"#]);
    assert_eq!(code, 1);
    assert!(v["error"].as_str().unwrap().contains("beta = 0"));
    assert_eq!(run(&["check-module", "--in", "/nonexistent/module.json"]).0, 2);
}

#[test]
fn non_simple_module_fails_check() {
    let (_, module, _) = run(&["build-module", "--l", "2", "--alpha", "1", "--beta", "0", "--gamma", "0", "--family", "M0", "--params", r#"{"a":"1"}"#]);
    // widen to a direct sum M0(1) + M0(2) by hand
    let mut sum = module.clone();
    sum["dim"] = 2.into();
    let ent = |a: &str, b: &str| serde_json::json!({"rows": 2, "cols": 2, "entries": [[a, "0"], ["0", b]]});
    sum["X"] = ent("1", "2");
    sum["Y"] = ent("1/2", "1/4");
    sum["Z"] = ent("0", "0");
    let path = scratch("sum.json", &sum);
    let (code, v, _) = run(&["check-module", "--in", path.to_str().unwrap()]);
    assert_eq!(code, 1);
    assert_eq!((v["relations"].clone(), v["simple"].clone()), (true.into(), false.into()));
    assert_eq!(run(&["classify", "--in", path.to_str().unwrap()]).0, 1);
}
