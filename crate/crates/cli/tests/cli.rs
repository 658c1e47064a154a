use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;

fn chernkit(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_chernkit")).args(args).output().expect("binary runs")
}

fn code(o: &Output) -> i32 {
    o.status.code().expect("exited normally")
}

fn fixture(name: &str) -> String {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/fixtures").join(name).display().to_string()
}

fn schema() -> jsonschema::Validator {
    let path = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../docs/report-schema.json");
    let schema: Value = serde_json::from_str(&std::fs::read_to_string(path).unwrap()).unwrap();
    jsonschema::validator_for(&schema).expect("schema compiles")
}

fn structured(args: &[&str]) -> (i32, Value, String) {
    let mut all = args.to_vec();
    all.extend(["--format", "structured"]);
    let o = chernkit(&all);
    let text = String::from_utf8(o.stdout.clone()).unwrap();
    let v: Value = serde_json::from_str(&text).unwrap_or_else(|e| panic!("not JSON ({e}):\n{text}"));
    let validator = schema();
    let errors: Vec<String> = validator.iter_errors(&v).map(|e| format!("{e} at {}", e.instance_path)).collect();
    assert!(errors.is_empty(), "schema violations: {errors:#?}");
    (code(&o), v, text)
}

#[test]
fn verify_forms_passes_and_mutation_fails() {
    let (c, v, _) = structured(&["verify-forms"]);
    assert_eq!(c, 0);
    assert_eq!(v["status"], "pass");
    assert!(v["checks"].as_array().unwrap().len() > 20);

    let (c, v, _) = structured(&["verify-forms", "--mutate-fixture"]);
    assert_eq!(c, 1);
    let failed: Vec<&str> = v["checks"]
        .as_array()
        .unwrap()
        .iter()
        .filter(|c| c["pass"] == false)
        .map(|c| c["name"].as_str().unwrap())
        .collect();
    assert!(failed.contains(&"p_theta_idempotent"), "{failed:?}");
}

#[test]
fn structured_output_is_byte_identical_across_runs() {
    for args in [&["verify-forms", "--seed", "7"][..], &["ktheory", "--target", "ss2"], &["character", "--c1", "2"]] {
        let (_, _, a) = structured(args);
        let (_, _, b) = structured(args);
        assert_eq!(a, b, "{args:?}");
    }
}

#[test]
fn index_of_shipped_operators() {
    for (name, want) in [("b", 1), ("identity", 0), ("conv_z", 0), ("b_conj", -1)] {
        let (c, v, _) = structured(&["index", name, "--n-trunc", "64"]);
        assert_eq!(c, 0, "{name}");
        assert_eq!(v["data"]["operator"]["index"], want, "{name}");
    }
    let (_, v, _) = structured(&["index", "b", "--n-trunc", "64"]);
    let k = &v["data"]["operator"]["kernels"][0];
    assert_eq!((k["kernelDim"].as_u64(), k["adjointKernelDim"].as_u64()), (Some(1), Some(0)));
}

#[test]
fn index_of_a_spec_file() {
    let (c, v, _) = structured(&["index", &fixture("b.json"), "--n-trunc", "32"]);
    assert_eq!(c, 0);
    assert_eq!(v["data"]["operator"]["index"], 1);
}

#[test]
fn non_invertible_symbol_exits_2() {
    let (c, v, _) = structured(&["index", &fixture("heaviside_only.json")]);
    assert_eq!(c, 2);
    assert_eq!(v["status"], "invalid");
    assert!(v["error"].as_str().unwrap().contains("vanishes"));
}

#[test]
fn bad_input_exits_2() {
    assert_eq!(code(&chernkit(&["index", "no_such_operator"])), 2);
    assert_eq!(code(&chernkit(&["--n-trunc", "8", "index", "b"])), 2);
    assert_eq!(code(&chernkit(&["--svd-tol", "0", "index", "b"])), 2);
    assert_eq!(code(&chernkit(&["ktheory", "--target", "klein"])), 2);
    assert_eq!(code(&chernkit(&["frobnicate"])), 2);
}

#[test]
fn character_matrix_and_both_recipes() {
    let (c, v, _) = structured(&["character", "--c1", "0", "--c2", "1"]);
    assert_eq!(c, 0);
    let ch = &v["data"]["character"];
    assert_eq!(ch["meanRecipe"], serde_json::json!([[0.0, 1.0, 0.0], [0.0, 0.0, 0.0]]));
    let d = ch["derivationRecipeColumn3"][0].as_f64().unwrap();
    assert!((d + 1.0 / (2.0 * std::f64::consts::PI)).abs() < 1e-12);

    let (_, v, _) = structured(&["character", "--c1", "0", "--c2", "0"]);
    assert_eq!(v["data"]["character"]["derivationRecipeColumn3"], serde_json::json!([0.0, 0.0]));
}

fn group_of(v: &Value, diagram: &str, node: usize) -> Value {
    let d = v["data"]["diagrams"].as_array().unwrap().iter().find(|d| d["name"] == diagram).unwrap();
    d["nodes"][node]["group"].clone()
}

#[test]
fn ktheory_targets() {
    let (c, v, _) = structured(&["ktheory", "--target", "ss2"]);
    assert_eq!(c, 0);
    assert_eq!(group_of(&v, "ss2", 0)["display"], "ℤ[(1,1)] ⊕ ℤ₂[(1,0)]");
    assert_eq!(group_of(&v, "ss2", 3)["display"], "ℤ[(0,1)]");

    let (c, v, _) = structured(&["ktheory", "--target", "s1"]);
    assert_eq!(c, 0);
    assert_eq!(group_of(&v, "s1", 1)["freeRank"], 2);
    assert_eq!(group_of(&v, "s1", 4)["freeRank"], 1);

    let (c, v, _) = structured(&["ktheory", "--target", "torus"]);
    assert_eq!(c, 0);
    let last = &v["data"]["diagrams"][0]["suspension"][2];
    assert_eq!((last["k0"]["freeRank"].as_u64(), last["k1"]["freeRank"].as_u64()), (Some(4), Some(4)));
}

#[test]
fn ambiguous_extension_exits_3() {
    let (c, v, _) = structured(&["ktheory", "--diagram", &fixture("ambiguous.toml")]);
    assert_eq!(c, 3);
    assert_eq!(v["status"], "ambiguous");
    let res = &v["data"]["diagrams"][0]["nodes"][1]["resolution"];
    assert_eq!(res["kind"], "ambiguous");
    assert_eq!(res["sub"]["display"], "ℤ₂[(1)]");
    assert!(v["error"].as_str().unwrap().contains("cannot be decided"));
}

#[test]
fn text_output_names_every_check() {
    let o = chernkit(&["ktheory", "--target", "s1"]);
    assert_eq!(code(&o), 0);
    let s = String::from_utf8(o.stdout).unwrap();
    assert!(s.contains("PASS s1: K₀(𝒜)"));
    assert!(s.contains("[[H(D_θ)]_𝒦]₀"));
    assert!(s.contains("3/3 checks passed"));
}

#[test]
fn report_aggregates_everything() {
    let (c, v, _) = structured(&["report"]);
    assert_eq!(c, 0, "{}", serde_json::to_string_pretty(&v["checks"]).unwrap());
    let names: Vec<&str> = v["checks"].as_array().unwrap().iter().map(|c| c["name"].as_str().unwrap()).collect();
    for want in ["p_theta_idempotent", "fredholm_index[b]", "kernel_dims[b, N=256]", "character_matrix[2, 3]", "torus: exactness"] {
        assert!(names.contains(&want), "missing {want}");
    }
}
