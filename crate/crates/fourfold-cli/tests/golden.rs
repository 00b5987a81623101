//! Golden-file and round-trip tests: the shipped fixtures are byte-stable
//! under the canonical printer, classify output matches frozen documents,
//! and every emitted JSON document validates against the shipped schema.

use std::path::{Path, PathBuf};

use fourfold_cli::commands;
use fourfold_cli::files::{load_dir, ExampleFile};
use fourfold_cli::grammar::{parse_poly, print_poly, VarTable};
use fourfold_core::poly::RingSpec;

fn repo_path(rel: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("../..").join(rel)
}

#[test]
fn fixtures_round_trip_byte_for_byte() {
    let files = load_dir(&repo_path("data/appendix")).unwrap();
    assert_eq!(files.len(), 14);
    let vars = VarTable::ambient();
    for (name, file) in &files {
        let ring = RingSpec::grevlex(file.field_char, 6);
        let parsed = parse_poly(&file.cubic, ring, &vars).unwrap();
        assert_eq!(
            print_poly(&parsed, &vars),
            file.cubic,
            "{name}: cubic not in canonical print form"
        );
        for form in &file.plane {
            let parsed = parse_poly(form, ring, &vars).unwrap();
            assert_eq!(&print_poly(&parsed, &vars), form, "{name}: plane form");
        }
        // whole-file canonical JSON round trip
        let record = file.into_record().unwrap();
        let reprinted = ExampleFile::from_record(&record);
        let original = std::fs::read_to_string(repo_path("data/appendix").join(name)).unwrap();
        assert_eq!(reprinted.to_json_pretty(), original, "{name}: file bytes");
    }
}

#[test]
fn first_scroll_cubic_parses_to_its_printed_terms() {
    let files = load_dir(&repo_path("data/appendix")).unwrap();
    let (_, file) = files.iter().find(|(n, _)| n == "a1-1.json").unwrap();
    let ring = RingSpec::grevlex(31, 6);
    let vars = VarTable::ambient();
    let cubic = parse_poly(&file.cubic, ring, &vars).unwrap();
    assert_eq!(cubic.terms.len(), 38);
    assert_eq!(cubic.total_degree(), Some(3));
    // coefficient of x0 x1^2 is -6 ≡ 25
    let target = parse_poly("x_0x_1^2", ring, &vars).unwrap();
    let mono = &target.terms[0].0;
    let coeff = cubic
        .terms
        .iter()
        .find(|(m, _)| m == mono)
        .map(|(_, c)| *c)
        .unwrap();
    assert_eq!(coeff, 25);
}

#[test]
fn classify_output_matches_the_frozen_goldens() {
    for family in ["m12", "m20"] {
        let out = commands::run_classify(family, true).unwrap();
        let golden =
            std::fs::read_to_string(repo_path(&format!("data/golden/classify_{family}.json")))
                .unwrap();
        assert_eq!(out.stdout.trim_end(), golden.trim_end(), "family {family}");
        // stability across runs
        let again = commands::run_classify(family, true).unwrap();
        assert_eq!(out.stdout, again.stdout);
    }
}

#[test]
fn verify_passes_on_the_shipped_fixtures() {
    let out = commands::run_verify(&repo_path("data/appendix"), false).unwrap();
    assert_eq!(out.code, 0);
    assert!(out.stdout.contains("14/14 examples passed"), "{}", out.stdout);
}

// ---- minimal JSON-Schema checker (the subset the shipped schema uses) ----

fn schema() -> serde_json::Value {
    let text = std::fs::read_to_string(repo_path("schema/report.v1.schema.json")).unwrap();
    serde_json::from_str(&text).unwrap()
}

fn resolve<'a>(root: &'a serde_json::Value, node: &'a serde_json::Value) -> &'a serde_json::Value {
    if let Some(reference) = node.get("$ref").and_then(|r| r.as_str()) {
        let path = reference.trim_start_matches("#/");
        let mut cursor = root;
        for step in path.split('/') {
            cursor = &cursor[step];
        }
        cursor
    } else {
        node
    }
}

fn validate(root: &serde_json::Value, node: &serde_json::Value, value: &serde_json::Value) -> Result<(), String> {
    let node = resolve(root, node);
    if let Some(one_of) = node.get("oneOf").and_then(|v| v.as_array()) {
        let hits = one_of
            .iter()
            .filter(|branch| validate(root, branch, value).is_ok())
            .count();
        if hits != 1 {
            return Err(format!("oneOf matched {hits} branches for {value}"));
        }
        return Ok(());
    }
    if let Some(allowed) = node.get("enum").and_then(|v| v.as_array()) {
        if !allowed.contains(value) {
            return Err(format!("{value} not in enum {allowed:?}"));
        }
        return Ok(());
    }
    if let Some(ty) = node.get("type") {
        let names: Vec<&str> = match ty {
            serde_json::Value::String(s) => vec![s.as_str()],
            serde_json::Value::Array(a) => a.iter().filter_map(|t| t.as_str()).collect(),
            _ => vec![],
        };
        let matches = names.iter().any(|name| match *name {
            "object" => value.is_object(),
            "array" => value.is_array(),
            "string" => value.is_string(),
            "integer" => value.is_i64() || value.is_u64(),
            "boolean" => value.is_boolean(),
            "null" => value.is_null(),
            _ => false,
        });
        if !matches {
            return Err(format!("{value} is not of type {names:?}"));
        }
    }
    if let Some(required) = node.get("required").and_then(|v| v.as_array()) {
        for key in required {
            let key = key.as_str().unwrap();
            if value.get(key).is_none() {
                return Err(format!("missing required key '{key}' in {value}"));
            }
        }
    }
    if let Some(props) = node.get("properties").and_then(|v| v.as_object()) {
        if let Some(obj) = value.as_object() {
            for (key, sub) in obj {
                if let Some(prop_schema) = props.get(key) {
                    validate(root, prop_schema, sub).map_err(|e| format!("{key}: {e}"))?;
                }
            }
        }
    }
    if let Some(items) = node.get("items") {
        if let Some(arr) = value.as_array() {
            for (i, item) in arr.iter().enumerate() {
                validate(root, items, item).map_err(|e| format!("[{i}]: {e}"))?;
            }
        }
    }
    Ok(())
}

#[test]
fn emitted_documents_validate_against_the_shipped_schema() {
    let root = schema();
    for family in ["m12", "m20"] {
        let out = commands::run_classify(family, true).unwrap();
        let doc: serde_json::Value = serde_json::from_str(&out.stdout).unwrap();
        validate(&root, &root["$defs"]["classify-doc"], &doc).unwrap();
    }
    let out = commands::run_verify(&repo_path("data/appendix"), true).unwrap();
    let doc: serde_json::Value = serde_json::from_str(&out.stdout).unwrap();
    validate(&root, &root["$defs"]["verify-doc"], &doc).unwrap();

    for (_, file) in load_dir(&repo_path("data/appendix")).unwrap() {
        let doc: serde_json::Value = serde_json::from_str(&file.to_json_pretty()).unwrap();
        validate(&root, &root["$defs"]["example-file"], &doc).unwrap();
    }

    let out = commands::run_construct("m12", 2, 7, 50, None).unwrap();
    let doc: serde_json::Value = serde_json::from_str(&out.stdout).unwrap();
    validate(&root, &root["$defs"]["example-file"], &doc).unwrap();
}

#[test]
fn schema_checker_rejects_wrong_documents() {
    let root = schema();
    let bad: serde_json::Value = serde_json::json!({
        "schema": "v1",
        "command": "classify",
        "family": "m13",
        "reports": [],
        "merged_nonempty": []
    });
    assert!(validate(&root, &root["$defs"]["classify-doc"], &bad).is_err());
}
