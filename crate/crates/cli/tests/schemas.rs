//! Golden jobs and reports conform to the versioned schemas.

use std::path::{Path, PathBuf};

use serde_json::Value;

fn root() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("../..")
}

fn load(path: &Path) -> Value {
    serde_json::from_str(&std::fs::read_to_string(path).unwrap()).unwrap()
}

fn validator(name: &str) -> jsonschema::Validator {
    jsonschema::validator_for(&load(&root().join("schemas").join(name))).unwrap()
}

fn golden(suffix: &str) -> Vec<PathBuf> {
    let mut files: Vec<PathBuf> = std::fs::read_dir(root().join("tests/golden"))
        .unwrap()
        .map(|e| e.unwrap().path())
        .filter(|p| p.to_str().is_some_and(|s| s.ends_with(suffix)))
        .collect();
    files.sort();
    files
}

#[test]
fn golden_files_match_schemas() {
    let job = validator("job.v1.schema.json");
    let report = validator("report.v1.schema.json");
    for path in golden(".job.json") {
        let v = load(&path);
        assert!(job.is_valid(&v), "{}: {:?}", path.display(), job.iter_errors(&v).map(|e| e.to_string()).collect::<Vec<_>>());
    }
    for path in golden(".report.json") {
        let v = load(&path);
        assert!(report.is_valid(&v), "{}", path.display());
        assert!(job.is_valid(&v["input"]), "{} input", path.display());
    }
}

#[test]
fn schema_rejects_what_the_parser_rejects() {
    let job = validator("job.v1.schema.json");
    for bad in [
        r#"{"command":"milnor","exponent":[3]}"#,
        r#"{"command":"rees","ring":{"vars":2}}"#,
        r#"{"command":"rees","ring":{"vars":2},"I":"x1","c":2}"#,
        r#"{"command":"hilbert","ring":{"vars":2,"blocks":[1,1]}}"#,
    ] {
        assert!(!job.is_valid(&serde_json::from_str(bad).unwrap()), "{bad}");
        assert!(mixedmult_core::job::parse_job(bad).is_err(), "{bad}");
    }
}
