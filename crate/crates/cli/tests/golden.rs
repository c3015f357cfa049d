//! Byte comparison of JSON reports against checked-in files. Run with
//! `UPDATE_GOLDEN=1` to rewrite them.

use std::fs;
use std::path::{Path, PathBuf};

use singlink_cli::commands;
use singlink_cli::{Format, Options};

fn corpus_dir() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("../core/corpus")
}

fn golden_dir() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/golden")
}

#[test]
fn corpus_reports_match_golden_files() {
    let update = std::env::var_os("UPDATE_GOLDEN").is_some();
    let mut files: Vec<PathBuf> = fs::read_dir(corpus_dir())
        .unwrap()
        .map(|e| e.unwrap().path())
        .collect();
    files.sort();
    let mut mismatched = Vec::new();
    for path in &files {
        let out = commands::invariants(path, Format::Json, &Options::default()).unwrap();
        let stem = path.file_stem().unwrap().to_string_lossy().into_owned();
        let golden = golden_dir().join(format!("{stem}.json"));
        if update {
            fs::write(&golden, &out.stdout).unwrap();
            continue;
        }
        let expected =
            fs::read_to_string(&golden).unwrap_or_else(|_| panic!("missing {}", golden.display()));
        if expected != out.stdout {
            mismatched.push(stem);
        }
    }
    assert!(
        mismatched.is_empty(),
        "reports differ from golden files: {mismatched:?}"
    );
}

#[test]
fn reports_are_internally_consistent() {
    for entry in fs::read_dir(corpus_dir()).unwrap() {
        let path = entry.unwrap().path();
        let out = commands::invariants(&path, Format::Json, &Options::default()).unwrap();
        let v: serde_json::Value = serde_json::from_str(&out.stdout).unwrap();
        if let Some(ob) = v["open_book"].as_object() {
            let (g, b, n) = (
                ob["genus"].as_i64().unwrap(),
                ob["binding"].as_i64().unwrap(),
                ob["norm"].as_i64().unwrap(),
            );
            assert_eq!(n, 2 * g - 2 + b, "{}", path.display());
        }
        if v["fillable"].as_bool().unwrap() {
            assert_eq!(
                v["h1"]["order"].as_i64().unwrap(),
                v["determinant"].as_i64().unwrap().abs()
            );
        } else {
            assert!(
                v["h1"].is_null() && v["open_book"].is_null() && v["fundamental_cycle"].is_null()
            );
        }
        assert!(v["warnings"]
            .as_array()
            .unwrap()
            .iter()
            .all(|w| !w.as_str().unwrap().contains("consistency")));
    }
}
