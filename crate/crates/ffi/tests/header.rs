use std::path::Path;
use std::process::Command;

fn manifest_dir() -> &'static Path {
    Path::new(env!("CARGO_MANIFEST_DIR"))
}

fn exported_names() -> Vec<String> {
    let source = std::fs::read_to_string(manifest_dir().join("src/lib.rs")).unwrap();
    let mut names = Vec::new();
    let mut after_no_mangle = false;
    for line in source.lines() {
        let line = line.trim();
        if line == "#[no_mangle]" {
            after_no_mangle = true;
        } else if after_no_mangle {
            let name = line.split("fn ").nth(1).unwrap().split('(').next().unwrap();
            names.push(name.to_string());
            after_no_mangle = false;
        }
    }
    names
}

#[test]
fn header_declares_every_export() {
    let header = std::fs::read_to_string(manifest_dir().join("include/treepack.h")).unwrap();
    let names = exported_names();
    assert!(names.len() >= 20, "found {names:?}");
    for name in &names {
        assert!(header.contains(&format!("{name}(")), "{name} missing from header");
    }
    assert!(header.contains("typedef struct TreepackGraph TreepackGraph;"));
    assert!(header.contains("TREEPACK_STATUS_OK = 0"));
    assert!(header.contains("TREEPACK_VERDICT_COUNTEREXAMPLE = 3"));
}

#[test]
fn header_compiles_as_c_and_cpp() {
    let header = manifest_dir().join("include/treepack.h");
    for lang in ["c", "c++"] {
        let Ok(out) = Command::new("cc").args(["-fsyntax-only", "-Wall", "-x", lang]).arg(&header).output() else {
            eprintln!("no C compiler; skipping");
            return;
        };
        assert!(out.status.success(), "{lang}: {}", String::from_utf8_lossy(&out.stderr));
    }
}
