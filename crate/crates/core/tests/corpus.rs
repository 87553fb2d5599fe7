//! Replays the checked-in fuzz seed corpora through the same invariants the
//! fuzz targets assert. Every seed is a valid input.

use std::fs;
use std::path::PathBuf;

use gspin_core::dsl::{format_matrix, format_param_file, parse_char_expr, parse_lproduct, parse_matrix, parse_param_file};
use gspin_core::nilpotent::ExactMatrix;

fn seeds(target: &str) -> Vec<(String, String)> {
    let dir = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../fuzz/corpus").join(target);
    let mut out: Vec<(String, String)> = fs::read_dir(&dir)
        .unwrap_or_else(|e| panic!("{}: {e}", dir.display()))
        .map(|f| {
            let path = f.unwrap().path();
            (path.file_name().unwrap().to_string_lossy().into_owned(), fs::read_to_string(&path).unwrap())
        })
        .collect();
    out.sort();
    assert!(!out.is_empty(), "no seeds for {target}");
    out
}

#[test]
fn param_file_seeds() {
    for (name, s) in seeds("param_file") {
        let p = parse_param_file(&s).unwrap_or_else(|e| panic!("{name}: {e}"));
        assert_eq!(parse_param_file(&format_param_file(&p)).unwrap(), p, "{name}");
    }
}

#[test]
fn lproduct_seeds() {
    let env = parse_param_file(
        "env {\n  gen chi;\n  gen eta order 2 ramified;\n  cusp sigma dim 2 selftwists {eta};\n  cusp tau dim 2;\n  iso tau = sigma chi;\n}\ngroup gspin4;\nlift m = Q([sigma]);\nlift n = Q([tau]);\n",
    )
    .unwrap()
    .build_env();
    for (name, s) in seeds("lproduct") {
        let l = parse_lproduct(&s, &env).unwrap_or_else(|e| panic!("{name}: {e}"));
        assert_eq!(parse_lproduct(&l.to_string(), &env).unwrap(), l, "{name}");
    }
}

#[test]
fn char_expr_seeds() {
    for (name, s) in seeds("char_expr") {
        parse_char_expr(&s).unwrap_or_else(|e| panic!("{name}: {e}"));
    }
}

#[test]
fn matrix_seeds() {
    for (name, s) in seeds("matrix_literal") {
        let m = parse_matrix(&s).unwrap_or_else(|e| panic!("{name}: {e}"));
        assert_eq!(parse_matrix(&format_matrix(&m)).unwrap(), m, "{name}");
    }
    for (name, s) in seeds("matrix_text") {
        let m = ExactMatrix::parse_text(&s).unwrap_or_else(|e| panic!("{name}: {e}"));
        assert_eq!(ExactMatrix::parse_text(&m.to_text()).unwrap(), m, "{name}");
    }
}
