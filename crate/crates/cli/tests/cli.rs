use std::path::PathBuf;
use std::process::{Command, Output};

fn fixture(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/fixtures").join(name)
}

fn gspin(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_gspin")).args(args).output().expect("spawn gspin")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn structured(args: &[&str]) -> (serde_json::Value, i32) {
    let mut all = vec!["--format", "structured"];
    all.extend_from_slice(args);
    let o = gspin(&all);
    (serde_json::from_slice(&o.stdout).expect("json on stdout"), o.status.code().unwrap())
}

#[test]
fn adjoint_of_steinberg_pair() {
    let f = fixture("gspin4_gnr_i.gsp");
    let o = gspin(&["adjoint", f.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("L(s, pi, Ad) = L(s+1)^2\n"));
    let (v, code) = structured(&["adjoint", f.to_str().unwrap()]);
    assert_eq!(code, 0);
    assert_eq!(v["lproduct"], "L(s+1)^2");
    assert_eq!(v["ord"], 0);
    assert_eq!(v["full"], "L(s) L(s+1)^2");
}

#[test]
fn nongeneric_verdict() {
    let (v, code) = structured(&["generic", fixture("gspin4_nongnr_sc.gsp").to_str().unwrap()]);
    assert_eq!(code, 0);
    assert_eq!(v["verdict"]["generic"], false);
    assert_eq!(v["verdict"]["pole_order"], 1);
    assert_eq!(v["verdict"]["consistent"], true);
    assert_eq!(v["lifts"][0]["linked"][0], "[nu^(1/2) chi]");
}

#[test]
fn dihedral3_packet_has_four_members() {
    let (v, code) = structured(&["packet", fixture("gspin4_gnr_a-dihedral3.gsp").to_str().unwrap()]);
    assert_eq!(code, 0);
    assert_eq!(v["size"], 4);
    assert_eq!(v["structure"], "(Z/2)^2");
    let (v, _) = structured(&["packet", fixture("gspin6_gnr_a-z2x2.gsp").to_str().unwrap()]);
    assert_eq!(v["size"], 4);
    assert!(v["bound"].as_str().unwrap().contains("<= 2^(1+2) = 8"));
}

#[test]
fn nilpotent_embeds_and_counts() {
    let (v, code) = structured(&["nilpotent", fixture("gspin6_nongnr_A9.gsp").to_str().unwrap()]);
    assert_eq!(code, 0);
    assert_eq!(v["kernel_dim"], 8);
    assert_eq!(v["degree"]["l_degree"], 8);
    assert_eq!(v["embedded"][1][2], "1");
    assert_eq!(v["embedded"][3][4], "-1");
}

#[test]
fn verify_tables_filtered() {
    let o = gspin(&["verify-tables", "--filter", "gspin6/nongnr/A*"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(text.ends_with("11 checked: 4 pass, 7 erratum, 0 fail\n"), "{text}");
    let (v, code) = structured(&["verify-tables", "--filter", "kernel/*"]);
    assert_eq!(code, 0);
    assert_eq!(v["entries"].as_array().unwrap().len(), 8);
    assert_eq!(v["pass"], 8);
}

#[test]
fn verify_tables_rejects_empty_and_bad_filters() {
    assert_eq!(gspin(&["verify-tables", "--filter", "nothing/*"]).status.code(), Some(2));
    assert_eq!(gspin(&["verify-tables", "--filter", "[a"]).status.code(), Some(2));
}

#[test]
fn catalog_round_trips_through_the_cli() {
    let o = gspin(&["catalog", "--filter", "gspin4/*"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).lines().count(), 16);
    let o = gspin(&["catalog", "gspin4/gnr/i"]);
    assert_eq!(stdout(&o), std::fs::read_to_string(fixture("gspin4_gnr_i.gsp")).unwrap());
    assert_eq!(gspin(&["catalog", "gspin9/x"]).status.code(), Some(2));
}

#[test]
fn malformed_files_exit_2_with_positions() {
    let cases = [
        ("unknown_symbol.gsp", "6:13: unknown symbol `psi`"),
        ("missing_semicolon.gsp", "2:1: expected `;`"),
        ("third_denominator.gsp", "5:17:"),
        ("wrong_dimension.gsp", "6:1: lift n has dimension 2, expected 4"),
        ("unterminated.gsp", "2:6: unterminated string"),
    ];
    for (name, want) in cases {
        let f = fixture(&format!("malformed/{name}"));
        for cmd in ["adjoint", "generic", "packet", "nilpotent"] {
            let o = gspin(&[cmd, f.to_str().unwrap()]);
            assert_eq!(o.status.code(), Some(2), "{cmd} {name}");
            let err = String::from_utf8_lossy(&o.stderr);
            assert!(err.contains(want), "{cmd} {name}: {err}");
        }
        let (v, code) = structured(&["adjoint", f.to_str().unwrap()]);
        assert_eq!(code, 2);
        assert_eq!(v["error"], "validation");
    }
}

#[test]
fn inconsistent_monodromy_is_a_validation_error() {
    let o = gspin(&["nilpotent", fixture("malformed/bad_monodromy.gsp").to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("which gives [[0, 1], [0, 0]]"));
}

#[test]
fn missing_file_and_usage_errors() {
    assert_eq!(gspin(&["adjoint", "/nonexistent/x.gsp"]).status.code(), Some(2));
    assert_eq!(gspin(&["frobnicate"]).status.code(), Some(2));
}

#[test]
fn structured_output_is_stable() {
    let a = gspin(&["--format", "structured", "verify-tables"]);
    let b = gspin(&["--format", "structured", "verify-tables"]);
    assert_eq!(a.stdout, b.stdout);
}
