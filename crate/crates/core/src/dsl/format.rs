use std::fmt::Write;

use super::ParamFile;
use crate::nilpotent::ExactMatrix;

pub fn matrix_literal(m: &ExactMatrix) -> String {
    let rows: Vec<String> = (0..m.rows())
        .map(|i| {
            let cells: Vec<String> = (0..m.cols()).map(|j| m.get(i, j).to_string()).collect();
            format!("[{}]", cells.join(", "))
        })
        .collect();
    format!("[{}]", rows.join(", "))
}

/// Canonical text of a parameter file. Parsing it gives back the same value.
pub fn format_param_file(p: &ParamFile) -> String {
    let mut s = String::new();
    let env = &p.env;
    let empty = env.generators.is_empty()
        && env.definitions.is_empty()
        && env.cusps.is_empty()
        && env.isos.is_empty()
        && env.dyadic_degree.is_none();
    if !empty {
        s.push_str("env {\n");
        for g in &env.generators {
            let _ = write!(s, "  gen {}", g.name);
            if let Some(n) = g.order {
                let _ = write!(s, " order {n}");
            }
            if g.ramified {
                s.push_str(" ramified");
            }
            s.push_str(";\n");
        }
        for (name, e) in &env.definitions {
            let _ = writeln!(s, "  def {name} = {e};");
        }
        for c in &env.cusps {
            let _ = write!(s, "  cusp {} dim {}", c.name, c.dim);
            if let Some(e) = &c.central {
                let _ = write!(s, " central {e}");
            }
            if let Some(k) = c.kind {
                let _ = write!(s, " kind {}", k.keyword());
            }
            if let Some(list) = &c.selftwists {
                let items: Vec<String> = list.iter().map(|e| e.to_string()).collect();
                let _ = write!(s, " selftwists {{{}}}", items.join(", "));
            }
            s.push_str(";\n");
        }
        for iso in &env.isos {
            let _ = write!(s, "  iso {} = {}", iso.lhs, iso.rhs);
            if !iso.twist.is_empty() {
                let _ = write!(s, " {}", iso.twist);
            }
            s.push_str(";\n");
        }
        if let Some(d) = env.dyadic_degree {
            let _ = writeln!(s, "  dyadic_degree {d};");
        }
        s.push_str("}\n");
    }
    match p.group.preset_name() {
        Some(name) => {
            let _ = writeln!(s, "group {name};");
        }
        None => {
            let g = p.group;
            let _ = writeln!(s, "group ({}, {}, {}, {});", g.m, g.n, g.r, g.s);
        }
    }
    if let Some(c) = &p.case {
        let _ = writeln!(s, "case \"{c}\";");
    }
    let _ = writeln!(s, "lift m = {};", p.lift_m);
    let _ = writeln!(s, "lift n = {};", p.lift_n);
    if let Some(m) = &p.monodromy_m {
        let _ = writeln!(s, "monodromy m = {};", matrix_literal(m));
    }
    if let Some(m) = &p.monodromy_n {
        let _ = writeln!(s, "monodromy n = {};", matrix_literal(m));
    }
    s
}

#[cfg(test)]
mod tests {
    use super::super::{parse_char_expr, parse_lproduct, parse_matrix, parse_param_file};
    use super::*;
    use crate::symbolic::RelationEnv;

    const SAMPLE: &str = r#"
env {
  gen chi;
  gen eta order 2 ramified;
  def chi2 = nu^(1/2) chi eta;
  cusp sigma dim 2 central chi^2 kind dihedral-1 selftwists {eta};
  cusp tau dim 2 selftwists {eta};
  iso tau = sigma chi;
}
group gspin4;
case "gspin4/test";
lift m = Q([nu^(-1/2) chi, nu^(1/2) chi]);
lift n = Q([sigma]);
monodromy m = [[0, 1], [0, 0]];
"#;

    #[test]
    fn sample_round_trips() {
        let p = parse_param_file(SAMPLE).unwrap();
        let text = format_param_file(&p);
        assert_eq!(parse_param_file(&text).unwrap(), p);
        assert_eq!(format_param_file(&parse_param_file(&text).unwrap()), text);
        assert_eq!(p.lift_m.to_string(), "Q([nu^(-1/2) chi, nu^(1/2) chi])");
    }

    #[test]
    fn errors_carry_positions() {
        let e = parse_param_file("group gspin4;\nlift m = Q([chi]);\nlift n = Q([chi]);").unwrap_err();
        assert_eq!((e.line, e.col), (2, 13));
        assert!(e.message.contains("unknown symbol"));
        let e = parse_param_file("env { gen a; }\ngroup gspin4;\nlift m = Q([a]);\nlift n = Q([a], [a]);").unwrap_err();
        assert_eq!((e.line, e.col), (3, 1));
        assert!(e.message.contains("dimension 1, expected 2"));
        let e = parse_param_file("env { gen a order 2; def b = c; }").unwrap_err();
        assert!(e.message.contains("unknown symbol `c`"), "{e}");
        let e = parse_param_file("env { gen a; }\ngroup spin5;").unwrap_err();
        assert_eq!((e.line, e.col), (2, 7));
    }

    #[test]
    fn lproduct_text() {
        let p = parse_param_file(SAMPLE).unwrap();
        let env = p.build_env();
        let l = parse_lproduct("L(s+1)^2 L(s, chi eta) L(s-1/2, sigma^v x chi) L(s, sigma, Ad)", &env).unwrap();
        assert_eq!(l.to_string(), "L(s-1/2, sigma^v x chi) L(s, chi eta) L(s, sigma, Ad) L(s+1)^2");
        assert_eq!(parse_lproduct(&l.to_string(), &env).unwrap(), l);
        assert!(parse_lproduct("L(s, psi)", &env).is_err());
        assert!(parse_lproduct("1", &env).unwrap().is_empty());
        let pair = parse_lproduct("L(s, sigma x tau^v)", &env).unwrap();
        assert_eq!(pair.to_string(), "L(s, chi^-1) L(s, sigma, Ad | chi^-1)");
        let _ = RelationEnv::empty();
    }

    #[test]
    fn small_parsers() {
        assert_eq!(parse_char_expr("nu^(1/2) a b^-2").unwrap().to_string(), "nu^(1/2) a b^-2");
        assert!(parse_char_expr("nu^(1/3)").is_err());
        let m = parse_matrix("[[0, 1/2], [-3, 0]]").unwrap();
        assert_eq!(format_matrix_roundtrip(&m), m);
        assert!(parse_matrix("[[0, 1], [0]]").is_err());
    }

    fn format_matrix_roundtrip(m: &ExactMatrix) -> ExactMatrix {
        parse_matrix(&matrix_literal(m)).unwrap()
    }
}
