//! Independent oracles. Each computes a value by a route that shares nothing
//! with the library path it checks, then compares; the frozen catalog values
//! are only trusted because they agree with these.

mod common;

use common::{cg_by_weights, conjugate_square_sum, int_rank, jordan_type, to_ints};
use gspin_core::catalog::{self, KERNEL_EQUATIONS};
use gspin_core::dsl::{parse_lproduct, parse_matrix, parse_param_file};
use gspin_core::gspin::adjoint;
use gspin_core::langlands::{Base, LanglandsDatum};
use gspin_core::lfunction::clebsch_gordan;
use gspin_core::nilpotent::{centralizer_dim_gl, jordan_block, ExactMatrix};
use gspin_core::symbolic::{CharExpr, RelationEnv};

fn partitions(n: usize, max: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = vec![];
    for first in (1..=n.min(max)).rev() {
        for mut rest in partitions(n - first, first) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}

#[test]
fn jordan_type_oracle_agrees_with_displayed_kernels() {
    let types: &[(&str, &[usize])] = &[
        ("N12", &[2, 1, 1]),
        ("N23", &[2, 1, 1]),
        ("N34", &[2, 1, 1]),
        ("N1223", &[3, 1]),
        ("N1234", &[2, 2]),
        ("N122334", &[4]),
        ("N1324", &[2, 2]),
        ("N2334", &[3, 1]),
    ];
    assert_eq!(types.len(), KERNEL_EQUATIONS.len());
    for (k, (id, lambda)) in KERNEL_EQUATIONS.iter().zip(types) {
        assert_eq!(k.id, *id);
        let n = parse_matrix(k.matrix).unwrap();
        assert_eq!(jordan_type(&to_ints(&n)), lambda.to_vec(), "{id}");
        let oracle = conjugate_square_sum(lambda);
        assert_eq!(k.dim, oracle, "{id}: displayed generator count vs oracle");
        assert_eq!(centralizer_dim_gl(&n).unwrap(), oracle, "{id}: library");
    }
}

#[test]
fn centralizer_dimension_matches_partition_formula() {
    for n in 1..=5 {
        for lambda in partitions(n, n) {
            let blocks: Vec<ExactMatrix> = lambda.iter().map(|&l| jordan_block(l, 1)).collect();
            let nil = ExactMatrix::direct_sum(&blocks);
            assert_eq!(jordan_type(&to_ints(&nil)), lambda);
            assert_eq!(centralizer_dim_gl(&nil).unwrap(), conjugate_square_sum(&lambda), "{lambda:?}");
        }
    }
}

#[test]
fn clebsch_gordan_matches_weight_tensoring() {
    for r1 in 1..=6u32 {
        for r2 in 1..=6u32 {
            let parts = cg_by_weights(r1, r2);
            let mut lib = clebsch_gordan(r1, r2);
            lib.sort_unstable();
            assert_eq!(lib, parts, "sp({r1}) x sp({r2})");
        }
    }
}

/// One basis vector of the standard representation: its character (without
/// `nu`) and its Frobenius weight in halves.
struct Vector {
    label: CharExpr,
    weight: i64,
}

type Edges = Vec<(usize, usize)>;

/// Basis in segment order; inside a segment the weights decrease by one, so
/// that `N = sum E_{k,k+1}` raises weight by one and kills the top vector.
fn basis(d: &LanglandsDatum, env: &RelationEnv) -> Option<(Vec<Vector>, Edges)> {
    let mut vs = vec![];
    let mut edges = vec![];
    for seg in &d.segments {
        let Base::Char(c) = &seg.base else { return None };
        let c = env.normalize(c).unwrap();
        let shift = c.nu.halves();
        let label = c.without_nu();
        let len = ((seg.e.halves() - seg.b.halves()) / 2 + 1) as usize;
        for k in 0..len {
            if k > 0 {
                edges.push((vs.len() - 1, vs.len()));
            }
            vs.push(Vector { label: label.clone(), weight: seg.e.halves() + shift - 2 * k as i64 });
        }
    }
    Some((vs, edges))
}

fn shift_text(halves: i64) -> String {
    match (halves.signum(), halves % 2 == 0) {
        (0, _) => "s".into(),
        (1, true) => format!("s+{}", halves / 2),
        (1, false) => format!("s+{halves}/2"),
        (_, true) => format!("s-{}", -halves / 2),
        (_, false) => format!("s-{}/2", -halves),
    }
}

/// `L(s, Ad)` for GL(n) from `ker ad N` split by label and weight, minus one `L(s)`.
fn adjoint_oracle(d: &LanglandsDatum, env: &RelationEnv) -> Option<Vec<String>> {
    let (vs, edges) = basis(d, env)?;
    let n = vs.len();
    // [N, E_ij] = sum over edges (k, k+1): E_{k,j} if k+1 = i, minus E_{i,k+1} if k = j.
    let mut groups: std::collections::BTreeMap<(String, i64), Vec<(usize, usize)>> = Default::default();
    for i in 0..n {
        for j in 0..n {
            let label = env.normalize(&vs[i].label.div(&vs[j].label)).unwrap();
            groups.entry((label.to_string(), vs[i].weight - vs[j].weight)).or_default().push((i, j));
        }
    }
    let mut factors = vec![];
    let mut removed = false;
    for ((label, w), block) in groups {
        let image: Vec<Vec<i128>> = block
            .iter()
            .map(|&(i, j)| {
                let mut col = vec![0i128; n * n];
                for &(k, k1) in &edges {
                    if k1 == i {
                        col[k * n + j] += 1;
                    }
                    if k == j {
                        col[i * n + k1] -= 1;
                    }
                }
                col
            })
            .collect();
        let mut kernel = block.len() - int_rank(image);
        if !removed && label == "1" && w == 0 {
            kernel -= 1;
            removed = true;
        }
        for _ in 0..kernel {
            factors.push(if label == "1" {
                format!("L({})", shift_text(w))
            } else {
                format!("L({}, {label})", shift_text(w))
            });
        }
    }
    assert!(removed);
    Some(factors)
}

#[test]
fn character_rows_match_weight_space_oracle() {
    let mut checked = vec![];
    for e in catalog::entries() {
        let p = parse_param_file(e.source).unwrap();
        let rep = p.to_rep();
        let env = &rep.env;
        let (Some(m), Some(n)) = (adjoint_oracle(&rep.lift_m, env), adjoint_oracle(&rep.lift_n, env)) else {
            continue;
        };
        let text = if m.is_empty() && n.is_empty() { "1".to_string() } else { [m, n].concat().join(" ") };
        let oracle = parse_lproduct(&text, env).unwrap().to_string();
        assert_eq!(adjoint(&rep, false).unwrap().to_string(), oracle, "{}: library", e.id);
        let expected = parse_lproduct(e.expected_lproduct(), env).unwrap().to_string();
        assert_eq!(expected, oracle, "{}: catalog expectation", e.id);
        checked.push(e.id);
    }
    for id in ["gspin6/nongnr/A3", "gspin6/nongnr/A6", "gspin6/nongnr/A7", "gspin6/nongnr/A9", "gspin6/nongnr/A11", "gspin4/gnr/i"] {
        assert!(checked.contains(&id), "{id} not covered");
    }
}

#[test]
fn int_rank_sanity() {
    assert_eq!(int_rank(vec![vec![1, 2], vec![2, 4]]), 1);
    assert_eq!(int_rank(vec![vec![0, 1, 0], vec![0, 0, 1], vec![1, 0, 0]]), 3);
    assert_eq!(jordan_type(&[vec![0, 1, 0], vec![0, 0, 1], vec![0, 0, 0]]), vec![3]);
}
