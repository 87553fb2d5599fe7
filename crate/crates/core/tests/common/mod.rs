//! Random parameter files for property tests and the acceptance run.

#![allow(dead_code)]

use gspin_core::nilpotent::ExactMatrix;
use num_traits::ToPrimitive;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

/// Bases a segment may use, with their dimension.
const BASES: &[(&str, u32)] = &[("a", 1), ("b", 1), ("a e", 1), ("b^-1", 1), ("r", 2), ("t", 2), ("r a", 2)];

const ENV: &str = "env {\n  gen a;\n  gen b;\n  gen e order 2 ramified;\n  cusp r dim 2;\n  cusp t dim 2 selftwists {e};\n}\n";

pub fn rng(seed: u64) -> StdRng {
    StdRng::seed_from_u64(seed)
}

/// `nu^t` for `t = halves / 2`, as the parser writes it.
pub fn nu_power(halves: i64) -> String {
    match (halves % 2 == 0, halves / 2) {
        (true, 0) => String::new(),
        (true, 1) => "nu ".into(),
        (true, k) => format!("nu^{k} "),
        (false, _) => format!("nu^({halves}/2) "),
    }
}

fn segments(rng: &mut StdRng, dim: u32, unramified: bool) -> String {
    let mut rem = dim;
    let mut out = vec![];
    while rem > 0 {
        let choices: Vec<_> =
            BASES.iter().filter(|(b, d)| *d <= rem && (!unramified || !b.contains(['e', 'r', 't']))).collect();
        let (base, d) = choices[rng.random_range(0..choices.len())];
        let len = rng.random_range(1..=(rem / d).min(3)) as i64;
        let b = rng.random_range(-4..=4i64);
        let e = b + 2 * (len - 1);
        out.push(if len == 1 {
            format!("[{}{base}]", nu_power(b))
        } else {
            format!("[{}{base}, {}{base}]", nu_power(b), nu_power(e))
        });
        rem -= d * len as u32;
    }
    format!("Q({})", out.join(", "))
}

/// A random parameter file for `gspin4` or `gspin6`.
pub fn random_source(rng: &mut StdRng, group: &str) -> String {
    source(rng, group, false)
}

/// Same, with unramified characters only.
pub fn random_unramified_source(rng: &mut StdRng, group: &str) -> String {
    source(rng, group, true)
}

fn source(rng: &mut StdRng, group: &str, unramified: bool) -> String {
    let (m, n) = if group == "gspin4" { (2, 2) } else { (1, 4) };
    format!(
        "{ENV}group {group};\nlift m = {};\nlift n = {};\n",
        segments(rng, m, unramified),
        segments(rng, n, unramified)
    )
}

/// Rank of a small integer matrix by fraction-free elimination.
pub fn int_rank(mut m: Vec<Vec<i128>>) -> usize {
    let cols = m.first().map_or(0, |r| r.len());
    let mut rank = 0;
    let mut prev = 1i128;
    for c in 0..cols {
        let Some(p) = (rank..m.len()).find(|&i| m[i][c] != 0) else { continue };
        m.swap(rank, p);
        for i in rank + 1..m.len() {
            for j in c + 1..cols {
                m[i][j] = (m[rank][c] * m[i][j] - m[i][c] * m[rank][j]) / prev;
            }
            m[i][c] = 0;
        }
        prev = m[rank][c];
        rank += 1;
    }
    rank
}

pub fn to_ints(m: &ExactMatrix) -> Vec<Vec<i128>> {
    (0..m.rows())
        .map(|i| (0..m.cols()).map(|j| m.get(i, j).to_integer().to_i128().unwrap()).collect())
        .collect()
}

pub fn int_mul(a: &[Vec<i128>], b: &[Vec<i128>]) -> Vec<Vec<i128>> {
    let n = a.len();
    (0..n).map(|i| (0..n).map(|j| (0..n).map(|k| a[i][k] * b[k][j]).sum()).collect()).collect()
}

/// Jordan type of a nilpotent from the ranks of its powers.
pub fn jordan_type(n: &[Vec<i128>]) -> Vec<usize> {
    let size = n.len();
    let mut ranks = vec![size];
    let mut p = n.to_vec();
    while *ranks.last().unwrap() > 0 {
        ranks.push(int_rank(p.clone()));
        p = int_mul(&p, n);
    }
    // number of blocks of size >= k is rank(N^{k-1}) - rank(N^k)
    let at_least: Vec<usize> = ranks.windows(2).map(|w| w[0] - w[1]).collect();
    let mut parts = vec![];
    for k in 0..at_least.len() {
        let next = at_least.get(k + 1).copied().unwrap_or(0);
        parts.extend(std::iter::repeat_n(k + 1, at_least[k] - next));
    }
    parts.sort_unstable_by(|a, b| b.cmp(a));
    parts
}

/// `sum (lambda'_i)^2`, the centralizer dimension of a nilpotent of type `lambda` in `gl`.
pub fn conjugate_square_sum(lambda: &[usize]) -> usize {
    let top = lambda.iter().copied().max().unwrap_or(0);
    (1..=top).map(|i| lambda.iter().filter(|&&l| l >= i).count().pow(2)).sum()
}

/// `sp(r1) x sp(r2)` split into `sp(k)` by peeling highest weights off the
/// tensor product of the weight multisets. Sorted.
pub fn cg_by_weights(r1: u32, r2: u32) -> Vec<u32> {
    let weights = |r: u32| (0..r).map(move |i| r as i64 - 1 - 2 * i as i64);
    let mut multiset: Vec<i64> = weights(r1).flat_map(|a| weights(r2).map(move |b| a + b)).collect();
    let mut parts = vec![];
    while let Some(&top) = multiset.iter().max() {
        parts.push(top as u32 + 1);
        let mut w = top;
        while w >= -top {
            let at = multiset.iter().position(|&x| x == w).expect("string of weights");
            multiset.swap_remove(at);
            w -= 2;
        }
    }
    parts.sort_unstable();
    parts
}
