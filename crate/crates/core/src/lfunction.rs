//! Formal products of local L-factors attached to Weil–Deligne parameters.
//!
//! Convention: `L(s, ρ ⊗ sp(k)) = L(s + (k-1)/2, ρ)` and `L(s, ρ ⊗ nu^x) = L(s + x, ρ)`.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use serde::Serialize;

use crate::half::Half;
use crate::langlands::{Base, DataError, WdParam, WdPiece};
use crate::symbolic::{CharExpr, RelationEnv, SymbolError};

/// A cuspidal symbol or its contragredient.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct CuspRef {
    pub symbol: String,
    pub dual: bool,
}

impl fmt::Display for CuspRef {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.symbol)?;
        if self.dual {
            f.write_str("^v")?;
        }
        Ok(())
    }
}

/// One local factor. Twists never carry `nu`: it is folded into `shift`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum LFactor {
    /// `L(s + shift, expr)` for a character.
    CharFactor { shift: Half, expr: CharExpr },
    /// `L(s + shift, left × right × twist)` where `right` may be absent.
    CuspPair { shift: Half, left: CuspRef, right: Option<CuspRef>, twist: CharExpr },
    /// `L(s + shift, Ad(symbol) ⊗ twist)`.
    CuspAd { shift: Half, symbol: String, twist: CharExpr },
}

impl LFactor {
    pub fn char(shift: Half, expr: CharExpr) -> LFactor {
        LFactor::CharFactor { shift, expr }
    }

    pub fn shift(&self) -> Half {
        match self {
            LFactor::CharFactor { shift, .. } | LFactor::CuspPair { shift, .. } | LFactor::CuspAd { shift, .. } => *shift,
        }
    }

    fn rank(&self) -> u8 {
        match self {
            LFactor::CharFactor { .. } => 0,
            LFactor::CuspPair { .. } => 1,
            LFactor::CuspAd { .. } => 2,
        }
    }

    pub fn kind_name(&self) -> &'static str {
        match self {
            LFactor::CharFactor { .. } => "char",
            LFactor::CuspPair { .. } => "cusp_pair",
            LFactor::CuspAd { .. } => "cusp_ad",
        }
    }

    /// The argument after `s + shift`, as printed.
    pub fn argument(&self) -> String {
        match self {
            LFactor::CharFactor { expr, .. } => {
                if expr.is_empty() {
                    String::new()
                } else {
                    expr.to_string()
                }
            }
            LFactor::CuspPair { left, right, twist, .. } => {
                let mut s = left.to_string();
                if let Some(r) = right {
                    s.push_str(&format!(" x {r}"));
                }
                if !twist.is_empty() {
                    s.push_str(&format!(" x {twist}"));
                }
                s
            }
            LFactor::CuspAd { symbol, twist, .. } => {
                if twist.is_empty() {
                    format!("{symbol}, Ad")
                } else {
                    format!("{symbol}, Ad | {twist}")
                }
            }
        }
    }

    /// Put `nu` into the shift, reduce twists, order the two sides of a pair,
    /// and split a pair `ρ × (ρ ⊗ χ)^v` into `L(χ^-1) L(Ad ρ ⊗ χ^-1)`.
    pub fn canonical(&self, env: &RelationEnv) -> Result<Vec<LFactor>, SymbolError> {
        Ok(match self {
            LFactor::CharFactor { shift, expr } => {
                let n = env.normalize(expr)?;
                vec![LFactor::CharFactor { shift: *shift + n.nu, expr: n.without_nu() }]
            }
            LFactor::CuspAd { shift, symbol, twist } => {
                let n = env.normalize(twist)?;
                let root = env.class_root(symbol)?.to_string();
                vec![LFactor::CuspAd { shift: *shift + n.nu, symbol: root, twist: n.without_nu() }]
            }
            LFactor::CuspPair { shift, left, right, twist } => {
                env.cusp(&left.symbol)?;
                let n = env.normalize(twist)?;
                let shift = *shift + n.nu;
                let twist = n.without_nu();
                match right {
                    None => vec![LFactor::CuspPair { shift, left: left.clone(), right: None, twist }],
                    Some(right) => {
                        env.cusp(&right.symbol)?;
                        if left.dual != right.dual {
                            let (plain, dual) = if left.dual { (right, left) } else { (left, right) };
                            // plain ⊗ twist ⊗ dual^v, and dual ≅ plain ⊗ twist ⊗ chi
                            if let Some(chi) = env.cusp_equiv(&plain.symbol, &twist, &dual.symbol, &CharExpr::trivial())? {
                                let c = chi.inv();
                                let sh = shift + c.nu;
                                let c = c.without_nu();
                                let root = env.class_root(&plain.symbol)?.to_string();
                                return Ok(vec![
                                    LFactor::CharFactor { shift: sh, expr: c.clone() },
                                    LFactor::CuspAd { shift: sh, symbol: root, twist: c },
                                ]);
                            }
                        }
                        let (l, r) = if right < left { (right.clone(), left.clone()) } else { (left.clone(), right.clone()) };
                        vec![LFactor::CuspPair { shift, left: l, right: Some(r), twist }]
                    }
                }
            }
        })
    }

    /// Order of the pole at `s = 1`, assuming generic position.
    pub fn pole_at_one(&self, env: &RelationEnv) -> Result<u32, SymbolError> {
        Ok(match self {
            LFactor::CharFactor { shift, expr } => {
                let n = env.normalize(expr)?;
                let t = *shift + n.nu;
                u32::from(n.is_pure_nu() && env.is_unramified(&n)? && t == -Half::ONE)
            }
            LFactor::CuspPair { shift, left, right: Some(right), twist } if left.dual != right.dual => {
                let (plain, dual) = if left.dual { (right, left) } else { (left, right) };
                let target = CharExpr::nu(Half::ONE + *shift);
                let coset = env.cusp_coset(&plain.symbol, twist, &dual.symbol, &CharExpr::trivial())?;
                u32::from(coset.is_some_and(|c| c.contains(&target)))
            }
            LFactor::CuspPair { .. } | LFactor::CuspAd { .. } => 0,
        })
    }

    /// Degree of the factor as a polynomial in `q^-s`, in generic position.
    pub fn unramified_degree(&self, env: &RelationEnv) -> Result<u32, SymbolError> {
        Ok(match self {
            LFactor::CharFactor { expr, .. } => u32::from(env.is_unramified(expr)?),
            _ => 0,
        })
    }
}

fn fmt_shift(shift: Half, f: &mut fmt::Formatter<'_>) -> fmt::Result {
    if shift.is_zero() {
        f.write_str("s")
    } else if shift > Half::ZERO {
        write!(f, "s+{shift}")
    } else {
        write!(f, "s-{}", -shift)
    }
}

impl fmt::Display for LFactor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("L(")?;
        fmt_shift(self.shift(), f)?;
        let arg = self.argument();
        if !arg.is_empty() {
            write!(f, ", {arg}")?;
        }
        f.write_str(")")
    }
}

impl Ord for LFactor {
    fn cmp(&self, other: &LFactor) -> Ordering {
        self.shift()
            .cmp(&other.shift())
            .then(self.rank().cmp(&other.rank()))
            .then_with(|| self.argument().cmp(&other.argument()))
            .then_with(|| format!("{self:?}").cmp(&format!("{other:?}")))
    }
}

impl PartialOrd for LFactor {
    fn partial_cmp(&self, other: &LFactor) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// A multiset of factors.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct LProduct {
    factors: BTreeMap<LFactor, u32>,
}

impl LProduct {
    pub fn new() -> LProduct {
        LProduct::default()
    }

    /// Insert without canonicalizing.
    pub fn push(&mut self, f: LFactor, mult: u32) {
        if mult > 0 {
            *self.factors.entry(f).or_insert(0) += mult;
        }
    }

    pub fn insert(&mut self, f: &LFactor, mult: u32, env: &RelationEnv) -> Result<(), SymbolError> {
        for c in f.canonical(env)? {
            self.push(c, mult);
        }
        Ok(())
    }

    /// Remove one copy. Returns whether it was present.
    pub fn remove_one(&mut self, f: &LFactor) -> bool {
        match self.factors.get_mut(f) {
            Some(m) if *m > 1 => {
                *m -= 1;
                true
            }
            Some(_) => {
                self.factors.remove(f);
                true
            }
            None => false,
        }
    }

    pub fn union(&self, other: &LProduct) -> LProduct {
        let mut out = self.clone();
        for (f, m) in &other.factors {
            out.push(f.clone(), *m);
        }
        out
    }

    pub fn iter(&self) -> impl Iterator<Item = (&LFactor, u32)> {
        self.factors.iter().map(|(f, m)| (f, *m))
    }

    /// Number of factors counted with multiplicity.
    pub fn count(&self) -> u32 {
        self.factors.values().sum()
    }

    pub fn is_empty(&self) -> bool {
        self.factors.is_empty()
    }

    pub fn canonical(&self, env: &RelationEnv) -> Result<LProduct, SymbolError> {
        let mut out = LProduct::new();
        for (f, m) in &self.factors {
            out.insert(f, *m, env)?;
        }
        Ok(out)
    }

    pub fn pole_order_at_one(&self, env: &RelationEnv) -> Result<u32, SymbolError> {
        let mut n = 0;
        for (f, m) in &self.factors {
            n += m * f.pole_at_one(env)?;
        }
        Ok(n)
    }

    pub fn unramified_degree(&self, env: &RelationEnv) -> Result<u32, SymbolError> {
        let mut n = 0;
        for (f, m) in &self.factors {
            n += m * f.unramified_degree(env)?;
        }
        Ok(n)
    }

    /// One record per distinct factor.
    pub fn records(&self) -> Vec<FactorRecord> {
        self.iter()
            .map(|(f, m)| FactorRecord {
                kind: f.kind_name(),
                shift: f.shift(),
                argument: f.argument(),
                multiplicity: m,
                text: f.to_string(),
            })
            .collect()
    }
}

impl fmt::Display for LProduct {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.factors.is_empty() {
            return f.write_str("1");
        }
        for (i, (fac, m)) in self.factors.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{fac}")?;
            if *m > 1 {
                write!(f, "^{m}")?;
            }
        }
        Ok(())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FactorRecord {
    pub kind: &'static str,
    pub shift: Half,
    pub argument: String,
    pub multiplicity: u32,
    pub text: String,
}

/// `sp(r) ⊗ sp(r') = ⊕ sp(k)`.
pub fn clebsch_gordan(r1: u32, r2: u32) -> Vec<u32> {
    if r1 == 0 || r2 == 0 {
        return vec![];
    }
    (r1.abs_diff(r2) + 1..=r1 + r2 - 1).step_by(2).collect()
}

/// A constituent `factor`-base tensored with `sp(k)`, kept for dimension counts.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Summand {
    pub factor: LFactor,
    pub k: u32,
    /// Dimension of the constituent, including `sp(k)`.
    pub dim: u32,
}

enum Rep {
    Char(CharExpr),
    Cusp(CuspRef, CharExpr),
}

fn rep_of(base: &Base, dual: bool) -> Rep {
    match base {
        Base::Char(e) => Rep::Char(if dual { e.inv() } else { e.clone() }),
        Base::Cusp { symbol, twist } => {
            Rep::Cusp(CuspRef { symbol: symbol.clone(), dual }, if dual { twist.inv() } else { twist.clone() })
        }
    }
}

fn tensor(x: Rep, y: Rep, shift: Half) -> LFactor {
    match (x, y) {
        (Rep::Char(a), Rep::Char(b)) => LFactor::CharFactor { shift, expr: a.mul(&b) },
        (Rep::Char(a), Rep::Cusp(r, t)) | (Rep::Cusp(r, t), Rep::Char(a)) => {
            LFactor::CuspPair { shift, left: r, right: None, twist: t.mul(&a) }
        }
        (Rep::Cusp(r1, t1), Rep::Cusp(r2, t2)) => LFactor::CuspPair { shift, left: r1, right: Some(r2), twist: t1.mul(&t2) },
    }
}

fn piece_terms(p: &WdPiece, q: &WdPiece, dual_q: bool, env: &RelationEnv) -> Result<Vec<Summand>, DataError> {
    let mut out = Vec::new();
    let d = p.base.dim(env)? * q.base.dim(env)?;
    let c = if dual_q { p.a - q.a } else { p.a + q.a };
    for k in clebsch_gordan(p.r, q.r) {
        let shift = c + Half::from_halves(k as i64 - 1);
        let raw = tensor(rep_of(&p.base, false), rep_of(&q.base, dual_q), shift);
        let parts = raw.canonical(env)?;
        if parts.len() == 2 {
            // 1 + Ad
            let ad_dim = d - 1;
            out.push(Summand { factor: parts[0].clone(), k, dim: k });
            out.push(Summand { factor: parts[1].clone(), k, dim: ad_dim * k });
        } else {
            out.push(Summand { factor: parts[0].clone(), k, dim: d * k });
        }
    }
    Ok(out)
}

fn normalized(p: &WdParam, env: &RelationEnv) -> Result<WdParam, DataError> {
    p.to_datum()?.to_parameter(env)
}

/// Constituents of `φ ⊗ φ'^v`, with the dimension of each.
pub fn rankin_selberg_terms(p: &WdParam, q: &WdParam, env: &RelationEnv) -> Result<Vec<Summand>, DataError> {
    let p = normalized(p, env)?;
    let q = normalized(q, env)?;
    let mut out = Vec::new();
    for a in &p.pieces {
        for b in &q.pieces {
            out.extend(piece_terms(a, b, true, env)?);
        }
    }
    Ok(out)
}

/// `L(s, φ × φ'^v)`.
pub fn rankin_selberg(p: &WdParam, q: &WdParam, env: &RelationEnv) -> Result<LProduct, DataError> {
    let mut out = LProduct::new();
    for t in rankin_selberg_terms(p, q, env)? {
        out.push(t.factor, 1);
    }
    Ok(out)
}

/// `L(s, φ ⊗ φ')` without the contragredient.
pub fn tensor_product(p: &WdParam, q: &WdParam, env: &RelationEnv) -> Result<LProduct, DataError> {
    let p = normalized(p, env)?;
    let q = normalized(q, env)?;
    let mut out = LProduct::new();
    for a in &p.pieces {
        for b in &q.pieces {
            for t in piece_terms(a, b, false, env)? {
                out.push(t.factor, 1);
            }
        }
    }
    Ok(out)
}

/// `L(s, φ, Ad)` for GL(n): `φ ⊗ φ^v` minus one trivial factor.
pub fn adjoint_gl(p: &WdParam, env: &RelationEnv) -> Result<LProduct, DataError> {
    let mut out = rankin_selberg(p, p, env)?;
    let removed = out.remove_one(&LFactor::char(Half::ZERO, CharExpr::trivial()));
    debug_assert!(removed, "φ ⊗ φ^v contains the trivial character");
    Ok(out)
}

/// Adjoint L-function of the pair `(φ_m, φ_n)` on the dual group. With
/// `full`, the extra trivial factor from the similitude centre is included.
pub fn adjoint_g(pm: &WdParam, pn: &WdParam, full: bool, env: &RelationEnv) -> Result<LProduct, DataError> {
    let mut out = adjoint_gl(pm, env)?.union(&adjoint_gl(pn, env)?);
    if full {
        out.push(LFactor::char(Half::ZERO, CharExpr::trivial()), 1);
    }
    Ok(out)
}
