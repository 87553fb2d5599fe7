//! Segments, Langlands data and Weil–Deligne parameters for GL(n).

use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::half::Half;
use crate::symbolic::{CharExpr, RelationEnv, SymbolError};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum DataError {
    #[error(transparent)]
    Symbol(#[from] SymbolError),
    #[error("segment [{b}, {e}] must have e - b a non-negative integer")]
    BadSegment { b: Half, e: Half },
    #[error("piece with r = 0")]
    EmptyPiece,
}

/// Cuspidal support of a segment, without its `nu` exponent.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Base {
    Char(CharExpr),
    Cusp { symbol: String, twist: CharExpr },
}

impl Base {
    pub fn char(e: CharExpr) -> Base {
        Base::Char(e)
    }

    pub fn cusp(symbol: &str) -> Base {
        Base::Cusp { symbol: symbol.into(), twist: CharExpr::trivial() }
    }

    pub fn dim(&self, env: &RelationEnv) -> Result<u32, DataError> {
        Ok(match self {
            Base::Char(_) => 1,
            Base::Cusp { symbol, .. } => env.cusp(symbol)?.dim,
        })
    }

    /// Split into a normalized base without `nu` and the `nu` exponent.
    pub fn normalize(&self, env: &RelationEnv) -> Result<(Base, Half), DataError> {
        Ok(match self {
            Base::Char(e) => {
                let n = env.normalize(e)?;
                (Base::Char(n.without_nu()), n.nu)
            }
            Base::Cusp { symbol, twist } => {
                env.cusp(symbol)?;
                let n = env.normalize(twist)?;
                (Base::Cusp { symbol: symbol.clone(), twist: n.without_nu() }, n.nu)
            }
        })
    }

    pub fn twisted(&self, chi: &CharExpr) -> Base {
        match self {
            Base::Char(e) => Base::Char(e.mul(chi)),
            Base::Cusp { symbol, twist } => Base::Cusp { symbol: symbol.clone(), twist: twist.mul(chi) },
        }
    }

    /// Central character.
    pub fn central(&self, env: &RelationEnv) -> Result<CharExpr, DataError> {
        Ok(match self {
            Base::Char(e) => e.clone(),
            Base::Cusp { symbol, twist } => {
                let c = env.cusp(symbol)?;
                c.central.mul(&twist.pow(c.dim as i64))
            }
        })
    }

    /// Class-invariant key: for cuspidal bases the symbol is replaced by its
    /// class root and the twist by the simplest member of its coset.
    fn canonical(&self, env: &RelationEnv) -> Result<(Base, Half), DataError> {
        let (b, t) = self.normalize(env)?;
        match b {
            Base::Char(_) => Ok((b, t)),
            Base::Cusp { symbol, twist } => {
                let root = env.class_root(&symbol)?.to_string();
                let chi = env
                    .cusp_equiv(&root, &CharExpr::trivial(), &symbol, &twist)?
                    .expect("symbol lies in its own class");
                Ok((Base::Cusp { symbol: root, twist: chi.without_nu() }, t + chi.nu))
            }
        }
    }

    /// Characters `chi` with `other ≅ self ⊗ chi`. Empty if none.
    pub fn connecting(&self, other: &Base, env: &RelationEnv) -> Result<Vec<CharExpr>, DataError> {
        Ok(match (self, other) {
            (Base::Char(a), Base::Char(b)) => vec![env.normalize(&b.div(a))?],
            (Base::Cusp { symbol: s1, twist: t1 }, Base::Cusp { symbol: s2, twist: t2 }) => {
                env.cusp_coset(s1, t1, s2, t2)?.unwrap_or_default()
            }
            _ => vec![],
        })
    }

    /// Write `nu^t` times this base.
    pub fn fmt_at(&self, t: Half, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Base::Char(e) => write!(f, "{}", e.mul(&CharExpr::nu(t))),
            Base::Cusp { symbol, twist } => {
                let nu = CharExpr::nu(t);
                if !t.is_zero() {
                    write!(f, "{nu} ")?;
                }
                f.write_str(symbol)?;
                if !twist.is_empty() {
                    write!(f, " {twist}")?;
                }
                Ok(())
            }
        }
    }
}

/// The segment `[nu^b base, nu^e base]`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Segment {
    pub base: Base,
    pub b: Half,
    pub e: Half,
}

#[allow(clippy::len_without_is_empty)]
impl Segment {
    pub fn new(base: Base, b: Half, e: Half) -> Result<Segment, DataError> {
        if !(e - b).is_integer() || e < b {
            return Err(DataError::BadSegment { b, e });
        }
        Ok(Segment { base, b, e })
    }

    pub fn point(base: Base) -> Segment {
        Segment { base, b: Half::ZERO, e: Half::ZERO }
    }

    /// Segment of length `len` centred at `center`.
    pub fn centered(base: Base, len: u32, center: Half) -> Segment {
        let r = Half::from_halves(len as i64 - 1);
        Segment { base, b: center - r, e: center + r }
    }

    pub fn len(&self) -> u32 {
        ((self.e - self.b).to_int().expect("integral length") + 1) as u32
    }

    pub fn center(&self) -> Half {
        (self.b + self.e).half_of().expect("b + e is an integer")
    }

    pub fn dim(&self, env: &RelationEnv) -> Result<u32, DataError> {
        Ok(self.base.dim(env)? * self.len())
    }

    pub fn normalize(&self, env: &RelationEnv) -> Result<Segment, DataError> {
        let (base, t) = self.base.normalize(env)?;
        Ok(Segment { base, b: self.b + t, e: self.e + t })
    }

    fn canonical(&self, env: &RelationEnv) -> Result<Segment, DataError> {
        let (base, t) = self.base.canonical(env)?;
        Ok(Segment { base, b: self.b + t, e: self.e + t })
    }

    pub fn twist(&self, chi: &CharExpr, env: &RelationEnv) -> Result<Segment, DataError> {
        Segment { base: self.base.twisted(chi), b: self.b, e: self.e }.normalize(env)
    }
}

impl fmt::Display for Segment {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        self.base.fmt_at(self.b, f)?;
        if self.e != self.b {
            f.write_str(", ")?;
            self.base.fmt_at(self.e, f)?;
        }
        f.write_str("]")
    }
}

/// `nu^u` relating the lines of two segments, if they lie on one line.
fn line_offset(s1: &Segment, s2: &Segment, env: &RelationEnv) -> Result<Option<Half>, DataError> {
    for chi in s1.base.connecting(&s2.base, env)? {
        if chi.is_pure_nu() {
            return Ok(Some(chi.nu));
        }
    }
    Ok(None)
}

/// Two segments are linked when their union is a segment containing both
/// strictly.
pub fn linked(s1: &Segment, s2: &Segment, env: &RelationEnv) -> Result<bool, DataError> {
    let s1 = s1.normalize(env)?;
    let s2 = s2.normalize(env)?;
    let Some(u) = line_offset(&s1, &s2, env)? else {
        return Ok(false);
    };
    // place s2 on the line of s1
    let (b1, e1) = (s1.b, s1.e);
    let (b2, e2) = (s2.b + u, s2.e + u);
    if !(b2 - b1).is_integer() {
        return Ok(false);
    }
    let one = Half::ONE;
    Ok((b1 < b2 && b2 <= e1 + one && e1 < e2) || (b2 < b1 && b1 <= e2 + one && e2 < e1))
}

/// A multiset of segments: the Langlands quotient `Q(Δ_1, ..., Δ_k)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct LanglandsDatum {
    pub segments: Vec<Segment>,
}

impl LanglandsDatum {
    pub fn new(segments: Vec<Segment>) -> LanglandsDatum {
        LanglandsDatum { segments }
    }

    pub fn dim(&self, env: &RelationEnv) -> Result<u32, DataError> {
        self.segments.iter().map(|s| s.dim(env)).sum()
    }

    pub fn normalize(&self, env: &RelationEnv) -> Result<LanglandsDatum, DataError> {
        Ok(LanglandsDatum { segments: self.segments.iter().map(|s| s.normalize(env)).collect::<Result<_, _>>()? })
    }

    fn canonical_key(&self, env: &RelationEnv) -> Result<Vec<Segment>, DataError> {
        let mut v: Vec<Segment> = self.segments.iter().map(|s| s.canonical(env)).collect::<Result<_, _>>()?;
        v.sort();
        Ok(v)
    }

    /// Equality as multisets, up to the declared isomorphisms.
    pub fn equivalent(&self, other: &LanglandsDatum, env: &RelationEnv) -> Result<bool, DataError> {
        Ok(self.canonical_key(env)? == other.canonical_key(env)?)
    }

    pub fn is_generic(&self, env: &RelationEnv) -> Result<bool, DataError> {
        Ok(self.linked_pair(env)?.is_none())
    }

    /// First pair of linked segments, by index.
    pub fn linked_pair(&self, env: &RelationEnv) -> Result<Option<(usize, usize)>, DataError> {
        for i in 0..self.segments.len() {
            for j in i + 1..self.segments.len() {
                if linked(&self.segments[i], &self.segments[j], env)? {
                    return Ok(Some((i, j)));
                }
            }
        }
        Ok(None)
    }

    /// `prod ω_base^ℓ · nu^(dim·ℓ·center)`.
    pub fn central_character(&self, env: &RelationEnv) -> Result<CharExpr, DataError> {
        let mut out = CharExpr::trivial();
        for s in &self.segments {
            let s = s.normalize(env)?;
            let l = s.len() as i64;
            let d = s.base.dim(env)? as i64;
            out = out.mul(&s.base.central(env)?.pow(l)).mul(&CharExpr::nu(s.center() * (d * l)));
        }
        Ok(env.normalize(&out)?)
    }

    pub fn twist(&self, chi: &CharExpr, env: &RelationEnv) -> Result<LanglandsDatum, DataError> {
        Ok(LanglandsDatum { segments: self.segments.iter().map(|s| s.twist(chi, env)).collect::<Result<_, _>>()? })
    }

    /// Every `chi` with `self ⊗ chi ≅ other` lies in this finite set: the first
    /// segment must land on some segment of `other`.
    fn connecting_candidates(&self, other: &LanglandsDatum, env: &RelationEnv) -> Result<Vec<CharExpr>, DataError> {
        let Some(first) = self.segments.first() else {
            return Ok(vec![CharExpr::trivial()]);
        };
        let first = first.normalize(env)?;
        let mut out = BTreeSet::new();
        for s in &other.segments {
            let s = s.normalize(env)?;
            if s.len() != first.len() {
                continue;
            }
            for chi in first.base.connecting(&s.base, env)? {
                out.insert(env.normalize(&chi.without_nu().mul(&CharExpr::nu(s.b - first.b)))?);
            }
        }
        Ok(out.into_iter().collect())
    }

    /// Some `chi` with `self ⊗ chi ≅ other`.
    pub fn connecting(&self, other: &LanglandsDatum, env: &RelationEnv) -> Result<Option<CharExpr>, DataError> {
        if self.segments.len() != other.segments.len() {
            return Ok(None);
        }
        let target = other.canonical_key(env)?;
        for chi in self.connecting_candidates(other, env)? {
            if self.twist(&chi, env)?.canonical_key(env)? == target {
                return Ok(Some(chi));
            }
        }
        Ok(None)
    }

    /// `{chi : self ⊗ chi ≅ self}`, optionally restricted to `chi^k = 1`.
    /// Sorted, with the trivial character first.
    pub fn selftwists(&self, env: &RelationEnv, torsion: Option<u64>) -> Result<Vec<CharExpr>, DataError> {
        let target = self.canonical_key(env)?;
        let mut out = Vec::new();
        for chi in self.connecting_candidates(self, env)? {
            if let Some(k) = torsion {
                if !env.is_trivial(&chi.pow(k as i64))? {
                    continue;
                }
            }
            if self.twist(&chi, env)?.canonical_key(env)? == target {
                out.push(chi);
            }
        }
        out.sort_by_key(|e| (e.gens.len(), e.clone()));
        Ok(out)
    }

    pub fn to_parameter(&self, env: &RelationEnv) -> Result<WdParam, DataError> {
        let pieces = self
            .normalize(env)?
            .segments
            .into_iter()
            .map(|s| WdPiece { r: s.len(), a: s.center(), base: s.base })
            .collect();
        Ok(WdParam { pieces })
    }
}

impl fmt::Display for LanglandsDatum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("Q(")?;
        for (i, s) in self.segments.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{s}")?;
        }
        f.write_str(")")
    }
}

/// `base ⊗ nu^a ⊗ sp(r)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct WdPiece {
    pub base: Base,
    pub r: u32,
    pub a: Half,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct WdParam {
    pub pieces: Vec<WdPiece>,
}

impl WdParam {
    pub fn from_datum(d: &LanglandsDatum, env: &RelationEnv) -> Result<WdParam, DataError> {
        d.to_parameter(env)
    }

    pub fn to_datum(&self) -> Result<LanglandsDatum, DataError> {
        let segments = self
            .pieces
            .iter()
            .map(|p| {
                if p.r == 0 {
                    return Err(DataError::EmptyPiece);
                }
                Ok(Segment::centered(p.base.clone(), p.r, p.a))
            })
            .collect::<Result<_, _>>()?;
        Ok(LanglandsDatum { segments })
    }

    pub fn dim(&self, env: &RelationEnv) -> Result<u32, DataError> {
        self.pieces.iter().map(|p| Ok(p.base.dim(env)? * p.r)).sum()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::symbolic::{CuspDecl, EnvDecl, Generator, IsoDecl};

    fn h(k: i64) -> Half {
        Half::from_halves(k)
    }

    fn ch(name: &str) -> Base {
        Base::Char(CharExpr::gen(name))
    }

    fn env() -> RelationEnv {
        RelationEnv::build(&EnvDecl {
            generators: vec![
                Generator { name: "chi".into(), ramified: false, order: None },
                Generator { name: "eta".into(), ramified: true, order: Some(2) },
            ],
            cusps: vec![
                CuspDecl { name: "s1".into(), dim: 2, central: None, kind: None, selftwists: Some(vec![CharExpr::gen("eta")]) },
                CuspDecl { name: "s2".into(), dim: 2, central: None, kind: None, selftwists: None },
            ],
            isos: vec![IsoDecl { lhs: "s2".into(), rhs: "s1".into(), twist: CharExpr::nu(Half::ONE) }],
            ..Default::default()
        })
        .unwrap()
    }

    #[test]
    fn linking_of_points() {
        let env = env();
        let a = Segment::point(ch("chi"));
        let b = Segment::new(ch("chi"), Half::ONE, Half::ONE).unwrap();
        let c = Segment::new(ch("chi"), Half::from_int(2), Half::from_int(2)).unwrap();
        let d = Segment::new(ch("chi"), h(1), h(1)).unwrap();
        assert!(linked(&a, &b, &env).unwrap());
        assert!(linked(&b, &a, &env).unwrap());
        assert!(!linked(&a, &c, &env).unwrap());
        assert!(!linked(&a, &d, &env).unwrap());
        assert!(!linked(&a, &a, &env).unwrap());
    }

    #[test]
    fn contained_segments_are_not_linked() {
        let env = env();
        let big = Segment::new(ch("chi"), Half::ZERO, Half::from_int(3)).unwrap();
        let small = Segment::new(ch("chi"), Half::ONE, Half::from_int(2)).unwrap();
        assert!(!linked(&big, &small, &env).unwrap());
        let tail = Segment::new(ch("chi"), Half::from_int(2), Half::from_int(5)).unwrap();
        assert!(linked(&big, &tail, &env).unwrap());
    }

    #[test]
    fn cusps_link_through_declared_isos() {
        let env = env();
        // s2 = s1 nu, so [s1 nu] and [s2] coincide, [s1] and [s2] are linked
        let a = Segment::point(Base::cusp("s1"));
        let b = Segment::point(Base::cusp("s2"));
        assert!(linked(&a, &b, &env).unwrap());
        let c = Segment::new(Base::cusp("s1"), Half::ONE, Half::ONE).unwrap();
        assert!(LanglandsDatum::new(vec![b.clone()]).equivalent(&LanglandsDatum::new(vec![c]), &env).unwrap());
        let twisted = Segment::point(Base::Cusp { symbol: "s2".into(), twist: CharExpr::gen("eta") });
        assert!(linked(&a, &twisted, &env).unwrap());
    }

    #[test]
    fn parameter_round_trip() {
        let env = env();
        let d = LanglandsDatum::new(vec![
            Segment::new(ch("chi"), h(-1), h(1)).unwrap(),
            Segment::new(Base::cusp("s1"), Half::ZERO, Half::from_int(2)).unwrap(),
        ]);
        let p = d.to_parameter(&env).unwrap();
        assert_eq!(p.pieces[0].r, 2);
        assert_eq!(p.pieces[0].a, Half::ZERO);
        assert_eq!(p.pieces[1].a, Half::ONE);
        assert_eq!(p.to_datum().unwrap(), d);
        assert_eq!(p.dim(&env).unwrap(), 8);
    }

    #[test]
    fn steinberg_central_character() {
        let env = env();
        let st = LanglandsDatum::new(vec![Segment::centered(ch("chi"), 2, Half::ZERO)]);
        assert_eq!(st.central_character(&env).unwrap(), CharExpr::gen_pow("chi", 2));
        let shifted = LanglandsDatum::new(vec![Segment::new(ch("chi"), Half::ZERO, Half::ONE).unwrap()]);
        assert_eq!(shifted.central_character(&env).unwrap().to_string(), "nu chi^2");
    }

    #[test]
    fn selftwists_of_principal_series() {
        let env = env();
        let ps = LanglandsDatum::new(vec![Segment::point(ch("chi")), Segment::point(Base::Char(CharExpr::gen("chi").mul(&CharExpr::gen("eta"))))]);
        assert_eq!(ps.selftwists(&env, None).unwrap(), vec![CharExpr::trivial(), CharExpr::gen("eta")]);
        let sc = LanglandsDatum::new(vec![Segment::point(Base::cusp("s2"))]);
        assert_eq!(sc.selftwists(&env, Some(2)).unwrap().len(), 2);
    }
}
