//! Characters of F^× as words in declared generators, and the relations between them.
//!
//! Anything the environment does not force is treated as distinct: two
//! expressions are equal exactly when their normal forms agree.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use num_integer::Integer;
use serde::{Deserialize, Serialize};

use crate::half::Half;

pub const NU: &str = "nu";

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum SymbolError {
    #[error("symbol `{0}` is declared twice")]
    Duplicate(String),
    #[error("`{0}` is reserved")]
    Reserved(String),
    #[error("definitions are cyclic through `{0}`")]
    CyclicDefinition(String),
    #[error("unknown symbol `{0}`")]
    Unknown(String),
    #[error("`{0}` is a cuspidal symbol, not a character")]
    NotACharacter(String),
    #[error("`{0}` is not a cuspidal symbol")]
    NotACusp(String),
    #[error("order of `{0}` must be at least 1")]
    BadOrder(String),
    #[error("cuspidal symbol `{0}`: {1}")]
    BadCusp(String, String),
    #[error("isomorphism `{0}`: {1}")]
    InconsistentIso(String, String),
}

/// Order of a character in the character group.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Order {
    Finite(u64),
    Infinite,
}

impl fmt::Display for Order {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Order::Finite(n) => write!(f, "{n}"),
            Order::Infinite => f.write_str("infinite"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Generator {
    pub name: String,
    pub ramified: bool,
    /// `None` means infinite order.
    pub order: Option<u64>,
}

/// A product `nu^t * prod g^k`. Stored exponents are not reduced until
/// [`RelationEnv::normalize`] is applied.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct CharExpr {
    pub gens: BTreeMap<String, i64>,
    pub nu: Half,
}

impl CharExpr {
    pub fn trivial() -> CharExpr {
        CharExpr::default()
    }

    pub fn gen(name: &str) -> CharExpr {
        CharExpr::gen_pow(name, 1)
    }

    pub fn gen_pow(name: &str, k: i64) -> CharExpr {
        let mut gens = BTreeMap::new();
        if k != 0 {
            gens.insert(name.to_string(), k);
        }
        CharExpr { gens, nu: Half::ZERO }
    }

    pub fn nu(t: Half) -> CharExpr {
        CharExpr { gens: BTreeMap::new(), nu: t }
    }

    pub fn mul(&self, other: &CharExpr) -> CharExpr {
        let mut out = self.clone();
        for (g, k) in &other.gens {
            let e = out.gens.entry(g.clone()).or_insert(0);
            *e += k;
            if *e == 0 {
                out.gens.remove(g);
            }
        }
        out.nu += other.nu;
        out
    }

    pub fn inv(&self) -> CharExpr {
        self.pow(-1)
    }

    pub fn pow(&self, k: i64) -> CharExpr {
        if k == 0 {
            return CharExpr::trivial();
        }
        CharExpr {
            gens: self.gens.iter().map(|(g, e)| (g.clone(), e * k)).collect(),
            nu: self.nu * k,
        }
    }

    /// `self * other^-1`.
    pub fn div(&self, other: &CharExpr) -> CharExpr {
        self.mul(&other.inv())
    }

    /// The part without `nu`.
    pub fn without_nu(&self) -> CharExpr {
        CharExpr { gens: self.gens.clone(), nu: Half::ZERO }
    }

    /// Syntactically trivial. Use [`RelationEnv::is_trivial`] for the semantic test.
    pub fn is_empty(&self) -> bool {
        self.gens.is_empty() && self.nu.is_zero()
    }

    pub fn is_pure_nu(&self) -> bool {
        self.gens.is_empty()
    }
}

fn fmt_nu(t: Half, f: &mut fmt::Formatter<'_>) -> fmt::Result {
    if t == Half::ONE {
        f.write_str(NU)
    } else if t.is_integer() {
        write!(f, "{NU}^{t}")
    } else {
        write!(f, "{NU}^({t})")
    }
}

impl fmt::Display for CharExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_empty() {
            return f.write_str("1");
        }
        let mut first = true;
        if !self.nu.is_zero() {
            fmt_nu(self.nu, f)?;
            first = false;
        }
        for (g, k) in &self.gens {
            if !first {
                f.write_str(" ")?;
            }
            first = false;
            if *k == 1 {
                f.write_str(g)?;
            } else {
                write!(f, "{g}^{k}")?;
            }
        }
        Ok(())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum CuspKind {
    Primitive,
    Dihedral1,
    Dihedral3,
}

impl CuspKind {
    /// Number of self-twists of a supercuspidal of GL(2) of this kind.
    pub fn selftwist_count(self) -> usize {
        match self {
            CuspKind::Primitive => 1,
            CuspKind::Dihedral1 => 2,
            CuspKind::Dihedral3 => 4,
        }
    }

    pub fn keyword(self) -> &'static str {
        match self {
            CuspKind::Primitive => "primitive",
            CuspKind::Dihedral1 => "dihedral-1",
            CuspKind::Dihedral3 => "dihedral-3",
        }
    }

    pub fn from_keyword(s: &str) -> Option<CuspKind> {
        match s {
            "primitive" => Some(CuspKind::Primitive),
            "dihedral-1" => Some(CuspKind::Dihedral1),
            "dihedral-3" => Some(CuspKind::Dihedral3),
            _ => None,
        }
    }
}

/// A supercuspidal representation of GL(d), known only through its invariants.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CuspSymbol {
    pub name: String,
    pub dim: u32,
    pub central: CharExpr,
    pub kind: Option<CuspKind>,
    /// Normalized, sorted, contains the trivial character.
    pub selftwists: Vec<CharExpr>,
}

/// Declaration of a cuspidal symbol before saturation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CuspDecl {
    pub name: String,
    pub dim: u32,
    pub central: Option<CharExpr>,
    pub kind: Option<CuspKind>,
    pub selftwists: Option<Vec<CharExpr>>,
}

/// `lhs ≅ rhs ⊗ twist`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IsoDecl {
    pub lhs: String,
    pub rhs: String,
    pub twist: CharExpr,
}

/// Everything needed to build a [`RelationEnv`].
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct EnvDecl {
    pub generators: Vec<Generator>,
    pub definitions: Vec<(String, CharExpr)>,
    pub cusps: Vec<CuspDecl>,
    pub isos: Vec<IsoDecl>,
    /// `[F : Q_2]`, when the residue characteristic is 2.
    pub dyadic_degree: Option<u32>,
}

/// Saturated relations: generators, acyclic definitions, cuspidal symbols
/// and their twist classes.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct RelationEnv {
    gens: BTreeMap<String, Generator>,
    defs: BTreeMap<String, CharExpr>,
    cusps: BTreeMap<String, CuspSymbol>,
    /// symbol -> (root, offset) with symbol ≅ root ⊗ offset.
    classes: BTreeMap<String, (String, CharExpr)>,
    dyadic_degree: Option<u32>,
}

impl RelationEnv {
    pub fn empty() -> RelationEnv {
        RelationEnv::default()
    }

    pub fn build(decl: &EnvDecl) -> Result<RelationEnv, SymbolError> {
        let mut env = RelationEnv { dyadic_degree: decl.dyadic_degree, ..Default::default() };
        let mut seen = BTreeSet::new();
        let mut claim = |name: &str| -> Result<(), SymbolError> {
            if name == NU {
                return Err(SymbolError::Reserved(name.into()));
            }
            if !seen.insert(name.to_string()) {
                return Err(SymbolError::Duplicate(name.into()));
            }
            Ok(())
        };
        for g in &decl.generators {
            claim(&g.name)?;
            if g.order == Some(0) {
                return Err(SymbolError::BadOrder(g.name.clone()));
            }
            env.gens.insert(g.name.clone(), g.clone());
        }
        for (name, _) in &decl.definitions {
            claim(name)?;
        }
        for c in &decl.cusps {
            claim(&c.name)?;
        }
        for c in &decl.cusps {
            env.cusps.insert(
                c.name.clone(),
                CuspSymbol { name: c.name.clone(), dim: c.dim, central: CharExpr::trivial(), kind: c.kind, selftwists: vec![] },
            );
        }
        env.resolve_definitions(&decl.definitions)?;
        for c in &decl.cusps {
            for e in c.central.iter().chain(c.selftwists.iter().flatten()) {
                env.normalize(e)?;
            }
        }
        env.saturate(decl)?;
        Ok(env)
    }

    fn resolve_definitions(&mut self, defs: &[(String, CharExpr)]) -> Result<(), SymbolError> {
        let raw: BTreeMap<&str, &CharExpr> = defs.iter().map(|(n, e)| (n.as_str(), e)).collect();
        #[derive(Clone, Copy, PartialEq)]
        enum Mark {
            Active,
            Done,
        }
        fn visit(
            name: &str,
            raw: &BTreeMap<&str, &CharExpr>,
            marks: &mut BTreeMap<String, Mark>,
            env: &mut RelationEnv,
        ) -> Result<(), SymbolError> {
            match marks.get(name) {
                Some(Mark::Done) => return Ok(()),
                Some(Mark::Active) => return Err(SymbolError::CyclicDefinition(name.into())),
                None => {}
            }
            marks.insert(name.into(), Mark::Active);
            let body = raw[name];
            for g in body.gens.keys() {
                if raw.contains_key(g.as_str()) {
                    visit(g, raw, marks, env)?;
                }
            }
            let value = env.expand(body)?;
            env.defs.insert(name.into(), value);
            marks.insert(name.into(), Mark::Done);
            Ok(())
        }
        let mut marks = BTreeMap::new();
        for (name, _) in defs {
            visit(name, &raw, &mut marks, self)?;
        }
        Ok(())
    }

    fn saturate(&mut self, decl: &EnvDecl) -> Result<(), SymbolError> {
        for c in &decl.cusps {
            self.classes.insert(c.name.clone(), (c.name.clone(), CharExpr::trivial()));
        }
        let mut redundant = Vec::new();
        for iso in &decl.isos {
            for side in [&iso.lhs, &iso.rhs] {
                if !self.cusps.contains_key(side) {
                    return Err(if self.gens.contains_key(side) || self.defs.contains_key(side) {
                        SymbolError::NotACusp(side.clone())
                    } else {
                        SymbolError::Unknown(side.clone())
                    });
                }
            }
            let twist = self.normalize(&iso.twist)?;
            let (ra, oa) = self.find(&iso.lhs);
            let (rb, ob) = self.find(&iso.rhs);
            if self.cusps[&iso.lhs].dim != self.cusps[&iso.rhs].dim {
                return Err(SymbolError::InconsistentIso(iso.lhs.clone(), "dimensions differ".into()));
            }
            if ra == rb {
                redundant.push((iso.lhs.clone(), oa, ob.mul(&twist)));
                continue;
            }
            // ra ≅ lhs ⊗ oa^-1 ≅ rb ⊗ ob ⊗ twist ⊗ oa^-1
            let off = self.normalize_unchecked(&ob.mul(&twist).div(&oa));
            self.classes.insert(ra.clone(), (rb, off));
        }
        let names: Vec<String> = self.classes.keys().cloned().collect();
        for n in &names {
            let found = self.find(n);
            self.classes.insert(n.clone(), found);
        }

        // Self-twist groups and central characters are class invariants up to twist.
        let decls: BTreeMap<&str, &CuspDecl> = decl.cusps.iter().map(|c| (c.name.as_str(), c)).collect();
        let mut roots: BTreeMap<String, Vec<String>> = BTreeMap::new();
        for c in &decl.cusps {
            roots.entry(self.classes[&c.name].0.clone()).or_default().push(c.name.clone());
        }
        for (root, members) in &roots {
            let mut group: Option<(String, Vec<CharExpr>)> = None;
            for m in members {
                let d = decls[m.as_str()];
                let declared = match (&d.selftwists, d.kind) {
                    (Some(list), _) => Some(self.selftwist_group(m, d.dim, list)?),
                    (None, Some(CuspKind::Primitive)) => Some(vec![CharExpr::trivial()]),
                    _ => None,
                };
                if let Some(list) = declared {
                    match &group {
                        Some((other, g)) if *g != list => {
                            return Err(SymbolError::BadCusp(
                                m.clone(),
                                format!("self-twists differ from those of the twist-equivalent `{other}`"),
                            ))
                        }
                        Some(_) => {}
                        None => group = Some((m.clone(), list)),
                    }
                }
            }
            let group = group.map(|g| g.1).unwrap_or_else(|| vec![CharExpr::trivial()]);
            let dim = decls[root.as_str()].dim;
            let root_central = match &decls[root.as_str()].central {
                Some(c) => self.normalize(c)?,
                None => {
                    // derive from any member that declares one
                    let mut derived = None;
                    for m in members {
                        if let Some(c) = &decls[m.as_str()].central {
                            let off = self.classes[m].1.clone();
                            derived = Some(self.normalize(&c.div(&off.pow(dim as i64)))?);
                            break;
                        }
                    }
                    match derived {
                        Some(c) => c,
                        None => {
                            let g = format!("omega_{root}");
                            self.gens.entry(g.clone()).or_insert(Generator { name: g.clone(), ramified: false, order: None });
                            CharExpr::gen(&g)
                        }
                    }
                }
            };
            for m in members {
                let d = decls[m.as_str()];
                let off = self.classes[m].1.clone();
                let expected = self.normalize(&root_central.mul(&off.pow(dim as i64)))?;
                if let Some(c) = &d.central {
                    if self.normalize(c)? != expected {
                        return Err(SymbolError::InconsistentIso(
                            m.clone(),
                            format!("central character {} does not match {} forced by the twist class", c, expected),
                        ));
                    }
                }
                if let Some(k) = d.kind {
                    if d.dim != 2 {
                        return Err(SymbolError::BadCusp(m.clone(), "a kind is only meaningful in dimension 2".into()));
                    }
                    if group.len() != k.selftwist_count() {
                        return Err(SymbolError::BadCusp(
                            m.clone(),
                            format!("kind {} needs {} self-twists, found {}", k.keyword(), k.selftwist_count(), group.len()),
                        ));
                    }
                }
                if let Some(deg) = self.dyadic_degree {
                    let bound = 1usize << (deg + 2).min(62);
                    if group.len() > bound {
                        return Err(SymbolError::BadCusp(
                            m.clone(),
                            format!("{} self-twists exceed the bound 2^({deg}+2) = {bound}", group.len()),
                        ));
                    }
                }
                let sym = self.cusps.get_mut(m).expect("declared");
                sym.central = expected;
                sym.selftwists = group.clone();
            }
        }
        for (name, oa, ob) in redundant {
            let root = self.classes[&name].0.clone();
            let diff = self.normalize_unchecked(&ob.div(&oa));
            if !self.cusps[&root].selftwists.contains(&diff) {
                return Err(SymbolError::InconsistentIso(
                    name,
                    format!("forces the undeclared self-twist {diff}"),
                ));
            }
        }
        Ok(())
    }

    fn selftwist_group(&self, name: &str, dim: u32, list: &[CharExpr]) -> Result<Vec<CharExpr>, SymbolError> {
        let mut set = BTreeSet::new();
        set.insert(CharExpr::trivial());
        for e in list {
            let n = self.normalize(e)?;
            if !self.is_trivial(&n.pow(dim as i64))? {
                return Err(SymbolError::BadCusp(name.into(), format!("self-twist {n} does not have order dividing {dim}")));
            }
            set.insert(n);
        }
        for a in &set {
            for b in &set {
                if !set.contains(&self.normalize_unchecked(&a.mul(b))) {
                    return Err(SymbolError::BadCusp(name.into(), "self-twists are not closed under products".into()));
                }
            }
        }
        Ok(set.into_iter().collect())
    }

    fn find(&self, name: &str) -> (String, CharExpr) {
        let mut cur = name.to_string();
        let mut off = CharExpr::trivial();
        loop {
            let (parent, o) = &self.classes[&cur];
            if *parent == cur {
                return (cur, self.normalize_unchecked(&off));
            }
            off = off.mul(o);
            cur = parent.clone();
        }
    }

    fn expand(&self, e: &CharExpr) -> Result<CharExpr, SymbolError> {
        let mut out = CharExpr::nu(e.nu);
        for (g, k) in &e.gens {
            if g == NU {
                out.nu += Half::from_int(*k);
            } else if let Some(d) = self.defs.get(g) {
                out = out.mul(&d.pow(*k));
            } else if self.cusps.contains_key(g) {
                return Err(SymbolError::NotACharacter(g.clone()));
            } else {
                out = out.mul(&CharExpr::gen_pow(g, *k));
            }
        }
        Ok(out)
    }

    /// Canonical form: definitions expanded, finite orders reduced into `[0, n)`.
    /// Undeclared names are free generators of infinite order.
    pub fn normalize(&self, e: &CharExpr) -> Result<CharExpr, SymbolError> {
        let mut out = self.expand(e)?;
        out.gens = out
            .gens
            .into_iter()
            .filter_map(|(g, k)| {
                let k = match self.gens.get(&g).and_then(|x| x.order) {
                    Some(n) => k.rem_euclid(n as i64),
                    None => k,
                };
                (k != 0).then_some((g, k))
            })
            .collect();
        Ok(out)
    }

    /// For expressions already known to contain only characters.
    pub(crate) fn normalize_unchecked(&self, e: &CharExpr) -> CharExpr {
        self.normalize(e).expect("expression built from normalized characters")
    }

    pub fn is_trivial(&self, e: &CharExpr) -> Result<bool, SymbolError> {
        Ok(self.normalize(e)?.is_empty())
    }

    pub fn equal(&self, a: &CharExpr, b: &CharExpr) -> Result<bool, SymbolError> {
        self.is_trivial(&a.div(b))
    }

    pub fn is_unramified(&self, e: &CharExpr) -> Result<bool, SymbolError> {
        let n = self.normalize(e)?;
        Ok(n.gens.keys().all(|g| !self.gens.get(g).map(|x| x.ramified).unwrap_or(false)))
    }

    pub fn order_of(&self, e: &CharExpr) -> Result<Order, SymbolError> {
        let n = self.normalize(e)?;
        if !n.nu.is_zero() {
            return Ok(Order::Infinite);
        }
        let mut acc: u64 = 1;
        for (g, k) in &n.gens {
            match self.gens.get(g).and_then(|x| x.order) {
                None => return Ok(Order::Infinite),
                Some(ord) => {
                    let k = *k as u64;
                    acc = acc.lcm(&(ord / k.gcd(&ord)));
                }
            }
        }
        Ok(Order::Finite(acc))
    }

    pub fn generator(&self, name: &str) -> Option<&Generator> {
        self.gens.get(name)
    }

    pub fn generators(&self) -> impl Iterator<Item = &Generator> {
        self.gens.values()
    }

    pub fn cusp(&self, name: &str) -> Result<&CuspSymbol, SymbolError> {
        self.cusps.get(name).ok_or_else(|| {
            if self.gens.contains_key(name) || self.defs.contains_key(name) {
                SymbolError::NotACusp(name.into())
            } else {
                SymbolError::Unknown(name.into())
            }
        })
    }

    /// Declared as a generator, a definition or a cuspidal symbol.
    pub fn knows(&self, name: &str) -> bool {
        self.gens.contains_key(name) || self.defs.contains_key(name) || self.cusps.contains_key(name)
    }

    pub fn is_cusp(&self, name: &str) -> bool {
        self.cusps.contains_key(name)
    }

    pub fn cusps(&self) -> impl Iterator<Item = &CuspSymbol> {
        self.cusps.values()
    }

    pub fn dyadic_degree(&self) -> Option<u32> {
        self.dyadic_degree
    }

    /// Representative of the twist class of `name`.
    pub fn class_root(&self, name: &str) -> Result<&str, SymbolError> {
        self.cusp(name)?;
        Ok(&self.classes[name].0)
    }

    /// All `chi` with `rho2 ⊗ tw2 ≅ rho1 ⊗ tw1 ⊗ chi`, or `None` if the two are
    /// not twist-equivalent. The list is a coset of the self-twist group, sorted
    /// so that the simplest representative comes first.
    pub fn cusp_coset(
        &self,
        rho1: &str,
        tw1: &CharExpr,
        rho2: &str,
        tw2: &CharExpr,
    ) -> Result<Option<Vec<CharExpr>>, SymbolError> {
        self.cusp(rho1)?;
        self.cusp(rho2)?;
        let (r1, o1) = &self.classes[rho1];
        let (r2, o2) = &self.classes[rho2];
        if r1 != r2 {
            return Ok(None);
        }
        // rho2 tw2 = R o2 tw2, rho1 tw1 chi = R o1 tw1 chi
        let base = o2.mul(&self.normalize(tw2)?).div(&o1.mul(&self.normalize(tw1)?));
        let mut coset: Vec<CharExpr> = self.cusps[r1.as_str()]
            .selftwists
            .iter()
            .map(|s| self.normalize_unchecked(&base.mul(s)))
            .collect();
        coset.sort_by_key(|e| (e.gens.len(), e.clone()));
        coset.dedup();
        Ok(Some(coset))
    }

    /// Connecting character `chi` with `rho2 ⊗ tw2 ≅ rho1 ⊗ tw1 ⊗ chi`, unique up
    /// to self-twists of `rho1`. A representative with no generator part is
    /// preferred when one exists.
    pub fn cusp_equiv(
        &self,
        rho1: &str,
        tw1: &CharExpr,
        rho2: &str,
        tw2: &CharExpr,
    ) -> Result<Option<CharExpr>, SymbolError> {
        Ok(self.cusp_coset(rho1, tw1, rho2, tw2)?.map(|c| c[0].clone()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g(name: &str, order: Option<u64>, ramified: bool) -> Generator {
        Generator { name: name.into(), ramified, order }
    }

    fn cusp(name: &str, dim: u32, selftwists: Option<Vec<CharExpr>>) -> CuspDecl {
        CuspDecl { name: name.into(), dim, central: None, kind: None, selftwists }
    }

    fn env_with_eta() -> RelationEnv {
        RelationEnv::build(&EnvDecl {
            generators: vec![g("eta", Some(2), true), g("chi", None, false)],
            definitions: vec![("chi2".into(), CharExpr::gen("chi").mul(&CharExpr::nu(Half::ONE)))],
            cusps: vec![cusp("sigma1", 2, None), cusp("sigma2", 2, None)],
            isos: vec![IsoDecl { lhs: "sigma2".into(), rhs: "sigma1".into(), twist: CharExpr::gen("eta") }],
            dyadic_degree: None,
        })
        .unwrap()
    }

    #[test]
    fn finite_order_reduces() {
        let env = env_with_eta();
        assert!(env.is_trivial(&CharExpr::gen_pow("eta", 2)).unwrap());
        assert!(!env.is_trivial(&CharExpr::gen("eta")).unwrap());
        assert_eq!(env.order_of(&CharExpr::gen("eta")).unwrap(), Order::Finite(2));
        assert_eq!(env.order_of(&CharExpr::gen_pow("eta", 3)).unwrap(), Order::Finite(2));
        assert_eq!(env.order_of(&CharExpr::gen("chi")).unwrap(), Order::Infinite);
        assert_eq!(env.order_of(&CharExpr::trivial()).unwrap(), Order::Finite(1));
    }

    #[test]
    fn definitions_expand() {
        let env = env_with_eta();
        let e = CharExpr::gen("chi2").div(&CharExpr::gen("chi"));
        assert_eq!(env.normalize(&e).unwrap(), CharExpr::nu(Half::ONE));
        assert_eq!(env.normalize(&e).unwrap().to_string(), "nu");
    }

    #[test]
    fn ramification() {
        let env = env_with_eta();
        assert!(!env.is_unramified(&CharExpr::gen("eta")).unwrap());
        assert!(env.is_unramified(&CharExpr::gen_pow("eta", 2)).unwrap());
        assert!(env.is_unramified(&CharExpr::gen("chi2")).unwrap());
    }

    #[test]
    fn connecting_character() {
        let env = env_with_eta();
        let one = CharExpr::trivial();
        assert_eq!(env.cusp_equiv("sigma1", &one, "sigma2", &one).unwrap(), Some(CharExpr::gen("eta")));
        assert_eq!(env.cusp_equiv("sigma2", &one, "sigma1", &one).unwrap(), Some(CharExpr::gen("eta")));
        assert_eq!(env.cusp_equiv("sigma1", &one, "sigma1", &one).unwrap(), Some(one.clone()));
    }

    #[test]
    fn undeclared_symbols_are_free() {
        let env = env_with_eta();
        assert_eq!(
            env.cusp_equiv("sigma1", &CharExpr::trivial(), "sigma1", &CharExpr::gen("psi")).unwrap(),
            Some(CharExpr::gen("psi"))
        );
        assert!(!env.is_trivial(&CharExpr::gen("psi")).unwrap());
    }

    #[test]
    fn cycles_are_rejected() {
        let err = RelationEnv::build(&EnvDecl {
            definitions: vec![("a".into(), CharExpr::gen("b")), ("b".into(), CharExpr::gen("a"))],
            ..Default::default()
        })
        .unwrap_err();
        assert!(matches!(err, SymbolError::CyclicDefinition(_)));
    }

    #[test]
    fn kind_must_match_selftwists() {
        let mut c = cusp("s", 2, Some(vec![]));
        c.kind = Some(CuspKind::Dihedral1);
        let err = RelationEnv::build(&EnvDecl { cusps: vec![c], ..Default::default() }).unwrap_err();
        assert!(matches!(err, SymbolError::BadCusp(..)));
    }

    #[test]
    fn selftwists_must_be_a_group() {
        let c = cusp("s", 4, Some(vec![CharExpr::gen("a"), CharExpr::gen("b")]));
        let err = RelationEnv::build(&EnvDecl {
            generators: vec![g("a", Some(2), false), g("b", Some(2), false)],
            cusps: vec![c],
            ..Default::default()
        })
        .unwrap_err();
        assert!(matches!(err, SymbolError::BadCusp(..)));
    }

    #[test]
    fn redundant_iso_must_agree() {
        let decl = EnvDecl {
            generators: vec![g("eta", Some(2), false), g("mu", Some(2), false)],
            cusps: vec![cusp("a", 2, None), cusp("b", 2, None)],
            isos: vec![
                IsoDecl { lhs: "b".into(), rhs: "a".into(), twist: CharExpr::gen("eta") },
                IsoDecl { lhs: "b".into(), rhs: "a".into(), twist: CharExpr::gen("mu") },
            ],
            ..Default::default()
        };
        assert!(matches!(RelationEnv::build(&decl).unwrap_err(), SymbolError::InconsistentIso(..)));
    }

    #[test]
    fn dyadic_bound() {
        let mut c = cusp("s", 4, Some(vec![CharExpr::gen("a"), CharExpr::gen("b"), CharExpr::gen("a").mul(&CharExpr::gen("b"))]));
        c.kind = None;
        let decl = EnvDecl {
            generators: vec![g("a", Some(2), false), g("b", Some(2), false)],
            cusps: vec![c],
            dyadic_degree: Some(0),
            ..Default::default()
        };
        assert!(RelationEnv::build(&decl).is_ok());
    }
}
