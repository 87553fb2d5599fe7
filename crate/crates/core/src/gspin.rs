//! Representations of `G_{m,n}^{r,s}` through their lifts to `GL(m) x GL(n)`:
//! genericity, the adjoint pole, and L-packet sizes for GSpin(4) and GSpin(6).

use std::fmt;

use num_integer::Integer;
use serde::{Deserialize, Serialize};

use crate::langlands::{Base, DataError, LanglandsDatum};
use crate::lfunction::{adjoint_g, LProduct};
use crate::nilpotent::LieKind;
use crate::symbolic::{CharExpr, CuspKind, RelationEnv, SymbolError};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum GspinError {
    #[error(transparent)]
    Data(#[from] DataError),
    #[error("gcd({r}, {s}) must be 1")]
    NotCoprime { r: i64, s: i64 },
    #[error("group parameters must be positive")]
    BadShape,
    #[error("lift to GL({expected}) has dimension {found}")]
    DimensionMismatch { expected: u32, found: u32 },
    #[error("{0} is only defined for {1}")]
    WrongGroup(&'static str, String),
}

impl From<SymbolError> for GspinError {
    fn from(e: SymbolError) -> GspinError {
        GspinError::Data(e.into())
    }
}

/// `G_{m,n}^{r,s}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct GroupSpec {
    pub m: u32,
    pub n: u32,
    pub r: i64,
    pub s: i64,
}

impl GroupSpec {
    pub fn new(m: u32, n: u32, r: i64, s: i64) -> Result<GroupSpec, GspinError> {
        if m == 0 || n == 0 || r <= 0 || s <= 0 {
            return Err(GspinError::BadShape);
        }
        if r.gcd(&s) != 1 {
            return Err(GspinError::NotCoprime { r, s });
        }
        Ok(GroupSpec { m, n, r, s })
    }

    pub fn gspin4() -> GroupSpec {
        GroupSpec { m: 2, n: 2, r: 1, s: 1 }
    }

    pub fn gspin6() -> GroupSpec {
        GroupSpec { m: 1, n: 4, r: 2, s: 1 }
    }

    pub fn preset_name(&self) -> Option<&'static str> {
        if *self == GroupSpec::gspin4() {
            Some("gspin4")
        } else if *self == GroupSpec::gspin6() {
            Some("gspin6")
        } else {
            None
        }
    }

    pub fn from_preset(name: &str) -> Option<GroupSpec> {
        match name {
            "gspin4" => Some(GroupSpec::gspin4()),
            "gspin6" => Some(GroupSpec::gspin6()),
            _ => None,
        }
    }

    pub fn lie_kind(&self) -> LieKind {
        LieKind::Ghat { m: self.m as usize, n: self.n as usize, r: self.r, s: self.s }
    }

    /// `dim ĝ = m² + n² - 1`.
    pub fn dual_dim(&self) -> u32 {
        self.m * self.m + self.n * self.n - 1
    }
}

impl fmt::Display for GroupSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.preset_name() {
            Some(p) => f.write_str(p),
            None => write!(f, "G({}, {}; {}, {})", self.m, self.n, self.r, self.s),
        }
    }
}

/// A representation given by lifts `(π_m, π_n)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RestrictedRep {
    pub group: GroupSpec,
    pub lift_m: LanglandsDatum,
    pub lift_n: LanglandsDatum,
    pub env: RelationEnv,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub enum LiftNote {
    /// `ω(π_m)^r = ω(π_n)^s` follows from the declared relations.
    CentralConsistent,
    /// It does not; the relation is reported, not enforced.
    CentralNotDerivable { lhs: CharExpr, rhs: CharExpr },
    /// Two non-twist-equivalent dihedral-3 supercuspidals.
    ExcludedByHypothesis(String),
}

impl fmt::Display for LiftNote {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LiftNote::CentralConsistent => f.write_str("central characters consistent"),
            LiftNote::CentralNotDerivable { lhs, rhs } => write!(f, "not derivable: {lhs} = {rhs}"),
            LiftNote::ExcludedByHypothesis(s) => write!(f, "warning: {s}"),
        }
    }
}

impl RestrictedRep {
    pub fn new(group: GroupSpec, lift_m: LanglandsDatum, lift_n: LanglandsDatum, env: RelationEnv) -> RestrictedRep {
        RestrictedRep { group, lift_m, lift_n, env }
    }

    pub fn validate(&self) -> Result<Vec<LiftNote>, GspinError> {
        validate_lift(self)
    }
}

/// Dimension checks, then notes on the central character relation.
pub fn validate_lift(rep: &RestrictedRep) -> Result<Vec<LiftNote>, GspinError> {
    let env = &rep.env;
    for (d, expected) in [(&rep.lift_m, rep.group.m), (&rep.lift_n, rep.group.n)] {
        let found = d.dim(env)?;
        if found != expected {
            return Err(GspinError::DimensionMismatch { expected, found });
        }
    }
    let lhs = env.normalize(&rep.lift_m.central_character(env)?.pow(rep.group.r))?;
    let rhs = env.normalize(&rep.lift_n.central_character(env)?.pow(rep.group.s))?;
    let mut notes = vec![if lhs == rhs {
        LiftNote::CentralConsistent
    } else {
        LiftNote::CentralNotDerivable { lhs, rhs }
    }];
    if rep.group == GroupSpec::gspin4() {
        if let (Some(a), Some(b)) = (single_cusp(&rep.lift_m, env), single_cusp(&rep.lift_n, env)) {
            if a.1 == Some(CuspKind::Dihedral3)
                && b.1 == Some(CuspKind::Dihedral3)
                && rep.lift_m.connecting(&rep.lift_n, env)?.is_none()
            {
                notes.push(LiftNote::ExcludedByHypothesis(
                    "both lifts are dihedral-3 supercuspidals and not twist-equivalent; the packet size is not covered".into(),
                ));
            }
        }
    }
    Ok(notes)
}

fn single_cusp<'a>(d: &'a LanglandsDatum, env: &RelationEnv) -> Option<(&'a str, Option<CuspKind>)> {
    match &d.segments[..] {
        [s] if s.len() == 1 => match &s.base {
            Base::Cusp { symbol, .. } => Some((symbol.as_str(), env.cusp(symbol).ok()?.kind)),
            Base::Char(_) => None,
        },
        _ => None,
    }
}

pub fn is_generic_restricted(rep: &RestrictedRep) -> Result<bool, GspinError> {
    Ok(rep.lift_m.is_generic(&rep.env)? && rep.lift_n.is_generic(&rep.env)?)
}

/// `L(s, π, Ad)` for the restricted representation.
pub fn adjoint(rep: &RestrictedRep, full: bool) -> Result<LProduct, GspinError> {
    let env = &rep.env;
    let pm = rep.lift_m.to_parameter(env)?;
    let pn = rep.lift_n.to_parameter(env)?;
    Ok(adjoint_g(&pm, &pn, full, env)?)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Verdict {
    pub generic: bool,
    pub pole_order: u32,
    /// Generic exactly when the adjoint L-function is regular at `s = 1`.
    pub consistent: bool,
}

pub fn gp_verdict(rep: &RestrictedRep) -> Result<Verdict, GspinError> {
    let generic = is_generic_restricted(rep)?;
    let pole_order = adjoint(rep, false)?.pole_order_at_one(&rep.env)?;
    Ok(Verdict { generic, pole_order, consistent: generic == (pole_order == 0) })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub enum GroupStructure {
    Trivial,
    /// `(Z/2)^k`.
    Elementary2(u32),
    /// Anything else, by order.
    Order(usize),
}

impl fmt::Display for GroupStructure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupStructure::Trivial => f.write_str("{1}"),
            GroupStructure::Elementary2(1) => f.write_str("Z/2"),
            GroupStructure::Elementary2(k) => write!(f, "(Z/2)^{k}"),
            GroupStructure::Order(n) => write!(f, "order {n}"),
        }
    }
}

fn structure_of(group: &[CharExpr], env: &RelationEnv) -> Result<GroupStructure, GspinError> {
    let n = group.len();
    if n == 1 {
        return Ok(GroupStructure::Trivial);
    }
    let all_2 = group.iter().try_fold(true, |acc, c| Ok::<_, GspinError>(acc && env.is_trivial(&c.pow(2))?))?;
    if all_2 && n.is_power_of_two() {
        Ok(GroupStructure::Elementary2(n.trailing_zeros()))
    } else {
        Ok(GroupStructure::Order(n))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PacketReport {
    pub size: usize,
    pub structure: GroupStructure,
    /// The characters making up the group.
    pub group: Vec<CharExpr>,
    pub case_tag: Option<String>,
    pub bound_note: Option<String>,
    pub warnings: Vec<String>,
}

/// `I(σ̃) = {χ : σ̃ ⊗ χ ≅ σ̃}` for a GL(2) datum.
pub fn selftwists_gl2(d: &LanglandsDatum, env: &RelationEnv) -> Result<Vec<CharExpr>, GspinError> {
    Ok(d.selftwists(env, None)?)
}

fn bound_note(env: &RelationEnv, size: usize, rank: u32) -> Option<String> {
    env.dyadic_degree().map(|d| {
        let bound = 1u64 << (d + rank).min(63);
        format!("p = 2: |I| = {size} <= 2^({d}+{rank}) = {bound}")
    })
}

/// Packet size for GSpin(4): the self-twists of `σ̃_1` when the two lifts are
/// twist-equivalent, otherwise the common self-twists.
pub fn packet_size_gspin4(rep: &RestrictedRep) -> Result<PacketReport, GspinError> {
    if rep.group != GroupSpec::gspin4() {
        return Err(GspinError::WrongGroup("packet_size_gspin4", rep.group.to_string()));
    }
    let env = &rep.env;
    let notes = validate_lift(rep)?;
    let i1 = selftwists_gl2(&rep.lift_m, env)?;
    let group = if rep.lift_m.connecting(&rep.lift_n, env)?.is_some() {
        i1
    } else {
        let i2 = selftwists_gl2(&rep.lift_n, env)?;
        i1.into_iter().filter(|c| i2.contains(c)).collect()
    };
    let warnings = notes
        .iter()
        .filter(|n| matches!(n, LiftNote::ExcludedByHypothesis(_)))
        .map(|n| n.to_string())
        .collect();
    Ok(PacketReport {
        size: group.len(),
        structure: structure_of(&group, env)?,
        bound_note: bound_note(env, group.len(), 2),
        case_tag: classify(rep).ok(),
        group,
        warnings,
    })
}

/// Packet size for GSpin(6): the 2-torsion self-twists of `σ̃_0`.
pub fn packet_size_gspin6(rep: &RestrictedRep) -> Result<PacketReport, GspinError> {
    if rep.group != GroupSpec::gspin6() {
        return Err(GspinError::WrongGroup("packet_size_gspin6", rep.group.to_string()));
    }
    let env = &rep.env;
    validate_lift(rep)?;
    let group = rep.lift_n.selftwists(env, Some(2))?;
    Ok(PacketReport {
        size: group.len(),
        structure: structure_of(&group, env)?,
        bound_note: bound_note(env, group.len(), 2),
        case_tag: classify(rep).ok(),
        group,
        warnings: vec![],
    })
}

pub fn packet_size(rep: &RestrictedRep) -> Result<PacketReport, GspinError> {
    match rep.group.preset_name() {
        Some("gspin4") => packet_size_gspin4(rep),
        Some("gspin6") => packet_size_gspin6(rep),
        _ => Err(GspinError::WrongGroup("packet sizes", "gspin4 and gspin6".into())),
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Gl2Type {
    Supercuspidal,
    Steinberg,
    PrincipalSeries,
    OneDimensional,
}

fn gl2_type(d: &LanglandsDatum, env: &RelationEnv) -> Result<Gl2Type, GspinError> {
    Ok(match &d.segments[..] {
        [s] if s.len() == 1 => Gl2Type::Supercuspidal,
        [_] => Gl2Type::Steinberg,
        _ if d.is_generic(env)? => Gl2Type::PrincipalSeries,
        _ => Gl2Type::OneDimensional,
    })
}

/// Case label of the lift in the classification tables, as far as it can be
/// read off the parameter.
pub fn classify(rep: &RestrictedRep) -> Result<String, GspinError> {
    let env = &rep.env;
    match rep.group.preset_name() {
        Some("gspin4") => {
            use Gl2Type::*;
            let a = gl2_type(&rep.lift_m, env)?;
            let b = gl2_type(&rep.lift_n, env)?;
            let tag = match (a, b) {
                (OneDimensional, _) | (_, OneDimensional) => "nongnr",
                (Supercuspidal, Supercuspidal) => {
                    if rep.lift_m.connecting(&rep.lift_n, env)?.is_some() {
                        "gnr-(a)"
                    } else {
                        "gnr-(b)"
                    }
                }
                (Steinberg, Steinberg) => "gnr-(i)",
                (PrincipalSeries, Steinberg) | (Steinberg, PrincipalSeries) => "gnr-(ii)",
                (PrincipalSeries, PrincipalSeries) => "gnr-(iii)",
                (Supercuspidal, Steinberg) | (Steinberg, Supercuspidal) => "gnr-(iv)",
                (Supercuspidal, PrincipalSeries) | (PrincipalSeries, Supercuspidal) => "gnr-(v)",
            };
            Ok(tag.into())
        }
        Some("gspin6") => {
            let d = &rep.lift_n;
            if !d.is_generic(env)? {
                let cusp = d.segments.iter().any(|s| matches!(s.base, Base::Cusp { .. }));
                return Ok(if cusp { "nongnr-(D)" } else { "nongnr-(A)" }.into());
            }
            // blocks: (base dim, length)
            let mut blocks: Vec<(u32, u32)> =
                d.segments.iter().map(|s| Ok((s.base.dim(env)?, s.len()))).collect::<Result<_, GspinError>>()?;
            blocks.sort_unstable();
            let tag = match &blocks[..] {
                [(4, 1)] => "gnr-(a)",
                [(1, 1), (1, 1), (1, 1), (1, 1)] => "gnr-(I)",
                [(1, 1), (1, 1), (1, 2)] | [(1, 1), (1, 1), (2, 1)] => "gnr-(II)",
                [(1, 1), (1, 3)] | [(1, 1), (3, 1)] => "gnr-(III)",
                [(1, 2), (1, 2)] | [(1, 2), (2, 1)] | [(2, 1), (2, 1)] => "gnr-(IV)",
                [(1, 4)] | [(2, 2)] => "gnr-(V)",
                _ => "gnr",
            };
            Ok(tag.into())
        }
        _ => Err(GspinError::WrongGroup("classify", "gspin4 and gspin6".into())),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::half::Half;
    use crate::langlands::Segment;
    use crate::symbolic::{CuspDecl, EnvDecl, Generator};

    fn gens(names: &[&str]) -> Vec<Generator> {
        names.iter().map(|n| Generator { name: n.to_string(), ramified: false, order: None }).collect()
    }

    fn ch(n: &str) -> Base {
        Base::Char(CharExpr::gen(n))
    }

    fn det(n: &str) -> LanglandsDatum {
        LanglandsDatum::new(vec![
            Segment::centered(ch(n), 1, Half::from_halves(1)),
            Segment::centered(ch(n), 1, Half::from_halves(-1)),
        ])
    }

    #[test]
    fn group_presets() {
        assert_eq!(GroupSpec::gspin4().dual_dim(), 7);
        assert_eq!(GroupSpec::gspin6().dual_dim(), 16);
        assert!(matches!(GroupSpec::new(2, 2, 2, 4), Err(GspinError::NotCoprime { .. })));
        assert_eq!(GroupSpec::new(1, 4, 2, 1).unwrap(), GroupSpec::gspin6());
    }

    #[test]
    fn one_dimensional_pair_has_double_pole() {
        let env = RelationEnv::build(&EnvDecl { generators: gens(&["chi", "chi2"]), ..Default::default() }).unwrap();
        let rep = RestrictedRep::new(GroupSpec::gspin4(), det("chi"), det("chi2"), env);
        let v = gp_verdict(&rep).unwrap();
        assert_eq!(v, Verdict { generic: false, pole_order: 2, consistent: true });
        assert_eq!(classify(&rep).unwrap(), "nongnr");
    }

    #[test]
    fn dimension_mismatch() {
        let env = RelationEnv::build(&EnvDecl { generators: gens(&["chi"]), ..Default::default() }).unwrap();
        let rep = RestrictedRep::new(GroupSpec::gspin4(), det("chi"), LanglandsDatum::new(vec![Segment::point(ch("chi"))]), env);
        assert!(matches!(validate_lift(&rep), Err(GspinError::DimensionMismatch { expected: 2, found: 1 })));
    }

    #[test]
    fn gspin6_supercuspidal_with_a_selftwist() {
        let env = RelationEnv::build(&EnvDecl {
            generators: vec![Generator { name: "w".into(), ramified: true, order: Some(2) }, gens(&["eta"]).remove(0)],
            cusps: vec![CuspDecl {
                name: "s".into(),
                dim: 4,
                central: Some(CharExpr::gen_pow("eta", 2)),
                kind: None,
                selftwists: Some(vec![CharExpr::gen("w")]),
            }],
            ..Default::default()
        })
        .unwrap();
        let rep = RestrictedRep::new(
            GroupSpec::gspin6(),
            LanglandsDatum::new(vec![Segment::point(ch("eta"))]),
            LanglandsDatum::new(vec![Segment::point(Base::cusp("s"))]),
            env,
        );
        assert_eq!(validate_lift(&rep).unwrap(), vec![LiftNote::CentralConsistent]);
        let p = packet_size_gspin6(&rep).unwrap();
        assert_eq!(p.size, 2);
        assert_eq!(p.structure, GroupStructure::Elementary2(1));
        assert_eq!(p.case_tag.as_deref(), Some("gnr-(a)"));
    }
}
