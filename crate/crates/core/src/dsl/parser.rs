use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_rational::BigRational;

use super::lexer::{lex, Spanned, Tok};
use super::{DslError, ParamFile};
use crate::gspin::GroupSpec;
use crate::half::Half;
use crate::langlands::{Base, LanglandsDatum, Segment};
use crate::lfunction::{CuspRef, LFactor, LProduct};
use crate::nilpotent::ExactMatrix;
use crate::symbolic::{CharExpr, CuspDecl, CuspKind, EnvDecl, Generator, IsoDecl, RelationEnv, SymbolError, NU};

/// Words that end an expression and cannot name a symbol.
const KEYWORDS: &[&str] = &[
    "env", "gen", "def", "cusp", "iso", "dim", "order", "ramified", "unramified", "central", "kind", "selftwists",
    "dyadic_degree", "group", "case", "lift", "monodromy", "Q", "L", "Ad", "x", NU,
];

#[derive(Clone, Debug)]
enum Atom {
    Nu(Half),
    Sym { name: String, exp: i64, dual: bool, line: usize, col: usize },
}

pub struct Parser {
    toks: Vec<Spanned>,
    pos: usize,
}

struct Positions {
    names: BTreeMap<String, (usize, usize)>,
    env: (usize, usize),
}

impl Positions {
    fn of_error(&self, e: &SymbolError) -> (usize, usize) {
        let name = match e {
            SymbolError::Duplicate(n)
            | SymbolError::Reserved(n)
            | SymbolError::CyclicDefinition(n)
            | SymbolError::Unknown(n)
            | SymbolError::NotACharacter(n)
            | SymbolError::NotACusp(n)
            | SymbolError::BadOrder(n)
            | SymbolError::BadCusp(n, _)
            | SymbolError::InconsistentIso(n, _) => n,
        };
        self.names.get(name).copied().unwrap_or(self.env)
    }
}

impl Parser {
    pub fn new(src: &str) -> Result<Parser, DslError> {
        Ok(Parser { toks: lex(src)?, pos: 0 })
    }

    fn peek(&self) -> &Tok {
        &self.toks[self.pos].tok
    }

    fn peek_at(&self, k: usize) -> &Tok {
        &self.toks[(self.pos + k).min(self.toks.len() - 1)].tok
    }

    fn here(&self) -> (usize, usize) {
        let s = &self.toks[self.pos];
        (s.line, s.col)
    }

    fn bump(&mut self) -> Tok {
        let t = self.toks[self.pos].tok.clone();
        if self.pos + 1 < self.toks.len() {
            self.pos += 1;
        }
        t
    }

    fn err(&self, expected: &str) -> DslError {
        let (l, c) = self.here();
        DslError::at(l, c, format!("expected {expected}, found {}", self.peek().describe()))
    }

    fn expect(&mut self, t: Tok, what: &str) -> Result<(), DslError> {
        if *self.peek() == t {
            self.bump();
            Ok(())
        } else {
            Err(self.err(what))
        }
    }

    fn is_word(&self, w: &str) -> bool {
        matches!(self.peek(), Tok::Ident(s) if s == w)
    }

    fn expect_word(&mut self, w: &str) -> Result<(), DslError> {
        if self.is_word(w) {
            self.bump();
            Ok(())
        } else {
            Err(self.err(&format!("`{w}`")))
        }
    }

    /// A user-chosen name.
    fn name(&mut self, what: &str) -> Result<(String, usize, usize), DslError> {
        let (l, c) = self.here();
        match self.peek().clone() {
            Tok::Ident(s) if !KEYWORDS.contains(&s.as_str()) => {
                self.bump();
                Ok((s, l, c))
            }
            Tok::Ident(s) => Err(DslError::at(l, c, format!("`{s}` is reserved and cannot be used as {what}"))),
            _ => Err(self.err(what)),
        }
    }

    fn int(&mut self, what: &str) -> Result<i64, DslError> {
        match *self.peek() {
            Tok::Int(n) => {
                self.bump();
                Ok(n)
            }
            _ => Err(self.err(what)),
        }
    }

    fn signed_int(&mut self) -> Result<i64, DslError> {
        let neg = if *self.peek() == Tok::Minus {
            self.bump();
            true
        } else {
            false
        };
        let n = self.int("an integer")?;
        Ok(if neg { -n } else { n })
    }

    /// `-3/2`, `1`, `-1/1`.
    fn signed_half(&mut self) -> Result<Half, DslError> {
        let (l, c) = self.here();
        let n = self.signed_int()?;
        let d = if *self.peek() == Tok::Slash {
            self.bump();
            self.int("a denominator")?
        } else {
            1
        };
        match d {
            1 => Ok(Half::from_int(n)),
            2 => Ok(Half::from_halves(n)),
            _ => Err(DslError::at(l, c, "exponents of nu must be half-integers")),
        }
    }

    fn signed_rational(&mut self) -> Result<BigRational, DslError> {
        let (l, c) = self.here();
        let n = self.signed_int()?;
        let d = if *self.peek() == Tok::Slash {
            self.bump();
            self.int("a denominator")?
        } else {
            1
        };
        if d == 0 {
            return Err(DslError::at(l, c, "zero denominator"));
        }
        Ok(BigRational::new(BigInt::from(n), BigInt::from(d)))
    }

    fn starts_atom(&self) -> bool {
        match self.peek() {
            Tok::Ident(s) => s == NU || !KEYWORDS.contains(&s.as_str()),
            Tok::Int(1) | Tok::Star => true,
            _ => false,
        }
    }

    fn atom(&mut self) -> Result<Option<Atom>, DslError> {
        let (l, c) = self.here();
        match self.bump() {
            Tok::Star => Ok(None),
            Tok::Int(1) => Ok(None),
            Tok::Ident(s) if s == NU => {
                let t = if *self.peek() == Tok::Caret {
                    self.bump();
                    if *self.peek() == Tok::LParen {
                        self.bump();
                        let h = self.signed_half()?;
                        self.expect(Tok::RParen, "`)`")?;
                        h
                    } else {
                        self.signed_half()?
                    }
                } else {
                    Half::ONE
                };
                Ok(Some(Atom::Nu(t)))
            }
            Tok::Ident(name) => {
                let mut exp = 1;
                let mut dual = false;
                if *self.peek() == Tok::Caret {
                    self.bump();
                    if self.is_word("v") {
                        self.bump();
                        dual = true;
                    } else if *self.peek() == Tok::LParen {
                        self.bump();
                        exp = self.signed_int()?;
                        self.expect(Tok::RParen, "`)`")?;
                    } else {
                        exp = self.signed_int()?;
                    }
                }
                Ok(Some(Atom::Sym { name, exp, dual, line: l, col: c }))
            }
            _ => unreachable!("guarded by starts_atom"),
        }
    }

    fn atoms(&mut self) -> Result<Vec<Atom>, DslError> {
        let mut out = Vec::new();
        while self.starts_atom() {
            if let Some(a) = self.atom()? {
                out.push(a);
            }
        }
        Ok(out)
    }

    fn char_expr(&mut self, what: &str) -> Result<CharExpr, DslError> {
        if !self.starts_atom() {
            return Err(self.err(what));
        }
        let mut e = CharExpr::trivial();
        for a in self.atoms()? {
            match a {
                Atom::Nu(t) => e = e.mul(&CharExpr::nu(t)),
                Atom::Sym { name, exp, dual: false, .. } => e = e.mul(&CharExpr::gen_pow(&name, exp)),
                Atom::Sym { line, col, .. } => return Err(DslError::at(line, col, "`^v` is only allowed on cuspidal symbols")),
            }
        }
        Ok(e)
    }

    pub fn char_expr_only(mut self) -> Result<CharExpr, DslError> {
        let e = self.char_expr("a character expression")?;
        self.expect(Tok::Eof, "end of input")?;
        Ok(e)
    }

    fn matrix(&mut self) -> Result<ExactMatrix, DslError> {
        let (l, c) = self.here();
        self.expect(Tok::LBracket, "`[`")?;
        let mut rows = Vec::new();
        loop {
            self.expect(Tok::LBracket, "`[`")?;
            let mut row = vec![self.signed_rational()?];
            while *self.peek() == Tok::Comma {
                self.bump();
                row.push(self.signed_rational()?);
            }
            self.expect(Tok::RBracket, "`,` or `]`")?;
            rows.push(row);
            if rows.len() > 64 {
                return Err(DslError::at(l, c, "matrix literal too large"));
            }
            match self.peek() {
                Tok::Comma => {
                    self.bump();
                }
                Tok::RBracket => {
                    self.bump();
                    break;
                }
                _ => return Err(self.err("`,` or `]`")),
            }
        }
        ExactMatrix::from_rows(rows).map_err(|_| DslError::at(l, c, "matrix rows have different lengths"))
    }

    pub fn matrix_only(mut self) -> Result<ExactMatrix, DslError> {
        let m = self.matrix()?;
        self.expect(Tok::Eof, "end of input")?;
        Ok(m)
    }

    pub fn param_file(mut self) -> Result<ParamFile, DslError> {
        let mut env: Option<(EnvDecl, Positions)> = None;
        let mut group = None;
        let mut case = None;
        let mut lifts: [Option<(Vec<RawSegment>, usize, usize)>; 2] = [None, None];
        let mut monodromy: [Option<(ExactMatrix, usize, usize)>; 2] = [None, None];
        loop {
            let (l, c) = self.here();
            match self.peek().clone() {
                Tok::Eof => break,
                Tok::Ident(w) if w == "env" => {
                    if env.is_some() {
                        return Err(DslError::at(l, c, "duplicate `env` block"));
                    }
                    env = Some(self.env_block()?);
                }
                Tok::Ident(w) if w == "group" => {
                    if group.is_some() {
                        return Err(DslError::at(l, c, "duplicate `group` statement"));
                    }
                    self.bump();
                    group = Some(self.group()?);
                    self.expect(Tok::Semi, "`;`")?;
                }
                Tok::Ident(w) if w == "case" => {
                    self.bump();
                    match self.bump() {
                        Tok::Str(s) => case = Some(s),
                        _ => return Err(DslError::at(l, c, "expected a quoted case label after `case`")),
                    }
                    self.expect(Tok::Semi, "`;`")?;
                }
                Tok::Ident(w) if w == "lift" || w == "monodromy" => {
                    self.bump();
                    let which = match self.peek() {
                        Tok::Ident(s) if s == "m" => 0,
                        Tok::Ident(s) if s == "n" => 1,
                        _ => return Err(self.err("`m` or `n`")),
                    };
                    self.bump();
                    self.expect(Tok::Eq, "`=`")?;
                    if w == "lift" {
                        if lifts[which].is_some() {
                            return Err(DslError::at(l, c, "duplicate lift"));
                        }
                        lifts[which] = Some((self.datum()?, l, c));
                    } else {
                        if monodromy[which].is_some() {
                            return Err(DslError::at(l, c, "duplicate monodromy"));
                        }
                        monodromy[which] = Some((self.matrix()?, l, c));
                    }
                    self.expect(Tok::Semi, "`;`")?;
                }
                _ => return Err(self.err("`env`, `group`, `case`, `lift` or `monodromy`")),
            }
        }
        let end = self.here();
        let (decl, positions) = env.unwrap_or_else(|| (EnvDecl::default(), Positions { names: BTreeMap::new(), env: (1, 1) }));
        let built = RelationEnv::build(&decl).map_err(|e| {
            let (l, c) = positions.of_error(&e);
            DslError::at(l, c, e.to_string())
        })?;
        let group = group.ok_or_else(|| DslError::at(end.0, end.1, "missing `group` statement"))?;
        let mut data = Vec::new();
        for (k, which) in ["m", "n"].iter().enumerate() {
            let (raw, l, c) = lifts[k].take().ok_or_else(|| DslError::at(end.0, end.1, format!("missing `lift {which}`")))?;
            let d = resolve_datum(raw, &decl, &built)?;
            let expected = if k == 0 { group.m } else { group.n };
            let dim = d.dim(&built).map_err(|e| DslError::at(l, c, e.to_string()))?;
            if dim != expected {
                return Err(DslError::at(l, c, format!("lift {which} has dimension {dim}, expected {expected}")));
            }
            data.push(d);
        }
        let mut mono = [None, None];
        for k in 0..2 {
            if let Some((m, l, c)) = monodromy[k].take() {
                let size = if k == 0 { group.m } else { group.n } as usize;
                if m.rows() != size || m.cols() != size {
                    return Err(DslError::at(l, c, format!("monodromy must be {size}x{size}")));
                }
                mono[k] = Some(m);
            }
        }
        let [monodromy_m, monodromy_n] = mono;
        let lift_n = data.pop().expect("two lifts");
        let lift_m = data.pop().expect("two lifts");
        Ok(ParamFile { env: decl, group, case, lift_m, lift_n, monodromy_m, monodromy_n })
    }

    fn group(&mut self) -> Result<GroupSpec, DslError> {
        let (l, c) = self.here();
        match self.peek().clone() {
            Tok::Ident(s) => {
                self.bump();
                GroupSpec::from_preset(&s).ok_or_else(|| DslError::at(l, c, format!("unknown group `{s}`")))
            }
            Tok::LParen => {
                self.bump();
                let mut v = vec![self.int("an integer")?];
                for _ in 0..3 {
                    self.expect(Tok::Comma, "`,`")?;
                    v.push(self.int("an integer")?);
                }
                self.expect(Tok::RParen, "`)`")?;
                let m = u32::try_from(v[0]).map_err(|_| DslError::at(l, c, "m out of range"))?;
                let n = u32::try_from(v[1]).map_err(|_| DslError::at(l, c, "n out of range"))?;
                if m > 16 || n > 16 {
                    return Err(DslError::at(l, c, "GL sizes above 16 are not supported"));
                }
                GroupSpec::new(m, n, v[2], v[3]).map_err(|e| DslError::at(l, c, e.to_string()))
            }
            _ => Err(self.err("a group name or `(m, n, r, s)`")),
        }
    }

    fn env_block(&mut self) -> Result<(EnvDecl, Positions), DslError> {
        let env_pos = self.here();
        self.expect_word("env")?;
        self.expect(Tok::LBrace, "`{`")?;
        let mut decl = EnvDecl::default();
        let mut names = BTreeMap::new();
        loop {
            let (l, c) = self.here();
            match self.peek().clone() {
                Tok::RBrace => {
                    self.bump();
                    break;
                }
                Tok::Ident(w) if w == "gen" => {
                    self.bump();
                    let (name, nl, nc) = self.name("a generator name")?;
                    let mut g = Generator { name: name.clone(), ramified: false, order: None };
                    loop {
                        if self.is_word("order") {
                            self.bump();
                            let n = self.int("an order")?;
                            if n == 0 {
                                return Err(DslError::at(nl, nc, "order must be at least 1"));
                            }
                            g.order = Some(n as u64);
                        } else if self.is_word("ramified") {
                            self.bump();
                            g.ramified = true;
                        } else if self.is_word("unramified") {
                            self.bump();
                            g.ramified = false;
                        } else {
                            break;
                        }
                    }
                    self.expect(Tok::Semi, "`order`, `ramified`, `unramified` or `;`")?;
                    names.entry(name).or_insert((nl, nc));
                    decl.generators.push(g);
                }
                Tok::Ident(w) if w == "def" => {
                    self.bump();
                    let (name, nl, nc) = self.name("a definition name")?;
                    self.expect(Tok::Eq, "`=`")?;
                    let e = self.char_expr("a character expression")?;
                    self.expect(Tok::Semi, "`;`")?;
                    names.entry(name.clone()).or_insert((nl, nc));
                    decl.definitions.push((name, e));
                }
                Tok::Ident(w) if w == "cusp" => {
                    self.bump();
                    let (name, nl, nc) = self.name("a cuspidal symbol")?;
                    self.expect_word("dim")?;
                    let dim = self.int("a dimension")?;
                    if !(1..=64).contains(&dim) {
                        return Err(DslError::at(nl, nc, "dimension must be between 1 and 64"));
                    }
                    let mut cd = CuspDecl { name: name.clone(), dim: dim as u32, central: None, kind: None, selftwists: None };
                    loop {
                        if self.is_word("central") {
                            self.bump();
                            cd.central = Some(self.char_expr("a central character")?);
                        } else if self.is_word("kind") {
                            self.bump();
                            cd.kind = Some(self.kind()?);
                        } else if self.is_word("selftwists") {
                            self.bump();
                            self.expect(Tok::LBrace, "`{`")?;
                            let mut list = Vec::new();
                            if *self.peek() != Tok::RBrace {
                                list.push(self.char_expr("a character expression")?);
                                while *self.peek() == Tok::Comma {
                                    self.bump();
                                    list.push(self.char_expr("a character expression")?);
                                }
                            }
                            self.expect(Tok::RBrace, "`,` or `}`")?;
                            cd.selftwists = Some(list);
                        } else {
                            break;
                        }
                    }
                    self.expect(Tok::Semi, "`central`, `kind`, `selftwists` or `;`")?;
                    names.entry(name).or_insert((nl, nc));
                    decl.cusps.push(cd);
                }
                Tok::Ident(w) if w == "iso" => {
                    self.bump();
                    let (lhs, nl, nc) = self.name("a cuspidal symbol")?;
                    self.expect(Tok::Eq, "`=`")?;
                    let (rhs, _, _) = self.name("a cuspidal symbol")?;
                    let twist = if self.starts_atom() { self.char_expr("a twist")? } else { CharExpr::trivial() };
                    self.expect(Tok::Semi, "`;`")?;
                    names.entry(lhs.clone()).or_insert((nl, nc));
                    decl.isos.push(IsoDecl { lhs, rhs, twist });
                }
                Tok::Ident(w) if w == "dyadic_degree" => {
                    self.bump();
                    let d = self.int("a degree")?;
                    if !(1..=32).contains(&d) {
                        return Err(DslError::at(l, c, "dyadic degree must be between 1 and 32"));
                    }
                    decl.dyadic_degree = Some(d as u32);
                    self.expect(Tok::Semi, "`;`")?;
                }
                _ => return Err(self.err("`gen`, `def`, `cusp`, `iso`, `dyadic_degree` or `}`")),
            }
        }
        check_declared(&decl, &names, env_pos)?;
        Ok((decl, Positions { names, env: env_pos }))
    }

    fn kind(&mut self) -> Result<CuspKind, DslError> {
        let (l, c) = self.here();
        let (w, _, _) = match self.peek().clone() {
            Tok::Ident(s) => {
                self.bump();
                (s, l, c)
            }
            _ => return Err(self.err("`primitive`, `dihedral-1` or `dihedral-3`")),
        };
        let word = if w == "dihedral" {
            self.expect(Tok::Minus, "`-`")?;
            format!("dihedral-{}", self.int("1 or 3")?)
        } else {
            w
        };
        CuspKind::from_keyword(&word).ok_or_else(|| DslError::at(l, c, format!("unknown kind `{word}`")))
    }

    fn datum(&mut self) -> Result<Vec<RawSegment>, DslError> {
        self.expect_word("Q")?;
        self.expect(Tok::LParen, "`(`")?;
        let mut segs = vec![self.segment()?];
        while *self.peek() == Tok::Comma {
            self.bump();
            segs.push(self.segment()?);
        }
        self.expect(Tok::RParen, "`,` or `)`")?;
        Ok(segs)
    }

    fn segment(&mut self) -> Result<RawSegment, DslError> {
        let (line, col) = self.here();
        self.expect(Tok::LBracket, "`[`")?;
        if !self.starts_atom() {
            return Err(self.err("a segment endpoint"));
        }
        let first = self.atoms()?;
        let last = if *self.peek() == Tok::Comma {
            self.bump();
            if !self.starts_atom() {
                return Err(self.err("a segment endpoint"));
            }
            Some(self.atoms()?)
        } else {
            None
        };
        self.expect(Tok::RBracket, "`,` or `]`")?;
        Ok(RawSegment { first, last, line, col })
    }

    pub fn lproduct(mut self, env: &RelationEnv) -> Result<LProduct, DslError> {
        let mut out = LProduct::new();
        if *self.peek() == Tok::Int(1) && *self.peek_at(1) == Tok::Eof {
            return Ok(out);
        }
        loop {
            let (l, c) = self.here();
            let f = self.lfactor(env)?;
            let mult = if *self.peek() == Tok::Caret {
                self.bump();
                let m = self.int("a multiplicity")?;
                if !(1..=1000).contains(&m) {
                    return Err(DslError::at(l, c, "multiplicity must be between 1 and 1000"));
                }
                m as u32
            } else {
                1
            };
            out.insert(&f, mult, env).map_err(|e| DslError::at(l, c, e.to_string()))?;
            if *self.peek() == Tok::Eof {
                break;
            }
        }
        Ok(out)
    }

    fn lfactor(&mut self, env: &RelationEnv) -> Result<LFactor, DslError> {
        self.expect_word("L")?;
        self.expect(Tok::LParen, "`(`")?;
        self.expect_word("s")?;
        let shift = match self.peek() {
            Tok::Plus => {
                self.bump();
                self.signed_half()?
            }
            Tok::Minus => {
                self.bump();
                -self.signed_half()?
            }
            _ => Half::ZERO,
        };
        if *self.peek() == Tok::RParen {
            self.bump();
            return Ok(LFactor::char(shift, CharExpr::trivial()));
        }
        self.expect(Tok::Comma, "`,` or `)`")?;
        let (al, ac) = self.here();
        let mut atoms = self.atoms()?;
        while *self.peek() == Tok::Cross || self.is_word("x") {
            self.bump();
            if !self.starts_atom() {
                return Err(self.err("a factor after `x`"));
            }
            atoms.extend(self.atoms()?);
        }
        let is_ad = if *self.peek() == Tok::Comma {
            self.bump();
            self.expect_word("Ad")?;
            true
        } else {
            false
        };
        let ad_twist = if is_ad && *self.peek() == Tok::Pipe {
            self.bump();
            Some(self.char_expr("a twist")?)
        } else {
            None
        };
        self.expect(Tok::RParen, "`)`")?;

        let mut cusps = Vec::new();
        let mut twist = CharExpr::trivial();
        for a in atoms {
            match a {
                Atom::Nu(t) => twist = twist.mul(&CharExpr::nu(t)),
                Atom::Sym { name, exp, dual, line, col } => {
                    if env.is_cusp(&name) {
                        if exp != 1 {
                            return Err(DslError::at(line, col, format!("cuspidal symbol `{name}` cannot be raised to a power")));
                        }
                        cusps.push(CuspRef { symbol: name, dual });
                    } else if dual {
                        return Err(DslError::at(line, col, "`^v` is only allowed on cuspidal symbols"));
                    } else if !env.knows(&name) {
                        return Err(DslError::at(line, col, format!("unknown symbol `{name}`")));
                    } else {
                        twist = twist.mul(&CharExpr::gen_pow(&name, exp));
                    }
                }
            }
        }
        if is_ad {
            let [cusp] = &cusps[..] else {
                return Err(DslError::at(al, ac, "an adjoint factor names exactly one cuspidal symbol"));
            };
            if cusp.dual || !twist.is_empty() {
                return Err(DslError::at(al, ac, "put the twist of an adjoint factor after `|`"));
            }
            return Ok(LFactor::CuspAd { shift, symbol: cusp.symbol.clone(), twist: ad_twist.unwrap_or_default() });
        }
        match cusps.len() {
            0 => Ok(LFactor::CharFactor { shift, expr: twist }),
            1 => Ok(LFactor::CuspPair { shift, left: cusps.remove(0), right: None, twist }),
            2 => {
                let right = cusps.pop();
                Ok(LFactor::CuspPair { shift, left: cusps.remove(0), right, twist })
            }
            _ => Err(DslError::at(al, ac, "at most two cuspidal symbols per factor")),
        }
    }
}

pub struct RawSegment {
    first: Vec<Atom>,
    last: Option<Vec<Atom>>,
    line: usize,
    col: usize,
}

fn check_declared(decl: &EnvDecl, names: &BTreeMap<String, (usize, usize)>, env_pos: (usize, usize)) -> Result<(), DslError> {
    let known = |n: &str| names.contains_key(n);
    let check = |e: &CharExpr| -> Result<(), DslError> {
        for g in e.gens.keys() {
            if !known(g) {
                return Err(DslError::at(env_pos.0, env_pos.1, format!("unknown symbol `{g}`")));
            }
        }
        Ok(())
    };
    for (name, e) in &decl.definitions {
        check(e).map_err(|err| relocate(err, names.get(name)))?;
    }
    for c in &decl.cusps {
        for e in c.central.iter().chain(c.selftwists.iter().flatten()) {
            check(e).map_err(|err| relocate(err, names.get(&c.name)))?;
        }
    }
    for iso in &decl.isos {
        check(&iso.twist).map_err(|err| relocate(err, names.get(&iso.lhs)))?;
        if !known(&iso.rhs) {
            let (l, c) = names.get(&iso.lhs).copied().unwrap_or(env_pos);
            return Err(DslError::at(l, c, format!("unknown symbol `{}`", iso.rhs)));
        }
    }
    Ok(())
}

fn relocate(mut e: DslError, pos: Option<&(usize, usize)>) -> DslError {
    if let Some(&(l, c)) = pos {
        e.line = l;
        e.col = c;
    }
    e
}

/// Split endpoint atoms into a base and a `nu` exponent.
fn endpoint(atoms: &[Atom], decl: &EnvDecl, env: &RelationEnv) -> Result<(Base, Half), DslError> {
    let mut cusp: Option<String> = None;
    let mut chars = CharExpr::trivial();
    let mut t = Half::ZERO;
    for a in atoms {
        match a {
            Atom::Nu(x) => t += *x,
            Atom::Sym { name, exp, dual, line, col } => {
                let (line, col) = (*line, *col);
                if *dual {
                    return Err(DslError::at(line, col, "contragredients cannot appear in a segment"));
                }
                if env.is_cusp(name) {
                    if *exp != 1 || cusp.is_some() {
                        return Err(DslError::at(line, col, "a segment endpoint holds at most one cuspidal symbol, to the first power"));
                    }
                    cusp = Some(name.clone());
                } else if decl.generators.iter().any(|g| g.name == *name) || decl.definitions.iter().any(|d| d.0 == *name) {
                    chars = chars.mul(&CharExpr::gen_pow(name, *exp));
                } else {
                    return Err(DslError::at(line, col, format!("unknown symbol `{name}`")));
                }
            }
        }
    }
    Ok((
        match cusp {
            Some(symbol) => Base::Cusp { symbol, twist: chars },
            None => Base::Char(chars),
        },
        t,
    ))
}

fn resolve_datum(raw: Vec<RawSegment>, decl: &EnvDecl, env: &RelationEnv) -> Result<LanglandsDatum, DslError> {
    let mut segs = Vec::new();
    for r in raw {
        let (base, b) = endpoint(&r.first, decl, env)?;
        let e = match &r.last {
            None => b,
            Some(atoms) => {
                let (base2, e) = endpoint(atoms, decl, env)?;
                if base2 != base {
                    return Err(DslError::at(r.line, r.col, "segment endpoints must share a base up to powers of nu"));
                }
                e
            }
        };
        if (e - b).halves() > 128 {
            return Err(DslError::at(r.line, r.col, "segment too long"));
        }
        let s = Segment::new(base, b, e).map_err(|err| DslError::at(r.line, r.col, err.to_string()))?;
        segs.push(s);
    }
    Ok(LanglandsDatum::new(segs))
}
