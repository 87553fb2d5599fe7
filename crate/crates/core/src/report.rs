//! Verification of the catalog and the command implementations behind the
//! `gspin` binary. Every command returns a text rendering and a JSON record;
//! the binary picks one.

use std::collections::BTreeSet;
use std::fmt::{self, Write};

use rayon::prelude::*;
use serde::Serialize;
use serde_json::{json, Value};

use crate::catalog::{self, CatalogEntry, KernelEquation, KERNEL_EQUATIONS};
use crate::dsl::{format_matrix, format_param_file, parse_lproduct, parse_matrix, parse_param_file, ParamFile};
use crate::gspin::{
    adjoint, classify, gp_verdict, is_generic_restricted, packet_size, packet_size_gspin4, packet_size_gspin6,
    validate_lift, GroupSpec, RestrictedRep,
};
use crate::langlands::{linked, Base, LanglandsDatum, WdParam};
use crate::lfunction::{adjoint_g, adjoint_gl, rankin_selberg, rankin_selberg_terms};
use crate::nilpotent::{
    centralizer_dim_gl, degree_crosscheck, embed, is_so_element, monodromy, ExactMatrix, LieBasis, LieKind,
};
use crate::symbolic::{CharExpr, Order};
use crate::Half;

/// Library operations the verification pipeline is expected to reach.
pub const PRIMARY_OPERATIONS: &[&str] = &[
    "normalize",
    "is_trivial",
    "is_unramified",
    "order_of",
    "cusp_equiv",
    "to_parameter",
    "from_parameter",
    "linked",
    "is_generic",
    "central_character",
    "twist",
    "selftwists",
    "rankin_selberg",
    "adjoint_gl",
    "adjoint_g",
    "pole_order_at_1",
    "unramified_degree",
    "format",
    "validate_lift",
    "is_generic_restricted",
    "gp_verdict",
    "packet_size_gspin4",
    "packet_size_gspin6",
    "ad_operator",
    "kernel",
    "embed",
    "is_so_element",
    "degree_crosscheck",
    "parse",
];

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "UPPERCASE")]
pub enum Status {
    Pass,
    /// Agrees with the corrected reading, not with the printed value.
    Erratum,
    Fail,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Pass => "PASS",
            Status::Erratum => "ERRATUM",
            Status::Fail => "FAIL",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Check {
    pub name: &'static str,
    pub status: Status,
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct EntryReport {
    pub id: String,
    pub row: String,
    pub status: Status,
    pub lproduct: Option<String>,
    pub ord: Option<u32>,
    pub checks: Vec<Check>,
    #[serde(skip)]
    pub touched: BTreeSet<&'static str>,
}

impl EntryReport {
    /// The checks that did not pass outright.
    pub fn findings(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| c.status != Status::Pass)
    }

    pub fn check(&self, name: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.name == name)
    }
}

#[derive(Default)]
struct Run {
    checks: Vec<Check>,
    touched: BTreeSet<&'static str>,
}

impl Run {
    fn touch(&mut self, ops: &[&'static str]) {
        self.touched.extend(ops.iter().copied());
    }

    fn push(&mut self, name: &'static str, status: Status, detail: impl Into<String>) {
        self.checks.push(Check { name, status, detail: detail.into() });
    }

    fn expect(&mut self, name: &'static str, ok: bool, detail: impl FnOnce() -> String) {
        if ok {
            self.push(name, Status::Pass, "");
        } else {
            self.push(name, Status::Fail, detail());
        }
    }

    fn finish(self, id: &str, row: &str, lproduct: Option<String>, ord: Option<u32>) -> EntryReport {
        let status = self.checks.iter().map(|c| c.status).max().unwrap_or(Status::Fail);
        EntryReport { id: id.into(), row: row.into(), status, lproduct, ord, checks: self.checks, touched: self.touched }
    }
}

trait Ctx<T> {
    fn ctx(self, what: &str) -> Result<T, String>;
}

impl<T, E: fmt::Display> Ctx<T> for Result<T, E> {
    fn ctx(self, what: &str) -> Result<T, String> {
        self.map_err(|e| format!("{what}: {e}"))
    }
}

fn sparse_matrix(n: usize, entries: &[(usize, usize, i64)]) -> ExactMatrix {
    let mut m = ExactMatrix::zeros(n, n);
    for &(i, j, v) in entries {
        m.set(i - 1, j - 1, crate::nilpotent::rational(v));
    }
    m
}

fn character_only(p: &WdParam) -> bool {
    p.pieces.iter().all(|x| matches!(x.base, Base::Char(_)))
}

/// Run one catalog entry through the whole pipeline.
pub fn verify_entry(e: &CatalogEntry) -> EntryReport {
    let mut run = Run::default();
    let mut out = (None, None);
    if let Err(msg) = pipeline(e, &mut run, &mut out) {
        run.push("pipeline", Status::Fail, msg);
    }
    run.finish(e.id, e.row, out.0, out.1)
}

fn pipeline(e: &CatalogEntry, r: &mut Run, out: &mut (Option<String>, Option<u32>)) -> Result<(), String> {
    r.touch(&["parse"]);
    let p = parse_param_file(e.source).ctx("parse")?;
    let again = parse_param_file(&format_param_file(&p)).ctx("reparse")?;
    r.expect("round-trip", again == p, || "parse(format(file)) differs from the file".into());
    r.expect("case", p.case.as_deref() == Some(e.id), || format!("file declares case {:?}", p.case));

    let rep = p.to_rep();
    let env = &rep.env;

    r.touch(&["order_of"]);
    let mut bad = vec![];
    for g in &p.env.generators {
        let o = env.order_of(&CharExpr::gen(&g.name)).ctx("order_of")?;
        let want = g.order.map(Order::Finite).unwrap_or(Order::Infinite);
        if o != want {
            bad.push(format!("{} has order {o}, declared {want}", g.name));
        }
    }
    r.expect("orders", bad.is_empty(), || bad.join("; "));

    r.touch(&["cusp_equiv", "is_trivial"]);
    let mut bad = vec![];
    for iso in &p.env.isos {
        let c = env.cusp_equiv(&iso.rhs, &iso.twist, &iso.lhs, &CharExpr::trivial()).ctx("cusp_equiv")?;
        let ok = match &c {
            Some(c) => env.is_trivial(c).ctx("is_trivial")?,
            None => false,
        };
        if !ok {
            bad.push(format!("{} = {} {}: connecting character {c:?}", iso.lhs, iso.rhs, iso.twist));
        }
    }
    r.expect("isos", bad.is_empty(), || bad.join("; "));

    r.touch(&["central_character", "twist", "normalize"]);
    let probe = CharExpr::nu(Half::ONE);
    let mut bad = vec![];
    for d in [&rep.lift_m, &rep.lift_n] {
        let w = d.central_character(env).ctx("central_character")?;
        let w2 = d.twist(&probe, env).ctx("twist")?.central_character(env).ctx("central_character")?;
        let n = d.dim(env).ctx("dim")? as i64;
        let want = env.normalize(&w.mul(&probe.pow(n))).ctx("normalize")?;
        if env.normalize(&w2).ctx("normalize")? != want {
            bad.push(format!("central character of {d} twisted by nu is {w2}, expected {want}"));
        }
    }
    r.expect("central-twist", bad.is_empty(), || bad.join("; "));

    r.touch(&["validate_lift"]);
    validate_lift(&rep).ctx("validate_lift")?;

    r.touch(&["is_generic", "is_generic_restricted", "linked"]);
    let gm = rep.lift_m.is_generic(env).ctx("is_generic")?;
    let gn = rep.lift_n.is_generic(env).ctx("is_generic")?;
    let generic = is_generic_restricted(&rep).ctx("is_generic_restricted")?;
    r.expect("generic", generic == e.generic && generic == (gm && gn), || {
        format!("computed generic = {generic} (lifts {gm}, {gn}), table says {}", e.generic)
    });
    for (d, g) in [(&rep.lift_m, gm), (&rep.lift_n, gn)] {
        let witness = d.linked_pair(env).ctx("linked_pair")?;
        let ok = match witness {
            Some((i, j)) => !g && linked(&d.segments[i], &d.segments[j], env).ctx("linked")?,
            None => g,
        };
        r.expect("linked-witness", ok, || format!("{d}: linked pair {witness:?} against generic = {g}"));
    }

    r.touch(&["to_parameter", "from_parameter"]);
    let pm = rep.lift_m.to_parameter(env).ctx("to_parameter")?;
    let pn = rep.lift_n.to_parameter(env).ctx("to_parameter")?;
    let back_m = WdParam::to_datum(&pm).ctx("from_parameter")?;
    let back_n = WdParam::to_datum(&pn).ctx("from_parameter")?;
    let ok = back_m.equivalent(&rep.lift_m, env).ctx("equivalent")? && back_n.equivalent(&rep.lift_n, env).ctx("equivalent")?;
    r.expect("parameter-round-trip", ok, || "datum -> parameter -> datum changed the lift".into());

    r.touch(&["adjoint_g", "adjoint_gl", "format", "pole_order_at_1"]);
    let l = adjoint(&rep, false).ctx("adjoint")?;
    let computed = l.to_string();
    let ord = l.pole_order_at_one(env).ctx("pole_order_at_1")?;
    *out = (Some(computed.clone()), Some(ord));
    let split = adjoint_gl(&pm, env).ctx("adjoint_gl")?.union(&adjoint_gl(&pn, env).ctx("adjoint_gl")?);
    let direct = adjoint_g(&pm, &pn, false, env).ctx("adjoint_g")?;
    r.expect("factorization", split.to_string() == computed && direct.to_string() == computed, || {
        format!("Ad(pi_m) + Ad(pi_n) = {split}, adjoint_g = {direct}, adjoint = {computed}")
    });

    let printed = parse_lproduct(e.printed, env).ctx("expected L-product")?.to_string();
    let reading = match &e.reading {
        Some(rd) => Some((parse_lproduct(rd.lproduct, env).ctx("reading")?.to_string(), rd.ord)),
        None => None,
    };
    if computed == printed {
        r.push("lproduct", Status::Pass, "");
    } else if reading.as_ref().is_some_and(|(s, _)| *s == computed) {
        r.push("lproduct", Status::Erratum, format!("printed {printed}; computed {computed} matches the reading"));
    } else {
        r.push("lproduct", Status::Fail, format!("expected {printed}, computed {computed}"));
    }
    let at_least = if e.at_least { " (table: at least)" } else { "" };
    if ord == e.printed_ord {
        r.push("ord", Status::Pass, at_least);
    } else if reading.as_ref().is_some_and(|(_, o)| *o == ord) {
        r.push("ord", Status::Erratum, format!("printed {}; computed {ord} matches the reading", e.printed_ord));
    } else {
        r.push("ord", Status::Fail, format!("expected {}{at_least}, computed {ord}", e.printed_ord));
    }

    r.touch(&["gp_verdict"]);
    let v = gp_verdict(&rep).ctx("gp_verdict")?;
    r.expect("gross-prasad", v.consistent && v.pole_order == ord && v.generic == generic, || format!("{v:?}"));

    r.touch(&["rankin_selberg"]);
    let mut bad = vec![];
    for w in [&pm, &pn] {
        let n = w.dim(env).ctx("dim")?;
        let terms = rankin_selberg_terms(w, w, env).ctx("rankin_selberg")?;
        let total: u32 = terms.iter().map(|t| t.dim).sum();
        let count = rankin_selberg(w, w, env).ctx("rankin_selberg")?.count();
        if total != n * n || count as usize != terms.len() {
            bad.push(format!("dimension {total} for n = {n}, {count} factors for {} terms", terms.len()));
        }
    }
    r.expect("dimension", bad.is_empty(), || bad.join("; "));

    if let Some(want) = &e.packet {
        r.touch(&["selftwists"]);
        let (report, owner) = if rep.group == GroupSpec::gspin4() {
            r.touch(&["packet_size_gspin4"]);
            (packet_size_gspin4(&rep).ctx("packet_size_gspin4")?, &rep.lift_m)
        } else {
            r.touch(&["packet_size_gspin6"]);
            (packet_size_gspin6(&rep).ctx("packet_size_gspin6")?, &rep.lift_n)
        };
        let all = owner.selftwists(env, None).ctx("selftwists")?;
        let structure = report.structure.to_string();
        r.expect("packet", report.size == want.size && structure == want.structure, || {
            format!("expected {} {}, computed {} {structure}", want.size, want.structure, report.size)
        });
        r.expect("packet-subgroup", report.group.iter().all(|c| all.contains(c)), || {
            "packet group is not inside the self-twists".into()
        });
    }

    let tag = classify(&rep).ctx("classify")?;
    r.expect("class", tag == e.class_tag, || format!("expected {}, classified {tag}", e.class_tag));

    let nm = monodromy(&pm, env).ctx("monodromy")?;
    let nn = monodromy(&pn, env).ctx("monodromy")?;
    for (declared, computed) in [(&p.monodromy_m, &nm), (&p.monodromy_n, &nn)] {
        if let Some(d) = declared {
            r.expect("monodromy", d == computed, || format!("declared {}, computed {}", format_matrix(d), format_matrix(computed)));
        }
    }
    if let Some(gso) = e.gso {
        r.touch(&["embed", "is_so_element"]);
        let x = embed(&rep.group, &nm, &nn).ctx("embed")?;
        let want = sparse_matrix(x.rows(), gso);
        r.expect("embed", x == want, || format!("expected {}, embedded {}", format_matrix(&want), format_matrix(&x)));
        r.expect("so-element", is_so_element(&x), || "embedded matrix fails X^T J + J X = 0".into());
    }

    r.touch(&["is_unramified"]);
    let mut unramified = character_only(&pm) && character_only(&pn);
    for piece in pm.pieces.iter().chain(&pn.pieces) {
        if let Base::Char(c) = &piece.base {
            unramified &= env.is_unramified(c).ctx("is_unramified")?;
        }
    }
    if unramified {
        r.touch(&["degree_crosscheck", "unramified_degree", "ad_operator", "kernel"]);
        let dc = degree_crosscheck(&rep.group, &pm, &pn, env).ctx("degree_crosscheck")?;
        let deg = adjoint(&rep, true).ctx("adjoint")?.unramified_degree(env).ctx("unramified_degree")?;
        r.expect("degree", dc.agrees() && deg == dc.l_degree, || {
            format!("unramified degree {}, dim ker ad N = {}", dc.l_degree, dc.kernel_dim)
        });
        if let Some(k) = e.degree {
            r.expect("degree-pinned", dc.kernel_dim == k as usize, || format!("pinned {k}, computed {}", dc.kernel_dim));
        }
    } else if e.degree.is_some() {
        r.push("degree-pinned", Status::Fail, "pinned degree on a parameter outside the cross-check");
    }
    Ok(())
}

/// Check one displayed centralizer in `gl(4)`.
pub fn verify_kernel(k: &KernelEquation) -> EntryReport {
    let mut r = Run::default();
    r.touch(&["ad_operator", "kernel"]);
    let res = (|| -> Result<(usize, usize), String> {
        let n = parse_matrix(k.matrix).ctx("matrix")?;
        let op = LieBasis::new(LieKind::Gl(n.rows())).ad_operator(&n).ctx("ad_operator")?;
        Ok((op.kernel().len(), centralizer_dim_gl(&n).ctx("centralizer")?))
    })();
    let dim = match res {
        Ok((a, b)) => {
            r.expect("kernel", a == k.dim && b == k.dim, || format!("expected {}, kernel {a}, centralizer {b}", k.dim));
            Some(a as u32)
        }
        Err(msg) => {
            r.push("pipeline", Status::Fail, msg);
            None
        }
    };
    r.finish(&kernel_id(k), k.id, None, dim)
}

fn kernel_id(k: &KernelEquation) -> String {
    format!("kernel/{}", k.id)
}

#[derive(Clone, Debug, Serialize)]
pub struct VerifySummary {
    pub entries: Vec<EntryReport>,
    pub pass: usize,
    pub erratum: usize,
    pub fail: usize,
    pub coverage: BTreeSet<&'static str>,
}

impl VerifySummary {
    pub fn collect(entries: Vec<EntryReport>) -> VerifySummary {
        let count = |s| entries.iter().filter(|e| e.status == s).count();
        let coverage = entries.iter().flat_map(|e| e.touched.iter().copied()).collect();
        VerifySummary { pass: count(Status::Pass), erratum: count(Status::Erratum), fail: count(Status::Fail), coverage, entries }
    }

    /// No entry failed. Errata are reported but accepted.
    pub fn ok(&self) -> bool {
        self.fail == 0
    }

    pub fn missing_operations(&self) -> Vec<&'static str> {
        PRIMARY_OPERATIONS.iter().copied().filter(|op| !self.coverage.contains(op)).collect()
    }
}

/// Verify a list of entries. Entries run in parallel; the order of the
/// reports follows the input.
pub fn verify_entries(entries: &[&CatalogEntry]) -> VerifySummary {
    let reports = entries.par_iter().map(|e| verify_entry(e)).collect();
    VerifySummary::collect(reports)
}

/// The whole catalog plus kernel equations, optionally filtered by a glob on
/// the id (`kernel/N12` for the kernel equations).
pub fn verify(filter: Option<&str>) -> Result<VerifySummary, glob::PatternError> {
    let pattern = glob::Pattern::new(filter.unwrap_or("*"))?;
    let entries: Vec<&CatalogEntry> = catalog::entries().iter().filter(|e| pattern.matches(e.id)).collect();
    let mut reports: Vec<EntryReport> = entries.par_iter().map(|e| verify_entry(e)).collect();
    reports.extend(KERNEL_EQUATIONS.iter().filter(|k| pattern.matches(&kernel_id(k))).map(verify_kernel));
    Ok(VerifySummary::collect(reports))
}

// ---------------------------------------------------------------- commands

/// Text and structured renderings of a command result, with its exit code.
#[derive(Clone, Debug)]
pub struct CmdOutput {
    pub text: String,
    pub structured: Value,
    pub code: i32,
}

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum CmdError {
    #[error("{0}")]
    Validation(String),
    #[error("internal invariant failed: {0}")]
    Internal(String),
}

impl CmdError {
    pub fn code(&self) -> i32 {
        match self {
            CmdError::Validation(_) => 2,
            CmdError::Internal(_) => 3,
        }
    }

    pub fn structured(&self) -> Value {
        let kind = match self {
            CmdError::Validation(_) => "validation",
            CmdError::Internal(_) => "internal",
        };
        json!({ "error": kind, "message": self.to_string(), "code": self.code() })
    }
}

struct Loaded {
    file: ParamFile,
    rep: RestrictedRep,
    label: String,
}

impl Loaded {
    fn invalid(&self, e: impl fmt::Display) -> CmdError {
        CmdError::Validation(format!("{}: {e}", self.label))
    }

    fn internal(&self, e: impl fmt::Display) -> CmdError {
        CmdError::Internal(format!("{}: {e}", self.label))
    }
}

fn load(src: &str) -> Result<Loaded, CmdError> {
    let file = parse_param_file(src).map_err(|e| CmdError::Validation(e.to_string()))?;
    let rep = file.to_rep();
    let label = file.case.clone().unwrap_or_else(|| "<file>".into());
    let l = Loaded { file, rep, label };
    validate_lift(&l.rep).map_err(|e| l.invalid(e))?;
    Ok(l)
}

fn header(l: &Loaded) -> String {
    format!("case {}\ngroup {}\nlift m = {}\nlift n = {}\n", l.label, l.rep.group, l.rep.lift_m, l.rep.lift_n)
}

fn ok(text: String, structured: Value) -> CmdOutput {
    CmdOutput { text, structured, code: 0 }
}

pub fn cmd_adjoint(src: &str) -> Result<CmdOutput, CmdError> {
    let l = load(src)?;
    let env = &l.rep.env;
    let notes: Vec<String> = validate_lift(&l.rep).map_err(|e| l.invalid(e))?.iter().map(|n| n.to_string()).collect();
    let ad = adjoint(&l.rep, false).map_err(|e| l.invalid(e))?;
    let full = adjoint(&l.rep, true).map_err(|e| l.invalid(e))?;
    let ord = ad.pole_order_at_one(env).map_err(|e| l.invalid(e))?;
    let pm = l.rep.lift_m.to_parameter(env).map_err(|e| l.invalid(e))?;
    let pn = l.rep.lift_n.to_parameter(env).map_err(|e| l.invalid(e))?;
    let split = adjoint_gl(&pm, env)
        .and_then(|a| Ok(a.union(&adjoint_gl(&pn, env)?)))
        .map_err(|e| l.invalid(e))?;
    if split.to_string() != ad.to_string() {
        return Err(l.internal(format!("Ad(pi_m) + Ad(pi_n) = {split} but adjoint = {ad}")));
    }
    let mut text = header(&l);
    let _ = writeln!(text, "L(s, pi, Ad) = {ad}");
    let _ = writeln!(text, "ord at s=1: {ord}");
    let _ = writeln!(text, "with centre: {full}");
    for n in &notes {
        let _ = writeln!(text, "note: {n}");
    }
    let structured = json!({
        "case": l.file.case,
        "group": l.rep.group.to_string(),
        "lproduct": ad.to_string(),
        "factors": ad.records(),
        "ord": ord,
        "full": full.to_string(),
        "notes": notes,
    });
    Ok(ok(text, structured))
}

pub fn cmd_generic(src: &str) -> Result<CmdOutput, CmdError> {
    let l = load(src)?;
    let env = &l.rep.env;
    let v = gp_verdict(&l.rep).map_err(|e| l.invalid(e))?;
    if !v.consistent {
        return Err(l.internal(format!("generic = {} but ord at s=1 is {}", v.generic, v.pole_order)));
    }
    let mut lifts = vec![];
    let mut text = header(&l);
    for (name, d) in [("m", &l.rep.lift_m), ("n", &l.rep.lift_n)] {
        let g = d.is_generic(env).map_err(|e| l.invalid(e))?;
        let pair = d.linked_pair(env).map_err(|e| l.invalid(e))?;
        let witness = pair.map(|(i, j)| (d.segments[i].to_string(), d.segments[j].to_string()));
        match &witness {
            Some((a, b)) => {
                let _ = writeln!(text, "lift {name}: linked segments {a} and {b}");
            }
            None => {
                let _ = writeln!(text, "lift {name}: generic");
            }
        }
        lifts.push(json!({ "lift": name, "generic": g, "linked": witness }));
    }
    let _ = writeln!(text, "generic: {}", if v.generic { "yes" } else { "no" });
    let _ = writeln!(text, "ord at s=1: {}", v.pole_order);
    let _ = writeln!(text, "consistent: {}", v.consistent);
    let class = classify(&l.rep).ok();
    if let Some(c) = &class {
        let _ = writeln!(text, "class: {c}");
    }
    let structured = json!({
        "case": l.file.case,
        "verdict": v,
        "lifts": lifts,
        "class": class,
    });
    Ok(ok(text, structured))
}

pub fn cmd_packet(src: &str) -> Result<CmdOutput, CmdError> {
    let l = load(src)?;
    let p = packet_size(&l.rep).map_err(|e| l.invalid(e))?;
    let mut text = header(&l);
    let group: Vec<String> = p.group.iter().map(|c| if c.is_empty() { "1".into() } else { c.to_string() }).collect();
    let _ = writeln!(text, "packet size: {}", p.size);
    let _ = writeln!(text, "structure: {}", p.structure);
    let _ = writeln!(text, "characters: {{{}}}", group.join(", "));
    if let Some(t) = &p.case_tag {
        let _ = writeln!(text, "class: {t}");
    }
    if let Some(b) = &p.bound_note {
        let _ = writeln!(text, "bound: {b}");
    }
    for w in &p.warnings {
        let _ = writeln!(text, "{w}");
    }
    let structured = json!({
        "case": l.file.case,
        "size": p.size,
        "structure": p.structure.to_string(),
        "characters": group,
        "class": p.case_tag,
        "bound": p.bound_note,
        "warnings": p.warnings,
    });
    Ok(ok(text, structured))
}

fn matrix_rows(m: &ExactMatrix) -> Vec<Vec<String>> {
    (0..m.rows()).map(|i| (0..m.cols()).map(|j| m.get(i, j).to_string()).collect()).collect()
}

fn matrix_block(m: &ExactMatrix) -> String {
    matrix_rows(m).iter().map(|r| format!("  {}\n", r.join(" "))).collect()
}

pub fn cmd_nilpotent(src: &str) -> Result<CmdOutput, CmdError> {
    let l = load(src)?;
    let env = &l.rep.env;
    let param = |d: &LanglandsDatum| d.to_parameter(env).map_err(|e| l.invalid(e));
    let (pm, pn) = (param(&l.rep.lift_m)?, param(&l.rep.lift_n)?);
    let nm = monodromy(&pm, env).map_err(|e| l.invalid(e))?;
    let nn = monodromy(&pn, env).map_err(|e| l.invalid(e))?;
    for (name, declared, computed) in [("m", &l.file.monodromy_m, &nm), ("n", &l.file.monodromy_n, &nn)] {
        if let Some(d) = declared {
            if d != computed {
                return Err(l.invalid(format!(
                    "declared monodromy {name} = {} does not match the lift, which gives {}",
                    format_matrix(d),
                    format_matrix(computed)
                )));
            }
        }
    }
    let cm = centralizer_dim_gl(&nm).map_err(|e| l.internal(e))?;
    let cn = centralizer_dim_gl(&nn).map_err(|e| l.internal(e))?;
    let mut text = header(&l);
    let _ = write!(text, "N_m ({cm}-dim centralizer in gl)\n{}", matrix_block(&nm));
    let _ = write!(text, "N_n ({cn}-dim centralizer in gl)\n{}", matrix_block(&nn));
    let mut structured = json!({
        "case": l.file.case,
        "n_m": matrix_rows(&nm),
        "n_n": matrix_rows(&nn),
        "centralizer_m": cm,
        "centralizer_n": cn,
    });
    match embed(&l.rep.group, &nm, &nn) {
        Ok(x) => {
            if !is_so_element(&x) {
                return Err(l.internal(format!("embedded matrix {} is not in so", format_matrix(&x))));
            }
            let _ = write!(text, "embedded in gso\n{}", matrix_block(&x));
            structured["embedded"] = json!(matrix_rows(&x));
        }
        Err(e) => {
            let _ = writeln!(text, "no embedding: {e}");
        }
    }
    let kernel = LieBasis::new(l.rep.group.lie_kind())
        .ad_operator(&ExactMatrix::direct_sum(&[nm.clone(), nn.clone()]))
        .map_err(|e| l.internal(e))?
        .kernel_dim();
    let _ = writeln!(text, "dim ker ad N: {kernel}");
    structured["kernel_dim"] = json!(kernel);
    match degree_crosscheck(&l.rep.group, &pm, &pn, env) {
        Ok(dc) => {
            if !dc.agrees() {
                return Err(l.internal(format!("unramified degree {} but kernel dimension {}", dc.l_degree, dc.kernel_dim)));
            }
            let _ = writeln!(text, "unramified degree: {} (agrees)", dc.l_degree);
            structured["degree"] = json!(dc);
        }
        Err(e) => {
            let _ = writeln!(text, "degree cross-check skipped: {e}");
        }
    }
    Ok(ok(text, structured))
}

pub fn cmd_verify_tables(filter: Option<&str>) -> Result<CmdOutput, CmdError> {
    let s = verify(filter).map_err(|e| CmdError::Validation(format!("bad filter: {e}")))?;
    if s.entries.is_empty() {
        return Err(CmdError::Validation(format!("filter {:?} matches nothing", filter.unwrap_or("*"))));
    }
    Ok(CmdOutput { text: render_summary(&s), structured: json!(s), code: if s.ok() { 0 } else { 1 } })
}

pub fn render_summary(s: &VerifySummary) -> String {
    let mut text = String::new();
    for e in &s.entries {
        let _ = writeln!(text, "{:<8} {} {}", e.status.to_string(), e.id, e.row);
        for c in e.findings() {
            let _ = writeln!(text, "         {} {}: {}", c.status, c.name, c.detail);
        }
    }
    let _ = writeln!(
        text,
        "{} checked: {} pass, {} erratum, {} fail",
        s.entries.len(),
        s.pass,
        s.erratum,
        s.fail
    );
    text
}

/// `catalog` without an id lists entries; with one, prints its source.
pub fn cmd_catalog(filter: Option<&str>, id: Option<&str>) -> Result<CmdOutput, CmdError> {
    if let Some(id) = id {
        let e = catalog::get(id).ok_or_else(|| CmdError::Validation(format!("no catalog entry {id}")))?;
        return Ok(ok(e.source.to_string(), json!(e)));
    }
    let list = catalog::filter(filter.unwrap_or("*")).map_err(|e| CmdError::Validation(format!("bad filter: {e}")))?;
    let mut text = String::new();
    for e in &list {
        let _ = writeln!(text, "{:<28} {:<8} {}", e.id, e.row, e.expected_lproduct());
    }
    let rows: Vec<Value> = list
        .iter()
        .map(|e| json!({ "id": e.id, "row": e.row, "lproduct": e.expected_lproduct(), "ord": e.expected_ord() }))
        .collect();
    Ok(ok(text, json!(rows)))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn statuses_order_by_severity() {
        assert!(Status::Pass < Status::Erratum && Status::Erratum < Status::Fail);
        assert_eq!(serde_json::to_string(&Status::Erratum).unwrap(), "\"ERRATUM\"");
    }

    #[test]
    fn corrupted_expectation_fails() {
        let mut e = catalog::get("gspin4/gnr/i").unwrap().clone();
        assert_eq!(verify_entry(&e).status, Status::Pass);
        e.printed = "L(s+1)^3";
        let r = verify_entry(&e);
        assert_eq!(r.status, Status::Fail);
        assert_eq!(r.check("lproduct").unwrap().status, Status::Fail);
    }

    #[test]
    fn kernels_match() {
        for k in KERNEL_EQUATIONS {
            assert_eq!(verify_kernel(k).status, Status::Pass, "{}", k.id);
        }
    }

    #[test]
    fn bad_source_is_a_validation_error() {
        let err = cmd_adjoint("group gspin4;\nlift m = Q([x]);").unwrap_err();
        assert_eq!(err.code(), 2);
        assert!(err.to_string().starts_with("2:"), "{err}");
    }
}
