//! Built-in catalog: one entry per row (and sub-case) of the GSpin(4) and
//! GSpin(6) classification and adjoint tables, plus the displayed kernel
//! equations for nilpotents in `gl(4)`.
//!
//! `printed` is the formula as it appears in the table, transcribed into the
//! L-product text format. Where the table is wrong, `reading` holds the
//! corrected value and its note; verification accepts either, reporting
//! `ERRATUM` for the second.

use std::sync::OnceLock;

use serde::Serialize;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Reading {
    pub lproduct: &'static str,
    pub ord: u32,
    pub note: &'static str,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PacketExpectation {
    pub size: usize,
    /// As printed by [`crate::gspin::GroupStructure`].
    pub structure: &'static str,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CatalogEntry {
    pub id: &'static str,
    /// Row label in the table, e.g. `(A9)`.
    pub row: &'static str,
    /// What [`crate::gspin::classify`] should return.
    pub class_tag: &'static str,
    pub source: &'static str,
    pub printed: &'static str,
    pub printed_ord: u32,
    /// The table gives `>= printed_ord`; the entry pins generic position.
    pub at_least: bool,
    pub reading: Option<Reading>,
    pub note: Option<&'static str>,
    pub generic: bool,
    pub packet: Option<PacketExpectation>,
    /// Displayed GSO-side monodromy, one-based sparse entries.
    pub gso: Option<&'static [(usize, usize, i64)]>,
    /// Pinned `dim V_N` for the degree cross-check.
    pub degree: Option<u32>,
}

impl CatalogEntry {
    fn new(id: &'static str, row: &'static str, class_tag: &'static str, source: &'static str) -> CatalogEntry {
        CatalogEntry {
            id,
            row,
            class_tag,
            source,
            printed: "",
            printed_ord: 0,
            at_least: false,
            reading: None,
            note: None,
            generic: true,
            packet: None,
            gso: None,
            degree: None,
        }
    }

    fn printed(mut self, l: &'static str, ord: u32) -> Self {
        self.printed = l;
        self.printed_ord = ord;
        self
    }

    fn at_least(mut self) -> Self {
        self.at_least = true;
        self
    }

    fn reading(mut self, lproduct: &'static str, ord: u32, note: &'static str) -> Self {
        self.reading = Some(Reading { lproduct, ord, note });
        self
    }

    fn note(mut self, n: &'static str) -> Self {
        self.note = Some(n);
        self
    }

    fn nongeneric(mut self) -> Self {
        self.generic = false;
        self
    }

    fn packet(mut self, size: usize, structure: &'static str) -> Self {
        self.packet = Some(PacketExpectation { size, structure });
        self
    }

    fn gso(mut self, g: &'static [(usize, usize, i64)]) -> Self {
        self.gso = Some(g);
        self
    }

    fn degree(mut self, d: u32) -> Self {
        self.degree = Some(d);
        self
    }

    /// The L-product verification expects: the reading if there is one.
    pub fn expected_lproduct(&self) -> &'static str {
        self.reading.as_ref().map_or(self.printed, |r| r.lproduct)
    }

    pub fn expected_ord(&self) -> u32 {
        self.reading.as_ref().map_or(self.printed_ord, |r| r.ord)
    }

    pub fn group_name(&self) -> &'static str {
        self.id.split('/').next().unwrap_or("")
    }
}

const ZERO: &[(usize, usize, i64)] = &[];

const G4_11: &[(usize, usize, i64)] = &[(1, 2, 1), (1, 3, 1), (2, 4, -1), (3, 4, -1)];
const G4_01: &[(usize, usize, i64)] = &[(1, 3, 1), (2, 4, -1)];

const G6_12: &[(usize, usize, i64)] = &[(2, 3, 1), (4, 5, -1)];
const G6_23: &[(usize, usize, i64)] = &[(1, 2, 1), (5, 6, -1)];
const G6_34: &[(usize, usize, i64)] = &[(2, 4, 1), (3, 5, -1)];
const G6_1223: &[(usize, usize, i64)] = &[(1, 2, 1), (2, 3, 1), (4, 5, -1), (5, 6, -1)];
const G6_1234: &[(usize, usize, i64)] = &[(2, 3, 1), (2, 4, 1), (3, 5, -1), (4, 5, -1)];
const G6_2334: &[(usize, usize, i64)] = &[(1, 2, 1), (2, 4, 1), (3, 5, -1), (5, 6, -1)];
const G6_122334: &[(usize, usize, i64)] = &[(1, 2, 1), (2, 3, 1), (2, 4, 1), (3, 5, -1), (4, 5, -1), (5, 6, -1)];
const G6_1324: &[(usize, usize, i64)] = &[(1, 3, 1), (1, 4, 1), (3, 6, -1), (4, 6, -1)];

const AB_PRINTED: &str = "L(s, sigma1, Ad) L(s, sigma2, Ad)";
const AB_NOTE: &str = "the table writes L(s, sigma_i, Sym^2 x omega^-1), which is L(s, sigma_i, Ad)";

fn gspin4() -> Vec<CatalogEntry> {
    vec![
        CatalogEntry::new(
            "gspin4/gnr/a-primitive",
            "(a)",
            "gnr-(a)",
            r#"env {
  gen eta order 2;
  cusp sigma1 dim 2 kind primitive;
  cusp sigma2 dim 2;
  iso sigma2 = sigma1 eta;
}
group gspin4;
case "gspin4/gnr/a-primitive";
lift m = Q([sigma1]);
lift n = Q([sigma2]);
"#,
        )
        .printed(AB_PRINTED, 0)
        .note(AB_NOTE)
        .packet(1, "{1}"),
        CatalogEntry::new(
            "gspin4/gnr/a-dihedral1",
            "(a)",
            "gnr-(a)",
            r#"env {
  gen eps order 2;
  gen eta order 2;
  cusp sigma1 dim 2 kind dihedral-1 selftwists {eps};
  cusp sigma2 dim 2;
  iso sigma2 = sigma1 eta;
}
group gspin4;
case "gspin4/gnr/a-dihedral1";
lift m = Q([sigma1]);
lift n = Q([sigma2]);
"#,
        )
        .printed(AB_PRINTED, 0)
        .note(AB_NOTE)
        .packet(2, "Z/2"),
        CatalogEntry::new(
            "gspin4/gnr/a-dihedral3",
            "(a)",
            "gnr-(a)",
            r#"env {
  gen e1 order 2;
  gen e2 order 2;
  gen eta order 2;
  cusp sigma1 dim 2 kind dihedral-3 selftwists {e1, e2, e1 e2};
  cusp sigma2 dim 2;
  iso sigma2 = sigma1 eta;
}
group gspin4;
case "gspin4/gnr/a-dihedral3";
lift m = Q([sigma1]);
lift n = Q([sigma2]);
"#,
        )
        .printed(AB_PRINTED, 0)
        .note(AB_NOTE)
        .packet(4, "(Z/2)^2"),
        CatalogEntry::new(
            "gspin4/gnr/b-primitive",
            "(b)",
            "gnr-(b)",
            r#"env {
  gen omega;
  cusp sigma1 dim 2 central omega kind primitive;
  cusp sigma2 dim 2 central omega kind primitive;
}
group gspin4;
case "gspin4/gnr/b-primitive";
lift m = Q([sigma1]);
lift n = Q([sigma2]);
"#,
        )
        .printed(AB_PRINTED, 0)
        .note(AB_NOTE)
        .packet(1, "{1}"),
        CatalogEntry::new(
            "gspin4/gnr/b-dihedral",
            "(b)",
            "gnr-(b)",
            r#"env {
  gen omega;
  gen eps order 2;
  cusp sigma1 dim 2 central omega kind dihedral-1 selftwists {eps};
  cusp sigma2 dim 2 central omega kind dihedral-1 selftwists {eps};
}
group gspin4;
case "gspin4/gnr/b-dihedral";
lift m = Q([sigma1]);
lift n = Q([sigma2]);
"#,
        )
        .printed(AB_PRINTED, 0)
        .note("Z/2 needs a quadratic self-twist shared by both lifts; here both are dihedral for the same eps")
        .packet(2, "Z/2"),
        CatalogEntry::new(
            "gspin4/gnr/i",
            "(i)",
            "gnr-(i)",
            r#"env {
  gen chi;
}
group gspin4;
case "gspin4/gnr/i";
lift m = Q([nu^(-1/2) chi, nu^(1/2) chi]);
lift n = Q([nu^(-1/2) chi, nu^(1/2) chi]);
monodromy m = [[0, 1], [0, 0]];
monodromy n = [[0, 1], [0, 0]];
"#,
        )
        .printed("L(s+1)^2", 0)
        .packet(1, "{1}")
        .gso(G4_11)
        .degree(3),
        CatalogEntry::new(
            "gspin4/gnr/ii",
            "(ii)",
            "gnr-(ii)",
            r#"env {
  gen chi;
  gen chi1;
  def chi2 = chi^2 chi1^-1;
}
group gspin4;
case "gspin4/gnr/ii";
lift m = Q([chi1], [chi2]);
lift n = Q([nu^(-1/2) chi, nu^(1/2) chi]);
monodromy m = [[0, 0], [0, 0]];
monodromy n = [[0, 1], [0, 0]];
"#,
        )
        .printed("L(s) L(s+1) L(s, chi1 chi2^-1) L(s, chi1^-1 chi2)", 0)
        .note("the classification row nests a second induction symbol by mistake; read as the principal series of chi1, chi2 against St x chi")
        .packet(1, "{1}")
        .gso(G4_01),
        CatalogEntry::new(
            "gspin4/gnr/iii",
            "(iii)",
            "gnr-(iii)",
            r#"env {
  gen chi1;
  gen chi2;
  gen chi3;
  def chi4 = chi1 chi2 chi3^-1;
}
group gspin4;
case "gspin4/gnr/iii";
lift m = Q([chi1], [chi2]);
lift n = Q([chi3], [chi4]);
monodromy m = [[0, 0], [0, 0]];
monodromy n = [[0, 0], [0, 0]];
"#,
        )
        .printed("L(s)^2 L(s, chi1 chi2^-1) L(s, chi1^-1 chi2) L(s, chi3 chi4^-1) L(s, chi3^-1 chi4)", 0)
        .packet(1, "{1}")
        .gso(ZERO),
        CatalogEntry::new(
            "gspin4/gnr/iii-z2",
            "(iii)",
            "gnr-(iii)",
            r#"env {
  gen chi1;
  gen eta order 2 ramified;
  gen eps order 2;
  def chi2 = chi1 eta;
  def chi3 = chi1 eps;
  def chi4 = chi1 eps eta;
}
group gspin4;
case "gspin4/gnr/iii-z2";
lift m = Q([chi1], [chi2]);
lift n = Q([chi3], [chi4]);
"#,
        )
        .printed("L(s)^2 L(s, chi1 chi2^-1) L(s, chi1^-1 chi2) L(s, chi3 chi4^-1) L(s, chi3^-1 chi4)", 0)
        .packet(2, "Z/2"),
        CatalogEntry::new(
            "gspin4/gnr/iv",
            "(iv)",
            "gnr-(iv)",
            r#"env {
  gen chi;
  cusp sigma2 dim 2 central chi^2;
}
group gspin4;
case "gspin4/gnr/iv";
lift m = Q([sigma2]);
lift n = Q([nu^(-1/2) chi, nu^(1/2) chi]);
monodromy m = [[0, 0], [0, 0]];
monodromy n = [[0, 1], [0, 0]];
"#,
        )
        .printed("L(s+1) L(s, sigma2, Ad)", 0)
        .note("the table names the supercuspidal sigma_2 in this row and writes Sym^2 x omega^-1 for Ad")
        .packet(1, "{1}")
        .gso(G4_01),
        CatalogEntry::new(
            "gspin4/gnr/v",
            "(v)",
            "gnr-(v)",
            r#"env {
  gen chi1;
  gen chi2;
  cusp sigma2 dim 2 central chi1 chi2;
}
group gspin4;
case "gspin4/gnr/v";
lift m = Q([sigma2]);
lift n = Q([chi1], [chi2]);
monodromy m = [[0, 0], [0, 0]];
monodromy n = [[0, 0], [0, 0]];
"#,
        )
        .printed("L(s) L(s, chi1 chi2^-1) L(s, chi1^-1 chi2) L(s, sigma2, Ad)", 0)
        .packet(1, "{1}")
        .gso(ZERO),
        CatalogEntry::new(
            "gspin4/gnr/v-z2",
            "(v)",
            "gnr-(v)",
            r#"env {
  gen chi1;
  gen eta order 2;
  def chi2 = chi1 eta;
  cusp sigma2 dim 2 central chi1^2 eta kind dihedral-1 selftwists {eta};
}
group gspin4;
case "gspin4/gnr/v-z2";
lift m = Q([sigma2]);
lift n = Q([chi1], [chi2]);
"#,
        )
        .printed("L(s) L(s, chi1 chi2^-1) L(s, chi1^-1 chi2) L(s, sigma2, Ad)", 0)
        .packet(2, "Z/2"),
        CatalogEntry::new(
            "gspin4/nongnr/sc",
            "nongnr",
            "nongnr",
            r#"env {
  gen chi;
  cusp sigma dim 2 central chi^2;
}
group gspin4;
case "gspin4/nongnr/sc";
lift m = Q([nu^(1/2) chi], [nu^(-1/2) chi]);
lift n = Q([sigma]);
monodromy m = [[0, 0], [0, 0]];
monodromy n = [[0, 0], [0, 0]];
"#,
        )
        .printed("L(s-1) L(s) L(s+1) L(s, sigma, Ad)", 1)
        .note("ord is 1 + ord L(s, sigma, Ad); the second term vanishes for supercuspidal sigma")
        .nongeneric()
        .packet(1, "{1}")
        .gso(ZERO),
        CatalogEntry::new(
            "gspin4/nongnr/st",
            "nongnr",
            "nongnr",
            r#"env {
  gen chi;
}
group gspin4;
case "gspin4/nongnr/st";
lift m = Q([nu^(1/2) chi], [nu^(-1/2) chi]);
lift n = Q([nu^(-1/2) chi, nu^(1/2) chi]);
monodromy m = [[0, 0], [0, 0]];
monodromy n = [[0, 1], [0, 0]];
"#,
        )
        .printed("L(s-1) L(s) L(s+1)^2", 1)
        .note("L(s, sigma, Ad) = L(s+1) for sigma = St x chi, so ord = 1 + 0")
        .nongeneric()
        .packet(1, "{1}")
        .gso(G4_01),
        CatalogEntry::new(
            "gspin4/nongnr/ps",
            "nongnr",
            "nongnr",
            r#"env {
  gen chi;
  gen chi1;
  def chi2 = chi^2 chi1^-1;
}
group gspin4;
case "gspin4/nongnr/ps";
lift m = Q([nu^(1/2) chi], [nu^(-1/2) chi]);
lift n = Q([chi1], [chi2]);
"#,
        )
        .printed("L(s-1) L(s)^2 L(s+1) L(s, chi1 chi2^-1) L(s, chi1^-1 chi2)", 1)
        .note("L(s, sigma, Ad) = L(s) L(s, chi1 chi2^-1) L(s, chi1^-1 chi2) for an irreducible principal series")
        .nongeneric()
        .packet(1, "{1}"),
        CatalogEntry::new(
            "gspin4/nongnr/det",
            "nongnr",
            "nongnr",
            r#"env {
  gen chi;
}
group gspin4;
case "gspin4/nongnr/det";
lift m = Q([nu^(1/2) chi], [nu^(-1/2) chi]);
lift n = Q([nu^(1/2) chi], [nu^(-1/2) chi]);
"#,
        )
        .printed("L(s-1)^2 L(s)^2 L(s+1)^2", 2)
        .note("L(s, sigma, Ad) = L(s-1) L(s) L(s+1) for sigma = chi o det, so ord = 1 + 1")
        .nongeneric()
        .packet(1, "{1}"),
    ]
}

const MIRROR_NOTE: &str = "the printed factors take the shift of each sp(k) part as -(k-1)/2, against +(k-1)/2 in the generic rows; the reading keeps +(k-1)/2";

fn gspin6() -> Vec<CatalogEntry> {
    vec![
        CatalogEntry::new(
            "gspin6/gnr/a",
            "(a)",
            "gnr-(a)",
            r#"env {
  gen eta0;
  cusp sigma0 dim 4 central eta0^2;
}
group gspin6;
case "gspin6/gnr/a";
lift m = Q([eta0]);
lift n = Q([sigma0]);
monodromy m = [[0]];
monodromy n = [[0, 0, 0, 0], [0, 0, 0, 0], [0, 0, 0, 0], [0, 0, 0, 0]];
"#,
        )
        .printed("L(s, sigma0, Ad)", 0)
        .packet(1, "{1}")
        .gso(ZERO),
        CatalogEntry::new(
            "gspin6/gnr/a-z2x2",
            "(a)",
            "gnr-(a)",
            r#"env {
  gen eta0;
  gen e1 order 2;
  gen e2 order 2;
  cusp sigma0 dim 4 central eta0^2 selftwists {e1, e2, e1 e2};
  dyadic_degree 1;
}
group gspin6;
case "gspin6/gnr/a-z2x2";
lift m = Q([eta0]);
lift n = Q([sigma0]);
"#,
        )
        .printed("L(s, sigma0, Ad)", 0)
        .note("packet column not in the table; size is the 2-torsion of the self-twists, bounded by 2^(d+2) at p = 2")
        .packet(4, "(Z/2)^2"),
        CatalogEntry::new(
            "gspin6/gnr/a-order4",
            "(a)",
            "gnr-(a)",
            r#"env {
  gen eta0;
  gen xi order 4;
  cusp sigma0 dim 4 central eta0^2 selftwists {xi, xi^2, xi^3};
}
group gspin6;
case "gspin6/gnr/a-order4";
lift m = Q([eta0]);
lift n = Q([sigma0]);
"#,
        )
        .printed("L(s, sigma0, Ad)", 0)
        .note("packet column not in the table; a cyclic self-twist group of order 4 contributes only its 2-torsion")
        .packet(2, "Z/2"),
        CatalogEntry::new(
            "gspin6/gnr/I",
            "(I)",
            "gnr-(I)",
            r#"env {
  gen eta0;
  gen chi1;
  gen chi2;
  gen chi3;
  gen chi4;
}
group gspin6;
case "gspin6/gnr/I";
lift m = Q([eta0]);
lift n = Q([chi1], [chi2], [chi3], [chi4]);
monodromy m = [[0]];
monodromy n = [[0, 0, 0, 0], [0, 0, 0, 0], [0, 0, 0, 0], [0, 0, 0, 0]];
"#,
        )
        .printed(
            "L(s)^3 L(s, chi1 chi2^-1) L(s, chi1 chi3^-1) L(s, chi1 chi4^-1) L(s, chi2 chi1^-1) \
             L(s, chi2 chi3^-1) L(s, chi2 chi4^-1) L(s, chi3 chi1^-1) L(s, chi3 chi2^-1) \
             L(s, chi3 chi4^-1) L(s, chi4 chi1^-1) L(s, chi4 chi2^-1) L(s, chi4 chi3^-1)",
            0,
        )
        .gso(ZERO)
        .degree(16),
        CatalogEntry::new(
            "gspin6/gnr/II-sc",
            "(II)",
            "gnr-(II)",
            r#"env {
  gen eta0;
  gen chi1;
  gen chi2;
  cusp sigma0 dim 2;
}
group gspin6;
case "gspin6/gnr/II-sc";
lift m = Q([eta0]);
lift n = Q([sigma0], [chi1], [chi2]);
monodromy m = [[0]];
monodromy n = [[0, 0, 0, 0], [0, 0, 0, 0], [0, 0, 0, 0], [0, 0, 0, 0]];
"#,
        )
        .printed(
            "L(s)^2 L(s, sigma0, Ad) L(s, sigma0 x chi1^-1) L(s, sigma0^v x chi1) \
             L(s, sigma0 x chi2^-1) L(s, sigma0^v x chi2) L(s, chi1 chi2^-1) L(s, chi2 chi1^-1)",
            0,
        )
        .gso(ZERO),
        CatalogEntry::new(
            "gspin6/gnr/II-St",
            "(II)",
            "gnr-(II)",
            r#"env {
  gen eta0;
  gen chi;
  gen chi1;
  gen chi2;
}
group gspin6;
case "gspin6/gnr/II-St";
lift m = Q([eta0]);
lift n = Q([chi, nu chi], [chi1], [chi2]);
monodromy m = [[0]];
monodromy n = [[0, 1, 0, 0], [0, 0, 0, 0], [0, 0, 0, 0], [0, 0, 0, 0]];
"#,
        )
        .printed(
            "L(s)^2 L(s+1) L(s+1, chi chi1^-1) L(s+1, chi chi2^-1) L(s, chi^-1 chi1) \
             L(s, chi^-1 chi2) L(s, chi1 chi2^-1) L(s, chi2 chi1^-1)",
            0,
        )
        .note("the integral shifts fix St x chi as the segment [chi, nu chi]")
        .gso(G6_12),
        CatalogEntry::new(
            "gspin6/gnr/III-sc",
            "(III)",
            "gnr-(III)",
            r#"env {
  gen eta0;
  gen chi;
  cusp sigma0 dim 3;
}
group gspin6;
case "gspin6/gnr/III-sc";
lift m = Q([eta0]);
lift n = Q([sigma0], [chi]);
monodromy m = [[0]];
monodromy n = [[0, 0, 0, 0], [0, 0, 0, 0], [0, 0, 0, 0], [0, 0, 0, 0]];
"#,
        )
        .printed("L(s) L(s, sigma0, Ad) L(s, sigma0 x chi^-1) L(s, sigma0^v x chi)", 0)
        .gso(ZERO),
        CatalogEntry::new(
            "gspin6/gnr/III-St",
            "(III)",
            "gnr-(III)",
            r#"env {
  gen eta0;
  gen chi;
  gen chi0;
}
group gspin6;
case "gspin6/gnr/III-St";
lift m = Q([eta0]);
lift n = Q([nu^-1 chi0, nu chi0], [chi]);
monodromy m = [[0]];
monodromy n = [[0, 1, 0, 0], [0, 0, 1, 0], [0, 0, 0, 0], [0, 0, 0, 0]];
"#,
        )
        .printed("L(s) L(s+1) L(s+2) L(s+1, chi chi0^-1) L(s+1, chi^-1 chi0)", 0)
        .gso(G6_1223),
        CatalogEntry::new(
            "gspin6/gnr/IV-sc",
            "(IV)",
            "gnr-(IV)",
            r#"env {
  gen eta0;
  cusp sigma1 dim 2;
  cusp sigma2 dim 2;
}
group gspin6;
case "gspin6/gnr/IV-sc";
lift m = Q([eta0]);
lift n = Q([sigma1], [sigma2]);
monodromy m = [[0]];
monodromy n = [[0, 0, 0, 0], [0, 0, 0, 0], [0, 0, 0, 0], [0, 0, 0, 0]];
"#,
        )
        .printed("L(s) L(s, sigma1, Ad) L(s, sigma2, Ad) L(s, sigma1 x sigma2^v) L(s, sigma1^v x sigma2)", 0)
        .note("the table prints the last factor as L(s, sigma1^v x sigma1); the pair count forces sigma2")
        .gso(ZERO),
        CatalogEntry::new(
            "gspin6/gnr/IV-sc-St",
            "(IV)",
            "gnr-(IV)",
            r#"env {
  gen eta0;
  gen chi;
  cusp sigma1 dim 2;
}
group gspin6;
case "gspin6/gnr/IV-sc-St";
lift m = Q([eta0]);
lift n = Q([sigma1], [nu^(-1/2) chi, nu^(1/2) chi]);
monodromy m = [[0]];
monodromy n = [[0, 0, 0, 0], [0, 0, 0, 0], [0, 0, 0, 1], [0, 0, 0, 0]];
"#,
        )
        .printed("L(s) L(s+1) L(s, sigma1, Ad) L(s+1/2, sigma1^v x chi) L(s+1/2, sigma1 x chi^-1)", 0)
        .gso(G6_34),
        CatalogEntry::new(
            "gspin6/gnr/IV-St-sc",
            "(IV)",
            "gnr-(IV)",
            r#"env {
  gen eta0;
  gen chi;
  cusp sigma2 dim 2;
}
group gspin6;
case "gspin6/gnr/IV-St-sc";
lift m = Q([eta0]);
lift n = Q([nu^(-1/2) chi, nu^(1/2) chi], [sigma2]);
monodromy m = [[0]];
monodromy n = [[0, 1, 0, 0], [0, 0, 0, 0], [0, 0, 0, 0], [0, 0, 0, 0]];
"#,
        )
        .printed("L(s) L(s+1) L(s, sigma2, Ad) L(s+1/2, sigma2^v x chi) L(s+1/2, sigma2 x chi^-1)", 0)
        .gso(G6_12),
        CatalogEntry::new(
            "gspin6/gnr/IV-St-St",
            "(IV)",
            "gnr-(IV)",
            r#"env {
  gen eta0;
  gen chi1;
  gen chi2;
}
group gspin6;
case "gspin6/gnr/IV-St-St";
lift m = Q([eta0]);
lift n = Q([nu^(-1/2) chi1, nu^(1/2) chi1], [nu^(-1/2) chi2, nu^(1/2) chi2]);
monodromy m = [[0]];
monodromy n = [[0, 1, 0, 0], [0, 0, 0, 0], [0, 0, 0, 1], [0, 0, 0, 0]];
"#,
        )
        .printed(
            "L(s) L(s+1)^2 L(s, chi1^-1 chi2) L(s, chi1 chi2^-1) L(s+1, chi1 chi2^-1) L(s+1, chi1^-1 chi2)",
            0,
        )
        .gso(G6_1234),
        CatalogEntry::new(
            "gspin6/gnr/V-St",
            "(V)",
            "gnr-(V)",
            r#"env {
  gen eta0;
  gen chi;
}
group gspin6;
case "gspin6/gnr/V-St";
lift m = Q([eta0]);
lift n = Q([nu^(-3/2) chi, nu^(3/2) chi]);
monodromy m = [[0]];
monodromy n = [[0, 1, 0, 0], [0, 0, 1, 0], [0, 0, 0, 1], [0, 0, 0, 0]];
"#,
        )
        .printed("L(s+1) L(s+2) L(s+3)", 0)
        .gso(G6_122334),
        CatalogEntry::new(
            "gspin6/gnr/V-2gl2",
            "(V)",
            "gnr-(V)",
            r#"env {
  gen eta0;
  cusp tau dim 2;
}
group gspin6;
case "gspin6/gnr/V-2gl2";
lift m = Q([eta0]);
lift n = Q([nu^(-1/2) tau, nu^(1/2) tau]);
monodromy m = [[0]];
monodromy n = [[0, 0, 1, 0], [0, 0, 0, 1], [0, 0, 0, 0], [0, 0, 0, 0]];
"#,
        )
        .printed("L(s, tau, Ad) L(s, tau x tau^v)", 0)
        .reading(
            "L(s, tau, Ad) L(s+1) L(s+1, tau, Ad)",
            0,
            "tau x sp(2) has Ad = (1 + Ad tau)(sp(3) + sp(1)) - 1; the printed product has degree 8, not 15",
        )
        .gso(G6_1324),
        CatalogEntry::new(
            "gspin6/nongnr/A1",
            "(A1)",
            "nongnr-(A)",
            r#"env {
  gen eta0;
  gen chi;
  gen chi3;
  gen chi4;
}
group gspin6;
case "gspin6/nongnr/A1";
lift m = Q([eta0]);
lift n = Q([nu^(1/2) chi], [nu^(-1/2) chi], [chi3], [chi4]);
monodromy m = [[0]];
monodromy n = [[0, 0, 0, 0], [0, 0, 0, 0], [0, 0, 0, 0], [0, 0, 0, 0]];
"#,
        )
        .printed(
            "L(s-1) L(s)^3 L(s+1) L(s, chi3 chi4^-1) L(s, chi3^-1 chi4) \
             L(s+1/2, chi chi3^-1) L(s-1/2, chi^-1 chi3) L(s-1/2, chi chi3^-1) L(s+1/2, chi^-1 chi3) \
             L(s+1/2, chi chi4^-1) L(s-1/2, chi^-1 chi4) L(s-1/2, chi chi4^-1) L(s+1/2, chi^-1 chi4)",
            1,
        )
        .at_least()
        .note("ord >= 1; generic position for chi, chi3, chi4 gives exactly 1")
        .nongeneric()
        .gso(ZERO),
        CatalogEntry::new(
            "gspin6/nongnr/A2",
            "(A2)",
            "nongnr-(A)",
            r#"env {
  gen eta0;
  gen chi;
  gen chi4;
}
group gspin6;
case "gspin6/nongnr/A2";
lift m = Q([eta0]);
lift n = Q([nu chi], [chi], [nu^-1 chi], [chi4]);
monodromy m = [[0]];
monodromy n = [[0, 0, 0, 0], [0, 0, 0, 0], [0, 0, 0, 0], [0, 0, 0, 0]];
"#,
        )
        .printed(
            "L(s-2) L(s-1)^2 L(s)^3 L(s+1)^2 L(s+2) \
             L(s-1, chi chi4^-1) L(s-1, chi^-1 chi4) L(s, chi chi4^-1) L(s, chi^-1 chi4) \
             L(s+1, chi chi4^-1) L(s+1, chi^-1 chi4)",
            2,
        )
        .at_least()
        .note("ord >= 2; generic position for chi, chi4 gives exactly 2")
        .nongeneric()
        .gso(ZERO),
        CatalogEntry::new(
            "gspin6/nongnr/A3",
            "(A3)",
            "nongnr-(A)",
            r#"env {
  gen eta0;
  gen chi;
  gen chi4;
}
group gspin6;
case "gspin6/nongnr/A3";
lift m = Q([eta0]);
lift n = Q([chi, nu chi], [nu^-1 chi], [chi4]);
monodromy m = [[0]];
monodromy n = [[0, 1, 0, 0], [0, 0, 0, 0], [0, 0, 0, 0], [0, 0, 0, 0]];
"#,
        )
        .printed(
            "L(s-2) L(s-1)^2 L(s)^2 L(s-1, chi chi4^-1) L(s, chi chi4^-1) \
             L(s-1, chi^-1 chi4) L(s+1, chi^-1 chi4)",
            2,
        )
        .at_least()
        .reading(
            "L(s-1) L(s)^2 L(s+1) L(s+2) L(s-1, chi chi4^-1) L(s+1, chi chi4^-1) \
             L(s, chi^-1 chi4) L(s+1, chi^-1 chi4)",
            1,
            "the printed product is the mirrored one (sp(k) shifted by -(k-1)/2) with L(s+1) misprinted as a second L(s-1); the reading keeps +(k-1)/2 and has ord 1",
        )
        .nongeneric()
        .gso(G6_12),
        CatalogEntry::new(
            "gspin6/nongnr/A4",
            "(A4)",
            "nongnr-(A)",
            r#"env {
  gen eta0;
  gen chi;
  gen chi4;
}
group gspin6;
case "gspin6/nongnr/A4";
lift m = Q([eta0]);
lift n = Q([nu chi], [nu^-1 chi, chi], [chi4]);
monodromy m = [[0]];
monodromy n = [[0, 0, 0, 0], [0, 0, 1, 0], [0, 0, 0, 0], [0, 0, 0, 0]];
"#,
        )
        .printed(
            "L(s-1) L(s)^2 L(s+1) L(s+2) L(s, chi chi4^-1) L(s+1, chi chi4^-1) \
             L(s-1, chi^-1 chi4) L(s+1, chi^-1 chi4)",
            1,
        )
        .at_least()
        .note("the segment is displayed from its top end as [chi, nu^-1 chi]; ord >= 1, exactly 1 in generic position")
        .nongeneric()
        .gso(G6_23),
        CatalogEntry::new(
            "gspin6/nongnr/A5",
            "(A5)",
            "nongnr-(A)",
            r#"env {
  gen eta0;
  gen chi;
}
group gspin6;
case "gspin6/nongnr/A5";
lift m = Q([eta0]);
lift n = Q([nu^(3/2) chi], [nu^(1/2) chi], [nu^(-1/2) chi], [nu^(-3/2) chi]);
monodromy m = [[0]];
monodromy n = [[0, 0, 0, 0], [0, 0, 0, 0], [0, 0, 0, 0], [0, 0, 0, 0]];
"#,
        )
        .printed("L(s-3) L(s-2)^2 L(s-1)^3 L(s)^3 L(s+1)^3 L(s+2)^2 L(s+3)", 3)
        .nongeneric()
        .gso(ZERO),
        CatalogEntry::new(
            "gspin6/nongnr/A6",
            "(A6)",
            "nongnr-(A)",
            r#"env {
  gen eta0;
  gen chi;
}
group gspin6;
case "gspin6/nongnr/A6";
lift m = Q([eta0]);
lift n = Q([nu^(1/2) chi, nu^(3/2) chi], [nu^(-1/2) chi], [nu^(-3/2) chi]);
monodromy m = [[0]];
monodromy n = [[0, 1, 0, 0], [0, 0, 0, 0], [0, 0, 0, 0], [0, 0, 0, 0]];
"#,
        )
        .printed("L(s-3) L(s-2) L(s-1)^2 L(s)^2 L(s+1)^2 L(s+2)", 2)
        .reading("L(s-2) L(s-1)^2 L(s)^2 L(s+1)^2 L(s+2) L(s+3)", 2, MIRROR_NOTE)
        .nongeneric()
        .gso(G6_12),
        CatalogEntry::new(
            "gspin6/nongnr/A7",
            "(A7)",
            "nongnr-(A)",
            r#"env {
  gen eta0;
  gen chi;
}
group gspin6;
case "gspin6/nongnr/A7";
lift m = Q([eta0]);
lift n = Q([nu^(3/2) chi], [nu^(-1/2) chi, nu^(1/2) chi], [nu^(-3/2) chi]);
monodromy m = [[0]];
monodromy n = [[0, 0, 0, 0], [0, 0, 1, 0], [0, 0, 0, 0], [0, 0, 0, 0]];
"#,
        )
        .printed("L(s-3) L(s-2) L(s-1)^2 L(s)^2 L(s+1)^2 L(s+2)", 2)
        .reading(
            "L(s-3) L(s-1)^2 L(s)^2 L(s+1) L(s+2)^2 L(s+3)",
            2,
            "the printed line repeats the one for (A6) and (A8); the reading is the adjoint L-function of this datum",
        )
        .nongeneric()
        .gso(G6_23),
        CatalogEntry::new(
            "gspin6/nongnr/A8",
            "(A8)",
            "nongnr-(A)",
            r#"env {
  gen eta0;
  gen chi;
}
group gspin6;
case "gspin6/nongnr/A8";
lift m = Q([eta0]);
lift n = Q([nu^(3/2) chi], [nu^(1/2) chi], [nu^(-3/2) chi, nu^(-1/2) chi]);
monodromy m = [[0]];
monodromy n = [[0, 0, 0, 0], [0, 0, 0, 0], [0, 0, 0, 1], [0, 0, 0, 0]];
"#,
        )
        .printed("L(s-3) L(s-2) L(s-1)^2 L(s)^2 L(s+1)^2 L(s+2)", 2)
        .reading("L(s-2) L(s-1)^2 L(s)^2 L(s+1)^2 L(s+2) L(s+3)", 2, MIRROR_NOTE)
        .nongeneric()
        .gso(G6_34),
        CatalogEntry::new(
            "gspin6/nongnr/A9",
            "(A9)",
            "nongnr-(A)",
            r#"env {
  gen eta0;
  gen chi;
}
group gspin6;
case "gspin6/nongnr/A9";
lift m = Q([eta0]);
lift n = Q([nu^(1/2) chi, nu^(3/2) chi], [nu^(-3/2) chi, nu^(-1/2) chi]);
monodromy m = [[0]];
monodromy n = [[0, 1, 0, 0], [0, 0, 0, 0], [0, 0, 0, 1], [0, 0, 0, 0]];
"#,
        )
        .printed("L(s-3) L(s-2) L(s-1)^2 L(s) L(s+1) L(s+2)", 2)
        .reading("L(s-2) L(s-1) L(s) L(s+1)^2 L(s+2) L(s+3)", 1, MIRROR_NOTE)
        .nongeneric()
        .gso(G6_1234)
        .degree(8),
        CatalogEntry::new(
            "gspin6/nongnr/A10",
            "(A10)",
            "nongnr-(A)",
            r#"env {
  gen eta0;
  gen chi;
}
group gspin6;
case "gspin6/nongnr/A10";
lift m = Q([eta0]);
lift n = Q([nu^(-1/2) chi, nu^(3/2) chi], [nu^(-3/2) chi]);
monodromy m = [[0]];
monodromy n = [[0, 1, 0, 0], [0, 0, 1, 0], [0, 0, 0, 0], [0, 0, 0, 0]];
"#,
        )
        .printed("L(s-3) L(s-2) L(s-1) L(s) L(s+1)", 1)
        .reading("L(s-1) L(s) L(s+1) L(s+2) L(s+3)", 1, MIRROR_NOTE)
        .nongeneric()
        .gso(G6_1223),
        CatalogEntry::new(
            "gspin6/nongnr/A11",
            "(A11)",
            "nongnr-(A)",
            r#"env {
  gen eta0;
  gen chi;
}
group gspin6;
case "gspin6/nongnr/A11";
lift m = Q([eta0]);
lift n = Q([nu^(3/2) chi], [nu^(-3/2) chi, nu^(1/2) chi]);
monodromy m = [[0]];
monodromy n = [[0, 0, 0, 0], [0, 0, 1, 0], [0, 0, 0, 1], [0, 0, 0, 0]];
"#,
        )
        .printed("L(s-3) L(s-2) L(s-1) L(s) L(s+1)", 1)
        .reading("L(s-1) L(s) L(s+1) L(s+2) L(s+3)", 1, MIRROR_NOTE)
        .nongeneric()
        .gso(G6_2334),
        CatalogEntry::new(
            "gspin6/nongnr/B",
            "(B)",
            "nongnr-(A)",
            r#"env {
  gen eta0;
  gen chi;
  gen eta1;
  gen eta2;
}
group gspin6;
case "gspin6/nongnr/B";
lift m = Q([eta0]);
lift n = Q([eta1], [eta2], [nu^(1/2) chi], [nu^(-1/2) chi]);
monodromy m = [[0]];
monodromy n = [[0, 0, 0, 0], [0, 0, 0, 0], [0, 0, 0, 0], [0, 0, 0, 0]];
"#,
        )
        .printed(
            "L(s-1) L(s)^3 L(s+1) L(s, eta1 eta2^-1) L(s, eta1^-1 eta2) \
             L(s+1/2, eta1 chi^-1) L(s+1/2, eta1^-1 chi) L(s+1/2, eta2 chi^-1) L(s+1/2, eta2^-1 chi) \
             L(s-1/2, eta1 chi^-1) L(s-1/2, eta1^-1 chi) L(s-1/2, eta2 chi^-1) L(s-1/2, eta2^-1 chi)",
            1,
        )
        .at_least()
        .note("character data cannot tell this row from (A); ord >= 1, exactly 1 in generic position")
        .nongeneric()
        .gso(ZERO),
        CatalogEntry::new(
            "gspin6/nongnr/D-sc",
            "(D)",
            "nongnr-(D)",
            r#"env {
  gen eta0;
  gen chi;
  cusp sigma dim 2;
}
group gspin6;
case "gspin6/nongnr/D-sc";
lift m = Q([eta0]);
lift n = Q([nu^(1/2) chi], [nu^(-1/2) chi], [sigma]);
monodromy m = [[0]];
monodromy n = [[0, 0, 0, 0], [0, 0, 0, 0], [0, 0, 0, 0], [0, 0, 0, 0]];
"#,
        )
        .printed(
            "L(s-1) L(s)^2 L(s+1) L(s, sigma, Ad) L(s+1/2, sigma x chi^-1) L(s+1/2, sigma^v x chi) \
             L(s-1/2, sigma x chi^-1) L(s-1/2, sigma^v x chi)",
            1,
        )
        .note("the row writes sigma where the lift is meant")
        .nongeneric()
        .gso(ZERO),
        CatalogEntry::new(
            "gspin6/nongnr/D-St",
            "(D)",
            "nongnr-(A)",
            r#"env {
  gen eta0;
  gen chi;
  gen eta;
}
group gspin6;
case "gspin6/nongnr/D-St";
lift m = Q([eta0]);
lift n = Q([nu^(1/2) chi], [nu^(-1/2) chi], [nu^(-1/2) eta, nu^(1/2) eta]);
monodromy m = [[0]];
monodromy n = [[0, 0, 0, 0], [0, 0, 0, 0], [0, 0, 0, 1], [0, 0, 0, 0]];
"#,
        )
        .printed(
            "L(s-1) L(s)^2 L(s+1)^2 L(s, chi eta^-1) L(s+1, chi eta^-1) L(s+1, chi^-1 eta) L(s, chi^-1 eta)",
            1,
        )
        .at_least()
        .note("ord >= 1, exactly 1 in generic position; without a cuspidal base the row reads as type (A)")
        .nongeneric()
        .gso(G6_34),
    ]
}

static ENTRIES: OnceLock<Vec<CatalogEntry>> = OnceLock::new();

/// Every entry, GSpin(4) first, in table order.
pub fn entries() -> &'static [CatalogEntry] {
    ENTRIES.get_or_init(|| {
        let mut v = gspin4();
        v.extend(gspin6());
        v
    })
}

pub fn get(id: &str) -> Option<&'static CatalogEntry> {
    entries().iter().find(|e| e.id == id)
}

/// Entries whose id matches a glob such as `gspin6/nongnr/A*`.
pub fn filter(pattern: &str) -> Result<Vec<&'static CatalogEntry>, glob::PatternError> {
    let p = glob::Pattern::new(pattern)?;
    Ok(entries().iter().filter(|e| p.matches(e.id)).collect())
}

/// A displayed centralizer: `ker ad(N)` on `gl(4)` with its generator count.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct KernelEquation {
    pub id: &'static str,
    pub matrix: &'static str,
    pub dim: usize,
}

pub const KERNEL_EQUATIONS: &[KernelEquation] = &[
    KernelEquation { id: "N12", matrix: "[[0, 1, 0, 0], [0, 0, 0, 0], [0, 0, 0, 0], [0, 0, 0, 0]]", dim: 10 },
    KernelEquation { id: "N23", matrix: "[[0, 0, 0, 0], [0, 0, 1, 0], [0, 0, 0, 0], [0, 0, 0, 0]]", dim: 10 },
    KernelEquation { id: "N34", matrix: "[[0, 0, 0, 0], [0, 0, 0, 0], [0, 0, 0, 1], [0, 0, 0, 0]]", dim: 10 },
    KernelEquation { id: "N1223", matrix: "[[0, 1, 0, 0], [0, 0, 1, 0], [0, 0, 0, 0], [0, 0, 0, 0]]", dim: 6 },
    KernelEquation { id: "N1234", matrix: "[[0, 1, 0, 0], [0, 0, 0, 0], [0, 0, 0, 1], [0, 0, 0, 0]]", dim: 8 },
    KernelEquation { id: "N122334", matrix: "[[0, 1, 0, 0], [0, 0, 1, 0], [0, 0, 0, 1], [0, 0, 0, 0]]", dim: 4 },
    KernelEquation { id: "N1324", matrix: "[[0, 0, 1, 0], [0, 0, 0, 1], [0, 0, 0, 0], [0, 0, 0, 0]]", dim: 8 },
    KernelEquation { id: "N2334", matrix: "[[0, 0, 0, 0], [0, 0, 1, 0], [0, 0, 0, 1], [0, 0, 0, 0]]", dim: 6 },
];
