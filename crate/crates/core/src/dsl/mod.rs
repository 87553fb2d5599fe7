//! Text format for parameter files, L-products and matrix literals.
//! The grammar is documented in `docs/dsl.md`.

mod format;
mod lexer;
mod parser;

use std::fmt;

use crate::gspin::{GroupSpec, RestrictedRep};
use crate::langlands::LanglandsDatum;
use crate::lfunction::LProduct;
use crate::nilpotent::ExactMatrix;
use crate::symbolic::{CharExpr, EnvDecl, RelationEnv};

pub use format::format_param_file;

/// A parse or validation error at a source position (one-based).
#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub struct DslError {
    pub line: usize,
    pub col: usize,
    pub message: String,
}

impl DslError {
    pub(crate) fn at(line: usize, col: usize, message: impl Into<String>) -> DslError {
        DslError { line, col, message: message.into() }
    }
}

impl fmt::Display for DslError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}: {}", self.line, self.col, self.message)
    }
}

/// A parsed and validated parameter file.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParamFile {
    pub env: EnvDecl,
    pub group: GroupSpec,
    pub case: Option<String>,
    pub lift_m: LanglandsDatum,
    pub lift_n: LanglandsDatum,
    pub monodromy_m: Option<ExactMatrix>,
    pub monodromy_n: Option<ExactMatrix>,
}

impl ParamFile {
    pub fn build_env(&self) -> RelationEnv {
        RelationEnv::build(&self.env).expect("validated when parsed")
    }

    pub fn to_rep(&self) -> RestrictedRep {
        RestrictedRep::new(self.group, self.lift_m.clone(), self.lift_n.clone(), self.build_env())
    }
}

pub fn parse_param_file(src: &str) -> Result<ParamFile, DslError> {
    parser::Parser::new(src)?.param_file()
}

/// Parse an L-product such as `L(s-1) L(s)^2 L(s, sigma x chi^-1)`, resolving
/// symbols against `env`. The result is canonical.
pub fn parse_lproduct(src: &str, env: &RelationEnv) -> Result<LProduct, DslError> {
    parser::Parser::new(src)?.lproduct(env)
}

/// Parse a character expression such as `nu^(1/2) chi1 chi2^-1`.
pub fn parse_char_expr(src: &str) -> Result<CharExpr, DslError> {
    parser::Parser::new(src)?.char_expr_only()
}

/// Parse a matrix literal `[[0, 1], [0, 0]]`.
pub fn parse_matrix(src: &str) -> Result<ExactMatrix, DslError> {
    parser::Parser::new(src)?.matrix_only()
}

/// Matrix literal form accepted by [`parse_matrix`].
pub fn format_matrix(m: &ExactMatrix) -> String {
    format::matrix_literal(m)
}
