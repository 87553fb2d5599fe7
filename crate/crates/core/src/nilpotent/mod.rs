//! Monodromy operators: centralizers, the embedding into `gso`, and the
//! degree cross-check against the L-function side.

pub mod lie;
pub mod matrix;

use num_rational::BigRational;
use num_traits::Zero;
use serde::Serialize;

pub use lie::{is_so_element, jordan_block, LieBasis, LieError, LieKind};
pub use matrix::{ExactMatrix, MatrixError};

use crate::gspin::GroupSpec;
use crate::langlands::{Base, DataError, WdParam};
use crate::lfunction::adjoint_g;
use crate::symbolic::RelationEnv;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum NilpotentError {
    #[error(transparent)]
    Lie(#[from] LieError),
    #[error(transparent)]
    Matrix(#[from] MatrixError),
    #[error(transparent)]
    Data(#[from] DataError),
    #[error("no embedding is available for {0}")]
    UnsupportedGroup(String),
    #[error("expected a strictly upper triangular {0}x{0} matrix")]
    NotStrictlyUpper(usize),
    #[error("degree cross-check needs unramified characters only: {0}")]
    PreconditionViolated(String),
}

fn strictly_upper(x: &ExactMatrix, n: usize) -> Result<(), NilpotentError> {
    if x.rows() != n || x.cols() != n {
        return Err(NilpotentError::NotStrictlyUpper(n));
    }
    for i in 0..n {
        for j in 0..=i {
            if !x.get(i, j).is_zero() {
                return Err(NilpotentError::NotStrictlyUpper(n));
            }
        }
    }
    Ok(())
}

/// `e_ij - e_kl` in size `n`, one-based.
fn pair(n: usize, (i, j): (usize, usize), (k, l): (usize, usize)) -> ExactMatrix {
    &ExactMatrix::unit(n, i - 1, j - 1) - &ExactMatrix::unit(n, k - 1, l - 1)
}

/// Images of the matrix units `E_ij` (i < j) of gl(4) in so(6).
type Slot = (usize, usize);

const GSPIN6_IMAGES: [(Slot, Slot, Slot); 6] = [
    ((1, 2), (2, 3), (4, 5)),
    ((2, 3), (1, 2), (5, 6)),
    ((3, 4), (2, 4), (3, 5)),
    ((1, 3), (1, 3), (4, 6)),
    ((2, 4), (1, 4), (3, 6)),
    ((1, 4), (1, 5), (2, 6)),
];

/// Push a nilpotent pair `(N_m, N_n)` of the dual group into `gso(2k)`.
/// Linear on strictly upper triangular inputs.
pub fn embed(group: &GroupSpec, n_m: &ExactMatrix, n_n: &ExactMatrix) -> Result<ExactMatrix, NilpotentError> {
    if *group == GroupSpec::gspin4() {
        strictly_upper(n_m, 2)?;
        strictly_upper(n_n, 2)?;
        let a = pair(4, (1, 2), (3, 4)).scale(n_m.get(0, 1));
        let b = pair(4, (1, 3), (2, 4)).scale(n_n.get(0, 1));
        Ok(&a + &b)
    } else if *group == GroupSpec::gspin6() {
        strictly_upper(n_m, 1)?;
        strictly_upper(n_n, 4)?;
        let mut out = ExactMatrix::zeros(6, 6);
        for ((i, j), p, q) in GSPIN6_IMAGES {
            let c = n_n.get(i - 1, j - 1);
            if !c.is_zero() {
                out = &out + &pair(6, p, q).scale(c);
            }
        }
        Ok(out)
    } else {
        Err(NilpotentError::UnsupportedGroup(group.to_string()))
    }
}

/// Monodromy of a parameter: one `J_r ⊗ I_d` block per piece, in order.
pub fn monodromy(p: &WdParam, env: &RelationEnv) -> Result<ExactMatrix, NilpotentError> {
    let blocks = p
        .pieces
        .iter()
        .map(|piece| Ok(jordan_block(piece.r as usize, piece.base.dim(env)? as usize)))
        .collect::<Result<Vec<_>, DataError>>()?;
    Ok(ExactMatrix::direct_sum(&blocks))
}

/// `dim ker ad(N)` on gl(n).
pub fn centralizer_dim_gl(n: &ExactMatrix) -> Result<usize, NilpotentError> {
    Ok(LieBasis::new(LieKind::Gl(n.rows())).ad_operator(n)?.kernel_dim())
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DegreeCheck {
    /// Unramified degree of the full adjoint L-function.
    pub l_degree: u32,
    /// `dim ker ad(N)` on the dual Lie algebra.
    pub kernel_dim: usize,
}

impl DegreeCheck {
    pub fn agrees(&self) -> bool {
        self.l_degree as usize == self.kernel_dim
    }
}

/// For parameters built from unramified characters, the number of factors of
/// the full adjoint L-function equals the dimension of the centralizer of the
/// monodromy in `ĝ`.
pub fn degree_crosscheck(
    group: &GroupSpec,
    pm: &WdParam,
    pn: &WdParam,
    env: &RelationEnv,
) -> Result<DegreeCheck, NilpotentError> {
    for piece in pm.pieces.iter().chain(&pn.pieces) {
        match &piece.base {
            Base::Char(e) => {
                if !env.is_unramified(e).map_err(DataError::from)? {
                    return Err(NilpotentError::PreconditionViolated(format!("{e} is ramified")));
                }
            }
            Base::Cusp { symbol, .. } => {
                return Err(NilpotentError::PreconditionViolated(format!("{symbol} is cuspidal")));
            }
        }
    }
    let l_degree = adjoint_g(pm, pn, true, env)?.unramified_degree(env).map_err(DataError::from)?;
    let n = ExactMatrix::direct_sum(&[monodromy(pm, env)?, monodromy(pn, env)?]);
    let basis = LieBasis::new(group.lie_kind());
    let kernel_dim = basis.ad_operator(&n)?.kernel_dim();
    Ok(DegreeCheck { l_degree, kernel_dim })
}

/// Scalar helper for callers building matrices by hand.
pub fn rational(n: i64) -> BigRational {
    BigRational::from_integer(n.into())
}
