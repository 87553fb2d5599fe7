//! Matrix Lie algebras `gl(n)`, `gso(2k)` and `ĝ`, with explicit bases.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use super::matrix::{ExactMatrix, MatrixError};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum LieError {
    #[error(transparent)]
    Matrix(#[from] MatrixError),
    #[error("element does not lie in {0}")]
    NotInAlgebra(String),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum LieKind {
    Gl(usize),
    /// `gso(2k)` preserving the anti-diagonal form up to scalars.
    Gso(usize),
    /// `{(X, Y) in gl(m) x gl(n) : r tr X = s tr Y}`, block diagonal.
    Ghat { m: usize, n: usize, r: i64, s: i64 },
}

impl fmt::Display for LieKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LieKind::Gl(n) => write!(f, "gl({n})"),
            LieKind::Gso(k) => write!(f, "gso({})", 2 * k),
            LieKind::Ghat { m, n, r, s } => write!(f, "g^({m},{n};{r},{s})"),
        }
    }
}

/// The anti-diagonal form `J` of size `n`.
pub fn antidiagonal(n: usize) -> ExactMatrix {
    let mut j = ExactMatrix::zeros(n, n);
    for i in 0..n {
        j.set(i, n - 1 - i, BigRational::one());
    }
    j
}

/// `X^T J + J X = 0` for the anti-diagonal `J`.
pub fn is_so_element(x: &ExactMatrix) -> bool {
    if !x.is_square() {
        return false;
    }
    let j = antidiagonal(x.rows());
    (&(&x.transpose() * &j) + &(&j * x)).is_zero()
}

#[derive(Clone, Debug)]
pub struct LieBasis {
    pub kind: LieKind,
    /// Size of the ambient square matrices.
    pub size: usize,
    pub elements: Vec<ExactMatrix>,
    coords: ExactMatrix,
}

fn flatten(x: &ExactMatrix) -> Vec<BigRational> {
    x.entries().to_vec()
}

impl LieBasis {
    pub fn new(kind: LieKind) -> LieBasis {
        let (size, elements) = match kind {
            LieKind::Gl(n) => (n, (0..n).flat_map(|i| (0..n).map(move |j| ExactMatrix::unit(n, i, j))).collect()),
            LieKind::Gso(k) => {
                let n = 2 * k;
                let mut els = vec![ExactMatrix::identity(n)];
                for i in 0..n {
                    for j in 0..n {
                        let (pi, pj) = (n - 1 - j, n - 1 - i);
                        // one element per pair {(i,j), (pi,pj)}; anti-diagonal cells are forced to zero
                        if (i, j) < (pi, pj) {
                            els.push(&ExactMatrix::unit(n, i, j) - &ExactMatrix::unit(n, pi, pj));
                        }
                    }
                }
                (n, els)
            }
            LieKind::Ghat { m, n, r, s } => {
                let size = m + n;
                let mut els = Vec::new();
                let embed = |x: ExactMatrix, first: bool| {
                    let (a, b) = if first { (x, ExactMatrix::zeros(n, n)) } else { (ExactMatrix::zeros(m, m), x) };
                    ExactMatrix::direct_sum(&[a, b])
                };
                for i in 0..m {
                    for j in 0..m {
                        if i != j {
                            els.push(embed(ExactMatrix::unit(m, i, j), true));
                        }
                    }
                }
                for i in 0..n {
                    for j in 0..n {
                        if i != j {
                            els.push(embed(ExactMatrix::unit(n, i, j), false));
                        }
                    }
                }
                // traceless diagonals in each block
                for i in 1..m {
                    els.push(&embed(ExactMatrix::unit(m, 0, 0), true) - &embed(ExactMatrix::unit(m, i, i), true));
                }
                for i in 1..n {
                    els.push(&embed(ExactMatrix::unit(n, 0, 0), false) - &embed(ExactMatrix::unit(n, i, i), false));
                }
                // (s/m) I_m ⊕ (r/n) I_n has r·tr = s·tr
                let cm = BigRational::new(BigInt::from(s), BigInt::from(m as i64));
                let cn = BigRational::new(BigInt::from(r), BigInt::from(n as i64));
                els.push(ExactMatrix::direct_sum(&[ExactMatrix::identity(m).scale(&cm), ExactMatrix::identity(n).scale(&cn)]));
                (size, els)
            }
        };
        let cols: Vec<Vec<BigRational>> = elements.iter().map(flatten).collect();
        let coords = ExactMatrix::from_columns(&cols, size * size);
        LieBasis { kind, size, elements, coords }
    }

    pub fn dim(&self) -> usize {
        self.elements.len()
    }

    pub fn contains(&self, x: &ExactMatrix) -> bool {
        if x.rows() != self.size || x.cols() != self.size {
            return false;
        }
        match self.kind {
            LieKind::Gl(_) => true,
            LieKind::Gso(_) => {
                // X = Y + c I with Y in so: X^T J + J X = 2c J
                let j = antidiagonal(self.size);
                let lhs = &(&x.transpose() * &j) + &(&j * x);
                let c = lhs.get(0, self.size - 1).clone();
                lhs == j.scale(&c)
            }
            LieKind::Ghat { m, r, s, .. } => {
                for i in 0..self.size {
                    for j in 0..self.size {
                        if (i < m) != (j < m) && !x.get(i, j).is_zero() {
                            return false;
                        }
                    }
                }
                let tx: BigRational = (0..m).map(|i| x.get(i, i).clone()).sum();
                let ty: BigRational = (m..self.size).map(|i| x.get(i, i).clone()).sum();
                tx * BigRational::from_integer(r.into()) == ty * BigRational::from_integer(s.into())
            }
        }
    }

    /// Coordinates of `x` in this basis.
    pub fn coordinates(&self, x: &ExactMatrix) -> Result<Vec<BigRational>, LieError> {
        if !self.contains(x) {
            return Err(LieError::NotInAlgebra(self.kind.to_string()));
        }
        self.coords.solve(&flatten(x)).ok_or_else(|| LieError::NotInAlgebra(self.kind.to_string()))
    }

    pub fn element(&self, coords: &[BigRational]) -> ExactMatrix {
        let mut out = ExactMatrix::zeros(self.size, self.size);
        for (c, e) in coords.iter().zip(&self.elements) {
            if !c.is_zero() {
                out = &out + &e.scale(c);
            }
        }
        out
    }

    /// Matrix of `ad(n) = [n, -]` in this basis.
    pub fn ad_operator(&self, n: &ExactMatrix) -> Result<ExactMatrix, LieError> {
        if !self.contains(n) {
            return Err(LieError::NotInAlgebra(self.kind.to_string()));
        }
        let cols = self
            .elements
            .iter()
            .map(|e| self.coordinates(&n.bracket(e)?))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(ExactMatrix::from_columns(&cols, self.dim()))
    }

    /// Basis of the centralizer of `n`, as matrices.
    pub fn centralizer(&self, n: &ExactMatrix) -> Result<Vec<ExactMatrix>, LieError> {
        Ok(self.ad_operator(n)?.kernel().iter().map(|v| self.element(v)).collect())
    }
}

/// Nilpotent of `J_l ⊗ I_d` shape: `l` blocks of size `d` with identities on the
/// block superdiagonal. This is the monodromy of `ρ ⊗ sp(l)` with `dim ρ = d`.
pub fn jordan_block(l: usize, d: usize) -> ExactMatrix {
    let n = l * d;
    let mut m = ExactMatrix::zeros(n, n);
    for b in 0..l.saturating_sub(1) {
        for i in 0..d {
            m.set(b * d + i, (b + 1) * d + i, BigRational::one());
        }
    }
    m
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn dimensions() {
        assert_eq!(LieBasis::new(LieKind::Gl(3)).dim(), 9);
        assert_eq!(LieBasis::new(LieKind::Gso(2)).dim(), 7);
        assert_eq!(LieBasis::new(LieKind::Gso(3)).dim(), 16);
        assert_eq!(LieBasis::new(LieKind::Ghat { m: 2, n: 2, r: 1, s: 1 }).dim(), 7);
        assert_eq!(LieBasis::new(LieKind::Ghat { m: 1, n: 4, r: 2, s: 1 }).dim(), 16);
    }

    #[test]
    fn gso_basis_is_closed() {
        let b = LieBasis::new(LieKind::Gso(2));
        for x in &b.elements {
            assert!(b.contains(x));
            for y in &b.elements {
                assert!(b.contains(&x.bracket(y).unwrap()));
            }
        }
    }

    #[test]
    fn ghat_rejects_wrong_trace() {
        let b = LieBasis::new(LieKind::Ghat { m: 1, n: 4, r: 2, s: 1 });
        assert!(!b.contains(&ExactMatrix::identity(5)));
        let mut x = ExactMatrix::zeros(5, 5);
        x.set(0, 0, BigRational::one());
        for i in 1..5 {
            x.set(i, i, BigRational::new(1.into(), 2.into()));
        }
        assert!(b.contains(&x));
    }

    #[test]
    fn jordan_shapes() {
        let j = jordan_block(2, 2);
        let expected = &ExactMatrix::unit(4, 0, 2) + &ExactMatrix::unit(4, 1, 3);
        assert_eq!(j, expected);
        assert!(jordan_block(1, 3).is_zero());
    }
}
