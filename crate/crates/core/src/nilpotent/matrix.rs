//! Dense matrices over Q with exact kernels.

use std::fmt;
use std::ops::{Add, Mul, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum MatrixError {
    #[error("shape mismatch: {0}")]
    Shape(String),
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ExactMatrix {
    rows: usize,
    cols: usize,
    data: Vec<BigRational>,
}

fn q(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

impl ExactMatrix {
    pub fn zeros(rows: usize, cols: usize) -> ExactMatrix {
        ExactMatrix { rows, cols, data: vec![BigRational::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> ExactMatrix {
        let mut m = ExactMatrix::zeros(n, n);
        for i in 0..n {
            m.set(i, i, BigRational::one());
        }
        m
    }

    /// Matrix unit with a one in row `i`, column `j` (zero-based).
    pub fn unit(n: usize, i: usize, j: usize) -> ExactMatrix {
        let mut m = ExactMatrix::zeros(n, n);
        m.set(i, j, BigRational::one());
        m
    }

    pub fn from_ints(rows: &[Vec<i64>]) -> Result<ExactMatrix, MatrixError> {
        let r = rows.len();
        let c = rows.first().map_or(0, |x| x.len());
        if rows.iter().any(|x| x.len() != c) {
            return Err(MatrixError::Shape("ragged rows".into()));
        }
        Ok(ExactMatrix { rows: r, cols: c, data: rows.iter().flatten().map(|&x| q(x)).collect() })
    }

    pub fn from_rows(rows: Vec<Vec<BigRational>>) -> Result<ExactMatrix, MatrixError> {
        let r = rows.len();
        let c = rows.first().map_or(0, |x| x.len());
        if rows.iter().any(|x| x.len() != c) {
            return Err(MatrixError::Shape("ragged rows".into()));
        }
        Ok(ExactMatrix { rows: r, cols: c, data: rows.into_iter().flatten().collect() })
    }

    /// Columns given as vectors of equal length.
    pub fn from_columns(cols: &[Vec<BigRational>], rows: usize) -> ExactMatrix {
        let mut m = ExactMatrix::zeros(rows, cols.len());
        for (j, c) in cols.iter().enumerate() {
            for (i, x) in c.iter().enumerate() {
                m.set(i, j, x.clone());
            }
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &BigRational {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, x: BigRational) {
        self.data[i * self.cols + j] = x;
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|x| x.is_zero())
    }

    /// Entries in row-major order.
    pub fn entries(&self) -> &[BigRational] {
        &self.data
    }

    pub fn transpose(&self) -> ExactMatrix {
        let mut t = ExactMatrix::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.set(j, i, self.get(i, j).clone());
            }
        }
        t
    }

    pub fn scale(&self, c: &BigRational) -> ExactMatrix {
        ExactMatrix { rows: self.rows, cols: self.cols, data: self.data.iter().map(|x| x * c).collect() }
    }

    pub fn trace(&self) -> BigRational {
        (0..self.rows.min(self.cols)).map(|i| self.get(i, i).clone()).sum()
    }

    pub fn try_add(&self, o: &ExactMatrix) -> Result<ExactMatrix, MatrixError> {
        self.same_shape(o)?;
        Ok(ExactMatrix { rows: self.rows, cols: self.cols, data: self.data.iter().zip(&o.data).map(|(a, b)| a + b).collect() })
    }

    pub fn try_sub(&self, o: &ExactMatrix) -> Result<ExactMatrix, MatrixError> {
        self.same_shape(o)?;
        Ok(ExactMatrix { rows: self.rows, cols: self.cols, data: self.data.iter().zip(&o.data).map(|(a, b)| a - b).collect() })
    }

    pub fn try_mul(&self, o: &ExactMatrix) -> Result<ExactMatrix, MatrixError> {
        if self.cols != o.rows {
            return Err(MatrixError::Shape(format!("{}x{} times {}x{}", self.rows, self.cols, o.rows, o.cols)));
        }
        let mut m = ExactMatrix::zeros(self.rows, o.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..o.cols {
                    let b = o.get(k, j);
                    if !b.is_zero() {
                        m.data[i * o.cols + j] += a * b;
                    }
                }
            }
        }
        Ok(m)
    }

    /// `[self, o] = self·o - o·self`.
    pub fn bracket(&self, o: &ExactMatrix) -> Result<ExactMatrix, MatrixError> {
        self.try_mul(o)?.try_sub(&o.try_mul(self)?)
    }

    pub fn apply(&self, v: &[BigRational]) -> Result<Vec<BigRational>, MatrixError> {
        if v.len() != self.cols {
            return Err(MatrixError::Shape(format!("vector of length {} for {} columns", v.len(), self.cols)));
        }
        Ok((0..self.rows).map(|i| (0..self.cols).map(|j| self.get(i, j) * &v[j]).sum()).collect())
    }

    fn same_shape(&self, o: &ExactMatrix) -> Result<(), MatrixError> {
        if self.rows != o.rows || self.cols != o.cols {
            return Err(MatrixError::Shape(format!("{}x{} against {}x{}", self.rows, self.cols, o.rows, o.cols)));
        }
        Ok(())
    }

    /// Block diagonal sum.
    pub fn direct_sum(blocks: &[ExactMatrix]) -> ExactMatrix {
        let r: usize = blocks.iter().map(|b| b.rows).sum();
        let c: usize = blocks.iter().map(|b| b.cols).sum();
        let mut m = ExactMatrix::zeros(r, c);
        let (mut oi, mut oj) = (0, 0);
        for b in blocks {
            for i in 0..b.rows {
                for j in 0..b.cols {
                    m.set(oi + i, oj + j, b.get(i, j).clone());
                }
            }
            oi += b.rows;
            oj += b.cols;
        }
        m
    }

    /// Row echelon form by fraction-free (Bareiss) elimination on the integer
    /// matrix obtained by clearing denominators row by row. Returns the
    /// echelon rows and the pivot columns.
    fn bareiss(&self) -> (Vec<Vec<BigInt>>, Vec<usize>) {
        let mut a: Vec<Vec<BigInt>> = (0..self.rows)
            .map(|i| {
                let row = &self.data[i * self.cols..(i + 1) * self.cols];
                let l = row.iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
                row.iter().map(|x| (x * BigRational::from_integer(l.clone())).to_integer()).collect()
            })
            .collect();
        let mut pivots = Vec::new();
        let mut prev = BigInt::one();
        let mut r = 0;
        for c in 0..self.cols {
            if r == self.rows {
                break;
            }
            let Some(p) = (r..self.rows).find(|&i| !a[i][c].is_zero()) else {
                continue;
            };
            a.swap(r, p);
            for i in r + 1..self.rows {
                for j in c + 1..self.cols {
                    let v = (&a[r][c] * &a[i][j] - &a[i][c] * &a[r][j]) / &prev;
                    a[i][j] = v;
                }
                a[i][c] = BigInt::zero();
            }
            prev = a[r][c].clone();
            pivots.push(c);
            r += 1;
        }
        a.truncate(r);
        (a, pivots)
    }

    pub fn rank(&self) -> usize {
        self.bareiss().1.len()
    }

    /// Basis of `{v : self·v = 0}`, one vector per free column.
    pub fn kernel(&self) -> Vec<Vec<BigRational>> {
        let (ech, pivots) = self.bareiss();
        let n = self.cols;
        let free: Vec<usize> = (0..n).filter(|c| !pivots.contains(c)).collect();
        let ech: Vec<Vec<BigRational>> =
            ech.into_iter().map(|row| row.into_iter().map(BigRational::from_integer).collect()).collect();
        free.iter()
            .map(|&f| {
                let mut v = vec![BigRational::zero(); n];
                v[f] = BigRational::one();
                for (row, &pc) in ech.iter().zip(&pivots).rev() {
                    let s: BigRational = (pc + 1..n).map(|j| &row[j] * &v[j]).sum();
                    v[pc] = -s / &row[pc];
                }
                v
            })
            .collect()
    }

    pub fn kernel_dim(&self) -> usize {
        self.cols - self.rank()
    }

    /// Solve `self·x = b` exactly, if solvable.
    pub fn solve(&self, b: &[BigRational]) -> Option<Vec<BigRational>> {
        if b.len() != self.rows {
            return None;
        }
        let mut aug = ExactMatrix::zeros(self.rows, self.cols + 1);
        for (i, bi) in b.iter().enumerate() {
            for j in 0..self.cols {
                aug.set(i, j, self.get(i, j).clone());
            }
            aug.set(i, self.cols, bi.clone());
        }
        let (ech, pivots) = aug.bareiss();
        if pivots.last() == Some(&self.cols) {
            return None;
        }
        let ech: Vec<Vec<BigRational>> =
            ech.into_iter().map(|row| row.into_iter().map(BigRational::from_integer).collect()).collect();
        let mut x = vec![BigRational::zero(); self.cols];
        for (row, &pc) in ech.iter().zip(&pivots).rev() {
            let s: BigRational = (pc + 1..self.cols).map(|j| &row[j] * &x[j]).sum();
            x[pc] = (&row[self.cols] - s) / &row[pc];
        }
        Some(x)
    }

    /// Text form: a `rows cols` header, then one line per row.
    pub fn to_text(&self) -> String {
        let mut s = format!("{} {}\n", self.rows, self.cols);
        for i in 0..self.rows {
            let row: Vec<String> = (0..self.cols).map(|j| self.get(i, j).to_string()).collect();
            s.push_str(&row.join(" "));
            s.push('\n');
        }
        s
    }

    pub fn parse_text(text: &str) -> Result<ExactMatrix, MatrixError> {
        let mut lines = text.lines().enumerate().filter(|(_, l)| !l.trim().is_empty() && !l.trim_start().starts_with('#'));
        let (hl, header) = lines.next().ok_or(MatrixError::Parse { line: 1, msg: "missing header".into() })?;
        let dims: Vec<usize> = header
            .split_whitespace()
            .map(|t| t.parse())
            .collect::<Result<_, _>>()
            .map_err(|_| MatrixError::Parse { line: hl + 1, msg: "header must be `rows cols`".into() })?;
        let [rows, cols] = dims[..] else {
            return Err(MatrixError::Parse { line: hl + 1, msg: "header must be `rows cols`".into() });
        };
        if rows.saturating_mul(cols) > 1 << 20 {
            return Err(MatrixError::Parse { line: hl + 1, msg: "matrix too large".into() });
        }
        let mut data = Vec::with_capacity(rows * cols);
        let mut seen = 0;
        for (ln, line) in lines {
            if seen == rows {
                return Err(MatrixError::Parse { line: ln + 1, msg: "too many rows".into() });
            }
            let row: Vec<BigRational> = line
                .split_whitespace()
                .map(parse_rational)
                .collect::<Option<_>>()
                .ok_or(MatrixError::Parse { line: ln + 1, msg: "bad entry".into() })?;
            if row.len() != cols {
                return Err(MatrixError::Parse { line: ln + 1, msg: format!("expected {cols} entries, found {}", row.len()) });
            }
            data.extend(row);
            seen += 1;
        }
        if seen != rows {
            return Err(MatrixError::Parse { line: text.lines().count().max(1), msg: format!("expected {rows} rows, found {seen}") });
        }
        Ok(ExactMatrix { rows, cols, data })
    }
}

fn parse_rational(t: &str) -> Option<BigRational> {
    match t.split_once('/') {
        None => t.parse::<BigInt>().ok().map(BigRational::from_integer),
        Some((n, d)) => {
            let n: BigInt = n.parse().ok()?;
            let d: BigInt = d.parse().ok()?;
            (!d.is_zero() && !d.is_negative()).then(|| BigRational::new(n, d))
        }
    }
}

impl Add for &ExactMatrix {
    type Output = ExactMatrix;
    fn add(self, o: &ExactMatrix) -> ExactMatrix {
        self.try_add(o).expect("shapes agree")
    }
}

impl Sub for &ExactMatrix {
    type Output = ExactMatrix;
    fn sub(self, o: &ExactMatrix) -> ExactMatrix {
        self.try_sub(o).expect("shapes agree")
    }
}

impl Mul for &ExactMatrix {
    type Output = ExactMatrix;
    fn mul(self, o: &ExactMatrix) -> ExactMatrix {
        self.try_mul(o).expect("shapes agree")
    }
}

impl fmt::Display for ExactMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cells: Vec<String> = self.data.iter().map(|x| x.to_string()).collect();
        let w = cells.iter().map(|c| c.len()).max().unwrap_or(1);
        for i in 0..self.rows {
            let row: Vec<String> = (0..self.cols).map(|j| format!("{:>w$}", cells[i * self.cols + j])).collect();
            writeln!(f, "[{}]", row.join(" "))?;
        }
        Ok(())
    }
}
