//! Dense matrices over the rationals with exact rank, solving, and the
//! projection and row-space constructions used by the rank witnesses.

mod pattern;
mod text;

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};
use thiserror::Error;

pub use pattern::{graph_pattern, in_s_probe, matches_pattern, probe_pattern, PatternEntry, PatternMatrix, ProbeOrder};

/// Exact rational number, always kept in lowest terms with a positive denominator.
pub type Rational = num_rational::BigRational;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum LinalgError {
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("matrix is {rows}x{cols}, expected square")]
    NotSquare { rows: usize, cols: usize },
    #[error("matrix is not symmetric")]
    NotSymmetric,
    #[error("matrix text line {line}: {reason}")]
    Parse { line: usize, reason: String },
}

pub fn rat(v: i64) -> Rational {
    Rational::from_integer(BigInt::from(v))
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RationalMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Rational>,
}

impl RationalMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        RationalMatrix { rows, cols, data: vec![Rational::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = Rational::one();
        }
        m
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> Rational) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        RationalMatrix { rows, cols, data }
    }

    /// Panics if the rows are ragged.
    pub fn from_i64_rows(rows: &[Vec<i64>]) -> Self {
        let cols = rows.first().map_or(0, |r| r.len());
        assert!(rows.iter().all(|r| r.len() == cols), "ragged rows");
        Self::from_fn(rows.len(), cols, |i, j| rat(rows[i][j]))
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

    pub fn row(&self, i: usize) -> &[Rational] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |i, j| self[(j, i)].clone())
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Zero::is_zero)
    }

    pub fn is_symmetric(&self) -> bool {
        self.is_square() && (0..self.rows).all(|i| (0..i).all(|j| self[(i, j)] == self[(j, i)]))
    }

    pub fn select(&self, row_idx: &[usize], col_idx: &[usize]) -> Self {
        Self::from_fn(row_idx.len(), col_idx.len(), |i, j| self[(row_idx[i], col_idx[j])].clone())
    }

    pub fn hstack(&self, other: &Self) -> Result<Self, LinalgError> {
        if self.rows != other.rows {
            return Err(LinalgError::DimensionMismatch(format!("hstack {} vs {} rows", self.rows, other.rows)));
        }
        Ok(Self::from_fn(self.rows, self.cols + other.cols, |i, j| {
            if j < self.cols {
                self[(i, j)].clone()
            } else {
                other[(i, j - self.cols)].clone()
            }
        }))
    }

    pub fn vstack(&self, other: &Self) -> Result<Self, LinalgError> {
        if self.cols != other.cols {
            return Err(LinalgError::DimensionMismatch(format!("vstack {} vs {} cols", self.cols, other.cols)));
        }
        Ok(Self::from_fn(self.rows + other.rows, self.cols, |i, j| {
            if i < self.rows {
                self[(i, j)].clone()
            } else {
                other[(i - self.rows, j)].clone()
            }
        }))
    }

    /// `[[a, b], [c, d]]`.
    pub fn block(a: &Self, b: &Self, c: &Self, d: &Self) -> Result<Self, LinalgError> {
        a.hstack(b)?.vstack(&c.hstack(d)?)
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self, LinalgError> {
        if self.cols != other.rows {
            return Err(LinalgError::DimensionMismatch(format!(
                "product {}x{} * {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut out = Self::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = &other[(k, j)];
                    if !b.is_zero() {
                        out[(i, j)] += a * b;
                    }
                }
            }
        }
        Ok(out)
    }

    fn zip(&self, other: &Self, f: impl Fn(&Rational, &Rational) -> Rational) -> Result<Self, LinalgError> {
        if (self.rows, self.cols) != (other.rows, other.cols) {
            return Err(LinalgError::DimensionMismatch(format!(
                "{}x{} vs {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let data = self.data.iter().zip(&other.data).map(|(a, b)| f(a, b)).collect();
        Ok(RationalMatrix { rows: self.rows, cols: self.cols, data })
    }

    pub fn try_add(&self, other: &Self) -> Result<Self, LinalgError> {
        self.zip(other, |a, b| a + b)
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self, LinalgError> {
        self.zip(other, |a, b| a - b)
    }

    pub fn scale(&self, s: &Rational) -> Self {
        RationalMatrix { rows: self.rows, cols: self.cols, data: self.data.iter().map(|x| x * s).collect() }
    }

    /// Integer matrix with each row scaled by the lcm of its denominators.
    fn integer_rows(&self) -> Vec<Vec<BigInt>> {
        (0..self.rows)
            .map(|i| {
                let row = self.row(i);
                let l = row.iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
                row.iter().map(|x| x.numer() * (&l / x.denom())).collect()
            })
            .collect()
    }

    /// Exact rank by fraction-free (Bareiss) elimination.
    pub fn rank(&self) -> usize {
        let mut m = self.integer_rows();
        let (rows, cols) = (self.rows, self.cols);
        let mut prev = BigInt::one();
        let mut r = 0;
        for c in 0..cols {
            if r == rows {
                break;
            }
            let Some(p) = (r..rows).find(|&i| !m[i][c].is_zero()) else {
                continue;
            };
            m.swap(r, p);
            for i in r + 1..rows {
                for j in c + 1..cols {
                    let v = &m[r][c] * &m[i][j] - &m[i][c] * &m[r][j];
                    m[i][j] = v / &prev;
                }
                m[i][c] = BigInt::zero();
            }
            prev = m[r][c].clone();
            r += 1;
        }
        r
    }

    pub fn nullity(&self) -> Result<usize, LinalgError> {
        if !self.is_square() {
            return Err(LinalgError::NotSquare { rows: self.rows, cols: self.cols });
        }
        Ok(self.cols - self.rank())
    }

    /// Reduced row echelon form and pivot columns.
    pub fn rref(&self) -> (Self, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..m.cols {
            if r == m.rows {
                break;
            }
            let Some(p) = (r..m.rows).find(|&i| !m[(i, c)].is_zero()) else {
                continue;
            };
            m.swap_rows(r, p);
            let inv = m[(r, c)].recip();
            for j in c..m.cols {
                let v = &m[(r, j)] * &inv;
                m[(r, j)] = v;
            }
            for i in 0..m.rows {
                if i == r || m[(i, c)].is_zero() {
                    continue;
                }
                let f = m[(i, c)].clone();
                for j in c..m.cols {
                    let v = &m[(r, j)] * &f;
                    m[(i, j)] -= v;
                }
            }
            pivots.push(c);
            r += 1;
        }
        (m, pivots)
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    /// Nonzero rows of the RREF: a rational basis of the row space.
    pub fn row_space_basis(&self) -> Self {
        let (r, pivots) = self.rref();
        let idx: Vec<usize> = (0..pivots.len()).collect();
        let all: Vec<usize> = (0..self.cols).collect();
        r.select(&idx, &all)
    }

    /// Indices of a maximal independent set of columns (the RREF pivots).
    pub fn column_basis(&self) -> Vec<usize> {
        self.rref().1
    }

    pub fn determinant(&self) -> Result<Rational, LinalgError> {
        if !self.is_square() {
            return Err(LinalgError::NotSquare { rows: self.rows, cols: self.cols });
        }
        let mut m = self.clone();
        let mut det = Rational::one();
        for c in 0..m.cols {
            let Some(p) = (c..m.rows).find(|&i| !m[(i, c)].is_zero()) else {
                return Ok(Rational::zero());
            };
            if p != c {
                m.swap_rows(c, p);
                det = -det;
            }
            det *= m[(c, c)].clone();
            let inv = m[(c, c)].recip();
            for i in c + 1..m.rows {
                if m[(i, c)].is_zero() {
                    continue;
                }
                let f = &m[(i, c)] * &inv;
                for j in c..m.cols {
                    let v = &m[(c, j)] * &f;
                    m[(i, j)] -= v;
                }
            }
        }
        Ok(det)
    }
}

impl std::ops::Index<(usize, usize)> for RationalMatrix {
    type Output = Rational;
    fn index(&self, (i, j): (usize, usize)) -> &Rational {
        assert!(i < self.rows && j < self.cols, "index ({i},{j}) out of {}x{}", self.rows, self.cols);
        &self.data[i * self.cols + j]
    }
}

impl std::ops::IndexMut<(usize, usize)> for RationalMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Rational {
        assert!(i < self.rows && j < self.cols, "index ({i},{j}) out of {}x{}", self.rows, self.cols);
        &mut self.data[i * self.cols + j]
    }
}

/// Panicking operators for internal code whose shapes are correct by construction.
impl Mul for &RationalMatrix {
    type Output = RationalMatrix;
    fn mul(self, rhs: &RationalMatrix) -> RationalMatrix {
        self.try_mul(rhs).expect("matrix product shapes")
    }
}

impl Add for &RationalMatrix {
    type Output = RationalMatrix;
    fn add(self, rhs: &RationalMatrix) -> RationalMatrix {
        self.try_add(rhs).expect("matrix sum shapes")
    }
}

impl Sub for &RationalMatrix {
    type Output = RationalMatrix;
    fn sub(self, rhs: &RationalMatrix) -> RationalMatrix {
        self.try_sub(rhs).expect("matrix difference shapes")
    }
}

impl Neg for &RationalMatrix {
    type Output = RationalMatrix;
    fn neg(self) -> RationalMatrix {
        RationalMatrix { rows: self.rows, cols: self.cols, data: self.data.iter().map(|x| -x).collect() }
    }
}

impl fmt::Debug for RationalMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "RationalMatrix {}x{} [", self.rows, self.cols)?;
        for i in 0..self.rows {
            let row: Vec<String> = self.row(i).iter().map(|x| x.to_string()).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        write!(f, "]")
    }
}

/// Solves `a x = b`. `Ok(None)` when some column of `b` is outside the column space of `a`.
pub fn solve(a: &RationalMatrix, b: &RationalMatrix) -> Result<Option<RationalMatrix>, LinalgError> {
    if a.rows != b.rows {
        return Err(LinalgError::DimensionMismatch(format!("solve: {} vs {} rows", a.rows, b.rows)));
    }
    let aug = a.hstack(b)?;
    let (r, pivots) = aug.rref();
    if pivots.iter().any(|&p| p >= a.cols) {
        return Ok(None);
    }
    let mut x = RationalMatrix::zeros(a.cols, b.cols);
    for (row, &p) in pivots.iter().enumerate() {
        for j in 0..b.cols {
            x[(p, j)] = r[(row, a.cols + j)].clone();
        }
    }
    Ok(Some(x))
}

/// Splits `b` into its orthogonal projection onto the column space of `a`
/// and the orthogonal remainder: `b = para + perp`, `aᵀ perp = 0`.
pub fn projection_split(
    a: &RationalMatrix,
    b: &RationalMatrix,
) -> Result<(RationalMatrix, RationalMatrix), LinalgError> {
    if a.rows != b.rows {
        return Err(LinalgError::DimensionMismatch(format!("projection: {} vs {} rows", a.rows, b.rows)));
    }
    let basis_cols = a.column_basis();
    if basis_cols.is_empty() {
        return Ok((RationalMatrix::zeros(b.rows, b.cols), b.clone()));
    }
    let all_rows: Vec<usize> = (0..a.rows).collect();
    let basis = a.select(&all_rows, &basis_cols);
    let bt = basis.transpose();
    // normal equations: (Bᵀ B) y = Bᵀ b, with Bᵀ B invertible
    let gram = &bt * &basis;
    let coeffs = solve(&gram, &(&bt * b))?.expect("Gram matrix of independent columns is invertible");
    let para = &basis * &coeffs;
    let perp = b - &para;
    Ok((para, perp))
}

/// Symmetric `RᵀR` whose row space equals the row space of `b`, where the
/// rows of `R` are a rational basis of that row space.
pub fn symmetric_same_rowspace(b: &RationalMatrix) -> RationalMatrix {
    let r = b.row_space_basis();
    &r.transpose() * &r
}

pub use text::{emit_matrix_text, parse_matrix_text};

#[cfg(test)]
mod tests {
    use super::*;

    fn m(rows: &[&[i64]]) -> RationalMatrix {
        RationalMatrix::from_i64_rows(&rows.iter().map(|r| r.to_vec()).collect::<Vec<_>>())
    }

    fn q(n: i64, d: i64) -> Rational {
        Rational::new(BigInt::from(n), BigInt::from(d))
    }

    #[test]
    fn rank_examples() {
        assert_eq!(RationalMatrix::zeros(3, 4).rank(), 0);
        assert_eq!(RationalMatrix::identity(5).rank(), 5);
        assert_eq!(m(&[&[1, 1, 1, 1], &[1, 1, 1, 1], &[1, 1, 1, 1]]).rank(), 1);
        assert_eq!(m(&[&[1, 2], &[2, 4], &[0, 1]]).rank(), 2);
        let halves = RationalMatrix::from_fn(2, 2, |i, j| q((i + j) as i64 + 1, 2));
        assert_eq!(halves.rank(), 2);
    }

    #[test]
    fn nullity_examples() {
        assert_eq!(RationalMatrix::identity(4).nullity(), Ok(0));
        assert_eq!(RationalMatrix::zeros(3, 3).nullity(), Ok(3));
        assert_eq!(m(&[&[1; 4], &[1; 4], &[1; 4], &[1; 4]]).nullity(), Ok(3));
        assert!(RationalMatrix::zeros(2, 3).nullity().is_err());
    }

    #[test]
    fn solve_examples() {
        let b = m(&[&[3, -1], &[2, 7]]);
        assert_eq!(solve(&RationalMatrix::identity(2), &b).unwrap(), Some(b));
        assert_eq!(solve(&m(&[&[1, 1], &[1, 1]]), &m(&[&[1], &[2]])).unwrap(), None);
        assert_eq!(solve(&m(&[&[2, 0], &[0, 3]]), &m(&[&[4], &[9]])).unwrap(), Some(m(&[&[2], &[3]])));
        assert!(solve(&RationalMatrix::identity(2), &RationalMatrix::zeros(3, 1)).is_err());
    }

    #[test]
    fn projection_examples() {
        let b = m(&[&[1, 2], &[3, 4]]);
        assert_eq!(
            projection_split(&RationalMatrix::identity(2), &b).unwrap(),
            (b.clone(), RationalMatrix::zeros(2, 2))
        );
        assert_eq!(projection_split(&RationalMatrix::zeros(2, 3), &b).unwrap(), (RationalMatrix::zeros(2, 2), b));
        let (para, perp) = projection_split(&m(&[&[1], &[1]]), &m(&[&[1], &[0]])).unwrap();
        assert_eq!(para, RationalMatrix::from_fn(2, 1, |_, _| q(1, 2)));
        assert_eq!(perp, RationalMatrix::from_fn(2, 1, |i, _| q(if i == 0 { 1 } else { -1 }, 2)));
    }

    #[test]
    fn same_rowspace_examples() {
        assert!(symmetric_same_rowspace(&RationalMatrix::zeros(2, 3)).is_zero());
        let s = symmetric_same_rowspace(&RationalMatrix::identity(3));
        assert_eq!(s.rank(), 3);
        let s = symmetric_same_rowspace(&m(&[&[1, 1, 0], &[2, 2, 0]]));
        // basis row (1,1,0) gives the outer product
        assert_eq!(s, m(&[&[1, 1, 0], &[1, 1, 0], &[0, 0, 0]]));
    }

    #[test]
    fn determinant_matches_rank() {
        let a = m(&[&[2, 1, 0], &[1, 2, 1], &[0, 1, 2]]);
        assert_eq!(a.determinant().unwrap(), rat(4));
        assert_eq!(m(&[&[1, 2], &[2, 4]]).determinant().unwrap(), rat(0));
    }
}
