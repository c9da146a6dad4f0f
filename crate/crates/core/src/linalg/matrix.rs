//! Dense row-major matrices over the rationals.

use std::fmt;
use std::ops::{Add, Index, IndexMut, Mul, Neg, Sub};

use num_traits::{One, Zero};

use super::poly::Polynomial;
use super::rational::Rational;
use super::LinalgError;

/// Column vector.
pub type Vector = Vec<Rational>;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<Rational>,
}

/// Output of [`Matrix::rref`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Rref {
    pub matrix: Matrix,
    pub pivots: Vec<usize>,
}

impl Rref {
    pub fn rank(&self) -> usize {
        self.pivots.len()
    }
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            data: vec![Rational::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        Self::scalar(n, Rational::one())
    }

    pub fn scalar(n: usize, s: Rational) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = s.clone();
        }
        m
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> Rational) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for r in 0..rows {
            for c in 0..cols {
                data.push(f(r, c));
            }
        }
        Self { rows, cols, data }
    }

    /// Errors if the rows are ragged.
    pub fn from_rows(rows: Vec<Vec<Rational>>) -> Result<Self, LinalgError> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if let Some(bad) = rows.iter().find(|row| row.len() != c) {
            return Err(LinalgError::DimensionMismatch {
                expected: c,
                found: bad.len(),
            });
        }
        Ok(Self {
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        })
    }

    /// Matrix whose columns are the given vectors (all of length `len`).
    pub fn from_columns(len: usize, cols: &[Vector]) -> Result<Self, LinalgError> {
        if let Some(bad) = cols.iter().find(|v| v.len() != len) {
            return Err(LinalgError::DimensionMismatch {
                expected: len,
                found: bad.len(),
            });
        }
        Ok(Self::from_fn(len, cols.len(), |r, c| cols[c][r].clone()))
    }

    pub fn from_rows_i64(rows: &[&[i64]]) -> Self {
        Self::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&x| Rational::from_integer(x.into())).collect())
                .collect(),
        )
        .expect("rectangular literal")
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

    pub(crate) fn require_square(&self) -> Result<(), LinalgError> {
        if self.is_square() {
            Ok(())
        } else {
            Err(LinalgError::NotSquare {
                rows: self.rows,
                cols: self.cols,
            })
        }
    }

    pub fn entries(&self) -> &[Rational] {
        &self.data
    }

    pub fn row(&self, r: usize) -> &[Rational] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn column(&self, c: usize) -> Vector {
        (0..self.rows).map(|r| self[(r, c)].clone()).collect()
    }

    pub fn to_rows(&self) -> Vec<Vec<Rational>> {
        (0..self.rows).map(|r| self.row(r).to_vec()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Zero::is_zero)
    }

    /// `Some(s)` if the matrix is `s·I`.
    pub fn as_scalar(&self) -> Option<Rational> {
        if !self.is_square() {
            return None;
        }
        let s = if self.rows == 0 {
            Rational::zero()
        } else {
            self[(0, 0)].clone()
        };
        let ok = (0..self.rows).all(|r| {
            (0..self.cols).all(|c| {
                let x = &self[(r, c)];
                if r == c {
                    *x == s
                } else {
                    x.is_zero()
                }
            })
        });
        ok.then_some(s)
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |r, c| self[(c, r)].clone())
    }

    pub fn scale(&self, s: &Rational) -> Self {
        Self {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|x| x * s).collect(),
        }
    }

    pub fn trace(&self) -> Rational {
        (0..self.rows.min(self.cols)).map(|i| self[(i, i)].clone()).sum()
    }

    /// `self - s·I`
    pub fn shift(&self, s: &Rational) -> Self {
        let mut m = self.clone();
        for i in 0..self.rows.min(self.cols) {
            m[(i, i)] -= s;
        }
        m
    }

    pub fn try_mul(&self, rhs: &Self) -> Result<Self, LinalgError> {
        if self.cols != rhs.rows {
            return Err(LinalgError::DimensionMismatch {
                expected: self.cols,
                found: rhs.rows,
            });
        }
        let mut out = Self::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let b = &rhs[(k, j)];
                    if !b.is_zero() {
                        out[(i, j)] += a * b;
                    }
                }
            }
        }
        Ok(out)
    }

    pub fn try_add(&self, rhs: &Self) -> Result<Self, LinalgError> {
        self.same_shape(rhs)?;
        Ok(Self {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&rhs.data).map(|(a, b)| a + b).collect(),
        })
    }

    pub fn try_sub(&self, rhs: &Self) -> Result<Self, LinalgError> {
        self.same_shape(rhs)?;
        Ok(Self {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&rhs.data).map(|(a, b)| a - b).collect(),
        })
    }

    fn same_shape(&self, rhs: &Self) -> Result<(), LinalgError> {
        if self.rows != rhs.rows || self.cols != rhs.cols {
            return Err(LinalgError::DimensionMismatch {
                expected: self.rows * self.cols,
                found: rhs.rows * rhs.cols,
            });
        }
        Ok(())
    }

    pub fn apply(&self, v: &[Rational]) -> Result<Vector, LinalgError> {
        if v.len() != self.cols {
            return Err(LinalgError::DimensionMismatch {
                expected: self.cols,
                found: v.len(),
            });
        }
        Ok((0..self.rows)
            .map(|r| {
                self.row(r)
                    .iter()
                    .zip(v)
                    .filter(|(a, b)| !a.is_zero() && !b.is_zero())
                    .map(|(a, b)| a * b)
                    .sum()
            })
            .collect())
    }

    pub fn pow(&self, k: u32) -> Result<Self, LinalgError> {
        self.require_square()?;
        let mut acc = Self::identity(self.rows);
        for _ in 0..k {
            acc = &acc * self;
        }
        Ok(acc)
    }

    /// Reduced row echelon form.
    ///
    /// Pivoting is deterministic: columns left to right, and within a
    /// column the topmost row with a nonzero entry.
    pub fn rref(&self) -> Rref {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut pr = 0;
        for pc in 0..m.cols {
            if pr == m.rows {
                break;
            }
            let Some(r) = (pr..m.rows).find(|&r| !m[(r, pc)].is_zero()) else {
                continue;
            };
            m.swap_rows(pr, r);
            let inv = m[(pr, pc)].recip();
            for c in pc..m.cols {
                let x = &m[(pr, c)] * &inv;
                m[(pr, c)] = x;
            }
            for r in 0..m.rows {
                if r == pr || m[(r, pc)].is_zero() {
                    continue;
                }
                let f = m[(r, pc)].clone();
                for c in pc..m.cols {
                    let delta = &f * &m[(pr, c)];
                    m[(r, c)] -= delta;
                }
            }
            pivots.push(pc);
            pr += 1;
        }
        Rref { matrix: m, pivots }
    }

    pub fn rank(&self) -> usize {
        self.rref().rank()
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for c in 0..self.cols {
            self.data.swap(a * self.cols + c, b * self.cols + c);
        }
    }

    /// Basis of the right null space, one vector per free column; each has
    /// a 1 in its free column.
    pub fn kernel_basis(&self) -> Vec<Vector> {
        let Rref { matrix: r, pivots } = self.rref();
        let mut is_pivot = vec![false; self.cols];
        for &p in &pivots {
            is_pivot[p] = true;
        }
        (0..self.cols)
            .filter(|&c| !is_pivot[c])
            .map(|free| {
                let mut v = vec![Rational::zero(); self.cols];
                v[free] = Rational::one();
                for (row, &p) in pivots.iter().enumerate() {
                    v[p] = -r[(row, free)].clone();
                }
                v
            })
            .collect()
    }

    pub fn determinant(&self) -> Result<Rational, LinalgError> {
        self.require_square()?;
        let mut m = self.clone();
        let n = m.rows;
        let mut det = Rational::one();
        for c in 0..n {
            let Some(r) = (c..n).find(|&r| !m[(r, c)].is_zero()) else {
                return Ok(Rational::zero());
            };
            if r != c {
                m.swap_rows(r, c);
                det = -det;
            }
            let p = m[(c, c)].clone();
            det *= &p;
            for r in c + 1..n {
                if m[(r, c)].is_zero() {
                    continue;
                }
                let f = &m[(r, c)] / &p;
                for k in c..n {
                    let delta = &f * &m[(c, k)];
                    m[(r, k)] -= delta;
                }
            }
        }
        Ok(det)
    }

    pub fn is_invertible(&self) -> bool {
        self.is_square() && self.rank() == self.rows
    }

    pub fn inverse(&self) -> Result<Self, LinalgError> {
        self.require_square()?;
        let n = self.rows;
        let aug = Self::from_fn(n, 2 * n, |r, c| {
            if c < n {
                self[(r, c)].clone()
            } else if c - n == r {
                Rational::one()
            } else {
                Rational::zero()
            }
        });
        let Rref { matrix, pivots } = aug.rref();
        if pivots.len() < n || pivots[n - 1] >= n {
            return Err(LinalgError::Singular);
        }
        Ok(Self::from_fn(n, n, |r, c| matrix[(r, c + n)].clone()))
    }

    /// Monic characteristic polynomial `det(xI - M)` by the
    /// Faddeev–LeVerrier recursion.
    pub fn char_poly(&self) -> Result<Polynomial, LinalgError> {
        self.require_square()?;
        let n = self.rows;
        let mut coeffs = vec![Rational::zero(); n + 1];
        coeffs[n] = Rational::one();
        let mut aux = Self::zeros(n, n);
        for k in 1..=n {
            aux = &(self * &aux) + &Self::scalar(n, coeffs[n - k + 1].clone());
            let am = self * &aux;
            coeffs[n - k] = -am.trace() / Rational::from_integer(k.into());
        }
        Ok(Polynomial::new(coeffs))
    }

    /// Monic minimal polynomial: the lcm over the standard basis vectors of
    /// each vector's Krylov annihilator.
    pub fn min_poly(&self) -> Result<Polynomial, LinalgError> {
        self.require_square()?;
        let n = self.rows;
        let mut acc = Polynomial::one();
        for i in 0..n {
            let mut e = vec![Rational::zero(); n];
            e[i] = Rational::one();
            if acc.eval_matrix(self)?.apply(&e)?.iter().all(Zero::is_zero) {
                continue;
            }
            acc = acc.lcm(&self.krylov_annihilator(&e)?);
        }
        Ok(acc)
    }

    /// Monic polynomial of least degree with `p(M)v = 0`.
    pub fn krylov_annihilator(&self, v: &[Rational]) -> Result<Polynomial, LinalgError> {
        self.require_square()?;
        let n = self.rows;
        let mut seq: Vec<Vector> = vec![v.to_vec()];
        loop {
            let m = Self::from_columns(n, &seq)?;
            let kernel = m.kernel_basis();
            if let Some(k) = kernel.first() {
                // The first dependency involves the newest vector, so the
                // single kernel vector has a nonzero last entry.
                return Ok(Polynomial::new(k.clone()).monic());
            }
            let next = self.apply(seq.last().expect("nonempty"))?;
            seq.push(next);
        }
    }
}

impl Index<(usize, usize)> for Matrix {
    type Output = Rational;
    fn index(&self, (r, c): (usize, usize)) -> &Rational {
        assert!(r < self.rows && c < self.cols, "index ({r},{c}) out of range");
        &self.data[r * self.cols + c]
    }
}

impl IndexMut<(usize, usize)> for Matrix {
    fn index_mut(&mut self, (r, c): (usize, usize)) -> &mut Rational {
        assert!(r < self.rows && c < self.cols, "index ({r},{c}) out of range");
        &mut self.data[r * self.cols + c]
    }
}

// Operator impls panic on shape mismatch; the `try_*` forms return errors.

impl Mul for &Matrix {
    type Output = Matrix;
    fn mul(self, rhs: &Matrix) -> Matrix {
        self.try_mul(rhs).expect("matrix product shape mismatch")
    }
}

impl Add for &Matrix {
    type Output = Matrix;
    fn add(self, rhs: &Matrix) -> Matrix {
        self.try_add(rhs).expect("matrix sum shape mismatch")
    }
}

impl Sub for &Matrix {
    type Output = Matrix;
    fn sub(self, rhs: &Matrix) -> Matrix {
        self.try_sub(rhs).expect("matrix difference shape mismatch")
    }
}

impl Neg for &Matrix {
    type Output = Matrix;
    fn neg(self) -> Matrix {
        self.scale(&-Rational::one())
    }
}

impl fmt::Display for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for r in 0..self.rows {
            let row: Vec<String> = self.row(r).iter().map(ToString::to_string).collect();
            writeln!(f, "[{}]", row.join(", "))?;
        }
        Ok(())
    }
}

/// `AB + BA`
pub fn anticommutator(a: &Matrix, b: &Matrix) -> Result<Matrix, LinalgError> {
    a.require_square()?;
    b.require_square()?;
    if a.rows() != b.rows() {
        return Err(LinalgError::DimensionMismatch {
            expected: a.rows(),
            found: b.rows(),
        });
    }
    Ok(&(a * b) + &(b * a))
}

/// `AB - BA`
pub fn commutator(a: &Matrix, b: &Matrix) -> Result<Matrix, LinalgError> {
    a.try_mul(b)?.try_sub(&b.try_mul(a)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::rational::{int, rat};

    #[test]
    fn rref_examples() {
        let z = Matrix::zeros(3, 2);
        let r = z.rref();
        assert!(r.matrix.is_zero());
        assert_eq!(r.rank(), 0);

        let id = Matrix::identity(4);
        let r = id.rref();
        assert_eq!(r.matrix, id);
        assert_eq!(r.rank(), 4);

        let m = Matrix::from_rows_i64(&[&[1, 2], &[2, 4]]);
        let r = m.rref();
        assert_eq!(r.matrix, Matrix::from_rows_i64(&[&[1, 2], &[0, 0]]));
        assert_eq!(r.rank(), 1);
        assert_eq!(r.pivots, vec![0]);
    }

    #[test]
    fn anticommutator_identity() {
        let i = Matrix::identity(2);
        assert_eq!(anticommutator(&i, &i).unwrap(), Matrix::scalar(2, int(2)));
        assert!(anticommutator(&i, &Matrix::identity(3)).is_err());
        assert!(anticommutator(&Matrix::zeros(2, 3), &i).is_err());
    }

    #[test]
    fn kernel_of_identity_is_empty() {
        assert!(Matrix::identity(3).kernel_basis().is_empty());
        let k = Matrix::zeros(2, 3).kernel_basis();
        assert_eq!(k.len(), 3);
    }

    #[test]
    fn char_poly_identity() {
        let p = Matrix::identity(2).char_poly().unwrap();
        assert_eq!(p, Polynomial::from_roots(&[int(1), int(1)]));
        assert!(Matrix::zeros(2, 3).char_poly().is_err());
        assert!(Matrix::zeros(2, 3).min_poly().is_err());
    }

    #[test]
    fn min_poly_identity() {
        let p = Matrix::identity(3).min_poly().unwrap();
        assert_eq!(p, Polynomial::linear(&int(1)));
        assert_eq!(Matrix::zeros(0, 0).min_poly().unwrap(), Polynomial::one());
    }

    #[test]
    fn jordan_block_min_poly() {
        let j = Matrix::from_rows(vec![
            vec![rat(1, 2), int(1), int(0)],
            vec![int(0), rat(1, 2), int(0)],
            vec![int(0), int(0), rat(1, 2)],
        ])
        .unwrap();
        assert_eq!(j.min_poly().unwrap(), Polynomial::from_roots(&[rat(1, 2), rat(1, 2)]));
    }

    #[test]
    fn determinant_and_inverse() {
        let m = Matrix::from_rows_i64(&[&[2, 1], &[1, 1]]);
        assert_eq!(m.determinant().unwrap(), int(1));
        let inv = m.inverse().unwrap();
        assert_eq!(&m * &inv, Matrix::identity(2));
        let s = Matrix::from_rows_i64(&[&[1, 2], &[2, 4]]);
        assert_eq!(s.determinant().unwrap(), int(0));
        assert!(matches!(s.inverse(), Err(LinalgError::Singular)));
    }

    #[test]
    fn scalar_detection() {
        assert_eq!(Matrix::scalar(3, rat(1, 2)).as_scalar(), Some(rat(1, 2)));
        assert_eq!(Matrix::from_rows_i64(&[&[1, 1], &[0, 1]]).as_scalar(), None);
    }
}
