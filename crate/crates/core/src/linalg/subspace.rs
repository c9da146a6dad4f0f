//! Subspaces held in reduced echelon form, and the spin (closure) algorithm.

use num_traits::{One, Zero};

use super::matrix::{Matrix, Vector};
use super::rational::Rational;
use super::LinalgError;

/// A subspace of `Q^ambient`, stored as a reduced echelon basis: the basis
/// vectors have distinct pivot coordinates, each pivot entry is 1, and every
/// other basis vector is zero at that coordinate.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Subspace {
    ambient: usize,
    basis: Vec<Vector>,
    pivots: Vec<usize>,
}

impl Subspace {
    pub fn zero(ambient: usize) -> Self {
        Self {
            ambient,
            basis: Vec::new(),
            pivots: Vec::new(),
        }
    }

    pub fn full(ambient: usize) -> Self {
        let mut s = Self::zero(ambient);
        for i in 0..ambient {
            let mut e = vec![Rational::zero(); ambient];
            e[i] = Rational::one();
            s.insert(e);
        }
        s
    }

    pub fn span(ambient: usize, vectors: &[Vector]) -> Result<Self, LinalgError> {
        let mut s = Self::zero(ambient);
        for v in vectors {
            check_len(ambient, v)?;
            s.insert(v.clone());
        }
        Ok(s)
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[Vector] {
        &self.basis
    }

    pub fn is_proper_nonzero(&self) -> bool {
        self.dim() > 0 && self.dim() < self.ambient
    }

    /// Residue of `v` after eliminating the basis pivots.
    fn reduce(&self, mut v: Vector) -> Vector {
        for (b, &p) in self.basis.iter().zip(&self.pivots) {
            if v[p].is_zero() {
                continue;
            }
            let f = v[p].clone();
            for (x, y) in v.iter_mut().zip(b) {
                if !y.is_zero() {
                    *x -= &f * y;
                }
            }
        }
        v
    }

    pub fn contains(&self, v: &[Rational]) -> bool {
        v.len() == self.ambient && self.reduce(v.to_vec()).iter().all(Zero::is_zero)
    }

    /// Adds `v` to the span. Returns false if it was already inside.
    pub fn insert(&mut self, v: Vector) -> bool {
        let mut r = self.reduce(v);
        let Some(p) = r.iter().position(|x| !x.is_zero()) else {
            return false;
        };
        let inv = r[p].recip();
        for x in &mut r {
            *x *= &inv;
        }
        for b in &mut self.basis {
            if b[p].is_zero() {
                continue;
            }
            let f = b[p].clone();
            for (x, y) in b.iter_mut().zip(&r) {
                if !y.is_zero() {
                    *x -= &f * y;
                }
            }
        }
        let at = self.pivots.partition_point(|&q| q < p);
        self.pivots.insert(at, p);
        self.basis.insert(at, r);
        true
    }

    /// True if every operator maps the subspace into itself.
    pub fn is_invariant_under(&self, operators: &[&Matrix]) -> bool {
        operators
            .iter()
            .all(|op| self.basis.iter().all(|b| op.apply(b).is_ok_and(|w| self.contains(&w))))
    }

    /// Basis of the annihilator `{w : w·v = 0 for all v in self}`.
    pub fn annihilator(&self) -> Subspace {
        if self.basis.is_empty() {
            return Subspace::full(self.ambient);
        }
        let rows = Matrix::from_rows(self.basis.clone()).expect("uniform lengths");
        Subspace::span(self.ambient, &rows.kernel_basis()).expect("kernel vectors have ambient length")
    }
}

fn check_len(ambient: usize, v: &[Rational]) -> Result<(), LinalgError> {
    if v.len() != ambient {
        return Err(LinalgError::DimensionMismatch {
            expected: ambient,
            found: v.len(),
        });
    }
    Ok(())
}

/// Smallest subspace containing `seeds` and invariant under every operator.
///
/// Every new basis vector is pushed through each operator until no image
/// escapes the current span.
pub fn spin(seeds: &[Vector], operators: &[&Matrix]) -> Result<Subspace, LinalgError> {
    let n = match (operators.first(), seeds.first()) {
        (Some(op), _) => op.rows(),
        (None, Some(s)) => s.len(),
        (None, None) => 0,
    };
    for op in operators {
        op.require_square()?;
        if op.rows() != n {
            return Err(LinalgError::DimensionMismatch {
                expected: n,
                found: op.rows(),
            });
        }
    }
    let mut space = Subspace::zero(n);
    let mut queue: Vec<Vector> = Vec::new();
    for s in seeds {
        check_len(n, s)?;
        if space.insert(s.clone()) {
            queue.push(s.clone());
        }
    }
    while let Some(v) = queue.pop() {
        if space.dim() == n {
            break;
        }
        for op in operators {
            let w = op.apply(&v)?;
            if space.insert(w.clone()) {
                queue.push(w);
            }
        }
    }
    Ok(space)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::rational::{int, rat};

    fn e(n: usize, i: usize) -> Vector {
        let mut v = vec![Rational::zero(); n];
        v[i] = Rational::one();
        v
    }

    #[test]
    fn spin_identity_is_seed_span() {
        let id = Matrix::identity(3);
        let s = spin(&[e(3, 0)], &[&id]).unwrap();
        assert_eq!(s.dim(), 1);
        assert!(s.contains(&e(3, 0)));
    }

    #[test]
    fn spin_shift_fills_space() {
        let shift = Matrix::from_fn(4, 4, |r, c| if r == c + 1 { int(1) } else { int(0) });
        assert_eq!(spin(&[e(4, 0)], &[&shift]).unwrap().dim(), 4);
        assert_eq!(spin(&[e(4, 2)], &[&shift]).unwrap().dim(), 2);
    }

    #[test]
    fn spin_rejects_bad_shapes() {
        let id = Matrix::identity(3);
        assert!(spin(&[e(2, 0)], &[&id]).is_err());
        assert!(spin(&[e(3, 0)], &[&id, &Matrix::identity(2)]).is_err());
        assert!(spin(&[e(2, 0)], &[&Matrix::zeros(2, 3)]).is_err());
    }

    #[test]
    fn echelon_insert_and_contains() {
        let mut s = Subspace::zero(3);
        assert!(s.insert(vec![int(1), int(2), int(3)]));
        assert!(!s.insert(vec![int(2), int(4), int(6)]));
        assert!(s.insert(vec![int(0), int(1), rat(1, 2)]));
        assert!(s.contains(&[int(1), int(3), rat(7, 2)]));
        assert!(!s.contains(&[int(0), int(0), int(1)]));
        let ann = s.annihilator();
        assert_eq!(ann.dim(), 1);
        let w = &ann.basis()[0];
        for b in s.basis() {
            let dot: Rational = b.iter().zip(w).map(|(x, y)| x * y).sum();
            assert!(dot.is_zero());
        }
    }
}
