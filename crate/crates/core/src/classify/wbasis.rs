//! The basis `w_i = (X - θ_d)(X - θ_{d-1})...(X - θ_{d-i+1}) v_0` of
//! `E_d(a,b,c)`. In it `X` is lower bidiagonal with diagonal
//! `θ_d, ..., θ_0` and `Y` is upper bidiagonal with superdiagonal `phi`.

use num_traits::{One, Zero};

use crate::bimodule::{build_e, EvenParams, SequenceTable};
use crate::linalg::Matrix;
use crate::Error;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WBasis {
    /// Columns are the `w_i` in the standard basis.
    pub change: Matrix,
    pub x: Matrix,
    pub y: Matrix,
}

pub fn w_basis_matrices(p: &EvenParams) -> Result<WBasis, Error> {
    let d = p.d() as i64;
    let n = p.dim();
    let seq = SequenceTable::even(p);
    let m = build_e(p);
    let mut cols = Vec::with_capacity(n);
    let mut w = vec![num_traits::zero(); n];
    w[0] = num_traits::one();
    for i in 0..n as i64 {
        if i > 0 {
            w = m.x().shift(&seq.theta(d - i + 1)).apply(&w)?;
        }
        cols.push(w.clone());
    }
    let change = Matrix::from_columns(n, &cols)?;
    let inv = change.inverse()?;
    let x = &(&inv * m.x()) * &change;
    let y = &(&inv * m.y()) * &change;

    let expected_x = Matrix::from_fn(n, n, |r, c| {
        if r == c {
            seq.theta(d - r as i64)
        } else if r == c + 1 {
            One::one()
        } else {
            Zero::zero()
        }
    });
    let expected_y = Matrix::from_fn(n, n, |r, c| {
        if r == c {
            seq.theta_star(r as i64)
        } else if c == r + 1 {
            seq.phi(c as i64).expect("even family")
        } else {
            Zero::zero()
        }
    });
    if x != expected_x || y != expected_y {
        return Err(Error::Internal("w-basis matrices lack the bidiagonal shape".into()));
    }
    Ok(WBasis { change, x, y })
}
