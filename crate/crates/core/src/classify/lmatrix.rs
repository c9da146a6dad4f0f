//! The lower-triangular matrix `L` comparing the standard basis `v_j` of
//! `E_d(a,b,c)` with the images `R S_i v_j`, where
//!
//! ```text
//! R   = (Y - θ*_1)(Y - θ*_2)...(Y - θ*_d)
//! S_i = (X - θ_d)(X - θ_{d-1})...(X - θ_{i+1})
//! R S_i v_j = L_ij v_0
//! ```
//!
//! Three independent routes compute it; they must agree exactly.

use std::fmt;
use std::str::FromStr;

use num_traits::{One, Zero};

use crate::bimodule::{build_e, EvenParams, SequenceTable};
use crate::linalg::{Matrix, Rational};
use crate::Error;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum LMethod {
    /// Apply `R S_i` to each basis vector of the constructed module.
    Operator,
    /// First column in closed form, then `L_ij = (θ_i - θ_{j-1}) L_{i,j-1} + L_{i-1,j-1}`.
    Recurrence,
    /// Entry-wise product formula.
    ClosedForm,
}

impl LMethod {
    pub const ALL: [LMethod; 3] = [LMethod::Operator, LMethod::Recurrence, LMethod::ClosedForm];

    pub fn as_str(self) -> &'static str {
        match self {
            LMethod::Operator => "operator",
            LMethod::Recurrence => "recurrence",
            LMethod::ClosedForm => "closed",
        }
    }
}

impl fmt::Display for LMethod {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for LMethod {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "operator" => Ok(LMethod::Operator),
            "recurrence" => Ok(LMethod::Recurrence),
            "closed" | "closed-form" => Ok(LMethod::ClosedForm),
            other => Err(format!(
                "unknown method {other:?} (expected operator|recurrence|closed)"
            )),
        }
    }
}

pub fn l_matrix(p: &EvenParams, method: LMethod) -> Result<Matrix, Error> {
    match method {
        LMethod::Operator => by_operator(p),
        LMethod::Recurrence => Ok(by_recurrence(p)),
        LMethod::ClosedForm => Ok(by_closed_form(p)),
    }
}

fn prod(it: impl Iterator<Item = Rational>) -> Rational {
    it.fold(Rational::one(), |acc, x| acc * x)
}

fn by_operator(p: &EvenParams) -> Result<Matrix, Error> {
    let d = p.d() as i64;
    let n = p.dim();
    let seq = SequenceTable::even(p);
    let m = build_e(p);
    let mut r = Matrix::identity(n);
    for h in 1..=d {
        r = &r * &m.y().shift(&seq.theta_star(h));
    }
    let mut out = Matrix::zeros(n, n);
    for i in 0..=d {
        let mut op = r.clone();
        for h in 1..=d - i {
            op = &op * &m.x().shift(&seq.theta(d - h + 1));
        }
        for j in 0..n {
            // column j of `op` is R S_i v_j
            let col = op.column(j);
            if col[1..].iter().any(|x| !x.is_zero()) {
                return Err(Error::Internal(format!("R S_{i} v_{j} is not a multiple of v_0")));
            }
            out[(i as usize, j)] = col[0].clone();
        }
    }
    Ok(out)
}

/// `Π_{h=1}^{k} (θ*_0 - θ*_{d-h+1})`
fn star_gaps(seq: &SequenceTable, d: i64, k: i64) -> Rational {
    let t0 = seq.theta_star(0);
    prod((1..=k).map(|h| &t0 - seq.theta_star(d - h + 1)))
}

/// `Π_{h=1}^{k} phi_h`
fn phi_prefix(seq: &SequenceTable, k: i64) -> Rational {
    prod((1..=k).map(|h| seq.phi(h).expect("even family")))
}

fn by_recurrence(p: &EvenParams) -> Matrix {
    let d = p.d() as i64;
    let n = p.dim();
    let seq = SequenceTable::even(p);
    let mut l = Matrix::zeros(n, n);
    for i in 0..=d {
        l[(i as usize, 0)] = star_gaps(&seq, d, i) * phi_prefix(&seq, d - i);
    }
    for j in 1..=d {
        for i in j..=d {
            let (iu, ju) = (i as usize, j as usize);
            let v = (seq.theta(i) - seq.theta(j - 1)) * &l[(iu, ju - 1)] + &l[(iu - 1, ju - 1)];
            l[(iu, ju)] = v;
        }
    }
    l
}

fn by_closed_form(p: &EvenParams) -> Matrix {
    let d = p.d() as i64;
    let n = p.dim();
    let seq = SequenceTable::even(p);
    Matrix::from_fn(n, n, |iu, ju| {
        let (i, j) = (iu as i64, ju as i64);
        if j > i || (i % 2 == 0 && j % 2 == 1) {
            return Rational::zero();
        }
        let odd = prod((1..=(j + 1) / 2).map(|h| seq.varphi(2 * h - 1)));
        let even = prod((1..=j / 2).map(|h| seq.varphi(2 * (i / 2 - h + 1))));
        star_gaps(&seq, d, i - j) * phi_prefix(&seq, d - i) * odd * even
    })
}

/// `Π_{h=1}^{d-i} phi_h · Π_{h=1}^{i} varphi_h`
pub fn l_diagonal_entry(p: &EvenParams, i: usize) -> Rational {
    let d = p.d() as i64;
    let seq = SequenceTable::even(p);
    let i = i as i64;
    phi_prefix(&seq, d - i) * prod((1..=i).map(|h| seq.varphi(h)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::int;

    #[test]
    fn two_dimensional_example() {
        let p = EvenParams::new(1, int(1), int(1), int(1)).unwrap();
        let expected = Matrix::from_rows_i64(&[&[1, 0], &[2, -3]]);
        for m in LMethod::ALL {
            assert_eq!(l_matrix(&p, m).unwrap(), expected, "{m}");
        }
    }

    #[test]
    fn methods_agree_on_example_e() {
        let p = EvenParams::new(3, int(1), int(0), int(1)).unwrap();
        let op = l_matrix(&p, LMethod::Operator).unwrap();
        assert_eq!(op, l_matrix(&p, LMethod::Recurrence).unwrap());
        assert_eq!(op, l_matrix(&p, LMethod::ClosedForm).unwrap());
        for i in 0..4 {
            assert_eq!(op[(i, i)], l_diagonal_entry(&p, i));
        }
    }
}
