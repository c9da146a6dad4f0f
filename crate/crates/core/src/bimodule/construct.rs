//! Constructors for the two parameter families.
//!
//! Both families share the same shape: `X` is lower bidiagonal with
//! diagonal `θ_0..θ_d` and subdiagonal 1, `Y` is upper bidiagonal with
//! diagonal `θ*_0..θ*_d` and superdiagonal `varphi_1..varphi_d`.

use num_traits::{One, Zero};

use super::module::{BIModule, Origin};
use super::params::{EvenParams, Family, OddParams, TwistSign};
use super::sequences::SequenceTable;
use crate::linalg::{Matrix, Rational};

/// `X`/`Y` matrices of size `n` from a sequence table.
pub(crate) fn bidiagonal_pair(seq: &SequenceTable, n: usize) -> (Matrix, Matrix) {
    let x = Matrix::from_fn(n, n, |r, c| {
        if r == c {
            seq.theta(r as i64)
        } else if r == c + 1 {
            Rational::one()
        } else {
            Rational::zero()
        }
    });
    let y = Matrix::from_fn(n, n, |r, c| {
        if r == c {
            seq.theta_star(r as i64)
        } else if c == r + 1 {
            seq.varphi(c as i64)
        } else {
            Rational::zero()
        }
    });
    (x, y)
}

fn label(name: &str, d: usize, a: &Rational, b: &Rational, c: &Rational) -> String {
    format!("{name}_{d}({a},{b},{c})")
}

/// `E_d(a,b,c)` with `κ`, `λ`, `μ` stored.
pub fn build_e(p: &EvenParams) -> BIModule {
    let seq = SequenceTable::even(p);
    let (x, y) = bidiagonal_pair(&seq, p.dim());
    let (kappa, lambda, mu) = seq.central_scalars();
    BIModule::new(x, y, kappa)
        .expect("bidiagonal matrices are square")
        .with_central(Some(lambda), Some(mu))
        .with_label(label("E", p.d(), &p.a, &p.b, &p.c))
        .with_origin(Some(Origin {
            family: Family::Even,
            d: p.d(),
            a: p.a.clone(),
            b: p.b.clone(),
            c: p.c.clone(),
            twist: TwistSign::IDENTITY,
        }))
}

/// `O_d(a,b,c)` with `κ`, `λ`, `μ` stored.
pub fn build_o(p: &OddParams) -> BIModule {
    let seq = SequenceTable::odd(p);
    let (x, y) = bidiagonal_pair(&seq, p.dim());
    let (kappa, lambda, mu) = seq.central_scalars();
    BIModule::new(x, y, kappa)
        .expect("bidiagonal matrices are square")
        .with_central(Some(lambda), Some(mu))
        .with_label(label("O", p.d(), &p.a, &p.b, &p.c))
        .with_origin(Some(Origin {
            family: Family::Odd,
            d: p.d(),
            a: p.a.clone(),
            b: p.b.clone(),
            c: p.c.clone(),
            twist: TwistSign::IDENTITY,
        }))
}

/// Rebuilds the module an [`Origin`] describes, twist included.
pub fn build_origin(o: &Origin) -> Result<BIModule, crate::Error> {
    let m = match o.family {
        Family::Even => build_e(&EvenParams::new(o.d, o.a.clone(), o.b.clone(), o.c.clone())?),
        Family::Odd => build_o(&OddParams::new(o.d, o.a.clone(), o.b.clone(), o.c.clone())?),
    };
    Ok(m.twist(o.twist))
}
