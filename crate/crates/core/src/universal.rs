//! A finite window onto the infinite-dimensional Verma-type module
//! `M_δ(a,b,c)` and the homomorphisms its universal property produces.
//!
//! `M_δ(a,b,c)` has basis `m_0, m_1, ...` with `X` lower bidiagonal
//! (diagonal `θ_i`, subdiagonal 1) and `Y` upper bidiagonal (diagonal
//! `θ*_i`, superdiagonal `varphi_i`), and `κ, λ, μ` acting as `ω, ω*, ω⋄`.
//! Keeping the first `N` basis vectors drops the `m_N` component of
//! `X m_{N-1}`, so the defining relations are exact only on `m_0..m_{N-3}`.
//!
//! Given a module `V` and a vector `v` with
//!
//! ```text
//! Y v = θ*_0 v,   (Y - θ*_1)(X - θ_0) v = varphi_1 v,   κ, λ, μ = ω, ω*, ω⋄ on V
//! ```
//!
//! there is a unique homomorphism `M_δ → V` with `m_i ↦ Π_{h<i}(X - θ_h) v`.
//! When `δ = d` and `Π_{i=0}^{d}(X - θ_i) v = 0` it factors through the
//! quotient `M_d / span{m_{d+1}, ...} ≅ E_d(a,b,c)`.

use std::ops::Range;

use num_traits::{One, Zero};

use crate::bimodule::{bidiagonal_pair, build_e, BIModule, EvenParams, SequenceTable};
use crate::linalg::{anticommutator, int, Matrix, Rational, Subspace, Vector};
use crate::Error;

/// Default window length for a given `d`.
pub fn default_truncation(d: usize) -> usize {
    d + 5
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TruncatedVerma {
    seq: SequenceTable,
    a: Rational,
    b: Rational,
    c: Rational,
    len: usize,
    x: Matrix,
    y: Matrix,
    kappa: Rational,
    lambda: Rational,
    mu: Rational,
}

/// Per-relation residual matrices `{X,Y} - Z - κ`, `{Y,Z} - X - λ`,
/// `{Z,X} - Y - μ` on the window.
#[derive(Debug, Clone)]
pub struct VermaResiduals {
    pub kappa: Matrix,
    pub lambda: Matrix,
    pub mu: Matrix,
}

impl VermaResiduals {
    /// True if column `j` (the image of `m_j`) vanishes in all three.
    pub fn column_vanishes(&self, j: usize) -> bool {
        [&self.kappa, &self.lambda, &self.mu]
            .iter()
            .all(|m| m.column(j).iter().all(Zero::is_zero))
    }
}

impl TruncatedVerma {
    /// Window `m_0..m_{len-1}` of `M_δ(a,b,c)`; needs `len ≥ 2`.
    pub fn new(delta: Rational, a: Rational, b: Rational, c: Rational, len: usize) -> Result<Self, Error> {
        if len < 2 {
            return Err(Error::TruncationTooShort { needed: 2, got: len });
        }
        let seq = SequenceTable::with_delta(delta, a.clone(), b.clone(), c.clone());
        let (x, y) = bidiagonal_pair(&seq, len);
        let (kappa, lambda, mu) = seq.central_scalars();
        Ok(Self {
            seq,
            a,
            b,
            c,
            len,
            x,
            y,
            kappa,
            lambda,
            mu,
        })
    }

    /// `M_d(a,b,c)` for the parameters of `E_d(a,b,c)`.
    pub fn for_even(p: &EvenParams, len: usize) -> Result<Self, Error> {
        Self::new(int(p.d() as i64), p.a.clone(), p.b.clone(), p.c.clone(), len)
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn sequences(&self) -> &SequenceTable {
        &self.seq
    }

    pub fn params(&self) -> (&Rational, &Rational, &Rational) {
        (&self.a, &self.b, &self.c)
    }

    pub fn x(&self) -> &Matrix {
        &self.x
    }

    pub fn y(&self) -> &Matrix {
        &self.y
    }

    /// `(ω, ω*, ω⋄)`
    pub fn central_scalars(&self) -> (&Rational, &Rational, &Rational) {
        (&self.kappa, &self.lambda, &self.mu)
    }

    /// Basis indices on which the defining relations hold exactly; empty
    /// for windows shorter than three.
    pub fn exact_range(&self) -> Range<usize> {
        0..self.len.saturating_sub(2)
    }

    pub fn z(&self) -> Matrix {
        anticommutator(&self.x, &self.y).expect("square").shift(&self.kappa)
    }

    pub fn residuals(&self) -> VermaResiduals {
        let z = self.z();
        let xy = anticommutator(&self.x, &self.y).expect("square");
        let yz = anticommutator(&self.y, &z).expect("square");
        let zx = anticommutator(&z, &self.x).expect("square");
        VermaResiduals {
            kappa: (&xy - &z).shift(&self.kappa),
            lambda: (&yz - &self.x).shift(&self.lambda),
            mu: (&zx - &self.y).shift(&self.mu),
        }
    }

    /// True if every relation holds on every basis vector of
    /// [`exact_range`](Self::exact_range).
    pub fn interior_relations_hold(&self) -> bool {
        let r = self.residuals();
        self.exact_range().all(|j| r.column_vanishes(j))
    }

    pub fn basis_vector(&self, i: usize) -> Vector {
        let mut v = vec![Rational::zero(); self.len];
        v[i] = Rational::one();
        v
    }

    /// `Π_{h=i}^{j} (X - θ_h) m_i`, which equals `m_{j+1}`.
    /// Needs `i ≤ j ≤ len - 2`.
    pub fn ladder(&self, i: usize, j: usize) -> Result<Vector, Error> {
        if i > j || j + 2 > self.len {
            return Err(Error::IndexOutOfRange(format!(
                "ladder({i}, {j}) needs i <= j <= {}",
                self.len as i64 - 2
            )));
        }
        let mut v = self.basis_vector(i);
        for h in i..=j {
            v = self.x.shift(&self.seq.theta(h as i64)).apply(&v)?;
        }
        Ok(v)
    }
}

/// Which of the five universal-property premises a vector fails.
fn check_premises(seq: &SequenceTable, module: &BIModule, v: &[Rational]) -> Result<(), Error> {
    if v.len() != module.dim() {
        return Err(crate::linalg::LinalgError::DimensionMismatch {
            expected: module.dim(),
            found: v.len(),
        }
        .into());
    }
    let (x, y) = (module.x(), module.y());
    let yv = y.apply(v)?;
    let target: Vector = v.iter().map(|c| c * seq.theta_star(0)).collect();
    if yv != target {
        return Err(Error::PremiseViolated("Y v = theta*_0 v"));
    }
    let step = y.shift(&seq.theta_star(1)).apply(&x.shift(&seq.theta(0)).apply(v)?)?;
    let target: Vector = v.iter().map(|c| c * seq.varphi(1)).collect();
    if step != target {
        return Err(Error::PremiseViolated("(Y - theta*_1)(X - theta_0) v = varphi_1 v"));
    }
    let (omega, omega_star, omega_diamond) = seq.central_scalars();
    if module.kappa() != &omega {
        return Err(Error::PremiseViolated("kappa acts as omega"));
    }
    // λ and μ are read off the matrices, never from stored fields.
    let report = module.check_relations();
    if report.lambda.as_ref() != Some(&omega_star) {
        return Err(Error::PremiseViolated("lambda acts as omega*"));
    }
    if report.mu.as_ref() != Some(&omega_diamond) {
        return Err(Error::PremiseViolated("mu acts as omega-diamond"));
    }
    Ok(())
}

/// Images of `m_0..m_{len-1}` under the homomorphism `M_δ(a,b,c) → V`
/// sending `m_0` to `v`.
pub fn universal_map(
    delta: Rational,
    a: Rational,
    b: Rational,
    c: Rational,
    module: &BIModule,
    v: &[Rational],
    len: usize,
) -> Result<Vec<Vector>, Error> {
    let seq = SequenceTable::with_delta(delta, a, b, c);
    check_premises(&seq, module, v)?;
    Ok(ladder_images(&seq, module.x(), v, len)?)
}

fn ladder_images(
    seq: &SequenceTable,
    x: &Matrix,
    v: &[Rational],
    len: usize,
) -> Result<Vec<Vector>, crate::linalg::LinalgError> {
    let mut out = Vec::with_capacity(len);
    let mut cur = v.to_vec();
    for h in 0..len {
        let next = x.shift(&seq.theta(h as i64)).apply(&cur)?;
        out.push(std::mem::replace(&mut cur, next));
    }
    Ok(out)
}

/// The homomorphism `E_d(a,b,c) → V` sending `v_0` to `v`, as the
/// `dim V × (d+1)` matrix with columns `Π_{h<i}(X - θ_h) v`.
///
/// Both intertwining equations are verified before returning.
pub fn descend_to_e(params: &EvenParams, module: &BIModule, v: &[Rational]) -> Result<Matrix, Error> {
    let seq = SequenceTable::even(params);
    check_premises(&seq, module, v)?;
    let mut cols = ladder_images(&seq, module.x(), v, params.dim() + 1)?;
    let tail = cols.pop().expect("d + 2 images");
    if !tail.iter().all(Zero::is_zero) {
        return Err(Error::AnnihilatorFails);
    }
    let t = Matrix::from_columns(module.dim(), &cols)?;
    let e = build_e(params);
    if &t * e.x() != module.x() * &t || &t * e.y() != module.y() * &t {
        return Err(Error::Internal("descended map does not intertwine".to_string()));
    }
    Ok(t)
}

/// Outcome of checking `span{m_{d+1}, ...}` against the window and the
/// quotient against `E_d(a,b,c)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuotientReport {
    /// Tail span is invariant under `X` and `Y` within the window.
    pub tail_invariant: bool,
    /// `Y m_{d+1}` has no `m_d` component (`varphi_{d+1} = 0`).
    pub tail_decoupled: bool,
    /// Quotient matrices on `m_0..m_d` equal those of `E_d(a,b,c)`.
    pub quotient_matches: bool,
    /// Quotient `κ` equals that of `E_d(a,b,c)`.
    pub kappa_matches: bool,
    /// Relations hold on the exact range of the window.
    pub interior_relations: bool,
}

impl QuotientReport {
    pub fn passed(&self) -> bool {
        self.tail_invariant
            && self.tail_decoupled
            && self.quotient_matches
            && self.kappa_matches
            && self.interior_relations
    }
}

pub fn verma_quotient_check(params: &EvenParams, len: usize) -> Result<QuotientReport, Error> {
    let d = params.d();
    if len < d + 3 {
        return Err(Error::TruncationTooShort {
            needed: d + 3,
            got: len,
        });
    }
    let m = TruncatedVerma::for_even(params, len)?;
    let tail: Vec<Vector> = (d + 1..len).map(|i| m.basis_vector(i)).collect();
    let tail_space = Subspace::span(len, &tail)?;
    let tail_invariant = tail_space.is_invariant_under(&[m.x(), m.y()]);
    let tail_decoupled = m.y()[(d, d + 1)].is_zero();

    let e = build_e(params);
    let n = d + 1;
    let block = |mat: &Matrix| Matrix::from_fn(n, n, |r, c| mat[(r, c)].clone());
    let quotient_matches = block(m.x()) == *e.x() && block(m.y()) == *e.y();
    let kappa_matches = m.central_scalars().0 == e.kappa();

    Ok(QuotientReport {
        tail_invariant,
        tail_decoupled,
        quotient_matches,
        kappa_matches,
        interior_relations: m.interior_relations_hold(),
    })
}
