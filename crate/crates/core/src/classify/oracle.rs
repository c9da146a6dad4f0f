//! Irreducibility decided directly from the matrices, independent of any
//! parameter formula.
//!
//! Stage one spins eigenvectors of `Y` under `{X, Y}`; when every
//! eigenspace of `Y` is a line this alone is complete. Otherwise a bounded
//! search over short words in `X - θ` and `Y - θ*` looks for an element with
//! a one-dimensional kernel, to which the Norton test applies.

use std::fmt;

use num_traits::Zero;

use crate::bimodule::BIModule;
use crate::linalg::{int, spin, Matrix, Rational, Subspace, Vector};
use crate::Error;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum IrrStatus {
    Irreducible,
    Reducible,
    Indeterminate,
}

impl IrrStatus {
    pub fn as_str(self) -> &'static str {
        match self {
            IrrStatus::Irreducible => "irreducible",
            IrrStatus::Reducible => "reducible",
            IrrStatus::Indeterminate => "indeterminate",
        }
    }
}

impl fmt::Display for IrrStatus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum IrrMethod {
    /// Spinning eigenvectors of `Y`.
    EigenSpin,
    /// Norton test on an element with a one-dimensional kernel.
    Norton,
    /// Nothing conclusive within the search budget.
    Exhausted,
}

impl IrrMethod {
    pub fn as_str(self) -> &'static str {
        match self {
            IrrMethod::EigenSpin => "eigen-spin",
            IrrMethod::Norton => "norton",
            IrrMethod::Exhausted => "exhausted",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IrrVerdict {
    pub status: IrrStatus,
    /// Proper nonzero invariant subspace, present iff `Reducible`.
    pub witness: Option<Subspace>,
    pub method: IrrMethod,
}

impl IrrVerdict {
    fn irreducible(method: IrrMethod) -> Self {
        Self {
            status: IrrStatus::Irreducible,
            witness: None,
            method,
        }
    }

    fn reducible(witness: Subspace, method: IrrMethod) -> Self {
        Self {
            status: IrrStatus::Reducible,
            witness: Some(witness),
            method,
        }
    }
}

/// Search budget for the word stage.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OracleConfig {
    /// Coefficients `t` tried in `(Y - θ*) + t (X - θ)`.
    pub mix: Vec<i64>,
    /// Longest product of shifted generators tried.
    pub max_word_len: usize,
}

impl Default for OracleConfig {
    fn default() -> Self {
        Self {
            mix: vec![1, -1, 2, -2],
            max_word_len: 3,
        }
    }
}

pub fn oracle_irreducible(module: &BIModule) -> Result<IrrVerdict, Error> {
    oracle_irreducible_with(module, &OracleConfig::default())
}

pub fn oracle_irreducible_with(module: &BIModule, config: &OracleConfig) -> Result<IrrVerdict, Error> {
    let n = module.dim();
    if n <= 1 {
        return Ok(IrrVerdict::irreducible(IrrMethod::EigenSpin));
    }
    let (x, y) = (module.x(), module.y());
    let (xt, yt) = (x.transpose(), y.transpose());
    let ops = [x, y];
    let ops_t = [&xt, &yt];

    let y_spec = y.char_poly()?.rational_roots()?;
    if !y_spec.split {
        return Err(Error::NonSplitSpectrum("Y"));
    }
    let y_eigs = y_spec.distinct();

    let mut lines_only = true;
    for t in &y_eigs {
        let kernel = y.shift(t).kernel_basis();
        lines_only &= kernel.len() == 1;
        if let Some(w) = first_proper_spin(&kernel, &ops)? {
            return finish_reducible(w, &ops, IrrMethod::EigenSpin);
        }
    }
    // A nonzero invariant subspace contains an eigenvector of Y; if every
    // eigenspace is a line, each of them has already been spun.
    if lines_only {
        return Ok(IrrVerdict::irreducible(IrrMethod::EigenSpin));
    }

    let x_eigs = x.char_poly()?.rational_roots()?.distinct();
    for a in candidate_elements(x, y, &x_eigs, &y_eigs, config) {
        let kernel = a.kernel_basis();
        if kernel.is_empty() {
            continue;
        }
        if let Some(w) = first_proper_spin(&kernel, &ops)? {
            return finish_reducible(w, &ops, IrrMethod::Norton);
        }
        if kernel.len() == 1 {
            let dual = a.transpose().kernel_basis();
            if let Some(w) = first_proper_spin(&dual, &ops_t)? {
                return finish_reducible(w.annihilator(), &ops, IrrMethod::Norton);
            }
            return Ok(IrrVerdict::irreducible(IrrMethod::Norton));
        }
    }
    Ok(IrrVerdict {
        status: IrrStatus::Indeterminate,
        witness: None,
        method: IrrMethod::Exhausted,
    })
}

fn first_proper_spin(seeds: &[Vector], ops: &[&Matrix]) -> Result<Option<Subspace>, Error> {
    for s in seeds {
        let w = spin(std::slice::from_ref(s), ops)?;
        if w.is_proper_nonzero() {
            return Ok(Some(w));
        }
    }
    Ok(None)
}

fn finish_reducible(w: Subspace, ops: &[&Matrix], method: IrrMethod) -> Result<IrrVerdict, Error> {
    if !(w.is_proper_nonzero() && w.is_invariant_under(ops)) {
        return Err(Error::Internal("reducibility witness failed verification".into()));
    }
    Ok(IrrVerdict::reducible(w, method))
}

/// Elements tried by the word stage, cheapest first. Produced lazily since
/// an early hit is the common case.
fn candidate_elements<'a>(
    x: &'a Matrix,
    y: &'a Matrix,
    x_eigs: &'a [Rational],
    y_eigs: &'a [Rational],
    config: &'a OracleConfig,
) -> impl Iterator<Item = Matrix> + 'a {
    let x_shifts: Vec<Rational> = if x_eigs.is_empty() {
        vec![Rational::zero()]
    } else {
        x_eigs.to_vec()
    };
    let mixed = y_eigs.iter().flat_map(move |t| {
        let ys = y.shift(t);
        let x_shifts = x_shifts.clone();
        x_shifts.into_iter().flat_map(move |s| {
            let xs = x.shift(&s);
            let ys = ys.clone();
            config.mix.iter().map(move |&m| &ys + &xs.scale(&int(m)))
        })
    });

    let factors: Vec<Matrix> = x_eigs
        .iter()
        .map(|t| x.shift(t))
        .chain(y_eigs.iter().map(|t| y.shift(t)))
        .collect();
    let words = (1..=config.max_word_len).flat_map(move |len| {
        let factors = factors.clone();
        let total = factors.len().pow(len as u32);
        (0..total).map(move |mut code| {
            let mut w = factors[code % factors.len()].clone();
            for _ in 1..len {
                code /= factors.len();
                w = &w * &factors[code % factors.len()];
            }
            w
        })
    });
    mixed.chain(words)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bimodule::{build_e, example_e, example_o, EvenParams};
    use crate::linalg::rat;

    #[test]
    fn examples_are_irreducible() {
        for m in [example_e(), example_o()] {
            let v = oracle_irreducible(&m).unwrap();
            assert_eq!(v.status, IrrStatus::Irreducible, "{}", m.label());
            assert!(v.witness.is_none());
        }
    }

    #[test]
    fn degenerate_two_dimensional_module() {
        let m = build_e(&EvenParams::new(1, int(0), int(0), int(0)).unwrap());
        let v = oracle_irreducible(&m).unwrap();
        assert_eq!(v.status, IrrStatus::Reducible);
        let w = v.witness.unwrap();
        assert_eq!(w.dim(), 1);
        assert!(w.contains(&[int(0), int(1)]));
    }

    #[test]
    fn reducible_triangular_pair() {
        let x = Matrix::from_rows(vec![vec![int(1), int(0)], vec![int(1), int(2)]]).unwrap();
        let y = Matrix::from_rows(vec![vec![int(3), int(0)], vec![int(0), int(5)]]).unwrap();
        let m = BIModule::new(x, y, rat(0, 1)).unwrap();
        let v = oracle_irreducible(&m).unwrap();
        assert_eq!(v.status, IrrStatus::Reducible);
        assert!(v.witness.unwrap().contains(&[int(0), int(1)]));
    }

    #[test]
    fn non_split_spectrum_is_reported() {
        let y = Matrix::from_rows(vec![vec![int(0), int(1)], vec![int(2), int(0)]]).unwrap();
        let m = BIModule::new(Matrix::identity(2), y, int(0)).unwrap();
        assert!(matches!(oracle_irreducible(&m), Err(Error::NonSplitSpectrum(_))));
    }
}
