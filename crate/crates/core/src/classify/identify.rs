//! Recovering family coordinates from a module given only by matrices.
//!
//! Even dimension: `ε`, `ε'` come from the traces of `X` and `Y`, then the
//! untwisted central scalars give `a²`, `b²`, `c²` through
//! `κ + μ = (d+1)²/2 - 2a²` and its rotations. If that candidate does not
//! validate, the eigenvalues of `X` and `Y` are read as chains
//! `ϑ_i(α) = (-1)^i (α + i)` instead.
//!
//! Odd dimension: `a = tr X`, `b = tr Y`, `c = (2ab - κ)/(d+1)`.
//!
//! Every answer carries an invertible intertwiner from the rebuilt family
//! member to the input.

use std::fmt;

use num_traits::{Signed, Zero};

use super::iso::{are_isomorphic, IsoOutcome};
use super::oracle::{oracle_irreducible, IrrStatus};
use crate::bimodule::{build_e, build_o, BIModule, EvenParams, Family, OddParams, Sign, TwistSign};
use crate::linalg::{int, rat, rational_sqrt, Matrix, Rational};
use crate::Error;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum IdentifyMethod {
    CentralScalars,
    EigenvalueChain,
    Traces,
}

impl IdentifyMethod {
    pub fn as_str(self) -> &'static str {
        match self {
            IdentifyMethod::CentralScalars => "central-scalars",
            IdentifyMethod::EigenvalueChain => "eigenvalue-chain",
            IdentifyMethod::Traces => "traces",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClassCoordinates {
    pub family: Family,
    pub d: usize,
    /// Twist applied to `E_d(a,b,c)`; `None` for the odd family, whose twists
    /// are absorbed into the parameters.
    pub twist: Option<TwistSign>,
    /// `(a, b, c)`; for the even family the orbit representative
    /// `(|a|, |b|, |c|)`.
    pub params: (Rational, Rational, Rational),
    pub method: IdentifyMethod,
    /// Invertible `T` with `T X_F = X_V T`, `T Y_F = Y_V T`, where `F` is the
    /// rebuilt family member (twist included) and `V` the input.
    pub witness: Matrix,
}

impl fmt::Display for ClassCoordinates {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (a, b, c) = &self.params;
        match (self.family, self.twist) {
            (Family::Even, Some(t)) => write!(f, "E_{}({a},{b},{c})^{t}", self.d),
            _ => write!(f, "O_{}({a},{b},{c})", self.d),
        }
    }
}

/// `(|a|, |b|, |c|)`: sign changes of any parameter give isomorphic even
/// modules.
pub fn orbit_canonical(a: &Rational, b: &Rational, c: &Rational) -> (Rational, Rational, Rational) {
    (a.abs(), b.abs(), c.abs())
}

pub fn identify(module: &BIModule) -> Result<ClassCoordinates, Error> {
    let verdict = oracle_irreducible(module)?;
    match verdict.status {
        IrrStatus::Irreducible => {}
        IrrStatus::Reducible => return Err(Error::NotIrreducible),
        IrrStatus::Indeterminate => {
            return Err(Error::Indeterminate(
                "irreducibility oracle exhausted its budget".into(),
            ))
        }
    }
    module.central_scalars()?;
    let d = module.dim() - 1;
    match Family::of_dim(module.dim()) {
        Family::Even => identify_even(module, d),
        Family::Odd => identify_odd(module, d),
    }
}

fn half_dim(d: usize) -> Rational {
    rat(d as i64 + 1, 2)
}

/// `ε` with `tr = -ε(d+1)/2`, if any.
fn sign_from_trace(trace: &Rational, d: usize) -> Option<Sign> {
    let h = half_dim(d);
    if *trace == -&h {
        Some(Sign::Plus)
    } else if *trace == h {
        Some(Sign::Minus)
    } else {
        None
    }
}

fn validate(module: &BIModule, candidate: &BIModule) -> Option<Matrix> {
    match are_isomorphic(candidate, module) {
        IsoOutcome::Isomorphic(t) => Some(t),
        _ => None,
    }
}

fn even_candidate(d: usize, a: &Rational, b: &Rational, c: &Rational, twist: TwistSign) -> Result<BIModule, Error> {
    Ok(build_e(&EvenParams::new(d, a.clone(), b.clone(), c.clone())?).twist(twist))
}

fn identify_even(module: &BIModule, d: usize) -> Result<ClassCoordinates, Error> {
    if let Some(found) = by_central_scalars(module, d)? {
        return Ok(found);
    }
    if let Some(found) = by_eigenvalue_chain(module, d)? {
        return Ok(found);
    }
    Err(Error::IdentificationFailed(
        "no even-family candidate is isomorphic to the module".into(),
    ))
}

fn by_central_scalars(module: &BIModule, d: usize) -> Result<Option<ClassCoordinates>, Error> {
    let (Some(eps), Some(eps_prime)) = (
        sign_from_trace(&module.x().trace(), d),
        sign_from_trace(&module.y().trace(), d),
    ) else {
        return Ok(None);
    };
    let twist = TwistSign::new(eps, eps_prime);
    let (kappa, lambda, mu) = module.twist(twist).central_scalars()?;
    let q = half_dim(d) * half_dim(d) * int(2);
    let square = |sum: Rational, name: &str| -> Result<Rational, Error> {
        let sq = (&q - sum) / int(2);
        rational_sqrt(&sq).ok_or_else(|| Error::NotRationalFamily(format!("{name}^2 = {sq} is not a rational square")))
    };
    let a = square(&kappa + &mu, "a")?;
    let b = square(&lambda + &kappa, "b")?;
    let c = square(&mu + &lambda, "c")?;
    let candidate = even_candidate(d, &a, &b, &c, twist)?;
    Ok(validate(module, &candidate).map(|witness| ClassCoordinates {
        family: Family::Even,
        d,
        twist: Some(twist),
        params: (a, b, c),
        method: IdentifyMethod::CentralScalars,
        witness,
    }))
}

/// `(-1)^i (α + i)`
fn chain(alpha: &Rational, i: i64) -> Rational {
    Sign::parity(i).apply(&(alpha + int(i)))
}

/// Candidate `(ε, a)` pairs read off an eigenvalue set, preferred first:
/// for each eigenvalue `α` an integer `j` with `ϑ_j(α)` present and
/// `ϑ_{j-1}(α)` absent gives `ε = (-1)^j`, `a = α + j + d/2`. Ties go to the
/// smallest `|j|`, then to `ε = 1`.
pub fn chain_candidates(eigs: &[Rational], d: usize) -> Vec<(Sign, Rational)> {
    let mut found: Vec<(i64, Sign, Rational)> = Vec::new();
    let bound = eigs.iter().map(|e| e.abs()).max().unwrap_or_else(Rational::zero);
    for alpha in eigs {
        let lo = (-&bound - alpha).floor().to_integer();
        let hi = (&bound - alpha).ceil().to_integer();
        let lo: i64 = i64::try_from(lo).unwrap_or(i64::MIN / 4) - 1;
        let hi: i64 = i64::try_from(hi).unwrap_or(i64::MAX / 4) + 1;
        for j in lo..=hi {
            if eigs.contains(&chain(alpha, j)) && !eigs.contains(&chain(alpha, j - 1)) {
                let a = alpha + int(j) + rat(d as i64, 2);
                found.push((j, Sign::parity(j), a));
            }
        }
    }
    found.sort_by(|x, y| {
        x.0.abs()
            .cmp(&y.0.abs())
            .then_with(|| (x.1 == Sign::Minus).cmp(&(y.1 == Sign::Minus)))
            .then_with(|| x.2.cmp(&y.2))
    });
    let mut out: Vec<(Sign, Rational)> = Vec::new();
    for (_, s, a) in found {
        if !out.contains(&(s, a.clone())) {
            out.push((s, a));
        }
    }
    out
}

fn by_eigenvalue_chain(module: &BIModule, d: usize) -> Result<Option<ClassCoordinates>, Error> {
    let x_spec = module.x().char_poly()?.rational_roots()?;
    if !x_spec.split {
        return Err(Error::NonSplitSpectrum("X"));
    }
    let y_spec = module.y().char_poly()?.rational_roots()?;
    if !y_spec.split {
        return Err(Error::NonSplitSpectrum("Y"));
    }
    let xs = chain_candidates(&x_spec.distinct(), d);
    let ys = chain_candidates(&y_spec.distinct(), d);
    let q = half_dim(d) * half_dim(d);
    for (eps, a) in &xs {
        for (eps_prime, b) in &ys {
            let twist = TwistSign::new(*eps, *eps_prime);
            let untwisted = module.twist(twist);
            let c2 = untwisted.kappa() + a * a + b * b - &q;
            let Some(c) = rational_sqrt(&c2) else { continue };
            let candidate = even_candidate(d, a, b, &c, twist)?;
            if let Some(witness) = validate(module, &candidate) {
                return Ok(Some(ClassCoordinates {
                    family: Family::Even,
                    d,
                    twist: Some(twist),
                    params: orbit_canonical(a, b, &c),
                    method: IdentifyMethod::EigenvalueChain,
                    witness,
                }));
            }
        }
    }
    Ok(None)
}

fn identify_odd(module: &BIModule, d: usize) -> Result<ClassCoordinates, Error> {
    let a = module.x().trace();
    let b = module.y().trace();
    let c = (int(2) * &a * &b - module.kappa()) / int(d as i64 + 1);
    let candidate = build_o(&OddParams::new(d, a.clone(), b.clone(), c.clone())?);
    let witness = validate(module, &candidate)
        .ok_or_else(|| Error::IdentificationFailed(format!("module is not isomorphic to O_{d}({a},{b},{c})")))?;
    Ok(ClassCoordinates {
        family: Family::Odd,
        d,
        twist: None,
        params: (a, b, c),
        method: IdentifyMethod::Traces,
        witness,
    })
}

/// One line of [`odd_twist_check`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OddTwistEntry {
    pub twist: TwistSign,
    /// `(εa, ε'b, εε'c)`
    pub target: (Rational, Rational, Rational),
    pub witness: Option<Matrix>,
}

/// For each non-identity twist, whether `O_d(a,b,c)^{(ε,ε')}` is isomorphic
/// to `O_d(εa, ε'b, εε'c)`. Requires `O_d(a,b,c)` irreducible.
pub fn odd_twist_check(p: &OddParams) -> Result<Vec<OddTwistEntry>, Error> {
    if !super::criterion::criterion_odd_params(p) {
        return Err(Error::NotIrreducible);
    }
    let base = build_o(p);
    let mut out = Vec::new();
    for twist in TwistSign::ALL.into_iter().filter(|t| !t.is_identity()) {
        let target = (
            twist.eps.apply(&p.a),
            twist.eps_prime.apply(&p.b),
            twist.product().apply(&p.c),
        );
        let other = build_o(&OddParams::new(
            p.d(),
            target.0.clone(),
            target.1.clone(),
            target.2.clone(),
        )?);
        let witness = validate(&base.twist(twist), &other);
        out.push(OddTwistEntry { twist, target, witness });
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bimodule::{example_e, example_o};

    #[test]
    fn example_e_coordinates() {
        let c = identify(&example_e()).unwrap();
        assert_eq!(c.family, Family::Even);
        assert_eq!(c.d, 3);
        assert_eq!(c.twist, Some(TwistSign::IDENTITY));
        assert_eq!(c.params, (int(1), int(0), int(1)));
        assert_eq!(c.to_string(), "E_3(1,0,1)^(1,1)");
    }

    #[test]
    fn example_o_coordinates() {
        let c = identify(&example_o()).unwrap();
        assert_eq!(c.family, Family::Odd);
        assert_eq!(c.d, 4);
        assert_eq!(c.params, (rat(3, 2), rat(1, 2), rat(-1, 2)));
    }

    #[test]
    fn reducible_modules_are_rejected() {
        let m = build_e(&EvenParams::new(1, int(0), int(0), int(0)).unwrap());
        assert_eq!(identify(&m), Err(Error::NotIrreducible));
    }

    #[test]
    fn chain_reads_back_twists() {
        let p = EvenParams::new(3, rat(7, 3), int(0), int(1)).unwrap();
        for twist in TwistSign::ALL {
            let m = build_e(&p).twist(twist);
            let eigs = m.x().char_poly().unwrap().rational_roots().unwrap().distinct();
            let (eps, a) = chain_candidates(&eigs, 3)[0].clone();
            assert_eq!(eps, twist.eps);
            assert_eq!(a.abs(), rat(7, 3));
            let found = by_eigenvalue_chain(&m, 3).unwrap().unwrap();
            assert_eq!(found.twist, Some(twist));
            assert_eq!(found.params, (rat(7, 3), int(0), int(1)));
        }
    }

    #[test]
    fn odd_twists_relabel_parameters() {
        let p = OddParams::new(4, rat(3, 2), rat(1, 2), rat(-1, 2)).unwrap();
        let report = odd_twist_check(&p).unwrap();
        assert_eq!(report.len(), 3);
        assert!(report.iter().all(|e| e.witness.is_some()));
    }
}
