//! Module homomorphisms and isomorphism testing.

use std::fmt;

use num_traits::Zero;

use crate::bimodule::BIModule;
use crate::linalg::{int, Matrix, Rational};
use crate::Error;

/// Basis of `{T : T X_V = X_W T, T Y_V = Y_W T}` as `dim W × dim V`
/// matrices. Empty when `κ_V ≠ κ_W`: then `T Z_V - Z_W T = (κ_W - κ_V) T`,
/// so only `T = 0` respects `Z`.
pub fn intertwiner_space(v: &BIModule, w: &BIModule) -> Vec<Matrix> {
    if v.kappa() != w.kappa() {
        return Vec::new();
    }
    let (n, m) = (v.dim(), w.dim());
    let unknowns = m * n;
    // T_{r,c} is unknown r*n + c
    let mut system = Matrix::zeros(2 * unknowns, unknowns);
    for (block, (gv, gw)) in [(v.x(), w.x()), (v.y(), w.y())].into_iter().enumerate() {
        for r in 0..m {
            for c in 0..n {
                let row = block * unknowns + r * n + c;
                // (T G_V)_{r,c} = Σ_k T_{r,k} G_V[k,c]
                for k in 0..n {
                    system[(row, r * n + k)] += &gv[(k, c)];
                }
                // (G_W T)_{r,c} = Σ_k G_W[r,k] T_{k,c}
                for k in 0..m {
                    system[(row, k * n + c)] -= &gw[(r, k)];
                }
            }
        }
    }
    system
        .kernel_basis()
        .into_iter()
        .map(|t| Matrix::from_fn(m, n, |r, c| t[r * n + c].clone()))
        .collect()
}

/// Quantities preserved by isomorphism.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Invariants {
    pub dim: usize,
    pub trace_x: Rational,
    pub trace_y: Rational,
    pub kappa: Rational,
    pub lambda: Rational,
    pub mu: Rational,
}

impl Invariants {
    /// `κ + μ`, `λ + κ`, `μ + λ`
    pub fn central_sums(&self) -> (Rational, Rational, Rational) {
        (
            &self.kappa + &self.mu,
            &self.lambda + &self.kappa,
            &self.mu + &self.lambda,
        )
    }
}

pub fn invariants(module: &BIModule) -> Result<Invariants, Error> {
    let (kappa, lambda, mu) = module.central_scalars()?;
    Ok(Invariants {
        dim: module.dim(),
        trace_x: module.x().trace(),
        trace_y: module.y().trace(),
        kappa,
        lambda,
        mu,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum NonIsoReason {
    Dimension,
    TraceX,
    TraceY,
    CentralScalars,
    NoIntertwiner,
    NoInvertibleIntertwiner,
}

impl NonIsoReason {
    pub fn as_str(self) -> &'static str {
        match self {
            NonIsoReason::Dimension => "dimensions differ",
            NonIsoReason::TraceX => "traces of X differ",
            NonIsoReason::TraceY => "traces of Y differ",
            NonIsoReason::CentralScalars => "central scalars differ",
            NonIsoReason::NoIntertwiner => "no nonzero intertwiner",
            NonIsoReason::NoInvertibleIntertwiner => "no invertible intertwiner",
        }
    }
}

impl fmt::Display for NonIsoReason {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum IsoOutcome {
    /// Carries an invertible `T` with `T X_V = X_W T`, `T Y_V = Y_W T`.
    Isomorphic(Matrix),
    NotIsomorphic(NonIsoReason),
    /// The intertwiner space has dimension at least two and the bounded
    /// search found no invertible element.
    Indeterminate {
        hom_dim: usize,
    },
}

impl IsoOutcome {
    pub fn is_isomorphic(&self) -> Option<bool> {
        match self {
            IsoOutcome::Isomorphic(_) => Some(true),
            IsoOutcome::NotIsomorphic(_) => Some(false),
            IsoOutcome::Indeterminate { .. } => None,
        }
    }
}

/// Upper bound on the number of linear combinations tried when the
/// intertwiner space has dimension at least two.
pub const COMBINATION_BUDGET: usize = 4096;

pub fn are_isomorphic(v: &BIModule, w: &BIModule) -> IsoOutcome {
    if v.dim() != w.dim() {
        return IsoOutcome::NotIsomorphic(NonIsoReason::Dimension);
    }
    if v.x().trace() != w.x().trace() {
        return IsoOutcome::NotIsomorphic(NonIsoReason::TraceX);
    }
    if v.y().trace() != w.y().trace() {
        return IsoOutcome::NotIsomorphic(NonIsoReason::TraceY);
    }
    let (rv, rw) = (v.check_relations(), w.check_relations());
    if rv.kappa != rw.kappa || rv.lambda != rw.lambda || rv.mu != rw.mu {
        return IsoOutcome::NotIsomorphic(NonIsoReason::CentralScalars);
    }
    let basis = intertwiner_space(v, w);
    if basis.is_empty() {
        return IsoOutcome::NotIsomorphic(NonIsoReason::NoIntertwiner);
    }
    if let Some(t) = basis.iter().find(|t| t.is_invertible()) {
        return IsoOutcome::Isomorphic(t.clone());
    }
    if basis.len() == 1 {
        return IsoOutcome::NotIsomorphic(NonIsoReason::NoInvertibleIntertwiner);
    }
    // det(Σ c_k T_k) has degree at most n in the c_k; a nonzero polynomial
    // of that degree cannot vanish on all of S^k once |S| > n.
    let n = v.dim();
    let k = basis.len();
    let grid: Vec<Rational> = (0..=n as i64).map(int).collect();
    let exhaustive = (grid.len() as f64).powi(k as i32) <= COMBINATION_BUDGET as f64;
    let total = if exhaustive {
        grid.len().pow(k as u32)
    } else {
        COMBINATION_BUDGET
    };
    for code in 0..total {
        let mut t = Matrix::zeros(n, n);
        let mut rest = code;
        for b in &basis {
            let coeff = &grid[rest % grid.len()];
            rest /= grid.len();
            if !coeff.is_zero() {
                t = &t + &b.scale(coeff);
            }
        }
        if t.is_invertible() {
            return IsoOutcome::Isomorphic(t);
        }
    }
    if exhaustive {
        IsoOutcome::NotIsomorphic(NonIsoReason::NoInvertibleIntertwiner)
    } else {
        IsoOutcome::Indeterminate { hom_dim: k }
    }
}

/// True iff `t` intertwines `v` into `w`.
pub fn is_intertwiner(t: &Matrix, v: &BIModule, w: &BIModule) -> bool {
    if t.rows() != w.dim() || t.cols() != v.dim() {
        return false;
    }
    t * v.x() == w.x() * t && t * v.y() == w.y() * t && v.kappa() == w.kappa()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bimodule::{build_e, build_o, example_e, EvenParams, OddParams, TwistSign};
    use crate::linalg::rat;

    #[test]
    fn example_e_matches_its_family_member() {
        let target = build_e(&EvenParams::new(3, int(1), int(0), int(1)).unwrap());
        let e = example_e();
        assert_eq!(are_isomorphic(&e, &target).is_isomorphic(), Some(true));
        let twisted = target.twist(TwistSign::from_ints(-1, 1).unwrap());
        assert_eq!(
            are_isomorphic(&e, &twisted),
            IsoOutcome::NotIsomorphic(NonIsoReason::TraceX)
        );
    }

    #[test]
    fn endomorphisms_of_irreducibles_are_scalars() {
        let m = build_o(&OddParams::new(4, rat(3, 2), rat(1, 2), rat(-1, 2)).unwrap());
        let ends = intertwiner_space(&m, &m);
        assert_eq!(ends.len(), 1);
        assert!(ends[0].as_scalar().is_some());
    }

    #[test]
    fn kappa_mismatch_short_circuits() {
        let a = build_e(&EvenParams::new(1, int(1), int(1), int(1)).unwrap());
        let b = build_e(&EvenParams::new(1, int(1), int(1), int(2)).unwrap());
        assert!(intertwiner_space(&a, &b).is_empty());
        assert_eq!(
            are_isomorphic(&a, &b),
            IsoOutcome::NotIsomorphic(NonIsoReason::CentralScalars)
        );
    }

    #[test]
    fn sign_of_a_is_invisible() {
        let p = EvenParams::new(3, int(1), int(0), int(1)).unwrap();
        let q = EvenParams::new(3, int(-1), int(0), int(1)).unwrap();
        let (u, v) = (build_e(&p), build_e(&q));
        match are_isomorphic(&u, &v) {
            IsoOutcome::Isomorphic(t) => assert!(is_intertwiner(&t, &u, &v)),
            other => panic!("{other:?}"),
        }
    }
}
