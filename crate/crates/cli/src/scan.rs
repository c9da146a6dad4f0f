//! Criterion against oracle over a parameter grid, points evaluated in
//! parallel.

use bannai_ito::bimodule::{build_e, build_o, EvenParams, Family, OddParams};
use bannai_ito::classify::{criterion_even_params, criterion_odd_params, oracle_irreducible, IrrStatus};
use bannai_ito::linalg::{rat, Rational};
use bannai_ito::Error;
use rayon::prelude::*;
use serde::Serialize;

use crate::format::rational_to_string;
use crate::report::Exit;

/// `{0, ±1/2, ±1, ±3/2, 2}`
pub fn default_grid() -> Vec<Rational> {
    [(0, 1), (1, 2), (-1, 2), (1, 1), (-1, 1), (3, 2), (-3, 2), (2, 1)]
        .iter()
        .map(|&(p, q)| rat(p, q))
        .collect()
}

#[derive(Debug, Clone, Serialize)]
pub struct PointOut {
    pub a: String,
    pub b: String,
    pub c: String,
    pub criterion: bool,
    pub oracle: &'static str,
    pub witness_ok: bool,
}

#[derive(Debug, Serialize)]
pub struct ScanBody {
    pub family: &'static str,
    pub d: usize,
    pub grid: Vec<String>,
    pub points: usize,
    pub irreducible: usize,
    pub reducible: usize,
    pub indeterminate: usize,
    /// Points where the criterion and the oracle disagree, or where a
    /// reducible verdict's witness fails verification.
    pub disagreements: Vec<PointOut>,
}

fn evaluate(family: Family, d: usize, a: &Rational, b: &Rational, c: &Rational) -> Result<PointOut, Error> {
    let (m, crit) = match family {
        Family::Even => {
            let p = EvenParams::new(d, a.clone(), b.clone(), c.clone())?;
            (build_e(&p), criterion_even_params(&p))
        }
        Family::Odd => {
            let p = OddParams::new(d, a.clone(), b.clone(), c.clone())?;
            (build_o(&p), criterion_odd_params(&p))
        }
    };
    let v = oracle_irreducible(&m)?;
    let witness_ok = match (&v.status, &v.witness) {
        (IrrStatus::Reducible, Some(w)) => w.is_proper_nonzero() && w.is_invariant_under(&[m.x(), m.y()]),
        (IrrStatus::Reducible, None) => false,
        _ => true,
    };
    Ok(PointOut {
        a: rational_to_string(a),
        b: rational_to_string(b),
        c: rational_to_string(c),
        criterion: crit,
        oracle: v.status.as_str(),
        witness_ok,
    })
}

/// Errors only on a parity mismatch between `family` and `d`.
pub fn scan(family: Family, d: usize, grid: &[Rational]) -> Result<(ScanBody, Exit), Error> {
    let mut triples = Vec::with_capacity(grid.len().pow(3));
    for a in grid {
        for b in grid {
            for c in grid {
                triples.push((a, b, c));
            }
        }
    }
    let points = triples
        .par_iter()
        .map(|(a, b, c)| evaluate(family, d, a, b, c))
        .collect::<Result<Vec<_>, _>>()?;

    let count = |s: IrrStatus| points.iter().filter(|p| p.oracle == s.as_str()).count();
    let disagreements: Vec<PointOut> = points
        .iter()
        .filter(|p| {
            !p.witness_ok
                || (p.oracle == IrrStatus::Irreducible.as_str() && !p.criterion)
                || (p.oracle == IrrStatus::Reducible.as_str() && p.criterion)
        })
        .cloned()
        .collect();
    let body = ScanBody {
        family: family.as_str(),
        d,
        grid: grid.iter().map(rational_to_string).collect(),
        points: points.len(),
        irreducible: count(IrrStatus::Irreducible),
        reducible: count(IrrStatus::Reducible),
        indeterminate: count(IrrStatus::Indeterminate),
        disagreements,
    };
    let exit = if !body.disagreements.is_empty() {
        Exit::PropertyFailed
    } else if body.indeterminate > 0 {
        Exit::Indeterminate
    } else {
        Exit::Ok
    };
    Ok((body, exit))
}
