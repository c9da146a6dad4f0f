//! Closed-form parameter sequences for the bidiagonal constructions.
//!
//! With `δ` the shift parameter (`δ = d` for the finite modules):
//!
//! ```text
//! θ_i  = (-1)^i (2a - δ + 2i) / 2
//! θ*_i = (-1)^i (2b - δ + 2i) / 2
//! ```
//!
//! The superdiagonal of `Y` is `varphi`; in the even family it is
//! `i(δ - i + 1)` for even `i` and `c² - (2a + 2b - δ + 2i - 1)²/4` for odd
//! `i`. `phi` is the same expression with `a` replaced by `-a`; it is the
//! superdiagonal of `Y` in the reversed basis `w_i`. The odd family has its
//! own superdiagonal and no `phi`.

use num_bigint::BigInt;

use super::params::{EvenParams, Family, OddParams, Sign};
use crate::linalg::{int, Rational};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SequenceTable {
    family: Family,
    delta: Rational,
    a: Rational,
    b: Rational,
    c: Rational,
}

fn r(i: i64) -> Rational {
    Rational::from_integer(BigInt::from(i))
}

impl SequenceTable {
    /// Even-family sequences with an arbitrary shift `δ` (used by the
    /// Verma-type module).
    pub fn with_delta(delta: Rational, a: Rational, b: Rational, c: Rational) -> Self {
        Self {
            family: Family::Even,
            delta,
            a,
            b,
            c,
        }
    }

    pub fn even(p: &EvenParams) -> Self {
        Self::with_delta(r(p.d() as i64), p.a.clone(), p.b.clone(), p.c.clone())
    }

    pub fn odd(p: &OddParams) -> Self {
        Self {
            family: Family::Odd,
            delta: r(p.d() as i64),
            a: p.a.clone(),
            b: p.b.clone(),
            c: p.c.clone(),
        }
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn delta(&self) -> &Rational {
        &self.delta
    }

    fn alternating(i: i64, base: &Rational, delta: &Rational) -> Rational {
        let v = (int(2) * base - delta + r(2 * i)) / int(2);
        Sign::parity(i).apply(&v)
    }

    pub fn theta(&self, i: i64) -> Rational {
        Self::alternating(i, &self.a, &self.delta)
    }

    pub fn theta_star(&self, i: i64) -> Rational {
        Self::alternating(i, &self.b, &self.delta)
    }

    fn even_superdiagonal(&self, i: i64, a: &Rational) -> Rational {
        if i.rem_euclid(2) == 0 {
            r(i) * (&self.delta - r(i) + r(1))
        } else {
            let s = int(2) * a + int(2) * &self.b - &self.delta + r(2 * i - 1);
            &self.c * &self.c - &s * &s / int(4)
        }
    }

    /// Superdiagonal of `Y` in the standard basis.
    pub fn varphi(&self, i: i64) -> Rational {
        match self.family {
            Family::Even => self.even_superdiagonal(i, &self.a),
            Family::Odd => {
                let (a, b, c, d1) = (&self.a, &self.b, &self.c, &self.delta + r(1));
                let two = int(2);
                if i.rem_euclid(2) == 0 {
                    r(i) * (&d1 - r(2 * i) - &two * a - &two * b - &two * c) / &two
                } else {
                    (r(i) - &d1) * (&d1 - r(2 * i) - &two * a - &two * b + &two * c) / &two
                }
            }
        }
    }

    /// Superdiagonal in the reversed basis; even family only.
    pub fn phi(&self, i: i64) -> Option<Rational> {
        match self.family {
            Family::Even => Some(self.even_superdiagonal(i, &-self.a.clone())),
            Family::Odd => None,
        }
    }

    /// Scalars `(κ, λ, μ)` by which the central elements act.
    pub fn central_scalars(&self) -> (Rational, Rational, Rational) {
        let (a, b, c) = (&self.a, &self.b, &self.c);
        match self.family {
            Family::Even => {
                let q = (&self.delta + r(1)) * (&self.delta + r(1)) / int(4);
                let (a2, b2, c2) = (a * a, b * b, c * c);
                (&c2 - &a2 - &b2 + &q, &a2 - &b2 - &c2 + &q, &b2 - &c2 - &a2 + &q)
            }
            Family::Odd => {
                let d1 = &self.delta + r(1);
                let two = int(2);
                (&two * a * b - c * &d1, &two * b * c - a * &d1, &two * c * a - b * &d1)
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::rat;

    fn even(d: usize, a: Rational, b: Rational, c: Rational) -> SequenceTable {
        SequenceTable::even(&EvenParams::new(d, a, b, c).unwrap())
    }

    #[test]
    fn theta_for_example_parameters() {
        let t = even(3, int(1), int(0), int(1));
        let th: Vec<_> = (0..4).map(|i| t.theta(i)).collect();
        assert_eq!(th, vec![rat(-1, 2), rat(-1, 2), rat(3, 2), rat(-5, 2)]);
        let vp: Vec<_> = (1..4).map(|i| t.varphi(i)).collect();
        assert_eq!(vp, vec![int(1), int(4), int(-3)]);
    }

    #[test]
    fn all_zero_parameters() {
        let t = even(1, int(0), int(0), int(0));
        assert_eq!(t.varphi(1), int(0));
    }

    #[test]
    fn odd_family_superdiagonal() {
        let t = SequenceTable::odd(&OddParams::new(2, int(0), int(0), int(0)).unwrap());
        assert_eq!(t.varphi(1), int(-1));
        assert_eq!(t.varphi(2), int(-1));
        assert_eq!(t.phi(1), None);
        assert_eq!(t.central_scalars(), (int(0), int(0), int(0)));
    }

    #[test]
    fn varphi_vanishes_past_the_end() {
        for d in [1usize, 3, 5, 7] {
            let t = even(d, rat(1, 3), rat(-2, 5), int(2));
            assert_eq!(t.varphi(d as i64 + 1), int(0));
        }
    }
}
