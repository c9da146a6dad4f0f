//! Closed-form irreducibility conditions on the family parameters.
//!
//! Over a field of characteristic zero the divisibility clause of the even
//! criterion is vacuous, so only the membership test remains.

use crate::bimodule::{EvenParams, Family, OddParams};
use crate::linalg::{rat, Rational};
use crate::Error;

fn half_int(twice: i64) -> Rational {
    rat(twice, 2)
}

/// `{(d-1)/2 - i : i = 0, 2, ..., d-1}`
pub fn forbidden_even(d: usize) -> Vec<Rational> {
    let d = d as i64;
    (0..d).step_by(2).map(|i| half_int(d - 1 - 2 * i)).collect()
}

/// `{(d+1)/2 - i : i = 2, 4, ..., d}`; empty for `d = 0`.
pub fn forbidden_odd(d: usize) -> Vec<Rational> {
    let d = d as i64;
    (2..=d).step_by(2).map(|i| half_int(d + 1 - 2 * i)).collect()
}

/// `a+b+c, -a+b+c, a-b+c, a+b-c`
fn even_combinations(a: &Rational, b: &Rational, c: &Rational) -> [Rational; 4] {
    [a + b + c, -a + b + c, a - b + c, a + b - c]
}

/// `a+b+c, a-b-c, -a+b-c, -a-b+c`
fn odd_combinations(a: &Rational, b: &Rational, c: &Rational) -> [Rational; 4] {
    [a + b + c, a - b - c, -a + b - c, -a - b + c]
}

/// True iff `E_d(a,b,c)` is irreducible.
pub fn criterion_even(d: usize, a: &Rational, b: &Rational, c: &Rational) -> Result<bool, Error> {
    if d.is_multiple_of(2) {
        return Err(Error::Parity {
            family: Family::Even,
            d,
        });
    }
    let forbidden = forbidden_even(d);
    Ok(even_combinations(a, b, c).iter().all(|s| !forbidden.contains(s)))
}

/// True iff `O_d(a,b,c)` is irreducible.
pub fn criterion_odd(d: usize, a: &Rational, b: &Rational, c: &Rational) -> Result<bool, Error> {
    if d % 2 == 1 {
        return Err(Error::Parity { family: Family::Odd, d });
    }
    let forbidden = forbidden_odd(d);
    Ok(odd_combinations(a, b, c).iter().all(|s| !forbidden.contains(s)))
}

pub fn criterion_even_params(p: &EvenParams) -> bool {
    criterion_even(p.d(), &p.a, &p.b, &p.c).expect("EvenParams has odd d")
}

pub fn criterion_odd_params(p: &OddParams) -> bool {
    criterion_odd(p.d(), &p.a, &p.b, &p.c).expect("OddParams has even d")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::int;

    #[test]
    fn forbidden_sets() {
        assert_eq!(forbidden_even(1), vec![int(0)]);
        assert_eq!(forbidden_even(3), vec![int(1), int(-1)]);
        assert_eq!(forbidden_even(5), vec![int(2), int(0), int(-2)]);
        assert!(forbidden_odd(0).is_empty());
        assert_eq!(forbidden_odd(2), vec![rat(-1, 2)]);
        assert_eq!(forbidden_odd(4), vec![rat(1, 2), rat(-3, 2)]);
    }

    #[test]
    fn even_examples() {
        assert!(!criterion_even(1, &int(0), &int(0), &int(0)).unwrap());
        assert!(criterion_even(3, &int(1), &int(0), &int(1)).unwrap());
        assert!(!criterion_even(3, &int(1), &int(1), &int(1)).unwrap());
        assert!(criterion_even(2, &int(1), &int(1), &int(1)).is_err());
    }

    #[test]
    fn odd_examples() {
        for (a, b, c) in [(0, 0, 0), (1, -1, 2), (-3, 5, 7)] {
            assert!(criterion_odd(0, &int(a), &int(b), &int(c)).unwrap());
        }
        assert!(criterion_odd(4, &rat(3, 2), &rat(1, 2), &rat(-1, 2)).unwrap());
        assert!(!criterion_odd(2, &int(0), &int(0), &rat(-1, 2)).unwrap());
        assert!(criterion_odd(3, &int(0), &int(0), &int(0)).is_err());
    }
}
