//! Univariate polynomials over the rationals.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::matrix::Matrix;
use super::rational::{common_denominator, Rational};
use super::LinalgError;

/// Dense polynomial, coefficients lowest degree first.
///
/// The coefficient vector never carries trailing zeros, so the zero
/// polynomial has no coefficients at all.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Polynomial {
    coeffs: Vec<Rational>,
}

/// Rational roots of a polynomial, with multiplicity.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RootReport {
    /// Sorted ascending; repeated roots appear once per multiplicity.
    pub roots: Vec<Rational>,
    /// True when the roots account for the full degree.
    pub split: bool,
}

impl RootReport {
    /// Distinct roots with their multiplicities, ascending.
    pub fn with_multiplicity(&self) -> Vec<(Rational, usize)> {
        let mut out: Vec<(Rational, usize)> = Vec::new();
        for r in &self.roots {
            match out.last_mut() {
                Some((last, m)) if last == r => *m += 1,
                _ => out.push((r.clone(), 1)),
            }
        }
        out
    }

    pub fn distinct(&self) -> Vec<Rational> {
        self.with_multiplicity().into_iter().map(|(r, _)| r).collect()
    }
}

impl Polynomial {
    pub fn new(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn zero() -> Self {
        Self { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        Self::new(vec![c])
    }

    pub fn x() -> Self {
        Self::new(vec![Rational::zero(), Rational::one()])
    }

    /// `x - r`
    pub fn linear(r: &Rational) -> Self {
        Self::new(vec![-r.clone(), Rational::one()])
    }

    /// Monic polynomial with the given roots (with repetition).
    pub fn from_roots<'a>(roots: impl IntoIterator<Item = &'a Rational>) -> Self {
        roots.into_iter().fold(Self::one(), |acc, r| &acc * &Self::linear(r))
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> Rational {
        self.coeffs.get(k).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&Rational> {
        self.coeffs.last()
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    pub fn is_monic(&self) -> bool {
        self.leading().is_some_and(One::is_one)
    }

    pub fn monic(&self) -> Self {
        match self.leading() {
            None => Self::zero(),
            Some(lc) => self.scale(&lc.recip()),
        }
    }

    pub fn scale(&self, s: &Rational) -> Self {
        Self::new(self.coeffs.iter().map(|c| c * s).collect())
    }

    pub fn derivative(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, c)| c * Rational::from_integer(BigInt::from(k)))
                .collect(),
        )
    }

    pub fn eval(&self, x: &Rational) -> Rational {
        self.coeffs.iter().rev().fold(Rational::zero(), |acc, c| acc * x + c)
    }

    /// Substitutes a square matrix for the variable (Horner form).
    pub fn eval_matrix(&self, m: &Matrix) -> Result<Matrix, LinalgError> {
        m.require_square()?;
        let n = m.rows();
        let mut acc = Matrix::zeros(n, n);
        for c in self.coeffs.iter().rev() {
            acc = &(&acc * m) + &Matrix::scalar(n, c.clone());
        }
        Ok(acc)
    }

    /// Euclidean division. Errors on a zero divisor.
    pub fn div_rem(&self, divisor: &Self) -> Result<(Self, Self), LinalgError> {
        let dd = divisor.degree().ok_or(LinalgError::ZeroPolynomial)?;
        let lc_inv = divisor.coeffs[dd].recip();
        let mut rem = self.coeffs.clone();
        let Some(nd) = self.degree() else {
            return Ok((Self::zero(), Self::zero()));
        };
        if nd < dd {
            return Ok((Self::zero(), self.clone()));
        }
        let mut quot = vec![Rational::zero(); nd - dd + 1];
        for k in (0..=nd - dd).rev() {
            let c = &rem[k + dd] * &lc_inv;
            if c.is_zero() {
                continue;
            }
            for (j, dc) in divisor.coeffs.iter().enumerate() {
                rem[k + j] -= &c * dc;
            }
            quot[k] = c;
        }
        rem.truncate(dd);
        Ok((Self::new(quot), Self::new(rem)))
    }

    pub fn divides(&self, other: &Self) -> Result<bool, LinalgError> {
        Ok(other.div_rem(self)?.1.is_zero())
    }

    /// Monic greatest common divisor; `gcd(0, 0) = 0`.
    pub fn gcd(&self, other: &Self) -> Self {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let r = a.div_rem(&b).expect("nonzero divisor").1;
            a = b;
            b = r;
        }
        a.monic()
    }

    /// Monic least common multiple.
    pub fn lcm(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let g = self.gcd(other);
        let (q, _) = (self * other).div_rem(&g).expect("gcd is nonzero");
        q.monic()
    }

    /// True iff `gcd(p, p')` is constant.
    pub fn is_squarefree(&self) -> Result<bool, LinalgError> {
        if self.is_zero() {
            return Err(LinalgError::ZeroPolynomial);
        }
        Ok(self.gcd(&self.derivative()).is_constant())
    }

    /// All rational roots with multiplicity.
    ///
    /// Candidates come from the rational-root theorem applied to the
    /// squarefree part, whose integer coefficients are smaller than those of
    /// `self`; multiplicities are then recovered by repeated division.
    pub fn rational_roots(&self) -> Result<RootReport, LinalgError> {
        let degree = self.degree().ok_or(LinalgError::ZeroPolynomial)?;
        let mut roots = Vec::new();
        let mut rest = self.monic();

        // x = 0 separately: the candidate search below needs a nonzero
        // constant term.
        while rest.degree().unwrap_or(0) > 0 && rest.coeff(0).is_zero() {
            roots.push(Rational::zero());
            rest = Self::new(rest.coeffs[1..].to_vec());
        }

        if rest.degree().unwrap_or(0) > 0 {
            let radical = rest.div_rem(&rest.gcd(&rest.derivative())).expect("gcd is nonzero").0;
            for cand in root_candidates(&radical) {
                if !radical.eval(&cand).is_zero() {
                    continue;
                }
                let lin = Self::linear(&cand);
                loop {
                    let (q, r) = rest.div_rem(&lin).expect("nonzero divisor");
                    if !r.is_zero() {
                        break;
                    }
                    roots.push(cand.clone());
                    rest = q;
                }
            }
        }
        roots.sort();
        let split = roots.len() == degree;
        Ok(RootReport { roots, split })
    }

    /// Factored text such as `(x - 3/2)(x + 1/2)^2` when the polynomial
    /// splits over the rationals, otherwise the expanded form.
    pub fn factored_string(&self) -> String {
        let Ok(report) = self.rational_roots() else {
            return self.to_string();
        };
        if !report.split || report.roots.is_empty() {
            return self.to_string();
        }
        let lc = self.leading().cloned().unwrap_or_else(Rational::one);
        let mut out = String::new();
        if !lc.is_one() {
            out.push_str(&lc.to_string());
        }
        for (r, m) in report.with_multiplicity() {
            out.push_str(&format!("({})", Self::linear(&r)));
            if m > 1 {
                out.push_str(&format!("^{m}"));
            }
        }
        out
    }
}

/// Candidates `p/q` with `p | a_0` and `q | a_n` for the integer-scaled
/// polynomial. Requires a nonzero constant term.
fn root_candidates(p: &Polynomial) -> Vec<Rational> {
    let den = common_denominator(p.coeffs.iter());
    let ints: Vec<BigInt> = p
        .coeffs
        .iter()
        .map(|c| (c * Rational::from_integer(den.clone())).to_integer())
        .collect();
    let content = ints.iter().fold(BigInt::zero(), |g, c| g.gcd(c));
    let constant = (&ints[0] / &content).abs();
    let leading = (ints.last().expect("nonconstant") / &content).abs();
    let ps = divisors(&constant);
    let qs = divisors(&leading);
    let mut cands = BTreeMap::new();
    for pn in &ps {
        for qd in &qs {
            let r = Rational::new(pn.clone(), qd.clone());
            cands.insert(-r.clone(), ());
            cands.insert(r, ());
        }
    }
    cands.into_keys().collect()
}

fn divisors(n: &BigInt) -> Vec<BigInt> {
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut k = BigInt::one();
    while &k * &k <= *n {
        if (n % &k).is_zero() {
            let other = n / &k;
            if other != k {
                large.push(other);
            }
            small.push(k.clone());
        }
        k += 1;
    }
    small.extend(large.into_iter().rev());
    small
}

impl Add for &Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Polynomial::new((0..n).map(|k| self.coeff(k) + rhs.coeff(k)).collect())
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Polynomial::new((0..n).map(|k| self.coeff(k) - rhs.coeff(k)).collect())
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        if self.is_zero() || rhs.is_zero() {
            return Polynomial::zero();
        }
        let mut out = vec![Rational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Polynomial::new(out)
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        Polynomial::new(self.coeffs.iter().map(|c| -c).collect())
    }
}

impl fmt::Display for Polynomial {
    /// Descending powers, e.g. `x^2 - 1/4`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if c.is_negative() { '-' } else { '+' })?;
            }
            first = false;
            let show_coeff = k == 0 || !mag.is_one();
            if show_coeff {
                write!(f, "{mag}")?;
            }
            match k {
                0 => {}
                1 => write!(f, "x")?,
                _ => write!(f, "x^{k}")?,
            }
        }
        Ok(())
    }
}
