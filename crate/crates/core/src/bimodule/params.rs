use std::fmt;
use std::ops::Mul;

use num_traits::One;

use crate::linalg::Rational;
use crate::Error;

/// Parameters of the even-dimensional family `E_d(a,b,c)`: `d` odd, `d ≥ 1`,
/// dimension `d + 1`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct EvenParams {
    d: usize,
    pub a: Rational,
    pub b: Rational,
    pub c: Rational,
}

impl EvenParams {
    pub fn new(d: usize, a: Rational, b: Rational, c: Rational) -> Result<Self, Error> {
        if d.is_multiple_of(2) {
            return Err(Error::Parity {
                family: Family::Even,
                d,
            });
        }
        Ok(Self { d, a, b, c })
    }

    pub fn d(&self) -> usize {
        self.d
    }

    pub fn dim(&self) -> usize {
        self.d + 1
    }
}

/// Parameters of the odd-dimensional family `O_d(a,b,c)`: `d` even,
/// `d ≥ 0`, dimension `d + 1`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct OddParams {
    d: usize,
    pub a: Rational,
    pub b: Rational,
    pub c: Rational,
}

impl OddParams {
    pub fn new(d: usize, a: Rational, b: Rational, c: Rational) -> Result<Self, Error> {
        if d % 2 == 1 {
            return Err(Error::Parity { family: Family::Odd, d });
        }
        Ok(Self { d, a, b, c })
    }

    pub fn d(&self) -> usize {
        self.d
    }

    pub fn dim(&self) -> usize {
        self.d + 1
    }
}

/// Even family (`E_d`, even dimension) or odd family (`O_d`, odd dimension).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Family {
    Even,
    Odd,
}

impl Family {
    pub fn of_dim(dim: usize) -> Self {
        if dim.is_multiple_of(2) {
            Family::Even
        } else {
            Family::Odd
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            Family::Even => "even",
            Family::Odd => "odd",
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl std::str::FromStr for Family {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "even" => Ok(Family::Even),
            "odd" => Ok(Family::Odd),
            other => Err(format!("unknown family {other:?} (expected even|odd)")),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn from_i64(s: i64) -> Option<Self> {
        match s {
            1 => Some(Sign::Plus),
            -1 => Some(Sign::Minus),
            _ => None,
        }
    }

    pub fn to_i64(self) -> i64 {
        match self {
            Sign::Plus => 1,
            Sign::Minus => -1,
        }
    }

    /// `(-1)^k`
    pub fn parity(k: i64) -> Self {
        if k.rem_euclid(2) == 0 {
            Sign::Plus
        } else {
            Sign::Minus
        }
    }

    pub fn apply(self, q: &Rational) -> Rational {
        match self {
            Sign::Plus => q.clone(),
            Sign::Minus => -q.clone(),
        }
    }

    pub fn as_rational(self) -> Rational {
        self.apply(&Rational::one())
    }
}

impl Mul for Sign {
    type Output = Sign;
    fn mul(self, rhs: Sign) -> Sign {
        if self == rhs {
            Sign::Plus
        } else {
            Sign::Minus
        }
    }
}

/// Element `(ε, ε')` of the Klein four-group acting by
/// `X ↦ εX`, `Y ↦ ε'Y`, `Z ↦ εε'Z`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct TwistSign {
    pub eps: Sign,
    pub eps_prime: Sign,
}

impl TwistSign {
    pub const IDENTITY: TwistSign = TwistSign {
        eps: Sign::Plus,
        eps_prime: Sign::Plus,
    };

    pub const ALL: [TwistSign; 4] = [
        TwistSign::IDENTITY,
        TwistSign {
            eps: Sign::Plus,
            eps_prime: Sign::Minus,
        },
        TwistSign {
            eps: Sign::Minus,
            eps_prime: Sign::Plus,
        },
        TwistSign {
            eps: Sign::Minus,
            eps_prime: Sign::Minus,
        },
    ];

    pub fn new(eps: Sign, eps_prime: Sign) -> Self {
        Self { eps, eps_prime }
    }

    /// From a pair of `±1` integers.
    pub fn from_ints(eps: i64, eps_prime: i64) -> Option<Self> {
        Some(Self::new(Sign::from_i64(eps)?, Sign::from_i64(eps_prime)?))
    }

    pub fn is_identity(self) -> bool {
        self == Self::IDENTITY
    }

    /// Sign picked up by `Z` (and by `κ`).
    pub fn product(self) -> Sign {
        self.eps * self.eps_prime
    }
}

impl Mul for TwistSign {
    type Output = TwistSign;
    fn mul(self, rhs: TwistSign) -> TwistSign {
        TwistSign::new(self.eps * rhs.eps, self.eps_prime * rhs.eps_prime)
    }
}

impl fmt::Display for TwistSign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.eps.to_i64(), self.eps_prime.to_i64())
    }
}

impl std::str::FromStr for TwistSign {
    type Err = String;
    /// Accepts `"1,-1"` or `"(1,-1)"`.
    fn from_str(s: &str) -> Result<Self, String> {
        let t = s.trim().trim_start_matches('(').trim_end_matches(')');
        let (e, ep) = t
            .split_once(',')
            .ok_or_else(|| format!("twist {s:?} is not of the form e,e'"))?;
        let parse = |x: &str| x.trim().parse::<i64>().ok();
        match (parse(e), parse(ep)) {
            (Some(e), Some(ep)) => {
                Self::from_ints(e, ep).ok_or_else(|| format!("twist {s:?}: components must be 1 or -1"))
            }
            _ => Err(format!("twist {s:?}: components must be 1 or -1")),
        }
    }
}
