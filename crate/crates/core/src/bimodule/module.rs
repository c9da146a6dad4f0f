use std::fmt;

use super::params::{Family, TwistSign};
use crate::linalg::{anticommutator, LinalgError, Matrix, Polynomial, Rational};
use crate::Error;

/// Where a module came from, when it was built from a parameter family.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Origin {
    pub family: Family,
    pub d: usize,
    pub a: Rational,
    pub b: Rational,
    pub c: Rational,
    pub twist: TwistSign,
}

/// A finite-dimensional module: matrices for `X` and `Y` and the scalar
/// `κ` of the central element `{X,Y} - Z`.
///
/// `Z` is never stored; [`BIModule::z`] derives it as `{X,Y} - κI`. The
/// optional `λ`/`μ` are claims about the other two central elements and are
/// checked, not trusted, by [`BIModule::check_relations`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BIModule {
    x: Matrix,
    y: Matrix,
    kappa: Rational,
    lambda: Option<Rational>,
    mu: Option<Rational>,
    label: String,
    origin: Option<Origin>,
}

impl BIModule {
    pub fn new(x: Matrix, y: Matrix, kappa: Rational) -> Result<Self, Error> {
        if !x.is_square() {
            return Err(LinalgError::NotSquare {
                rows: x.rows(),
                cols: x.cols(),
            }
            .into());
        }
        if !y.is_square() {
            return Err(LinalgError::NotSquare {
                rows: y.rows(),
                cols: y.cols(),
            }
            .into());
        }
        if x.rows() != y.rows() {
            return Err(LinalgError::DimensionMismatch {
                expected: x.rows(),
                found: y.rows(),
            }
            .into());
        }
        Ok(Self {
            x,
            y,
            kappa,
            lambda: None,
            mu: None,
            label: String::new(),
            origin: None,
        })
    }

    pub fn with_central(mut self, lambda: Option<Rational>, mu: Option<Rational>) -> Self {
        self.lambda = lambda;
        self.mu = mu;
        self
    }

    pub fn with_label(mut self, label: impl Into<String>) -> Self {
        self.label = label.into();
        self
    }

    pub fn with_origin(mut self, origin: Option<Origin>) -> Self {
        self.origin = origin;
        self
    }

    pub fn dim(&self) -> usize {
        self.x.rows()
    }

    pub fn x(&self) -> &Matrix {
        &self.x
    }

    pub fn y(&self) -> &Matrix {
        &self.y
    }

    pub fn kappa(&self) -> &Rational {
        &self.kappa
    }

    pub fn lambda(&self) -> Option<&Rational> {
        self.lambda.as_ref()
    }

    pub fn mu(&self) -> Option<&Rational> {
        self.mu.as_ref()
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn origin(&self) -> Option<&Origin> {
        self.origin.as_ref()
    }

    /// `Z = {X,Y} - κI`
    pub fn z(&self) -> Matrix {
        anticommutator(&self.x, &self.y)
            .expect("validated square matrices of equal size")
            .shift(&self.kappa)
    }

    /// The module twisted by `(ε, ε')`: `X ↦ εX`, `Y ↦ ε'Y`, hence
    /// `κ ↦ εε'κ`, `λ ↦ ελ`, `μ ↦ ε'μ`.
    pub fn twist(&self, s: TwistSign) -> Self {
        if s.is_identity() {
            return self.clone();
        }
        let label = if self.label.is_empty() {
            String::new()
        } else {
            format!("{}^{}", self.label, s)
        };
        Self {
            x: self.x.scale(&s.eps.as_rational()),
            y: self.y.scale(&s.eps_prime.as_rational()),
            kappa: s.product().apply(&self.kappa),
            lambda: self.lambda.as_ref().map(|l| s.eps.apply(l)),
            mu: self.mu.as_ref().map(|m| s.eps_prime.apply(m)),
            label,
            origin: self.origin.clone().map(|o| Origin {
                twist: o.twist * s,
                ..o
            }),
        }
    }

    /// Evaluates every defining relation and collects the outcome; never
    /// fails fast.
    pub fn check_relations(&self) -> RelationReport {
        let z = self.z();
        let mut entries = Vec::new();

        let k = &anticommutator(&self.x, &self.y).expect("validated") - &z;
        let kappa_ok = k.as_scalar().as_ref() == Some(&self.kappa);
        entries.push(RelationCheck::new("{X,Y} - Z = kappa", kappa_ok, k.as_scalar()));

        let l = &anticommutator(&self.y, &z).expect("validated") - &self.x;
        let lambda = l.as_scalar();
        entries.push(RelationCheck::new(
            "{Y,Z} - X is central",
            lambda.is_some(),
            lambda.clone(),
        ));

        let m = &anticommutator(&z, &self.x).expect("validated") - &self.y;
        let mu = m.as_scalar();
        entries.push(RelationCheck::new("{Z,X} - Y is central", mu.is_some(), mu.clone()));

        if let Some(stored) = &self.lambda {
            entries.push(RelationCheck::new(
                "lambda matches stored value",
                lambda.as_ref() == Some(stored),
                lambda.clone(),
            ));
        }
        if let Some(stored) = &self.mu {
            entries.push(RelationCheck::new(
                "mu matches stored value",
                mu.as_ref() == Some(stored),
                mu.clone(),
            ));
        }

        RelationReport {
            entries,
            kappa: self.kappa.clone(),
            lambda,
            mu,
        }
    }

    /// `(κ, λ, μ)`; errors with [`Error::NotAModule`] if any relation fails.
    pub fn central_scalars(&self) -> Result<(Rational, Rational, Rational), Error> {
        let report = self.check_relations();
        if !report.passed() {
            return Err(Error::NotAModule(report.failures().join("; ")));
        }
        Ok((report.kappa, report.lambda.expect("passed"), report.mu.expect("passed")))
    }

    /// Minimal polynomials of `X`, `Y` and `Z`.
    pub fn minimal_polynomials(&self) -> (Polynomial, Polynomial, Polynomial) {
        let mp = |m: &Matrix| m.min_poly().expect("square");
        (mp(&self.x), mp(&self.y), mp(&self.z()))
    }

    /// Whether each of `X`, `Y`, `Z` is diagonalizable over the algebraic
    /// closure (squarefree minimal polynomial).
    pub fn diagonalizability(&self) -> (bool, bool, bool) {
        let (px, py, pz) = self.minimal_polynomials();
        let sf = |p: &Polynomial| p.is_squarefree().expect("minimal polynomials are nonzero");
        (sf(&px), sf(&py), sf(&pz))
    }

    /// Generator matrix by name: `X`, `Y` or `Z`.
    pub fn generator(&self, g: Generator) -> Matrix {
        match g {
            Generator::X => self.x.clone(),
            Generator::Y => self.y.clone(),
            Generator::Z => self.z(),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Generator {
    X,
    Y,
    Z,
}

impl std::str::FromStr for Generator {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "X" | "x" => Ok(Generator::X),
            "Y" | "y" => Ok(Generator::Y),
            "Z" | "z" => Ok(Generator::Z),
            other => Err(format!("unknown generator {other:?} (expected X|Y|Z)")),
        }
    }
}

impl fmt::Display for Generator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Generator::X => "X",
            Generator::Y => "Y",
            Generator::Z => "Z",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RelationCheck {
    pub name: &'static str,
    pub holds: bool,
    /// The scalar found, when the relevant matrix is scalar.
    pub scalar: Option<Rational>,
}

impl RelationCheck {
    fn new(name: &'static str, holds: bool, scalar: Option<Rational>) -> Self {
        Self { name, holds, scalar }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RelationReport {
    pub entries: Vec<RelationCheck>,
    pub kappa: Rational,
    /// Scalar of `{Y,Z} - X`, if it is scalar.
    pub lambda: Option<Rational>,
    /// Scalar of `{Z,X} - Y`, if it is scalar.
    pub mu: Option<Rational>,
}

impl RelationReport {
    pub fn passed(&self) -> bool {
        self.entries.iter().all(|e| e.holds)
    }

    pub fn failures(&self) -> Vec<&'static str> {
        self.entries.iter().filter(|e| !e.holds).map(|e| e.name).collect()
    }
}
