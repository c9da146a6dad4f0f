//! Command bodies. Each takes already-parsed input and returns a
//! serializable body plus its exit status; reading files and printing is
//! left to the binary.

use bannai_ito::bimodule::{
    build_e, build_o, build_origin, example_e, example_o, BIModule, EvenParams, Family, Generator, OddParams, TwistSign,
};
use bannai_ito::classify::{
    are_isomorphic, criterion_even, criterion_odd, identify, oracle_irreducible, ClassCoordinates, IrrStatus,
    IrrVerdict, IsoOutcome,
};
use bannai_ito::linalg::{Rational, Subspace};
use bannai_ito::Error;
use serde::Serialize;

use crate::format::{matrix_strings, rational_to_string, vectors_strings};
use crate::report::Exit;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Fixture {
    ExampleE,
    ExampleO,
}

impl std::str::FromStr for Fixture {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "exampleE" => Ok(Fixture::ExampleE),
            "exampleO" => Ok(Fixture::ExampleO),
            other => Err(format!("unknown fixture {other:?} (expected exampleE|exampleO)")),
        }
    }
}

impl Fixture {
    pub fn as_str(self) -> &'static str {
        match self {
            Fixture::ExampleE => "exampleE",
            Fixture::ExampleO => "exampleO",
        }
    }
}

pub fn fixture(f: Fixture) -> BIModule {
    match f {
        Fixture::ExampleE => example_e(),
        Fixture::ExampleO => example_o(),
    }
}

pub fn build(
    family: Family,
    d: usize,
    a: Rational,
    b: Rational,
    c: Rational,
    twist: TwistSign,
) -> Result<BIModule, Error> {
    let m = match family {
        Family::Even => build_e(&EvenParams::new(d, a, b, c)?),
        Family::Odd => build_o(&OddParams::new(d, a, b, c)?),
    };
    Ok(m.twist(twist))
}

#[derive(Debug, Serialize)]
pub struct BuildBody {
    pub label: String,
    pub dim: usize,
    pub kappa: String,
    pub lambda: Option<String>,
    pub mu: Option<String>,
}

pub fn build_summary(m: &BIModule) -> BuildBody {
    BuildBody {
        label: m.label().to_string(),
        dim: m.dim(),
        kappa: rational_to_string(m.kappa()),
        lambda: m.lambda().map(rational_to_string),
        mu: m.mu().map(rational_to_string),
    }
}

#[derive(Debug, Serialize)]
pub struct RelationOut {
    pub name: &'static str,
    pub holds: bool,
    pub scalar: Option<String>,
}

#[derive(Debug, Serialize)]
pub struct CheckBody {
    pub passed: bool,
    pub failures: Vec<&'static str>,
    pub relations: Vec<RelationOut>,
    pub kappa: String,
    pub lambda: Option<String>,
    pub mu: Option<String>,
}

pub fn check(m: &BIModule) -> (CheckBody, Exit) {
    let r = m.check_relations();
    let body = CheckBody {
        passed: r.passed(),
        failures: r.failures(),
        relations: r
            .entries
            .iter()
            .map(|e| RelationOut {
                name: e.name,
                holds: e.holds,
                scalar: e.scalar.as_ref().map(rational_to_string),
            })
            .collect(),
        kappa: rational_to_string(&r.kappa),
        lambda: r.lambda.as_ref().map(rational_to_string),
        mu: r.mu.as_ref().map(rational_to_string),
    };
    let exit = if body.passed { Exit::Ok } else { Exit::PropertyFailed };
    (body, exit)
}

#[derive(Debug, Serialize)]
pub struct WitnessOut {
    pub dim: usize,
    pub basis: Vec<Vec<String>>,
}

impl From<&Subspace> for WitnessOut {
    fn from(s: &Subspace) -> Self {
        Self {
            dim: s.dim(),
            basis: vectors_strings(s.basis()),
        }
    }
}

#[derive(Debug, Serialize)]
pub struct VerdictOut {
    pub status: &'static str,
    pub source: &'static str,
    pub stage: &'static str,
    pub witness: Option<WitnessOut>,
}

impl From<&IrrVerdict> for VerdictOut {
    fn from(v: &IrrVerdict) -> Self {
        Self {
            status: v.status.as_str(),
            source: "oracle",
            stage: v.method.as_str(),
            witness: v.witness.as_ref().map(WitnessOut::from),
        }
    }
}

#[derive(Debug, Serialize)]
pub struct CriterionOut {
    pub family: &'static str,
    pub irreducible: bool,
    pub agrees_with_oracle: Option<bool>,
}

#[derive(Debug, Serialize)]
pub struct ClassOut {
    pub class: String,
    pub family: &'static str,
    pub d: usize,
    pub twist: Option<String>,
    pub a: String,
    pub b: String,
    pub c: String,
    pub method: &'static str,
    /// `T` with `T X_F = X T`, `T Y_F = Y T`, `F` the named family module.
    pub witness: Vec<Vec<String>>,
}

impl From<&ClassCoordinates> for ClassOut {
    fn from(k: &ClassCoordinates) -> Self {
        let (a, b, c) = &k.params;
        Self {
            class: k.to_string(),
            family: k.family.as_str(),
            d: k.d,
            twist: k.twist.map(|t| t.to_string()),
            a: rational_to_string(a),
            b: rational_to_string(b),
            c: rational_to_string(c),
            method: k.method.as_str(),
            witness: matrix_strings(&k.witness),
        }
    }
}

#[derive(Debug, Default, Serialize)]
pub struct ClassifyBody {
    pub dim: usize,
    pub relation_failures: Vec<&'static str>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub verdict: Option<VerdictOut>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub criterion: Option<CriterionOut>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub meta_note: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub identification: Option<ClassOut>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
}

/// Criterion verdict from the file's provenance, when the provenance really
/// describes the matrices.
fn criterion_from_meta(m: &BIModule) -> Result<Option<(Family, bool)>, String> {
    let Some(o) = m.origin() else {
        return Ok(None);
    };
    let rebuilt = build_origin(o).map_err(|e| format!("meta does not name a family module: {e}"))?;
    if rebuilt.x() != m.x() || rebuilt.y() != m.y() || rebuilt.kappa() != m.kappa() {
        return Err("meta parameters do not reproduce the matrices; criterion skipped".into());
    }
    let holds = match o.family {
        Family::Even => criterion_even(o.d, &o.a, &o.b, &o.c),
        Family::Odd => criterion_odd(o.d, &o.a, &o.b, &o.c),
    }
    .map_err(|e| e.to_string())?;
    Ok(Some((o.family, holds)))
}

fn error_exit(e: &Error) -> Exit {
    match e {
        Error::Indeterminate(_) | Error::NonSplitSpectrum(_) => Exit::Indeterminate,
        _ => Exit::PropertyFailed,
    }
}

pub fn classify(m: &BIModule) -> (ClassifyBody, Exit) {
    let mut body = ClassifyBody {
        dim: m.dim(),
        ..Default::default()
    };
    let relations = m.check_relations();
    if !relations.passed() {
        body.relation_failures = relations.failures();
        body.error = Some("defining relations fail; not a module".into());
        return (body, Exit::PropertyFailed);
    }
    let verdict = match oracle_irreducible(m) {
        Ok(v) => v,
        Err(e) => {
            body.error = Some(e.to_string());
            return (body, error_exit(&e));
        }
    };
    let mut exit = match verdict.status {
        IrrStatus::Indeterminate => Exit::Indeterminate,
        _ => Exit::Ok,
    };
    match criterion_from_meta(m) {
        Ok(Some((family, holds))) => {
            let agrees = match verdict.status {
                IrrStatus::Irreducible => Some(holds),
                IrrStatus::Reducible => Some(!holds),
                IrrStatus::Indeterminate => None,
            };
            if agrees == Some(false) {
                exit = exit.worst(Exit::PropertyFailed);
            }
            body.criterion = Some(CriterionOut {
                family: family.as_str(),
                irreducible: holds,
                agrees_with_oracle: agrees,
            });
        }
        Ok(None) => {}
        Err(note) => body.meta_note = Some(note),
    }
    if verdict.status == IrrStatus::Irreducible {
        match identify(m) {
            Ok(k) => body.identification = Some(ClassOut::from(&k)),
            Err(e) => {
                exit = exit.worst(error_exit(&e));
                body.error = Some(e.to_string());
            }
        }
    }
    body.verdict = Some(VerdictOut::from(&verdict));
    (body, exit)
}

#[derive(Debug, Default, Serialize)]
pub struct IdentifyBody {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub identification: Option<ClassOut>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
}

pub fn identify_cmd(m: &BIModule) -> (IdentifyBody, Exit) {
    let relations = m.check_relations();
    if !relations.passed() {
        let error = format!("defining relations fail: {}", relations.failures().join(", "));
        return (
            IdentifyBody {
                identification: None,
                error: Some(error),
            },
            Exit::PropertyFailed,
        );
    }
    match identify(m) {
        Ok(k) => (
            IdentifyBody {
                identification: Some(ClassOut::from(&k)),
                error: None,
            },
            Exit::Ok,
        ),
        Err(e) => (
            IdentifyBody {
                identification: None,
                error: Some(e.to_string()),
            },
            error_exit(&e),
        ),
    }
}

#[derive(Debug, Serialize)]
pub struct IsoBody {
    pub isomorphic: Option<bool>,
    pub reason: Option<&'static str>,
    pub hom_dim: Option<usize>,
    /// Invertible `T` with `T X_1 = X_2 T`, `T Y_1 = Y_2 T`.
    pub witness: Option<Vec<Vec<String>>>,
}

/// Exit 0 when isomorphic, 1 when not, 3 when undecided.
pub fn iso(v: &BIModule, w: &BIModule) -> (IsoBody, Exit) {
    match are_isomorphic(v, w) {
        IsoOutcome::Isomorphic(t) => (
            IsoBody {
                isomorphic: Some(true),
                reason: None,
                hom_dim: None,
                witness: Some(matrix_strings(&t)),
            },
            Exit::Ok,
        ),
        IsoOutcome::NotIsomorphic(r) => (
            IsoBody {
                isomorphic: Some(false),
                reason: Some(r.as_str()),
                hom_dim: None,
                witness: None,
            },
            Exit::PropertyFailed,
        ),
        IsoOutcome::Indeterminate { hom_dim } => (
            IsoBody {
                isomorphic: None,
                reason: None,
                hom_dim: Some(hom_dim),
                witness: None,
            },
            Exit::Indeterminate,
        ),
    }
}

#[derive(Debug, Serialize)]
pub struct RootOut {
    pub root: String,
    pub multiplicity: usize,
}

#[derive(Debug, Serialize)]
pub struct MinpolyBody {
    pub generator: String,
    pub minpoly: String,
    /// Ascending powers of `x`.
    pub coefficients: Vec<String>,
    pub split: bool,
    pub roots: Vec<RootOut>,
    pub squarefree: bool,
    pub diagonalizable: bool,
}

pub fn minpoly(m: &BIModule, g: Generator) -> (MinpolyBody, Exit) {
    let p = m.generator(g).min_poly().expect("module matrices are square");
    let roots = p.rational_roots().expect("minimal polynomials are nonzero");
    let squarefree = p.is_squarefree().expect("minimal polynomials are nonzero");
    let body = MinpolyBody {
        generator: g.to_string(),
        minpoly: p.factored_string(),
        coefficients: p.coeffs().iter().map(rational_to_string).collect(),
        split: roots.split,
        roots: roots
            .with_multiplicity()
            .into_iter()
            .map(|(r, k)| RootOut {
                root: rational_to_string(&r),
                multiplicity: k,
            })
            .collect(),
        squarefree,
        diagonalizable: squarefree,
    };
    (body, Exit::Ok)
}
