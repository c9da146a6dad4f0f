use crate::bimodule::Family;
use crate::linalg::LinalgError;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error(transparent)]
    Linalg(#[from] LinalgError),
    #[error("d = {d} has the wrong parity for the {family} family")]
    Parity { family: Family, d: usize },
    #[error("not a module: {0}")]
    NotAModule(String),
    #[error("premise violated: {0}")]
    PremiseViolated(&'static str),
    #[error("the product of (X - theta_i) over 0..=d does not annihilate the seed vector")]
    AnnihilatorFails,
    #[error("index out of range: {0}")]
    IndexOutOfRange(String),
    #[error("truncation too short: need N >= {needed}, got {got}")]
    TruncationTooShort { needed: usize, got: usize },
    #[error("characteristic polynomial of {0} does not split over the rationals")]
    NonSplitSpectrum(&'static str),
    #[error("module is not in a rational family: {0}")]
    NotRationalFamily(String),
    #[error("identification failed: {0}")]
    IdentificationFailed(String),
    #[error("module is not irreducible")]
    NotIrreducible,
    #[error("verdict indeterminate: {0}")]
    Indeterminate(String),
    #[error("internal consistency check failed: {0}")]
    Internal(String),
}
