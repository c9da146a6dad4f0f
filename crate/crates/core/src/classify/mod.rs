//! Irreducibility, isomorphism and identification of modules.

mod criterion;
mod identify;
mod iso;
mod lmatrix;
mod oracle;
mod wbasis;

pub use criterion::{
    criterion_even, criterion_even_params, criterion_odd, criterion_odd_params, forbidden_even, forbidden_odd,
};
pub use identify::{
    chain_candidates, identify, odd_twist_check, orbit_canonical, ClassCoordinates, IdentifyMethod, OddTwistEntry,
};
pub use iso::{
    are_isomorphic, intertwiner_space, invariants, is_intertwiner, Invariants, IsoOutcome, NonIsoReason,
    COMBINATION_BUDGET,
};
pub use lmatrix::{l_diagonal_entry, l_matrix, LMethod};
pub use oracle::{oracle_irreducible, oracle_irreducible_with, IrrMethod, IrrStatus, IrrVerdict, OracleConfig};
pub use wbasis::{w_basis_matrices, WBasis};
