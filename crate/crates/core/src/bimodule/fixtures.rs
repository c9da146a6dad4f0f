//! Two irreducible modules on which none of `X`, `Y`, `Z` is
//! diagonalizable, entered literally rather than through the family
//! constructors.

use crate::linalg::{int, rat, Matrix, Rational};

use super::module::BIModule;

fn m(rows: Vec<Vec<Rational>>) -> Matrix {
    Matrix::from_rows(rows).expect("rectangular literal")
}

/// The four-dimensional module `E`, with `κ = 4`, `λ = 4`, `μ = 2`.
pub fn example_e() -> BIModule {
    let x = m(vec![
        vec![rat(-1, 2), int(0), int(0), int(0)],
        vec![int(1), rat(-1, 2), int(0), int(0)],
        vec![int(0), int(1), rat(3, 2), int(0)],
        vec![int(0), int(0), int(1), rat(-5, 2)],
    ]);
    let y = m(vec![
        vec![rat(-3, 2), int(1), int(0), int(0)],
        vec![int(0), rat(1, 2), int(4), int(0)],
        vec![int(0), int(0), rat(1, 2), int(-3)],
        vec![int(0), int(0), int(0), rat(-3, 2)],
    ]);
    BIModule::new(x, y, int(4))
        .expect("4x4 literals")
        .with_central(Some(int(4)), Some(int(2)))
        .with_label("exampleE")
}

/// `Z` as displayed alongside [`example_e`]; tests compare it to the
/// derived `{X,Y} - κ`.
pub fn example_e_z() -> Matrix {
    m(vec![
        vec![rat(-3, 2), int(-1), int(0), int(0)],
        vec![int(-1), rat(1, 2), int(4), int(0)],
        vec![int(0), int(1), rat(-3, 2), int(3)],
        vec![int(0), int(0), int(-1), rat(1, 2)],
    ])
}

/// The five-dimensional module `O`, with `κ = 4`, `λ = -8`, `μ = -4`.
pub fn example_o() -> BIModule {
    let x = m(vec![
        vec![rat(-1, 2), int(0), int(0), int(0), int(0)],
        vec![int(1), rat(-1, 2), int(0), int(0), int(0)],
        vec![int(0), int(1), rat(3, 2), int(0), int(0)],
        vec![int(0), int(0), int(1), rat(-5, 2), int(0)],
        vec![int(0), int(0), int(0), int(1), rat(7, 2)],
    ]);
    let y = m(vec![
        vec![rat(-3, 2), int(4), int(0), int(0), int(0)],
        vec![int(0), rat(1, 2), int(-2), int(0), int(0)],
        vec![int(0), int(0), rat(1, 2), int(6), int(0)],
        vec![int(0), int(0), int(0), rat(-3, 2), int(-12)],
        vec![int(0), int(0), int(0), int(0), rat(5, 2)],
    ]);
    BIModule::new(x, y, int(4))
        .expect("5x5 literals")
        .with_central(Some(int(-8)), Some(int(-4)))
        .with_label("exampleO")
}

/// `Z` as displayed alongside [`example_o`].
pub fn example_o_z() -> Matrix {
    m(vec![
        vec![rat(3, 2), int(-4), int(0), int(0), int(0)],
        vec![int(-1), rat(-5, 2), int(-2), int(0), int(0)],
        vec![int(0), int(1), rat(3, 2), int(-6), int(0)],
        vec![int(0), int(0), int(-1), rat(-5, 2), int(-12)],
        vec![int(0), int(0), int(0), int(1), rat(3, 2)],
    ])
}
