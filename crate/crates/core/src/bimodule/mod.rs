//! Modules of the universal Bannai–Ito algebra given by explicit matrices.

mod construct;
mod fixtures;
mod module;
mod params;
mod sequences;

pub(crate) use construct::bidiagonal_pair;
pub use construct::{build_e, build_o, build_origin};
pub use fixtures::{example_e, example_e_z, example_o, example_o_z};
pub use module::{BIModule, Generator, Origin, RelationCheck, RelationReport};
pub use params::{EvenParams, Family, OddParams, Sign, TwistSign};
pub use sequences::SequenceTable;
