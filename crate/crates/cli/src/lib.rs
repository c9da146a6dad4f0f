//! Front-end pieces for the `bimod` binary: the module file format, report
//! types and the command bodies.

pub mod commands;
pub mod format;
pub mod report;
pub mod scan;

pub use format::{read_module, write_module, FormatError, ModuleFile};
pub use report::{Exit, Report};
