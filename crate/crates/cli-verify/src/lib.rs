//! Surface syntax, verification suites and reports for the twisted-supergravity
//! toolkit, plus the command layer behind the `twisted` binary.

pub mod commands;
pub mod expr;
pub mod report;
pub mod sampling;
pub mod suites;

pub use expr::{parse, parse_expression, print, Expr, ParseError};
pub use report::{Check, Report, Status};
pub use suites::{Suite, SuiteContext, SuiteRegistry};
