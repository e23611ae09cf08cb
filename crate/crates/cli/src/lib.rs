//! Command-line front end: expression language, element files and the
//! verification suites.

pub mod commands;
pub mod element_file;
pub mod eval;
pub mod parse;

pub use element_file::{Element, ElementFile};
pub use eval::{Evaluator, Sort, Value};
pub use parse::{parse, Expr, ParseError};
