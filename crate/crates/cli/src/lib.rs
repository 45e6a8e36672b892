//! Script language for borelkit: parse ideal expressions, run analyses,
//! render text or JSON reports.

pub mod ast;
pub mod parse;
pub mod session;

pub use ast::{Command, Expr, MonoLit, RandArgs, Script, Stmt};
pub use parse::{parse, ParseError, ParseErrorKind};
pub use session::{exit_code, run_script, run_source, Options, Outcome, Report, Session};
