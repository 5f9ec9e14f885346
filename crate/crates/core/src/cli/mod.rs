//! The problem-file format and the command drivers behind the `eqgb`
//! binary. Everything here is JSON-in / JSON-out (or `--pretty` text), so
//! the same entry points back the command line and the C API.

mod commands;
mod problem;
mod render;

pub use commands::{
    cmd_expand, cmd_gb, cmd_member, cmd_reduce, cmd_verify, cmd_wpo, CommandOutput,
};
pub use problem::{
    ConfigDecl, ConstraintDecl, FactorDecl, FieldDecl, GradingDecl, OrderDecl, PolyDecl,
    PosetDecl, ProblemFile, Resolved, SchemaDecl, TermDecl, WpoFile,
};
pub use render::{poly_to_decl, render_poly};
