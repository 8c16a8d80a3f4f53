//! A small query language over the engine.
//!
//! ```text
//! assume GCH
//! exp_lt(aleph(w), aleph_1)          # aleph(w+1)
//! internal_size(aleph_1, aleph_1, aleph(w+1))
//! ```

mod eval;
mod parse;

pub use eval::{eval, run_batch, BatchOutcome, Evaluator, QueryResult, Value, VerdictKind};
pub use parse::{parse, parse_assumption, parse_cardinal, ParseError};

use crate::cardinal::Cardinal;
use crate::hypotheses::Assumption;
use crate::ordinal::CnfOrdinal;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Ast {
    Cardinal(Cardinal),
    /// `ord(base + tail)`; the base, if any, is read as its initial ordinal.
    Ordinal {
        base: Option<Cardinal>,
        tail: CnfOrdinal,
    },
    /// A bare word argument such as `intersections` or `none`.
    Flag(String),
    Query {
        name: String,
        args: Vec<Ast>,
    },
    Assume(Assumption),
    Session(Vec<Ast>),
}

/// Canonical text for an AST; `parse(&format(a)) == Ok(a)` for canonical
/// ASTs (sessions of at least two statements, no `ℵ_0` ordinal base).
pub fn format(ast: &Ast) -> String {
    match ast {
        Ast::Cardinal(c) => c.to_string(),
        Ast::Ordinal { base, tail } => format!("ord({})", format_index(base.as_ref(), tail)),
        Ast::Flag(f) => f.clone(),
        Ast::Query { name, args } => {
            let args: Vec<String> = args.iter().map(format).collect();
            format!("{name}({})", args.join(", "))
        }
        Ast::Assume(a) => format!("assume {a}"),
        Ast::Session(items) => items.iter().map(format).collect::<Vec<_>>().join("; "),
    }
}

fn format_index(base: Option<&Cardinal>, tail: &CnfOrdinal) -> String {
    match base {
        None => tail.to_string(),
        Some(b) if tail.is_zero() => b.to_string(),
        Some(b) => format!("{b}+{tail}"),
    }
}
