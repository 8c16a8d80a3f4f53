use std::io::BufRead;

use serde::Serialize;

use crate::arith::{
    cofinality, exp_lt, is_almost_mu_closed, is_mu_closed, lambda_r, lambda_star, regularity,
    triangle, two_lt, RegularityTag,
};
use crate::cardinal::Cardinal;
use crate::error::Error;
use crate::hypotheses::{ctx_implies_sch, l_cofinality, sch_unbounded, HypothesisContext};
use crate::ordinal::CnfOrdinal;
use crate::size::{
    colimit_presentability_bound, existence_at, existence_window, internal_size_of_cardinality,
    no_model_of_internal_size, rank_excluded_at, ClassParams, SizeVerdict, SpectrumFacts,
};
use crate::spectra::{
    hilbert_count_by_cardinality, hilbert_count_by_internal_size, shelah_count_by_cardinality,
    shelah_count_by_internal_size, wellorder_internal_size, CountValue,
};
use crate::verdict::Verdict;

use super::{format, parse, Ast};

const QUERIES: &[&str] = &[
    "cf",
    "reg",
    "succ",
    "lambda_r",
    "lambda_star",
    "closed",
    "almost_closed",
    "exp_lt",
    "two_lt",
    "triangle",
    "sch",
    "sch_at",
    "l_cf",
    "internal_size",
    "colimit_bound",
    "rank_excluded",
    "existence_window",
    "existence_at",
    "no_model_rule",
    "hilbert_card",
    "hilbert_internal",
    "wo_size",
    "shelah_card",
    "shelah_internal",
];

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum VerdictKind {
    Determined,
    Independent,
    Error,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(untagged)]
pub enum Value {
    Bool(bool),
    Text(String),
}

impl std::fmt::Display for Value {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Value::Bool(b) => write!(f, "{b}"),
            Value::Text(s) => f.write_str(s),
        }
    }
}

/// One output record. Field order is part of the output format.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct QueryResult {
    pub query: String,
    pub verdict: VerdictKind,
    pub value: Option<Value>,
    pub assumptions_used: Vec<String>,
    pub notes: Vec<String>,
}

impl QueryResult {
    fn error(query: String, ctx: &HypothesisContext, message: String) -> Self {
        QueryResult {
            query,
            verdict: VerdictKind::Error,
            value: None,
            assumptions_used: ctx.describe(),
            notes: vec![message],
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("records serialize")
    }

    pub fn pretty(&self) -> String {
        let mut out = match self.verdict {
            VerdictKind::Determined => match &self.value {
                Some(v) => v.to_string(),
                None => "ok".into(),
            },
            VerdictKind::Independent => "independent".into(),
            VerdictKind::Error => return format!("error: {}", self.notes.join("; ")),
        };
        for n in &self.notes {
            out.push_str("\n  ");
            out.push_str(n);
        }
        out
    }

    /// Missing assumptions of an independent result.
    pub fn missing(&self) -> Vec<&str> {
        self.notes
            .iter()
            .filter_map(|n| n.strip_prefix("missing: "))
            .collect()
    }
}

enum Fail {
    Err(String),
    Indep(Vec<String>),
}

impl From<Error> for Fail {
    fn from(e: Error) -> Self {
        Fail::Err(e.to_string())
    }
}

type Ev<T> = Result<T, Fail>;

struct Out {
    value: Value,
    notes: Vec<String>,
}

fn text(v: impl ToString) -> Out {
    Out {
        value: Value::Text(v.to_string()),
        notes: vec![],
    }
}

fn settled<T>(v: Verdict<T>) -> Ev<T> {
    match v {
        Verdict::Determined(x) => Ok(x),
        Verdict::Independent(m) => Err(Fail::Indep(m)),
    }
}

fn boolean(v: Verdict<bool>) -> Ev<Out> {
    settled(v).map(|b| Out {
        value: Value::Bool(b),
        notes: vec![],
    })
}

fn count(c: CountValue) -> Ev<Out> {
    match c {
        CountValue::Undetermined(m) => Err(Fail::Indep(m)),
        CountValue::AtLeastCard(_) => Ok(Out {
            value: Value::Text(c.to_string()),
            notes: vec!["lower bound only".into()],
        }),
        other => Ok(text(other)),
    }
}

fn arity(name: &str, args: &[Ast], min: usize, max: usize) -> Ev<()> {
    if (min..=max).contains(&args.len()) {
        return Ok(());
    }
    let want = if min == max {
        format!("{min}")
    } else {
        format!("{min} to {max}")
    };
    Err(Fail::Err(format!(
        "`{name}` takes {want} argument(s), got {}",
        args.len()
    )))
}

/// Evaluates statements against a session context that `assume` extends.
#[derive(Clone, Debug, Default)]
pub struct Evaluator {
    ctx: HypothesisContext,
}

impl Evaluator {
    pub fn new(ctx: HypothesisContext) -> Self {
        Evaluator { ctx }
    }

    pub fn context(&self) -> &HypothesisContext {
        &self.ctx
    }

    /// One record per statement, `assume` included.
    pub fn run(&mut self, ast: &Ast) -> Vec<QueryResult> {
        match ast {
            Ast::Session(items) => items.iter().flat_map(|i| self.run(i)).collect(),
            stmt => vec![self.statement(stmt)],
        }
    }

    /// Evaluate a single non-session statement.
    pub fn statement(&mut self, stmt: &Ast) -> QueryResult {
        let query = format(stmt);
        if let Ast::Assume(a) = stmt {
            return match self.ctx.assume(a.clone()) {
                Ok(ctx) => {
                    self.ctx = ctx;
                    QueryResult {
                        query,
                        verdict: VerdictKind::Determined,
                        value: Some(Value::Text(a.to_string())),
                        assumptions_used: self.ctx.describe(),
                        notes: vec![],
                    }
                }
                Err(e) => QueryResult::error(query, &self.ctx, e.to_string()),
            };
        }
        let outcome = match stmt {
            Ast::Query { name, args } => self.query(name, args),
            Ast::Cardinal(c) => Ok(text(c)),
            other => Err(Fail::Err(format!("`{}` is not a query", format(other)))),
        };
        let assumptions_used = self.ctx.describe();
        match outcome {
            Ok(out) => QueryResult {
                query,
                verdict: VerdictKind::Determined,
                value: Some(out.value),
                assumptions_used,
                notes: out.notes,
            },
            Err(Fail::Indep(missing)) => {
                let mut notes: Vec<String> = missing
                    .into_iter()
                    .map(|m| format!("missing: {m}"))
                    .collect();
                if notes.is_empty() {
                    notes.push("missing: an assumption outside the declared context".into());
                }
                QueryResult {
                    query,
                    verdict: VerdictKind::Independent,
                    value: None,
                    assumptions_used,
                    notes,
                }
            }
            Err(Fail::Err(m)) => QueryResult::error(query, &self.ctx, m),
        }
    }

    fn card(&self, arg: &Ast) -> Ev<Cardinal> {
        match arg {
            Ast::Cardinal(c) => Ok(c.clone()),
            Ast::Query { name, args } => match self.card_query(name, args) {
                Some(r) => r,
                None if QUERIES.contains(&name.as_str()) => {
                    Err(Fail::Err(format!("`{name}` does not produce a cardinal")))
                }
                None => Err(Fail::Err(format!("unknown query `{name}`"))),
            },
            other => Err(Fail::Err(format!(
                "expected a cardinal, found `{}`",
                format(other)
            ))),
        }
    }

    fn ordinal(&self, arg: &Ast) -> Ev<(Option<Cardinal>, CnfOrdinal)> {
        match arg {
            Ast::Ordinal { base, tail } => Ok((base.clone(), tail.clone())),
            _ => {
                let c = self.card(arg)?;
                Ok(if c.is_aleph_zero() {
                    (None, CnfOrdinal::omega())
                } else {
                    (Some(c), CnfOrdinal::zero())
                })
            }
        }
    }

    fn flag(&self, arg: &Ast, allowed: &[&str]) -> Ev<String> {
        match arg {
            Ast::Flag(f) if allowed.contains(&f.as_str()) => Ok(f.clone()),
            other => Err(Fail::Err(format!(
                "expected one of {}, found `{}`",
                allowed.join(", "),
                format(other)
            ))),
        }
    }

    fn card_or_none(&self, arg: &Ast) -> Ev<Option<Cardinal>> {
        match arg {
            Ast::Flag(f) if f == "none" => Ok(None),
            other => self.card(other).map(Some),
        }
    }

    /// Queries whose value is a cardinal; usable as arguments.
    fn card_query(&self, name: &str, args: &[Ast]) -> Option<Ev<Cardinal>> {
        let ctx = &self.ctx;
        let one = |f: fn(&Cardinal) -> crate::Result<Cardinal>| -> Ev<Cardinal> {
            arity(name, args, 1, 1)?;
            Ok(f(&self.card(&args[0])?)?)
        };
        Some(match name {
            "cf" => one(cofinality),
            "succ" => one(Cardinal::succ),
            "lambda_r" => one(lambda_r),
            "lambda_star" => one(lambda_star),
            "exp_lt" => (|| {
                arity(name, args, 2, 2)?;
                let (lam, mu) = (self.card(&args[0])?, self.card(&args[1])?);
                settled(exp_lt(&lam, &mu, ctx)?)
            })(),
            "two_lt" => (|| {
                arity(name, args, 1, 1)?;
                settled(two_lt(&self.card(&args[0])?, ctx))
            })(),
            "wo_size" => (|| {
                arity(name, args, 2, 2)?;
                let (base, tail) = self.ordinal(&args[0])?;
                let lam = self.card(&args[1])?;
                Ok(wellorder_internal_size(base.as_ref(), &tail, &lam)?)
            })(),
            "colimit_bound" => (|| {
                arity(name, args, 2, 2)?;
                let (i, s) = (self.card(&args[0])?, self.card(&args[1])?);
                Ok(colimit_presentability_bound(&i, &s)?)
            })(),
            _ => return None,
        })
    }

    fn query(&self, name: &str, args: &[Ast]) -> Ev<Out> {
        if let Some(r) = self.card_query(name, args) {
            return r.map(text);
        }
        let ctx = &self.ctx;
        match name {
            "reg" => {
                arity(name, args, 1, 1)?;
                Ok(match regularity(&self.card(&args[0])?)? {
                    RegularityTag::Regular => text("regular"),
                    RegularityTag::Singular(cf) => Out {
                        value: Value::Text("singular".into()),
                        notes: vec![format!("cf = {cf}")],
                    },
                })
            }
            "closed" | "almost_closed" => {
                arity(name, args, 2, 2)?;
                let (lam, mu) = (self.card(&args[0])?, self.card(&args[1])?);
                let v = if name == "closed" {
                    is_mu_closed(&lam, &mu, ctx)?
                } else {
                    is_almost_mu_closed(&lam, &mu, ctx)?
                };
                boolean(v)
            }
            "triangle" => {
                arity(name, args, 2, 2)?;
                let (mu, lam) = (self.card(&args[0])?, self.card(&args[1])?);
                boolean(triangle(&mu, &lam, ctx)?)
            }
            "sch" => {
                arity(name, args, 2, 2)?;
                let (mu, lam) = (self.card(&args[0])?, self.card(&args[1])?);
                boolean(sch_unbounded(ctx, &mu, &lam)?)
            }
            "sch_at" => {
                arity(name, args, 2, 2)?;
                let (mu, card) = (self.card(&args[0])?, self.card(&args[1])?);
                boolean(ctx_implies_sch(ctx, &mu, &card)?)
            }
            "l_cf" => {
                arity(name, args, 1, 1)?;
                let w = settled(l_cofinality(&self.card(&args[0])?, ctx)?)?;
                Ok(match w.exact() {
                    Some(c) => text(c),
                    None => text(format!("[{}, {}]", w.lo, w.hi)),
                })
            }
            "internal_size" => {
                arity(name, args, 3, 3)?;
                let params = ClassParams::new(self.card(&args[0])?, self.card(&args[1])?);
                let lam = self.card(&args[2])?;
                let v = internal_size_of_cardinality(&params, &lam, ctx)?;
                let rank = v.presentability_rank(&params);
                let value = match &v {
                    SizeVerdict::Undetermined(m) => return Err(Fail::Indep(m.clone())),
                    SizeVerdict::BelowLs => format!("<= {}", params.ls),
                    SizeVerdict::Interval { lo, hi, .. } => format!("[{lo}, {hi}]"),
                    other => other.to_string(),
                };
                Ok(Out {
                    value: Value::Text(value),
                    notes: vec![format!("presentability rank: {rank}")],
                })
            }
            "rank_excluded" => {
                arity(name, args, 2, 2)?;
                let (theta, mu) = (self.card(&args[0])?, self.card(&args[1])?);
                boolean(rank_excluded_at(&theta, &mu, ctx)?)
            }
            "existence_window" => {
                arity(name, args, 2, 2)?;
                let (mu, lam) = (self.card(&args[0])?, self.card(&args[1])?);
                let w = existence_window(&mu, &lam, ctx)?;
                let hi = settled(w.hi)?;
                Ok(text(format!("[{}, {hi}]", w.lo)))
            }
            "existence_at" => {
                arity(name, args, 3, 4)?;
                let params = ClassParams::new(self.card(&args[0])?, self.card(&args[1])?)
                    .with_intersections(match args.get(3) {
                        Some(a) => self.flag(a, &["intersections", "none"])? == "intersections",
                        None => false,
                    });
                boolean(existence_at(&params, &self.card(&args[2])?, ctx)?)
            }
            "no_model_rule" => {
                arity(name, args, 6, 6)?;
                let params = ClassParams::new(self.card(&args[0])?, self.card(&args[1])?);
                let lam = self.card(&args[2])?;
                let gap = match (self.card_or_none(&args[3])?, self.card_or_none(&args[4])?) {
                    (Some(lo), Some(hi)) => Some((lo, hi)),
                    (None, None) => None,
                    _ => {
                        return Err(Fail::Err(
                            "gap bounds must both be cardinals or both be `none`".into(),
                        ))
                    }
                };
                let facts = SpectrumFacts::new(gap, self.card_or_none(&args[5])?)?;
                boolean(no_model_of_internal_size(&params, &lam, &facts, ctx)?)
            }
            "hilbert_card" => {
                arity(name, args, 1, 1)?;
                count(hilbert_count_by_cardinality(&self.card(&args[0])?, ctx)?)
            }
            "hilbert_internal" => {
                arity(name, args, 1, 1)?;
                count(hilbert_count_by_internal_size(&self.card(&args[0])?))
            }
            "shelah_card" | "shelah_internal" => {
                arity(name, args, 2, 2)?;
                let (mu, lam) = (self.card(&args[0])?, self.card(&args[1])?);
                count(if name == "shelah_card" {
                    shelah_count_by_cardinality(&mu, &lam, ctx)?
                } else {
                    shelah_count_by_internal_size(&mu, &lam, ctx)?
                })
            }
            _ => Err(Fail::Err(format!("unknown query `{name}`"))),
        }
    }
}

/// Evaluate a parsed statement or session and return the last record.
pub fn eval(ast: &Ast, ctx: &HypothesisContext) -> QueryResult {
    let mut ev = Evaluator::new(ctx.clone());
    ev.run(ast)
        .pop()
        .unwrap_or_else(|| QueryResult::error(String::new(), ctx, "empty input".into()))
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct BatchOutcome {
    pub records: Vec<QueryResult>,
    pub failed: bool,
}

/// One statement per line; `#` lines and blank lines are skipped, and
/// successful `assume` lines emit no record.
pub fn run_batch(input: impl BufRead, ctx: &HypothesisContext) -> std::io::Result<BatchOutcome> {
    let mut ev = Evaluator::new(ctx.clone());
    let mut out = BatchOutcome::default();
    for line in input.lines() {
        let line = line?;
        let trimmed = line.trim();
        if trimmed.is_empty() || trimmed.starts_with('#') {
            continue;
        }
        let ast = match parse(trimmed) {
            Ok(ast) => ast,
            Err(e) => {
                out.failed = true;
                out.records.push(QueryResult::error(
                    trimmed.to_string(),
                    ev.context(),
                    e.to_string(),
                ));
                continue;
            }
        };
        let stmts = match ast {
            Ast::Session(items) => items,
            single => vec![single],
        };
        for stmt in stmts {
            let is_assume = matches!(stmt, Ast::Assume(_));
            let rec = ev.statement(&stmt);
            if rec.verdict == VerdictKind::Error {
                out.failed = true;
            } else if is_assume {
                continue;
            }
            out.records.push(rec);
        }
    }
    Ok(out)
}
