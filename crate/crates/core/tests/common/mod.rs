//! Independent oracles and generators shared by the integration tests.
//!
//! The oracles use their own encodings and never call engine arithmetic;
//! only the final conversion to engine values goes through constructors.

#![allow(dead_code)]

use std::collections::BTreeSet;

use cardcalc::dsl::Ast;
use cardcalc::hypotheses::{Assumption, SchAssumption, SchScope};
use cardcalc::{Cardinal, CnfOrdinal, OrdinalClass};
use proptest::prelude::*;

// ---------------------------------------------------------------------------
// Ordinals below ω^4 as coefficient tuples [c3, c2, c1, c0].

pub type Tup = [u64; 4];

pub fn tup_to_cnf(t: &Tup) -> CnfOrdinal {
    let pairs = t
        .iter()
        .enumerate()
        .filter(|(_, &c)| c > 0)
        .map(|(i, &c)| (CnfOrdinal::from_nat(3 - i as u64), c))
        .collect();
    CnfOrdinal::from_terms(pairs).expect("tuple terms are in normal form")
}

pub fn tup_add(a: &Tup, b: &Tup) -> Tup {
    let Some(lead) = b.iter().position(|&c| c > 0) else {
        return *a;
    };
    let mut out = [0; 4];
    out[..lead].copy_from_slice(&a[..lead]);
    out[lead] = a[lead] + b[lead];
    out[lead + 1..].copy_from_slice(&b[lead + 1..]);
    out
}

#[derive(Debug, PartialEq, Eq)]
pub enum TupClass {
    Zero,
    Successor(Tup),
    Limit,
}

pub fn tup_classify(t: &Tup) -> TupClass {
    if t.iter().all(|&c| c == 0) {
        TupClass::Zero
    } else if t[3] > 0 {
        let mut p = *t;
        p[3] -= 1;
        TupClass::Successor(p)
    } else {
        TupClass::Limit
    }
}

pub fn engine_class_matches(got: &OrdinalClass, want: &TupClass) -> bool {
    match (got, want) {
        (OrdinalClass::Zero, TupClass::Zero) | (OrdinalClass::Limit, TupClass::Limit) => true,
        (OrdinalClass::Successor(p), TupClass::Successor(q)) => *p == tup_to_cnf(q),
        _ => false,
    }
}

/// Every tuple with coefficients ≤ `max`.
pub fn all_tuples(max: u64) -> Vec<Tup> {
    let mut out = Vec::new();
    for a in 0..=max {
        for b in 0..=max {
            for c in 0..=max {
                for d in 0..=max {
                    out.push([a, b, c, d]);
                }
            }
        }
    }
    out
}

// ---------------------------------------------------------------------------
// Cardinals ℵ_(ω_k + ω·b + c) with k ∈ {0, 1, 2} (k = 0: no base) and
// the classical GCH exponentiation recursion on them.

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct OCard {
    pub k: u64,
    pub b: u64,
    pub c: u64,
}

pub const fn oc(k: u64, b: u64, c: u64) -> OCard {
    OCard { k, b, c }
}

/// ℵ_n for finite n.
pub const fn on(n: u64) -> OCard {
    oc(0, 0, n)
}

impl OCard {
    pub fn to_engine(self) -> Cardinal {
        let mut pairs = Vec::new();
        if self.b > 0 {
            pairs.push((CnfOrdinal::from_nat(1), self.b));
        }
        if self.c > 0 {
            pairs.push((CnfOrdinal::from_nat(0), self.c));
        }
        let tail = CnfOrdinal::from_terms(pairs).unwrap();
        if self.k == 0 {
            Cardinal::aleph_at(tail)
        } else {
            Cardinal::aleph_over(&Cardinal::aleph(self.k), tail).unwrap()
        }
    }

    pub fn cf(self) -> OCard {
        match (self.k, self.b, self.c) {
            (0, 0, 0) => on(0),
            (k, 0, 0) => on(k),
            (_, _, 0) => on(0),
            _ => self,
        }
    }

    pub fn succ(self) -> OCard {
        oc(self.k, self.b, self.c + 1)
    }

    pub fn pred(self) -> Option<OCard> {
        (self.c > 0).then(|| oc(self.k, self.b, self.c - 1))
    }

    pub fn is_regular(self) -> bool {
        self.cf() == self
    }

    /// κ^ν for infinite ν under GCH.
    pub fn pow(self, nu: OCard) -> OCard {
        if self <= nu {
            nu.succ()
        } else if self.cf() <= nu {
            self.succ()
        } else {
            self
        }
    }

    /// λ^{<μ} for μ = ℵ_m; for m ≥ 1 this is λ^{ℵ_(m-1)}.
    pub fn exp_lt(self, m: u64) -> OCard {
        if m == 0 {
            self
        } else {
            self.pow(on(m - 1))
        }
    }

    pub fn successor_of_small_cf(self, mu: OCard) -> bool {
        self.pred().is_some_and(|p| p.cf() < mu)
    }
}

/// ℵ_(ω_k + ω·b + c) for k < 3, b ≤ `max_b`, c ≤ `max_c`.
pub fn ocards(max_b: u64, max_c: u64) -> Vec<OCard> {
    let mut out = Vec::new();
    for k in 0..3 {
        for b in 0..=max_b {
            for c in 0..=max_c {
                out.push(oc(k, b, c));
            }
        }
    }
    out
}

// ---------------------------------------------------------------------------
// Proptest strategies over engine values.

pub fn arb_small_ordinal() -> impl Strategy<Value = CnfOrdinal> {
    prop::array::uniform4(0u64..4).prop_map(|t| tup_to_cnf(&t))
}

/// CNF ordinals whose exponents are themselves ordinals below ω^4.
pub fn arb_ordinal() -> impl Strategy<Value = CnfOrdinal> {
    prop::collection::btree_map(arb_small_ordinal(), 1u64..6, 0..4).prop_map(|m| {
        let pairs: Vec<_> = m.into_iter().rev().collect();
        CnfOrdinal::from_terms(pairs).unwrap()
    })
}

/// Alephs with a countable tail over no base, ℵ_n, or ℵ_(ω_1 + ...).
pub fn arb_aleph() -> impl Strategy<Value = Cardinal> {
    let base = prop_oneof![
        Just(None),
        (1u64..4).prop_map(|n| Some(Cardinal::aleph(n))),
        arb_ordinal().prop_map(|t| Some(Cardinal::aleph_over(&Cardinal::aleph(1), t).unwrap())),
    ];
    (base, arb_ordinal()).prop_map(|(b, t)| match b {
        None => Cardinal::aleph_at(t),
        Some(b) => Cardinal::aleph_over(&b, t).unwrap(),
    })
}

pub fn arb_atom() -> impl Strategy<Value = Cardinal> {
    ("[a-z][a-z0-9_]{0,5}", 0u32..3, any::<bool>()).prop_map(|(n, r, inacc)| {
        if inacc {
            Cardinal::inaccessible(n, r)
        } else {
            Cardinal::opaque(n, r)
        }
    })
}

pub fn arb_cardinal() -> impl Strategy<Value = Cardinal> {
    prop_oneof![9 => arb_aleph(), 1 => arb_atom()]
}

pub fn arb_oracle_card() -> impl Strategy<Value = OCard> {
    (0u64..3, 0u64..4, 0u64..12).prop_map(|(k, b, c)| oc(k, b, c))
}

fn arb_assumption() -> impl Strategy<Value = Assumption> {
    let scope = prop_oneof![
        arb_cardinal().prop_map(SchScope::AtLeast),
        arb_cardinal().prop_map(SchScope::UnboundedBelow),
        prop::collection::btree_set(arb_cardinal(), 1..3)
            .prop_map(|s: BTreeSet<Cardinal>| SchScope::ExplicitSet(s)),
    ];
    prop_oneof![
        Just(Assumption::Gch),
        Just(Assumption::VEqualsL),
        Just(Assumption::Sharp),
        Just(Assumption::NoSharp),
        (arb_cardinal(), scope).prop_map(|(m, s)| Assumption::Sch(SchAssumption::new(m, s))),
    ]
}

const FLAGS: &[&str] = &["intersections", "none", "categorical", "w", "x_1"];
const NAMES: &[&str] = &["cf", "exp_lt", "internal_size", "shelah_card", "frob"];

fn arb_leaf() -> impl Strategy<Value = Ast> {
    let ord_base = prop_oneof![
        Just(None),
        arb_cardinal()
            .prop_filter("canonical base", |c| !c.is_aleph_zero())
            .prop_map(Some),
    ];
    prop_oneof![
        arb_cardinal().prop_map(Ast::Cardinal),
        (ord_base, arb_ordinal()).prop_map(|(base, tail)| Ast::Ordinal { base, tail }),
        prop::sample::select(FLAGS).prop_map(|f| Ast::Flag(f.to_string())),
    ]
}

fn arb_expr() -> impl Strategy<Value = Ast> {
    arb_leaf().prop_recursive(3, 24, 4, |inner| {
        (
            prop::sample::select(NAMES),
            prop::collection::vec(inner, 0..4),
        )
            .prop_map(|(n, args)| Ast::Query {
                name: n.to_string(),
                args,
            })
    })
}

fn arb_statement() -> impl Strategy<Value = Ast> {
    prop_oneof![
        4 => arb_expr().prop_filter("statement-level flag", |a| {
            !matches!(a, Ast::Flag(f) if f == "assume")
        }),
        1 => arb_assumption().prop_map(Ast::Assume),
    ]
}

/// Canonical ASTs: a statement, or a session of at least two statements.
pub fn arb_ast() -> impl Strategy<Value = Ast> {
    prop_oneof![
        3 => arb_statement(),
        1 => prop::collection::vec(arb_statement(), 2..4).prop_map(Ast::Session),
    ]
}
