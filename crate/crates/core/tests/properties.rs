mod common;

use std::cmp::Ordering;

use cardcalc::arith::{
    cofinality, exp_lt, is_almost_mu_closed, is_mu_closed, is_regular, lambda_r, two_lt,
};
use cardcalc::dsl::{eval, parse, Ast, VerdictKind};
use cardcalc::hypotheses::{ctx_implies_sch, l_cofinality, sch_unbounded, SchAssumption, SchScope};
use cardcalc::size::{
    colimit_presentability_bound, existence_window, internal_size_of_cardinality,
};
use cardcalc::spectra::{hilbert_count_by_cardinality, shelah_count_by_cardinality};
use cardcalc::{
    card_compare, cnf_add, ctx_build, Assumption, Cardinal, ClassParams, CountValue,
    HypothesisContext, SharpStatus, SizeVerdict, Verdict,
};
use common::*;
use proptest::prelude::*;

fn regular_mu() -> impl Strategy<Value = Cardinal> {
    prop::sample::select(vec![
        on(0).to_engine(),
        on(1).to_engine(),
        on(2).to_engine(),
        oc(0, 1, 1).to_engine(),
        oc(1, 0, 1).to_engine(),
    ])
}

fn arb_context() -> impl Strategy<Value = HypothesisContext> {
    let sch = (
        1u64..3,
        prop_oneof![
            (2u64..6).prop_map(|n| SchScope::AtLeast(Cardinal::aleph(n))),
            arb_aleph().prop_map(SchScope::UnboundedBelow),
            prop::collection::btree_set(arb_aleph(), 1..3).prop_map(SchScope::ExplicitSet),
        ],
    )
        .prop_map(|(m, s)| Assumption::Sch(SchAssumption::new(Cardinal::aleph(m), s)));
    let item = prop_oneof![
        Just(Assumption::Gch),
        Just(Assumption::VEqualsL),
        Just(Assumption::Sharp),
        Just(Assumption::NoSharp),
        sch,
    ];
    prop::collection::vec(item, 0..3).prop_map(|items| {
        items
            .into_iter()
            .fold(HypothesisContext::empty(), |ctx, a| {
                ctx.assume(a.clone()).unwrap_or(ctx)
            })
    })
}

fn leading(a: &cardcalc::CnfOrdinal) -> Option<cardcalc::CnfOrdinal> {
    a.leading_exponent().cloned()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn cnf_add_is_associative(a in arb_ordinal(), b in arb_ordinal(), c in arb_ordinal()) {
        prop_assert_eq!(cnf_add(&cnf_add(&a, &b), &c), cnf_add(&a, &cnf_add(&b, &c)));
    }

    #[test]
    fn cnf_add_dominates_right_operand(a in arb_ordinal(), b in arb_ordinal()) {
        let s = cnf_add(&a, &b);
        prop_assert!(s >= b);
        // a is absorbed exactly when its leading term is below b's.
        let absorbed = a.is_zero() || (!b.is_zero() && leading(&a) < leading(&b));
        prop_assert_eq!(s == b, absorbed);
    }

    #[test]
    fn card_compare_is_a_total_order(a in arb_cardinal(), b in arb_cardinal(), c in arb_cardinal()) {
        prop_assert_eq!(card_compare(&a, &b), card_compare(&b, &a).reverse());
        if card_compare(&a, &b) != Ordering::Greater && card_compare(&b, &c) != Ordering::Greater {
            prop_assert_ne!(card_compare(&a, &c), Ordering::Greater);
        }
    }

    #[test]
    fn distinct_alephs_compare_unequal(a in arb_aleph(), b in arb_aleph()) {
        prop_assert_eq!(card_compare(&a, &b) == Ordering::Equal, a == b);
    }

    #[test]
    fn ctx_build_is_idempotent(ctx in arb_context()) {
        let again = ctx_build(ctx.flags(), ctx.sch_assumptions().to_vec()).unwrap();
        prop_assert_eq!(again, ctx);
    }

    #[test]
    fn stronger_contexts_keep_determined_verdicts(
        ctx in arb_context(),
        extra in arb_context(),
        mu in regular_mu(),
        lam in arb_aleph(),
    ) {
        prop_assume!(lam >= mu);
        let mut big = ctx.clone();
        for a in extra.describe().iter().filter_map(|d| cardcalc::dsl::parse_assumption(d).ok()) {
            if let Ok(next) = big.assume(a) {
                big = next;
            }
        }
        prop_assert!(big.extends(&ctx));
        let pairs = [
            (exp_lt(&lam, &mu, &ctx).unwrap().map(|c| c.to_string()),
             exp_lt(&lam, &mu, &big).unwrap().map(|c| c.to_string())),
            (is_mu_closed(&lam, &mu, &ctx).unwrap().map(|b| b.to_string()),
             is_mu_closed(&lam, &mu, &big).unwrap().map(|b| b.to_string())),
            (sch_unbounded(&ctx, &mu, &lam).unwrap().map(|b| b.to_string()),
             sch_unbounded(&big, &mu, &lam).unwrap().map(|b| b.to_string())),
            (ctx_implies_sch(&ctx, &mu, &lam).unwrap().map(|b| b.to_string()),
             ctx_implies_sch(&big, &mu, &lam).unwrap().map(|b| b.to_string())),
            (two_lt(&mu, &ctx).map(|c| c.to_string()), two_lt(&mu, &big).map(|c| c.to_string())),
        ];
        for (small, large) in pairs {
            if small.is_determined() {
                prop_assert_eq!(small, large);
            }
        }
    }

    #[test]
    fn gch_implies_every_sch_instance(mu in regular_mu(), card in arb_cardinal()) {
        prop_assume!(card >= mu);
        prop_assert!(ctx_implies_sch(&HypothesisContext::gch(), &mu, &card).unwrap().holds());
    }

    #[test]
    fn l_cofinality_under_v_equals_l_is_cofinality(lam in arb_aleph()) {
        let w = l_cofinality(&lam, &HypothesisContext::v_equals_l()).unwrap().into_determined().unwrap();
        let cf = cofinality(&lam).unwrap();
        prop_assert_eq!(&w.lo, &cf);
        prop_assert_eq!(&w.hi, &cf);
    }

    #[test]
    fn closed_implies_almost_closed(ctx in arb_context(), mu in regular_mu(), lam in arb_aleph()) {
        prop_assume!(lam >= mu);
        if is_mu_closed(&lam, &mu, &ctx).unwrap().holds() {
            prop_assert!(is_almost_mu_closed(&lam, &mu, &ctx).unwrap().holds());
        }
    }

    #[test]
    fn gch_exp_lt_matches_oracle(lam in arb_oracle_card(), m in 0u64..3) {
        let got = exp_lt(&lam.to_engine(), &Cardinal::aleph(m), &HypothesisContext::gch()).unwrap();
        prop_assert_eq!(got, Verdict::Determined(lam.exp_lt(m).to_engine()));
    }

    #[test]
    fn existence_window_starts_at_lambda(ctx in arb_context(), mu in regular_mu(), pre in arb_aleph()) {
        let lam = pre.succ().unwrap();
        prop_assume!(lam >= mu && is_regular(&lam).unwrap());
        let w = existence_window(&mu, &lam, &ctx).unwrap();
        prop_assert_eq!(&w.lo, &lam);
        if let Verdict::Determined(hi) = &w.hi {
            prop_assert!(&w.lo <= hi);
        }
    }

    #[test]
    fn colimit_bound_is_regular_and_large(i in arb_aleph(), s in arb_aleph()) {
        let b = colimit_presentability_bound(&i, &s).unwrap();
        prop_assert!(is_regular(&b).unwrap());
        prop_assert!(b >= lambda_r(&i).unwrap() && b >= lambda_r(&s).unwrap());
    }

    #[test]
    fn two_candidates_have_successor_shape(ctx in arb_context(), lam in arb_aleph()) {
        let p = ClassParams::new(Cardinal::aleph(1), Cardinal::aleph(1));
        if let Ok(SizeVerdict::TwoCandidates { lo, hi }) = internal_size_of_cardinality(&p, &lam, &ctx) {
            prop_assert_eq!(lo.succ().unwrap(), hi);
            prop_assert!(cofinality(&lo).unwrap() < p.mu);
        }
    }

    #[test]
    fn hilbert_counts_under_gch_are_small(lam in arb_aleph()) {
        prop_assume!(lam.is_uncountable());
        let c = hilbert_count_by_cardinality(&lam, &HypothesisContext::gch()).unwrap();
        prop_assert!(matches!(c, CountValue::Zero | CountValue::Finite(1) | CountValue::Finite(2)));
    }

    #[test]
    fn v_equals_l_refines_no_sharp(mu in regular_mu(), lam in arb_aleph()) {
        prop_assume!(lam >= mu);
        let vl = shelah_count_by_cardinality(&mu, &lam, &HypothesisContext::v_equals_l()).unwrap();
        let ns = shelah_count_by_cardinality(&mu, &lam, &HypothesisContext::with_sharp(SharpStatus::NotExists)).unwrap();
        if ns.is_determined() {
            let admissible = vl == ns || matches!((&vl, &ns),
                (CountValue::Card(d), CountValue::AtLeastCard(c)) if d >= c);
            prop_assert!(admissible, "V=L {:?} vs no-sharp {:?}", vl, ns);
        }
        if cofinality(&lam).unwrap() >= mu {
            prop_assert_eq!(vl, CountValue::Card(lam.succ().unwrap()));
        }
    }

    #[test]
    fn hilbert_pairs_are_the_two_candidates(lam in arb_aleph()) {
        let gch = HypothesisContext::gch();
        let up = lam.succ().unwrap();
        if hilbert_count_by_cardinality(&up, &gch).unwrap() == CountValue::Finite(2)
            && cofinality(&lam).unwrap().is_aleph_zero()
            && lam > Cardinal::aleph(1)
        {
            let p = ClassParams::new(Cardinal::aleph(1), Cardinal::aleph(1));
            prop_assert_eq!(
                internal_size_of_cardinality(&p, &up, &gch).unwrap(),
                SizeVerdict::TwoCandidates { lo: lam, hi: up }
            );
        }
    }

    #[test]
    fn independent_records_name_a_missing_assumption(
        ctx in arb_context(),
        name in prop::sample::select(vec![
            "exp_lt", "closed", "almost_closed", "triangle", "sch", "sch_at", "existence_window",
            "shelah_card", "shelah_internal",
        ]),
        a in arb_aleph(),
        mu in regular_mu(),
    ) {
        let (first, second) = match name {
            "exp_lt" | "closed" | "almost_closed" => (a.clone(), mu.clone()),
            _ => (mu.clone(), a.clone()),
        };
        let ast = Ast::Query {
            name: name.to_string(),
            args: vec![Ast::Cardinal(first), Ast::Cardinal(second)],
        };
        let r = eval(&ast, &ctx);
        if r.verdict == VerdictKind::Independent {
            prop_assert!(!r.missing().is_empty());
            prop_assert!(r.value.is_none());
        }
        if r.verdict == VerdictKind::Determined {
            prop_assert!(r.value.is_some());
        }
        prop_assert_eq!(eval(&ast, &ctx).to_json(), r.to_json());
    }

    #[test]
    fn parse_never_panics(text in "[a-z_0-9(),;+*^{}<>= -]{0,40}") {
        let _ = parse(&text);
    }
}
