//! Worked values obtained from the oracles in `common`, frozen as constants.
//! Each test recomputes the oracle answer, checks it against the frozen
//! constant, then checks the engine.

mod common;

use std::cmp::Ordering;

use cardcalc::arith::{
    cofinality, exp_lt, is_almost_mu_closed, is_regular, lambda_r, triangle, two_lt,
};
use cardcalc::hypotheses::l_cofinality;
use cardcalc::size::{colimit_presentability_bound, internal_size_of_cardinality};
use cardcalc::spectra::hilbert_count_by_cardinality;
use cardcalc::{
    card_compare, card_index_classify, cnf_add, cnf_compare, CardClass, ClassParams, CnfOrdinal,
    CountValue, HypothesisContext, SharpStatus, SizeVerdict, Verdict,
};
use common::*;

/// Ordinals below ω^(ω+1) written as (coefficient of ω^ω, tuple below ω^4).
fn top_compare(a: (u64, Tup), b: (u64, Tup)) -> Ordering {
    a.cmp(&b)
}

fn gch() -> HypothesisContext {
    HypothesisContext::gch()
}

#[test]
fn omega_to_omega_beats_finite_height_terms() {
    let oracle = top_compare((1, [0; 4]), (0, [5, 0, 0, 7]));
    assert_eq!(oracle, Ordering::Greater);
    let w_w = CnfOrdinal::omega_pow(CnfOrdinal::omega());
    assert_eq!(cnf_compare(&w_w, &tup_to_cnf(&[5, 0, 0, 7])), oracle);
}

#[test]
fn tuple_addition_merges_at_the_leading_term() {
    let oracle = tup_add(&[0, 1, 1, 0], &[0, 0, 3, 2]);
    assert_eq!(oracle, [0, 1, 4, 2]);
    assert_eq!(
        cnf_add(&tup_to_cnf(&[0, 1, 1, 0]), &tup_to_cnf(&[0, 0, 3, 2])),
        tup_to_cnf(&oracle)
    );
}

#[test]
fn composite_indices_compare_by_tail() {
    let (x, y) = (oc(1, 1, 0), oc(1, 0, 1));
    assert_eq!(x.cmp(&y), Ordering::Greater);
    assert_eq!(
        card_compare(&x.to_engine(), &y.to_engine()),
        Ordering::Greater
    );
}

#[test]
fn successor_over_a_base() {
    let p = oc(1, 0, 1).pred().unwrap();
    assert_eq!(p, oc(1, 0, 0));
    assert_eq!(
        card_index_classify(&oc(1, 0, 1).to_engine()).unwrap(),
        CardClass::SuccessorCard(p.to_engine())
    );
}

#[test]
fn cofinality_of_initial_ordinal_index() {
    let cf = oc(1, 0, 0).cf();
    assert_eq!(cf, on(1));
    assert_eq!(
        cofinality(&oc(1, 0, 0).to_engine()).unwrap(),
        cf.to_engine()
    );
    assert!(is_regular(&cf.to_engine()).unwrap());
}

#[test]
fn limit_tail_is_singular() {
    assert!(!oc(1, 1, 0).is_regular());
    assert!(!is_regular(&oc(1, 1, 0).to_engine()).unwrap());
}

#[test]
fn regularization_of_aleph_omega_one() {
    let x = oc(1, 0, 0);
    let want = if x.is_regular() { x } else { x.succ() };
    assert_eq!(want, oc(1, 0, 1));
    assert_eq!(lambda_r(&x.to_engine()).unwrap(), want.to_engine());
}

#[test]
fn l_cofinality_of_aleph_omega_two_without_sharp() {
    // cf^L lies between cf(λ) and cf(λ) + ℵ_1; both ends collapse to ℵ_2.
    let cf = oc(2, 0, 0).cf();
    let hi = cf.max(on(1));
    assert_eq!((cf, hi), (on(2), on(2)));
    let w = l_cofinality(
        &oc(2, 0, 0).to_engine(),
        &HypothesisContext::with_sharp(SharpStatus::NotExists),
    )
    .unwrap()
    .into_determined()
    .unwrap();
    assert_eq!((w.lo, w.hi), (cf.to_engine(), hi.to_engine()));
}

#[test]
fn two_below_aleph_one_under_gch() {
    // 2^ℵ_0 = ℵ_0^ℵ_0 under GCH.
    let v = on(0).pow(on(0));
    assert_eq!(v, on(1));
    assert_eq!(
        two_lt(&on(1).to_engine(), &gch()),
        Verdict::Determined(v.to_engine())
    );
}

#[test]
fn aleph_omega_plus_one_is_almost_aleph_one_closed() {
    let lam = oc(0, 1, 1);
    let below: Vec<OCard> = (0..40).map(on).chain([oc(0, 1, 0)]).collect();
    let oracle = below.iter().all(|t| t.exp_lt(1) <= lam);
    assert!(oracle);
    assert!(
        is_almost_mu_closed(&lam.to_engine(), &on(1).to_engine(), &gch())
            .unwrap()
            .holds()
    );
}

#[test]
fn triangle_fails_above_aleph_omega() {
    let lam = oc(0, 1, 1);
    let two = on(0).pow(on(0));
    let closed = (0..40)
        .map(on)
        .chain([oc(0, 1, 0)])
        .all(|t| t.exp_lt(1) < lam);
    assert!(two < lam && !closed);
    assert!(triangle(&on(1).to_engine(), &lam.to_engine(), &gch())
        .unwrap()
        .fails());
}

#[test]
fn internal_size_just_above_ls_without_hypotheses() {
    // ℵ_2 is ℵ_1-closed iff CH, which ZFC alone leaves open...
    let ctx = HypothesisContext::empty();
    assert!(!exp_lt(&on(1).to_engine(), &on(1).to_engine(), &ctx)
        .unwrap()
        .is_determined());
    // ...but LS^{<μ} = LS with LS = ℵ_1 is CH, so the class parameters settle it.
    let p = ClassParams::new(on(1).to_engine(), on(1).to_engine());
    assert_eq!(
        internal_size_of_cardinality(&p, &on(2).to_engine(), &ctx).unwrap(),
        SizeVerdict::Exact(on(2).to_engine())
    );
}

#[test]
fn colimit_bound_regularizes_the_larger_input() {
    let (i, s) = (oc(0, 1, 0), on(2));
    let reg = |x: OCard| if x.is_regular() { x } else { x.succ() };
    let want = reg(i).max(reg(s));
    assert_eq!(want, oc(0, 1, 1));
    assert_eq!(
        colimit_presentability_bound(&i.to_engine(), &s.to_engine()).unwrap(),
        want.to_engine()
    );
}

#[test]
fn hilbert_count_at_aleph_one_under_gch() {
    // Basis sizes κ ≤ ℵ_1 whose space has cardinality κ^ℵ_0 = ℵ_1.
    let count = [on(0), on(1)]
        .iter()
        .filter(|k| k.pow(on(0)) == on(1))
        .count() as u64;
    assert_eq!(count, 2);
    assert_eq!(
        hilbert_count_by_cardinality(&on(1).to_engine(), &gch()).unwrap(),
        CountValue::Finite(count)
    );
}
