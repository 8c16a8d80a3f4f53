//! Internal size versus cardinality in μ-AECs.
//!
//! Given the class parameters (μ, LS(K), whether the class admits
//! intersections) and a cardinality λ, these operations report what the
//! declared hypotheses pin down about internal sizes, presentability ranks
//! and the existence spectrum.

use std::fmt;

use crate::arith::{
    cofinality, exp_lt, is_mu_closed, is_regular, lambda_r, require_at_least, require_regular_mu,
};
use crate::cardinal::{card_index_classify, CardClass, Cardinal};
use crate::error::{Error, Result};
use crate::hypotheses::{sch_unbounded, HypothesisContext};
use crate::verdict::Verdict;

/// Longest predecessor chain scanned when looking for a certified lower
/// bound below λ.
const LOWER_BOUND_SCAN: usize = 512;

/// The numeric parameters of a μ-AEC.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassParams {
    pub mu: Cardinal,
    pub ls: Cardinal,
    pub admits_intersections: bool,
    pub arbitrarily_large_models: bool,
}

impl ClassParams {
    pub fn new(mu: Cardinal, ls: Cardinal) -> Self {
        ClassParams {
            mu,
            ls,
            admits_intersections: false,
            arbitrarily_large_models: true,
        }
    }

    pub fn with_intersections(mut self, yes: bool) -> Self {
        self.admits_intersections = yes;
        self
    }

    pub fn with_large_models(mut self, yes: bool) -> Self {
        self.arbitrarily_large_models = yes;
        self
    }

    /// μ regular, `LS(K) ≥ μ` and `LS(K)^{<μ} = LS(K)` whenever that is
    /// decidable (a cofinality below μ refutes it outright).
    pub fn check(&self, ctx: &HypothesisContext) -> Result<()> {
        require_regular_mu(&self.mu)?;
        require_at_least(&self.ls, &self.mu)?;
        let bad = || {
            Error::Precondition(format!(
                "LS(K) = {} must satisfy LS(K)^<μ = LS(K) for μ = {}",
                self.ls, self.mu
            ))
        };
        if cofinality(&self.ls)? < self.mu {
            return Err(bad());
        }
        if let Verdict::Determined(v) = exp_lt(&self.ls, &self.mu, ctx)? {
            if v != self.ls {
                return Err(bad());
            }
        }
        Ok(())
    }
}

/// What is known about `|M|_K` for a model of a given cardinality.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SizeVerdict {
    /// Cardinality at most LS(K); internal size is at most LS(K).
    BelowLs,
    Exact(Cardinal),
    /// One of `lo` or `hi = lo⁺`.
    TwoCandidates {
        lo: Cardinal,
        hi: Cardinal,
    },
    Interval {
        lo: Cardinal,
        hi: Cardinal,
        tight: bool,
    },
    Undetermined(Vec<String>),
}

/// Presentability rank implied by a [`SizeVerdict`]. Ranks are always
/// reported as successors of internal sizes; limit ranks are never asserted.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum RankReport {
    SuccessorOf(Cardinal),
    AtMostSuccessorOf(Cardinal),
    SuccessorOfOneOf(Cardinal, Cardinal),
    SuccessorBetween(Cardinal, Cardinal),
    Unknown,
}

impl SizeVerdict {
    pub fn presentability_rank(&self, params: &ClassParams) -> RankReport {
        match self {
            SizeVerdict::BelowLs => RankReport::AtMostSuccessorOf(params.ls.clone()),
            SizeVerdict::Exact(v) => RankReport::SuccessorOf(v.clone()),
            SizeVerdict::TwoCandidates { lo, hi } => {
                RankReport::SuccessorOfOneOf(lo.clone(), hi.clone())
            }
            SizeVerdict::Interval { lo, hi, .. } => {
                RankReport::SuccessorBetween(lo.clone(), hi.clone())
            }
            SizeVerdict::Undetermined(_) => RankReport::Unknown,
        }
    }

    /// Largest cardinal the verdict mentions, if any.
    pub fn upper(&self) -> Option<&Cardinal> {
        match self {
            SizeVerdict::Exact(c) => Some(c),
            SizeVerdict::TwoCandidates { hi, .. } | SizeVerdict::Interval { hi, .. } => Some(hi),
            SizeVerdict::BelowLs | SizeVerdict::Undetermined(_) => None,
        }
    }
}

/// Facts about a class's cardinality spectrum, supplied by the caller.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SpectrumFacts {
    /// No model has cardinality in the half-open `[lo, hi)`.
    pub no_models_in_cardinality_interval: Option<(Cardinal, Cardinal)>,
    pub categorical_in_cardinality: Option<Cardinal>,
}

impl SpectrumFacts {
    pub fn new(gap: Option<(Cardinal, Cardinal)>, categorical: Option<Cardinal>) -> Result<Self> {
        if let Some((lo, hi)) = &gap {
            if lo > hi {
                return Err(Error::Precondition(format!(
                    "empty gap interval [{lo}, {hi})"
                )));
            }
        }
        Ok(SpectrumFacts {
            no_models_in_cardinality_interval: gap,
            categorical_in_cardinality: categorical,
        })
    }
}

/// Internal size of a model of cardinality `lam`.
///
/// * `lam ≤ LS(K)`: below LS.
/// * `lam` μ-closed: exactly `lam`.
/// * `SCH_{μ,λ}` and `lam = λ₀⁺` with `cf λ₀ < μ`: `λ₀` or `lam`.
/// * Otherwise the interval `[lo, lam]`, where `lo` is the largest regular
///   μ-closed cardinal in `(LS(K), lam]` the context certifies, or `LS(K)⁺`.
pub fn internal_size_of_cardinality(
    params: &ClassParams,
    lam: &Cardinal,
    ctx: &HypothesisContext,
) -> Result<SizeVerdict> {
    params.check(ctx)?;
    if lam <= &params.ls {
        return Ok(SizeVerdict::BelowLs);
    }
    let mu = &params.mu;
    let closed = is_mu_closed(lam, mu, ctx)?;
    if closed.holds() {
        return Ok(SizeVerdict::Exact(lam.clone()));
    }
    if let Some(pred) = lam.predecessor() {
        if &cofinality(&pred)? < mu && sch_unbounded(ctx, mu, lam)?.holds() {
            return Ok(SizeVerdict::TwoCandidates {
                lo: pred,
                hi: lam.clone(),
            });
        }
    }
    let lo = match certified_lower_bound(params, lam, ctx)? {
        Some(lo) => lo,
        None => match params.ls.succ() {
            Ok(s) => s,
            Err(_) => {
                let mut reasons = vec![format!(
                    "no μ-closed regular cardinal in (LS(K), {lam}] is certified"
                )];
                reasons.extend(closed.missing_assumptions().iter().cloned());
                return Ok(SizeVerdict::Undetermined(reasons));
            }
        },
    };
    if &lo == lam {
        // r_K(M) > LS(K)⁺ and r_K(M) ≤ λ⁺ leave only λ⁺ when λ = LS(K)⁺.
        return Ok(SizeVerdict::Exact(lam.clone()));
    }
    Ok(SizeVerdict::Interval {
        lo,
        hi: lam.clone(),
        tight: false,
    })
}

fn certified_lower_bound(
    params: &ClassParams,
    lam: &Cardinal,
    ctx: &HypothesisContext,
) -> Result<Option<Cardinal>> {
    let mut cand = lam.clone();
    for _ in 0..LOWER_BOUND_SCAN {
        if cand <= params.ls {
            break;
        }
        if is_regular(&cand)? && is_mu_closed(&cand, &params.mu, ctx)?.holds() {
            return Ok(Some(cand));
        }
        match cand.predecessor() {
            Some(p) => cand = p,
            None => break,
        }
    }
    Ok(None)
}

/// `(|I|⁺ + sup λ_α)_r`: a colimit of a system indexed by `I` whose pieces
/// are `sup_component_pres`-presentable is presentable at this level.
pub fn colimit_presentability_bound(
    index_size: &Cardinal,
    sup_component_pres: &Cardinal,
) -> Result<Cardinal> {
    for c in [index_size, sup_component_pres] {
        if let Cardinal::Atom(a) = c {
            return Err(Error::Precondition(format!(
                "atom `{}` has no representable successor",
                a.name()
            )));
        }
    }
    let top = std::cmp::max(index_size.succ()?, sup_component_pres.clone());
    lambda_r(&top)
}

/// Window `[λ, λ^{<μ}]` containing the internal size of some model.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExistenceWindow {
    pub lo: Cardinal,
    pub hi: Verdict<Cardinal>,
}

pub fn existence_window(
    mu: &Cardinal,
    lam: &Cardinal,
    ctx: &HypothesisContext,
) -> Result<ExistenceWindow> {
    require_regular_mu(mu)?;
    if !is_regular(lam)? {
        return Err(Error::Precondition(format!("λ = {lam} must be regular")));
    }
    require_at_least(lam, mu)?;
    Ok(ExistenceWindow {
        lo: lam.clone(),
        hi: exp_lt(lam, mu, ctx)?,
    })
}

/// Whether θ is excluded as a presentability rank in any
/// `(μ, <λ)`-accessible category with `λ ≤ θ`.
pub fn rank_excluded_at(
    theta: &Cardinal,
    mu: &Cardinal,
    ctx: &HypothesisContext,
) -> Result<Verdict<bool>> {
    let limit = matches!(card_index_classify(theta)?, CardClass::LimitCard);
    if !limit || !is_regular(theta)? {
        return Err(Error::NotLimitRegular(theta.to_string()));
    }
    require_regular_mu(mu)?;
    require_at_least(theta, mu)?;
    if mu.is_aleph_zero() {
        return Ok(Verdict::Determined(true));
    }
    Ok(match is_mu_closed(theta, mu, ctx)? {
        Verdict::Determined(true) => Verdict::Determined(true),
        other => Verdict::Independent(non_empty(
            other.missing_assumptions().to_vec(),
            format!("{mu}-closedness of {theta}"),
        )),
    })
}

/// The no-model rule: if `λ < λ^{<μ}`, there are no models of cardinality
/// in `[λ, λ^{<μ})` and the class is categorical in `λ^{<μ}`, then no model
/// has internal size λ. Never answers `false`.
pub fn no_model_of_internal_size(
    params: &ClassParams,
    lam: &Cardinal,
    facts: &SpectrumFacts,
    ctx: &HypothesisContext,
) -> Result<Verdict<bool>> {
    params.check(ctx)?;
    if lam <= &params.ls {
        return Err(Error::Precondition(format!("λ = {lam} must exceed LS(K)")));
    }
    let top = match exp_lt(lam, &params.mu, ctx)? {
        Verdict::Determined(e) => e,
        Verdict::Independent(m) => return Ok(Verdict::Independent(m)),
    };
    if &top == lam {
        return Err(Error::RuleInapplicable(lam.to_string()));
    }
    let mut missing = Vec::new();
    let gap_ok = facts
        .no_models_in_cardinality_interval
        .as_ref()
        .is_some_and(|(lo, hi)| lo <= lam && hi >= &top);
    if !gap_ok {
        missing.push(format!("no models of cardinality in [{lam}, {top})"));
    }
    if facts.categorical_in_cardinality.as_ref() != Some(&top) {
        missing.push(format!("categoricity in cardinality {top}"));
    }
    Ok(if missing.is_empty() {
        Verdict::Determined(true)
    } else {
        Verdict::Independent(missing)
    })
}

/// Whether the class has a model of internal size `lam`.
pub fn existence_at(
    params: &ClassParams,
    lam: &Cardinal,
    ctx: &HypothesisContext,
) -> Result<Verdict<bool>> {
    params.check(ctx)?;
    if lam <= &params.ls {
        return Err(Error::Precondition(format!("λ = {lam} must exceed LS(K)")));
    }
    if !params.arbitrarily_large_models {
        return Err(Error::Precondition(
            "the class must have arbitrarily large models".into(),
        ));
    }
    let regular = is_regular(lam)?;
    if regular && params.admits_intersections {
        return Ok(Verdict::Determined(true));
    }
    let power = exp_lt(lam, &params.mu, ctx)?;
    let degenerate = power.determined() == Some(lam);
    if regular && degenerate {
        return Ok(Verdict::Determined(true));
    }
    let sch = sch_unbounded(ctx, &params.mu, lam)?;
    if sch.holds() && (degenerate || params.admits_intersections) {
        return Ok(Verdict::Determined(true));
    }
    let mut missing: Vec<String> = sch.missing_assumptions().to_vec();
    for m in power.missing_assumptions() {
        if !missing.contains(m) {
            missing.push(m.clone());
        }
    }
    Ok(Verdict::Independent(non_empty(
        missing,
        format!("{lam} = {lam}^<{}", params.mu),
    )))
}

fn non_empty(mut v: Vec<String>, fallback: String) -> Vec<String> {
    if v.is_empty() {
        v.push(fallback);
    }
    v
}

impl fmt::Display for SizeVerdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SizeVerdict::BelowLs => f.write_str("<= LS(K)"),
            SizeVerdict::Exact(c) => write!(f, "{c}"),
            SizeVerdict::TwoCandidates { lo, hi } => write!(f, "{lo} or {hi}"),
            SizeVerdict::Interval { lo, hi, .. } => write!(f, "[{lo}, {hi}]"),
            SizeVerdict::Undetermined(_) => f.write_str("undetermined"),
        }
    }
}

impl fmt::Display for RankReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RankReport::SuccessorOf(c) => write!(f, "succ({c})"),
            RankReport::AtMostSuccessorOf(c) => write!(f, "<= succ({c})"),
            RankReport::SuccessorOfOneOf(a, b) => write!(f, "succ({a}) or succ({b})"),
            RankReport::SuccessorBetween(a, b) => write!(f, "in [succ({a}), succ({b})]"),
            RankReport::Unknown => f.write_str("unknown"),
        }
    }
}
