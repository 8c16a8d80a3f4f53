//! Cofinality and regularization, plus exponentiation relative to a
//! hypothesis context. Closedness and the ◁ ordering are built on `λ^{<μ}`.

use crate::cardinal::{card_index_classify, Aleph, CardClass, Cardinal, IndexShape};
use crate::error::{Error, Result};
use crate::hypotheses::{ctx_implies_sch, sch_instance, sch_unbounded, HypothesisContext};
use crate::verdict::Verdict;

/// Regular, or singular with the given cofinality.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum RegularityTag {
    Regular,
    Singular(Cardinal),
}

fn aleph_cofinality(a: &Aleph) -> Aleph {
    match a.index_shape() {
        IndexShape::Zero | IndexShape::LimitTail => Aleph::zero(),
        IndexShape::Successor(_) => a.clone(),
        // cf(ω_κ) = cf(κ) for the initial ordinal of κ.
        IndexShape::Base(b) => aleph_cofinality(b),
    }
}

pub fn cofinality(c: &Cardinal) -> Result<Cardinal> {
    match c {
        Cardinal::Aleph(a) => Ok(Cardinal::Aleph(aleph_cofinality(a))),
        Cardinal::Atom(a) if a.weakly_inaccessible() => Ok(c.clone()),
        Cardinal::Atom(a) => Err(Error::UnclassifiedAtom(a.name().to_string())),
    }
}

pub fn regularity(c: &Cardinal) -> Result<RegularityTag> {
    let cf = cofinality(c)?;
    Ok(if &cf == c {
        RegularityTag::Regular
    } else {
        RegularityTag::Singular(cf)
    })
}

pub fn is_regular(c: &Cardinal) -> Result<bool> {
    Ok(cofinality(c)? == *c)
}

/// Least regular cardinal `≥ c`.
pub fn lambda_r(c: &Cardinal) -> Result<Cardinal> {
    if is_regular(c)? {
        Ok(c.clone())
    } else {
        c.succ()
    }
}

/// `c⁺` for successor cardinals, `c` for limit cardinals.
pub fn lambda_star(c: &Cardinal) -> Result<Cardinal> {
    if let Cardinal::Atom(a) = c {
        return Err(Error::Precondition(format!(
            "λ* is not defined on atom `{}`",
            a.name()
        )));
    }
    match card_index_classify(c)? {
        CardClass::SuccessorCard(_) => c.succ(),
        CardClass::LimitCard => Ok(c.clone()),
    }
}

pub fn successor(c: &Cardinal) -> Result<Cardinal> {
    c.succ()
}

pub(crate) fn require_regular_mu(mu: &Cardinal) -> Result<()> {
    if is_regular(mu)? {
        Ok(())
    } else {
        Err(Error::MuNotRegular(mu.to_string()))
    }
}

pub(crate) fn require_at_least(lam: &Cardinal, mu: &Cardinal) -> Result<()> {
    if lam < mu {
        Err(Error::Precondition(format!("{lam} is below μ = {mu}")))
    } else {
        Ok(())
    }
}

/// `2^{<μ}`: `ℵ_0` for `μ = ℵ_0`, `μ` under GCH, otherwise independent.
pub fn two_lt(mu: &Cardinal, ctx: &HypothesisContext) -> Verdict<Cardinal> {
    if mu.is_aleph_zero() {
        Verdict::Determined(Cardinal::aleph_zero())
    } else if ctx.has_gch() {
        Verdict::Determined(mu.clone())
    } else {
        Verdict::missing(format!("2^<{mu} (GCH)"))
    }
}

/// `θ^{<μ} ≤ λ` for all `θ < λ`.
pub fn is_almost_mu_closed(
    lam: &Cardinal,
    mu: &Cardinal,
    ctx: &HypothesisContext,
) -> Result<Verdict<bool>> {
    require_regular_mu(mu)?;
    require_at_least(lam, mu)?;
    ctx_implies_sch(ctx, mu, lam)
}

/// `θ^{<μ} < λ` for all `θ < λ`.
///
/// Successors of cardinals of cofinality below μ are never μ-closed. Any
/// other λ is μ-closed exactly when `SCH_{μ,λ}` holds, so the answer turns on
/// whether the context proves that instance.
pub fn is_mu_closed(
    lam: &Cardinal,
    mu: &Cardinal,
    ctx: &HypothesisContext,
) -> Result<Verdict<bool>> {
    require_regular_mu(mu)?;
    require_at_least(lam, mu)?;
    if mu.is_aleph_zero() {
        return Ok(Verdict::Determined(true));
    }
    if let Some(pred) = lam.predecessor() {
        if &cofinality(&pred)? < mu {
            return Ok(Verdict::Determined(false));
        }
    }
    Ok(match sch_unbounded(ctx, mu, lam)? {
        Verdict::Determined(true) => Verdict::Determined(true),
        other => Verdict::Independent(other.missing_assumptions().to_vec()),
    })
}

/// Whether `lam = λ⁺` for some λ of cofinality below μ.
pub fn is_successor_of_small_cofinality(lam: &Cardinal, mu: &Cardinal) -> Result<bool> {
    match lam.predecessor() {
        Some(pred) => Ok(&cofinality(&pred)? < mu),
        None => Ok(false),
    }
}

/// `λ^{<μ}`.
///
/// With `cf λ ≥ μ` the value is λ once λ is almost μ-closed; with `cf λ < μ`
/// it is λ⁺ once λ⁺ is almost μ-closed. For `λ < μ` only GCH decides it
/// (the value is then μ).
pub fn exp_lt(lam: &Cardinal, mu: &Cardinal, ctx: &HypothesisContext) -> Result<Verdict<Cardinal>> {
    require_regular_mu(mu)?;
    if mu.is_aleph_zero() {
        return Ok(Verdict::Determined(lam.clone()));
    }
    if lam < mu {
        return Ok(if ctx.has_gch() {
            Verdict::Determined(mu.clone())
        } else {
            Verdict::missing(format!("{lam}^<{mu} with λ below μ (GCH)"))
        });
    }
    let cf = cofinality(lam)?;
    let candidate = if &cf >= mu { lam.clone() } else { lam.succ()? };
    if ctx_implies_sch(ctx, mu, &candidate)?.holds() {
        return Ok(Verdict::Determined(candidate));
    }
    let mut missing = Vec::new();
    for card in std::iter::once(lam.clone()).chain(lam.succ().ok()) {
        if !ctx_implies_sch(ctx, mu, &card)?.holds() {
            missing.push(sch_instance(mu, &card));
        }
    }
    Ok(Verdict::Independent(missing))
}

/// `μ ⊴ λ` for regular `μ ≤ λ`, decided through μ-closedness of λ.
pub fn triangle(mu: &Cardinal, lam: &Cardinal, ctx: &HypothesisContext) -> Result<Verdict<bool>> {
    require_regular_mu(mu)?;
    if !is_regular(lam)? {
        return Err(Error::Precondition(format!("λ = {lam} must be regular")));
    }
    require_at_least(lam, mu)?;
    if mu == lam {
        return Ok(Verdict::Determined(true));
    }
    let closed = is_mu_closed(lam, mu, ctx)?;
    if closed.holds() {
        return Ok(Verdict::Determined(true));
    }
    let two = two_lt(mu, ctx);
    if closed.fails() {
        if let Verdict::Determined(t) = &two {
            if lam > t {
                return Ok(Verdict::Determined(false));
            }
        }
    }
    let mut missing = closed.missing_assumptions().to_vec();
    missing.extend(two.missing_assumptions().iter().cloned());
    if missing.is_empty() {
        missing.push(format!(
            "{lam} ≤ 2^<{mu}: closedness alone does not decide ◁"
        ));
    }
    Ok(Verdict::Independent(missing))
}
