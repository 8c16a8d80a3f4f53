//! Closed-form spectra for three concrete classes: infinite-dimensional
//! Hilbert spaces, well-orders of type at most λ⁺, and the constructible
//! class `K^μ` of levels `(L_α, ∈)`.

use std::fmt;

use crate::arith::{cofinality, is_mu_closed, is_regular, require_at_least, require_regular_mu};
use crate::cardinal::Cardinal;
use crate::error::{Error, Result};
use crate::hypotheses::{l_cofinality, sch_unbounded, HypothesisContext, SharpStatus};
use crate::ordinal::CnfOrdinal;
use crate::verdict::Verdict;

/// A number of isomorphism classes.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CountValue {
    Finite(u64),
    Card(Cardinal),
    AtLeastCard(Cardinal),
    Zero,
    Undetermined(Vec<String>),
}

impl CountValue {
    pub fn is_determined(&self) -> bool {
        !matches!(self, CountValue::Undetermined(_))
    }
}

impl fmt::Display for CountValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CountValue::Finite(n) => write!(f, "{n}"),
            CountValue::Card(c) => write!(f, "{c}"),
            CountValue::AtLeastCard(c) => write!(f, ">= {c}"),
            CountValue::Zero => f.write_str("0"),
            CountValue::Undetermined(_) => f.write_str("undetermined"),
        }
    }
}

const HILBERT_NEEDS_CONTINUUM: &str =
    "GCH (without it the count is |β|+1 where λ^ℵ0 = ℵ_(α+β), α least with ℵ_α^ℵ0 = λ^ℵ0)";

/// Infinite-dimensional Hilbert spaces of cardinality λ.
///
/// A basis of size κ gives cardinality κ^ℵ0, so under GCH the count is the
/// number of infinite κ ≤ λ with κ^ℵ0 = λ.
pub fn hilbert_count_by_cardinality(lam: &Cardinal, ctx: &HypothesisContext) -> Result<CountValue> {
    if !lam.is_uncountable() {
        return Err(Error::Precondition(format!(
            "λ = {lam} must be uncountable"
        )));
    }
    let cf = cofinality(lam)?;
    if !ctx.has_gch() {
        return Ok(CountValue::Undetermined(vec![
            HILBERT_NEEDS_CONTINUUM.into()
        ]));
    }
    if cf.is_aleph_zero() {
        return Ok(CountValue::Zero);
    }
    if let Some(pred) = lam.predecessor() {
        if cofinality(&pred)?.is_aleph_zero() {
            return Ok(CountValue::Finite(2));
        }
    }
    Ok(CountValue::Finite(1))
}

/// Hilbert spaces are determined by the size of an orthonormal basis.
pub fn hilbert_count_by_internal_size(_lam: &Cardinal) -> CountValue {
    CountValue::Finite(1)
}

/// Internal size `cf α + ℵ0` of the well-order `(α, ∈)` where
/// `α = base + tail` (the base read as its initial ordinal), in the class of
/// well-orders of type at most `lam⁺`.
pub fn wellorder_internal_size(
    base: Option<&Cardinal>,
    tail: &CnfOrdinal,
    lam: &Cardinal,
) -> Result<Cardinal> {
    if let Some(b) = base {
        let inside = match lam.succ() {
            Ok(top) => b < &top || (b == &top && tail.is_zero()),
            // An atom's successor is out of reach, but anything ≤ λ is below it.
            Err(_) => b <= lam,
        };
        if !inside {
            let alpha = if tail.is_zero() {
                b.to_string()
            } else {
                format!("{b}+{tail}")
            };
            return Err(Error::OutsideClass(format!(
                "order type {alpha} exceeds succ({lam})"
            )));
        }
        if tail.is_zero() {
            return cofinality(b);
        }
    }
    // A nonzero countable tail makes cf α countable, so the size is ℵ0.
    Ok(Cardinal::aleph_zero())
}

fn succ_count(lam: &Cardinal) -> Result<CountValue> {
    Ok(CountValue::Card(lam.succ()?))
}

/// `I(K^μ, λ)`: models of cardinality λ.
pub fn shelah_count_by_cardinality(
    mu: &Cardinal,
    lam: &Cardinal,
    ctx: &HypothesisContext,
) -> Result<CountValue> {
    require_regular_mu(mu)?;
    require_at_least(lam, mu)?;
    if ctx.has_v_equals_l() {
        return if &cofinality(lam)? < mu {
            Ok(CountValue::Finite(1))
        } else {
            succ_count(lam)
        };
    }
    match ctx.zero_sharp() {
        SharpStatus::Exists => succ_count(lam),
        SharpStatus::NotExists => without_sharp(mu, lam),
        SharpStatus::Unknown => {
            // Either 0♯ exists or it does not; agree or give up.
            let with = succ_count(lam)?;
            let without = without_sharp(mu, lam)?;
            if with == without {
                return Ok(with);
            }
            Ok(CountValue::Undetermined(vec![
                format!("sharp (then the count is {with})"),
                format!("no-sharp (then the count is {})", describe_count(&without)),
            ]))
        }
    }
}

fn describe_count(c: &CountValue) -> String {
    match c {
        CountValue::Undetermined(_) => "still open".into(),
        other => other.to_string(),
    }
}

/// Covering-lemma cases: cf^L(λ) lies in `[cf λ, max(cf λ, ℵ1)]`.
fn without_sharp(mu: &Cardinal, lam: &Cardinal) -> Result<CountValue> {
    let ctx = HypothesisContext::with_sharp(SharpStatus::NotExists);
    let window = match l_cofinality(lam, &ctx)? {
        Verdict::Determined(w) => w,
        Verdict::Independent(m) => return Ok(CountValue::Undetermined(m)),
    };
    if &window.hi < mu {
        return Ok(CountValue::Finite(1));
    }
    if &window.lo >= mu {
        return if is_regular(lam)? {
            Ok(CountValue::AtLeastCard(lam.clone()))
        } else {
            succ_count(lam)
        };
    }
    Ok(CountValue::Undetermined(vec![format!(
        "V=L (cf^L({lam}) may lie on either side of {mu})"
    )]))
}

/// Models of `K^μ` of internal size λ: a lower bound only.
pub fn shelah_count_by_internal_size(
    mu: &Cardinal,
    lam: &Cardinal,
    ctx: &HypothesisContext,
) -> Result<CountValue> {
    require_regular_mu(mu)?;
    require_at_least(lam, mu)?;
    if is_regular(lam)? {
        return Ok(CountValue::AtLeastCard(lam.succ()?));
    }
    let closed = is_mu_closed(lam, mu, ctx)?;
    if closed.holds() {
        return Ok(CountValue::AtLeastCard(lam.succ()?));
    }
    let sch = sch_unbounded(ctx, mu, lam)?;
    if sch.holds() {
        return Ok(CountValue::AtLeastCard(lam.succ()?));
    }
    let mut missing = sch.missing_assumptions().to_vec();
    for m in closed.missing_assumptions() {
        if !missing.contains(m) {
            missing.push(m.clone());
        }
    }
    if missing.is_empty() {
        missing.push(format!("{mu}-closedness of {lam}"));
    }
    Ok(CountValue::Undetermined(missing))
}
