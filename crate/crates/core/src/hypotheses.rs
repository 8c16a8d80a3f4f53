//! Declared set-theoretic hypotheses and the entailment queries built on them.
//!
//! A context records GCH, V=L, the status of 0♯ and a finite list of SCH
//! instances. Queries answer `Determined` only when the declarations prove
//! the statement; absence of an axiom never refutes anything.

use std::collections::BTreeSet;
use std::fmt;

use crate::arith::{self, require_regular_mu};
use crate::cardinal::Cardinal;
use crate::error::{Error, Result};
use crate::verdict::Verdict;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum SharpStatus {
    Exists,
    NotExists,
    #[default]
    Unknown,
}

/// The class of cardinals an SCH declaration ranges over.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum SchScope {
    /// `SCH_{μ, ≥θ}`: every cardinal from θ upwards.
    AtLeast(Cardinal),
    /// `SCH_{μ, λ}`: some unnamed set unbounded in λ.
    UnboundedBelow(Cardinal),
    /// `SCH_{μ, S}` for an explicit finite `S`.
    ExplicitSet(BTreeSet<Cardinal>),
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SchAssumption {
    pub mu: Cardinal,
    pub scope: SchScope,
}

impl SchAssumption {
    pub fn new(mu: Cardinal, scope: SchScope) -> Self {
        SchAssumption { mu, scope }
    }

    /// Whether this declaration makes `card` almost μ-closed for a μ not
    /// exceeding the declared one.
    fn covers(&self, card: &Cardinal) -> bool {
        match &self.scope {
            SchScope::AtLeast(theta) => card >= theta,
            SchScope::ExplicitSet(set) => set.contains(card),
            // An unbounded S below a successor κ⁺ must contain κ; below a limit
            // λ it makes λ itself almost μ-closed.
            SchScope::UnboundedBelow(lam) => match lam.predecessor() {
                Some(pred) => &pred == card,
                None => lam == card,
            },
        }
    }
}

/// Flags accepted by [`ctx_build`].
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct Flags {
    pub gch: bool,
    pub v_equals_l: bool,
    pub zero_sharp: SharpStatus,
}

/// One `assume` statement.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Assumption {
    Gch,
    VEqualsL,
    Sharp,
    NoSharp,
    Sch(SchAssumption),
}

/// A deductively closed set of declared hypotheses.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct HypothesisContext {
    gch: bool,
    v_equals_l: bool,
    zero_sharp: SharpStatus,
    sch: Vec<SchAssumption>,
}

/// Closed interval of cardinals `[lo, hi]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CardInterval {
    pub lo: Cardinal,
    pub hi: Cardinal,
}

impl CardInterval {
    pub fn point(c: Cardinal) -> Self {
        CardInterval {
            lo: c.clone(),
            hi: c,
        }
    }

    pub fn exact(&self) -> Option<&Cardinal> {
        (self.lo == self.hi).then_some(&self.lo)
    }
}

/// Builds the closure of the given declarations: V=L brings GCH and ¬0♯.
pub fn ctx_build(flags: Flags, sch: Vec<SchAssumption>) -> Result<HypothesisContext> {
    if flags.v_equals_l && flags.zero_sharp == SharpStatus::Exists {
        return Err(Error::InconsistentContext("V=L and 0♯ exists".into()));
    }
    let mut sch = sch;
    sch.sort();
    sch.dedup();
    Ok(HypothesisContext {
        gch: flags.gch || flags.v_equals_l,
        v_equals_l: flags.v_equals_l,
        zero_sharp: if flags.v_equals_l {
            SharpStatus::NotExists
        } else {
            flags.zero_sharp
        },
        sch,
    })
}

impl HypothesisContext {
    /// The agnostic context.
    pub fn empty() -> Self {
        Self::default()
    }

    pub fn gch() -> Self {
        ctx_build(
            Flags {
                gch: true,
                ..Flags::default()
            },
            vec![],
        )
        .expect("consistent")
    }

    pub fn v_equals_l() -> Self {
        ctx_build(
            Flags {
                v_equals_l: true,
                ..Flags::default()
            },
            vec![],
        )
        .expect("consistent")
    }

    pub fn with_sharp(status: SharpStatus) -> Self {
        ctx_build(
            Flags {
                zero_sharp: status,
                ..Flags::default()
            },
            vec![],
        )
        .expect("consistent")
    }

    pub fn flags(&self) -> Flags {
        Flags {
            gch: self.gch,
            v_equals_l: self.v_equals_l,
            zero_sharp: self.zero_sharp,
        }
    }

    pub fn has_gch(&self) -> bool {
        self.gch
    }

    pub fn has_v_equals_l(&self) -> bool {
        self.v_equals_l
    }

    pub fn zero_sharp(&self) -> SharpStatus {
        self.zero_sharp
    }

    pub fn sch_assumptions(&self) -> &[SchAssumption] {
        &self.sch
    }

    /// Adds one declaration and re-closes.
    pub fn assume(&self, assumption: Assumption) -> Result<HypothesisContext> {
        let mut flags = self.flags();
        let mut sch = self.sch.clone();
        let set_sharp = |flags: &mut Flags, status: SharpStatus| {
            if flags.zero_sharp != SharpStatus::Unknown && flags.zero_sharp != status {
                return Err(Error::InconsistentContext(
                    "0♯ declared both to exist and not to exist".into(),
                ));
            }
            flags.zero_sharp = status;
            Ok(())
        };
        match assumption {
            Assumption::Gch => flags.gch = true,
            Assumption::VEqualsL => flags.v_equals_l = true,
            Assumption::Sharp => set_sharp(&mut flags, SharpStatus::Exists)?,
            Assumption::NoSharp => set_sharp(&mut flags, SharpStatus::NotExists)?,
            Assumption::Sch(a) => sch.push(a),
        }
        ctx_build(flags, sch)
    }

    /// Human-readable list of everything in force, in a fixed order.
    pub fn describe(&self) -> Vec<String> {
        let mut out = Vec::new();
        if self.v_equals_l {
            out.push("V=L".to_string());
        }
        if self.gch {
            out.push("GCH".to_string());
        }
        match self.zero_sharp {
            SharpStatus::Exists => out.push("sharp".to_string()),
            SharpStatus::NotExists => out.push("no-sharp".to_string()),
            SharpStatus::Unknown => {}
        }
        out.extend(self.sch.iter().map(|a| a.to_string()));
        out
    }

    /// True when `self` declares at least everything `other` does.
    pub fn extends(&self, other: &HypothesisContext) -> bool {
        (self.gch || !other.gch)
            && (self.v_equals_l || !other.v_equals_l)
            && (other.zero_sharp == SharpStatus::Unknown || self.zero_sharp == other.zero_sharp)
            && other.sch.iter().all(|a| self.sch.contains(a))
    }

    fn declared_covers(&self, mu: &Cardinal, card: &Cardinal) -> bool {
        self.sch.iter().any(|a| &a.mu >= mu && a.covers(card))
    }
}

/// Descriptor of a single missing instance `SCH_{μ, {card}}`.
pub fn sch_instance(mu: &Cardinal, card: &Cardinal) -> String {
    format!("SCH({mu}) at {card}")
}

/// Whether the context makes `card` almost μ-closed.
///
/// `μ = ℵ_0` needs nothing (θ^{<ω} = θ); under GCH every `card ≥ μ = 2^{<μ}`
/// qualifies; otherwise some declared SCH instance at a level `≥ μ` must
/// cover `card`.
pub fn ctx_implies_sch(
    ctx: &HypothesisContext,
    mu: &Cardinal,
    card: &Cardinal,
) -> Result<Verdict<bool>> {
    require_regular_mu(mu)?;
    if card < mu {
        return Err(Error::Precondition(format!("{card} is below μ = {mu}")));
    }
    if mu.is_aleph_zero() || ctx.gch || ctx.declared_covers(mu, card) {
        return Ok(Verdict::Determined(true));
    }
    Ok(Verdict::missing(sch_instance(mu, card)))
}

/// Whether the context proves `SCH_{μ,λ}`: almost μ-closed cardinals are
/// unbounded below λ.
pub fn sch_unbounded(
    ctx: &HypothesisContext,
    mu: &Cardinal,
    lam: &Cardinal,
) -> Result<Verdict<bool>> {
    require_regular_mu(mu)?;
    if lam < mu {
        return Err(Error::Precondition(format!("{lam} is below μ = {mu}")));
    }
    if mu.is_aleph_zero() || ctx.gch {
        return Ok(Verdict::Determined(true));
    }
    let declared = ctx
        .sch
        .iter()
        .filter(|a| &a.mu >= mu)
        .any(|a| match &a.scope {
            SchScope::UnboundedBelow(l) => l == lam,
            SchScope::AtLeast(theta) => match lam.predecessor() {
                Some(pred) => theta <= &pred,
                None => theta < lam,
            },
            SchScope::ExplicitSet(_) => false,
        });
    if declared {
        return Ok(Verdict::Determined(true));
    }
    if let Some(pred) = lam.predecessor() {
        if &pred >= mu && ctx_implies_sch(ctx, mu, &pred)?.holds() {
            return Ok(Verdict::Determined(true));
        }
    }
    Ok(Verdict::missing(
        SchAssumption::new(mu.clone(), SchScope::UnboundedBelow(lam.clone())).to_string(),
    ))
}

/// Cofinality of λ computed inside L.
///
/// Under V=L it is the true cofinality. If 0♯ exists every uncountable
/// cardinal is inaccessible in L, so the answer is λ itself. If 0♯ does not
/// exist, covering gives `cf λ ≤ cf^L λ ≤ cf λ + ℵ_1` (and never above λ).
pub fn l_cofinality(lam: &Cardinal, ctx: &HypothesisContext) -> Result<Verdict<CardInterval>> {
    let cf = arith::cofinality(lam)?;
    if ctx.v_equals_l {
        return Ok(Verdict::Determined(CardInterval::point(cf)));
    }
    Ok(match ctx.zero_sharp {
        SharpStatus::Exists => Verdict::Determined(CardInterval::point(lam.clone())),
        SharpStatus::NotExists => {
            let hi = std::cmp::max(cf.clone(), Cardinal::aleph(1));
            let hi = std::cmp::min(hi, lam.clone());
            Verdict::Determined(CardInterval { lo: cf, hi })
        }
        SharpStatus::Unknown => Verdict::missing("existence of 0♯ (assume sharp / no-sharp)"),
    })
}

impl fmt::Display for SchScope {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SchScope::AtLeast(c) => write!(f, ">= {c}"),
            SchScope::UnboundedBelow(c) => write!(f, "< {c}"),
            SchScope::ExplicitSet(set) => {
                f.write_str("{")?;
                for (i, c) in set.iter().enumerate() {
                    if i > 0 {
                        f.write_str(", ")?;
                    }
                    write!(f, "{c}")?;
                }
                f.write_str("}")
            }
        }
    }
}

impl fmt::Display for SchAssumption {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SCH({}, {})", self.mu, self.scope)
    }
}

impl fmt::Display for Assumption {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Assumption::Gch => f.write_str("GCH"),
            Assumption::VEqualsL => f.write_str("V=L"),
            Assumption::Sharp => f.write_str("sharp"),
            Assumption::NoSharp => f.write_str("no-sharp"),
            Assumption::Sch(a) => a.fmt(f),
        }
    }
}
