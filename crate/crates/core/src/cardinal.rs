//! Symbolic infinite cardinals.
//!
//! A non-atomic cardinal is `ℵ_{base + tail}` where `base`, when present, is
//! an uncountable cardinal read as its initial ordinal and `tail` is a CNF
//! ordinal below ε₀. Every tail is countable, so the decomposition is unique:
//! two alephs are equal iff their representations are. Atoms stand for
//! cardinals outside this notation (fixed points, inaccessibles) and sit
//! above every aleph.

use std::cmp::Ordering;
use std::fmt;

use crate::error::{Error, Result};
use crate::ordinal::{CnfOrdinal, OrdinalClass};

/// `ℵ_{base + tail}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Aleph {
    base: Option<Box<Aleph>>,
    tail: CnfOrdinal,
}

/// Shape of an aleph's index ordinal.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum IndexShape<'a> {
    /// Index 0, i.e. `ℵ_0`.
    Zero,
    /// Index is a successor; carries the predecessor cardinal.
    Successor(Aleph),
    /// Index is `base + tail` with `tail` a nonzero CNF limit; cofinality ω.
    LimitTail,
    /// Index is exactly the initial ordinal of `base`.
    Base(&'a Aleph),
}

impl Aleph {
    pub fn zero() -> Self {
        Aleph {
            base: None,
            tail: CnfOrdinal::zero(),
        }
    }

    /// `ℵ_n`.
    pub fn nth(n: u64) -> Self {
        Self::with_tail(CnfOrdinal::from_nat(n))
    }

    /// `ℵ_tail` for a countable index.
    pub fn with_tail(tail: CnfOrdinal) -> Self {
        Aleph { base: None, tail }
    }

    /// `ℵ_{base + tail}`. A base of `ℵ_0` is folded into the tail as `ω`.
    pub fn over(base: Aleph, tail: CnfOrdinal) -> Self {
        if base.is_aleph_zero() {
            return Aleph {
                base: None,
                tail: CnfOrdinal::omega().add(&tail),
            };
        }
        Aleph {
            base: Some(Box::new(base)),
            tail,
        }
    }

    pub fn base(&self) -> Option<&Aleph> {
        self.base.as_deref()
    }

    pub fn tail(&self) -> &CnfOrdinal {
        &self.tail
    }

    pub fn is_aleph_zero(&self) -> bool {
        self.base.is_none() && self.tail.is_zero()
    }

    pub fn index_shape(&self) -> IndexShape<'_> {
        match self.tail.classify() {
            OrdinalClass::Successor(pred) => IndexShape::Successor(Aleph {
                base: self.base.clone(),
                tail: pred,
            }),
            OrdinalClass::Limit => IndexShape::LimitTail,
            OrdinalClass::Zero => match &self.base {
                None => IndexShape::Zero,
                Some(b) => IndexShape::Base(b),
            },
        }
    }

    /// Next cardinal: the index tail grows by one.
    pub fn succ(&self) -> Aleph {
        Aleph {
            base: self.base.clone(),
            tail: self.tail.succ(),
        }
    }

    /// Nesting depth of bases (0 for countable indices).
    pub fn depth(&self) -> usize {
        self.base.as_ref().map_or(0, |b| 1 + b.depth())
    }
}

impl Ord for Aleph {
    fn cmp(&self, other: &Self) -> Ordering {
        // A base is an uncountable initial ordinal, so it dominates any
        // countable tail; equal bases fall back to the tails.
        match (&self.base, &other.base) {
            (None, None) => self.tail.cmp(&other.tail),
            (None, Some(_)) => Ordering::Less,
            (Some(_), None) => Ordering::Greater,
            (Some(a), Some(b)) => a.cmp(b).then_with(|| self.tail.cmp(&other.tail)),
        }
    }
}

impl PartialOrd for Aleph {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// An opaque large cardinal with declared properties.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Atom {
    name: String,
    rank: u32,
    weakly_inaccessible: bool,
}

impl Atom {
    pub fn new(name: impl Into<String>, rank: u32, weakly_inaccessible: bool) -> Self {
        Atom {
            name: name.into(),
            rank,
            weakly_inaccessible,
        }
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    /// Declared position among atoms; larger rank means larger cardinal.
    pub fn rank(&self) -> u32 {
        self.rank
    }

    pub fn weakly_inaccessible(&self) -> bool {
        self.weakly_inaccessible
    }
}

impl Ord for Atom {
    fn cmp(&self, other: &Self) -> Ordering {
        self.rank
            .cmp(&other.rank)
            .then_with(|| self.name.cmp(&other.name))
            .then_with(|| self.weakly_inaccessible.cmp(&other.weakly_inaccessible))
    }
}

impl PartialOrd for Atom {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// A symbolic infinite cardinal.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Cardinal {
    Aleph(Aleph),
    Atom(Atom),
}

/// Successor/limit classification of a cardinal.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CardClass {
    SuccessorCard(Cardinal),
    LimitCard,
}

impl Cardinal {
    /// `ℵ_n`.
    pub fn aleph(n: u64) -> Self {
        Cardinal::Aleph(Aleph::nth(n))
    }

    pub fn aleph_zero() -> Self {
        Cardinal::Aleph(Aleph::zero())
    }

    /// `ℵ_tail` for a countable CNF index.
    pub fn aleph_at(tail: CnfOrdinal) -> Self {
        Cardinal::Aleph(Aleph::with_tail(tail))
    }

    /// `ℵ_{base + tail}`; the base must be an aleph.
    pub fn aleph_over(base: &Cardinal, tail: CnfOrdinal) -> Result<Self> {
        match base {
            Cardinal::Aleph(b) => Ok(Cardinal::Aleph(Aleph::over(b.clone(), tail))),
            Cardinal::Atom(a) => Err(Error::AtomBase(a.name.clone())),
        }
    }

    /// A weakly inaccessible atom.
    pub fn inaccessible(name: impl Into<String>, rank: u32) -> Self {
        Cardinal::Atom(Atom::new(name, rank, true))
    }

    /// An atom with no declared properties.
    pub fn opaque(name: impl Into<String>, rank: u32) -> Self {
        Cardinal::Atom(Atom::new(name, rank, false))
    }

    pub fn as_aleph(&self) -> Option<&Aleph> {
        match self {
            Cardinal::Aleph(a) => Some(a),
            Cardinal::Atom(_) => None,
        }
    }

    pub fn is_atom(&self) -> bool {
        matches!(self, Cardinal::Atom(_))
    }

    pub fn is_aleph_zero(&self) -> bool {
        matches!(self, Cardinal::Aleph(a) if a.is_aleph_zero())
    }

    pub fn is_uncountable(&self) -> bool {
        !self.is_aleph_zero()
    }

    /// `κ⁺`. Undefined on atoms.
    pub fn succ(&self) -> Result<Cardinal> {
        match self {
            Cardinal::Aleph(a) => Ok(Cardinal::Aleph(a.succ())),
            Cardinal::Atom(a) => Err(Error::AtomSuccessor(a.name.clone())),
        }
    }

    /// The `κ` with `self = κ⁺`, if `self` is a successor cardinal.
    pub fn predecessor(&self) -> Option<Cardinal> {
        match self {
            Cardinal::Aleph(a) => match a.index_shape() {
                IndexShape::Successor(p) => Some(Cardinal::Aleph(p)),
                _ => None,
            },
            Cardinal::Atom(_) => None,
        }
    }

    pub fn is_successor(&self) -> bool {
        self.predecessor().is_some()
    }
}

impl Ord for Cardinal {
    fn cmp(&self, other: &Self) -> Ordering {
        match (self, other) {
            (Cardinal::Aleph(a), Cardinal::Aleph(b)) => a.cmp(b),
            (Cardinal::Aleph(_), Cardinal::Atom(_)) => Ordering::Less,
            (Cardinal::Atom(_), Cardinal::Aleph(_)) => Ordering::Greater,
            (Cardinal::Atom(a), Cardinal::Atom(b)) => a.cmp(b),
        }
    }
}

impl PartialOrd for Cardinal {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl From<Aleph> for Cardinal {
    fn from(a: Aleph) -> Self {
        Cardinal::Aleph(a)
    }
}

pub fn card_compare(a: &Cardinal, b: &Cardinal) -> Ordering {
    a.cmp(b)
}

/// Successor or limit cardinal. Atoms are limits only when declared weakly
/// inaccessible.
pub fn card_index_classify(c: &Cardinal) -> Result<CardClass> {
    match c {
        Cardinal::Aleph(a) => Ok(match a.index_shape() {
            IndexShape::Successor(p) => CardClass::SuccessorCard(Cardinal::Aleph(p)),
            _ => CardClass::LimitCard,
        }),
        Cardinal::Atom(a) if a.weakly_inaccessible => Ok(CardClass::LimitCard),
        Cardinal::Atom(a) => Err(Error::UnclassifiedAtom(a.name.clone())),
    }
}

impl fmt::Display for Aleph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("aleph(")?;
        match &self.base {
            Some(b) if self.tail.is_zero() => write!(f, "{b}")?,
            Some(b) => write!(f, "{b}+{}", self.tail)?,
            None => write!(f, "{}", self.tail)?,
        }
        f.write_str(")")
    }
}

impl fmt::Display for Atom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let head = if self.weakly_inaccessible {
            "inacc"
        } else {
            "atom"
        };
        if self.rank == 0 {
            write!(f, "{head}({})", self.name)
        } else {
            write!(f, "{head}({}, {})", self.name, self.rank)
        }
    }
}

impl fmt::Display for Cardinal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Cardinal::Aleph(a) => a.fmt(f),
            Cardinal::Atom(a) => a.fmt(f),
        }
    }
}
