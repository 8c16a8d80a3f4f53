//! Ordinals below ε₀ in Cantor normal form.
//!
//! An ordinal is stored as a list of `ω^exponent · coefficient` terms with
//! strictly decreasing exponents and positive coefficients. Because the
//! representation is canonical, structural equality is ordinal equality and
//! the derived `Ord` below is the ordinal order.

use std::cmp::Ordering;
use std::fmt;

/// One `ω^exponent · coefficient` summand.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CnfTerm {
    exponent: CnfOrdinal,
    coefficient: u64,
}

impl CnfTerm {
    pub fn exponent(&self) -> &CnfOrdinal {
        &self.exponent
    }

    pub fn coefficient(&self) -> u64 {
        self.coefficient
    }
}

/// An ordinal `< ε₀` in Cantor normal form. The empty term list is 0.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct CnfOrdinal {
    terms: Vec<CnfTerm>,
}

/// Shape of an ordinal: zero, successor (with its predecessor) or limit.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum OrdinalClass {
    Zero,
    Successor(CnfOrdinal),
    Limit,
}

/// Rejected term lists passed to [`CnfOrdinal::from_terms`].
#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum CnfError {
    #[error("coefficient must be positive")]
    ZeroCoefficient,
    #[error("exponents must strictly decrease")]
    NotDecreasing,
}

impl CnfOrdinal {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::from_nat(1)
    }

    pub fn from_nat(n: u64) -> Self {
        Self::term(Self::zero(), n)
    }

    pub fn omega() -> Self {
        Self::term(Self::one(), 1)
    }

    /// `ω^exponent`.
    pub fn omega_pow(exponent: CnfOrdinal) -> Self {
        Self::term(exponent, 1)
    }

    /// `ω^exponent · coefficient`; a zero coefficient gives 0.
    pub fn term(exponent: CnfOrdinal, coefficient: u64) -> Self {
        if coefficient == 0 {
            return Self::zero();
        }
        CnfOrdinal {
            terms: vec![CnfTerm {
                exponent,
                coefficient,
            }],
        }
    }

    /// Builds an ordinal from `(exponent, coefficient)` pairs that are already
    /// in normal form.
    pub fn from_terms(pairs: Vec<(CnfOrdinal, u64)>) -> Result<Self, CnfError> {
        let mut terms: Vec<CnfTerm> = Vec::with_capacity(pairs.len());
        for (exponent, coefficient) in pairs {
            if coefficient == 0 {
                return Err(CnfError::ZeroCoefficient);
            }
            if let Some(prev) = terms.last() {
                if prev.exponent <= exponent {
                    return Err(CnfError::NotDecreasing);
                }
            }
            terms.push(CnfTerm {
                exponent,
                coefficient,
            });
        }
        Ok(CnfOrdinal { terms })
    }

    pub fn terms(&self) -> &[CnfTerm] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// The natural number this ordinal equals, if it is finite.
    pub fn as_nat(&self) -> Option<u64> {
        match self.terms.as_slice() {
            [] => Some(0),
            [t] if t.exponent.is_zero() => Some(t.coefficient),
            _ => None,
        }
    }

    pub fn is_finite(&self) -> bool {
        self.as_nat().is_some()
    }

    /// Leading exponent, or `None` for 0.
    pub fn leading_exponent(&self) -> Option<&CnfOrdinal> {
        self.terms.first().map(|t| &t.exponent)
    }

    /// Nesting depth of exponents; 0 for 0, 1 for naturals, 2 for `ω^n` forms.
    pub fn height(&self) -> usize {
        self.terms
            .iter()
            .map(|t| 1 + t.exponent.height())
            .max()
            .unwrap_or(0)
    }

    pub fn classify(&self) -> OrdinalClass {
        match self.terms.last() {
            None => OrdinalClass::Zero,
            Some(last) if last.exponent.is_zero() => {
                let mut pred = self.clone();
                let t = pred.terms.last_mut().expect("non-empty");
                t.coefficient -= 1;
                if t.coefficient == 0 {
                    pred.terms.pop();
                }
                OrdinalClass::Successor(pred)
            }
            Some(_) => OrdinalClass::Limit,
        }
    }

    pub fn is_successor(&self) -> bool {
        matches!(self.classify(), OrdinalClass::Successor(_))
    }

    pub fn is_limit(&self) -> bool {
        matches!(self.classify(), OrdinalClass::Limit)
    }

    /// `self + 1`.
    pub fn succ(&self) -> Self {
        self.add(&Self::one())
    }

    /// Ordinal sum `self + rhs`.
    ///
    /// Terms of `self` whose exponent lies below the leading exponent of
    /// `rhs` are absorbed; a term with an equal exponent merges coefficients.
    pub fn add(&self, rhs: &CnfOrdinal) -> CnfOrdinal {
        let Some(lead) = rhs.terms.first() else {
            return self.clone();
        };
        let mut terms: Vec<CnfTerm> = Vec::with_capacity(self.terms.len() + rhs.terms.len());
        for t in &self.terms {
            match t.exponent.cmp(&lead.exponent) {
                Ordering::Greater => terms.push(t.clone()),
                Ordering::Equal => {
                    terms.push(CnfTerm {
                        exponent: t.exponent.clone(),
                        coefficient: t
                            .coefficient
                            .checked_add(lead.coefficient)
                            .expect("CNF coefficient overflow"),
                    });
                    terms.extend(rhs.terms[1..].iter().cloned());
                    return CnfOrdinal { terms };
                }
                Ordering::Less => break,
            }
        }
        terms.extend(rhs.terms.iter().cloned());
        CnfOrdinal { terms }
    }
}

impl Ord for CnfOrdinal {
    fn cmp(&self, other: &Self) -> Ordering {
        for (a, b) in self.terms.iter().zip(&other.terms) {
            let ord = a
                .exponent
                .cmp(&b.exponent)
                .then(a.coefficient.cmp(&b.coefficient));
            if ord != Ordering::Equal {
                return ord;
            }
        }
        self.terms.len().cmp(&other.terms.len())
    }
}

impl PartialOrd for CnfOrdinal {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Lexicographic comparison of normal forms.
pub fn cnf_compare(a: &CnfOrdinal, b: &CnfOrdinal) -> Ordering {
    a.cmp(b)
}

pub fn cnf_add(a: &CnfOrdinal, b: &CnfOrdinal) -> CnfOrdinal {
    a.add(b)
}

pub fn ord_classify(a: &CnfOrdinal) -> OrdinalClass {
    a.classify()
}

impl fmt::Display for CnfOrdinal {
    /// Query-language rendering: `w^2*3+w+4`, `0` for zero.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, t) in self.terms.iter().enumerate() {
            if i > 0 {
                f.write_str("+")?;
            }
            write_term(f, t)?;
        }
        Ok(())
    }
}

fn write_term(f: &mut fmt::Formatter<'_>, t: &CnfTerm) -> fmt::Result {
    if t.exponent.is_zero() {
        return write!(f, "{}", t.coefficient);
    }
    f.write_str("w")?;
    if t.exponent != CnfOrdinal::one() {
        f.write_str("^")?;
        if exponent_needs_parens(&t.exponent) {
            write!(f, "({})", t.exponent)?;
        } else {
            write!(f, "{}", t.exponent)?;
        }
    }
    if t.coefficient != 1 {
        write!(f, "*{}", t.coefficient)?;
    }
    Ok(())
}

/// An exponent can be written bare only if it is a natural or a single
/// `w^e` term with coefficient 1; anything else would re-associate.
fn exponent_needs_parens(e: &CnfOrdinal) -> bool {
    match e.terms.as_slice() {
        [t] => !(t.exponent.is_zero() || t.coefficient == 1),
        _ => true,
    }
}
