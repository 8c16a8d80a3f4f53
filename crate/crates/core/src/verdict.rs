/// A hypothesis-relative answer.
///
/// `Independent` means the declared context neither proves nor refutes the
/// statement; it lists the assumptions that would settle it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Verdict<T> {
    Determined(T),
    Independent(Vec<String>),
}

impl<T> Verdict<T> {
    /// An `Independent` verdict naming a single missing assumption.
    pub fn missing(what: impl Into<String>) -> Self {
        Verdict::Independent(vec![what.into()])
    }

    pub fn is_determined(&self) -> bool {
        matches!(self, Verdict::Determined(_))
    }

    pub fn determined(&self) -> Option<&T> {
        match self {
            Verdict::Determined(v) => Some(v),
            Verdict::Independent(_) => None,
        }
    }

    pub fn into_determined(self) -> Option<T> {
        match self {
            Verdict::Determined(v) => Some(v),
            Verdict::Independent(_) => None,
        }
    }

    pub fn missing_assumptions(&self) -> &[String] {
        match self {
            Verdict::Determined(_) => &[],
            Verdict::Independent(m) => m,
        }
    }

    pub fn map<U>(self, f: impl FnOnce(T) -> U) -> Verdict<U> {
        match self {
            Verdict::Determined(v) => Verdict::Determined(f(v)),
            Verdict::Independent(m) => Verdict::Independent(m),
        }
    }

    pub fn and_then<U>(self, f: impl FnOnce(T) -> Verdict<U>) -> Verdict<U> {
        match self {
            Verdict::Determined(v) => f(v),
            Verdict::Independent(m) => Verdict::Independent(m),
        }
    }
}

impl Verdict<bool> {
    /// True only for `Determined(true)`.
    pub fn holds(&self) -> bool {
        matches!(self, Verdict::Determined(true))
    }

    /// True only for `Determined(false)`.
    pub fn fails(&self) -> bool {
        matches!(self, Verdict::Determined(false))
    }
}
