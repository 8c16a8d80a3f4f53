//! Exact symbolic arithmetic for infinite cardinals under declared
//! set-theoretic hypotheses, and the size calculus of μ-abstract elementary
//! classes built on top of it.
//!
//! Answers that depend on undecided axioms come back as
//! [`Verdict::Independent`] together with the assumptions that would settle
//! them.

pub mod arith;
pub mod cardinal;
pub mod dsl;
pub mod error;
pub mod hypotheses;
pub mod ordinal;
pub mod size;
pub mod spectra;
pub mod verdict;

pub use cardinal::{card_compare, card_index_classify, Aleph, Atom, CardClass, Cardinal};
pub use error::{Error, Result};
pub use hypotheses::{
    ctx_build, Assumption, Flags, HypothesisContext, SchAssumption, SchScope, SharpStatus,
};
pub use ordinal::{cnf_add, cnf_compare, ord_classify, CnfOrdinal, OrdinalClass};
pub use size::{ClassParams, RankReport, SizeVerdict, SpectrumFacts};
pub use spectra::CountValue;
pub use verdict::Verdict;
