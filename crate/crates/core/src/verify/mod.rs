//! Desk-scale verification: exhaustive enumeration for the propositions,
//! numeric grids for the lemmas.

mod lemma;
mod proposition;

pub use lemma::{
    default_mu_grid, interior_points, verify_lemma1, verify_lemma2, verify_lemma3, Counterexample,
    Lemma, LemmaReport, Relation, CROSSING_TOLERANCE, DEFAULT_POINTS, STRICT_MARGIN,
};
pub use proposition::{
    verify_prop1, verify_prop2, ClassRecord, ClassTally, Enumeration, Proposition,
    PropositionReport, CLASS_MERGE_TOLERANCE, CLASS_SEPARATION, MAX_ENUMERATION_ARITY,
    MI_TOLERANCE,
};
