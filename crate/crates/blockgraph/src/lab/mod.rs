//! Canonical enumeration of small block graphs and the conjecture-testing
//! harnesses with persistent, resumable reports.

mod canon;
mod conjecture;
mod enumerate;
pub mod random;

pub use canon::{are_isomorphic_by_permutation, canonical_form, CanonicalForm, LabError};
pub use conjecture::{
    run_conjecture_1, run_conjecture_2, test_conjecture_1, test_conjecture_2, Conjecture1Options,
    Conjecture2Options, ConjectureReport, Counterexample, RunOutcome, TierSummary,
};
pub use enumerate::{enumerate_block_graphs, enumerate_tiers, Tier};
