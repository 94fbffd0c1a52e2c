//! Recognizer for Coxeter systems among concrete finite groups.
//!
//! Given a finite group presented by involutive permutation generators,
//! this crate closes the group breadth-first, scans the folding
//! condition over every triple, recovers the Coxeter matrix from
//! pairwise product orders, and certifies the verdict by comparing
//! group orders against the abstract enumeration.

pub mod certify;
pub mod error;
pub mod group;
pub mod perm;
pub mod realize;

pub use certify::{
    certify_coxeter, condition_f_decide, recover_matrix, Certification, FoldingCounterexample,
    FoldingOutcome,
};
pub use error::{RecognizerError, Result};
pub use group::{close_group, FiniteActionGroup};
pub use perm::Permutation;
pub use realize::{matrices_equal_up_to_relabel, regular_realization};
