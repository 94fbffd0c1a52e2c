//! Exact combinatorial engine for Coxeter systems.
//!
//! Everything is presentation-driven and exact: words are reduced by
//! braid-move closure, normal forms are ShortLex minimal, balls are
//! enumerated breadth-first, and the folding condition can be scanned
//! over any finite group of elements. All values are immutable after
//! construction and operations are pure functions of their inputs.

pub mod ball;
pub mod cond_f;
pub mod error;
pub mod matrix;
pub mod reduce;
pub mod reflection;
pub mod word;

pub use ball::{group_order, Ball};
pub use cond_f::{condition_f_scan, ConditionF};
pub use error::{CoxeterError, Result};
pub use matrix::{CoxeterMatrix, MatrixEntry};
pub use reduce::{
    invert, left_descents, left_mul, length, multiply, normal_form, reduce, right_mul, Caps,
};
pub use reflection::{reflections_in_ball, ReflectionElement};
pub use word::{shortlex, GroupElement, Word};
