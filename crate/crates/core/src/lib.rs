//! Exact solver for bimatrix games and their leadership (commitment) variants.
//!
//! Everything is computed in exact rational arithmetic: maximin values,
//! Nash and twisted equilibria, lowest/highest leader payoffs under
//! commitment, zero-sum-generalization classifiers, the closed-form 2x2
//! theory, and the Traveler's Dilemma pipeline.

pub mod classify;
pub mod commitment;
pub mod equilibria;
pub mod game;
pub mod lp;
pub mod rational;
pub mod trd;
pub mod two_by_two;
