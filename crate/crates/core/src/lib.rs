//! Exact computations with noncommutative Pfaffians in the universal enveloping
//! algebra of o_N, the o_5 quasi-spin model of a nuclear j-shell, and the
//! fourth quantum number that separates repeated quasi-spin multiplets.

// errors carry exact rationals; index loops mirror the matrix formulas
#![allow(clippy::result_large_err, clippy::needless_range_loop)]

pub mod arith;
pub mod lie;
pub mod uea;
pub mod fock;
pub mod repr;
pub mod gt;
pub mod report;
pub mod suites;
