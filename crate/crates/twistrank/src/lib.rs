//! Exact kernel-rank statistics of random matrices over prime fields, the
//! Markov chains those statistics induce on nonincreasing rank sequences, and
//! the number-theoretic machinery needed to check the model against real
//! arithmetic data: 2-Selmer ranks in the quadratic twist family of
//! `y^2 = x^3 - x`, 2-power class ranks of imaginary quadratic fields, and a
//! combinatorial engine for grids of twists over truncations of `Z_l[xi]`.
//!
//! The crate is organized around six mostly independent subsystems:
//!
//! * [`ffstats`] — exact matrix counts by rank and the kernel-dimension
//!   distributions they induce, including `n -> infinity` limits.
//! * [`chains`] — transition matrices, prefix probabilities, absorption
//!   analysis, and seeded sampling for the induced rank chains.
//! * [`arith`] — quadratic symbols, squarefree sieving, 2-descent and the
//!   Monsky-matrix fast path for 2-Selmer ranks, class groups of imaginary
//!   quadratic fields via reduced forms, and the Redei 4-rank fast path.
//! * [`grids`] — zero-sums-in-lines modules, closure and bases, delta and
//!   eta elements, `N_{I,b}` membership/decomposition, and the balanced
//!   labelling construction with its verifier.
//! * [`harness`] — reproducible sweeps comparing observed rank data against
//!   the model distributions, with CSV caches and JSON reports.
//!
//! Everything that is exposed as a probability is exact rational arithmetic;
//! floating point appears only in explicitly approximate limit computations
//! and in report summaries.

pub mod arith;
pub mod chains;
pub mod ffstats;
pub mod grids;
pub mod harness;
pub mod rational;

pub use rational::Rational;
