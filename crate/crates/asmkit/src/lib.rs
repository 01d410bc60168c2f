//! Toolkit for alternating-sign matrices and their equivalent combinatorial
//! representations.
//!
//! An alternating-sign matrix (ASM) of order `n` is an `n x n` matrix over
//! `{-1, 0, +1}` in which every row and column sums to 1 and the nonzero
//! entries of every row and column alternate in sign. The crate provides:
//!
//! - [`core`]: the representation types (ASM, corner-sum matrix, height
//!   function, three-coloring, monotone triangle, six-vertex state, fully
//!   packed loop state, link pattern) with validated constructors and exact
//!   bijections between them.
//! - [`lattice`]: the distributive-lattice structure on height functions and
//!   the equivalent order-ideal picture on the underlying ranked poset.
//! - [`enumerate`]: exact counting (product formula, explicit enumeration,
//!   transfer-matrix counting), weighted `x`-enumeration, half-board counts,
//!   symmetry-class counts, and the Hankel-determinant identity.
//! - [`fpl`]: fully packed loop decomposition and link-pattern statistics.
//! - [`sample`]: perfect uniform sampling by monotone coupling from the past,
//!   plus square-tiling renderers.
//! - [`recurrence`]: sparse integer Laurent polynomials with exact division,
//!   the octahedron and cube recurrences, and decoding of octahedron
//!   monomials into compatible ASM pairs.
//! - [`cli`]: the `asmkit` command-line interface.

pub mod cli;
pub mod core;
pub mod enumerate;
pub mod fpl;
pub mod lattice;
pub mod recurrence;
pub mod sample;
