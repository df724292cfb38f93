//! Exact Grothendieck-level computations for finite tensor categories.
//!
//! This crate works with the combinatorial shadow of a finite tensor category:
//! the based ring of simple-object classes, the Cartan matrix of projective
//! covers, and the duality bijection. On top of that data it computes
//! Frobenius-Perron dimensions as exact real algebraic numbers, the regular
//! and distinguished objects, freeness and divisibility certificates for
//! functor data, and complete NIM-rep censuses. A companion layer builds
//! finite-dimensional equivariant algebras (twisted group algebras, Clifford
//! smash products, cyclic-quotient algebras with a skew derivation) and
//! certifies the "no invariant right ideals" condition by exact operator
//! closure.
//!
//! No floating point is used anywhere on a trust path: algebraic numbers are
//! minimal polynomials plus isolating rational intervals, refined by
//! bisection and compared through Sturm sequences.
//!
//! The crate is organised as a library with runnable demos under
//! `examples/`; a thin `tenscat` binary exposes the same operations as
//! subcommands over JSON files.

pub mod algnum;
pub mod catalog;
pub mod cli;
pub mod field;
pub mod functors;
pub mod linalg;
pub mod nimrep;
pub mod poly;
pub mod rat;
pub mod report;
pub mod ring;
pub mod simplecheck;
pub mod tensorcat;

pub use algnum::{NumberField, NumberFieldElement, RealAlgebraic};
pub use ring::{BasedRing, GrVector};
pub use tensorcat::TensorCatData;
