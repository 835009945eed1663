//! Exact classification of indecomposable exact module categories over
//! pointed fusion categories.
//!
//! A pointed fusion category is presented by a finite group `G` together with
//! a 3-cocycle `ω` on `G` valued in roots of unity. Its indecomposable exact
//! module categories are parametrized by pairs `(H, β)` of a subgroup `H ≤ G`
//! and a 2-cochain `β` on `H` whose coboundary matches the restriction of `ω`,
//! taken up to conjugation twisted by an explicit 2-cochain correction.
//!
//! Everything here is exact arithmetic: scalars in `k^×` are encoded as
//! exponents in `Z/M` (roots of unity `e^{2πi/M}`), so every check is an
//! integer equality. The crate is `no_std` (with `alloc`); all types are
//! immutable after construction and every operation is pure.
//!
//! The main entry points are [`classify::classify`] (the full report),
//! [`classify::fiber_functors`], [`classify::are_equivalent`], and
//! [`cohomology::CohomologyGroup`]. The [`oracle`] module holds a slow
//! brute-force classifier used to cross-check reports.

#![no_std]

extern crate alloc;

#[cfg(test)]
extern crate std;

pub mod classify;
pub mod cochain;
pub mod cohomology;
pub mod datum;
pub mod error;
pub mod group;
pub mod linalg;
pub mod oracle;

pub use classify::{classify, fiber_functors, ClassificationReport, Caps};
pub use cochain::Cochain;
pub use cohomology::CohomologyGroup;
pub use datum::AlgebraDatum;
pub use error::{Error, Result};
pub use group::{FiniteGroup, Subgroup};
