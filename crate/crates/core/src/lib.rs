//! Topological invariants and foliation verdicts for finite-type surfaces.
//!
//! - [`signature`]: normalized `(genus, crosscaps, punctures)` signatures,
//!   Euler characteristic, rank and the puncture/cross-cap/handle surgeries.
//! - [`classifier`]: foliable / transitive / minimal / biminimal verdicts with
//!   provenance, the puncture closure of transitive constructions, and the
//!   rank-ordered monolith table.
//! - [`covering`]: Riemann-Hurwitz enumeration of branched double covers.
//! - [`complexes`]: triangulated closed surfaces, GF(2) homology, separation
//!   via the polarized double cover, the orientation cover and foliated
//!   triangulations.
//! - [`dynamics`]: exact circle rotations, orbit gaps and the folded
//!   Dubois-Violette return map.
//! - [`cli`]: the `surftop` command line.

pub mod classifier;
pub mod cli;
pub mod complexes;
pub mod covering;
pub mod dynamics;
pub mod error;
pub mod signature;

pub use classifier::{classify, monolith_table, transitive_closure_facts, Classification, Glyph, Provenance, Value, Verdict};
pub use error::{Error, Result};
pub use signature::{InvariantTriple, SurfaceSig};
