//! Decomposition of simplicial affine semigroup rings `K[B]` into monomial
//! ideals over the polynomial ring of a free frame `K[A]`, together with the
//! ring-property tests (seminormal, normal, Cohen-Macaulay, Buchsbaum,
//! Gorenstein) and Castelnuovo-Mumford regularity read off from that
//! decomposition.
//!
//! All arithmetic is exact. The typical entry point is
//! [`AffineSemigroup::new`] followed by [`decompose`], [`full_report`] or
//! [`analyze`].

pub mod cli;
mod cone;
pub mod decomposition;
mod error;
pub mod homology;
pub mod lattice;
pub mod properties;
pub mod report;
pub mod semigroup;
pub mod sweep;

pub use decomposition::{decompose, hilbert_verify, shift_degrees, Decomposition, MonomialIdeal, Summand};
pub use error::{Error, Result};
pub use homology::{analyze, betti_ideal, depth_of, reg_of, BettiTable, Characteristic, RegularityReport};
pub use lattice::{CosetLabel, FiniteAbelianGroup, IntMatrix, LatticeError, RatVector};
pub use properties::{
    full_report, is_buchsbaum, is_cohen_macaulay, is_gorenstein, is_normal, is_seminormal, PropertyReport, Verdict,
    Witness,
};
pub use semigroup::{AffineSemigroup, DegreeFunctional, Frame, Point};
