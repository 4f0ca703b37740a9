//! Exact verification engine for Hodge classes on Mumford-type abelian
//! four-folds built from a depressed quartic with Galois group S4.
//!
//! The crate is layered: [`kernel`] provides the splitting field and the
//! admissibility gate, [`cube`] the Galois/cube model and rational classes,
//! [`forms`] the exterior algebra of invariant forms, [`paramalg`] the
//! polynomial algebra for adapted complex structures, and [`claims`] the
//! catalogue of verifiers.

pub mod claims;
pub mod cube;
pub mod forms;
pub mod kernel;
pub mod paramalg;
pub mod serial;
