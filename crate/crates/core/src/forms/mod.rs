//! Invariant differential forms on the four-fold: a sparse exterior algebra
//! over a coefficient ring, linear substitutions, Chern characters and the
//! standard forms of one admissible quartic.

pub mod algebra;
pub mod standard;

#[cfg(test)]
mod proptests;

use thiserror::Error;

pub use algebra::{
    bidegree_of, ch_combination, dz, dzb, generators, monomial_name, restrict_to_y, sort_sign, wedge_sign, Coeff,
    Form, LinMap, FULL, HOLO,
};
pub use standard::{chern_parts, StandardForms};

#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum FormsError {
    #[error("degree-0 part of the Chern character is not {expected}")]
    RankMismatch { expected: String },
    #[error("form is not of pure type (0,2)")]
    NotPure02,
}
