//! Exact algebra for graded modules over `k[x0..x{n-1}]`.
//!
//! The crate covers fibers of presented graded modules at rational points,
//! `w`-basic families of twisted sections, the shrinking step that removes
//! the lowest-degree section while keeping basicness at finitely many
//! points, and the planar application: graded Betti numbers and
//! Cayley-Bacharach indices of reduced point sets in `P^2`.
//!
//! Everything is exact. Coefficients live in a [`Field`]: [`Rationals`] for
//! real work, [`PrimeField`] for exhaustive oracles over small fields.
//!
//! The crate is `no_std` and only needs `alloc`.

#![no_std]

extern crate alloc;

pub mod betti;
pub mod cayley_bacharach;
pub mod error;
pub mod field;
pub mod matrix;
pub mod module;
pub mod point;
pub mod poly;
pub mod shrinking;

pub use betti::{betti_table, hilbert_function, ideal_basis, BettiTable};
pub use cayley_bacharach::{cb_index, satisfies_cb, verify_bounds, CbReport};
pub use error::Error;
pub use field::{Field, PrimeField, Rationals};
pub use matrix::Matrix;
pub use module::{
    fiber, fitting_vanishes_at, graded_piece_dim, is_w_basic, section_images_in_fiber, Fiber,
    ModulePresentation, Section,
};
pub use point::{PointSet, ProjPoint};
pub use poly::{monomials, HomogPoly};
pub use shrinking::{
    basic_elements, find_nonvanishing_linear_form, serre_section, shrink_once, unique_bad_lambda,
    ShrinkStep, UnipotentTransform,
};
