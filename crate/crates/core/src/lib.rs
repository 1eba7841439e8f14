//! Finite-dimensional two-product algebras of observables.
//!
//! An observable algebra carries a Lie bracket (kinematics) and a symmetric
//! product τ (squaring of measurements) over a shared unit. This crate
//! verifies the compatibility axioms exactly, computes the projective
//! invariant (λ:μ) that splits consistent theories into commutative Poisson,
//! real associative, and complex ⋆-algebra types, builds composite systems
//! and associative hulls, decomposes semisimple hulls into matrix blocks,
//! classifies ⋆-structures, computes physical spectra, and certifies
//! rigidity through second Hochschild cohomology.
//!
//! Everything verdict-level runs over exact rational or Gaussian-rational
//! scalars; float mode (ε-tolerance eigensolvers) backs only the numerical
//! cross-checks in [`numeric`].
//!
//! ```
//! use obsalg::algebra::AlgebraDoc;
//! use obsalg::trichotomy::{classify, Case};
//!
//! let AlgebraDoc::TwoProduct(pauli) = obsalg::corpus::load("pauli").unwrap() else {
//!     unreachable!()
//! };
//! let report = classify(&pauli);
//! assert_eq!(report.case, Case::Case3ComplexAssociative);
//! assert_eq!(report.hbar.unwrap().exact.unwrap().to_string(), "1/2");
//! ```

// index loops over structure-constant tensors are the clearest idiom here
#![allow(clippy::needless_range_loop)]

pub mod algebra;
pub mod axioms;
pub mod composite;
pub mod corpus;
pub mod deformation;
pub mod error;
pub mod matrix;
pub mod numeric;
pub mod pipeline;
pub mod poly;
pub mod rng;
pub mod scalar;
pub mod spectrum;
pub mod structure;
pub mod trichotomy;

pub use algebra::{
    load_algebra, save_algebra, AlgebraDoc, AssocAlgebra, Element, Field, Star, TwoProductAlgebra,
};
pub use error::{Error, Result};
pub use matrix::Matrix;
pub use poly::{isolate_real_roots, Poly, RealRoot};
pub use scalar::{Rat, Scalar};
