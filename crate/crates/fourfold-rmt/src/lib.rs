//! Numerical toolkit for random matrices with the fourfold symmetry
//! `h_xy = conj(h_yx) = h_{-y,-x} = conj(h_{-x,-y})` on `Z/NZ`.
//!
//! The crate builds variance profiles and samples from the ensemble,
//! computes Green functions of minors and the objects of the local
//! semicircle law (Stieltjes transforms, the Lambda and Gamma control
//! parameters, the spectral domain), verifies the resolvent and
//! self-consistent-equation identities to machine precision, and runs
//! seeded Monte Carlo scaling experiments for the asymptotic bounds.

pub mod consts;
pub mod control;
pub mod ensembles;
mod error;
pub mod harness;
pub mod linalg;
pub mod resolvent;
pub mod selfconsistent;
pub mod semicircle;

pub use error::{Error, Result};
