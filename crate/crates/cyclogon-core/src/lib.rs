//! Metric identities of plane pentagons and hexagons, numeric solving of
//! cyclic polygons, and exact re-derivation of the degree-7 diagonal, (4AR)²,
//! circumradius and area polynomials of a cyclic pentagon by resultant
//! elimination.
//!
//! The crate is split along the two arithmetic worlds it lives in:
//!
//! * floating-point geometry ([`geom`], [`affine`], [`cyclic`], [`sample`]) —
//!   residual evaluation of the area identities on explicit coordinates and a
//!   bisection oracle for cyclic polygons;
//! * exact algebra ([`poly`], [`symfun`], [`derive`], [`roots`]) — sparse
//!   multivariate polynomials over arbitrary-precision integers, symmetric
//!   function basis conversion, Sylvester resultants and the derivation
//!   pipeline that reproduces the degree-7 formulas.
//!
//! Everything is `no_std`-compatible (with `alloc`); the companion `cyclogon`
//! crate carries IO, file formats and the command-line front end.

#![cfg_attr(not(feature = "std"), no_std)]

extern crate alloc;

pub mod affine;
pub mod cyclic;
pub mod derive;
pub mod geom;
pub mod poly;
pub mod roots;
pub mod sample;
pub mod scalar;
pub mod symfun;

pub use geom::{Point, PolygonPath};
pub use scalar::{DoubleDouble, Real};
