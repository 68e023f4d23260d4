//! Explicit orbit-space models for low-dimensional compact group actions.
//!
//! The crate has three layers:
//!
//! * exact and floating-point arithmetic for the normed algebras and torus
//!   automorphisms that generate the group actions ([`algebra`]);
//! * the quotient constructions themselves: Gram and polar projections of
//!   normalized matrix spaces onto the positive-semidefinite cone
//!   ([`matrix`]), composed quotient maps for projective planes, spheres and
//!   fiber products ([`orbit_maps`]), combinatorial model spaces over
//!   polygons ([`model_spaces`]), and integer homology of the associated
//!   cell complexes ([`homology`]);
//! * a deterministic sampling harness that turns every claimed orbit-space
//!   model into falsifiable invariance, separation and constraint checks
//!   with machine-readable reports ([`harness`]).

pub mod algebra;
pub mod harness;
pub mod homology;
pub mod matrix;
pub mod model_spaces;
pub mod orbit_maps;
