//! Numerical differential geometry for biminimal curves and surfaces.
//!
//! The crate constructs curves and codimension-one surfaces in nine model
//! geometries (space forms, Riemannian products, Heisenberg, SL(2,R), and
//! conformally flat planes) and verifies, by independent finite-difference
//! computation, that each construction satisfies the constrained
//! Euler-Lagrange equations of the bienergy with its expected Lagrange
//! multiplier.
//!
//! Everything here is pure `f64` arithmetic over owned buffers: no IO, no
//! global state, deterministic output for fixed input. The companion CLI
//! crate layers file formats and commands on top.

#![cfg_attr(not(feature = "std"), no_std)]

extern crate alloc;

pub mod conformal;
pub mod curves;
pub mod error;
pub(crate) mod float;
pub mod geometry;
pub mod grid;
pub mod linalg;
pub mod ode;
pub mod surfaces;
pub mod util;
pub mod verify;

pub use error::Error;
pub use geometry::AmbientSpace;
pub use grid::GridSpec;

/// Curvatures below this are treated as vanishing: Frenet frames beyond the
/// tangent are masked and the singular `alpha^2/k^3` term is refused.
pub const K_FLOOR: f64 = 1e-8;

/// Reduced-equation trajectories halt once |k| exceeds this (finite-time
/// blow-up guard for k'' = k^3 + ...).
pub const K_CEILING: f64 = 1e6;

/// Default finite-difference step for metric and Christoffel derivatives.
pub const H_FD_DEFAULT: f64 = 1e-4;
