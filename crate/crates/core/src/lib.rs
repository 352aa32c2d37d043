//! Discrete spectrum of a particle trapped in an infinitely long cylinder
//! threaded by a conical defect and perturbed by two attractive delta planes
//! at `z = ±z0`.
//!
//! The problem separates into an angular part (order `nu = n / B`), a radial
//! Dirichlet problem whose energies come from the zeros of `J_nu`, and a
//! one-dimensional twin delta-well problem along the axis. The crate is
//! `no_std` (it needs `alloc` only for tables and traces).
//!
//! ```
//! use cyldelta_core::{model::PhysicalParams, wells};
//!
//! let params = PhysicalParams::natural_units(1.0, 2.0, 1.0, 5.0);
//! let ground = wells::ground_state(&params).unwrap();
//! assert!(ground.energy < -0.25 && ground.energy > -1.0);
//! ```

#![no_std]
#![allow(clippy::excessive_precision, clippy::neg_cmp_op_on_partial_ord)]

extern crate alloc;
#[cfg(test)]
extern crate std;

pub mod error;
pub mod model;
pub mod rootfind;
pub mod specfun;
pub mod spectrum;
pub mod wells;

pub use error::{Error, Result};
pub use model::{EnergyLevel, PhysicalParams, QuantumNumbers};
pub use specfun::ZeroApproxMode;
