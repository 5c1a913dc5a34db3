//! Dupin cyclidic cubes and nets as quaternionic Bezier objects.
//!
//! Points of space are imaginary quaternions, and every object is a rational
//! multilinear Bezier map `(sum p_i w_i B_i)(sum w_i B_i)^-1` whose controls
//! are pairs `(p_i w_i, w_i)`.

pub mod arcs;
pub mod bezier;
pub mod cubes;
mod error;
pub mod fit;
pub mod fixtures;
pub mod frame;
pub mod io;
pub mod moebius;
pub mod nets;
pub mod patches;
pub mod quat;
pub mod report;

pub use bezier::QBObject;
pub use cubes::{DCCube, DCCubeSpec};
pub use error::{Error, Result};
pub use frame::Frame;
pub use moebius::{ExtendedPoint, HomogeneousPoint, SphereOfInversion};
pub use nets::{CyclidicNet, NetSpec};
pub use quat::{Quaternion, DEFAULT_TOL};
pub use report::{Check, Report};
