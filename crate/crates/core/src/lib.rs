//! Exact Gorenstein-homological computations over finite-dimensional
//! algebras over prime fields.

pub mod algebra;
pub mod cmaus;
pub mod error;
pub mod gproj;
pub mod input;
pub mod kernel;
pub mod modcat;
pub mod par;
pub mod silting;
pub mod twoterm;
pub mod verify;

pub use error::{Error, Result};
