//! Exact k-gap-planarity analysis of geometric graph drawings.

pub mod density;
pub mod error;
pub mod geometry;

pub use error::{Error, Result};
pub use geometry::*;
pub mod constructions;
pub mod hardness;
pub mod io;
pub mod render;
pub mod solver;
mod union_find;
