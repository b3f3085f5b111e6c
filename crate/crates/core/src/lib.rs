//! Edge-to-edge tilings of the unit sphere by regular spherical polygons.
//!
//! The crate is layered bottom-up:
//!
//! * [`sphkernel`]: trigonometry of a single regular polygon and the
//!   relation between two polygons that share an edge length.
//! * [`vertexcomb`]: admissible vertex types, remainders and cyclic
//!   arrangements.
//! * [`algsolve`]: exact polynomial root isolation and the angle systems
//!   attached to a vertex type.
//! * [`tilemap`]: the combinatorial map of a tiling, validation, censuses
//!   and isomorphism testing.
//! * [`catalog`]: constructors for every classified tiling together with the
//!   structural operators used to derive them.
//! * [`embedder`]: coordinates on the unit sphere and mesh export.
//! * [`report`]: per-tiling verification reports.

pub mod algsolve;
pub mod catalog;
pub mod embedder;
pub mod error;
pub mod report;
pub mod sphkernel;
pub mod tilemap;
pub mod vertexcomb;

pub use algsolve::AngleAssignment;
pub use error::{Error, Result};
pub use tilemap::TilingMap;
