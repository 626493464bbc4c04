//! Combinatorial models of Joyal's category Θ: ordinal/interval duality, the
//! inductive categories iDisk and iΔ₊, disks, globular cardinals, ordinal
//! graphs, free ω-categories and cropped labeled trees.

pub mod error;
pub mod disk;
pub mod forest;
pub mod globular;
pub mod itree;
pub mod labeled;
pub mod ograph;
pub mod omega;
pub mod ordinal;
pub mod verify;

pub use error::{Error, Result};
