#![doc = "Decision engine for orientations, spin, pin±, pin^c and Lipschitz structures on products of closed manifolds."]

pub mod abelian;
pub mod acceptance;
pub mod catalog;
pub mod decide;
pub mod document;
pub mod error;
pub mod expr;
pub mod gf2;
pub mod report;
pub mod ring;
pub mod snf;
pub mod steenrod;

pub use abelian::{CoefficientRing, FgAbelianGroup};
pub use catalog::{BundleDescriptor, ManifoldDescriptor};
pub use error::{Error, Result};
pub use ring::{RingPresentation, Z2Class, Z2Subspace};
