//! Walled Brauer algebras over exact coefficient fields.

pub mod center;
pub mod diagrams;
pub mod qwbr;
pub mod scalars;
pub mod wbr_algebra;
pub mod weights;
