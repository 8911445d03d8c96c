//! Universal tail bounds for sums of dependent random variables.

pub mod curve;
pub mod dist;
pub mod bound;
pub mod hardy;
pub mod quad;
pub mod stats;
pub mod error;
pub mod ext;
