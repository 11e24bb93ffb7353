pub mod audit;
pub mod catalog;
pub mod chars;
pub mod cli;
pub mod error;
pub mod exact;
pub mod groups;
pub mod invariants;
pub mod linalg;
pub mod selftest;
pub mod smoothprobe;

pub use error::{Error, Result};
