pub mod acceptance;
pub mod degree3;
pub mod degree5;
pub mod degree7;
pub mod elliptic;
pub mod cli;
mod error;
pub mod exact;
pub mod formulas;
pub mod genus2;
pub mod ramification;

pub use error::{Error, Result};
