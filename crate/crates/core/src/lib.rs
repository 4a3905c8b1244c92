pub mod characters;
pub mod error;
mod fixtures;
pub mod schur;
pub mod shapes;
pub mod spectrum;
pub mod tableaux;

pub use error::{Error, Result};
