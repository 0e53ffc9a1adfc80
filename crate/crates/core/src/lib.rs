pub mod catalog;
pub mod equations;
pub mod error;
pub mod group;
pub mod mobius;
pub mod model;
pub mod moduli;
pub mod rational;
pub mod verify;

pub use error::{Error, Result};
