pub mod error;
pub mod experiments;
pub mod langer;
pub mod predictors;
pub mod rootfind;
pub mod secular;
pub mod specfun;

pub use error::{Error, Result};
