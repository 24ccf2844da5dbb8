pub mod cli;
pub mod error;
pub mod digroup;
pub mod exactla;
pub mod fixtures;
pub mod io;
pub mod leibniz;
pub mod lierack;
pub mod numeric;
pub mod report;
pub mod rack;

pub use error::{Error, Result};
