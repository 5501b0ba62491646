pub mod cli;
pub mod counterexample;
pub mod engine;
pub mod error;
pub mod geometry;
pub mod io;
pub mod linalg;
pub mod normal;
pub mod settings;
pub mod witness;

pub use error::{Error, Result};
pub use linalg::{ComplexMatrix, C64};
pub use settings::Settings;
