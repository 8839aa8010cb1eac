//! Command-line front end: tensor documents in, classification reports out.

pub mod batch;
pub mod cli;
pub mod document;
pub mod error;
pub mod exact;
pub mod report;
pub mod verify;

pub use cli::{run, Cli};
pub use error::CliError;
