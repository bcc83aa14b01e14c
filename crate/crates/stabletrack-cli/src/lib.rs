pub mod commands;
pub mod config;
pub mod series;

pub use commands::run_command;
pub use config::CliConfig;
pub use series::{load_series, Format, SeriesSpec, Transform};
