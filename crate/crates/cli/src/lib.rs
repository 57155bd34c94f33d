//! Command-line front end for `laperm-core`.

pub mod app;
pub mod io;
pub mod report;

pub use app::run;
