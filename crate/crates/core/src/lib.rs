pub mod analytic;
pub mod antenna;
pub mod config;
pub mod error;
pub mod geometry;
pub mod montecarlo;
pub mod numerics;
pub mod report;
pub mod runner;
pub mod scenario;
pub mod units;

pub use error::{Error, Result};
