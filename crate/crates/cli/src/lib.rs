//! Library side of the `symcover` command: graph families and sweeps.

pub mod family;
pub mod sweep;

pub use family::{connected_graphs, enumerate_family, Family};
pub use sweep::{run_sweep, SweepConfig, SweepReport};
