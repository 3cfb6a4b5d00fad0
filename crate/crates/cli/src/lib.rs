//! Reporting and verification front-end for `ssc-core`.

pub mod analysis;
pub mod input;
pub mod random;

pub use analysis::{run_analyze, run_verify, AnalysisError, AnalysisReport, Discrepancy, Options};
pub use input::{parse_graph_file, parse_graph_str, GraphFile, InputError};
pub use random::{random_suite, random_unicyclic};

/// Process exit codes.
pub mod exit {
    pub const OK: i32 = 0;
    pub const DISCREPANCY: i32 = 1;
    pub const INPUT: i32 = 2;
    pub const BUDGET: i32 = 3;
}
