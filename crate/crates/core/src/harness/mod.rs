//! Enumeration, brute-force oracles, sweeps and validation suites.

mod enumerate;
mod oracle;
pub mod render;
pub mod suites;
pub mod sweep;
pub mod worked_example;

pub use enumerate::{enumerate_words, fully_cyclically_reduced_words, WordEnumerator};
pub use oracle::{commutator_oracle, commutator_oracle_batch};
pub use sweep::{
    odd_torsion_configs, run_theorem_sweep, shipped_config, shipped_configs, OracleVerdict,
    SweepConfig, SweepRecord, SweepReport,
};
pub use worked_example::{paper_example_check, WorkedExampleReport};
