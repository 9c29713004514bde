//! Bipartite correlation measures of two-qubit states.

pub mod bloch;
pub mod chsh;
pub mod discord;
pub mod entanglement;
pub mod report;

pub use bloch::BlochForm;
pub use chsh::chsh_max;
pub use discord::{
    classical_correlations, conditional_entropy, discord_numeric, discord_xstate, mutual_information,
    refine_conditional_entropy, Measurement,
};
pub use entanglement::{concurrence, eof, eof_from_concurrence};
pub use report::{report, CorrelationReport};
