//! Exact vertex multicut on directed acyclic graphs.
//!
//! The solver branches on important separators and source shadows and runs in
//! time depending only on the budget `p` and the number of pairs `r`. A
//! brute-force oracle, hardness gadgets and text formats come alongside.

pub mod cli;
pub mod dag;
pub mod format;
pub mod gadgets;
pub mod oracle;
pub mod separators;
pub mod shadows;
pub mod solver;
pub mod transforms;

pub use dag::{CutSet, DagError, DagInstance, MulticutCheck, SrcMap, Vertex};
pub use format::{FormatError, ParsedInstance};
pub use gadgets::{GadgetError, UndirectedGraph};
pub use oracle::{brute_solve, brute_solve_weighted_arcs, Answer, ArcWeight, OracleError, WeightedArcInstance};
pub use shadows::{ShadowFamily, ShadowStrategy};
pub use solver::{solve, verify, SolveError, SolveOutcome, SolveTrace, SolverConfig};
pub use transforms::TransformError;
