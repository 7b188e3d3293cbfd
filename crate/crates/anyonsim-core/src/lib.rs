//! Stabilizer-graph simulator for movable lattice defects on deformable
//! surface codes.
//!
//! The crate is organized bottom-up:
//!
//! - [`pauli`]: exact phase-tracked Pauli-string algebra and Clifford gates
//! - [`dense`]: a small dense statevector simulator used as a cross-check oracle
//! - [`tableau`]: stabilizer/destabilizer tableau simulation with logical pairs
//! - [`graph`]: the deformable stabilizer graph (plaquettes, defect surgery, moves)
//! - [`compile`]: lowering of abstract defect moves to layered CZ + single-qubit circuits
//! - [`noise`]: depolarizing gate noise, readout flips, symmetrization and correction
//! - [`protocol`]: scripted end-to-end defect experiments with per-step reports
//! - [`tomo`]: logical operators, density-matrix reconstruction, fidelity and purity
//! - [`report`]: JSON result emission and SVG stabilizer heatmaps

pub mod compile;
pub mod dense;
pub mod graph;
pub mod noise;
pub mod pauli;
pub mod protocol;
pub mod report;
pub mod tableau;
pub mod tomo;

use thiserror::Error;

/// Errors shared across the simulator.
#[derive(Debug, Error)]
pub enum Error {
    #[error("dimension mismatch: {0}")]
    Dimension(String),
    #[error("qubit index {index} out of range for {n} qubits")]
    QubitRange { index: usize, n: usize },
    #[error("operator is not Hermitian: {0}")]
    NotHermitian(String),
    #[error("invalid generating set: {0}")]
    InvalidGroup(String),
    #[error("statevector capacity exceeded: n={n} > {max}")]
    Capacity { n: usize, max: usize },
    #[error("invalid surgery: {0}")]
    Surgery(String),
    #[error("invalid defect move: {0}")]
    Move(String),
    #[error("loop topology error: {0}")]
    Topology(String),
    #[error("routing error: {0}")]
    Routing(String),
    #[error("protocol error: {0}")]
    Protocol(String),
    #[error("logical basis configuration error: {0}")]
    Configuration(String),
    #[error("incomplete expectation set: {0}")]
    Incomplete(String),
    #[error("readout correction unreliable: calibration factor {0} <= 0.1")]
    UnreliableCorrection(f64),
    #[error("post-selection kept zero shots")]
    EmptySelection,
    #[error("parse error: {0}")]
    Parse(String),
    #[error("validation failed: {0}")]
    Validation(String),
}

pub type Result<T> = std::result::Result<T, Error>;
