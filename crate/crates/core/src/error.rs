use std::path::PathBuf;

use crate::walsh::Order;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("length {len} is not a power of two (transforms need N = 2^n samples)")]
    NotPowerOfTwo { len: usize },

    #[error("expected coefficients in {expected} order, found {found}")]
    OrderMismatch { expected: Order, found: Order },

    #[error("index {index} does not fit in {bits} bits")]
    IndexOutOfRange { index: u64, bits: u32 },

    #[error("bit-width {bits} exceeds the brute-force bound of {bound}")]
    BruteForceBound { bits: u32, bound: u32 },

    #[error("bit-width must be at least 1")]
    ZeroWidth,

    #[error("qubit {qubit} is out of range for a {n_qubits}-qubit register")]
    QubitOutOfRange { qubit: usize, n_qubits: usize },

    #[error("gate {gate} addresses qubit {qubit} more than once")]
    DuplicateQubit { gate: String, qubit: usize },

    #[error("circuit acts on {circuit} qubits but the state has {state}")]
    QubitCountMismatch { circuit: usize, state: usize },

    #[error("amplitude vector has length {len}, expected {expected}")]
    AmplitudeLength { len: usize, expected: usize },

    #[error("state is not normalized (norm {norm})")]
    NotNormalized { norm: f64 },

    #[error("cannot normalize an all-zero signal")]
    ZeroSignal,

    #[error("invalid sequency band: {0}")]
    InvalidBand(String),

    #[error("invalid circuit: {0}")]
    InvalidCircuit(String),

    #[error("invalid waveform: {0}")]
    InvalidWaveform(String),

    #[error("invalid filter: {0}")]
    InvalidFilter(String),

    #[error("length mismatch: {left} vs {right}")]
    LengthMismatch { left: usize, right: usize },

    #[error("{path}:{line}: {message}")]
    Parse {
        path: PathBuf,
        line: usize,
        message: String,
    },

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}
