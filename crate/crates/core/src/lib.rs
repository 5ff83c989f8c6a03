//! Sequency-ordered Walsh-Hadamard transforms and sequency-domain signal
//! filtering, computed two ways: as simulated quantum circuits and with
//! dense classical transforms that serve as oracles.
//!
//! The crate is organized bottom-up:
//!
//! - [`walsh`]: natural and sequency-ordered fast Walsh-Hadamard transforms,
//!   the natural-to-sequency index map, and brute-force oracles.
//! - [`sim`]: a dense statevector simulator for the gate set used here
//!   (H, X, CNOT, SWAP and multi-controlled X with open/closed controls).
//! - [`circuits`]: the circuit IR plus builders for the sequency permutation
//!   `U_Z`, the sequency-ordered transform, and the filter circuits, with gate
//!   and depth accounting and a stable JSON dump.
//! - [`filters`]: end-to-end DC, low-pass, high-pass and band-pass filtering on
//!   both the quantum and the classical path, with error metrics.
//! - [`signals`]: test waveforms, midpoint discretization and CSV I/O.
//! - [`verify`]: the self-check suites behind `sequency verify`.
//! - [`cli`]: the command-line front end.
//!
//! ```
//! use sequency::filters::{filter_classical_oracle, filter_quantum, FilterSpec};
//! use sequency::signals::{discretize, Waveform};
//!
//! let signal = discretize(&Waveform::square(2.0), 5);
//! let spec = FilterSpec::LowPass { cutoff: 8 };
//! let quantum = filter_quantum(&signal, &spec).unwrap();
//! let (pass, _stop) = filter_classical_oracle(&signal, &spec).unwrap();
//! for (q, c) in quantum.pass_branch.values().iter().zip(pass.values()) {
//!     assert!((q - c).abs() < 1e-10);
//! }
//! ```

pub mod circuits;
pub mod cli;
mod error;
pub mod filters;
pub mod signals;
pub mod sim;
pub mod verify;
pub mod walsh;

pub use error::{Error, Result};
