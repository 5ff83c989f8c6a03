//! JSON form of a circuit, as written by `sequency gates --dump`.
//!
//! ```json
//! {
//!   "label": "low-pass",
//!   "n_qubits": 4,
//!   "gates": [
//!     { "kind": "x", "qubits": [3] },
//!     { "kind": "h", "qubits": [0] },
//!     { "kind": "cnot", "qubits": [0, 1] },
//!     { "kind": "swap", "qubits": [0, 2] },
//!     { "kind": "mcx", "qubits": [2, 1, 3], "polarities": ["open", "closed"] }
//!   ]
//! }
//! ```
//!
//! - `label`: free text naming the circuit.
//! - `n_qubits`: register width; qubit 0 is the least significant index bit.
//! - `gates`: applied in order. `kind` is one of `h`, `x`, `cnot`, `swap`,
//!   `mcx`.
//! - `qubits`: for `cnot` and `mcx` the controls come first and the target
//!   last; for `swap` the two exchanged qubits.
//! - `polarities`: `mcx` only, one entry per control in the same order;
//!   `open` fires on |0⟩, `closed` on |1⟩. A `cnot` control is closed.

use serde::{Deserialize, Serialize};

use super::Circuit;
use crate::sim::{Control, Gate, Polarity};
use crate::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GateRecord {
    pub kind: String,
    pub qubits: Vec<usize>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub polarities: Vec<Polarity>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CircuitRecord {
    pub label: String,
    pub n_qubits: usize,
    pub gates: Vec<GateRecord>,
}

impl From<&Gate> for GateRecord {
    fn from(gate: &Gate) -> Self {
        let polarities = match gate {
            Gate::Mcx { controls, .. } => controls.iter().map(|c| c.polarity).collect(),
            _ => Vec::new(),
        };
        GateRecord {
            kind: gate.name().to_string(),
            qubits: gate.qubits(),
            polarities,
        }
    }
}

impl TryFrom<&GateRecord> for Gate {
    type Error = Error;

    fn try_from(record: &GateRecord) -> Result<Gate> {
        let bad = |why: &str| Error::InvalidCircuit(format!("gate record {record:?}: {why}"));
        let q = &record.qubits;
        let gate = match (record.kind.as_str(), q.len()) {
            ("h", 1) => Gate::H(q[0]),
            ("x", 1) => Gate::X(q[0]),
            ("cnot", 2) => Gate::Cnot {
                control: q[0],
                target: q[1],
            },
            ("swap", 2) => Gate::Swap(q[0], q[1]),
            ("mcx", len) if len >= 2 => {
                if record.polarities.len() != len - 1 {
                    return Err(bad("one polarity per control expected"));
                }
                let controls = q[..len - 1]
                    .iter()
                    .zip(&record.polarities)
                    .map(|(&qubit, &polarity)| Control { qubit, polarity })
                    .collect();
                Gate::Mcx {
                    controls,
                    target: q[len - 1],
                }
            }
            _ => return Err(bad("unknown kind or wrong qubit count")),
        };
        Ok(gate)
    }
}

impl Circuit {
    pub fn to_record(&self) -> CircuitRecord {
        CircuitRecord {
            label: self.label.clone(),
            n_qubits: self.n_qubits,
            gates: self.gates.iter().map(GateRecord::from).collect(),
        }
    }

    pub fn from_record(record: &CircuitRecord) -> Result<Circuit> {
        let mut circuit = Circuit::new(record.n_qubits, record.label.clone());
        for gate in &record.gates {
            circuit.push(Gate::try_from(gate)?)?;
        }
        Ok(circuit)
    }

    pub fn to_json(&self) -> Result<String> {
        Ok(serde_json::to_string_pretty(&self.to_record())?)
    }

    pub fn from_json(text: &str) -> Result<Circuit> {
        Circuit::from_record(&serde_json::from_str(text)?)
    }
}
