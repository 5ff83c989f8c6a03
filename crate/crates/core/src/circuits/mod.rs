//! Circuit IR, builders and gate accounting.

mod build;
mod json;

use std::collections::BTreeMap;

use serde::Serialize;

use crate::sim::Gate;
use crate::Result;

pub use build::{
    build_filter_circuit, build_filter_circuit_with, build_sequency_selector, build_sequency_wht,
    build_uz, build_uz_inverse, AncillaConvention, DyadicBlock, FilterCircuitOptions, SequencyBand,
};
pub use json::{CircuitRecord, GateRecord};

/// An ordered gate list on a fixed-width register.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Circuit {
    n_qubits: usize,
    gates: Vec<Gate>,
    label: String,
}

impl Circuit {
    pub fn new(n_qubits: usize, label: impl Into<String>) -> Self {
        Self {
            n_qubits,
            gates: Vec::new(),
            label: label.into(),
        }
    }

    pub fn n_qubits(&self) -> usize {
        self.n_qubits
    }

    pub fn gates(&self) -> &[Gate] {
        &self.gates
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn len(&self) -> usize {
        self.gates.len()
    }

    pub fn is_empty(&self) -> bool {
        self.gates.is_empty()
    }

    pub fn push(&mut self, gate: Gate) -> Result<()> {
        gate.validate(self.n_qubits)?;
        self.gates.push(gate);
        Ok(())
    }

    /// Appends `other`'s gates; `other` may be narrower than `self`.
    pub fn append(&mut self, other: &Circuit) -> Result<()> {
        for gate in &other.gates {
            self.push(gate.clone())?;
        }
        Ok(())
    }

    /// The same gates on a register of `n_qubits` (at least as wide).
    pub fn widened(&self, n_qubits: usize) -> Result<Circuit> {
        let mut out = Circuit::new(n_qubits, self.label.clone());
        out.append(self)?;
        Ok(out)
    }

    /// Inverse circuit. Every gate in the set is an involution, so this is
    /// the gate list reversed.
    pub fn inverse(&self, label: impl Into<String>) -> Circuit {
        Circuit {
            n_qubits: self.n_qubits,
            gates: self.gates.iter().rev().cloned().collect(),
            label: label.into(),
        }
    }

    /// Cancels pairs of X gates on the same qubit with no other gate touching
    /// that qubit in between. Repeats until no pair is left.
    pub fn elide_redundant_x(&mut self) {
        loop {
            let pair = self.gates.iter().enumerate().find_map(|(i, gate)| {
                let Gate::X(q) = gate else { return None };
                let j = i
                    + 1
                    + self.gates[i + 1..]
                        .iter()
                        .position(|g| g.qubits().contains(q))?;
                (self.gates[j] == Gate::X(*q)).then_some((i, j))
            });
            match pair {
                Some((i, j)) => {
                    self.gates.remove(j);
                    self.gates.remove(i);
                }
                None => break,
            }
        }
    }
}

/// Gate counts, MCX arities and greedy-layer depth of a circuit.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct GateStats {
    pub h: usize,
    pub x: usize,
    pub cnot: usize,
    pub swap: usize,
    pub mcx: usize,
    /// Control count → number of MCX gates with that many controls.
    pub mcx_arities: BTreeMap<usize, usize>,
    pub depth: usize,
}

impl GateStats {
    pub fn total(&self) -> usize {
        self.h + self.x + self.cnot + self.swap + self.mcx
    }

    /// Toffoli-equivalent cost of the MCX gates, counting an `r`-control MCX
    /// with `r ≥ 3` as `4(r − 2)` Toffolis (linear in `r`, given spare
    /// qubits), a 2-control MCX as one Toffoli and smaller ones as nothing.
    pub fn mcx_toffoli_equivalent(&self) -> usize {
        self.mcx_arities
            .iter()
            .map(|(&arity, &count)| {
                count
                    * match arity {
                        0 | 1 => 0,
                        2 => 1,
                        r => 4 * (r - 2),
                    }
            })
            .sum()
    }
}

pub fn gate_stats(circuit: &Circuit) -> GateStats {
    let mut stats = GateStats::default();
    let mut free_at = vec![0usize; circuit.n_qubits()];
    for gate in circuit.gates() {
        match gate {
            Gate::H(_) => stats.h += 1,
            Gate::X(_) => stats.x += 1,
            Gate::Cnot { .. } => stats.cnot += 1,
            Gate::Swap(..) => stats.swap += 1,
            Gate::Mcx { controls, .. } => {
                stats.mcx += 1;
                *stats.mcx_arities.entry(controls.len()).or_default() += 1;
            }
        }
        let qubits = gate.qubits();
        let layer = qubits.iter().map(|&q| free_at[q]).max().unwrap_or(0) + 1;
        for q in qubits {
            free_at[q] = layer;
        }
        stats.depth = stats.depth.max(layer);
    }
    stats
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sim::Control;

    #[test]
    fn empty_circuit_stats() {
        let stats = gate_stats(&Circuit::new(4, "empty"));
        assert_eq!(stats, GateStats::default());
        assert_eq!(stats.total(), 0);
    }

    #[test]
    fn depth_packs_disjoint_gates() {
        let mut c = Circuit::new(4, "t");
        for q in 0..4 {
            c.push(Gate::H(q)).unwrap();
        }
        c.push(Gate::Swap(0, 3)).unwrap();
        c.push(Gate::Swap(1, 2)).unwrap();
        c.push(Gate::Cnot {
            control: 0,
            target: 1,
        })
        .unwrap();
        let stats = gate_stats(&c);
        assert_eq!(stats.depth, 3);
        assert_eq!(stats.total(), 7);
    }

    #[test]
    fn push_validates() {
        let mut c = Circuit::new(2, "t");
        assert!(c.push(Gate::X(2)).is_err());
        assert!(c.is_empty());
    }

    #[test]
    fn x_pairs_cancel_only_when_adjacent_on_wire() {
        let mut c = Circuit::new(3, "t");
        c.push(Gate::X(2)).unwrap();
        c.push(Gate::H(0)).unwrap();
        c.push(Gate::X(2)).unwrap();
        c.push(Gate::X(1)).unwrap();
        c.push(Gate::mcx(vec![Control::open(1)], 2)).unwrap();
        c.push(Gate::X(1)).unwrap();
        c.elide_redundant_x();
        assert_eq!(
            c.gates(),
            &[
                Gate::H(0),
                Gate::X(1),
                Gate::mcx(vec![Control::open(1)], 2),
                Gate::X(1)
            ]
        );
    }

    #[test]
    fn toffoli_equivalent_is_linear_in_arity() {
        let mut stats = GateStats::default();
        stats.mcx_arities.insert(1, 2);
        stats.mcx_arities.insert(2, 1);
        stats.mcx_arities.insert(5, 1);
        assert_eq!(stats.mcx_toffoli_equivalent(), 1 + 12);
    }
}
