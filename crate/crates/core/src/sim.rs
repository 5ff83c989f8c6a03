//! Dense statevector simulation for the filter circuits' gate set.
//!
//! Amplitude index bit `b` is qubit `q_b`; qubit 0 is least significant. On an
//! `(n+1)`-qubit filter register the ancilla `q_n` is the top bit.

use std::fmt;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::circuits::Circuit;
use crate::walsh::{Coefficients, Order};
use crate::{Error, Result};

const NORM_TOLERANCE: f64 = 1e-10;

/// Control polarity of a multi-controlled X.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Polarity {
    /// Fires when the control qubit is |0⟩.
    Open,
    /// Fires when the control qubit is |1⟩.
    Closed,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Control {
    pub qubit: usize,
    pub polarity: Polarity,
}

impl Control {
    pub fn open(qubit: usize) -> Self {
        Self {
            qubit,
            polarity: Polarity::Open,
        }
    }

    pub fn closed(qubit: usize) -> Self {
        Self {
            qubit,
            polarity: Polarity::Closed,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Gate {
    H(usize),
    X(usize),
    Cnot {
        control: usize,
        target: usize,
    },
    Swap(usize, usize),
    Mcx {
        controls: Vec<Control>,
        target: usize,
    },
}

impl Gate {
    /// Multi-controlled X; an empty control list yields a plain X.
    pub fn mcx(controls: Vec<Control>, target: usize) -> Self {
        if controls.is_empty() {
            Gate::X(target)
        } else {
            Gate::Mcx { controls, target }
        }
    }

    pub fn name(&self) -> &'static str {
        match self {
            Gate::H(_) => "h",
            Gate::X(_) => "x",
            Gate::Cnot { .. } => "cnot",
            Gate::Swap(..) => "swap",
            Gate::Mcx { .. } => "mcx",
        }
    }

    /// Every qubit the gate touches, controls first.
    pub fn qubits(&self) -> Vec<usize> {
        match self {
            Gate::H(q) | Gate::X(q) => vec![*q],
            Gate::Cnot { control, target } => vec![*control, *target],
            Gate::Swap(a, b) => vec![*a, *b],
            Gate::Mcx { controls, target } => controls
                .iter()
                .map(|c| c.qubit)
                .chain(std::iter::once(*target))
                .collect(),
        }
    }

    /// Checks index range and distinctness for an `n_qubits` register.
    pub fn validate(&self, n_qubits: usize) -> Result<()> {
        let qubits = self.qubits();
        for (i, &q) in qubits.iter().enumerate() {
            if q >= n_qubits {
                return Err(Error::QubitOutOfRange { qubit: q, n_qubits });
            }
            if qubits[..i].contains(&q) {
                return Err(Error::DuplicateQubit {
                    gate: self.to_string(),
                    qubit: q,
                });
            }
        }
        Ok(())
    }

    /// `(mask, value)` such that the gate fires on basis index `i` iff
    /// `i & mask == value`. Only meaningful for X-type gates.
    fn control_pattern(&self) -> (usize, usize) {
        match self {
            Gate::Cnot { control, .. } => (1 << control, 1 << control),
            Gate::Mcx { controls, .. } => controls.iter().fold((0, 0), |(m, v), c| {
                let bit = 1 << c.qubit;
                match c.polarity {
                    Polarity::Open => (m | bit, v),
                    Polarity::Closed => (m | bit, v | bit),
                }
            }),
            _ => (0, 0),
        }
    }
}

impl fmt::Display for Gate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Gate::H(q) => write!(f, "H(q{q})"),
            Gate::X(q) => write!(f, "X(q{q})"),
            Gate::Cnot { control, target } => write!(f, "CNOT(q{control} -> q{target})"),
            Gate::Swap(a, b) => write!(f, "SWAP(q{a}, q{b})"),
            Gate::Mcx { controls, target } => {
                f.write_str("MCX(")?;
                for c in controls {
                    let mark = match c.polarity {
                        Polarity::Open => "o",
                        Polarity::Closed => "c",
                    };
                    write!(f, "q{}{mark} ", c.qubit)?;
                }
                write!(f, "-> q{target})")
            }
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct Statevector {
    n_qubits: usize,
    amplitudes: Vec<Complex64>,
}

impl Statevector {
    /// Computational basis state `|index⟩`.
    pub fn basis(n_qubits: usize, index: usize) -> Result<Self> {
        let dim = 1usize << n_qubits;
        if index >= dim {
            return Err(Error::IndexOutOfRange {
                index: index as u64,
                bits: n_qubits as u32,
            });
        }
        let mut amplitudes = vec![Complex64::new(0.0, 0.0); dim];
        amplitudes[index] = Complex64::new(1.0, 0.0);
        Ok(Self {
            n_qubits,
            amplitudes,
        })
    }

    /// Wraps amplitudes that must already be unit-norm.
    pub fn from_amplitudes(amplitudes: Vec<Complex64>) -> Result<Self> {
        let len = amplitudes.len();
        if len == 0 || !len.is_power_of_two() {
            return Err(Error::NotPowerOfTwo { len });
        }
        let state = Self {
            n_qubits: len.trailing_zeros() as usize,
            amplitudes,
        };
        let norm = state.norm();
        if (norm - 1.0).abs() > NORM_TOLERANCE {
            return Err(Error::NotNormalized { norm });
        }
        Ok(state)
    }

    pub fn n_qubits(&self) -> usize {
        self.n_qubits
    }

    pub fn amplitudes(&self) -> &[Complex64] {
        &self.amplitudes
    }

    pub fn into_amplitudes(self) -> Vec<Complex64> {
        self.amplitudes
    }

    pub fn norm(&self) -> f64 {
        self.amplitudes
            .iter()
            .map(|a| a.norm_sqr())
            .sum::<f64>()
            .sqrt()
    }

    /// `|0⟩ ⊗ self`: adds a new most-significant qubit in state |0⟩.
    pub fn with_ancilla(&self) -> Self {
        let mut amplitudes = self.amplitudes.clone();
        amplitudes.resize(2 * amplitudes.len(), Complex64::new(0.0, 0.0));
        Self {
            n_qubits: self.n_qubits + 1,
            amplitudes,
        }
    }

    /// Applies one gate in place.
    pub fn apply(&mut self, gate: &Gate) -> Result<()> {
        gate.validate(self.n_qubits)?;
        match gate {
            Gate::H(q) => self.hadamard(*q),
            Gate::X(q) => self.controlled_flip(0, 0, *q),
            Gate::Swap(a, b) => self.swap(*a, *b),
            Gate::Cnot { target, .. } | Gate::Mcx { target, .. } => {
                let (mask, value) = gate.control_pattern();
                self.controlled_flip(mask, value, *target)
            }
        }
        Ok(())
    }

    fn hadamard(&mut self, q: usize) {
        let bit = 1 << q;
        let r = std::f64::consts::FRAC_1_SQRT_2;
        for i in (0..self.amplitudes.len()).filter(|i| i & bit == 0) {
            let a = self.amplitudes[i];
            let b = self.amplitudes[i | bit];
            self.amplitudes[i] = (a + b) * r;
            self.amplitudes[i | bit] = (a - b) * r;
        }
    }

    fn controlled_flip(&mut self, mask: usize, value: usize, target: usize) {
        let bit = 1 << target;
        for i in 0..self.amplitudes.len() {
            if i & bit == 0 && i & mask == value {
                self.amplitudes.swap(i, i | bit);
            }
        }
    }

    fn swap(&mut self, a: usize, b: usize) {
        let (ba, bb) = (1 << a, 1 << b);
        for i in 0..self.amplitudes.len() {
            if i & ba != 0 && i & bb == 0 {
                self.amplitudes.swap(i, i ^ ba ^ bb);
            }
        }
    }
}

/// Value-oriented wrapper around [`Statevector::apply`].
pub fn apply_gate(mut state: Statevector, gate: &Gate) -> Result<Statevector> {
    state.apply(gate)?;
    Ok(state)
}

pub fn run_circuit(mut state: Statevector, circuit: &Circuit) -> Result<Statevector> {
    if circuit.n_qubits() != state.n_qubits {
        return Err(Error::QubitCountMismatch {
            circuit: circuit.n_qubits(),
            state: state.n_qubits,
        });
    }
    for gate in circuit.gates() {
        state.apply(gate)?;
    }
    Ok(state)
}

/// Normalizes a time-domain signal into an `n`-qubit state. Returns the state
/// and `‖signal‖₂`, the factor that restores physical units.
pub fn amplitude_encode(signal: &Coefficients) -> Result<(Statevector, f64)> {
    if signal.order() != Order::Time {
        return Err(Error::OrderMismatch {
            expected: Order::Time,
            found: signal.order(),
        });
    }
    let scale = signal.norm();
    if scale == 0.0 || !scale.is_finite() {
        return Err(Error::ZeroSignal);
    }
    let amplitudes = signal
        .values()
        .iter()
        .map(|&x| Complex64::new(x / scale, 0.0))
        .collect();
    Ok((Statevector::from_amplitudes(amplitudes)?, scale))
}

/// Amplitudes on which `qubit` reads `outcome`, in order of the remaining
/// index bits, left unnormalized, together with their total probability.
pub fn project_ancilla(
    state: &Statevector,
    qubit: usize,
    outcome: bool,
) -> Result<(Vec<Complex64>, f64)> {
    if qubit >= state.n_qubits {
        return Err(Error::QubitOutOfRange {
            qubit,
            n_qubits: state.n_qubits,
        });
    }
    let bit = 1 << qubit;
    let want = if outcome { bit } else { 0 };
    let branch: Vec<Complex64> = state
        .amplitudes
        .iter()
        .enumerate()
        .filter(|(i, _)| i & bit == want)
        .map(|(_, a)| *a)
        .collect();
    let probability = branch.iter().map(|a| a.norm_sqr()).sum();
    Ok((branch, probability))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64) -> Complex64 {
        Complex64::new(re, 0.0)
    }

    fn assert_close(a: &[Complex64], b: &[Complex64], tol: f64) {
        assert_eq!(a.len(), b.len());
        for (x, y) in a.iter().zip(b) {
            assert!((x - y).norm() <= tol, "{x} vs {y}");
        }
    }

    fn random_state(n_qubits: usize, seed: u64) -> Statevector {
        let mut s = seed;
        let raw: Vec<Complex64> = (0..1usize << n_qubits)
            .map(|_| {
                s = s
                    .wrapping_mul(6364136223846793005)
                    .wrapping_add(1442695040888963407);
                let re = ((s >> 33) as f64 / (1u64 << 31) as f64) - 1.0;
                s = s
                    .wrapping_mul(6364136223846793005)
                    .wrapping_add(1442695040888963407);
                let im = ((s >> 33) as f64 / (1u64 << 31) as f64) - 1.0;
                Complex64::new(re, im)
            })
            .collect();
        let norm = raw.iter().map(|a| a.norm_sqr()).sum::<f64>().sqrt();
        Statevector::from_amplitudes(raw.into_iter().map(|a| a / norm).collect()).unwrap()
    }

    #[test]
    fn hadamard_on_zero() {
        let out = apply_gate(Statevector::basis(1, 0).unwrap(), &Gate::H(0)).unwrap();
        let r = std::f64::consts::FRAC_1_SQRT_2;
        assert_close(out.amplitudes(), &[c(r), c(r)], 1e-15);
    }

    #[test]
    fn open_controlled_mcx_on_eight_qubits() {
        let gate = Gate::mcx(vec![Control::open(6), Control::open(5)], 7);
        for k in 0..256usize {
            let out = apply_gate(Statevector::basis(8, k).unwrap(), &gate).unwrap();
            let fires = (k >> 6) & 1 == 0 && (k >> 5) & 1 == 0;
            let expected = if fires { k ^ (1 << 7) } else { k };
            assert_eq!(out.amplitudes()[expected], c(1.0), "k = {k}");
        }
    }

    #[test]
    fn swap_exchanges_index_bits() {
        let out = apply_gate(Statevector::basis(3, 0b001).unwrap(), &Gate::Swap(0, 2)).unwrap();
        assert_eq!(out.amplitudes()[0b100], c(1.0));
    }

    #[test]
    fn mcx_without_controls_is_x() {
        assert_eq!(Gate::mcx(vec![], 3), Gate::X(3));
    }

    #[test]
    fn cnot_is_single_closed_control() {
        let cnot = Gate::Cnot {
            control: 0,
            target: 1,
        };
        let mcx = Gate::mcx(vec![Control::closed(0)], 1);
        for k in 0..4 {
            let a = apply_gate(Statevector::basis(2, k).unwrap(), &cnot).unwrap();
            let b = apply_gate(Statevector::basis(2, k).unwrap(), &mcx).unwrap();
            assert_eq!(a, b);
        }
    }

    #[test]
    fn structural_errors() {
        let mut s = Statevector::basis(2, 0).unwrap();
        assert!(matches!(
            s.apply(&Gate::H(2)),
            Err(Error::QubitOutOfRange {
                qubit: 2,
                n_qubits: 2
            })
        ));
        assert!(matches!(
            s.apply(&Gate::Swap(1, 1)),
            Err(Error::DuplicateQubit { qubit: 1, .. })
        ));
        assert!(s.apply(&Gate::mcx(vec![Control::open(1)], 1)).is_err());
        assert!(Statevector::basis(2, 4).is_err());
        assert!(Statevector::from_amplitudes(vec![c(1.0), c(1.0)]).is_err());
    }

    #[test]
    fn empty_circuit_is_identity() {
        let s = random_state(3, 1);
        assert_eq!(
            run_circuit(s.clone(), &Circuit::new(3, "empty")).unwrap(),
            s
        );
    }

    #[test]
    fn double_hadamard_restores_state() {
        let s = random_state(4, 2);
        let mut circuit = Circuit::new(4, "hh");
        circuit.push(Gate::H(0)).unwrap();
        circuit.push(Gate::H(0)).unwrap();
        let out = run_circuit(s.clone(), &circuit).unwrap();
        assert_close(out.amplitudes(), s.amplitudes(), 1e-12);
    }

    #[test]
    fn circuit_width_must_match() {
        let s = Statevector::basis(3, 0).unwrap();
        assert!(matches!(
            run_circuit(s, &Circuit::new(2, "narrow")),
            Err(Error::QubitCountMismatch {
                circuit: 2,
                state: 3
            })
        ));
    }

    #[test]
    fn amplitude_encoding_examples() {
        let (s, scale) = amplitude_encode(&Coefficients::time(vec![3.0, 4.0]).unwrap()).unwrap();
        assert_eq!(scale, 5.0);
        assert_close(s.amplitudes(), &[c(0.6), c(0.8)], 1e-15);

        let (s, scale) = amplitude_encode(&Coefficients::time(vec![1.0; 4]).unwrap()).unwrap();
        assert_eq!(scale, 2.0);
        assert_close(s.amplitudes(), &[c(0.5); 4], 1e-15);

        assert!(matches!(
            amplitude_encode(&Coefficients::time(vec![0.0; 4]).unwrap()),
            Err(Error::ZeroSignal)
        ));
    }

    #[test]
    fn projection_of_tagged_superposition() {
        // (|0⟩|a⟩ + |1⟩|b⟩)/√2 with a = |01⟩, b = |10⟩ on two data qubits
        let r = std::f64::consts::FRAC_1_SQRT_2;
        let mut amps = vec![c(0.0); 8];
        amps[0b001] = c(r);
        amps[0b110] = c(r);
        let s = Statevector::from_amplitudes(amps).unwrap();
        let (zero, p0) = project_ancilla(&s, 2, false).unwrap();
        let (one, p1) = project_ancilla(&s, 2, true).unwrap();
        assert_close(&zero, &[c(0.0), c(r), c(0.0), c(0.0)], 1e-15);
        assert_close(&one, &[c(0.0), c(0.0), c(r), c(0.0)], 1e-15);
        assert!((p0 - 0.5).abs() < 1e-15);
        assert!((p0 + p1 - 1.0).abs() < 1e-12);
    }

    #[test]
    fn projection_onto_empty_branch() {
        let s = Statevector::basis(3, 0b101).unwrap();
        let (branch, p) = project_ancilla(&s, 2, false).unwrap();
        assert!(branch.iter().all(|a| a.norm() == 0.0));
        assert_eq!(p, 0.0);
        assert!(project_ancilla(&s, 3, false).is_err());
    }

    #[test]
    fn ancilla_is_most_significant() {
        let s = Statevector::basis(2, 3).unwrap().with_ancilla();
        assert_eq!(s.n_qubits(), 3);
        assert_eq!(s.amplitudes()[3], c(1.0));
    }
}
