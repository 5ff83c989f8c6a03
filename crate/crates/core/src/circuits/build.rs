use std::ops::Range;

use serde::Serialize;

use super::Circuit;
use crate::filters::FilterSpec;
use crate::sim::{Control, Gate, Polarity};
use crate::{Error, Result};

fn check_width(n: u32) -> Result<usize> {
    if n == 0 {
        return Err(Error::ZeroWidth);
    }
    Ok(n as usize)
}

/// Natural-to-sequency permutation `U_Z` on `n` qubits: `|s⟩ ↦ |g⟩`.
///
/// A CNOT chain leaves `s_0 ⊕ … ⊕ s_k` on qubit `k`, then `⌊n/2⌋` swaps
/// reverse the qubit order.
pub fn build_uz(n: u32) -> Result<Circuit> {
    let n = check_width(n)?;
    let mut circuit = Circuit::new(n, "uz");
    for k in 1..n {
        circuit.push(Gate::Cnot {
            control: k - 1,
            target: k,
        })?;
    }
    for j in 0..n / 2 {
        circuit.push(Gate::Swap(j, n - 1 - j))?;
    }
    Ok(circuit)
}

pub fn build_uz_inverse(n: u32) -> Result<Circuit> {
    Ok(build_uz(n)?.inverse("uz_inverse"))
}

/// Sequency-ordered Walsh-Hadamard transform: `H^{⊗n}` followed by `U_Z`.
pub fn build_sequency_wht(n: u32) -> Result<Circuit> {
    let width = check_width(n)?;
    let mut circuit = Circuit::new(width, "sequency_wht");
    for q in 0..width {
        circuit.push(Gate::H(q))?;
    }
    circuit.append(&build_uz(n)?)?;
    Ok(circuit)
}

/// Index block `[prefix·2^low_bits, (prefix+1)·2^low_bits)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct DyadicBlock {
    pub prefix: u64,
    pub low_bits: u32,
}

impl DyadicBlock {
    pub fn range(&self) -> Range<u64> {
        let start = self.prefix << self.low_bits;
        start..start + (1 << self.low_bits)
    }

    /// Controls on the top `n - low_bits` qubits, most significant first, with
    /// polarity given by the matching bit of `prefix`.
    pub fn controls(&self, n: u32) -> Vec<Control> {
        (self.low_bits..n)
            .rev()
            .map(|q| Control {
                qubit: q as usize,
                polarity: if (self.prefix >> (q - self.low_bits)) & 1 == 1 {
                    Polarity::Closed
                } else {
                    Polarity::Open
                },
            })
            .collect()
    }
}

/// A set of sequency indices within `[0, 2^n)`, kept as sorted, disjoint,
/// non-touching half-open ranges.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SequencyBand {
    bits: u32,
    ranges: Vec<Range<u64>>,
}

impl SequencyBand {
    /// Rejects empty, out-of-range or overlapping intervals. Touching
    /// intervals are merged.
    pub fn new(bits: u32, intervals: &[Range<u64>]) -> Result<Self> {
        check_width(bits)?;
        let len = 1u64 << bits;
        let mut sorted = intervals.to_vec();
        sorted.sort_by_key(|r| r.start);
        let mut ranges: Vec<Range<u64>> = Vec::with_capacity(sorted.len());
        for r in sorted {
            if r.start >= r.end {
                return Err(Error::InvalidBand(format!(
                    "empty interval [{}, {})",
                    r.start, r.end
                )));
            }
            if r.end > len {
                return Err(Error::InvalidBand(format!(
                    "interval [{}, {}) exceeds {len}",
                    r.start, r.end
                )));
            }
            match ranges.last_mut() {
                Some(last) if r.start < last.end => {
                    return Err(Error::InvalidBand(format!(
                        "intervals [{}, {}) and [{}, {}) overlap",
                        last.start, last.end, r.start, r.end
                    )));
                }
                Some(last) if r.start == last.end => last.end = r.end,
                _ => ranges.push(r),
            }
        }
        Ok(Self { bits, ranges })
    }

    pub fn bits(&self) -> u32 {
        self.bits
    }

    pub fn ranges(&self) -> &[Range<u64>] {
        &self.ranges
    }

    pub fn is_empty(&self) -> bool {
        self.ranges.is_empty()
    }

    pub fn contains(&self, index: u64) -> bool {
        self.ranges.iter().any(|r| r.contains(&index))
    }

    pub fn complement(&self) -> SequencyBand {
        let mut ranges = Vec::new();
        let mut cursor = 0;
        for r in &self.ranges {
            if r.start > cursor {
                ranges.push(cursor..r.start);
            }
            cursor = r.end;
        }
        let len = 1u64 << self.bits;
        if cursor < len {
            ranges.push(cursor..len);
        }
        SequencyBand {
            bits: self.bits,
            ranges,
        }
    }

    /// Greedy cover by maximal aligned power-of-two blocks, in index order.
    /// For a single interval this is the smallest such cover.
    pub fn dyadic_blocks(&self) -> Vec<DyadicBlock> {
        let mut blocks = Vec::new();
        for r in &self.ranges {
            let mut start = r.start;
            while start < r.end {
                let align = if start == 0 {
                    self.bits
                } else {
                    start.trailing_zeros().min(self.bits)
                };
                let fit = 63 - (r.end - start).leading_zeros();
                let low_bits = align.min(fit);
                blocks.push(DyadicBlock {
                    prefix: start >> low_bits,
                    low_bits,
                });
                start += 1 << low_bits;
            }
        }
        blocks
    }
}

/// Step-5 selector on `n + 1` qubits: flips the ancilla `q_n` exactly on the
/// data indices in `band`, one MCX per dyadic block.
pub fn build_sequency_selector(n: u32, band: &SequencyBand) -> Result<Circuit> {
    let width = check_width(n)?;
    if band.bits() != n {
        return Err(Error::InvalidBand(format!(
            "band is over {} bits, selector over {n}",
            band.bits()
        )));
    }
    let mut circuit = Circuit::new(width + 1, "selector");
    for block in band.dyadic_blocks() {
        circuit.push(Gate::mcx(block.controls(n), width))?;
    }
    Ok(circuit)
}

/// Which ancilla outcome carries the pass band.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum AncillaConvention {
    /// X on the ancilla before the transform; pass band on |0⟩.
    #[default]
    PassOnZero,
    /// No initial X; pass band on |1⟩.
    PassOnOne,
}

impl AncillaConvention {
    pub fn pass_outcome(self) -> bool {
        matches!(self, AncillaConvention::PassOnOne)
    }
}

#[derive(Clone, Debug, Default)]
pub struct FilterCircuitOptions {
    pub convention: AncillaConvention,
    /// Gates inserted after the selector and before `U_Z⁻¹`, on `n + 1`
    /// qubits. Acts on the split sequency-domain state.
    pub sequency_stage: Option<Circuit>,
}

pub fn build_filter_circuit(n: u32, spec: &FilterSpec) -> Result<Circuit> {
    build_filter_circuit_with(n, spec, &FilterCircuitOptions::default())
}

/// Filter circuit on `n + 1` qubits (ancilla `q_n`).
///
/// Layout: X on the ancilla with `H^{⊗n}` on the data, `U_Z`, the selector,
/// the optional sequency stage, `U_Z⁻¹`, `H^{⊗n}`. Under the default
/// convention the ancilla ends in |0⟩ on the pass band.
///
/// The selector flips the ancilla either on the pass band or, via an extra X,
/// on the stop band; the latter X meets the initial X and both are elided. The
/// stop-band form is used when it needs fewer MCX gates, and on ties for
/// band-pass and DC filters. The DC filter skips `U_Z` and its inverse, since
/// sequency 0 sits at natural index 0.
pub fn build_filter_circuit_with(
    n: u32,
    spec: &FilterSpec,
    options: &FilterCircuitOptions,
) -> Result<Circuit> {
    let width = check_width(n)?;
    let pass = spec.pass_band(n)?;
    let stop = pass.complement();
    let ancilla = width;

    let pass_blocks = pass.dyadic_blocks().len();
    let stop_blocks = stop.dyadic_blocks().len();
    let prefer_stop_on_tie = matches!(spec, FilterSpec::Dc | FilterSpec::BandPass { .. });
    let stop_form = stop_blocks < pass_blocks || (prefer_stop_on_tie && stop_blocks == pass_blocks);
    let permute = !matches!(spec, FilterSpec::Dc);

    let mut circuit = Circuit::new(width + 1, spec.label());
    if options.convention == AncillaConvention::PassOnZero {
        circuit.push(Gate::X(ancilla))?;
    }
    for q in 0..width {
        circuit.push(Gate::H(q))?;
    }
    if permute {
        circuit.append(&build_uz(n)?)?;
    }
    if stop_form {
        circuit.push(Gate::X(ancilla))?;
        circuit.append(&build_sequency_selector(n, &stop)?)?;
    } else {
        circuit.append(&build_sequency_selector(n, &pass)?)?;
    }
    if let Some(stage) = &options.sequency_stage {
        if stage.n_qubits() != width + 1 {
            return Err(Error::QubitCountMismatch {
                circuit: stage.n_qubits(),
                state: width + 1,
            });
        }
        circuit.append(stage)?;
    }
    if permute {
        circuit.append(&build_uz_inverse(n)?)?;
    }
    for q in 0..width {
        circuit.push(Gate::H(q))?;
    }
    circuit.elide_redundant_x();
    Ok(circuit)
}
