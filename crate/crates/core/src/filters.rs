//! Sequency-domain filtering on two independent paths.
//!
//! [`filter_quantum`] amplitude-encodes the signal, runs the filter circuit on
//! the simulator and reads both ancilla branches. [`filter_classical_oracle`]
//! masks the sequency spectrum of the signal directly. Both return results in
//! the signal's own units so they can be compared entry by entry.

use serde::Serialize;

use crate::circuits::{build_filter_circuit_with, FilterCircuitOptions, SequencyBand};
use crate::sim::{amplitude_encode, project_ancilla, run_circuit};
use crate::walsh::{inverse_sequency_transform, sequency_transform, Coefficients, Order};
use crate::{Error, Result};

/// Filter kind with its cutoffs, in sequency units. Pass bands are:
/// `[1, N)` for DC removal, `[0, cutoff)` for low-pass, `[cutoff, N)` for
/// high-pass and `[low, high)` for band-pass.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum FilterSpec {
    Dc,
    LowPass { cutoff: u64 },
    HighPass { cutoff: u64 },
    BandPass { low: u64, high: u64 },
}

impl FilterSpec {
    pub fn label(&self) -> &'static str {
        match self {
            FilterSpec::Dc => "dc",
            FilterSpec::LowPass { .. } => "low-pass",
            FilterSpec::HighPass { .. } => "high-pass",
            FilterSpec::BandPass { .. } => "band-pass",
        }
    }

    pub fn validate(&self, bits: u32) -> Result<()> {
        let len = 1u64 << bits;
        let ok = match *self {
            FilterSpec::Dc => true,
            FilterSpec::LowPass { cutoff } | FilterSpec::HighPass { cutoff } => {
                0 < cutoff && cutoff <= len
            }
            FilterSpec::BandPass { low, high } => low < high && high <= len,
        };
        if ok {
            Ok(())
        } else {
            Err(Error::InvalidFilter(format!("{self:?} for N = {len}")))
        }
    }

    pub fn pass_band(&self, bits: u32) -> Result<SequencyBand> {
        if bits == 0 {
            return Err(Error::ZeroWidth);
        }
        self.validate(bits)?;
        let len = 1u64 << bits;
        let range = match *self {
            FilterSpec::Dc => 1..len,
            FilterSpec::LowPass { cutoff } => 0..cutoff,
            FilterSpec::HighPass { cutoff } => cutoff..len,
            FilterSpec::BandPass { low, high } => low..high,
        };
        if range.is_empty() {
            SequencyBand::new(bits, &[])
        } else {
            SequencyBand::new(bits, &[range])
        }
    }
}

/// Output of a filter run, in the input signal's units.
#[derive(Clone, Debug, PartialEq)]
pub struct FilterResult {
    pub pass_branch: Coefficients,
    pub stop_branch: Coefficients,
    pub p_pass: f64,
    pub p_stop: f64,
    /// `‖signal‖₂`, the amplitude-encoding normalization.
    pub scale: f64,
}

pub fn filter_quantum(signal: &Coefficients, spec: &FilterSpec) -> Result<FilterResult> {
    filter_quantum_with(signal, spec, &FilterCircuitOptions::default())
}

/// Runs the filter circuit on the simulator. Branch amplitudes are real for
/// the built-in circuits; only the real part is kept.
pub fn filter_quantum_with(
    signal: &Coefficients,
    spec: &FilterSpec,
    options: &FilterCircuitOptions,
) -> Result<FilterResult> {
    let bits = signal.bits();
    let circuit = build_filter_circuit_with(bits, spec, options)?;
    let (state, scale) = amplitude_encode(signal)?;
    let out = run_circuit(state.with_ancilla(), &circuit)?;

    let ancilla = bits as usize;
    let pass_outcome = options.convention.pass_outcome();
    let (pass, p_pass) = project_ancilla(&out, ancilla, pass_outcome)?;
    let (stop, p_stop) = project_ancilla(&out, ancilla, !pass_outcome)?;
    let restore = |branch: Vec<num_complex::Complex64>| {
        Coefficients::time(branch.into_iter().map(|a| a.re * scale).collect())
    };
    Ok(FilterResult {
        pass_branch: restore(pass)?,
        stop_branch: restore(stop)?,
        p_pass,
        p_stop,
        scale,
    })
}

/// Classical reference: zero the sequency coefficients outside (pass) or
/// inside (stop) the pass band and transform each part back.
pub fn filter_classical_oracle(
    signal: &Coefficients,
    spec: &FilterSpec,
) -> Result<(Coefficients, Coefficients)> {
    expect_time(signal)?;
    if signal.norm() == 0.0 {
        return Err(Error::ZeroSignal);
    }
    let band = spec.pass_band(signal.bits())?;
    let spectrum = sequency_transform(signal.values())?;
    let (mut pass, mut stop) = (spectrum.clone(), spectrum);
    for (g, (p, s)) in pass.iter_mut().zip(stop.iter_mut()).enumerate() {
        if band.contains(g as u64) {
            *s = 0.0;
        } else {
            *p = 0.0;
        }
    }
    Ok((
        Coefficients::time(inverse_sequency_transform(&pass)?)?,
        Coefficients::time(inverse_sequency_transform(&stop)?)?,
    ))
}

/// Mean-subtracted signal.
pub fn dc_remove_oracle(signal: &Coefficients) -> Result<Coefficients> {
    expect_time(signal)?;
    if signal.norm() == 0.0 {
        return Err(Error::ZeroSignal);
    }
    let mean = signal.values().iter().sum::<f64>() / signal.len() as f64;
    Coefficients::time(signal.values().iter().map(|x| x - mean).collect())
}

fn expect_time(signal: &Coefficients) -> Result<()> {
    if signal.order() == Order::Time {
        Ok(())
    } else {
        Err(Error::OrderMismatch {
            expected: Order::Time,
            found: signal.order(),
        })
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Serialize)]
pub struct Metrics {
    pub l2_abs: f64,
    /// `‖a − b‖₂ / ‖b‖₂`, or `l2_abs` itself when `b` is zero.
    pub l2_rel: f64,
    pub linf: f64,
}

/// Distance between `a` and a reference `b`.
pub fn compare(a: &[f64], b: &[f64]) -> Result<Metrics> {
    if a.len() != b.len() {
        return Err(Error::LengthMismatch {
            left: a.len(),
            right: b.len(),
        });
    }
    let (mut sq, mut linf, mut ref_sq) = (0.0f64, 0.0f64, 0.0f64);
    for (x, y) in a.iter().zip(b) {
        let d = x - y;
        sq += d * d;
        linf = linf.max(d.abs());
        ref_sq += y * y;
    }
    let l2_abs = sq.sqrt();
    let denom = ref_sq.sqrt();
    Ok(Metrics {
        l2_abs,
        l2_rel: if denom > 0.0 { l2_abs / denom } else { l2_abs },
        linf,
    })
}
