//! Self-check suites: the sequency formula against brute-force zero-crossing
//! counts, simulated circuits against dense matrices, and quantum filtering
//! against the classical oracle.

use serde::Serialize;

use crate::circuits::{build_sequency_wht, build_uz};
use crate::filters::{compare, filter_classical_oracle, filter_quantum, FilterSpec};
use crate::signals::{discretize, Waveform};
use crate::sim::{run_circuit, Statevector};
use crate::walsh::{
    natural_to_sequency_perm, sequency_matrix, sequency_of, sequency_recursion,
    zero_crossings_bruteforce, SequencyIndex,
};
use crate::Result;

/// Tolerance for the sign/permutation arithmetic of a single transform.
pub const EXACT_TOLERANCE: f64 = 1e-12;
/// Tolerance for composed floating-point pipelines.
pub const PIPELINE_TOLERANCE: f64 = 1e-10;

/// Deliberate defects for checking that the harness can fail.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Fault {
    /// Negates one entry of every simulated transform column.
    SignFlip,
}

#[derive(Clone, Copy, Debug)]
pub struct VerifyOptions {
    pub n_max: u32,
    pub fault: Option<Fault>,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        Self {
            n_max: 8,
            fault: None,
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct SuiteReport {
    pub name: &'static str,
    pub checks: usize,
    pub failures: usize,
    pub max_error: f64,
}

impl SuiteReport {
    fn new(name: &'static str) -> Self {
        Self {
            name,
            checks: 0,
            failures: 0,
            max_error: 0.0,
        }
    }

    fn record(&mut self, ok: bool) {
        self.checks += 1;
        if !ok {
            self.failures += 1;
        }
    }

    fn record_error(&mut self, error: f64, tolerance: f64) {
        self.max_error = self.max_error.max(error);
        self.record(error <= tolerance);
    }

    pub fn passed(&self) -> bool {
        self.failures == 0 && self.checks > 0
    }
}

pub fn run_all(options: &VerifyOptions) -> Result<Vec<SuiteReport>> {
    Ok(vec![
        sequency_suite(options.n_max)?,
        circuit_suite(options.n_max, options.fault)?,
        filter_suite(options.n_max)?,
    ])
}

/// Closed-form sequency and the doubling recursion against enumeration, for
/// every `s` and every `n ≤ n_max`.
pub fn sequency_suite(n_max: u32) -> Result<SuiteReport> {
    let mut report = SuiteReport::new("sequency formula vs zero-crossing count");
    for n in 1..=n_max {
        for s in 0..1u64 << n {
            let idx = SequencyIndex::new(s, n)?;
            let g = sequency_of(idx);
            let brute = zero_crossings_bruteforce(idx)?;
            let recursion = *sequency_recursion(idx).last().expect("n ≥ 1");
            report.record(g == brute && g == recursion);
        }
    }
    Ok(report)
}

/// Simulated sequency-WHT columns against the dense matrix and simulated
/// `U_Z` against the index permutation.
pub fn circuit_suite(n_max: u32, fault: Option<Fault>) -> Result<SuiteReport> {
    let mut report = SuiteReport::new("circuits vs dense transforms");
    for n in 1..=n_max {
        let width = n as usize;
        let matrix = sequency_matrix(n)?;
        let wht = build_sequency_wht(n)?;
        let uz = build_uz(n)?;
        let perm = natural_to_sequency_perm(n)?;
        for j in 0..1usize << n {
            let out = run_circuit(Statevector::basis(width, j)?, &wht)?;
            let mut column: Vec<f64> = out.amplitudes().iter().map(|a| a.re).collect();
            if fault == Some(Fault::SignFlip) {
                let last = column.len() - 1;
                column[last] = -column[last];
            }
            let error = column
                .iter()
                .zip(out.amplitudes())
                .enumerate()
                .map(|(k, (re, a))| (re - matrix[k][j]).abs().max(a.im.abs()))
                .fold(0.0, f64::max);
            report.record_error(error, EXACT_TOLERANCE);

            let image = run_circuit(Statevector::basis(width, j)?, &uz)?;
            report.record(image.amplitudes()[perm.forward[j]].re == 1.0);
        }
    }
    Ok(report)
}

/// Filter specs exercised for a given width: dyadic cutoffs at a quarter,
/// half and three quarters of `N` (low and high), the middle band and DC.
pub fn standard_specs(n: u32) -> Vec<FilterSpec> {
    let len = 1u64 << n;
    let mut cutoffs = vec![len / 2];
    if len >= 4 {
        cutoffs.insert(0, len / 4);
        cutoffs.push(3 * len / 4);
    }
    let mut specs = Vec::new();
    for &cutoff in &cutoffs {
        specs.push(FilterSpec::LowPass { cutoff });
        specs.push(FilterSpec::HighPass { cutoff });
    }
    if len >= 4 {
        specs.push(FilterSpec::BandPass {
            low: len / 4,
            high: 3 * len / 4,
        });
    }
    specs.push(FilterSpec::Dc);
    specs
}

/// Quantum path against the classical oracle for every waveform family.
pub fn filter_suite(n_max: u32) -> Result<SuiteReport> {
    let mut report = SuiteReport::new("quantum filters vs classical oracle");
    let mut waveforms = Waveform::families();
    waveforms.push(("composite-f", Waveform::composite_f()));
    waveforms.push(("composite-g", Waveform::composite_g()));
    for n in 1..=n_max {
        for (_, waveform) in &waveforms {
            let signal = discretize(waveform, n);
            if signal.norm() == 0.0 {
                continue;
            }
            for spec in standard_specs(n) {
                let quantum = filter_quantum(&signal, &spec)?;
                let (pass, stop) = filter_classical_oracle(&signal, &spec)?;
                let error = compare(quantum.pass_branch.values(), pass.values())?
                    .linf
                    .max(compare(quantum.stop_branch.values(), stop.values())?.linf);
                report.record_error(error, PIPELINE_TOLERANCE);
                report.record((quantum.p_pass + quantum.p_stop - 1.0).abs() <= EXACT_TOLERANCE);
            }
        }
    }
    Ok(report)
}
