//! `sequency` command-line front end.
//!
//! Exit codes: 0 success, 1 verification failure, 2 usage error, 3 I/O or
//! input-data error.

use std::ffi::OsString;
use std::fmt::Write as _;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::circuits::{
    build_filter_circuit_with, build_sequency_wht, build_uz, gate_stats, AncillaConvention,
    Circuit, FilterCircuitOptions, GateStats,
};
use crate::filters::{compare, filter_classical_oracle, filter_quantum_with, FilterSpec, Metrics};
use crate::signals::{load_csv, save_csv, save_spectrum_csv};
use crate::verify::{run_all, Fault, VerifyOptions};
use crate::walsh::{
    dft_spectrum, fwht_natural, sequency_of, sequency_transform, wht_sequency, Coefficients, Order,
    SequencyIndex,
};
use crate::Error;

pub const EXIT_OK: i32 = 0;
pub const EXIT_VERIFY_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_IO: i32 = 3;

#[derive(Debug, Parser)]
#[command(
    name = "sequency",
    version,
    about = "Sequency-ordered Walsh-Hadamard transforms and quantum-circuit filters"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Csv,
    Json,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum TransformOrder {
    Natural,
    Sequency,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum FilterKind {
    Dc,
    Low,
    High,
    Band,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum SpectrumKind {
    Sequency,
    Frequency,
    Both,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum CircuitKind {
    SequencyWht,
    Uz,
    Dc,
    Low,
    High,
    Band,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum FaultArg {
    SignFlip,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Walsh-Hadamard transform of a CSV signal.
    Transform {
        #[arg(long, value_enum)]
        order: TransformOrder,
        /// Treat the input as coefficients and return time-domain samples.
        #[arg(long)]
        inverse: bool,
        #[arg(long)]
        input: PathBuf,
        #[arg(long)]
        output: PathBuf,
    },
    /// Split a CSV signal into pass and stop branches on both paths.
    Filter {
        #[arg(long, value_enum)]
        kind: FilterKind,
        /// Cutoff sequency: an integer or N, N/2, N/4, 3N/4, ...
        #[arg(long)]
        cutoff: Option<String>,
        /// Band edges `L:H` for a pass band [L, H), e.g. N/4:3N/4.
        #[arg(long)]
        band: Option<String>,
        /// Put the pass band on ancilla |1⟩ (no initial X).
        #[arg(long)]
        swap_ancilla: bool,
        #[arg(long)]
        input: PathBuf,
        /// Writes PREFIX.pass.csv, PREFIX.stop.csv and PREFIX.meta.json.
        #[arg(long)]
        output_prefix: PathBuf,
    },
    /// Sequency and/or Fourier magnitude spectrum as index,value rows.
    Spectrum {
        #[arg(long, value_enum, default_value = "sequency")]
        which: SpectrumKind,
        #[arg(long)]
        input: PathBuf,
        /// With `--which both`, writes STEM.sequency.csv and STEM.frequency.csv.
        #[arg(long)]
        output: PathBuf,
    },
    /// Table of natural row index to sequency.
    SequencyMap {
        #[arg(long)]
        n: u32,
        #[arg(long, value_enum, default_value = "csv")]
        format: Format,
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Run the self-check suites.
    Verify {
        #[arg(long, default_value_t = 8)]
        n_max: u32,
        #[arg(long, value_enum, default_value = "csv")]
        format: Format,
        #[arg(long, value_enum, hide = true)]
        inject_fault: Option<FaultArg>,
    },
    /// Gate counts and depth of a circuit, optionally dumped as JSON.
    Gates {
        #[arg(long, value_enum)]
        kind: CircuitKind,
        #[arg(long)]
        n: u32,
        #[arg(long)]
        cutoff: Option<String>,
        #[arg(long)]
        band: Option<String>,
        #[arg(long)]
        swap_ancilla: bool,
        #[arg(long, value_enum, default_value = "csv")]
        format: Format,
        #[arg(long)]
        dump: Option<PathBuf>,
        /// Emit one CSV row per width from 3 up to this value instead.
        #[arg(long)]
        sweep_to: Option<u32>,
        #[arg(long)]
        output: Option<PathBuf>,
    },
}

#[derive(Debug)]
enum CliError {
    Usage(String),
    Lib(Error),
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        match e {
            Error::InvalidFilter(_) | Error::InvalidBand(_) | Error::ZeroWidth => {
                CliError::Usage(e.to_string())
            }
            other => CliError::Lib(other),
        }
    }
}

impl From<std::io::Error> for CliError {
    fn from(e: std::io::Error) -> Self {
        CliError::Lib(e.into())
    }
}

type CliResult<T> = Result<T, CliError>;

/// Parses `args` (program name first) and runs the command. Normal output
/// goes to `out`, diagnostics to `err`. Returns the process exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if code == EXIT_OK {
                write!(out, "{text}")
            } else {
                write!(err, "{text}")
            };
            return code;
        }
    };
    match execute(cli.command, out) {
        Ok(code) => code,
        Err(CliError::Usage(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            EXIT_USAGE
        }
        Err(CliError::Lib(e)) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_IO
        }
    }
}

fn execute(command: Command, out: &mut dyn Write) -> CliResult<i32> {
    match command {
        Command::Transform {
            order,
            inverse,
            input,
            output,
        } => transform(order, inverse, &input, &output, out),
        Command::Filter {
            kind,
            cutoff,
            band,
            swap_ancilla,
            input,
            output_prefix,
        } => filter(
            kind,
            cutoff,
            band,
            swap_ancilla,
            &input,
            &output_prefix,
            out,
        ),
        Command::Spectrum {
            which,
            input,
            output,
        } => spectrum(which, &input, &output, out),
        Command::SequencyMap { n, format, output } => sequency_map(n, format, output, out),
        Command::Verify {
            n_max,
            format,
            inject_fault,
        } => verify(n_max, format, inject_fault, out),
        Command::Gates {
            kind,
            n,
            cutoff,
            band,
            swap_ancilla,
            format,
            dump,
            sweep_to,
            output,
        } => {
            let request = GateRequest {
                kind,
                cutoff,
                band,
                swap_ancilla,
            };
            match sweep_to {
                Some(to) => gate_sweep(&request, n, to, output, out),
                None => gates(&request, n, format, dump, output, out),
            }
        }
    }
}

fn load_signal(path: &Path) -> CliResult<Coefficients> {
    let values = load_csv(path)?;
    Ok(Coefficients::time(values)?)
}

fn emit(text: &str, output: Option<PathBuf>, out: &mut dyn Write) -> CliResult<()> {
    match output {
        Some(path) => std::fs::write(path, text)?,
        None => out.write_all(text.as_bytes())?,
    }
    Ok(())
}

fn to_json<T: Serialize>(value: &T) -> CliResult<String> {
    let mut text = serde_json::to_string_pretty(value).map_err(Error::from)?;
    text.push('\n');
    Ok(text)
}

fn transform(
    order: TransformOrder,
    inverse: bool,
    input: &Path,
    output: &Path,
    out: &mut dyn Write,
) -> CliResult<i32> {
    let values = load_csv(input)?;
    let tag = match (order, inverse) {
        (_, false) => Order::Time,
        (TransformOrder::Natural, true) => Order::Natural,
        (TransformOrder::Sequency, true) => Order::Sequency,
    };
    let v = Coefficients::new(values, tag)?;
    let result = match order {
        TransformOrder::Natural => fwht_natural(&v, inverse)?,
        TransformOrder::Sequency => wht_sequency(&v, inverse)?,
    };
    save_csv(output, result.values())?;
    let (before, after) = (v.norm(), result.norm());
    writeln!(
        out,
        "parseval: input norm {before:.17e}, output norm {after:.17e}, difference {:.3e}",
        (before - after).abs()
    )?;
    Ok(EXIT_OK)
}

/// Evaluates `7`, `N`, `N/4`, `3N/4`, `3*N/4` for a length `len`.
fn parse_cutoff(text: &str, len: u64) -> CliResult<u64> {
    let bad = || CliError::Usage(format!("cannot read cutoff {text:?} for N = {len}"));
    let t: String = text.chars().filter(|c| !c.is_whitespace()).collect();
    let Some(pos) = t.find(['N', 'n']) else {
        return t.parse().map_err(|_| bad());
    };
    let numerator = match t[..pos].trim_end_matches('*') {
        "" => 1,
        k => k.parse::<u64>().map_err(|_| bad())?,
    };
    let denominator = match &t[pos + 1..] {
        "" => 1,
        rest => rest
            .strip_prefix('/')
            .and_then(|d| d.parse::<u64>().ok())
            .filter(|&d| d > 0)
            .ok_or_else(bad)?,
    };
    let scaled = numerator.checked_mul(len).ok_or_else(bad)?;
    if scaled % denominator != 0 {
        return Err(bad());
    }
    Ok(scaled / denominator)
}

fn filter_spec(
    kind: FilterKind,
    cutoff: Option<&str>,
    band: Option<&str>,
    len: u64,
) -> CliResult<FilterSpec> {
    let need_cutoff = || {
        cutoff
            .ok_or_else(|| CliError::Usage("--cutoff is required for this filter".into()))
            .and_then(|c| parse_cutoff(c, len))
    };
    Ok(match kind {
        FilterKind::Dc => FilterSpec::Dc,
        FilterKind::Low => FilterSpec::LowPass {
            cutoff: need_cutoff()?,
        },
        FilterKind::High => FilterSpec::HighPass {
            cutoff: need_cutoff()?,
        },
        FilterKind::Band => {
            let text = band.ok_or_else(|| CliError::Usage("--band L:H is required".into()))?;
            let (low, high) = text
                .split_once(':')
                .ok_or_else(|| CliError::Usage(format!("band {text:?} is not of the form L:H")))?;
            FilterSpec::BandPass {
                low: parse_cutoff(low, len)?,
                high: parse_cutoff(high, len)?,
            }
        }
    })
}

fn convention(swap_ancilla: bool) -> AncillaConvention {
    if swap_ancilla {
        AncillaConvention::PassOnOne
    } else {
        AncillaConvention::PassOnZero
    }
}

#[derive(Serialize)]
struct ConventionMeta {
    convention: AncillaConvention,
    swapped: bool,
    ancilla_0: &'static str,
    ancilla_1: &'static str,
}

#[derive(Serialize)]
struct StatsMeta {
    #[serde(flatten)]
    stats: GateStats,
    total: usize,
    mcx_toffoli_equivalent: usize,
}

impl From<GateStats> for StatsMeta {
    fn from(stats: GateStats) -> Self {
        Self {
            total: stats.total(),
            mcx_toffoli_equivalent: stats.mcx_toffoli_equivalent(),
            stats,
        }
    }
}

#[derive(Serialize)]
struct PathErrors {
    pass: Metrics,
    stop: Metrics,
}

#[derive(Serialize)]
struct FilterMeta {
    filter: FilterSpec,
    n: u32,
    len: usize,
    ancilla: ConventionMeta,
    p_pass: f64,
    p_stop: f64,
    scale: f64,
    gate_stats: StatsMeta,
    quantum_vs_oracle: PathErrors,
    quantum_reconstruction: Metrics,
    oracle_reconstruction: Metrics,
    /// Largest |sequency coefficient| of the quantum pass branch in the stop band.
    pass_stop_band_leakage: f64,
}

fn filter(
    kind: FilterKind,
    cutoff: Option<String>,
    band: Option<String>,
    swap_ancilla: bool,
    input: &Path,
    prefix: &Path,
    out: &mut dyn Write,
) -> CliResult<i32> {
    let signal = load_signal(input)?;
    let n = signal.bits();
    let spec = filter_spec(
        kind,
        cutoff.as_deref(),
        band.as_deref(),
        signal.len() as u64,
    )?;
    let options = FilterCircuitOptions {
        convention: convention(swap_ancilla),
        sequency_stage: None,
    };
    let circuit = build_filter_circuit_with(n, &spec, &options)?;
    let quantum = filter_quantum_with(&signal, &spec, &options)?;
    let (pass, stop) = filter_classical_oracle(&signal, &spec)?;

    let sum = |a: &Coefficients, b: &Coefficients| -> Vec<f64> {
        a.values()
            .iter()
            .zip(b.values())
            .map(|(x, y)| x + y)
            .collect()
    };
    let band = spec.pass_band(n)?;
    let leakage = sequency_transform(quantum.pass_branch.values())?
        .iter()
        .enumerate()
        .filter(|(g, _)| !band.contains(*g as u64))
        .map(|(_, x)| x.abs())
        .fold(0.0, f64::max);

    let (ancilla_0, ancilla_1) = if swap_ancilla {
        ("stop", "pass")
    } else {
        ("pass", "stop")
    };
    let meta = FilterMeta {
        filter: spec,
        n,
        len: signal.len(),
        ancilla: ConventionMeta {
            convention: options.convention,
            swapped: swap_ancilla,
            ancilla_0,
            ancilla_1,
        },
        p_pass: quantum.p_pass,
        p_stop: quantum.p_stop,
        scale: quantum.scale,
        gate_stats: gate_stats(&circuit).into(),
        quantum_vs_oracle: PathErrors {
            pass: compare(quantum.pass_branch.values(), pass.values())?,
            stop: compare(quantum.stop_branch.values(), stop.values())?,
        },
        quantum_reconstruction: compare(
            &sum(&quantum.pass_branch, &quantum.stop_branch),
            signal.values(),
        )?,
        oracle_reconstruction: compare(&sum(&pass, &stop), signal.values())?,
        pass_stop_band_leakage: leakage,
    };

    let with_suffix = |suffix: &str| {
        let mut name = prefix.as_os_str().to_owned();
        name.push(suffix);
        PathBuf::from(name)
    };
    save_csv(with_suffix(".pass.csv"), quantum.pass_branch.values())?;
    save_csv(with_suffix(".stop.csv"), quantum.stop_branch.values())?;
    std::fs::write(with_suffix(".meta.json"), to_json(&meta)?)?;
    writeln!(
        out,
        "{}: p_pass {:.6} p_stop {:.6}, quantum vs oracle l2_rel {:.3e} (pass) {:.3e} (stop)",
        spec.label(),
        meta.p_pass,
        meta.p_stop,
        meta.quantum_vs_oracle.pass.l2_rel,
        meta.quantum_vs_oracle.stop.l2_rel
    )?;
    Ok(EXIT_OK)
}

fn spectrum(
    which: SpectrumKind,
    input: &Path,
    output: &Path,
    out: &mut dyn Write,
) -> CliResult<i32> {
    let signal = load_signal(input)?;
    let sequency = || -> CliResult<Vec<f64>> {
        Ok(sequency_transform(signal.values())?
            .into_iter()
            .map(f64::abs)
            .collect())
    };
    let frequency =
        || -> CliResult<Vec<f64>> { Ok(dft_spectrum(&signal)?.iter().map(|c| c.norm()).collect()) };
    match which {
        SpectrumKind::Sequency => save_spectrum_csv(output, &sequency()?)?,
        SpectrumKind::Frequency => save_spectrum_csv(output, &frequency()?)?,
        SpectrumKind::Both => {
            let stem = output.with_extension("");
            let named = |tag: &str| {
                let mut name = stem.as_os_str().to_owned();
                name.push(format!(".{tag}.csv"));
                PathBuf::from(name)
            };
            let (s, f) = (named("sequency"), named("frequency"));
            save_spectrum_csv(&s, &sequency()?)?;
            save_spectrum_csv(&f, &frequency()?)?;
            writeln!(out, "wrote {} and {}", s.display(), f.display())?;
        }
    }
    Ok(EXIT_OK)
}

fn sequency_map(
    n: u32,
    format: Format,
    output: Option<PathBuf>,
    out: &mut dyn Write,
) -> CliResult<i32> {
    if n == 0 || n > 24 {
        return Err(CliError::Usage(format!("--n must be in 1..=24, got {n}")));
    }
    let rows: Vec<(u64, u64)> = (0..1u64 << n)
        .map(|s| Ok((s, sequency_of(SequencyIndex::new(s, n)?))))
        .collect::<Result<_, Error>>()?;
    let text = match format {
        Format::Csv => {
            let mut text = String::from("s,sequency\n");
            for (s, g) in &rows {
                let _ = writeln!(text, "{s},{g}");
            }
            text
        }
        Format::Json => to_json(&rows.iter().map(|r| r.1).collect::<Vec<_>>())?,
    };
    emit(&text, output, out)?;
    Ok(EXIT_OK)
}

fn verify(
    n_max: u32,
    format: Format,
    fault: Option<FaultArg>,
    out: &mut dyn Write,
) -> CliResult<i32> {
    if n_max == 0 || n_max > 12 {
        return Err(CliError::Usage(format!(
            "--n-max must be in 1..=12, got {n_max}"
        )));
    }
    let options = VerifyOptions {
        n_max,
        fault: fault.map(|FaultArg::SignFlip| Fault::SignFlip),
    };
    let reports = run_all(&options)?;
    let passed = reports.iter().all(|r| r.passed());
    match format {
        Format::Json => out.write_all(to_json(&reports)?.as_bytes())?,
        Format::Csv => {
            for r in &reports {
                writeln!(
                    out,
                    "{} {}: {} checks, {} failures, max error {:.3e}",
                    if r.passed() { "PASS" } else { "FAIL" },
                    r.name,
                    r.checks,
                    r.failures,
                    r.max_error
                )?;
            }
            writeln!(
                out,
                "{}",
                if passed {
                    "all suites passed"
                } else {
                    "verification FAILED"
                }
            )?;
        }
    }
    Ok(if passed { EXIT_OK } else { EXIT_VERIFY_FAILED })
}

struct GateRequest {
    kind: CircuitKind,
    cutoff: Option<String>,
    band: Option<String>,
    swap_ancilla: bool,
}

impl GateRequest {
    fn build(&self, n: u32) -> CliResult<Circuit> {
        let len = 1u64 << n;
        let filter = |kind| -> CliResult<Circuit> {
            let spec = filter_spec(kind, self.cutoff.as_deref(), self.band.as_deref(), len)?;
            let options = FilterCircuitOptions {
                convention: convention(self.swap_ancilla),
                sequency_stage: None,
            };
            Ok(build_filter_circuit_with(n, &spec, &options)?)
        };
        match self.kind {
            CircuitKind::SequencyWht => Ok(build_sequency_wht(n)?),
            CircuitKind::Uz => Ok(build_uz(n)?),
            CircuitKind::Dc => filter(FilterKind::Dc),
            CircuitKind::Low => filter(FilterKind::Low),
            CircuitKind::High => filter(FilterKind::High),
            CircuitKind::Band => filter(FilterKind::Band),
        }
    }
}

fn check_gate_width(n: u32) -> CliResult<()> {
    if n == 0 || n > 24 {
        return Err(CliError::Usage(format!("--n must be in 1..=24, got {n}")));
    }
    Ok(())
}

fn gates(
    request: &GateRequest,
    n: u32,
    format: Format,
    dump: Option<PathBuf>,
    output: Option<PathBuf>,
    out: &mut dyn Write,
) -> CliResult<i32> {
    check_gate_width(n)?;
    let circuit = request.build(n)?;
    if let Some(path) = dump {
        let mut json = circuit.to_json()?;
        json.push('\n');
        std::fs::write(path, json)?;
    }
    let stats = gate_stats(&circuit);
    let text = match format {
        Format::Json => to_json(&StatsMeta::from(stats))?,
        Format::Csv => {
            let arities: Vec<String> = stats
                .mcx_arities
                .iter()
                .map(|(arity, count)| format!("{count}x{arity}"))
                .collect();
            format!(
                "{} on {} qubits: H:{} X:{} CNOT:{} SWAP:{} MCX:{} total:{} depth:{} mcx_arities:[{}] mcx_toffoli_equivalent:{}\n",
                circuit.label(),
                circuit.n_qubits(),
                stats.h,
                stats.x,
                stats.cnot,
                stats.swap,
                stats.mcx,
                stats.total(),
                stats.depth,
                arities.join(" "),
                stats.mcx_toffoli_equivalent()
            )
        }
    };
    emit(&text, output, out)?;
    Ok(EXIT_OK)
}

fn gate_sweep(
    request: &GateRequest,
    from: u32,
    to: u32,
    output: Option<PathBuf>,
    out: &mut dyn Write,
) -> CliResult<i32> {
    check_gate_width(from)?;
    check_gate_width(to)?;
    let mut text = String::from("n,h,x,cnot,swap,mcx,max_mcx_arity,total,depth\n");
    for n in from..=to {
        let stats = gate_stats(&request.build(n)?);
        let _ = writeln!(
            text,
            "{n},{},{},{},{},{},{},{},{}",
            stats.h,
            stats.x,
            stats.cnot,
            stats.swap,
            stats.mcx,
            stats.mcx_arities.keys().max().copied().unwrap_or(0),
            stats.total(),
            stats.depth
        );
    }
    emit(&text, output, out)?;
    Ok(EXIT_OK)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cutoff_forms() {
        assert_eq!(parse_cutoff("N/2", 128).unwrap(), 64);
        assert_eq!(parse_cutoff("N/4", 128).unwrap(), 32);
        assert_eq!(parse_cutoff("3N/4", 128).unwrap(), 96);
        assert_eq!(parse_cutoff("3*N/4", 128).unwrap(), 96);
        assert_eq!(parse_cutoff("N", 128).unwrap(), 128);
        assert_eq!(parse_cutoff("17", 128).unwrap(), 17);
        assert!(parse_cutoff("N/3", 128).is_err());
        assert!(parse_cutoff("N/0", 128).is_err());
        assert!(parse_cutoff("half", 128).is_err());
    }

    #[test]
    fn band_needs_both_edges() {
        assert!(filter_spec(FilterKind::Band, None, Some("N/4"), 16).is_err());
        assert_eq!(
            filter_spec(FilterKind::Band, None, Some("N/4:3N/4"), 16).unwrap(),
            FilterSpec::BandPass { low: 4, high: 12 }
        );
        assert!(filter_spec(FilterKind::Low, None, None, 16).is_err());
    }
}
