//! Test waveforms on `[0, 1]`, midpoint sampling and CSV files.
//!
//! Sampling uses the midpoints `t_k = (2k + 1) / (2N)`. A jump that lands
//! exactly on a sample point takes its right-hand value.

use std::f64::consts::PI;
use std::fs;
use std::io::Write;
use std::path::Path;

use crate::walsh::Coefficients;
use crate::{Error, Result};

#[derive(Clone, Debug, PartialEq)]
pub enum Waveform {
    Constant {
        amplitude: f64,
    },
    /// `amplitude · sin(2π·cycles·t + phase)`.
    Sine {
        cycles: f64,
        amplitude: f64,
        phase: f64,
    },
    /// Triangle wave in phase with the sine of the same cycle count.
    Triangular {
        cycles: f64,
        amplitude: f64,
    },
    /// `+amplitude` on the first half of each cycle, `-amplitude` on the second.
    Square {
        cycles: f64,
        amplitude: f64,
    },
    /// `amplitude` on `[offset, offset + width)`, zero elsewhere.
    RectangularPulse {
        offset: f64,
        width: f64,
        amplitude: f64,
    },
    Sum(Vec<Waveform>),
}

impl Waveform {
    pub fn sine(cycles: f64) -> Self {
        Waveform::Sine {
            cycles,
            amplitude: 1.0,
            phase: 0.0,
        }
    }

    pub fn triangular(cycles: f64) -> Self {
        Waveform::Triangular {
            cycles,
            amplitude: 1.0,
        }
    }

    pub fn square(cycles: f64) -> Self {
        Waveform::Square {
            cycles,
            amplitude: 1.0,
        }
    }

    pub fn rectangular_pulse(offset: f64, width: f64) -> Result<Self> {
        if !(0.0 <= offset && width > 0.0 && offset + width <= 1.0) {
            return Err(Error::InvalidWaveform(format!(
                "pulse [{offset}, {}) does not fit in [0, 1]",
                offset + width
            )));
        }
        Ok(Waveform::RectangularPulse {
            offset,
            width,
            amplitude: 1.0,
        })
    }

    /// One representative of each family used in the demos and acceptance
    /// runs: sine, triangle, centered pulse and square wave.
    pub fn families() -> Vec<(&'static str, Waveform)> {
        vec![
            ("sine", Waveform::sine(3.0)),
            ("triangular", Waveform::triangular(2.0)),
            (
                "rectangular",
                Waveform::rectangular_pulse(0.25, 0.5).expect("pulse fits"),
            ),
            ("square", Waveform::square(4.0)),
        ]
    }

    /// Stand-in for a piecewise test signal with a baseline, a step and a
    /// superposed oscillation: `0.5 + square(2) + pulse(0.6, 0.15)·1.5 +
    /// 0.3·sin(2π·11t)`. Parameters are arbitrary.
    pub fn composite_f() -> Self {
        Waveform::Sum(vec![
            Waveform::Constant { amplitude: 0.5 },
            Waveform::square(2.0),
            Waveform::RectangularPulse {
                offset: 0.6,
                width: 0.15,
                amplitude: 1.5,
            },
            Waveform::Sine {
                cycles: 11.0,
                amplitude: 0.3,
                phase: 0.0,
            },
        ])
    }

    /// Stand-in for a signal mixing low and high sequency content:
    /// `triangle(1) + 0.6·square(16) + 0.4·square(32) + pulse(0.1, 0.2)`.
    /// Parameters are arbitrary.
    pub fn composite_g() -> Self {
        Waveform::Sum(vec![
            Waveform::triangular(1.0),
            Waveform::Square {
                cycles: 16.0,
                amplitude: 0.6,
            },
            Waveform::Square {
                cycles: 32.0,
                amplitude: 0.4,
            },
            Waveform::RectangularPulse {
                offset: 0.1,
                width: 0.2,
                amplitude: 1.0,
            },
        ])
    }

    pub fn eval(&self, t: f64) -> f64 {
        match self {
            Waveform::Constant { amplitude } => *amplitude,
            Waveform::Sine {
                cycles,
                amplitude,
                phase,
            } => amplitude * (2.0 * PI * cycles * t + phase).sin(),
            Waveform::Triangular { cycles, amplitude } => {
                let x = (cycles * t).rem_euclid(1.0);
                amplitude
                    * if x < 0.25 {
                        4.0 * x
                    } else if x < 0.75 {
                        2.0 - 4.0 * x
                    } else {
                        4.0 * x - 4.0
                    }
            }
            Waveform::Square { cycles, amplitude } => {
                if (cycles * t).rem_euclid(1.0) < 0.5 {
                    *amplitude
                } else {
                    -amplitude
                }
            }
            Waveform::RectangularPulse {
                offset,
                width,
                amplitude,
            } => {
                if *offset <= t && t < offset + width {
                    *amplitude
                } else {
                    0.0
                }
            }
            Waveform::Sum(parts) => parts.iter().map(|w| w.eval(t)).sum(),
        }
    }
}

/// `2^bits` midpoint samples of `waveform`.
pub fn discretize(waveform: &Waveform, bits: u32) -> Coefficients {
    let len = 1usize << bits;
    let samples = (0..len)
        .map(|k| waveform.eval((2 * k + 1) as f64 / (2 * len) as f64))
        .collect();
    Coefficients::time(samples).expect("2^bits samples")
}

/// Reads one number per line. With two or more comma-separated fields the
/// last one is taken, so `index,value` files load too. A non-numeric first
/// line is treated as a header. The length is not checked here.
pub fn load_csv(path: impl AsRef<Path>) -> Result<Vec<f64>> {
    let path = path.as_ref();
    let text = fs::read_to_string(path)?;
    let mut values = Vec::new();
    let mut first = true;
    for (i, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() {
            continue;
        }
        let field = line.rsplit(',').next().unwrap_or(line).trim();
        match field.parse::<f64>() {
            Ok(v) => values.push(v),
            Err(_) if first => {}
            Err(e) => {
                return Err(Error::Parse {
                    path: path.to_path_buf(),
                    line: i + 1,
                    message: format!("{field:?}: {e}"),
                })
            }
        }
        first = false;
    }
    Ok(values)
}

/// Writes one value per line in shortest round-trip decimal form.
pub fn save_csv(path: impl AsRef<Path>, values: &[f64]) -> Result<()> {
    let mut out = Vec::with_capacity(values.len() * 20);
    for v in values {
        writeln!(out, "{v}")?;
    }
    fs::write(path, out)?;
    Ok(())
}

/// Writes `index,value` rows.
pub fn save_spectrum_csv(path: impl AsRef<Path>, values: &[f64]) -> Result<()> {
    let mut out = Vec::with_capacity(values.len() * 24);
    for (i, v) in values.iter().enumerate() {
        writeln!(out, "{i},{v}")?;
    }
    fs::write(path, out)?;
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::walsh::{fwht_natural, sequency_transform};

    #[test]
    fn constant_samples() {
        let c = discretize(&Waveform::Constant { amplitude: 1.0 }, 2);
        assert_eq!(c.values(), &[1.0; 4]);
    }

    #[test]
    fn one_cycle_square_wave() {
        let sq = discretize(&Waveform::square(1.0), 3);
        assert_eq!(sq.values(), &[1.0, 1.0, 1.0, 1.0, -1.0, -1.0, -1.0, -1.0]);
        let spectrum = sequency_transform(sq.values()).unwrap();
        for (g, x) in spectrum.iter().enumerate() {
            if g == 1 {
                assert!((x - 8f64.sqrt()).abs() < 1e-12);
            } else {
                assert!(x.abs() < 1e-12);
            }
        }
    }

    #[test]
    fn half_width_pulse() {
        let p = discretize(&Waveform::rectangular_pulse(0.0, 0.5).unwrap(), 3);
        assert_eq!(p.values(), &[1.0, 1.0, 1.0, 1.0, 0.0, 0.0, 0.0, 0.0]);
    }

    #[test]
    fn pulse_bounds_are_checked() {
        assert!(Waveform::rectangular_pulse(0.6, 0.5).is_err());
        assert!(Waveform::rectangular_pulse(-0.1, 0.5).is_err());
        assert!(Waveform::rectangular_pulse(0.2, 0.0).is_err());
    }

    #[test]
    fn jump_on_a_sample_point_takes_right_value() {
        // with N = 2 the sample points are 0.25 and 0.75
        let p = Waveform::RectangularPulse {
            offset: 0.25,
            width: 0.5,
            amplitude: 1.0,
        };
        assert_eq!(discretize(&p, 1).values(), &[1.0, 0.0]);
        let sq = Waveform::square(2.0);
        assert_eq!(sq.eval(0.25), -1.0);
    }

    #[test]
    fn dyadic_square_waves_have_one_sequency_component() {
        for m in 0..=3u32 {
            for n in m + 1..=8 {
                let v = discretize(&Waveform::square((1u32 << m) as f64), n);
                let spectrum = sequency_transform(v.values()).unwrap();
                let nonzero = spectrum.iter().filter(|x| x.abs() > 1e-9).count();
                assert_eq!(nonzero, 1, "m = {m}, n = {n}");
            }
        }
    }

    #[test]
    fn triangle_peaks() {
        let tri = Waveform::triangular(1.0);
        assert!((tri.eval(0.25) - 1.0).abs() < 1e-15);
        assert!((tri.eval(0.75) + 1.0).abs() < 1e-15);
        assert!(tri.eval(0.0).abs() < 1e-15);
    }

    #[test]
    fn discretize_is_deterministic() {
        let g = Waveform::composite_g();
        assert_eq!(discretize(&g, 7), discretize(&g, 7));
        assert_eq!(discretize(&g, 7).len(), 128);
    }

    #[test]
    fn csv_round_trip_is_bit_exact() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("v.csv");
        let values: Vec<f64> = (0..64)
            .map(|i| ((i as f64) * 0.7311).sin() * 10f64.powi(i % 9 - 4))
            .collect();
        save_csv(&path, &values).unwrap();
        let back = load_csv(&path).unwrap();
        assert_eq!(
            back.iter().map(|x| x.to_bits()).collect::<Vec<_>>(),
            values.iter().map(|x| x.to_bits()).collect::<Vec<_>>()
        );
    }

    #[test]
    fn csv_header_and_index_column() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("s.csv");
        std::fs::write(&path, "index,value\n0,1.5\n1,-2\n").unwrap();
        assert_eq!(load_csv(&path).unwrap(), vec![1.5, -2.0]);

        let spectrum = dir.path().join("spec.csv");
        save_spectrum_csv(&spectrum, &[0.25, 3.0]).unwrap();
        assert_eq!(std::fs::read_to_string(&spectrum).unwrap(), "0,0.25\n1,3\n");
        assert_eq!(load_csv(&spectrum).unwrap(), vec![0.25, 3.0]);
    }

    #[test]
    fn csv_parse_error_reports_line() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("bad.csv");
        std::fs::write(&path, "1.0\n2.0\nabc\n").unwrap();
        assert!(matches!(load_csv(&path), Err(Error::Parse { line: 3, .. })));
    }

    #[test]
    fn short_file_fails_at_transform_time() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("three.csv");
        std::fs::write(&path, "1\n2\n3\n").unwrap();
        let values = load_csv(&path).unwrap();
        assert_eq!(values.len(), 3);
        let err = Coefficients::time(values)
            .and_then(|c| fwht_natural(&c, false))
            .unwrap_err();
        assert!(err.to_string().contains("length 3"));
    }
}
