//! Splits a square wave into low and high sequency halves with the
//! quantum circuit, and checks both branches against plain masking.

use sequency::filters::{compare, filter_classical_oracle, filter_quantum, FilterSpec};
use sequency::signals::{discretize, Waveform};

pub fn main() -> sequency::Result<()> {
    let n = 7;
    let len = 1u64 << n;
    let signal = discretize(
        &Waveform::Sum(vec![Waveform::square(2.0), Waveform::square(40.0)]),
        n,
    );

    for spec in [
        FilterSpec::LowPass { cutoff: len / 2 },
        FilterSpec::HighPass { cutoff: len / 2 },
        FilterSpec::LowPass { cutoff: len / 4 },
    ] {
        let quantum = filter_quantum(&signal, &spec)?;
        let (pass, _) = filter_classical_oracle(&signal, &spec)?;
        let m = compare(quantum.pass_branch.values(), pass.values())?;
        println!(
            "{:<10} cutoff {:>3}  p_pass {:.4}  p_stop {:.4}  l2_rel vs oracle {:.1e}",
            spec.label(),
            match spec {
                FilterSpec::LowPass { cutoff } | FilterSpec::HighPass { cutoff } => cutoff,
                _ => 0,
            },
            quantum.p_pass,
            quantum.p_stop,
            m.l2_rel
        );
    }

    let low = filter_quantum(&signal, &FilterSpec::LowPass { cutoff: len / 2 })?;
    println!("first 8 samples in  {:.3?}", &signal.values()[..8]);
    println!("first 8 low branch  {:.3?}", &low.pass_branch.values()[..8]);
    Ok(())
}
