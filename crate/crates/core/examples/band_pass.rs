//! Keeps the middle half of the sequency range.

use sequency::circuits::{build_filter_circuit, gate_stats};
use sequency::filters::{filter_quantum, FilterSpec};
use sequency::signals::{discretize, Waveform};
use sequency::walsh::sequency_transform;

pub fn main() -> sequency::Result<()> {
    let n = 7;
    let len = 1u64 << n;
    let spec = FilterSpec::BandPass {
        low: len / 4,
        high: 3 * len / 4,
    };
    let signal = discretize(&Waveform::composite_g(), n);

    let circuit = build_filter_circuit(n, &spec)?;
    for gate in circuit.gates().iter().filter(|g| g.name() == "mcx") {
        println!("selector gate {gate}");
    }
    println!("{:?}", gate_stats(&circuit));

    let q = filter_quantum(&signal, &spec)?;
    let spectrum = sequency_transform(q.pass_branch.values())?;
    let outside = spectrum
        .iter()
        .enumerate()
        .filter(|(g, _)| (*g as u64) < len / 4 || (*g as u64) >= 3 * len / 4)
        .map(|(_, x)| x.abs())
        .fold(0.0, f64::max);
    println!(
        "p_pass {:.4}, largest coefficient outside the band {outside:.1e}",
        q.p_pass
    );
    Ok(())
}
