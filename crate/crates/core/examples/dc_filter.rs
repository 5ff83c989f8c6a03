use sequency::filters::{compare, dc_remove_oracle, filter_quantum, FilterSpec};
use sequency::signals::{discretize, Waveform};

pub fn main() -> sequency::Result<()> {
    let n = 6;
    let shifted = Waveform::Sum(vec![
        Waveform::Constant { amplitude: 2.5 },
        Waveform::triangular(3.0),
    ]);
    let signal = discretize(&shifted, n);
    let mean = signal.values().iter().sum::<f64>() / signal.len() as f64;

    let q = filter_quantum(&signal, &FilterSpec::Dc)?;
    let expected = dc_remove_oracle(&signal)?;
    let m = compare(q.pass_branch.values(), expected.values())?;
    println!(
        "mean {mean:.4}, p(DC removed) {:.4}, p(DC) {:.4}",
        q.p_pass, q.p_stop
    );
    println!(
        "stop branch is the constant {:.4}",
        q.stop_branch.values()[0]
    );
    println!("linf vs mean subtraction {:.1e}", m.linf);
    Ok(())
}
