use sequency::circuits::{build_filter_circuit, Circuit};
use sequency::filters::FilterSpec;

pub fn main() -> sequency::Result<()> {
    let circuit = build_filter_circuit(3, &FilterSpec::HighPass { cutoff: 6 })?;
    let json = circuit.to_json()?;
    println!("{json}");
    let back = Circuit::from_json(&json)?;
    assert_eq!(back, circuit);
    Ok(())
}
