//! Natural and sequency ordered transforms of a short ramp.

use sequency::walsh::{fwht_natural, wht_sequency, Coefficients};

pub fn main() -> sequency::Result<()> {
    let ramp = Coefficients::time((0..8).map(f64::from).collect())?;

    let natural = fwht_natural(&ramp, false)?;
    let sequency = wht_sequency(&ramp, false)?;
    println!("input     {:?}", ramp.values());
    println!("natural   {:.4?}", natural.values());
    println!("sequency  {:.4?}", sequency.values());

    // unitary scaling: both are norm preserving and undo themselves
    println!(
        "norms     {:.12} {:.12} {:.12}",
        ramp.norm(),
        natural.norm(),
        sequency.norm()
    );
    let back = wht_sequency(&sequency, true)?;
    let err = back
        .values()
        .iter()
        .zip(ramp.values())
        .map(|(a, b)| (a - b).abs())
        .fold(0.0, f64::max);
    println!("round trip max error {err:.2e}");
    Ok(())
}
