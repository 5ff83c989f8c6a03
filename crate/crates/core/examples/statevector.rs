use num_complex::Complex64;
use sequency::circuits::Circuit;
use sequency::sim::{amplitude_encode, project_ancilla, run_circuit, Control, Gate, Statevector};
use sequency::walsh::Coefficients;

pub fn main() -> sequency::Result<()> {
    let signal = Coefficients::time(vec![3.0, 0.0, 4.0, 0.0])?;
    let (state, scale) = amplitude_encode(&signal)?;
    println!("scale {scale}, amplitudes {:?}", state.amplitudes());

    // open control on q0, closed on q1, target the ancilla q2
    let wide = state.with_ancilla();
    let mut flip = Circuit::new(3, "mcx demo");
    flip.push(Gate::mcx(vec![Control::open(0), Control::closed(1)], 2))?;
    let out = run_circuit(wide, &flip)?;

    for outcome in [false, true] {
        let (branch, p) = project_ancilla(&out, 2, outcome)?;
        let re: Vec<f64> = branch.iter().map(|a| a.re).collect();
        println!("ancilla {} p = {p:.2} branch {re:?}", outcome as u8);
    }

    let bell = Statevector::from_amplitudes(vec![
        Complex64::new(0.5f64.sqrt(), 0.0),
        Complex64::new(0.0, 0.0),
        Complex64::new(0.0, 0.0),
        Complex64::new(0.5f64.sqrt(), 0.0),
    ])?;
    println!("norm {}", bell.norm());
    Ok(())
}
