//! Builds the sequency-ordered WHT circuit and reads its matrix back out of
//! the simulator, one basis state per column.

use sequency::circuits::{build_sequency_wht, gate_stats};
use sequency::sim::{run_circuit, Statevector};
use sequency::walsh::sequency_matrix;

pub fn main() -> sequency::Result<()> {
    let n = 3;
    let circuit = build_sequency_wht(n)?;
    for gate in circuit.gates() {
        println!("  {gate}");
    }

    let dim = 1usize << n;
    let expected = sequency_matrix(n)?;
    let mut worst: f64 = 0.0;
    let mut signs = vec![vec!['?'; dim]; dim];
    for j in 0..dim {
        let out = run_circuit(Statevector::basis(n as usize, j)?, &circuit)?;
        for (k, a) in out.amplitudes().iter().enumerate() {
            worst = worst.max((a.re - expected[k][j]).abs());
            signs[k][j] = if a.re > 0.0 { '+' } else { '-' };
        }
    }
    for row in &signs {
        println!("  {}", row.iter().collect::<String>());
    }
    println!("max deviation from the dense matrix: {worst:.2e}");
    println!("{:?}", gate_stats(&circuit));
    Ok(())
}
