//! Sequency of each natural Hadamard row, three ways.

use sequency::walsh::{
    natural_to_sequency_perm, sequency_of, sequency_recursion, zero_crossings_bruteforce,
    SequencyIndex,
};

pub fn main() -> sequency::Result<()> {
    let n = 3;
    println!(" s  bits  sequency  zero-crossings");
    for s in 0..1u64 << n {
        let idx = SequencyIndex::new(s, n)?;
        println!(
            "{s:2}  {s:03b}  {:8}  {:14}",
            sequency_of(idx),
            zero_crossings_bruteforce(idx)?
        );
    }

    // doubling recursion Z_m = 2 Z_{m-1} + parity, traced for s = 5
    let trace = sequency_recursion(SequencyIndex::new(5, n)?);
    println!("recursion trace for s = 5: {trace:?}");

    let perm = natural_to_sequency_perm(n)?;
    println!("forward {:?}", perm.forward);
    println!("inverse {:?}", perm.inverse);
    Ok(())
}
