//! Gate counts of the low-pass circuit at N/2 and N/4 as the register grows.

use sequency::circuits::{build_filter_circuit, build_sequency_wht, gate_stats};
use sequency::filters::FilterSpec;

pub fn main() -> sequency::Result<()> {
    println!("n,wht_total,lp_half_total,lp_half_depth,lp_quarter_total,lp_quarter_mcx_arity");
    for n in 3..=12u32 {
        let len = 1u64 << n;
        let wht = gate_stats(&build_sequency_wht(n)?);
        let half = gate_stats(&build_filter_circuit(
            n,
            &FilterSpec::LowPass { cutoff: len / 2 },
        )?);
        let quarter = gate_stats(&build_filter_circuit(
            n,
            &FilterSpec::LowPass { cutoff: len / 4 },
        )?);
        println!(
            "{n},{},{},{},{},{}",
            wht.total(),
            half.total(),
            half.depth,
            quarter.total(),
            quarter.mcx_arities.keys().max().unwrap_or(&0)
        );
    }
    Ok(())
}
