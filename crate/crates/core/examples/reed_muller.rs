// Binary Reed-Muller reference codes and Lee weight distributions.

use std::error::Error;

use z4rm::analysis::{lee_weight_distribution, min_hamming_distance, SweepOptions};
use z4rm::codes::{lrm_default, rm_binary, RmOrder};

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let opts = SweepOptions::default();
    for order in RmOrder::all_up_to(4) {
        let rm = rm_binary(order);
        println!(
            "RM{order}: n={} k={} d={}",
            rm.n,
            rm.dimension(),
            min_hamming_distance(&rm, &opts)?
        );
    }
    let dist = lee_weight_distribution(&lrm_default(1, 4)?, &opts)?;
    for (w, count) in dist.counts.iter().enumerate().filter(|(_, &c)| c > 0) {
        println!("weight {w}: {count}");
    }
    Ok(())
}

fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
