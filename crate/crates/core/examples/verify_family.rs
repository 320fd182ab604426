// Exhaustive parameter check of every member up to a given m.
//
// `cargo run --release --example verify_family -- 5` includes the
// 2^26-codeword case LRM(3,5).

use std::error::Error;

use z4rm::analysis::{verify_lrm, SweepOptions};
use z4rm::codes::{OverrideTable, RmOrder};

pub fn verify_up_to(max_m: u32) -> Result<bool, Box<dyn Error>> {
    let opts = SweepOptions::audit(28);
    let mut all = true;
    for order in RmOrder::all_up_to(max_m) {
        let report = verify_lrm(order, &OverrideTable::new(), &opts)?;
        println!(
            "{order}: claimed {} min distance {} linear image {} -> {}",
            report.claimed,
            report.min_distance,
            report.image_linear,
            if report.pass { "pass" } else { "FAIL" }
        );
        all &= report.pass;
    }
    Ok(all)
}

pub fn run_example() -> Result<(), Box<dyn Error>> {
    assert!(verify_up_to(4)?);
    Ok(())
}

fn main() -> Result<(), Box<dyn Error>> {
    let max_m = std::env::args().nth(1).map_or(Ok(4), |a| a.parse())?;
    if !verify_up_to(max_m)? {
        std::process::exit(1);
    }
    Ok(())
}
