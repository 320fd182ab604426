// Substituting a nonlinear-image base code at one node of the recursion.

use std::error::Error;

use z4rm::analysis::{image_is_linear, image_is_linear_bruteforce, verify_lrm, SweepOptions};
use z4rm::codes::{OverrideTable, RmOrder};
use z4rm::format::parse_code;

const BASE: &str = include_str!("../data/lrm_2_4_nonlinear.z4");

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let base = parse_code(BASE)?;
    println!(
        "base {}: n={} log2 size={} linear image: {} (brute force: {})",
        base.label(),
        base.n(),
        base.log2_size(),
        image_is_linear(&base),
        image_is_linear_bruteforce(&base)?
    );

    let mut table = OverrideTable::new();
    table.insert(RmOrder::new(2, 4)?, base, 28)?;
    let report = verify_lrm(RmOrder::new(2, 5)?, &table, &SweepOptions::audit(28))?;
    print!("{}", report.render_text());
    Ok(())
}

fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
