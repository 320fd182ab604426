// Size comparison against the QRM family.

use z4rm::analysis::nonequivalence_report;
use z4rm::codes::RmOrder;

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    println!("r m lrm_k qrm_k");
    for order in RmOrder::all_up_to(6) {
        println!("{}", nonequivalence_report(order));
    }
    Ok(())
}

fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
