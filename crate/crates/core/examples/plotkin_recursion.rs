// Building the family by repeated doubling.

use std::error::Error;

use z4rm::analysis::{min_lee_weight, SweepOptions};
use z4rm::codes::{lrm_default, plotkin};

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let u = lrm_default(1, 1)?;
    let v = lrm_default(0, 1)?;
    let p = plotkin(&u, &v)?;
    println!(
        "plotkin of sizes 2^{} and 2^{} has size 2^{}",
        u.log2_size(),
        v.log2_size(),
        p.log2_size()
    );
    let words: Vec<String> = p.enumerate(8)?.map(|w| w.to_string()).collect();
    println!("codewords: {}", words.join(" "));

    let opts = SweepOptions::default();
    for m in 1..=4 {
        for r in 0..=m {
            let c = lrm_default(r, m)?;
            println!(
                "LRM({r},{m}): n={} log2 size={} d={}",
                c.n(),
                c.log2_size(),
                min_lee_weight(&c, &opts)?
            );
        }
    }
    println!("{}", lrm_default(2, 3)?.label());
    Ok(())
}

fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
