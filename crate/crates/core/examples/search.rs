// Search for small codes with given parameters and a nonlinear Gray image.

use std::error::Error;

use z4rm::analysis::search_nonlinear_base;
use z4rm::codes::CodeParams;
use z4rm::format::render_code;

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let target = CodeParams { n: 4, k: 4, d: 3 };
    let found = search_nonlinear_base(target, 4)?;
    println!("{} codes with parameters {target}", found.len());
    if let Some(first) = found.first() {
        print!("{}", render_code(first));
    }
    Ok(())
}

fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
