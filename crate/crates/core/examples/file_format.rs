// Writing a code to text and reading it back.

use std::error::Error;

use z4rm::codes::lrm_default;
use z4rm::format::{parse_code, render_code};

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let c = lrm_default(1, 3)?;
    let text = render_code(&c);
    print!("{text}");
    assert_eq!(parse_code(&text)?, c);

    match parse_code("Z4CODE v1 n=3 rows=1\n014\n") {
        Err(e) => println!("rejected: {e}"),
        Ok(_) => unreachable!(),
    }
    Ok(())
}

fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
