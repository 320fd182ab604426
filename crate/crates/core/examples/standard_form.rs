// Row reduction over Z4, code type, membership, and enumeration order.

use std::error::Error;

use z4rm::{GeneratorMatrix, Z4Word};

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let g = GeneratorMatrix::from_digit_rows(4, &["1013", "0112", "2200", "3121"])?;
    let sf = g.standard_form();
    println!(
        "k1 = {}, k2 = {}, size 2^{}",
        sf.k1(),
        sf.k2(),
        sf.log2_size()
    );
    for row in sf.rows() {
        println!("  {row}");
    }
    println!("column permutation {:?}", sf.column_permutation());

    for w in ["1013", "0000", "1000"] {
        let x: Z4Word = w.parse()?;
        println!("{w} in code: {}", g.membership(&x)?);
    }

    let small = GeneratorMatrix::from_digit_rows(2, &["11", "02"])?.standard_form();
    let words: Vec<String> = small.codewords_range(0, 8).map(|w| w.to_string()).collect();
    println!("codewords of <11, 02>: {}", words.join(" "));
    Ok(())
}

fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
