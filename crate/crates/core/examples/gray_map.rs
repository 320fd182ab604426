// Gray map, Lee weights, and the isometry between them.

use std::error::Error;

use z4rm::z4::{hamming_distance, lee_distance};
use z4rm::Z4Word;

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let x: Z4Word = "0123".parse()?;
    let y: Z4Word = "2211".parse()?;
    println!("x = {x}  lee weight {}", x.lee_weight());
    println!(
        "alpha {}  beta {}  gamma {}",
        x.alpha(),
        x.beta(),
        x.gamma()
    );
    println!("gray(x) = {}", x.gray());
    println!("gray(y) = {}", y.gray());

    let lee = lee_distance(&x, &y)?;
    let hamming = hamming_distance(&x.gray(), &y.gray())?;
    println!("lee distance {lee}, hamming distance of images {hamming}");
    assert_eq!(lee, hamming);

    let back = x.gray().gray_inverse()?;
    println!("inverse Gray of gray(x) = {back}");
    assert_eq!(back, x);
    Ok(())
}

fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
