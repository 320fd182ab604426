#![allow(dead_code)]

use std::collections::BTreeSet;

use rand::Rng;
use z4rm::{GeneratorMatrix, Z4Code, Z4Word};

pub const NONLINEAR_DATA: &str = include_str!("../../data/lrm_2_4_nonlinear.z4");

pub fn random_word(rng: &mut impl Rng, n: usize) -> Z4Word {
    let symbols: Vec<u8> = (0..n).map(|_| rng.gen_range(0..4)).collect();
    Z4Word::from_symbols(&symbols).unwrap()
}

/// A random code of length `n` with at most `max_log2` bits of size.
pub fn random_code(rng: &mut impl Rng, n: usize, max_log2: u32) -> Z4Code {
    loop {
        let g = rng.gen_range(0..=4);
        let rows = (0..g).map(|_| random_word(rng, n)).collect();
        let c = Z4Code::new(GeneratorMatrix::new(n, rows).unwrap(), "random");
        if c.log2_size() <= max_log2 {
            return c;
        }
    }
}

pub fn codeword_set(c: &Z4Code) -> BTreeSet<Z4Word> {
    c.enumerate(24).unwrap().collect()
}

/// Closure of the generators under addition, independent of the standard form.
pub fn span_by_closure(c: &Z4Code) -> BTreeSet<Z4Word> {
    let mut set = BTreeSet::from([Z4Word::zeros(c.n())]);
    loop {
        let mut next = set.clone();
        for w in &set {
            for g in c.generators().rows() {
                next.insert(w.add(g).unwrap());
            }
        }
        if next.len() == set.len() {
            return set;
        }
        set = next;
    }
}

pub fn brute_min_lee(c: &Z4Code) -> Option<u32> {
    span_by_closure(c)
        .iter()
        .filter(|w| !w.is_zero())
        .map(Z4Word::lee_weight)
        .min()
}
