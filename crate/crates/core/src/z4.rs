//! Vectors over Z4 and Z2, the Lee metric, and the Gray map.
//!
//! A [`Z4Word`] is stored as two bit-planes: `lo` holds the low bit of every
//! symbol and `hi` the high bit, so symbol `s = lo + 2*hi`. Every quantity the
//! rest of the crate needs reduces to a handful of word-parallel operations on
//! the planes:
//!
//! | quantity     | planes                                   |
//! |--------------|------------------------------------------|
//! | `x + y`      | `lo = xl ^ yl`, `hi = xh ^ yh ^ (xl & yl)` |
//! | `-x`         | `lo = xl`, `hi = xh ^ xl`                 |
//! | `2x`         | `lo = 0`, `hi = xl`                       |
//! | `w_L(x)`     | `popcnt(lo) + 2 * popcnt(hi & !lo)`       |
//! | `alpha(x)`   | `lo`                                      |
//! | `beta(x)`    | `hi`                                      |
//! | `gamma(x)`   | `hi ^ lo`                                 |
//!
//! Bits past the logical length are always zero.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

const LIMB_BITS: usize = 64;

fn limbs_for(len: usize) -> usize {
    len.div_ceil(LIMB_BITS)
}

fn check_len(expected: usize, found: usize) -> Result<()> {
    if expected == found {
        Ok(())
    } else {
        Err(Error::Dimension { expected, found })
    }
}

/// Per-symbol Lee weights for 0, 1, 2, 3.
pub const LEE_WEIGHTS: [u32; 4] = [0, 1, 2, 1];

/// A word of `len` symbols over Z4.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Z4Word {
    len: usize,
    lo: Vec<u64>,
    hi: Vec<u64>,
}

impl Z4Word {
    pub fn zeros(len: usize) -> Self {
        let limbs = limbs_for(len);
        Z4Word {
            len,
            lo: vec![0; limbs],
            hi: vec![0; limbs],
        }
    }

    /// Builds a word from symbols, rejecting anything outside `0..=3`.
    pub fn from_symbols(symbols: &[u8]) -> Result<Self> {
        let mut w = Z4Word::zeros(symbols.len());
        for (i, &s) in symbols.iter().enumerate() {
            if s > 3 {
                return Err(Error::BadSymbol {
                    position: i,
                    symbol: s,
                });
            }
            w.set(i, s);
        }
        Ok(w)
    }

    /// Repetition of one symbol.
    pub fn constant(len: usize, symbol: u8) -> Self {
        let mut w = Z4Word::zeros(len);
        for i in 0..len {
            w.set(i, symbol & 3);
        }
        w
    }

    /// The word with a single 1 at `position`.
    pub fn unit(len: usize, position: usize) -> Self {
        let mut w = Z4Word::zeros(len);
        w.set(position, 1);
        w
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn get(&self, i: usize) -> u8 {
        assert!(
            i < self.len,
            "index {i} out of range for length {}",
            self.len
        );
        let (limb, bit) = (i / LIMB_BITS, i % LIMB_BITS);
        let lo = (self.lo[limb] >> bit) & 1;
        let hi = (self.hi[limb] >> bit) & 1;
        (lo | (hi << 1)) as u8
    }

    pub fn set(&mut self, i: usize, symbol: u8) {
        assert!(
            i < self.len,
            "index {i} out of range for length {}",
            self.len
        );
        let (limb, bit) = (i / LIMB_BITS, i % LIMB_BITS);
        let mask = 1u64 << bit;
        let s = symbol & 3;
        self.lo[limb] = (self.lo[limb] & !mask) | (u64::from(s & 1) << bit);
        self.hi[limb] = (self.hi[limb] & !mask) | (u64::from(s >> 1) << bit);
    }

    pub fn symbols(&self) -> Vec<u8> {
        (0..self.len).map(|i| self.get(i)).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.lo.iter().chain(&self.hi).all(|&l| l == 0)
    }

    /// Coordinatewise sum mod 4.
    pub fn add(&self, other: &Z4Word) -> Result<Z4Word> {
        check_len(self.len, other.len)?;
        let mut out = self.clone();
        out.add_assign(other);
        Ok(out)
    }

    /// `self - other` mod 4.
    pub fn sub(&self, other: &Z4Word) -> Result<Z4Word> {
        self.add(&other.negate())
    }

    /// In-place sum. Lengths must match.
    pub fn add_assign(&mut self, other: &Z4Word) {
        debug_assert_eq!(self.len, other.len);
        for ((lo, hi), (olo, ohi)) in self
            .lo
            .iter_mut()
            .zip(self.hi.iter_mut())
            .zip(other.lo.iter().zip(&other.hi))
        {
            let carry = *lo & olo;
            *lo ^= olo;
            *hi ^= ohi ^ carry;
        }
    }

    pub fn negate(&self) -> Z4Word {
        let hi = self.hi.iter().zip(&self.lo).map(|(h, l)| h ^ l).collect();
        Z4Word {
            len: self.len,
            lo: self.lo.clone(),
            hi,
        }
    }

    /// Multiplies every coordinate by `k` mod 4.
    pub fn scale(&self, k: u8) -> Z4Word {
        match k & 3 {
            0 => Z4Word::zeros(self.len),
            1 => self.clone(),
            2 => Z4Word {
                len: self.len,
                lo: vec![0; self.lo.len()],
                hi: self.lo.clone(),
            },
            _ => self.negate(),
        }
    }

    /// True iff every symbol is 0 or 2.
    pub fn is_even(&self) -> bool {
        self.lo.iter().all(|&l| l == 0)
    }

    pub fn lee_weight(&self) -> u32 {
        self.lo
            .iter()
            .zip(&self.hi)
            .map(|(&lo, &hi)| lo.count_ones() + 2 * (hi & !lo).count_ones())
            .sum()
    }

    pub fn lee_distance(&self, other: &Z4Word) -> Result<u32> {
        Ok(self.sub(other)?.lee_weight())
    }

    pub fn alpha(&self) -> BitWord {
        BitWord::from_limbs(self.len, self.lo.clone())
    }

    pub fn beta(&self) -> BitWord {
        BitWord::from_limbs(self.len, self.hi.clone())
    }

    pub fn gamma(&self) -> BitWord {
        let bits = self.hi.iter().zip(&self.lo).map(|(h, l)| h ^ l).collect();
        BitWord::from_limbs(self.len, bits)
    }

    /// Gray image: all beta bits followed by all gamma bits.
    pub fn gray(&self) -> BitWord {
        self.beta().concat(&self.gamma())
    }

    /// `2 * (alpha(self) * alpha(other))`, coordinatewise.
    pub fn twice_alpha_product(&self, other: &Z4Word) -> Result<Z4Word> {
        check_len(self.len, other.len)?;
        Ok(Z4Word {
            len: self.len,
            lo: vec![0; self.lo.len()],
            hi: self.lo.iter().zip(&other.lo).map(|(a, b)| a & b).collect(),
        })
    }

    /// Concatenation `(self, other)`.
    pub fn concat(&self, other: &Z4Word) -> Z4Word {
        let mut out = Z4Word::zeros(self.len + other.len);
        for i in 0..self.len {
            out.set(i, self.get(i));
        }
        for i in 0..other.len {
            out.set(self.len + i, other.get(i));
        }
        out
    }
}

// Length first, then symbols left to right.
impl Ord for Z4Word {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.len
            .cmp(&other.len)
            .then_with(|| self.symbols().cmp(&other.symbols()))
    }
}

impl PartialOrd for Z4Word {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Z4Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for s in self.symbols() {
            write!(f, "{s}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Z4Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Z4Word({self})")
    }
}

impl FromStr for Z4Word {
    type Err = Error;

    /// Parses a digit string such as `"0123"`.
    fn from_str(s: &str) -> Result<Self> {
        let symbols = s
            .chars()
            .enumerate()
            .map(|(i, c)| match c {
                '0'..='3' => Ok(c as u8 - b'0'),
                _ => Err(Error::BadChar {
                    position: i,
                    found: c,
                }),
            })
            .collect::<Result<Vec<u8>>>()?;
        Z4Word::from_symbols(&symbols)
    }
}

/// A binary word of `len` bits.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct BitWord {
    len: usize,
    bits: Vec<u64>,
}

impl BitWord {
    pub fn zeros(len: usize) -> Self {
        BitWord {
            len,
            bits: vec![0; limbs_for(len)],
        }
    }

    fn from_limbs(len: usize, bits: Vec<u64>) -> Self {
        BitWord { len, bits }
    }

    pub fn from_bits(bits: &[u8]) -> Result<Self> {
        let mut w = BitWord::zeros(bits.len());
        for (i, &b) in bits.iter().enumerate() {
            if b > 1 {
                return Err(Error::BadSymbol {
                    position: i,
                    symbol: b,
                });
            }
            w.set(i, b == 1);
        }
        Ok(w)
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn get(&self, i: usize) -> bool {
        assert!(
            i < self.len,
            "index {i} out of range for length {}",
            self.len
        );
        (self.bits[i / LIMB_BITS] >> (i % LIMB_BITS)) & 1 == 1
    }

    pub fn set(&mut self, i: usize, bit: bool) {
        assert!(
            i < self.len,
            "index {i} out of range for length {}",
            self.len
        );
        let mask = 1u64 << (i % LIMB_BITS);
        if bit {
            self.bits[i / LIMB_BITS] |= mask;
        } else {
            self.bits[i / LIMB_BITS] &= !mask;
        }
    }

    pub fn to_bits(&self) -> Vec<u8> {
        (0..self.len).map(|i| u8::from(self.get(i))).collect()
    }

    pub fn weight(&self) -> u32 {
        self.bits.iter().map(|l| l.count_ones()).sum()
    }

    pub fn xor(&self, other: &BitWord) -> Result<BitWord> {
        check_len(self.len, other.len)?;
        let mut out = self.clone();
        out.xor_assign(other);
        Ok(out)
    }

    pub fn xor_assign(&mut self, other: &BitWord) {
        debug_assert_eq!(self.len, other.len);
        for (a, b) in self.bits.iter_mut().zip(&other.bits) {
            *a ^= b;
        }
    }

    pub fn hamming_distance(&self, other: &BitWord) -> Result<u32> {
        check_len(self.len, other.len)?;
        Ok(self
            .bits
            .iter()
            .zip(&other.bits)
            .map(|(a, b)| (a ^ b).count_ones())
            .sum())
    }

    pub fn concat(&self, other: &BitWord) -> BitWord {
        let mut out = BitWord::zeros(self.len + other.len);
        for i in 0..self.len {
            out.set(i, self.get(i));
        }
        for i in 0..other.len {
            out.set(self.len + i, other.get(i));
        }
        out
    }

    /// Inverse Gray map: pairs `(b[i], b[n+i])` decode as
    /// `00 -> 0`, `01 -> 1`, `11 -> 2`, `10 -> 3`.
    pub fn gray_inverse(&self) -> Result<Z4Word> {
        if !self.len.is_multiple_of(2) {
            return Err(Error::OddLength(self.len));
        }
        let n = self.len / 2;
        let mut out = Z4Word::zeros(n);
        for i in 0..n {
            let beta = self.get(i);
            let gamma = self.get(n + i);
            // hi = beta, lo = beta ^ gamma
            let s = (u8::from(beta) << 1) | u8::from(beta ^ gamma);
            out.set(i, s);
        }
        Ok(out)
    }
}

impl Ord for BitWord {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.len
            .cmp(&other.len)
            .then_with(|| self.to_bits().cmp(&other.to_bits()))
    }
}

impl PartialOrd for BitWord {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for BitWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.len {
            f.write_str(if self.get(i) { "1" } else { "0" })?;
        }
        Ok(())
    }
}

impl fmt::Debug for BitWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BitWord({self})")
    }
}

impl FromStr for BitWord {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bits = s
            .chars()
            .enumerate()
            .map(|(i, c)| match c {
                '0' | '1' => Ok(c as u8 - b'0'),
                _ => Err(Error::BadChar {
                    position: i,
                    found: c,
                }),
            })
            .collect::<Result<Vec<u8>>>()?;
        BitWord::from_bits(&bits)
    }
}

/// Hamming distance between two binary words.
pub fn hamming_distance(a: &BitWord, b: &BitWord) -> Result<u32> {
    a.hamming_distance(b)
}

/// Lee distance `w_L(x - y)`.
pub fn lee_distance(x: &Z4Word, y: &Z4Word) -> Result<u32> {
    x.lee_distance(y)
}
