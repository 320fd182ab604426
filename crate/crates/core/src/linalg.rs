//! Generator matrices over Z4.
//!
//! A linear Z4 code is a subgroup of `Z4^n`, isomorphic to `Z4^k1 x Z2^k2`.
//! [`StandardForm`] finds `k1` order-4 generators with unit pivots and `k2`
//! order-2 generators with pivot symbol 2, so the code has `4^k1 * 2^k2`
//! words and `log2 |C| = 2*k1 + k2`.
//!
//! Enumeration walks the mixed-radix index `a_1 .. a_k1 b_1 .. b_k2` with the
//! order-4 digits most significant. Incrementing a digit of either radix is
//! the same operation, adding that digit's row once: `4*t = 0` for a top row
//! and `2*u = 0` for a bottom row, so a wrap back to zero is also one add.

use crate::error::{Error, Result};
use crate::z4::Z4Word;

/// A list of generator rows of common length `n`. The empty list is the zero code.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GeneratorMatrix {
    n: usize,
    rows: Vec<Z4Word>,
}

impl GeneratorMatrix {
    pub fn new(n: usize, rows: Vec<Z4Word>) -> Result<Self> {
        for r in &rows {
            if r.len() != n {
                return Err(Error::Dimension {
                    expected: n,
                    found: r.len(),
                });
            }
        }
        Ok(GeneratorMatrix { n, rows })
    }

    pub fn empty(n: usize) -> Self {
        GeneratorMatrix {
            n,
            rows: Vec::new(),
        }
    }

    /// Parses digit-string rows, e.g. `["1013", "0112"]`.
    pub fn from_digit_rows(n: usize, rows: &[&str]) -> Result<Self> {
        let rows = rows
            .iter()
            .map(|r| r.parse())
            .collect::<Result<Vec<Z4Word>>>()?;
        GeneratorMatrix::new(n, rows)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn rows(&self) -> &[Z4Word] {
        &self.rows
    }

    pub fn standard_form(&self) -> StandardForm {
        StandardForm::of(self)
    }

    pub fn log2_size(&self) -> u32 {
        self.standard_form().log2_size()
    }

    pub fn membership(&self, x: &Z4Word) -> Result<bool> {
        self.standard_form().contains(x)
    }
}

/// Reduced generators `[[I A B], [0 2I 2C]]` up to a recorded column permutation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StandardForm {
    n: usize,
    k1: usize,
    k2: usize,
    /// Top `k1` rows then bottom `k2` rows, in original coordinate order.
    rows: Vec<Z4Word>,
    /// Pivot column of each row in `rows`.
    pivots: Vec<usize>,
    /// `column_permutation[j]` is the original column placed at position `j`:
    /// top pivots, bottom pivots, then the remaining columns ascending.
    column_permutation: Vec<usize>,
}

fn sub_multiple(row: &mut [u8], pivot: &[u8], factor: u8) {
    for (a, &p) in row.iter_mut().zip(pivot) {
        *a = (*a + 4 * 4 - factor * p) % 4;
    }
}

impl StandardForm {
    /// Elimination with a fixed rule: leftmost column holding a pivot
    /// candidate, topmost row holding it. Unit pivots first, then pivot 2
    /// on the all-even remainder. Zero rows are dropped.
    pub fn of(g: &GeneratorMatrix) -> Self {
        let n = g.n;
        let mut rows: Vec<Vec<u8>> = g.rows.iter().map(Z4Word::symbols).collect();
        let mut pivots = Vec::new();
        let mut is_pivot = vec![false; n];

        let mut top = 0;
        while let Some((col, at)) = find_pivot(&rows[top..], n, &is_pivot, |s| s & 1 == 1) {
            rows.swap(top, top + at);
            if rows[top][col] == 3 {
                for s in rows[top].iter_mut() {
                    *s = (4 - *s) % 4;
                }
            }
            let pivot_row = rows[top].clone();
            for (j, row) in rows.iter_mut().enumerate() {
                if j != top && row[col] != 0 {
                    let f = row[col];
                    sub_multiple(row, &pivot_row, f);
                }
            }
            is_pivot[col] = true;
            pivots.push(col);
            top += 1;
        }
        let k1 = top;

        let mut bottom = k1;
        while let Some((col, at)) = find_pivot(&rows[bottom..], n, &is_pivot, |s| s == 2) {
            rows.swap(bottom, bottom + at);
            let pivot_row = rows[bottom].clone();
            for (j, row) in rows.iter_mut().enumerate() {
                // Top rows keep a residue in {0, 1} at order-2 pivots.
                if j != bottom && row[col] >= 2 {
                    sub_multiple(row, &pivot_row, 1);
                }
            }
            is_pivot[col] = true;
            pivots.push(col);
            bottom += 1;
        }
        let k2 = bottom - k1;
        rows.truncate(bottom);
        debug_assert!(rows[k1..].iter().all(|r| r.iter().all(|&s| s % 2 == 0)));

        let mut column_permutation = pivots.clone();
        column_permutation.extend((0..n).filter(|&c| !is_pivot[c]));

        StandardForm {
            n,
            k1,
            k2,
            rows: rows
                .iter()
                .map(|r| Z4Word::from_symbols(r).expect("symbols reduced mod 4"))
                .collect(),
            pivots,
            column_permutation,
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn k1(&self) -> usize {
        self.k1
    }

    pub fn k2(&self) -> usize {
        self.k2
    }

    pub fn log2_size(&self) -> u32 {
        (2 * self.k1 + self.k2) as u32
    }

    pub fn rows(&self) -> &[Z4Word] {
        &self.rows
    }

    pub fn top_rows(&self) -> &[Z4Word] {
        &self.rows[..self.k1]
    }

    pub fn bottom_rows(&self) -> &[Z4Word] {
        &self.rows[self.k1..]
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    pub fn column_permutation(&self) -> &[usize] {
        &self.column_permutation
    }

    /// Rows with the column permutation applied, showing the block shape.
    pub fn permuted_rows(&self) -> Vec<Z4Word> {
        self.rows
            .iter()
            .map(|r| {
                let syms: Vec<u8> = self.column_permutation.iter().map(|&c| r.get(c)).collect();
                Z4Word::from_symbols(&syms).expect("valid symbols")
            })
            .collect()
    }

    /// Radix of each enumeration digit: 4 for top rows, 2 for bottom rows.
    pub fn radices(&self) -> Vec<u8> {
        let mut r = vec![4; self.k1];
        r.extend(std::iter::repeat_n(2, self.k2));
        r
    }

    /// Reduces `x` against the pivots and reports whether nothing remains.
    pub fn contains(&self, x: &Z4Word) -> Result<bool> {
        if x.len() != self.n {
            return Err(Error::Dimension {
                expected: self.n,
                found: x.len(),
            });
        }
        let mut residue = x.clone();
        for (row, &p) in self.top_rows().iter().zip(&self.pivots) {
            let c = residue.get(p);
            if c != 0 {
                residue.add_assign(&row.scale(4 - c));
            }
        }
        for (row, &p) in self.bottom_rows().iter().zip(&self.pivots[self.k1..]) {
            match residue.get(p) {
                0 => {}
                2 => residue.add_assign(row),
                _ => return Ok(false),
            }
        }
        Ok(residue.is_zero())
    }

    /// Codeword at mixed-radix `index`.
    pub fn codeword_at(&self, index: u64) -> Z4Word {
        let mut word = Z4Word::zeros(self.n);
        let mut rest = index;
        for (row, &radix) in self.rows.iter().zip(&self.radices()).rev() {
            let digit = (rest % u64::from(radix)) as u8;
            rest /= u64::from(radix);
            if digit != 0 {
                word.add_assign(&row.scale(digit));
            }
        }
        word
    }

    /// Number of codewords, or `None` past `u64`.
    pub fn size(&self) -> Option<u64> {
        1u64.checked_shl(self.log2_size())
    }

    /// Lazily walks codewords `start..end` of the mixed-radix sequence.
    pub fn codewords_range(&self, start: u64, end: u64) -> Codewords<'_> {
        Codewords {
            rows: &self.rows,
            radices: self.radices(),
            digits: digits_of(start, &self.radices()),
            current: self.codeword_at(start),
            next: start,
            end,
        }
    }
}

fn digits_of(mut index: u64, radices: &[u8]) -> Vec<u8> {
    let mut digits = vec![0; radices.len()];
    for (d, &r) in digits.iter_mut().zip(radices).rev() {
        *d = (index % u64::from(r)) as u8;
        index /= u64::from(r);
    }
    digits
}

fn find_pivot(
    rows: &[Vec<u8>],
    n: usize,
    is_pivot: &[bool],
    accept: impl Fn(u8) -> bool,
) -> Option<(usize, usize)> {
    (0..n)
        .filter(|&c| !is_pivot[c])
        .find_map(|c| rows.iter().position(|r| accept(r[c])).map(|at| (c, at)))
}

/// Iterator over a contiguous range of the deterministic codeword sequence.
pub struct Codewords<'a> {
    rows: &'a [Z4Word],
    radices: Vec<u8>,
    digits: Vec<u8>,
    current: Z4Word,
    next: u64,
    end: u64,
}

impl Codewords<'_> {
    /// Advances the counter, adding the row of every digit that changes.
    fn step(&mut self) {
        for i in (0..self.digits.len()).rev() {
            self.current.add_assign(&self.rows[i]);
            self.digits[i] += 1;
            if self.digits[i] < self.radices[i] {
                return;
            }
            self.digits[i] = 0;
        }
    }
}

impl Iterator for Codewords<'_> {
    type Item = Z4Word;

    fn next(&mut self) -> Option<Z4Word> {
        if self.next >= self.end {
            return None;
        }
        let out = self.current.clone();
        self.next += 1;
        if self.next < self.end {
            self.step();
        }
        Some(out)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let left = (self.end - self.next) as usize;
        (left, Some(left))
    }
}
