//! Exhaustive verification: minimum Lee distance, weight distributions,
//! linearity of Gray images, parameter reports, and the size comparison
//! against quaternary Reed-Muller codes.
//!
//! Every sweep walks the mixed-radix codeword sequence of a standard form.
//! The index range is cut into fixed chunks that rayon may run on any number
//! of workers; chunk results are merged with order-independent operations
//! (min by `(weight, index)`, histogram sums), so the output never depends on
//! the worker count.

use std::fmt::{self, Write as _};
use std::sync::atomic::{AtomicU64, Ordering};

use rayon::prelude::*;

use crate::codes::{
    lrm, lrm_params, qrm_log2_size, BinaryCode, CodeParams, OverrideTable, RmOrder, Z4Code,
};
use crate::error::{Error, Result};
use crate::z4::{BitWord, Z4Word};

/// Default enumeration budget: log2 of the largest codeword count swept.
pub const DEFAULT_BUDGET: u32 = 28;

/// Environment variable consulted by [`budget_from_env`].
pub const BUDGET_ENV: &str = "Z4RM_BUDGET";

/// `Z4RM_BUDGET` if set and parseable, else [`DEFAULT_BUDGET`].
pub fn budget_from_env() -> u32 {
    std::env::var(BUDGET_ENV)
        .ok()
        .and_then(|v| v.trim().parse().ok())
        .unwrap_or(DEFAULT_BUDGET)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Mode {
    /// Sweep every codeword.
    Audit,
    /// Stop at the first codeword meeting the claimed distance.
    Fast,
}

#[derive(Clone, Copy, Debug)]
pub struct SweepOptions {
    pub budget: u32,
    /// Worker count; `None` uses the global rayon pool.
    pub threads: Option<usize>,
    pub mode: Mode,
}

impl SweepOptions {
    pub fn audit(budget: u32) -> Self {
        SweepOptions {
            budget,
            threads: None,
            mode: Mode::Audit,
        }
    }

    pub fn with_threads(mut self, threads: usize) -> Self {
        self.threads = Some(threads);
        self
    }

    pub fn with_mode(mut self, mode: Mode) -> Self {
        self.mode = mode;
        self
    }

    fn check(&self, log2_size: u32) -> Result<()> {
        if log2_size > self.budget || log2_size >= 64 {
            Err(Error::Capacity {
                required: log2_size,
                budget: self.budget,
            })
        } else {
            Ok(())
        }
    }

    fn run<T: Send>(&self, f: impl FnOnce() -> T + Send) -> T {
        match self.threads {
            Some(t) => rayon::ThreadPoolBuilder::new()
                .num_threads(t.max(1))
                .build()
                .expect("thread pool")
                .install(f),
            None => f(),
        }
    }
}

impl Default for SweepOptions {
    fn default() -> Self {
        SweepOptions::audit(DEFAULT_BUDGET)
    }
}

/// Words the sweep engine can accumulate and weigh.
pub trait SweepWord: Clone + Send + Sync {
    fn zero_like(&self) -> Self;
    fn accumulate(&mut self, row: &Self);
    fn sweep_weight(&self) -> u32;
}

impl SweepWord for Z4Word {
    fn zero_like(&self) -> Self {
        Z4Word::zeros(self.len())
    }

    fn accumulate(&mut self, row: &Self) {
        self.add_assign(row);
    }

    fn sweep_weight(&self) -> u32 {
        self.lee_weight()
    }
}

impl SweepWord for BitWord {
    fn zero_like(&self) -> Self {
        BitWord::zeros(self.len())
    }

    fn accumulate(&mut self, row: &Self) {
        self.xor_assign(row);
    }

    fn sweep_weight(&self) -> u32 {
        self.weight()
    }
}

const CHUNKS: u64 = 1024;
const STOP_POLL: u64 = 256;

/// Mixed-radix walk over `rows`, digit `i` running over `0..radices[i]`
/// with the first digit most significant.
struct Walk<'a, W> {
    rows: &'a [W],
    radices: &'a [u8],
    digits: Vec<u8>,
    word: W,
}

impl<'a, W: SweepWord> Walk<'a, W> {
    fn at(rows: &'a [W], radices: &'a [u8], zero: &W, mut index: u64) -> Self {
        let mut digits = vec![0u8; rows.len()];
        let mut word = zero.clone();
        for i in (0..rows.len()).rev() {
            let r = u64::from(radices[i]);
            digits[i] = (index % r) as u8;
            index /= r;
            for _ in 0..digits[i] {
                word.accumulate(&rows[i]);
            }
        }
        Walk {
            rows,
            radices,
            digits,
            word,
        }
    }

    fn step(&mut self) {
        for i in (0..self.digits.len()).rev() {
            self.word.accumulate(&self.rows[i]);
            self.digits[i] += 1;
            if self.digits[i] < self.radices[i] {
                return;
            }
            self.digits[i] = 0;
        }
    }
}

fn total(radices: &[u8]) -> u64 {
    radices.iter().map(|&r| u64::from(r)).product()
}

fn chunk_bounds(total: u64) -> Vec<(u64, u64)> {
    let chunks = CHUNKS.min(total).max(1);
    let size = total.div_ceil(chunks);
    (0..chunks)
        .map(|c| (c * size, ((c + 1) * size).min(total)))
        .filter(|(a, b)| a < b)
        .collect()
}

/// Smallest positive weight and the first index attaining it. Sweeping stops
/// past the first index whose weight is `<= floor`; indices before it are
/// always swept, so the answer is the same for any partitioning.
fn sweep_min<W: SweepWord>(rows: &[W], radices: &[u8], zero: &W, floor: u32) -> Option<(u32, u64)> {
    let total = total(radices);
    let hit = AtomicU64::new(u64::MAX);
    chunk_bounds(total)
        .into_par_iter()
        .map(|(start, end)| {
            let mut best: Option<(u32, u64)> = None;
            let mut walk = Walk::at(rows, radices, zero, start);
            for idx in start..end {
                if idx % STOP_POLL == 0 && idx > hit.load(Ordering::Relaxed) {
                    break;
                }
                let w = walk.word.sweep_weight();
                if w > 0 && best.is_none_or(|(bw, _)| w < bw) {
                    best = Some((w, idx));
                    if w <= floor {
                        hit.fetch_min(idx, Ordering::Relaxed);
                        break;
                    }
                }
                if idx + 1 < end {
                    walk.step();
                }
            }
            best
        })
        .reduce(
            || None,
            |a, b| match (a, b) {
                (Some(x), Some(y)) => Some(x.min(y)),
                (x, None) => x,
                (None, y) => y,
            },
        )
}

fn sweep_histogram<W: SweepWord>(
    rows: &[W],
    radices: &[u8],
    zero: &W,
    max_weight: usize,
) -> Vec<u64> {
    let total = total(radices);
    chunk_bounds(total)
        .into_par_iter()
        .map(|(start, end)| {
            let mut counts = vec![0u64; max_weight + 1];
            let mut walk = Walk::at(rows, radices, zero, start);
            for idx in start..end {
                counts[walk.word.sweep_weight() as usize] += 1;
                if idx + 1 < end {
                    walk.step();
                }
            }
            counts
        })
        .reduce(
            || vec![0u64; max_weight + 1],
            |mut a, b| {
                a.iter_mut().zip(b).for_each(|(x, y)| *x += y);
                a
            },
        )
}

/// A minimum-weight codeword together with its weight.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MinWeight {
    pub weight: u32,
    pub index: u64,
    pub witness: Z4Word,
}

/// Minimum nonzero Lee weight with the first codeword (in enumeration order)
/// attaining it. In [`Mode::Fast`], `claimed` is trusted as a lower bound.
pub fn min_lee_weight_witness(
    c: &Z4Code,
    opts: &SweepOptions,
    claimed: Option<u32>,
) -> Result<MinWeight> {
    if c.is_zero_code() {
        return Err(Error::UndefinedDistance);
    }
    opts.check(c.log2_size())?;
    let sf = c.standard_form();
    let floor = match (opts.mode, claimed) {
        (Mode::Fast, Some(d)) => d.max(1),
        _ => 1,
    };
    let radices = sf.radices();
    let zero = Z4Word::zeros(c.n());
    let (weight, index) = opts
        .run(|| sweep_min(sf.rows(), &radices, &zero, floor))
        .ok_or(Error::UndefinedDistance)?;
    Ok(MinWeight {
        weight,
        index,
        witness: sf.codeword_at(index),
    })
}

/// Minimum Lee distance of a linear code, i.e. its minimum nonzero Lee weight.
pub fn min_lee_weight(c: &Z4Code, opts: &SweepOptions) -> Result<u32> {
    Ok(min_lee_weight_witness(c, opts, None)?.weight)
}

/// Codeword counts by Lee weight, indexed `0..=2n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeightDistribution {
    pub counts: Vec<u64>,
}

impl WeightDistribution {
    pub fn total(&self) -> u64 {
        self.counts.iter().sum()
    }

    /// Smallest nonzero weight that occurs.
    pub fn min_nonzero(&self) -> Option<u32> {
        self.counts
            .iter()
            .enumerate()
            .skip(1)
            .find(|(_, &c)| c > 0)
            .map(|(w, _)| w as u32)
    }
}

pub fn lee_weight_distribution(c: &Z4Code, opts: &SweepOptions) -> Result<WeightDistribution> {
    opts.check(c.log2_size())?;
    let sf = c.standard_form();
    let radices = sf.radices();
    let zero = Z4Word::zeros(c.n());
    let counts = opts.run(|| sweep_histogram(sf.rows(), &radices, &zero, 2 * c.n()));
    Ok(WeightDistribution { counts })
}

/// Minimum Hamming distance of a binary linear code.
pub fn min_hamming_distance(c: &BinaryCode, opts: &SweepOptions) -> Result<u32> {
    let basis = c.basis();
    if basis.is_empty() {
        return Err(Error::UndefinedDistance);
    }
    opts.check(basis.len() as u32)?;
    if c.n <= 64 {
        let rows: Vec<u64> = basis.iter().map(pack_u64).collect();
        return Ok(opts.run(|| min_weight_u64(&rows)));
    }
    let radices = vec![2u8; basis.len()];
    let zero = BitWord::zeros(c.n);
    opts.run(|| sweep_min(&basis, &radices, &zero, 1))
        .map(|(w, _)| w)
        .ok_or(Error::UndefinedDistance)
}

fn pack_u64(w: &BitWord) -> u64 {
    w.to_bits()
        .iter()
        .rev()
        .fold(0, |acc, &x| (acc << 1) | u64::from(x))
}

/// Minimum nonzero weight of the span of independent single-limb rows.
/// The high rows fix a coset per parallel task; the low rows are walked in
/// Gray-code order, one XOR per step.
fn min_weight_u64(rows: &[u64]) -> u32 {
    let low = rows.len().min(16);
    let (low_rows, high_rows) = rows.split_at(low);
    (0u64..1 << high_rows.len())
        .into_par_iter()
        .map(|h| {
            let mut word = high_rows
                .iter()
                .enumerate()
                .filter(|(i, _)| (h >> i) & 1 == 1)
                .fold(0u64, |acc, (_, r)| acc ^ r);
            let mut best = if word != 0 {
                word.count_ones()
            } else {
                u32::MAX
            };
            for i in 1u64..1 << low {
                word ^= low_rows[i.trailing_zeros() as usize];
                if word != 0 {
                    best = best.min(word.count_ones());
                }
            }
            best
        })
        .min()
        .unwrap_or(u32::MAX)
}

/// Whether the Gray image of `c` is closed under XOR.
///
/// Uses `phi(u) ^ phi(v) = phi(u + v + 2*(alpha(u) * alpha(v)))`: the image is
/// linear iff `2*(alpha(u) * alpha(v))` lies in `c` for all codewords, and
/// that term is bilinear over Z2 in `alpha`, so checking generator pairs
/// suffices.
pub fn image_is_linear(c: &Z4Code) -> bool {
    let rows = c.standard_form().rows();
    rows.iter().enumerate().all(|(i, u)| {
        rows[i..].iter().all(|v| {
            let t = u.twice_alpha_product(v).expect("rows share a length");
            c.contains(&t).expect("rows share a length")
        })
    })
}

/// Largest code accepted by [`image_is_linear_bruteforce`].
pub const BRUTEFORCE_LIMIT: u32 = 14;

/// Pairwise XOR closure of all Gray images, decided by mapping each XOR back
/// through the inverse Gray map and testing membership.
pub fn image_is_linear_bruteforce(c: &Z4Code) -> Result<bool> {
    let k = c.log2_size();
    if k > BRUTEFORCE_LIMIT {
        return Err(Error::Capacity {
            required: k,
            budget: BRUTEFORCE_LIMIT,
        });
    }
    let images: Vec<BitWord> = c.enumerate(BRUTEFORCE_LIMIT)?.map(|w| w.gray()).collect();
    Ok(images.par_iter().enumerate().all(|(i, a)| {
        images[i..].iter().all(|b| {
            let x = a.xor(b).expect("equal lengths");
            let pre = x.gray_inverse().expect("even length");
            c.contains(&pre).expect("equal lengths")
        })
    }))
}

/// A computed value, or a marker that the budget ruled it out.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Outcome<T> {
    Computed(T),
    Skipped,
}

impl<T: fmt::Display> fmt::Display for Outcome<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Outcome::Computed(v) => v.fmt(f),
            Outcome::Skipped => f.write_str("skipped"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VerificationReport {
    pub order: RmOrder,
    pub label: String,
    pub claimed: CodeParams,
    pub length: u64,
    pub log2_size: u64,
    pub min_distance: Outcome<u64>,
    /// Hamming weight of the Gray image of the minimum-weight witness.
    pub image_distance: Outcome<u64>,
    pub image_linear: bool,
    pub pass: bool,
}

impl VerificationReport {
    pub fn skipped(&self) -> bool {
        self.min_distance == Outcome::Skipped
    }

    fn claims(&self) -> [(&'static str, u64, Outcome<u64>); 4] {
        [
            ("length", self.claimed.n, Outcome::Computed(self.length)),
            (
                "log2_size",
                self.claimed.k,
                Outcome::Computed(self.log2_size),
            ),
            ("min_lee_distance", self.claimed.d, self.min_distance),
            ("gray_min_hamming", self.claimed.d, self.image_distance),
        ]
    }

    /// One `claim=... expected=... got=... status=...` record per claim,
    /// followed by a summary record.
    pub fn render_lines(&self) -> String {
        let mut out = String::new();
        for (name, expected, got) in self.claims() {
            let status = match got {
                Outcome::Skipped => "skipped",
                Outcome::Computed(v) if v == expected => "pass",
                Outcome::Computed(_) => "fail",
            };
            let _ = writeln!(
                out,
                "claim={name} expected={expected} got={got} status={status}"
            );
        }
        let _ = writeln!(
            out,
            "order r={} m={} image_linear={} pass={}",
            self.order.r(),
            self.order.m(),
            self.image_linear,
            self.pass
        );
        out
    }

    pub fn render_text(&self) -> String {
        let verdict = if self.pass {
            "PASS"
        } else if self.skipped() {
            "SKIPPED (budget)"
        } else {
            "FAIL"
        };
        let mut out = format!("LRM{}: {verdict}\n", self.order);
        for (name, expected, got) in self.claims() {
            let _ = writeln!(out, "  {name:<18} claimed {expected:>6}  computed {got:>8}");
        }
        let _ = writeln!(
            out,
            "  Gray image         {}",
            if self.image_linear {
                "linear"
            } else {
                "nonlinear"
            }
        );
        let _ = writeln!(out, "  construction       {}", self.label);
        out
    }
}

/// Builds `LRM(order)` and checks its length, size, and minimum distance
/// against the closed-form parameters.
pub fn verify_lrm(
    order: RmOrder,
    overrides: &OverrideTable,
    opts: &SweepOptions,
) -> Result<VerificationReport> {
    let code = lrm(order, overrides)?;
    let claimed = lrm_params(order);
    let length = code.n() as u64;
    let log2_size = u64::from(code.log2_size());
    let claim_d = u32::try_from(claimed.d).ok();
    let (min_distance, image_distance) = match min_lee_weight_witness(&code, opts, claim_d) {
        Ok(mw) => (
            Outcome::Computed(u64::from(mw.weight)),
            Outcome::Computed(u64::from(mw.witness.gray().weight())),
        ),
        Err(Error::Capacity { .. }) => (Outcome::Skipped, Outcome::Skipped),
        Err(e) => return Err(e),
    };
    let image_linear = image_is_linear(&code);
    let pass = length == claimed.n
        && log2_size == claimed.k
        && min_distance == Outcome::Computed(claimed.d)
        && image_distance == Outcome::Computed(claimed.d);
    Ok(VerificationReport {
        order,
        label: code.label().to_string(),
        claimed,
        length,
        log2_size,
        min_distance,
        image_distance,
        image_linear,
        pass,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct NonequivalenceReport {
    pub order: RmOrder,
    pub lrm_k: u64,
    pub qrm_k: u64,
    pub distinct: bool,
}

impl fmt::Display for NonequivalenceReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} {} {} {}",
            self.order.r(),
            self.order.m(),
            self.lrm_k,
            self.qrm_k
        )?;
        f.write_str(if self.distinct { " distinct" } else { " equal" })
    }
}

pub fn nonequivalence_report(order: RmOrder) -> NonequivalenceReport {
    let lrm_k = lrm_params(order).k;
    let qrm_k = qrm_log2_size(order);
    NonequivalenceReport {
        order,
        lrm_k,
        qrm_k,
        distinct: lrm_k != qrm_k,
    }
}

/// Default quaternary length limit for [`search_nonlinear_base`].
pub const DEFAULT_SEARCH_LIMIT: usize = 8;

fn multisets(values: u32, len: usize) -> Vec<Vec<u32>> {
    fn go(start: u32, values: u32, left: usize, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if left == 0 {
            out.push(cur.clone());
            return;
        }
        for v in start..values {
            cur.push(v);
            go(v, values, left - 1, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(0, values, len, &mut Vec::new(), &mut out);
    out
}

/// Codes of length `target.n` and size `2^target.k` with minimum Lee distance
/// `target.d` whose Gray images are not linear.
///
/// Candidates are generator matrices already in the shape
/// `[[I A B], [0 2I 2C]]` with `A` binary, for every type `(k1, k2)` with
/// `2*k1 + k2 = k`. Since permuting coordinates preserves both the Lee
/// distance and linearity of the image, the non-pivot columns are taken as a
/// nondecreasing sequence of column values. The search is complete up to
/// coordinate permutation within that shape; it does not reduce further by
/// coordinate negation or translation.
pub fn search_nonlinear_base(target: CodeParams, length_limit: usize) -> Result<Vec<Z4Code>> {
    let n = target.n as usize;
    if n > length_limit {
        return Err(Error::LimitExceeded {
            length: n,
            limit: length_limit,
        });
    }
    let k = target.k as usize;
    let d = target.d as u32;
    let mut found = Vec::new();
    for k1 in 0..=k / 2 {
        let k2 = k - 2 * k1;
        if k1 + k2 > n || k >= 32 {
            continue;
        }
        let free = n - k1 - k2;
        // column value: top entries base 4 (first row most significant), then bottom bits
        let column_values = 1u32 << k;
        let columns = multisets(column_values, free);
        let a_blocks = 1u64 << (k1 * k2);
        let hits: Vec<Z4Code> = columns
            .par_iter()
            .flat_map_iter(|cols| {
                (0..a_blocks)
                    .filter_map(move |a| candidate(n, k1, k2, a, cols, d).map(|rows| (a, rows)))
            })
            .map(|(_, rows)| {
                Z4Code::new(
                    crate::linalg::GeneratorMatrix::new(n, rows).expect("length n"),
                    "",
                )
            })
            .collect();
        found.extend(hits);
    }
    let label = format!("search{}", target);
    Ok(found
        .into_iter()
        .filter(|c| image_is_linear_bruteforce(c).map_or(true, |linear| !linear))
        .enumerate()
        .map(|(i, c)| c.with_label(format!("{label}#{i}")))
        .collect())
}

fn candidate(n: usize, k1: usize, k2: usize, a: u64, cols: &[u32], d: u32) -> Option<Vec<Z4Word>> {
    let mut rows: Vec<Vec<u8>> = vec![vec![0; n]; k1 + k2];
    for (i, row) in rows.iter_mut().take(k1).enumerate() {
        row[i] = 1;
        for j in 0..k2 {
            row[k1 + j] = ((a >> (i * k2 + j)) & 1) as u8;
        }
    }
    for j in 0..k2 {
        rows[k1 + j][k1 + j] = 2;
    }
    for (c, &value) in cols.iter().enumerate() {
        let col = k1 + k2 + c;
        let mut v = value;
        for j in (0..k2).rev() {
            rows[k1 + j][col] = 2 * (v & 1) as u8;
            v >>= 1;
        }
        for i in (0..k1).rev() {
            rows[i][col] = (v & 3) as u8;
            v >>= 2;
        }
    }
    let rows: Vec<Z4Word> = rows
        .iter()
        .map(|r| Z4Word::from_symbols(r).expect("symbols < 4"))
        .collect();
    if rows.iter().any(|r| r.lee_weight() < d) {
        return None;
    }
    let mut radices = vec![4u8; k1];
    radices.extend(std::iter::repeat_n(2, k2));
    let zero = Z4Word::zeros(n);
    // sequential: the caller already runs candidates in parallel
    let mut walk = Walk::at(&rows, &radices, &zero, 0);
    let mut min = u32::MAX;
    for idx in 0..total(&radices) {
        let w = walk.word.lee_weight();
        if w > 0 {
            if w < d {
                return None;
            }
            min = min.min(w);
        }
        if idx + 1 < total(&radices) {
            walk.step();
        }
    }
    if min != d {
        return None;
    }
    let code = Z4Code::new(
        crate::linalg::GeneratorMatrix::new(n, rows.clone()).expect("length n"),
        "",
    );
    (!image_is_linear(&code)).then_some(rows)
}
