//! Code constructions: Plotkin doubling over Z4, the recursive `LRM(r, m)`
//! family, binary Reed-Muller codes, and their closed-form parameters.

use std::collections::BTreeMap;
use std::fmt;

use crate::analysis::{self, SweepOptions};
use crate::error::{Error, Result};
use crate::linalg::{GeneratorMatrix, StandardForm};
use crate::z4::{BitWord, Z4Word};

/// Largest supported `m`; keeps `2^m` and the binomial sums inside `u64`.
pub const MAX_M: u32 = 62;

/// An order `(r, m)` with `0 <= r <= m` and `1 <= m <= MAX_M`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct RmOrder {
    r: u32,
    m: u32,
}

impl RmOrder {
    pub fn new(r: i64, m: i64) -> Result<Self> {
        if m < 1 || m > i64::from(MAX_M) || r < 0 || r > m {
            return Err(Error::InvalidOrder { r, m });
        }
        Ok(RmOrder {
            r: r as u32,
            m: m as u32,
        })
    }

    pub fn r(&self) -> u32 {
        self.r
    }

    pub fn m(&self) -> u32 {
        self.m
    }

    /// Every order with `1 <= m <= max_m`, by `m` then `r`.
    pub fn all_up_to(max_m: u32) -> Vec<RmOrder> {
        (1..=max_m)
            .flat_map(|m| (0..=m).map(move |r| RmOrder { r, m }))
            .collect()
    }
}

impl fmt::Display for RmOrder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.r, self.m)
    }
}

/// `(n, k, d)`: length, log2 of size, minimum distance.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct CodeParams {
    pub n: u64,
    pub k: u64,
    pub d: u64,
}

impl fmt::Display for CodeParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{},{})", self.n, self.k, self.d)
    }
}

/// A linear quaternary code given by generators, with its standard form cached.
#[derive(Clone, Debug)]
pub struct Z4Code {
    generators: GeneratorMatrix,
    form: StandardForm,
    label: String,
}

impl PartialEq for Z4Code {
    fn eq(&self, other: &Self) -> bool {
        self.generators == other.generators && self.label == other.label
    }
}

impl Eq for Z4Code {}

impl Z4Code {
    pub fn new(generators: GeneratorMatrix, label: impl Into<String>) -> Self {
        let form = generators.standard_form();
        Z4Code {
            generators,
            form,
            label: label.into(),
        }
    }

    pub fn from_digit_rows(n: usize, rows: &[&str], label: &str) -> Result<Self> {
        Ok(Z4Code::new(
            GeneratorMatrix::from_digit_rows(n, rows)?,
            label,
        ))
    }

    pub fn zero(n: usize) -> Self {
        Z4Code::new(GeneratorMatrix::empty(n), "zero")
    }

    /// The code generated by the all-2 word.
    pub fn repetition(n: usize) -> Self {
        Z4Code::new(
            GeneratorMatrix::new(n, vec![Z4Word::constant(n, 2)]).expect("row length n"),
            "rep",
        )
    }

    /// All of `Z4^n`, generated by the unit words.
    pub fn full(n: usize) -> Self {
        let rows = (0..n).map(|i| Z4Word::unit(n, i)).collect();
        Z4Code::new(GeneratorMatrix::new(n, rows).expect("row length n"), "full")
    }

    pub fn n(&self) -> usize {
        self.generators.n()
    }

    pub fn generators(&self) -> &GeneratorMatrix {
        &self.generators
    }

    pub fn standard_form(&self) -> &StandardForm {
        &self.form
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn with_label(mut self, label: impl Into<String>) -> Self {
        self.label = label.into();
        self
    }

    pub fn log2_size(&self) -> u32 {
        self.form.log2_size()
    }

    pub fn is_zero_code(&self) -> bool {
        self.log2_size() == 0
    }

    pub fn contains(&self, x: &Z4Word) -> Result<bool> {
        self.form.contains(x)
    }

    /// All codewords in the deterministic mixed-radix order, after a budget check.
    pub fn enumerate(&self, budget: u32) -> Result<crate::linalg::Codewords<'_>> {
        let k = self.log2_size();
        if k > budget || k >= 64 {
            return Err(Error::Capacity {
                required: k,
                budget,
            });
        }
        Ok(self.form.codewords_range(0, 1u64 << k))
    }
}

/// `{(x, x + y) : x in c1, y in c2}`.
pub fn plotkin(c1: &Z4Code, c2: &Z4Code) -> Result<Z4Code> {
    if c1.n() != c2.n() {
        return Err(Error::Dimension {
            expected: c1.n(),
            found: c2.n(),
        });
    }
    let n = c1.n();
    let zero = Z4Word::zeros(n);
    let rows = c1
        .generators
        .rows()
        .iter()
        .map(|g| g.concat(g))
        .chain(c2.generators.rows().iter().map(|h| zero.concat(h)))
        .collect();
    Ok(Z4Code::new(
        GeneratorMatrix::new(2 * n, rows)?,
        format!("plotkin({}, {})", c1.label, c2.label),
    ))
}

/// Codes substituted at chosen recursion nodes of [`lrm`].
#[derive(Clone, Debug, Default)]
pub struct OverrideTable {
    codes: BTreeMap<RmOrder, Z4Code>,
}

impl OverrideTable {
    pub fn new() -> Self {
        Self::default()
    }

    /// Adds `code` at `order` after checking its length and size against the
    /// family parameters, and its minimum distance when `log2_size <= budget`.
    pub fn insert(&mut self, order: RmOrder, code: Z4Code, budget: u32) -> Result<()> {
        let claim = lrm_params(order);
        let mismatch = |field, expected, got| Error::OverrideMismatch {
            r: order.r,
            m: order.m,
            field,
            expected,
            got,
        };
        if code.n() as u64 != claim.n {
            return Err(mismatch("length", claim.n, code.n() as u64));
        }
        if u64::from(code.log2_size()) != claim.k {
            return Err(mismatch("log2 size", claim.k, u64::from(code.log2_size())));
        }
        if code.log2_size() <= budget {
            let opts = SweepOptions::audit(budget);
            let d = u64::from(analysis::min_lee_weight(&code, &opts)?);
            if d != claim.d {
                return Err(mismatch("minimum distance", claim.d, d));
            }
        }
        self.codes.insert(order, code);
        Ok(())
    }

    pub fn get(&self, order: RmOrder) -> Option<&Z4Code> {
        self.codes.get(&order)
    }

    pub fn is_empty(&self) -> bool {
        self.codes.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&RmOrder, &Z4Code)> {
        self.codes.iter()
    }
}

/// `LRM(r, m)` of length `2^(m-1)`.
///
/// `r = 0` is the repetition code generated by the all-2 word, `r = m` is the
/// full space; these cover both `m = 1` base codes. Interior orders recurse as
/// `plotkin(LRM(r, m-1), LRM(r-1, m-1))`. An override at any visited node
/// replaces the subtree below it. The label records the whole recursion.
pub fn lrm(order: RmOrder, overrides: &OverrideTable) -> Result<Z4Code> {
    let RmOrder { r, m } = order;
    let node = format!("LRM({r},{m})");
    if let Some(code) = overrides.get(order) {
        let label = format!("{node}[override:{}]", code.label());
        return Ok(code.clone().with_label(label));
    }
    let n = 1usize << (m - 1);
    if r == 0 {
        return Ok(Z4Code::repetition(n).with_label(format!("{node}[rep]")));
    }
    if r == m {
        return Ok(Z4Code::full(n).with_label(format!("{node}[full]")));
    }
    let left = lrm(RmOrder { r, m: m - 1 }, overrides)?;
    let right = lrm(RmOrder { r: r - 1, m: m - 1 }, overrides)?;
    let code = plotkin(&left, &right)?;
    Ok(code.with_label(format!("{node}[{} + {}]", left.label(), right.label())))
}

/// `lrm` with no overrides.
pub fn lrm_default(r: i64, m: i64) -> Result<Z4Code> {
    lrm(RmOrder::new(r, m)?, &OverrideTable::new())
}

/// A binary linear code given by generator rows.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BinaryCode {
    pub n: usize,
    pub rows: Vec<BitWord>,
}

impl BinaryCode {
    pub fn dimension(&self) -> usize {
        self.basis().len()
    }

    /// Linearly independent rows spanning the same code.
    pub fn basis(&self) -> Vec<BitWord> {
        let mut basis: Vec<BitWord> = Vec::new();
        let mut leads: Vec<usize> = Vec::new();
        for row in &self.rows {
            let mut v = row.clone();
            for (b, &lead) in basis.iter().zip(&leads) {
                if v.get(lead) {
                    v.xor_assign(b);
                }
            }
            if let Some(lead) = (0..self.n).find(|&i| v.get(i)) {
                // keep earlier rows reduced at the new lead
                for (b, _) in basis.iter_mut().zip(&leads) {
                    if b.get(lead) {
                        b.xor_assign(&v);
                    }
                }
                basis.push(v);
                leads.push(lead);
            }
        }
        basis
    }
}

/// Monomials of degree `<= r` in `m` variables: graded, then lexicographic
/// on the sorted variable indices.
pub fn monomials(r: u32, m: u32) -> Vec<Vec<u32>> {
    fn extend(start: u32, m: u32, left: u32, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if left == 0 {
            out.push(cur.clone());
            return;
        }
        for v in start..m {
            cur.push(v);
            extend(v + 1, m, left - 1, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    for deg in 0..=r.min(m) {
        extend(0, m, deg, &mut Vec::new(), &mut out);
    }
    out
}

/// Binary `RM(r, m)`: evaluations of the monomials of degree `<= r` at the
/// points of `Z2^m`. Point `p` has `v_1` as its most significant bit.
pub fn rm_binary(order: RmOrder) -> BinaryCode {
    let RmOrder { r, m } = order;
    let n = 1usize << m;
    let rows = monomials(r, m)
        .into_iter()
        .map(|mono| {
            let mut row = BitWord::zeros(n);
            for p in 0..n {
                // variable index i (0-based) is v_{i+1}
                let on = mono.iter().all(|&i| (p >> (m - 1 - i)) & 1 == 1);
                row.set(p, on);
            }
            row
        })
        .collect();
    BinaryCode { n, rows }
}

pub fn binomial(n: u64, k: u64) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    (0..k).fold(1u64, |acc, i| acc * (n - i) / (i + 1))
}

fn binomial_prefix(n: u64, r: u64) -> u64 {
    (0..=r).map(|i| binomial(n, i)).sum()
}

/// `(n = 2^(m-1), k = sum_{i<=r} C(m, i), d = 2^(m-r))`.
pub fn lrm_params(order: RmOrder) -> CodeParams {
    let (r, m) = (u64::from(order.r), u64::from(order.m));
    CodeParams {
        n: 1 << (m - 1),
        k: binomial_prefix(m, r),
        d: 1 << (m - r),
    }
}

/// log2 of the size of the quaternary Reed-Muller code of the same length:
/// `2 * sum_{i<=r} C(m-1, i)`.
pub fn qrm_log2_size(order: RmOrder) -> u64 {
    2 * binomial_prefix(u64::from(order.m) - 1, u64::from(order.r))
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::BTreeSet;

    fn set(c: &Z4Code) -> BTreeSet<String> {
        c.enumerate(20).unwrap().map(|w| w.to_string()).collect()
    }

    fn strs(list: &[&str]) -> BTreeSet<String> {
        list.iter().map(|s| s.to_string()).collect()
    }

    fn order(r: i64, m: i64) -> RmOrder {
        RmOrder::new(r, m).unwrap()
    }

    #[test]
    fn order_validation() {
        assert!(RmOrder::new(0, 1).is_ok());
        assert!(RmOrder::new(2, 1).is_err());
        assert!(RmOrder::new(-1, 3).is_err());
        assert!(RmOrder::new(0, 0).is_err());
        assert!(RmOrder::new(0, 63).is_err());
    }

    #[test]
    fn plotkin_examples() {
        let l11 = lrm_default(1, 1).unwrap();
        let l01 = lrm_default(0, 1).unwrap();
        assert_eq!(
            set(&plotkin(&l11, &l01).unwrap()),
            strs(&["00", "11", "22", "33", "13", "31", "02", "20"])
        );
        let z = plotkin(&Z4Code::zero(3), &Z4Code::zero(3)).unwrap();
        assert_eq!(z.n(), 6);
        assert!(z.is_zero_code());
        assert_eq!(
            set(&plotkin(&l01, &l01).unwrap()),
            strs(&["00", "02", "22", "20"])
        );
        assert!(plotkin(&l01, &lrm_default(0, 2).unwrap()).is_err());
    }

    #[test]
    fn lrm_examples() {
        let c = lrm_default(0, 2).unwrap();
        assert_eq!(c.generators().rows(), &["22".parse::<Z4Word>().unwrap()]);
        assert_eq!(set(&c), strs(&["00", "22"]));
        assert_eq!(
            lrm_default(2, 2).unwrap().enumerate(20).unwrap().count(),
            16
        );
        assert_eq!(
            set(&lrm_default(1, 2).unwrap()),
            strs(&["00", "11", "22", "33", "13", "31", "02", "20"])
        );
    }

    #[test]
    fn lrm_label_traces_recursion() {
        let c = lrm_default(2, 3).unwrap();
        assert_eq!(
            c.label(),
            "LRM(2,3)[LRM(2,2)[full] + LRM(1,2)[LRM(1,1)[full] + LRM(0,1)[rep]]]"
        );
    }

    #[test]
    fn lrm_sizes_follow_formula() {
        for o in RmOrder::all_up_to(8) {
            let c = lrm(o, &OverrideTable::new()).unwrap();
            let p = lrm_params(o);
            assert_eq!(c.n() as u64, p.n, "{o}");
            assert_eq!(u64::from(c.log2_size()), p.k, "{o}");
        }
    }

    #[test]
    fn rm_binary_examples() {
        let rm02 = rm_binary(order(0, 2));
        assert_eq!(rm02.rows, vec!["1111".parse::<BitWord>().unwrap()]);
        let rm11 = rm_binary(order(1, 1));
        assert_eq!(rm11.n, 2);
        assert_eq!(rm11.dimension(), 2);
        // RM(1,2): constant, v1, v2 at points 00, 01, 10, 11
        let rm12 = rm_binary(order(1, 2));
        let rows: Vec<String> = rm12.rows.iter().map(|r| r.to_string()).collect();
        assert_eq!(rows, ["1111", "0011", "0101"]);
        assert!(rm12.rows.iter().all(|r| r.weight() % 2 == 0));
        assert_eq!(rm12.dimension(), 3);
    }

    #[test]
    fn monomial_order() {
        assert_eq!(
            monomials(2, 3),
            vec![
                vec![],
                vec![0],
                vec![1],
                vec![2],
                vec![0, 1],
                vec![0, 2],
                vec![1, 2]
            ]
        );
        for m in 1..=8u32 {
            for r in 0..=m {
                assert_eq!(
                    rm_binary(order(r.into(), m.into())).rows.len() as u64,
                    lrm_params(order(r.into(), m.into())).k
                );
            }
        }
    }

    #[test]
    fn lrm_params_examples() {
        assert_eq!(lrm_params(order(0, 2)), CodeParams { n: 2, k: 1, d: 4 });
        assert_eq!(lrm_params(order(3, 5)), CodeParams { n: 16, k: 26, d: 4 });
        for m in 1..=20 {
            assert_eq!(lrm_params(order(m, m)).k, 1 << m);
        }
    }

    #[test]
    fn qrm_examples() {
        assert_eq!(qrm_log2_size(order(3, 5)), 30);
        for m in 1..=20 {
            assert_eq!(qrm_log2_size(order(0, m)), 2);
        }
        assert_eq!(qrm_log2_size(order(1, 3)), 6);
    }

    #[test]
    fn binomials() {
        assert_eq!(binomial(5, 2), 10);
        assert_eq!(binomial(4, 5), 0);
        assert_eq!(binomial(62, 31), 465428353255261088);
    }

    #[test]
    fn override_validation() {
        let mut table = OverrideTable::new();
        let wrong_len = Z4Code::full(3);
        assert!(matches!(
            table.insert(order(1, 2), wrong_len, 28),
            Err(Error::OverrideMismatch {
                field: "length",
                ..
            })
        ));
        let wrong_size = Z4Code::full(2);
        assert!(matches!(
            table.insert(order(1, 2), wrong_size, 28),
            Err(Error::OverrideMismatch {
                field: "log2 size",
                ..
            })
        ));
        // size 8 but distance 1
        let wrong_d = Z4Code::from_digit_rows(2, &["10", "02"], "bad").unwrap();
        assert!(matches!(
            table.insert(order(1, 2), wrong_d, 28),
            Err(Error::OverrideMismatch {
                field: "minimum distance",
                expected: 2,
                got: 1,
                ..
            })
        ));
        // distance unchecked past the budget
        let wrong_d = Z4Code::from_digit_rows(2, &["10", "02"], "bad").unwrap();
        assert!(table.insert(order(1, 2), wrong_d, 2).is_ok());
    }

    #[test]
    fn override_replaces_node() {
        let mut table = OverrideTable::new();
        let alt = Z4Code::from_digit_rows(2, &["13", "02"], "alt").unwrap();
        table.insert(order(1, 2), alt, 28).unwrap();
        let c = lrm(order(1, 3), &table).unwrap();
        assert!(c.label().contains("LRM(1,2)[override:alt]"));
        assert_eq!(c.generators().rows()[0].to_string(), "1313");
    }
}
