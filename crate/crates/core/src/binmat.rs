//! Binary matrices acting on vectors of GF(2^m) elements.
//!
//! Only additions occur here. One addition is one XOR of two field elements.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::field::{Element, OpCounter};
use crate::{Error, Result};

/// Bit-packed row-major 0/1 matrix. Each row occupies whole `u64` words and the
/// padding bits past `cols` are always zero.
#[derive(Clone, PartialEq, Eq)]
pub struct BinaryMatrix {
    rows: usize,
    cols: usize,
    words_per_row: usize,
    bits: Vec<u64>,
}

impl BinaryMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        let words_per_row = cols.div_ceil(64);
        BinaryMatrix { rows, cols, words_per_row, bits: vec![0; rows * words_per_row] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, true);
        }
        m
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> bool) -> Self {
        let mut m = Self::zeros(rows, cols);
        for r in 0..rows {
            for c in 0..cols {
                if f(r, c) {
                    m.set(r, c, true);
                }
            }
        }
        m
    }

    /// Parses rows of `0`/`1` characters; any other character is ignored.
    pub fn from_rows<S: AsRef<str>>(rows: &[S]) -> Self {
        let parsed: Vec<Vec<bool>> = rows
            .iter()
            .map(|r| r.as_ref().chars().filter_map(|c| match c {
                '0' => Some(false),
                '1' => Some(true),
                _ => None,
            }).collect())
            .collect();
        let cols = parsed.first().map_or(0, Vec::len);
        Self::from_fn(parsed.len(), cols, |r, c| parsed[r][c])
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    #[inline]
    pub fn get(&self, r: usize, c: usize) -> bool {
        self.bits[r * self.words_per_row + c / 64] >> (c % 64) & 1 == 1
    }

    #[inline]
    pub fn set(&mut self, r: usize, c: usize, value: bool) {
        let w = &mut self.bits[r * self.words_per_row + c / 64];
        if value {
            *w |= 1 << (c % 64);
        } else {
            *w &= !(1 << (c % 64));
        }
    }

    /// Writes the low `width` bits of `mask` into row `r` starting at column `c0`.
    pub fn set_bits(&mut self, r: usize, c0: usize, width: usize, mask: u32) {
        for j in 0..width {
            self.set(r, c0 + j, mask >> j & 1 == 1);
        }
    }

    /// Reads `width ≤ 32` bits of row `r` from column `c0`; columns past the end read as 0.
    #[inline]
    pub fn bits(&self, r: usize, c0: usize, width: usize) -> u32 {
        let row = &self.bits[r * self.words_per_row..(r + 1) * self.words_per_row];
        let (w, off) = (c0 / 64, c0 % 64);
        if w >= row.len() {
            return 0;
        }
        let mut v = row[w] >> off;
        if off + width > 64 && w + 1 < row.len() {
            v |= row[w + 1] << (64 - off);
        }
        (v & ((1u64 << width) - 1)) as u32
    }

    pub fn row_weight(&self, r: usize) -> usize {
        self.row_words(r).iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn weight(&self) -> usize {
        self.bits.iter().map(|w| w.count_ones() as usize).sum()
    }

    fn row_words(&self, r: usize) -> &[u64] {
        &self.bits[r * self.words_per_row..(r + 1) * self.words_per_row]
    }

    /// Rows as `0`/`1` strings.
    pub fn to_rows(&self) -> Vec<alloc::string::String> {
        (0..self.rows)
            .map(|r| (0..self.cols).map(|c| if self.get(r, c) { '1' } else { '0' }).collect())
            .collect()
    }

    /// Sub-matrix of the given row and column ranges.
    pub fn block(&self, rows: core::ops::Range<usize>, cols: core::ops::Range<usize>) -> BinaryMatrix {
        let c0 = cols.start;
        let r0 = rows.start;
        BinaryMatrix::from_fn(rows.len(), cols.len(), |r, c| self.get(r0 + r, c0 + c))
    }
}

impl fmt::Debug for BinaryMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "BinaryMatrix {}x{}", self.rows, self.cols)?;
        for row in self.to_rows() {
            writeln!(f, "  {row}")?;
        }
        Ok(())
    }
}

/// `y_i = Σ_{A_ij = 1} v_j`, costing `weight(row) - 1` additions per nonzero row.
pub fn binmatvec_naive(a: &BinaryMatrix, v: &[Element], counter: &mut OpCounter) -> Result<Vec<Element>> {
    if a.cols() != v.len() {
        return Err(Error::ShapeMismatch { expected: a.cols(), found: v.len() });
    }
    let mut out = Vec::with_capacity(a.rows());
    for r in 0..a.rows() {
        let mut acc: Option<Element> = None;
        for (w, &word) in a.row_words(r).iter().enumerate() {
            let mut bits = word;
            while bits != 0 {
                let j = w * 64 + bits.trailing_zeros() as usize;
                bits &= bits - 1;
                acc = Some(match acc {
                    None => v[j],
                    Some(s) => counter.add(s, v[j]),
                });
            }
        }
        out.push(acc.unwrap_or(Element::ZERO));
    }
    Ok(out)
}

/// Column grouping for the Method of Four Russians.
///
/// Every group owns a full table of `2^t` subset sums; the last group is padded
/// with zero columns when `t` does not divide `cols`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct FourRussiansPlan {
    cols: usize,
    block: usize,
}

impl FourRussiansPlan {
    pub fn new(cols: usize, block: usize) -> Result<Self> {
        if !(1..=16).contains(&block) {
            return Err(Error::BlockSizeOutOfRange(block));
        }
        Ok(FourRussiansPlan { cols, block })
    }

    /// Plan with [`default_block_size`].
    pub fn for_cols(cols: usize) -> Self {
        FourRussiansPlan { cols, block: default_block_size(cols) }
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    /// Block width `t`.
    pub fn block(&self) -> usize {
        self.block
    }

    /// Number of column groups `G = ⌈cols / t⌉`.
    pub fn groups(&self) -> usize {
        self.cols.div_ceil(self.block)
    }

    /// Column range of group `g` (the last one may be short).
    pub fn group_columns(&self, g: usize) -> core::ops::Range<usize> {
        let start = g * self.block;
        start..(start + self.block).min(self.cols)
    }

    pub fn table_size(&self) -> usize {
        1 << self.block
    }

    /// `G (2^t - t - 1) + rows (G - 1)`.
    pub fn predicted_adds(&self, rows: usize) -> u64 {
        let g = self.groups() as u64;
        let t = self.block as u64;
        let table = (1u64 << t) - t - 1;
        g * table + rows as u64 * g.saturating_sub(1)
    }
}

/// `⌊log₂ cols⌋`, at least 1.
pub fn default_block_size(cols: usize) -> usize {
    if cols <= 1 {
        1
    } else {
        (usize::BITS - 1 - cols.leading_zeros()) as usize
    }
    .clamp(1, 16)
}

/// Binary matrix-vector product by blocked subset-sum tables.
///
/// Table entries are filled in increasing mask order, each as the entry for the
/// mask without its lowest bit plus one vector element, so a group costs
/// `2^t - t - 1` additions. Every row then adds one lookup per group.
pub fn binmatvec_four_russians(
    a: &BinaryMatrix,
    v: &[Element],
    plan: &FourRussiansPlan,
    counter: &mut OpCounter,
) -> Result<Vec<Element>> {
    if a.cols() != v.len() {
        return Err(Error::ShapeMismatch { expected: a.cols(), found: v.len() });
    }
    if plan.cols() != a.cols() {
        return Err(Error::ShapeMismatch { expected: plan.cols(), found: a.cols() });
    }
    let t = plan.block();
    let size = plan.table_size();
    let groups = plan.groups();
    let mut tables = vec![Element::ZERO; groups * size];
    for g in 0..groups {
        let base = g * t;
        let table = &mut tables[g * size..(g + 1) * size];
        for mask in 1..size {
            let low = mask.trailing_zeros() as usize;
            let x = v.get(base + low).copied().unwrap_or(Element::ZERO);
            let rest = mask & (mask - 1);
            table[mask] = if rest == 0 { x } else { counter.add(table[rest], x) };
        }
    }
    let mut out = Vec::with_capacity(a.rows());
    for r in 0..a.rows() {
        let mut acc = tables[a.bits(r, 0, t) as usize];
        for g in 1..groups {
            let idx = a.bits(r, g * t, t) as usize;
            acc = counter.add(acc, tables[g * size + idx]);
        }
        out.push(acc);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::CountPolicy;
    use proptest::prelude::*;

    fn elems(xs: &[u16]) -> Vec<Element> {
        xs.iter().copied().map(Element::new).collect()
    }

    #[test]
    fn naive_examples() {
        let v = elems(&[1, 2, 4, 3, 6, 7, 5]);
        let mut c = OpCounter::default();
        assert_eq!(binmatvec_naive(&BinaryMatrix::identity(7), &v, &mut c).unwrap(), v);
        assert_eq!(c.count().adds, 0);

        let ones = BinaryMatrix::from_rows(&["1111111"]);
        let y = binmatvec_naive(&ones, &v, &mut c).unwrap();
        assert_eq!(y, vec![Element::ZERO]);
        assert_eq!(c.take().adds, 6);

        let zero = BinaryMatrix::zeros(1, 7);
        assert_eq!(binmatvec_naive(&zero, &v, &mut c).unwrap(), vec![Element::ZERO]);
        assert_eq!(c.count().adds, 0);

        assert!(binmatvec_naive(&zero, &v[..3], &mut c).is_err());
    }

    #[test]
    fn block_size_examples() {
        assert_eq!(default_block_size(7), 2);
        assert_eq!(default_block_size(255), 7);
        assert_eq!(default_block_size(1), 1);
        assert_eq!(default_block_size(4095), 11);
        assert!(FourRussiansPlan::new(10, 0).is_err());
        assert!(FourRussiansPlan::new(10, 17).is_err());
    }

    #[test]
    fn plan_geometry() {
        let p = FourRussiansPlan::for_cols(255);
        assert_eq!((p.block(), p.groups()), (7, 37));
        assert_eq!(p.group_columns(36), 252..255);
        assert_eq!(p.predicted_adds(255), 37 * 120 + 255 * 36);
        assert_eq!(p.predicted_adds(255), 13_620);
    }

    #[test]
    fn single_group() {
        let a = BinaryMatrix::from_rows(&["10110", "01111", "00000", "11111"]);
        let v = elems(&[3, 9, 17, 4, 30]);
        let plan = FourRussiansPlan::new(5, 5).unwrap();
        let mut c = OpCounter::default();
        let y = binmatvec_four_russians(&a, &v, &plan, &mut c).unwrap();
        assert_eq!(y, binmatvec_naive(&a, &v, &mut OpCounter::off()).unwrap());
        assert_eq!(c.count().adds, plan.predicted_adds(4));
    }

    #[test]
    fn bits_across_words() {
        let mut a = BinaryMatrix::zeros(2, 130);
        a.set(0, 62, true);
        a.set(0, 64, true);
        a.set(0, 129, true);
        assert_eq!(a.bits(0, 60, 7), 0b0010100);
        assert_eq!(a.bits(0, 128, 7), 0b10);
        assert_eq!(a.bits(0, 200, 7), 0);
        assert_eq!(a.row_weight(0), 3);
        assert_eq!(a.weight(), 3);
    }

    fn matrix_and_vector() -> impl Strategy<Value = (BinaryMatrix, Vec<Element>, usize)> {
        (1usize..40, 1usize..150).prop_flat_map(|(rows, cols)| {
            (
                proptest::collection::vec(any::<bool>(), rows * cols),
                proptest::collection::vec(any::<u16>(), cols),
                1usize..=10,
            )
                .prop_map(move |(bits, v, t)| {
                    let a = BinaryMatrix::from_fn(rows, cols, |r, c| bits[r * cols + c]);
                    (a, v.into_iter().map(Element::new).collect(), t)
                })
        })
    }

    proptest! {
        #[test]
        fn four_russians_matches_naive((a, v, t) in matrix_and_vector()) {
            let plan = FourRussiansPlan::new(a.cols(), t).unwrap();
            let mut c = OpCounter::new(CountPolicy::SkipTrivial);
            let fast = binmatvec_four_russians(&a, &v, &plan, &mut c).unwrap();
            prop_assert_eq!(&fast, &binmatvec_naive(&a, &v, &mut OpCounter::off()).unwrap());
            prop_assert_eq!(c.count().adds, plan.predicted_adds(a.rows()));
            prop_assert_eq!(c.count().mults, 0);
        }

        #[test]
        fn rows_round_trip((a, _v, _t) in matrix_and_vector()) {
            prop_assert_eq!(BinaryMatrix::from_rows(&a.to_rows()), a);
        }
    }
}
