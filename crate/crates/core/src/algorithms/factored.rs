use alloc::vec;
use alloc::vec::Vec;

use super::{apply_binary, ApplyOptions, Algorithm, Transformed};
use crate::binmat::BinaryMatrix;
use crate::field::{Element, FieldContext, OpCounter};
use crate::reference::{dense_matvec, ElementMatrix};
use crate::structure::{rotate_right, Basis, CoordinateTable, Coset, CosetPartition};
use crate::{Error, Result};

/// One diagonal block of `D_e`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum DiagonalBlock {
    /// The `1 × 1` block of the coset `{0}`.
    Unit,
    /// Row `r` is the first row rotated left by `r`.
    Circulant(Vec<Element>),
    Dense(ElementMatrix),
}

impl DiagonalBlock {
    pub fn size(&self) -> usize {
        match self {
            DiagonalBlock::Unit => 1,
            DiagonalBlock::Circulant(row) => row.len(),
            DiagonalBlock::Dense(m) => m.rows(),
        }
    }

    pub fn get(&self, r: usize, c: usize) -> Element {
        match self {
            DiagonalBlock::Unit => Element::ONE,
            DiagonalBlock::Circulant(row) => row[(r + c) % row.len()],
            DiagonalBlock::Dense(m) => m.get(r, c),
        }
    }

    pub fn to_matrix(&self) -> ElementMatrix {
        let d = self.size();
        ElementMatrix::from_fn(d, d, |r, c| self.get(r, c))
    }

    /// `true` when this is a circulant whose first row is `(β, β², …, β^{2^{d-1}})`
    /// for a normal basis of GF(2^d).
    pub fn is_basis_circulant(&self, ctx: &FieldContext) -> bool {
        let DiagonalBlock::Circulant(row) = self else {
            return false;
        };
        let d = row.len();
        let closes = ctx.square(row[d - 1]) == row[0];
        let squares = row.windows(2).all(|w| ctx.square(w[0]) == w[1]);
        closes && squares && Basis::new(row.clone()).is_ok()
    }

    fn nontrivial_entries(&self) -> u64 {
        match self {
            DiagonalBlock::Unit => 0,
            DiagonalBlock::Circulant(row) => (row.iter().filter(|e| !e.is_trivial()).count() * row.len()) as u64,
            DiagonalBlock::Dense(m) => m.nontrivial_entries() as u64,
        }
    }

    fn apply(&self, v: &[Element], ctx: &FieldContext, counter: &mut OpCounter) -> Result<Vec<Element>> {
        match self {
            DiagonalBlock::Unit => Ok(v.to_vec()),
            DiagonalBlock::Circulant(row) => circulant_matvec(row, v, ctx, counter),
            DiagonalBlock::Dense(m) => dense_matvec(m, v, ctx, counter),
        }
    }
}

/// Direct `d × d` product with the circulant whose row `i` is `first_row`
/// rotated left by `i`: `y_i = Σ_j first_row[(i + j) mod d] v_j`.
pub fn circulant_matvec(
    first_row: &[Element],
    v: &[Element],
    ctx: &FieldContext,
    counter: &mut OpCounter,
) -> Result<Vec<Element>> {
    let d = first_row.len();
    if v.len() != d {
        return Err(Error::ShapeMismatch { expected: d, found: v.len() });
    }
    let mut out = Vec::with_capacity(d);
    for i in 0..d {
        let mut acc = counter.mul(ctx, first_row[i % d], v[0]);
        for j in 1..d {
            let p = counter.mul(ctx, first_row[(i + j) % d], v[j]);
            acc = counter.add(acc, p);
        }
        out.push(acc);
    }
    Ok(out)
}

/// Diagonal blocks of one coset size grouped into a `g × g` grid of `d × d`
/// binary blocks, and whether that grid is a block circulant.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BlockCirculantGroup {
    pub size: usize,
    /// Coset indices (plan order) forming the grid.
    pub cosets: Vec<usize>,
    /// `block(a + 1, b + 1) = block(a, b)` for all `a, b` (indices mod `g`).
    pub is_block_circulant: bool,
}

/// The factorization `F_e = A_e D_e f_e` of a transform, with the index
/// permutations relating `f_e`, `F_e` to natural order.
#[derive(Clone, Debug)]
pub struct FactoredTransform<'a> {
    ctx: &'a FieldContext,
    algorithm: Algorithm,
    cosets: Vec<Coset>,
    offsets: Vec<usize>,
    in_perm: Vec<usize>,
    out_perm: Vec<usize>,
    grouped_output: bool,
    binary: BinaryMatrix,
    blocks: Vec<DiagonalBlock>,
}

/// Evaluation points for one coset and the shape of its diagonal block.
pub(crate) struct CosetPoints {
    pub points: Vec<Element>,
    pub circulant: bool,
}

/// Common builder for the linearized-polynomial plans.
///
/// Coset `k` with representative `s` contributes `L_k(x^s)`, where `L_k` is
/// linearized with coefficients `f_{s 2^j}`. Given points `y_t` spanning the
/// subfield containing `α^s`, the diagonal block is `D[t][j] = y_t^{2^j}` and
/// row `i` of `A_e` holds the coordinates of `α^{i s}` in `(y_t)`.
pub(crate) fn build_linearized<'a>(
    ctx: &'a FieldContext,
    algorithm: Algorithm,
    partition: &CosetPartition,
    grouped_output: bool,
    mut points_for: impl FnMut(&Coset) -> Result<CosetPoints>,
) -> Result<FactoredTransform<'a>> {
    let n = ctx.n();
    let cosets = partition.cosets().to_vec();
    let in_perm = partition.ordering();
    let out_perm = if grouped_output { in_perm.clone() } else { (0..n).collect() };

    let mut offsets = Vec::with_capacity(cosets.len());
    let mut blocks = Vec::with_capacity(cosets.len());
    let mut bases = Vec::with_capacity(cosets.len());
    let mut off = 0;
    for coset in &cosets {
        offsets.push(off);
        off += coset.len();
        if coset.representative() == 0 {
            blocks.push(DiagonalBlock::Unit);
            bases.push(Basis::new(vec![Element::ONE])?);
            continue;
        }
        let CosetPoints { points, circulant } = points_for(coset)?;
        let d = coset.len();
        if points.len() != d {
            return Err(Error::ShapeMismatch { expected: d, found: points.len() });
        }
        let block = if circulant {
            DiagonalBlock::Circulant(crate::structure::conjugates(points[0], d, ctx))
        } else {
            let mut m = ElementMatrix::zeros(d, d);
            for (t, &y) in points.iter().enumerate() {
                let mut p = y;
                for j in 0..d {
                    m.set(t, j, p);
                    p = ctx.square(p);
                }
            }
            DiagonalBlock::Dense(m)
        };
        blocks.push(block);
        bases.push(Basis::new(points)?);
    }

    let mut binary = BinaryMatrix::zeros(n, n);
    for (r, &i) in out_perm.iter().enumerate() {
        for (k, coset) in cosets.iter().enumerate() {
            let x = ctx.element_of_log(((i * coset.representative()) % n) as i64);
            let coords = bases[k].coordinates(x)?;
            binary.set_bits(r, offsets[k], coset.len(), coords);
        }
    }

    Ok(FactoredTransform { ctx, algorithm, cosets, offsets, in_perm, out_perm, grouped_output, binary, blocks })
}

/// Number of ones in the `A_e` that [`build_linearized`] would produce, found
/// one coset column block at a time without storing the matrix.
pub(crate) fn linearized_weight(
    ctx: &FieldContext,
    partition: &CosetPartition,
    mut points_for: impl FnMut(&Coset) -> Result<CosetPoints>,
) -> Result<u64> {
    let n = ctx.n();
    let exp = ctx.exp_table();
    let mut weight = 0u64;
    let mut cached: Option<(Vec<Element>, CoordinateTable)> = None;
    for coset in partition.cosets() {
        let s = coset.representative();
        if s == 0 {
            weight += n as u64;
            continue;
        }
        let CosetPoints { points, .. } = points_for(coset)?;
        if cached.as_ref().map_or(true, |(p, _)| *p != points) {
            let table = CoordinateTable::new(&Basis::new(points.clone())?, ctx);
            cached = Some((points, table));
        }
        let table = &cached.as_ref().expect("just filled").1;
        let mut e = 0;
        for _ in 0..n {
            let x = exp[e];
            weight += table.get(x).ok_or(Error::NotInSpan { value: x.value() })?.count_ones() as u64;
            e += s;
            if e >= n {
                e -= n;
            }
        }
    }
    Ok(weight)
}

impl<'a> FactoredTransform<'a> {
    pub fn ctx(&self) -> &'a FieldContext {
        self.ctx
    }

    pub fn algorithm(&self) -> Algorithm {
        self.algorithm
    }

    /// Input cosets in block order, each listed from its representative.
    pub fn cosets(&self) -> &[Coset] {
        &self.cosets
    }

    /// First column of each block.
    pub fn block_offsets(&self) -> &[usize] {
        &self.offsets
    }

    /// `f_e[p] = f[in_perm[p]]`.
    pub fn in_perm(&self) -> &[usize] {
        &self.in_perm
    }

    /// `F[out_perm[p]] = F_e[p]`.
    pub fn out_perm(&self) -> &[usize] {
        &self.out_perm
    }

    /// Whether `F_e` is grouped by cosets (otherwise it is in natural order).
    pub fn grouped_output(&self) -> bool {
        self.grouped_output
    }

    /// The binary matrix `A_e`.
    pub fn binary(&self) -> &BinaryMatrix {
        &self.binary
    }

    /// The diagonal blocks of `D_e`.
    pub fn blocks(&self) -> &[DiagonalBlock] {
        &self.blocks
    }

    pub fn apply(&self, f: &[Element], opts: &ApplyOptions) -> Result<Transformed> {
        let n = self.ctx.n();
        if f.len() != n {
            return Err(Error::ShapeMismatch { expected: n, found: f.len() });
        }
        let mut counter = OpCounter::new(opts.policy);
        let mut stage1 = Vec::with_capacity(n);
        let mut chunk = Vec::new();
        for (k, block) in self.blocks.iter().enumerate() {
            let off = self.offsets[k];
            chunk.clear();
            chunk.extend(self.in_perm[off..off + block.size()].iter().map(|&i| f[i]));
            stage1.extend(block.apply(&chunk, self.ctx, &mut counter)?);
        }
        let multiply = counter.take();
        let y = apply_binary(&self.binary, &stage1, opts.binary, &mut counter)?;
        let binary = counter.take();
        let mut values = vec![Element::ZERO; n];
        for (r, &i) in self.out_perm.iter().enumerate() {
            values[i] = y[r];
        }
        Ok(Transformed { values, multiply, binary })
    }

    /// `D_e` as a dense block-diagonal matrix.
    pub fn diagonal_matrix(&self) -> ElementMatrix {
        let n = self.ctx.n();
        let mut m = ElementMatrix::zeros(n, n);
        for (k, block) in self.blocks.iter().enumerate() {
            let off = self.offsets[k];
            for r in 0..block.size() {
                for c in 0..block.size() {
                    m.set(off + r, off + c, block.get(r, c));
                }
            }
        }
        m
    }

    /// `W_e = A_e D_e` in the permuted orders of `F_e` and `f_e`.
    pub fn equivalent_matrix(&self) -> ElementMatrix {
        let n = self.ctx.n();
        let ctx = self.ctx;
        let mut w = ElementMatrix::zeros(n, n);
        for r in 0..n {
            for (k, block) in self.blocks.iter().enumerate() {
                let off = self.offsets[k];
                let d = block.size();
                for j in 0..d {
                    let mut acc = Element::ZERO;
                    for t in 0..d {
                        if self.binary.get(r, off + t) {
                            acc = ctx.add(acc, block.get(t, j));
                        }
                    }
                    w.set(r, off + j, acc);
                }
            }
        }
        w
    }

    /// The factorization in natural order; equals `W = (α^{ij})`.
    pub fn materialize(&self) -> ElementMatrix {
        let we = self.equivalent_matrix();
        let n = self.ctx.n();
        let mut m = ElementMatrix::zeros(n, n);
        for r in 0..n {
            for c in 0..n {
                m.set(self.out_perm[r], self.in_perm[c], we.get(r, c));
            }
        }
        m
    }

    /// Products of the diagonal stage on an input with no 0/1 entries.
    pub fn structural_mults(&self) -> u64 {
        self.blocks.iter().map(DiagonalBlock::nontrivial_entries).sum()
    }

    /// Row ranges of `A_e` belonging to each output coset, when the output is grouped.
    fn output_groups(&self) -> Option<Vec<(usize, usize)>> {
        self.grouped_output.then(|| self.cosets.iter().zip(&self.offsets).map(|(c, &o)| (o, c.len())).collect())
    }

    /// `(output coset, input coset)` pairs whose `A_e` sub-block is not a binary
    /// circulant with `row[q + 1] = rotate_right(row[q])`. Empty when every
    /// sub-block is circulant; `None` when the output is not grouped by cosets.
    pub fn circulant_violations(&self) -> Option<Vec<(usize, usize)>> {
        let groups = self.output_groups()?;
        let mut bad = Vec::new();
        for (a, &(r0, dr)) in groups.iter().enumerate() {
            for (b, &(c0, dc)) in groups.iter().enumerate() {
                let ok = (0..dr).all(|q| {
                    let cur = self.binary.bits(r0 + q, c0, dc);
                    let next = self.binary.bits(r0 + (q + 1) % dr, c0, dc);
                    next == rotate_right(cur, dc)
                });
                if !ok {
                    bad.push((a, b));
                }
            }
        }
        Some(bad)
    }

    /// Coarser block-circulant structure of `A_e` over cosets of equal size.
    /// Reported only; nothing relies on it.
    pub fn block_circulant_report(&self) -> Option<Vec<BlockCirculantGroup>> {
        let groups = self.output_groups()?;
        let mut sizes: Vec<usize> = self.cosets.iter().filter(|c| c.representative() != 0).map(Coset::len).collect();
        sizes.sort_unstable();
        sizes.dedup();
        let mut out = Vec::new();
        for d in sizes {
            let members: Vec<usize> = (0..self.cosets.len())
                .filter(|&k| self.cosets[k].len() == d && self.cosets[k].representative() != 0)
                .collect();
            let g = members.len();
            let block = |a: usize, b: usize| {
                let (r0, _) = groups[members[a]];
                let (c0, _) = groups[members[b]];
                (0..d).map(move |q| self.binary.bits(r0 + q, c0, d))
            };
            let is_block_circulant =
                (0..g).all(|a| (0..g).all(|b| block((a + 1) % g, (b + 1) % g).eq(block(a, b))));
            out.push(BlockCirculantGroup { size: d, cosets: members, is_block_circulant });
        }
        Some(out)
    }

    /// Whether every non-unit block of `D_e` is a basis circulant.
    pub fn blocks_are_basis_circulants(&self) -> bool {
        self.blocks.iter().all(|b| matches!(b, DiagonalBlock::Unit) || b.is_basis_circulant(self.ctx))
    }
}
