use alloc::vec;
use alloc::vec::Vec;

use super::{apply_binary, ApplyOptions, Transformed};
use crate::binmat::BinaryMatrix;
use crate::field::{Element, FieldContext, OpCounter};
use crate::reference::{dense_matvec, ElementMatrix};
use crate::structure::{cyclotomic_cosets, minimal_polynomial, Coset};
use crate::{Error, Result};

/// Remainders modulo every minimal polynomial, then evaluation of each remainder
/// on its coset.
///
/// Row `(k, t)` of the binary matrix `R` gives the coefficient of `x^t` in
/// `f(x) mod M_k(x)`: column `j` is bit `t` of `x^j mod M_k`.
#[derive(Clone, Debug)]
pub struct GoertzelPlan<'a> {
    ctx: &'a FieldContext,
    cosets: Vec<Coset>,
    minimal_polys: Vec<u32>,
    offsets: Vec<usize>,
    remainder: BinaryMatrix,
    eval_blocks: Vec<ElementMatrix>,
    out_perm: Vec<usize>,
}

pub fn build_goertzel(ctx: &FieldContext) -> Result<GoertzelPlan<'_>> {
    let n = ctx.n();
    let partition = cyclotomic_cosets(n)?;
    let cosets = partition.cosets().to_vec();
    let mut minimal_polys = Vec::with_capacity(cosets.len());
    let mut offsets = Vec::with_capacity(cosets.len());
    let mut eval_blocks = Vec::with_capacity(cosets.len());
    let mut remainder = BinaryMatrix::zeros(n, n);
    let mut off = 0;
    for coset in &cosets {
        let d = coset.len();
        let poly = minimal_polynomial(coset, ctx)?;
        // x^j mod M, walking j upward.
        let mut rem: u32 = 1;
        for j in 0..n {
            for t in 0..d {
                if rem >> t & 1 == 1 {
                    remainder.set(off + t, j, true);
                }
            }
            rem <<= 1;
            if rem >> d & 1 == 1 {
                rem ^= poly;
            }
        }
        eval_blocks.push(ElementMatrix::from_fn(d, d, |r, t| {
            ctx.element_of_log((coset.elements()[r] * t) as i64)
        }));
        minimal_polys.push(poly);
        offsets.push(off);
        off += d;
    }
    Ok(GoertzelPlan { ctx, cosets, minimal_polys, offsets, remainder, eval_blocks, out_perm: partition.ordering() })
}

/// Number of ones in the remainder matrix, by the same recurrence, without storing it.
pub(crate) fn remainder_weight(ctx: &FieldContext) -> Result<u64> {
    let n = ctx.n();
    let mut weight = 0u64;
    for coset in cyclotomic_cosets(n)?.cosets() {
        let d = coset.len();
        let poly = minimal_polynomial(coset, ctx)?;
        let mut rem: u32 = 1;
        for _ in 0..n {
            weight += rem.count_ones() as u64;
            rem <<= 1;
            if rem >> d & 1 == 1 {
                rem ^= poly;
            }
        }
    }
    Ok(weight)
}

impl<'a> GoertzelPlan<'a> {
    pub fn ctx(&self) -> &'a FieldContext {
        self.ctx
    }

    pub fn cosets(&self) -> &[Coset] {
        &self.cosets
    }

    /// `M_k` as GF(2) bitmasks.
    pub fn minimal_polynomials(&self) -> &[u32] {
        &self.minimal_polys
    }

    /// The binary matrix `R` (rows stacked coset by coset, `t` ascending).
    pub fn remainder_matrix(&self) -> &BinaryMatrix {
        &self.remainder
    }

    /// Per coset, the `d × d` matrix `[(α^i)^t]` with `i` over the coset.
    pub fn eval_blocks(&self) -> &[ElementMatrix] {
        &self.eval_blocks
    }

    /// Output order: `F_e[p] = F[out_perm[p]]`.
    pub fn out_perm(&self) -> &[usize] {
        &self.out_perm
    }

    /// Remainder coefficients `r_k` (low degree first) of `f` modulo each `M_k`.
    pub fn remainders(&self, f: &[Element]) -> Result<Vec<Vec<Element>>> {
        let r = self.stacked_remainders(f, &ApplyOptions::default(), &mut OpCounter::off())?;
        Ok(self.offsets.iter().zip(&self.cosets).map(|(&o, c)| r[o..o + c.len()].to_vec()).collect())
    }

    fn stacked_remainders(&self, f: &[Element], opts: &ApplyOptions, counter: &mut OpCounter) -> Result<Vec<Element>> {
        let n = self.ctx.n();
        if f.len() != n {
            return Err(Error::ShapeMismatch { expected: n, found: f.len() });
        }
        apply_binary(&self.remainder, f, opts.binary, counter)
    }

    pub fn apply(&self, f: &[Element], opts: &ApplyOptions) -> Result<Transformed> {
        let mut counter = OpCounter::new(opts.policy);
        let r = self.stacked_remainders(f, opts, &mut counter)?;
        let binary = counter.take();
        let mut values = vec![Element::ZERO; self.ctx.n()];
        for (k, block) in self.eval_blocks.iter().enumerate() {
            let off = self.offsets[k];
            let d = block.rows();
            let out = dense_matvec(block, &r[off..off + d], self.ctx, &mut counter)?;
            for (p, v) in out.into_iter().enumerate() {
                values[self.out_perm[off + p]] = v;
            }
        }
        let multiply = counter.take();
        Ok(Transformed { values, multiply, binary })
    }

    /// The product `blockdiag(eval) · R` in natural order.
    pub fn materialize(&self) -> ElementMatrix {
        let n = self.ctx.n();
        let ctx = self.ctx;
        let mut m = ElementMatrix::zeros(n, n);
        for (k, block) in self.eval_blocks.iter().enumerate() {
            let off = self.offsets[k];
            let d = block.rows();
            for p in 0..d {
                for j in 0..n {
                    let mut acc = Element::ZERO;
                    for t in 0..d {
                        if self.remainder.get(off + t, j) {
                            acc = ctx.add(acc, block.get(p, t));
                        }
                    }
                    m.set(self.out_perm[off + p], j, acc);
                }
            }
        }
        m
    }

    pub fn structural_mults(&self) -> u64 {
        self.eval_blocks.iter().map(|b| b.nontrivial_entries() as u64).sum()
    }
}
