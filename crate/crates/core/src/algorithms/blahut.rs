use alloc::vec::Vec;

use super::factored::{build_linearized, linearized_weight, CosetPoints, FactoredTransform};
use super::{Algorithm, ApplyOptions, Transformed};
use crate::binmat::BinaryMatrix;
use crate::field::FieldContext;
use crate::reference::ElementMatrix;
use crate::structure::{cyclotomic_cosets, Coset};
use crate::Result;

/// Coset split of `f`: `F = 1·f_0 + Σ_k B_k V_k f|_k`.
///
/// For a coset with representative `s` and members `c_j = s 2^j`,
/// `V_k[t][j] = α^{t c_j}` evaluates the coset part at `α^{t s}`, `t < d`, and
/// row `i` of the binary `B_k` expands `α^{i s}` in the basis `(α^{t s})_{t<d}`.
#[derive(Clone, Debug)]
pub struct BlahutPlan<'a> {
    inner: FactoredTransform<'a>,
}

pub fn build_blahut2008(ctx: &FieldContext) -> Result<BlahutPlan<'_>> {
    let cosets = cyclotomic_cosets(ctx.n())?;
    let inner = build_linearized(ctx, Algorithm::Blahut2008, &cosets, false, points(ctx))?;
    Ok(BlahutPlan { inner })
}

pub(crate) fn binary_weight(ctx: &FieldContext) -> Result<u64> {
    linearized_weight(ctx, &cyclotomic_cosets(ctx.n())?, points(ctx))
}

fn points(ctx: &FieldContext) -> impl FnMut(&Coset) -> Result<CosetPoints> + '_ {
    |coset| {
        let s = coset.representative() as i64;
        let points: Vec<_> = (0..coset.len() as i64).map(|t| ctx.element_of_log(t * s)).collect();
        Ok(CosetPoints { points, circulant: false })
    }
}

impl<'a> BlahutPlan<'a> {
    pub fn cosets(&self) -> &[Coset] {
        self.inner.cosets()
    }

    /// `V_k`; the `1 × 1` unit for the coset `{0}`.
    pub fn vandermonde_block(&self, k: usize) -> ElementMatrix {
        self.inner.blocks()[k].to_matrix()
    }

    /// `B_k`, an `n × d` binary matrix; the all-ones column for the coset `{0}`.
    pub fn expansion(&self, k: usize) -> BinaryMatrix {
        let off = self.inner.block_offsets()[k];
        let d = self.inner.cosets()[k].len();
        self.inner.binary().block(0..self.inner.ctx().n(), off..off + d)
    }

    /// The same computation in `A_e D_e` form, with `A_e = [1 | B_1 | … | B_l]`.
    pub fn factored(&self) -> &FactoredTransform<'a> {
        &self.inner
    }

    pub fn apply(&self, f: &[crate::Element], opts: &ApplyOptions) -> Result<Transformed> {
        self.inner.apply(f, opts)
    }

    pub fn materialize(&self) -> ElementMatrix {
        self.inner.materialize()
    }
}
