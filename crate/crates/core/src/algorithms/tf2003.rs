use alloc::vec::Vec;

use super::factored::{build_linearized, linearized_weight, CosetPoints, FactoredTransform};
use super::Algorithm;
use crate::field::FieldContext;
use crate::structure::{cyclotomic_cosets, find_normal_basis, Coset, NormalBasis};
use crate::Result;

/// Normal bases indexed by subfield degree, filled for every coset size.
pub(crate) fn normal_bases(ctx: &FieldContext, sizes: &[usize]) -> Result<Vec<Option<NormalBasis>>> {
    let mut out = alloc::vec![None; ctx.m() as usize + 1];
    for &d in sizes {
        out[d] = Some(find_normal_basis(d as u32, ctx, None)?);
    }
    Ok(out)
}

/// Every block of `D_e` is the basis circulant of the first normal basis of the
/// coset's subfield. Input grouped by cosets, output in natural order.
pub fn build_tf2003(ctx: &FieldContext) -> Result<FactoredTransform<'_>> {
    let cosets = cyclotomic_cosets(ctx.n())?;
    let bases = normal_bases(ctx, &cosets.sizes())?;
    build_linearized(ctx, Algorithm::Tf2003, &cosets, false, normal_points(bases))
}

pub(crate) fn binary_weight(ctx: &FieldContext) -> Result<u64> {
    let cosets = cyclotomic_cosets(ctx.n())?;
    let bases = normal_bases(ctx, &cosets.sizes())?;
    linearized_weight(ctx, &cosets, normal_points(bases))
}

/// Conjugates of the normal basis for the coset's subfield, as a circulant block.
pub(crate) fn normal_points(bases: Vec<Option<NormalBasis>>) -> impl FnMut(&Coset) -> Result<CosetPoints> {
    move |coset| {
        let nb = bases[coset.len()].as_ref().expect("basis for every coset size");
        Ok(CosetPoints { points: nb.conjugates().to_vec(), circulant: true })
    }
}
