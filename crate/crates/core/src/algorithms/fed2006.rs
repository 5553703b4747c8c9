use alloc::vec::Vec;

use super::factored::{build_linearized, linearized_weight, FactoredTransform};
use super::tf2003::{normal_bases, normal_points};
use super::Algorithm;
use crate::field::FieldContext;
use crate::structure::{cyclotomic_cosets, find_normal_basis, CosetPartition, NormalBasis};
use crate::Result;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Fed2006Variant {
    /// First normal basis `β` of each subfield, coset leaders as representatives.
    A,
    /// Shifted basis `γ = β²`; the coset of `log β` is represented by `log γ`.
    B,
}

/// Both input and output grouped by cosets in doubling order, so that every
/// coset-pair sub-block of `A_e` is a binary circulant.
pub fn build_fed2006(ctx: &FieldContext, variant: Fed2006Variant) -> Result<FactoredTransform<'_>> {
    let (algorithm, cosets, bases) = setup(ctx, variant)?;
    build_linearized(ctx, algorithm, &cosets, true, normal_points(bases))
}

pub(crate) fn binary_weight(ctx: &FieldContext, variant: Fed2006Variant) -> Result<u64> {
    let (_, cosets, bases) = setup(ctx, variant)?;
    linearized_weight(ctx, &cosets, normal_points(bases))
}

type Setup = (Algorithm, CosetPartition, Vec<Option<NormalBasis>>);

fn setup(ctx: &FieldContext, variant: Fed2006Variant) -> Result<Setup> {
    let mut cosets = cyclotomic_cosets(ctx.n())?;
    let first = normal_bases(ctx, &cosets.sizes())?;
    let (algorithm, bases): (_, Vec<Option<NormalBasis>>) = match variant {
        Fed2006Variant::A => (Algorithm::Fed2006A, first),
        Fed2006Variant::B => {
            let mut shifted = alloc::vec![None; first.len()];
            for (d, nb) in first.iter().enumerate() {
                let Some(nb) = nb else { continue };
                let beta = nb.generator();
                let gamma = ctx.square(beta);
                let log_beta = ctx.discrete_log(beta)? as usize;
                if log_beta != 0 {
                    cosets.set_representative(ctx.discrete_log(gamma)? as usize)?;
                }
                shifted[d] = Some(find_normal_basis(d as u32, ctx, Some(gamma))?);
            }
            (Algorithm::Fed2006B, shifted)
        }
    };
    Ok((algorithm, cosets, bases))
}
