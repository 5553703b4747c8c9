use super::factored::{build_linearized, linearized_weight, CosetPoints, FactoredTransform};
use super::Algorithm;
use crate::field::FieldContext;
use crate::structure::{cyclotomic_cosets, polynomial_basis, Coset};
use crate::Result;

/// Linearized decomposition evaluated at the polynomial basis of each subfield.
///
/// For a coset of size `d` the points are `(1, ω, …, ω^{d-1})` with `ω` the
/// generator of GF(2^d); for `d = m` this is the standard basis
/// `(1, α, …, α^{m-1})`. Input grouped by cosets, output in natural order.
pub fn build_ft2002(ctx: &FieldContext) -> Result<FactoredTransform<'_>> {
    let cosets = cyclotomic_cosets(ctx.n())?;
    build_linearized(ctx, Algorithm::Ft2002, &cosets, false, points(ctx))
}

pub(crate) fn binary_weight(ctx: &FieldContext) -> Result<u64> {
    linearized_weight(ctx, &cyclotomic_cosets(ctx.n())?, points(ctx))
}

fn points(ctx: &FieldContext) -> impl FnMut(&Coset) -> Result<CosetPoints> + '_ {
    |coset| {
        let basis = polynomial_basis(coset.len() as u32, ctx)?;
        Ok(CosetPoints { points: basis.elements().to_vec(), circulant: false })
    }
}
