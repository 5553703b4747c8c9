//! Plans for the semifast transforms.
//!
//! Every plan is built once from a [`FieldContext`] and then applied to any
//! number of input vectors. Each application returns the transform together
//! with separate tallies for the multiplicative stage and the binary
//! (addition-only) stage.

use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use crate::binmat::{binmatvec_four_russians, binmatvec_naive, BinaryMatrix, FourRussiansPlan};
use crate::field::{CountPolicy, Element, FieldContext, OpCount, OpCounter};
use crate::reference::ElementMatrix;
use crate::structure::CosetPartition;
use crate::Result;

mod blahut;
mod factored;
mod fed2006;
mod ft2002;
mod goertzel;
mod tf2003;

pub use blahut::{build_blahut2008, BlahutPlan};
pub use factored::{circulant_matvec, BlockCirculantGroup, DiagonalBlock, FactoredTransform};
pub use fed2006::{build_fed2006, Fed2006Variant};
pub use ft2002::build_ft2002;
pub use goertzel::{build_goertzel, GoertzelPlan};
pub use tf2003::build_tf2003;

/// Algorithm identifiers.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Algorithm {
    Goertzel,
    Blahut2008,
    Ft2002,
    Tf2003,
    Fed2006A,
    Fed2006B,
}

impl Algorithm {
    pub const ALL: [Algorithm; 6] = [
        Algorithm::Goertzel,
        Algorithm::Blahut2008,
        Algorithm::Ft2002,
        Algorithm::Tf2003,
        Algorithm::Fed2006A,
        Algorithm::Fed2006B,
    ];

    pub fn tag(self) -> &'static str {
        match self {
            Algorithm::Goertzel => "goertzel",
            Algorithm::Blahut2008 => "blahut2008",
            Algorithm::Ft2002 => "ft2002",
            Algorithm::Tf2003 => "tf2003",
            Algorithm::Fed2006A => "fed2006a",
            Algorithm::Fed2006B => "fed2006b",
        }
    }

    /// Algorithms that factor as `A_e D_e` with a materialized binary `A_e`.
    pub fn is_factored(self) -> bool {
        !matches!(self, Algorithm::Goertzel | Algorithm::Blahut2008)
    }

    /// Operations of the multiplicative stage on a generic input, from the
    /// coset sizes alone. Circulant blocks have no unit entries; the
    /// Vandermonde-type blocks of the other plans have one row or column of
    /// ones per coset.
    pub fn stage1_counts(self, cosets: &CosetPartition) -> OpCount {
        let circulant = matches!(self, Algorithm::Tf2003 | Algorithm::Fed2006A | Algorithm::Fed2006B);
        let mut total = OpCount::default();
        for d in cosets.cosets().iter().filter(|c| c.representative() != 0).map(|c| c.len() as u64) {
            total.mults += if circulant { d * d } else { d * (d - 1) };
            total.adds += d * (d - 1);
        }
        total
    }
}

/// Additions of the naive binary stage, `Σ_rows (weight - 1)`, streamed
/// without building the plan. No row of the binary matrix is zero, so this is
/// the total weight minus `n`.
pub fn naive_binary_adds(algorithm: Algorithm, ctx: &FieldContext) -> Result<u64> {
    let weight = match algorithm {
        Algorithm::Goertzel => goertzel::remainder_weight(ctx)?,
        Algorithm::Blahut2008 => blahut::binary_weight(ctx)?,
        Algorithm::Ft2002 => ft2002::binary_weight(ctx)?,
        Algorithm::Tf2003 => tf2003::binary_weight(ctx)?,
        Algorithm::Fed2006A => fed2006::binary_weight(ctx, Fed2006Variant::A)?,
        Algorithm::Fed2006B => fed2006::binary_weight(ctx, Fed2006Variant::B)?,
    };
    Ok(weight - ctx.n() as u64)
}

impl fmt::Display for Algorithm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

/// Unknown algorithm tag.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UnknownAlgorithm;

impl fmt::Display for UnknownAlgorithm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("unknown algorithm")
    }
}

impl FromStr for Algorithm {
    type Err = UnknownAlgorithm;

    fn from_str(s: &str) -> core::result::Result<Self, Self::Err> {
        let s = s.trim().to_ascii_lowercase();
        Ok(match s.as_str() {
            "goertzel" => Algorithm::Goertzel,
            "blahut2008" | "blahut" => Algorithm::Blahut2008,
            "ft2002" => Algorithm::Ft2002,
            "tf2003" => Algorithm::Tf2003,
            "fed2006a" | "fed2006-a" => Algorithm::Fed2006A,
            "fed2006b" | "fed2006-b" => Algorithm::Fed2006B,
            _ => return Err(UnknownAlgorithm),
        })
    }
}

/// How the binary stage is evaluated.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum BinaryMethod {
    #[default]
    Naive,
    /// Four Russians with the given block width, or `⌊log₂ cols⌋`.
    FourRussians(Option<usize>),
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct ApplyOptions {
    pub binary: BinaryMethod,
    pub policy: CountPolicy,
}

impl ApplyOptions {
    pub fn four_russians() -> Self {
        ApplyOptions { binary: BinaryMethod::FourRussians(None), ..Default::default() }
    }
}

/// A transform result with per-stage operation counts.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Transformed {
    pub values: Vec<Element>,
    /// Stage with field multiplications (circulant or Vandermonde blocks).
    pub multiply: OpCount,
    /// Binary matrix stage, additions only.
    pub binary: OpCount,
}

pub(crate) fn apply_binary(
    a: &BinaryMatrix,
    v: &[Element],
    method: BinaryMethod,
    counter: &mut OpCounter,
) -> Result<Vec<Element>> {
    match method {
        BinaryMethod::Naive => binmatvec_naive(a, v, counter),
        BinaryMethod::FourRussians(block) => {
            let plan = match block {
                Some(t) => FourRussiansPlan::new(a.cols(), t)?,
                None => FourRussiansPlan::for_cols(a.cols()),
            };
            binmatvec_four_russians(a, v, &plan, counter)
        }
    }
}

/// Any of the built plans.
#[derive(Clone, Debug)]
pub enum Plan<'a> {
    Goertzel(GoertzelPlan<'a>),
    Blahut(BlahutPlan<'a>),
    Factored(FactoredTransform<'a>),
}

impl<'a> Plan<'a> {
    pub fn build(algorithm: Algorithm, ctx: &'a FieldContext) -> Result<Plan<'a>> {
        Ok(match algorithm {
            Algorithm::Goertzel => Plan::Goertzel(build_goertzel(ctx)?),
            Algorithm::Blahut2008 => Plan::Blahut(build_blahut2008(ctx)?),
            Algorithm::Ft2002 => Plan::Factored(build_ft2002(ctx)?),
            Algorithm::Tf2003 => Plan::Factored(build_tf2003(ctx)?),
            Algorithm::Fed2006A => Plan::Factored(build_fed2006(ctx, Fed2006Variant::A)?),
            Algorithm::Fed2006B => Plan::Factored(build_fed2006(ctx, Fed2006Variant::B)?),
        })
    }

    pub fn algorithm(&self) -> Algorithm {
        match self {
            Plan::Goertzel(_) => Algorithm::Goertzel,
            Plan::Blahut(_) => Algorithm::Blahut2008,
            Plan::Factored(t) => t.algorithm(),
        }
    }

    pub fn apply(&self, f: &[Element], opts: &ApplyOptions) -> Result<Transformed> {
        match self {
            Plan::Goertzel(p) => p.apply(f, opts),
            Plan::Blahut(p) => p.apply(f, opts),
            Plan::Factored(p) => p.apply(f, opts),
        }
    }

    /// The plan as one `n × n` matrix in natural index order.
    pub fn materialize(&self) -> ElementMatrix {
        match self {
            Plan::Goertzel(p) => p.materialize(),
            Plan::Blahut(p) => p.materialize(),
            Plan::Factored(p) => p.materialize(),
        }
    }

    /// The `n × n` binary matrix of the addition stage.
    pub fn binary_matrix(&self) -> &BinaryMatrix {
        match self {
            Plan::Goertzel(p) => p.remainder_matrix(),
            Plan::Blahut(p) => p.factored().binary(),
            Plan::Factored(p) => p.binary(),
        }
    }

    /// Multiplications of the multiplicative stage on a generic input (no 0/1 entries).
    pub fn structural_mults(&self) -> u64 {
        match self {
            Plan::Goertzel(p) => p.structural_mults(),
            Plan::Blahut(p) => p.factored().structural_mults(),
            Plan::Factored(p) => p.structural_mults(),
        }
    }

    pub fn ctx(&self) -> &'a FieldContext {
        match self {
            Plan::Goertzel(p) => p.ctx(),
            Plan::Blahut(p) => p.factored().ctx(),
            Plan::Factored(p) => p.ctx(),
        }
    }
}
