//! Closed-form operation bounds for transforms of length `n = 2^m - 1`.

use crate::binmat::FourRussiansPlan;
use crate::structure::CosetPartition;

/// `n · log₂(n + 1)`: the multiplication budget, exact for `n = 2^m - 1`.
pub fn mult_bound(n: usize) -> u64 {
    let m = (n + 1).trailing_zeros() as u64;
    debug_assert!((n + 1).is_power_of_two());
    n as u64 * m
}

/// `2 n² / log₂ n`, the addition bound for the binary stage.
pub fn add_bound(n: usize) -> f64 {
    let n = n as f64;
    2.0 * n * n / log2(n)
}

/// `Σ d_k²` over the cosets other than `{0}`: the multiplications of one
/// direct `d × d` circulant product per coset.
pub fn circulant_mults(cosets: &CosetPartition) -> u64 {
    cosets.cosets().iter().filter(|c| c.representative() != 0).map(|c| (c.len() * c.len()) as u64).sum()
}

/// Additions of the same circulant products, `Σ d_k (d_k - 1)`.
pub fn circulant_adds(cosets: &CosetPartition) -> u64 {
    cosets.cosets().iter().filter(|c| c.representative() != 0).map(|c| (c.len() * (c.len() - 1)) as u64).sum()
}

/// Four Russians additions for an `n × n` binary matrix with the default block width.
pub fn four_russians_adds(n: usize) -> u64 {
    FourRussiansPlan::for_cols(n).predicted_adds(n)
}

// log2 without std: exponent split plus a short atanh series on the mantissa.
fn log2(x: f64) -> f64 {
    if x <= 0.0 {
        return f64::NAN;
    }
    let bits = x.to_bits();
    let exp = ((bits >> 52) & 0x7ff) as i64 - 1023;
    let mant = f64::from_bits((bits & ((1u64 << 52) - 1)) | (1023u64 << 52));
    // mant in [1, 2); ln(mant) = 2 atanh((mant - 1) / (mant + 1))
    let z = (mant - 1.0) / (mant + 1.0);
    let z2 = z * z;
    let mut term = z;
    let mut sum = 0.0;
    let mut k = 1.0;
    while k < 80.0 {
        sum += term / k;
        term *= z2;
        k += 2.0;
    }
    exp as f64 + 2.0 * sum / core::f64::consts::LN_2
}
