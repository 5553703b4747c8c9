//! GF(2^m) arithmetic in the polynomial (standard) basis.
//!
//! Elements are stored as bitmasks of their coordinates in `(1, α, …, α^{m-1})`.
//! Multiplication goes through exp/log tables; [`FieldContext::mul_reduce`] is a
//! shift-and-reduce implementation kept for cross-checking the tables.
//!
//! Operation counting is owned by the caller through [`OpCounter`]: a
//! [`FieldContext`] is immutable and can be shared between threads.

use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, AddAssign};

use crate::{Error, Result};

pub const MIN_DEGREE: u32 = 2;
pub const MAX_DEGREE: u32 = 16;

/// Default primitive polynomials for `m = 2..=16`, bit `i` = coefficient of `x^i`.
///
/// The `m = 3` entry is `x^3 + x + 1`.
pub const DEFAULT_PRIMITIVE_POLYS: [u32; 15] = [
    0x7,     // x^2 + x + 1
    0xb,     // x^3 + x + 1
    0x13,    // x^4 + x + 1
    0x25,    // x^5 + x^2 + 1
    0x43,    // x^6 + x + 1
    0x83,    // x^7 + x + 1
    0x11d,   // x^8 + x^4 + x^3 + x^2 + 1
    0x211,   // x^9 + x^4 + 1
    0x409,   // x^10 + x^3 + 1
    0x805,   // x^11 + x^2 + 1
    0x1053,  // x^12 + x^6 + x^4 + x + 1
    0x201b,  // x^13 + x^4 + x^3 + x + 1
    0x4443,  // x^14 + x^10 + x^6 + x + 1
    0x8003,  // x^15 + x + 1
    0x1100b, // x^16 + x^12 + x^3 + x + 1
];

/// A field element: coordinates in the standard basis packed into a bitmask.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Element(u16);

impl Element {
    pub const ZERO: Element = Element(0);
    pub const ONE: Element = Element(1);

    /// Wraps a raw bitmask. No range check; see [`FieldContext::element`].
    #[inline]
    pub const fn new(value: u16) -> Self {
        Element(value)
    }

    #[inline]
    pub const fn value(self) -> u16 {
        self.0
    }

    #[inline]
    pub const fn is_zero(self) -> bool {
        self.0 == 0
    }

    /// `true` for the constants 0 and 1, whose products are free.
    #[inline]
    pub const fn is_trivial(self) -> bool {
        self.0 <= 1
    }
}

impl fmt::Display for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// Extension degree plus the primitive polynomial defining the field.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct FieldSpec {
    m: u32,
    poly: u32,
}

impl FieldSpec {
    /// Checks the shape of `poly` (degree exactly `m`, constant term 1).
    /// Primitivity is checked when the tables are built.
    pub fn new(m: u32, poly: u32) -> Result<Self> {
        if !(MIN_DEGREE..=MAX_DEGREE).contains(&m) {
            return Err(Error::DegreeOutOfRange(m));
        }
        if poly >> m != 1 || poly & 1 == 0 {
            return Err(Error::InvalidPolynomial { m, poly });
        }
        Ok(FieldSpec { m, poly })
    }

    /// The embedded default polynomial for degree `m`.
    pub fn with_degree(m: u32) -> Result<Self> {
        if !(MIN_DEGREE..=MAX_DEGREE).contains(&m) {
            return Err(Error::DegreeOutOfRange(m));
        }
        FieldSpec::new(m, DEFAULT_PRIMITIVE_POLYS[(m - MIN_DEGREE) as usize])
    }

    pub fn m(&self) -> u32 {
        self.m
    }

    pub fn poly(&self) -> u32 {
        self.poly
    }
}

/// Immutable arithmetic context for GF(2^m) with its exp/log tables.
#[derive(Clone, Debug)]
pub struct FieldContext {
    spec: FieldSpec,
    n: usize,
    // exp[i] = α^i for i in [0, 2n), doubled so log sums need no reduction.
    exp: Vec<Element>,
    // log[0] is unused.
    log: Vec<u32>,
}

impl FieldContext {
    /// Builds the tables by repeated multiplication by `α`, rejecting
    /// polynomials whose root has order below `2^m - 1`.
    pub fn new(spec: FieldSpec) -> Result<Self> {
        let m = spec.m;
        let size = 1usize << m;
        let n = size - 1;
        let mut exp = Vec::with_capacity(2 * n);
        let mut log = alloc::vec![0u32; size];
        let mut x: u32 = 1;
        for i in 0..n {
            if i > 0 && x == 1 {
                return Err(Error::NotPrimitive { m, poly: spec.poly, order: i as u32 });
            }
            exp.push(Element(x as u16));
            log[x as usize] = i as u32;
            x <<= 1;
            if x >> m & 1 == 1 {
                x ^= spec.poly;
            }
        }
        // x is a unit of order at least n in a group of order at most n.
        debug_assert_eq!(x, 1);
        exp.extend_from_within(0..n);
        Ok(FieldContext { spec, n, exp, log })
    }

    /// Field of degree `m` with the default primitive polynomial.
    pub fn with_degree(m: u32) -> Result<Self> {
        FieldContext::new(FieldSpec::with_degree(m)?)
    }

    pub fn spec(&self) -> FieldSpec {
        self.spec
    }

    pub fn m(&self) -> u32 {
        self.spec.m
    }

    /// Transform length `2^m - 1`, the order of `α`.
    pub fn n(&self) -> usize {
        self.n
    }

    /// Number of field elements, `2^m`.
    pub fn order(&self) -> usize {
        self.n + 1
    }

    /// `exp_table()[i] = α^i` for `i < n`.
    pub fn exp_table(&self) -> &[Element] {
        &self.exp[..self.n]
    }

    /// Validating constructor.
    pub fn element(&self, value: u32) -> Result<Element> {
        if value as usize > self.n {
            return Err(Error::ElementOutOfRange { value, m: self.spec.m });
        }
        Ok(Element(value as u16))
    }

    pub fn elements_from_values(&self, values: &[u32]) -> Result<Vec<Element>> {
        values.iter().map(|&v| self.element(v)).collect()
    }

    pub fn alpha(&self) -> Element {
        self.exp[1 % self.n]
    }

    #[inline]
    pub fn add(&self, a: Element, b: Element) -> Element {
        Element(a.0 ^ b.0)
    }

    #[inline]
    pub fn mul(&self, a: Element, b: Element) -> Element {
        if a.0 == 0 || b.0 == 0 {
            return Element::ZERO;
        }
        self.exp[(self.log[a.0 as usize] + self.log[b.0 as usize]) as usize]
    }

    /// Carryless multiply followed by reduction modulo the primitive polynomial.
    pub fn mul_reduce(&self, a: Element, b: Element) -> Element {
        let m = self.spec.m;
        let (a, b) = (a.0 as u32, b.0 as u32);
        let mut acc: u32 = 0;
        for i in 0..m {
            if b >> i & 1 == 1 {
                acc ^= a << i;
            }
        }
        for bit in (m..2 * m).rev() {
            if acc >> bit & 1 == 1 {
                acc ^= self.spec.poly << (bit - m);
            }
        }
        Element(acc as u16)
    }

    #[inline]
    pub fn square(&self, a: Element) -> Element {
        self.mul(a, a)
    }

    /// `a^e` for any integer exponent; `0^e = 0` except `0^0 = 1`.
    pub fn pow(&self, a: Element, e: i64) -> Element {
        if a.is_zero() {
            return if e == 0 { Element::ONE } else { Element::ZERO };
        }
        let l = self.log[a.0 as usize] as i64;
        self.element_of_log(l * e.rem_euclid(self.n as i64))
    }

    /// `α^i` with `i` reduced modulo `n`.
    #[inline]
    pub fn element_of_log(&self, i: i64) -> Element {
        self.exp[i.rem_euclid(self.n as i64) as usize]
    }

    pub fn discrete_log(&self, a: Element) -> Result<u32> {
        if a.is_zero() {
            return Err(Error::ZeroLogarithm);
        }
        Ok(self.log[a.0 as usize])
    }

    pub fn inverse(&self, a: Element) -> Result<Element> {
        let l = self.discrete_log(a)? as i64;
        Ok(self.element_of_log(-l))
    }
}

/// Which multiplications an [`OpCounter`] records.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum CountPolicy {
    /// Counting disarmed.
    Off,
    /// Products with an operand equal to 0 or 1 are free.
    #[default]
    SkipTrivial,
    /// Every call counts.
    All,
}

/// Exact multiplication and addition tallies.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct OpCount {
    pub mults: u64,
    pub adds: u64,
}

impl Add for OpCount {
    type Output = OpCount;

    fn add(self, rhs: OpCount) -> OpCount {
        OpCount { mults: self.mults + rhs.mults, adds: self.adds + rhs.adds }
    }
}

impl AddAssign for OpCount {
    fn add_assign(&mut self, rhs: OpCount) {
        *self = *self + rhs;
    }
}

/// Counting wrapper around the field operations, one per unit of work.
#[derive(Clone, Debug, Default)]
pub struct OpCounter {
    policy: CountPolicy,
    count: OpCount,
}

impl OpCounter {
    pub fn new(policy: CountPolicy) -> Self {
        OpCounter { policy, count: OpCount::default() }
    }

    pub fn off() -> Self {
        OpCounter::new(CountPolicy::Off)
    }

    pub fn policy(&self) -> CountPolicy {
        self.policy
    }

    pub fn count(&self) -> OpCount {
        self.count
    }

    /// Returns the tally accumulated so far and resets it.
    pub fn take(&mut self) -> OpCount {
        core::mem::take(&mut self.count)
    }

    #[inline]
    pub fn add(&mut self, a: Element, b: Element) -> Element {
        if self.policy != CountPolicy::Off {
            self.count.adds += 1;
        }
        Element(a.0 ^ b.0)
    }

    #[inline]
    pub fn mul(&mut self, ctx: &FieldContext, a: Element, b: Element) -> Element {
        match self.policy {
            CountPolicy::Off => {}
            CountPolicy::SkipTrivial => {
                if !a.is_trivial() && !b.is_trivial() {
                    self.count.mults += 1;
                }
            }
            CountPolicy::All => self.count.mults += 1,
        }
        ctx.mul(a, b)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn values(xs: &[Element]) -> Vec<u16> {
        xs.iter().map(|e| e.value()).collect()
    }

    #[test]
    fn gf8_exp_table() {
        let ctx = FieldContext::new(FieldSpec::new(3, 0b1011).unwrap()).unwrap();
        assert_eq!(values(ctx.exp_table()), vec![1, 2, 4, 3, 6, 7, 5]);
        assert_eq!(ctx.n(), 7);
    }

    #[test]
    fn gf4_exp_table() {
        let ctx = FieldContext::new(FieldSpec::new(2, 0b111).unwrap()).unwrap();
        assert_eq!(ctx.n(), 3);
        assert_eq!(values(ctx.exp_table()), vec![1, 2, 3]);
    }

    #[test]
    fn rejects_reducible_polynomial() {
        // (x + 1)(x^2 + 1)
        let err = FieldContext::new(FieldSpec::new(3, 0b1111).unwrap()).unwrap_err();
        assert!(matches!(err, Error::NotPrimitive { .. }));
        assert!(alloc::format!("{err}").contains("not primitive"));
        // x^4 + x^3 + x^2 + x + 1 is irreducible but α has order 5
        let err = FieldContext::new(FieldSpec::new(4, 0b11111).unwrap()).unwrap_err();
        assert_eq!(err, Error::NotPrimitive { m: 4, poly: 0b11111, order: 5 });
    }

    #[test]
    fn rejects_bad_shapes() {
        assert_eq!(FieldSpec::with_degree(1), Err(Error::DegreeOutOfRange(1)));
        assert_eq!(FieldSpec::with_degree(17), Err(Error::DegreeOutOfRange(17)));
        assert!(matches!(FieldSpec::new(3, 0b111), Err(Error::InvalidPolynomial { .. })));
        assert!(matches!(FieldSpec::new(3, 0b1010), Err(Error::InvalidPolynomial { .. })));
    }

    #[test]
    fn all_defaults_are_primitive() {
        for m in MIN_DEGREE..=MAX_DEGREE {
            let ctx = FieldContext::with_degree(m).unwrap();
            assert_eq!(ctx.n(), (1usize << m) - 1);
            assert_eq!(ctx.spec().poly(), DEFAULT_PRIMITIVE_POLYS[(m - 2) as usize]);
        }
        assert_eq!(FieldSpec::with_degree(3).unwrap().poly(), 0b1011);
    }

    #[test]
    fn add_examples() {
        let ctx = FieldContext::with_degree(3).unwrap();
        assert_eq!(ctx.add(Element::new(3), Element::new(5)), Element::new(6));
        for v in 0..8 {
            let x = Element::new(v);
            assert_eq!(ctx.add(x, x), Element::ZERO);
            assert_eq!(ctx.add(Element::ZERO, x), x);
        }
    }

    #[test]
    fn mul_examples() {
        let ctx = FieldContext::with_degree(3).unwrap();
        assert_eq!(ctx.mul(Element::new(2), Element::new(4)), Element::new(3));
        assert_eq!(ctx.mul(Element::new(7), Element::new(7)), Element::new(3));
        for v in 0..8 {
            assert_eq!(ctx.mul(Element::new(v), Element::ZERO), Element::ZERO);
        }
    }

    #[test]
    fn log_examples() {
        let ctx = FieldContext::with_degree(3).unwrap();
        assert_eq!(ctx.element_of_log(3), Element::new(3));
        assert_eq!(ctx.discrete_log(Element::ONE), Ok(0));
        assert_eq!(ctx.element_of_log(10), ctx.element_of_log(3));
        assert_eq!(ctx.element_of_log(-1), Element::new(5));
        assert_eq!(ctx.discrete_log(Element::ZERO), Err(Error::ZeroLogarithm));
    }

    #[test]
    fn element_validation() {
        let ctx = FieldContext::with_degree(3).unwrap();
        assert!(ctx.element(7).is_ok());
        assert_eq!(ctx.element(8), Err(Error::ElementOutOfRange { value: 8, m: 3 }));
    }

    #[test]
    fn exhaustive_small_fields() {
        for m in 2..=8 {
            let ctx = FieldContext::with_degree(m).unwrap();
            let n = ctx.n() as u32;
            for (i, &e) in ctx.exp_table().iter().enumerate() {
                assert_eq!(ctx.discrete_log(e).unwrap() as usize, i);
            }
            let mut seen = vec![false; ctx.order()];
            for &e in ctx.exp_table() {
                assert!(!seen[e.value() as usize]);
                seen[e.value() as usize] = true;
            }
            assert!(!seen[0]);
            for a in 0..=n as u16 {
                for b in 0..=n as u16 {
                    let (x, y) = (Element::new(a), Element::new(b));
                    let p = ctx.mul(x, y);
                    assert_eq!(p, ctx.mul_reduce(x, y));
                    if a != 0 && b != 0 {
                        let l = ctx.discrete_log(p).unwrap();
                        let s = ctx.discrete_log(x).unwrap() + ctx.discrete_log(y).unwrap();
                        assert_eq!(l, s % n);
                    }
                    let s = ctx.add(x, y);
                    assert_eq!(ctx.square(s), ctx.add(ctx.square(x), ctx.square(y)));
                }
            }
        }
    }

    #[test]
    fn distributivity_spot_checks() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for m in 2..=16 {
            let ctx = FieldContext::with_degree(m).unwrap();
            let top = ctx.order() as u32;
            let mut pick = || Element::new(rng.random_range(0..top) as u16);
            for _ in 0..1000 {
                let (a, b, c) = (pick(), pick(), pick());
                assert_eq!(ctx.add(ctx.add(a, b), b), a);
                let lhs = ctx.mul(a, ctx.add(b, c));
                assert_eq!(lhs, ctx.add(ctx.mul(a, b), ctx.mul(a, c)));
                assert_eq!(ctx.mul(a, b), ctx.mul_reduce(a, b));
            }
        }
    }

    #[test]
    fn pow_and_inverse() {
        let ctx = FieldContext::with_degree(5).unwrap();
        let a = ctx.element_of_log(7);
        assert_eq!(ctx.pow(a, 3), ctx.element_of_log(21));
        assert_eq!(ctx.pow(a, -1), ctx.inverse(a).unwrap());
        assert_eq!(ctx.mul(a, ctx.inverse(a).unwrap()), Element::ONE);
        assert_eq!(ctx.pow(Element::ZERO, 0), Element::ONE);
        assert_eq!(ctx.pow(Element::ZERO, 4), Element::ZERO);
    }

    #[test]
    fn counting_policies() {
        let ctx = FieldContext::with_degree(4).unwrap();
        let (a, b) = (Element::new(6), Element::new(9));
        let mut skip = OpCounter::default();
        let mut all = OpCounter::new(CountPolicy::All);
        let mut off = OpCounter::off();
        for c in [&mut skip, &mut all, &mut off] {
            c.mul(&ctx, a, b);
            c.mul(&ctx, a, Element::ONE);
            c.mul(&ctx, Element::ZERO, b);
            c.add(a, b);
        }
        assert_eq!(skip.count(), OpCount { mults: 1, adds: 1 });
        assert_eq!(all.count(), OpCount { mults: 3, adds: 1 });
        assert_eq!(off.count(), OpCount::default());
        assert_eq!(skip.take(), OpCount { mults: 1, adds: 1 });
        assert_eq!(skip.count(), OpCount::default());
    }
}
