//! Cyclotomic cosets, minimal polynomials, normal bases and GF(2)-coordinates.

use alloc::vec;
use alloc::vec::Vec;

use crate::field::{Element, FieldContext};
use crate::{Error, Result};

/// One orbit of `i ↦ 2i mod n`, listed in doubling order from its representative.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Coset {
    elements: Vec<usize>,
}

impl Coset {
    /// The doubling orbit of `start` modulo `n`; `start` becomes the representative.
    pub fn orbit(start: usize, n: usize) -> Coset {
        let mut elements = vec![start];
        let mut i = (2 * start) % n.max(1);
        while i != start {
            elements.push(i);
            i = (2 * i) % n;
        }
        Coset { elements }
    }

    pub fn representative(&self) -> usize {
        self.elements[0]
    }

    /// Smallest member.
    pub fn leader(&self) -> usize {
        *self.elements.iter().min().expect("cosets are never empty")
    }

    pub fn elements(&self) -> &[usize] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn contains(&self, i: usize) -> bool {
        self.elements.contains(&i)
    }

    /// Same coset, rotated so that `representative` comes first.
    pub fn with_representative(&self, representative: usize) -> Result<Coset> {
        let pos = self
            .elements
            .iter()
            .position(|&e| e == representative)
            .ok_or(Error::NotInCoset { representative })?;
        let mut elements = self.elements.clone();
        elements.rotate_left(pos);
        Ok(Coset { elements })
    }
}

/// The cyclotomic cosets modulo `n`, ordered by increasing leader.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CosetPartition {
    n: usize,
    cosets: Vec<Coset>,
    coset_of: Vec<usize>,
}

/// Partitions `Z_n` into doubling orbits. Each coset starts at its leader.
pub fn cyclotomic_cosets(n: usize) -> Result<CosetPartition> {
    if n % 2 == 0 {
        return Err(Error::EvenModulus(n));
    }
    let mut coset_of = vec![usize::MAX; n];
    let mut cosets = Vec::new();
    for leader in 0..n {
        if coset_of[leader] != usize::MAX {
            continue;
        }
        let coset = Coset::orbit(leader, n);
        for &e in coset.elements() {
            coset_of[e] = cosets.len();
        }
        cosets.push(coset);
    }
    Ok(CosetPartition { n, cosets, coset_of })
}

impl CosetPartition {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn cosets(&self) -> &[Coset] {
        &self.cosets
    }

    /// Number of cosets, `l`.
    pub fn len(&self) -> usize {
        self.cosets.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cosets.is_empty()
    }

    /// Index of the coset containing residue `i`.
    pub fn coset_of(&self, i: usize) -> usize {
        self.coset_of[i % self.n]
    }

    /// Changes the representative of the coset containing `representative`.
    pub fn set_representative(&mut self, representative: usize) -> Result<()> {
        if representative >= self.n {
            return Err(Error::NotInCoset { representative });
        }
        let k = self.coset_of[representative];
        self.cosets[k] = self.cosets[k].with_representative(representative)?;
        Ok(())
    }

    /// All residues, coset by coset, each coset in doubling order.
    pub fn ordering(&self) -> Vec<usize> {
        self.cosets.iter().flat_map(|c| c.elements().iter().copied()).collect()
    }

    /// Distinct coset sizes in increasing order.
    pub fn sizes(&self) -> Vec<usize> {
        let mut sizes: Vec<usize> = self.cosets.iter().map(Coset::len).collect();
        sizes.sort_unstable();
        sizes.dedup();
        sizes
    }
}

/// `Π_{i ∈ coset} (x - α^i)` as a GF(2) bitmask (bit `t` = coefficient of `x^t`).
pub fn minimal_polynomial(coset: &Coset, ctx: &FieldContext) -> Result<u32> {
    // Coefficients low to high.
    let mut poly = vec![Element::ONE];
    for &i in coset.elements() {
        let root = ctx.element_of_log(i as i64);
        let mut next = vec![Element::ZERO; poly.len() + 1];
        for (t, &c) in poly.iter().enumerate() {
            next[t + 1] = ctx.add(next[t + 1], c);
            next[t] = ctx.add(next[t], ctx.mul(c, root));
        }
        poly = next;
    }
    let mut mask = 0u32;
    for (t, c) in poly.iter().enumerate() {
        match c.value() {
            0 => {}
            1 => mask |= 1 << t,
            _ => return Err(Error::NonBinaryMinimalPolynomial { leader: coset.leader() }),
        }
    }
    Ok(mask)
}

/// An ordered GF(2)-basis of a subspace of GF(2^m), with a precomputed
/// elimination for coordinate expansion.
#[derive(Clone, Debug)]
pub struct Basis {
    elements: Vec<Element>,
    // pivots[b] reduces bit b: (vector with leading bit b, combination of basis indices).
    pivots: [Option<(u16, u32)>; 16],
}

impl Basis {
    pub fn new(elements: Vec<Element>) -> Result<Basis> {
        if elements.len() > 16 {
            return Err(Error::DependentBasis);
        }
        let mut pivots = [None; 16];
        for (j, e) in elements.iter().enumerate() {
            let (mut v, mut c) = (e.value(), 1u32 << j);
            loop {
                if v == 0 {
                    return Err(Error::DependentBasis);
                }
                let lead = 15 - v.leading_zeros() as usize;
                match pivots[lead] {
                    Some((pv, pc)) => {
                        v ^= pv;
                        c ^= pc;
                    }
                    None => {
                        pivots[lead] = Some((v, c));
                        break;
                    }
                }
            }
        }
        Ok(Basis { elements, pivots })
    }

    pub fn elements(&self) -> &[Element] {
        &self.elements
    }

    pub fn dim(&self) -> usize {
        self.elements.len()
    }

    /// Bits `b` (bit `j` for `basis[j]`) with `x = Σ b_j basis[j]`.
    pub fn coordinates(&self, x: Element) -> Result<u32> {
        let mut v = x.value();
        let mut c = 0u32;
        while v != 0 {
            let lead = 15 - v.leading_zeros() as usize;
            let (pv, pc) = self.pivots[lead].ok_or(Error::NotInSpan { value: x.value() })?;
            v ^= pv;
            c ^= pc;
        }
        Ok(c)
    }

    /// `Σ b_j basis[j]` for the coordinate mask `b`.
    pub fn combine(&self, coords: u32) -> Element {
        let mut acc = 0u16;
        for (j, e) in self.elements.iter().enumerate() {
            if coords >> j & 1 == 1 {
                acc ^= e.value();
            }
        }
        Element::new(acc)
    }
}

/// Coordinates of `x` in `basis`. Builds the elimination on every call; keep a
/// [`Basis`] around for repeated expansions.
pub fn coordinates_in_basis(x: Element, basis: &[Element]) -> Result<u32> {
    Basis::new(basis.to_vec())?.coordinates(x)
}

/// Lookup table of coordinates for every element of a basis span.
#[derive(Clone, Debug)]
pub struct CoordinateTable {
    table: Vec<u32>,
}

impl CoordinateTable {
    const ABSENT: u32 = u32::MAX;

    pub fn new(basis: &Basis, ctx: &FieldContext) -> CoordinateTable {
        let mut table = vec![Self::ABSENT; ctx.order()];
        // Gray-code walk over all 2^d combinations.
        let mut acc = 0u16;
        table[0] = 0;
        for step in 1u32..(1 << basis.dim()) {
            let j = step.trailing_zeros() as usize;
            acc ^= basis.elements[j].value();
            table[acc as usize] = step ^ (step >> 1);
        }
        CoordinateTable { table }
    }

    #[inline]
    pub fn get(&self, x: Element) -> Option<u32> {
        match self.table[x.value() as usize] {
            Self::ABSENT => None,
            c => Some(c),
        }
    }
}

/// Rotates a `d`-bit coordinate vector one place to the right:
/// coordinate `j` moves to `j + 1` and the last wraps to 0.
#[inline]
pub fn rotate_right(mask: u32, d: usize) -> u32 {
    if d <= 1 {
        return mask;
    }
    let full = (1u32 << d) - 1;
    ((mask << 1) | (mask >> (d - 1))) & full
}

/// `[x, x^2, x^4, …]`, `d` terms.
pub fn conjugates(x: Element, d: usize, ctx: &FieldContext) -> Vec<Element> {
    let mut out = Vec::with_capacity(d);
    let mut y = x;
    for _ in 0..d {
        out.push(y);
        y = ctx.square(y);
    }
    out
}

/// Primitive element `α^{n / (2^d - 1)}` of the subfield GF(2^d).
pub fn subfield_generator(d: u32, ctx: &FieldContext) -> Result<Element> {
    if d == 0 || ctx.m() % d != 0 {
        return Err(Error::NotASubfield { d, m: ctx.m() });
    }
    let step = ctx.n() / ((1usize << d) - 1);
    Ok(ctx.element_of_log(step as i64))
}

/// `(1, ω, …, ω^{d-1})` for the subfield generator `ω`; the standard basis when `d = m`.
pub fn polynomial_basis(d: u32, ctx: &FieldContext) -> Result<Basis> {
    let w = subfield_generator(d, ctx)?;
    let mut elements = Vec::with_capacity(d as usize);
    let mut y = Element::ONE;
    for _ in 0..d {
        elements.push(y);
        y = ctx.mul(y, w);
    }
    Basis::new(elements)
}

/// A normal basis `(β, β^2, …, β^{2^{d-1}})` of GF(2^d) ⊆ GF(2^m).
#[derive(Clone, Debug)]
pub struct NormalBasis {
    generator: Element,
    basis: Basis,
}

impl NormalBasis {
    pub fn generator(&self) -> Element {
        self.generator
    }

    pub fn degree(&self) -> usize {
        self.basis.dim()
    }

    /// The conjugates `β^{2^j}`, `j = 0..d`.
    pub fn conjugates(&self) -> &[Element] {
        self.basis.elements()
    }

    pub fn basis(&self) -> &Basis {
        &self.basis
    }

    pub fn coordinates(&self, x: Element) -> Result<u32> {
        self.basis.coordinates(x)
    }
}

fn try_normal(beta: Element, d: u32, ctx: &FieldContext) -> Option<NormalBasis> {
    if beta.is_zero() {
        return None;
    }
    let conj = conjugates(beta, d as usize + 1, ctx);
    // β must lie in GF(2^d).
    if conj[d as usize] != beta {
        return None;
    }
    let basis = Basis::new(conj[..d as usize].to_vec()).ok()?;
    Some(NormalBasis { generator: beta, basis })
}

/// Finds a normal basis of the subfield GF(2^d).
///
/// With `preferred`, that generator is used or rejected. Otherwise candidates are
/// scanned by increasing discrete logarithm, skipping 1 unless `d = 1`.
pub fn find_normal_basis(d: u32, ctx: &FieldContext, preferred: Option<Element>) -> Result<NormalBasis> {
    if d == 0 || ctx.m() % d != 0 {
        return Err(Error::NotASubfield { d, m: ctx.m() });
    }
    if let Some(beta) = preferred {
        return try_normal(beta, d, ctx).ok_or(Error::NotNormal { value: beta.value() });
    }
    if d == 1 {
        return Ok(try_normal(Element::ONE, 1, ctx).expect("(1) is a basis of GF(2)"));
    }
    let step = ctx.n() / ((1usize << d) - 1);
    (step..ctx.n())
        .step_by(step)
        .find_map(|k| try_normal(ctx.element_of_log(k as i64), d, ctx))
        .ok_or(Error::NotNormal { value: 0 })
}

/// Coordinates of `x` and of `x^2` in a normal basis. The second is always the
/// right rotation of the first.
pub fn frobenius_shift(x: Element, basis: &NormalBasis, ctx: &FieldContext) -> Result<(u32, u32)> {
    Ok((basis.coordinates(x)?, basis.coordinates(ctx.square(x))?))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn elems(c: &CosetPartition) -> Vec<Vec<usize>> {
        c.cosets().iter().map(|c| c.elements().to_vec()).collect()
    }

    #[test]
    fn cosets_mod_7() {
        assert_eq!(elems(&cyclotomic_cosets(7).unwrap()), vec![vec![0], vec![1, 2, 4], vec![3, 6, 5]]);
    }

    #[test]
    fn cosets_mod_15() {
        assert_eq!(
            elems(&cyclotomic_cosets(15).unwrap()),
            vec![vec![0], vec![1, 2, 4, 8], vec![3, 6, 12, 9], vec![5, 10], vec![7, 14, 13, 11]]
        );
    }

    #[test]
    fn cosets_edge_cases() {
        assert_eq!(elems(&cyclotomic_cosets(1).unwrap()), vec![vec![0]]);
        assert_eq!(cyclotomic_cosets(8), Err(Error::EvenModulus(8)));
    }

    #[test]
    fn coset_partition_properties() {
        for m in 2..=16 {
            let n = (1usize << m) - 1;
            let p = cyclotomic_cosets(n).unwrap();
            assert_eq!(p.cosets()[0].elements(), &[0]);
            let mut seen = vec![false; n];
            let mut total = 0;
            for (k, c) in p.cosets().iter().enumerate() {
                assert_eq!(c.leader(), c.representative());
                assert_eq!((2 * c.elements()[c.len() - 1]) % n, c.elements()[0]);
                assert_eq!(m as usize % c.len(), 0);
                for &e in c.elements() {
                    assert!(!seen[e]);
                    seen[e] = true;
                    assert_eq!(p.coset_of(e), k);
                    assert_eq!(p.coset_of(2 * e % n), k);
                }
                total += c.len();
            }
            assert_eq!(total, n);
            let leaders: Vec<_> = p.cosets().iter().map(Coset::leader).collect();
            assert!(leaders.windows(2).all(|w| w[0] < w[1]));
        }
    }

    #[test]
    fn representative_override() {
        let mut p = cyclotomic_cosets(7).unwrap();
        p.set_representative(6).unwrap();
        assert_eq!(p.cosets()[2].elements(), &[6, 5, 3]);
        assert_eq!(p.cosets()[2].leader(), 3);
        assert_eq!(p.ordering(), vec![0, 1, 2, 4, 6, 5, 3]);
        assert_eq!(p.cosets()[1].with_representative(3), Err(Error::NotInCoset { representative: 3 }));
    }

    #[test]
    fn minimal_polynomials_gf8() {
        let ctx = FieldContext::with_degree(3).unwrap();
        let p = cyclotomic_cosets(7).unwrap();
        let polys: Vec<u32> = p.cosets().iter().map(|c| minimal_polynomial(c, &ctx).unwrap()).collect();
        assert_eq!(polys, vec![0b11, 0b1011, 0b1101]);
    }

    #[test]
    fn minimal_polynomial_roots() {
        for m in 2..=10 {
            let ctx = FieldContext::with_degree(m).unwrap();
            let p = cyclotomic_cosets(ctx.n()).unwrap();
            for c in p.cosets() {
                let poly = minimal_polynomial(c, &ctx).unwrap();
                assert_eq!(32 - poly.leading_zeros() - 1, c.len() as u32);
                for &i in c.elements() {
                    let x = ctx.element_of_log(i as i64);
                    let mut acc = Element::ZERO;
                    for t in (0..=c.len()).rev() {
                        acc = ctx.mul(acc, x);
                        if poly >> t & 1 == 1 {
                            acc = ctx.add(acc, Element::ONE);
                        }
                    }
                    assert!(acc.is_zero());
                }
            }
        }
        // The coset of α under x^3+x+1 is x^3+x+1 itself.
        let ctx = FieldContext::with_degree(3).unwrap();
        assert_eq!(minimal_polynomial(&Coset::orbit(1, 7), &ctx).unwrap(), ctx.spec().poly());
    }

    #[test]
    fn normal_basis_gf8() {
        let ctx = FieldContext::with_degree(3).unwrap();
        let nb = find_normal_basis(3, &ctx, None).unwrap();
        assert_eq!(nb.generator(), ctx.element_of_log(3));
        let conj: Vec<u32> = nb.conjugates().iter().map(|&e| ctx.discrete_log(e).unwrap()).collect();
        assert_eq!(conj, vec![3, 6, 5]);

        let gamma = find_normal_basis(3, &ctx, Some(ctx.element_of_log(6))).unwrap();
        assert_eq!(gamma.generator(), ctx.element_of_log(6));

        assert_eq!(find_normal_basis(3, &ctx, Some(Element::ONE)).unwrap_err(), Error::NotNormal { value: 1 });
        assert!(find_normal_basis(3, &ctx, Some(ctx.alpha())).is_err());
        assert_eq!(find_normal_basis(2, &ctx, None).unwrap_err(), Error::NotASubfield { d: 2, m: 3 });
    }

    #[test]
    fn normal_bases_have_full_rank() {
        for m in 2..=16 {
            let ctx = FieldContext::with_degree(m).unwrap();
            for d in (1..=m).filter(|d| m % d == 0) {
                let nb = find_normal_basis(d, &ctx, None).unwrap();
                assert_eq!(nb.degree(), d as usize);
                let beta = nb.generator();
                assert_eq!(ctx.pow(beta, (1i64 << d) - 1), Element::ONE);
                // Basis::new already rejects dependent sets; check again through elimination.
                assert!(Basis::new(nb.conjugates().to_vec()).is_ok());
            }
        }
    }

    #[test]
    fn coordinate_examples() {
        let ctx = FieldContext::with_degree(3).unwrap();
        let a = |i| ctx.element_of_log(i);
        let std_basis = [a(0), a(1), a(2)];
        assert_eq!(coordinates_in_basis(a(3), &std_basis), Ok(0b011));
        assert_eq!(coordinates_in_basis(a(2), &[a(0), a(3), a(6)]), Ok(0b101));
        assert_eq!(coordinates_in_basis(a(0), &std_basis), Ok(0b001));
        assert_eq!(coordinates_in_basis(a(2), &[a(0), a(1)]), Err(Error::NotInSpan { value: 4 }));
        assert_eq!(coordinates_in_basis(a(0), &[a(1), a(2), a(4)]), Err(Error::DependentBasis));
    }

    #[test]
    fn coordinates_round_trip_and_table() {
        for m in [3, 4, 6, 8] {
            let ctx = FieldContext::with_degree(m).unwrap();
            for d in (1..=m).filter(|d| m % d == 0) {
                let nb = find_normal_basis(d, &ctx, None).unwrap();
                let table = CoordinateTable::new(nb.basis(), &ctx);
                let mut in_span = 0;
                for v in 0..ctx.order() as u16 {
                    let x = Element::new(v);
                    match nb.coordinates(x) {
                        Ok(c) => {
                            in_span += 1;
                            assert_eq!(nb.basis().combine(c), x);
                            assert_eq!(table.get(x), Some(c));
                        }
                        Err(e) => {
                            assert_eq!(e, Error::NotInSpan { value: v });
                            assert_eq!(table.get(x), None);
                        }
                    }
                }
                assert_eq!(in_span, 1 << d);
            }
        }
    }

    #[test]
    fn frobenius_examples() {
        let ctx = FieldContext::with_degree(3).unwrap();
        let nb = find_normal_basis(3, &ctx, None).unwrap();
        let beta = nb.generator();
        assert_eq!(frobenius_shift(beta, &nb, &ctx), Ok((0b001, 0b010)));
        assert_eq!(frobenius_shift(Element::ONE, &nb, &ctx), Ok((0b111, 0b111)));
    }

    #[test]
    fn frobenius_shift_is_right_rotation() {
        for m in 2..=8 {
            let ctx = FieldContext::with_degree(m).unwrap();
            for d in (1..=m).filter(|d| m % d == 0) {
                let nb = find_normal_basis(d, &ctx, None).unwrap();
                let w = subfield_generator(d, &ctx).unwrap();
                for k in 0..(1i64 << d) - 1 {
                    let x = ctx.pow(w, k);
                    let (c, c2) = frobenius_shift(x, &nb, &ctx).unwrap();
                    assert_eq!(c2, rotate_right(c, d as usize));
                }
            }
        }
    }

    #[test]
    fn rotation_helper() {
        assert_eq!(rotate_right(0b001, 3), 0b010);
        assert_eq!(rotate_right(0b100, 3), 0b001);
        assert_eq!(rotate_right(0b110, 3), 0b101);
        assert_eq!(rotate_right(1, 1), 1);
    }

    #[test]
    fn polynomial_basis_spans_subfield() {
        let ctx = FieldContext::with_degree(6).unwrap();
        for d in [1, 2, 3, 6] {
            let b = polynomial_basis(d, &ctx).unwrap();
            let w = subfield_generator(d, &ctx).unwrap();
            for k in 0..(1i64 << d) - 1 {
                assert!(b.coordinates(ctx.pow(w, k)).is_ok());
            }
        }
        let ctx3 = FieldContext::with_degree(3).unwrap();
        let b = polynomial_basis(3, &ctx3).unwrap();
        assert_eq!(b.elements(), &[Element::new(1), Element::new(2), Element::new(4)]);
    }
}
