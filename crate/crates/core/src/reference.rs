//! Reference transform: direct evaluation of `f` at every power of `α`.
//!
//! [`naive_dft`] evaluates by Horner's rule and never touches a materialized
//! matrix, so it stays independent of [`dense_matvec`] and of every plan's
//! `materialize`.

use alloc::vec;
use alloc::vec::Vec;

use crate::field::{Element, FieldContext, OpCounter};
use crate::{Error, Result};

/// Dense row-major matrix of field elements.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ElementMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Element>,
}

impl ElementMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        ElementMatrix { rows, cols, data: vec![Element::ZERO; rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, Element::ONE);
        }
        m
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> Element) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for r in 0..rows {
            for c in 0..cols {
                data.push(f(r, c));
            }
        }
        ElementMatrix { rows, cols, data }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    #[inline]
    pub fn get(&self, r: usize, c: usize) -> Element {
        self.data[r * self.cols + c]
    }

    #[inline]
    pub fn set(&mut self, r: usize, c: usize, v: Element) {
        self.data[r * self.cols + c] = v;
    }

    pub fn row(&self, r: usize) -> &[Element] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    /// Number of entries other than 0 and 1.
    pub fn nontrivial_entries(&self) -> usize {
        self.data.iter().filter(|e| !e.is_trivial()).count()
    }
}

/// The Fourier matrix `W_ij = α^{ij}`.
pub fn fourier_matrix(ctx: &FieldContext) -> ElementMatrix {
    let n = ctx.n();
    ElementMatrix::from_fn(n, n, |i, j| ctx.element_of_log(((i * j) % n) as i64))
}

/// Horner evaluation of `Σ f_j x^j`.
pub fn poly_eval(f: &[Element], x: Element, ctx: &FieldContext, counter: Option<&mut OpCounter>) -> Element {
    let Some((&top, rest)) = f.split_last() else {
        return Element::ZERO;
    };
    let mut acc = top;
    match counter {
        None => {
            for &c in rest.iter().rev() {
                acc = ctx.add(ctx.mul(acc, x), c);
            }
        }
        Some(counter) => {
            for &c in rest.iter().rev() {
                let p = counter.mul(ctx, acc, x);
                acc = counter.add(p, c);
            }
        }
    }
    acc
}

/// `F_i = f(α^i)` for `i = 0..n`.
pub fn naive_dft(f: &[Element], ctx: &FieldContext, mut counter: Option<&mut OpCounter>) -> Result<Vec<Element>> {
    let n = ctx.n();
    if f.len() != n {
        return Err(Error::ShapeMismatch { expected: n, found: f.len() });
    }
    Ok(ctx.exp_table().iter().map(|&x| poly_eval(f, x, ctx, counter.as_deref_mut())).collect())
}

/// Exact matrix-vector product `M v`.
pub fn dense_matvec(
    m: &ElementMatrix,
    v: &[Element],
    ctx: &FieldContext,
    counter: &mut OpCounter,
) -> Result<Vec<Element>> {
    if m.cols() != v.len() {
        return Err(Error::ShapeMismatch { expected: m.cols(), found: v.len() });
    }
    let mut out = Vec::with_capacity(m.rows());
    for r in 0..m.rows() {
        let row = m.row(r);
        let mut acc = Element::ZERO;
        for (j, (&a, &x)) in row.iter().zip(v).enumerate() {
            let p = counter.mul(ctx, a, x);
            acc = if j == 0 { p } else { counter.add(acc, p) };
        }
        out.push(acc);
    }
    Ok(out)
}

/// Dense product `A B`, uncounted.
pub fn dense_matmul(a: &ElementMatrix, b: &ElementMatrix, ctx: &FieldContext) -> Result<ElementMatrix> {
    if a.cols() != b.rows() {
        return Err(Error::ShapeMismatch { expected: a.cols(), found: b.rows() });
    }
    Ok(ElementMatrix::from_fn(a.rows(), b.cols(), |r, c| {
        (0..a.cols()).fold(Element::ZERO, |acc, k| ctx.add(acc, ctx.mul(a.get(r, k), b.get(k, c))))
    }))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::CountPolicy;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn random_vec(rng: &mut ChaCha8Rng, ctx: &FieldContext) -> Vec<Element> {
        (0..ctx.n()).map(|_| Element::new(rng.random_range(0..ctx.order() as u16))).collect()
    }

    fn unit(n: usize, i: usize) -> Vec<Element> {
        let mut v = vec![Element::ZERO; n];
        v[i] = Element::ONE;
        v
    }

    #[test]
    fn dft_examples() {
        let ctx = FieldContext::with_degree(3).unwrap();
        assert_eq!(naive_dft(&unit(7, 0), &ctx, None).unwrap(), vec![Element::ONE; 7]);
        let f1 = naive_dft(&unit(7, 1), &ctx, None).unwrap();
        assert_eq!(f1.iter().map(|e| e.value()).collect::<Vec<_>>(), vec![1, 2, 4, 3, 6, 7, 5]);
        assert_eq!(naive_dft(&[Element::ZERO; 7], &ctx, None).unwrap(), vec![Element::ZERO; 7]);
        assert_eq!(naive_dft(&[Element::ZERO; 6], &ctx, None), Err(Error::ShapeMismatch { expected: 7, found: 6 }));
    }

    #[test]
    fn dft_counts() {
        let ctx = FieldContext::with_degree(4).unwrap();
        let mut counter = OpCounter::new(CountPolicy::All);
        let f = vec![Element::new(5); 15];
        naive_dft(&f, &ctx, Some(&mut counter)).unwrap();
        assert_eq!(counter.count().mults, 15 * 14);
        assert_eq!(counter.count().adds, 15 * 14);
    }

    #[test]
    fn poly_eval_examples() {
        let ctx = FieldContext::with_degree(3).unwrap();
        let ones = vec![Element::ONE; 7];
        for i in 1..7 {
            assert_eq!(poly_eval(&ones, ctx.element_of_log(i), &ctx, None), Element::ZERO);
        }
        assert_eq!(poly_eval(&ones, Element::ONE, &ctx, None), Element::ONE);
        let f = unit(7, 2);
        assert_eq!(poly_eval(&f, ctx.element_of_log(3), &ctx, None), Element::new(5));
        assert_eq!(poly_eval(&[], Element::ONE, &ctx, None), Element::ZERO);
    }

    #[test]
    fn matvec_examples() {
        let ctx = FieldContext::with_degree(3).unwrap();
        let mut c = OpCounter::default();
        let v: Vec<Element> = (1..=7).map(Element::new).collect();
        assert_eq!(dense_matvec(&ElementMatrix::identity(7), &v, &ctx, &mut c).unwrap(), v);
        let w = fourier_matrix(&ctx);
        let col = dense_matvec(&w, &unit(7, 1), &ctx, &mut c).unwrap();
        assert_eq!(col.iter().map(|e| e.value()).collect::<Vec<_>>(), vec![1, 2, 4, 3, 6, 7, 5]);
        assert_eq!(dense_matvec(&ElementMatrix::zeros(7, 7), &v, &ctx, &mut c).unwrap(), vec![Element::ZERO; 7]);
        assert!(dense_matvec(&w, &v[..3], &ctx, &mut c).is_err());
    }

    #[test]
    fn oracle_agrees_with_fourier_matrix() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for m in 2..=8 {
            let ctx = FieldContext::with_degree(m).unwrap();
            let w = fourier_matrix(&ctx);
            for _ in 0..20 {
                let f = random_vec(&mut rng, &ctx);
                let direct = dense_matvec(&w, &f, &ctx, &mut OpCounter::off()).unwrap();
                assert_eq!(naive_dft(&f, &ctx, None).unwrap(), direct);
            }
        }
    }

    #[test]
    fn oracle_is_linear() {
        let mut rng = ChaCha8Rng::seed_from_u64(4);
        for m in [3, 5, 8] {
            let ctx = FieldContext::with_degree(m).unwrap();
            for _ in 0..20 {
                let f = random_vec(&mut rng, &ctx);
                let g = random_vec(&mut rng, &ctx);
                let a = Element::new(rng.random_range(0..ctx.order() as u16));
                let af_g: Vec<_> = f.iter().zip(&g).map(|(&x, &y)| ctx.add(ctx.mul(a, x), y)).collect();
                let lhs = naive_dft(&af_g, &ctx, None).unwrap();
                let ff = naive_dft(&f, &ctx, None).unwrap();
                let fg = naive_dft(&g, &ctx, None).unwrap();
                let rhs: Vec<_> = ff.iter().zip(&fg).map(|(&x, &y)| ctx.add(ctx.mul(a, x), y)).collect();
                assert_eq!(lhs, rhs);
            }
        }
    }
}
