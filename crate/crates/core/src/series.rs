//! Truncated Taylor series on the unit disk.
//!
//! A [`Series`] of order `N` holds the coefficients of `z^0 ..= z^N`. All
//! arithmetic is truncated to the common order; products, quotients and
//! compositions use schoolbook `O(N^2)` / `O(N^3)` loops, which is plenty for
//! the `N <= 64` this crate works with.

use thiserror::Error;

use crate::scalar::{FloatComplex, Scalar};

/// Default truncation order.
pub const DEFAULT_ORDER: usize = 32;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SeriesError {
    #[error("truncation order must be at least 1, got {0}")]
    InvalidOrder(usize),
    #[error("series orders differ: {left} vs {right}")]
    OrderMismatch { left: usize, right: usize },
    #[error("division by a series with zero constant term")]
    SingularDivision,
    #[error("inner series of a composition must vanish at 0")]
    CompositionDomain,
    #[error("z^k f^(k) is only provided for k in 1..=3, got {0}")]
    InvalidShift(usize),
}

/// Coefficients `[c_0, ..., c_N]` of a truncated power series.
///
/// Equality compares coefficients only; the top-order flag set by
/// [`Series::derivative`] is metadata.
#[derive(Clone, Debug)]
pub struct Series<S> {
    coeffs: Vec<S>,
    top_lossy: bool,
}

impl<S: Scalar> PartialEq for Series<S> {
    fn eq(&self, other: &Self) -> bool {
        self.coeffs == other.coeffs
    }
}

impl<S: Scalar> Series<S> {
    /// Takes ownership of `coeffs`; the order is `coeffs.len() - 1`.
    pub fn from_coeffs(coeffs: Vec<S>) -> Result<Self, SeriesError> {
        if coeffs.len() < 2 {
            return Err(SeriesError::InvalidOrder(coeffs.len().saturating_sub(1)));
        }
        Ok(Series { coeffs, top_lossy: false })
    }

    /// Pads (or truncates) `prefix` to exactly `order + 1` coefficients.
    pub fn from_prefix<I: IntoIterator<Item = S>>(prefix: I, order: usize) -> Result<Self, SeriesError> {
        check_order(order)?;
        let mut coeffs: Vec<S> = prefix.into_iter().take(order + 1).collect();
        coeffs.resize(order + 1, S::zero());
        Ok(Series { coeffs, top_lossy: false })
    }

    pub fn from_i64s(prefix: &[i64], order: usize) -> Result<Self, SeriesError> {
        Self::from_prefix(prefix.iter().map(|&v| S::from_i64(v)), order)
    }

    pub fn zero(order: usize) -> Result<Self, SeriesError> {
        Self::from_prefix(std::iter::empty(), order)
    }

    pub fn constant(c: S, order: usize) -> Result<Self, SeriesError> {
        Self::from_prefix([c], order)
    }

    pub fn one(order: usize) -> Result<Self, SeriesError> {
        Self::constant(S::one(), order)
    }

    /// The identity map `z`.
    pub fn variable(order: usize) -> Result<Self, SeriesError> {
        Self::monomial(S::one(), 1, order)
    }

    /// `c z^k`, which is the zero series when `k > order`.
    pub fn monomial(c: S, k: usize, order: usize) -> Result<Self, SeriesError> {
        let mut s = Self::zero(order)?;
        if k <= order {
            s.coeffs[k] = c;
        }
        Ok(s)
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[S] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<S> {
        self.coeffs
    }

    /// Coefficient of `z^n`; zero beyond the truncation order.
    pub fn coeff(&self, n: usize) -> S {
        self.coeffs.get(n).cloned().unwrap_or_else(S::zero)
    }

    /// Whether the top coefficient was lost to truncation (set by
    /// [`Series::derivative`] and [`Series::div_z`]).
    pub fn is_top_lossy(&self) -> bool {
        self.top_lossy
    }

    /// `f(0) = 0` and `f'(0) = 1`.
    pub fn is_normalized(&self) -> bool {
        self.coeffs[0].is_zero() && self.coeffs[1] == S::one()
    }

    /// Same coefficients at a different truncation order.
    pub fn with_order(&self, order: usize) -> Result<Self, SeriesError> {
        let mut s = Self::from_prefix(self.coeffs.iter().cloned(), order)?;
        s.top_lossy = self.top_lossy && order >= self.order();
        Ok(s)
    }

    pub fn to_float(&self) -> Series<FloatComplex> {
        Series {
            coeffs: self.coeffs.iter().map(Scalar::to_float).collect(),
            top_lossy: self.top_lossy,
        }
    }

    fn check_same_order(&self, other: &Self) -> Result<(), SeriesError> {
        if self.order() == other.order() {
            Ok(())
        } else {
            Err(SeriesError::OrderMismatch { left: self.order(), right: other.order() })
        }
    }

    fn zip_with(&self, other: &Self, op: impl Fn(&S, &S) -> S) -> Result<Self, SeriesError> {
        self.check_same_order(other)?;
        Ok(Series {
            coeffs: self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| op(a, b)).collect(),
            top_lossy: self.top_lossy || other.top_lossy,
        })
    }

    pub fn add(&self, other: &Self) -> Result<Self, SeriesError> {
        self.zip_with(other, S::add_ref)
    }

    pub fn sub(&self, other: &Self) -> Result<Self, SeriesError> {
        self.zip_with(other, S::sub_ref)
    }

    pub fn neg(&self) -> Self {
        self.map(S::neg_ref)
    }

    pub fn scale(&self, c: &S) -> Self {
        self.map(|a| a.mul_ref(c))
    }

    fn map(&self, op: impl Fn(&S) -> S) -> Self {
        Series { coeffs: self.coeffs.iter().map(op).collect(), top_lossy: self.top_lossy }
    }

    /// Truncated Cauchy product.
    pub fn mul(&self, other: &Self) -> Result<Self, SeriesError> {
        self.check_same_order(other)?;
        let n = self.order();
        let coeffs = (0..=n)
            .map(|m| {
                (0..=m)
                    .filter(|&k| !self.coeffs[k].is_zero() && !other.coeffs[m - k].is_zero())
                    .fold(S::zero(), |acc, k| acc.add_ref(&self.coeffs[k].mul_ref(&other.coeffs[m - k])))
            })
            .collect();
        Ok(Series { coeffs, top_lossy: self.top_lossy || other.top_lossy })
    }

    /// `h` with `h * other == self` through the truncation order.
    pub fn div(&self, other: &Self) -> Result<Self, SeriesError> {
        self.check_same_order(other)?;
        let lead = &other.coeffs[0];
        if lead.is_negligible() {
            return Err(SeriesError::SingularDivision);
        }
        let n = self.order();
        let mut out: Vec<S> = Vec::with_capacity(n + 1);
        for m in 0..=n {
            let mut acc = self.coeffs[m].clone();
            for k in 1..=m {
                if other.coeffs[k].is_zero() || out[m - k].is_zero() {
                    continue;
                }
                acc = acc.sub_ref(&other.coeffs[k].mul_ref(&out[m - k]));
            }
            out.push(acc.div_ref(lead));
        }
        Ok(Series { coeffs: out, top_lossy: self.top_lossy || other.top_lossy })
    }

    /// `self(inner(z))`, accumulated Horner-style over powers of `inner`.
    pub fn compose(&self, inner: &Self) -> Result<Self, SeriesError> {
        self.check_same_order(inner)?;
        if !inner.coeffs[0].is_negligible() {
            return Err(SeriesError::CompositionDomain);
        }
        let n = self.order();
        let mut acc = Self::constant(self.coeffs[n].clone(), n)?;
        for k in (0..n).rev() {
            acc = acc.mul(inner)?;
            acc.coeffs[0] = acc.coeffs[0].add_ref(&self.coeffs[k]);
        }
        acc.top_lossy = self.top_lossy || inner.top_lossy;
        Ok(acc)
    }

    /// `f'` at the same order. The coefficient of `z^N` would need `f[N+1]`,
    /// so it is set to zero and the result is flagged top-lossy.
    pub fn derivative(&self) -> Self {
        let n = self.order();
        let mut coeffs: Vec<S> = (1..=n).map(|k| self.coeffs[k].mul_ref(&S::from_i64(k as i64))).collect();
        coeffs.push(S::zero());
        Series { coeffs, top_lossy: true }
    }

    /// `z^k f^(k)(z)` for `k in 1..=3`. Coefficient `n` is multiplied by the
    /// falling factorial `n (n-1) ... (n-k+1)`, so nothing is lost to truncation.
    pub fn z_shift_derivative(&self, k: usize) -> Result<Self, SeriesError> {
        if !(1..=3).contains(&k) {
            return Err(SeriesError::InvalidShift(k));
        }
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .map(|(n, c)| {
                let falling: i64 = (0..k as i64).map(|j| n as i64 - j).product();
                if falling == 0 {
                    S::zero()
                } else {
                    c.mul_ref(&S::from_i64(falling))
                }
            })
            .collect();
        Ok(Series { coeffs, top_lossy: self.top_lossy })
    }

    /// `f(z) / z` for `f(0) = 0`; the top coefficient becomes lossy.
    pub fn div_z(&self) -> Result<Self, SeriesError> {
        if !self.coeffs[0].is_negligible() {
            return Err(SeriesError::SingularDivision);
        }
        let mut coeffs = self.coeffs[1..].to_vec();
        coeffs.push(S::zero());
        Ok(Series { coeffs, top_lossy: true })
    }

    /// Horner evaluation of the truncated polynomial. Meaningful as an
    /// approximation of the analytic function only for `|z0| < 1`.
    pub fn eval(&self, z0: &S) -> S {
        self.coeffs.iter().rev().fold(S::zero(), |acc, c| acc.mul_ref(z0).add_ref(c))
    }
}

fn check_order(order: usize) -> Result<(), SeriesError> {
    if order == 0 {
        Err(SeriesError::InvalidOrder(order))
    } else {
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{exact, rat, ExactComplex, Rational};
    use malachite_base::num::basic::traits::Zero;
    use num_complex::Complex64;

    type Ex = Series<ExactComplex>;

    fn ex(prefix: &[i64], order: usize) -> Ex {
        Series::from_i64s(prefix, order).unwrap()
    }

    fn geometric(order: usize) -> Ex {
        ex(&vec![1; order + 1], order)
    }

    #[test]
    fn add_examples() {
        let z = ex(&[0, 1], 4);
        let z2 = ex(&[0, 0, 1], 4);
        assert_eq!(z.add(&z2).unwrap(), ex(&[0, 1, 1, 0, 0], 4));
        assert_eq!(z.add(&Ex::zero(4).unwrap()).unwrap(), z);
        assert_eq!(ex(&[1, 2], 3).add(&ex(&[3, 4], 3)).unwrap(), ex(&[4, 6], 3));
    }

    #[test]
    fn mismatched_orders_are_rejected() {
        let err = ex(&[0, 1], 3).add(&ex(&[0, 1], 4)).unwrap_err();
        assert_eq!(err, SeriesError::OrderMismatch { left: 3, right: 4 });
        assert!(ex(&[1], 3).mul(&ex(&[1], 2)).is_err());
        assert!(Ex::zero(0).is_err());
    }

    #[test]
    fn mul_examples() {
        let one_plus_z = ex(&[1, 1], 3);
        assert_eq!(one_plus_z.mul(&one_plus_z).unwrap(), ex(&[1, 2, 1], 3));
        assert_eq!(one_plus_z.mul(&Ex::one(3).unwrap()).unwrap(), one_plus_z);
        // Direct convolution of 1/(1-z) with itself: (n+1).
        assert_eq!(geometric(4).mul(&geometric(4)).unwrap(), ex(&[1, 2, 3, 4, 5], 4));
    }

    #[test]
    fn div_examples() {
        let f = ex(&[3, -1, 4, 1], 3);
        assert_eq!(f.div(&f).unwrap(), Ex::one(3).unwrap());
        assert_eq!(Ex::one(3).unwrap().div(&ex(&[1, -1], 3)).unwrap(), ex(&[1, 1, 1, 1], 3));
        assert_eq!(ex(&[1], 3).div(&ex(&[0, 1], 3)), Err(SeriesError::SingularDivision));
    }

    #[test]
    fn float_division_rejects_tiny_constant_term() {
        let g = Series::from_prefix([Complex64::new(1e-12, 0.0), Complex64::new(1.0, 0.0)], 3).unwrap();
        assert_eq!(Series::<Complex64>::one(3).unwrap().div(&g), Err(SeriesError::SingularDivision));
    }

    #[test]
    fn compose_examples() {
        let phi = ex(&[2, -1, 3, 5, 7], 4);
        assert_eq!(phi.compose(&Ex::variable(4).unwrap()).unwrap(), phi);
        assert_eq!(geometric(4).compose(&ex(&[0, 0, 1], 4)).unwrap(), ex(&[1, 0, 1, 0, 1], 4));
        assert_eq!(phi.compose(&Ex::zero(4).unwrap()).unwrap(), ex(&[2], 4));
        assert_eq!(phi.compose(&ex(&[1, 1], 4)), Err(SeriesError::CompositionDomain));
    }

    #[test]
    fn derivative_examples() {
        assert_eq!(ex(&[0, 1], 3).derivative(), ex(&[1], 3));
        assert_eq!(ex(&[0, 1, 2, 3], 3).derivative(), ex(&[1, 4, 9], 3));
        assert_eq!(ex(&[5], 3).derivative(), Ex::zero(3).unwrap());
        assert!(ex(&[0, 1], 3).derivative().is_top_lossy());
        assert!(!ex(&[0, 1], 3).is_top_lossy());
    }

    #[test]
    fn z_shift_derivative_examples() {
        let f = ex(&[0, 1, 1, 1], 3);
        assert_eq!(f.z_shift_derivative(1).unwrap(), ex(&[0, 1, 2, 3], 3));
        assert_eq!(ex(&[0, 1], 3).z_shift_derivative(2).unwrap(), Ex::zero(3).unwrap());
        let z4 = ex(&[0, 0, 0, 0, 1], 4);
        assert_eq!(z4.z_shift_derivative(3).unwrap().coeff(4), <ExactComplex as Scalar>::from_i64(24));
        assert_eq!(f.z_shift_derivative(0), Err(SeriesError::InvalidShift(0)));
        assert_eq!(f.z_shift_derivative(4), Err(SeriesError::InvalidShift(4)));
        assert!(!f.z_shift_derivative(1).unwrap().is_top_lossy());
    }

    #[test]
    fn eval_examples() {
        let half = exact(rat(1, 2), Rational::ZERO);
        assert_eq!(ex(&[0, 1], 3).eval(&half), half);
        let f = ex(&[7, 3, 2], 3);
        assert_eq!(f.eval(&<ExactComplex as Scalar>::zero()), <ExactComplex as Scalar>::from_i64(7));
        // Geometric tail at 1/2 after 31 terms is 2^-30.
        let g = Series::<Complex64>::from_prefix(vec![Complex64::new(1.0, 0.0); 31], 30).unwrap();
        assert!((g.eval(&Complex64::new(0.5, 0.0)) - Complex64::new(2.0, 0.0)).norm() < 1e-8);
    }

    #[test]
    fn div_z_shifts_down() {
        let f = ex(&[0, 1, 2, 3], 3);
        let g = f.div_z().unwrap();
        assert_eq!(g, ex(&[1, 2, 3, 0], 3));
        assert!(g.is_top_lossy());
        assert_eq!(ex(&[1, 1], 3).div_z(), Err(SeriesError::SingularDivision));
    }

    #[test]
    fn normalization_and_reorder() {
        assert!(ex(&[0, 1, 5], 3).is_normalized());
        assert!(!ex(&[0, 2], 3).is_normalized());
        let f = ex(&[0, 1, 2, 3], 3);
        assert_eq!(f.with_order(5).unwrap(), ex(&[0, 1, 2, 3, 0, 0], 5));
        assert_eq!(f.with_order(2).unwrap(), ex(&[0, 1, 2], 2));
        assert_eq!(f.coeff(10), <ExactComplex as Scalar>::zero());
    }
}
