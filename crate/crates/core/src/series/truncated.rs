use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::SeriesError;

/// Univariate power series known through `x^order`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Series {
    coeffs: Vec<BigRational>,
}

impl Series {
    /// Keeps `coeffs[0..=order]`, padding with zeros.
    pub fn from_coeffs(mut coeffs: Vec<BigRational>, order: usize) -> Self {
        coeffs.resize(order + 1, BigRational::zero());
        Self { coeffs }
    }

    pub fn from_ints(coeffs: &[i64], order: usize) -> Self {
        Self::from_coeffs(
            coeffs.iter().map(|&c| BigRational::from_integer(BigInt::from(c))).collect(),
            order,
        )
    }

    pub fn zero(order: usize) -> Self {
        Self::from_coeffs(Vec::new(), order)
    }

    pub fn one(order: usize) -> Self {
        Self::constant(BigRational::one(), order)
    }

    pub fn constant(c: BigRational, order: usize) -> Self {
        Self::from_coeffs(vec![c], order)
    }

    /// `c x^e`, or zero when `e > order`.
    pub fn monomial(c: BigRational, e: usize, order: usize) -> Self {
        let mut s = Self::zero(order);
        if e <= order {
            s.coeffs[e] = c;
        }
        s
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeff(&self, e: usize) -> &BigRational {
        &self.coeffs[e]
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    /// Exponent of the first nonzero coefficient.
    pub fn valuation(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    pub fn truncate(&self, order: usize) -> Self {
        Self::from_coeffs(self.coeffs[..=order.min(self.order())].to_vec(), order.min(self.order()))
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        Self {
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    pub fn reciprocal(&self) -> Result<Self, SeriesError> {
        let c0 = &self.coeffs[0];
        if c0.is_zero() {
            return Err(SeriesError::ZeroConstantTerm);
        }
        let inv0 = BigRational::one() / c0;
        let n = self.order();
        let mut out = vec![BigRational::zero(); n + 1];
        out[0] = inv0.clone();
        for e in 1..=n {
            let mut acc = BigRational::zero();
            for t in 1..=e {
                let a = &self.coeffs[t];
                if !a.is_zero() {
                    acc += a * &out[e - t];
                }
            }
            out[e] = -acc * &inv0;
        }
        Ok(Self { coeffs: out })
    }

    pub fn divide(&self, denominator: &Self) -> Result<Self, SeriesError> {
        Ok(self * &denominator.reciprocal()?)
    }

    /// `self(inner(x))`; `inner` must vanish at zero.
    pub fn compose(&self, inner: &Self) -> Result<Self, SeriesError> {
        super::compose_outer(&self.coeffs, inner)
    }

    pub fn map_coeffs(&self, f: impl Fn(&BigRational) -> BigRational) -> Self {
        Self {
            coeffs: self.coeffs.iter().map(f).collect(),
        }
    }
}

impl super::Truncated for Series {
    fn order(&self) -> usize {
        Series::order(self)
    }

    fn valuation(&self) -> Option<usize> {
        Series::valuation(self)
    }

    fn has_zero_constant(&self) -> bool {
        self.coeffs[0].is_zero()
    }

    fn constant_like(&self, c: &BigRational) -> Self {
        Series::constant(c.clone(), self.order())
    }

    fn mul_trunc(&self, other: &Self) -> Self {
        self * other
    }

    fn add_constant(&mut self, c: &BigRational) {
        self.coeffs[0] += c;
    }
}

impl Add for &Series {
    type Output = Series;

    fn add(self, rhs: &Series) -> Series {
        let n = self.order().min(rhs.order());
        Series {
            coeffs: (0..=n).map(|e| &self.coeffs[e] + &rhs.coeffs[e]).collect(),
        }
    }
}

impl Sub for &Series {
    type Output = Series;

    fn sub(self, rhs: &Series) -> Series {
        let n = self.order().min(rhs.order());
        Series {
            coeffs: (0..=n).map(|e| &self.coeffs[e] - &rhs.coeffs[e]).collect(),
        }
    }
}

impl Neg for &Series {
    type Output = Series;

    fn neg(self) -> Series {
        self.map_coeffs(|c| -c)
    }
}

impl Mul for &Series {
    type Output = Series;

    fn mul(self, rhs: &Series) -> Series {
        let n = self.order().min(rhs.order());
        let mut out = vec![BigRational::zero(); n + 1];
        for (i, a) in self.coeffs.iter().enumerate().take(n + 1) {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate().take(n + 1 - i) {
                if !b.is_zero() {
                    out[i + j] += a * b;
                }
            }
        }
        Series { coeffs: out }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::series::SeriesError;

    fn r(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    #[test]
    fn reciprocal_of_one_minus_x() {
        let s = Series::from_ints(&[1, -1], 8);
        let inv = s.reciprocal().unwrap();
        assert!(inv.coeffs().iter().all(|c| c.is_one()));
        assert_eq!(Series::from_ints(&[0, 1], 4).reciprocal(), Err(SeriesError::ZeroConstantTerm));
    }

    #[test]
    fn geometric_composed_with_mobius_is_linear() {
        let order = 10;
        let geometric = Series::from_ints(&[1, -1], order).reciprocal().unwrap();
        let inner = Series::from_ints(&[0, 1], order)
            .divide(&Series::from_ints(&[1, 1], order))
            .unwrap();
        assert_eq!(geometric.compose(&inner).unwrap(), Series::from_ints(&[1, 1], order));
        assert_eq!(
            geometric.compose(&Series::from_ints(&[1, 1], order)),
            Err(SeriesError::NonzeroInnerConstant)
        );
    }

    #[test]
    fn mismatched_orders_truncate_to_minimum() {
        let a = Series::from_ints(&[1, 2, 3], 5);
        let b = Series::from_ints(&[1, 1], 2);
        assert_eq!((&a + &b).order(), 2);
        assert_eq!((&a * &b).order(), 2);
        assert_eq!((&a * &b).coeff(2), &r(5, 1));
    }

    #[test]
    fn scaling_and_truncation() {
        let a = Series::from_ints(&[2, 4, 6], 3).scale(&r(1, 2));
        assert_eq!(a, Series::from_ints(&[1, 2, 3], 3));
        assert_eq!(a.truncate(1), Series::from_ints(&[1, 2], 1));
        assert_eq!(a.valuation(), Some(0));
        assert_eq!(Series::zero(3).valuation(), None);
    }
}
