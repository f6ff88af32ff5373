use std::ops::{Add, Mul, Sub};

use num_rational::BigRational;
use num_traits::{One, Zero};

use super::{Series, SeriesError};
use crate::poly::Polynomial;

/// Power series in a main variable `x` whose coefficients are polynomials
/// in a marker variable `u`. Row `n` holds the coefficient of `x^n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BiSeries {
    rows: Vec<Polynomial>,
}

impl BiSeries {
    pub fn from_rows(mut rows: Vec<Polynomial>, order: usize) -> Self {
        rows.resize(order + 1, Polynomial::zero());
        Self { rows }
    }

    pub fn zero(order: usize) -> Self {
        Self::from_rows(Vec::new(), order)
    }

    pub fn constant(c: BigRational, order: usize) -> Self {
        Self::from_rows(vec![Polynomial::constant(c)], order)
    }

    /// Lifts a univariate series (no marker dependence).
    pub fn from_series(s: &Series) -> Self {
        Self {
            rows: s.coeffs().iter().map(|c| Polynomial::constant(c.clone())).collect(),
        }
    }

    pub fn order(&self) -> usize {
        self.rows.len() - 1
    }

    pub fn row(&self, n: usize) -> &Polynomial {
        &self.rows[n]
    }

    pub fn rows(&self) -> &[Polynomial] {
        &self.rows
    }

    /// Coefficient of `x^n u^m`.
    pub fn coeff(&self, n: usize, m: usize) -> BigRational {
        self.rows[n].coeff(m)
    }

    pub fn valuation(&self) -> Option<usize> {
        self.rows.iter().position(|p| !p.is_zero())
    }

    /// Largest marker degree in row `n`.
    pub fn marker_degree(&self, n: usize) -> Option<usize> {
        self.rows[n].degree()
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        Self {
            rows: self.rows.iter().map(|p| p.scale(c)).collect(),
        }
    }

    /// Sets the marker to the constant `u`.
    pub fn eval_marker(&self, u: &BigRational) -> Series {
        Series::from_coeffs(self.rows.iter().map(|p| p.eval(u)).collect(), self.order())
    }

    pub fn reciprocal(&self) -> Result<Self, SeriesError> {
        let c0 = &self.rows[0];
        if c0.degree() != Some(0) {
            return Err(SeriesError::ZeroConstantTerm);
        }
        let inv0 = BigRational::one() / c0.leading();
        let n = self.order();
        let mut out: Vec<Polynomial> = vec![Polynomial::zero(); n + 1];
        out[0] = Polynomial::constant(inv0.clone());
        for e in 1..=n {
            let mut acc = Polynomial::zero();
            for t in 1..=e {
                if !self.rows[t].is_zero() && !out[e - t].is_zero() {
                    acc = &acc + &(&self.rows[t] * &out[e - t]);
                }
            }
            out[e] = acc.scale(&-inv0.clone());
        }
        Ok(Self { rows: out })
    }

    pub fn divide(&self, denominator: &Self) -> Result<Self, SeriesError> {
        Ok(self * &denominator.reciprocal()?)
    }

    /// `sum_{n,m} c(n,m) x^n phi^m`, substituting a series for the marker.
    /// `phi` may itself depend on both variables.
    pub fn substitute_marker(&self, phi: &BiSeries) -> Self {
        let order = self.order().min(phi.order());
        let max_m = self.rows.iter().filter_map(Polynomial::degree).max().unwrap_or(0);
        let mut powers = Vec::with_capacity(max_m + 1);
        powers.push(BiSeries::constant(BigRational::one(), order));
        for m in 1..=max_m {
            let next = &powers[m - 1] * phi;
            powers.push(next);
        }
        let mut out = BiSeries::zero(order);
        for (n, row) in self.rows.iter().enumerate().take(order + 1) {
            for (m, c) in row.coeffs().iter().enumerate() {
                if c.is_zero() {
                    continue;
                }
                let p = &powers[m];
                for e in 0..=order - n {
                    if !p.rows[e].is_zero() {
                        out.rows[n + e] = &out.rows[n + e] + &p.rows[e].scale(c);
                    }
                }
            }
        }
        out
    }
}

impl super::Truncated for BiSeries {
    fn order(&self) -> usize {
        BiSeries::order(self)
    }

    fn valuation(&self) -> Option<usize> {
        BiSeries::valuation(self)
    }

    fn has_zero_constant(&self) -> bool {
        self.rows[0].is_zero()
    }

    fn constant_like(&self, c: &BigRational) -> Self {
        BiSeries::constant(c.clone(), self.order())
    }

    fn mul_trunc(&self, other: &Self) -> Self {
        self * other
    }

    fn add_constant(&mut self, c: &BigRational) {
        self.rows[0] = &self.rows[0] + &Polynomial::constant(c.clone());
    }
}

impl Add for &BiSeries {
    type Output = BiSeries;

    fn add(self, rhs: &BiSeries) -> BiSeries {
        let n = self.order().min(rhs.order());
        BiSeries {
            rows: (0..=n).map(|e| &self.rows[e] + &rhs.rows[e]).collect(),
        }
    }
}

impl Sub for &BiSeries {
    type Output = BiSeries;

    fn sub(self, rhs: &BiSeries) -> BiSeries {
        let n = self.order().min(rhs.order());
        BiSeries {
            rows: (0..=n).map(|e| &self.rows[e] - &rhs.rows[e]).collect(),
        }
    }
}

impl Mul for &BiSeries {
    type Output = BiSeries;

    fn mul(self, rhs: &BiSeries) -> BiSeries {
        let n = self.order().min(rhs.order());
        let mut out = vec![Polynomial::zero(); n + 1];
        for i in 0..=n {
            if self.rows[i].is_zero() {
                continue;
            }
            for j in 0..=n - i {
                if !rhs.rows[j].is_zero() {
                    out[i + j] = &out[i + j] + &(&self.rows[i] * &rhs.rows[j]);
                }
            }
        }
        BiSeries { rows: out }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::rat;

    fn p(c: &[i64]) -> Polynomial {
        Polynomial::from_ints(c)
    }

    #[test]
    fn reciprocal_round_trip() {
        // 1 + 2x - xu
        let d = BiSeries::from_rows(vec![p(&[1]), p(&[2, -1])], 8);
        let inv = d.reciprocal().unwrap();
        let prod = &d * &inv;
        assert_eq!(prod, BiSeries::constant(rat(1), 8));
        // marker-dependent constant term is not invertible here
        let bad = BiSeries::from_rows(vec![p(&[1, 1])], 3);
        assert_eq!(bad.reciprocal(), Err(SeriesError::ZeroConstantTerm));
    }

    #[test]
    fn marker_evaluation_commutes_with_products() {
        let a = BiSeries::from_rows(vec![p(&[1]), p(&[0, 1]), p(&[3, 0, 2])], 5);
        let b = BiSeries::from_rows(vec![p(&[2]), p(&[1, 1])], 5);
        let u = rat(3);
        assert_eq!((&a * &b).eval_marker(&u), &a.eval_marker(&u) * &b.eval_marker(&u));
    }

    #[test]
    fn marker_substitution() {
        // u -> u/(1 + u x^2) turns 1/(1 - u x^2) into 1 + u x^2
        let order = 8;
        let s = BiSeries::from_rows(vec![p(&[1]), p(&[]), p(&[0, -1])], order)
            .reciprocal()
            .unwrap();
        let den = BiSeries::from_rows(vec![p(&[1]), p(&[]), p(&[0, 1])], order);
        let phi = BiSeries::from_rows(vec![p(&[0, 1])], order).divide(&den).unwrap();
        let t = s.substitute_marker(&phi);
        let want = BiSeries::from_rows(vec![p(&[1]), p(&[]), p(&[0, 1])], order);
        assert_eq!(t, want);
    }
}
