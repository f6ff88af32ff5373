use std::ops::{Add, Mul, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

use super::{BiSeries, Series, SeriesError};
use crate::poly::Polynomial;

/// Polynomial in a main variable with marker-polynomial coefficients.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct BiPolynomial {
    rows: Vec<Polynomial>,
}

impl BiPolynomial {
    /// Sum of `c * x^e * u^m` over `(e, m, c)`.
    pub fn from_terms(terms: &[(usize, usize, i64)]) -> Self {
        let mut out = Self::default();
        for &(e, m, c) in terms {
            out = &out + &Self::term(e, m, c);
        }
        out
    }

    fn term(e: usize, m: usize, c: i64) -> Self {
        let mut rows = vec![Polynomial::zero(); e + 1];
        rows[e] = Polynomial::monomial(BigRational::from_integer(BigInt::from(c)), m);
        Self::new(rows)
    }

    pub fn new(mut rows: Vec<Polynomial>) -> Self {
        while rows.last().is_some_and(Polynomial::is_zero) {
            rows.pop();
        }
        Self { rows }
    }

    pub fn one() -> Self {
        Self::from_terms(&[(0, 0, 1)])
    }

    pub fn row(&self, e: usize) -> Polynomial {
        self.rows.get(e).cloned().unwrap_or_default()
    }

    pub fn main_degree(&self) -> Option<usize> {
        self.rows.len().checked_sub(1)
    }

    pub fn pow(&self, e: usize) -> Self {
        let mut out = Self::one();
        for _ in 0..e {
            out = &out * self;
        }
        out
    }

    /// Sets the marker to the constant `u`.
    pub fn eval_marker(&self, u: &BigRational) -> Self {
        Self::new(self.rows.iter().map(|p| Polynomial::constant(p.eval(u))).collect())
    }

    /// Univariate view, when no row depends on the marker.
    pub fn as_univariate(&self) -> Option<Polynomial> {
        self.rows
            .iter()
            .map(|p| match p.degree() {
                None => Some(BigRational::zero()),
                Some(0) => Some(p.coeff(0)),
                Some(_) => None,
            })
            .collect::<Option<Vec<_>>>()
            .map(Polynomial::new)
    }

    pub fn from_univariate(p: &Polynomial) -> Self {
        Self::new(p.coeffs().iter().map(|c| Polynomial::constant(c.clone())).collect())
    }
}

impl Add for &BiPolynomial {
    type Output = BiPolynomial;

    fn add(self, rhs: &BiPolynomial) -> BiPolynomial {
        let len = self.rows.len().max(rhs.rows.len());
        BiPolynomial::new((0..len).map(|e| &self.row(e) + &rhs.row(e)).collect())
    }
}

impl Sub for &BiPolynomial {
    type Output = BiPolynomial;

    fn sub(self, rhs: &BiPolynomial) -> BiPolynomial {
        let len = self.rows.len().max(rhs.rows.len());
        BiPolynomial::new((0..len).map(|e| &self.row(e) - &rhs.row(e)).collect())
    }
}

impl Mul for &BiPolynomial {
    type Output = BiPolynomial;

    fn mul(self, rhs: &BiPolynomial) -> BiPolynomial {
        if self.rows.is_empty() || rhs.rows.is_empty() {
            return BiPolynomial::default();
        }
        let mut out = vec![Polynomial::zero(); self.rows.len() + rhs.rows.len() - 1];
        for (i, a) in self.rows.iter().enumerate() {
            for (j, b) in rhs.rows.iter().enumerate() {
                out[i + j] = &out[i + j] + &(a * b);
            }
        }
        BiPolynomial::new(out)
    }
}

/// `numerator / denominator`, expandable at the origin when the
/// denominator's constant term is a nonzero constant.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RationalFunctionSpec {
    pub numerator: BiPolynomial,
    pub denominator: BiPolynomial,
}

impl RationalFunctionSpec {
    pub fn new(numerator: BiPolynomial, denominator: BiPolynomial) -> Self {
        Self {
            numerator,
            denominator,
        }
    }

    fn leading_inverse(&self) -> Result<BigRational, SeriesError> {
        let d0 = self.denominator.row(0);
        if d0.degree() != Some(0) {
            return Err(SeriesError::ZeroConstantTerm);
        }
        Ok(d0.coeff(0).recip())
    }

    /// Expands through `x^order` with the linear recurrence
    /// `d_0 c_n = a_n - sum_{t >= 1} d_t c_{n-t}`.
    pub fn expand(&self, order: usize) -> Result<BiSeries, SeriesError> {
        let inv = self.leading_inverse()?;
        let den_deg = self.denominator.main_degree().unwrap_or(0);
        let mut out: Vec<Polynomial> = Vec::with_capacity(order + 1);
        for n in 0..=order {
            let mut acc = self.numerator.row(n);
            for t in 1..=den_deg.min(n) {
                let d = self.denominator.row(t);
                if !d.is_zero() {
                    acc = &acc - &(&d * &out[n - t]);
                }
            }
            out.push(acc.scale(&inv));
        }
        Ok(BiSeries::from_rows(out, order))
    }

    /// Univariate expansion; errors if either side depends on the marker.
    pub fn expand_univariate(&self, order: usize) -> Result<Series, SeriesError> {
        let (Some(num), Some(den)) = (self.numerator.as_univariate(), self.denominator.as_univariate()) else {
            return Err(SeriesError::InvalidParameters(
                "rational function depends on the marker variable".into(),
            ));
        };
        if den.coeff(0).is_zero() {
            return Err(SeriesError::ZeroConstantTerm);
        }
        let inv = den.coeff(0).recip();
        let mut out: Vec<BigRational> = Vec::with_capacity(order + 1);
        let den_deg = den.degree().unwrap_or(0);
        for n in 0..=order {
            let mut acc = num.coeff(n);
            for t in 1..=den_deg.min(n) {
                let d = &den.coeffs()[t];
                if !d.is_zero() {
                    acc -= d * &out[n - t];
                }
            }
            out.push(acc * &inv);
        }
        Ok(Series::from_coeffs(out, order))
    }

    pub fn eval_marker(&self, u: &BigRational) -> Self {
        Self::new(self.numerator.eval_marker(u), self.denominator.eval_marker(u))
    }
}
