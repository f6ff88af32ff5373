//! Truncated power series over the rationals and the generating functions
//! built from them.
//!
//! Every generating function here has the form `prefactor * F_k(inner)`,
//! where `F_k` is the ordinary generating function of k-noncrossing perfect
//! matchings and `prefactor`, `inner` are rational functions expanded at the
//! origin. Composition only needs `order / valuation(inner)` coefficients of
//! `F_k`, which keeps the matching-count tables small.

mod bivariate;
mod gf;
mod rational;
mod registry;
mod truncated;

pub mod dump;

pub use bivariate::BiSeries;
pub use gf::*;
pub use rational::{BiPolynomial, RationalFunctionSpec};
pub use registry::{GeneratingFunction, GfRegistry, GfRequest, GfValue};
pub use truncated::Series;

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SeriesError {
    #[error("series has zero constant term; reciprocal undefined")]
    ZeroConstantTerm,
    #[error("inner series has a nonzero constant term; composition undefined")]
    NonzeroInnerConstant,
    #[error("outer series has {have} coefficients but {needed} are required")]
    OuterTooShort { needed: usize, have: usize },
    #[error("coefficient of x^{exponent} is {value}, not a nonnegative integer")]
    NotNonnegativeInteger { exponent: usize, value: String },
    #[error("coefficient of x^{exponent} in the even determinant series is nonzero")]
    OddCoefficient { exponent: usize },
    #[error("unknown generating function '{0}'")]
    UnknownName(String),
    #[error("invalid parameters: {0}")]
    InvalidParameters(String),
}

/// Shared surface of [`Series`] and [`BiSeries`] needed for composition.
pub trait Truncated: Clone {
    fn order(&self) -> usize;
    fn valuation(&self) -> Option<usize>;
    fn has_zero_constant(&self) -> bool;
    fn constant_like(&self, c: &BigRational) -> Self;
    fn mul_trunc(&self, other: &Self) -> Self;
    fn add_constant(&mut self, c: &BigRational);
}

/// Number of outer coefficients that influence `outer(inner)` through
/// `x^order` when `inner` vanishes to order `valuation`.
pub fn outer_terms_needed(order: usize, valuation: usize) -> usize {
    order / valuation + 1
}

/// Evaluates `sum outer[e] * inner^e` by Horner's rule.
pub fn compose_outer<S: Truncated>(outer: &[BigRational], inner: &S) -> Result<S, SeriesError> {
    if !inner.has_zero_constant() {
        return Err(SeriesError::NonzeroInnerConstant);
    }
    let Some(val) = inner.valuation() else {
        return Ok(inner.constant_like(&outer[0]));
    };
    let needed = outer_terms_needed(inner.order(), val);
    if outer.len() < needed {
        return Err(SeriesError::OuterTooShort {
            needed,
            have: outer.len(),
        });
    }
    let mut acc = inner.constant_like(&outer[needed - 1]);
    for c in outer[..needed - 1].iter().rev() {
        acc = acc.mul_trunc(inner);
        acc.add_constant(c);
    }
    Ok(acc)
}

fn rational_to_count(exponent: usize, c: &BigRational) -> Result<BigUint, SeriesError> {
    let bad = || SeriesError::NotNonnegativeInteger {
        exponent,
        value: c.to_string(),
    };
    if !c.is_integer() {
        return Err(bad());
    }
    c.to_integer().to_biguint().ok_or_else(bad)
}

/// Converts an assembled series to counts, failing on any coefficient that
/// is not a nonnegative integer.
pub fn to_counts(s: &Series) -> Result<Vec<BigUint>, SeriesError> {
    s.coeffs()
        .iter()
        .enumerate()
        .map(|(e, c)| rational_to_count(e, c))
        .collect()
}

/// Row-wise [`to_counts`]; `out[n][m]` is the coefficient of `x^n u^m`.
pub fn to_count_table(s: &BiSeries) -> Result<Vec<Vec<BigUint>>, SeriesError> {
    s.rows()
        .iter()
        .enumerate()
        .map(|(n, row)| row.coeffs().iter().map(|c| rational_to_count(n, c)).collect())
        .collect()
}

pub(crate) fn int(n: u64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}
