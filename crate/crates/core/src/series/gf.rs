use num_bigint::BigUint;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::{
    compose_outer, int, outer_terms_needed, to_counts, BiPolynomial, BiSeries, RationalFunctionSpec, Series,
    SeriesError, Truncated,
};
use crate::count::{f_matchings_dp, MatchingCounts, Provenance};

/// `I_r(2z) = sum_j z^(2j+r) / (j! (j+r)!)` through `z^order`.
pub fn bessel_series(r: usize, order: usize) -> Series {
    let mut coeffs = vec![BigRational::zero(); order + 1];
    let mut denom = BigUint::one();
    for t in 1..=r {
        denom *= BigUint::from(t);
    }
    let mut j = 0usize;
    while 2 * j + r <= order {
        coeffs[2 * j + r] = BigRational::new(1.into(), denom.clone().into());
        j += 1;
        denom *= BigUint::from(j) * BigUint::from(j + r);
    }
    Series::from_coeffs(coeffs, order)
}

fn factorial(n: usize) -> BigUint {
    (1..=n).fold(BigUint::one(), |acc, t| acc * BigUint::from(t))
}

/// `f_k(2n, 0)` for `n <= order` from the exponential generating function
/// `det[I_{|i-j|}(2z) - I_{i+j}(2z)]`, `1 <= i, j <= k-1`.
pub fn matching_counts_via_determinant(k: usize, order: usize) -> Result<MatchingCounts, SeriesError> {
    if k < 2 {
        return Err(SeriesError::InvalidParameters(format!("k = {k} must be at least 2")));
    }
    let zorder = 2 * order;
    let m = k - 1;
    let bessel: Vec<Series> = (0..=2 * m).map(|r| bessel_series(r, zorder)).collect();
    let mut a: Vec<Vec<Series>> = (1..=m)
        .map(|i| (1..=m).map(|j| &bessel[i.abs_diff(j)] - &bessel[i + j]).collect())
        .collect();
    // Every pivot is 1 mod z, so elimination never needs row exchanges.
    let mut det = Series::one(zorder);
    for p in 0..m {
        let inv = a[p][p].reciprocal()?;
        det = &det * &a[p][p];
        for r in p + 1..m {
            let factor = &a[r][p] * &inv;
            if factor.valuation().is_none() {
                continue;
            }
            for c in p + 1..m {
                a[r][c] = &a[r][c] - &(&factor * &a[p][c]);
            }
        }
    }
    let mut values = Vec::with_capacity(order + 1);
    for (e, c) in det.coeffs().iter().enumerate() {
        if e % 2 == 1 {
            if !c.is_zero() {
                return Err(SeriesError::OddCoefficient { exponent: e });
            }
            continue;
        }
        let scaled = c * BigRational::from_integer(factorial(e).into());
        let ints = to_counts(&Series::constant(scaled, 0)).map_err(|_| SeriesError::NotNonnegativeInteger {
            exponent: e,
            value: c.to_string(),
        })?;
        values.push(ints[0].clone());
    }
    Ok(MatchingCounts {
        k,
        values,
        provenance: Provenance::Determinant,
    })
}

/// A way of producing `f_k(2n, 0)`.
pub trait MatchingRoute: Send + Sync {
    fn name(&self) -> &'static str;
    fn counts(&self, k: usize, order: usize) -> Result<MatchingCounts, SeriesError>;
}

pub struct ChamberWalkRoute;

impl MatchingRoute for ChamberWalkRoute {
    fn name(&self) -> &'static str {
        "chamber-walk"
    }

    fn counts(&self, k: usize, order: usize) -> Result<MatchingCounts, SeriesError> {
        if k < 2 {
            return Err(SeriesError::InvalidParameters(format!("k = {k} must be at least 2")));
        }
        Ok(f_matchings_dp(k, order))
    }
}

pub struct DeterminantRoute;

impl MatchingRoute for DeterminantRoute {
    fn name(&self) -> &'static str {
        "determinant"
    }

    fn counts(&self, k: usize, order: usize) -> Result<MatchingCounts, SeriesError> {
        matching_counts_via_determinant(k, order)
    }
}

/// All registered matching-count routes, chamber walk first.
pub fn matching_routes() -> Vec<Box<dyn MatchingRoute>> {
    vec![Box::new(ChamberWalkRoute), Box::new(DeterminantRoute)]
}

pub fn matching_route(name: &str) -> Option<Box<dyn MatchingRoute>> {
    matching_routes().into_iter().find(|r| r.name() == name)
}

/// `F_k(z) = sum f_k(2n, 0) z^n`.
pub fn f_series(k: usize, order: usize) -> Series {
    let f = f_matchings_dp(k, order);
    Series::from_coeffs(f.values.iter().map(|v| BigRational::from_integer(v.clone().into())).collect(), order)
}

fn check_params(k: usize, sigma: usize) -> Result<(), SeriesError> {
    if k < 2 {
        return Err(SeriesError::InvalidParameters(format!("k = {k} must be at least 2")));
    }
    if sigma < 1 {
        return Err(SeriesError::InvalidParameters(format!("sigma = {sigma} must be at least 1")));
    }
    Ok(())
}

/// `prefactor * F_k(inner)`, pulling only as many matching counts as the
/// inner valuation requires.
fn assemble<S: Truncated>(k: usize, prefactor: &S, inner: &S) -> Result<S, SeriesError> {
    let needed = match inner.valuation() {
        Some(v) => outer_terms_needed(inner.order(), v),
        None => 1,
    };
    let f = f_matchings_dp(k, needed - 1);
    let outer: Vec<BigRational> = f.values.iter().map(|v| BigRational::from_integer(v.clone().into())).collect();
    let composed = compose_outer(&outer, inner)?;
    Ok(prefactor.mul_trunc(&composed))
}

fn poly(terms: &[(usize, usize, i64)]) -> BiPolynomial {
    BiPolynomial::from_terms(terms)
}

fn uni(prefactor: RationalFunctionSpec, inner: RationalFunctionSpec, k: usize, order: usize) -> Result<Series, SeriesError> {
    assemble(k, &prefactor.expand_univariate(order)?, &inner.expand_univariate(order)?)
}

fn bi(prefactor: RationalFunctionSpec, inner: RationalFunctionSpec, k: usize, order: usize) -> Result<BiSeries, SeriesError> {
    assemble(k, &prefactor.expand(order)?, &inner.expand(order)?)
}

/// `G_k(x, y) = 1/(x+1-yx) F_k(x/(x+1-yx)^2)`, marking 1-arcs by `y`.
pub fn g_bivariate(k: usize, order: usize) -> Result<BiSeries, SeriesError> {
    check_params(k, 1)?;
    let d = poly(&[(0, 0, 1), (1, 0, 1), (1, 1, -1)]);
    bi(
        RationalFunctionSpec::new(BiPolynomial::one(), d.clone()),
        RationalFunctionSpec::new(poly(&[(1, 0, 1)]), d.pow(2)),
        k,
        order,
    )
}

/// `I_k(z) = F_k(z/(1+z))`.
pub fn i_series(k: usize, order: usize) -> Result<Series, SeriesError> {
    check_params(k, 1)?;
    uni(
        RationalFunctionSpec::new(BiPolynomial::one(), BiPolynomial::one()),
        RationalFunctionSpec::new(poly(&[(1, 0, 1)]), poly(&[(0, 0, 1), (1, 0, 1)])),
        k,
        order,
    )
}

/// Stack-free matchings of length `2n` with `m` 1-arcs.
pub fn i_bivariate(k: usize, order: usize) -> Result<BiSeries, SeriesError> {
    check_params(k, 1)?;
    let one_plus_z = poly(&[(0, 0, 1), (1, 0, 1)]);
    let d = poly(&[(0, 0, 1), (1, 0, 2), (1, 1, -1)]);
    bi(
        RationalFunctionSpec::new(one_plus_z.clone(), d.clone()),
        RationalFunctionSpec::new(&poly(&[(1, 0, 1)]) * &one_plus_z, d.pow(2)),
        k,
        order,
    )
}

fn j_parts(marked: bool) -> (RationalFunctionSpec, RationalFunctionSpec) {
    let u = usize::from(marked);
    let one_plus_z = poly(&[(0, 0, 1), (1, 0, 1)]);
    let one_plus_uz2 = poly(&[(0, 0, 1), (2, u, 1)]);
    let d = poly(&[(0, 0, 1), (2, u, 2), (3, u, 1)]);
    let prefactor = RationalFunctionSpec::new(&one_plus_z * &one_plus_uz2, d.clone());
    let inner_num = &(&one_plus_z.pow(2) * &one_plus_uz2) * &poly(&[(2, u, 1)]);
    (prefactor, RationalFunctionSpec::new(inner_num, d.pow(2)))
}

/// lv1 shapes of length `n` (all `k`, `sigma` collapse to the same count).
pub fn j_series(k: usize, order: usize) -> Result<Series, SeriesError> {
    check_params(k, 1)?;
    let (p, i) = j_parts(false);
    uni(p, i, k, order)
}

/// lv1 shapes of length `n` with `h` arcs.
pub fn j_bivariate(k: usize, order: usize) -> Result<BiSeries, SeriesError> {
    check_params(k, 1)?;
    let (p, i) = j_parts(true);
    bi(p, i, k, order)
}

/// k-noncrossing, σ-canonical structures of length `n`.
pub fn t_series(k: usize, sigma: usize, order: usize) -> Result<Series, SeriesError> {
    check_params(k, sigma)?;
    let a = 2 * sigma;
    // D = y^{2σ} - y^2 + 1, E = y^{2σ} + (1 - y) D
    let d = &poly(&[(a, 0, 1), (0, 0, 1)]) - &poly(&[(2, 0, 1)]);
    let e = &poly(&[(a, 0, 1)]) + &(&poly(&[(0, 0, 1), (1, 0, -1)]) * &d);
    uni(
        RationalFunctionSpec::new(d.clone(), e.clone()),
        RationalFunctionSpec::new(&poly(&[(a, 0, 1)]) * &d, e.pow(2)),
        k,
        order,
    )
}

/// 1-canonical structures of length `n` with `h` arcs.
pub fn t1_bivariate(k: usize, order: usize) -> Result<BiSeries, SeriesError> {
    check_params(k, 1)?;
    let d = poly(&[(0, 0, 1), (1, 0, -1), (2, 1, 1)]);
    bi(
        RationalFunctionSpec::new(BiPolynomial::one(), d.clone()),
        RationalFunctionSpec::new(poly(&[(2, 1, 1)]), d.pow(2)),
        k,
        order,
    )
}

/// Cores of length `n` with `h` arcs, from [`t1_bivariate`] with
/// `v -> v/(1 + v y^2)`.
pub fn c_bivariate(k: usize, order: usize) -> Result<BiSeries, SeriesError> {
    let t1 = t1_bivariate(k, order)?;
    let phi = RationalFunctionSpec::new(poly(&[(0, 1, 1)]), poly(&[(0, 0, 1), (2, 1, 1)])).expand(order)?;
    Ok(t1.substitute_marker(&phi))
}

/// lv5 shapes induced by structures of length `n`.
pub fn lv5_series(k: usize, sigma: usize, order: usize) -> Result<Series, SeriesError> {
    check_params(k, sigma)?;
    let a = 2 * sigma;
    let one_plus = poly(&[(0, 0, 1), (a, 0, 1)]);
    let d = poly(&[(0, 0, 1), (a, 0, 2), (a + 1, 0, -1)]);
    let one_minus_x = poly(&[(0, 0, 1), (1, 0, -1)]);
    uni(
        RationalFunctionSpec::new(one_plus.clone(), &one_minus_x * &d),
        RationalFunctionSpec::new(&poly(&[(a, 0, 1)]) * &one_plus, d.pow(2)),
        k,
        order,
    )
}

/// lv1 shapes with the closed form's length bookkeeping.
pub fn lv1_series(k: usize, sigma: usize, order: usize) -> Result<Series, SeriesError> {
    check_params(k, sigma)?;
    let a = 2 * sigma;
    let one_plus_x = poly(&[(0, 0, 1), (1, 0, 1)]);
    let one_plus = poly(&[(0, 0, 1), (a, 0, 1)]);
    let d = poly(&[(0, 0, 1), (a, 0, 2), (a + 1, 0, 1)]);
    let one_minus_x = poly(&[(0, 0, 1), (1, 0, -1)]);
    let inner_num = &(&one_plus_x.pow(2) * &poly(&[(a, 0, 1)])) * &one_plus;
    uni(
        RationalFunctionSpec::new(&one_plus_x * &one_plus, &one_minus_x * &d),
        RationalFunctionSpec::new(inner_num, d.pow(2)),
        k,
        order,
    )
}

/// Sum over the marker: sets `u = 1`.
pub fn marginal(s: &BiSeries) -> Series {
    s.eval_marker(&int(1))
}
