use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{ToPrimitive, Zero};
use serde::Serialize;

use super::AsymptoticsError;

pub const MIN_TERMS: usize = 10;

/// Normalized sequence `r_n = s_n * root^n * n^subexp` and its successive
/// ratios.
#[derive(Debug, Clone, Serialize)]
pub struct ConvergenceReport {
    /// `(n, ln r_n)` for `n >= 1` with `s_n > 0`.
    pub log_normalized: Vec<(usize, f64)>,
    /// `(n, r_{n+1} / r_n)` for `n >= 1` with `s_n, s_{n+1} > 0`.
    pub ratios: Vec<(usize, f64)>,
}

impl ConvergenceReport {
    pub fn deviations(&self) -> impl Iterator<Item = f64> + '_ {
        self.ratios.iter().map(|&(_, q)| (q - 1.0).abs())
    }

    /// Largest `|r_{n+1}/r_n - 1|` over the last `count` ratios.
    pub fn tail_deviation(&self, count: usize) -> f64 {
        let skip = self.ratios.len().saturating_sub(count);
        self.deviations().skip(skip).fold(0.0, f64::max)
    }

    /// `|r_{n+1}/r_n - 1|` strictly decreases over the last `points` ratios.
    pub fn tail_decreasing(&self, points: usize) -> bool {
        let devs: Vec<f64> = self.deviations().collect();
        let tail = &devs[devs.len().saturating_sub(points)..];
        tail.windows(2).all(|w| w[1] < w[0])
    }

    /// Least-squares slope of `|r_{n+1}/r_n - 1|` against `n` over the
    /// last `count` ratios; negative when the deviation shrinks.
    pub fn tail_trend(&self, count: usize) -> f64 {
        let skip = self.ratios.len().saturating_sub(count);
        let pts: Vec<(f64, f64)> = self.ratios[skip..].iter().map(|&(n, q)| (n as f64, (q - 1.0).abs())).collect();
        let len = pts.len() as f64;
        let mx = pts.iter().map(|p| p.0).sum::<f64>() / len;
        let my = pts.iter().map(|p| p.1).sum::<f64>() / len;
        let cov: f64 = pts.iter().map(|p| (p.0 - mx) * (p.1 - my)).sum();
        let var: f64 = pts.iter().map(|p| (p.0 - mx) * (p.0 - mx)).sum();
        cov / var
    }

    /// Empirical plateau: the last normalized value.
    pub fn plateau(&self) -> Option<f64> {
        self.log_normalized.last().map(|&(_, l)| l.exp())
    }
}

fn ln_biguint(x: &BigUint) -> f64 {
    let bits = x.bits();
    if bits <= 1000 {
        return x.to_f64().unwrap_or(f64::INFINITY).ln();
    }
    let shift = bits - 64;
    (x >> shift).to_f64().unwrap_or(f64::INFINITY).ln() + shift as f64 * std::f64::consts::LN_2
}

fn ln_rational(x: &BigRational) -> f64 {
    let n = x.numer().to_biguint().expect("positive");
    let d = x.denom().to_biguint().expect("positive");
    ln_biguint(&n) - ln_biguint(&d)
}

fn pow_rational(x: &BigRational, e: usize) -> BigRational {
    (0..e).fold(BigRational::from_integer(1.into()), |acc, _| acc * x)
}

/// Convergence diagnostic against `seq(n) ~ c * root^{-n} * n^{-subexp}`.
///
/// Ratios are evaluated exactly as rationals when `2 * subexp` is an
/// integer (squared ratio, then one square root in floating point).
pub fn convergence_diagnostic(
    seq: &[BigUint],
    root: &BigRational,
    subexp: &BigRational,
) -> Result<ConvergenceReport, AsymptoticsError> {
    if seq.len() < MIN_TERMS {
        return Err(AsymptoticsError::InsufficientTerms {
            have: seq.len(),
            need: MIN_TERMS,
        });
    }
    if let Some(n) = (seq.len() - MIN_TERMS..seq.len()).find(|&n| seq[n].is_zero()) {
        return Err(AsymptoticsError::InvalidParameters(format!("sequence vanishes at n = {n}")));
    }
    let two_alpha = subexp * BigRational::from_integer(2.into());
    let exact = two_alpha.is_integer();
    let alpha_f = subexp.to_f64().unwrap_or(f64::NAN);
    let ln_root = ln_rational(root);
    let root_sq = root * root;
    let mut log_normalized = Vec::with_capacity(seq.len());
    let mut ratios = Vec::with_capacity(seq.len());
    for n in 1..seq.len() {
        if seq[n].is_zero() {
            continue;
        }
        log_normalized.push((n, ln_biguint(&seq[n]) + n as f64 * ln_root + alpha_f * (n as f64).ln()));
        if n + 1 == seq.len() || seq[n + 1].is_zero() {
            continue;
        }
        let q = if exact {
            let step = BigRational::new(BigInt::from(n + 1), BigInt::from(n));
            let e = two_alpha.to_integer().to_usize().expect("small exponent");
            let s = BigRational::new(BigInt::from(seq[n + 1].clone()), BigInt::from(seq[n].clone()));
            let sq = &s * &s * &root_sq * pow_rational(&step, e);
            sq.to_f64().unwrap_or(f64::NAN).sqrt()
        } else {
            let l = ln_biguint(&seq[n + 1]) - ln_biguint(&seq[n]) + ln_root + alpha_f * ((n + 1) as f64 / n as f64).ln();
            l.exp()
        };
        ratios.push((n, q));
    }
    Ok(ConvergenceReport { log_normalized, ratios })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn catalan(n: usize) -> Vec<BigUint> {
        let mut c = vec![BigUint::from(1u32)];
        for i in 0..n {
            let next = &c[i] * BigUint::from(2 * (2 * i + 1)) / BigUint::from(i + 2);
            c.push(next);
        }
        c
    }

    #[test]
    fn catalan_ratios_approach_one() {
        let seq = catalan(40);
        let r = convergence_diagnostic(&seq, &BigRational::new(1.into(), 4.into()), &BigRational::new(3.into(), 2.into()))
            .unwrap();
        assert!(r.tail_deviation(1) < 0.05);
        assert!(r.tail_decreasing(5));
        assert!(r.tail_trend(10) < 0.0);
        // plateau tends to 1/sqrt(pi) with a 9/(8n) correction
        let plateau = r.plateau().unwrap() * std::f64::consts::PI.sqrt();
        assert!((plateau - 1.0).abs() < 0.05, "{plateau}");
    }

    #[test]
    fn rejects_short_input() {
        let seq = catalan(5);
        assert!(matches!(
            convergence_diagnostic(&seq, &BigRational::new(1.into(), 4.into()), &BigRational::zero()),
            Err(AsymptoticsError::InsufficientTerms { have: 6, need: 10 })
        ));
    }

    #[test]
    fn large_values_stay_finite() {
        let big = BigUint::from(3u32).pow(2000);
        assert!((ln_biguint(&big) - 2000.0 * 3f64.ln()).abs() < 1e-6);
    }
}
