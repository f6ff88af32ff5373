use std::fmt;

use num_rational::BigRational;
use serde::Serialize;

use super::{rho_squared, AsymptoticsError};
use crate::poly::{rat, Polynomial};

/// Identifier of a singularity equation `inner(x) = rho_k^2`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum EquationId {
    Mu,
    MuPrime,
    Zeta,
    Chi,
    Gamma,
}

impl EquationId {
    pub const ALL: [EquationId; 5] = [Self::Mu, Self::MuPrime, Self::Zeta, Self::Chi, Self::Gamma];

    pub fn name(self) -> &'static str {
        inner_function(self).name()
    }

    pub fn from_name(name: &str) -> Option<Self> {
        Self::ALL.into_iter().find(|id| id.name() == name)
    }
}

impl fmt::Display for EquationId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// An inner function `numerator / base^power` whose value `rho_k^2`
/// locates a dominant singularity.
pub trait InnerFunction: Send + Sync {
    fn id(&self) -> EquationId;
    fn name(&self) -> &'static str;
    fn uses_sigma(&self) -> bool {
        true
    }
    fn numerator(&self, sigma: usize) -> Polynomial;
    fn denominator_base(&self, sigma: usize) -> Polynomial;
    fn denominator_power(&self) -> usize {
        2
    }

    fn denominator(&self, sigma: usize) -> Polynomial {
        self.denominator_base(sigma).pow(self.denominator_power())
    }
}

fn xp(e: usize) -> Polynomial {
    Polynomial::monomial(rat(1), e)
}

fn one_plus_xp(e: usize) -> Polynomial {
    &Polynomial::one() + &xp(e)
}

struct Mu;

impl InnerFunction for Mu {
    fn id(&self) -> EquationId {
        EquationId::Mu
    }

    fn name(&self) -> &'static str {
        "mu"
    }

    fn uses_sigma(&self) -> bool {
        false
    }

    fn numerator(&self, _: usize) -> Polynomial {
        xp(1)
    }

    fn denominator_base(&self, _: usize) -> Polynomial {
        one_plus_xp(1)
    }

    fn denominator_power(&self) -> usize {
        1
    }
}

fn chi_numerator(a: usize) -> Polynomial {
    &(&one_plus_xp(1).pow(2) * &xp(a)) * &one_plus_xp(a)
}

fn chi_base(a: usize) -> Polynomial {
    &(&Polynomial::one() + &xp(a).scale(&rat(2))) + &xp(a + 1)
}

struct MuPrime;

impl InnerFunction for MuPrime {
    fn id(&self) -> EquationId {
        EquationId::MuPrime
    }

    fn name(&self) -> &'static str {
        "mu_prime"
    }

    fn uses_sigma(&self) -> bool {
        false
    }

    fn numerator(&self, _: usize) -> Polynomial {
        chi_numerator(2)
    }

    fn denominator_base(&self, _: usize) -> Polynomial {
        chi_base(2)
    }
}

struct Zeta;

impl InnerFunction for Zeta {
    fn id(&self) -> EquationId {
        EquationId::Zeta
    }

    fn name(&self) -> &'static str {
        "zeta"
    }

    fn numerator(&self, sigma: usize) -> Polynomial {
        &xp(2 * sigma) * &one_plus_xp(2 * sigma)
    }

    fn denominator_base(&self, sigma: usize) -> Polynomial {
        let a = 2 * sigma;
        &(&Polynomial::one() + &xp(a).scale(&rat(2))) - &xp(a + 1)
    }
}

struct Chi;

impl InnerFunction for Chi {
    fn id(&self) -> EquationId {
        EquationId::Chi
    }

    fn name(&self) -> &'static str {
        "chi"
    }

    fn numerator(&self, sigma: usize) -> Polynomial {
        chi_numerator(2 * sigma)
    }

    fn denominator_base(&self, sigma: usize) -> Polynomial {
        chi_base(2 * sigma)
    }
}

/// `u0 y^2 / (u0 y^2 - y + 1)^2` with `u0 = y^{2σ-2} / (y^{2σ} - y^2 + 1)`,
/// written as `y^{2σ} D / E^2` where `D = y^{2σ} - y^2 + 1` and
/// `E = y^{2σ} + (1 - y) D`.
struct Gamma;

fn gamma_d(sigma: usize) -> Polynomial {
    &one_plus_xp(2 * sigma) - &xp(2)
}

impl InnerFunction for Gamma {
    fn id(&self) -> EquationId {
        EquationId::Gamma
    }

    fn name(&self) -> &'static str {
        "gamma"
    }

    fn numerator(&self, sigma: usize) -> Polynomial {
        &xp(2 * sigma) * &gamma_d(sigma)
    }

    fn denominator_base(&self, sigma: usize) -> Polynomial {
        let one_minus = Polynomial::from_ints(&[1, -1]);
        &xp(2 * sigma) + &(&one_minus * &gamma_d(sigma))
    }
}

static MU: Mu = Mu;
static MU_PRIME: MuPrime = MuPrime;
static ZETA: Zeta = Zeta;
static CHI: Chi = Chi;
static GAMMA: Gamma = Gamma;

pub fn inner_function(id: EquationId) -> &'static dyn InnerFunction {
    match id {
        EquationId::Mu => &MU,
        EquationId::MuPrime => &MU_PRIME,
        EquationId::Zeta => &ZETA,
        EquationId::Chi => &CHI,
        EquationId::Gamma => &GAMMA,
    }
}

/// Every registered inner function.
pub fn equation_registry() -> Vec<&'static dyn InnerFunction> {
    EquationId::ALL.into_iter().map(inner_function).collect()
}

/// A concrete equation `inner(x) = rho_k^2`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct InnerEquation {
    pub id: EquationId,
    pub k: usize,
    pub sigma: usize,
}

impl InnerEquation {
    pub fn new(id: EquationId, k: usize, sigma: usize) -> Result<Self, AsymptoticsError> {
        if k < 2 {
            return Err(AsymptoticsError::InvalidParameters(format!("k = {k} must be at least 2")));
        }
        if sigma < 1 {
            return Err(AsymptoticsError::InvalidParameters(format!("sigma = {sigma} must be at least 1")));
        }
        let sigma = if inner_function(id).uses_sigma() { sigma } else { 1 };
        Ok(Self { id, k, sigma })
    }

    pub fn function(&self) -> &'static dyn InnerFunction {
        inner_function(self.id)
    }

    /// `numerator - rho_k^2 * denominator`.
    pub fn clear_to_polynomial(&self) -> Polynomial {
        let f = self.function();
        &f.numerator(self.sigma) - &f.denominator(self.sigma).scale(&rho_squared(self.k))
    }

    /// `inner(x)`, or `None` where the denominator vanishes.
    pub fn inner_at(&self, x: &BigRational) -> Option<BigRational> {
        let f = self.function();
        let d = f.denominator(self.sigma).eval(x);
        if num_traits::Zero::is_zero(&d) {
            return None;
        }
        Some(f.numerator(self.sigma).eval(x) / d)
    }
}

impl fmt::Display for InnerEquation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.function().uses_sigma() {
            write!(f, "{}(k={}, sigma={})", self.id, self.k, self.sigma)
        } else {
            write!(f, "{}(k={})", self.id, self.k)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::Zero;

    #[test]
    fn names_round_trip() {
        for id in EquationId::ALL {
            assert_eq!(EquationId::from_name(id.name()), Some(id));
            assert_eq!(inner_function(id).id(), id);
        }
        assert_eq!(equation_registry().len(), 5);
        assert_eq!(EquationId::from_name("omega"), None);
    }

    #[test]
    fn cleared_polynomials_start_at_minus_rho_squared() {
        for id in EquationId::ALL {
            for k in 2..=5 {
                for sigma in 1..=3 {
                    let eq = InnerEquation::new(id, k, sigma).unwrap();
                    assert_eq!(eq.clear_to_polynomial().coeff(0), -rho_squared(k), "{eq}");
                }
            }
        }
    }

    #[test]
    fn mu_prime_is_chi_at_sigma_one() {
        for k in 2..=6 {
            let a = InnerEquation::new(EquationId::MuPrime, k, 7).unwrap();
            let b = InnerEquation::new(EquationId::Chi, k, 1).unwrap();
            assert_eq!(a.clear_to_polynomial(), b.clear_to_polynomial());
            assert_eq!(a.sigma, 1);
        }
    }

    #[test]
    fn gamma_matches_nested_form() {
        let eq = InnerEquation::new(EquationId::Gamma, 3, 2).unwrap();
        let y = BigRational::new(1.into(), 3.into());
        let y2 = &y * &y;
        let u0 = y2.clone() / (&y2 * &y2 - &y2 + rat(1));
        let den = &u0 * &y2 - &y + rat(1);
        let want = &u0 * &y2 / (&den * &den);
        assert_eq!(eq.inner_at(&y), Some(want));
        assert!(eq.inner_at(&BigRational::zero()).unwrap().is_zero());
    }
}
