//! Dense univariate polynomials over the rationals.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// `coeffs[e]` is the coefficient of `x^e`; no trailing zeros.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct Polynomial {
    coeffs: Vec<BigRational>,
}

pub fn rat(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

impl Polynomial {
    pub fn new(mut coeffs: Vec<BigRational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn from_ints(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| rat(c)).collect())
    }

    pub fn zero() -> Self {
        Self { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(BigRational::one())
    }

    pub fn constant(c: BigRational) -> Self {
        Self::new(vec![c])
    }

    /// `c * x^e`.
    pub fn monomial(c: BigRational, e: usize) -> Self {
        let mut coeffs = vec![BigRational::zero(); e + 1];
        coeffs[e] = c;
        Self::new(coeffs)
    }

    pub fn x() -> Self {
        Self::monomial(BigRational::one(), 1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, with the zero polynomial reported as `None`.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn coeff(&self, e: usize) -> BigRational {
        self.coeffs.get(e).cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn leading(&self) -> BigRational {
        self.coeffs.last().cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn pow(&self, e: usize) -> Self {
        let mut out = Self::one();
        for _ in 0..e {
            out = &out * self;
        }
        out
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        Self::new(self.coeffs.iter().map(|a| a * c).collect())
    }

    pub fn eval(&self, x: &BigRational) -> BigRational {
        self.coeffs
            .iter()
            .rev()
            .fold(BigRational::zero(), |acc, c| acc * x + c)
    }

    pub fn derivative(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(e, c)| c * rat(e as i64))
                .collect(),
        )
    }

    /// Euclidean division; panics on a zero divisor.
    pub fn div_rem(&self, divisor: &Self) -> (Self, Self) {
        let dd = divisor.degree().expect("division by the zero polynomial");
        let lead = divisor.leading();
        let mut rem = self.coeffs.clone();
        let Some(nd) = self.degree().filter(|&nd| nd >= dd) else {
            return (Self::zero(), self.clone());
        };
        let mut quot = vec![BigRational::zero(); nd - dd + 1];
        for e in (dd..=nd).rev() {
            let q = &rem[e] / &lead;
            if q.is_zero() {
                continue;
            }
            for (t, c) in divisor.coeffs.iter().enumerate() {
                rem[e - dd + t] -= &q * c;
            }
            quot[e - dd] = q;
        }
        (Self::new(quot), Self::new(rem))
    }

    pub fn monic(&self) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        self.scale(&(BigRational::one() / self.leading()))
    }

    pub fn gcd(&self, other: &Self) -> Self {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b);
            a = b;
            b = r;
        }
        a.monic()
    }

    /// Whether the polynomial has no repeated complex root.
    pub fn is_square_free(&self) -> bool {
        self.gcd(&self.derivative()).degree().unwrap_or(0) == 0
    }

    /// `self / gcd(self, self')`.
    pub fn square_free_part(&self) -> Self {
        let g = self.gcd(&self.derivative());
        if g.degree().unwrap_or(0) == 0 {
            return self.clone();
        }
        self.div_rem(&g).0
    }

    /// Primitive integer polynomial with the same roots and the same sign
    /// on the positive reals.
    pub fn to_primitive_integer(&self) -> IntPolynomial {
        let lcm = self
            .coeffs
            .iter()
            .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
        let ints: Vec<BigInt> = self
            .coeffs
            .iter()
            .map(|c| (c * BigRational::from_integer(lcm.clone())).to_integer())
            .collect();
        let g = ints.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c));
        let ints = if g.is_zero() || g.is_one() {
            ints
        } else {
            ints.into_iter().map(|c| c / &g).collect()
        };
        IntPolynomial { coeffs: ints }
    }
}

impl Add for &Polynomial {
    type Output = Polynomial;

    fn add(self, rhs: &Polynomial) -> Polynomial {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        Polynomial::new((0..len).map(|e| self.coeff(e) + rhs.coeff(e)).collect())
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;

    fn sub(self, rhs: &Polynomial) -> Polynomial {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        Polynomial::new((0..len).map(|e| self.coeff(e) - rhs.coeff(e)).collect())
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;

    fn neg(self) -> Polynomial {
        Polynomial::new(self.coeffs.iter().map(|c| -c).collect())
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;

    fn mul(self, rhs: &Polynomial) -> Polynomial {
        if self.is_zero() || rhs.is_zero() {
            return Polynomial::zero();
        }
        let mut out = vec![BigRational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Polynomial::new(out)
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (e, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let sign = if c.is_negative() { "-" } else { "+" };
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            first = false;
            let a = c.abs();
            match (e, a.is_one()) {
                (0, _) => write!(f, "{a}")?,
                (1, true) => write!(f, "x")?,
                (1, false) => write!(f, "{a}*x")?,
                (_, true) => write!(f, "x^{e}")?,
                (_, false) => write!(f, "{a}*x^{e}")?,
            }
        }
        Ok(())
    }
}

/// Integer polynomial used for fast exact sign evaluation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntPolynomial {
    coeffs: Vec<BigInt>,
}

impl IntPolynomial {
    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    /// Sign of `P(p/q)` for `q > 0`, computed as the sign of the homogenized
    /// value `sum c_e p^e q^(d-e)`.
    pub fn sign_at(&self, p: &BigInt, q: &BigInt) -> i8 {
        let mut acc = BigInt::zero();
        let mut qpow = BigInt::one();
        for c in self.coeffs.iter().rev() {
            acc = acc * p + c * &qpow;
            qpow *= q;
        }
        match acc.sign() {
            num_bigint::Sign::Minus => -1,
            num_bigint::Sign::NoSign => 0,
            num_bigint::Sign::Plus => 1,
        }
    }

    pub fn sign_at_rational(&self, x: &BigRational) -> i8 {
        self.sign_at(x.numer(), x.denom())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn arithmetic_and_division() {
        let a = Polynomial::from_ints(&[1, 1]); // 1 + x
        let b = Polynomial::from_ints(&[-1, 1]); // -1 + x
        let prod = &a * &b;
        assert_eq!(prod, Polynomial::from_ints(&[-1, 0, 1]));
        let (q, r) = prod.div_rem(&a);
        assert_eq!(q, b);
        assert!(r.is_zero());
        assert_eq!(a.pow(3), Polynomial::from_ints(&[1, 3, 3, 1]));
        assert_eq!((&a - &a), Polynomial::zero());
    }

    #[test]
    fn gcd_and_square_free() {
        let a = Polynomial::from_ints(&[1, 1]);
        let b = Polynomial::from_ints(&[-2, 1]);
        let p = &(&a * &a) * &b;
        assert!(!p.is_square_free());
        assert_eq!(p.square_free_part().monic(), (&a * &b).monic());
        assert!((&a * &b).is_square_free());
        assert_eq!(p.gcd(&p.derivative()), a);
    }

    #[test]
    fn integer_sign_matches_rational_evaluation() {
        let p = Polynomial::new(vec![
            BigRational::new(BigInt::from(-1), BigInt::from(4)),
            BigRational::new(BigInt::from(3), BigInt::from(4)),
            rat(0),
            rat(-2),
        ]);
        let ip = p.to_primitive_integer();
        for (n, d) in [(1, 3), (2, 7), (5, 4), (0, 1), (9, 10), (-3, 2)] {
            let x = BigRational::new(BigInt::from(n), BigInt::from(d));
            let v = p.eval(&x);
            let want = if v.is_zero() { 0 } else if v.is_negative() { -1 } else { 1 };
            assert_eq!(ip.sign_at_rational(&x), want, "at {x}");
        }
    }

    #[test]
    fn display() {
        assert_eq!(Polynomial::from_ints(&[-1, 0, 3, -1]).to_string(), "-x^3 + 3*x^2 - 1");
        assert_eq!(Polynomial::zero().to_string(), "0");
    }
}
