//! Reference data: the singular-point polynomials of the matching-count
//! ODEs and the known growth-rate tables.

use num_bigint::BigInt;
use num_rational::BigRational;

use super::EquationId;
use crate::poly::Polynomial;

/// `q_{0,k}(z) = factor(z) * z^power` with nonzero root set `roots`.
#[derive(Debug, Clone)]
pub struct SingularPolynomial {
    pub k: usize,
    /// Ascending coefficients of the non-monomial factor.
    pub factor: &'static [i64],
    pub z_power: usize,
    /// Nonzero roots as `(numerator, denominator)`.
    pub roots: &'static [(i64, i64)],
}

impl SingularPolynomial {
    pub fn polynomial(&self) -> Polynomial {
        &Polynomial::from_ints(self.factor) * &Polynomial::monomial(BigRational::from_integer(1.into()), self.z_power)
    }

    pub fn root_set(&self) -> Vec<BigRational> {
        self.roots
            .iter()
            .map(|&(n, d)| BigRational::new(BigInt::from(n), BigInt::from(d)))
            .collect()
    }
}

pub const SINGULAR_POLYNOMIALS: [SingularPolynomial; 8] = [
    SingularPolynomial { k: 2, factor: &[-1, 4], z_power: 1, roots: &[(1, 4)] },
    SingularPolynomial { k: 3, factor: &[-1, 16], z_power: 2, roots: &[(1, 16)] },
    SingularPolynomial { k: 4, factor: &[1, -40, 144], z_power: 3, roots: &[(1, 4), (1, 36)] },
    SingularPolynomial { k: 5, factor: &[1, -80, 1024], z_power: 4, roots: &[(1, 16), (1, 64)] },
    SingularPolynomial {
        k: 6,
        factor: &[-1, 140, -4144, 14400],
        z_power: 5,
        roots: &[(1, 4), (1, 36), (1, 100)],
    },
    SingularPolynomial {
        k: 7,
        factor: &[-1, 224, -12544, 147456],
        z_power: 6,
        roots: &[(1, 16), (1, 64), (1, 144)],
    },
    SingularPolynomial {
        k: 8,
        factor: &[1, -336, 31584, -826624, 2822400],
        z_power: 7,
        roots: &[(1, 4), (1, 36), (1, 100), (1, 196)],
    },
    SingularPolynomial {
        k: 9,
        factor: &[1, -480, 69888, -3358720, 37748736],
        z_power: 8,
        roots: &[(1, 16), (1, 64), (1, 144), (1, 256)],
    },
];

pub fn singular_polynomial(k: usize) -> Option<&'static SingularPolynomial> {
    SINGULAR_POLYNOMIALS.iter().find(|s| s.k == k)
}

/// One reference row: inverse growth rates for `k = 2..=8`.
#[derive(Debug, Clone, Copy)]
pub struct PublishedRow {
    pub equation: EquationId,
    pub sigma: usize,
    pub values: [&'static str; 7],
}

pub const PUBLISHED_KS: [usize; 7] = [2, 3, 4, 5, 6, 7, 8];

const ZETA_1: [&str; 7] = ["1.51243", "3.67528", "5.77291", "7.82581", "9.85873", "11.88118", "13.89746"];
const ZETA_2: [&str; 7] = ["1.26585", "1.93496", "2.41152", "2.80275", "3.14338", "3.44943", "3.72983"];
const ZETA_3: [&str; 7] = ["1.17928", "1.55752", "1.80082", "1.98945", "2.14693", "2.28376", "2.40567"];
const CHI_1: [&str; 7] = ["2.09188", "4.51263", "6.65586", "8.73227", "10.7804", "12.8137", "14.8381"];
const CHI_2: [&str; 7] = ["1.56947", "2.31767", "2.81092", "3.21184", "3.55939", "3.87079", "4.15552"];
const CHI_3: [&str; 7] = ["1.38475", "1.80408", "2.05600", "2.24968", "2.41081", "2.55050", "2.67477"];
const GAMMA_2: [&str; 7] = ["1.96798", "2.58808", "3.03825", "3.41383", "3.74381", "4.04195", "4.31617"];
const GAMMA_3: [&str; 7] = ["1.71599", "2.04771", "2.27036", "2.44664", "2.59554", "2.72590", "2.84267"];

const fn row(equation: EquationId, sigma: usize, values: [&'static str; 7]) -> PublishedRow {
    PublishedRow { equation, sigma, values }
}

pub const LV5_ROWS: [PublishedRow; 3] = [
    row(EquationId::Zeta, 1, ZETA_1),
    row(EquationId::Zeta, 2, ZETA_2),
    row(EquationId::Zeta, 3, ZETA_3),
];

pub const LV1_ROWS: [PublishedRow; 3] = [
    row(EquationId::Chi, 1, CHI_1),
    row(EquationId::Chi, 2, CHI_2),
    row(EquationId::Chi, 3, CHI_3),
];

pub const STRUCT2_ROWS: [PublishedRow; 3] = [
    row(EquationId::Gamma, 2, GAMMA_2),
    row(EquationId::Chi, 2, CHI_2),
    row(EquationId::Zeta, 2, ZETA_2),
];

pub const STRUCT3_ROWS: [PublishedRow; 3] = [
    row(EquationId::Gamma, 3, GAMMA_3),
    row(EquationId::Chi, 3, CHI_3),
    row(EquationId::Zeta, 3, ZETA_3),
];

/// Digits after the decimal point in a reference value.
pub fn published_digits(value: &str) -> usize {
    value.split_once('.').map_or(0, |(_, f)| f.len())
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::Zero;

    #[test]
    fn listed_roots_are_roots() {
        for s in &SINGULAR_POLYNOMIALS {
            let p = s.polynomial();
            assert_eq!(s.root_set().len(), s.factor.len() - 1, "k={}", s.k);
            for r in s.root_set() {
                assert!(p.eval(&r).is_zero(), "k={} root {r}", s.k);
            }
        }
        assert!(singular_polynomial(10).is_none());
    }

    #[test]
    fn digit_counts() {
        assert_eq!(published_digits("10.7804"), 4);
        assert_eq!(published_digits("1.51243"), 5);
        assert_eq!(published_digits("3"), 0);
    }
}
