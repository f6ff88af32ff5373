use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::AsymptoticsError;
use crate::poly::{IntPolynomial, Polynomial};

/// Grid resolution for the first-sign-change scan.
pub const GRID_POINTS: u32 = 1 << 12;

/// Exact rational bracket `[lo, hi]` around a real root.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RootEnclosure {
    pub lo: BigRational,
    pub hi: BigRational,
    /// The input polynomial had no repeated factor.
    pub square_free: bool,
    /// A Sturm count found exactly one distinct root in `(0, hi]`.
    pub sturm_certified: bool,
}

impl RootEnclosure {
    pub fn width(&self) -> BigRational {
        &self.hi - &self.lo
    }

    pub fn midpoint(&self) -> BigRational {
        (&self.lo + &self.hi) / BigRational::from_integer(2.into())
    }

    pub fn is_exact(&self) -> bool {
        self.lo == self.hi
    }
}

/// Sturm sequence of a square-free polynomial.
#[derive(Debug, Clone)]
pub struct SturmChain {
    chain: Vec<Polynomial>,
}

impl SturmChain {
    pub fn new(p: &Polynomial) -> Self {
        let mut chain = vec![p.clone(), p.derivative()];
        while let Some(last) = chain.last().filter(|q| !q.is_zero()) {
            let prev = &chain[chain.len() - 2];
            let (_, r) = prev.div_rem(last);
            chain.push(-&r);
        }
        chain.pop();
        Self { chain }
    }

    fn variations(&self, x: &BigRational) -> usize {
        let signs: Vec<bool> = self
            .chain
            .iter()
            .map(|p| p.eval(x))
            .filter(|v| !v.is_zero())
            .map(|v| v.is_positive())
            .collect();
        signs.windows(2).filter(|w| w[0] != w[1]).count()
    }

    /// Distinct real roots in `(a, b]`.
    pub fn count_in(&self, a: &BigRational, b: &BigRational) -> usize {
        self.variations(a).saturating_sub(self.variations(b))
    }
}

fn frac(n: u64, d: u64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

/// Prepared sign oracle for repeated root searches on one polynomial.
pub struct RootFinder {
    reduced: Polynomial,
    ip: IntPolynomial,
    square_free: bool,
    sturm: SturmChain,
}

impl RootFinder {
    pub fn new(p: &Polynomial) -> Result<Self, AsymptoticsError> {
        if p.degree().unwrap_or(0) == 0 {
            return Err(AsymptoticsError::NoSignChange {
                polynomial: p.to_string(),
            });
        }
        let square_free = p.is_square_free();
        let reduced = if square_free { p.clone() } else { p.square_free_part() };
        let ip = reduced.to_primitive_integer();
        let sturm = SturmChain::new(&reduced);
        Ok(Self {
            reduced,
            ip,
            square_free,
            sturm,
        })
    }

    pub fn polynomial(&self) -> &Polynomial {
        &self.reduced
    }

    pub fn sign(&self, x: &BigRational) -> i8 {
        self.ip.sign_at_rational(x)
    }

    /// Consecutive grid cells `[x_{i-1}, x_i]` on `(start, end]` across
    /// which the sign changes or that end at an exact root.
    fn scan(&self, start: &BigRational, end: &BigRational) -> Vec<(BigRational, BigRational)> {
        let step = (end - start) / BigRational::from_integer(GRID_POINTS.into());
        let mut out = Vec::new();
        let mut prev = start.clone();
        let mut prev_sign = self.sign(&prev);
        for i in 1..=GRID_POINTS {
            let x = start + &step * BigRational::from_integer(i.into());
            let s = self.sign(&x);
            if s == 0 {
                out.push((x.clone(), x.clone()));
            } else if prev_sign != 0 && s != prev_sign {
                out.push((prev.clone(), x.clone()));
            }
            prev = x;
            prev_sign = s;
        }
        out
    }

    /// Shrinks a sign-change bracket to width at most `tol`.
    pub fn bisect(&self, lo: &mut BigRational, hi: &mut BigRational, tol: &BigRational) {
        let two = BigRational::from_integer(2.into());
        let lo_sign = self.sign(lo);
        if lo_sign == 0 {
            *hi = lo.clone();
            return;
        }
        if self.sign(hi) == 0 {
            *lo = hi.clone();
            return;
        }
        while &(&*hi - &*lo) > tol {
            let mid = (&*lo + &*hi) / &two;
            let s = self.sign(&mid);
            if s == 0 {
                *lo = mid.clone();
                *hi = mid;
                return;
            }
            if s == lo_sign {
                *lo = mid;
            } else {
                *hi = mid;
            }
        }
    }

    /// Candidate roots in increasing order, each bracketed to width `tol`.
    pub fn positive_roots(&self, tol: &BigRational) -> Result<Vec<RootEnclosure>, AsymptoticsError> {
        let zero = BigRational::zero();
        let one = BigRational::one();
        let four = frac(4, 1);
        let mut cells = self.scan(&zero, &one);
        if cells.is_empty() {
            cells = self.scan(&one, &four);
        }
        if cells.is_empty() {
            return Err(AsymptoticsError::NoSignChange {
                polynomial: self.reduced.to_string(),
            });
        }
        Ok(cells
            .into_iter()
            .map(|(mut lo, mut hi)| {
                self.bisect(&mut lo, &mut hi, tol);
                let below = self.sturm.count_in(&zero, &lo);
                let inside = if lo == hi { 1 } else { self.sturm.count_in(&lo, &hi) };
                RootEnclosure {
                    sturm_certified: below == 0 && inside == 1,
                    square_free: self.square_free,
                    lo,
                    hi,
                }
            })
            .collect())
    }

    /// Tightens an existing enclosure.
    pub fn refine(&self, e: &mut RootEnclosure, tol: &BigRational) {
        let (mut lo, mut hi) = (e.lo.clone(), e.hi.clone());
        self.bisect(&mut lo, &mut hi, tol);
        e.lo = lo;
        e.hi = hi;
    }

    /// Distinct real roots in `(a, b]`.
    pub fn count_in(&self, a: &BigRational, b: &BigRational) -> usize {
        self.sturm.count_in(a, b)
    }
}

/// Smallest positive real root of `p`, bracketed to width `tol`.
///
/// The grid scan finds the first sign change of the square-free part; the
/// Sturm count then confirms no other root precedes it.
pub fn isolate_min_positive_root(p: &Polynomial, tol: &BigRational) -> Result<RootEnclosure, AsymptoticsError> {
    let finder = RootFinder::new(p)?;
    let roots = finder.positive_roots(tol)?;
    Ok(roots.into_iter().next().expect("scan returned at least one cell"))
}
