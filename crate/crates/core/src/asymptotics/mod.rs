//! Dominant singularities of the shape and structure generating functions
//! and the growth-rate tables built from them.

mod diagnostic;
mod equations;
pub mod reference;
mod render;
mod roots;

pub use diagnostic::{convergence_diagnostic, ConvergenceReport, MIN_TERMS};
pub use equations::{equation_registry, inner_function, EquationId, InnerEquation, InnerFunction};
pub use render::{render_decimal, render_enclosure};
pub use roots::{isolate_min_positive_root, RootEnclosure, RootFinder, SturmChain, GRID_POINTS};

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use thiserror::Error;

use crate::count::subexp_exponent;
use reference::PublishedRow;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AsymptoticsError {
    #[error("no sign change of {polynomial} found in (0, 4]")]
    NoSignChange { polynomial: String },
    #[error("every sign change of {equation} is a pole of the inner function")]
    OnlySpuriousRoots { equation: String },
    #[error("could not settle {digits}-digit rendering of {equation}")]
    Unrenderable { equation: String, digits: usize },
    #[error("diagnostic needs at least {need} terms, got {have}")]
    InsufficientTerms { have: usize, need: usize },
    #[error("unknown {kind} '{name}'")]
    UnknownName { kind: &'static str, name: String },
    #[error("invalid parameters: {0}")]
    InvalidParameters(String),
}

/// `1 / (2k - 2)`.
pub fn rho(k: usize) -> BigRational {
    assert!(k >= 2, "k must be at least 2");
    BigRational::new(BigInt::one(), BigInt::from(2 * k - 2))
}

pub fn rho_squared(k: usize) -> BigRational {
    let r = rho(k);
    &r * &r
}

/// `rho_k^2 / (1 - rho_k^2)`, the exact root of the `mu` equation.
pub fn mu_closed_form(k: usize) -> BigRational {
    let r2 = rho_squared(k);
    &r2 / (BigRational::one() - &r2)
}

/// Default bisection width.
pub fn default_tolerance() -> BigRational {
    BigRational::new(BigInt::one(), BigInt::from(10u64.pow(9)))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GrowthRecord {
    pub equation: InnerEquation,
    pub root: RootEnclosure,
    pub digits: usize,
    pub root_decimal: String,
    /// Rendering of `1 / root`.
    pub inverse_rate: String,
    pub subexp: BigRational,
}

const MAX_REFINEMENTS: usize = 64;

/// Whether the inner function's denominator vanishes on the enclosure.
fn is_pole(eq: &InnerEquation, e: &RootEnclosure) -> bool {
    let base = eq.function().denominator_base(eq.sigma);
    let base = if base.is_square_free() { base } else { base.square_free_part() };
    let sturm = SturmChain::new(&base);
    base.eval(&e.lo).is_zero() || sturm.count_in(&e.lo, &e.hi) > 0
}

/// Minimal positive solution of `eq`, rendered at `digits` decimals.
pub fn growth_record(eq: InnerEquation, tol: &BigRational, digits: usize) -> Result<GrowthRecord, AsymptoticsError> {
    let finder = RootFinder::new(&eq.clear_to_polynomial())?;
    let mut root = finder
        .positive_roots(tol)?
        .into_iter()
        .find(|e| !is_pole(&eq, e))
        .ok_or_else(|| AsymptoticsError::OnlySpuriousRoots {
            equation: eq.to_string(),
        })?;
    let sixteen = BigRational::from_integer(16.into());
    for _ in 0..MAX_REFINEMENTS {
        let root_decimal = render_enclosure(&root.lo, &root.hi, digits);
        let inverse = if root.lo.is_zero() {
            None
        } else {
            render_enclosure(&root.hi.recip(), &root.lo.recip(), digits)
        };
        if let (Some(root_decimal), Some(inverse_rate)) = (root_decimal, inverse) {
            return Ok(GrowthRecord {
                equation: eq,
                root,
                digits,
                root_decimal,
                inverse_rate,
                subexp: subexp_exponent(eq.k),
            });
        }
        if root.is_exact() {
            break;
        }
        let next = root.width() / &sixteen;
        finder.refine(&mut root, &next);
    }
    Err(AsymptoticsError::Unrenderable {
        equation: eq.to_string(),
        digits,
    })
}

/// The four growth-rate tables.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum TableId {
    Lv5,
    Lv1,
    Structures2,
    Structures3,
}

impl TableId {
    pub const ALL: [TableId; 4] = [Self::Lv5, Self::Lv1, Self::Structures2, Self::Structures3];

    pub fn name(self) -> &'static str {
        match self {
            TableId::Lv5 => "lv5",
            TableId::Lv1 => "lv1",
            TableId::Structures2 => "struct2",
            TableId::Structures3 => "struct3",
        }
    }

    pub fn from_name(name: &str) -> Option<Self> {
        Self::ALL.into_iter().find(|t| t.name() == name)
    }

    pub fn published(self) -> &'static [PublishedRow; 3] {
        match self {
            TableId::Lv5 => &reference::LV5_ROWS,
            TableId::Lv1 => &reference::LV1_ROWS,
            TableId::Structures2 => &reference::STRUCT2_ROWS,
            TableId::Structures3 => &reference::STRUCT3_ROWS,
        }
    }

    pub fn title(self) -> &'static str {
        match self {
            TableId::Lv5 => "inverse growth rates of lv5 shapes (zeta)",
            TableId::Lv1 => "inverse growth rates of lv1 shapes (chi)",
            TableId::Structures2 => "structures vs shapes, sigma = 2",
            TableId::Structures3 => "structures vs shapes, sigma = 3",
        }
    }
}

impl fmt::Display for TableId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone)]
pub struct GrowthRow {
    pub label: String,
    pub equation: EquationId,
    pub sigma: usize,
    pub records: Vec<GrowthRecord>,
}

#[derive(Debug, Clone)]
pub struct GrowthTable {
    pub id: TableId,
    pub ks: Vec<usize>,
    pub rows: Vec<GrowthRow>,
}

fn row_label(id: TableId, equation: EquationId, sigma: usize) -> String {
    match id {
        TableId::Lv5 | TableId::Lv1 => format!("sigma={sigma}"),
        _ => format!("{equation}^-1"),
    }
}

/// Recomputes one table over `k = 2..=8`.
pub fn growth_table(id: TableId, digits: usize) -> Result<GrowthTable, AsymptoticsError> {
    growth_table_with(id, digits, &default_tolerance())
}

pub fn growth_table_with(id: TableId, digits: usize, tol: &BigRational) -> Result<GrowthTable, AsymptoticsError> {
    let ks = reference::PUBLISHED_KS.to_vec();
    let rows = id
        .published()
        .iter()
        .map(|p| {
            let records = ks
                .iter()
                .map(|&k| growth_record(InnerEquation::new(p.equation, k, p.sigma)?, tol, digits))
                .collect::<Result<Vec<_>, _>>()?;
            Ok(GrowthRow {
                label: row_label(id, p.equation, p.sigma),
                equation: p.equation,
                sigma: p.sigma,
                records,
            })
        })
        .collect::<Result<Vec<_>, AsymptoticsError>>()?;
    Ok(GrowthTable { id, ks, rows })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    #[test]
    fn rho_values() {
        assert_eq!(rho(2), r(1, 2));
        assert_eq!(rho_squared(2), r(1, 4));
        assert_eq!(rho(3), r(1, 4));
        assert_eq!(rho_squared(4), r(1, 36));
    }

    #[test]
    fn mu_roots_are_closed_form() {
        assert_eq!(mu_closed_form(2), r(1, 3));
        assert_eq!(mu_closed_form(3), r(1, 15));
        for k in 2..=6 {
            let eq = InnerEquation::new(EquationId::Mu, k, 1).unwrap();
            let rec = growth_record(eq, &default_tolerance(), 5).unwrap();
            assert!(rec.root.lo <= mu_closed_form(k) && mu_closed_form(k) <= rec.root.hi);
            assert!(rec.root.sturm_certified);
        }
    }

    #[test]
    fn spot_values() {
        let tol = default_tolerance();
        let rec = |id, k, s| growth_record(InnerEquation::new(id, k, s).unwrap(), &tol, 5).unwrap().inverse_rate;
        assert_eq!(rec(EquationId::Zeta, 3, 2), "1.93496");
        assert_eq!(rec(EquationId::Chi, 3, 2), "2.31767");
        assert_eq!(rec(EquationId::Gamma, 2, 2), "1.96798");
        let zeta = InnerEquation::new(EquationId::Zeta, 2, 1).unwrap();
        let rec = growth_record(zeta, &tol, 5).unwrap();
        assert!(rec.root.lo > r(6, 10) && rec.root.hi < r(7, 10));
    }

    #[test]
    fn table_names() {
        for t in TableId::ALL {
            assert_eq!(TableId::from_name(t.name()), Some(t));
        }
        assert_eq!(TableId::from_name("table9"), None);
    }
}
