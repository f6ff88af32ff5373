//! Cross-checks between the brute-force, recursive, generating-function and
//! root-isolation layers, grouped into named suites.

use std::collections::BTreeSet;
use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{Signed, Zero};

use crate::asymptotics::{
    self, convergence_diagnostic, growth_record, growth_table_with, mu_closed_form, reference, rho_squared,
    EquationId, GrowthRecord, InnerEquation, TableId,
};
use crate::count::{f_matchings_dp, g_one_arcs, subexp_exponent, waterman_s2};
use crate::diagram::{Diagram, ShapeLevel, StructureParams};
use crate::enumerate::{cumulative_shape_census, histogram_family, shape_census, visit_family, EnumSpec, Family};
use crate::series::{self, to_count_table, to_counts};

/// Outcome of one comparison.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Check {
    pub criterion: u8,
    pub name: String,
    pub passed: bool,
    /// Reported but not counted toward its criterion.
    pub informational: bool,
    pub detail: String,
}

impl Check {
    fn new(criterion: u8, name: impl Into<String>, passed: bool, detail: impl Into<String>) -> Self {
        Self {
            criterion,
            name: name.into(),
            passed,
            informational: false,
            detail: detail.into(),
        }
    }

    fn info(mut self) -> Self {
        self.informational = true;
        self
    }

    fn from_error(criterion: u8, name: impl Into<String>, err: impl fmt::Display) -> Self {
        Self::new(criterion, name, false, format!("error: {err}"))
    }
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let status = match (self.passed, self.informational) {
            (true, false) => "PASS",
            (false, false) => "FAIL",
            (true, true) => "info-ok",
            (false, true) => "info-diff",
        };
        write!(f, "{status}\t{}", self.name)?;
        if !self.detail.is_empty() {
            write!(f, "\t{}", self.detail)?;
        }
        Ok(())
    }
}

/// Numeric knobs of the suites.
#[derive(Debug, Clone, PartialEq)]
pub struct Tolerances {
    /// Largest allowed `|rendered - reference|` for table entries.
    pub table_abs: BigRational,
    /// Bisection width for table roots.
    pub bisection: BigRational,
    /// Width used for irrational roots fed to the convergence diagnostic.
    pub diagnostic_root: BigRational,
    pub convergence_order: usize,
    pub convergence_band: f64,
    pub convergence_terms: usize,
    pub monotone_points: usize,
}

impl Default for Tolerances {
    fn default() -> Self {
        Self {
            table_abs: BigRational::new(5.into(), 1_000_000.into()),
            bisection: asymptotics::default_tolerance(),
            diagnostic_root: BigRational::new(1.into(), BigInt::from(10).pow(30)),
            convergence_order: 60,
            convergence_band: 0.10,
            convergence_terms: 10,
            monotone_points: 5,
        }
    }
}

/// The (k, σ) grid used by the oracle comparisons.
pub const ORACLE_GRID: [(usize, usize); 6] = [(2, 1), (2, 2), (2, 3), (3, 1), (3, 2), (3, 3)];
pub const ORACLE_MAX_N: usize = 12;

fn params(k: usize, sigma: usize) -> StructureParams {
    StructureParams::new(k, sigma).expect("grid parameters are valid")
}

fn big(xs: &[u64]) -> Vec<BigUint> {
    xs.iter().map(|&x| x.into()).collect()
}

fn first_mismatch(a: &[BigUint], b: &[BigUint]) -> Option<usize> {
    (0..a.len().max(b.len())).find(|&i| a.get(i) != b.get(i))
}

fn compare_sequences(criterion: u8, name: String, got: &[BigUint], want: &[BigUint]) -> Check {
    match first_mismatch(got, want) {
        None => Check::new(criterion, name, true, format!("{} terms equal", got.len())),
        Some(i) => Check::new(
            criterion,
            name,
            false,
            format!(
                "first difference at n={i}: {} vs {}",
                got.get(i).map_or("-".into(), |v| v.to_string()),
                want.get(i).map_or("-".into(), |v| v.to_string())
            ),
        ),
    }
}

fn parse_decimal(s: &str) -> BigRational {
    let (int, frac) = s.split_once('.').unwrap_or((s, ""));
    let digits: BigInt = format!("{int}{frac}").parse().expect("reference values are decimal");
    BigRational::new(digits, BigInt::from(10).pow(frac.len() as u32))
}

/// Every reference table entry against a fresh computation.
pub fn growth_tables(tol: &Tolerances) -> Vec<Check> {
    let mut out = Vec::new();
    for id in TableId::ALL {
        let table = match growth_table_with(id, 5, &tol.bisection) {
            Ok(t) => t,
            Err(e) => {
                out.push(Check::from_error(1, format!("table {id}"), e));
                continue;
            }
        };
        for (row, published) in table.rows.iter().zip(id.published()) {
            let mut bad = Vec::new();
            let mut certified = true;
            for (rec, want) in row.records.iter().zip(published.values) {
                let digits = reference::published_digits(want);
                let rendered = rendered_at(rec, digits, &tol.bisection);
                let diff = (parse_decimal(&rendered) - parse_decimal(want)).abs();
                if diff > tol.table_abs {
                    bad.push(format!("k={}: {rendered} vs {want}", rec.equation.k));
                }
                certified &= rec.root.sturm_certified;
            }
            let passed = bad.is_empty() && certified;
            let detail = if passed {
                "7 entries reproduced, roots certified minimal".to_string()
            } else if bad.is_empty() {
                "a root was not certified minimal".to_string()
            } else {
                bad.join("; ")
            };
            out.push(Check::new(1, format!("table {id} row {}", row.label), passed, detail));
        }
    }
    out
}

fn rendered_at(rec: &GrowthRecord, digits: usize, tol: &BigRational) -> String {
    if digits == rec.digits {
        return rec.inverse_rate.clone();
    }
    growth_record(rec.equation, tol, digits).map_or_else(|e| e.to_string(), |r| r.inverse_rate)
}

/// Strict ordering of the three rates in the structure tables.
pub fn rate_ordering(tol: &Tolerances) -> Vec<Check> {
    let mut out = Vec::new();
    for sigma in [2usize, 3] {
        let mut bad = Vec::new();
        for k in reference::PUBLISHED_KS {
            let rate = |id| {
                growth_record(InnerEquation::new(id, k, sigma).expect("valid"), &tol.bisection, 5)
                    .map(|r| r.root.midpoint())
            };
            match (rate(EquationId::Zeta), rate(EquationId::Chi), rate(EquationId::Gamma)) {
                // inverse rates ordered zeta < chi < gamma means roots ordered the other way
                (Ok(z), Ok(c), Ok(g)) if z > c && c > g => {}
                _ => bad.push(format!("k={k}")),
            }
        }
        let passed = bad.is_empty();
        out.push(
            Check::new(1, format!("zeta < chi < gamma at sigma={sigma}"), passed, bad.join(", ")).info(),
        );
    }
    out
}

/// Determinant and chamber-walk routes agree.
pub fn determinant_vs_walk(order: usize) -> Vec<Check> {
    (2..=6)
        .map(|k| {
            let name = format!("determinant = chamber walk, k={k}, N={order}");
            match series::matching_counts_via_determinant(k, order) {
                Ok(det) => compare_sequences(2, name, &det.values, &f_matchings_dp(k, order).values),
                Err(e) => Check::from_error(2, name, e),
            }
        })
        .collect()
}

fn brute_counts(family: Family, k: usize, sigma: usize, max_n: usize) -> Vec<BigUint> {
    (0..=max_n)
        .map(|n| {
            let spec = EnumSpec::new(family, n, params(k, sigma));
            let mut c = 0u64;
            visit_family(&spec, |_| c += 1).expect("within cap");
            BigUint::from(c)
        })
        .collect()
}

/// Structure counts from the closed form against exhaustive search.
pub fn structures() -> Vec<Check> {
    let mut out = Vec::new();
    for (k, sigma) in ORACLE_GRID {
        let name = format!("T_{{{k},{sigma}}}(n) = brute force, n <= {ORACLE_MAX_N}");
        match series::t_series(k, sigma, ORACLE_MAX_N).and_then(|s| to_counts(&s)) {
            Ok(t) => out.push(compare_sequences(3, name, &t, &brute_counts(Family::Structures, k, sigma, ORACLE_MAX_N))),
            Err(e) => out.push(Check::from_error(3, name, e)),
        }
    }
    let name = "T_{2,1}(n) = S_2(n), n <= 20".to_string();
    match series::t_series(2, 1, 20).and_then(|s| to_counts(&s)) {
        Ok(t) => out.push(compare_sequences(3, name, &t, &waterman_s2(20))),
        Err(e) => out.push(Check::from_error(3, name, e)),
    }
    out.push(cores_by_arcs(2, 10));
    out.push(cores_by_arcs(3, 10));
    out
}

fn cores_by_arcs(k: usize, max_n: usize) -> Check {
    let name = format!("C_{k}(n,h) = brute-force cores, n <= {max_n}");
    let table = match series::c_bivariate(k, max_n).and_then(|s| to_count_table(&s)) {
        Ok(t) => t,
        Err(e) => return Check::from_error(3, name, e).info(),
    };
    for (n, row) in table.iter().enumerate() {
        let spec = EnumSpec::new(Family::Cores, n, params(k, 1));
        let hist = histogram_family(&spec, |l| l.arc_count()).expect("within cap");
        let width = row.len().max(hist.len());
        for h in 0..width {
            let got = row.get(h).cloned().unwrap_or_default();
            let want = BigUint::from(hist.get(h).copied().unwrap_or(0));
            if got != want {
                return Check::new(3, name, false, format!("n={n} h={h}: {got} vs {want}")).info();
            }
        }
    }
    Check::new(3, name, true, "all entries equal").info()
}

fn census_counts(k: usize, sigma: usize, level: ShapeLevel, max_n: usize) -> Vec<BigUint> {
    (0..=max_n)
        .map(|n| BigUint::from(shape_census(n, params(k, sigma), level).expect("within cap").count()))
        .collect()
}

/// Shape counts from the closed forms against exhaustive censuses.
pub fn shapes() -> Vec<Check> {
    let mut out = Vec::new();
    for (k, sigma) in ORACLE_GRID {
        let p = params(k, sigma);
        let name = format!("Lv5_{{{k},{sigma}}} = lv5 census, n <= {ORACLE_MAX_N}");
        match series::lv5_series(k, sigma, ORACLE_MAX_N).and_then(|s| to_counts(&s)) {
            Ok(v) => out.push(compare_sequences(4, name, &v, &census_counts(k, sigma, ShapeLevel::Lv5, ORACLE_MAX_N))),
            Err(e) => out.push(Check::from_error(4, name, e)),
        }
        let formula = series::lv1_series(k, sigma, ORACLE_MAX_N).and_then(|s| to_counts(&s));
        let name = format!("Lv1_{{{k},{sigma}}} = lv1 census of length n, n <= {ORACLE_MAX_N}");
        match &formula {
            Ok(v) => out.push(compare_sequences(4, name, v, &census_counts(k, sigma, ShapeLevel::Lv1, ORACLE_MAX_N))),
            Err(e) => out.push(Check::from_error(4, name, e)),
        }
        if let Ok(v) = &formula {
            let name = format!("Lv1_{{{k},{sigma}}} = lv1 census of length <= n, n <= {ORACLE_MAX_N}");
            out.push(compare_sequences(4, name, v, &cumulative_lv1(p, ORACLE_MAX_N)).info());
        }
    }
    for k in [2, 3] {
        out.push(stack_free_matchings(k, ORACLE_MAX_N / 2));
    }
    out.push(j_support(2, 24));
    out.push(j_support(3, 24));
    out
}

fn cumulative_lv1(p: StructureParams, max_n: usize) -> Vec<BigUint> {
    (0..=max_n)
        .map(|n| BigUint::from(cumulative_shape_census(n, p, ShapeLevel::Lv1).expect("within cap").count()))
        .collect()
}

fn stack_free_matchings(k: usize, max_half: usize) -> Check {
    let name = format!("I_{k}(z,u) = stack-free matchings by 1-arcs, 2n <= {}", 2 * max_half);
    let table = match series::i_bivariate(k, max_half).and_then(|s| to_count_table(&s)) {
        Ok(t) => t,
        Err(e) => return Check::from_error(4, name, e),
    };
    let uni = match series::i_series(k, max_half).and_then(|s| to_counts(&s)) {
        Ok(v) => v,
        Err(e) => return Check::from_error(4, name, e),
    };
    for n in 0..=max_half {
        let spec = EnumSpec::new(Family::PerfectMatchings, 2 * n, params(k, 1));
        let mut hist = vec![0u64; n + 1];
        visit_family(&spec, |leaf| {
            let d = leaf.to_diagram();
            if d.stacks().iter().all(|s| s.size == 1) {
                hist[d.one_arc_count()] += 1;
            }
        })
        .expect("within cap");
        let total: u64 = hist.iter().sum();
        if uni[n] != BigUint::from(total) {
            return Check::new(4, name, false, format!("i_{k}({n}) = {} vs {total}", uni[n]));
        }
        for (m, &want) in hist.iter().enumerate() {
            let got = table[n].get(m).cloned().unwrap_or_default();
            if got != BigUint::from(want) {
                return Check::new(4, name, false, format!("n={n} m={m}: {got} vs {want}"));
            }
        }
        if table[n].len() > hist.len() && table[n][hist.len()..].iter().any(|c| !c.is_zero()) {
            return Check::new(4, name, false, format!("n={n}: marker degree exceeds n"));
        }
    }
    Check::new(4, name, true, "univariate and bivariate counts equal")
}

fn j_support(k: usize, order: usize) -> Check {
    let name = format!("J_{k}(z,u) vanishes outside 2h <= n <= 4h+1, n <= {order}");
    let table = match series::j_bivariate(k, order).and_then(|s| to_count_table(&s)) {
        Ok(t) => t,
        Err(e) => return Check::from_error(4, name, e),
    };
    for (n, row) in table.iter().enumerate() {
        for (h, c) in row.iter().enumerate() {
            let inside = 2 * h <= n && n <= 4 * h + 1;
            if !inside && !c.is_zero() {
                return Check::new(4, name, false, format!("[z^{n} u^{h}] = {c}"));
            }
        }
    }
    Check::new(4, name, true, "support respected")
}

/// The 1-arc recursion on brute-force 1-arc tables and the bivariate GF.
pub fn lemma1(max_brute: usize, max_gf: usize) -> Vec<Check> {
    let mut out = Vec::new();
    for k in [2usize, 3, 4] {
        let name = format!("1-arc recursion on brute-force g_{k}(n,m), n <= {max_brute}");
        let tables: Vec<Vec<u64>> = (0..=max_brute)
            .map(|n| {
                let spec = EnumSpec::new(Family::PerfectMatchings, 2 * n, params(k, 1));
                let mut hist = histogram_family(&spec, |l| l.one_arc_count()).expect("within cap");
                hist.truncate(n + 1);
                hist
            })
            .collect();
        let g = |n: usize, m: usize| -> u128 { tables[n].get(m).copied().unwrap_or(0) as u128 };
        let mut bad = None;
        'outer: for n in 0..max_brute {
            for m in 0..=n {
                let lhs = (m as u128 + 1) * g(n + 1, m + 1);
                let rhs = (m as u128 + 1) * g(n, m + 1) + (2 * n as u128 + 1 - m as u128) * g(n, m);
                if lhs != rhs {
                    bad = Some(format!("n={n} m={m}: {lhs} vs {rhs}"));
                    break 'outer;
                }
            }
        }
        let recursion = g_one_arcs(k, max_brute);
        if bad.is_none() {
            for (n, row) in tables.iter().enumerate() {
                if recursion.rows[n] != big(row) {
                    bad = Some(format!("table row n={n} differs from recursion"));
                    break;
                }
            }
        }
        out.push(match bad {
            None => Check::new(5, name, true, "identity holds and tables equal"),
            Some(d) => Check::new(5, name, false, d),
        });
    }
    for k in [2usize, 3, 4] {
        let name = format!("G_{k}(x,y) = recursion table, n <= {max_gf}");
        let table = match series::g_bivariate(k, max_gf).and_then(|s| to_count_table(&s)) {
            Ok(t) => t,
            Err(e) => {
                out.push(Check::from_error(5, name, e));
                continue;
            }
        };
        let rec = g_one_arcs(k, max_gf);
        let bad = (0..=max_gf).find(|&n| {
            let width = table[n].len().max(n + 1);
            (0..width).any(|m| table[n].get(m).cloned().unwrap_or_default() != rec.get(n, m))
        });
        out.push(match bad {
            None => Check::new(5, name, true, "all entries equal"),
            Some(n) => Check::new(5, name, false, format!("row n={n} differs")),
        });
    }
    out
}

/// Exact closed-form identities for the singular points.
pub fn singularities(tol: &Tolerances) -> Vec<Check> {
    let mut out = Vec::new();
    let third = BigRational::new(1.into(), 3.into());
    let fifteenth = BigRational::new(1.into(), 15.into());
    out.push(Check::new(6, "mu_2 = 1/3", mu_closed_form(2) == third, format!("{}", mu_closed_form(2))));
    out.push(Check::new(6, "mu_3 = 1/15", mu_closed_form(3) == fifteenth, format!("{}", mu_closed_form(3))));
    for (k, want) in [(2usize, &third), (3, &fifteenth)] {
        let eq = InnerEquation::new(EquationId::Mu, k, 1).expect("valid");
        let exact = eq.clear_to_polynomial().eval(want).is_zero();
        let isolated = growth_record(eq, &tol.bisection, 5)
            .map(|r| r.root.lo <= *want && *want <= r.root.hi)
            .unwrap_or(false);
        out.push(Check::new(
            6,
            format!("mu equation for k={k} vanishes at {want} and isolation brackets it"),
            exact && isolated,
            "",
        ));
    }
    for sp in &reference::SINGULAR_POLYNOMIALS {
        let r2 = rho_squared(sp.k);
        let member = sp.root_set().contains(&r2);
        let root = sp.polynomial().eval(&r2).is_zero();
        out.push(Check::new(
            6,
            format!("rho_{}^2 = {r2} in R_{}", sp.k, sp.k),
            member && root,
            if member && root { String::new() } else { format!("member={member} root={root}") },
        ));
    }
    out
}

type ConvergenceCase = (String, Result<Vec<BigUint>, String>, Option<BigRational>, usize);

/// Normalized-ratio convergence for the four reference sequences.
pub fn convergence(tol: &Tolerances) -> Vec<Check> {
    let n = tol.convergence_order;
    let quarter = BigRational::new(1.into(), 4.into());
    let sixteenth = BigRational::new(1.into(), 16.into());
    let mu_prime = growth_record(
        InnerEquation::new(EquationId::MuPrime, 2, 1).expect("valid"),
        &tol.diagnostic_root,
        10,
    );
    let mut cases: Vec<ConvergenceCase> = vec![
        ("f_2(2n,0), root 1/4".into(), Ok(f_matchings_dp(2, n).values), Some(quarter), 2),
        ("f_3(2n,0), root 1/16".into(), Ok(f_matchings_dp(3, n).values), Some(sixteenth), 3),
        (
            "i_2(n), root mu_2".into(),
            series::i_series(2, n).and_then(|s| to_counts(&s)).map_err(|e| e.to_string()),
            Some(mu_closed_form(2)),
            2,
        ),
    ];
    cases.push((
        "j_2(n), root mu'_2".into(),
        series::j_series(2, n).and_then(|s| to_counts(&s)).map_err(|e| e.to_string()),
        mu_prime.as_ref().ok().map(|r| r.root.midpoint()),
        2,
    ));
    cases
        .into_iter()
        .map(|(name, seq, root, k)| {
            let name = format!("{name}, N={n}");
            let (seq, root) = match (seq, root) {
                (Ok(s), Some(r)) => (s, r),
                (Err(e), _) => return Check::from_error(7, name, e),
                (_, None) => return Check::new(7, name, false, "root isolation failed"),
            };
            match convergence_diagnostic(&seq, &root, &subexp_exponent(k)) {
                Ok(rep) => {
                    let dev = rep.tail_deviation(tol.convergence_terms);
                    let mono = rep.tail_decreasing(tol.monotone_points);
                    let trend = rep.tail_trend(tol.convergence_terms);
                    let passed = dev <= tol.convergence_band && mono && trend < 0.0;
                    Check::new(
                        7,
                        name,
                        passed,
                        format!("max |ratio-1| over last {} = {dev:.3e}, last {} decreasing = {mono}, slope = {trend:.2e}",
                            tol.convergence_terms, tol.monotone_points),
                    )
                }
                Err(e) => Check::from_error(7, name, e),
            }
        })
        .collect()
}

/// Core idempotence, the two lv5 routes and the inflation round trips.
pub fn maps(max_n: usize) -> Vec<Check> {
    let mut out = Vec::new();
    for k in [2usize, 3] {
        let mut bad: Option<String> = None;
        let mut seen = 0u64;
        for n in 0..=max_n {
            let spec = EnumSpec::new(Family::PartialDiagrams, n, params(k, 1));
            visit_family(&spec, |leaf| {
                if bad.is_some() {
                    return;
                }
                seen += 1;
                let d = leaf.to_diagram();
                let c = d.core();
                if c.core() != c
                    || c.stacks().len() != d.stacks().len()
                    || c.isolated_count() != d.isolated_count()
                    || c.crossing_number() != d.crossing_number()
                {
                    bad = Some(d.to_string());
                }
            })
            .expect("within cap");
        }
        out.push(match bad {
            None => Check::new(8, format!("core map idempotent and invariant, k={k}, n <= {max_n}"), true, format!("{seen} diagrams")),
            Some(d) => Check::new(8, format!("core map idempotent and invariant, k={k}, n <= {max_n}"), false, d),
        });
    }
    for k in [2usize, 3] {
        for sigma in 1..=3 {
            out.push(routes_and_inflations(k, sigma, max_n));
        }
    }
    out
}

fn routes_and_inflations(k: usize, sigma: usize, max_n: usize) -> Check {
    let p = params(k, sigma);
    let name = format!("lv5 routes agree, inflations round-trip, k={k} sigma={sigma}, n <= {max_n}");
    let mut lv5: BTreeSet<Diagram> = BTreeSet::new();
    let mut lv1: BTreeSet<Diagram> = BTreeSet::new();
    let mut bad: Option<String> = None;
    for n in 0..=max_n {
        visit_family(&EnumSpec::new(Family::Structures, n, p), |leaf| {
            if bad.is_some() {
                return;
            }
            let d = leaf.to_diagram();
            let (Ok(a), Ok(b), Ok(c)) = (d.lv5_shape(p), d.lv5_shape_via_core(p), d.lv1_shape(p)) else {
                bad = Some(format!("shape map rejected structure {d}"));
                return;
            };
            if a != b {
                bad = Some(format!("{d}: {a} vs {b}"));
                return;
            }
            lv5.insert(a);
            lv1.insert(c);
        })
        .expect("within cap");
    }
    if bad.is_none() {
        for s in &lv5 {
            let h = s.arc_count();
            let m = s.one_arc_count();
            let inflated = s.minimal_lv5_inflation(sigma);
            let ok = inflated.is_structure(p)
                && inflated.lv5_shape(p).as_ref() == Ok(s)
                && inflated.n() == 2 * sigma * h + m;
            if !ok {
                bad = Some(format!("lv5 shape {s} inflates to {inflated}"));
                break;
            }
        }
    }
    if bad.is_none() {
        for s in &lv1 {
            let h = s.arc_count();
            let inflated = s.minimal_lv1_inflation(sigma);
            let ok = inflated.is_structure(p)
                && inflated.lv1_shape(p).as_ref() == Ok(s)
                && inflated.n() == 2 * h * (sigma - 1) + s.n()
                && 2 * h <= s.n()
                && s.n() <= 4 * h + 1;
            if !ok {
                bad = Some(format!("lv1 shape {s} inflates to {inflated}"));
                break;
            }
        }
    }
    match bad {
        None => Check::new(8, name, true, format!("{} lv5 and {} lv1 shapes", lv5.len(), lv1.len())),
        Some(d) => Check::new(8, name, false, d),
    }
}

/// Named groups of checks.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Suite {
    All,
    OneArcs,
    Determinant,
    Shapes,
    Tables,
}

impl Suite {
    pub const ALL: [Suite; 5] = [Self::All, Self::OneArcs, Self::Determinant, Self::Shapes, Self::Tables];

    pub fn name(self) -> &'static str {
        match self {
            Suite::All => "all",
            Suite::OneArcs => "lemma1",
            Suite::Determinant => "determinant",
            Suite::Shapes => "shapes",
            Suite::Tables => "tables",
        }
    }

    pub fn from_name(name: &str) -> Option<Self> {
        Self::ALL.into_iter().find(|s| s.name() == name)
    }
}

pub fn run_suite(suite: Suite, tol: &Tolerances) -> Vec<Check> {
    let mut out = Vec::new();
    let all = suite == Suite::All;
    if all || suite == Suite::Tables {
        out.extend(growth_tables(tol));
        out.extend(rate_ordering(tol));
    }
    if all || suite == Suite::Determinant {
        out.extend(determinant_vs_walk(25));
    }
    if all || suite == Suite::Shapes {
        out.extend(structures());
        out.extend(shapes());
    }
    if all || suite == Suite::OneArcs {
        out.extend(lemma1(8, 20));
    }
    if all || suite == Suite::Tables {
        out.extend(singularities(tol));
        out.extend(convergence(tol));
    }
    if all || suite == Suite::Shapes {
        out.extend(maps(ORACLE_MAX_N));
    }
    out
}

/// Whether every counted check passed.
pub fn all_passed(checks: &[Check]) -> bool {
    checks.iter().filter(|c| !c.informational).all(|c| c.passed)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn decimal_parsing() {
        assert_eq!(parse_decimal("1.25"), BigRational::new(5.into(), 4.into()));
        assert_eq!(parse_decimal("10.7804"), BigRational::new(107804.into(), 10000.into()));
        assert_eq!(parse_decimal("3"), BigRational::from_integer(3.into()));
    }

    #[test]
    fn suite_names() {
        for s in Suite::ALL {
            assert_eq!(Suite::from_name(s.name()), Some(s));
        }
        assert_eq!(Suite::from_name("nope"), None);
    }

    #[test]
    fn small_suites_pass() {
        assert!(all_passed(&determinant_vs_walk(8)));
        assert!(all_passed(&lemma1(5, 8)));
        assert!(all_passed(&maps(7)));
    }

    #[test]
    fn check_rendering() {
        let c = Check::new(3, "x", false, "d");
        assert_eq!(c.to_string(), "FAIL\tx\td");
        assert_eq!(Check::new(3, "x", true, "").info().to_string(), "info-ok\tx");
    }
}
