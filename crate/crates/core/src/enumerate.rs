//! Exhaustive backtracking generation of diagram families.
//!
//! This is the brute-force layer that every counting formula is checked
//! against. Vertices are processed left to right; at each vertex the search
//! either leaves it isolated, closes it against an open vertex, or opens a
//! new arc. The k-noncrossing condition is enforced whenever an arc closes.

use std::collections::BTreeSet;

use thiserror::Error;

use crate::diagram::{ArcPair, Diagram, ShapeLevel, StructureParams};

pub const DEFAULT_CAP: usize = 20;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Family {
    /// k-noncrossing perfect matchings (no isolated vertices).
    PerfectMatchings,
    /// All k-noncrossing diagrams, 1-arcs allowed.
    PartialDiagrams,
    /// k-noncrossing, σ-canonical structures.
    Structures,
    /// Structures in which every stack has size exactly one; σ is ignored.
    Cores,
}

impl Family {
    pub fn name(self) -> &'static str {
        match self {
            Family::PerfectMatchings => "matchings",
            Family::PartialDiagrams => "partial",
            Family::Structures => "structures",
            Family::Cores => "cores",
        }
    }

    pub fn from_name(name: &str) -> Option<Self> {
        match name {
            "matchings" | "perfect-matchings" => Some(Family::PerfectMatchings),
            "partial" | "partial-diagrams" => Some(Family::PartialDiagrams),
            "structures" => Some(Family::Structures),
            "cores" => Some(Family::Cores),
            _ => None,
        }
    }

    fn allows_isolated(self) -> bool {
        self != Family::PerfectMatchings
    }

    fn allows_one_arcs(self) -> bool {
        matches!(self, Family::PerfectMatchings | Family::PartialDiagrams)
    }

    /// Whether `d` belongs to the family on its own vertex count.
    pub fn contains(self, d: &Diagram, params: StructureParams) -> bool {
        if !d.is_k_noncrossing(params.k()) {
            return false;
        }
        match self {
            Family::PerfectMatchings => d.is_perfect_matching(),
            Family::PartialDiagrams => true,
            Family::Structures => d.is_structure(params),
            Family::Cores => d.one_arc_count() == 0 && d.stacks().iter().all(|s| s.size == 1),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Error)]
pub enum EnumError {
    #[error("n = {n} exceeds the enumeration cap {cap}")]
    CapExceeded { n: usize, cap: usize },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct EnumSpec {
    pub n: usize,
    pub params: StructureParams,
    pub family: Family,
    pub cap: usize,
}

impl EnumSpec {
    pub fn new(family: Family, n: usize, params: StructureParams) -> Self {
        Self {
            n,
            params,
            family,
            cap: DEFAULT_CAP,
        }
    }

    pub fn with_cap(mut self, cap: usize) -> Self {
        self.cap = cap;
        self
    }

    fn check_cap(&self) -> Result<(), EnumError> {
        if self.n > self.cap {
            Err(EnumError::CapExceeded {
                n: self.n,
                cap: self.cap,
            })
        } else {
            Ok(())
        }
    }
}

/// A complete member handed to visitors. Arcs are in closing order.
pub struct Leaf<'a> {
    pub n: usize,
    pub arcs: &'a [ArcPair],
    partner: &'a [usize],
}

impl Leaf<'_> {
    pub fn arc_count(&self) -> usize {
        self.arcs.len()
    }

    pub fn one_arc_count(&self) -> usize {
        self.arcs.iter().filter(|&&(i, j)| j == i + 1).count()
    }

    pub fn isolated_count(&self) -> usize {
        self.n - 2 * self.arcs.len()
    }

    pub fn to_diagram(&self) -> Diagram {
        Diagram::from_valid(self.n, self.arcs.to_vec())
    }

    fn min_stack_at_least(&self, sigma: usize) -> bool {
        if sigma <= 1 {
            return true;
        }
        let p = self.partner;
        self.arcs.iter().all(|&(i, j)| {
            let outer = i > 1 && p[i - 1] == j + 1;
            if outer {
                return true;
            }
            let mut size = 1;
            while size < sigma && i + size < j - size && p[i + size] == j - size {
                size += 1;
            }
            size >= sigma
        })
    }
}

const NONE: usize = 0;

struct Search<'f, F: FnMut(&Leaf<'_>)> {
    n: usize,
    k: usize,
    sigma: usize,
    family: Family,
    open: Vec<usize>,
    closed: Vec<ArcPair>,
    partner: Vec<usize>,
    visit: &'f mut F,
}

impl<F: FnMut(&Leaf<'_>)> Search<'_, F> {
    /// Whether closing `(i, j)` keeps every crossing below `k` arcs. Only
    /// crossings whose last arc is `(i, j)` are new; their other members are
    /// closed arcs `(a, b)` with `a < i < b`, and any two of those cross
    /// exactly when they increase in both endpoints.
    fn closes_without_k_crossing(&self, i: usize) -> bool {
        if self.k == 2 {
            return !self.closed.iter().any(|&(a, b)| a < i && i < b);
        }
        let mut candidates: Vec<ArcPair> = self
            .closed
            .iter()
            .copied()
            .filter(|&(a, b)| a < i && i < b)
            .collect();
        if candidates.len() + 1 < self.k {
            return true;
        }
        candidates.sort_unstable();
        let mut tails: Vec<usize> = Vec::new();
        for &(_, b) in &candidates {
            let at = tails.partition_point(|&t| t < b);
            if at == tails.len() {
                tails.push(b);
            } else {
                tails[at] = b;
            }
        }
        tails.len() + 1 < self.k
    }

    fn run(&mut self, v: usize) {
        if v > self.n {
            if !self.open.is_empty() {
                return;
            }
            let leaf = Leaf {
                n: self.n,
                arcs: &self.closed,
                partner: &self.partner,
            };
            if self.family == Family::Structures && !leaf.min_stack_at_least(self.sigma) {
                return;
            }
            (self.visit)(&leaf);
            return;
        }
        let remaining = self.n - v + 1;

        // isolated
        if self.family.allows_isolated() && remaining > self.open.len() {
            self.run(v + 1);
        }

        // close against an open vertex
        for idx in (0..self.open.len()).rev() {
            let i = self.open[idx];
            if i + 1 == v && !self.family.allows_one_arcs() {
                continue;
            }
            if self.family == Family::Cores && self.partner[i + 1] == v - 1 && i + 1 < v - 1 {
                continue;
            }
            if !self.closes_without_k_crossing(i) {
                continue;
            }
            self.open.remove(idx);
            self.closed.push((i, v));
            self.partner[i] = v;
            self.partner[v] = i;
            self.run(v + 1);
            self.partner[i] = NONE;
            self.partner[v] = NONE;
            self.closed.pop();
            self.open.insert(idx, i);
        }

        // open
        if remaining > self.open.len() + 1 {
            self.open.push(v);
            self.run(v + 1);
            self.open.pop();
        }
    }
}

/// Streams every member of the family to `visit`, in search order.
pub fn visit_family<F: FnMut(&Leaf<'_>)>(spec: &EnumSpec, mut visit: F) -> Result<(), EnumError> {
    spec.check_cap()?;
    if spec.family == Family::PerfectMatchings && spec.n % 2 == 1 {
        return Ok(());
    }
    let mut search = Search {
        n: spec.n,
        k: spec.params.k(),
        sigma: spec.params.sigma(),
        family: spec.family,
        open: Vec::with_capacity(spec.n),
        closed: Vec::with_capacity(spec.n / 2),
        partner: vec![NONE; spec.n + 2],
        visit: &mut visit,
    };
    search.run(1);
    Ok(())
}

/// Every member of the family, sorted by canonical arc list.
pub fn enumerate_family(spec: &EnumSpec) -> Result<Vec<Diagram>, EnumError> {
    let mut out = Vec::new();
    visit_family(spec, |leaf| out.push(leaf.to_diagram()))?;
    out.sort_unstable_by(|a, b| a.arcs().cmp(b.arcs()));
    Ok(out)
}

/// Optional restrictions for [`count_family`].
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct CountFilter {
    pub arcs: Option<usize>,
    pub one_arcs: Option<usize>,
    pub isolated: Option<usize>,
}

impl CountFilter {
    fn accepts(&self, leaf: &Leaf<'_>) -> bool {
        self.arcs.is_none_or(|h| leaf.arc_count() == h)
            && self.isolated.is_none_or(|l| leaf.isolated_count() == l)
            && self.one_arcs.is_none_or(|m| leaf.one_arc_count() == m)
    }
}

pub fn count_family(spec: &EnumSpec, filter: CountFilter) -> Result<u64, EnumError> {
    let mut count = 0u64;
    visit_family(spec, |leaf| {
        if filter.accepts(leaf) {
            count += 1;
        }
    })?;
    Ok(count)
}

/// Counts members by a statistic, returning `hist[stat]`.
pub fn histogram_family(
    spec: &EnumSpec,
    stat: impl Fn(&Leaf<'_>) -> usize,
) -> Result<Vec<u64>, EnumError> {
    let mut hist = vec![0u64; spec.n + 1];
    visit_family(spec, |leaf| hist[stat(leaf)] += 1)?;
    Ok(hist)
}

/// Distinct shapes induced by all structures of one length.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ShapeCensus {
    pub level: ShapeLevel,
    pub n: usize,
    pub shapes: BTreeSet<String>,
}

impl ShapeCensus {
    pub fn count(&self) -> usize {
        self.shapes.len()
    }

    fn merge(&mut self, other: ShapeCensus) {
        self.shapes.extend(other.shapes);
    }
}

fn census_exact(n: usize, params: StructureParams, level: ShapeLevel, cap: usize) -> Result<ShapeCensus, EnumError> {
    let spec = EnumSpec::new(Family::Structures, n, params).with_cap(cap);
    let mut shapes = BTreeSet::new();
    visit_family(&spec, |leaf| {
        let d = leaf.to_diagram();
        let shape = d.shape(level, params).expect("enumerated structures are valid");
        shapes.insert(shape.to_string());
    })?;
    Ok(ShapeCensus { level, n, shapes })
}

/// Shapes induced by structures of length exactly `n`.
pub fn shape_census(n: usize, params: StructureParams, level: ShapeLevel) -> Result<ShapeCensus, EnumError> {
    census_exact(n, params, level, DEFAULT_CAP)
}

pub fn shape_census_capped(
    n: usize,
    params: StructureParams,
    level: ShapeLevel,
    cap: usize,
) -> Result<ShapeCensus, EnumError> {
    census_exact(n, params, level, cap)
}

/// Shapes induced by structures of any length `0..=n`.
pub fn cumulative_shape_census(
    n: usize,
    params: StructureParams,
    level: ShapeLevel,
) -> Result<ShapeCensus, EnumError> {
    let mut total = ShapeCensus {
        level,
        n,
        shapes: BTreeSet::new(),
    };
    for len in 0..=n {
        total.merge(shape_census(len, params, level)?);
    }
    Ok(total)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(k: usize, sigma: usize) -> StructureParams {
        StructureParams::new(k, sigma).unwrap()
    }

    fn catalan(n: u64) -> u64 {
        // independent recursive count
        if n == 0 {
            return 1;
        }
        (0..n).map(|i| catalan(i) * catalan(n - 1 - i)).sum()
    }

    #[test]
    fn noncrossing_matchings_are_catalan() {
        for n in 0..=6 {
            let spec = EnumSpec::new(Family::PerfectMatchings, 2 * n, p(2, 1));
            assert_eq!(count_family(&spec, CountFilter::default()).unwrap(), catalan(n as u64));
        }
    }

    #[test]
    fn three_noncrossing_matchings_on_six() {
        let spec = EnumSpec::new(Family::PerfectMatchings, 6, p(3, 1));
        let all = enumerate_family(&spec).unwrap();
        assert_eq!(all.len(), 14);
        let three_crossing: Diagram = "6; 1-4, 2-5, 3-6".parse().unwrap();
        assert!(!all.contains(&three_crossing));
        let spec4 = EnumSpec::new(Family::PerfectMatchings, 6, p(4, 1));
        assert_eq!(enumerate_family(&spec4).unwrap().len(), 15);
    }

    #[test]
    fn tiny_structures() {
        let spec = EnumSpec::new(Family::Structures, 3, p(2, 1));
        let all = enumerate_family(&spec).unwrap();
        assert_eq!(all, vec![Diagram::empty(3), "3; 1-3".parse().unwrap()]);
        let odd = EnumSpec::new(Family::PerfectMatchings, 5, p(3, 1));
        assert!(enumerate_family(&odd).unwrap().is_empty());
        let zero = EnumSpec::new(Family::Structures, 0, p(2, 3));
        assert_eq!(enumerate_family(&zero).unwrap(), vec![Diagram::empty(0)]);
    }

    #[test]
    fn one_arc_filter() {
        let spec = EnumSpec::new(Family::PerfectMatchings, 4, p(2, 1));
        let f = CountFilter {
            one_arcs: Some(1),
            ..Default::default()
        };
        assert_eq!(count_family(&spec, f).unwrap(), 1);
    }

    #[test]
    fn cores_of_length_four() {
        let spec = EnumSpec::new(Family::Cores, 4, p(2, 1));
        let all = enumerate_family(&spec).unwrap();
        let with_one: Vec<String> = all
            .iter()
            .filter(|d| d.arc_count() == 1)
            .map(|d| d.to_string())
            .collect();
        assert_eq!(with_one, vec!["4; 1-3", "4; 1-4", "4; 2-4"]);
        let f = CountFilter {
            arcs: Some(1),
            ..Default::default()
        };
        assert_eq!(count_family(&spec, f).unwrap(), 3);
    }

    #[test]
    fn output_is_sorted_and_unique() {
        let spec = EnumSpec::new(Family::PartialDiagrams, 7, p(3, 1));
        let all = enumerate_family(&spec).unwrap();
        for w in all.windows(2) {
            assert!(w[0].arcs() < w[1].arcs());
        }
    }

    #[test]
    fn cap_is_enforced() {
        let spec = EnumSpec::new(Family::Structures, 21, p(2, 1));
        assert_eq!(
            enumerate_family(&spec).unwrap_err(),
            EnumError::CapExceeded { n: 21, cap: 20 }
        );
        let raised = EnumSpec::new(Family::Structures, 3, p(2, 1)).with_cap(2);
        assert!(count_family(&raised, CountFilter::default()).is_err());
    }

    #[test]
    fn emitted_members_satisfy_their_predicate() {
        for family in [
            Family::PerfectMatchings,
            Family::PartialDiagrams,
            Family::Structures,
            Family::Cores,
        ] {
            for (k, sigma) in [(2, 1), (3, 2), (4, 1)] {
                for n in 0..=9 {
                    let spec = EnumSpec::new(family, n, p(k, sigma));
                    for d in enumerate_family(&spec).unwrap() {
                        assert!(family.contains(&d, p(k, sigma)), "{family:?} {d}");
                    }
                }
            }
        }
    }

    #[test]
    fn partial_diagram_count_is_total_when_k_is_large() {
        // all involutions of [n]: 1, 1, 2, 4, 10, 26, 76, 232
        let involutions = [1u64, 1, 2, 4, 10, 26, 76, 232];
        for (n, &want) in involutions.iter().enumerate() {
            let spec = EnumSpec::new(Family::PartialDiagrams, n, p(9, 1));
            assert_eq!(count_family(&spec, CountFilter::default()).unwrap(), want);
        }
    }

    #[test]
    fn census_of_empty_length() {
        for level in [ShapeLevel::Lv1, ShapeLevel::Lv5] {
            let c = shape_census(0, p(3, 2), level).unwrap();
            assert_eq!(c.count(), 1);
            assert!(c.shapes.contains("0;"));
        }
    }
}
