//! Arc diagrams over `[n]`: validity predicates, stacks, the core map and
//! the two shape projections.
//!
//! Vertices are 1-indexed. Arcs are stored as `(i, j)` with `i < j`, sorted
//! ascending, and every vertex has degree at most one.

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

/// An arc `(i, j)` with `1 <= i < j <= n`.
pub type ArcPair = (usize, usize);

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DiagramError {
    #[error("syntax error at byte {position}: {message}")]
    Syntax { position: usize, message: String },
    #[error("vertex degree exceeds 1 (vertex {vertex})")]
    DegreeExceeded { vertex: usize },
    #[error("arc endpoint out of range ({i}-{j} with n = {n})")]
    EndpointOutOfRange { i: usize, j: usize, n: usize },
    #[error("arc endpoints must differ (vertex {vertex})")]
    Loop { vertex: usize },
}

/// Why a diagram fails to be a k-noncrossing, σ-canonical structure.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum StructureViolation {
    #[error("not a structure: 1-arc at ({0},{1})")]
    OneArc(usize, usize),
    #[error("not a structure: crossing number {crossing} exceeds k-1 = {limit}")]
    Crossing { crossing: usize, limit: usize },
    #[error("not a structure: stack at ({0},{1}) has size {2} < sigma = {3}")]
    ShortStack(usize, usize, usize, usize),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Error)]
#[error("invalid structure parameters: k = {k}, sigma = {sigma} (need k >= 2, sigma >= 1)")]
pub struct ParamsError {
    pub k: usize,
    pub sigma: usize,
}

/// Crossing bound `k` and minimum stack size `sigma`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct StructureParams {
    k: usize,
    sigma: usize,
}

impl StructureParams {
    pub fn new(k: usize, sigma: usize) -> Result<Self, ParamsError> {
        if k < 2 || sigma < 1 {
            return Err(ParamsError { k, sigma });
        }
        Ok(Self { k, sigma })
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn sigma(&self) -> usize {
        self.sigma
    }
}

/// A maximal run of parallel arcs `(i, j), (i+1, j-1), ...`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Stack {
    pub outer: ArcPair,
    pub size: usize,
}

impl Stack {
    pub fn inner(&self) -> ArcPair {
        (self.outer.0 + self.size - 1, self.outer.1 + 1 - self.size)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ShapeLevel {
    Lv1,
    Lv5,
}

impl ShapeLevel {
    pub fn number(self) -> u8 {
        match self {
            ShapeLevel::Lv1 => 1,
            ShapeLevel::Lv5 => 5,
        }
    }

    pub fn from_number(level: u8) -> Option<Self> {
        match level {
            1 => Some(ShapeLevel::Lv1),
            5 => Some(ShapeLevel::Lv5),
            _ => None,
        }
    }
}

impl fmt::Display for ShapeLevel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "lv{}", self.number())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Diagram {
    n: usize,
    arcs: Vec<ArcPair>,
}

impl Diagram {
    /// Builds a diagram, normalizing each pair to `i < j` and sorting.
    pub fn new(n: usize, arcs: impl IntoIterator<Item = ArcPair>) -> Result<Self, DiagramError> {
        let mut seen = vec![false; n + 1];
        let mut out = Vec::new();
        for (a, b) in arcs {
            let (i, j) = if a <= b { (a, b) } else { (b, a) };
            if i == j {
                return Err(DiagramError::Loop { vertex: i });
            }
            if i == 0 || j > n {
                return Err(DiagramError::EndpointOutOfRange { i, j, n });
            }
            for v in [i, j] {
                if seen[v] {
                    return Err(DiagramError::DegreeExceeded { vertex: v });
                }
                seen[v] = true;
            }
            out.push((i, j));
        }
        out.sort_unstable();
        Ok(Self { n, arcs: out })
    }

    /// Arcless diagram on `n` vertices.
    pub fn empty(n: usize) -> Self {
        Self { n, arcs: Vec::new() }
    }

    /// Trusted constructor for arcs already known to be valid (any order).
    pub(crate) fn from_valid(n: usize, mut arcs: Vec<ArcPair>) -> Self {
        arcs.sort_unstable();
        debug_assert!(Self::new(n, arcs.iter().copied()).is_ok());
        Self { n, arcs }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn arcs(&self) -> &[ArcPair] {
        &self.arcs
    }

    pub fn arc_count(&self) -> usize {
        self.arcs.len()
    }

    /// `partner[v]` is the other endpoint of the arc at `v`; index 0 unused.
    pub fn partners(&self) -> Vec<Option<usize>> {
        let mut p = vec![None; self.n + 2];
        for &(i, j) in &self.arcs {
            p[i] = Some(j);
            p[j] = Some(i);
        }
        p
    }

    pub fn isolated_vertices(&self) -> Vec<usize> {
        let p = self.partners();
        (1..=self.n).filter(|&v| p[v].is_none()).collect()
    }

    pub fn isolated_count(&self) -> usize {
        self.n - 2 * self.arcs.len()
    }

    pub fn is_perfect_matching(&self) -> bool {
        self.isolated_count() == 0
    }

    pub fn one_arcs(&self) -> impl Iterator<Item = ArcPair> + '_ {
        self.arcs.iter().copied().filter(|&(i, j)| j == i + 1)
    }

    pub fn one_arc_count(&self) -> usize {
        self.one_arcs().count()
    }

    /// Largest `c` such that the diagram contains a `c`-crossing.
    ///
    /// A set of arcs is a c-crossing iff its arcs pairwise cross. Fixing the
    /// arc with the smallest left endpoint, the remaining members are the arcs
    /// `(a, b)` with `i < a < j < b`, and among those any chain increasing in
    /// both endpoints works, so each anchor reduces to a longest increasing
    /// subsequence.
    pub fn crossing_number(&self) -> usize {
        if self.arcs.is_empty() {
            return 0;
        }
        let mut best = 1;
        for (idx, &(i, j)) in self.arcs.iter().enumerate() {
            let rights: Vec<usize> = self.arcs[idx + 1..]
                .iter()
                .filter(|&&(a, b)| a < j && b > j && a > i)
                .map(|&(_, b)| b)
                .collect();
            best = best.max(1 + longest_increasing(&rights));
        }
        best
    }

    pub fn is_k_noncrossing(&self, k: usize) -> bool {
        self.crossing_number() < k
    }

    /// Maximal stacks, in order of their outer arc.
    pub fn stacks(&self) -> Vec<Stack> {
        let p = self.partners();
        let is_arc = |i: usize, j: usize| i >= 1 && i < j && p[i] == Some(j);
        let mut out = Vec::new();
        for &(i, j) in &self.arcs {
            if is_arc(i.wrapping_sub(1), j + 1) {
                continue;
            }
            let mut size = 1;
            while is_arc(i + size, j - size) {
                size += 1;
            }
            out.push(Stack { outer: (i, j), size });
        }
        out
    }

    /// First reason the diagram is not a `(k, sigma)` structure, if any.
    pub fn structure_violation(&self, params: StructureParams) -> Option<StructureViolation> {
        if let Some((i, j)) = self.one_arcs().next() {
            return Some(StructureViolation::OneArc(i, j));
        }
        let crossing = self.crossing_number();
        if crossing >= params.k {
            return Some(StructureViolation::Crossing {
                crossing,
                limit: params.k - 1,
            });
        }
        self.stacks()
            .into_iter()
            .find(|s| s.size < params.sigma)
            .map(|s| StructureViolation::ShortStack(s.outer.0, s.outer.1, s.size, params.sigma))
    }

    pub fn is_structure(&self, params: StructureParams) -> bool {
        self.structure_violation(params).is_none()
    }

    /// Keeps only the vertices for which `keep` holds and relabels them
    /// `1..n'` in order.
    fn restrict(&self, keep: &[bool]) -> Diagram {
        let mut label = vec![0; self.n + 1];
        let mut next = 0;
        for v in 1..=self.n {
            if keep[v] {
                next += 1;
                label[v] = next;
            }
        }
        let arcs = self
            .arcs
            .iter()
            .filter(|&&(i, j)| keep[i] && keep[j])
            .map(|&(i, j)| (label[i], label[j]))
            .collect();
        Diagram::from_valid(next, arcs)
    }

    /// Collapses every maximal stack onto its innermost arc and relabels.
    /// Isolated vertices are kept.
    pub fn core(&self) -> Diagram {
        let mut keep = vec![true; self.n + 1];
        for s in self.stacks() {
            let (i, j) = s.outer;
            for t in 0..s.size - 1 {
                keep[i + t] = false;
                keep[j - t] = false;
            }
        }
        self.restrict(&keep)
    }

    /// Deletes every isolated vertex and relabels.
    pub fn remove_isolated(&self) -> Diagram {
        let p = self.partners();
        let keep: Vec<bool> = (0..=self.n).map(|v| v > 0 && p[v].is_some()).collect();
        self.restrict(&keep)
    }

    /// Replaces each maximal run of consecutive isolated vertices by a single
    /// isolated vertex and relabels.
    pub fn collapse_isolated_runs(&self) -> Diagram {
        let p = self.partners();
        let keep: Vec<bool> = (0..=self.n)
            .map(|v| v > 0 && (p[v].is_some() || v == 1 || p[v - 1].is_some()))
            .collect();
        self.restrict(&keep)
    }

    fn require_structure(&self, params: StructureParams) -> Result<(), StructureViolation> {
        match self.structure_violation(params) {
            Some(v) => Err(v),
            None => Ok(()),
        }
    }

    /// lv⁵ shape: strip isolated vertices, then apply the core map.
    pub fn lv5_shape(&self, params: StructureParams) -> Result<Diagram, StructureViolation> {
        self.require_structure(params)?;
        Ok(self.remove_isolated().core())
    }

    /// lv⁵ shape through the longer chain core, strip isolated, core.
    pub fn lv5_shape_via_core(&self, params: StructureParams) -> Result<Diagram, StructureViolation> {
        self.require_structure(params)?;
        Ok(self.core().remove_isolated().core())
    }

    /// lv¹ shape: apply the core map, then collapse isolated runs.
    pub fn lv1_shape(&self, params: StructureParams) -> Result<Diagram, StructureViolation> {
        self.require_structure(params)?;
        Ok(self.core().collapse_isolated_runs())
    }

    pub fn shape(&self, level: ShapeLevel, params: StructureParams) -> Result<Diagram, StructureViolation> {
        match level {
            ShapeLevel::Lv1 => self.lv1_shape(params),
            ShapeLevel::Lv5 => self.lv5_shape(params),
        }
    }

    fn is_stack_free(&self) -> bool {
        self.stacks().iter().all(|s| s.size == 1)
    }

    /// Intrinsic test for lv⁵ shapes: k-noncrossing perfect matching whose
    /// stacks all have size one.
    pub fn looks_like_lv5_shape(&self, k: usize) -> bool {
        self.is_perfect_matching() && self.is_stack_free() && self.is_k_noncrossing(k)
    }

    /// Intrinsic test for lv¹ shapes: stack-free k-noncrossing diagram with
    /// no 1-arc and no two adjacent isolated vertices.
    pub fn looks_like_lv1_shape(&self, k: usize) -> bool {
        let p = self.partners();
        let adjacent_isolated = (2..=self.n).any(|v| p[v].is_none() && p[v - 1].is_none());
        !adjacent_isolated
            && self.one_arc_count() == 0
            && self.is_stack_free()
            && self.is_k_noncrossing(k)
    }

    /// Inflates every arc to `sigma` parallel arcs. With `pad_one_arcs`, one
    /// isolated vertex is also placed under every 1-arc.
    fn inflate(&self, sigma: usize, pad_one_arcs: bool) -> Diagram {
        let p = self.partners();
        let mut first = vec![0; self.n + 1];
        let mut arcs = Vec::with_capacity(self.arcs.len() * sigma);
        let mut pos = 0;
        for v in 1..=self.n {
            match p[v] {
                None => pos += 1,
                Some(w) if w > v => {
                    first[v] = pos + 1;
                    pos += sigma;
                    if pad_one_arcs && w == v + 1 {
                        pos += 1;
                    }
                }
                Some(w) => {
                    let open = first[w];
                    for t in 0..sigma {
                        arcs.push((open + t, pos + sigma - t));
                    }
                    pos += sigma;
                }
            }
        }
        Diagram::from_valid(pos, arcs)
    }

    /// Shortest σ-canonical structure whose lv⁵ shape is `self`.
    pub fn minimal_lv5_inflation(&self, sigma: usize) -> Diagram {
        self.inflate(sigma, true)
    }

    /// Shortest σ-canonical structure whose lv¹ shape is `self`.
    pub fn minimal_lv1_inflation(&self, sigma: usize) -> Diagram {
        self.inflate(sigma, false)
    }
}

/// Length of the longest strictly increasing subsequence.
fn longest_increasing(values: &[usize]) -> usize {
    let mut tails: Vec<usize> = Vec::new();
    for &v in values {
        let at = tails.partition_point(|&t| t < v);
        if at == tails.len() {
            tails.push(v);
        } else {
            tails[at] = v;
        }
    }
    tails.len()
}

impl fmt::Display for Diagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{};", self.n)?;
        for (idx, (i, j)) in self.arcs.iter().enumerate() {
            let sep = if idx == 0 { " " } else { ", " };
            write!(f, "{sep}{i}-{j}")?;
        }
        Ok(())
    }
}

struct Cursor<'a> {
    text: &'a [u8],
    pos: usize,
}

impl Cursor<'_> {
    fn skip_ws(&mut self) {
        while self.pos < self.text.len() && self.text[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.text.get(self.pos).copied()
    }

    fn error(&self, message: impl Into<String>) -> DiagramError {
        DiagramError::Syntax {
            position: self.pos,
            message: message.into(),
        }
    }

    fn expect(&mut self, byte: u8) -> Result<(), DiagramError> {
        if self.peek() == Some(byte) {
            self.pos += 1;
            Ok(())
        } else {
            Err(self.error(format!("expected '{}'", byte as char)))
        }
    }

    fn number(&mut self) -> Result<usize, DiagramError> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.text.len() && self.text[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.error("expected a non-negative integer"));
        }
        std::str::from_utf8(&self.text[start..self.pos])
            .ok()
            .and_then(|s| s.parse().ok())
            .ok_or_else(|| DiagramError::Syntax {
                position: start,
                message: "integer out of range".into(),
            })
    }
}

/// Parses the arc-list format `<n>; i-j, i-j, ...`.
pub fn parse_diagram(text: &str) -> Result<Diagram, DiagramError> {
    let mut cur = Cursor {
        text: text.as_bytes(),
        pos: 0,
    };
    let n = cur.number()?;
    cur.expect(b';')?;
    let mut arcs = Vec::new();
    if cur.peek().is_some() {
        loop {
            let i = cur.number()?;
            cur.expect(b'-')?;
            let j = cur.number()?;
            arcs.push((i, j));
            match cur.peek() {
                None => break,
                Some(b',') => cur.pos += 1,
                Some(_) => return Err(cur.error("expected ',' or end of input")),
            }
        }
    }
    Diagram::new(n, arcs)
}

impl FromStr for Diagram {
    type Err = DiagramError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        parse_diagram(s)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn d(text: &str) -> Diagram {
        text.parse().unwrap()
    }

    fn params(k: usize, sigma: usize) -> StructureParams {
        StructureParams::new(k, sigma).unwrap()
    }

    #[test]
    fn parses_arc_lists() {
        let x = d("6; 1-4, 2-5, 3-6");
        assert_eq!(x.n(), 6);
        assert_eq!(x.arcs(), &[(1, 4), (2, 5), (3, 6)]);
        assert_eq!(d("4;"), Diagram::empty(4));
        assert_eq!(d("  5 ;4-1 ,2 - 3 "), d("5; 1-4, 2-3"));
    }

    #[test]
    fn rejects_bad_input() {
        let err = parse_diagram("4; 1-3, 2-3").unwrap_err();
        assert_eq!(err, DiagramError::DegreeExceeded { vertex: 3 });
        assert!(err.to_string().contains("vertex degree exceeds 1"));
        let err = parse_diagram("4; 1-5").unwrap_err();
        assert!(err.to_string().contains("arc endpoint out of range"));
        assert!(matches!(parse_diagram("4; 0-2"), Err(DiagramError::EndpointOutOfRange { .. })));
        assert!(matches!(parse_diagram("4; 2-2"), Err(DiagramError::Loop { vertex: 2 })));
        match parse_diagram("4; 1-2,") {
            Err(DiagramError::Syntax { position, .. }) => assert_eq!(position, 7),
            other => panic!("unexpected {other:?}"),
        }
        assert!(matches!(parse_diagram("4 1-2"), Err(DiagramError::Syntax { position: 2, .. })));
        assert!(matches!(parse_diagram("4; 1-2 3-4"), Err(DiagramError::Syntax { .. })));
        assert!(matches!(parse_diagram(""), Err(DiagramError::Syntax { position: 0, .. })));
    }

    #[test]
    fn serializes_canonically() {
        assert_eq!(d("6; 3-6,1-4, 2-5").to_string(), "6; 1-4, 2-5, 3-6");
        assert_eq!(Diagram::empty(0).to_string(), "0;");
        assert_eq!(Diagram::empty(3).to_string(), "3;");
    }

    #[test]
    fn crossing_numbers() {
        assert_eq!(d("6; 1-4, 2-5, 3-6").crossing_number(), 3);
        assert_eq!(d("4; 1-2, 3-4").crossing_number(), 1);
        assert_eq!(d("4; 1-3, 2-4").crossing_number(), 2);
        assert_eq!(Diagram::empty(5).crossing_number(), 0);
        // two crossings that do not chain into a 3-crossing
        assert_eq!(d("8; 1-3, 2-5, 4-7, 6-8").crossing_number(), 2);
        assert!(!d("6; 1-4, 2-5, 3-6").is_k_noncrossing(3));
        assert!(d("6; 1-4, 2-5, 3-6").is_k_noncrossing(4));
        assert!(Diagram::empty(0).is_k_noncrossing(2));
    }

    #[test]
    fn stack_decomposition() {
        assert_eq!(
            d("6; 1-6, 2-5, 3-4").stacks(),
            vec![Stack { outer: (1, 6), size: 3 }]
        );
        assert_eq!(
            d("8; 1-6, 2-5, 7-8").stacks(),
            vec![Stack { outer: (1, 6), size: 2 }, Stack { outer: (7, 8), size: 1 }]
        );
        assert_eq!(
            d("5; 1-4, 2-5").stacks(),
            vec![Stack { outer: (1, 4), size: 1 }, Stack { outer: (2, 5), size: 1 }]
        );
    }

    #[test]
    fn structure_predicate() {
        assert!(d("5; 1-4, 2-5").is_structure(params(3, 1)));
        assert!(!d("2; 1-2").is_structure(params(2, 1)));
        assert_eq!(
            d("2; 1-2").structure_violation(params(5, 1)).unwrap().to_string(),
            "not a structure: 1-arc at (1,2)"
        );
        assert!(!d("4; 1-4").is_structure(params(2, 2)));
        // arcs of length two are legal
        assert!(d("3; 1-3").is_structure(params(2, 1)));
        assert!(Diagram::empty(0).is_structure(params(2, 3)));
    }

    #[test]
    fn core_map() {
        assert_eq!(d("6; 1-6, 2-5, 3-4").core(), d("2; 1-2"));
        let x = d("9; 1-9, 2-8, 3-5, 6-7");
        assert_eq!(x.core(), d("7; 1-7, 2-4, 5-6"));
        assert_eq!(x.core().core(), x.core());
    }

    #[test]
    fn core_keeps_isolated_vertices_and_crossings() {
        // two crossing stacks of size 2 with an isolated vertex in between
        let x = d("9; 1-6, 2-5, 3-8, 4-7");
        let c = x.core();
        assert_eq!(c.isolated_count(), x.isolated_count());
        assert_eq!(c.crossing_number(), x.crossing_number());
        assert_eq!(c.stacks().len(), x.stacks().len());
    }

    #[test]
    fn shapes_of_a_hairpin() {
        let hairpin = d("8; 1-8, 2-7, 3-6");
        let p = params(2, 3);
        assert_eq!(hairpin.lv5_shape(p).unwrap(), d("2; 1-2"));
        assert_eq!(hairpin.lv5_shape_via_core(p).unwrap(), d("2; 1-2"));
        assert_eq!(hairpin.lv1_shape(p).unwrap(), d("3; 1-3"));
        assert!(hairpin.lv5_shape(params(2, 4)).is_err());
    }

    #[test]
    fn collapses_runs_at_the_ends() {
        let x = d("9; 3-7");
        assert_eq!(x.collapse_isolated_runs(), d("5; 2-4"));
        assert_eq!(Diagram::empty(4).collapse_isolated_runs(), Diagram::empty(1));
        assert_eq!(Diagram::empty(0).collapse_isolated_runs(), Diagram::empty(0));
    }

    #[test]
    fn shape_of_empty_structure() {
        let e = Diagram::empty(0);
        assert_eq!(e.lv5_shape(params(2, 1)).unwrap(), e);
        assert_eq!(e.lv1_shape(params(2, 1)).unwrap(), e);
        assert_eq!(Diagram::empty(3).lv1_shape(params(2, 1)).unwrap(), Diagram::empty(1));
        assert_eq!(Diagram::empty(3).lv5_shape(params(2, 1)).unwrap(), e);
    }

    #[test]
    fn inflations() {
        let shape = d("2; 1-2");
        let s = shape.minimal_lv5_inflation(2);
        assert_eq!(s, d("5; 1-5, 2-4"));
        assert_eq!(s.lv5_shape(params(2, 2)).unwrap(), shape);

        let shape = d("6; 1-3, 2-6, 4-5");
        let s = shape.minimal_lv5_inflation(2);
        assert_eq!(s.n(), 2 * 3 * 2 + 1);
        assert!(s.is_structure(params(3, 2)));
        assert_eq!(s.lv5_shape(params(3, 2)).unwrap(), shape);

        let shape1 = d("5; 1-4, 2-5");
        let s1 = shape1.minimal_lv1_inflation(3);
        assert_eq!(s1.n(), 2 * 2 * (3 - 1) + 5);
        assert!(s1.is_structure(params(3, 3)));
        assert_eq!(s1.lv1_shape(params(3, 3)).unwrap(), shape1);
    }

    #[test]
    fn recognizers() {
        assert!(d("4; 1-3, 2-4").looks_like_lv5_shape(3));
        assert!(!d("4; 1-3, 2-4").looks_like_lv5_shape(2));
        assert!(!d("6; 1-6, 2-5, 3-4").looks_like_lv5_shape(2));
        assert!(d("3; 1-3").looks_like_lv1_shape(2));
        assert!(!d("4; 1-4").looks_like_lv1_shape(2));
        assert!(!d("2; 1-2").looks_like_lv1_shape(2));
    }

    #[test]
    fn params_validation() {
        assert!(StructureParams::new(1, 1).is_err());
        assert!(StructureParams::new(2, 0).is_err());
        assert_eq!(StructureParams::new(3, 2).unwrap().k(), 3);
    }
}
