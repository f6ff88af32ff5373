//! Exact counting sequences by dynamic programming and recursion.
//!
//! Nothing here touches floating point or generating functions; these tables
//! are the third leg next to brute force and coefficient extraction.

use std::collections::HashMap;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};

/// Where a table of counts came from.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Provenance {
    ChamberWalk,
    Determinant,
    Recursion,
    Extraction,
    BruteForce,
}

/// `f_k(2n, 0)` for `n = 0..=order`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MatchingCounts {
    pub k: usize,
    pub values: Vec<BigUint>,
    pub provenance: Provenance,
}

/// `g_k(n, m)`: k-noncrossing matchings on `2n` vertices with exactly `m`
/// 1-arcs. `rows[n][m]` for `0 <= m <= n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OneArcCounts {
    pub k: usize,
    pub rows: Vec<Vec<BigUint>>,
    pub provenance: Provenance,
}

impl OneArcCounts {
    pub fn get(&self, n: usize, m: usize) -> BigUint {
        self.rows
            .get(n)
            .and_then(|row| row.get(m))
            .cloned()
            .unwrap_or_default()
    }
}

/// Counts k-noncrossing perfect matchings as closed lattice walks.
///
/// A k-noncrossing matching on `2n` points corresponds to an oscillating
/// tableau of length `2n` with at most `k-1` rows: a walk through partitions
/// with at most `k-1` parts that adds or removes one box per step, from the
/// empty partition back to itself. Shifting part `i` by `k-i` turns this into
/// the walk in strictly decreasing positive tuples started at `(k-1, ..., 1)`.
///
/// Walks are reversible, so the number of closed walks of length `2n` is the
/// sum over partitions of the squared number of length-`n` walks reaching it.
pub fn f_matchings_dp(k: usize, order: usize) -> MatchingCounts {
    assert!(k >= 2, "k must be at least 2");
    let rows = k - 1;
    let mut layer: HashMap<Vec<u16>, BigUint> = HashMap::new();
    layer.insert(vec![0; rows], BigUint::one());
    let mut values = Vec::with_capacity(order + 1);
    values.push(BigUint::one());
    for _ in 1..=order {
        let mut next: HashMap<Vec<u16>, BigUint> = HashMap::with_capacity(layer.len() * 2);
        for (shape, ways) in &layer {
            for r in 0..rows {
                // add a box in row r
                if r == 0 || shape[r - 1] > shape[r] {
                    let mut s = shape.clone();
                    s[r] += 1;
                    *next.entry(s).or_default() += ways;
                }
                // remove a box from row r
                if shape[r] > 0 && (r + 1 == rows || shape[r + 1] < shape[r]) {
                    let mut s = shape.clone();
                    s[r] -= 1;
                    *next.entry(s).or_default() += ways;
                }
            }
        }
        layer = next;
        values.push(layer.values().map(|w| w * w).sum());
    }
    MatchingCounts {
        k,
        values,
        provenance: Provenance::ChamberWalk,
    }
}

/// Fills `g_k(n, m)` for `n <= order` from the 1-arc insertion recursion,
/// closing each row's `m = 0` entry with the row-sum identity.
pub fn g_one_arcs(k: usize, order: usize) -> OneArcCounts {
    let f = f_matchings_dp(k, order);
    g_one_arcs_from(&f)
}

fn to_int(x: &BigUint) -> BigInt {
    BigInt::from(x.clone())
}

pub fn g_one_arcs_from(f: &MatchingCounts) -> OneArcCounts {
    let order = f.values.len() - 1;
    let mut rows: Vec<Vec<BigInt>> = vec![vec![BigInt::one()]];
    for n in 0..order {
        let prev = &rows[n];
        let at = |m: usize| prev.get(m).cloned().unwrap_or_default();
        let mut row = vec![BigInt::zero(); n + 2];
        for m in 0..=n {
            // (m+1) g(n+1, m+1) = (m+1) g(n, m+1) + (2n+1-m) g(n, m)
            let rhs = BigInt::from(m + 1) * at(m + 1) + BigInt::from(2 * n + 1 - m) * at(m);
            let (q, r) = rhs.div_rem(&BigInt::from(m + 1));
            assert!(r.is_zero(), "1-arc recursion produced a non-integer at n={}, m={}", n + 1, m + 1);
            row[m + 1] = q;
        }
        let rest: BigInt = row[1..].iter().sum();
        row[0] = to_int(&f.values[n + 1]) - rest;
        assert!(row[0].sign() != num_bigint::Sign::Minus, "negative g_k({}, 0)", n + 1);
        rows.push(row);
    }
    OneArcCounts {
        k: f.k,
        rows: rows
            .into_iter()
            .map(|r| r.into_iter().map(|x| x.to_biguint().expect("nonnegative")).collect())
            .collect(),
        provenance: Provenance::Recursion,
    }
}

/// Secondary-structure counts `S_2(n)`, `n <= order`.
pub fn waterman_s2(order: usize) -> Vec<BigUint> {
    let mut s: Vec<BigUint> = Vec::with_capacity(order + 1);
    for n in 0..=order {
        if n <= 2 {
            s.push(BigUint::one());
            continue;
        }
        let mut v = s[n - 1].clone();
        // vertex n pairs with j+1, leaving an arc of length at least 2
        for j in 0..=n - 3 {
            v += &s[n - 2 - j] * &s[j];
        }
        s.push(v);
    }
    s
}

/// Subexponential exponent `(k-1)^2 + (k-1)/2`.
pub fn subexp_exponent(k: usize) -> BigRational {
    assert!(k >= 2, "k must be at least 2");
    let m = BigInt::from(k - 1);
    BigRational::new(BigInt::from(2) * &m * &m + &m, BigInt::from(2))
}
