use num_bigint::BigInt;
use num_rational::BigRational;
use proptest::prelude::*;
use pseudoshape::series::Series;
use pseudoshape::{parse_diagram, Diagram, StructureParams};

/// Diagrams on up to `max_n` vertices built from greedy disjoint pairs.
fn diagram(max_n: usize) -> impl Strategy<Value = Diagram> {
    (0..=max_n).prop_flat_map(|n| {
        prop::collection::vec((0..n.max(1), 0..n.max(1)), 0..=n).prop_map(move |pairs| {
            let mut used = vec![false; n + 1];
            let mut arcs = Vec::new();
            for (a, b) in pairs {
                let (i, j) = (a.min(b) + 1, a.max(b) + 1);
                if i < j && !used[i] && !used[j] {
                    used[i] = true;
                    used[j] = true;
                    arcs.push((i, j));
                }
            }
            Diagram::new(n, arcs).unwrap()
        })
    })
}

fn crossing_brute(d: &Diagram) -> usize {
    let arcs = d.arcs();
    let mut best = 0;
    for mask in 0u32..(1 << arcs.len()) {
        let mut set: Vec<_> = (0..arcs.len()).filter(|&b| mask >> b & 1 == 1).map(|b| arcs[b]).collect();
        set.sort();
        let crossing = set.windows(2).all(|w| w[0].1 < w[1].1 && w[1].0 < w[0].1)
            && set.first().zip(set.last()).is_none_or(|(f, l)| l.0 < f.1);
        if crossing {
            best = best.max(set.len());
        }
    }
    best
}

fn series(coeffs: Vec<i64>, order: usize) -> Series {
    Series::from_ints(&coeffs, order)
}

fn rat(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

proptest! {
    #[test]
    fn display_round_trips(d in diagram(20)) {
        prop_assert_eq!(parse_diagram(&d.to_string()).unwrap(), d);
    }

    #[test]
    fn crossing_number_matches_subsets(d in diagram(16)) {
        prop_assume!(d.arc_count() <= 8);
        prop_assert_eq!(d.crossing_number(), crossing_brute(&d));
    }

    #[test]
    fn core_is_idempotent_and_stack_free(d in diagram(20)) {
        let c = d.core();
        prop_assert_eq!(c.core(), c.clone());
        prop_assert!(c.stacks().iter().all(|s| s.size == 1));
        prop_assert_eq!(c.stacks().len(), d.stacks().len());
        prop_assert!(c.crossing_number() <= d.crossing_number());
    }

    #[test]
    fn shapes_of_structures_inflate_back(d in diagram(18), k in 2usize..4, sigma in 1usize..3) {
        let p = StructureParams::new(k, sigma).unwrap();
        prop_assume!(d.is_structure(p));
        let s5 = d.lv5_shape(p).unwrap();
        prop_assert_eq!(&s5, &d.lv5_shape_via_core(p).unwrap());
        prop_assert_eq!(s5.isolated_count(), 0);
        prop_assert_eq!(s5.minimal_lv5_inflation(sigma).lv5_shape(p).unwrap(), s5.clone());
        let s1 = d.lv1_shape(p).unwrap();
        prop_assert!(s1.n() <= d.n());
        prop_assert_eq!(s1.minimal_lv1_inflation(sigma).lv1_shape(p).unwrap(), s1);
    }

    #[test]
    fn product_is_convolution(a in prop::collection::vec(-9i64..10, 1..12), b in prop::collection::vec(-9i64..10, 1..12)) {
        let order = 10;
        let prod = &series(a.clone(), order) * &series(b.clone(), order);
        for n in 0..=order {
            let want: i64 = (0..=n).map(|i| a.get(i).copied().unwrap_or(0) * b.get(n - i).copied().unwrap_or(0)).sum();
            prop_assert_eq!(prod.coeff(n), &rat(want));
        }
        prop_assert_eq!(prod, &series(b, order) * &series(a, order));
    }

    #[test]
    fn reciprocal_inverts(mut a in prop::collection::vec(-5i64..6, 1..8)) {
        if a[0] == 0 {
            a[0] = 1;
        }
        let s = series(a, 12);
        let inv = s.reciprocal().unwrap();
        prop_assert_eq!(&s * &inv, Series::one(12));
    }
}
