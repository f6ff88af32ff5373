use num_bigint::BigUint;
use pseudoshape::count::{f_matchings_dp, g_one_arcs, waterman_s2};
use pseudoshape::enumerate::{count_family, CountFilter, EnumSpec, Family};
use pseudoshape::series::{self, to_counts, GfRegistry, GfRequest, GfValue};
use pseudoshape::StructureParams;

fn big(xs: &[u64]) -> Vec<BigUint> {
    xs.iter().map(|&x| x.into()).collect()
}

#[test]
fn noncrossing_matchings_are_catalan() {
    let f = f_matchings_dp(2, 8);
    assert_eq!(f.values, big(&[1, 1, 2, 5, 14, 42, 132, 429, 1430]));
}

#[test]
fn three_noncrossing_matchings() {
    let f = f_matchings_dp(3, 8);
    assert_eq!(f.values, big(&[1, 1, 3, 14, 84, 594, 4719, 40898, 379236]));
}

#[test]
fn stack_free_series_start() {
    let i = to_counts(&series::i_series(2, 3).unwrap()).unwrap();
    assert_eq!(i, big(&[1, 1, 1, 2]));
}

#[test]
fn secondary_structures_match_structure_family() {
    let s = waterman_s2(10);
    let p = StructureParams::new(2, 1).unwrap();
    for (n, want) in s.iter().enumerate() {
        let spec = EnumSpec::new(Family::Structures, n, p);
        assert_eq!(BigUint::from(count_family(&spec, CountFilter::default()).unwrap()), *want, "n={n}");
    }
}

#[test]
fn one_arc_rows_sum_to_matchings() {
    let g = g_one_arcs(3, 12);
    let f = f_matchings_dp(3, 12);
    for n in 0..=12 {
        let row: BigUint = g.rows[n].iter().sum();
        assert_eq!(row, f.values[n]);
    }
}

#[test]
fn registry_exposes_every_function() {
    let reg = GfRegistry::standard();
    let names = reg.names();
    assert_eq!(names, ["F", "G", "I", "Ibi", "J", "Jbi", "T", "T1bi", "Cbi", "Lv5", "Lv1"]);
    let req = GfRequest { k: 2, sigma: 2, order: 10 };
    for name in names {
        let v = reg.evaluate(name, &req).unwrap();
        assert_eq!(v.marginal()[0], BigUint::from(1u32), "{name}");
    }
    assert!(reg.evaluate("Q", &req).is_err());
}

#[test]
fn bivariate_marginals_match_univariate() {
    let reg = GfRegistry::standard();
    let req = GfRequest { k: 3, sigma: 1, order: 14 };
    for (uni, bi) in [("I", "Ibi"), ("J", "Jbi")] {
        let GfValue::Univariate(u) = reg.evaluate(uni, &req).unwrap() else { panic!() };
        let b = reg.evaluate(bi, &req).unwrap();
        assert!(matches!(b, GfValue::Bivariate(_)));
        assert_eq!(b.marginal(), u, "{uni}");
    }
}

#[test]
fn t1_marginal_is_structure_count() {
    let t = to_counts(&series::t_series(3, 1, 14).unwrap()).unwrap();
    let bi = series::marginal(&series::t1_bivariate(3, 14).unwrap());
    assert_eq!(to_counts(&bi).unwrap(), t);
}
