//! Text renderings of coefficient lists.

use num_bigint::BigUint;
use serde_json::{json, Value};

use super::GfValue;

pub fn univariate_tsv(values: &[BigUint]) -> String {
    let mut out = String::from("exponent\tcoefficient\n");
    for (e, v) in values.iter().enumerate() {
        out.push_str(&format!("{e}\t{v}\n"));
    }
    out
}

/// One `(n, m, coefficient)` line per entry, zeros included.
pub fn bivariate_tsv(rows: &[Vec<BigUint>]) -> String {
    let mut out = String::from("n\tm\tcoefficient\n");
    for (n, row) in rows.iter().enumerate() {
        for (m, v) in row.iter().enumerate() {
            out.push_str(&format!("{n}\t{m}\t{v}\n"));
        }
    }
    out
}

pub fn univariate_json(values: &[BigUint]) -> Value {
    Value::Array(values.iter().map(|v| Value::String(v.to_string())).collect())
}

pub fn bivariate_json(rows: &[Vec<BigUint>]) -> Value {
    Value::Array(
        rows.iter()
            .enumerate()
            .flat_map(|(n, row)| {
                row.iter()
                    .enumerate()
                    .map(move |(m, v)| json!({"n": n, "m": m, "coefficient": v.to_string()}))
            })
            .collect(),
    )
}

pub fn tsv(value: &GfValue) -> String {
    match value {
        GfValue::Univariate(v) => univariate_tsv(v),
        GfValue::Bivariate(rows) => bivariate_tsv(rows),
    }
}

pub fn json(value: &GfValue) -> Value {
    match value {
        GfValue::Univariate(v) => univariate_json(v),
        GfValue::Bivariate(rows) => bivariate_json(rows),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn nums(xs: &[u64]) -> Vec<BigUint> {
        xs.iter().map(|&x| x.into()).collect()
    }

    #[test]
    fn tsv_layout() {
        assert_eq!(univariate_tsv(&nums(&[1, 2])), "exponent\tcoefficient\n0\t1\n1\t2\n");
        assert_eq!(bivariate_tsv(&[nums(&[1]), nums(&[0, 1])]), "n\tm\tcoefficient\n0\t0\t1\n1\t0\t0\n1\t1\t1\n");
    }

    #[test]
    fn json_uses_strings() {
        let big = BigUint::from(10u32).pow(30);
        let v = univariate_json(std::slice::from_ref(&big));
        assert_eq!(v, json!([big.to_string()]));
        let b = bivariate_json(&[nums(&[3])]);
        assert_eq!(b, json!([{"n": 0, "m": 0, "coefficient": "3"}]));
    }
}
