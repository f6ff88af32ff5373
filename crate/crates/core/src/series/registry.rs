use num_bigint::BigUint;
use serde::Serialize;

use super::{gf, to_count_table, to_counts, SeriesError};

/// Parameters shared by every named generating function. Functions ignore
/// the fields they do not use.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct GfRequest {
    pub k: usize,
    pub sigma: usize,
    pub order: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GfValue {
    Univariate(Vec<BigUint>),
    /// `rows[n][m]` is the coefficient of `x^n u^m`.
    Bivariate(Vec<Vec<BigUint>>),
}

impl GfValue {
    /// Coefficients with the marker summed out.
    pub fn marginal(&self) -> Vec<BigUint> {
        match self {
            GfValue::Univariate(v) => v.clone(),
            GfValue::Bivariate(rows) => rows.iter().map(|r| r.iter().sum()).collect(),
        }
    }
}

pub trait GeneratingFunction: Send + Sync {
    fn name(&self) -> &'static str;
    fn description(&self) -> &'static str;
    fn uses_sigma(&self) -> bool {
        false
    }
    fn is_bivariate(&self) -> bool {
        false
    }
    fn evaluate(&self, req: &GfRequest) -> Result<GfValue, SeriesError>;
}

type UniFn = fn(&GfRequest) -> Result<super::Series, SeriesError>;
type BiFn = fn(&GfRequest) -> Result<super::BiSeries, SeriesError>;

struct Univariate {
    name: &'static str,
    description: &'static str,
    sigma: bool,
    build: UniFn,
}

impl GeneratingFunction for Univariate {
    fn name(&self) -> &'static str {
        self.name
    }

    fn description(&self) -> &'static str {
        self.description
    }

    fn uses_sigma(&self) -> bool {
        self.sigma
    }

    fn evaluate(&self, req: &GfRequest) -> Result<GfValue, SeriesError> {
        Ok(GfValue::Univariate(to_counts(&(self.build)(req)?)?))
    }
}

struct Bivariate {
    name: &'static str,
    description: &'static str,
    build: BiFn,
}

impl GeneratingFunction for Bivariate {
    fn name(&self) -> &'static str {
        self.name
    }

    fn description(&self) -> &'static str {
        self.description
    }

    fn is_bivariate(&self) -> bool {
        true
    }

    fn evaluate(&self, req: &GfRequest) -> Result<GfValue, SeriesError> {
        Ok(GfValue::Bivariate(to_count_table(&(self.build)(req)?)?))
    }
}

/// Named generating functions, looked up at runtime.
pub struct GfRegistry {
    entries: Vec<Box<dyn GeneratingFunction>>,
}

impl Default for GfRegistry {
    fn default() -> Self {
        Self::standard()
    }
}

impl GfRegistry {
    pub fn empty() -> Self {
        Self { entries: Vec::new() }
    }

    pub fn standard() -> Self {
        let mut reg = Self::empty();
        let uni = |name, description, sigma, build: UniFn| Box::new(Univariate { name, description, sigma, build });
        let bi = |name, description, build: BiFn| Box::new(Bivariate { name, description, build });
        reg.register(uni("F", "k-noncrossing perfect matchings on 2n vertices", false, |r| {
            if r.k < 2 {
                return Err(SeriesError::InvalidParameters(format!("k = {} must be at least 2", r.k)));
            }
            Ok(gf::f_series(r.k, r.order))
        }));
        reg.register(bi("G", "matchings on 2n vertices by number of 1-arcs", |r| {
            gf::g_bivariate(r.k, r.order)
        }));
        reg.register(uni("I", "lv5 shapes of length 2n", false, |r| gf::i_series(r.k, r.order)));
        reg.register(bi("Ibi", "lv5 shapes of length 2n by number of 1-arcs", |r| {
            gf::i_bivariate(r.k, r.order)
        }));
        reg.register(uni("J", "lv1 shapes of length n", false, |r| gf::j_series(r.k, r.order)));
        reg.register(bi("Jbi", "lv1 shapes of length n by number of arcs", |r| {
            gf::j_bivariate(r.k, r.order)
        }));
        reg.register(uni("T", "k-noncrossing sigma-canonical structures of length n", true, |r| {
            gf::t_series(r.k, r.sigma, r.order)
        }));
        reg.register(bi("T1bi", "1-canonical structures of length n by number of arcs", |r| {
            gf::t1_bivariate(r.k, r.order)
        }));
        reg.register(bi("Cbi", "cores of length n by number of arcs", |r| gf::c_bivariate(r.k, r.order)));
        reg.register(uni("Lv5", "lv5 shapes induced by structures of length n", true, |r| {
            gf::lv5_series(r.k, r.sigma, r.order)
        }));
        reg.register(uni("Lv1", "lv1 shapes induced by structures of length n", true, |r| {
            gf::lv1_series(r.k, r.sigma, r.order)
        }));
        reg
    }

    /// Adds an entry, replacing any with the same name.
    pub fn register(&mut self, entry: Box<dyn GeneratingFunction>) {
        self.entries.retain(|e| e.name() != entry.name());
        self.entries.push(entry);
    }

    pub fn names(&self) -> Vec<&'static str> {
        self.entries.iter().map(|e| e.name()).collect()
    }

    pub fn get(&self, name: &str) -> Result<&dyn GeneratingFunction, SeriesError> {
        self.entries
            .iter()
            .find(|e| e.name() == name)
            .map(|e| e.as_ref())
            .ok_or_else(|| SeriesError::UnknownName(name.to_string()))
    }

    pub fn evaluate(&self, name: &str, req: &GfRequest) -> Result<GfValue, SeriesError> {
        self.get(name)?.evaluate(req)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn standard_names() {
        let reg = GfRegistry::standard();
        assert_eq!(
            reg.names(),
            ["F", "G", "I", "Ibi", "J", "Jbi", "T", "T1bi", "Cbi", "Lv5", "Lv1"]
        );
        assert!(matches!(reg.get("X"), Err(SeriesError::UnknownName(_))));
    }

    #[test]
    fn evaluates_by_name() {
        let reg = GfRegistry::standard();
        let req = GfRequest { k: 2, sigma: 1, order: 3 };
        let want: Vec<BigUint> = [1u32, 1, 1, 2].iter().map(|&x| x.into()).collect();
        assert_eq!(reg.evaluate("I", &req).unwrap(), GfValue::Univariate(want.clone()));
        assert_eq!(reg.evaluate("Ibi", &req).unwrap().marginal(), want);
        assert!(reg.get("T").unwrap().uses_sigma());
        assert!(!reg.get("G").unwrap().uses_sigma());
    }

    #[test]
    fn register_replaces() {
        struct Zero;
        impl GeneratingFunction for Zero {
            fn name(&self) -> &'static str {
                "I"
            }
            fn description(&self) -> &'static str {
                "zero"
            }
            fn evaluate(&self, _: &GfRequest) -> Result<GfValue, SeriesError> {
                Ok(GfValue::Univariate(Vec::new()))
            }
        }
        let mut reg = GfRegistry::standard();
        reg.register(Box::new(Zero));
        assert_eq!(reg.names().len(), 11);
        assert_eq!(reg.get("I").unwrap().description(), "zero");
    }
}
