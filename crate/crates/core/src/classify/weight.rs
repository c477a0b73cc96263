use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::exact::{Rational, RootMultiset};
use crate::super_space::ParityContext;

/// Components `λ_1(u), …, λ_{m+n+1}(u)` in factored form; every row holds
/// exactly `p` roots, zero roots serving as padding.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct HighestWeight {
    ctx: ParityContext,
    rows: Vec<RootMultiset>,
}

impl HighestWeight {
    pub fn new(ctx: &ParityContext, rows: Vec<RootMultiset>) -> Result<Self> {
        if ctx.n() == 0 || ctx.m() == 0 {
            return Err(Error::InvalidWeight("classification needs n ≥ 1 and m ≥ 1".into()));
        }
        if rows.len() != ctx.middle() + 1 {
            return Err(Error::InvalidWeight(format!(
                "expected {} components, got {}",
                ctx.middle() + 1,
                rows.len()
            )));
        }
        let p = rows[0].len();
        if let Some((i, r)) = rows.iter().enumerate().find(|(_, r)| r.len() != p) {
            return Err(Error::InvalidWeight(format!(
                "component {} has {} roots, expected {p}",
                i + 1,
                r.len()
            )));
        }
        Ok(HighestWeight { ctx: ctx.clone(), rows })
    }

    /// Pads every row with zero roots to the longest row's length.
    pub fn padded(ctx: &ParityContext, rows: Vec<RootMultiset>) -> Result<Self> {
        let p = rows.iter().map(RootMultiset::len).max().unwrap_or(0);
        Self::new(ctx, rows.into_iter().map(|r| r.padded(p)).collect())
    }

    /// The weight with components `1 + λ_i u⁻¹`.
    pub fn linear(ctx: &ParityContext, values: &[Rational]) -> Result<Self> {
        Self::new(ctx, values.iter().cloned().map(RootMultiset::singleton).collect())
    }

    pub fn ctx(&self) -> &ParityContext {
        &self.ctx
    }

    pub fn p(&self) -> usize {
        self.rows[0].len()
    }

    pub fn rows(&self) -> &[RootMultiset] {
        &self.rows
    }

    pub fn row(&self, i: usize) -> &RootMultiset {
        &self.rows[i]
    }

    pub(crate) fn from_parts(ctx: ParityContext, rows: Vec<RootMultiset>) -> Self {
        HighestWeight { ctx, rows }
    }

    /// The scalars of a `p = 1` weight.
    pub fn as_linear(&self) -> Option<LinearWeight> {
        (self.p() == 1).then(|| LinearWeight {
            ctx: self.ctx.clone(),
            values: self.rows.iter().map(|r| r.roots()[0].clone()).collect(),
        })
    }
}

/// Components `1 + λ_i u⁻¹`, `i = 1, …, m+n+1`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct LinearWeight {
    pub ctx: ParityContext,
    pub values: Vec<Rational>,
}

impl LinearWeight {
    pub fn new(ctx: &ParityContext, values: Vec<Rational>) -> Result<Self> {
        if values.len() != ctx.middle() + 1 {
            return Err(Error::InvalidWeight(format!(
                "expected {} scalars, got {}",
                ctx.middle() + 1,
                values.len()
            )));
        }
        Ok(LinearWeight { ctx: ctx.clone(), values })
    }

    pub fn to_highest_weight(&self) -> Result<HighestWeight> {
        HighestWeight::linear(&self.ctx, &self.values)
    }
}

#[derive(Serialize, Deserialize)]
struct WeightJson {
    n: usize,
    m: usize,
    parity: String,
    p: usize,
    components: Vec<Vec<Rational>>,
}

impl Serialize for HighestWeight {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        WeightJson {
            n: self.ctx.n(),
            m: self.ctx.m(),
            parity: self.ctx.parity_string(),
            p: self.p(),
            components: self.rows.iter().map(|r| r.roots().to_vec()).collect(),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for HighestWeight {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as _;
        let raw = WeightJson::deserialize(deserializer)?;
        let ctx = ParityContext::parse(raw.n, raw.m, &raw.parity).map_err(D::Error::custom)?;
        if let Some((i, c)) = raw.components.iter().enumerate().find(|(_, c)| c.len() != raw.p) {
            return Err(D::Error::custom(format!(
                "component {} has {} roots but p = {}",
                i + 1,
                c.len(),
                raw.p
            )));
        }
        let rows = raw.components.into_iter().map(RootMultiset::new).collect();
        HighestWeight::new(&ctx, rows).map_err(D::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::roots;

    const UNSPLIT: &str = r#"{"n":2,"m":1,"parity":"100","p":2,"components":[["-2","1/2"],["2","1/2"],["2","1/2"],["3/2","0"]]}"#;

    #[test]
    fn json_roundtrip() {
        let w: HighestWeight = serde_json::from_str(UNSPLIT).unwrap();
        assert_eq!(w.p(), 2);
        assert_eq!(w.row(3), &roots(&[(0, 1), (3, 2)]));
        let back: HighestWeight = serde_json::from_str(&serde_json::to_string(&w).unwrap()).unwrap();
        assert_eq!(back, w);
    }

    #[test]
    fn rejects_unequal_rows() {
        let bad = r#"{"n":1,"m":1,"parity":"10","p":2,"components":[["1","2"],["1"],["0","0"]]}"#;
        assert!(serde_json::from_str::<HighestWeight>(bad).is_err());
        let ctx = ParityContext::standard(1, 1);
        assert!(HighestWeight::new(&ctx, vec![roots(&[(1, 1)]), roots(&[]), roots(&[(0, 1)])]).is_err());
        let padded = HighestWeight::padded(&ctx, vec![roots(&[(1, 1)]), roots(&[]), roots(&[(0, 1)])]).unwrap();
        assert_eq!(padded.row(1), &roots(&[(0, 1)]));
    }
}
