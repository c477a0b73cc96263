use std::collections::BTreeMap;

use num_bigint::BigInt;
use serde::Serialize;

use crate::exact::{Rational, RootMultiset};

/// `P(u) = Π_{π ∈ Π} (u + π)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DrinfeldPolynomial {
    pub root_params: RootMultiset,
    pub sigma: Rational,
}

impl DrinfeldPolynomial {
    pub fn degree(&self) -> usize {
        self.root_params.len()
    }

    pub fn evaluate(&self, u: &Rational) -> Rational {
        self.root_params.roots().iter().map(|p| u + p).product()
    }
}

/// Where the multiplicity recursion breaks inside one `σ`-translation class.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RatioWitness {
    /// Smallest uncancelled root of the failing class.
    pub class: Rational,
    /// First lattice point with negative multiplicity, or the class's last
    /// point when the multiplicities do not return to zero.
    pub at: Rational,
    pub multiplicity: i64,
    pub reason: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "status", rename_all = "lowercase")]
pub enum RatioOutcome {
    Found(DrinfeldPolynomial),
    Absent(RatioWitness),
}

impl RatioOutcome {
    pub fn polynomial(&self) -> Option<&DrinfeldPolynomial> {
        match self {
            RatioOutcome::Found(p) => Some(p),
            RatioOutcome::Absent(_) => None,
        }
    }

    pub fn is_found(&self) -> bool {
        matches!(self, RatioOutcome::Found(_))
    }
}

/// `⌊x/σ⌋`.
fn lattice_step(x: &Rational, sigma: &Rational) -> BigInt {
    (x / sigma).floor()
}

/// Decides whether `b(u)/a(u) = P(u+σ)/P(u)` for a monic `P`, where
/// `a`, `b` are the roots of `Π(1 + ρu⁻¹)`.
///
/// Panics unless `sigma > 0`.
pub fn solve_drinfeld_ratio(b: &RootMultiset, a: &RootMultiset, sigma: &Rational) -> RatioOutcome {
    assert!(sigma.is_positive(), "σ must be positive");
    let p = a.len().max(b.len());
    let (a, b) = (a.padded(p), b.padded(p));
    let common = a.intersection(&b);
    let (a, b) = (a.difference(&common), b.difference(&common));

    // class residue x − σ⌊x/σ⌋ ↦ (lattice step ↦ a(x) − b(x))
    let mut classes: BTreeMap<Rational, BTreeMap<BigInt, i64>> = BTreeMap::new();
    for (roots, delta) in [(&a, 1i64), (&b, -1i64)] {
        for (x, count) in roots.counts() {
            let k = lattice_step(&x, sigma);
            let residue = &x - sigma * Rational::from(k.clone());
            *classes.entry(residue).or_default().entry(k).or_default() += delta * count as i64;
        }
    }

    let mut params = Vec::new();
    for (residue, events) in classes {
        let point = |k: &BigInt| &residue + sigma * Rational::from(k.clone());
        let class = point(events.keys().next().expect("classes are non-empty"));
        let mut running = 0i64;
        let mut previous: Option<BigInt> = None;
        for (k, delta) in &events {
            if let Some(prev) = &previous {
                // Multiplicity `running` holds on every lattice point in [prev, k).
                let mut j = prev.clone();
                while &j < k {
                    params.extend(std::iter::repeat_n(point(&j), running as usize));
                    j += 1;
                }
            }
            running += delta;
            if running < 0 {
                return RatioOutcome::Absent(RatioWitness {
                    class,
                    at: point(k),
                    multiplicity: running,
                    reason: "negative multiplicity".into(),
                });
            }
            previous = Some(k.clone());
        }
        if running != 0 {
            let last = previous.expect("classes are non-empty");
            return RatioOutcome::Absent(RatioWitness {
                class,
                at: point(&last),
                multiplicity: running,
                reason: "multiplicities do not return to zero".into(),
            });
        }
    }
    RatioOutcome::Found(DrinfeldPolynomial { root_params: RootMultiset::new(params), sigma: sigma.clone() })
}
