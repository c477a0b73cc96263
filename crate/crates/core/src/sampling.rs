//! Deterministic sample points with pole avoidance.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::exact::Rational;

pub const DEFAULT_SEED: u64 = 1;

/// Numerators and denominators of sampled rationals are bounded by this.
pub const SAMPLE_BOUND: i64 = 100;

const MAX_ATTEMPTS: usize = 1000;

/// A reproducible stream of rational sample points.
pub struct Sampler {
    rng: ChaCha8Rng,
}

impl Sampler {
    pub fn new(seed: u64) -> Self {
        Sampler { rng: ChaCha8Rng::seed_from_u64(seed) }
    }

    /// `p/q` with `|p| ≤ 100` and `1 ≤ q ≤ 100`.
    pub fn rational(&mut self) -> Rational {
        let p = self.rng.gen_range(-SAMPLE_BOUND..=SAMPLE_BOUND);
        let q = self.rng.gen_range(1..=SAMPLE_BOUND);
        Rational::new(p, q)
    }

    pub fn point(&mut self, arity: usize) -> Vec<Rational> {
        (0..arity).map(|_| self.rational()).collect()
    }

    pub fn points(&mut self, count: usize, arity: usize) -> Vec<Vec<Rational>> {
        (0..count).map(|_| self.point(arity)).collect()
    }

    pub fn rng(&mut self) -> &mut ChaCha8Rng {
        &mut self.rng
    }
}

/// A sample point replaced because it hit a pole.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Resample {
    pub rejected: Vec<Rational>,
    pub reason: String,
    pub replacement: Vec<Rational>,
}

/// Replaces every inadmissible point with a fresh admissible one.
/// `obstruction` returns the reason a point is rejected.
pub fn admissible_points<F>(
    requested: &[Vec<Rational>],
    sampler: &mut Sampler,
    obstruction: F,
) -> Result<(Vec<Vec<Rational>>, Vec<Resample>)>
where
    F: Fn(&[Rational]) -> Option<String>,
{
    let mut points = Vec::with_capacity(requested.len());
    let mut notes = Vec::new();
    for point in requested {
        let Some(reason) = obstruction(point) else {
            points.push(point.clone());
            continue;
        };
        let mut replacement = None;
        for _ in 0..MAX_ATTEMPTS {
            let candidate = sampler.point(point.len());
            if obstruction(&candidate).is_none() {
                replacement = Some(candidate);
                break;
            }
        }
        let replacement = replacement.ok_or(Error::SamplesExhausted(MAX_ATTEMPTS))?;
        notes.push(Resample { rejected: point.clone(), reason, replacement: replacement.clone() });
        points.push(replacement);
    }
    Ok((points, notes))
}

/// Draws `count` admissible points of the given arity.
pub fn fresh_points<F>(count: usize, arity: usize, sampler: &mut Sampler, obstruction: F) -> Result<Vec<Vec<Rational>>>
where
    F: Fn(&[Rational]) -> Option<String>,
{
    let requested = sampler.points(count, arity);
    admissible_points(&requested, sampler, obstruction).map(|(p, _)| p)
}
