use std::fmt;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::Rational;

/// A finite multiset of rational roots `{ρ_r}` standing for the series
/// `Π (1 + ρ_r u⁻¹)`. The empty multiset is the series `1`.
///
/// Stored sorted, so equality is multiset equality.
#[derive(Clone, PartialEq, Eq, Hash, Default, PartialOrd, Ord)]
pub struct RootMultiset {
    roots: Vec<Rational>,
}

impl RootMultiset {
    pub fn new(mut roots: Vec<Rational>) -> Self {
        roots.sort();
        RootMultiset { roots }
    }

    pub fn empty() -> Self {
        RootMultiset { roots: Vec::new() }
    }

    pub fn singleton(r: Rational) -> Self {
        RootMultiset { roots: vec![r] }
    }

    /// `count` copies of zero; the padding used to equalise row lengths.
    pub fn zeros(count: usize) -> Self {
        RootMultiset { roots: vec![Rational::zero(); count] }
    }

    pub fn len(&self) -> usize {
        self.roots.len()
    }

    pub fn is_empty(&self) -> bool {
        self.roots.is_empty()
    }

    /// Roots in ascending order, with repetition.
    pub fn roots(&self) -> &[Rational] {
        &self.roots
    }

    pub fn into_roots(self) -> Vec<Rational> {
        self.roots
    }

    pub fn multiplicity(&self, x: &Rational) -> usize {
        let lo = self.roots.partition_point(|r| r < x);
        let hi = self.roots.partition_point(|r| r <= x);
        hi - lo
    }

    pub fn contains(&self, x: &Rational) -> bool {
        self.multiplicity(x) > 0
    }

    /// Distinct roots with their multiplicities, ascending.
    pub fn counts(&self) -> Vec<(Rational, usize)> {
        let mut out: Vec<(Rational, usize)> = Vec::new();
        for r in &self.roots {
            match out.last_mut() {
                Some((last, c)) if last == r => *c += 1,
                _ => out.push((r.clone(), 1)),
            }
        }
        out
    }

    /// Multiset sum `A ⊎ B`.
    pub fn union(&self, other: &Self) -> Self {
        let mut roots = Vec::with_capacity(self.len() + other.len());
        let (mut i, mut j) = (0, 0);
        while i < self.roots.len() && j < other.roots.len() {
            if self.roots[i] <= other.roots[j] {
                roots.push(self.roots[i].clone());
                i += 1;
            } else {
                roots.push(other.roots[j].clone());
                j += 1;
            }
        }
        roots.extend_from_slice(&self.roots[i..]);
        roots.extend_from_slice(&other.roots[j..]);
        RootMultiset { roots }
    }

    /// Maximal common sub-multiset (elementwise minimum of multiplicities).
    pub fn intersection(&self, other: &Self) -> Self {
        let mut roots = Vec::new();
        let (mut i, mut j) = (0, 0);
        while i < self.roots.len() && j < other.roots.len() {
            match self.roots[i].cmp(&other.roots[j]) {
                std::cmp::Ordering::Less => i += 1,
                std::cmp::Ordering::Greater => j += 1,
                std::cmp::Ordering::Equal => {
                    roots.push(self.roots[i].clone());
                    i += 1;
                    j += 1;
                }
            }
        }
        RootMultiset { roots }
    }

    /// `self − other`, removing one copy per occurrence in `other`. Elements
    /// of `other` absent from `self` are ignored.
    pub fn difference(&self, other: &Self) -> Self {
        let mut roots = Vec::new();
        let (mut i, mut j) = (0, 0);
        while i < self.roots.len() {
            if j >= other.roots.len() {
                roots.extend_from_slice(&self.roots[i..]);
                break;
            }
            match self.roots[i].cmp(&other.roots[j]) {
                std::cmp::Ordering::Less => {
                    roots.push(self.roots[i].clone());
                    i += 1;
                }
                std::cmp::Ordering::Greater => j += 1,
                std::cmp::Ordering::Equal => {
                    i += 1;
                    j += 1;
                }
            }
        }
        RootMultiset { roots }
    }

    /// True when `other ⊆ self` as multisets.
    pub fn includes(&self, other: &Self) -> bool {
        self.intersection(other).len() == other.len()
    }

    /// Every root translated by `by`.
    pub fn shifted(&self, by: &Rational) -> Self {
        RootMultiset {
            roots: self.roots.iter().map(|r| r + by).collect(),
        }
    }

    pub fn push(&mut self, r: Rational) {
        let at = self.roots.partition_point(|x| x <= &r);
        self.roots.insert(at, r);
    }

    /// Removes one copy of `x`; returns whether it was present.
    pub fn remove_one(&mut self, x: &Rational) -> bool {
        let at = self.roots.partition_point(|r| r < x);
        if at < self.roots.len() && &self.roots[at] == x {
            self.roots.remove(at);
            true
        } else {
            false
        }
    }

    /// Pads with zero roots up to `len` entries.
    pub fn padded(&self, len: usize) -> Self {
        if self.len() >= len {
            return self.clone();
        }
        self.union(&RootMultiset::zeros(len - self.len()))
    }

    pub fn sum(&self) -> Rational {
        self.roots.iter().sum()
    }
}

impl From<Vec<Rational>> for RootMultiset {
    fn from(v: Vec<Rational>) -> Self {
        RootMultiset::new(v)
    }
}

impl FromIterator<Rational> for RootMultiset {
    fn from_iter<I: IntoIterator<Item = Rational>>(iter: I) -> Self {
        RootMultiset::new(iter.into_iter().collect())
    }
}

impl fmt::Debug for RootMultiset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (k, r) in self.roots.iter().enumerate() {
            if k > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{r}")?;
        }
        f.write_str("}")
    }
}

impl Serialize for RootMultiset {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        self.roots.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for RootMultiset {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        Vec::<Rational>::deserialize(deserializer).map(RootMultiset::new)
    }
}

/// Builds a multiset from `(numer, denom)` pairs.
pub fn roots(pairs: &[(i64, i64)]) -> RootMultiset {
    pairs.iter().map(|&(n, d)| Rational::new(n, d)).collect()
}
