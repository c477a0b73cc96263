use std::fmt;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::exact::Rational;

/// The super structure of `C^{2n+1|2m}` for a fixed parity sequence.
///
/// Basis indices are 0-based here: index `i` is the basis vector
/// `e_{i+1}`, the middle index `m+n` is `e_{m+n+1}` and the involution is
/// `i ↦ N − 1 − i`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct ParityContext {
    n: usize,
    m: usize,
    parity: Vec<u8>,
    bar: Vec<u8>,
    theta: Vec<i8>,
}

impl ParityContext {
    /// Validates the parity sequence: length `m + n`, exactly `n` zeros.
    pub fn new(n: usize, m: usize, parity: &[u8]) -> Result<Self> {
        if parity.len() != m + n {
            return Err(Error::InvalidParity(format!(
                "expected {} bits for n={n}, m={m}, got {}",
                m + n,
                parity.len()
            )));
        }
        if parity.iter().any(|&b| b > 1) {
            return Err(Error::InvalidParity("bits must be 0 or 1".into()));
        }
        let zeros = parity.iter().filter(|&&b| b == 0).count();
        if zeros != n {
            return Err(Error::InvalidParity(format!(
                "expected exactly {n} zeros, found {zeros}"
            )));
        }
        let dim = 2 * (m + n) + 1;
        let mid = m + n;
        let mut bar = vec![0u8; dim];
        bar[..mid].copy_from_slice(parity);
        for i in mid + 1..dim {
            bar[i] = bar[dim - 1 - i];
        }
        let theta = (0..dim)
            .map(|i| if i > mid && bar[i] == 1 { -1 } else { 1 })
            .collect();
        Ok(ParityContext { n, m, parity: parity.to_vec(), bar, theta })
    }

    pub fn parse(n: usize, m: usize, bits: &str) -> Result<Self> {
        let parity = parse_bits(bits)?;
        Self::new(n, m, &parity)
    }

    /// `1…1 0…0`: `m` ones then `n` zeros.
    pub fn standard(n: usize, m: usize) -> Self {
        Self::new(n, m, &standard_bits(n, m)).expect("standard sequence is valid")
    }

    /// `0…0 1…1`: `n` zeros then `m` ones.
    pub fn reversed(n: usize, m: usize) -> Self {
        Self::new(n, m, &reversed_bits(n, m)).expect("reversed sequence is valid")
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn parity(&self) -> &[u8] {
        &self.parity
    }

    pub fn parity_string(&self) -> String {
        bits_to_string(&self.parity)
    }

    pub fn is_standard(&self) -> bool {
        self.parity == standard_bits(self.n, self.m)
    }

    pub fn is_reversed(&self) -> bool {
        self.parity == reversed_bits(self.n, self.m)
    }

    /// Ambient dimension `N = 2n + 2m + 1`.
    pub fn dim(&self) -> usize {
        self.bar.len()
    }

    /// 0-based index of `e_{m+n+1}`.
    pub fn middle(&self) -> usize {
        self.m + self.n
    }

    /// `i′` in 0-based indexing.
    pub fn prime(&self, i: usize) -> usize {
        self.dim() - 1 - i
    }

    /// Parity `ī` of basis index `i`.
    pub fn bar(&self, i: usize) -> u8 {
        self.bar[i]
    }

    pub fn bars(&self) -> &[u8] {
        &self.bar
    }

    pub fn theta(&self, i: usize) -> i8 {
        self.theta[i]
    }

    /// `θ_i θ_j` as a rational sign.
    pub fn theta_pair(&self, i: usize, j: usize) -> Rational {
        Rational::from_integer((self.theta[i] * self.theta[j]) as i64)
    }

    /// `κ = n − m − 1/2`.
    pub fn kappa(&self) -> Rational {
        Rational::from_integer(self.n as i64 - self.m as i64) - Rational::half()
    }

    /// Parity of the matrix unit `e_{ij}`.
    pub fn unit_parity(&self, i: usize, j: usize) -> u8 {
        (self.bar[i] + self.bar[j]) % 2
    }
}

impl fmt::Debug for ParityContext {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "ctx(n={}, m={}, s={})", self.n, self.m, self.parity_string())
    }
}

pub fn standard_bits(n: usize, m: usize) -> Vec<u8> {
    let mut v = vec![1u8; m];
    v.extend(std::iter::repeat_n(0u8, n));
    v
}

pub fn reversed_bits(n: usize, m: usize) -> Vec<u8> {
    let mut v = vec![0u8; n];
    v.extend(std::iter::repeat_n(1u8, m));
    v
}

pub fn parse_bits(bits: &str) -> Result<Vec<u8>> {
    bits.chars()
        .map(|c| match c {
            '0' => Ok(0),
            '1' => Ok(1),
            _ => Err(Error::InvalidParity(format!("unexpected character {c:?} in {bits:?}"))),
        })
        .collect()
}

pub fn bits_to_string(bits: &[u8]) -> String {
    bits.iter().map(|b| if *b == 0 { '0' } else { '1' }).collect()
}

#[derive(Serialize, Deserialize)]
struct ContextJson {
    n: usize,
    m: usize,
    parity: String,
}

impl Serialize for ParityContext {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        ContextJson { n: self.n, m: self.m, parity: self.parity_string() }.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for ParityContext {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let raw = ContextJson::deserialize(deserializer)?;
        ParityContext::parse(raw.n, raw.m, &raw.parity).map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::q;

    #[test]
    fn involution_parities_and_signs() {
        let ctx = ParityContext::standard(1, 1);
        assert_eq!(ctx.dim(), 5);
        assert_eq!(ctx.bars(), &[1, 0, 0, 0, 1]);
        let theta: Vec<i8> = (0..5).map(|i| ctx.theta(i)).collect();
        assert_eq!(theta, vec![1, 1, 1, 1, -1]);
        for i in 0..5 {
            assert_eq!(ctx.prime(ctx.prime(i)), i);
            assert_eq!(ctx.bar(ctx.prime(i)), ctx.bar(i));
        }
        assert_eq!(ctx.kappa(), q(-1, 2));
        assert_eq!(ParityContext::standard(1, 2).kappa(), q(-3, 2));
    }

    #[test]
    fn non_standard_sequences() {
        let ctx = ParityContext::parse(2, 1, "010").unwrap();
        assert_eq!(ctx.bars(), &[0, 1, 0, 0, 0, 1, 0]);
        assert_eq!(ctx.theta(5), -1);
        assert!(!ctx.is_standard());
        assert!(ParityContext::parse(2, 1, "001").unwrap().is_reversed());
    }

    #[test]
    fn rejects_bad_sequences() {
        assert!(ParityContext::parse(1, 1, "11").is_err());
        assert!(ParityContext::parse(1, 1, "1").is_err());
        assert!(ParityContext::parse(1, 1, "1x").is_err());
    }

    #[test]
    fn json_roundtrip() {
        let ctx = ParityContext::parse(2, 1, "010").unwrap();
        let s = serde_json::to_string(&ctx).unwrap();
        assert_eq!(s, r#"{"n":2,"m":1,"parity":"010"}"#);
        let back: ParityContext = serde_json::from_str(&s).unwrap();
        assert_eq!(back, ctx);
        assert!(serde_json::from_str::<ParityContext>(r#"{"n":2,"m":1,"parity":"011"}"#).is_err());
    }
}
