use serde::Serialize;

use super::weight::HighestWeight;
use crate::error::{Error, Result};
use crate::exact::{Rational, RootMultiset};
use crate::super_space::{bits_to_string, standard_bits, reversed_bits, ParityContext};

/// `(A, B) ↦ (B̄+1 ⊎ C, Ā+1 ⊎ C)` with `C = A ∩ B`, `Ā = A − C`, `B̄ = B − C`.
pub fn odd_reflection(a: &RootMultiset, b: &RootMultiset) -> Result<(RootMultiset, RootMultiset)> {
    if a.len() != b.len() {
        return Err(Error::CardinalityMismatch(a.len(), b.len()));
    }
    let c = a.intersection(b);
    let one = Rational::one();
    let a_bar = a.difference(&c).shifted(&one);
    let b_bar = b.difference(&c).shifted(&one);
    Ok((b_bar.union(&c), a_bar.union(&c)))
}

/// Inverse of [`odd_reflection`].
pub fn inverse_odd_reflection(x: &RootMultiset, y: &RootMultiset) -> Result<(RootMultiset, RootMultiset)> {
    if x.len() != y.len() {
        return Err(Error::CardinalityMismatch(x.len(), y.len()));
    }
    let c = x.intersection(y);
    let minus_one = Rational::from_integer(-1);
    let a = y.difference(&c).shifted(&minus_one).union(&c);
    let b = x.difference(&c).shifted(&minus_one).union(&c);
    Ok((a, b))
}

/// One adjacent swap of parity bits at positions `position`, `position+1`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ReflectionStep {
    pub from: String,
    pub to: String,
    /// 1-based index of the first component of the pair.
    pub position: usize,
}

/// The adjacent swaps taking `source` to `target`: for each position from
/// the right, the nearest matching bit on its left is bubbled into place.
pub fn transport_path(source: &[u8], target: &[u8]) -> Result<Vec<usize>> {
    let mut sorted_s = source.to_vec();
    let mut sorted_t = target.to_vec();
    sorted_s.sort_unstable();
    sorted_t.sort_unstable();
    if sorted_s != sorted_t {
        return Err(Error::UnreachableParity {
            source_parity: bits_to_string(source),
            target: bits_to_string(target),
        });
    }
    let mut cur = source.to_vec();
    let mut swaps = Vec::new();
    for i in (0..cur.len()).rev() {
        if cur[i] == target[i] {
            continue;
        }
        let k = (0..i).rev().find(|&k| cur[k] == target[i]).expect("bit counts agree");
        for j in k..i {
            cur.swap(j, j + 1);
            swaps.push(j);
        }
    }
    Ok(swaps)
}

/// Parity sequences visited on the way from `source` to `target`,
/// including both ends.
pub fn transport_chain(source: &[u8], target: &[u8]) -> Result<Vec<Vec<u8>>> {
    let mut cur = source.to_vec();
    let mut chain = vec![cur.clone()];
    for j in transport_path(source, target)? {
        cur.swap(j, j + 1);
        chain.push(cur.clone());
    }
    Ok(chain)
}

/// The chain from the standard sequence to `0…01…1`.
pub fn standard_chain(n: usize, m: usize) -> Vec<Vec<u8>> {
    transport_chain(&standard_bits(n, m), &reversed_bits(n, m)).expect("same bit counts")
}

/// Highest weight of the same module relative to `target`, with the
/// reflections applied.
pub fn transport_with_trace(hw: &HighestWeight, target: &[u8]) -> Result<(HighestWeight, Vec<ReflectionStep>)> {
    let ctx = hw.ctx();
    let swaps = transport_path(ctx.parity(), target)?;
    let mut bits = ctx.parity().to_vec();
    let mut rows = hw.rows().to_vec();
    let mut steps = Vec::with_capacity(swaps.len());
    for j in swaps {
        let from = bits_to_string(&bits);
        let (x, y) = match (bits[j], bits[j + 1]) {
            (1, 0) => odd_reflection(&rows[j], &rows[j + 1])?,
            (0, 1) => inverse_odd_reflection(&rows[j], &rows[j + 1])?,
            _ => unreachable!("transport only swaps distinct bits"),
        };
        rows[j] = x;
        rows[j + 1] = y;
        bits.swap(j, j + 1);
        steps.push(ReflectionStep { from, to: bits_to_string(&bits), position: j + 1 });
    }
    let new_ctx = ParityContext::new(ctx.n(), ctx.m(), &bits)?;
    Ok((HighestWeight::from_parts(new_ctx, rows), steps))
}

pub fn transport_parity(hw: &HighestWeight, target: &[u8]) -> Result<HighestWeight> {
    transport_with_trace(hw, target).map(|(w, _)| w)
}

pub fn to_standard(hw: &HighestWeight) -> Result<(HighestWeight, Vec<ReflectionStep>)> {
    transport_with_trace(hw, &standard_bits(hw.ctx().n(), hw.ctx().m()))
}

/// `λ^{[n]}_m`: reflect `(λ_m, λ_{m+1})`, then `(λ^{[i]}_m, λ_{m+i+1})` for
/// `i = 1, …, n−1`, keeping the second output each time.
pub fn iterated_reflection_series(hw: &HighestWeight) -> Result<RootMultiset> {
    let ctx = hw.ctx();
    if !ctx.is_standard() {
        return Err(Error::NonStandardParity(ctx.parity_string()));
    }
    let m = ctx.m();
    let mut current = hw.row(m - 1).clone();
    for i in 0..ctx.n() {
        current = odd_reflection(&current, hw.row(m + i))?.1;
    }
    Ok(current)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::roots;
    use crate::super_space::parse_bits;

    #[test]
    fn reflection_examples() {
        assert_eq!(odd_reflection(&roots(&[(2, 1)]), &roots(&[(3, 1)])).unwrap(), (roots(&[(4, 1)]), roots(&[(3, 1)])));
        assert_eq!(odd_reflection(&roots(&[(5, 1)]), &roots(&[(5, 1)])).unwrap(), (roots(&[(5, 1)]), roots(&[(5, 1)])));
        assert_eq!(
            odd_reflection(&roots(&[(2, 1), (7, 1)]), &roots(&[(3, 1), (7, 1)])).unwrap(),
            (roots(&[(4, 1), (7, 1)]), roots(&[(3, 1), (7, 1)]))
        );
        assert!(odd_reflection(&roots(&[(1, 1)]), &roots(&[])).is_err());
    }

    #[test]
    fn inverse_undoes_reflection() {
        let (a, b) = (roots(&[(2, 1), (7, 1), (7, 1)]), roots(&[(7, 1), (3, 1), (1, 2)]));
        let (x, y) = odd_reflection(&a, &b).unwrap();
        assert_eq!(inverse_odd_reflection(&x, &y).unwrap(), (a, b));
    }

    #[test]
    fn paths() {
        let chain = standard_chain(2, 1);
        let s: Vec<String> = chain.iter().map(|c| bits_to_string(c)).collect();
        assert_eq!(s, vec!["100", "010", "001"]);
        let s: Vec<String> = standard_chain(2, 2).iter().map(|c| bits_to_string(c)).collect();
        assert_eq!(s, vec!["1100", "1010", "1001", "0101", "0011"]);
        assert!(transport_path(&parse_bits("10").unwrap(), &parse_bits("11").unwrap()).is_err());
    }

    #[test]
    fn transport_example() {
        let ctx = ParityContext::standard(1, 1);
        let hw = HighestWeight::new(&ctx, vec![roots(&[(-1, 1)]), roots(&[(0, 1)]), roots(&[(0, 1)])]).unwrap();
        let moved = transport_parity(&hw, &[0, 1]).unwrap();
        assert_eq!(moved.rows(), &[roots(&[(1, 1)]), roots(&[(0, 1)]), roots(&[(0, 1)])]);
        assert_eq!(transport_parity(&hw, ctx.parity()).unwrap(), hw);
        assert_eq!(transport_parity(&moved, ctx.parity()).unwrap(), hw);
    }

    #[test]
    fn iterated_series_examples() {
        let ctx = ParityContext::standard(1, 1);
        let hw = HighestWeight::new(&ctx, vec![roots(&[(-1, 1)]), roots(&[(0, 1)]), roots(&[(0, 1)])]).unwrap();
        assert_eq!(iterated_reflection_series(&hw).unwrap(), roots(&[(0, 1)]));

        let ctx = ParityContext::standard(2, 1);
        let hw = HighestWeight::new(
            &ctx,
            vec![roots(&[(-2, 1), (1, 2)]), roots(&[(2, 1), (1, 2)]), roots(&[(2, 1), (1, 2)]), roots(&[(3, 2), (0, 1)])],
        )
        .unwrap();
        assert_eq!(iterated_reflection_series(&hw).unwrap(), roots(&[(0, 1), (1, 2)]));

        let same = HighestWeight::new(&ctx, vec![roots(&[(3, 1)]); 4]).unwrap();
        assert_eq!(iterated_reflection_series(&same).unwrap(), roots(&[(3, 1)]));
        let moved = transport_parity(&same, &[0, 1, 0]).unwrap();
        assert!(matches!(iterated_reflection_series(&moved), Err(Error::NonStandardParity(_))));
    }
}
