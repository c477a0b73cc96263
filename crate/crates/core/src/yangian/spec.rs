use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exact::{Rational, SparseVec};
use crate::super_space::koszul::{flat_index, multi_index};
use crate::super_space::ParityContext;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ModuleKind {
    /// `C^{2n+1|2m}` itself.
    Vector,
    /// `(C^{2n+1|2m})^{⊗d}` with leg arguments `u+d−1, …, u`; standard parity.
    Sharp,
    /// `(C^{2n+1|2m})^{⊗d}` with leg arguments `u−d+1, …, u`; parity `0…01…1`.
    Flat,
}

impl FromStr for ModuleKind {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "vector" => Ok(ModuleKind::Vector),
            "sharp" => Ok(ModuleKind::Sharp),
            "flat" => Ok(ModuleKind::Flat),
            other => Err(Error::InvalidModule(format!("unknown module kind {other:?}"))),
        }
    }
}

impl fmt::Display for ModuleKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ModuleKind::Vector => "vector",
            ModuleKind::Sharp => "sharp",
            ModuleKind::Flat => "flat",
        })
    }
}

/// A tensor module built from vector representations, composed with the
/// shift automorphism `t_{ij}(u) ↦ t_{ij}(u − a)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct ModuleSpec {
    ctx: ParityContext,
    kind: ModuleKind,
    d: usize,
    shift: Rational,
}

impl ModuleSpec {
    pub fn new(ctx: &ParityContext, kind: ModuleKind, d: usize, shift: Rational) -> Result<Self> {
        match kind {
            ModuleKind::Vector if d != 1 => {
                return Err(Error::InvalidModule(format!("the vector representation has d = 1, got {d}")));
            }
            ModuleKind::Sharp => {
                if !ctx.is_standard() {
                    return Err(Error::InvalidModule(format!(
                        "sharp modules need the standard parity, got {}",
                        ctx.parity_string()
                    )));
                }
                if d == 0 || d > ctx.m() {
                    return Err(Error::InvalidModule(format!("sharp depth must lie in 1..={}, got {d}", ctx.m())));
                }
            }
            ModuleKind::Flat => {
                if !ctx.is_reversed() {
                    return Err(Error::InvalidModule(format!(
                        "flat modules need the parity 0…01…1, got {}",
                        ctx.parity_string()
                    )));
                }
                if d == 0 || d > ctx.n() {
                    return Err(Error::InvalidModule(format!("flat depth must lie in 1..={}, got {d}", ctx.n())));
                }
            }
            ModuleKind::Vector => {}
        }
        Ok(ModuleSpec { ctx: ctx.clone(), kind, d, shift })
    }

    pub fn vector(ctx: &ParityContext) -> Self {
        Self::new(ctx, ModuleKind::Vector, 1, Rational::zero()).expect("vector spec is valid")
    }

    pub fn sharp(ctx: &ParityContext, d: usize) -> Result<Self> {
        Self::new(ctx, ModuleKind::Sharp, d, Rational::zero())
    }

    pub fn flat(ctx: &ParityContext, d: usize) -> Result<Self> {
        Self::new(ctx, ModuleKind::Flat, d, Rational::zero())
    }

    pub fn with_shift(mut self, shift: Rational) -> Self {
        self.shift = shift;
        self
    }

    pub fn ctx(&self) -> &ParityContext {
        &self.ctx
    }

    pub fn kind(&self) -> ModuleKind {
        self.kind
    }

    pub fn d(&self) -> usize {
        self.d
    }

    pub fn shift(&self) -> &Rational {
        &self.shift
    }

    /// Argument offsets: leg `k` is evaluated at `u + offsets[k]`.
    pub fn leg_offsets(&self) -> Vec<Rational> {
        let d = self.d as i64;
        (0..d)
            .map(|k| {
                let delta = match self.kind {
                    ModuleKind::Vector => 0,
                    ModuleKind::Sharp => d - 1 - k,
                    ModuleKind::Flat => k - d + 1,
                };
                Rational::from_integer(delta) - &self.shift
            })
            .collect()
    }

    pub fn dim(&self) -> usize {
        self.ctx.dim().pow(self.d as u32)
    }

    /// Parities of the tensor basis, in flattened order.
    pub fn basis_parities(&self) -> Vec<u8> {
        let dims = vec![self.ctx.dim(); self.d];
        (0..self.dim())
            .map(|f| multi_index(&dims, f).iter().map(|&i| self.ctx.bar(i)).sum::<u8>() % 2)
            .collect()
    }

    /// Reason the action has a pole at `u0`, naming the offending leg.
    pub fn pole(&self, u0: &Rational) -> Option<String> {
        let kappa = self.ctx.kappa();
        for (k, c) in self.leg_offsets().iter().enumerate() {
            let x = u0 + c;
            if x.is_zero() {
                return Some(format!("leg {} argument u0 + ({c}) vanishes at u0 = {u0}", k + 1));
            }
            if (&x + &kappa).is_zero() {
                return Some(format!("leg {} argument u0 + ({c}) equals −κ at u0 = {u0}", k + 1));
            }
        }
        None
    }
}

impl fmt::Display for ModuleSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}(d={}, a={}) over {:?}", self.kind, self.d, self.shift, self.ctx)
    }
}

/// `ξ_d = Σ_σ sgn σ · e_{σ(1)} ⊗ … ⊗ e_{σ(d)}` over the first `d` basis vectors.
pub fn highest_vector(spec: &ModuleSpec) -> SparseVec {
    let d = spec.d();
    let dims = vec![spec.ctx().dim(); d];
    let mut out = Vec::new();
    let mut perm: Vec<usize> = (0..d).collect();
    permutations(&mut perm, 0, &mut |p| {
        let inversions = (0..d).flat_map(|a| (a + 1..d).map(move |b| (a, b))).filter(|&(a, b)| p[a] > p[b]).count();
        out.push((flat_index(&dims, p), Rational::sign(inversions as u32)));
    });
    crate::exact::compress(out)
}

fn permutations(p: &mut Vec<usize>, k: usize, visit: &mut impl FnMut(&[usize])) {
    if k == p.len() {
        visit(p);
        return;
    }
    for i in k..p.len() {
        p.swap(k, i);
        permutations(p, k + 1, visit);
        p.swap(k, i);
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::q;

    #[test]
    fn validation() {
        let std12 = ParityContext::standard(1, 2);
        assert!(ModuleSpec::sharp(&std12, 2).is_ok());
        assert!(ModuleSpec::sharp(&std12, 3).is_err());
        assert!(ModuleSpec::flat(&std12, 1).is_err());
        let rev21 = ParityContext::reversed(2, 1);
        assert!(ModuleSpec::flat(&rev21, 2).is_ok());
        assert!(ModuleSpec::sharp(&rev21, 1).is_err());
    }

    #[test]
    fn offsets_include_shift() {
        let ctx = ParityContext::standard(1, 2);
        let s = ModuleSpec::sharp(&ctx, 2).unwrap().with_shift(q(1, 2));
        assert_eq!(s.leg_offsets(), vec![q(1, 2), q(-1, 2)]);
        let f = ModuleSpec::flat(&ParityContext::reversed(2, 1), 2).unwrap();
        assert_eq!(f.leg_offsets(), vec![q(-1, 1), q(0, 1)]);
    }

    #[test]
    fn xi_vectors() {
        let ctx = ParityContext::standard(1, 3);
        let dim = ctx.dim();
        assert_eq!(highest_vector(&ModuleSpec::vector(&ctx)), vec![(0, q(1, 1))]);
        let xi2 = highest_vector(&ModuleSpec::sharp(&ctx, 2).unwrap());
        assert_eq!(xi2, vec![(1, q(1, 1)), (dim, q(-1, 1))]);
        let xi3 = highest_vector(&ModuleSpec::sharp(&ctx, 3).unwrap());
        assert_eq!(xi3.len(), 6);
        assert_eq!(xi3.iter().map(|(_, v)| v.clone()).sum::<Rational>(), q(0, 1));
    }
}
