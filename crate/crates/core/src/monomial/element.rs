use std::fmt;

use num_integer::{gcd, lcm};

use super::GroupDescriptor;
use crate::error::{Error, Result};

/// An element `w` of `G(de,e,r)` acting by `w(e_i) = ζ_de^{a_i} e_{σ(i)}`.
///
/// Indices are 0-based internally; the text form `perm=[..];exp=[..]` is
/// 1-based.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct MonomialElement {
    desc: GroupDescriptor,
    perm: Vec<usize>,
    exps: Vec<u32>,
}

/// One cycle `(i_1, …, i_α)` of `σ_w` with the sum of exponents along it,
/// i.e. the cycle product `p_{w,σ}` written additively.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CycleData {
    pub support: Vec<usize>,
    pub product_exponent: u32,
}

impl CycleData {
    pub fn len(&self) -> usize {
        self.support.len()
    }

    pub fn is_empty(&self) -> bool {
        self.support.is_empty()
    }
}

/// Multiplicative order of `ζ_n^k`.
pub fn root_order(k: u32, n: u32) -> u32 {
    n / gcd(k % n, n)
}

impl MonomialElement {
    /// Builds an element from a 0-based permutation and exponents. Exponents
    /// are reduced modulo `de`.
    pub fn new(desc: GroupDescriptor, perm: Vec<usize>, exps: Vec<u64>) -> Result<Self> {
        let r = desc.rank();
        if perm.len() != r || exps.len() != r {
            return Err(Error::InvalidElement(format!(
                "expected {r} images and {r} exponents, got {} and {}",
                perm.len(),
                exps.len()
            )));
        }
        let mut seen = vec![false; r];
        for &p in &perm {
            if p >= r || std::mem::replace(&mut seen[p], true) {
                return Err(Error::InvalidElement(format!("{perm:?} is not a permutation")));
            }
        }
        let de = u64::from(desc.de());
        let exps: Vec<u32> = exps.iter().map(|&a| (a % de) as u32).collect();
        let sum: u64 = exps.iter().map(|&a| u64::from(a)).sum();
        if !sum.is_multiple_of(u64::from(desc.e())) {
            return Err(Error::InvalidElement(format!(
                "exponent sum {sum} is not divisible by e={}",
                desc.e()
            )));
        }
        Ok(MonomialElement { desc, perm, exps })
    }

    /// Parses `perm=[2,1,3];exp=[1,2,0]` (1-based images).
    pub fn parse(desc: GroupDescriptor, s: &str) -> Result<Self> {
        let bad = |msg: &str| Error::Parse(format!("{msg} in element {s:?}"));
        let mut perm = None;
        let mut exps = None;
        for part in s.split(';') {
            let (key, value) = part.split_once('=').ok_or_else(|| bad("missing '='"))?;
            let list = value
                .trim()
                .strip_prefix('[')
                .and_then(|v| v.strip_suffix(']'))
                .ok_or_else(|| bad("expected a bracketed list"))?;
            let nums = if list.trim().is_empty() {
                Vec::new()
            } else {
                list.split(',')
                    .map(|x| x.trim().parse::<i64>().map_err(|_| bad("bad integer")))
                    .collect::<Result<Vec<_>>>()?
            };
            match key.trim() {
                "perm" => perm = Some(nums),
                "exp" => exps = Some(nums),
                _ => return Err(bad("unknown key")),
            }
        }
        let perm = perm.ok_or_else(|| bad("missing perm"))?;
        let exps = exps.ok_or_else(|| bad("missing exp"))?;
        let perm = perm
            .into_iter()
            .map(|p| if p >= 1 { Ok(p as usize - 1) } else { Err(bad("images are 1-based")) })
            .collect::<Result<Vec<_>>>()?;
        let de = i64::from(desc.de());
        let exps = exps.into_iter().map(|a| a.rem_euclid(de) as u64).collect();
        Self::new(desc, perm, exps)
    }

    pub fn identity(desc: GroupDescriptor) -> Self {
        let r = desc.rank();
        MonomialElement { desc, perm: (0..r).collect(), exps: vec![0; r] }
    }

    /// Diagonal element with the given exponents.
    pub fn diagonal(desc: GroupDescriptor, exps: Vec<u64>) -> Result<Self> {
        Self::new(desc, (0..desc.rank()).collect(), exps)
    }

    /// Element permuting coordinates by a 0-based permutation, no scalars.
    pub fn permutation(desc: GroupDescriptor, perm: Vec<usize>) -> Result<Self> {
        let r = perm.len();
        Self::new(desc, perm, vec![0; r])
    }

    /// Standard generators: `s_i = (i,i+1)`, then `s_1'` with
    /// `e_1 ↦ ζ e_2, e_2 ↦ ζ^{-1} e_1` when `e ≥ 2`, then `t = diag(ζ^e, 1, …)`
    /// when `d ≥ 2`. Empty for the trivial group `G(1,1,1)`.
    pub fn standard_generators(desc: GroupDescriptor) -> Vec<Self> {
        let r = desc.rank();
        let de = u64::from(desc.de());
        let mut gens = Vec::new();
        for i in 0..r.saturating_sub(1) {
            let mut perm: Vec<usize> = (0..r).collect();
            perm.swap(i, i + 1);
            gens.push(Self::permutation(desc, perm).expect("transposition"));
        }
        if desc.e() >= 2 && r >= 2 {
            let mut perm: Vec<usize> = (0..r).collect();
            perm.swap(0, 1);
            let mut exps = vec![0; r];
            exps[0] = 1;
            exps[1] = de - 1;
            gens.push(Self::new(desc, perm, exps).expect("twisted transposition"));
        }
        if desc.d() >= 2 {
            let mut exps = vec![0; r];
            exps[0] = u64::from(desc.e());
            gens.push(Self::diagonal(desc, exps).expect("diagonal generator"));
        }
        gens
    }

    pub fn descriptor(&self) -> GroupDescriptor {
        self.desc
    }

    /// 0-based image of `i` under `σ_w`.
    pub fn image(&self, i: usize) -> usize {
        self.perm[i]
    }

    pub fn perm(&self) -> &[usize] {
        &self.perm
    }

    pub fn exponents(&self) -> &[u32] {
        &self.exps
    }

    pub fn exponent(&self, i: usize) -> u32 {
        self.exps[i]
    }

    pub fn is_identity(&self) -> bool {
        self.exps.iter().all(|&a| a == 0) && self.perm.iter().enumerate().all(|(i, &p)| i == p)
    }

    pub fn is_diagonal(&self) -> bool {
        self.perm.iter().enumerate().all(|(i, &p)| i == p)
    }

    fn check_same(&self, other: &Self) -> Result<()> {
        if self.desc != other.desc {
            return Err(Error::DescriptorMismatch(self.desc.to_string(), other.desc.to_string()));
        }
        Ok(())
    }

    /// `self ∘ other`: apply `other` first, then `self`.
    pub fn compose(&self, other: &Self) -> Result<Self> {
        self.check_same(other)?;
        Ok(self.compose_unchecked(other))
    }

    pub(crate) fn compose_unchecked(&self, other: &Self) -> Self {
        let de = self.desc.de();
        let r = self.perm.len();
        let mut perm = Vec::with_capacity(r);
        let mut exps = Vec::with_capacity(r);
        for i in 0..r {
            let j = other.perm[i];
            perm.push(self.perm[j]);
            exps.push((other.exps[i] + self.exps[j]) % de);
        }
        MonomialElement { desc: self.desc, perm, exps }
    }

    pub fn inverse(&self) -> Self {
        let de = self.desc.de();
        let r = self.perm.len();
        let mut perm = vec![0; r];
        let mut exps = vec![0; r];
        for i in 0..r {
            let j = self.perm[i];
            perm[j] = i;
            exps[j] = (de - self.exps[i]) % de;
        }
        MonomialElement { desc: self.desc, perm, exps }
    }

    /// `w^n` by repeated squaring; negative `n` uses the inverse.
    pub fn power(&self, n: i64) -> Self {
        let mut base = if n < 0 { self.inverse() } else { self.clone() };
        let mut k = n.unsigned_abs();
        let mut acc = Self::identity(self.desc);
        while k > 0 {
            if k & 1 == 1 {
                acc = acc.compose_unchecked(&base);
            }
            base = base.compose_unchecked(&base);
            k >>= 1;
        }
        acc
    }

    /// Cycles of `σ_w`, each starting at its smallest index, ordered by that
    /// index. Fixed points appear as length-1 cycles.
    pub fn cycles(&self) -> Vec<CycleData> {
        let de = self.desc.de();
        let r = self.perm.len();
        let mut seen = vec![false; r];
        let mut out = Vec::new();
        for start in 0..r {
            if seen[start] {
                continue;
            }
            let mut support = Vec::new();
            let mut sum = 0u32;
            let mut i = start;
            while !seen[i] {
                seen[i] = true;
                support.push(i);
                sum = (sum + self.exps[i]) % de;
                i = self.perm[i];
            }
            out.push(CycleData { support, product_exponent: sum });
        }
        out
    }

    /// Order as the lcm over cycles of `length × order(cycle product)`.
    pub fn order(&self) -> u64 {
        let de = self.desc.de();
        self.cycles().iter().fold(1u64, |acc, c| {
            let cycle_order = c.len() as u64 * u64::from(root_order(c.product_exponent, de));
            lcm(acc, cycle_order)
        })
    }

    /// Order by iterating powers; used to cross-check [`Self::order`].
    pub fn order_by_iteration(&self) -> u64 {
        let mut n = 1;
        let mut acc = self.clone();
        while !acc.is_identity() {
            acc = acc.compose_unchecked(self);
            n += 1;
        }
        n
    }

    pub fn commutes_with(&self, other: &Self) -> bool {
        self.compose_unchecked(other) == other.compose_unchecked(self)
    }

    /// Embeds into `G(de,e,r+extra)` by fixing the new coordinates.
    pub fn pad(&self, extra: usize) -> Result<Self> {
        let desc = GroupDescriptor::new(self.desc.d(), self.desc.e(), self.desc.rank() + extra)?;
        let r = self.perm.len();
        let perm = self.perm.iter().copied().chain(r..r + extra).collect();
        let exps =
            self.exps.iter().map(|&a| u64::from(a)).chain(std::iter::repeat_n(0, extra)).collect();
        Self::new(desc, perm, exps)
    }
}

impl fmt::Display for MonomialElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let perm: Vec<String> = self.perm.iter().map(|p| (p + 1).to_string()).collect();
        let exps: Vec<String> = self.exps.iter().map(|a| a.to_string()).collect();
        write!(f, "perm=[{}];exp=[{}]", perm.join(","), exps.join(","))
    }
}
