//! Affine Frobenius groups `Z/p ⋊ Z/q` acting on the cosets of the
//! complement, i.e. on `Z/p` by `x ↦ m^j x + b`.

use serde::Serialize;

use super::perm::{cycle_lengths, in_f_n, perm_order, Perm, PermutationGroup};
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct FrobeniusSpec {
    pub p: u64,
    pub q: u64,
    pub m: u64,
}

fn is_prime(n: u64) -> bool {
    n >= 2 && (2..).take_while(|d| d * d <= n).all(|d| !n.is_multiple_of(d))
}

fn mult_order(m: u64, p: u64) -> Option<u64> {
    let m = m % p;
    if m == 0 {
        return None;
    }
    let mut acc = m;
    let mut k = 1;
    while acc != 1 {
        acc = acc * m % p;
        k += 1;
    }
    Some(k)
}

impl FrobeniusSpec {
    pub fn new(p: u64, q: u64, m: u64) -> Result<Self> {
        let bad = |msg: String| Err(Error::InvalidFrobenius(msg));
        if !is_prime(p) || p == 2 {
            return bad(format!("p = {p} is not an odd prime"));
        }
        if q.is_multiple_of(2) || !(p - 1).is_multiple_of(q) {
            return bad(format!("q = {q} is not an odd divisor of p − 1 = {}", p - 1));
        }
        if mult_order(m, p) != Some(q) {
            return bad(format!("{m} does not have multiplicative order {q} mod {p}"));
        }
        Ok(FrobeniusSpec { p, q, m: m % p })
    }

    /// Uses the smallest multiplier of order `q`.
    pub fn with_smallest_multiplier(p: u64, q: u64) -> Result<Self> {
        if !is_prime(p) || p == 2 || q == 0 || q.is_multiple_of(2) || !(p - 1).is_multiple_of(q) {
            return Self::new(p, q, 1);
        }
        let m = (1..p).find(|&m| mult_order(m, p) == Some(q)).expect("cyclic unit group");
        Self::new(p, q, m)
    }

    pub fn order(&self) -> u64 {
        self.p * self.q
    }

    /// `x ↦ m^j x + b` on `0..p`.
    pub fn affine_map(&self, j: u64, b: u64) -> Perm {
        let mj = (0..j).fold(1, |acc, _| acc * self.m % self.p);
        (0..self.p).map(|x| ((mj * x + b) % self.p) as usize).collect()
    }
}

/// One element's cycle data against the expected Frobenius pattern.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ElementCheck {
    pub j: u64,
    pub b: u64,
    pub order: usize,
    pub fixed_points: usize,
    pub cycles_of_order_length: usize,
    pub in_kernel: bool,
    pub matches: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct FrobeniusAction {
    pub spec: FrobeniusSpec,
    #[serde(skip)]
    pub group: PermutationGroup,
    pub checks: Vec<ElementCheck>,
    pub faithful: bool,
    pub all_in_f_p: bool,
}

impl FrobeniusAction {
    /// Kernel elements are products of `[G:H]/k` cycles of length `k`;
    /// the others fix exactly one point and have `([G:H]−1)/k` such cycles.
    pub fn cycle_structure_ok(&self) -> bool {
        self.checks.iter().all(|c| c.matches)
    }
}

/// Builds the coset action and checks the kernel / complement cycle
/// patterns element by element.
pub fn frobenius_coset_action(spec: FrobeniusSpec) -> Result<FrobeniusAction> {
    let spec = FrobeniusSpec::new(spec.p, spec.q, spec.m)?;
    let p = spec.p as usize;
    let gens = [spec.affine_map(0, 1), spec.affine_map(1, 0)];
    let group = PermutationGroup::closure(p, &gens, spec.order() as usize + 1)?;
    let mut checks = Vec::new();
    for j in 0..spec.q {
        for b in 0..spec.p {
            let g = spec.affine_map(j, b);
            let order = perm_order(&g);
            let lengths = cycle_lengths(&g);
            let fixed_points = lengths.iter().filter(|&&l| l == 1).count();
            let cycles_of_order_length = lengths.iter().filter(|&&l| l == order).count();
            let in_kernel = j == 0;
            let matches = if order == 1 {
                fixed_points == p
            } else if in_kernel {
                fixed_points == 0
                    && cycles_of_order_length == p / order
                    && lengths.len() == p / order
            } else {
                fixed_points == 1
                    && cycles_of_order_length == (p - 1) / order
                    && lengths.len() == 1 + (p - 1) / order
            };
            checks.push(ElementCheck {
                j,
                b,
                order,
                fixed_points,
                cycles_of_order_length,
                in_kernel,
                matches,
            });
        }
    }
    let faithful = group.len() as u64 == spec.order();
    let all_in_f_p = group.elements().iter().all(|g| in_f_n(g));
    Ok(FrobeniusAction { spec, group, checks, faithful, all_in_f_p })
}
