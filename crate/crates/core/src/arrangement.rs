//! The reflection arrangement `𝒜` of `G(de,e,r)` and the action of the group
//! on it.
//!
//! The hyperplanes are `H_{i,j,t} = {z_i = ζ^t z_j}` for `i < j` and, when
//! `d ≥ 2`, the coordinate hyperplanes `H_i = {z_i = 0}`. Canonical order:
//! all swap hyperplanes lexicographically by `(i, j, t)`, then coordinate
//! hyperplanes by `i`. Lattice vectors and reports are indexed by this order.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::monomial::{GroupDescriptor, MonomialElement, Subgroup};

/// A reflecting hyperplane. Indices are 0-based; swaps satisfy `i < j`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Hyperplane {
    Swap { i: usize, j: usize, t: u32 },
    Coord(usize),
}

impl Hyperplane {
    /// `{z_i = ζ_de^t z_j}` normalized so the smaller index comes first.
    pub fn swap(i: usize, j: usize, t: i64, de: u32) -> Self {
        assert_ne!(i, j, "swap hyperplane needs two distinct coordinates");
        let de = i64::from(de);
        if i < j {
            Hyperplane::Swap { i, j, t: t.rem_euclid(de) as u32 }
        } else {
            Hyperplane::Swap { i: j, j: i, t: (-t).rem_euclid(de) as u32 }
        }
    }

    fn check(&self, desc: GroupDescriptor) -> Result<()> {
        match *self {
            Hyperplane::Coord(i) => {
                if !desc.has_coordinate_hyperplanes() {
                    return Err(Error::NoCoordinateHyperplane(i + 1));
                }
                if i >= desc.rank() {
                    return Err(Error::Parse(format!("{self} out of range for {desc}")));
                }
            }
            Hyperplane::Swap { i, j, t } => {
                if i >= j || j >= desc.rank() || t >= desc.de() {
                    return Err(Error::Parse(format!("{self} out of range for {desc}")));
                }
            }
        }
        Ok(())
    }
}

impl fmt::Display for Hyperplane {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Hyperplane::Swap { i, j, t } => write!(f, "H[{},{};{}]", i + 1, j + 1, t),
            Hyperplane::Coord(i) => write!(f, "H[{}]", i + 1),
        }
    }
}

impl FromStr for Hyperplane {
    type Err = Error;

    /// Parses `H[i,j;t]` or `H[i]` (1-based). Swap hyperplanes must already be
    /// normalized (`i < j`).
    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::Parse(format!("expected \"H[i,j;t]\" or \"H[i]\", got {s:?}"));
        let inner =
            s.trim().strip_prefix("H[").and_then(|x| x.strip_suffix(']')).ok_or_else(bad)?;
        let num = |x: &str| x.trim().parse::<usize>().map_err(|_| bad());
        match inner.split_once(';') {
            Some((pair, t)) => {
                let (i, j) = pair.split_once(',').ok_or_else(bad)?;
                let (i, j, t) = (num(i)?, num(j)?, num(t)?);
                if i == 0 || i >= j {
                    return Err(bad());
                }
                Ok(Hyperplane::Swap { i: i - 1, j: j - 1, t: t as u32 })
            }
            None => {
                let i = num(inner)?;
                if i == 0 {
                    return Err(bad());
                }
                Ok(Hyperplane::Coord(i - 1))
            }
        }
    }
}

impl Serialize for Hyperplane {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Hyperplane {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// `ζ_{2de}^k`: an eigenvalue on a normal line. Roots of `U_de` sit at even
/// exponents and `-1` at `k = de`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct ScalarRoot {
    exponent: u32,
    modulus: u32,
}

impl ScalarRoot {
    pub fn new(exponent: u64, de: u32) -> Self {
        let modulus = 2 * de;
        ScalarRoot { exponent: (exponent % u64::from(modulus)) as u32, modulus }
    }

    /// Embeds `ζ_de^a`.
    pub fn from_de_exponent(a: u32, de: u32) -> Self {
        Self::new(2 * u64::from(a), de)
    }

    pub fn exponent(&self) -> u32 {
        self.exponent
    }

    pub fn modulus(&self) -> u32 {
        self.modulus
    }

    pub fn is_one(&self) -> bool {
        self.exponent == 0
    }

    pub fn pow(&self, n: u64) -> Self {
        let m = u64::from(self.modulus);
        ScalarRoot {
            exponent: ((u64::from(self.exponent) * (n % m)) % m) as u32,
            modulus: self.modulus,
        }
    }

    pub fn order(&self) -> u32 {
        crate::monomial::root_order(self.exponent, self.modulus)
    }
}

impl fmt::Display for ScalarRoot {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "ζ_{}^{}", self.modulus, self.exponent)
    }
}

/// The hyperplanes of `G(de,e,r)` in canonical order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Arrangement {
    desc: GroupDescriptor,
    hyperplanes: Vec<Hyperplane>,
}

pub fn hyperplanes(desc: GroupDescriptor) -> Vec<Hyperplane> {
    let r = desc.rank();
    let mut out = Vec::new();
    for i in 0..r {
        for j in i + 1..r {
            for t in 0..desc.de() {
                out.push(Hyperplane::Swap { i, j, t });
            }
        }
    }
    if desc.has_coordinate_hyperplanes() {
        out.extend((0..r).map(Hyperplane::Coord));
    }
    out
}

impl Arrangement {
    pub fn new(desc: GroupDescriptor) -> Self {
        Arrangement { desc, hyperplanes: hyperplanes(desc) }
    }

    pub fn descriptor(&self) -> GroupDescriptor {
        self.desc
    }

    pub fn len(&self) -> usize {
        self.hyperplanes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.hyperplanes.is_empty()
    }

    pub fn hyperplanes(&self) -> &[Hyperplane] {
        &self.hyperplanes
    }

    pub fn get(&self, index: usize) -> Hyperplane {
        self.hyperplanes[index]
    }

    fn swap_count(&self) -> usize {
        let r = self.desc.rank();
        r * (r - 1) / 2 * self.desc.de() as usize
    }

    /// Position of `h` in canonical order, computed in closed form.
    pub fn index_of(&self, h: Hyperplane) -> Result<usize> {
        h.check(self.desc)?;
        let r = self.desc.rank();
        Ok(match h {
            Hyperplane::Swap { i, j, t } => {
                let pair = i * r - i * (i + 1) / 2 + (j - i - 1);
                pair * self.desc.de() as usize + t as usize
            }
            Hyperplane::Coord(i) => self.swap_count() + i,
        })
    }

    /// For each hyperplane index `k`, the index of `w·H_k`.
    pub fn permutation_of(&self, w: &MonomialElement) -> Result<Vec<usize>> {
        self.check_element(w)?;
        self.hyperplanes.iter().map(|&h| self.index_of(act_unchecked(w, h))).collect()
    }

    fn check_element(&self, w: &MonomialElement) -> Result<()> {
        if w.descriptor() != self.desc {
            return Err(Error::DescriptorMismatch(
                self.desc.to_string(),
                w.descriptor().to_string(),
            ));
        }
        Ok(())
    }
}

fn act_unchecked(w: &MonomialElement, h: Hyperplane) -> Hyperplane {
    match h {
        Hyperplane::Coord(i) => Hyperplane::Coord(w.image(i)),
        Hyperplane::Swap { i, j, t } => {
            let shift = i64::from(w.exponent(i)) - i64::from(w.exponent(j));
            Hyperplane::swap(w.image(i), w.image(j), i64::from(t) + shift, w.descriptor().de())
        }
    }
}

/// `w·H`: `H_i ↦ H_{σ(i)}` and `H_{i,j,t} ↦ H_{σ(i),σ(j),t+a_i−a_j}`.
pub fn act(w: &MonomialElement, h: Hyperplane) -> Result<Hyperplane> {
    h.check(w.descriptor())?;
    Ok(act_unchecked(w, h))
}

pub fn stabilizes(w: &MonomialElement, h: Hyperplane) -> Result<bool> {
    Ok(act(w, h)? == h)
}

/// Eigenvalue of `w` on the normal line `H^⊥`, for `w ∈ N_H`.
///
/// With the standard hermitian product, `H_{i,j,t}^⊥` is spanned by
/// `e_i − ζ^{−t} e_j` and `H_i^⊥` by `e_i`.
pub fn scalar_on_normal(w: &MonomialElement, h: Hyperplane) -> Result<ScalarRoot> {
    if !stabilizes(w, h)? {
        return Err(Error::NotStabilizing { element: w.to_string(), hyperplane: h.to_string() });
    }
    Ok(scalar_unchecked(w, h))
}

fn scalar_unchecked(w: &MonomialElement, h: Hyperplane) -> ScalarRoot {
    let de = w.descriptor().de();
    match h {
        Hyperplane::Coord(i) => ScalarRoot::from_de_exponent(w.exponent(i), de),
        Hyperplane::Swap { i, .. } if w.image(i) == i => {
            ScalarRoot::from_de_exponent(w.exponent(i), de)
        }
        // σ exchanges i and j: the normal is sent to −ζ^{t+a_i} times itself
        Hyperplane::Swap { i, t, .. } => {
            ScalarRoot::new(u64::from(de) + 2 * u64::from(t + w.exponent(i)), de)
        }
    }
}

/// `w ∈ C_H`: `w` stabilizes `H` and fixes `H^⊥` pointwise.
pub fn in_parabolic(w: &MonomialElement, h: Hyperplane) -> Result<bool> {
    Ok(stabilizes(w, h)? && scalar_unchecked(w, h).is_one())
}

/// Orbits of `G` on the hyperplane indices, each sorted, ordered by their
/// smallest member.
pub fn orbits(group: &Subgroup) -> Vec<Vec<usize>> {
    let arr = Arrangement::new(group.descriptor());
    let perms: Vec<Vec<usize>> = group
        .generators()
        .iter()
        .map(|g| arr.permutation_of(g).expect("generator of the same group"))
        .collect();
    let mut seen = vec![false; arr.len()];
    let mut out = Vec::new();
    for start in 0..arr.len() {
        if seen[start] {
            continue;
        }
        seen[start] = true;
        let mut orbit = BTreeSet::from([start]);
        let mut stack = vec![start];
        while let Some(k) = stack.pop() {
            for p in &perms {
                let m = p[k];
                if !seen[m] {
                    seen[m] = true;
                    orbit.insert(m);
                    stack.push(m);
                }
            }
        }
        out.push(orbit.into_iter().collect());
    }
    out
}

/// Whether only the identity of `G` fixes every hyperplane.
pub fn acts_faithfully_on_arrangement(group: &Subgroup) -> Result<bool> {
    let arr = Arrangement::new(group.descriptor());
    if arr.is_empty() {
        return Err(Error::EmptyArrangement);
    }
    for g in group.elements() {
        if g.is_identity() {
            continue;
        }
        let moves_something = arr.hyperplanes().iter().any(|&h| act_unchecked(g, h) != h);
        if !moves_something {
            return Ok(false);
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn desc(s: &str) -> GroupDescriptor {
        s.parse().unwrap()
    }

    fn el(g: &str, s: &str) -> MonomialElement {
        MonomialElement::parse(desc(g), s).unwrap()
    }

    fn hp(s: &str) -> Hyperplane {
        s.parse().unwrap()
    }

    #[test]
    fn counts() {
        assert_eq!(hyperplanes(desc("S(3)")).len(), 3);
        assert_eq!(hyperplanes(desc("G(2,1,2)")).len(), 4);
        let h = hyperplanes(desc("G(3,3,2)"));
        assert_eq!(h.len(), 3);
        assert!(h.iter().all(|h| matches!(h, Hyperplane::Swap { .. })));
        assert!(hyperplanes(desc("G(1,1,1)")).is_empty());
        assert_eq!(hyperplanes(desc("G(2,1,1)")), vec![Hyperplane::Coord(0)]);
    }

    #[test]
    fn canonical_order_and_index() {
        let arr = Arrangement::new(desc("G(6,3,3)"));
        let mut sorted = arr.hyperplanes().to_vec();
        sorted.sort();
        assert_eq!(sorted, arr.hyperplanes());
        for (k, &h) in arr.hyperplanes().iter().enumerate() {
            assert_eq!(arr.index_of(h).unwrap(), k);
        }
    }

    #[test]
    fn normalization() {
        assert_eq!(Hyperplane::swap(2, 0, 1, 3), Hyperplane::Swap { i: 0, j: 2, t: 2 });
        assert_eq!(Hyperplane::swap(0, 2, -1, 3), Hyperplane::Swap { i: 0, j: 2, t: 2 });
    }

    #[test]
    fn text_format() {
        assert_eq!(Hyperplane::Swap { i: 0, j: 1, t: 0 }.to_string(), "H[1,2;0]");
        assert_eq!(Hyperplane::Coord(2).to_string(), "H[3]");
        assert_eq!(hp("H[1,3;2]"), Hyperplane::Swap { i: 0, j: 2, t: 2 });
        assert!("H[2,1;0]".parse::<Hyperplane>().is_err());
        assert!("H[0]".parse::<Hyperplane>().is_err());
        assert!("H(1)".parse::<Hyperplane>().is_err());
    }

    #[test]
    fn act_examples() {
        let w = el("S(3)", "perm=[2,1,3];exp=[0,0,0]");
        assert_eq!(act(&w, hp("H[1,3;0]")).unwrap(), hp("H[2,3;0]"));
        let d = el("G(3,3,2)", "perm=[1,2];exp=[1,2]");
        assert_eq!(act(&d, hp("H[1,2;0]")).unwrap(), hp("H[1,2;2]"));
        let g = desc("G(6,3,2)");
        let id = MonomialElement::identity(g);
        for h in hyperplanes(g) {
            assert_eq!(act(&id, h).unwrap(), h);
        }
    }

    #[test]
    fn act_rejects_coord_when_d_is_one() {
        let id = MonomialElement::identity(desc("G(3,3,2)"));
        assert_eq!(act(&id, Hyperplane::Coord(0)), Err(Error::NoCoordinateHyperplane(1)));
    }

    #[test]
    fn stabilizer_examples() {
        let t = el("S(3)", "perm=[2,1,3];exp=[0,0,0]");
        let c = el("S(3)", "perm=[2,3,1];exp=[0,0,0]");
        assert!(stabilizes(&t, hp("H[1,2;0]")).unwrap());
        assert!(!stabilizes(&c, hp("H[1,2;0]")).unwrap());
        assert_eq!(act(&c, hp("H[1,2;0]")).unwrap(), hp("H[2,3;0]"));
    }

    #[test]
    fn scalar_examples() {
        let minus_id = el("G(2,1,2)", "perm=[1,2];exp=[1,1]");
        let s = scalar_on_normal(&minus_id, hp("H[1]")).unwrap();
        assert_eq!(s, ScalarRoot::new(2, 2)); // -1 = ζ_4^2
        let t = el("S(2)", "perm=[2,1];exp=[0,0]");
        let s = scalar_on_normal(&t, hp("H[1,2;0]")).unwrap();
        assert_eq!(s.exponent(), 1); // -1 = ζ_2^1
        assert_eq!(s.order(), 2);
        let c = el("S(3)", "perm=[2,3,1];exp=[0,0,0]");
        assert!(matches!(scalar_on_normal(&c, hp("H[1,2;0]")), Err(Error::NotStabilizing { .. })));
    }

    #[test]
    fn parabolic_examples() {
        let t = el("S(3)", "perm=[2,1,3];exp=[0,0,0]");
        assert!(!in_parabolic(&t, hp("H[1,2;0]")).unwrap());
        let w = el("S(5)", "perm=[1,2,4,5,3];exp=[0,0,0,0,0]");
        assert!(in_parabolic(&w, hp("H[1,2;0]")).unwrap());
        let g = desc("G(6,3,2)");
        for h in hyperplanes(g) {
            assert!(in_parabolic(&MonomialElement::identity(g), h).unwrap());
        }
    }

    #[test]
    fn orbit_examples() {
        let c = el("S(3)", "perm=[2,3,1];exp=[0,0,0]");
        assert_eq!(orbits(&Subgroup::cyclic(&c)), vec![vec![0, 1, 2]]);
        assert_eq!(orbits(&Subgroup::trivial(desc("S(3)"))), vec![vec![0], vec![1], vec![2]]);
        let d = el("G(3,3,2)", "perm=[1,2];exp=[1,2]");
        assert_eq!(orbits(&Subgroup::cyclic(&d)), vec![vec![0, 1, 2]]);
    }

    #[test]
    fn faithfulness_examples() {
        let minus_id = el("G(2,1,2)", "perm=[1,2];exp=[1,1]");
        assert!(!acts_faithfully_on_arrangement(&Subgroup::cyclic(&minus_id)).unwrap());
        assert!(acts_faithfully_on_arrangement(&Subgroup::trivial(desc("S(3)"))).unwrap());
        let c = el("S(3)", "perm=[2,3,1];exp=[0,0,0]");
        assert!(acts_faithfully_on_arrangement(&Subgroup::cyclic(&c)).unwrap());
        assert_eq!(
            acts_faithfully_on_arrangement(&Subgroup::trivial(desc("G(1,1,1)"))),
            Err(Error::EmptyArrangement)
        );
    }
}
