use std::collections::{BTreeSet, VecDeque};

use crate::error::{Error, Result};
use crate::monomial::{GroupDescriptor, MonomialElement, Subgroup};

/// Images of `0..n`; composition acts on the left like monomial elements.
pub type Perm = Vec<usize>;

pub fn perm_identity(n: usize) -> Perm {
    (0..n).collect()
}

/// `p ∘ q`: apply `q`, then `p`.
pub fn perm_compose(p: &[usize], q: &[usize]) -> Perm {
    q.iter().map(|&i| p[i]).collect()
}

pub fn perm_inverse(p: &[usize]) -> Perm {
    let mut inv = vec![0; p.len()];
    for (i, &j) in p.iter().enumerate() {
        inv[j] = i;
    }
    inv
}

/// Parses cycle notation on `1..=n`, e.g. `(1,2,3)(4,5)`; `()` is the
/// identity.
pub fn perm_from_cycles(n: usize, s: &str) -> Result<Perm> {
    let bad = || Error::Parse(format!("bad cycle notation {s:?} on {n} points"));
    let mut p = perm_identity(n);
    let mut seen = vec![false; n];
    for chunk in s.split(')').map(str::trim).filter(|c| !c.is_empty()) {
        let body = chunk.strip_prefix('(').ok_or_else(bad)?;
        if body.trim().is_empty() {
            continue;
        }
        let pts = body
            .split(',')
            .map(|x| match x.trim().parse::<usize>() {
                Ok(v) if (1..=n).contains(&v) => Ok(v - 1),
                _ => Err(bad()),
            })
            .collect::<Result<Vec<_>>>()?;
        for (k, &a) in pts.iter().enumerate() {
            if std::mem::replace(&mut seen[a], true) {
                return Err(bad());
            }
            p[a] = pts[(k + 1) % pts.len()];
        }
    }
    Ok(p)
}

/// Cycle lengths of `p`, fixed points included.
pub fn cycle_lengths(p: &[usize]) -> Vec<usize> {
    let mut seen = vec![false; p.len()];
    let mut out = Vec::new();
    for start in 0..p.len() {
        let mut len = 0;
        let mut i = start;
        while !seen[i] {
            seen[i] = true;
            i = p[i];
            len += 1;
        }
        if len > 0 {
            out.push(len);
        }
    }
    out
}

pub fn perm_order(p: &[usize]) -> usize {
    cycle_lengths(p).into_iter().fold(1, num_integer::lcm)
}

/// A finite permutation group on `0..degree`, stored with all elements.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PermutationGroup {
    degree: usize,
    elements: Vec<Perm>,
}

impl PermutationGroup {
    pub fn trivial(degree: usize) -> Self {
        PermutationGroup { degree, elements: vec![perm_identity(degree)] }
    }

    pub fn closure(degree: usize, gens: &[Perm], max_size: usize) -> Result<Self> {
        if gens.iter().any(|g| g.len() != degree) {
            return Err(Error::InvalidElement(format!("generator not on {degree} points")));
        }
        let mut seen = BTreeSet::from([perm_identity(degree)]);
        let mut queue = VecDeque::from([perm_identity(degree)]);
        while let Some(x) = queue.pop_front() {
            for g in gens {
                let y = perm_compose(g, &x);
                if !seen.contains(&y) {
                    if seen.len() >= max_size {
                        return Err(Error::SizeLimit { limit: max_size });
                    }
                    seen.insert(y.clone());
                    queue.push_back(y);
                }
            }
        }
        Ok(PermutationGroup { degree, elements: seen.into_iter().collect() })
    }

    /// Wraps an element list, checking identity and closure.
    pub fn from_elements(degree: usize, elements: Vec<Perm>) -> Result<Self> {
        let set: BTreeSet<Perm> = elements.into_iter().collect();
        if !set.contains(&perm_identity(degree)) {
            return Err(Error::NotASubgroup("identity missing".into()));
        }
        for a in &set {
            if a.len() != degree {
                return Err(Error::InvalidElement(format!("{a:?} is not on {degree} points")));
            }
            for b in &set {
                if !set.contains(&perm_compose(a, b)) {
                    return Err(Error::NotASubgroup("not closed under composition".into()));
                }
            }
        }
        Ok(PermutationGroup { degree, elements: set.into_iter().collect() })
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn elements(&self) -> &[Perm] {
        &self.elements
    }

    pub fn contains(&self, p: &[usize]) -> bool {
        self.elements.binary_search_by(|x| x.as_slice().cmp(p)).is_ok()
    }

    /// The same group as permutation matrices in `G(1,1,n)`.
    pub fn to_monomial(&self) -> Result<Subgroup> {
        let desc = GroupDescriptor::symmetric(self.degree)?;
        let elements = self
            .elements
            .iter()
            .map(|p| MonomialElement::permutation(desc, p.clone()))
            .collect::<Result<Vec<_>>>()?;
        Subgroup::from_elements(desc, elements)
    }
}

/// Membership in `F_n`: cycle type `k^{n/k}` or `1^1 k^{(n−1)/k}` with `k`
/// odd. The identity counts (`k = 1`).
pub fn in_f_n(p: &[usize]) -> bool {
    let lengths = cycle_lengths(p);
    let fixed = lengths.iter().filter(|&&l| l == 1).count();
    let mut nontrivial = lengths.iter().filter(|&&l| l > 1);
    let Some(&k) = nontrivial.next() else {
        return true;
    };
    k % 2 == 1 && nontrivial.all(|&l| l == k) && fixed <= 1
}

/// Whether `p` lies in `C(i,j) = 𝔖_{n−2} × ⟨(i,j)⟩`, i.e. preserves `{i,j}`.
pub fn preserves_pair(p: &[usize], i: usize, j: usize) -> bool {
    (p[i] == i && p[j] == j) || (p[i] == j && p[j] == i)
}

/// `G ∩ C(i,j) = {id}` for every pair `i ≠ j`, by direct scan.
pub fn free_action_symmetric(group: &PermutationGroup) -> bool {
    let n = group.degree();
    group
        .elements()
        .iter()
        .filter(|p| **p != perm_identity(n))
        .all(|p| (0..n).all(|i| (i + 1..n).all(|j| !preserves_pair(p, i, j))))
}

pub fn all_in_f_n(group: &PermutationGroup) -> bool {
    group.elements().iter().all(|p| in_f_n(p))
}
