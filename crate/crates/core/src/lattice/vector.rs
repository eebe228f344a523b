use std::ops::{Add, Neg, Sub};

use serde::{Deserialize, Serialize};

use crate::arrangement::Arrangement;
use crate::error::{Error, Result};
use crate::monomial::MonomialElement;

/// An element of the permutation module `Z𝒜`, indexed by the canonical
/// hyperplane order. Serializes as a plain JSON array.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct LatticeVector(Vec<i64>);

impl LatticeVector {
    pub fn zero(len: usize) -> Self {
        LatticeVector(vec![0; len])
    }

    pub fn basis(len: usize, k: usize) -> Self {
        let mut v = Self::zero(len);
        v.0[k] = 1;
        v
    }

    pub fn from_vec(v: Vec<i64>) -> Self {
        LatticeVector(v)
    }

    pub fn as_slice(&self) -> &[i64] {
        &self.0
    }

    pub fn into_vec(self) -> Vec<i64> {
        self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&x| x == 0)
    }

    /// Moves the coefficient at `k` to `perm[k]`.
    pub fn permuted(&self, perm: &[usize]) -> Self {
        let mut out = vec![0; self.0.len()];
        for (k, &x) in self.0.iter().enumerate() {
            out[perm[k]] = x;
        }
        LatticeVector(out)
    }

    pub fn scaled(&self, k: i64) -> Self {
        LatticeVector(self.0.iter().map(|&x| x * k).collect())
    }
}

impl Add for &LatticeVector {
    type Output = LatticeVector;

    fn add(self, rhs: &LatticeVector) -> LatticeVector {
        assert_eq!(self.len(), rhs.len());
        LatticeVector(self.0.iter().zip(&rhs.0).map(|(a, b)| a + b).collect())
    }
}

impl Sub for &LatticeVector {
    type Output = LatticeVector;

    fn sub(self, rhs: &LatticeVector) -> LatticeVector {
        assert_eq!(self.len(), rhs.len());
        LatticeVector(self.0.iter().zip(&rhs.0).map(|(a, b)| a - b).collect())
    }
}

impl Neg for &LatticeVector {
    type Output = LatticeVector;

    fn neg(self) -> LatticeVector {
        LatticeVector(self.0.iter().map(|a| -a).collect())
    }
}

/// `g·v`: the coefficient at `g·H` is the old coefficient at `H`.
pub fn permute_vector(g: &MonomialElement, v: &LatticeVector) -> Result<LatticeVector> {
    let arr = Arrangement::new(g.descriptor());
    if v.len() != arr.len() {
        return Err(Error::InvalidElement(format!(
            "lattice vector of length {} for an arrangement of {} hyperplanes",
            v.len(),
            arr.len()
        )));
    }
    Ok(v.permuted(&arr.permutation_of(g)?))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arrangement::Hyperplane;

    #[test]
    fn transposition_moves_basis_vector() {
        let desc = "S(3)".parse().unwrap();
        let arr = Arrangement::new(desc);
        let g = MonomialElement::parse(desc, "perm=[2,1,3];exp=[0,0,0]").unwrap();
        let h13 = arr.index_of("H[1,3;0]".parse::<Hyperplane>().unwrap()).unwrap();
        let h23 = arr.index_of("H[2,3;0]".parse::<Hyperplane>().unwrap()).unwrap();
        let v = LatticeVector::basis(3, h13);
        assert_eq!(permute_vector(&g, &v).unwrap(), LatticeVector::basis(3, h23));
        let id = MonomialElement::identity(desc);
        let w = LatticeVector::from_vec(vec![4, -1, 2]);
        assert_eq!(permute_vector(&id, &w).unwrap(), w);
    }

    #[test]
    fn rejects_wrong_length() {
        let desc = "S(3)".parse().unwrap();
        let id = MonomialElement::identity(desc);
        assert!(permute_vector(&id, &LatticeVector::zero(2)).is_err());
    }

    #[test]
    fn json_is_a_plain_array() {
        let v = LatticeVector::from_vec(vec![1, 0, -2]);
        assert_eq!(serde_json::to_string(&v).unwrap(), "[1,0,-2]");
        assert_eq!(serde_json::from_str::<LatticeVector>("[1,0,-2]").unwrap(), v);
    }
}
