use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// Names the group `G(de,e,r)`: monomial `r×r` matrices whose nonzero
/// entries are `de`-th roots of unity with product a `d`-th root of unity.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GroupDescriptor {
    d: u32,
    e: u32,
    r: usize,
}

impl GroupDescriptor {
    pub fn new(d: u32, e: u32, r: usize) -> Result<Self> {
        if d == 0 || e == 0 || r == 0 {
            return Err(Error::InvalidDescriptor(format!(
                "d, e, r must be positive (got d={d}, e={e}, r={r})"
            )));
        }
        if d.checked_mul(e).is_none() {
            return Err(Error::InvalidDescriptor("de overflows".into()));
        }
        Ok(GroupDescriptor { d, e, r })
    }

    /// `G(1,1,n)`, the symmetric group acting by permutation matrices.
    pub fn symmetric(n: usize) -> Result<Self> {
        Self::new(1, 1, n)
    }

    pub fn d(&self) -> u32 {
        self.d
    }

    pub fn e(&self) -> u32 {
        self.e
    }

    pub fn rank(&self) -> usize {
        self.r
    }

    pub fn de(&self) -> u32 {
        self.d * self.e
    }

    /// `(de)^r · r! / e`, or `None` on overflow.
    pub fn order(&self) -> Option<u128> {
        let de = u128::from(self.de());
        let mut total: u128 = u128::from(self.d);
        for _ in 1..self.r {
            total = total.checked_mul(de)?;
        }
        for k in 2..=self.r as u128 {
            total = total.checked_mul(k)?;
        }
        Some(total)
    }

    pub fn has_coordinate_hyperplanes(&self) -> bool {
        self.d >= 2
    }
}

impl fmt::Display for GroupDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "G({},{},{})", self.de(), self.e, self.r)
    }
}

impl FromStr for GroupDescriptor {
    type Err = Error;

    /// Accepts `G(de,e,r)` (de first, as in the usual naming) and `S(n)`.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let bad = || Error::Parse(format!("expected \"G(de,e,r)\" or \"S(n)\", got {s:?}"));
        let (head, rest) = s.split_once('(').ok_or_else(bad)?;
        let inner = rest.strip_suffix(')').ok_or_else(bad)?;
        let nums = inner
            .split(',')
            .map(|p| p.trim().parse::<u64>().map_err(|_| bad()))
            .collect::<Result<Vec<_>>>()?;
        match (head.trim(), nums.as_slice()) {
            ("S", [n]) => Self::symmetric(*n as usize),
            ("G", [de, e, r]) => {
                if *e == 0 || de % e != 0 {
                    return Err(Error::InvalidDescriptor(format!(
                        "de={de} is not a multiple of e={e}"
                    )));
                }
                let d = u32::try_from(de / e).map_err(|_| bad())?;
                let e = u32::try_from(*e).map_err(|_| bad())?;
                Self::new(d, e, *r as usize)
            }
            _ => Err(bad()),
        }
    }
}

impl Serialize for GroupDescriptor {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for GroupDescriptor {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}
