use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Deserializer, Serialize, Serializer};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GradedError {
    #[error("torsion order {0} is not at least 2")]
    BadTorsion(u64),
}

/// The group ℤ^rank ⊕ ⊕ ℤ/t in one degree. Torsion is kept as sorted
/// prime powers.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct DegreePart {
    pub rank: u64,
    pub torsion: Vec<u64>,
}

impl DegreePart {
    fn is_zero(&self) -> bool {
        self.rank == 0 && self.torsion.is_empty()
    }
}

/// Finitely generated abelian group in each integer degree, finitely
/// supported. Zero degrees are never stored, so `==` is group isomorphism.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct GradedAbelianGroup {
    degrees: BTreeMap<i64, DegreePart>,
}

/// Splits `n ≥ 2` into prime powers, ascending.
fn prime_power_parts(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut p = 2;
    while p * p <= n {
        if n % p == 0 {
            let mut q = 1;
            while n % p == 0 {
                n /= p;
                q *= p;
            }
            out.push(q);
        }
        p += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

impl GradedAbelianGroup {
    pub fn zero() -> Self {
        Self::default()
    }

    /// ℤ^rank in `degree`.
    pub fn free(degree: i64, rank: u64) -> Self {
        let mut g = Self::zero();
        g.insert(degree, rank, &[]).expect("no torsion");
        g
    }

    /// ℤ/order in `degree`.
    pub fn cyclic(degree: i64, order: u64) -> Result<Self, GradedError> {
        let mut g = Self::zero();
        g.insert(degree, 0, &[order])?;
        Ok(g)
    }

    /// Adds ℤ^rank ⊕ ⊕ ℤ/t (t in `torsion`) to `degree`.
    pub fn insert(&mut self, degree: i64, rank: u64, torsion: &[u64]) -> Result<(), GradedError> {
        if let Some(&t) = torsion.iter().find(|&&t| t < 2) {
            return Err(GradedError::BadTorsion(t));
        }
        let part = self.degrees.entry(degree).or_default();
        part.rank += rank;
        for &t in torsion {
            part.torsion.extend(prime_power_parts(t));
        }
        part.torsion.sort_unstable();
        if part.is_zero() {
            self.degrees.remove(&degree);
        }
        Ok(())
    }

    pub fn part(&self, degree: i64) -> Option<&DegreePart> {
        self.degrees.get(&degree)
    }

    pub fn rank_at(&self, degree: i64) -> u64 {
        self.part(degree).map_or(0, |p| p.rank)
    }

    pub fn torsion_at(&self, degree: i64) -> &[u64] {
        self.part(degree).map_or(&[], |p| &p.torsion)
    }

    pub fn iter(&self) -> impl Iterator<Item = (i64, &DegreePart)> {
        self.degrees.iter().map(|(d, p)| (*d, p))
    }

    pub fn is_zero(&self) -> bool {
        self.degrees.is_empty()
    }

    pub fn is_torsion_free(&self) -> bool {
        self.degrees.values().all(|p| p.torsion.is_empty())
    }

    pub fn total_rank(&self) -> u64 {
        self.degrees.values().map(|p| p.rank).sum()
    }

    pub fn min_degree(&self) -> Option<i64> {
        self.degrees.keys().next().copied()
    }

    pub fn max_degree(&self) -> Option<i64> {
        self.degrees.keys().next_back().copied()
    }

    /// Degreewise direct sum.
    pub fn sum(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (d, p) in &other.degrees {
            out.insert(*d, p.rank, &p.torsion).expect("canonical torsion");
        }
        out
    }

    /// `H^{*+s}`: content in degree d moves to degree d − s.
    pub fn shift(&self, s: i64) -> Self {
        GradedAbelianGroup {
            degrees: self.degrees.iter().map(|(d, p)| (d - s, p.clone())).collect(),
        }
    }

    /// n-fold direct sum.
    pub fn scale(&self, n: u64) -> Self {
        if n == 0 {
            return Self::zero();
        }
        GradedAbelianGroup {
            degrees: self
                .degrees
                .iter()
                .map(|(d, p)| {
                    let mut torsion: Vec<u64> =
                        p.torsion.iter().flat_map(|&t| std::iter::repeat_n(t, n as usize)).collect();
                    torsion.sort_unstable();
                    (
                        *d,
                        DegreePart {
                            rank: p.rank * n,
                            torsion,
                        },
                    )
                })
                .collect(),
        }
    }

    /// Σ (−1)^d rank in degree d; torsion does not contribute.
    pub fn euler_characteristic(&self) -> i64 {
        self.degrees
            .iter()
            .map(|(d, p)| if d.rem_euclid(2) == 0 { p.rank as i64 } else { -(p.rank as i64) })
            .sum()
    }

    /// Universal-coefficient dual: degree k gets Hom(G^{−k}, ℤ) ⊕ Ext¹(G^{1−k}, ℤ),
    /// the cohomology of the ℤ-dual complex.
    pub fn uct_dual(&self) -> Self {
        let mut out = Self::zero();
        for (d, p) in &self.degrees {
            out.insert(-d, p.rank, &[]).expect("no torsion");
            if !p.torsion.is_empty() {
                out.insert(1 - d, 0, &p.torsion).expect("canonical torsion");
            }
        }
        out
    }

    /// Tensor product of torsion-free graded groups (Künneth without Tor).
    pub fn tensor_free(&self, other: &Self) -> Option<Self> {
        if !self.is_torsion_free() || !other.is_torsion_free() {
            return None;
        }
        let mut out = Self::zero();
        for (d1, p1) in &self.degrees {
            for (d2, p2) in &other.degrees {
                out.insert(d1 + d2, p1.rank * p2.rank, &[]).expect("no torsion");
            }
        }
        Some(out)
    }

    /// True when nothing sits in positive degrees.
    pub fn supported_nonpositive(&self) -> bool {
        self.max_degree().is_none_or(|d| d <= 0)
    }
}

#[derive(Serialize, Deserialize)]
struct GradedJson {
    degrees: BTreeMap<i64, DegreePart>,
}

impl Serialize for GradedAbelianGroup {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        GradedJson {
            degrees: self.degrees.clone(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for GradedAbelianGroup {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let raw = GradedJson::deserialize(d)?;
        let mut g = GradedAbelianGroup::zero();
        for (deg, p) in raw.degrees {
            g.insert(deg, p.rank, &p.torsion).map_err(serde::de::Error::custom)?;
        }
        Ok(g)
    }
}

impl fmt::Display for GradedAbelianGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.degrees.is_empty() {
            return write!(f, "0");
        }
        let mut terms = Vec::new();
        for (d, p) in &self.degrees {
            if p.rank > 0 {
                terms.push(if p.rank == 1 {
                    format!("Z_({d})")
                } else {
                    format!("Z^{}_({d})", p.rank)
                });
            }
            let mut i = 0;
            while i < p.torsion.len() {
                let t = p.torsion[i];
                let n = p.torsion[i..].iter().take_while(|&&x| x == t).count();
                terms.push(if n == 1 {
                    format!("(Z/{t})_({d})")
                } else {
                    format!("(Z/{t})^{n}_({d})")
                });
                i += n;
            }
        }
        write!(f, "{}", terms.join(" + "))
    }
}
