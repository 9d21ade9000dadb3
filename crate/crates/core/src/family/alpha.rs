use std::collections::BTreeMap;

use num_rational::Ratio;
use rayon::prelude::*;
use serde::Serialize;

use super::spec::FamilyError;

pub const MAX_ALPHA_TUPLES: u64 = 20_000_000;

/// Weights (k₁/2a₁, k₂/a₂, …, k_n/a_n) with 0 ≤ k₁ ≤ a₁ and 0 ≤ k_i < a_i/2.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct AlphaTuple {
    exponents: Vec<u64>,
    k: Vec<u64>,
    m: usize,
}

fn half() -> Ratio<u64> {
    Ratio::new(1, 2)
}

fn in_open_half(r: &Ratio<u64>) -> bool {
    *r > Ratio::from_integer(0) && *r < half()
}

impl AlphaTuple {
    fn new(exponents: &[u64], k: Vec<u64>) -> Self {
        let mut t = AlphaTuple {
            exponents: exponents.to_vec(),
            k,
            m: 0,
        };
        t.m = t.count_interior();
        t
    }

    pub fn coordinates(&self) -> Vec<Ratio<u64>> {
        self.k
            .iter()
            .zip(&self.exponents)
            .enumerate()
            .map(|(i, (&k, &a))| if i == 0 { Ratio::new(k, 2 * a) } else { Ratio::new(k, a) })
            .collect()
    }

    fn count_interior(&self) -> usize {
        self.coordinates().iter().filter(|r| in_open_half(r)).count()
    }

    pub fn k(&self) -> &[u64] {
        &self.k
    }

    /// Number of weights strictly between 0 and ½.
    pub fn m(&self) -> usize {
        self.m
    }

    pub fn is_consistent(&self) -> bool {
        self.m == self.count_interior()
    }

    /// Components with m < 3 are empty.
    pub fn is_empty_component(&self) -> bool {
        self.m < 3
    }
}

#[derive(Serialize)]
struct AlphaJson {
    alpha: Vec<String>,
    k: Vec<u64>,
    m: usize,
    empty: bool,
}

impl Serialize for AlphaTuple {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        AlphaJson {
            alpha: self.coordinates().iter().map(ToString::to_string).collect(),
            k: self.k.clone(),
            m: self.m,
            empty: self.is_empty_component(),
        }
        .serialize(s)
    }
}

/// Validates and reorders exponents so that an even one, if any, comes first.
pub fn arrange_exponents(a: &[u64]) -> Result<Vec<u64>, FamilyError> {
    if a.iter().any(|&x| x < 2) {
        return Err(FamilyError::SideCondition("exponents must be at least 2".into()));
    }
    let evens: Vec<u64> = a.iter().copied().filter(|x| x % 2 == 0).collect();
    if evens.len() > 1 {
        return Err(FamilyError::SideCondition(format!(
            "more than one even exponent ({:?}); exponents are not coprime",
            evens
        )));
    }
    let mut out = evens;
    out.extend(a.iter().copied().filter(|x| x % 2 == 1));
    Ok(out)
}

fn ranges(a: &[u64]) -> Vec<u64> {
    a.iter()
        .enumerate()
        .map(|(i, &x)| if i == 0 { x + 1 } else { x.div_ceil(2) })
        .collect()
}

fn check_size(a: &[u64]) -> Result<(), FamilyError> {
    let total = ranges(a).iter().try_fold(1u64, |acc, &r| acc.checked_mul(r));
    match total {
        Some(t) if t <= MAX_ALPHA_TUPLES => Ok(()),
        _ => Err(FamilyError::TooLarge(format!(
            "alpha enumeration for {a:?} exceeds {MAX_ALPHA_TUPLES} tuples"
        ))),
    }
}

/// All tuples whose first index is `k1`, in lexicographic order of k.
fn tuples_with_first(a: &[u64], r: &[u64], k1: u64, mut visit: impl FnMut(Vec<u64>)) {
    let mut k = vec![0u64; a.len()];
    k[0] = k1;
    loop {
        visit(k.clone());
        let mut i = a.len() - 1;
        loop {
            if i == 0 {
                return;
            }
            k[i] += 1;
            if k[i] < r[i] {
                break;
            }
            k[i] = 0;
            i -= 1;
        }
    }
}

fn prepare(a: &[u64]) -> Result<(Vec<u64>, Vec<u64>), FamilyError> {
    if a.is_empty() {
        return Err(FamilyError::SideCondition("no exponents".into()));
    }
    let a = arrange_exponents(a)?;
    check_size(&a)?;
    let r = ranges(&a);
    Ok((a, r))
}

/// Full enumeration in lexicographic order of (k₁, …, k_n).
pub fn enumerate_alpha(a: &[u64]) -> Result<Vec<AlphaTuple>, FamilyError> {
    let (a, r) = prepare(a)?;
    let mut out = Vec::new();
    for k1 in 0..r[0] {
        tuples_with_first(&a, &r, k1, |k| out.push(AlphaTuple::new(&a, k)));
    }
    Ok(out)
}

/// Same result as [`enumerate_alpha`], split across threads by k₁.
pub fn enumerate_alpha_par(a: &[u64]) -> Result<Vec<AlphaTuple>, FamilyError> {
    let (a, r) = prepare(a)?;
    let mut out: Vec<AlphaTuple> = (0..r[0])
        .into_par_iter()
        .flat_map_iter(|k1| {
            let mut v = Vec::new();
            tuples_with_first(&a, &r, k1, |k| v.push(AlphaTuple::new(&a, k)));
            v
        })
        .collect();
    out.sort();
    Ok(out)
}

/// Number of tuples for each value of m, without storing the tuples.
pub fn alpha_m_histogram(a: &[u64], parallel: bool) -> Result<BTreeMap<usize, u64>, FamilyError> {
    let (a, r) = prepare(a)?;
    let count = |k1: u64| {
        let mut h = BTreeMap::new();
        tuples_with_first(&a, &r, k1, |k| *h.entry(AlphaTuple::new(&a, k).m).or_insert(0u64) += 1);
        h
    };
    let merge = |mut x: BTreeMap<usize, u64>, y: BTreeMap<usize, u64>| {
        for (m, c) in y {
            *x.entry(m).or_insert(0) += c;
        }
        x
    };
    Ok(if parallel {
        (0..r[0]).into_par_iter().map(count).reduce(BTreeMap::new, merge)
    } else {
        (0..r[0]).map(count).fold(BTreeMap::new(), merge)
    })
}
