//! The polynomial system cutting out R(Γ) ⊂ ℂ^{4k}, and its Jacobian.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::Serialize;
use thiserror::Error;

use super::Representation;
use crate::field::{rank, CycNumber, Field, Matrix};
use crate::presentation::Presentation;

/// Sparse multivariate polynomial with integer coefficients.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MPoly {
    nvars: usize,
    terms: BTreeMap<Vec<u32>, BigInt>,
}

impl MPoly {
    pub fn zero(nvars: usize) -> Self {
        MPoly {
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(nvars: usize, c: i64) -> Self {
        let mut p = Self::zero(nvars);
        if c != 0 {
            p.terms.insert(vec![0; nvars], BigInt::from(c));
        }
        p
    }

    pub fn var(nvars: usize, i: usize) -> Self {
        let mut e = vec![0; nvars];
        e[i] = 1;
        let mut p = Self::zero(nvars);
        p.terms.insert(e, BigInt::one());
        p
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&[u32], &BigInt)> {
        self.terms.iter().map(|(e, c)| (e.as_slice(), c))
    }

    pub fn total_degree(&self) -> u32 {
        self.terms.keys().map(|e| e.iter().sum()).max().unwrap_or(0)
    }

    fn add_term(&mut self, e: Vec<u32>, c: BigInt) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(e.clone()).or_insert_with(BigInt::zero);
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&e);
        }
    }

    pub fn add(&self, o: &Self) -> Self {
        let mut out = self.clone();
        for (e, c) in &o.terms {
            out.add_term(e.clone(), c.clone());
        }
        out
    }

    pub fn neg(&self) -> Self {
        MPoly {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(e, c)| (e.clone(), -c)).collect(),
        }
    }

    pub fn sub(&self, o: &Self) -> Self {
        self.add(&o.neg())
    }

    pub fn mul(&self, o: &Self) -> Self {
        let mut out = Self::zero(self.nvars);
        for (e1, c1) in &self.terms {
            for (e2, c2) in &o.terms {
                let e = e1.iter().zip(e2).map(|(a, b)| a + b).collect();
                out.add_term(e, c1 * c2);
            }
        }
        out
    }

    pub fn derivative(&self, var: usize) -> Self {
        let mut out = Self::zero(self.nvars);
        for (e, c) in &self.terms {
            if e[var] == 0 {
                continue;
            }
            let mut e2 = e.clone();
            e2[var] -= 1;
            out.add_term(e2, c * BigInt::from(e[var]));
        }
        out
    }

    /// Value at a point; `powers[v][j]` must hold `point[v]^j`.
    fn eval_with_powers(&self, powers: &[Vec<CycNumber>], zero: &CycNumber) -> CycNumber {
        self.terms.iter().fold(zero.clone(), |acc, (e, c)| {
            let coeff = CycNumber::from_rational(zero.field(), BigRational::from_integer(c.clone()));
            let mono = e
                .iter()
                .enumerate()
                .filter(|(_, &k)| k > 0)
                .fold(coeff, |m, (v, &k)| m.mul(&powers[v][k as usize]));
            acc.add(&mono)
        })
    }

    pub fn evaluate(&self, point: &[CycNumber], zero: &CycNumber) -> CycNumber {
        let powers = power_table(point, self.total_degree());
        self.eval_with_powers(&powers, zero)
    }

    pub fn display_with(&self, names: &[String]) -> String {
        if self.terms.is_empty() {
            return "0".into();
        }
        let mut out = String::new();
        // Highest total degree first, then reverse-lex on exponents.
        let mut terms: Vec<_> = self.terms.iter().collect();
        terms.sort_by(|(a, _), (b, _)| {
            let da: u32 = a.iter().sum();
            let db: u32 = b.iter().sum();
            db.cmp(&da).then_with(|| b.cmp(a))
        });
        for (i, (e, c)) in terms.into_iter().enumerate() {
            let neg = c.is_negative();
            let mag = c.abs();
            if i == 0 {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            let factors: Vec<String> = e
                .iter()
                .enumerate()
                .filter(|(_, &k)| k > 0)
                .map(|(v, &k)| if k == 1 { names[v].clone() } else { format!("{}^{}", names[v], k) })
                .collect();
            match (factors.is_empty(), mag.is_one()) {
                (true, _) => out.push_str(&mag.to_string()),
                (false, true) => out.push_str(&factors.join("*")),
                (false, false) => out.push_str(&format!("{}*{}", mag, factors.join("*"))),
            }
        }
        out
    }
}

fn power_table(point: &[CycNumber], max_deg: u32) -> Vec<Vec<CycNumber>> {
    point
        .iter()
        .map(|x| {
            let mut v = vec![x.one_like()];
            for _ in 0..max_deg {
                let next = v.last().expect("nonempty").mul(x);
                v.push(next);
            }
            v
        })
        .collect()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum PolyOrigin {
    /// Entry (row, col) of ρ(r) − I for relator `relator`.
    RelatorEntry { relator: usize, row: usize, col: usize },
    /// a_i d_i − b_i c_i − 1.
    Determinant { generator: usize },
}

/// Variables (a_i, b_i, c_i, d_i) per generator, relator entry polynomials
/// (inverses replaced by adjugates) then one determinant polynomial per generator.
#[derive(Debug, Clone, PartialEq)]
pub struct PolySystem {
    pub num_vars: usize,
    pub var_names: Vec<String>,
    pub polynomials: Vec<MPoly>,
    pub origins: Vec<PolyOrigin>,
}

type PMat = [[MPoly; 2]; 2];

fn pmat_mul(x: &PMat, y: &PMat) -> PMat {
    std::array::from_fn(|i| std::array::from_fn(|j| x[i][0].mul(&y[0][j]).add(&x[i][1].mul(&y[1][j]))))
}

pub fn build_poly_system(p: &Presentation) -> PolySystem {
    let k = p.num_generators();
    let n = 4 * k;
    let mut var_names = Vec::with_capacity(n);
    for name in p.names() {
        for v in ["a", "b", "c", "d"] {
            var_names.push(format!("{v}_{name}"));
        }
    }
    let x = |i: usize| MPoly::var(n, i);
    let gens: Vec<PMat> = (0..k).map(|g| [[x(4 * g), x(4 * g + 1)], [x(4 * g + 2), x(4 * g + 3)]]).collect();
    let adjs: Vec<PMat> = gens
        .iter()
        .map(|m| [[m[1][1].clone(), m[0][1].neg()], [m[1][0].neg(), m[0][0].clone()]])
        .collect();
    let identity: PMat = [
        [MPoly::constant(n, 1), MPoly::zero(n)],
        [MPoly::zero(n), MPoly::constant(n, 1)],
    ];

    let mut polynomials = Vec::new();
    let mut origins = Vec::new();
    for (ri, r) in p.relators().iter().enumerate() {
        let prod = r.letters().iter().fold(identity.clone(), |acc, l| {
            let m = if l.exponent > 0 { &gens[l.generator] } else { &adjs[l.generator] };
            pmat_mul(&acc, m)
        });
        for row in 0..2 {
            for col in 0..2 {
                polynomials.push(prod[row][col].sub(&identity[row][col]));
                origins.push(PolyOrigin::RelatorEntry { relator: ri, row, col });
            }
        }
    }
    for (g, m) in gens.iter().enumerate() {
        let det = m[0][0].mul(&m[1][1]).sub(&m[0][1].mul(&m[1][0]));
        polynomials.push(det.sub(&MPoly::constant(n, 1)));
        origins.push(PolyOrigin::Determinant { generator: g });
    }
    PolySystem {
        num_vars: n,
        var_names,
        polynomials,
        origins,
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PolySystemError {
    #[error("point has {got} coordinates but the system has {expected} variables")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("point does not satisfy polynomial {index}")]
    NotOnVariety { index: usize },
}

fn point_of(rho: &Representation) -> Vec<CycNumber> {
    rho.images()
        .iter()
        .flat_map(|m| [m.a.clone(), m.b.clone(), m.c.clone(), m.d.clone()])
        .collect()
}

/// Nullity of the Jacobian of `sys` at ρ, i.e. the dimension of the Zariski
/// tangent space of the representation scheme at ρ.
pub fn jacobian_nullity_at(sys: &PolySystem, rho: &Representation) -> Result<usize, PolySystemError> {
    let point = point_of(rho);
    if point.len() != sys.num_vars {
        return Err(PolySystemError::DimensionMismatch {
            expected: sys.num_vars,
            got: point.len(),
        });
    }
    let zero = CycNumber::zero(rho.field());
    let max_deg = sys.polynomials.iter().map(MPoly::total_degree).max().unwrap_or(0);
    let powers = power_table(&point, max_deg);
    for (index, f) in sys.polynomials.iter().enumerate() {
        if !f.eval_with_powers(&powers, &zero).is_zero() {
            return Err(PolySystemError::NotOnVariety { index });
        }
    }
    let rows: Vec<Vec<CycNumber>> = sys
        .polynomials
        .iter()
        .map(|f| {
            (0..sys.num_vars)
                .map(|v| f.derivative(v).eval_with_powers(&powers, &zero))
                .collect()
        })
        .collect();
    let jac = Matrix::from_rows(rows, sys.num_vars, &zero);
    Ok(sys.num_vars - rank(&jac).expect("single field context"))
}

impl fmt::Display for PolySystem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for p in &self.polynomials {
            writeln!(f, "{}", p.display_with(&self.var_names))?;
        }
        Ok(())
    }
}
