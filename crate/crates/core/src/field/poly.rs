//! Dense univariate polynomials with rational coefficients, stored low degree
//! first. Just enough for cyclotomic moduli and extended Euclid.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

pub type QPoly = Vec<BigRational>;

pub fn trim(p: &mut QPoly) {
    while p.last().is_some_and(|c| c.is_zero()) {
        p.pop();
    }
}

pub fn degree(p: &QPoly) -> Option<usize> {
    p.iter().rposition(|c| !c.is_zero())
}

pub fn sub(a: &QPoly, b: &QPoly) -> QPoly {
    let n = a.len().max(b.len());
    let mut out: QPoly = (0..n)
        .map(|i| {
            let x = a.get(i).cloned().unwrap_or_else(BigRational::zero);
            let y = b.get(i).cloned().unwrap_or_else(BigRational::zero);
            x - y
        })
        .collect();
    trim(&mut out);
    out
}

pub fn mul(a: &QPoly, b: &QPoly) -> QPoly {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![BigRational::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    trim(&mut out);
    out
}

/// Quotient and remainder of `a` by a nonzero `b`.
pub fn divrem(a: &QPoly, b: &QPoly) -> (QPoly, QPoly) {
    let db = degree(b).expect("division by the zero polynomial");
    let lead = b[db].clone();
    let mut rem = a.clone();
    trim(&mut rem);
    let mut quot = vec![BigRational::zero(); rem.len().saturating_sub(db).max(1)];
    while let Some(dr) = degree(&rem) {
        if dr < db {
            break;
        }
        let coef = &rem[dr] / &lead;
        let shift = dr - db;
        for (i, c) in b.iter().enumerate().take(db + 1) {
            let t = &coef * c;
            rem[shift + i] -= t;
        }
        quot[shift] = coef;
        trim(&mut rem);
    }
    trim(&mut quot);
    (quot, rem)
}

/// Returns `(g, s)` with `g = gcd(a, m)` made monic and `s * a ≡ g (mod m)`.
pub fn ext_gcd_inverse_part(a: &QPoly, m: &QPoly) -> (QPoly, QPoly) {
    let (mut r0, mut r1) = (m.clone(), a.clone());
    trim(&mut r0);
    trim(&mut r1);
    let (mut s0, mut s1): (QPoly, QPoly) = (Vec::new(), vec![BigRational::one()]);
    while degree(&r1).is_some() {
        let (q, r) = divrem(&r0, &r1);
        let s2 = sub(&s0, &mul(&q, &s1));
        r0 = std::mem::replace(&mut r1, r);
        s0 = std::mem::replace(&mut s1, s2);
    }
    let lead = r0[degree(&r0).expect("gcd of nonzero input")].clone();
    let g = r0.iter().map(|c| c / &lead).collect();
    let s = s0.iter().map(|c| c / &lead).collect();
    (g, s)
}

fn int_divexact(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    // b is monic with integer coefficients, so the quotient stays integral.
    let db = b.len() - 1;
    let mut rem = a.to_vec();
    let mut quot = vec![BigInt::zero(); a.len() - db];
    for shift in (0..quot.len()).rev() {
        let coef = rem[shift + db].clone();
        for (i, c) in b.iter().enumerate() {
            rem[shift + i] -= &coef * c;
        }
        quot[shift] = coef;
    }
    debug_assert!(rem.iter().all(|c| c.is_zero()), "inexact cyclotomic division");
    quot
}

/// The n-th cyclotomic polynomial, integer coefficients, low degree first.
pub fn cyclotomic_polynomial(n: u32) -> Vec<BigInt> {
    assert!(n >= 1, "cyclotomic polynomial needs n >= 1");
    let n = n as usize;
    let mut p = vec![BigInt::zero(); n + 1];
    p[0] = -BigInt::one();
    p[n] = BigInt::one();
    for d in 1..n {
        if n % d == 0 {
            let phi_d = cyclotomic_polynomial(d as u32);
            p = int_divexact(&p, &phi_d);
        }
    }
    p
}

pub fn format_int_poly(p: &[BigInt]) -> String {
    let mut parts = Vec::new();
    for (i, c) in p.iter().enumerate().rev() {
        if c.is_zero() {
            continue;
        }
        let sign = if c.is_negative() { "-" } else { "+" };
        let mag = c.abs();
        let body = match (i, mag.is_one()) {
            (0, _) => mag.to_string(),
            (1, true) => "x".to_string(),
            (1, false) => format!("{mag}*x"),
            (_, true) => format!("x^{i}"),
            (_, false) => format!("{mag}*x^{i}"),
        };
        parts.push((sign, body));
    }
    let mut out = String::new();
    for (k, (sign, body)) in parts.into_iter().enumerate() {
        if k == 0 {
            if sign == "-" {
                out.push('-');
            }
        } else {
            out.push_str(if sign == "-" { " - " } else { " + " });
        }
        out.push_str(&body);
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}
