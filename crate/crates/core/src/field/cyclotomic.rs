use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, Mutex, OnceLock};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use super::poly::{self, QPoly};
use super::{Field, FieldError};

/// The field ℚ(ζ_n), presented as ℚ[x]/(Φ_n).
#[derive(Debug, PartialEq, Eq)]
pub struct CyclotomicField {
    conductor: u32,
    modulus: Vec<BigInt>,
}

impl CyclotomicField {
    /// Shared context for conductor `n`. Contexts are cached process-wide.
    pub fn new(n: u32) -> Arc<Self> {
        assert!(n >= 1, "conductor must be positive");
        static CACHE: OnceLock<Mutex<HashMap<u32, Arc<CyclotomicField>>>> = OnceLock::new();
        let cache = CACHE.get_or_init(Default::default);
        let mut guard = cache.lock().unwrap_or_else(|e| e.into_inner());
        guard
            .entry(n)
            .or_insert_with(|| {
                Arc::new(CyclotomicField {
                    conductor: n,
                    modulus: poly::cyclotomic_polynomial(n),
                })
            })
            .clone()
    }

    pub fn conductor(&self) -> u32 {
        self.conductor
    }

    /// φ(n), the dimension over ℚ.
    pub fn degree(&self) -> usize {
        self.modulus.len() - 1
    }

    pub fn modulus(&self) -> &[BigInt] {
        &self.modulus
    }

    fn modulus_q(&self) -> QPoly {
        self.modulus.iter().map(|c| BigRational::from_integer(c.clone())).collect()
    }

    /// Reduce a coefficient vector of any length modulo Φ_n.
    fn reduce(&self, mut c: Vec<BigRational>) -> Vec<BigRational> {
        let d = self.degree();
        // Φ_n is monic: x^d = -Σ_{i<d} m_i x^i.
        for top in (d..c.len()).rev() {
            let lead = std::mem::replace(&mut c[top], BigRational::zero());
            if lead.is_zero() {
                continue;
            }
            let shift = top - d;
            for i in 0..d {
                let m = &self.modulus[i];
                if !m.is_zero() {
                    c[shift + i] -= &lead * BigRational::from_integer(m.clone());
                }
            }
        }
        c.truncate(d);
        c.resize(d, BigRational::zero());
        c
    }
}

/// An element of ℚ(ζ_n) in the power basis 1, ζ, …, ζ^{φ(n)−1}.
#[derive(Clone)]
pub struct CycNumber {
    field: Arc<CyclotomicField>,
    coeffs: Vec<BigRational>,
}

impl CycNumber {
    pub fn zero(field: &Arc<CyclotomicField>) -> Self {
        CycNumber {
            field: field.clone(),
            coeffs: vec![BigRational::zero(); field.degree()],
        }
    }

    pub fn from_rational(field: &Arc<CyclotomicField>, q: BigRational) -> Self {
        let mut out = Self::zero(field);
        out.coeffs[0] = q;
        out
    }

    pub fn from_i64(field: &Arc<CyclotomicField>, n: i64) -> Self {
        Self::from_rational(field, BigRational::from_integer(n.into()))
    }

    pub fn from_ratio(field: &Arc<CyclotomicField>, num: i64, den: i64) -> Self {
        Self::from_rational(field, BigRational::new(num.into(), den.into()))
    }

    /// ζ_n^j for any integer j.
    pub fn zeta_pow(field: &Arc<CyclotomicField>, j: i64) -> Self {
        let n = field.conductor() as i64;
        let e = j.rem_euclid(n) as usize;
        let mut c = vec![BigRational::zero(); e + 1];
        c[e] = BigRational::one();
        CycNumber {
            field: field.clone(),
            coeffs: field.reduce(c),
        }
    }

    /// Builds from power-basis coordinates; the vector must have length φ(n).
    pub fn from_coeffs(field: &Arc<CyclotomicField>, coeffs: Vec<BigRational>) -> Result<Self, FieldError> {
        if coeffs.len() != field.degree() {
            return Err(FieldError::Malformed(format!(
                "expected {} coefficients for conductor {}, got {}",
                field.degree(),
                field.conductor(),
                coeffs.len()
            )));
        }
        Ok(CycNumber {
            field: field.clone(),
            coeffs,
        })
    }

    pub fn field(&self) -> &Arc<CyclotomicField> {
        &self.field
    }

    pub fn conductor(&self) -> u32 {
        self.field.conductor()
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    /// The rational value if the element lies in ℚ.
    pub fn as_rational(&self) -> Option<&BigRational> {
        if self.coeffs.iter().skip(1).all(|c| c.is_zero()) {
            self.coeffs.first()
        } else {
            None
        }
    }

    pub fn to_json(&self) -> CycNumberJson {
        CycNumberJson {
            conductor: self.conductor(),
            coeffs: self.coeffs.iter().map(format_rational).collect(),
        }
    }

    pub fn from_json(j: &CycNumberJson) -> Result<Self, FieldError> {
        if j.conductor == 0 {
            return Err(FieldError::Malformed("conductor must be positive".into()));
        }
        let field = CyclotomicField::new(j.conductor);
        let coeffs = j.coeffs.iter().map(|s| parse_rational(s)).collect::<Result<Vec<_>, _>>()?;
        Self::from_coeffs(&field, coeffs)
    }

    fn assert_same(&self, other: &Self) {
        assert!(
            self.same_field(other),
            "mixing conductors {} and {}",
            self.conductor(),
            other.conductor()
        );
    }
}

impl Field for CycNumber {
    fn zero_like(&self) -> Self {
        Self::zero(&self.field)
    }

    fn one_like(&self) -> Self {
        Self::from_i64(&self.field, 1)
    }

    fn from_i64_like(&self, n: i64) -> Self {
        Self::from_i64(&self.field, n)
    }

    fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    fn add(&self, rhs: &Self) -> Self {
        self.assert_same(rhs);
        CycNumber {
            field: self.field.clone(),
            coeffs: self.coeffs.iter().zip(&rhs.coeffs).map(|(a, b)| a + b).collect(),
        }
    }

    fn sub(&self, rhs: &Self) -> Self {
        self.assert_same(rhs);
        CycNumber {
            field: self.field.clone(),
            coeffs: self.coeffs.iter().zip(&rhs.coeffs).map(|(a, b)| a - b).collect(),
        }
    }

    fn mul(&self, rhs: &Self) -> Self {
        self.assert_same(rhs);
        let d = self.field.degree();
        let mut prod = vec![BigRational::zero(); 2 * d - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    prod[i + j] += a * b;
                }
            }
        }
        CycNumber {
            field: self.field.clone(),
            coeffs: self.field.reduce(prod),
        }
    }

    fn neg(&self) -> Self {
        CycNumber {
            field: self.field.clone(),
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }

    fn inv(&self) -> Result<Self, FieldError> {
        if self.is_zero() {
            return Err(FieldError::DivisionByZero);
        }
        if let Some(q) = self.as_rational() {
            return Ok(Self::from_rational(&self.field, q.recip()));
        }
        let mut a = self.coeffs.clone();
        poly::trim(&mut a);
        let (g, s) = poly::ext_gcd_inverse_part(&a, &self.field.modulus_q());
        // Φ_n is irreducible, so any nonzero element is coprime to it.
        debug_assert_eq!(g.len(), 1);
        Ok(CycNumber {
            field: self.field.clone(),
            coeffs: self.field.reduce(s),
        })
    }

    fn same_field(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.field, &other.field) || self.field.conductor == other.field.conductor
    }
}

impl PartialEq for CycNumber {
    fn eq(&self, other: &Self) -> bool {
        self.same_field(other) && self.coeffs == other.coeffs
    }
}

impl Eq for CycNumber {}

impl fmt::Debug for CycNumber {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CycNumber(n={}, {})", self.conductor(), self)
    }
}

impl fmt::Display for CycNumber {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let mag = c.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, "{}", if neg { " - " } else { " + " })?;
            }
            first = false;
            let unit = mag.is_one();
            match i {
                0 => write!(f, "{}", format_rational(&mag))?,
                _ if unit => write!(f, "z{}", if i == 1 { String::new() } else { format!("^{i}") })?,
                _ => write!(f, "{}*z{}", format_rational(&mag), if i == 1 { String::new() } else { format!("^{i}") })?,
            }
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

/// Wire form of a [`CycNumber`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CycNumberJson {
    pub conductor: u32,
    pub coeffs: Vec<String>,
}

pub fn format_rational(q: &BigRational) -> String {
    if q.denom().is_one() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

/// Parses `"p/q"` or `"p"`.
pub fn parse_rational(s: &str) -> Result<BigRational, FieldError> {
    let s = s.trim();
    let bad = || FieldError::Malformed(format!("not a rational: {s:?}"));
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (s, "1"),
    };
    let num: BigInt = num.parse().map_err(|_| bad())?;
    let den: BigInt = den.parse().map_err(|_| bad())?;
    if den.is_zero() {
        return Err(FieldError::Malformed(format!("zero denominator in {s:?}")));
    }
    Ok(BigRational::new(num, den))
}
