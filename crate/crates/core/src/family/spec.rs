use std::fmt;
use std::str::FromStr;

use num_integer::Integer;
use thiserror::Error;

pub const MAX_LENS_ORDER: u64 = 2000;
pub const MAX_CONNSUM: u32 = 60;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FamilyError {
    #[error("cannot parse family '{input}': {message}")]
    Syntax { input: String, message: String },
    #[error("{0}")]
    SideCondition(String),
    #[error("{0}")]
    TooLarge(String),
}

/// A closed 3-manifold from one of the supported families.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FamilySpec {
    Sphere3,
    /// Connected sum of k copies of S¹ × S².
    ConnSum(u32),
    Lens { p: u64, q: i64 },
    Brieskorn([u64; 3]),
    Seifert(Vec<u64>),
}

fn check_pairwise_coprime(a: &[u64]) -> Result<(), FamilyError> {
    if let Some(x) = a.iter().find(|&&x| x < 2) {
        return Err(FamilyError::SideCondition(format!("exponent {x} must be at least 2")));
    }
    for i in 0..a.len() {
        for j in i + 1..a.len() {
            if a[i].gcd(&a[j]) != 1 {
                return Err(FamilyError::SideCondition(format!(
                    "exponents {} and {} are not coprime",
                    a[i], a[j]
                )));
            }
        }
    }
    Ok(())
}

impl FamilySpec {
    pub fn validate(&self) -> Result<(), FamilyError> {
        match self {
            FamilySpec::Sphere3 => Ok(()),
            FamilySpec::ConnSum(k) => {
                if *k == 0 {
                    Err(FamilyError::SideCondition("connsum needs k >= 1".into()))
                } else if *k > MAX_CONNSUM {
                    Err(FamilyError::TooLarge(format!("connsum k = {k} exceeds {MAX_CONNSUM}")))
                } else {
                    Ok(())
                }
            }
            FamilySpec::Lens { p, q } => {
                if *p == 0 {
                    return Err(FamilyError::SideCondition("lens needs p >= 1".into()));
                }
                if *p > MAX_LENS_ORDER {
                    return Err(FamilyError::TooLarge(format!("lens p = {p} exceeds {MAX_LENS_ORDER}")));
                }
                if (*p as i64).gcd(q) != 1 {
                    return Err(FamilyError::SideCondition(format!("gcd({p}, {q}) is not 1")));
                }
                Ok(())
            }
            FamilySpec::Brieskorn(a) => check_pairwise_coprime(a),
            FamilySpec::Seifert(a) => {
                if a.len() < 3 {
                    return Err(FamilyError::SideCondition(format!(
                        "seifert needs at least 3 exponents, got {}",
                        a.len()
                    )));
                }
                check_pairwise_coprime(a)
            }
        }
    }

    /// Order of H₁(Y; ℤ), or `None` when it is infinite.
    pub fn h1_order(&self) -> Option<u64> {
        match self {
            FamilySpec::ConnSum(_) => None,
            FamilySpec::Lens { p, .. } => Some(*p),
            _ => Some(1),
        }
    }
}

fn parse_list<T: FromStr>(input: &str, body: &str) -> Result<Vec<T>, FamilyError> {
    body.split(',')
        .map(|s| {
            s.trim().parse::<T>().map_err(|_| FamilyError::Syntax {
                input: input.to_string(),
                message: format!("'{}' is not a valid integer", s.trim()),
            })
        })
        .collect()
}

impl FromStr for FamilySpec {
    type Err = FamilyError;

    fn from_str(input: &str) -> Result<Self, Self::Err> {
        let s = input.trim();
        let syntax = |message: &str| FamilyError::Syntax {
            input: input.to_string(),
            message: message.to_string(),
        };
        let spec = if s.eq_ignore_ascii_case("s3") {
            FamilySpec::Sphere3
        } else {
            let (name, body) = s.split_once(':').ok_or_else(|| syntax("expected name:arguments"))?;
            match name.trim().to_ascii_lowercase().as_str() {
                "connsum" => {
                    let v: Vec<u32> = parse_list(input, body)?;
                    match v[..] {
                        [k] => FamilySpec::ConnSum(k),
                        _ => return Err(syntax("connsum takes one argument")),
                    }
                }
                "lens" => {
                    let v: Vec<i64> = parse_list(input, body)?;
                    match v[..] {
                        [p, q] if p >= 0 => FamilySpec::Lens { p: p as u64, q },
                        [_, _] => return Err(FamilyError::SideCondition("lens needs p >= 1".into())),
                        _ => return Err(syntax("lens takes two arguments p,q")),
                    }
                }
                "brieskorn" => {
                    let v: Vec<u64> = parse_list(input, body)?;
                    match v[..] {
                        [p, q, r] => FamilySpec::Brieskorn([p, q, r]),
                        _ => return Err(syntax("brieskorn takes three arguments")),
                    }
                }
                "seifert" => FamilySpec::Seifert(parse_list(input, body)?),
                other => return Err(syntax(&format!("unknown family '{other}'"))),
            }
        };
        spec.validate()?;
        Ok(spec)
    }
}

fn join(a: &[u64]) -> String {
    a.iter().map(u64::to_string).collect::<Vec<_>>().join(",")
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FamilySpec::Sphere3 => write!(f, "S3"),
            FamilySpec::ConnSum(k) => write!(f, "connsum:{k}"),
            FamilySpec::Lens { p, q } => write!(f, "lens:{p},{q}"),
            FamilySpec::Brieskorn(a) => write!(f, "brieskorn:{}", join(a)),
            FamilySpec::Seifert(a) => write!(f, "seifert:{}", join(a)),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_print() {
        for s in ["S3", "connsum:3", "lens:5,2", "brieskorn:2,3,5", "seifert:2,3,5,7"] {
            let f: FamilySpec = s.parse().unwrap();
            assert_eq!(f.to_string(), s);
        }
        assert_eq!("lens:7,-3".parse::<FamilySpec>().unwrap(), FamilySpec::Lens { p: 7, q: -3 });
    }

    #[test]
    fn rejects_bad_input() {
        assert!(matches!("lens:4,2".parse::<FamilySpec>(), Err(FamilyError::SideCondition(_))));
        assert!(matches!("brieskorn:2,3,4".parse::<FamilySpec>(), Err(FamilyError::SideCondition(_))));
        assert!(matches!("seifert:2,3".parse::<FamilySpec>(), Err(FamilyError::SideCondition(_))));
        assert!(matches!("seifert:1,3,5".parse::<FamilySpec>(), Err(FamilyError::SideCondition(_))));
        assert!(matches!("connsum:0".parse::<FamilySpec>(), Err(FamilyError::SideCondition(_))));
        assert!(matches!("torus:1".parse::<FamilySpec>(), Err(FamilyError::Syntax { .. })));
        assert!(matches!("lens:a,1".parse::<FamilySpec>(), Err(FamilyError::Syntax { .. })));
        assert!(matches!("lens".parse::<FamilySpec>(), Err(FamilyError::Syntax { .. })));
    }
}
