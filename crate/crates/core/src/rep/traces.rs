use thiserror::Error;

use super::Representation;
use crate::field::{CycNumber, Mat2};

pub const MAX_TRACE_GENERATORS: usize = 16;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("trace coordinates need at most {max} generators, got {got}")]
pub struct TraceError {
    pub got: usize,
    pub max: usize,
}

/// Nonempty subsets of `0..k`, by size and then lexicographically.
pub fn trace_subsets(k: usize) -> Vec<Vec<usize>> {
    fn rec(start: usize, k: usize, size: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == size {
            out.push(cur.clone());
            return;
        }
        for i in start..k {
            cur.push(i);
            rec(i + 1, k, size, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::with_capacity((1usize << k) - 1);
    for size in 1..=k {
        rec(0, k, size, &mut Vec::new(), &mut out);
    }
    out
}

/// Traces of ρ(g_{i₁} ⋯ g_{iℓ}) over all nonempty index sets i₁ < … < iℓ,
/// in the order of [`trace_subsets`]. For k = 2 this is (tr A, tr B, tr AB).
pub fn trace_coordinates(rho: &Representation) -> Result<Vec<CycNumber>, TraceError> {
    let k = rho.num_generators();
    if k > MAX_TRACE_GENERATORS {
        return Err(TraceError {
            got: k,
            max: MAX_TRACE_GENERATORS,
        });
    }
    let one = rho.one();
    Ok(trace_subsets(k)
        .iter()
        .map(|s| {
            s.iter()
                .fold(Mat2::identity_like(&one), |acc, &i| acc.mul(&rho.images()[i]))
                .trace()
        })
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{CyclotomicField, Field};
    use crate::presentation::{parse_presentation, Presentation};

    #[test]
    fn subset_order() {
        assert_eq!(trace_subsets(2), vec![vec![0], vec![1], vec![0, 1]]);
        assert_eq!(trace_subsets(3).len(), 7);
        assert_eq!(trace_subsets(3)[3..], [vec![0, 1], vec![0, 2], vec![1, 2], vec![0, 1, 2]]);
    }

    #[test]
    fn single_generator() {
        let k = CyclotomicField::new(5);
        let z = CycNumber::zeta_pow(&k, 1);
        let p = parse_presentation("gens: x\nrel: xxxxx").unwrap();
        let rho = Representation::new(p, &k, vec![Mat2::diag(z.clone(), z.inv().unwrap())]).unwrap();
        assert_eq!(trace_coordinates(&rho).unwrap(), vec![z.add(&z.inv().unwrap())]);
    }

    #[test]
    fn anticommuting_pair_traces_vanish() {
        let k = CyclotomicField::new(4);
        let i = CycNumber::zeta_pow(&k, 1);
        let a = Mat2::diag(i.clone(), i.neg());
        let b = Mat2::new(i.zero_like(), i.one_like(), i.one_like().neg(), i.zero_like());
        let rho = Representation::new(Presentation::free(2), &k, vec![a, b]).unwrap();
        assert!(trace_coordinates(&rho).unwrap().iter().all(|t| t.is_zero()));
    }

    #[test]
    fn guard_on_generator_count() {
        let k = CyclotomicField::new(1);
        let rho = Representation::trivial(Presentation::free(17), &k);
        assert_eq!(trace_coordinates(&rho), Err(TraceError { got: 17, max: 16 }));
    }
}
