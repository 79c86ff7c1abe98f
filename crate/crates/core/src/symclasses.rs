//! Conjugacy classes of `Sym(m)`: integer partitions, class sizes,
//! centralizer orders and canonical class representatives.

use std::collections::BTreeMap;

use num_bigint::BigUint;
use num_traits::One;
use thiserror::Error;

use crate::count::{factorial, ExactCount};
use crate::perm::{CycleType, PermError, Permutation};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SymClassError {
    #[error("partition parts must be positive")]
    ZeroPart,
    #[error("partition of {actual} used where a partition of {expected} is required")]
    WrongTotal { expected: usize, actual: usize },
    #[error("moved-point cycle types cannot contain parts of length {0}")]
    NotMoved(usize),
    #[error(transparent)]
    Perm(#[from] PermError),
}

/// A partition of `m`, parts non-increasing.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct IntPartition {
    parts: Vec<usize>,
}

impl IntPartition {
    pub fn new(mut parts: Vec<usize>) -> Result<Self, SymClassError> {
        if parts.contains(&0) {
            return Err(SymClassError::ZeroPart);
        }
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Ok(Self { parts })
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn total(&self) -> usize {
        self.parts.iter().sum()
    }

    /// Part length -> multiplicity.
    pub fn multiplicities(&self) -> BTreeMap<usize, usize> {
        let mut m = BTreeMap::new();
        for &p in &self.parts {
            *m.entry(p).or_insert(0) += 1;
        }
        m
    }

    /// Number of parts equal to 1.
    pub fn ones(&self) -> usize {
        self.parts.iter().filter(|&&p| p == 1).count()
    }

    /// Parts greater than 1.
    pub fn moved_parts(&self) -> Vec<usize> {
        self.parts.iter().copied().filter(|&p| p > 1).collect()
    }

    pub fn as_cycle_type(&self) -> CycleType {
        CycleType::from_lengths(self.total(), &self.parts, 0)
    }
}

impl std::fmt::Display for IntPartition {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let parts: Vec<String> = self.parts.iter().map(usize::to_string).collect();
        write!(f, "[{}]", parts.join(","))
    }
}

/// All partitions of `m` in reverse-lexicographic order (`[m]` first, `[1,...,1]` last).
pub fn partitions(m: usize) -> Vec<IntPartition> {
    fn rec(remaining: usize, max_part: usize, prefix: &mut Vec<usize>, out: &mut Vec<IntPartition>) {
        if remaining == 0 {
            out.push(IntPartition {
                parts: prefix.clone(),
            });
            return;
        }
        for part in (1..=remaining.min(max_part)).rev() {
            prefix.push(part);
            rec(remaining - part, part, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    if m > 0 {
        rec(m, m, &mut Vec::new(), &mut out);
    }
    out
}

/// Size of the conjugacy class of cycle type `lambda` in `Sym(m)`:
/// `m! / Π_j (j^{m_j} m_j!)`.
pub fn class_size(lambda: &IntPartition, m: usize) -> Result<ExactCount, SymClassError> {
    check_total(lambda, m)?;
    Ok(factorial(m) / centralizer_order(lambda.parts()))
}

/// Order of the centralizer in `Sym(Σ parts)` of a permutation with the given
/// cycle lengths (1-parts included): `Π_l μ_l! · l^{μ_l}`.
pub fn centralizer_order(parts: &[usize]) -> ExactCount {
    let mut mult: BTreeMap<usize, usize> = BTreeMap::new();
    for &p in parts {
        *mult.entry(p).or_insert(0) += 1;
    }
    mult.into_iter().fold(BigUint::one(), |acc, (len, mu)| {
        acc * factorial(mu) * num_traits::pow(BigUint::from(len), mu)
    })
}

/// Centralizer order on the moved points only; every part must exceed 1.
pub fn centralizer_order_moved(parts: &[usize]) -> Result<ExactCount, SymClassError> {
    if let Some(&bad) = parts.iter().find(|&&p| p <= 1) {
        return Err(SymClassError::NotMoved(bad));
    }
    Ok(centralizer_order(parts))
}

/// The canonical representative of class `lambda` of `Sym({2..m+1})`, as a
/// permutation of degree `m + 1` fixing 1. Cycles are filled left to right
/// over 2, 3, ... in part order; 1-parts become trailing fixed points.
pub fn class_representative(lambda: &IntPartition, m: usize) -> Result<Permutation, SymClassError> {
    check_total(lambda, m)?;
    let mut next = 2;
    let mut cycles = Vec::new();
    for &part in lambda.parts().iter().filter(|&&p| p > 1) {
        cycles.push((next..next + part).collect::<Vec<_>>());
        next += part;
    }
    Ok(Permutation::from_cycles(m + 1, &cycles)?)
}

fn check_total(lambda: &IntPartition, m: usize) -> Result<(), SymClassError> {
    if lambda.total() == m {
        Ok(())
    } else {
        Err(SymClassError::WrongTotal {
            expected: m,
            actual: lambda.total(),
        })
    }
}

#[cfg(test)]
pub(crate) mod tests {
    use super::*;

    fn part(v: &[usize]) -> IntPartition {
        IntPartition::new(v.to_vec()).unwrap()
    }

    #[test]
    fn small_partition_lists() {
        let p3: Vec<Vec<usize>> = partitions(3).iter().map(|p| p.parts().to_vec()).collect();
        assert_eq!(p3, vec![vec![3], vec![2, 1], vec![1, 1, 1]]);
        assert_eq!(partitions(4).len(), 5);
        assert_eq!(partitions(1), vec![part(&[1])]);
        assert!(partitions(0).is_empty());
    }

    #[test]
    fn partition_counts_match_brute_force() {
        // Count multisets by enumerating non-increasing sequences directly.
        fn brute(m: usize, max: usize) -> usize {
            if m == 0 {
                return 1;
            }
            (1..=max.min(m)).map(|p| brute(m - p, p)).sum()
        }
        let known = [1, 2, 3, 5, 7, 11, 15, 22, 30, 42, 56, 77];
        for m in 1..=12 {
            assert_eq!(partitions(m).len(), brute(m, m));
            assert_eq!(partitions(m).len(), known[m - 1]);
        }
    }

    #[test]
    fn class_sizes_from_tables() {
        assert_eq!(class_size(&part(&[2, 1]), 3).unwrap(), BigUint::from(3u32));
        assert_eq!(class_size(&part(&[2, 2]), 4).unwrap(), BigUint::from(3u32));
        assert_eq!(class_size(&part(&[1, 1, 1, 1]), 4).unwrap(), BigUint::one());
        assert!(class_size(&part(&[2, 2]), 5).is_err());
    }

    #[test]
    fn class_sizes_sum_to_factorial() {
        for m in 1..=12 {
            let total: BigUint = partitions(m).iter().map(|l| class_size(l, m).unwrap()).sum();
            assert_eq!(total, factorial(m));
        }
    }

    #[test]
    fn moved_centralizer_orders() {
        assert_eq!(centralizer_order_moved(&[2]).unwrap(), BigUint::from(2u32));
        assert_eq!(centralizer_order_moved(&[2, 2]).unwrap(), BigUint::from(8u32));
        assert_eq!(centralizer_order_moved(&[3]).unwrap(), BigUint::from(3u32));
        assert!(matches!(
            centralizer_order_moved(&[2, 1]),
            Err(SymClassError::NotMoved(1))
        ));
    }

    #[test]
    fn centralizer_of_double_transposition_by_brute_force() {
        // Centralizer of (2,3)(4,5) inside Sym({2,3,4,5}) = all perms of degree 5 fixing 1.
        let x = Permutation::parse_cycles("(2,3)(4,5)", 5).unwrap();
        let count = all_perms(5)
            .into_iter()
            .filter(|q| q.apply(1) == 1 && q.compose(&x).unwrap() == x.compose(q).unwrap())
            .count();
        assert_eq!(count, 8);
    }

    #[test]
    fn class_size_times_brute_centralizer_is_factorial() {
        for m in 1..=6 {
            let sym = all_perms(m);
            for lambda in partitions(m) {
                let rep = class_representative(&lambda, m).unwrap();
                // Drop the fixed symbol 1 to get a permutation of degree m.
                let imgs: Vec<usize> = (2..=m + 1).map(|s| rep.apply(s) - 1).collect();
                let x = Permutation::from_images(&imgs).unwrap();
                let cent = sym
                    .iter()
                    .filter(|q| q.compose(&x).unwrap() == x.compose(q).unwrap())
                    .count();
                assert_eq!(
                    class_size(&lambda, m).unwrap() * BigUint::from(cent),
                    factorial(m),
                    "lambda = {lambda}"
                );
            }
        }
    }

    #[test]
    fn representatives() {
        let r = class_representative(&part(&[2, 1]), 3).unwrap();
        assert_eq!(r.to_string(), "(2,3)");
        assert_eq!(r.degree(), 4);
        let r = class_representative(&part(&[2, 2]), 4).unwrap();
        assert_eq!(r.to_string(), "(2,3)(4,5)");
        let r = class_representative(&part(&[1, 1, 1]), 3).unwrap();
        assert!(r.is_identity() && r.degree() == 4);
        let r = class_representative(&part(&[3, 2]), 5).unwrap();
        assert_eq!(r.to_string(), "(2,3,4)(5,6)");
        assert_eq!(r.full_cycle_type().fixed_points(), 1);
    }

    pub(crate) fn all_perms(n: usize) -> Vec<Permutation> {
        fn rec(prefix: &mut Vec<usize>, used: &mut [bool], out: &mut Vec<Permutation>) {
            let n = used.len();
            if prefix.len() == n {
                out.push(Permutation::from_images(prefix).unwrap());
                return;
            }
            for v in 1..=n {
                if !used[v - 1] {
                    used[v - 1] = true;
                    prefix.push(v);
                    rec(prefix, used, out);
                    prefix.pop();
                    used[v - 1] = false;
                }
            }
        }
        let mut out = Vec::new();
        rec(&mut Vec::new(), &mut vec![false; n], &mut out);
        out
    }
}
