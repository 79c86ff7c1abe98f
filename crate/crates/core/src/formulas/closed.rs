//! Closed forms for `Sym(n)` and `Alt(n)` with `H` the stabilizer of 1.
//!
//! Here `Γ` is all of `Sym({2..n})`, so the class sum runs over partitions
//! `λ` of `n-1`. For a representative `x` of type `λ` and `y = x^L`, the
//! number of elements sending 1 to a given fixed point of `y` and commuting
//! with `y` depends only on the cycle type of `y`:
//!
//! * in `Sym(n)`: `(f-1)! · D`, where `f` counts the fixed points of `y` on
//!   `{1..n}` and `D` is the centralizer order of its moved part;
//! * in `Alt(n)`: `(f-1)! · D / 2` when `f > 2`; when `f = 2` it is `D / 2`,
//!   or 0 if that centralizer is all even.

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::One;

use super::{ClassContribution, IctError, IctReport, Justification, Method};
use crate::count::factorial;
use crate::groups::class_rep_key;
use crate::symclasses::{centralizer_order, class_representative, class_size, partitions, IntPartition};

/// Whether every element centralizing a permutation of moved type `moved` is
/// even, inside the symmetric group on its moved points. True exactly when
/// the parts are odd and pairwise distinct.
pub fn all_even_centralizer(moved: &[usize]) -> bool {
    let mut seen = std::collections::HashSet::new();
    moved.iter().all(|&l| l % 2 == 1 && seen.insert(l))
}

/// Cycle structure of `x^power` for `x` of type `lambda` on `{2..n}`, with
/// symbol 1 fixed: `(fixed points on {1..n}, moved cycle lengths)`.
fn power_type(lambda: &IntPartition, power: usize) -> (usize, Vec<usize>) {
    let mut fixed = 1;
    let mut moved = Vec::new();
    for &l in lambda.parts() {
        let g = l.gcd(&power);
        let len = l / g;
        if len == 1 {
            fixed += g;
        } else {
            moved.extend(std::iter::repeat_n(len, g));
        }
    }
    (fixed, moved)
}

#[derive(Clone, Copy)]
enum Family {
    Sym,
    Alt,
}

fn commuting_count(family: Family, fixed: usize, moved: &[usize]) -> BigUint {
    let d = centralizer_order(moved);
    match family {
        Family::Sym => factorial(fixed - 1) * d,
        Family::Alt if fixed > 2 => factorial(fixed - 1) * d / 2u32,
        Family::Alt if all_even_centralizer(moved) => BigUint::ZERO,
        Family::Alt => d / 2u32,
    }
}

fn contribution(family: Family, lambda: &IntPartition, m: usize) -> Result<ClassContribution, IctError> {
    let rep = class_representative(lambda, m).map_err(|e| IctError::InvalidArgument(e.to_string()))?;
    let size = class_size(lambda, m).map_err(|e| IctError::InvalidArgument(e.to_string()))?;
    let orbit_factors = lambda
        .moved_parts()
        .into_iter()
        .map(|l| {
            let (fixed, moved) = power_type(lambda, l);
            commuting_count(family, fixed, &moved)
        })
        .collect();
    // Symbol 1 plus one A factor per 1-part of `lambda`.
    let k = 1 + lambda.ones();
    let (fixed, moved) = power_type(lambda, 1);
    debug_assert_eq!(fixed, k);
    let mut a_factors = vec![BigUint::one()];
    a_factors.extend(std::iter::repeat_n(commuting_count(family, fixed, &moved), k - 1));
    Ok(ClassContribution::new(rep, size, orbit_factors, a_factors))
}

fn closed_form(family: Family, n: usize) -> Result<IctReport, IctError> {
    let m = n - 1;
    let mut contributions = partitions(m)
        .iter()
        .map(|lambda| contribution(family, lambda, m))
        .collect::<Result<Vec<_>, _>>()?;
    contributions.sort_by_key(|c| class_rep_key(&c.representative));
    let (method, h_order) = match family {
        Family::Sym => (Method::SymClosed, factorial(m)),
        Family::Alt => (Method::AltClosed, factorial(m) / 2u32),
    };
    IctReport::assemble(method, n, h_order, factorial(m), contributions, Justification::Family, true)
}

/// `ict(Sym(n), Sym(n-1))` for `n >= 2`.
pub fn ict_sym(n: usize) -> Result<IctReport, IctError> {
    if !(2..=255).contains(&n) {
        return Err(IctError::InvalidArgument(format!("sym closed form needs 2 <= n <= 255, got {n}")));
    }
    closed_form(Family::Sym, n)
}

/// `ict(Alt(n), Alt(n-1))` for `n >= 4`.
pub fn ict_alt(n: usize) -> Result<IctReport, IctError> {
    if !(4..=255).contains(&n) {
        return Err(IctError::InvalidArgument(format!("alt closed form needs 4 <= n <= 255, got {n}")));
    }
    closed_form(Family::Alt, n)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groups::{make_alt, make_sym, normalizer_in_stab, Caps};
    use crate::formulas::ict_theorem6;
    use crate::perm::Permutation;
    use crate::symclasses::tests::all_perms;

    fn u(v: u64) -> BigUint {
        BigUint::from(v)
    }

    #[test]
    fn small_values() {
        let sym: Vec<BigUint> = (2..=7).map(|n| ict_sym(n).unwrap().value).collect();
        assert_eq!(sym, vec![u(1), u(3), u(44), u(14022), u(207392556), u(193491859167624)]);
        let alt: Vec<BigUint> = (4..=7).map(|n| ict_alt(n).unwrap().value).collect();
        assert_eq!(alt, vec![u(7), u(897), u(6483015), u(3023312801748)]);
    }

    #[test]
    fn rejects_small_degrees() {
        assert!(ict_sym(1).is_err());
        assert!(ict_alt(3).is_err());
    }

    #[test]
    fn power_types() {
        let lambda = IntPartition::new(vec![3, 2]).unwrap();
        assert_eq!(power_type(&lambda, 2), (3, vec![3]));
        assert_eq!(power_type(&lambda, 3), (4, vec![2]));
        assert_eq!(power_type(&lambda, 1), (1, vec![3, 2]));
        let four = IntPartition::new(vec![4]).unwrap();
        assert_eq!(power_type(&four, 2), (1, vec![2, 2]));
    }

    fn by_type(r: &IctReport) -> Vec<(Vec<usize>, BigUint, BigUint)> {
        let mut rows: Vec<_> = r
            .contributions
            .iter()
            .map(|c| {
                let mut parts = c.representative.full_cycle_type().moved_parts();
                parts.sort_unstable();
                (parts, c.class_size.clone(), c.fix_count.clone())
            })
            .collect();
        rows.sort();
        rows
    }

    #[test]
    fn closed_forms_agree_with_engine_row_by_row() {
        let caps = Caps::default();
        for n in 3..=6 {
            let pair = make_sym(n, &caps).unwrap();
            let gamma = normalizer_in_stab(&pair, &caps).unwrap();
            let engine = ict_theorem6(&pair, &gamma).unwrap();
            let closed = ict_sym(n).unwrap();
            assert_eq!(by_type(&engine), by_type(&closed), "sym {n}");
            assert_eq!(engine.value, closed.value);
        }
        for n in 4..=6 {
            let pair = make_alt(n, &caps).unwrap();
            let gamma = normalizer_in_stab(&pair, &caps).unwrap();
            let engine = ict_theorem6(&pair, &gamma).unwrap();
            let closed = ict_alt(n).unwrap();
            assert_eq!(by_type(&engine), by_type(&closed), "alt {n}");
            assert_eq!(engine.value, closed.value);
        }
    }

    #[test]
    fn parity_of_centralizers_by_brute_force() {
        for m in 1..=7 {
            let perms = all_perms(m);
            for lambda in partitions(m) {
                let cycles: Vec<Vec<usize>> = {
                    let mut next = 1;
                    lambda
                        .parts()
                        .iter()
                        .map(|&l| {
                            let c: Vec<usize> = (next..next + l).collect();
                            next += l;
                            c
                        })
                        .collect()
                };
                let x = Permutation::from_cycles(m, &cycles).unwrap();
                let brute = perms
                    .iter()
                    .filter(|q| q.compose(&x).unwrap() == x.compose(q).unwrap())
                    .all(|q| q.parity() == crate::perm::Parity::Even);
                // 1-parts are fixed points, which the moved-point check excludes.
                let expected = lambda.ones() <= 1 && all_even_centralizer(&lambda.moved_parts());
                assert_eq!(brute, expected, "{lambda}");
            }
        }
    }

    #[test]
    fn even_centralizer_examples() {
        assert!(all_even_centralizer(&[]));
        assert!(all_even_centralizer(&[5, 3]));
        assert!(!all_even_centralizer(&[3, 3]));
        assert!(!all_even_centralizer(&[2]));
        assert!(!all_even_centralizer(&[4, 1]));
    }
}
