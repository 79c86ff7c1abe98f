use num_bigint::BigUint;
use rayon::prelude::*;

use super::{Caps, GroupError, PairGH, PermGroup, Transversal};
use crate::count::{exact_div, factorial, ExactCount};
use crate::formulas::cyclic::{cyclic_gamma, find_cyclic_normal_transversal};
use crate::perm::Permutation;

/// Calls `f` on every permutation of degree `n` fixing 1 (a copy of `Sym(n-1)`),
/// in lexicographic image order.
pub fn for_each_stabilizer_perm(
    n: usize,
    caps: &Caps,
    mut f: impl FnMut(&Permutation),
) -> Result<(), GroupError> {
    check_relabelings(n, caps)?;
    let mut images: Vec<u8> = (0..n as u8).collect();
    loop {
        f(&Permutation::from_raw(images.clone()));
        if !next_permutation(&mut images[1.min(n)..]) {
            return Ok(());
        }
    }
}

pub fn stabilizer_perms(n: usize, caps: &Caps) -> Result<Vec<Permutation>, GroupError> {
    let mut out = Vec::new();
    for_each_stabilizer_perm(n, caps, |p| out.push(p.clone()))?;
    Ok(out)
}

fn check_relabelings(n: usize, caps: &Caps) -> Result<(), GroupError> {
    let need = factorial(n.saturating_sub(1));
    if need > BigUint::from(caps.max_relabelings) {
        return Err(GroupError::cap("max_relabelings", caps.max_relabelings, need));
    }
    Ok(())
}

fn next_permutation(v: &mut [u8]) -> bool {
    if v.len() < 2 {
        return false;
    }
    let Some(i) = (0..v.len() - 1).rev().find(|&i| v[i] < v[i + 1]) else {
        return false;
    };
    let j = (i + 1..v.len()).rev().find(|&j| v[j] > v[i]).unwrap();
    v.swap(i, j);
    v[i + 1..].reverse();
    true
}

/// `Γ = N_{Sym(n-1)}(G)` by testing every `α` fixing 1 against the generators of `G`.
pub fn normalizer_in_stab_brute(pair: &PairGH, caps: &Caps) -> Result<PermGroup, GroupError> {
    let g = pair.g();
    let alphas = stabilizer_perms(pair.index(), caps)?;
    let elems: Vec<Permutation> = alphas
        .into_par_iter()
        .filter(|a| g.generators().iter().all(|x| g.contains(&x.conjugate_unchecked(a))))
        .collect();
    PermGroup::from_elements(pair.index(), elems)
}

/// `Γ = N_{Sym(n-1)}(G)`. Uses the brute-force search when `(n-1)!` fits the
/// relabeling cap; otherwise falls back to the multiplier group of a cyclic
/// normal transversal, when `G` has one.
pub fn normalizer_in_stab(pair: &PairGH, caps: &Caps) -> Result<PermGroup, GroupError> {
    match normalizer_in_stab_brute(pair, caps) {
        Err(GroupError::CapExceeded { .. }) => {
            let a = find_cyclic_normal_transversal(pair).ok_or(GroupError::NoNormalizerMethod {
                degree: pair.index(),
            })?;
            let gamma = cyclic_gamma(pair.index(), &a).map_err(|_| GroupError::NoNormalizerMethod {
                degree: pair.index(),
            })?;
            let g = pair.g();
            // Every multiplier must normalize G for the fallback to be a subgroup of Γ.
            let normalizes = gamma.generators().iter().all(|alpha| {
                g.generators()
                    .iter()
                    .all(|x| g.contains(&x.conjugate_unchecked(alpha)))
            });
            if normalizes {
                Ok(gamma)
            } else {
                Err(GroupError::NoNormalizerMethod {
                    degree: pair.index(),
                })
            }
        }
        other => other,
    }
}

/// `C_{Sym(n-1)}(G)`.
pub fn centralizer_in_stab(pair: &PairGH, caps: &Caps) -> Result<PermGroup, GroupError> {
    let g = pair.g();
    let alphas = stabilizer_perms(pair.index(), caps)?;
    let elems: Vec<Permutation> = alphas
        .into_par_iter()
        .filter(|a| {
            g.generators()
                .iter()
                .all(|x| a.compose_unchecked(x) == x.compose_unchecked(a))
        })
        .collect();
    PermGroup::from_elements(pair.index(), elems)
}

/// `|Aut_H(G)| = |N_{Sym(n-1)}(G)| / |C_{Sym(n-1)}(G)|`.
pub fn aut_fixing_h_order(pair: &PairGH, caps: &Caps) -> Result<ExactCount, GroupError> {
    let n = normalizer_in_stab_brute(pair, caps)?;
    let c = centralizer_in_stab(pair, caps)?;
    exact_div(&BigUint::from(n.order()), &BigUint::from(c.order()))
        .map_err(|e| GroupError::InvalidParameters(e.to_string()))
}

/// Whether the members of `t` generate all of `G`.
pub fn generates(pair: &PairGH, t: &Transversal) -> bool {
    generates_members(pair.g(), t.members())
}

pub(crate) fn generates_members(g: &PermGroup, members: &[Permutation]) -> bool {
    let caps = Caps {
        max_group_order: g.order(),
        ..Caps::default()
    };
    match PermGroup::generate(g.degree(), members, &caps) {
        Ok(sub) => sub.order() == g.order(),
        Err(_) => false,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groups::{enumerate_transversals, make_alt, make_dihedral, make_sym};

    #[test]
    fn stabilizer_enumeration() {
        let caps = Caps::default();
        let all = stabilizer_perms(4, &caps).unwrap();
        assert_eq!(all.len(), 6);
        assert!(all.iter().all(|p| p.apply(1) == 1));
        assert!(all[0].is_identity());
        assert_eq!(stabilizer_perms(1, &caps).unwrap().len(), 1);
        let small = Caps {
            max_relabelings: 5,
            ..caps
        };
        assert!(stabilizer_perms(4, &small).is_err());
    }

    #[test]
    fn normalizers_of_families() {
        let caps = Caps::default();
        for n in 3..=6 {
            let s = make_sym(n, &caps).unwrap();
            let gamma = normalizer_in_stab(&s, &caps).unwrap();
            assert_eq!(BigUint::from(gamma.order()), factorial(n - 1));
        }
        for n in 4..=6 {
            let a = make_alt(n, &caps).unwrap();
            let gamma = normalizer_in_stab(&a, &caps).unwrap();
            assert_eq!(BigUint::from(gamma.order()), factorial(n - 1));
        }
        let d4 = make_dihedral(4, &caps).unwrap();
        assert_eq!(normalizer_in_stab(&d4, &caps).unwrap().order(), 2);
    }

    #[test]
    fn normalizer_falls_back_to_multipliers_past_the_cap() {
        let caps = Caps {
            max_relabelings: 100,
            ..Caps::default()
        };
        let d7 = make_dihedral(7, &caps).unwrap();
        let gamma = normalizer_in_stab(&d7, &caps).unwrap();
        assert_eq!(gamma.order(), 6);
        let brute = normalizer_in_stab_brute(&d7, &Caps::default()).unwrap();
        assert_eq!(gamma, brute);
        let s6 = make_sym(6, &caps).unwrap();
        assert!(matches!(
            normalizer_in_stab(&s6, &caps),
            Err(GroupError::NoNormalizerMethod { degree: 6 })
        ));
    }

    #[test]
    fn centralizers() {
        let caps = Caps::default();
        let s4 = make_sym(4, &caps).unwrap();
        assert_eq!(centralizer_in_stab(&s4, &caps).unwrap().order(), 1);
        let triv = PairGH::from_transitive(PermGroup::generate(1, &[], &caps).unwrap()).unwrap();
        assert_eq!(centralizer_in_stab(&triv, &caps).unwrap().order(), 1);
    }

    #[test]
    fn centralizer_of_trivial_group_is_whole_stabilizer() {
        // The trivial group is not transitive for n > 1, so build the searches directly.
        let caps = Caps::default();
        let alphas = stabilizer_perms(4, &caps).unwrap();
        let e = Permutation::identity(4).unwrap();
        assert!(alphas
            .iter()
            .all(|a| a.compose(&e).unwrap() == e.compose(a).unwrap()));
        assert_eq!(alphas.len(), 6);
    }

    #[test]
    fn dihedral_normalizer_centralizes_h() {
        let caps = Caps::default();
        let d4 = make_dihedral(4, &caps).unwrap();
        let gamma = normalizer_in_stab(&d4, &caps).unwrap();
        let b = &d4.h().elements()[1];
        for x in gamma.elements() {
            assert_eq!(x.compose(b).unwrap(), b.compose(x).unwrap());
        }
    }

    #[test]
    fn generation() {
        let caps = Caps::default();
        let s4 = make_sym(4, &caps).unwrap();
        assert!(enumerate_transversals(&s4, &caps)
            .unwrap()
            .any(|t| generates(&s4, &t)));
        let d5 = make_dihedral(5, &caps).unwrap();
        let cyclic: Vec<Transversal> = enumerate_transversals(&d5, &caps)
            .unwrap()
            .filter(Transversal::is_subgroup)
            .collect();
        assert_eq!(cyclic.len(), 1);
        assert!(!generates(&d5, &cyclic[0]));
    }
}
