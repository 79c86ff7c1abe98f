use std::fmt;

use super::{coset_representation, Caps, GroupError, PairGH, PermGroup};
use crate::perm::Permutation;

/// The named pair families with closed forms, or a user-supplied pair.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Family {
    Sym(usize),
    Alt(usize),
    Dihedral(usize),
    Pq(usize, usize),
}

impl Family {
    pub fn build(&self, caps: &Caps) -> Result<PairGH, GroupError> {
        match *self {
            Family::Sym(n) => make_sym(n, caps),
            Family::Alt(n) => make_alt(n, caps),
            Family::Dihedral(n) => make_dihedral(n, caps),
            Family::Pq(p, q) => make_pq(p, q, caps),
        }
    }

    /// Stable identifier used in cache keys and output.
    pub fn key(&self) -> String {
        match *self {
            Family::Sym(n) => format!("sym:{n}"),
            Family::Alt(n) => format!("alt:{n}"),
            Family::Dihedral(n) => format!("dihedral:{n}"),
            Family::Pq(p, q) => format!("pq:{p}:{q}"),
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Family::Sym(n) => write!(f, "(Sym({n}), Sym({}))", n - 1),
            Family::Alt(n) => write!(f, "(Alt({n}), Alt({}))", n - 1),
            Family::Dihedral(n) => write!(f, "(D_{n}, <b>)"),
            Family::Pq(p, q) => write!(f, "(G_{{{p}*{q}}}, C_{p})"),
        }
    }
}

fn cycle(degree: usize, symbols: impl IntoIterator<Item = usize>) -> Result<Permutation, GroupError> {
    Ok(Permutation::from_cycles(degree, &[symbols.into_iter().collect()])?)
}

/// `(Sym(n), Sym(n-1))` in its natural action.
pub fn make_sym(n: usize, caps: &Caps) -> Result<PairGH, GroupError> {
    if n == 0 {
        return Err(GroupError::InvalidParameters("Sym(n) needs n >= 1".into()));
    }
    let mut gens = Vec::new();
    if n >= 2 {
        gens.push(cycle(n, [1, 2])?);
        gens.push(cycle(n, 1..=n)?);
    }
    PairGH::from_transitive(PermGroup::generate(n, &gens, caps)?)
}

/// `(Alt(n), Alt(n-1))` in its natural action, `n >= 4`.
pub fn make_alt(n: usize, caps: &Caps) -> Result<PairGH, GroupError> {
    if n < 4 {
        return Err(GroupError::InvalidParameters("Alt(n) needs n >= 4".into()));
    }
    let gens = (3..=n)
        .map(|k| cycle(n, [1, 2, k]))
        .collect::<Result<Vec<_>, _>>()?;
    PairGH::from_transitive(PermGroup::generate(n, &gens, caps)?)
}

/// `D_n = <a, b>` as symmetries of an n-gon (vertex 1 fixed by `b`) and `H = <b>`.
pub fn dihedral_abstract(n: usize, caps: &Caps) -> Result<(PermGroup, PermGroup), GroupError> {
    if n < 3 {
        return Err(GroupError::InvalidParameters(
            "D_n with non-normal <b> needs n >= 3".into(),
        ));
    }
    let a = cycle(n, 1..=n)?;
    // b: vertex k (residue k-1) -> residue -(k-1).
    let b_images: Vec<usize> = (0..n).map(|r| (n - r) % n + 1).collect();
    let b = Permutation::from_images(&b_images)?;
    let g = PermGroup::generate(n, &[a, b.clone()], caps)?;
    let h = PermGroup::generate(n, &[b], caps)?;
    Ok((g, h))
}

/// `(D_n, <b>)` through the left-coset representation.
pub fn make_dihedral(n: usize, caps: &Caps) -> Result<PairGH, GroupError> {
    let (g, h) = dihedral_abstract(n, caps)?;
    coset_representation(&g, &h, caps)
}

/// Smallest `r > 1` with `r^p = 1 (mod q)`; for prime `p` this has order exactly `p`.
pub fn primitive_root_of_order(p: usize, q: usize) -> Option<usize> {
    (2..q).find(|&r| {
        let mut acc = 1usize;
        for _ in 0..p {
            acc = acc * r % q;
        }
        acc == 1
    })
}

fn is_prime(v: usize) -> bool {
    v >= 2 && (2..).take_while(|d| d * d <= v).all(|d| !v.is_multiple_of(d))
}

/// The non-abelian group of order `pq` as affine maps `x -> r^i x + c` of `Z_q`,
/// with `a: x -> x + 1`, `b: x -> r x`, so `b a b^-1 = a^r`; `H = <b>` a Sylow p-subgroup.
pub fn pq_abstract(p: usize, q: usize, caps: &Caps) -> Result<(PermGroup, PermGroup), GroupError> {
    if !is_prime(p) || !is_prime(q) || p >= q || !(q - 1).is_multiple_of(p) {
        return Err(GroupError::InvalidParameters(format!(
            "no non-abelian group of order {p}*{q}: need primes p < q with p | q-1"
        )));
    }
    let r = primitive_root_of_order(p, q).expect("p | q-1 guarantees a root");
    let a = cycle(q, 1..=q)?;
    let b_images: Vec<usize> = (0..q).map(|x| x * r % q + 1).collect();
    let b = Permutation::from_images(&b_images)?;
    let g = PermGroup::generate(q, &[a, b.clone()], caps)?;
    let h = PermGroup::generate(q, &[b], caps)?;
    Ok((g, h))
}

pub fn make_pq(p: usize, q: usize, caps: &Caps) -> Result<PairGH, GroupError> {
    let (g, h) = pq_abstract(p, q, caps)?;
    coset_representation(&g, &h, caps)
}

/// The order-18 group `<x1, x2, y | x1^3 = x2^3 = y^2 = 1, y xi y^-1 = xi^2, x1 x2 = x2 x1>`
/// on 6 points, with `H = <x1, y>`. Its core is `<x1>`.
pub fn order18_abstract(caps: &Caps) -> Result<(PermGroup, PermGroup), GroupError> {
    let x1 = Permutation::parse_cycles("(1,2,3)", 6)?;
    let x2 = Permutation::parse_cycles("(4,5,6)", 6)?;
    let y = Permutation::parse_cycles("(2,3)(5,6)", 6)?;
    let g = PermGroup::generate(6, &[x1.clone(), x2, y.clone()], caps)?;
    let h = PermGroup::generate(6, &[x1, y], caps)?;
    Ok((g, h))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groups::core;

    #[test]
    fn family_orders() {
        let caps = Caps::default();
        let s5 = make_sym(5, &caps).unwrap();
        assert_eq!((s5.index(), s5.g().order(), s5.h_order()), (5, 120, 24));
        let a5 = make_alt(5, &caps).unwrap();
        assert_eq!((a5.index(), a5.g().order(), a5.h_order()), (5, 60, 12));
        let d3 = make_dihedral(3, &caps).unwrap();
        assert_eq!((d3.index(), d3.g().order()), (3, 6));
        assert_eq!(d3.g(), make_sym(3, &caps).unwrap().g());
        let d4 = make_dihedral(4, &caps).unwrap();
        assert_eq!((d4.index(), d4.g().order(), d4.h_order()), (4, 8, 2));
        let pq = make_pq(3, 7, &caps).unwrap();
        assert_eq!((pq.index(), pq.g().order(), pq.h_order()), (7, 21, 3));
        assert_eq!(make_sym(1, &caps).unwrap().g().order(), 1);
    }

    #[test]
    fn parameter_validation() {
        let caps = Caps::default();
        assert!(make_alt(3, &caps).is_err());
        assert!(make_dihedral(2, &caps).is_err());
        assert!(make_pq(3, 5, &caps).is_err());
        assert!(make_pq(2, 4, &caps).is_err());
        assert!(make_pq(5, 3, &caps).is_err());
        assert_eq!(primitive_root_of_order(3, 7), Some(2));
        assert_eq!(primitive_root_of_order(2, 5), Some(4));
    }

    #[test]
    fn dihedral_abstract_relations() {
        let caps = Caps::default();
        let (g, h) = dihedral_abstract(6, &caps).unwrap();
        let a = &g.generators()[0];
        let b = &g.generators()[1];
        assert_eq!(g.order(), 12);
        assert_eq!(a.order(), 6);
        assert_eq!(b.order(), 2);
        // b a = a^{n-1} b
        assert_eq!(b.compose(a).unwrap(), a.pow(5).compose(b).unwrap());
        assert!(!h.is_normal_in(&g));
        assert_eq!(core(&g, &h).unwrap().order(), 1);
    }

    #[test]
    fn order18_fixture_image() {
        let caps = Caps::default();
        let (g, h) = order18_abstract(&caps).unwrap();
        assert_eq!((g.order(), h.order()), (18, 6));
        let c = core(&g, &h).unwrap();
        let x1 = Permutation::parse_cycles("(1,2,3)", 6).unwrap();
        assert_eq!(c, PermGroup::generate(6, &[x1], &caps).unwrap());
        let pair = coset_representation(&g, &h, &caps).unwrap();
        assert_eq!((pair.index(), pair.g().order(), pair.h_order()), (3, 6, 2));
    }

    #[test]
    fn pq_relation() {
        let caps = Caps::default();
        let (g, _) = pq_abstract(3, 7, &caps).unwrap();
        let a = &g.generators()[0];
        let b = &g.generators()[1];
        assert_eq!(b.compose(a).unwrap().compose(&b.inverse()).unwrap(), a.pow(2));
    }
}
