use std::collections::{HashMap, VecDeque};

use num_bigint::BigUint;

use super::{Caps, GroupError, PermGroup};
use crate::perm::Permutation;

/// A transitive group `G ≤ Sym(n)` with `H` the stabilizer of symbol 1.
///
/// Every constructor goes through [`PairGH::from_transitive`], so `H` is
/// exactly the point stabilizer and is core-free in `G`.
#[derive(Clone, Debug)]
pub struct PairGH {
    g: PermGroup,
    h: PermGroup,
    /// `cosets[i]` lists indices (into `g.elements()`) of the elements sending 1 to `i + 1`.
    cosets: Vec<Vec<u32>>,
    /// Position of each element of `G` inside its coset list.
    position: Vec<u32>,
}

impl PairGH {
    pub fn from_transitive(g: PermGroup) -> Result<PairGH, GroupError> {
        let n = g.degree();
        if !g.is_transitive() {
            return Err(GroupError::NotTransitive(n));
        }
        let h = g.stabilizer(1)?;
        let mut cosets = vec![Vec::new(); n];
        let mut position = vec![0u32; g.order()];
        for (idx, e) in g.elements().iter().enumerate() {
            let c = e.apply0(0);
            position[idx] = cosets[c].len() as u32;
            cosets[c].push(idx as u32);
        }
        debug_assert!(cosets.iter().all(|c| c.len() == h.order()));
        Ok(PairGH {
            g,
            h,
            cosets,
            position,
        })
    }

    pub fn g(&self) -> &PermGroup {
        &self.g
    }

    pub fn h(&self) -> &PermGroup {
        &self.h
    }

    /// The index `[G:H]`, equal to the degree.
    pub fn index(&self) -> usize {
        self.g.degree()
    }

    pub fn h_order(&self) -> usize {
        self.h.order()
    }

    /// Elements of `G` sending 1 to `symbol` (the left coset numbered `symbol`).
    pub fn coset(&self, symbol: usize) -> impl Iterator<Item = &Permutation> + '_ {
        self.cosets[symbol - 1]
            .iter()
            .map(move |&i| self.g.element(i as usize))
    }

    pub(crate) fn coset_indices(&self, symbol0: usize) -> &[u32] {
        &self.cosets[symbol0]
    }

    pub(crate) fn position_in_coset(&self, element: usize) -> u32 {
        self.position[element]
    }

    /// `H` is normal in `G` exactly when it is trivial, since the pair is core-free.
    pub fn h_is_normal(&self) -> bool {
        self.h.order() == 1
    }

    /// `|H|^(n-1)`.
    pub fn transversal_count(&self) -> BigUint {
        num_traits::pow(BigUint::from(self.h_order()), self.index() - 1)
    }

    pub fn space(&self) -> TransversalSpace<'_> {
        TransversalSpace { pair: self }
    }
}

/// A left transversal `a_1 = (), a_2, ..., a_n` with `a_i(1) = i`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Transversal {
    members: Vec<Permutation>,
}

impl Transversal {
    /// Validates and orders `members` by image of 1.
    pub fn new(pair: &PairGH, members: Vec<Permutation>) -> Result<Transversal, GroupError> {
        let n = pair.index();
        if members.len() != n {
            return Err(GroupError::NotTransversal(format!(
                "expected {n} members, got {}",
                members.len()
            )));
        }
        let mut slots: Vec<Option<Permutation>> = vec![None; n];
        for m in members {
            if !pair.g().contains(&m) {
                return Err(GroupError::NotTransversal(format!("{m} is not in G")));
            }
            let c = m.apply(1) - 1;
            if slots[c].is_some() {
                return Err(GroupError::NotTransversal(format!(
                    "two members send 1 to {}",
                    c + 1
                )));
            }
            slots[c] = Some(m);
        }
        let members: Vec<Permutation> = slots.into_iter().map(Option::unwrap).collect();
        if !members[0].is_identity() {
            return Err(GroupError::NotTransversal(
                "the member fixing 1 must be the identity".into(),
            ));
        }
        Ok(Transversal { members })
    }

    /// Members ordered so that `members()[i - 1]` sends 1 to `i`.
    pub fn members(&self) -> &[Permutation] {
        &self.members
    }

    /// The member sending 1 to `symbol`.
    pub fn member(&self, symbol: usize) -> &Permutation {
        &self.members[symbol - 1]
    }

    pub fn is_subgroup(&self) -> bool {
        self.members.iter().all(|a| {
            self.members.iter().all(|b| {
                let c = a.compose_unchecked(b);
                self.members[c.apply0(0)] == c
            })
        })
    }
}

/// Mixed-radix indexing of `T(G, H)`: position `j` (symbol `j + 2`) picks one
/// of the `|H|` elements of its coset. Symbol 2 is the most significant digit,
/// so index order equals the enumeration order of [`enumerate_transversals`].
#[derive(Clone, Copy)]
pub struct TransversalSpace<'a> {
    pair: &'a PairGH,
}

impl<'a> TransversalSpace<'a> {
    pub fn pair(&self) -> &'a PairGH {
        self.pair
    }

    pub fn radix(&self) -> u64 {
        self.pair.h_order() as u64
    }

    pub fn positions(&self) -> usize {
        self.pair.index() - 1
    }

    /// Total count, if it fits in a `u64`.
    pub fn len(&self) -> Option<u64> {
        let mut total: u64 = 1;
        for _ in 0..self.positions() {
            total = total.checked_mul(self.radix())?;
        }
        Some(total)
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn checked_len(&self, caps: &Caps) -> Result<u64, GroupError> {
        match self.len() {
            Some(len) if len <= caps.max_transversals => Ok(len),
            _ => Err(GroupError::cap(
                "max_transversals",
                caps.max_transversals,
                self.pair.transversal_count(),
            )),
        }
    }

    /// Element indices (into `G`) of the transversal with the given index,
    /// one per symbol 1..n; entry 0 is the identity.
    pub fn decode(&self, mut index: u64, out: &mut Vec<u32>) {
        let n = self.pair.index();
        out.clear();
        out.resize(n, 0);
        out[0] = self.pair.coset_indices(0)[0];
        let r = self.radix();
        for sym0 in (1..n).rev() {
            let choice = (index % r) as usize;
            index /= r;
            out[sym0] = self.pair.coset_indices(sym0)[choice];
        }
    }

    /// Inverse of [`decode`](Self::decode): `elements[s]` must send 1 to `s + 1`.
    pub fn encode(&self, elements: &[u32]) -> u64 {
        let r = self.radix();
        elements[1..].iter().fold(0u64, |acc, &e| {
            acc * r + self.pair.position_in_coset(e as usize) as u64
        })
    }

    /// `alpha T alpha^-1` for `alpha` fixing 1, written into `out` in symbol order.
    /// Returns false when some conjugated member leaves `G`.
    pub fn conjugate(&self, elements: &[u32], alpha: &Permutation, out: &mut Vec<u32>) -> bool {
        let g = self.pair.g();
        out.clear();
        out.resize(elements.len(), 0);
        for &e in elements {
            let c = g.element(e as usize).conjugate_unchecked(alpha);
            let slot = c.apply0(0);
            match g.index_of(&c) {
                Some(idx) => out[slot] = idx as u32,
                None => return false,
            }
        }
        true
    }

    pub fn members(&self, elements: &[u32]) -> Vec<Permutation> {
        elements
            .iter()
            .map(|&e| self.pair.g().element(e as usize).clone())
            .collect()
    }

    pub fn transversal(&self, index: u64) -> Transversal {
        let mut buf = Vec::new();
        self.decode(index, &mut buf);
        Transversal {
            members: buf
                .iter()
                .map(|&e| self.pair.g().element(e as usize).clone())
                .collect(),
        }
    }

    pub fn index_of(&self, t: &Transversal) -> u64 {
        let idx: Vec<u32> = t
            .members()
            .iter()
            .map(|m| self.pair.g().index_of(m).expect("member of G") as u32)
            .collect();
        self.encode(&idx)
    }
}

/// Iterator over every transversal of the pair in index order.
pub struct TransversalIter<'a> {
    space: TransversalSpace<'a>,
    next: u64,
    len: u64,
}

impl Iterator for TransversalIter<'_> {
    type Item = Transversal;

    fn next(&mut self) -> Option<Transversal> {
        if self.next >= self.len {
            return None;
        }
        let t = self.space.transversal(self.next);
        self.next += 1;
        Some(t)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let left = (self.len - self.next) as usize;
        (left, Some(left))
    }
}

/// All `|H|^(n-1)` transversals, each once, in Cartesian-product order.
pub fn enumerate_transversals<'a>(
    pair: &'a PairGH,
    caps: &Caps,
) -> Result<TransversalIter<'a>, GroupError> {
    let space = pair.space();
    let len = space.checked_len(caps)?;
    Ok(TransversalIter {
        space,
        next: 0,
        len,
    })
}

/// Permutation representation of `g_abs` on the left cosets of `h_abs`.
///
/// Cosets are numbered by first discovery in a breadth-first sweep from `H`
/// (numbered 1) applying the generators of `g_abs` in order. The kernel
/// (the core of `H`) is quotiented out automatically.
pub fn coset_representation(
    g_abs: &PermGroup,
    h_abs: &PermGroup,
    caps: &Caps,
) -> Result<PairGH, GroupError> {
    if !h_abs.is_subgroup_of(g_abs) {
        return Err(GroupError::NotSubgroup);
    }
    let coset_key = |x: &Permutation| -> u32 {
        h_abs
            .elements()
            .iter()
            .map(|h| g_abs.index_of(&x.compose_unchecked(h)).unwrap() as u32)
            .min()
            .unwrap()
    };
    let identity = Permutation::identity(g_abs.degree())?;
    let mut number: HashMap<u32, usize> = HashMap::new();
    let mut reps = vec![identity.clone()];
    number.insert(coset_key(&identity), 0);
    let mut queue = VecDeque::from([0usize]);
    while let Some(c) = queue.pop_front() {
        for g in g_abs.generators() {
            let y = g.compose_unchecked(&reps[c]);
            let key = coset_key(&y);
            if let std::collections::hash_map::Entry::Vacant(slot) = number.entry(key) {
                slot.insert(reps.len());
                queue.push_back(reps.len());
                reps.push(y);
            }
        }
    }
    let n = reps.len();
    if n * h_abs.order() != g_abs.order() {
        return Err(GroupError::NotSubgroup);
    }
    let images: Vec<Permutation> = g_abs
        .generators()
        .iter()
        .map(|g| {
            let table: Vec<u8> = reps
                .iter()
                .map(|r| number[&coset_key(&g.compose_unchecked(r))] as u8)
                .collect();
            Permutation::from_raw(table)
        })
        .collect();
    let chi_g = PermGroup::generate(n, &images, caps)?;
    PairGH::from_transitive(chi_g)
}

/// `Core_G(H)`: the elements of `H` whose every conjugate stays in `H`.
pub fn core(g: &PermGroup, h: &PermGroup) -> Result<PermGroup, GroupError> {
    let elems: Vec<Permutation> = h
        .elements()
        .iter()
        .filter(|x| g.elements().iter().all(|y| h.contains(&x.conjugate_unchecked(y))))
        .cloned()
        .collect();
    PermGroup::from_elements(g.degree(), elems)
}

/// Left transversals of an arbitrary subgroup pair (identity from `H` itself),
/// without passing to the coset representation.
pub fn abstract_left_transversals(
    g: &PermGroup,
    h: &PermGroup,
    caps: &Caps,
) -> Result<Vec<Vec<Permutation>>, GroupError> {
    if !h.is_subgroup_of(g) {
        return Err(GroupError::NotSubgroup);
    }
    let mut assigned = vec![false; g.order()];
    let mut cosets: Vec<Vec<Permutation>> = Vec::new();
    for (i, x) in g.elements().iter().enumerate() {
        if assigned[i] {
            continue;
        }
        let coset: Vec<Permutation> = h.elements().iter().map(|y| x.compose_unchecked(y)).collect();
        for c in &coset {
            assigned[g.index_of(c).unwrap()] = true;
        }
        cosets.push(coset);
    }
    // cosets[0] is H because the identity is the first element of G.
    let count = num_traits::pow(BigUint::from(h.order()), cosets.len() - 1);
    if count > BigUint::from(caps.max_transversals) {
        return Err(GroupError::cap("max_transversals", caps.max_transversals, count));
    }
    let mut out = vec![vec![cosets[0][0].clone()]];
    for coset in &cosets[1..] {
        out = out
            .into_iter()
            .flat_map(|prefix| {
                coset.iter().map(move |c| {
                    let mut t = prefix.clone();
                    t.push(c.clone());
                    t
                })
            })
            .collect();
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groups::{make_dihedral, make_sym};

    #[test]
    fn transversal_counts() {
        let caps = Caps::default();
        let s4 = make_sym(4, &caps).unwrap();
        assert_eq!(enumerate_transversals(&s4, &caps).unwrap().count(), 216);
        let d4 = make_dihedral(4, &caps).unwrap();
        let all: Vec<Transversal> = enumerate_transversals(&d4, &caps).unwrap().collect();
        assert_eq!(all.len(), 8);
        for t in &all {
            assert!(t.members()[0].is_identity());
            for (i, m) in t.members().iter().enumerate() {
                assert_eq!(m.apply(1), i + 1);
                assert!(d4.g().contains(m));
            }
        }
    }

    #[test]
    fn space_round_trip() {
        let caps = Caps::default();
        let s4 = make_sym(4, &caps).unwrap();
        let space = s4.space();
        for (idx, t) in enumerate_transversals(&s4, &caps).unwrap().enumerate() {
            assert_eq!(space.index_of(&t), idx as u64);
        }
    }

    #[test]
    fn transversal_cap() {
        let caps = Caps {
            max_transversals: 100,
            ..Caps::default()
        };
        let s4 = make_sym(4, &Caps::default()).unwrap();
        assert!(matches!(
            enumerate_transversals(&s4, &caps),
            Err(GroupError::CapExceeded { cap: "max_transversals", .. })
        ));
    }

    #[test]
    fn transversal_validation() {
        let caps = Caps::default();
        let s3 = make_sym(3, &caps).unwrap();
        let p = |s: &str| Permutation::parse_cycles(s, 3).unwrap();
        let ok = Transversal::new(&s3, vec![p("(1,3)"), p("()"), p("(1,2)")]).unwrap();
        assert_eq!(ok.member(3), &p("(1,3)"));
        assert!(Transversal::new(&s3, vec![p("()"), p("(1,2)"), p("(1,2,3)")]).is_err());
        assert!(Transversal::new(&s3, vec![p("(2,3)"), p("(1,2)"), p("(1,3)")]).is_err());
    }

    #[test]
    fn normal_subgroup_collapses_to_regular_quotient() {
        let caps = Caps::default();
        let q = |s: &str| Permutation::parse_cycles(s, 3).unwrap();
        let s3 = PermGroup::generate(3, &[q("(1,2)"), q("(1,2,3)")], &caps).unwrap();
        let a3 = PermGroup::generate(3, &[q("(1,2,3)")], &caps).unwrap();
        let pair = coset_representation(&s3, &a3, &caps).unwrap();
        assert_eq!(pair.index(), 2);
        assert_eq!(pair.g().order(), 2);
        assert_eq!(pair.h_order(), 1);
        assert_eq!(core(&s3, &a3).unwrap().order(), 3);
    }

    #[test]
    fn abstract_transversal_enumeration() {
        let caps = Caps::default();
        let q = |s: &str| Permutation::parse_cycles(s, 4).unwrap();
        let s4 = PermGroup::generate(4, &[q("(1,2)"), q("(1,2,3,4)")], &caps).unwrap();
        let h = PermGroup::generate(4, &[q("(1,2)")], &caps).unwrap();
        let ts = abstract_left_transversals(&s4, &h, &caps).unwrap();
        assert_eq!(ts.len(), 2usize.pow(11));
        assert!(ts.iter().all(|t| t[0].is_identity() && t.len() == 12));
    }
}
