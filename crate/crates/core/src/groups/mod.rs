//! Explicit permutation groups, the normalized pair `(G, H)`, transversals,
//! and searches inside the stabilizer of symbol 1.

mod families;
mod fixture;
mod normalizer;
mod pair;

use std::collections::{HashMap, VecDeque};

use thiserror::Error;

use crate::perm::{PermError, Permutation};

pub use families::{
    dihedral_abstract, make_alt, make_dihedral, make_pq, make_sym, order18_abstract, pq_abstract,
    primitive_root_of_order, Family,
};
pub use fixture::Fixture;
pub use normalizer::{
    aut_fixing_h_order, centralizer_in_stab, for_each_stabilizer_perm, generates,
    normalizer_in_stab, normalizer_in_stab_brute, stabilizer_perms,
};
pub use pair::{
    abstract_left_transversals, core, coset_representation, enumerate_transversals, PairGH,
    Transversal, TransversalIter, TransversalSpace,
};

/// Enumeration limits. Exceeding one is an error naming the cap, never a silent truncation.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Caps {
    /// Largest group order `closure` will materialize.
    pub max_group_order: usize,
    /// Largest number of transversals (`|H|^(n-1)`) or loop tables enumerated.
    pub max_transversals: u64,
    /// Largest number of elements of the stabilizer of 1 (`(n-1)!`) searched or applied.
    pub max_relabelings: usize,
}

impl Default for Caps {
    fn default() -> Self {
        Self {
            max_group_order: 10_000_000,
            max_transversals: 10_000_000,
            // 8! so brute-force stabilizer searches run up to degree 9.
            max_relabelings: 40_320,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GroupError {
    #[error("cap `{cap}` exceeded: need {required}, limit is {limit}")]
    CapExceeded {
        cap: &'static str,
        limit: String,
        required: String,
    },
    #[error(transparent)]
    Perm(#[from] PermError),
    #[error("subgroup is not contained in the group")]
    NotSubgroup,
    #[error("group is not transitive on 1..={0}")]
    NotTransitive(usize),
    #[error("element list is not closed under composition")]
    NotClosed,
    #[error("invalid parameters: {0}")]
    InvalidParameters(String),
    #[error("not a transversal: {0}")]
    NotTransversal(String),
    #[error("degree {degree} too large for a stabilizer search and no closed form applies")]
    NoNormalizerMethod { degree: usize },
    #[error("fixture line {line}: {reason}")]
    Fixture { line: usize, reason: String },
}

impl GroupError {
    pub(crate) fn cap(cap: &'static str, limit: impl ToString, required: impl ToString) -> Self {
        GroupError::CapExceeded {
            cap,
            limit: limit.to_string(),
            required: required.to_string(),
        }
    }
}

/// A finite group of permutations held as a sorted list of its elements.
#[derive(Clone)]
pub struct PermGroup {
    degree: usize,
    elements: Vec<Permutation>,
    index: HashMap<Permutation, u32>,
    generators: Vec<Permutation>,
}

impl PermGroup {
    /// The subgroup generated by `generators`, built by breadth-first closure.
    pub fn generate(
        degree: usize,
        generators: &[Permutation],
        caps: &Caps,
    ) -> Result<PermGroup, GroupError> {
        let identity = Permutation::identity(degree)?;
        for g in generators {
            if g.degree() != degree {
                return Err(PermError::DegreeMismatch {
                    left: degree,
                    right: g.degree(),
                }
                .into());
            }
        }
        let elements = bfs_closure(identity, generators, caps.max_group_order)?;
        let mut gens: Vec<Permutation> = Vec::new();
        for g in generators {
            if !g.is_identity() && !gens.contains(g) {
                gens.push(g.clone());
            }
        }
        Ok(Self::assemble(degree, elements, gens))
    }

    /// Wraps an explicit element list, checking closure and deriving a small generating set.
    pub fn from_elements(
        degree: usize,
        elements: Vec<Permutation>,
    ) -> Result<PermGroup, GroupError> {
        let identity = Permutation::identity(degree)?;
        let mut elements = elements;
        elements.sort();
        elements.dedup();
        if elements.iter().any(|e| e.degree() != degree) {
            return Err(GroupError::NotClosed);
        }
        let lookup: std::collections::HashSet<&Permutation> = elements.iter().collect();
        if !lookup.contains(&identity) {
            return Err(GroupError::NotClosed);
        }
        // Greedy generating set in sorted order; each addition at least doubles the span.
        let mut gens: Vec<Permutation> = Vec::new();
        let mut span = vec![identity.clone()];
        let mut span_set: std::collections::HashSet<Permutation> = span.iter().cloned().collect();
        for e in &elements {
            if span_set.contains(e) {
                continue;
            }
            gens.push(e.clone());
            span = bfs_closure(identity.clone(), &gens, elements.len().max(1))
                .map_err(|_| GroupError::NotClosed)?;
            span_set = span.iter().cloned().collect();
            if span.iter().any(|s| !lookup.contains(s)) {
                return Err(GroupError::NotClosed);
            }
        }
        if span.len() != elements.len() {
            return Err(GroupError::NotClosed);
        }
        Ok(Self::assemble(degree, elements, gens))
    }

    pub fn trivial(degree: usize) -> Result<PermGroup, GroupError> {
        Self::generate(degree, &[], &Caps::default())
    }

    fn assemble(degree: usize, mut elements: Vec<Permutation>, generators: Vec<Permutation>) -> Self {
        elements.sort();
        let index = elements
            .iter()
            .enumerate()
            .map(|(i, e)| (e.clone(), i as u32))
            .collect();
        Self {
            degree,
            elements,
            index,
            generators,
        }
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    /// Elements in ascending image-table order; the identity is always first.
    pub fn elements(&self) -> &[Permutation] {
        &self.elements
    }

    pub fn generators(&self) -> &[Permutation] {
        &self.generators
    }

    pub fn contains(&self, p: &Permutation) -> bool {
        self.index.contains_key(p)
    }

    pub fn index_of(&self, p: &Permutation) -> Option<usize> {
        self.index.get(p).map(|&i| i as usize)
    }

    pub fn element(&self, i: usize) -> &Permutation {
        &self.elements[i]
    }

    pub fn is_subgroup_of(&self, other: &PermGroup) -> bool {
        self.degree == other.degree && self.elements.iter().all(|e| other.contains(e))
    }

    /// `self` must be a subgroup of `g`.
    pub fn is_normal_in(&self, g: &PermGroup) -> bool {
        g.generators.iter().all(|x| {
            self.generators
                .iter()
                .all(|h| self.contains(&h.conjugate_unchecked(x)))
        })
    }

    pub fn stabilizer(&self, point: usize) -> Result<PermGroup, GroupError> {
        let elems: Vec<Permutation> = self
            .elements
            .iter()
            .filter(|e| e.apply(point) == point)
            .cloned()
            .collect();
        PermGroup::from_elements(self.degree, elems)
    }

    pub fn is_transitive(&self) -> bool {
        let mut seen = vec![false; self.degree];
        seen[0] = true;
        let mut queue = VecDeque::from([0usize]);
        while let Some(i) = queue.pop_front() {
            for g in &self.generators {
                let j = g.apply0(i);
                if !seen[j] {
                    seen[j] = true;
                    queue.push_back(j);
                }
            }
        }
        seen.iter().all(|&s| s)
    }

    pub fn is_abelian(&self) -> bool {
        self.generators.iter().all(|a| {
            self.generators
                .iter()
                .all(|b| a.compose_unchecked(b) == b.compose_unchecked(a))
        })
    }

    /// Conjugacy classes as element-index lists. Each class is sorted so its
    /// first entry is its representative under [`class_rep_key`]; classes are
    /// ordered by that representative's key (identity first).
    pub fn conjugacy_classes(&self) -> Vec<Vec<usize>> {
        let mut assigned = vec![false; self.order()];
        let mut classes = Vec::new();
        for start in 0..self.order() {
            if assigned[start] {
                continue;
            }
            assigned[start] = true;
            let mut class = vec![start];
            let mut queue = VecDeque::from([start]);
            while let Some(i) = queue.pop_front() {
                for g in &self.generators {
                    let c = self.elements[i].conjugate_unchecked(g);
                    let j = self.index[&c] as usize;
                    if !assigned[j] {
                        assigned[j] = true;
                        class.push(j);
                        queue.push_back(j);
                    }
                }
            }
            class.sort_by_key(|&i| class_rep_key(&self.elements[i]));
            classes.push(class);
        }
        classes.sort_by_key(|c| class_rep_key(&self.elements[c[0]]));
        classes
    }
}

impl std::fmt::Debug for PermGroup {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("PermGroup")
            .field("degree", &self.degree)
            .field("order", &self.order())
            .field("generators", &self.generators)
            .finish()
    }
}

impl PartialEq for PermGroup {
    fn eq(&self, other: &Self) -> bool {
        self.degree == other.degree && self.elements == other.elements
    }
}

impl Eq for PermGroup {}

/// Ordering used to pick class representatives: fewer moved points first,
/// then canonical cycle notation. Picks `(2,3)` over `(2,4)` and
/// `(2,3)(4,5)` before `(2,3,4,5)`, matching the hand-built class tables.
pub fn class_rep_key(p: &Permutation) -> (usize, Vec<Vec<usize>>) {
    (p.moved_count(), p.cycles())
}

fn bfs_closure(
    identity: Permutation,
    generators: &[Permutation],
    cap: usize,
) -> Result<Vec<Permutation>, GroupError> {
    let mut seen: std::collections::HashSet<Permutation> = std::collections::HashSet::new();
    seen.insert(identity.clone());
    let mut order = vec![identity];
    let mut head = 0;
    while head < order.len() {
        let x = order[head].clone();
        head += 1;
        for g in generators {
            let y = g.compose_unchecked(&x);
            if !seen.contains(&y) {
                if order.len() >= cap {
                    return Err(GroupError::cap("max_group_order", cap, format!("more than {cap}")));
                }
                seen.insert(y.clone());
                order.push(y);
            }
        }
    }
    Ok(order)
}
