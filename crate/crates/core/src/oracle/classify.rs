//! Exhaustive classification of transversals up to isomorphism.

use std::collections::HashMap;

use num_bigint::BigUint;
use petgraph::unionfind::UnionFind;
use rayon::prelude::*;
use serde::Serialize;

use super::table::{canonical_cells, LoopTable};
use super::OracleError;
use crate::count::decimal;
use crate::groups::{generates, stabilizer_perms, Caps, PairGH, Transversal};
use crate::perm::Permutation;

/// Number of transversals handled per parallel batch in the orbit pass.
const CHUNK: u64 = 1 << 14;

/// Isomorphism classes of a set of transversals or loop tables.
#[derive(Clone, Debug, Serialize)]
pub struct ClassificationResult {
    #[serde(with = "decimal")]
    pub class_count: BigUint,
    /// Number of objects classified (`|H|^(n-1)` for a pair).
    #[serde(with = "decimal")]
    pub total: BigUint,
    pub representatives: Vec<LoopTable>,
    /// Members of each representative transversal in cycle notation.
    pub representative_members: Vec<Vec<String>>,
    #[serde(with = "decimal::vec")]
    pub class_sizes: Vec<BigUint>,
    /// Whether each representative transversal generates `G`.
    pub generating_flags: Vec<bool>,
    /// Class number of every object, in enumeration order.
    #[serde(skip)]
    pub labels: Vec<u32>,
}

impl ClassificationResult {
    pub(crate) fn from_labels(
        labels: Vec<u32>,
        rep_index: Vec<u64>,
        representatives: Vec<LoopTable>,
        representative_members: Vec<Vec<Permutation>>,
        generating_flags: Vec<bool>,
    ) -> ClassificationResult {
        let mut sizes = vec![0u64; rep_index.len()];
        for &l in &labels {
            sizes[l as usize] += 1;
        }
        ClassificationResult {
            class_count: BigUint::from(rep_index.len()),
            total: BigUint::from(labels.len()),
            representatives,
            representative_members: representative_members
                .iter()
                .map(|m| m.iter().map(Permutation::to_string).collect())
                .collect(),
            class_sizes: sizes.into_iter().map(BigUint::from).collect(),
            generating_flags,
            labels,
        }
    }

    /// Class sizes sorted descending, as plain integers.
    pub fn size_distribution(&self) -> Vec<(BigUint, usize)> {
        let mut counts: HashMap<BigUint, usize> = HashMap::new();
        for s in &self.class_sizes {
            *counts.entry(s.clone()).or_insert(0) += 1;
        }
        let mut v: Vec<_> = counts.into_iter().collect();
        v.sort_by(|a, b| b.0.cmp(&a.0));
        v
    }
}

/// Whether two labelings induce the same partition of their common index set.
pub fn same_partition(a: &[u32], b: &[u32]) -> bool {
    a.len() == b.len() && normalize_labels(a) == normalize_labels(b)
}

/// Renumbers classes by first occurrence.
pub fn normalize_labels(labels: &[u32]) -> Vec<u32> {
    let mut map: HashMap<u32, u32> = HashMap::new();
    labels
        .iter()
        .map(|&l| {
            let next = map.len() as u32;
            *map.entry(l).or_insert(next)
        })
        .collect()
}

/// `table[i][j] = (a_i a_j)(1)`: the member of `T` in the coset `a_i a_j H`
/// is the one sending 1 to that symbol. Since `a_j(1) = j` this is `a_i(j)`.
pub fn induced_table(pair: &PairGH, t: &Transversal) -> LoopTable {
    let n = pair.index();
    let mut cells = Vec::with_capacity(n * n);
    for a in t.members() {
        for b in t.members() {
            cells.push(a.compose_unchecked(b).apply0(0) as u8);
        }
    }
    LoopTable::from_cells(n, cells)
}

fn table_of_elements(pair: &PairGH, elements: &[u32]) -> Vec<u8> {
    let g = pair.g();
    let n = pair.index();
    let mut cells = Vec::with_capacity(n * n);
    for &a in elements {
        let a = g.element(a as usize);
        for b in 0..n {
            cells.push(a.apply0(b) as u8);
        }
    }
    cells
}

fn check_pair_caps(pair: &PairGH, caps: &Caps) -> Result<(u64, Vec<Permutation>), OracleError> {
    let len = pair.space().checked_len(caps)?;
    let alphas = stabilizer_perms(pair.index(), caps)?;
    Ok((len, alphas))
}

fn representative_data(
    pair: &PairGH,
    reps: &[u64],
) -> (Vec<LoopTable>, Vec<Vec<Permutation>>, Vec<bool>) {
    let space = pair.space();
    let data: Vec<(LoopTable, Vec<Permutation>, bool)> = reps
        .par_iter()
        .map(|&idx| {
            let t = space.transversal(idx);
            (induced_table(pair, &t), t.members().to_vec(), generates(pair, &t))
        })
        .collect();
    let mut tables = Vec::new();
    let mut members = Vec::new();
    let mut flags = Vec::new();
    for (t, m, f) in data {
        tables.push(t);
        members.push(m);
        flags.push(f);
    }
    (tables, members, flags)
}

/// Conjugation of every element of `G` by `alpha`, as element indices, or
/// `None` where the conjugate leaves `G`.
fn conjugation_map(pair: &PairGH, alpha: &Permutation) -> Vec<Option<u32>> {
    let g = pair.g();
    g.elements()
        .iter()
        .map(|e| g.index_of(&e.conjugate_unchecked(alpha)).map(|i| i as u32))
        .collect()
}

/// Orbits of `T ~ αTα^-1` over all `α` fixing 1, merged with union-find.
/// Classes are numbered by their smallest transversal index.
pub fn classify_by_conjugation(pair: &PairGH, caps: &Caps) -> Result<ClassificationResult, OracleError> {
    let (len, alphas) = check_pair_caps(pair, caps)?;
    let space = pair.space();
    let n = pair.index();
    let g = pair.g();
    // An α with some coset conjugated entirely out of G moves no transversal
    // onto another, so it is dropped up front.
    let maps: Vec<Vec<Option<u32>>> = alphas
        .par_iter()
        .filter(|a| !a.is_identity())
        .map(|a| conjugation_map(pair, a))
        .filter(|map| {
            (1..n).all(|s| pair.coset_indices(s).iter().any(|&e| map[e as usize].is_some()))
        })
        .collect();
    let slot: Vec<usize> = g.elements().iter().map(|e| e.apply0(0)).collect();
    let mut uf = UnionFind::<usize>::new(len as usize);
    let mut start = 0u64;
    while start < len {
        let end = (start + CHUNK).min(len);
        let edges: Vec<(u64, u64)> = (start..end)
            .into_par_iter()
            .flat_map_iter(|idx| {
                let mut elems = Vec::with_capacity(n);
                let mut image = vec![0u32; n];
                space.decode(idx, &mut elems);
                let mut out = Vec::new();
                'alpha: for map in &maps {
                    for &e in &elems {
                        match map[e as usize] {
                            Some(c) => image[slot[c as usize]] = c,
                            None => continue 'alpha,
                        }
                    }
                    let j = space.encode(&image);
                    if j < idx {
                        out.push((idx, j));
                    }
                }
                out.into_iter()
            })
            .collect();
        for (a, b) in edges {
            uf.union(a as usize, b as usize);
        }
        start = end;
    }
    let mut class_of_root: HashMap<usize, u32> = HashMap::new();
    let mut reps = Vec::new();
    let labels: Vec<u32> = (0..len as usize)
        .map(|i| {
            let root = uf.find(i);
            *class_of_root.entry(root).or_insert_with(|| {
                reps.push(i as u64);
                (reps.len() - 1) as u32
            })
        })
        .collect();
    let (tables, members, flags) = representative_data(pair, &reps);
    Ok(ClassificationResult::from_labels(labels, reps, tables, members, flags))
}

/// Groups objects by canonical form; classes are ordered by canonical form.
fn group_by_canonical(canon: Vec<Vec<u8>>) -> (Vec<u32>, Vec<u64>) {
    let mut distinct: Vec<(&Vec<u8>, u64)> = Vec::new();
    let mut first: HashMap<&Vec<u8>, u64> = HashMap::new();
    for (i, c) in canon.iter().enumerate() {
        first.entry(c).or_insert_with(|| {
            distinct.push((c, i as u64));
            i as u64
        });
    }
    distinct.sort();
    let class: HashMap<&Vec<u8>, u32> = distinct
        .iter()
        .enumerate()
        .map(|(k, (c, _))| (*c, k as u32))
        .collect();
    let labels = canon.iter().map(|c| class[c]).collect();
    let reps = distinct.iter().map(|&(_, i)| i).collect();
    (labels, reps)
}

pub(crate) fn canonical_labels(
    len: u64,
    n: usize,
    alphas: &[Permutation],
    table: impl Fn(u64) -> Vec<u8> + Sync,
) -> (Vec<u32>, Vec<u64>) {
    let canon: Vec<Vec<u8>> = (0..len)
        .into_par_iter()
        .map(|idx| canonical_cells(n, &table(idx), alphas))
        .collect();
    group_by_canonical(canon)
}

/// Classes of induced tables under relabelings fixing 1, decided by
/// canonical form. Independent of the conjugation pass.
pub fn classify_by_table_iso(pair: &PairGH, caps: &Caps) -> Result<ClassificationResult, OracleError> {
    let (len, alphas) = check_pair_caps(pair, caps)?;
    let space = pair.space();
    let (labels, reps) = canonical_labels(len, pair.index(), &alphas, |idx| {
        let mut elems = Vec::new();
        space.decode(idx, &mut elems);
        table_of_elements(pair, &elems)
    });
    let (tables, members, flags) = representative_data(pair, &reps);
    Ok(ClassificationResult::from_labels(labels, reps, tables, members, flags))
}

/// Every transversal that is closed under composition.
pub fn subgroup_transversals(pair: &PairGH, caps: &Caps) -> Result<Vec<Transversal>, OracleError> {
    let space = pair.space();
    let len = space.checked_len(caps)?;
    let mut found: Vec<(u64, Transversal)> = (0..len)
        .into_par_iter()
        .filter_map(|idx| {
            let t = space.transversal(idx);
            t.is_subgroup().then_some((idx, t))
        })
        .collect();
    found.sort_by_key(|(i, _)| *i);
    Ok(found.into_iter().map(|(_, t)| t).collect())
}
