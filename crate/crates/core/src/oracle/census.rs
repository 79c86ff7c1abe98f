//! Direct enumeration of left loops of order `n`.
//!
//! Row `a` of a table is any permutation `π_a` of `{1..n}` with `π_a(1) = a`
//! (row 1 is the identity), which gives `((n-1)!)^(n-1)` tables. The rows
//! read as permutations form a transversal of the stabilizer of 1 in
//! `Sym(n)`, which is how the generating flags are computed.

use num_bigint::BigUint;
use rayon::prelude::*;

use super::classify::{canonical_labels, ClassificationResult};
use super::table::LoopTable;
use super::OracleError;
use crate::count::factorial;
use crate::groups::{stabilizer_perms, Caps, GroupError, PermGroup};
use crate::perm::Permutation;

/// Permutations of `{0..n-1}` sending 0 to `a`, in lexicographic order.
fn rows_starting_with(n: usize, a: usize) -> Vec<Vec<u8>> {
    fn rec(n: usize, prefix: &mut Vec<u8>, used: &mut [bool], out: &mut Vec<Vec<u8>>) {
        if prefix.len() == n {
            out.push(prefix.clone());
            return;
        }
        for v in 0..n {
            if !used[v] {
                used[v] = true;
                prefix.push(v as u8);
                rec(n, prefix, used, out);
                prefix.pop();
                used[v] = false;
            }
        }
    }
    let mut used = vec![false; n];
    used[a] = true;
    let mut out = Vec::new();
    rec(n, &mut vec![a as u8], &mut used, &mut out);
    out
}

/// Classifies every left loop of order `n` up to isomorphism fixing 1.
pub fn census_left_loops(n: usize, caps: &Caps) -> Result<ClassificationResult, OracleError> {
    if n == 0 || n > 255 {
        return Err(OracleError::BadTable(format!("order {n} out of range")));
    }
    let per_row = factorial(n - 1);
    let total = num_traits::pow(per_row.clone(), n - 1);
    let len = u64::try_from(&total)
        .ok()
        .filter(|&l| l <= caps.max_transversals)
        .ok_or_else(|| GroupError::cap("max_transversals", caps.max_transversals, &total))?;
    let alphas = stabilizer_perms(n, caps)?;
    let rows: Vec<Vec<Vec<u8>>> = (0..n).map(|a| rows_starting_with(n, a)).collect();
    let radix = u64::try_from(&per_row).expect("fits");
    let table = |mut idx: u64| -> Vec<u8> {
        let mut cells = vec![0u8; n * n];
        cells[..n].copy_from_slice(&rows[0][0]);
        for a in (1..n).rev() {
            let choice = (idx % radix) as usize;
            idx /= radix;
            cells[a * n..(a + 1) * n].copy_from_slice(&rows[a][choice]);
        }
        cells
    };
    let (labels, reps) = canonical_labels(len, n, &alphas, table);
    let sym_order = factorial(n);
    let data: Vec<(LoopTable, Vec<Permutation>, bool)> = reps
        .par_iter()
        .map(|&idx| {
            let cells = table(idx);
            let members: Vec<Permutation> = cells
                .chunks(n)
                .map(|r| Permutation::from_raw(r.to_vec()))
                .collect();
            let gen_caps = Caps {
                max_group_order: usize::MAX,
                ..*caps
            };
            let generates = PermGroup::generate(n, &members, &gen_caps)
                .map(|g| BigUint::from(g.order()) == sym_order)
                .unwrap_or(false);
            (LoopTable::from_cells(n, cells), members, generates)
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
    Ok(ClassificationResult::from_labels(labels, reps, tables, members, flags))
}
