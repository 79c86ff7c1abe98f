//! Right transversals, kept private to the left/right comparison.
//!
//! A right transversal picks `r_i` with `r_i^-1(1) = i` from each right coset
//! `Hx`. The induced product `r_i ∘ r_j` is the member of `H r_i r_j`, whose
//! symbol is `(r_i r_j)^-1(1)`.

use num_bigint::BigUint;
use serde::Serialize;

use super::classify::{canonical_labels, classify_by_table_iso, same_partition};
use super::OracleError;
use crate::count::decimal;
use crate::groups::{stabilizer_perms, Caps, PairGH};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LeftRightReport {
    #[serde(with = "decimal")]
    pub left_count: BigUint,
    #[serde(with = "decimal")]
    pub right_count: BigUint,
    /// `S ↦ S^-1` carries the left partition exactly onto the right one.
    pub inverse_map_preserves_classes: bool,
}

impl LeftRightReport {
    pub fn agrees(&self) -> bool {
        self.left_count == self.right_count && self.inverse_map_preserves_classes
    }
}

/// Right cosets as element-index lists, numbered by `x^-1(1)`, each in `G`'s element order.
fn right_cosets(pair: &PairGH) -> (Vec<Vec<u32>>, Vec<u32>) {
    let g = pair.g();
    let n = pair.index();
    let mut cosets = vec![Vec::new(); n];
    let mut position = vec![0u32; g.order()];
    for (idx, e) in g.elements().iter().enumerate() {
        let c = e.inverse().apply0(0);
        position[idx] = cosets[c].len() as u32;
        cosets[c].push(idx as u32);
    }
    (cosets, position)
}

fn decode_right(cosets: &[Vec<u32>], radix: u64, mut index: u64, out: &mut Vec<u32>) {
    let n = cosets.len();
    out.clear();
    out.resize(n, 0);
    out[0] = cosets[0][0];
    for sym0 in (1..n).rev() {
        out[sym0] = cosets[sym0][(index % radix) as usize];
        index /= radix;
    }
}

/// Compares isomorphism classes of left and right transversals.
pub fn left_right_agreement(pair: &PairGH, caps: &Caps) -> Result<LeftRightReport, OracleError> {
    let left = classify_by_table_iso(pair, caps)?;
    let n = pair.index();
    let g = pair.g();
    let len = pair.space().checked_len(caps)?;
    let alphas = stabilizer_perms(n, caps)?;
    let (cosets, position) = right_cosets(pair);
    let radix = pair.h_order() as u64;
    let identity = cosets[0]
        .iter()
        .copied()
        .find(|&e| g.element(e as usize).is_identity())
        .expect("H contains the identity");
    let (right_labels, right_reps) = canonical_labels(len, n, &alphas, |idx| {
        let mut members = Vec::new();
        decode_right(&cosets, radix, idx, &mut members);
        members[0] = identity;
        let mut cells = Vec::with_capacity(n * n);
        for &a in &members {
            let a = g.element(a as usize);
            for &b in &members {
                let prod = a.compose_unchecked(g.element(b as usize));
                cells.push(prod.inverse().apply0(0) as u8);
            }
        }
        cells
    });
    // Left transversal `idx` inverted, expressed as a right-transversal index.
    let space = pair.space();
    let inverse_index = |idx: u64| -> u64 {
        let mut elems = Vec::new();
        space.decode(idx, &mut elems);
        elems[1..].iter().fold(0u64, |acc, &e| {
            let inv = g.index_of(&g.element(e as usize).inverse()).expect("closed");
            acc * radix + position[inv] as u64
        })
    };
    let mapped: Vec<u32> = (0..len)
        .map(|idx| right_labels[inverse_index(idx) as usize])
        .collect();
    Ok(LeftRightReport {
        left_count: left.class_count,
        right_count: BigUint::from(right_reps.len()),
        inverse_map_preserves_classes: same_partition(&left.labels, &mapped),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groups::{make_dihedral, make_sym};

    #[test]
    fn right_cosets_partition_g() {
        let caps = Caps::default();
        let s4 = make_sym(4, &caps).unwrap();
        let (cosets, _) = right_cosets(&s4);
        assert!(cosets.iter().all(|c| c.len() == 6));
    }

    #[test]
    fn small_agreements() {
        let caps = Caps::default();
        let d3 = make_dihedral(3, &caps).unwrap();
        let r = left_right_agreement(&d3, &caps).unwrap();
        assert!(r.agrees());
        assert_eq!(r.right_count, BigUint::from(3u32));
    }
}
