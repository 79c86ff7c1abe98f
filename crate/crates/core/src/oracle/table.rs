use serde::{Deserialize, Serialize};

use super::OracleError;
use crate::perm::Permutation;

/// Cayley table of a left loop on `{1..n}` with identity 1.
///
/// Cells are stored 0-based, row-major; the public accessors are 1-based.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<Vec<usize>>", into = "Vec<Vec<usize>>")]
pub struct LoopTable {
    order: usize,
    cells: Vec<u8>,
}

impl LoopTable {
    /// Builds a table from 1-based rows and checks the left-loop invariants.
    pub fn new(rows: Vec<Vec<usize>>) -> Result<LoopTable, OracleError> {
        let n = rows.len();
        if n == 0 || n > 255 {
            return Err(OracleError::BadTable(format!("order {n} out of range")));
        }
        let mut cells = Vec::with_capacity(n * n);
        for row in &rows {
            if row.len() != n {
                return Err(OracleError::BadTable("table is not square".into()));
            }
            for &v in row {
                if !(1..=n).contains(&v) {
                    return Err(OracleError::BadTable(format!("entry {v} out of range")));
                }
                cells.push((v - 1) as u8);
            }
        }
        let t = LoopTable { order: n, cells };
        t.check_invariants()?;
        Ok(t)
    }

    pub(crate) fn from_cells(order: usize, cells: Vec<u8>) -> LoopTable {
        debug_assert_eq!(cells.len(), order * order);
        LoopTable { order, cells }
    }

    pub fn order(&self) -> usize {
        self.order
    }

    /// `a ∘ b`, 1-based.
    pub fn get(&self, a: usize, b: usize) -> usize {
        self.cells[(a - 1) * self.order + (b - 1)] as usize + 1
    }

    pub fn rows(&self) -> Vec<Vec<usize>> {
        self.cells
            .chunks(self.order)
            .map(|r| r.iter().map(|&v| v as usize + 1).collect())
            .collect()
    }

    /// Row-major cells, 0-based.
    pub fn cells(&self) -> &[u8] {
        &self.cells
    }

    /// Row 1 and column 1 are the identity and every row is a permutation.
    pub fn check_invariants(&self) -> Result<(), OracleError> {
        let n = self.order;
        for a in 0..n {
            if self.cells[a] as usize != a {
                return Err(OracleError::BadTable(format!("row 1 differs at column {}", a + 1)));
            }
            if self.cells[a * n] as usize != a {
                return Err(OracleError::BadTable(format!("{} ∘ 1 is not {}", a + 1, a + 1)));
            }
            let mut seen = vec![false; n];
            for &v in &self.cells[a * n..(a + 1) * n] {
                if std::mem::replace(&mut seen[v as usize], true) {
                    return Err(OracleError::BadTable(format!("row {} repeats {}", a + 1, v + 1)));
                }
            }
        }
        Ok(())
    }

    /// The table of the isomorphic loop obtained by renaming `x` to `alpha(x)`.
    pub fn relabel(&self, alpha: &Permutation) -> LoopTable {
        let n = self.order;
        let mut cells = vec![0u8; n * n];
        for a in 0..n {
            for b in 0..n {
                let v = self.cells[a * n + b] as usize;
                cells[alpha.apply0(a) * n + alpha.apply0(b)] = alpha.apply0(v) as u8;
            }
        }
        LoopTable { order: n, cells }
    }

    /// Lexicographically least flattened table over `relabelings`, which
    /// should be every permutation fixing 1.
    pub fn canonical_form(&self, relabelings: &[Permutation]) -> Vec<u8> {
        canonical_cells(self.order, &self.cells, relabelings)
    }

    /// Whether the operation is associative, so that the loop is a group.
    pub fn is_associative(&self) -> bool {
        let n = self.order;
        let op = |a: usize, b: usize| self.cells[a * n + b] as usize;
        (0..n).all(|a| (0..n).all(|b| (0..n).all(|c| op(op(a, b), c) == op(a, op(b, c)))))
    }
}

impl TryFrom<Vec<Vec<usize>>> for LoopTable {
    type Error = OracleError;

    fn try_from(rows: Vec<Vec<usize>>) -> Result<Self, Self::Error> {
        LoopTable::new(rows)
    }
}

impl From<LoopTable> for Vec<Vec<usize>> {
    fn from(t: LoopTable) -> Self {
        t.rows()
    }
}

/// Minimum over relabelings of a square table of 0-based cells. Each
/// candidate is abandoned at the first cell where it exceeds the best so far.
pub(crate) fn canonical_cells(n: usize, cells: &[u8], relabelings: &[Permutation]) -> Vec<u8> {
    let mut best: Option<Vec<u8>> = None;
    let mut cand = vec![0u8; n * n];
    for alpha in relabelings {
        let inv = alpha.inverse();
        let mut state = std::cmp::Ordering::Equal;
        let mut abandoned = false;
        for p in 0..n * n {
            let (a, b) = (p / n, p % n);
            let v = alpha.apply0(cells[inv.apply0(a) * n + inv.apply0(b)] as usize) as u8;
            cand[p] = v;
            if state == std::cmp::Ordering::Equal {
                if let Some(best) = &best {
                    state = v.cmp(&best[p]);
                    if state == std::cmp::Ordering::Greater {
                        abandoned = true;
                        break;
                    }
                }
            }
        }
        if abandoned {
            continue;
        }
        if best.is_none() || state == std::cmp::Ordering::Less {
            best = Some(cand.clone());
        }
    }
    best.unwrap_or_else(|| cells.to_vec())
}
