//! Brute-force ground truth: every transversal is enumerated, its induced
//! left loop built, and the loops classified up to isomorphism in two
//! independent ways.

mod census;
mod classify;
mod dump;
mod right;
mod table;

use thiserror::Error;

use crate::groups::GroupError;

pub use census::census_left_loops;
pub use classify::{
    classify_by_conjugation, classify_by_table_iso, induced_table, normalize_labels, same_partition,
    subgroup_transversals, ClassificationResult,
};
pub use dump::{count_blocks, render_dump};
pub use right::{left_right_agreement, LeftRightReport};
pub use table::LoopTable;

#[derive(Debug, Error)]
pub enum OracleError {
    #[error("invalid loop table: {0}")]
    BadTable(String),
    #[error(transparent)]
    Group(#[from] GroupError),
}
