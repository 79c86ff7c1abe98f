//! Counting isomorphism classes of transversals of a subgroup `H` in a finite
//! permutation group `G`, by Burnside-style class sums and by exhaustive
//! enumeration.

pub mod count;
pub mod formulas;
pub mod groups;
pub mod oracle;
pub mod perm;
pub mod symclasses;

pub use count::ExactCount;
pub use formulas::{IctError, IctReport, Justification, Method};
pub use groups::{Caps, GroupError, PairGH, PermGroup};
pub use perm::Permutation;
