//! Burnside-style engines for `ict(G, H)`: the general class-sum engine over
//! `Γ = N_{Sym(n-1)}(G)`, closed forms for the symmetric and alternating
//! families, and the multiplier-group machinery for pairs with a cyclic
//! normal transversal.

pub mod closed;
pub mod cyclic;
pub mod theorem6;

use std::fmt::{self, Write as _};

use num_bigint::BigUint;
use num_traits::One;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::count::{decimal, NonIntegral};
use crate::groups::GroupError;
use crate::perm::{PermError, Permutation};

pub use closed::{all_even_centralizer, ict_alt, ict_sym};
pub use cyclic::{
    cyclic_fixed_and_orbit_data, cyclic_gamma, find_cyclic_normal_transversal, ict_cyclic,
    ict_cyclic_for_pair, ict_upper_bound_cyclic,
};
pub use theorem6::{class_contribution, ict_theorem6, verify_k_equals_gamma};

/// Version tag of the machine-readable report schema.
pub const REPORT_SCHEMA: &str = "ict-report/1";

#[derive(Debug, Error)]
pub enum IctError {
    #[error("hypothesis violated: {0}")]
    NonIntegral(#[from] NonIntegral),
    #[error("gamma is not a subgroup of the stabilizer of 1 normalizing G: {0}")]
    BadGamma(String),
    #[error("hypothesis not satisfied: {0}")]
    Hypothesis(String),
    #[error("{0}")]
    InvalidArgument(String),
    #[error(transparent)]
    Group(#[from] GroupError),
    #[error(transparent)]
    Perm(#[from] PermError),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Method {
    Theorem6,
    SymClosed,
    AltClosed,
    CyclicClosed,
    CyclicBound,
    Oracle,
}

impl Method {
    pub fn name(self) -> &'static str {
        match self {
            Method::Theorem6 => "theorem6",
            Method::SymClosed => "sym_closed",
            Method::AltClosed => "alt_closed",
            Method::CyclicClosed => "cyclic_closed",
            Method::CyclicBound => "cyclic_bound",
            Method::Oracle => "oracle",
        }
    }
}

/// Why the orbit count of `Γ` equals the number of isomorphism classes.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Justification {
    /// `Γ` is the whole stabilizer of 1.
    FullStabilizer,
    /// Checked: every transversal generates `G`.
    AllTransversalsGenerate,
    /// Checked: isomorphic non-generating transversals are already `Γ`-conjugate.
    NonGeneratingClassesAreOrbits,
    /// Closed form for a family where the condition is known to hold.
    Family,
    /// Not checked; the value counts `Γ`-orbits, an upper bound on the class count.
    Unverified,
}

/// One row of a class table: a conjugacy class of `Γ` and its fixed-transversal count.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassContribution {
    /// Class representative `x_i`, in cycle notation.
    #[serde(with = "perm_text")]
    pub representative: Permutation,
    #[serde(with = "decimal")]
    pub class_size: BigUint,
    /// Orbits of length > 1 of `x_i` on `{1..n}`.
    pub t: usize,
    /// Fixed points of `x_i`, counting symbol 1.
    pub k: usize,
    /// One factor per orbit of length `L > 1`: elements of `G` sending 1 to the
    /// orbit's smallest symbol and commuting with `x_i^L`. Equal to `|H|`
    /// whenever `x_i^L` is the identity.
    #[serde(with = "decimal::vec")]
    pub orbit_factors: Vec<BigUint>,
    /// `A_{i1} = 1` followed by `A_{ij}` for the remaining fixed points in ascending order.
    #[serde(with = "decimal::vec")]
    pub a_factors: Vec<BigUint>,
    /// `|Fix(x_i)|` = product of all orbit and A factors.
    #[serde(with = "decimal")]
    pub fix_count: BigUint,
}

impl ClassContribution {
    pub fn new(
        representative: Permutation,
        class_size: BigUint,
        orbit_factors: Vec<BigUint>,
        a_factors: Vec<BigUint>,
    ) -> Self {
        debug_assert!(a_factors.first().is_some_and(One::is_one));
        let fix_count = orbit_factors
            .iter()
            .chain(a_factors.iter())
            .fold(BigUint::one(), |acc, f| acc * f);
        Self {
            representative,
            class_size,
            t: orbit_factors.len(),
            k: a_factors.len(),
            orbit_factors,
            a_factors,
            fix_count,
        }
    }

    /// `|C_i| · |Fix(x_i)|`.
    pub fn weighted(&self) -> BigUint {
        &self.class_size * &self.fix_count
    }

    /// True when every orbit factor is `|H|`, so `fix_count = |H|^t · Π A`.
    pub fn orbits_uniform(&self, h_order: &BigUint) -> bool {
        self.orbit_factors.iter().all(|f| f == h_order)
    }
}

/// Result of a counting engine.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct IctReport {
    pub schema: String,
    pub method: Method,
    pub degree: usize,
    #[serde(with = "decimal")]
    pub h_order: BigUint,
    #[serde(with = "decimal")]
    pub gamma_order: BigUint,
    pub contributions: Vec<ClassContribution>,
    #[serde(with = "decimal")]
    pub value: BigUint,
    pub justification: Justification,
    /// False for formula-only runs whose hypothesis was not checked on a concrete pair.
    pub validated: bool,
    /// True when `value` is an upper bound rather than an exact count.
    pub bound: bool,
}

impl IctReport {
    pub(crate) fn assemble(
        method: Method,
        degree: usize,
        h_order: BigUint,
        gamma_order: BigUint,
        contributions: Vec<ClassContribution>,
        justification: Justification,
        validated: bool,
    ) -> Result<IctReport, IctError> {
        let numerator: BigUint = contributions.iter().map(ClassContribution::weighted).sum();
        let value = crate::count::exact_div(&numerator, &gamma_order)?;
        Ok(IctReport {
            schema: REPORT_SCHEMA.to_string(),
            method,
            degree,
            h_order,
            gamma_order,
            contributions,
            value,
            justification,
            validated,
            bound: false,
        })
    }

    /// Oracle counts carry no class table.
    pub fn from_oracle(degree: usize, h_order: usize, value: BigUint) -> IctReport {
        IctReport {
            schema: REPORT_SCHEMA.to_string(),
            method: Method::Oracle,
            degree,
            h_order: BigUint::from(h_order),
            gamma_order: BigUint::one(),
            contributions: Vec::new(),
            value,
            justification: Justification::FullStabilizer,
            validated: true,
            bound: false,
        }
    }

    /// `Σ |C_i| |Fix(x_i)|`.
    pub fn numerator(&self) -> BigUint {
        self.contributions.iter().map(ClassContribution::weighted).sum()
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn from_json(text: &str) -> Result<IctReport, serde_json::Error> {
        serde_json::from_str(text)
    }

    /// Human-readable class table, one row per conjugacy class of `Γ`.
    pub fn render_table(&self) -> String {
        let mut rows: Vec<[String; 7]> = vec![[
            "x_i".into(),
            "|C_i|".into(),
            "t_i".into(),
            "k_i".into(),
            "orbit factors".into(),
            "A_ij (j>1)".into(),
            "|C_i|*|Fix(x_i)|".into(),
        ]];
        for c in &self.contributions {
            let join = |v: &[BigUint]| {
                if v.is_empty() {
                    "-".to_string()
                } else {
                    v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",")
                }
            };
            rows.push([
                c.representative.to_string(),
                c.class_size.to_string(),
                c.t.to_string(),
                c.k.to_string(),
                join(&c.orbit_factors),
                join(&c.a_factors[1..]),
                c.weighted().to_string(),
            ]);
        }
        let widths: Vec<usize> = (0..7)
            .map(|col| rows.iter().map(|r| r[col].len()).max().unwrap_or(0))
            .collect();
        let mut out = String::new();
        for (i, row) in rows.iter().enumerate() {
            let cells: Vec<String> = row
                .iter()
                .zip(&widths)
                .map(|(cell, &w)| format!("{cell:<w$}"))
                .collect();
            let _ = writeln!(out, "| {} |", cells.join(" | "));
            if i == 0 {
                let rule: Vec<String> = widths.iter().map(|&w| "-".repeat(w)).collect();
                let _ = writeln!(out, "| {} |", rule.join(" | "));
            }
        }
        out
    }
}

impl fmt::Display for IctReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "method: {}", self.method.name())?;
        writeln!(f, "degree: {}  |H|: {}  |Gamma|: {}", self.degree, self.h_order, self.gamma_order)?;
        if !self.contributions.is_empty() {
            f.write_str(&self.render_table())?;
            writeln!(f, "sum: {}  /  {}", self.numerator(), self.gamma_order)?;
        }
        if !self.validated {
            writeln!(f, "note: hypothesis not validated on a concrete pair")?;
        }
        if self.justification == Justification::Unverified {
            writeln!(f, "note: orbit count of Gamma without a verified K = Gamma condition")?;
        }
        let label = if self.bound { "upper bound" } else { "ict" };
        writeln!(f, "{label}: {}", self.value)
    }
}

mod perm_text {
    use serde::{de::Error, Deserialize, Deserializer, Serialize, Serializer};

    use crate::perm::Permutation;

    #[derive(Serialize, Deserialize)]
    struct Repr {
        degree: usize,
        cycles: String,
    }

    pub fn serialize<S: Serializer>(p: &Permutation, s: S) -> Result<S::Ok, S::Error> {
        Repr {
            degree: p.degree(),
            cycles: p.to_string(),
        }
        .serialize(s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Permutation, D::Error> {
        let r = Repr::deserialize(d)?;
        Permutation::parse_cycles(&r.cycles, r.degree).map_err(D::Error::custom)
    }
}
