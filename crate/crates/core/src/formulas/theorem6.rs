//! General Burnside engine: `ict(G,H) = (1/|Γ|) Σ_i |C_i| |Fix(x_i)|` over the
//! conjugacy classes of `Γ = N_{Sym(n-1)}(G)`.
//!
//! A transversal fixed by `x` is determined by one member per orbit of `x`
//! on `{2..n}`: for an orbit of length `L` through `i`, the member `a_i` must
//! send 1 to `i` and commute with `x^L`, after which the rest of the orbit is
//! forced (`a_{x(i)} = x a_i x^-1`). Fixed points `δ` need `a_δ` commuting with
//! `x`. Both counts are direct filters over the coset lists of `G`.

use std::collections::HashSet;

use num_bigint::BigUint;
use rayon::prelude::*;

use super::{ClassContribution, IctError, IctReport, Justification, Method};
use crate::count::factorial;
use crate::groups::{generates, stabilizer_perms, Caps, PairGH, PermGroup};
use crate::perm::Permutation;

fn commuting_in_coset(pair: &PairGH, symbol: usize, y: &Permutation) -> BigUint {
    let count = pair
        .coset(symbol)
        .filter(|q| q.compose_unchecked(y) == y.compose_unchecked(q))
        .count();
    BigUint::from(count)
}

/// Fixed-transversal data for one element `x` of `Γ`.
pub fn class_contribution(pair: &PairGH, x: &Permutation, class_size: BigUint) -> ClassContribution {
    let mut orbit_factors = Vec::new();
    let mut a_factors = vec![BigUint::from(1u32)];
    for orbit in x.orbits() {
        let rep = orbit[0];
        if rep == 1 {
            continue;
        }
        if orbit.len() == 1 {
            a_factors.push(commuting_in_coset(pair, rep, x));
        } else {
            let y = x.pow(orbit.len());
            orbit_factors.push(commuting_in_coset(pair, rep, &y));
        }
    }
    ClassContribution::new(x.clone(), class_size, orbit_factors, a_factors)
}

fn check_gamma(pair: &PairGH, gamma: &PermGroup) -> Result<(), IctError> {
    let n = pair.index();
    if gamma.degree() != n {
        return Err(IctError::BadGamma(format!(
            "degree {} does not match the pair's {n}",
            gamma.degree()
        )));
    }
    if let Some(bad) = gamma.elements().iter().find(|a| a.apply(1) != 1) {
        return Err(IctError::BadGamma(format!("{bad} moves 1")));
    }
    let g = pair.g();
    for alpha in gamma.generators() {
        if let Some(x) = g
            .generators()
            .iter()
            .find(|x| !g.contains(&x.conjugate_unchecked(alpha)))
        {
            return Err(IctError::BadGamma(format!("{alpha} conjugates {x} out of G")));
        }
    }
    Ok(())
}

/// Runs the class-sum engine over `gamma`.
///
/// The quotient is exact or the call fails. The report's justification is
/// `FullStabilizer` when `|gamma| = (n-1)!` and `Unverified` otherwise; use
/// [`verify_k_equals_gamma`] to establish one of the other conditions.
pub fn ict_theorem6(pair: &PairGH, gamma: &PermGroup) -> Result<IctReport, IctError> {
    check_gamma(pair, gamma)?;
    let n = pair.index();
    let classes = gamma.conjugacy_classes();
    let contributions: Vec<ClassContribution> = classes
        .par_iter()
        .map(|class| {
            let rep = gamma.element(class[0]);
            class_contribution(pair, rep, BigUint::from(class.len()))
        })
        .collect();
    let justification = if BigUint::from(gamma.order()) == factorial(n - 1) {
        Justification::FullStabilizer
    } else {
        Justification::Unverified
    };
    IctReport::assemble(
        Method::Theorem6,
        n,
        BigUint::from(pair.h_order()),
        BigUint::from(gamma.order()),
        contributions,
        justification,
        true,
    )
}

impl IctReport {
    pub fn with_justification(mut self, justification: Justification) -> IctReport {
        self.justification = justification;
        self
    }
}

/// Checks that isomorphism classes of transversals coincide with `Γ`-orbits.
///
/// Transversals that generate `G` are only conjugate to each other by
/// elements normalizing `G`, so only non-generating transversals need a
/// look: every stabilizer element carrying one onto another transversal must
/// be matched by an element of `gamma`.
pub fn verify_k_equals_gamma(
    pair: &PairGH,
    gamma: &PermGroup,
    caps: &Caps,
) -> Result<Justification, IctError> {
    check_gamma(pair, gamma)?;
    let n = pair.index();
    if BigUint::from(gamma.order()) == factorial(n - 1) {
        return Ok(Justification::FullStabilizer);
    }
    let space = pair.space();
    let len = space.checked_len(caps)?;
    let non_generating: Vec<u64> = (0..len)
        .into_par_iter()
        .filter(|&idx| !generates(pair, &space.transversal(idx)))
        .collect();
    if non_generating.is_empty() {
        return Ok(Justification::AllTransversalsGenerate);
    }
    let alphas = stabilizer_perms(n, caps)?;
    let failure = non_generating.par_iter().find_map_any(|&idx| {
        let mut elems = Vec::new();
        let mut image = Vec::new();
        space.decode(idx, &mut elems);
        let orbit: HashSet<u64> = gamma
            .elements()
            .iter()
            .map(|gm| {
                let ok = space.conjugate(&elems, gm, &mut image);
                debug_assert!(ok);
                space.encode(&image)
            })
            .collect();
        alphas.iter().find_map(|alpha| {
            if space.conjugate(&elems, alpha, &mut image) && !orbit.contains(&space.encode(&image)) {
                Some((idx, alpha.clone()))
            } else {
                None
            }
        })
    });
    match failure {
        None => Ok(Justification::NonGeneratingClassesAreOrbits),
        Some((idx, alpha)) => Err(IctError::Hypothesis(format!(
            "transversal #{idx} is conjugate by {alpha} to a transversal outside its Gamma-orbit"
        ))),
    }
}
