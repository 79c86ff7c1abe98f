//! Pairs with a cyclic normal transversal `T = ⟨a⟩`.
//!
//! Relabel so that `a = (1,2,...,n)` and write symbols as residues
//! `r = i - 1`. Every element of `Sym(n-1)` normalizing `T` is then a
//! multiplier `r ↦ c·r` with `c` a unit mod `n`; the multiplier indexed by
//! `j` uses `c = j^{-1}`. Its fixed points and cycle count give the `k_j` and
//! `t_j` of the orbit-count formula.

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::One;

use super::{theorem6::verify_k_equals_gamma, ClassContribution, IctError, IctReport, Justification, Method};
use crate::count::pow;
use crate::groups::{class_rep_key, generates, Caps, GroupError, PairGH, PermGroup};
use crate::perm::Permutation;

fn check_degree(n: usize) -> Result<(), IctError> {
    if !(1..=255).contains(&n) {
        return Err(IctError::InvalidArgument(format!("degree must lie in 1..=255, got {n}")));
    }
    Ok(())
}

fn inverse_mod(j: usize, n: usize) -> Result<usize, IctError> {
    if n == 1 {
        return Ok(0);
    }
    let e = (j as i64).extended_gcd(&(n as i64));
    if e.gcd != 1 {
        return Err(IctError::InvalidArgument(format!("{j} is not a unit mod {n}")));
    }
    Ok(e.x.rem_euclid(n as i64) as usize)
}

/// Units mod `n` in ascending order (`[0]` stands in for `n = 1`).
pub fn units(n: usize) -> Vec<usize> {
    if n == 1 {
        return vec![0];
    }
    (1..n).filter(|j| j.gcd(&n) == 1).collect()
}

/// The multiplier `r ↦ c·r` on residues, as a permutation of `{1..n}` in
/// standard coordinates.
fn multiplier(n: usize, c: usize) -> Permutation {
    let images: Vec<u8> = (0..n).map(|r| ((c * r) % n) as u8).collect();
    Permutation::from_raw(images)
}

/// Multiplicative order of `c` mod `n`.
fn unit_order(c: usize, n: usize) -> usize {
    let mut x = c % n;
    let mut o = 1;
    while x != 1 % n {
        x = x * c % n;
        o += 1;
    }
    o
}

/// `(k_j, t_j)`: fixed points and non-trivial cycles of the multiplier
/// indexed by `j` on `{1..n}`. `k_j = gcd(n, j^{-1} - 1)` (`n` for `j = 1`) and
/// the cycle count `m_j` averages `gcd(n, c^i - 1)` over the powers of `c`.
pub fn cyclic_fixed_and_orbit_data(n: usize, j: usize) -> Result<(usize, usize), IctError> {
    check_degree(n)?;
    let c = inverse_mod(j, n)?;
    let fixed = |e: usize| n.gcd(&((e + n - 1) % n));
    let k = fixed(c);
    let o = unit_order(c, n);
    let mut total = 0;
    let mut x = 1 % n;
    for _ in 0..o {
        x = x * c % n;
        total += fixed(x);
    }
    debug_assert_eq!(total % o, 0);
    Ok((k, total / o - k))
}

/// `(k_j, t_j)` by walking the cycles of the multiplier directly.
pub fn cyclic_fixed_and_orbit_data_direct(n: usize, j: usize) -> Result<(usize, usize), IctError> {
    check_degree(n)?;
    let c = inverse_mod(j, n)?;
    let full = multiplier(n, c).full_cycle_type();
    Ok((full.fixed_points(), full.nontrivial_orbits()))
}

/// Relabeling `β` with `β(a^k(1)) = k + 1`, so `β a β^{-1} = (1,2,...,n)`.
fn standardizer(n: usize, a: &Permutation) -> Result<Permutation, IctError> {
    let is_cycle = a.degree() == n && (n == 1 || (a.moved_count() == n && a.order() == n));
    if !is_cycle {
        return Err(IctError::InvalidArgument(format!("{a} is not an {n}-cycle")));
    }
    let mut images = vec![0u8; n];
    let mut s = 0;
    for k in 0..n {
        images[s] = k as u8;
        s = a.apply0(s);
    }
    Ok(Permutation::from_raw(images))
}

/// `Γ` for the cyclic normal transversal generated by the `n`-cycle `a`:
/// the multipliers conjugated back into the pair's own numbering.
pub fn cyclic_gamma(n: usize, a: &Permutation) -> Result<PermGroup, IctError> {
    check_degree(n)?;
    let beta = standardizer(n, a)?;
    let beta_inv = beta.inverse();
    let elems: Vec<Permutation> = units(n)
        .into_iter()
        .map(|j| {
            let c = inverse_mod(j, n).expect("unit");
            multiplier(n, c).conjugate_unchecked(&beta_inv)
        })
        .collect();
    Ok(PermGroup::from_elements(n, elems)?)
}

/// Generators of the cyclic normal subgroups of `G` acting regularly, one per
/// subgroup, each the smallest generator in `G`'s element order.
pub fn cyclic_normal_transversals(pair: &PairGH) -> Vec<Permutation> {
    let n = pair.index();
    let g = pair.g();
    let mut found: Vec<(Permutation, Vec<Permutation>)> = Vec::new();
    if n < 2 {
        return Vec::new();
    }
    for a in g.elements() {
        if a.moved_count() != n || a.order() != n {
            continue;
        }
        if found.iter().any(|(_, powers)| powers.contains(a)) {
            continue;
        }
        let powers: Vec<Permutation> = (0..n).map(|k| a.pow(k)).collect();
        let normal = g
            .generators()
            .iter()
            .all(|x| powers.contains(&a.conjugate_unchecked(x)));
        if normal {
            found.push((a.clone(), powers));
        }
    }
    found.into_iter().map(|(a, _)| a).collect()
}

pub fn find_cyclic_normal_transversal(pair: &PairGH) -> Option<Permutation> {
    cyclic_normal_transversals(pair).into_iter().next()
}

fn cyclic_contributions(n: usize, h: &BigUint) -> Result<Vec<ClassContribution>, IctError> {
    let mut rows = Vec::new();
    for j in units(n) {
        let (k, t) = cyclic_fixed_and_orbit_data(n, j)?;
        let c = inverse_mod(j, n)?;
        let mut a_factors = vec![BigUint::one()];
        a_factors.extend(std::iter::repeat_n(h.clone(), k.saturating_sub(1)));
        rows.push(ClassContribution::new(
            multiplier(n, c),
            BigUint::one(),
            vec![h.clone(); t],
            a_factors,
        ));
    }
    rows.sort_by_key(|c| class_rep_key(&c.representative));
    Ok(rows)
}

fn phi(n: usize) -> BigUint {
    BigUint::from(units(n).len())
}

/// `(1/φ(n)) Σ_{(j,n)=1} h^{t_j + k_j - 1}`, in formula-only mode: the
/// hypothesis is not checked, so the report is flagged unvalidated.
pub fn ict_cyclic(n: usize, h: usize) -> Result<IctReport, IctError> {
    check_degree(n)?;
    if h == 0 {
        return Err(IctError::InvalidArgument("|H| must be positive".into()));
    }
    let h = BigUint::from(h);
    let rows = cyclic_contributions(n, &h)?;
    IctReport::assemble(Method::CyclicClosed, n, h, phi(n), rows, Justification::Family, false)
}

/// The same orbit count without the hypothesis that distinct orbits are
/// non-isomorphic. Always an upper bound on `ict`.
pub fn ict_upper_bound_cyclic(n: usize, h: usize) -> Result<BigUint, IctError> {
    Ok(cyclic_bound_report(n, h)?.value)
}

pub fn cyclic_bound_report(n: usize, h: usize) -> Result<IctReport, IctError> {
    let mut report = ict_cyclic(n, h)?;
    report.method = Method::CyclicBound;
    report.justification = Justification::Unverified;
    report.bound = true;
    Ok(report)
}

/// Element-order multiset of a subgroup: a cheap invariant that separates
/// non-isomorphic subgroup transversals.
fn order_profile(members: &[Permutation]) -> Vec<usize> {
    let mut v: Vec<usize> = members.iter().map(Permutation::order).collect();
    v.sort_unstable();
    v
}

/// Runs the cyclic formula on a concrete pair and checks its hypotheses:
/// a cyclic normal transversal exists, it is the only one (so its multipliers
/// are the whole of `Γ`), and non-generating transversals do not merge
/// `Γ`-orbits.
pub fn ict_cyclic_for_pair(pair: &PairGH, caps: &Caps) -> Result<IctReport, IctError> {
    let n = pair.index();
    let found = cyclic_normal_transversals(pair);
    let a = match found.as_slice() {
        [] => return Err(IctError::Hypothesis("no cyclic normal transversal".into())),
        [a] => a,
        _ => {
            return Err(IctError::Hypothesis(format!(
                "{} distinct cyclic normal transversals; their multipliers need not exhaust Gamma",
                found.len()
            )))
        }
    };
    let gamma = cyclic_gamma(n, a)?;
    let justification = match verify_k_equals_gamma(pair, &gamma, caps) {
        Ok(j) => j,
        Err(IctError::Group(GroupError::CapExceeded { cap: "max_relabelings", .. })) => {
            subgroup_justification(pair, caps)?
        }
        Err(e) => return Err(e),
    };
    let mut report = ict_cyclic(n, pair.h_order())?;
    report.validated = true;
    report.justification = justification;
    Ok(report)
}

/// When every non-generating transversal is a subgroup and those subgroups
/// are pairwise non-isomorphic, no isomorphism joins two `Γ`-orbits.
fn subgroup_justification(pair: &PairGH, caps: &Caps) -> Result<Justification, IctError> {
    let space = pair.space();
    let len = space.checked_len(caps)?;
    let mut profiles = Vec::new();
    for idx in 0..len {
        let t = space.transversal(idx);
        if generates(pair, &t) {
            continue;
        }
        if !t.is_subgroup() {
            return Err(IctError::Hypothesis(format!(
                "transversal #{idx} neither generates G nor is a subgroup"
            )));
        }
        profiles.push(order_profile(t.members()));
    }
    let count = profiles.len();
    profiles.sort();
    profiles.dedup();
    if profiles.len() != count {
        return Err(IctError::Hypothesis(
            "two subgroup transversals share an element-order profile".into(),
        ));
    }
    Ok(if count == 0 {
        Justification::AllTransversalsGenerate
    } else {
        Justification::NonGeneratingClassesAreOrbits
    })
}

/// Numerator of the cyclic formula, for callers that want `Σ h^{t+k-1}` alone.
pub fn cyclic_numerator(n: usize, h: usize) -> Result<BigUint, IctError> {
    let h = BigUint::from(h);
    units(n).into_iter().try_fold(BigUint::ZERO, |acc, j| {
        let (k, t) = cyclic_fixed_and_orbit_data(n, j)?;
        Ok(acc + pow(&h, (t + k).saturating_sub(1)))
    })
}
