//! Permutations of `{1..n}` stored as image tables.
//!
//! Symbols are 1-based on every public surface. Internally images are kept
//! 0-based in a `u8` table, which bounds the degree at 255.
//!
//! Composition follows the coset-action convention `χ(g)(xH) = gxH`:
//! `p.compose(&q)` applies `q` first, then `p`.

use std::fmt;

use thiserror::Error;

/// Largest degree a [`Permutation`] can carry.
pub const MAX_DEGREE: usize = u8::MAX as usize;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PermError {
    #[error("permutation degree must be at least 1")]
    ZeroDegree,
    #[error("degree {0} exceeds the supported maximum {MAX_DEGREE}")]
    DegreeTooLarge(usize),
    #[error("degree mismatch: {left} vs {right}")]
    DegreeMismatch { left: usize, right: usize },
    #[error("image table is not a bijection of 1..={0}")]
    NotBijection(usize),
    #[error("domain is not invariant under the permutation (symbol {0} leaves it)")]
    NotInvariant(usize),
    #[error("symbol {symbol} outside 1..={degree}")]
    SymbolOutOfRange { symbol: usize, degree: usize },
    #[error("cannot parse cycle notation {input:?}: {reason}")]
    Parse { input: String, reason: String },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Parity {
    Even,
    Odd,
}

impl Parity {
    pub fn sign(self) -> i8 {
        match self {
            Parity::Even => 1,
            Parity::Odd => -1,
        }
    }

    pub fn combine(self, other: Parity) -> Parity {
        if self == other {
            Parity::Even
        } else {
            Parity::Odd
        }
    }
}

/// A bijection of `{1..n}`.
///
/// The derived ordering compares image tables lexicographically; groups use
/// it to keep their element lists sorted.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Vec<u8>,
}

impl Permutation {
    pub fn identity(degree: usize) -> Result<Self, PermError> {
        check_degree(degree)?;
        Ok(Self {
            images: (0..degree as u8).collect(),
        })
    }

    /// Builds a permutation from 1-based images: `images[i - 1]` is the image of `i`.
    pub fn from_images(images: &[usize]) -> Result<Self, PermError> {
        let n = images.len();
        check_degree(n)?;
        let mut seen = vec![false; n];
        let mut table = Vec::with_capacity(n);
        for &img in images {
            if img == 0 || img > n || seen[img - 1] {
                return Err(PermError::NotBijection(n));
            }
            seen[img - 1] = true;
            table.push((img - 1) as u8);
        }
        Ok(Self { images: table })
    }

    /// Builds a permutation of the given degree from disjoint 1-based cycles.
    pub fn from_cycles(degree: usize, cycles: &[Vec<usize>]) -> Result<Self, PermError> {
        let mut p = Self::identity(degree)?;
        let mut touched = vec![false; degree];
        for cycle in cycles {
            for &s in cycle {
                if s == 0 || s > degree {
                    return Err(PermError::SymbolOutOfRange { symbol: s, degree });
                }
                if touched[s - 1] {
                    return Err(PermError::NotBijection(degree));
                }
                touched[s - 1] = true;
            }
            for w in 0..cycle.len() {
                let from = cycle[w] - 1;
                let to = cycle[(w + 1) % cycle.len()] - 1;
                p.images[from] = to as u8;
            }
        }
        Ok(p)
    }

    /// 0-based constructor for internal hot loops. The caller guarantees a bijection.
    pub(crate) fn from_raw(images: Vec<u8>) -> Self {
        debug_assert!(is_bijection(&images));
        Self { images }
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    /// Image of the 1-based symbol `i`.
    pub fn apply(&self, i: usize) -> usize {
        self.images[i - 1] as usize + 1
    }

    #[inline]
    pub(crate) fn apply0(&self, i: usize) -> usize {
        self.images[i] as usize
    }

    /// 1-based image table.
    pub fn images(&self) -> Vec<usize> {
        self.images.iter().map(|&v| v as usize + 1).collect()
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &v)| i == v as usize)
    }

    /// `self ∘ other`: apply `other` first, then `self`.
    pub fn compose(&self, other: &Permutation) -> Result<Permutation, PermError> {
        if self.degree() != other.degree() {
            return Err(PermError::DegreeMismatch {
                left: self.degree(),
                right: other.degree(),
            });
        }
        Ok(self.compose_unchecked(other))
    }

    #[inline]
    pub(crate) fn compose_unchecked(&self, other: &Permutation) -> Permutation {
        debug_assert_eq!(self.degree(), other.degree());
        Permutation {
            images: other.images.iter().map(|&j| self.images[j as usize]).collect(),
        }
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0u8; self.images.len()];
        for (i, &v) in self.images.iter().enumerate() {
            inv[v as usize] = i as u8;
        }
        Permutation { images: inv }
    }

    /// `alpha ∘ self ∘ alpha⁻¹`.
    pub fn conjugate_by(&self, alpha: &Permutation) -> Result<Permutation, PermError> {
        if self.degree() != alpha.degree() {
            return Err(PermError::DegreeMismatch {
                left: self.degree(),
                right: alpha.degree(),
            });
        }
        Ok(self.conjugate_unchecked(alpha))
    }

    /// `alpha ∘ self ∘ alpha⁻¹` without building the inverse: sends `alpha(i)` to `alpha(self(i))`.
    #[inline]
    pub(crate) fn conjugate_unchecked(&self, alpha: &Permutation) -> Permutation {
        let mut out = vec![0u8; self.images.len()];
        for (i, &v) in self.images.iter().enumerate() {
            out[alpha.images[i] as usize] = alpha.images[v as usize];
        }
        Permutation { images: out }
    }

    pub fn pow(&self, exp: usize) -> Permutation {
        let mut out: Vec<u8> = Vec::with_capacity(self.images.len());
        for i in 0..self.images.len() {
            let mut j = i;
            // Walk only the cycle through i, reduced mod its length.
            let len = self.cycle_len_from(i);
            for _ in 0..exp % len {
                j = self.images[j] as usize;
            }
            out.push(j as u8);
        }
        Permutation { images: out }
    }

    fn cycle_len_from(&self, i: usize) -> usize {
        let mut len = 1;
        let mut j = self.images[i] as usize;
        while j != i {
            j = self.images[j] as usize;
            len += 1;
        }
        len
    }

    pub fn order(&self) -> usize {
        self.orbits()
            .iter()
            .map(Vec::len)
            .fold(1, num_integer::lcm)
    }

    /// The cycle partition of `{1..n}`, each orbit sorted, orbits ordered by
    /// their smallest symbol. Fixed points come out as singletons.
    pub fn orbits(&self) -> Vec<Vec<usize>> {
        let n = self.images.len();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut orbit = Vec::new();
            let mut j = start;
            while !seen[j] {
                seen[j] = true;
                orbit.push(j + 1);
                j = self.images[j] as usize;
            }
            orbit.sort_unstable();
            out.push(orbit);
        }
        out
    }

    /// Non-trivial cycles in canonical form: each starts at its smallest
    /// symbol, cycles ordered by that symbol.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let n = self.images.len();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for start in 0..n {
            if seen[start] || self.images[start] as usize == start {
                continue;
            }
            let mut cycle = Vec::new();
            let mut j = start;
            while !seen[j] {
                seen[j] = true;
                cycle.push(j + 1);
                j = self.images[j] as usize;
            }
            out.push(cycle);
        }
        out
    }

    pub fn fixed_points(&self) -> Vec<usize> {
        (0..self.images.len())
            .filter(|&i| self.images[i] as usize == i)
            .map(|i| i + 1)
            .collect()
    }

    pub fn moved_count(&self) -> usize {
        self.images
            .iter()
            .enumerate()
            .filter(|&(i, &v)| i != v as usize)
            .count()
    }

    pub fn parity(&self) -> Parity {
        let transpositions: usize = self.cycles().iter().map(|c| c.len() - 1).sum();
        if transpositions.is_multiple_of(2) {
            Parity::Even
        } else {
            Parity::Odd
        }
    }

    /// Cycle type of `self` restricted to `domain` (1-based symbols).
    pub fn cycle_type(&self, domain: &[usize]) -> Result<CycleType, PermError> {
        let n = self.degree();
        let mut inside = vec![false; n];
        for &s in domain {
            if s == 0 || s > n {
                return Err(PermError::SymbolOutOfRange { symbol: s, degree: n });
            }
            inside[s - 1] = true;
        }
        for &s in domain {
            let img = self.apply(s);
            if !inside[img - 1] {
                return Err(PermError::NotInvariant(s));
            }
        }
        let mut seen = vec![false; n];
        let mut lengths = Vec::new();
        let mut fixed = 0;
        for &s in domain {
            let s0 = s - 1;
            if seen[s0] {
                continue;
            }
            let mut len = 0;
            let mut j = s0;
            while !seen[j] {
                seen[j] = true;
                len += 1;
                j = self.images[j] as usize;
            }
            if len == 1 {
                fixed += 1;
            } else {
                lengths.push(len);
            }
        }
        Ok(CycleType::from_lengths(
            domain.iter().collect::<std::collections::BTreeSet<_>>().len(),
            &lengths,
            fixed,
        ))
    }

    /// Cycle type on the whole of `{1..n}`.
    pub fn full_cycle_type(&self) -> CycleType {
        let lengths: Vec<usize> = self.cycles().iter().map(Vec::len).collect();
        let fixed = self.degree() - lengths.iter().sum::<usize>();
        CycleType::from_lengths(self.degree(), &lengths, fixed)
    }

    /// Parses cycle notation such as `"(2,3)(4,5)"` or `"()"`. Whitespace is ignored.
    pub fn parse_cycles(input: &str, degree: usize) -> Result<Permutation, PermError> {
        let cycles = parse_cycle_list(input)?;
        Permutation::from_cycles(degree, &cycles)
    }

    /// Largest symbol mentioned in a cycle-notation string (0 for `"()"`).
    pub fn max_symbol(input: &str) -> Result<usize, PermError> {
        Ok(parse_cycle_list(input)?
            .iter()
            .flatten()
            .copied()
            .max()
            .unwrap_or(0))
    }
}

fn check_degree(n: usize) -> Result<(), PermError> {
    if n == 0 {
        Err(PermError::ZeroDegree)
    } else if n > MAX_DEGREE {
        Err(PermError::DegreeTooLarge(n))
    } else {
        Ok(())
    }
}

fn is_bijection(images: &[u8]) -> bool {
    let mut seen = vec![false; images.len()];
    images.iter().all(|&v| {
        let v = v as usize;
        v < seen.len() && !std::mem::replace(&mut seen[v], true)
    })
}

fn parse_cycle_list(input: &str) -> Result<Vec<Vec<usize>>, PermError> {
    let err = |reason: &str| PermError::Parse {
        input: input.to_string(),
        reason: reason.to_string(),
    };
    let compact: String = input.chars().filter(|c| !c.is_whitespace()).collect();
    if compact.is_empty() {
        return Err(err("empty input"));
    }
    let mut cycles = Vec::new();
    let mut rest = compact.as_str();
    while !rest.is_empty() {
        let body_end = rest
            .strip_prefix('(')
            .and_then(|r| r.find(')'))
            .ok_or_else(|| err("expected a parenthesised cycle"))?;
        let body = &rest[1..=body_end];
        rest = &rest[body_end + 2..];
        if body.is_empty() {
            continue;
        }
        let cycle = body
            .split(',')
            .map(|tok| tok.parse::<usize>().map_err(|_| err("bad symbol")))
            .collect::<Result<Vec<_>, _>>()?;
        if cycle.contains(&0) {
            return Err(err("symbols are 1-based"));
        }
        if cycle.len() > 1 {
            cycles.push(cycle);
        }
    }
    Ok(cycles)
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return f.write_str("()");
        }
        for cycle in cycles {
            f.write_str("(")?;
            for (k, s) in cycle.iter().enumerate() {
                if k > 0 {
                    f.write_str(",")?;
                }
                write!(f, "{s}")?;
            }
            f.write_str(")")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}[{}]", self.degree())
    }
}

/// Cycle structure of a permutation on an invariant set: `(length, multiplicity)`
/// pairs for lengths > 1, plus the number of fixed points.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CycleType {
    degree: usize,
    /// Distinct lengths > 1, descending.
    cycles: Vec<(usize, usize)>,
    fixed_points: usize,
}

impl CycleType {
    pub fn from_lengths(degree: usize, lengths: &[usize], fixed_points: usize) -> Self {
        let mut counts = std::collections::BTreeMap::new();
        for &l in lengths.iter().filter(|&&l| l > 1) {
            *counts.entry(l).or_insert(0usize) += 1;
        }
        let fixed_points = fixed_points + lengths.iter().filter(|&&l| l == 1).count();
        let cycles: Vec<_> = counts.into_iter().rev().collect();
        debug_assert_eq!(
            cycles.iter().map(|(l, m)| l * m).sum::<usize>() + fixed_points,
            degree
        );
        Self {
            degree,
            cycles,
            fixed_points,
        }
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    /// `(length, multiplicity)` for every length > 1, longest first.
    pub fn cycles(&self) -> &[(usize, usize)] {
        &self.cycles
    }

    /// Number of fixed points (the `k` of the class tables).
    pub fn fixed_points(&self) -> usize {
        self.fixed_points
    }

    /// Number of orbits of length > 1 (the `t` of the class tables).
    pub fn nontrivial_orbits(&self) -> usize {
        self.cycles.iter().map(|&(_, m)| m).sum()
    }

    /// Cycle lengths > 1 as a non-increasing list.
    pub fn moved_parts(&self) -> Vec<usize> {
        self.cycles
            .iter()
            .flat_map(|&(l, m)| std::iter::repeat_n(l, m))
            .collect()
    }
}
