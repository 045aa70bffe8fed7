//! Families of subsets used to guess which bag vertices go to the small side.
//!
//! A family `F` over a universe `U` is `(a, b)`-covering when for every pair
//! of disjoint `A, B ⊆ U` with `|A| <= a`, `|B| <= b` some member contains
//! `A` and avoids `B`. The exhaustive family (all subsets) always covers;
//! the randomized family covers with high probability.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use thiserror::Error;

use crate::graph::VertexSet;

pub const EXHAUSTIVE_LIMIT: usize = 20;
pub const COVERING_BUDGET: u64 = 10_000_000;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum FamilyError {
    #[error("universe of {size} elements is too large for the exhaustive family (limit {limit})")]
    UniverseTooLarge { size: usize, limit: usize },
    #[error("covering check exceeded its budget of {0} pairs")]
    BudgetExceeded(u64),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum FamilyKind {
    Exhaustive,
    Randomized { seed: u64, rounds: usize },
}

#[derive(Clone, Debug)]
pub struct SetFamily {
    universe: VertexSet,
    members: Vec<VertexSet>,
    kind: FamilyKind,
}

impl SetFamily {
    /// Every subset of `universe`.
    pub fn exhaustive(universe: VertexSet) -> Result<SetFamily, FamilyError> {
        if universe.len() > EXHAUSTIVE_LIMIT {
            return Err(FamilyError::UniverseTooLarge { size: universe.len(), limit: EXHAUSTIVE_LIMIT });
        }
        Ok(SetFamily {
            universe,
            members: universe.subsets_up_to(universe.len()).collect(),
            kind: FamilyKind::Exhaustive,
        })
    }

    /// `rounds` random subsets (each element kept with probability 1/2)
    /// followed by the empty set.
    pub fn randomized(universe: VertexSet, seed: u64, rounds: usize) -> SetFamily {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut members: Vec<VertexSet> =
            (0..rounds).map(|_| universe.iter().filter(|_| rng.gen_bool(0.5)).collect()).collect();
        members.push(VertexSet::empty());
        SetFamily { universe, members, kind: FamilyKind::Randomized { seed, rounds } }
    }

    pub fn universe(&self) -> VertexSet {
        self.universe
    }

    pub fn members(&self) -> &[VertexSet] {
        &self.members
    }

    pub fn kind(&self) -> FamilyKind {
        self.kind
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }
}

/// Number of random rounds after which a family over `universe_size`
/// elements fails to be `(a, b)`-covering with probability below `e^-2`.
///
/// With `m = min(|U|, a + b)`, one random set separates a fixed pair with
/// probability at least `2^-m` and there are at most `|U|^m` pairs, so
/// `2^m (m ln |U| + 2)` rounds suffice by a union bound.
pub fn default_rounds(universe_size: usize, a: usize, b: usize) -> usize {
    let m = universe_size.min(a + b);
    if universe_size == 0 {
        return 1;
    }
    let per_pair = (1u64 << m) as f64;
    (per_pair * (m as f64 * (universe_size as f64).ln() + 2.0)).ceil() as usize
}

pub fn build_randomized(universe: VertexSet, a: usize, b: usize, seed: u64) -> SetFamily {
    SetFamily::randomized(universe, seed, default_rounds(universe.len(), a, b))
}

/// Returns the first pair `(A, B)` the family fails to separate, or `None`
/// when it is `(a, b)`-covering.
///
/// Pairs are visited with `A` by increasing size, then `B` by increasing size.
pub fn verify_covering(family: &SetFamily, a: usize, b: usize) -> Result<Option<(VertexSet, VertexSet)>, FamilyError> {
    let universe = family.universe();
    let mut pairs = 0u64;
    for side_a in universe.subsets_up_to(a) {
        let containing: Vec<VertexSet> = family.members().iter().copied().filter(|m| side_a.is_subset(*m)).collect();
        for side_b in (universe - side_a).subsets_up_to(b) {
            pairs += 1;
            if pairs > COVERING_BUDGET {
                return Err(FamilyError::BudgetExceeded(COVERING_BUDGET));
            }
            if !containing.iter().any(|m| m.is_disjoint(side_b)) {
                return Ok(Some((side_a, side_b)));
            }
        }
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn exhaustive_covers() {
        let u = VertexSet::full(6);
        let f = SetFamily::exhaustive(u).unwrap();
        assert_eq!(f.len(), 64);
        assert_eq!(verify_covering(&f, 3, 3).unwrap(), None);
        assert!(matches!(
            SetFamily::exhaustive(VertexSet::full(21)),
            Err(FamilyError::UniverseTooLarge { size: 21, .. })
        ));
    }

    #[test]
    fn missing_member_is_reported() {
        let u = VertexSet::full(2);
        let f = SetFamily {
            universe: u,
            members: vec![VertexSet::empty(), VertexSet::full(2)],
            kind: FamilyKind::Exhaustive,
        };
        // nothing contains {0} while avoiding {1}
        assert_eq!(verify_covering(&f, 1, 1).unwrap(), Some((VertexSet::singleton(0), VertexSet::singleton(1))));
    }

    #[test]
    fn randomized_is_deterministic() {
        let u = VertexSet::full(8);
        let x = SetFamily::randomized(u, 5, 40);
        let y = SetFamily::randomized(u, 5, 40);
        assert_eq!(x.members(), y.members());
        assert_eq!(x.len(), 41);
        assert!(x.members().iter().all(|m| m.is_subset(u)));
        assert_ne!(SetFamily::randomized(u, 6, 40).members(), x.members());
    }

    #[test]
    fn default_rounds_cover_small_universes() {
        let u = VertexSet::full(7);
        let f = build_randomized(u, 2, 2, 1);
        assert_eq!(f.kind(), FamilyKind::Randomized { seed: 1, rounds: default_rounds(7, 2, 2) });
        assert_eq!(verify_covering(&f, 2, 2).unwrap(), None);
    }
}
