//! Exhaustive enumeration of the congruence lattice.
//!
//! Every congruence is the join of the principal congruences it contains, so
//! the full lattice is obtained by closing the set of principal congruences
//! (plus the identity) under pairwise join. Principal congruences are
//! independent of one another and are computed in parallel when the
//! `parallel` feature is enabled; the join-closure phase mutates a shared
//! worklist and stays sequential. Results are sorted canonically (class
//! count, then label vector), so output is deterministic and identical
//! across thread counts.

use thiserror::Error;

use crate::congruence::{self, Congruence};
use crate::relations;
use crate::semigroup::InverseSemigroup;

#[cfg(feature = "parallel")]
use rayon::prelude::*;

/// Default order cap for enumeration. The symmetric inverse monoid on three
/// points (order 34) must stay enumerable; the default leaves headroom.
pub const DEFAULT_LATTICE_CAP: usize = 40;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LatticeError {
    #[error("semigroup order {order} exceeds the enumeration cap {cap}")]
    LatticeTooLarge { order: usize, cap: usize },
}

/// The set of all congruences, canonically ordered.
#[derive(Clone, Debug)]
pub struct CongruenceLattice {
    congruences: Vec<Congruence>,
}

/// All principal congruences `(a, b)*`, deduplicated, canonical order.
fn principal_congruences(s: &InverseSemigroup) -> Vec<Congruence> {
    let n = s.order();
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|a| (a + 1..n).map(move |b| (a, b)))
        .collect();

    #[cfg(feature = "parallel")]
    let mut principals: Vec<Congruence> = pairs
        .par_iter()
        .map(|&(a, b)| relations::congruence_closure(s, &[(a, b)]))
        .collect();
    #[cfg(not(feature = "parallel"))]
    let mut principals: Vec<Congruence> = pairs
        .iter()
        .map(|&(a, b)| relations::congruence_closure(s, &[(a, b)]))
        .collect();

    sort_canonical(&mut principals);
    principals.dedup();
    principals
}

fn sort_canonical(congruences: &mut [Congruence]) {
    congruences.sort_by(|x, y| {
        x.class_count()
            .cmp(&y.class_count())
            .then_with(|| x.partition().labels().cmp(y.partition().labels()))
    });
}

/// Enumerate every congruence of `s`. Errors if `s.order() > cap`.
pub fn enumerate_congruence_lattice(
    s: &InverseSemigroup,
    cap: usize,
) -> Result<CongruenceLattice, LatticeError> {
    if s.order() > cap {
        return Err(LatticeError::LatticeTooLarge {
            order: s.order(),
            cap,
        });
    }

    let mut known: std::collections::HashSet<Vec<u32>> = std::collections::HashSet::new();
    let mut all: Vec<Congruence> = Vec::new();
    let mut fresh: Vec<Congruence> = Vec::new();

    let mut push = |c: Congruence, all: &mut Vec<Congruence>, fresh: &mut Vec<Congruence>| {
        if known.insert(c.partition().labels().to_vec()) {
            all.push(c.clone());
            fresh.push(c);
        }
    };

    push(Congruence::identity(s), &mut all, &mut fresh);
    for c in principal_congruences(s) {
        push(c, &mut all, &mut fresh);
    }

    // Close under pairwise joins: join each newly discovered congruence with
    // everything known so far, until nothing new appears.
    while let Some(c) = fresh.pop() {
        let mut i = 0;
        while i < all.len() {
            let j = congruence::join(s, &c, &all[i]);
            push(j, &mut all, &mut fresh);
            i += 1;
        }
    }

    sort_canonical(&mut all);
    Ok(CongruenceLattice { congruences: all })
}

impl CongruenceLattice {
    pub fn len(&self) -> usize {
        self.congruences.len()
    }

    pub fn is_empty(&self) -> bool {
        self.congruences.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = &Congruence> {
        self.congruences.iter()
    }

    pub fn get(&self, i: usize) -> &Congruence {
        &self.congruences[i]
    }

    pub fn position(&self, c: &Congruence) -> Option<usize> {
        self.congruences.iter().position(|x| x == c)
    }

    pub fn contains(&self, c: &Congruence) -> bool {
        self.position(c).is_some()
    }

    /// Covering pairs `(i, j)`: `congruences[i] ⊂ congruences[j]` with nothing
    /// strictly between. Lexicographically ordered.
    pub fn hasse_edges(&self) -> Vec<(usize, usize)> {
        let m = self.congruences.len();
        let mut leq = vec![false; m * m];
        for i in 0..m {
            for j in 0..m {
                leq[i * m + j] = self.congruences[i].leq(&self.congruences[j]);
            }
        }
        let mut edges = Vec::new();
        for i in 0..m {
            for j in 0..m {
                if i == j || !leq[i * m + j] {
                    continue;
                }
                let covered = (0..m).any(|k| {
                    k != i && k != j && leq[i * m + k] && leq[k * m + j]
                });
                if !covered {
                    edges.push((i, j));
                }
            }
        }
        edges
    }

    /// The least congruence satisfying `pred`, if the satisfying set has a
    /// least element (returns `None` if the set is empty or has no minimum).
    pub fn least_satisfying(
        &self,
        mut pred: impl FnMut(&Congruence) -> bool,
    ) -> Option<&Congruence> {
        let satisfying: Vec<&Congruence> = self.congruences.iter().filter(|c| pred(c)).collect();
        let least = satisfying
            .iter()
            .find(|c| satisfying.iter().all(|d| c.leq(d)))?;
        Some(least)
    }
}
