//! Green's relations, the two compatibility relations used by the minimum
//! trace/kernel operators, and congruence closure.
//!
//! On an inverse semigroup Green's L, R and H have first-order descriptions:
//! `a L b` iff `a⁻¹a = b⁻¹b`, `a R b` iff `aa⁻¹ = bb⁻¹`, and `H = L ∧ R`.
//! The two auxiliary relations
//!
//! * `a F b` iff `a⁻¹b` is idempotent,
//! * `a C b` iff both `a⁻¹b` and `ab⁻¹` are idempotent,
//!
//! are reflexive and symmetric but not transitive in general, so they are
//! exposed as pair predicates/sets rather than partitions. Their role: the
//! least congruence containing `ρ ∩ F` (equivalently `ρ ∩ C`) is the minimum
//! congruence with the same trace as `ρ`, and `ρ ∩ L` / `ρ ∩ R` play the same
//! role for the kernel.

use crate::congruence::Congruence;
use crate::partition::{DisjointSets, Partition};
use crate::semigroup::InverseSemigroup;

/// `a L b` iff `a⁻¹a = b⁻¹b`.
pub fn green_l(s: &InverseSemigroup) -> Partition {
    let raw: Vec<usize> = (0..s.order()).map(|a| s.mul(s.inv(a), a)).collect();
    Partition::from_labels(&raw)
}

/// `a R b` iff `aa⁻¹ = bb⁻¹`.
pub fn green_r(s: &InverseSemigroup) -> Partition {
    let raw: Vec<usize> = (0..s.order()).map(|a| s.mul(a, s.inv(a))).collect();
    Partition::from_labels(&raw)
}

/// `H = L ∧ R`.
pub fn green_h(s: &InverseSemigroup) -> Partition {
    green_l(s).meet(&green_r(s))
}

/// Is `(a, b)` in the relation F, i.e. is `a⁻¹b` idempotent?
#[inline]
pub fn related_f(s: &InverseSemigroup, a: usize, b: usize) -> bool {
    s.is_idempotent(s.mul(s.inv(a), b))
}

/// Is `(a, b)` in the relation C, i.e. are both `a⁻¹b` and `ab⁻¹` idempotent?
#[inline]
pub fn related_c(s: &InverseSemigroup, a: usize, b: usize) -> bool {
    s.is_idempotent(s.mul(s.inv(a), b)) && s.is_idempotent(s.mul(a, s.inv(b)))
}

/// A symmetric reflexive set of pairs on `0..n`, stored densely.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct PairSet {
    n: usize,
    bits: Vec<bool>,
}

impl PairSet {
    pub fn from_predicate(n: usize, mut pred: impl FnMut(usize, usize) -> bool) -> Self {
        let mut bits = vec![false; n * n];
        for a in 0..n {
            for b in 0..n {
                bits[a * n + b] = pred(a, b);
            }
        }
        PairSet { n, bits }
    }

    #[inline]
    pub fn contains(&self, a: usize, b: usize) -> bool {
        self.bits[a * self.n + b]
    }

    pub fn len(&self) -> usize {
        self.bits.iter().filter(|&&b| b).count()
    }

    pub fn is_empty(&self) -> bool {
        !self.bits.iter().any(|&b| b)
    }

    /// All related pairs `(a, b)` with `a < b`, in lexicographic order.
    pub fn pairs(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for a in 0..self.n {
            for b in a + 1..self.n {
                if self.contains(a, b) {
                    out.push((a, b));
                }
            }
        }
        out
    }

    pub fn is_reflexive(&self) -> bool {
        (0..self.n).all(|a| self.contains(a, a))
    }

    pub fn is_symmetric(&self) -> bool {
        (0..self.n).all(|a| (0..self.n).all(|b| self.contains(a, b) == self.contains(b, a)))
    }

    pub fn is_transitive(&self) -> bool {
        for a in 0..self.n {
            for b in 0..self.n {
                if !self.contains(a, b) {
                    continue;
                }
                for c in 0..self.n {
                    if self.contains(b, c) && !self.contains(a, c) {
                        return false;
                    }
                }
            }
        }
        true
    }
}

/// The relation F as a pair set.
pub fn relation_f(s: &InverseSemigroup) -> PairSet {
    PairSet::from_predicate(s.order(), |a, b| related_f(s, a, b))
}

/// The relation C as a pair set.
pub fn relation_c(s: &InverseSemigroup) -> PairSet {
    PairSet::from_predicate(s.order(), |a, b| related_c(s, a, b))
}

/// Is the partition compatible with multiplication on both sides?
pub fn is_congruence(s: &InverseSemigroup, p: &Partition) -> bool {
    assert_eq!(p.len(), s.order());
    for class in p.classes() {
        let rep = class[0];
        for &a in &class[1..] {
            for x in 0..s.order() {
                if !p.same(s.mul(x, a), s.mul(x, rep)) || !p.same(s.mul(a, x), s.mul(rep, x)) {
                    return false;
                }
            }
        }
    }
    true
}

/// Least congruence containing the given pairs.
///
/// Worklist closure: seed a union-find with the pairs; every time two classes
/// merge, enqueue the merged pair and propagate products `(xa, xb)` and
/// `(ax, bx)` for every `x`. Each merge event is processed once, so the work
/// is `O(order · merges · α)` plus the initial seeding.
pub fn congruence_closure(s: &InverseSemigroup, pairs: &[(usize, usize)]) -> Congruence {
    let n = s.order();
    let mut dsu = DisjointSets::new(n);
    let mut queue: std::collections::VecDeque<(usize, usize)> = std::collections::VecDeque::new();
    for &(a, b) in pairs {
        if dsu.union(a, b) {
            queue.push_back((a, b));
        }
    }
    while let Some((a, b)) = queue.pop_front() {
        for x in 0..n {
            let (xa, xb) = (s.mul(x, a), s.mul(x, b));
            if dsu.union(xa, xb) {
                queue.push_back((xa, xb));
            }
            let (ax, bx) = (s.mul(a, x), s.mul(b, x));
            if dsu.union(ax, bx) {
                queue.push_back((ax, bx));
            }
        }
    }
    let partition = Partition::from_dsu(&mut dsu);
    debug_assert!(is_congruence(s, &partition));
    Congruence::from_partition_unchecked(s, partition)
}
