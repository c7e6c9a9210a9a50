//! Congruences on an inverse semigroup, their kernel/trace data, and the
//! extremal operators on both coordinates.
//!
//! For a congruence `ρ`:
//!
//! * the **trace** is the restriction of `ρ` to the idempotents;
//! * the **kernel** is the union of the `ρ`-classes containing an idempotent.
//!
//! A congruence is determined by the pair (trace, kernel): `a ρ b` iff
//! `a⁻¹a` and `b⁻¹b` are trace-related and `ab⁻¹` lies in the kernel
//! ([`reconstruct`] rebuilds `ρ` from the pair and rejects incompatible
//! input). Fixing one coordinate and extremizing the other yields four
//! operators:
//!
//! * [`min_trace`] — least congruence with the same trace (computed as the
//!   closure of `ρ ∩ F`, checked against the closure of `ρ ∩ C`);
//! * [`min_kernel`] — least congruence with the same kernel (closure of
//!   `ρ ∩ L`, checked against `ρ ∩ R`);
//! * [`max_trace`] — greatest congruence with the same trace, via the
//!   conjugation formula `a ρᵀ b ⟺ (∀e idempotent) a⁻¹ea ρ b⁻¹eb`;
//! * [`max_kernel`] — greatest congruence with the same kernel, obtained by
//!   joining every congruence in an enumerated lattice with that kernel
//!   (no closed-form description is available on this coordinate).
//!
//! The classical special congruences are all instances: the least group
//! congruence is `min_trace(ω)`, the least semilattice congruence is
//! `min_kernel(ω)`, the greatest idempotent-separating congruence is
//! `max_trace(ε)`, and the greatest idempotent-pure congruence is computed
//! directly as the syntactic congruence of the idempotent set.

use thiserror::Error;

use crate::partition::Partition;
use crate::relations::{self, related_c, related_f};
use crate::semigroup::InverseSemigroup;

/// A congruence: a multiplication-compatible partition, with its kernel and
/// trace precomputed. Equality and ordering compare the partitions.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Congruence {
    partition: Partition,
    kernel: Vec<usize>,
    kernel_mask: Vec<bool>,
    /// Partition of the idempotent list (positions follow `idempotents()`).
    trace: Partition,
}

/// Error from [`Congruence::from_partition`].
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("partition is not compatible with multiplication")]
pub struct NotACongruence;

/// Error from [`reconstruct`]: the (trace, kernel) pair does not describe a
/// congruence of the given semigroup.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ReconstructError {
    #[error("kernel must contain every idempotent")]
    KernelNotFull,
    #[error("kernel element {element} out of range")]
    KernelOutOfRange { element: usize },
    #[error("trace partition has wrong size: expected {expected}, found {found}")]
    TraceSizeMismatch { expected: usize, found: usize },
    #[error("pair (trace, kernel) is incompatible: derived relation is not a congruence with that trace and kernel")]
    IncompatiblePair,
}

impl Congruence {
    /// Wrap a compatible partition, validating compatibility.
    pub fn from_partition(
        s: &InverseSemigroup,
        partition: Partition,
    ) -> Result<Self, NotACongruence> {
        if !relations::is_congruence(s, &partition) {
            return Err(NotACongruence);
        }
        Ok(Self::from_partition_unchecked(s, partition))
    }

    /// Wrap a partition known to be compatible (checked in debug builds).
    pub(crate) fn from_partition_unchecked(s: &InverseSemigroup, partition: Partition) -> Self {
        debug_assert!(relations::is_congruence(s, &partition));
        let mut class_has_idempotent = vec![false; partition.class_count()];
        for &e in s.idempotents() {
            class_has_idempotent[partition.label_of(e)] = true;
        }
        let kernel_mask: Vec<bool> = (0..s.order())
            .map(|a| class_has_idempotent[partition.label_of(a)])
            .collect();
        let kernel: Vec<usize> = (0..s.order()).filter(|&a| kernel_mask[a]).collect();
        let trace = partition.restrict(s.idempotents());
        Congruence {
            partition,
            kernel,
            kernel_mask,
            trace,
        }
    }

    /// The identity congruence ε (all classes singletons).
    pub fn identity(s: &InverseSemigroup) -> Self {
        Self::from_partition_unchecked(s, Partition::singletons(s.order()))
    }

    /// The universal congruence ω (one class).
    pub fn universal(s: &InverseSemigroup) -> Self {
        Self::from_partition_unchecked(s, Partition::universal(s.order()))
    }

    pub fn partition(&self) -> &Partition {
        &self.partition
    }

    #[inline]
    pub fn same(&self, a: usize, b: usize) -> bool {
        self.partition.same(a, b)
    }

    pub fn class_count(&self) -> usize {
        self.partition.class_count()
    }

    /// Elements whose class contains an idempotent, ascending.
    pub fn kernel(&self) -> &[usize] {
        &self.kernel
    }

    #[inline]
    pub fn kernel_contains(&self, a: usize) -> bool {
        self.kernel_mask[a]
    }

    /// The trace as a partition of the idempotent *positions*: entry `i`
    /// refers to `s.idempotents()[i]`.
    pub fn trace(&self) -> &Partition {
        &self.trace
    }

    /// Inclusion of congruences: is every `self`-class inside an `other`-class?
    pub fn leq(&self, other: &Congruence) -> bool {
        self.partition.refines(&other.partition)
    }

    pub fn is_identity(&self) -> bool {
        self.partition.is_singletons()
    }

    pub fn is_universal(&self) -> bool {
        self.partition.is_universal()
    }

    /// Does the congruence separate idempotents (trivial trace)?
    pub fn is_idempotent_separating(&self) -> bool {
        self.trace.is_singletons()
    }

    /// Is every element related to an idempotent itself idempotent
    /// (kernel = idempotents)?
    pub fn is_idempotent_pure(&self, s: &InverseSemigroup) -> bool {
        self.kernel.len() == s.idempotents().len()
    }
}

/// Rebuild a congruence from a (trace, kernel) pair.
///
/// `trace` partitions the positions of `s.idempotents()`; `kernel` lists
/// elements. The derived relation is `a ≈ b` iff `a⁻¹a` and `b⁻¹b` are
/// trace-related and `ab⁻¹` is in the kernel. Errors if the pair is not the
/// kernel/trace data of an actual congruence.
pub fn reconstruct(
    s: &InverseSemigroup,
    trace: &Partition,
    kernel: &[usize],
) -> Result<Congruence, ReconstructError> {
    let n = s.order();
    if trace.len() != s.idempotents().len() {
        return Err(ReconstructError::TraceSizeMismatch {
            expected: s.idempotents().len(),
            found: trace.len(),
        });
    }
    let mut kernel_mask = vec![false; n];
    for &k in kernel {
        if k >= n {
            return Err(ReconstructError::KernelOutOfRange { element: k });
        }
        kernel_mask[k] = true;
    }
    if !s.idempotents().iter().all(|&e| kernel_mask[e]) {
        return Err(ReconstructError::KernelNotFull);
    }

    // Position of each element's domain idempotent within the idempotent list.
    let domain_pos: Vec<usize> = (0..n)
        .map(|a| s.idempotent_position(s.mul(s.inv(a), a)))
        .collect();
    let related = |a: usize, b: usize| {
        trace.same(domain_pos[a], domain_pos[b]) && kernel_mask[s.mul(a, s.inv(b))]
    };

    // The relation must be an equivalence; reflexivity holds because traces
    // are reflexive and aa⁻¹ is idempotent, but symmetry/transitivity can
    // fail for arbitrary pairs, so check.
    let mut labels = vec![usize::MAX; n];
    let mut next = 0usize;
    for a in 0..n {
        if labels[a] != usize::MAX {
            continue;
        }
        labels[a] = next;
        for (b, label) in labels.iter_mut().enumerate().skip(a + 1) {
            if related(a, b) {
                if *label != usize::MAX {
                    return Err(ReconstructError::IncompatiblePair);
                }
                *label = next;
            }
        }
        next += 1;
    }
    let partition = Partition::from_labels(&labels);
    // Verify the labelling really matches the relation (transitivity) and
    // that it is compatible with multiplication.
    for a in 0..n {
        for b in 0..n {
            if partition.same(a, b) != related(a, b) {
                return Err(ReconstructError::IncompatiblePair);
            }
        }
    }
    if !relations::is_congruence(s, &partition) {
        return Err(ReconstructError::IncompatiblePair);
    }
    let out = Congruence::from_partition_unchecked(s, partition);
    if out.trace() != trace {
        return Err(ReconstructError::IncompatiblePair);
    }
    let mut given: Vec<usize> = kernel.to_vec();
    given.sort_unstable();
    given.dedup();
    if out.kernel() != given.as_slice() {
        return Err(ReconstructError::IncompatiblePair);
    }
    Ok(out)
}

/// Quotient semigroup `s/ρ` plus the projection map element → class index.
/// Classes are indexed in canonical label order, so the construction is
/// deterministic.
pub fn quotient(s: &InverseSemigroup, rho: &Congruence) -> (InverseSemigroup, Vec<usize>) {
    let p = rho.partition();
    let classes = p.classes();
    let proj: Vec<usize> = (0..s.order()).map(|a| p.label_of(a)).collect();
    let rows: Vec<Vec<usize>> = classes
        .iter()
        .map(|ca| {
            classes
                .iter()
                .map(|cb| proj[s.mul(ca[0], cb[0])])
                .collect()
        })
        .collect();
    let q = InverseSemigroup::from_table(classes.len(), &rows)
        .expect("quotient of an inverse semigroup is an inverse semigroup");
    (q, proj)
}

/// Pull a congruence on the quotient back along the projection map.
pub fn pullback(
    s: &InverseSemigroup,
    proj: &[usize],
    theta_on_quotient: &Congruence,
) -> Congruence {
    let raw: Vec<usize> = (0..s.order())
        .map(|a| theta_on_quotient.partition().label_of(proj[a]))
        .collect();
    Congruence::from_partition_unchecked(s, Partition::from_labels(&raw))
}

/// Pairs of `rho` that also satisfy `pred`, as closure seeds.
fn filtered_pairs(
    rho: &Congruence,
    mut pred: impl FnMut(usize, usize) -> bool,
) -> Vec<(usize, usize)> {
    let mut pairs = Vec::new();
    for class in rho.partition().classes() {
        for (i, &a) in class.iter().enumerate() {
            for &b in &class[i + 1..] {
                if pred(a, b) {
                    pairs.push((a, b));
                }
            }
        }
    }
    pairs
}

/// Least congruence with the same trace as `rho`: the closure of `ρ ∩ F`.
/// The closure of `ρ ∩ C` is computed as well and asserted equal — the two
/// routes are interchangeable and this keeps the implementation honest.
pub fn min_trace(s: &InverseSemigroup, rho: &Congruence) -> Congruence {
    let via_f = relations::congruence_closure(s, &filtered_pairs(rho, |a, b| related_f(s, a, b)));
    let via_c = relations::congruence_closure(s, &filtered_pairs(rho, |a, b| related_c(s, a, b)));
    assert_eq!(
        via_f, via_c,
        "closures of ρ∩F and ρ∩C disagree — implementation bug"
    );
    via_f
}

/// Least congruence with the same kernel as `rho`: the closure of `ρ ∩ L`,
/// asserted equal to the closure of `ρ ∩ R`.
pub fn min_kernel(s: &InverseSemigroup, rho: &Congruence) -> Congruence {
    let l = relations::green_l(s);
    let r = relations::green_r(s);
    let via_l = relations::congruence_closure(s, &filtered_pairs(rho, |a, b| l.same(a, b)));
    let via_r = relations::congruence_closure(s, &filtered_pairs(rho, |a, b| r.same(a, b)));
    assert_eq!(
        via_l, via_r,
        "closures of ρ∩L and ρ∩R disagree — implementation bug"
    );
    via_l
}

/// Greatest congruence with the same trace as `rho`:
/// `a ρᵀ b` iff `a⁻¹ea ρ b⁻¹eb` for every idempotent `e`.
///
/// The defining formula groups elements by the vector of `ρ`-classes of
/// their idempotent conjugates, so the relation is an equivalence by
/// construction; compatibility and trace preservation are asserted.
pub fn max_trace(s: &InverseSemigroup, rho: &Congruence) -> Congruence {
    let n = s.order();
    let mut signatures: Vec<Vec<u32>> = Vec::with_capacity(n);
    for a in 0..n {
        let ai = s.inv(a);
        let sig: Vec<u32> = s
            .idempotents()
            .iter()
            .map(|&e| rho.partition().label_of(s.mul(s.mul(ai, e), a)) as u32)
            .collect();
        signatures.push(sig);
    }
    let mut lookup: std::collections::HashMap<&[u32], usize> = std::collections::HashMap::new();
    let mut raw = Vec::with_capacity(n);
    let mut next = 0usize;
    for sig in &signatures {
        let l = *lookup.entry(sig.as_slice()).or_insert_with(|| {
            let l = next;
            next += 1;
            l
        });
        raw.push(l);
    }
    let partition = Partition::from_labels(&raw);
    assert!(
        relations::is_congruence(s, &partition),
        "conjugation relation must be a congruence"
    );
    let out = Congruence::from_partition_unchecked(s, partition);
    assert_eq!(out.trace(), rho.trace(), "max_trace must preserve the trace");
    assert!(rho.leq(&out), "max_trace must contain its argument");
    out
}

/// Greatest congruence with the same kernel as `rho`: the join of every
/// enumerated congruence whose kernel equals `ker ρ`. Requires the full
/// lattice — there is no conjugation-style formula on the kernel coordinate.
pub fn max_kernel(
    s: &InverseSemigroup,
    rho: &Congruence,
    lattice: &crate::lattice::CongruenceLattice,
) -> Congruence {
    let mut acc = rho.clone();
    for theta in lattice.iter() {
        if theta.kernel() == rho.kernel() {
            acc = join(s, &acc, theta);
        }
    }
    assert_eq!(acc.kernel(), rho.kernel(), "max_kernel must preserve the kernel");
    assert!(rho.leq(&acc));
    acc
}

/// Meet (intersection) of two congruences.
pub fn meet(s: &InverseSemigroup, a: &Congruence, b: &Congruence) -> Congruence {
    Congruence::from_partition_unchecked(s, a.partition().meet(b.partition()))
}

/// Join: least congruence containing both.
pub fn join(s: &InverseSemigroup, a: &Congruence, b: &Congruence) -> Congruence {
    let mut pairs = a.partition().generating_pairs();
    pairs.extend(b.partition().generating_pairs());
    relations::congruence_closure(s, &pairs)
}

/// Least congruence whose quotient is a group: `min_trace(ω)`, equivalently
/// the closure of the relation F.
pub fn least_group_congruence(s: &InverseSemigroup) -> Congruence {
    min_trace(s, &Congruence::universal(s))
}

/// Least congruence whose quotient is a semilattice: `min_kernel(ω)`,
/// equivalently the closure of Green's L (or R).
pub fn least_semilattice_congruence(s: &InverseSemigroup) -> Congruence {
    min_kernel(s, &Congruence::universal(s))
}

/// Greatest idempotent-separating congruence: `max_trace(ε)`, i.e. elements
/// identified exactly when they conjugate every idempotent identically.
pub fn greatest_idempotent_separating(s: &InverseSemigroup) -> Congruence {
    max_trace(s, &Congruence::identity(s))
}

/// Greatest idempotent-pure congruence: the syntactic congruence of the
/// idempotent set. `a ≈ b` iff for all contexts `(x, y)` over the semigroup
/// with an identity adjoined, `xay` is idempotent exactly when `xby` is.
pub fn greatest_idempotent_pure(s: &InverseSemigroup) -> Congruence {
    let n = s.order();
    // Context alphabet: Some(element) or None for the adjoined identity.
    let ctx: Vec<Option<usize>> = std::iter::once(None).chain((0..n).map(Some)).collect();
    let mut signatures: Vec<Vec<bool>> = Vec::with_capacity(n);
    for a in 0..n {
        let mut sig = Vec::with_capacity(ctx.len() * ctx.len());
        for &x in &ctx {
            let xa = match x {
                None => a,
                Some(x) => s.mul(x, a),
            };
            for &y in &ctx {
                let xay = match y {
                    None => xa,
                    Some(y) => s.mul(xa, y),
                };
                sig.push(s.is_idempotent(xay));
            }
        }
        signatures.push(sig);
    }
    let mut lookup: std::collections::HashMap<&[bool], usize> = std::collections::HashMap::new();
    let mut raw = Vec::with_capacity(n);
    let mut next = 0usize;
    for sig in &signatures {
        let l = *lookup.entry(sig.as_slice()).or_insert_with(|| {
            let l = next;
            next += 1;
            l
        });
        raw.push(l);
    }
    let partition = Partition::from_labels(&raw);
    assert!(
        relations::is_congruence(s, &partition),
        "syntactic relation must be a congruence"
    );
    let out = Congruence::from_partition_unchecked(s, partition);
    assert!(out.is_idempotent_pure(s), "syntactic congruence of the idempotents must be idempotent-pure");
    out
}
