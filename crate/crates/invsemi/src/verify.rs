//! Mechanical verification: structural class predicates, implication
//! families, cross-checked equivalence suites, minimality, interval,
//! decomposition and coincidence checks.
//!
//! Reports come in two modes. An *equivalence* suite lists conditions that
//! a theorem asserts are pairwise equivalent: it passes when all of them
//! evaluate the same way (all true or all false together). A *must-hold*
//! suite lists conditions that must each be true.

use crate::congruence::{self, Congruence};
use crate::lattice::CongruenceLattice;
use crate::network::{MinNetwork, DEFAULT_MAX_LEVEL};
use crate::relations::{self, PairSet};
use crate::semigroup::InverseSemigroup;
#[cfg(feature = "parallel")]
use rayon::prelude::*;

// ---------------------------------------------------------------------------
// Class predicates
// ---------------------------------------------------------------------------

/// Clifford: every idempotent is central.
pub fn is_clifford(s: &InverseSemigroup) -> bool {
    s.idempotents()
        .iter()
        .all(|&e| (0..s.order()).all(|x| s.mul(e, x) == s.mul(x, e)))
}

/// E-unitary: anything sitting above an idempotent is an idempotent.
/// Computed through both classical characterizations (`ey = e ⇒ y ∈ E` and
/// `xy = x ⇒ y ∈ E`), which are asserted to agree.
pub fn is_e_unitary(s: &InverseSemigroup) -> bool {
    let via_idempotents = s
        .idempotents()
        .iter()
        .all(|&e| (0..s.order()).all(|y| s.mul(e, y) != e || s.is_idempotent(y)));
    let via_left_identities = (0..s.order())
        .all(|x| (0..s.order()).all(|y| s.mul(x, y) != x || s.is_idempotent(y)));
    assert_eq!(
        via_idempotents, via_left_identities,
        "the two E-unitary characterizations must agree"
    );
    via_idempotents
}

/// E-reflexive: `exy` idempotent implies `eyx` idempotent.
pub fn is_e_reflexive(s: &InverseSemigroup) -> bool {
    s.idempotents().iter().all(|&e| {
        (0..s.order()).all(|x| {
            let ex = s.mul(e, x);
            (0..s.order()).all(|y| {
                !s.is_idempotent(s.mul(ex, y)) || s.is_idempotent(s.mul(s.mul(e, y), x))
            })
        })
    })
}

/// Fundamental: the greatest idempotent-separating congruence is trivial.
pub fn is_fundamental(s: &InverseSemigroup) -> bool {
    congruence::greatest_idempotent_separating(s).is_identity()
}

/// E-disjunctive: the greatest idempotent-pure congruence is trivial.
pub fn is_e_disjunctive(s: &InverseSemigroup) -> bool {
    congruence::greatest_idempotent_pure(s).is_identity()
}

/// The classes of `rho` that contain an idempotent, every element included,
/// deduplicated, in ascending order of their least idempotent. Each such
/// class is a full inverse subsemigroup.
pub fn idempotent_class_sets(s: &InverseSemigroup, rho: &Congruence) -> Vec<Vec<usize>> {
    let mut seen = std::collections::HashSet::new();
    let mut out = Vec::new();
    for &e in s.idempotents() {
        let label = rho.partition().label_of(e);
        if seen.insert(label) {
            out.push(
                (0..s.order())
                    .filter(|&x| rho.partition().label_of(x) == label)
                    .collect(),
            );
        }
    }
    out
}

/// Does every idempotent-class of `rho` form an E-unitary subsemigroup?
pub fn classes_over_e_unitary(s: &InverseSemigroup, rho: &Congruence) -> bool {
    idempotent_class_sets(s, rho)
        .iter()
        .all(|cls| is_e_unitary(&s.subsemigroup(cls)))
}

/// Is the kernel of `rho` a Clifford subsemigroup?
pub fn kernel_clifford(s: &InverseSemigroup, rho: &Congruence) -> bool {
    is_clifford(&s.subsemigroup(rho.kernel()))
}

/// Is every idempotent-class of this semigroup's own `beta_n` E-unitary?
/// (At `n = 0` this is plain E-unitarity; at `n = 1`, E-reflexivity.)
pub fn is_beta_n_over_e_unitary(s: &InverseSemigroup, n: usize) -> bool {
    let net = MinNetwork::compute(s, DEFAULT_MAX_LEVEL).expect("chains stabilize at desk scale");
    classes_over_e_unitary(s, net.beta(n))
}

/// Is the kernel of this semigroup's own `alpha_n` Clifford?
pub fn is_ker_alpha_n_clifford(s: &InverseSemigroup, n: usize) -> bool {
    let net = MinNetwork::compute(s, DEFAULT_MAX_LEVEL).expect("chains stabilize at desk scale");
    kernel_clifford(s, net.alpha(n))
}

/// Is `set` closed under multiplication with all idempotents of the subset
/// central in it? (Subset Clifford check used by hypothesis tests; returns
/// false rather than panicking when the subset is not closed.)
pub fn is_clifford_subset(s: &InverseSemigroup, set: &[usize]) -> bool {
    let mut mask = vec![false; s.order()];
    for &x in set {
        mask[x] = true;
    }
    for &a in set {
        for &b in set {
            if !mask[s.mul(a, b)] {
                return false;
            }
        }
    }
    set.iter().filter(|&&e| s.is_idempotent(e)).all(|&e| {
        set.iter().all(|&x| s.mul(e, x) == s.mul(x, e))
    })
}

// ---------------------------------------------------------------------------
// Implication families
// ---------------------------------------------------------------------------

/// The four families of quasi-identities whose least satisfying quotients
/// are the chain members: `A`/`APrime` characterize the alpha chain,
/// `B`/`BPrime` the beta chain. Primed families share the unprimed low
/// levels.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Family {
    A,
    B,
    APrime,
    BPrime,
}

impl Family {
    pub fn parse(token: &str) -> Option<Family> {
        match token {
            "A" => Some(Family::A),
            "B" => Some(Family::B),
            "Aprime" => Some(Family::APrime),
            "Bprime" => Some(Family::BPrime),
            _ => None,
        }
    }

    pub fn label(self) -> &'static str {
        match self {
            Family::A => "A",
            Family::B => "B",
            Family::APrime => "Aprime",
            Family::BPrime => "Bprime",
        }
    }
}

/// Does `s` satisfy the level-`n` condition of `family`?
///
/// - `A`, 0: trivial; 1: all elements share one `x⁻¹x` (a group);
///   2: idempotents central (Clifford); `n ≥ 3`: `xy = x` and
///   `x β_{n-3} y` force `y` into the centralizer of the idempotents.
/// - `APrime`, `n ≥ 3`: `xy = x` and `x⁻¹x α_{n-2} yy⁻¹` force `y` into
///   the centralizer; lower levels as `A`.
/// - `B`, 0: trivial; 1: everything idempotent (a semilattice);
///   `n ≥ 2`: `xy = x` and `x β_{n-2} y` force `y` idempotent.
/// - `BPrime`, `n ≥ 2`: `xy = x` and `x⁻¹x α_{n-1} yy⁻¹` force `y`
///   idempotent; lower levels as `B`.
pub fn satisfies_implication(s: &InverseSemigroup, family: Family, n: usize) -> bool {
    let centralizer_mask = || {
        let mut mask = vec![false; s.order()];
        for x in s.centralizer_of_idempotents() {
            mask[x] = true;
        }
        mask
    };
    let absorbing_pairs_land_in = |guard: &dyn Fn(usize, usize) -> bool, good: &[bool]| {
        (0..s.order()).all(|x| {
            (0..s.order()).all(|y| s.mul(x, y) != x || !guard(x, y) || good[y])
        })
    };
    let idempotent_mask: Vec<bool> = (0..s.order()).map(|x| s.is_idempotent(x)).collect();

    match (family, n) {
        (Family::A | Family::APrime, 0) | (Family::B | Family::BPrime, 0) => s.order() == 1,
        (Family::A | Family::APrime, 1) => {
            let first = s.mul(s.inv(0), 0);
            (0..s.order()).all(|x| s.mul(s.inv(x), x) == first)
        }
        (Family::A | Family::APrime, 2) => s.centralizer_of_idempotents().len() == s.order(),
        (Family::B | Family::BPrime, 1) => s.idempotents().len() == s.order(),
        (Family::A, n) => {
            let net = MinNetwork::compute(s, DEFAULT_MAX_LEVEL).expect("chains stabilize");
            let beta = net.beta(n - 3).clone();
            absorbing_pairs_land_in(&|x, y| beta.same(x, y), &centralizer_mask())
        }
        (Family::APrime, n) => {
            let net = MinNetwork::compute(s, DEFAULT_MAX_LEVEL).expect("chains stabilize");
            let alpha = net.alpha(n - 2).clone();
            absorbing_pairs_land_in(
                &|x, y| alpha.same(s.mul(s.inv(x), x), s.mul(y, s.inv(y))),
                &centralizer_mask(),
            )
        }
        (Family::B, n) => {
            let net = MinNetwork::compute(s, DEFAULT_MAX_LEVEL).expect("chains stabilize");
            let beta = net.beta(n - 2).clone();
            absorbing_pairs_land_in(&|x, y| beta.same(x, y), &idempotent_mask)
        }
        (Family::BPrime, n) => {
            let net = MinNetwork::compute(s, DEFAULT_MAX_LEVEL).expect("chains stabilize");
            let alpha = net.alpha(n - 1).clone();
            absorbing_pairs_land_in(
                &|x, y| alpha.same(s.mul(s.inv(x), x), s.mul(y, s.inv(y))),
                &idempotent_mask,
            )
        }
    }
}

// ---------------------------------------------------------------------------
// Reports
// ---------------------------------------------------------------------------

/// Outcome of a suite: either every condition agreed (with the suite's
/// mode deciding what agreement means), or the listed condition indices
/// broke the pattern.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Verdict {
    AllAgree,
    Disagreement(Vec<usize>),
}

/// One executed suite: its name, parameters, each labeled condition with
/// its observed truth value, and the verdict.
#[derive(Debug, Clone)]
pub struct SuiteReport {
    pub suite: &'static str,
    pub n: Option<usize>,
    pub m: Option<usize>,
    pub conditions: Vec<(&'static str, bool)>,
    pub verdict: Verdict,
}

impl SuiteReport {
    fn equivalence(
        suite: &'static str,
        n: Option<usize>,
        m: Option<usize>,
        conditions: Vec<(&'static str, bool)>,
    ) -> Self {
        let first = conditions.first().map(|c| c.1).unwrap_or(true);
        let out: Vec<usize> = conditions
            .iter()
            .enumerate()
            .filter(|(_, c)| c.1 != first)
            .map(|(i, _)| i)
            .collect();
        let verdict = if out.is_empty() {
            Verdict::AllAgree
        } else {
            Verdict::Disagreement(out)
        };
        SuiteReport {
            suite,
            n,
            m,
            conditions,
            verdict,
        }
    }

    fn must_hold(
        suite: &'static str,
        n: Option<usize>,
        m: Option<usize>,
        conditions: Vec<(&'static str, bool)>,
    ) -> Self {
        let out: Vec<usize> = conditions
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.1)
            .map(|(i, _)| i)
            .collect();
        let verdict = if out.is_empty() {
            Verdict::AllAgree
        } else {
            Verdict::Disagreement(out)
        };
        SuiteReport {
            suite,
            n,
            m,
            conditions,
            verdict,
        }
    }

    pub fn passed(&self) -> bool {
        self.verdict == Verdict::AllAgree
    }

    /// Condition values as a 0/1 string, in order.
    pub fn bits(&self) -> String {
        self.conditions
            .iter()
            .map(|c| if c.1 { '1' } else { '0' })
            .collect()
    }
}

/// Is this symmetric reflexive pair set transitive and compatible with
/// multiplication — i.e. a congruence when read as a relation?
pub fn pair_set_is_congruence(s: &InverseSemigroup, p: &PairSet) -> bool {
    if !p.is_reflexive() || !p.is_symmetric() || !p.is_transitive() {
        return false;
    }
    p.pairs().iter().all(|&(a, b)| {
        (0..s.order()).all(|x| {
            p.contains(s.mul(x, a), s.mul(x, b)) && p.contains(s.mul(a, x), s.mul(b, x))
        })
    })
}

fn idempotent_leq(s: &InverseSemigroup, e: usize, f: usize) -> bool {
    s.mul(e, f) == e
}

// ---------------------------------------------------------------------------
// Equivalence suites
// ---------------------------------------------------------------------------

/// Twelve conditions that are equivalent at every level `n ≥ 1`; all
/// revolve around the kernel of `alpha_n` being Clifford. The first five
/// at `n = 1` are the classical idempotent-separating/least-group facts.
pub fn suite_kercliff(
    s: &InverseSemigroup,
    net: &MinNetwork,
    lattice: &CongruenceLattice,
    n: usize,
) -> SuiteReport {
    assert!(n >= 1, "suite is defined for n >= 1");
    let alpha_n = net.alpha(n);
    let beta_next = net.beta(n + 1);
    let mu = congruence::greatest_idempotent_separating(s);
    let l = relations::green_l(s);
    let r = relations::green_r(s);
    let alpha_meet_l = alpha_n.partition().meet(&l);
    let alpha_meet_r = alpha_n.partition().meet(&r);
    let mut centralizer = vec![false; s.order()];
    for x in s.centralizer_of_idempotents() {
        centralizer[x] = true;
    }

    let kernel_is_clifford = kernel_clifford(s, alpha_n);
    let order_transfers = (0..s.order()).all(|a| {
        (0..s.order()).all(|b| {
            !alpha_n.same(a, b)
                || !idempotent_leq(s, s.mul(s.inv(a), a), s.mul(s.inv(b), b))
                || idempotent_leq(s, s.mul(a, s.inv(a)), s.mul(b, s.inv(b)))
        })
    });
    let meets_l_equals_meets_r = alpha_meet_l == alpha_meet_r;
    let meet_l_congruence = relations::is_congruence(s, &alpha_meet_l);
    let meet_r_congruence = relations::is_congruence(s, &alpha_meet_r);
    let meet_l_equals_meet_mu = alpha_meet_l == alpha_n.partition().meet(mu.partition());
    let separating_cover_exists = lattice.iter().any(|rho| {
        rho.is_idempotent_separating() && {
            let (q, _) = congruence::quotient(s, rho);
            is_beta_n_over_e_unitary(&q, n - 1)
        }
    });
    let beta_next_separating = beta_next.leq(&mu);
    let beta_next_trace_trivial = congruence::min_trace(s, beta_next).is_identity();
    let beta_next_meets_f_trivially = (0..s.order()).all(|a| {
        (a + 1..s.order()).all(|b| !(beta_next.same(a, b) && relations::related_f(s, a, b)))
    });
    let kernel_in_centralizer = alpha_n.kernel().iter().all(|&k| centralizer[k]);
    let primed_implication = satisfies_implication(s, Family::APrime, n + 2);

    SuiteReport::equivalence(
        "kercliff",
        Some(n),
        None,
        vec![
            ("kernel of alpha_n is Clifford", kernel_is_clifford),
            ("alpha_n transfers the idempotent order across sides", order_transfers),
            ("alpha_n meets L and R identically", meets_l_equals_meets_r),
            ("alpha_n meet L is a congruence", meet_l_congruence),
            ("alpha_n meet R is a congruence", meet_r_congruence),
            ("alpha_n meet L equals alpha_n meet mu", meet_l_equals_meet_mu),
            (
                "some idempotent-separating congruence has a level-(n-1) over-E-unitary quotient",
                separating_cover_exists,
            ),
            ("beta_{n+1} is idempotent-separating", beta_next_separating),
            ("min_trace(beta_{n+1}) is the identity", beta_next_trace_trivial),
            ("beta_{n+1} meets F trivially", beta_next_meets_f_trivially),
            ("kernel of alpha_n centralizes the idempotents", kernel_in_centralizer),
            ("primed alpha implication holds at level n+2", primed_implication),
        ],
    )
}

/// Eleven conditions that are equivalent at every level `n ≥ 1`; all
/// revolve around every idempotent-class of `beta_n` being E-unitary.
pub fn suite_boeu(
    s: &InverseSemigroup,
    net: &MinNetwork,
    lattice: &CongruenceLattice,
    n: usize,
) -> SuiteReport {
    assert!(n >= 1, "suite is defined for n >= 1");
    let beta_n = net.beta(n);
    let alpha_next = net.alpha(n + 1);
    let tau = congruence::greatest_idempotent_pure(s);
    let f = relations::relation_f(s);
    let c = relations::relation_c(s);
    let beta_meet_f =
        PairSet::from_predicate(s.order(), |a, b| beta_n.same(a, b) && f.contains(a, b));
    let beta_meet_c =
        PairSet::from_predicate(s.order(), |a, b| beta_n.same(a, b) && c.contains(a, b));

    let classes_unitary = classes_over_e_unitary(s, beta_n);
    let meet_f_congruence = pair_set_is_congruence(s, &beta_meet_f);
    let meet_c_congruence = pair_set_is_congruence(s, &beta_meet_c);
    let meet_f_equals_meet_tau = (0..s.order()).all(|a| {
        (0..s.order())
            .all(|b| beta_meet_f.contains(a, b) == (beta_n.same(a, b) && tau.same(a, b)))
    });
    let meet_c_equals_meet_tau = (0..s.order()).all(|a| {
        (0..s.order())
            .all(|b| beta_meet_c.contains(a, b) == (beta_n.same(a, b) && tau.same(a, b)))
    });
    let pure_cover_exists = lattice.iter().any(|rho| {
        rho.is_idempotent_pure(s) && {
            let (q, _) = congruence::quotient(s, rho);
            is_ker_alpha_n_clifford(&q, n - 1)
        }
    });
    let alpha_next_pure = alpha_next.leq(&tau);
    let alpha_next_kernel_trivial = congruence::min_kernel(s, alpha_next).is_identity();
    let beta_trace_refines_tau_trace = beta_n.trace().refines(tau.trace());
    let primed_implication = satisfies_implication(s, Family::BPrime, n + 2);
    let alpha_next_meets_l_trivially =
        alpha_next.partition().meet(&relations::green_l(s)).is_singletons();

    SuiteReport::equivalence(
        "boeu",
        Some(n),
        None,
        vec![
            ("every idempotent-class of beta_n is E-unitary", classes_unitary),
            ("beta_n meet F is a congruence", meet_f_congruence),
            ("beta_n meet C is a congruence", meet_c_congruence),
            ("beta_n meet F equals beta_n meet tau", meet_f_equals_meet_tau),
            ("beta_n meet C equals beta_n meet tau", meet_c_equals_meet_tau),
            (
                "some idempotent-pure congruence has a level-(n-1) Clifford-kernel quotient",
                pure_cover_exists,
            ),
            ("alpha_{n+1} is idempotent-pure", alpha_next_pure),
            ("min_kernel(alpha_{n+1}) is the identity", alpha_next_kernel_trivial),
            ("trace of beta_n refines the trace of tau", beta_trace_refines_tau_trace),
            ("primed beta implication holds at level n+2", primed_implication),
            ("alpha_{n+1} meets L trivially", alpha_next_meets_l_trivially),
        ],
    )
}

// ---------------------------------------------------------------------------
// Relative (over-a-congruence) forms
// ---------------------------------------------------------------------------

/// Which property the relative-least operator targets on the quotient.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RelativeTarget {
    /// Least `θ ⊇ ρ` whose quotient has a Clifford kernel at level `m`.
    KerCliffordAt(usize),
    /// Least `θ ⊇ ρ` whose quotient is over-E-unitary at level `m`.
    OverEUnitaryAt(usize),
}

/// The least congruence above `rho` whose quotient satisfies `target`,
/// computed by pulling the appropriate chain member back from `S/ρ`.
pub fn relative_least(
    s: &InverseSemigroup,
    rho: &Congruence,
    target: RelativeTarget,
) -> Congruence {
    let (q, proj) = congruence::quotient(s, rho);
    let qnet = MinNetwork::compute(&q, DEFAULT_MAX_LEVEL).expect("chains stabilize");
    let theta = match target {
        RelativeTarget::KerCliffordAt(m) => qnet.alpha(m + 2),
        RelativeTarget::OverEUnitaryAt(m) => qnet.beta(m + 2),
    };
    congruence::pullback(s, &proj, theta)
}

/// Three equivalent conditions about one congruence `rho` at level
/// `n ≥ 1`: its quotient has a Clifford kernel at level `n` exactly when
/// the relative beta step above `rho` stays idempotent-separating over it.
pub fn suite_kercliffcon(s: &InverseSemigroup, rho: &Congruence, n: usize) -> SuiteReport {
    assert!(n >= 1, "suite is defined for n >= 1");
    let (q, _) = congruence::quotient(s, rho);
    let rel = relative_least(s, rho, RelativeTarget::OverEUnitaryAt(n - 1));
    let quotient_kernel_clifford = is_ker_alpha_n_clifford(&q, n);
    let within_max_trace = rel.leq(&congruence::max_trace(s, rho));
    let trace_preserved = rel.trace() == rho.trace();
    SuiteReport::equivalence(
        "kercliffcon",
        Some(n),
        None,
        vec![
            ("quotient kernel of alpha_n is Clifford", quotient_kernel_clifford),
            ("relative beta_{n+1} stays within max_trace(rho)", within_max_trace),
            ("relative beta_{n+1} preserves the trace of rho", trace_preserved),
        ],
    )
}

/// Dual of [`suite_kercliffcon`]: the quotient is over-E-unitary at level
/// `n` exactly when the relative alpha step above `rho` preserves its
/// kernel (stays within `max_kernel(rho)`).
pub fn suite_boeuc(
    s: &InverseSemigroup,
    lattice: &CongruenceLattice,
    rho: &Congruence,
    n: usize,
) -> SuiteReport {
    assert!(n >= 1, "suite is defined for n >= 1");
    let (q, _) = congruence::quotient(s, rho);
    let rel = relative_least(s, rho, RelativeTarget::KerCliffordAt(n - 1));
    let quotient_over_unitary = is_beta_n_over_e_unitary(&q, n);
    let within_max_kernel = rel.leq(&congruence::max_kernel(s, rho, lattice));
    let kernel_preserved = rel.kernel() == rho.kernel();
    SuiteReport::equivalence(
        "boeuc",
        Some(n),
        None,
        vec![
            ("quotient is over-E-unitary at level n", quotient_over_unitary),
            ("relative alpha_{n+1} stays within max_kernel(rho)", within_max_kernel),
            ("relative alpha_{n+1} preserves the kernel of rho", kernel_preserved),
        ],
    )
}

/// Run both relative suites against every member of the lattice at level
/// `n`. Members are independent, so this is the library's verification
/// fan-out: with the `parallel` feature the members are checked on the
/// rayon pool; the result order is the lattice's canonical order either
/// way, so output is identical across thread counts.
pub fn relative_suites_over_lattice(
    s: &InverseSemigroup,
    lattice: &CongruenceLattice,
    n: usize,
) -> Vec<(usize, SuiteReport, SuiteReport)> {
    let one = |i: usize| {
        let rho = lattice.get(i);
        (
            i,
            suite_kercliffcon(s, rho, n),
            suite_boeuc(s, lattice, rho, n),
        )
    };
    #[cfg(feature = "parallel")]
    {
        (0..lattice.len()).into_par_iter().map(one).collect()
    }
    #[cfg(not(feature = "parallel"))]
    {
        (0..lattice.len()).map(one).collect()
    }
}

// ---------------------------------------------------------------------------
// Minimality, intervals, decomposition, coincidences
// ---------------------------------------------------------------------------

/// The chain member at level `n` must be the least enumerated congruence
/// whose quotient satisfies the level-`n` condition of `family`.
pub fn check_minimality(
    s: &InverseSemigroup,
    net: &MinNetwork,
    lattice: &CongruenceLattice,
    family: Family,
    n: usize,
) -> SuiteReport {
    let target = match family {
        Family::A | Family::APrime => net.alpha(n),
        Family::B | Family::BPrime => net.beta(n),
    };
    let least = lattice.least_satisfying(|rho| {
        let (q, _) = congruence::quotient(s, rho);
        satisfies_implication(&q, family, n)
    });
    SuiteReport::must_hold(
        "minimality",
        Some(n),
        None,
        vec![
            ("a least satisfying congruence exists", least.is_some()),
            ("it coincides with the chain member", least == Some(target)),
        ],
    )
}

/// Interval stability: every congruence between `alpha_{n+2}` and
/// `beta_{n+1}` has a level-`n` Clifford kernel quotient, and every one
/// between `beta_{n+2}` and `alpha_{n+1}` has a level-`n` over-E-unitary
/// quotient.
pub fn check_intervals(
    s: &InverseSemigroup,
    net: &MinNetwork,
    lattice: &CongruenceLattice,
    n: usize,
) -> SuiteReport {
    let clifford_side = lattice
        .iter()
        .filter(|rho| net.alpha(n + 2).leq(rho) && rho.leq(net.beta(n + 1)))
        .all(|rho| {
            let (q, _) = congruence::quotient(s, rho);
            is_ker_alpha_n_clifford(&q, n)
        });
    let unitary_side = lattice
        .iter()
        .filter(|rho| net.beta(n + 2).leq(rho) && rho.leq(net.alpha(n + 1)))
        .all(|rho| {
            let (q, _) = congruence::quotient(s, rho);
            is_beta_n_over_e_unitary(&q, n)
        });
    SuiteReport::must_hold(
        "intervals",
        Some(n),
        None,
        vec![
            ("the [alpha_{n+2}, beta_{n+1}] interval has Clifford kernels", clifford_side),
            ("the [beta_{n+2}, alpha_{n+1}] interval is over-E-unitary", unitary_side),
        ],
    )
}

/// One-directional class check at `n ≥ 2`: if the kernel of `alpha_{n-1}`
/// meets every eta-class in a Clifford subsemigroup, then the kernel of
/// `alpha_n` is Clifford.
pub fn check_prop_class(s: &InverseSemigroup, net: &MinNetwork, n: usize) -> SuiteReport {
    assert!(n >= 2, "check is defined for n >= 2");
    let mut kernel_mask = vec![false; s.order()];
    for &x in net.alpha(n - 1).kernel() {
        kernel_mask[x] = true;
    }
    let hypothesis = net.beta(1).partition().classes().iter().all(|cls| {
        let inter: Vec<usize> = cls.iter().copied().filter(|&x| kernel_mask[x]).collect();
        is_clifford_subset(s, &inter)
    });
    let conclusion = kernel_clifford(s, net.alpha(n));
    SuiteReport::must_hold(
        "class",
        Some(n),
        None,
        vec![(
            "per-eta-class Clifford kernels force a Clifford kernel one level up",
            !hypothesis || conclusion,
        )],
    )
}

/// One-directional kernel check at `n ≥ 1`: over-E-unitary at level `n`
/// forces the kernel of `alpha_{n-1}` to be E-reflexive. (The converse is
/// not asserted; a bounded witness search lives in the test suite.)
pub fn check_prop_ker(s: &InverseSemigroup, net: &MinNetwork, n: usize) -> SuiteReport {
    assert!(n >= 1, "check is defined for n >= 1");
    let hypothesis = classes_over_e_unitary(s, net.beta(n));
    let conclusion = is_e_reflexive(&s.subsemigroup(net.alpha(n - 1).kernel()));
    SuiteReport::must_hold(
        "ker",
        Some(n),
        None,
        vec![(
            "over-E-unitary at n forces an E-reflexive kernel at n-1",
            !hypothesis || conclusion,
        )],
    )
}

/// Two-parameter decomposition at `m ≥ 2`, `n ≥ 1`: `alpha_{m+n}` is the
/// least congruence whose quotient has every idempotent-class of its own
/// `alpha_n` satisfying the level-`m` alpha condition; dually for
/// `beta_{m+n}`. The `m = 1` splits genuinely degenerate: a quotient can
/// satisfy the level-`1+n` condition while a class of its level-`n` chain
/// member is a semilattice rather than a group (alpha side) or a group
/// rather than a semilattice (beta side).
pub fn check_prop_quotient(
    s: &InverseSemigroup,
    net: &MinNetwork,
    lattice: &CongruenceLattice,
    m: usize,
    n: usize,
) -> SuiteReport {
    assert!(m >= 2 && n >= 1, "check is defined for m >= 2 and n >= 1");
    let classwise = |rho: &Congruence, alpha_side: bool| -> bool {
        let (q, _) = congruence::quotient(s, rho);
        let qnet = MinNetwork::compute(&q, DEFAULT_MAX_LEVEL).expect("chains stabilize");
        let level = if alpha_side { qnet.alpha(n) } else { qnet.beta(n) };
        let family = if alpha_side { Family::A } else { Family::B };
        idempotent_class_sets(&q, level)
            .iter()
            .all(|cls| satisfies_implication(&q.subsemigroup(cls), family, m))
    };
    let alpha_least = lattice.least_satisfying(|rho| classwise(rho, true));
    let beta_least = lattice.least_satisfying(|rho| classwise(rho, false));
    SuiteReport::must_hold(
        "quotient",
        Some(n),
        Some(m),
        vec![
            (
                "alpha_{m+n} is least with classwise level-m alpha quotients",
                alpha_least == Some(net.alpha(m + n)),
            ),
            (
                "beta_{m+n} is least with classwise level-m beta quotients",
                beta_least == Some(net.beta(m + n)),
            ),
        ],
    )
}

/// The interleaving identities and landmark coincidences, checked for all
/// levels through stabilization plus two.
pub fn check_coincidences(s: &InverseSemigroup, net: &MinNetwork) -> SuiteReport {
    let top = net.stabilization_level() + 2;
    let sigma = net.sigma();
    let eta = net.eta();
    let nu = net.nu();
    let pi = net.pi();
    let lambda = net.lambda();
    let mu = congruence::greatest_idempotent_separating(s);
    let tau = congruence::greatest_idempotent_pure(s);

    let both_universal = sigma.is_universal() && eta.is_universal();
    let universal_levels = (2..=top).all(|k| {
        let a = net.alpha(k).is_universal();
        let b = net.beta(k).is_universal();
        a == both_universal && b == both_universal
    });
    let sigma_meeting = (3..=top).all(|k| (net.alpha(k) == sigma) == (net.beta(k - 1) == sigma));
    let eta_meeting = (2..=top).all(|k| (net.alpha(k) == eta) == (net.beta(k + 1) == eta));
    let nu_meeting = (4..=top).all(|k| (net.alpha(k) == nu) == (net.beta(k - 1) == nu));
    let pi_meeting = (3..=top).all(|k| (net.alpha(k) == pi) == (net.beta(k + 1) == pi));
    let lambda_meeting =
        (4..=top).all(|k| (net.alpha(k) == lambda) == (net.beta(k + 1) == lambda));
    let mu_coincidence = (3..=top).all(|k| {
        (net.alpha(k) == &mu)
            == (classes_over_e_unitary(s, net.beta(k - 3)) && mu.is_identity())
    });
    let tau_alpha_coincidence = (1..=top).all(|k| {
        (net.alpha(k) == &tau)
            == (classes_over_e_unitary(s, net.beta(k - 1))
                && tau.trace() == net.beta(k - 1).trace())
    });
    let tau_beta_coincidence = (2..=top).all(|k| {
        (net.beta(k) == &tau)
            == (classes_over_e_unitary(s, net.beta(k - 2)) && tau.is_identity())
    });

    SuiteReport::must_hold(
        "coincidences",
        None,
        None,
        vec![
            ("chains hit the top together, exactly when sigma and eta are both universal", universal_levels),
            ("alpha meets sigma exactly when beta met it one level earlier", sigma_meeting),
            ("alpha meets eta exactly when beta meets it one level later", eta_meeting),
            ("alpha meets nu exactly when beta met it one level earlier", nu_meeting),
            ("alpha meets pi exactly when beta meets it one level later", pi_meeting),
            ("alpha meets lambda exactly when beta meets it one level later", lambda_meeting),
            ("alpha meets mu exactly when over-E-unitary three levels down and mu trivial", mu_coincidence),
            ("alpha meets tau exactly when over-E-unitary one level down with matching traces", tau_alpha_coincidence),
            ("beta meets tau exactly when over-E-unitary two levels down and tau trivial", tau_beta_coincidence),
        ],
    )
}

/// The interleaving lattice facts: consecutive meets equal the next joins,
/// and the chain members together with their meets are closed under meet
/// and join.
pub fn check_network_lattice(s: &InverseSemigroup, net: &MinNetwork) -> SuiteReport {
    let top = net.stabilization_level() + 2;
    let meets_match_joins = (1..=top).all(|k| {
        net.meet_at(s, k - 1) == net.join_at(s, k)
    });
    let mut members: Vec<Congruence> = Vec::new();
    let push = |c: Congruence, members: &mut Vec<Congruence>| {
        if !members.contains(&c) {
            members.push(c);
        }
    };
    for k in 0..=net.stabilization_level() {
        push(net.alpha(k).clone(), &mut members);
        push(net.beta(k).clone(), &mut members);
        push(net.meet_at(s, k), &mut members);
    }
    let closed = (0..members.len()).all(|i| {
        (0..members.len()).all(|j| {
            members.contains(&congruence::meet(s, &members[i], &members[j]))
                && members.contains(&congruence::join(s, &members[i], &members[j]))
        })
    });
    SuiteReport::must_hold(
        "network-lattice",
        None,
        None,
        vec![
            ("meet of consecutive levels equals the next join", meets_match_joins),
            ("chain members and their meets are closed under meet and join", closed),
        ],
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;
    use crate::lattice::{enumerate_congruence_lattice, DEFAULT_LATTICE_CAP};

    fn net_of(s: &InverseSemigroup) -> MinNetwork {
        MinNetwork::compute(s, DEFAULT_MAX_LEVEL).unwrap()
    }

    fn lattice_of(s: &InverseSemigroup) -> CongruenceLattice {
        enumerate_congruence_lattice(s, DEFAULT_LATTICE_CAP).unwrap()
    }

    #[test]
    fn catalog_predicates_match_the_frozen_manifest() {
        for entry in catalog::catalog() {
            let s = &entry.semigroup;
            assert_eq!(is_clifford(s), entry.expected.clifford, "clifford on {}", entry.name);
            assert_eq!(is_e_unitary(s), entry.expected.e_unitary, "e_unitary on {}", entry.name);
            assert_eq!(
                is_e_reflexive(s),
                entry.expected.e_reflexive,
                "e_reflexive on {}",
                entry.name
            );
            assert_eq!(
                is_fundamental(s),
                entry.expected.fundamental,
                "fundamental on {}",
                entry.name
            );
            assert_eq!(
                is_e_disjunctive(s),
                entry.expected.e_disjunctive,
                "e_disjunctive on {}",
                entry.name
            );
            assert_eq!(
                lattice_of(s).len(),
                entry.expected.lattice_size,
                "lattice size on {}",
                entry.name
            );
        }
    }

    #[test]
    fn e_reflexive_agrees_with_classwise_e_unitarity_over_eta() {
        for entry in catalog::catalog() {
            let s = &entry.semigroup;
            let net = net_of(s);
            assert_eq!(
                is_e_reflexive(s),
                classes_over_e_unitary(s, net.eta()),
                "characterization mismatch on {}",
                entry.name
            );
        }
    }

    #[test]
    fn over_e_unitary_specializes_to_the_classical_predicates() {
        for entry in catalog::catalog() {
            let s = &entry.semigroup;
            assert_eq!(
                is_beta_n_over_e_unitary(s, 0),
                is_e_unitary(s),
                "level 0 on {}",
                entry.name
            );
            assert_eq!(
                is_beta_n_over_e_unitary(s, 1),
                is_e_reflexive(s),
                "level 1 on {}",
                entry.name
            );
        }
    }

    #[test]
    fn kernel_clifford_specializes_to_clifford_at_level_zero() {
        for entry in catalog::catalog() {
            let s = &entry.semigroup;
            // ker alpha_0 = ker omega = S.
            assert_eq!(
                is_ker_alpha_n_clifford(s, 0),
                is_clifford(s),
                "level 0 on {}",
                entry.name
            );
        }
    }

    #[test]
    fn implication_families_low_levels() {
        let b2 = catalog::by_name("B2").unwrap().semigroup;
        let c2 = catalog::build_group(&[vec![0, 1], vec![1, 0]]).unwrap();
        let chain = catalog::build_chain_semilattice(3).unwrap();
        assert!(satisfies_implication(&c2, Family::A, 1));
        assert!(!satisfies_implication(&b2, Family::A, 1));
        assert!(satisfies_implication(&chain, Family::B, 1));
        assert!(!satisfies_implication(&b2, Family::B, 1));
        assert!(satisfies_implication(&chain, Family::A, 2));
        assert!(!satisfies_implication(&b2, Family::A, 2));
        // E-unitary is exactly the level-2 beta condition.
        for entry in catalog::catalog() {
            assert_eq!(
                satisfies_implication(&entry.semigroup, Family::B, 2),
                is_e_unitary(&entry.semigroup),
                "level-2 beta condition on {}",
                entry.name
            );
        }
    }

    #[test]
    fn suite_kercliff_all_false_together_on_the_brandt_monoid_pattern() {
        let s = catalog::build_symmetric_inverse_monoid(2).unwrap();
        let net = net_of(&s);
        let lattice = lattice_of(&s);
        let report = suite_kercliff(&s, &net, &lattice, 1);
        assert!(report.passed(), "disagreement: {:?}", report);
        assert!(report.conditions.iter().all(|c| !c.1), "expected all-false");
    }

    #[test]
    fn suite_kercliff_all_true_on_a_group() {
        let c2 = catalog::build_group(&[vec![0, 1], vec![1, 0]]).unwrap();
        let net = net_of(&c2);
        let lattice = lattice_of(&c2);
        let report = suite_kercliff(&c2, &net, &lattice, 1);
        assert!(report.passed());
        assert!(report.conditions.iter().all(|c| c.1), "expected all-true");
    }

    #[test]
    fn suite_boeu_all_false_together_on_b2() {
        let s = catalog::by_name("B2").unwrap().semigroup;
        let net = net_of(&s);
        let lattice = lattice_of(&s);
        let report = suite_boeu(&s, &net, &lattice, 1);
        assert!(report.passed(), "disagreement: {:?}", report);
        assert!(report.conditions.iter().all(|c| !c.1), "expected all-false");
    }

    #[test]
    fn suite_boeu_all_true_on_the_e_unitary_example() {
        let s = catalog::build_eunitary7().unwrap();
        let net = net_of(&s);
        let lattice = lattice_of(&s);
        for n in 1..=3 {
            let report = suite_boeu(&s, &net, &lattice, n);
            assert!(report.passed(), "disagreement at n={n}: {:?}", report);
        }
        assert!(suite_boeu(&s, &net, &lattice, 1).conditions.iter().all(|c| c.1));
    }

    #[test]
    fn relative_suites_agree_on_every_catalog_lattice_member() {
        for entry in catalog::catalog() {
            let s = &entry.semigroup;
            if s.order() > 10 {
                continue; // larger instances are covered by the acceptance run
            }
            let lattice = lattice_of(s);
            for rho in lattice.iter() {
                for n in 1..=2 {
                    let r1 = suite_kercliffcon(s, rho, n);
                    assert!(
                        r1.passed(),
                        "kercliffcon disagreement on {} at n={n}: {:?}",
                        entry.name,
                        r1
                    );
                    let r2 = suite_boeuc(s, &lattice, rho, n);
                    assert!(
                        r2.passed(),
                        "boeuc disagreement on {} at n={n}: {:?}",
                        entry.name,
                        r2
                    );
                }
            }
        }
    }

    #[test]
    fn minimality_holds_for_all_families_on_i2() {
        let s = catalog::build_symmetric_inverse_monoid(2).unwrap();
        let net = net_of(&s);
        let lattice = lattice_of(&s);
        for n in 0..=5 {
            for family in [Family::A, Family::B, Family::APrime, Family::BPrime] {
                let report = check_minimality(&s, &net, &lattice, family, n);
                assert!(
                    report.passed(),
                    "minimality failed for {:?} at n={n}: {:?}",
                    family,
                    report
                );
            }
        }
    }

    #[test]
    fn coincidences_hold_across_the_catalog() {
        for entry in catalog::catalog() {
            let s = &entry.semigroup;
            let net = net_of(s);
            let report = check_coincidences(s, &net);
            assert!(report.passed(), "coincidence failure on {}: {:?}", entry.name, report);
        }
    }

    #[test]
    fn network_lattice_facts_hold_across_the_catalog() {
        for entry in catalog::catalog() {
            let s = &entry.semigroup;
            let net = net_of(s);
            let report = check_network_lattice(s, &net);
            assert!(report.passed(), "lattice-fact failure on {}: {:?}", entry.name, report);
        }
    }

    #[test]
    fn low_split_of_the_decomposition_genuinely_degenerates() {
        // Alpha side at m = 1: the three-element chain-of-groups is
        // Clifford (the level-2 alpha condition), yet the idempotent class
        // of its least group congruence (the whole semigroup) is not a
        // group. So "classes of alpha_n are groups" is strictly stronger
        // than the level-(1+n) condition, and the decomposition check
        // requires m >= 2.
        let s = catalog::by_name("clifford3").unwrap().semigroup;
        assert!(is_clifford(&s));
        let net = net_of(&s);
        let classes = idempotent_class_sets(&s, net.alpha(1));
        assert!(classes
            .iter()
            .any(|cls| !satisfies_implication(&s.subsemigroup(cls), Family::A, 1)));
        // Beta side at m = 1: the same semigroup satisfies the level-3
        // beta condition, yet a class of its beta_2 contains a
        // non-idempotent.
        assert!(satisfies_implication(&s, Family::B, 3));
        let classes = idempotent_class_sets(&s, net.beta(2));
        assert!(classes
            .iter()
            .any(|cls| !satisfies_implication(&s.subsemigroup(cls), Family::B, 1)));
    }

    #[test]
    fn decomposition_check_passes_on_small_instances() {
        for name in ["I2", "clifford3", "eunitary7", "B2", "C2"] {
            let s = catalog::by_name(name).unwrap().semigroup;
            let net = net_of(&s);
            let lattice = lattice_of(&s);
            for (m, n) in [(2, 1), (2, 2), (3, 1)] {
                let report = check_prop_quotient(&s, &net, &lattice, m, n);
                assert!(
                    report.passed(),
                    "decomposition failed on {name} at m={m}, n={n}: {:?}",
                    report
                );
            }
        }
    }

    #[test]
    fn directional_checks_hold_across_the_catalog() {
        for entry in catalog::catalog() {
            let s = &entry.semigroup;
            let net = net_of(s);
            for n in 2..=4 {
                let report = check_prop_class(s, &net, n);
                assert!(report.passed(), "class check failed on {} at {n}", entry.name);
            }
            for n in 1..=4 {
                let report = check_prop_ker(s, &net, n);
                assert!(report.passed(), "ker check failed on {} at {n}", entry.name);
            }
        }
    }

    #[test]
    fn interval_checks_hold_on_i2_and_eunitary7() {
        for name in ["I2", "eunitary7"] {
            let s = catalog::by_name(name).unwrap().semigroup;
            let net = net_of(&s);
            let lattice = lattice_of(&s);
            for n in 1..=2 {
                let report = check_intervals(&s, &net, &lattice, n);
                assert!(report.passed(), "interval failure on {name} at n={n}");
            }
        }
    }

    #[test]
    fn verdict_reports_disagreeing_indices() {
        let report = SuiteReport::equivalence(
            "demo",
            None,
            None,
            vec![("a", true), ("b", false), ("c", true), ("d", false)],
        );
        assert_eq!(report.verdict, Verdict::Disagreement(vec![1, 3]));
        assert_eq!(report.bits(), "1010");
        let report = SuiteReport::must_hold("demo", None, None, vec![("a", true), ("b", false)]);
        assert_eq!(report.verdict, Verdict::Disagreement(vec![1]));
    }
}
