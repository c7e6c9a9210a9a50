//! Brute-force oracles: enumerate every partition of the carrier set,
//! keep the ones that are congruences, and check that the production
//! enumeration and the extremal operators agree with the exhaustive answer.

use invsemi::catalog::{self, build_symmetric_inverse_monoid, BuildError};
use invsemi::congruence::{self, Congruence};
use invsemi::lattice::{enumerate_congruence_lattice, LatticeError};
use invsemi::network::MinNetwork;
use invsemi::partition::Partition;
use invsemi::relations;
use invsemi::semigroup::InverseSemigroup;
use invsemi::verify;

/// Every partition of `{0,..,n-1}` as a restricted-growth label vector
/// (which is exactly the canonical minimal-numbering form).
fn all_partition_labels(n: usize) -> Vec<Vec<usize>> {
    fn rec(i: usize, n: usize, next: usize, labels: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if i == n {
            out.push(labels.clone());
            return;
        }
        for l in 0..=next {
            labels.push(l);
            rec(i + 1, n, next.max(l + 1), labels, out);
            labels.pop();
        }
    }
    let mut out = Vec::new();
    rec(0, n, 0, &mut Vec::new(), &mut out);
    out
}

/// Exhaustive congruence enumeration: the oracle the lattice builder is
/// measured against.
fn brute_force_congruences(s: &InverseSemigroup) -> Vec<Vec<usize>> {
    all_partition_labels(s.order())
        .into_iter()
        .filter(|labels| {
            let p = Partition::from_labels(labels);
            relations::is_congruence(s, &p)
        })
        .collect()
}

fn labels_of(c: &Congruence) -> Vec<usize> {
    (0..c.partition().len())
        .map(|x| c.partition().label_of(x))
        .collect()
}

#[test]
fn bell_number_sanity() {
    let bell: Vec<usize> = (0..=10).map(|n| all_partition_labels(n).len()).collect();
    assert_eq!(bell, [1, 1, 2, 5, 15, 52, 203, 877, 4140, 21147, 115975]);
}

#[test]
fn lattice_matches_brute_force_enumeration() {
    for entry in catalog::catalog() {
        let s = &entry.semigroup;
        if s.order() > 10 {
            continue;
        }
        let mut brute = brute_force_congruences(s);
        brute.sort();
        let lattice = enumerate_congruence_lattice(s, 40).expect("within cap");
        let mut produced: Vec<Vec<usize>> = lattice.iter().map(labels_of).collect();
        produced.sort();
        assert_eq!(produced, brute, "{}", entry.name);
    }
}

#[test]
fn extremal_operators_match_brute_force_extrema() {
    for entry in catalog::catalog() {
        let s = &entry.semigroup;
        if s.order() > 9 {
            continue;
        }
        let all: Vec<Congruence> = brute_force_congruences(s)
            .into_iter()
            .map(|labels| {
                Congruence::from_partition(s, Partition::from_labels(&labels)).expect("congruence")
            })
            .collect();
        let lattice = enumerate_congruence_lattice(s, 40).expect("within cap");
        for rho in &all {
            let same_trace: Vec<&Congruence> =
                all.iter().filter(|t| t.trace() == rho.trace()).collect();
            let same_kernel: Vec<&Congruence> =
                all.iter().filter(|t| t.kernel() == rho.kernel()).collect();

            let mt = congruence::min_trace(s, rho);
            assert!(same_trace.iter().all(|t| mt.leq(t)), "{}", entry.name);
            assert!(same_trace.contains(&&mt), "{}", entry.name);

            let xt = congruence::max_trace(s, rho);
            assert!(same_trace.iter().all(|t| t.leq(&xt)), "{}", entry.name);
            assert!(same_trace.contains(&&xt), "{}", entry.name);

            let mk = congruence::min_kernel(s, rho);
            assert!(same_kernel.iter().all(|t| mk.leq(t)), "{}", entry.name);
            assert!(same_kernel.contains(&&mk), "{}", entry.name);

            let xk = congruence::max_kernel(s, rho, &lattice);
            assert!(same_kernel.iter().all(|t| t.leq(&xk)), "{}", entry.name);
            assert!(same_kernel.contains(&&xk), "{}", entry.name);
        }
    }
}

#[test]
fn i2_lattice_is_the_four_chain() {
    let s = catalog::by_name("I2").expect("bundled").semigroup;
    let lattice = enumerate_congruence_lattice(&s, 40).expect("within cap");
    let produced: Vec<Vec<usize>> = lattice.iter().map(labels_of).collect();
    assert_eq!(
        produced,
        [
            vec![0, 0, 0, 0, 0, 0, 0], // universal
            vec![0, 0, 0, 0, 1, 0, 1], // ideal collapsed, {id, t} joined
            vec![0, 0, 0, 0, 1, 0, 2], // ideal collapsed
            vec![0, 1, 2, 3, 4, 5, 6], // identity
        ]
    );
    assert_eq!(lattice.hasse_edges(), [(1, 0), (2, 1), (3, 2)]);
}

#[test]
fn i3_lattice_is_the_seven_chain() {
    let s = catalog::by_name("I3").expect("bundled").semigroup;
    let lattice = enumerate_congruence_lattice(&s, 40).expect("within cap");
    let counts: Vec<usize> = lattice.iter().map(|c| c.class_count()).collect();
    assert_eq!(counts, [1, 2, 3, 7, 16, 25, 34]);
    // Total order: every pair is comparable.
    let members: Vec<&Congruence> = lattice.iter().collect();
    for (i, a) in members.iter().enumerate() {
        for b in &members[i + 1..] {
            assert!(a.leq(b) || b.leq(a));
        }
    }
}

#[test]
fn eunitary7_lattice_and_landmarks() {
    let s = catalog::by_name("eunitary7").expect("bundled").semigroup;
    let lattice = enumerate_congruence_lattice(&s, 40).expect("within cap");
    assert_eq!(lattice.len(), 8);
    let net = MinNetwork::compute(&s, 16).expect("stabilizes");
    let sigma_meet_eta = congruence::meet(&s, net.sigma(), net.eta());
    assert_eq!(&sigma_meet_eta, net.nu());
    let sigma_join_eta = congruence::join(&s, net.sigma(), net.eta());
    assert!(sigma_join_eta.is_universal());
    assert_eq!(net.stabilization_level(), 3);
}

#[test]
fn i2_principal_congruences_are_rees_or_coarser() {
    let s = catalog::by_name("I2").expect("bundled").semigroup;
    let lattice = enumerate_congruence_lattice(&s, 40).expect("within cap");
    let allowed: Vec<Vec<usize>> = lattice
        .iter()
        .filter(|c| !c.is_identity())
        .map(labels_of)
        .collect();
    for a in 0..s.order() {
        for b in (a + 1)..s.order() {
            let principal = relations::congruence_closure(&s, &[(a, b)]);
            assert!(
                allowed.contains(&labels_of(&principal)),
                "principal congruence of ({a},{b}) escaped the chain"
            );
        }
    }
}

/// The kernel of the least same-trace congruence, characterized without
/// computing the congruence: `a` lies in it iff some idempotent `e` with
/// `ae = e` is related to `a⁻¹a`.
#[test]
fn kernel_of_min_trace_characterization() {
    for entry in catalog::catalog() {
        let s = &entry.semigroup;
        if s.order() > 9 {
            continue;
        }
        let lattice = enumerate_congruence_lattice(s, 40).expect("within cap");
        for rho in lattice.iter() {
            let mt = congruence::min_trace(s, rho);
            for a in 0..s.order() {
                let witnessed = s.idempotents().iter().any(|&e| {
                    s.mul(a, e) == e && rho.same(e, s.mul(s.inv(a), a))
                });
                assert_eq!(
                    mt.kernel_contains(a),
                    witnessed,
                    "{}: element {a} of ker(min_trace) mischaracterized",
                    entry.name
                );
            }
        }
    }
}

#[test]
fn degree_four_monoid_spot_facts() {
    let s = build_symmetric_inverse_monoid(4).expect("degree four builds");
    assert_eq!(s.order(), 209);
    assert_eq!(s.idempotents().len(), 16);
    assert!(s.zero().is_some());
    assert!(verify::is_fundamental(&s));
    assert!(!verify::is_e_reflexive(&s));
    assert!(!verify::is_e_unitary(&s));
    assert!(!verify::is_clifford(&s));

    assert!(matches!(
        build_symmetric_inverse_monoid(5),
        Err(BuildError::DegreeTooLarge(5))
    ));
    assert!(matches!(
        enumerate_congruence_lattice(&s, 40),
        Err(LatticeError::LatticeTooLarge { .. })
    ));
}
