//! Property tests over randomly generated partial bijections, the inverse
//! semigroups they generate, and randomly seeded congruences.

use invsemi::congruence::{self, Congruence};
use invsemi::partition::Partition;
use invsemi::relations;
use invsemi::semigroup::{from_partial_bijection_generators, InverseSemigroup, PartialBijection};
use proptest::prelude::*;

/// An injective partial map on `degree` points: a shuffled image list with a
/// random domain mask.
fn partial_bijection(degree: usize) -> impl Strategy<Value = PartialBijection> {
    let images = Just((0..degree).collect::<Vec<usize>>()).prop_shuffle();
    let mask = prop::collection::vec(any::<bool>(), degree);
    (images, mask).prop_map(move |(images, mask)| {
        let map: Vec<Option<usize>> = images
            .into_iter()
            .zip(mask)
            .map(|(y, keep)| keep.then_some(y))
            .collect();
        PartialBijection::new(degree, map).expect("construction is injective")
    })
}

/// A small random inverse semigroup: the closure of one or two partial
/// bijections on up to four points (at most the 209-element full monoid).
fn small_semigroup() -> impl Strategy<Value = InverseSemigroup> {
    (2usize..=4)
        .prop_flat_map(|degree| prop::collection::vec(partial_bijection(degree), 1..=2)
            .prop_map(move |gens| (degree, gens)))
        .prop_map(|(degree, gens)| {
            from_partial_bijection_generators(degree, &gens, 20_000)
                .expect("closure of degree <= 4 fits any cap")
                .0
        })
}

/// A random congruence: the closure of a few random pairs.
fn congruence_on(order: usize) -> impl Strategy<Value = Vec<(usize, usize)>> {
    prop::collection::vec((0..order, 0..order), 0..=3)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn partial_bijections_satisfy_inverse_laws(
        (f, g, h) in (2usize..=5).prop_flat_map(|d| {
            (partial_bijection(d), partial_bijection(d), partial_bijection(d))
        })
    ) {
        prop_assert_eq!(f.compose(&g).compose(&h), f.compose(&g.compose(&h)));
        prop_assert_eq!(f.inverse().inverse(), f.clone());
        prop_assert_eq!(f.compose(&f.inverse()).compose(&f), f.clone());
        prop_assert_eq!(f.compose(&g).inverse(), g.inverse().compose(&f.inverse()));
    }

    #[test]
    fn generated_closures_validate(s in small_semigroup()) {
        // Regenerating from the produced table must pass every axiom check.
        let rows = s.rows();
        let rebuilt = InverseSemigroup::from_table(s.order(), &rows);
        prop_assert!(rebuilt.is_ok());
    }

    #[test]
    fn closure_is_monotone_and_idempotent(
        (s, pairs, extra) in small_semigroup().prop_flat_map(|s| {
            let n = s.order();
            (Just(s), congruence_on(n), congruence_on(n))
        })
    ) {
        let base = relations::congruence_closure(&s, &pairs);
        let mut widened_pairs = pairs.clone();
        widened_pairs.extend(&extra);
        let widened = relations::congruence_closure(&s, &widened_pairs);
        prop_assert!(base.leq(&widened), "closure must be monotone in its seed");

        let again = relations::congruence_closure(&s, &base.partition().generating_pairs());
        prop_assert_eq!(&again, &base, "closure must be idempotent");
    }

    #[test]
    fn natural_partial_order_is_two_sided(s in small_semigroup()) {
        for a in 0..s.order() {
            for b in 0..s.order() {
                prop_assert_eq!(s.natural_leq(a, b), s.natural_leq_right(a, b));
            }
        }
    }

    #[test]
    fn extremal_operators_bracket_their_argument(
        (s, pairs) in small_semigroup().prop_flat_map(|s| {
            let n = s.order();
            (Just(s), congruence_on(n))
        })
    ) {
        let rho = relations::congruence_closure(&s, &pairs);
        let mt = congruence::min_trace(&s, &rho);
        let xt = congruence::max_trace(&s, &rho);
        prop_assert!(mt.leq(&rho) && rho.leq(&xt));
        prop_assert_eq!(mt.trace(), rho.trace());
        prop_assert_eq!(xt.trace(), rho.trace());

        let mk = congruence::min_kernel(&s, &rho);
        prop_assert!(mk.leq(&rho));
        prop_assert_eq!(mk.kernel(), rho.kernel());
    }

    #[test]
    fn kernels_are_full_inverse_subsemigroups(
        (s, pairs) in small_semigroup().prop_flat_map(|s| {
            let n = s.order();
            (Just(s), congruence_on(n))
        })
    ) {
        let rho = relations::congruence_closure(&s, &pairs);
        let kernel = rho.kernel();
        for &e in s.idempotents() {
            prop_assert!(kernel.contains(&e), "kernel must contain every idempotent");
        }
        for &a in kernel {
            prop_assert!(kernel.contains(&s.inv(a)), "kernel must be closed under inversion");
            for &b in kernel {
                prop_assert!(
                    kernel.contains(&s.mul(a, b)),
                    "kernel must be closed under multiplication"
                );
            }
        }
    }

    #[test]
    fn quotient_pullback_round_trip(
        (s, pairs) in small_semigroup().prop_flat_map(|s| {
            let n = s.order();
            (Just(s), congruence_on(n))
        })
    ) {
        let rho = relations::congruence_closure(&s, &pairs);
        let (q, proj) = congruence::quotient(&s, &rho);
        prop_assert_eq!(q.order(), rho.class_count());
        let back = congruence::pullback(&s, &proj, &Congruence::identity(&q));
        prop_assert_eq!(&back, &rho);
        let top = congruence::pullback(&s, &proj, &Congruence::universal(&q));
        prop_assert!(top.is_universal());
    }

    #[test]
    fn meet_and_join_obey_lattice_laws(
        (s, p1, p2) in small_semigroup().prop_flat_map(|s| {
            let n = s.order();
            (Just(s), congruence_on(n), congruence_on(n))
        })
    ) {
        let a = relations::congruence_closure(&s, &p1);
        let b = relations::congruence_closure(&s, &p2);
        let m = congruence::meet(&s, &a, &b);
        let j = congruence::join(&s, &a, &b);
        prop_assert!(m.leq(&a) && m.leq(&b));
        prop_assert!(a.leq(&j) && b.leq(&j));
        prop_assert_eq!(&congruence::meet(&s, &b, &a), &m);
        prop_assert_eq!(&congruence::join(&s, &b, &a), &j);
        prop_assert_eq!(&congruence::meet(&s, &a, &j), &a, "absorption");
        prop_assert_eq!(&congruence::join(&s, &a, &m), &a, "absorption");
        prop_assert_eq!(&congruence::meet(&s, &a, &a), &a, "idempotence");
    }

    #[test]
    fn reconstruction_inverts_trace_kernel_extraction(
        (s, pairs) in small_semigroup().prop_flat_map(|s| {
            let n = s.order();
            (Just(s), congruence_on(n))
        })
    ) {
        let rho = relations::congruence_closure(&s, &pairs);
        let rebuilt = congruence::reconstruct(&s, rho.trace(), rho.kernel());
        prop_assert_eq!(rebuilt.expect("trace/kernel pair of a congruence"), rho);
    }

    #[test]
    fn canonical_labels_round_trip(labels in prop::collection::vec(0usize..5, 1..12)) {
        // Partitions renumber to first-appearance form; renumbering twice is
        // the identity.
        let p = Partition::from_labels(&labels);
        let relabeled: Vec<usize> = (0..p.len()).map(|x| p.label_of(x)).collect();
        let q = Partition::from_labels(&relabeled);
        prop_assert_eq!(p, q);
    }
}
