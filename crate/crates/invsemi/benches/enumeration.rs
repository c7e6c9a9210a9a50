//! Benchmarks for the hot paths, each measured inside a one-thread rayon
//! pool and the default pool. With the `parallel` feature enabled (the
//! default) the two arms compare the data-parallel scans against the same
//! code pinned to one worker; with the feature disabled both arms measure
//! the sequential fallback, so the comparison still has meaning.

use criterion::{criterion_group, criterion_main, Criterion};
use invsemi::catalog::{self, build_symmetric_inverse_monoid};
use invsemi::lattice::enumerate_congruence_lattice;
use invsemi::network::MinNetwork;
use invsemi::relations::congruence_closure;
use invsemi::semigroup::InverseSemigroup;
use invsemi::verify::relative_suites_over_lattice;
use std::hint::black_box;

fn bench_in_pools(c: &mut Criterion, name: &str, mut work: impl FnMut() + Send) {
    let one = rayon::ThreadPoolBuilder::new()
        .num_threads(1)
        .build()
        .expect("pool builds");
    let mut group = c.benchmark_group(name);
    group.sample_size(20);
    group.bench_function("threads-1", |b| b.iter(|| one.install(&mut work)));
    group.bench_function("threads-default", |b| b.iter(&mut work));
    group.finish();
}

fn semigroup(name: &str) -> InverseSemigroup {
    catalog::by_name(name).expect("bundled entry").semigroup
}

fn benches(c: &mut Criterion) {
    let i4 = build_symmetric_inverse_monoid(4).expect("degree four builds");
    let i4_rows = i4.rows();
    bench_in_pools(c, "validate-degree-four-monoid", || {
        black_box(InverseSemigroup::from_table(209, &i4_rows).expect("valid"));
    });

    let b2xc2 = semigroup("B2xC2");
    bench_in_pools(c, "lattice-order-10", || {
        black_box(enumerate_congruence_lattice(&b2xc2, 40).expect("within cap"));
    });

    let i3 = semigroup("I3");
    bench_in_pools(c, "lattice-order-34", || {
        black_box(enumerate_congruence_lattice(&i3, 40).expect("within cap"));
    });

    bench_in_pools(c, "network-order-34", || {
        black_box(MinNetwork::compute(&i3, 16).expect("stabilizes"));
    });

    bench_in_pools(c, "closure-single-pair-order-34", || {
        black_box(congruence_closure(&i3, &[(0, 1)]));
    });

    let i2 = semigroup("I2");
    let i2_lattice = enumerate_congruence_lattice(&i2, 40).expect("within cap");
    bench_in_pools(c, "relative-suites-order-7", || {
        black_box(relative_suites_over_lattice(&i2, &i2_lattice, 1));
    });
}

criterion_group!(suite, benches);
criterion_main!(suite);
