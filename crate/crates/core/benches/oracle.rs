use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use vincular::{ConstraintSpec, Oracle, Permutation, Schedule};

fn specs() -> Vec<(&'static str, ConstraintSpec, usize)> {
    vec![
        ("avoid 1-3-2", ConstraintSpec::avoiding_str("1-3-2").unwrap(), 10),
        ("avoid 123,231", ConstraintSpec::avoiding_str("123,231").unwrap(), 10),
        (
            "avoid 123 begin 21 end 12",
            ConstraintSpec::avoiding_str("123")
                .unwrap()
                .with_begin(Permutation::decreasing(2))
                .unwrap()
                .with_end(Permutation::increasing(2))
                .unwrap(),
            9,
        ),
        (
            "exactly one 12-3",
            ConstraintSpec::new().with_exactly("12-3".parse().unwrap(), 1).unwrap(),
            9,
        ),
    ]
}

fn schedules(c: &mut Criterion) {
    let oracle = Oracle::new();
    let mut group = c.benchmark_group("oracle");
    group.sample_size(10);
    for (name, spec, n) in specs() {
        for (label, schedule) in [("sequential", Schedule::Sequential), ("parallel", Schedule::Parallel)] {
            group.bench_with_input(BenchmarkId::new(label, name), &n, |b, &n| {
                b.iter(|| oracle.count_with(&spec, n, schedule).unwrap())
            });
        }
    }
    group.finish();
}

criterion_group!(benches, schedules);
criterion_main!(benches);
