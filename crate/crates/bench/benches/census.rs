use criterion::{black_box, criterion_group, criterion_main, Criterion};
use twobridge::{
    dt_from_presentation, dt_via_traversal, enumerate_umn, knot_class, run_census, CensusOptions,
    ConwaySequence, UmnSpec,
};

fn enumeration(c: &mut Criterion) {
    let mut group = c.benchmark_group("enumerate");
    for (m, n) in [(20, 10), (24, 8), (28, 14)] {
        let spec = UmnSpec::new(m, n).unwrap();
        group.bench_function(format!("U^{{{m},{n}}}"), |b| {
            b.iter(|| enumerate_umn(black_box(spec)).count())
        });
    }
    group.finish();
}

fn dt_codes(c: &mut Criterion) {
    let reps: Vec<ConwaySequence> = enumerate_umn(UmnSpec::new(16, 6).unwrap()).collect();
    let mut group = c.benchmark_group("dt code, U^{16,6}");
    group.bench_function("closed form", |b| {
        b.iter(|| reps.iter().map(|p| dt_from_presentation(p).unwrap().len()).sum::<usize>())
    });
    group.bench_function("traversal", |b| {
        b.iter(|| reps.iter().map(|p| dt_via_traversal(p).unwrap().len()).sum::<usize>())
    });
    group.finish();
}

fn classification(c: &mut Criterion) {
    let reps: Vec<ConwaySequence> = enumerate_umn(UmnSpec::new(20, 8).unwrap()).collect();
    c.bench_function("classify U^{20,8}", |b| {
        b.iter(|| {
            reps.iter()
                .map(|p| knot_class(p).unwrap().crossing_number())
                .max()
        })
    });
}

fn census(c: &mut Criterion) {
    let mut group = c.benchmark_group("census");
    group.sample_size(10);
    for max_c in [10, 13, 16] {
        group.bench_function(format!("max_c={max_c}"), |b| {
            b.iter(|| run_census(CensusOptions::new(black_box(max_c))).unwrap().records.len())
        });
    }
    group.finish();
}

criterion_group!(benches, enumeration, dt_codes, classification, census);
criterion_main!(benches);
