// Full check suite per fixture. `cargo bench` measures the rayon build,
// and a one-thread pool inside the same build for reference;
// `cargo bench --no-default-features` measures the sequential fallback
// under the same ids, so criterion reports the change against the saved run.

use criterion::{black_box, criterion_group, criterion_main, BenchmarkId, Criterion};
use gsilt::par;
use gsilt::verify::{Parameters, Session};

const FIXTURES: [&str; 3] = ["kx2", "a2", "kx3"];

fn suite(name: &str) -> usize {
    let s = Session::open(name, Parameters::default()).unwrap();
    s.run_suite().len()
}

fn bench_suite(c: &mut Criterion) {
    let mut group = c.benchmark_group("suite");
    group.sample_size(10);
    for name in FIXTURES {
        // same id in both builds; the build decides what runs
        group.bench_with_input(BenchmarkId::new("default", name), &name, |b, &name| b.iter(|| black_box(suite(name))));
        #[cfg(feature = "parallel")]
        {
            let one = rayon::ThreadPoolBuilder::new().num_threads(1).build().unwrap();
            group.bench_with_input(BenchmarkId::new("one_thread", name), &name, |b, &name| {
                b.iter(|| one.install(|| black_box(suite(name))))
            });
        }
    }
    group.finish();
    eprintln!("suite bench ran with parallel = {}", par::is_parallel());
}

criterion_group!(benches, bench_suite);
criterion_main!(benches);
