use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};

use berger_core::criteria::{screen_range_with, RangeBounds};
use berger_core::curvature::{curvature_report, CurvatureOptions};
use berger_core::matalg::catalog;
use berger_core::Parallelism;

const MODES: [(&str, Parallelism); 2] = [("sequential", Parallelism::Sequential), ("parallel", Parallelism::Parallel)];

fn screening(c: &mut Criterion) {
    let mut g = c.benchmark_group("screen_range");
    g.sample_size(10);
    for (max_rank, max_dim) in [(4, 500), (6, 300)] {
        let b = RangeBounds::new(max_rank, max_dim);
        for (label, mode) in MODES {
            g.bench_with_input(BenchmarkId::new(label, format!("rank{max_rank}_dim{max_dim}")), &b, |bench, b| {
                bench.iter(|| screen_range_with(b, mode))
            });
        }
    }
    g.finish();
}

fn curvature(c: &mut Criterion) {
    let mut g = c.benchmark_group("curvature_report");
    g.sample_size(10);
    for name in ["so(7)", "sym2_0(g2_7)"] {
        let r = catalog(name).expect("catalog entry");
        for (label, mode) in MODES {
            let opts = CurvatureOptions { parallelism: mode, ..Default::default() };
            g.bench_with_input(BenchmarkId::new(label, name), &r, |bench, r| {
                bench.iter(|| curvature_report(r, &opts).expect("report"))
            });
        }
    }
    g.finish();
}

criterion_group!(benches, screening, curvature);
criterion_main!(benches);
