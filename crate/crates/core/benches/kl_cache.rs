use criterion::{black_box, criterion_group, criterion_main, Criterion};

use vogan_core::enumerate::block_lambda;
use vogan_core::geometry::build_orbit_space;
use vogan_core::kl::{m_matrix, read_cache, write_cache, KlEngine};
use vogan_core::OrbitSpace;

fn spaces() -> Vec<OrbitSpace> {
    [vec![1; 8], vec![2, 2, 2], vec![1, 2, 2, 1], vec![3, 3]]
        .iter()
        .map(|m| build_orbit_space(&block_lambda(m), 12).unwrap())
        .collect()
}

fn bench(c: &mut Criterion) {
    let spaces = spaces();
    let seed = KlEngine::new();
    for s in &spaces {
        m_matrix(s, &seed).unwrap();
    }
    let cache = write_cache(&seed);

    let mut g = c.benchmark_group("m_matrix");
    g.sample_size(20);
    g.bench_function("cold", |b| {
        b.iter(|| {
            let e = KlEngine::new();
            for s in &spaces {
                black_box(m_matrix(s, &e).unwrap());
            }
        })
    });
    g.bench_function("warm", |b| {
        b.iter(|| {
            let e = KlEngine::new();
            read_cache(&e, &cache).unwrap();
            for s in &spaces {
                black_box(m_matrix(s, &e).unwrap());
            }
        })
    });
    g.finish();
}

criterion_group!(benches, bench);
criterion_main!(benches);
