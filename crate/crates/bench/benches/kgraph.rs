use criterion::{black_box, criterion_group, criterion_main, Criterion};
use kgraph::corpus::corpus;
use kgraph::ktheory::{k_groups_with, KOptions, Mode};
use kgraph::words::{check_rs, RsOptions};
use kgraph::{dual, fixtures, smith_normal_form, Degree, IntMatrix};

fn scrambled(rows: usize, cols: usize) -> IntMatrix {
    let data: Vec<Vec<i64>> = (0..rows)
        .map(|i| (0..cols).map(|j| ((i * 7 + j * 13 + i * j) % 11) as i64 - 5).collect())
        .collect();
    IntMatrix::from_rows(&data)
}

fn snf(c: &mut Criterion) {
    for (r, k) in [(4, 6), (8, 16), (16, 32)] {
        let a = scrambled(r, k);
        c.bench_function(&format!("snf {r}x{k}"), |b| b.iter(|| smith_normal_form(black_box(&a))));
    }
}

fn duals(c: &mut Criterion) {
    let tors = fixtures::tors();
    for p in [[1, 1], [2, 2]] {
        let p = Degree::new(p.to_vec());
        c.bench_function(&format!("dual TORS {p}"), |b| b.iter(|| dual(black_box(&tors), &p).unwrap()));
    }
}

fn ktheory(c: &mut Criterion) {
    let graphs = corpus(1, 8);
    let opts = KOptions::groups_only();
    c.bench_function("k_groups dual mode, 8 corpus graphs", |b| {
        b.iter(|| {
            for g in &graphs {
                black_box(k_groups_with(g, Mode::Dual, &opts).unwrap());
            }
        })
    });
    let one = dual(&fixtures::tors(), &Degree::ones(2)).unwrap().graph;
    let rs = RsOptions::default();
    c.bench_function("check_rs TORS 1-dual", |b| b.iter(|| check_rs(black_box(&one), &rs).unwrap()));
}

criterion_group!(benches, snf, duals, ktheory);
criterion_main!(benches);
