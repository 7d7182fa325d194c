use criterion::{black_box, criterion_group, criterion_main, Criterion};
use rgk::canon::canonical;
use rgk::colorings::{necessity_coloring, verify_no_blue_target};
use rgk::goodness::{decide_goodness, host_template, GoodnessOptions};
use rgk::graph::{complete, complete_multipartite, join, path};
use rgk::ramsey::{arrows, enumerate_graphs};
use rgk::trees::enumerate_free_trees;
use rgk::{find_embedding, GoodnessProblem, HostFamily, NecessityParams, PartSizes};

fn trees(c: &mut Criterion) {
    c.bench_function("free trees n=12", |b| b.iter(|| enumerate_free_trees(black_box(12)).unwrap()));
}

fn embedding(c: &mut Criterion) {
    let fan = join(&path(6).unwrap(), &complete(1).unwrap()).unwrap();
    let hosts: Vec<_> =
        enumerate_free_trees(7).unwrap().trees.iter().map(|t| host_template(7, 1, t).unwrap()).collect();
    c.bench_function("fan into 11 tree hosts", |b| {
        b.iter(|| hosts.iter().all(|h| find_embedding(black_box(&fan), h).is_some()))
    });
    let cherries = host_template(7, 1, &path(3).unwrap()).unwrap();
    c.bench_function("fan into cherry host (absent)", |b| b.iter(|| find_embedding(black_box(&fan), &cherries)));
    let prob = GoodnessProblem::new(fan, 60, 7, HostFamily::K1).unwrap();
    c.bench_function("decide goodness alpha=60", |b| {
        b.iter(|| decide_goodness(black_box(&prob), GoodnessOptions::default()).unwrap())
    });
}

fn colorings(c: &mut Criterion) {
    let params = NecessityParams::new(3, 2, 2, 6, 1, path(2).unwrap()).unwrap();
    let coloring = necessity_coloring(&params).unwrap();
    c.bench_function("blue target check N=23", |b| {
        b.iter(|| verify_no_blue_target(black_box(&coloring), &params.target_parts()).unwrap())
    });
    c.bench_function("canonical form N=23", |b| b.iter(|| canonical(black_box(coloring.red()))));
}

fn ramsey(c: &mut Criterion) {
    let mut group = c.benchmark_group("ramsey");
    group.sample_size(10);
    group.bench_function("classes on 7 vertices", |b| b.iter(|| enumerate_graphs(black_box(7)).unwrap()));
    let target =
        join(&complete_multipartite(&PartSizes::repeated(2, 3).unwrap()).unwrap(), &complete(1).unwrap()).unwrap();
    group.bench_function("K7 arrows (K12, K3(2)+K1)", |b| {
        b.iter(|| arrows(7, &path(3).unwrap(), black_box(&target)).unwrap())
    });
    group.finish();
}

criterion_group!(benches, trees, embedding, colorings, ramsey);
criterion_main!(benches);
