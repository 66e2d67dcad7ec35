use std::hint::black_box;

use criterion::{criterion_group, criterion_main, Criterion};
use permstat::bijections::{phi, theta_prime};
use permstat::distributions::{scan_quadruples, AvoidanceClass, DistributionTable, Statistic};
use permstat::patterns::registry;
use permstat::Perm;

fn class(pattern: &str, n: usize) -> Vec<Perm> {
    AvoidanceClass::avoiding(pattern.parse().unwrap(), n)
        .unwrap()
        .members()
}

fn counting(c: &mut Criterion) {
    let hosts: Vec<Perm> = Perm::all(8).collect();
    let foze2 = registry().lookup("foze2").unwrap();
    c.bench_function("foze2 over S_8", |b| {
        b.iter(|| {
            hosts
                .iter()
                .map(|p| foze2.evaluate(black_box(p)))
                .sum::<u64>()
        })
    });
}

fn enumeration(c: &mut Criterion) {
    c.bench_function("Av_11(231)", |b| {
        b.iter(|| class(black_box("231"), 11).len())
    });
    c.bench_function("Av_9(2413)", |b| {
        b.iter(|| class(black_box("2413"), 9).len())
    });
}

fn bijections(c: &mut Criterion) {
    let av = class("231", 10);
    c.bench_function("phi over Av_10(231)", |b| {
        b.iter(|| {
            av.iter().for_each(|p| {
                black_box(phi(p).unwrap());
            })
        })
    });
    let prime = AvoidanceClass::avoiding_leading_max("231".parse().unwrap(), 10)
        .unwrap()
        .members();
    c.bench_function("theta' over Av'_10(231)", |b| {
        b.iter(|| {
            prime.iter().for_each(|p| {
                black_box(theta_prime(p).unwrap());
            })
        })
    });
}

fn tally(c: &mut Criterion) {
    let members = class("312", 11);
    let stats = Statistic::resolve_list("foze2,mad").unwrap();
    for workers in [1, 4] {
        c.bench_function(
            &format!("tally (foze2,mad) Av_11(312), {workers} workers"),
            |b| b.iter(|| DistributionTable::tally("312", 11, &stats, &members, workers)),
        );
    }
}

fn scan(c: &mut Criterion) {
    let stats: Vec<Statistic> = registry()
        .iter()
        .map(|d| Statistic::resolve(d.alias()).unwrap())
        .collect();
    let patterns: Vec<Perm> = ["123", "132", "213", "231", "312", "321"]
        .iter()
        .map(|s| s.parse().unwrap())
        .collect();
    let mut g = c.benchmark_group("scan");
    g.sample_size(10);
    g.bench_function("registry x 3-patterns, n <= 7", |b| {
        b.iter(|| scan_quadruples(&stats, &patterns, 7).unwrap())
    });
    g.finish();
}

criterion_group!(benches, counting, enumeration, bijections, tally, scan);
criterion_main!(benches);
