use criterion::{criterion_group, criterion_main, Criterion};
use std::hint::black_box;

use sqdeform::deformation::theorem_check;
use sqdeform::gamma::{connectedness_dimension_graphwise, PrimeFamily};
use sqdeform::Engine;
use sqdeform_bench::{corpus_entry, cycle_edge_ideal, squarefree_veronese};

fn groebner(c: &mut Criterion) {
    let engine = Engine::default();
    for id in ["twisted_cubic_projective", "det2x3"] {
        let e = corpus_entry(id);
        let (ideal, order) = (e.ideal().unwrap(), e.order().unwrap());
        c.bench_function(&format!("groebner/{id}"), |b| {
            b.iter(|| engine.groebner(black_box(&ideal), &order).unwrap())
        });
    }
}

fn deform_check(c: &mut Criterion) {
    let engine = Engine::default();
    for id in ["det2x3", "skew_lines"] {
        let input = corpus_entry(id).to_input().unwrap();
        c.bench_function(&format!("theorem_check/{id}"), |b| {
            b.iter(|| theorem_check(&engine, black_box(&input)).unwrap())
        });
    }
}

fn covers(c: &mut Criterion) {
    let ideal = cycle_edge_ideal(12);
    c.bench_function("minimal_primes/c12", |b| b.iter(|| black_box(&ideal).minimal_primes().unwrap()));
    let family = PrimeFamily::from_monomial(&squarefree_veronese(8, 6)).unwrap();
    c.bench_function("connectedness/veronese_8_6", |b| b.iter(|| connectedness_dimension_graphwise(black_box(&family))));
}

criterion_group!(benches, groebner, deform_check, covers);
criterion_main!(benches);
