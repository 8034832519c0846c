use criterion::{criterion_group, criterion_main, Criterion};
use ravenel_core::cohomology::{CoefficientProfile, CohomologyEngine};
use ravenel_core::suite::run_check;
use ravenel_core::{FpMatrix, Monomial, PrimeModulus, RavenelComplex, SkeletonCells, TodaTable};
use std::hint::black_box;

fn rank(c: &mut Criterion) {
    let p = PrimeModulus::new(7).unwrap();
    let rows: Vec<Vec<i64>> = (0..120)
        .map(|r| {
            (0..120)
                .map(|k| ((r * 31 + k * 17 + r * k) % 7) as i64)
                .collect()
        })
        .collect();
    let m = FpMatrix::from_signed_rows(&rows, p);
    c.bench_function("rank 120x120 mod 7", |b| b.iter(|| black_box(&m).rank(p)));
}

fn complex(c: &mut Criterion) {
    c.bench_function("build C(4) basis table, p=7", |b| {
        b.iter(|| {
            let cx = RavenelComplex::new(7, 4).unwrap();
            black_box(cx.dimension(13, 12))
        })
    });
    let cx = RavenelComplex::new(7, 4).unwrap();
    cx.dimension(0, 0);
    c.bench_function("d on all 2^16 monomials of C(4)", |b| {
        b.iter(|| {
            (0..1u64 << 16)
                .map(|m| cx.diff_monomial_terms(Monomial::from_mask(m)).len())
                .sum::<usize>()
        })
    });
    let engine = CohomologyEngine::new(&cx);
    c.bench_function("H^{13,12} C(4)", |b| {
        b.iter(|| {
            engine
                .slice_cohomology(&CoefficientProfile::MoravaK, 13, 12)
                .unwrap()
        })
    });
    let c5 = RavenelComplex::new(5, 5).unwrap();
    c.bench_function("C(5)^{5,0} via split tables, p=5", |b| {
        b.iter(|| c5.dimension(5, 0))
    });
}

fn tables(c: &mut Criterion) {
    c.bench_function("generator table p=7 to 1591", |b| {
        b.iter(|| TodaTable::full(7).unwrap())
    });
    let t = TodaTable::full(7).unwrap();
    let z3 = SkeletonCells::new(7, 3).unwrap();
    c.bench_function("low-cell scan p=7", |b| {
        b.iter(|| {
            t.vanishing_scan(&z3.at_most(686), &z3.to_vec(), -1)
                .unwrap()
        })
    });
}

fn suite(c: &mut Criterion) {
    c.bench_function("check duality_slices", |b| {
        b.iter(|| run_check("duality_slices").unwrap())
    });
}

criterion_group!(benches, rank, complex, tables, suite);
criterion_main!(benches);
