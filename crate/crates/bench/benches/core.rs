use criterion::{black_box, criterion_group, criterion_main, Criterion};
use uinf_core::props::{counterexample_element, jacobi_sides};
use uinf_core::{diamond, in_qinf, o_infty_gen, FockModule, FockVector, UElement};

fn modes(c: &mut Criterion) {
    let v = FockVector::monomial(&[2, 1]);
    let w = FockVector::monomial(&[2, 1, 1]);
    let m = FockModule::formal();
    c.bench_function("mode v_0 w", |b| b.iter(|| m.mode(black_box(&v), 0, black_box(&w)).unwrap()));
    let a = FockVector::monomial(&[3]);
    let t = FockVector::monomial(&[2, 2]);
    c.bench_function("jacobi sides weight 3, target degree 4", |b| {
        b.iter(|| jacobi_sides(&FockModule::formal(), &a, &a, (-2, 1, 2), black_box(&t)).unwrap())
    });
}

fn products(c: &mut Criterion) {
    let x = UElement::single(FockVector::monomial(&[2, 1]), 3, 2);
    let y = UElement::single(FockVector::monomial(&[1, 1, 1]), 2, 3);
    c.bench_function("diamond weight 3 at index 3", |b| b.iter(|| diamond(black_box(&x), black_box(&y)).unwrap()));
}

fn oracle(c: &mut Criterion) {
    let e4 = counterexample_element(4);
    let g = o_infty_gen(&FockVector::monomial(&[3]), &FockVector::monomial(&[2, 1]), 3, 3, 2).unwrap();
    c.bench_function("in_qinf E_4", |b| b.iter(|| in_qinf(black_box(&e4))));
    c.bench_function("in_qinf o-infty generator", |b| b.iter(|| in_qinf(black_box(&g))));
}

criterion_group!(benches, modes, products, oracle);
criterion_main!(benches);
