//! Bilinears evaluated by brute-force 4x4 products with the gamma matrices,
//! checked against the block-contraction implementation.

use lounesto_core::sampling::{draw_rng, random_spec};
use lounesto_core::{
    bilinears, build, build_rest, fpk_residuals, gamma_basis, BilinearSet, DiracSpinor, FourVector,
    GammaBasis, PhasePair, SpinorKind, SpinorSpec, C64,
};
use nalgebra::{Matrix4, Vector4};
use rand::Rng;

fn sandwich(psi: &Vector4<C64>, gamma: &Matrix4<C64>, g0: &Matrix4<C64>) -> C64 {
    let bar = psi.adjoint() * g0;
    (bar * gamma * psi)[(0, 0)]
}

fn oracle(psi: &DiracSpinor) -> BilinearSet {
    thread_local!(static BASIS: GammaBasis = gamma_basis());
    BASIS.with(|g| oracle_with(g, psi))
}

#[allow(clippy::needless_range_loop)]
fn oracle_with(g: &GammaBasis, psi: &DiracSpinor) -> BilinearSet {
    let v = psi.amplitudes();
    let sandwich = |m: &Matrix4<C64>| sandwich(v, m, &g.gamma[0]);
    let i = C64::new(0.0, 1.0);
    let mut j = [C64::new(0.0, 0.0); 4];
    let mut k = [C64::new(0.0, 0.0); 4];
    let mut s = [[C64::new(0.0, 0.0); 4]; 4];
    for mu in 0..4 {
        j[mu] = sandwich(&g.gamma[mu]);
        k[mu] = sandwich(&(g.gamma5 * g.gamma[mu]));
        for nu in 0..4 {
            let comm = g.gamma[mu] * g.gamma[nu] - g.gamma[nu] * g.gamma[mu];
            s[mu][nu] = sandwich(&(comm * (i * 0.5)));
        }
    }
    BilinearSet {
        sigma: sandwich(&g.identity),
        omega: i * sandwich(&g.gamma5),
        j: FourVector::from_components(j),
        k: FourVector::from_components(k),
        s,
    }
}

fn max_diff(a: &BilinearSet, b: &BilinearSet) -> f64 {
    let mut d = (a.sigma - b.sigma).norm().max((a.omega - b.omega).norm());
    for (x, y) in a.j.components().iter().zip(b.j.components()) {
        d = d.max((x - y).norm());
    }
    for (x, y) in a.k.components().iter().zip(b.k.components()) {
        d = d.max((x - y).norm());
    }
    for mu in 0..4 {
        for nu in 0..4 {
            d = d.max((a.s[mu][nu] - b.s[mu][nu]).norm());
        }
    }
    d
}

fn c(re: f64, im: f64) -> C64 {
    C64::new(re, im)
}

#[test]
fn block_route_matches_matrix_route_on_arbitrary_spinors() {
    for idx in 0..2000 {
        let mut rng = draw_rng(17, 0, idx);
        let mut amp = [c(0.0, 0.0); 4];
        for a in amp.iter_mut() {
            *a = c(rng.gen_range(-3.0..3.0), rng.gen_range(-3.0..3.0));
        }
        let psi = DiracSpinor::new(amp);
        let scale = psi.norm_sqr();
        assert!(
            max_diff(&bilinears(&psi), &oracle(&psi)) <= 1e-13 * scale,
            "draw {idx}"
        );
    }
}

#[test]
fn frozen_rest_frame_values() {
    // single helicity, m = 1, theta = phi = 0: sigma = 2 Re(a* b), omega = 2 Im(a* b)
    let single = |a: C64, b: C64| {
        oracle(
            &build_rest(&SpinorSpec::at_rest(
                SpinorKind::SingleHelicityPlus,
                1.0,
                PhasePair::new(a, b),
            ))
            .unwrap(),
        )
    };
    let b = single(c(1.0, 0.0), c(1.0, 0.0));
    assert!((b.sigma - c(2.0, 0.0)).norm() < 1e-15 && b.omega.norm() < 1e-15);
    let b = single(c(1.0, 0.0), c(0.0, 1.0));
    assert!(b.sigma.norm() < 1e-15 && (b.omega - c(2.0, 0.0)).norm() < 1e-15);

    for (a, bb) in [
        (c(1.0, 0.0), c(1.0, 0.0)),
        (c(2.0, -1.0), c(0.3, 0.7)),
        (c(0.0, 1.0), c(5.0, 0.0)),
    ] {
        let spec = SpinorSpec::at_rest(SpinorKind::DualHelicityMinus, 1.0, PhasePair::new(a, bb));
        let o = oracle(&build_rest(&spec).unwrap());
        assert!(o.sigma.norm() < 1e-14 && o.omega.norm() < 1e-14);
    }
}

#[test]
fn fpk_identities_hold_on_oracle_bilinears() {
    for idx in 0..10_000 {
        let mut rng = draw_rng(23, 1, idx);
        let spec = random_spec(&mut rng, 10.0);
        let psi = build(&spec).unwrap();
        let o = oracle(&psi);
        let scale2 = o.j.t.re * o.j.t.re;
        let r = fpk_residuals(&o);
        assert!(r.max() <= 1e-9 * scale2, "draw {idx}: {r:?}");
        assert!(o.j.max_abs_imag() <= 1e-10 * o.j.t.re);
        assert!(o.k.max_abs_imag() <= 1e-10 * o.j.t.re);
        if spec.kind.is_dual() {
            let jj = lounesto_core::minkowski_dot(&o.j, &o.j);
            assert!(jj.norm() <= 1e-9 * scale2);
        }
    }
}
