//! Gamma-matrix conventions and the bilinear covariants of a Dirac spinor.
//!
//! Conventions used throughout the crate:
//!
//! * metric signature `(+, -, -, -)`;
//! * chiral (Weyl) basis with the right-handed 2-block on top, so a spinor is
//!   `psi = (u, v)` with `u` right-handed and `v` left-handed;
//! * `gamma^0 = [[0, 1], [1, 0]]`, `gamma^i = [[0, -sigma^i], [sigma^i, 0]]`,
//!   `gamma^5 = diag(1, -1)`.
//!
//! With these blocks the momentum-space Dirac operator reads
//! `E [[0, 1], [1, 0]] + p [[0, sigma.n], [-sigma.n, 0]]`.
//!
//! The covariants are
//!
//! ```text
//! sigma   = psibar psi
//! omega   = i psibar gamma^5 psi
//! J^mu    = psibar gamma^mu psi
//! K^mu    = psibar gamma^5 gamma^mu psi
//! S^munu  = (i/2) psibar [gamma^mu, gamma^nu] psi
//! ```
//!
//! [`bilinears`] evaluates them through 2-component block contractions; the
//! full 4x4 matrices from [`gamma_basis`] are kept for the Dirac operator and
//! for cross-checking.

use nalgebra::{Matrix2, Matrix4, RowVector4, Vector2};
use num_complex::Complex64;
use serde::Serialize;

use crate::spinor::DiracSpinor;

pub type C64 = Complex64;

const ZERO: C64 = C64::new(0.0, 0.0);
const ONE: C64 = C64::new(1.0, 0.0);
const I: C64 = C64::new(0.0, 1.0);

/// Minkowski metric diagonal.
pub const METRIC: [f64; 4] = [1.0, -1.0, -1.0, -1.0];

/// The three Pauli matrices.
pub fn pauli() -> [Matrix2<C64>; 3] {
    [
        Matrix2::new(ZERO, ONE, ONE, ZERO),
        Matrix2::new(ZERO, -I, I, ZERO),
        Matrix2::new(ONE, ZERO, ZERO, -ONE),
    ]
}

/// Assemble a 4x4 matrix from four 2x2 blocks.
pub(crate) fn blocks(
    tl: &Matrix2<C64>,
    tr: &Matrix2<C64>,
    bl: &Matrix2<C64>,
    br: &Matrix2<C64>,
) -> Matrix4<C64> {
    let mut m = Matrix4::zeros();
    m.fixed_view_mut::<2, 2>(0, 0).copy_from(tl);
    m.fixed_view_mut::<2, 2>(0, 2).copy_from(tr);
    m.fixed_view_mut::<2, 2>(2, 0).copy_from(bl);
    m.fixed_view_mut::<2, 2>(2, 2).copy_from(br);
    m
}

#[derive(Debug, Clone, PartialEq)]
pub struct GammaBasis {
    /// `gamma^0 .. gamma^3`, upper index.
    pub gamma: [Matrix4<C64>; 4],
    pub gamma5: Matrix4<C64>,
    pub identity: Matrix4<C64>,
}

impl GammaBasis {
    /// Spin matrix `(i/2)[gamma^mu, gamma^nu]`.
    pub fn sigma_munu(&self, mu: usize, nu: usize) -> Matrix4<C64> {
        let g = &self.gamma;
        (g[mu] * g[nu] - g[nu] * g[mu]) * C64::new(0.0, 0.5)
    }
}

/// The fixed chiral gamma basis.
pub fn gamma_basis() -> GammaBasis {
    let z = Matrix2::<C64>::zeros();
    let one = Matrix2::<C64>::identity();
    let [s1, s2, s3] = pauli();
    let spatial = |s: &Matrix2<C64>| blocks(&z, &(-s), s, &z);
    GammaBasis {
        gamma: [
            blocks(&z, &one, &one, &z),
            spatial(&s1),
            spatial(&s2),
            spatial(&s3),
        ],
        gamma5: blocks(&one, &z, &z, &(-one)),
        identity: Matrix4::identity(),
    }
}

/// Contravariant four-vector with complex components.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct FourVector {
    pub t: C64,
    pub x: C64,
    pub y: C64,
    pub z: C64,
}

impl FourVector {
    pub fn new(t: C64, x: C64, y: C64, z: C64) -> Self {
        Self { t, x, y, z }
    }

    pub fn real(t: f64, x: f64, y: f64, z: f64) -> Self {
        Self::new(t.into(), x.into(), y.into(), z.into())
    }

    pub fn components(&self) -> [C64; 4] {
        [self.t, self.x, self.y, self.z]
    }

    pub fn from_components(c: [C64; 4]) -> Self {
        Self::new(c[0], c[1], c[2], c[3])
    }

    /// Euclidean norm of the four complex components.
    pub fn euclidean_norm(&self) -> f64 {
        self.components().iter().map(|c| c.norm_sqr()).sum::<f64>().sqrt()
    }

    pub fn max_abs_imag(&self) -> f64 {
        self.components().iter().map(|c| c.im.abs()).fold(0.0, f64::max)
    }
}

pub fn minkowski_dot(a: &FourVector, b: &FourVector) -> C64 {
    a.t * b.t - a.x * b.x - a.y * b.y - a.z * b.z
}

/// The covariants `{sigma, omega, J, K, S}` of one spinor.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct BilinearSet {
    pub sigma: C64,
    pub omega: C64,
    pub j: FourVector,
    pub k: FourVector,
    /// `S^{mu nu}`, antisymmetric.
    pub s: [[C64; 4]; 4],
}

impl BilinearSet {
    pub fn zero() -> Self {
        Self {
            sigma: ZERO,
            omega: ZERO,
            j: FourVector::real(0.0, 0.0, 0.0, 0.0),
            k: FourVector::real(0.0, 0.0, 0.0, 0.0),
            s: [[ZERO; 4]; 4],
        }
    }

    /// `J^0`, the positive scale every vanishing test is measured against.
    pub fn scale(&self) -> f64 {
        self.j.t.re
    }

    pub fn s_frobenius(&self) -> f64 {
        self.s.iter().flatten().map(|c| c.norm_sqr()).sum::<f64>().sqrt()
    }

    /// The six independent entries `S^{01}, S^{02}, S^{03}, S^{12}, S^{13}, S^{23}`.
    pub fn s_independent(&self) -> [C64; 6] {
        let s = &self.s;
        [s[0][1], s[0][2], s[0][3], s[1][2], s[1][3], s[2][3]]
    }
}

/// `psibar = psi^dagger gamma^0`, as a row.
pub fn dirac_adjoint(psi: &DiracSpinor) -> RowVector4<C64> {
    let a = psi.amplitudes();
    // gamma^0 swaps the chiral blocks.
    RowVector4::new(a[2].conj(), a[3].conj(), a[0].conj(), a[1].conj())
}

fn inner(a: &Vector2<C64>, b: &Vector2<C64>) -> C64 {
    a.dotc(b)
}

fn sandwich(a: &Vector2<C64>, m: &Matrix2<C64>, b: &Vector2<C64>) -> C64 {
    a.dotc(&(m * b))
}

pub fn bilinears(psi: &DiracSpinor) -> BilinearSet {
    let u = psi.upper();
    let v = psi.lower();
    let pauli = pauli();

    let uv = inner(&u, &v);
    let vu = inner(&v, &u);
    let uu = inner(&u, &u);
    let vv = inner(&v, &v);

    let sigma = uv + vu;
    let omega = I * (vu - uv);

    let mut j = [uu + vv, ZERO, ZERO, ZERO];
    let mut k = [vv - uu, ZERO, ZERO, ZERO];
    let mut s = [[ZERO; 4]; 4];
    let mut cross = [ZERO; 3];
    for (i, p) in pauli.iter().enumerate() {
        let upu = sandwich(&u, p, &u);
        let vpv = sandwich(&v, p, &v);
        let upv = sandwich(&u, p, &v);
        let vpu = sandwich(&v, p, &u);
        j[i + 1] = upu - vpv;
        k[i + 1] = -(upu + vpv);
        // S^{0i}
        let s0i = I * (vpu - upv);
        s[0][i + 1] = s0i;
        s[i + 1][0] = -s0i;
        cross[i] = upv + vpu;
    }
    // S^{ij} = eps_{ijk} (u^dag sigma_k v + v^dag sigma_k u)
    for (a, b, c) in [(0, 1, 2), (1, 2, 0), (2, 0, 1)] {
        s[a + 1][b + 1] = cross[c];
        s[b + 1][a + 1] = -cross[c];
    }

    BilinearSet {
        sigma,
        omega,
        j: FourVector::from_components(j),
        k: FourVector::from_components(k),
        s,
    }
}

/// Fierz-Pauli-Kofink residuals.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct FpkResiduals {
    /// `|J.J - (sigma^2 + omega^2)|`
    pub r1: f64,
    /// `|J.K|`
    pub r2: f64,
    /// `|K.K + (sigma^2 + omega^2)|`
    pub r3: f64,
}

impl FpkResiduals {
    pub fn max(&self) -> f64 {
        self.r1.max(self.r2).max(self.r3)
    }
}

pub fn fpk_residuals(b: &BilinearSet) -> FpkResiduals {
    let sq = b.sigma.re * b.sigma.re + b.omega.re * b.omega.re;
    FpkResiduals {
        r1: (minkowski_dot(&b.j, &b.j) - sq).norm(),
        r2: minkowski_dot(&b.j, &b.k).norm(),
        r3: (minkowski_dot(&b.k, &b.k) + sq).norm(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn max_abs(m: &Matrix4<C64>) -> f64 {
        m.iter().map(|c| c.norm()).fold(0.0, f64::max)
    }

    #[test]
    #[allow(clippy::needless_range_loop)]
    fn clifford_relations() {
        let g = gamma_basis();
        for mu in 0..4 {
            for nu in 0..4 {
                let anti = g.gamma[mu] * g.gamma[nu] + g.gamma[nu] * g.gamma[mu];
                let eta = if mu == nu { METRIC[mu] } else { 0.0 };
                let expected = g.identity * C64::from(2.0 * eta);
                assert!(max_abs(&(anti - expected)) <= 1e-14, "mu={mu} nu={nu}");
            }
            let anti5 = g.gamma5 * g.gamma[mu] + g.gamma[mu] * g.gamma5;
            assert!(max_abs(&anti5) <= 1e-14);
        }
        assert!(max_abs(&(g.gamma5 * g.gamma5 - g.identity)) <= 1e-14);
    }

    #[test]
    fn gamma0_block_layout() {
        let g = gamma_basis();
        let g0 = g.gamma[0];
        for r in 0..2 {
            for c in 0..2 {
                assert_eq!(g0[(r, c)], ZERO);
                assert_eq!(g0[(r + 2, c + 2)], ZERO);
                let id = if r == c { ONE } else { ZERO };
                assert_eq!(g0[(r, c + 2)], id);
                assert_eq!(g0[(r + 2, c)], id);
            }
        }
        let anti12 = g.gamma[1] * g.gamma[2] + g.gamma[2] * g.gamma[1];
        assert_eq!(max_abs(&anti12), 0.0);
        // gamma^5 = diag(1, 1, -1, -1) and agrees with i g0 g1 g2 g3 up to sign
        let prod = g.gamma[0] * g.gamma[1] * g.gamma[2] * g.gamma[3] * I;
        assert!(max_abs(&(prod - g.gamma5)) < 1e-15 || max_abs(&(prod + g.gamma5)) < 1e-15);
    }

    #[test]
    fn adjoint_examples() {
        let c = |re, im| C64::new(re, im);
        let cases = [
            ([c(1., 0.), ZERO, ZERO, ZERO], [ZERO, ZERO, c(1., 0.), ZERO]),
            ([ZERO, ZERO, c(0., 1.), ZERO], [c(0., -1.), ZERO, ZERO, ZERO]),
            (
                [c(1., 0.), ZERO, c(1., 0.), ZERO],
                [c(1., 0.), ZERO, c(1., 0.), ZERO],
            ),
        ];
        for (input, expected) in cases {
            let bar = dirac_adjoint(&DiracSpinor::new(input));
            assert_eq!(bar.iter().copied().collect::<Vec<_>>(), expected.to_vec());
        }
    }

    #[test]
    fn minkowski_examples() {
        let e = FourVector::real(1.0, 0.0, 0.0, 0.0);
        assert_eq!(minkowski_dot(&e, &e), ONE);
        let l = FourVector::real(1.0, 1.0, 0.0, 0.0);
        assert_eq!(minkowski_dot(&l, &l), ZERO);
        let (m, p) = (1.5_f64, 2.0_f64);
        let en = (m * m + p * p).sqrt();
        let k = FourVector::real(en, 0.0, 0.0, p);
        assert!((minkowski_dot(&k, &k).re - m * m).abs() < 1e-12);
    }

    #[test]
    fn zero_spinor_has_zero_bilinears_and_residuals() {
        let b = bilinears(&DiracSpinor::new([ZERO; 4]));
        assert_eq!(b, BilinearSet::zero());
        let r = fpk_residuals(&b);
        assert_eq!((r.r1, r.r2, r.r3), (0.0, 0.0, 0.0));
    }

    #[test]
    fn s_is_antisymmetric_and_j0_is_norm() {
        let psi = DiracSpinor::new([
            C64::new(0.3, -1.2),
            C64::new(0.7, 0.1),
            C64::new(-0.4, 0.9),
            C64::new(1.1, 0.5),
        ]);
        let b = bilinears(&psi);
        for mu in 0..4 {
            for nu in 0..4 {
                assert_eq!(b.s[mu][nu], -b.s[nu][mu]);
            }
        }
        assert!((b.j.t.re - psi.norm_sqr()).abs() <= 4.0 * f64::EPSILON * psi.norm_sqr());
        assert_eq!(b.j.t.im, 0.0);
    }
}
