//! Momentum-space Dirac operator and the residual `|| (pslash - m) psi ||`.

use nalgebra::{Matrix2, Matrix4};
use serde::Serialize;

use crate::clifford::{blocks, C64};
use crate::error::{Error, Result};
use crate::lounesto::{classify, LounestoClass, TolerancePolicy};
use crate::spinor::{build, DiracSpinor, Direction, RelativeSign, SpinorSpec};

/// `satisfies` holds when the residual is at most this times `m * ||psi||`.
pub const DIRAC_REL_TOL: f64 = 1e-10;

/// Allowed `|E^2 - p^2 - m^2|` in units of `m^2`.
pub const MASS_SHELL_TOL: f64 = 1e-9;

/// `gamma_mu p^mu = E [[0, 1], [1, 0]] + p [[0, sigma.n], [-sigma.n, 0]]`.
pub fn feynman_slash(e: f64, p: f64, direction: &Direction) -> Matrix4<C64> {
    let h = direction.helicity_operator() * C64::from(p);
    let en = Matrix2::<C64>::identity() * C64::from(e);
    let z = Matrix2::<C64>::zeros();
    blocks(&z, &(en + h), &(en - h), &z)
}

/// Norm of `(pslash - m) psi`, or of `(pslash + m) psi` on the antiparticle branch.
pub fn dirac_residual_signed(
    psi_p: &DiracSpinor,
    e: f64,
    p: f64,
    m: f64,
    direction: &Direction,
    sign: RelativeSign,
) -> Result<f64> {
    let defect = (e * e - p * p - m * m).abs();
    let limit = MASS_SHELL_TOL * m * m;
    if !(defect <= limit) {
        return Err(Error::MassShell { defect, limit });
    }
    let slash = feynman_slash(e, p, direction);
    let psi = psi_p.amplitudes();
    let mass_term = psi * C64::from(m * sign.factor());
    Ok((slash * psi - mass_term).norm())
}

pub fn dirac_residual(psi_p: &DiracSpinor, e: f64, p: f64, m: f64, direction: &Direction) -> Result<f64> {
    dirac_residual_signed(psi_p, e, p, m, direction, RelativeSign::Particle)
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct DiracCheck {
    pub residual: f64,
    /// `residual / (m ||psi||)`
    pub relative: f64,
    pub satisfies: bool,
    pub class_of_input: LounestoClass,
}

/// Build and boost `spec`, then test it against the Dirac operator of its branch.
pub fn dynamics_check(spec: &SpinorSpec, tol: &TolerancePolicy) -> Result<DiracCheck> {
    let psi = build(spec)?;
    let residual = dirac_residual_signed(&psi, spec.energy(), spec.p, spec.m, &spec.direction()?, spec.sign)?;
    Ok(check_from_residual(&psi, residual, spec.m, classify(&psi, tol)?))
}

pub(crate) fn check_from_residual(
    psi: &DiracSpinor,
    residual: f64,
    m: f64,
    class_of_input: LounestoClass,
) -> DiracCheck {
    let scale = m * psi.norm();
    let relative = if scale > 0.0 { residual / scale } else { 0.0 };
    DiracCheck {
        residual,
        relative,
        satisfies: residual <= DIRAC_REL_TOL * scale,
        class_of_input,
    }
}
