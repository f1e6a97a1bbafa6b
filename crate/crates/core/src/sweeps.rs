//! Seeded property sweeps: Fierz-Pauli-Kofink audit, Dirac partition, and
//! classifier coherence.

use rand::Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::clifford::{bilinears, fpk_residuals, minkowski_dot, C64};
use crate::dynamics::{check_from_residual, dirac_residual};
use crate::error::{Error, Result};
use crate::lounesto::{classify, crosscheck, LounestoClass, TolerancePolicy};
use crate::sampling::{
    draw_rng, family, generic_complex, magnitude, phases_for_class, random_spec, unit_phase, DrawRng, Sector,
};
use crate::spinor::{build, build_rest, DiracSpinor, PhasePair, SpinorSpec};

/// Bound on every normalised FPK residual `r / (J^0)^2`.
pub const FPK_REL_TOL: f64 = 1e-9;

/// Minimum `residual / (m ||psi||)` separating non-Dirac families from zero.
pub const DIRAC_SEPARATION: f64 = 1e-3;

const FPK_STREAM: u64 = 0x700;
const DIRAC_STREAM: u64 = 0x800;
const LINEARITY_STREAM: u64 = 0x880;
const COHERENCE_STREAM: u64 = 0x900;

fn require_samples(samples: usize) -> Result<()> {
    if samples == 0 {
        Err(Error::Domain("samples must be at least 1".into()))
    } else {
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct FpkSweep {
    pub samples: usize,
    /// Largest `r1 / (J^0)^2` over the sweep; likewise for r2, r3.
    pub max_r1: f64,
    pub max_r2: f64,
    pub max_r3: f64,
    pub dual_samples: usize,
    /// Largest `|J.J| / (J^0)^2` among dual-helicity spinors.
    pub max_dual_jj: f64,
    pub regular_samples: usize,
    /// Smallest `J.J / (J^0)^2` among spinors classified C1-C3.
    pub min_regular_jj: f64,
    pub violations: usize,
}

#[derive(Default)]
struct FpkDraw {
    r: [f64; 3],
    dual: Option<f64>,
    regular: Option<f64>,
    violation: bool,
}

fn fpk_draw(seed: u64, index: u64, tol: &TolerancePolicy) -> Result<FpkDraw> {
    let mut rng = draw_rng(seed, FPK_STREAM, index);
    let spec = random_spec(&mut rng, 10.0);
    let psi = build(&spec)?;
    let b = bilinears(&psi);
    let scale2 = b.scale() * b.scale();
    let res = fpk_residuals(&b);
    let r = [res.r1 / scale2, res.r2 / scale2, res.r3 / scale2];
    let jj = minkowski_dot(&b.j, &b.j).re / scale2;
    let mut out = FpkDraw {
        r,
        violation: r.iter().any(|x| !(*x <= FPK_REL_TOL)),
        ..Default::default()
    };
    if spec.kind.is_dual() {
        out.dual = Some(jj.abs());
        out.violation |= !(jj.abs() <= FPK_REL_TOL);
    }
    if classify(&psi, tol)?.is_regular() {
        out.regular = Some(jj);
        out.violation |= !(jj > 0.0);
    }
    Ok(out)
}

/// FPK residuals over `samples` random factory spinors from both sectors.
pub fn fpk_sweep(samples: usize, seed: u64, tol: &TolerancePolicy) -> Result<FpkSweep> {
    require_samples(samples)?;
    let draws: Vec<FpkDraw> = (0..samples as u64)
        .into_par_iter()
        .map(|i| fpk_draw(seed, i, tol))
        .collect::<Result<_>>()?;
    let mut out = FpkSweep {
        samples,
        max_r1: 0.0,
        max_r2: 0.0,
        max_r3: 0.0,
        dual_samples: 0,
        max_dual_jj: 0.0,
        regular_samples: 0,
        min_regular_jj: f64::INFINITY,
        violations: 0,
    };
    for d in draws {
        out.max_r1 = out.max_r1.max(d.r[0]);
        out.max_r2 = out.max_r2.max(d.r[1]);
        out.max_r3 = out.max_r3.max(d.r[2]);
        if let Some(jj) = d.dual {
            out.dual_samples += 1;
            out.max_dual_jj = out.max_dual_jj.max(jj);
        }
        if let Some(jj) = d.regular {
            out.regular_samples += 1;
            out.min_regular_jj = out.min_regular_jj.min(jj);
        }
        out.violations += usize::from(d.violation);
    }
    Ok(out)
}

/// Families sampled by the Dirac sweep.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum DiracFamily {
    /// Single helicity, class 2 with `alpha = beta`.
    C2Equal,
    /// Single helicity, class 2 with `beta = r alpha`, `|r - 1| >= 0.1`.
    C2Unequal,
    C1,
    C3,
    C6Single,
    C4,
    C5,
    C6Dual,
}

impl DiracFamily {
    pub const ALL: [DiracFamily; 8] = [
        DiracFamily::C2Equal,
        DiracFamily::C2Unequal,
        DiracFamily::C1,
        DiracFamily::C3,
        DiracFamily::C6Single,
        DiracFamily::C4,
        DiracFamily::C5,
        DiracFamily::C6Dual,
    ];

    pub fn expected_satisfied(self) -> bool {
        self == DiracFamily::C2Equal
    }

    fn sample(self, rng: &mut DrawRng) -> SpinorSpec {
        let sector = match self {
            DiracFamily::C4 | DiracFamily::C5 | DiracFamily::C6Dual => Sector::Singular,
            _ => Sector::Regular,
        };
        let fam = family(rng, sector, 10.0);
        let phases = match self {
            DiracFamily::C2Equal => {
                let a = generic_complex(rng);
                PhasePair::new(a, a)
            }
            DiracFamily::C2Unequal => {
                let a = generic_complex(rng);
                let r = loop {
                    let r = magnitude(rng);
                    if (r - 1.0).abs() >= 0.1 {
                        break r;
                    }
                };
                PhasePair::new(a, a * r)
            }
            DiracFamily::C1 => phases_for_class(rng, LounestoClass::C1),
            DiracFamily::C3 => phases_for_class(rng, LounestoClass::C3),
            DiracFamily::C4 => phases_for_class(rng, LounestoClass::C4),
            DiracFamily::C5 => phases_for_class(rng, LounestoClass::C5),
            DiracFamily::C6Single | DiracFamily::C6Dual => phases_for_class(rng, LounestoClass::C6),
        };
        fam.with_phases(phases)
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct DiracFamilyStats {
    pub family: DiracFamily,
    pub samples: usize,
    pub satisfied: usize,
    /// Extremes of `residual / (m ||psi||)`.
    pub min_relative: f64,
    pub max_relative: f64,
}

impl DiracFamilyStats {
    /// Satisfying families all pass; the rest stay clear of zero.
    pub fn violations(&self) -> usize {
        if self.family.expected_satisfied() {
            self.samples - self.satisfied
        } else if self.satisfied > 0 || !(self.min_relative > DIRAC_SEPARATION) {
            self.samples.max(1)
        } else {
            0
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct DiracSweep {
    pub families: Vec<DiracFamilyStats>,
    /// Sums of two same-family `alpha = beta` spinors.
    pub linearity_pairs: usize,
    pub linearity_failures: usize,
    /// Random same-family single-helicity pairs checked against the triangle inequality.
    pub triangle_pairs: usize,
    pub triangle_failures: usize,
}

impl DiracSweep {
    pub fn violations(&self) -> usize {
        self.families
            .iter()
            .map(DiracFamilyStats::violations)
            .sum::<usize>()
            + self.linearity_failures
            + self.triangle_failures
    }
}

fn residual_of(psi: &DiracSpinor, spec: &SpinorSpec) -> Result<f64> {
    dirac_residual(psi, spec.energy(), spec.p, spec.m, &spec.direction()?)
}

fn relative_residual(spec: &SpinorSpec, tol: &TolerancePolicy) -> Result<(bool, f64)> {
    let psi = build(spec)?;
    let check = check_from_residual(&psi, residual_of(&psi, spec)?, spec.m, classify(&psi, tol)?);
    Ok((check.satisfies, check.relative))
}

/// Pair outcome: (sum satisfies, triangle inequality holds).
fn linearity_draw(seed: u64, index: u64) -> Result<(bool, bool)> {
    let mut rng = draw_rng(seed, LINEARITY_STREAM, index);
    let fam = family(&mut rng, Sector::Regular, 10.0);
    let mut dirac = || {
        let a = generic_complex(&mut rng);
        PhasePair::new(a, a)
    };
    let (pa, pb) = (dirac(), dirac());
    let a = build(&fam.with_phases(pa))?;
    let b = build(&fam.with_phases(pb))?;
    let sum = &a + &b;
    let r = residual_of(&sum, &fam)?;
    let sum_ok = check_from_residual(&sum, r, fam.m, LounestoClass::C2).satisfies;

    let c = build(&fam.with_phases(PhasePair::new(
        generic_complex(&mut rng),
        generic_complex(&mut rng),
    )))?;
    let d = build(&fam.with_phases(PhasePair::new(
        generic_complex(&mut rng),
        generic_complex(&mut rng),
    )))?;
    let (rc, rd) = (residual_of(&c, &fam)?, residual_of(&d, &fam)?);
    let rcd = residual_of(&(&c + &d), &fam)?;
    // a few ulps of the operands' scale absorb rounding in the two evaluations
    let slack = 8.0 * f64::EPSILON * fam.m * (c.norm() + d.norm());
    Ok((sum_ok, rcd <= rc + rd + slack))
}

/// Dirac residuals for `samples` draws of every [`DiracFamily`], plus linearity checks.
pub fn dirac_sweep(samples: usize, seed: u64, tol: &TolerancePolicy) -> Result<DiracSweep> {
    require_samples(samples)?;
    let families = DiracFamily::ALL
        .iter()
        .enumerate()
        .map(|(fi, &fam)| {
            let outcomes: Vec<(bool, f64)> = (0..samples as u64)
                .into_par_iter()
                .map(|i| {
                    let mut rng = draw_rng(seed, DIRAC_STREAM + fi as u64, i);
                    relative_residual(&fam.sample(&mut rng), tol)
                })
                .collect::<Result<_>>()?;
            Ok(DiracFamilyStats {
                family: fam,
                samples,
                satisfied: outcomes.iter().filter(|o| o.0).count(),
                min_relative: outcomes.iter().map(|o| o.1).fold(f64::INFINITY, f64::min),
                max_relative: outcomes.iter().map(|o| o.1).fold(0.0, f64::max),
            })
        })
        .collect::<Result<Vec<_>>>()?;

    let pairs: Vec<(bool, bool)> = (0..samples as u64)
        .into_par_iter()
        .map(|i| linearity_draw(seed, i))
        .collect::<Result<_>>()?;
    Ok(DiracSweep {
        families,
        linearity_pairs: samples,
        linearity_failures: pairs.iter().filter(|p| !p.0).count(),
        triangle_pairs: samples,
        triangle_failures: pairs.iter().filter(|p| !p.1).count(),
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CoherenceSweep {
    /// Non-boundary specs evaluated.
    pub samples: usize,
    pub boundary_skipped: usize,
    pub disagreements: usize,
    /// Rest-frame class differs from boosted class.
    pub boost_failures: usize,
    /// Class of `c psi` differs from class of `psi`.
    pub scale_failures: usize,
    /// Tally of classified classes, C1..C6.
    pub class_histogram: [usize; 6],
}

impl CoherenceSweep {
    pub fn violations(&self) -> usize {
        self.disagreements + self.boost_failures + self.scale_failures
    }
}

enum CoherenceDraw {
    Boundary,
    Checked {
        class: LounestoClass,
        agree: bool,
        boost_ok: bool,
        scale_ok: bool,
    },
}

fn coherence_draw(seed: u64, index: u64, tol: &TolerancePolicy) -> Result<CoherenceDraw> {
    let mut rng = draw_rng(seed, COHERENCE_STREAM, index);
    let spec = random_spec(&mut rng, 1e3);
    let x = crosscheck(&spec, tol)?;
    if x.boundary {
        return Ok(CoherenceDraw::Boundary);
    }
    let rest_class = classify(&build_rest(&spec)?, tol)?;
    let c: C64 = unit_phase(&mut rng) * 10f64.powf(rng.gen_range(-3.0..=3.0));
    let scaled_class = classify(&build(&spec)?.scaled(c), tol)?;
    Ok(CoherenceDraw::Checked {
        class: x.classified,
        agree: x.agree,
        boost_ok: rest_class == x.classified,
        scale_ok: scaled_class == x.classified,
    })
}

/// Phase predictor vs bilinear classifier on `samples` non-boundary specs with
/// `p / m` up to 1e3, plus boost and rescaling invariance of the class.
pub fn coherence_sweep(samples: usize, seed: u64, tol: &TolerancePolicy) -> Result<CoherenceSweep> {
    require_samples(samples)?;
    let mut out = CoherenceSweep {
        samples: 0,
        boundary_skipped: 0,
        disagreements: 0,
        boost_failures: 0,
        scale_failures: 0,
        class_histogram: [0; 6],
    };
    let mut next = 0u64;
    while out.samples < samples {
        let want = (samples - out.samples) as u64;
        let draws: Vec<CoherenceDraw> = (next..next + want)
            .into_par_iter()
            .map(|i| coherence_draw(seed, i, tol))
            .collect::<Result<_>>()?;
        next += want;
        for d in draws {
            match d {
                CoherenceDraw::Boundary => out.boundary_skipped += 1,
                CoherenceDraw::Checked {
                    class,
                    agree,
                    boost_ok,
                    scale_ok,
                } => {
                    out.samples += 1;
                    out.disagreements += usize::from(!agree);
                    out.boost_failures += usize::from(!boost_ok);
                    out.scale_failures += usize::from(!scale_ok);
                    if let Some(n) = class.number() {
                        out.class_histogram[usize::from(n) - 1] += 1;
                    }
                }
            }
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_fpk_sweep_is_clean() {
        let r = fpk_sweep(500, 5, &TolerancePolicy::default()).unwrap();
        assert_eq!(r.violations, 0, "{r:?}");
        assert!(r.dual_samples > 0 && r.regular_samples > 0);
    }

    #[test]
    fn small_dirac_sweep_partitions() {
        let r = dirac_sweep(100, 5, &TolerancePolicy::default()).unwrap();
        assert_eq!(r.violations(), 0, "{r:?}");
        let equal = &r.families[0];
        assert_eq!(equal.satisfied, equal.samples);
    }

    #[test]
    fn small_coherence_sweep_agrees() {
        let r = coherence_sweep(500, 5, &TolerancePolicy::default()).unwrap();
        assert_eq!(r.samples, 500);
        assert_eq!(r.violations(), 0, "{r:?}");
        assert!(r.class_histogram.iter().all(|&n| n > 0));
    }

    #[test]
    fn zero_samples_rejected() {
        let tol = TolerancePolicy::default();
        assert!(fpk_sweep(0, 1, &tol).is_err());
        assert!(dirac_sweep(0, 1, &tol).is_err());
        assert!(coherence_sweep(0, 1, &tol).is_err());
    }
}
