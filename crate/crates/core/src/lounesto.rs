//! Lounesto classes from vanishing patterns of the bilinear covariants.
//!
//! | class | sigma | omega | K   | S   |
//! |-------|-------|-------|-----|-----|
//! | 1     | != 0  | != 0  |     |     |
//! | 2     | != 0  | = 0   |     |     |
//! | 3     | = 0   | != 0  |     |     |
//! | 4     | = 0   | = 0   | != 0| != 0|
//! | 5     | = 0   | = 0   | = 0 | != 0|
//! | 6     | = 0   | = 0   | != 0| = 0 |
//!
//! Each test compares a magnitude against `rel * J^0`.

use std::fmt;

use serde::Serialize;

use crate::clifford::{bilinears, BilinearSet};
use crate::error::{Error, Result};
use crate::spinor::{build, DiracSpinor, PhasePair, SpinorKind, SpinorSpec};

/// Default relative vanishing threshold.
pub const DEFAULT_REL_TOL: f64 = 1e-9;

/// Normalised phase predicates closer than this to zero (but not vanishing)
/// are boundary draws.
pub const BOUNDARY_MARGIN: f64 = 1e-6;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum LounestoClass {
    C1,
    C2,
    C3,
    C4,
    C5,
    C6,
    /// The zero spinor, which only appears as a split part or a cancelling sum.
    Null,
}

impl LounestoClass {
    pub const CLASSES: [LounestoClass; 6] = [
        LounestoClass::C1,
        LounestoClass::C2,
        LounestoClass::C3,
        LounestoClass::C4,
        LounestoClass::C5,
        LounestoClass::C6,
    ];

    pub fn number(self) -> Option<u8> {
        match self {
            LounestoClass::C1 => Some(1),
            LounestoClass::C2 => Some(2),
            LounestoClass::C3 => Some(3),
            LounestoClass::C4 => Some(4),
            LounestoClass::C5 => Some(5),
            LounestoClass::C6 => Some(6),
            LounestoClass::Null => None,
        }
    }

    pub fn from_number(n: u8) -> Option<Self> {
        Self::CLASSES.get(usize::from(n).checked_sub(1)?).copied()
    }

    pub fn is_regular(self) -> bool {
        matches!(self, LounestoClass::C1 | LounestoClass::C2 | LounestoClass::C3)
    }

    pub fn is_singular(self) -> bool {
        matches!(self, LounestoClass::C4 | LounestoClass::C5 | LounestoClass::C6)
    }
}

impl fmt::Display for LounestoClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.number() {
            Some(n) => write!(f, "{n}"),
            None => f.write_str("Null"),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct TolerancePolicy {
    pub rel: f64,
}

impl TolerancePolicy {
    pub fn new(rel: f64) -> Result<Self> {
        if rel.is_finite() && rel > 0.0 {
            Ok(Self { rel })
        } else {
            Err(Error::Domain(format!(
                "relative tolerance {rel} must be positive"
            )))
        }
    }

    fn vanishes(&self, magnitude: f64, scale: f64) -> bool {
        magnitude <= self.rel * scale
    }
}

impl Default for TolerancePolicy {
    fn default() -> Self {
        Self { rel: DEFAULT_REL_TOL }
    }
}

/// Which of `sigma, omega, K, S` are nonzero.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize)]
pub struct Support {
    pub sigma: bool,
    pub omega: bool,
    pub k: bool,
    pub s: bool,
}

impl Support {
    pub fn of(b: &BilinearSet, tol: &TolerancePolicy) -> Self {
        let scale = b.scale();
        if scale <= 0.0 {
            return Support::default();
        }
        Support {
            sigma: !tol.vanishes(b.sigma.norm(), scale),
            omega: !tol.vanishes(b.omega.norm(), scale),
            k: !tol.vanishes(b.k.euclidean_norm(), scale),
            s: !tol.vanishes(b.s_frobenius(), scale),
        }
    }

    pub fn union(&self, other: &Support) -> Support {
        Support {
            sigma: self.sigma || other.sigma,
            omega: self.omega || other.omega,
            k: self.k || other.k,
            s: self.s || other.s,
        }
    }

    pub fn is_empty(&self) -> bool {
        !(self.sigma || self.omega || self.k || self.s)
    }
}

impl fmt::Display for Support {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names = [
            (self.sigma, "sigma"),
            (self.omega, "omega"),
            (self.k, "K"),
            (self.s, "S"),
        ];
        let present: Vec<&str> = names.iter().filter(|(on, _)| *on).map(|(_, n)| *n).collect();
        write!(f, "{{{}}}", present.join(", "))
    }
}

pub fn classify_bilinears(b: &BilinearSet, tol: &TolerancePolicy) -> Result<LounestoClass> {
    if b.scale() <= 0.0 {
        return Ok(LounestoClass::Null);
    }
    let sup = Support::of(b, tol);
    Ok(match (sup.sigma, sup.omega, sup.k, sup.s) {
        (true, true, _, _) => LounestoClass::C1,
        (true, false, _, _) => LounestoClass::C2,
        (false, true, _, _) => LounestoClass::C3,
        (false, false, true, true) => LounestoClass::C4,
        (false, false, false, true) => LounestoClass::C5,
        (false, false, true, false) => LounestoClass::C6,
        (false, false, false, false) => return Err(Error::Anomaly { j_t: b.scale() }),
    })
}

pub fn classify(psi: &DiracSpinor, tol: &TolerancePolicy) -> Result<LounestoClass> {
    if psi.is_zero() {
        return Ok(LounestoClass::Null);
    }
    classify_bilinears(&bilinears(psi), tol)
}

/// Phase predicates normalised by `|alpha|^2 + |beta|^2`.
///
/// Single helicity: `|alpha|^2, |beta|^2, 2 Re(alpha* beta), 2 Im(alpha* beta)`.
/// Dual helicity: `|alpha|^2, |beta|^2, |alpha|^2 - |beta|^2`.
pub fn phase_predicates(kind: SpinorKind, phases: &PhasePair) -> Vec<f64> {
    let scale = phases.scale();
    if scale == 0.0 {
        return Vec::new();
    }
    let a2 = phases.alpha.norm_sqr();
    let b2 = phases.beta.norm_sqr();
    if kind.is_dual() {
        vec![a2 / scale, b2 / scale, (a2 - b2) / scale]
    } else {
        let prod = phases.alpha.conj() * phases.beta;
        vec![
            a2 / scale,
            b2 / scale,
            2.0 * prod.re / scale,
            2.0 * prod.im / scale,
        ]
    }
}

/// A phase pair is on a boundary when some predicate is neither clearly zero
/// (below `tol.rel`) nor clearly nonzero (above [`BOUNDARY_MARGIN`]).
pub fn is_boundary(kind: SpinorKind, phases: &PhasePair, tol: &TolerancePolicy) -> bool {
    phase_predicates(kind, phases)
        .into_iter()
        .any(|v| v.abs() > tol.rel && v.abs() <= BOUNDARY_MARGIN)
}

pub fn predict_class_from_phases(spec: &SpinorSpec, tol: &TolerancePolicy) -> Result<LounestoClass> {
    if spec.phases.is_zero() {
        return Err(Error::NullSpinor);
    }
    let zero = |v: f64| v.abs() <= tol.rel;
    let preds = phase_predicates(spec.kind, &spec.phases);
    let (alpha_zero, beta_zero) = (zero(preds[0]), zero(preds[1]));
    if alpha_zero || beta_zero {
        return Ok(LounestoClass::C6);
    }
    Ok(if spec.kind.is_dual() {
        if zero(preds[2]) {
            LounestoClass::C5
        } else {
            LounestoClass::C4
        }
    } else {
        match (zero(preds[2]), zero(preds[3])) {
            (false, false) => LounestoClass::C1,
            (false, true) => LounestoClass::C2,
            (true, false) => LounestoClass::C3,
            (true, true) => LounestoClass::C6,
        }
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Crosscheck {
    pub predicted: LounestoClass,
    pub classified: LounestoClass,
    pub agree: bool,
    pub boundary: bool,
}

pub fn crosscheck(spec: &SpinorSpec, tol: &TolerancePolicy) -> Result<Crosscheck> {
    let predicted = predict_class_from_phases(spec, tol)?;
    let classified = classify(&build(spec)?, tol)?;
    Ok(Crosscheck {
        predicted,
        classified,
        agree: predicted == classified,
        boundary: is_boundary(spec.kind, &spec.phases, tol),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::clifford::C64;
    use crate::spinor::build_rest;

    fn c(re: f64, im: f64) -> C64 {
        C64::new(re, im)
    }

    fn rest(kind: SpinorKind, alpha: C64, beta: C64) -> SpinorSpec {
        SpinorSpec::at_rest(kind, 1.0, PhasePair::new(alpha, beta))
    }

    fn class_of(spec: &SpinorSpec) -> LounestoClass {
        classify(&build(spec).unwrap(), &TolerancePolicy::default()).unwrap()
    }

    #[test]
    fn classify_examples() {
        use SpinorKind::*;
        assert_eq!(
            class_of(&rest(SingleHelicityPlus, c(1., 0.), c(1., 0.))),
            LounestoClass::C2
        );
        assert_eq!(
            class_of(&rest(SingleHelicityPlus, c(1., 0.), c(0., 1.))),
            LounestoClass::C3
        );
        assert_eq!(
            class_of(&rest(DualHelicityPlus, c(2., 0.), c(1., 0.))),
            LounestoClass::C4
        );
    }

    #[test]
    fn predict_examples() {
        use SpinorKind::*;
        let tol = TolerancePolicy::default();
        let p = |s: SpinorSpec| predict_class_from_phases(&s, &tol).unwrap();
        assert_eq!(
            p(rest(SingleHelicityPlus, c(1., 1.), c(1., 0.))),
            LounestoClass::C1
        );
        assert_eq!(p(rest(DualHelicityPlus, c(0., 1.), c(1., 0.))), LounestoClass::C5);
        assert_eq!(
            p(rest(SingleHelicityMinus, c(0., 0.), c(5., 0.))),
            LounestoClass::C6
        );
        assert_eq!(
            predict_class_from_phases(&rest(DualHelicityMinus, c(0., 0.), c(0., 0.)), &tol),
            Err(Error::NullSpinor)
        );
    }

    #[test]
    fn distinct_real_phases_are_class_two_not_one() {
        let spec = rest(SpinorKind::SingleHelicityPlus, c(1., 0.), c(2., 0.));
        assert_eq!(class_of(&spec), LounestoClass::C2);
    }

    #[test]
    fn weyl_like_spinor_pattern() {
        let spec = rest(SpinorKind::SingleHelicityPlus, c(0., 0.), c(5., 0.));
        let b = bilinears(&build_rest(&spec).unwrap());
        let sup = Support::of(&b, &TolerancePolicy::default());
        assert_eq!(
            sup,
            Support {
                sigma: false,
                omega: false,
                k: true,
                s: false
            }
        );
    }

    #[test]
    fn zero_spinor_is_null() {
        assert_eq!(
            classify(&DiracSpinor::zero(), &TolerancePolicy::default()).unwrap(),
            LounestoClass::Null
        );
    }

    #[test]
    fn anomaly_when_only_current_survives() {
        let mut b = BilinearSet::zero();
        b.j.t = c(1.0, 0.0);
        assert!(matches!(
            classify_bilinears(&b, &TolerancePolicy::default()),
            Err(Error::Anomaly { .. })
        ));
    }

    #[test]
    fn dual_equal_moduli_agree() {
        let spec = rest(SpinorKind::DualHelicityPlus, c(1., 0.), c(1., 0.));
        let x = crosscheck(&spec, &TolerancePolicy::default()).unwrap();
        assert_eq!(
            (x.predicted, x.classified, x.agree),
            (LounestoClass::C5, LounestoClass::C5, true)
        );
    }

    #[test]
    fn near_equal_moduli_flagged_as_boundary() {
        let tol = TolerancePolicy::default();
        let near = PhasePair::real(1.0, 1.0 - 1e-7);
        assert!(is_boundary(SpinorKind::DualHelicityPlus, &near, &tol));
        assert!(!is_boundary(
            SpinorKind::DualHelicityPlus,
            &PhasePair::real(1.0, 1.0),
            &tol
        ));
        assert!(!is_boundary(
            SpinorKind::DualHelicityPlus,
            &PhasePair::real(2.0, 1.0),
            &tol
        ));
        // 1 - 1e-15 sits inside the vanishing band; no flag, both paths say C5.
        let spec = rest(SpinorKind::DualHelicityPlus, c(1., 0.), c(1.0 - 1e-15, 0.));
        let x = crosscheck(&spec, &tol).unwrap();
        assert!(!x.boundary && x.agree);
    }

    #[test]
    fn tolerance_must_be_positive() {
        assert!(TolerancePolicy::new(0.0).is_err());
        assert!(TolerancePolicy::new(f64::NAN).is_err());
        assert!(TolerancePolicy::new(1e-6).is_ok());
    }

    #[test]
    fn class_numbers() {
        for (i, cls) in LounestoClass::CLASSES.iter().enumerate() {
            assert_eq!(cls.number(), Some(i as u8 + 1));
            assert_eq!(LounestoClass::from_number(i as u8 + 1), Some(*cls));
        }
        assert_eq!(LounestoClass::from_number(0), None);
        assert_eq!(LounestoClass::Null.to_string(), "Null");
    }
}
