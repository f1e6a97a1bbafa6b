//! Rest-frame single- and dual-helicity spinors and their boosts.

use std::f64::consts::{PI, TAU};
use std::fmt;
use std::ops::{Add, Neg};

use nalgebra::{Matrix2, Vector2, Vector3, Vector4};
use serde::Serialize;

use crate::clifford::{pauli, C64};
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum Helicity {
    Plus,
    Minus,
}

impl Helicity {
    pub fn sign(self) -> f64 {
        match self {
            Helicity::Plus => 1.0,
            Helicity::Minus => -1.0,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum SpinorKind {
    SingleHelicityPlus,
    SingleHelicityMinus,
    DualHelicityPlus,
    DualHelicityMinus,
}

impl SpinorKind {
    pub const ALL: [SpinorKind; 4] = [
        SpinorKind::SingleHelicityPlus,
        SpinorKind::SingleHelicityMinus,
        SpinorKind::DualHelicityPlus,
        SpinorKind::DualHelicityMinus,
    ];

    pub fn helicity(self) -> Helicity {
        match self {
            SpinorKind::SingleHelicityPlus | SpinorKind::DualHelicityPlus => Helicity::Plus,
            SpinorKind::SingleHelicityMinus | SpinorKind::DualHelicityMinus => Helicity::Minus,
        }
    }

    pub fn is_dual(self) -> bool {
        matches!(self, SpinorKind::DualHelicityPlus | SpinorKind::DualHelicityMinus)
    }

    /// Short label used on the command line: `single+`, `single-`, `dual+`, `dual-`.
    pub fn label(self) -> &'static str {
        match self {
            SpinorKind::SingleHelicityPlus => "single+",
            SpinorKind::SingleHelicityMinus => "single-",
            SpinorKind::DualHelicityPlus => "dual+",
            SpinorKind::DualHelicityMinus => "dual-",
        }
    }
}

impl std::str::FromStr for SpinorKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        SpinorKind::ALL
            .into_iter()
            .find(|k| k.label() == s)
            .ok_or_else(|| Error::Domain(format!("unknown spinor kind '{s}'")))
    }
}

/// Relative sign between the chiral blocks at rest: `+` for particles, `-` for antiparticles.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default, Serialize)]
pub enum RelativeSign {
    #[default]
    Particle,
    Antiparticle,
}

impl RelativeSign {
    pub fn factor(self) -> f64 {
        match self {
            RelativeSign::Particle => 1.0,
            RelativeSign::Antiparticle => -1.0,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct PhasePair {
    pub alpha: C64,
    pub beta: C64,
}

impl PhasePair {
    pub fn new(alpha: C64, beta: C64) -> Self {
        Self { alpha, beta }
    }

    pub fn real(alpha: f64, beta: f64) -> Self {
        Self::new(alpha.into(), beta.into())
    }

    pub fn is_zero(&self) -> bool {
        self.alpha == C64::new(0.0, 0.0) && self.beta == C64::new(0.0, 0.0)
    }

    /// `|alpha|^2 + |beta|^2`
    pub fn scale(&self) -> f64 {
        self.alpha.norm_sqr() + self.beta.norm_sqr()
    }

    /// `(Re alpha, Re beta)`
    pub fn real_part(&self) -> PhasePair {
        PhasePair::real(self.alpha.re, self.beta.re)
    }

    /// `(i Im alpha, i Im beta)`
    pub fn imag_part(&self) -> PhasePair {
        PhasePair::new(C64::new(0.0, self.alpha.im), C64::new(0.0, self.beta.im))
    }
}

impl Add for PhasePair {
    type Output = PhasePair;

    fn add(self, rhs: PhasePair) -> PhasePair {
        PhasePair::new(self.alpha + rhs.alpha, self.beta + rhs.beta)
    }
}

/// Polar angles of the momentum (and helicity) axis.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Direction {
    pub theta: f64,
    pub phi: f64,
}

impl Direction {
    pub fn new(theta: f64, phi: f64) -> Result<Self> {
        if !(0.0..=PI).contains(&theta) {
            return Err(Error::Domain(format!("theta = {theta} outside [0, pi]")));
        }
        if !(0.0..TAU).contains(&phi) {
            return Err(Error::Domain(format!("phi = {phi} outside [0, 2pi)")));
        }
        Ok(Self { theta, phi })
    }

    pub fn z() -> Self {
        Self { theta: 0.0, phi: 0.0 }
    }

    pub fn unit(&self) -> Vector3<f64> {
        let (st, ct) = self.theta.sin_cos();
        let (sp, cp) = self.phi.sin_cos();
        Vector3::new(st * cp, st * sp, ct)
    }

    /// Helicity operator `sigma . n`.
    pub fn helicity_operator(&self) -> Matrix2<C64> {
        let n = self.unit();
        let [s1, s2, s3] = pauli();
        s1 * C64::from(n.x) + s2 * C64::from(n.y) + s3 * C64::from(n.z)
    }
}

/// Declarative description of one factory spinor.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct SpinorSpec {
    pub kind: SpinorKind,
    pub m: f64,
    pub theta: f64,
    pub phi: f64,
    pub p: f64,
    pub sign: RelativeSign,
    pub phases: PhasePair,
}

impl SpinorSpec {
    /// Particle-branch spec at rest along `+z`.
    pub fn at_rest(kind: SpinorKind, m: f64, phases: PhasePair) -> Self {
        Self {
            kind,
            m,
            theta: 0.0,
            phi: 0.0,
            p: 0.0,
            sign: RelativeSign::Particle,
            phases,
        }
    }

    pub fn with_phases(&self, phases: PhasePair) -> Self {
        Self { phases, ..*self }
    }

    pub fn direction(&self) -> Result<Direction> {
        Direction::new(self.theta, self.phi)
    }

    pub fn validate(&self) -> Result<()> {
        if !(self.m.is_finite() && self.m > 0.0) {
            return Err(Error::Domain(format!("mass m = {} must be positive", self.m)));
        }
        if !(self.p.is_finite() && self.p >= 0.0) {
            return Err(Error::Domain(format!(
                "momentum p = {} must be nonnegative",
                self.p
            )));
        }
        self.direction()?;
        let ph = &self.phases;
        if ![ph.alpha.re, ph.alpha.im, ph.beta.re, ph.beta.im]
            .iter()
            .all(|x| x.is_finite())
        {
            return Err(Error::Domain("phases must be finite".into()));
        }
        Ok(())
    }

    /// Same component family: everything but the phases agrees.
    pub fn same_family(&self, other: &SpinorSpec) -> bool {
        self.kind == other.kind
            && self.m == other.m
            && self.theta == other.theta
            && self.phi == other.phi
            && self.p == other.p
            && self.sign == other.sign
    }

    pub fn energy(&self) -> f64 {
        self.p.hypot(self.m)
    }
}

/// Four complex amplitudes `(u, v)` in the chiral basis.
#[derive(Debug, Clone, PartialEq)]
pub struct DiracSpinor {
    amplitudes: Vector4<C64>,
    provenance: Option<SpinorSpec>,
}

impl DiracSpinor {
    pub fn new(amplitudes: [C64; 4]) -> Self {
        Self {
            amplitudes: Vector4::from(amplitudes),
            provenance: None,
        }
    }

    pub fn from_blocks(upper: Vector2<C64>, lower: Vector2<C64>) -> Self {
        Self::new([upper[0], upper[1], lower[0], lower[1]])
    }

    pub fn zero() -> Self {
        Self::new([C64::new(0.0, 0.0); 4])
    }

    pub fn with_provenance(mut self, spec: SpinorSpec) -> Self {
        self.provenance = Some(spec);
        self
    }

    pub fn provenance(&self) -> Option<&SpinorSpec> {
        self.provenance.as_ref()
    }

    pub fn amplitudes(&self) -> &Vector4<C64> {
        &self.amplitudes
    }

    pub fn upper(&self) -> Vector2<C64> {
        self.amplitudes.fixed_rows::<2>(0).into_owned()
    }

    pub fn lower(&self) -> Vector2<C64> {
        self.amplitudes.fixed_rows::<2>(2).into_owned()
    }

    pub fn norm_sqr(&self) -> f64 {
        self.amplitudes.norm_squared()
    }

    pub fn norm(&self) -> f64 {
        self.amplitudes.norm()
    }

    pub fn is_zero(&self) -> bool {
        self.amplitudes.iter().all(|c| *c == C64::new(0.0, 0.0))
    }

    pub fn scaled(&self, c: C64) -> DiracSpinor {
        DiracSpinor {
            amplitudes: self.amplitudes * c,
            provenance: None,
        }
    }
}

impl Add for &DiracSpinor {
    type Output = DiracSpinor;

    fn add(self, rhs: &DiracSpinor) -> DiracSpinor {
        let provenance = match (self.provenance, rhs.provenance) {
            (Some(a), Some(b)) if a.same_family(&b) => Some(a.with_phases(a.phases + b.phases)),
            _ => None,
        };
        DiracSpinor {
            amplitudes: self.amplitudes + rhs.amplitudes,
            provenance,
        }
    }
}

impl Neg for &DiracSpinor {
    type Output = DiracSpinor;

    fn neg(self) -> DiracSpinor {
        DiracSpinor {
            amplitudes: -self.amplitudes,
            provenance: self
                .provenance
                .map(|s| s.with_phases(PhasePair::new(-s.phases.alpha, -s.phases.beta))),
        }
    }
}

impl fmt::Display for DiracSpinor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let a = &self.amplitudes;
        write!(f, "({}, {}, {}, {})", a[0], a[1], a[2], a[3])
    }
}

/// Rest-frame helicity eigenstate of `sigma . n`, normalised to `sqrt(m)`.
pub fn two_component(theta: f64, phi: f64, h: Helicity, m: f64) -> Result<Vector2<C64>> {
    if !(m.is_finite() && m > 0.0) {
        return Err(Error::Domain(format!("mass m = {m} must be positive")));
    }
    Direction::new(theta, phi)?;
    let (s, c) = (theta / 2.0).sin_cos();
    let down = C64::from_polar(1.0, -phi / 2.0);
    let up = C64::from_polar(1.0, phi / 2.0);
    let root = m.sqrt();
    let v = match h {
        Helicity::Plus => Vector2::new(down * c, up * s),
        Helicity::Minus => Vector2::new(down * -s, up * c),
    };
    Ok(v * C64::from(root))
}

/// Wigner time-reversal matrix `[[0, -1], [1, 0]]`.
pub fn wigner_theta() -> Matrix2<C64> {
    Matrix2::new(0.0.into(), (-1.0).into(), 1.0.into(), 0.0.into())
}

pub fn build_rest(spec: &SpinorSpec) -> Result<DiracSpinor> {
    spec.validate()?;
    if spec.phases.is_zero() {
        return Err(Error::NullSpinor);
    }
    let PhasePair { alpha, beta } = spec.phases;
    let phi_h = two_component(spec.theta, spec.phi, spec.kind.helicity(), spec.m)?;
    let sign = C64::from(spec.sign.factor());
    let upper = if spec.kind.is_dual() {
        wigner_theta() * phi_h.map(|c| c.conj()) * alpha
    } else {
        phi_h * alpha
    };
    let lower = phi_h * (beta * sign);
    Ok(DiracSpinor::from_blocks(upper, lower).with_provenance(*spec))
}

/// Apply the pure boost with rapidity along `direction`.
pub fn boost(psi_rest: &DiracSpinor, p: f64, m: f64, direction: &Direction) -> DiracSpinor {
    if p == 0.0 {
        return psi_rest.clone();
    }
    let e = p.hypot(m);
    let norm = C64::from(((e + m) / (2.0 * m)).sqrt());
    let shift = direction.helicity_operator() * C64::from(p / (e + m));
    let id = Matrix2::<C64>::identity();
    let upper = (id + shift) * psi_rest.upper() * norm;
    let lower = (id - shift) * psi_rest.lower() * norm;
    let mut out = DiracSpinor::from_blocks(upper, lower);
    out.provenance = psi_rest.provenance;
    out
}

/// `boost(build_rest(spec))`, the spinor at momentum `p` along the spec's axis.
pub fn build(spec: &SpinorSpec) -> Result<DiracSpinor> {
    let rest = build_rest(spec)?;
    Ok(boost(&rest, spec.p, spec.m, &spec.direction()?))
}
