//! Dirac spinors built from phase factors, their bilinear covariants, Lounesto
//! classification, and the composition rules obtained by splitting a spinor
//! into its real-phase and imaginary-phase parts.
//!
//! ```
//! use lounesto_core::{classify, build, PhasePair, SpinorKind, SpinorSpec, TolerancePolicy, LounestoClass};
//!
//! let spec = SpinorSpec::at_rest(SpinorKind::SingleHelicityPlus, 1.0, PhasePair::real(1.0, 1.0));
//! let psi = build(&spec).unwrap();
//! assert_eq!(classify(&psi, &TolerancePolicy::default()).unwrap(), LounestoClass::C2);
//! ```

// `!(x <= tol)` is used on purpose so that NaN counts as a failure.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod clifford;
pub mod dynamics;
mod error;
pub mod lounesto;
pub mod sampling;
pub mod spinor;
pub mod split;
pub mod sweeps;

pub use clifford::{
    bilinears, dirac_adjoint, fpk_residuals, gamma_basis, minkowski_dot, BilinearSet, FourVector,
    FpkResiduals, GammaBasis, C64,
};
pub use dynamics::{dirac_residual, dynamics_check, feynman_slash, DiracCheck};
pub use error::{Error, Result};
pub use lounesto::{
    classify, crosscheck, predict_class_from_phases, Crosscheck, LounestoClass, Support, TolerancePolicy,
};
pub use sampling::Sector;
pub use spinor::{
    boost, build, build_rest, two_component, wigner_theta, DiracSpinor, Direction, Helicity, PhasePair,
    RelativeSign, SpinorKind, SpinorSpec,
};
pub use split::{
    class6_search, compose, composition_table, gamma_union_report, split, Class6Report, Composition,
    CompositionRow, SplitResult, UnionReport,
};
