//! Real/imaginary phase splits, same-family sums, and the composition tables
//! of the regular and singular sectors.
//!
//! A spinor with phases `(alpha, beta)` is written as the sum of the spinor
//! with phases `(Re alpha, Re beta)` and the one with `(i Im alpha, i Im beta)`.
//! Each part is classified on its own; the composition tables list which
//! `(whole, left, right)` class triples occur.

use std::fmt;

use rand::Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::clifford::{bilinears, C64};
use crate::error::{Error, Result};
use crate::lounesto::{classify, is_boundary, LounestoClass, Support, TolerancePolicy};
use crate::sampling::{
    draw_rng, family, generic_complex, magnitude, phases_for_class, random_sign, unit_phase, DrawRng, Sector,
};
use crate::spinor::{build, DiracSpinor, PhasePair, SpinorSpec};

use LounestoClass::{C1, C2, C3, C4, C5, C6};

#[derive(Debug, Clone, PartialEq)]
pub struct SplitResult {
    pub whole: DiracSpinor,
    /// `None` when `(Re alpha, Re beta)` vanishes.
    pub part_real: Option<DiracSpinor>,
    /// `None` when `(Im alpha, Im beta)` vanishes.
    pub part_imag: Option<DiracSpinor>,
    pub class_whole: LounestoClass,
    pub class_real: LounestoClass,
    pub class_imag: LounestoClass,
    /// `|| whole - (part_real + part_imag) ||`
    pub recombination_residual: f64,
}

impl SplitResult {
    /// One of the parts is the zero spinor.
    pub fn is_degenerate(&self) -> bool {
        self.part_real.is_none() || self.part_imag.is_none()
    }

    /// `"j = k + l"`, with a `(degenerate)` suffix when a part is Null.
    pub fn relation(&self) -> String {
        let mut s = format!("{} = {} + {}", self.class_whole, self.class_real, self.class_imag);
        if self.is_degenerate() {
            s.push_str(" (degenerate)");
        }
        s
    }
}

fn part(spec: &SpinorSpec, phases: PhasePair) -> Result<Option<DiracSpinor>> {
    if phases.is_zero() {
        Ok(None)
    } else {
        build(&spec.with_phases(phases)).map(Some)
    }
}

fn class_or_null(psi: Option<&DiracSpinor>, tol: &TolerancePolicy) -> Result<LounestoClass> {
    psi.map_or(Ok(LounestoClass::Null), |p| classify(p, tol))
}

pub fn split(spec: &SpinorSpec, tol: &TolerancePolicy) -> Result<SplitResult> {
    let whole = build(spec)?;
    let part_real = part(spec, spec.phases.real_part())?;
    let part_imag = part(spec, spec.phases.imag_part())?;

    let mut recombined = DiracSpinor::zero();
    for p in part_real.iter().chain(part_imag.iter()) {
        recombined = &recombined + p;
    }
    let recombination_residual = (whole.amplitudes() - recombined.amplitudes()).norm();

    Ok(SplitResult {
        class_whole: classify(&whole, tol)?,
        class_real: class_or_null(part_real.as_ref(), tol)?,
        class_imag: class_or_null(part_imag.as_ref(), tol)?,
        whole,
        part_real,
        part_imag,
        recombination_residual,
    })
}

#[derive(Debug, Clone, PartialEq)]
pub struct Composition {
    pub sum: DiracSpinor,
    pub class: LounestoClass,
    pub class_left: LounestoClass,
    pub class_right: LounestoClass,
}

/// Sum two spinors of the same component family and classify all three.
pub fn compose(a: &SpinorSpec, b: &SpinorSpec, tol: &TolerancePolicy) -> Result<Composition> {
    if !a.same_family(b) {
        return Err(Error::FamilyMismatch(format!(
            "{} (m={}, theta={}, phi={}, p={}) vs {} (m={}, theta={}, phi={}, p={})",
            a.kind.label(),
            a.m,
            a.theta,
            a.phi,
            a.p,
            b.kind.label(),
            b.m,
            b.theta,
            b.phi,
            b.p
        )));
    }
    let left = build(a)?;
    let right = build(b)?;
    let sum = &left + &right;
    Ok(Composition {
        class: classify(&sum, tol)?,
        class_left: classify(&left, tol)?,
        class_right: classify(&right, tol)?,
        sum,
    })
}

/// Supports of the whole spinor and both parts; purely descriptive.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct UnionReport {
    pub relation: String,
    pub whole: Support,
    pub real: Support,
    pub imag: Support,
    pub parts_union: Support,
}

pub fn gamma_union_report(split: &SplitResult, tol: &TolerancePolicy) -> UnionReport {
    let support =
        |p: Option<&DiracSpinor>| p.map(|psi| Support::of(&bilinears(psi), tol)).unwrap_or_default();
    let real = support(split.part_real.as_ref());
    let imag = support(split.part_imag.as_ref());
    UnionReport {
        relation: split.relation(),
        whole: support(Some(&split.whole)),
        real,
        imag,
        parts_union: real.union(&imag),
    }
}

impl fmt::Display for UnionReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{}", self.relation)?;
        writeln!(f, "  whole       J + {}", self.whole)?;
        writeln!(f, "  real part   {}", self.real)?;
        writeln!(f, "  imag part   {}", self.imag)?;
        write!(f, "  parts union {}", self.parts_union)
    }
}

/// How a table row is exercised.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Route {
    /// Real/imaginary split of one spinor.
    Split,
    /// Sum of two independently drawn spinors.
    Compose,
}

/// One random instance of a table row.
#[derive(Debug, Clone, Copy)]
enum Draw {
    Split(SpinorSpec),
    Compose(SpinorSpec, SpinorSpec),
}

type Sampler = fn(&mut DrawRng) -> PhaseDraw;

enum PhaseDraw {
    Split(PhasePair),
    Compose(PhasePair, PhasePair),
}

#[derive(Clone, Copy)]
pub struct TableRow {
    pub target: LounestoClass,
    pub left: LounestoClass,
    pub right: LounestoClass,
    /// Constraint column of the published table, in ASCII.
    pub constraint_tag: &'static str,
    pub route: Route,
    sampler: Sampler,
}

impl fmt::Debug for TableRow {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "TableRow({} = {} + {})", self.target, self.left, self.right)
    }
}

fn i() -> C64 {
    C64::new(0.0, 1.0)
}

fn coin(rng: &mut DrawRng) -> bool {
    rng.gen()
}

// Regular sector. Parts of a single-helicity split are C2 when both phases
// survive, C6 when one does.

fn r_c1_22(rng: &mut DrawRng) -> PhaseDraw {
    PhaseDraw::Split(PhasePair::new(generic_complex(rng), generic_complex(rng)))
}

fn r_c1_26(rng: &mut DrawRng) -> PhaseDraw {
    let alpha = generic_complex(rng);
    let beta = if coin(rng) {
        C64::from(magnitude(rng))
    } else {
        i() * magnitude(rng)
    };
    PhaseDraw::Split(PhasePair::new(alpha, beta))
}

fn r_c2_22(rng: &mut DrawRng) -> PhaseDraw {
    let alpha = generic_complex(rng);
    PhaseDraw::Split(PhasePair::new(alpha, alpha))
}

fn r_c3_66(rng: &mut DrawRng) -> PhaseDraw {
    let (x, y) = (magnitude(rng), magnitude(rng));
    PhaseDraw::Split(if coin(rng) {
        PhasePair::new(i() * x, y.into())
    } else {
        PhasePair::new(x.into(), i() * y)
    })
}

// Singular sector. Parts of a dual-helicity split are C4 for unequal moduli,
// C5 for equal moduli, C6 when one phase vanishes.

fn s_c4_44(rng: &mut DrawRng) -> PhaseDraw {
    PhaseDraw::Split(PhasePair::new(generic_complex(rng), generic_complex(rng)))
}

fn s_c4_55(rng: &mut DrawRng) -> PhaseDraw {
    let mut neutral = || {
        let alpha = generic_complex(rng);
        PhasePair::new(alpha, alpha * unit_phase(rng))
    };
    PhaseDraw::Compose(neutral(), neutral())
}

fn s_c4_45(rng: &mut DrawRng) -> PhaseDraw {
    let (a, b, c) = (magnitude(rng), magnitude(rng), magnitude(rng));
    let s = random_sign(rng);
    PhaseDraw::Split(if coin(rng) {
        // real part (a, b) unequal, imaginary part (c, +-c) equal
        PhasePair::new(C64::new(a, c), C64::new(b, s * c))
    } else {
        PhasePair::new(C64::new(a, b), C64::new(s * a, c))
    })
}

fn s_c4_46(rng: &mut DrawRng) -> PhaseDraw {
    let alpha = generic_complex(rng);
    let beta = if coin(rng) {
        C64::from(magnitude(rng))
    } else {
        i() * magnitude(rng)
    };
    PhaseDraw::Split(PhasePair::new(alpha, beta))
}

fn s_c4_56(rng: &mut DrawRng) -> PhaseDraw {
    let alpha = generic_complex(rng);
    let s = random_sign(rng);
    let beta = if coin(rng) {
        C64::from(s * alpha.re)
    } else {
        i() * (s * alpha.im)
    };
    PhaseDraw::Split(PhasePair::new(alpha, beta))
}

fn s_c4_66(rng: &mut DrawRng) -> PhaseDraw {
    PhaseDraw::Split(PhasePair::new(i() * magnitude(rng), magnitude(rng).into()))
}

fn s_c5_44(rng: &mut DrawRng) -> PhaseDraw {
    let r = magnitude(rng).abs();
    PhaseDraw::Split(PhasePair::new(unit_phase(rng) * r, unit_phase(rng) * r))
}

fn s_c5_55(rng: &mut DrawRng) -> PhaseDraw {
    let alpha = generic_complex(rng);
    let beta = C64::new(random_sign(rng) * alpha.re, random_sign(rng) * alpha.im);
    PhaseDraw::Split(PhasePair::new(alpha, beta))
}

fn s_c5_46(rng: &mut DrawRng) -> PhaseDraw {
    let alpha = generic_complex(rng);
    PhaseDraw::Split(PhasePair::new(alpha, i() * (random_sign(rng) * alpha.norm())))
}

fn s_c5_66(rng: &mut DrawRng) -> PhaseDraw {
    let c = magnitude(rng);
    PhaseDraw::Split(PhasePair::new(i() * c, C64::from(random_sign(rng) * c)))
}

const fn row(
    target: LounestoClass,
    left: LounestoClass,
    right: LounestoClass,
    constraint_tag: &'static str,
    route: Route,
    sampler: Sampler,
) -> TableRow {
    TableRow {
        target,
        left,
        right,
        constraint_tag,
        route,
        sampler,
    }
}

const NEQ_GENERIC: &str = "alpha,beta in C with |alpha|^2 != |beta|^2";
const NEQ_REAL_OR_IM: &str = "alpha in C and beta in R with |alpha|^2 != |beta|^2 \
                              or alpha in C and beta in Im with |alpha|^2 != |beta|^2";

pub static REGULAR_TABLE: [TableRow; 4] = [
    row(
        C1,
        C2,
        C2,
        "alpha,beta in R or alpha,beta in Im",
        Route::Split,
        r_c1_22,
    ),
    row(
        C1,
        C2,
        C6,
        "alpha in C and beta in R or alpha in C and beta in Im",
        Route::Split,
        r_c1_26,
    ),
    row(
        C2,
        C2,
        C2,
        "alpha,beta in C | alpha = beta",
        Route::Split,
        r_c2_22,
    ),
    row(
        C3,
        C6,
        C6,
        "alpha in Im and beta in R or alpha in Im and beta in Im",
        Route::Split,
        r_c3_66,
    ),
];

pub static SINGULAR_TABLE: [TableRow; 10] = [
    row(C4, C4, C4, NEQ_GENERIC, Route::Split, s_c4_44),
    row(C4, C5, C5, NEQ_GENERIC, Route::Compose, s_c4_55),
    row(C4, C4, C5, NEQ_GENERIC, Route::Split, s_c4_45),
    row(C4, C4, C6, NEQ_REAL_OR_IM, Route::Split, s_c4_46),
    row(C4, C5, C6, NEQ_REAL_OR_IM, Route::Split, s_c4_56),
    row(
        C4,
        C6,
        C6,
        "alpha in Im and beta in R with |alpha|^2 != |beta|^2",
        Route::Split,
        s_c4_66,
    ),
    row(
        C5,
        C4,
        C4,
        "alpha,beta in C with |alpha|^2 != |beta|^2 \
         or alpha in C and beta in R with |alpha|^2 != |beta|^2",
        Route::Split,
        s_c5_44,
    ),
    row(C5, C5, C5, NEQ_GENERIC, Route::Split, s_c5_55),
    row(
        C5,
        C4,
        C6,
        "alpha in C and beta in Im with |alpha|^2 = |beta|^2",
        Route::Split,
        s_c5_46,
    ),
    row(
        C5,
        C6,
        C6,
        "alpha in Im and beta in R with |alpha|^2 = |beta|^2",
        Route::Split,
        s_c5_66,
    ),
];

pub fn table_rows(sector: Sector) -> &'static [TableRow] {
    match sector {
        Sector::Regular => &REGULAR_TABLE,
        Sector::Singular => &SINGULAR_TABLE,
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CompositionRow {
    pub target_class: LounestoClass,
    pub left_class: LounestoClass,
    pub right_class: LounestoClass,
    pub phase_constraint_tag: String,
    pub route: Route,
    /// Non-boundary draws evaluated.
    pub sample_count: usize,
    pub success_count: usize,
    /// Boundary draws skipped.
    pub boundary_count: usize,
}

impl CompositionRow {
    pub fn all_succeeded(&self) -> bool {
        self.success_count == self.sample_count
    }
}

/// Outcome of one draw: `None` for a boundary draw, else the class triple.
fn evaluate(
    draw: &Draw,
    tol: &TolerancePolicy,
) -> Result<Option<(LounestoClass, LounestoClass, LounestoClass)>> {
    let near = |s: &SpinorSpec, ph: PhasePair| !ph.is_zero() && is_boundary(s.kind, &ph, tol);
    match draw {
        Draw::Split(spec) => {
            let ph = spec.phases;
            if near(spec, ph) || near(spec, ph.real_part()) || near(spec, ph.imag_part()) {
                return Ok(None);
            }
            let s = split(spec, tol)?;
            Ok(Some((s.class_whole, s.class_real, s.class_imag)))
        }
        Draw::Compose(a, b) => {
            if near(a, a.phases) || near(b, b.phases) || near(a, a.phases + b.phases) {
                return Ok(None);
            }
            let c = compose(a, b, tol)?;
            Ok(Some((c.class, c.class_left, c.class_right)))
        }
    }
}

fn same_pair(x: (LounestoClass, LounestoClass), y: (LounestoClass, LounestoClass)) -> bool {
    x == y || x == (y.1, y.0)
}

/// Stream identifier for row `index` of `sector`.
fn row_stream(sector: Sector, index: usize) -> u64 {
    let base = match sector {
        Sector::Regular => 0x100,
        Sector::Singular => 0x200,
    };
    base + index as u64
}

fn run_row(
    sector: Sector,
    index: usize,
    row: &TableRow,
    samples: usize,
    seed: u64,
    tol: &TolerancePolicy,
) -> Result<CompositionRow> {
    let stream = row_stream(sector, index);
    let mut out = CompositionRow {
        target_class: row.target,
        left_class: row.left,
        right_class: row.right,
        phase_constraint_tag: row.constraint_tag.to_string(),
        route: row.route,
        sample_count: 0,
        success_count: 0,
        boundary_count: 0,
    };
    let mut draw_index = 0u64;
    while out.sample_count < samples {
        let mut rng = draw_rng(seed, stream, draw_index);
        draw_index += 1;
        let fam = family(&mut rng, sector, 10.0);
        let draw = match (row.sampler)(&mut rng) {
            PhaseDraw::Split(ph) => Draw::Split(fam.with_phases(ph)),
            PhaseDraw::Compose(a, b) => Draw::Compose(fam.with_phases(a), fam.with_phases(b)),
        };
        match evaluate(&draw, tol)? {
            None => out.boundary_count += 1,
            Some((whole, l, r)) => {
                out.sample_count += 1;
                if whole == row.target && same_pair((l, r), (row.left, row.right)) {
                    out.success_count += 1;
                }
            }
        }
    }
    Ok(out)
}

/// Reproduce the composition table of `sector` with `samples` non-boundary draws per row.
pub fn composition_table(
    sector: Sector,
    samples: usize,
    seed: u64,
    tol: &TolerancePolicy,
) -> Result<Vec<CompositionRow>> {
    if samples == 0 {
        return Err(Error::Domain("samples must be at least 1".into()));
    }
    table_rows(sector)
        .par_iter()
        .enumerate()
        .map(|(index, row)| run_row(sector, index, row, samples, seed, tol))
        .collect()
}

const CLASS6_PAIR_STREAM: u64 = 0x600;
const CLASS6_SPLIT_STREAM: u64 = 0x601;

#[derive(Debug, Clone, PartialEq, Eq, Default, Serialize)]
pub struct Class6Report {
    pub trials: usize,
    /// Pairs whose parts both classified in C1-C5 and were summed.
    pub sums_examined: usize,
    /// Pairs dropped because a part missed C1-C5 or sat on a boundary.
    pub pairs_skipped: usize,
    pub class6_sums: usize,
    /// Sum classes, indexed C1..C6 then Null.
    pub sum_histogram: [usize; 7],
    pub class6_splits: usize,
    /// C6 wholes whose parts were not `{C6, Null}` or `{C6, C6}`.
    pub class6_split_violations: usize,
}

impl Class6Report {
    fn merge(mut self, other: Class6Report) -> Class6Report {
        self.trials += other.trials;
        self.sums_examined += other.sums_examined;
        self.pairs_skipped += other.pairs_skipped;
        self.class6_sums += other.class6_sums;
        for (a, b) in self.sum_histogram.iter_mut().zip(other.sum_histogram) {
            *a += b;
        }
        self.class6_splits += other.class6_splits;
        self.class6_split_violations += other.class6_split_violations;
        self
    }
}

fn histogram_slot(c: LounestoClass) -> usize {
    c.number().map_or(6, |n| usize::from(n) - 1)
}

fn class6_trial(index: u64, seed: u64, tol: &TolerancePolicy) -> Result<Class6Report> {
    let mut report = Class6Report {
        trials: 1,
        ..Default::default()
    };

    let mut rng = draw_rng(seed, CLASS6_PAIR_STREAM, index);
    let sector = if rng.gen::<bool>() {
        Sector::Regular
    } else {
        Sector::Singular
    };
    let candidates: &[LounestoClass] = match sector {
        Sector::Regular => &[C1, C2, C3],
        Sector::Singular => &[C4, C5],
    };
    let fam = family(&mut rng, sector, 10.0);
    let operand = |rng: &mut DrawRng| {
        let class = candidates[rng.gen_range(0..candidates.len())];
        fam.with_phases(phases_for_class(rng, class))
    };
    let a = operand(&mut rng);
    let b = operand(&mut rng);
    let boundary = [a.phases, b.phases, a.phases + b.phases]
        .iter()
        .any(|ph| !ph.is_zero() && is_boundary(fam.kind, ph, tol));
    let c = compose(&a, &b, tol)?;
    let in_range = |x: LounestoClass| !matches!(x, C6 | LounestoClass::Null);
    if boundary || !in_range(c.class_left) || !in_range(c.class_right) {
        report.pairs_skipped = 1;
    } else {
        report.sums_examined = 1;
        report.sum_histogram[histogram_slot(c.class)] = 1;
        if c.class == C6 {
            report.class6_sums = 1;
        }
    }

    let mut rng = draw_rng(seed, CLASS6_SPLIT_STREAM, index);
    let sector = if rng.gen::<bool>() {
        Sector::Regular
    } else {
        Sector::Singular
    };
    let spec = family(&mut rng, sector, 10.0).with_phases(phases_for_class(&mut rng, C6));
    let s = split(&spec, tol)?;
    if s.class_whole == C6 {
        report.class6_splits = 1;
        let parts = (s.class_real, s.class_imag);
        let ok = same_pair(parts, (C6, LounestoClass::Null)) || parts == (C6, C6);
        if !ok {
            report.class6_split_violations = 1;
        }
    }
    Ok(report)
}

/// Random search for a C6 spinor written as a sum of two C1-C5 spinors.
pub fn class6_search(trials: usize, seed: u64, tol: &TolerancePolicy) -> Result<Class6Report> {
    if trials == 0 {
        return Err(Error::Domain("trials must be at least 1".into()));
    }
    (0..trials as u64)
        .into_par_iter()
        .map(|i| class6_trial(i, seed, tol))
        .try_reduce(Class6Report::default, |a, b| Ok(a.merge(b)))
}
