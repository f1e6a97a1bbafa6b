use lounesto_core::lounesto::Support;
use lounesto_core::sweeps::{dirac_sweep, fpk_sweep, DiracSweep, FpkSweep};
use lounesto_core::{
    bilinears, build, class6_search, classify, composition_table, crosscheck, dynamics_check, fpk_residuals,
    gamma_union_report, split, BilinearSet, Class6Report, CompositionRow, Crosscheck, DiracCheck,
    DiracSpinor, FpkResiduals, LounestoClass, TolerancePolicy, UnionReport, C64,
};
use serde::Serialize;

use crate::args::{DiracCmd, Format, OutputArgs, SpinorCmd, SweepCmd, TablesCmd};
use crate::{CliError, Report};

const FPK_TOL: f64 = lounesto_core::sweeps::FPK_REL_TOL;

#[derive(Serialize)]
struct Record<'a, C: Serialize, R: Serialize> {
    command: &'a str,
    config: &'a C,
    result: R,
    violations: usize,
}

fn policy(out: &OutputArgs) -> Result<TolerancePolicy, CliError> {
    Ok(TolerancePolicy::new(out.rel_tol)?)
}

fn samples(n: u64) -> Result<usize, CliError> {
    usize::try_from(n).map_err(|_| CliError::Invalid(format!("samples too large: {n}")))
}

fn json<C: Serialize, R: Serialize>(
    command: &str,
    config: &C,
    result: R,
    violations: usize,
) -> Result<Report, CliError> {
    let record = Record {
        command,
        config,
        result,
        violations,
    };
    let mut body = serde_json::to_string_pretty(&record)?;
    body.push('\n');
    Ok(Report { body, violations })
}

fn csv_body<I, R>(header: &[&str], rows: I) -> Result<String, CliError>
where
    I: IntoIterator<Item = R>,
    R: IntoIterator,
    R::Item: AsRef<[u8]>,
{
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(header)?;
    for row in rows {
        w.write_record(row)?;
    }
    let bytes = w.into_inner().map_err(|e| CliError::Io(e.into_error()))?;
    Ok(String::from_utf8(bytes).expect("csv output is utf-8"))
}

fn fmt_complex(c: C64) -> String {
    if c.im < 0.0 || (c.im == 0.0 && c.im.is_sign_negative()) {
        format!("{}-{}i", c.re, -c.im)
    } else {
        format!("{}+{}i", c.re, c.im)
    }
}

#[derive(Serialize)]
struct Magnitudes {
    sigma: f64,
    omega: f64,
    j: f64,
    k: f64,
    s: f64,
}

impl Magnitudes {
    fn of(b: &BilinearSet) -> Self {
        Magnitudes {
            sigma: b.sigma.norm(),
            omega: b.omega.norm(),
            j: b.j.euclidean_norm(),
            k: b.k.euclidean_norm(),
            s: b.s_frobenius(),
        }
    }
}

#[derive(Serialize)]
struct ClassifyResult {
    class: LounestoClass,
    amplitudes: Vec<C64>,
    magnitudes: Magnitudes,
    support: Support,
    bilinears: BilinearSet,
    fpk_residuals: FpkResiduals,
    /// `max(r1, r2, r3) / (J^0)^2`
    fpk_relative: f64,
    crosscheck: Crosscheck,
}

fn amplitudes(psi: &DiracSpinor) -> Vec<C64> {
    psi.amplitudes().iter().copied().collect()
}

pub fn cmd_classify(cmd: &SpinorCmd) -> Result<Report, CliError> {
    let tol = policy(&cmd.output)?;
    let spec = cmd.spinor.spec();
    let psi = build(&spec)?;
    let class = classify(&psi, &tol)?;
    let b = bilinears(&psi);
    let res = fpk_residuals(&b);
    let fpk_relative = res.max() / (b.scale() * b.scale());
    let check = crosscheck(&spec, &tol)?;
    let violations = usize::from(!(fpk_relative <= FPK_TOL)) + usize::from(!check.agree && !check.boundary);
    let result = ClassifyResult {
        class,
        amplitudes: amplitudes(&psi),
        magnitudes: Magnitudes::of(&b),
        support: Support::of(&b, &tol),
        bilinears: b,
        fpk_residuals: res,
        fpk_relative,
        crosscheck: check,
    };
    match cmd.output.format {
        Format::Json => json("classify", cmd, result, violations),
        Format::Csv => {
            let m = &result.magnitudes;
            let row = [
                cmd.spinor.spec().kind.label().to_string(),
                fmt_complex(cmd.spinor.alpha),
                fmt_complex(cmd.spinor.beta),
                class.to_string(),
                check.predicted.to_string(),
                m.sigma.to_string(),
                m.omega.to_string(),
                m.j.to_string(),
                m.k.to_string(),
                m.s.to_string(),
                fpk_relative.to_string(),
            ];
            let header = [
                "kind",
                "alpha",
                "beta",
                "class",
                "predicted_class",
                "sigma",
                "omega",
                "j",
                "k",
                "s",
                "fpk_relative",
            ];
            Ok(Report {
                body: csv_body(&header, [row])?,
                violations,
            })
        }
    }
}

#[derive(Serialize)]
struct SplitOutput {
    relation: String,
    class_whole: LounestoClass,
    class_real: LounestoClass,
    class_imag: LounestoClass,
    degenerate: bool,
    recombination_residual: f64,
    whole: Vec<C64>,
    part_real: Option<Vec<C64>>,
    part_imag: Option<Vec<C64>>,
    supports: UnionReport,
}

pub fn cmd_split(cmd: &SpinorCmd) -> Result<Report, CliError> {
    let tol = policy(&cmd.output)?;
    let r = split(&cmd.spinor.spec(), &tol)?;
    let out = SplitOutput {
        relation: r.relation(),
        class_whole: r.class_whole,
        class_real: r.class_real,
        class_imag: r.class_imag,
        degenerate: r.is_degenerate(),
        recombination_residual: r.recombination_residual,
        whole: amplitudes(&r.whole),
        part_real: r.part_real.as_ref().map(amplitudes),
        part_imag: r.part_imag.as_ref().map(amplitudes),
        supports: gamma_union_report(&r, &tol),
    };
    match cmd.output.format {
        Format::Json => json("split", cmd, out, 0),
        Format::Csv => {
            let header = [
                "relation",
                "class_whole",
                "class_real",
                "class_imag",
                "recombination_residual",
            ];
            let row = [
                out.relation,
                out.class_whole.to_string(),
                out.class_real.to_string(),
                out.class_imag.to_string(),
                out.recombination_residual.to_string(),
            ];
            Ok(Report {
                body: csv_body(&header, [row])?,
                violations: 0,
            })
        }
    }
}

#[derive(Serialize)]
struct TablesOutput {
    rows: Vec<CompositionRow>,
    all_succeeded: bool,
}

pub fn cmd_tables(cmd: &TablesCmd) -> Result<Report, CliError> {
    let tol = policy(&cmd.output)?;
    let rows = composition_table(
        cmd.sector.into(),
        samples(cmd.sampling.samples)?,
        cmd.sampling.seed,
        &tol,
    )?;
    let violations = rows.iter().filter(|r| !r.all_succeeded()).count();
    match cmd.output.format {
        Format::Json => {
            let all_succeeded = violations == 0;
            json("tables", cmd, TablesOutput { rows, all_succeeded }, violations)
        }
        Format::Csv => {
            let header = [
                "target_class",
                "left_class",
                "right_class",
                "constraint_tag",
                "samples",
                "successes",
            ];
            let body = csv_body(
                &header,
                rows.iter().map(|r| {
                    [
                        r.target_class.to_string(),
                        r.left_class.to_string(),
                        r.right_class.to_string(),
                        r.phase_constraint_tag.clone(),
                        r.sample_count.to_string(),
                        r.success_count.to_string(),
                    ]
                }),
            )?;
            Ok(Report { body, violations })
        }
    }
}

fn dirac_single(cmd: &DiracCmd, check: DiracCheck) -> Result<Report, CliError> {
    match cmd.output.format {
        Format::Json => json("dirac", cmd, check, 0),
        Format::Csv => {
            let header = ["class", "residual", "relative", "satisfies"];
            let row = [
                check.class_of_input.to_string(),
                check.residual.to_string(),
                check.relative.to_string(),
                check.satisfies.to_string(),
            ];
            Ok(Report {
                body: csv_body(&header, [row])?,
                violations: 0,
            })
        }
    }
}

fn dirac_sweep_report(cmd: &DiracCmd, sweep: DiracSweep) -> Result<Report, CliError> {
    let violations = sweep.violations();
    match cmd.output.format {
        Format::Json => json("dirac", cmd, sweep, violations),
        Format::Csv => {
            let header = [
                "family",
                "samples",
                "satisfied",
                "min_relative",
                "max_relative",
                "violations",
            ];
            let body = csv_body(
                &header,
                sweep.families.iter().map(|f| {
                    [
                        format!("{:?}", f.family),
                        f.samples.to_string(),
                        f.satisfied.to_string(),
                        f.min_relative.to_string(),
                        f.max_relative.to_string(),
                        f.violations().to_string(),
                    ]
                }),
            )?;
            Ok(Report { body, violations })
        }
    }
}

/// Single check when a spinor is given, otherwise the partition sweep.
pub fn cmd_dirac(cmd: &DiracCmd) -> Result<Report, CliError> {
    let tol = policy(&cmd.output)?;
    match cmd.spec() {
        Some(spec) => dirac_single(cmd, dynamics_check(&spec, &tol)?),
        None => {
            let sweep = dirac_sweep(samples(cmd.sampling.samples)?, cmd.sampling.seed, &tol)?;
            dirac_sweep_report(cmd, sweep)
        }
    }
}

pub fn cmd_fpk(cmd: &SweepCmd) -> Result<Report, CliError> {
    let tol = policy(&cmd.output)?;
    let s: FpkSweep = fpk_sweep(samples(cmd.sampling.samples)?, cmd.sampling.seed, &tol)?;
    let violations = s.violations;
    match cmd.output.format {
        Format::Json => json("fpk", cmd, s, violations),
        Format::Csv => {
            let header = [
                "samples",
                "max_r1",
                "max_r2",
                "max_r3",
                "dual_samples",
                "max_dual_jj",
                "regular_samples",
                "min_regular_jj",
                "violations",
            ];
            let row = [
                s.samples.to_string(),
                s.max_r1.to_string(),
                s.max_r2.to_string(),
                s.max_r3.to_string(),
                s.dual_samples.to_string(),
                s.max_dual_jj.to_string(),
                s.regular_samples.to_string(),
                s.min_regular_jj.to_string(),
                s.violations.to_string(),
            ];
            Ok(Report {
                body: csv_body(&header, [row])?,
                violations,
            })
        }
    }
}

pub fn cmd_class6(cmd: &SweepCmd) -> Result<Report, CliError> {
    let tol = policy(&cmd.output)?;
    let r: Class6Report = class6_search(samples(cmd.sampling.samples)?, cmd.sampling.seed, &tol)?;
    let violations = r.class6_sums + r.class6_split_violations;
    match cmd.output.format {
        Format::Json => json("class6", cmd, r, violations),
        Format::Csv => {
            let header = [
                "trials",
                "sums_examined",
                "pairs_skipped",
                "class6_sums",
                "class6_splits",
                "class6_split_violations",
            ];
            let row = [
                r.trials.to_string(),
                r.sums_examined.to_string(),
                r.pairs_skipped.to_string(),
                r.class6_sums.to_string(),
                r.class6_splits.to_string(),
                r.class6_split_violations.to_string(),
            ];
            Ok(Report {
                body: csv_body(&header, [row])?,
                violations,
            })
        }
    }
}
