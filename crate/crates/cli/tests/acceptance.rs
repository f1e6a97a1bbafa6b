//! Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any failure.

use std::process::ExitCode;
use std::time::Instant;

use clap::Parser;
use lounesto_cli::{cmd_tables, Cli, Command};
use lounesto_core::sweeps::{coherence_sweep, dirac_sweep, fpk_sweep, FPK_REL_TOL};
use lounesto_core::{class6_search, composition_table, Sector, TolerancePolicy};

const SEED: u64 = 42;

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn tables(sector: Sector, expected_rows: usize) -> Outcome {
    let rows =
        composition_table(sector, 1000, SEED, &TolerancePolicy::default()).map_err(|e| e.to_string())?;
    let boundary: usize = rows.iter().map(|r| r.boundary_count).sum();
    let failed: Vec<String> = rows
        .iter()
        .filter(|r| !(r.all_succeeded() && r.sample_count == 1000))
        .map(|r| {
            format!(
                "{} = {} + {} ({}/{})",
                r.target_class, r.left_class, r.right_class, r.success_count, r.sample_count
            )
        })
        .collect();
    if rows.len() != expected_rows {
        Err(format!("{} rows, expected {expected_rows}", rows.len()))
    } else if failed.is_empty() {
        Ok(format!(
            "{} rows x 1000 draws, 100% success, {boundary} boundary draws skipped",
            rows.len()
        ))
    } else {
        Err(format!("failing rows: {}", failed.join("; ")))
    }
}

fn dirac() -> Outcome {
    let s = dirac_sweep(1000, SEED, &TolerancePolicy::default()).map_err(|e| e.to_string())?;
    let summary: Vec<String> = s
        .families
        .iter()
        .map(|f| {
            format!(
                "{:?} {}/{} (min rel {:.1e})",
                f.family, f.satisfied, f.samples, f.min_relative
            )
        })
        .collect();
    let short = s.families.iter().any(|f| f.samples != 1000) || s.linearity_pairs != 1000;
    let detail = format!(
        "{}; linearity {}/{} ok; triangle {}/{} ok",
        summary.join(", "),
        s.linearity_pairs - s.linearity_failures,
        s.linearity_pairs,
        s.triangle_pairs - s.triangle_failures,
        s.triangle_pairs
    );
    if s.violations() == 0 && !short {
        Ok(detail)
    } else {
        Err(detail)
    }
}

fn fpk() -> Outcome {
    let s = fpk_sweep(10_000, SEED, &TolerancePolicy::default()).map_err(|e| e.to_string())?;
    let detail = format!(
        "max r1/r2/r3 = {:.1e}/{:.1e}/{:.1e} (J0^2 units, limit {FPK_REL_TOL:.0e}); dual |J.J| max {:.1e} over {}; regular J.J min {:.2e} over {}",
        s.max_r1, s.max_r2, s.max_r3, s.max_dual_jj, s.dual_samples, s.min_regular_jj, s.regular_samples
    );
    if s.violations == 0 && s.samples == 10_000 && s.min_regular_jj > 0.0 {
        Ok(detail)
    } else {
        Err(format!("{} violations; {detail}", s.violations))
    }
}

fn coherence() -> Outcome {
    let s = coherence_sweep(10_000, SEED, &TolerancePolicy::default()).map_err(|e| e.to_string())?;
    let detail = format!(
        "{} specs, {} boundary skipped, disagreements {}, boost failures {}, rescale failures {}, classes {:?}",
        s.samples, s.boundary_skipped, s.disagreements, s.boost_failures, s.scale_failures, s.class_histogram
    );
    if s.violations() == 0 && s.samples == 10_000 {
        Ok(detail)
    } else {
        Err(detail)
    }
}

fn class6() -> Outcome {
    let r = class6_search(100_000, SEED, &TolerancePolicy::default()).map_err(|e| e.to_string())?;
    let detail = format!(
        "{} trials, {} sums, {} class-6 sums, {} class-6 splits with {} violations",
        r.trials, r.sums_examined, r.class6_sums, r.class6_splits, r.class6_split_violations
    );
    if r.class6_sums == 0 && r.class6_split_violations == 0 {
        Ok(detail)
    } else {
        Err(detail)
    }
}

fn determinism() -> Outcome {
    let mut bodies = Vec::new();
    for sector in ["regular", "singular"] {
        for format in ["json", "csv"] {
            let cli = Cli::try_parse_from([
                "lounesto", "tables", "--sector", sector, "--seed", "42", "--format", format,
            ])
            .map_err(|e| e.to_string())?;
            let Command::Tables(cmd) = &cli.command else {
                unreachable!()
            };
            let a = cmd_tables(cmd).map_err(|e| e.to_string())?;
            let b = cmd_tables(cmd).map_err(|e| e.to_string())?;
            if a.body != b.body {
                return Err(format!("{sector}/{format} output differs between runs"));
            }
            bodies.push(a.body.len());
        }
    }
    Ok(format!(
        "regular and singular, json and csv, byte-identical ({bodies:?} bytes)"
    ))
}

fn main() -> ExitCode {
    let start = Instant::now();
    let criteria: [Criterion; 7] = [
        ("1 regular composition table", || tables(Sector::Regular, 4)),
        ("2 singular composition table", || tables(Sector::Singular, 10)),
        ("3 Dirac partition", dirac),
        ("4 FPK audit", fpk),
        ("5 classifier coherence", coherence),
        ("6 class-6 search", class6),
        ("7 deterministic tables output", determinism),
    ];
    let mut failures = 0;
    for (name, check) in criteria {
        let t = Instant::now();
        match check() {
            Ok(detail) => println!(
                "PASS criterion {name}: {detail} [{:.2}s]",
                t.elapsed().as_secs_f64()
            ),
            Err(detail) => {
                failures += 1;
                println!(
                    "FAIL criterion {name}: {detail} [{:.2}s]",
                    t.elapsed().as_secs_f64()
                );
            }
        }
    }
    println!(
        "acceptance: {} of 7 passed in {:.2}s",
        7 - failures,
        start.elapsed().as_secs_f64()
    );
    if failures == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
