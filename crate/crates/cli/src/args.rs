use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use lounesto_core::{PhasePair, RelativeSign, Sector, SpinorKind, SpinorSpec, C64};
use serde::Serialize;

#[derive(Debug, Parser)]
#[command(
    name = "lounesto",
    version,
    about = "Lounesto classification of Dirac spinors built from phase factors"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Classify one spinor and print its bilinears and FPK residuals.
    Classify(SpinorCmd),
    /// Split one spinor into real-phase and imaginary-phase parts.
    Split(SpinorCmd),
    /// Reproduce the composition table of a sector from seeded draws.
    Tables(TablesCmd),
    /// Dirac-equation partition sweep, or a single check when phases are given.
    Dirac(DiracCmd),
    /// Fierz-Pauli-Kofink audit over random spinors.
    Fpk(SweepCmd),
    /// Random search for class-6 spinors built from two class 1-5 spinors.
    Class6(SweepCmd),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    /// Pretty-printed JSON record.
    Json,
    Csv,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum KindArg {
    #[value(name = "single+")]
    #[serde(rename = "single+")]
    SinglePlus,
    #[value(name = "single-")]
    #[serde(rename = "single-")]
    SingleMinus,
    #[value(name = "dual+")]
    #[serde(rename = "dual+")]
    DualPlus,
    #[value(name = "dual-")]
    #[serde(rename = "dual-")]
    DualMinus,
}

impl From<KindArg> for SpinorKind {
    fn from(k: KindArg) -> Self {
        match k {
            KindArg::SinglePlus => SpinorKind::SingleHelicityPlus,
            KindArg::SingleMinus => SpinorKind::SingleHelicityMinus,
            KindArg::DualPlus => SpinorKind::DualHelicityPlus,
            KindArg::DualMinus => SpinorKind::DualHelicityMinus,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum SignArg {
    Particle,
    Antiparticle,
}

impl From<SignArg> for RelativeSign {
    fn from(s: SignArg) -> Self {
        match s {
            SignArg::Particle => RelativeSign::Particle,
            SignArg::Antiparticle => RelativeSign::Antiparticle,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum SectorArg {
    Regular,
    Singular,
}

impl From<SectorArg> for Sector {
    fn from(s: SectorArg) -> Self {
        match s {
            SectorArg::Regular => Sector::Regular,
            SectorArg::Singular => Sector::Singular,
        }
    }
}

/// Parse `a+bi`, `a-bi`, `a`, `bi`, `i`, `-i`; exponents such as `1e-3+2e2i` are fine.
pub fn parse_complex(input: &str) -> Result<C64, String> {
    let s: String = input.chars().filter(|c| !c.is_whitespace()).collect();
    let bad = || format!("invalid complex number '{input}' (expected a+bi)");
    let real = |t: &str| t.parse::<f64>().map_err(|_| bad());
    let imag = |t: &str| match t {
        "" | "+" => Ok(1.0),
        "-" => Ok(-1.0),
        _ => real(t),
    };
    if s.is_empty() {
        return Err(bad());
    }
    let value = match s.strip_suffix(['i', 'j']) {
        None => C64::from(real(&s)?),
        Some(body) => {
            let bytes = body.as_bytes();
            let split = (1..bytes.len())
                .rev()
                .find(|&k| matches!(bytes[k], b'+' | b'-') && !matches!(bytes[k - 1], b'e' | b'E'));
            match split {
                Some(k) => C64::new(real(&body[..k])?, imag(&body[k..])?),
                None => C64::new(0.0, imag(body)?),
            }
        }
    };
    if value.re.is_finite() && value.im.is_finite() {
        Ok(value)
    } else {
        Err(bad())
    }
}

fn parse_rel_tol(s: &str) -> Result<f64, String> {
    match s.parse::<f64>() {
        Ok(v) if v.is_finite() && v > 0.0 => Ok(v),
        _ => Err(format!("relative tolerance must be a positive number, got '{s}'")),
    }
}

#[derive(Debug, Clone, Args, Serialize)]
pub struct SpinorArgs {
    #[arg(long, value_enum)]
    pub kind: KindArg,
    #[arg(long, default_value_t = 1.0, allow_hyphen_values = true)]
    pub m: f64,
    #[arg(long, default_value_t = 0.0, allow_hyphen_values = true)]
    pub theta: f64,
    #[arg(long, default_value_t = 0.0, allow_hyphen_values = true)]
    pub phi: f64,
    #[arg(long, default_value_t = 0.0, allow_hyphen_values = true)]
    pub p: f64,
    #[arg(long, value_enum, default_value_t = SignArg::Particle)]
    pub sign: SignArg,
    #[arg(long, value_parser = parse_complex, allow_hyphen_values = true)]
    pub alpha: C64,
    #[arg(long, value_parser = parse_complex, allow_hyphen_values = true)]
    pub beta: C64,
}

impl SpinorArgs {
    pub fn spec(&self) -> SpinorSpec {
        SpinorSpec {
            kind: self.kind.into(),
            m: self.m,
            theta: self.theta,
            phi: self.phi,
            p: self.p,
            sign: self.sign.into(),
            phases: PhasePair::new(self.alpha, self.beta),
        }
    }
}

#[derive(Debug, Clone, Args, Serialize)]
pub struct OutputArgs {
    #[arg(long, value_parser = parse_rel_tol, default_value_t = lounesto_core::lounesto::DEFAULT_REL_TOL)]
    pub rel_tol: f64,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    pub format: Format,
    /// Write to this file instead of standard output.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Clone, Args, Serialize)]
pub struct SamplingArgs {
    #[arg(long, default_value_t = 1000, value_parser = clap::value_parser!(u64).range(1..))]
    pub samples: u64,
    #[arg(long, default_value_t = 42)]
    pub seed: u64,
}

#[derive(Debug, Clone, Args, Serialize)]
pub struct SpinorCmd {
    #[command(flatten)]
    pub spinor: SpinorArgs,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Debug, Clone, Args, Serialize)]
pub struct TablesCmd {
    #[arg(long, value_enum)]
    pub sector: SectorArg,
    #[command(flatten)]
    pub sampling: SamplingArgs,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Debug, Clone, Args, Serialize)]
pub struct SweepCmd {
    #[command(flatten)]
    pub sampling: SamplingArgs,
    #[command(flatten)]
    pub output: OutputArgs,
}

/// Either a sweep, or a single spinor when `--kind/--alpha/--beta` are given.
#[derive(Debug, Clone, Args, Serialize)]
pub struct DiracCmd {
    #[arg(long, value_enum, requires_all = ["alpha", "beta"])]
    pub kind: Option<KindArg>,
    #[arg(long, default_value_t = 1.0, allow_hyphen_values = true)]
    pub m: f64,
    #[arg(long, default_value_t = 0.0, allow_hyphen_values = true)]
    pub theta: f64,
    #[arg(long, default_value_t = 0.0, allow_hyphen_values = true)]
    pub phi: f64,
    #[arg(long, default_value_t = 0.0, allow_hyphen_values = true)]
    pub p: f64,
    #[arg(long, value_enum, default_value_t = SignArg::Particle)]
    pub sign: SignArg,
    #[arg(long, value_parser = parse_complex, allow_hyphen_values = true, requires = "kind")]
    pub alpha: Option<C64>,
    #[arg(long, value_parser = parse_complex, allow_hyphen_values = true, requires = "kind")]
    pub beta: Option<C64>,
    #[command(flatten)]
    pub sampling: SamplingArgs,
    #[command(flatten)]
    pub output: OutputArgs,
}

impl DiracCmd {
    pub fn spec(&self) -> Option<SpinorSpec> {
        let (kind, alpha, beta) = (self.kind?, self.alpha?, self.beta?);
        Some(
            SpinorArgs {
                kind,
                m: self.m,
                theta: self.theta,
                phi: self.phi,
                p: self.p,
                sign: self.sign,
                alpha,
                beta,
            }
            .spec(),
        )
    }
}
