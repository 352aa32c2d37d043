//! Command-line and config-file parsing into a validated [`RunConfig`].

use std::ffi::OsString;
use std::fmt;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use cyldelta_core::model::{validate, EnergyLevel, PhysicalParams, QuantumNumbers};
use cyldelta_core::spectrum::ReferenceState;
use cyldelta_core::ZeroApproxMode;
use serde::Deserialize;

/// Mass and hbar defaults follow the `M = 1/2`, `hbar = 1` convention.
pub const DEFAULT_MASS: f64 = 0.5;
pub const DEFAULT_HBAR: f64 = 1.0;
/// Flat space.
pub const DEFAULT_DEFICIT: f64 = 1.0;
pub const DEFAULT_NU_STEP: f64 = 0.5;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum OutputFormat {
    Csv,
    Json,
}

impl OutputFormat {
    pub fn as_str(self) -> &'static str {
        match self {
            OutputFormat::Csv => "csv",
            OutputFormat::Json => "json",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum ModeArg {
    Exact,
    PaperLowOrder,
    PaperHighOrder,
}

impl From<ModeArg> for ZeroApproxMode {
    fn from(m: ModeArg) -> Self {
        match m {
            ModeArg::Exact => ZeroApproxMode::Exact,
            ModeArg::PaperLowOrder => ZeroApproxMode::PaperLowOrder,
            ModeArg::PaperHighOrder => ZeroApproxMode::PaperHighOrder,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum LevelArg {
    Ground,
    Excited,
}

impl From<LevelArg> for EnergyLevel {
    fn from(l: LevelArg) -> Self {
        match l {
            LevelArg::Ground => EnergyLevel::Ground,
            LevelArg::Excited => EnergyLevel::Excited,
        }
    }
}

#[derive(Debug, Parser)]
#[command(
    name = "cyldelta",
    version,
    about = "Spectrum of a particle in a cylinder with a conical defect and two attractive delta planes"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: CommandArgs,
}

/// Options every subcommand accepts. All are optional on the command line so
/// that a config file can supply them.
#[derive(Debug, Clone, Default, Args)]
pub struct CommonArgs {
    /// Particle mass M [default: 0.5]
    #[arg(long, allow_negative_numbers = true)]
    pub mass: Option<f64>,
    /// Strength of each delta plane
    #[arg(long, allow_negative_numbers = true)]
    pub coupling: Option<f64>,
    /// Half-distance z0 between the delta planes
    #[arg(long, allow_negative_numbers = true)]
    pub z0: Option<f64>,
    /// Conical defect parameter B [default: 1]
    #[arg(long, allow_negative_numbers = true)]
    pub deficit: Option<f64>,
    /// Cylinder radius R
    #[arg(long, allow_negative_numbers = true)]
    pub radius: Option<f64>,
    /// Reduced Planck constant [default: 1]
    #[arg(long, allow_negative_numbers = true)]
    pub hbar: Option<f64>,
    /// Output encoding [default: csv]
    #[arg(long, value_enum)]
    pub output: Option<OutputFormat>,
    /// Write to this file instead of standard output
    #[arg(long)]
    pub out: Option<PathBuf>,
    /// Flat JSON object whose keys are long flag names
    #[arg(long)]
    pub config: Option<PathBuf>,
}

#[derive(Debug, Subcommand)]
pub enum CommandArgs {
    /// Ground and excited z-states of the delta planes
    BoundStates {
        #[command(flatten)]
        common: CommonArgs,
    },
    /// The (m+1)-th positive zero of J_nu
    BesselZero {
        #[arg(long, allow_negative_numbers = true)]
        nu: Option<f64>,
        #[arg(long, allow_negative_numbers = true)]
        m: Option<i64>,
        /// Zero approximation [default: exact]
        #[arg(long, value_enum)]
        mode: Option<ModeArg>,
        #[command(flatten)]
        common: CommonArgs,
    },
    /// Joint spectrum over n <= n-max, m <= m-max
    Spectrum {
        #[arg(long, allow_negative_numbers = true)]
        n_max: Option<i64>,
        #[arg(long, allow_negative_numbers = true)]
        m_max: Option<i64>,
        /// Zero approximation [default: exact]
        #[arg(long, value_enum)]
        mode: Option<ModeArg>,
        /// Reference state n; with --ref-m, fixes R at its ground-level critical radius
        #[arg(long, allow_negative_numbers = true)]
        ref_n: Option<i64>,
        #[arg(long, allow_negative_numbers = true)]
        ref_m: Option<i64>,
        #[command(flatten)]
        common: CommonArgs,
    },
    /// Radius at which the (n, m) state has zero total energy
    CriticalRadius {
        #[arg(long, allow_negative_numbers = true)]
        n: Option<i64>,
        #[arg(long, allow_negative_numbers = true)]
        m: Option<i64>,
        /// z-level [default: ground]
        #[arg(long, value_enum)]
        level: Option<LevelArg>,
        #[command(flatten)]
        common: CommonArgs,
    },
    /// Relative error of pi (nu/2 + m + 3/4) against exact zeros
    CompareApprox {
        #[arg(long, allow_negative_numbers = true)]
        nu_max: Option<f64>,
        #[arg(long, allow_negative_numbers = true)]
        m_max: Option<i64>,
        /// Grid step in nu [default: 0.5]
        #[arg(long, allow_negative_numbers = true)]
        nu_step: Option<f64>,
        #[command(flatten)]
        common: CommonArgs,
    },
    /// J_nu(q) and its derivative
    EvalBessel {
        #[arg(long, allow_negative_numbers = true)]
        nu: Option<f64>,
        #[arg(long, allow_negative_numbers = true)]
        q: Option<f64>,
        #[command(flatten)]
        common: CommonArgs,
    },
}

/// Contents of a `--config` file. Keys are the long flag names.
#[derive(Debug, Clone, Default, Deserialize)]
#[serde(deny_unknown_fields, rename_all = "kebab-case")]
pub struct FileConfig {
    pub mass: Option<f64>,
    pub coupling: Option<f64>,
    pub z0: Option<f64>,
    pub deficit: Option<f64>,
    pub radius: Option<f64>,
    pub hbar: Option<f64>,
    pub output: Option<OutputFormat>,
    pub out: Option<PathBuf>,
    pub nu: Option<f64>,
    pub q: Option<f64>,
    pub n: Option<i64>,
    pub m: Option<i64>,
    pub n_max: Option<i64>,
    pub m_max: Option<i64>,
    pub nu_max: Option<f64>,
    pub nu_step: Option<f64>,
    pub mode: Option<ModeArg>,
    pub level: Option<LevelArg>,
    pub ref_n: Option<i64>,
    pub ref_m: Option<i64>,
}

#[derive(Debug, Clone, PartialEq)]
pub enum Command {
    BoundStates,
    BesselZero {
        nu: f64,
        m: u32,
        mode: ZeroApproxMode,
    },
    Spectrum {
        n_max: u32,
        m_max: u32,
        mode: ZeroApproxMode,
        reference: Option<ReferenceState>,
    },
    CriticalRadius {
        qn: QuantumNumbers,
        level: EnergyLevel,
    },
    CompareApprox {
        nu_max: f64,
        nu_step: f64,
        m_max: u32,
    },
    EvalBessel {
        nu: f64,
        q: f64,
    },
}

impl Command {
    pub fn name(&self) -> &'static str {
        match self {
            Command::BoundStates => "bound-states",
            Command::BesselZero { .. } => "bessel-zero",
            Command::Spectrum { .. } => "spectrum",
            Command::CriticalRadius { .. } => "critical-radius",
            Command::CompareApprox { .. } => "compare-approx",
            Command::EvalBessel { .. } => "eval-bessel",
        }
    }
}

/// A fully resolved and validated invocation.
#[derive(Debug, Clone, PartialEq)]
pub struct RunConfig {
    /// Physical parameters, for the commands that use them.
    pub params: Option<PhysicalParams>,
    /// Whether the radius in `params` was supplied rather than a placeholder.
    pub radius_given: bool,
    pub command: Command,
    pub output_format: OutputFormat,
    pub output_path: Option<PathBuf>,
}

#[derive(Debug)]
pub enum ConfigError {
    /// Bad flags or values. Exit status 2.
    Usage(String),
    /// Help or version output requested; not an error. Exit status 0.
    Display(String),
}

impl fmt::Display for ConfigError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ConfigError::Usage(msg) | ConfigError::Display(msg) => f.write_str(msg),
        }
    }
}

impl std::error::Error for ConfigError {}

fn usage(msg: impl Into<String>) -> ConfigError {
    ConfigError::Usage(msg.into())
}

pub fn read_config_file(path: &Path) -> Result<FileConfig, ConfigError> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| usage(format!("cannot read config file {}: {e}", path.display())))?;
    serde_json::from_str(&text)
        .map_err(|e| usage(format!("invalid config file {}: {e}", path.display())))
}

fn required<T>(value: Option<T>, flag: &str) -> Result<T, ConfigError> {
    value.ok_or_else(|| usage(format!("missing required option --{flag}")))
}

fn index(value: i64, name: &str) -> Result<u32, ConfigError> {
    u32::try_from(value).map_err(|_| usage(format!("{name} must be ≥ 0")))
}

fn non_negative(value: f64, name: &str) -> Result<f64, ConfigError> {
    if value >= 0.0 && value.is_finite() {
        Ok(value)
    } else {
        Err(usage(format!("{name} must be ≥ 0")))
    }
}

/// Parses `argv` (program name first), merges the optional config file under
/// the flags and validates the result.
pub fn parse_config<I, T>(argv: I) -> Result<RunConfig, ConfigError>
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = Cli::try_parse_from(argv).map_err(|e| {
        let rendered = e.render().to_string();
        if e.exit_code() == 0 {
            ConfigError::Display(rendered)
        } else {
            ConfigError::Usage(rendered.trim_end().to_string())
        }
    })?;
    resolve(cli.command)
}

fn common_of(args: &CommandArgs) -> &CommonArgs {
    match args {
        CommandArgs::BoundStates { common }
        | CommandArgs::BesselZero { common, .. }
        | CommandArgs::Spectrum { common, .. }
        | CommandArgs::CriticalRadius { common, .. }
        | CommandArgs::CompareApprox { common, .. }
        | CommandArgs::EvalBessel { common, .. } => common,
    }
}

/// Merges flags over the config file and validates everything.
pub fn resolve(args: CommandArgs) -> Result<RunConfig, ConfigError> {
    let common = common_of(&args).clone();
    let file = match &common.config {
        Some(path) => read_config_file(path)?,
        None => FileConfig::default(),
    };

    let output_format = common.output.or(file.output).unwrap_or(OutputFormat::Csv);
    let output_path = common.out.clone().or(file.out.clone());
    let mode = |flag: Option<ModeArg>| flag.or(file.mode).map_or(ZeroApproxMode::Exact, Into::into);

    let (command, needs) = match args {
        CommandArgs::BoundStates { .. } => (Command::BoundStates, Needs::Wells),
        CommandArgs::BesselZero {
            nu, m, mode: md, ..
        } => {
            let nu = non_negative(required(nu.or(file.nu), "nu")?, "nu")?;
            let m = index(required(m.or(file.m), "m")?, "m")?;
            (
                Command::BesselZero {
                    nu,
                    m,
                    mode: mode(md),
                },
                Needs::Nothing,
            )
        }
        CommandArgs::Spectrum {
            n_max,
            m_max,
            mode: md,
            ref_n,
            ref_m,
            ..
        } => {
            let n_max = index(required(n_max.or(file.n_max), "n-max")?, "n-max")?;
            let m_max = index(required(m_max.or(file.m_max), "m-max")?, "m-max")?;
            let reference = match (ref_n.or(file.ref_n), ref_m.or(file.ref_m)) {
                (None, None) => None,
                (Some(n), Some(m)) => Some(ReferenceState {
                    qn_bar: QuantumNumbers::new(index(n, "ref-n")?, index(m, "ref-m")?),
                }),
                _ => return Err(usage("--ref-n and --ref-m must be given together")),
            };
            let needs = if reference.is_some() {
                Needs::Wells
            } else {
                Needs::Cylinder
            };
            (
                Command::Spectrum {
                    n_max,
                    m_max,
                    mode: mode(md),
                    reference,
                },
                needs,
            )
        }
        CommandArgs::CriticalRadius { n, m, level, .. } => {
            let n = index(required(n.or(file.n), "n")?, "n")?;
            let m = index(required(m.or(file.m), "m")?, "m")?;
            let level = level.or(file.level).map_or(EnergyLevel::Ground, Into::into);
            (
                Command::CriticalRadius {
                    qn: QuantumNumbers::new(n, m),
                    level,
                },
                Needs::Wells,
            )
        }
        CommandArgs::CompareApprox {
            nu_max,
            m_max,
            nu_step,
            ..
        } => {
            let nu_max = non_negative(required(nu_max.or(file.nu_max), "nu-max")?, "nu-max")?;
            let m_max = index(required(m_max.or(file.m_max), "m-max")?, "m-max")?;
            let nu_step = nu_step.or(file.nu_step).unwrap_or(DEFAULT_NU_STEP);
            if !nu_step.is_finite() || nu_step <= 0.0 {
                return Err(usage("nu-step must be positive"));
            }
            (
                Command::CompareApprox {
                    nu_max,
                    nu_step,
                    m_max,
                },
                Needs::Nothing,
            )
        }
        CommandArgs::EvalBessel { nu, q, .. } => {
            let nu = non_negative(required(nu.or(file.nu), "nu")?, "nu")?;
            let q = non_negative(required(q.or(file.q), "q")?, "q")?;
            (Command::EvalBessel { nu, q }, Needs::Nothing)
        }
    };

    let radius = common.radius.or(file.radius);
    let params = match needs {
        Needs::Nothing => None,
        Needs::Wells | Needs::Cylinder => {
            let radius = match needs {
                Needs::Cylinder => Some(required(radius, "radius")?),
                _ => radius,
            };
            let params = PhysicalParams {
                mass: common.mass.or(file.mass).unwrap_or(DEFAULT_MASS),
                coupling: required(common.coupling.or(file.coupling), "coupling")?,
                half_separation: required(common.z0.or(file.z0), "z0")?,
                deficit: common.deficit.or(file.deficit).unwrap_or(DEFAULT_DEFICIT),
                // Placeholder; these commands never read the radius.
                radius: radius.unwrap_or(1.0),
                hbar: common.hbar.or(file.hbar).unwrap_or(DEFAULT_HBAR),
            };
            Some(validate(params).map_err(|e| usage(e.to_string()))?)
        }
    };

    Ok(RunConfig {
        params,
        radius_given: radius.is_some(),
        command,
        output_format,
        output_path,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Needs {
    Nothing,
    /// Delta-well parameters; the radius is optional.
    Wells,
    /// Everything including the radius.
    Cylinder,
}
