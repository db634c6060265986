//! Command line, config file and environment, merged into run parameters.
//!
//! Precedence is flag, then config file, then `JTWIST_ORDER` (order only),
//! then the built-in defaults.

use std::path::{Path, PathBuf};

use anyhow::{Context, Result};
use clap::builder::{PossibleValuesParser, TypedValueParser};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Deserialize;

use jtwist_core::twist::Variant;

use crate::emit::EmitObject;
use crate::format::{parse_rational, read_json, ActionDoc, CoefficientsDoc};
use crate::suites::{Params, Suite};

/// Environment variable holding the default truncation order.
pub const ORDER_ENV: &str = "JTWIST_ORDER";

#[derive(Debug, Parser)]
#[command(name = "jtwist", version, about = "Exact verification of extended jordanian twists")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Run one or more check suites; exits 1 if any check fails.
    Verify {
        #[arg(
            required = true,
            num_args = 1..,
            value_parser = PossibleValuesParser::new(Suite::ALL.map(|s| s.name()))
                .map(|s| s.parse::<Suite>().expect("listed suite")),
        )]
        suites: Vec<Suite>,
        #[command(flatten)]
        options: Options,
    },
    /// Export an R-matrix, a twist or a classical r-matrix.
    Emit {
        object: EmitObject,
        #[command(flatten)]
        options: Options,
    },
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, ValueEnum, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    #[default]
    Text,
    Json,
}

#[derive(Clone, Debug, Default, Args)]
pub struct Options {
    /// Size N of gl(N).
    #[arg(long)]
    pub n: Option<usize>,
    /// Truncation order K (identities hold mod ξ^{K+1}).
    #[arg(long)]
    pub order: Option<usize>,
    /// jordanian_only, extended_single, extended_multi or abstract_L.
    #[arg(long)]
    pub variant: Option<String>,
    /// JSON file with extension coefficients.
    #[arg(long)]
    pub coeffs: Option<PathBuf>,
    /// JSON file with action constants for the inhom suite.
    #[arg(long)]
    pub constants: Option<PathBuf>,
    /// Sample value of h for r_{h;ξ}; repeatable.
    #[arg(long = "h")]
    pub h: Vec<String>,
    /// Weight of A on the abstract four-dimensional algebra.
    #[arg(long)]
    pub alpha: Option<String>,
    /// TOML file with any of the above; flags win over it.
    #[arg(long)]
    pub config: Option<PathBuf>,
    #[arg(long, value_enum)]
    pub format: Option<Format>,
    /// Write the output here instead of stdout.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

/// Keys of the TOML config file. Relative paths resolve against the file's
/// directory.
#[derive(Clone, Debug, Default, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FileConfig {
    pub n: Option<usize>,
    pub order: Option<usize>,
    pub variant: Option<String>,
    pub coeffs: Option<PathBuf>,
    pub constants: Option<PathBuf>,
    pub h: Option<Vec<String>>,
    pub alpha: Option<String>,
    pub format: Option<Format>,
    pub out: Option<PathBuf>,
}

impl FileConfig {
    pub fn load(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
        let mut cfg: FileConfig = toml::from_str(&text).with_context(|| format!("parsing {}", path.display()))?;
        let base = path.parent().unwrap_or(Path::new(""));
        for p in [&mut cfg.coeffs, &mut cfg.constants, &mut cfg.out].into_iter().flatten() {
            if p.is_relative() {
                *p = base.join(&*p);
            }
        }
        Ok(cfg)
    }
}

#[derive(Clone, Debug)]
pub struct Resolved {
    pub params: Params,
    pub format: Format,
    pub out: Option<PathBuf>,
}

/// Merges flags, the config file named by `--config`, and the order taken
/// from the environment. Every error here is a usage error.
pub fn resolve(opts: &Options, env_order: Option<&str>) -> Result<Resolved> {
    let file = match &opts.config {
        Some(p) => FileConfig::load(p)?,
        None => FileConfig::default(),
    };
    let env_order = env_order
        .map(|s| s.trim().parse::<usize>().with_context(|| format!("{ORDER_ENV}={s} is not a truncation order")))
        .transpose()?;
    let mut p = Params::default();
    if let Some(n) = opts.n.or(file.n) {
        p.n = n;
    }
    if let Some(k) = opts.order.or(file.order).or(env_order) {
        p.order = k;
    }
    if let Some(v) = opts.variant.as_ref().or(file.variant.as_ref()) {
        p.variant = Variant::parse(v)?;
    }
    if let Some(path) = opts.coeffs.as_ref().or(file.coeffs.as_ref()) {
        p.coefficients = Some(read_json::<CoefficientsDoc>(path)?.to_coefficients()?);
    }
    if let Some(path) = opts.constants.as_ref().or(file.constants.as_ref()) {
        p.constants = Some(read_json::<ActionDoc>(path)?.to_action()?);
    }
    let h = if !opts.h.is_empty() { Some(&opts.h) } else { file.h.as_ref() };
    if let Some(h) = h {
        p.h_samples = h.iter().map(|s| parse_rational(s)).collect::<Result<_>>()?;
    }
    if let Some(a) = opts.alpha.as_ref().or(file.alpha.as_ref()) {
        p.alpha = parse_rational(a)?;
    }
    p.validate()?;
    Ok(Resolved {
        params: p,
        format: opts.format.or(file.format).unwrap_or_default(),
        out: opts.out.clone().or(file.out),
    })
}
