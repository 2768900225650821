// SPDX-License-Identifier: Apache-2.0

//! Command-line flags and the optional flat `key=value` config file.

use std::ffi::OsString;
use std::path::{Path, PathBuf};

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use richclub::{AttackConfig, BetweennessVariant, Criterion, SamplerConfig, SeedStrategy};
use serde::Serialize;

#[derive(Debug, Parser)]
#[command(name = "richclub", version, about = "Scattered rich-club analysis and centrality attacks")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Centralities, cores, clusters and scatteredness of a network.
    Analyze(RunArgs),
    /// Predict high-centrality vertices with repeated snowball sampling.
    Sample(RunArgs),
    /// Sampling-based edge-removal attack with Jaccard evaluation.
    Attack(RunArgs),
    /// Download a known SNAP dataset into a cache directory.
    Fetch(FetchArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum SeedStrategyArg {
    Random,
    HdHcc,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum BetweennessArg {
    PerPair,
    PaperLiteral,
}

#[derive(Debug, Clone, Args, Serialize)]
#[command(args_override_self = true)]
pub struct RunArgs {
    /// Edge-list file (`.gz` is decompressed).
    #[arg(long)]
    pub input: PathBuf,
    /// Dataset name used in output paths and tables; defaults to the file stem.
    #[arg(long)]
    pub dataset: Option<String>,
    #[arg(long, default_value_t = 20)]
    pub k: usize,
    #[arg(long, value_enum, default_value = "random")]
    pub seed_strategy: SeedStrategyArg,
    #[arg(long, default_value_t = 0)]
    pub rng_seed: u64,
    #[arg(long, default_value_t = 0.10)]
    pub sample_fraction: f64,
    #[arg(long, default_value_t = 40)]
    pub max_runs: usize,
    #[arg(long, default_value_t = 40)]
    pub prediction_size: usize,
    #[arg(long, default_value = "1", value_parser = ["1", "2"])]
    pub criterion: String,
    /// Removal levels in percent of the original edge count.
    #[arg(long, default_value = "2,4,6,8")]
    pub percentages: String,
    #[arg(long, default_value_t = 5)]
    pub trials: usize,
    #[arg(long, value_enum, default_value = "per-pair")]
    pub betweenness: BetweennessArg,
    #[arg(long, default_value = "out")]
    pub out: PathBuf,
    #[arg(long, default_value_t = 1)]
    pub threads: usize,
    /// Skip exact ground-truth centralities in `sample` (no precision/recall).
    #[arg(long)]
    pub skip_truth: bool,
    /// Flat `key=value` file; keys are flag names without dashes prefix.
    #[arg(long)]
    pub config: Option<PathBuf>,
}

#[derive(Debug, Clone, Args)]
pub struct FetchArgs {
    /// Dataset name, e.g. `as20000102`.
    pub name: Option<String>,
    #[arg(long, default_value = "datasets")]
    pub cache: PathBuf,
    /// Confirms network access.
    #[arg(long)]
    pub yes: bool,
    /// List known datasets.
    #[arg(long)]
    pub list: bool,
}

impl RunArgs {
    pub fn dataset_name(&self) -> String {
        if let Some(name) = &self.dataset {
            return name.clone();
        }
        let file = self.input.file_name().and_then(|f| f.to_str()).unwrap_or("dataset");
        let trimmed = file.strip_suffix(".gz").unwrap_or(file);
        match trimmed.rsplit_once('.') {
            Some((stem, _)) if !stem.is_empty() => stem.to_owned(),
            _ => trimmed.to_owned(),
        }
    }

    pub fn seed_strategy(&self) -> SeedStrategy {
        match self.seed_strategy {
            SeedStrategyArg::Random => SeedStrategy::Random,
            SeedStrategyArg::HdHcc => SeedStrategy::HdHcc,
        }
    }

    pub fn betweenness_variant(&self) -> BetweennessVariant {
        match self.betweenness {
            BetweennessArg::PerPair => BetweennessVariant::PerPair,
            BetweennessArg::PaperLiteral => BetweennessVariant::PaperLiteral,
        }
    }

    pub fn percentages(&self) -> Result<Vec<f64>> {
        parse_percentages(&self.percentages)
    }

    pub fn sampler_config(&self) -> SamplerConfig {
        SamplerConfig {
            sample_fraction: self.sample_fraction,
            max_runs: self.max_runs,
            seed_strategy: self.seed_strategy(),
            rng_seed: self.rng_seed,
            prediction_size: self.prediction_size,
        }
    }

    pub fn attack_config(&self) -> Result<AttackConfig> {
        Ok(AttackConfig {
            criterion: if self.criterion == "2" { Criterion::Two } else { Criterion::One },
            percentages: self.percentages()?,
            trials: self.trials,
            seed_strategy: self.seed_strategy(),
            sample_fraction: self.sample_fraction,
            rng_seed: self.rng_seed,
            k: self.k,
            betweenness_variant: self.betweenness_variant(),
            threads: self.threads.max(1),
        })
    }
}

/// `"2,4,6,8"` (percent) to `[0.02, 0.04, 0.06, 0.08]`.
pub fn parse_percentages(list: &str) -> Result<Vec<f64>> {
    list.split(',')
        .map(str::trim)
        .filter(|s| !s.is_empty())
        .map(|s| {
            s.parse::<f64>()
                .map(|p| p / 100.0)
                .with_context(|| format!("invalid percentage {s:?}"))
        })
        .collect()
}

/// Reads a flat config file into `--key value` pairs.
pub fn config_file_args(path: &Path) -> Result<Vec<OsString>> {
    let text = std::fs::read_to_string(path).with_context(|| format!("{}: cannot read config", path.display()))?;
    let mut out = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let Some((key, value)) = line.split_once('=') else {
            bail!("{}:{}: expected key=value", path.display(), i + 1);
        };
        let key = key.trim().trim_start_matches("--").replace('_', "-");
        if key == "config" {
            bail!("{}:{}: config files cannot include other config files", path.display(), i + 1);
        }
        let value = value.trim();
        if value == "true" {
            out.push(OsString::from(format!("--{key}")));
        } else if value != "false" {
            out.push(OsString::from(format!("--{key}")));
            out.push(OsString::from(value));
        }
    }
    Ok(out)
}

/// Splices config-file flags in front of the command-line flags so that the
/// latter win.
pub fn expand_config(argv: Vec<OsString>) -> Result<Vec<OsString>> {
    let mut config = None;
    let mut iter = argv.iter().enumerate();
    while let Some((_, arg)) = iter.next() {
        let s = arg.to_string_lossy();
        if s == "--config" {
            config = iter.next().map(|(_, p)| PathBuf::from(p));
        } else if let Some(p) = s.strip_prefix("--config=") {
            config = Some(PathBuf::from(p));
        }
    }
    let Some(path) = config else { return Ok(argv) };
    if argv.len() < 2 {
        return Ok(argv);
    }
    let mut out = argv[..2].to_vec();
    out.extend(config_file_args(&path)?);
    out.extend(argv[2..].iter().cloned());
    Ok(out)
}
