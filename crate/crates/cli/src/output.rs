// SPDX-License-Identifier: Apache-2.0

//! Run directories: `<out>/<dataset>/<command>/<timestamp>/`.

use std::fs;
use std::path::{Path, PathBuf};
use std::time::{Duration, SystemTime, UNIX_EPOCH};

use anyhow::{Context, Result};
use serde::Serialize;

use crate::args::RunArgs;
use crate::commands::Outcome;

/// Everything needed to re-derive the outputs of a run.
#[derive(Debug, Serialize)]
pub struct RunManifest<'a> {
    pub command: &'a str,
    pub dataset: String,
    pub input: String,
    pub input_sha256: &'a str,
    pub nodes: usize,
    pub edges: usize,
    pub rng_seed: u64,
    pub tool_version: &'static str,
    pub config: &'a RunArgs,
    pub sampler: richclub::SamplerConfig,
    pub attack: Option<richclub::AttackConfig>,
}

fn unique_dir(base: &Path, stamp: u64) -> PathBuf {
    let mut dir = base.join(stamp.to_string());
    let mut suffix = 1;
    while dir.exists() {
        dir = base.join(format!("{stamp}-{suffix}"));
        suffix += 1;
    }
    dir
}

/// Writes the outcome and its manifest. The manifest and result files carry
/// no clock values; timing goes to `timing.txt`.
pub fn write_run(
    args: &RunArgs,
    manifest: &RunManifest<'_>,
    outcome: &Outcome,
    started: SystemTime,
    elapsed: Duration,
) -> Result<PathBuf> {
    let stamp = started.duration_since(UNIX_EPOCH).map(|d| d.as_secs()).unwrap_or(0);
    let base = args.out.join(&manifest.dataset).join(manifest.command);
    fs::create_dir_all(&base).with_context(|| format!("{}: cannot create", base.display()))?;
    let dir = unique_dir(&base, stamp);
    fs::create_dir(&dir).with_context(|| format!("{}: cannot create", dir.display()))?;

    let mut manifest_bytes = serde_json::to_vec_pretty(manifest)?;
    manifest_bytes.push(b'\n');
    let timing = format!("started_unix={stamp}\nwall_clock_seconds={:.3}\n", elapsed.as_secs_f64());
    let extra: [(&str, &[u8]); 2] = [("manifest.json", &manifest_bytes), ("timing.txt", timing.as_bytes())];
    for (name, bytes) in outcome.files.iter().map(|(n, b)| (*n, b.as_slice())).chain(extra) {
        let path = dir.join(name);
        fs::write(&path, bytes).with_context(|| format!("{}: cannot write", path.display()))?;
    }
    Ok(dir)
}
