// SPDX-License-Identifier: Apache-2.0

mod args;
mod commands;
mod fetch;
mod output;

use std::process::ExitCode;
use std::time::{Instant, SystemTime};

use anyhow::Result;
use clap::Parser;

use args::{Cli, Command, RunArgs};
use output::RunManifest;

fn execute(name: &'static str, args: &RunArgs) -> Result<()> {
    let started = SystemTime::now();
    let clock = Instant::now();
    let loaded = commands::load_graph(&args.input)?;
    let g = &loaded.graph;
    let outcome = match name {
        "analyze" => commands::analyze(args, g)?,
        "sample" => commands::sample(args, g)?,
        _ => commands::attack(args, g)?,
    };
    let manifest = RunManifest {
        command: name,
        dataset: args.dataset_name(),
        input: args.input.display().to_string(),
        input_sha256: &loaded.sha256,
        nodes: g.n(),
        edges: g.m(),
        rng_seed: args.rng_seed,
        tool_version: env!("CARGO_PKG_VERSION"),
        config: args,
        sampler: args.sampler_config(),
        attack: (name == "attack").then(|| args.attack_config()).transpose()?,
    };
    let dir = output::write_run(args, &manifest, &outcome, started, clock.elapsed())?;
    println!("{}", outcome.summary);
    println!("{}", dir.display());
    Ok(())
}

fn run() -> Result<()> {
    let argv = args::expand_config(std::env::args_os().collect())?;
    let cli = Cli::try_parse_from(argv).unwrap_or_else(|e| e.exit());
    match &cli.command {
        Command::Analyze(a) => execute("analyze", a),
        Command::Sample(a) => execute("sample", a),
        Command::Attack(a) => execute("attack", a),
        Command::Fetch(f) => {
            if let Some(path) = fetch::run(f)? {
                println!("{}", path.display());
            }
            Ok(())
        }
    }
}

fn main() -> ExitCode {
    match run() {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            let chain: Vec<String> = e.chain().map(ToString::to_string).collect();
            eprintln!("error: {}", chain.join(": "));
            ExitCode::FAILURE
        }
    }
}
