// SPDX-License-Identifier: Apache-2.0

//! Opt-in download of known SNAP edge lists.

use std::fs;
use std::io::Read;
use std::path::PathBuf;

use anyhow::{bail, Context, Result};

use crate::args::FetchArgs;

/// Name and URL of each known dataset.
pub const DATASETS: &[(&str, &str)] = &[
    ("as20000102", "https://snap.stanford.edu/data/as20000102.txt.gz"),
    ("as-caida", "https://snap.stanford.edu/data/as-caida20071105.txt.gz"),
    ("oregon-1", "https://snap.stanford.edu/data/oregon1_010331.txt.gz"),
    ("oregon-2", "https://snap.stanford.edu/data/oregon2_010331.txt.gz"),
    ("p2p-Gnutella24", "https://snap.stanford.edu/data/p2p-Gnutella24.txt.gz"),
    ("ca-AstroPh", "https://snap.stanford.edu/data/ca-AstroPh.txt.gz"),
    ("ca-CondMat", "https://snap.stanford.edu/data/ca-CondMat.txt.gz"),
    ("cit-HepPh", "https://snap.stanford.edu/data/cit-HepPh.txt.gz"),
    ("cit-HepTh", "https://snap.stanford.edu/data/cit-HepTh.txt.gz"),
    ("email-Enron", "https://snap.stanford.edu/data/email-Enron.txt.gz"),
    ("facebook", "https://snap.stanford.edu/data/facebook_combined.txt.gz"),
    ("wiki-Vote", "https://snap.stanford.edu/data/wiki-Vote.txt.gz"),
];

pub fn lookup(name: &str) -> Option<&'static str> {
    DATASETS
        .iter()
        .find(|(n, _)| n.eq_ignore_ascii_case(name))
        .map(|&(_, url)| url)
}

pub fn run(args: &FetchArgs) -> Result<Option<PathBuf>> {
    if args.list {
        for (name, url) in DATASETS {
            println!("{name}\t{url}");
        }
        return Ok(None);
    }
    let Some(name) = &args.name else {
        bail!("dataset name required (see --list)");
    };
    let Some(url) = lookup(name) else {
        bail!("unknown dataset {name:?} (see --list)");
    };
    let file = url.rsplit('/').next().unwrap_or("dataset.txt.gz");
    let target = args.cache.join(file);
    if target.exists() {
        return Ok(Some(target));
    }
    if !args.yes {
        bail!("would download {url} to {}; pass --yes to allow network access", target.display());
    }
    let response = ureq::get(url).call().with_context(|| format!("{url}: download failed"))?;
    let mut bytes = Vec::new();
    response
        .into_reader()
        .read_to_end(&mut bytes)
        .with_context(|| format!("{url}: download interrupted"))?;
    fs::create_dir_all(&args.cache).with_context(|| format!("{}: cannot create", args.cache.display()))?;
    let partial = target.with_extension("part");
    fs::write(&partial, &bytes).with_context(|| format!("{}: cannot write", partial.display()))?;
    fs::rename(&partial, &target)?;
    Ok(Some(target))
}
