// SPDX-License-Identifier: Apache-2.0

use std::fs::File;
use std::io::{BufReader, Read};
use std::path::Path;

use anyhow::{anyhow, Context, Result};
use richclub::centrality::ground_truth_detailed;
use richclub::clubs::{scatteredness, RichClubSummary};
use richclub::sampler::PredictionSummary;
use richclub::{
    build_clusters, core_decompose, predict_high_centrality, run_attack, Error, Graph,
};
use serde::Serialize;
use sha2::{Digest, Sha256};

use crate::args::RunArgs;

/// Result files of one command, written only after everything succeeded.
pub struct Outcome {
    pub files: Vec<(&'static str, Vec<u8>)>,
    pub summary: String,
}

pub struct LoadedGraph {
    pub graph: Graph,
    pub sha256: String,
}

/// Reads an edge list, decompressing `.gz` files.
pub fn load_graph(path: &Path) -> Result<LoadedGraph> {
    let mut raw = Vec::new();
    File::open(path)
        .and_then(|f| BufReader::new(f).read_to_end(&mut raw))
        .with_context(|| format!("{}: cannot read", path.display()))?;
    let sha256 = format!("{:x}", Sha256::digest(&raw));
    let text = if path.extension().is_some_and(|e| e == "gz") {
        let mut out = Vec::new();
        flate2::read::GzDecoder::new(raw.as_slice())
            .read_to_end(&mut out)
            .with_context(|| format!("{}: invalid gzip data", path.display()))?;
        out
    } else {
        raw
    };
    let graph = richclub::graph::read_edge_list(text.as_slice()).map_err(|e| match e {
        Error::Parse { line, message } => anyhow!("{}:{}: {}", path.display(), line, message),
        other => anyhow!("{}: {}", path.display(), other),
    })?;
    Ok(LoadedGraph { graph, sha256 })
}

fn json<T: Serialize>(value: &T) -> Result<Vec<u8>> {
    let mut bytes = serde_json::to_vec_pretty(value)?;
    bytes.push(b'\n');
    Ok(bytes)
}

#[derive(Serialize)]
struct RankingJson<'a> {
    k: usize,
    betweenness_variant: &'a str,
    top_betweenness: Vec<&'a str>,
    top_closeness: Vec<&'a str>,
    high_centrality: Vec<(&'a str, richclub::centrality::SourceTag)>,
}

pub fn analyze(args: &RunArgs, g: &Graph) -> Result<Outcome> {
    let variant = args.betweenness_variant();
    let truth = ground_truth_detailed::<f64>(g, args.k, variant, args.threads)?;
    let cores = core_decompose(g);
    let clusters = build_clusters(g, &truth.high_centrality)?;
    let report = scatteredness::<f64>(&clusters)?;
    let summary = RichClubSummary::new(g, &clusters, &report);

    let labels = |vs: &[usize]| vs.iter().map(|&v| g.label(v)).collect::<Vec<_>>();
    let ranking = RankingJson {
        k: args.k,
        betweenness_variant: variant.as_str(),
        top_betweenness: labels(&truth.top_betweenness.members),
        top_closeness: labels(&truth.top_closeness.members),
        high_centrality: truth
            .high_centrality
            .vertices
            .iter()
            .zip(&truth.high_centrality.sources)
            .map(|(&v, &tag)| (g.label(v), tag))
            .collect(),
    };
    let avg_clustering: f64 = richclub::graph::average_clustering(g)?;
    let table_row = format!(
        "dataset,nodes,edges,avg_clustering,max_core,clusters,hc_nodes,distribution,scatteredness\n{},{},{},{},{},{},{},\"{}\",{}\n",
        args.dataset_name(),
        g.n(),
        g.m(),
        avg_clustering,
        cores.delta_max,
        summary.cluster_count,
        truth.high_centrality.len(),
        summary.distribution_label(),
        summary.scatteredness
    );

    Ok(Outcome {
        summary: format!(
            "{}: n={} m={} clusters={} hc={} distribution={} scatteredness={:.4}",
            args.dataset_name(),
            g.n(),
            g.m(),
            summary.cluster_count,
            truth.high_centrality.len(),
            summary.distribution_label(),
            summary.scatteredness
        ),
        files: vec![
            ("closeness.csv", truth.closeness.to_csv(g).into_bytes()),
            ("betweenness.csv", truth.betweenness.to_csv(g).into_bytes()),
            ("core_histogram.csv", cores.histogram_csv().into_bytes()),
            ("ground_truth.json", json(&ranking)?),
            ("richclub.json", json(&summary)?),
            ("table_row.csv", table_row.into_bytes()),
        ],
    })
}

pub fn sample(args: &RunArgs, g: &Graph) -> Result<Outcome> {
    let cfg = args.sampler_config();
    let mut result = predict_high_centrality::<f64>(g, &cfg).map_err(|e| match e {
        Error::DegenerateGraph { required, .. } => anyhow!("n ≥ {required} required (graph has {} vertices)", g.n()),
        other => other.into(),
    })?;
    let truth = if args.skip_truth {
        None
    } else {
        let t = ground_truth_detailed::<f64>(g, args.k, args.betweenness_variant(), args.threads)?;
        result.evaluate(&t.high_centrality)?;
        Some(t.high_centrality)
    };
    let summary = PredictionSummary::new(g, &cfg, &result, truth.as_ref());
    let fmt = |x: Option<f64>| x.map_or("n/a".to_owned(), |v| format!("{v:.3}"));
    Ok(Outcome {
        summary: format!(
            "{}: runs={} predicted={} clusters={} precision={} recall={}",
            args.dataset_name(),
            result.runs,
            result.predicted.len(),
            result.clusters_found,
            fmt(summary.precision),
            fmt(summary.recall)
        ),
        files: vec![
            ("prediction.json", json(&summary)?),
            ("table_row.csv", summary.table_row_csv(&args.dataset_name()).into_bytes()),
        ],
    })
}

#[derive(Serialize)]
struct AttackJson<'a> {
    dataset: String,
    original_top_betweenness_labels: Vec<&'a str>,
    original_top_closeness_labels: Vec<&'a str>,
    #[serde(flatten)]
    report: &'a richclub::AttackReport,
}

pub fn attack(args: &RunArgs, g: &Graph) -> Result<Outcome> {
    let cfg = args.attack_config()?;
    let report = run_attack::<f64>(g, &cfg)?;
    let labels = |vs: &[usize]| vs.iter().map(|&v| g.label(v)).collect::<Vec<_>>();
    let doc = AttackJson {
        dataset: args.dataset_name(),
        original_top_betweenness_labels: labels(&report.original_top_betweenness),
        original_top_closeness_labels: labels(&report.original_top_closeness),
        report: &report,
    };
    let last = cfg.percentages.last().copied().unwrap_or_default();
    let mean = |kind| report.aggregate(last, kind).map_or(f64::NAN, |a| a.mean);
    Ok(Outcome {
        summary: format!(
            "{}: criterion {} at {}%: mean jaccard betweenness={:.3} closeness={:.3}",
            args.dataset_name(),
            cfg.criterion.as_str(),
            last * 100.0,
            mean(richclub::CentralityKind::Betweenness),
            mean(richclub::CentralityKind::Closeness)
        ),
        files: vec![
            ("attack_report.json", json(&doc)?),
            ("attack_long.csv", report.long_csv(&args.dataset_name()).into_bytes()),
            ("attack_summary.csv", report.summary_csv().into_bytes()),
        ],
    })
}
