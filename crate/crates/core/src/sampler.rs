// SPDX-License-Identifier: Apache-2.0

//! Maximum-expansion snowball sampling and core-based prediction of
//! high-centrality vertices.
//!
//! A sample grows greedily from a seed: the next vertex is the frontier
//! vertex that brings the most vertices not yet in `S ∪ N(S)`. Gains are kept
//! in buckets and updated only around the vertices whose status changes, so a
//! step costs time proportional to the edges it touches.

use std::collections::{BTreeSet, HashSet};
use std::fmt::Write as _;

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::centrality::HighCentralitySet;
use crate::cores::{core_decompose, high_core_vertices};
use crate::error::{Error, Result};
use crate::graph::{clustering_coefficient, ordered, Edge, Graph, Vertex};
use crate::scalar::Scalar;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SeedStrategy {
    #[default]
    Random,
    HdHcc,
}

impl SeedStrategy {
    pub fn as_str(self) -> &'static str {
        match self {
            SeedStrategy::Random => "random",
            SeedStrategy::HdHcc => "hd_hcc",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SamplerConfig {
    pub sample_fraction: f64,
    pub max_runs: usize,
    pub seed_strategy: SeedStrategy,
    pub rng_seed: u64,
    pub prediction_size: usize,
}

impl Default for SamplerConfig {
    fn default() -> Self {
        SamplerConfig {
            sample_fraction: 0.10,
            max_runs: 40,
            seed_strategy: SeedStrategy::Random,
            rng_seed: 0,
            prediction_size: 40,
        }
    }
}

impl SamplerConfig {
    pub fn validate(&self) -> Result<()> {
        if !(self.sample_fraction > 0.0 && self.sample_fraction <= 1.0) {
            return Err(Error::InvalidConfig(format!(
                "sample_fraction must be in (0, 1], got {}",
                self.sample_fraction
            )));
        }
        if self.max_runs == 0 {
            return Err(Error::InvalidConfig("max_runs must be at least 1".into()));
        }
        if self.prediction_size == 0 {
            return Err(Error::InvalidConfig("prediction_size must be at least 1".into()));
        }
        Ok(())
    }
}

/// Number of vertices a sample of `fraction` of `n` should reach.
pub fn target_size(n: usize, fraction: f64) -> usize {
    ((fraction * n as f64).ceil() as usize).clamp(1, n.max(1))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Status {
    Unseen,
    Frontier,
    Sampled,
}

/// Sampled set `S`, its frontier `N(S)` and the gain of each frontier vertex,
/// `gain(v) = |N(v) \ (S ∪ N(S))|`.
#[derive(Debug, Clone)]
pub struct SampleState<'g> {
    g: &'g Graph,
    status: Vec<Status>,
    gain: Vec<usize>,
    buckets: Vec<Vec<Vertex>>,
    slot: Vec<usize>,
    top: usize,
    sampled: Vec<Vertex>,
    frontier_len: usize,
}

impl<'g> SampleState<'g> {
    pub fn new(g: &'g Graph) -> Self {
        SampleState {
            g,
            status: vec![Status::Unseen; g.n()],
            gain: vec![0; g.n()],
            buckets: Vec::new(),
            slot: vec![0; g.n()],
            top: 0,
            sampled: Vec::new(),
            frontier_len: 0,
        }
    }

    pub fn sampled(&self) -> &[Vertex] {
        &self.sampled
    }

    pub fn in_sample(&self, v: Vertex) -> bool {
        self.status[v] == Status::Sampled
    }

    pub fn in_frontier(&self, v: Vertex) -> bool {
        self.status[v] == Status::Frontier
    }

    pub fn frontier_len(&self) -> usize {
        self.frontier_len
    }

    /// Current gain of a frontier vertex.
    pub fn gain(&self, v: Vertex) -> Option<usize> {
        self.in_frontier(v).then_some(self.gain[v])
    }

    pub fn frontier(&self) -> impl Iterator<Item = Vertex> + '_ {
        (0..self.status.len()).filter(|&v| self.status[v] == Status::Frontier)
    }

    fn bucket_insert(&mut self, v: Vertex) {
        let g = self.gain[v];
        if self.buckets.len() <= g {
            self.buckets.resize_with(g + 1, Vec::new);
        }
        self.slot[v] = self.buckets[g].len();
        self.buckets[g].push(v);
        self.top = self.top.max(g);
    }

    fn bucket_remove(&mut self, v: Vertex) {
        let bucket = &mut self.buckets[self.gain[v]];
        let i = self.slot[v];
        bucket.swap_remove(i);
        if let Some(&moved) = bucket.get(i) {
            self.slot[moved] = i;
        }
    }

    /// Frontier vertices with the largest gain, and that gain.
    pub fn best(&mut self) -> Option<(usize, &[Vertex])> {
        if self.frontier_len == 0 {
            return None;
        }
        while self.buckets[self.top].is_empty() {
            self.top -= 1;
        }
        Some((self.top, &self.buckets[self.top]))
    }

    /// Moves `v` into the sample and updates frontier and gains.
    pub fn add(&mut self, v: Vertex) {
        match self.status[v] {
            Status::Sampled => return,
            Status::Frontier => {
                self.bucket_remove(v);
                self.frontier_len -= 1;
            }
            Status::Unseen => {
                // an unseen vertex entering S was counted in no gain
                // but its neighbors in the frontier saw it as new
                for &u in self.g.adj(v) {
                    if self.status[u] == Status::Frontier {
                        self.shift_gain_down(u);
                    }
                }
            }
        }
        self.status[v] = Status::Sampled;
        self.sampled.push(v);

        let g = self.g;
        for &w in g.adj(v) {
            if self.status[w] != Status::Unseen {
                continue;
            }
            self.status[w] = Status::Frontier;
            self.frontier_len += 1;
            let mut fresh = 0;
            for &u in g.adj(w) {
                match self.status[u] {
                    Status::Frontier if u != w => self.shift_gain_down(u),
                    Status::Unseen => fresh += 1,
                    _ => {}
                }
            }
            self.gain[w] = fresh;
            self.bucket_insert(w);
        }
    }

    fn shift_gain_down(&mut self, u: Vertex) {
        self.bucket_remove(u);
        self.gain[u] -= 1;
        self.bucket_insert(u);
    }
}

/// Result of one snowball run.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Sample {
    /// Vertices in the order they joined the sample.
    pub order: Vec<Vertex>,
    /// Positions in `order` where growth restarted from a fresh vertex after
    /// the frontier ran dry.
    pub restarts: Vec<usize>,
}

/// Greedy maximum-expansion growth from `seed` until `target` vertices are
/// sampled. Gain ties are broken uniformly at random. If a component is
/// exhausted early, growth continues from a random unsampled vertex.
pub fn snowball_sample<R: Rng + ?Sized>(g: &Graph, seed: Vertex, target: usize, rng: &mut R) -> Result<Sample> {
    g.check_vertex(seed)?;
    if target == 0 {
        return Err(Error::InvalidConfig("target size must be at least 1".into()));
    }
    let target = target.min(g.n());
    let mut state = SampleState::new(g);
    let mut restarts = Vec::new();
    state.add(seed);
    while state.sampled().len() < target {
        let next = match state.best() {
            Some((_, ties)) => ties[rng.gen_range(0..ties.len())],
            None => {
                restarts.push(state.sampled().len());
                let rest: Vec<Vertex> = (0..g.n()).filter(|&v| !state.in_sample(v)).collect();
                rest[rng.gen_range(0..rest.len())]
            }
        };
        state.add(next);
    }
    Ok(Sample {
        order: state.sampled,
        restarts,
    })
}

/// `|N(S)| / |S|`.
pub fn expansion_ratio<T: Scalar>(g: &Graph, set: &[Vertex]) -> Result<T> {
    if set.is_empty() {
        return Err(Error::EmptySet("sample"));
    }
    let mut inside = vec![false; g.n()];
    for &v in set {
        g.check_vertex(v)?;
        inside[v] = true;
    }
    let size = inside.iter().filter(|&&b| b).count();
    let mut outside = vec![false; g.n()];
    let mut boundary = 0;
    for v in (0..g.n()).filter(|&v| inside[v]) {
        for &w in g.adj(v) {
            if !inside[w] && !outside[w] {
                outside[w] = true;
                boundary += 1;
            }
        }
    }
    Ok(T::from_count(boundary) / T::from_count(size))
}

/// Seed vertex outside `exclude`. `Random` is uniform; `HdHcc` takes the top
/// decile by degree and returns the vertex maximizing
/// `degree * clustering_coefficient`, ties by index.
pub fn pick_seed<R: Rng + ?Sized>(
    g: &Graph,
    strategy: SeedStrategy,
    rng: &mut R,
    exclude: &HashSet<Vertex>,
) -> Result<Vertex> {
    let candidates: Vec<Vertex> = (0..g.n()).filter(|v| !exclude.contains(v)).collect();
    if candidates.is_empty() {
        return Err(Error::AllExcluded);
    }
    match strategy {
        SeedStrategy::Random => Ok(candidates[rng.gen_range(0..candidates.len())]),
        SeedStrategy::HdHcc => {
            let mut by_degree = candidates;
            by_degree.sort_by(|&a, &b| g.degree(b).cmp(&g.degree(a)).then(a.cmp(&b)));
            let decile = by_degree.len().div_ceil(10).max(1);
            let mut best = by_degree[0];
            let mut best_score = f64::NEG_INFINITY;
            for &v in &by_degree[..decile] {
                let score = g.degree(v) as f64 * clustering_coefficient::<f64>(g, v)?;
                if score > best_score || (score == best_score && v < best) {
                    best = v;
                    best_score = score;
                }
            }
            Ok(best)
        }
    }
}

/// Precision and recall of `predicted` against the ground truth.
pub fn score_prediction<T: Scalar>(predicted: &[Vertex], truth: &HighCentralitySet) -> Result<(T, T)> {
    if truth.is_empty() {
        return Err(Error::EmptyHighCentralitySet);
    }
    let predicted: BTreeSet<Vertex> = predicted.iter().copied().collect();
    if predicted.is_empty() {
        return Err(Error::EmptySet("predicted set"));
    }
    let hits = predicted.iter().filter(|&&v| truth.contains(v)).count();
    Ok((
        T::from_count(hits) / T::from_count(predicted.len()),
        T::from_count(hits) / T::from_count(truth.len()),
    ))
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct PredictionResult<T> {
    /// Top vertices of the probable set by degree in the sampled union.
    pub predicted: Vec<Vertex>,
    /// Union of high-core vertices over all runs, ascending.
    pub probable: Vec<Vertex>,
    /// Sampled vertex sets, one per run, in sampling order.
    pub sampled_subgraphs: Vec<Vec<Vertex>>,
    pub seeds: Vec<Vertex>,
    pub runs: usize,
    /// True when the probable set stopped changing before `max_runs`.
    pub converged: bool,
    pub clusters_found: usize,
    pub precision: Option<T>,
    pub recall: Option<T>,
}

impl<T: Scalar> PredictionResult<T> {
    /// Fills in precision and recall against `truth`.
    pub fn evaluate(&mut self, truth: &HighCentralitySet) -> Result<(T, T)> {
        let (p, r) = score_prediction::<T>(&self.predicted, truth)?;
        self.precision = Some(p);
        self.recall = Some(r);
        Ok((p, r))
    }
}

/// Repeated snowball sampling; the high cores of every sampled subgraph are
/// collected until the collection stops changing or `max_runs` is reached.
pub fn predict_high_centrality<T: Scalar>(g: &Graph, cfg: &SamplerConfig) -> Result<PredictionResult<T>> {
    cfg.validate()?;
    if g.n() < 10 {
        return Err(Error::DegenerateGraph { n: g.n(), required: 10 });
    }
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.rng_seed);
    let target = target_size(g.n(), cfg.sample_fraction);

    let mut probable: BTreeSet<Vertex> = BTreeSet::new();
    let mut covered: HashSet<Vertex> = HashSet::new();
    let mut samples: Vec<Vec<Vertex>> = Vec::new();
    let mut seeds = Vec::new();
    let mut converged = false;

    for run in 0..cfg.max_runs {
        let seed = if run == 0 {
            pick_seed(g, cfg.seed_strategy, &mut rng, &covered)?
        } else {
            match pick_seed(g, SeedStrategy::Random, &mut rng, &covered) {
                Ok(v) => v,
                Err(Error::AllExcluded) => break,
                Err(e) => return Err(e),
            }
        };
        let sample = snowball_sample(g, seed, target, &mut rng)?;
        let sub = g.induced_subgraph(&sample.order)?;
        let before = probable.len();
        if sub.graph.m() > 0 {
            let cores = core_decompose(&sub.graph);
            for v in high_core_vertices(&cores)? {
                probable.insert(sub.to_parent[v]);
            }
        }
        covered.extend(sample.order.iter().copied());
        seeds.push(seed);
        samples.push(sample.order);
        // the probable set only grows, so equal size means unchanged
        if run > 0 && probable.len() == before {
            converged = true;
            break;
        }
    }

    let union_edges = sampled_union_edges(g, &samples);
    let mut union_degree = vec![0usize; g.n()];
    for &(u, w) in &union_edges {
        union_degree[u] += 1;
        union_degree[w] += 1;
    }
    let mut predicted: Vec<Vertex> = probable.iter().copied().collect();
    predicted.sort_by(|&a, &b| union_degree[b].cmp(&union_degree[a]).then(a.cmp(&b)));
    predicted.truncate(cfg.prediction_size);

    let clusters_found = count_components(g.n(), &probable, &union_edges);
    Ok(PredictionResult {
        predicted,
        probable: probable.into_iter().collect(),
        runs: samples.len(),
        sampled_subgraphs: samples,
        seeds,
        converged,
        clusters_found,
        precision: None,
        recall: None,
    })
}

/// Edges of the union of the induced subgraphs on each sample.
fn sampled_union_edges(g: &Graph, samples: &[Vec<Vertex>]) -> BTreeSet<Edge> {
    let mut edges = BTreeSet::new();
    let mut inside = vec![false; g.n()];
    for sample in samples {
        for &v in sample {
            inside[v] = true;
        }
        for &v in sample {
            for &w in g.adj(v) {
                if inside[w] {
                    edges.insert(ordered(v, w));
                }
            }
        }
        for &v in sample {
            inside[v] = false;
        }
    }
    edges
}

/// Connected components among `vertices` using only `edges` with both
/// endpoints inside the set.
fn count_components(n: usize, vertices: &BTreeSet<Vertex>, edges: &BTreeSet<Edge>) -> usize {
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(parent: &mut [usize], mut x: usize) -> usize {
        while parent[x] != x {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        x
    }
    let mut components = vertices.len();
    for &(u, w) in edges {
        if vertices.contains(&u) && vertices.contains(&w) {
            let (ru, rw) = (find(&mut parent, u), find(&mut parent, w));
            if ru != rw {
                parent[ru.max(rw)] = ru.min(rw);
                components -= 1;
            }
        }
    }
    components
}

/// JSON-facing prediction record with external labels.
#[derive(Debug, Clone, Serialize)]
pub struct PredictionSummary {
    pub config: SamplerConfig,
    pub runs: usize,
    pub converged: bool,
    pub clusters_found: usize,
    pub precision: Option<f64>,
    pub recall: Option<f64>,
    pub ground_truth_size: Option<usize>,
    pub predicted: Vec<String>,
    pub probable: Vec<String>,
    pub seeds: Vec<String>,
    pub sampled_subgraphs: Vec<Vec<String>>,
}

impl PredictionSummary {
    pub fn new<T: Scalar>(
        g: &Graph,
        cfg: &SamplerConfig,
        result: &PredictionResult<T>,
        truth: Option<&HighCentralitySet>,
    ) -> Self {
        let labels = |vs: &[Vertex]| vs.iter().map(|&v| g.label(v).to_owned()).collect::<Vec<_>>();
        PredictionSummary {
            config: cfg.clone(),
            runs: result.runs,
            converged: result.converged,
            clusters_found: result.clusters_found,
            precision: result.precision.map(Scalar::to_f64_lossy),
            recall: result.recall.map(Scalar::to_f64_lossy),
            ground_truth_size: truth.map(HighCentralitySet::len),
            predicted: labels(&result.predicted),
            probable: labels(&result.probable),
            seeds: labels(&result.seeds),
            sampled_subgraphs: result.sampled_subgraphs.iter().map(|s| labels(s)).collect(),
        }
    }

    /// Header plus one row: dataset, HCN, seed strategy, clusters found,
    /// precision, recall.
    pub fn table_row_csv(&self, dataset: &str) -> String {
        let opt = |x: Option<f64>| x.map(|v| v.to_string()).unwrap_or_default();
        let mut out = String::from("dataset,hcn,seed_strategy,clusters_found,precision,recall\n");
        let _ = writeln!(
            out,
            "{},{},{},{},{},{}",
            dataset,
            self.ground_truth_size.map(|h| h.to_string()).unwrap_or_default(),
            self.config.seed_strategy.as_str(),
            self.clusters_found,
            opt(self.precision),
            opt(self.recall)
        );
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::centrality::SourceTag;
    use crate::generators;

    fn rng(seed: u64) -> ChaCha8Rng {
        ChaCha8Rng::seed_from_u64(seed)
    }

    #[test]
    fn star_from_leaf_takes_center() {
        let star = generators::star(5);
        let s = snowball_sample(&star, 3, 2, &mut rng(1)).unwrap();
        assert_eq!(s.order, vec![3, 0]);
    }

    #[test]
    fn k4_fully_sampled() {
        let k4 = generators::complete(4);
        for seed in 0..8 {
            let mut s = snowball_sample(&k4, seed % 4, 4, &mut rng(seed as u64)).unwrap().order;
            s.sort_unstable();
            assert_eq!(s, vec![0, 1, 2, 3]);
        }
    }

    #[test]
    fn restarts_when_component_exhausted() {
        let g = Graph::from_edges(6, [(0, 1), (2, 3), (3, 4), (4, 5)]).unwrap();
        let s = snowball_sample(&g, 0, 4, &mut rng(3)).unwrap();
        assert_eq!(s.order.len(), 4);
        assert_eq!(s.restarts, vec![2]);
    }

    #[test]
    fn gains_track_definition() {
        let g = generators::barbell(5, 3);
        let mut state = SampleState::new(&g);
        state.add(0);
        state.add(4);
        for v in state.frontier().collect::<Vec<_>>() {
            let expected = g
                .adj(v)
                .iter()
                .filter(|&&w| !state.in_sample(w) && !state.in_frontier(w))
                .count();
            assert_eq!(state.gain(v), Some(expected));
        }
        // vertex 4 bridges to 5, whose only new neighbor is 6
        assert_eq!(state.gain(5), Some(1));
    }

    #[test]
    fn expansion_examples() {
        let k4 = generators::complete(4);
        assert_eq!(expansion_ratio::<f64>(&k4, &[0]).unwrap(), 3.0);
        assert_eq!(expansion_ratio::<f64>(&generators::path(3), &[1]).unwrap(), 2.0);
        assert_eq!(expansion_ratio::<f64>(&k4, &[0, 1, 2, 3]).unwrap(), 0.0);
        assert!(expansion_ratio::<f64>(&k4, &[]).is_err());
    }

    #[test]
    fn seed_picking() {
        let g = generators::k4_with_pendant();
        let v = pick_seed(&g, SeedStrategy::HdHcc, &mut rng(0), &HashSet::new()).unwrap();
        assert!(v < 4);

        let a = pick_seed(&g, SeedStrategy::Random, &mut rng(42), &HashSet::new()).unwrap();
        let b = pick_seed(&g, SeedStrategy::Random, &mut rng(42), &HashSet::new()).unwrap();
        assert_eq!(a, b);

        let exclude: HashSet<Vertex> = [0, 1, 3, 4].into_iter().collect();
        for strategy in [SeedStrategy::Random, SeedStrategy::HdHcc] {
            assert_eq!(pick_seed(&g, strategy, &mut rng(5), &exclude).unwrap(), 2);
        }
        let all: HashSet<Vertex> = (0..5).collect();
        assert_eq!(
            pick_seed(&g, SeedStrategy::Random, &mut rng(5), &all),
            Err(Error::AllExcluded)
        );
    }

    fn truth(vertices: Vec<Vertex>) -> HighCentralitySet {
        let sources = vec![SourceTag::Both; vertices.len()];
        HighCentralitySet { vertices, sources }
    }

    #[test]
    fn precision_recall() {
        let t = truth(vec![1, 2, 3]);
        assert_eq!(score_prediction::<f64>(&[1, 2, 3], &t).unwrap(), (1.0, 1.0));
        assert_eq!(score_prediction::<f64>(&[7, 8], &t).unwrap(), (0.0, 0.0));

        let t = truth((0..24).collect());
        let predicted: Vec<Vertex> = (0..40).collect();
        let (p, r) = score_prediction::<f64>(&predicted, &t).unwrap();
        assert!((p - 0.6).abs() < 1e-12);
        assert_eq!(r, 1.0);

        assert!(score_prediction::<f64>(&[1], &truth(vec![])).is_err());
        assert!(score_prediction::<f64>(&[], &t).is_err());
    }

    #[test]
    fn prediction_guards() {
        let small = generators::path(2);
        assert_eq!(
            predict_high_centrality::<f64>(&small, &SamplerConfig::default()),
            Err(Error::DegenerateGraph { n: 2, required: 10 })
        );
        let g = generators::path(20);
        let cfg = SamplerConfig {
            sample_fraction: 0.0,
            ..SamplerConfig::default()
        };
        assert!(predict_high_centrality::<f64>(&g, &cfg).is_err());
    }

    #[test]
    fn target_rounds_up() {
        assert_eq!(target_size(6474, 0.10), 648);
        assert_eq!(target_size(100, 0.10), 10);
        assert_eq!(target_size(5, 1.0), 5);
    }
}
