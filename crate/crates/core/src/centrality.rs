// SPDX-License-Identifier: Apache-2.0

//! Exact closeness and betweenness centrality, top-k ranking and the
//! high-centrality ground-truth set.
//!
//! Closeness is the normalized reciprocal-distance sum
//! `CC(v) = 1/(n-1) * sum_{s != v} 1/dist(v, s)`, where unreachable vertices
//! contribute zero. This keeps the measure finite once an attack disconnects
//! the graph.
//!
//! Betweenness comes in two variants. [`BetweennessVariant::PerPair`] is the
//! usual `sum_{s<t} sigma_st(v) / sigma_st` computed with Brandes' dependency
//! accumulation. [`BetweennessVariant::PaperLiteral`] divides the total number
//! of shortest paths through `v` by the total number of shortest paths in the
//! graph.

use std::collections::VecDeque;
use std::fmt::Write as _;
use std::thread;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex};
use crate::scalar::Scalar;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum CentralityKind {
    Closeness,
    Betweenness,
}

impl CentralityKind {
    pub fn as_str(self) -> &'static str {
        match self {
            CentralityKind::Closeness => "closeness",
            CentralityKind::Betweenness => "betweenness",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum BetweennessVariant {
    #[default]
    PerPair,
    PaperLiteral,
}

impl BetweennessVariant {
    pub fn as_str(self) -> &'static str {
        match self {
            BetweennessVariant::PerPair => "per_pair",
            BetweennessVariant::PaperLiteral => "paper_literal",
        }
    }
}

/// Per-vertex scores of one centrality measure.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CentralityScores<T> {
    pub kind: CentralityKind,
    pub scores: Vec<T>,
}

impl<T: Scalar> CentralityScores<T> {
    pub fn len(&self) -> usize {
        self.scores.len()
    }

    pub fn is_empty(&self) -> bool {
        self.scores.is_empty()
    }

    /// `vertex_label,score` rows sorted by score descending.
    pub fn to_csv(&self, g: &Graph) -> String {
        let mut out = String::from("vertex_label,score\n");
        for v in ranking_order(&self.scores) {
            let _ = writeln!(out, "{},{}", g.label(v), self.scores[v]);
        }
        out
    }
}

/// Vertex order by score descending, index ascending on ties.
fn ranking_order<T: Scalar>(scores: &[T]) -> Vec<Vertex> {
    let mut order: Vec<Vertex> = (0..scores.len()).collect();
    order.sort_by(|&a, &b| {
        scores[b]
            .partial_cmp(&scores[a])
            .unwrap_or(std::cmp::Ordering::Equal)
            .then(a.cmp(&b))
    });
    order
}

/// Splits `0..n` into at most `threads` contiguous chunks, runs `work` on
/// each and returns the partial results in chunk order.
fn per_source_chunks<R, F>(n: usize, threads: usize, work: F) -> Vec<R>
where
    R: Send,
    F: Fn(std::ops::Range<usize>) -> R + Sync,
{
    let threads = threads.clamp(1, n.max(1));
    if threads == 1 {
        return vec![work(0..n)];
    }
    let chunk = n.div_ceil(threads);
    thread::scope(|scope| {
        let handles: Vec<_> = (0..threads)
            .map(|t| {
                let range = (t * chunk).min(n)..((t + 1) * chunk).min(n);
                let work = &work;
                scope.spawn(move || work(range))
            })
            .collect();
        handles
            .into_iter()
            .map(|h| h.join().expect("centrality worker panicked"))
            .collect()
    })
}

fn closeness_of<T: Scalar>(g: &Graph, v: Vertex, dist: &mut [u32], queue: &mut VecDeque<Vertex>) -> T {
    const UNSEEN: u32 = u32::MAX;
    dist.fill(UNSEEN);
    dist[v] = 0;
    queue.clear();
    queue.push_back(v);
    while let Some(u) = queue.pop_front() {
        let d = dist[u] + 1;
        for &w in g.adj(u) {
            if dist[w] == UNSEEN {
                dist[w] = d;
                queue.push_back(w);
            }
        }
    }
    let mut sum = T::zero();
    for (s, &d) in dist.iter().enumerate() {
        if s != v && d != UNSEEN {
            sum = sum + T::one() / T::from_u32(d).expect("distance fits");
        }
    }
    sum / T::from_count(g.n() - 1)
}

/// Closeness of every vertex.
pub fn closeness_all<T: Scalar>(g: &Graph) -> Result<CentralityScores<T>> {
    closeness_all_par(g, 1)
}

/// [`closeness_all`] with sources spread over `threads` workers. Each score
/// depends on one BFS only, so the result is identical for any thread count.
pub fn closeness_all_par<T: Scalar>(g: &Graph, threads: usize) -> Result<CentralityScores<T>> {
    let n = g.n();
    if n < 2 {
        return Err(Error::DegenerateGraph { n, required: 2 });
    }
    let parts = per_source_chunks(n, threads, |range| {
        let mut dist = vec![0u32; n];
        let mut queue = VecDeque::new();
        range
            .map(|v| closeness_of::<T>(g, v, &mut dist, &mut queue))
            .collect::<Vec<T>>()
    });
    Ok(CentralityScores {
        kind: CentralityKind::Closeness,
        scores: parts.into_iter().flatten().collect(),
    })
}

/// Scratch space for one single-source shortest-path pass.
struct SourcePass<T> {
    dist: Vec<i64>,
    sigma: Vec<T>,
    acc: Vec<T>,
    stack: Vec<Vertex>,
    queue: VecDeque<Vertex>,
}

impl<T: Scalar> SourcePass<T> {
    fn new(n: usize) -> Self {
        SourcePass {
            dist: vec![-1; n],
            sigma: vec![T::zero(); n],
            acc: vec![T::zero(); n],
            stack: Vec::with_capacity(n),
            queue: VecDeque::new(),
        }
    }

    /// BFS from `s` filling distances, shortest-path counts and the visit
    /// order.
    fn explore(&mut self, g: &Graph, s: Vertex) {
        self.dist.fill(-1);
        self.sigma.fill(T::zero());
        self.acc.fill(T::zero());
        self.stack.clear();
        self.queue.clear();
        self.dist[s] = 0;
        self.sigma[s] = T::one();
        self.queue.push_back(s);
        while let Some(u) = self.queue.pop_front() {
            self.stack.push(u);
            let du = self.dist[u];
            for &w in g.adj(u) {
                if self.dist[w] < 0 {
                    self.dist[w] = du + 1;
                    self.queue.push_back(w);
                }
                if self.dist[w] == du + 1 {
                    self.sigma[w] = self.sigma[w] + self.sigma[u];
                }
            }
        }
    }

    /// Brandes dependency `delta_s(v) = sum_t sigma_st(v) / sigma_st`.
    fn pair_dependencies(&mut self, g: &Graph) {
        for &w in self.stack.iter().rev() {
            let dw = self.dist[w];
            let coeff = (T::one() + self.acc[w]) / self.sigma[w];
            for &v in g.adj(w) {
                if self.dist[v] == dw - 1 {
                    self.acc[v] = self.acc[v] + self.sigma[v] * coeff;
                }
            }
        }
    }

    /// Number of shortest-DAG paths from each vertex to all vertices below
    /// it, so that `sum_t sigma_st(v) = sigma_sv * acc[v]`.
    fn path_counts_below(&mut self, g: &Graph) {
        for &w in self.stack.iter().rev() {
            let dw = self.dist[w];
            let below = T::one() + self.acc[w];
            for &v in g.adj(w) {
                if self.dist[v] == dw - 1 {
                    self.acc[v] = self.acc[v] + below;
                }
            }
        }
    }
}

/// Betweenness of every vertex.
pub fn betweenness_all<T: Scalar>(g: &Graph, variant: BetweennessVariant) -> CentralityScores<T> {
    betweenness_all_par(g, variant, 1)
}

/// [`betweenness_all`] with sources spread over `threads` contiguous chunks.
/// Partial sums are combined in chunk order, so a fixed thread count is
/// bit-reproducible and different counts agree to rounding.
pub fn betweenness_all_par<T: Scalar>(
    g: &Graph,
    variant: BetweennessVariant,
    threads: usize,
) -> CentralityScores<T> {
    let n = g.n();
    let parts = per_source_chunks(n, threads, |range| {
        let mut pass = SourcePass::<T>::new(n);
        let mut through = vec![T::zero(); n];
        let mut total_paths = T::zero();
        for s in range {
            pass.explore(g, s);
            match variant {
                BetweennessVariant::PerPair => {
                    pass.pair_dependencies(g);
                    for &v in &pass.stack[1..] {
                        through[v] = through[v] + pass.acc[v];
                    }
                }
                BetweennessVariant::PaperLiteral => {
                    pass.path_counts_below(g);
                    for &v in &pass.stack[1..] {
                        through[v] = through[v] + pass.sigma[v] * pass.acc[v];
                        total_paths = total_paths + pass.sigma[v];
                    }
                }
            }
        }
        (through, total_paths)
    });

    let mut scores = vec![T::zero(); n];
    let mut total_paths = T::zero();
    for (part, paths) in parts {
        for (acc, x) in scores.iter_mut().zip(part) {
            *acc = *acc + x;
        }
        total_paths = total_paths + paths;
    }
    match variant {
        // every unordered pair was seen from both endpoints
        BetweennessVariant::PerPair => {
            let two = T::one() + T::one();
            scores.iter_mut().for_each(|x| *x = *x / two);
        }
        BetweennessVariant::PaperLiteral => {
            if total_paths > T::zero() {
                scores.iter_mut().for_each(|x| *x = *x / total_paths);
            }
        }
    }
    CentralityScores {
        kind: CentralityKind::Betweenness,
        scores,
    }
}

/// Deterministic top-k vertex list.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RankedSet {
    pub k: usize,
    pub members: Vec<Vertex>,
}

impl RankedSet {
    pub fn contains(&self, v: Vertex) -> bool {
        self.members.contains(&v)
    }
}

/// Top `k` vertices by score descending, index ascending on ties. Returns
/// every vertex when `k > n`.
pub fn top_k<T: Scalar>(scores: &CentralityScores<T>, k: usize) -> Result<RankedSet> {
    if k == 0 {
        return Err(Error::InvalidConfig("k must be at least 1".into()));
    }
    let mut members = ranking_order(&scores.scores);
    members.truncate(k);
    Ok(RankedSet { k, members })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum SourceTag {
    Betweenness,
    Closeness,
    Both,
}

/// Union of the top-k betweenness and top-k closeness vertices.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct HighCentralitySet {
    /// Ascending vertex indices.
    pub vertices: Vec<Vertex>,
    /// `sources[i]` tags `vertices[i]`.
    pub sources: Vec<SourceTag>,
}

impl HighCentralitySet {
    pub fn from_rankings(betweenness: &RankedSet, closeness: &RankedSet) -> Self {
        let mut vertices: Vec<Vertex> = betweenness
            .members
            .iter()
            .chain(&closeness.members)
            .copied()
            .collect();
        vertices.sort_unstable();
        vertices.dedup();
        let sources = vertices
            .iter()
            .map(|&v| match (betweenness.contains(v), closeness.contains(v)) {
                (true, true) => SourceTag::Both,
                (true, false) => SourceTag::Betweenness,
                _ => SourceTag::Closeness,
            })
            .collect();
        HighCentralitySet { vertices, sources }
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn contains(&self, v: Vertex) -> bool {
        self.vertices.binary_search(&v).is_ok()
    }
}

/// Everything computed on the way to the ground-truth set.
#[derive(Debug, Clone)]
pub struct GroundTruth<T> {
    pub closeness: CentralityScores<T>,
    pub betweenness: CentralityScores<T>,
    pub top_closeness: RankedSet,
    pub top_betweenness: RankedSet,
    pub high_centrality: HighCentralitySet,
}

pub fn ground_truth_detailed<T: Scalar>(
    g: &Graph,
    k: usize,
    variant: BetweennessVariant,
    threads: usize,
) -> Result<GroundTruth<T>> {
    let closeness = closeness_all_par::<T>(g, threads)?;
    let betweenness = betweenness_all_par::<T>(g, variant, threads);
    let top_closeness = top_k(&closeness, k)?;
    let top_betweenness = top_k(&betweenness, k)?;
    let high_centrality = HighCentralitySet::from_rankings(&top_betweenness, &top_closeness);
    Ok(GroundTruth {
        closeness,
        betweenness,
        top_closeness,
        top_betweenness,
        high_centrality,
    })
}

/// `N_hc`: top-k betweenness (per-pair) united with top-k closeness.
pub fn ground_truth(g: &Graph, k: usize) -> Result<HighCentralitySet> {
    Ok(ground_truth_detailed::<f64>(g, k, BetweennessVariant::PerPair, 1)?.high_centrality)
}
