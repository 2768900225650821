// SPDX-License-Identifier: Apache-2.0

//! Clusters around high-centrality vertices and their degree of scatteredness.
//!
//! Every high-centrality vertex seeds a cluster made of itself and its
//! neighbors. Overlapping clusters are merged until all are disjoint, which
//! is the same as taking connected components of the overlap relation, so
//! the result does not depend on merge order.
//!
//! With clusters sorted by high-centrality count `H_1 >= H_2 >= ...`, the
//! ratio for cluster `x` is `H_x / (H - sum_{i<x} H_i)` and the degree of
//! scatteredness is the geometric mean of the ratios.

use serde::Serialize;

use crate::centrality::HighCentralitySet;
use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex};
use crate::scalar::Scalar;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ClusterSet {
    /// Full vertex sets, ascending within each cluster.
    pub clusters: Vec<Vec<Vertex>>,
    /// High-centrality members of each cluster, ascending.
    pub hc_members: Vec<Vec<Vertex>>,
    pub hc_per_cluster: Vec<usize>,
    pub hc_total: usize,
}

impl ClusterSet {
    pub fn len(&self) -> usize {
        self.clusters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.clusters.is_empty()
    }
}

struct DisjointSets {
    parent: Vec<usize>,
}

impl DisjointSets {
    fn new(n: usize) -> Self {
        DisjointSets {
            parent: (0..n).collect(),
        }
    }

    fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            let (lo, hi) = if ra < rb { (ra, rb) } else { (rb, ra) };
            self.parent[hi] = lo;
        }
    }
}

/// Builds the disjoint clusters containing `hc`, ordered by high-centrality
/// count descending and then by smallest member.
pub fn build_clusters(g: &Graph, hc: &HighCentralitySet) -> Result<ClusterSet> {
    if hc.is_empty() {
        return Err(Error::EmptyHighCentralitySet);
    }
    for &v in &hc.vertices {
        g.check_vertex(v)?;
    }
    let seeds = &hc.vertices;
    let mut sets = DisjointSets::new(seeds.len());
    // first seed cluster each vertex was seen in
    let mut owner: Vec<Option<usize>> = vec![None; g.n()];
    for (i, &v) in seeds.iter().enumerate() {
        for &x in std::iter::once(&v).chain(g.adj(v)) {
            match owner[x] {
                Some(j) => sets.union(i, j),
                None => owner[x] = Some(i),
            }
        }
    }

    let mut root_slot: Vec<Option<usize>> = vec![None; seeds.len()];
    let mut clusters: Vec<Vec<Vertex>> = Vec::new();
    let mut hc_members: Vec<Vec<Vertex>> = Vec::new();
    for (x, o) in owner.iter().enumerate() {
        let Some(i) = *o else { continue };
        let root = sets.find(i);
        let slot = *root_slot[root].get_or_insert_with(|| {
            clusters.push(Vec::new());
            hc_members.push(Vec::new());
            clusters.len() - 1
        });
        clusters[slot].push(x);
        if hc.contains(x) {
            hc_members[slot].push(x);
        }
    }

    let mut order: Vec<usize> = (0..clusters.len()).collect();
    order.sort_by(|&a, &b| {
        hc_members[b]
            .len()
            .cmp(&hc_members[a].len())
            .then(clusters[a][0].cmp(&clusters[b][0]))
    });
    let clusters: Vec<Vec<Vertex>> = order.iter().map(|&i| std::mem::take(&mut clusters[i])).collect();
    let hc_members: Vec<Vec<Vertex>> = order.iter().map(|&i| std::mem::take(&mut hc_members[i])).collect();
    let hc_per_cluster = hc_members.iter().map(Vec::len).collect();
    Ok(ClusterSet {
        clusters,
        hc_members,
        hc_per_cluster,
        hc_total: hc.len(),
    })
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ScatterednessReport<T> {
    pub ratios: Vec<T>,
    pub value: T,
    #[serde(rename = "K")]
    pub cluster_count: usize,
}

/// Degree of scatteredness of a per-cluster high-centrality distribution.
/// Counts are sorted descending before evaluation.
pub fn scatteredness_of_distribution<T: Scalar>(distribution: &[usize]) -> Result<ScatterednessReport<T>> {
    if distribution.is_empty() {
        return Err(Error::EmptyHighCentralitySet);
    }
    if let Some(index) = distribution.iter().position(|&h| h == 0) {
        return Err(Error::EmptyCluster { index });
    }
    let mut counts = distribution.to_vec();
    counts.sort_unstable_by(|a, b| b.cmp(a));

    let mut remaining: usize = counts.iter().sum();
    let mut ratios = Vec::with_capacity(counts.len());
    let mut log_sum = T::zero();
    for &h in &counts {
        let r = T::from_count(h) / T::from_count(remaining);
        log_sum = log_sum + r.ln();
        ratios.push(r);
        remaining -= h;
    }
    let k = counts.len();
    Ok(ScatterednessReport {
        ratios,
        value: (log_sum / T::from_count(k)).exp(),
        cluster_count: k,
    })
}

pub fn scatteredness<T: Scalar>(cs: &ClusterSet) -> Result<ScatterednessReport<T>> {
    scatteredness_of_distribution(&cs.hc_per_cluster)
}

/// JSON-facing summary of the clusters and their scatteredness.
#[derive(Debug, Clone, Serialize)]
pub struct RichClubSummary {
    #[serde(rename = "K")]
    pub cluster_count: usize,
    pub distribution: Vec<usize>,
    pub scatteredness: f64,
    pub ratios: Vec<f64>,
    pub clusters: Vec<Vec<String>>,
    pub high_centrality: Vec<Vec<String>>,
}

impl RichClubSummary {
    pub fn new<T: Scalar>(g: &Graph, cs: &ClusterSet, report: &ScatterednessReport<T>) -> Self {
        let labels = |set: &Vec<Vertex>| set.iter().map(|&v| g.label(v).to_owned()).collect();
        RichClubSummary {
            cluster_count: report.cluster_count,
            distribution: cs.hc_per_cluster.clone(),
            scatteredness: report.value.to_f64_lossy(),
            ratios: report.ratios.iter().map(|r| r.to_f64_lossy()).collect(),
            clusters: cs.clusters.iter().map(labels).collect(),
            high_centrality: cs.hc_members.iter().map(labels).collect(),
        }
    }

    /// Compact distribution label, e.g. `24,4(2),2(2)`.
    pub fn distribution_label(&self) -> String {
        let mut parts: Vec<String> = Vec::new();
        let mut i = 0;
        while i < self.distribution.len() {
            let h = self.distribution[i];
            let run = self.distribution[i..].iter().take_while(|&&x| x == h).count();
            parts.push(if run > 1 { format!("{h}({run})") } else { h.to_string() });
            i += run;
        }
        parts.join(",")
    }
}
