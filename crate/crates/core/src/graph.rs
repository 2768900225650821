// SPDX-License-Identifier: Apache-2.0

//! Simple undirected graphs, edge-list ingestion and basic traversals.
//!
//! Vertices are dense `usize` indices `0..n`. External identifiers from the
//! edge list are kept in a label table, assigned in first-appearance order.

use std::collections::{HashMap, HashSet, VecDeque};
use std::fmt::Write as _;
use std::io::BufRead;

use crate::error::{Error, Result};
use crate::scalar::Scalar;

pub type Vertex = usize;

/// An undirected edge stored as `(min, max)`.
pub type Edge = (Vertex, Vertex);

/// Immutable simple undirected graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    adjacency: Vec<Vec<Vertex>>,
    edge_count: usize,
    labels: Vec<String>,
}

/// An induced subgraph together with the parent index of each of its vertices.
#[derive(Debug, Clone)]
pub struct Subgraph {
    pub graph: Graph,
    pub to_parent: Vec<Vertex>,
}

/// Normalizes an edge to `(min, max)` order.
#[inline]
pub fn ordered(u: Vertex, w: Vertex) -> Edge {
    if u <= w {
        (u, w)
    } else {
        (w, u)
    }
}

impl Graph {
    /// Builds a graph on `n` vertices labelled `"0".."n-1"`. Self-loops are
    /// dropped and duplicate edges collapsed.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Vertex, Vertex)>,
    {
        let labels = (0..n).map(|v| v.to_string()).collect();
        Self::with_labels(labels, edges)
    }

    /// Builds a graph whose vertex `i` carries `labels[i]`.
    pub fn with_labels<I>(labels: Vec<String>, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Vertex, Vertex)>,
    {
        let n = labels.len();
        let mut adjacency = vec![Vec::new(); n];
        for (u, w) in edges {
            for v in [u, w] {
                if v >= n {
                    return Err(Error::VertexOutOfRange { vertex: v, n });
                }
            }
            if u != w {
                adjacency[u].push(w);
                adjacency[w].push(u);
            }
        }
        let mut twice_m = 0;
        for list in &mut adjacency {
            list.sort_unstable();
            list.dedup();
            twice_m += list.len();
        }
        Ok(Graph {
            adjacency,
            edge_count: twice_m / 2,
            labels,
        })
    }

    pub fn n(&self) -> usize {
        self.adjacency.len()
    }

    pub fn m(&self) -> usize {
        self.edge_count
    }

    pub fn degree(&self, v: Vertex) -> usize {
        self.adjacency[v].len()
    }

    /// Sorted neighbor list; panics on an out-of-range vertex.
    #[inline]
    pub fn adj(&self, v: Vertex) -> &[Vertex] {
        &self.adjacency[v]
    }

    /// Sorted neighbor list of `v`.
    pub fn neighbors(&self, v: Vertex) -> Result<&[Vertex]> {
        self.check_vertex(v)?;
        Ok(&self.adjacency[v])
    }

    pub fn check_vertex(&self, v: Vertex) -> Result<()> {
        if v < self.n() {
            Ok(())
        } else {
            Err(Error::VertexOutOfRange { vertex: v, n: self.n() })
        }
    }

    pub fn has_edge(&self, u: Vertex, w: Vertex) -> bool {
        u < self.n() && self.adjacency[u].binary_search(&w).is_ok()
    }

    pub fn label(&self, v: Vertex) -> &str {
        &self.labels[v]
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    /// Label to index lookup table.
    pub fn label_index(&self) -> HashMap<&str, Vertex> {
        self.labels
            .iter()
            .enumerate()
            .map(|(i, l)| (l.as_str(), i))
            .collect()
    }

    /// Edges as `(min, max)` pairs in ascending order.
    pub fn edges(&self) -> impl Iterator<Item = Edge> + '_ {
        self.adjacency.iter().enumerate().flat_map(|(u, list)| {
            let start = list.partition_point(|&w| w <= u);
            list[start..].iter().map(move |&w| (u, w))
        })
    }

    /// The subgraph induced by `vertices`. Subgraph vertex `i` is
    /// `vertices[i]` in the parent; duplicates are ignored.
    pub fn induced_subgraph(&self, vertices: &[Vertex]) -> Result<Subgraph> {
        let mut local = HashMap::with_capacity(vertices.len());
        let mut to_parent = Vec::with_capacity(vertices.len());
        for &v in vertices {
            self.check_vertex(v)?;
            if let std::collections::hash_map::Entry::Vacant(e) = local.entry(v) {
                e.insert(to_parent.len());
                to_parent.push(v);
            }
        }
        let mut adjacency = vec![Vec::new(); to_parent.len()];
        let mut twice_m = 0;
        for (i, &v) in to_parent.iter().enumerate() {
            let list = &mut adjacency[i];
            list.extend(self.adjacency[v].iter().filter_map(|w| local.get(w).copied()));
            list.sort_unstable();
            twice_m += list.len();
        }
        let labels = to_parent.iter().map(|&v| self.labels[v].clone()).collect();
        Ok(Subgraph {
            graph: Graph {
                adjacency,
                edge_count: twice_m / 2,
                labels,
            },
            to_parent,
        })
    }

    /// Copy of the graph with `removed` edges deleted. The vertex set and
    /// labels are unchanged.
    pub fn without_edges(&self, removed: &HashSet<Edge>) -> Graph {
        let mut twice_m = 0;
        let adjacency: Vec<Vec<Vertex>> = self
            .adjacency
            .iter()
            .enumerate()
            .map(|(u, list)| {
                let kept: Vec<Vertex> = list
                    .iter()
                    .copied()
                    .filter(|&w| !removed.contains(&ordered(u, w)))
                    .collect();
                twice_m += kept.len();
                kept
            })
            .collect();
        Graph {
            adjacency,
            edge_count: twice_m / 2,
            labels: self.labels.clone(),
        }
    }

    /// One `src dst` line per edge, ordered by `(min, max)` internal index.
    pub fn to_edge_list(&self) -> String {
        let mut out = String::new();
        for (u, w) in self.edges() {
            let _ = writeln!(out, "{} {}", self.labels[u], self.labels[w]);
        }
        out
    }
}

/// Parses a whitespace-separated edge list. Lines starting with `#` or `%`
/// are comments and blank lines are skipped.
pub fn parse_edge_list(text: &str) -> Result<Graph> {
    read_edge_list(text.as_bytes())
}

/// Streaming variant of [`parse_edge_list`].
pub fn read_edge_list<R: BufRead>(reader: R) -> Result<Graph> {
    let mut ids: HashMap<String, Vertex> = HashMap::new();
    let mut labels: Vec<String> = Vec::new();
    let mut edges = Vec::new();

    let mut intern = |token: &str, ids: &mut HashMap<String, Vertex>| -> Vertex {
        if let Some(&v) = ids.get(token) {
            return v;
        }
        let v = labels.len();
        labels.push(token.to_owned());
        ids.insert(token.to_owned(), v);
        v
    };

    for (i, line) in reader.lines().enumerate() {
        let line_no = i + 1;
        let line = line.map_err(|e| Error::Parse {
            line: line_no,
            message: e.to_string(),
        })?;
        let trimmed = line.trim();
        if trimmed.is_empty() || trimmed.starts_with('#') || trimmed.starts_with('%') {
            continue;
        }
        let mut tokens = trimmed.split_whitespace();
        let (Some(a), Some(b), None) = (tokens.next(), tokens.next(), tokens.next()) else {
            return Err(Error::Parse {
                line: line_no,
                message: format!(
                    "expected 2 tokens, found {}",
                    trimmed.split_whitespace().count()
                ),
            });
        };
        let u = intern(a, &mut ids);
        let w = intern(b, &mut ids);
        edges.push((u, w));
    }

    let graph = Graph::with_labels(labels, edges)?;
    if graph.m() == 0 {
        return Err(Error::NoEdges);
    }
    Ok(graph)
}

/// Unweighted shortest-path lengths from `source`; `None` marks an
/// unreachable vertex.
pub fn bfs_distances(g: &Graph, source: Vertex) -> Result<Vec<Option<u32>>> {
    g.check_vertex(source)?;
    let mut dist = vec![None; g.n()];
    let mut queue = VecDeque::new();
    dist[source] = Some(0);
    queue.push_back(source);
    while let Some(u) = queue.pop_front() {
        let d = dist[u].unwrap_or(0) + 1;
        for &w in g.adj(u) {
            if dist[w].is_none() {
                dist[w] = Some(d);
                queue.push_back(w);
            }
        }
    }
    Ok(dist)
}

/// Number of triangles through `v`.
pub fn triangles_at(g: &Graph, v: Vertex) -> usize {
    let nbrs = g.adj(v);
    let mut count = 0;
    for (i, &a) in nbrs.iter().enumerate() {
        let adj_a = g.adj(a);
        // merge-intersect the tail of nbrs with adj(a)
        let (mut p, mut q) = (i + 1, 0);
        while p < nbrs.len() && q < adj_a.len() {
            match nbrs[p].cmp(&adj_a[q]) {
                std::cmp::Ordering::Less => p += 1,
                std::cmp::Ordering::Greater => q += 1,
                std::cmp::Ordering::Equal => {
                    count += 1;
                    p += 1;
                    q += 1;
                }
            }
        }
    }
    count
}

/// Local clustering coefficient; zero when `deg(v) < 2`.
pub fn clustering_coefficient<T: Scalar>(g: &Graph, v: Vertex) -> Result<T> {
    g.check_vertex(v)?;
    let d = g.degree(v);
    if d < 2 {
        return Ok(T::zero());
    }
    let t = triangles_at(g, v);
    Ok(T::from_count(2 * t) / T::from_count(d * (d - 1)))
}

/// Mean local clustering coefficient over all vertices.
pub fn average_clustering<T: Scalar>(g: &Graph) -> Result<T> {
    if g.n() == 0 {
        return Err(Error::EmptyGraph);
    }
    let mut sum = T::zero();
    for v in 0..g.n() {
        sum = sum + clustering_coefficient::<T>(g, v)?;
    }
    Ok(sum / T::from_count(g.n()))
}
