// SPDX-License-Identifier: Apache-2.0

//! k-core decomposition (bucket peeling, O(n + m)) and high-core selection.

use std::fmt::Write as _;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CoreDecomposition {
    pub core_number: Vec<usize>,
    pub delta_max: usize,
}

impl CoreDecomposition {
    /// `core_number,count` rows for every core value present, ascending.
    pub fn histogram(&self) -> Vec<(usize, usize)> {
        let mut counts = vec![0usize; self.delta_max + 1];
        for &c in &self.core_number {
            counts[c] += 1;
        }
        counts
            .into_iter()
            .enumerate()
            .filter(|&(_, count)| count > 0)
            .collect()
    }

    pub fn histogram_csv(&self) -> String {
        let mut out = String::from("core_number,count\n");
        for (core, count) in self.histogram() {
            let _ = writeln!(out, "{core},{count}");
        }
        out
    }
}

/// Core number of every vertex.
pub fn core_decompose(g: &Graph) -> CoreDecomposition {
    let n = g.n();
    if n == 0 {
        return CoreDecomposition {
            core_number: Vec::new(),
            delta_max: 0,
        };
    }
    let mut degree: Vec<usize> = (0..n).map(|v| g.degree(v)).collect();
    let max_degree = degree.iter().copied().max().unwrap_or(0);

    // bin[d] = first slot of degree-d vertices in `order`
    let mut bin = vec![0usize; max_degree + 1];
    for &d in &degree {
        bin[d] += 1;
    }
    let mut start = 0;
    for slot in bin.iter_mut() {
        let count = *slot;
        *slot = start;
        start += count;
    }
    let mut order = vec![0 as Vertex; n];
    let mut pos = vec![0usize; n];
    for v in 0..n {
        let d = degree[v];
        pos[v] = bin[d];
        order[pos[v]] = v;
        bin[d] += 1;
    }
    for d in (1..=max_degree).rev() {
        bin[d] = bin[d - 1];
    }
    bin[0] = 0;

    for i in 0..n {
        let v = order[i];
        for &u in g.adj(v) {
            if degree[u] > degree[v] {
                // move u to the front of its bucket, then shrink its degree
                let du = degree[u];
                let pu = pos[u];
                let pw = bin[du];
                let w = order[pw];
                if u != w {
                    order.swap(pu, pw);
                    pos[u] = pw;
                    pos[w] = pu;
                }
                bin[du] += 1;
                degree[u] -= 1;
            }
        }
    }

    let delta_max = degree.iter().copied().max().unwrap_or(0);
    CoreDecomposition {
        core_number: degree,
        delta_max,
    }
}

/// Vertices in the innermost or second-innermost core
/// (`core_number >= delta_max - 1`). When `delta_max == 1` this is every
/// non-isolated vertex.
pub fn high_core_vertices(d: &CoreDecomposition) -> Result<Vec<Vertex>> {
    if d.core_number.is_empty() {
        return Err(Error::EmptyGraph);
    }
    if d.delta_max == 0 {
        return Err(Error::NoEdges);
    }
    let threshold = (d.delta_max - 1).max(1);
    Ok(d
        .core_number
        .iter()
        .enumerate()
        .filter(|&(_, &c)| c >= threshold)
        .map(|(v, _)| v)
        .collect())
}
