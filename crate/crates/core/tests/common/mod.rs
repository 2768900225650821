// SPDX-License-Identifier: Apache-2.0

//! Brute-force reference implementations shared by the integration tests.
//! None of these reuse the library's algorithms.

#![allow(dead_code)]

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use richclub::{Graph, Vertex};

/// Random simple graph with `n` vertices and edge probability `p`.
pub fn random_graph(n: usize, p: f64, seed: u64) -> Graph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut edges = Vec::new();
    for u in 0..n {
        for w in u + 1..n {
            if rng.gen_bool(p) {
                edges.push((u, w));
            }
        }
    }
    Graph::from_edges(n, edges).unwrap()
}

/// Random small graph as in the oracle-equivalence criterion: 2..=12
/// vertices, density drawn uniformly.
pub fn random_small_graph(seed: u64) -> Graph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x5eed);
    let n = rng.gen_range(2..=12);
    let p = rng.gen_range(0.1..0.9);
    random_graph(n, p, seed)
}

/// All-pairs hop distances by Floyd–Warshall; `None` when unreachable.
pub fn floyd_warshall(g: &Graph) -> Vec<Vec<Option<u32>>> {
    let n = g.n();
    let mut d = vec![vec![None; n]; n];
    for (u, row) in d.iter_mut().enumerate() {
        row[u] = Some(0);
        for &w in g.adj(u) {
            row[w] = Some(1);
        }
    }
    for k in 0..n {
        for i in 0..n {
            for j in 0..n {
                if let (Some(a), Some(b)) = (d[i][k], d[k][j]) {
                    if !matches!(d[i][j], Some(c) if c <= a + b) {
                        d[i][j] = Some(a + b);
                    }
                }
            }
        }
    }
    d
}

/// Reciprocal-distance closeness straight from its definition.
pub fn brute_closeness(g: &Graph) -> Vec<f64> {
    let d = floyd_warshall(g);
    let n = g.n();
    (0..n)
        .map(|v| {
            let s: f64 = (0..n)
                .filter(|&s| s != v)
                .filter_map(|s| d[v][s])
                .map(|x| 1.0 / x as f64)
                .sum();
            s / (n - 1) as f64
        })
        .collect()
}

/// Every shortest path from `s` to `t`, listed vertex by vertex.
pub fn shortest_paths(g: &Graph, d: &[Vec<Option<u32>>], s: Vertex, t: Vertex) -> Vec<Vec<Vertex>> {
    let mut out = Vec::new();
    let Some(target) = d[s][t] else { return out };
    let mut path = vec![s];
    fn walk(
        g: &Graph,
        d: &[Vec<Option<u32>>],
        t: Vertex,
        target: u32,
        path: &mut Vec<Vertex>,
        out: &mut Vec<Vec<Vertex>>,
    ) {
        let here = *path.last().unwrap();
        if here == t {
            out.push(path.clone());
            return;
        }
        let step = path.len() as u32;
        for &w in g.adj(here) {
            // w must be one hop further from s and still on a geodesic to t
            if d[path[0]][w] == Some(step) && d[w][t].map(|x| step + x) == Some(target) {
                path.push(w);
                walk(g, d, t, target, path, out);
                path.pop();
            }
        }
    }
    walk(g, d, t, target, &mut path, &mut out);
    out
}

/// `(per_pair, paper_literal)` betweenness by explicit path enumeration.
pub fn brute_betweenness(g: &Graph) -> (Vec<f64>, Vec<f64>) {
    let n = g.n();
    let d = floyd_warshall(g);
    let mut per_pair = vec![0.0; n];
    let mut through = vec![0.0; n];
    let mut total = 0.0;
    for s in 0..n {
        for t in s + 1..n {
            let paths = shortest_paths(g, &d, s, t);
            if paths.is_empty() {
                continue;
            }
            let sigma = paths.len() as f64;
            total += sigma;
            let mut hits = vec![0usize; n];
            for p in &paths {
                for &v in &p[1..p.len() - 1] {
                    hits[v] += 1;
                }
            }
            for v in 0..n {
                per_pair[v] += hits[v] as f64 / sigma;
                through[v] += hits[v] as f64;
            }
        }
    }
    let literal = through
        .iter()
        .map(|&x| if total > 0.0 { x / total } else { 0.0 })
        .collect();
    (per_pair, literal)
}

/// Core numbers by repeatedly deleting a minimum-degree vertex.
pub fn brute_core_numbers(g: &Graph) -> Vec<usize> {
    let n = g.n();
    let mut alive = vec![true; n];
    let mut core = vec![0; n];
    let mut level = 0;
    for _ in 0..n {
        let (v, deg) = (0..n)
            .filter(|&v| alive[v])
            .map(|v| (v, g.adj(v).iter().filter(|&&w| alive[w]).count()))
            .min_by_key(|&(v, d)| (d, v))
            .unwrap();
        level = level.max(deg);
        core[v] = level;
        alive[v] = false;
    }
    core
}

/// Gain table for sample `s`: every frontier vertex with
/// `|N(v) \ (N(S) ∪ S)|`.
pub fn brute_gains(g: &Graph, s: &[Vertex]) -> Vec<(Vertex, usize)> {
    let n = g.n();
    let mut in_s = vec![false; n];
    for &v in s {
        in_s[v] = true;
    }
    let mut in_front = vec![false; n];
    for &v in s {
        for &w in g.adj(v) {
            if !in_s[w] {
                in_front[w] = true;
            }
        }
    }
    (0..n)
        .filter(|&v| in_front[v])
        .map(|v| {
            let gain = g.adj(v).iter().filter(|&&w| !in_s[w] && !in_front[w]).count();
            (v, gain)
        })
        .collect()
}

/// Checks that every non-restart step of `order` picked a frontier vertex of
/// maximum gain. Returns the number of steps checked.
pub fn assert_greedy_steps(g: &Graph, order: &[Vertex], restarts: &[usize]) -> usize {
    let mut checked = 0;
    for i in 1..order.len() {
        let gains = brute_gains(g, &order[..i]);
        if restarts.contains(&i) {
            assert!(gains.is_empty(), "restart at step {i} with non-empty frontier");
            assert!(!order[..i].contains(&order[i]));
            continue;
        }
        let best = gains.iter().map(|&(_, x)| x).max().expect("frontier non-empty");
        let chosen = gains
            .iter()
            .find(|&&(v, _)| v == order[i])
            .unwrap_or_else(|| panic!("step {i}: {} not on frontier", order[i]));
        assert_eq!(chosen.1, best, "step {i}: gain {} below max {best}", chosen.1);
        checked += 1;
    }
    checked
}

/// Pairwise cluster merging in a shuffled order until nothing overlaps.
pub fn naive_clusters(g: &Graph, hc: &[Vertex], seed: u64) -> Vec<Vec<Vertex>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut clusters: Vec<Vec<Vertex>> = hc
        .iter()
        .map(|&v| {
            let mut c = vec![v];
            c.extend_from_slice(g.adj(v));
            c
        })
        .collect();
    loop {
        clusters.shuffle(&mut rng);
        let mut merged = false;
        'outer: for i in 0..clusters.len() {
            for j in 0..clusters.len() {
                if i != j && clusters[i].iter().any(|v| clusters[j].contains(v)) {
                    let other = clusters.remove(j);
                    let i = if j < i { i - 1 } else { i };
                    clusters[i].extend(other);
                    merged = true;
                    break 'outer;
                }
            }
        }
        if !merged {
            break;
        }
    }
    for c in &mut clusters {
        c.sort_unstable();
        c.dedup();
    }
    clusters.sort();
    clusters
}
