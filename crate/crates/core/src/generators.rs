// SPDX-License-Identifier: Apache-2.0

//! Deterministic graph families used in tests, benchmarks and the toy
//! single-club / scattered-club experiments.

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::graph::{Graph, Vertex};

fn build(n: usize, edges: Vec<(Vertex, Vertex)>) -> Graph {
    Graph::from_edges(n, edges).expect("generator edges are in range")
}

fn clique_edges(vertices: &[Vertex], out: &mut Vec<(Vertex, Vertex)>) {
    for (i, &u) in vertices.iter().enumerate() {
        for &w in &vertices[i + 1..] {
            out.push((u, w));
        }
    }
}

pub fn complete(n: usize) -> Graph {
    let mut edges = Vec::new();
    clique_edges(&(0..n).collect::<Vec<_>>(), &mut edges);
    build(n, edges)
}

pub fn path(n: usize) -> Graph {
    build(n, (1..n).map(|v| (v - 1, v)).collect())
}

pub fn cycle(n: usize) -> Graph {
    let mut edges: Vec<_> = (1..n).map(|v| (v - 1, v)).collect();
    if n > 2 {
        edges.push((n - 1, 0));
    }
    build(n, edges)
}

/// Star `K1,leaves` with the center at index 0.
pub fn star(leaves: usize) -> Graph {
    build(leaves + 1, (1..=leaves).map(|v| (0, v)).collect())
}

/// `K4` on `0..4` with pendant vertex 4 attached to vertex 0.
pub fn k4_with_pendant() -> Graph {
    let mut edges = Vec::new();
    clique_edges(&[0, 1, 2, 3], &mut edges);
    edges.push((0, 4));
    build(5, edges)
}

/// Two `K_clique` joined by a path with `bridge` interior vertices. The left
/// clique is `0..clique`, the path follows, then the right clique.
pub fn barbell(clique: usize, bridge: usize) -> Graph {
    let n = 2 * clique + bridge;
    let mut edges = Vec::new();
    clique_edges(&(0..clique).collect::<Vec<_>>(), &mut edges);
    clique_edges(&(clique + bridge..n).collect::<Vec<_>>(), &mut edges);
    let mut prev = clique - 1;
    for v in clique..clique + bridge {
        edges.push((prev, v));
        prev = v;
    }
    edges.push((prev, clique + bridge));
    build(n, edges)
}

/// Erdős–Rényi `G(n, p)`.
pub fn gnp(n: usize, p: f64, seed: u64) -> Graph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut edges = Vec::new();
    for u in 0..n {
        for w in u + 1..n {
            if rng.gen_bool(p) {
                edges.push((u, w));
            }
        }
    }
    build(n, edges)
}

/// Preferential-attachment graph: each new vertex links to `per_step`
/// distinct earlier vertices chosen proportionally to degree.
pub fn preferential_attachment(n: usize, per_step: usize, seed: u64) -> Graph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let seed_size = per_step + 1;
    let mut edges = Vec::new();
    clique_edges(&(0..seed_size.min(n)).collect::<Vec<_>>(), &mut edges);
    let mut endpoints: Vec<Vertex> = edges.iter().flat_map(|&(u, w)| [u, w]).collect();
    for v in seed_size..n {
        let mut chosen = Vec::with_capacity(per_step);
        while chosen.len() < per_step {
            let t = endpoints[rng.gen_range(0..endpoints.len())];
            if !chosen.contains(&t) {
                chosen.push(t);
            }
        }
        for t in chosen {
            edges.push((t, v));
            endpoints.extend([t, v]);
        }
    }
    build(n, edges)
}

/// Grows a random recursive tree: vertex `first + i` attaches to a uniformly
/// chosen vertex among `anchors` and the tree vertices added before it.
fn grow_tree(
    anchors: &[Vertex],
    first: Vertex,
    count: usize,
    rng: &mut ChaCha8Rng,
    edges: &mut Vec<(Vertex, Vertex)>,
) {
    for i in 0..count {
        let pick = rng.gen_range(0..anchors.len() + i);
        let parent = if pick < anchors.len() {
            anchors[pick]
        } else {
            first + pick - anchors.len()
        };
        edges.push((parent, first + i));
    }
}

/// Single rich club: `K8` on `0..8` with a 92-vertex periphery made of eight
/// random recursive trees. Each tree root is attached to two core vertices.
/// n = 100, m = 128.
pub fn single_club_toy(seed: u64) -> Graph {
    const CORE: usize = 8;
    const TREES: usize = 8;
    const N: usize = 100;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut edges = Vec::new();
    clique_edges(&(0..CORE).collect::<Vec<_>>(), &mut edges);

    let periphery = N - CORE;
    let mut next = CORE;
    for t in 0..TREES {
        let size = periphery / TREES + usize::from(t < periphery % TREES);
        let root = next;
        edges.push((t, root));
        edges.push(((t + 1) % CORE, root));
        grow_tree(&[root], root + 1, size - 1, &mut rng, &mut edges);
        next += size;
    }
    debug_assert_eq!(next, N);
    build(N, edges)
}

/// Scattered rich clubs: three `K6` joined in a ring by paths with eight
/// interior vertices, plus random pendant trees hanging off the cliques.
/// n = 100, m = 130.
pub fn scattered_club_toy(seed: u64) -> Graph {
    const CLUB: usize = 6;
    const BRIDGE: usize = 8;
    const N: usize = 100;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut edges = Vec::new();
    let clubs: Vec<Vec<Vertex>> = (0..3).map(|c| (c * CLUB..(c + 1) * CLUB).collect()).collect();
    for club in &clubs {
        clique_edges(club, &mut edges);
    }
    let mut next = 3 * CLUB;
    for c in 0..3 {
        // ring: last vertex of club c to first vertex of club c+1
        let from = clubs[c][CLUB - 1];
        let to = clubs[(c + 1) % 3][0];
        let mut prev = from;
        for v in next..next + BRIDGE {
            edges.push((prev, v));
            prev = v;
        }
        edges.push((prev, to));
        next += BRIDGE;
    }
    let pendant = N - next;
    for (c, club) in clubs.iter().enumerate() {
        let size = pendant / 3 + usize::from(c < pendant % 3);
        grow_tree(club, next, size, &mut rng, &mut edges);
        next += size;
    }
    debug_assert_eq!(next, N);
    build(N, edges)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sizes() {
        assert_eq!(complete(5).m(), 10);
        assert_eq!(path(4).m(), 3);
        assert_eq!(cycle(5).m(), 5);
        assert_eq!(star(5).degree(0), 5);
        assert_eq!(k4_with_pendant().m(), 7);
        let b = barbell(5, 3);
        assert_eq!((b.n(), b.m()), (13, 24));
        let pa = preferential_attachment(200, 3, 1);
        assert_eq!(pa.m(), 6 + 3 * 196);
    }

    #[test]
    fn toy_graphs_match_advertised_size() {
        let single = single_club_toy(7);
        let scattered = scattered_club_toy(7);
        assert_eq!((single.n(), single.m()), (100, 128));
        assert_eq!((scattered.n(), scattered.m()), (100, 130));
        let rel = (single.m() as f64 - scattered.m() as f64).abs() / single.m() as f64;
        assert!(rel <= 0.05);
        for g in [&single, &scattered] {
            let reach = crate::graph::bfs_distances(g, 0).unwrap();
            assert!(reach.iter().all(Option::is_some), "toy graph must be connected");
        }
    }
}
