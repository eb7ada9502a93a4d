//! Seeded instance generators. All generators are driven by ChaCha8 so
//! identical seeds give identical instances on every platform.

use crate::graph::Graph;
use crate::weighted::WeightedGraph;
use crate::{Error, Result};
use rand::prelude::*;
use rand_chacha::ChaCha8Rng;

fn rng_for(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Uniform random labelled tree on `n` vertices via a random Pruefer
/// sequence.
pub fn random_tree(n: usize, seed: u64) -> Graph {
    let mut rng = rng_for(seed);
    match n {
        0 => Graph::from_edges(0, &[]).unwrap(),
        1 => Graph::from_edges(1, &[]).unwrap(),
        2 => Graph::from_edges(2, &[(0, 1)]).unwrap(),
        _ => {
            let seq: Vec<usize> = (0..n - 2).map(|_| rng.gen_range(0..n)).collect();
            let mut degree = vec![1usize; n];
            for &v in &seq {
                degree[v] += 1;
            }
            let mut leaves: std::collections::BinaryHeap<std::cmp::Reverse<usize>> = (0..n)
                .filter(|&v| degree[v] == 1)
                .map(std::cmp::Reverse)
                .collect();
            let mut edges = Vec::with_capacity(n - 1);
            for &v in &seq {
                let std::cmp::Reverse(leaf) = leaves.pop().expect("pruefer invariant");
                edges.push((leaf, v));
                degree[v] -= 1;
                if degree[v] == 1 {
                    leaves.push(std::cmp::Reverse(v));
                }
            }
            let std::cmp::Reverse(a) = leaves.pop().unwrap();
            let std::cmp::Reverse(b) = leaves.pop().unwrap();
            edges.push((a, b));
            Graph::from_edges(n, &edges).unwrap()
        }
    }
}

/// Erdos-Renyi graph: every pair becomes an edge independently with
/// probability `p`.
pub fn random_gnp(n: usize, p: f64, seed: u64) -> Result<Graph> {
    if n == 0 {
        return Err(Error::InfeasibleParams("gnp needs n >= 1".into()));
    }
    if !(0.0..=1.0).contains(&p) {
        return Err(Error::InfeasibleParams(format!("probability {p} outside [0, 1]")));
    }
    let mut rng = rng_for(seed);
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edges(n, &edges)
}

/// Random `s`-regular graph via the pairing model with rejection.
pub fn random_regular(n: usize, s: usize, seed: u64) -> Result<Graph> {
    if n == 0 {
        return Err(Error::InfeasibleParams("regular needs n >= 1".into()));
    }
    if s >= n {
        return Err(Error::InfeasibleParams(format!("degree {s} needs more than {n} vertices")));
    }
    if !(n * s).is_multiple_of(2) {
        return Err(Error::InfeasibleParams(format!("n * s = {} is odd", n * s)));
    }
    let mut rng = rng_for(seed);
    'attempt: for _ in 0..10_000 {
        let mut stubs: Vec<usize> = (0..n).flat_map(|v| std::iter::repeat_n(v, s)).collect();
        stubs.shuffle(&mut rng);
        let mut edges = Vec::with_capacity(n * s / 2);
        for pair in stubs.chunks(2) {
            let (u, v) = (pair[0].min(pair[1]), pair[0].max(pair[1]));
            if u == v || edges.contains(&(u, v)) {
                continue 'attempt;
            }
            edges.push((u, v));
        }
        return Graph::from_edges(n, &edges);
    }
    Err(Error::InfeasibleParams(format!(
        "could not realize a simple {s}-regular graph on {n} vertices"
    )))
}

/// Random weighted graph with exactly `m` edges and weights in
/// `1..=max_w`.
pub fn random_weighted(n: usize, m: usize, max_w: u64, seed: u64) -> Result<WeightedGraph> {
    if n == 0 {
        return Err(Error::InfeasibleParams("weighted needs n >= 1".into()));
    }
    if max_w == 0 {
        return Err(Error::InfeasibleParams("weights must be positive".into()));
    }
    let all_pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .collect();
    if m > all_pairs.len() {
        return Err(Error::InfeasibleParams(format!(
            "{m} edges requested but only {} pairs exist",
            all_pairs.len()
        )));
    }
    let mut rng = rng_for(seed);
    let mut pairs = all_pairs;
    pairs.shuffle(&mut rng);
    let edges: Vec<(usize, usize, u64)> = pairs[..m]
        .iter()
        .map(|&(u, v)| (u, v, rng.gen_range(1..=max_w)))
        .collect();
    WeightedGraph::new(n, &edges)
}
