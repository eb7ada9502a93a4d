//! Validates the pruned exact solvers against a bitmask oracle that
//! enumerates every subset with no pruning and no connectivity reasoning.
//! The oracle is deliberately independent of the library's search code.

use alliances::exact::{annotated_max_gmda, max_gmda_bruteforce, rooted_exists_bruteforce};
use alliances::fixtures;
use alliances::graph::{Graph, VertexSet};
use alliances::Limits;
use rand::prelude::*;
use rand_chacha::ChaCha8Rng;

/// Adjacency masks for the oracle.
fn masks(g: &Graph) -> Vec<u32> {
    (0..g.vertex_count())
        .map(|v| g.neighbors(v).iter().fold(0u32, |m, &u| m | 1 << u))
        .collect()
}

fn is_alliance_mask(adj: &[u32], mask: u32) -> bool {
    if mask == 0 {
        return false;
    }
    (0..adj.len()).all(|v| {
        if mask >> v & 1 == 0 {
            return true;
        }
        let d_in = (adj[v] & mask).count_ones();
        let d_out = adj[v].count_ones() - d_in;
        d_in + 1 >= d_out
    })
}

fn is_minimal_mask(adj: &[u32], mask: u32) -> bool {
    if !is_alliance_mask(adj, mask) {
        return false;
    }
    // Walk every proper non-empty submask.
    let mut sub = (mask - 1) & mask;
    while sub > 0 {
        if is_alliance_mask(adj, sub) {
            return false;
        }
        sub = (sub - 1) & mask;
    }
    true
}

fn members(mask: u32, n: usize) -> Vec<usize> {
    (0..n).filter(|&v| mask >> v & 1 == 1).collect()
}

/// Maximum minimal alliance by full 2^n sweep, lexicographic tie-break.
fn naive_max(g: &Graph, k_min: usize) -> Option<Vec<usize>> {
    let n = g.vertex_count();
    let adj = masks(g);
    let mut best: Option<Vec<usize>> = None;
    for mask in 1u32..(1 << n) {
        if (mask.count_ones() as usize) < k_min || !is_minimal_mask(&adj, mask) {
            continue;
        }
        let cand = members(mask, n);
        let better = match &best {
            Some(b) => cand.len() > b.len() || (cand.len() == b.len() && cand < *b),
            None => true,
        };
        if better {
            best = Some(cand);
        }
    }
    best
}

fn random_graph(rng: &mut ChaCha8Rng, n: usize, p: f64) -> Graph {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edges(n, &edges).unwrap()
}

fn sample_graphs() -> Vec<Graph> {
    let mut graphs = vec![
        fixtures::cycle(5),
        fixtures::cycle(9),
        fixtures::complete(4),
        fixtures::star(5),
        fixtures::path(7),
        fixtures::complete_bipartite(2, 5),
    ];
    let mut rng = ChaCha8Rng::seed_from_u64(61);
    for _ in 0..60 {
        let n = rng.gen_range(1..=9);
        let p = rng.gen_range(0.15..0.85);
        graphs.push(random_graph(&mut rng, n, p));
    }
    graphs
}

#[test]
fn pruned_search_matches_naive_sweep() {
    let limits = Limits::default();
    for g in sample_graphs() {
        let expected = naive_max(&g, 2);
        let got = max_gmda_bruteforce(&g, 2, &limits).unwrap();
        match (&expected, &got.witness) {
            (None, None) => {}
            (Some(e), Some(w)) => {
                assert_eq!(w.members(), e.as_slice(), "graph: {:?}", g.edges())
            }
            _ => panic!(
                "disagreement on {:?}: naive {expected:?} vs pruned {:?}",
                g.edges(),
                got.witness
            ),
        }
    }
}

#[test]
fn rooted_search_matches_filtered_naive_sweep() {
    let limits = Limits::default();
    for g in sample_graphs() {
        let n = g.vertex_count();
        let adj = masks(&g);
        for r in 0..n {
            let mut best: usize = 0;
            for mask in 1u32..(1 << n) {
                if mask >> r & 1 == 1 && is_minimal_mask(&adj, mask) {
                    best = best.max(mask.count_ones() as usize);
                }
            }
            let got = rooted_exists_bruteforce(&g, r, &limits).unwrap();
            assert_eq!(got.is_found(), best > 0, "graph {:?}, r {r}", g.edges());
            assert_eq!(got.size(), best, "graph {:?}, r {r}", g.edges());
        }
    }
}

#[test]
fn annotated_search_matches_filtered_naive_sweep() {
    let limits = Limits::default();
    let mut rng = ChaCha8Rng::seed_from_u64(62);
    for _ in 0..40 {
        // A small core plus pendants, so that forbidding is possible.
        let core = rng.gen_range(2..=6);
        let p = rng.gen_range(0.3..0.9);
        let mut g = random_graph(&mut rng, core, p);
        let pendants = rng.gen_range(1..=2);
        let mut edges = g.edges();
        for i in 0..pendants {
            edges.push((rng.gen_range(0..core), core + i));
        }
        g = Graph::from_edges(core + pendants, &edges).unwrap();

        let forbidden: Vec<usize> = (core..core + pendants)
            .filter(|&v| g.degree(v) == 1 && rng.gen_bool(0.7))
            .collect();
        let necessary: Vec<usize> = (0..core).filter(|_| rng.gen_bool(0.3)).collect();

        let n = g.vertex_count();
        let adj = masks(&g);
        let need: u32 = necessary.iter().fold(0, |m, &v| m | 1 << v);
        let avoid: u32 = forbidden.iter().fold(0, |m, &v| m | 1 << v);
        let mut best: Option<Vec<usize>> = None;
        for mask in 1u32..(1 << n) {
            if mask & need != need || mask & avoid != 0 {
                continue;
            }
            if (mask.count_ones() as usize) < 2 || !is_minimal_mask(&adj, mask) {
                continue;
            }
            let cand = members(mask, n);
            let better = match &best {
                Some(b) => cand.len() > b.len() || (cand.len() == b.len() && cand < *b),
                None => true,
            };
            if better {
                best = Some(cand);
            }
        }

        let got = annotated_max_gmda(
            &g,
            &VertexSet::new(necessary.clone()),
            &VertexSet::new(forbidden.clone()),
            2,
            &limits,
        )
        .unwrap();
        match (&best, &got.witness) {
            (None, None) => {}
            (Some(e), Some(w)) => assert_eq!(w.members(), e.as_slice()),
            _ => panic!(
                "disagreement on {:?} (necessary {necessary:?}, forbidden {forbidden:?}): \
                 naive {best:?} vs pruned {:?}",
                g.edges(),
                got.witness
            ),
        }
    }
}
