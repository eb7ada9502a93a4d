//! Small named graphs used by the test suites, benchmarks and docs.

use crate::graph::Graph;

pub fn path(n: usize) -> Graph {
    let edges: Vec<_> = (1..n).map(|v| (v - 1, v)).collect();
    Graph::from_edges(n, &edges).unwrap()
}

pub fn cycle(n: usize) -> Graph {
    let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
    Graph::from_edges(n, &edges).unwrap()
}

pub fn complete(n: usize) -> Graph {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            edges.push((u, v));
        }
    }
    Graph::from_edges(n, &edges).unwrap()
}

/// Star with the centre at vertex 0.
pub fn star(leaves: usize) -> Graph {
    let edges: Vec<_> = (1..=leaves).map(|v| (0, v)).collect();
    Graph::from_edges(leaves + 1, &edges).unwrap()
}

/// Complete bipartite graph with parts `0..a` and `a..a+b`.
pub fn complete_bipartite(a: usize, b: usize) -> Graph {
    let mut edges = Vec::new();
    for u in 0..a {
        for v in a..a + b {
            edges.push((u, v));
        }
    }
    Graph::from_edges(a + b, &edges).unwrap()
}

/// Circulant graph: vertex `i` adjacent to `i ± s` (mod n) for each step.
pub fn circulant(n: usize, steps: &[usize]) -> Graph {
    let mut edges = Vec::new();
    for i in 0..n {
        for &s in steps {
            let j = (i + s) % n;
            let (a, b) = (i.min(j), i.max(j));
            if a != b && !edges.contains(&(a, b)) {
                edges.push((a, b));
            }
        }
    }
    Graph::from_edges(n, &edges).unwrap()
}

/// `K_{2,5}` plus an edge between the two high-degree vertices:
/// x = 0, y = 1, u1..u5 = 2..6. The set {0, 1, 2, 3} is globally minimal
/// although 2 and 3 are strongly protected.
pub fn k25_plus_edge() -> Graph {
    let mut edges = vec![(0, 1)];
    for u in 2..7 {
        edges.push((0, u));
        edges.push((1, u));
    }
    Graph::from_edges(7, &edges).unwrap()
}

/// The 26-vertex three-level spider: root 0 with five children 1..=5, each
/// with two children (6..=15), each of those with a single leaf (16..=25).
pub fn spider26() -> Graph {
    let mut edges = Vec::new();
    for c in 1..=5usize {
        edges.push((0, c));
        for j in 0..2 {
            let mid = 5 + 2 * (c - 1) + j + 1;
            edges.push((c, mid));
            edges.push((mid, mid + 10));
        }
    }
    Graph::from_edges(26, &edges).unwrap()
}

/// The 10-vertex neighbourhood-diversity illustration graph. Type classes
/// are {0}, {1,2}, {3,4}, {5}, {6,7,8,9}: vertex 0 sees 1..=4, vertex 5
/// sees 1..=4 and the K4 on 6..=9, and 1-2 are adjacent twins.
pub fn slide10() -> Graph {
    let edges = [
        (0, 1),
        (0, 2),
        (0, 3),
        (0, 4),
        (5, 1),
        (5, 2),
        (5, 3),
        (5, 4),
        (1, 2),
        (5, 6),
        (5, 7),
        (5, 8),
        (5, 9),
        (6, 8),
        (8, 9),
        (7, 9),
        (6, 7),
        (6, 9),
        (7, 8),
    ];
    Graph::from_edges(10, &edges).unwrap()
}
