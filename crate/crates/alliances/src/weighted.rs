//! Edge-weighted graphs and orientations for the minimum-maximum-outdegree
//! problem.

use crate::graph::{content_lines, parse_field, Graph};
use crate::{Error, Result};

/// A simple undirected graph with positive integer edge weights. The edge
/// list is normalized to `u < v` and sorted, so equal inputs produce
/// byte-identical serializations.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeightedGraph {
    graph: Graph,
    edges: Vec<(usize, usize, u64)>,
}

impl WeightedGraph {
    pub fn new(n: usize, edges: &[(usize, usize, u64)]) -> Result<WeightedGraph> {
        let mut normalized: Vec<(usize, usize, u64)> = Vec::with_capacity(edges.len());
        for &(u, v, w) in edges {
            if w == 0 {
                return Err(Error::InvalidInstance(format!(
                    "edge {u} {v} has non-positive weight"
                )));
            }
            normalized.push((u.min(v), u.max(v), w));
        }
        normalized.sort_unstable();
        let plain: Vec<(usize, usize)> = normalized.iter().map(|&(u, v, _)| (u, v)).collect();
        let graph = Graph::from_edges(n, &plain)?;
        Ok(WeightedGraph { graph, edges: normalized })
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn vertex_count(&self) -> usize {
        self.graph.vertex_count()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Edges `(u, v, w)` with `u < v`, ascending.
    pub fn edges(&self) -> &[(usize, usize, u64)] {
        &self.edges
    }

    /// Sum of all edge weights.
    pub fn total_weight(&self) -> u64 {
        self.edges.iter().map(|&(_, _, w)| w).sum()
    }

    /// Sum of weights of edges incident to `v`.
    pub fn weighted_degree(&self, v: usize) -> u64 {
        self.edges
            .iter()
            .filter(|&&(a, b, _)| a == v || b == v)
            .map(|&(_, _, w)| w)
            .sum()
    }

    pub fn to_text(&self) -> String {
        let mut out = format!("{} {}\n", self.vertex_count(), self.edge_count());
        for &(u, v, w) in &self.edges {
            out.push_str(&format!("{u} {v} {w}\n"));
        }
        out
    }
}

/// Parses the weighted variant of the plain-text format: header `n m`,
/// then `m` lines `u v w` with positive integer weight.
pub fn parse_weighted_graph(text: &str) -> Result<WeightedGraph> {
    let mut lines = content_lines(text);
    let (header_no, header) = lines
        .next()
        .ok_or_else(|| Error::Parse { line: 1, msg: "missing header".into() })?;
    let mut it = header.split_whitespace();
    let n: usize = parse_field(it.next(), header_no, "vertex count")?;
    let m: usize = parse_field(it.next(), header_no, "edge count")?;

    let mut edges = Vec::with_capacity(m);
    for (line_no, line) in lines {
        let mut it = line.split_whitespace();
        let u: usize = parse_field(it.next(), line_no, "edge endpoint")?;
        let v: usize = parse_field(it.next(), line_no, "edge endpoint")?;
        let w: u64 = parse_field(it.next(), line_no, "edge weight")?;
        if w == 0 {
            return Err(Error::Parse { line: line_no, msg: "weight must be positive".into() });
        }
        edges.push((u, v, w));
    }
    if edges.len() != m {
        return Err(Error::Parse {
            line: 1,
            msg: format!("header declares {m} edges but {} were given", edges.len()),
        });
    }
    WeightedGraph::new(n, &edges)
}

/// An orientation of a weighted graph: `forward[i]` directs the `i`-th
/// edge `(u, v)` as `u -> v`, otherwise `v -> u`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Orientation {
    pub forward: Vec<bool>,
}

impl Orientation {
    /// Directed arcs `(from, to, w)` in edge order.
    pub fn arcs(&self, gw: &WeightedGraph) -> Vec<(usize, usize, u64)> {
        gw.edges()
            .iter()
            .zip(&self.forward)
            .map(|(&(u, v, w), &f)| if f { (u, v, w) } else { (v, u, w) })
            .collect()
    }

    /// Weighted outdegree of every vertex.
    pub fn weighted_outdegrees(&self, gw: &WeightedGraph) -> Vec<u64> {
        let mut out = vec![0; gw.vertex_count()];
        for (from, _, w) in self.arcs(gw) {
            out[from] += w;
        }
        out
    }

    pub fn max_weighted_outdegree(&self, gw: &WeightedGraph) -> u64 {
        self.weighted_outdegrees(gw).into_iter().max().unwrap_or(0)
    }
}
