//! Immutable simple undirected graphs and vertex sets.
//!
//! Graphs are stored as per-vertex sorted adjacency lists over dense
//! 0-based indices. All types are immutable after construction and safe to
//! share across threads.

use crate::{Error, Result};

/// A finite simple undirected graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    adj: Vec<Vec<usize>>,
}

impl Graph {
    /// Builds a graph from an edge list, rejecting self-loops, duplicate
    /// edges and out-of-range endpoints.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Graph> {
        let mut adj = vec![Vec::new(); n];
        for &(u, v) in edges {
            if u >= n {
                return Err(Error::InvalidVertex { v: u, n });
            }
            if v >= n {
                return Err(Error::InvalidVertex { v, n });
            }
            if u == v {
                return Err(Error::InvalidInstance(format!("self-loop at vertex {u}")));
            }
            adj[u].push(v);
            adj[v].push(u);
        }
        for (v, nbrs) in adj.iter_mut().enumerate() {
            nbrs.sort_unstable();
            if nbrs.windows(2).any(|w| w[0] == w[1]) {
                return Err(Error::InvalidInstance(format!(
                    "duplicate edge at vertex {v}"
                )));
            }
        }
        Ok(Graph { adj })
    }

    pub fn vertex_count(&self) -> usize {
        self.adj.len()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(Vec::len).sum::<usize>() / 2
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    /// Neighbours of `v` in ascending order.
    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].binary_search(&v).is_ok()
    }

    /// All edges as `(u, v)` with `u < v`, ascending.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for (u, nbrs) in self.adj.iter().enumerate() {
            for &v in nbrs {
                if u < v {
                    out.push((u, v));
                }
            }
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        let n = self.vertex_count();
        if n == 0 {
            return false;
        }
        let mut seen = vec![false; n];
        let mut stack = vec![0];
        seen[0] = true;
        let mut count = 1;
        while let Some(v) = stack.pop() {
            for &u in self.neighbors(v) {
                if !seen[u] {
                    seen[u] = true;
                    count += 1;
                    stack.push(u);
                }
            }
        }
        count == n
    }

    /// Renders the plain-text format accepted by [`parse_graph`].
    pub fn to_text(&self) -> String {
        let mut out = format!("{} {}\n", self.vertex_count(), self.edge_count());
        for (u, v) in self.edges() {
            out.push_str(&format!("{u} {v}\n"));
        }
        out
    }
}

/// Parses the plain-text graph format: a header line `n m` followed by `m`
/// lines `u v` with 0-based endpoints. Lines starting with `#` and blank
/// lines are ignored.
pub fn parse_graph(text: &str) -> Result<Graph> {
    let mut lines = content_lines(text);
    let (header_no, header) = lines
        .next()
        .ok_or_else(|| Error::Parse { line: 1, msg: "missing header".into() })?;
    let mut it = header.split_whitespace();
    let n: usize = parse_field(it.next(), header_no, "vertex count")?;
    let m: usize = parse_field(it.next(), header_no, "edge count")?;
    if it.next().is_some() {
        return Err(Error::Parse {
            line: header_no,
            msg: "header must be exactly \"n m\"".into(),
        });
    }

    let mut edges = Vec::with_capacity(m);
    let mut seen = std::collections::HashSet::with_capacity(m);
    for (line_no, line) in lines {
        let mut it = line.split_whitespace();
        let u: usize = parse_field(it.next(), line_no, "edge endpoint")?;
        let v: usize = parse_field(it.next(), line_no, "edge endpoint")?;
        if it.next().is_some() {
            return Err(Error::Parse {
                line: line_no,
                msg: "edge line must be exactly \"u v\"".into(),
            });
        }
        if u == v {
            return Err(Error::Parse { line: line_no, msg: format!("self-loop at vertex {u}") });
        }
        if u >= n || v >= n {
            return Err(Error::Parse {
                line: line_no,
                msg: format!("endpoint out of range in \"{u} {v}\" (n = {n})"),
            });
        }
        if !seen.insert((u.min(v), u.max(v))) {
            return Err(Error::Parse { line: line_no, msg: format!("duplicate edge {u} {v}") });
        }
        edges.push((u.min(v), u.max(v)));
    }
    if edges.len() != m {
        return Err(Error::Parse {
            line: 1,
            msg: format!("header declares {m} edges but {} were given", edges.len()),
        });
    }
    Graph::from_edges(n, &edges)
}

/// Non-comment, non-blank lines paired with their 1-based line numbers.
pub(crate) fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'))
}

pub(crate) fn parse_field<T: std::str::FromStr>(
    field: Option<&str>,
    line: usize,
    what: &str,
) -> Result<T> {
    field
        .ok_or_else(|| Error::Parse { line, msg: format!("missing {what}") })?
        .parse()
        .map_err(|_| Error::Parse { line, msg: format!("malformed {what}") })
}

/// A set of vertices of some graph, kept sorted and deduplicated.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct VertexSet {
    members: Vec<usize>,
}

impl VertexSet {
    pub fn new(members: impl IntoIterator<Item = usize>) -> VertexSet {
        let mut members: Vec<usize> = members.into_iter().collect();
        members.sort_unstable();
        members.dedup();
        VertexSet { members }
    }

    /// Ascending member list.
    pub fn members(&self) -> &[usize] {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, v: usize) -> bool {
        self.members.binary_search(&v).is_ok()
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.members.iter().copied()
    }

    /// The set with `v` removed (no-op if absent).
    pub fn without(&self, v: usize) -> VertexSet {
        VertexSet {
            members: self.members.iter().copied().filter(|&u| u != v).collect(),
        }
    }

    /// Errors unless all members lie in `[0, n)` for the given graph.
    pub fn validate(&self, g: &Graph) -> Result<()> {
        match self.members.last() {
            Some(&v) if v >= g.vertex_count() => {
                Err(Error::InvalidVertex { v, n: g.vertex_count() })
            }
            _ => Ok(()),
        }
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        VertexSet::new(iter)
    }
}

/// Number of neighbours of `v` inside `s`.
pub fn degree_in(g: &Graph, s: &VertexSet, v: usize) -> usize {
    g.neighbors(v).iter().filter(|&&u| s.contains(u)).count()
}

/// True iff the subgraph induced by `s` is connected. A single vertex
/// counts as connected; the empty set is an error.
pub fn is_connected_induced(g: &Graph, s: &VertexSet) -> Result<bool> {
    s.validate(g)?;
    if s.is_empty() {
        return Err(Error::EmptySet);
    }
    let mut seen = vec![false; g.vertex_count()];
    let start = s.members()[0];
    let mut stack = vec![start];
    seen[start] = true;
    let mut count = 1;
    while let Some(v) = stack.pop() {
        for &u in g.neighbors(v) {
            if s.contains(u) && !seen[u] {
                seen[u] = true;
                count += 1;
                stack.push(u);
            }
        }
    }
    Ok(count == s.len())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures::cycle;

    #[test]
    fn parses_path_and_cycle() {
        let p3 = parse_graph("3 2\n0 1\n1 2").unwrap();
        assert_eq!(p3.vertex_count(), 3);
        assert_eq!(p3.edges(), vec![(0, 1), (1, 2)]);

        let c5 = parse_graph("5 5\n0 1\n1 2\n2 3\n3 4\n4 0").unwrap();
        assert_eq!(c5, cycle(5));
    }

    #[test]
    fn parses_comments_and_blank_lines() {
        let g = parse_graph("# a path\n\n3 2\n0 1\n# middle\n1 2\n").unwrap();
        assert_eq!(g.edges(), vec![(0, 1), (1, 2)]);
    }

    #[test]
    fn rejects_malformed_input() {
        for (text, needle) in [
            ("2 1\n0 0", "self-loop"),
            ("2 2\n0 1\n1 0", "duplicate edge"),
            ("2 1\n0 5", "out of range"),
            ("2 1\nzero 1", "malformed"),
            ("2 1\n0", "missing"),
            ("3 2\n0 1", "header declares"),
        ] {
            let err = parse_graph(text).unwrap_err().to_string();
            assert!(err.contains(needle), "{text:?} -> {err}");
        }
    }

    #[test]
    fn parse_print_round_trip() {
        let c5 = cycle(5);
        assert_eq!(parse_graph(&c5.to_text()).unwrap(), c5);
    }

    #[test]
    fn connectivity_of_induced_subgraphs() {
        let c5 = cycle(5);
        assert!(is_connected_induced(&c5, &VertexSet::new([0, 1])).unwrap());
        assert!(!is_connected_induced(&c5, &VertexSet::new([0, 2])).unwrap());
        assert!(is_connected_induced(&c5, &VertexSet::new([3])).unwrap());
        assert!(matches!(
            is_connected_induced(&c5, &VertexSet::new([])),
            Err(Error::EmptySet)
        ));
    }

    mod properties {
        use super::*;
        use proptest::prelude::*;

        fn arb_graph() -> impl Strategy<Value = Graph> {
            (1usize..12).prop_flat_map(|n| {
                let pairs: Vec<(usize, usize)> =
                    (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
                let len = pairs.len();
                proptest::collection::vec(any::<bool>(), len).prop_map(move |picks| {
                    let edges: Vec<(usize, usize)> = pairs
                        .iter()
                        .zip(&picks)
                        .filter_map(|(&e, &keep)| keep.then_some(e))
                        .collect();
                    Graph::from_edges(n, &edges).unwrap()
                })
            })
        }

        proptest! {
            #![proptest_config(ProptestConfig::with_cases(128))]

            #[test]
            fn print_parse_round_trip(g in arb_graph()) {
                prop_assert_eq!(&parse_graph(&g.to_text()).unwrap(), &g);
            }

            #[test]
            fn induced_connectivity_matches_union_find(g in arb_graph(), mask in any::<u16>()) {
                let s = VertexSet::new((0..g.vertex_count()).filter(|&v| mask >> v & 1 == 1));
                prop_assume!(!s.is_empty());
                // Reference: union-find over the induced edges.
                let mut parent: Vec<usize> = (0..g.vertex_count()).collect();
                fn find(parent: &mut Vec<usize>, v: usize) -> usize {
                    if parent[v] != v {
                        let root = find(parent, parent[v]);
                        parent[v] = root;
                    }
                    parent[v]
                }
                for (u, v) in g.edges() {
                    if s.contains(u) && s.contains(v) {
                        let (a, b) = (find(&mut parent, u), find(&mut parent, v));
                        parent[a] = b;
                    }
                }
                let root = find(&mut parent, s.members()[0]);
                let connected = s.iter().all(|v| find(&mut parent, v) == root);
                prop_assert_eq!(is_connected_induced(&g, &s).unwrap(), connected);
            }
        }
    }
}
