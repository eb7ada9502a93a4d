//! Neighbourhood-diversity type classes and the quotient type graph.
//!
//! Two vertices `u`, `v` have the same type when `N(u) \ {v} = N(v) \ {u}`.
//! Same-type is an equivalence relation, so the minimum partition into type
//! classes is unique; each class induces a clique or an independent set, and
//! between two classes the graph has either all cross edges or none.

use crate::graph::Graph;
use crate::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize)]
#[serde(rename_all = "lowercase")]
pub enum ClassKind {
    Clique,
    Independent,
}

/// The minimum partition of `V` into same-type classes.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TypePartition {
    /// Disjoint vertex lists covering `[0, n)`; each sorted ascending, the
    /// list of classes ordered by smallest member.
    pub classes: Vec<Vec<usize>>,
    /// Kind per class. Singleton classes are labelled `Clique` by
    /// convention (both alliance inequalities coincide on singletons).
    pub kinds: Vec<ClassKind>,
}

impl TypePartition {
    pub fn class_count(&self) -> usize {
        self.classes.len()
    }

    pub fn sizes(&self) -> Vec<usize> {
        self.classes.iter().map(Vec::len).collect()
    }

    /// Class index of each vertex.
    pub fn class_of(&self, n: usize) -> Vec<usize> {
        let mut of = vec![0; n];
        for (c, class) in self.classes.iter().enumerate() {
            for &v in class {
                of[v] = c;
            }
        }
        of
    }
}

/// True iff `N(u) \ {v} = N(v) \ {u}`.
pub fn same_type(g: &Graph, u: usize, v: usize) -> bool {
    let mut a = g.neighbors(u).iter().filter(|&&x| x != v);
    let mut b = g.neighbors(v).iter().filter(|&&x| x != u);
    loop {
        match (a.next(), b.next()) {
            (None, None) => return true,
            (Some(x), Some(y)) if x == y => continue,
            _ => return false,
        }
    }
}

/// Computes the minimum type partition by pairwise same-type tests against
/// class representatives. `O(n^2 * max_degree)`, which is plenty for the
/// instance sizes the exponential solvers can handle anyway.
pub fn compute_type_partition(g: &Graph) -> Result<TypePartition> {
    let n = g.vertex_count();
    if n == 0 {
        return Err(Error::InvalidInstance("type partition of empty graph".into()));
    }
    let mut classes: Vec<Vec<usize>> = Vec::new();
    for v in 0..n {
        match classes.iter_mut().find(|c| same_type(g, c[0], v)) {
            Some(class) => class.push(v),
            None => classes.push(vec![v]),
        }
    }
    let kinds = classes
        .iter()
        .map(|c| {
            if c.len() >= 2 && !g.has_edge(c[0], c[1]) {
                ClassKind::Independent
            } else {
                ClassKind::Clique
            }
        })
        .collect();
    Ok(TypePartition { classes, kinds })
}

/// The quotient graph on type classes.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TypeGraph {
    /// Neighbouring class indices per class, sorted ascending.
    pub adj: Vec<Vec<usize>>,
    /// Class sizes `n_i`.
    pub sizes: Vec<usize>,
    pub kinds: Vec<ClassKind>,
}

impl TypeGraph {
    pub fn class_count(&self) -> usize {
        self.sizes.len()
    }

    /// Edges `(i, j)` with `i < j`.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for (i, nbrs) in self.adj.iter().enumerate() {
            for &j in nbrs {
                if i < j {
                    out.push((i, j));
                }
            }
        }
        out
    }
}

/// Builds the type graph for a partition: classes `C_i`, `C_j` are adjacent
/// iff every `u ∈ C_i`, `v ∈ C_j` are adjacent in `g`. Errors if the
/// partition is inconsistent with `g` (some but not all cross edges).
pub fn build_type_graph(g: &Graph, p: &TypePartition) -> Result<TypeGraph> {
    let k = p.class_count();
    let mut adj = vec![Vec::new(); k];
    for i in 0..k {
        for j in i + 1..k {
            let mut count = 0usize;
            for &u in &p.classes[i] {
                for &v in &p.classes[j] {
                    if g.has_edge(u, v) {
                        count += 1;
                    }
                }
            }
            let full = p.classes[i].len() * p.classes[j].len();
            if count == full {
                adj[i].push(j);
                adj[j].push(i);
            } else if count != 0 {
                return Err(Error::InvalidInstance(format!(
                    "classes {i} and {j} are joined by {count} of {full} cross edges"
                )));
            }
        }
    }
    for nbrs in &mut adj {
        nbrs.sort_unstable();
    }
    Ok(TypeGraph { adj, sizes: p.sizes(), kinds: p.kinds.clone() })
}
