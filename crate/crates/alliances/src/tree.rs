//! Polynomial-time solver for maximum globally minimal defensive alliances
//! on trees.
//!
//! On a tree, a set of size at least two is a globally minimal defensive
//! alliance iff it is connected and every member is marginally protected,
//! which pins the number of in-solution neighbours of each member `v` to
//! exactly `floor(deg(v) / 2)`. That turns the problem into a bottom-up
//! dynamic program with three states per vertex:
//!
//! * `out` — `v` is not in the solution (the alliance lies in one subtree),
//! * `in_without_parent` — `v` is in the solution, its parent is not, so
//!   `v` is protected by children alone,
//! * `in_with_parent` — both `v` and its parent are in the solution.
//!
//! Each state stores the size of the largest alliance within `v`'s subtree,
//! with an explicit sentinel (`None`) for "no alliance exists here". For a
//! vertex with `d` children the in-solution child counts are exactly
//! `ceil((d-2)/2)` (`in_with_parent`), `ceil(d/2)` (`in_without_parent`)
//! and `floor(d/2)` at the root; the best children are picked greedily
//! after sorting by their `in_with_parent` value.

use crate::alliance::certify_sufficient_minimality;
use crate::exact::SolveResult;
use crate::graph::{Graph, VertexSet};
use crate::{Error, Result};

/// A tree rooted at vertex 0, with parents and children arrays and a
/// breadth-first order (parents before children).
#[derive(Debug, Clone)]
pub struct RootedTree {
    pub root: usize,
    pub parent: Vec<Option<usize>>,
    pub children: Vec<Vec<usize>>,
    pub order: Vec<usize>,
}

/// Roots a tree at vertex 0. Errors unless the graph is connected with
/// exactly `n - 1` edges.
pub fn root_tree(g: &Graph) -> Result<RootedTree> {
    let n = g.vertex_count();
    if n == 0 {
        return Err(Error::NotATree("graph is empty".into()));
    }
    if g.edge_count() != n - 1 {
        return Err(Error::NotATree(format!(
            "{} edges on {} vertices",
            g.edge_count(),
            n
        )));
    }
    let root = 0;
    let mut parent = vec![None; n];
    let mut children = vec![Vec::new(); n];
    let mut order = Vec::with_capacity(n);
    let mut seen = vec![false; n];
    let mut queue = std::collections::VecDeque::from([root]);
    seen[root] = true;
    while let Some(v) = queue.pop_front() {
        order.push(v);
        for &u in g.neighbors(v) {
            if !seen[u] {
                seen[u] = true;
                parent[u] = Some(v);
                children[v].push(u);
                queue.push_back(u);
            }
        }
    }
    if order.len() != n {
        return Err(Error::NotATree("graph is not connected".into()));
    }
    Ok(RootedTree { root, parent, children, order })
}

/// Per-vertex table of the three dynamic-programming states, plus the
/// child selections needed to reconstruct a witness.
#[derive(Debug, Clone)]
pub struct DpTable {
    pub out: Vec<Option<usize>>,
    pub in_without_parent: Vec<Option<usize>>,
    pub in_with_parent: Vec<Option<usize>>,
    chosen_without_parent: Vec<Vec<usize>>,
    chosen_with_parent: Vec<Vec<usize>>,
    /// For the `out` state: the best child and whether the alliance is
    /// headed there (`true`) or lies deeper (`false`).
    best_out: Vec<Option<(usize, bool)>>,
}

/// Fills the table bottom-up. A state is `None` whenever a required child
/// slot would take a `None` value; the leaf rows are `(Some(0), None,
/// None)`, which the required-count formulas reproduce uniformly.
pub fn compute_dp(g: &Graph, t: &RootedTree) -> DpTable {
    let n = g.vertex_count();
    let mut dp = DpTable {
        out: vec![None; n],
        in_without_parent: vec![None; n],
        in_with_parent: vec![None; n],
        chosen_without_parent: vec![Vec::new(); n],
        chosen_with_parent: vec![Vec::new(); n],
        best_out: vec![None; n],
    };
    for &v in t.order.iter().rev() {
        let kids = &t.children[v];
        if kids.is_empty() {
            dp.out[v] = Some(0);
            continue;
        }
        let d = kids.len();

        // State `out`: the alliance lives in exactly one child subtree.
        let mut best: Option<(usize, (usize, bool))> = None;
        for &c in kids {
            for (score, headed) in [(dp.out[c], false), (dp.in_without_parent[c], true)] {
                if let Some(s) = score {
                    if best.is_none_or(|(bs, _)| s > bs) {
                        best = Some((s, (c, headed)));
                    }
                }
            }
        }
        let (score, pick) = best.expect("children always have a finite `out` value");
        dp.out[v] = Some(score);
        dp.best_out[v] = Some(pick);

        // Children ranked by their value when joined under an in-solution
        // parent; ties broken by smaller vertex index.
        let mut ranked: Vec<(usize, usize)> = kids
            .iter()
            .filter_map(|&c| dp.in_with_parent[c].map(|s| (s, c)))
            .collect();
        ranked.sort_unstable_by(|a, b| b.0.cmp(&a.0).then(a.1.cmp(&b.1)));

        let take = |count: usize| -> Option<(usize, Vec<usize>)> {
            (ranked.len() >= count).then(|| {
                let chosen: Vec<usize> = ranked[..count].iter().map(|&(_, c)| c).collect();
                (1 + ranked[..count].iter().map(|&(s, _)| s).sum::<usize>(), chosen)
            })
        };

        if v != t.root {
            // ceil((d - 2) / 2), which clamps to zero for d <= 2.
            let need = (d - 1) / 2;
            if let Some((score, chosen)) = take(need) {
                dp.in_with_parent[v] = Some(score);
                dp.chosen_with_parent[v] = chosen;
            }
        }
        let need = if v == t.root { d / 2 } else { d.div_ceil(2) };
        if let Some((score, chosen)) = take(need) {
            dp.in_without_parent[v] = Some(score);
            dp.chosen_without_parent[v] = chosen;
        }
    }
    dp
}

/// Maximum globally minimal defensive alliance on a tree, reported only
/// when its size reaches `k_min`. The reconstructed witness is re-checked
/// against the all-marginal certificate before being returned.
pub fn solve_tree(g: &Graph, k_min: usize) -> Result<SolveResult> {
    if k_min < 2 {
        return Err(Error::InvalidInstance("k_min must be at least 2".into()));
    }
    let t = root_tree(g)?;
    let dp = compute_dp(g, &t);
    let at_root = dp.in_without_parent[t.root];
    let below = dp.out[t.root];
    let answer = at_root.max(below).unwrap_or(0);
    if answer < k_min {
        return Ok(SolveResult::none());
    }

    // Walk down `out` pointers to the vertex heading the alliance.
    let mut head = t.root;
    if at_root != Some(answer) {
        loop {
            let (child, headed) =
                dp.best_out[head].expect("a positive `out` score always records a child");
            head = child;
            if headed {
                break;
            }
        }
    }

    let mut members = Vec::with_capacity(answer);
    let mut stack = vec![(head, false)];
    while let Some((v, with_parent)) = stack.pop() {
        members.push(v);
        let chosen = if with_parent {
            &dp.chosen_with_parent[v]
        } else {
            &dp.chosen_without_parent[v]
        };
        for &c in chosen {
            stack.push((c, true));
        }
    }
    let witness = VertexSet::new(members);
    if witness.len() != answer {
        return Err(Error::Internal(format!(
            "reconstructed witness has size {}, table says {answer}",
            witness.len()
        )));
    }
    if !certify_sufficient_minimality(g, &witness)? {
        return Err(Error::Internal(
            "tree witness failed the marginality certificate".into(),
        ));
    }
    Ok(SolveResult::found(witness))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::max_gmda_bruteforce;
    use crate::fixtures::{cycle, path, spider26, star};
    use crate::graph::degree_in;
    use crate::Limits;
    use rand::prelude::*;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn rooting_rejects_non_trees() {
        assert!(root_tree(&cycle(5)).is_err());
        // Two components: a triangle plus an isolated path keeps m = n - 1.
        let g = Graph::from_edges(5, &[(0, 1), (1, 2), (0, 2), (3, 4)]).unwrap();
        assert!(root_tree(&g).is_err());
    }

    #[test]
    fn rooting_builds_parent_arrays() {
        let t = root_tree(&path(3)).unwrap();
        assert_eq!(t.root, 0);
        assert_eq!(t.parent, vec![None, Some(0), Some(1)]);

        let t = root_tree(&spider26()).unwrap();
        assert_eq!(t.children[0], vec![1, 2, 3, 4, 5]);
        assert_eq!(t.children[1], vec![6, 7]);
    }

    #[test]
    fn leaf_rows_and_interior_values() {
        let g = spider26();
        let t = root_tree(&g).unwrap();
        let dp = compute_dp(&g, &t);
        // Leaves.
        assert_eq!(dp.out[25], Some(0));
        assert_eq!(dp.in_without_parent[25], None);
        assert_eq!(dp.in_with_parent[25], None);
        // A middle vertex with two children needs no child support when
        // its parent is in the solution.
        assert_eq!(dp.in_with_parent[1], Some(1));
        // The root needs floor(5 / 2) = 2 of its children.
        assert_eq!(dp.in_without_parent[0], Some(3));
    }

    #[test]
    fn solves_small_trees() {
        let res = solve_tree(&spider26(), 2).unwrap();
        assert_eq!(res.size(), 3);

        let res = solve_tree(&path(4), 2).unwrap();
        assert_eq!(res.witness.unwrap().members(), &[1, 2]);

        assert!(!solve_tree(&star(5), 2).unwrap().is_found());
        assert!(!solve_tree(&path(2), 2).unwrap().is_found());
        assert!(solve_tree(&cycle(4), 2).is_err());
    }

    #[test]
    fn matches_bruteforce_on_random_trees() {
        let mut rng = ChaCha8Rng::seed_from_u64(41);
        for _ in 0..60 {
            let n = rng.gen_range(2..=12);
            let g = crate::gen::random_tree(n, rng.gen());
            let dp = solve_tree(&g, 2).unwrap();
            let brute = max_gmda_bruteforce(&g, 2, &Limits::default()).unwrap();
            assert_eq!(dp.size(), brute.size(), "tree: {:?}", g.edges());
            assert_eq!(dp.is_found(), brute.is_found());
        }
    }

    #[test]
    fn witness_child_counts_match_marginality() {
        let mut rng = ChaCha8Rng::seed_from_u64(42);
        for _ in 0..40 {
            let n = rng.gen_range(2..=40);
            let g = crate::gen::random_tree(n, rng.gen());
            let res = solve_tree(&g, 2).unwrap();
            let Some(w) = res.witness else { continue };
            let t = root_tree(&g).unwrap();
            for v in w.iter() {
                let parent_in = t.parent[v].is_some_and(|p| w.contains(p));
                let children_in = t.children[v].iter().filter(|&&c| w.contains(c)).count();
                assert_eq!(
                    children_in,
                    g.degree(v) / 2 - usize::from(parent_in),
                    "vertex {v}"
                );
                assert_eq!(degree_in(&g, &w, v), g.degree(v) / 2);
            }
        }
    }

    #[test]
    fn answer_is_root_independent() {
        let mut rng = ChaCha8Rng::seed_from_u64(43);
        for _ in 0..25 {
            let n = rng.gen_range(2..=14);
            let g = crate::gen::random_tree(n, rng.gen());
            let base = solve_tree(&g, 2).unwrap();
            // Relabel so that a random vertex becomes the root (vertex 0).
            let x = rng.gen_range(0..n);
            let relabel = |v: usize| if v == 0 { x } else if v == x { 0 } else { v };
            let edges: Vec<_> = g
                .edges()
                .iter()
                .map(|&(u, v)| (relabel(u), relabel(v)))
                .collect();
            let h = Graph::from_edges(n, &edges).unwrap();
            assert_eq!(solve_tree(&h, 2).unwrap().size(), base.size());
        }
    }
}
