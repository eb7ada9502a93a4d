//! Exponential-time exact solvers. These act as standalone oracles on
//! small instances and as ground truth for the tree and
//! neighbourhood-diversity solvers and for reduction verification.
//!
//! Both searches enumerate connected candidate sets only and skip vertices
//! of degree one: a globally minimal defensive alliance of size at least
//! two is connected and contains no degree-one vertex. Candidate sets are
//! then screened with the full minimality test.

use crate::alliance::{connected_subsets, is_defensive_alliance, is_globally_minimal_within};
use crate::graph::{Graph, VertexSet};
use crate::weighted::{Orientation, WeightedGraph};
use crate::{Error, Limits, Result};

/// Outcome of an exact search.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SolveResult {
    pub witness: Option<VertexSet>,
}

impl SolveResult {
    pub fn none() -> SolveResult {
        SolveResult { witness: None }
    }

    pub fn found(witness: VertexSet) -> SolveResult {
        SolveResult { witness: Some(witness) }
    }

    pub fn is_found(&self) -> bool {
        self.witness.is_some()
    }

    pub fn size(&self) -> usize {
        self.witness.as_ref().map_or(0, VertexSet::len)
    }
}

/// Maximum-cardinality globally minimal defensive alliance of size at
/// least `k_min`, or none. Ties are broken by the lexicographically
/// smallest member list.
pub fn max_gmda_bruteforce(g: &Graph, k_min: usize, limits: &Limits) -> Result<SolveResult> {
    if k_min < 2 {
        return Err(Error::InvalidInstance("k_min must be at least 2".into()));
    }
    let universe: Vec<usize> = (0..g.vertex_count()).filter(|&v| g.degree(v) >= 2).collect();
    search_max(g, &universe, k_min, None, limits)
}

/// Whether some globally minimal defensive alliance (of any size, the
/// singleton included) contains `r`; reports a maximum one when it exists.
///
/// All degree-one vertices except `r` itself are pruned; `r` is kept for
/// the singleton case, which applies exactly when `deg(r) <= 1`.
pub fn rooted_exists_bruteforce(g: &Graph, r: usize, limits: &Limits) -> Result<SolveResult> {
    if r >= g.vertex_count() {
        return Err(Error::InvalidVertex { v: r, n: g.vertex_count() });
    }
    if g.degree(r) <= 1 {
        return Ok(SolveResult::found(VertexSet::new([r])));
    }
    let universe: Vec<usize> = (0..g.vertex_count())
        .filter(|&v| v == r || g.degree(v) >= 2)
        .collect();
    search_max(g, &universe, 2, Some(&VertexSet::new([r])), limits)
}

/// Maximum globally minimal defensive alliance that contains every
/// necessary vertex, avoids every forbidden vertex, and has size at least
/// `k_min`. Forbidden vertices must all have degree one.
pub fn annotated_max_gmda(
    g: &Graph,
    necessary: &VertexSet,
    forbidden: &VertexSet,
    k_min: usize,
    limits: &Limits,
) -> Result<SolveResult> {
    if k_min < 2 {
        return Err(Error::InvalidInstance("k_min must be at least 2".into()));
    }
    necessary.validate(g)?;
    forbidden.validate(g)?;
    for v in forbidden.iter() {
        if g.degree(v) != 1 {
            return Err(Error::InvalidInstance(format!(
                "forbidden vertex {v} has degree {}, expected 1",
                g.degree(v)
            )));
        }
        if necessary.contains(v) {
            return Err(Error::InvalidInstance(format!(
                "vertex {v} is both necessary and forbidden"
            )));
        }
    }
    let universe: Vec<usize> = (0..g.vertex_count())
        .filter(|&v| g.degree(v) >= 2 && !forbidden.contains(v))
        .collect();
    // A necessary vertex outside the live universe can never appear in a
    // solution of size >= 2.
    if necessary.iter().any(|v| !universe.contains(&v)) {
        return Ok(SolveResult::none());
    }
    search_max(g, &universe, k_min, Some(necessary), limits)
}

fn search_max(
    g: &Graph,
    universe: &[usize],
    k_min: usize,
    required: Option<&VertexSet>,
    limits: &Limits,
) -> Result<SolveResult> {
    if universe.len() > limits.brute_vertices {
        return Err(Error::Capacity {
            what: "brute-force vertex enumeration",
            limit: limits.brute_vertices,
            actual: universe.len(),
        });
    }
    let mut best: Option<VertexSet> = None;
    let mut deferred: Result<()> = Ok(());
    connected_subsets(g, universe, &mut |subset| {
        if subset.len() < k_min {
            return true;
        }
        if let Some(req) = required {
            if !req.iter().all(|v| subset.contains(&v)) {
                return true;
            }
        }
        let cand = VertexSet::new(subset.iter().copied());
        match keep_if_better(g, cand, &best, limits) {
            Ok(Some(better)) => best = Some(better),
            Ok(None) => {}
            Err(e) => {
                deferred = Err(e);
                return false;
            }
        }
        true
    });
    deferred?;
    Ok(SolveResult { witness: best })
}

fn keep_if_better(
    g: &Graph,
    cand: VertexSet,
    best: &Option<VertexSet>,
    limits: &Limits,
) -> Result<Option<VertexSet>> {
    let better = match best {
        Some(b) => {
            cand.len() > b.len() || (cand.len() == b.len() && cand.members() < b.members())
        }
        None => true,
    };
    if !better || !is_defensive_alliance(g, &cand)? {
        return Ok(None);
    }
    if !is_globally_minimal_within(g, &cand, limits.subset_members)? {
        return Ok(None);
    }
    Ok(Some(cand))
}

/// Finds an orientation with every weighted outdegree at most `r`, or
/// none, by enumerating all `2^m` orientations. The first feasible
/// orientation in mask order is returned (mask 0 directs every stored
/// edge `u -> v`), so the result is deterministic.
pub fn mmo_bruteforce(gw: &WeightedGraph, r: u64, limits: &Limits) -> Result<Option<Orientation>> {
    let m = gw.edge_count();
    if m > limits.mmo_edges {
        return Err(Error::Capacity {
            what: "orientation enumeration",
            limit: limits.mmo_edges,
            actual: m,
        });
    }
    let mut out = vec![0u64; gw.vertex_count()];
    for mask in 0u64..(1 << m) {
        out.iter_mut().for_each(|o| *o = 0);
        for (i, &(u, v, w)) in gw.edges().iter().enumerate() {
            if mask >> i & 1 == 0 {
                out[u] += w;
            } else {
                out[v] += w;
            }
        }
        if out.iter().all(|&o| o <= r) {
            let forward = (0..m).map(|i| mask >> i & 1 == 0).collect();
            return Ok(Some(Orientation { forward }));
        }
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::alliance::is_globally_minimal;
    use crate::fixtures::{complete, cycle, spider26, star};
    use crate::graph::parse_graph;

    fn limits() -> Limits {
        Limits::default()
    }

    #[test]
    fn c5_maximum_is_an_adjacent_pair() {
        let res = max_gmda_bruteforce(&cycle(5), 2, &limits()).unwrap();
        assert_eq!(res.size(), 2);
        assert_eq!(res.witness.unwrap().members(), &[0, 1]);
    }

    #[test]
    fn spider_maximum_has_size_three() {
        let g = spider26();
        let res = max_gmda_bruteforce(&g, 2, &limits()).unwrap();
        assert_eq!(res.size(), 3);
        let w = res.witness.unwrap();
        assert!(is_globally_minimal(&g, &w).unwrap());
    }

    #[test]
    fn k4_has_no_minimal_alliance_of_size_three() {
        let res = max_gmda_bruteforce(&complete(4), 3, &limits()).unwrap();
        assert!(!res.is_found());
    }

    #[test]
    fn found_witnesses_check_out() {
        for g in [cycle(5), cycle(6), complete(4), complete(5), spider26()] {
            let res = max_gmda_bruteforce(&g, 2, &limits()).unwrap();
            if let Some(w) = res.witness {
                assert!(w.len() >= 2);
                assert!(is_globally_minimal(&g, &w).unwrap());
            }
        }
    }

    #[test]
    fn rooted_cases() {
        let k13 = star(3);
        let leaf = rooted_exists_bruteforce(&k13, 1, &limits()).unwrap();
        assert_eq!(leaf.witness.unwrap().members(), &[1]);
        let center = rooted_exists_bruteforce(&k13, 0, &limits()).unwrap();
        assert!(!center.is_found());

        for r in 0..5 {
            let res = rooted_exists_bruteforce(&cycle(5), r, &limits()).unwrap();
            assert_eq!(res.size(), 2);
            assert!(res.witness.unwrap().contains(r));
        }

        assert!(rooted_exists_bruteforce(&cycle(5), 9, &limits()).is_err());
    }

    #[test]
    fn annotated_degenerate_matches_plain() {
        let g = cycle(5);
        let empty = VertexSet::new([]);
        let plain = max_gmda_bruteforce(&g, 2, &limits()).unwrap();
        let annotated = annotated_max_gmda(&g, &empty, &empty, 2, &limits()).unwrap();
        assert_eq!(plain, annotated);
    }

    #[test]
    fn forbidden_pendant_changes_nothing() {
        // C5 plus a pendant on vertex 0; the pendant is vertex 5.
        let g = parse_graph("6 6\n0 1\n1 2\n2 3\n3 4\n4 0\n0 5").unwrap();
        let res = annotated_max_gmda(
            &g,
            &VertexSet::new([]),
            &VertexSet::new([5]),
            2,
            &limits(),
        )
        .unwrap();
        let base = max_gmda_bruteforce(&cycle(5), 2, &limits()).unwrap();
        assert_eq!(res.size(), base.size());
    }

    #[test]
    fn necessary_path_in_c5_is_infeasible() {
        let res = annotated_max_gmda(
            &cycle(5),
            &VertexSet::new([0, 1, 2]),
            &VertexSet::new([]),
            2,
            &limits(),
        )
        .unwrap();
        assert!(!res.is_found());
    }

    #[test]
    fn annotation_preconditions() {
        let g = cycle(5);
        // Forbidden vertex of degree 2.
        assert!(annotated_max_gmda(
            &g,
            &VertexSet::new([]),
            &VertexSet::new([0]),
            2,
            &limits()
        )
        .is_err());
        // Overlap between necessary and forbidden.
        let h = parse_graph("6 6\n0 1\n1 2\n2 3\n3 4\n4 0\n0 5").unwrap();
        assert!(annotated_max_gmda(
            &h,
            &VertexSet::new([5]),
            &VertexSet::new([5]),
            2,
            &limits()
        )
        .is_err());
    }

    #[test]
    fn capacity_guard_trips() {
        let g = cycle(25);
        assert!(matches!(
            max_gmda_bruteforce(&g, 2, &limits()),
            Err(Error::Capacity { .. })
        ));
    }

    #[test]
    fn mmo_small_cases() {
        let tri = WeightedGraph::new(3, &[(0, 1, 1), (1, 2, 1), (0, 2, 1)]).unwrap();
        let o = mmo_bruteforce(&tri, 1, &limits()).unwrap().unwrap();
        assert_eq!(o.max_weighted_outdegree(&tri), 1);

        let edge = WeightedGraph::new(2, &[(0, 1, 3)]).unwrap();
        assert!(mmo_bruteforce(&edge, 2, &limits()).unwrap().is_none());
    }

    #[test]
    fn mmo_worked_instance_orientation() {
        // a=0, b=1, c=2, d=3 with ab=1, ad=1, bc=2, cd=2; r=2 admits the
        // orientation a->b, a->d, b->c, c->d.
        let gw = WeightedGraph::new(4, &[(0, 1, 1), (0, 3, 1), (1, 2, 2), (2, 3, 2)]).unwrap();
        let o = mmo_bruteforce(&gw, 2, &limits()).unwrap().unwrap();
        assert_eq!(
            o.arcs(&gw),
            vec![(0, 1, 1), (0, 3, 1), (1, 2, 2), (2, 3, 2)]
        );
    }

    #[test]
    fn mmo_feasibility_is_monotone_in_r() {
        use rand::prelude::*;
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(31);
        for _ in 0..40 {
            let n = rng.gen_range(2..=5);
            let mut edges = Vec::new();
            for u in 0..n {
                for v in u + 1..n {
                    if rng.gen_bool(0.5) {
                        edges.push((u, v, rng.gen_range(1..=3)));
                    }
                }
            }
            let gw = WeightedGraph::new(n, &edges).unwrap();
            for r in 0..6 {
                let yes_r = mmo_bruteforce(&gw, r, &limits()).unwrap().is_some();
                let yes_r1 = mmo_bruteforce(&gw, r + 1, &limits()).unwrap().is_some();
                assert!(!yes_r || yes_r1);
            }
        }
    }
}
