//! Defensive-alliance predicates: protection status, the alliance test,
//! local and global minimality, and the all-marginal certificate.
//!
//! Throughout, `d_S(v)` counts neighbours of `v` inside the candidate set
//! `S` and `d_{S^c}(v)` those outside; `v` is protected when
//! `d_S(v) + 1 >= d_{S^c}(v)`.

use crate::graph::{degree_in, is_connected_induced, Graph, VertexSet};
use crate::{Error, Limits, Result};

/// Protection level of a member vertex.
///
/// Moving one in-set neighbour out of `S` changes the inequality by the
/// same amount regardless of which neighbour moves, so "some removal
/// breaks protection" and "every removal breaks protection" coincide:
/// a protected vertex with `d_S(v) >= 1` is marginal exactly when
/// `d_S(v) <= d_{S^c}(v)`. Protected vertices with no in-set neighbour
/// are classified strong (the removal case is vacuous).
#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize)]
#[serde(rename_all = "lowercase")]
pub enum ProtectionStatus {
    Unprotected,
    Marginal,
    Strong,
}

/// Protection status of `v` as a member of `s`.
pub fn protection_status(g: &Graph, s: &VertexSet, v: usize) -> Result<ProtectionStatus> {
    s.validate(g)?;
    if !s.contains(v) {
        return Err(Error::NotInSet(v));
    }
    let d_in = degree_in(g, s, v);
    let d_out = g.degree(v) - d_in;
    Ok(if d_in + 1 < d_out {
        ProtectionStatus::Unprotected
    } else if d_in >= 1 && d_in <= d_out {
        ProtectionStatus::Marginal
    } else {
        ProtectionStatus::Strong
    })
}

/// Per-vertex protection summary for a candidate set.
#[derive(Debug, Clone)]
pub struct ProtectionReport {
    /// `(vertex, status)` in ascending vertex order.
    pub statuses: Vec<(usize, ProtectionStatus)>,
    pub connected: bool,
    pub is_alliance: bool,
}

pub fn protection_report(g: &Graph, s: &VertexSet) -> Result<ProtectionReport> {
    let statuses: Vec<_> = s
        .iter()
        .map(|v| protection_status(g, s, v).map(|st| (v, st)))
        .collect::<Result<_>>()?;
    if statuses.is_empty() {
        return Err(Error::EmptySet);
    }
    let is_alliance = statuses
        .iter()
        .all(|&(_, st)| st != ProtectionStatus::Unprotected);
    Ok(ProtectionReport {
        connected: is_connected_induced(g, s)?,
        statuses,
        is_alliance,
    })
}

/// True iff every member of `s` is protected. Alliances are non-empty by
/// definition; the empty set is an error.
pub fn is_defensive_alliance(g: &Graph, s: &VertexSet) -> Result<bool> {
    s.validate(g)?;
    if s.is_empty() {
        return Err(Error::EmptySet);
    }
    Ok(s.iter().all(|v| {
        let d_in = degree_in(g, s, v);
        d_in + 1 >= g.degree(v) - d_in
    }))
}

/// True iff `s` is a defensive alliance and removing any single vertex
/// destroys the alliance property. Singleton alliances are locally minimal.
pub fn is_locally_minimal(g: &Graph, s: &VertexSet) -> Result<bool> {
    if !is_defensive_alliance(g, s)? {
        return Ok(false);
    }
    if s.len() == 1 {
        return Ok(true);
    }
    for v in s.iter() {
        if is_defensive_alliance(g, &s.without(v))? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// True iff `s` is a defensive alliance and no non-empty proper subset of
/// `s` is one. Uses the default enumeration guard; see
/// [`is_globally_minimal_within`].
pub fn is_globally_minimal(g: &Graph, s: &VertexSet) -> Result<bool> {
    is_globally_minimal_within(g, s, Limits::default().subset_members)
}

/// Global-minimality test with an explicit guard on `|s|`.
///
/// Only connected subsets of `G[s]` are enumerated: every connected
/// component of an alliance's induced subgraph is itself an alliance, so an
/// alliance subset exists iff a connected one does. (That fact is
/// exercised by a property test rather than taken on faith.)
pub fn is_globally_minimal_within(g: &Graph, s: &VertexSet, guard: usize) -> Result<bool> {
    if !is_defensive_alliance(g, s)? {
        return Ok(false);
    }
    if s.len() > guard {
        return Err(Error::Capacity {
            what: "minimality subset enumeration",
            limit: guard,
            actual: s.len(),
        });
    }
    Ok(!has_proper_alliance_subset(g, s))
}

/// True iff some non-empty proper subset of `s` is a defensive alliance.
fn has_proper_alliance_subset(g: &Graph, s: &VertexSet) -> bool {
    let members = s.members();
    let mut found = false;
    connected_subsets(g, members, &mut |subset| {
        if subset.len() == members.len() {
            return true; // not a proper subset
        }
        let t = VertexSet::new(subset.iter().copied());
        if is_defensive_alliance(g, &t).unwrap_or(false) {
            found = true;
            return false; // stop early
        }
        true
    });
    found
}

/// Enumerates every non-empty subset of `universe` that induces a
/// connected subgraph of `g`, each exactly once, by canonical growth: a
/// set is grown only through neighbours that come after its anchor
/// (smallest) vertex, and each extension candidate is branched on at most
/// once. `visit` returns `false` to abort the enumeration.
pub(crate) fn connected_subsets(
    g: &Graph,
    universe: &[usize],
    visit: &mut impl FnMut(&[usize]) -> bool,
) {
    let mut in_universe = vec![false; g.vertex_count()];
    for &v in universe {
        in_universe[v] = true;
    }
    let mut current = Vec::new();
    let mut blocked = vec![false; g.vertex_count()];
    let mut in_current = vec![false; g.vertex_count()];

    fn extend(
        g: &Graph,
        anchor: usize,
        in_universe: &[bool],
        current: &mut Vec<usize>,
        in_current: &mut [bool],
        blocked: &mut [bool],
        visit: &mut impl FnMut(&[usize]) -> bool,
    ) -> bool {
        if !visit(current) {
            return false;
        }
        // Frontier: universe neighbours of the current set, above the
        // anchor, neither chosen nor excluded on this path.
        let mut frontier = Vec::new();
        for &v in current.iter() {
            for &u in g.neighbors(v) {
                if u > anchor
                    && in_universe[u]
                    && !in_current[u]
                    && !blocked[u]
                    && !frontier.contains(&u)
                {
                    frontier.push(u);
                }
            }
        }
        frontier.sort_unstable();
        for (i, &u) in frontier.iter().enumerate() {
            current.push(u);
            in_current[u] = true;
            let alive = extend(g, anchor, in_universe, current, in_current, blocked, visit);
            in_current[u] = false;
            current.pop();
            blocked[u] = true;
            if !alive {
                // Unblock before unwinding so outer levels stay consistent.
                for &w in &frontier[..=i] {
                    blocked[w] = false;
                }
                return false;
            }
        }
        for &u in &frontier {
            blocked[u] = false;
        }
        true
    }

    for &anchor in universe {
        current.push(anchor);
        in_current[anchor] = true;
        let alive = extend(
            g,
            anchor,
            &in_universe,
            &mut current,
            &mut in_current,
            &mut blocked,
            visit,
        );
        in_current[anchor] = false;
        current.pop();
        if !alive {
            return;
        }
    }
}

/// One-directional certificate: true iff `G[s]` is connected and every
/// member is marginally protected, which implies global minimality. The
/// converse fails in general (a globally minimal alliance may contain
/// strongly protected vertices).
pub fn certify_sufficient_minimality(g: &Graph, s: &VertexSet) -> Result<bool> {
    s.validate(g)?;
    if s.is_empty() {
        return Err(Error::EmptySet);
    }
    for v in s.iter() {
        if protection_status(g, s, v)? != ProtectionStatus::Marginal {
            return Ok(false);
        }
    }
    is_connected_induced(g, s)
}
