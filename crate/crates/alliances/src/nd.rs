//! Solver driven by neighbourhood-diversity type classes.
//!
//! Vertices of one type class are interchangeable, so a candidate set is
//! described by the count vector `x` with `x_i = |C_i ∩ S|`. The class
//! alliance test evaluates, per inhabited class `C_j`,
//!
//! * independent `C_j`: `1 + 2 * Σ_{C_i ∈ N_H(C_j)} x_i  >=  Σ_{C_i ∈ N_H(C_j)} n_i`,
//! * clique `C_j`:      `2 * Σ_{C_i ∈ N_H[C_j]} x_i  >=  Σ_{C_i ∈ N_H[C_j]} n_i`,
//!
//! where `H` is the type graph. Global minimality only needs the reduced
//! family `L'(x)` of vectors with entries in `{0, x_i - 1, x_i}`: if no
//! vector of `L'(x)` forms an alliance, no componentwise-smaller vector at
//! all does. Lowering an entry never increases any member's in-set degree,
//! so an unprotected vertex stays unprotected under the rounding that maps
//! an arbitrary smaller vector into `L'(x)`.
//!
//! The optimum is found by branch-and-bound over count vectors directly
//! (classes ordered by decreasing size, upper bound = current sum plus
//! remaining capacities); that searches the same constraint system the
//! integer-programming formulation would, with identical outcomes, and
//! keeps the witness construction elementary.

use crate::alliance::is_globally_minimal_within;
use crate::diversity::{build_type_graph, compute_type_partition, ClassKind, TypeGraph, TypePartition};
use crate::exact::SolveResult;
use crate::graph::{Graph, VertexSet};
use crate::{Error, Limits, Result};

/// True iff the non-zero count vector `y` describes a defensive alliance.
/// The all-zero vector is not an alliance.
pub fn class_da_check(tg: &TypeGraph, y: &[usize]) -> Result<bool> {
    validate_counts(tg, y)?;
    if y.iter().all(|&c| c == 0) {
        return Ok(false);
    }
    Ok((0..tg.class_count()).all(|j| y[j] == 0 || class_protected(tg, y, j)))
}

fn class_protected(tg: &TypeGraph, y: &[usize], j: usize) -> bool {
    let sum_y: usize = tg.adj[j].iter().map(|&i| y[i]).sum();
    let sum_n: usize = tg.adj[j].iter().map(|&i| tg.sizes[i]).sum();
    match tg.kinds[j] {
        ClassKind::Independent => 1 + 2 * sum_y >= sum_n,
        ClassKind::Clique => 2 * (y[j] + sum_y) >= tg.sizes[j] + sum_n,
    }
}

fn validate_counts(tg: &TypeGraph, y: &[usize]) -> Result<()> {
    if y.len() != tg.class_count() {
        return Err(Error::InvalidInstance(format!(
            "count vector has length {}, expected {}",
            y.len(),
            tg.class_count()
        )));
    }
    for (i, (&c, &n)) in y.iter().zip(&tg.sizes).enumerate() {
        if c > n {
            return Err(Error::InvalidInstance(format!(
                "count {c} exceeds size {n} of class {i}"
            )));
        }
    }
    Ok(())
}

/// True iff no vector of `L'(x) \ {x, 0}` is an alliance, which by the
/// reduction above means no proper sub-vector of `x` at all is one, i.e.
/// every materialization of `x` is globally minimal. Requires `x` itself
/// to pass [`class_da_check`].
pub fn class_minimality_check(tg: &TypeGraph, x: &[usize]) -> Result<bool> {
    if !class_da_check(tg, x)? {
        return Err(Error::InvalidInstance(
            "minimality check requires an alliance vector".into(),
        ));
    }
    let mut z = vec![0usize; x.len()];
    Ok(!scan_reduced(tg, x, &mut z, 0, true, false))
}

/// Depth-first scan of `L'(x)`; true iff some member other than `x` and
/// `0` passes the alliance test. Entries `x_i - 1` collapse onto `0` when
/// `x_i = 1`; the duplicate is skipped.
fn scan_reduced(
    tg: &TypeGraph,
    x: &[usize],
    z: &mut Vec<usize>,
    depth: usize,
    all_kept: bool,
    any_nonzero: bool,
) -> bool {
    if depth == x.len() {
        if all_kept || !any_nonzero {
            return false;
        }
        return class_da_check(tg, z).expect("scan vectors stay within bounds");
    }
    let mut options: Vec<usize> = vec![x[depth]];
    if x[depth] >= 2 {
        options.push(x[depth] - 1);
    }
    if x[depth] >= 1 {
        options.push(0);
    }
    for v in options {
        z[depth] = v;
        if scan_reduced(
            tg,
            x,
            z,
            depth + 1,
            all_kept && v == x[depth],
            any_nonzero || v > 0,
        ) {
            return true;
        }
    }
    false
}

/// Deterministic set with exactly `x_i` members per class, using the
/// lowest vertex indices of each class.
pub fn materialize_witness(p: &TypePartition, x: &[usize]) -> Result<VertexSet> {
    if x.len() != p.class_count() {
        return Err(Error::InvalidInstance(format!(
            "count vector has length {}, expected {}",
            x.len(),
            p.class_count()
        )));
    }
    let mut members = Vec::new();
    for (class, &count) in p.classes.iter().zip(x) {
        if count > class.len() {
            return Err(Error::InvalidInstance(format!(
                "count {count} exceeds class of size {}",
                class.len()
            )));
        }
        members.extend_from_slice(&class[..count]);
    }
    if members.is_empty() {
        return Err(Error::EmptySet);
    }
    Ok(VertexSet::new(members))
}

/// Result of the class-level search: the usual outcome plus the winning
/// count vector and how the witness was verified.
#[derive(Debug, Clone)]
pub struct NdResult {
    pub result: SolveResult,
    pub counts: Option<Vec<usize>>,
    /// True when the witness was re-verified by subset enumeration; false
    /// when its size made the class-level certificates the only check.
    pub enumerated: bool,
}

/// Maximum globally minimal defensive alliance via the type-class search.
pub fn solve_nd(g: &Graph, k_min: usize, limits: &Limits) -> Result<NdResult> {
    let p = compute_type_partition(g)?;
    let tg = build_type_graph(g, &p)?;
    solve_nd_with_partition(g, &p, &tg, k_min, limits)
}

/// As [`solve_nd`] but with a caller-supplied partition and type graph.
pub fn solve_nd_with_partition(
    g: &Graph,
    p: &TypePartition,
    tg: &TypeGraph,
    k_min: usize,
    limits: &Limits,
) -> Result<NdResult> {
    if k_min < 2 {
        return Err(Error::InvalidInstance("k_min must be at least 2".into()));
    }
    let k = tg.class_count();
    if k > limits.nd_classes {
        return Err(Error::Capacity {
            what: "neighbourhood-diversity class count",
            limit: limits.nd_classes,
            actual: k,
        });
    }

    // Classes in decreasing-size order; the bound below adds the unspent
    // class capacities, which never underestimates the best completion.
    let mut order: Vec<usize> = (0..k).collect();
    order.sort_unstable_by_key(|&i| (std::cmp::Reverse(tg.sizes[i]), i));
    let suffix_cap: Vec<usize> = {
        let mut acc = vec![0; k + 1];
        for d in (0..k).rev() {
            acc[d] = acc[d + 1] + tg.sizes[order[d]];
        }
        acc
    };

    let mut search = Search { tg, order, suffix_cap, k_min, best: None };
    let mut x = vec![0usize; k];
    search.descend(&mut x, 0, 0)?;

    let Some((_, counts)) = search.best else {
        return Ok(NdResult { result: SolveResult::none(), counts: None, enumerated: false });
    };
    let witness = materialize_witness(p, &counts)?;
    let enumerated = witness.len() <= limits.subset_members;
    if enumerated && !is_globally_minimal_within(g, &witness, limits.subset_members)? {
        return Err(Error::Internal(
            "class-level optimum failed vertex-level minimality".into(),
        ));
    }
    Ok(NdResult {
        result: SolveResult::found(witness),
        counts: Some(counts),
        enumerated,
    })
}

struct Search<'a> {
    tg: &'a TypeGraph,
    order: Vec<usize>,
    suffix_cap: Vec<usize>,
    k_min: usize,
    best: Option<(usize, Vec<usize>)>,
}

impl Search<'_> {
    fn descend(&mut self, x: &mut Vec<usize>, depth: usize, sum: usize) -> Result<()> {
        let floor = self.best.as_ref().map_or(self.k_min - 1, |&(s, _)| s);
        if sum + self.suffix_cap[depth] <= floor {
            return Ok(());
        }
        if depth == self.order.len() {
            if class_da_check(self.tg, x)? && class_minimality_check(self.tg, x)? {
                self.best = Some((sum, x.clone()));
            }
            return Ok(());
        }
        let class = self.order[depth];
        for value in (0..=self.tg.sizes[class]).rev() {
            x[class] = value;
            self.descend(x, depth + 1, sum + value)?;
        }
        x[class] = 0;
        Ok(())
    }
}
