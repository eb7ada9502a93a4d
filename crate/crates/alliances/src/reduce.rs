//! Hardness-gadget constructions with exact size accounting, forward
//! witness lifting, and backward solution extraction.
//!
//! Two families are generated:
//!
//! * a reduction from clique on `s`-regular graphs to the rooted
//!   minimal-alliance question, and
//! * a three-step chain from minimum-maximum-outdegree orientation to the
//!   plain maximum-minimal-alliance question, via the annotated variants
//!   with necessary vertices (`FN`) and with degree-one forbidden vertices
//!   (`F`).
//!
//! All gadget vertices are numbered deterministically (original vertices
//! keep their indices, gadget vertices are appended in a fixed role
//! order), and every non-original vertex is filed under exactly one role
//! key, so regenerating an instance is byte-identical and solutions can be
//! mapped back through the role tables alone.

use std::collections::BTreeMap;

use crate::alliance::is_defensive_alliance;
use crate::graph::{Graph, VertexSet};
use crate::weighted::{Orientation, WeightedGraph};
use crate::{Error, Result};

pub type Roles = BTreeMap<String, Vec<usize>>;

/// An alliance instance with necessary vertices (must be inside every
/// solution) and degree-one forbidden vertices (never inside).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AnnotatedInstance {
    pub graph: Graph,
    pub necessary: VertexSet,
    pub forbidden: VertexSet,
    pub k: usize,
    pub roles: Roles,
    /// Vertices `0..original_count` come from the source instance.
    pub original_count: usize,
}

impl AnnotatedInstance {
    /// Checks the structural invariants: disjoint annotations, forbidden
    /// vertices of degree one, and role lists covering every gadget
    /// vertex exactly once.
    pub fn validate(&self) -> Result<()> {
        for v in self.forbidden.iter() {
            if self.graph.degree(v) != 1 {
                return Err(Error::InvalidInstance(format!(
                    "forbidden vertex {v} has degree {}",
                    self.graph.degree(v)
                )));
            }
            if self.necessary.contains(v) {
                return Err(Error::InvalidInstance(format!(
                    "vertex {v} is both necessary and forbidden"
                )));
            }
        }
        let mut covered: Vec<usize> = self.roles.values().flatten().copied().collect();
        covered.sort_unstable();
        let expected: Vec<usize> = (self.original_count..self.graph.vertex_count()).collect();
        if covered != expected {
            return Err(Error::InvalidInstance(
                "role tables do not cover the gadget vertices exactly once".into(),
            ));
        }
        Ok(())
    }
}

/// A rooted minimal-alliance instance produced from a clique question.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RootedInstance {
    pub graph: Graph,
    pub root: usize,
    /// The clique size the source question asks for.
    pub k: usize,
    pub roles: Roles,
    pub original_count: usize,
}

struct GadgetBuilder {
    edges: Vec<(usize, usize)>,
    next: usize,
    roles: Roles,
}

impl GadgetBuilder {
    fn starting_after(n: usize, edges: Vec<(usize, usize)>) -> GadgetBuilder {
        GadgetBuilder { edges, next: n, roles: BTreeMap::new() }
    }

    fn alloc(&mut self, key: String, count: usize) -> Vec<usize> {
        let ids: Vec<usize> = (self.next..self.next + count).collect();
        self.next += count;
        self.roles.insert(key, ids.clone());
        ids
    }

    fn connect(&mut self, u: usize, v: usize) {
        self.edges.push((u, v));
    }

    fn attach_all(&mut self, anchor: usize, vs: &[usize]) {
        for &v in vs {
            self.edges.push((anchor, v));
        }
    }
}

/// Builds the rooted instance for "does this `s`-regular graph contain a
/// `k`-clique": a hub clique of `n - 2k` vertices joined to the root and
/// to every original vertex, `n - 2k` pendants on the root and `n - s - 2`
/// pendants on every original vertex.
pub fn reduce_clique_to_rooted(g: &Graph, k: usize) -> Result<RootedInstance> {
    let n = g.vertex_count();
    if n == 0 {
        return Err(Error::InvalidInstance("empty source graph".into()));
    }
    let s = g.degree(0);
    if (0..n).any(|v| g.degree(v) != s) {
        return Err(Error::InvalidInstance("source graph is not regular".into()));
    }
    if k < 2 {
        return Err(Error::InvalidInstance("clique size must be at least 2".into()));
    }
    if n < 2 * k + 1 {
        return Err(Error::InvalidInstance(format!(
            "need n - 2k >= 1, got n = {n}, k = {k}"
        )));
    }
    if n < s + 2 {
        return Err(Error::InvalidInstance(format!(
            "need n - s - 2 >= 0, got n = {n}, s = {s}"
        )));
    }

    let mut b = GadgetBuilder::starting_after(n, g.edges());
    let root = b.alloc("root".into(), 1)[0];
    let hub = b.alloc("clique".into(), n - 2 * k);
    for (i, &z) in hub.iter().enumerate() {
        b.connect(root, z);
        for &z2 in &hub[i + 1..] {
            b.connect(z, z2);
        }
        for u in 0..n {
            b.connect(z, u);
        }
    }
    let pads = b.alloc("root_forb".into(), n - 2 * k);
    b.attach_all(root, &pads);
    for u in 0..n {
        let pads = b.alloc(format!("vertex_forb({u})"), n - s - 2);
        b.attach_all(u, &pads);
    }
    let graph = Graph::from_edges(b.next, &b.edges)?;
    Ok(RootedInstance { graph, root, k, roles: b.roles, original_count: n })
}

/// Lifts a `k`-clique of the source graph to an alliance of the rooted
/// instance: the clique plus the hub plus the root. Every member ends up
/// marginally protected, so the result is globally minimal and contains
/// the root.
pub fn lift_clique_witness(inst: &RootedInstance, c: &VertexSet) -> Result<VertexSet> {
    if c.len() != inst.k {
        return Err(Error::InvalidInstance(format!(
            "clique has size {}, expected {}",
            c.len(),
            inst.k
        )));
    }
    let members: Vec<usize> = c.iter().collect();
    for (i, &u) in members.iter().enumerate() {
        if u >= inst.original_count {
            return Err(Error::InvalidInstance(format!("{u} is not an original vertex")));
        }
        for &v in &members[i + 1..] {
            if !inst.graph.has_edge(u, v) {
                return Err(Error::InvalidInstance(format!("{u} and {v} are not adjacent")));
            }
        }
    }
    let mut s: Vec<usize> = members;
    s.push(inst.root);
    s.extend_from_slice(&inst.roles["clique"]);
    Ok(VertexSet::new(s))
}

/// All three stages of the orientation-to-alliance chain.
#[derive(Debug, Clone)]
pub struct MmoChain {
    pub source: WeightedGraph,
    pub r: u64,
    /// Stage 1: instance with necessary and forbidden vertices.
    pub fn_instance: AnnotatedInstance,
    /// Stage 2: necessary vertices eliminated, forbidden only.
    pub f_instance: AnnotatedInstance,
    /// Stage 3: the forbidden annotation is dropped without changing the
    /// graph; degree-one vertices can never join a minimal alliance of
    /// size at least two anyway.
    pub plain_graph: Graph,
    pub plain_k: usize,
}

/// Runs the full three-step reduction from an orientation instance.
///
/// Stage 1 encodes each edge `{u, v}` of weight `w` as two pendant vertex
/// chains of `w` selectable elements on either endpoint, linked by
/// `2w - 1` complementary pairs; a pair gadget (one degree-9 hub adjacent
/// to both endpoints, both chain elements, a satellite and four pendants)
/// forces exactly one chain into any solution, which reads off the edge's
/// direction. Selector fans of `2r` pendant-backed vertices per original
/// vertex absorb the outdegree budget.
pub fn reduce_mmo_chain(gw: &WeightedGraph, r: u64) -> Result<MmoChain> {
    if r < 1 {
        return Err(Error::InvalidInstance("outdegree bound r must be at least 1".into()));
    }
    if gw.vertex_count() == 0 {
        return Err(Error::InvalidInstance("empty source graph".into()));
    }
    if !gw.graph().is_connected() {
        // A disconnected source would make the lifted solution
        // disconnected, and no disconnected set is globally minimal.
        return Err(Error::InvalidInstance("source graph must be connected".into()));
    }
    let fn_instance = build_fn_instance(gw, r)?;
    fn_instance.validate()?;
    let f_instance = eliminate_necessary(&fn_instance)?;
    f_instance.validate()?;
    let plain_graph = f_instance.graph.clone();
    let plain_k = f_instance.k;
    Ok(MmoChain { source: gw.clone(), r, fn_instance, f_instance, plain_graph, plain_k })
}

fn build_fn_instance(gw: &WeightedGraph, r: u64) -> Result<AnnotatedInstance> {
    let n = gw.vertex_count();
    let m = gw.edge_count();
    let r_us = r as usize;
    let omega = gw.total_weight() as usize;

    let mut b = GadgetBuilder::starting_after(n, Vec::new());
    let mut necessary: Vec<usize> = (0..n).collect();
    let mut forbidden: Vec<usize> = Vec::new();

    // Selector fans: 2r pendant-backed helpers per original vertex, and
    // the per-vertex pendant pad of size 1 + sum of (2w - 1).
    for v in 0..n {
        let helpers = b.alloc(format!("helpers({v})"), 2 * r_us);
        let pads = b.alloc(format!("helpers_forb({v})"), 2 * r_us);
        b.attach_all(v, &helpers);
        for (&h, &p) in helpers.iter().zip(&pads) {
            b.connect(h, p);
        }
        forbidden.extend_from_slice(&pads);

        let pad_size = 1 + gw
            .edges()
            .iter()
            .filter(|&&(a, c, _)| a == v || c == v)
            .map(|&(_, _, w)| 2 * w as usize - 1)
            .sum::<usize>();
        let pad = b.alloc(format!("vertex_forb({v})"), pad_size);
        b.attach_all(v, &pad);
        forbidden.extend_from_slice(&pad);
    }

    // Edge gadgets.
    for &(u, v, w) in gw.edges() {
        let w = w as usize;
        let link_uv = b.alloc(format!("link({u},{v})"), w);
        let link_uv_pad = b.alloc(format!("link_forb({u},{v})"), w);
        let link_vu = b.alloc(format!("link({v},{u})"), w);
        let link_vu_pad = b.alloc(format!("link_forb({v},{u})"), w);
        b.attach_all(u, &link_uv);
        b.attach_all(u, &link_uv_pad);
        b.attach_all(v, &link_vu);
        b.attach_all(v, &link_vu_pad);
        forbidden.extend_from_slice(&link_uv_pad);
        forbidden.extend_from_slice(&link_vu_pad);

        // The complementary pairs walk the chain u_1, v_1, u_2, v_2, ...:
        // pair j joins chain positions j and j + 1.
        let chain: Vec<usize> = (0..w)
            .flat_map(|t| [link_uv[t], link_vu[t]])
            .collect();
        for j in 0..2 * w - 1 {
            let x = b.alloc(format!("pair_x({u},{v},{j})"), 1)[0];
            let y = b.alloc(format!("pair_y({u},{v},{j})"), 1)[0];
            let x_pad = b.alloc(format!("pair_x_forb({u},{v},{j})"), 4);
            let y_pad = b.alloc(format!("pair_y_forb({u},{v},{j})"), 2);
            b.connect(x, chain[j]);
            b.connect(x, chain[j + 1]);
            b.connect(x, y);
            b.connect(x, u);
            b.connect(x, v);
            b.attach_all(x, &x_pad);
            b.attach_all(y, &y_pad);
            necessary.push(x);
            necessary.push(y);
            forbidden.extend_from_slice(&x_pad);
            forbidden.extend_from_slice(&y_pad);
        }

        // Chain elements sit in one complementary pair at either end of
        // the chain and two in the middle; their pendant pads match.
        for (t, &el) in link_uv.iter().enumerate() {
            let size = if t == 0 { 3 } else { 4 };
            let pad = b.alloc(format!("link_elem_forb({u},{v},{t})"), size);
            b.attach_all(el, &pad);
            forbidden.extend_from_slice(&pad);
        }
        for (t, &el) in link_vu.iter().enumerate() {
            let size = if t == w - 1 { 3 } else { 4 };
            let pad = b.alloc(format!("link_elem_forb({v},{u},{t})"), size);
            b.attach_all(el, &pad);
            forbidden.extend_from_slice(&pad);
        }
    }

    let k = n * (r_us + 1) + 6 * omega - 2 * m;
    Ok(AnnotatedInstance {
        graph: Graph::from_edges(b.next, &b.edges)?,
        necessary: VertexSet::new(necessary),
        forbidden: VertexSet::new(forbidden),
        k,
        roles: b.roles,
        original_count: n,
    })
}

/// Stage 2: replaces the "necessary" annotation by a cycle gadget. Every
/// necessary vertex gets a cycle of `4n` pendant-backed vertices plus a
/// balancing pad of `4n` pendants; the target grows by `4n` per necessary
/// vertex, which no solution can afford to skip.
fn eliminate_necessary(inst: &AnnotatedInstance) -> Result<AnnotatedInstance> {
    let n4 = 4 * inst.graph.vertex_count();
    let mut b = GadgetBuilder::starting_after(inst.graph.vertex_count(), inst.graph.edges());
    let mut forbidden: Vec<usize> = inst.forbidden.iter().collect();

    for u in inst.necessary.iter() {
        let cycle = b.alloc(format!("cycle({u})"), n4);
        b.attach_all(u, &cycle);
        for i in 0..n4 {
            b.connect(cycle[i], cycle[(i + 1) % n4]);
        }
        let anchor_pad = b.alloc(format!("cycle_anchor_forb({u})"), n4);
        b.attach_all(u, &anchor_pad);
        forbidden.extend_from_slice(&anchor_pad);
        for (i, &x) in cycle.iter().enumerate() {
            let pad = b.alloc(format!("cycle_elem_forb({u},{i})"), 4);
            b.attach_all(x, &pad);
            forbidden.extend_from_slice(&pad);
        }
    }

    let mut roles = inst.roles.clone();
    roles.append(&mut b.roles);
    Ok(AnnotatedInstance {
        graph: Graph::from_edges(b.next, &b.edges)?,
        necessary: VertexSet::new([]),
        forbidden: VertexSet::new(forbidden),
        k: inst.k + n4 * inst.necessary.len(),
        roles,
        original_count: inst.original_count,
    })
}

/// Lifts a feasible orientation to the stage-1 alliance: all necessary
/// vertices, the chain on the head side of every arc, and the first
/// `r + outdegree(v)` selectors of every vertex. The result has size
/// exactly `k` and every member marginally protected.
pub fn lift_mmo_witness(
    inst: &AnnotatedInstance,
    gw: &WeightedGraph,
    o: &Orientation,
    r: u64,
) -> Result<VertexSet> {
    if o.forward.len() != gw.edge_count() {
        return Err(Error::InvalidInstance("orientation does not match the edge list".into()));
    }
    let out = o.weighted_outdegrees(gw);
    if let Some(v) = out.iter().position(|&o| o > r) {
        return Err(Error::InvalidInstance(format!(
            "vertex {v} has weighted outdegree {} > {r}",
            out[v]
        )));
    }
    let mut members: Vec<usize> = inst.necessary.iter().collect();
    for (from, to, _) in o.arcs(gw) {
        members.extend_from_slice(&inst.roles[&format!("link({to},{from})")]);
    }
    for v in 0..gw.vertex_count() {
        let helpers = &inst.roles[&format!("helpers({v})")];
        members.extend_from_slice(&helpers[..(r + out[v]) as usize]);
    }
    let s = VertexSet::new(members);
    if s.len() != inst.k {
        return Err(Error::Internal(format!(
            "lifted witness has size {}, expected {}",
            s.len(),
            inst.k
        )));
    }
    Ok(s)
}

/// Reads the edge directions back out of a stage-1 solution: an edge
/// points at the endpoint whose chain the solution contains. Errors if
/// the solution violates the annotations, contains neither or both chains
/// of some edge, or exceeds the outdegree bound the instance was built
/// for.
pub fn extract_orientation(inst: &AnnotatedInstance, s: &VertexSet) -> Result<Orientation> {
    for v in inst.necessary.iter() {
        if !s.contains(v) {
            return Err(Error::InvalidInstance(format!(
                "solution misses necessary vertex {v}"
            )));
        }
    }
    if let Some(v) = s.iter().find(|&v| inst.forbidden.contains(v)) {
        return Err(Error::InvalidInstance(format!(
            "solution contains forbidden vertex {v}"
        )));
    }

    // Recover the source edge list from the link role keys.
    let mut edges: Vec<(usize, usize, u64)> = Vec::new();
    for key in inst.roles.keys() {
        if let Some((a, b)) = parse_role_pair(key, "link") {
            if a < b {
                edges.push((a, b, inst.roles[key].len() as u64));
            }
        }
    }
    edges.sort_unstable();

    let mut forward = Vec::with_capacity(edges.len());
    for &(u, v, _) in &edges {
        let uv_in = chain_status(inst, s, u, v)?;
        let vu_in = chain_status(inst, s, v, u)?;
        match (uv_in, vu_in) {
            (false, true) => forward.push(true),
            (true, false) => forward.push(false),
            (true, true) => {
                return Err(Error::Inconsistent(format!(
                    "solution contains both chains of edge ({u}, {v})"
                )))
            }
            (false, false) => {
                return Err(Error::Inconsistent(format!(
                    "solution contains neither chain of edge ({u}, {v})"
                )))
            }
        }
    }

    // The outdegree bound is part of the reduction's guarantee; check it
    // rather than assuming it.
    let r = inst.roles["helpers(0)"].len() as u64 / 2;
    let mut out = vec![0u64; inst.original_count];
    for (&(u, v, w), &f) in edges.iter().zip(&forward) {
        out[if f { u } else { v }] += w;
    }
    if let Some(v) = out.iter().position(|&o| o > r) {
        return Err(Error::Inconsistent(format!(
            "derived orientation gives vertex {v} outdegree {} > {r}",
            out[v]
        )));
    }
    Ok(Orientation { forward })
}

/// Whole-chain membership of `link(a,b)` in `s`; partial containment is
/// inconsistent.
fn chain_status(inst: &AnnotatedInstance, s: &VertexSet, a: usize, b: usize) -> Result<bool> {
    let chain = &inst.roles[&format!("link({a},{b})")];
    let inside = chain.iter().filter(|&&v| s.contains(v)).count();
    if inside == 0 {
        Ok(false)
    } else if inside == chain.len() {
        Ok(true)
    } else {
        Err(Error::Inconsistent(format!(
            "chain link({a},{b}) is only partially contained ({inside}/{})",
            chain.len()
        )))
    }
}

fn parse_role_pair(key: &str, prefix: &str) -> Option<(usize, usize)> {
    let rest = key.strip_prefix(prefix)?.strip_prefix('(')?.strip_suffix(')')?;
    let mut it = rest.split(',');
    let a = it.next()?.parse().ok()?;
    let b = it.next()?.parse().ok()?;
    if it.next().is_some() {
        return None;
    }
    Some((a, b))
}

/// Lifts a stage-1 solution through stage 2 (adding every necessary
/// vertex's cycle) into the plain instance; stage 3 is the identity.
pub fn lift_fn_to_plain(chain: &MmoChain, s_fn: &VertexSet) -> Result<VertexSet> {
    let inst = &chain.fn_instance;
    for v in inst.necessary.iter() {
        if !s_fn.contains(v) {
            return Err(Error::InvalidInstance(format!(
                "solution misses necessary vertex {v}"
            )));
        }
    }
    if let Some(v) = s_fn.iter().find(|&v| inst.forbidden.contains(v)) {
        return Err(Error::InvalidInstance(format!(
            "solution contains forbidden vertex {v}"
        )));
    }
    if !is_defensive_alliance(&inst.graph, s_fn)? {
        return Err(Error::InvalidInstance(
            "stage-1 solution is not a defensive alliance".into(),
        ));
    }
    let mut members: Vec<usize> = s_fn.iter().collect();
    for u in inst.necessary.iter() {
        members.extend_from_slice(&chain.f_instance.roles[&format!("cycle({u})")]);
    }
    Ok(VertexSet::new(members))
}
