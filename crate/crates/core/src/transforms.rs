//! Instance rewriting: normalization, kill, bypass, torso, futile-vertex
//! deletion, the degree-reduced graph and degree branching.
//!
//! Every transform returns a fresh instance. Derived instances keep the
//! topological order induced by their parent; all added arcs point forward in
//! that order.

use std::collections::BTreeSet;

use thiserror::Error;

use crate::dag::{DagInstance, Vertex};
use crate::separators::{cut_positions, CutSize};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TransformError {
    #[error("cannot kill terminal {0}")]
    KillTerminal(Vertex),
    #[error("cannot kill {0}: budget exhausted")]
    BudgetExhausted(Vertex),
    #[error("cannot bypass terminal {0}")]
    BypassTerminal(Vertex),
    #[error("vertex set contains terminal {0}")]
    ContainsTerminal(Vertex),
    #[error("vertex {0} is not in the instance")]
    UnknownVertex(Vertex),
    #[error("terminal pair {0} cannot be separated")]
    InfeasibleCut(usize),
}

/// Rewrites the instance so that all `2r` terminals are distinct fresh
/// vertices, every source has in-degree 0 and every sink out-degree 0.
///
/// Each original terminal is replaced by `p + 1` nonterminal copies with the
/// same neighbourhood (terminal neighbours are themselves replaced by all of
/// their copies). Fresh IDs start above the current maximum: first the copies
/// of each terminal in ID order, then `s'_i, t'_i` for each pair. Original
/// nonterminal IDs are untouched, so a solution maps back by intersecting it
/// with the original vertex set.
pub fn normalize(g: &DagInstance) -> DagInstance {
    let p = g.budget();
    let terminals: BTreeSet<Vertex> = g
        .terminal_pairs()
        .iter()
        .flat_map(|&(s, t)| [s, t])
        .collect();
    let mut next = g.max_id().map_or(1, |m| m + 1);
    let mut fresh = || {
        let v = next;
        next += 1;
        v
    };

    let mut copies = std::collections::BTreeMap::new();
    for &v in &terminals {
        copies.insert(v, (0..=p).map(|_| fresh()).collect::<Vec<_>>());
    }
    let images = |v: Vertex| -> Vec<Vertex> {
        match copies.get(&v) {
            Some(cs) => cs.clone(),
            None => vec![v],
        }
    };

    let mut vertices: Vec<Vertex> = g.vertices().iter().copied().filter(|v| !terminals.contains(v)).collect();
    vertices.extend(copies.values().flatten().copied());

    let mut arcs = Vec::new();
    for (u, v) in g.arcs() {
        for a in images(u) {
            for b in images(v) {
                arcs.push((a, b));
            }
        }
    }

    let mut pairs = Vec::with_capacity(g.num_pairs());
    for &(s, t) in g.terminal_pairs() {
        let (s2, t2) = (fresh(), fresh());
        vertices.extend([s2, t2]);
        for w in g.out_neighbors(s) {
            arcs.extend(images(w).into_iter().map(|b| (s2, b)));
        }
        for w in g.in_neighbors(t) {
            arcs.extend(images(w).into_iter().map(|a| (a, t2)));
        }
        // A direct arc (or identical endpoints) has no interior to copy.
        if s == t || g.has_arc(s, t) {
            arcs.push((s2, t2));
        }
        pairs.push((s2, t2));
    }

    DagInstance::build(vertices, arcs, pairs, p).expect("normalization preserves acyclicity")
}

/// Deletes a nonterminal and spends one unit of budget.
pub fn kill(g: &DagInstance, v: Vertex) -> Result<DagInstance, TransformError> {
    let k = g.position(v).ok_or(TransformError::UnknownVertex(v))?;
    if g.terminal_mask()[k] {
        return Err(TransformError::KillTerminal(v));
    }
    if g.budget() == 0 {
        return Err(TransformError::BudgetExhausted(v));
    }
    let mut removed = vec![false; g.len()];
    removed[k] = true;
    Ok(delete_positions(g, &removed, g.budget() - 1))
}

/// Deletes a nonterminal, joining each in-neighbour to each out-neighbour.
pub fn bypass(g: &DagInstance, v: Vertex) -> Result<DagInstance, TransformError> {
    if g.position(v).is_none() {
        return Err(TransformError::UnknownVertex(v));
    }
    if g.is_terminal(v) {
        return Err(TransformError::BypassTerminal(v));
    }
    torso(g, &BTreeSet::from([v]))
}

/// Bypasses every vertex of `set`. The result has an arc `(u, w)` exactly when
/// `G` has a `uw`-path whose interior lies in `set`, so the bypass order is
/// irrelevant.
pub fn torso(g: &DagInstance, set: &BTreeSet<Vertex>) -> Result<DagInstance, TransformError> {
    let mut mask = vec![false; g.len()];
    for &v in set {
        let k = g.position(v).ok_or(TransformError::UnknownVertex(v))?;
        if g.terminal_mask()[k] {
            return Err(TransformError::ContainsTerminal(v));
        }
        mask[k] = true;
    }
    Ok(torso_positions(g, &mask))
}

pub(crate) fn torso_positions(g: &DagInstance, bypassed: &[bool]) -> DagInstance {
    if !bypassed.iter().any(|&b| b) {
        return g.clone();
    }
    let n = g.len();
    let mut arcs = Vec::new();
    let mut via = vec![false; n];
    for u in 0..n {
        if bypassed[u] {
            continue;
        }
        // Sweep forward from u through bypassed vertices only.
        via.iter_mut().for_each(|b| *b = false);
        for &w in g.out_pos(u) {
            if bypassed[w] {
                via[w] = true;
            } else {
                arcs.push((u, w));
            }
        }
        for k in u + 1..n {
            if !via[k] {
                continue;
            }
            for &w in g.out_pos(k) {
                if bypassed[w] {
                    via[w] = true;
                } else {
                    arcs.push((u, w));
                }
            }
        }
    }
    g.derive(bypassed, arcs, g.budget())
}

/// Plain deletion of the given positions with a new budget.
pub(crate) fn delete_positions(g: &DagInstance, removed: &[bool], budget: usize) -> DagInstance {
    let arcs: Vec<_> = g.arc_positions().filter(|&(u, w)| !removed[u] && !removed[w]).collect();
    g.derive(removed, arcs, budget)
}

/// Positions of nonterminals lying on no `s_i t_i`-path.
pub(crate) fn futile_positions(g: &DagInstance) -> Vec<bool> {
    let n = g.len();
    let none = vec![false; n];
    let mut useful = vec![false; n];
    for i in 0..g.num_pairs() {
        let (s, t) = g.pair_pos(i);
        let fwd = g.forward_mask(&[s], &none);
        if !fwd[t] {
            continue;
        }
        let bwd = g.backward_mask(&[t], &none);
        for k in 0..n {
            useful[k] |= fwd[k] && bwd[k];
        }
    }
    let term = g.terminal_mask();
    (0..n).map(|k| !term[k] && !useful[k]).collect()
}

/// Deletes every nonterminal that lies on no `s_i t_i`-path. This covers all
/// vertices with an empty source set, and leaves the set of `s_i t_i`-paths,
/// the multicuts and every pair cut unchanged.
pub fn delete_futile(g: &DagInstance) -> DagInstance {
    let futile = futile_positions(g);
    if futile.iter().any(|&f| f) {
        delete_positions(g, &futile, g.budget())
    } else {
        g.clone()
    }
}

/// Closest-to-source minimum cut `B_i` of every pair, as positions in
/// topological order.
pub(crate) fn source_side_cuts(g: &DagInstance) -> Result<Vec<Vec<usize>>, TransformError> {
    (0..g.num_pairs())
        .map(|i| {
            let (s, t) = g.pair_pos(i);
            if s == t {
                return Err(TransformError::InfeasibleCut(i));
            }
            let q = cut_positions(g, &[s], &[t], None, true);
            match q.size {
                CutSize::Infinite => Err(TransformError::InfeasibleCut(i)),
                CutSize::Finite(_) => Ok(q.closest_to_x),
            }
        })
        .collect()
}

fn degree_reduced_with(g: &DagInstance, cuts: &[Vec<usize>]) -> DagInstance {
    let n = g.len();
    let mut is_source = vec![false; n];
    for i in 0..g.num_pairs() {
        is_source[g.pair_pos(i).0] = true;
    }
    let mut arcs: Vec<(usize, usize)> = g
        .arc_positions()
        .filter(|&(u, w)| !is_source[u] && !is_source[w])
        .collect();

    let none = vec![false; n];
    let all_cut: BTreeSet<usize> = cuts.iter().flatten().copied().collect();
    for (i, cut) in cuts.iter().enumerate() {
        let (s, _) = g.pair_pos(i);
        arcs.extend(cut.iter().map(|&v| (s, v)));
        let from_s = g.forward_mask(&[s], &none);
        let from_cut = g.forward_mask(cut, &none);
        arcs.extend(
            all_cut
                .iter()
                .filter(|&&v| from_s[v] && !from_cut[v])
                .map(|&v| (s, v)),
        );
    }
    g.derive(&none, arcs, g.budget())
}

/// The degree-reduced graph `G*`: arcs leaving the sources are replaced by
/// arcs onto the closest-to-source minimum cuts `B_i`, plus arcs from `s_i`
/// to every vertex of some `B_j` that `s_i` reaches but `B_i` does not.
pub fn degree_reduced(g: &DagInstance) -> Result<DagInstance, TransformError> {
    let cuts = source_side_cuts(g)?;
    Ok(degree_reduced_with(g, &cuts))
}

#[derive(Clone, Debug)]
pub struct DegreeChild {
    /// Index of the terminal pair whose cut the child pushes.
    pub pair: usize,
    /// The bypassed vertex of `B_pair`.
    pub vertex: Vertex,
    pub instance: DagInstance,
}

#[derive(Clone, Debug)]
pub struct DegreeBranchResult {
    pub children: Vec<DegreeChild>,
    /// The degree-reduced instance.
    pub kept: DagInstance,
}

/// One child per `(i, v)` with `v` in `B_i` (pairs ascending, then by
/// topological rank): add the arc `(v, t_i)` and bypass `v`. The kept
/// instance is the degree-reduced graph.
pub fn degree_branch(g: &DagInstance) -> Result<DegreeBranchResult, TransformError> {
    let cuts = source_side_cuts(g)?;
    let mut children = Vec::new();
    for (i, cut) in cuts.iter().enumerate() {
        let (_, t) = g.pair_pos(i);
        for &v in cut {
            let mut arcs: Vec<(usize, usize)> = g.arc_positions().collect();
            arcs.push((v, t));
            let with_arc = g.derive(&vec![false; g.len()], arcs, g.budget());
            let mut mask = vec![false; g.len()];
            mask[v] = true;
            children.push(DegreeChild {
                pair: i,
                vertex: g.id(v),
                instance: torso_positions(&with_arc, &mask),
            });
        }
    }
    Ok(DegreeBranchResult {
        children,
        kept: degree_reduced_with(g, &cuts),
    })
}
