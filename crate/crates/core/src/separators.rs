//! Minimum vertex separators via unit-capacity max-flow on the split graph.
//!
//! Every deletable vertex `v` becomes an arc `v_in -> v_out` of capacity one;
//! terminals and the vertices of `X` and `Y` get unbounded capacity. The
//! residual graph of a maximum flow yields both extremal minimum cuts: the one
//! closest to `X` (saturated arcs leaving the source side) and the one closest
//! to `Y` (saturated arcs entering the part that can still reach the sink).

use std::collections::{BTreeSet, VecDeque};

use itertools::Itertools;
use thiserror::Error;

use crate::dag::{CutSet, DagInstance, Vertex};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum CutSize {
    Finite(usize),
    Infinite,
}

impl CutSize {
    pub fn finite(self) -> Option<usize> {
        match self {
            CutSize::Finite(k) => Some(k),
            CutSize::Infinite => None,
        }
    }

    pub fn exceeds(self, bound: usize) -> bool {
        match self {
            CutSize::Finite(k) => k > bound,
            CutSize::Infinite => true,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SeparatorReport {
    pub size: CutSize,
    /// Minimum separator closest to `X`; empty when `size` is infinite.
    pub closest_to_x: CutSet,
    /// Minimum separator closest to `Y` (the unique minimum important one);
    /// empty when `size` is infinite.
    pub closest_to_y: CutSet,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SeparatorError {
    #[error("separator endpoints must be non-empty")]
    EmptySide,
    #[error("vertex {0} lies on both sides")]
    Overlap(Vertex),
    #[error("vertex {0} is not in the instance")]
    UnknownVertex(Vertex),
    #[error("the given set is not a separator")]
    NotASeparator,
}

/// `phi = (r + 1) p - sum_i cut(s_i, t_i)`, or `Infeasible` when some pair
/// cannot be separated within the budget.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Potential {
    Value(i64),
    Infeasible,
}

impl Potential {
    pub fn value(self) -> Option<i64> {
        match self {
            Potential::Value(v) => Some(v),
            Potential::Infeasible => None,
        }
    }
}

const UNBOUNDED: u32 = u32::MAX / 4;

struct SplitNetwork {
    to: Vec<usize>,
    cap: Vec<u32>,
    adj: Vec<Vec<usize>>,
    source: usize,
    sink: usize,
}

impl SplitNetwork {
    fn add_edge(&mut self, u: usize, v: usize, c: u32) {
        self.adj[u].push(self.to.len());
        self.to.push(v);
        self.cap.push(c);
        self.adj[v].push(self.to.len());
        self.to.push(u);
        self.cap.push(0);
    }

    /// Pushes one unit along a shortest augmenting path, if any.
    fn augment(&mut self) -> bool {
        let n = self.adj.len();
        let mut via = vec![usize::MAX; n];
        let mut seen = vec![false; n];
        let mut queue = VecDeque::from([self.source]);
        seen[self.source] = true;
        while let Some(u) = queue.pop_front() {
            if u == self.sink {
                break;
            }
            for &e in &self.adj[u] {
                let w = self.to[e];
                if self.cap[e] > 0 && !seen[w] {
                    seen[w] = true;
                    via[w] = e;
                    queue.push_back(w);
                }
            }
        }
        if !seen[self.sink] {
            return false;
        }
        let mut v = self.sink;
        while v != self.source {
            let e = via[v];
            self.cap[e] -= 1;
            self.cap[e ^ 1] += 1;
            v = self.to[e ^ 1];
        }
        true
    }

    fn residual_from_source(&self) -> Vec<bool> {
        let mut seen = vec![false; self.adj.len()];
        let mut stack = vec![self.source];
        seen[self.source] = true;
        while let Some(u) = stack.pop() {
            for &e in &self.adj[u] {
                let w = self.to[e];
                if self.cap[e] > 0 && !seen[w] {
                    seen[w] = true;
                    stack.push(w);
                }
            }
        }
        seen
    }

    fn residual_to_sink(&self) -> Vec<bool> {
        let mut seen = vec![false; self.adj.len()];
        let mut stack = vec![self.sink];
        seen[self.sink] = true;
        while let Some(u) = stack.pop() {
            for &e in &self.adj[u] {
                // `e` leaves `u`; its twin `e ^ 1` enters `u` from `to[e]`.
                let w = self.to[e];
                if self.cap[e ^ 1] > 0 && !seen[w] {
                    seen[w] = true;
                    stack.push(w);
                }
            }
        }
        seen
    }
}

pub(crate) struct CutQuery {
    pub size: CutSize,
    pub closest_to_x: Vec<usize>,
    pub closest_to_y: Vec<usize>,
}

/// Core flow routine on positions. With `limit = Some(b)` the search stops
/// once `b + 1` disjoint paths are found and reports `Infinite`.
pub(crate) fn cut_positions(
    g: &DagInstance,
    xs: &[usize],
    ys: &[usize],
    limit: Option<usize>,
    want_cuts: bool,
) -> CutQuery {
    let n = g.len();
    let mut in_x = vec![false; n];
    let mut in_y = vec![false; n];
    for &x in xs {
        in_x[x] = true;
    }
    for &y in ys {
        in_y[y] = true;
    }
    let term = g.terminal_mask();
    let deletable = |k: usize| !term[k] && !in_x[k] && !in_y[k];

    // A path whose interior avoids every deletable vertex cannot be cut.
    let first = xs.iter().copied().min().unwrap_or(n);
    let mut open_reach = vec![false; n];
    for k in first..n {
        open_reach[k] = in_x[k] || g.in_pos(k).iter().any(|&j| open_reach[j] && !deletable(j));
        if open_reach[k] && in_y[k] {
            return CutQuery {
                size: CutSize::Infinite,
                closest_to_x: Vec::new(),
                closest_to_y: Vec::new(),
            };
        }
    }

    let mut net = SplitNetwork {
        to: Vec::new(),
        cap: Vec::new(),
        adj: vec![Vec::new(); 2 * n + 2],
        source: 2 * n,
        sink: 2 * n + 1,
    };
    for k in 0..n {
        let c = if deletable(k) { 1 } else { UNBOUNDED };
        net.add_edge(2 * k, 2 * k + 1, c);
        for &w in g.out_pos(k) {
            net.add_edge(2 * k + 1, 2 * w, UNBOUNDED);
        }
        if in_x[k] {
            net.add_edge(net.source, 2 * k + 1, UNBOUNDED);
        }
        if in_y[k] {
            net.add_edge(2 * k, net.sink, UNBOUNDED);
        }
    }

    let mut flow = 0usize;
    while net.augment() {
        flow += 1;
        if limit.is_some_and(|b| flow > b) {
            return CutQuery {
                size: CutSize::Infinite,
                closest_to_x: Vec::new(),
                closest_to_y: Vec::new(),
            };
        }
    }

    let (mut near_x, mut near_y) = (Vec::new(), Vec::new());
    if want_cuts {
        let src_side = net.residual_from_source();
        let sink_side = net.residual_to_sink();
        for k in 0..n {
            if !deletable(k) {
                continue;
            }
            if src_side[2 * k] && !src_side[2 * k + 1] {
                near_x.push(k);
            }
            if sink_side[2 * k + 1] && !sink_side[2 * k] {
                near_y.push(k);
            }
        }
        debug_assert_eq!(near_x.len(), flow);
        debug_assert_eq!(near_y.len(), flow);
    }
    CutQuery {
        size: CutSize::Finite(flow),
        closest_to_x: near_x,
        closest_to_y: near_y,
    }
}

fn positions(g: &DagInstance, set: &BTreeSet<Vertex>) -> Result<Vec<usize>, SeparatorError> {
    set.iter()
        .map(|&v| g.position(v).ok_or(SeparatorError::UnknownVertex(v)))
        .collect()
}

fn check_sides(
    g: &DagInstance,
    x: &BTreeSet<Vertex>,
    y: &BTreeSet<Vertex>,
) -> Result<(Vec<usize>, Vec<usize>), SeparatorError> {
    if x.is_empty() || y.is_empty() {
        return Err(SeparatorError::EmptySide);
    }
    if let Some(&v) = x.intersection(y).next() {
        return Err(SeparatorError::Overlap(v));
    }
    Ok((positions(g, x)?, positions(g, y)?))
}

/// Minimum `X-Y` vertex separator together with both closest minimum cuts.
pub fn min_separator(
    g: &DagInstance,
    x: &BTreeSet<Vertex>,
    y: &BTreeSet<Vertex>,
) -> Result<SeparatorReport, SeparatorError> {
    let (xs, ys) = check_sides(g, x, y)?;
    let q = cut_positions(g, &xs, &ys, None, true);
    let to_set = |ps: Vec<usize>| ps.into_iter().map(|k| g.id(k)).collect::<CutSet>();
    Ok(SeparatorReport {
        size: q.size,
        closest_to_x: to_set(q.closest_to_x),
        closest_to_y: to_set(q.closest_to_y),
    })
}

/// `cut_G(s_i, t_i)` for pair `i`, exact.
pub fn pair_cut(g: &DagInstance, i: usize) -> CutSize {
    let (s, t) = g.pair_pos(i);
    if s == t {
        return CutSize::Infinite;
    }
    cut_positions(g, &[s], &[t], None, false).size
}

/// Pair cut that gives up once it exceeds `limit`.
pub(crate) fn pair_cut_upto(g: &DagInstance, i: usize, limit: usize) -> CutSize {
    let (s, t) = g.pair_pos(i);
    if s == t {
        return CutSize::Infinite;
    }
    cut_positions(g, &[s], &[t], Some(limit), false).size
}

/// Whether `z` is an `X-Y` separator: terminal-free, disjoint from both
/// sides, and hitting every `X-Y` path.
pub fn is_separator(
    g: &DagInstance,
    x: &BTreeSet<Vertex>,
    y: &BTreeSet<Vertex>,
    z: &BTreeSet<Vertex>,
) -> bool {
    if z.iter().any(|v| !g.contains(*v) || g.is_terminal(*v) || x.contains(v) || y.contains(v)) {
        return false;
    }
    let reach = g.reachable(x.iter().copied(), &CutSet::from(z.clone()));
    y.iter().all(|v| !reach.contains(v))
}

/// Exhaustive importance test for small instances: `z` must be a minimal
/// separator and no other separator of at most its size may lie behind it.
pub fn is_important_separator(
    g: &DagInstance,
    x: &BTreeSet<Vertex>,
    y: &BTreeSet<Vertex>,
    z: &BTreeSet<Vertex>,
) -> Result<bool, SeparatorError> {
    check_sides(g, x, y)?;
    if !is_separator(g, x, y, z) {
        return Err(SeparatorError::NotASeparator);
    }
    for &v in z {
        let mut smaller = z.clone();
        smaller.remove(&v);
        if is_separator(g, x, y, &smaller) {
            return Ok(false);
        }
    }
    let region = g.reachable(x.iter().copied(), &CutSet::from(z.clone()));
    let candidates: Vec<Vertex> = g
        .vertices()
        .iter()
        .copied()
        .filter(|v| !g.is_terminal(*v) && !x.contains(v) && !y.contains(v))
        .collect();
    for size in 0..=z.len() {
        for other in candidates.iter().copied().combinations(size) {
            let other: BTreeSet<Vertex> = other.into_iter().collect();
            if &other == z || !is_separator(g, x, y, &other) {
                continue;
            }
            let other_region = g.reachable(x.iter().copied(), &CutSet::from(other));
            if region.is_subset(&other_region) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Potential with flows capped at `p + 1` augmentations.
pub fn potential(g: &DagInstance) -> Potential {
    let p = g.budget();
    let mut total = 0i64;
    for i in 0..g.num_pairs() {
        match pair_cut_upto(g, i, p) {
            CutSize::Finite(c) => total += c as i64,
            CutSize::Infinite => return Potential::Infeasible,
        }
    }
    Potential::Value((g.num_pairs() as i64 + 1) * p as i64 - total)
}

/// Exact pair cuts; `None` when some pair cannot be separated at all.
pub(crate) fn exact_cuts(g: &DagInstance) -> Option<Vec<usize>> {
    (0..g.num_pairs()).map(|i| pair_cut(g, i).finite()).collect()
}

/// Potential from exact cuts regardless of the budget, `None` if some cut is
/// infinite.
pub(crate) fn exact_potential(g: &DagInstance) -> Option<i64> {
    let cuts = exact_cuts(g)?;
    let total: i64 = cuts.iter().map(|&c| c as i64).sum();
    Some((g.num_pairs() as i64 + 1) * g.budget() as i64 - total)
}
