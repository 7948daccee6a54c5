//! Hardness gadgets as instance generators, and the weighted-arc to
//! vertex-deletion expansion.
//!
//! Vertex IDs are assigned from 1 upward in the topological order used by
//! each construction, so generated files are byte-stable.

use std::collections::{BTreeSet, HashMap};

use itertools::Itertools;
use thiserror::Error;

use crate::dag::{DagInstance, Vertex};
use crate::oracle::{ArcWeight, WeightedArcInstance, WeightedError};

/// Refuse expansions with more vertices plus arcs than this.
pub const MAX_EXPANSION: u128 = 5_000_000;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GadgetError {
    #[error("self-loop on vertex {0}")]
    SelfLoop(usize),
    #[error("vertex {0} out of range")]
    VertexOutOfRange(usize),
    #[error("clique size must be at least 2, got {0}")]
    CliqueTooSmall(usize),
    #[error("graph must have at least one vertex")]
    EmptyGraph,
    #[error("cut target {t} leaves a negative budget")]
    NegativeBudget { t: u64 },
    #[error("not a skew instance: {0}")]
    NotSkewShaped(String),
    #[error("expansion would create about {0} vertices and arcs")]
    ExpansionTooLarge(u128),
    #[error(transparent)]
    Weighted(#[from] WeightedError),
}

/// Simple undirected graph on `0..n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UndirectedGraph {
    n: usize,
    edges: BTreeSet<(usize, usize)>,
}

impl UndirectedGraph {
    /// Edges are stored as `(min, max)`; repeated edges collapse.
    pub fn new(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self, GadgetError> {
        let mut set = BTreeSet::new();
        for (u, v) in edges {
            for x in [u, v] {
                if x >= n {
                    return Err(GadgetError::VertexOutOfRange(x));
                }
            }
            if u == v {
                return Err(GadgetError::SelfLoop(u));
            }
            set.insert((u.min(v), u.max(v)));
        }
        Ok(Self { n, edges: set })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.edges.iter().copied()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.edges.contains(&(u.min(v), u.max(v)))
    }

    /// Whether some `t` vertices are pairwise adjacent.
    pub fn has_clique(&self, t: usize) -> bool {
        (0..self.n)
            .combinations(t)
            .any(|c| c.iter().tuple_combinations().all(|(&a, &b)| self.has_edge(a, b)))
    }

    /// Maximum cut by trying every bipartition.
    pub fn max_cut(&self) -> usize {
        (0u64..1 << self.n)
            .map(|side| {
                self.edges
                    .iter()
                    .filter(|&&(u, v)| (side >> u & 1) != (side >> v & 1))
                    .count()
            })
            .max()
            .unwrap_or(0)
    }
}

/// Heavy weight `2(t+1)^2` of the clique construction.
pub fn clique_heavy_weight(t: usize) -> u64 {
    2 * (t as u64 + 1).pow(2)
}

/// Budget `2t(t-1)D + t(t+1)/2` of the clique construction.
pub fn clique_budget(t: usize) -> u64 {
    let t = t as u64;
    2 * t * (t - 1) * clique_heavy_weight(t as usize) + t * (t + 1) / 2
}

/// Weighted arc-deletion instance that is YES exactly when `g` has a clique
/// on `t` vertices.
///
/// One gadget per ordered pair `(i, j)` of distinct indices in `1..=t`, each a
/// pair of chains `w^{s,1}`, `w^{s,2}` for `0 <= s <= n^2`. Chain step `s`
/// encodes `(s / n, s % n)` and is heavy when that pair is an edge, infinite
/// otherwise. IDs: gadgets in `(i, j)` order (chain 1 then chain 2), then
/// `a, b` per `i < j` and ordered edge, then `c_i^x, d_i^x`.
pub fn gen_clique_instance(g: &UndirectedGraph, t: usize) -> Result<WeightedArcInstance, GadgetError> {
    if t < 2 {
        return Err(GadgetError::CliqueTooSmall(t));
    }
    if g.n == 0 {
        return Err(GadgetError::EmptyGraph);
    }
    let n = g.n;
    let nn = n * n;
    let heavy = ArcWeight::Finite(clique_heavy_weight(t));
    let light = ArcWeight::Finite(1);
    let inf = ArcWeight::Infinite;
    let iota = |x: usize, y: usize| x * n + y;

    let gadgets: Vec<(usize, usize)> = (1..=t).cartesian_product(1..=t).filter(|(i, j)| i != j).collect();
    let per_gadget = 2 * (nn + 1);
    let w = |i: usize, j: usize, s: usize, xi: usize| -> Vertex {
        let k = gadgets.iter().position(|&p| p == (i, j)).expect("gadget");
        (k * per_gadget + (xi - 1) * (nn + 1) + s + 1) as Vertex
    };
    let mut next = (gadgets.len() * per_gadget) as Vertex;
    let mut fresh = || {
        next += 1;
        next
    };

    let mut arcs = Vec::new();
    let mut pairs = Vec::new();
    for &(i, j) in &gadgets {
        for xi in 1..=2 {
            for s in 0..nn {
                let wt = if g.has_edge(s / n, s % n) { heavy } else { inf };
                arcs.push((w(i, j, s, xi), w(i, j, s + 1, xi), wt));
            }
        }
        arcs.push((w(i, j, nn, 1), w(i, j, 0, 2), inf));
        for s in 0..=nn {
            arcs.push((w(i, j, s, 1), w(i, j, s, 2), inf));
        }
        pairs.push((w(i, j, 0, 1), w(i, j, nn, 2)));
    }

    let ordered_edges: Vec<(usize, usize)> = (0..n)
        .cartesian_product(0..n)
        .filter(|&(x, y)| g.has_edge(x, y))
        .collect();
    for (i, j) in (1..=t).tuple_combinations() {
        for &(x, y) in &ordered_edges {
            let a = fresh();
            let b = fresh();
            arcs.push((a, b, light));
            arcs.push((w(i, j, iota(x, y), 2), a, inf));
            arcs.push((w(j, i, iota(y, x), 2), a, inf));
            pairs.push((w(i, j, iota(x, y) + 1, 1), b));
            pairs.push((w(j, i, iota(y, x) + 1, 1), b));
        }
    }

    for i in 1..=t {
        for x in 0..n {
            let c = fresh();
            let d = fresh();
            arcs.push((c, d, light));
            for j in (1..=t).filter(|&j| j != i) {
                arcs.push((w(i, j, iota(x, 0), 2), c, inf));
                pairs.push((w(i, j, iota(x + 1, 0), 1), d));
            }
        }
    }

    let vertices: Vec<Vertex> = (1..=next).collect();
    Ok(WeightedArcInstance::new(vertices, arcs, pairs, clique_budget(t))?)
}

/// Heavy weight `2m+1` of the max-cut construction.
pub fn maxcut_heavy_weight(g: &UndirectedGraph) -> u64 {
    2 * g.m() as u64 + 1
}

/// Budget `nD + 2m - t` of the max-cut construction.
pub fn maxcut_budget(g: &UndirectedGraph, t: u64) -> Result<u64, GadgetError> {
    (g.n() as u64 * maxcut_heavy_weight(g) + 2 * g.m() as u64)
        .checked_sub(t)
        .ok_or(GadgetError::NegativeBudget { t })
}

/// Skew instance with pairs `(s1,t1), (s1,t2), (s2,t2)` that is YES exactly
/// when `g` has a cut with at least `t` edges.
///
/// IDs: `s1, s2`, then `a^v`, then `b_1, b_2` per edge, then `c_1, c_2` per
/// edge, then `d^v`, then `t1, t2`. Edges are taken as `(u, v)` with `u < v`.
pub fn gen_maxcut_skew_instance(g: &UndirectedGraph, t: u64) -> Result<WeightedArcInstance, GadgetError> {
    let (n, m) = (g.n(), g.m());
    let heavy = ArcWeight::Finite(maxcut_heavy_weight(g));
    let light = ArcWeight::Finite(1);
    let inf = ArcWeight::Infinite;
    let budget = maxcut_budget(g, t)?;

    let s1: Vertex = 1;
    let s2: Vertex = 2;
    let a = |v: usize| (3 + v) as Vertex;
    let b = |e: usize, alpha: usize| (3 + n + 2 * e + alpha - 1) as Vertex;
    let c = |e: usize, alpha: usize| (3 + n + 2 * m + 2 * e + alpha - 1) as Vertex;
    let d = |v: usize| (3 + n + 4 * m + v) as Vertex;
    let t1 = (3 + 2 * n + 4 * m) as Vertex;
    let t2 = t1 + 1;

    let mut arcs = Vec::new();
    for v in 0..n {
        arcs.push((s1, a(v), heavy));
        arcs.push((a(v), d(v), inf));
        arcs.push((d(v), t2, heavy));
    }
    for (e, (u, v)) in g.edges().enumerate() {
        for alpha in 1..=2 {
            arcs.push((b(e, alpha), c(e, alpha), light));
            arcs.push((s2, b(e, alpha), inf));
            arcs.push((c(e, alpha), t1, inf));
        }
        arcs.push((a(u), b(e, 1), inf));
        arcs.push((a(v), b(e, 2), inf));
        arcs.push((c(e, 2), d(u), inf));
        arcs.push((c(e, 1), d(v), inf));
    }
    let vertices: Vec<Vertex> = (1..=t2).collect();
    let pairs = vec![(s1, t1), (s1, t2), (s2, t2)];
    Ok(WeightedArcInstance::new(vertices, arcs, pairs, budget)?)
}

/// Two-pair instance equivalent to a two-source, two-sink skew instance:
/// adds an infinite arc `(t2, t1)` and keeps the pairs `(s1,t1), (s2,t2)`.
pub fn skew_to_two_pairs(inst: &WeightedArcInstance) -> Result<WeightedArcInstance, GadgetError> {
    let [(s1, t1), (s1b, t2), (s2, t2b)] = inst.terminal_pairs() else {
        return Err(GadgetError::NotSkewShaped(format!(
            "expected 3 terminal pairs, found {}",
            inst.terminal_pairs().len()
        )));
    };
    let (s1, t1, s2, t2) = (*s1, *t1, *s2, *t2);
    if *s1b != s1 || *t2b != t2 {
        return Err(GadgetError::NotSkewShaped(
            "pairs must read (s1,t1), (s1,t2), (s2,t2)".into(),
        ));
    }
    if BTreeSet::from([s1, t1, s2, t2]).len() != 4 {
        return Err(GadgetError::NotSkewShaped("terminals are not distinct".into()));
    }
    for &(u, v, _) in inst.arcs() {
        if v == s1 || v == s2 {
            return Err(GadgetError::NotSkewShaped(format!("source {v} has an in-arc")));
        }
        if u == t1 || u == t2 {
            return Err(GadgetError::NotSkewShaped(format!("sink {u} has an out-arc")));
        }
    }
    Ok(inst.extended((t2, t1, ArcWeight::Infinite), vec![(s1, t1), (s2, t2)])?)
}

/// Unweighted vertex-deletion instance equivalent to `inst`.
///
/// An arc of weight `w` becomes `w` length-two paths through fresh middle
/// vertices, an infinite arc `p + 1` of them. Each original nonterminal gets
/// `p` extra copies sharing its arcs, so it can never be deleted. Fresh IDs
/// follow the maximum original ID: copies in vertex order, then middle
/// vertices in arc order.
pub fn expand_to_vertex_instance(inst: &WeightedArcInstance) -> Result<DagInstance, GadgetError> {
    let p = inst.budget();
    let terminals: BTreeSet<Vertex> = inst.terminal_pairs().iter().flat_map(|&(s, t)| [s, t]).collect();
    let nonterminals: Vec<Vertex> = inst.vertices().iter().copied().filter(|v| !terminals.contains(v)).collect();

    let width = |w: ArcWeight| -> u128 {
        match w {
            ArcWeight::Finite(x) => u128::from(x),
            ArcWeight::Infinite => u128::from(p) + 1,
        }
    };
    let images = |v: Vertex| -> u128 {
        if terminals.contains(&v) {
            1
        } else {
            u128::from(p) + 1
        }
    };
    let mut estimate = inst.vertices().len() as u128 + nonterminals.len() as u128 * u128::from(p);
    for &(u, v, w) in inst.arcs() {
        estimate = estimate.saturating_add(width(w).saturating_mul(1 + images(u) + images(v)));
    }
    if estimate > MAX_EXPANSION {
        return Err(GadgetError::ExpansionTooLarge(estimate));
    }

    let mut next = inst.vertices().iter().copied().max().unwrap_or(0);
    let mut copies: HashMap<Vertex, Vec<Vertex>> = HashMap::new();
    for &v in inst.vertices() {
        copies.insert(v, vec![v]);
    }
    for &v in &nonterminals {
        let list = copies.get_mut(&v).expect("vertex");
        for _ in 0..p {
            next += 1;
            list.push(next);
        }
    }
    let mut vertices = inst.vertices().to_vec();
    for &v in &nonterminals {
        vertices.extend(copies[&v].iter().skip(1));
    }

    let mut arcs = Vec::new();
    for &(u, v, w) in inst.arcs() {
        for _ in 0..width(w) {
            next += 1;
            vertices.push(next);
            arcs.extend(copies[&u].iter().map(|&x| (x, next)));
            arcs.extend(copies[&v].iter().map(|&y| (next, y)));
        }
    }
    Ok(DagInstance::build(
        vertices,
        arcs,
        inst.terminal_pairs().iter().copied(),
        usize::try_from(p).map_err(|_| GadgetError::ExpansionTooLarge(u128::from(p)))?,
    )
    .expect("expansion of a DAG is a DAG"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle::{brute_solve, brute_solve_weighted_arcs};

    fn k2() -> UndirectedGraph {
        UndirectedGraph::new(2, [(0, 1)]).unwrap()
    }

    fn p2() -> UndirectedGraph {
        k2()
    }

    #[test]
    fn graph_validation() {
        assert_eq!(UndirectedGraph::new(2, [(1, 1)]).unwrap_err(), GadgetError::SelfLoop(1));
        assert_eq!(UndirectedGraph::new(2, [(0, 2)]).unwrap_err(), GadgetError::VertexOutOfRange(2));
        assert_eq!(UndirectedGraph::new(2, [(0, 1), (1, 0)]).unwrap().m(), 1);
    }

    #[test]
    fn clique_formulas() {
        assert_eq!(clique_heavy_weight(2), 18);
        assert_eq!(clique_budget(2), 75);
        let inst = gen_clique_instance(&k2(), 2).unwrap();
        assert_eq!(inst.budget(), 75);
        // Two gadgets of 2n^2 + 2 vertices, 2 a/b pairs, 4 c/d pairs.
        assert_eq!(inst.vertices().len(), 2 * 10 + 4 + 8);
        assert_eq!(inst.num_finite_arcs(), 14);
    }

    #[test]
    fn clique_oracle_examples() {
        assert!(brute_solve_weighted_arcs(&gen_clique_instance(&k2(), 2).unwrap()).unwrap());
        let empty = UndirectedGraph::new(2, []).unwrap();
        assert!(!brute_solve_weighted_arcs(&gen_clique_instance(&empty, 2).unwrap()).unwrap());
    }

    #[test]
    fn maxcut_examples() {
        let yes = gen_maxcut_skew_instance(&p2(), 1).unwrap();
        assert_eq!(yes.budget(), 7);
        assert!(brute_solve_weighted_arcs(&yes).unwrap());
        let no = gen_maxcut_skew_instance(&p2(), 2).unwrap();
        assert_eq!(no.budget(), 6);
        assert!(!brute_solve_weighted_arcs(&no).unwrap());

        let tri = UndirectedGraph::new(3, [(0, 1), (1, 2), (0, 2)]).unwrap();
        assert_eq!(tri.max_cut(), 2);
        assert!(brute_solve_weighted_arcs(&gen_maxcut_skew_instance(&tri, 2).unwrap()).unwrap());
        assert!(!brute_solve_weighted_arcs(&gen_maxcut_skew_instance(&tri, 3).unwrap()).unwrap());
    }

    #[test]
    fn skew_to_two_pairs_examples() {
        for (t, expect) in [(1, true), (2, false)] {
            let skew = gen_maxcut_skew_instance(&p2(), t).unwrap();
            let two = skew_to_two_pairs(&skew).unwrap();
            assert_eq!(two.arcs().len(), skew.arcs().len() + 1);
            assert_eq!(two.terminal_pairs().len(), 2);
            assert_eq!(brute_solve_weighted_arcs(&two).unwrap(), expect);
        }
        let two = skew_to_two_pairs(&gen_maxcut_skew_instance(&p2(), 1).unwrap()).unwrap();
        assert!(matches!(skew_to_two_pairs(&two), Err(GadgetError::NotSkewShaped(_))));
    }

    #[test]
    fn expansion_examples() {
        let one = |w, p| {
            let inst = WeightedArcInstance::new(vec![1, 2], vec![(1, 2, w)], vec![(1, 2)], p).unwrap();
            expand_to_vertex_instance(&inst).unwrap()
        };
        let g = one(ArcWeight::Finite(2), 1);
        assert_eq!(g.len(), 4);
        assert_eq!(g.out_neighbors(1).len(), 2);
        assert_eq!(one(ArcWeight::Infinite, 1).len(), 4);
    }

    #[test]
    fn expansion_copies_inner_vertices() {
        let inst = WeightedArcInstance::new(
            vec![1, 2, 3],
            vec![(1, 2, ArcWeight::Finite(1)), (2, 3, ArcWeight::Finite(2))],
            vec![(1, 3)],
            2,
        )
        .unwrap();
        let g = expand_to_vertex_instance(&inst).unwrap();
        // Vertex 2 plus 2 copies, 3 middle vertices.
        assert_eq!(g.len(), 3 + 2 + 3);
        assert_eq!(brute_solve(&g).unwrap().is_yes(), brute_solve_weighted_arcs(&inst).unwrap());
        assert!(brute_solve(&g).unwrap().is_yes());
        assert!(!brute_solve(&g.clone()).unwrap().cut().unwrap().contains(2));
    }
}
