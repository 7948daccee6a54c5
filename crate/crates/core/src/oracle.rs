//! Brute-force reference solvers.

use std::collections::{BTreeSet, HashSet, VecDeque};
use std::fmt;

use itertools::Itertools;
use thiserror::Error;

use crate::dag::{CutSet, DagError, DagInstance, Vertex};

/// Candidate limit for [`brute_solve`].
pub const MAX_CANDIDATES: u128 = 10_000_000;
/// Search-node limit for [`brute_solve_weighted_arcs`].
pub const MAX_SEARCH_NODES: u64 = 10_000_000;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OracleError {
    #[error("instance too large for brute force: {0}")]
    TooLarge(String),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Answer {
    Yes(CutSet),
    No,
}

impl Answer {
    pub fn is_yes(&self) -> bool {
        matches!(self, Answer::Yes(_))
    }

    pub fn cut(&self) -> Option<&CutSet> {
        match self {
            Answer::Yes(c) => Some(c),
            Answer::No => None,
        }
    }
}

fn binomial_sum(n: usize, k: usize) -> u128 {
    let mut total: u128 = 0;
    let mut term: u128 = 1;
    for j in 0..=k.min(n) {
        total = total.saturating_add(term);
        term = term.saturating_mul((n - j) as u128) / (j as u128 + 1);
    }
    total
}

/// Lexicographically minimum solution among those of minimum size, or `No`.
///
/// Candidates are enumerated by size and then in topological-lex order, so
/// the first multicut found is the lex-min one.
pub fn brute_solve(g: &DagInstance) -> Result<Answer, OracleError> {
    let free: Vec<usize> = (0..g.len()).filter(|&k| !g.terminal_mask()[k]).collect();
    let count = binomial_sum(free.len(), g.budget());
    if count > MAX_CANDIDATES {
        return Err(OracleError::TooLarge(format!(
            "{count} candidate sets over {} nonterminals",
            free.len()
        )));
    }
    let mut removed = vec![false; g.len()];
    for size in 0..=g.budget().min(free.len()) {
        for combo in free.iter().copied().combinations(size) {
            combo.iter().for_each(|&k| removed[k] = true);
            let ok = g.first_connected_pair(&removed).is_none();
            combo.iter().for_each(|&k| removed[k] = false);
            if ok {
                return Ok(Answer::Yes(combo.iter().map(|&k| g.id(k)).collect()));
            }
        }
    }
    Ok(Answer::No)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum ArcWeight {
    Finite(u64),
    Infinite,
}

impl fmt::Display for ArcWeight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ArcWeight::Finite(w) => write!(f, "{w}"),
            ArcWeight::Infinite => f.write_str("inf"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum WeightedError {
    #[error(transparent)]
    Graph(#[from] DagError),
    #[error("arc ({0}, {1}) has zero weight")]
    ZeroWeight(Vertex, Vertex),
    #[error("arc ({0}, {1}) is given twice")]
    DuplicateArc(Vertex, Vertex),
}

/// Arc-deletion multicut instance: delete finite arcs of total weight at most
/// `budget` so that no `s_i t_i`-path survives.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeightedArcInstance {
    vertices: Vec<Vertex>,
    arcs: Vec<(Vertex, Vertex, ArcWeight)>,
    pairs: Vec<(Vertex, Vertex)>,
    budget: u64,
}

impl WeightedArcInstance {
    /// Validates acyclicity and weights. Vertices and arcs are kept in the
    /// given order.
    pub fn new(
        vertices: Vec<Vertex>,
        arcs: Vec<(Vertex, Vertex, ArcWeight)>,
        pairs: Vec<(Vertex, Vertex)>,
        budget: u64,
    ) -> Result<Self, WeightedError> {
        let mut seen = HashSet::new();
        for &(u, v, w) in &arcs {
            if w == ArcWeight::Finite(0) {
                return Err(WeightedError::ZeroWeight(u, v));
            }
            if !seen.insert((u, v)) {
                return Err(WeightedError::DuplicateArc(u, v));
            }
        }
        DagInstance::build(
            vertices.iter().copied(),
            arcs.iter().map(|&(u, v, _)| (u, v)),
            pairs.iter().copied(),
            0,
        )?;
        Ok(Self {
            vertices,
            arcs,
            pairs,
            budget,
        })
    }

    pub fn vertices(&self) -> &[Vertex] {
        &self.vertices
    }

    pub fn arcs(&self) -> &[(Vertex, Vertex, ArcWeight)] {
        &self.arcs
    }

    pub fn terminal_pairs(&self) -> &[(Vertex, Vertex)] {
        &self.pairs
    }

    pub fn budget(&self) -> u64 {
        self.budget
    }

    pub fn num_finite_arcs(&self) -> usize {
        self.arcs
            .iter()
            .filter(|a| matches!(a.2, ArcWeight::Finite(_)))
            .count()
    }

    pub fn weight(&self, u: Vertex, v: Vertex) -> Option<ArcWeight> {
        self.arcs
            .iter()
            .find(|&&(a, b, _)| (a, b) == (u, v))
            .map(|a| a.2)
    }

    pub fn with_budget(&self, budget: u64) -> Self {
        Self {
            budget,
            ..self.clone()
        }
    }

    /// Copy with one extra arc and a new pair list.
    pub(crate) fn extended(
        &self,
        arc: (Vertex, Vertex, ArcWeight),
        pairs: Vec<(Vertex, Vertex)>,
    ) -> Result<Self, WeightedError> {
        let mut arcs = self.arcs.clone();
        arcs.push(arc);
        Self::new(self.vertices.clone(), arcs, pairs, self.budget)
    }
}

struct ArcSearch {
    n: usize,
    out: Vec<Vec<(usize, usize)>>,
    tails: Vec<usize>,
    weights: Vec<Option<u64>>,
    pairs: Vec<(usize, usize)>,
    failed: HashSet<Vec<u64>>,
    nodes: u64,
}

impl ArcSearch {
    /// A surviving `s t`-path minimizing the number of arcs that could still
    /// be deleted. Returns those arcs, or `None` when `s` cannot reach `t`.
    fn cheapest_path(&self, s: usize, t: usize, deleted: &[u64], left: u64) -> Option<Vec<usize>> {
        let candidate = |e: usize| matches!(self.weights[e], Some(w) if w <= left);
        let mut dist = vec![usize::MAX; self.n];
        let mut via = vec![usize::MAX; self.n];
        let mut queue = VecDeque::new();
        dist[s] = 0;
        queue.push_back(s);
        while let Some(u) = queue.pop_front() {
            for &(w, e) in &self.out[u] {
                if deleted[e / 64] >> (e % 64) & 1 == 1 {
                    continue;
                }
                let c = usize::from(candidate(e));
                if dist[u] + c < dist[w] {
                    dist[w] = dist[u] + c;
                    via[w] = e;
                    if c == 0 {
                        queue.push_front(w);
                    } else {
                        queue.push_back(w);
                    }
                }
            }
        }
        if dist[t] == usize::MAX {
            return None;
        }
        let mut arcs = Vec::new();
        let mut v = t;
        while v != s {
            let e = via[v];
            if candidate(e) {
                arcs.push(e);
            }
            v = self.tails[e];
        }
        Some(arcs)
    }

    fn search(&mut self, deleted: &mut Vec<u64>, left: u64) -> Result<bool, OracleError> {
        self.nodes += 1;
        if self.nodes > MAX_SEARCH_NODES {
            return Err(OracleError::TooLarge(format!(
                "weighted search exceeded {MAX_SEARCH_NODES} nodes"
            )));
        }
        if self.failed.contains(deleted) {
            return Ok(false);
        }
        let mut branch = None;
        for &(s, t) in &self.pairs {
            if s == t {
                return Ok(false);
            }
            if let Some(arcs) = self.cheapest_path(s, t, deleted, left) {
                if arcs.is_empty() {
                    return Ok(false);
                }
                if branch.as_ref().is_none_or(|b: &Vec<usize>| arcs.len() < b.len()) {
                    branch = Some(arcs);
                }
            }
        }
        let Some(arcs) = branch else {
            return Ok(true);
        };
        for e in arcs {
            let w = self.weights[e].expect("candidate arcs are finite");
            deleted[e / 64] |= 1 << (e % 64);
            let found = self.search(deleted, left - w)?;
            deleted[e / 64] &= !(1 << (e % 64));
            if found {
                return Ok(true);
            }
        }
        self.failed.insert(deleted.clone());
        Ok(false)
    }
}

/// Whether finite arcs of total weight at most the budget separate all pairs.
///
/// Branches on the deletable arcs of a surviving terminal path, memoizing
/// deletion sets already known to fail.
pub fn brute_solve_weighted_arcs(inst: &WeightedArcInstance) -> Result<bool, OracleError> {
    let index: std::collections::HashMap<Vertex, usize> = inst
        .vertices
        .iter()
        .enumerate()
        .map(|(k, &v)| (v, k))
        .collect();
    let n = inst.vertices.len();
    let mut out = vec![Vec::new(); n];
    let mut weights = Vec::with_capacity(inst.arcs.len());
    let mut tails = Vec::with_capacity(inst.arcs.len());
    for (e, &(u, v, w)) in inst.arcs.iter().enumerate() {
        out[index[&u]].push((index[&v], e));
        tails.push(index[&u]);
        weights.push(match w {
            ArcWeight::Finite(x) => Some(x),
            ArcWeight::Infinite => None,
        });
    }
    let pairs: Vec<(usize, usize)> = inst.pairs.iter().map(|(s, t)| (index[s], index[t])).collect();
    let mut search = ArcSearch {
        n,
        out,
        tails,
        weights,
        pairs,
        failed: HashSet::new(),
        nodes: 0,
    };
    let mut deleted = vec![0u64; inst.arcs.len().div_ceil(64).max(1)];
    search.search(&mut deleted, inst.budget)
}

/// Minimum multicut size by brute force, if it is at most `limit`.
pub fn min_multicut_size(g: &DagInstance, limit: usize) -> Result<Option<usize>, OracleError> {
    let free: Vec<usize> = (0..g.len()).filter(|&k| !g.terminal_mask()[k]).collect();
    if binomial_sum(free.len(), limit) > MAX_CANDIDATES {
        return Err(OracleError::TooLarge(format!("{} nonterminals", free.len())));
    }
    let mut removed = vec![false; g.len()];
    for size in 0..=limit.min(free.len()) {
        for combo in free.iter().copied().combinations(size) {
            combo.iter().for_each(|&k| removed[k] = true);
            let ok = g.first_connected_pair(&removed).is_none();
            combo.iter().for_each(|&k| removed[k] = false);
            if ok {
                return Ok(Some(size));
            }
        }
    }
    Ok(None)
}

/// All multicuts of exactly `size` vertices, in topological-lex order.
pub fn multicuts_of_size(g: &DagInstance, size: usize) -> Vec<BTreeSet<Vertex>> {
    let free: Vec<usize> = (0..g.len()).filter(|&k| !g.terminal_mask()[k]).collect();
    let mut removed = vec![false; g.len()];
    let mut found = Vec::new();
    for combo in free.iter().copied().combinations(size) {
        combo.iter().for_each(|&k| removed[k] = true);
        if g.first_connected_pair(&removed).is_none() {
            found.push(combo.iter().map(|&k| g.id(k)).collect());
        }
        combo.iter().for_each(|&k| removed[k] = false);
    }
    found
}
