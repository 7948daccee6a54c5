//! Immutable DAG multicut instances.
//!
//! A [`DagInstance`] owns a simple acyclic digraph with stable vertex IDs,
//! an ordered list of terminal pairs, a deletion budget and a fixed
//! topological order. Internally every vertex is addressed by its position in
//! that order, so every arc goes from a smaller to a larger position and all
//! reachability questions reduce to a single sweep.

use std::cmp::{Ordering, Reverse};
use std::collections::{BTreeMap, BTreeSet, BinaryHeap, HashMap};
use std::fmt;

use thiserror::Error;

/// Stable vertex identifier. IDs survive every transform.
pub type Vertex = u32;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DagError {
    #[error("the arcs contain a cycle through vertex {0}")]
    CycleDetected(Vertex),
    #[error("{context} references undeclared vertex {vertex}")]
    DanglingReference {
        vertex: Vertex,
        context: &'static str,
    },
    #[error("vertex {0} is declared twice")]
    DuplicateVertex(Vertex),
}

/// A set of nonterminal vertices proposed as a multicut.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CutSet(BTreeSet<Vertex>);

impl CutSet {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, v: Vertex) -> bool {
        self.0.contains(&v)
    }

    pub fn insert(&mut self, v: Vertex) -> bool {
        self.0.insert(v)
    }

    pub fn iter(&self) -> impl Iterator<Item = Vertex> + '_ {
        self.0.iter().copied()
    }

    pub fn as_set(&self) -> &BTreeSet<Vertex> {
        &self.0
    }

    pub fn into_set(self) -> BTreeSet<Vertex> {
        self.0
    }
}

impl FromIterator<Vertex> for CutSet {
    fn from_iter<I: IntoIterator<Item = Vertex>>(iter: I) -> Self {
        CutSet(iter.into_iter().collect())
    }
}

impl Extend<Vertex> for CutSet {
    fn extend<I: IntoIterator<Item = Vertex>>(&mut self, iter: I) {
        self.0.extend(iter);
    }
}

impl From<BTreeSet<Vertex>> for CutSet {
    fn from(set: BTreeSet<Vertex>) -> Self {
        CutSet(set)
    }
}

impl<'a> IntoIterator for &'a CutSet {
    type Item = &'a Vertex;
    type IntoIter = std::collections::btree_set::Iter<'a, Vertex>;

    fn into_iter(self) -> Self::IntoIter {
        self.0.iter()
    }
}

impl fmt::Display for CutSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (k, v) in self.0.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "}}")
    }
}

/// `src(G, v)` for every vertex: the source terminals with a path to `v`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SrcMap {
    map: BTreeMap<Vertex, BTreeSet<Vertex>>,
}

impl SrcMap {
    /// Sources reaching `v`; empty for unknown vertices.
    pub fn get(&self, v: Vertex) -> &BTreeSet<Vertex> {
        static EMPTY: BTreeSet<Vertex> = BTreeSet::new();
        self.map.get(&v).unwrap_or(&EMPTY)
    }

    pub fn iter(&self) -> impl Iterator<Item = (Vertex, &BTreeSet<Vertex>)> {
        self.map.iter().map(|(&v, s)| (v, s))
    }
}

/// Outcome of checking a candidate multicut.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum MulticutCheck {
    Valid,
    ContainsTerminal(Vertex),
    UnknownVertex(Vertex),
    /// Index of the first terminal pair still connected.
    Unseparated(usize),
}

impl MulticutCheck {
    pub fn is_valid(self) -> bool {
        self == MulticutCheck::Valid
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DagInstance {
    /// Vertex IDs listed in topological order.
    ids: Vec<Vertex>,
    pos: HashMap<Vertex, usize>,
    out: Vec<Vec<usize>>,
    inc: Vec<Vec<usize>>,
    pairs: Vec<(Vertex, Vertex)>,
    budget: usize,
    terminal: Vec<bool>,
}

impl DagInstance {
    /// Builds an instance, collapsing parallel arcs and fixing the
    /// topological order with Kahn's algorithm (smallest available ID first).
    pub fn build(
        vertices: impl IntoIterator<Item = Vertex>,
        arcs: impl IntoIterator<Item = (Vertex, Vertex)>,
        terminal_pairs: impl IntoIterator<Item = (Vertex, Vertex)>,
        budget: usize,
    ) -> Result<Self, DagError> {
        let mut declared = BTreeSet::new();
        for v in vertices {
            if !declared.insert(v) {
                return Err(DagError::DuplicateVertex(v));
            }
        }
        let mut succ: BTreeMap<Vertex, BTreeSet<Vertex>> =
            declared.iter().map(|&v| (v, BTreeSet::new())).collect();
        let mut indeg: BTreeMap<Vertex, usize> = declared.iter().map(|&v| (v, 0)).collect();
        for (u, v) in arcs {
            for x in [u, v] {
                if !declared.contains(&x) {
                    return Err(DagError::DanglingReference {
                        vertex: x,
                        context: "arc",
                    });
                }
            }
            if u == v {
                return Err(DagError::CycleDetected(u));
            }
            if succ.get_mut(&u).expect("declared").insert(v) {
                *indeg.get_mut(&v).expect("declared") += 1;
            }
        }
        let pairs: Vec<(Vertex, Vertex)> = terminal_pairs.into_iter().collect();
        for &(s, t) in &pairs {
            for x in [s, t] {
                if !declared.contains(&x) {
                    return Err(DagError::DanglingReference {
                        vertex: x,
                        context: "terminal pair",
                    });
                }
            }
        }

        let mut heap: BinaryHeap<Reverse<Vertex>> = indeg
            .iter()
            .filter(|&(_, &d)| d == 0)
            .map(|(&v, _)| Reverse(v))
            .collect();
        let mut order = Vec::with_capacity(declared.len());
        while let Some(Reverse(v)) = heap.pop() {
            order.push(v);
            for w in &succ[&v] {
                let d = indeg.get_mut(w).expect("declared");
                *d -= 1;
                if *d == 0 {
                    heap.push(Reverse(*w));
                }
            }
        }
        if order.len() < declared.len() {
            let stuck = indeg
                .iter()
                .find(|&(_, &d)| d > 0)
                .map(|(&v, _)| v)
                .expect("some vertex keeps positive in-degree");
            return Err(DagError::CycleDetected(stuck));
        }

        let pos: HashMap<Vertex, usize> = order.iter().enumerate().map(|(k, &v)| (v, k)).collect();
        let arcs = succ
            .iter()
            .flat_map(|(u, ws)| {
                let pos = &pos;
                ws.iter().map(move |w| (pos[u], pos[w]))
            })
            .collect::<Vec<_>>();
        Ok(Self::from_ordered(order, arcs, pairs, budget))
    }

    /// Assembles an instance from vertices already in topological order and
    /// arcs given as positions into that order.
    pub(crate) fn from_ordered(
        ids: Vec<Vertex>,
        arcs: impl IntoIterator<Item = (usize, usize)>,
        pairs: Vec<(Vertex, Vertex)>,
        budget: usize,
    ) -> Self {
        let n = ids.len();
        let pos: HashMap<Vertex, usize> = ids.iter().enumerate().map(|(k, &v)| (v, k)).collect();
        let mut out = vec![Vec::new(); n];
        let mut inc = vec![Vec::new(); n];
        for (u, v) in arcs {
            assert!(u < v, "arc ({}, {}) goes against the topological order", ids[u], ids[v]);
            out[u].push(v);
            inc[v].push(u);
        }
        for list in out.iter_mut().chain(inc.iter_mut()) {
            list.sort_unstable();
            list.dedup();
        }
        let mut terminal = vec![false; n];
        for &(s, t) in &pairs {
            terminal[pos[&s]] = true;
            terminal[pos[&t]] = true;
        }
        DagInstance {
            ids,
            pos,
            out,
            inc,
            pairs,
            budget,
            terminal,
        }
    }

    /// Derives a new instance on the surviving positions of `self`, keeping
    /// the induced topological order. `arcs` are positions in `self` and must
    /// avoid removed vertices.
    pub(crate) fn derive(
        &self,
        removed: &[bool],
        arcs: impl IntoIterator<Item = (usize, usize)>,
        budget: usize,
    ) -> Self {
        let mut remap = vec![usize::MAX; self.len()];
        let mut ids = Vec::with_capacity(self.len());
        for k in 0..self.len() {
            if !removed[k] {
                remap[k] = ids.len();
                ids.push(self.ids[k]);
            }
        }
        let arcs = arcs.into_iter().map(|(u, v)| {
            debug_assert!(!removed[u] && !removed[v]);
            (remap[u], remap[v])
        });
        Self::from_ordered(ids, arcs, self.pairs.clone(), budget)
    }

    pub fn len(&self) -> usize {
        self.ids.len()
    }

    pub fn is_empty(&self) -> bool {
        self.ids.is_empty()
    }

    pub fn budget(&self) -> usize {
        self.budget
    }

    pub fn num_pairs(&self) -> usize {
        self.pairs.len()
    }

    pub fn terminal_pairs(&self) -> &[(Vertex, Vertex)] {
        &self.pairs
    }

    /// Vertices in topological order.
    pub fn vertices(&self) -> &[Vertex] {
        &self.ids
    }

    pub fn contains(&self, v: Vertex) -> bool {
        self.pos.contains_key(&v)
    }

    /// Rank of `v` in the topological order.
    pub fn position(&self, v: Vertex) -> Option<usize> {
        self.pos.get(&v).copied()
    }

    pub fn is_terminal(&self, v: Vertex) -> bool {
        self.pos.get(&v).is_some_and(|&k| self.terminal[k])
    }

    pub fn nonterminals(&self) -> impl Iterator<Item = Vertex> + '_ {
        (0..self.len())
            .filter(|&k| !self.terminal[k])
            .map(|k| self.ids[k])
    }

    pub fn sources(&self) -> BTreeSet<Vertex> {
        self.pairs.iter().map(|&(s, _)| s).collect()
    }

    pub fn sinks(&self) -> BTreeSet<Vertex> {
        self.pairs.iter().map(|&(_, t)| t).collect()
    }

    pub fn max_id(&self) -> Option<Vertex> {
        self.ids.iter().copied().max()
    }

    pub fn num_arcs(&self) -> usize {
        self.out.iter().map(Vec::len).sum()
    }

    /// Arcs sorted by `(tail, head)` ID.
    pub fn arcs(&self) -> Vec<(Vertex, Vertex)> {
        let mut arcs: Vec<_> = self.arc_positions().map(|(u, v)| (self.ids[u], self.ids[v])).collect();
        arcs.sort_unstable();
        arcs
    }

    pub fn has_arc(&self, u: Vertex, v: Vertex) -> bool {
        match (self.position(u), self.position(v)) {
            (Some(a), Some(b)) => self.out[a].binary_search(&b).is_ok(),
            _ => false,
        }
    }

    pub fn out_neighbors(&self, v: Vertex) -> BTreeSet<Vertex> {
        self.position(v)
            .map(|k| self.out[k].iter().map(|&w| self.ids[w]).collect())
            .unwrap_or_default()
    }

    pub fn in_neighbors(&self, v: Vertex) -> BTreeSet<Vertex> {
        self.position(v)
            .map(|k| self.inc[k].iter().map(|&w| self.ids[w]).collect())
            .unwrap_or_default()
    }

    /// Indices of pairs whose two endpoints coincide. Such pairs can never be
    /// separated; normalization turns them into an explicit direct arc.
    pub fn degenerate_pairs(&self) -> Vec<usize> {
        (0..self.pairs.len())
            .filter(|&i| self.pairs[i].0 == self.pairs[i].1)
            .collect()
    }

    /// True when all terminals are pairwise distinct, sources have in-degree 0
    /// and sinks have out-degree 0.
    pub fn is_normalized(&self) -> bool {
        let mut seen = BTreeSet::new();
        for &(s, t) in &self.pairs {
            if !seen.insert(s) || !seen.insert(t) {
                return false;
            }
        }
        self.pairs
            .iter()
            .all(|&(s, t)| self.inc[self.pos[&s]].is_empty() && self.out[self.pos[&t]].is_empty())
    }

    /// All vertices with a path from `from` in `G - deleted`. Reflexive;
    /// vertices absent from the instance are ignored.
    pub fn reachable(
        &self,
        from: impl IntoIterator<Item = Vertex>,
        deleted: &CutSet,
    ) -> BTreeSet<Vertex> {
        let removed = self.mask_of(deleted.iter());
        let start: Vec<usize> = from.into_iter().filter_map(|v| self.position(v)).collect();
        let mask = self.forward_mask(&start, &removed);
        self.ids_of(&mask)
    }

    pub fn src_map(&self) -> SrcMap {
        let mut map: BTreeMap<Vertex, BTreeSet<Vertex>> =
            self.ids.iter().map(|&v| (v, BTreeSet::new())).collect();
        let none = vec![false; self.len()];
        for s in self.sources() {
            let mask = self.forward_mask(&[self.pos[&s]], &none);
            for (k, _) in mask.iter().enumerate().filter(|(_, &m)| m) {
                map.get_mut(&self.ids[k]).expect("vertex").insert(s);
            }
        }
        SrcMap { map }
    }

    /// `V(G, S)`: nonterminals whose source set is exactly `sources`.
    pub fn vertices_with_src(&self, sources: &BTreeSet<Vertex>) -> BTreeSet<Vertex> {
        let src = self.src_map();
        self.nonterminals()
            .filter(|&v| src.get(v) == sources)
            .collect()
    }

    /// Lexicographic comparison of two vertex sets under the topological
    /// order; a strict prefix is smaller.
    ///
    /// # Panics
    /// If either set mentions a vertex outside the instance.
    pub fn lex_compare(&self, a: &BTreeSet<Vertex>, b: &BTreeSet<Vertex>) -> Ordering {
        self.sorted_positions(a).cmp(&self.sorted_positions(b))
    }

    /// Sorts vertices by topological rank.
    pub fn in_topological_order(&self, set: impl IntoIterator<Item = Vertex>) -> Vec<Vertex> {
        let mut v: Vec<Vertex> = set.into_iter().collect();
        v.sort_by_key(|x| self.position(*x).unwrap_or(usize::MAX));
        v
    }

    pub fn check_multicut(&self, cut: &CutSet) -> MulticutCheck {
        for v in cut.iter() {
            match self.position(v) {
                None => return MulticutCheck::UnknownVertex(v),
                Some(k) if self.terminal[k] => return MulticutCheck::ContainsTerminal(v),
                Some(_) => {}
            }
        }
        let removed = self.mask_of(cut.iter());
        match self.first_connected_pair(&removed) {
            Some(i) => MulticutCheck::Unseparated(i),
            None => MulticutCheck::Valid,
        }
    }

    /// Whether `cut` is a multicut. The budget is not checked.
    pub fn is_multicut(&self, cut: &CutSet) -> bool {
        self.check_multicut(cut).is_valid()
    }

    // ----- position-level helpers shared with the rest of the crate -----

    pub(crate) fn id(&self, k: usize) -> Vertex {
        self.ids[k]
    }

    pub(crate) fn out_pos(&self, k: usize) -> &[usize] {
        &self.out[k]
    }

    pub(crate) fn in_pos(&self, k: usize) -> &[usize] {
        &self.inc[k]
    }

    pub(crate) fn terminal_mask(&self) -> &[bool] {
        &self.terminal
    }

    pub(crate) fn pair_pos(&self, i: usize) -> (usize, usize) {
        let (s, t) = self.pairs[i];
        (self.pos[&s], self.pos[&t])
    }

    pub(crate) fn arc_positions(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.out
            .iter()
            .enumerate()
            .flat_map(|(u, ws)| ws.iter().map(move |&w| (u, w)))
    }

    pub(crate) fn mask_of(&self, vs: impl IntoIterator<Item = Vertex>) -> Vec<bool> {
        let mut mask = vec![false; self.len()];
        for v in vs {
            if let Some(k) = self.position(v) {
                mask[k] = true;
            }
        }
        mask
    }

    pub(crate) fn ids_of(&self, mask: &[bool]) -> BTreeSet<Vertex> {
        (0..self.len()).filter(|&k| mask[k]).map(|k| self.ids[k]).collect()
    }

    /// Positions reachable from `start` avoiding `removed`, in one sweep.
    pub(crate) fn forward_mask(&self, start: &[usize], removed: &[bool]) -> Vec<bool> {
        let mut seen = vec![false; self.len()];
        for &k in start {
            if !removed[k] {
                seen[k] = true;
            }
        }
        let first = start.iter().copied().min().unwrap_or(self.len());
        for k in first..self.len() {
            if !seen[k] && !removed[k] && self.inc[k].iter().any(|&j| seen[j]) {
                seen[k] = true;
            }
        }
        seen
    }

    /// Positions that can reach `targets` avoiding `removed`.
    pub(crate) fn backward_mask(&self, targets: &[usize], removed: &[bool]) -> Vec<bool> {
        let mut seen = vec![false; self.len()];
        for &k in targets {
            if !removed[k] {
                seen[k] = true;
            }
        }
        let last = targets.iter().copied().max().map_or(0, |m| m + 1);
        for k in (0..last).rev() {
            if !seen[k] && !removed[k] && self.out[k].iter().any(|&j| seen[j]) {
                seen[k] = true;
            }
        }
        seen
    }

    pub(crate) fn first_connected_pair(&self, removed: &[bool]) -> Option<usize> {
        (0..self.pairs.len()).find(|&i| {
            let (s, t) = self.pair_pos(i);
            s == t || self.forward_mask(&[s], removed)[t]
        })
    }

    /// Bit `i` of entry `k` is set when `s_i` reaches position `k`.
    pub(crate) fn src_masks(&self) -> Vec<u64> {
        assert!(self.pairs.len() <= 64, "source masks support at most 64 pairs");
        let none = vec![false; self.len()];
        let mut masks = vec![0u64; self.len()];
        for i in 0..self.pairs.len() {
            let (s, _) = self.pair_pos(i);
            let reach = self.forward_mask(&[s], &none);
            for k in 0..self.len() {
                if reach[k] {
                    masks[k] |= 1 << i;
                }
            }
        }
        masks
    }

    fn sorted_positions(&self, set: &BTreeSet<Vertex>) -> Vec<usize> {
        let mut ps: Vec<usize> = set
            .iter()
            .map(|v| self.position(*v).unwrap_or_else(|| panic!("vertex {v} is not in the instance")))
            .collect();
        ps.sort_unstable();
        ps
    }

    /// Canonical byte key of the graph and budget (pairs are shared by every
    /// instance derived from a common root).
    pub(crate) fn canonical_key(&self) -> Vec<u32> {
        let mut key = Vec::with_capacity(2 + self.len() + 2 * self.num_arcs());
        key.push(self.budget as u32);
        key.push(self.len() as u32);
        key.extend_from_slice(&self.ids);
        for (u, v) in self.arc_positions() {
            key.push(u as u32);
            key.push(v as u32);
        }
        key
    }
}
