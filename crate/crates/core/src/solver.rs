//! The branching step and the recursive search built on it.

use std::collections::{BTreeMap, BTreeSet, HashMap, HashSet};
use std::sync::atomic::{AtomicUsize, Ordering};
use std::sync::Mutex;

use rayon::prelude::*;
use serde::Serialize;
use thiserror::Error;

use crate::dag::{CutSet, DagInstance, Vertex};
use crate::oracle::Answer;
use crate::separators::{exact_potential, pair_cut_upto, CutSize};
use crate::shadows::{shadow_family, ShadowError, ShadowStrategy};
use crate::transforms::{degree_branch, delete_futile, kill, normalize, torso_positions};

/// Upper limit on the number of terminal pairs the solver accepts.
pub const MAX_PAIRS: usize = 16;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SolveError {
    #[error("solver produced {0}, which is not a valid multicut")]
    VerificationFailed(CutSet),
    #[error("internal invariant violated: {0}")]
    InvariantViolated(String),
    #[error("{0} terminal pairs exceed the supported {MAX_PAIRS}")]
    TooManyPairs(usize),
    #[error(transparent)]
    Shadow(#[from] ShadowError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Stage {
    DegRed1,
    Magic,
    DegRed2,
    Final,
}

impl Stage {
    pub fn name(self) -> &'static str {
        match self {
            Stage::DegRed1 => "deg-red-1",
            Stage::Magic => "magic",
            Stage::DegRed2 => "deg-red-2",
            Stage::Final => "final",
        }
    }
}

/// A node of the search tree.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BranchNode {
    pub instance: DagInstance,
    /// Vertices killed on the way from the root.
    pub kills_so_far: CutSet,
    pub depth: usize,
    pub label: String,
}

impl BranchNode {
    pub fn root(instance: DagInstance) -> Self {
        BranchNode {
            instance,
            kills_so_far: CutSet::new(),
            depth: 0,
            label: "root".into(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum StepResult {
    No,
    YesLeaf,
    Children(Vec<BranchNode>),
}

#[derive(Debug, Clone, PartialEq, Eq, Default, Serialize)]
pub struct SolveTrace {
    pub nodes_expanded: u64,
    /// Deepest node that passed the cut-size check.
    pub max_depth: usize,
    pub children_per_stage: BTreeMap<String, u64>,
    /// Family size to number of times a family of that size was built.
    pub shadow_family_sizes: BTreeMap<usize, u64>,
    /// Number of parent/child potential comparisons made.
    pub potential_checks: u64,
    /// Smallest potential drop over all compared edges.
    pub min_potential_drop: Option<i64>,
    pub potential_violations: u64,
    pub root_potential: Option<i64>,
    pub subcases_skipped: u64,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SolveOutcome {
    pub answer: Answer,
    pub stats: SolveTrace,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct SolverConfig {
    pub strategy: ShadowStrategy,
    /// Explore children on the rayon pool. Results do not depend on it.
    pub parallel: bool,
}

impl SolverConfig {
    pub fn new(strategy: ShadowStrategy) -> Self {
        SolverConfig {
            strategy,
            parallel: false,
        }
    }

    pub fn parallel(mut self, on: bool) -> Self {
        self.parallel = on;
        self
    }
}

/// Whether `cut` is a multicut of size at most the budget.
pub fn verify(g: &DagInstance, cut: &CutSet) -> bool {
    cut.len() <= g.budget() && g.is_multicut(cut)
}

struct Child {
    instance: DagInstance,
    kills: Vec<Vertex>,
    stage: Stage,
    label: String,
}

#[derive(Default)]
struct StepStats {
    per_stage: BTreeMap<Stage, u64>,
    family_sizes: Vec<usize>,
    skipped: u64,
}

enum StepKind {
    No,
    YesLeaf,
    Children(Vec<Child>),
}

fn cuts_within_budget(g: &DagInstance) -> bool {
    (0..g.num_pairs()).all(|i| pair_cut_upto(g, i, g.budget()) != CutSize::Infinite)
}

fn format_set(g: &DagInstance, vs: impl IntoIterator<Item = Vertex>) -> String {
    let vs = g.in_topological_order(vs);
    format!("{{{}}}", vs.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(","))
}

/// One branching step on a normalized instance. Children come in stage
/// order within each subcase, subcases by ascending source mask, duplicates
/// (same graph and budget) dropped after their first appearance.
fn step(input: &DagInstance, strategy: ShadowStrategy) -> Result<(StepKind, StepStats), SolveError> {
    let mut stats = StepStats::default();
    let g = delete_futile(input);
    let p = g.budget();
    let r = g.num_pairs();

    // (a) large cut
    if !cuts_within_budget(&g) {
        return Ok((StepKind::No, stats));
    }
    // (b) already separated
    let none = vec![false; g.len()];
    if g.first_connected_pair(&none).is_none() {
        return Ok((StepKind::YesLeaf, stats));
    }
    if r > MAX_PAIRS {
        return Err(SolveError::TooManyPairs(r));
    }

    let src = g.src_masks();
    let term = g.terminal_mask();
    let sources: Vec<Vertex> = (0..r).map(|i| g.terminal_pairs()[i].0).collect();
    let mut children: Vec<Child> = Vec::new();
    let mut seen_children: HashSet<Vec<u32>> = HashSet::new();
    let mut push = |children: &mut Vec<Child>, stats: &mut StepStats, c: Child| {
        if seen_children.insert(c.instance.canonical_key()) {
            *stats.per_stage.entry(c.stage).or_default() += 1;
            children.push(c);
        }
    };

    // (c) subcases S
    for s_mask in 1u64..(1u64 << r) {
        let v_gs: HashSet<Vertex> = (0..g.len())
            .filter(|&k| !term[k] && src[k] == s_mask)
            .map(|k| g.id(k))
            .collect();
        if v_gs.is_empty() {
            continue;
        }
        let s_label = format_set(&g, (0..r).filter(|i| s_mask >> i & 1 == 1).map(|i| sources[i]));

        // (d) bypass vertices seen by a proper subset of S
        let below: Vec<bool> = (0..g.len())
            .map(|k| !term[k] && src[k] & !s_mask == 0 && src[k] != s_mask)
            .collect();
        let g1 = torso_positions(&g, &below);
        if !cuts_within_budget(&g1) {
            stats.skipped += 1;
            continue;
        }

        // (e) first degree branching
        let deg1 = degree_branch(&g1).map_err(|e| SolveError::InvariantViolated(format!("deg-red-1: {e}")))?;
        for c in deg1.children {
            let label = format!("S{s_label}/deg-red-1/pair {}/vertex {}", c.pair + 1, c.vertex);
            push(&mut children, &mut stats, Child {
                instance: c.instance,
                kills: Vec::new(),
                stage: Stage::DegRed1,
                label,
            });
        }
        let g2 = deg1.kept;

        // (f) src check, then drop vertices on no terminal path
        let src2 = g2.src_masks();
        for (k, &src) in src2.iter().enumerate() {
            if v_gs.contains(&g2.id(k)) && src != 0 && src != s_mask {
                return Err(SolveError::InvariantViolated(format!(
                    "vertex {} of V(G,S) changed its source set after degree reduction",
                    g2.id(k)
                )));
            }
        }
        let g3 = delete_futile(&g2);

        // (g) shadow removal
        let family = shadow_family(&g3, strategy)?;
        stats.family_sizes.push(family.len());
        let mut near_sources = vec![false; g3.len()];
        for i in 0..r {
            for &w in g3.out_pos(g3.pair_pos(i).0) {
                near_sources[w] = true;
            }
        }
        let mut seen_shadows: HashSet<Vec<bool>> = HashSet::new();
        for (a_idx, a) in family.sets.iter().enumerate() {
            let mut bypassed = g3.mask_of(a.iter().copied());
            for k in 0..g3.len() {
                bypassed[k] &= !near_sources[k];
            }
            if !seen_shadows.insert(bypassed.clone()) {
                continue;
            }
            let g4 = torso_positions(&g3, &bypassed);
            if !cuts_within_budget(&g4) {
                stats.skipped += 1;
                continue;
            }
            let case = format!("S{s_label}/A#{a_idx}");

            // (h) magic
            let term4 = g4.terminal_mask();
            let mut source4 = vec![false; g4.len()];
            for i in 0..r {
                source4[g4.pair_pos(i).0] = true;
            }
            let mut after_source = vec![false; g4.len()];
            for i in 0..r {
                for &w in g4.out_pos(g4.pair_pos(i).0) {
                    after_source[w] = true;
                }
            }
            for (k, &after) in after_source.iter().enumerate() {
                if !after || !v_gs.contains(&g4.id(k)) {
                    continue;
                }
                let ins: Vec<usize> = g4.in_pos(k).iter().copied().filter(|&w| !term4[w]).collect();
                if ins.is_empty() || ins.len() > g4.budget() {
                    continue;
                }
                let mut h = g4.clone();
                let mut killed = Vec::with_capacity(ins.len());
                for &w in &ins {
                    let id = g4.id(w);
                    h = kill(&h, id).expect("nonterminal within budget");
                    killed.push(id);
                }
                let v = g4.id(k);
                let hk = h.position(v).expect("v survives its in-neighbours");
                let mut mask = vec![false; h.len()];
                mask[hk] = true;
                let label = format!("{case}/magic/vertex {v}");
                push(&mut children, &mut stats, Child {
                    instance: torso_positions(&h, &mask),
                    kills: killed,
                    stage: Stage::Magic,
                    label,
                });
            }

            // (i) flatten V(G,S)
            let flat: Vec<bool> = (0..g4.len()).map(|k| v_gs.contains(&g4.id(k))).collect();
            let mut arcs: Vec<(usize, usize)> = g4.arc_positions().filter(|&(_, w)| !flat[w]).collect();
            for i in 0..r {
                if s_mask >> i & 1 == 1 {
                    let s = g4.pair_pos(i).0;
                    arcs.extend((0..g4.len()).filter(|&k| flat[k]).map(|k| (s, k)));
                }
            }
            let g5 = g4.derive(&vec![false; g4.len()], arcs, g4.budget());
            if !cuts_within_budget(&g5) {
                stats.skipped += 1;
                continue;
            }

            // (j) second degree branching
            let deg2 = degree_branch(&g5).map_err(|e| SolveError::InvariantViolated(format!("deg-red-2: {e}")))?;
            for c in deg2.children {
                let label = format!("{case}/deg-red-2/pair {}/vertex {}", c.pair + 1, c.vertex);
                push(&mut children, &mut stats, Child {
                    instance: c.instance,
                    kills: Vec::new(),
                    stage: Stage::DegRed2,
                    label,
                });
            }

            // (k) drop vertices on no terminal path
            let g7 = delete_futile(&deg2.kept);
            let finals: Vec<Vertex> = g7.vertices().iter().copied().filter(|v| v_gs.contains(v)).collect();
            if finals.len() > r * p {
                return Err(SolveError::InvariantViolated(format!(
                    "{} candidates left for the final branching, more than r*p = {}",
                    finals.len(),
                    r * p
                )));
            }

            // (l) final kills
            for v in finals {
                if g7.budget() == 0 {
                    break;
                }
                let label = format!("{case}/final/vertex {v}");
                push(&mut children, &mut stats, Child {
                    instance: kill(&g7, v).expect("nonterminal"),
                    kills: vec![v],
                    stage: Stage::Final,
                    label,
                });
            }
        }
    }
    Ok((StepKind::Children(children), stats))
}

/// One branching step applied to `node`. The instance must be normalized.
pub fn branching_step(node: &BranchNode, strategy: ShadowStrategy) -> Result<StepResult, SolveError> {
    let (kind, _) = step(&node.instance, strategy)?;
    Ok(match kind {
        StepKind::No => StepResult::No,
        StepKind::YesLeaf => StepResult::YesLeaf,
        StepKind::Children(cs) => StepResult::Children(
            cs.into_iter()
                .map(|c| {
                    let mut kills = node.kills_so_far.clone();
                    kills.extend(c.kills);
                    BranchNode {
                        instance: c.instance,
                        kills_so_far: kills,
                        depth: node.depth + 1,
                        label: c.label,
                    }
                })
                .collect(),
        ),
    })
}

// ----- recursive search -----

#[derive(Clone, Default)]
struct Tally {
    nodes: u64,
    /// Depth below this node of the deepest node passing the cut check.
    depth: Option<usize>,
    per_stage: BTreeMap<Stage, u64>,
    family_sizes: BTreeMap<usize, u64>,
    checks: u64,
    min_drop: Option<i64>,
    violations: u64,
    skipped: u64,
}

impl Tally {
    fn absorb(&mut self, child: &Tally) {
        self.nodes = self.nodes.saturating_add(child.nodes);
        if let Some(d) = child.depth {
            self.depth = Some(self.depth.unwrap_or(0).max(d + 1));
        }
        for (&k, &v) in &child.per_stage {
            let e = self.per_stage.entry(k).or_default();
            *e = e.saturating_add(v);
        }
        for (&k, &v) in &child.family_sizes {
            let e = self.family_sizes.entry(k).or_default();
            *e = e.saturating_add(v);
        }
        self.checks = self.checks.saturating_add(child.checks);
        self.min_drop = match (self.min_drop, child.min_drop) {
            (Some(a), Some(b)) => Some(a.min(b)),
            (a, b) => a.or(b),
        };
        self.violations = self.violations.saturating_add(child.violations);
        self.skipped = self.skipped.saturating_add(child.skipped);
    }
}

#[derive(Clone)]
struct NodeResult {
    /// Kills below this node, when a YES leaf was reached.
    cut: Option<Vec<Vertex>>,
    tally: Tally,
}

struct Scope<'a> {
    first_yes: AtomicUsize,
    up: Option<(&'a Scope<'a>, usize)>,
}

impl Scope<'_> {
    fn cancelled(&self) -> bool {
        let mut link = self.up;
        while let Some((scope, idx)) = link {
            if scope.first_yes.load(Ordering::Relaxed) < idx {
                return true;
            }
            link = scope.up;
        }
        false
    }
}

struct Search {
    strategy: ShadowStrategy,
    parallel: bool,
    memo: Mutex<HashMap<Vec<u32>, NodeResult>>,
}

impl Search {
    /// `None` when a sibling of some ancestor already found a YES.
    fn node(&self, g: &DagInstance, up: Option<(&Scope<'_>, usize)>) -> Result<Option<NodeResult>, SolveError> {
        let key = g.canonical_key();
        if let Some(hit) = self.memo.lock().expect("memo lock").get(&key) {
            return Ok(Some(hit.clone()));
        }
        let scope = Scope {
            first_yes: AtomicUsize::new(usize::MAX),
            up,
        };
        if scope.cancelled() {
            return Ok(None);
        }

        let (kind, stats) = step(g, self.strategy)?;
        let mut tally = Tally {
            nodes: 1,
            per_stage: stats.per_stage,
            skipped: stats.skipped,
            ..Tally::default()
        };
        for size in stats.family_sizes {
            *tally.family_sizes.entry(size).or_default() += 1;
        }
        let result = match kind {
            StepKind::No => NodeResult { cut: None, tally },
            StepKind::YesLeaf => {
                tally.depth = Some(0);
                NodeResult {
                    cut: Some(Vec::new()),
                    tally,
                }
            }
            StepKind::Children(children) => {
                tally.depth = Some(0);
                let parent = exact_potential(&delete_futile(g)).expect("feasible after the cut check");
                for c in &children {
                    tally.checks += 1;
                    if let Some(q) = exact_potential(&c.instance) {
                        let drop = parent - q;
                        tally.min_drop = Some(tally.min_drop.map_or(drop, |m| m.min(drop)));
                        if drop <= 0 {
                            tally.violations += 1;
                        }
                    }
                }
                match self.children(&children, &scope)? {
                    None => return Ok(None),
                    Some((cut, subs)) => {
                        for t in &subs {
                            tally.absorb(t);
                        }
                        NodeResult { cut, tally }
                    }
                }
            }
        };
        self.memo.lock().expect("memo lock").insert(key, result.clone());
        Ok(Some(result))
    }

    /// Explores children in order up to the first YES. Returns the combined
    /// cut and the tallies of every child up to and including that one.
    #[allow(clippy::type_complexity)]
    fn children(
        &self,
        children: &[Child],
        scope: &Scope<'_>,
    ) -> Result<Option<(Option<Vec<Vertex>>, Vec<Tally>)>, SolveError> {
        let results: Vec<Result<Option<NodeResult>, SolveError>> = if self.parallel && children.len() > 1 {
            children
                .par_iter()
                .enumerate()
                .map(|(idx, c)| {
                    let r = self.node(&c.instance, Some((scope, idx)));
                    if matches!(&r, Ok(Some(res)) if res.cut.is_some()) {
                        scope.first_yes.fetch_min(idx, Ordering::Relaxed);
                    }
                    r
                })
                .collect()
        } else {
            let mut out = Vec::with_capacity(children.len());
            for (idx, c) in children.iter().enumerate() {
                let r = self.node(&c.instance, Some((scope, idx)));
                let stop = matches!(&r, Ok(Some(res)) if res.cut.is_some()) || !matches!(&r, Ok(Some(_)));
                out.push(r);
                if stop {
                    break;
                }
            }
            out
        };

        let mut tallies = Vec::new();
        for (idx, r) in results.into_iter().enumerate() {
            match r? {
                None => return Ok(None),
                Some(res) => {
                    tallies.push(res.tally);
                    if let Some(mut below) = res.cut {
                        below.extend(children[idx].kills.iter().copied());
                        return Ok(Some((Some(below), tallies)));
                    }
                }
            }
        }
        Ok(Some((None, tallies)))
    }
}

/// Decides the instance. The answer's cut uses vertex IDs of `instance` and
/// is checked with [`verify`] before it is returned.
pub fn solve(instance: &DagInstance, config: SolverConfig) -> Result<SolveOutcome, SolveError> {
    let root = if instance.is_normalized() {
        instance.clone()
    } else {
        normalize(instance)
    };
    let search = Search {
        strategy: config.strategy,
        parallel: config.parallel,
        memo: Mutex::new(HashMap::new()),
    };
    let res = search
        .node(&root, None)?
        .expect("the root is never cancelled");

    let t = res.tally;
    let stats = SolveTrace {
        nodes_expanded: t.nodes,
        max_depth: t.depth.unwrap_or(0),
        children_per_stage: t.per_stage.iter().map(|(s, &n)| (s.name().to_string(), n)).collect(),
        shadow_family_sizes: t.family_sizes,
        potential_checks: t.checks,
        min_potential_drop: t.min_drop,
        potential_violations: t.violations,
        root_potential: exact_potential(&root),
        subcases_skipped: t.skipped,
    };
    if stats.potential_violations > 0 {
        return Err(SolveError::InvariantViolated(format!(
            "{} branches did not decrease the potential",
            stats.potential_violations
        )));
    }
    let bound = (instance.num_pairs() + 1) * instance.budget();
    if stats.max_depth > bound {
        return Err(SolveError::InvariantViolated(format!(
            "search depth {} exceeds (r+1)p = {bound}",
            stats.max_depth
        )));
    }

    let answer = match res.cut {
        None => Answer::No,
        Some(kills) => {
            let original: BTreeSet<Vertex> = instance.nonterminals().collect();
            let cut: CutSet = kills.into_iter().filter(|v| original.contains(v)).collect();
            if !verify(instance, &cut) {
                return Err(SolveError::VerificationFailed(cut));
            }
            Answer::Yes(cut)
        }
    };
    Ok(SolveOutcome { answer, stats })
}
