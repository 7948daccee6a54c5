mod common;

use std::cmp::Ordering;
use std::collections::BTreeSet;

use dagmc::dag::{CutSet, DagInstance, Vertex};
use dagmc::format::{self, ParsedInstance};
use dagmc::gadgets::{expand_to_vertex_instance, UndirectedGraph};
use dagmc::oracle::{brute_solve, brute_solve_weighted_arcs, Answer, ArcWeight, WeightedArcInstance};
use dagmc::separators::{is_important_separator, min_separator, pair_cut, potential, CutSize, Potential};
use dagmc::shadows::{shadow_family, source_shadow, ShadowStrategy};
use dagmc::solver::{solve, verify, SolverConfig};
use dagmc::transforms::{bypass, degree_branch, kill, normalize, torso};
use itertools::Itertools;
use proptest::prelude::*;
use proptest::sample::subsequence;

type Arcs = Vec<(Vertex, Vertex)>;

/// Shuffled hidden order plus forward arcs.
fn arb_dag(max_n: usize) -> impl Strategy<Value = (Vec<Vertex>, Arcs)> {
    (2..=max_n)
        .prop_flat_map(|n| {
            (
                Just((1..=n as Vertex).collect::<Vec<_>>()).prop_shuffle(),
                prop::collection::vec(prop::bool::weighted(0.4), n * (n - 1) / 2),
            )
        })
        .prop_map(|(order, bits)| {
            let n = order.len();
            let arcs = (0..n)
                .tuple_combinations()
                .zip(bits)
                .filter(|&(_, b)| b)
                .map(|((a, b), _)| (order[a], order[b]))
                .collect();
            (order, arcs)
        })
}

fn arb_instance(max_n: usize, max_r: usize, max_p: usize) -> impl Strategy<Value = DagInstance> {
    (
        arb_dag(max_n),
        prop::collection::vec((0usize..64, 0usize..64), 1..=max_r),
        0..=max_p,
    )
        .prop_map(|((order, arcs), picks, p)| {
            let n = order.len();
            let mut pairs: Vec<_> = picks
                .into_iter()
                .map(|(a, b)| (a % n, b % n))
                .filter(|(a, b)| a != b)
                .map(|(a, b)| (order[a.min(b)], order[a.max(b)]))
                .collect();
            if pairs.is_empty() {
                pairs.push((order[0], order[n - 1]));
            }
            DagInstance::build(order, arcs, pairs, p).unwrap()
        })
}

fn arb_normalized(max_n: usize, max_r: usize, max_p: usize) -> impl Strategy<Value = DagInstance> {
    any::<u64>().prop_map(move |seed| common::random_normalized(&mut common::rng(seed), max_n, max_r, max_p))
}

/// Instance together with two disjoint non-empty vertex sets.
fn arb_sides(max_n: usize) -> impl Strategy<Value = (DagInstance, BTreeSet<Vertex>, BTreeSet<Vertex>)> {
    (arb_instance(max_n, 2, 0), any::<u64>(), any::<u64>()).prop_filter_map("empty side", |(g, a, b)| {
        let vs = g.vertices().to_vec();
        let x: BTreeSet<Vertex> = vs.iter().enumerate().filter(|(k, _)| a >> k & 1 == 1).map(|(_, &v)| v).collect();
        let y: BTreeSet<Vertex> = vs
            .iter()
            .enumerate()
            .filter(|(k, v)| b >> k & 1 == 1 && !x.contains(v))
            .map(|(_, &v)| v)
            .collect();
        (!x.is_empty() && !y.is_empty()).then_some((g, x, y))
    })
}

fn reach(arcs: &[(Vertex, Vertex)], from: &BTreeSet<Vertex>, deleted: &BTreeSet<Vertex>) -> BTreeSet<Vertex> {
    let mut seen: BTreeSet<Vertex> = from.iter().copied().filter(|v| !deleted.contains(v)).collect();
    let mut stack: Vec<Vertex> = seen.iter().copied().collect();
    while let Some(u) = stack.pop() {
        for &(a, b) in arcs {
            if a == u && !deleted.contains(&b) && seen.insert(b) {
                stack.push(b);
            }
        }
    }
    seen
}

fn subsets(items: &[Vertex], max: usize) -> impl Iterator<Item = BTreeSet<Vertex>> + '_ {
    (0..=max.min(items.len())).flat_map(move |k| items.iter().copied().combinations(k).map(BTreeSet::from_iter))
}

fn terminals(g: &DagInstance) -> BTreeSet<Vertex> {
    g.terminal_pairs().iter().flat_map(|&(s, t)| [s, t]).collect()
}

fn brute_multicut(g: &DagInstance, z: &BTreeSet<Vertex>) -> bool {
    let arcs = g.arcs();
    z.is_disjoint(&terminals(g))
        && g
            .terminal_pairs()
            .iter()
            .all(|&(s, t)| !reach(&arcs, &BTreeSet::from([s]), z).contains(&t))
}

fn deletable(g: &DagInstance, x: &BTreeSet<Vertex>, y: &BTreeSet<Vertex>) -> Vec<Vertex> {
    g.vertices()
        .iter()
        .copied()
        .filter(|v| !g.is_terminal(*v) && !x.contains(v) && !y.contains(v))
        .collect()
}

fn separates(g: &DagInstance, x: &BTreeSet<Vertex>, y: &BTreeSet<Vertex>, z: &BTreeSet<Vertex>) -> bool {
    reach(&g.arcs(), x, z).is_disjoint(y)
}

/// All `X-Y` paths, as their sets of deletable interior vertices.
fn path_interiors(g: &DagInstance, x: &BTreeSet<Vertex>, y: &BTreeSet<Vertex>) -> Vec<BTreeSet<Vertex>> {
    let del: BTreeSet<Vertex> = deletable(g, x, y).into_iter().collect();
    let mut out = Vec::new();
    fn walk(
        g: &DagInstance,
        v: Vertex,
        y: &BTreeSet<Vertex>,
        del: &BTreeSet<Vertex>,
        acc: &mut Vec<Vertex>,
        out: &mut Vec<BTreeSet<Vertex>>,
    ) {
        if y.contains(&v) {
            out.push(acc.iter().copied().filter(|u| del.contains(u)).collect());
            return;
        }
        for w in g.out_neighbors(v) {
            acc.push(w);
            walk(g, w, y, del, acc, out);
            acc.pop();
        }
    }
    for &s in x {
        let mut acc = vec![s];
        walk(g, s, y, &del, &mut acc, &mut out);
    }
    out
}

/// Largest family of pairwise disjoint sets; `None` if some set is empty.
fn max_packing(sets: &[BTreeSet<Vertex>]) -> Option<usize> {
    if sets.iter().any(BTreeSet::is_empty) {
        return None;
    }
    fn go(sets: &[BTreeSet<Vertex>], used: &BTreeSet<Vertex>) -> usize {
        match sets.split_first() {
            None => 0,
            Some((first, rest)) => {
                let skip = go(rest, used);
                if first.is_disjoint(used) {
                    let mut u = used.clone();
                    u.extend(first);
                    skip.max(1 + go(rest, &u))
                } else {
                    skip
                }
            }
        }
    }
    Some(go(sets, &BTreeSet::new()))
}

fn reversed(g: &DagInstance) -> DagInstance {
    DagInstance::build(
        g.vertices().iter().copied(),
        g.arcs().into_iter().map(|(u, v)| (v, u)),
        g.terminal_pairs().iter().map(|&(s, t)| (t, s)),
        g.budget(),
    )
    .unwrap()
}

fn induced_without(g: &DagInstance, gone: &BTreeSet<Vertex>) -> DagInstance {
    DagInstance::build(
        g.vertices().iter().copied().filter(|v| !gone.contains(v)),
        g.arcs().into_iter().filter(|(u, v)| !gone.contains(u) && !gone.contains(v)),
        g.terminal_pairs().iter().copied(),
        g.budget(),
    )
    .unwrap()
}

fn pick(items: &[Vertex], mask: u64) -> BTreeSet<Vertex> {
    items.iter().enumerate().filter(|(k, _)| mask >> k & 1 == 1).map(|(_, &v)| v).collect()
}

fn ranks(g: &DagInstance, a: &BTreeSet<Vertex>) -> Vec<usize> {
    a.iter().map(|&v| g.position(v).unwrap()).sorted().collect()
}

fn arb_weighted() -> impl Strategy<Value = WeightedArcInstance> {
    (
        arb_dag(6),
        prop::collection::vec(prop_oneof![Just(None), (1u64..=3).prop_map(Some)], 15),
        prop::collection::vec((0usize..64, 0usize..64), 1..=2),
        0u64..=4,
    )
        .prop_map(|((order, arcs), ws, picks, budget)| {
            let n = order.len();
            let arcs = arcs
                .into_iter()
                .zip(ws)
                .map(|((u, v), w)| (u, v, w.map_or(ArcWeight::Infinite, ArcWeight::Finite)))
                .collect();
            let mut pairs: Vec<_> = picks
                .into_iter()
                .map(|(a, b)| (a % n, b % n))
                .filter(|(a, b)| a != b)
                .map(|(a, b)| (order[a.min(b)], order[a.max(b)]))
                .collect();
            if pairs.is_empty() {
                pairs.push((order[0], order[n - 1]));
            }
            let mut vertices = order;
            vertices.sort_unstable();
            WeightedArcInstance::new(vertices, arcs, pairs, budget).unwrap()
        })
}

/// Independent weighted check: every subset of finite arcs.
fn weighted_by_subsets(w: &WeightedArcInstance) -> bool {
    let finite: Vec<usize> = (0..w.arcs().len())
        .filter(|&k| matches!(w.arcs()[k].2, ArcWeight::Finite(_)))
        .collect();
    (0u64..1 << finite.len()).any(|mask| {
        let mut cost = 0;
        let mut gone = BTreeSet::new();
        for (j, &k) in finite.iter().enumerate() {
            if mask >> j & 1 == 1 {
                if let ArcWeight::Finite(c) = w.arcs()[k].2 {
                    cost += c;
                }
                gone.insert(k);
            }
        }
        let arcs: Vec<_> = (0..w.arcs().len())
            .filter(|k| !gone.contains(k))
            .map(|k| (w.arcs()[k].0, w.arcs()[k].1))
            .collect();
        cost <= w.budget()
            && w.terminal_pairs()
                .iter()
                .all(|&(s, t)| !reach(&arcs, &BTreeSet::from([s]), &BTreeSet::new()).contains(&t))
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn multicut_matches_reachability(g in arb_instance(9, 3, 3), mask in any::<u64>()) {
        let z = pick(g.vertices(), mask);
        prop_assert_eq!(g.is_multicut(&CutSet::from(z.clone())), brute_multicut(&g, &z));
    }

    #[test]
    fn order_respects_arcs_and_survives_deletion(g in arb_instance(9, 2, 2), mask in any::<u64>()) {
        for (u, v) in g.arcs() {
            prop_assert!(g.position(u) < g.position(v));
        }
        let free: Vec<Vertex> = g.nonterminals().collect();
        let x = pick(&free, mask);
        let t = torso(&g, &x).unwrap();
        let kept: Vec<Vertex> = g.vertices().iter().copied().filter(|v| !x.contains(v)).collect();
        prop_assert_eq!(t.vertices(), kept.as_slice());
        if let (Some(&v), true) = (free.first(), g.budget() > 0) {
            let k = kill(&g, v).unwrap();
            let kept: Vec<Vertex> = g.vertices().iter().copied().filter(|&u| u != v).collect();
            prop_assert_eq!(k.vertices(), kept.as_slice());
            prop_assert_eq!(k.budget(), g.budget() - 1);
        }
    }

    #[test]
    fn src_is_exact_and_monotone(g in arb_instance(9, 3, 0), mask in any::<u64>()) {
        let arcs = g.arcs();
        let src = g.src_map();
        for &v in g.vertices() {
            let expect: BTreeSet<Vertex> = g
                .sources()
                .into_iter()
                .filter(|&s| reach(&arcs, &BTreeSet::from([s]), &BTreeSet::new()).contains(&v))
                .collect();
            prop_assert_eq!(src.get(v), &expect);
        }
        let free: Vec<Vertex> = g.nonterminals().collect();
        let gone = pick(&free, mask);
        let h = induced_without(&g, &gone);
        let hsrc = h.src_map();
        for &v in h.vertices() {
            prop_assert!(hsrc.get(v).is_subset(src.get(v)));
        }
    }

    #[test]
    fn lex_compare_is_total_order(g in arb_instance(9, 1, 0), a in any::<u64>(), b in any::<u64>(), c in any::<u64>()) {
        let (a, b, c) = (pick(g.vertices(), a), pick(g.vertices(), b), pick(g.vertices(), c));
        prop_assert_eq!(g.lex_compare(&a, &a), Ordering::Equal);
        prop_assert_eq!(g.lex_compare(&a, &b), g.lex_compare(&b, &a).reverse());
        prop_assert_eq!(g.lex_compare(&a, &b) == Ordering::Equal, a == b);
        prop_assert_eq!(g.lex_compare(&a, &b), ranks(&g, &a).cmp(&ranks(&g, &b)));
        if g.lex_compare(&a, &b).is_le() && g.lex_compare(&b, &c).is_le() {
            prop_assert!(g.lex_compare(&a, &c).is_le());
        }
    }

    #[test]
    fn menger_agrees_with_path_packing((g, x, y) in arb_sides(8)) {
        let rep = min_separator(&g, &x, &y).unwrap();
        let packing = max_packing(&path_interiors(&g, &x, &y));
        let del = deletable(&g, &x, &y);
        let smallest = subsets(&del, del.len()).find(|z| separates(&g, &x, &y, z)).map(|z| z.len());
        prop_assert_eq!(packing, smallest);
        match rep.size {
            CutSize::Infinite => prop_assert_eq!(smallest, None),
            CutSize::Finite(k) => {
                prop_assert_eq!(Some(k), smallest);
                prop_assert_eq!(rep.closest_to_x.len(), k);
                prop_assert!(separates(&g, &x, &y, rep.closest_to_x.as_set()));
                prop_assert!(separates(&g, &x, &y, rep.closest_to_y.as_set()));
            }
        }
    }

    #[test]
    fn closest_to_y_is_the_unique_minimum_important_separator((g, x, y) in arb_sides(8)) {
        let rep = min_separator(&g, &x, &y).unwrap();
        let CutSize::Finite(k) = rep.size else { return Ok(()); };
        let arcs = g.arcs();
        let del = deletable(&g, &x, &y);
        let seps: Vec<BTreeSet<Vertex>> = subsets(&del, k).filter(|z| separates(&g, &x, &y, z)).collect();
        let important: Vec<&BTreeSet<Vertex>> = seps
            .iter()
            .filter(|z| z.len() == k)
            .filter(|z| {
                let region = reach(&arcs, &x, z);
                !seps.iter().any(|o| o != *z && region.is_subset(&reach(&arcs, &x, o)))
            })
            .collect();
        prop_assert_eq!(important, vec![rep.closest_to_y.as_set()]);
        prop_assert!(is_important_separator(&g, &x, &y, rep.closest_to_y.as_set()).unwrap());
    }

    #[test]
    fn reversal_swaps_closest_cuts((g, x, y) in arb_sides(9)) {
        let fwd = min_separator(&g, &x, &y).unwrap();
        let back = min_separator(&reversed(&g), &y, &x).unwrap();
        prop_assert_eq!(fwd.size, back.size);
        prop_assert_eq!(fwd.closest_to_x, back.closest_to_y);
        prop_assert_eq!(fwd.closest_to_y, back.closest_to_x);
    }

    #[test]
    fn potential_is_bounded(g in arb_normalized(10, 3, 3)) {
        let bound = (g.num_pairs() as i64 + 1) * g.budget() as i64;
        if let Potential::Value(v) = potential(&g) {
            prop_assert!(v <= bound);
            prop_assert!(v >= g.budget() as i64);
        }
    }

    #[test]
    fn torso_equals_any_bypass_fold(g in arb_instance(9, 2, 1), mask in any::<u64>(), seed in any::<u64>()) {
        let free: Vec<Vertex> = g.nonterminals().collect();
        let x = pick(&free, mask);
        let t = torso(&g, &x).unwrap();
        let mut order: Vec<Vertex> = x.iter().copied().collect();
        for round in 0..2u64 {
            use rand::seq::SliceRandom;
            order.shuffle(&mut common::rng(seed ^ round));
            let mut h = g.clone();
            for &v in &order {
                h = bypass(&h, v).unwrap();
            }
            prop_assert_eq!(&h, &t);
        }
    }

    #[test]
    fn bypass_keeps_src(g in arb_instance(9, 3, 1), k in any::<prop::sample::Index>()) {
        let free: Vec<Vertex> = g.nonterminals().collect();
        prop_assume!(!free.is_empty());
        let v = free[k.index(free.len())];
        let h = bypass(&g, v).unwrap();
        let (gs, hs) = (g.src_map(), h.src_map());
        for &u in h.vertices() {
            prop_assert_eq!(hs.get(u), gs.get(u));
        }
    }

    #[test]
    fn degree_branch_pushes_cut_and_preserves_answer(g in arb_normalized(10, 3, 3)) {
        let Ok(res) = degree_branch(&g) else { return Ok(()); };
        for child in &res.children {
            let before = pair_cut(&g, child.pair);
            let after = pair_cut(&child.instance, child.pair);
            prop_assert!(after > before, "pair {} vertex {}: {:?} -> {:?}", child.pair, child.vertex, before, after);
        }
        let parent = brute_solve(&g).unwrap().is_yes();
        let mut any = brute_solve(&res.kept).unwrap().is_yes();
        for child in &res.children {
            let yes = brute_solve(&child.instance).unwrap().is_yes();
            prop_assert!(!yes || parent, "child YES under NO parent");
            any |= yes;
        }
        prop_assert_eq!(parent, any);
    }

    #[test]
    fn normalize_preserves_answer(g in arb_instance(8, 3, 3)) {
        let n = normalize(&g);
        prop_assert!(n.is_normalized());
        let a = brute_solve(&g).unwrap();
        let b = brute_solve(&n).unwrap();
        prop_assert_eq!(a.is_yes(), b.is_yes());
        if let Answer::Yes(z) = b {
            let back: CutSet = z.iter().filter(|&v| g.contains(v)).collect();
            prop_assert!(verify(&g, &back));
        }
    }

    #[test]
    fn shadow_is_the_unreached_region(g in arb_instance(10, 3, 3), mask in any::<u64>()) {
        let free: Vec<Vertex> = g.nonterminals().collect();
        let z = pick(&free, mask);
        prop_assume!(brute_multicut(&g, &z));
        let reached = reach(&g.arcs(), &g.sources(), &z);
        let expect: BTreeSet<Vertex> = free.iter().copied().filter(|v| !z.contains(v) && !reached.contains(v)).collect();
        prop_assert_eq!(source_shadow(&g, &CutSet::from(z)), expect);
    }

    #[test]
    fn randomized_family_is_pure(g in arb_instance(9, 2, 2), seed in any::<u64>(), iterations in 0usize..40) {
        let s = ShadowStrategy::Randomized { seed, iterations };
        let a = shadow_family(&g, s).unwrap();
        prop_assert_eq!(a.len(), iterations);
        prop_assert_eq!(a, shadow_family(&g.clone(), s).unwrap());
    }

    #[test]
    fn exhaustive_family_holds_lexmin_shadow(g in arb_instance(8, 2, 2)) {
        if let Answer::Yes(z) = brute_solve(&g).unwrap() {
            let fam = shadow_family(&g, ShadowStrategy::default()).unwrap();
            prop_assert!(fam.sets.contains(&source_shadow(&g, &z)));
        }
    }

    #[test]
    fn oracle_invariant_under_order_preserving_relabel(g in arb_instance(9, 3, 3), scale in 1u32..5, shift in 0u32..50) {
        let f = |v: Vertex| v * scale + shift;
        let h = DagInstance::build(
            g.vertices().iter().map(|&v| f(v)),
            g.arcs().into_iter().map(|(u, v)| (f(u), f(v))),
            g.terminal_pairs().iter().map(|&(s, t)| (f(s), f(t))),
            g.budget(),
        ).unwrap();
        let mapped = match brute_solve(&g).unwrap() {
            Answer::Yes(z) => Answer::Yes(z.iter().map(f).collect()),
            Answer::No => Answer::No,
        };
        prop_assert_eq!(brute_solve(&h).unwrap(), mapped);
    }

    #[test]
    fn oracle_is_smallest_then_lexmin(g in arb_instance(9, 3, 3)) {
        let free: Vec<Vertex> = g.nonterminals().collect();
        let all: Vec<BTreeSet<Vertex>> = subsets(&free, g.budget()).filter(|z| brute_multicut(&g, z)).collect();
        match brute_solve(&g).unwrap() {
            Answer::No => prop_assert!(all.is_empty()),
            Answer::Yes(z) => {
                prop_assert!(verify(&g, &z));
                let best = all.iter().min_by(|a, b| a.len().cmp(&b.len()).then(ranks(&g, a).cmp(&ranks(&g, b)))).unwrap();
                prop_assert_eq!(z.as_set(), best);
            }
        }
    }

    #[test]
    fn weighted_oracle_matches_subset_enumeration(w in arb_weighted()) {
        prop_assert_eq!(brute_solve_weighted_arcs(&w).unwrap(), weighted_by_subsets(&w));
    }

    #[test]
    fn expansion_preserves_answer(w in arb_weighted()) {
        prop_assume!(w.budget() <= 3 && w.num_finite_arcs() <= 6);
        let g = expand_to_vertex_instance(&w).unwrap();
        prop_assert_eq!(brute_solve(&g).unwrap().is_yes(), brute_solve_weighted_arcs(&w).unwrap());
    }

    #[test]
    fn render_parse_round_trip(g in arb_instance(10, 3, 5), w in arb_weighted(), edges in subsequence((0..6usize).tuple_combinations::<(_, _)>().collect::<Vec<_>>(), 0..=15)) {
        let (h, _) = format::compact(&g);
        let text = format::render_instance(&h).unwrap();
        prop_assert_eq!(format::parse_instance(&text).unwrap(), ParsedInstance::Vertex(h));
        let text = format::render_weighted(&w).unwrap();
        prop_assert_eq!(format::parse_instance(&text).unwrap(), ParsedInstance::Weighted(w));
        let u = UndirectedGraph::new(6, edges).unwrap();
        prop_assert_eq!(format::parse_graph(&format::render_graph(&u)).unwrap(), u);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn solver_matches_oracle(g in arb_normalized(10, 3, 3)) {
        let out = solve(&g, SolverConfig::default()).unwrap();
        prop_assert_eq!(out.answer.is_yes(), brute_solve(&g).unwrap().is_yes());
        if let Answer::Yes(z) = &out.answer {
            prop_assert!(verify(&g, z));
        }
        prop_assert_eq!(out.stats.potential_violations, 0);
        prop_assert!(out.stats.max_depth <= (g.num_pairs() + 1) * g.budget());
    }

    #[test]
    fn solver_is_sound_on_raw_instances(g in arb_instance(8, 3, 3)) {
        let out = solve(&g, SolverConfig::new(ShadowStrategy::OracleAssisted)).unwrap();
        prop_assert_eq!(out.answer.is_yes(), brute_solve(&g).unwrap().is_yes());
        if let Answer::Yes(z) = &out.answer {
            prop_assert!(verify(&g, z));
        }
    }

    #[test]
    fn parallel_solve_is_identical(g in arb_normalized(10, 3, 3), seed in any::<u64>()) {
        for strategy in [ShadowStrategy::default(), ShadowStrategy::Randomized { seed, iterations: 16 }] {
            let seq = solve(&g, SolverConfig::new(strategy)).unwrap();
            let par = solve(&g, SolverConfig::new(strategy).parallel(true)).unwrap();
            prop_assert_eq!(seq, par);
        }
    }

    #[test]
    fn verify_accepts_what_solve_prints(g in arb_instance(8, 2, 3)) {
        let (g, _) = format::compact(&g);
        let text = format::render_instance(&g).unwrap();
        let dir = std::env::temp_dir().join(format!("dagmc-prop-{}", std::process::id()));
        std::fs::create_dir_all(&dir).unwrap();
        let inst = dir.join(format!("{:x}.txt", fnv(&text)));
        std::fs::write(&inst, &text).unwrap();
        let (code, out) = cli(&["solve", inst.to_str().unwrap()], "");
        prop_assert_eq!(code, 0);
        let (code, verdict) = cli(&["verify", inst.to_str().unwrap(), "-"], &out);
        prop_assert_eq!(code, 0);
        let expect = if out.starts_with("s YES") { "s VALID\n" } else { "s INVALID\n" };
        prop_assert_eq!(verdict.as_str(), expect);
        std::fs::remove_file(&inst).ok();
    }
}

fn fnv(text: &str) -> u64 {
    text.bytes().fold(0xcbf2_9ce4_8422_2325u64, |h, b| (h ^ u64::from(b)).wrapping_mul(0x0100_0000_01b3))
}

fn cli(args: &[&str], input: &str) -> (i32, String) {
    let mut stdin = input.as_bytes();
    let (mut out, mut err) = (Vec::new(), Vec::new());
    let code = dagmc::cli::run(std::iter::once("dagmc").chain(args.iter().copied()), &mut stdin, &mut out, &mut err);
    (code, String::from_utf8(out).unwrap())
}
