#![allow(dead_code)]

use dagmc::dag::{DagInstance, Vertex};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Random DAG on `n` vertices with shuffled IDs and arc probability `density`
/// between each pair in the hidden order.
pub fn random_dag_arcs(rng: &mut ChaCha8Rng, n: usize, density: f64) -> (Vec<Vertex>, Vec<(Vertex, Vertex)>) {
    let mut order: Vec<Vertex> = (1..=n as Vertex).collect();
    order.shuffle(rng);
    let mut arcs = Vec::new();
    for a in 0..n {
        for b in a + 1..n {
            if rng.gen_bool(density) {
                arcs.push((order[a], order[b]));
            }
        }
    }
    (order, arcs)
}

/// Random instance already in normal form: `2r` distinct terminals, sources
/// without in-arcs and sinks without out-arcs.
pub fn random_normalized(rng: &mut ChaCha8Rng, max_n: usize, max_r: usize, max_p: usize) -> DagInstance {
    let r = rng.gen_range(1..=max_r);
    let n = rng.gen_range((2 * r + 2).max(4)..=max_n.max(2 * r + 2));
    let p = rng.gen_range(0..=max_p);
    let density = rng.gen_range(0.3..0.8);
    let mut order: Vec<Vertex> = (1..=n as Vertex).collect();
    order.shuffle(rng);
    // Terminals are drawn from the inner order; sources move to the front and
    // sinks to the back so every arc can stay forward.
    let mut roles: Vec<usize> = (0..n).collect();
    roles.shuffle(rng);
    let sources: Vec<Vertex> = roles[..r].iter().map(|&k| order[k]).collect();
    let sinks: Vec<Vertex> = roles[r..2 * r].iter().map(|&k| order[k]).collect();
    let middle: Vec<Vertex> = order
        .iter()
        .copied()
        .filter(|v| !sources.contains(v) && !sinks.contains(v))
        .collect();
    let mut seq = sources.clone();
    seq.extend(&middle);
    seq.extend(&sinks);
    let mut arcs = Vec::new();
    for a in 0..n {
        for b in a + 1..n {
            let (u, v) = (seq[a], seq[b]);
            let u_sink = sinks.contains(&u);
            let v_source = sources.contains(&v);
            let both_sources = sources.contains(&u) && v_source;
            if u_sink || v_source || both_sources {
                continue;
            }
            // Direct terminal arcs are rare but allowed.
            let d = if sources.contains(&u) && sinks.contains(&v) { density * 0.15 } else { density };
            if rng.gen_bool(d) {
                arcs.push((u, v));
            }
        }
    }
    let pairs: Vec<(Vertex, Vertex)> = sources.into_iter().zip(sinks).collect();
    DagInstance::build(order, arcs, pairs, p).expect("forward arcs only")
}

/// Random raw instance: terminals anywhere, possibly shared between pairs.
pub fn random_raw(rng: &mut ChaCha8Rng, max_n: usize, max_r: usize, max_p: usize) -> DagInstance {
    let n = rng.gen_range(2..=max_n);
    let r = rng.gen_range(1..=max_r);
    let p = rng.gen_range(0..=max_p);
    let density = rng.gen_range(0.2..0.6);
    let (order, arcs) = random_dag_arcs(rng, n, density);
    let pos = |v: Vertex| order.iter().position(|&x| x == v).unwrap();
    let mut pairs = Vec::new();
    for _ in 0..r {
        let a = *order.choose(rng).unwrap();
        let b = *order.choose(rng).unwrap();
        if a == b {
            continue;
        }
        pairs.push(if pos(a) < pos(b) { (a, b) } else { (b, a) });
    }
    if pairs.is_empty() {
        pairs.push((order[0], order[n - 1]));
    }
    DagInstance::build(order.clone(), arcs, pairs, p).expect("forward arcs only")
}
