//! Max-cut to skew multicut, the two-pair rewrite and expansion to vertices.

use dagmc::gadgets::{
    expand_to_vertex_instance, gen_maxcut_skew_instance, maxcut_budget, maxcut_heavy_weight, skew_to_two_pairs,
    UndirectedGraph,
};
use dagmc::ArcWeight::{Finite, Infinite};
use dagmc::{brute_solve, brute_solve_weighted_arcs, WeightedArcInstance};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let triangle = UndirectedGraph::new(3, [(0, 1), (1, 2), (0, 2)])?;
    println!("max cut {} with D={}", triangle.max_cut(), maxcut_heavy_weight(&triangle));
    for t in 0..=triangle.m() as u64 {
        let skew = gen_maxcut_skew_instance(&triangle, t)?;
        let two = skew_to_two_pairs(&skew)?;
        println!(
            "t={t}: p={} skew {} two-pair {}",
            maxcut_budget(&triangle, t)?,
            brute_solve_weighted_arcs(&skew)?,
            brute_solve_weighted_arcs(&two)?
        );
    }

    let edge = UndirectedGraph::new(2, [(0, 1)])?;
    let g = expand_to_vertex_instance(&gen_maxcut_skew_instance(&edge, 1)?)?;
    println!("single edge expands to {} vertices, {} arcs, p={}", g.len(), g.num_arcs(), g.budget());

    // Small enough for the vertex oracle.
    let w = WeightedArcInstance::new(
        vec![1, 2, 3, 4],
        vec![(1, 2, Finite(2)), (1, 3, Finite(1)), (2, 4, Infinite), (3, 4, Finite(1))],
        vec![(1, 4)],
        3,
    )?;
    let g = expand_to_vertex_instance(&w)?;
    println!(
        "weighted {} vertex {} ({} vertices, p={})",
        brute_solve_weighted_arcs(&w)?,
        brute_solve(&g)?.is_yes(),
        g.len(),
        g.budget()
    );
    Ok(())
}
