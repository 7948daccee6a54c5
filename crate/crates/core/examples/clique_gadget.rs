//! Clique to weighted multicut, checked by the weighted oracle.

use dagmc::format::render_weighted;
use dagmc::gadgets::{clique_budget, clique_heavy_weight, gen_clique_instance, UndirectedGraph};
use dagmc::brute_solve_weighted_arcs;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let t = 2;
    println!("t={t}: D={} p={}", clique_heavy_weight(t), clique_budget(t));
    for (name, g) in [
        ("edge", UndirectedGraph::new(2, [(0, 1)])?),
        ("empty pair", UndirectedGraph::new(2, [])?),
        ("path", UndirectedGraph::new(3, [(0, 1), (1, 2)])?),
    ] {
        let w = gen_clique_instance(&g, t)?;
        println!(
            "{name}: {} vertices, {} arcs ({} finite), clique {}, oracle {}",
            w.vertices().len(),
            w.arcs().len(),
            w.num_finite_arcs(),
            g.has_clique(t),
            brute_solve_weighted_arcs(&w)?
        );
    }
    let w = gen_clique_instance(&UndirectedGraph::new(2, [(0, 1)])?, t)?;
    let text = render_weighted(&w)?;
    println!("{}", text.lines().take(6).collect::<Vec<_>>().join("\n"));
    Ok(())
}
