//! Solving an instance with each strategy and comparing against the oracle.
//!
//! `cargo run --example solve -- [instance-file]`

use dagmc::format::{parse_instance, render_answer};
use dagmc::solver::{branching_step, BranchNode, StepResult};
use dagmc::{brute_solve, solve, DagInstance, ParsedInstance, ShadowStrategy, SolverConfig};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let g = match std::env::args().nth(1) {
        Some(path) => match parse_instance(&std::fs::read_to_string(path)?)? {
            ParsedInstance::Vertex(g) => g,
            ParsedInstance::Weighted(_) => return Err("expected a vertex instance".into()),
        },
        // Two crossing pairs sharing the middle vertex 3.
        None => DagInstance::build(
            [1, 2, 3, 4, 5, 6, 7],
            [(1, 3), (2, 3), (3, 4), (3, 5), (4, 6), (5, 7), (2, 5)],
            [(1, 6), (2, 7)],
            2,
        )?,
    };

    println!("oracle:\n{}", render_answer(&g, &brute_solve(&g)?));
    for strategy in [
        ShadowStrategy::default(),
        ShadowStrategy::Randomized { seed: 1, iterations: 64 },
        ShadowStrategy::OracleAssisted,
    ] {
        for parallel in [false, true] {
            let out = solve(&g, SolverConfig::new(strategy).parallel(parallel))?;
            println!("{strategy:?} parallel={parallel}:\n{}", render_answer(&g, &out.answer));
            println!("{}", serde_json::to_string(&out.stats)?);
        }
    }

    let root = BranchNode::root(dagmc::transforms::normalize(&g));
    match branching_step(&root, ShadowStrategy::default())? {
        StepResult::Children(children) => {
            println!("root step emits {} children", children.len());
            for c in children.iter().take(5) {
                println!("  {} (p={})", c.label, c.instance.budget());
            }
        }
        other => println!("root step: {other:?}"),
    }
    Ok(())
}
