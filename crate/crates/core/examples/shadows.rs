//! Source shadows and the three family strategies.

use dagmc::shadows::{lexmin_shadow_oracle, shadow_family, source_shadow};
use dagmc::{CutSet, DagInstance, ShadowStrategy};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let g = DagInstance::build(
        [1, 2, 3, 4, 5, 6],
        [(1, 2), (2, 3), (3, 6), (1, 4), (4, 5), (5, 6)],
        [(1, 6)],
        2,
    )?;
    let z: CutSet = [2, 4].into_iter().collect();
    println!("shadow of {z}: {:?}", source_shadow(&g, &z));
    println!("shadow of the lex-min solution: {:?}", lexmin_shadow_oracle(&g)?);

    for strategy in [
        ShadowStrategy::default(),
        ShadowStrategy::Randomized { seed: 7, iterations: 4 },
        ShadowStrategy::OracleAssisted,
    ] {
        let fam = shadow_family(&g, strategy)?;
        println!("{strategy:?}: {} sets, first {:?}", fam.len(), fam.sets.first());
    }

    match shadow_family(&g, ShadowStrategy::Exhaustive { limit: 2 }) {
        Err(e) => println!("guard: {e}"),
        Ok(_) => unreachable!(),
    }
    Ok(())
}
