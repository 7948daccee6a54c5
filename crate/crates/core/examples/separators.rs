//! Minimum vertex separators, closest cuts and the potential.

use std::collections::BTreeSet;

use dagmc::separators::{is_important_separator, min_separator, pair_cut, potential};
use dagmc::DagInstance;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    // s=1 fans out to 2 and 3, which meet at 4 before t=5.
    let g = DagInstance::build(
        [1, 2, 3, 4, 5],
        [(1, 2), (1, 3), (2, 4), (3, 4), (4, 5)],
        [(1, 5)],
        1,
    )?;
    let (x, y) = (BTreeSet::from([1]), BTreeSet::from([5]));
    let rep = min_separator(&g, &x, &y)?;
    println!("min separator size {:?}", rep.size);
    println!("closest to X: {}", rep.closest_to_x);
    println!("closest to Y: {}", rep.closest_to_y);
    println!(
        "closest to Y is important: {}",
        is_important_separator(&g, &x, &y, rep.closest_to_y.as_set())?
    );

    let wider = BTreeSet::from([2, 3]);
    println!("{{2, 3}} is important: {}", is_important_separator(&g, &x, &y, &wider)?);

    println!("cut(s1, t1) = {:?}", pair_cut(&g, 0));
    println!("potential = {:?}", potential(&g));

    let direct = DagInstance::build([1, 2], [(1, 2)], [(1, 2)], 3)?;
    println!("direct arc: cut {:?}, potential {:?}", pair_cut(&direct, 0), potential(&direct));
    Ok(())
}
