//! Building instances and querying reachability, source sets and multicuts.

use std::collections::BTreeSet;

use dagmc::{CutSet, DagInstance, MulticutCheck};

fn main() -> Result<(), dagmc::DagError> {
    // 1 -> 2 -> 3 -> 4 with the single pair (1, 4) and budget 1.
    let g = DagInstance::build([1, 2, 3, 4], [(1, 2), (2, 3), (3, 4)], [(1, 4)], 1)?;
    println!("topological order {:?}, normalized: {}", g.vertices(), g.is_normalized());

    let cut: CutSet = [3].into_iter().collect();
    println!("reachable from 1 after deleting {cut}: {:?}", g.reachable([1], &cut));
    println!("{cut} is a multicut: {}", g.is_multicut(&cut));

    match g.check_multicut(&CutSet::new()) {
        MulticutCheck::Valid => println!("empty set separates everything"),
        other => println!("empty set: {other:?}"),
    }

    for (v, src) in g.src_map().iter() {
        println!("src({v}) = {src:?}");
    }

    let a = BTreeSet::from([2]);
    let b = BTreeSet::from([3]);
    println!("lex_compare({{2}}, {{3}}) = {:?}", g.lex_compare(&a, &b));

    match DagInstance::build([1, 2], [(1, 2), (2, 1)], [], 0) {
        Err(e) => println!("rejected: {e}"),
        Ok(_) => unreachable!(),
    }
    Ok(())
}
