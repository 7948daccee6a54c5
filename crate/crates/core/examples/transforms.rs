//! Normalization, kill, bypass, torso and degree branching.

use std::collections::BTreeSet;

use dagmc::transforms::{bypass, degree_branch, kill, normalize, torso};
use dagmc::DagInstance;

fn show(name: &str, g: &DagInstance) {
    println!("{name}: p={} vertices={:?} arcs={:?} pairs={:?}", g.budget(), g.vertices(), g.arcs(), g.terminal_pairs());
}

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let path = DagInstance::build([1, 2, 3, 4], [(1, 2), (2, 3), (3, 4)], [(1, 4)], 1)?;
    show("path", &path);
    show("normalized", &normalize(&path));
    show("kill 2", &kill(&path, 2)?);
    show("bypass 2", &bypass(&path, 2)?);
    show("torso {2, 3}", &torso(&path, &BTreeSet::from([2, 3]))?);

    let funnel = DagInstance::build(
        [1, 2, 3, 4, 5],
        [(1, 2), (1, 3), (2, 4), (3, 4), (4, 5)],
        [(1, 5)],
        1,
    )?;
    let res = degree_branch(&funnel)?;
    show("degree reduced", &res.kept);
    for child in &res.children {
        show(&format!("child (pair {}, vertex {})", child.pair, child.vertex), &child.instance);
    }
    Ok(())
}
