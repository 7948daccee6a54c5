//! Text formats and the command line, driven in-process.

use dagmc::format::{compact, parse_graph, parse_instance, parse_solution, render_instance};
use dagmc::{transforms, ParsedInstance};

const PATH: &str = "c a path with one pair\np dagmc 4 1 1\na 1 2\na 2 3\na 3 4\nt 1 4\n";

fn cli(args: &[&str], input: &str) -> String {
    let mut stdin = input.as_bytes();
    let (mut out, mut err) = (Vec::new(), Vec::new());
    let code = dagmc::cli::run(std::iter::once("dagmc").chain(args.iter().copied()), &mut stdin, &mut out, &mut err);
    format!("$ dagmc {}\n{}{}exit {code}\n", args.join(" "), String::from_utf8_lossy(&out), String::from_utf8_lossy(&err))
}

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let ParsedInstance::Vertex(g) = parse_instance(PATH)? else {
        unreachable!()
    };
    print!("{}", render_instance(&g)?);

    let (n, old) = compact(&transforms::normalize(&g));
    println!("normalized has {} vertices, original IDs {old:?}", n.len());

    if let Err(e) = parse_instance("p dagmc 4 1 1\na 1 5\nt 1 4\n") {
        println!("error: {e}");
    }
    println!("{:?}", parse_graph("p graph 3 2\ne 1 2\ne 2 3\n")?);
    println!("{:?}", parse_solution("s YES\nv 2\n")?);

    print!("{}", cli(&["solve", "--stats", "-"], PATH));
    print!("{}", cli(&["oracle", "-"], PATH));
    print!("{}", cli(&["normalize", "-"], PATH));
    print!("{}", cli(&["oracle-w", "-"], "p dagmc-w 3 1 2\na 1 2 3\na 2 3 2\nt 1 3\n"));
    print!("{}", cli(&["solve", "--exhaustive-limit", "1", "-"], PATH));
    Ok(())
}
