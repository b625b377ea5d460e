//! Build a small instance in code, decide reachability, and print the
//! recoloring steps.
//!
//! ```text
//! cargo run --example solve_basic
//! ```

use lcr::{
    decide, ColorSet, DecisionStrategy, Graph, Instance, ListAssignment, SolveOptions, Verdict,
};

fn main() -> lcr::Result<()> {
    // A path a - b - c. Vertex b must pass through the spare color so that
    // a and c can take its current one.
    let graph = Graph::new(vec!["a", "b", "c"], &[(0, 1), (1, 2)])?;
    let colors = ColorSet::new(vec!["green", "orange", "purple"])?;
    let lists = ListAssignment::new(
        vec![
            vec![0, 1],    // a: green, orange
            vec![0, 1, 2], // b: all three
            vec![0, 1],    // c: green, orange
        ],
        colors.k(),
    )?;
    let instance = Instance::new(graph, colors, lists, vec![0, 1, 0], vec![1, 0, 1])?;

    let report = decide(&instance, DecisionStrategy::Auto, &SolveOptions::default())?;
    match report.verdict {
        Verdict::Yes => {
            let seq = report.sequence.expect("yes verdicts ship a sequence");
            println!("reachable in {} steps:", seq.step_count());
            for (v, c) in seq.steps() {
                println!(
                    "  recolor {} -> {}",
                    instance.graph().label(v),
                    instance.colors().name(c)
                );
            }
        }
        Verdict::No => println!("not reachable"),
    }
    println!(
        "explored {} states with strategy {}",
        report.stats.states_explored, report.stats.strategy
    );
    Ok(())
}
