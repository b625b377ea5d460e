//! Weighted shortest reconfiguration: the cheapest route recolors a light
//! vertex twice instead of a heavy vertex twice.
//!
//! ```text
//! cargo run --example shortest_weighted
//! ```

use lcr::{shortest, ColorSet, Graph, Instance, ListAssignment, ShortestStrategy, SolveOptions};

fn main() -> lcr::Result<()> {
    // Triangle: heavy and light must swap colors; either one steps aside
    // through its spare color and returns. The frozen third vertex only
    // blocks its own color.
    let graph = Graph::new(vec!["heavy", "light", "frozen"], &[(0, 1), (0, 2), (1, 2)])?;
    let colors = ColorSet::numbered(6);
    let lists = ListAssignment::new(
        vec![vec![0, 1, 5], vec![0, 1, 2], vec![4]],
        colors.k(),
    )?;
    let instance = Instance::with_weights(
        graph,
        colors,
        lists,
        vec![0, 1, 4],
        vec![1, 0, 4],
        vec![10, 1, 1],
    )?;

    let report = shortest(&instance, ShortestStrategy::Auto, &SolveOptions::default())?;
    println!("optimum weighted length: {:?}", report.length);
    let seq = report.sequence.expect("the swap is feasible");
    for (v, c) in seq.steps() {
        println!(
            "  recolor {} -> {} (cost {})",
            instance.graph().label(v),
            instance.colors().name(c),
            instance.weight(v)
        );
    }
    // Detouring through the light vertex costs 1 + 10 + 1 = 12; through the
    // heavy one it would cost 10 + 1 + 10 = 21.
    assert_eq!(report.length, Some(12));
    Ok(())
}
