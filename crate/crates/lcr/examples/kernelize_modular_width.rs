//! Shrink an instance by removing identical sibling subgraphs, solve the
//! kernel, and lift the witness sequence back to the original instance.
//!
//! ```text
//! cargo run --example kernelize_modular_width
//! ```

use lcr::solver::{brute_force_reachable, lift_sequence, validate_sequence};
use lcr::{kernelize_mw, ColorSet, Graph, Instance, ListAssignment, SolveOptions};

fn main() -> lcr::Result<()> {
    // A hub joined to four interchangeable leaves: same list, same initial
    // color, same target color. Three of the four are redundant.
    let labels = vec!["hub", "p1", "p2", "p3", "p4"];
    let edges = [(0, 1), (0, 2), (0, 3), (0, 4)];
    let graph = Graph::new(labels, &edges)?;
    let colors = ColorSet::numbered(3);
    let lists = ListAssignment::new(
        vec![
            vec![0, 1, 2],
            vec![0, 1],
            vec![0, 1],
            vec![0, 1],
            vec![0, 1],
        ],
        colors.k(),
    )?;
    let instance = Instance::new(graph, colors, lists, vec![2, 0, 0, 0, 0], vec![0, 1, 1, 1, 1])?;

    let (kernel, log) = kernelize_mw(&instance)?;
    println!(
        "kernelized {} -> {} vertices, {} removals:",
        instance.vertex_count(),
        kernel.vertex_count(),
        log.len()
    );
    for record in &log {
        println!("  removed {:?} (twin of {:?})", record.removed, record.phi);
    }

    let report = brute_force_reachable(&kernel, &SolveOptions::default())?;
    let kernel_seq = report.sequence.expect("this kernel is a yes-instance");
    println!("kernel solves in {} steps", kernel_seq.step_count());

    let lifted = lift_sequence(&instance, &kernel, &kernel_seq, &log)?;
    assert!(validate_sequence(&instance, &lifted));
    println!("lifted sequence has {} steps and validates:", lifted.step_count());
    for (v, c) in lifted.steps() {
        println!(
            "  recolor {} -> {}",
            instance.graph().label(v),
            instance.colors().name(c)
        );
    }
    Ok(())
}
