//! Merge interchangeable independent-set vertices while summing their
//! weights, and confirm the shortest length survives the compression.
//!
//! ```text
//! cargo run --example kernelize_vertex_cover
//! ```

use lcr::solver::shortest_weighted;
use lcr::{
    kernelize_vc, min_vertex_cover, vc_kernel_bound, ColorSet, Graph, Instance, ListAssignment,
    SolveOptions,
};

fn main() -> lcr::Result<()> {
    // A hub with four pendant vertices of identical lists and endpoints but
    // different weights.
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
    let instance = Instance::with_weights(
        graph,
        colors,
        lists,
        vec![2, 0, 0, 0, 0],
        vec![0, 1, 1, 1, 1],
        vec![1, 2, 3, 4, 5],
    )?;

    let cover = min_vertex_cover(instance.graph(), 1).expect("the hub covers every edge");
    println!(
        "cover of size {}: {:?}",
        cover.size(),
        cover
            .vertices()
            .iter()
            .map(|&v| instance.graph().label(v))
            .collect::<Vec<_>>()
    );

    let (kernel, merges) = kernelize_vc(&instance, &cover)?;
    println!(
        "kernelized {} -> {} vertices; bound on the independent part: {}",
        instance.vertex_count(),
        kernel.vertex_count(),
        vc_kernel_bound(cover.size() as u32, instance.k() as u32)
    );
    for m in &merges {
        println!("  merged {} into {} (weight {})", m.absorbed, m.into, m.absorbed_weight);
    }
    let survivor = kernel.graph().index_of("p1").expect("p1 survives");
    println!("surviving pendant weight: {}", kernel.weight(survivor));

    let opts = SolveOptions::default();
    let before = shortest_weighted(&instance, &opts)?;
    let after = shortest_weighted(&kernel, &opts)?;
    println!(
        "shortest length before = {:?}, after = {:?}",
        before.length, after.length
    );
    assert_eq!(before.length, after.length);
    Ok(())
}
