//! Decompose a graph into its modular structure and print both tree forms.
//!
//! ```text
//! cargo run --example modular_decomposition
//! ```

use lcr::{compute_md_tree, md_to_pmd, modular_width, pseudo_modular_width, Graph};

fn main() -> lcr::Result<()> {
    // Two twin vertices (t1, t2) hang identically off a 4-cycle, so {t1, t2}
    // is a module; the cycle itself is prime.
    let labels = vec!["c1", "c2", "c3", "c4", "t1", "t2"];
    let edges = [
        (0, 1),
        (1, 2),
        (2, 3),
        (3, 0),
        (4, 0),
        (4, 1),
        (5, 0),
        (5, 1),
    ];
    let graph = Graph::new(labels, &edges)?;

    let md = compute_md_tree(&graph);
    println!("md-tree (width {}):", modular_width(&md));
    print!("{}", md.to_text());

    let pmd = md_to_pmd(&md);
    println!("\npmd-tree (pseudo width {}):", pseudo_modular_width(&pmd));
    print!("{}", pmd.to_text());

    // Evaluating the tree bottom-up reproduces the input graph.
    let eval = pmd.evaluate()?;
    println!(
        "\nevaluation reproduces the graph: {} vertices, {} edges",
        eval.vertex_count(),
        eval.edge_count()
    );
    Ok(())
}
