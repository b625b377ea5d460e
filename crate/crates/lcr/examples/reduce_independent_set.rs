//! Turn independent set questions into reconfiguration instances and
//! cross-validate the two verdicts.
//!
//! ```text
//! cargo run --example reduce_independent_set
//! ```

use lcr::reduction::{cover_bound_of_reduction, has_independent_set, plan_reduction};
use lcr::{
    decide, reduce_is_to_lcr, verify_reduction, DecisionStrategy, Graph, IsInstance,
    SolveOptions, Verdict,
};

fn main() -> lcr::Result<()> {
    // Five vertices, edges u1u2, u1u3, u1u4, u2u5; ask for an independent
    // set of size three.
    let h_graph = Graph::new(
        vec!["u01", "u02", "u03", "u04", "u05"],
        &[(0, 1), (0, 2), (0, 3), (1, 4)],
    )?;
    let h = IsInstance::new(h_graph, 3)?;

    let plan = plan_reduction(&h);
    println!(
        "layout: {} selection vertices, {} forbidding vertices, 2 lock vertices",
        h.s(),
        plan.forbidding_count()
    );
    let instance = reduce_is_to_lcr(&h);
    println!(
        "instance: {} vertices, {} colors, cover bound {}",
        instance.vertex_count(),
        instance.k(),
        cover_bound_of_reduction(&h)
    );

    let opts = SolveOptions::default();
    let is_verdict = has_independent_set(h.graph(), h.s());
    let lcr_verdict = decide(&instance, DecisionStrategy::Auto, &opts)?.verdict == Verdict::Yes;
    println!("independent set of size 3 exists: {is_verdict}");
    println!("generated instance is reconfigurable: {lcr_verdict}");
    assert!(verify_reduction(&h, &opts)?);

    // A dense input flips both verdicts to no.
    let k3 = Graph::new(vec!["u01", "u02", "u03"], &[(0, 1), (0, 2), (1, 2)])?;
    let dense = IsInstance::new(k3, 2)?;
    println!(
        "triangle with s = 2 agrees as well: {}",
        verify_reduction(&dense, &opts)?
    );
    Ok(())
}
