//! Seeded corpus generation across all four families; the same seed always
//! produces byte-identical files.
//!
//! ```text
//! cargo run --example generate_corpus
//! ```

use lcr::corpus::{generate, Family, GenConfig, PairMode};
use lcr::json::emit_instance;

fn main() -> lcr::Result<()> {
    for (family, name) in [
        (Family::Random, "random"),
        (Family::Cograph, "cograph"),
        (Family::Split, "split"),
        (Family::Reduction, "reduction"),
    ] {
        let mut cfg = GenConfig::new(family, 6, 3, 7);
        cfg.mode = PairMode::Reachable;
        cfg.s = 2;
        let instance = generate(&cfg)?;
        println!(
            "{name}: {} vertices, {} edges, k = {}",
            instance.vertex_count(),
            instance.graph().edge_count(),
            instance.k()
        );
        if family == Family::Split {
            print!("{}", emit_instance(&instance));
        }
        assert_eq!(generate(&cfg)?, instance, "same seed, same instance");
    }
    Ok(())
}
