//! Round-trip an instance and a witness sequence through the JSON wire
//! formats, then validate the sequence like `lcr verify` does.
//!
//! ```text
//! cargo run --example sequence_io
//! ```

use lcr::json::{emit_instance, emit_sequence, parse_instance, parse_sequence};
use lcr::solver::brute_force_reachable;
use lcr::{validate_sequence, SolveOptions};

fn main() -> lcr::Result<()> {
    let text = r#"{
      "k": 3,
      "vertices": [
        { "id": "a", "list": ["green", "orange"], "initial": "green", "target": "orange" },
        { "id": "b", "list": ["green", "orange", "purple"], "initial": "orange", "target": "green" },
        { "id": "c", "list": ["green", "orange"], "initial": "green", "target": "orange" }
      ],
      "edges": [["a", "b"], ["b", "c"]]
    }"#;
    let instance = parse_instance(text)?;
    assert_eq!(parse_instance(&emit_instance(&instance))?, instance);

    let report = brute_force_reachable(&instance, &SolveOptions::default())?;
    let seq = report.sequence.expect("this instance is reachable");
    let seq_text = emit_sequence(&instance, &seq);
    println!("{seq_text}");

    let parsed = parse_sequence(&seq_text, &instance)?;
    println!("valid: {}", validate_sequence(&instance, &parsed));

    // Tampering with a step breaks validation but still parses.
    let broken = seq_text.replacen("\"to\": \"purple\"", "\"to\": \"orange\"", 1);
    let parsed = parse_sequence(&broken, &instance)?;
    println!("tampered still valid: {}", validate_sequence(&instance, &parsed));
    Ok(())
}
