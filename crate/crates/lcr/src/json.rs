//! Wire formats.
//!
//! Instance files:
//! `{ "k": int, "vertices": [ { "id", "list", "initial", "target", "weight"? } ], "edges": [[idA, idB]] }`
//! Colors are arbitrary strings mapped to dense indices in sorted order; the
//! declared `k` must equal the number of distinct color names used. The
//! optional weight defaults to 1.
//!
//! Sequence files: `{ "steps": [ { "vertex": id, "to": color } ] }`,
//! applied from the instance's initial coloring.
//!
//! Reports: `{ "verdict": "yes"|"no"|"too-large", "length": int|"inf"|null,
//! "sequence": [...]|null, "stats": {...} }`.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::instance::{ColorSet, Instance, ListAssignment};
use crate::kernel_mw::{ReductionRecord, ReplayLog};
use crate::kernel_vc::{MergeLog, MergeRecord};
use crate::solver::{ReconfigurationSequence, SolveReport, Verdict};

#[derive(Serialize, Deserialize)]
struct VertexRecord {
    id: String,
    list: Vec<String>,
    initial: String,
    target: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    weight: Option<u64>,
}

#[derive(Serialize, Deserialize)]
struct InstanceRecord {
    k: usize,
    vertices: Vec<VertexRecord>,
    edges: Vec<(String, String)>,
}

fn parse_err(e: &serde_json::Error) -> Error {
    Error::Parse {
        line: e.line(),
        column: e.column(),
        message: e.to_string(),
    }
}

pub fn parse_instance(text: &str) -> Result<Instance> {
    let record: InstanceRecord = serde_json::from_str(text).map_err(|e| parse_err(&e))?;
    let mut names: BTreeSet<&str> = BTreeSet::new();
    for v in &record.vertices {
        names.extend(v.list.iter().map(String::as_str));
        names.insert(&v.initial);
        names.insert(&v.target);
    }
    if record.vertices.is_empty() {
        return Err(Error::InvalidInstance("no vertices".into()));
    }
    if names.len() != record.k {
        return Err(Error::InvalidInstance(format!(
            "field `k` is {} but {} distinct colors are used",
            record.k,
            names.len()
        )));
    }
    let colors = ColorSet::new(names.into_iter().collect::<Vec<_>>())?;
    let color = |name: &str, ctx: &str| -> Result<usize> {
        colors
            .index_of(name)
            .ok_or_else(|| Error::InvalidInstance(format!("unknown color `{name}` in {ctx}")))
    };

    let labels: Vec<String> = record.vertices.iter().map(|v| v.id.clone()).collect();
    let graph_probe = Graph::new(labels.clone(), &[])?; // label uniqueness
    let mut edges = Vec::with_capacity(record.edges.len());
    for (a, b) in &record.edges {
        let ia = graph_probe
            .index_of(a)
            .ok_or_else(|| Error::InvalidInstance(format!("edge endpoint `{a}` is not a vertex")))?;
        let ib = graph_probe
            .index_of(b)
            .ok_or_else(|| Error::InvalidInstance(format!("edge endpoint `{b}` is not a vertex")))?;
        edges.push((ia, ib));
    }
    let graph = Graph::new(labels, &edges)?;

    let mut lists = Vec::with_capacity(record.vertices.len());
    let mut initial = Vec::with_capacity(record.vertices.len());
    let mut target = Vec::with_capacity(record.vertices.len());
    let mut weights = Vec::with_capacity(record.vertices.len());
    for v in &record.vertices {
        let ctx = format!("vertex `{}`", v.id);
        let mut list = Vec::with_capacity(v.list.len());
        for name in &v.list {
            list.push(color(name, &ctx)?);
        }
        list.sort_unstable();
        if list.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::InvalidInstance(format!("duplicate color in list of {ctx}")));
        }
        lists.push(list);
        initial.push(color(&v.initial, &ctx)?);
        target.push(color(&v.target, &ctx)?);
        weights.push(v.weight.unwrap_or(1));
    }
    let lists = ListAssignment::new(lists, colors.k())?;
    Instance::with_weights(graph, colors, lists, initial, target, weights)
}

/// Canonical emission: vertices sorted by id, edges sorted by endpoint
/// labels, lists in color order, weight omitted when 1. Deterministic, so a
/// fixed generator seed yields byte-identical files.
pub fn emit_instance(inst: &Instance) -> String {
    let g = inst.graph();
    let mut order: Vec<usize> = (0..inst.vertex_count()).collect();
    g.sort_by_label(&mut order);
    let vertices: Vec<VertexRecord> = order
        .iter()
        .map(|&v| VertexRecord {
            id: g.label(v).to_string(),
            list: inst
                .lists()
                .list(v)
                .iter()
                .map(|&c| inst.colors().name(c).to_string())
                .collect(),
            initial: inst.colors().name(inst.initial()[v]).to_string(),
            target: inst.colors().name(inst.target()[v]).to_string(),
            weight: Some(inst.weight(v)).filter(|&w| w != 1),
        })
        .collect();
    let mut edges: Vec<(String, String)> = g
        .edges()
        .into_iter()
        .map(|(u, v)| {
            let (a, b) = (g.label(u).to_string(), g.label(v).to_string());
            if a < b {
                (a, b)
            } else {
                (b, a)
            }
        })
        .collect();
    edges.sort();
    let record = InstanceRecord {
        k: inst.k(),
        vertices,
        edges,
    };
    let mut out = serde_json::to_string_pretty(&record).expect("instance serializes");
    out.push('\n');
    out
}

#[derive(Serialize, Deserialize)]
struct StepRecord {
    vertex: String,
    to: String,
}

#[derive(Serialize, Deserialize)]
struct SequenceRecord {
    steps: Vec<StepRecord>,
}

pub fn emit_sequence(inst: &Instance, seq: &ReconfigurationSequence) -> String {
    let steps: Vec<StepRecord> = seq
        .steps()
        .into_iter()
        .map(|(v, c)| StepRecord {
            vertex: inst.graph().label(v).to_string(),
            to: inst.colors().name(c).to_string(),
        })
        .collect();
    let mut out =
        serde_json::to_string_pretty(&SequenceRecord { steps }).expect("sequence serializes");
    out.push('\n');
    out
}

/// Parses a step file against an instance. Unknown vertex or color names are
/// errors; whether the resulting sequence is valid is a separate question
/// answered by `validate_sequence`.
pub fn parse_sequence(text: &str, inst: &Instance) -> Result<ReconfigurationSequence> {
    let record: SequenceRecord = serde_json::from_str(text).map_err(|e| parse_err(&e))?;
    let mut steps = Vec::with_capacity(record.steps.len());
    for s in &record.steps {
        let v = inst.graph().index_of(&s.vertex).ok_or_else(|| {
            Error::InvalidInput(format!("step references unknown vertex `{}`", s.vertex))
        })?;
        let c = inst.colors().index_of(&s.to).ok_or_else(|| {
            Error::InvalidInput(format!("step recolors to unknown color `{}`", s.to))
        })?;
        steps.push((v, c));
    }
    Ok(ReconfigurationSequence::from_steps(inst, &steps))
}

fn sequence_value(inst: &Instance, seq: &ReconfigurationSequence) -> Value {
    Value::Array(
        seq.steps()
            .into_iter()
            .map(|(v, c)| {
                json!({
                    "vertex": inst.graph().label(v),
                    "to": inst.colors().name(c),
                })
            })
            .collect(),
    )
}

pub fn report_to_json(inst: &Instance, report: &SolveReport) -> Value {
    let verdict = match report.verdict {
        Verdict::Yes => "yes",
        Verdict::No => "no",
    };
    let length = match (report.verdict, report.length) {
        (Verdict::No, _) => json!("inf"),
        (_, Some(l)) => json!(l),
        (_, None) => Value::Null,
    };
    json!({
        "verdict": verdict,
        "length": length,
        "sequence": report
            .sequence
            .as_ref()
            .map(|s| sequence_value(inst, s))
            .unwrap_or(Value::Null),
        "stats": {
            "states": report.stats.states_explored,
            "kernel_vertices_before": report.stats.kernel_vertices_before,
            "kernel_vertices_after": report.stats.kernel_vertices_after,
            "elapsed_ms": report.stats.elapsed_ms,
            "strategy": report.stats.strategy,
        },
    })
}

/// Report emitted when a search refuses because of the state cap.
pub fn too_large_report(explored: u64, cap: u64) -> Value {
    json!({
        "verdict": "too-large",
        "length": Value::Null,
        "sequence": Value::Null,
        "stats": { "states": explored, "state_cap": cap },
    })
}

pub fn replay_log_to_json(log: &ReplayLog) -> Value {
    Value::Array(
        log.iter()
            .map(|r| {
                let phi: serde_json::Map<String, Value> = r
                    .phi
                    .iter()
                    .map(|(k, v)| (k.clone(), Value::String(v.clone())))
                    .collect();
                json!({ "removed": r.removed, "phi": phi })
            })
            .collect(),
    )
}

pub fn replay_log_from_json(value: &Value) -> Result<ReplayLog> {
    let arr = value
        .as_array()
        .ok_or_else(|| Error::InvalidInput("replay log must be an array".into()))?;
    let mut log = Vec::with_capacity(arr.len());
    for item in arr {
        let removed: Vec<String> = serde_json::from_value(item["removed"].clone())
            .map_err(|e| Error::InvalidInput(format!("bad replay record: {e}")))?;
        let phi_map = item["phi"]
            .as_object()
            .ok_or_else(|| Error::InvalidInput("phi must be an object".into()))?;
        let phi: Vec<(String, String)> = phi_map
            .iter()
            .map(|(k, v)| {
                v.as_str()
                    .map(|s| (k.clone(), s.to_string()))
                    .ok_or_else(|| Error::InvalidInput("phi values must be strings".into()))
            })
            .collect::<Result<_>>()?;
        log.push(ReductionRecord { removed, phi });
    }
    Ok(log)
}

pub fn merge_log_to_json(log: &MergeLog) -> Value {
    Value::Array(
        log.iter()
            .map(|m| {
                json!({
                    "into": m.into,
                    "absorbed": m.absorbed,
                    "weight": m.absorbed_weight,
                })
            })
            .collect(),
    )
}

pub fn merge_log_from_json(value: &Value) -> Result<MergeLog> {
    let arr = value
        .as_array()
        .ok_or_else(|| Error::InvalidInput("merge log must be an array".into()))?;
    arr.iter()
        .map(|item| {
            Ok(MergeRecord {
                into: item["into"]
                    .as_str()
                    .ok_or_else(|| Error::InvalidInput("merge `into` must be a string".into()))?
                    .to_string(),
                absorbed: item["absorbed"]
                    .as_str()
                    .ok_or_else(|| Error::InvalidInput("merge `absorbed` must be a string".into()))?
                    .to_string(),
                absorbed_weight: item["weight"]
                    .as_u64()
                    .ok_or_else(|| Error::InvalidInput("merge `weight` must be an integer".into()))?,
            })
        })
        .collect()
}

/// Text format for independent set inputs: optional `#` comment lines, then
/// the vertex count, then one `p q` edge per line with 1-based endpoints.
pub fn parse_is_graph(text: &str) -> Result<Graph> {
    let mut lines = text
        .lines()
        .map(str::trim)
        .filter(|l| !l.is_empty() && !l.starts_with('#'));
    let n: usize = lines
        .next()
        .ok_or_else(|| Error::InvalidInput("empty edge-list file".into()))?
        .parse()
        .map_err(|e| Error::InvalidInput(format!("bad vertex count: {e}")))?;
    let mut edges = Vec::new();
    for line in lines {
        let mut parts = line.split_whitespace();
        let p: usize = parts
            .next()
            .ok_or_else(|| Error::InvalidInput(format!("bad edge line `{line}`")))?
            .parse()
            .map_err(|e| Error::InvalidInput(format!("bad edge line `{line}`: {e}")))?;
        let q: usize = parts
            .next()
            .ok_or_else(|| Error::InvalidInput(format!("bad edge line `{line}`")))?
            .parse()
            .map_err(|e| Error::InvalidInput(format!("bad edge line `{line}`: {e}")))?;
        if parts.next().is_some() {
            return Err(Error::InvalidInput(format!("trailing tokens on `{line}`")));
        }
        if p == 0 || q == 0 || p > n || q > n {
            return Err(Error::InvalidInput(format!(
                "edge `{line}` outside 1..={n}"
            )));
        }
        edges.push((p - 1, q - 1));
    }
    let labels: Vec<String> = (1..=n).map(|i| format!("u{i:02}")).collect();
    Graph::new(labels, &edges)
}
