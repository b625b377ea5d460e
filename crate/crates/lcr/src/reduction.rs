//! Instance generation by reduction from independent set.
//!
//! Given a graph H on vertices u1..un and a size s, the produced instance
//! has s selection vertices whose non-key colors encode picking a vertex of
//! H, one degree-2 forbidding vertex per excluded color pair (same vertex
//! picked twice, or two adjacent vertices picked), and a two-vertex lock
//! w1-w2 that can only be released by parking w2 on the key color, which in
//! turn requires every selection vertex to leave key simultaneously. The
//! instance is reconfigurable iff H has an independent set of size s.

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::instance::{ColorSet, Instance, ListAssignment};

#[derive(Debug, Clone)]
pub struct IsInstance {
    graph: Graph,
    s: usize,
}

impl IsInstance {
    pub fn new(graph: Graph, s: usize) -> Result<Self> {
        if s > graph.vertex_count() {
            return Err(Error::InvalidInput(format!(
                "independent set size {s} exceeds {} vertices",
                graph.vertex_count()
            )));
        }
        Ok(Self { graph, s })
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn s(&self) -> usize {
        self.s
    }
}

/// A forbidding vertex excludes one simultaneous color pair on two
/// selection vertices. Indices are 1-based; the gadget tagged (i, j; p, q)
/// carries the list {c_i^q, c_j^p}.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ForbidGadget {
    pub i: usize,
    pub j: usize,
    pub p: usize,
    pub q: usize,
    pub label: String,
}

/// Full layout of a generated instance before materialization.
#[derive(Debug, Clone)]
pub struct GadgetPlan {
    pub selection_labels: Vec<String>,
    pub gadgets: Vec<ForbidGadget>,
    pub lock_labels: (String, String),
    pub n: usize,
    pub s: usize,
}

impl GadgetPlan {
    pub fn forbidding_count(&self) -> usize {
        self.gadgets.len()
    }

    pub fn vertex_count(&self) -> usize {
        if self.s == 0 {
            return 2;
        }
        self.s + self.gadgets.len() + 2
    }
}

fn pad(v: usize) -> String {
    format!("{v:02}")
}

fn selection_color(i: usize, p: usize) -> String {
    format!("c{}_{}", pad(i), pad(p))
}

/// Lays out selection vertices, forbidding gadgets, and the lock pair.
/// One (i,j;p,p) gadget exists per vertex u_p and gadgets (i,j;p,q) and
/// (i,j;q,p) per edge u_p u_q, for every pair i < j.
pub fn plan_reduction(h: &IsInstance) -> GadgetPlan {
    let n = h.graph.vertex_count();
    let s = h.s;
    assert!(n <= 99 && s <= 99, "labels are padded to two digits");
    let selection_labels: Vec<String> = (1..=s).map(|i| format!("v{}", pad(i))).collect();
    let mut gadgets = Vec::new();
    for i in 1..=s {
        for j in i + 1..=s {
            let mut tags: Vec<(usize, usize)> = (1..=n).map(|p| (p, p)).collect();
            for (a, b) in h.graph.edges() {
                let (p, q) = (a + 1, b + 1);
                tags.push((p, q));
                tags.push((q, p));
            }
            tags.sort_unstable();
            for (p, q) in tags {
                gadgets.push(ForbidGadget {
                    i,
                    j,
                    p,
                    q,
                    label: format!("x{}_{}_{}_{}", pad(i), pad(j), pad(p), pad(q)),
                });
            }
        }
    }
    GadgetPlan {
        selection_labels,
        gadgets,
        lock_labels: ("w1".into(), "w2".into()),
        n,
        s,
    }
}

/// Materializes the plan into an instance. Gadget endpoint colors are
/// deterministic: the first list color initially and the last at the
/// target; correctness does not depend on the choice. With s = 0 the
/// instance is just the released lock, a trivial yes-instance.
pub fn reduce_is_to_lcr(h: &IsInstance) -> Instance {
    let plan = plan_reduction(h);
    let n = plan.n;
    let s = plan.s;

    let mut color_names: Vec<String> = vec!["key".into(), "a".into(), "b".into()];
    for i in 1..=s {
        for p in 1..=n {
            color_names.push(selection_color(i, p));
        }
    }
    let colors = ColorSet::new(color_names).expect("color names are distinct");
    let key = colors.index_of("key").unwrap();
    let color_a = colors.index_of("a").unwrap();
    let color_b = colors.index_of("b").unwrap();

    // Vertices in label order: selections, locks, gadgets.
    let mut labels: Vec<String> = plan.selection_labels.clone();
    labels.push(plan.lock_labels.0.clone());
    labels.push(plan.lock_labels.1.clone());
    for g in &plan.gadgets {
        labels.push(g.label.clone());
    }
    let w1 = s;
    let w2 = s + 1;

    let mut edges: Vec<(usize, usize)> = vec![(w1, w2)];
    for sel in 0..s {
        edges.push((sel, w2));
    }
    let mut lists: Vec<Vec<usize>> = Vec::with_capacity(labels.len());
    for i in 1..=s {
        let mut l = vec![key];
        for p in 1..=n {
            l.push(colors.index_of(&selection_color(i, p)).unwrap());
        }
        lists.push(l);
    }
    lists.push(vec![color_a, color_b]);
    lists.push(vec![color_a, color_b, key]);
    for (offset, g) in plan.gadgets.iter().enumerate() {
        let idx = s + 2 + offset;
        edges.push((g.i - 1, idx));
        edges.push((g.j - 1, idx));
        lists.push(vec![
            colors.index_of(&selection_color(g.i, g.q)).unwrap(),
            colors.index_of(&selection_color(g.j, g.p)).unwrap(),
        ]);
    }

    let graph = Graph::new(labels, &edges).expect("reduction graph is simple");
    let lists = ListAssignment::new(lists, colors.k()).expect("lists fit the palette");

    let mut initial = vec![0usize; graph.vertex_count()];
    let mut target = vec![0usize; graph.vertex_count()];
    for sel in 0..s {
        initial[sel] = key;
        target[sel] = key;
    }
    initial[w1] = color_a;
    target[w1] = color_b;
    initial[w2] = color_b;
    target[w2] = color_a;
    for (offset, _) in plan.gadgets.iter().enumerate() {
        let idx = s + 2 + offset;
        let list = lists.list(idx);
        initial[idx] = list[0];
        target[idx] = *list.last().unwrap();
    }

    Instance::new(graph, colors, lists, initial, target)
        .expect("both endpoint colorings of the reduction are proper")
}

/// Brute-force independence check: does `graph` contain an independent set
/// of size at least `s`?
pub fn has_independent_set(graph: &Graph, s: usize) -> bool {
    fn extend(graph: &Graph, cand: &[usize], size: usize, want: usize) -> bool {
        if size >= want {
            return true;
        }
        if size + cand.len() < want {
            return false;
        }
        let v = cand[0];
        let without_neighbors: Vec<usize> = cand[1..]
            .iter()
            .copied()
            .filter(|&u| !graph.has_edge(u, v))
            .collect();
        extend(graph, &without_neighbors, size + 1, want) || extend(graph, &cand[1..], size, want)
    }
    if s == 0 {
        return true;
    }
    if s > graph.vertex_count() {
        return false;
    }
    let cand: Vec<usize> = (0..graph.vertex_count()).collect();
    extend(graph, &cand, 0, s)
}

/// Cross-validates the reduction: the brute-force independence verdict must
/// match the reconfiguration verdict on the generated instance.
pub fn verify_reduction(h: &IsInstance, opts: &crate::solver::SolveOptions) -> Result<bool> {
    let is_yes = has_independent_set(&h.graph, h.s);
    let inst = reduce_is_to_lcr(h);
    let rep = crate::solver::decide(&inst, crate::solver::DecisionStrategy::Auto, opts)?;
    Ok(is_yes == (rep.verdict == crate::solver::Verdict::Yes))
}

/// The generated graph always has the cover {w2} plus the selection
/// vertices, of size s + 1; asserted against the actual edge set.
pub fn cover_bound_of_reduction(h: &IsInstance) -> usize {
    let inst = reduce_is_to_lcr(h);
    let g = inst.graph();
    let mut cover: Vec<usize> = vec![g.index_of("w2").expect("lock exists")];
    for i in 1..=h.s {
        cover.push(g.index_of(&format!("v{}", pad(i))).expect("selection exists"));
    }
    cover.sort_unstable();
    assert!(
        crate::kernel_vc::uncovered_edge(g, &cover).is_none(),
        "lock plus selections must cover every edge"
    );
    h.s + 1
}
