//! Modular-width kernelization: removes identical sibling subgraphs under
//! parallel decomposition nodes.
//!
//! Two disjoint induced subgraphs are identical when a bijection between
//! them is an isomorphism, preserves outside neighborhoods, and preserves
//! per-vertex (list, initial, target) assignments. Removing one of two
//! identical subgraphs preserves the yes/no answer, and the removal is
//! recorded in a replay log so that sequences found on the kernel can be
//! lifted back to the original instance.
//!
//! Detection works on ID-matrices: the padded adjacency matrix of a tree
//! node's subgraph with a row of vertex assignments appended. Equal matrices
//! of two children of a parallel node certify identical subgraphs.

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::instance::{Instance, VertexAssignment};
use crate::modular::{compute_md_tree, md_to_pmd, NodeKind, SubstitutionTree, TreeNode};

/// The (m+1) x m signature of a tree node: an m x m zero-padded adjacency
/// block over the node's vertices in label order, plus a row of vertex
/// assignments (empty beyond column p).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IdMatrix {
    m: usize,
    p: usize,
    adj: Vec<u8>,
    assignments: Vec<VertexAssignment>,
}

impl IdMatrix {
    pub fn width(&self) -> usize {
        self.m
    }

    /// Number of vertices actually described (leading block size).
    pub fn occupied(&self) -> usize {
        self.p
    }

    pub fn adjacency_entry(&self, i: usize, j: usize) -> u8 {
        assert!(i < self.m && j < self.m);
        self.adj[i * self.m + j]
    }

    /// Assignment-row entry for column j; `None` is the empty marker.
    pub fn assignment_entry(&self, j: usize) -> Option<&VertexAssignment> {
        assert!(j < self.m);
        self.assignments.get(j)
    }

    /// Canonical byte serialization: width, block size, adjacency bits
    /// row-major, then each assignment triple. Equal bytes iff equal
    /// matrices.
    pub fn canonical_bytes(&self) -> Vec<u8> {
        let mut out = Vec::with_capacity(self.adj.len() + 16);
        out.extend_from_slice(&(self.m as u64).to_le_bytes());
        out.extend_from_slice(&(self.p as u64).to_le_bytes());
        out.extend_from_slice(&self.adj);
        for a in &self.assignments {
            out.extend_from_slice(&a.canonical_bytes());
        }
        out
    }
}

/// ID-matrix of a decomposition tree node, over the node's vertices sorted
/// by label. `m` must be at least the subgraph size.
pub fn id_matrix(inst: &Instance, tree: &SubstitutionTree, node: usize, m: usize) -> IdMatrix {
    let mut verts = tree.vertices_of(node);
    inst.graph().sort_by_label(&mut verts);
    id_matrix_of_vertices(inst, &verts, m)
}

/// ID-matrix of an explicit vertex sequence (already in label order).
pub(crate) fn id_matrix_of_vertices(inst: &Instance, verts: &[usize], m: usize) -> IdMatrix {
    let p = verts.len();
    assert!(m >= p, "matrix width {m} smaller than subgraph size {p}");
    let mut adj = vec![0u8; m * m];
    for (i, &u) in verts.iter().enumerate() {
        for (j, &v) in verts.iter().enumerate() {
            if inst.graph().has_edge(u, v) {
                adj[i * m + j] = 1;
            }
        }
    }
    let assignments = verts.iter().map(|&v| inst.assignment(v)).collect();
    IdMatrix {
        m,
        p,
        adj,
        assignments,
    }
}

/// Checks whether two disjoint equal-size induced subgraphs are identical
/// under the bijection `phi` (pairs of vertex indices, H1 to H2):
/// isomorphism, equal outside neighborhoods, and equal assignments.
/// A malformed `phi` (not a bijection between the two sets) panics.
pub fn identical_check(
    inst: &Instance,
    h1: &[usize],
    h2: &[usize],
    phi: &[(usize, usize)],
) -> bool {
    assert_eq!(h1.len(), h2.len(), "subgraphs must have equal size");
    assert_eq!(phi.len(), h1.len(), "phi must map every vertex of H1");
    let mut map = HashMap::new();
    for &(a, b) in phi {
        assert!(h1.contains(&a) && h2.contains(&b), "phi outside H1 x H2");
        assert!(map.insert(a, b).is_none(), "phi maps a vertex twice");
    }
    assert_eq!(
        {
            let mut images: Vec<usize> = map.values().copied().collect();
            images.sort_unstable();
            images.dedup();
            images.len()
        },
        h2.len(),
        "phi is not injective"
    );
    assert!(
        h1.iter().all(|v| !h2.contains(v)),
        "subgraphs must be disjoint"
    );

    let g = inst.graph();
    // 1: isomorphism under phi.
    for &u in h1 {
        for &v in h1 {
            if g.has_edge(u, v) != g.has_edge(map[&u], map[&v]) {
                return false;
            }
        }
    }
    // 2a: equal neighborhoods outside the subgraphs.
    for &v in h1 {
        let mut out1: Vec<usize> = g
            .neighbors(v)
            .iter()
            .copied()
            .filter(|u| !h1.contains(u))
            .collect();
        let mut out2: Vec<usize> = g
            .neighbors(map[&v])
            .iter()
            .copied()
            .filter(|u| !h2.contains(u))
            .collect();
        out1.sort_unstable();
        out2.sort_unstable();
        if out1 != out2 {
            return false;
        }
    }
    // 2b: equal assignments.
    h1.iter().all(|&v| inst.assignment(v) == inst.assignment(map[&v]))
}

/// One application of the reduction rule: the removed vertex set and the
/// bijection from the kept copy onto it, both by external label.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReductionRecord {
    pub removed: Vec<String>,
    /// Pairs (kept label, removed label).
    pub phi: Vec<(String, String)>,
}

pub type ReplayLog = Vec<ReductionRecord>;

/// Kernelizes a connected instance by post-order traversal of its PMD-tree.
///
/// At every parallel node, children with equal ID-matrices are identical
/// subgraphs; all but the one containing the smallest label are removed, one
/// record per removal, re-deriving the matrix width after each removal. When
/// a parallel node is left with a single child the edge to that child is
/// contracted, keeping the child's structure.
pub fn kernelize_mw(inst: &Instance) -> Result<(Instance, ReplayLog)> {
    if !inst.graph().is_connected() {
        return Err(Error::Disconnected);
    }
    let pmd = md_to_pmd(&compute_md_tree(inst.graph()));
    let mut work = Work {
        inst,
        nodes: pmd.node_ids().map(|id| pmd.node(id).clone()).collect(),
        root: pmd.root(),
        log: Vec::new(),
    };
    work.process(pmd.root());
    let mut survivors = work.live_vertices(pmd.root());
    survivors.sort_unstable();
    let kernel = inst.restrict(&survivors);
    Ok((kernel, work.log))
}

struct Work<'a> {
    inst: &'a Instance,
    nodes: Vec<TreeNode>,
    // Only the debug identity re-check walks up from the root.
    #[cfg_attr(not(debug_assertions), allow(dead_code))]
    root: usize,
    log: ReplayLog,
}

impl Work<'_> {
    fn process(&mut self, id: usize) {
        for child in self.nodes[id].children.clone() {
            self.process(child);
        }
        if self.nodes[id].kind == NodeKind::Parallel {
            self.dedup_parallel(id);
        }
    }

    fn dedup_parallel(&mut self, x: usize) {
        loop {
            let kids = self.nodes[x].children.clone();
            if kids.len() < 2 {
                break;
            }
            // Children keyed by their live subgraph in label order.
            let mut entries: Vec<(usize, Vec<usize>)> = kids
                .iter()
                .map(|&c| {
                    let mut verts = self.live_vertices(c);
                    self.inst.graph().sort_by_label(&mut verts);
                    (c, verts)
                })
                .collect();
            entries.sort_by(|a, b| {
                self.inst
                    .graph()
                    .label(a.1[0])
                    .cmp(self.inst.graph().label(b.1[0]))
            });
            let m = entries.iter().map(|(_, v)| v.len()).max().unwrap();
            let mut first_seen: HashMap<Vec<u8>, usize> = HashMap::new();
            let mut removal: Option<(usize, usize)> = None;
            for (idx, (_, verts)) in entries.iter().enumerate() {
                let bytes = id_matrix_of_vertices(self.inst, verts, m).canonical_bytes();
                if let Some(&keep) = first_seen.get(&bytes) {
                    removal = Some((keep, idx));
                    break;
                }
                first_seen.insert(bytes, idx);
            }
            let Some((keep_idx, victim_idx)) = removal else {
                break;
            };
            let (_, keeper_verts) = entries[keep_idx].clone();
            let (victim_node, victim_verts) = entries[victim_idx].clone();
            #[cfg(debug_assertions)]
            self.assert_identical_now(&keeper_verts, &victim_verts);
            self.log.push(ReductionRecord {
                removed: victim_verts
                    .iter()
                    .map(|&v| self.inst.graph().label(v).to_string())
                    .collect(),
                phi: keeper_verts
                    .iter()
                    .zip(victim_verts.iter())
                    .map(|(&a, &b)| {
                        (
                            self.inst.graph().label(a).to_string(),
                            self.inst.graph().label(b).to_string(),
                        )
                    })
                    .collect(),
            });
            self.nodes[x].children.retain(|&c| c != victim_node);
            self.rebuild_parallel_quotient(x);
        }
        if self.nodes[x].children.len() == 1 {
            // Contract the edge to the only child, keeping the child's
            // quotient; a one-node quotient is not a legal non-leaf.
            let y = self.nodes[x].children[0];
            self.nodes[x] = self.nodes[y].clone();
        }
    }

    fn rebuild_parallel_quotient(&mut self, x: usize) {
        let labels: Vec<String> = self.nodes[x]
            .children
            .clone()
            .into_iter()
            .map(|c| {
                let verts = self.live_vertices(c);
                verts
                    .iter()
                    .map(|&v| self.inst.graph().label(v).to_string())
                    .min()
                    .expect("child has live vertices")
            })
            .collect();
        self.nodes[x].quotient =
            Some(Graph::new(labels, &[]).expect("edgeless quotient is valid"));
    }

    fn live_vertices(&self, id: usize) -> Vec<usize> {
        let mut out = Vec::new();
        let mut stack = vec![id];
        while let Some(x) = stack.pop() {
            if let Some(v) = self.nodes[x].vertex {
                out.push(v);
            }
            stack.extend(self.nodes[x].children.iter().copied());
        }
        out
    }

    /// Identity must hold on the instance as it stands now (earlier
    /// removals applied), not on the original.
    #[cfg(debug_assertions)]
    fn assert_identical_now(&self, keeper_verts: &[usize], victim_verts: &[usize]) {
        let mut live = self.live_vertices(self.root);
        live.sort_unstable();
        let current = self.inst.restrict(&live);
        let remap = |v: usize| {
            current
                .graph()
                .index_of(self.inst.graph().label(v))
                .expect("live vertex survives the restriction")
        };
        let h1: Vec<usize> = keeper_verts.iter().map(|&v| remap(v)).collect();
        let h2: Vec<usize> = victim_verts.iter().map(|&v| remap(v)).collect();
        let phi: Vec<(usize, usize)> = h1.iter().copied().zip(h2.iter().copied()).collect();
        debug_assert!(identical_check(&current, &h1, &h2, &phi));
    }
}

/// Log-base-2 of the kernel size bound: the recurrence starts at 1 and each
/// step multiplies by `w`, by the square root of 2 raised to the square of
/// the previous value, and by `(2^k * k^2)` raised to the previous value.
/// Working in log space keeps the doubly exponential growth representable.
pub fn kernel_bound_log2(i: u64, k: u64, w: u64) -> f64 {
    assert!(i >= 1, "bound index must be at least 1");
    assert!(k >= 1, "color count must be at least 1");
    assert!(w >= 2, "width parameter must be at least 2");
    let (kf, wf) = (k as f64, w as f64);
    let mut log2_g = 0.0_f64;
    for _ in 1..i {
        let g = 2.0_f64.powf(log2_g);
        log2_g = wf.log2() + log2_g + g * g / 2.0 + g * (kf + 2.0 * kf.log2());
    }
    log2_g
}

/// The kernel size bound itself; infinite when it exceeds f64 range.
pub fn kernel_bound(i: u64, k: u64, w: u64) -> f64 {
    2.0_f64.powf(kernel_bound_log2(i, k, w))
}
