//! Vertex-cover kernelization for the weighted shortest variant.
//!
//! Given a vertex cover, the remaining vertices form an independent set.
//! Two of them with equal neighborhoods and equal (list, initial, target)
//! assignments are interchangeable: one is merged into the other and their
//! weights add, which preserves the weighted optimum exactly. The surviving
//! independent set then has at most `2^tau * 2^k * k^2` vertices.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::instance::Instance;

/// A set of vertices touching every edge.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VertexCover {
    vertices: Vec<usize>,
}

impl VertexCover {
    pub fn new(mut vertices: Vec<usize>) -> Self {
        vertices.sort_unstable();
        vertices.dedup();
        Self { vertices }
    }

    pub fn vertices(&self) -> &[usize] {
        &self.vertices
    }

    pub fn size(&self) -> usize {
        self.vertices.len()
    }
}

/// First edge with no endpoint in `set`, if any.
pub fn uncovered_edge(graph: &Graph, set: &[usize]) -> Option<(usize, usize)> {
    let mut in_set = vec![false; graph.vertex_count()];
    for &v in set {
        in_set[v] = true;
    }
    graph
        .edges()
        .into_iter()
        .find(|&(u, v)| !in_set[u] && !in_set[v])
}

/// Bounded-depth branching on an uncovered edge: returns some cover of size
/// at most `bound` when one exists. The result need not be minimum.
pub fn min_vertex_cover(graph: &Graph, bound: usize) -> Option<VertexCover> {
    fn first_uncovered(graph: &Graph, in_set: &[bool]) -> Option<(usize, usize)> {
        for u in 0..graph.vertex_count() {
            if in_set[u] {
                continue;
            }
            for &v in graph.neighbors(u) {
                if v > u && !in_set[v] {
                    return Some((u, v));
                }
            }
        }
        None
    }
    fn branch(graph: &Graph, chosen: &mut Vec<usize>, in_set: &mut Vec<bool>, bound: usize) -> bool {
        let Some((u, v)) = first_uncovered(graph, in_set) else {
            return true;
        };
        if bound == 0 {
            return false;
        }
        for pick in [u, v] {
            chosen.push(pick);
            in_set[pick] = true;
            if branch(graph, chosen, in_set, bound - 1) {
                return true;
            }
            in_set[pick] = false;
            chosen.pop();
        }
        false
    }
    let mut chosen = Vec::new();
    let mut in_set = vec![false; graph.vertex_count()];
    branch(graph, &mut chosen, &mut in_set, bound).then(|| VertexCover::new(chosen))
}

/// Split-graph recognition by the degree-sequence test. Returns the
/// (clique, independent set) partition when the graph is split, with the
/// clique drawn from the highest-degree vertices.
pub fn split_partition(graph: &Graph) -> Option<(Vec<usize>, Vec<usize>)> {
    let n = graph.vertex_count();
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&a, &b| {
        graph
            .degree(b)
            .cmp(&graph.degree(a))
            .then_with(|| graph.label(a).cmp(graph.label(b)))
    });
    let degs: Vec<usize> = order.iter().map(|&v| graph.degree(v)).collect();
    let mut m = 0;
    for i in 1..=n {
        if degs[i - 1] >= i - 1 {
            m = i;
        }
    }
    let head: usize = degs[..m].iter().sum();
    let tail: usize = degs[m..].iter().sum();
    if head != m * (m - 1) + tail {
        return None;
    }
    let mut clique: Vec<usize> = order[..m].to_vec();
    let mut indep: Vec<usize> = order[m..].to_vec();
    clique.sort_unstable();
    indep.sort_unstable();
    let clique_ok = clique
        .iter()
        .all(|&u| clique.iter().all(|&v| u == v || graph.has_edge(u, v)));
    let indep_ok = indep
        .iter()
        .all(|&u| indep.iter().all(|&v| u == v || !graph.has_edge(u, v)));
    (clique_ok && indep_ok).then_some((clique, indep))
}

/// One weight merge: `absorbed` was removed and its weight added to `into`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MergeRecord {
    pub into: String,
    pub absorbed: String,
    pub absorbed_weight: u64,
}

pub type MergeLog = Vec<MergeRecord>;

/// Merges interchangeable independent-set vertices, summing weights.
///
/// Vertices outside the cover are grouped by (neighborhood, assignment);
/// each group keeps its smallest-label member and absorbs the rest, which is
/// equivalent to repeated pairwise merges. Cover vertices are never touched,
/// and the weighted optimum of the instance is unchanged.
pub fn kernelize_vc(inst: &Instance, cover: &VertexCover) -> Result<(Instance, MergeLog)> {
    let graph = inst.graph();
    if let Some((u, v)) = uncovered_edge(graph, cover.vertices()) {
        return Err(Error::NotAVertexCover(
            graph.label(u).to_string(),
            graph.label(v).to_string(),
        ));
    }
    let mut in_cover = vec![false; inst.vertex_count()];
    for &v in cover.vertices() {
        in_cover[v] = true;
    }
    let mut groups: BTreeMap<Vec<u8>, Vec<usize>> = BTreeMap::new();
    for v in 0..inst.vertex_count() {
        if in_cover[v] {
            continue;
        }
        let mut key = Vec::new();
        for &u in graph.neighbors(v) {
            key.extend_from_slice(&(u as u64).to_le_bytes());
        }
        key.push(0xff);
        key.extend_from_slice(&inst.assignment(v).canonical_bytes());
        groups.entry(key).or_default().push(v);
    }
    let mut groups: Vec<Vec<usize>> = groups.into_values().collect();
    for g in &mut groups {
        g.sort_by(|&a, &b| graph.label(a).cmp(graph.label(b)));
    }
    groups.sort_by(|a, b| graph.label(a[0]).cmp(graph.label(b[0])));

    let mut weights = inst.weights().to_vec();
    let mut removed = vec![false; inst.vertex_count()];
    let mut log = MergeLog::new();
    for group in groups {
        let survivor = group[0];
        for &v in &group[1..] {
            log.push(MergeRecord {
                into: graph.label(survivor).to_string(),
                absorbed: graph.label(v).to_string(),
                absorbed_weight: weights[v],
            });
            weights[survivor] += weights[v];
            removed[v] = true;
        }
    }
    let keep: Vec<usize> = (0..inst.vertex_count()).filter(|&v| !removed[v]).collect();
    let kept_weights: Vec<u64> = keep.iter().map(|&v| weights[v]).collect();
    Ok((inst.restrict_with_weights(&keep, kept_weights), log))
}

/// The surviving-independent-set bound `2^tau * 2^k * k^2`.
pub fn vc_kernel_bound(tau: u32, k: u32) -> u128 {
    assert!(tau < 100 && k < 20, "bound arguments out of supported range");
    (1u128 << tau) * (1u128 << k) * (k as u128) * (k as u128)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::instance::{ColorSet, ListAssignment};

    fn graph(n: usize, edges: &[(usize, usize)]) -> Graph {
        let labels: Vec<String> = (0..n).map(|i| format!("v{i:02}")).collect();
        Graph::new(labels, edges).unwrap()
    }

    #[test]
    fn cover_of_edgeless_graph_is_empty() {
        let g = graph(4, &[]);
        let c = min_vertex_cover(&g, 0).unwrap();
        assert!(c.vertices().is_empty());
    }

    #[test]
    fn cover_of_p3_is_the_middle_vertex() {
        let g = graph(3, &[(0, 1), (1, 2)]);
        let c = min_vertex_cover(&g, 1).unwrap();
        assert_eq!(c.vertices(), &[1]);
    }

    #[test]
    fn triangle_needs_two() {
        let g = graph(3, &[(0, 1), (0, 2), (1, 2)]);
        assert!(min_vertex_cover(&g, 1).is_none());
        let c = min_vertex_cover(&g, 2).unwrap();
        assert_eq!(c.size(), 2);
        assert!(uncovered_edge(&g, c.vertices()).is_none());
    }

    #[test]
    fn split_recognition() {
        // Clique {0,1,2} plus independent {3,4} hanging off it.
        let g = graph(5, &[(0, 1), (0, 2), (1, 2), (0, 3), (1, 4)]);
        let (clique, indep) = split_partition(&g).unwrap();
        assert_eq!(clique, vec![0, 1, 2]);
        assert_eq!(indep, vec![3, 4]);
        // C4 is not split.
        let c4 = graph(4, &[(0, 1), (1, 2), (2, 3), (3, 0)]);
        assert!(split_partition(&c4).is_none());
    }

    fn star_instance() -> Instance {
        // Center v00 with three leaves of equal assignment, unit weights.
        let g = graph(4, &[(0, 1), (0, 2), (0, 3)]);
        Instance::new(
            g,
            ColorSet::numbered(2),
            ListAssignment::new(vec![vec![0, 1]; 4], 2).unwrap(),
            vec![0, 1, 1, 1],
            vec![1, 0, 0, 0],
        )
        .unwrap()
    }

    #[test]
    fn star_leaves_merge_into_one() {
        let inst = star_instance();
        let cover = VertexCover::new(vec![0]);
        let (kernel, log) = kernelize_vc(&inst, &cover).unwrap();
        assert_eq!(kernel.vertex_count(), 2);
        assert_eq!(log.len(), 2);
        let leaf = kernel.graph().index_of("v01").unwrap();
        assert_eq!(kernel.weight(leaf), 3);
        assert_eq!(kernel.weight(kernel.graph().index_of("v00").unwrap()), 1);
    }

    #[test]
    fn distinct_assignments_are_not_merged() {
        let g = graph(3, &[(0, 1), (0, 2)]);
        let inst = Instance::new(
            g,
            ColorSet::numbered(3),
            ListAssignment::new(vec![vec![0, 1], vec![0, 1], vec![0, 2]], 3).unwrap(),
            vec![0, 1, 2],
            vec![0, 1, 2],
        )
        .unwrap();
        let cover = VertexCover::new(vec![0]);
        let (kernel, log) = kernelize_vc(&inst, &cover).unwrap();
        assert_eq!(kernel, inst);
        assert!(log.is_empty());
    }

    #[test]
    fn rejects_non_covers() {
        let inst = star_instance();
        let bad = VertexCover::new(vec![1]);
        assert!(matches!(
            kernelize_vc(&inst, &bad),
            Err(Error::NotAVertexCover(..))
        ));
    }

    #[test]
    fn bound_values() {
        assert_eq!(vc_kernel_bound(2, 2), 64);
        assert_eq!(vc_kernel_bound(0, 1), 2);
    }

    /// Weighted merge preserves the optimum; checked against Dijkstra on
    /// both sides of the merge.
    #[test]
    fn merge_preserves_weighted_optimum() {
        use crate::solver::{shortest_weighted, SolveOptions};
        // Two interchangeable pendant vertices with different weights; the
        // center has a third color to step aside through.
        let g = graph(3, &[(0, 1), (0, 2)]);
        let inst = Instance::with_weights(
            g,
            ColorSet::numbered(3),
            ListAssignment::new(vec![vec![0, 1, 2], vec![0, 1], vec![0, 1]], 3).unwrap(),
            vec![0, 1, 1],
            vec![1, 0, 0],
            vec![1, 2, 3],
        )
        .unwrap();
        let cover = VertexCover::new(vec![0]);
        let (kernel, log) = kernelize_vc(&inst, &cover).unwrap();
        assert_eq!(log.len(), 1);
        assert_eq!(kernel.weight(kernel.graph().index_of("v01").unwrap()), 5);
        let opts = SolveOptions::default();
        let before = shortest_weighted(&inst, &opts).unwrap();
        let after = shortest_weighted(&kernel, &opts).unwrap();
        assert_eq!(before.length, Some(7));
        assert_eq!(before.length, after.length);
    }
}
