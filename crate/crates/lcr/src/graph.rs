//! Simple undirected graphs with stable external vertex labels.
//!
//! Vertices are addressed by dense indices `0..n`; every vertex carries a
//! unique string label that survives restriction and serialization. The
//! total order used wherever a deterministic vertex ordering is needed is
//! ascending label order.

use std::collections::{BTreeSet, VecDeque};

use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    labels: Vec<String>,
    adj: Vec<Vec<usize>>,
}

impl Graph {
    /// Builds a simple graph. Rejects duplicate labels, loops, and parallel
    /// edges.
    pub fn new<S: Into<String>>(labels: Vec<S>, edges: &[(usize, usize)]) -> Result<Self> {
        let labels: Vec<String> = labels.into_iter().map(Into::into).collect();
        let n = labels.len();
        let mut seen = BTreeSet::new();
        for l in &labels {
            if !seen.insert(l.clone()) {
                return Err(Error::InvalidInstance(format!("duplicate vertex id `{l}`")));
            }
        }
        let mut adj: Vec<BTreeSet<usize>> = vec![BTreeSet::new(); n];
        for &(u, v) in edges {
            if u >= n || v >= n {
                return Err(Error::InvalidInstance(format!(
                    "edge ({u}, {v}) references a vertex outside 0..{n}"
                )));
            }
            if u == v {
                return Err(Error::InvalidInstance(format!(
                    "loop at vertex `{}`",
                    labels[u]
                )));
            }
            if !adj[u].insert(v) {
                return Err(Error::InvalidInstance(format!(
                    "parallel edge between `{}` and `{}`",
                    labels[u], labels[v]
                )));
            }
            adj[v].insert(u);
        }
        Ok(Self {
            labels,
            adj: adj.into_iter().map(|s| s.into_iter().collect()).collect(),
        })
    }

    pub fn vertex_count(&self) -> usize {
        self.labels.len()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(Vec::len).sum::<usize>() / 2
    }

    pub fn label(&self, v: usize) -> &str {
        &self.labels[v]
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].binary_search(&v).is_ok()
    }

    /// Edges as (u, v) pairs with u < v, ascending.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for u in 0..self.vertex_count() {
            for &v in &self.adj[u] {
                if u < v {
                    out.push((u, v));
                }
            }
        }
        out
    }

    /// True when the label of `u` precedes the label of `v`.
    pub fn precedes(&self, u: usize, v: usize) -> bool {
        self.labels[u] < self.labels[v]
    }

    /// Sorts vertex indices by ascending label.
    pub fn sort_by_label(&self, verts: &mut [usize]) {
        verts.sort_by(|&a, &b| self.labels[a].cmp(&self.labels[b]));
    }

    /// Induced subgraph on `keep`, which must be strictly increasing vertex
    /// indices. Labels carry over; indices are re-packed to `0..keep.len()`.
    pub fn induced_subgraph(&self, keep: &[usize]) -> Graph {
        assert!(
            keep.windows(2).all(|w| w[0] < w[1]),
            "induced_subgraph: vertex set must be strictly increasing"
        );
        assert!(
            keep.iter().all(|&v| v < self.vertex_count()),
            "induced_subgraph: vertex outside graph"
        );
        let mut new_index = vec![usize::MAX; self.vertex_count()];
        for (i, &v) in keep.iter().enumerate() {
            new_index[v] = i;
        }
        let labels: Vec<String> = keep.iter().map(|&v| self.labels[v].clone()).collect();
        let mut edges = Vec::new();
        for &u in keep {
            for &v in &self.adj[u] {
                if u < v && new_index[v] != usize::MAX {
                    edges.push((new_index[u], new_index[v]));
                }
            }
        }
        Graph::new(labels, &edges).expect("induced subgraph of a valid graph is valid")
    }

    pub fn connected_components(&self) -> Vec<Vec<usize>> {
        let all: Vec<usize> = (0..self.vertex_count()).collect();
        self.components_within(&all)
    }

    pub fn is_connected(&self) -> bool {
        self.vertex_count() <= 1 || self.connected_components().len() == 1
    }

    /// Connected components of the subgraph induced by `verts`.
    pub fn components_within(&self, verts: &[usize]) -> Vec<Vec<usize>> {
        let mut in_set = vec![false; self.vertex_count()];
        for &v in verts {
            in_set[v] = true;
        }
        let mut visited = vec![false; self.vertex_count()];
        let mut comps = Vec::new();
        for &start in verts {
            if visited[start] {
                continue;
            }
            visited[start] = true;
            let mut comp = vec![start];
            let mut queue = VecDeque::from([start]);
            while let Some(v) = queue.pop_front() {
                for &u in &self.adj[v] {
                    if in_set[u] && !visited[u] {
                        visited[u] = true;
                        comp.push(u);
                        queue.push_back(u);
                    }
                }
            }
            comp.sort_unstable();
            comps.push(comp);
        }
        comps
    }

    /// Connected components of the complement of the subgraph induced by
    /// `verts`.
    pub fn co_components_within(&self, verts: &[usize]) -> Vec<Vec<usize>> {
        let mut remaining: BTreeSet<usize> = verts.iter().copied().collect();
        let mut comps = Vec::new();
        while let Some(&start) = remaining.iter().next() {
            remaining.remove(&start);
            let mut comp = vec![start];
            let mut queue = VecDeque::from([start]);
            while let Some(v) = queue.pop_front() {
                let non_neighbors: Vec<usize> = remaining
                    .iter()
                    .copied()
                    .filter(|&u| !self.has_edge(u, v))
                    .collect();
                for u in non_neighbors {
                    remaining.remove(&u);
                    comp.push(u);
                    queue.push_back(u);
                }
            }
            comp.sort_unstable();
            comps.push(comp);
        }
        comps
    }

    /// Size of a maximum clique, by exhaustive branching. Intended for
    /// kernel-scale graphs.
    pub fn max_clique_size(&self) -> usize {
        fn extend(g: &Graph, cand: &[usize], size: usize, best: &mut usize) {
            if size + cand.len() <= *best {
                return;
            }
            if cand.is_empty() {
                *best = (*best).max(size);
                return;
            }
            let v = cand[0];
            let with_v: Vec<usize> = cand[1..]
                .iter()
                .copied()
                .filter(|&u| g.has_edge(u, v))
                .collect();
            extend(g, &with_v, size + 1, best);
            extend(g, &cand[1..], size, best);
        }
        if self.vertex_count() == 0 {
            return 0;
        }
        let cand: Vec<usize> = (0..self.vertex_count()).collect();
        let mut best = 0;
        extend(self, &cand, 0, &mut best);
        best
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn labels(n: usize) -> Vec<String> {
        (0..n).map(|i| format!("v{i}")).collect()
    }

    #[test]
    fn rejects_loops_and_parallel_edges() {
        assert!(Graph::new(labels(2), &[(0, 0)]).is_err());
        assert!(Graph::new(labels(2), &[(0, 1), (1, 0)]).is_err());
        assert!(Graph::new(vec!["a", "a"], &[]).is_err());
    }

    #[test]
    fn adjacency_is_symmetric() {
        let g = Graph::new(labels(3), &[(0, 1), (1, 2)]).unwrap();
        assert!(g.has_edge(0, 1) && g.has_edge(1, 0));
        assert!(!g.has_edge(0, 2));
        assert_eq!(g.neighbors(1), &[0, 2]);
    }

    #[test]
    fn max_clique_edgeless_is_one() {
        let g = Graph::new(labels(5), &[]).unwrap();
        assert_eq!(g.max_clique_size(), 1);
    }

    #[test]
    fn max_clique_k4_is_four() {
        let g = Graph::new(labels(4), &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap();
        assert_eq!(g.max_clique_size(), 4);
    }

    #[test]
    fn max_clique_c5_matches_subset_enumeration() {
        let g = Graph::new(labels(5), &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)]).unwrap();
        // Independent oracle: check every vertex subset.
        let mut best = 0;
        for mask in 0u32..32 {
            let subset: Vec<usize> = (0..5).filter(|&v| mask >> v & 1 == 1).collect();
            let is_clique = subset
                .iter()
                .all(|&u| subset.iter().all(|&v| u == v || g.has_edge(u, v)));
            if is_clique {
                best = best.max(subset.len());
            }
        }
        assert_eq!(best, 2);
        assert_eq!(g.max_clique_size(), 2);
    }

    #[test]
    fn components_and_co_components() {
        // P3 plus an isolated vertex.
        let g = Graph::new(labels(4), &[(0, 1), (1, 2)]).unwrap();
        let comps = g.connected_components();
        assert_eq!(comps, vec![vec![0, 1, 2], vec![3]]);
        // Complement of P3 on {0,1,2}: edge 0-2 plus isolated 1.
        let co = g.co_components_within(&[0, 1, 2]);
        assert_eq!(co, vec![vec![0, 2], vec![1]]);
    }

    #[test]
    fn induced_subgraph_keeps_labels() {
        let g = Graph::new(labels(4), &[(0, 1), (1, 2), (2, 3)]).unwrap();
        let h = g.induced_subgraph(&[1, 2, 3]);
        assert_eq!(h.labels(), &["v1", "v2", "v3"]);
        assert_eq!(h.edges(), vec![(0, 1), (1, 2)]);
    }
}
