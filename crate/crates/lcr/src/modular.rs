//! Modules, substitution trees, and modular decomposition.
//!
//! The decomposition follows the classical recursive scheme: a graph whose
//! induced subgraph is disconnected splits into a parallel node over its
//! components, one whose complement is disconnected splits into a series
//! node over its co-components, and otherwise the maximal proper modules
//! partition the vertex set and yield a prime quotient with at least four
//! nodes. Maximal proper modules are found through minimal-module closures,
//! which is cubic-ish per level and entirely adequate at kernel scale.
//!
//! Two tree forms are produced: MD-trees (series / parallel / prime) and
//! PMD-trees, where every complete-quotient node is binarized into 2-join
//! nodes so that the maximum child count of a non-parallel node is
//! `max(2, modular width)`.

use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::graph::Graph;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum NodeKind {
    Leaf,
    Series,
    Parallel,
    Prime,
    TwoJoin,
}

impl NodeKind {
    fn name(self) -> &'static str {
        match self {
            NodeKind::Leaf => "leaf",
            NodeKind::Series => "series",
            NodeKind::Parallel => "parallel",
            NodeKind::Prime => "prime",
            NodeKind::TwoJoin => "2-join",
        }
    }
}

#[derive(Debug, Clone)]
pub struct TreeNode {
    pub kind: NodeKind,
    /// Child node ids; empty for leaves. The i-th child corresponds to the
    /// i-th vertex of the quotient graph.
    pub children: Vec<usize>,
    /// For leaves, the represented graph vertex.
    pub vertex: Option<usize>,
    /// Quotient graph over the children; `None` for leaves.
    pub quotient: Option<Graph>,
}

/// A rooted tree of quotient graphs whose evaluation reproduces a graph.
#[derive(Debug, Clone)]
pub struct SubstitutionTree {
    nodes: Vec<TreeNode>,
    root: usize,
    labels: Vec<String>,
}

/// Which structural rule set a tree is expected to satisfy.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TreeForm {
    Md,
    Pmd,
}

impl SubstitutionTree {
    pub fn root(&self) -> usize {
        self.root
    }

    pub fn node(&self, id: usize) -> &TreeNode {
        &self.nodes[id]
    }

    pub fn node_count(&self) -> usize {
        self.nodes.len()
    }

    pub fn node_ids(&self) -> impl Iterator<Item = usize> + '_ {
        0..self.nodes.len()
    }

    /// Labels of the represented graph, indexed by vertex.
    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    /// Vertices of the subgraph corresponding to a node, ascending by index.
    pub fn vertices_of(&self, id: usize) -> Vec<usize> {
        let mut out = Vec::new();
        let mut stack = vec![id];
        while let Some(x) = stack.pop() {
            let node = &self.nodes[x];
            if let Some(v) = node.vertex {
                out.push(v);
            }
            stack.extend(node.children.iter().copied());
        }
        out.sort_unstable();
        out
    }

    /// Evaluates the tree bottom-up with the substitution operation.
    pub fn evaluate(&self) -> Result<Graph> {
        self.evaluate_node(self.root)
    }

    pub fn evaluate_node(&self, id: usize) -> Result<Graph> {
        let node = &self.nodes[id];
        if let Some(v) = node.vertex {
            return Graph::new(vec![self.labels[v].clone()], &[]);
        }
        let parts: Vec<Graph> = node
            .children
            .iter()
            .map(|&c| self.evaluate_node(c))
            .collect::<Result<_>>()?;
        let quotient = node.quotient.as_ref().expect("non-leaf carries a quotient");
        substitute(quotient, &parts)
    }

    /// Maximum number of children of a prime node; 0 when no prime node
    /// exists.
    pub fn modular_width(&self) -> usize {
        self.nodes
            .iter()
            .filter(|n| n.kind == NodeKind::Prime)
            .map(|n| n.children.len())
            .max()
            .unwrap_or(0)
    }

    /// Maximum child count over non-parallel nodes, floored at 2. On trees
    /// produced by [`md_to_pmd`] this equals `max(2, modular_width)`.
    pub fn pseudo_modular_width(&self) -> usize {
        self.nodes
            .iter()
            .filter(|n| n.kind != NodeKind::Parallel && n.kind != NodeKind::Leaf)
            .map(|n| n.children.len())
            .max()
            .unwrap_or(0)
            .max(2)
    }

    /// Indented text dump for debugging; not a stability contract.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        self.write_node(&mut out, self.root, 0);
        out
    }

    fn write_node(&self, out: &mut String, id: usize, depth: usize) {
        let node = &self.nodes[id];
        let indent = "  ".repeat(depth);
        match node.vertex {
            Some(v) => {
                let _ = writeln!(out, "{indent}leaf {}", self.labels[v]);
            }
            None => {
                let q = node.quotient.as_ref().unwrap();
                let _ = writeln!(
                    out,
                    "{indent}{} ({} children, {} quotient edges)",
                    node.kind.name(),
                    node.children.len(),
                    q.edge_count()
                );
                for &c in &node.children {
                    self.write_node(out, c, depth + 1);
                }
            }
        }
    }

    /// A canonical string invariant under child reordering; equal signatures
    /// mean equal decompositions.
    pub fn canonical_signature(&self) -> String {
        self.signature_of(self.root)
    }

    fn signature_of(&self, id: usize) -> String {
        let node = &self.nodes[id];
        if let Some(v) = node.vertex {
            return format!("({})", self.labels[v]);
        }
        let mut sigs: Vec<String> = node
            .children
            .iter()
            .map(|&c| self.signature_of(c))
            .collect();
        // Prime quotients are order-sensitive; record edges against the
        // sorted child order.
        let order: Vec<usize> = {
            let mut idx: Vec<usize> = (0..sigs.len()).collect();
            idx.sort_by(|&a, &b| sigs[a].cmp(&sigs[b]));
            idx
        };
        let q = node.quotient.as_ref().unwrap();
        let mut pos = vec![0usize; sigs.len()];
        for (rank, &orig) in order.iter().enumerate() {
            pos[orig] = rank;
        }
        let mut edges: Vec<(usize, usize)> = q
            .edges()
            .into_iter()
            .map(|(a, b)| {
                let (x, y) = (pos[a], pos[b]);
                (x.min(y), x.max(y))
            })
            .collect();
        edges.sort_unstable();
        sigs.sort();
        format!(
            "{}[{}|{:?}]",
            node.kind.name(),
            sigs.join(","),
            edges
        )
    }

    /// Checks the structural constraints of the given tree form, that every
    /// node's vertex set is a module of `graph`, and that evaluation
    /// reproduces `graph` exactly.
    pub fn validate(&self, graph: &Graph, form: TreeForm) -> std::result::Result<(), String> {
        let mut seen = vec![false; graph.vertex_count()];
        for id in self.node_ids() {
            let node = self.node(id);
            match node.kind {
                NodeKind::Leaf => {
                    let v = node.vertex.ok_or("leaf without vertex")?;
                    if seen[v] {
                        return Err(format!("vertex {v} appears in two leaves"));
                    }
                    seen[v] = true;
                    if !node.children.is_empty() {
                        return Err("leaf with children".into());
                    }
                }
                kind => {
                    let q = node.quotient.as_ref().ok_or("non-leaf without quotient")?;
                    let p = node.children.len();
                    if q.vertex_count() != p || p < 2 {
                        return Err(format!("node {id}: quotient arity mismatch"));
                    }
                    let complete = q.edge_count() == p * (p - 1) / 2;
                    let edgeless = q.edge_count() == 0;
                    match (form, kind) {
                        (TreeForm::Md, NodeKind::Series) if !complete => {
                            return Err("series node with incomplete quotient".into())
                        }
                        (TreeForm::Md, NodeKind::Prime) | (TreeForm::Pmd, NodeKind::Prime) => {
                            if p < 4 || complete || edgeless {
                                return Err("prime node must have a prime quotient on >= 4 nodes".into());
                            }
                            if p <= 14 && !quotient_is_prime(q) {
                                return Err("prime node quotient has a nontrivial module".into());
                            }
                        }
                        (_, NodeKind::Parallel) if !edgeless => {
                            return Err("parallel node with non-edgeless quotient".into())
                        }
                        (TreeForm::Pmd, NodeKind::TwoJoin) if p != 2 || !complete => {
                            return Err("2-join node must have a K2 quotient".into())
                        }
                        (TreeForm::Md, NodeKind::TwoJoin) => {
                            return Err("2-join node in an MD-tree".into())
                        }
                        (TreeForm::Pmd, NodeKind::Series) => {
                            return Err("series node in a PMD-tree".into())
                        }
                        _ => {}
                    }
                    for &c in &node.children {
                        let child = self.node(c);
                        let same = child.kind == kind;
                        let both_series_like = matches!(
                            (kind, child.kind),
                            (NodeKind::Series, NodeKind::Series)
                        );
                        if (kind == NodeKind::Parallel && same)
                            || (form == TreeForm::Md && both_series_like)
                        {
                            return Err(format!(
                                "edge between two {} nodes",
                                kind.name()
                            ));
                        }
                    }
                }
            }
            let verts = self.vertices_of(id);
            if !is_module(graph, &verts) {
                return Err(format!("node {id} vertex set is not a module"));
            }
        }
        if !seen.iter().all(|&s| s) {
            return Err("some graph vertex has no leaf".into());
        }
        let eval = self.evaluate().map_err(|e| e.to_string())?;
        if !same_labeled_graph(&eval, graph) {
            return Err("evaluation does not reproduce the graph".into());
        }
        Ok(())
    }
}

/// Edge-set equality under vertex labels (index order may differ).
pub fn same_labeled_graph(a: &Graph, b: &Graph) -> bool {
    if a.vertex_count() != b.vertex_count() {
        return false;
    }
    let mut la: Vec<&str> = a.labels().iter().map(String::as_str).collect();
    let mut lb: Vec<&str> = b.labels().iter().map(String::as_str).collect();
    la.sort_unstable();
    lb.sort_unstable();
    if la != lb {
        return false;
    }
    let edge_labels = |g: &Graph| -> Vec<(String, String)> {
        let mut out: Vec<(String, String)> = g
            .edges()
            .into_iter()
            .map(|(u, v)| {
                let (x, y) = (g.label(u).to_string(), g.label(v).to_string());
                if x < y {
                    (x, y)
                } else {
                    (y, x)
                }
            })
            .collect();
        out.sort();
        out
    };
    edge_labels(a) == edge_labels(b)
}

/// True iff every two vertices of `m` have the same neighborhood outside
/// `m`.
pub fn is_module(graph: &Graph, m: &[usize]) -> bool {
    assert!(
        m.iter().all(|&v| v < graph.vertex_count()),
        "module candidate outside the graph"
    );
    if m.len() <= 1 {
        return true;
    }
    let mut in_m = vec![false; graph.vertex_count()];
    for &v in m {
        in_m[v] = true;
    }
    let outside = |v: usize| -> Vec<usize> {
        graph
            .neighbors(v)
            .iter()
            .copied()
            .filter(|&u| !in_m[u])
            .collect()
    };
    let first = outside(m[0]);
    m[1..].iter().all(|&v| outside(v) == first)
}

fn quotient_is_prime(q: &Graph) -> bool {
    let n = q.vertex_count();
    for mask in 1u64..(1 << n) {
        let subset: Vec<usize> = (0..n).filter(|&v| mask >> v & 1 == 1).collect();
        if subset.len() <= 1 || subset.len() == n {
            continue;
        }
        if is_module(q, &subset) {
            return false;
        }
    }
    true
}

/// The quotient substitution: takes the disjoint union of `parts` and joins
/// every pair of vertices whose owning parts are adjacent in `quotient`.
pub fn substitute(quotient: &Graph, parts: &[Graph]) -> Result<Graph> {
    if parts.len() != quotient.vertex_count() || parts.len() < 2 {
        return Err(Error::InvalidInput(format!(
            "substitution arity mismatch: quotient has {} nodes, {} parts given",
            quotient.vertex_count(),
            parts.len()
        )));
    }
    let mut labels: Vec<String> = Vec::new();
    let mut offsets = Vec::with_capacity(parts.len());
    for part in parts {
        offsets.push(labels.len());
        labels.extend(part.labels().iter().cloned());
    }
    let mut edges: Vec<(usize, usize)> = Vec::new();
    for (i, part) in parts.iter().enumerate() {
        for (u, v) in part.edges() {
            edges.push((offsets[i] + u, offsets[i] + v));
        }
    }
    for (qi, qj) in quotient.edges() {
        for u in 0..parts[qi].vertex_count() {
            for v in 0..parts[qj].vertex_count() {
                edges.push((offsets[qi] + u, offsets[qj] + v));
            }
        }
    }
    Graph::new(labels, &edges)
}

/// Computes the unique modular decomposition tree of a connected graph.
///
/// Panics when the graph is empty or disconnected; split components first.
pub fn compute_md_tree(graph: &Graph) -> SubstitutionTree {
    assert!(graph.vertex_count() >= 1, "md-tree of an empty graph");
    assert!(graph.is_connected(), "md-tree requires a connected graph");
    let mut nodes = Vec::new();
    let all: Vec<usize> = (0..graph.vertex_count()).collect();
    let root = decompose(graph, all, &mut nodes);
    SubstitutionTree {
        nodes,
        root,
        labels: graph.labels().to_vec(),
    }
}

fn decompose(graph: &Graph, verts: Vec<usize>, nodes: &mut Vec<TreeNode>) -> usize {
    if verts.len() == 1 {
        nodes.push(TreeNode {
            kind: NodeKind::Leaf,
            children: Vec::new(),
            vertex: Some(verts[0]),
            quotient: None,
        });
        return nodes.len() - 1;
    }
    let comps = graph.components_within(&verts);
    let (kind, blocks) = if comps.len() > 1 {
        (NodeKind::Parallel, comps)
    } else {
        let cocomps = graph.co_components_within(&verts);
        if cocomps.len() > 1 {
            (NodeKind::Series, cocomps)
        } else {
            let blocks = maximal_proper_modules(graph, &verts);
            // Over maximal proper modules of a graph that is connected and
            // co-connected the quotient is prime, which forces >= 4 blocks.
            assert!(
                blocks.len() >= 4,
                "prime quotient with fewer than 4 nodes; decomposition bug"
            );
            (NodeKind::Prime, blocks)
        }
    };
    build_internal(graph, kind, blocks, nodes)
}

fn build_internal(
    graph: &Graph,
    kind: NodeKind,
    mut blocks: Vec<Vec<usize>>,
    nodes: &mut Vec<TreeNode>,
) -> usize {
    // Children ordered by the smallest label in their subtree.
    blocks.sort_by(|a, b| min_label(graph, a).cmp(min_label(graph, b)));
    let quotient = quotient_of_blocks(graph, &blocks);
    let children: Vec<usize> = blocks
        .into_iter()
        .map(|block| decompose(graph, block, nodes))
        .collect();
    nodes.push(TreeNode {
        kind,
        children,
        vertex: None,
        quotient: Some(quotient),
    });
    nodes.len() - 1
}

fn min_label<'a>(graph: &'a Graph, block: &[usize]) -> &'a str {
    block
        .iter()
        .map(|&v| graph.label(v))
        .min()
        .expect("blocks are nonempty")
}

/// Quotient over blocks: one node per block, adjacent when any (equivalently
/// every) cross pair is adjacent. Quotient nodes are labeled by the smallest
/// vertex label of their block.
pub(crate) fn quotient_of_blocks(graph: &Graph, blocks: &[Vec<usize>]) -> Graph {
    let labels: Vec<String> = blocks
        .iter()
        .map(|b| min_label(graph, b).to_string())
        .collect();
    let reps: Vec<usize> = blocks.iter().map(|b| b[0]).collect();
    let mut edges = Vec::new();
    for i in 0..reps.len() {
        for j in i + 1..reps.len() {
            if graph.has_edge(reps[i], reps[j]) {
                edges.push((i, j));
            }
        }
    }
    Graph::new(labels, &edges).expect("quotient construction is valid")
}

/// Maximal proper modules of the subgraph induced by `verts`, assuming both
/// the subgraph and its complement are connected. In that case they
/// partition `verts`, and the block containing `u` is exactly `u` together
/// with every `w` whose minimal containing module is proper.
fn maximal_proper_modules(graph: &Graph, verts: &[usize]) -> Vec<Vec<usize>> {
    let mut assigned = vec![false; graph.vertex_count()];
    let mut blocks = Vec::new();
    for &u in verts {
        if assigned[u] {
            continue;
        }
        let mut block = vec![u];
        for &w in verts {
            if w == u || assigned[w] {
                continue;
            }
            if minimal_module_is_proper(graph, verts, u, w) {
                block.push(w);
            }
        }
        block.sort_unstable();
        for &v in &block {
            assigned[v] = true;
        }
        blocks.push(block);
    }
    blocks
}

/// Closure of {u, w} under splitters inside `verts`; returns whether the
/// resulting minimal module is a proper subset of `verts`.
fn minimal_module_is_proper(graph: &Graph, verts: &[usize], u: usize, w: usize) -> bool {
    let mut in_m = vec![false; graph.vertex_count()];
    in_m[u] = true;
    in_m[w] = true;
    let mut members = vec![u, w];
    loop {
        let mut grew = false;
        for &z in verts {
            if in_m[z] {
                continue;
            }
            let mut adj_some = false;
            let mut non_some = false;
            for &a in &members {
                if graph.has_edge(z, a) {
                    adj_some = true;
                } else {
                    non_some = true;
                }
                if adj_some && non_some {
                    break;
                }
            }
            if adj_some && non_some {
                in_m[z] = true;
                members.push(z);
                grew = true;
                if members.len() == verts.len() {
                    return false;
                }
            }
        }
        if !grew {
            return members.len() < verts.len();
        }
    }
}

/// Rewrites an MD-tree into a PMD-tree: every series node with m >= 3
/// children becomes a right-leaning chain of m-1 two-child 2-join nodes;
/// series pairs become single 2-join nodes; parallel and prime nodes are
/// unchanged.
pub fn md_to_pmd(tree: &SubstitutionTree) -> SubstitutionTree {
    let mut nodes = Vec::new();
    let root = rebuild_pmd(tree, tree.root(), &mut nodes);
    SubstitutionTree {
        nodes,
        root,
        labels: tree.labels.clone(),
    }
}

fn rebuild_pmd(tree: &SubstitutionTree, id: usize, nodes: &mut Vec<TreeNode>) -> usize {
    let node = tree.node(id);
    if let Some(v) = node.vertex {
        nodes.push(TreeNode {
            kind: NodeKind::Leaf,
            children: Vec::new(),
            vertex: Some(v),
            quotient: None,
        });
        return nodes.len() - 1;
    }
    let children: Vec<usize> = node
        .children
        .iter()
        .map(|&c| rebuild_pmd(tree, c, nodes))
        .collect();
    match node.kind {
        NodeKind::Series | NodeKind::TwoJoin => {
            chain_of_two_joins(tree, &children, nodes)
        }
        kind => {
            nodes.push(TreeNode {
                kind,
                children,
                vertex: None,
                quotient: node.quotient.clone(),
            });
            nodes.len() - 1
        }
    }
}

fn chain_of_two_joins(
    tree: &SubstitutionTree,
    children: &[usize],
    nodes: &mut Vec<TreeNode>,
) -> usize {
    // Walks right-to-left: the last two children pair up first, then each
    // earlier child gets a fresh node above the chain built so far.
    let k2 = |left: String, right: String| {
        Graph::new(vec![left, right], &[(0, 1)]).expect("K2 quotient")
    };
    let min_label_of = |nodes: &Vec<TreeNode>, id: usize, tree: &SubstitutionTree| -> String {
        // nodes are in the new arena; leaves reference tree labels
        let mut best: Option<String> = None;
        let mut stack = vec![id];
        while let Some(x) = stack.pop() {
            if let Some(v) = nodes[x].vertex {
                let l = tree.labels[v].clone();
                if best.as_ref().is_none_or(|b| &l < b) {
                    best = Some(l);
                }
            }
            stack.extend(nodes[x].children.iter().copied());
        }
        best.expect("subtree has a leaf")
    };
    let m = children.len();
    assert!(m >= 2);
    let mut right = children[m - 1];
    for i in (0..m - 1).rev() {
        let left = children[i];
        let q = k2(
            min_label_of(nodes, left, tree),
            min_label_of(nodes, right, tree),
        );
        nodes.push(TreeNode {
            kind: NodeKind::TwoJoin,
            children: vec![left, right],
            vertex: None,
            quotient: Some(q),
        });
        right = nodes.len() - 1;
    }
    right
}

/// Free-function views of the width measures.
pub fn modular_width(tree: &SubstitutionTree) -> usize {
    tree.modular_width()
}

pub fn pseudo_modular_width(tree: &SubstitutionTree) -> usize {
    tree.pseudo_modular_width()
}
