//! Core problem data: color sets, list assignments, colorings, and instances.
//!
//! An instance bundles a graph, a per-vertex list of allowed colors, and two
//! proper list colorings (initial and target), plus optional positive vertex
//! weights. Properness of both endpoint colorings is validated at
//! construction and is an invariant afterwards.

use crate::error::{Error, Result};
use crate::graph::Graph;

/// A palette of `k` colors. Colors are dense indices `0..k`; each index has a
/// stable external name. Names are kept sorted, so index order equals name
/// order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ColorSet {
    names: Vec<String>,
}

impl ColorSet {
    pub fn new<S: Into<String>>(names: Vec<S>) -> Result<Self> {
        let mut names: Vec<String> = names.into_iter().map(Into::into).collect();
        names.sort();
        if names.is_empty() {
            return Err(Error::InvalidInstance("color set must not be empty".into()));
        }
        if names.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::InvalidInstance("duplicate color name".into()));
        }
        Ok(Self { names })
    }

    /// A palette of `k` colors named `c00`, `c01`, ... with enough zero
    /// padding to keep name order equal to numeric order.
    pub fn numbered(k: usize) -> Self {
        assert!(k >= 1, "color set must not be empty");
        let width = (k.max(2) - 1).to_string().len();
        let names = (0..k).map(|i| format!("c{i:0width$}")).collect();
        Self { names }
    }

    pub fn k(&self) -> usize {
        self.names.len()
    }

    pub fn name(&self, c: usize) -> &str {
        &self.names[c]
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.names.binary_search_by(|n| n.as_str().cmp(name)).ok()
    }
}

/// A coloring assigns one color index per vertex, indexed like the graph.
/// Properness is a predicate, not an invariant of the type.
pub type Coloring = Vec<usize>;

/// Per-vertex subsets of the color set. Lists may be empty; such a vertex
/// admits no list coloring at all.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ListAssignment {
    lists: Vec<Vec<usize>>,
}

impl ListAssignment {
    pub fn new(lists: Vec<Vec<usize>>, k: usize) -> Result<Self> {
        let mut lists = lists;
        for list in &mut lists {
            list.sort_unstable();
            if list.windows(2).any(|w| w[0] == w[1]) {
                return Err(Error::InvalidInstance("duplicate color in a list".into()));
            }
            if list.iter().any(|&c| c >= k) {
                return Err(Error::InvalidInstance(format!(
                    "list contains a color outside the color set of size {k}"
                )));
            }
        }
        Ok(Self { lists })
    }

    pub fn vertex_count(&self) -> usize {
        self.lists.len()
    }

    pub fn list(&self, v: usize) -> &[usize] {
        &self.lists[v]
    }

    pub fn contains(&self, v: usize, c: usize) -> bool {
        self.lists[v].binary_search(&c).is_ok()
    }
}

/// The (list, initial color, target color) triple of one vertex. Equality of
/// these triples is what makes vertices interchangeable for the reduction
/// rules.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct VertexAssignment {
    pub list: Vec<usize>,
    pub initial: usize,
    pub target: usize,
}

impl VertexAssignment {
    pub fn new(list: Vec<usize>, initial: usize, target: usize) -> Self {
        assert!(
            list.binary_search(&initial).is_ok() && list.binary_search(&target).is_ok(),
            "initial and target colors must be members of the list"
        );
        Self {
            list,
            initial,
            target,
        }
    }

    /// Canonical byte form: list length, sorted list, initial, target.
    pub fn canonical_bytes(&self) -> Vec<u8> {
        let mut out = Vec::with_capacity(8 * (self.list.len() + 3));
        out.extend_from_slice(&(self.list.len() as u64).to_le_bytes());
        for &c in &self.list {
            out.extend_from_slice(&(c as u64).to_le_bytes());
        }
        out.extend_from_slice(&(self.initial as u64).to_le_bytes());
        out.extend_from_slice(&(self.target as u64).to_le_bytes());
        out
    }
}

/// A list coloring reconfiguration instance.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Instance {
    graph: Graph,
    colors: ColorSet,
    lists: ListAssignment,
    initial: Coloring,
    target: Coloring,
    weights: Vec<u64>,
}

impl Instance {
    /// Unit-weight instance. Both colorings must be proper list colorings.
    pub fn new(
        graph: Graph,
        colors: ColorSet,
        lists: ListAssignment,
        initial: Coloring,
        target: Coloring,
    ) -> Result<Self> {
        let n = graph.vertex_count();
        Self::with_weights(graph, colors, lists, initial, target, vec![1; n])
    }

    pub fn with_weights(
        graph: Graph,
        colors: ColorSet,
        lists: ListAssignment,
        initial: Coloring,
        target: Coloring,
        weights: Vec<u64>,
    ) -> Result<Self> {
        let n = graph.vertex_count();
        if lists.vertex_count() != n || initial.len() != n || target.len() != n || weights.len() != n
        {
            return Err(Error::InvalidInstance(
                "per-vertex data does not match the vertex count".into(),
            ));
        }
        for v in 0..n {
            if lists.list(v).iter().any(|&c| c >= colors.k()) {
                return Err(Error::InvalidInstance(
                    "list refers to a color outside the color set".into(),
                ));
            }
        }
        if let Some(v) = (0..n).find(|&v| weights[v] == 0) {
            return Err(Error::InvalidInstance(format!(
                "vertex `{}` has weight 0; weights must be positive",
                graph.label(v)
            )));
        }
        for (name, f) in [("initial", &initial), ("target", &target)] {
            if let Some(why) = properness_violation(&graph, &lists, f) {
                return Err(Error::InvalidInstance(format!(
                    "{name} coloring is not a proper list coloring: {why}"
                )));
            }
        }
        Ok(Self {
            graph,
            colors,
            lists,
            initial,
            target,
            weights,
        })
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn colors(&self) -> &ColorSet {
        &self.colors
    }

    pub fn lists(&self) -> &ListAssignment {
        &self.lists
    }

    pub fn initial(&self) -> &Coloring {
        &self.initial
    }

    pub fn target(&self) -> &Coloring {
        &self.target
    }

    pub fn weights(&self) -> &[u64] {
        &self.weights
    }

    pub fn weight(&self, v: usize) -> u64 {
        self.weights[v]
    }

    pub fn vertex_count(&self) -> usize {
        self.graph.vertex_count()
    }

    pub fn k(&self) -> usize {
        self.colors.k()
    }

    pub fn is_weighted(&self) -> bool {
        self.weights.iter().any(|&w| w != 1)
    }

    pub fn assignment(&self, v: usize) -> VertexAssignment {
        VertexAssignment::new(
            self.lists.list(v).to_vec(),
            self.initial[v],
            self.target[v],
        )
    }

    /// Restriction to the induced subgraph on `keep` (strictly increasing
    /// vertex indices). Restricted colorings stay proper, so this cannot
    /// fail; passing indices outside the graph is a usage error and panics.
    pub fn restrict(&self, keep: &[usize]) -> Instance {
        let weights = keep.iter().map(|&v| self.weights[v]).collect();
        self.restrict_with_weights(keep, weights)
    }

    pub(crate) fn restrict_with_weights(&self, keep: &[usize], weights: Vec<u64>) -> Instance {
        let graph = self.graph.induced_subgraph(keep);
        let lists = ListAssignment {
            lists: keep.iter().map(|&v| self.lists.list(v).to_vec()).collect(),
        };
        let initial = keep.iter().map(|&v| self.initial[v]).collect();
        let target = keep.iter().map(|&v| self.target[v]).collect();
        Instance::with_weights(graph, self.colors.clone(), lists, initial, target, weights)
            .expect("restriction of a valid instance is valid")
    }

    /// Splits into one instance per connected component, together with the
    /// original vertex index of each component vertex.
    pub fn split_components(&self) -> Vec<(Instance, Vec<usize>)> {
        self.graph
            .connected_components()
            .into_iter()
            .map(|comp| (self.restrict(&comp), comp))
            .collect()
    }
}

fn properness_violation(graph: &Graph, lists: &ListAssignment, f: &Coloring) -> Option<String> {
    for v in 0..graph.vertex_count() {
        if !lists.contains(v, f[v]) {
            return Some(format!(
                "color of vertex `{}` is not in its list",
                graph.label(v)
            ));
        }
    }
    for (u, v) in graph.edges() {
        if f[u] == f[v] {
            return Some(format!(
                "adjacent vertices `{}` and `{}` share a color",
                graph.label(u),
                graph.label(v)
            ));
        }
    }
    None
}

/// True iff `f` assigns every vertex a color from its list and no edge is
/// monochromatic.
pub fn is_proper_list_coloring(graph: &Graph, lists: &ListAssignment, f: &Coloring) -> bool {
    assert_eq!(f.len(), graph.vertex_count(), "coloring domain mismatch");
    properness_violation(graph, lists, f).is_none()
}

/// Vertices on which two colorings over the same vertex set disagree.
pub fn coloring_difference(f: &Coloring, f2: &Coloring) -> Vec<usize> {
    assert_eq!(f.len(), f2.len(), "coloring domain mismatch");
    (0..f.len()).filter(|&v| f[v] != f2[v]).collect()
}

/// Two colorings are adjacent when they differ at exactly one vertex.
pub fn are_adjacent(f: &Coloring, f2: &Coloring) -> bool {
    coloring_difference(f, f2).len() == 1
}
