//! Shared helpers for the integration suites: oracles that stay independent
//! of the solver's state encoding, and exhaustive small-graph enumeration.
//! Not every suite uses every helper.
#![allow(dead_code)]

use std::collections::{HashMap, HashSet, VecDeque};

use lcr::instance::{is_proper_list_coloring, Coloring, Instance};
use lcr::Graph;

/// Reachability oracle over plain coloring vectors; no radix packing, no
/// shared code with the solver's search.
pub fn oracle_reachable(inst: &Instance) -> bool {
    if inst.initial() == inst.target() {
        return true;
    }
    let mut seen: HashSet<Coloring> = HashSet::from([inst.initial().clone()]);
    let mut queue = VecDeque::from([inst.initial().clone()]);
    while let Some(f) = queue.pop_front() {
        for v in 0..inst.vertex_count() {
            for &c in inst.lists().list(v) {
                if c == f[v] {
                    continue;
                }
                let mut nf = f.clone();
                nf[v] = c;
                if !is_proper_list_coloring(inst.graph(), inst.lists(), &nf) {
                    continue;
                }
                if nf == *inst.target() {
                    return true;
                }
                if seen.insert(nf.clone()) {
                    queue.push_back(nf);
                }
            }
        }
    }
    false
}

/// Weighted shortest-length oracle: uniform-cost search keyed by coloring
/// vectors. `None` means unreachable.
pub fn oracle_shortest(inst: &Instance) -> Option<u64> {
    let mut dist: HashMap<Coloring, u64> = HashMap::from([(inst.initial().clone(), 0)]);
    let mut heap = std::collections::BinaryHeap::new();
    heap.push(std::cmp::Reverse((0u64, inst.initial().clone())));
    while let Some(std::cmp::Reverse((d, f))) = heap.pop() {
        if dist.get(&f) != Some(&d) {
            continue;
        }
        if f == *inst.target() {
            return Some(d);
        }
        for v in 0..inst.vertex_count() {
            for &c in inst.lists().list(v) {
                if c == f[v] {
                    continue;
                }
                let mut nf = f.clone();
                nf[v] = c;
                if !is_proper_list_coloring(inst.graph(), inst.lists(), &nf) {
                    continue;
                }
                let nd = d + inst.weight(v);
                if dist.get(&nf).is_none_or(|&old| nd < old) {
                    dist.insert(nf.clone(), nd);
                    heap.push(std::cmp::Reverse((nd, nf)));
                }
            }
        }
    }
    None
}

/// All graphs on n vertices up to isomorphism, as edge lists.
pub fn graphs_up_to_isomorphism(n: usize) -> Vec<Vec<(usize, usize)>> {
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .collect();
    let mut perms = Vec::new();
    permutations(&mut (0..n).collect::<Vec<_>>(), 0, &mut perms);
    let mut seen = HashSet::new();
    let mut out = Vec::new();
    for mask in 0u32..1 << pairs.len() {
        let edges: Vec<(usize, usize)> = pairs
            .iter()
            .enumerate()
            .filter(|(i, _)| mask >> i & 1 == 1)
            .map(|(_, &e)| e)
            .collect();
        let canon = perms
            .iter()
            .map(|perm| {
                let mut remapped: u32 = 0;
                for &(u, v) in &edges {
                    let (a, b) = (perm[u].min(perm[v]), perm[u].max(perm[v]));
                    let idx = pairs.iter().position(|&p| p == (a, b)).unwrap();
                    remapped |= 1 << idx;
                }
                remapped
            })
            .min()
            .unwrap_or(0);
        if seen.insert(canon) {
            out.push(edges);
        }
    }
    out
}

fn permutations(items: &mut Vec<usize>, at: usize, out: &mut Vec<Vec<usize>>) {
    if at == items.len() {
        out.push(items.clone());
        return;
    }
    for i in at..items.len() {
        items.swap(at, i);
        permutations(items, at + 1, out);
        items.swap(at, i);
    }
}

pub fn labeled_graph(n: usize, edges: &[(usize, usize)], prefix: &str) -> Graph {
    let labels: Vec<String> = (0..n).map(|i| format!("{prefix}{i:02}")).collect();
    Graph::new(labels, edges).expect("test graph is simple")
}
