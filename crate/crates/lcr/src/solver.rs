//! Exact decision and shortest-length search over the implicit coloring
//! graph, plus lifting of kernel-level sequences back to the original
//! instance.
//!
//! States are proper list colorings packed as fixed-radix integers over
//! per-vertex list positions. Every search is guarded by a state cap and
//! refuses with an explicit error instead of ever returning a wrong verdict.
//!
//! Besides plain breadth-first search and Dijkstra, a cover-projection
//! search is available for decision questions: given a vertex cover, the
//! vertices outside it form an independent set whose colors never constrain
//! each other, so reachability can be decided on cover colorings alone with
//! a per-move feasibility test for the outside vertices. This is exact (see
//! `reachable_with_cover_projection`) and turns instances whose outside
//! part is huge but loosely constrained into tiny searches.

use std::collections::{BinaryHeap, HashMap, VecDeque};
use std::time::Instant;

use crate::error::{Error, Result};
use crate::instance::{
    are_adjacent, coloring_difference, is_proper_list_coloring, Coloring, Instance,
};
use crate::kernel_mw::{kernelize_mw, ReductionRecord, ReplayLog};
use crate::kernel_vc::{kernelize_vc, min_vertex_cover, split_partition, uncovered_edge, MergeLog, VertexCover};

pub const DEFAULT_STATE_CAP: u64 = 10_000_000;

/// Largest vertex-cover size the automatic strategy will search for before
/// falling back to plain search.
const AUTO_COVER_BOUND: usize = 24;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Verdict {
    Yes,
    No,
}

#[derive(Debug, Clone, Copy)]
pub struct SolveOptions {
    pub state_cap: u64,
}

impl Default for SolveOptions {
    fn default() -> Self {
        Self {
            state_cap: DEFAULT_STATE_CAP,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DecisionStrategy {
    Brute,
    KernelMw,
    Auto,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ShortestStrategy {
    Brute,
    KernelVc,
    Auto,
}

/// A chain of colorings from the initial to the target coloring in which
/// consecutive entries differ at exactly one vertex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReconfigurationSequence {
    colorings: Vec<Coloring>,
}

impl ReconfigurationSequence {
    pub fn new(colorings: Vec<Coloring>) -> Self {
        assert!(!colorings.is_empty(), "a sequence has at least one coloring");
        Self { colorings }
    }

    pub fn colorings(&self) -> &[Coloring] {
        &self.colorings
    }

    pub fn step_count(&self) -> usize {
        self.colorings.len() - 1
    }

    /// Sum of the weights of the recolored vertices.
    pub fn weighted_length(&self, inst: &Instance) -> u64 {
        self.colorings
            .windows(2)
            .map(|w| {
                let d = coloring_difference(&w[0], &w[1]);
                assert_eq!(d.len(), 1, "consecutive colorings must be adjacent");
                inst.weight(d[0])
            })
            .sum()
    }

    /// (vertex, new color) per step.
    pub fn steps(&self) -> Vec<(usize, usize)> {
        self.colorings
            .windows(2)
            .map(|w| {
                let d = coloring_difference(&w[0], &w[1]);
                assert_eq!(d.len(), 1, "consecutive colorings must be adjacent");
                (d[0], w[1][d[0]])
            })
            .collect()
    }

    /// Replays steps from the instance's initial coloring.
    pub fn from_steps(inst: &Instance, steps: &[(usize, usize)]) -> Self {
        let mut colorings = vec![inst.initial().clone()];
        for &(v, c) in steps {
            let mut next = colorings.last().unwrap().clone();
            next[v] = c;
            colorings.push(next);
        }
        Self::new(colorings)
    }
}

/// Checks the three sequence invariants: every coloring proper, consecutive
/// colorings adjacent, endpoints equal to the instance's initial and target.
pub fn validate_sequence(inst: &Instance, seq: &ReconfigurationSequence) -> bool {
    let cs = seq.colorings();
    cs.first() == Some(inst.initial())
        && cs.last() == Some(inst.target())
        && cs
            .iter()
            .all(|f| f.len() == inst.vertex_count() && is_proper_list_coloring(inst.graph(), inst.lists(), f))
        && cs.windows(2).all(|w| are_adjacent(&w[0], &w[1]))
}

#[derive(Debug, Clone, Default)]
pub struct SolveStats {
    pub states_explored: u64,
    pub kernel_vertices_before: Option<usize>,
    pub kernel_vertices_after: Option<usize>,
    pub elapsed_ms: f64,
    pub strategy: String,
}

/// Outcome of a solve call. `length` is the unit-step count for decision
/// searches and the weighted length for shortest searches; `None` encodes an
/// infinite length (verdict no).
#[derive(Debug, Clone)]
pub struct SolveReport {
    pub verdict: Verdict,
    pub length: Option<u64>,
    pub sequence: Option<ReconfigurationSequence>,
    pub stats: SolveStats,
}

impl SolveReport {
    fn no(states: u64) -> Self {
        Self {
            verdict: Verdict::No,
            length: None,
            sequence: None,
            stats: SolveStats {
                states_explored: states,
                ..Default::default()
            },
        }
    }

    fn yes(seq: ReconfigurationSequence, length: u64, states: u64) -> Self {
        Self {
            verdict: Verdict::Yes,
            length: Some(length),
            sequence: Some(seq),
            stats: SolveStats {
                states_explored: states,
                ..Default::default()
            },
        }
    }
}

/// Fixed-radix packing of colorings into integers: vertex v contributes the
/// position of its color inside its own list.
struct StateSpace<'a> {
    inst: &'a Instance,
    stride: Vec<u128>,
}

impl<'a> StateSpace<'a> {
    /// None when the full space size overflows u128 (then any cap below
    /// 2^64 is certainly exceeded as well).
    fn try_new(inst: &'a Instance) -> Option<Self> {
        let mut stride = Vec::with_capacity(inst.vertex_count());
        let mut acc: u128 = 1;
        for v in 0..inst.vertex_count() {
            stride.push(acc);
            acc = acc.checked_mul(inst.lists().list(v).len() as u128)?;
        }
        Some(Self { inst, stride })
    }

    fn full_size(&self) -> u128 {
        match self.inst.vertex_count() {
            0 => 1,
            n => {
                self.stride[n - 1] * self.inst.lists().list(n - 1).len() as u128
            }
        }
    }

    fn encode(&self, f: &Coloring) -> u128 {
        let mut code = 0u128;
        for v in 0..f.len() {
            let pos = self
                .inst
                .lists()
                .list(v)
                .binary_search(&f[v])
                .expect("color is in the list");
            code += pos as u128 * self.stride[v];
        }
        code
    }

    fn decode(&self, mut code: u128) -> Coloring {
        let n = self.inst.vertex_count();
        let mut f = vec![0usize; n];
        for v in (0..n).rev() {
            let pos = (code / self.stride[v]) as usize;
            code %= self.stride[v];
            f[v] = self.inst.lists().list(v)[pos];
        }
        f
    }

    /// Valid single-vertex recolorings from `f`, vertex-major then
    /// color-major, both ascending.
    fn moves(&self, f: &Coloring) -> Vec<(usize, usize)> {
        let g = self.inst.graph();
        let mut out = Vec::new();
        for v in 0..f.len() {
            'colors: for &c in self.inst.lists().list(v) {
                if c == f[v] {
                    continue;
                }
                for &u in g.neighbors(v) {
                    if f[u] == c {
                        continue 'colors;
                    }
                }
                out.push((v, c));
            }
        }
        out
    }
}

/// Breadth-first search over proper colorings with single-vertex recolor
/// moves. The returned sequence is a shortest unweighted one. Exceeding the
/// state cap is an error, never a verdict.
pub fn brute_force_reachable(inst: &Instance, opts: &SolveOptions) -> Result<SolveReport> {
    let space = StateSpace::try_new(inst).ok_or(Error::StateCapExceeded {
        explored: 0,
        cap: opts.state_cap,
    })?;
    let start = space.encode(inst.initial());
    let goal = space.encode(inst.target());
    if start == goal {
        let seq = ReconfigurationSequence::new(vec![inst.initial().clone()]);
        return Ok(SolveReport::yes(seq, 0, 1));
    }
    let mut parent: HashMap<u128, (u128, usize, usize)> = HashMap::new();
    parent.insert(start, (start, usize::MAX, 0));
    let mut queue = VecDeque::from([start]);
    while let Some(code) = queue.pop_front() {
        let f = space.decode(code);
        for (v, c) in space.moves(&f) {
            let mut nf = f.clone();
            nf[v] = c;
            let next = space.encode(&nf);
            if parent.contains_key(&next) {
                continue;
            }
            parent.insert(next, (code, v, c));
            if next == goal {
                let seq = reconstruct(&space, &parent, start, goal);
                let len = seq.step_count() as u64;
                return Ok(SolveReport::yes(seq, len, parent.len() as u64));
            }
            if parent.len() as u64 > opts.state_cap {
                return Err(Error::StateCapExceeded {
                    explored: parent.len() as u64,
                    cap: opts.state_cap,
                });
            }
            queue.push_back(next);
        }
    }
    Ok(SolveReport::no(parent.len() as u64))
}

fn reconstruct(
    space: &StateSpace,
    parent: &HashMap<u128, (u128, usize, usize)>,
    start: u128,
    goal: u128,
) -> ReconfigurationSequence {
    let mut codes = vec![goal];
    let mut cur = goal;
    while cur != start {
        cur = parent[&cur].0;
        codes.push(cur);
    }
    codes.reverse();
    ReconfigurationSequence::new(codes.into_iter().map(|c| space.decode(c)).collect())
}

/// Dijkstra over the same state graph with move cost equal to the weight of
/// the recolored vertex. Returns the minimum total weight, or verdict no
/// when the target is unreachable.
pub fn shortest_weighted(inst: &Instance, opts: &SolveOptions) -> Result<SolveReport> {
    let space = StateSpace::try_new(inst).ok_or(Error::StateCapExceeded {
        explored: 0,
        cap: opts.state_cap,
    })?;
    let start = space.encode(inst.initial());
    let goal = space.encode(inst.target());
    let mut dist: HashMap<u128, u64> = HashMap::from([(start, 0)]);
    let mut parent: HashMap<u128, (u128, usize, usize)> = HashMap::new();
    let mut heap: BinaryHeap<std::cmp::Reverse<(u64, u128)>> = BinaryHeap::new();
    heap.push(std::cmp::Reverse((0, start)));
    while let Some(std::cmp::Reverse((d, code))) = heap.pop() {
        if dist.get(&code) != Some(&d) {
            continue;
        }
        if code == goal {
            let seq = if code == start {
                ReconfigurationSequence::new(vec![inst.initial().clone()])
            } else {
                reconstruct(&space, &parent, start, goal)
            };
            debug_assert_eq!(seq.weighted_length(inst), d);
            return Ok(SolveReport::yes(seq, d, dist.len() as u64));
        }
        let f = space.decode(code);
        for (v, c) in space.moves(&f) {
            let mut nf = f.clone();
            nf[v] = c;
            let next = space.encode(&nf);
            let nd = d + inst.weight(v);
            if dist.get(&next).is_none_or(|&old| nd < old) {
                dist.insert(next, nd);
                parent.insert(next, (code, v, c));
                heap.push(std::cmp::Reverse((nd, next)));
                if dist.len() as u64 > opts.state_cap {
                    return Err(Error::StateCapExceeded {
                        explored: dist.len() as u64,
                        cap: opts.state_cap,
                    });
                }
            }
        }
    }
    Ok(SolveReport::no(dist.len() as u64))
}

/// Decides reachability by searching over colorings of a vertex cover only.
///
/// The vertices outside the cover form an independent set, so their colors
/// constrain only cover moves. A cover move of `v` to color `c` is feasible
/// iff, for every outside neighbor `x` of `v`, some color of `x`'s list
/// avoids `c`, the current color of `v`, and the current colors of `x`'s
/// other neighbors. Any real sequence projects to such a cover walk (the
/// actual outside colors witness feasibility), and conversely every cover
/// walk expands to a real sequence by moving conflicting outside vertices to
/// their witness colors first and recoloring the outside to its targets at
/// the end. Reachability is therefore decided exactly; the materialized
/// witness sequence is generally not a shortest one.
pub fn reachable_with_cover_projection(
    inst: &Instance,
    cover: &VertexCover,
    opts: &SolveOptions,
) -> Result<SolveReport> {
    if let Some((u, v)) = uncovered_edge(inst.graph(), cover.vertices()) {
        return Err(Error::NotAVertexCover(
            inst.graph().label(u).to_string(),
            inst.graph().label(v).to_string(),
        ));
    }
    let core: Vec<usize> = cover.vertices().to_vec();
    let mut in_core = vec![false; inst.vertex_count()];
    for &v in &core {
        in_core[v] = true;
    }
    let outside: Vec<usize> = (0..inst.vertex_count()).filter(|&v| !in_core[v]).collect();

    // Fixed-radix encoding over core vertices only.
    let mut stride = Vec::with_capacity(core.len());
    let mut acc: u128 = 1;
    for &v in &core {
        stride.push(acc);
        acc = acc
            .checked_mul(inst.lists().list(v).len() as u128)
            .ok_or(Error::StateCapExceeded {
                explored: 0,
                cap: opts.state_cap,
            })?;
    }
    let encode = |f: &[usize]| -> u128 {
        core.iter()
            .enumerate()
            .map(|(i, &v)| {
                inst.lists().list(v).binary_search(&f[i]).unwrap() as u128 * stride[i]
            })
            .sum()
    };
    let decode = |mut code: u128| -> Vec<usize> {
        let mut f = vec![0usize; core.len()];
        for i in (0..core.len()).rev() {
            let pos = (code / stride[i]) as usize;
            code %= stride[i];
            f[i] = inst.lists().list(core[i])[pos];
        }
        f
    };
    let core_pos: HashMap<usize, usize> = core.iter().enumerate().map(|(i, &v)| (v, i)).collect();

    // Feasibility of moving core vertex (index i) to color c under core
    // coloring g: core properness plus a witness color for every outside
    // neighbor.
    let move_ok = |g: &[usize], i: usize, c: usize| -> bool {
        let v = core[i];
        for &u in inst.graph().neighbors(v) {
            if let Some(&j) = core_pos.get(&u) {
                if g[j] == c {
                    return false;
                }
            }
        }
        for &x in inst.graph().neighbors(v) {
            if in_core[x] {
                continue;
            }
            let witness = inst.lists().list(x).iter().any(|&d| {
                d != c
                    && d != g[i]
                    && inst
                        .graph()
                        .neighbors(x)
                        .iter()
                        .all(|&u| u == v || g[core_pos[&u]] != d)
            });
            if !witness {
                return false;
            }
        }
        true
    };

    let start_core: Vec<usize> = core.iter().map(|&v| inst.initial()[v]).collect();
    let goal_core: Vec<usize> = core.iter().map(|&v| inst.target()[v]).collect();
    let start = encode(&start_core);
    let goal = encode(&goal_core);

    let mut parent: HashMap<u128, (u128, usize, usize)> = HashMap::new();
    parent.insert(start, (start, usize::MAX, 0));
    let mut queue = VecDeque::from([start]);
    let mut found = start == goal;
    while !found {
        let Some(code) = queue.pop_front() else {
            break;
        };
        let g = decode(code);
        for i in 0..core.len() {
            for &c in inst.lists().list(core[i]) {
                if c == g[i] || !move_ok(&g, i, c) {
                    continue;
                }
                let mut ng = g.clone();
                ng[i] = c;
                let next = encode(&ng);
                if parent.contains_key(&next) {
                    continue;
                }
                parent.insert(next, (code, i, c));
                if parent.len() as u64 > opts.state_cap {
                    return Err(Error::StateCapExceeded {
                        explored: parent.len() as u64,
                        cap: opts.state_cap,
                    });
                }
                if next == goal {
                    found = true;
                }
                queue.push_back(next);
            }
            if found {
                break;
            }
        }
    }
    if !found {
        return Ok(SolveReport::no(parent.len() as u64));
    }

    // Expand the cover walk into a concrete sequence.
    let mut macro_moves = Vec::new();
    let mut cur = goal;
    while cur != start {
        let (prev, i, c) = parent[&cur];
        macro_moves.push((i, c));
        cur = prev;
    }
    macro_moves.reverse();

    let mut f = inst.initial().clone();
    let mut colorings = vec![f.clone()];
    for (i, c) in macro_moves {
        let v = core[i];
        // Move conflicting outside neighbors to witness colors first.
        let mut conflicting: Vec<usize> = inst
            .graph()
            .neighbors(v)
            .iter()
            .copied()
            .filter(|&x| !in_core[x] && f[x] == c)
            .collect();
        inst.graph().sort_by_label(&mut conflicting);
        for x in conflicting {
            let d = inst
                .lists()
                .list(x)
                .iter()
                .copied()
                .find(|&d| {
                    d != c
                        && inst
                            .graph()
                            .neighbors(x)
                            .iter()
                            .all(|&u| f[u] != d)
                })
                .expect("feasibility was checked for this move");
            f[x] = d;
            colorings.push(f.clone());
        }
        f[v] = c;
        colorings.push(f.clone());
    }
    let mut pending: Vec<usize> = outside
        .iter()
        .copied()
        .filter(|&x| f[x] != inst.target()[x])
        .collect();
    inst.graph().sort_by_label(&mut pending);
    for x in pending {
        f[x] = inst.target()[x];
        colorings.push(f.clone());
    }
    let seq = ReconfigurationSequence::new(colorings);
    debug_assert!(validate_sequence(inst, &seq));
    let len = seq.step_count() as u64;
    Ok(SolveReport::yes(seq, len, parent.len() as u64))
}

/// Replays kernel removals in reverse: each removed copy is recolored in
/// lockstep with its kept twin, with one intermediate coloring inserted per
/// step that recolors a kept vertex. The result is validated against the
/// original instance.
pub fn lift_sequence(
    original: &Instance,
    kernel: &Instance,
    seq: &ReconfigurationSequence,
    log: &ReplayLog,
) -> Result<ReconfigurationSequence> {
    use std::collections::BTreeMap;
    let mut maps: Vec<BTreeMap<String, usize>> = seq
        .colorings()
        .iter()
        .map(|f| {
            (0..kernel.vertex_count())
                .map(|v| (kernel.graph().label(v).to_string(), f[v]))
                .collect()
        })
        .collect();

    for rec in log.iter().rev() {
        let mut removed_from_phi: Vec<&String> = rec.phi.iter().map(|(_, r)| r).collect();
        removed_from_phi.sort();
        let mut removed_sorted: Vec<&String> = rec.removed.iter().collect();
        removed_sorted.sort();
        if removed_from_phi != removed_sorted {
            return Err(Error::InconsistentReplayLog(
                "phi does not cover the removed set".into(),
            ));
        }
        // Extend every coloring onto the removed copy.
        for map in &mut maps {
            for (kept, removed) in &rec.phi {
                let c = *map.get(kept).ok_or_else(|| {
                    Error::InconsistentReplayLog(format!("kept vertex `{kept}` missing"))
                })?;
                map.insert(removed.clone(), c);
            }
        }
        // Repair adjacency: steps on kept vertices now change two vertices.
        let mut out = vec![maps[0].clone()];
        for next in &maps[1..] {
            let prev = out.last().unwrap().clone();
            let diff: Vec<&String> = prev
                .iter()
                .filter(|(l, c)| next.get(*l) != Some(c))
                .map(|(l, _)| l)
                .collect();
            match diff.len() {
                1 => out.push(next.clone()),
                2 => {
                    let pair = rec
                        .phi
                        .iter()
                        .find(|(k, r)| {
                            (diff[0] == k && diff[1] == r) || (diff[0] == r && diff[1] == k)
                        })
                        .ok_or_else(|| {
                            Error::InconsistentReplayLog(
                                "non-adjacent step does not match a phi pair".into(),
                            )
                        })?;
                    let kept = &pair.0;
                    let mut mid = prev.clone();
                    mid.insert(kept.clone(), next[kept]);
                    out.push(mid);
                    out.push(next.clone());
                }
                0 => {
                    return Err(Error::InconsistentReplayLog(
                        "duplicate consecutive colorings".into(),
                    ))
                }
                _ => {
                    return Err(Error::InconsistentReplayLog(
                        "step changes more than two vertices".into(),
                    ))
                }
            }
        }
        maps = out;
    }

    // Re-index onto the original instance.
    let mut colorings = Vec::with_capacity(maps.len());
    for map in &maps {
        if map.len() != original.vertex_count() {
            return Err(Error::InconsistentReplayLog(format!(
                "lifted domain has {} vertices, original has {}",
                map.len(),
                original.vertex_count()
            )));
        }
        let mut f = vec![0usize; original.vertex_count()];
        for (label, &c) in map {
            let v = original.graph().index_of(label).ok_or_else(|| {
                Error::InconsistentReplayLog(format!("unknown vertex `{label}`"))
            })?;
            f[v] = c;
        }
        colorings.push(f);
    }
    let lifted = ReconfigurationSequence::new(colorings);
    if !validate_sequence(original, &lifted) {
        return Err(Error::InconsistentReplayLog(
            "lifted sequence does not validate on the original instance".into(),
        ));
    }
    Ok(lifted)
}

/// Converts single-vertex weight merges into replay records so merged
/// shortest sequences lift through the same machinery.
pub fn merge_log_to_replay(log: &MergeLog) -> ReplayLog {
    log.iter()
        .map(|m| ReductionRecord {
            removed: vec![m.absorbed.clone()],
            phi: vec![(m.into.clone(), m.absorbed.clone())],
        })
        .collect()
}

/// Decides reachability with the chosen strategy. Disconnected inputs are
/// split into connected components, solved independently, and combined.
pub fn decide(inst: &Instance, strategy: DecisionStrategy, opts: &SolveOptions) -> Result<SolveReport> {
    let t0 = Instant::now();
    let mut report = solve_components(inst, opts, |comp, opts| match strategy {
        DecisionStrategy::Brute => brute_force_reachable(comp, opts),
        DecisionStrategy::KernelMw => decide_kernel_mw(comp, opts, false),
        DecisionStrategy::Auto => decide_kernel_mw(comp, opts, true),
    })?;
    report.stats.strategy = match strategy {
        DecisionStrategy::Brute => "brute",
        DecisionStrategy::KernelMw => "kernel-mw",
        DecisionStrategy::Auto => "auto",
    }
    .into();
    report.stats.elapsed_ms = t0.elapsed().as_secs_f64() * 1e3;
    Ok(report)
}

fn decide_kernel_mw(comp: &Instance, opts: &SolveOptions, adaptive: bool) -> Result<SolveReport> {
    let (kernel, log) = kernelize_mw(comp)?;
    let mut rep = if adaptive {
        decide_adaptive(&kernel, opts)?
    } else {
        brute_force_reachable(&kernel, opts)?
    };
    rep.stats.kernel_vertices_before = Some(comp.vertex_count());
    rep.stats.kernel_vertices_after = Some(kernel.vertex_count());
    if let Some(seq) = rep.sequence.take() {
        let lifted = lift_sequence(comp, &kernel, &seq, &log)?;
        rep.length = Some(lifted.step_count() as u64);
        rep.sequence = Some(lifted);
    }
    Ok(rep)
}

/// Plain search when the full state space fits under the cap; otherwise a
/// cover-projection search when a small enough cover exists.
fn decide_adaptive(kernel: &Instance, opts: &SolveOptions) -> Result<SolveReport> {
    let full = StateSpace::try_new(kernel).map(|s| s.full_size());
    if matches!(full, Some(size) if size <= opts.state_cap as u128) {
        return brute_force_reachable(kernel, opts);
    }
    if let Some(cover) = find_small_cover(kernel) {
        let core_size: Option<u128> = cover
            .vertices()
            .iter()
            .try_fold(1u128, |acc, &v| {
                acc.checked_mul(kernel.lists().list(v).len() as u128)
            });
        if matches!(core_size, Some(size) if size <= opts.state_cap as u128) {
            return reachable_with_cover_projection(kernel, &cover, opts);
        }
    }
    brute_force_reachable(kernel, opts)
}

fn find_small_cover(inst: &Instance) -> Option<VertexCover> {
    if let Some((clique, _)) = split_partition(inst.graph()) {
        return Some(VertexCover::new(clique));
    }
    let limit = AUTO_COVER_BOUND.min(inst.vertex_count());
    // A maximal matching lower-bounds every cover, so the exponential
    // search starts there and is skipped entirely when it cannot succeed.
    let matching = greedy_matching_size(inst.graph());
    if matching > limit {
        return None;
    }
    (matching..=limit).find_map(|bound| min_vertex_cover(inst.graph(), bound))
}

fn greedy_matching_size(graph: &crate::graph::Graph) -> usize {
    let mut matched = vec![false; graph.vertex_count()];
    let mut size = 0;
    for u in 0..graph.vertex_count() {
        if matched[u] {
            continue;
        }
        if let Some(&v) = graph.neighbors(u).iter().find(|&&v| v > u && !matched[v]) {
            matched[u] = true;
            matched[v] = true;
            size += 1;
        }
    }
    size
}

/// Computes the weighted shortest length with the chosen strategy,
/// per connected component, summing component optima.
pub fn shortest(inst: &Instance, strategy: ShortestStrategy, opts: &SolveOptions) -> Result<SolveReport> {
    let t0 = Instant::now();
    let mut report = solve_components(inst, opts, |comp, opts| match strategy {
        ShortestStrategy::Brute => shortest_weighted(comp, opts),
        ShortestStrategy::KernelVc | ShortestStrategy::Auto => shortest_kernel_vc(comp, opts),
    })?;
    report.stats.strategy = match strategy {
        ShortestStrategy::Brute => "brute",
        ShortestStrategy::KernelVc => "kernel-vc",
        ShortestStrategy::Auto => "auto",
    }
    .into();
    report.stats.elapsed_ms = t0.elapsed().as_secs_f64() * 1e3;
    Ok(report)
}

fn shortest_kernel_vc(comp: &Instance, opts: &SolveOptions) -> Result<SolveReport> {
    let cover = find_small_cover(comp)
        .unwrap_or_else(|| VertexCover::new((0..comp.vertex_count()).collect()));
    let (kernel, merge_log) = kernelize_vc(comp, &cover)?;
    let mut rep = shortest_weighted(&kernel, opts)?;
    rep.stats.kernel_vertices_before = Some(comp.vertex_count());
    rep.stats.kernel_vertices_after = Some(kernel.vertex_count());
    if let Some(seq) = rep.sequence.take() {
        let replay = merge_log_to_replay(&merge_log);
        let lifted = lift_sequence(comp, &kernel, &seq, &replay)?;
        debug_assert_eq!(Some(lifted.weighted_length(comp)), rep.length);
        rep.sequence = Some(lifted);
    }
    Ok(rep)
}

/// Splits into connected components, solves each, and recombines: the
/// verdict is the conjunction, lengths add, and component sequences are
/// replayed one after another inside the full coloring.
fn solve_components<F>(inst: &Instance, opts: &SolveOptions, solve_one: F) -> Result<SolveReport>
where
    F: Fn(&Instance, &SolveOptions) -> Result<SolveReport>,
{
    let components = inst.split_components();
    if components.len() == 1 {
        return solve_one(&components[0].0, opts);
    }
    let mut stats = SolveStats::default();
    let mut total_length: u64 = 0;
    let mut global = inst.initial().clone();
    let mut colorings = vec![global.clone()];
    let mut all_yes = true;
    for (comp, index_map) in &components {
        let rep = solve_one(comp, opts)?;
        stats.states_explored += rep.stats.states_explored;
        if let Some(b) = rep.stats.kernel_vertices_before {
            *stats.kernel_vertices_before.get_or_insert(0) += b;
        }
        if let Some(a) = rep.stats.kernel_vertices_after {
            *stats.kernel_vertices_after.get_or_insert(0) += a;
        }
        match rep.verdict {
            Verdict::No => {
                all_yes = false;
            }
            Verdict::Yes => {
                total_length += rep.length.expect("yes verdict carries a length");
                if let Some(seq) = rep.sequence {
                    for step in seq.colorings().windows(2) {
                        let d = coloring_difference(&step[0], &step[1]);
                        global[index_map[d[0]]] = step[1][d[0]];
                        colorings.push(global.clone());
                    }
                }
            }
        }
    }
    if !all_yes {
        return Ok(SolveReport {
            verdict: Verdict::No,
            length: None,
            sequence: None,
            stats,
        });
    }
    let seq = ReconfigurationSequence::new(colorings);
    debug_assert!(validate_sequence(inst, &seq));
    Ok(SolveReport {
        verdict: Verdict::Yes,
        length: Some(total_length),
        sequence: Some(seq),
        stats,
    })
}
