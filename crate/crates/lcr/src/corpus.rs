//! Deterministic instance generators for test corpora: random connected
//! graphs, cographs, split graphs, and instances produced by the independent
//! set reduction. All randomness flows from a single 64-bit seed.

use rand::prelude::IndexedRandom;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::instance::{ColorSet, Coloring, Instance, ListAssignment};
use crate::reduction::{reduce_is_to_lcr, IsInstance};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Family {
    Random,
    Cograph,
    Split,
    Reduction,
}

/// How the target coloring relates to the initial one: produced by a valid
/// recoloring walk (guaranteed reachable) or drawn independently (may be
/// unreachable).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PairMode {
    Reachable,
    Independent,
}

#[derive(Debug, Clone)]
pub struct GenConfig {
    pub family: Family,
    pub n: usize,
    pub k: usize,
    pub seed: u64,
    pub mode: PairMode,
    /// Weights drawn uniformly from 1..=max_weight; 1 keeps the instance
    /// unweighted.
    pub max_weight: u64,
    /// Edge probability for the random families.
    pub edge_prob: f64,
    /// Target independent set size for the reduction family.
    pub s: usize,
}

impl GenConfig {
    pub fn new(family: Family, n: usize, k: usize, seed: u64) -> Self {
        Self {
            family,
            n,
            k,
            seed,
            mode: PairMode::Reachable,
            max_weight: 1,
            edge_prob: 0.5,
            s: 2,
        }
    }
}

pub fn generate(cfg: &GenConfig) -> Result<Instance> {
    if cfg.n == 0 {
        return Err(Error::GenerationFailed("n must be at least 1".into()));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    if cfg.family == Family::Reduction {
        if cfg.s > cfg.n {
            return Err(Error::GenerationFailed(format!(
                "s = {} exceeds n = {}",
                cfg.s, cfg.n
            )));
        }
        let h = random_graph(cfg.n, cfg.edge_prob, "u", &mut rng);
        return Ok(reduce_is_to_lcr(&IsInstance::new(h, cfg.s)?));
    }
    // Graphs whose clique number exceeds k admit no proper coloring at all,
    // so the graph is redrawn together with the lists.
    for _ in 0..60 {
        let graph = match cfg.family {
            Family::Random => random_connected_graph(cfg.n, cfg.edge_prob, &mut rng),
            Family::Cograph => {
                if cfg.n >= 2 && cfg.k < 2 {
                    return Err(Error::GenerationFailed(
                        "a connected cograph on >= 2 vertices needs k >= 2".into(),
                    ));
                }
                random_cograph(cfg.n, cfg.k, &mut rng)
            }
            Family::Split => random_split_graph(cfg.n, cfg.k, &mut rng),
            Family::Reduction => unreachable!(),
        };
        if graph.max_clique_size() > cfg.k {
            continue;
        }
        if let Some(inst) = finish_instance(graph, cfg, &mut rng)? {
            return Ok(inst);
        }
    }
    Err(Error::GenerationFailed(
        "no properly colorable draw found; raise k or lower the density".into(),
    ))
}

fn vertex_labels(n: usize, prefix: &str) -> Vec<String> {
    let width = (n.max(2) - 1).to_string().len();
    (0..n).map(|i| format!("{prefix}{i:0width$}")).collect()
}

fn random_graph(n: usize, edge_prob: f64, prefix: &str, rng: &mut ChaCha8Rng) -> Graph {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.random_bool(edge_prob) {
                edges.push((u, v));
            }
        }
    }
    Graph::new(vertex_labels(n, prefix), &edges).expect("generated graph is simple")
}

fn random_connected_graph(n: usize, edge_prob: f64, rng: &mut ChaCha8Rng) -> Graph {
    // Random attachment tree first, extra edges after.
    let mut edges = Vec::new();
    for v in 1..n {
        edges.push((rng.random_range(0..v), v));
    }
    for u in 0..n {
        for v in u + 1..n {
            if !edges.contains(&(u, v)) && rng.random_bool(edge_prob / 2.0) {
                edges.push((u, v));
            }
        }
    }
    Graph::new(vertex_labels(n, "v"), &edges).expect("generated graph is simple")
}

/// Random cotree with an explicit clique budget so the result stays
/// colorable with `k` colors: a series node splits its budget among its
/// blocks, a parallel node passes it through unchanged.
fn random_cograph(n: usize, k: usize, rng: &mut ChaCha8Rng) -> Graph {
    fn partition(ids: &[usize], parts: usize, rng: &mut ChaCha8Rng) -> Vec<Vec<usize>> {
        let mut shuffled = ids.to_vec();
        for i in (1..shuffled.len()).rev() {
            shuffled.swap(i, rng.random_range(0..=i));
        }
        let mut blocks: Vec<Vec<usize>> = vec![Vec::new(); parts];
        for (i, &v) in shuffled.iter().enumerate() {
            blocks[i % parts].push(v);
        }
        blocks
    }
    fn build(
        ids: &[usize],
        budget: usize,
        force_series: bool,
        rng: &mut ChaCha8Rng,
        edges: &mut Vec<(usize, usize)>,
    ) {
        if ids.len() <= 1 {
            return;
        }
        let series = force_series || (budget >= 2 && rng.random_bool(0.5));
        if !series {
            let parts = rng.random_range(2..=ids.len().min(3));
            for block in partition(ids, parts, rng) {
                build(&block, budget, false, rng, edges);
            }
            return;
        }
        let parts = rng.random_range(2..=ids.len().min(3).min(budget));
        let blocks = partition(ids, parts, rng);
        for a in 0..parts {
            for b in a + 1..parts {
                for &u in &blocks[a] {
                    for &v in &blocks[b] {
                        edges.push((u.min(v), u.max(v)));
                    }
                }
            }
        }
        // Each block gets an equal share of the remaining clique budget.
        let share = (budget / parts).max(1);
        for block in &blocks {
            build(block, share, false, rng, edges);
        }
    }
    assert!(n == 1 || k >= 2, "a connected cograph on >= 2 vertices needs 2 colors");
    let ids: Vec<usize> = (0..n).collect();
    let mut edges = Vec::new();
    // Series root keeps the graph connected.
    build(&ids, k, n >= 2, rng, &mut edges);
    Graph::new(vertex_labels(n, "v"), &edges).expect("cograph edges are simple")
}

fn random_split_graph(n: usize, k: usize, rng: &mut ChaCha8Rng) -> Graph {
    let clique_size = rng.random_range(1..=k.min(n));
    let mut edges = Vec::new();
    for u in 0..clique_size {
        for v in u + 1..clique_size {
            edges.push((u, v));
        }
    }
    for v in clique_size..n {
        // Nonempty neighborhood inside the clique keeps the graph connected.
        let mut attached = false;
        for u in 0..clique_size {
            if rng.random_bool(0.5) {
                edges.push((u, v));
                attached = true;
            }
        }
        if !attached {
            edges.push((rng.random_range(0..clique_size), v));
        }
    }
    Graph::new(vertex_labels(n, "v"), &edges).expect("split graph edges are simple")
}

/// Draws lists and both endpoint colorings; `None` when no proper pair was
/// found for this graph.
fn finish_instance(
    graph: Graph,
    cfg: &GenConfig,
    rng: &mut ChaCha8Rng,
) -> Result<Option<Instance>> {
    let n = graph.vertex_count();
    let colors = ColorSet::numbered(cfg.k);
    for _ in 0..50 {
        let mut lists: Vec<Vec<usize>> = (0..n)
            .map(|_| {
                let mut l: Vec<usize> =
                    (0..cfg.k).filter(|_| rng.random_bool(0.6)).collect();
                if l.is_empty() {
                    l.push(rng.random_range(0..cfg.k));
                }
                l
            })
            .collect();
        // Every palette color appears in at least one list, so the declared
        // color count round-trips through the wire format.
        for c in 0..cfg.k {
            if !lists.iter().any(|l| l.contains(&c)) {
                let v = rng.random_range(0..n);
                lists[v].push(c);
                lists[v].sort_unstable();
            }
        }
        let assignment = ListAssignment::new(lists, cfg.k)?;
        let Some(initial) = greedy_coloring(&graph, &assignment, rng) else {
            continue;
        };
        let target = match cfg.mode {
            PairMode::Reachable => random_walk(&graph, &assignment, &initial, 4 * n, rng),
            PairMode::Independent => match greedy_coloring(&graph, &assignment, rng) {
                Some(t) => t,
                None => continue,
            },
        };
        let weights = (0..n)
            .map(|_| rng.random_range(1..=cfg.max_weight.max(1)))
            .collect();
        return Instance::with_weights(graph, colors, assignment, initial, target, weights)
            .map(Some);
    }
    Ok(None)
}

fn greedy_coloring(
    graph: &Graph,
    lists: &ListAssignment,
    rng: &mut ChaCha8Rng,
) -> Option<Coloring> {
    let n = graph.vertex_count();
    let mut order: Vec<usize> = (0..n).collect();
    for i in (1..n).rev() {
        order.swap(i, rng.random_range(0..=i));
    }
    let mut f = vec![usize::MAX; n];
    for &v in &order {
        let available: Vec<usize> = lists
            .list(v)
            .iter()
            .copied()
            .filter(|&c| graph.neighbors(v).iter().all(|&u| f[u] != c))
            .collect();
        f[v] = *available.choose(rng)?;
    }
    Some(f)
}

fn random_walk(
    graph: &Graph,
    lists: &ListAssignment,
    start: &Coloring,
    steps: usize,
    rng: &mut ChaCha8Rng,
) -> Coloring {
    let mut f = start.clone();
    for _ in 0..steps {
        let moves: Vec<(usize, usize)> = (0..graph.vertex_count())
            .flat_map(|v| {
                lists
                    .list(v)
                    .iter()
                    .copied()
                    .filter(|&c| c != f[v] && graph.neighbors(v).iter().all(|&u| f[u] != c))
                    .map(move |c| (v, c))
                    .collect::<Vec<_>>()
            })
            .collect();
        let Some(&(v, c)) = moves.choose(rng) else {
            break;
        };
        f[v] = c;
    }
    f
}

/// Small random connected unit-weight instance, for differential testing.
/// Size and color count are drawn in 1..=max; pairs may be unreachable.
pub fn random_connected_instance(seed: u64, max_n: usize, max_k: usize) -> Instance {
    random_weighted_instance(seed, max_n, max_k, 1)
}

/// As above but with weights in 1..=max_w. Draws (n, k, density) afresh per
/// attempt: combinations like k = 1 with an edge are simply uncolorable.
pub fn random_weighted_instance(seed: u64, max_n: usize, max_k: usize, max_w: u64) -> Instance {
    let mut outer = ChaCha8Rng::seed_from_u64(seed ^ 0x9e37_79b9_7f4a_7c15);
    for _ in 0..64 {
        let n = outer.random_range(1..=max_n);
        let k = outer.random_range(1..=max_k);
        let mut cfg = GenConfig::new(Family::Random, n, k, outer.random());
        cfg.mode = if outer.random_bool(0.5) {
            PairMode::Reachable
        } else {
            PairMode::Independent
        };
        cfg.max_weight = max_w;
        cfg.edge_prob = outer.random_range(0.2..0.9);
        if let Ok(inst) = generate(&cfg) {
            return inst;
        }
    }
    panic!("generation failed for every drawn configuration");
}
