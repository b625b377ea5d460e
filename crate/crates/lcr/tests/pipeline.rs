//! Cross-module properties: kernelization soundness against independent
//! oracles, structural invariants of the decomposition, and wire-format
//! round trips.

mod common;

use std::collections::{HashSet, VecDeque};

use common::{labeled_graph, oracle_reachable, oracle_shortest};
use lcr::corpus;
use lcr::instance::{
    are_adjacent, coloring_difference, is_proper_list_coloring, ColorSet, Instance,
    ListAssignment,
};
use lcr::kernel_mw::{id_matrix, identical_check, kernelize_mw};
use lcr::kernel_vc::{kernelize_vc, min_vertex_cover, VertexCover};
use lcr::modular::{compute_md_tree, md_to_pmd, NodeKind};
use lcr::reduction::{plan_reduction, reduce_is_to_lcr, IsInstance};
use lcr::solver::{shortest_weighted, SolveOptions};

use proptest::prelude::*;

#[test]
fn adjacency_iff_single_difference_exhaustive() {
    // Every pair of colorings on up to 4 vertices over 3 colors.
    for n in 1..=4usize {
        let total = 3usize.pow(n as u32);
        let dec = |mut x: usize| -> Vec<usize> {
            let mut f = vec![0; n];
            for slot in f.iter_mut() {
                *slot = x % 3;
                x /= 3;
            }
            f
        };
        for a in 0..total {
            for b in 0..total {
                let (f, g) = (dec(a), dec(b));
                assert_eq!(
                    are_adjacent(&f, &g),
                    coloring_difference(&f, &g).len() == 1
                );
            }
        }
    }
}

/// If a list coloring exists at all (checked exhaustively), the clique
/// number cannot exceed the palette size.
#[test]
fn colorable_instances_bound_the_clique_number() {
    fn some_coloring_exists(inst: &Instance) -> bool {
        fn rec(inst: &Instance, v: usize, f: &mut Vec<usize>) -> bool {
            if v == inst.vertex_count() {
                return true;
            }
            for &c in inst.lists().list(v) {
                if inst.graph().neighbors(v).iter().all(|&u| u >= v || f[u] != c) {
                    f[v] = c;
                    if rec(inst, v + 1, f) {
                        return true;
                    }
                }
            }
            false
        }
        let mut f = vec![0; inst.vertex_count()];
        rec(inst, 0, &mut f)
    }
    for seed in 0..80u64 {
        let inst = corpus::random_connected_instance(seed, 8, 3);
        assert!(some_coloring_exists(&inst), "instances are colorable by construction");
        assert!(
            inst.graph().max_clique_size() <= inst.k(),
            "seed {seed}: clique number exceeds k"
        );
    }
}

/// Children of a parallel node with equal ID-matrices must pass the full
/// identity check under the label-order bijection.
#[test]
fn equal_matrices_of_parallel_children_certify_identity() {
    let mut pairs_checked = 0;
    for seed in 0..400u64 {
        let inst = corpus::random_connected_instance(90_000 + seed, 9, 3);
        let pmd = md_to_pmd(&compute_md_tree(inst.graph()));
        for id in pmd.node_ids() {
            if pmd.node(id).kind != NodeKind::Parallel {
                continue;
            }
            let kids = &pmd.node(id).children;
            let m = kids
                .iter()
                .map(|&c| pmd.vertices_of(c).len())
                .max()
                .unwrap();
            for (ai, &a) in kids.iter().enumerate() {
                for &b in &kids[ai + 1..] {
                    let ma = id_matrix(&inst, &pmd, a, m);
                    let mb = id_matrix(&inst, &pmd, b, m);
                    if ma != mb {
                        continue;
                    }
                    let sort = |node: usize| {
                        let mut v = pmd.vertices_of(node);
                        inst.graph().sort_by_label(&mut v);
                        v
                    };
                    let (h1, h2) = (sort(a), sort(b));
                    let phi: Vec<(usize, usize)> =
                        h1.iter().copied().zip(h2.iter().copied()).collect();
                    assert!(
                        identical_check(&inst, &h1, &h2, &phi),
                        "seed {seed}: equal matrices but not identical"
                    );
                    pairs_checked += 1;
                }
            }
        }
    }
    assert!(pairs_checked > 10, "only {pairs_checked} equal pairs seen");
}

#[test]
fn mw_kernelization_is_idempotent_and_keeps_connectivity() {
    for seed in 0..200u64 {
        let inst = corpus::random_connected_instance(50_000 + seed, 9, 3);
        let (kernel, _) = kernelize_mw(&inst).unwrap();
        assert!(
            kernel.graph().is_connected(),
            "seed {seed}: kernel disconnected"
        );
        let (again, log) = kernelize_mw(&kernel).unwrap();
        assert!(log.is_empty(), "seed {seed}: second pass removed something");
        assert_eq!(again, kernel, "seed {seed}");
    }
}

#[test]
fn vc_kernelization_preserves_unweighted_reachability() {
    for seed in 0..200u64 {
        let inst = corpus::random_connected_instance(60_000 + seed, 8, 3);
        let cover = (0..=inst.vertex_count())
            .find_map(|b| min_vertex_cover(inst.graph(), b))
            .unwrap();
        let (kernel, _) = kernelize_vc(&inst, &cover).unwrap();
        assert_eq!(
            oracle_reachable(&inst),
            oracle_reachable(&kernel),
            "seed {seed}"
        );
    }
}

/// Merging only ever removes vertices outside the cover, and what remains
/// of the cover still covers the kernel.
#[test]
fn vc_kernelization_never_touches_the_cover() {
    use lcr::kernel_vc::uncovered_edge;
    for seed in 0..150u64 {
        let inst = corpus::random_weighted_instance(65_000 + seed, 8, 3, 3);
        let cover = (0..=inst.vertex_count())
            .find_map(|b| min_vertex_cover(inst.graph(), b))
            .unwrap();
        let (kernel, log) = kernelize_vc(&inst, &cover).unwrap();
        let cover_labels: Vec<&str> = cover
            .vertices()
            .iter()
            .map(|&v| inst.graph().label(v))
            .collect();
        for m in &log {
            assert!(
                !cover_labels.contains(&m.absorbed.as_str()),
                "seed {seed}: cover vertex {} was absorbed",
                m.absorbed
            );
        }
        let kernel_cover: Vec<usize> = cover_labels
            .iter()
            .map(|l| kernel.graph().index_of(l).expect("cover vertex survives"))
            .collect();
        assert!(
            uncovered_edge(kernel.graph(), &kernel_cover).is_none(),
            "seed {seed}: cover property lost"
        );
    }
}

/// Independence and reconfigurability agree on random inputs beyond the
/// exhaustive small range.
#[test]
fn reduction_equivalence_on_random_inputs() {
    use lcr::reduction::verify_reduction;
    use rand::Rng;
    use rand::SeedableRng;
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(2024);
    for case in 0..100 {
        let n = rng.random_range(1..=6usize);
        let mut edges = Vec::new();
        for u in 0..n {
            for v in u + 1..n {
                if rng.random_bool(0.5) {
                    edges.push((u, v));
                }
            }
        }
        let s = rng.random_range(1..=n.min(3));
        let h = IsInstance::new(labeled_graph(n, &edges, "u"), s).unwrap();
        assert!(
            verify_reduction(&h, &SolveOptions::default()).unwrap(),
            "case {case}: n={n} s={s} edges {edges:?}"
        );
    }
}

/// Dijkstra against the uniform-cost oracle on instances whose reachable
/// space stays small.
#[test]
fn dijkstra_matches_the_oracle_on_small_spaces() {
    let mut checked = 0;
    for seed in 0..120u64 {
        let inst = corpus::random_weighted_instance(80_000 + seed, 7, 3, 3);
        let space: usize = (0..inst.vertex_count())
            .map(|v| inst.lists().list(v).len())
            .product();
        if space > 200 {
            continue;
        }
        checked += 1;
        let rep = shortest_weighted(&inst, &SolveOptions::default()).unwrap();
        assert_eq!(rep.length, oracle_shortest(&inst), "seed {seed}");
    }
    assert!(checked > 20, "only {checked} small instances drawn");
}

/// Every reachable proper coloring of a reduction instance avoids each
/// gadget's excluded color pair on its two selection vertices.
#[test]
fn forbidding_gadgets_exclude_their_pairs_along_all_reachable_states() {
    let h = IsInstance::new(labeled_graph(3, &[(0, 1)], "u"), 2).unwrap();
    let plan = plan_reduction(&h);
    let inst = reduce_is_to_lcr(&h);
    // Plain reachability walk keeping every visited coloring.
    let mut seen: HashSet<Vec<usize>> = HashSet::from([inst.initial().clone()]);
    let mut queue = VecDeque::from([inst.initial().clone()]);
    while let Some(f) = queue.pop_front() {
        for v in 0..inst.vertex_count() {
            for &c in inst.lists().list(v) {
                if c == f[v] {
                    continue;
                }
                let mut nf = f.clone();
                nf[v] = c;
                if is_proper_list_coloring(inst.graph(), inst.lists(), &nf)
                    && seen.insert(nf.clone())
                {
                    queue.push_back(nf);
                }
            }
        }
    }
    assert!(seen.len() > 2, "walk should visit many states");
    let g = inst.graph();
    let sel =
        |i: usize| -> usize { g.index_of(&format!("v{i:02}")).expect("selection exists") };
    let color = |i: usize, p: usize| -> usize {
        inst.colors()
            .index_of(&format!("c{i:02}_{p:02}"))
            .expect("selection color exists")
    };
    for f in &seen {
        for gadget in &plan.gadgets {
            // The gadget's own list {c_i^q, c_j^p} pins the excluded pair.
            let blocked =
                f[sel(gadget.i)] == color(gadget.i, gadget.q)
                    && f[sel(gadget.j)] == color(gadget.j, gadget.p);
            assert!(!blocked, "gadget {:?} pair occurred", gadget.label);
        }
    }
}

#[test]
fn cover_projection_rejects_non_covers() {
    use lcr::solver::reachable_with_cover_projection;
    let inst = corpus::random_connected_instance(123, 6, 3);
    if inst.graph().edge_count() == 0 {
        return;
    }
    let bogus = VertexCover::new(vec![]);
    assert!(
        reachable_with_cover_projection(&inst, &bogus, &SolveOptions::default()).is_err()
    );
}

/// The projection must be exact for every valid cover, not only a minimum
/// one: grow random covers with extra vertices and compare against plain
/// search, including the trivial all-vertices cover (pure BFS degenerate).
#[test]
fn cover_projection_is_exact_for_arbitrary_covers() {
    use lcr::solver::{brute_force_reachable, reachable_with_cover_projection};
    use lcr::validate_sequence;
    use rand::Rng;
    use rand::SeedableRng;
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(31);
    let opts = SolveOptions::default();
    for seed in 0..150u64 {
        let inst = corpus::random_connected_instance(95_000 + seed, 7, 3);
        let expected = brute_force_reachable(&inst, &opts).unwrap().verdict;
        let minimum = (0..=inst.vertex_count())
            .find_map(|b| min_vertex_cover(inst.graph(), b))
            .unwrap();
        let mut padded = minimum.vertices().to_vec();
        for v in 0..inst.vertex_count() {
            if rng.random_bool(0.4) {
                padded.push(v);
            }
        }
        let everything: Vec<usize> = (0..inst.vertex_count()).collect();
        for cover in [minimum, VertexCover::new(padded), VertexCover::new(everything)] {
            let rep = reachable_with_cover_projection(&inst, &cover, &opts).unwrap();
            assert_eq!(rep.verdict, expected, "seed {seed}, cover {:?}", cover.vertices());
            if let Some(seq) = rep.sequence {
                assert!(validate_sequence(&inst, &seq), "seed {seed}");
            }
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    /// Restricting twice equals restricting once to the inner set.
    #[test]
    fn restriction_composes(seed in 0u64..10_000, mask1 in 0u16..512, mask2 in 0u16..512) {
        let inst = corpus::random_connected_instance(seed, 8, 3);
        let n = inst.vertex_count();
        let outer: Vec<usize> = (0..n).filter(|v| mask1 >> v & 1 == 1).collect();
        if outer.is_empty() {
            return Ok(());
        }
        let inner_orig: Vec<usize> = outer
            .iter()
            .enumerate()
            .filter(|(i, _)| mask2 >> i & 1 == 1)
            .map(|(_, &v)| v)
            .collect();
        if inner_orig.is_empty() {
            return Ok(());
        }
        let inner_new: Vec<usize> = (0..outer.len()).filter(|i| mask2 >> i & 1 == 1).collect();
        let once = inst.restrict(&inner_orig);
        let twice = inst.restrict(&outer).restrict(&inner_new);
        prop_assert_eq!(once, twice);
    }

    /// Wire format round trip on arbitrary generated instances.
    #[test]
    fn instance_json_round_trips(seed in 0u64..10_000) {
        let inst = corpus::random_weighted_instance(seed, 8, 4, 4);
        let text = lcr::json::emit_instance(&inst);
        let back = lcr::json::parse_instance(&text).unwrap();
        prop_assert_eq!(&back, &inst);
        prop_assert_eq!(lcr::json::emit_instance(&back), text);
    }

    /// The width identity over the tree pair.
    #[test]
    fn pseudo_width_is_the_floored_width(seed in 0u64..10_000) {
        let inst = corpus::random_connected_instance(seed, 9, 3);
        let md = compute_md_tree(inst.graph());
        let pmd = md_to_pmd(&md);
        prop_assert_eq!(pmd.pseudo_modular_width(), md.modular_width().max(2));
    }
}

/// The matrix shape is unit-tested against an explicit vertex list; here
/// the same subgraph round-trips through an actual tree node.
#[test]
fn tree_node_matrix_matches_direct_construction() {
    let g = labeled_graph(4, &[(0, 1), (0, 2), (1, 2), (2, 3)], "v");
    let inst = Instance::new(
        g,
        ColorSet::numbered(3),
        ListAssignment::new(
            vec![vec![0, 1], vec![1, 2], vec![0, 2], vec![0, 1]],
            3,
        )
        .unwrap(),
        vec![0, 1, 2, 0],
        vec![0, 1, 2, 0],
    )
    .unwrap();
    let pmd = md_to_pmd(&compute_md_tree(inst.graph()));
    // Find the leaf for v00 and check its 1-wide matrix shape.
    for id in pmd.node_ids() {
        let node = pmd.node(id);
        if node.kind == NodeKind::Leaf && pmd.vertices_of(id) == vec![0] {
            let m = id_matrix(&inst, &pmd, id, 1);
            assert_eq!(m.occupied(), 1);
            assert_eq!(m.adjacency_entry(0, 0), 0);
            assert_eq!(m.assignment_entry(0), Some(&inst.assignment(0)));
        }
    }
}
