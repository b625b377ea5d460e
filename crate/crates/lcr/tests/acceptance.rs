//! Acceptance suite: one test per criterion, each printing a pass/fail line
//! (visible with `cargo test --test acceptance -- --nocapture`).

mod common;

use std::time::Instant;

use common::{graphs_up_to_isomorphism, labeled_graph, oracle_reachable, oracle_shortest};
use lcr::corpus::{self, Family, GenConfig};
use lcr::kernel_mw::{kernel_bound_log2, kernelize_mw};
use lcr::kernel_vc::{kernelize_vc, min_vertex_cover, split_partition, vc_kernel_bound};
use lcr::modular::{compute_md_tree, md_to_pmd, same_labeled_graph, TreeForm};
use lcr::reduction::{plan_reduction, reduce_is_to_lcr, verify_reduction, IsInstance};
use lcr::solver::{
    brute_force_reachable, decide, shortest, shortest_weighted, validate_sequence,
    DecisionStrategy, ShortestStrategy, SolveOptions, Verdict,
};

fn criterion<F>(number: u32, name: &str, body: F)
where
    F: FnOnce() -> Result<(), String>,
{
    match body() {
        Ok(()) => println!("criterion {number:02} ({name}): PASS"),
        Err(why) => {
            println!("criterion {number:02} ({name}): FAIL - {why}");
            panic!("criterion {number:02} ({name}) failed: {why}");
        }
    }
}

macro_rules! ensure {
    ($cond:expr, $($msg:tt)+) => {
        match $cond {
            true => {}
            false => return Err(format!($($msg)+)),
        }
    };
}

fn opts() -> SolveOptions {
    SolveOptions::default()
}

/// The five-vertex reduction input used throughout: edges u1u2, u1u3, u1u4,
/// u2u5.
fn five_vertex_h() -> IsInstance {
    let g = labeled_graph(5, &[(0, 1), (0, 2), (0, 3), (1, 4)], "u");
    IsInstance::new(g, 3).unwrap()
}

#[test]
fn criterion_01_reduction_gadget_count() {
    criterion(1, "five-vertex reduction counts", || {
        let t0 = Instant::now();
        let h = five_vertex_h();
        let plan = plan_reduction(&h);
        ensure!(
            plan.forbidding_count() == 39,
            "expected 39 forbidding vertices, got {}",
            plan.forbidding_count()
        );
        let inst = reduce_is_to_lcr(&h);
        ensure!(
            inst.vertex_count() == 44,
            "expected 44 vertices, got {}",
            inst.vertex_count()
        );
        let elapsed = t0.elapsed();
        ensure!(
            elapsed.as_secs_f64() < 1.0,
            "construction took {elapsed:?}, budget is 1 s"
        );
        Ok(())
    });
}

#[test]
fn criterion_02_reduction_equivalence_exhaustive() {
    criterion(2, "independence/reconfigurability equivalence, n <= 4", || {
        let t0 = Instant::now();
        let mut graphs = Vec::new();
        for n in 1..=4usize {
            for edges in graphs_up_to_isomorphism(n) {
                graphs.push((n, edges));
            }
        }
        ensure!(
            graphs.len() == 18,
            "expected 18 non-isomorphic graphs up to n = 4, got {}",
            graphs.len()
        );
        let mut checked = 0;
        for (n, edges) in &graphs {
            for s in 1..=3.min(*n) {
                let h = IsInstance::new(labeled_graph(*n, edges, "u"), s).unwrap();
                let agree = verify_reduction(&h, &opts())
                    .map_err(|e| format!("solver refused n={n} s={s}: {e}"))?;
                ensure!(agree, "verdicts disagree for n={n}, s={s}, edges {edges:?}");
                checked += 1;
            }
        }
        let elapsed = t0.elapsed();
        ensure!(
            elapsed.as_secs_f64() < 300.0,
            "{checked} cases took {elapsed:?}, budget is 5 min"
        );
        println!("  checked {checked} (graph, s) pairs in {elapsed:?}");
        Ok(())
    });
}

#[test]
fn criterion_03_mw_kernel_preserves_reachability() {
    criterion(3, "identical-subgraph removal preserves the verdict", || {
        let t0 = Instant::now();
        for seed in 0..500u64 {
            let inst = corpus::random_connected_instance(seed, 9, 3);
            let before = oracle_reachable(&inst);
            let (kernel, _) =
                kernelize_mw(&inst).map_err(|e| format!("seed {seed}: {e}"))?;
            let after = oracle_reachable(&kernel);
            ensure!(
                before == after,
                "seed {seed}: verdict changed from {before} to {after}"
            );
        }
        let elapsed = t0.elapsed();
        ensure!(
            elapsed.as_secs_f64() < 300.0,
            "500 instances took {elapsed:?}, budget is 5 min"
        );
        Ok(())
    });
}

fn weighted_case(seed: u64) -> lcr::Instance {
    corpus::random_weighted_instance(10_000 + seed, 8, 3, 3)
}

fn cover_for(inst: &lcr::Instance) -> lcr::VertexCover {
    (0..=inst.vertex_count())
        .find_map(|b| min_vertex_cover(inst.graph(), b))
        .expect("every graph has a cover of size n")
}

#[test]
fn criterion_04_vc_kernel_preserves_the_optimum() {
    criterion(4, "weight merging preserves the shortest length", || {
        let t0 = Instant::now();
        for seed in 0..500u64 {
            let inst = weighted_case(seed);
            let cover = cover_for(&inst);
            let (kernel, _) =
                kernelize_vc(&inst, &cover).map_err(|e| format!("seed {seed}: {e}"))?;
            let before = oracle_shortest(&inst);
            let after = oracle_shortest(&kernel);
            ensure!(
                before == after,
                "seed {seed}: optimum changed from {before:?} to {after:?}"
            );
        }
        let elapsed = t0.elapsed();
        ensure!(
            elapsed.as_secs_f64() < 300.0,
            "500 instances took {elapsed:?}, budget is 5 min"
        );
        Ok(())
    });
}

#[test]
fn criterion_05_vc_kernel_size_bound() {
    criterion(5, "independent part bounded by 2^tau 2^k k^2", || {
        for seed in 0..500u64 {
            let inst = weighted_case(seed);
            let cover = cover_for(&inst);
            let (kernel, _) =
                kernelize_vc(&inst, &cover).map_err(|e| format!("seed {seed}: {e}"))?;
            let outside = kernel.vertex_count() - cover.size();
            let bound = vc_kernel_bound(cover.size() as u32, inst.k() as u32);
            ensure!(
                (outside as u128) <= bound,
                "seed {seed}: {outside} surviving outside vertices exceed bound {bound}"
            );
        }
        Ok(())
    });
}

#[test]
fn criterion_06_mw_kernel_size_bound() {
    criterion(6, "kernel size bounded by the clique-indexed recurrence", || {
        let mut evaluated = 0;
        for seed in 0..500u64 {
            let inst = corpus::random_connected_instance(seed, 9, 3);
            let pmw = md_to_pmd(&compute_md_tree(inst.graph())).pseudo_modular_width();
            let (kernel, _) =
                kernelize_mw(&inst).map_err(|e| format!("seed {seed}: {e}"))?;
            let omega = kernel.graph().max_clique_size();
            let log2_bound =
                kernel_bound_log2(omega as u64, inst.k() as u64, pmw as u64);
            if log2_bound >= 60.0 {
                continue;
            }
            evaluated += 1;
            let log2_size = (kernel.vertex_count() as f64).log2();
            ensure!(
                log2_size <= log2_bound,
                "seed {seed}: log2 size {log2_size:.3} exceeds log2 bound {log2_bound:.3}"
            );
        }
        ensure!(evaluated > 0, "no kernel produced an evaluable bound");
        println!("  evaluated the bound on {evaluated} kernels");
        Ok(())
    });
}

#[test]
fn criterion_07_decomposition_properties() {
    criterion(7, "decomposition round-trip, modules, width identity", || {
        let t0 = Instant::now();
        for seed in 0..200u64 {
            let inst = corpus::random_connected_instance(40_000 + seed, 10, 3);
            let graph = inst.graph();
            let md = compute_md_tree(graph);
            md.validate(graph, TreeForm::Md)
                .map_err(|e| format!("seed {seed}: md-tree invalid: {e}"))?;
            let pmd = md_to_pmd(&md);
            pmd.validate(graph, TreeForm::Pmd)
                .map_err(|e| format!("seed {seed}: pmd-tree invalid: {e}"))?;
            let eval = pmd
                .evaluate()
                .map_err(|e| format!("seed {seed}: evaluation failed: {e}"))?;
            ensure!(
                same_labeled_graph(&eval, graph),
                "seed {seed}: pmd evaluation does not reproduce the graph"
            );
            let (mw, pmw) = (md.modular_width(), pmd.pseudo_modular_width());
            ensure!(
                pmw == mw.max(2),
                "seed {seed}: pmw {pmw} differs from max(2, mw {mw})"
            );
        }
        let elapsed = t0.elapsed();
        println!("  200 graphs in {elapsed:?}");
        Ok(())
    });
}

#[test]
fn criterion_08_yes_verdicts_ship_valid_sequences() {
    criterion(8, "every yes verdict validates on the original instance", || {
        let mut yes_count = 0;
        for seed in 0..120u64 {
            let inst = corpus::random_connected_instance(70_000 + seed, 9, 3);
            for strategy in [
                DecisionStrategy::Brute,
                DecisionStrategy::KernelMw,
                DecisionStrategy::Auto,
            ] {
                let rep = decide(&inst, strategy, &opts())
                    .map_err(|e| format!("seed {seed}: {e}"))?;
                if rep.verdict == Verdict::Yes {
                    yes_count += 1;
                    let seq = rep
                        .sequence
                        .ok_or_else(|| format!("seed {seed}: yes without sequence"))?;
                    ensure!(
                        validate_sequence(&inst, &seq),
                        "seed {seed}: {strategy:?} sequence invalid on the original"
                    );
                }
            }
        }
        for seed in 0..80u64 {
            let inst = weighted_case(1000 + seed);
            for strategy in [ShortestStrategy::Brute, ShortestStrategy::KernelVc] {
                let rep = shortest(&inst, strategy, &opts())
                    .map_err(|e| format!("seed {seed}: {e}"))?;
                if rep.verdict == Verdict::Yes {
                    yes_count += 1;
                    let seq = rep
                        .sequence
                        .ok_or_else(|| format!("seed {seed}: yes without sequence"))?;
                    ensure!(
                        validate_sequence(&inst, &seq),
                        "seed {seed}: {strategy:?} sequence invalid on the original"
                    );
                    ensure!(
                        Some(seq.weighted_length(&inst)) == rep.length,
                        "seed {seed}: reported length differs from the sequence"
                    );
                }
            }
        }
        // Reduction yes-instances exercise the lift through the projection.
        for (n, edges) in [(2usize, vec![]), (3, vec![(0, 1)]), (4, vec![(0, 1), (2, 3)])] {
            let h = IsInstance::new(labeled_graph(n, &edges, "u"), 2).unwrap();
            let inst = reduce_is_to_lcr(&h);
            let rep = decide(&inst, DecisionStrategy::Auto, &opts())
                .map_err(|e| format!("reduction n={n}: {e}"))?;
            ensure!(rep.verdict == Verdict::Yes, "reduction n={n} should be yes");
            let seq = rep.sequence.expect("yes ships a sequence");
            ensure!(
                validate_sequence(&inst, &seq),
                "reduction n={n}: sequence invalid"
            );
            yes_count += 1;
        }
        ensure!(yes_count > 50, "only {yes_count} yes verdicts exercised");
        println!("  validated {yes_count} sequences");
        Ok(())
    });
}

#[test]
fn criterion_09_cograph_and_split_smoke_tests() {
    criterion(9, "cograph and split families behave as promised", || {
        for seed in 0..100u64 {
            let mut cfg = GenConfig::new(Family::Cograph, 3 + (seed as usize % 8), 3, seed);
            cfg.k = 2 + (seed as usize % 2);
            let inst = corpus::generate(&cfg).map_err(|e| format!("seed {seed}: {e}"))?;
            let md = compute_md_tree(inst.graph());
            ensure!(
                md.modular_width() == 0,
                "seed {seed}: cograph has modular width {}",
                md.modular_width()
            );
            let pmw = md_to_pmd(&md).pseudo_modular_width();
            let (kernel, _) =
                kernelize_mw(&inst).map_err(|e| format!("seed {seed}: {e}"))?;
            let rep = decide(&inst, DecisionStrategy::KernelMw, &opts())
                .map_err(|e| format!("seed {seed}: {e}"))?;
            let brute = brute_force_reachable(&inst, &opts())
                .map_err(|e| format!("seed {seed}: {e}"))?;
            ensure!(
                rep.verdict == brute.verdict,
                "seed {seed}: kernel strategy disagrees with plain search"
            );
            let log2_bound =
                kernel_bound_log2(inst.k() as u64, inst.k() as u64, pmw as u64);
            let log2_size = (kernel.vertex_count() as f64).log2();
            ensure!(
                log2_size <= log2_bound,
                "seed {seed}: kernel size {} exceeds the k-indexed bound",
                kernel.vertex_count()
            );
        }
        for seed in 0..100u64 {
            let mut cfg = GenConfig::new(Family::Split, 3 + (seed as usize % 8), 3, seed);
            cfg.k = 2 + (seed as usize % 2);
            let inst = corpus::generate(&cfg).map_err(|e| format!("seed {seed}: {e}"))?;
            let (clique, _) = split_partition(inst.graph())
                .ok_or_else(|| format!("seed {seed}: split graph not recognized"))?;
            ensure!(
                clique.len() <= inst.k(),
                "seed {seed}: derived cover of size {} exceeds k = {}",
                clique.len(),
                inst.k()
            );
            let rep = shortest(&inst, ShortestStrategy::KernelVc, &opts())
                .map_err(|e| format!("seed {seed}: {e}"))?;
            let brute = shortest_weighted(&inst, &opts())
                .map_err(|e| format!("seed {seed}: {e}"))?;
            ensure!(
                rep.length == brute.length,
                "seed {seed}: kernel-vc optimum {:?} differs from plain {:?}",
                rep.length,
                brute.length
            );
        }
        Ok(())
    });
}

#[test]
fn criterion_10_frozen_swap_regression() {
    criterion(10, "the two-vertex swap is a no under every strategy", || {
        let inst = {
            let g = labeled_graph(2, &[(0, 1)], "v");
            let lists = lcr::ListAssignment::new(vec![vec![0, 1], vec![0, 1]], 2).unwrap();
            lcr::Instance::new(g, lcr::ColorSet::numbered(2), lists, vec![0, 1], vec![1, 0])
                .unwrap()
        };
        for strategy in [
            DecisionStrategy::Brute,
            DecisionStrategy::KernelMw,
            DecisionStrategy::Auto,
        ] {
            let rep =
                decide(&inst, strategy, &opts()).map_err(|e| format!("{strategy:?}: {e}"))?;
            ensure!(
                rep.verdict == Verdict::No,
                "{strategy:?} returned {:?}",
                rep.verdict
            );
        }
        for strategy in [
            ShortestStrategy::Brute,
            ShortestStrategy::KernelVc,
            ShortestStrategy::Auto,
        ] {
            let rep =
                shortest(&inst, strategy, &opts()).map_err(|e| format!("{strategy:?}: {e}"))?;
            ensure!(
                rep.verdict == Verdict::No && rep.length.is_none(),
                "{strategy:?} returned {:?} / {:?}",
                rep.verdict,
                rep.length
            );
        }
        Ok(())
    });
}
