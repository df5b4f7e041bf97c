//! The ten acceptance checks, one line each. Run with
//! `cargo test -p balanceable --test acceptance`.

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::time::Instant;

use balanceable::conditions::{big_vertex, parity_obstruction};
use balanceable::ramsey::{bal_number, BalOutcome, Coloring};
use balanceable::reduction::{has_cut_at_least, has_cut_exactly, reduce_maxcut_to_exactcut, CutInstance};
use balanceable::witness::{circulant_witness, rect_grid_witness, rect_quotas, tri_grid_witness};
use balanceable::{
    build_family, decide_balanceable, find_half_cut, find_half_induced, Budget, FamilyParams, FamilyVerdict, Graph,
    Verdict, VertexSet,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

type Check = Result<String, String>;
type Criterion = (&'static str, fn() -> Check);

macro_rules! ensure {
    ($cond:expr, $($fmt:tt)+) => {
        if !$cond {
            return Err(format!($($fmt)+));
        }
    };
}

fn fam(spec: &str) -> Graph {
    build_family(&spec.parse().expect("valid spec")).expect("valid family")
}

fn budget() -> Budget {
    Budget::default()
}

fn ac1_table_1() -> Check {
    let mut count = 0;
    for k in 4..=20usize {
        for l in 2..=k - 2 {
            let expected = k % 2 == 0 && (k, l.min(k - l)) != (6, 2);
            let built = circulant_witness(k, l).map_err(|e| format!("C_{{{k},{l}}}: {e}"))?;
            let g = build_family(&FamilyParams::Chorded { k, l }).unwrap();
            let oracle = decide_balanceable(&g, budget());
            ensure!(
                built.is_balanceable() == expected,
                "C_{{{k},{l}}}: construction says {:?}",
                built.verdict
            );
            ensure!(
                oracle.decided() == Some(expected),
                "C_{{{k},{l}}}: oracle says {oracle}"
            );
            count += 1;
        }
    }
    Ok(format!("{count} (k, l) pairs agree"))
}

fn ac2_table_2() -> Check {
    let g = fam("chorded:6,2");
    // (W, e(G[W])) rows of the table, up to renaming
    let rows: [(&[usize], usize); 11] = [
        (&[0], 0),
        (&[0, 1], 1),
        (&[0, 2], 1),
        (&[0, 3], 0),
        (&[0, 1, 2], 3),
        (&[0, 1, 3], 2),
        (&[0, 2, 4], 3),
        (&[0, 1, 2, 3], 5),
        (&[0, 1, 2, 4], 5),
        (&[0, 1, 3, 4], 4),
        (&[0, 1, 2, 3, 4], 8),
    ];
    for (w, e) in rows {
        let set = VertexSet::from_indices(6, w.iter().copied()).unwrap();
        ensure!(g.e_induced(&set).unwrap() == e, "row {w:?} should induce {e} edges");
    }
    let autos: Vec<Vec<usize>> = permutations(6)
        .into_iter()
        .filter(|p| g.relabel(p).unwrap() == g)
        .collect();
    for mask in 1u64..63 {
        let set = VertexSet::from_mask(6, mask).unwrap();
        let e = g.e_induced(&set).unwrap();
        ensure!(e != 6, "W = {:?} induces 6 edges", set.to_vec());
        let covered = rows.iter().any(|(w, we)| {
            w.len() == set.len()
                && *we == e
                && autos.iter().any(|p| {
                    let mut img: Vec<usize> = set.iter().map(|v| p[v]).collect();
                    img.sort_unstable();
                    img == *w
                })
        });
        ensure!(covered, "W = {:?} matches no row up to renaming", set.to_vec());
    }
    ensure!(
        find_half_induced(&g, budget()).unwrap().is_none(),
        "oracle found a half induced set"
    );
    Ok(format!(
        "11 rows reproduced; all 62 proper subsets covered by {} automorphisms",
        autos.len()
    ))
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for i in 0..=p.len() {
            let mut q = p.clone();
            q.insert(i, n - 1);
            out.push(q);
        }
    }
    out
}

fn ac3_circulant_spots() -> Check {
    let w = circulant_witness(38, 9).unwrap().witness.unwrap();
    ensure!(w.cut_edges == 38, "C_38,9 cut {}", w.cut_edges);
    let w = circulant_witness(10, 5).unwrap().witness.unwrap();
    ensure!(w.induced_edges == 8, "C_10,5 induced {}", w.induced_edges);
    let w = circulant_witness(10, 2).unwrap().witness.unwrap();
    ensure!(w.induced_edges == 10, "C_10,2 induced {}", w.induced_edges);
    let w = circulant_witness(10, 4).unwrap().witness.unwrap();
    ensure!(w.induced_edges == 10, "C_10,4 induced {}", w.induced_edges);
    Ok("C_{38,9} cut 38, C_{10,5} induced 8, C_{10,2} induced 10, C_{10,4} induced 10".into())
}

fn ac4_rect_grids() -> Check {
    let mut count = 0;
    for rows in 2..=15usize {
        for cols in 2..=15usize {
            if rows * cols > 30 || rows % 2 != cols % 2 {
                continue;
            }
            let g = build_family(&FamilyParams::RectGrid { rows, cols }).unwrap();
            let r = rect_grid_witness(rows, cols).map_err(|e| e.to_string())?;
            let i = r.independent_set.as_ref().unwrap();
            ensure!(2 * g.degree_sum(i).unwrap() == g.m(), "{rows}x{cols}: degree sum off");
            let v = decide_balanceable(&g, budget());
            ensure!(v.is_balanceable(), "{rows}x{cols}: oracle says {v}");
            count += 1;
        }
    }
    for (rows, cols, sum) in [(4, 8, 26), (3, 7, 16), (5, 7, 29)] {
        let g = build_family(&FamilyParams::RectGrid { rows, cols }).unwrap();
        let i = rect_grid_witness(rows, cols).unwrap().independent_set.unwrap();
        let direct = g.degree_sum(&i).unwrap();
        let (_, q) = rect_quotas(rows, cols).unwrap();
        ensure!(
            direct == sum && q.degree_sum() == sum,
            "{rows}x{cols}: {direct} / {}",
            q.degree_sum()
        );
    }
    Ok(format!(
        "{count} grids with kl <= 30 balanceable; G_4,8 = 26, G_3,7 = 16, G_5,7 = 29"
    ))
}

fn ac5_tri_grids() -> Check {
    for h in [4, 5] {
        let g = fam(&format!("tri:{h}"));
        ensure!(parity_obstruction(&g).is_some(), "T_{h}: no parity obstruction");
        ensure!(
            find_half_cut(&g, budget()).unwrap().is_none(),
            "T_{h}: exhaustive search found a half-cut"
        );
        ensure!(
            !tri_grid_witness(h).unwrap().is_balanceable(),
            "T_{h}: construction disagrees"
        );
    }
    for (h, sum) in [(8, 42), (9, 54)] {
        let g = fam(&format!("tri:{h}"));
        let r = tri_grid_witness(h).unwrap();
        let i = r.independent_set.as_ref().unwrap();
        ensure!(g.is_independent(i).unwrap(), "T_{h}: I not independent");
        ensure!(
            g.degree_sum(i).unwrap() == sum && g.m() == 2 * sum,
            "T_{h}: degree sum off"
        );
        ensure!(r.witness.as_ref().unwrap().verify(&g), "T_{h}: witness fails");
    }
    Ok("T_4, T_5 obstructed (parity and exhaustive); T_8 = 42, T_9 = 54".into())
}

fn ac6_corollaries() -> Check {
    let yes = ["cycle:4", "cycle:8", "cycle:12", "complete:4"];
    let no = ["cycle:6", "cycle:10", "complete:5"];
    for s in yes {
        ensure!(
            decide_balanceable(&fam(s), budget()).is_balanceable(),
            "{s} should be balanceable"
        );
    }
    for s in no {
        ensure!(
            decide_balanceable(&fam(s), budget()).is_not_balanceable(),
            "{s} should not be balanceable"
        );
    }
    for rim in 3..=8 {
        let g = fam(&format!("wheel:{rim}"));
        let big = big_vertex(&g).ok_or_else(|| format!("W_{rim}: no big vertex"))?;
        ensure!(
            2 * g.degree(big) == g.m() && g.degree(rim) == rim,
            "W_{rim}: big vertex {big} has the wrong degree"
        );
        ensure!(
            decide_balanceable(&g, budget()).is_balanceable(),
            "W_{rim} not balanceable"
        );
    }
    Ok("C_4, C_8, C_12, K_4, W_3..W_8 balanceable; C_6, C_10, K_5 not".into())
}

/// Every eulerian graph on `0..8` is a sum of triangles through vertex 0.
fn ac7_parity_vs_brute_force() -> Check {
    let n = 8;
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
    let bit = |u: usize, v: usize| 1u32 << pairs.iter().position(|&p| p == (u.min(v), u.max(v))).unwrap();
    let basis: Vec<u32> = (1..n)
        .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
        .map(|(i, j)| bit(0, i) | bit(0, j) | bit(i, j))
        .collect();
    let total = 1u64 << basis.len();
    let (checked, failures) = (0..total)
        .into_par_iter()
        .map(|sel| {
            let mut mask = 0u32;
            for (i, b) in basis.iter().enumerate() {
                if sel >> i & 1 == 1 {
                    mask ^= b;
                }
            }
            if mask.count_ones() % 4 != 2 {
                return (0u64, 0u64);
            }
            let g = Graph::from_edges(
                n,
                pairs
                    .iter()
                    .enumerate()
                    .filter(|(i, _)| mask >> i & 1 == 1)
                    .map(|(_, &e)| e),
            )
            .unwrap();
            assert!(g.is_eulerian());
            let cut = find_half_cut(&g, budget()).unwrap();
            (1, u64::from(cut.is_some()))
        })
        .reduce(|| (0, 0), |a, b| (a.0 + b.0, a.1 + b.1));
    ensure!(checked >= 10_000, "only {checked} instances");
    ensure!(failures == 0, "{failures} of {checked} eulerian graphs have a half-cut");
    Ok(format!(
        "{checked} eulerian graphs (all of K_8's cycle space with m = 2 mod 4) have no half-cut"
    ))
}

fn ac8_reduction() -> Check {
    let n = 6;
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
    let bad: Vec<(u32, usize)> = (0u32..1 << pairs.len())
        .into_par_iter()
        .flat_map_iter(|mask| {
            let g = Graph::from_edges(
                n,
                pairs
                    .iter()
                    .enumerate()
                    .filter(|(i, _)| mask >> i & 1 == 1)
                    .map(|(_, &e)| e),
            )
            .unwrap();
            (0..=g.m())
                .filter(|&k| {
                    let r = reduce_maxcut_to_exactcut(&CutInstance::new(g.clone(), k).unwrap());
                    assert_eq!((r.graph.n(), r.graph.m()), (n + g.m() + 1, 2 * g.m()));
                    has_cut_at_least(&g, k, budget()).unwrap() != has_cut_exactly(&r.graph, r.k, budget()).unwrap()
                })
                .map(|k| (mask, k))
                .collect::<Vec<_>>()
        })
        .collect();
    ensure!(bad.is_empty(), "{} disagreements, first {:?}", bad.len(), bad[0]);
    Ok("all 32768 graphs on 6 vertices, every k: max-cut >= k iff reduced exact-cut".into())
}

fn ac9_ramsey() -> Check {
    for n in [4, 5] {
        match bal_number(n, &fam("path:2")).unwrap() {
            BalOutcome::Threshold { value: 0, .. } => {}
            o => return Err(format!("bal({n}, P_3) = {o:?}")),
        }
    }
    // frozen from the permutation brute force below
    const BAL_4_K4: usize = 2;
    let k4 = fam("complete:4");
    let brute = (0u64..64)
        .filter(|&red| {
            let c = Coloring::new(4, red).unwrap();
            let reds = k4.edges().filter(|&(u, v)| c.is_red(u, v)).count();
            reds != 3
        })
        .map(|red| (red.count_ones() as usize).min(6 - red.count_ones() as usize))
        .max()
        .unwrap();
    ensure!(brute == BAL_4_K4, "brute force gives {brute}");
    match bal_number(4, &k4).unwrap() {
        BalOutcome::Threshold { value, .. } if value == BAL_4_K4 => {}
        o => return Err(format!("bal(4, K_4) = {o:?}")),
    }
    Ok(format!("bal(4, P_3) = bal(5, P_3) = 0, bal(4, K_4) = {BAL_4_K4}"))
}

fn random_graph(rng: &mut ChaCha8Rng) -> Graph {
    let n = rng.gen_range(1..=14);
    let p: f64 = rng.gen_range(0.1..0.9);
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edges(n, edges).unwrap()
}

fn ac10_properties() -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(0x0ba1_a11ce);
    let mut decided = 0;
    for _ in 0..1000 {
        let g = random_graph(&mut rng);
        let n = g.n();
        ensure!(
            g.degrees().iter().sum::<usize>() == 2 * g.m(),
            "handshake fails on {g:?}"
        );
        let x = VertexSet::from_indices(n, (0..n).filter(|_| rng.gen_bool(0.5))).unwrap();
        let y = x.complement();
        let sum = g.e_cut(&x).unwrap() + g.e_induced(&x).unwrap() + g.e_induced(&y).unwrap();
        ensure!(sum == g.m(), "partition identity fails on {g:?}");
        match decide_balanceable(&g, budget()) {
            Verdict::Balanceable(w) => {
                ensure!(w.verify(&g), "witness fails on {g:?}");
                decided += 1;
            }
            Verdict::NotBalanceable(_) => decided += 1,
            Verdict::Undecided(r) => return Err(format!("undecided on {g:?}: {r}")),
        }
    }
    for _ in 0..200 {
        let k = rng.gen_range(4..=60);
        let l = rng.gen_range(2..=k - 2);
        ensure!(
            circulant_witness(k, l) == circulant_witness(k, l),
            "C_{{{k},{l}}} not deterministic"
        );
        let rows = rng.gen_range(2..=12);
        let cols = rng.gen_range(1..=6) * 2 + rows % 2;
        ensure!(
            rect_grid_witness(rows, cols) == rect_grid_witness(rows, cols),
            "{rows}x{cols} not deterministic"
        );
    }
    let r = tri_grid_witness(17).unwrap();
    ensure!(
        r.verdict == FamilyVerdict::Balanceable && r == tri_grid_witness(17).unwrap(),
        "T_17"
    );
    Ok(format!("1000 random graphs (n <= 14): handshake, partition identity, {decided} verified verdicts; constructions deterministic"))
}

fn main() {
    let checks: [Criterion; 10] = [
        ("AC1 circulant table", ac1_table_1),
        ("AC2 C_6,2 induced table", ac2_table_2),
        ("AC3 circulant spot values", ac3_circulant_spots),
        ("AC4 rectangular grids", ac4_rect_grids),
        ("AC5 triangular grids", ac5_tri_grids),
        ("AC6 small corollaries", ac6_corollaries),
        ("AC7 parity vs brute force", ac7_parity_vs_brute_force),
        ("AC8 reduction equivalence", ac8_reduction),
        ("AC9 bal numbers", ac9_ramsey),
        ("AC10 randomized properties", ac10_properties),
    ];
    let mut failed = 0;
    for (name, check) in checks {
        let start = Instant::now();
        let outcome = catch_unwind(AssertUnwindSafe(check)).unwrap_or_else(|p| {
            let msg = p
                .downcast_ref::<String>()
                .cloned()
                .or_else(|| p.downcast_ref::<&str>().map(|s| s.to_string()))
                .unwrap_or_default();
            Err(format!("panicked: {msg}"))
        });
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(detail) => println!("[PASS] {name}: {detail} ({secs:.2}s)"),
            Err(detail) => {
                failed += 1;
                println!("[FAIL] {name}: {detail} ({secs:.2}s)");
            }
        }
    }
    if failed > 0 {
        println!("{failed} acceptance check(s) failed");
        std::process::exit(1);
    }
    println!("all 10 acceptance checks passed");
}
