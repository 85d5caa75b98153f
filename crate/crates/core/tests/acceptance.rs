//! End-to-end acceptance suite. Each criterion prints one PASS/FAIL line; the
//! process exits nonzero if any criterion fails.

mod common;

use std::collections::{BTreeMap, BTreeSet};
use std::process::Command;
use std::time::Instant;

use common::*;
use num_bigint::BigUint;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use vcgame::graph::{find_forbidden_subgraph, matching_number, vertex_cover_number};
use vcgame::pmas::{pmas_violations, PmasViolation};
use vcgame::{
    check_dual_feasible, check_dual_optimal, check_pi_star, classify_components, construct_pmas,
    count_integral_pmas, enumerate_integral_pmas, preferences_from_scheme, recognize_population_monotonic,
    scheme_from_preferences, verify_pmas, AllocationScheme, Coalition, CostAllocation, Error, Graph, Pattern,
    Rational, VertexCoverGame,
};

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

macro_rules! ensure {
    ($cond:expr, $($msg:tt)+) => {
        if !$cond {
            return Err(format!($($msg)+));
        }
    };
}

fn main() {
    let criteria: [Criterion; 8] = [
        ("forbidden-subgraph necessity", criterion_1),
        ("structure equivalence", criterion_2),
        ("constructive sufficiency", criterion_3),
        ("dual description", criterion_4),
        ("König and game properties", criterion_5),
        ("integral bijection and enumeration", criterion_6),
        ("extreme-point midpoint check", criterion_7),
        ("CLI determinism", criterion_8),
    ];
    let mut failed = 0;
    for (k, (name, check)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = std::panic::catch_unwind(check).unwrap_or_else(|_| Err("panicked".into()));
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(detail) => println!("criterion {} ({name}): PASS [{secs:.1}s] {detail}", k + 1),
            Err(why) => {
                failed += 1;
                println!("criterion {} ({name}): FAIL [{secs:.1}s] {why}", k + 1);
            }
        }
    }
    if failed > 0 {
        std::process::exit(1);
    }
}

/// Every table that is efficient and integral, with no monotonicity filtering.
fn integral_candidates(g: &Graph) -> Vec<IntegralTable> {
    let n = g.edge_count();
    let gamma = brute_gamma_table(g);
    let mut tables = vec![vec![0u64; 1 << n]];
    for s in 1u64..1 << n {
        let options: Vec<u64> = (0..=s).filter(|p| p & !s == 0 && p.count_ones() as usize == gamma[s as usize]).collect();
        tables = tables
            .into_iter()
            .flat_map(|t| {
                options.iter().map(move |&p| {
                    let mut t = t.clone();
                    t[s as usize] = p;
                    t
                })
            })
            .collect();
    }
    tables
}

fn to_scheme(t: &IntegralTable, n: usize) -> AllocationScheme {
    let mut entries = BTreeMap::new();
    for m in 1u64..1 << n {
        let s = Coalition::from_mask(m);
        let vals = s.iter().map(|i| Rational::from_integer((t[m as usize] >> i & 1) as i64)).collect();
        entries.insert(s.clone(), CostAllocation::new(s, vals).unwrap());
    }
    AllocationScheme::from_table(n, entries)
}

fn criterion_1() -> Outcome {
    // edges numbered so that i and i+1 share an endpoint
    let k3_chain = [(7u64, 3u64, 0usize), (7, 3, 1), (7, 6, 2), (7, 5, 0), (7, 6, 1), (7, 5, 2)];
    let path_chain = [(7u64, 3u64, 0usize), (7, 3, 1), (7, 6, 2), (14, 6, 1), (14, 12, 2), (14, 12, 3)];
    let cases = [
        ("a b\nb c\nc a", Pattern::K3, &k3_chain),
        ("a b\nb c\nc d\nd a", Pattern::C4, &path_chain),
        ("a b\nb c\nc d\nd e", Pattern::P5, &path_chain),
    ];
    let mut report = Vec::new();
    for (text, pattern, chain) in cases {
        let g = graph(text);
        let n = g.edge_count();
        let verdict = recognize_population_monotonic(&g);
        ensure!(
            verdict.witness().is_some_and(|w| w.pattern == pattern),
            "{pattern}: recognition gave {:?}",
            verdict.witness()
        );
        ensure!(
            matches!(construct_pmas(&g), Err(Error::NotPopulationMonotonic(_))),
            "{pattern}: construction did not refuse"
        );
        let game = VertexCoverGame::new(g.clone());
        let candidates = integral_candidates(&g);
        for t in &candidates {
            let scheme = to_scheme(t, n);
            ensure!(!verify_pmas(&game, &scheme).unwrap().holds(), "{pattern}: a candidate passed");
            let pays = |m: u64, i: usize| (t[m as usize] >> i & 1) as i64;
            let lhs: i64 = chain.iter().map(|&(big, _, i)| pays(big, i)).sum();
            let rhs: i64 = chain.iter().map(|&(_, small, i)| pays(small, i)).sum();
            ensure!(lhs == 4 && rhs == 3, "{pattern}: chain sums {lhs} and {rhs}");
            let trace = pmas_violations(&game, &scheme, 16).unwrap();
            let broken = chain.iter().any(|&(big, small, i)| {
                trace.iter().any(|v| {
                    matches!(v, PmasViolation::Monotonicity { smaller, larger, player, .. }
                        if *player == i && smaller.to_mask() == Some(small) && larger.to_mask() == Some(big))
                })
            });
            ensure!(broken, "{pattern}: no chain link in the violation trace");
        }
        ensure!(brute_integral_pmas(&g).is_empty(), "{pattern}: pruned search found a scheme");
        report.push(format!("{pattern}: {} candidates, all refuted by 4 <= 3", candidates.len()));
    }
    Ok(report.join("; "))
}

/// Connected, a tree, and every vertex within distance 3 of every other.
fn tree_of_small_diameter(n: usize, adj: &[u32], m: usize) -> bool {
    if m != n - 1 {
        return false;
    }
    (0..n).all(|s| {
        let mut seen = 1u32 << s;
        let mut frontier = seen;
        for _ in 0..3 {
            let next = (0..n).filter(|&v| frontier >> v & 1 == 1).fold(0, |acc, v| acc | adj[v]);
            frontier = next & !seen;
            seen |= next;
        }
        seen.count_ones() as usize == n
    })
}

fn connected(n: usize, adj: &[u32]) -> bool {
    let mut seen = 1u32;
    loop {
        let grown = (0..n).filter(|&v| seen >> v & 1 == 1).fold(seen, |acc, v| acc | adj[v]);
        if grown == seen {
            return seen.count_ones() as usize == n;
        }
        seen = grown;
    }
}

fn criterion_2() -> Outcome {
    let labels: Vec<String> = (0..7).map(|v| format!("v{v}")).collect();
    let mut checked = 0usize;
    let mut free = 0usize;
    for n in 2..=7 {
        let slots: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
        for mask in 1u64..1 << slots.len() {
            let mut adj = vec![0u32; n];
            for i in members(mask) {
                let (u, v) = slots[i];
                adj[u] |= 1 << v;
                adj[v] |= 1 << u;
            }
            if !connected(n, &adj) {
                continue;
            }
            checked += 1;
            let g = Graph::from_edges(members(mask).map(|i| {
                let (u, v) = slots[i];
                (labels[u].as_str(), labels[v].as_str())
            }))
            .unwrap();
            let pattern_free = [Pattern::K3, Pattern::C4, Pattern::P5]
                .iter()
                .all(|&p| find_forbidden_subgraph(&g, p).is_none());
            let tree = tree_of_small_diameter(n, &adj, mask.count_ones() as usize);
            ensure!(pattern_free == tree, "mismatch on {n} vertices, edge mask {mask:#x}");
            ensure!(
                recognize_population_monotonic(&g).holds() == tree,
                "recognition mismatch on {n} vertices, edge mask {mask:#x}"
            );
            free += pattern_free as usize;
        }
    }
    Ok(format!("{checked} connected labelled graphs, {free} pattern-free, zero exceptions"))
}

fn forests() -> Vec<Graph> {
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    (0..200).map(|_| random_pm_forest(&mut rng, 16)).collect()
}

fn criterion_3() -> Outcome {
    let mut coalitions = 0usize;
    for g in forests() {
        let c = classify_components(&g).map_err(|e| e.to_string())?;
        let scheme = construct_pmas(&g).map_err(|e| e.to_string())?;
        let game = VertexCoverGame::new(g.clone());
        let verdict = verify_pmas(&game, &scheme).map_err(|e| e.to_string())?;
        ensure!(verdict.holds(), "verify failed on {:?}: {}", pairs(&g), verdict.witness().unwrap());
        for m in 1u64..1 << g.edge_count() {
            let s = Coalition::from_mask(m);
            let a = scheme.allocation(&s).unwrap();
            for v in c.cover.select(&g, &s) {
                let at_v = a.sum_over(g.incident(v).iter().copied().filter(|&e| s.contains(e)));
                ensure!(at_v == Rational::from_integer(1), "unit split fails at {} in {{{s}}}", g.label(v));
            }
            coalitions += 1;
        }
    }
    Ok(format!("200 forests, {coalitions} coalitions"))
}

fn dual_check_all(g: &Graph, scheme: &AllocationScheme, game: &VertexCoverGame) -> Result<usize, String> {
    let c = classify_components(g).map_err(|e| e.to_string())?;
    for m in 1u64..1 << g.edge_count() {
        let s = Coalition::from_mask(m);
        let a = scheme.allocation(&s).unwrap();
        ensure!(check_dual_feasible(g, &s, &a), "infeasible on {{{s}}} of {:?}", pairs(g));
        ensure!(check_dual_optimal(game, &s, &a).unwrap(), "not optimal on {{{s}}} of {:?}", pairs(g));
        ensure!(check_pi_star(g, &s, &a, &c.cover), "outside the optimal face on {{{s}}} of {:?}", pairs(g));
    }
    Ok((1usize << g.edge_count()) - 1)
}

fn criterion_4() -> Outcome {
    let mut restrictions = 0;
    for g in forests() {
        let game = VertexCoverGame::new(g.clone());
        restrictions += dual_check_all(&g, &construct_pmas(&g).unwrap(), &game)?;
    }
    let mut integral = 0;
    for g in small_pm_graphs() {
        let game = VertexCoverGame::new(g.clone());
        for item in enumerate_integral_pmas(&g, usize::MAX).unwrap() {
            restrictions += dual_check_all(&g, &item.unwrap().scheme, &game)?;
            integral += 1;
        }
    }
    Ok(format!("200 equal-split and {integral} integral schemes, {restrictions} restrictions"))
}

fn criterion_5() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let (mut bipartite, mut balanced, mut submodular) = (0, 0, 0);
    for _ in 0..500 {
        let g = random_graph(&mut rng, 8, 10);
        let all = g.players();
        let nu = matching_number(&g, &all).unwrap().len();
        let tau = vertex_cover_number(&g, &all).unwrap().size;
        let mask = all.to_mask().unwrap();
        ensure!(nu == brute_nu(&g, mask) && tau == brute_tau(&g, mask), "oracle mismatch on {:?}", pairs(&g));
        ensure!(nu <= tau, "ν > τ on {:?}", pairs(&g));
        if brute_bipartite(&g) {
            bipartite += 1;
            ensure!(nu == tau, "König fails on {:?}", pairs(&g));
        }
        let k3_p4_free = !brute_has_walk(&g, 3, true) && !brute_has_walk(&g, 4, false);
        let game = VertexCoverGame::new(g.clone());
        ensure!(game.is_monotone_game().unwrap().holds(), "not monotone on {:?}", pairs(&g));
        let sub = game.is_submodular_game().unwrap().holds();
        ensure!(sub == k3_p4_free, "submodularity mismatch on {:?}", pairs(&g));
        submodular += sub as usize;
        if nu == tau {
            balanced += 1;
            let x = game.core_element_from_matching().unwrap();
            ensure!(game.core_membership(&x).unwrap().holds(), "matching allocation outside core on {:?}", pairs(&g));
        }
    }
    Ok(format!("500 graphs: {bipartite} bipartite, {balanced} balanced, {submodular} submodular"))
}

/// Every population monotonic graph with at most five edges up to isomorphism
/// (as a forest of stars and pisceses), plus every labelled one on at most six
/// vertices.
fn small_pm_graphs() -> Vec<Graph> {
    // component shapes as (edges, builder)
    fn shapes(budget: usize) -> Vec<Vec<(usize, usize)>> {
        let mut out = Vec::new();
        for k in 1..=budget {
            out.push((1..=k).map(|i| (0, i)).collect());
        }
        for a in 1..budget {
            for b in 1..budget {
                if a + b < budget {
                    let mut e = vec![(0, 1)];
                    e.extend((0..a).map(|i| (0, 2 + i)));
                    e.extend((0..b).map(|i| (1, 2 + a + i)));
                    out.push(e);
                }
            }
        }
        out
    }
    fn forests(budget: usize, min_shape: usize, all: &[Vec<(usize, usize)>], acc: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if !acc.is_empty() {
            out.push(acc.clone());
        }
        for (k, shape) in all.iter().enumerate().skip(min_shape) {
            if shape.len() <= budget {
                acc.push(k);
                forests(budget - shape.len(), k, all, acc, out);
                acc.pop();
            }
        }
    }
    let all = shapes(5);
    let mut combos = Vec::new();
    forests(5, 0, &all, &mut Vec::new(), &mut combos);
    let mut graphs = Vec::new();
    for combo in combos {
        let mut edges = Vec::new();
        let mut offset = 0;
        for &k in &combo {
            let width = all[k].iter().map(|&(u, v)| u.max(v)).max().unwrap() + 1;
            edges.extend(all[k].iter().map(|&(u, v)| (u + offset, v + offset)));
            offset += width;
        }
        graphs.push(build(&edges));
        edges.reverse();
        graphs.push(build(&edges));
    }
    for n in 2..=6 {
        for edges in all_graphs(n) {
            if !edges.is_empty() && edges.len() <= 5 {
                let g = build(&edges);
                if recognize_population_monotonic(&g).holds() {
                    graphs.push(g);
                }
            }
        }
    }
    graphs
}

fn criterion_6() -> Outcome {
    let graphs = small_pm_graphs();
    let mut schemes = 0usize;
    for g in &graphs {
        let n = g.edge_count();
        let game = VertexCoverGame::new(g.clone());
        let brute = brute_integral_pmas(g);
        for t in &brute {
            ensure!(verify_pmas(&game, &to_scheme(t, n)).unwrap().holds(), "brute table rejected on {:?}", pairs(g));
        }
        let mut listed = BTreeSet::new();
        for item in enumerate_integral_pmas(g, usize::MAX).unwrap() {
            let item = item.unwrap();
            ensure!(listed.insert(integral_table(&item.scheme, n)), "duplicate scheme on {:?}", pairs(g));
            let back = preferences_from_scheme(&game, &item.scheme).unwrap();
            ensure!(back.to_json() == item.preferences.to_json(), "preference round trip on {:?}", pairs(g));
        }
        ensure!(listed == brute, "enumeration differs from brute force on {:?}", pairs(g));
        for t in &brute {
            let ps = preferences_from_scheme(&game, &to_scheme(t, n)).unwrap();
            let again = scheme_from_preferences(&ps).unwrap();
            ensure!(integral_table(&again, n) == *t, "scheme round trip on {:?}", pairs(g));
        }
        ensure!(count_integral_pmas(g).unwrap() == BigUint::from(brute.len()), "count mismatch on {:?}", pairs(g));
        schemes += brute.len();
    }
    let named = [
        ("a b\na c", 2u32),
        ("a b\na c\na d", 6),
        ("a b\nb c\nc d", 1),
        ("a b\na c\nd e\nd f", 4),
    ];
    for (text, expected) in named {
        let g = graph(text);
        let brute = brute_integral_pmas(&g).len();
        ensure!(brute == expected as usize, "brute force gives {brute} on {text:?}");
        ensure!(count_integral_pmas(&g).unwrap() == BigUint::from(expected), "count on {text:?}");
    }
    Ok(format!("{} graphs, {schemes} integral schemes, named counts 2/6/1/4", graphs.len()))
}

fn criterion_7() -> Outcome {
    let mut triples = 0u64;
    for g in small_pm_graphs() {
        let n = g.edge_count();
        let tables: Vec<Vec<Rational>> = enumerate_integral_pmas(&g, usize::MAX)
            .unwrap()
            .map(|item| {
                let scheme = item.unwrap().scheme;
                (1u64..1 << n)
                    .flat_map(|m| scheme.allocation(&Coalition::from_mask(m)).unwrap().values().to_vec())
                    .collect()
            })
            .collect();
        let two = Rational::from_integer(2);
        for (ia, a) in tables.iter().enumerate() {
            for (ib, b) in tables.iter().enumerate() {
                for c in &tables[ib + 1..] {
                    triples += 1;
                    let midpoint = a.iter().zip(b).zip(c).all(|((x, y), z)| *x == (y + z) / two);
                    ensure!(!midpoint, "scheme {ia} is a midpoint on {:?}", pairs(&g));
                }
            }
        }
    }
    Ok(format!("{triples} (scheme, pair) combinations, no midpoints"))
}

fn criterion_8() -> Outcome {
    let exe = env!("CARGO_BIN_EXE_vcgame");
    let graphs = ["p4", "k3", "c4", "p5", "star3", "star4", "pisces_forest", "two_paths", "empty"];
    let mut runs = 0;
    for name in graphs {
        let input = fixture(&format!("{name}.txt"));
        let prefs = fixture(&format!("{name}_prefs.json"));
        let has_prefs = std::path::Path::new(&prefs).exists();
        let mut invocations: Vec<Vec<String>> = Vec::new();
        for cmd in ["classify", "game-info", "construct", "verify", "enumerate", "count", "stable-match"] {
            for format in ["json", "text"] {
                let mut base = vec![cmd.to_string(), "--input".into(), input.clone(), "--format".into(), format.into()];
                if cmd == "stable-match" || (has_prefs && cmd == "verify") {
                    if !has_prefs {
                        continue;
                    }
                    base.extend(["--prefs".into(), prefs.clone()]);
                }
                invocations.push(base.clone());
                if matches!(cmd, "construct" | "enumerate") {
                    let mut with = base.clone();
                    with.push("--materialize".into());
                    invocations.push(with);
                    let mut with = base;
                    with.extend(["--coalition".into(), "0,1".into()]);
                    invocations.push(with);
                }
            }
        }
        for args in invocations {
            let once = Command::new(exe).args(&args).output().map_err(|e| e.to_string())?;
            let twice = Command::new(exe).args(&args).output().map_err(|e| e.to_string())?;
            ensure!(
                once.stdout == twice.stdout && once.stderr == twice.stderr && once.status == twice.status,
                "output differs for {args:?}"
            );
            ensure!(once.status.code().is_some_and(|c| c <= 2), "unexpected exit for {args:?}");
            runs += 1;
        }
    }
    Ok(format!("{runs} invocations, each run twice, identical bytes"))
}
