//! Brute-force oracles and generators shared by the integration tests. Nothing
//! here calls the library's solvers; everything is recomputed from the edge list.
#![allow(dead_code)]

use std::collections::BTreeSet;

use rand::seq::SliceRandom;
use rand::Rng;
use vcgame::{AllocationScheme, Coalition, Graph, PreferenceSystem, Rational};

pub fn fixture(name: &str) -> String {
    format!("{}/tests/fixtures/{name}", env!("CARGO_MANIFEST_DIR"))
}

pub fn graph(text: &str) -> Graph {
    Graph::parse(text).unwrap()
}

/// Edges of `g` as endpoint pairs, with vertices renumbered densely.
pub fn pairs(g: &Graph) -> Vec<(usize, usize)> {
    (0..g.edge_count()).map(|e| g.endpoints(e)).collect()
}

pub fn build(pairs: &[(usize, usize)]) -> Graph {
    let labels: Vec<(String, String)> = pairs.iter().map(|&(u, v)| (format!("v{u}"), format!("v{v}"))).collect();
    Graph::from_edges(labels.iter().map(|(u, v)| (u.as_str(), v.as_str()))).unwrap()
}

pub fn members(mask: u64) -> impl Iterator<Item = usize> {
    (0..64).filter(move |i| mask >> i & 1 == 1)
}

/// τ of the edges in `mask`, by trying vertex subsets in increasing size.
pub fn brute_tau(g: &Graph, mask: u64) -> usize {
    let mut verts: Vec<usize> = Vec::new();
    for e in members(mask) {
        let (u, v) = g.endpoints(e);
        for x in [u, v] {
            if !verts.contains(&x) {
                verts.push(x);
            }
        }
    }
    let edges: Vec<(usize, usize)> = members(mask)
        .map(|e| {
            let (u, v) = g.endpoints(e);
            (verts.iter().position(|&x| x == u).unwrap(), verts.iter().position(|&x| x == v).unwrap())
        })
        .collect();
    (0u64..1 << verts.len())
        .filter(|c| edges.iter().all(|&(u, v)| c >> u & 1 == 1 || c >> v & 1 == 1))
        .map(|c| c.count_ones() as usize)
        .min()
        .unwrap_or(0)
}

/// ν of the edges in `mask`: include-or-skip recursion over the edges.
pub fn brute_nu(g: &Graph, mask: u64) -> usize {
    fn go(g: &Graph, edges: &[usize], used: &mut Vec<bool>) -> usize {
        let Some((&e, rest)) = edges.split_first() else {
            return 0;
        };
        let skip = go(g, rest, used);
        let (u, v) = g.endpoints(e);
        if used[u] || used[v] {
            return skip;
        }
        used[u] = true;
        used[v] = true;
        let take = 1 + go(g, rest, used);
        used[u] = false;
        used[v] = false;
        skip.max(take)
    }
    let edges: Vec<usize> = members(mask).collect();
    go(g, &edges, &mut vec![false; g.vertex_count()])
}

pub fn brute_gamma_table(g: &Graph) -> Vec<usize> {
    (0u64..1 << g.edge_count()).map(|m| brute_tau(g, m)).collect()
}

pub fn brute_bipartite(g: &Graph) -> bool {
    let n = g.vertex_count();
    (0u64..1 << n).any(|side| pairs(g).iter().all(|&(u, v)| (side >> u & 1) != (side >> v & 1)))
}

/// Does `g` contain a path (or, with `cycle`, a cycle) through `k` distinct vertices as a subgraph?
pub fn brute_has_walk(g: &Graph, k: usize, cycle: bool) -> bool {
    fn extend(g: &Graph, path: &mut Vec<usize>, k: usize, cycle: bool) -> bool {
        let last = *path.last().unwrap();
        if path.len() == k {
            return !cycle || g.edge_between(last, path[0]).is_some();
        }
        for v in 0..g.vertex_count() {
            if !path.contains(&v) && g.edge_between(last, v).is_some() {
                path.push(v);
                if extend(g, path, k, cycle) {
                    return true;
                }
                path.pop();
            }
        }
        false
    }
    (0..g.vertex_count()).any(|s| extend(g, &mut vec![s], k, cycle))
}

/// A random simple graph on at most `max_vertices` vertices with 1..=`max_edges` edges.
pub fn random_graph(rng: &mut impl Rng, max_vertices: usize, max_edges: usize) -> Graph {
    let n = rng.gen_range(2..=max_vertices);
    let mut all: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
    all.shuffle(rng);
    let m = rng.gen_range(1..=max_edges.min(all.len()));
    all.truncate(m);
    build(&all)
}

/// A random forest of stars, pisceses and single edges with at most `max_edges`
/// edges, with scrambled labels, edge order and orientation.
pub fn random_pm_forest(rng: &mut impl Rng, max_edges: usize) -> Graph {
    let budget = rng.gen_range(1..=max_edges);
    let mut pairs: Vec<(usize, usize)> = Vec::new();
    let mut next = 0;
    let mut fresh = || {
        next += 1;
        next - 1
    };
    while pairs.len() < budget {
        let room = budget - pairs.len();
        if room >= 3 && rng.gen_bool(0.5) {
            let (a, b) = (fresh(), fresh());
            pairs.push((a, b));
            let left = rng.gen_range(1..=(room - 2).min(4));
            let right = rng.gen_range(1..=(room - 1 - left).min(4));
            for _ in 0..left {
                pairs.push((a, fresh()));
            }
            for _ in 0..right {
                pairs.push((b, fresh()));
            }
        } else {
            let c = fresh();
            for _ in 0..rng.gen_range(1..=room.min(5)) {
                pairs.push((c, fresh()));
            }
        }
    }
    let mut names: Vec<usize> = (0..next).collect();
    names.shuffle(rng);
    pairs.shuffle(rng);
    let labelled: Vec<(String, String)> = pairs
        .iter()
        .map(|&(u, v)| {
            let (u, v) = if rng.gen_bool(0.5) { (u, v) } else { (v, u) };
            (format!("n{}", names[u]), format!("n{}", names[v]))
        })
        .collect();
    Graph::from_edges(labelled.iter().map(|(u, v)| (u.as_str(), v.as_str()))).unwrap()
}

/// Every graph on `n` labelled vertices, as edge lists over `0..n`.
pub fn all_graphs(n: usize) -> impl Iterator<Item = Vec<(usize, usize)>> {
    let slots: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
    (0u64..1 << slots.len()).map(move |m| members(m).map(|i| slots[i]).collect())
}

/// An integral scheme as, for every coalition mask, the mask of players paying 1.
pub type IntegralTable = Vec<u64>;

/// All integral PMAS-es of `g` by backtracking over coalitions in order of size,
/// pruning on efficiency and on monotonicity against each maximal proper subset.
pub fn brute_integral_pmas(g: &Graph) -> BTreeSet<IntegralTable> {
    let n = g.edge_count();
    let gamma = brute_gamma_table(g);
    let mut order: Vec<u64> = (1u64..1 << n).collect();
    order.sort_by_key(|m| (m.count_ones(), *m));
    let mut table = vec![0u64; 1 << n];
    let mut out = BTreeSet::new();
    fn go(k: usize, order: &[u64], gamma: &[usize], table: &mut Vec<u64>, out: &mut BTreeSet<IntegralTable>) {
        let Some(&s) = order.get(k) else {
            out.insert(table.clone());
            return;
        };
        let mut p = s;
        loop {
            // p ranges over all submasks of s
            if p.count_ones() as usize == gamma[s as usize]
                && members(p).all(|i| members(s).all(|j| j == i || table[(s & !(1 << j)) as usize] >> i & 1 == 1))
            {
                table[s as usize] = p;
                go(k + 1, order, gamma, table, out);
            }
            if p == 0 {
                break;
            }
            p = (p - 1) & s;
        }
        table[s as usize] = 0;
    }
    go(0, &order, &gamma, &mut table, &mut out);
    out
}

/// Reads an integral scheme back into the table form above.
pub fn integral_table(scheme: &AllocationScheme, n: usize) -> IntegralTable {
    let one = Rational::from_integer(1);
    let mut table = vec![0u64; 1 << n];
    for m in 1u64..1 << n {
        let a = scheme.allocation(&Coalition::from_mask(m)).unwrap();
        for (i, v) in a.iter() {
            assert!(v == one || v == Rational::from_integer(0), "non-integral payment {v}");
            if v == one {
                table[m as usize] |= 1 << i;
            }
        }
    }
    table
}

/// Every stable matching of `s` under `ps`, by trying all matchings.
pub fn brute_stable_matchings(ps: &PreferenceSystem, s: u64) -> Vec<u64> {
    let g = ps.graph();
    let rank = |v: usize, e: usize| ps.order(v).map_or(0, |o| o.iter().position(|&x| x == e).unwrap());
    let mut found = Vec::new();
    let mut m = s;
    loop {
        let is_matching = members(m).all(|e| {
            members(m).all(|f| {
                let (a, b) = g.endpoints(e);
                let (c, d) = g.endpoints(f);
                e == f || (a != c && a != d && b != c && b != d)
            })
        });
        let matched_by = |v: usize| members(m).find(|&f| {
            let (a, b) = g.endpoints(f);
            a == v || b == v
        });
        let stable = is_matching
            && members(s & !m).all(|e| {
                let (u, v) = g.endpoints(e);
                [u, v].iter().any(|&x| matched_by(x).is_some_and(|f| rank(x, f) < rank(x, e)))
            });
        if stable {
            found.push(m);
        }
        if m == 0 {
            break;
        }
        m = (m - 1) & s;
    }
    found.sort_unstable();
    found
}
