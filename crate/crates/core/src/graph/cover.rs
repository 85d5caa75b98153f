//! Exact vertex cover and matching numbers of edge-induced subgraphs.
//!
//! Components that are trees of diameter at most 3 are solved structurally
//! (their non-pendant vertices form a minimum cover). Other components go to
//! a branch-and-bound search whose size is bounded by a vertex cap.

use super::search::{components_within, two_coloring};
use super::Graph;
use crate::coalition::Coalition;
use crate::error::{Error, Result};

pub const DEFAULT_VERTEX_CAP: usize = 24;
const HARD_VERTEX_CAP: usize = 64;

/// A minimum vertex cover of some `G[S]`; `vertices` are sorted by label.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VertexCover {
    pub size: usize,
    pub vertices: Vec<usize>,
}

/// A set of pairwise vertex-disjoint edges.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Matching {
    edges: Coalition,
}

impl Matching {
    pub fn new(g: &Graph, edges: Coalition) -> Result<Matching> {
        if !Matching::is_matching(g, &edges) {
            return Err(Error::Contract(format!(
                "edges {{{edges}}} share an endpoint"
            )));
        }
        Ok(Matching { edges })
    }

    pub fn is_matching(g: &Graph, edges: &Coalition) -> bool {
        if edges.bound() > g.edge_count() {
            return false;
        }
        let mut used = vec![false; g.vertex_count()];
        for e in edges.iter() {
            let (a, b) = g.endpoints(e);
            if used[a] || used[b] {
                return false;
            }
            used[a] = true;
            used[b] = true;
        }
        true
    }

    pub fn edges(&self) -> &Coalition {
        &self.edges
    }

    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    pub fn contains(&self, e: usize) -> bool {
        self.edges.contains(e)
    }
}

/// A component relabelled to `0..n` in label order, with edges in index order.
struct Local {
    verts: Vec<usize>,
    edges: Vec<(usize, usize)>,
    ids: Vec<usize>,
}

impl Local {
    fn new(g: &Graph, comp: &Coalition) -> Local {
        let mut verts: Vec<usize> = comp
            .iter()
            .flat_map(|e| {
                let (a, b) = g.endpoints(e);
                [a, b]
            })
            .collect();
        verts.sort_by_key(|&v| g.label_rank(v));
        verts.dedup();
        let pos = |v: usize| verts.iter().position(|&x| x == v).expect("endpoint is local");
        let edges = comp
            .iter()
            .map(|e| {
                let (a, b) = g.endpoints(e);
                (pos(a), pos(b))
            })
            .collect();
        Local {
            edges,
            ids: comp.iter().collect(),
            verts,
        }
    }

    fn n(&self) -> usize {
        self.verts.len()
    }

    /// Non-pendant vertices if this component is a tree of diameter ≤ 3.
    fn structural_cover(&self) -> Option<Vec<usize>> {
        if self.edges.len() + 1 != self.n() {
            return None;
        }
        let mut degree = vec![0usize; self.n()];
        for &(a, b) in &self.edges {
            degree[a] += 1;
            degree[b] += 1;
        }
        let internal: Vec<usize> = (0..self.n()).filter(|&v| degree[v] >= 2).collect();
        match internal.len() {
            // a single edge; local order is label order
            0 => Some(vec![0]),
            1 | 2 => Some(internal),
            _ => None,
        }
    }
}

fn check_cap(n: usize, cap: usize) -> Result<()> {
    let cap = cap.min(HARD_VERTEX_CAP);
    if n > cap {
        return Err(Error::TooLarge { size: n, cap });
    }
    Ok(())
}

/// Minimum cover size subject to forced inclusions/exclusions, with its vertex set.
fn min_cover(local: &Local, forced_in: u64, forced_out: u64) -> Option<(usize, u64)> {
    let mut best = None;
    cover_rec(&local.edges, forced_in, forced_out, &mut best);
    best
}

fn cover_rec(edges: &[(usize, usize)], chosen: u64, excluded: u64, best: &mut Option<(usize, u64)>) {
    let bit = |v: usize| 1u64 << v;
    let (mut chosen, excluded) = (chosen, excluded);
    // unit propagation: an uncovered edge with an excluded end forces the other end
    loop {
        let mut changed = false;
        for &(a, b) in edges {
            if chosen & (bit(a) | bit(b)) != 0 {
                continue;
            }
            match (excluded & bit(a) != 0, excluded & bit(b) != 0) {
                (true, true) => return,
                (true, false) => {
                    chosen |= bit(b);
                    changed = true;
                }
                (false, true) => {
                    chosen |= bit(a);
                    changed = true;
                }
                (false, false) => {}
            }
        }
        if !changed {
            break;
        }
    }
    let size = chosen.count_ones() as usize;
    let uncovered: Vec<(usize, usize)> = edges
        .iter()
        .copied()
        .filter(|&(a, b)| chosen & (bit(a) | bit(b)) == 0)
        .collect();
    if uncovered.is_empty() {
        if best.is_none_or(|(b, _)| size < b) {
            *best = Some((size, chosen));
        }
        return;
    }
    // a greedy maximal matching bounds the remaining cover size from below
    let mut used = 0u64;
    let mut lower = 0;
    for &(a, b) in &uncovered {
        if used & (bit(a) | bit(b)) == 0 {
            used |= bit(a) | bit(b);
            lower += 1;
        }
    }
    if best.is_some_and(|(b, _)| size + lower >= b) {
        return;
    }
    let mut degree = [0u32; 64];
    for &(a, b) in &uncovered {
        degree[a] += 1;
        degree[b] += 1;
    }
    let v = (0..64)
        .max_by_key(|&v| (degree[v], std::cmp::Reverse(v)))
        .expect("some vertex has an uncovered edge");
    cover_rec(edges, chosen | bit(v), excluded, best);
    let mut neighbors = 0u64;
    for &(a, b) in &uncovered {
        if a == v {
            neighbors |= bit(b);
        } else if b == v {
            neighbors |= bit(a);
        }
    }
    cover_rec(edges, chosen | neighbors, excluded | bit(v), best);
}

/// τ(G[S]) without a witness.
pub fn cover_size(g: &Graph, s: &Coalition, cap: usize) -> Result<usize> {
    g.check_coalition(s)?;
    let mut total = 0;
    for comp in components_within(g, s) {
        let local = Local::new(g, &comp);
        total += match local.structural_cover() {
            Some(c) => c.len(),
            None => {
                check_cap(local.n(), cap)?;
                min_cover(&local, 0, 0).expect("unconstrained cover exists").0
            }
        };
    }
    Ok(total)
}

pub fn vertex_cover_number(g: &Graph, s: &Coalition) -> Result<VertexCover> {
    vertex_cover_number_with_cap(g, s, DEFAULT_VERTEX_CAP)
}

/// τ(G[S]) and a witness. Structurally solved components contribute their
/// centers/bases; searched components contribute their lexicographically
/// smallest minimum cover.
pub fn vertex_cover_number_with_cap(g: &Graph, s: &Coalition, cap: usize) -> Result<VertexCover> {
    g.check_coalition(s)?;
    let mut vertices = Vec::new();
    for comp in components_within(g, s) {
        let local = Local::new(g, &comp);
        if let Some(c) = local.structural_cover() {
            vertices.extend(c.into_iter().map(|v| local.verts[v]));
            continue;
        }
        check_cap(local.n(), cap)?;
        let (size, _) = min_cover(&local, 0, 0).expect("unconstrained cover exists");
        let (mut fin, mut fout) = (0u64, 0u64);
        for v in 0..local.n() {
            match min_cover(&local, fin | (1 << v), fout) {
                Some((k, _)) if k == size => fin |= 1 << v,
                _ => fout |= 1 << v,
            }
        }
        vertices.extend((0..local.n()).filter(|v| fin & (1 << v) != 0).map(|v| local.verts[v]));
    }
    vertices.sort_by_key(|&v| g.label_rank(v));
    Ok(VertexCover {
        size: vertices.len(),
        vertices,
    })
}

pub fn matching_number(g: &Graph, s: &Coalition) -> Result<Matching> {
    matching_number_with_cap(g, s, DEFAULT_VERTEX_CAP)
}

/// ν(G[S]) as a maximum matching. Bipartite subgraphs use augmenting paths;
/// otherwise each non-bipartite component is searched exhaustively.
pub fn matching_number_with_cap(g: &Graph, s: &Coalition, cap: usize) -> Result<Matching> {
    g.check_coalition(s)?;
    let mut edges = Coalition::empty();
    for comp in components_within(g, s) {
        let found = match two_coloring(g, &comp) {
            Some(color) => augmenting_matching(g, &comp, &color),
            None => {
                let local = Local::new(g, &comp);
                check_cap(local.n(), cap)?;
                exhaustive_matching(&local)
            }
        };
        edges = edges.union(&found);
    }
    Ok(Matching { edges })
}

fn augmenting_matching(g: &Graph, s: &Coalition, color: &[Option<bool>]) -> Coalition {
    let n = g.vertex_count();
    // mate_edge[v]: matched edge at v
    let mut mate_edge: Vec<Option<usize>> = vec![None; n];
    let left: Vec<usize> = g
        .vertices_by_label()
        .iter()
        .copied()
        .filter(|&v| color[v] == Some(false))
        .collect();
    for &u in &left {
        let mut seen = vec![false; n];
        augment(g, s, u, &mut mate_edge, &mut seen);
    }
    left.iter().filter_map(|&u| mate_edge[u]).collect()
}

fn augment(g: &Graph, s: &Coalition, u: usize, mate_edge: &mut [Option<usize>], seen: &mut [bool]) -> bool {
    for &e in g.incident(u) {
        if !s.contains(e) {
            continue;
        }
        let w = g.other_end(e, u);
        if seen[w] {
            continue;
        }
        seen[w] = true;
        let free = match mate_edge[w] {
            None => true,
            Some(f) => augment(g, s, g.other_end(f, w), mate_edge, seen),
        };
        if free {
            mate_edge[u] = Some(e);
            mate_edge[w] = Some(e);
            return true;
        }
    }
    false
}

fn exhaustive_matching(local: &Local) -> Coalition {
    let n = local.n();
    let mut incident: Vec<Vec<(usize, usize)>> = vec![Vec::new(); n];
    for (k, &(a, b)) in local.edges.iter().enumerate() {
        incident[a].push((k, b));
        incident[b].push((k, a));
    }
    let alive = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
    let mut best: Vec<usize> = Vec::new();
    let mut current = Vec::new();
    matching_rec(&incident, alive, &mut current, &mut best);
    best.into_iter().map(|k| local.ids[k]).collect()
}

fn matching_rec(
    incident: &[Vec<(usize, usize)>],
    alive: u64,
    current: &mut Vec<usize>,
    best: &mut Vec<usize>,
) {
    if alive == 0 {
        if current.len() > best.len() {
            *best = current.clone();
        }
        return;
    }
    if current.len() + (alive.count_ones() as usize) / 2 <= best.len() {
        return;
    }
    let v = alive.trailing_zeros() as usize;
    let rest = alive & !(1u64 << v);
    for &(k, w) in &incident[v] {
        if rest & (1u64 << w) != 0 {
            current.push(k);
            matching_rec(incident, rest & !(1u64 << w), current, best);
            current.pop();
        }
    }
    matching_rec(incident, rest, current, best);
}
