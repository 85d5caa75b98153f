use std::collections::VecDeque;
use std::fmt;

use super::Graph;
use crate::coalition::Coalition;
use crate::error::{Error, Result};

/// Edge sets of the connected components of `G[S]`, ordered by smallest edge index.
pub fn components_within(g: &Graph, s: &Coalition) -> Vec<Coalition> {
    let n = g.vertex_count();
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(parent: &mut [usize], mut x: usize) -> usize {
        while parent[x] != x {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        x
    }
    for e in s.iter() {
        let (a, b) = g.endpoints(e);
        let (ra, rb) = (find(&mut parent, a), find(&mut parent, b));
        if ra != rb {
            parent[ra.max(rb)] = ra.min(rb);
        }
    }
    // edges are visited ascending, so first-seen order is smallest-edge order
    let mut slot: Vec<Option<usize>> = vec![None; n];
    let mut out: Vec<Coalition> = Vec::new();
    for e in s.iter() {
        let r = find(&mut parent, g.endpoints(e).0);
        let k = *slot[r].get_or_insert_with(|| {
            out.push(Coalition::empty());
            out.len() - 1
        });
        out[k].insert(e);
    }
    out
}

/// Components of the whole graph. Isolated vertices carry no players and are skipped.
pub fn components(g: &Graph) -> Vec<Coalition> {
    components_within(g, &g.players())
}

fn bfs_distances(g: &Graph, s: &Coalition, source: usize) -> Vec<Option<usize>> {
    let mut dist = vec![None; g.vertex_count()];
    dist[source] = Some(0);
    let mut queue = VecDeque::from([source]);
    while let Some(v) = queue.pop_front() {
        let d = dist[v].unwrap_or(0);
        for &e in g.incident(v) {
            if !s.contains(e) {
                continue;
            }
            let w = g.other_end(e, v);
            if dist[w].is_none() {
                dist[w] = Some(d + 1);
                queue.push_back(w);
            }
        }
    }
    dist
}

/// Largest shortest-path distance between two vertices of a connected edge set.
pub fn diameter(g: &Graph, comp: &Coalition) -> Result<usize> {
    g.check_coalition(comp)?;
    if comp.is_empty() || components_within(g, comp).len() != 1 {
        return Err(Error::Contract(format!(
            "diameter needs a single connected component, got {{{comp}}}"
        )));
    }
    let view = g.view(comp)?;
    let mut best = 0;
    for v in view.vertices() {
        let dist = bfs_distances(g, comp, v);
        best = best.max(view.vertices().filter_map(|w| dist[w]).max().unwrap_or(0));
    }
    Ok(best)
}

/// A proper 2-coloring of `G[S]` (`None` for vertices outside `V_S`), or `None`
/// if an odd cycle exists. Each component is rooted at its smallest-label vertex,
/// which receives color `false`.
pub fn two_coloring(g: &Graph, s: &Coalition) -> Option<Vec<Option<bool>>> {
    let mut color: Vec<Option<bool>> = vec![None; g.vertex_count()];
    for &root in g.vertices_by_label() {
        if color[root].is_some() || !g.incident(root).iter().any(|&e| s.contains(e)) {
            continue;
        }
        color[root] = Some(false);
        let mut queue = VecDeque::from([root]);
        while let Some(v) = queue.pop_front() {
            let c = color[v]?;
            for &e in g.incident(v) {
                if !s.contains(e) {
                    continue;
                }
                let w = g.other_end(e, v);
                match color[w] {
                    None => {
                        color[w] = Some(!c);
                        queue.push_back(w);
                    }
                    Some(cw) if cw == c => return None,
                    Some(_) => {}
                }
            }
        }
    }
    Some(color)
}

pub fn is_bipartite_within(g: &Graph, s: &Coalition) -> bool {
    two_coloring(g, s).is_some()
}

/// True iff the graph has no odd cycle.
pub fn is_bipartite(g: &Graph) -> bool {
    is_bipartite_within(g, &g.players())
}

/// Small patterns searched for as (not necessarily induced) subgraphs.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Pattern {
    K3,
    C4,
    P4,
    P5,
}

impl Pattern {
    pub fn vertex_count(self) -> usize {
        match self {
            Pattern::K3 => 3,
            Pattern::C4 | Pattern::P4 => 4,
            Pattern::P5 => 5,
        }
    }

    fn closes(self) -> bool {
        matches!(self, Pattern::K3 | Pattern::C4)
    }
}

impl fmt::Display for Pattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Pattern::K3 => "K3",
            Pattern::C4 => "C4",
            Pattern::P4 => "P4",
            Pattern::P5 => "P5",
        };
        f.write_str(s)
    }
}

/// A concrete occurrence of a pattern: consecutive labels are adjacent, and for
/// cycles the last label is adjacent to the first.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ForbiddenWitness {
    pub pattern: Pattern,
    pub vertices: Vec<String>,
}

impl fmt::Display for ForbiddenWitness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} on {{{}}}", self.pattern, self.vertices.join(","))
    }
}

/// Finds the lexicographically smallest (by label sequence) occurrence of `pattern`.
pub fn find_forbidden_subgraph(g: &Graph, pattern: Pattern) -> Option<ForbiddenWitness> {
    let neighbors: Vec<Vec<usize>> = (0..g.vertex_count())
        .map(|v| {
            let mut ns: Vec<usize> = g.incident(v).iter().map(|&e| g.other_end(e, v)).collect();
            ns.sort_by_key(|&w| g.label_rank(w));
            ns
        })
        .collect();
    let k = pattern.vertex_count();
    let mut path = Vec::with_capacity(k);
    let mut on_path = vec![false; g.vertex_count()];
    for &start in g.vertices_by_label() {
        path.push(start);
        on_path[start] = true;
        let found = extend(g, &neighbors, pattern, k, &mut path, &mut on_path);
        if found {
            return Some(ForbiddenWitness {
                pattern,
                vertices: path.iter().map(|&v| g.label(v).to_string()).collect(),
            });
        }
        on_path[start] = false;
        path.pop();
    }
    None
}

fn extend(
    g: &Graph,
    neighbors: &[Vec<usize>],
    pattern: Pattern,
    k: usize,
    path: &mut Vec<usize>,
    on_path: &mut [bool],
) -> bool {
    let last = *path.last().expect("path is nonempty");
    if path.len() == k {
        return !pattern.closes() || g.edge_between(last, path[0]).is_some();
    }
    for &w in &neighbors[last] {
        if on_path[w] {
            continue;
        }
        path.push(w);
        on_path[w] = true;
        if extend(g, neighbors, pattern, k, path, on_path) {
            return true;
        }
        on_path[w] = false;
        path.pop();
    }
    false
}
