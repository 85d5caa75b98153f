//! Deferred acceptance on bipartite coalition subgraphs.
//!
//! On star/pisces graphs one side of each component is (mostly) cover
//! vertices and every cover vertex simply keeps its best incident edge, so the
//! result does not depend on which side proposes.

use std::collections::VecDeque;
use std::fmt;

use crate::coalition::Coalition;
use crate::error::{Error, Result};
use crate::game::Verdict;
use crate::graph::{two_coloring, Matching};

use super::preference::PreferenceSystem;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum StabilityViolation {
    NotInCoalition { edge: usize },
    NotAMatching,
    /// An unmatched edge of `S` not dominated at either endpoint.
    Blocking { edge: usize },
}

impl fmt::Display for StabilityViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            StabilityViolation::NotInCoalition { edge } => write!(f, "edge {edge} is not in the coalition"),
            StabilityViolation::NotAMatching => f.write_str("edges share an endpoint"),
            StabilityViolation::Blocking { edge } => write!(f, "edge {edge} is not dominated by the matching"),
        }
    }
}

/// A stable matching of `(G[S], ≺_S)`. In each component the side containing
/// the smallest label proposes.
pub fn gale_shapley(ps: &PreferenceSystem, s: &Coalition) -> Result<Matching> {
    let g = ps.graph();
    g.check_coalition(s)?;
    let color = two_coloring(g, s)
        .ok_or_else(|| Error::Unsupported(format!("G[{{{s}}}] is not bipartite")))?;
    let n = g.vertex_count();
    let lists: Vec<Vec<usize>> = (0..n)
        .map(|v| if color[v] == Some(false) { ps.restricted(v, s) } else { Vec::new() })
        .collect();
    let mut next = vec![0usize; n];
    let mut held: Vec<Option<usize>> = vec![None; n];
    let mut free: VecDeque<usize> = g
        .vertices_by_label()
        .iter()
        .copied()
        .filter(|&v| color[v] == Some(false))
        .collect();
    while let Some(p) = free.pop_front() {
        let Some(&e) = lists[p].get(next[p]) else {
            continue;
        };
        next[p] += 1;
        let r = g.other_end(e, p);
        match held[r] {
            None => held[r] = Some(e),
            Some(cur) if ps.prefers(r, e, cur) => {
                held[r] = Some(e);
                free.push_back(g.other_end(cur, r));
            }
            Some(_) => free.push_back(p),
        }
    }
    let edges: Coalition = held.into_iter().flatten().collect();
    Matching::new(g, edges)
}

/// Stability by direct scan: every edge of `S ∖ M` must be beaten at one of its
/// endpoints by an edge of `M`.
pub fn is_stable(ps: &PreferenceSystem, s: &Coalition, m: &Coalition) -> Verdict<StabilityViolation> {
    let g = ps.graph();
    if let Some(edge) = m.iter().find(|&e| !s.contains(e)) {
        return Verdict::Fails(StabilityViolation::NotInCoalition { edge });
    }
    if !Matching::is_matching(g, m) {
        return Verdict::Fails(StabilityViolation::NotAMatching);
    }
    for j in s.iter().filter(|&j| !m.contains(j)) {
        let (a, b) = g.endpoints(j);
        let dominated = [a, b].into_iter().any(|v| {
            g.incident(v)
                .iter()
                .any(|&i| i != j && m.contains(i) && ps.prefers(v, i, j))
        });
        if !dominated {
            return Verdict::Fails(StabilityViolation::Blocking { edge: j });
        }
    }
    Verdict::Holds
}
