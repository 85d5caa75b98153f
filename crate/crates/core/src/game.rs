//! The vertex cover game `γ(S) = τ(G[S])` and exhaustive desk-scale checks of
//! its game-theoretic properties.

use std::collections::HashMap;
use std::sync::RwLock;

use crate::allocation::{CostAllocation, Rational};
use crate::coalition::{nonempty_masks, Coalition};
use crate::error::{Error, Result};
use crate::graph::{self, find_forbidden_subgraph, Graph, Pattern, DEFAULT_VERTEX_CAP};

/// Player cap for checks that enumerate all coalitions.
pub const DEFAULT_EXHAUSTIVE_CAP: usize = 16;
/// Player cap for checks that enumerate all pairs of coalitions.
pub const SUBMODULAR_CAP: usize = 12;

/// Outcome of a yes/no check that can explain a "no".
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Verdict<W> {
    Holds,
    Fails(W),
}

impl<W> Verdict<W> {
    pub fn holds(&self) -> bool {
        matches!(self, Verdict::Holds)
    }

    pub fn witness(&self) -> Option<&W> {
        match self {
            Verdict::Holds => None,
            Verdict::Fails(w) => Some(w),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MonotonicityViolation {
    pub smaller: Coalition,
    pub larger: Coalition,
    pub smaller_cost: usize,
    pub larger_cost: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SubmodularityViolation {
    pub s: Coalition,
    pub t: Coalition,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CoreViolation {
    WrongPlayers { expected: Coalition, found: Coalition },
    Inefficient { total: Rational, cost: usize },
    Blocked { coalition: Coalition, paid: Rational, cost: usize },
}

pub struct VertexCoverGame {
    graph: Graph,
    vertex_cap: usize,
    memo: RwLock<HashMap<Coalition, usize>>,
}

impl VertexCoverGame {
    pub fn new(graph: Graph) -> Self {
        VertexCoverGame::with_vertex_cap(graph, DEFAULT_VERTEX_CAP)
    }

    /// `vertex_cap` bounds the exhaustive vertex cover search per component.
    pub fn with_vertex_cap(graph: Graph, vertex_cap: usize) -> Self {
        VertexCoverGame {
            graph,
            vertex_cap,
            memo: RwLock::new(HashMap::new()),
        }
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn player_count(&self) -> usize {
        self.graph.edge_count()
    }

    pub fn players(&self) -> Coalition {
        self.graph.players()
    }

    /// `γ(S)`, memoized. `γ(∅) = 0`.
    pub fn gamma(&self, s: &Coalition) -> Result<usize> {
        if s.is_empty() {
            return Ok(0);
        }
        if let Some(&v) = self.memo.read().expect("memo lock").get(s) {
            return Ok(v);
        }
        let v = self.gamma_uncached(s)?;
        self.memo.write().expect("memo lock").insert(s.clone(), v);
        Ok(v)
    }

    pub fn gamma_uncached(&self, s: &Coalition) -> Result<usize> {
        graph::cover_size(&self.graph, s, self.vertex_cap)
    }

    /// `γ` for every coalition, indexed by bitmask (entry 0 is `γ(∅)`).
    pub fn gamma_table(&self, cap: usize) -> Result<Vec<usize>> {
        let n = self.exhaustive_guard(cap)?;
        (0..1u64 << n)
            .map(|m| self.gamma_uncached(&Coalition::from_mask(m)))
            .collect()
    }

    fn exhaustive_guard(&self, cap: usize) -> Result<usize> {
        let n = self.player_count();
        if n > cap || n >= 63 {
            return Err(Error::TooLarge { size: n, cap });
        }
        Ok(n)
    }

    pub fn is_monotone_game(&self) -> Result<Verdict<MonotonicityViolation>> {
        self.is_monotone_game_with_cap(DEFAULT_EXHAUSTIVE_CAP)
    }

    /// Checks `γ(S) ≤ γ(S ∪ {j})` for all `S` and `j ∉ S`; other pairs follow by transitivity.
    pub fn is_monotone_game_with_cap(&self, cap: usize) -> Result<Verdict<MonotonicityViolation>> {
        let n = self.exhaustive_guard(cap)?;
        let table = self.gamma_table(cap)?;
        for s in 0..1u64 << n {
            for j in 0..n {
                let t = s | (1 << j);
                if t != s && table[s as usize] > table[t as usize] {
                    return Ok(Verdict::Fails(MonotonicityViolation {
                        smaller: Coalition::from_mask(s),
                        larger: Coalition::from_mask(t),
                        smaller_cost: table[s as usize],
                        larger_cost: table[t as usize],
                    }));
                }
            }
        }
        Ok(Verdict::Holds)
    }

    /// Checks `γ(S) + γ(T) ≥ γ(S ∪ T) + γ(S ∩ T)` over all pairs.
    pub fn is_submodular_game(&self) -> Result<Verdict<SubmodularityViolation>> {
        let n = self.exhaustive_guard(SUBMODULAR_CAP)?;
        let table = self.gamma_table(SUBMODULAR_CAP)?;
        let size = 1usize << n;
        for s in 0..size {
            for t in s + 1..size {
                if table[s] + table[t] < table[s | t] + table[s & t] {
                    return Ok(Verdict::Fails(SubmodularityViolation {
                        s: Coalition::from_mask(s as u64),
                        t: Coalition::from_mask(t as u64),
                    }));
                }
            }
        }
        Ok(Verdict::Holds)
    }

    /// Balanced (nonempty core) iff `ν(G) = τ(G)`.
    pub fn is_balanced(&self) -> Result<bool> {
        let all = self.players();
        let nu = graph::matching_number_with_cap(&self.graph, &all, self.vertex_cap)?.len();
        Ok(nu == self.gamma(&all)?)
    }

    /// Totally balanced iff the graph is bipartite.
    pub fn is_totally_balanced(&self) -> bool {
        graph::is_bipartite(&self.graph)
    }

    /// Efficiency on the grand coalition plus `Σ_{i∈S} a_i ≤ γ(S)` for every `S`.
    pub fn core_membership(&self, alloc: &CostAllocation) -> Result<Verdict<CoreViolation>> {
        let n = self.exhaustive_guard(DEFAULT_EXHAUSTIVE_CAP)?;
        let all = self.players();
        if alloc.coalition() != &all {
            return Ok(Verdict::Fails(CoreViolation::WrongPlayers {
                expected: all,
                found: alloc.coalition().clone(),
            }));
        }
        let cost = self.gamma(&all)?;
        let total = alloc.sum();
        if total != Rational::from_integer(cost as i64) {
            return Ok(Verdict::Fails(CoreViolation::Inefficient { total, cost }));
        }
        let table = self.gamma_table(DEFAULT_EXHAUSTIVE_CAP)?;
        let values = alloc.values();
        let mut sums = vec![Rational::from_integer(0); 1 << n];
        for m in nonempty_masks(n) {
            let low = m.trailing_zeros() as usize;
            sums[m as usize] = sums[(m & (m - 1)) as usize] + values[low];
            if sums[m as usize] > Rational::from_integer(table[m as usize] as i64) {
                return Ok(Verdict::Fails(CoreViolation::Blocked {
                    coalition: Coalition::from_mask(m),
                    paid: sums[m as usize],
                    cost: table[m as usize],
                }));
            }
        }
        Ok(Verdict::Holds)
    }

    /// Incidence vector of a maximum matching; a core element whenever `ν = τ`.
    pub fn core_element_from_matching(&self) -> Result<CostAllocation> {
        let all = self.players();
        let m = graph::matching_number_with_cap(&self.graph, &all, self.vertex_cap)?;
        let cover = self.gamma(&all)?;
        if m.len() < cover {
            return Err(Error::NotBalanced {
                matching: m.len(),
                cover,
            });
        }
        Ok(CostAllocation::incidence(&all, m.edges()))
    }
}

/// Submodular iff the graph is (K3, P4)-free.
pub fn is_submodular_graph(g: &Graph) -> bool {
    find_forbidden_subgraph(g, Pattern::K3).is_none() && find_forbidden_subgraph(g, Pattern::P4).is_none()
}
