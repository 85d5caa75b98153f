use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use crate::allocation::{CostAllocation, Rational};
use crate::coalition::{nonempty_masks, Coalition};
use crate::error::{Error, Result};
use crate::graph::Graph;

use super::classify::{classify_components, CoverSystem};

/// A rule that prices any single coalition on demand.
pub trait SchemeRule: Send + Sync {
    fn allocate(&self, s: &Coalition) -> Result<CostAllocation>;
}

/// Per-coalition payment vectors `(a_{S,i})`. A scheme is either a table over
/// every nonempty coalition or a rule evaluated lazily, since full tables
/// grow as `2^|E|`.
#[derive(Clone)]
pub enum AllocationScheme {
    Table {
        players: usize,
        entries: BTreeMap<Coalition, CostAllocation>,
    },
    Rule {
        players: usize,
        rule: Arc<dyn SchemeRule>,
    },
}

impl AllocationScheme {
    pub fn from_rule<R: SchemeRule + 'static>(players: usize, rule: R) -> Self {
        AllocationScheme::Rule {
            players,
            rule: Arc::new(rule),
        }
    }

    pub fn from_table(players: usize, entries: BTreeMap<Coalition, CostAllocation>) -> Self {
        AllocationScheme::Table { players, entries }
    }

    pub fn player_count(&self) -> usize {
        match self {
            AllocationScheme::Table { players, .. } | AllocationScheme::Rule { players, .. } => *players,
        }
    }

    pub fn is_materialized(&self) -> bool {
        matches!(self, AllocationScheme::Table { .. })
    }

    /// `a_S`. Fails for the empty coalition, foreign players, coalitions missing
    /// from a table, and entries whose index set is not `S`.
    pub fn allocation(&self, s: &Coalition) -> Result<CostAllocation> {
        if s.is_empty() {
            return Err(Error::Contract("schemes price nonempty coalitions only".into()));
        }
        if s.bound() > self.player_count() {
            return Err(Error::Contract(format!(
                "coalition {{{s}}} names players outside 0..{}",
                self.player_count()
            )));
        }
        let a = match self {
            AllocationScheme::Table { entries, .. } => entries
                .get(s)
                .cloned()
                .ok_or_else(|| Error::MalformedScheme(format!("no entry for coalition {{{s}}}")))?,
            AllocationScheme::Rule { rule, .. } => rule.allocate(s)?,
        };
        if a.coalition() != s {
            return Err(Error::MalformedScheme(format!(
                "entry for {{{s}}} pays players {{{}}}",
                a.coalition()
            )));
        }
        Ok(a)
    }

    /// Evaluates every nonempty coalition into a table.
    pub fn materialize(&self, cap: usize) -> Result<AllocationScheme> {
        let n = self.player_count();
        if n > cap || n >= 63 {
            return Err(Error::TooLarge { size: n, cap });
        }
        let mut entries = BTreeMap::new();
        for m in nonempty_masks(n) {
            let s = Coalition::from_mask(m);
            let a = self.allocation(&s)?;
            entries.insert(s, a);
        }
        Ok(AllocationScheme::Table { players: n, entries })
    }

    /// Whether two schemes agree on every nonempty coalition.
    pub fn same_as(&self, other: &AllocationScheme, cap: usize) -> Result<bool> {
        let n = self.player_count();
        if n != other.player_count() {
            return Ok(false);
        }
        if n > cap || n >= 63 {
            return Err(Error::TooLarge { size: n, cap });
        }
        for m in nonempty_masks(n) {
            let s = Coalition::from_mask(m);
            if self.allocation(&s)? != other.allocation(&s)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Deterministic JSON: `{"0,2,3": {"0": "1/3", ...}, ...}` with coalition
    /// keys in ascending lexicographic order of their members.
    pub fn to_json(&self, cap: usize) -> Result<String> {
        let table = match self {
            AllocationScheme::Table { .. } => self.clone(),
            AllocationScheme::Rule { .. } => self.materialize(cap)?,
        };
        let AllocationScheme::Table { entries, .. } = &table else {
            unreachable!("materialized above");
        };
        let mut map = serde_json::Map::new();
        for (s, a) in entries {
            map.insert(s.to_string(), a.to_json_value());
        }
        Ok(serde_json::to_string_pretty(&serde_json::Value::Object(map))?)
    }

    pub fn from_json(text: &str, players: usize) -> Result<AllocationScheme> {
        let value: serde_json::Value = serde_json::from_str(text)?;
        let obj = value
            .as_object()
            .ok_or_else(|| Error::MalformedScheme("scheme must be a JSON object".into()))?;
        let mut entries = BTreeMap::new();
        for (key, v) in obj {
            let s: Coalition = key
                .parse()
                .map_err(|_| Error::MalformedScheme(format!("bad coalition key {key:?}")))?;
            if s.is_empty() || s.bound() > players {
                return Err(Error::MalformedScheme(format!(
                    "coalition key {key:?} is empty or names players outside 0..{players}"
                )));
            }
            let a = CostAllocation::from_json_value(v)?;
            if a.coalition() != &s {
                return Err(Error::MalformedScheme(format!(
                    "entry {key:?} pays players {{{}}}",
                    a.coalition()
                )));
            }
            entries.insert(s, a);
        }
        Ok(AllocationScheme::Table { players, entries })
    }
}

impl fmt::Debug for AllocationScheme {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AllocationScheme::Table { players, entries } => f
                .debug_struct("Table")
                .field("players", players)
                .field("entries", entries)
                .finish(),
            AllocationScheme::Rule { players, .. } => {
                f.debug_struct("Rule").field("players", players).finish_non_exhaustive()
            }
        }
    }
}

/// Each vertex of `C*_S` splits a unit of cost equally among the
/// non-free-rider edges of `S` it covers. An accompanied free rider pays 0, a
/// lone one pays 1.
pub struct EqualSplitRule {
    graph: Graph,
    cover: CoverSystem,
}

impl EqualSplitRule {
    pub fn new(graph: Graph, cover: CoverSystem) -> Self {
        EqualSplitRule { graph, cover }
    }
}

impl SchemeRule for EqualSplitRule {
    fn allocate(&self, s: &Coalition) -> Result<CostAllocation> {
        self.graph.check_coalition(s)?;
        let mut load = vec![0i64; self.graph.vertex_count()];
        for e in s.iter() {
            if let Some(v) = self.cover.cover_vertex(e) {
                load[v] += 1;
            }
        }
        let values = s
            .iter()
            .map(|e| match self.cover.cover_vertex(e) {
                Some(v) => Rational::new(1, load[v]),
                None if self.cover.is_lone_free_rider(&self.graph, s, e) => Rational::from_integer(1),
                None => Rational::from_integer(0),
            })
            .collect();
        CostAllocation::new(s.clone(), values)
    }
}

/// The equal-split PMAS of a (K3, C4, P5)-free graph, as a lazy rule.
pub fn construct_pmas(g: &Graph) -> Result<AllocationScheme> {
    let classification = classify_components(g)?;
    Ok(AllocationScheme::from_rule(
        g.edge_count(),
        EqualSplitRule::new(g.clone(), classification.cover),
    ))
}
