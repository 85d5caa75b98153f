//! Simple undirected graphs whose edges are the players of the game.

mod cover;
mod search;

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::str::FromStr;

use crate::coalition::Coalition;
use crate::error::{Error, Result};

pub use cover::{
    cover_size, matching_number, matching_number_with_cap, vertex_cover_number,
    vertex_cover_number_with_cap, Matching, VertexCover, DEFAULT_VERTEX_CAP,
};
pub use search::{
    components, components_within, diameter, find_forbidden_subgraph, is_bipartite,
    is_bipartite_within, two_coloring, ForbiddenWitness, Pattern,
};

/// Vertices carry opaque string labels; edge `i` is player `i`.
#[derive(Clone)]
pub struct Graph {
    labels: Vec<String>,
    ids: HashMap<String, usize>,
    edges: Vec<(usize, usize)>,
    edge_ids: HashMap<(usize, usize), usize>,
    incident: Vec<Vec<usize>>,
    // vertex ids sorted by label, and the inverse permutation
    by_label: Vec<usize>,
    label_rank: Vec<usize>,
}

impl Graph {
    /// Builds a graph from an explicit vertex list (isolated vertices allowed) and edges.
    pub fn new<V, E, S>(vertices: V, edges: E) -> Result<Graph>
    where
        V: IntoIterator<Item = S>,
        E: IntoIterator<Item = (S, S)>,
        S: Into<String>,
    {
        let mut b = Builder::default();
        for v in vertices {
            b.vertex(v.into());
        }
        for (k, (u, v)) in edges.into_iter().enumerate() {
            b.edge(u.into(), v.into(), k + 1)?;
        }
        Ok(b.finish())
    }

    /// Builds a graph from edges alone; vertices appear in order of first mention.
    pub fn from_edges<'a, E>(edges: E) -> Result<Graph>
    where
        E: IntoIterator<Item = (&'a str, &'a str)>,
    {
        let mut b = Builder::default();
        for (k, (u, v)) in edges.into_iter().enumerate() {
            b.edge(u.to_string(), v.to_string(), k + 1)?;
        }
        Ok(b.finish())
    }

    /// Parses the edge-list format: one edge per line, two whitespace-separated
    /// labels, `#` starts a comment line. Edge indices follow line order.
    pub fn parse(text: &str) -> Result<Graph> {
        let mut b = Builder::default();
        for (n, raw) in text.lines().enumerate() {
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let tokens: Vec<&str> = line.split_whitespace().collect();
            if tokens.len() != 2 {
                return Err(Error::Format {
                    line: n + 1,
                    message: format!("expected two vertex labels, found {}", tokens.len()),
                });
            }
            b.edge(tokens[0].to_string(), tokens[1].to_string(), n + 1)?;
        }
        if b.edges.is_empty() {
            return Err(Error::EmptyGraph);
        }
        Ok(b.finish())
    }

    pub fn vertex_count(&self) -> usize {
        self.labels.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn label(&self, v: usize) -> &str {
        &self.labels[v]
    }

    pub fn vertex(&self, label: &str) -> Option<usize> {
        self.ids.get(label).copied()
    }

    pub fn endpoints(&self, e: usize) -> (usize, usize) {
        self.edges[e]
    }

    pub fn other_end(&self, e: usize, v: usize) -> usize {
        let (a, b) = self.edges[e];
        if a == v {
            b
        } else {
            a
        }
    }

    /// Incident edge indices of `v`, ascending.
    pub fn incident(&self, v: usize) -> &[usize] {
        &self.incident[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.incident[v].len()
    }

    pub fn edge_between(&self, u: usize, v: usize) -> Option<usize> {
        self.edge_ids.get(&(u.min(v), u.max(v))).copied()
    }

    /// Vertex ids in label order.
    pub fn vertices_by_label(&self) -> &[usize] {
        &self.by_label
    }

    /// Position of `v` in label order; comparing ranks compares labels.
    pub fn label_rank(&self, v: usize) -> usize {
        self.label_rank[v]
    }

    pub fn players(&self) -> Coalition {
        Coalition::full(self.edges.len())
    }

    /// Human-readable edge, e.g. `a-b`.
    pub fn edge_label(&self, e: usize) -> String {
        let (u, v) = self.edges[e];
        format!("{}-{}", self.labels[u], self.labels[v])
    }

    /// The edge-induced subgraph `G[S]`.
    pub fn view(&self, coalition: &Coalition) -> Result<SubgraphView<'_>> {
        SubgraphView::new(self, coalition.clone())
    }

    pub(crate) fn check_coalition(&self, s: &Coalition) -> Result<()> {
        if s.bound() > self.edges.len() {
            return Err(Error::Contract(format!(
                "coalition {{{s}}} names edges outside 0..{}",
                self.edges.len()
            )));
        }
        Ok(())
    }
}

impl FromStr for Graph {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Graph::parse(s)
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Graph")
            .field("vertices", &self.labels)
            .field(
                "edges",
                &(0..self.edges.len()).map(|e| self.edge_label(e)).collect::<Vec<_>>(),
            )
            .finish()
    }
}

impl PartialEq for Graph {
    fn eq(&self, other: &Self) -> bool {
        self.labels == other.labels && self.edges == other.edges
    }
}

impl Eq for Graph {}

#[derive(Default)]
struct Builder {
    labels: Vec<String>,
    ids: HashMap<String, usize>,
    edges: Vec<(usize, usize)>,
    edge_ids: HashMap<(usize, usize), usize>,
}

impl Builder {
    fn vertex(&mut self, label: String) -> usize {
        if let Some(&v) = self.ids.get(&label) {
            return v;
        }
        let v = self.labels.len();
        self.ids.insert(label.clone(), v);
        self.labels.push(label);
        v
    }

    fn edge(&mut self, u: String, v: String, line: usize) -> Result<()> {
        if u == v {
            return Err(Error::Format {
                line,
                message: format!("self-loop at {u}"),
            });
        }
        let a = self.vertex(u);
        let b = self.vertex(v);
        let key = (a.min(b), a.max(b));
        if let Some(prev) = self.edge_ids.get(&key) {
            return Err(Error::Format {
                line,
                message: format!(
                    "duplicate edge {}-{} (already edge {prev})",
                    self.labels[a], self.labels[b]
                ),
            });
        }
        self.edge_ids.insert(key, self.edges.len());
        self.edges.push((a, b));
        Ok(())
    }

    fn finish(self) -> Graph {
        let n = self.labels.len();
        let mut incident = vec![Vec::new(); n];
        for (e, &(a, b)) in self.edges.iter().enumerate() {
            incident[a].push(e);
            incident[b].push(e);
        }
        let mut by_label: Vec<usize> = (0..n).collect();
        by_label.sort_by(|&x, &y| self.labels[x].cmp(&self.labels[y]));
        let mut label_rank = vec![0; n];
        for (r, &v) in by_label.iter().enumerate() {
            label_rank[v] = r;
        }
        Graph {
            labels: self.labels,
            ids: self.ids,
            edges: self.edges,
            edge_ids: self.edge_ids,
            incident,
            by_label,
            label_rank,
        }
    }
}

/// `G[S]`: the vertices touched by a coalition and each vertex's coalition edges.
#[derive(Clone, Debug)]
pub struct SubgraphView<'g> {
    graph: &'g Graph,
    coalition: Coalition,
    incident: BTreeMap<usize, Vec<usize>>,
}

impl<'g> SubgraphView<'g> {
    fn new(graph: &'g Graph, coalition: Coalition) -> Result<Self> {
        graph.check_coalition(&coalition)?;
        let mut incident: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
        for e in coalition.iter() {
            let (a, b) = graph.endpoints(e);
            incident.entry(a).or_default().push(e);
            incident.entry(b).or_default().push(e);
        }
        Ok(SubgraphView {
            graph,
            coalition,
            incident,
        })
    }

    pub fn graph(&self) -> &'g Graph {
        self.graph
    }

    pub fn coalition(&self) -> &Coalition {
        &self.coalition
    }

    /// `V_S`, ascending by vertex id.
    pub fn vertices(&self) -> impl Iterator<Item = usize> + '_ {
        self.incident.keys().copied()
    }

    pub fn vertex_count(&self) -> usize {
        self.incident.len()
    }

    /// `δ_S(v)`; empty when `v ∉ V_S`.
    pub fn incident(&self, v: usize) -> &[usize] {
        self.incident.get(&v).map_or(&[], Vec::as_slice)
    }

    pub fn degree(&self, v: usize) -> usize {
        self.incident(v).len()
    }
}
