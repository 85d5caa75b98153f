//! Recognition and the star/pisces taxonomy of population monotonic graphs.

use std::fmt;

use crate::coalition::Coalition;
use crate::error::{Error, Result};
use crate::game::Verdict;
use crate::graph::{components, diameter, find_forbidden_subgraph, ForbiddenWitness, Graph, Pattern};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ComponentKind {
    SingleEdge,
    Star,
    Pisces,
}

impl fmt::Display for ComponentKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ComponentKind::SingleEdge => "single-edge",
            ComponentKind::Star => "star",
            ComponentKind::Pisces => "pisces",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ComponentClassification {
    pub edges: Coalition,
    pub kind: ComponentKind,
    /// The center (star, single edge) or the two bases (pisces), in label order.
    pub centers: Vec<usize>,
    pub free_rider: Option<usize>,
    /// For each of `centers`, its incident edges other than the free rider.
    pub pendant_edges: Vec<(usize, Vec<usize>)>,
}

/// `C*` (centers and bases) together with which `C*` vertex covers each edge.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoverSystem {
    vertices: Vec<usize>,
    in_cover: Vec<bool>,
    cover_of: Vec<Option<usize>>,
    free_rider: Vec<bool>,
}

impl CoverSystem {
    /// `C*` in label order.
    pub fn vertices(&self) -> &[usize] {
        &self.vertices
    }

    pub fn contains(&self, v: usize) -> bool {
        self.in_cover.get(v).copied().unwrap_or(false)
    }

    pub fn is_free_rider(&self, e: usize) -> bool {
        self.free_rider.get(e).copied().unwrap_or(false)
    }

    pub fn free_riders(&self) -> impl Iterator<Item = usize> + '_ {
        self.free_rider.iter().enumerate().filter(|(_, &f)| f).map(|(e, _)| e)
    }

    /// The unique `C*` vertex covering a non-free-rider edge.
    pub fn cover_vertex(&self, e: usize) -> Option<usize> {
        self.cover_of.get(e).copied().flatten()
    }

    /// A free rider in `S` that shares no endpoint with another edge of `S`.
    pub fn is_lone_free_rider(&self, g: &Graph, s: &Coalition, e: usize) -> bool {
        if !self.is_free_rider(e) || !s.contains(e) {
            return false;
        }
        let (a, b) = g.endpoints(e);
        g.incident(a)
            .iter()
            .chain(g.incident(b))
            .all(|&f| f == e || !s.contains(f))
    }

    /// `C*_S ⊆ C*`, a minimum vertex cover of `G[S]`, in label order. Every
    /// non-free-rider edge contributes its covering vertex; a lone free rider
    /// contributes its smaller-labelled endpoint.
    pub fn select(&self, g: &Graph, s: &Coalition) -> Vec<usize> {
        let mut chosen = vec![false; g.vertex_count()];
        for e in s.iter() {
            if let Some(v) = self.cover_vertex(e) {
                chosen[v] = true;
            } else if self.is_lone_free_rider(g, s, e) {
                let (a, b) = g.endpoints(e);
                chosen[if g.label_rank(a) < g.label_rank(b) { a } else { b }] = true;
            }
        }
        self.vertices.iter().copied().filter(|&v| chosen[v]).collect()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Classification {
    pub components: Vec<ComponentClassification>,
    pub cover: CoverSystem,
}

impl Classification {
    pub fn count(&self, kind: ComponentKind) -> usize {
        self.components.iter().filter(|c| c.kind == kind).count()
    }
}

fn is_small_tree(g: &Graph, comp: &Coalition) -> bool {
    let Ok(view) = g.view(comp) else {
        return false;
    };
    view.vertex_count() == comp.len() + 1 && diameter(g, comp).is_ok_and(|d| d <= 3)
}

/// Population monotonic iff every component is a tree of diameter at most 3,
/// equivalently the graph is (K3, C4, P5)-free. A failure carries an occurrence
/// of one of those three patterns.
pub fn recognize_population_monotonic(g: &Graph) -> Verdict<ForbiddenWitness> {
    if components(g).iter().all(|c| is_small_tree(g, c)) {
        return Verdict::Holds;
    }
    let witness = [Pattern::K3, Pattern::C4, Pattern::P5]
        .into_iter()
        .find_map(|p| find_forbidden_subgraph(g, p))
        .expect("a component that is not a tree of diameter <= 3 contains K3, C4 or P5");
    Verdict::Fails(witness)
}

pub fn classify_components(g: &Graph) -> Result<Classification> {
    if let Verdict::Fails(w) = recognize_population_monotonic(g) {
        return Err(Error::NotPopulationMonotonic(w));
    }
    let n = g.vertex_count();
    let mut in_cover = vec![false; n];
    let mut cover_of = vec![None; g.edge_count()];
    let mut free_rider = vec![false; g.edge_count()];
    let mut out = Vec::new();
    for comp in components(g) {
        let view = g.view(&comp)?;
        let mut internal: Vec<usize> = view.vertices().filter(|&v| g.degree(v) >= 2).collect();
        internal.sort_by_key(|&v| g.label_rank(v));
        let (kind, centers, rider) = match internal.len() {
            0 => {
                let e = comp.first().expect("component has an edge");
                let (a, b) = g.endpoints(e);
                let c = if g.label_rank(a) < g.label_rank(b) { a } else { b };
                (ComponentKind::SingleEdge, vec![c], None)
            }
            1 => (ComponentKind::Star, internal, None),
            2 => {
                let fr = g
                    .edge_between(internal[0], internal[1])
                    .ok_or_else(|| Error::Contract("pisces bases must be adjacent".into()))?;
                (ComponentKind::Pisces, internal, Some(fr))
            }
            k => {
                return Err(Error::Contract(format!(
                    "component {{{comp}}} has {k} non-pendant vertices"
                )))
            }
        };
        if let Some(fr) = rider {
            free_rider[fr] = true;
        }
        let mut pendant_edges = Vec::with_capacity(centers.len());
        for &c in &centers {
            in_cover[c] = true;
            let own: Vec<usize> = g.incident(c).iter().copied().filter(|&e| Some(e) != rider).collect();
            for &e in &own {
                cover_of[e] = Some(c);
            }
            pendant_edges.push((c, own));
        }
        out.push(ComponentClassification {
            edges: comp,
            kind,
            centers,
            free_rider: rider,
            pendant_edges,
        });
    }
    let vertices = g
        .vertices_by_label()
        .iter()
        .copied()
        .filter(|&v| in_cover[v])
        .collect();
    Ok(Classification {
        components: out,
        cover: CoverSystem {
            vertices,
            in_cover,
            cover_of,
            free_rider,
        },
    })
}

/// `λ_S(i)`: non-free-rider edges of `S` at the `C*_S` vertex covering `i`.
pub fn lambda(g: &Graph, s: &Coalition, i: usize, cover: &CoverSystem) -> Result<usize> {
    if !s.contains(i) {
        return Err(Error::Contract(format!("edge {i} is not in {{{s}}}")));
    }
    let v = cover
        .cover_vertex(i)
        .ok_or_else(|| Error::Contract(format!("edge {i} is a free rider")))?;
    Ok(g.incident(v)
        .iter()
        .filter(|&&e| s.contains(e) && !cover.is_free_rider(e))
        .count())
}
