use std::collections::BTreeMap;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::coalition::Coalition;
use crate::pmas::CoverSystem;

/// Strict orders `≺_v` over the incident edges of each vertex, best first.
///
/// Every vertex of degree at least 2 needs an order. Degree-1 vertices have
/// only the trivial order and may be omitted.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PreferenceSystem {
    graph: Arc<Graph>,
    orders: BTreeMap<usize, Vec<usize>>,
}

impl PreferenceSystem {
    pub fn new(graph: Arc<Graph>, orders: BTreeMap<usize, Vec<usize>>) -> Result<Self> {
        for (&v, order) in &orders {
            if v >= graph.vertex_count() {
                return Err(Error::InvalidPreferences(format!("unknown vertex id {v}")));
            }
            let mut sorted = order.clone();
            sorted.sort_unstable();
            if sorted != graph.incident(v) {
                return Err(Error::InvalidPreferences(format!(
                    "order at {} must list exactly its incident edges {:?}, got {:?}",
                    graph.label(v),
                    graph.incident(v),
                    order
                )));
            }
        }
        if let Some(v) = (0..graph.vertex_count()).find(|&v| graph.degree(v) >= 2 && !orders.contains_key(&v)) {
            return Err(Error::InvalidPreferences(format!(
                "vertex {} has degree {} but no order",
                graph.label(v),
                graph.degree(v)
            )));
        }
        Ok(PreferenceSystem { graph, orders })
    }

    /// Orders keyed by vertex label.
    pub fn from_labels<I, S>(graph: Arc<Graph>, orders: I) -> Result<Self>
    where
        I: IntoIterator<Item = (S, Vec<usize>)>,
        S: AsRef<str>,
    {
        let mut by_id = BTreeMap::new();
        for (label, order) in orders {
            let v = graph
                .vertex(label.as_ref())
                .ok_or_else(|| Error::InvalidPreferences(format!("unknown vertex {:?}", label.as_ref())))?;
            by_id.insert(v, order);
        }
        PreferenceSystem::new(graph, by_id)
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn shared_graph(&self) -> Arc<Graph> {
        Arc::clone(&self.graph)
    }

    pub fn order(&self, v: usize) -> Option<&[usize]> {
        self.orders.get(&v).map(Vec::as_slice)
    }

    /// Vertices with an explicit order, by id.
    pub fn ordered_vertices(&self) -> impl Iterator<Item = usize> + '_ {
        self.orders.keys().copied()
    }

    /// Position of `e` in `≺_v` (0 is best), or `None` if `e` is not at `v`.
    pub fn rank(&self, v: usize, e: usize) -> Option<usize> {
        match self.orders.get(&v) {
            Some(order) => order.iter().position(|&f| f == e),
            None => self.graph.incident(v).iter().position(|&f| f == e),
        }
    }

    /// `i ≺_v j`.
    pub fn prefers(&self, v: usize, i: usize, j: usize) -> bool {
        match (self.rank(v, i), self.rank(v, j)) {
            (Some(a), Some(b)) => a < b,
            _ => false,
        }
    }

    /// `≺_v` restricted to the edges of `S`.
    pub fn restricted(&self, v: usize, s: &Coalition) -> Vec<usize> {
        let all = self.orders.get(&v).map_or(self.graph.incident(v), Vec::as_slice);
        all.iter().copied().filter(|&e| s.contains(e)).collect()
    }

    /// Every free rider is last at both of its endpoints.
    pub fn check_free_riders_lowest(&self, cover: &CoverSystem) -> Result<()> {
        for e in cover.free_riders() {
            let (a, b) = self.graph.endpoints(e);
            for v in [a, b] {
                if self.rank(v, e) != Some(self.graph.degree(v) - 1) {
                    return Err(Error::FreeRiderNotLowest {
                        edge: e,
                        vertex: self.graph.label(v).to_string(),
                    });
                }
            }
        }
        Ok(())
    }

    /// `{"label": [edge, ...], ...}` with keys in label order.
    pub fn to_json(&self) -> String {
        let mut map = serde_json::Map::new();
        for &v in self.graph.vertices_by_label() {
            if let Some(order) = self.orders.get(&v) {
                map.insert(self.graph.label(v).to_string(), serde_json::json!(order));
            }
        }
        serde_json::to_string(&serde_json::Value::Object(map)).expect("plain JSON values serialize")
    }

    pub fn from_json(graph: Arc<Graph>, text: &str) -> Result<Self> {
        let raw: BTreeMap<String, Vec<usize>> = serde_json::from_str(text)?;
        PreferenceSystem::from_labels(graph, raw)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::pmas::classify_components;

    fn p4() -> Arc<Graph> {
        Arc::new(Graph::parse("a b\nb c\nc d").unwrap())
    }

    #[test]
    fn validation() {
        let g = p4();
        assert!(PreferenceSystem::from_labels(Arc::clone(&g), [("b", vec![0, 1]), ("c", vec![2, 1])]).is_ok());
        // c missing
        assert!(PreferenceSystem::from_labels(Arc::clone(&g), [("b", vec![0, 1])]).is_err());
        // wrong edge set
        assert!(PreferenceSystem::from_labels(Arc::clone(&g), [("b", vec![0, 2]), ("c", vec![2, 1])]).is_err());
        assert!(PreferenceSystem::from_labels(Arc::clone(&g), [("zz", vec![0])]).is_err());
    }

    #[test]
    fn free_rider_rank() {
        let g = p4();
        let cover = classify_components(&g).unwrap().cover;
        let ok = PreferenceSystem::from_labels(Arc::clone(&g), [("b", vec![0, 1]), ("c", vec![2, 1])]).unwrap();
        assert!(ok.check_free_riders_lowest(&cover).is_ok());
        let bad = PreferenceSystem::from_labels(Arc::clone(&g), [("b", vec![1, 0]), ("c", vec![2, 1])]).unwrap();
        assert_eq!(
            bad.check_free_riders_lowest(&cover).unwrap_err(),
            Error::FreeRiderNotLowest { edge: 1, vertex: "b".into() }
        );
    }

    #[test]
    fn json_roundtrip() {
        let g = p4();
        let ps = PreferenceSystem::from_labels(Arc::clone(&g), [("c", vec![2, 1]), ("b", vec![0, 1])]).unwrap();
        let text = ps.to_json();
        assert_eq!(text, r#"{"b":[0,1],"c":[2,1]}"#);
        assert_eq!(PreferenceSystem::from_json(g, &text).unwrap(), ps);
    }

    #[test]
    fn restriction_keeps_relative_order() {
        let g = Arc::new(Graph::parse("h a\nh b\nh c").unwrap());
        let ps = PreferenceSystem::from_labels(g, [("h", vec![2, 0, 1])]).unwrap();
        let h = ps.graph().vertex("h").unwrap();
        assert_eq!(ps.restricted(h, &"0,2".parse().unwrap()), [2, 0]);
        assert!(ps.prefers(h, 2, 1));
        assert!(!ps.prefers(h, 1, 0));
        let a = ps.graph().vertex("a").unwrap();
        assert_eq!(ps.rank(a, 0), Some(0));
    }
}
