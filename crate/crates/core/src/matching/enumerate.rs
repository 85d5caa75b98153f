use std::sync::Arc;

use num_bigint::BigUint;

use crate::error::Result;
use crate::graph::Graph;
use crate::pmas::{classify_components, AllocationScheme};

use super::bijection::StableMatchingRule;
use super::preference::PreferenceSystem;

pub const DEFAULT_ENUMERATION_CAP: usize = 10_000;

/// One integral PMAS together with the preference system that generates it.
#[derive(Clone, Debug)]
pub struct IntegralPmas {
    pub preferences: PreferenceSystem,
    pub scheme: AllocationScheme,
}

/// Lazily walks all preference systems with free riders last. Cover vertices
/// are taken in label order, the first one varying slowest; each vertex runs
/// through the permutations of its non-free-rider edges in lexicographic order.
pub struct IntegralPmasStream {
    graph: Arc<Graph>,
    // (cover vertex, current permutation of own edges, free rider if any)
    slots: Vec<(usize, Vec<usize>, Option<usize>)>,
    exhausted: bool,
    emitted: usize,
    cap: usize,
    truncated: bool,
}

impl IntegralPmasStream {
    /// True once the stream stopped at the cap with systems left over.
    pub fn is_truncated(&self) -> bool {
        self.truncated
    }

    pub fn emitted(&self) -> usize {
        self.emitted
    }

    fn current(&self) -> Result<PreferenceSystem> {
        let orders = self
            .slots
            .iter()
            .map(|(v, perm, rider)| {
                let mut order = perm.clone();
                order.extend(rider);
                (*v, order)
            })
            .collect();
        PreferenceSystem::new(Arc::clone(&self.graph), orders)
    }

    fn advance(&mut self) {
        for (_, perm, _) in self.slots.iter_mut().rev() {
            if next_permutation(perm) {
                return;
            }
            // wrapped around to sorted; carry into the previous vertex
        }
        self.exhausted = true;
    }
}

impl Iterator for IntegralPmasStream {
    type Item = Result<IntegralPmas>;

    fn next(&mut self) -> Option<Self::Item> {
        if self.exhausted {
            return None;
        }
        if self.emitted == self.cap {
            self.truncated = true;
            return None;
        }
        let item = self.current().map(|preferences| IntegralPmas {
            scheme: AllocationScheme::from_rule(
                self.graph.edge_count(),
                StableMatchingRule::new(preferences.clone()),
            ),
            preferences,
        });
        self.emitted += 1;
        self.advance();
        Some(item)
    }
}

/// Rearranges into the next lexicographic permutation; returns false (and
/// leaves the slice sorted) after the last one.
fn next_permutation(v: &mut [usize]) -> bool {
    let Some(i) = (1..v.len()).rev().find(|&i| v[i - 1] < v[i]) else {
        v.reverse();
        return false;
    };
    let j = (i..v.len()).rev().find(|&j| v[j] > v[i - 1]).expect("pivot has a successor");
    v.swap(i - 1, j);
    v[i..].reverse();
    true
}

pub fn enumerate_integral_pmas(g: &Graph, cap: usize) -> Result<IntegralPmasStream> {
    let classification = classify_components(g)?;
    let mut slots = Vec::new();
    for &v in classification.cover.vertices() {
        let rider = g.incident(v).iter().copied().find(|&e| classification.cover.is_free_rider(e));
        let own: Vec<usize> = g.incident(v).iter().copied().filter(|&e| Some(e) != rider).collect();
        slots.push((v, own, rider));
    }
    Ok(IntegralPmasStream {
        graph: Arc::new(g.clone()),
        slots,
        exhausted: false,
        emitted: 0,
        cap,
        truncated: false,
    })
}

/// `Π_{v∈C*} (non-free-rider edges at v)!`, the number of integral PMAS-es.
pub fn count_integral_pmas(g: &Graph) -> Result<BigUint> {
    let classification = classify_components(g)?;
    let mut total = BigUint::from(1u32);
    for component in &classification.components {
        for (_, own) in &component.pendant_edges {
            for k in 2..=own.len() {
                total *= BigUint::from(k);
            }
        }
    }
    Ok(total)
}
