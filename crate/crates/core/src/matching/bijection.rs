//! Integral PMAS-es correspond one-to-one with preference systems that rank
//! every free rider last: each coalition pays the incidence vector of its
//! unique stable matching.

use std::collections::BTreeMap;

use num_traits::{One, Zero};

use crate::allocation::CostAllocation;
use crate::coalition::Coalition;
use crate::error::{Error, Result};
use crate::game::VertexCoverGame;
use crate::pmas::{classify_components, AllocationScheme, SchemeRule};

use super::preference::PreferenceSystem;
use super::stable::gale_shapley;

/// Prices a coalition with the incidence vector of its stable matching.
pub struct StableMatchingRule {
    preferences: PreferenceSystem,
}

impl StableMatchingRule {
    pub(crate) fn new(preferences: PreferenceSystem) -> Self {
        StableMatchingRule { preferences }
    }
}

impl SchemeRule for StableMatchingRule {
    fn allocate(&self, s: &Coalition) -> Result<CostAllocation> {
        let m = gale_shapley(&self.preferences, s)?;
        Ok(CostAllocation::incidence(s, m.edges()))
    }
}

pub fn scheme_from_preferences(ps: &PreferenceSystem) -> Result<AllocationScheme> {
    let classification = classify_components(ps.graph())?;
    ps.check_free_riders_lowest(&classification.cover)?;
    Ok(AllocationScheme::from_rule(
        ps.graph().edge_count(),
        StableMatchingRule::new(ps.clone()),
    ))
}

/// Reads off `≺_v` for every cover vertex `v` by repeatedly taking the edge
/// that pays 1 in the remaining part of `δ(v)`.
pub fn preferences_from_scheme(game: &VertexCoverGame, scheme: &AllocationScheme) -> Result<PreferenceSystem> {
    let g = game.graph();
    let classification = classify_components(g)?;
    let mut orders = BTreeMap::new();
    for &v in classification.cover.vertices() {
        let mut rest: Coalition = g.incident(v).iter().copied().collect();
        let mut order = Vec::with_capacity(rest.len());
        while !rest.is_empty() {
            let a = scheme.allocation(&rest)?;
            if let Some((e, x)) = a.iter().find(|(_, x)| !x.is_zero() && !x.is_one()) {
                return Err(Error::MalformedIntegralScheme(format!(
                    "edge {e} pays {x} in {{{rest}}}; payments must be 0 or 1"
                )));
            }
            let payers: Vec<usize> = a.iter().filter(|(_, x)| x.is_one()).map(|(e, _)| e).collect();
            let [top] = payers[..] else {
                return Err(Error::MalformedIntegralScheme(format!(
                    "{} edges pay 1 in {{{rest}}} at vertex {}",
                    payers.len(),
                    g.label(v)
                )));
            };
            order.push(top);
            rest.remove(top);
        }
        orders.insert(v, order);
    }
    let ps = PreferenceSystem::new(game.graph().clone().into(), orders)?;
    ps.check_free_riders_lowest(&classification.cover).map_err(|e| {
        Error::MalformedIntegralScheme(format!("extracted preferences violate the free-rider rule: {e}"))
    })?;
    Ok(ps)
}
