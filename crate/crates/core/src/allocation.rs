//! Exact per-coalition cost vectors.

use std::fmt;

use num_rational::Rational64;
use num_traits::{Signed, Zero};

use crate::coalition::Coalition;
use crate::error::{Error, Result};

pub type Rational = Rational64;

/// Renders a rational as `p/q`, always with an explicit denominator.
pub fn format_rational(r: &Rational) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

/// Accepts `p/q` or a bare integer `p`. The result is reduced.
pub fn parse_rational(s: &str) -> Result<Rational> {
    let bad = || Error::Format {
        line: 0,
        message: format!("bad rational {s:?}"),
    };
    let s = s.trim();
    match s.split_once('/') {
        Some((p, q)) => {
            let p: i64 = p.trim().parse().map_err(|_| bad())?;
            let q: i64 = q.trim().parse().map_err(|_| bad())?;
            if q == 0 {
                return Err(bad());
            }
            Ok(Rational::new(p, q))
        }
        None => Ok(Rational::from_integer(s.parse().map_err(|_| bad())?)),
    }
}

/// Payments for the members of one coalition, stored in ascending member order.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct CostAllocation {
    coalition: Coalition,
    values: Vec<Rational>,
}

impl CostAllocation {
    /// `values[k]` is the payment of the k-th smallest member of `coalition`.
    pub fn new(coalition: Coalition, values: Vec<Rational>) -> Result<Self> {
        if coalition.len() != values.len() {
            return Err(Error::MalformedScheme(format!(
                "coalition {{{coalition}}} has {} members but {} payments",
                coalition.len(),
                values.len()
            )));
        }
        Ok(CostAllocation { coalition, values })
    }

    pub fn from_pairs<I: IntoIterator<Item = (usize, Rational)>>(pairs: I) -> Self {
        let mut pairs: Vec<(usize, Rational)> = pairs.into_iter().collect();
        pairs.sort_by_key(|&(i, _)| i);
        pairs.dedup_by_key(|&mut (i, _)| i);
        CostAllocation {
            coalition: pairs.iter().map(|&(i, _)| i).collect(),
            values: pairs.into_iter().map(|(_, v)| v).collect(),
        }
    }

    /// 1 on members of `matched`, 0 on the rest of `coalition`.
    pub fn incidence(coalition: &Coalition, matched: &Coalition) -> Self {
        CostAllocation {
            coalition: coalition.clone(),
            values: coalition
                .iter()
                .map(|i| {
                    if matched.contains(i) {
                        Rational::from_integer(1)
                    } else {
                        Rational::zero()
                    }
                })
                .collect(),
        }
    }

    pub fn coalition(&self) -> &Coalition {
        &self.coalition
    }

    pub fn get(&self, player: usize) -> Option<Rational> {
        if !self.coalition.contains(player) {
            return None;
        }
        let pos = self.coalition.iter().position(|i| i == player)?;
        Some(self.values[pos])
    }

    pub fn iter(&self) -> impl Iterator<Item = (usize, Rational)> + '_ {
        self.coalition.iter().zip(self.values.iter().copied())
    }

    pub fn values(&self) -> &[Rational] {
        &self.values
    }

    pub fn sum(&self) -> Rational {
        self.values.iter().sum()
    }

    pub fn sum_over(&self, players: impl IntoIterator<Item = usize>) -> Rational {
        players.into_iter().filter_map(|i| self.get(i)).sum()
    }

    pub fn is_integral(&self) -> bool {
        self.values.iter().all(|v| v.is_integer())
    }

    pub fn is_nonnegative(&self) -> bool {
        self.values.iter().all(|v| !v.is_negative())
    }

    /// Deterministic JSON object: edge index → `"p/q"`, ascending by index.
    pub fn to_json_value(&self) -> serde_json::Value {
        let mut map = serde_json::Map::new();
        for (i, v) in self.iter() {
            map.insert(i.to_string(), serde_json::Value::String(format_rational(&v)));
        }
        serde_json::Value::Object(map)
    }

    pub fn from_json_value(value: &serde_json::Value) -> Result<Self> {
        let obj = value
            .as_object()
            .ok_or_else(|| Error::MalformedScheme("allocation must be a JSON object".into()))?;
        let mut pairs = Vec::with_capacity(obj.len());
        for (k, v) in obj {
            let i: usize = k
                .trim()
                .parse()
                .map_err(|_| Error::MalformedScheme(format!("bad edge index {k:?}")))?;
            let text = v
                .as_str()
                .ok_or_else(|| Error::MalformedScheme(format!("payment of edge {i} must be a string")))?;
            pairs.push((i, parse_rational(text)?));
        }
        Ok(CostAllocation::from_pairs(pairs))
    }
}

impl fmt::Debug for CostAllocation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_map()
            .entries(self.iter().map(|(i, v)| (i, format_rational(&v))))
            .finish()
    }
}
