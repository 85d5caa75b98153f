use std::cmp::Ordering;
use std::fmt;

use crate::allocation::{format_rational, Rational};
use crate::coalition::{nonempty_masks, Coalition};
use crate::error::{Error, Result};
use crate::game::{Verdict, VertexCoverGame, DEFAULT_EXHAUSTIVE_CAP};

use super::scheme::AllocationScheme;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PmasViolation {
    /// `Σ_{i∈S} a_{S,i} ≠ γ(S)`.
    Efficiency {
        coalition: Coalition,
        paid: Rational,
        cost: usize,
    },
    /// `a_{S,i} < a_{T,i}` for `S ⊂ T`.
    Monotonicity {
        smaller: Coalition,
        larger: Coalition,
        player: usize,
        smaller_pays: Rational,
        larger_pays: Rational,
    },
}

impl fmt::Display for PmasViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PmasViolation::Efficiency { coalition, paid, cost } => write!(
                f,
                "efficiency fails on {{{coalition}}}: pays {} but costs {cost}",
                format_rational(paid)
            ),
            PmasViolation::Monotonicity {
                smaller,
                larger,
                player,
                smaller_pays,
                larger_pays,
            } => write!(
                f,
                "monotonicity fails for edge {player}: pays {} in {{{smaller}}} but {} in {{{larger}}}",
                format_rational(smaller_pays),
                format_rational(larger_pays)
            ),
        }
    }
}

fn cmp_exact(a: &Rational, b: &Rational) -> Ordering {
    // denominators are kept positive by num-rational
    (*a.numer() as i128 * *b.denom() as i128).cmp(&(*b.numer() as i128 * *a.denom() as i128))
}

/// Dense view of a scheme: payment vectors by coalition mask.
struct Dense {
    n: usize,
    values: Vec<Vec<Rational>>,
    gamma: Vec<usize>,
}

impl Dense {
    fn build(game: &VertexCoverGame, scheme: &AllocationScheme, cap: usize) -> Result<Dense> {
        let n = game.player_count();
        if scheme.player_count() != n {
            return Err(Error::MalformedScheme(format!(
                "scheme has {} players, game has {n}",
                scheme.player_count()
            )));
        }
        let gamma = game.gamma_table(cap)?;
        let mut values = vec![Vec::new(); 1 << n];
        for m in nonempty_masks(n) {
            values[m as usize] = scheme.allocation(&Coalition::from_mask(m))?.values().to_vec();
        }
        Ok(Dense { n, values, gamma })
    }

    fn pay(&self, mask: u64, i: usize) -> &Rational {
        let pos = (mask & ((1u64 << i) - 1)).count_ones() as usize;
        &self.values[mask as usize][pos]
    }

    /// Visits violations in a fixed order: all efficiency constraints by
    /// ascending mask, then covering pairs `(S, S∪{j})` by `S`, `j`, then player.
    fn scan(&self, mut visit: impl FnMut(PmasViolation) -> bool) {
        for m in nonempty_masks(self.n) {
            let paid: Rational = self.values[m as usize].iter().sum();
            let cost = self.gamma[m as usize];
            if paid != Rational::from_integer(cost as i64)
                && !visit(PmasViolation::Efficiency {
                    coalition: Coalition::from_mask(m),
                    paid,
                    cost,
                })
            {
                return;
            }
        }
        for s in nonempty_masks(self.n) {
            for j in (0..self.n).filter(|&j| s & (1 << j) == 0) {
                let t = s | (1 << j);
                let mut rest = s;
                while rest != 0 {
                    let i = rest.trailing_zeros() as usize;
                    rest &= rest - 1;
                    let (small, large) = (self.pay(s, i), self.pay(t, i));
                    if cmp_exact(small, large) == Ordering::Less
                        && !visit(PmasViolation::Monotonicity {
                            smaller: Coalition::from_mask(s),
                            larger: Coalition::from_mask(t),
                            player: i,
                            smaller_pays: *small,
                            larger_pays: *large,
                        })
                    {
                        return;
                    }
                }
            }
        }
    }
}

/// Exhaustively checks efficiency on every nonempty coalition and monotonicity
/// on every covering pair `S ⊂ S ∪ {j}`; general pairs follow by chaining.
pub fn verify_pmas(game: &VertexCoverGame, scheme: &AllocationScheme) -> Result<Verdict<PmasViolation>> {
    verify_pmas_with_cap(game, scheme, DEFAULT_EXHAUSTIVE_CAP)
}

pub fn verify_pmas_with_cap(
    game: &VertexCoverGame,
    scheme: &AllocationScheme,
    cap: usize,
) -> Result<Verdict<PmasViolation>> {
    let dense = Dense::build(game, scheme, cap)?;
    let mut first = None;
    dense.scan(|v| {
        first = Some(v);
        false
    });
    Ok(first.map_or(Verdict::Holds, Verdict::Fails))
}

/// Every violated constraint, in the order `verify_pmas` would meet them.
pub fn pmas_violations(game: &VertexCoverGame, scheme: &AllocationScheme, cap: usize) -> Result<Vec<PmasViolation>> {
    let dense = Dense::build(game, scheme, cap)?;
    let mut all = Vec::new();
    dense.scan(|v| {
        all.push(v);
        true
    });
    Ok(all)
}
