//! The LP dual of fractional vertex cover on `G[S]`:
//! maximize `Σ x_i` subject to `Σ_{i∈δ_S(v)} x_i ≤ 1` and `x ≥ 0`.

use num_traits::{One, Zero};

use crate::allocation::{CostAllocation, Rational};
use crate::coalition::Coalition;
use crate::error::{Error, Result};
use crate::game::VertexCoverGame;
use crate::graph::{is_bipartite_within, Graph};

use super::classify::CoverSystem;

fn load(g: &Graph, x: &CostAllocation, v: usize) -> Rational {
    x.sum_over(g.incident(v).iter().copied())
}

/// `x` lies in the dual polyhedron of `G[S]`.
pub fn check_dual_feasible(g: &Graph, s: &Coalition, x: &CostAllocation) -> bool {
    if x.coalition() != s || g.view(s).is_err() || !x.is_nonnegative() {
        return false;
    }
    let view = g.view(s).expect("checked above");
    let within = view.vertices().all(|v| load(g, x, v) <= Rational::one());
    within
}

/// Feasible with objective `γ(S)`. On bipartite `G[S]` the dual optimum equals
/// `τ(G[S])`, so this is dual optimality.
pub fn check_dual_optimal(game: &VertexCoverGame, s: &Coalition, x: &CostAllocation) -> Result<bool> {
    if !is_bipartite_within(game.graph(), s) {
        return Err(Error::Unsupported(format!(
            "G[{{{s}}}] is not bipartite; its dual optimum may differ from the cover number"
        )));
    }
    Ok(check_dual_feasible(game.graph(), s, x) && x.sum() == Rational::from_integer(game.gamma(s)? as i64))
}

/// Membership in the optimal face that is tight at every vertex of `C*_S` and
/// zero on every free rider that shares an endpoint with another edge of `S`.
pub fn check_pi_star(g: &Graph, s: &Coalition, x: &CostAllocation, cover: &CoverSystem) -> bool {
    if !check_dual_feasible(g, s, x) {
        return false;
    }
    let tight = cover.select(g, s).into_iter().all(|v| load(g, x, v) == Rational::one());
    let riders_free = cover
        .free_riders()
        .filter(|&e| s.contains(e) && !cover.is_lone_free_rider(g, s, e))
        .all(|e| x.get(e).is_some_and(|v| v.is_zero()));
    tight && riders_free
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::pmas::{classify_components, construct_pmas};

    fn r(p: i64, q: i64) -> Rational {
        Rational::new(p, q)
    }

    fn x(pairs: &[(usize, Rational)]) -> CostAllocation {
        CostAllocation::from_pairs(pairs.iter().copied())
    }

    #[test]
    fn feasibility_examples() {
        let g = Graph::parse("c a\nc b").unwrap();
        let all = g.players();
        assert!(!check_dual_feasible(&g, &all, &x(&[(0, r(1, 1)), (1, r(1, 1))])));
        assert!(check_dual_feasible(&g, &all, &x(&[(0, r(1, 2)), (1, r(1, 2))])));
        assert!(!check_dual_feasible(&g, &all, &x(&[(0, r(-1, 2)), (1, r(1, 2))])));
        assert!(!check_dual_feasible(&g, &all, &x(&[(0, r(1, 2))])));
    }

    #[test]
    fn optimality_examples() {
        let game = VertexCoverGame::new(Graph::parse("h a\nh b\nh c").unwrap());
        let all = game.players();
        assert!(check_dual_optimal(&game, &all, &x(&[(0, r(1, 3)), (1, r(1, 3)), (2, r(1, 3))])).unwrap());
        assert!(!check_dual_optimal(&game, &all, &x(&[(0, r(1, 3)), (1, r(1, 3)), (2, r(0, 1))])).unwrap());
        let k3 = VertexCoverGame::new(Graph::parse("a b\nb c\nc a").unwrap());
        assert!(check_dual_optimal(&k3, &k3.players(), &x(&[(0, r(1, 2)), (1, r(1, 2)), (2, r(1, 2))])).is_err());
    }

    #[test]
    fn pi_star_examples() {
        let p4 = Graph::parse("a b\nb c\nc d").unwrap();
        let cover = classify_components(&p4).unwrap().cover;
        let all = p4.players();
        let a = construct_pmas(&p4).unwrap().allocation(&all).unwrap();
        assert!(check_pi_star(&p4, &all, &a, &cover));
        let halves = x(&[(0, r(1, 2)), (1, r(1, 2)), (2, r(1, 2))]);
        assert!(!check_pi_star(&p4, &all, &halves, &cover));
        let lone = Coalition::singleton(1);
        assert!(check_pi_star(&p4, &lone, &x(&[(1, r(1, 1))]), &cover));
        // feasible and optimal for DP(S) but not tight at C*_S = {b, c}
        let game = VertexCoverGame::new(p4.clone());
        let skew = x(&[(0, r(1, 1)), (1, r(0, 1)), (2, r(1, 2))]);
        assert!(!check_dual_optimal(&game, &all, &skew).unwrap());
        assert!(!check_pi_star(&p4, &all, &skew, &cover));
    }
}
