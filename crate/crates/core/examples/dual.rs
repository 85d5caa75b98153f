//! Check that PMAS coalition vectors are optimal dual solutions of the cover LP.
//!
//! cargo run --example dual

use vcgame::{
    check_dual_feasible, check_dual_optimal, check_pi_star, classify_components, construct_pmas, Coalition,
    CostAllocation, Graph, Rational, VertexCoverGame,
};

fn main() -> vcgame::Result<()> {
    let g = Graph::parse("a b\nb c\nc d")?;
    let cover = classify_components(&g)?.cover;
    let game = VertexCoverGame::new(g.clone());
    let scheme = construct_pmas(&g)?;
    for mask in 1..1u64 << g.edge_count() {
        let s = Coalition::from_mask(mask);
        let a = scheme.allocation(&s)?;
        println!(
            "{{{s}}}: feasible {}, optimal {}, on optimal face {}",
            check_dual_feasible(&g, &s, &a),
            check_dual_optimal(&game, &s, &a)?,
            check_pi_star(&g, &s, &a, &cover)
        );
    }
    // optimal for {1,2}, but charges the accompanied free rider
    let s: Coalition = "1,2".parse()?;
    let x = CostAllocation::new(s.clone(), vec![Rational::from_integer(1), Rational::from_integer(0)])?;
    println!(
        "free rider pays 1 in {{1,2}}: optimal {}, on optimal face {}",
        check_dual_optimal(&game, &s, &x)?,
        check_pi_star(&g, &s, &x, &cover)
    );
    Ok(())
}
