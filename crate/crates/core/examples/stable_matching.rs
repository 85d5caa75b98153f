//! Turn a preference system into an integral PMAS via stable matchings, and back.
//!
//! cargo run --example stable_matching

use std::sync::Arc;

use vcgame::{
    gale_shapley, preferences_from_scheme, scheme_from_preferences, verify_pmas, Graph, PreferenceSystem,
    VertexCoverGame,
};

fn main() -> vcgame::Result<()> {
    let g = Arc::new(Graph::parse("u l1\nu l2\nu v\nv r1\nv r2")?);
    // the free rider u-v (edge 2) ranks last at both bases
    let ps = PreferenceSystem::from_labels(g.clone(), [("u", vec![1, 0, 2]), ("v", vec![3, 4, 2])])?;
    let m = gale_shapley(&ps, &g.players())?;
    println!("stable matching of the grand coalition: {{{}}}", m.edges());

    let scheme = scheme_from_preferences(&ps)?;
    let game = VertexCoverGame::new((*g).clone());
    println!("scheme is a PMAS: {}", verify_pmas(&game, &scheme)?.holds());
    for s in ["0,1", "0,2", "2,3", "0,1,2,3,4"] {
        let a = scheme.allocation(&s.parse()?)?;
        println!("  {{{s}}} -> {}", a.to_json_value());
    }
    let back = preferences_from_scheme(&game, &scheme)?;
    println!("recovered preferences: {}", back.to_json());
    Ok(())
}
