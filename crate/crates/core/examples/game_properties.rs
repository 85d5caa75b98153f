//! Matching and cover numbers, balancedness and submodularity for a few games.
//!
//! cargo run --example game_properties

use vcgame::game::is_submodular_graph;
use vcgame::graph::matching_number;
use vcgame::{Graph, VertexCoverGame};

fn main() -> vcgame::Result<()> {
    for (name, text) in [
        ("triangle", "a b\nb c\nc a"),
        ("four-cycle", "a b\nb c\nc d\nd a"),
        ("claw", "h a\nh b\nh c"),
        ("path on four vertices", "a b\nb c\nc d"),
    ] {
        let game = VertexCoverGame::new(Graph::parse(text)?);
        let all = game.players();
        let nu = matching_number(game.graph(), &all)?.len();
        println!(
            "{name}: nu={nu} tau={} balanced={} totally balanced={} submodular={} (exhaustive: {})",
            game.gamma(&all)?,
            game.is_balanced()?,
            game.is_totally_balanced(),
            is_submodular_graph(game.graph()),
            game.is_submodular_game()?.holds()
        );
        if let Ok(x) = game.core_element_from_matching() {
            println!("  core element from a maximum matching: {}", x.to_json_value());
        }
    }
    Ok(())
}
