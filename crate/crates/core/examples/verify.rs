//! Verify a scheme exhaustively, then break one entry and show the reported violation.
//!
//! cargo run --example verify

use vcgame::{construct_pmas, verify_pmas, AllocationScheme, Graph, VertexCoverGame};

fn main() -> vcgame::Result<()> {
    let g = Graph::parse("x 1\nx 2\nx 3\ny 4")?;
    let scheme = construct_pmas(&g)?;
    let game = VertexCoverGame::new(g.clone());
    println!("equal split is a PMAS: {}", verify_pmas(&game, &scheme)?.holds());

    let json = scheme.to_json(16)?;
    // the star's edges now pay 1/3 each in the pair {0,1}
    let tampered = json.replacen("\"0\": \"1/2\"", "\"0\": \"1/3\"", 1);
    let table = AllocationScheme::from_json(&tampered, g.edge_count())?;
    match verify_pmas(&game, &table)?.witness() {
        Some(v) => println!("tampered table rejected: {v}"),
        None => println!("tampered table accepted?"),
    }
    Ok(())
}
