//! Count and list the integral PMAS-es of a small forest.
//!
//! cargo run --example enumerate

use vcgame::{count_integral_pmas, enumerate_integral_pmas, Graph};

fn main() -> vcgame::Result<()> {
    let g = Graph::parse("h a\nh b\nh c\nu v\nu w\nv x")?;
    println!("integral PMAS count: {}", count_integral_pmas(&g)?);
    let mut stream = enumerate_integral_pmas(&g, 5)?;
    for item in stream.by_ref() {
        let item = item?;
        let grand = item.scheme.allocation(&g.players())?;
        println!("{} -> {}", item.preferences.to_json(), grand.to_json_value());
    }
    if stream.is_truncated() {
        println!("... stopped after {}", stream.emitted());
    }
    Ok(())
}
