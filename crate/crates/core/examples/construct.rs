//! Build the equal-split PMAS of a pisces and print it coalition by coalition.
//!
//! cargo run --example construct

use vcgame::{construct_pmas, format_rational, Coalition, Graph};

fn main() -> vcgame::Result<()> {
    // bases b and c, free rider b-c
    let g = Graph::parse("a b\nb c\nc d\nc e")?;
    let scheme = construct_pmas(&g)?;
    for mask in 1..1u64 << g.edge_count() {
        let s = Coalition::from_mask(mask);
        let a = scheme.allocation(&s)?;
        let shares: Vec<String> = a
            .iter()
            .map(|(e, v)| format!("{}={}", g.edge_label(e), format_rational(&v)))
            .collect();
        println!("{{{s}}}: {}", shares.join(" "));
    }
    Ok(())
}
