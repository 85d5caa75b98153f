//! Decide population monotonicity for a few graphs and print the taxonomy or witness.
//!
//! cargo run --example recognize

use vcgame::{classify_components, recognize_population_monotonic, Graph, Verdict};

fn main() -> vcgame::Result<()> {
    let graphs = [
        ("path on four vertices", "a b\nb c\nc d"),
        ("star plus pisces", "h x\nh y\nu l1\nu v\nv r1\nv r2"),
        ("triangle", "a b\nb c\nc a"),
        ("four-cycle", "a b\nb c\nc d\nd a"),
        ("path on five vertices", "a b\nb c\nc d\nd e"),
    ];
    for (name, text) in graphs {
        let g = Graph::parse(text)?;
        match recognize_population_monotonic(&g) {
            Verdict::Fails(w) => println!("{name}: no PMAS, contains {w}"),
            Verdict::Holds => {
                let c = classify_components(&g)?;
                println!("{name}: PMAS exists");
                for comp in &c.components {
                    let centers: Vec<&str> = comp.centers.iter().map(|&v| g.label(v)).collect();
                    print!("  {} on edges {{{}}}, centers {:?}", comp.kind, comp.edges, centers);
                    match comp.free_rider {
                        Some(e) => println!(", free rider {}", g.edge_label(e)),
                        None => println!(),
                    }
                }
            }
        }
    }
    Ok(())
}
