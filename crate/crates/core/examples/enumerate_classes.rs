//! List the unipotent classes of a group with their weighted Dynkin diagrams,
//! Dynkin indices, and quite-even flags.
//!
//! Usage: `cargo run --example enumerate_classes [group]`

use sl2_quotients::invariants::quite_even_class;
use sl2_quotients::sl2restrict::dynkin_index_with;
use sl2_quotients::{build_root_system, enumerate_classes, GroupType};

fn main() -> sl2_quotients::Result<()> {
    let name = std::env::args().nth(1).unwrap_or_else(|| "D4".into());
    let g = GroupType::parse(&name)?;
    let rs = build_root_system(g)?;
    let classes = enumerate_classes(g, true)?;
    println!("{} classes of {g} (including the trivial one):\n", classes.len());
    println!("{:<16} {:<18} {:>5}  {}", "class", "diagram", "index", "quite even");
    for c in &classes {
        println!(
            "{:<16} {:<18} {:>5}  {}",
            c.name(),
            c.diagram().to_string(),
            dynkin_index_with(&rs, c)?,
            if quite_even_class(&rs, c)? { "Y" } else { "N" },
        );
    }
    Ok(())
}
