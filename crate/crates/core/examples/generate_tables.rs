//! Regenerates the bundled exceptional orbit tables (`crates/core/data/*.json`)
//! from Levi subalgebra data. This is how the shipped tables were produced;
//! the test suite compares the bundled files against a fresh run.
//!
//! Usage: `cargo run --example generate_tables [output-dir]`

use std::path::PathBuf;

use sl2_quotients::orbits::exceptional::table_to_json;
use sl2_quotients::orbits::generation::generate_table;
use sl2_quotients::root_data::GroupType;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let dir: PathBuf = std::env::args()
        .nth(1)
        .map(Into::into)
        .unwrap_or_else(|| PathBuf::from("crates/core/data"));
    std::fs::create_dir_all(&dir)?;
    for name in ["G2", "F4", "E6", "E7", "E8"] {
        let table = generate_table(GroupType::parse(name)?)?;
        let path = dir.join(format!("{}.json", name.to_lowercase()));
        std::fs::write(&path, table_to_json(&table) + "\n")?;
        println!("{}: {} classes -> {}", name, table.entries().len(), path.display());
    }
    Ok(())
}
