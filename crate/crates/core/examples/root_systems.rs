//! Build exact root data for a few simple types and print the pieces the
//! rest of the crate is built on: Cartan matrices, positive root counts,
//! fundamental degrees, and representation dimensions.
//!
//! Usage: `cargo run --example root_systems [group ...]`

use sl2_quotients::{build_root_system, GroupType};

fn main() -> sl2_quotients::Result<()> {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let names: Vec<&str> = if args.is_empty() {
        vec!["A2", "B6", "C6", "D4", "G2", "F4", "E6"]
    } else {
        args.iter().map(String::as_str).collect()
    };
    for name in names {
        let g = GroupType::parse(name)?;
        let rs = build_root_system(g)?;
        println!("{g}: dim {} = {} positive roots x2 + rank {}", g.dim(), rs.positive_roots().len(), g.rank());
        println!("  cartan matrix:");
        for row in rs.cartan() {
            println!("    {row:?}");
        }
        println!("  fundamental degrees: {:?}", rs.fundamental_degrees());
        println!("  dual coxeter number: {}", rs.dual_coxeter());
        println!("  fundamental module dimensions: {:?}", rs.fundamental_rep_dims());
        let theta = rs.highest_root();
        println!("  highest root: {theta:?}");
        println!();
    }
    Ok(())
}
