//! The region towers G₀, G₁, ... of the complexes C^n, which tell them apart
//! although they share τ, Υ and genus.

use formal_knot::invariants::{self as inv, DEFAULT_MAX_ENUM};
use formal_knot::{catalog, region::format_region_set};

fn main() -> formal_knot::Result<()> {
    for n in 1..=5 {
        let c = catalog::cn(n)?;
        let tower = inv::g_tower(&c, 10, DEFAULT_MAX_ENUM)?;
        println!("C^{n} (tau = {}, Upsilon = {}):", inv::tau(&c)?, inv::upsilon(&c)?);
        for (k, level) in tower.levels.iter().enumerate() {
            let chains: usize = level.realizers.iter().map(Vec::len).sum();
            println!("  G{k} = {}  ({chains} realizing chains)", format_region_set(&level.regions));
        }
        println!("  stop: {}", tower.stop);
    }
    Ok(())
}
