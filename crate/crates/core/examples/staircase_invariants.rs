//! ν⁺, τ, V_k and genus of the torus-knot staircases and their mirrors.

use formal_knot::{catalog, invariants as inv};

fn main() -> formal_knot::Result<()> {
    println!("{:<14} {:>4} {:>4} {:>6} {:>6}  V_0..V_3", "complex", "nu+", "tau", "genus", "nu+*");
    for g in 1..=4 {
        for mirror in [false, true] {
            let c = catalog::torus_staircase(g, mirror)?;
            let vs: Vec<String> = (0..=3).map(|k| inv::v_k(&c, k).map(|v| v.to_string())).collect::<Result<_, _>>()?;
            println!(
                "{:<14} {:>4} {:>4} {:>6} {:>6}  {}",
                c.name().unwrap_or("?"),
                inv::nu_plus(&c)?,
                inv::tau(&c)?,
                inv::genus(&c),
                inv::nu_plus_dual(&c)?,
                vs.join(" ")
            );
        }
    }
    Ok(())
}
