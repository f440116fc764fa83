//! The ν⁺-order on a handful of complexes.

use formal_knot::{catalog, invariants as inv};

fn main() -> formal_knot::Result<()> {
    let mut cs = vec![
        catalog::unknot(),
        catalog::figure_eight_model(),
        catalog::torus_staircase(1, true)?,
        catalog::trefoil(),
        catalog::torus_staircase(2, false)?,
    ];
    for n in 2..=4 {
        cs.push(catalog::cn(n)?);
    }
    let names: Vec<&str> = cs.iter().map(|c| c.name().unwrap_or("?")).collect();
    print!("{:<12}", "");
    for n in &names {
        print!("{n:>13}");
    }
    println!();
    for (a, x) in cs.iter().enumerate() {
        print!("{:<12}", names[a]);
        for y in &cs {
            print!("{:>13}", inv::compare(x, y)?.to_string());
        }
        println!();
    }
    Ok(())
}
