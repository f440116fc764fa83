//! d-invariant changes of p/q surgeries, from the V_k.

use formal_knot::{catalog, invariants as inv};

fn main() -> formal_knot::Result<()> {
    for c in [catalog::trefoil(), catalog::torus_staircase(2, false)?, catalog::cn(3)?] {
        println!("{}: V_0..V_3 = {:?}", c.name().unwrap_or("?"), (0..=3).map(|k| inv::v_k(&c, k)).collect::<Result<Vec<_>, _>>()?);
        for (p, q) in [(1, 1), (2, 1), (3, 1), (5, 2), (7, 3)] {
            let deltas = (0..p).map(|i| inv::d_surgery_delta(&c, p, q, i)).collect::<Result<Vec<_>, _>>()?;
            println!("  p/q = {p}/{q}: {deltas:?}");
        }
    }
    Ok(())
}
