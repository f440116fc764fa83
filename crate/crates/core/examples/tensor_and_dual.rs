//! Tensor products and duals: τ adds, ν⁺ is subadditive, and `C ⊗ C*` has ν⁺ = 0.

use formal_knot::{catalog, complex::serialize, invariants as inv};

fn main() -> formal_knot::Result<()> {
    let t = catalog::trefoil();
    let tt = t.tensor(&t);
    println!("T(2,3) ⊗ T(2,3): {} generators", tt.rank());
    println!("  tau = {} (= 1 + 1)", inv::tau(&tt)?);
    println!("  nu+ = {} (<= 1 + 1)", inv::nu_plus(&tt)?);

    let c3 = catalog::cn(3)?;
    let cc = c3.tensor(&c3.dual());
    println!("C^3 ⊗ C^3*: {} generators, nu+ = {}", cc.rank(), inv::nu_plus(&cc)?);

    println!("\ndual of the mirror trefoil:\n{}", serialize(&catalog::torus_staircase(1, true)?.dual()));
    Ok(())
}
