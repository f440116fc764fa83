//! Υ as an exact piecewise-linear function, and Υ² at the trefoil's kink.

use formal_knot::invariants::{self as inv, DEFAULT_MAX_ENUM};
use formal_knot::{catalog, Rational};

fn main() -> formal_knot::Result<()> {
    let mut cs = vec![catalog::unknot(), catalog::trefoil(), catalog::figure_eight_model()];
    for g in 2..=3 {
        cs.push(catalog::torus_staircase(g, false)?);
    }
    cs.push(catalog::cn(2)?);
    let t = catalog::trefoil();
    cs.push(t.tensor(&catalog::torus_staircase(2, true)?));
    for c in &cs {
        println!("{:<28} {}", c.name().unwrap_or("?"), inv::upsilon(c)?);
    }

    let one = Rational::from_integer(1);
    for s in [Rational::new(1, 2), one, Rational::new(3, 2)] {
        println!("trefoil upsilon2 at t=1, s={s}: {}", inv::upsilon2(&t, one, s, DEFAULT_MAX_ENUM)?);
    }
    let c2 = catalog::cn(2)?;
    println!("C^2 upsilon2 at t=1, s=1: {}", inv::upsilon2(&c2, one, one, DEFAULT_MAX_ENUM)?);
    Ok(())
}
