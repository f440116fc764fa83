//! Acyclic summands change nothing: invariants of C ⊕ square equal those of C.

use formal_knot::complex::{is_stabilizer, validate};
use formal_knot::invariants::{self as inv, DEFAULT_MAX_ENUM};
use formal_knot::region::format_region_set;
use formal_knot::{catalog, Point};

fn main() -> formal_knot::Result<()> {
    let c = catalog::cn(2)?;
    for shift in [Point::new(0, 0), Point::new(2, 2), Point::new(-1, -1)] {
        let sq = catalog::square_stabilizer(shift)?;
        let sum = c.direct_sum(&sq);
        println!(
            "square at {shift}: stabilizer {}, sum valid {}, nu+ {} -> {}, G0 {} -> {}",
            is_stabilizer(&sq),
            validate(&sum).is_valid(),
            inv::nu_plus(&c)?,
            inv::nu_plus(&sum)?,
            format_region_set(&inv::g0(&c, DEFAULT_MAX_ENUM)?),
            format_region_set(&inv::g0(&sum, DEFAULT_MAX_ENUM)?),
        );
    }
    let sq = catalog::square_stabilizer(Point::new(0, 0))?;
    println!("square ⊗ square is a stabilizer: {}", is_stabilizer(&sq.tensor(&sq)));
    println!("unknot is a stabilizer: {}", is_stabilizer(&catalog::unknot()));
    Ok(())
}
