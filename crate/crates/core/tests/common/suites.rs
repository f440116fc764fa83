//! Property suites over catalog complexes and their tensor products. Each
//! suite asserts as it goes and returns how many assertions it made.

use formal_knot::complex::FormalComplex;
use formal_knot::gf2::rank;
use formal_knot::invariants::{self as inv, DEFAULT_MAX_ENUM};
use formal_knot::{catalog, Point, Rational};

use super::{complexes, sample_ts};

pub struct Count(pub usize);

impl Count {
    fn check(&mut self, ok: bool, what: impl FnOnce() -> String) {
        assert!(ok, "{}", what());
        self.0 += 1;
    }
}

fn name(c: &FormalComplex) -> String {
    c.name().unwrap_or("?").to_string()
}

/// Catalog complexes, their duals and every pairwise tensor product.
pub fn with_tensors() -> Vec<FormalComplex> {
    let base = complexes();
    let mut out = base.clone();
    for (a, x) in base.iter().enumerate() {
        for y in &base[a..] {
            out.push(x.tensor(y));
        }
    }
    out
}

fn pairs() -> Vec<(FormalComplex, FormalComplex)> {
    let base = complexes();
    let mut out = Vec::new();
    for (a, x) in base.iter().enumerate() {
        for y in &base[a..] {
            out.push((x.clone(), y.clone()));
        }
    }
    out
}

pub fn subadditivity() -> usize {
    let mut n = Count(0);
    let mut all = complexes();
    all.extend(complexes().iter().map(|c| c.dual()));
    for x in &all {
        for y in &all {
            let lhs = inv::nu_plus(&x.tensor(y)).unwrap();
            let rhs = inv::nu_plus(x).unwrap() + inv::nu_plus(y).unwrap();
            n.check(lhs <= rhs, || format!("ν⁺({} ⊗ {}) = {lhs} > {rhs}", name(x), name(y)));
        }
    }
    n.0
}

pub fn additivity() -> usize {
    let mut n = Count(0);
    for (x, y) in pairs() {
        let t = x.tensor(&y);
        let (a, b, c) = (inv::tau(&x).unwrap(), inv::tau(&y).unwrap(), inv::tau(&t).unwrap());
        n.check(c == a + b, || format!("τ({} ⊗ {}) = {c} != {a} + {b}", name(&x), name(&y)));
        let (fx, fy, ft) = (inv::upsilon(&x).unwrap(), inv::upsilon(&y).unwrap(), inv::upsilon(&t).unwrap());
        for s in sample_ts() {
            n.check(ft.eval(s) == fx.eval(s) + fy.eval(s), || {
                format!("Υ not additive on {} ⊗ {} at t={s}", name(&x), name(&y))
            });
        }
        let va: Vec<i64> = (0..=2).map(|k| inv::v_k(&x, k).unwrap()).collect();
        let vb: Vec<i64> = (0..=2).map(|k| inv::v_k(&y, k).unwrap()).collect();
        for (k, a) in va.iter().enumerate() {
            for (l, b) in vb.iter().enumerate().take(3 - k) {
                let v = inv::v_k(&t, (k + l) as i64).unwrap();
                n.check(v <= a + b, || format!("V_(k+l) of {} ⊗ {}", name(&x), name(&y)));
            }
        }
    }
    n.0
}

pub fn ladders() -> usize {
    let mut n = Count(0);
    for c in with_tensors() {
        let nu = inv::nu_plus(&c).unwrap();
        let tau = inv::tau(&c).unwrap();
        n.check(tau <= nu, || format!("τ > ν⁺ on {}", name(&c)));
        let v: Vec<i64> = (0..=nu + 1).map(|k| inv::v_k(&c, k).unwrap()).collect();
        for k in 0..=nu as usize {
            n.check(v[k] - 1 <= v[k + 1] && v[k + 1] <= v[k], || format!("V ladder on {} at k={k}", name(&c)));
            n.check(v[k] + k as i64 <= nu, || format!("V_k + k > ν⁺ on {} at k={k}", name(&c)));
        }
        n.check(v[nu as usize] == 0, || format!("V_ν⁺ != 0 on {}", name(&c)));
    }
    n.0
}

/// Complexes whose homological generators are few enough to list.
pub fn enumerable() -> Vec<FormalComplex> {
    with_tensors()
        .into_iter()
        .filter(|c| rank(&c.boundary_matrix(1)) <= 12)
        .collect()
}

pub fn g0_formulas() -> usize {
    let mut n = Count(0);
    for c in enumerable() {
        let g = inv::g0(&c, DEFAULT_MAX_ENUM).unwrap();
        n.check(inv::nu_plus_from_g0(&g) == Some(inv::nu_plus(&c).unwrap()), || format!("ν⁺ via G₀ on {}", name(&c)));
        n.check(inv::tau_from_g0(&g) == Some(inv::tau(&c).unwrap()), || format!("τ via G₀ on {}", name(&c)));
        for k in 0..=3 {
            n.check(inv::v_k_from_g0(&g, k) == Some(inv::v_k(&c, k).unwrap()), || {
                format!("V_{k} via G₀ on {}", name(&c))
            });
        }
        for t in sample_ts() {
            n.check(inv::upsilon_level_from_g0(&g, t) == Some(inv::upsilon_level(&c, t).unwrap()), || {
                format!("υ({t}) via G₀ on {}", name(&c))
            });
        }
        // Every generator region contains a member of G₀.
        for z in inv::hom_generators(&c, DEFAULT_MAX_ENUM).unwrap() {
            n.check(g.iter().any(|r| r.is_subset(&z.region)), || format!("G₀ misses {} on {}", z.region, name(&c)));
        }
    }
    n.0
}

pub fn stabilizer_shifts() -> [Point; 4] {
    [Point::new(0, 0), Point::new(1, 1), Point::new(-1, -1), Point::new(2, -1)]
}

pub fn stabilizers() -> usize {
    let mut n = Count(0);
    for c in complexes() {
        let g = inv::g0(&c, DEFAULT_MAX_ENUM).unwrap();
        let f = inv::upsilon(&c).unwrap();
        for shift in stabilizer_shifts() {
            let a = catalog::square_stabilizer(shift).unwrap();
            n.check(formal_knot::complex::is_stabilizer(&a), || format!("square at {shift} is not a stabilizer"));
            let s = c.direct_sum(&a);
            let what = || format!("{} ⊕ square{shift}", name(&c));
            n.check(inv::nu_plus(&s).unwrap() == inv::nu_plus(&c).unwrap(), what);
            n.check(inv::tau(&s).unwrap() == inv::tau(&c).unwrap(), what);
            for k in 0..=2 {
                n.check(inv::v_k(&s, k).unwrap() == inv::v_k(&c, k).unwrap(), what);
            }
            n.check(inv::upsilon(&s).unwrap() == f, what);
            n.check(inv::g0(&s, DEFAULT_MAX_ENUM).unwrap() == g, what);
        }
    }
    n.0
}

pub fn duality() -> usize {
    let mut n = Count(0);
    for c in with_tensors() {
        let d = c.dual();
        n.check(inv::tau(&d).unwrap() == -inv::tau(&c).unwrap(), || format!("τ(C*) on {}", name(&c)));
        n.check(inv::genus(&d) == inv::genus(&c), || format!("genus(C*) on {}", name(&c)));
        let (f, g) = (inv::upsilon(&c).unwrap(), inv::upsilon(&d).unwrap());
        for t in sample_ts() {
            n.check(g.eval(t) == -f.eval(t), || format!("Υ_(C*)({t}) on {}", name(&c)));
        }
        n.check(f.eval(Rational::from_integer(0)) == Rational::from_integer(0), || format!("Υ(0) on {}", name(&c)));
        let slope = f.slope_right(Rational::from_integer(0));
        n.check(slope == Rational::from_integer(-inv::tau(&c).unwrap()), || format!("Υ'(0) on {}", name(&c)));
    }
    for c in complexes() {
        let cc = c.tensor(&c.dual());
        n.check(inv::nu_plus(&cc).unwrap() == 0, || format!("ν⁺(C ⊗ C*) on {}", name(&c)));
        n.check(inv::nu_plus(&c.dual().tensor(&c)).unwrap() == 0, || format!("ν⁺(C* ⊗ C) on {}", name(&c)));
    }
    n.0
}

pub fn slice_identities() -> usize {
    let mut n = Count(0);
    let quads: Vec<Point> = (-2..=2).flat_map(|i| (-2..=2).map(move |j| Point::new(i, j))).collect();
    for c in complexes() {
        for gr in -3..=3 {
            for (a, &p) in quads.iter().enumerate().step_by(3) {
                for &q in &quads[a..] {
                    let union = c.region_slice(|x| x.is_below(p) || x.is_below(q), gr);
                    let mut pieces = c.region_slice(|x| x.is_below(p), gr);
                    for e in c.region_slice(|x| x.is_below(q), gr) {
                        if !pieces.contains(&e) {
                            pieces.push(e);
                        }
                    }
                    pieces.sort_by_key(|e| (e.gen, e.upower));
                    n.check(union == pieces, || format!("slice of a union on {}", name(&c)));
                }
            }
        }
        let g = inv::genus(&c);
        for k in -3..=3 {
            for gr in -6..=6 {
                let half = c.region_slice(|x| x.i <= k, gr);
                let quad = c.region_slice(|x| x.is_below(Point::new(k, g + k)), gr);
                n.check(half == quad, || format!("{{i <= {k}}} slice on {}", name(&c)));
            }
        }
    }
    n.0
}
