#![allow(dead_code)]

use polyflag::constructions::{
    cross_polytope, cube, cyclic4, e_construct, polygon, product, pyramid, simplex,
};
use polyflag::geometry::{convex_hull, cross_points, cube_points};
use polyflag::lattice::dual;
use polyflag::FaceLattice;

/// Cube points `{±1}⁴` together with `±2 e_i`: the 24-cell.
pub fn cell24() -> FaceLattice {
    let ps = cube_points(4).unwrap().union(&cross_points(4, 2).unwrap()).unwrap();
    convex_hull(&ps).unwrap().lattice().unwrap()
}

/// Boundary lattices of 4-polytopes used across the integration tests.
pub fn corpus4() -> Vec<(String, FaceLattice)> {
    let c = |n| polygon(n).unwrap();
    let mut out = vec![
        ("simplex(4)".to_string(), simplex(4).unwrap()),
        ("cube(4)".into(), cube(4).unwrap()),
        ("cross(4)".into(), cross_polytope(4).unwrap()),
        ("C3xC3".into(), product(&c(3), &c(3)).unwrap()),
        ("C5xC6".into(), product(&c(5), &c(6)).unwrap()),
        ("pyramid(cube(3))".into(), pyramid(&cube(3).unwrap()).unwrap()),
        ("pyramid(cross(3))".into(), pyramid(&cross_polytope(3).unwrap()).unwrap()),
        ("E(cube(4))".into(), e_construct(&cube(4).unwrap()).unwrap()),
        ("E(C5xC5)".into(), e_construct(&product(&c(5), &c(5)).unwrap()).unwrap()),
        ("24-cell".into(), cell24()),
        ("dual(cyclic4(7))".into(), dual(&cyclic4(7).unwrap()).unwrap()),
    ];
    for n in 6..=10 {
        out.push((format!("cyclic4({n})"), cyclic4(n).unwrap()));
    }
    out
}

/// Boundary lattices of 3-polytopes.
pub fn corpus3() -> Vec<(String, FaceLattice)> {
    vec![
        ("simplex(3)".to_string(), simplex(3).unwrap()),
        ("cube(3)".into(), cube(3).unwrap()),
        ("cross(3)".into(), cross_polytope(3).unwrap()),
        ("pyramid(C5)".into(), pyramid(&polygon(5).unwrap()).unwrap()),
        ("prism(C7)".into(), product(&polygon(7).unwrap(), &simplex(1).unwrap()).unwrap()),
    ]
}

/// Walks every chain bottom < x1 < ... < top and tallies it under the set
/// of ranks it uses. Rank `r` element counts as dimension `r - 1`.
pub fn enumerate_chains(l: &FaceLattice) -> Vec<u64> {
    let d = l.length() - 1;
    let mut counts = vec![0u64; 1 << d];
    let mut stack = vec![(l.bottom(), 0usize)];
    while let Some((x, mask)) = stack.pop() {
        if x != l.bottom() && x != l.top() {
            counts[mask] += 1;
        }
        for y in 0..l.len() {
            if y != x && y != l.top() && l.leq(x, y) {
                stack.push((y, mask | 1 << (l.rank(y) - 1)));
            }
        }
    }
    counts[0] = 1;
    counts
}
