//! Convex hulls against a brute-force supporting-hyperplane enumeration.

use std::collections::BTreeSet;

use num_traits::{Signed, Zero};
use polyflag::constructions::{cross_polytope, cube, cyclic4};
use polyflag::geometry::{
    affine_rank, convex_hull, cross_points, cube_points, moment_curve_points, verify_realization,
    PointSet,
};
use polyflag::lattice::are_isomorphic;
use polyflag::Rational;
use proptest::prelude::*;

fn det(mut m: Vec<Vec<Rational>>) -> Rational {
    let n = m.len();
    let mut sign = Rational::from_integer(1.into());
    for c in 0..n {
        let Some(p) = (c..n).find(|&i| !m[i][c].is_zero()) else {
            return Rational::zero();
        };
        if p != c {
            m.swap(p, c);
            sign = -sign;
        }
        for i in c + 1..n {
            let f = &m[i][c] / &m[c][c];
            for k in c..n {
                let t = &f * &m[c][k];
                m[i][k] -= t;
            }
        }
    }
    (0..n).fold(sign, |acc, i| acc * &m[i][i])
}

/// Orientation of `p` against the hyperplane through `base`.
fn side(ps: &PointSet, base: &[usize], p: usize) -> Rational {
    let o = &ps.points[base[0]];
    let mut rows: Vec<Vec<Rational>> = base[1..]
        .iter()
        .map(|&i| ps.points[i].iter().zip(o).map(|(a, b)| a - b).collect())
        .collect();
    rows.push(ps.points[p].iter().zip(o).map(|(a, b)| a - b).collect());
    det(rows)
}

fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    if k == 0 {
        return vec![vec![]];
    }
    if n < k {
        return vec![];
    }
    let mut out = subsets(n - 1, k);
    for mut s in subsets(n - 1, k - 1) {
        s.push(n - 1);
        out.push(s);
    }
    out
}

/// Facets as sets of point indices: every affinely independent d-subset
/// whose hyperplane has all points weakly on one side, together with all
/// points on that hyperplane. Only extreme points are kept.
fn brute_facets(ps: &PointSet) -> BTreeSet<Vec<usize>> {
    let d = ps.dim;
    let n = ps.len();
    let mut facets = BTreeSet::new();
    for base in subsets(n, d) {
        let refs: Vec<_> = base.iter().map(|&i| &ps.points[i]).collect();
        if affine_rank(&refs) != d - 1 {
            continue;
        }
        let s: Vec<Rational> = (0..n).map(|p| side(ps, &base, p)).collect();
        let pos = s.iter().any(|x| x.is_positive());
        let neg = s.iter().any(|x| x.is_negative());
        if pos && neg {
            continue;
        }
        let on: Vec<usize> = (0..n).filter(|&p| s[p].is_zero()).collect();
        facets.insert(on);
    }
    // drop points that are not vertices: a point is a vertex iff it is the
    // only point in the intersection of the facets containing it
    let vertex = |p: usize| {
        let mut common: Option<BTreeSet<usize>> = None;
        for f in facets.iter().filter(|f| f.contains(&p)) {
            let s: BTreeSet<usize> = f.iter().copied().collect();
            common = Some(match common {
                None => s,
                Some(c) => c.intersection(&s).copied().collect(),
            });
        }
        common.is_some_and(|c| c.iter().all(|&q| ps.points[q] == ps.points[p]) && c.iter().min() == Some(&p))
    };
    let keep: BTreeSet<usize> = (0..n).filter(|&p| vertex(p)).collect();
    facets
        .into_iter()
        .map(|f| f.into_iter().filter(|p| keep.contains(p)).collect())
        .collect()
}

fn hull_facets(ps: &PointSet) -> BTreeSet<Vec<usize>> {
    convex_hull(ps).unwrap().facets.into_iter().collect()
}

#[test]
fn standard_point_sets() {
    let sets = [
        cube_points(3).unwrap(),
        cube_points(4).unwrap(),
        cross_points(4, 1).unwrap(),
        moment_curve_points(7).unwrap(),
        cube_points(4).unwrap().union(&cross_points(4, 2).unwrap()).unwrap(),
    ];
    for ps in &sets {
        assert_eq!(hull_facets(ps), brute_facets(ps));
    }
}

#[test]
fn realizations() {
    assert!(verify_realization(&cube(4).unwrap(), &cube_points(4).unwrap()).unwrap());
    assert!(verify_realization(&cross_polytope(4).unwrap(), &cross_points(4, 1).unwrap()).unwrap());
    assert!(verify_realization(&cyclic4(9).unwrap(), &moment_curve_points(9).unwrap()).unwrap());
    assert!(!verify_realization(&cross_polytope(4).unwrap(), &cube_points(4).unwrap()).unwrap());
}

#[test]
fn cyclic_hulls() {
    for n in 5..=10 {
        let h = convex_hull(&moment_curve_points(n).unwrap()).unwrap();
        assert_eq!(h.facets.len(), n * (n - 3) / 2);
        assert!(are_isomorphic(&h.lattice().unwrap(), &cyclic4(n).unwrap()));
    }
}

fn point_set(dim: usize, coords: Vec<Vec<i64>>) -> Option<PointSet> {
    let ps = PointSet::from_ints(dim, &coords).ok()?;
    let refs: Vec<_> = ps.points.iter().collect();
    (affine_rank(&refs) == dim).then_some(ps)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn random_3d_hull_matches_brute_force(
        coords in prop::collection::vec(prop::collection::vec(-3i64..=3, 3), 5..10)
    ) {
        let Some(ps) = point_set(3, coords) else { return Ok(()); };
        prop_assert_eq!(hull_facets(&ps), brute_facets(&ps));
    }

    #[test]
    fn random_4d_hull_matches_brute_force(
        coords in prop::collection::vec(prop::collection::vec(-2i64..=2, 4), 6..10)
    ) {
        let Some(ps) = point_set(4, coords) else { return Ok(()); };
        prop_assert_eq!(hull_facets(&ps), brute_facets(&ps));
    }

    #[test]
    fn hull_ignores_insertion_order(
        coords in prop::collection::vec(prop::collection::vec(-3i64..=3, 3), 5..10),
        seed in any::<u64>(),
    ) {
        let Some(ps) = point_set(3, coords.clone()) else { return Ok(()); };
        let n = coords.len();
        let mut perm: Vec<usize> = (0..n).collect();
        let mut s = seed;
        for i in (1..n).rev() {
            s = s.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            perm.swap(i, (s >> 33) as usize % (i + 1));
        }
        let shuffled: Vec<Vec<i64>> = perm.iter().map(|&i| coords[i].clone()).collect();
        let qs = PointSet::from_ints(3, &shuffled).unwrap();
        let a = convex_hull(&ps).unwrap().lattice().unwrap();
        let b = convex_hull(&qs).unwrap().lattice().unwrap();
        prop_assert!(are_isomorphic(&a, &b));
        let back: BTreeSet<Vec<usize>> = convex_hull(&qs).unwrap().facets.iter()
            .map(|f| { let mut g: Vec<usize> = f.iter().map(|&i| perm[i]).collect(); g.sort(); g })
            .collect();
        // duplicates may be represented by a different copy
        if coords.iter().collect::<BTreeSet<_>>().len() == n {
            prop_assert_eq!(back, hull_facets(&ps));
        }
    }
}
