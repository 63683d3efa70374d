use super::*;
use crate::constructions::{cross_polytope, cube, cyclic4, polygon, simplex};
use crate::flag::flag_vector;

fn faces(atom_count: usize, sets: &[&[usize]]) -> Vec<AtomSet> {
    sets.iter()
        .map(|s| atom_set(atom_count, s.iter().copied()))
        .collect()
}

/// Meet by brute force: the greatest common lower bound among all elements.
fn brute_meet(l: &FaceLattice, x: usize, y: usize) -> Option<usize> {
    let lower: Vec<usize> = (0..l.len()).filter(|&z| l.leq(z, x) && l.leq(z, y)).collect();
    lower
        .iter()
        .copied()
        .find(|&m| lower.iter().all(|&z| l.leq(z, m)))
}

fn brute_join(l: &FaceLattice, x: usize, y: usize) -> Option<usize> {
    let upper: Vec<usize> = (0..l.len()).filter(|&z| l.leq(x, z) && l.leq(y, z)).collect();
    upper
        .iter()
        .copied()
        .find(|&m| upper.iter().all(|&z| l.leq(m, z)))
}

fn brute_is_lattice(l: &FaceLattice) -> bool {
    (0..l.len()).all(|x| {
        (0..l.len()).all(|y| brute_meet(l, x, y).is_some() && brute_join(l, x, y).is_some())
    })
}

/// Every interval of length >= 1 has as many even- as odd-rank elements,
/// checked by direct enumeration of the interval.
fn brute_is_eulerian(l: &FaceLattice) -> bool {
    if !l.is_graded() {
        return false;
    }
    for x in 0..l.len() {
        for y in 0..l.len() {
            if x == y || !l.leq(x, y) {
                continue;
            }
            let s: i64 = (0..l.len())
                .filter(|&z| l.leq(x, z) && l.leq(z, y))
                .map(|z| if l.rank(z).is_multiple_of(2) { 1 } else { -1 })
                .sum();
            if s != 0 {
                return false;
            }
        }
    }
    true
}

/// Two squares 0-2-1-4 and 0-3-1-5 sharing the opposite vertices 0 and 1.
/// The two squares meet in {0,1}, which is not a face, so they have two
/// maximal lower bounds {0} and {1} and no meet.
fn glued_squares() -> FaceLattice {
    let edges: &[&[usize]] = &[
        &[0, 2], &[2, 1], &[1, 4], &[4, 0], &[0, 3], &[3, 1], &[1, 5], &[5, 0],
    ];
    let mut fs = faces(6, &[&[0], &[1], &[2], &[3], &[4], &[5]]);
    fs.extend(faces(6, edges));
    fs.extend(faces(6, &[&[0, 1, 2, 4], &[0, 1, 3, 5]]));
    FaceLattice::from_faces(6, fs).unwrap()
}

#[test]
fn triangle_basics() {
    let t = polygon(3).unwrap();
    assert_eq!(t.length(), 3);
    assert_eq!(t.f_vector(), vec![3, 3]);
    assert!(is_lattice(&t) && is_eulerian(&t) && is_connected(&t));
    assert_eq!(
        hierarchy_report(&t, false).classification,
        Classification::ConnectedEulerianLattice
    );
}

#[test]
fn standard_f_vectors() {
    assert_eq!(simplex(4).unwrap().f_vector(), vec![5, 10, 10, 5]);
    assert_eq!(cube(4).unwrap().f_vector(), vec![16, 32, 24, 8]);
    assert_eq!(cross_polytope(4).unwrap().f_vector(), vec![8, 24, 32, 16]);
    assert_eq!(cyclic4(6).unwrap().f_vector(), vec![6, 15, 18, 9]);
}

#[test]
fn glued_squares_is_graded_not_lattice() {
    let l = glued_squares();
    assert!(l.is_graded());
    assert!(!is_lattice(&l));
    assert!(!brute_is_lattice(&l));
    assert_eq!(hierarchy_report(&l, false).classification, Classification::GradedPoset);
}

#[test]
fn glued_triangles_from_atom_sets_is_a_lattice() {
    // Two triangles 012 and 123 sharing edge 12, as atom sets.
    let mut fs = faces(4, &[&[0], &[1], &[2], &[3]]);
    fs.extend(faces(4, &[&[0, 1], &[0, 2], &[1, 2], &[1, 3], &[2, 3]]));
    fs.extend(faces(4, &[&[0, 1, 2], &[1, 2, 3]]));
    let l = FaceLattice::from_faces(4, fs).unwrap();
    assert!(l.is_graded());
    assert!(is_lattice(&l));
    assert!(brute_is_lattice(&l));
    assert!(!is_eulerian(&l));
}

#[test]
fn simplex_minus_facet_not_eulerian() {
    let s = simplex(4).unwrap();
    let dropped = s.coatoms()[0];
    let kept = (1..s.len() - 1)
        .filter(|&x| x != dropped)
        .map(|x| s.support(x).clone());
    let l = FaceLattice::from_faces(5, kept).unwrap();
    assert!(l.is_graded());
    assert!(!is_eulerian(&l));
    assert!(!is_eulerian_mobius(&l));
    assert!(is_lattice(&l));
}

#[test]
fn disjoint_tetrahedra_not_connected() {
    let mut facets = Vec::new();
    for base in [0, 4] {
        for skip in 0..4 {
            facets.push((0..4).filter(|&i| i != skip).map(|i| base + i).collect::<Vec<_>>());
        }
    }
    let l = lattice_from_facets(&facets, 8).unwrap();
    assert!(!is_connected(&l));
    assert!(is_connected(&simplex(3).unwrap()));
}

#[test]
fn lattice_checks_agree_with_brute_force() {
    let ls = [
        simplex(3).unwrap(),
        cube(3).unwrap(),
        cross_polytope(3).unwrap(),
        cyclic4(6).unwrap(),
        polygon(5).unwrap(),
        glued_squares(),
    ];
    for l in &ls {
        assert_eq!(is_lattice(l), brute_is_lattice(l));
        assert_eq!(is_eulerian(l), brute_is_eulerian(l));
        assert_eq!(is_eulerian_mobius(l), brute_is_eulerian(l));
    }
}

#[test]
fn mobius_alternates_on_eulerian() {
    let l = cube(3).unwrap();
    let mu = mobius_from(&l, l.bottom());
    for (y, m) in mu.iter().enumerate() {
        let sign = if l.rank(y).is_multiple_of(2) { 1 } else { -1 };
        assert_eq!(*m, Some(sign));
    }
}

#[test]
fn dual_involution_and_counts() {
    for l in [cube(4).unwrap(), cyclic4(7).unwrap(), cross_polytope(3).unwrap()] {
        let d = dual(&l).unwrap();
        let mut fv = l.f_vector();
        fv.reverse();
        assert_eq!(d.f_vector(), fv);
        assert!(are_isomorphic(&dual(&d).unwrap(), &l));
    }
    assert!(are_isomorphic(&dual(&cube(4).unwrap()).unwrap(), &cross_polytope(4).unwrap()));
    assert!(!are_isomorphic(&cube(4).unwrap(), &cross_polytope(4).unwrap()));
}

#[test]
fn vertex_figure_of_cube_is_tetrahedron() {
    let c = cube(4).unwrap();
    let v = c.atoms()[0];
    let fig = interval(&c, v, c.top()).unwrap();
    assert!(are_isomorphic(&fig, &simplex(3).unwrap()));
}

#[test]
fn interval_errors() {
    let c = cube(3).unwrap();
    let a = c.atoms();
    assert_eq!(interval(&c, a[0], a[1]), Err(Error::NotComparable));
    assert_eq!(interval(&c, 0, c.len()), Err(Error::NoSuchElement(c.len())));
}

#[test]
fn facets_round_trip() {
    for l in [cube(4).unwrap(), cross_polytope(4).unwrap(), cyclic4(8).unwrap()] {
        let back = lattice_from_facets(&l.coatom_sets(), l.atom_count()).unwrap();
        assert_eq!(back.faces_by_rank(), l.faces_by_rank());
    }
}

#[test]
fn facet_validation() {
    assert!(matches!(
        lattice_from_facets(&[vec![0, 1], vec![0, 1]], 2),
        Err(Error::DuplicateFacet(_))
    ));
    assert!(matches!(
        lattice_from_facets(&[vec![0, 1, 2], vec![0, 1]], 3),
        Err(Error::NestedFacet { .. })
    ));
    assert!(matches!(
        lattice_from_facets(&[vec![0, 5]], 3),
        Err(Error::AtomOutOfRange { atom: 5, .. })
    ));
    assert_eq!(lattice_from_facets(&[vec![0, 1]], 3), Err(Error::UncoveredAtom(2)));
    assert_eq!(lattice_from_facets(&[], 0), Err(Error::NoAtoms));
}

#[test]
fn non_graded_closure_rejected() {
    // Triangles 012 and 013 meet in an edge, so they sit at rank 3 while
    // the facets 23, 04, 14 sit at rank 2.
    let facets = [vec![0, 1, 2], vec![0, 1, 3], vec![2, 3], vec![0, 4], vec![1, 4]];
    assert_eq!(lattice_from_facets(&facets, 5), Err(Error::NotGraded));
    // Without singleton intersections the closure has no atoms.
    assert_eq!(
        lattice_from_facets(&[vec![0, 1, 2], vec![2, 3]], 4),
        Err(Error::NotAtomistic(0))
    );
}

#[test]
fn non_graded_poset_classification() {
    let mut fs = faces(4, &[&[0], &[1], &[2], &[3]]);
    fs.extend(faces(4, &[&[0, 1], &[1, 2], &[0, 2], &[0, 1, 2]]));
    let l = FaceLattice::from_faces(4, fs).unwrap();
    assert!(!l.is_graded());
    let h = hierarchy_report(&l, false);
    assert_eq!(h.classification, Classification::NotGraded);
    assert!(!h.is_eulerian);
    assert!(face_type_flags(&l).is_err());
    assert!(flag_vector(&l).is_err());
}

#[test]
fn strict_intervals_flag() {
    let c = cube(4).unwrap();
    assert_eq!(hierarchy_report(&c, false).intervals_connected, None);
    assert_eq!(hierarchy_report(&c, true).intervals_connected, Some(true));
    assert!(intervals_connected(&cyclic4(7).unwrap()));
}

#[test]
fn face_types_of_standard_polytopes() {
    let x = face_type_flags(&cross_polytope(4).unwrap()).unwrap();
    assert!(x.simplicial && !x.simple);
    assert_eq!(x.two_simplicial, Some(true));
    assert_eq!(x.all_facets_simple, Some(true));

    let c = face_type_flags(&cube(4).unwrap()).unwrap();
    assert!(c.simple && !c.simplicial);
    assert_eq!(c.two_simplicial, Some(false));
    assert_eq!(c.all_facets_simple, Some(true));

    let s = face_type_flags(&simplex(4).unwrap()).unwrap();
    assert!(s.simple && s.simplicial);
    assert_eq!((s.two_simple, s.two_simplicial), (Some(true), Some(true)));

    let t = face_type_flags(&cube(3).unwrap()).unwrap();
    assert!(t.simple && !t.simplicial);
    assert_eq!(t.two_simple, None);
}

#[test]
fn isomorphism_detects_relabelling() {
    let c = cube(3).unwrap();
    let perm = [5, 3, 7, 0, 2, 6, 1, 4];
    let facets: Vec<Vec<usize>> = c
        .coatom_sets()
        .iter()
        .map(|f| f.iter().map(|&a| perm[a]).collect())
        .collect();
    let r = lattice_from_facets(&facets, 8).unwrap();
    assert!(are_isomorphic(&c, &r));
    assert!(!are_isomorphic(&c, &cross_polytope(3).unwrap()));
    assert!(!are_isomorphic(&cyclic4(7).unwrap(), &dual(&cyclic4(7).unwrap()).unwrap()));
}
