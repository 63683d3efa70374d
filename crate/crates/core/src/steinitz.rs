//! f-vectors of 3-polytopes: the Steinitz conditions and a combinatorial
//! realization for every admissible pair `(f0, f2)`.

use crate::error::{Error, Result};
use crate::lattice::{lattice_from_facets, FaceLattice};

/// `f0 - f1 + f2 = 2`, `f2 - 4 <= 2 (f0 - 4)` and `f0 - 4 <= 2 (f2 - 4)`.
pub fn steinitz_check(f0: i64, f1: i64, f2: i64) -> bool {
    f0 - f1 + f2 == 2 && f2 - 4 <= 2 * (f0 - 4) && f0 - 4 <= 2 * (f2 - 4)
}

/// A 3-polytope as oriented 2-face cycles; vertex ids may have gaps.
#[derive(Debug, Clone)]
struct Polyhedron {
    faces: Vec<Vec<usize>>,
    next_vertex: usize,
}

impl Polyhedron {
    /// Pyramid over an `m`-gon; base vertices `0..m`, apex `m`.
    fn pyramid(m: usize) -> Self {
        let mut faces = vec![(0..m).rev().collect::<Vec<_>>()];
        for i in 0..m {
            faces.push(vec![i, (i + 1) % m, m]);
        }
        Polyhedron {
            faces,
            next_vertex: m + 1,
        }
    }

    fn degree(&self, v: usize) -> usize {
        self.faces.iter().filter(|f| f.contains(&v)).count()
    }

    fn fresh(&mut self) -> usize {
        self.next_vertex += 1;
        self.next_vertex - 1
    }

    /// Replaces triangle `t` by a cone over its boundary: Δf = (1, 3, 2).
    fn stack(&mut self, t: usize) -> usize {
        let tri = self.faces[t].clone();
        assert_eq!(tri.len(), 3);
        let n = self.fresh();
        self.faces[t] = vec![tri[0], tri[1], n];
        self.faces.push(vec![tri[1], tri[2], n]);
        self.faces.push(vec![tri[2], tri[0], n]);
        n
    }

    /// Cuts off a 3-valent vertex `v`: Δf = (2, 3, 1). Returns the new
    /// vertices.
    fn truncate(&mut self, v: usize) -> Vec<usize> {
        assert_eq!(self.degree(v), 3);
        let mut new_of: Vec<(usize, usize)> = Vec::new(); // neighbour -> new vertex
        let mut links: Vec<(usize, usize)> = Vec::new(); // n_q -> n_p on the new triangle
        let mut created = Vec::new();
        for fi in 0..self.faces.len() {
            let face = &self.faces[fi];
            let Some(pos) = face.iter().position(|&x| x == v) else {
                continue;
            };
            let k = face.len();
            let p = face[(pos + k - 1) % k];
            let q = face[(pos + 1) % k];
            let mut ids = [0usize; 2];
            for (slot, x) in [p, q].into_iter().enumerate() {
                ids[slot] = match new_of.iter().find(|(y, _)| *y == x) {
                    Some(&(_, id)) => id,
                    None => {
                        let id = self.fresh();
                        new_of.push((x, id));
                        created.push(id);
                        id
                    }
                };
            }
            let [np, nq] = ids;
            let face = &mut self.faces[fi];
            face.splice(pos..=pos, [np, nq]);
            links.push((nq, np));
        }
        let mut tri = vec![links[0].0];
        while tri.len() < 3 {
            let last = *tri.last().expect("non-empty");
            let (_, next) = *links
                .iter()
                .find(|(a, _)| *a == last)
                .expect("closed vertex link");
            tri.push(next);
        }
        self.faces.push(tri);
        created
    }

    fn into_lattice(self) -> Result<FaceLattice> {
        let mut ids: Vec<usize> = self.faces.iter().flatten().copied().collect();
        ids.sort_unstable();
        ids.dedup();
        let facets: Vec<Vec<usize>> = self
            .faces
            .iter()
            .map(|f| {
                let mut s: Vec<usize> = f
                    .iter()
                    .map(|v| ids.binary_search(v).expect("known vertex"))
                    .collect();
                s.sort_unstable();
                s
            })
            .collect();
        lattice_from_facets(&facets, ids.len())
    }
}

/// Face lattice of a 3-polytope with `f0` vertices and `f2` 2-faces.
///
/// Starts from a pyramid over an `m`-gon, `m ∈ {3, 4, 5}`, then truncates
/// `b` 3-valent vertices (base vertices first) and stacks onto `a`
/// triangles (always the newest one), where `a + 2b = f0 - m - 1` and
/// `2a + b = f2 - m - 1`.
pub fn steinitz_realize(f0: i64, f2: i64) -> Result<FaceLattice> {
    let f1 = f0 + f2 - 2;
    if !steinitz_check(f0, f1, f2) {
        return Err(Error::NotRealizable { f0, f1, f2 });
    }
    // m ≡ 2 f2 - f0 - 1 (mod 3) makes a and b integral
    let m = 3 + (2 * f2 - f0 - 1).rem_euclid(3);
    let a = (2 * (f2 - m - 1) - (f0 - m - 1)) / 3;
    let b = (2 * (f0 - m - 1) - (f2 - m - 1)) / 3;
    if a < 0 || b < 0 {
        return Err(Error::NotRealizable { f0, f1, f2 });
    }
    let m = m as usize;
    let mut p = Polyhedron::pyramid(m);
    let mut trivalent: std::collections::VecDeque<usize> = (0..m).collect();
    for _ in 0..b {
        let v = loop {
            let v = trivalent.pop_front().expect("a 3-valent vertex always exists");
            if p.degree(v) == 3 {
                break v;
            }
        };
        trivalent.extend(p.truncate(v));
    }
    for _ in 0..a {
        let t = p
            .faces
            .iter()
            .rposition(|f| f.len() == 3)
            .expect("a triangle always exists");
        p.stack(t);
    }
    p.into_lattice()
}
