//! Exact convex hulls in dimension 3 and 4, used as an independent
//! geometric check on combinatorial constructions.
//!
//! The hull is built by beneath-beyond insertion in lexicographic point
//! order. Facets are kept as supporting hyperplanes together with every
//! inserted point on them, so coplanar points merge into one facet instead
//! of being triangulated.

use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::lattice::{are_isomorphic, lattice_from_facets, FaceLattice};
use crate::rational::Rational;

pub type Point = Vec<Rational>;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PointSet {
    pub dim: usize,
    pub points: Vec<Point>,
    pub labels: Vec<usize>,
}

impl PointSet {
    /// Points labelled `0..n`.
    pub fn new(dim: usize, points: Vec<Point>) -> Result<Self> {
        if !(3..=4).contains(&dim) {
            return Err(Error::BadParams(format!("dimension {dim} not in 3..=4")));
        }
        if let Some(p) = points.iter().find(|p| p.len() != dim) {
            return Err(Error::BadParams(format!(
                "point with {} coordinates in dimension {dim}",
                p.len()
            )));
        }
        let labels = (0..points.len()).collect();
        Ok(PointSet {
            dim,
            points,
            labels,
        })
    }

    pub fn from_ints(dim: usize, points: &[Vec<i64>]) -> Result<Self> {
        Self::new(
            dim,
            points
                .iter()
                .map(|p| p.iter().map(|&x| Rational::from_integer(x.into())).collect())
                .collect(),
        )
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    /// Concatenation; labels are renumbered `0..n`.
    pub fn union(&self, other: &PointSet) -> Result<PointSet> {
        let mut pts = self.points.clone();
        pts.extend(other.points.iter().cloned());
        PointSet::new(self.dim, pts)
    }

    /// Parses one point per line, coordinates `p/q` or integers separated by
    /// whitespace; `#` starts a comment.
    pub fn parse(text: &str) -> Result<PointSet> {
        let mut points: Vec<Point> = Vec::new();
        let mut dim = None;
        for (ln, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("");
            if line.trim().is_empty() {
                continue;
            }
            let mut p = Vec::new();
            let mut col = 0;
            for tok in line.split_whitespace() {
                let column = line[col..].find(tok).map(|i| i + col).unwrap_or(col) + 1;
                col = column - 1 + tok.len();
                p.push(parse_rational(tok).ok_or_else(|| Error::Parse {
                    line: ln + 1,
                    column,
                    message: format!("bad coordinate {tok:?}"),
                })?);
            }
            match dim {
                None => dim = Some(p.len()),
                Some(d) if d != p.len() => {
                    return Err(Error::Parse {
                        line: ln + 1,
                        column: 1,
                        message: format!("expected {d} coordinates, found {}", p.len()),
                    })
                }
                _ => {}
            }
            points.push(p);
        }
        let dim = dim.ok_or_else(|| Error::Parse {
            line: 1,
            column: 1,
            message: "no points".into(),
        })?;
        PointSet::new(dim, points).map_err(|e| Error::Parse {
            line: 1,
            column: 1,
            message: e.to_string(),
        })
    }
}

fn parse_rational(tok: &str) -> Option<Rational> {
    match tok.split_once('/') {
        Some((n, d)) => {
            let d: BigInt = d.parse().ok()?;
            if d.is_zero() {
                return None;
            }
            Some(Rational::new(n.parse().ok()?, d))
        }
        None => Some(Rational::from_integer(tok.parse().ok()?)),
    }
}

/// `(i, i², i³, i⁴)` for `i = 1..=n`.
pub fn moment_curve_points(n: usize) -> Result<PointSet> {
    if !(5..=12).contains(&n) {
        return Err(Error::BadParams(format!("moment curve size {n} not in 5..=12")));
    }
    let pts: Vec<Vec<i64>> = (1..=n as i64).map(|t| vec![t, t * t, t * t * t, t * t * t * t]).collect();
    PointSet::from_ints(4, &pts)
}

/// Vertices `{±1}^d`, labelled to match [`crate::constructions::cube`]:
/// bit `i` of the label set means coordinate `i` is `+1`.
pub fn cube_points(d: usize) -> Result<PointSet> {
    let pts: Vec<Vec<i64>> = (0..1usize << d)
        .map(|v| (0..d).map(|i| if (v >> i) & 1 == 1 { 1 } else { -1 }).collect())
        .collect();
    PointSet::from_ints(d, &pts)
}

/// `±scale · e_i`, labelled `2i` for `+` and `2i + 1` for `-`.
pub fn cross_points(d: usize, scale: i64) -> Result<PointSet> {
    let mut pts = Vec::new();
    for i in 0..d {
        for s in [scale, -scale] {
            let mut p = vec![0; d];
            p[i] = s;
            pts.push(p);
        }
    }
    PointSet::from_ints(d, &pts)
}

/// Rank of a list of vectors, by exact elimination.
pub fn rank(rows: &[Vec<Rational>]) -> usize {
    let mut m: Vec<Vec<Rational>> = rows.to_vec();
    let cols = m.first().map_or(0, Vec::len);
    let mut r = 0;
    for c in 0..cols {
        let Some(piv) = (r..m.len()).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, piv);
        for i in r + 1..m.len() {
            if m[i][c].is_zero() {
                continue;
            }
            let f = &m[i][c] / &m[r][c];
            for k in c..cols {
                let t = &f * &m[r][k];
                m[i][k] -= t;
            }
        }
        r += 1;
    }
    r
}

fn diffs(points: &[&Point]) -> Vec<Vec<Rational>> {
    let Some((first, rest)) = points.split_first() else {
        return Vec::new();
    };
    rest.iter()
        .map(|p| p.iter().zip(first.iter()).map(|(a, b)| a - b).collect())
        .collect()
}

pub fn affine_rank(points: &[&Point]) -> usize {
    if points.is_empty() {
        return 0;
    }
    rank(&diffs(points))
}

// Non-zero vector orthogonal to d-1 independent rows in dimension d.
fn normal_of(rows: &[Vec<Rational>], dim: usize) -> Vec<Rational> {
    // reduced row echelon form, then read off the free column
    let mut m: Vec<Vec<Rational>> = rows.to_vec();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..dim {
        let Some(piv) = (r..m.len()).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, piv);
        let inv = Rational::one() / &m[r][c];
        for k in 0..dim {
            m[r][k] = &m[r][k] * &inv;
        }
        for i in 0..m.len() {
            if i != r && !m[i][c].is_zero() {
                let f = m[i][c].clone();
                for k in 0..dim {
                    let t = &f * &m[r][k];
                    m[i][k] -= t;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    let free = (0..dim)
        .find(|c| !pivots.contains(c))
        .expect("rows have rank d-1");
    let mut n = vec![Rational::zero(); dim];
    n[free] = Rational::one();
    for (row, &pc) in pivots.iter().enumerate() {
        n[pc] = -m[row][free].clone();
    }
    n
}

fn dot(a: &[Rational], b: &[Rational]) -> Rational {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

#[derive(Debug, Clone)]
struct Facet {
    // outward normal scaled so its first non-zero entry has absolute value 1
    normal: Vec<Rational>,
    offset: Rational,
    points: BTreeSet<usize>,
}

impl Facet {
    fn side(&self, p: &Point) -> Rational {
        dot(&self.normal, p) - &self.offset
    }
}

// hyperplane through `pts`, oriented away from `interior`
fn facet_through(pts: &[&Point], interior: &Point, dim: usize) -> Option<(Vec<Rational>, Rational)> {
    // pick d affinely independent points
    let mut chosen: Vec<&Point> = Vec::new();
    for &p in pts {
        chosen.push(p);
        if affine_rank(&chosen) + 1 < chosen.len() {
            chosen.pop();
        }
        if chosen.len() == dim {
            break;
        }
    }
    if chosen.len() < dim {
        return None;
    }
    let mut normal = normal_of(&diffs(&chosen), dim);
    let mut offset = dot(&normal, chosen[0]);
    if dot(&normal, interior) > offset {
        normal.iter_mut().for_each(|x| *x = -x.clone());
        offset = -offset;
    }
    let scale = normal
        .iter()
        .find(|x| !x.is_zero())
        .expect("non-zero normal")
        .abs();
    normal.iter_mut().for_each(|x| *x = &*x / &scale);
    offset /= scale;
    Some((normal, offset))
}

/// Vertices and facets of a hull, in terms of point labels.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Hull {
    pub dim: usize,
    /// Labels of the hull vertices, ascending.
    pub vertices: Vec<usize>,
    /// Vertex labels of each facet, each sorted; facets sorted
    /// lexicographically.
    pub facets: Vec<Vec<usize>>,
}

impl Hull {
    /// Boundary face lattice with atoms renumbered to positions in
    /// `vertices`.
    pub fn lattice(&self) -> Result<FaceLattice> {
        let facets: Vec<Vec<usize>> = self
            .facets
            .iter()
            .map(|f| {
                f.iter()
                    .map(|v| self.vertices.binary_search(v).expect("vertex label"))
                    .collect()
            })
            .collect();
        lattice_from_facets(&facets, self.vertices.len())
    }
}

/// Exact convex hull of a full-dimensional point set.
pub fn convex_hull(ps: &PointSet) -> Result<Hull> {
    let dim = ps.dim;
    // lexicographic insertion order, duplicates dropped
    let mut order: Vec<usize> = (0..ps.len()).collect();
    order.sort_by(|&a, &b| ps.points[a].cmp(&ps.points[b]).then(a.cmp(&b)));
    order.dedup_by(|a, b| ps.points[*a] == ps.points[*b]);
    let pt = |i: usize| &ps.points[i];

    // initial simplex by greedy affine-rank extension
    let mut simplex: Vec<usize> = Vec::new();
    for &i in &order {
        simplex.push(i);
        let refs: Vec<&Point> = simplex.iter().map(|&j| pt(j)).collect();
        if affine_rank(&refs) + 1 < simplex.len() {
            simplex.pop();
        }
        if simplex.len() == dim + 1 {
            break;
        }
    }
    if simplex.len() < dim + 1 {
        let refs: Vec<&Point> = order.iter().map(|&j| pt(j)).collect();
        return Err(Error::DegenerateInput {
            dim,
            rank: affine_rank(&refs),
        });
    }
    let n_simplex = Rational::from_integer(BigInt::from(dim + 1));
    let interior: Point = (0..dim)
        .map(|k| simplex.iter().map(|&j| pt(j)[k].clone()).sum::<Rational>() / &n_simplex)
        .collect();

    let mut facets: Vec<Facet> = Vec::new();
    for skip in 0..=dim {
        let members: Vec<usize> = simplex
            .iter()
            .enumerate()
            .filter(|&(k, _)| k != skip)
            .map(|(_, &j)| j)
            .collect();
        let refs: Vec<&Point> = members.iter().map(|&j| pt(j)).collect();
        let (normal, offset) = facet_through(&refs, &interior, dim).expect("simplex facet");
        facets.push(Facet {
            normal,
            offset,
            points: members.into_iter().collect(),
        });
    }
    let mut inserted: BTreeSet<usize> = simplex.iter().copied().collect();

    for &p in &order {
        if inserted.contains(&p) {
            continue;
        }
        let sides: Vec<Rational> = facets.iter().map(|f| f.side(pt(p))).collect();
        let visible: Vec<bool> = sides.iter().map(|s| s.is_positive()).collect();
        if !visible.iter().any(|&v| v) {
            continue; // inside or on the boundary: not a vertex
        }
        inserted.insert(p);
        let mut new_facets: Vec<Facet> = Vec::new();
        let mut grown: BTreeSet<usize> = BTreeSet::new();
        for (fi, f) in facets.iter().enumerate() {
            if !visible[fi] {
                continue;
            }
            for (gi, g) in facets.iter().enumerate() {
                if visible[gi] {
                    continue;
                }
                let ridge: Vec<usize> = f.points.intersection(&g.points).copied().collect();
                let refs: Vec<&Point> = ridge.iter().map(|&j| pt(j)).collect();
                if refs.len() < dim - 1 || affine_rank(&refs) != dim - 2 {
                    continue;
                }
                if sides[gi].is_zero() {
                    grown.insert(gi);
                    continue;
                }
                let mut with_p = refs.clone();
                with_p.push(pt(p));
                let (normal, offset) =
                    facet_through(&with_p, &interior, dim).expect("ridge and apex span a hyperplane");
                match new_facets
                    .iter_mut()
                    .find(|h| h.normal == normal && h.offset == offset)
                {
                    Some(h) => h.points.extend(ridge.iter().copied()),
                    None => {
                        let mut points: BTreeSet<usize> = ridge.into_iter().collect();
                        points.insert(p);
                        new_facets.push(Facet {
                            normal,
                            offset,
                            points,
                        });
                    }
                }
            }
        }
        let mut kept: Vec<Facet> = Vec::new();
        for (gi, mut g) in facets.into_iter().enumerate() {
            if visible[gi] {
                continue;
            }
            if grown.contains(&gi) {
                g.points.insert(p);
            }
            kept.push(g);
        }
        kept.extend(new_facets);
        facets = kept;
    }

    // a point is a vertex iff the normals of the facets through it span R^d
    let candidates: BTreeSet<usize> = facets.iter().flat_map(|f| f.points.iter().copied()).collect();
    let vertex_set: BTreeSet<usize> = candidates
        .into_iter()
        .filter(|&i| {
            let normals: Vec<Vec<Rational>> = facets
                .iter()
                .filter(|f| f.points.contains(&i))
                .map(|f| f.normal.clone())
                .collect();
            rank(&normals) == dim
        })
        .collect();

    let mut out: Vec<Vec<usize>> = facets
        .iter()
        .map(|f| {
            let mut v: Vec<usize> = f
                .points
                .iter()
                .filter(|i| vertex_set.contains(i))
                .map(|&i| ps.labels[i])
                .collect();
            v.sort_unstable();
            v
        })
        .collect();
    out.sort();
    let mut vertices: Vec<usize> = vertex_set.iter().map(|&i| ps.labels[i]).collect();
    vertices.sort_unstable();
    Ok(Hull {
        dim,
        vertices,
        facets: out,
    })
}

/// True iff the hull of `ps` has the combinatorial type of `l`.
pub fn verify_realization(l: &FaceLattice, ps: &PointSet) -> Result<bool> {
    if ps.len() != l.atom_count() {
        return Ok(false);
    }
    let hull = convex_hull(ps)?;
    if hull.vertices.len() != l.atom_count() {
        return Ok(false);
    }
    Ok(are_isomorphic(&hull.lattice()?, l))
}
