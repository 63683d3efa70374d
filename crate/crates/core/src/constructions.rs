//! Example families: classical polytopes, products, cyclic polytopes, the
//! E-construction, and flag-vector formulas for families too large to
//! build as lattices.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::flag::{expand_four_flag, fatness, flag_vector, four_flag_of, FVector, FourFlag};
use crate::lattice::{
    face_type_flags, hierarchy_report, lattice_from_facets, lattice_from_facets_limited,
    Classification, FaceLattice,
};
use crate::rational::Rational;

pub fn simplex(d: usize) -> Result<FaceLattice> {
    if !(1..=6).contains(&d) {
        return Err(Error::BadParams(format!("simplex dimension {d} not in 1..=6")));
    }
    let facets: Vec<Vec<usize>> = (0..=d)
        .map(|skip| (0..=d).filter(|&i| i != skip).collect())
        .collect();
    lattice_from_facets(&facets, d + 1)
}

/// `d`-cube on vertices `0..2^d` (bit `i` = coordinate `i`).
pub fn cube(d: usize) -> Result<FaceLattice> {
    if !(1..=5).contains(&d) {
        return Err(Error::BadParams(format!("cube dimension {d} not in 1..=5")));
    }
    let n = 1usize << d;
    let facets: Vec<Vec<usize>> = (0..d)
        .flat_map(|i| {
            [0, 1].map(|b| (0..n).filter(|v| (v >> i) & 1 == b).collect::<Vec<_>>())
        })
        .collect();
    lattice_from_facets(&facets, n)
}

/// `d`-dimensional cross-polytope; atom `2i` is `+e_i`, `2i + 1` is `-e_i`.
pub fn cross_polytope(d: usize) -> Result<FaceLattice> {
    if !(1..=5).contains(&d) {
        return Err(Error::BadParams(format!("cross-polytope dimension {d} not in 1..=5")));
    }
    let facets: Vec<Vec<usize>> = (0..1usize << d)
        .map(|s| (0..d).map(|i| 2 * i + ((s >> i) & 1)).collect())
        .collect();
    lattice_from_facets(&facets, 2 * d)
}

pub fn polygon(n: usize) -> Result<FaceLattice> {
    if !(3..=1000).contains(&n) {
        return Err(Error::BadParams(format!("polygon size {n} not in 3..=1000")));
    }
    let facets: Vec<Vec<usize>> = (0..n)
        .map(|i| {
            let j = (i + 1) % n;
            vec![i.min(j), i.max(j)]
        })
        .collect();
    lattice_from_facets(&facets, n)
}

/// Pyramid over a polytope lattice: the base plus a cone over every facet.
pub fn pyramid(base: &FaceLattice) -> Result<FaceLattice> {
    if !base.is_graded() || base.length() < 2 {
        return Err(Error::BadParams("pyramid base must be a polytope lattice".into()));
    }
    let apex = base.atom_count();
    let mut facets = vec![(0..apex).collect::<Vec<_>>()];
    for mut c in base.coatom_sets() {
        c.push(apex);
        facets.push(c);
    }
    lattice_from_facets(&facets, apex + 1)
}

/// Product of two polytope lattices. Atom `(i, j)` is `i * atoms(b) + j`;
/// facets are `F × Q` and `P × G` for facets `F` of `P`, `G` of `Q`.
pub fn product(a: &FaceLattice, b: &FaceLattice) -> Result<FaceLattice> {
    product_limited(a, b, None)
}

fn product_limited(a: &FaceLattice, b: &FaceLattice, limit: Option<usize>) -> Result<FaceLattice> {
    for l in [a, b] {
        if !l.is_graded() || l.length() < 2 {
            return Err(Error::BadParams("product factors must be polytope lattices".into()));
        }
    }
    let (na, nb) = (a.atom_count(), b.atom_count());
    let mut facets = Vec::new();
    for f in a.coatom_sets() {
        facets.push(
            f.iter()
                .flat_map(|&i| (0..nb).map(move |j| i * nb + j))
                .collect::<Vec<_>>(),
        );
    }
    for g in b.coatom_sets() {
        facets.push(
            (0..na)
                .flat_map(|i| g.iter().map(move |&j| i * nb + j))
                .collect::<Vec<_>>(),
        );
    }
    for f in &mut facets {
        f.sort_unstable();
    }
    lattice_from_facets_limited(&facets, na * nb, limit)
}

/// Facets of the cyclic 4-polytope on `n` vertices: 4-subsets satisfying
/// Gale's evenness condition.
pub fn gale_facets(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    for mask in 0u32..1 << n {
        if mask.count_ones() != 4 {
            continue;
        }
        let set: Vec<usize> = (0..n).filter(|&i| mask & (1 << i) != 0).collect();
        let outside: Vec<usize> = (0..n).filter(|&i| mask & (1 << i) == 0).collect();
        let even = outside.iter().enumerate().all(|(k, &i)| {
            outside[k + 1..]
                .iter()
                .all(|&j| set.iter().filter(|&&s| i < s && s < j).count() % 2 == 0)
        });
        if even {
            out.push(set);
        }
    }
    out.sort();
    out
}

pub fn cyclic4(n: usize) -> Result<FaceLattice> {
    if !(5..=12).contains(&n) {
        return Err(Error::BadParams(format!("cyclic4 vertex count {n} not in 5..=12")));
    }
    lattice_from_facets(&gale_facets(n), n)
}

/// Combinatorial E-construction of a simple 4-polytope: atoms are the
/// vertices followed by the facets of `p`; each ridge `R = F1 ∩ F2`
/// contributes the facet `vert(R) ∪ {F1, F2}`, a bipyramid over `R`.
pub fn e_construct(p: &FaceLattice) -> Result<FaceLattice> {
    e_construct_limited(p, None)
}

fn e_construct_limited(p: &FaceLattice, limit: Option<usize>) -> Result<FaceLattice> {
    if !p.is_graded() || p.length() != 5 {
        return Err(Error::NotSimple);
    }
    if hierarchy_report(p, false).classification != Classification::ConnectedEulerianLattice
        || !face_type_flags(p)?.simple
    {
        return Err(Error::NotSimple);
    }
    let n = p.atom_count();
    let coatoms = p.coatoms();
    let facets: Vec<Vec<usize>> = p
        .elements_of_rank(3)
        .iter()
        .map(|&r| {
            let mut f = p.atoms_of(r);
            f.extend(
                coatoms
                    .iter()
                    .enumerate()
                    .filter(|&(_, &c)| p.leq(r, c))
                    .map(|(k, _)| n + k),
            );
            f
        })
        .collect();
    let e = match lattice_from_facets_limited(&facets, n + coatoms.len(), limit) {
        Err(Error::NotGraded) => return Err(Error::ClosureNotGraded),
        other => other?,
    };
    // the closed forms for E(P) must agree with what the recipe produced
    if four_flag_of(&e)? != e_transform_flag(&four_flag_of(p)?)? {
        return Err(Error::ClosureNotGraded);
    }
    Ok(e)
}

/// Condensed flag-vector of the neighborly cubical 4-polytope with the
/// graph of the `n`-cube: `(4, 2n, 3(n-2), n-2; 8(n-2)) · 2^(n-2)`.
pub fn neighborly_cubical_flag(n: u32) -> Result<FourFlag> {
    if n < 4 {
        return Err(Error::BadParams(format!("neighborly cubical needs n >= 4, got {n}")));
    }
    let n64 = i64::from(n);
    let base = FourFlag::new(4, 2 * n64, 3 * (n64 - 2), n64 - 2, 8 * (n64 - 2));
    Ok(base.scaled(&(BigInt::from(1) << (n - 2))))
}

/// Condensed flag-vector of E(P) for a simple `P`:
/// `(f0 + f3, 6 f0, 5 f0 + f2 - f3, f2; 6 f0 + 2 f2)`.
pub fn e_transform_flag(q: &FourFlag) -> Result<FourFlag> {
    let two = BigInt::from(2);
    if !q.satisfies_euler() || q.f1 != &two * &q.f0 || q.f03 != BigInt::from(4) * &q.f0 {
        return Err(Error::NotSimple);
    }
    let six_f0 = BigInt::from(6) * &q.f0;
    Ok(FourFlag {
        f0: &q.f0 + &q.f3,
        f1: six_f0.clone(),
        f2: BigInt::from(5) * &q.f0 + &q.f2 - &q.f3,
        f3: q.f2.clone(),
        f03: six_f0 + &two * &q.f2,
    })
}

/// The 120-cell: 600 vertices, 120 dodecahedral facets.
pub fn flag_120_cell() -> FourFlag {
    FourFlag::new(600, 1200, 720, 120, 2400)
}

/// Condensed flag-vector of the product of an `n`-gon and an `m`-gon.
pub fn polygon_product_flag(n: u32, m: u32) -> FourFlag {
    let (n, m) = (i64::from(n), i64::from(m));
    FourFlag::new(n * m, 2 * n * m, n * m + n + m, n + m, 4 * n * m)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MgProduct {
    pub f: FVector,
    /// `(f1 + f2 - 20) / (f0 + f3 - 10)`; `None` when the denominator
    /// vanishes.
    pub fatness: Option<Rational>,
}

/// f-vector of (degree-`k` cover of the one-vertex genus-`g` surface
/// cellulation) × (interval cut into `m` segments).
pub fn mg_product_fvector(g: u64, k: u64, m: u64) -> Result<MgProduct> {
    if g < 2 || k < 1 || m < 1 {
        return Err(Error::BadParams(format!(
            "mg-product needs g >= 2, k >= 1, m >= 1 (got {g}, {k}, {m})"
        )));
    }
    let surface = [BigInt::from(k), BigInt::from(2 * g) * k, BigInt::from(k)];
    let segment = [BigInt::from(m + 1), BigInt::from(m)];
    let mut f = vec![BigInt::zero(); 4];
    for (i, s) in surface.iter().enumerate() {
        for (j, t) in segment.iter().enumerate() {
            f[i + j] += s * t;
        }
    }
    let num = &f[1] + &f[2] - 20;
    let den: BigInt = &f[0] + &f[3] - 10;
    let fatness = (!den.is_zero()).then(|| Rational::new(num, den));
    Ok(MgProduct {
        f: FVector(f),
        fatness,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ConstructionName {
    Simplex,
    Cube,
    Cross,
    Polygon,
    Pyramid,
    Product,
    Cyclic4,
    EConstruct,
    Cell120Flag,
    NeighborlyCubicalFlag,
    MgProduct,
}

impl ConstructionName {
    pub const ALL: [ConstructionName; 11] = [
        ConstructionName::Simplex,
        ConstructionName::Cube,
        ConstructionName::Cross,
        ConstructionName::Polygon,
        ConstructionName::Pyramid,
        ConstructionName::Product,
        ConstructionName::Cyclic4,
        ConstructionName::EConstruct,
        ConstructionName::Cell120Flag,
        ConstructionName::NeighborlyCubicalFlag,
        ConstructionName::MgProduct,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            ConstructionName::Simplex => "simplex",
            ConstructionName::Cube => "cube",
            ConstructionName::Cross => "cross",
            ConstructionName::Polygon => "polygon",
            ConstructionName::Pyramid => "pyramid",
            ConstructionName::Product => "product",
            ConstructionName::Cyclic4 => "cyclic4",
            ConstructionName::EConstruct => "e-construct",
            ConstructionName::Cell120Flag => "120-cell-flag",
            ConstructionName::NeighborlyCubicalFlag => "neighborly-cubical-flag",
            ConstructionName::MgProduct => "mg-product",
        }
    }

    /// Number of integer parameters.
    pub fn arity(self) -> usize {
        match self {
            ConstructionName::Cell120Flag => 0,
            ConstructionName::Product | ConstructionName::EConstruct => 2,
            ConstructionName::MgProduct => 3,
            _ => 1,
        }
    }
}

impl fmt::Display for ConstructionName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for ConstructionName {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        ConstructionName::ALL
            .into_iter()
            .find(|n| n.as_str() == s)
            .ok_or_else(|| Error::BadParams(format!("unknown construction {s:?}")))
    }
}

/// A named construction with its integer parameters.
///
/// | name | params | result |
/// |---|---|---|
/// | `simplex`, `cube`, `cross` | `d` | lattice |
/// | `polygon` | `n` | lattice |
/// | `pyramid` | `n` | pyramid over the `n`-gon |
/// | `product` | `n m` | `n`-gon × `m`-gon, `3 <= n, m <= 20` |
/// | `cyclic4` | `n` | cyclic 4-polytope, `5 <= n <= 12` |
/// | `e-construct` | `n m` | E(`n`-gon × `m`-gon), `3 <= n, m <= 20` |
/// | `120-cell-flag` | | condensed flag-vector |
/// | `neighborly-cubical-flag` | `n` | condensed flag-vector |
/// | `mg-product` | `g k m` | f-vector and fatness |
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConstructionSpec {
    pub name: ConstructionName,
    pub params: Vec<i64>,
}

impl ConstructionSpec {
    pub fn new(name: ConstructionName, params: Vec<i64>) -> Result<Self> {
        if params.len() != name.arity() {
            return Err(Error::BadParams(format!(
                "{name} takes {} parameter(s), got {}",
                name.arity(),
                params.len()
            )));
        }
        if params.iter().any(|&p| p < 0) {
            return Err(Error::BadParams(format!("{name} parameters must be non-negative")));
        }
        Ok(ConstructionSpec { name, params })
    }

    pub fn parse(name: &str, params: &[String]) -> Result<Self> {
        let name: ConstructionName = name.parse()?;
        let params = params
            .iter()
            .map(|p| {
                p.parse::<i64>()
                    .map_err(|_| Error::BadParams(format!("parameter {p:?} is not an integer")))
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(name, params)
    }
}

#[derive(Debug, Clone)]
pub enum Generated {
    Lattice(FaceLattice),
    Flag(FourFlag),
    MgProduct(MgProduct),
}

fn polygon_pair(p: &[i64]) -> Result<(usize, usize)> {
    let (n, m) = (p[0] as usize, p[1] as usize);
    if !(3..=20).contains(&n) || !(3..=20).contains(&m) {
        return Err(Error::SizeLimit(format!(
            "polygon product sizes ({n}, {m}) must lie in 3..=20"
        )));
    }
    Ok((n, m))
}

/// Builds a construction; `limit` caps the number of lattice elements.
pub fn generate(spec: &ConstructionSpec, limit: Option<usize>) -> Result<Generated> {
    let p = &spec.params;
    let lattice = match spec.name {
        ConstructionName::Simplex => simplex(p[0] as usize)?,
        ConstructionName::Cube => cube(p[0] as usize)?,
        ConstructionName::Cross => cross_polytope(p[0] as usize)?,
        ConstructionName::Polygon => polygon(p[0] as usize)?,
        ConstructionName::Pyramid => pyramid(&polygon(p[0] as usize)?)?,
        ConstructionName::Product => {
            let (n, m) = polygon_pair(p)?;
            product_limited(&polygon(n)?, &polygon(m)?, limit)?
        }
        ConstructionName::Cyclic4 => cyclic4(p[0] as usize)?,
        ConstructionName::EConstruct => {
            let (n, m) = polygon_pair(p)?;
            e_construct_limited(&product(&polygon(n)?, &polygon(m)?)?, limit)?
        }
        ConstructionName::Cell120Flag => return Ok(Generated::Flag(flag_120_cell())),
        ConstructionName::NeighborlyCubicalFlag => {
            let n = u32::try_from(p[0]).map_err(|_| Error::SizeLimit("n too large".into()))?;
            if n > 4096 {
                return Err(Error::SizeLimit(format!("neighborly cubical n = {n} > 4096")));
            }
            return Ok(Generated::Flag(neighborly_cubical_flag(n)?));
        }
        ConstructionName::MgProduct => {
            return Ok(Generated::MgProduct(mg_product_fvector(
                p[0] as u64,
                p[1] as u64,
                p[2] as u64,
            )?))
        }
    };
    if let Some(limit) = limit {
        if lattice.len() > limit {
            return Err(Error::SizeLimit(format!(
                "{} elements exceed the limit {limit}",
                lattice.len()
            )));
        }
    }
    Ok(Generated::Lattice(lattice))
}

/// Checks the Dehn–Sommerville expansion against chain counts of `l`.
pub fn expansion_matches_chains(l: &FaceLattice) -> Result<bool> {
    let direct = flag_vector(l)?;
    let expanded = expand_four_flag(&four_flag_of(l)?)?;
    Ok(direct == expanded)
}

/// Fatness of E(P) for a simple `P` straight from `(f0, f3)` of `P`:
/// `(6 f0 - 10) / (f0 + f3 - 5)`.
pub fn e_fatness_formula(q: &FourFlag) -> Result<Rational> {
    let den: BigInt = &q.f0 + &q.f3 - 5;
    if den.is_zero() {
        return Err(Error::SimplexDegenerate);
    }
    Ok(Rational::new(BigInt::from(6) * &q.f0 - 10, den))
}

/// `fatness(e_transform_flag(q))`.
pub fn e_fatness(q: &FourFlag) -> Result<Rational> {
    fatness(&e_transform_flag(q)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::{are_isomorphic, dual};
    use crate::rational::ratio;

    #[test]
    fn classical_f_vectors() {
        assert_eq!(simplex(4).unwrap().f_vector(), vec![5, 10, 10, 5]);
        assert_eq!(cube(4).unwrap().f_vector(), vec![16, 32, 24, 8]);
        assert_eq!(cross_polytope(4).unwrap().f_vector(), vec![8, 24, 32, 16]);
        assert_eq!(cube(3).unwrap().f_vector(), vec![8, 12, 6]);
        assert_eq!(polygon(7).unwrap().f_vector(), vec![7, 7]);
        assert_eq!(pyramid(&polygon(5).unwrap()).unwrap().f_vector(), vec![6, 10, 6]);
    }

    #[test]
    fn cyclic_polytope_counts() {
        assert_eq!(cyclic4(6).unwrap().f_vector(), vec![6, 15, 18, 9]);
        for n in 5..=12 {
            assert_eq!(gale_facets(n).len(), n * (n - 3) / 2);
        }
    }

    #[test]
    fn polygon_products() {
        let c5c5 = product(&polygon(5).unwrap(), &polygon(5).unwrap()).unwrap();
        assert_eq!(c5c5.f_vector(), vec![25, 50, 35, 10]);
        assert!(face_type_flags(&c5c5).unwrap().simple);
        assert_eq!(four_flag_of(&c5c5).unwrap(), polygon_product_flag(5, 5));
        let c4c4 = product(&polygon(4).unwrap(), &polygon(4).unwrap()).unwrap();
        assert!(are_isomorphic(&c4c4, &cube(4).unwrap()));
    }

    #[test]
    fn cube_and_cross_are_dual() {
        let d = dual(&cube(4).unwrap()).unwrap();
        assert!(are_isomorphic(&d, &cross_polytope(4).unwrap()));
    }

    #[test]
    fn neighborly_cubical_examples() {
        assert_eq!(neighborly_cubical_flag(4).unwrap(), FourFlag::new(16, 32, 24, 8, 64));
        assert_eq!(neighborly_cubical_flag(5).unwrap(), FourFlag::new(32, 80, 72, 24, 192));
        assert!(neighborly_cubical_flag(5).unwrap().satisfies_euler());
        assert!(neighborly_cubical_flag(3).is_err());
        let f20 = fatness(&neighborly_cubical_flag(20).unwrap()).unwrap();
        let f19 = fatness(&neighborly_cubical_flag(19).unwrap()).unwrap();
        assert!(f19 < f20 && f20 < ratio(5, 1));
    }

    #[test]
    fn e_transform_examples() {
        assert_eq!(
            e_transform_flag(&flag_120_cell()).unwrap(),
            FourFlag::new(720, 3600, 3600, 720, 5040)
        );
        assert_eq!(
            e_transform_flag(&FourFlag::new(16, 32, 24, 8, 64)).unwrap(),
            FourFlag::new(24, 96, 96, 24, 144)
        );
        let c100 = polygon_product_flag(100, 100);
        assert_eq!(c100, FourFlag::new(10000, 20000, 10200, 200, 40000));
        assert_eq!(e_fatness(&c100).unwrap(), ratio(59990, 10195));
        assert_eq!(
            e_transform_flag(&FourFlag::new(8, 24, 32, 16, 64)),
            Err(Error::NotSimple)
        );
    }

    #[test]
    fn e_construct_of_c5_c5() {
        let p = product(&polygon(5).unwrap(), &polygon(5).unwrap()).unwrap();
        let e = e_construct(&p).unwrap();
        assert_eq!(e.f_vector(), vec![35, 150, 150, 35]);
        assert_eq!(four_flag_of(&e).unwrap().f03, BigInt::from(220));
        assert_eq!(fatness(&four_flag_of(&e).unwrap()).unwrap(), ratio(14, 3));
    }

    #[test]
    fn e_construct_needs_simple_input() {
        assert_eq!(e_construct(&cross_polytope(4).unwrap()).unwrap_err(), Error::NotSimple);
        assert_eq!(e_construct(&cube(3).unwrap()).unwrap_err(), Error::NotSimple);
    }

    #[test]
    fn mg_product_examples() {
        let r = mg_product_fvector(2, 1, 1).unwrap();
        assert_eq!(r.f, FVector::from_ints([2, 9, 6, 1]));
        // alternating sum equals the Euler characteristic k (2 - 2g) of the surface cover
        for (g, k, m) in [(2, 1, 1), (3, 2, 5), (10, 1, 100)] {
            let r = mg_product_fvector(g, k, m).unwrap();
            assert_eq!(r.f.alternating_sum(), BigInt::from(2 * k as i64 * (1 - g as i64)));
        }
        assert!(mg_product_fvector(1, 1, 1).is_err());
        assert_eq!(mg_product_fvector(2, 2, 2).unwrap().fatness, None);
        let fat = mg_product_fvector(10, 1, 10000).unwrap().fatness.unwrap();
        assert!(fat > ratio(21, 1) && fat < ratio(2101, 100));
    }

    #[test]
    fn spec_dispatch() {
        let s = ConstructionSpec::parse("cyclic4", &["6".into()]).unwrap();
        match generate(&s, None).unwrap() {
            Generated::Lattice(l) => assert_eq!(l.f_vector(), vec![6, 15, 18, 9]),
            other => panic!("unexpected {other:?}"),
        }
        assert!(ConstructionSpec::parse("cube", &[]).is_err());
        assert!(ConstructionSpec::parse("hypercube", &["4".into()]).is_err());
        let big = ConstructionSpec::parse("product", &["30".into(), "30".into()]).unwrap();
        assert!(matches!(generate(&big, None), Err(Error::SizeLimit(_))));
        let capped = ConstructionSpec::parse("cube", &["4".into()]).unwrap();
        assert!(matches!(generate(&capped, Some(10)), Err(Error::SizeLimit(_))));
        let flag = ConstructionSpec::parse("120-cell-flag", &[]).unwrap();
        assert!(matches!(generate(&flag, None), Ok(Generated::Flag(_))));
    }
}
