//! Face densities of lattice-periodic face-to-face tilings of R³, modelled
//! by face-orbit counts per fundamental domain.

use std::fmt;
use std::str::FromStr;

use num_traits::{Signed, Zero};

use crate::constructions::{e_fatness, polygon_product_flag};
use crate::error::{Error, Result};
use crate::flag::FourFlag;
use crate::rational::{int, Rational};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TilingDensity {
    /// Orbit counts of vertices, edges, 2-faces and tiles.
    pub counts: [Rational; 4],
    pub name: Option<String>,
    /// Every tile is a tetrahedron.
    pub tetrahedral: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Preset {
    /// Unit cubes: (1, 3, 3, 1).
    Cubic,
    /// Unit cubes each cut into six tetrahedra around a common main
    /// diagonal: per cube 1 vertex, 7 edges (3 axis, 3 face diagonals, 1
    /// body diagonal), 12 triangles (2 per face orbit, 6 inside), 6 tiles.
    Tetrahedral,
}

impl FromStr for Preset {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "cubic" => Ok(Preset::Cubic),
            "tetrahedral" => Ok(Preset::Tetrahedral),
            other => Err(Error::BadParams(format!("unknown tiling preset {other:?}"))),
        }
    }
}

impl TilingDensity {
    /// Checks positivity and `c0 - c1 + c2 - c3 = 0`.
    pub fn new(counts: [Rational; 4], name: Option<String>, tetrahedral: bool) -> Result<Self> {
        if counts.iter().any(|c| !c.is_positive()) {
            return Err(Error::InvalidCounts("counts must be positive".into()));
        }
        let t = TilingDensity {
            counts,
            name,
            tetrahedral,
        };
        if !t.euler_sum().is_zero() {
            return Err(Error::EulerViolation);
        }
        Ok(t)
    }

    pub fn from_ints(c: [i64; 4]) -> Result<Self> {
        Self::new(c.map(int), None, false)
    }

    pub fn preset(p: Preset) -> Self {
        let (c, name, tet) = match p {
            Preset::Cubic => ([1, 3, 3, 1], "cubic", false),
            Preset::Tetrahedral => ([1, 7, 12, 6], "tetrahedral", true),
        };
        Self::new(c.map(int), Some(name.to_string()), tet).expect("preset satisfies Euler")
    }

    pub fn euler_sum(&self) -> Rational {
        let [c0, c1, c2, c3] = &self.counts;
        c0 - c1 + c2 - c3
    }

    /// Parses `c0,c1,c2,c3` (each an integer or `p/q`).
    pub fn parse_counts(s: &str) -> Result<Self> {
        let parts: Vec<&str> = s.split(',').map(str::trim).collect();
        if parts.len() != 4 {
            return Err(Error::Parse {
                line: 1,
                column: 1,
                message: format!("expected 4 counts, found {}", parts.len()),
            });
        }
        let mut out = Vec::with_capacity(4);
        let mut column = 1;
        for p in &parts {
            let r = match p.split_once('/') {
                Some((n, d)) => n
                    .parse()
                    .ok()
                    .zip(d.parse().ok())
                    .filter(|(_, d): &(_, num_bigint::BigInt)| !d.is_zero())
                    .map(|(n, d)| Rational::new(n, d)),
                None => p.parse().ok().map(Rational::from_integer),
            };
            out.push(r.ok_or_else(|| Error::Parse {
                line: 1,
                column,
                message: format!("bad count {p:?}"),
            })?);
            column += p.len() + 1;
        }
        let counts: [Rational; 4] = out.try_into().expect("four counts");
        Self::new(counts, None, false)
    }
}

impl fmt::Display for TilingDensity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.counts.iter().map(crate::rational::exact).collect();
        write!(f, "{}", parts.join(","))
    }
}

/// Normalised densities `phi_i = c_i / sum c_j`.
pub fn densities(t: &TilingDensity) -> [Rational; 4] {
    let total: Rational = t.counts.iter().sum();
    t.counts.clone().map(|c| c / &total)
}

/// `(phi1 + phi2) / (phi0 + phi3)`.
pub fn tiling_fatness(t: &TilingDensity) -> Rational {
    let [c0, c1, c2, c3] = &t.counts;
    (c1 + c2) / (c0 + c3)
}

/// Replaces every tetrahedral tile by a Schlegel diagram of `p` based at a
/// tetrahedron facet. The facet condition on `p` cannot be read off a
/// condensed flag-vector and is not checked.
pub fn schlegel_tiling(host: &TilingDensity, p: &FourFlag) -> Result<TilingDensity> {
    if !host.tetrahedral {
        return Err(Error::NotTetrahedral);
    }
    if !p.satisfies_euler() {
        return Err(Error::EulerViolation);
    }
    let [c0, c1, c2, c3] = &host.counts;
    let r = |x: &num_bigint::BigInt, k: i64| Rational::from_integer(x - k);
    let counts = [
        c0 + c3 * r(&p.f0, 4),
        c1 + c3 * r(&p.f1, 6),
        c2 + c3 * r(&p.f2, 4),
        c3 * r(&p.f3, 1),
    ];
    TilingDensity::new(
        counts,
        host.name.as_ref().map(|n| format!("{n}+schlegel({p})")),
        false,
    )
}

/// Fatness of E(C_n × C_n): `(6n² - 10) / (n² + 2n - 5)`, approaching 6.
pub fn fat_tiling_fatness(n: u32) -> Result<Rational> {
    if n < 3 {
        return Err(Error::BadParams(format!("fat tiling needs n >= 3, got {n}")));
    }
    e_fatness(&polygon_product_flag(n, n))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::ratio;

    #[test]
    fn cubic_densities() {
        let t = TilingDensity::preset(Preset::Cubic);
        assert_eq!(densities(&t), [ratio(1, 8), ratio(3, 8), ratio(3, 8), ratio(1, 8)]);
        assert_eq!(tiling_fatness(&t), int(3));
    }

    #[test]
    fn tetrahedral_preset() {
        let t = TilingDensity::preset(Preset::Tetrahedral);
        assert!(t.euler_sum().is_zero());
        assert_eq!(tiling_fatness(&t), ratio(19, 7));
        let phi = densities(&t);
        assert!(phi.iter().all(|x| x.is_positive() && *x <= ratio(1, 2)));
    }

    #[test]
    fn genus_pattern() {
        for g in 2..6 {
            let t = TilingDensity::from_ints([1, 2 * g + 1, 2 * g + 1, 1]).unwrap();
            assert_eq!(tiling_fatness(&t), int(2 * g + 1));
        }
    }

    #[test]
    fn schlegel_of_simplex() {
        let host = TilingDensity::preset(Preset::Tetrahedral);
        let out = schlegel_tiling(&host, &FourFlag::new(5, 10, 10, 5, 20)).unwrap();
        // (c0 + c3, c1 + 4 c3, c2 + 6 c3, 4 c3)
        assert_eq!(out.counts, [int(7), int(31), int(48), int(24)]);
    }

    #[test]
    fn schlegel_errors() {
        let host = TilingDensity::preset(Preset::Tetrahedral);
        assert_eq!(
            schlegel_tiling(&host, &FourFlag::new(5, 10, 10, 4, 20)),
            Err(Error::EulerViolation)
        );
        let cubic = TilingDensity::preset(Preset::Cubic);
        assert_eq!(
            schlegel_tiling(&cubic, &FourFlag::new(5, 10, 10, 5, 20)),
            Err(Error::NotTetrahedral)
        );
    }

    #[test]
    fn count_validation() {
        assert_eq!(TilingDensity::from_ints([1, 3, 3, 2]), Err(Error::EulerViolation));
        assert!(TilingDensity::from_ints([0, 3, 3, 0]).is_err());
        let t = TilingDensity::parse_counts("1/2, 3/2, 3/2, 1/2").unwrap();
        assert_eq!(tiling_fatness(&t), int(3));
        assert!(TilingDensity::parse_counts("1,2,3").is_err());
        assert!(TilingDensity::parse_counts("1,2,x,4").is_err());
    }

    #[test]
    fn fat_tiling_examples() {
        assert_eq!(fat_tiling_fatness(5).unwrap(), ratio(14, 3));
        assert_eq!(fat_tiling_fatness(100).unwrap(), ratio(59990, 10195));
        assert!(fat_tiling_fatness(2).is_err());
    }
}
