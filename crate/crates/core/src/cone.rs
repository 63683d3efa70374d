//! The pentagon cone of 4-dimensional f-vectors, in homogeneous
//! coordinates `D = f1 + f2 - 20`, `x = f0 - 5`, `y = f3 - 5` with apex at
//! the simplex.

use std::collections::BTreeSet;
use std::fmt;

use num_bigint::BigInt;
use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::flag::{euler_check, FVector};
use crate::rational::Rational;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ConeInequality {
    /// `phi0 + 3 phi3 <= 1`, tight for simplicial polytopes.
    I,
    /// `3 phi0 + phi3 <= 1`, tight for simple polytopes.
    Ii,
    /// `phi0 >= 0`.
    Iii,
    /// `phi3 >= 0`.
    Iv,
    /// `phi0 + phi3 <= 2/5`, tight at fatness 5/2.
    V,
}

impl ConeInequality {
    pub const ALL: [ConeInequality; 5] = [
        ConeInequality::I,
        ConeInequality::Ii,
        ConeInequality::Iii,
        ConeInequality::Iv,
        ConeInequality::V,
    ];

    // slack >= 0 iff the inequality holds; homogeneous in (D, x, y)
    fn slack(self, d: &BigInt, x: &BigInt, y: &BigInt) -> BigInt {
        match self {
            ConeInequality::I => d - x - BigInt::from(3) * y,
            ConeInequality::Ii => d - BigInt::from(3) * x - y,
            ConeInequality::Iii => x.clone(),
            ConeInequality::Iv => y.clone(),
            ConeInequality::V => BigInt::from(2) * d - BigInt::from(5) * (x + y),
        }
    }
}

impl fmt::Display for ConeInequality {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ConeInequality::I => "i",
            ConeInequality::Ii => "ii",
            ConeInequality::Iii => "iii",
            ConeInequality::Iv => "iv",
            ConeInequality::V => "v",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConeReport {
    /// Absent exactly when `degenerate`.
    pub phi0: Option<Rational>,
    pub phi3: Option<Rational>,
    pub inside: bool,
    pub satisfied: BTreeSet<ConeInequality>,
    pub tight: BTreeSet<ConeInequality>,
    /// `f1 + f2 = 20`: the coordinates are undefined.
    pub degenerate: bool,
}

fn check4(f: &FVector) -> Result<()> {
    if f.dim() != 4 {
        return Err(Error::WrongLength {
            expected: 5,
            found: f.dim() + 1,
        });
    }
    Ok(())
}

/// `phi0 = (f0 - 5) / (f1 + f2 - 20)`, `phi3 = (f3 - 5) / (f1 + f2 - 20)`.
pub fn phi_coords(f: &FVector) -> Result<(Rational, Rational)> {
    check4(f)?;
    let d: BigInt = &f.0[1] + &f.0[2] - 20;
    if d.is_zero() {
        return Err(Error::SimplexDegenerate);
    }
    Ok((
        Rational::new(&f.0[0] - 5, d.clone()),
        Rational::new(&f.0[3] - 5, d),
    ))
}

/// Evaluates the five cone inequalities exactly.
///
/// The inequalities are tested in homogeneous form, so the apex (the
/// simplex) is reported as a degenerate point that is inside and tight
/// everywhere rather than as an error.
pub fn cone_classify(f: &FVector) -> Result<ConeReport> {
    check4(f)?;
    if !euler_check(f, 4) {
        return Err(Error::EulerViolation);
    }
    let d = &f.0[1] + &f.0[2] - 20;
    let x = &f.0[0] - 5;
    let y = &f.0[3] - 5;
    let mut satisfied = BTreeSet::new();
    let mut tight = BTreeSet::new();
    for ineq in ConeInequality::ALL {
        let s = ineq.slack(&d, &x, &y);
        if s >= BigInt::zero() {
            satisfied.insert(ineq);
        }
        if s.is_zero() {
            tight.insert(ineq);
        }
    }
    let degenerate = d.is_zero();
    let (phi0, phi3) = match phi_coords(f) {
        Ok((a, b)) => (Some(a), Some(b)),
        Err(_) => (None, None),
    };
    Ok(ConeReport {
        phi0,
        phi3,
        inside: satisfied.len() == 5,
        satisfied,
        tight,
        degenerate,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::ratio;
    use ConeInequality::*;

    fn fv(xs: [i64; 4]) -> FVector {
        FVector::from_ints(xs)
    }

    #[test]
    fn phi_examples() {
        assert_eq!(phi_coords(&fv([6, 15, 18, 9])).unwrap(), (ratio(1, 13), ratio(4, 13)));
        assert_eq!(phi_coords(&fv([16, 32, 24, 8])).unwrap(), (ratio(11, 36), ratio(3, 36)));
        assert_eq!(phi_coords(&fv([5, 10, 10, 5])), Err(Error::SimplexDegenerate));
    }

    #[test]
    fn cyclic_is_tight_on_i() {
        let r = cone_classify(&fv([6, 15, 18, 9])).unwrap();
        assert!(r.inside);
        assert_eq!(r.tight, BTreeSet::from([I]));
    }

    #[test]
    fn cube_is_tight_on_ii() {
        let r = cone_classify(&fv([16, 32, 24, 8])).unwrap();
        assert!(r.inside);
        assert_eq!(r.tight, BTreeSet::from([Ii]));
    }

    #[test]
    fn thin_vector_violates_v() {
        // fatness 60/30 = 2 < 5/2
        let r = cone_classify(&fv([20, 40, 40, 20])).unwrap();
        assert!(!r.inside);
        assert!(!r.satisfied.contains(&V));
        assert_eq!(r.satisfied.len(), 4);
    }

    #[test]
    fn apex_is_degenerate() {
        let r = cone_classify(&fv([5, 10, 10, 5])).unwrap();
        assert!(r.degenerate);
        assert!(r.phi0.is_none() && r.phi3.is_none());
        assert!(r.inside);
        assert_eq!(r.tight.len(), 5);
    }

    #[test]
    fn euler_is_required() {
        assert_eq!(cone_classify(&fv([5, 10, 10, 4])), Err(Error::EulerViolation));
    }
}
