//! Flag-vectors, the condensed 4-dimensional flag-vector and the density
//! parameters built from it.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::lattice::FaceLattice;
use crate::rational::{int, Rational};

/// Flag numbers `f_S` for all `S ⊆ {0, …, d-1}`, indexed by bitmask
/// (bit `i` set when dimension `i` is in `S`).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FlagVector {
    d: usize,
    entries: Vec<BigInt>,
}

impl FlagVector {
    pub fn new(d: usize, entries: Vec<BigInt>) -> Self {
        assert_eq!(entries.len(), 1 << d, "flag-vector needs 2^d entries");
        FlagVector { d, entries }
    }

    pub fn dim(&self) -> usize {
        self.d
    }

    /// `f_S` for the dimensions in `s`.
    pub fn get(&self, s: &[usize]) -> &BigInt {
        &self.entries[mask(s)]
    }

    pub fn by_mask(&self, m: usize) -> &BigInt {
        &self.entries[m]
    }

    /// `(f_0, …, f_{d-1})`.
    pub fn f_vector(&self) -> FVector {
        FVector((0..self.d).map(|i| self.entries[1 << i].clone()).collect())
    }

    /// JSON form `{"d": d, "entries": {"": 1, "0": f0, "03": f03, …}}`.
    pub fn to_json(&self) -> serde_json::Value {
        let mut entries = serde_json::Map::new();
        for m in 0..self.entries.len() {
            let n: serde_json::Number = self.entries[m]
                .to_string()
                .parse()
                .expect("integer literal");
            entries.insert(subset_key(m), serde_json::Value::Number(n));
        }
        serde_json::json!({ "d": self.d, "entries": entries })
    }

    pub fn from_json(v: &serde_json::Value) -> Result<Self> {
        let bad = |m: &str| Error::Parse {
            line: 0,
            column: 0,
            message: m.to_string(),
        };
        let d = v
            .get("d")
            .and_then(|d| d.as_u64())
            .ok_or_else(|| bad("missing \"d\""))? as usize;
        if d > 16 {
            return Err(bad("dimension too large"));
        }
        let map = v
            .get("entries")
            .and_then(|e| e.as_object())
            .ok_or_else(|| bad("missing \"entries\""))?;
        let mut entries = vec![None; 1 << d];
        for (k, val) in map {
            let m = parse_subset_key(k, d).ok_or_else(|| bad(&format!("bad subset key {k:?}")))?;
            let n: BigInt = val
                .to_string()
                .parse()
                .map_err(|_| bad(&format!("entry {k:?} is not an integer")))?;
            entries[m] = Some(n);
        }
        let entries = entries
            .into_iter()
            .enumerate()
            .map(|(m, e)| e.ok_or_else(|| bad(&format!("missing entry {:?}", subset_key(m)))))
            .collect::<Result<Vec<_>>>()?;
        Ok(FlagVector { d, entries })
    }
}

fn mask(s: &[usize]) -> usize {
    s.iter().fold(0, |m, &i| m | (1 << i))
}

/// Sorted digit string of a subset mask, e.g. `0b1001 -> "03"`.
pub fn subset_key(m: usize) -> String {
    (0..usize::BITS as usize)
        .filter(|i| m & (1 << i) != 0)
        .map(|i| char::from_digit(i as u32, 16).expect("small dimension"))
        .collect()
}

fn parse_subset_key(k: &str, d: usize) -> Option<usize> {
    let mut m = 0usize;
    let mut last: Option<u32> = None;
    for c in k.chars() {
        let i = c.to_digit(16)?;
        if i as usize >= d || last.is_some_and(|l| l >= i) {
            return None;
        }
        last = Some(i);
        m |= 1 << i;
    }
    Some(m)
}

/// f-vector `(f_0, …, f_{d-1})`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FVector(pub Vec<BigInt>);

impl FVector {
    pub fn from_ints<I: IntoIterator<Item = i64>>(xs: I) -> Self {
        FVector(xs.into_iter().map(BigInt::from).collect())
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    /// Alternating sum `f_0 - f_1 + f_2 - …`.
    pub fn alternating_sum(&self) -> BigInt {
        self.0
            .iter()
            .enumerate()
            .fold(BigInt::zero(), |acc, (i, f)| if i % 2 == 0 { acc + f } else { acc - f })
    }
}

impl fmt::Display for FVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|x| x.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

impl From<Vec<usize>> for FVector {
    fn from(v: Vec<usize>) -> Self {
        FVector(v.into_iter().map(BigInt::from).collect())
    }
}

/// Euler–Poincaré: `f_0 - f_1 + … + (-1)^(d-1) f_{d-1} = 1 + (-1)^(d-1)`.
pub fn euler_check(f: &FVector, d: usize) -> bool {
    if f.dim() != d {
        return false;
    }
    let rhs = if d % 2 == 1 { 2 } else { 0 };
    f.alternating_sum() == BigInt::from(rhs)
}

/// Flag numbers of a graded lattice of length `d + 1`, by layered chain
/// counting over the order.
pub fn flag_vector(l: &FaceLattice) -> Result<FlagVector> {
    if !l.is_graded() {
        return Err(Error::NotGraded);
    }
    if l.length() < 2 || l.length() > 17 {
        return Err(Error::WrongLength {
            expected: 5,
            found: l.length(),
        });
    }
    let d = l.length() - 1;
    let mut entries = Vec::with_capacity(1 << d);
    for m in 0..1usize << d {
        let ranks: Vec<usize> = (0..d).filter(|i| m & (1 << i) != 0).map(|i| i + 1).collect();
        entries.push(count_chains(l, &ranks));
    }
    Ok(FlagVector { d, entries })
}

// chains with exactly one element of each listed rank (ascending)
fn count_chains(l: &FaceLattice, ranks: &[usize]) -> BigInt {
    let Some((&first, rest)) = ranks.split_first() else {
        return BigInt::one();
    };
    let mut layer: Vec<(usize, BigInt)> = l
        .elements_of_rank(first)
        .iter()
        .map(|&x| (x, BigInt::one()))
        .collect();
    for &r in rest {
        layer = l
            .elements_of_rank(r)
            .iter()
            .map(|&y| {
                let below = l.below(y);
                let c = layer
                    .iter()
                    .filter(|(x, _)| below.contains(*x))
                    .fold(BigInt::zero(), |acc, (_, c)| acc + c);
                (y, c)
            })
            .filter(|(_, c)| !c.is_zero())
            .collect();
    }
    layer.into_iter().map(|(_, c)| c).sum()
}

/// Condensed flag-vector `(f0, f1, f2, f3; f03)` of a 4-dimensional object.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FourFlag {
    pub f0: BigInt,
    pub f1: BigInt,
    pub f2: BigInt,
    pub f3: BigInt,
    pub f03: BigInt,
}

impl FourFlag {
    pub fn new(
        f0: impl Into<BigInt>,
        f1: impl Into<BigInt>,
        f2: impl Into<BigInt>,
        f3: impl Into<BigInt>,
        f03: impl Into<BigInt>,
    ) -> Self {
        FourFlag {
            f0: f0.into(),
            f1: f1.into(),
            f2: f2.into(),
            f3: f3.into(),
            f03: f03.into(),
        }
    }

    /// Flag-vector of the polar dual: `(f3, f2, f1, f0; f03)`.
    pub fn dual(&self) -> Self {
        FourFlag {
            f0: self.f3.clone(),
            f1: self.f2.clone(),
            f2: self.f1.clone(),
            f3: self.f0.clone(),
            f03: self.f03.clone(),
        }
    }

    pub fn f_vector(&self) -> FVector {
        FVector(vec![
            self.f0.clone(),
            self.f1.clone(),
            self.f2.clone(),
            self.f3.clone(),
        ])
    }

    pub fn satisfies_euler(&self) -> bool {
        euler_check(&self.f_vector(), 4)
    }

    /// Multiplies every entry by `k`.
    pub fn scaled(&self, k: &BigInt) -> Self {
        FourFlag {
            f0: &self.f0 * k,
            f1: &self.f1 * k,
            f2: &self.f2 * k,
            f3: &self.f3 * k,
            f03: &self.f03 * k,
        }
    }
}

impl fmt::Display for FourFlag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{},{},{},{};{}", self.f0, self.f1, self.f2, self.f3, self.f03)
    }
}

impl FromStr for FourFlag {
    type Err = Error;

    /// Parses `"f0,f1,f2,f3;f03"`.
    fn from_str(s: &str) -> Result<Self> {
        let err = |column: usize, message: String| Error::Parse {
            line: 1,
            column,
            message,
        };
        let s = s.trim();
        let (fs, f03) = s
            .split_once(';')
            .ok_or_else(|| err(1, "expected \"f0,f1,f2,f3;f03\"".into()))?;
        let parts: Vec<&str> = fs.split(',').collect();
        if parts.len() != 4 {
            return Err(err(1, format!("expected 4 face numbers, found {}", parts.len())));
        }
        let mut vals = Vec::with_capacity(5);
        let mut column = 1;
        for p in parts.iter().chain(std::iter::once(&f03)) {
            let v: BigInt = p
                .trim()
                .parse()
                .map_err(|_| err(column, format!("not an integer: {p:?}")))?;
            if v.is_negative() {
                return Err(err(column, format!("negative face number {v}")));
            }
            vals.push(v);
            column += p.len() + 1;
        }
        let f03 = vals.pop().expect("five values");
        let f3 = vals.pop().expect("five values");
        let f2 = vals.pop().expect("five values");
        let f1 = vals.pop().expect("five values");
        let f0 = vals.pop().expect("five values");
        Ok(FourFlag { f0, f1, f2, f3, f03 })
    }
}

/// `(f0, f1, f2, f3; f03)` of a flag-vector with `d = 4`.
pub fn four_flag(fv: &FlagVector) -> Result<FourFlag> {
    if fv.d != 4 {
        return Err(Error::WrongLength {
            expected: 5,
            found: fv.d + 1,
        });
    }
    Ok(FourFlag {
        f0: fv.get(&[0]).clone(),
        f1: fv.get(&[1]).clone(),
        f2: fv.get(&[2]).clone(),
        f3: fv.get(&[3]).clone(),
        f03: fv.get(&[0, 3]).clone(),
    })
}

/// Condensed flag-vector of a length-5 lattice.
pub fn four_flag_of(l: &FaceLattice) -> Result<FourFlag> {
    if l.length() != 5 {
        return Err(Error::WrongLength {
            expected: 5,
            found: l.length(),
        });
    }
    four_flag(&flag_vector(l)?)
}

/// Full flag-vector determined by `(f0, f1, f2, f3; f03)` through the
/// generalized Dehn–Sommerville relations for `d = 4`.
///
/// Every edge has two vertices and every ridge lies in two facets, so
/// `f01 = 2 f1`, `f23 = 2 f2`. Euler's relation on vertex figures gives
/// `f02 = f03 + 2 f1 - 2 f0`, and on facets `f13 = f03 + 2 f2 - 2 f3`; the
/// two agree under `f0 - f1 + f2 - f3 = 0`, and polygons give `f12 = f02`.
/// Every three-element chain extends in exactly two ways inside a rank-2
/// interval, so all `|S| = 3` entries equal `2 f02` and `f0123 = 4 f02`.
pub fn expand_four_flag(q: &FourFlag) -> Result<FlagVector> {
    if !q.satisfies_euler() {
        return Err(Error::EulerViolation);
    }
    let two = BigInt::from(2);
    let f02 = &q.f03 + &two * &q.f1 - &two * &q.f0;
    let f13 = &q.f03 + &two * &q.f2 - &two * &q.f3;
    debug_assert_eq!(f02, f13);
    let mut e: BTreeMap<&[usize], BigInt> = BTreeMap::new();
    e.insert(&[], BigInt::one());
    e.insert(&[0], q.f0.clone());
    e.insert(&[1], q.f1.clone());
    e.insert(&[2], q.f2.clone());
    e.insert(&[3], q.f3.clone());
    e.insert(&[0, 1], &two * &q.f1);
    e.insert(&[0, 2], f02.clone());
    e.insert(&[0, 3], q.f03.clone());
    e.insert(&[1, 2], f02.clone());
    e.insert(&[1, 3], f13.clone());
    e.insert(&[2, 3], &two * &q.f2);
    e.insert(&[0, 1, 2], &two * &f02);
    e.insert(&[0, 1, 3], &two * &f13);
    e.insert(&[0, 2, 3], &two * &f02);
    e.insert(&[1, 2, 3], &two * &f13);
    e.insert(&[0, 1, 2, 3], BigInt::from(4) * &f02);
    let mut entries = vec![BigInt::zero(); 16];
    for (s, v) in e {
        entries[mask(s)] = v;
    }
    Ok(FlagVector { d: 4, entries })
}

fn normalized_density(num: BigInt, den: BigInt) -> Result<Rational> {
    if den.is_zero() {
        return Err(Error::SimplexDegenerate);
    }
    Ok(Rational::new(num, den))
}

/// `(f1 + f2 - 20) / (f0 + f3 - 10)`.
pub fn fatness(q: &FourFlag) -> Result<Rational> {
    normalized_density(
        &q.f1 + &q.f2 - 20,
        &q.f0 + &q.f3 - 10,
    )
}

/// `(f03 - 20) / (f0 + f3 - 10)`.
pub fn complexity(q: &FourFlag) -> Result<Rational> {
    normalized_density(&q.f03 - 20, &q.f0 + &q.f3 - 10)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Delta0 {
    /// `(f1 - 10) / (f0 - 5)`
    VertexOnly,
    /// `(f1 + 2 f3 - 20) / (f0 + f3 - 10)`
    FacetAugmented,
}

/// Vertex-degree density; equals 2 exactly for simple polytopes.
pub fn delta0(q: &FourFlag, variant: Delta0) -> Result<Rational> {
    match variant {
        Delta0::VertexOnly => normalized_density(&q.f1 - 10, &q.f0 - 5),
        Delta0::FacetAugmented => {
            normalized_density(&q.f1 + BigInt::from(2) * &q.f3 - 20, &q.f0 + &q.f3 - 10)
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Verdict {
    Holds,
    HoldsWithEquality,
    Fails,
}

impl Verdict {
    /// Verdict for `lhs <= rhs`.
    pub fn le(lhs: &Rational, rhs: &Rational) -> Self {
        match lhs.cmp(rhs) {
            std::cmp::Ordering::Less => Verdict::Holds,
            std::cmp::Ordering::Equal => Verdict::HoldsWithEquality,
            std::cmp::Ordering::Greater => Verdict::Fails,
        }
    }

    pub fn ge(lhs: &Rational, rhs: &Rational) -> Self {
        Self::le(rhs, lhs)
    }

    pub fn holds(self) -> bool {
        self != Verdict::Fails
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::Holds => "holds",
            Verdict::HoldsWithEquality => "holds-with-equality",
            Verdict::Fails => "FAILS",
        })
    }
}

/// The known and conjectured inequalities in terms of fatness `F` and
/// complexity `C`. The last two are conjectures and are only evaluated.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct InequalityReport {
    /// `C <= 2F - 2`; equality iff all facets are simple.
    pub complexity_le_2_fatness_minus_2: Verdict,
    /// `F <= 2C - 2`; equality iff 2-simple and 2-simplicial.
    pub fatness_le_2_complexity_minus_2: Verdict,
    /// `C >= 3`.
    pub complexity_ge_3: Verdict,
    /// Conjectured flag inequality `F >= 2C - 5`.
    pub fatness_ge_2_complexity_minus_5: Verdict,
    /// Conjectured (symmetrised) f-vector inequality `F <= 5`.
    pub fatness_le_5: Verdict,
}

pub fn inequality_report(q: &FourFlag) -> Result<InequalityReport> {
    let f = fatness(q)?;
    let c = complexity(q)?;
    let two = int(2);
    Ok(InequalityReport {
        complexity_le_2_fatness_minus_2: Verdict::le(&c, &(&two * &f - int(2))),
        fatness_le_2_complexity_minus_2: Verdict::le(&f, &(&two * &c - int(2))),
        complexity_ge_3: Verdict::ge(&c, &int(3)),
        fatness_ge_2_complexity_minus_5: Verdict::ge(&f, &(&two * &c - int(5))),
        fatness_le_5: Verdict::le(&f, &int(5)),
    })
}
