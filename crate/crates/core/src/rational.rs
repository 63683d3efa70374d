//! Exact rationals and their display forms.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

pub type Rational = BigRational;

pub fn ratio(n: impl Into<BigInt>, d: impl Into<BigInt>) -> Rational {
    BigRational::new(n.into(), d.into())
}

pub fn int(n: impl Into<BigInt>) -> Rational {
    BigRational::from_integer(n.into())
}

/// `p/q` in lowest terms, or `p` for integers.
pub fn exact(r: &Rational) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

// round to the nearest integer, ties to even
fn round_half_even(r: &Rational) -> BigInt {
    let floor = r.floor().to_integer();
    let frac = r - BigRational::from_integer(floor.clone());
    let half = ratio(1, 2);
    if frac > half || (frac == half && floor.is_odd()) {
        floor + 1
    } else {
        floor
    }
}

fn pow10(e: u32) -> BigInt {
    num_traits::pow(BigInt::from(10), e as usize)
}

/// Decimal rendering with `digits` significant digits, rounding half to
/// even. Display only; never used in predicates.
pub fn decimal(r: &Rational, digits: usize) -> String {
    assert!(digits > 0);
    if r.is_zero() {
        return "0".to_string();
    }
    let neg = r.is_negative();
    let a = r.abs();
    // exponent e with 10^e <= a < 10^(e+1)
    let mut e = a.numer().to_string().len() as i64 - a.denom().to_string().len() as i64;
    let ten = int(10);
    let scale_by = |e: i64| -> Rational {
        if e >= 0 {
            int(pow10(e as u32))
        } else {
            BigRational::one() / int(pow10((-e) as u32))
        }
    };
    while a < scale_by(e) {
        e -= 1;
    }
    while a >= scale_by(e) * &ten {
        e += 1;
    }
    let shift = digits as i64 - 1 - e;
    let mut n = round_half_even(&(&a * scale_by(shift)));
    if n == pow10(digits as u32) {
        n /= 10;
        e += 1;
    }
    let ds = n.to_string();
    let point = e + 1; // digits before the decimal point
    let body = if point <= 0 {
        format!("0.{}{}", "0".repeat((-point) as usize), ds)
    } else if point as usize >= ds.len() {
        format!("{}{}", ds, "0".repeat(point as usize - ds.len()))
    } else {
        format!("{}.{}", &ds[..point as usize], &ds[point as usize..])
    };
    if neg {
        format!("-{body}")
    } else {
        body
    }
}
