//! Arbitrary-precision scalars and exact square detection.
//!
//! Everything downstream (slice scanning, specialization screening, the
//! genus-two point search) funnels its square tests through this module,
//! so the perfect-square path carries a quadratic-residue pre-filter: a
//! candidate is reduced mod 64, 63, 65 and 11 and rejected by table
//! lookup before any big-integer root is taken. Fewer than 1% of uniform
//! non-squares survive the four tables.

use std::sync::LazyLock;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Reduced rational with positive denominator (the `num-rational`
/// invariants match what the square test below assumes).
pub type BigRat = BigRational;

/// Outcome of [`isqrt`]: the floor root and whether it is exact.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Isqrt {
    pub root: BigInt,
    pub exact: bool,
}

/// Floor integer square root of a nonnegative integer.
///
/// Errors on negative input; `isqrt(0) = (0, exact)`.
pub fn isqrt(n: &BigInt) -> Result<Isqrt> {
    if n.is_negative() {
        return Err(Error::Domain(format!("isqrt of negative value {n}")));
    }
    let root = n.sqrt();
    let exact = &root * &root == *n;
    Ok(Isqrt { root, exact })
}

struct SquareTables {
    m64: [bool; 64],
    m63: [bool; 63],
    m65: [bool; 65],
    m11: [bool; 11],
}

const PREFILTER_MODULUS: u32 = 64 * 63 * 65 * 11;

static SQUARE_TABLES: LazyLock<SquareTables> = LazyLock::new(|| {
    let mut t = SquareTables {
        m64: [false; 64],
        m63: [false; 63],
        m65: [false; 65],
        m11: [false; 11],
    };
    for x in 0u64..64 {
        t.m64[((x * x) % 64) as usize] = true;
    }
    for x in 0u64..63 {
        t.m63[((x * x) % 63) as usize] = true;
    }
    for x in 0u64..65 {
        t.m65[((x * x) % 65) as usize] = true;
    }
    for x in 0u64..11 {
        t.m11[((x * x) % 11) as usize] = true;
    }
    t
});

fn passes_residue_filter(n: &BigInt) -> bool {
    let r = (n % PREFILTER_MODULUS)
        .to_u32()
        .expect("residue fits in u32");
    let t = &*SQUARE_TABLES;
    t.m64[(r % 64) as usize]
        && t.m63[(r % 63) as usize]
        && t.m65[(r % 65) as usize]
        && t.m11[(r % 11) as usize]
}

/// Returns `Some(r)` with `r*r == n` iff `n` is a perfect square.
pub fn perfect_sqrt(n: &BigInt) -> Option<BigInt> {
    if n.is_negative() {
        return None;
    }
    if !passes_residue_filter(n) {
        return None;
    }
    let root = n.sqrt();
    if &root * &root == *n {
        Some(root)
    } else {
        None
    }
}

pub fn is_perfect_square(n: &BigInt) -> bool {
    perfect_sqrt(n).is_some()
}

/// Is `q` the square of a rational number?
///
/// Zero is a square, negatives are not, and otherwise the reduced
/// numerator and denominator must both be perfect squares.
pub fn is_square_rat(q: &BigRat) -> bool {
    if q.is_zero() {
        return true;
    }
    if q.is_negative() {
        return false;
    }
    is_perfect_square(q.numer()) && is_perfect_square(q.denom())
}

/// Rational square root, when one exists.
pub fn sqrt_rat(q: &BigRat) -> Option<BigRat> {
    if q.is_zero() {
        return Some(BigRat::zero());
    }
    if q.is_negative() {
        return None;
    }
    let num = perfect_sqrt(q.numer())?;
    let den = perfect_sqrt(q.denom())?;
    Some(BigRat::new(num, den))
}

pub fn bigint(n: i64) -> BigInt {
    BigInt::from(n)
}

pub fn bigrat(n: i64, d: i64) -> BigRat {
    BigRat::new(BigInt::from(n), BigInt::from(d))
}
