//! Exact dense univariate polynomial arithmetic over a pluggable
//! coefficient ring.
//!
//! The ring parameter nests: `Poly<Poly<BigInt>>` is the bivariate ring
//! Z[h][S] (outer variable `S`, inner variable `h`) used for the
//! symbolic identity checks. All arithmetic is exact; there is no
//! coefficient overflow by construction.
//!
//! Over the integers the module supplies content/primitive-part
//! normalization, subresultant gcd, squarefree parts, multiply-out
//! verification of claimed factorizations, and (in [`modp`]) mod-p
//! irreducibility certificates. Full rational factorization is out of
//! scope: every factor list in the pipeline is *verified*, not found.

pub mod modp;

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::exactmath::sqrt_rat;

/// Commutative ring with the handful of operations polynomial
/// arithmetic needs. Implemented by `BigInt`, `BigRational`, and by
/// `Poly<R>` itself (which is what makes nesting work).
pub trait Ring: Clone + PartialEq + fmt::Debug {
    fn zero() -> Self;
    fn one() -> Self;
    fn from_i64(n: i64) -> Self;
    fn radd(&self, rhs: &Self) -> Self;
    fn rsub(&self, rhs: &Self) -> Self;
    fn rmul(&self, rhs: &Self) -> Self;
    fn rneg(&self) -> Self;
    fn is_zero(&self) -> bool;
}

impl Ring for BigInt {
    fn zero() -> Self {
        Zero::zero()
    }
    fn one() -> Self {
        One::one()
    }
    fn from_i64(n: i64) -> Self {
        BigInt::from(n)
    }
    fn radd(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn rsub(&self, rhs: &Self) -> Self {
        self - rhs
    }
    fn rmul(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn rneg(&self) -> Self {
        -self
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
}

impl Ring for BigRational {
    fn zero() -> Self {
        Zero::zero()
    }
    fn one() -> Self {
        One::one()
    }
    fn from_i64(n: i64) -> Self {
        BigRational::from_integer(BigInt::from(n))
    }
    fn radd(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn rsub(&self, rhs: &Self) -> Self {
        self - rhs
    }
    fn rmul(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn rneg(&self) -> Self {
        -self
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
}

/// Dense univariate polynomial, coefficients lowest degree first.
/// Invariant: the last stored coefficient is nonzero (zero polynomial
/// stores no coefficients at all).
#[derive(Clone, PartialEq, Eq)]
pub struct Poly<R: Ring> {
    coeffs: Vec<R>,
}

impl<R: Ring> fmt::Debug for Poly<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Poly{:?}", self.coeffs)
    }
}

impl<R: Ring> Poly<R> {
    pub fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Poly::constant(R::one())
    }

    pub fn constant(c: R) -> Self {
        Poly::from_coeffs(vec![c])
    }

    /// The variable itself.
    pub fn var() -> Self {
        Poly::from_coeffs(vec![R::zero(), R::one()])
    }

    pub fn from_coeffs(mut coeffs: Vec<R>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn coeffs(&self) -> &[R] {
        &self.coeffs
    }

    /// Coefficient of `x^i` (zero beyond the stored degree).
    pub fn coeff(&self, i: usize) -> R {
        self.coeffs.get(i).cloned().unwrap_or_else(R::zero)
    }

    pub fn degree(&self) -> Option<usize> {
        if self.coeffs.is_empty() {
            None
        } else {
            Some(self.coeffs.len() - 1)
        }
    }

    pub fn leading(&self) -> Option<&R> {
        self.coeffs.last()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    pub fn add(&self, rhs: &Self) -> Self {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Poly::from_coeffs((0..n).map(|i| self.coeff(i).radd(&rhs.coeff(i))).collect())
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Poly::from_coeffs((0..n).map(|i| self.coeff(i).rsub(&rhs.coeff(i))).collect())
    }

    pub fn neg(&self) -> Self {
        Poly::from_coeffs(self.coeffs.iter().map(|c| c.rneg()).collect())
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero();
        }
        let mut out = vec![R::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] = out[i + j].radd(&a.rmul(b));
            }
        }
        Poly::from_coeffs(out)
    }

    pub fn scale(&self, c: &R) -> Self {
        Poly::from_coeffs(self.coeffs.iter().map(|a| a.rmul(c)).collect())
    }

    pub fn pow(&self, mut n: usize) -> Self {
        let mut base = self.clone();
        let mut acc = Poly::one();
        while n > 0 {
            if n & 1 == 1 {
                acc = acc.mul(&base);
            }
            n >>= 1;
            if n > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    /// Horner evaluation at a ring element.
    pub fn evaluate(&self, x: &R) -> R {
        let mut acc = R::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc.rmul(x).radd(c);
        }
        acc
    }

    /// Substitute another polynomial for the variable.
    pub fn compose(&self, g: &Self) -> Self {
        let mut acc = Poly::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc.mul(g).add(&Poly::constant(c.clone()));
        }
        acc
    }

    pub fn derivative(&self) -> Self {
        if self.coeffs.len() <= 1 {
            return Poly::zero();
        }
        Poly::from_coeffs(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c.rmul(&R::from_i64(i as i64)))
                .collect(),
        )
    }

    pub fn map<S: Ring>(&self, f: impl Fn(&R) -> S) -> Poly<S> {
        Poly::from_coeffs(self.coeffs.iter().map(f).collect())
    }
}

impl<R: Ring> Ring for Poly<R> {
    fn zero() -> Self {
        Poly::zero()
    }
    fn one() -> Self {
        Poly::one()
    }
    fn from_i64(n: i64) -> Self {
        Poly::constant(R::from_i64(n))
    }
    fn radd(&self, rhs: &Self) -> Self {
        self.add(rhs)
    }
    fn rsub(&self, rhs: &Self) -> Self {
        self.sub(rhs)
    }
    fn rmul(&self, rhs: &Self) -> Self {
        self.mul(rhs)
    }
    fn rneg(&self) -> Self {
        self.neg()
    }
    fn is_zero(&self) -> bool {
        Poly::is_zero(self)
    }
}

impl<R: Ring> std::ops::Add for &Poly<R> {
    type Output = Poly<R>;
    fn add(self, rhs: Self) -> Poly<R> {
        Poly::add(self, rhs)
    }
}

impl<R: Ring> std::ops::Sub for &Poly<R> {
    type Output = Poly<R>;
    fn sub(self, rhs: Self) -> Poly<R> {
        Poly::sub(self, rhs)
    }
}

impl<R: Ring> std::ops::Mul for &Poly<R> {
    type Output = Poly<R>;
    fn mul(self, rhs: Self) -> Poly<R> {
        Poly::mul(self, rhs)
    }
}

impl<R: Ring> std::ops::Neg for &Poly<R> {
    type Output = Poly<R>;
    fn neg(self) -> Poly<R> {
        Poly::neg(self)
    }
}

pub type IntPoly = Poly<BigInt>;
pub type RatPoly = Poly<BigRational>;
/// Z[h][S]: outer variable S, inner variable h.
pub type BivInt = Poly<Poly<BigInt>>;
/// Q[h][S].
pub type BivRat = Poly<Poly<BigRational>>;

impl IntPoly {
    pub fn from_i64_coeffs(coeffs: &[i64]) -> Self {
        Poly::from_coeffs(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    /// gcd of the coefficients, nonnegative. Zero for the zero polynomial.
    pub fn content(&self) -> BigInt {
        let mut g = BigInt::zero();
        for c in &self.coeffs {
            g = g.gcd(c);
            if g.is_one() {
                break;
            }
        }
        g
    }

    pub fn primitive_part(&self) -> Self {
        if self.is_zero() {
            return Poly::zero();
        }
        let c = self.content();
        Poly::from_coeffs(self.coeffs.iter().map(|a| a / &c).collect())
    }

    /// Primitive part with positive leading coefficient.
    pub fn normalize(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::Domain("normalize of zero polynomial".into()));
        }
        let pp = self.primitive_part();
        if pp.leading().unwrap().is_negative() {
            Ok(pp.neg())
        } else {
            Ok(pp)
        }
    }

    /// Pseudo-remainder: the R with lc(g)^(deg f - deg g + 1) f = q g + R.
    fn pseudo_rem(&self, g: &Self) -> Self {
        let dg = g.degree().expect("pseudo_rem by zero");
        let Some(df) = self.degree() else {
            return Poly::zero();
        };
        if df < dg {
            return self.clone();
        }
        let lg = g.leading().unwrap().clone();
        let mut r = self.clone();
        let mut scale_left = df - dg + 1;
        while let Some(dr) = r.degree() {
            if dr < dg {
                break;
            }
            let lr = r.leading().unwrap().clone();
            let shift = dr - dg;
            // r <- lc(g) * r - lc(r) * x^shift * g
            let mut next = vec![BigInt::zero(); dr + 1];
            for (i, c) in r.coeffs.iter().enumerate() {
                next[i] = c * &lg;
            }
            for (j, c) in g.coeffs.iter().enumerate() {
                next[shift + j] -= c * &lr;
            }
            r = Poly::from_coeffs(next);
            scale_left -= 1;
        }
        if scale_left > 0 {
            let factor = num_traits::pow::pow(lg, scale_left);
            r = r.scale(&factor);
        }
        r
    }

    fn divide_coeffs_exact(&self, d: &BigInt) -> Self {
        Poly::from_coeffs(
            self.coeffs
                .iter()
                .map(|c| {
                    let (q, r) = c.div_rem(d);
                    debug_assert!(r.is_zero(), "non-exact coefficient division");
                    q
                })
                .collect(),
        )
    }

    /// Subresultant PRS gcd, returned with positive leading coefficient.
    /// The content gcd is carried along so this is a true gcd over Z.
    pub fn gcd(&self, other: &Self) -> Self {
        if self.is_zero() {
            return if other.is_zero() {
                Poly::zero()
            } else {
                other.normalize().unwrap().scale(&other.content())
            };
        }
        if other.is_zero() {
            return self.normalize().unwrap().scale(&self.content());
        }
        let content_gcd = self.content().gcd(&other.content());
        let mut a = self.primitive_part();
        let mut b = other.primitive_part();
        if a.degree() < b.degree() {
            std::mem::swap(&mut a, &mut b);
        }
        let mut g = BigInt::one();
        let mut h = BigInt::one();
        loop {
            let delta = a.degree().unwrap() - b.degree().unwrap();
            let r = a.pseudo_rem(&b);
            if r.is_zero() {
                let pp = b.normalize().unwrap();
                return pp.scale(&content_gcd);
            }
            if r.degree() == Some(0) {
                return Poly::constant(content_gcd);
            }
            a = b;
            let divisor = &g * num_traits::pow::pow(h.clone(), delta);
            b = r.divide_coeffs_exact(&divisor);
            g = a.leading().unwrap().clone();
            h = if delta == 0 {
                h
            } else {
                let gd = num_traits::pow::pow(g.clone(), delta);
                let hd = num_traits::pow::pow(h, delta - 1);
                let (q, rem) = gd.div_rem(&hd);
                debug_assert!(rem.is_zero());
                q
            };
        }
    }

    /// Exact division: `Some(q)` iff `self == q * g` over Z.
    pub fn exact_div(&self, g: &Self) -> Option<Self> {
        if g.is_zero() {
            return None;
        }
        if self.is_zero() {
            return Some(Poly::zero());
        }
        let dg = g.degree().unwrap();
        let df = self.degree().unwrap();
        if df < dg {
            return None;
        }
        let lg = g.leading().unwrap();
        let mut rem = self.clone();
        let mut q = vec![BigInt::zero(); df - dg + 1];
        while let Some(dr) = rem.degree() {
            if dr < dg {
                return None;
            }
            let (q0, r) = rem.leading().unwrap().div_rem(lg);
            if !r.is_zero() {
                return None;
            }
            let shift = dr - dg;
            q[shift] = q0.clone();
            let mut next = rem.coeffs.clone();
            for (j, c) in g.coeffs.iter().enumerate() {
                next[shift + j] -= c * &q0;
            }
            rem = Poly::from_coeffs(next);
        }
        Some(Poly::from_coeffs(q))
    }

    pub fn divides(&self, other: &Self) -> bool {
        other.exact_div(self).is_some()
    }

    /// Radical: normalized product of the distinct irreducible factors,
    /// computed as f / gcd(f, f') with a primitive-part cleanup.
    pub fn squarefree_part(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::Domain("squarefree part of zero polynomial".into()));
        }
        if self.is_constant() {
            return Ok(Poly::one());
        }
        let pp = self.normalize()?;
        let g = pp.gcd(&pp.derivative());
        let rad = pp
            .exact_div(&g)
            .expect("gcd(f, f') divides f");
        rad.normalize()
    }

    pub fn is_squarefree(&self) -> bool {
        !self.is_zero() && self.gcd(&self.derivative()).is_constant()
    }

    pub fn to_rational(&self) -> RatPoly {
        self.map(|c| BigRational::from_integer(c.clone()))
    }

    pub fn evaluate_rat(&self, x: &BigRational) -> BigRational {
        self.to_rational().evaluate(x)
    }
}

impl RatPoly {
    /// Exact polynomial square root over Q, if one exists.
    ///
    /// Solves for the candidate root from the top coefficients down,
    /// then verifies by multiplying out.
    pub fn sqrt_exact(&self) -> Option<RatPoly> {
        if self.is_zero() {
            return Some(Poly::zero());
        }
        let n = self.degree().unwrap();
        if n % 2 != 0 {
            return None;
        }
        let m = n / 2;
        let w_top = sqrt_rat(self.leading().unwrap())?;
        if w_top.is_zero() {
            return None;
        }
        let mut w = vec![BigRational::zero(); m + 1];
        w[m] = w_top;
        let two_lead = w[m].radd(&w[m]);
        for k in 1..=m {
            // Coefficient of x^(2m-k) in w^2 must match; the only unknown
            // term there is 2 * w[m] * w[m-k].
            let t = 2 * m - k;
            let mut s = BigRational::zero();
            for i in (m - k + 1)..=m {
                if t < i {
                    continue;
                }
                let j = t - i;
                if j > m || j <= m - k {
                    continue;
                }
                s = s.radd(&w[i].rmul(&w[j]));
            }
            w[m - k] = self.coeff(t).rsub(&s) / &two_lead;
        }
        let cand = Poly::from_coeffs(w);
        if cand.mul(&cand) == *self {
            Some(cand)
        } else {
            None
        }
    }

    pub fn is_square(&self) -> bool {
        self.sqrt_exact().is_some()
    }

    /// True iff every coefficient is an integer.
    pub fn has_integer_coeffs(&self) -> bool {
        self.coeffs().iter().all(|c| c.denom().is_one())
    }

    pub fn to_integer_poly(&self) -> Option<IntPoly> {
        if !self.has_integer_coeffs() {
            return None;
        }
        Some(self.map(|c| c.numer().clone()))
    }
}

/// A claimed factorization `unit * prod factors[i]^mult[i]`.
#[derive(Debug, Clone)]
pub struct FactorClaim {
    pub unit: BigInt,
    pub factors: Vec<(IntPoly, u32)>,
}

impl FactorClaim {
    pub fn new(unit: BigInt, factors: Vec<(IntPoly, u32)>) -> Result<Self> {
        if factors.iter().any(|(_, m)| *m == 0) {
            return Err(Error::Domain("factor multiplicity must be >= 1".into()));
        }
        let mut seen: Vec<&IntPoly> = Vec::new();
        for (f, _) in &factors {
            if seen.iter().any(|g| **g == *f) {
                return Err(Error::Domain("duplicate factor in claim".into()));
            }
            seen.push(f);
        }
        Ok(FactorClaim { unit, factors })
    }

    pub fn product(&self) -> IntPoly {
        let mut acc = Poly::constant(self.unit.clone());
        for (f, m) in &self.factors {
            acc = acc.mul(&f.pow(*m as usize));
        }
        acc
    }
}

/// Multiply the claim out and compare coefficient-by-coefficient.
pub fn verify_factorization(f: &IntPoly, claim: &FactorClaim) -> bool {
    !f.is_zero() && claim.product() == *f
}

fn term_text(coeff: &str, var: &str, power: usize) -> String {
    match power {
        0 => coeff.to_string(),
        1 if coeff == "1" => var.to_string(),
        1 => format!("{coeff}*{var}"),
        _ if coeff == "1" => format!("{var}^{power}"),
        _ => format!("{coeff}*{var}^{power}"),
    }
}

/// Canonical text form, highest degree first: `c_k*S^k + ... + c_0`.
pub fn int_poly_text(f: &IntPoly, var: &str) -> String {
    if f.is_zero() {
        return "0".to_string();
    }
    let mut out = String::new();
    for (i, c) in f.coeffs().iter().enumerate().rev() {
        if c.is_zero() {
            continue;
        }
        let mag = c.abs().to_string();
        if out.is_empty() {
            if c.is_negative() {
                out.push('-');
            }
        } else if c.is_negative() {
            out.push_str(" - ");
        } else {
            out.push_str(" + ");
        }
        out.push_str(&term_text(&mag, var, i));
    }
    out
}

pub fn rat_poly_text(f: &RatPoly, var: &str) -> String {
    if f.is_zero() {
        return "0".to_string();
    }
    let mut out = String::new();
    for (i, c) in f.coeffs().iter().enumerate().rev() {
        if c.is_zero() {
            continue;
        }
        let mag = {
            let a = c.abs();
            if a.denom().is_one() {
                a.numer().to_string()
            } else {
                format!("{}/{}", a.numer(), a.denom())
            }
        };
        if out.is_empty() {
            if c.is_negative() {
                out.push('-');
            }
        } else if c.is_negative() {
            out.push_str(" - ");
        } else {
            out.push_str(" + ");
        }
        out.push_str(&term_text(&mag, var, i));
    }
    out
}

/// Text form for Z[h][S] polynomials: inner coefficients in parentheses.
pub fn biv_poly_text(f: &BivInt, outer: &str, inner: &str) -> String {
    if f.is_zero() {
        return "0".to_string();
    }
    let mut terms = Vec::new();
    for (i, c) in f.coeffs().iter().enumerate().rev() {
        if c.is_zero() {
            continue;
        }
        let inner_text = int_poly_text(c, inner);
        let coeff = if c.is_constant() {
            inner_text
        } else {
            format!("({inner_text})")
        };
        terms.push(term_text(&coeff, outer, i));
    }
    terms.join(" + ")
}

impl fmt::Display for Poly<BigInt> {
    fmt_display_via!(int_poly_text, "S");
}

macro_rules! noop {
    () => {};
}
noop!();

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn p(coeffs: &[i64]) -> IntPoly {
        IntPoly::from_i64_coeffs(coeffs)
    }

    #[test]
    fn evaluate_example() {
        // S^5 + 10 S^3 + 5 S at S = 1
        let f = p(&[0, 5, 0, 10, 0, 1]);
        assert_eq!(f.evaluate(&BigInt::from(1)), BigInt::from(16));
    }

    #[test]
    fn derivative_power_rule() {
        assert_eq!(p(&[0, 0, 1]).derivative(), p(&[0, 2]));
    }

    #[test]
    fn compose_binomial() {
        // (S + 30)^2 = S^2 + 60 S + 900
        let sq = p(&[0, 0, 1]);
        let shift = p(&[30, 1]);
        assert_eq!(sq.compose(&shift), p(&[900, 60, 1]));
    }

    #[test]
    fn normalize_examples() {
        assert_eq!(p(&[-60, -2]).normalize().unwrap(), p(&[30, 1]));
        assert_eq!(p(&[0, 1]).normalize().unwrap(), p(&[0, 1]));
        assert_eq!(
            IntPoly::from_coeffs(vec![
                BigInt::zero(),
                BigInt::zero(),
                BigInt::from(12960000)
            ])
            .normalize()
            .unwrap(),
            p(&[0, 0, 1])
        );
        assert!(IntPoly::zero().normalize().is_err());
    }

    #[test]
    fn squarefree_part_examples() {
        // S^2 (S + 30) -> S (S + 30)
        let f = p(&[0, 0, 1]).mul(&p(&[30, 1]));
        let f2 = p(&[0, 1]).pow(2).mul(&p(&[30, 1]));
        assert_eq!(f2.squarefree_part().unwrap(), f);
        assert_eq!(p(&[30, 1]).squarefree_part().unwrap(), p(&[30, 1]));
        assert!(IntPoly::zero().squarefree_part().is_err());
    }

    #[test]
    fn gcd_shared_factor() {
        let d = p(&[7, 3, 1]);
        let f = d.mul(&p(&[1, 1]));
        let g = d.mul(&p(&[-2, 5]));
        assert_eq!(f.gcd(&g), d);
    }

    #[test]
    fn gcd_coprime_is_constant() {
        let f = p(&[1, 1]);
        let g = p(&[2, 1]);
        assert_eq!(f.gcd(&g), IntPoly::one());
    }

    #[test]
    fn exact_div_round_trip() {
        let f = p(&[3, 1]).mul(&p(&[-4, 0, 2]));
        assert_eq!(f.exact_div(&p(&[3, 1])).unwrap(), p(&[-4, 0, 2]));
        assert!(p(&[1, 1]).exact_div(&p(&[0, 2])).is_none());
    }

    #[test]
    fn verify_factorization_detects_mismatch() {
        let f = p(&[0, 6, 6]); // 6 S (S + 1)
        let good = FactorClaim::new(
            BigInt::from(6),
            vec![(p(&[0, 1]), 1), (p(&[1, 1]), 1)],
        )
        .unwrap();
        let bad = FactorClaim::new(
            BigInt::from(6),
            vec![(p(&[0, 1]), 1), (p(&[2, 1]), 1)],
        )
        .unwrap();
        assert!(verify_factorization(&f, &good));
        assert!(!verify_factorization(&f, &bad));
    }

    #[test]
    fn rational_sqrt_detects_squares() {
        let w = p(&[1, 2, 3]).to_rational();
        let sq = w.mul(&w);
        assert_eq!(sq.sqrt_exact(), Some(w));
        assert!(!p(&[0, 1]).to_rational().is_square());
        // 4 S^2 is a square, 3 S^2 is not (over Q).
        assert!(p(&[0, 0, 4]).to_rational().is_square());
        assert!(!p(&[0, 0, 3]).to_rational().is_square());
        assert!(!p(&[0, 100, 100]).to_rational().is_square());
    }

    #[test]
    fn nested_bivariate_evaluation_consistency() {
        // (S + h)^3 evaluated at h = 30 equals (S + 30)^3 built directly.
        let t: BivInt = Poly::from_coeffs(vec![Poly::var(), Poly::one()]);
        let t3 = t.pow(3);
        let at30 = t3.map(|c: &IntPoly| c.evaluate(&BigInt::from(30)));
        assert_eq!(at30, p(&[30, 1]).pow(3));
    }

    #[test]
    fn text_form() {
        assert_eq!(int_poly_text(&p(&[-60, -2]), "S"), "-2*S - 60");
        assert_eq!(int_poly_text(&p(&[900, 60, 1]), "S"), "S^2 + 60*S + 900");
        assert_eq!(int_poly_text(&IntPoly::zero(), "S"), "0");
        assert_eq!(int_poly_text(&p(&[0, 1]), "S"), "S");
    }

    fn small_poly() -> impl Strategy<Value = IntPoly> {
        proptest::collection::vec(-20i64..=20, 0..6).prop_map(|v| IntPoly::from_i64_coeffs(&v))
    }

    proptest! {
        #[test]
        fn ring_distributivity(f in small_poly(), g in small_poly(), h in small_poly()) {
            let lhs = f.add(&g).mul(&h);
            let rhs = f.mul(&h).add(&g.mul(&h));
            prop_assert_eq!(lhs, rhs);
        }

        #[test]
        fn evaluation_is_ring_homomorphism(f in small_poly(), g in small_poly(), x in -50i64..=50) {
            let x = BigInt::from(x);
            prop_assert_eq!(f.mul(&g).evaluate(&x), f.evaluate(&x) * g.evaluate(&x));
            prop_assert_eq!(f.add(&g).evaluate(&x), f.evaluate(&x) + g.evaluate(&x));
        }

        #[test]
        fn gcd_divides_both(f in small_poly(), g in small_poly()) {
            prop_assume!(!f.is_zero() && !g.is_zero());
            let d = f.gcd(&g);
            prop_assert!(d.divides(&f));
            prop_assert!(d.divides(&g));
        }

        #[test]
        fn squarefree_part_is_squarefree(f in small_poly()) {
            prop_assume!(!f.is_zero());
            let r = f.squarefree_part().unwrap();
            prop_assert!(r.is_squarefree());
            prop_assert!(r.divides(&f.normalize().unwrap()) || f.is_constant());
        }
    }
}
