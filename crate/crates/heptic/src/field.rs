//! Exact coefficient fields.
//!
//! All symbolic computation runs over Q(θ) where θ = (1+√7 i)/2, so
//! θ² = θ − 2. The coordinate change to the symmetrical y-frame needs the
//! quadratic extension Q(θ,√3); it is represented as a pair of Q(θ)
//! components. The restricted line map works over Q(√7).

use num_bigint::BigInt;
use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use std::fmt;

pub type Rat = BigRational;

/// Builds the exact rational n/d.
pub fn rat(n: i64, d: i64) -> Rat {
    Rat::new(BigInt::from(n), BigInt::from(d))
}

pub fn rat_int(n: i64) -> Rat {
    Rat::from(BigInt::from(n))
}

pub fn rat_to_f64(r: &Rat) -> f64 {
    // Falls back to a quotient of approximations when the parts overflow f64.
    r.to_f64().unwrap_or_else(|| {
        let n = r.numer().to_f64().unwrap_or(f64::MAX);
        let d = r.denom().to_f64().unwrap_or(f64::MAX);
        n / d
    })
}

/// Field operations shared by every exact coefficient type.
pub trait Coeff:
    Clone + PartialEq + Eq + std::hash::Hash + fmt::Debug + fmt::Display + Send + Sync + 'static
{
    fn zero() -> Self;
    fn one() -> Self;
    fn from_int(n: i64) -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, rhs: &Self) -> Self;
    fn sub(&self, rhs: &Self) -> Self;
    fn mul(&self, rhs: &Self) -> Self;
    fn neg(&self) -> Self;
    /// Multiplicative inverse; `None` for zero.
    fn inv(&self) -> Option<Self>;
    /// Numerical image under θ ↦ (1+√7 i)/2 (and √3 ↦ 1.732… where present).
    fn embed(&self) -> Complex64;

    fn div(&self, rhs: &Self) -> Self {
        self.mul(&rhs.inv().expect("division by zero"))
    }
}

pub const SQRT7: f64 = 2.6457513110645905905;
pub const SQRT3: f64 = 1.7320508075688772935;

/// θ as a complex number.
pub fn theta_c64() -> Complex64 {
    Complex64::new(0.5, 0.5 * SQRT7)
}

// ---------------------------------------------------------------------------
// Q(θ)
// ---------------------------------------------------------------------------

/// Element a + b·θ of Q(θ), with θ² = θ − 2.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct AlgNum {
    pub a: Rat,
    pub b: Rat,
}

impl AlgNum {
    pub fn new(a: Rat, b: Rat) -> Self {
        AlgNum { a, b }
    }

    pub fn from_rat(a: Rat) -> Self {
        AlgNum { a, b: Rat::zero() }
    }

    pub fn theta() -> Self {
        AlgNum { a: Rat::zero(), b: Rat::one() }
    }

    /// a + b·θ from small integers.
    pub fn of(a: i64, b: i64) -> Self {
        AlgNum { a: rat_int(a), b: rat_int(b) }
    }

    pub fn is_rational(&self) -> bool {
        self.b.is_zero()
    }

    /// Field norm a² + ab + 2b² (product with the conjugate over Q).
    fn norm(&self) -> Rat {
        &self.a * &self.a + &self.a * &self.b + rat_int(2) * &self.b * &self.b
    }

    /// Galois conjugate a + b(1−θ).
    pub fn conj(&self) -> Self {
        AlgNum { a: &self.a + &self.b, b: -self.b.clone() }
    }
}

impl Coeff for AlgNum {
    fn zero() -> Self {
        AlgNum { a: Rat::zero(), b: Rat::zero() }
    }
    fn one() -> Self {
        AlgNum { a: Rat::one(), b: Rat::zero() }
    }
    fn from_int(n: i64) -> Self {
        AlgNum { a: rat_int(n), b: Rat::zero() }
    }
    fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }
    fn add(&self, rhs: &Self) -> Self {
        AlgNum { a: &self.a + &rhs.a, b: &self.b + &rhs.b }
    }
    fn sub(&self, rhs: &Self) -> Self {
        AlgNum { a: &self.a - &rhs.a, b: &self.b - &rhs.b }
    }
    fn mul(&self, rhs: &Self) -> Self {
        // (a1 + b1θ)(a2 + b2θ) with θ² = θ − 2.
        let bb = &self.b * &rhs.b;
        AlgNum {
            a: &self.a * &rhs.a - rat_int(2) * &bb,
            b: &self.a * &rhs.b + &self.b * &rhs.a + bb,
        }
    }
    fn neg(&self) -> Self {
        AlgNum { a: -self.a.clone(), b: -self.b.clone() }
    }
    fn inv(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        let n = self.norm();
        Some(AlgNum { a: (&self.a + &self.b) / &n, b: -(&self.b / &n) })
    }
    fn embed(&self) -> Complex64 {
        theta_c64() * rat_to_f64(&self.b) + rat_to_f64(&self.a)
    }
}

impl fmt::Debug for AlgNum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for AlgNum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.b.is_zero() {
            return write!(f, "{}", self.a);
        }
        if self.a.is_zero() {
            return write!(f, "{}t", self.b);
        }
        if self.b.is_negative() {
            write!(f, "{}{}t", self.a, self.b)
        } else {
            write!(f, "{}+{}t", self.a, self.b)
        }
    }
}

// ---------------------------------------------------------------------------
// Q(θ, √3)
// ---------------------------------------------------------------------------

/// Element r + s·√3 with r, s in Q(θ). Used by the y-coordinate transition
/// and everything expressed in the symmetrical frame.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Ext3 {
    pub r: AlgNum,
    pub s: AlgNum,
}

impl Ext3 {
    pub fn new(r: AlgNum, s: AlgNum) -> Self {
        Ext3 { r, s }
    }

    pub fn from_alg(r: AlgNum) -> Self {
        Ext3 { r, s: AlgNum::zero() }
    }

    pub fn sqrt3() -> Self {
        Ext3 { r: AlgNum::zero(), s: AlgNum::one() }
    }

    /// The Q(θ) part when the √3 component vanishes.
    pub fn as_alg(&self) -> Option<AlgNum> {
        if self.s.is_zero() {
            Some(self.r.clone())
        } else {
            None
        }
    }
}

impl Coeff for Ext3 {
    fn zero() -> Self {
        Ext3 { r: AlgNum::zero(), s: AlgNum::zero() }
    }
    fn one() -> Self {
        Ext3 { r: AlgNum::one(), s: AlgNum::zero() }
    }
    fn from_int(n: i64) -> Self {
        Ext3 { r: AlgNum::from_int(n), s: AlgNum::zero() }
    }
    fn is_zero(&self) -> bool {
        self.r.is_zero() && self.s.is_zero()
    }
    fn add(&self, rhs: &Self) -> Self {
        Ext3 { r: self.r.add(&rhs.r), s: self.s.add(&rhs.s) }
    }
    fn sub(&self, rhs: &Self) -> Self {
        Ext3 { r: self.r.sub(&rhs.r), s: self.s.sub(&rhs.s) }
    }
    fn mul(&self, rhs: &Self) -> Self {
        let ss = self.s.mul(&rhs.s);
        Ext3 {
            r: self.r.mul(&rhs.r).add(&ss.mul(&AlgNum::from_int(3))),
            s: self.r.mul(&rhs.s).add(&self.s.mul(&rhs.r)),
        }
    }
    fn neg(&self) -> Self {
        Ext3 { r: self.r.neg(), s: self.s.neg() }
    }
    fn inv(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        // (r − s√3)/(r² − 3s²); the denominator is nonzero since √3 ∉ Q(θ).
        let den = self.r.mul(&self.r).sub(&self.s.mul(&self.s).mul(&AlgNum::from_int(3)));
        let di = den.inv().expect("r^2 - 3 s^2 = 0 for nonzero element");
        Some(Ext3 { r: self.r.mul(&di), s: self.s.neg().mul(&di) })
    }
    fn embed(&self) -> Complex64 {
        self.r.embed() + self.s.embed() * SQRT3
    }
}

impl fmt::Debug for Ext3 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for Ext3 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.s.is_zero() {
            write!(f, "{}", self.r)
        } else if self.r.is_zero() {
            write!(f, "({})r3", self.s)
        } else {
            write!(f, "({})+({})r3", self.r, self.s)
        }
    }
}

// ---------------------------------------------------------------------------
// Q(√7) — coefficients of the restricted line map
// ---------------------------------------------------------------------------

/// Element a + b·√7 with rational parts.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Root7 {
    pub a: Rat,
    pub b: Rat,
}

impl Root7 {
    pub fn of(a: i64, b: i64) -> Self {
        Root7 { a: rat_int(a), b: rat_int(b) }
    }

    pub fn to_f64(&self) -> f64 {
        rat_to_f64(&self.a) + rat_to_f64(&self.b) * SQRT7
    }
}

impl Coeff for Root7 {
    fn zero() -> Self {
        Root7 { a: Rat::zero(), b: Rat::zero() }
    }
    fn one() -> Self {
        Root7 { a: Rat::one(), b: Rat::zero() }
    }
    fn from_int(n: i64) -> Self {
        Root7 { a: rat_int(n), b: Rat::zero() }
    }
    fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }
    fn add(&self, rhs: &Self) -> Self {
        Root7 { a: &self.a + &rhs.a, b: &self.b + &rhs.b }
    }
    fn sub(&self, rhs: &Self) -> Self {
        Root7 { a: &self.a - &rhs.a, b: &self.b - &rhs.b }
    }
    fn mul(&self, rhs: &Self) -> Self {
        Root7 {
            a: &self.a * &rhs.a + rat_int(7) * &self.b * &rhs.b,
            b: &self.a * &rhs.b + &self.b * &rhs.a,
        }
    }
    fn neg(&self) -> Self {
        Root7 { a: -self.a.clone(), b: -self.b.clone() }
    }
    fn inv(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        let n = &self.a * &self.a - rat_int(7) * &self.b * &self.b;
        Some(Root7 { a: &self.a / &n, b: -(&self.b / &n) })
    }
    fn embed(&self) -> Complex64 {
        Complex64::new(self.to_f64(), 0.0)
    }
}

impl fmt::Debug for Root7 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for Root7 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.b.is_zero() {
            write!(f, "{}", self.a)
        } else {
            write!(f, "{}+{}s", self.a, self.b)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn theta_squared_reduces() {
        let t = AlgNum::theta();
        // θ·θ = θ − 2
        assert_eq!(t.mul(&t), AlgNum::of(-2, 1));
        // (1+θ)(1−θ) = 3 − θ
        let p = AlgNum::of(1, 1).mul(&AlgNum::of(1, -1));
        assert_eq!(p, AlgNum::of(3, -1));
        // θ³ = −θ − 2
        let t3 = t.mul(&t).mul(&t);
        assert_eq!(t3, AlgNum::of(-2, -1));
    }

    #[test]
    fn inverse_roundtrip() {
        let x = AlgNum::new(rat(3, 7), rat(-5, 2));
        let y = x.inv().unwrap();
        assert_eq!(x.mul(&y), AlgNum::one());
        assert!(AlgNum::zero().inv().is_none());
    }

    #[test]
    fn embedding_is_multiplicative() {
        let x = AlgNum::of(2, 3);
        let y = AlgNum::of(-1, 5);
        let lhs = x.mul(&y).embed();
        let rhs = x.embed() * y.embed();
        assert!((lhs - rhs).norm() < 1e-12);
    }

    #[test]
    fn ext3_field_ops() {
        let x = Ext3::new(AlgNum::of(1, 2), AlgNum::of(0, -1));
        let y = x.inv().unwrap();
        assert_eq!(x.mul(&y), Ext3::one());
        let s3 = Ext3::sqrt3();
        assert_eq!(s3.mul(&s3), Ext3::from_int(3));
        assert!((s3.embed().re - SQRT3).abs() < 1e-15);
    }

    #[test]
    fn root7_ops() {
        let s = Root7::of(0, 1);
        assert_eq!(s.mul(&s), Root7::of(7, 0));
        let x = Root7::of(3, -1);
        assert_eq!(x.mul(&x.inv().unwrap()), Root7::one());
    }
}
