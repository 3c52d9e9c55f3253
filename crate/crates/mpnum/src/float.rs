//! Binary big-floats: sign-magnitude mantissa times a power of two,
//! normalized to an explicit precision in bits.

use crate::{MpError, Result};
use num_bigint::{BigInt, Sign};
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use std::cmp::Ordering;
use std::fmt;

/// An arbitrary-precision binary float `mant * 2^exp`.
///
/// Invariant: either `mant == 0`, or `2^(prec-1) <= |mant| < 2^prec`.
/// Every value carries its working precision; binary operations produce
/// results at the larger of the two operand precisions, rounded to
/// nearest. Each operation is correct to within one ulp.
#[derive(Clone, PartialEq, Eq)]
pub struct BigFloat {
    mant: BigInt,
    exp: i64,
    prec: u32,
}

impl BigFloat {
    pub fn zero(prec: u32) -> Self {
        BigFloat { mant: BigInt::zero(), exp: 0, prec }
    }

    pub fn one(prec: u32) -> Self {
        Self::from_bigint(&BigInt::one(), prec)
    }

    pub fn from_i64(v: i64, prec: u32) -> Self {
        Self::from_bigint(&BigInt::from(v), prec)
    }

    pub fn from_bigint(v: &BigInt, prec: u32) -> Self {
        Self::normalized(v.clone(), 0, prec)
    }

    /// `num/den` rounded to `prec` bits.
    pub fn from_ratio(num: &BigInt, den: &BigInt, prec: u32) -> Self {
        assert!(!den.is_zero(), "from_ratio: zero denominator");
        if num.is_zero() {
            return Self::zero(prec);
        }
        let shift = prec as i64 + 2 + den.bits() as i64 - num.bits() as i64;
        let scaled = if shift >= 0 { num << shift as u64 } else { num >> (-shift) as u64 };
        let q = rounded_div(&scaled, den);
        Self::normalized(q, -shift, prec)
    }

    pub fn from_rational(r: &BigRational, prec: u32) -> Self {
        Self::from_ratio(r.numer(), r.denom(), prec)
    }

    /// Builds `mant * 2^exp` normalized to `prec` bits.
    pub fn normalized(mant: BigInt, exp: i64, prec: u32) -> Self {
        assert!(prec >= 2, "precision must be at least 2 bits");
        if mant.is_zero() {
            return Self::zero(prec);
        }
        let negative = mant.is_negative();
        let mag = mant.magnitude().clone();
        let bits = mag.bits() as i64;
        let drop = bits - prec as i64;
        let (mut m, mut e) = if drop > 0 {
            let keep = (&mag) >> (drop as u64 - 1);
            let half = num_integer::Integer::is_odd(&keep);
            let mut t = keep >> 1u32;
            if half {
                // round half away from zero
                t += 1u32;
            }
            (t, exp + drop)
        } else {
            (mag << (-drop) as u64, exp + drop)
        };
        // rounding can carry over to prec+1 bits
        if m.bits() as i64 > prec as i64 {
            m >>= 1u32;
            e += 1;
        }
        let signed = BigInt::from_biguint(if negative { Sign::Minus } else { Sign::Plus }, m);
        BigFloat { mant: signed, exp: e, prec }
    }

    pub fn prec(&self) -> u32 {
        self.prec
    }

    pub fn is_zero(&self) -> bool {
        self.mant.is_zero()
    }

    pub fn is_negative(&self) -> bool {
        self.mant.is_negative()
    }

    pub fn is_positive(&self) -> bool {
        self.mant.is_positive()
    }

    /// Exponent of the leading bit: `2^(e-1) <= |x| < 2^e`. Zero gives `i64::MIN`.
    pub fn exponent(&self) -> i64 {
        if self.is_zero() {
            i64::MIN
        } else {
            self.exp + self.prec as i64
        }
    }

    /// Rounds to a new working precision.
    pub fn with_prec(&self, prec: u32) -> Self {
        Self::normalized(self.mant.clone(), self.exp, prec)
    }

    pub fn neg(&self) -> Self {
        BigFloat { mant: -&self.mant, exp: self.exp, prec: self.prec }
    }

    pub fn abs(&self) -> Self {
        BigFloat { mant: self.mant.abs(), exp: self.exp, prec: self.prec }
    }

    /// Exact multiplication by `2^k`.
    pub fn shl(&self, k: i64) -> Self {
        if self.is_zero() {
            self.clone()
        } else {
            BigFloat { mant: self.mant.clone(), exp: self.exp + k, prec: self.prec }
        }
    }

    pub fn add(&self, rhs: &Self) -> Self {
        let prec = self.prec.max(rhs.prec);
        if self.is_zero() {
            return rhs.with_prec(prec);
        }
        if rhs.is_zero() {
            return self.with_prec(prec);
        }
        let (hi, lo) = if self.exp >= rhs.exp { (self, rhs) } else { (rhs, self) };
        let shift = hi.exp - lo.exp;
        // far-separated operands: the small one moves the result by less
        // than half an ulp
        if shift > prec as i64 + 4 {
            return hi.with_prec(prec);
        }
        let m = (&hi.mant << shift as u64) + &lo.mant;
        Self::normalized(m, lo.exp, prec)
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        self.add(&rhs.neg())
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        let prec = self.prec.max(rhs.prec);
        if self.is_zero() || rhs.is_zero() {
            return Self::zero(prec);
        }
        Self::normalized(&self.mant * &rhs.mant, self.exp + rhs.exp, prec)
    }

    pub fn square(&self) -> Self {
        self.mul(self)
    }

    pub fn mul_i64(&self, k: i64) -> Self {
        Self::normalized(&self.mant * k, self.exp, self.prec)
    }

    pub fn div(&self, rhs: &Self) -> Result<Self> {
        let prec = self.prec.max(rhs.prec);
        if rhs.is_zero() {
            return Err(MpError::DivisionByZero);
        }
        if self.is_zero() {
            return Ok(Self::zero(prec));
        }
        let shift = prec as i64 + 2;
        let q = rounded_div(&(&self.mant << shift as u64), &rhs.mant);
        Ok(Self::normalized(q, self.exp - rhs.exp - shift, prec))
    }

    pub fn recip(&self) -> Result<Self> {
        Self::one(self.prec).div(self)
    }

    /// Nearest integer (half rounds away from zero).
    pub fn round(&self) -> BigInt {
        if self.is_zero() {
            return BigInt::zero();
        }
        if self.exp >= 0 {
            return &self.mant << self.exp as u64;
        }
        let shift = (-self.exp) as u64;
        let mag = self.mant.magnitude();
        if shift > mag.bits() + 1 {
            return BigInt::zero();
        }
        let keep = mag >> (shift - 1);
        let half = num_integer::Integer::is_odd(&keep);
        let mut t = keep >> 1u32;
        if half {
            t += 1u32;
        }
        BigInt::from_biguint(self.mant.sign(), t)
    }

    pub fn floor(&self) -> BigInt {
        if self.is_zero() {
            return BigInt::zero();
        }
        if self.exp >= 0 {
            return &self.mant << self.exp as u64;
        }
        let shift = (-self.exp) as u64;
        if shift >= self.mant.bits() + 2 {
            return if self.is_negative() { -BigInt::one() } else { BigInt::zero() };
        }
        // num-bigint shifts negative values arithmetically, which is floor
        &self.mant >> shift
    }

    pub fn cmp_val(&self, rhs: &Self) -> Ordering {
        let d = self.sub(rhs);
        if d.is_zero() {
            Ordering::Equal
        } else if d.is_negative() {
            Ordering::Less
        } else {
            Ordering::Greater
        }
    }

    /// Lossy conversion, saturating on overflow. Handy for step-size estimates.
    pub fn to_f64(&self) -> f64 {
        if self.is_zero() {
            return 0.0;
        }
        let bits = self.mant.bits();
        let top = if bits > 64 { &self.mant >> (bits - 64) } else { self.mant.clone() };
        let e = self.exp + (bits as i64 - top.bits() as i64);
        let t = top.to_f64().unwrap_or(0.0);
        if e > 2000 {
            f64::INFINITY * t.signum()
        } else if e < -2000 {
            0.0
        } else {
            t * 2f64.powi(e as i32)
        }
    }

    /// Decimal string with `digits` significant digits.
    pub fn to_decimal(&self, digits: usize) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        // decimal exponent of leading digit
        let e2 = self.exponent();
        let e10 = ((e2 as f64) * std::f64::consts::LOG10_2).floor() as i64;
        // scaled = round(|x| * 10^(digits-1-e10))
        let k = digits as i64 - 1 - e10;
        let ten = BigInt::from(10u8);
        let mut v = self.abs();
        if k >= 0 {
            v = v.mul(&BigFloat::from_bigint(&ten.pow(k as u32), self.prec + 64));
        } else {
            let d = BigFloat::from_bigint(&ten.pow((-k) as u32), self.prec + 64);
            v = v.div(&d).unwrap();
        }
        let mut int = v.round();
        let mut e10 = e10;
        // rounding may bump a digit count (e.g. 9.99 -> 10.0)
        let lo = ten.pow((digits - 1) as u32);
        let hi = &lo * &ten;
        if int >= hi {
            int = rounded_div(&int, &ten);
            e10 += 1;
        }
        let ds = int.to_string();
        let sign = if self.is_negative() { "-" } else { "" };
        if e10 >= 0 && (e10 as usize) < digits {
            let (a, b) = ds.split_at(e10 as usize + 1);
            if b.is_empty() {
                format!("{sign}{a}")
            } else {
                format!("{sign}{a}.{b}")
            }
        } else if e10 < 0 && e10 > -6 {
            let zeros = "0".repeat((-e10 - 1) as usize);
            format!("{sign}0.{zeros}{ds}")
        } else {
            let (a, b) = ds.split_at(1);
            format!("{sign}{a}.{b}e{e10}")
        }
    }
}

/// Divide with round-half-away-from-zero.
fn rounded_div(num: &BigInt, den: &BigInt) -> BigInt {
    let two = BigInt::from(2u8);
    let (q, r) = num_integer::Integer::div_rem(num, den);
    if (&r * &two).abs() >= den.abs() {
        let bump = if (r.sign() == den.sign()) || r.is_zero() { 1 } else { -1 };
        q + bump
    } else {
        q
    }
}

impl fmt::Debug for BigFloat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BigFloat({} @{}b)", self.to_decimal(20), self.prec)
    }
}

impl fmt::Display for BigFloat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let digits = (self.prec as f64 * std::f64::consts::LOG10_2) as usize;
        write!(f, "{}", self.to_decimal(digits.max(6)))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ratio_round_trip() {
        let x = BigFloat::from_ratio(&BigInt::from(1), &BigInt::from(3), 128);
        let three = BigFloat::from_i64(3, 128);
        let y = x.mul(&three);
        let err = y.sub(&BigFloat::one(128)).abs();
        assert!(err.is_zero() || err.exponent() < -125);
    }

    #[test]
    fn add_far_apart() {
        let big = BigFloat::from_i64(1, 64).shl(100);
        let small = BigFloat::from_i64(1, 64);
        let s = big.add(&small);
        assert_eq!(s.cmp_val(&big), Ordering::Equal);
    }

    #[test]
    fn floor_and_round() {
        let x = BigFloat::from_ratio(&BigInt::from(-7), &BigInt::from(2), 64);
        assert_eq!(x.floor(), BigInt::from(-4));
        let r = x.round();
        assert!(r == BigInt::from(-3) || r == BigInt::from(-4));
        let y = BigFloat::from_ratio(&BigInt::from(7), &BigInt::from(4), 64);
        assert_eq!(y.floor(), BigInt::from(1));
        assert_eq!(y.round(), BigInt::from(2));
    }

    #[test]
    fn decimal_printing() {
        let x = BigFloat::from_ratio(&BigInt::from(1), &BigInt::from(8), 96);
        assert_eq!(x.to_decimal(4), "0.1250");
        let y = BigFloat::from_i64(-1234, 96);
        assert_eq!(y.to_decimal(4), "-1234");
    }
}
