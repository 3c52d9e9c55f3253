//! Complex numbers as pairs of [`BigFloat`]s.

use crate::float::BigFloat;
use crate::funcs::{cos_sin_pi, exp, sqrt};
use crate::{MpError, Result};
use std::fmt;

/// A complex number at explicit binary precision.
#[derive(Clone, PartialEq)]
pub struct BigComplex {
    pub re: BigFloat,
    pub im: BigFloat,
}

impl BigComplex {
    pub fn new(re: BigFloat, im: BigFloat) -> Self {
        BigComplex { re, im }
    }

    pub fn zero(prec: u32) -> Self {
        BigComplex { re: BigFloat::zero(prec), im: BigFloat::zero(prec) }
    }

    pub fn one(prec: u32) -> Self {
        BigComplex { re: BigFloat::one(prec), im: BigFloat::zero(prec) }
    }

    pub fn from_real(re: BigFloat) -> Self {
        let prec = re.prec();
        BigComplex { re, im: BigFloat::zero(prec) }
    }

    pub fn i(prec: u32) -> Self {
        BigComplex { re: BigFloat::zero(prec), im: BigFloat::one(prec) }
    }

    pub fn prec(&self) -> u32 {
        self.re.prec().max(self.im.prec())
    }

    pub fn with_prec(&self, prec: u32) -> Self {
        BigComplex { re: self.re.with_prec(prec), im: self.im.with_prec(prec) }
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    pub fn conj(&self) -> Self {
        BigComplex { re: self.re.clone(), im: self.im.neg() }
    }

    pub fn neg(&self) -> Self {
        BigComplex { re: self.re.neg(), im: self.im.neg() }
    }

    pub fn add(&self, rhs: &Self) -> Self {
        BigComplex { re: self.re.add(&rhs.re), im: self.im.add(&rhs.im) }
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        BigComplex { re: self.re.sub(&rhs.re), im: self.im.sub(&rhs.im) }
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        let re = self.re.mul(&rhs.re).sub(&self.im.mul(&rhs.im));
        let im = self.re.mul(&rhs.im).add(&self.im.mul(&rhs.re));
        BigComplex { re, im }
    }

    pub fn mul_real(&self, rhs: &BigFloat) -> Self {
        BigComplex { re: self.re.mul(rhs), im: self.im.mul(rhs) }
    }

    pub fn mul_i64(&self, k: i64) -> Self {
        BigComplex { re: self.re.mul_i64(k), im: self.im.mul_i64(k) }
    }

    /// Exact multiplication by `2^k`.
    pub fn shl(&self, k: i64) -> Self {
        BigComplex { re: self.re.shl(k), im: self.im.shl(k) }
    }

    /// Multiplication by `i^k`.
    pub fn mul_i_pow(&self, k: u8) -> Self {
        match k % 4 {
            0 => self.clone(),
            1 => BigComplex { re: self.im.neg(), im: self.re.clone() },
            2 => self.neg(),
            _ => BigComplex { re: self.im.clone(), im: self.re.neg() },
        }
    }

    pub fn square(&self) -> Self {
        // (a+bi)^2 = a^2-b^2 + 2abi
        let re = self.re.square().sub(&self.im.square());
        let im = self.re.mul(&self.im).shl(1);
        BigComplex { re, im }
    }

    pub fn norm_sqr(&self) -> BigFloat {
        self.re.square().add(&self.im.square())
    }

    pub fn abs(&self) -> BigFloat {
        sqrt(&self.norm_sqr()).expect("norm is nonnegative")
    }

    /// Exponent of the leading bit of `max(|re|, |im|)`.
    pub fn exponent(&self) -> i64 {
        self.re.exponent().max(self.im.exponent())
    }

    pub fn recip(&self) -> Result<Self> {
        let n = self.norm_sqr();
        if n.is_zero() {
            return Err(MpError::DivisionByZero);
        }
        Ok(BigComplex { re: self.re.div(&n)?, im: self.im.div(&n)?.neg() })
    }

    pub fn div(&self, rhs: &Self) -> Result<Self> {
        Ok(self.mul(&rhs.recip()?))
    }

    pub fn pow_u32(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one(self.prec());
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.square();
            }
        }
        acc
    }

    /// Principal square root: positive real part, and positive imaginary
    /// part on the branch cut.
    pub fn sqrt(&self) -> Self {
        let prec = self.prec();
        if self.is_zero() {
            return Self::zero(prec);
        }
        let r = self.abs();
        // u = sqrt((r + |re|)/2) is the larger of the two parts
        let u = sqrt(&r.add(&self.re.abs()).shl(-1)).expect("nonnegative");
        if self.re.is_negative() {
            // result is v + (sign im) u i, with sign(0) taken positive
            let v = self.im.abs().div(&u.shl(1)).expect("u > 0");
            let im = if self.im.is_negative() { u.neg() } else { u };
            BigComplex { re: v, im }
        } else {
            let v = self.im.div(&u.shl(1)).expect("u > 0");
            BigComplex { re: u, im: v }
        }
    }

    /// `exp(pi * i * z)` — the basic theta-series building block.
    pub fn exp_pi_i(z: &BigComplex) -> Self {
        let (c, s) = cos_sin_pi(&z.re);
        let pi = crate::funcs::pi(z.im.prec());
        let mag = exp(&pi.mul(&z.im).neg());
        BigComplex { re: c.mul(&mag), im: s.mul(&mag) }
    }

    pub fn to_string_digits(&self, digits: usize) -> String {
        let re = self.re.to_decimal(digits);
        if self.im.is_zero() {
            return re;
        }
        if self.im.is_negative() {
            format!("{} - {}*I", re, self.im.neg().to_decimal(digits))
        } else {
            format!("{} + {}*I", re, self.im.to_decimal(digits))
        }
    }
}

impl fmt::Debug for BigComplex {
    fmt_impl!();
}

macro_rules! fmt_impl {
    () => {
        fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
            write!(f, "{}", self.to_string_digits(20))
        }
    };
}
use fmt_impl;

impl fmt::Display for BigComplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let digits = (self.prec() as f64 * std::f64::consts::LOG10_2) as usize;
        write!(f, "{}", self.to_string_digits(digits.max(6)))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    #[test]
    fn mul_div_round_trip() {
        let a = BigComplex::new(BigFloat::from_i64(3, 128), BigFloat::from_i64(-4, 128));
        let b = BigComplex::new(BigFloat::from_i64(1, 128), BigFloat::from_i64(7, 128));
        let c = a.mul(&b).div(&b).unwrap();
        assert!(c.sub(&a).norm_sqr().exponent() < -200);
    }

    #[test]
    fn principal_sqrt() {
        let z = BigComplex::new(BigFloat::from_i64(-5, 128), BigFloat::from_i64(12, 128));
        let r = z.sqrt();
        assert!(!r.re.is_negative());
        assert!(r.square().sub(&z).norm_sqr().exponent() < -200);
        // sqrt(-1) = i
        let m1 = BigComplex::new(BigFloat::from_i64(-1, 128), BigFloat::zero(128));
        let i = m1.sqrt();
        assert!(i.sub(&BigComplex::i(128)).norm_sqr().exponent() < -200);
        // conjugate branch
        let zc = z.conj();
        let rc = zc.sqrt();
        assert!(!rc.re.is_negative());
        assert!(rc.square().sub(&zc).norm_sqr().exponent() < -200);
    }

    #[test]
    fn exp_pi_i_quarter() {
        // exp(pi i / 2) = i
        let z = BigComplex::new(
            BigFloat::from_ratio(&BigInt::from(1), &BigInt::from(2), 160),
            BigFloat::zero(160),
        );
        let e = BigComplex::exp_pi_i(&z);
        assert!(e.sub(&BigComplex::i(160)).norm_sqr().exponent() < -280);
    }
}
