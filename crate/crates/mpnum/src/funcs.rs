//! Elementary functions at arbitrary precision: pi, exp, sin/cos of
//! pi-multiples, and square roots. Enough for theta series and field
//! embeddings; no attempt at a full libm.

use crate::float::BigFloat;
use crate::{MpError, Result};
use num_bigint::{BigInt, BigUint};
use num_traits::{Signed, Zero};
use std::collections::HashMap;
use std::sync::Mutex;
use std::sync::OnceLock;

fn pi_cache() -> &'static Mutex<HashMap<u32, BigInt>> {
    static CACHE: OnceLock<Mutex<HashMap<u32, BigInt>>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

/// `atan(1/x)` as a fixed-point integer scaled by `2^scale`.
pub fn atan_inv_u32(x: u32, scale: u32) -> BigInt {
    let x2 = BigInt::from(x) * BigInt::from(x);
    let mut xpow = BigInt::from(x);
    let mut k = 0u32;
    let mut sum = BigInt::zero();
    let unit = BigInt::from(1u8) << scale;
    loop {
        let term = &unit / (&xpow * (2 * k + 1));
        if term.is_zero() {
            break;
        }
        if k % 2 == 0 {
            sum += term;
        } else {
            sum -= term;
        }
        xpow *= &x2;
        k += 1;
    }
    sum
}

/// Pi to `prec` bits. Machin's formula; cached per precision bucket.
pub fn pi(prec: u32) -> BigFloat {
    let bucket = (prec + 63) / 64 * 64;
    let mut cache = pi_cache().lock().unwrap();
    let fixed = cache.entry(bucket).or_insert_with(|| {
        let scale = bucket + 32;
        let a = atan_inv_u32(5, scale);
        let b = atan_inv_u32(239, scale);
        a * 16 - b * 4
    });
    BigFloat::normalized(fixed.clone(), -((bucket + 32) as i64), prec)
}

/// `exp(x)` for real x. Argument halving plus Taylor series.
pub fn exp(x: &BigFloat) -> BigFloat {
    let prec = x.prec();
    if x.is_zero() {
        return BigFloat::one(prec);
    }
    if x.is_negative() {
        return exp(&x.neg()).recip().expect("exp is nonzero");
    }
    // halve until the argument is below 2^-m0, with m0 ~ sqrt(prec)
    let m0 = (prec as f64).sqrt() as i64 + 4;
    let e = x.exponent();
    let halvings = (e + m0).max(0) as u32;
    let guard = 2 * halvings + 32;
    let wp = prec + guard;
    let r = x.with_prec(wp).shl(-(halvings as i64));
    // Taylor
    let mut term = BigFloat::one(wp);
    let mut sum = BigFloat::one(wp);
    let mut n = 1i64;
    loop {
        term = term.mul(&r).div(&BigFloat::from_i64(n, wp)).unwrap();
        if term.is_zero() || term.exponent() < -(wp as i64) {
            break;
        }
        sum = sum.add(&term);
        n += 1;
    }
    for _ in 0..halvings {
        sum = sum.square();
    }
    sum.with_prec(prec)
}

/// `(cos(pi*w), sin(pi*w))` for real w, with exact range reduction mod 2.
pub fn cos_sin_pi(w: &BigFloat) -> (BigFloat, BigFloat) {
    let prec = w.prec();
    // w mod 2 in [-1, 1]; subtraction of the even integer is exact
    let k = w.shl(-1).round() << 1u32;
    let wp = prec + 48;
    let w0 = w.with_prec(wp).sub(&BigFloat::from_bigint(&k, wp));

    let m0 = (prec as f64).sqrt() as i64 + 4;
    let halvings = (w0.exponent() + 2 + m0).max(0) as u32;
    let guard = 2 * halvings + 32;
    let wp = prec + guard;
    let t = pi(wp).mul(&w0.with_prec(wp)).shl(-(halvings as i64));
    // cos/sin Taylor on the small angle
    let t2 = t.square();
    let mut c = BigFloat::one(wp);
    let mut s = t.clone();
    let mut cterm = BigFloat::one(wp);
    let mut sterm = t.clone();
    let mut n = 1i64;
    loop {
        cterm = cterm.mul(&t2).div(&BigFloat::from_i64((2 * n - 1) * 2 * n, wp)).unwrap().neg();
        sterm = sterm.mul(&t2).div(&BigFloat::from_i64(2 * n * (2 * n + 1), wp)).unwrap().neg();
        let done = (cterm.is_zero() || cterm.exponent() < -(wp as i64))
            && (sterm.is_zero() || sterm.exponent() < -(wp as i64));
        c = c.add(&cterm);
        s = s.add(&sterm);
        if done {
            break;
        }
        n += 1;
    }
    // double the angle back up: (c + i s)^2
    for _ in 0..halvings {
        let c2 = c.square().sub(&s.square());
        let s2 = c.mul(&s).shl(1);
        c = c2;
        s = s2;
    }
    (c.with_prec(prec), s.with_prec(prec))
}

/// Square root of a nonnegative real.
pub fn sqrt(x: &BigFloat) -> Result<BigFloat> {
    let prec = x.prec();
    if x.is_zero() {
        return Ok(BigFloat::zero(prec));
    }
    if x.is_negative() {
        return Err(MpError::NegativeSqrt);
    }
    // scale mantissa so it has ~2*(prec+2) bits and even exponent
    let wp = prec + 4;
    let v = x.with_prec(2 * wp);
    // v = m * 2^e with m of 2*wp bits; we need e even
    let e = v.exponent(); // 2^(e-1) <= v < 2^e
    let half_e = e.div_euclid(2);
    let shifted = v.shl(-2 * half_e); // in [2^-2, 4)
    let m = shifted.shl(2 * (wp as i64)).round();
    let root = m.magnitude().sqrt();
    Ok(BigFloat::normalized(BigInt::from(root), half_e - wp as i64, prec))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn close(a: &BigFloat, b: &BigFloat, bits: i64) -> bool {
        let d = a.sub(b);
        d.is_zero() || d.exponent() < a.exponent().max(b.exponent()) - bits
    }

    #[test]
    fn pi_value() {
        let p = pi(128);
        // 3.14159265358979323846264338327950288
        let want = BigFloat::from_ratio(
            &"31415926535897932384626433832795028842".parse().unwrap(),
            &"10000000000000000000000000000000000000".parse().unwrap(),
            128,
        );
        assert!(close(&p, &want, 120), "{p} vs {want}");
    }

    #[test]
    fn exp_one() {
        let e = exp(&BigFloat::one(192));
        let want = BigFloat::from_ratio(
            &"27182818284590452353602874713526624977572".parse().unwrap(),
            &"10000000000000000000000000000000000000000".parse().unwrap(),
            192,
        );
        assert!(close(&e, &want, 130), "{e}");
    }

    #[test]
    fn exp_additivity() {
        let a = BigFloat::from_ratio(&BigInt::from(7), &BigInt::from(3), 256);
        let b = BigFloat::from_ratio(&BigInt::from(-11), &BigInt::from(5), 256);
        let lhs = exp(&a.add(&b));
        let rhs = exp(&a).mul(&exp(&b));
        assert!(close(&lhs, &rhs, 248));
    }

    #[test]
    fn sincos_pythagoras_and_special_values() {
        let w = BigFloat::from_ratio(&BigInt::from(123457), &BigInt::from(100000), 256);
        let (c, s) = cos_sin_pi(&w);
        let one = c.square().add(&s.square());
        assert!(close(&one, &BigFloat::one(256), 248));

        let (c, s) = cos_sin_pi(&BigFloat::from_i64(1, 128));
        assert!(close(&c, &BigFloat::from_i64(-1, 128), 120));
        assert!(s.is_zero() || s.exponent() < -120);

        let (c, s) = cos_sin_pi(&BigFloat::from_ratio(&BigInt::from(1), &BigInt::from(2), 128));
        assert!(c.is_zero() || c.exponent() < -120);
        assert!(close(&s, &BigFloat::one(128), 120));

        // large argument: cos(pi * (2^40 + 1/3)) = cos(pi/3) = 1/2
        let big = BigFloat::from_i64(1, 192).shl(40)
            .add(&BigFloat::from_ratio(&BigInt::from(1), &BigInt::from(3), 192));
        let (c, _) = cos_sin_pi(&big);
        assert!(close(&c, &BigFloat::from_ratio(&BigInt::from(1), &BigInt::from(2), 192), 180));
    }

    #[test]
    fn sqrt_two() {
        let r = sqrt(&BigFloat::from_i64(2, 200)).unwrap();
        let check = r.square();
        assert!(close(&check, &BigFloat::from_i64(2, 200), 195));
        assert!(sqrt(&BigFloat::from_i64(-1, 64)).is_err());
    }
}
