//! Midpoint-radius enclosures of real numbers with outward rounding.
//!
//! A [`CertifiedReal`] stands for the closed interval `[mid - rad, mid + rad]`.
//! Every operation returns a ball that contains the exact result for every
//! choice of inputs inside the argument balls.

use crate::dyadic::{Dyadic, Round};
use crate::error::{Error, Result};
use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;
use std::sync::{Mutex, OnceLock};

/// Significant bits kept in radii.
const RAD_BITS: u64 = 64;
/// Extra bits carried by internal series evaluations.
const GUARD: u32 = 40;

#[derive(Clone, Debug)]
pub struct CertifiedReal {
    mid: Dyadic,
    rad: Dyadic,
    prec: u32,
}

fn rad_up(d: &Dyadic) -> Dyadic {
    d.abs().round(RAD_BITS, Round::Up)
}

/// Quotient `a / b` to `prec` bits and a bound on its error.
fn div_round(a: &Dyadic, b: &Dyadic, prec: u64) -> (Dyadic, Dyadic) {
    assert!(!b.is_zero(), "division by exact zero");
    if a.is_zero() {
        return (Dyadic::zero(), Dyadic::zero());
    }
    let sh = (prec as i64 + b.bits() as i64 - a.bits() as i64 + 2).max(0);
    let num = a.mantissa() << sh as usize;
    let (q, r) = num.div_rem(b.mantissa());
    let exp = a.exponent() - b.exponent() - sh;
    let err = if r.is_zero() { Dyadic::zero() } else { Dyadic::new(BigInt::one(), exp) };
    let q = Dyadic::new(q, exp);
    let (q, e2) = q.round_nearest(prec);
    (q, err.add(&e2))
}

/// Upper bound for `a / b` with `a >= 0`, `b > 0`.
fn div_up(a: &Dyadic, b: &Dyadic) -> Dyadic {
    let (q, e) = div_round(a, b, RAD_BITS);
    rad_up(&q.abs().add(&e))
}

impl CertifiedReal {
    /// Ball around `mid` of radius `rad`; the midpoint is rounded to `prec` bits.
    pub fn new(mid: Dyadic, rad: Dyadic, prec: u32) -> Self {
        let (m, err) = mid.round_nearest(prec as u64);
        CertifiedReal { mid: m, rad: rad_up(&rad.abs().add(&err)), prec }
    }

    pub fn exact(d: Dyadic, prec: u32) -> Self {
        Self::new(d, Dyadic::zero(), prec)
    }

    pub fn zero(prec: u32) -> Self {
        Self::exact(Dyadic::zero(), prec)
    }

    pub fn one(prec: u32) -> Self {
        Self::from_int(1, prec)
    }

    pub fn from_int<T: Into<BigInt>>(v: T, prec: u32) -> Self {
        Self::exact(Dyadic::from_int(v), prec)
    }

    pub fn from_rational(q: &BigRational, prec: u32) -> Self {
        if q.denom().is_one() {
            return Self::from_int(q.numer().clone(), prec);
        }
        let lo = Dyadic::from_rational(q, prec as u64 + 2, Round::Down);
        let hi = Dyadic::from_rational(q, prec as u64 + 2, Round::Up);
        Self::from_endpoints(&lo, &hi, prec)
    }

    pub fn from_ratio(n: i64, d: i64, prec: u32) -> Self {
        Self::from_rational(&BigRational::new(n.into(), d.into()), prec)
    }

    /// Parses an exact decimal (`0.8542`) or fraction (`41/150`).
    pub fn parse_exact(s: &str, prec: u32) -> Result<Self> {
        Ok(Self::from_rational(&parse_rational(s)?, prec))
    }

    /// Smallest ball containing `[lo, hi]`.
    pub fn from_endpoints(lo: &Dyadic, hi: &Dyadic, prec: u32) -> Self {
        let (lo, hi) = if lo <= hi { (lo, hi) } else { (hi, lo) };
        let sum = lo.add(hi).mul_pow2(-1);
        let (m, _) = sum.round_nearest(prec as u64);
        let r = hi.sub(&m).maximum(&m.sub(lo));
        CertifiedReal { mid: m, rad: rad_up(&r), prec }
    }

    pub fn mid(&self) -> &Dyadic {
        &self.mid
    }

    pub fn rad(&self) -> &Dyadic {
        &self.rad
    }

    pub fn precision_bits(&self) -> u32 {
        self.prec
    }

    /// Same enclosure, with later operations carried at `prec` bits.
    pub fn with_precision(&self, prec: u32) -> Self {
        if prec >= self.prec {
            let mut c = self.clone();
            c.prec = prec;
            c
        } else {
            Self::new(self.mid.clone(), self.rad.clone(), prec)
        }
    }

    pub fn lo(&self) -> Dyadic {
        self.mid.sub(&self.rad)
    }

    pub fn hi(&self) -> Dyadic {
        self.mid.add(&self.rad)
    }

    /// Upper bound for `|x|` over the ball.
    pub fn mag(&self) -> Dyadic {
        rad_up(&self.mid.abs().add(&self.rad))
    }

    /// Lower bound for `|x|` over the ball (zero if the ball contains zero).
    pub fn mig(&self) -> Dyadic {
        let d = self.mid.abs().sub(&self.rad);
        if d.is_positive() {
            d.round(RAD_BITS, Round::Down)
        } else {
            Dyadic::zero()
        }
    }

    pub fn is_exact(&self) -> bool {
        self.rad.is_zero()
    }

    pub fn contains_zero(&self) -> bool {
        !self.mig().is_positive()
    }

    /// Every point of the ball is > 0.
    pub fn is_positive(&self) -> bool {
        self.lo().is_positive()
    }

    /// Every point of the ball is < 0.
    pub fn is_negative(&self) -> bool {
        self.hi().is_negative()
    }

    pub fn contains_rational(&self, q: &BigRational) -> bool {
        self.lo().cmp_rational(q) != Ordering::Greater && self.hi().cmp_rational(q) != Ordering::Less
    }

    pub fn contains_dyadic(&self, d: &Dyadic) -> bool {
        &self.lo() <= d && d <= &self.hi()
    }

    /// The ball `other` lies inside `self`.
    pub fn contains(&self, other: &CertifiedReal) -> bool {
        self.lo() <= other.lo() && other.hi() <= self.hi()
    }

    pub fn overlaps(&self, other: &CertifiedReal) -> bool {
        self.lo() <= other.hi() && other.lo() <= self.hi()
    }

    /// Every point of `self` is below every point of `other`.
    pub fn certainly_lt(&self, other: &CertifiedReal) -> bool {
        self.hi() < other.lo()
    }

    pub fn certainly_gt(&self, other: &CertifiedReal) -> bool {
        other.certainly_lt(self)
    }

    pub fn certainly_lt_rational(&self, q: &BigRational) -> bool {
        self.hi().cmp_rational(q) == Ordering::Less
    }

    pub fn certainly_gt_rational(&self, q: &BigRational) -> bool {
        self.lo().cmp_rational(q) == Ordering::Greater
    }

    pub fn certainly_le_rational(&self, q: &BigRational) -> bool {
        self.hi().cmp_rational(q) != Ordering::Greater
    }

    pub fn certainly_ge_rational(&self, q: &BigRational) -> bool {
        self.lo().cmp_rational(q) != Ordering::Less
    }

    /// Ball covering both arguments.
    pub fn hull(&self, other: &CertifiedReal) -> Self {
        let lo = self.lo().minimum(&other.lo());
        let hi = self.hi().maximum(&other.hi());
        Self::from_endpoints(&lo, &hi, self.prec.max(other.prec))
    }

    /// Widens the radius by `err`.
    pub fn add_error(&self, err: &Dyadic) -> Self {
        CertifiedReal { mid: self.mid.clone(), rad: rad_up(&self.rad.add(&err.abs())), prec: self.prec }
    }

    pub fn to_f64(&self) -> f64 {
        self.mid.to_f64()
    }

    pub fn rad_f64(&self) -> f64 {
        self.rad.to_f64()
    }

    pub fn lo_f64(&self) -> f64 {
        self.lo().round(53, Round::Down).to_f64()
    }

    pub fn hi_f64(&self) -> f64 {
        self.hi().round(53, Round::Up).to_f64()
    }

    /// Outward-rounded decimal endpoints with about `sig` significant digits.
    pub fn interval_strings(&self, sig: usize) -> (String, String) {
        let sig_lo = if self.lo().is_zero() { 1 } else { sig };
        (self.lo().to_decimal_sig(sig_lo, Round::Down), self.hi().to_decimal_sig(sig, Round::Up))
    }

    /// Decimal digits of the enclosure: lower bound rounded down, upper bound rounded up.
    pub fn decimal_bounds(&self, digits: usize) -> (String, String) {
        (self.lo().to_decimal(digits, Round::Down), self.hi().to_decimal(digits, Round::Up))
    }

    pub fn neg(&self) -> Self {
        CertifiedReal { mid: self.mid.neg(), rad: self.rad.clone(), prec: self.prec }
    }

    pub fn abs(&self) -> Self {
        if self.mid.is_negative() {
            self.neg()
        } else {
            self.clone()
        }
    }

    pub fn add(&self, o: &CertifiedReal) -> Self {
        let prec = self.prec.max(o.prec);
        Self::new(self.mid.add(&o.mid), self.rad.add(&o.rad), prec)
    }

    pub fn sub(&self, o: &CertifiedReal) -> Self {
        self.add(&o.neg())
    }

    pub fn mul(&self, o: &CertifiedReal) -> Self {
        let prec = self.prec.max(o.prec);
        let m = self.mid.mul(&o.mid);
        let r = self
            .mid
            .abs()
            .mul(&o.rad)
            .add(&o.mid.abs().mul(&self.rad))
            .add(&self.rad.mul(&o.rad));
        Self::new(m, r, prec)
    }

    pub fn sqr(&self) -> Self {
        self.mul(self)
    }

    pub fn mul_pow2(&self, k: i64) -> Self {
        CertifiedReal { mid: self.mid.mul_pow2(k), rad: self.rad.mul_pow2(k), prec: self.prec }
    }

    pub fn mul_int<T: Into<BigInt>>(&self, k: T) -> Self {
        let k = k.into();
        Self::new(self.mid.mul_int(&k), self.rad.mul_int(&k.abs()), self.prec)
    }

    pub fn add_int<T: Into<BigInt>>(&self, k: T) -> Self {
        self.add(&Self::from_int(k, self.prec))
    }

    pub fn mul_rational(&self, q: &BigRational) -> Self {
        if q.denom().is_one() {
            return self.mul_int(q.numer().clone());
        }
        self.mul(&Self::from_rational(q, self.prec))
    }

    pub fn div_int<T: Into<BigInt>>(&self, k: T) -> Self {
        let k = Dyadic::from_int(k.into());
        assert!(!k.is_zero(), "division by zero");
        let (q, e) = div_round(&self.mid, &k, self.prec as u64);
        let r = div_up(&self.rad, &k.abs());
        Self::new(q, r.add(&e), self.prec)
    }

    /// `self / o`; fails when the divisor ball contains zero.
    pub fn div(&self, o: &CertifiedReal) -> Result<Self> {
        let prec = self.prec.max(o.prec);
        let denom_lo = o.mig();
        if !denom_lo.is_positive() {
            return Err(Error::Domain("division by a ball containing zero".into()));
        }
        let (q, e) = div_round(&self.mid, &o.mid, prec as u64);
        let q_abs_up = q.abs().add(&e);
        let num = self.rad.add(&q_abs_up.mul(&o.rad));
        let r = div_up(&num, &denom_lo);
        Ok(Self::new(q, r.add(&e), prec))
    }

    pub fn recip(&self) -> Result<Self> {
        Self::one(self.prec).div(self)
    }

    /// Integer power by repeated squaring.
    pub fn powi(&self, n: i64) -> Result<Self> {
        if n < 0 {
            return self.powi(-n)?.recip();
        }
        let mut result = Self::one(self.prec);
        let mut base = self.clone();
        let mut e = n as u64;
        while e > 0 {
            if e & 1 == 1 {
                result = result.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.sqr();
            }
        }
        Ok(result)
    }

    pub fn sqrt(&self) -> Result<Self> {
        let lo = self.lo();
        if lo.is_negative() {
            return Err(Error::Domain("square root of a ball with negative points".into()));
        }
        let wp = self.prec as u64 + 8;
        let a = sqrt_dyadic(&lo.round(2 * wp, Round::Down), wp, Round::Down);
        let b = sqrt_dyadic(&self.hi().round(2 * wp, Round::Up), wp, Round::Up);
        Ok(Self::from_endpoints(&a, &b, self.prec))
    }

    /// Positive real `n`-th root.
    pub fn root(&self, n: u32) -> Result<Self> {
        if n == 2 {
            return self.sqrt();
        }
        let p = self.prec;
        self.ln()?.div_int(n).exp().map(|x| x.with_precision(p))
    }

    /// `e^x`.
    pub fn exp(&self) -> Result<Self> {
        if self.is_wide() {
            return self.monotone_hull(true, |x| x.exp_narrow());
        }
        self.exp_narrow()
    }

    /// Natural logarithm of a positive ball.
    pub fn ln(&self) -> Result<Self> {
        if !self.is_positive() {
            return Err(Error::Domain("logarithm of a ball with nonpositive points".into()));
        }
        if self.is_wide() {
            return self.monotone_hull(true, |x| x.ln_narrow());
        }
        self.ln_narrow()
    }

    /// `self^y = exp(y ln self)` for a positive base.
    pub fn pow(&self, y: &CertifiedReal) -> Result<Self> {
        let p = self.prec.max(y.prec);
        let wp = p + 16;
        let l = self.with_precision(wp).ln()?;
        Ok(l.mul(&y.with_precision(wp)).exp()?.with_precision(p))
    }

    /// `self^q` for a rational exponent and a positive base.
    pub fn pow_rational(&self, q: &BigRational) -> Result<Self> {
        if q.denom().is_one() {
            if let Some(n) = q.numer().to_i64() {
                return self.powi(n);
            }
        }
        if q.denom() == &BigInt::from(2) {
            if let Some(n) = q.numer().to_i64() {
                return self.sqrt()?.powi(n);
            }
        }
        self.pow(&Self::from_rational(q, self.prec + 16))
    }

    fn is_wide(&self) -> bool {
        if self.rad.is_zero() {
            return false;
        }
        if self.mid.is_zero() {
            return true;
        }
        self.rad.leading_exp() > self.mid.leading_exp() - 24
    }

    /// Evaluates an increasing (`inc`) or decreasing function at both endpoints.
    fn monotone_hull(&self, inc: bool, f: impl Fn(&CertifiedReal) -> Result<CertifiedReal>) -> Result<Self> {
        let wp = self.prec as u64 + 8;
        let a = f(&Self::exact(self.lo().round(wp, Round::Down), self.prec))?;
        let b = f(&Self::exact(self.hi().round(wp, Round::Up), self.prec))?;
        let (lo, hi) = if inc { (a.lo(), b.hi()) } else { (b.lo(), a.hi()) };
        Ok(Self::from_endpoints(&lo, &hi, self.prec))
    }

    fn exp_narrow(&self) -> Result<Self> {
        let prec = self.prec;
        let wp = prec + GUARD;
        let x = self.with_precision(wp);
        let xf = x.to_f64();
        if !(xf.abs() < 1e12) {
            return Err(Error::Domain(format!("exponential argument out of range: {xf}")));
        }
        let n = (xf / std::f64::consts::LN_2).round() as i64;
        let r = if n != 0 { x.sub(&ln2(wp).mul_int(n)) } else { x };
        let r = r.mul_pow2(-10);
        let mut sum = Self::one(wp);
        let mut term = Self::one(wp);
        let cutoff = -(wp as i64) - 4;
        let mut k: i64 = 1;
        loop {
            term = term.mul(&r).div_int(k);
            sum = sum.add(&term);
            let m = term.mag();
            if m.is_zero() || m.leading_exp() < cutoff {
                break;
            }
            k += 1;
        }
        // tail of the series: |r|^(k+1)/(k+1)! / (1 - |r|) <= 2 |term| |r| / (k + 1)
        let tail = div_up(&term.mag().mul(&r.mag()).mul_pow2(1), &Dyadic::from_int(k + 1));
        let mut s = sum.add_error(&tail);
        for _ in 0..10 {
            s = s.sqr();
        }
        Ok(s.mul_pow2(n).with_precision(prec))
    }

    fn ln_narrow(&self) -> Result<Self> {
        let prec = self.prec;
        let wp = prec + GUARD;
        let x = self.with_precision(wp);
        let m = &x.mid;
        let mut n = m.leading_exp();
        // t = m / 2^n in [1, 2); move to [0.75, 1.5)
        let top = m.round(3, Round::Down).mantissa().to_u32().unwrap_or(4);
        if top >= 6 {
            n += 1;
        }
        let t = x.mul_pow2(-n);
        let one = Self::one(wp);
        let z = t.sub(&one).div(&t.add(&one))?;
        let z2 = z.sqr();
        if z2.mag() > Dyadic::from_f64(0.25) {
            return Err(Error::Domain("logarithm argument reduction failed".into()));
        }
        let mut sum = z.clone();
        let mut term = z;
        let cutoff = -(wp as i64) - 4;
        let mut k: i64 = 0;
        loop {
            k += 1;
            term = term.mul(&z2);
            let add = term.div_int(2 * k + 1);
            sum = sum.add(&add);
            let mag = add.mag();
            if mag.is_zero() || mag.leading_exp() < cutoff {
                break;
            }
        }
        // remaining terms are bounded by |term| z^2 / (1 - z^2) <= 2 |term| z^2
        let tail = rad_up(&term.mag().mul(&z2.mag()).mul_pow2(1));
        let atanh2 = sum.add_error(&tail).mul_pow2(1);
        let res = if n != 0 { atanh2.add(&ln2(wp).mul_int(n)) } else { atanh2 };
        Ok(res.with_precision(prec))
    }
}

fn sqrt_dyadic(d: &Dyadic, prec: u64, mode: Round) -> Dyadic {
    if d.is_zero() {
        return Dyadic::zero();
    }
    let man = d.mantissa().magnitude().clone();
    let mut s = (2 * prec as i64 + 2 - man.bits() as i64).max(0);
    if (d.exponent() - s).rem_euclid(2) != 0 {
        s += 1;
    }
    let shifted: BigUint = man << s as usize;
    let mut r = shifted.sqrt();
    if mode == Round::Up && &r * &r != shifted {
        r += 1u32;
    }
    Dyadic::new(BigInt::from(r), (d.exponent() - s) / 2)
}

/// Parses `"p/q"`, a decimal such as `"-0.00136"`, or an integer, exactly.
pub fn parse_rational(s: &str) -> Result<BigRational> {
    let s = s.trim();
    let bad = || Error::Parse { context: "rational".into(), message: format!("invalid number '{s}'") };
    if let Some((n, d)) = s.split_once('/') {
        let n = BigInt::from_str(n.trim()).map_err(|_| bad())?;
        let d = BigInt::from_str(d.trim()).map_err(|_| bad())?;
        if d.is_zero() {
            return Err(bad());
        }
        return Ok(BigRational::new(n, d));
    }
    if let Some((ip, fp)) = s.split_once('.') {
        if fp.is_empty() || !fp.bytes().all(|b| b.is_ascii_digit()) {
            return Err(bad());
        }
        let neg = ip.starts_with('-');
        let ip_digits = ip.trim_start_matches(['-', '+']);
        let digits = format!("{}{}", if ip_digits.is_empty() { "0" } else { ip_digits }, fp);
        let mut n = BigInt::from_str(&digits).map_err(|_| bad())?;
        if neg {
            n = -n;
        }
        return Ok(BigRational::new(n, num_traits::pow(BigInt::from(10), fp.len())));
    }
    Ok(BigRational::from_integer(BigInt::from_str(s).map_err(|_| bad())?))
}

impl fmt::Display for CertifiedReal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (lo, hi) = self.interval_strings(20);
        write!(f, "[{lo}, {hi}]")
    }
}

macro_rules! forward_binop {
    ($tr:ident, $method:ident) => {
        impl $tr<&CertifiedReal> for &CertifiedReal {
            type Output = CertifiedReal;
            fn $method(self, o: &CertifiedReal) -> CertifiedReal {
                CertifiedReal::$method(self, o)
            }
        }
    };
}

forward_binop!(Add, add);
forward_binop!(Sub, sub);
forward_binop!(Mul, mul);

impl Neg for &CertifiedReal {
    type Output = CertifiedReal;
    fn neg(self) -> CertifiedReal {
        CertifiedReal::neg(self)
    }
}


type ConstCache = OnceLock<Mutex<HashMap<u32, CertifiedReal>>>;

fn cached(cache: &'static ConstCache, prec: u32, compute: fn(u32) -> CertifiedReal) -> CertifiedReal {
    let key = prec.div_ceil(64) * 64;
    let map = cache.get_or_init(|| Mutex::new(HashMap::new()));
    if let Some(v) = map.lock().expect("constant cache poisoned").get(&key) {
        return v.with_precision(prec);
    }
    let v = compute(key);
    map.lock().expect("constant cache poisoned").insert(key, v.clone());
    v.with_precision(prec)
}

/// Fixed-point `atan(1/m) * 2^bits` (or `atanh` when `hyperbolic`) and an error bound in units.
fn arctan_inv_fixed(m: u64, bits: u64, hyperbolic: bool) -> (BigInt, u64) {
    let m2 = BigInt::from(m) * m;
    let mut power = (BigInt::one() << bits as usize) / m;
    let mut sum = BigInt::zero();
    let mut k: u64 = 0;
    while !power.is_zero() {
        let term = &power / (2 * k + 1);
        if hyperbolic || k % 2 == 0 {
            sum += term;
        } else {
            sum -= term;
        }
        power /= &m2;
        k += 1;
    }
    // one unit per truncated term plus the omitted tail (< 2 units)
    (sum, k + 2)
}

fn compute_pi(prec: u32) -> CertifiedReal {
    let bits = prec as u64 + 32;
    let (a, ea) = arctan_inv_fixed(5, bits, false);
    let (b, eb) = arctan_inv_fixed(239, bits, false);
    let mid = a * 16 - b * 4;
    let err = 16 * ea + 4 * eb;
    CertifiedReal::new(Dyadic::new(mid, -(bits as i64)), Dyadic::new(err.into(), -(bits as i64)), prec)
}

fn compute_ln2(prec: u32) -> CertifiedReal {
    let bits = prec as u64 + 32;
    let (a, ea) = arctan_inv_fixed(3, bits, true);
    CertifiedReal::new(Dyadic::new(a * 2, -(bits as i64)), Dyadic::new((2 * ea).into(), -(bits as i64)), prec)
}

/// Enclosure of pi.
pub fn pi(prec: u32) -> CertifiedReal {
    static CACHE: ConstCache = OnceLock::new();
    cached(&CACHE, prec, compute_pi)
}

/// Enclosure of ln 2.
pub fn ln2(prec: u32) -> CertifiedReal {
    static CACHE: ConstCache = OnceLock::new();
    cached(&CACHE, prec, compute_ln2)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn close(x: &CertifiedReal, v: f64, tol: f64) {
        assert!((x.to_f64() - v).abs() <= tol * v.abs().max(1.0), "{x} vs {v}");
    }

    #[test]
    fn pi_and_ln2() {
        let p = pi(256);
        assert!(p.contains_dyadic(&Dyadic::from_f64(std::f64::consts::PI)) || p.rad_f64() < 1e-70);
        close(&p, std::f64::consts::PI, 1e-15);
        assert!(p.rad_f64() < 1e-70);
        close(&ln2(128), std::f64::consts::LN_2, 1e-15);
    }

    #[test]
    fn exp_ln_inverse() {
        for v in [0.001, 0.5, 1.0, 2.0, 10.0, 12345.678] {
            let x = CertifiedReal::exact(Dyadic::from_f64(v), 128);
            let y = x.ln().unwrap().exp().unwrap();
            assert!(y.contains_dyadic(x.mid()), "{v}: {y}");
            assert!(y.rad_f64() < 1e-30 * v.max(1.0));
        }
        close(&CertifiedReal::one(128).exp().unwrap(), std::f64::consts::E, 1e-15);
        close(&CertifiedReal::from_int(-3, 128).exp().unwrap(), (-3f64).exp(), 1e-15);
    }

    #[test]
    fn sqrt_encloses() {
        let two = CertifiedReal::from_int(2, 200);
        let s = two.sqrt().unwrap();
        assert!(s.sqr().contains_rational(&BigRational::from_integer(2.into())));
        assert!(s.rad_f64() < 1e-58);
        let e = CertifiedReal::from_int(4, 64).sqrt().unwrap();
        assert!(e.contains_rational(&BigRational::from_integer(2.into())));
    }

    #[test]
    fn division_rejects_zero_ball() {
        let z = CertifiedReal::new(Dyadic::zero(), Dyadic::from_f64(1e-10), 64);
        assert!(CertifiedReal::one(64).div(&z).is_err());
        let third = CertifiedReal::one(128).div_int(3);
        assert!(third.contains_rational(&BigRational::new(1.into(), 3.into())));
    }

    #[test]
    fn wide_balls_use_endpoints() {
        let x = CertifiedReal::from_endpoints(&Dyadic::from_f64(0.5), &Dyadic::from_f64(3.0), 96);
        let l = x.ln().unwrap();
        assert!(l.lo_f64() <= 0.5f64.ln() && l.hi_f64() >= 3f64.ln());
    }

    #[test]
    fn parse_exact_numbers() {
        assert_eq!(parse_rational("41/150").unwrap(), BigRational::new(41.into(), 150.into()));
        assert_eq!(parse_rational("-0.25").unwrap(), BigRational::new((-1).into(), 4.into()));
        assert_eq!(parse_rational("12").unwrap(), BigRational::from_integer(12.into()));
        assert!(parse_rational("1.2.3").is_err());
    }
}
