//! Certified special functions: Bernoulli numbers, log-gamma, gamma,
//! digamma, trigamma and the Riemann zeta function on the real axis.

use crate::dyadic::Dyadic;
use crate::error::{Error, Result};
use crate::real::{pi, CertifiedReal};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use std::collections::HashMap;
use std::sync::{Mutex, OnceLock};

const GUARD: u32 = 40;
const BERNOULLI_MAX: usize = 240;

/// Bernoulli numbers `B_0 .. B_240` (with `B_1 = -1/2`).
pub fn bernoulli_table() -> &'static [BigRational] {
    static TABLE: OnceLock<Vec<BigRational>> = OnceLock::new();
    TABLE.get_or_init(|| {
        // Akiyama-Tanigawa, one row per index
        let n = BERNOULLI_MAX;
        let mut out = Vec::with_capacity(n + 1);
        let mut a: Vec<BigRational> = Vec::with_capacity(n + 1);
        for m in 0..=n {
            a.push(BigRational::new(BigInt::one(), BigInt::from(m + 1)));
            for j in (1..=m).rev() {
                let diff = &a[j - 1] - &a[j];
                a[j - 1] = diff * BigInt::from(j);
            }
            out.push(a[0].clone());
        }
        // the recurrence yields B_1 = +1/2
        out[1] = -out[1].clone();
        out
    })
}

pub fn bernoulli(n: usize) -> Result<&'static BigRational> {
    bernoulli_table().get(n).ok_or_else(|| Error::Domain(format!("Bernoulli index {n} beyond table")))
}

/// Bernoulli polynomial `B_n(x)` at a rational point.
pub fn bernoulli_poly(n: usize, x: &BigRational) -> Result<BigRational> {
    let mut sum = BigRational::zero();
    let mut binom = BigInt::one();
    let mut xp = BigRational::one();
    // sum_k C(n,k) B_{n-k} x^k
    for k in 0..=n {
        sum += bernoulli(n - k)? * &xp * &binom;
        xp *= x;
        binom = binom * BigInt::from(n - k) / BigInt::from(k + 1);
    }
    Ok(sum)
}

fn shift_target(wp: u32) -> i64 {
    (wp as i64 / 3).max(16)
}

fn shift_count(x: &CertifiedReal, wp: u32) -> Result<i64> {
    let lo = x.lo_f64();
    if !(lo > 0.0) {
        return Err(Error::Domain("argument must be positive".into()));
    }
    let target = shift_target(wp) as f64;
    Ok(if lo < target { (target - lo).ceil() as i64 } else { 0 })
}

fn small(m: &Dyadic, wp: u32) -> bool {
    m.is_zero() || m.leading_exp() < -(wp as i64) - 4
}

/// `ln Gamma(x)` for a positive ball.
pub fn lgamma(x: &CertifiedReal) -> Result<CertifiedReal> {
    let prec = x.precision_bits();
    let wp = prec + GUARD;
    let x = x.with_precision(wp);
    let n = shift_count(&x, wp)?;
    let z = x.add_int(n);
    let lnz = z.ln()?;
    let half = CertifiedReal::from_ratio(1, 2, wp);
    let ln2pi = pi(wp).mul_int(2).ln()?;
    let mut s = z.sub(&half).mul(&lnz).sub(&z).add(&ln2pi.mul(&half));
    let zinv = z.recip()?;
    let zinv2 = zinv.sqr();
    let mut zpow = zinv.clone();
    let mut k = 1usize;
    loop {
        let coeff = BigRational::from_integer(BigInt::from(2 * k * (2 * k - 1)));
        let term = zpow.mul_rational(&(bernoulli(2 * k)? / coeff));
        if small(&term.mag(), wp) {
            // the omitted tail is bounded by the first omitted term; doubled
            s = s.add_error(&term.mag().mul_pow2(1));
            break;
        }
        s = s.add(&term);
        zpow = zpow.mul(&zinv2);
        k += 1;
    }
    if n > 0 {
        let mut prod = x.clone();
        for j in 1..n {
            prod = prod.mul(&x.add_int(j));
        }
        s = s.sub(&prod.ln()?);
    }
    Ok(s.with_precision(prec))
}

/// `Gamma(x)` for a positive ball.
pub fn gamma(x: &CertifiedReal) -> Result<CertifiedReal> {
    let prec = x.precision_bits();
    let g = lgamma(&x.with_precision(prec + 16))?.exp()?;
    Ok(g.with_precision(prec))
}

/// Digamma `Gamma'/Gamma` for a positive ball.
pub fn digamma(x: &CertifiedReal) -> Result<CertifiedReal> {
    let prec = x.precision_bits();
    let wp = prec + GUARD;
    let x = x.with_precision(wp);
    let n = shift_count(&x, wp)?;
    let z = x.add_int(n);
    let zinv = z.recip()?;
    let zinv2 = zinv.sqr();
    let mut s = z.ln()?.sub(&zinv.mul_pow2(-1));
    let mut zpow = zinv2.clone();
    let mut k = 1usize;
    loop {
        let coeff = BigRational::from_integer(BigInt::from(2 * k));
        let term = zpow.mul_rational(&(bernoulli(2 * k)? / coeff));
        if small(&term.mag(), wp) {
            s = s.add_error(&term.mag().mul_pow2(1));
            break;
        }
        s = s.sub(&term);
        zpow = zpow.mul(&zinv2);
        k += 1;
    }
    for j in 0..n {
        s = s.sub(&x.add_int(j).recip()?);
    }
    Ok(s.with_precision(prec))
}

/// Trigamma `(Gamma'/Gamma)'` for a positive ball.
pub fn trigamma(x: &CertifiedReal) -> Result<CertifiedReal> {
    let prec = x.precision_bits();
    let wp = prec + GUARD;
    let x = x.with_precision(wp);
    let n = shift_count(&x, wp)?;
    let z = x.add_int(n);
    let zinv = z.recip()?;
    let zinv2 = zinv.sqr();
    let mut s = zinv.add(&zinv2.mul_pow2(-1));
    let mut zpow = zinv2.mul(&zinv);
    let mut k = 1usize;
    loop {
        let term = zpow.mul_rational(bernoulli(2 * k)?);
        if small(&term.mag(), wp) {
            s = s.add_error(&term.mag().mul_pow2(1));
            break;
        }
        s = s.add(&term);
        zpow = zpow.mul(&zinv2);
        k += 1;
    }
    for j in 0..n {
        s = s.add(&x.add_int(j).sqr().recip()?);
    }
    Ok(s.with_precision(prec))
}

/// `ln k` for `k = 1..=n`, cached per working precision.
fn ln_table(n: usize, wp: u32) -> Result<Vec<CertifiedReal>> {
    type Cache = Mutex<HashMap<u32, Vec<CertifiedReal>>>;
    static CACHE: OnceLock<Cache> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    if let Some(v) = cache.lock().expect("ln cache poisoned").get(&wp) {
        if v.len() >= n {
            return Ok(v[..n].to_vec());
        }
    }
    let v: Vec<CertifiedReal> =
        (1..=n).map(|k| CertifiedReal::from_int(k as u64, wp).ln()).collect::<Result<_>>()?;
    cache.lock().expect("ln cache poisoned").insert(wp, v.clone());
    Ok(v)
}

/// `zeta(2n)` from Bernoulli numbers.
pub fn zeta_even(n: u32, prec: u32) -> Result<CertifiedReal> {
    if n == 0 {
        return Err(Error::Domain("zeta_even needs n >= 1".into()));
    }
    let wp = prec + GUARD;
    let m = 2 * n as usize;
    let b = bernoulli(m)?.abs();
    let mut fact = BigInt::one();
    for i in 1..=m {
        fact *= i;
    }
    let c = b / (BigRational::from_integer(fact) * BigInt::from(2));
    let v = pi(wp).mul_int(2).powi(m as i64)?.mul_rational(&c);
    Ok(v.with_precision(prec))
}

/// Riemann zeta at a real ball `s` with every point > 1.
pub fn zeta(s: &CertifiedReal) -> Result<CertifiedReal> {
    let prec = s.precision_bits();
    if s.is_exact() {
        let q = s.mid().to_rational();
        if q.is_integer() && q.numer().is_positive() && (q.numer() % 2u32).is_zero() {
            let n: u32 = (q.numer() / 2u32).try_into().map_err(|_| Error::Domain("zeta argument too large".into()))?;
            return zeta_even(n, prec);
        }
    }
    if !s.certainly_gt_rational(&BigRational::one()) {
        return Err(Error::Domain("zeta needs s > 1".into()));
    }
    let wp = prec + GUARD;
    let s = s.with_precision(wp);
    let n = (wp as usize / 4).max(20);
    let lns = ln_table(n, wp)?;
    // direct sum over k < N
    let mut sum = CertifiedReal::one(wp);
    for ln_k in lns.iter().take(n - 1).skip(1) {
        sum = sum.add(&s.mul(ln_k).neg().exp()?);
    }
    let nn = CertifiedReal::from_int(n as u64, wp);
    let n_pow = s.mul(&lns[n - 1]).neg().exp()?; // N^-s
    let s_minus_1 = s.add_int(-1);
    sum = sum.add(&n_pow.mul(&nn).div(&s_minus_1)?);
    sum = sum.add(&n_pow.mul_pow2(-1));
    // Euler-Maclaurin correction terms
    let ninv = nn.recip()?;
    let ninv2 = ninv.sqr();
    let mut poch = s.clone(); // (s)_{2j-1}
    let mut npow = n_pow.mul(&ninv); // N^{-s-2j+1}
    let mut fact = BigInt::from(2); // (2j)!
    let two_pi_sq = pi(wp).mul_int(2).sqr();
    let mut two_pi_pow = two_pi_sq.clone(); // (2 pi)^{2j}
    let mut j = 1usize;
    loop {
        let c = bernoulli(2 * j)? / BigRational::from_integer(fact.clone());
        let term = poch.mul(&npow).mul_rational(&c);
        sum = sum.add(&term);
        // remainder after j terms: 4 |(s)_{2j}| / (2pi)^{2j} * N^{-s-2j+1} / (s + 2j - 1)
        let poch2j = poch.mul(&s.add_int(2 * j as i64 - 1));
        let bound = poch2j
            .mul(&npow)
            .mul_int(4)
            .div(&two_pi_pow)?
            .div(&s.add_int(2 * j as i64 - 1))?;
        let bm = bound.mag();
        if small(&bm, wp) {
            sum = sum.add_error(&bm);
            break;
        }
        if 2 * j + 2 > BERNOULLI_MAX {
            return Err(Error::Domain("zeta: Euler-Maclaurin did not converge".into()));
        }
        poch = poch2j.mul(&s.add_int(2 * j as i64));
        npow = npow.mul(&ninv2);
        fact = fact * BigInt::from((2 * j + 1) * (2 * j + 2));
        two_pi_pow = two_pi_pow.mul(&two_pi_sq);
        j += 1;
    }
    Ok(sum.with_precision(prec))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ball(v: f64) -> CertifiedReal {
        CertifiedReal::exact(Dyadic::from_f64(v), 128)
    }

    fn assert_close(x: &CertifiedReal, v: f64) {
        assert!((x.to_f64() - v).abs() < 1e-13 * v.abs().max(1.0), "{x} vs {v}");
    }

    #[test]
    fn bernoulli_values() {
        let t = bernoulli_table();
        assert_eq!(t[0], BigRational::one());
        assert_eq!(t[1], BigRational::new((-1).into(), 2.into()));
        assert_eq!(t[2], BigRational::new(1.into(), 6.into()));
        assert_eq!(t[12], BigRational::new((-691).into(), 2730.into()));
        assert!(t[3].is_zero() && t[101].is_zero());
    }

    #[test]
    fn gamma_values() {
        assert_close(&gamma(&ball(5.0)).unwrap(), 24.0);
        assert_close(&gamma(&ball(0.5)).unwrap(), std::f64::consts::PI.sqrt());
        assert_close(&lgamma(&ball(100.0)).unwrap(), 359.134_205_369_575_4);
    }

    #[test]
    fn polygamma_values() {
        let euler = 0.577_215_664_901_532_9;
        assert_close(&digamma(&ball(1.0)).unwrap(), -euler);
        assert_close(&digamma(&ball(0.5)).unwrap(), -euler - 2.0 * std::f64::consts::LN_2);
        let pi2 = std::f64::consts::PI * std::f64::consts::PI;
        assert_close(&trigamma(&ball(1.0)).unwrap(), pi2 / 6.0);
        assert_close(&trigamma(&ball(0.5)).unwrap(), pi2 / 2.0);
    }

    #[test]
    fn zeta_values() {
        let pi2 = std::f64::consts::PI * std::f64::consts::PI;
        assert_close(&zeta(&ball(2.0)).unwrap(), pi2 / 6.0);
        assert_close(&zeta(&ball(3.0)).unwrap(), 1.202_056_903_159_594_2);
        assert_close(&zeta(&ball(1.5)).unwrap(), 2.612_375_348_685_488);
        let z = zeta(&CertifiedReal::from_ratio(11, 10, 128)).unwrap();
        assert_close(&z, 10.584_448_464_950_809);
        // the Euler-Maclaurin route agrees with the closed form at an even integer
        let direct = zeta(&CertifiedReal::new(Dyadic::from_int(4), Dyadic::from_f64(1e-60), 128)).unwrap();
        assert!(direct.overlaps(&zeta_even(2, 128).unwrap()));
    }

    #[test]
    fn bernoulli_polynomial() {
        let half = BigRational::new(1.into(), 2.into());
        assert_eq!(bernoulli_poly(2, &half).unwrap(), BigRational::new((-1).into(), 12.into()));
        assert_eq!(bernoulli_poly(1, &BigRational::zero()).unwrap(), BigRational::new((-1).into(), 2.into()));
    }
}
