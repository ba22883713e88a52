//! Certified values of Dedekind zeta functions and relative L-functions at
//! integers `s >= 2`, exact recovery of `zeta_k(-1)` and `L(-2)` through the
//! functional equations, and an independent generalised-Bernoulli oracle.

use crate::arith::{fmt_rational, primes_up_to};
use crate::datasets::{is_fundamental_discriminant, FieldPairRecord, NumberFieldRecord};
use crate::dyadic::{Dyadic, Round};
use crate::error::{Error, Result};
use crate::ffpoly::residue_degrees;
use crate::real::{pi, CertifiedReal};
use crate::special::{bernoulli_poly, zeta_even};
use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

/// Primes per block of the Euler product fold.
pub const BLOCK: usize = 8192;

/// Evaluation parameters for Euler products.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct LConfig {
    pub prime_limit: u64,
    pub precision_bits: u32,
}

impl Default for LConfig {
    fn default() -> Self {
        LConfig { prime_limit: 1_000_000, precision_bits: 192 }
    }
}

impl LConfig {
    /// The configuration used for the independent re-check.
    pub fn recheck(&self) -> Self {
        LConfig { prime_limit: 2 * self.prime_limit, precision_bits: self.precision_bits.max(128) + 64 }
    }
}

/// Bound on admissible denominators for reconstruction.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Qmax {
    /// A fixed bound.
    Fixed(u64),
    /// The largest `q` with `2 q^2 rad < 1`, capped.
    Auto { cap: u64 },
}

impl Default for Qmax {
    fn default() -> Self {
        Qmax::Auto { cap: 1_000_000 }
    }
}

impl Qmax {
    /// The denominator bound for a ball of the given radius.
    pub fn resolve(&self, x: &CertifiedReal) -> BigInt {
        match *self {
            Qmax::Fixed(q) => BigInt::from(q),
            Qmax::Auto { cap } => {
                if x.rad().is_zero() {
                    return BigInt::from(cap);
                }
                // q^2 < 1 / (2 rad)
                let inv = Dyadic::from_int(1).mul_pow2(-1).to_rational() / x.rad().to_rational();
                let mut q = inv.floor().to_integer().sqrt();
                while BigRational::from_integer(&q * &q) >= inv {
                    q -= 1;
                }
                q.min(BigInt::from(cap)).max(BigInt::zero())
            }
        }
    }

    pub fn parse(s: &str) -> Result<Self> {
        if s == "auto" {
            return Ok(Qmax::default());
        }
        if let Some(rest) = s.strip_prefix("auto:") {
            let cap = rest.parse().map_err(|_| Error::Parse { context: "qmax".into(), message: s.into() })?;
            return Ok(Qmax::Auto { cap });
        }
        s.parse().map(Qmax::Fixed).map_err(|_| Error::Parse { context: "qmax".into(), message: s.into() })
    }
}

/// Residue degrees of all places over every prime up to a limit.
#[derive(Debug)]
pub struct LocalDegrees {
    pub limit: u64,
    pub primes: Vec<u64>,
    offsets: Vec<u32>,
    degrees: Vec<u8>,
}

impl LocalDegrees {
    pub fn compute(field: &NumberFieldRecord, limit: u64) -> Result<Self> {
        let primes = primes_up_to(limit);
        let lists: Vec<Vec<u32>> = primes.par_iter().map(|&p| residue_degrees(field, p)).collect::<Result<_>>()?;
        let mut offsets = Vec::with_capacity(primes.len() + 1);
        let mut degrees = Vec::new();
        offsets.push(0);
        for l in lists {
            degrees.extend(l.iter().map(|&f| f as u8));
            offsets.push(degrees.len() as u32);
        }
        Ok(LocalDegrees { limit, primes, offsets, degrees })
    }

    pub fn len(&self) -> usize {
        self.primes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.primes.is_empty()
    }

    pub fn degrees(&self, i: usize) -> &[u8] {
        &self.degrees[self.offsets[i] as usize..self.offsets[i + 1] as usize]
    }

    /// Number of primes `<= limit`.
    pub fn count_up_to(&self, limit: u64) -> usize {
        self.primes.partition_point(|&p| p <= limit)
    }
}

fn field_key(field: &NumberFieldRecord) -> String {
    let poly: Vec<String> = field.poly.iter().map(|c| c.to_string()).collect();
    format!("{}|{}", field.label, poly.join(","))
}

/// Cached local degrees covering at least `limit`.
pub fn local_degrees(field: &NumberFieldRecord, limit: u64) -> Result<Arc<LocalDegrees>> {
    static CACHE: OnceLock<Mutex<HashMap<String, Arc<LocalDegrees>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    let key = field_key(field);
    if let Some(v) = cache.lock().expect("split cache poisoned").get(&key) {
        if v.limit >= limit {
            return Ok(v.clone());
        }
    }
    let v = Arc::new(LocalDegrees::compute(field, limit)?);
    cache.lock().expect("split cache poisoned").insert(key, v.clone());
    Ok(v)
}

/// How block products are evaluated; both give bitwise identical results.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Fold {
    Sequential,
    Parallel,
}

/// `(A, B)` with local factor `A / B` at `p`: the zeta factor of `num`
/// divided by the zeta factor of `den`.
fn local_ratio(p: u64, s: u32, num: &[u8], den: &[u8]) -> (BigInt, BigInt) {
    let pb = BigInt::from(p);
    let mut a = BigInt::one();
    let mut b = BigInt::one();
    for &f in num {
        let q = num_traits::pow(pb.clone(), f as usize * s as usize);
        b *= &q - 1u32;
        a *= q;
    }
    for &f in den {
        let q = num_traits::pow(pb.clone(), f as usize * s as usize);
        a *= &q - 1u32;
        b *= q;
    }
    (a, b)
}

/// Fixed-point product of local factors over one block of primes.
fn block_product(
    num: &LocalDegrees,
    den: Option<&LocalDegrees>,
    range: std::ops::Range<usize>,
    s: u32,
    wp: u32,
) -> CertifiedReal {
    let mut x = BigInt::one() << wp as usize;
    let mut err = BigInt::zero();
    for i in range {
        let p = num.primes[i];
        let dd = den.map_or(&[][..], |d| d.degrees(i));
        let (a, b) = local_ratio(p, s, num.degrees(i), dd);
        x = (&x * &a).div_floor(&b);
        // |true - x| <= err * a / b + 1 after a floored step
        err = (&err * &a + &b - 1u32).div_floor(&b) + 1u32;
    }
    CertifiedReal::new(Dyadic::new(x, -(wp as i64)), Dyadic::new(err, -(wp as i64)), wp)
}

/// Ordered fold of block products over the first `count` primes.
pub fn euler_product(
    num: &LocalDegrees,
    den: Option<&LocalDegrees>,
    count: usize,
    s: u32,
    wp: u32,
    fold: Fold,
) -> CertifiedReal {
    if let Some(d) = den {
        assert_eq!(&d.primes[..count], &num.primes[..count], "prime lists differ");
    }
    let ranges: Vec<std::ops::Range<usize>> =
        (0..count).step_by(BLOCK).map(|a| a..(a + BLOCK).min(count)).collect();
    let blocks: Vec<CertifiedReal> = match fold {
        Fold::Sequential => ranges.into_iter().map(|r| block_product(num, den, r, s, wp)).collect(),
        Fold::Parallel => ranges.into_par_iter().map(|r| block_product(num, den, r, s, wp)).collect(),
    };
    blocks.iter().fold(CertifiedReal::one(wp), |acc, b| acc.mul(b))
}

/// Upper bound for `sum_{p > P} p^{-s} / (1 - p^{-s})`.
pub fn prime_tail_bound(limit: u64, s: u32, wp: u32) -> Result<CertifiedReal> {
    let p = CertifiedReal::from_int(limit, wp);
    let lnp = p.ln()?;
    let sr = CertifiedReal::from_int(s, wp);
    // pi(t) <= t / ln t * (1 + 1.2762 / ln t) for t > 1
    let c = CertifiedReal::parse_exact("1.2762", wp)?.div(&lnp)?.add_int(1);
    let p1s = p.powi(1 - s as i64)?;
    let ps = p.powi(-(s as i64))?;
    let one = CertifiedReal::one(wp);
    let bound = sr
        .mul(&c)
        .mul(&p1s)
        .div(&sr.add_int(-1).mul(&lnp))?
        .div(&one.sub(&ps))?;
    Ok(CertifiedReal::exact(bound.mag(), wp))
}

/// Multiplies `x` by every value of `exp(t)`, `t` in `[lo, hi]`.
fn widen_log(x: &CertifiedReal, lo: &CertifiedReal, hi: &CertifiedReal) -> Result<CertifiedReal> {
    let a = lo.exp()?;
    let b = hi.exp()?;
    let cands = [x.lo().mul(&a.lo()), x.lo().mul(&b.hi()), x.hi().mul(&a.lo()), x.hi().mul(&b.hi())];
    let mut mn = cands[0].clone();
    let mut mx = cands[0].clone();
    for c in &cands[1..] {
        mn = mn.minimum(c);
        mx = mx.maximum(c);
    }
    Ok(CertifiedReal::from_endpoints(&mn, &mx, x.precision_bits()))
}

fn check_args(s: u32, cfg: &LConfig) -> Result<()> {
    if s < 2 {
        return Err(Error::Domain(format!("s = {s} must be at least 2")));
    }
    if cfg.prime_limit < 100 {
        return Err(Error::Domain(format!("prime limit {} must be at least 100", cfg.prime_limit)));
    }
    Ok(())
}

type ValueCache = OnceLock<Mutex<HashMap<(String, u32, LConfig), CertifiedReal>>>;

fn cached_value(
    cache: &'static ValueCache,
    key: (String, u32, LConfig),
    f: impl FnOnce() -> Result<CertifiedReal>,
) -> Result<CertifiedReal> {
    let map = cache.get_or_init(|| Mutex::new(HashMap::new()));
    if let Some(v) = map.lock().expect("value cache poisoned").get(&key) {
        return Ok(v.clone());
    }
    let v = f()?;
    map.lock().expect("value cache poisoned").insert(key, v.clone());
    Ok(v)
}

/// Enclosure of `zeta_k(s)` from the Euler product over `p <= P` and a tail bound.
pub fn zeta_k(field: &NumberFieldRecord, s: u32, cfg: &LConfig) -> Result<CertifiedReal> {
    zeta_k_with(field, s, cfg, Fold::Parallel)
}

pub fn zeta_k_with(field: &NumberFieldRecord, s: u32, cfg: &LConfig, fold: Fold) -> Result<CertifiedReal> {
    check_args(s, cfg)?;
    static CACHE: ValueCache = OnceLock::new();
    let key = (format!("{}#{:?}", field_key(field), fold), s, *cfg);
    cached_value(&CACHE, key, || {
        let wp = cfg.precision_bits + 64;
        let ld = local_degrees(field, cfg.prime_limit)?;
        let count = ld.count_up_to(cfg.prime_limit);
        let prod = euler_product(&ld, None, count, s, wp, fold);
        let tail = prime_tail_bound(cfg.prime_limit, s, wp)?.mul_int(field.degree);
        let r = widen_log(&prod, &CertifiedReal::zero(wp), &tail)?;
        Ok(r.with_precision(cfg.precision_bits))
    })
}

/// Enclosure of `L_{ell|k}(s) = zeta_ell(s) / zeta_k(s)` from per-prime local quotients.
pub fn rel_l(pair: &FieldPairRecord, s: u32, cfg: &LConfig) -> Result<CertifiedReal> {
    rel_l_with(pair, s, cfg, Fold::Parallel)
}

pub fn rel_l_with(pair: &FieldPairRecord, s: u32, cfg: &LConfig, fold: Fold) -> Result<CertifiedReal> {
    check_args(s, cfg)?;
    pair.validate()?;
    static CACHE: ValueCache = OnceLock::new();
    let key = (format!("{}/{}#{:?}", field_key(&pair.ell), field_key(&pair.k), fold), s, *cfg);
    cached_value(&CACHE, key, || {
        let wp = cfg.precision_bits + 64;
        let ll = local_degrees(&pair.ell, cfg.prime_limit)?;
        let lk = local_degrees(&pair.k, cfg.prime_limit)?;
        let count = ll.count_up_to(cfg.prime_limit);
        let prod = euler_product(&ll, Some(&lk), count, s, wp, fold);
        let tail = prime_tail_bound(cfg.prime_limit, s, wp)?.mul_int(pair.d());
        let r = widen_log(&prod, &tail.neg(), &tail)?;
        Ok(r.with_precision(cfg.precision_bits))
    })
}

/// `zeta_k(-1) = zeta_k(2) D_k^{3/2} / ((-2)^d pi^{2d})` as an enclosure.
pub fn zeta_k_minus1_ball(field: &NumberFieldRecord, cfg: &LConfig) -> Result<CertifiedReal> {
    if !field.is_totally_real() {
        return Err(Error::Domain(format!("{} is not totally real", field.label)));
    }
    let wp = cfg.precision_bits + 32;
    let d = field.degree as i64;
    let z2 = zeta_k(field, 2, cfg)?.with_precision(wp);
    let dk = CertifiedReal::from_int(field.disc.clone(), wp);
    let dk32 = dk.sqrt()?.mul(&dk);
    let denom = pi(wp).powi(2 * d)?.mul_int(BigInt::from(-2).pow(d as u32));
    Ok(z2.mul(&dk32).div(&denom)?.with_precision(cfg.precision_bits))
}

/// `L(-2) = L(3) (D_ell / D_k)^{5/2} / ((-2)^d pi^{3d})` as an enclosure.
pub fn rel_l_minus2_ball(pair: &FieldPairRecord, cfg: &LConfig) -> Result<CertifiedReal> {
    let wp = cfg.precision_bits + 32;
    let d = pair.d() as i64;
    let l3 = rel_l(pair, 3, cfg)?.with_precision(wp);
    let ratio = CertifiedReal::from_rational(&BigRational::new(pair.ell.disc.clone(), pair.k.disc.clone()), wp);
    let r52 = ratio.sqrt()?.mul(&ratio.sqr());
    let denom = pi(wp).powi(3 * d)?.mul_int(BigInt::from(-2).pow(d as u32));
    Ok(l3.mul(&r52).div(&denom)?.with_precision(cfg.precision_bits))
}

/// Simplest rational (smallest denominator) in `[lo, hi]`.
pub fn simplest_between(lo: &BigRational, hi: &BigRational) -> BigRational {
    assert!(lo <= hi, "empty interval");
    if lo.is_positive() {
        let c = lo.ceil();
        if &c <= hi {
            return c;
        }
        let fl = lo.floor();
        let inner = simplest_between(&(hi - &fl).recip(), &(lo - &fl).recip());
        fl + inner.recip()
    } else if hi.is_negative() {
        -simplest_between(&-hi, &-lo)
    } else {
        BigRational::zero()
    }
}

/// The unique rational with denominator `<= qmax` inside the ball.
pub fn rational_reconstruct(x: &CertifiedReal, qmax: &BigInt) -> Result<BigRational> {
    let rad = x.rad().to_rational();
    let limit = BigRational::new(BigInt::one(), BigInt::from(2) * qmax * qmax);
    if rad >= limit {
        return Err(Error::ReconstructionUncertain { radius: format!("{:.3e}", x.rad_f64()), qmax: qmax.to_string() });
    }
    let lo = x.lo().to_rational();
    let hi = x.hi().to_rational();
    let c = simplest_between(&lo, &hi);
    if c.denom() > qmax {
        let (a, b) = x.interval_strings(25);
        return Err(Error::NoCandidate { lo: a, hi: b, qmax: qmax.to_string() });
    }
    // any other admissible rational is at least 1 / (qmax den(c)) away from c
    let gap = BigRational::new(BigInt::one(), qmax * c.denom());
    for (a, b) in [(lo.clone(), &c - &gap), (&c + &gap, hi.clone())] {
        if a <= b {
            let other = simplest_between(&a, &b);
            if other.denom() <= qmax {
                return Err(Error::MultipleCandidates {
                    first: fmt_rational(&c, true),
                    second: fmt_rational(&other, true),
                    qmax: qmax.to_string(),
                });
            }
        }
    }
    Ok(c)
}

/// An exactly recovered value with the enclosures that certify it.
#[derive(Clone, Debug)]
pub struct ExactRecovery {
    pub value: BigRational,
    pub ball: CertifiedReal,
    pub qmax: BigInt,
    pub recheck: Option<(CertifiedReal, BigInt)>,
}

fn recover(
    compute: impl Fn(&LConfig) -> Result<CertifiedReal>,
    cfg: &LConfig,
    qmax: Qmax,
    recheck: bool,
) -> Result<ExactRecovery> {
    let ball = compute(cfg)?;
    let q = qmax.resolve(&ball);
    let value = rational_reconstruct(&ball, &q)?;
    let recheck = if recheck {
        let cfg2 = cfg.recheck();
        let ball2 = compute(&cfg2)?;
        let q2 = qmax.resolve(&ball2);
        let v2 = rational_reconstruct(&ball2, &q2)?;
        if v2 != value {
            return Err(Error::MultipleCandidates {
                first: fmt_rational(&value, true),
                second: fmt_rational(&v2, true),
                qmax: format!("{q} / {q2} (two-precision re-check)"),
            });
        }
        Some((ball2, q2))
    } else {
        None
    };
    Ok(ExactRecovery { value, ball, qmax: q, recheck })
}

/// Exact `zeta_k(-1)` by reconstruction.
pub fn zeta_k_minus1_exact(field: &NumberFieldRecord, cfg: &LConfig, qmax: Qmax, recheck: bool) -> Result<ExactRecovery> {
    recover(|c| zeta_k_minus1_ball(field, c), cfg, qmax, recheck)
}

/// Exact `L_{ell|k}(-2)` by reconstruction.
pub fn rel_l_minus2_exact(pair: &FieldPairRecord, cfg: &LConfig, qmax: Qmax, recheck: bool) -> Result<ExactRecovery> {
    recover(|c| rel_l_minus2_ball(pair, c), cfg, qmax, recheck)
}

/// A real quadratic Dirichlet character `a -> (D / a)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct QuadraticCharacter {
    pub conductor: u64,
    /// `values[a]` for `a = 0 .. conductor - 1`.
    pub values: Vec<i8>,
}

/// Kronecker symbol `(d / n)` for `n >= 1`.
pub fn kronecker_symbol(d: i64, n: u64) -> i8 {
    let mut result = 1i8;
    for (p, e) in crate::arith::factor_u64(n) {
        let chi = if p == 2 {
            match d.rem_euclid(8) {
                1 | 7 => 1,
                3 | 5 => -1,
                _ => 0,
            }
        } else {
            crate::ffpoly::legendre(d, p) as i8
        };
        if e % 2 == 1 {
            result *= chi;
        } else if chi == 0 {
            result = 0;
        }
    }
    result
}

impl QuadraticCharacter {
    /// The character of the quadratic field of fundamental discriminant `d`.
    pub fn from_discriminant(d: i64) -> Result<Self> {
        if !is_fundamental_discriminant(d) {
            return Err(Error::NonPrimitiveCharacter(format!("{d} is not a fundamental discriminant")));
        }
        let f = d.unsigned_abs();
        let values = (0..f).map(|a| if a == 0 { 0 } else { kronecker_symbol(d, a) }).collect();
        Ok(QuadraticCharacter { conductor: f, values })
    }

    pub fn new(conductor: u64, values: Vec<i8>) -> Result<Self> {
        let chi = QuadraticCharacter { conductor, values };
        chi.validate()?;
        Ok(chi)
    }

    pub fn value(&self, a: u64) -> i8 {
        self.values[(a % self.conductor) as usize]
    }

    fn validate(&self) -> Result<()> {
        let f = self.conductor;
        let bad = |m: &str| Err(Error::NonPrimitiveCharacter(m.into()));
        if f == 0 || self.values.len() as u64 != f {
            return bad("value table must have one entry per residue");
        }
        for a in 0..f {
            let v = self.value(a);
            if (a.gcd(&f) == 1) != (v != 0) || !(-1..=1).contains(&v) {
                return bad("values must be +-1 exactly on units");
            }
            for b in 0..f {
                if self.value(a * b) != v * self.value(b) {
                    return bad("not completely multiplicative");
                }
            }
        }
        Ok(())
    }

    /// Primitive: the character is nontrivial on units congruent to 1 modulo
    /// every proper divisor `f / q` of the conductor.
    pub fn is_primitive(&self) -> bool {
        let f = self.conductor;
        if f == 1 {
            return true;
        }
        crate::arith::factor_u64(f).iter().all(|&(q, _)| {
            let m = f / q;
            (0..f).any(|a| a % m == 1 % m && a.gcd(&f) == 1 && self.value(a) != 1)
        })
    }
}

/// `L(1 - n, chi) = -B_{n,chi} / n` with `B_{n,chi} = f^{n-1} sum_a chi(a) B_n(a / f)`.
pub fn bernoulli_l(chi: &QuadraticCharacter, n: u32) -> Result<BigRational> {
    if !chi.is_primitive() {
        return Err(Error::NonPrimitiveCharacter(format!("conductor {}", chi.conductor)));
    }
    if n == 0 {
        return Err(Error::Domain("n must be positive".into()));
    }
    let f = chi.conductor;
    let fb = BigInt::from(f);
    let mut sum = BigRational::zero();
    for a in 1..=f {
        let v = chi.value(a);
        if v != 0 {
            let b = bernoulli_poly(n as usize, &BigRational::new(BigInt::from(a), fb.clone()))?;
            sum += b * BigInt::from(v);
        }
    }
    let bn = sum * fb.pow(n - 1);
    Ok(-bn / BigInt::from(n))
}

/// `zeta(-1) L(-1, chi_D)` for a real quadratic field of discriminant `D`.
pub fn real_quadratic_zeta_m1(disc: i64) -> Result<BigRational> {
    let chi = QuadraticCharacter::from_discriminant(disc)?;
    Ok(BigRational::new(BigInt::from(-1), BigInt::from(12)) * bernoulli_l(&chi, 2)?)
}

/// Certified checks of `zeta_k(2)^{1/2} > 1` and `zeta_k(2) L(3) > zeta(2d)^{1/2}`.
pub fn cor28_check(pair: &FieldPairRecord, cfg: &LConfig) -> Result<(bool, bool)> {
    let z2 = zeta_k(&pair.k, 2, cfg)?;
    let l3 = rel_l(pair, 3, cfg)?;
    let first = z2.sqrt()?.certainly_gt_rational(&BigRational::one());
    let z2d = zeta_even(pair.d(), cfg.precision_bits)?.sqrt()?;
    let second = z2.mul(&l3).certainly_gt(&z2d);
    Ok((first, second))
}

/// Certified strict sandwich `zeta(2d) < zeta_k(2) < zeta(2)^d`.
pub fn remark29_check(field: &NumberFieldRecord, cfg: &LConfig) -> Result<bool> {
    let d = field.degree;
    let z = zeta_k(field, 2, cfg)?;
    let lower = zeta_even(d, cfg.precision_bits)?;
    let upper = zeta_even(1, cfg.precision_bits)?.powi(d as i64)?;
    Ok(lower.certainly_lt(&z) && z.certainly_lt(&upper))
}

/// Decimal width helper for reports: `lo` rounded down, `hi` rounded up.
pub fn ball_strings(x: &CertifiedReal) -> (String, String) {
    (x.lo().to_decimal_sig(25, Round::Down), x.hi().to_decimal_sig(25, Round::Up))
}

/// Converts a small exact rational to `f64` for display.
pub fn rat_f64(q: &BigRational) -> f64 {
    q.numer().to_f64().unwrap_or(f64::NAN) / q.denom().to_f64().unwrap_or(f64::NAN)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::rat;

    #[test]
    fn simplest_rationals() {
        assert_eq!(simplest_between(&rat(49, 100), &rat(51, 100)), rat(1, 2));
        assert_eq!(simplest_between(&rat(-51, 100), &rat(-49, 100)), rat(-1, 2));
        assert_eq!(simplest_between(&rat(-1, 100), &rat(1, 100)), rat(0, 1));
        assert_eq!(simplest_between(&rat(3, 1), &rat(3, 1)), rat(3, 1));
        assert_eq!(simplest_between(&rat(2, 7), &rat(2, 7)), rat(2, 7));
    }

    #[test]
    fn reconstruct_basic() {
        let x = CertifiedReal::from_endpoints(&Dyadic::from_f64(0.4999999999), &Dyadic::from_f64(0.5000000001), 128);
        assert_eq!(rational_reconstruct(&x, &BigInt::from(1_000_000)).unwrap_err().to_string().contains("uncertain"), true);
        assert_eq!(rational_reconstruct(&x, &BigInt::from(1000)).unwrap(), rat(1, 2));
        let y = CertifiedReal::from_rational(&rat(23, 24), 128);
        assert_eq!(rational_reconstruct(&y, &BigInt::from(1_000_000)).unwrap(), rat(23, 24));
    }

    #[test]
    fn bernoulli_oracle_values() {
        let chi = QuadraticCharacter::from_discriminant(-4).unwrap();
        assert_eq!(bernoulli_l(&chi, 3).unwrap(), rat(-1, 2));
        let chi = QuadraticCharacter::from_discriminant(5).unwrap();
        assert_eq!(bernoulli_l(&chi, 2).unwrap(), rat(-2, 5));
        assert_eq!(real_quadratic_zeta_m1(5).unwrap(), rat(1, 30));
        let chi = QuadraticCharacter::from_discriminant(-3).unwrap();
        assert_eq!(bernoulli_l(&chi, 3).unwrap(), rat(-2, 9));
    }

    #[test]
    fn non_primitive_rejected() {
        // the principal character modulo 4 is not primitive
        let chi = QuadraticCharacter::new(4, vec![0, 1, 0, 1]).unwrap();
        assert!(!chi.is_primitive());
        assert!(bernoulli_l(&chi, 2).is_err());
    }
}
