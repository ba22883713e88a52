//! Analytic bounds on discriminants, regulators and root discriminants,
//! evaluated as certified enclosures, and their optimisation over a free
//! parameter.

use crate::arith::rat;
use crate::error::{Error, Result};
use crate::real::{parse_rational, pi, CertifiedReal};
use crate::special::{digamma, gamma, trigamma, zeta, zeta_even};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;

/// Default working precision for bound evaluation.
pub const DEFAULT_PREC: u32 = 128;

/// Slavutskii's constant and exponent slope.
pub const SLAVUTSKII: (&str, &str) = ("0.00136", "0.57");
/// Zimmert's constant and exponent slope.
pub const ZIMMERT: (&str, &str) = ("0.02", "0.1");

fn wp(prec: u32) -> u32 {
    prec + 32
}

fn real(q: &BigRational, prec: u32) -> CertifiedReal {
    CertifiedReal::from_rational(q, prec)
}

fn dec(s: &str, prec: u32) -> CertifiedReal {
    CertifiedReal::parse_exact(s, prec).expect("decimal literal")
}

fn check_delta(delta: &BigRational) -> Result<()> {
    if !delta.is_positive() || delta > &rat(2, 1) {
        return Err(Error::Domain(format!("delta = {delta} must lie in (0, 2]")));
    }
    Ok(())
}

fn check_d(d: u32) -> Result<()> {
    if d == 0 {
        return Err(Error::Domain("degree must be positive".into()));
    }
    Ok(())
}

/// `Gamma(1 + delta) zeta(1 + delta)^2`.
fn gamma_zeta_sq(delta: &BigRational, w: u32) -> Result<CertifiedReal> {
    let s = real(&(delta + BigRational::one()), w);
    Ok(gamma(&s)?.mul(&zeta(&s)?.sqr()))
}

/// `2^{3-delta} pi^{4-delta} Gamma(1+delta) zeta(1+delta)^2`.
fn phi_core(delta: &BigRational, w: u32) -> Result<CertifiedReal> {
    let two = CertifiedReal::from_int(2, w);
    let a = two.pow_rational(&(rat(3, 1) - delta))?;
    let b = pi(w).pow_rational(&(rat(4, 1) - delta))?;
    Ok(a.mul(&b).mul(&gamma_zeta_sq(delta, w)?))
}

/// `w s (s-1) Gamma(s)^d ((2 pi)^{-2d} D_ell)^{s/2} zeta_ell(s)`, per unit `w`.
pub fn brauer_siegel_rhs(s: &CertifiedReal, d: u32, dl: &BigRational, zeta_ls: &CertifiedReal) -> Result<CertifiedReal> {
    check_d(d)?;
    if !s.certainly_gt_rational(&BigRational::one()) {
        return Err(Error::Domain("s must exceed 1".into()));
    }
    let prec = s.precision_bits();
    let w = wp(prec);
    let s = s.with_precision(w);
    let base = real(dl, w).div(&pi(w).mul_int(2).powi(2 * d as i64)?)?;
    let v = s
        .mul(&s.add_int(-1))
        .mul(&gamma(&s)?.powi(d as i64)?)
        .mul(&base.pow(&s.mul_pow2(-1))?)
        .mul(&zeta_ls.with_precision(w));
    Ok(v.with_precision(prec))
}

/// Which lower bound for the regulator of a totally complex field.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum RegulatorBound {
    Zimmert,
    Slavutskii,
}

/// `R_ell / w_ell >= c e^{a d}`.
pub fn regulator_lb(kind: RegulatorBound, d: u32, prec: u32) -> Result<CertifiedReal> {
    check_d(d)?;
    let w = wp(prec);
    let (c, a) = match kind {
        RegulatorBound::Zimmert => ZIMMERT,
        RegulatorBound::Slavutskii => SLAVUTSKII,
    };
    Ok(dec(c, w).mul(&dec(a, w).mul_int(d).exp()?).with_precision(prec))
}

/// Upper bound for `D_ell^{1/2d}` from the regulator bound `rw` and `delta`.
pub fn phi1(d: u32, rw: &BigRational, delta: &BigRational, prec: u32) -> Result<CertifiedReal> {
    check_d(d)?;
    check_delta(delta)?;
    let w = wp(prec);
    let three_m = rat(3, 1) - delta;
    let first = real(&(delta * (delta + BigRational::one())), w)
        .div(&zeta_even(d, w)?.sqrt()?.mul(&real(rw, w)))?
        .pow_rational(&(BigRational::one() / (&three_m * BigInt::from(d))))?;
    let second = phi_core(delta, w)?.pow_rational(&three_m.recip())?;
    Ok(first.mul(&second).with_precision(prec))
}

/// `2^{4d} pi^{5d} h3 / zeta(2d)^{1/2}`.
fn phi2_base(d: u32, h3: u64, w: u32) -> Result<CertifiedReal> {
    pi(w).powi(5 * d as i64)?.mul_pow2(4 * d as i64).mul_int(h3).div(&zeta_even(d, w)?.sqrt()?)
}

/// Upper bound for `D_ell^{1/2d}` in terms of `h_{ell,3}`.
pub fn phi2(d: u32, h3: u64, prec: u32) -> Result<CertifiedReal> {
    check_d(d)?;
    let w = wp(prec);
    Ok(phi2_base(d, h3, w)?.pow_rational(&rat(1, 4 * d as i64))?.with_precision(prec))
}

/// Upper bound for `D_ell / D_k^2`.
pub fn frak_p(d: u32, dk: &BigRational, h3: u64, prec: u32) -> Result<CertifiedReal> {
    check_d(d)?;
    if !dk.is_positive() {
        return Err(Error::Domain("D_k must be positive".into()));
    }
    let w = wp(prec);
    let v = phi2_base(d, h3, w)?.div(&real(dk, w).powi(4)?)?.pow_rational(&rat(2, 5))?;
    Ok(v.with_precision(prec))
}

/// Upper bound for `D_ell^{1/2d}` from the Slavutskii regulator bound.
pub fn f_delta(delta: &BigRational, d: u32, prec: u32) -> Result<CertifiedReal> {
    check_d(d)?;
    check_delta(delta)?;
    let w = wp(prec);
    let three_m = rat(3, 1) - delta;
    let c = real(&parse_rational(SLAVUTSKII.0)?, w);
    let first = real(&(delta * (delta + BigRational::one())), w)
        .div(&c)?
        .pow_rational(&(BigRational::one() / (&three_m * BigInt::from(d))))?;
    let second = phi_core(delta, w)?
        .mul(&dec(SLAVUTSKII.1, w).neg().exp()?)
        .pow_rational(&three_m.recip())?;
    Ok(first.mul(&second).with_precision(prec))
}

/// Upper bound for `D_ell` when `k` is the rationals.
pub fn bound_kq(delta: &BigRational, prec: u32) -> Result<CertifiedReal> {
    check_delta(delta)?;
    let w = wp(prec);
    let num = pi(w)
        .powi(4)?
        .mul_int(16 * 25)
        .mul(&real(&(delta * (delta + BigRational::one())), w))
        .mul(&gamma_zeta_sq(delta, w)?);
    let den = pi(w)
        .mul_int(2)
        .pow_rational(delta)?
        .mul(&dec(ZIMMERT.1, w).exp()?)
        .mul(&zeta_even(1, w)?.sqrt()?);
    let v = num.div(&den)?.pow_rational(&(rat(2, 1) / (rat(4, 1) - delta)))?;
    Ok(v.with_precision(prec))
}

/// `D_ell < (2^5 3 pi^3 n3 zeta(3))^{2/5}` for `k` the rationals; returns the
/// enclosure and the resulting integer cut.
pub fn kq_n3_cut(n3: u64, prec: u32) -> Result<(CertifiedReal, u64)> {
    let w = wp(prec);
    let z3 = zeta(&CertifiedReal::from_int(3, w))?;
    let v = pi(w).powi(3)?.mul_int(96 * n3).mul(&z3).pow_rational(&rat(2, 5))?;
    let cut = strict_floor(&v)?;
    Ok((v.with_precision(prec), cut))
}

/// The largest integer strictly below the true value, which must be the
/// same for every point of the ball.
pub fn strict_floor(x: &CertifiedReal) -> Result<u64> {
    let lo = x.lo().ceil_int();
    let hi = x.hi().ceil_int();
    if lo != hi {
        return Err(Error::Domain(format!("ball {x} too wide for an integer cut")));
    }
    (hi - 1u32).try_into().map_err(|_| Error::Domain("cut out of range".into()))
}

/// Lower bound for `D_k^{1/d}` from a lower bound on `D_ell`.
pub fn xi(d: u32, dl: &BigRational, rw: &BigRational, delta: &BigRational, prec: u32) -> Result<CertifiedReal> {
    check_d(d)?;
    check_delta(delta)?;
    let w = wp(prec);
    let first = real(rw, w)
        .mul(&zeta_even(d, w)?.sqrt()?)
        .div(&real(&(delta * (delta + BigRational::one())), w))?
        .pow_rational(&rat(1, d as i64))?;
    let second = pi(w)
        .mul_int(2)
        .pow_rational(&(delta + BigRational::one()))?
        .div(&pi(w).powi(5)?.mul_int(16).mul(&gamma_zeta_sq(delta, w)?))?;
    let root = real(dl, w).pow_rational(&rat(1, 2 * d as i64))?;
    let third = root.pow_rational(&(rat(4, 1) - delta))?;
    Ok(first.mul(&second).mul(&third).with_precision(prec))
}

/// Remak-type lower bound for `R_ell / w_ell` when `d = 3`.
pub fn remak_r(dk: &BigRational, w_ell: u32, prec: u32) -> Result<CertifiedReal> {
    if w_ell == 0 {
        return Err(Error::Domain("w_ell must be positive".into()));
    }
    let w = wp(prec);
    let t = real(dk, w).ln()?.sub(&CertifiedReal::from_int(3, w).ln()?.mul_int(3));
    if !t.is_positive() {
        return Err(Error::Domain("D_k must exceed 27".into()));
    }
    Ok(t.mul_pow2(-2).sqr().mul_int(2).div_int(w_ell).with_precision(prec))
}

/// `27^{1/4d} (16 pi^5)^{1/4}`.
pub fn phi3(d: u32, prec: u32) -> Result<CertifiedReal> {
    check_d(d)?;
    let w = wp(prec);
    let a = CertifiedReal::from_int(27, w).pow_rational(&rat(1, 4 * d as i64))?;
    let b = pi(w).powi(5)?.mul_int(16).pow_rational(&rat(1, 4))?;
    Ok(a.mul(&b).with_precision(prec))
}

/// `b(x) = (5 + sqrt(12 x^2 - 5)) / 6`.
pub fn odlyzko_b(x: &CertifiedReal) -> Result<CertifiedReal> {
    let r = x.sqr().mul_int(12).add_int(-5);
    Ok(r.sqrt()?.add_int(5).div_int(6))
}

/// `alpha = sqrt((14 - sqrt(128)) / 34)`.
pub fn odlyzko_alpha(prec: u32) -> Result<CertifiedReal> {
    CertifiedReal::from_int(14, prec).sub(&CertifiedReal::from_int(128, prec).sqrt()?).div_int(34).sqrt()
}

/// Positive root of `b(x) = 1 + alpha x`.
pub fn odlyzko_x0(prec: u32) -> Result<CertifiedReal> {
    let a = odlyzko_alpha(prec)?;
    let a2 = a.sqr();
    let num = a.add(&CertifiedReal::from_int(2, prec).sub(&a2.mul_int(5)).sqrt()?);
    num.div(&CertifiedReal::one(prec).sub(&a2.mul_int(3)).mul_int(2))
}

/// The two `d`-independent parts of `ln g(x, d) = A(x) + B(x) / d`.
pub fn odlyzko_parts(x: &CertifiedReal) -> Result<(CertifiedReal, CertifiedReal)> {
    let prec = x.precision_bits();
    let w = wp(prec);
    let x = x.with_precision(w);
    if !x.certainly_gt_rational(&BigRational::one()) {
        return Err(Error::Domain("x must exceed 1".into()));
    }
    let b = odlyzko_b(&x)?;
    let margin = b.sub(&odlyzko_alpha(w)?.mul(&x).add_int(1));
    if !margin.certainly_gt_rational(&BigRational::zero()) && !margin.is_exact() {
        return Err(Error::Domain("b(x) >= 1 + alpha x is not certified".into()));
    }
    let t = x.mul_int(2).add_int(-1);
    let a = pi(w)
        .ln()?
        .sub(&digamma(&x.mul_pow2(-1))?)
        .add(&t.mul_pow2(-2).mul(&trigamma(&b.mul_pow2(-1))?));
    let bm1 = b.add_int(-1);
    let braces = CertifiedReal::from_int(-2, w)
        .div(&x)?
        .sub(&CertifiedReal::from_int(2, w).div(&x.add_int(-1))?)
        .sub(&t.div(&b.sqr())?)
        .sub(&t.div(&bm1.sqr())?);
    Ok((a.with_precision(prec), braces.with_precision(prec)))
}

/// Odlyzko's lower bound `g(x, d)` for root discriminants of totally real fields.
pub fn odlyzko_g(x: &CertifiedReal, d: u32) -> Result<CertifiedReal> {
    check_d(d)?;
    let (a, b) = odlyzko_parts(x)?;
    a.add(&b.div_int(d)).exp()
}

/// Grid `start, start + step, ..., <= end`.
pub fn rational_grid(start: &BigRational, end: &BigRational, step: &BigRational) -> Vec<BigRational> {
    let mut out = Vec::new();
    let mut i = 0i64;
    loop {
        let v = start + step * BigInt::from(i);
        if &v > end {
            break;
        }
        out.push(v);
        i += 1;
    }
    out
}

/// Default `x` grid for the root-discriminant lower bound.
pub fn default_x_grid() -> Vec<BigRational> {
    rational_grid(&rat(102, 100), &rat(3, 1), &rat(5, 1000))
}

/// `delta` values used by the degree ladder.
pub const LADDER_DELTAS: [(i64, i64); 12] =
    [(34, 100), (9, 10), (77, 100), (75, 100), (8, 10), (71, 100), (7, 10), (72, 100), (69, 100), (65, 100), (66, 100), (52, 100)];

/// Step-0.01 grid over `(0, 2]` together with the ladder's `delta` values.
pub fn default_delta_grid() -> Vec<BigRational> {
    let mut g = rational_grid(&rat(1, 100), &rat(2, 1), &rat(1, 100));
    g.extend(LADDER_DELTAS.iter().map(|&(n, d)| rat(n, d)));
    g.sort();
    g.dedup();
    g
}

/// Grid argmax of `g(x, d)` over `x >= x0`; a certified lower bound for the
/// root-discriminant limit function.
pub fn frak_n(d: u32, grid: &[BigRational], prec: u32) -> Result<(BigRational, CertifiedReal)> {
    let parts = odlyzko_grid_parts(grid, prec)?;
    frak_n_from_parts(d, &parts)
}

/// Precomputed `(x, A(x), B(x))` for grid points above `x0`.
pub fn odlyzko_grid_parts(grid: &[BigRational], prec: u32) -> Result<Vec<(BigRational, CertifiedReal, CertifiedReal)>> {
    let x0 = odlyzko_x0(prec)?;
    grid.iter()
        .filter(|x| x0.certainly_lt_rational(x))
        .map(|x| {
            let (a, b) = odlyzko_parts(&real(x, prec))?;
            Ok((x.clone(), a, b))
        })
        .collect()
}

pub fn frak_n_from_parts(d: u32, parts: &[(BigRational, CertifiedReal, CertifiedReal)]) -> Result<(BigRational, CertifiedReal)> {
    check_d(d)?;
    let mut best: Option<(BigRational, CertifiedReal)> = None;
    for (x, a, b) in parts {
        let v = a.add(&b.div_int(d)).exp()?;
        let better = match &best {
            None => true,
            Some((_, bv)) => v.mid().cmp_val(bv.mid()).is_gt(),
        };
        if better {
            best = Some((x.clone(), v));
        }
    }
    best.ok_or_else(|| Error::Domain("empty x grid above x0".into()))
}

/// Grid argmin by midpoint; ties go to the earlier (smaller) grid point.
pub fn minimize_over_delta<F>(f: F, grid: &[BigRational]) -> Result<(BigRational, CertifiedReal)>
where
    F: Fn(&BigRational) -> Result<CertifiedReal>,
{
    let mut best: Option<(BigRational, CertifiedReal)> = None;
    for delta in grid {
        let v = f(delta)?;
        let better = match &best {
            None => true,
            Some((_, bv)) => v.mid().cmp_val(bv.mid()).is_lt(),
        };
        if better {
            best = Some((delta.clone(), v));
        }
    }
    best.ok_or_else(|| Error::Domain("empty delta grid".into()))
}

/// Bounds for one degree and class-number profile.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct BoundProfile {
    pub d: u32,
    pub h3: u64,
    pub r_over_w: BigRational,
    pub delta_grid: Vec<BigRational>,
    pub results: BTreeMap<String, CertifiedRealRepr>,
}

/// Serializable form of an enclosure.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CertifiedRealRepr {
    pub lo: String,
    pub hi: String,
    pub argument: Option<String>,
}

impl CertifiedRealRepr {
    pub fn new(x: &CertifiedReal, argument: Option<&BigRational>) -> Self {
        let (lo, hi) = x.interval_strings(12);
        CertifiedRealRepr { lo, hi, argument: argument.map(|a| crate::arith::fmt_rational(a, true)) }
    }
}

impl BoundProfile {
    pub fn new(d: u32, h3: u64, r_over_w: BigRational, delta_grid: Vec<BigRational>) -> Result<Self> {
        check_d(d)?;
        if delta_grid.is_empty() {
            return Err(Error::Domain("delta grid must be nonempty".into()));
        }
        if delta_grid.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::Domain("delta grid must be strictly increasing".into()));
        }
        for x in &delta_grid {
            check_delta(x)?;
        }
        Ok(BoundProfile { d, h3, r_over_w, delta_grid, results: BTreeMap::new() })
    }

    /// Fills `results` with the optimised bounds.
    pub fn evaluate(&mut self, prec: u32) -> Result<()> {
        let (d, rw) = (self.d, self.r_over_w.clone());
        let (a, v) = minimize_over_delta(|x| phi1(d, &rw, x, prec), &self.delta_grid)?;
        self.results.insert("phi1".into(), CertifiedRealRepr::new(&v, Some(&a)));
        let slav_grid: Vec<BigRational> = self.delta_grid.iter().filter(|x| **x >= rat(2, 1000)).cloned().collect();
        if !slav_grid.is_empty() {
            let (a, v) = minimize_over_delta(|x| f_delta(x, d, prec), &slav_grid)?;
            self.results.insert("fDelta".into(), CertifiedRealRepr::new(&v, Some(&a)));
        }
        let v = phi2(d, self.h3, prec)?;
        self.results.insert("phi2".into(), CertifiedRealRepr::new(&v, None));
        Ok(())
    }
}

/// Arguments for evaluating a bound by name.
#[derive(Clone, Debug, Default)]
pub struct BoundArgs {
    pub d: Option<u32>,
    pub h3: Option<u64>,
    pub dk: Option<BigRational>,
    pub dl: Option<BigRational>,
    pub rw: Option<BigRational>,
    pub delta: Option<BigRational>,
    pub x: Option<BigRational>,
    pub w: Option<u32>,
}

fn need<T: Clone>(v: &Option<T>, name: &str, field: &str) -> Result<T> {
    v.clone().ok_or_else(|| Error::Domain(format!("bound {name} needs --{field}")))
}

/// Names accepted by [`eval_named`].
pub const BOUND_NAMES: [&str; 13] = [
    "phi1", "phi2", "phi3", "frakP", "fDelta", "boundKQ", "xi", "remakR", "odlyzkoG", "odlyzkoB", "frakN", "zimmert",
    "slavutskii",
];

/// Evaluates a bound by name; `delta` defaults to a grid minimisation.
pub fn eval_named(name: &str, a: &BoundArgs, prec: u32) -> Result<(CertifiedReal, Option<BigRational>)> {
    let d = || need(&a.d, name, "d");
    let min_or = |f: &dyn Fn(&BigRational) -> Result<CertifiedReal>| -> Result<(CertifiedReal, Option<BigRational>)> {
        match &a.delta {
            Some(x) => Ok((f(x)?, Some(x.clone()))),
            None => minimize_over_delta(f, &default_delta_grid()).map(|(x, v)| (v, Some(x))),
        }
    };
    match name {
        "phi1" => {
            let (d, rw) = (d()?, need(&a.rw, name, "rw")?);
            min_or(&|x| phi1(d, &rw, x, prec))
        }
        "phi2" => Ok((phi2(d()?, need(&a.h3, name, "h3")?, prec)?, None)),
        "phi3" => Ok((phi3(d()?, prec)?, None)),
        "frakP" => Ok((frak_p(d()?, &need(&a.dk, name, "dk")?, need(&a.h3, name, "h3")?, prec)?, None)),
        "fDelta" => {
            let d = d()?;
            min_or(&|x| f_delta(x, d, prec))
        }
        "boundKQ" => min_or(&|x| bound_kq(x, prec)),
        "xi" => {
            let (d, dl, rw) = (d()?, need(&a.dl, name, "dl")?, need(&a.rw, name, "rw")?);
            let delta = need(&a.delta, name, "delta")?;
            Ok((xi(d, &dl, &rw, &delta, prec)?, Some(delta)))
        }
        "remakR" => Ok((remak_r(&need(&a.dk, name, "dk")?, need(&a.w, name, "w")?, prec)?, None)),
        "odlyzkoG" => Ok((odlyzko_g(&real(&need(&a.x, name, "x")?, prec), d()?)?, None)),
        "odlyzkoB" => Ok((odlyzko_b(&real(&need(&a.x, name, "x")?, prec))?, None)),
        "frakN" => frak_n(d()?, &default_x_grid(), prec).map(|(x, v)| (v, Some(x))),
        "zimmert" => Ok((regulator_lb(RegulatorBound::Zimmert, d()?, prec)?, None)),
        "slavutskii" => Ok((regulator_lb(RegulatorBound::Slavutskii, d()?, prec)?, None)),
        _ => Err(Error::unknown("bound", name)),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn close(x: &CertifiedReal, v: f64, tol: f64) {
        assert!((x.to_f64() - v).abs() < tol, "{} vs {v}", x.to_f64());
    }

    #[test]
    fn spot_values() {
        close(&phi2(7, 9, 128).unwrap(), 9.047882483, 1e-8);
        close(&f_delta(&rat(9, 10), 20, 128).unwrap(), 16.37484617, 1e-7);
        close(&bound_kq(&rat(34, 100), 128).unwrap(), 461.5188996, 1e-6);
        close(&odlyzko_x0(128).unwrap(), 1.014420608, 1e-8);
        close(&odlyzko_g(&CertifiedReal::from_ratio(143, 100, 128), 20).unwrap(), 16.40310493, 1e-7);
        let (v, cut) = kq_n3_cut(9, 128).unwrap();
        close(&v, 63.55582418, 1e-7);
        assert_eq!(cut, 63);
    }

    #[test]
    fn strict_floor_cases() {
        assert_eq!(strict_floor(&CertifiedReal::from_ratio(461518, 1000, 64)).unwrap(), 461);
        assert_eq!(strict_floor(&CertifiedReal::from_int(26, 64)).unwrap(), 25);
    }

    #[test]
    fn argmin_ties_prefer_smaller() {
        let grid = vec![rat(1, 10), rat(2, 10), rat(3, 10)];
        let (x, _) = minimize_over_delta(|_| Ok(CertifiedReal::one(64)), &grid).unwrap();
        assert_eq!(x, rat(1, 10));
    }
}
