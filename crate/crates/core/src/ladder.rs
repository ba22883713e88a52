//! The degree-elimination ladder: chains of certified inequalities bounding
//! the degree of `k`, the discriminants and `h_{ell,3}`, and the catalogue of
//! quoted numeric checkpoints they contain.

use crate::arith::rat;
use crate::bounds::{
    bound_kq, f_delta, frak_p, kq_n3_cut, odlyzko_g, odlyzko_x0, phi1, phi2, phi3, remak_r, strict_floor, xi,
};
use crate::datasets::{AnalyticConstantTables, Relation};
use crate::error::{Error, Result};
use crate::real::{parse_rational, CertifiedReal};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::ToPrimitive;
use serde::{Deserialize, Serialize};

/// Direction of a quoted inequality `value REL displayed`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Rel {
    Lt,
    Le,
    Gt,
    Ge,
}

impl Rel {
    pub fn symbol(self) -> &'static str {
        match self {
            Rel::Lt => "<",
            Rel::Le => "<=",
            Rel::Gt => ">",
            Rel::Ge => ">=",
        }
    }

    fn is_upper(self) -> bool {
        matches!(self, Rel::Lt | Rel::Le)
    }
}

/// A quoted numeric inequality with its displayed decimal bound.
#[derive(Clone, Debug)]
pub struct Checkpoint {
    pub id: String,
    pub expr: String,
    pub rel: Rel,
    pub displayed: String,
    pub value: CertifiedReal,
}

impl Checkpoint {
    pub fn bound(&self) -> BigRational {
        parse_rational(&self.displayed).expect("displayed bound is a decimal")
    }

    /// The whole enclosure lies on the stated side of the displayed bound.
    pub fn certified(&self) -> bool {
        let b = self.bound();
        match self.rel {
            Rel::Lt => self.value.certainly_lt_rational(&b),
            Rel::Le => self.value.certainly_le_rational(&b),
            Rel::Gt => self.value.certainly_gt_rational(&b),
            Rel::Ge => self.value.certainly_ge_rational(&b),
        }
    }

    /// Number of decimals shown in the displayed bound.
    pub fn decimals(&self) -> usize {
        self.displayed.split_once('.').map_or(0, |(_, f)| f.len())
    }

    /// The midpoint rounded towards the displayed bound (up for upper
    /// bounds, down for lower bounds) reproduces the displayed digits.
    pub fn digits_agree(&self) -> bool {
        let scale = BigRational::from_integer(num_traits::pow(BigInt::from(10), self.decimals()));
        let m = self.value.mid().to_rational() * &scale;
        let r = if self.rel.is_upper() { m.ceil() } else { m.floor() };
        r == self.bound() * scale
    }

    pub fn radius_below(&self, tol: f64) -> bool {
        self.value.rad_f64() < tol
    }

    pub fn line(&self) -> String {
        format!(
            "{:<28} {:<26} {:>3} {:<9} value {:.10} rad {:.1e}",
            self.id,
            self.expr,
            self.rel.symbol(),
            self.displayed,
            self.value.to_f64(),
            self.value.rad_f64()
        )
    }
}

/// One link of a ladder.
#[derive(Clone, Debug)]
pub struct LadderStep {
    pub text: String,
    pub checkpoint: Option<Checkpoint>,
    pub holds: bool,
    /// Name of the bundled external fact the step relies on, if any.
    pub external: Option<String>,
}

/// The surviving bound row for a degree.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SurvivorRow {
    pub d: u32,
    /// Displayed upper bound for `D_k^{1/d} <= D_ell^{1/2d}`.
    pub root_bound: String,
    pub h3: u64,
    /// Bound on `D_ell / D_k^2`.
    pub x_d: u64,
    /// Bound on `D_k`: largest integer below `root_bound^d`.
    pub r_d: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum LadderOutcome {
    Eliminated,
    EliminatedExternally(String),
    Survives(SurvivorRow),
    /// Discriminant cuts for `k` the rationals, indexed by `n_{ell,3}`.
    RationalCuts { d_ell_max: u64, cuts: Vec<(u64, u64)> },
}

#[derive(Clone, Debug)]
pub struct DegreeLadder {
    pub label: String,
    pub steps: Vec<LadderStep>,
    pub outcome: LadderOutcome,
}

impl DegreeLadder {
    pub fn certified(&self) -> bool {
        self.steps.iter().all(|s| s.holds)
    }

    pub fn checkpoints(&self) -> impl Iterator<Item = &Checkpoint> {
        self.steps.iter().filter_map(|s| s.checkpoint.as_ref())
    }
}

/// Largest power of 3 not exceeding `h` (`1` for `h <= 2`).
pub fn max_power_of_3(h: u64) -> u64 {
    let mut p = 1;
    while p * 3 <= h {
        p *= 3;
    }
    p
}

/// Class-number bound when `ell` has degree `2d` and every field of degree
/// `>= n0` has root discriminant above the current bound: `2 d h < n0`.
pub fn hilbert_class_bound(n0: u64, d: u32) -> u64 {
    (n0 - 1) / (2 * d as u64)
}

/// `floor` of a ball that must be the same at both endpoints.
pub fn floor_cut(x: &CertifiedReal) -> Result<u64> {
    let lo = x.lo().floor_int();
    let hi = x.hi().floor_int();
    if lo != hi {
        return Err(Error::Domain(format!("ball {x} straddles an integer")));
    }
    lo.to_u64().ok_or_else(|| Error::Domain("cut out of range".into()))
}

struct Builder<'a> {
    c: &'a AnalyticConstantTables,
    prec: u32,
    steps: Vec<LadderStep>,
}

impl<'a> Builder<'a> {
    fn quoted(&mut self, id: &str, expr: &str, rel: Rel, displayed: &str, value: CertifiedReal) -> CertifiedReal {
        let cp = Checkpoint { id: id.into(), expr: expr.into(), rel, displayed: displayed.into(), value: value.clone() };
        let holds = cp.certified();
        self.steps.push(LadderStep {
            text: format!("{expr} {} {displayed}", rel.symbol()),
            checkpoint: Some(cp),
            holds,
            external: None,
        });
        value
    }

    fn below(&mut self, text: String, value: &CertifiedReal, bound: &BigRational, strict: bool) {
        let holds =
            if strict { value.certainly_lt_rational(bound) } else { value.certainly_le_rational(bound) };
        self.steps.push(LadderStep { text, checkpoint: None, holds, external: None });
    }

    fn fact(&mut self, text: String, holds: bool) {
        self.steps.push(LadderStep { text, checkpoint: None, holds, external: None });
    }

    fn external(&mut self, text: String, axiom: &str) -> Result<()> {
        self.c.axiom(axiom)?;
        self.steps.push(LadderStep { text, checkpoint: None, holds: true, external: Some(axiom.into()) });
        Ok(())
    }

    /// `value < N_c(n0)` gives `h <= (n0 - 1) / 2d`.
    fn versus_nc(&mut self, name: &str, value: &CertifiedReal, n0: u64, d: u32) -> Result<u64> {
        let e = self.c.nc(n0)?;
        let strict = e.relation != Relation::Gt;
        let h = hilbert_class_bound(n0, d);
        let op = match e.relation {
            Relation::Eq => "=",
            Relation::Gt => ">",
            Relation::Ge => ">=",
        };
        self.below(
            format!("{name} below N_c({n0}) {op} {}; so 2*{d}*h_ell < {n0}, h_ell <= {h}, h3 <= {}", dec(&e.value), max_power_of_3(h)),
            value,
            &e.value,
            strict,
        );
        Ok(h)
    }

    fn mc_bound(&mut self, name: &str, value: &CertifiedReal, n0: u64, d: u32) -> Result<u64> {
        let v = self.c.mc(n0)?.clone();
        let h = hilbert_class_bound(n0, d);
        self.below(
            format!("{name} below M_c({n0}) >= {}; so h_ell <= {h}, h3 <= {}", dec(&v), max_power_of_3(h)),
            value,
            &v,
            true,
        );
        Ok(h)
    }

    fn friedman_validity(&mut self, name: &str, value: &CertifiedReal, d: u32) -> Result<BigRational> {
        let e = self.c.friedman(d)?.clone();
        self.below(
            format!("{name} below {}: R_ell/w_ell >= {} applies", dec(&e.threshold), dec(&e.rw)),
            value,
            &e.threshold,
            true,
        );
        Ok(e.rw)
    }

    fn mr_range(&self, dmin: u32) -> Result<BigRational> {
        self.c
            .mr_range
            .iter()
            .find(|r| r.dmin == dmin)
            .map(|r| r.value.clone())
            .ok_or_else(|| Error::MissingDatum { label: "constants".into(), field: format!("mr_range {dmin}") })
    }

    fn mr(&self, d: u32) -> Result<BigRational> {
        Ok(BigRational::from_integer(self.c.mr(d)?.clone()))
    }

    fn finish(self, label: &str, outcome: LadderOutcome) -> DegreeLadder {
        DegreeLadder { label: label.into(), steps: self.steps, outcome }
    }
}

fn dec(q: &BigRational) -> String {
    crate::arith::fmt_decimal(q)
}

fn r(n: i64, d: i64) -> BigRational {
    rat(n, d)
}

fn root_floor(displayed: &str, d: u32) -> Result<u64> {
    let v = parse_rational(displayed)?;
    let p = num_traits::pow(v, d as usize);
    p.floor().to_integer().to_u64().ok_or_else(|| Error::Domain("r_d out of range".into()))
}

/// The chain of inequalities for one degree of `k` (`1` is the rationals;
/// `8..=14`, `15..=19` and `>= 20` share one chain each).
pub fn ladder(degree: u32, c: &AnalyticConstantTables, prec: u32) -> Result<DegreeLadder> {
    let mut b = Builder { c, prec, steps: Vec::new() };
    let p = b.prec;
    match degree {
        0 => Err(Error::Domain("degree must be positive".into())),
        1 => {
            let v = b.quoted("kq.delta", "boundKQ(0.34)", Rel::Lt, "461.6", bound_kq(&r(34, 100), p)?);
            let dmax = strict_floor(&v)?;
            b.fact(format!("D_ell <= {dmax}"), true);
            let ax = c.axiom("imag_quadratic_max_class_number")?;
            let hmax = ax.value.clone().and_then(|v| v.to_u64()).unwrap_or(0);
            b.external(format!("h_ell <= {hmax} for D_ell <= {dmax}, so n3 <= {}", max_power_of_3(hmax)), &ax.name.clone())?;
            let mut cuts = Vec::new();
            for n3 in [1u64, 3, 9] {
                let (v, cut) = kq_n3_cut(n3, p)?;
                b.fact(format!("n3 = {n3}: D_ell < {:.4}, so D_ell <= {cut}", v.to_f64()), true);
                cuts.push((n3, cut));
            }
            Ok(b.finish("d = 1", LadderOutcome::RationalCuts { d_ell_max: dmax, cuts }))
        }
        2 => {
            let v = b.quoted("d2.phi1", "phi1(2, 1/8, 0.52)", Rel::Le, "28.96", phi1(2, &r(1, 8), &r(52, 100), p)?);
            let ax = c.axiom("quartic_cm_max_class_number")?.clone();
            let dl_max = BigRational::from_integer(ax.key.clone());
            b.below(format!("phi1(2, 1/8, 0.52)^4 <= {}", ax.key), &v.powi(4)?, &dl_max, false);
            let h = ax.value.clone().and_then(|v| v.to_u64()).unwrap_or(0);
            b.external(format!("h_ell <= {h} for D_ell <= {}, so h3 <= {}", ax.key, max_power_of_3(h)), &ax.name)?;
            let v = b.quoted("d2.phi2.27", "phi2(2, 27)", Rel::Le, "12.57", phi2(2, 27, p)?);
            let h = b.versus_nc("phi2(2, 27)", &v, 38, 2)?;
            let v = b.quoted("d2.phi2.9", "phi2(2, 9)", Rel::Lt, "10.96", phi2(2, max_power_of_3(h), p)?);
            let h = b.versus_nc("phi2(2, 9)", &v, 26, 2)?;
            let h3 = max_power_of_3(h);
            b.quoted("d2.phi2.3", "phi2(2, 3)", Rel::Lt, "9.5491", phi2(2, h3, p)?);
            let r_d = root_floor("9.5491", 2)?;
            let v = b.quoted("d2.frakP", "frakP(2, 5, 3)", Rel::Lt, "104.2", frak_p(2, &b.mr(2)?, h3, p)?);
            let x_d = floor_cut(&v)?;
            Ok(b.finish("d = 2", LadderOutcome::Survives(SurvivorRow { d: 2, root_bound: "9.5491".into(), h3, x_d, r_d })))
        }
        3 => {
            b.fact("branch D_ell^(1/6) < 21.7".into(), true);
            let t = CertifiedReal::from_rational(&r(217, 10), p);
            let h = b.mc_bound("21.7", &t, 4000, 3)?;
            let v = b.quoted("d3.phi2.243", "phi2(3, 243)", Rel::Lt, "13.3", phi2(3, max_power_of_3(h), p)?);
            let h = b.versus_nc("phi2(3, 243)", &v, 44, 3)?;
            let v = b.quoted("d3.phi2.3", "phi2(3, 3)", Rel::Lt, "9.17", phi2(3, max_power_of_3(h), p)?);
            let h = b.versus_nc("phi2(3, 3)", &v, 18, 3)?;
            let h3 = max_power_of_3(h);
            b.quoted("d3.phi2.1", "phi2(3, 1)", Rel::Lt, "8.3591", phi2(3, h3, p)?);
            let r_d = root_floor("8.3591", 3)?;
            let v = b.quoted("d3.frakP", "frakP(3, 49, 1)", Rel::Lt, "52.8", frak_p(3, &b.mr(3)?, h3, p)?);
            let x_d = floor_cut(&v)?;
            b.fact("branch D_ell^(1/6) >= 21.7".into(), true);
            let rk = c.regulator_k.get(&3).cloned().ok_or_else(|| Error::MissingDatum {
                label: "constants".into(),
                field: "regulator_k 3".into(),
            })?;
            let rw_lb = &rk * BigInt::from(2) / BigInt::from(6);
            b.fact(format!("R_ell/w_ell >= 2*{}/6 > 0.17", dec(&rk)), rw_lb > r(17, 100));
            let dl = num_traits::pow(r(217, 10), 6);
            b.quoted("d3.xi", "xi(3, 21.7^6, 0.17, 0.65)", Rel::Gt, "16.4", xi(3, &dl, &r(17, 100), &r(65, 100), p)?);
            let dk = num_traits::pow(r(164, 10), 3);
            b.quoted("d3.remak", "r(16.4^3, 6)", Rel::Gt, "0.54", remak_r(&dk, 6, p)?);
            let v = b.quoted("d3.phi1", "phi1(3, 0.54, 0.66)", Rel::Lt, "20.8", phi1(3, &r(54, 100), &r(66, 100), p)?);
            b.below("phi1(3, 0.54, 0.66) below 21.7 contradicts the branch".into(), &v, &r(217, 10), true);
            Ok(b.finish("d = 3", LadderOutcome::Survives(SurvivorRow { d: 3, root_bound: "8.3591".into(), h3, x_d, r_d })))
        }
        4 => {
            b.external("cyclotomic l of degree 8 have class number 1, so h3 = 1".into(), "cyclotomic_class_number_one")?;
            let rk = c.regulator_k.get(&4).cloned().ok_or_else(|| Error::MissingDatum {
                label: "constants".into(),
                field: "regulator_k 4".into(),
            })?;
            let rw = &rk / BigInt::from(3);
            b.fact(format!("otherwise w_ell <= 12 and R_ell/w_ell >= 8 R_k/(12*2) >= {}", dec(&rw)), true);
            let v = b.quoted("d4.phi1", "phi1(4, 41/150, 0.69)", Rel::Lt, "21.75", phi1(4, &rw, &r(69, 100), p)?);
            let h = b.mc_bound("phi1(4, 41/150, 0.69)", &v, 4000, 4)?;
            let v = b.quoted("d4.phi2.243", "phi2(4, 243)", Rel::Lt, "11.8", phi2(4, max_power_of_3(h), p)?);
            let h = b.versus_nc("phi2(4, 243)", &v, 32, 4)?;
            let v = b.quoted("d4.phi2.3", "phi2(4, 3)", Rel::Lt, "8.96", phi2(4, max_power_of_3(h), p)?);
            let h = b.versus_nc("phi2(4, 3)", &v, 18, 4)?;
            let h3 = max_power_of_3(h);
            b.quoted("d4.phi2.1", "phi2(4, 1)", Rel::Lt, "8.3640", phi2(4, h3, p)?);
            let r_d = root_floor("8.3640", 4)?;
            let v = b.quoted("d4.frakP", "frakP(4, 725, 1)", Rel::Lt, "21.3", frak_p(4, &b.mr(4)?, h3, p)?);
            let x_d = floor_cut(&v)?;
            Ok(b.finish("d = 4", LadderOutcome::Survives(SurvivorRow { d: 4, root_bound: "8.3640".into(), h3, x_d, r_d })))
        }
        5 => {
            let v = b.quoted("d5.f", "f(0.7, 5)", Rel::Lt, "26.1", f_delta(&r(7, 10), 5, p)?);
            let rw = b.friedman_validity("f(0.7, 5)", &v, 5)?;
            let v = b.quoted("d5.phi1", "phi1(5, 0.2261, 0.72)", Rel::Lt, "21.42", phi1(5, &rw, &r(72, 100), p)?);
            let h = b.versus_nc("phi1(5, 0.2261, 0.72)", &v, 2400, 5)?;
            let v = b.quoted("d5.phi2.81", "phi2(5, 81)", Rel::Lt, "10.43", phi2(5, max_power_of_3(h), p)?);
            let h = b.versus_nc("phi2(5, 81)", &v, 23, 5)?;
            let h3 = max_power_of_3(h);
            b.quoted("d5.phi2.1", "phi2(5, 1)", Rel::Lt, "8.3649", phi2(5, h3, p)?);
            let r_d = root_floor("8.3649", 5)?;
            let v = b.quoted("d5.frakP", "frakP(5, 14641, 1)", Rel::Lt, "5.2", frak_p(5, &b.mr(5)?, h3, p)?);
            let x_d = floor_cut(&v)?;
            Ok(b.finish("d = 5", LadderOutcome::Survives(SurvivorRow { d: 5, root_bound: "8.3649".into(), h3, x_d, r_d })))
        }
        6 => {
            let v = b.quoted("d6.f", "f(0.71, 6)", Rel::Lt, "24", f_delta(&r(71, 100), 6, p)?);
            let rw = b.friedman_validity("f(0.71, 6)", &v, 6)?;
            let v = b.quoted("d6.phi1", "phi1(6, 0.424, 0.8)", Rel::Lt, "20", phi1(6, &rw, &r(8, 10), p)?);
            let h = b.versus_nc("phi1(6, 0.424, 0.8)", &v, 480, 6)?;
            let v = b.quoted("d6.phi2.27", "phi2(6, 27)", Rel::Lt, "10", phi2(6, max_power_of_3(h), p)?);
            let h = b.versus_nc("phi2(6, 27)", &v, 21, 6)?;
            let h3 = max_power_of_3(h);
            let v = b.quoted("d6.phi2.1", "phi2(6, 1)", Rel::Lt, "8.365", phi2(6, h3, p)?);
            let second = c.axiom("second_smallest_sextic_disc")?.key.clone();
            let s6 = CertifiedReal::from_int(second.clone(), p + 32).pow_rational(&r(1, 6))?.with_precision(p);
            let s6 = b.quoted("d6.second", "371293^(1/6)", Rel::Gt, "8.47", s6);
            b.fact(
                format!("phi2(6, 1) below {second}^(1/6), so D_k = {}", c.mr(6)?),
                v.certainly_lt(&s6),
            );
            b.steps.last_mut().expect("step").external = Some("second_smallest_sextic_disc".into());
            let v = b.quoted("d6.frakP", "frakP(6, 300125, 1)", Rel::Lt, "1.3", frak_p(6, &b.mr(6)?, h3, p)?);
            b.fact(format!("D_ell / D_k^2 <= {}", floor_cut(&v)?), true);
            b.external("no totally complex quadratic extension with D_ell = 300125^2".into(), "no_cm_extension_of_sextic")?;
            Ok(b.finish("d = 6", LadderOutcome::EliminatedExternally("no_cm_extension_of_sextic".into())))
        }
        7 => {
            let v = b.quoted("d7.f", "f(0.75, 7)", Rel::Lt, "22.1", f_delta(&r(75, 100), 7, p)?);
            let rw = b.friedman_validity("f(0.75, 7)", &v, 7)?;
            let v = b.quoted("d7.phi1", "phi1(7, 0.8542, 0.8)", Rel::Lt, "18.82", phi1(7, &rw, &r(8, 10), p)?);
            let h = b.versus_nc("phi1(7, 0.8542, 0.8)", &v, 260, 7)?;
            let v = b.quoted("d7.phi2", "phi2(7, 9)", Rel::Lt, "9.1", phi2(7, max_power_of_3(h), p)?);
            let mr7 = CertifiedReal::from_int(c.mr(7)?.clone(), p + 32).pow_rational(&r(1, 7))?.with_precision(p);
            let mr7 = b.quoted("d7.mr", "M_r(7) = 20134393^(1/7)", Rel::Ge, "11", mr7);
            b.fact("phi2(7, 9) < M_r(7)".into(), v.certainly_lt(&mr7));
            Ok(b.finish("d = 7", LadderOutcome::Eliminated))
        }
        8..=14 => {
            b.fact("case h_ell <= 63: h3 <= 27 and phi2(d, 27) <= phi3(d) <= phi3(8)".into(), true);
            let v = b.quoted("d8.phi3", "phi3(8)", Rel::Lt, "9.3", phi3(8, p)?);
            let m = b.mr_range(8)?;
            b.below(format!("phi3(8) below M_r(d) > {} for 8 <= d <= 14", dec(&m)), &v, &m, true);
            b.fact("case h_ell > 63: 2 d h_ell > 1000".into(), true);
            let v = b.quoted("d8.f", "f(0.77, 8)", Rel::Lt, "20.84", f_delta(&r(77, 100), 8, p)?);
            let e = c.nc(1000)?.value.clone();
            b.below(format!("f(0.77, 8) below N_c(1000) = {}", dec(&e)), &v, &e, true);
            Ok(b.finish("8 <= d <= 14", LadderOutcome::Eliminated))
        }
        15..=19 => {
            let v = b.quoted("d15.f", "f(0.9, 15)", Rel::Lt, "17.4", f_delta(&r(9, 10), 15, p)?);
            let m = b.mr_range(15)?;
            b.below(format!("f(0.9, 15) below M_r(d) > {} for 15 <= d <= 19", dec(&m)), &v, &m, true);
            Ok(b.finish("15 <= d <= 19", LadderOutcome::Eliminated))
        }
        _ => {
            let f = b.quoted("d20.f", "f(0.9, 20)", Rel::Lt, "16.38", f_delta(&r(9, 10), 20, p)?);
            let g = b.quoted(
                "d20.g",
                "g(1.43, 20)",
                Rel::Gt,
                "16.4",
                odlyzko_g(&CertifiedReal::from_rational(&r(143, 100), p), 20)?,
            );
            b.fact("f(0.9, 20) < g(1.43, 20) <= N(20) <= M_r(d) for d >= 20".into(), f.certainly_lt(&g));
            Ok(b.finish("d >= 20", LadderOutcome::Eliminated))
        }
    }
}

/// Representative degrees of all ladder chains, from the rationals upward.
pub const LADDER_DEGREES: [u32; 10] = [1, 2, 3, 4, 5, 6, 7, 8, 15, 20];

pub fn all_ladders(c: &AnalyticConstantTables, prec: u32) -> Result<Vec<DegreeLadder>> {
    LADDER_DEGREES.iter().map(|&d| ladder(d, c, prec)).collect()
}

/// Every quoted numeric checkpoint: the ladder inequalities and the root of
/// the admissibility condition for Odlyzko's bound.
pub fn checkpoints(c: &AnalyticConstantTables, prec: u32) -> Result<Vec<Checkpoint>> {
    let mut out: Vec<Checkpoint> = Vec::new();
    for l in all_ladders(c, prec)? {
        out.extend(l.checkpoints().cloned());
    }
    out.push(Checkpoint {
        id: "odlyzko.x0".into(),
        expr: "x0".into(),
        rel: Rel::Ge,
        displayed: "1.01".into(),
        value: odlyzko_x0(prec)?,
    });
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn power_and_class_bounds() {
        assert_eq!(max_power_of_3(240), 81);
        assert_eq!(max_power_of_3(2), 1);
        assert_eq!(hilbert_class_bound(260, 7), 18);
        assert_eq!(hilbert_class_bound(4000, 3), 666);
        assert_eq!(hilbert_class_bound(18, 3), 2);
    }

    #[test]
    fn digit_rule() {
        let cp = Checkpoint {
            id: "t".into(),
            expr: "t".into(),
            rel: Rel::Lt,
            displayed: "16.38".into(),
            value: CertifiedReal::from_ratio(1637485, 100000, 64),
        };
        assert!(cp.certified() && cp.digits_agree());
        let loose = Checkpoint { displayed: "16.5".into(), ..cp };
        assert!(loose.certified() && !loose.digits_agree());
    }
}
