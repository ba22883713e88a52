//! Covolumes and Euler characteristics of principal arithmetic subgroups:
//! parahoric Euler factors, `mu`, index bounds and the power-of-3 test.

use crate::arith::numerator_is_power_of_3;
use crate::datasets::{Dataset, FieldPairRecord};
use crate::error::{Error, Result};
use crate::ffpoly::{PlaceOfK, RelativePlaceClass};
use crate::lvalues::{rel_l_minus2_exact, zeta_k_minus1_exact, LConfig, Qmax};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive};
use serde::{Deserialize, Serialize};
use std::fmt;

/// Local parahoric type at a place of `k`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum ParahoricKind {
    Hyperspecial,
    RamifiedMaximal,
    SplitIwahori,
    SplitNonHyperspecialMaximal,
    InertIwahori,
    InertNonHyperspecialMaximal,
    RamifiedIwahori,
    Anisotropic,
}

impl ParahoricKind {
    pub const ALL: [ParahoricKind; 8] = [
        ParahoricKind::Hyperspecial,
        ParahoricKind::RamifiedMaximal,
        ParahoricKind::SplitIwahori,
        ParahoricKind::SplitNonHyperspecialMaximal,
        ParahoricKind::InertIwahori,
        ParahoricKind::InertNonHyperspecialMaximal,
        ParahoricKind::RamifiedIwahori,
        ParahoricKind::Anisotropic,
    ];

    /// Whether the kind may sit at a place of the given relative class.
    pub fn compatible(self, class: RelativePlaceClass) -> bool {
        use ParahoricKind::*;
        use RelativePlaceClass::*;
        match self {
            Hyperspecial => class != RamifiedInL,
            RamifiedMaximal | RamifiedIwahori => class == RamifiedInL,
            SplitIwahori | SplitNonHyperspecialMaximal | Anisotropic => class == SplitInL,
            InertIwahori | InertNonHyperspecialMaximal => class == InertInL,
        }
    }

    /// The default (volume-maximising) kind at a place of the given class.
    pub fn default_for(class: RelativePlaceClass) -> Self {
        if class == RelativePlaceClass::RamifiedInL {
            ParahoricKind::RamifiedMaximal
        } else {
            ParahoricKind::Hyperspecial
        }
    }

    /// Whether the parahoric is maximal. At split places every maximal
    /// parahoric is hyperspecial, so the intermediate split kind is not.
    pub fn is_maximal(self) -> bool {
        !matches!(
            self,
            ParahoricKind::SplitIwahori
                | ParahoricKind::InertIwahori
                | ParahoricKind::RamifiedIwahori
                | ParahoricKind::SplitNonHyperspecialMaximal
        )
    }

    pub fn name(self) -> &'static str {
        match self {
            ParahoricKind::Hyperspecial => "hyperspecial",
            ParahoricKind::RamifiedMaximal => "ramified-maximal",
            ParahoricKind::SplitIwahori => "split-iwahori",
            ParahoricKind::SplitNonHyperspecialMaximal => "split-non-hyperspecial-maximal",
            ParahoricKind::InertIwahori => "inert-iwahori",
            ParahoricKind::InertNonHyperspecialMaximal => "inert-non-hyperspecial-maximal",
            ParahoricKind::RamifiedIwahori => "ramified-iwahori",
            ParahoricKind::Anisotropic => "anisotropic",
        }
    }

    pub fn parse(s: &str) -> Result<Self> {
        Self::ALL.into_iter().find(|k| k.name() == s).ok_or_else(|| Error::unknown("parahoric kind", s))
    }
}

/// A parahoric kind together with the residue cardinality `q` of its place.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct ParahoricChoice {
    pub kind: ParahoricKind,
    pub q: BigInt,
}

impl ParahoricChoice {
    pub fn new(kind: ParahoricKind, q: impl Into<BigInt>) -> Self {
        ParahoricChoice { kind, q: q.into() }
    }

    /// `#Xi`, the number of types fixed by the relevant automorphisms.
    pub fn xi(&self) -> u32 {
        if self.kind == ParahoricKind::SplitIwahori {
            3
        } else {
            1
        }
    }
}

impl fmt::Display for ParahoricChoice {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}(q={})", self.kind.name(), self.q)
    }
}

/// `(e', e'')` for a parahoric choice.
pub fn euler_factor(choice: &ParahoricChoice) -> (BigInt, BigRational) {
    use ParahoricKind::*;
    let q = &choice.q;
    let one = BigInt::one();
    let e1 = match choice.kind {
        Hyperspecial | RamifiedMaximal => one.clone(),
        SplitIwahori => (q * q + q + 1u32) * (q + 1u32),
        SplitNonHyperspecialMaximal => q * q + q + 1u32,
        InertIwahori => q * q * q + 1u32,
        InertNonHyperspecialMaximal => q * q - q + 1u32,
        RamifiedIwahori => q + 1u32,
        Anisotropic => (q - 1u32) * (q - 1u32) * (q + 1u32),
    };
    let e2 = match choice.kind {
        SplitIwahori | Anisotropic => BigRational::new(e1.clone(), BigInt::from(3)),
        _ => BigRational::from_integer(e1.clone()),
    };
    (e1, e2)
}

/// `mu = 2^{-2d} zeta_k(-1) L(-2)` from exact values.
pub fn mu_from_values(d: u32, zeta_m1: &BigRational, l_m2: &BigRational) -> BigRational {
    zeta_m1 * l_m2 / BigInt::from(2).pow(2 * d)
}

/// Exact `zeta_k(-1)`, `L(-2)` and `mu` for a pair.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExactTriple {
    pub zeta_m1: BigRational,
    pub l_m2: BigRational,
    pub mu: BigRational,
}

pub fn exact_triple(pair: &FieldPairRecord, cfg: &LConfig, qmax: Qmax, recheck: bool) -> Result<ExactTriple> {
    let z = zeta_k_minus1_exact(&pair.k, cfg, qmax, recheck)?.value;
    let l = rel_l_minus2_exact(pair, cfg, qmax, recheck)?.value;
    let mu = mu_from_values(pair.d(), &z, &l);
    Ok(ExactTriple { zeta_m1: z, l_m2: l, mu })
}

/// `mu` for a pair, recomputed from certified L-values.
pub fn mu_base(pair: &FieldPairRecord, cfg: &LConfig, qmax: Qmax) -> Result<BigRational> {
    Ok(exact_triple(pair, cfg, qmax, false)?.mu)
}

/// A non-default parahoric at one place.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LocalDatum {
    pub place: PlaceOfK,
    pub class: RelativePlaceClass,
    pub choice: ParahoricChoice,
}

/// A coherent collection of parahorics, given by its non-default places.
#[derive(Clone, Debug)]
pub struct VolumeContext {
    pub pair: FieldPairRecord,
    pub mu: BigRational,
    pub locals: Vec<LocalDatum>,
}

impl VolumeContext {
    pub fn new(pair: FieldPairRecord, mu: BigRational, locals: Vec<LocalDatum>) -> Result<Self> {
        for (i, l) in locals.iter().enumerate() {
            if !l.choice.kind.compatible(l.class) {
                return Err(Error::InvalidChoice(format!(
                    "{} at a place over {} that is {} in ell",
                    l.choice.kind.name(),
                    l.place.p,
                    l.class.name()
                )));
            }
            if l.choice.q != l.place.q {
                return Err(Error::InvalidChoice(format!("q = {} does not match place norm {}", l.choice.q, l.place.q)));
            }
            if locals[..i].iter().any(|m| m.place == l.place) {
                return Err(Error::InvalidChoice(format!("place over {} listed twice", l.place.p)));
            }
        }
        Ok(VolumeContext { pair, mu, locals })
    }

    /// Places with `e' > 1`.
    pub fn t(&self) -> impl Iterator<Item = &LocalDatum> {
        self.locals.iter().filter(|l| euler_factor(&l.choice).0 > BigInt::one())
    }

    /// Anisotropic places.
    pub fn t0(&self) -> impl Iterator<Item = &LocalDatum> {
        self.locals.iter().filter(|l| l.choice.kind == ParahoricKind::Anisotropic)
    }

    pub fn prod_e1(&self) -> BigInt {
        self.locals.iter().map(|l| euler_factor(&l.choice).0).product()
    }

    pub fn prod_e2(&self) -> BigRational {
        self.locals.iter().fold(BigRational::one(), |acc, l| acc * euler_factor(&l.choice).1)
    }

    pub fn prod_xi(&self) -> u32 {
        self.locals.iter().map(|l| l.choice.xi()).product()
    }
}

/// `mu(G / Lambda) = mu * prod e'`.
pub fn mu_principal(ctx: &VolumeContext) -> BigRational {
    &ctx.mu * ctx.prod_e1()
}

/// `[Gamma : Lambda] <= 3^{1 + #T0} h3 prod #Xi`.
pub fn index_upper_bound(ctx: &VolumeContext, h3: u64) -> BigInt {
    BigInt::from(3).pow(1 + ctx.t0().count() as u32) * h3 * ctx.prod_xi()
}

/// Euler characteristics attached to a principal arithmetic subgroup.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ChiResult {
    pub mu_base: BigRational,
    pub mu_lambda: BigRational,
    pub chi_lambda: BigRational,
    pub index_upper: BigInt,
    pub chi_gamma_lower: BigRational,
    pub power_of_3: bool,
}

pub fn chi_lambda_and_gamma_lower(ctx: &VolumeContext, h3: u64) -> ChiResult {
    let mu_lambda = mu_principal(ctx);
    ChiResult {
        mu_base: ctx.mu.clone(),
        chi_lambda: &mu_lambda * BigInt::from(3),
        index_upper: index_upper_bound(ctx, h3),
        chi_gamma_lower: &ctx.mu * ctx.prod_e2() / BigInt::from(h3),
        power_of_3: numerator_is_power_of_3(&mu_lambda),
        mu_lambda,
    }
}

/// The radicands `a` of the imaginary quadratic fields over the rationals.
pub const KQ_VALUES: [u64; 11] = [1, 2, 3, 5, 6, 7, 11, 15, 19, 23, 31];

/// `chi(Lambda) = -L(-2) / 16 = 3 mu` for the lattice with all parahorics maximal
/// and `k` the rationals, `ell = Q(sqrt(-a))`.
pub fn chi_picard(ds: &Dataset, a: u64, cfg: &LConfig, qmax: Qmax) -> Result<BigRational> {
    if !KQ_VALUES.contains(&a) {
        return Err(Error::Domain(format!("a = {a} is not one of {:?}", KQ_VALUES)));
    }
    let pair = ds.pair(&format!("a={a}"))?;
    let l = rel_l_minus2_exact(pair, cfg, qmax, false)?.value;
    Ok(-l / BigInt::from(16))
}

/// Residue cardinality as `u64` (panics only for absurdly large places).
pub fn q_of(place: &PlaceOfK) -> u64 {
    place.q.to_u64().expect("place norm fits in u64")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::rat;

    #[test]
    fn table_values() {
        let a = |k, q: u64| euler_factor(&ParahoricChoice::new(k, q));
        assert_eq!(a(ParahoricKind::Anisotropic, 2), (BigInt::from(3), rat(1, 1)));
        assert_eq!(a(ParahoricKind::Anisotropic, 5).0, BigInt::from(96));
        assert_eq!(a(ParahoricKind::Hyperspecial, 7).0, BigInt::from(1));
        assert_eq!(a(ParahoricKind::SplitIwahori, 2), (BigInt::from(21), rat(7, 1)));
        for k in ParahoricKind::ALL {
            for q in [2u64, 3, 4, 5, 7, 8, 9] {
                let (e1, e2) = a(k, q);
                let factor = if ParahoricChoice::new(k, q).xi() == 3 || k == ParahoricKind::Anisotropic { 3 } else { 1 };
                assert_eq!(e2.clone() * BigInt::from(factor), BigRational::from_integer(e1));
                assert!(e2 >= BigRational::one());
            }
        }
    }

    #[test]
    fn mu_examples() {
        assert_eq!(mu_from_values(1, &rat(-1, 12), &rat(-1, 2)), rat(1, 96));
        assert_eq!(mu_from_values(2, &rat(1, 30), &rat(4, 5)), rat(1, 600));
        assert_eq!(mu_from_values(4, &rat(8, 3), &rat(96, 1)), rat(1, 1));
    }
}
